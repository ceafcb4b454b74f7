#include "hsw/json_io.hpp"
#include "hsw/parallel.hpp"
#include "hsw/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace hsw;

namespace {

py::int_ to_py(const Int& n) {
  const std::string s = n.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::dict to_py(const LaurentPoly& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[py::int_(e)] = to_py(c);
  return out;
}

py::tuple to_py(const Weight& w) {
  py::tuple out(static_cast<std::size_t>(w.rank()));
  for (int i = 0; i < w.rank(); ++i) out[static_cast<std::size_t>(i)] = py::int_(w[i]);
  return out;
}

py::dict to_py(const std::map<Weight, LaurentPoly>& d) {
  py::dict out;
  for (const auto& [lambda, c] : d) out[to_py(lambda)] = to_py(c);
  return out;
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

// One datum with its affine Weyl group, Hecke algebra, spherical module and
// q-analogue engine. Weights are integer sequences in fundamental-weight
// coordinates; words are "s1,s0"-style strings.
class Engine {
 public:
  explicit Engine(const std::string& datum)
      : group_(std::make_shared<AffineWeylGroup>(load_datum(datum))),
        hecke_(std::make_shared<HeckeAlgebra>(group_)),
        sph_(std::make_shared<SphericalModule>(hecke_)),
        q_(std::make_shared<QAnalogue>(group_)) {}

  std::string name() const { return group_->datum().name(); }
  int rank() const { return group_->rank(); }

  int length(const std::string& w, const std::vector<long>& lambda) const { return group_->length(element(w, lambda)); }

  py::dict reduced_word(const std::string& w, const std::vector<long>& lambda) const {
    const ReducedWord rw = group_->reduced_word(element(w, lambda));
    py::dict out;
    out["omega"] = describe(*group_, rw.omega);
    out["word"] = group_->word_label(rw.word);
    return out;
  }

  py::object theta(const std::vector<long>& lambda) const { return json_to_py(to_json(*hecke_, hecke_->theta(weight(lambda)))); }

  py::dict bs_char(const std::vector<long>& omega, const std::string& word) const {
    return sph_dict(sph_->bs_char(sph_->omega_from_weight(weight(omega)), group_->parse_word(word)));
  }

  py::dict canonical_basis(const std::vector<long>& lambda) const {
    return sph_dict(sph_->canonical_basis(weight(lambda)).expansion);
  }

  py::dict decompose_bs(const std::vector<long>& omega, const std::string& word) const {
    return to_py(sph_->decompose_bs(sph_->omega_from_weight(weight(omega)), group_->parse_word(word)));
  }

  py::dict hom_rank(const std::vector<long>& omega, const std::string& word, const std::vector<long>& omega2,
                    const std::string& word2) const {
    return to_py(sph_->hom_rank(sph_->omega_from_weight(weight(omega)), group_->parse_word(word),
                                sph_->omega_from_weight(weight(omega2)), group_->parse_word(word2)));
  }

  py::dict oracle_hom_rank(const std::vector<long>& omega, const std::string& word, const std::vector<long>& omega2,
                           const std::string& word2, int cutoff) const {
    const SoergelOracle oracle(group_);
    const auto r = oracle_vs_hecke(oracle, *sph_,
                                   {sph_->omega_from_weight(weight(omega)), group_->parse_word(word)},
                                   {sph_->omega_from_weight(weight(omega2)), group_->parse_word(word2)}, cutoff);
    py::dict out;
    out["oracle"] = to_py(r.oracle);
    out["predicted"] = to_py(r.predicted);
    out["pass"] = r.pass;
    return out;
  }

  py::dict kostant_q(const std::vector<long>& lambda) const { return to_py(q_->kostant_q(weight(lambda))); }
  py::dict lusztig_q(const std::vector<long>& chi, const std::vector<long>& eta) const {
    return to_py(q_->lusztig_q(weight(chi), weight(eta)));
  }
  py::int_ freudenthal_mult(const std::vector<long>& eta, const std::vector<long>& chi) const {
    return to_py(q_->freudenthal_mult(weight(eta), weight(chi)));
  }

  py::dict kato_check(const std::vector<long>& lambda, const std::vector<long>& mu) const {
    const KatoResult r = hsw::kato_check(*sph_, *q_, weight(lambda), weight(mu));
    py::dict out;
    out["lhs"] = to_py(r.lhs);
    out["rhs"] = to_py(r.rhs);
    out["pass"] = r.pass;
    return out;
  }

  py::object verify(int max_length, int box, int cutoff) const {
    VerifyOptions options;
    options.max_length = max_length;
    options.bernstein_box = box;
    options.qanalogue_box = box;
    options.cutoff = cutoff;
    options.threads = default_threads();
    CheckReport report;
    {
      py::gil_scoped_release release;
      report = verify_all(hecke_, options);
    }
    return json_to_py(to_json(report));
  }

 private:
  Weight weight(const std::vector<long>& v) const {
    if (static_cast<int>(v.size()) != group_->rank())
      throw InputError("weight has " + std::to_string(v.size()) + " coordinates, expected " +
                       std::to_string(group_->rank()));
    return Weight::from_vector(v);
  }
  AffineElt element(const std::string& w, const std::vector<long>& lambda) const {
    return {group_->weyl_from_word(group_->parse_word(w)), weight(lambda)};
  }
  py::dict sph_dict(const SphElt& m) const {
    py::dict out;
    for (const auto& [lambda, c] : sph_->sorted_terms(m)) out[to_py(lambda)] = to_py(c);
    return out;
  }

  std::shared_ptr<const AffineWeylGroup> group_;
  std::shared_ptr<const HeckeAlgebra> hecke_;
  std::shared_ptr<const SphericalModule> sph_;
  std::shared_ptr<const QAnalogue> q_;
};

}  // namespace

PYBIND11_MODULE(_hsw, m) {
  m.doc() = "Exact affine Hecke algebra and spherical module engine";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<StabilizationError>(m, "StabilizationError", PyExc_RuntimeError);

  py::class_<Engine>(m, "Engine")
      .def(py::init<const std::string&>(), py::arg("datum") = "A1")
      .def_property_readonly("name", &Engine::name)
      .def_property_readonly("rank", &Engine::rank)
      .def("length", &Engine::length, py::arg("w"), py::arg("lam"))
      .def("reduced_word", &Engine::reduced_word, py::arg("w"), py::arg("lam"))
      .def("theta", &Engine::theta, py::arg("lam"))
      .def("bs_char", &Engine::bs_char, py::arg("omega"), py::arg("word"))
      .def("canonical_basis", &Engine::canonical_basis, py::arg("lam"))
      .def("decompose_bs", &Engine::decompose_bs, py::arg("omega"), py::arg("word"))
      .def("hom_rank", &Engine::hom_rank, py::arg("omega"), py::arg("word"), py::arg("omega2"), py::arg("word2"))
      .def("oracle_hom_rank", &Engine::oracle_hom_rank, py::arg("omega"), py::arg("word"), py::arg("omega2"),
           py::arg("word2"), py::arg("cutoff") = 16)
      .def("kostant_q", &Engine::kostant_q, py::arg("lam"))
      .def("lusztig_q", &Engine::lusztig_q, py::arg("chi"), py::arg("eta"))
      .def("freudenthal_mult", &Engine::freudenthal_mult, py::arg("eta"), py::arg("chi"))
      .def("kato_check", &Engine::kato_check, py::arg("lam"), py::arg("mu"))
      .def("verify", &Engine::verify, py::arg("max_length") = 4, py::arg("box") = 1, py::arg("cutoff") = 16);
}
