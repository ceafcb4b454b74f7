// hsw: command-line front end for the affine Hecke / spherical module engine.

#include "hsw/json_io.hpp"
#include "hsw/parallel.hpp"
#include "hsw/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using namespace hsw;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct Options {
  std::string datum = "A1";
  std::string output = "text";
  std::string w = "e", w2 = "e";
  std::string lambda, lambda2, mu, chi, eta;
  std::string omega, omega2;
  std::string word = "e", word2 = "e";
  int cutoff = 16;
  std::optional<int> max_length;
  int box = 1;
  int qbox = 1;
  int pairs = 200;
  std::uint64_t seed = 20240601;
};

struct Context {
  std::shared_ptr<const AffineWeylGroup> group;
  std::shared_ptr<const HeckeAlgebra> hecke;
  std::shared_ptr<const SphericalModule> sph;

  explicit Context(const std::string& datum)
      : group(std::make_shared<AffineWeylGroup>(load_datum(datum))),
        hecke(std::make_shared<HeckeAlgebra>(group)),
        sph(std::make_shared<SphericalModule>(hecke)) {}

  Weight weight(const std::string& text) const {
    return text.empty() ? group->datum().zero() : parse_weight(text, group->rank());
  }
  AffineElt element(const std::string& w, const std::string& lambda) const {
    return {group->weyl_from_word(group->parse_word(w)), weight(lambda)};
  }
  AffineElt omega(const std::string& text) const { return sph->omega_from_weight(weight(text)); }
};

bool json_mode(const Options& o) { return o.output == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string str(const Weight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

int print_report(const Options& o, const CheckReport& report, const std::string& title) {
  if (json_mode(o)) {
    emit(to_json(report));
  } else {
    for (const auto& r : report.results)
      if (!r.pass) std::cout << "FAIL  " << r.relation << "  [" << r.instance << "]\n";
    std::cout << title << ": " << report.results.size() - report.failures() << "/" << report.results.size()
              << " passed\n";
  }
  return report.all_pass() ? 0 : kExitVerifyFailed;
}

int cmd_length(const Options& o) {
  Context c(o.datum);
  const AffineElt x = c.element(o.w, o.lambda);
  const int len = c.group->length(x);
  if (json_mode(o)) {
    emit({{"element", to_json(*c.group, x)}, {"length", len}});
  } else {
    std::cout << len << '\n';
  }
  return 0;
}

int cmd_reduced_word(const Options& o) {
  Context c(o.datum);
  const AffineElt x = c.element(o.w, o.lambda);
  const ReducedWord rw = c.group->reduced_word(x);
  if (json_mode(o)) {
    emit({{"element", to_json(*c.group, x)},
          {"length", rw.word.size()},
          {"omega", to_json(*c.group, rw.omega)},
          {"word", word_to_json(*c.group, rw.word)}});
  } else {
    std::cout << "omega: " << describe(*c.group, rw.omega) << '\n' << "word: " << c.group->word_label(rw.word) << '\n';
  }
  return 0;
}

int emit_hecke(const Options& o, const Context& c, const HeckeElt& h) {
  if (json_mode(o)) {
    emit(to_json(*c.hecke, h));
  } else {
    std::cout << c.hecke->to_string(h) << '\n';
  }
  return 0;
}

int emit_sph(const Options& o, const Context& c, const SphElt& m) {
  if (json_mode(o)) {
    emit(to_json(*c.sph, m));
  } else {
    std::cout << c.sph->to_string(m) << '\n';
  }
  return 0;
}

int emit_poly(const Options& o, const LaurentPoly& p, const char* key) {
  if (json_mode(o)) {
    emit({{key, to_json(p)}});
  } else {
    std::cout << p.to_string() << '\n';
  }
  return 0;
}

int cmd_hecke_mul(const Options& o) {
  Context c(o.datum);
  const auto& h = *c.hecke;
  return emit_hecke(o, c, h.mul(h.T(c.element(o.w, o.lambda)), h.T(c.element(o.w2, o.lambda2))));
}

int cmd_theta(const Options& o) {
  Context c(o.datum);
  return emit_hecke(o, c, c.hecke->theta(c.weight(o.lambda)));
}

int cmd_bs_char(const Options& o) {
  Context c(o.datum);
  return emit_sph(o, c, c.sph->bs_char(c.omega(o.omega), c.group->parse_word(o.word)));
}

int cmd_pairing(const Options& o) {
  Context c(o.datum);
  const auto p = c.sph->hom_rank(c.omega(o.omega), c.group->parse_word(o.word), c.omega(o.omega2),
                                 c.group->parse_word(o.word2));
  return emit_poly(o, p, "pairing");
}

int cmd_hom_rank(const Options& o) {
  Context c(o.datum);
  SoergelOracle oracle(c.group);
  const auto m = oracle.bott_samelson(c.omega(o.omega), c.group->parse_word(o.word));
  const auto n = oracle.bott_samelson(c.omega(o.omega2), c.group->parse_word(o.word2));
  const HomResult r = SoergelOracle::hom_graded_rank(m, n, o.cutoff);
  if (json_mode(o)) {
    Json dims = Json::object();
    for (const auto& [d, k] : r.dimensions) dims[std::to_string(d)] = k;
    emit({{"graded_rank", to_json(r.graded_rank)}, {"cutoff", r.cutoff}, {"dimensions", dims}});
  } else {
    std::cout << r.graded_rank.to_string() << '\n';
  }
  return 0;
}

int cmd_canonical_basis(const Options& o) {
  Context c(o.datum);
  return emit_sph(o, c, c.sph->canonical_basis(c.weight(o.lambda)).expansion);
}

int cmd_decompose(const Options& o) {
  Context c(o.datum);
  const auto d = c.sph->decompose_bs(c.omega(o.omega), c.group->parse_word(o.word));
  if (json_mode(o)) {
    emit(decomposition_to_json(d));
  } else {
    for (const auto& [lambda, p] : d) std::cout << "b" << lambda << ": " << p.to_string() << '\n';
  }
  return 0;
}

int cmd_q_analogue(const Options& o) {
  Context c(o.datum);
  QAnalogue q(c.group);
  const Weight chi = c.weight(o.chi), eta = c.weight(o.eta);
  const LaurentPoly m = q.lusztig_q(chi, eta);
  const Int f = q.freudenthal_mult(eta, chi);
  if (json_mode(o)) {
    emit({{"chi", to_json(chi)}, {"eta", to_json(eta)}, {"q_analogue", to_json(m)},
          {"at_one", static_cast<long long>(m.at_one())}, {"freudenthal", static_cast<long long>(f)}});
  } else {
    std::cout << m.to_string('q') << '\n' << "q=1: " << m.at_one() << "  freudenthal: " << f << '\n';
  }
  return 0;
}

int cmd_kato_check(const Options& o) {
  Context c(o.datum);
  QAnalogue q(c.group);
  std::vector<KatoResult> rows;
  if (!o.lambda.empty() || !o.mu.empty()) {
    rows.push_back(kato_check(*c.sph, q, c.weight(o.lambda), c.weight(o.mu)));
  } else {
    rows = kato_grid(*c.sph, q, o.max_length.value_or(4), default_threads());
  }
  bool all = true;
  Json out = Json::array();
  for (const auto& r : rows) {
    all = all && r.pass;
    if (json_mode(o)) {
      out.push_back(to_json(r));
    } else {
      std::cout << (r.pass ? "pass" : "FAIL") << "  lambda=" << r.lambda << " mu=" << r.mu << "  lhs=" << r.lhs
                << "  rhs=" << r.rhs << '\n';
    }
  }
  if (json_mode(o)) emit(out);
  return all ? 0 : kExitVerifyFailed;
}

int cmd_oracle_check(const Options& o) {
  Context c(o.datum);
  SoergelOracle oracle(c.group);
  std::vector<DecoratedWord> words;
  if (o.max_length) {
    std::vector<std::vector<int>> all{{}};
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (static_cast<int>(all[i].size()) == *o.max_length) continue;
      for (int k = 0; k < c.group->num_simples(); ++k) {
        auto w = all[i];
        w.push_back(k);
        all.push_back(std::move(w));
      }
    }
    for (const auto& omega : length_zero_elements(*c.group, 1))
      for (const auto& w : all) words.push_back({omega, w});
  } else {
    words = default_oracle_words(*c.sph);
  }
  bool all_pass = true;
  Json out = Json::array();
  for (const auto& a : words)
    for (const auto& b : words) {
      const auto label = [&](const DecoratedWord& d) {
        return "(" + str(d.omega.lambda) + "," + c.group->word_label(d.word) + ")";
      };
      const OracleComparison r = oracle_vs_hecke(oracle, *c.sph, a, b, o.cutoff);
      all_pass = all_pass && r.pass;
      if (json_mode(o)) {
        out.push_back({{"left_word", label(a)}, {"right_word", label(b)}, {"oracle", to_json(r.oracle)},
                       {"predicted", to_json(r.predicted)}, {"pass", r.pass}, {"cutoff", o.cutoff}});
      } else {
        std::cout << (r.pass ? "pass" : "FAIL") << "  " << label(a) << " " << label(b) << "  oracle=" << r.oracle
                  << "  predicted=" << r.predicted << '\n';
      }
    }
  if (json_mode(o)) emit(out);
  return all_pass ? 0 : kExitVerifyFailed;
}

int cmd_verify(const Options& o) {
  Context c(o.datum);
  VerifyOptions v;
  v.bernstein_box = o.box;
  v.max_length = o.max_length.value_or(4);
  v.qanalogue_box = o.qbox;
  v.module_pairs = o.pairs;
  v.cutoff = o.cutoff;
  v.threads = default_threads();
  v.seed = o.seed;
  return print_report(o, verify_all(c.hecke, v), "verify " + c.group->datum().name());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the affine Hecke algebra and its spherical module"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--datum", o.datum, "Preset (A1, A2, B2, G2, GL3, A1xGL2, ...) or JSON file")
        ->capture_default_str();
    sub->add_option("--output", o.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto element = [&](CLI::App* sub) {
    sub->add_option("--w", o.w, "finite Weyl word, e.g. s1,s2");
    sub->add_option("--lambda", o.lambda, "translation weight, e.g. 1,-1");
  };
  auto decorated = [&](CLI::App* sub, bool two) {
    sub->add_option("--omega", o.omega, "weight lambda with l(w_lambda) = 0; omega = w_lambda");
    sub->add_option("--word", o.word, "word such as s1,s0");
    if (two) {
      sub->add_option("--omega2", o.omega2, "second omega");
      sub->add_option("--word2", o.word2, "second word");
    }
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> verbs;
  auto verb = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    verbs.emplace_back(sub, fn);
    return sub;
  };

  element(verb("length", "length of w t_lambda", cmd_length));
  element(verb("reduced-word", "reduced expression omega s_i1 ... s_ik", cmd_reduced_word));
  {
    auto* sub = verb("hecke-mul", "T_x T_y for x = w t_lambda, y = w2 t_lambda2", cmd_hecke_mul);
    element(sub);
    sub->add_option("--w2", o.w2, "second finite Weyl word");
    sub->add_option("--lambda2", o.lambda2, "second translation weight");
  }
  verb("theta", "Bernstein element theta_lambda in the T-basis", cmd_theta)->add_option("--lambda", o.lambda);
  decorated(verb("bs-char", "Bott-Samelson character m(omega, s)", cmd_bs_char), false);
  decorated(verb("pairing", "<m(omega, s), m(omega2, t)>", cmd_pairing), true);
  {
    auto* sub = verb("hom-rank", "graded rank of Hom(D(omega, s), D(omega2, t)) from the module oracle (A1)",
                     cmd_hom_rank);
    decorated(sub, true);
    sub->add_option("--cutoff", o.cutoff, "even degree cutoff")->capture_default_str();
  }
  verb("canonical-basis", "canonical basis element b_lambda", cmd_canonical_basis)->add_option("--lambda", o.lambda);
  decorated(verb("decompose", "m(omega, s) in the canonical basis", cmd_decompose), false);
  {
    auto* sub = verb("q-analogue", "Lusztig q-analogue M^chi_eta(q) and the Freudenthal multiplicity", cmd_q_analogue);
    sub->add_option("--chi", o.chi, "weight");
    sub->add_option("--eta", o.eta, "dominant highest weight");
  }
  {
    auto* sub = verb("kato-check", "canonical-basis stalks against q-analogues", cmd_kato_check);
    sub->add_option("--lambda", o.lambda, "single dominant lambda");
    sub->add_option("--mu", o.mu, "single dominant mu");
    sub->add_option("--max-length", o.max_length, "grid: dominant weights with l(w_-lambda) <= N (default 4)");
  }
  {
    auto* sub = verb("oracle-check", "module oracle against the Hecke pairing (A1)", cmd_oracle_check);
    sub->add_option("--cutoff", o.cutoff, "even degree cutoff")->capture_default_str();
    sub->add_option("--max-length", o.max_length, "all decorated words up to this length instead of the default set");
  }
  {
    auto* sub = verb("verify", "run the full property suite", cmd_verify);
    sub->add_option("--box", o.box, "coordinate box for Bernstein relations")->capture_default_str();
    sub->add_option("--max-length", o.max_length, "length bound for lengths, canonical basis, Kato (default 4)");
    sub->add_option("--qbox", o.qbox, "dominant box for the q = 1 oracle")->capture_default_str();
    sub->add_option("--pairs", o.pairs, "random pairs for module consistency")->capture_default_str();
    sub->add_option("--cutoff", o.cutoff, "even degree cutoff for the module oracle")->capture_default_str();
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    for (const auto& [sub, fn] : verbs)
      if (sub->parsed()) return fn(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitBadInput;
}
