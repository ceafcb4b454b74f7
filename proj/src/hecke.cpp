#include "hsw/hecke.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hsw {

namespace {

const LaurentPoly& v_minus_vinv() {
  static const LaurentPoly q = LaurentPoly::v(1) - LaurentPoly::v(-1);
  return q;
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

}  // namespace

HeckeElt HeckeElt::basis(const AffineElt& x, LaurentPoly coeff) {
  HeckeElt e;
  e.add(x, coeff);
  return e;
}

void HeckeElt::add(const AffineElt& x, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly HeckeElt::coeff(const AffineElt& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& other) {
  for (const auto& [x, c] : other.terms_) add(x, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& other) {
  for (const auto& [x, c] : other.terms_) add(x, -c);
  return *this;
}

HeckeElt& HeckeElt::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, c] : terms_) c *= scalar;
  return *this;
}

// ---------------------------------------------------------------------------

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const AffineWeylGroup> group) : group_(std::move(group)) {}

HeckeElt HeckeAlgebra::C(int k) const {
  HeckeElt c = T(group_->simple(k).elt);
  c.add(group_->identity(), LaurentPoly::v(-1));
  return c;
}

HeckeElt HeckeAlgebra::mul_simple(const HeckeElt& a, int k) const {
  HeckeElt out;
  const auto& g = *group_;
  for (const auto& [y, c] : a.terms()) {
    const AffineElt ys = g.times_simple(y, k);
    out.add(ys, c);
    if (g.length(ys) < g.length(y)) out.add(y, c * v_minus_vinv());
  }
  return out;
}

HeckeElt HeckeAlgebra::mul_length_zero(const HeckeElt& a, const AffineElt& omega) const {
  if (omega == group_->identity()) return a;
  HeckeElt out;
  for (const auto& [y, c] : a.terms()) out.add(group_->mul(y, omega), c);
  return out;
}

HeckeElt HeckeAlgebra::mul_basis(const HeckeElt& a, const AffineElt& x) const {
  const ReducedWord rw = group_->reduced_word(x);
  HeckeElt out = mul_length_zero(a, rw.omega);
  for (int k : rw.word) out = mul_simple(out, k);
  return out;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt out;
  for (const auto& [x, c] : b.terms()) {
    HeckeElt part = mul_basis(a, x);
    part *= c;
    out += part;
  }
  return out;
}

HeckeElt HeckeAlgebra::inv_T(const AffineElt& x) const {
  const ReducedWord rw = group_->reduced_word(x);
  HeckeElt out = one();
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) {
    HeckeElt next = mul_simple(out, *it);
    out *= v_minus_vinv();
    next -= out;
    out = std::move(next);
  }
  return mul_length_zero(out, group_->inverse(rw.omega));
}

Weight HeckeAlgebra::dominant_shift(const Weight& lambda) const {
  const auto& d = group_->datum();
  Weight nu = d.zero();
  for (int i = 0; i < d.semisimple_rank(); ++i) {
    const long p = lambda.dot(d.simple_coroot(i));
    if (p < 0) nu += static_cast<int>(-p) * d.fundamental_weights()[static_cast<std::size_t>(i)];
  }
  return nu;
}

HeckeElt HeckeAlgebra::theta_via(const Weight& lambda, const Weight& nu) const {
  const auto& d = group_->datum();
  const Weight mu = lambda + nu;
  if (!d.is_dominant(nu) || !d.is_dominant(mu))
    throw InputError("theta decomposition requires dominant weights");
  return mul(T(group_->translation(mu)), inv_T(group_->translation(nu)));
}

HeckeElt HeckeAlgebra::theta(const Weight& lambda) const {
  {
    std::lock_guard lock(theta_mutex_);
    if (auto it = theta_cache_.find(lambda); it != theta_cache_.end()) return it->second;
  }
  HeckeElt t = theta_via(lambda, dominant_shift(lambda));
  std::lock_guard lock(theta_mutex_);
  theta_cache_.emplace(lambda, t);
  return t;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& a) const {
  HeckeElt out;
  for (const auto& [x, c] : a.terms()) {
    HeckeElt part = inv_T(group_->inverse(x));
    part *= c.bar();
    out += part;
  }
  return out;
}

std::vector<std::pair<AffineElt, LaurentPoly>> HeckeAlgebra::sorted_terms(const HeckeElt& a) const {
  std::vector<std::pair<AffineElt, LaurentPoly>> out(a.terms().begin(), a.terms().end());
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    const int lx = group_->length(x.first), ly = group_->length(y.first);
    if (lx != ly) return lx < ly;
    return x.first < y.first;
  });
  return out;
}

std::string HeckeAlgebra::to_string(const HeckeElt& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : sorted_terms(a)) {
    if (!first) os << " + ";
    first = false;
    const std::string t = "T[" + describe(*group_, x) + ']';
    if (c == LaurentPoly(1)) {
      os << t;
    } else if (c.num_terms() == 1 && c.coeff(c.low()) == 1) {
      os << c.to_string() << '*' << t;
    } else {
      os << '(' << c.to_string() << ")*" << t;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

bool CheckReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; }));
}

void CheckReport::append(const CheckReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

std::vector<Weight> weight_box(int rank, int box) {
  std::vector<Weight> out;
  Weight cur(rank);
  for (int i = 0; i < rank; ++i) cur[i] = -box;
  while (true) {
    out.push_back(cur);
    int i = 0;
    while (i < rank && cur[i] == box) cur[i++] = -box;
    if (i == rank) break;
    ++cur[i];
  }
  return out;
}

CheckReport verify_bernstein(const HeckeAlgebra& h, int box) {
  const auto& g = h.group();
  const auto& d = g.datum();
  const auto& W = g.weyl();
  CheckReport report;

  for (int v = 0; v < W.size(); ++v) {
    for (int w = 0; w < W.size(); ++w) {
      const int vw = W.mul(v, w);
      if (W.length(vw) != W.length(v) + W.length(w)) continue;
      const bool ok = h.mul(h.T(g.finite(v)), h.T(g.finite(w))) == h.T(g.finite(vw));
      report.results.push_back({"(1) T_v T_w = T_vw", "v=" + std::to_string(v) + " w=" + std::to_string(w), ok});
    }
  }

  const auto weights = weight_box(d.rank(), box);
  for (const auto& lambda : weights) {
    const HeckeElt alt = h.theta_via(lambda, h.dominant_shift(lambda) + d.two_rho());
    report.results.push_back({"theta independent of decomposition", "lambda=" + weight_str(lambda), alt == h.theta(lambda)});
  }
  for (const auto& lambda : weights) {
    for (const auto& mu : weights) {
      const bool ok = h.mul(h.theta(lambda), h.theta(mu)) == h.theta(lambda + mu);
      report.results.push_back(
          {"(2) theta_l theta_m = theta_{l+m}", "lambda=" + weight_str(lambda) + " mu=" + weight_str(mu), ok});
    }
  }
  for (const auto& lambda : weights) {
    for (int i = 0; i < d.semisimple_rank(); ++i) {
      const long p = lambda.dot(d.simple_coroot(i));
      const HeckeElt ts = h.T(g.simple(i).elt);
      const std::string inst = "lambda=" + weight_str(lambda) + " alpha=" + std::to_string(i + 1);
      if (p == 0) {
        const bool ok = h.mul(ts, h.theta(lambda)) == h.mul(h.theta(lambda), ts);
        report.results.push_back({"(3) T_s theta_l = theta_l T_s", inst, ok});
      } else if (p == 1) {
        const bool ok = h.theta(lambda) == h.mul(h.mul(ts, h.theta(lambda - d.simple_root(i))), ts);
        report.results.push_back({"(4) theta_l = T_s theta_{l-a} T_s", inst, ok});
      }
    }
  }
  return report;
}

CheckReport verify_quadratic_affine(const HeckeAlgebra& h) {
  const auto& g = h.group();
  const auto& d = g.datum();
  CheckReport report;

  // Candidate conjugators y = omega * (word of length <= 4).
  std::set<AffineElt> omegas{g.identity()};
  for (const auto& lambda : weight_box(d.rank(), 1)) omegas.insert(g.omega_part(g.translation(lambda)));
  std::vector<AffineElt> frontier(omegas.begin(), omegas.end());
  std::set<AffineElt> candidates(omegas.begin(), omegas.end());
  for (int depth = 0; depth < 4; ++depth) {
    std::vector<AffineElt> next;
    for (const auto& y : frontier)
      for (int k = 0; k < g.num_simples(); ++k) {
        const AffineElt z = g.times_simple(y, k);
        if (candidates.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }

  for (int k = 0; k < g.num_simples(); ++k) {
    if (g.simple(k).kind != SimpleReflection::Kind::affine) continue;
    const AffineElt& s0 = g.simple(k).elt;
    const std::string label = g.simple_label(k);
    HeckeElt left = h.T(s0);
    left.add(g.identity(), LaurentPoly::v(-1));
    HeckeElt right = h.T(s0);
    right.add(g.identity(), -LaurentPoly::v(1));
    report.results.push_back({"(T_s0 + v^-1)(T_s0 - v) = 0", label, h.mul(left, right).is_zero()});
    report.results.push_back({"l(s0) = 1 and s0^2 = e", label,
                              g.length(s0) == 1 && g.mul(s0, s0) == g.identity()});

    bool found = false;
    for (const auto& y : candidates) {
      for (int i = 0; i < d.semisimple_rank() && !found; ++i) {
        const AffineElt& t = g.simple(i).elt;
        const AffineElt s0y = g.mul(s0, y);
        if (!(s0y == g.mul(y, t)) || g.length(s0y) != g.length(y) + 1) continue;
        found = true;
        const HeckeElt conj = h.mul(h.mul(h.T(y), h.T(t)), h.inv_T(y));
        report.results.push_back({"T_s0 = T_y T_t T_y^-1", label + " ~ " + g.simple_label(i) + " via " + describe(g, y),
                                  conj == h.T(s0)});
      }
      if (found) break;
    }
    if (!found) report.results.push_back({"T_s0 = T_y T_t T_y^-1", label + ": no conjugator found", false});
  }
  return report;
}

}  // namespace hsw
