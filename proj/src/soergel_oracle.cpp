#include "hsw/soergel_oracle.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace hsw {

BiPoly::BiPoly(long long c) : BiPoly(Rational(c)) {}

BiPoly::BiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(std::make_pair(0, 0), c);
}

BiPoly BiPoly::term(const Rational& c, int u_exp, int hbar_exp) {
  BiPoly p;
  p.add_term({u_exp, hbar_exp}, c);
  return p;
}

void BiPoly::add_term(const std::pair<int, int>& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational BiPoly::coeff(int u_exp, int hbar_exp) const {
  auto it = terms_.find({u_exp, hbar_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool BiPoly::has_hbar() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.second > 0; });
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BiPoly BiPoly::at_hbar_zero() const {
  BiPoly out;
  for (const auto& [e, c] : terms_)
    if (e.second == 0) out.terms_.emplace(e, c);
  return out;
}

BiPoly BiPoly::divide_by_hbar() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.second == 0) throw std::logic_error("polynomial is not divisible by hbar");
    out.terms_.emplace(std::make_pair(e.first, e.second - 1), c);
  }
  return out;
}

bool BiPoly::homogeneous_of(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return 2 * (t.first.first + t.first.second) == degree; });
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rational mag = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const bool bare = e.first == 0 && e.second == 0;
    if (mag != 1 || bare) os << mag << (bare ? "" : "*");
    if (e.first > 0) os << 'u' << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.first > 0 && e.second > 0) os << '*';
    if (e.second > 0) os << 'h' << (e.second > 1 ? "^" + std::to_string(e.second) : "");
  }
  return os.str();
}

// ---------------------------------------------------------------------------

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.cols_ != y.rows_) throw std::logic_error("matrix shape mismatch");
  PolyMatrix out(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k) {
      if (x(i, k).is_zero()) continue;
      for (int j = 0; j < y.cols_; ++j)
        if (!y(k, j).is_zero()) out(i, j) += x(i, k) * y(k, j);
    }
  return out;
}

PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
  PolyMatrix out = x;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += y.a_[i];
  return out;
}

PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
  PolyMatrix out = x;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= y.a_[i];
  return out;
}

PolyMatrix PolyMatrix::scaled(const BiPoly& p) const {
  PolyMatrix out = *this;
  for (auto& e : out.a_) e = e * p;
  return out;
}

PolyMatrix PolyMatrix::at_hbar_zero() const {
  PolyMatrix out = *this;
  for (auto& e : out.a_) e = e.at_hbar_zero();
  return out;
}

PolyMatrix PolyMatrix::divide_by_hbar() const {
  PolyMatrix out = *this;
  for (auto& e : out.a_) e = e.divide_by_hbar();
  return out;
}

PolyMatrix evaluate_at(const BiPoly& p, const PolyMatrix& L) {
  const int n = L.rows();
  PolyMatrix out(n, n);
  int max_u = 0;
  for (const auto& [e, c] : p.terms()) max_u = std::max(max_u, e.first);
  std::vector<PolyMatrix> powers{PolyMatrix::identity(n)};
  for (int k = 1; k <= max_u; ++k) powers.push_back(powers.back() * L);
  for (const auto& [e, c] : p.terms())
    out = out + powers[static_cast<std::size_t>(e.first)].scaled(BiPoly::term(c, 0, e.second));
  return out;
}

// ---------------------------------------------------------------------------

LaurentPoly GradedCModule::graded_rank() const {
  LaurentPoly p;
  for (int d : degrees) p += LaurentPoly::v(d);
  return p;
}

GradedCModule GradedCModule::from_left_action(std::vector<int> degrees, PolyMatrix left) {
  const int n = static_cast<int>(degrees.size());
  if (left.rows() != n || left.cols() != n) throw std::logic_error("left action has the wrong shape");
  const BiPoly y = BiPoly::term(1, 2);
  PolyMatrix theta = (left * left - PolyMatrix::identity(n).scaled(y)).divide_by_hbar().at_hbar_zero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int deg = degrees[static_cast<std::size_t>(j)] + 2 - degrees[static_cast<std::size_t>(i)];
      if (!left(i, j).homogeneous_of(deg) || !theta(i, j).homogeneous_of(deg))
        throw std::logic_error("module operator is not homogeneous");
    }
  const PolyMatrix left0 = left.at_hbar_zero();
  if (!(theta * left0 == left0 * theta)) throw std::logic_error("theta does not commute with the left action");
  return {std::move(degrees), std::move(left), std::move(theta)};
}

// ---------------------------------------------------------------------------

SoergelOracle::SoergelOracle(std::shared_ptr<const AffineWeylGroup> group) : group_(std::move(group)) {
  const auto& d = group_->datum();
  if (d.rank() != 1 || d.semisimple_rank() != 1)
    throw InputError("the graded-module oracle supports rank-one data of type A1 only");
}

std::pair<int, long> SoergelOracle::act_on_u(const AffineElt& g) const {
  // u = <., alpha^vee>; (w t_l)^-1 (xi, h) = (w^-1 xi - h l, h).
  const int a = group_->weyl().element(g.w).matrix[0];
  return {a, -g.lambda.dot(group_->datum().simple_coroot(0))};
}

GradedCModule SoergelOracle::atom_D(int simple_index) const {
  if (simple_index < 0 || simple_index >= group_->num_simples()) throw InputError("no such simple reflection");
  const auto [a, c] = act_on_u(group_->simple(simple_index).elt);
  if (a != -1) throw std::logic_error("simple reflection does not negate u");
  // s.u = -u + c h, so u' = u - (c/2) h is anti-invariant and u'^2 invariant.
  const BiPoly half = BiPoly::term(Rational(c, 2), 0, 1);
  const BiPoly shifted = BiPoly::u() - half;
  PolyMatrix left(2, 2);
  left(0, 0) = half;
  left(0, 1) = shifted * shifted;
  left(1, 0) = 1;
  left(1, 1) = half;
  return GradedCModule::from_left_action({-1, 1}, std::move(left));
}

GradedCModule SoergelOracle::atom_D_finite(int simple_index) const {
  if (group_->simple(simple_index).kind != SimpleReflection::Kind::finite)
    throw InputError("expected a finite simple reflection");
  return atom_D(simple_index);
}

GradedCModule SoergelOracle::atom_D_affine(int simple_index) const {
  if (group_->simple(simple_index).kind != SimpleReflection::Kind::affine)
    throw InputError("expected an affine simple reflection");
  return atom_D(simple_index);
}

GradedCModule SoergelOracle::atom_E(const AffineElt& w) const {
  const auto [a, c] = act_on_u(group_->inverse(w));
  PolyMatrix left(1, 1);
  left(0, 0) = BiPoly::term(a, 1) + BiPoly::term(Rational(c), 0, 1);
  return GradedCModule::from_left_action({0}, std::move(left));
}

GradedCModule SoergelOracle::bott_samelson(const AffineElt& omega, const std::vector<int>& word) const {
  GradedCModule m = atom_E(omega);
  for (int k : word) m = tensor(m, atom_D(k));
  return m;
}

GradedCModule SoergelOracle::tensor(const GradedCModule& m, const GradedCModule& n) {
  const int p = m.size(), q = n.size();
  std::vector<int> degrees;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) degrees.push_back(m.degrees[static_cast<std::size_t>(i)] + n.degrees[static_cast<std::size_t>(j)]);

  // u (g_i (x) h_j) = sum_k g_k L_ki (x) h_j = sum_k g_k (x) L_ki(L^N) h_j.
  const PolyMatrix n_left0 = n.left.at_hbar_zero();
  PolyMatrix left(p * q, p * q);
  PolyMatrix leibniz(p * q, p * q);
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < p; ++k) {
      const PolyMatrix moved = evaluate_at(m.left(k, i), n.left);
      const PolyMatrix moved_theta = evaluate_at(m.theta(k, i), n_left0);
      for (int j = 0; j < q; ++j)
        for (int jj = 0; jj < q; ++jj) {
          left(k * q + jj, i * q + j) = moved(jj, j);
          leibniz(k * q + jj, i * q + j) = moved_theta(jj, j) + (k == i ? n.theta(jj, j) : BiPoly());
        }
    }
  GradedCModule out = GradedCModule::from_left_action(std::move(degrees), std::move(left));
  if (!(out.theta == leibniz)) throw std::logic_error("tensor product theta violates the Leibniz rule");
  return out;
}

namespace {

long rational_rank(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  long rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

long SoergelOracle::hom_dimension(const GradedCModule& m, const GradedCModule& n, int d) {
  // Unknown x_(i,j): phi(g_i) has component h_j * x u^k with 2k = a_i + d - b_j.
  struct Unknown {
    int i, j, k;
  };
  std::vector<Unknown> unknowns;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < n.size(); ++j) {
      const int gap = m.degrees[static_cast<std::size_t>(i)] + d - n.degrees[static_cast<std::size_t>(j)];
      if (gap >= 0 && gap % 2 == 0) unknowns.push_back({i, j, gap / 2});
    }
  if (unknowns.empty()) return 0;

  // Row (i, j', e): coefficient of h_j' u^e in theta^N phi(g_i) - sum_c phi(g_c) theta^M_ci.
  std::map<std::tuple<int, int, int>, std::vector<Rational>> eqs;
  auto row = [&](int i, int jj, int e) -> std::vector<Rational>& {
    auto [it, inserted] = eqs.try_emplace({i, jj, e});
    if (inserted) it->second.assign(unknowns.size(), Rational(0));
    return it->second;
  };
  for (std::size_t x = 0; x < unknowns.size(); ++x) {
    const auto [i, j, k] = unknowns[x];
    for (int jj = 0; jj < n.size(); ++jj)
      for (const auto& [e, c] : n.theta(jj, j).terms()) row(i, jj, e.first + k)[x] += c;
    for (int ii = 0; ii < m.size(); ++ii)
      for (const auto& [e, c] : m.theta(i, ii).terms()) row(ii, j, e.first + k)[x] -= c;
  }
  std::vector<std::vector<Rational>> rows;
  for (auto& [key, r] : eqs) rows.push_back(std::move(r));
  return static_cast<long>(unknowns.size()) - rational_rank(std::move(rows), unknowns.size());
}

HomResult SoergelOracle::hom_graded_rank(const GradedCModule& m, const GradedCModule& n, int cutoff) {
  if (cutoff % 2 != 0) throw InputError("cutoff must be even");
  if (m.degrees.empty() || n.degrees.empty()) return {LaurentPoly(), {}, cutoff};
  const auto [amin, amax] = std::minmax_element(m.degrees.begin(), m.degrees.end());
  const auto [bmin, bmax] = std::minmax_element(n.degrees.begin(), n.degrees.end());
  const int low = *bmin - *amax;
  const int high = *bmax - *amin;
  if (cutoff < high + 2)
    throw InputError("cutoff " + std::to_string(cutoff) + " is below the stabilization bound " +
                     std::to_string(high + 2));

  HomResult result;
  result.cutoff = cutoff;
  for (int d = low; d <= cutoff; ++d) result.dimensions[d] = hom_dimension(m, n, d);
  auto dim = [&](int d) -> long {
    auto it = result.dimensions.find(d);
    return it == result.dimensions.end() ? 0 : it->second;
  };
  // Hom is free over Q[u], so its Hilbert series is grk / (1 - v^2) and the
  // generator degrees lie in [low, high].
  for (int d = low; d <= cutoff; ++d) {
    const long c = dim(d) - dim(d - 2);
    if (c == 0) continue;
    if (d > high)
      throw StabilizationError("Hom Hilbert series has residue " + std::to_string(c) + " in degree " +
                               std::to_string(d));
    result.graded_rank += LaurentPoly::monomial(c, d);
  }
  return result;
}

OracleComparison oracle_vs_hecke(const SoergelOracle& oracle, const SphericalModule& sph, const DecoratedWord& left,
                                 const DecoratedWord& right, int cutoff) {
  OracleComparison out;
  out.oracle = SoergelOracle::hom_graded_rank(oracle.bott_samelson(left.omega, left.word),
                                              oracle.bott_samelson(right.omega, right.word), cutoff)
                   .graded_rank;
  out.predicted = sph.hom_rank(left.omega, left.word, right.omega, right.word);
  out.pass = out.oracle == out.predicted;
  return out;
}

}  // namespace hsw
