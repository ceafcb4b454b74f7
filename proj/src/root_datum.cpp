#include "hsw/root_datum.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

namespace hsw {

namespace {

constexpr std::size_t kMaxPositiveRoots = 64;
constexpr std::size_t kMulTableLimit = 4096;

// Fraction-free elimination; the vectors are small integer rows.
bool linearly_independent(const std::vector<Weight>& vs) {
  if (vs.empty()) return true;
  const int cols = vs.front().rank();
  std::vector<std::vector<Int>> a;
  for (const auto& v : vs) {
    std::vector<Int> row;
    for (int k = 0; k < cols; ++k) row.emplace_back(v[k]);
    a.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (int c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      const Int f = a[r][static_cast<std::size_t>(c)], g = a[rank][static_cast<std::size_t>(c)];
      for (int k = 0; k < cols; ++k)
        a[r][static_cast<std::size_t>(k)] = a[r][static_cast<std::size_t>(k)] * g - a[rank][static_cast<std::size_t>(k)] * f;
    }
    ++rank;
  }
  return rank == a.size();
}

std::string describe(const Weight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

}  // namespace

int PositiveRoot::height() const { return std::accumulate(root_coords.begin(), root_coords.end(), 0); }

int PositiveRoot::coroot_height() const {
  return std::accumulate(coroot_coords.begin(), coroot_coords.end(), 0);
}

std::vector<std::vector<int>> cartan_matrix(char type, int n) {
  if (n < 1) throw InputError("Cartan type rank must be positive");
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v; };
  for (int i = 0; i < n; ++i) set(i, i, 2);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      set(i, i + 1, -1);
      set(i + 1, i, -1);
    }
  };
  switch (type) {
    case 'A':
      chain(n);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw InputError("types B and C need rank >= 2");
      chain(n);
      // B_n: alpha_n short, so <alpha_{n-1}, alpha_n^vee> = -2.
      if (type == 'B') set(n - 1, n - 2, -2);
      else set(n - 2, n - 1, -2);
      break;
    case 'D':
      if (n < 4) throw InputError("type D needs rank >= 4");
      chain(n - 1);
      set(n - 3, n - 1, -1);
      set(n - 1, n - 3, -1);
      break;
    case 'G':
      if (n != 2) throw InputError("type G only exists in rank 2");
      set(0, 1, -3);
      set(1, 0, -1);
      break;
    case 'F':
      if (n != 4) throw InputError("type F only exists in rank 4");
      chain(4);
      set(2, 1, -2);
      break;
    default:
      throw InputError(std::string("unknown Cartan type '") + type + "'");
  }
  return a;
}

namespace {

RootDatum simply_connected(const std::string& name, char type, int n) {
  const auto a = cartan_matrix(type, n);
  std::vector<Weight> roots, coroots;
  for (int j = 0; j < n; ++j) {
    Weight root(n), coroot(n);
    for (int i = 0; i < n; ++i) root[i] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    coroot[j] = 1;
    roots.push_back(root);
    coroots.push_back(coroot);
  }
  return RootDatum(name, n, std::move(roots), std::move(coroots));
}

RootDatum general_linear(const std::string& name, int n) {
  std::vector<Weight> roots;
  for (int i = 0; i + 1 < n; ++i) {
    Weight r(n);
    r[i] = 1;
    r[i + 1] = -1;
    roots.push_back(r);
  }
  auto coroots = roots;
  return RootDatum(name, n, std::move(roots), std::move(coroots));
}

RootDatum single_preset(std::string_view token) {
  const std::string name(token);
  auto parse_rank = [&](std::string_view digits) {
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw InputError("unknown root datum preset '" + name + "'");
    return n;
  };
  if (token.starts_with("GL")) return general_linear(name, parse_rank(token.substr(2)));
  if (token.size() < 2) throw InputError("unknown root datum preset '" + name + "'");
  const char type = token[0];
  if (std::string_view("ABCDFG").find(type) == std::string_view::npos)
    throw InputError("unknown root datum preset '" + name + "'");
  return simply_connected(name, type, parse_rank(token.substr(1)));
}

}  // namespace

RootDatum RootDatum::preset(std::string_view name) {
  std::vector<RootDatum> factors;
  std::size_t start = 0;
  while (true) {
    const auto pos = name.find('x', start);
    factors.push_back(single_preset(name.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (factors.size() == 1) return factors.front();
  return product(factors);
}

RootDatum RootDatum::product(const std::vector<RootDatum>& factors) {
  int rank = 0;
  std::string name;
  for (const auto& f : factors) {
    rank += f.rank();
    name += (name.empty() ? "" : "x") + f.name();
  }
  if (rank > kMaxRank) throw InputError("product datum exceeds maximal rank");
  std::vector<Weight> roots, coroots;
  int offset = 0;
  for (const auto& f : factors) {
    for (int i = 0; i < f.semisimple_rank(); ++i) {
      Weight r(rank), c(rank);
      for (int k = 0; k < f.rank(); ++k) {
        r[offset + k] = f.simple_root(i)[k];
        c[offset + k] = f.simple_coroot(i)[k];
      }
      roots.push_back(r);
      coroots.push_back(c);
    }
    offset += f.rank();
  }
  return RootDatum(name, rank, std::move(roots), std::move(coroots));
}

RootDatum::RootDatum(std::string name, int rank, std::vector<Weight> simple_roots,
                     std::vector<Weight> simple_coroots)
    : name_(std::move(name)),
      rank_(rank),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)) {
  if (rank_ < 1 || rank_ > kMaxRank) throw InputError("root datum rank must be in [1, 8]");
  if (simple_roots_.size() != simple_coroots_.size())
    throw InputError("simple roots and coroots must have the same count");
  for (const auto& w : simple_roots_)
    if (w.rank() != rank_) throw InputError("simple root " + describe(w) + " has wrong rank");
  for (const auto& w : simple_coroots_)
    if (w.rank() != rank_) throw InputError("simple coroot " + describe(w) + " has wrong rank");
  if (!linearly_independent(simple_roots_)) throw InputError("simple roots must be linearly independent");
  if (!linearly_independent(simple_coroots_)) throw InputError("simple coroots must be linearly independent");
  const int n = semisimple_rank();
  for (int i = 0; i < n; ++i) {
    if (cartan(i, i) != 2) throw InputError("<alpha_i, alpha_i^vee> must equal 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan(i, j) > 0) throw InputError("off-diagonal Cartan entries must be <= 0");
      if ((cartan(i, j) == 0) != (cartan(j, i) == 0))
        throw InputError("Cartan matrix zero pattern must be symmetric");
    }
  }
  compute_positive_roots();
  compute_components();
  compute_fundamental_weights();
  two_rho_ = zero();
  for (const auto& r : positive_roots_) two_rho_ += r.root;
}

void RootDatum::compute_positive_roots() {
  const int n = semisimple_rank();
  std::deque<std::size_t> queue;
  for (int i = 0; i < n; ++i) {
    PositiveRoot r;
    r.root = simple_roots_[static_cast<std::size_t>(i)];
    r.coroot = simple_coroots_[static_cast<std::size_t>(i)];
    r.root_coords.assign(static_cast<std::size_t>(n), 0);
    r.root_coords[static_cast<std::size_t>(i)] = 1;
    r.coroot_coords = r.root_coords;
    if (root_lookup_.contains(r.root)) throw InputError("simple roots must be distinct");
    root_lookup_.emplace(r.root, static_cast<int>(positive_roots_.size()));
    positive_roots_.push_back(std::move(r));
    queue.push_back(positive_roots_.size() - 1);
  }
  while (!queue.empty()) {
    const PositiveRoot beta = positive_roots_[queue.front()];
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      const long p = beta.root.dot(simple_coroot(j));
      if (p == 0) continue;
      PositiveRoot gamma = beta;
      gamma.root -= static_cast<int>(p) * simple_root(j);
      gamma.root_coords[static_cast<std::size_t>(j)] -= static_cast<int>(p);
      if (gamma.root_coords[static_cast<std::size_t>(j)] < 0) continue;
      const long q = simple_root(j).dot(beta.coroot);
      gamma.coroot -= static_cast<int>(q) * simple_coroot(j);
      gamma.coroot_coords[static_cast<std::size_t>(j)] -= static_cast<int>(q);
      if (root_lookup_.contains(gamma.root)) continue;
      if (positive_roots_.size() >= kMaxPositiveRoots)
        throw InputError("positive root closure exceeds bound: datum is not of finite type");
      root_lookup_.emplace(gamma.root, static_cast<int>(positive_roots_.size()));
      positive_roots_.push_back(std::move(gamma));
      queue.push_back(positive_roots_.size() - 1);
    }
  }
  for (const auto& r : positive_roots_)
    if (r.root.dot(r.coroot) != 2) throw InputError("root/coroot pairing differs from 2");
}

int RootDatum::root_index(const Weight& w) const {
  if (auto it = root_lookup_.find(w); it != root_lookup_.end()) return it->second + 1;
  if (auto it = root_lookup_.find(-w); it != root_lookup_.end()) return -(it->second + 1);
  return 0;
}

void RootDatum::compute_components() {
  const int n = semisimple_rank();
  component_of_simple_.assign(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (component_of_simple_[static_cast<std::size_t>(start)] >= 0) continue;
    const int c = static_cast<int>(components_.size());
    components_.emplace_back();
    std::vector<int> stack{start};
    component_of_simple_[static_cast<std::size_t>(start)] = c;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      components_.back().push_back(i);
      for (int j = 0; j < n; ++j) {
        if (j != i && cartan(i, j) != 0 && component_of_simple_[static_cast<std::size_t>(j)] < 0) {
          component_of_simple_[static_cast<std::size_t>(j)] = c;
          stack.push_back(j);
        }
      }
    }
    std::sort(components_.back().begin(), components_.back().end());
  }
  highest_coroot_.assign(components_.size(), -1);
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    auto& r = positive_roots_[k];
    const auto first = std::find_if(r.root_coords.begin(), r.root_coords.end(), [](int c) { return c != 0; });
    r.component = component_of_simple_[static_cast<std::size_t>(first - r.root_coords.begin())];
    int& best = highest_coroot_[static_cast<std::size_t>(r.component)];
    if (best < 0 || r.coroot_height() > positive_roots_[static_cast<std::size_t>(best)].coroot_height())
      best = static_cast<int>(k);
  }
}

void RootDatum::compute_fundamental_weights() {
  // Column-reduce the coroot matrix A (rows = simple coroots) to a lower
  // triangular form A U with unimodular U. Torsion-freeness of
  // X^vee / Z Phi^vee is equivalent to all pivots being +-1.
  const int n = semisimple_rank();
  const int r = rank_;
  std::vector<std::vector<long>> a(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(r)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = simple_coroot(i)[j];
  std::vector<std::vector<long>> u(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r), 0));
  for (int j = 0; j < r; ++j) u[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
  auto at = [](auto& m, int i, int j) -> long& { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  // col_j -= k * col_p on both A and U.
  auto axpy = [&](int j, int p, long k) {
    for (int i = 0; i < n; ++i) at(a, i, j) -= k * at(a, i, p);
    for (int i = 0; i < r; ++i) at(u, i, j) -= k * at(u, i, p);
  };
  auto swap_cols = [&](int j, int p) {
    for (int i = 0; i < n; ++i) std::swap(at(a, i, j), at(a, i, p));
    for (int i = 0; i < r; ++i) std::swap(at(u, i, j), at(u, i, p));
  };
  for (int k = 0; k < n; ++k) {
    while (true) {
      int pivot = -1;
      for (int j = k; j < r; ++j)
        if (at(a, k, j) != 0 && (pivot < 0 || std::abs(at(a, k, j)) < std::abs(at(a, k, pivot)))) pivot = j;
      if (pivot < 0) throw InputError("simple coroots are linearly dependent");
      swap_cols(k, pivot);
      bool done = true;
      for (int j = k + 1; j < r; ++j) {
        if (at(a, k, j) == 0) continue;
        axpy(j, k, at(a, k, j) / at(a, k, k));
        if (at(a, k, j) != 0) done = false;
      }
      if (done) break;
    }
    if (std::abs(at(a, k, k)) != 1)
      throw InputError("X^vee / Z Phi^vee has torsion: no fundamental weights in X");
  }
  for (int i = 0; i < n; ++i) {
    // Solve (A U) y = e_i by forward substitution; y_j = 0 for j >= n.
    std::vector<long> y(static_cast<std::size_t>(r), 0);
    for (int k = 0; k < n; ++k) {
      long rhs = (k == i) ? 1 : 0;
      for (int j = 0; j < k; ++j) rhs -= at(a, k, j) * y[static_cast<std::size_t>(j)];
      y[static_cast<std::size_t>(k)] = rhs * at(a, k, k);  // pivot is +-1
    }
    Weight w(r);
    for (int row = 0; row < r; ++row) {
      long s = 0;
      for (int j = 0; j < r; ++j) s += at(u, row, j) * y[static_cast<std::size_t>(j)];
      w[row] = static_cast<int>(s);
    }
    fundamental_weights_.push_back(w);
  }
}

bool RootDatum::is_dominant(const Weight& lambda) const {
  return std::all_of(simple_coroots_.begin(), simple_coroots_.end(),
                     [&](const Weight& c) { return lambda.dot(c) >= 0; });
}

Weight RootDatum::reflect(int i, const Weight& lambda) const {
  return lambda - static_cast<int>(lambda.dot(simple_coroot(i))) * simple_root(i);
}

std::optional<std::vector<long>> RootDatum::root_coordinates(const Weight& beta) const {
  // Pair with the coroots: <beta, alpha_j^vee> = sum_i c_i a_{ji}; solve by
  // exact rational elimination on the Cartan matrix, then verify.
  const int n = semisimple_rank();
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n + 1)));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = cartan(j, i);
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] = beta.dot(simple_coroot(j));
  }
  // Fraction-free Gauss-Jordan.
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
    if (piv == n) throw InputError("Cartan matrix is singular");
    std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(piv)]);
    const auto& prow = m[static_cast<std::size_t>(col)];
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      auto& cur = m[static_cast<std::size_t>(row)];
      const Int f = cur[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      const Int p = prow[static_cast<std::size_t>(col)];
      for (int k = 0; k <= n; ++k) cur[static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(k)] * p - prow[static_cast<std::size_t>(k)] * f;
    }
  }
  std::vector<long> coords(static_cast<std::size_t>(n));
  Weight check = zero();
  for (int i = 0; i < n; ++i) {
    const auto& row = m[static_cast<std::size_t>(i)];
    const Int& num = row[static_cast<std::size_t>(n)];
    const Int& den = row[static_cast<std::size_t>(i)];
    if (num % den != 0) return std::nullopt;
    coords[static_cast<std::size_t>(i)] = static_cast<long>(num / den);
    check += static_cast<int>(coords[static_cast<std::size_t>(i)]) * simple_root(i);
  }
  if (!(check == beta)) return std::nullopt;
  return coords;
}

// ---------------------------------------------------------------------------

std::vector<int> WeylGroup::matmul(const std::vector<int>& a, const std::vector<int>& b) const {
  const int r = rank_;
  std::vector<int> c(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      const int aik = a[static_cast<std::size_t>(i * r + k)];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) c[static_cast<std::size_t>(i * r + j)] += aik * b[static_cast<std::size_t>(k * r + j)];
    }
  return c;
}

Weight WeylGroup::apply_matrix(const std::vector<int>& m, const Weight& lambda) const {
  Weight out(rank_);
  for (int i = 0; i < rank_; ++i) {
    long s = 0;
    for (int j = 0; j < rank_; ++j) s += static_cast<long>(m[static_cast<std::size_t>(i * rank_ + j)]) * lambda[j];
    out[i] = static_cast<int>(s);
  }
  return out;
}

WeylGroup::WeylGroup(const RootDatum& datum) : rank_(datum.rank()), semisimple_rank_(datum.semisimple_rank()) {
  const int r = rank_;
  const int n = semisimple_rank_;
  const auto& roots = datum.positive_roots();
  if (roots.size() > kMaxPositiveRoots) throw InputError("too many positive roots");

  for (int i = 0; i < n; ++i) {
    std::vector<int> m(static_cast<std::size_t>(r * r), 0);
    for (int row = 0; row < r; ++row)
      for (int col = 0; col < r; ++col)
        m[static_cast<std::size_t>(row * r + col)] =
            (row == col ? 1 : 0) - datum.simple_root(i)[row] * datum.simple_coroot(i)[col];
    reflections_.push_back(std::move(m));
  }
  std::vector<int> id(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i) id[static_cast<std::size_t>(i * r + i)] = 1;

  auto add = [&](std::vector<int> m) {
    const int idx = static_cast<int>(elements_.size());
    index_.emplace(m, idx);
    WeylElt e;
    e.matrix = std::move(m);
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const int where = datum.root_index(apply_matrix(e.matrix, roots[k].root));
      if (where == 0) throw InputError("Weyl group element does not permute the roots");
      if (where < 0) mask |= (std::uint64_t{1} << k);
    }
    e.length = std::popcount(mask);
    elements_.push_back(std::move(e));
    inversions_.push_back(mask);
  };
  add(id);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      auto m = matmul(elements_[head].matrix, reflections_[static_cast<std::size_t>(i)]);
      if (!index_.contains(m)) add(std::move(m));
    }
    if (elements_.size() > kMulTableLimit) throw InputError("Weyl group too large to enumerate");
  }
  for (int i = 0; i < n; ++i) simple_.push_back(index_.at(reflections_[static_cast<std::size_t>(i)]));

  const auto size = static_cast<std::size_t>(this->size());
  mul_.resize(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) mul_[a * size + b] = index_.at(matmul(elements_[a].matrix, elements_[b].matrix));
  inverse_.assign(size, -1);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (mul_[a * size + b] == 0) inverse_[a] = static_cast<int>(b);

  longest_ = static_cast<int>(std::max_element(elements_.begin(), elements_.end(),
                                               [](const WeylElt& x, const WeylElt& y) { return x.length < y.length; }) -
                              elements_.begin());
  if (length(longest_) != static_cast<int>(roots.size()))
    throw InputError("longest element does not invert every positive root");
}

Weight WeylGroup::apply(int w, const Weight& lambda) const { return apply_matrix(element(w).matrix, lambda); }

int WeylGroup::find(const std::vector<int>& matrix) const {
  auto it = index_.find(matrix);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> WeylGroup::word(int w) const {
  // Strip right descents: w s_i < w iff w(alpha_i) < 0. The simple roots are
  // the first positive roots.
  std::vector<int> reversed;
  int cur = w;
  while (length(cur) > 0) {
    int i = 0;
    while (!inverts(cur, i)) ++i;
    reversed.push_back(i);
    cur = mul(cur, simple(i));
  }
  return {reversed.rbegin(), reversed.rend()};
}

}  // namespace hsw
