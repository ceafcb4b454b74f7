#include "hsw/affine_weyl.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hsw {

AffineWeylGroup::AffineWeylGroup(RootDatum datum) : datum_(std::move(datum)), weyl_(datum_) {
  for (int i = 0; i < datum_.semisimple_rank(); ++i)
    simples_.push_back({SimpleReflection::Kind::finite, i, finite(weyl_.simple(i))});
  // The affine wall of component c is <xi, beta^vee> = 1 with beta^vee the
  // highest coroot; its reflection xi -> s_beta(xi) + beta is s_beta t_{-beta}.
  const auto& roots = datum_.positive_roots();
  for (int c = 0; c < static_cast<int>(datum_.components().size()); ++c) {
    const auto& beta = roots[static_cast<std::size_t>(datum_.highest_coroot_root(c))];
    std::vector<int> m(static_cast<std::size_t>(rank() * rank()), 0);
    for (int row = 0; row < rank(); ++row)
      for (int col = 0; col < rank(); ++col)
        m[static_cast<std::size_t>(row * rank() + col)] = (row == col ? 1 : 0) - beta.root[row] * beta.coroot[col];
    const int w = weyl_.find(m);
    if (w < 0) throw std::logic_error("reflection in the highest root is missing from W");
    simples_.push_back({SimpleReflection::Kind::affine, c, {w, -beta.root}});
  }
}

AffineElt AffineWeylGroup::mul(const AffineElt& a, const AffineElt& b) const {
  return {weyl_.mul(a.w, b.w), weyl_.apply(weyl_.inverse(b.w), a.lambda) + b.lambda};
}

AffineElt AffineWeylGroup::inverse(const AffineElt& x) const {
  return {weyl_.inverse(x.w), -weyl_.apply(x.w, x.lambda)};
}

int AffineWeylGroup::length(const AffineElt& x) const {
  const auto& roots = datum_.positive_roots();
  int total = 0;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const long p = x.lambda.dot(roots[k].coroot);
    total += static_cast<int>(weyl_.inverts(x.w, static_cast<int>(k)) ? std::labs(1 + p) : std::labs(p));
  }
  return total;
}

Weight AffineWeylGroup::act(const AffineElt& x, const Weight& xi) const { return weyl_.apply(x.w, xi + x.lambda); }

ReducedWord AffineWeylGroup::reduced_word(const AffineElt& x) const {
  {
    std::shared_lock lock(word_mutex_);
    if (auto it = word_cache_.find(x); it != word_cache_.end()) return it->second;
  }
  std::vector<int> stripped;
  AffineElt cur = x;
  int len = length(cur);
  while (len > 0) {
    int found = -1;
    for (int k = 0; k < num_simples(); ++k) {
      const AffineElt next = times_simple(cur, k);
      const int next_len = length(next);
      if (next_len < len) {
        found = k;
        cur = next;
        len = next_len;
        break;
      }
    }
    if (found < 0) throw std::logic_error("no descent at positive length: length function is inconsistent");
    stripped.push_back(found);
  }
  ReducedWord result{cur, {stripped.rbegin(), stripped.rend()}};
  std::unique_lock lock(word_mutex_);
  word_cache_.emplace(x, result);
  return result;
}

AffineElt AffineWeylGroup::min_rep(const Weight& lambda) const {
  {
    std::shared_lock lock(rep_mutex_);
    if (auto it = rep_cache_.find(lambda); it != rep_cache_.end()) return it->second;
  }
  int best_len = std::numeric_limits<int>::max();
  int best = -1;
  bool tie = false;
  for (int u = 0; u < weyl_.size(); ++u) {
    const int len = length({u, lambda});
    if (len < best_len) {
      best_len = len;
      best = u;
      tie = false;
    } else if (len == best_len) {
      tie = true;
    }
  }
  if (tie) throw std::logic_error("minimal coset representative is not unique");
  const AffineElt rep{best, lambda};
  std::unique_lock lock(rep_mutex_);
  rep_cache_.emplace(lambda, rep);
  return rep;
}

CosetDecomposition AffineWeylGroup::coset_decompose(const AffineElt& x) const {
  const AffineElt rep = min_rep(x.lambda);
  const int u = weyl_.mul(x.w, weyl_.inverse(rep.w));
  if (length(x) != weyl_.length(u) + length(rep))
    throw std::logic_error("coset decomposition lengths do not add");
  return {u, x.lambda};
}

int AffineWeylGroup::parse_simple(std::string_view token) const {
  const int n = datum_.semisimple_rank();
  const int ncomp = static_cast<int>(datum_.components().size());
  auto bad = [&]() { return InputError("unknown simple reflection '" + std::string(token) + "'"); };
  if (token == "s" && n == 1) return 0;
  if (token.size() < 2 || token[0] != 's') throw bad();
  auto number = [&](std::string_view digits) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) throw bad();
    return value;
  };
  if (token.starts_with("s0")) {
    if (token == "s0") {
      if (ncomp != 1) throw InputError("'s0' is ambiguous: use s0:<component>");
      return n;
    }
    if (token[2] != ':') throw bad();
    const int c = number(token.substr(3));
    if (c < 1 || c > ncomp) throw bad();
    return n + c - 1;
  }
  const int i = number(token.substr(1));
  if (i < 1 || i > n) throw bad();
  return i - 1;
}

std::string AffineWeylGroup::simple_label(int k) const {
  const auto& s = simple(k);
  if (s.kind == SimpleReflection::Kind::finite) return "s" + std::to_string(s.index + 1);
  if (datum_.components().size() == 1) return "s0";
  return "s0:" + std::to_string(s.index + 1);
}

std::vector<int> AffineWeylGroup::parse_word(std::string_view text) const {
  std::vector<int> word;
  if (text.empty() || text == "e") return word;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    auto token = text.substr(start, pos - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    word.push_back(parse_simple(token));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return word;
}

std::string AffineWeylGroup::word_label(const std::vector<int>& word) const {
  std::string out;
  for (int k : word) out += (out.empty() ? "" : ",") + simple_label(k);
  return out.empty() ? "e" : out;
}

int AffineWeylGroup::weyl_from_word(const std::vector<int>& simple_indices) const {
  int w = weyl_.identity();
  for (int i : simple_indices) {
    if (i < 0 || i >= datum_.semisimple_rank()) throw InputError("finite word uses an affine simple reflection");
    w = weyl_.mul(w, weyl_.simple(i));
  }
  return w;
}

std::string describe(const AffineWeylGroup& g, const AffineElt& x) {
  std::ostringstream os;
  std::string w;
  for (int i : g.weyl().word(x.w)) w += (w.empty() ? "" : ",") + std::string("s") + std::to_string(i + 1);
  os << "w=" << (w.empty() ? "e" : w) << " t=" << x.lambda;
  return os.str();
}

}  // namespace hsw
