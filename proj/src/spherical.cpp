#include "hsw/spherical.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hsw {

SphElt SphElt::basis(const Weight& lambda, LaurentPoly coeff) {
  SphElt e;
  e.add(lambda, coeff);
  return e;
}

void SphElt::add(const Weight& lambda, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly SphElt::coeff(const Weight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

SphElt& SphElt::operator+=(const SphElt& other) {
  for (const auto& [l, c] : other.terms_) add(l, c);
  return *this;
}

SphElt& SphElt::operator-=(const SphElt& other) {
  for (const auto& [l, c] : other.terms_) add(l, -c);
  return *this;
}

SphElt& SphElt::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, c] : terms_) c *= scalar;
  return *this;
}

// ---------------------------------------------------------------------------

SphericalModule::SphericalModule(std::shared_ptr<const HeckeAlgebra> hecke) : hecke_(std::move(hecke)) {}

SphElt SphericalModule::project_basis(const AffineElt& x) const {
  const CosetDecomposition cd = group().coset_decompose(x);
  return SphElt::basis(cd.lambda, LaurentPoly::v(group().weyl().length(cd.u)));
}

SphElt SphericalModule::project(const HeckeElt& h) const {
  SphElt out;
  for (const auto& [x, c] : h.terms()) {
    SphElt part = project_basis(x);
    part *= c;
    out += part;
  }
  return out;
}

SphElt SphericalModule::act_simple(const SphElt& m, int k) const {
  static const LaurentPoly q = LaurentPoly::v(1) - LaurentPoly::v(-1);
  const auto& g = group();
  SphElt out;
  for (const auto& [lambda, c] : m.terms()) {
    const AffineElt y = g.min_rep(lambda);
    const AffineElt ys = g.times_simple(y, k);
    SphElt part = project_basis(ys);
    if (g.length(ys) < g.length(y)) part.add(lambda, q);
    part *= c;
    out += part;
  }
  return out;
}

SphElt SphericalModule::act_length_zero(const SphElt& m, const AffineElt& omega) const {
  SphElt out;
  for (const auto& [lambda, c] : m.terms()) {
    SphElt part = project_basis(group().mul(group().min_rep(lambda), omega));
    part *= c;
    out += part;
  }
  return out;
}

SphElt SphericalModule::act(const SphElt& m, const HeckeElt& h) const {
  SphElt out;
  for (const auto& [x, c] : h.terms()) {
    const ReducedWord rw = group().reduced_word(x);
    SphElt part = act_length_zero(m, rw.omega);
    for (int k : rw.word) part = act_simple(part, k);
    part *= c;
    out += part;
  }
  return out;
}

AffineElt SphericalModule::omega_from_weight(const Weight& lambda) const {
  const AffineElt omega = group().min_rep(lambda);
  if (group().length(omega) != 0) throw InputError("omega must have length 0");
  return omega;
}

SphElt SphericalModule::bs_char(const AffineElt& omega, const std::vector<int>& word) const {
  if (group().length(omega) != 0) throw InputError("omega must have length 0");
  SphElt m = project_basis(omega);
  for (int k : word) {
    SphElt next = act_simple(m, k);
    m *= LaurentPoly::v(-1);
    next += m;
    m = std::move(next);
  }
  return m;
}

HeckeElt SphericalModule::fl_bs_char(const std::vector<int>& word) const {
  HeckeElt h = hecke().one();
  for (int k : word) {
    HeckeElt next = hecke().mul_simple(h, k);
    h *= LaurentPoly::v(-1);
    next += h;
    h = std::move(next);
  }
  return h;
}

LaurentPoly SphericalModule::pairing(const SphElt& a, const SphElt& b) const {
  LaurentPoly out;
  for (const auto& [lambda, c] : a.terms()) {
    auto it = b.terms().find(lambda);
    if (it != b.terms().end()) out += c.bar() * it->second.bar();
  }
  return out;
}

LaurentPoly SphericalModule::hom_rank(const AffineElt& omega, const std::vector<int>& word, const AffineElt& omega2,
                                      const std::vector<int>& word2) const {
  return pairing(bs_char(omega, word), bs_char(omega2, word2));
}

SphElt SphericalModule::bar(const SphElt& m) const {
  SphElt out;
  for (const auto& [lambda, c] : m.terms()) {
    const AffineElt rep = group().min_rep(lambda);
    SphElt part = project(hecke().inv_T(group().inverse(rep)));
    part *= c.bar();
    out += part;
  }
  return out;
}

template <typename Pred>
const Weight* SphericalModule::top_weight(const SphElt& m, Pred pred) const {
  const Weight* best = nullptr;
  int best_len = -1;
  for (const auto& [mu, c] : m.terms()) {
    if (!pred(mu, c)) continue;
    const int len = weight_length(mu);
    if (len > best_len || (len == best_len && mu < *best)) {
      best = &mu;
      best_len = len;
    }
  }
  return best;
}

CanonicalBasisElt SphericalModule::canonical_basis(const Weight& lambda) const {
  {
    std::shared_lock lock(cb_mutex_);
    if (auto it = cb_cache_.find(lambda); it != cb_cache_.end()) return it->second;
  }
  const auto& g = group();
  const ReducedWord rw = g.reduced_word(g.min_rep(lambda));
  SphElt c = bs_char(rw.omega, rw.word);
  const int top = weight_length(lambda);
  while (true) {
    const Weight* mu = top_weight(c, [&](const Weight& w, const LaurentPoly& f) {
      return !(w == lambda) && !f.in_negative_part();
    });
    if (mu == nullptr) break;
    if (weight_length(*mu) >= top)
      throw std::logic_error("canonical basis recursion: support not below the leading weight");
    const LaurentPoly p = c.coeff(*mu).sym_complete();
    SphElt sub = canonical_basis(*mu).expansion;
    sub *= p;
    c -= sub;
  }
  if (c.coeff(lambda) != LaurentPoly(1)) throw std::logic_error("canonical basis: leading coefficient is not 1");
  for (const auto& [mu, f] : c.terms())
    if (!(mu == lambda) && weight_length(mu) >= top)
      throw std::logic_error("canonical basis: triangularity violated");
  CanonicalBasisElt b{lambda, std::move(c)};
  std::unique_lock lock(cb_mutex_);
  cb_cache_.emplace(lambda, b);
  return b;
}

std::map<Weight, LaurentPoly> SphericalModule::decompose(const SphElt& m) const {
  std::map<Weight, LaurentPoly> out;
  SphElt rest = m;
  while (!rest.is_zero()) {
    const Weight mu = *top_weight(rest, [](const Weight&, const LaurentPoly&) { return true; });
    const LaurentPoly c = rest.coeff(mu);
    out[mu] += c;
    SphElt sub = canonical_basis(mu).expansion;
    sub *= c;
    rest -= sub;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::vector<std::pair<Weight, LaurentPoly>> SphericalModule::sorted_terms(const SphElt& m) const {
  std::vector<std::pair<Weight, LaurentPoly>> out(m.terms().begin(), m.terms().end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const int la = weight_length(a.first), lb = weight_length(b.first);
    if (la != lb) return la > lb;
    return a.first < b.first;
  });
  return out;
}

std::string SphericalModule::to_string(const SphElt& m) const {
  if (m.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : sorted_terms(m)) {
    if (!first) os << " + ";
    first = false;
    if (c == LaurentPoly(1)) {
      os << "m" << lambda;
    } else if (c.num_terms() == 1 && c.coeff(c.low()) == 1) {
      os << c.to_string() << "*m" << lambda;
    } else {
      os << '(' << c.to_string() << ")*m" << lambda;
    }
  }
  return os.str();
}

}  // namespace hsw
