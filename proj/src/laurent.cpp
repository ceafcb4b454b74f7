#include "hsw/laurent.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hsw {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Int& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Int& coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Int>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

Int LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[exponent - low_];
}

std::map<int, Int> LaurentPoly::terms() const {
  std::map<int, Int> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

std::size_t LaurentPoly::num_terms() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c != 0; }));
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                               coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    low_ += static_cast<int>(first);
  }
}

namespace {

template <typename Op>
void accumulate(int& low, std::vector<Int>& dst, int other_low, const std::vector<Int>& src,
                Op op) {
  if (src.empty()) return;
  if (dst.empty()) {
    low = other_low;
    dst.assign(src.size(), Int(0));
    for (std::size_t i = 0; i < src.size(); ++i) op(dst[i], src[i]);
    return;
  }
  const int new_low = std::min(low, other_low);
  const int new_high = std::max(low + static_cast<int>(dst.size()),
                                other_low + static_cast<int>(src.size()));
  if (new_low < low) dst.insert(dst.begin(), static_cast<std::size_t>(low - new_low), Int(0));
  dst.resize(static_cast<std::size_t>(new_high - new_low), Int(0));
  low = new_low;
  const auto offset = static_cast<std::size_t>(other_low - new_low);
  for (std::size_t i = 0; i < src.size(); ++i) op(dst[offset + i], src[i]);
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  accumulate(low_, coeffs_, other.low_, other.coeffs_, [](Int& a, const Int& b) { a += b; });
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  accumulate(low_, coeffs_, other.low_, other.coeffs_, [](Int& a, const Int& b) { a -= b; });
  trim();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += shift;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  if (is_zero()) return out;
  out.low_ = -high();
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return out;
}

LaurentPoly LaurentPoly::sym_complete() const {
  LaurentPoly out;
  if (is_zero() || high() < 0) return out;
  for (int e = std::max(low_, 0); e <= high(); ++e) {
    const Int c = coeff(e);
    if (c == 0) continue;
    out += monomial(c, e);
    if (e > 0) out += monomial(c, -e);
  }
  return out;
}

LaurentPoly LaurentPoly::substitute(int k) const {
  if (k == 0) throw std::invalid_argument("laurent substitute: exponent must be nonzero");
  LaurentPoly out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out += monomial(coeffs_[i], k * (low_ + static_cast<int>(i)));
  return out;
}

Int LaurentPoly::at_one() const {
  Int s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool LaurentPoly::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
}

std::string LaurentPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    const Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = std::hash<int>{}(low_);
  for (const auto& c : coeffs_) {
    const auto limb = static_cast<std::size_t>(static_cast<long long>(c % 1000000007));
    h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace hsw
