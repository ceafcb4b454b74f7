#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace hsw {

inline constexpr int kMaxRank = 8;

/// Integer vector in X = Z^rank (or a covector in the dual lattice).
/// Fixed inline storage so that weights and affine elements hash and compare
/// without allocation.
class Weight {
 public:
  using value_type = std::int32_t;

  Weight() = default;
  explicit Weight(int rank) : rank_(check_rank(rank)) {}
  Weight(std::initializer_list<int> values) : Weight(static_cast<int>(values.size())) {
    std::copy(values.begin(), values.end(), data_.begin());
  }
  explicit Weight(std::span<const long> values) : Weight(static_cast<int>(values.size())) {
    std::copy(values.begin(), values.end(), data_.begin());
  }
  static Weight from_vector(const std::vector<long>& values) {
    return Weight(std::span<const long>(values.data(), values.size()));
  }

  int rank() const { return rank_; }
  value_type& operator[](int i) { return data_[static_cast<std::size_t>(i)]; }
  value_type operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.begin() + rank_; }
  std::vector<long> to_vector() const { return {begin(), end()}; }

  bool is_zero() const {
    return std::all_of(begin(), end(), [](value_type x) { return x == 0; });
  }

  Weight& operator+=(const Weight& o) {
    for (int i = 0; i < rank_; ++i) data_[i] += o.data_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (int i = 0; i < rank_; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Weight& operator*=(int k) {
    for (int i = 0; i < rank_; ++i) data_[i] *= k;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) { return a *= k; }
  Weight operator-() const {
    Weight out(rank_);
    for (int i = 0; i < rank_; ++i) out.data_[i] = -data_[i];
    return out;
  }

  /// Plain dot product; with a covector this is the pairing <weight, coweight>.
  long dot(const Weight& o) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i) s += static_cast<long>(data_[i]) * o.data_[i];
    return s;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.rank_ == b.rank_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(rank_);
    for (int i = 0; i < rank_; ++i)
      h = h * 0x100000001b3ULL ^ static_cast<std::size_t>(static_cast<std::uint32_t>(data_[i]));
    return h;
  }

 private:
  static int check_rank(int rank) {
    if (rank < 0 || rank > kMaxRank) throw std::invalid_argument("weight rank out of range");
    return rank;
  }

  std::array<value_type, kMaxRank> data_{};
  std::int32_t rank_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '(';
  for (int i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
  return os << ')';
}

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

}  // namespace hsw
