#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace clonelab {

/* Fixed-width bit vector indexed by tuple codes.  Width is set at
 * construction and never changes; all binary operators require equal
 * widths. */
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_(words_for(n), 0) {}

  static Bits ones(std::size_t n) {
    Bits b(n);
    for (auto& w : b.w_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v = true) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool all() const { return count() == n_; }

  Bits operator&(const Bits& o) const {
    Bits r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  Bits operator|(const Bits& o) const {
    Bits r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  Bits operator^(const Bits& o) const {
    Bits r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] ^ o.w_[i];
    return r;
  }

  Bits complement() const {
    Bits r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

  std::strong_ordering operator<=>(const Bits& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (auto c = w_[i] <=> o.w_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = n_ * 0x9e3779b97f4a7c15ull;
    for (auto w : w_) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace clonelab
