#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace oclique {

// Fixed-width bitset sized at construction. Only what the adjacency rows
// need: set/test/reset, popcount, intersection tests, and iteration over
// set bits.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    const std::size_t k = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < k; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  Bitset operator|(const Bitset& o) const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  bool operator==(const Bitset&) const = default;

  // Calls f(i) for every set bit i, ascending.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        f((w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace oclique
