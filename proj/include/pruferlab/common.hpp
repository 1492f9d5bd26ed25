#pragma once

/**
 * @file common.hpp
 * @brief Shared vocabulary: element indices, bit-mask element sets, resource
 * limits and the exception hierarchy used across the library.
 */

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pruferlab {

/// Index of an element inside a finite ring or module.
using Index = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resource cap (ring order, enumeration size, scan budget) was exceeded.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// Objects built over different rings were combined.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Invalid construction input (non-monic modulus, subset that is not an ideal, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed: two independent routes disagreed or a
/// proven implication was violated. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Resource limits. Defaults follow the documented caps; the CLI may override
/// them from flags or the PRUFERLAB_MAX_ORDER environment variable.
struct Limits {
  std::size_t construction_order = 4096;  ///< largest ring/module built
  std::size_t enumeration_order = 64;     ///< largest ring whose ideals are enumerated
  std::size_t oracle_order = 32;          ///< cross-check oracles run inside classify up to here
  std::size_t scan_order = 16;            ///< content-equality scan ring cap
  std::uint64_t scan_budget = std::uint64_t{1} << 25;  ///< polynomial pairs per scan
  int probe_steps = 4;                    ///< syzygy steps of the resolution probe
  std::size_t probe_space = std::size_t{1} << 16;      ///< |R|^rank bound for free modules in the probe
};

/// Fixed-capacity bitset over element indices [0, size). Value type, hashable.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return size_; }

  bool contains(Index i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void insert(Index i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(Index i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  /// Calls f(i) for every member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<Index>(k * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<Index> to_vector() const {
    std::vector<Index> out;
    out.reserve(count());
    for_each([&](Index i) { out.push_back(i); });
    return out;
  }

  /// Smallest member, or universe() when empty.
  Index first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<Index>(k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k])));
    return static_cast<Index>(size_);
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Lexicographic order on the word vector; only used for deterministic sorting.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.words_ < b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace pruferlab
