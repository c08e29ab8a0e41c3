#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace comparo {

/// Dense bitset over state indices [0, size). Sets over at most 64 states
/// live inline.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t size, bool filled = false) : size_(size) {
    const std::uint64_t fill = filled ? ~std::uint64_t{0} : 0;
    if (size_ > 64) heap_.assign(word_count(), fill);
    else small_ = fill;
    trim();
  }

  static StateSet full(std::size_t size) { return StateSet(size, true); }

  std::size_t size() const { return size_; }

  bool contains(std::size_t i) const { return i < size_ && ((data()[i / 64] >> (i % 64)) & 1u); }
  void insert(std::size_t i) { data()[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) { data()[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  void set(std::size_t i, bool value) { value ? insert(i) : erase(i); }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < word_count(); ++i) n += static_cast<std::size_t>(std::popcount(data()[i]));
    return n;
  }
  bool empty() const {
    for (std::size_t i = 0; i < word_count(); ++i)
      if (data()[i]) return false;
    return true;
  }

  StateSet& operator&=(const StateSet& o) {
    for (std::size_t i = 0; i < word_count(); ++i) data()[i] &= o.data()[i];
    return *this;
  }
  StateSet& operator|=(const StateSet& o) {
    for (std::size_t i = 0; i < word_count(); ++i) data()[i] |= o.data()[i];
    return *this;
  }
  /// Set difference.
  StateSet& operator-=(const StateSet& o) {
    for (std::size_t i = 0; i < word_count(); ++i) data()[i] &= ~o.data()[i];
    return *this;
  }
  StateSet complement() const {
    StateSet r = *this;
    for (std::size_t i = 0; i < word_count(); ++i) r.data()[i] = ~r.data()[i];
    r.trim();
    return r;
  }

  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }
  friend bool operator==(const StateSet&, const StateSet&) = default;

  bool subset_of(const StateSet& o) const {
    for (std::size_t i = 0; i < word_count(); ++i)
      if (data()[i] & ~o.data()[i]) return false;
    return true;
  }

  /// Indices of members in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < word_count(); ++wi) {
      std::uint64_t w = data()[wi];
      while (w) {
        out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  std::size_t word_count() const { return (size_ + 63) / 64; }
  std::uint64_t* data() { return size_ > 64 ? heap_.data() : &small_; }
  const std::uint64_t* data() const { return size_ > 64 ? heap_.data() : &small_; }

  void trim() {
    if (size_ % 64) data()[word_count() - 1] &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::uint64_t small_ = 0;
  std::vector<std::uint64_t> heap_;
};

}  // namespace comparo
