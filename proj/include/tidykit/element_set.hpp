#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "tidykit/error.hpp"

namespace tidykit {

// A subset of the elements of one fixed group, stored as a bitmask.
// Each set carries the id of the group it belongs to; combining sets that
// belong to different groups is a bug we want to surface immediately, so all
// binary operations check the owner tags and throw instead of miscomputing.
class ElementSet {
public:
  ElementSet() = default;
  ElementSet(std::uint64_t owner, int universe)
      : owner_(owner), n_(universe), w_(word_count(universe), 0) {}

  std::uint64_t owner() const { return owner_; }
  int universe() const { return n_; }

  bool test(int x) const {
    check_index(x);
    return (w_[std::size_t(x) >> 6] >> (x & 63)) & 1u;
  }
  void set(int x) {
    check_index(x);
    w_[std::size_t(x) >> 6] |= std::uint64_t(1) << (x & 63);
  }
  void reset(int x) {
    check_index(x);
    w_[std::size_t(x) >> 6] &= ~(std::uint64_t(1) << (x & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  // Least member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(std::size_t(count()));
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        out.push_back(int(i * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  ElementSet& operator|=(const ElementSet& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool operator==(const ElementSet& o) const {
    check_compatible(o);
    return w_ == o.w_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  bool is_subset_of(const ElementSet& o) const {
    check_compatible(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    check_compatible(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // Raw storage, handy as a deduplication key.
  const std::vector<std::uint64_t>& words() const { return w_; }

private:
  static std::size_t word_count(int n) { return (std::size_t(n) + 63) / 64; }

  void check_index(int x) const {
    if (x < 0 || x >= n_)
      fail("bad_parameter",
           "element index " + std::to_string(x) + " outside universe of size " +
               std::to_string(n_));
  }
  void check_compatible(const ElementSet& o) const {
    if (owner_ != o.owner_ || n_ != o.n_)
      fail("set_owner_mismatch",
           "element sets belong to different groups (owners " +
               std::to_string(owner_) + " and " + std::to_string(o.owner_) + ")");
  }

  std::uint64_t owner_ = 0;
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace tidykit
