#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace msemi {

/// A subset of a fixed finite carrier {0, ..., n-1}, stored as a bit vector.
/// All set arithmetic is word-parallel; the carrier size is fixed at
/// construction and operations never mix widths.
class Subset {
 public:
  Subset() : n_(0) {}
  explicit Subset(int universe) : n_(universe), w_(words_for(universe), 0) {
    assert(universe >= 0);
  }

  static Subset full(int universe) {
    Subset s(universe);
    for (auto& w : s.w_) w = ~uint64_t{0};
    s.trim();
    return s;
  }

  static Subset single(int universe, int i) {
    Subset s(universe);
    s.set(i);
    return s;
  }

  static Subset of(int universe, std::initializer_list<int> elements) {
    Subset s(universe);
    for (int i : elements) s.set(i);
    return s;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  Subset& operator|=(const Subset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Subset& operator&=(const Subset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  /// Set difference.
  Subset& operator-=(const Subset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  bool operator==(const Subset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Subset& o) const { return !(*this == o); }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool is_full() const { return *this == full(n_); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool intersects(const Subset& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  /// True iff o is a subset of *this.
  bool contains(const Subset& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k)
      if (o.w_[k] & ~w_[k]) return false;
    return true;
  }

  bool is_singleton(int i) const { return count() == 1 && test(i); }

  /// Least element, or -1 when empty.
  int first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k];
      while (w) {
        f(int(k * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size_t(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::span<const uint64_t> words() const { return w_; }
  std::span<uint64_t> words() { return w_; }

  std::string to_string(const std::vector<std::string>& names) const {
    std::string out = "{";
    bool sep = false;
    for_each([&](int i) {
      if (sep) out += ",";
      out += names[size_t(i)];
      sep = true;
    });
    out += "}";
    return out;
  }

 private:
  static size_t words_for(int n) { return size_t((n + 63) / 64); }

  void trim() {
    if (n_ % 64 && !w_.empty()) w_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_;
  std::vector<uint64_t> w_;
};

}  // namespace msemi
