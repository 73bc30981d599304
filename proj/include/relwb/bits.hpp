#pragma once
// Dense bitsets sized at runtime: AtomSet for subsets of an atom universe,
// Bitset3 for ternary relations (consistent-triple tables).
#include <cstdint>
#include <cstddef>
#include <vector>
#include <string>
#include <functional>
#include <stdexcept>

namespace relwb {

class AtomSet {
public:
  AtomSet() : n_(0) {}
  explicit AtomSet(int n) : n_(n), w_((n + 63) / 64, 0) {}
  static AtomSet full(int n) {
    AtomSet s(n);
    for (auto& x : s.w_) x = ~0ull;
    s.trim();
    return s;
  }
  static AtomSet single(int n, int i) {
    AtomSet s(n);
    s.set(i);
    return s;
  }

  int universe() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool any() const {
    for (auto x : w_) if (x) return true;
    return false;
  }
  bool none() const { return !any(); }
  int count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }
  // least set bit, -1 if empty
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }
  template <class F> void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t x = w_[i];
      while (x) {
        f(int(i * 64 + __builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }
  std::vector<int> elems() const {
    std::vector<int> v;
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  AtomSet& operator|=(const AtomSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  AtomSet& operator&=(const AtomSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
  friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
  AtomSet operator~() const {
    AtomSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }
  bool operator==(const AtomSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const AtomSet& o) const { return !(*this == o); }
  bool subset_of(const AtomSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const AtomSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  // lexicographic on the word vector: deterministic total order
  bool operator<(const AtomSet& o) const { return w_ < o.w_; }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (auto x : w_) { h ^= x; h *= 1099511628211ull; }
    return h;
  }
  std::string str() const {
    std::string s = "{";
    bool fst = true;
    for_each([&](int i) {
      if (!fst) s += ",";
      s += std::to_string(i);
      fst = false;
    });
    return s + "}";
  }

private:
  void trim() {
    if (n_ % 64 && !w_.empty()) w_.back() &= (~0ull) >> (64 - n_ % 64);
  }
  int n_;
  std::vector<uint64_t> w_;
};

// k^3 bit table for triples (a,b,c)
class Bitset3 {
public:
  Bitset3() : k_(0) {}
  explicit Bitset3(int k) : k_(k) {
    uint64_t bits = uint64_t(k) * k * k;
    if (bits > (1ull << 33))
      throw std::length_error("triple table too large: " + std::to_string(k) + " atoms");
    w_.assign((bits + 63) / 64, 0);
  }
  bool test(int a, int b, int c) const {
    uint64_t i = idx(a, b, c);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int a, int b, int c) {
    uint64_t i = idx(a, b, c);
    w_[i >> 6] |= 1ull << (i & 63);
  }
  void reset(int a, int b, int c) {
    uint64_t i = idx(a, b, c);
    w_[i >> 6] &= ~(1ull << (i & 63));
  }
  uint64_t count() const {
    uint64_t c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }
  int k() const { return k_; }

private:
  uint64_t idx(int a, int b, int c) const {
    return (uint64_t(a) * k_ + b) * k_ + c;
  }
  int k_;
  std::vector<uint64_t> w_;
};

struct AtomSetHash {
  size_t operator()(const AtomSet& s) const { return s.hash(); }
};

} // namespace relwb
