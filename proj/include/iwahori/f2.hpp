#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iwahori/linalg.hpp"

namespace iwahori {

// Vector over F_2, dimension <= 64. Coordinates are always taken in the
// cocharacter-lattice basis of the ambient RootDatum.
class F2Vec {
public:
  F2Vec() : dim_(0), bits_(0) {}
  explicit F2Vec(unsigned dim, std::uint64_t bits = 0)
      : dim_(dim), bits_(bits & mask(dim)) {}

  static F2Vec from_ivec(const IVec& v) {
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] & 1) b |= (std::uint64_t{1} << i);
    return F2Vec(static_cast<unsigned>(v.size()), b);
  }

  unsigned dim() const { return dim_; }
  std::uint64_t bits() const { return bits_; }
  bool get(unsigned i) const { return (bits_ >> i) & 1; }
  void set(unsigned i, bool v) {
    if (v) bits_ |= (std::uint64_t{1} << i);
    else bits_ &= ~(std::uint64_t{1} << i);
  }
  bool is_zero() const { return bits_ == 0; }

  friend F2Vec operator+(const F2Vec& a, const F2Vec& b) {
    return F2Vec(a.dim_ > b.dim_ ? a.dim_ : b.dim_, a.bits_ ^ b.bits_);
  }
  F2Vec& operator+=(const F2Vec& o) {
    bits_ ^= o.bits_;
    if (o.dim_ > dim_) dim_ = o.dim_;
    return *this;
  }
  friend bool operator==(const F2Vec& a, const F2Vec& b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(const F2Vec& a, const F2Vec& b) { return !(a == b); }
  friend bool operator<(const F2Vec& a, const F2Vec& b) {
    return a.bits_ < b.bits_;
  }

  std::string str() const {
    std::string s;
    for (unsigned i = 0; i < dim_; ++i) s += get(i) ? '1' : '0';
    return s;
  }

private:
  static std::uint64_t mask(unsigned d) {
    return d >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << d) - 1);
  }
  unsigned dim_;
  std::uint64_t bits_;
};

// F_2 span with incremental Gaussian elimination.
class F2Span {
public:
  bool add(F2Vec v) {  // returns true if the vector enlarged the span
    std::uint64_t b = reduce(v.bits());
    if (b == 0) return false;
    basis_.push_back(b);
    dims_ = v.dim() > dims_ ? v.dim() : dims_;
    return true;
  }
  bool contains(const F2Vec& v) const { return reduce(v.bits()) == 0; }
  unsigned rank() const { return static_cast<unsigned>(basis_.size()); }

  // All 2^rank elements, sorted.
  std::vector<F2Vec> enumerate() const {
    std::vector<std::uint64_t> all{0};
    for (auto b : basis_) {
      std::size_t n = all.size();
      for (std::size_t i = 0; i < n; ++i) all.push_back(all[i] ^ b);
    }
    std::sort(all.begin(), all.end());
    std::vector<F2Vec> out;
    out.reserve(all.size());
    for (auto b : all) out.emplace_back(dims_, b);
    return out;
  }

private:
  std::uint64_t reduce(std::uint64_t b) const {
    for (auto v : basis_) {
      std::uint64_t hi = high_bit(v);
      if (b & hi) b ^= v;
    }
    return b;
  }
  static std::uint64_t high_bit(std::uint64_t v) {
    std::uint64_t h = 1;
    while (v >>= 1) h <<= 1;
    return h;
  }
  std::vector<std::uint64_t> basis_;
  unsigned dims_ = 0;
};

}  // namespace iwahori
