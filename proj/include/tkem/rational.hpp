#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace tkem {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "num/den" with an explicit denominator, even when it is 1.
std::string to_fraction_string(const Rational& q);

/// num/den in canonical form; den may be negative but not zero.
inline Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// Dense square matrix of arbitrary-precision integers, row-major.
class BigIntMatrix {
 public:
  BigIntMatrix() = default;
  explicit BigIntMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  friend bool operator==(const BigIntMatrix& a, const BigIntMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

}  // namespace tkem
