// SPDX-License-Identifier: Apache-2.0
//
// Exact dense linear algebra over the rationals or a prime field.
//
// Every decomposition pivots on the first nonzero entry in column order, so
// reduced forms, kernel bases and solutions are canonical: the same input
// yields the same bytes on every run and platform.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace lathom {

// A field element.  Over Q this is an arbitrary-precision rational.  Over
// F_p it is the canonical representative 0 <= v < p (denominator 1); all
// reduction happens inside Field, Scalar itself is just storage.
using Scalar = mpq_class;

class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);  // throws SemanticError unless p is prime

  // Parse "q" or "fp:<p>" as used by the CLI.
  static Field parse(const std::string& name);

  bool is_prime_field() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return from_long(1); }
  Scalar from_long(long v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws on zero
  Scalar div(const Scalar& a, const Scalar& b) const;

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  std::string to_string(const Scalar& a) const { return a.get_str(); }
  std::string name() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
  explicit Field(std::uint64_t p) : p_(p) {}
  Scalar reduce(const mpz_class& z) const;

  std::uint64_t p_ = 0;  // 0 means the rationals
};

// Dense matrix with entries in a fixed field, row-major.  Zero-row and
// zero-column shapes are legal everywhere; they show up constantly as fibers
// of modules.
class Mat {
public:
  Mat(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  static Mat identity(const Field& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v) { a_[i * cols_ + j] = v; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;  // throws InternalError on shape mismatch
  Mat operator+(const Mat& o) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const;

  // Columns j0..j0+k-1 as a new matrix; used to slice stacked solutions.
  Mat columns(std::size_t j0, std::size_t k) const;

  // [this | o] side by side.
  Mat augment(const Mat& o) const;

  std::string to_string() const;  // human-readable, row per line

private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  std::size_t rank = 0;
  Mat reduced;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form via Gauss-Jordan with deterministic pivoting.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

// Canonical kernel basis as matrix columns (cols() == nullity of m).  Each
// basis vector has a 1 in one free coordinate and zeros in the others.
Mat kernel_basis(const Mat& m);

// Solve m x = b columnwise (b may carry several right-hand sides).  Returns
// the solution with all free variables zero, or nullopt if any column of b
// is inconsistent.
std::optional<Mat> solve(const Mat& m, const Mat& b);

}  // namespace lathom
