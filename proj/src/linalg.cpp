// SPDX-License-Identifier: Apache-2.0

#include "linalg.hpp"

#include <sstream>

namespace lathom {

Field Field::prime(std::uint64_t p) {
  mpz_class z(static_cast<unsigned long>(p));
  // 40 Miller-Rabin rounds on top of BPSW; definitive for any input we meet.
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw SemanticError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(const std::string& name) {
  if (name == "q" || name == "Q") return rationals();
  if (name.rfind("fp:", 0) == 0) {
    const std::string digits = name.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw SemanticError("bad field spec '" + name + "'");
    return prime(std::stoull(digits));
  }
  throw SemanticError("bad field spec '" + name + "' (want q or fp:<prime>)");
}

Scalar Field::reduce(const mpz_class& z) const {
  mpz_class r;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());  // floor division: r in [0, p)
  return Scalar(r);
}

Scalar Field::from_long(long v) const {
  if (p_ == 0) return Scalar(v);
  return reduce(mpz_class(v));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  return reduce(a.get_num() + b.get_num());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  return reduce(a.get_num() - b.get_num());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return reduce(a.get_num() * b.get_num());
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  return reduce(-a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw InternalError("inverse of zero");
  if (p_ == 0) return Scalar(1) / a;
  mpz_class r, p(static_cast<unsigned long>(p_));
  if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
    throw InternalError("non-invertible residue in prime field");
  return Scalar(r);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

std::string Field::name() const {
  return p_ == 0 ? "q" : "fp:" + std::to_string(p_);
}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || field_ != o.field_)
    throw InternalError("matrix product shape mismatch");
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (field_.is_zero(aik)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.set(i, j, field_.add(r.at(i, j), field_.mul(aik, o.at(k, j))));
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    throw InternalError("matrix sum shape mismatch");
  Mat r(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r.set(i, j, field_.add(at(i, j), o.at(i, j)));
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
}

bool Mat::is_zero() const {
  for (const Scalar& v : a_)
    if (sgn(v) != 0) return false;
  return true;
}

Mat Mat::columns(std::size_t j0, std::size_t k) const {
  if (j0 + k > cols_) throw InternalError("column slice out of range");
  Mat r(field_, rows_, k);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < k; ++j) r.set(i, j, at(i, j0 + j));
  return r;
}

Mat Mat::augment(const Mat& o) const {
  if (rows_ != o.rows_ || field_ != o.field_)
    throw InternalError("augment shape mismatch");
  Mat r(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (std::size_t j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
  }
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << field_.to_string(at(i, j));
    }
    os << "]\n";
  }
  return os.str();
}

RrefResult rref(const Mat& m) {
  const Field& f = m.field();
  RrefResult res{0, m, {}};
  Mat& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // first nonzero entry at or below `row` in this column
    std::size_t piv = row;
    while (piv < a.rows() && f.is_zero(a.at(piv, col))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Scalar tmp = a.at(row, j);
        a.set(row, j, a.at(piv, j));
        a.set(piv, j, tmp);
      }
    const Scalar pinv = f.inv(a.at(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a.set(row, j, f.mul(a.at(row, j), pinv));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || f.is_zero(a.at(i, col))) continue;
      const Scalar c = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a.set(i, j, f.sub(a.at(i, j), f.mul(c, a.at(row, j))));
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  const Field& f = m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  Mat k(f, m.cols(), free_cols.size());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t fc = free_cols[b];
    k.set(fc, b, f.one());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      k.set(r.pivot_cols[i], b, f.neg(r.reduced.at(i, fc)));
  }
  return k;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  if (m.rows() != b.rows()) throw InternalError("solve shape mismatch");
  const Field& f = m.field();
  RrefResult r = rref(m.augment(b));
  // any pivot landing in the b-block means some column is inconsistent
  for (std::size_t c : r.pivot_cols)
    if (c >= m.cols()) return std::nullopt;
  Mat x(f, m.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.set(r.pivot_cols[i], j, r.reduced.at(i, m.cols() + j));
  return x;
}

}  // namespace lathom
