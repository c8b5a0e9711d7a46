#ifndef LIEALG_MATRIX_HPP
#define LIEALG_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "liealg/field.hpp"

namespace liealg {

using Vec = std::vector<Scalar>;

Vec zero_vec(FieldSpec f, std::size_t n);
Vec unit_vec(FieldSpec f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);

/// Dense exact matrix; all entries share one field.
class Matrix {
public:
  Matrix() = default;
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldSpec f, std::size_t n);
  static Matrix from_rows(FieldSpec f, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Vec apply(const Vec& v) const;  // matrix * column vector

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

struct RrefResult {
  std::size_t rank = 0;
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;  // strictly increasing
};

/// Unique reduced row-echelon form; exact over the matrix's field.
RrefResult rref(const Matrix& m);

struct SolveResult {
  bool consistent = false;
  Vec particular;   // one solution when consistent
  Matrix kernel;    // rows span the kernel of A (RREF basis)
};

/// Full solution set of A x = b.  Inconsistency is a result, not an error.
SolveResult solve(const Matrix& a, const Vec& b);

/// RREF basis of the kernel of A; deterministic (free columns in order).
Matrix kernel(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

}  // namespace liealg

#endif
