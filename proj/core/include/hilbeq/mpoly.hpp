#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hilbeq/field.hpp"
#include "hilbeq/matrix.hpp"

namespace hilbeq {

/// Sparse polynomial in at most 8 indeterminates a_0..a_7 over an exact field.
/// Exponents are packed one byte per variable (a_0 in the top byte), so packed
/// keys compare in lexicographic order with a_0 heaviest.
class MPoly {
 public:
  using Key = std::uint64_t;
  static constexpr unsigned kMaxVars = 8;

  MPoly() : MPoly(Field::rationals(), 0) {}
  MPoly(const Field& field, unsigned nvars);

  static MPoly constant(const Field& field, unsigned nvars, const Scalar& c);
  static MPoly variable(const Field& field, unsigned nvars, unsigned i);

  const Field& field() const noexcept { return field_; }
  unsigned nvars() const noexcept { return nvars_; }
  const std::vector<std::pair<Key, Scalar>>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  Scalar constant_term() const;
  unsigned total_degree() const;
  Scalar coefficient(const std::vector<unsigned>& exponents) const;

  Scalar evaluate(const std::vector<Scalar>& point) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const Scalar& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Scalar& s) { return a *= s; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  /// Exact quotient a / b; throws Error(PreconditionFailed) if b does not divide a.
  friend MPoly exact_divide(const MPoly& a, const MPoly& b);

  std::string to_string() const;

  static Key pack(const std::vector<unsigned>& exponents);
  static std::vector<unsigned> unpack(Key key, unsigned nvars);

 private:
  void add_term(Key key, const Scalar& c);
  void normalize();

  Field field_;
  unsigned nvars_;
  std::vector<std::pair<Key, Scalar>> terms_;  // strictly decreasing keys, nonzero coefficients
};

/// Matrix whose entries are polynomials of total degree at most 1 in a_0..a_n.
class LinearPolyMatrix {
 public:
  LinearPolyMatrix(const Field& field, unsigned nvars, std::size_t rows, std::size_t cols);

  const Field& field() const noexcept { return field_; }
  unsigned nvars() const noexcept { return nvars_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const MPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Throws Error(PreconditionFailed) when the entry has degree above 1.
  void set(std::size_t r, std::size_t c, MPoly value);

  /// Substitutes a_i -> point[i] in every entry.
  Matrix specialize(const std::vector<Scalar>& point) const;

 private:
  Field field_;
  unsigned nvars_;
  std::size_t rows_, cols_;
  std::vector<MPoly> data_;
};

/// Output of fraction-free Gauss-Jordan elimination over the polynomial ring.
/// The reduced echelon form over the fraction field is entries / denominator;
/// every pivot entry equals the denominator.
struct FractionFreeEchelon {
  std::size_t rows = 0, cols = 0;
  std::vector<MPoly> entries;  // row-major
  MPoly denominator;
  std::vector<std::size_t> pivots;

  const MPoly& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  std::size_t rank() const noexcept { return pivots.size(); }
};

FractionFreeEchelon fraction_free_echelon(const LinearPolyMatrix& m);

/// Determinant over the polynomial ring (Bareiss); rows of polynomials of any degree.
MPoly poly_determinant(std::vector<std::vector<MPoly>> m);

/// Rank over the fraction field k(a_0..a_n). The fast path takes the maximum
/// rank over `confidence` random specializations in a prime field of size at
/// least 2^30; the exact fraction-free path runs whenever that estimate is
/// within one of full rank or `exact` is set, and is then authoritative.
std::size_t rank_over_function_field(const LinearPolyMatrix& m, unsigned confidence, bool exact = false,
                                     std::uint64_t seed = 0x5eed);

}  // namespace hilbeq
