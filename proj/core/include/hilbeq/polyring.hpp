#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hilbeq/field.hpp"
#include "hilbeq/matrix.hpp"
#include "hilbeq/mpoly.hpp"

namespace hilbeq {

/// Exponent vector of a monomial in x_0..x_n.
struct Monomial {
  std::vector<int> e;

  int degree() const;
  std::string to_string() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// True iff a precedes b in the canonical order (lex, x_0 heaviest, so x_0^d comes first).
bool canonical_before(const Monomial& a, const Monomial& b);

/// All monomials of S_d = k[x_0..x_n]_d in canonical order, with index lookup
/// and multiplication-by-variable tables into S_{d+1}.
class MonomialBasis {
 public:
  MonomialBasis(int n, int d);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  /// Throws Error(DimensionMismatch) if the monomial is not in S_d.
  std::size_t index_of(const Monomial& m) const;
  /// Index in S_{d+1} of x_var * monomial(i).
  std::size_t times_var(int var, std::size_t i) const { return mul_[static_cast<std::size_t>(var) * size() + i]; }

 private:
  std::uint64_t key(const Monomial& m) const;

  int n_, d_;
  std::vector<Monomial> monomials_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::size_t> mul_;
};

/// Shared immutable basis for (n, d); thread-safe.
const MonomialBasis& monomial_basis(int n, int d);

/// Homogeneous or inhomogeneous polynomial in x_0..x_n (sparse, combined terms).
struct Polynomial {
  Field field;
  int n = 0;
  std::vector<std::pair<Monomial, Scalar>> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  /// Degree if homogeneous; throws Error(MixedDegrees) otherwise.
  int homogeneous_degree() const;
  std::string to_string() const;
};

/// Parses comma-separated polynomials in x0..xN, e.g. "x0*x2, x1^2 - 3/2 x0x1".
/// Variables beyond x_n are an input error.
std::vector<Polynomial> parse_polynomials(const std::string& text, int n, const Field& field);

/// Linear form sum_i c_i x_i.
using LinearForm = std::vector<Scalar>;

/// A subspace of S_d stored by the rows of its reduced row echelon form
/// (equivalently, basis columns in reduced column echelon form), so equal
/// subspaces compare equal.
class GradedSubspace {
 public:
  GradedSubspace(const Field& field, int n, int d);  // zero subspace
  /// Span of the given rows (each a coordinate vector in S_d).
  static GradedSubspace from_rows(int n, int d, const Matrix& rows);
  static GradedSubspace full(const Field& field, int n, int d);
  static GradedSubspace from_monomials(const Field& field, int n, int d, const std::vector<Monomial>& mons);

  const Field& field() const noexcept { return rows_.field(); }
  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  std::size_t ambient_dim() const noexcept { return rows_.cols(); }
  std::size_t dim() const noexcept { return rows_.rows(); }
  std::size_t codim() const noexcept { return ambient_dim() - dim(); }

  /// Canonical echelon rows.
  const Matrix& rows() const noexcept { return rows_; }
  /// Basis vectors as columns.
  Matrix basis() const { return rows_.transpose(); }
  /// Functionals cutting out the subspace: rows of a (codim x ambient) matrix whose kernel is this space.
  Matrix annihilator() const;

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const GradedSubspace& other) const;

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.rows_ == b.rows_;
  }

 private:
  GradedSubspace(int n, int d, Matrix rows) : n_(n), d_(d), rows_(std::move(rows)) {}

  int n_, d_;
  Matrix rows_;
};

/// Matrix of multiplication by a linear form S_d -> S_{d+1} in monomial bases.
Matrix multiplication_map(int n, int d, const LinearForm& form);
/// Multiplication by x_var.
Matrix variable_map(const Field& field, int n, int d, int var);
/// Multiplication by the generic form L = a_0 x_0 + ... + a_n x_n.
LinearPolyMatrix generic_multiplication_map(const Field& field, int n, int d);

/// Degree-d piece of the ideal generated by homogeneous polynomials.
GradedSubspace ideal_degree_piece(const std::vector<Polynomial>& generators, int n, int d, const Field& field);

/// x_0..x_n times W, spanning S_1 * W in degree d+1.
GradedSubspace multiply_by_S1(const GradedSubspace& w);

/// (I : l) for I in degree d+1, a subspace of S_d. Throws ZeroForm when l = 0.
GradedSubspace colon_by_linear(const GradedSubspace& I, const LinearForm& l);
/// (I : S_1) = intersection of (I : x_i).
GradedSubspace colon_by_S1(const GradedSubspace& I);

/// Kernel of S_R -> S_{R+1}/I, f -> L f, over k(a_0..a_n).
/// The basis column for free coordinate f has `denominator` at f and
/// numerators elsewhere; if k_rational the basis is constant and `rational_basis` is set.
struct GenericColonResult {
  int n = 0, d = 0;
  std::size_t codim = 0;
  bool k_rational = true;
  MPoly denominator;
  std::vector<std::vector<MPoly>> numerators;  // one vector (length dim S_d) per basis column
  std::optional<GradedSubspace> rational_basis;
};

GenericColonResult generic_colon(const GradedSubspace& I);

/// Substitution x_j -> sum_k g(j,k) x_k acting on S_d; column m = image of monomial m.
Matrix substitution_matrix(const Matrix& g, int d);
/// Image of W under the substitution.
GradedSubspace substitute(const GradedSubspace& w, const Matrix& g);

/// Restriction of W to the hyperplane x_n = sum_{i<n} c_i x_i, as a subspace of k[x_0..x_{n-1}]_d.
GradedSubspace restrict_to_hyperplane(const GradedSubspace& w, const std::vector<Scalar>& c);

}  // namespace hilbeq
