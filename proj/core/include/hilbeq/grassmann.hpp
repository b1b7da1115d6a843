#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hilbeq/field.hpp"
#include "hilbeq/forms.hpp"
#include "hilbeq/matrix.hpp"
#include "hilbeq/polyring.hpp"

namespace hilbeq {

/// Strictly increasing positions in the canonical monomial basis of S_d.
using PluckerIndex = std::vector<std::uint32_t>;

struct CanonicalIndex {
  PluckerIndex index;  // sorted tuple (empty when sign == 0)
  int sign;            // parity of the sorting permutation, 0 on a repeated entry
};

CanonicalIndex canonical_index(std::vector<std::uint32_t> tuple);
/// Monomial version; throws Error(MixedDegrees) unless all monomials share a degree.
CanonicalIndex canonical_index(const std::vector<Monomial>& tuple);

/// Colex ranking of r-subsets of {0..N-1}: rank(J) = sum_t C(j_t, t+1).
class SubsetRanker {
 public:
  SubsetRanker(std::size_t N, std::size_t r);

  std::size_t N() const noexcept { return N_; }
  std::size_t r() const noexcept { return r_; }
  std::uint64_t count() const noexcept { return count_; }

  std::uint64_t rank(const PluckerIndex& j) const;
  PluckerIndex unrank(std::uint64_t rank) const;
  /// Advances j to the next subset in colex order; false after the last one.
  bool next(PluckerIndex& j) const;
  std::uint64_t binom(std::size_t x, std::size_t k) const;

 private:
  std::size_t N_, r_;
  std::uint64_t count_;
  std::vector<std::uint64_t> table_;  // C(x, k) for x <= N, k <= r + 1
};

/// Upper bound on stored coordinates; larger Grassmannians throw TooLarge.
inline constexpr std::uint64_t kMaxPluckerCoordinates = 4'000'000;

/// The quotient map S_d -> S_d / W in the deterministic monomial quotient
/// basis: scanning monomials in canonical order, keep each one whose image is
/// independent of the images kept before it.
struct QuotientProjection {
  std::vector<std::size_t> quotient_monomials;  // positions in S_d, increasing
  Matrix N;                                     // r x dim S_d, columns at quotient monomials are unit vectors
};

QuotientProjection quotient_projection(const GradedSubspace& w);

/// Point of the Grassmannian of rank-r quotients of S_d in dense colex order.
class PluckerVector {
 public:
  enum class Provenance : std::uint8_t { FromSubspace, Raw };

  /// Raw vector; throws PreconditionFailed if identically zero.
  PluckerVector(const Field& field, int n, int d, std::size_t r, std::vector<Scalar> coords);

  const Field& field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  std::size_t r() const noexcept { return ranker_.r(); }
  std::size_t ambient_dim() const noexcept { return ranker_.N(); }
  const SubsetRanker& ranker() const noexcept { return ranker_; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  const Scalar& at(const PluckerIndex& j) const { return coords_[ranker_.rank(j)]; }

  Provenance provenance() const noexcept { return source_ ? Provenance::FromSubspace : Provenance::Raw; }
  const std::optional<GradedSubspace>& source() const noexcept { return source_; }

  PluckerVector scaled(const Scalar& s) const;

 private:
  friend PluckerVector plucker_from_subspace(const GradedSubspace& w);

  Field field_;
  int n_, d_;
  SubsetRanker ranker_;
  std::vector<Scalar> coords_;
  std::optional<GradedSubspace> source_;
};

/// All maximal minors of an r x dim S_d matrix, in colex order.
std::vector<Scalar> maximal_minors(const Matrix& m);
PluckerVector plucker_from_matrix(int n, int d, const Matrix& m);

/// Plücker coordinates of the quotient S_d / W.
PluckerVector plucker_from_subspace(const GradedSubspace& w);
/// Same, checking codim(W) == r first (Error(WrongCodimension)).
PluckerVector plucker_from_subspace(const GradedSubspace& w, std::size_t r);

struct Decomposition {
  bool decomposable = false;
  std::optional<GradedSubspace> subspace;  // the kernel of the reconstructed quotient map
};

/// Rebuilds a quotient map from the coordinates adjacent to the first nonzero
/// one and compares its minors with the input.
Decomposition decomposable_check(const PluckerVector& v);

/// True iff a = lambda * b for a nonzero scalar lambda.
bool proportional(const PluckerVector& a, const PluckerVector& b);

/// Seeded sample of the quadratic relations sum_t (-1)^t P_{i + j_t} P_{j - j_t}
/// on r-subsets of an N-set; exhaustive when the (i, j) space has at most `count` pairs.
/// Zero relations are dropped, signs normalized and duplicates removed.
std::vector<EquationForm> plucker_relations_sample(std::size_t N, std::size_t r, std::size_t count,
                                                   std::uint64_t seed);

}  // namespace hilbeq
