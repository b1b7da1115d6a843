#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbeq/macaulay.hpp"
#include "hilbeq/matrix.hpp"
#include "hilbeq/polyring.hpp"
#include "hilbeq/rng.hpp"

namespace hilbeq {

using PointPair = std::pair<GradedSubspace, GradedSubspace>;  // (I_R, I_{R+1})

/// I_d = span of the first dim S_d - p(d) monomials, d = R, R+1.
PointPair lex_segment_point(const HilbertSpec& spec, int n, int R, const Field& field = Field::rationals());

/// Built-in generator lists with Hilbert polynomial `spec` on P^n: t+2 on P^2
/// and the constants 1..4 on P^1 and P^2. Throws Error(UnknownCatalogEntry).
std::vector<std::vector<Polynomial>> saturated_examples(const HilbertSpec& spec, int n,
                                                        const Field& field = Field::rationals());

/// (I_R, I_{R+1}) of the ideal generated by `gens`.
PointPair truncation(const std::vector<Polynomial>& gens, int n, int R, const Field& field);

/// Random invertible (n+1)x(n+1) matrix: entries in [-3, 3] over Q, uniform over F_p.
/// Throws Error(SingularDraw) after 10 singular draws.
Matrix random_invertible(const Field& field, std::size_t size, SplitMix64& rng);

/// Applies x_j -> sum_k g(j,k) x_k degreewise.
PointPair gl_translate(const PointPair& point, const Matrix& g);
/// Seeded random coordinate change.
PointPair gl_translate(const PointPair& point, const Field& field, std::uint64_t seed);

struct Nonmember {
  GradedSubspace IR1;
  std::size_t colon_codim;  // codim (I_{R+1} : S_1), different from p(R)
};

/// Rejection-samples a random codim-p(R+1) subspace of S_{R+1} failing the
/// Gotzmann oracle. Throws Error(ExhaustedRetries) after 100 draws.
Nonmember random_nonmember(const HilbertSpec& spec, int n, int R, const Field& field, std::uint64_t seed);
/// Same, restricted to monomial subspaces (coordinates 0/1 in any field).
Nonmember random_monomial_nonmember(const HilbertSpec& spec, int n, int R, const Field& field, std::uint64_t seed);

/// span(x0^3, x1^3, x2^3, x0^2 x1, x0^2 x2): fails the oracle for t+2 on P^2 at R = 2.
GradedSubspace catalog_nonmember(const Field& field = Field::rationals());

/// Proposal for points of H off the Hilbert scheme: I_{R+1} = l * ker(lambda)
/// for a random linear form l and a random functional lambda on S_R. Only
/// meaningful when dim S_{R+1} - dim S_R + 1 = p(R+1).
GradedSubspace linear_times_hyperplane(int n, int R, const Field& field, SplitMix64& rng);

struct CorpusSpec {
  int n = 2;
  HilbertSpec spec;
  int R = 0;
  Field field = Field::rationals();
  std::uint64_t seed = 1;
  std::size_t members_monomial = 10;
  std::size_t members_gl = 20;
  std::size_t nonmembers = 20;
};

struct CorpusPoint {
  enum class Kind { Member, Nonmember };
  Kind kind;
  std::string source;  // "lex", "catalog" or "gl"
  std::optional<GradedSubspace> IR;
  GradedSubspace IR1;
};

/// Monomial members (lex segment, catalog, coordinate permutations of those),
/// GL translates and nonmembers; every entry is checked against the oracle.
std::vector<CorpusPoint> build_corpus(const CorpusSpec& cs);

/// Distinct monomial member points: the lex segment, catalog truncations and
/// their images under coordinate permutations.
std::vector<CorpusPoint> monomial_members(const HilbertSpec& spec, int n, int R, const Field& field);

}  // namespace hilbeq
