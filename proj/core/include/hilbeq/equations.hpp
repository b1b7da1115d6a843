#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hilbeq/forms.hpp"
#include "hilbeq/grassmann.hpp"
#include "hilbeq/macaulay.hpp"
#include "hilbeq/matrix.hpp"

namespace hilbeq {

/// Positions of monomials (in S_R or S_{R+1}) making up an m- or n-tuple.
using MonomialTuple = std::vector<std::uint32_t>;
/// Multiset of variables as exponent vector alpha_0..alpha_n.
using VariableMultiset = std::vector<int>;

/// Sum over distinct arrangements y of the multiset alpha of the signed
/// coordinate P_{y_1 m_1, ..., y_k m_k, n_1, ...} in degree R+1. The m-tuple
/// may be in any order; the result carries the true sign (not normalized).
EquationForm orbit_expansion(int n, int R, const MonomialTuple& m, const MonomialTuple& ntuple,
                             const VariableMultiset& alpha, const SubsetRanker& ranker);

struct GenerationStats {
  std::uint64_t generated = 0;    // (m, n, x) triples expanded
  std::uint64_t zero = 0;         // identically zero expansions
  std::uint64_t duplicates = 0;   // nonzero expansions equal (after sign normalization) to an earlier one
};

/// The linear forms E(m, n, x), deduplicated and sign-normalized, in generation order.
struct ESet {
  int n = 0, R = 0;
  std::size_t pR = 0, pR1 = 0;
  std::vector<EquationForm> forms;
  GenerationStats stats;
};

ESet gen_E(const HilbertSpec& spec, int n, int R);

/// Table of F(m, n, x): rows are m-multisets of size p(R) in S_R, columns are
/// pairs (n-tuple of size p(R+1)-p(R) in S_{R+1}, variable multiset of size p(R)).
struct FTable {
  int n = 0, R = 0;
  std::size_t pR = 0, pR1 = 0;
  std::vector<MonomialTuple> rows;
  std::vector<std::pair<MonomialTuple, VariableMultiset>> cols;
  std::vector<EquationForm> entries;  // row-major, true signs, zero symbols kept

  const EquationForm& at(std::size_t r, std::size_t c) const { return entries[r * cols.size() + c]; }
  std::uint64_t zero_count() const;
};

FTable gen_F_symbols(const HilbertSpec& spec, int n, int R);

/// Exact values of every F symbol at the point. Throws DimensionMismatch if
/// the point's degree or rank does not match the table.
Matrix f_matrix(const FTable& table, const PluckerVector& point);

struct MinorWitness {
  std::size_t row1, row2, col1, col2;
  Scalar value;
};

struct CrossQuadricResult {
  bool rank_at_most_one = true;
  std::optional<MinorWitness> witness;
};

CrossQuadricResult cross_quadric_residual(const Matrix& fm);

/// An explicit F-cross quadric F(r1,c1)F(r2,c2) - F(r2,c1)F(r1,c2).
struct CrossQuadric {
  std::size_t row1, row2, col1, col2;
  EquationForm form;  // sign-normalized
  int sign;           // form = sign * (minor expression)
};

/// Nonzero cross quadrics, deduplicated. With `sample` set, a seeded sample of
/// that many; otherwise the full enumeration (throws TooLarge past `limit` pairs).
std::vector<CrossQuadric> cross_quadrics(const FTable& table, std::optional<std::size_t> sample, std::uint64_t seed,
                                         std::uint64_t limit = 50'000'000);

/// Everything written to an equation file.
struct EquationBundle {
  HilbertSpec spec;
  int n = 0, R = 0;
  bool include_plucker = true, include_E = true, include_Fquad = true;
  ESet E;
  FTable F;
  std::vector<CrossQuadric> quadrics;
  bool quadrics_full = false;
  std::vector<EquationForm> plucker_relations;
};

struct ExportOptions {
  bool include_plucker = true;
  bool include_E = true;
  bool include_Fquad = true;
  std::optional<std::size_t> sample_quadrics = 100;  // nullopt: full enumeration
  std::size_t sample_plucker = 200;
  std::uint64_t seed = 1;
};

EquationBundle build_equations(const HilbertSpec& spec, int n, int R, const ExportOptions& options);

}  // namespace hilbeq
