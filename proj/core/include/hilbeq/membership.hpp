#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hilbeq/equations.hpp"
#include "hilbeq/grassmann.hpp"
#include "hilbeq/macaulay.hpp"
#include "hilbeq/polyring.hpp"

namespace hilbeq {

struct OracleResult {
  bool member = false;
  std::size_t codim = 0;        // codim I_{R+1}
  std::size_t colon_codim = 0;  // codim (I_{R+1} : S_1)
  std::size_t expected_codim = 0;
  std::size_t expected_colon_codim = 0;
};

/// Gotzmann colon criterion: codim I_{R+1} = p(R+1) and codim (I_{R+1}:S_1) = p(R).
/// Throws Error(BelowGotzmann) when R < r unless allow_below_gotzmann is set.
OracleResult gotzmann_oracle(const GradedSubspace& IR1, const HilbertSpec& spec, int R,
                             bool allow_below_gotzmann = false);

struct HResult {
  bool member = false;
  std::size_t colon_codim = 0;  // codim (I_{R+1} : L) over k(a)
};

/// dim S_R / (I_{R+1} : L) <= p(R); always true for constant p.
/// Throws Error(WrongCodimension) unless codim I_{R+1} = p(R+1).
HResult h_membership(const GradedSubspace& IR1, const HilbertSpec& spec, int R);

/// Failure witness attached to a verdict.
struct Certificate {
  enum class Kind { Codimension, LinearForm, CrossQuadric, PluckerRelation, NotDecomposable, Oracle };
  Kind kind;
  std::string message;
  std::optional<EquationForm> form;       // failing E form or Plücker relation
  std::optional<MinorWitness> minor;      // failing F-matrix minor
  std::optional<Scalar> value;            // value of the failing form
  std::optional<std::size_t> expected, actual;
};

struct Verdict {
  bool decomposable = false;
  bool codim_ok = false;
  bool E_ok = false;
  bool Fquad_ok = false;
  bool oracle_ok = false;
  bool h_ok = false;
  bool conductor_k_rational = false;
  std::size_t codim = 0;
  std::size_t oracle_colon_codim = 0;
  std::size_t conductor_codim = 0;
  std::size_t relations_checked = 0;
  std::vector<Certificate> certificates;

  bool equations_ok() const { return decomposable && codim_ok && E_ok && Fquad_ok; }
};

/// Equations and sampled Plücker relations for one (spec, n, R).
struct EquationSet {
  HilbertSpec spec;
  int n = 0, R = 0;
  ESet E;
  FTable F;
  std::vector<EquationForm> plucker_relations;
};

EquationSet make_equation_set(const HilbertSpec& spec, int n, int R, std::size_t plucker_samples = 200,
                              std::uint64_t seed = 1);

/// Fills decomposable, codim_ok, E_ok and Fquad_ok. Raw vectors go through
/// decomposable_check; subspace-backed vectors are decomposable by construction.
Verdict equation_verdict(const PluckerVector& point, const EquationSet& eqs);
Verdict equation_verdict(const GradedSubspace& IR1, const EquationSet& eqs);

struct CrossCheckReport {
  Verdict verdict;
  bool consistent = true;
  std::vector<std::string> violations;
};

/// Equation verdict plus oracle, H-membership and conductor rationality, and
/// the agreement assertions between them. Throws Error(InconsistencyDetected)
/// on disagreement when `throw_on_inconsistency` is set.
CrossCheckReport cross_check(const GradedSubspace& IR1, const EquationSet& eqs, bool allow_below_gotzmann = false,
                             bool throw_on_inconsistency = true);
/// Raw vector version; the oracle runs on the reconstructed subspace (a
/// non-decomposable vector is not a member).
CrossCheckReport cross_check(const PluckerVector& point, const EquationSet& eqs, bool allow_below_gotzmann = false,
                             bool throw_on_inconsistency = true);

std::string describe(const Verdict& v);

}  // namespace hilbeq
