#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hilbeq/grassmann.hpp"
#include "hilbeq/macaulay.hpp"
#include "hilbeq/matrix.hpp"
#include "hilbeq/polyring.hpp"

namespace hilbeq {

/// Field-valued point (rho, M_0..M_n) of the quiver variety, with beta cached.
///   rho:  p(R) x dim S_R
///   M_i:  p(R+1) x p(R)
///   beta: p(R+1) x dim S_{R+1}
struct QuiverPoint {
  Field field = Field::rationals();
  int n = 0, R = 0;
  Matrix rho;
  std::vector<Matrix> M;
  Matrix beta;
};

/// Recomputes beta from (rho, M): beta(x_j z) = M_j rho(z), j the smallest
/// index of a variable dividing the monomial.
Matrix derive_beta(const QuiverPoint& q);

/// Point from a pair (I_R, I_{R+1}) with x_i I_R contained in I_{R+1}.
/// rho and beta are the quotient projections in the deterministic monomial
/// quotient bases; M_i = beta * mu_i * sigma with sigma the monomial section.
/// Throws Error(PreconditionFailed) naming the violated condition.
QuiverPoint build_representation(const GradedSubspace& IR, const GradedSubspace& IR1);
QuiverPoint build_representation(const GradedSubspace& IR, const GradedSubspace& IR1, const HilbertSpec& spec);

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
};

ValidationReport validate(const QuiverPoint& q);

/// rho' = g rho, M_i' = h M_i g^{-1}, beta' = h beta. Throws SingularMatrix.
QuiverPoint act(const Matrix& g, const Matrix& h, const QuiverPoint& q);

/// Degree-R coordinates as maximal minors of rho; degree R+1 as maximal minors
/// of the matrix with columns M_j rho(z) for v = x_j z.
std::pair<PluckerVector, PluckerVector> plucker_via_minors(const QuiverPoint& q);

/// (ker rho, ker beta).
std::pair<GradedSubspace, GradedSubspace> kernel_ideal(const QuiverPoint& q);

}  // namespace hilbeq
