#include "hilbeq/quiver.hpp"

#include "hilbeq/error.hpp"

namespace hilbeq {

namespace {

// Column of `m` selected by index.
Matrix column_matrix(const Matrix& m, std::size_t c) { return m.select_columns({c}); }

}  // namespace

Matrix derive_beta(const QuiverPoint& q) {
  const auto& src = monomial_basis(q.n, q.R);
  const auto& dst = monomial_basis(q.n, q.R + 1);
  const std::size_t rows = q.M.empty() ? 0 : q.M.front().rows();
  Matrix beta(q.field, rows, dst.size());
  for (std::size_t v = 0; v < dst.size(); ++v) {
    const Monomial& mono = dst[v];
    std::size_t j = 0;
    while (mono.e[j] == 0) ++j;
    Monomial z = mono;
    --z.e[j];
    const Matrix col = q.M[j] * column_matrix(q.rho, src.index_of(z));
    for (std::size_t r = 0; r < rows; ++r) beta(r, v) = col(r, 0);
  }
  return beta;
}

QuiverPoint build_representation(const GradedSubspace& IR, const GradedSubspace& IR1) {
  if (IR.n() != IR1.n() || IR1.d() != IR.d() + 1)
    throw Error(ErrorKind::PreconditionFailed, "I_R and I_{R+1} must live in consecutive degrees of one ring");
  if (IR.d() < 1) throw Error(ErrorKind::PreconditionFailed, "R must be at least 1");
  const int n = IR.n(), R = IR.d();
  if (IR.dim() > 0)
    for (int i = 0; i <= n; ++i) {
      const Matrix images = variable_map(IR.field(), n, R, i) * IR.basis();
      for (std::size_t c = 0; c < images.cols(); ++c)
        if (!IR1.contains(images.column(c)))
          throw Error(ErrorKind::PreconditionFailed, "x" + std::to_string(i) + " * I_R is not contained in I_{R+1}");
    }
  QuiverPoint q;
  q.field = IR.field();
  q.n = n;
  q.R = R;
  const QuotientProjection pr = quotient_projection(IR);
  const QuotientProjection pb = quotient_projection(IR1);
  q.rho = pr.N;
  q.beta = pb.N;
  const auto& src = monomial_basis(n, R);
  for (int i = 0; i <= n; ++i) {
    Matrix m(q.field, q.beta.rows(), q.rho.rows());
    for (std::size_t t = 0; t < pr.quotient_monomials.size(); ++t) {
      const std::size_t v = src.times_var(i, pr.quotient_monomials[t]);
      for (std::size_t r = 0; r < m.rows(); ++r) m(r, t) = q.beta(r, v);
    }
    q.M.push_back(std::move(m));
  }
  return q;
}

QuiverPoint build_representation(const GradedSubspace& IR, const GradedSubspace& IR1, const HilbertSpec& spec) {
  const auto pR = static_cast<std::size_t>(spec(IR.d()));
  const auto pR1 = static_cast<std::size_t>(spec(IR.d() + 1));
  if (IR.codim() != pR)
    throw Error(ErrorKind::PreconditionFailed,
                "codim I_R = " + std::to_string(IR.codim()) + " but p(R) = " + std::to_string(pR));
  if (IR1.codim() != pR1)
    throw Error(ErrorKind::PreconditionFailed,
                "codim I_{R+1} = " + std::to_string(IR1.codim()) + " but p(R+1) = " + std::to_string(pR1));
  return build_representation(IR, IR1);
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

ValidationReport validate(const QuiverPoint& q) {
  ValidationReport rep;
  const Field& f = q.field;
  const std::size_t pR = q.rho.rows();
  const std::size_t pR1 = q.beta.rows();

  const bool shapes = q.rho.cols() == monomial_basis(q.n, q.R).size() &&
                      q.beta.cols() == monomial_basis(q.n, q.R + 1).size() &&
                      q.M.size() == static_cast<std::size_t>(q.n + 1);
  bool m_shapes = shapes;
  if (shapes)
    for (const auto& m : q.M) m_shapes = m_shapes && m.rows() == pR1 && m.cols() == pR;
  rep.checks.push_back({"shapes", m_shapes, m_shapes ? "" : "matrix dimensions are inconsistent"});
  if (!m_shapes) return rep;

  const std::size_t rho_rank = rank(q.rho);
  rep.checks.push_back({"rho surjective", rho_rank == pR,
                        "rank " + std::to_string(rho_rank) + " of " + std::to_string(pR)});
  const std::size_t sum_rank = rank(Matrix::hstack(q.M));
  rep.checks.push_back({"sum M surjective", sum_rank == pR1,
                        "rank " + std::to_string(sum_rank) + " of " + std::to_string(pR1)});

  std::vector<Matrix> rho_mu;  // rho * mu_{j, R-1}
  for (int j = 0; j <= q.n; ++j) rho_mu.push_back(q.rho * variable_map(f, q.n, q.R - 1, j));
  for (int i = 0; i <= q.n; ++i)
    for (int j = i + 1; j <= q.n; ++j) {
      const bool ok = q.M[i] * rho_mu[j] == q.M[j] * rho_mu[i];
      rep.checks.push_back({"commute M" + std::to_string(i) + " M" + std::to_string(j), ok, ""});
    }
  for (int i = 0; i <= q.n; ++i) {
    const bool ok = q.beta * variable_map(f, q.n, q.R, i) == q.M[i] * q.rho;
    rep.checks.push_back({"beta mu" + std::to_string(i) + " = M" + std::to_string(i) + " rho", ok, ""});
  }
  return rep;
}

QuiverPoint act(const Matrix& g, const Matrix& h, const QuiverPoint& q) {
  if (g.rows() != q.rho.rows() || h.rows() != q.beta.rows())
    throw Error(ErrorKind::DimensionMismatch, "group element of the wrong size");
  const Matrix g_inv = inverse(g);
  inverse(h);  // throws SingularMatrix when h is not invertible
  QuiverPoint out = q;
  out.rho = g * q.rho;
  out.beta = h * q.beta;
  for (auto& m : out.M) m = h * m * g_inv;
  return out;
}

std::pair<PluckerVector, PluckerVector> plucker_via_minors(const QuiverPoint& q) {
  return {plucker_from_matrix(q.n, q.R, q.rho), plucker_from_matrix(q.n, q.R + 1, derive_beta(q))};
}

std::pair<GradedSubspace, GradedSubspace> kernel_ideal(const QuiverPoint& q) {
  return {GradedSubspace::from_rows(q.n, q.R, kernel_basis(q.rho).transpose()),
          GradedSubspace::from_rows(q.n, q.R + 1, kernel_basis(q.beta).transpose())};
}

}  // namespace hilbeq
