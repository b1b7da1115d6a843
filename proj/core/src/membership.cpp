#include "hilbeq/membership.hpp"

#include <sstream>

#include "hilbeq/error.hpp"

namespace hilbeq {

namespace {

std::size_t value_at(const HilbertSpec& spec, int d) {
  const auto v = spec(d);
  if (v < 0) throw Error(ErrorKind::NotAdmissible, "negative Hilbert polynomial value");
  return static_cast<std::size_t>(v);
}

void require_degree(const GradedSubspace& IR1, int R) {
  if (IR1.d() != R + 1)
    throw Error(ErrorKind::DimensionMismatch,
                "subspace lives in degree " + std::to_string(IR1.d()) + ", expected R+1 = " + std::to_string(R + 1));
}

void check_gotzmann(const HilbertSpec& spec, int R, bool allow) {
  if (R < spec.gotzmann() && !allow)
    throw Error(ErrorKind::BelowGotzmann, "R = " + std::to_string(R) + " is below the Gotzmann number " +
                                              std::to_string(spec.gotzmann()));
}

Verdict verdict_with_decomposition(const PluckerVector& point, const EquationSet& eqs, bool decomposable) {
  Verdict v;
  const std::size_t pR1 = value_at(eqs.spec, eqs.R + 1);
  v.codim = point.r();
  if (point.n() != eqs.n || point.d() != eqs.R + 1)
    throw Error(ErrorKind::DimensionMismatch, "point does not live in S_{R+1} of this ring");
  v.codim_ok = point.r() == pR1;
  if (!v.codim_ok) {
    v.certificates.push_back({Certificate::Kind::Codimension, "quotient rank differs from p(R+1)", {}, {}, {}, pR1,
                              point.r()});
    return v;
  }
  v.decomposable = decomposable;
  if (!decomposable)
    v.certificates.push_back({Certificate::Kind::NotDecomposable,
                              "coordinates are not the Plücker vector of any subspace", {}, {}, {}, {}, {}});
  for (const auto& rel : eqs.plucker_relations) {
    ++v.relations_checked;
    const Scalar val = rel.evaluate(point.coords(), point.field());
    if (!val.is_zero()) {
      v.decomposable = false;
      v.certificates.push_back({Certificate::Kind::PluckerRelation, "Plücker relation does not vanish", rel, {}, val,
                                {}, {}});
      break;
    }
  }
  v.E_ok = true;
  for (const auto& form : eqs.E.forms) {
    const Scalar val = form.evaluate(point.coords(), point.field());
    if (!val.is_zero()) {
      v.E_ok = false;
      v.certificates.push_back({Certificate::Kind::LinearForm, "linear form E does not vanish", form, {}, val, {}, {}});
      break;
    }
  }
  const CrossQuadricResult cq = cross_quadric_residual(f_matrix(eqs.F, point));
  v.Fquad_ok = cq.rank_at_most_one;
  if (!v.Fquad_ok)
    v.certificates.push_back({Certificate::Kind::CrossQuadric, "F-matrix has a nonzero 2x2 minor", {}, cq.witness,
                              cq.witness->value, {}, {}});
  return v;
}

struct Conductor {
  bool h_ok = false;
  bool k_rational = false;
  std::size_t codim = 0;
};

Conductor conductor_of(const GradedSubspace& IR1, const HilbertSpec& spec, int R) {
  const GenericColonResult g = generic_colon(IR1);
  Conductor c;
  c.codim = g.codim;
  c.k_rational = g.k_rational;
  c.h_ok = spec.is_constant() || g.codim <= value_at(spec, R);
  return c;
}

void assert_agreement(CrossCheckReport& rep, bool check_h) {
  const Verdict& v = rep.verdict;
  auto fail = [&](const std::string& what) {
    rep.consistent = false;
    rep.violations.push_back(what);
  };
  if (v.equations_ok() != v.oracle_ok) fail("equation verdict differs from the Gotzmann oracle");
  if (!check_h) return;
  if (v.E_ok != v.h_ok) fail("E forms vanish iff the point lies in H: violated");
  if (v.h_ok) {
    if (v.oracle_ok != v.Fquad_ok) fail("inside H: oracle and F-quadric verdict differ");
    if (v.Fquad_ok != v.conductor_k_rational) fail("inside H: F-quadric verdict and conductor rationality differ");
  }
}

void finish(CrossCheckReport& rep, const OracleResult* oracle, bool throw_on_inconsistency) {
  if (oracle && !oracle->member) {
    Certificate c{Certificate::Kind::Oracle, "", {}, {}, {}, {}, {}};
    if (oracle->codim != oracle->expected_codim) {
      c.message = "codim I_{R+1} differs from p(R+1)";
      c.expected = oracle->expected_codim;
      c.actual = oracle->codim;
    } else {
      c.message = "codim (I_{R+1} : S_1) differs from p(R)";
      c.expected = oracle->expected_colon_codim;
      c.actual = oracle->colon_codim;
    }
    rep.verdict.certificates.push_back(std::move(c));
  }
  if (!rep.consistent && throw_on_inconsistency) {
    std::string msg = describe(rep.verdict);
    for (const auto& s : rep.violations) msg += "; " + s;
    throw Error(ErrorKind::InconsistencyDetected, msg);
  }
}

}  // namespace

OracleResult gotzmann_oracle(const GradedSubspace& IR1, const HilbertSpec& spec, int R, bool allow_below_gotzmann) {
  check_gotzmann(spec, R, allow_below_gotzmann);
  require_degree(IR1, R);
  OracleResult res;
  res.expected_codim = value_at(spec, R + 1);
  res.expected_colon_codim = value_at(spec, R);
  res.codim = IR1.codim();
  res.colon_codim = colon_by_S1(IR1).codim();
  res.member = res.codim == res.expected_codim && res.colon_codim == res.expected_colon_codim;
  return res;
}

HResult h_membership(const GradedSubspace& IR1, const HilbertSpec& spec, int R) {
  require_degree(IR1, R);
  const std::size_t pR1 = value_at(spec, R + 1);
  if (IR1.codim() != pR1)
    throw Error(ErrorKind::WrongCodimension,
                "codim I_{R+1} = " + std::to_string(IR1.codim()) + " but p(R+1) = " + std::to_string(pR1));
  const Conductor c = conductor_of(IR1, spec, R);
  return {c.h_ok, c.codim};
}

EquationSet make_equation_set(const HilbertSpec& spec, int n, int R, std::size_t plucker_samples, std::uint64_t seed) {
  EquationSet s;
  s.spec = spec;
  s.n = n;
  s.R = R;
  s.E = gen_E(spec, n, R);
  s.F = gen_F_symbols(spec, n, R);
  s.plucker_relations =
      plucker_relations_sample(monomial_basis(n, R + 1).size(), value_at(spec, R + 1), plucker_samples, seed);
  return s;
}

Verdict equation_verdict(const PluckerVector& point, const EquationSet& eqs) {
  bool decomposable = point.provenance() == PluckerVector::Provenance::FromSubspace;
  if (!decomposable) decomposable = decomposable_check(point).decomposable;
  return verdict_with_decomposition(point, eqs, decomposable);
}

Verdict equation_verdict(const GradedSubspace& IR1, const EquationSet& eqs) {
  require_degree(IR1, eqs.R);
  const std::size_t pR1 = value_at(eqs.spec, eqs.R + 1);
  if (IR1.codim() != pR1) {
    Verdict v;
    v.codim = IR1.codim();
    v.certificates.push_back({Certificate::Kind::Codimension, "codim I_{R+1} differs from p(R+1)", {}, {}, {}, pR1,
                              IR1.codim()});
    return v;
  }
  return verdict_with_decomposition(plucker_from_subspace(IR1), eqs, true);
}

CrossCheckReport cross_check(const GradedSubspace& IR1, const EquationSet& eqs, bool allow_below_gotzmann,
                             bool throw_on_inconsistency) {
  check_gotzmann(eqs.spec, eqs.R, allow_below_gotzmann);
  CrossCheckReport rep;
  rep.verdict = equation_verdict(IR1, eqs);
  const OracleResult oracle = gotzmann_oracle(IR1, eqs.spec, eqs.R, true);
  rep.verdict.oracle_ok = oracle.member;
  rep.verdict.oracle_colon_codim = oracle.colon_codim;
  if (rep.verdict.codim_ok) {
    const Conductor c = conductor_of(IR1, eqs.spec, eqs.R);
    rep.verdict.h_ok = c.h_ok;
    rep.verdict.conductor_k_rational = c.k_rational;
    rep.verdict.conductor_codim = c.codim;
  }
  if (eqs.R >= eqs.spec.gotzmann()) assert_agreement(rep, rep.verdict.codim_ok);
  finish(rep, &oracle, throw_on_inconsistency);
  return rep;
}

CrossCheckReport cross_check(const PluckerVector& point, const EquationSet& eqs, bool allow_below_gotzmann,
                             bool throw_on_inconsistency) {
  check_gotzmann(eqs.spec, eqs.R, allow_below_gotzmann);
  std::optional<GradedSubspace> subspace = point.source();
  if (!subspace) subspace = decomposable_check(point).subspace;
  CrossCheckReport rep;
  rep.verdict = verdict_with_decomposition(point, eqs, subspace.has_value());
  std::optional<OracleResult> oracle;
  if (subspace) {
    oracle = gotzmann_oracle(*subspace, eqs.spec, eqs.R, true);
    rep.verdict.oracle_ok = oracle->member;
    rep.verdict.oracle_colon_codim = oracle->colon_codim;
    if (rep.verdict.codim_ok) {
      const Conductor c = conductor_of(*subspace, eqs.spec, eqs.R);
      rep.verdict.h_ok = c.h_ok;
      rep.verdict.conductor_k_rational = c.k_rational;
      rep.verdict.conductor_codim = c.codim;
    }
  }
  if (eqs.R >= eqs.spec.gotzmann()) assert_agreement(rep, subspace.has_value() && rep.verdict.codim_ok);
  finish(rep, oracle ? &*oracle : nullptr, throw_on_inconsistency);
  return rep;
}

std::string describe(const Verdict& v) {
  std::ostringstream os;
  os << std::boolalpha << "decomposable=" << v.decomposable << " codim_ok=" << v.codim_ok << " E_ok=" << v.E_ok
     << " Fquad_ok=" << v.Fquad_ok << " oracle_ok=" << v.oracle_ok << " h_ok=" << v.h_ok
     << " conductor_k_rational=" << v.conductor_k_rational;
  return os.str();
}

}  // namespace hilbeq
