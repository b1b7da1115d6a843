#include "hilbeq/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "hilbeq/corpus.hpp"
#include "hilbeq/equations.hpp"
#include "hilbeq/error.hpp"
#include "hilbeq/grassmann.hpp"
#include "hilbeq/macaulay.hpp"
#include "hilbeq/membership.hpp"
#include "hilbeq/polyring.hpp"
#include "hilbeq/quiver.hpp"
#include "hilbeq/rng.hpp"

namespace hilbeq::acceptance {

namespace {

constexpr std::uint32_t kLargePrime = 1000003;

struct Check {
  bool ok = true;
  std::string first_failure;
  std::size_t failures = 0;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) first_failure = what;
    ok = false;
    ++failures;
  }
};

CriterionResult timed(const std::string& id, const std::string& title,
                      const std::function<std::string(Check&)>& body) {
  CriterionResult res{id, title, false, "", 0};
  const auto t0 = std::chrono::steady_clock::now();
  Check check;
  try {
    res.detail = body(check);
    res.passed = check.ok;
    if (!check.ok) res.detail += "; " + std::to_string(check.failures) + " failure(s), first: " + check.first_failure;
  } catch (const std::exception& e) {
    res.passed = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

bool has_equation_certificate(const Verdict& v) {
  return std::any_of(v.certificates.begin(), v.certificates.end(),
                     [](const Certificate& c) { return c.kind != Certificate::Kind::Oracle; });
}

const HilbertSpec& line_plus_two() {
  static const HilbertSpec s = HilbertSpec::from_decomposition({1, 0});
  return s;
}

// Members and nonmembers for t+2 on P^2 at R = 2 over Q and F_1000003.
std::vector<CorpusPoint> a1_corpus(Level level) {
  std::vector<CorpusPoint> out;
  std::uint64_t seed = 11;
  for (const Field& f : {Field::rationals(), Field::prime(kLargePrime)}) {
    CorpusSpec cs;
    cs.n = 2;
    cs.spec = line_plus_two();
    cs.R = 2;
    cs.field = f;
    cs.seed = seed++;
    cs.members_monomial = 1000;
    cs.members_gl = level == Level::Full ? 20 : 4;
    cs.nonmembers = level == Level::Full ? 25 : 5;
    auto part = build_corpus(cs);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

const EquationSet& a1_equations() {
  static const EquationSet eqs = make_equation_set(line_plus_two(), 2, 2, 200, 1);
  return eqs;
}

struct AgreementCounts {
  std::size_t members = 0, nonmembers = 0;
};

// Shared verdict-agreement loop of A1 and A9.
AgreementCounts check_agreement(const std::vector<CorpusPoint>& corpus, const EquationSet& eqs, Check& check) {
  AgreementCounts counts;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& pt = corpus[i];
    const std::string tag = "entry " + std::to_string(i) + " (" + pt.source + ", " + pt.IR1.field().to_string() + ")";
    const CrossCheckReport rep = cross_check(pt.IR1, eqs, false, false);
    const Verdict& v = rep.verdict;
    check.expect(rep.consistent, tag + ": inconsistent");
    if (pt.kind == CorpusPoint::Kind::Member) {
      ++counts.members;
      check.expect(v.decomposable && v.codim_ok && v.E_ok && v.Fquad_ok && v.oracle_ok, tag + ": member rejected: " +
                                                                                            describe(v));
      check.expect(v.relations_checked >= std::min<std::size_t>(200, eqs.plucker_relations.size()),
                   tag + ": too few Plücker relations checked");
    } else {
      ++counts.nonmembers;
      check.expect(!v.oracle_ok, tag + ": nonmember passes the oracle");
      check.expect(!v.equations_ok(), tag + ": nonmember passes every equation");
      check.expect(has_equation_certificate(v), tag + ": no equation certificate");
    }
  }
  return counts;
}

std::vector<HilbertSpec> admissible_family() {
  std::vector<HilbertSpec> out;
  std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& a, int max_entry, int left) {
    if (!a.empty()) out.push_back(HilbertSpec::from_decomposition(a));
    if (left == 0) return;
    for (int v = 0; v <= max_entry; ++v) {
      a.push_back(v);
      rec(a, v, left - 1);
      a.pop_back();
    }
  };
  std::vector<int> a;
  rec(a, 3, 4);
  return out;
}

GradedSubspace random_subspace(const Field& f, int n, int d, SplitMix64& rng) {
  const std::size_t dim = monomial_basis(n, d).size();
  const std::size_t k = rng.below(dim + 1);
  if (rng.below(2) == 0) {
    std::vector<std::size_t> idx(dim);
    std::iota(idx.begin(), idx.end(), 0);
    rng.shuffle(idx);
    std::vector<Monomial> mons;
    for (std::size_t i = 0; i < k; ++i) mons.push_back(monomial_basis(n, d)[idx[i]]);
    return GradedSubspace::from_monomials(f, n, d, mons);
  }
  Matrix rows(f, k, dim);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < dim; ++c) rows(r, c) = random_scalar(f, rng);
  if (k == 0) return GradedSubspace(f, n, d);
  return GradedSubspace::from_rows(n, d, rows);
}

}  // namespace

CriterionResult run_a1(Level level) {
  return timed("A1", "equations agree with the Gotzmann oracle (t+2, P^2, R=2)", [&](Check& check) {
    const EquationSet& eqs = a1_equations();
    check.expect(eqs.plucker_relations.size() >= 200, "fewer than 200 Plücker relations sampled");
    const auto corpus = a1_corpus(level);
    const AgreementCounts c = check_agreement(corpus, eqs, check);
    if (level == Level::Full) {
      check.expect(c.members >= 50, "fewer than 50 members");
      check.expect(c.nonmembers >= 50, "fewer than 50 nonmembers");
    }
    std::ostringstream os;
    os << c.members << " members, " << c.nonmembers << " nonmembers, " << eqs.E.forms.size() << " E forms, "
       << eqs.plucker_relations.size() << " Plücker relations";
    return os.str();
  });
}

CriterionResult run_a2(Level) {
  return timed("A2", "R = r-1 admits a non-Hilbert point (t+2, P^2, R=1)", [&](Check& check) {
    const HilbertSpec& spec = line_plus_two();
    ExportOptions opt;
    opt.sample_quadrics = std::nullopt;
    const EquationBundle b = build_equations(spec, 2, 1, opt);
    check.expect(b.E.stats.generated > 0, "no E forms generated");
    check.expect(b.E.forms.empty(), "a nonzero E form at R=1");
    check.expect(b.quadrics.empty(), "a nonzero F cross quadric at R=1");

    const Field q = Field::rationals();
    const auto gens = parse_polynomials("x0^2, x1^2", 2, q);
    const GradedSubspace I2 = ideal_degree_piece(gens, 2, 2, q);
    const EquationSet eqs = make_equation_set(spec, 2, 1, 200, 1);
    const CrossCheckReport rep = cross_check(I2, eqs, true, false);
    check.expect(rep.verdict.equations_ok(), "witness fails an equation: " + describe(rep.verdict));
    check.expect(rep.verdict.oracle_ok, "witness fails the (1,2) colon check");
    for (int d = 4; d <= 8; ++d) {
      const std::size_t h = ideal_degree_piece(gens, 2, d, q).codim();
      check.expect(h == 4, "Hilbert function of (x0^2, x1^2) at " + std::to_string(d) + " is " + std::to_string(h));
      check.expect(static_cast<std::int64_t>(h) != spec(d), "Hilbert function agrees with t+2");
    }
    std::ostringstream os;
    os << b.E.stats.generated << " E expansions all zero, " << b.F.entries.size()
       << " F symbols with no nonzero cross quadric; witness has constant Hilbert function 4";
    return os.str();
  });
}

CriterionResult run_a3(Level) {
  return timed("A3", "Hilb^1(P^1) is the conic P_{x0^2} P_{x1^2} = P_{x0x1}^2", [&](Check& check) {
    const HilbertSpec spec = HilbertSpec::from_decomposition({0});
    ExportOptions opt;
    opt.sample_quadrics = std::nullopt;
    const EquationBundle b = build_equations(spec, 1, 1, opt);
    EquationForm conic(EquationForm::Kind::Quadratic);
    conic.add(1, 0, 2);
    conic.add(-1, 1, 1);
    conic.finalize();
    conic.normalize_sign();
    check.expect(b.quadrics.size() == 1, std::to_string(b.quadrics.size()) + " distinct quadrics, expected 1");
    if (!b.quadrics.empty()) check.expect(b.quadrics.front().form == conic, "the quadric is not the conic");

    const EquationSet eqs = make_equation_set(spec, 1, 1, 200, 1);
    const Field q = Field::rationals();
    SplitMix64 rng(3);
    std::size_t on = 0, off = 0;
    while (on < 20) {
      const Scalar a = random_scalar(q, rng, 9), c = random_scalar(q, rng, 9);
      if (a.is_zero() && c.is_zero()) continue;
      const PluckerVector v(q, 1, 2, 1, {a * a, a * c, c * c});
      const CrossCheckReport rep = cross_check(v, eqs, false, false);
      check.expect(rep.consistent && rep.verdict.equations_ok() && rep.verdict.oracle_ok, "conic point rejected");
      ++on;
    }
    while (off < 20) {
      const Scalar u = random_scalar(q, rng, 9), w = random_scalar(q, rng, 9), t = random_scalar(q, rng, 9);
      if (u * t == w * w) continue;
      const PluckerVector v(q, 1, 2, 1, {u, w, t});
      const CrossCheckReport rep = cross_check(v, eqs, false, false);
      check.expect(rep.consistent && !rep.verdict.equations_ok() && !rep.verdict.oracle_ok, "off-conic point accepted");
      ++off;
    }
    return "1 quadric after deduplication; 20 conic points pass, 20 off-conic points fail";
  });
}

CriterionResult run_a4(Level level) {
  return timed("A4", "constant polynomial 2 on P^2: E empty, quadrics match the oracle", [&](Check& check) {
    const HilbertSpec spec = HilbertSpec::from_decomposition({0, 0});
    const EquationSet eqs = make_equation_set(spec, 2, 2, 200, 1);
    check.expect(eqs.E.forms.empty(), "E is not empty");
    CorpusSpec cs;
    cs.n = 2;
    cs.spec = spec;
    cs.R = 2;
    cs.seed = 21;
    cs.members_monomial = 1000;
    cs.members_gl = level == Level::Full ? 30 : 6;
    cs.nonmembers = level == Level::Full ? 30 : 6;
    const auto corpus = build_corpus(cs);
    std::size_t members = 0, nonmembers = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& pt = corpus[i];
      const CrossCheckReport rep = cross_check(pt.IR1, eqs, false, false);
      const std::string tag = "entry " + std::to_string(i) + " (" + pt.source + ")";
      check.expect(rep.consistent, tag + ": inconsistent");
      const bool member = pt.kind == CorpusPoint::Kind::Member;
      (member ? members : nonmembers)++;
      check.expect(rep.verdict.equations_ok() == member, tag + ": verdict " + describe(rep.verdict));
      check.expect(rep.verdict.oracle_ok == member, tag + ": oracle disagrees with corpus label");
    }
    if (level == Level::Full) {
      check.expect(members >= 30, "fewer than 30 members");
      check.expect(nonmembers >= 30, "fewer than 30 nonmembers");
    }
    return std::to_string(members) + " members, " + std::to_string(nonmembers) + " nonmembers";
  });
}

CriterionResult run_a5(Level) {
  return timed("A5", "p(R+1) = p(R)^{<R>} for R in [r, r+5]", [&](Check& check) {
    const auto family = admissible_family();
    check.expect(family.size() >= 20, "fewer than 20 polynomials");
    std::size_t pairs = 0;
    for (const auto& spec : family)
      for (int R = spec.gotzmann(); R <= spec.gotzmann() + 5; ++R) {
        ++pairs;
        check.expect(spec(R + 1) == macaulay_upper(spec(R), R),
                     spec.to_string() + " at R=" + std::to_string(R));
      }
    return std::to_string(family.size()) + " polynomials, " + std::to_string(pairs) + " (p, R) pairs";
  });
}

CriterionResult run_a6(Level level) {
  return timed("A6", "Macaulay growth and Green restriction bounds", [&](Check& check) {
    const Field f = Field::prime(kLargePrime);
    SplitMix64 rng(6);
    const std::size_t count = level == Level::Full ? 1000 : 200;
    for (std::size_t i = 0; i < count; ++i) {
      const int n = static_cast<int>(rng.between(1, 3)), d = static_cast<int>(rng.between(1, 4));
      const GradedSubspace w = random_subspace(f, n, d, rng);
      const auto c = static_cast<std::int64_t>(w.codim());
      const std::string tag = "subspace " + std::to_string(i) + " (n=" + std::to_string(n) + ", d=" +
                              std::to_string(d) + ", codim " + std::to_string(c) + ")";
      const auto grown = static_cast<std::int64_t>(multiply_by_S1(w).codim());
      check.expect(grown <= macaulay_upper(c, d), tag + ": Macaulay bound violated");
      std::int64_t best = INT64_MAX;
      for (int draw = 0; draw < 5; ++draw) {
        std::vector<Scalar> h;
        for (int j = 0; j < n; ++j) h.push_back(random_scalar(f, rng));
        best = std::min(best, static_cast<std::int64_t>(restrict_to_hyperplane(w, h).codim()));
      }
      check.expect(best <= macaulay_lower(c, d), tag + ": Green bound violated on 5 hyperplanes");
    }
    return std::to_string(count) + " random subspaces over " + f.to_string();
  });
}

CriterionResult run_a7(Level level) {
  return timed("A7", "quiver points validate, match Plücker coordinates and carry the GLxGL action", [&](Check& check) {
    const HilbertSpec& spec = line_plus_two();
    const auto corpus = a1_corpus(level);
    const int actions = level == Level::Full ? 10 : 2;
    std::size_t points = 0;
    SplitMix64 rng(7);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& pt = corpus[i];
      if (pt.kind != CorpusPoint::Kind::Member) continue;
      ++points;
      const std::string tag = "member " + std::to_string(i) + " (" + pt.source + ")";
      const QuiverPoint q = build_representation(*pt.IR, pt.IR1, spec);
      check.expect(validate(q).ok(), tag + ": validation failed");
      const auto [pr, pr1] = plucker_via_minors(q);
      check.expect(proportional(pr, plucker_from_subspace(*pt.IR)), tag + ": degree R minors disagree");
      check.expect(proportional(pr1, plucker_from_subspace(pt.IR1)), tag + ": degree R+1 minors disagree");
      for (int k = 0; k < actions; ++k) {
        const Matrix g = random_invertible(q.field, q.rho.rows(), rng);
        const Matrix h = random_invertible(q.field, q.beta.rows(), rng);
        const QuiverPoint moved = act(g, h, q);
        check.expect(validate(moved).ok(), tag + ": translate fails validation");
        const auto [kr, kr1] = kernel_ideal(moved);
        check.expect(kr == *pt.IR && kr1 == pt.IR1, tag + ": translate changes the kernels");
      }
    }
    return std::to_string(points) + " points, " + std::to_string(actions) + " GLxGL actions each";
  });
}

CriterionResult run_a8(Level level) {
  return timed("A8", "generic conductor is k-rational exactly on the Hilbert scheme", [&](Check& check) {
    const HilbertSpec& spec = line_plus_two();
    const int R = 2;
    const auto pR = static_cast<std::size_t>(spec(R));
    std::size_t members = 0;
    for (const auto& pt : a1_corpus(level)) {
      if (pt.kind != CorpusPoint::Kind::Member) continue;
      ++members;
      const GenericColonResult g = generic_colon(pt.IR1);
      const std::string tag = "member " + std::to_string(members) + " (" + pt.source + ")";
      check.expect(g.codim == pR, tag + ": conductor codim " + std::to_string(g.codim));
      check.expect(g.k_rational, tag + ": conductor not k-rational");
      check.expect(g.rational_basis && *g.rational_basis == colon_by_S1(pt.IR1), tag + ": conductor != (I:S_1)");
    }

    const EquationSet& eqs = a1_equations();
    const std::size_t draws = level == Level::Full ? 500 : 60;
    const std::size_t want = level == Level::Full ? 20 : 4;
    SplitMix64 rng(8);
    std::size_t found = 0, tried = 0;
    for (; tried < draws && found < want; ++tried) {
      const Field f = tried % 2 == 0 ? Field::rationals() : Field::prime(kLargePrime);
      GradedSubspace w = tried % 4 == 3 ? random_nonmember(spec, 2, R, f, rng.next()).IR1
                                        : linear_times_hyperplane(2, R, f, rng);
      if (w.codim() != static_cast<std::size_t>(spec(R + 1))) continue;
      const Verdict v = equation_verdict(w, eqs);
      if (!v.E_ok || gotzmann_oracle(w, spec, R).member) continue;
      ++found;
      const std::string tag = "H-nonmember " + std::to_string(found);
      const GenericColonResult g = generic_colon(w);
      check.expect(!g.k_rational, tag + ": conductor is k-rational");
      check.expect(!v.Fquad_ok, tag + ": F-matrix has rank <= 1");
      const CrossCheckReport rep = cross_check(w, eqs, false, false);
      check.expect(rep.consistent, tag + ": inconsistent");
    }
    check.expect(found > 0, "no nonmember of the Hilbert scheme inside H found in " + std::to_string(tried) + " draws");
    return std::to_string(members) + " members; " + std::to_string(found) + " H-nonmembers in " +
           std::to_string(tried) + " draws";
  });
}

CriterionResult run_a9(Level level) {
  return timed("A9", "verdicts agree over F_2, F_3 and F_1000003 on monomial points", [&](Check& check) {
    const HilbertSpec& spec = line_plus_two();
    const EquationSet& eqs = a1_equations();
    const std::size_t seeds = level == Level::Full ? 20 : 5;
    std::size_t members = 0, nonmembers = 0;
    for (const std::uint32_t p : {2u, 3u, kLargePrime}) {
      const Field f = Field::prime(p);
      auto corpus = monomial_members(spec, 2, 2, f);
      for (std::size_t s = 0; s < seeds; ++s) {
        GradedSubspace w = random_monomial_nonmember(spec, 2, 2, f, 900 + s).IR1;
        const bool seen = std::any_of(corpus.begin(), corpus.end(), [&](const CorpusPoint& c) { return c.IR1 == w; });
        if (!seen) corpus.push_back({CorpusPoint::Kind::Nonmember, "random", std::nullopt, std::move(w)});
      }
      const AgreementCounts c = check_agreement(corpus, eqs, check);
      members += c.members;
      nonmembers += c.nonmembers;
    }
    return std::to_string(members) + " members, " + std::to_string(nonmembers) + " nonmembers over 3 fields";
  });
}

std::vector<CriterionResult> run_all(Level level, const std::vector<std::string>& only) {
  const std::vector<std::pair<std::string, CriterionResult (*)(Level)>> all = {
      {"A1", run_a1}, {"A2", run_a2}, {"A3", run_a3}, {"A4", run_a4}, {"A5", run_a5},
      {"A6", run_a6}, {"A7", run_a7}, {"A8", run_a8}, {"A9", run_a9}};
  std::vector<CriterionResult> out;
  for (const auto& [id, fn] : all)
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) out.push_back(fn(level));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << std::left << std::setw(4) << r.id << (r.passed ? "PASS  " : "FAIL  ") << r.title << "  (" << r.detail << ")  "
     << std::fixed << std::setprecision(2) << r.seconds << "s";
  return os.str();
}

}  // namespace hilbeq::acceptance
