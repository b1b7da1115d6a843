#include <doctest.h>

#include <functional>
#include <set>

#include "hilbeq/corpus.hpp"
#include "hilbeq/error.hpp"
#include "hilbeq/membership.hpp"
#include "oracles.hpp"

using namespace hilbeq;

namespace {

const Field Q = Field::rationals();
const Field P = Field::prime(kDefaultTestPrime);

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::PreconditionFailed;
}

// Exponent vectors of a monomial subspace, or nullopt when some basis row is not a single monomial.
std::optional<std::set<std::vector<int>>> monomials_of(const GradedSubspace& w) {
  const MonomialBasis& b = monomial_basis(w.n(), w.d());
  std::set<std::vector<int>> out;
  for (std::size_t r = 0; r < w.rows().rows(); ++r) {
    std::size_t nonzero = 0, at = 0;
    for (std::size_t c = 0; c < w.rows().cols(); ++c)
      if (!w.rows()(r, c).is_zero()) {
        ++nonzero;
        at = c;
      }
    if (nonzero != 1) return std::nullopt;
    out.insert(b[at].e);
  }
  return out;
}

}  // namespace

TEST_SUITE("members") {
  TEST_CASE("lex segment for t+2 on P^2 at R = 2") {
    const auto [IR, IR1] = lex_segment_point(HilbertSpec::parse("t+2"), 2, 2);
    CHECK(IR == GradedSubspace::from_monomials(Q, 2, 2, {Monomial{{2, 0, 0}}, Monomial{{1, 1, 0}}}));
    CHECK(IR1 == GradedSubspace::from_monomials(Q, 2, 3,
                                                {Monomial{{3, 0, 0}}, Monomial{{2, 1, 0}}, Monomial{{2, 0, 1}},
                                                 Monomial{{1, 2, 0}}, Monomial{{1, 1, 1}}}));
    CHECK(kind_of([] { lex_segment_point(HilbertSpec::parse("t+2"), 2, 1); }) == ErrorKind::BelowGotzmann);
  }

  TEST_CASE("catalog entries have the advertised Hilbert function") {
    for (const char* p : {"t+2", "1", "2", "3", "4"}) {
      const HilbertSpec spec = HilbertSpec::parse(p);
      for (int n : {1, 2}) {
        if (n == 1 && !spec.is_constant()) continue;
        CAPTURE(p);
        CAPTURE(n);
        for (const auto& gens : saturated_examples(spec, n)) {
          for (int d = spec.gotzmann(); d <= spec.gotzmann() + 2; ++d)
            CHECK(ideal_degree_piece(gens, n, d, Q).codim() == static_cast<std::size_t>(spec(d)));
        }
      }
    }
    CHECK(kind_of([] { saturated_examples(HilbertSpec::parse("3t+1"), 3); }) == ErrorKind::UnknownCatalogEntry);
  }

  TEST_CASE("monomial members pass the test-side monomial count") {
    const HilbertSpec spec = HilbertSpec::parse("t+2");
    const auto pts = monomial_members(spec, 2, 2, Q);
    CHECK(pts.size() > 3);
    for (const auto& pt : pts) {
      REQUIRE(pt.IR);
      const auto I = monomials_of(pt.IR1);
      REQUIRE(I);
      CHECK(10 - I->size() == 5);
      CHECK(6 - oracle::monomial_colon_S1(*I, 2, 2).size() == 4);
      CHECK(pt.IR1.contains(multiply_by_S1(*pt.IR)));
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK_FALSE(pts[i].IR1 == pts[j].IR1);
  }

  TEST_CASE("GL translates stay members") {
    const HilbertSpec spec = HilbertSpec::parse("t+2");
    const PointPair base = lex_segment_point(spec, 2, 2, P);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const PointPair moved = gl_translate(base, P, seed);
      CHECK(gotzmann_oracle(moved.second, spec, 2).member);
      CHECK(moved.second.contains(multiply_by_S1(moved.first)));
      CHECK(moved.first.codim() == 4);
    }
  }

  TEST_CASE("random invertible matrices") {
    SplitMix64 rng(61);
    for (int t = 0; t < 50; ++t) {
      const Matrix g = random_invertible(Q, 3, rng);
      CHECK_FALSE(determinant(g).is_zero());
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          const mpq_class& v = g(i, j).rational();
          CHECK(v.get_den() == 1);
          CHECK(v >= -3);
          CHECK(v <= 3);
        }
    }
  }
}

TEST_SUITE("nonmembers") {
  TEST_CASE("catalog nonmember") {
    const GradedSubspace w = catalog_nonmember();
    CHECK(w.dim() == 5);
    const auto I = monomials_of(w);
    REQUIRE(I);
    CHECK(6 - oracle::monomial_colon_S1(*I, 2, 2).size() != 4);
  }

  TEST_CASE("random nonmembers fail the oracle with the right codimension") {
    const HilbertSpec spec = HilbertSpec::parse("t+2");
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Nonmember nm = random_nonmember(spec, 2, 2, P, seed);
      CHECK(nm.IR1.codim() == 5);
      CHECK(nm.colon_codim != 4);
      CHECK(colon_by_S1(nm.IR1).codim() == nm.colon_codim);
      const Nonmember mono = random_monomial_nonmember(spec, 2, 2, P, seed);
      const auto I = monomials_of(mono.IR1);
      REQUIRE(I);
      CHECK(6 - oracle::monomial_colon_S1(*I, 2, 2).size() == mono.colon_codim);
      CHECK(mono.colon_codim != 4);
    }
  }

  TEST_CASE("no nonmembers exist when every subspace is a member") {
    // t+1 on P^1 forces I = 0 in every degree.
    const HilbertSpec spec = HilbertSpec::parse("t+1");
    CHECK(kind_of([&] { random_nonmember(spec, 1, 1, P, 1); }) == ErrorKind::ExhaustedRetries);
    CHECK(kind_of([&] { random_monomial_nonmember(spec, 1, 1, P, 1); }) == ErrorKind::ExhaustedRetries);
  }

  TEST_CASE("l * ker(lambda) has the H-sized codimension") {
    SplitMix64 rng(62);
    for (int t = 0; t < 10; ++t) CHECK(linear_times_hyperplane(2, 2, P, rng).codim() == 5);
  }
}

TEST_SUITE("corpus") {
  TEST_CASE("build_corpus labels entries truthfully and is deterministic") {
    CorpusSpec cs;
    cs.spec = HilbertSpec::parse("t+2");
    cs.R = 2;
    cs.field = P;
    cs.seed = 63;
    cs.members_gl = 5;
    cs.nonmembers = 6;
    const auto a = build_corpus(cs);
    const auto b = build_corpus(cs);
    REQUIRE(a.size() == b.size());
    std::size_t members = 0, nonmembers = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].IR1 == b[i].IR1);
      CHECK(a[i].source == b[i].source);
      const bool m = gotzmann_oracle(a[i].IR1, cs.spec, cs.R).member;
      CHECK(m == (a[i].kind == CorpusPoint::Kind::Member));
      CHECK(a[i].IR.has_value() == m);
      (m ? members : nonmembers) += 1;
    }
    CHECK(nonmembers == 6);
    CHECK(members > 5);
    cs.seed = 64;
    const auto c = build_corpus(cs);
    bool differs = c.size() != a.size();
    for (std::size_t i = 0; !differs && i < a.size(); ++i) differs = !(a[i].IR1 == c[i].IR1);
    CHECK(differs);
  }
}
