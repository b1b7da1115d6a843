#include <doctest.h>

#include "hilbeq/error.hpp"
#include "hilbeq/macaulay.hpp"
#include "hilbeq/polyring.hpp"
#include "hilbeq/rng.hpp"
#include "oracles.hpp"

using namespace hilbeq;

namespace {

const Field Q = Field::rationals();
const Field P = Field::prime(kDefaultTestPrime);

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

GradedSubspace span(const Field& f, int n, int d, const std::vector<std::vector<int>>& mons) {
  std::vector<Monomial> ms;
  for (const auto& e : mons) ms.push_back(mono(e));
  return GradedSubspace::from_monomials(f, n, d, ms);
}

GradedSubspace piece(const std::string& gens, int n, int d, const Field& f = Q) {
  return ideal_degree_piece(parse_polynomials(gens, n, f), n, d, f);
}

GradedSubspace random_subspace(const Field& f, int n, int d, std::size_t k, SplitMix64& rng) {
  const std::size_t dim = monomial_basis(n, d).size();
  if (k == 0) return GradedSubspace(f, n, d);
  Matrix rows(f, k, dim);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < dim; ++c) rows(r, c) = random_scalar(f, rng);
  return GradedSubspace::from_rows(n, d, rows);
}

std::set<std::vector<int>> random_monomial_set(int n, int d, SplitMix64& rng) {
  std::set<std::vector<int>> out;
  for (const auto& e : oracle::exponent_vectors(n, d))
    if (rng.below(3) != 0) out.insert(e);
  return out;
}

LinearForm random_form(const Field& f, int n, SplitMix64& rng) {
  LinearForm l;
  do {
    l.clear();
    for (int i = 0; i <= n; ++i) l.push_back(random_scalar(f, rng));
  } while (std::all_of(l.begin(), l.end(), [](const Scalar& s) { return s.is_zero(); }));
  return l;
}

LinearForm variable(const Field& f, int n, int i) {
  LinearForm l(static_cast<std::size_t>(n + 1), Scalar(f));
  l[static_cast<std::size_t>(i)] = Scalar::one(f);
  return l;
}

}  // namespace

TEST_SUITE("monomials") {
  TEST_CASE("monomial_basis examples") {
    const auto& b12 = monomial_basis(1, 2);
    REQUIRE(b12.size() == 3);
    CHECK(b12[0] == mono({2, 0}));
    CHECK(b12[1] == mono({1, 1}));
    CHECK(b12[2] == mono({0, 2}));
    const auto& b21 = monomial_basis(2, 1);
    CHECK(b21[0] == mono({1, 0, 0}));
    CHECK(b21[1] == mono({0, 1, 0}));
    CHECK(b21[2] == mono({0, 0, 1}));
    CHECK(monomial_basis(2, 3).size() == 10);
  }

  TEST_CASE("monomial_basis is every monomial once, sorted lexicographically with x0 heaviest") {
    for (int n = 0; n <= 4; ++n)
      for (int d = 0; d <= 5; ++d) {
        auto expected = oracle::exponent_vectors(n, d);
        std::sort(expected.begin(), expected.end(), std::greater<>());
        const auto& b = monomial_basis(n, d);
        REQUIRE(b.size() == static_cast<std::size_t>(oracle::pascal(n + d, n)));
        for (std::size_t i = 0; i < b.size(); ++i) {
          CHECK(b[i].e == expected[i]);
          CHECK(b.index_of(b[i]) == i);
        }
      }
  }

  TEST_CASE("times_var matches exponent arithmetic") {
    const auto& b = monomial_basis(2, 2);
    const auto& b1 = monomial_basis(2, 3);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (int v = 0; v <= 2; ++v) CHECK(b1[b.times_var(v, i)].e == oracle::times(v, b[i].e));
  }

  TEST_CASE("polynomial parsing") {
    const auto gens = parse_polynomials("x0*x2, 3/2 x1^2 - x0 x1", 2, Q);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].homogeneous_degree() == 2);
    CHECK(gens[1].terms.size() == 2);
    CHECK_THROWS_AS(parse_polynomials("x3", 2, Q), Error);
    CHECK_THROWS_AS(parse_polynomials("x0 +", 2, Q), Error);
    CHECK_THROWS_AS(parse_polynomials("x0^2 + x1", 2, Q)[0].homogeneous_degree(), Error);
  }
}

TEST_SUITE("multiplication") {
  TEST_CASE("multiplication by x0 and x1 on P^1 in degree 1") {
    CHECK(multiplication_map(1, 1, variable(Q, 1, 0)) == Matrix::from_rows(Q, {{1, 0}, {0, 1}, {0, 0}}));
    CHECK(multiplication_map(1, 1, variable(Q, 1, 1)) == Matrix::from_rows(Q, {{0, 0}, {1, 0}, {0, 1}}));
    CHECK(variable_map(Q, 1, 1, 1) == Matrix::from_rows(Q, {{0, 0}, {1, 0}, {0, 1}}));
  }

  TEST_CASE("generic multiplication map has a_j at row x_j x_k, column x_k") {
    const LinearPolyMatrix m = generic_multiplication_map(Q, 2, 1);
    REQUIRE(m.rows() == 6);
    REQUIRE(m.cols() == 3);
    const auto& b1 = monomial_basis(2, 1);
    const auto& b2 = monomial_basis(2, 2);
    for (std::size_t row = 0; row < 6; ++row)
      for (std::size_t col = 0; col < 3; ++col) {
        MPoly expected(Q, 3);
        for (int j = 0; j <= 2; ++j)
          if (oracle::times(j, b1[col].e) == b2[row].e) expected += MPoly::variable(Q, 3, static_cast<unsigned>(j));
        CHECK(m(row, col) == expected);
      }
  }
}

TEST_SUITE("ideals") {
  TEST_CASE("ideal_degree_piece examples") {
    const GradedSubspace I3 = piece("x0*x2, x1*x2", 2, 3);
    CHECK(I3.dim() == 5);
    CHECK(I3 == span(Q, 2, 3, {{2, 0, 1}, {1, 1, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}}));
    CHECK(piece("x1", 1, 1) == span(Q, 1, 1, {{0, 1}}));
    CHECK(piece("x0^2, x1^2", 2, 2).dim() == 2);
    CHECK_THROWS_AS(piece("x0^3", 2, 2), Error);
  }

  TEST_CASE("monomial ideals: codimension equals the count of standard monomials") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(3));
      std::vector<std::vector<int>> gens;
      std::string text;
      for (int g = 0; g < 1 + static_cast<int>(rng.below(3)); ++g) {
        const int deg = 1 + static_cast<int>(rng.below(2));
        std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
        for (int k = 0; k < deg; ++k) ++e[rng.below(static_cast<std::uint64_t>(n + 1))];
        gens.push_back(e);
        text += (text.empty() ? "" : ", ") + mono(e).to_string();
      }
      for (int d = 2; d <= 4; ++d) CHECK(piece(text, n, d).codim() == oracle::monomial_quotient_dim(gens, n, d));
    }
  }

  TEST_CASE("canonical representatives make equal subspaces equal") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
      const GradedSubspace w = random_subspace(Q, 2, 2, 3, rng);
      Matrix g(Q, 3, 3);
      do
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) g(i, j) = random_scalar(Q, rng);
      while (determinant(g).is_zero());
      CHECK(GradedSubspace::from_rows(2, 2, g * w.rows()) == w);
    }
  }
}

TEST_SUITE("colon") {
  TEST_CASE("colon_by_linear examples") {
    CHECK(colon_by_linear(GradedSubspace::full(Q, 2, 3), variable(Q, 2, 1)) == GradedSubspace::full(Q, 2, 2));
    const GradedSubspace I3 = piece("x0*x2, x1*x2", 2, 3);
    CHECK(colon_by_linear(I3, variable(Q, 2, 2)) ==
          span(Q, 2, 2, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}}));
    const GradedSubspace I2 = span(Q, 2, 2, {{2, 0, 0}, {0, 2, 0}});
    CHECK(colon_by_linear(I2, variable(Q, 2, 0)) == span(Q, 2, 1, {{1, 0, 0}}));
    CHECK_THROWS_AS(colon_by_linear(I2, LinearForm(3, Scalar(Q))), Error);
  }

  TEST_CASE("colon_by_S1 examples") {
    const GradedSubspace I3 = piece("x0*x2, x1*x2", 2, 3);
    const GradedSubspace c = colon_by_S1(I3);
    CHECK(c == span(Q, 2, 2, {{1, 0, 1}, {0, 1, 1}}));
    CHECK(c.codim() == 4);
    const GradedSubspace N = span(Q, 2, 3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {2, 0, 1}});
    CHECK(colon_by_S1(N) == span(Q, 2, 2, {{2, 0, 0}}));
    CHECK(colon_by_S1(N).codim() == 5);
    CHECK(colon_by_S1(GradedSubspace(Q, 2, 3)).dim() == 0);
  }

  TEST_CASE("monomial colon agrees with the set-based oracle") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(3)), d = 1 + static_cast<int>(rng.below(3));
      const auto I = random_monomial_set(n, d + 1, rng);
      const GradedSubspace W = span(Q, n, d + 1, {I.begin(), I.end()});
      const auto expected = oracle::monomial_colon_S1(I, n, d);
      CHECK(colon_by_S1(W) == span(Q, n, d, {expected.begin(), expected.end()}));
    }
  }

  TEST_CASE("S_1 times (I : S_1) lies in I") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(3)), d = 1 + static_cast<int>(rng.below(2));
      const std::size_t dim = monomial_basis(n, d + 1).size();
      const GradedSubspace I = random_subspace(P, n, d + 1, dim - 1 - rng.below(std::min<std::size_t>(dim, 4)), rng);
      const GradedSubspace c = colon_by_S1(I);
      if (c.dim() > 0) CHECK(I.contains(multiply_by_S1(c)));
    }
  }
}

TEST_SUITE("generic colon") {
  TEST_CASE("line plus point in degree 3") {
    const GradedSubspace I3 = piece("x0*x2, x1*x2", 2, 3);
    const GenericColonResult g = generic_colon(I3);
    CHECK(g.codim == 4);
    CHECK(g.k_rational);
    REQUIRE(g.rational_basis);
    CHECK(*g.rational_basis == span(Q, 2, 2, {{1, 0, 1}, {0, 1, 1}}));
    CHECK(g.denominator.is_constant());
  }

  TEST_CASE("span(x0^2, x1^2) has trivial generic colon") {
    const GenericColonResult g = generic_colon(span(Q, 2, 2, {{2, 0, 0}, {0, 2, 0}}));
    CHECK(g.codim == 3);
    CHECK(g.k_rational);
    REQUIRE(g.rational_basis);
    CHECK(g.rational_basis->dim() == 0);
  }

  TEST_CASE("full subspace") {
    const GenericColonResult g = generic_colon(GradedSubspace::full(Q, 2, 3));
    CHECK(g.codim == 0);
    CHECK(g.k_rational);
    CHECK(*g.rational_basis == GradedSubspace::full(Q, 2, 2));
  }

  TEST_CASE("chain (I:L) specialized in (I:l) and (I:S_1) in (I:l)") {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(2)), d = 1 + static_cast<int>(rng.below(2));
      const std::size_t dim = monomial_basis(n, d + 1).size();
      const std::size_t k = dim - 1 - rng.below(std::min<std::size_t>(dim, 3));
      const GradedSubspace I = trial % 2 ? random_subspace(P, n, d + 1, k, rng)
                                         : [&] {
                                             const auto s = random_monomial_set(n, d + 1, rng);
                                             return span(P, n, d + 1, {s.begin(), s.end()});
                                           }();
      const GenericColonResult g = generic_colon(I);
      const GradedSubspace s1 = colon_by_S1(I);
      CHECK(monomial_basis(n, d).size() - g.codim >= s1.dim());
      for (int s = 0; s < 5; ++s) {
        std::vector<Scalar> a;
        for (int i = 0; i <= n; ++i) a.push_back(random_scalar(P, rng));
        const GradedSubspace cl = colon_by_linear(I, a);
        if (s1.dim() > 0) CHECK(cl.contains(s1));
        const Scalar den = g.denominator.evaluate(a);
        if (den.is_zero()) continue;
        for (const auto& col : g.numerators) {
          std::vector<Scalar> v;
          for (const auto& e : col) v.push_back(e.evaluate(a));
          CHECK(cl.contains(v));
        }
      }
    }
  }

  TEST_CASE("k-rationality matches constancy of (I:l) over random l") {
    SplitMix64 rng(16);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2, d = 1 + static_cast<int>(rng.below(2));
      const std::size_t dim = monomial_basis(n, d + 1).size();
      const GradedSubspace I = random_subspace(P, n, d + 1, dim - 2 - rng.below(3), rng);
      const GenericColonResult g = generic_colon(I);
      std::vector<GradedSubspace> specs;
      for (int s = 0; s < 4; ++s) specs.push_back(colon_by_linear(I, random_form(P, n, rng)));
      bool constant = true;
      for (const auto& s : specs) constant = constant && s == specs.front();
      constant = constant && specs.front().codim() == g.codim;
      CHECK(g.k_rational == constant);
    }
  }
}

TEST_SUITE("bounds") {
  TEST_CASE("Macaulay growth and Green restriction on random subspaces") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(3)), d = 1 + static_cast<int>(rng.below(4));
      const std::size_t dim = monomial_basis(n, d).size();
      const std::size_t k = rng.below(dim + 1);
      GradedSubspace w = GradedSubspace(P, n, d);
      if (trial % 2) {
        w = random_subspace(P, n, d, k, rng);
      } else {
        std::vector<std::vector<int>> mons;
        const auto all = oracle::exponent_vectors(n, d);
        for (const auto& e : all)
          if (mons.size() < k && rng.below(2) == 0) mons.push_back(e);
        w = span(P, n, d, mons);
      }
      const auto c = static_cast<std::int64_t>(w.codim());
      CHECK(static_cast<std::int64_t>(multiply_by_S1(w).codim()) <= macaulay_upper(c, d));
      std::int64_t best = INT64_MAX;
      for (int s = 0; s < 5; ++s) {
        std::vector<Scalar> h;
        for (int i = 0; i < n; ++i) h.push_back(random_scalar(P, rng));
        best = std::min(best, static_cast<std::int64_t>(restrict_to_hyperplane(w, h).codim()));
      }
      CHECK(best <= macaulay_lower(c, d));
    }
  }

  TEST_CASE("lex segments attain the Macaulay bound") {
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= 3; ++d) {
        const auto& b = monomial_basis(n, d);
        for (std::size_t k = 0; k <= b.size(); ++k) {
          std::vector<Monomial> mons(b.monomials().begin(), b.monomials().begin() + static_cast<std::ptrdiff_t>(k));
          const GradedSubspace w = GradedSubspace::from_monomials(Q, n, d, mons);
          CHECK(static_cast<std::int64_t>(multiply_by_S1(w).codim()) ==
                macaulay_upper(static_cast<std::int64_t>(w.codim()), d));
        }
      }
  }
}

TEST_SUITE("substitution") {
  TEST_CASE("identity and permutations") {
    const GradedSubspace I3 = piece("x0*x2, x1*x2", 2, 3);
    CHECK(substitute(I3, Matrix::identity(Q, 3)) == I3);
    const Matrix swap02 = Matrix::from_rows(Q, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(substitute(I3, swap02) == piece("x2*x0, x1*x0", 2, 3));
  }

  TEST_CASE("substitution matrix of a linear change of variables") {
    const Matrix g = Matrix::from_rows(Q, {{1, 1}, {0, 1}});
    const Matrix s = substitution_matrix(g, 2);
    // x0 -> x0 + x1, x1 -> x1: x0^2 -> x0^2 + 2 x0 x1 + x1^2
    CHECK(s.column(0) == std::vector<Scalar>{Scalar(Q, 1L), Scalar(Q, 2L), Scalar(Q, 1L)});
    CHECK(s.column(2) == std::vector<Scalar>{Scalar(Q, 0L), Scalar(Q, 0L), Scalar(Q, 1L)});
  }

  TEST_CASE("restriction to a hyperplane") {
    // x1 = 3 x0 sends x0 x1 to 3 x0^2.
    const GradedSubspace w = span(Q, 1, 2, {{1, 1}});
    const GradedSubspace r = restrict_to_hyperplane(w, {Scalar(Q, 3L)});
    CHECK(r == GradedSubspace::full(Q, 0, 2));
    const GradedSubspace z = restrict_to_hyperplane(span(Q, 2, 1, {{0, 0, 1}}), {Scalar(Q, 0L), Scalar(Q, 0L)});
    CHECK(z.dim() == 0);
  }
}
