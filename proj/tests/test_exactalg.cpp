#include <doctest.h>

#include "hilbeq/error.hpp"
#include "hilbeq/field.hpp"
#include "hilbeq/matrix.hpp"
#include "hilbeq/mpoly.hpp"
#include "hilbeq/polyring.hpp"
#include "hilbeq/rng.hpp"
#include "oracles.hpp"

using namespace hilbeq;

namespace {

const Field Q = Field::rationals();
const Field P = Field::prime(kDefaultTestPrime);

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, SplitMix64& rng, long bound = 3) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng, bound);
  return m;
}

// Random low-rank matrix: product of r x k and k x c factors.
Matrix random_low_rank(const Field& f, std::size_t r, std::size_t c, std::size_t k, SplitMix64& rng) {
  return random_matrix(f, r, k, rng) * random_matrix(f, k, c, rng);
}

LinearPolyMatrix random_linear_poly(const Field& f, unsigned nvars, std::size_t r, std::size_t c, SplitMix64& rng) {
  LinearPolyMatrix m(f, nvars, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      MPoly e = MPoly::constant(f, nvars, random_scalar(f, rng, 1));
      for (unsigned v = 0; v < nvars; ++v)
        if (rng.below(3) == 0) e += MPoly::variable(f, nvars, v) * random_scalar(f, rng, 1);
      m.set(i, j, e);
    }
  return m;
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("rationals are kept in lowest terms") {
    const Scalar a = Scalar::parse(Q, "6/-4");
    CHECK(a.to_string() == "-3/2");
    CHECK(a.rational().get_den() == 2);
    CHECK((a + Scalar(Q, 2L)).to_string() == "1/2");
    CHECK(Scalar::parse(Q, "4/2").to_string() == "2");
    CHECK(Scalar(Q, 5L).to_fraction_string() == "5/1");
  }

  TEST_CASE("prime field elements are reduced to [0, p)") {
    const Field f7 = Field::prime(7);
    CHECK(Scalar(f7, -1L).residue() == 6);
    CHECK(Scalar(f7, 15L).residue() == 1);
    CHECK((Scalar(f7, 3L) * Scalar(f7, 5L)).residue() == 1);
    CHECK((Scalar(f7, 3L).inverse() * Scalar(f7, 3L)).is_one());
    CHECK(Scalar::parse(f7, "1/2").residue() == 4);
  }

  TEST_CASE("field descriptors") {
    CHECK(Field::parse("Q").is_rational());
    CHECK(Field::parse("QQ").is_rational());
    CHECK(Field::parse("Fp:1000003").modulus() == 1000003);
    CHECK(Field::prime(2).to_string() == "Fp:2");
    CHECK_THROWS_AS(Field::prime(4), Error);
    CHECK_THROWS_AS(Field::parse("R"), Error);
    CHECK_THROWS_AS(Field::prime(1), Error);
  }

  TEST_CASE("mixing fields and dividing by zero are errors") {
    CHECK_THROWS_AS(Scalar(Q, 1L) + Scalar(P, 1L), Error);
    CHECK_THROWS_AS(Scalar(Q).inverse(), Error);
    CHECK_THROWS_AS(Scalar(P).inverse(), Error);
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(Q, 2)) == 2);
    CHECK(rank(Matrix(Q, 3, 4)) == 0);
    CHECK(rank(Matrix::from_rows(Q, {{1, 2}, {2, 4}})) == 1);
  }

  TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::identity(Q, 3)).cols() == 0);
    const Matrix k = kernel_basis(Matrix::from_rows(Q, {{1, -1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0).is_one());
    CHECK(k(1, 0).is_one());
    const Matrix z = kernel_basis(Matrix(Q, 2, 3));
    CHECK(z.cols() == 3);
    CHECK(rank(z) == 3);
  }

  TEST_CASE("rank agrees with the minor oracle and with the transpose") {
    SplitMix64 rng(1);
    for (const Field& f : {Q, P, Field::prime(2), Field::prime(3)}) {
      for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(5);
        const Matrix m = trial % 2 ? random_matrix(f, r, c, rng) : random_low_rank(f, r, c, 1 + rng.below(2), rng);
        CAPTURE(f.to_string());
        CHECK(rank(m) == oracle::rank_by_minors(m));
        CHECK(rank(m) == rank(m.transpose()));
      }
    }
  }

  TEST_CASE("kernel columns are annihilated and have the right count") {
    SplitMix64 rng(2);
    for (const Field& f : {Q, P}) {
      for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(7);
        const Matrix m = random_low_rank(f, r, c, 1 + rng.below(3), rng);
        const Matrix k = kernel_basis(m);
        CHECK(k.cols() == c - rank(m));
        if (k.cols() > 0) CHECK((m * k).is_zero());
        for (std::size_t j = 0; j < k.cols(); ++j) {
          std::size_t first = 0;
          while (k(first, j).is_zero()) ++first;
          CHECK(k(first, j).is_one());
        }
      }
    }
  }

  TEST_CASE("determinant and inverse") {
    SplitMix64 rng(3);
    for (const Field& f : {Q, P}) {
      for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng.below(5);
        const Matrix m = random_matrix(f, n, n, rng);
        const Scalar det = determinant(m);
        CHECK(det == oracle::leibniz_det(m));
        if (det.is_zero()) {
          CHECK_THROWS_AS(inverse(m), Error);
        } else {
          CHECK(inverse(m) * m == Matrix::identity(f, n));
        }
      }
    }
  }

  TEST_CASE("rref is reduced and preserves the row space") {
    SplitMix64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
      const Matrix m = random_low_rank(Q, 4, 6, 2 + rng.below(2), rng);
      const Echelon e = rref(m);
      for (std::size_t i = 0; i < e.rank(); ++i) {
        CHECK(e.reduced(i, e.pivots[i]).is_one());
        for (std::size_t k = 0; k < e.reduced.rows(); ++k)
          if (k != i) CHECK(e.reduced(k, e.pivots[i]).is_zero());
      }
      CHECK(rank(Matrix::vstack({m, row_space_basis(m)})) == rank(m));
    }
  }

  TEST_CASE("shape errors") {
    CHECK_THROWS_AS(Matrix(Q, 2, 3) * Matrix(Q, 2, 3), Error);
    CHECK_THROWS_AS(Matrix(Q, 2, 3) + Matrix(Q, 3, 2), Error);
    CHECK_THROWS_AS(Matrix(Q, 2, 2) * Matrix(P, 2, 2), Error);
  }
}

TEST_SUITE("mpoly") {
  TEST_CASE("arithmetic and exact division") {
    const MPoly a0 = MPoly::variable(Q, 2, 0), a1 = MPoly::variable(Q, 2, 1);
    const MPoly s = a0 + a1;
    const MPoly sq = s * s;
    CHECK(sq.coefficient({2, 0}) == Scalar(Q, 1L));
    CHECK(sq.coefficient({1, 1}) == Scalar(Q, 2L));
    CHECK(sq.total_degree() == 2);
    CHECK(exact_divide(sq, s) == s);
    CHECK_THROWS_AS(exact_divide(sq + a0 * Scalar(Q, 0L) + MPoly::constant(Q, 2, Scalar(Q, 1L)), s), Error);
    CHECK(sq.evaluate({Scalar(Q, 2L), Scalar(Q, 3L)}) == Scalar(Q, 25L));
  }

  TEST_CASE("poly_determinant agrees with the permutation expansion") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t n = 1 + rng.below(4);
      const LinearPolyMatrix m = random_linear_poly(Q, 3, n, n, rng);
      std::vector<std::vector<MPoly>> rows(n, std::vector<MPoly>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
      CHECK(poly_determinant(rows) == oracle::leibniz_det(rows, Q, 3));
    }
  }

  TEST_CASE("linear entries only") {
    LinearPolyMatrix m(Q, 2, 1, 1);
    const MPoly a0 = MPoly::variable(Q, 2, 0);
    CHECK_THROWS_AS(m.set(0, 0, a0 * a0), Error);
  }
}

TEST_SUITE("function field rank") {
  TEST_CASE("constant entries agree with rank()") {
    SplitMix64 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix c = random_low_rank(Q, 4, 5, 1 + rng.below(3), rng);
      LinearPolyMatrix m(Q, 3, 4, 5);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 5; ++j) m.set(i, j, MPoly::constant(Q, 3, c(i, j)));
      CHECK(rank_over_function_field(m, 3) == rank(c));
      CHECK(rank_over_function_field(m, 3, true) == rank(c));
    }
  }

  TEST_CASE("a single row of variables has rank 1") {
    LinearPolyMatrix m(Q, 3, 1, 3);
    for (unsigned i = 0; i < 3; ++i) m.set(0, i, MPoly::variable(Q, 3, i));
    CHECK(rank_over_function_field(m, 5) == 1);
  }

  TEST_CASE("multiplication by L then quotient by span(x0^2, x1^2) has rank 3") {
    const LinearPolyMatrix mult = generic_multiplication_map(Q, 2, 1);
    REQUIRE(mult.rows() == 6);
    REQUIRE(mult.cols() == 3);
    const GradedSubspace I = GradedSubspace::from_monomials(Q, 2, 2, {Monomial{{2, 0, 0}}, Monomial{{0, 2, 0}}});
    const Matrix q = I.annihilator();
    REQUIRE(q.rows() == 4);
    LinearPolyMatrix m(Q, 3, q.rows(), 3);
    for (std::size_t i = 0; i < q.rows(); ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        MPoly e(Q, 3);
        for (std::size_t k = 0; k < 6; ++k) e += mult(k, j) * q(i, k);
        m.set(i, j, e);
      }
    CHECK(rank_over_function_field(m, 4) == 3);
    CHECK(rank_over_function_field(m, 4, true) == 3);
  }

  TEST_CASE("specializations never exceed the generic rank, and one of 20 attains it") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
      const LinearPolyMatrix m = random_linear_poly(P, 3, r, c, rng);
      const std::size_t generic = rank_over_function_field(m, 3, true);
      CHECK(generic == rank_over_function_field(m, 3, false));
      std::size_t best = 0;
      for (int s = 0; s < 20; ++s) {
        std::vector<Scalar> pt;
        for (int i = 0; i < 3; ++i) pt.push_back(random_scalar(P, rng));
        const std::size_t k = rank(m.specialize(pt));
        CHECK(k <= generic);
        best = std::max(best, k);
      }
      CHECK(best == generic);
    }
  }

  TEST_CASE("exact rank matches the largest nonvanishing polynomial minor") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t r = 1 + rng.below(3), c = 1 + rng.below(4);
      const LinearPolyMatrix m = random_linear_poly(Q, 2, r, c, rng);
      std::size_t expected = 0;
      for (std::size_t k = std::min(r, c); k > 0 && expected == 0; --k)
        oracle::combinations(r, k, [&](const std::vector<std::size_t>& rows) {
          oracle::combinations(c, k, [&](const std::vector<std::size_t>& cols) {
            std::vector<std::vector<MPoly>> sub(k, std::vector<MPoly>(k));
            for (std::size_t i = 0; i < k; ++i)
              for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
            if (!oracle::leibniz_det(sub, Q, 2).is_zero()) expected = k;
          });
        });
      CHECK(rank_over_function_field(m, 2, true) == expected);
    }
  }

  TEST_CASE("fraction-free echelon specializes to the reduced echelon form") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 15; ++trial) {
      const LinearPolyMatrix m = random_linear_poly(P, 3, 3, 4, rng);
      const FractionFreeEchelon ff = fraction_free_echelon(m);
      std::vector<Scalar> pt;
      for (int i = 0; i < 3; ++i) pt.push_back(random_scalar(P, rng));
      const Scalar den = ff.denominator.evaluate(pt);
      if (den.is_zero()) continue;
      const Echelon e = rref(m.specialize(pt));
      REQUIRE(e.rank() == ff.rank());
      CHECK(e.pivots == ff.pivots);
      for (std::size_t i = 0; i < ff.rank(); ++i)
        for (std::size_t j = 0; j < ff.cols; ++j) CHECK(ff.at(i, j).evaluate(pt) == e.reduced(i, j) * den);
    }
  }
}

TEST_SUITE("rng") {
  TEST_CASE("splitmix64 reference outputs for seed 0") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
  }

  TEST_CASE("below stays in range and shuffle permutes") {
    SplitMix64 rng(42);
    for (int i = 0; i < 1000; ++i) CHECK(rng.below(7) < 7);
    std::vector<int> v{0, 1, 2, 3, 4, 5};
    rng.shuffle(v);
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5});
  }
}
