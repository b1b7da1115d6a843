#include <doctest.h>

#include "hilbeq/error.hpp"
#include "hilbeq/macaulay.hpp"
#include "oracles.hpp"

using namespace hilbeq;

namespace {

std::int64_t reconstruct(const MacaulayRep& rep) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rep.k.size(); ++i) s += oracle::pascal(rep.k[i], rep.d - static_cast<int>(i));
  return s;
}

// p(d) from the decomposition, computed with Pascal's triangle.
long long decomposition_value(const std::vector<int>& a, long long d) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += oracle::pascal(d + a[i] - static_cast<long long>(i), a[i]);
  return s;
}

std::vector<std::vector<int>> decompositions(int max_len, int max_entry) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int bound) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = 0; v <= bound; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(max_entry);
  return out;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(3, -1) == 0);
  for (int n = 0; n < 40; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::pascal(n, k));
}

TEST_CASE("macaulay_rep examples") {
  CHECK(macaulay_rep(0, 3).k.empty());
  CHECK(macaulay_rep(5, 2).k == std::vector<std::int64_t>{3, 2});
  CHECK(macaulay_rep(4, 2).k == std::vector<std::int64_t>{3, 1});
}

TEST_CASE("macaulay_rep is the unique representation found by exhaustive search") {
  for (int d = 1; d <= 4; ++d)
    for (long long c = 1; c <= 60; ++c) {
      const auto all = oracle::all_macaulay_reps(c, d);
      REQUIRE(all.size() == 1);
      const auto& k = macaulay_rep(c, d).k;
      CHECK(std::vector<long long>(k.begin(), k.end()) == all.front());
    }
}

TEST_CASE("macaulay_upper and macaulay_lower examples") {
  for (int d = 1; d <= 5; ++d) {
    CHECK(macaulay_upper(0, d) == 0);
    CHECK(macaulay_lower(0, d) == 0);
  }
  CHECK(macaulay_upper(4, 2) == 5);
  CHECK(macaulay_upper(5, 2) == 7);
  CHECK(macaulay_lower(5, 2) == 2);
  CHECK(macaulay_lower(5, 3) == 1);
}

TEST_CASE("round trip and monotonicity for c <= 5000, d <= 8") {
  for (int d = 1; d <= 8; ++d)
    for (std::int64_t c = 0; c <= 5000; ++c) {
      const MacaulayRep rep = macaulay_rep(c, d);
      REQUIRE(reconstruct(rep) == c);
      REQUIRE(rep.value() == c);
      for (std::size_t i = 1; i < rep.k.size(); ++i) REQUIRE(rep.k[i] < rep.k[i - 1]);
      REQUIRE(macaulay_upper(c, d) >= c);
      REQUIRE(macaulay_lower(c, d) <= c);
    }
}

TEST_CASE("upper and lower follow their defining sums") {
  for (int d = 1; d <= 5; ++d)
    for (std::int64_t c = 0; c <= 300; ++c) {
      const MacaulayRep rep = macaulay_rep(c, d);
      long long up = 0, low = 0;
      for (std::size_t i = 0; i < rep.k.size(); ++i) {
        const int j = d - static_cast<int>(i);
        up += oracle::pascal(rep.k[i] + 1, j + 1);
        low += oracle::pascal(rep.k[i] - 1, j);
      }
      CHECK(macaulay_upper(c, d) == up);
      CHECK(macaulay_lower(c, d) == low);
    }
}

TEST_CASE("decomposition from coefficients") {
  const HilbertSpec t2 = HilbertSpec::parse("t+2");
  CHECK(t2.decomposition() == std::vector<int>{1, 0});
  CHECK(t2.gotzmann() == 2);

  const HilbertSpec two = HilbertSpec::parse("2");
  CHECK(two.decomposition() == std::vector<int>{0, 0});
  CHECK(two.gotzmann() == 2);

  const HilbertSpec three_t = HilbertSpec::parse("3t+1");
  CHECK(three_t.decomposition() == std::vector<int>{1, 1, 1, 0});
  CHECK(three_t.gotzmann() == 4);
  for (int d = 4; d <= 8; ++d) CHECK(three_t(d) == 3 * d + 1);

  CHECK_THROWS_AS(HilbertSpec::parse("t-5"), Error);
  try {
    HilbertSpec::parse("t-5");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAdmissible);
  }
}

TEST_CASE("polynomial text grammar") {
  CHECK(HilbertSpec::parse("a:[1,1,1,0]").decomposition() == std::vector<int>{1, 1, 1, 0});
  CHECK(HilbertSpec::parse("1/2t^2+3/2t+1").decomposition() == std::vector<int>{2});
  CHECK(HilbertSpec::parse(" 2 t + 1 ").decomposition() == HilbertSpec::parse("2t+1").decomposition());
  CHECK(HilbertSpec::parse("t+2").to_string() == "t+2");
  CHECK_THROWS_AS(HilbertSpec::parse("x+1"), Error);
  CHECK_THROWS_AS(HilbertSpec::parse("a:[0,1]"), Error);
  CHECK_THROWS_AS(HilbertSpec::parse(""), Error);
  CHECK_THROWS_AS(HilbertSpec::parse("0"), Error);
}

TEST_CASE("eval_hilbert") {
  const HilbertSpec t2 = HilbertSpec::parse("t+2");
  CHECK(eval_hilbert(t2, 2).value == 4);
  CHECK_FALSE(eval_hilbert(t2, 2).extrapolated);
  CHECK(eval_hilbert(t2, 3).value == 5);
  CHECK(eval_hilbert(t2, 1).extrapolated);
  CHECK(eval_hilbert(HilbertSpec::parse("3t+1"), 4).value == 13);
}

TEST_CASE("coefficient form and decomposition agree on d = r .. r+10") {
  for (const auto& a : decompositions(4, 3)) {
    const HilbertSpec s = HilbertSpec::from_decomposition(a);
    for (int d = s.gotzmann(); d <= s.gotzmann() + 10; ++d) {
      CHECK(s(d) == decomposition_value(a, d));
      CHECK(s.eval_decomposition(d) == decomposition_value(a, d));
    }
    CHECK(HilbertSpec::from_coefficients(s.coefficients()).decomposition() == a);
  }
}

TEST_CASE("persistence identity p(R+1) = p(R)^<R> over many polynomials") {
  const auto family = decompositions(4, 3);
  REQUIRE(family.size() >= 20);
  for (const auto& a : family) {
    const HilbertSpec s = HilbertSpec::from_decomposition(a);
    for (int R = s.gotzmann(); R <= s.gotzmann() + 5; ++R) CHECK(s(R + 1) == macaulay_upper(s(R), R));
  }
}

TEST_CASE("Gotzmann number of a constant c is c") {
  for (int c = 1; c <= 12; ++c) CHECK(HilbertSpec::parse(std::to_string(c)).gotzmann() == c);
  CHECK(HilbertSpec::parse("t+2").gotzmann() == 2);
}
