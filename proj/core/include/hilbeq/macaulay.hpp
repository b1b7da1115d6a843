#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hilbeq {

/// Binomial coefficient C(n, k) for integer n (C(n, k) = 0 when n < k or k < 0,
/// the convention used by Macaulay representations). Throws TooLarge on overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// d-th Macaulay representation c = C(k_d, d) + C(k_{d-1}, d-1) + ...
/// `k[0]` is k_d; trailing zero binomials are omitted.
struct MacaulayRep {
  int d = 1;
  std::vector<std::int64_t> k;

  std::int64_t value() const;
};

MacaulayRep macaulay_rep(std::int64_t c, int d);
std::int64_t macaulay_upper(std::int64_t c, int d);  // c^{<d>}
std::int64_t macaulay_lower(std::int64_t c, int d);  // c_{<d>}

/// An admissible Hilbert polynomial p(t) = sum_i C(t + a_i - (i-1), a_i)
/// with a_1 >= ... >= a_r >= 0; r is the Gotzmann number.
class HilbertSpec {
 public:
  /// Decomposition must be nonincreasing and nonnegative.
  static HilbertSpec from_decomposition(std::vector<int> a);
  /// Greedy extraction; throws Error(NotAdmissible) naming the failing layer.
  static HilbertSpec from_coefficients(std::vector<mpq_class> coeffs);
  /// Either coefficient form ("3t+1", "t+2", "1/2t^2+3/2t+1", "2") or "a:[1,1,1,0]".
  static HilbertSpec parse(const std::string& text);

  const std::vector<int>& decomposition() const noexcept { return a_; }
  int gotzmann() const noexcept { return static_cast<int>(a_.size()); }
  /// Coefficients in increasing degree, coeffs[k] multiplies t^k.
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return a_.empty() ? 0 : a_.front(); }
  bool is_constant() const noexcept { return degree() == 0; }

  std::int64_t operator()(std::int64_t d) const;
  /// Same value computed term by term from the decomposition.
  std::int64_t eval_decomposition(std::int64_t d) const;

  /// Coefficient form, e.g. "3t+1".
  std::string to_string() const;

  friend bool operator==(const HilbertSpec& a, const HilbertSpec& b) { return a.a_ == b.a_; }

 private:
  std::vector<int> a_;
  std::vector<mpq_class> coeffs_;
};

struct HilbertValue {
  std::int64_t value;
  bool extrapolated;  // d is below the Gotzmann number
};

HilbertValue eval_hilbert(const HilbertSpec& spec, std::int64_t d);

}  // namespace hilbeq
