#pragma once

#include <cstdint>
#include <vector>

#include "hilbeq/field.hpp"

namespace hilbeq {

/// Sparse linear or quadratic form with integer coefficients in Plücker
/// variables. Variables are referred to by their colex rank (see SubsetRanker).
class EquationForm {
 public:
  enum class Kind : std::uint8_t { Linear, Quadratic };
  static constexpr std::uint64_t kNone = UINT64_MAX;

  struct Term {
    std::int64_t c;
    std::uint64_t u;
    std::uint64_t v;  // kNone for linear terms; u <= v for quadratic terms
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit EquationForm(Kind kind = Kind::Linear) : kind_(kind) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds a term; call finalize() before reading terms.
  void add(std::int64_t c, std::uint64_t u);
  void add(std::int64_t c, std::uint64_t u, std::uint64_t v);
  /// Sorts terms by variable key, merges duplicates and drops zero coefficients.
  void finalize();
  /// Makes the coefficient of the first term positive; returns the applied sign.
  int normalize_sign();

  /// Evaluates at a dense coordinate vector indexed by colex rank.
  Scalar evaluate(const std::vector<Scalar>& coords, const Field& field) const;

  /// Product of two linear forms.
  static EquationForm product(const EquationForm& a, const EquationForm& b);

  friend EquationForm operator-(const EquationForm& a, const EquationForm& b);
  friend bool operator==(const EquationForm& a, const EquationForm& b) = default;
  friend bool operator<(const EquationForm& a, const EquationForm& b);

 private:
  Kind kind_;
  std::vector<Term> terms_;
};

}  // namespace hilbeq
