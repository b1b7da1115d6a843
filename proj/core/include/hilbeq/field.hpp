#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace hilbeq {

/// Descriptor of an exact base field: the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  enum class Kind : std::uint8_t { Rational, Prime };

  static Field rationals() noexcept { return Field(Kind::Rational, 0); }
  static Field prime(std::uint32_t p);

  /// Parses "Q" or "Fp:<p>".
  static Field parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  std::uint32_t modulus() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  Field(Kind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultTestPrime = 1'000'003;

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator (mpq canonical form); prime-field elements are reduced to [0, p).
class Scalar {
 public:
  Scalar() : Scalar(Field::rationals()) {}
  explicit Scalar(const Field& field);                      // zero
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);      // reduces mod p when needed

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return Scalar(f, 1L); }

  /// Parses "<int>" or "<int>/<int>" into the given field.
  static Scalar parse(const Field& field, const std::string& text);

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Exact rational value; only valid for Q.
  const mpq_class& rational() const;
  /// Residue in [0, p); only valid for F_p.
  std::uint32_t residue() const;

  std::string to_string() const;
  /// Always "<num>/<den>" (F_p elements print as "<v>/1").
  std::string to_fraction_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// a += b * c without temporaries on the hot elimination path.
  void add_mul(const Scalar& b, const Scalar& c);
  void sub_mul(const Scalar& b, const Scalar& c);

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
  };

  void check_same_field(const Scalar& other) const;

  std::variant<Residue, mpq_class> v_;
};

}  // namespace hilbeq
