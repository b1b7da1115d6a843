#include "hilbeq/field.hpp"

#include <charconv>

#include "hilbeq/error.hpp"

namespace hilbeq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::IO: return "IO";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::WrongCodimension: return "WrongCodimension";
    case ErrorKind::MixedDegrees: return "MixedDegrees";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::BelowGotzmann: return "BelowGotzmann";
    case ErrorKind::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorKind::SingularDraw: return "SingularDraw";
    case ErrorKind::ExhaustedRetries: return "ExhaustedRetries";
    case ErrorKind::InconsistencyDetected: return "InconsistencyDetected";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorKind::Parse, "field modulus must be a prime below 2^31, got " + std::to_string(p));
  return Field(Kind::Prime, p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    std::uint64_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || p >= (1ull << 31))
      throw Error(ErrorKind::Parse, "bad field descriptor '" + text + "'");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw Error(ErrorKind::Parse, "bad field descriptor '" + text + "' (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(const Field& field) {
  if (field.is_rational())
    v_ = mpq_class(0);
  else
    v_ = Residue{0, field.modulus()};
}

Scalar::Scalar(const Field& field, long value) {
  if (field.is_rational()) {
    v_ = mpq_class(value);
  } else {
    const std::uint32_t p = field.modulus();
    long r = value % static_cast<long>(p);
    if (r < 0) r += p;
    v_ = Residue{static_cast<std::uint32_t>(r), p};
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) {
  if (field.is_rational()) {
    v_ = value;
    return;
  }
  const std::uint32_t p = field.modulus();
  const std::uint32_t den = reduce(value.get_den(), p);
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes modulo " + std::to_string(p));
  const std::uint64_t num = reduce(value.get_num(), p);
  v_ = Residue{static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p), p};
}

Scalar Scalar::parse(const Field& field, const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorKind::Parse, "bad scalar '" + text + "'");
  q.canonicalize();
  return Scalar(field, q);
}

Field Scalar::field() const noexcept {
  if (const auto* r = std::get_if<Residue>(&v_)) return Field(Field::Kind::Prime, r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw Error(ErrorKind::FieldMismatch, "rational() on a prime-field element");
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value;
  throw Error(ErrorKind::FieldMismatch, "residue() on a rational element");
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

std::string Scalar::to_fraction_string() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value) + "/1";
  const auto& q = std::get<mpq_class>(v_);
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void Scalar::check_same_field(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&v_);
  const auto* b = std::get_if<Residue>(&other.v_);
  if ((a == nullptr) != (b == nullptr) || (a && a->p != b->p))
    throw Error(ErrorKind::FieldMismatch, "operands from different fields");
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.v_)) {
    if (r->value) r->value = r->p - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.v_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint64_t s = std::uint64_t(r->value) + std::get<Residue>(rhs.v_).value;
    r->value = static_cast<std::uint32_t>(s >= r->p ? s - r->p : s);
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(rhs.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&v_)) {
    const std::uint32_t b = std::get<Residue>(rhs.v_).value;
    r->value = r->value >= b ? r->value - b : r->value + (r->p - b);
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(rhs.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value = static_cast<std::uint32_t>(std::uint64_t(r->value) * std::get<Residue>(rhs.v_).value % r->p);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(rhs.v_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.v_)) {
    r->value = pow_mod(r->value, r->p - 2, r->p);
  } else {
    auto& q = std::get<mpq_class>(out.v_);
    q = 1 / q;
  }
  return out;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

void Scalar::add_mul(const Scalar& b, const Scalar& c) {
  if (auto* r = std::get_if<Residue>(&v_)) {
    check_same_field(b);
    check_same_field(c);
    const std::uint64_t prod = std::uint64_t(std::get<Residue>(b.v_).value) * std::get<Residue>(c.v_).value % r->p;
    const std::uint64_t s = r->value + prod;
    r->value = static_cast<std::uint32_t>(s >= r->p ? s - r->p : s);
  } else {
    *this += b * c;
  }
}

void Scalar::sub_mul(const Scalar& b, const Scalar& c) {
  if (auto* r = std::get_if<Residue>(&v_)) {
    check_same_field(b);
    check_same_field(c);
    const std::uint32_t prod =
        static_cast<std::uint32_t>(std::uint64_t(std::get<Residue>(b.v_).value) * std::get<Residue>(c.v_).value % r->p);
    r->value = r->value >= prod ? r->value - prod : r->value + (r->p - prod);
  } else {
    *this -= b * c;
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.v_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.v_);
  if ((ra == nullptr) != (rb == nullptr)) return false;
  if (ra) return ra->p == rb->p && ra->value == rb->value;
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

}  // namespace hilbeq
