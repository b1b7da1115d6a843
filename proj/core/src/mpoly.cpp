#include "hilbeq/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "hilbeq/error.hpp"
#include "hilbeq/rng.hpp"

namespace hilbeq {

namespace {

constexpr unsigned shift_of(unsigned i) { return 8 * (MPoly::kMaxVars - 1 - i); }

bool divides(MPoly::Key a, MPoly::Key b) {
  for (unsigned i = 0; i < MPoly::kMaxVars; ++i) {
    const unsigned s = 8 * i;
    if (((a >> s) & 0xFF) > ((b >> s) & 0xFF)) return false;
  }
  return true;
}

}  // namespace

MPoly::MPoly(const Field& field, unsigned nvars) : field_(field), nvars_(nvars) {
  if (nvars > kMaxVars) throw Error(ErrorKind::TooLarge, "at most 8 polynomial indeterminates are supported");
}

MPoly MPoly::constant(const Field& field, unsigned nvars, const Scalar& c) {
  MPoly p(field, nvars);
  if (!c.is_zero()) p.terms_.emplace_back(0, c);
  return p;
}

MPoly MPoly::variable(const Field& field, unsigned nvars, unsigned i) {
  MPoly p(field, nvars);
  p.terms_.emplace_back(Key{1} << shift_of(i), Scalar::one(field));
  return p;
}

MPoly::Key MPoly::pack(const std::vector<unsigned>& exponents) {
  Key k = 0;
  for (unsigned i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0xFF) throw Error(ErrorKind::TooLarge, "exponent above 255");
    k |= Key{exponents[i]} << shift_of(i);
  }
  return k;
}

std::vector<unsigned> MPoly::unpack(Key key, unsigned nvars) {
  std::vector<unsigned> e(nvars);
  for (unsigned i = 0; i < nvars; ++i) e[i] = static_cast<unsigned>((key >> shift_of(i)) & 0xFF);
  return e;
}

Scalar MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first == 0) return terms_.back().second;
  return Scalar(field_);
}

unsigned MPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [k, c] : terms_) {
    unsigned d = 0;
    for (unsigned i = 0; i < kMaxVars; ++i) d += static_cast<unsigned>((k >> (8 * i)) & 0xFF);
    best = std::max(best, d);
  }
  return best;
}

Scalar MPoly::coefficient(const std::vector<unsigned>& exponents) const {
  const Key k = pack(exponents);
  for (const auto& [key, c] : terms_)
    if (key == k) return c;
  return Scalar(field_);
}

Scalar MPoly::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() < nvars_) throw Error(ErrorKind::DimensionMismatch, "evaluation point too short");
  Scalar sum(field_);
  for (const auto& [k, c] : terms_) {
    Scalar t = c;
    for (unsigned i = 0; i < nvars_; ++i)
      for (unsigned e = (k >> shift_of(i)) & 0xFF; e > 0; --e) t *= point[i];
    sum += t;
  }
  return sum;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::pair<Key, Scalar>> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& t) { return t.second.is_zero(); }),
               merged.end());
  terms_ = std::move(merged);
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  if (!(field_ == rhs.field_)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  std::vector<std::pair<Key, Scalar>> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    if (j == rhs.terms_.size() || (i < terms_.size() && terms_[i].first > rhs.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || rhs.terms_[j].first > terms_[i].first) {
      out.push_back(rhs.terms_[j++]);
    } else {
      Scalar s = terms_[i].second + rhs.terms_[j].second;
      if (!s.is_zero()) out.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) { return *this += -rhs; }

MPoly& MPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  MPoly out(a.field_, std::max(a.nvars_, b.nvars_));
  if (a.is_zero() || b.is_zero()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.terms_.emplace_back(ka + kb, ca * cb);
  out.normalize();
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (!(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second)) return false;
  return true;
}

MPoly exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  MPoly quotient(a.field_, std::max(a.nvars_, b.nvars_));
  if (b.terms_.size() == 1) {
    const auto& [kb, cb] = b.terms_.front();
    const Scalar inv = cb.inverse();
    for (const auto& [ka, ca] : a.terms_) {
      if (!divides(kb, ka)) throw Error(ErrorKind::PreconditionFailed, "inexact polynomial division");
      quotient.terms_.emplace_back(ka - kb, ca * inv);
    }
    return quotient;
  }
  MPoly rem = a;
  const auto& [lead_key, lead_coeff] = b.terms_.front();
  const Scalar inv = lead_coeff.inverse();
  while (!rem.is_zero()) {
    const auto& [rk, rc] = rem.terms_.front();
    if (!divides(lead_key, rk)) throw Error(ErrorKind::PreconditionFailed, "inexact polynomial division");
    MPoly t(a.field_, quotient.nvars_);
    t.terms_.emplace_back(rk - lead_key, rc * inv);
    rem -= t * b;
    quotient.terms_.push_back(t.terms_.front());
  }
  return quotient;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (unsigned i = 0; i < nvars_; ++i) {
      const unsigned e = (k >> shift_of(i)) & 0xFF;
      if (e) os << "*a" << i << (e > 1 ? "^" + std::to_string(e) : "");
    }
  }
  return os.str();
}

LinearPolyMatrix::LinearPolyMatrix(const Field& field, unsigned nvars, std::size_t rows, std::size_t cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols), data_(rows * cols, MPoly(field, nvars)) {}

void LinearPolyMatrix::set(std::size_t r, std::size_t c, MPoly value) {
  if (value.total_degree() > 1) throw Error(ErrorKind::PreconditionFailed, "entry of degree above 1");
  data_[r * cols_ + c] = std::move(value);
}

Matrix LinearPolyMatrix::specialize(const std::vector<Scalar>& point) const {
  const Field f = point.empty() ? field_ : point.front().field();
  Matrix out(f, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const MPoly& p = (*this)(r, c);
      if (p.is_zero()) continue;
      if (f == field_) {
        out(r, c) = p.evaluate(point);
      } else {
        Scalar sum(f);
        for (const auto& [k, coeff] : p.terms()) {
          Scalar t(f, coeff.rational());
          const auto e = MPoly::unpack(k, nvars_);
          for (unsigned i = 0; i < nvars_; ++i)
            for (unsigned j = 0; j < e[i]; ++j) t *= point[i];
          sum += t;
        }
        out(r, c) = sum;
      }
    }
  return out;
}

FractionFreeEchelon fraction_free_echelon(const LinearPolyMatrix& m) {
  FractionFreeEchelon e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.entries.reserve(e.rows * e.cols);
  for (std::size_t r = 0; r < e.rows; ++r)
    for (std::size_t c = 0; c < e.cols; ++c) e.entries.push_back(m(r, c));
  auto at = [&](std::size_t r, std::size_t c) -> MPoly& { return e.entries[r * e.cols + c]; };

  MPoly prev = MPoly::constant(m.field(), m.nvars(), Scalar::one(m.field()));
  std::size_t row = 0;
  for (std::size_t c = 0; c < e.cols && row < e.rows; ++c) {
    std::size_t p = row;
    while (p < e.rows && at(p, c).is_zero()) ++p;
    if (p == e.rows) continue;
    if (p != row)
      for (std::size_t j = 0; j < e.cols; ++j) std::swap(at(p, j), at(row, j));
    const MPoly pivot = at(row, c);
    for (std::size_t i = 0; i < e.rows; ++i) {
      if (i == row) continue;
      const MPoly factor = at(i, c);
      for (std::size_t j = 0; j < e.cols; ++j) {
        MPoly v = pivot * at(i, j);
        if (!factor.is_zero() && !at(row, j).is_zero()) v -= factor * at(row, j);
        at(i, j) = exact_divide(v, prev);
      }
    }
    prev = pivot;
    e.pivots.push_back(c);
    ++row;
  }
  e.denominator = prev;
  return e;
}

MPoly poly_determinant(std::vector<std::vector<MPoly>> a) {
  const std::size_t n = a.size();
  if (n == 0) return MPoly();
  const Field f = a[0][0].field();
  const unsigned nv = a[0][0].nvars();
  MPoly prev = MPoly::constant(f, nv, Scalar::one(f));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return MPoly(f, nv);
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

std::size_t rank_over_function_field(const LinearPolyMatrix& m, unsigned confidence, bool exact,
                                     std::uint64_t seed) {
  if (confidence == 0) throw Error(ErrorKind::PreconditionFailed, "confidence must be at least 1");
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;

  bool fast_available = true;
  Field big = Field::rationals();
  if (m.field().is_rational())
    big = Field::prime(2147483647u);
  else if (m.field().modulus() >= (1u << 30))
    big = m.field();
  else
    fast_available = false;

  std::size_t fast = 0;
  if (fast_available) {
    SplitMix64 rng(seed);
    try {
      for (unsigned t = 0; t < confidence && fast < full; ++t) {
        std::vector<Scalar> point;
        for (unsigned i = 0; i < m.nvars(); ++i) point.push_back(random_scalar(big, rng));
        fast = std::max(fast, rank(m.specialize(point)));
      }
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::DivisionByZero) throw;
      fast_available = false;
    }
  }
  if (fast_available && !exact && fast + 1 < full) return fast;
  return fraction_free_echelon(m).rank();
}

}  // namespace hilbeq
