#include "hilbeq/forms.hpp"

#include <algorithm>
#include <tuple>

#include "hilbeq/error.hpp"

namespace hilbeq {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::TooLarge, "form coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::TooLarge, "form coefficient overflow");
  return r;
}

}  // namespace

void EquationForm::add(std::int64_t c, std::uint64_t u) {
  if (kind_ != Kind::Linear) throw Error(ErrorKind::PreconditionFailed, "linear term in a quadratic form");
  if (c != 0) terms_.push_back({c, u, kNone});
}

void EquationForm::add(std::int64_t c, std::uint64_t u, std::uint64_t v) {
  if (kind_ != Kind::Quadratic) throw Error(ErrorKind::PreconditionFailed, "quadratic term in a linear form");
  if (u > v) std::swap(u, v);
  if (c != 0) terms_.push_back({c, u, v});
}

void EquationForm::finalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  std::vector<Term> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().u == t.u && merged.back().v == t.v)
      merged.back().c = checked_add(merged.back().c, t.c);
    else
      merged.push_back(t);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.c == 0; }), merged.end());
  terms_ = std::move(merged);
}

int EquationForm::normalize_sign() {
  if (terms_.empty() || terms_.front().c > 0) return 1;
  for (auto& t : terms_) t.c = -t.c;
  return -1;
}

Scalar EquationForm::evaluate(const std::vector<Scalar>& coords, const Field& field) const {
  Scalar sum(field);
  for (const auto& t : terms_) {
    if (t.u >= coords.size() || (t.v != kNone && t.v >= coords.size()))
      throw Error(ErrorKind::DimensionMismatch, "form refers to a coordinate outside the vector");
    const Scalar& a = coords[t.u];
    if (a.is_zero()) continue;
    if (t.v == kNone) {
      sum.add_mul(Scalar(field, static_cast<long>(t.c)), a);
    } else {
      const Scalar& b = coords[t.v];
      if (!b.is_zero()) sum.add_mul(Scalar(field, static_cast<long>(t.c)) * a, b);
    }
  }
  return sum;
}

EquationForm EquationForm::product(const EquationForm& a, const EquationForm& b) {
  if (a.kind_ != Kind::Linear || b.kind_ != Kind::Linear)
    throw Error(ErrorKind::PreconditionFailed, "product needs two linear forms");
  EquationForm out(Kind::Quadratic);
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.add(checked_mul(s.c, t.c), s.u, t.u);
  out.finalize();
  return out;
}

EquationForm operator-(const EquationForm& a, const EquationForm& b) {
  if (a.kind_ != b.kind_) throw Error(ErrorKind::PreconditionFailed, "difference of forms of different kinds");
  EquationForm out = a;
  for (const auto& t : b.terms_) out.terms_.push_back({-t.c, t.u, t.v});
  out.finalize();
  return out;
}

bool operator<(const EquationForm& a, const EquationForm& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                      [](const EquationForm::Term& x, const EquationForm::Term& y) {
                                        return std::tie(x.u, x.v, x.c) < std::tie(y.u, y.v, y.c);
                                      });
}

}  // namespace hilbeq
