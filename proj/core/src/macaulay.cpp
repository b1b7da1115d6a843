#include "hilbeq/macaulay.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hilbeq/error.hpp"

namespace hilbeq {

namespace {

constexpr std::size_t kMaxGotzmann = 100000;

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorKind::TooLarge, "integer overflow");
  return static_cast<std::int64_t>(v);
}

// Coefficients of C(t + s, a) as a polynomial in t, increasing degree.
std::vector<mpq_class> binomial_poly(long s, int a) {
  std::vector<mpq_class> p{1};
  for (int j = 0; j < a; ++j) {
    // multiply by (t + s - j)
    std::vector<mpq_class> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] += p[i] * (s - j);
    }
    p = std::move(q);
  }
  mpz_class fact = 1;
  for (int j = 2; j <= a; ++j) fact *= j;
  for (auto& c : p) c /= fact;
  return p;
}

void trim(std::vector<mpq_class>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<mpq_class> coefficients_of(const std::vector<int>& a) {
  std::vector<mpq_class> total;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto b = binomial_poly(a[i] - static_cast<long>(i), a[i]);
    if (b.size() > total.size()) total.resize(b.size(), 0);
    for (std::size_t j = 0; j < b.size(); ++j) total[j] += b[j];
  }
  trim(total);
  return total;
}

std::string poly_string(const std::vector<mpq_class>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    mpq_class v = c[k];
    if (v < 0) {
      os << "-";
      v = -v;
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (k == 0 || v != 1) os << v.get_str();
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return first ? "0" : os.str();
}

std::vector<mpq_class> parse_coefficients(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorKind::Parse, "empty Hilbert polynomial");
  std::vector<mpq_class> coeffs;
  std::size_t i = 0;
  auto fail = [&]() { throw Error(ErrorKind::Parse, "cannot parse Hilbert polynomial '" + raw + "'"); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    mpq_class coeff = 1;
    const bool has_number = i > start;
    if (has_number) {
      if (coeff.set_str(s.substr(start, i - start), 10) != 0 || coeff.get_den() == 0) fail();
      coeff.canonicalize();
    }
    if (i < s.size() && s[i] == '*') ++i;
    std::size_t power = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t ps = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (ps == i) fail();
        power = std::stoul(s.substr(ps, i - ps));
      }
    } else if (!has_number) {
      fail();
    }
    if (power > 64) fail();
    if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
    coeffs[power] += sign * coeff;
  }
  return coeffs;
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > INT64_MAX) throw Error(ErrorKind::TooLarge, "binomial coefficient overflow");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t MacaulayRep::value() const {
  __int128 s = 0;
  for (std::size_t i = 0; i < k.size(); ++i) s += binomial(k[i], d - static_cast<int>(i));
  return checked(s);
}

MacaulayRep macaulay_rep(std::int64_t c, int d) {
  if (c < 0 || d < 1) throw Error(ErrorKind::PreconditionFailed, "macaulay_rep needs c >= 0 and d >= 1");
  MacaulayRep rep{d, {}};
  for (int j = d; j >= 1 && c > 0; --j) {
    // largest k with C(k, j) <= c
    std::int64_t k = j;
    while (binomial(k + 1, j) <= c) ++k;
    rep.k.push_back(k);
    c -= binomial(k, j);
  }
  return rep;
}

std::int64_t macaulay_upper(std::int64_t c, int d) {
  const MacaulayRep rep = macaulay_rep(c, d);
  __int128 s = 0;
  for (std::size_t i = 0; i < rep.k.size(); ++i) {
    const std::int64_t j = d - static_cast<std::int64_t>(i);
    s += binomial(rep.k[i] + 1, j + 1);
  }
  return checked(s);
}

std::int64_t macaulay_lower(std::int64_t c, int d) {
  const MacaulayRep rep = macaulay_rep(c, d);
  __int128 s = 0;
  for (std::size_t i = 0; i < rep.k.size(); ++i) {
    const std::int64_t j = d - static_cast<std::int64_t>(i);
    s += binomial(rep.k[i] - 1, j);
  }
  return checked(s);
}

HilbertSpec HilbertSpec::from_decomposition(std::vector<int> a) {
  if (a.empty()) throw Error(ErrorKind::NotAdmissible, "empty decomposition (zero polynomial)");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw Error(ErrorKind::NotAdmissible, "negative entry in decomposition");
    if (i > 0 && a[i] > a[i - 1]) throw Error(ErrorKind::NotAdmissible, "decomposition must be nonincreasing");
  }
  if (a.size() > kMaxGotzmann) throw Error(ErrorKind::TooLarge, "Gotzmann number too large");
  HilbertSpec s;
  s.a_ = std::move(a);
  s.coeffs_ = coefficients_of(s.a_);
  return s;
}

HilbertSpec HilbertSpec::from_coefficients(std::vector<mpq_class> coeffs) {
  trim(coeffs);
  if (coeffs.empty()) throw Error(ErrorKind::NotAdmissible, "zero polynomial");
  const std::vector<mpq_class> original = coeffs;
  std::vector<int> a;
  while (!coeffs.empty()) {
    const int layer = static_cast<int>(coeffs.size()) - 1;
    if (coeffs.back() < 0)
      throw Error(ErrorKind::NotAdmissible, "negative leading coefficient at binomial layer " +
                                                std::to_string(a.size() + 1) + " (degree " +
                                                std::to_string(layer) + ")");
    if (layer == 0 && coeffs[0].get_den() != 1)
      throw Error(ErrorKind::NotAdmissible, "non-integral constant remainder at binomial layer " +
                                                std::to_string(a.size() + 1));
    if (a.size() >= kMaxGotzmann) throw Error(ErrorKind::TooLarge, "Gotzmann number too large");
    const auto b = binomial_poly(layer - static_cast<long>(a.size()), layer);
    for (std::size_t j = 0; j < b.size(); ++j) coeffs[j] -= b[j];
    a.push_back(layer);
    trim(coeffs);
  }
  HilbertSpec s;
  s.a_ = std::move(a);
  s.coeffs_ = original;
  return s;
}

HilbertSpec HilbertSpec::parse(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.rfind("a:", 0) == 0) {
    if (t.size() < 4 || t[2] != '[' || t.back() != ']') throw Error(ErrorKind::Parse, "expected a:[...]");
    std::vector<int> a;
    std::stringstream ss(t.substr(3, t.size() - 4));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        a.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad decomposition entry '" + item + "'");
      }
    }
    return from_decomposition(std::move(a));
  }
  return from_coefficients(parse_coefficients(text));
}

std::int64_t HilbertSpec::operator()(std::int64_t d) const {
  mpq_class v = 0;
  mpq_class power = 1;
  for (const auto& c : coeffs_) {
    v += c * power;
    power *= d;
  }
  if (v.get_den() != 1 || !v.get_num().fits_slong_p())
    throw Error(ErrorKind::TooLarge, "Hilbert polynomial value out of range");
  return v.get_num().get_si();
}

std::int64_t HilbertSpec::eval_decomposition(std::int64_t d) const {
  __int128 s = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    // C(d + a_i - i, a_i) as a polynomial value (valid for any integer d)
    mpz_class num = 1, den = 1;
    for (int j = 0; j < a_[i]; ++j) {
      num *= static_cast<long>(d + a_[i] - static_cast<std::int64_t>(i) - j);
      den *= j + 1;
    }
    const mpz_class term = num / den;
    if (!term.fits_slong_p()) throw Error(ErrorKind::TooLarge, "Hilbert polynomial value out of range");
    s += term.get_si();
  }
  return checked(s);
}

std::string HilbertSpec::to_string() const { return poly_string(coeffs_); }

HilbertValue eval_hilbert(const HilbertSpec& spec, std::int64_t d) {
  return {spec(d), d < spec.gotzmann()};
}

}  // namespace hilbeq
