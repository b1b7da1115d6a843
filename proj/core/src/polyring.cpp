#include "hilbeq/polyring.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hilbeq/error.hpp"

namespace hilbeq {

namespace {

constexpr int kMaxVariables = 8;

void enumerate(int vars, int d, std::vector<int>& prefix, std::vector<Monomial>& out) {
  if (static_cast<int>(prefix.size()) == vars - 1) {
    prefix.push_back(d);
    out.push_back(Monomial{prefix});
    prefix.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    prefix.push_back(e);
    enumerate(vars, d - e, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Monomial> monomial_list(int n, int d) {
  std::vector<Monomial> out;
  std::vector<int> prefix;
  enumerate(n + 1, d, prefix, out);
  return out;
}

std::uint64_t pack_exponents(const Monomial& m) {
  std::uint64_t k = 0;
  for (int e : m.e) k = (k << 8) | static_cast<std::uint64_t>(e);
  return k;
}

// Leading (first nonzero) column of each echelon row.
std::vector<std::size_t> leading_columns(const Matrix& rows) {
  std::vector<std::size_t> lead;
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    std::size_t c = 0;
    while (c < rows.cols() && rows(r, c).is_zero()) ++c;
    lead.push_back(c);
  }
  return lead;
}

}  // namespace

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << i;
    if (e[i] > 1) os << '^' << e[i];
  }
  return first ? "1" : os.str();
}

bool canonical_before(const Monomial& a, const Monomial& b) { return a.e > b.e; }

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
  if (n < 0 || d < 0) throw Error(ErrorKind::PreconditionFailed, "monomial basis needs n >= 0 and d >= 0");
  if (n + 1 > kMaxVariables || d > 255) throw Error(ErrorKind::TooLarge, "at most 8 variables and degree 255");
  monomials_ = monomial_list(n, d);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(key(monomials_[i]), i);
  const auto next = monomial_list(n, d + 1);
  std::unordered_map<std::uint64_t, std::size_t> next_index;
  for (std::size_t i = 0; i < next.size(); ++i) next_index.emplace(pack_exponents(next[i]), i);
  mul_.resize(static_cast<std::size_t>(n + 1) * monomials_.size());
  for (int v = 0; v <= n; ++v)
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
      Monomial m = monomials_[i];
      ++m.e[static_cast<std::size_t>(v)];
      mul_[static_cast<std::size_t>(v) * monomials_.size() + i] = next_index.at(pack_exponents(m));
    }
}

std::uint64_t MonomialBasis::key(const Monomial& m) const { return pack_exponents(m); }

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  if (static_cast<int>(m.e.size()) != n_ + 1 || m.degree() != d_)
    throw Error(ErrorKind::DimensionMismatch, "monomial " + m.to_string() + " is not in this degree piece");
  return index_.at(key(m));
}

const MonomialBasis& monomial_basis(int n, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, d}];
  if (!slot) slot = std::make_unique<MonomialBasis>(n, d);
  return *slot;
}

int Polynomial::homogeneous_degree() const {
  if (terms.empty()) throw Error(ErrorKind::ZeroForm, "zero polynomial has no degree");
  const int d = terms.front().first.degree();
  for (const auto& t : terms)
    if (t.first.degree() != d) throw Error(ErrorKind::MixedDegrees, "polynomial " + to_string() + " is not homogeneous");
  return d;
}

std::string Polynomial::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c.to_string() << '*';
    os << m.to_string();
  }
  return os.str();
}

std::vector<Polynomial> parse_polynomials(const std::string& text, int n, const Field& field) {
  std::vector<Polynomial> out;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::Parse, why + " in '" + text + "'"); };
  std::size_t i = 0;
  auto read_uint = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected a number");
    return s.substr(start, i - start);
  };
  while (i <= s.size()) {
    std::map<std::vector<int>, Scalar, std::greater<>> acc;
    bool any = false;
    while (i < s.size() && s[i] != ',') {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (any) {
        fail("expected + or -");
      }
      any = true;
      Scalar coeff = Scalar::one(field);
      bool have_factor = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::string num = read_uint();
        if (i < s.size() && s[i] == '/') {
          ++i;
          num += "/" + read_uint();
        }
        coeff = Scalar::parse(field, num);
        have_factor = true;
      }
      std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
      while (i < s.size()) {
        if (s[i] == '*') {
          ++i;
          continue;
        }
        if (s[i] != 'x') break;
        ++i;
        const long var = std::stol(read_uint());
        if (var > n) fail("variable x" + std::to_string(var) + " outside x0..x" + std::to_string(n));
        long power = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          power = std::stol(read_uint());
        }
        e[static_cast<std::size_t>(var)] += static_cast<int>(power);
        have_factor = true;
      }
      if (!have_factor) fail("empty term");
      if (sign < 0) coeff = -coeff;
      auto [it, inserted] = acc.emplace(e, coeff);
      if (!inserted) it->second += coeff;
    }
    if (!any) fail("empty polynomial");
    Polynomial p{field, n, {}};
    for (auto& [e, c] : acc)
      if (!c.is_zero()) p.terms.emplace_back(Monomial{e}, c);
    out.push_back(std::move(p));
    if (i >= s.size()) break;
    ++i;  // comma
    if (i == s.size()) fail("trailing comma");
  }
  return out;
}

GradedSubspace::GradedSubspace(const Field& field, int n, int d)
    : n_(n), d_(d), rows_(field, 0, monomial_basis(n, d).size()) {}

GradedSubspace GradedSubspace::from_rows(int n, int d, const Matrix& rows) {
  if (rows.cols() != monomial_basis(n, d).size())
    throw Error(ErrorKind::DimensionMismatch, "row length does not match dim S_d");
  return GradedSubspace(n, d, row_space_basis(rows));
}

GradedSubspace GradedSubspace::full(const Field& field, int n, int d) {
  return GradedSubspace(n, d, Matrix::identity(field, monomial_basis(n, d).size()));
}

GradedSubspace GradedSubspace::from_monomials(const Field& field, int n, int d, const std::vector<Monomial>& mons) {
  const auto& basis = monomial_basis(n, d);
  Matrix rows(field, mons.size(), basis.size());
  for (std::size_t i = 0; i < mons.size(); ++i) rows(i, basis.index_of(mons[i])) = Scalar::one(field);
  return from_rows(n, d, rows);
}

Matrix GradedSubspace::annihilator() const { return kernel_basis(rows_).transpose(); }

bool GradedSubspace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "vector length does not match dim S_d");
  std::vector<Scalar> w = v;
  const auto lead = leading_columns(rows_);
  for (std::size_t r = 0; r < rows_.rows(); ++r) {
    if (w[lead[r]].is_zero()) continue;
    const Scalar f = w[lead[r]];
    for (std::size_t c = lead[r]; c < ambient_dim(); ++c)
      if (!rows_(r, c).is_zero()) w[c].sub_mul(f, rows_(r, c));
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  if (other.n_ != n_ || other.d_ != d_) throw Error(ErrorKind::DimensionMismatch, "subspaces of different S_d");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.rows_.row(r))) return false;
  return true;
}

Matrix multiplication_map(int n, int d, const LinearForm& form) {
  if (static_cast<int>(form.size()) != n + 1) throw Error(ErrorKind::DimensionMismatch, "linear form length");
  const Field f = form.front().field();
  const auto& src = monomial_basis(n, d);
  const auto& dst = monomial_basis(n, d + 1);
  Matrix m(f, dst.size(), src.size());
  for (int v = 0; v <= n; ++v) {
    const Scalar& c = form[static_cast<std::size_t>(v)];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < src.size(); ++j) m(src.times_var(v, j), j) += c;
  }
  return m;
}

Matrix variable_map(const Field& field, int n, int d, int var) {
  LinearForm form(static_cast<std::size_t>(n + 1), Scalar(field));
  form[static_cast<std::size_t>(var)] = Scalar::one(field);
  return multiplication_map(n, d, form);
}

LinearPolyMatrix generic_multiplication_map(const Field& field, int n, int d) {
  const auto& src = monomial_basis(n, d);
  const auto& dst = monomial_basis(n, d + 1);
  const unsigned nv = static_cast<unsigned>(n + 1);
  LinearPolyMatrix m(field, nv, dst.size(), src.size());
  for (int v = 0; v <= n; ++v)
    for (std::size_t j = 0; j < src.size(); ++j)
      m.set(src.times_var(v, j), j, MPoly::variable(field, nv, static_cast<unsigned>(v)));
  return m;
}

GradedSubspace ideal_degree_piece(const std::vector<Polynomial>& generators, int n, int d, const Field& field) {
  const auto& target = monomial_basis(n, d);
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.n != n) throw Error(ErrorKind::DimensionMismatch, "generator in a different polynomial ring");
    const int e = g.homogeneous_degree();
    if (e > d)
      throw Error(ErrorKind::DegreeTooLow, "generator " + g.to_string() + " has degree " + std::to_string(e) +
                                               " above " + std::to_string(d));
    for (const auto& m : monomial_basis(n, d - e).monomials()) {
      std::vector<Scalar> row(target.size(), Scalar(field));
      for (const auto& [mono, c] : g.terms) {
        Monomial prod = mono;
        for (std::size_t i = 0; i < prod.e.size(); ++i) prod.e[i] += m.e[i];
        row[target.index_of(prod)] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return GradedSubspace(field, n, d);
  return GradedSubspace::from_rows(n, d, Matrix::from_rows(field, rows));
}

GradedSubspace multiply_by_S1(const GradedSubspace& w) {
  std::vector<Matrix> blocks;
  const Matrix basis = w.basis();
  for (int v = 0; v <= w.n(); ++v) blocks.push_back((variable_map(w.field(), w.n(), w.d(), v) * basis).transpose());
  if (w.dim() == 0) return GradedSubspace(w.field(), w.n(), w.d() + 1);
  return GradedSubspace::from_rows(w.n(), w.d() + 1, Matrix::vstack(blocks));
}

GradedSubspace colon_by_linear(const GradedSubspace& I, const LinearForm& l) {
  if (I.d() < 1) throw Error(ErrorKind::PreconditionFailed, "colon needs I in degree >= 1");
  bool zero = true;
  for (const auto& c : l) zero = zero && c.is_zero();
  if (zero) throw Error(ErrorKind::ZeroForm, "colon by the zero linear form");
  const Matrix q = I.annihilator();
  const Matrix k = kernel_basis(q * multiplication_map(I.n(), I.d() - 1, l));
  return GradedSubspace::from_rows(I.n(), I.d() - 1, k.transpose());
}

GradedSubspace colon_by_S1(const GradedSubspace& I) {
  if (I.d() < 1) throw Error(ErrorKind::PreconditionFailed, "colon needs I in degree >= 1");
  const Matrix q = I.annihilator();
  std::vector<Matrix> blocks;
  for (int v = 0; v <= I.n(); ++v) blocks.push_back(q * variable_map(I.field(), I.n(), I.d() - 1, v));
  const Matrix k = kernel_basis(Matrix::vstack(blocks));
  return GradedSubspace::from_rows(I.n(), I.d() - 1, k.transpose());
}

GenericColonResult generic_colon(const GradedSubspace& I) {
  if (I.d() < 1) throw Error(ErrorKind::PreconditionFailed, "colon needs I in degree >= 1");
  const Field& field = I.field();
  const int n = I.n(), d = I.d() - 1;
  const unsigned nv = static_cast<unsigned>(n + 1);
  const auto& src = monomial_basis(n, d);
  const Matrix q = I.annihilator();

  LinearPolyMatrix b(field, nv, q.rows(), src.size());
  for (std::size_t r = 0; r < q.rows(); ++r)
    for (std::size_t c = 0; c < src.size(); ++c) {
      MPoly entry(field, nv);
      for (int v = 0; v <= n; ++v) {
        const Scalar& coeff = q(r, src.times_var(v, c));
        if (!coeff.is_zero()) entry += MPoly::variable(field, nv, static_cast<unsigned>(v)) * coeff;
      }
      b.set(r, c, std::move(entry));
    }

  const FractionFreeEchelon e = fraction_free_echelon(b);
  GenericColonResult res;
  res.n = n;
  res.d = d;
  res.codim = e.rank();
  res.denominator = e.denominator;

  std::vector<bool> is_pivot(src.size(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < src.size(); ++c)
    if (!is_pivot[c]) free.push_back(c);

  // k-rational iff every entry of the reduced form entries/denominator is constant.
  const auto& den_lead = e.denominator.terms().front();
  std::vector<std::vector<Scalar>> ratio(e.rank(), std::vector<Scalar>(src.size(), Scalar(field)));
  for (std::size_t t = 0; t < e.rank() && res.k_rational; ++t)
    for (std::size_t f : free) {
      const MPoly& num = e.at(t, f);
      if (num.is_zero()) continue;
      const auto& lead = num.terms().front();
      if (lead.first != den_lead.first) {
        res.k_rational = false;
        break;
      }
      const Scalar c = lead.second / den_lead.second;
      if (!(num == e.denominator * c)) {
        res.k_rational = false;
        break;
      }
      ratio[t][f] = c;
    }

  if (res.k_rational) {
    res.denominator = MPoly::constant(field, nv, Scalar::one(field));
    Matrix rows(field, free.size(), src.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
      rows(k, free[k]) = Scalar::one(field);
      for (std::size_t t = 0; t < e.rank(); ++t) rows(k, e.pivots[t]) = -ratio[t][free[k]];
    }
    GradedSubspace basis = GradedSubspace::from_rows(n, d, rows);
    for (std::size_t k = 0; k < basis.dim(); ++k) {
      std::vector<MPoly> col;
      for (std::size_t c = 0; c < src.size(); ++c) col.push_back(MPoly::constant(field, nv, basis.rows()(k, c)));
      res.numerators.push_back(std::move(col));
    }
    res.rational_basis = std::move(basis);
  } else {
    for (std::size_t f : free) {
      std::vector<MPoly> col(src.size(), MPoly(field, nv));
      col[f] = e.denominator;
      for (std::size_t t = 0; t < e.rank(); ++t) col[e.pivots[t]] = -e.at(t, f);
      res.numerators.push_back(std::move(col));
    }
  }
  return res;
}

Matrix substitution_matrix(const Matrix& g, int d) {
  const int n_src = static_cast<int>(g.rows()) - 1;
  const int n_dst = static_cast<int>(g.cols()) - 1;
  const Field& f = g.field();
  // images[level][i] = image of the i-th monomial of degree `level`, as a vector in target degree `level`.
  std::vector<std::vector<Scalar>> prev{{Scalar::one(f)}};
  for (int level = 1; level <= d; ++level) {
    const auto& src = monomial_basis(n_src, level);
    const auto& src_prev = monomial_basis(n_src, level - 1);
    const auto& dst_prev = monomial_basis(n_dst, level - 1);
    const auto& dst = monomial_basis(n_dst, level);
    std::vector<std::vector<Scalar>> cur;
    cur.reserve(src.size());
    for (const auto& m : src.monomials()) {
      std::size_t j = 0;
      while (m.e[j] == 0) ++j;
      Monomial rest = m;
      --rest.e[j];
      const auto& base = prev[src_prev.index_of(rest)];
      std::vector<Scalar> img(dst.size(), Scalar(f));
      for (std::size_t i = 0; i < dst_prev.size(); ++i) {
        if (base[i].is_zero()) continue;
        for (int k = 0; k <= n_dst; ++k) {
          const Scalar& gk = g(j, static_cast<std::size_t>(k));
          if (!gk.is_zero()) img[dst_prev.times_var(k, i)].add_mul(base[i], gk);
        }
      }
      cur.push_back(std::move(img));
    }
    prev = std::move(cur);
  }
  const auto& dst = monomial_basis(n_dst, d);
  Matrix t(f, dst.size(), prev.size());
  for (std::size_t c = 0; c < prev.size(); ++c)
    for (std::size_t r = 0; r < dst.size(); ++r) t(r, c) = prev[c][r];
  return t;
}

GradedSubspace substitute(const GradedSubspace& w, const Matrix& g) {
  const int n_dst = static_cast<int>(g.cols()) - 1;
  if (w.dim() == 0) return GradedSubspace(w.field(), n_dst, w.d());
  const Matrix t = substitution_matrix(g, w.d());
  return GradedSubspace::from_rows(n_dst, w.d(), (t * w.basis()).transpose());
}

GradedSubspace restrict_to_hyperplane(const GradedSubspace& w, const std::vector<Scalar>& c) {
  const int n = w.n();
  if (n < 1 || static_cast<int>(c.size()) != n) throw Error(ErrorKind::DimensionMismatch, "hyperplane coefficients");
  Matrix g(w.field(), static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    g(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = Scalar::one(w.field());
    g(static_cast<std::size_t>(n), static_cast<std::size_t>(i)) = c[static_cast<std::size_t>(i)];
  }
  return substitute(w, g);
}

}  // namespace hilbeq
