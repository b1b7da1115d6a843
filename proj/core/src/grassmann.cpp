#include "hilbeq/grassmann.hpp"

#include <algorithm>
#include <set>

#include "hilbeq/error.hpp"
#include "hilbeq/rng.hpp"

namespace hilbeq {

CanonicalIndex canonical_index(std::vector<std::uint32_t> tuple) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < tuple.size(); ++i)
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return {{}, 0};
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  return {std::move(tuple), sign};
}

CanonicalIndex canonical_index(const std::vector<Monomial>& tuple) {
  if (tuple.empty()) return {{}, 1};
  const int d = tuple.front().degree();
  const int n = static_cast<int>(tuple.front().e.size()) - 1;
  for (const auto& m : tuple)
    if (m.degree() != d || static_cast<int>(m.e.size()) != n + 1)
      throw Error(ErrorKind::MixedDegrees, "Plücker index mixes monomials of different degrees");
  const auto& basis = monomial_basis(n, d);
  std::vector<std::uint32_t> pos;
  for (const auto& m : tuple) pos.push_back(static_cast<std::uint32_t>(basis.index_of(m)));
  return canonical_index(std::move(pos));
}

SubsetRanker::SubsetRanker(std::size_t N, std::size_t r) : N_(N), r_(r) {
  const std::size_t K = r + 2;
  table_.assign((N + 1) * K, 0);
  for (std::size_t x = 0; x <= N; ++x) {
    table_[x * K] = 1;
    for (std::size_t k = 1; k < K && k <= x; ++k) {
      const std::uint64_t a = table_[(x - 1) * K + k - 1];
      const std::uint64_t b = table_[(x - 1) * K + k];
      table_[x * K + k] = (a > UINT64_MAX - b) ? UINT64_MAX : a + b;
    }
  }
  count_ = r <= N ? binom(N, r) : 0;
}

std::uint64_t SubsetRanker::binom(std::size_t x, std::size_t k) const {
  if (k > r_ + 1 || x > N_ || k > x) return 0;
  return table_[x * (r_ + 2) + k];
}

std::uint64_t SubsetRanker::rank(const PluckerIndex& j) const {
  if (j.size() != r_) throw Error(ErrorKind::DimensionMismatch, "Plücker index of the wrong length");
  std::uint64_t s = 0;
  for (std::size_t t = 0; t < j.size(); ++t) {
    if (j[t] >= N_ || (t > 0 && j[t] <= j[t - 1]))
      throw Error(ErrorKind::DimensionMismatch, "Plücker index is not a strictly increasing subset");
    s += binom(j[t], t + 1);
  }
  return s;
}

PluckerIndex SubsetRanker::unrank(std::uint64_t rank) const {
  PluckerIndex j(r_);
  std::size_t x = N_;
  for (std::size_t t = r_; t-- > 0;) {
    // largest x with C(x, t+1) <= rank
    do --x;
    while (binom(x, t + 1) > rank);
    j[t] = static_cast<std::uint32_t>(x);
    rank -= binom(x, t + 1);
  }
  return j;
}

bool SubsetRanker::next(PluckerIndex& j) const {
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::size_t limit = t + 1 < j.size() ? j[t + 1] : N_;
    if (j[t] + 1 < limit) {
      ++j[t];
      for (std::size_t s = 0; s < t; ++s) j[s] = static_cast<std::uint32_t>(s);
      return true;
    }
  }
  return false;
}

QuotientProjection quotient_projection(const GradedSubspace& w) {
  const std::size_t N = w.ambient_dim();
  const Field& f = w.field();
  std::vector<std::size_t> reversed(N);
  for (std::size_t c = 0; c < N; ++c) reversed[c] = N - 1 - c;
  const Echelon e = rref(w.rows().select_columns(reversed));

  std::vector<bool> dependent(N, false);
  for (auto p : e.pivots) dependent[N - 1 - p] = true;
  QuotientProjection q;
  std::vector<std::size_t> slot(N, 0);
  for (std::size_t c = 0; c < N; ++c)
    if (!dependent[c]) {
      slot[c] = q.quotient_monomials.size();
      q.quotient_monomials.push_back(c);
    }
  const std::size_t r = q.quotient_monomials.size();
  q.N = Matrix(f, r, N);
  for (std::size_t t = 0; t < r; ++t) q.N(t, q.quotient_monomials[t]) = Scalar::one(f);
  for (std::size_t t = 0; t < e.rank(); ++t) {
    const std::size_t p = N - 1 - e.pivots[t];
    for (std::size_t s = 0; s < r; ++s) {
      const std::size_t c = q.quotient_monomials[s];
      const Scalar& x = e.reduced(t, N - 1 - c);
      if (!x.is_zero()) q.N(s, p) = -x;
    }
  }
  return q;
}

PluckerVector::PluckerVector(const Field& field, int n, int d, std::size_t r, std::vector<Scalar> coords)
    : field_(field), n_(n), d_(d), ranker_(monomial_basis(n, d).size(), r), coords_(std::move(coords)) {
  if (coords_.size() != ranker_.count())
    throw Error(ErrorKind::DimensionMismatch, "coordinate count does not match C(dim S_d, r)");
  bool all_zero = true;
  for (const auto& c : coords_) {
    if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "coordinate from another field");
    all_zero = all_zero && c.is_zero();
  }
  if (all_zero) throw Error(ErrorKind::PreconditionFailed, "Plücker vector is identically zero");
}

PluckerVector PluckerVector::scaled(const Scalar& s) const {
  if (s.is_zero()) throw Error(ErrorKind::PreconditionFailed, "scaling by zero");
  PluckerVector out = *this;
  for (auto& c : out.coords_) c *= s;
  return out;
}

std::vector<Scalar> maximal_minors(const Matrix& m) {
  const SubsetRanker ranker(m.cols(), m.rows());
  if (m.rows() > m.cols()) throw Error(ErrorKind::DimensionMismatch, "more rows than columns");
  if (ranker.count() > kMaxPluckerCoordinates)
    throw Error(ErrorKind::TooLarge, "Grassmannian has more than " + std::to_string(kMaxPluckerCoordinates) +
                                         " Plücker coordinates");
  std::vector<Scalar> out;
  out.reserve(ranker.count());
  PluckerIndex j(m.rows());
  for (std::size_t t = 0; t < j.size(); ++t) j[t] = static_cast<std::uint32_t>(t);
  std::vector<std::size_t> cols(j.size());
  do {
    for (std::size_t t = 0; t < j.size(); ++t) cols[t] = j[t];
    out.push_back(determinant(m.select_columns(cols)));
  } while (ranker.next(j));
  return out;
}

PluckerVector plucker_from_matrix(int n, int d, const Matrix& m) {
  if (m.cols() != monomial_basis(n, d).size()) throw Error(ErrorKind::DimensionMismatch, "matrix width is not dim S_d");
  return PluckerVector(m.field(), n, d, m.rows(), maximal_minors(m));
}

PluckerVector plucker_from_subspace(const GradedSubspace& w) {
  const QuotientProjection q = quotient_projection(w);
  PluckerVector v = plucker_from_matrix(w.n(), w.d(), q.N);
  v.source_ = w;
  return v;
}

PluckerVector plucker_from_subspace(const GradedSubspace& w, std::size_t r) {
  if (w.codim() != r)
    throw Error(ErrorKind::WrongCodimension,
                "subspace has codimension " + std::to_string(w.codim()) + ", expected " + std::to_string(r));
  return plucker_from_subspace(w);
}

Decomposition decomposable_check(const PluckerVector& v) {
  const Field& f = v.field();
  const auto& coords = v.coords();
  const auto& ranker = v.ranker();
  const std::size_t N = v.ambient_dim(), r = v.r();
  std::size_t k0 = 0;
  while (coords[k0].is_zero()) ++k0;
  const PluckerIndex J = ranker.unrank(k0);
  const Scalar inv = coords[k0].inverse();

  Matrix n0(f, r, N);
  std::vector<bool> in_j(N, false);
  for (std::size_t t = 0; t < r; ++t) {
    n0(t, J[t]) = Scalar::one(f);
    in_j[J[t]] = true;
  }
  for (std::size_t c = 0; c < N; ++c) {
    if (in_j[c]) continue;
    for (std::size_t t = 0; t < r; ++t) {
      PluckerIndex tuple = J;
      tuple[t] = static_cast<std::uint32_t>(c);
      const CanonicalIndex ci = canonical_index(std::move(tuple));
      const Scalar& p = coords[ranker.rank(ci.index)];
      if (p.is_zero()) continue;
      n0(t, c) = (ci.sign > 0 ? p : -p) * inv;
    }
  }
  const std::vector<Scalar> minors = maximal_minors(n0);
  Decomposition out;
  for (std::size_t k = 0; k < minors.size(); ++k)
    if (!(minors[k] == coords[k] * inv)) return out;
  out.decomposable = true;
  out.subspace = GradedSubspace::from_rows(v.n(), v.d(), kernel_basis(n0).transpose());
  return out;
}

bool proportional(const PluckerVector& a, const PluckerVector& b) {
  if (a.coords().size() != b.coords().size() || !(a.field() == b.field())) return false;
  const auto& x = a.coords();
  const auto& y = b.coords();
  std::size_t k = 0;
  while (k < x.size() && x[k].is_zero()) ++k;
  if (k == x.size() || y[k].is_zero()) return false;
  const Scalar lambda = x[k] / y[k];
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] == lambda * y[i])) return false;
  return true;
}

namespace {

PluckerIndex random_subset(std::size_t N, std::size_t k, SplitMix64& rng) {
  std::vector<std::uint32_t> pool(N);
  for (std::size_t i = 0; i < N; ++i) pool[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(N - i)]);
  PluckerIndex out(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(out.begin(), out.end());
  return out;
}

EquationForm shuffle_relation(const SubsetRanker& ranker, const PluckerIndex& i, const PluckerIndex& j) {
  EquationForm form(EquationForm::Kind::Quadratic);
  for (std::size_t t = 0; t < j.size(); ++t) {
    std::vector<std::uint32_t> left = i;
    left.push_back(j[t]);
    const CanonicalIndex ci = canonical_index(std::move(left));
    if (ci.sign == 0) continue;
    PluckerIndex right;
    for (std::size_t s = 0; s < j.size(); ++s)
      if (s != t) right.push_back(j[s]);
    const int sign = (t % 2 == 0 ? 1 : -1) * ci.sign;
    form.add(sign, ranker.rank(ci.index), ranker.rank(right));
  }
  form.finalize();
  form.normalize_sign();
  return form;
}

}  // namespace

std::vector<EquationForm> plucker_relations_sample(std::size_t N, std::size_t r, std::size_t count,
                                                   std::uint64_t seed) {
  if (r == 0 || r >= N || count == 0) return {};
  const SubsetRanker ranker(N, r);
  const SubsetRanker left(N, r - 1), right(N, r + 1);
  std::set<EquationForm> found;
  const long double pairs = static_cast<long double>(left.count()) * static_cast<long double>(right.count());
  if (pairs <= static_cast<long double>(count)) {
    PluckerIndex i(r - 1);
    for (std::size_t t = 0; t < i.size(); ++t) i[t] = static_cast<std::uint32_t>(t);
    do {
      PluckerIndex j(r + 1);
      for (std::size_t t = 0; t < j.size(); ++t) j[t] = static_cast<std::uint32_t>(t);
      do {
        EquationForm f = shuffle_relation(ranker, i, j);
        if (!f.is_zero()) found.insert(std::move(f));
      } while (right.next(j));
    } while (left.next(i));
  } else {
    SplitMix64 rng(seed);
    for (std::size_t attempt = 0; attempt < 20 * count && found.size() < count; ++attempt) {
      const PluckerIndex i = random_subset(N, r - 1, rng);
      const PluckerIndex j = random_subset(N, r + 1, rng);
      EquationForm f = shuffle_relation(ranker, i, j);
      if (!f.is_zero()) found.insert(std::move(f));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace hilbeq
