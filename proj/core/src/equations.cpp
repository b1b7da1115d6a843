#include "hilbeq/equations.hpp"

#include <algorithm>
#include <set>

#include "hilbeq/error.hpp"
#include "hilbeq/parallel.hpp"
#include "hilbeq/polyring.hpp"
#include "hilbeq/rng.hpp"

namespace hilbeq {

namespace {

constexpr std::uint64_t kMaxTriples = 200'000'000;

// Nondecreasing k-tuples over [0, M) in lexicographic order.
std::vector<MonomialTuple> multisets(std::size_t M, std::size_t k) {
  std::vector<MonomialTuple> out;
  if (k > 0 && M == 0) return out;
  MonomialTuple v(k, 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = k;
    while (i > 0 && v[i - 1] + 1 == M) --i;
    if (i == 0) return out;
    const std::uint32_t next = v[i - 1] + 1;
    for (std::size_t j = i - 1; j < k; ++j) v[j] = next;
  }
}

// Strictly increasing k-tuples over [0, M) in lexicographic order.
std::vector<MonomialTuple> subsets(std::size_t M, std::size_t k) {
  std::vector<MonomialTuple> out;
  if (k > M) return out;
  MonomialTuple v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = static_cast<std::uint32_t>(i);
  for (;;) {
    out.push_back(v);
    std::size_t i = k;
    while (i > 0 && v[i - 1] == M - k + i - 1) --i;
    if (i == 0) return out;
    ++v[i - 1];
    for (std::size_t j = i; j < k; ++j) v[j] = v[j - 1] + 1;
  }
}

std::vector<VariableMultiset> variable_multisets(int n, std::size_t k) {
  std::vector<VariableMultiset> out;
  for (const auto& m : monomial_basis(n, static_cast<int>(k)).monomials()) out.push_back(m.e);
  return out;
}

std::size_t checked_size(std::int64_t v, const char* what) {
  if (v < 0) throw Error(ErrorKind::NotAdmissible, std::string("negative ") + what);
  return static_cast<std::size_t>(v);
}

}  // namespace

EquationForm orbit_expansion(int n, int R, const MonomialTuple& m, const MonomialTuple& ntuple,
                             const VariableMultiset& alpha, const SubsetRanker& ranker) {
  const auto& basis = monomial_basis(n, R);
  std::vector<int> y;
  for (int v = 0; v <= n; ++v)
    for (int c = 0; c < alpha[static_cast<std::size_t>(v)]; ++c) y.push_back(v);
  if (y.size() != m.size()) throw Error(ErrorKind::DimensionMismatch, "variable multiset size differs from m-tuple");
  EquationForm form(EquationForm::Kind::Linear);
  std::vector<std::uint32_t> tuple(m.size() + ntuple.size());
  std::copy(ntuple.begin(), ntuple.end(), tuple.begin() + static_cast<std::ptrdiff_t>(m.size()));
  do {
    for (std::size_t i = 0; i < m.size(); ++i)
      tuple[i] = static_cast<std::uint32_t>(basis.times_var(y[i], m[i]));
    const CanonicalIndex ci = canonical_index(tuple);
    if (ci.sign != 0) form.add(ci.sign, ranker.rank(ci.index));
  } while (std::next_permutation(y.begin(), y.end()));
  form.finalize();
  return form;
}

ESet gen_E(const HilbertSpec& spec, int n, int R) {
  if (R < 1) throw Error(ErrorKind::PreconditionFailed, "R must be at least 1");
  ESet out;
  out.n = n;
  out.R = R;
  out.pR = checked_size(spec(R), "p(R)");
  out.pR1 = checked_size(spec(R + 1), "p(R+1)");
  if (spec.is_constant() || out.pR1 < out.pR + 1) return out;

  const std::size_t dimR = monomial_basis(n, R).size();
  const std::size_t dimR1 = monomial_basis(n, R + 1).size();
  const SubsetRanker ranker(dimR1, out.pR1);
  const auto ms = multisets(dimR, out.pR + 1);
  const auto ns = subsets(dimR1, out.pR1 - out.pR - 1);
  const auto xs = variable_multisets(n, out.pR + 1);
  const long double total = static_cast<long double>(ms.size()) * ns.size() * xs.size();
  if (total > kMaxTriples) throw Error(ErrorKind::TooLarge, "too many (m, n, x) triples for E");

  std::vector<std::vector<EquationForm>> per_m(ms.size());
  parallel_for(ms.size(), [&](std::size_t i) {
    auto& bucket = per_m[i];
    bucket.reserve(ns.size() * xs.size());
    for (const auto& nt : ns)
      for (const auto& x : xs) bucket.push_back(orbit_expansion(n, R, ms[i], nt, x, ranker));
  });

  std::set<EquationForm> seen;
  for (auto& bucket : per_m)
    for (auto& f : bucket) {
      ++out.stats.generated;
      if (f.is_zero()) {
        ++out.stats.zero;
        continue;
      }
      f.normalize_sign();
      if (!seen.insert(f).second) {
        ++out.stats.duplicates;
        continue;
      }
      out.forms.push_back(std::move(f));
    }
  return out;
}

std::uint64_t FTable::zero_count() const {
  std::uint64_t z = 0;
  for (const auto& e : entries) z += e.is_zero();
  return z;
}

FTable gen_F_symbols(const HilbertSpec& spec, int n, int R) {
  if (R < 1) throw Error(ErrorKind::PreconditionFailed, "R must be at least 1");
  FTable t;
  t.n = n;
  t.R = R;
  t.pR = checked_size(spec(R), "p(R)");
  t.pR1 = checked_size(spec(R + 1), "p(R+1)");
  if (t.pR1 < t.pR) throw Error(ErrorKind::NotAdmissible, "p(R+1) < p(R)");
  const std::size_t dimR = monomial_basis(n, R).size();
  const std::size_t dimR1 = monomial_basis(n, R + 1).size();
  const SubsetRanker ranker(dimR1, t.pR1);
  t.rows = multisets(dimR, t.pR);
  const auto ns = subsets(dimR1, t.pR1 - t.pR);
  const auto xs = variable_multisets(n, t.pR);
  for (const auto& nt : ns)
    for (const auto& x : xs) t.cols.emplace_back(nt, x);
  const long double total = static_cast<long double>(t.rows.size()) * t.cols.size();
  if (total > kMaxTriples) throw Error(ErrorKind::TooLarge, "too many F symbols");

  t.entries.resize(t.rows.size() * t.cols.size());
  parallel_for(t.rows.size(), [&](std::size_t r) {
    for (std::size_t c = 0; c < t.cols.size(); ++c)
      t.entries[r * t.cols.size() + c] = orbit_expansion(n, R, t.rows[r], t.cols[c].first, t.cols[c].second, ranker);
  });
  return t;
}

Matrix f_matrix(const FTable& table, const PluckerVector& point) {
  if (point.d() != table.R + 1 || point.r() != table.pR1 || point.n() != table.n)
    throw Error(ErrorKind::DimensionMismatch, "point is not in Grass(S_{R+1}, p(R+1)) for this table");
  const Field& f = point.field();
  Matrix m(f, table.rows.size(), table.cols.size());
  parallel_for(table.rows.size(), [&](std::size_t r) {
    for (std::size_t c = 0; c < table.cols.size(); ++c) m(r, c) = table.at(r, c).evaluate(point.coords(), f);
  });
  return m;
}

CrossQuadricResult cross_quadric_residual(const Matrix& fm) {
  CrossQuadricResult res;
  std::size_t r1 = 0, c1 = 0;
  bool found = false;
  for (std::size_t r = 0; r < fm.rows() && !found; ++r)
    for (std::size_t c = 0; c < fm.cols(); ++c)
      if (!fm(r, c).is_zero()) {
        r1 = r;
        c1 = c;
        found = true;
        break;
      }
  if (!found) return res;
  const Scalar& pivot = fm(r1, c1);
  for (std::size_t r = 0; r < fm.rows(); ++r) {
    if (r == r1) continue;
    for (std::size_t c = 0; c < fm.cols(); ++c) {
      if (c == c1) continue;
      const Scalar minor = pivot * fm(r, c) - fm(r1, c) * fm(r, c1);
      if (!minor.is_zero()) {
        res.rank_at_most_one = false;
        res.witness = MinorWitness{r1, r, c1, c, minor};
        return res;
      }
    }
  }
  return res;
}

std::vector<CrossQuadric> cross_quadrics(const FTable& table, std::optional<std::size_t> sample, std::uint64_t seed,
                                         std::uint64_t limit) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    bool nonzero = false;
    for (std::size_t c = 0; c < table.cols.size() && !nonzero; ++c) nonzero = !table.at(r, c).is_zero();
    if (nonzero) rows.push_back(r);
  }
  for (std::size_t c = 0; c < table.cols.size(); ++c) {
    bool nonzero = false;
    for (std::size_t r = 0; r < table.rows.size() && !nonzero; ++r) nonzero = !table.at(r, c).is_zero();
    if (nonzero) cols.push_back(c);
  }
  std::vector<CrossQuadric> out;
  std::set<EquationForm> seen;
  auto consider = [&](std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) {
    EquationForm f = EquationForm::product(table.at(r1, c1), table.at(r2, c2)) -
                     EquationForm::product(table.at(r2, c1), table.at(r1, c2));
    if (f.is_zero()) return;
    const int sign = f.normalize_sign();
    if (seen.insert(f).second) out.push_back({r1, r2, c1, c2, std::move(f), sign});
  };
  if (rows.size() < 2 || cols.size() < 2) return out;
  if (!sample) {
    const long double pairs = static_cast<long double>(rows.size()) * (rows.size() - 1) / 2 *
                              (static_cast<long double>(cols.size()) * (cols.size() - 1) / 2);
    if (pairs > static_cast<long double>(limit)) throw Error(ErrorKind::TooLarge, "too many cross quadrics to enumerate");
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a + 1; b < rows.size(); ++b)
        for (std::size_t c = 0; c < cols.size(); ++c)
          for (std::size_t d = c + 1; d < cols.size(); ++d) consider(rows[a], rows[b], cols[c], cols[d]);
    return out;
  }
  SplitMix64 rng(seed);
  for (std::size_t attempt = 0; attempt < 20 * *sample && out.size() < *sample; ++attempt) {
    std::size_t a = rng.below(rows.size()), b = rng.below(rows.size() - 1);
    if (b >= a) ++b;
    std::size_t c = rng.below(cols.size()), d = rng.below(cols.size() - 1);
    if (d >= c) ++d;
    consider(rows[std::min(a, b)], rows[std::max(a, b)], cols[std::min(c, d)], cols[std::max(c, d)]);
  }
  return out;
}

EquationBundle build_equations(const HilbertSpec& spec, int n, int R, const ExportOptions& options) {
  EquationBundle b;
  b.spec = spec;
  b.n = n;
  b.R = R;
  b.include_plucker = options.include_plucker;
  b.include_E = options.include_E;
  b.include_Fquad = options.include_Fquad;
  if (options.include_E) b.E = gen_E(spec, n, R);
  if (options.include_Fquad) {
    b.F = gen_F_symbols(spec, n, R);
    b.quadrics = cross_quadrics(b.F, options.sample_quadrics, options.seed);
    b.quadrics_full = !options.sample_quadrics.has_value();
  }
  if (options.include_plucker) {
    const std::size_t N = monomial_basis(n, R + 1).size();
    const auto r = static_cast<std::size_t>(spec(R + 1));
    b.plucker_relations = plucker_relations_sample(N, r, options.sample_plucker, options.seed ^ 0x9e3779b97f4a7c15ULL);
  }
  return b;
}

}  // namespace hilbeq
