#include "hilbeq/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hilbeq/error.hpp"
#include "hilbeq/membership.hpp"

namespace hilbeq {

namespace {

std::size_t value_at(const HilbertSpec& spec, int d) { return static_cast<std::size_t>(spec(d)); }

GradedSubspace first_monomials(const Field& field, int n, int d, std::size_t count) {
  const auto& basis = monomial_basis(n, d);
  std::vector<Monomial> mons(basis.monomials().begin(), basis.monomials().begin() + static_cast<std::ptrdiff_t>(count));
  return GradedSubspace::from_monomials(field, n, d, mons);
}

bool contains_products(const GradedSubspace& IR, const GradedSubspace& IR1) {
  if (IR.dim() == 0) return true;
  return IR1.contains(multiply_by_S1(IR));
}

using Catalog = std::map<std::pair<int, std::vector<int>>, std::vector<std::string>>;

const Catalog& catalog() {
  static const Catalog c = {
      {{2, {1, 0}}, {"x0*x2, x1*x2", "x0*x1, x0*x2", "x0*x1, x1*x2", "x0^2, x0*x1", "x0^2, x0*x2"}},
      {{1, {0}}, {"x1", "x0", "x0 - x1"}},
      {{1, {0, 0}}, {"x0*x1", "x0^2", "x0^2 - x1^2"}},
      {{1, {0, 0, 0}}, {"x0^2*x1", "x0^3", "x0^2*x1 - x0*x1^2"}},
      {{1, {0, 0, 0, 0}}, {"x0^2*x1^2", "x0^4", "x0^3*x1 - x0*x1^3"}},
      {{2, {0}}, {"x0, x1", "x1, x2", "x0, x2"}},
      {{2, {0, 0}}, {"x0, x1*x2", "x0, x1^2", "x1, x0*x2", "x2, x0*x1"}},
      {{2, {0, 0, 0}}, {"x0*x1, x0*x2, x1*x2", "x0^2, x0*x1, x1^2"}},
      {{2, {0, 0, 0, 0}}, {"x0*x1, x2^2", "x0^2, x1^2"}},
  };
  return c;
}

Matrix permutation_matrix(const Field& field, const std::vector<int>& perm) {
  Matrix g(field, perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) g(j, static_cast<std::size_t>(perm[j])) = Scalar::one(field);
  return g;
}

}  // namespace

PointPair lex_segment_point(const HilbertSpec& spec, int n, int R, const Field& field) {
  if (R < spec.gotzmann()) throw Error(ErrorKind::BelowGotzmann, "lex segment points need R >= r");
  const std::size_t dimR = monomial_basis(n, R).size(), dimR1 = monomial_basis(n, R + 1).size();
  const std::size_t pR = value_at(spec, R), pR1 = value_at(spec, R + 1);
  if (pR > dimR || pR1 > dimR1)
    throw Error(ErrorKind::NotAdmissible, "Hilbert polynomial exceeds dim S_d on P^" + std::to_string(n));
  PointPair p{first_monomials(field, n, R, dimR - pR), first_monomials(field, n, R + 1, dimR1 - pR1)};
  if (!contains_products(p.first, p.second)) throw std::logic_error("lex segment is not closed under S_1");
  return p;
}

std::vector<std::vector<Polynomial>> saturated_examples(const HilbertSpec& spec, int n, const Field& field) {
  const auto it = catalog().find({n, spec.decomposition()});
  if (it == catalog().end())
    throw Error(ErrorKind::UnknownCatalogEntry, "no catalog entry for " + spec.to_string() + " on P^" + std::to_string(n));
  std::vector<std::vector<Polynomial>> out;
  for (const auto& text : it->second) out.push_back(parse_polynomials(text, n, field));
  return out;
}

PointPair truncation(const std::vector<Polynomial>& gens, int n, int R, const Field& field) {
  return {ideal_degree_piece(gens, n, R, field), ideal_degree_piece(gens, n, R + 1, field)};
}

Matrix random_invertible(const Field& field, std::size_t size, SplitMix64& rng) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    Matrix g(field, size, size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) g(r, c) = random_scalar(field, rng);
    if (!determinant(g).is_zero()) return g;
  }
  throw Error(ErrorKind::SingularDraw, "10 consecutive singular draws");
}

PointPair gl_translate(const PointPair& point, const Matrix& g) {
  return {substitute(point.first, g), substitute(point.second, g)};
}

PointPair gl_translate(const PointPair& point, const Field& field, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return gl_translate(point, random_invertible(field, static_cast<std::size_t>(point.first.n() + 1), rng));
}

Nonmember random_nonmember(const HilbertSpec& spec, int n, int R, const Field& field, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t dim = monomial_basis(n, R + 1).size();
  const std::size_t pR1 = value_at(spec, R + 1);
  if (pR1 > dim) throw Error(ErrorKind::NotAdmissible, "p(R+1) exceeds dim S_{R+1}");
  for (int draw = 0; draw < 100; ++draw) {
    Matrix rows(field, dim - pR1, dim);
    for (std::size_t r = 0; r < rows.rows(); ++r)
      for (std::size_t c = 0; c < dim; ++c) rows(r, c) = random_scalar(field, rng);
    GradedSubspace w = GradedSubspace::from_rows(n, R + 1, rows);
    if (w.codim() != pR1) continue;
    const OracleResult o = gotzmann_oracle(w, spec, R, true);
    if (!o.member) return {std::move(w), o.colon_codim};
  }
  throw Error(ErrorKind::ExhaustedRetries, "100 draws without a nonmember");
}

Nonmember random_monomial_nonmember(const HilbertSpec& spec, int n, int R, const Field& field, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto& basis = monomial_basis(n, R + 1);
  const std::size_t pR1 = value_at(spec, R + 1);
  if (pR1 > basis.size()) throw Error(ErrorKind::NotAdmissible, "p(R+1) exceeds dim S_{R+1}");
  for (int draw = 0; draw < 100; ++draw) {
    std::vector<std::size_t> idx(basis.size());
    std::iota(idx.begin(), idx.end(), 0);
    rng.shuffle(idx);
    std::vector<Monomial> mons;
    for (std::size_t i = 0; i < basis.size() - pR1; ++i) mons.push_back(basis[idx[i]]);
    GradedSubspace w = GradedSubspace::from_monomials(field, n, R + 1, mons);
    const OracleResult o = gotzmann_oracle(w, spec, R, true);
    if (!o.member) return {std::move(w), o.colon_codim};
  }
  throw Error(ErrorKind::ExhaustedRetries, "100 draws without a monomial nonmember");
}

GradedSubspace catalog_nonmember(const Field& field) {
  return GradedSubspace::from_monomials(field, 2, 3,
                                        {Monomial{{3, 0, 0}}, Monomial{{0, 3, 0}}, Monomial{{0, 0, 3}},
                                         Monomial{{2, 1, 0}}, Monomial{{2, 0, 1}}});
}

GradedSubspace linear_times_hyperplane(int n, int R, const Field& field, SplitMix64& rng) {
  const std::size_t dimR = monomial_basis(n, R).size();
  LinearForm l;
  Matrix lambda(field, 1, dimR);
  do {
    l.clear();
    for (int i = 0; i <= n; ++i) l.push_back(random_scalar(field, rng));
  } while (std::all_of(l.begin(), l.end(), [](const Scalar& s) { return s.is_zero(); }));
  do {
    for (std::size_t c = 0; c < dimR; ++c) lambda(0, c) = random_scalar(field, rng);
  } while (lambda.is_zero());
  const Matrix k = kernel_basis(lambda);
  return GradedSubspace::from_rows(n, R + 1, (multiplication_map(n, R, l) * k).transpose());
}

std::vector<CorpusPoint> monomial_members(const HilbertSpec& spec, int n, int R, const Field& field) {
  std::vector<std::pair<std::string, PointPair>> bases;
  bases.emplace_back("lex", lex_segment_point(spec, n, R, field));
  try {
    for (const auto& gens : saturated_examples(spec, n, field)) bases.emplace_back("catalog", truncation(gens, n, R, field));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnknownCatalogEntry) throw;
  }
  std::vector<int> perm(static_cast<std::size_t>(n + 1));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<CorpusPoint> out;
  auto add = [&](const std::string& source, PointPair p) {
    for (const auto& existing : out)
      if (existing.IR1 == p.second && existing.IR == p.first) return;
    out.push_back({CorpusPoint::Kind::Member, source, std::move(p.first), std::move(p.second)});
  };
  for (const auto& [source, p] : bases) add(source, p);
  for (const auto& [source, p] : bases)
    for (std::size_t k = 1; k < perms.size(); ++k) add("gl", gl_translate(p, permutation_matrix(field, perms[k])));
  for (const auto& pt : out)
    if (!gotzmann_oracle(pt.IR1, spec, R).member)
      throw std::logic_error("monomial member fails the oracle: source " + pt.source);
  return out;
}

std::vector<CorpusPoint> build_corpus(const CorpusSpec& cs) {
  SplitMix64 rng(cs.seed);
  std::vector<CorpusPoint> out;
  const auto monomial = monomial_members(cs.spec, cs.n, cs.R, cs.field);
  for (std::size_t i = 0; i < std::min(cs.members_monomial, monomial.size()); ++i) out.push_back(monomial[i]);

  for (std::size_t i = 0; i < cs.members_gl; ++i) {
    const auto& base = monomial[i % monomial.size()];
    PointPair p = gl_translate(PointPair{*base.IR, base.IR1}, cs.field, rng.next());
    if (!gotzmann_oracle(p.second, cs.spec, cs.R).member) throw std::logic_error("GL translate fails the oracle");
    out.push_back({CorpusPoint::Kind::Member, "gl", std::move(p.first), std::move(p.second)});
  }

  std::size_t made = 0;
  if (cs.nonmembers > 0 && cs.n == 2 && cs.R == 2) {
    GradedSubspace fixed = catalog_nonmember(cs.field);
    if (fixed.codim() == value_at(cs.spec, cs.R + 1) && !gotzmann_oracle(fixed, cs.spec, cs.R).member) {
      out.push_back({CorpusPoint::Kind::Nonmember, "catalog", std::nullopt, std::move(fixed)});
      ++made;
    }
  }
  for (; made < cs.nonmembers; ++made) {
    Nonmember nm = random_nonmember(cs.spec, cs.n, cs.R, cs.field, rng.next());
    out.push_back({CorpusPoint::Kind::Nonmember, "random", std::nullopt, std::move(nm.IR1)});
  }
  return out;
}

}  // namespace hilbeq
