#include "hilbeq/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "hilbeq/error.hpp"

namespace hilbeq::io {

namespace {

Field field_of(const json& j) {
  if (!j.contains("field")) return Field::rationals();
  return Field::parse(j.at("field").get<std::string>());
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Scalar scalar_from_json(const json& j, const Field& f) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  throw Error(ErrorKind::Parse, "scalar must be a decimal string");
}

Matrix matrix_from_json(const json& j, const Field& f, std::size_t expected_cols) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "matrix must be an array of rows");
  Matrix m(f, j.size(), expected_cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != expected_cols)
      throw Error(ErrorKind::Parse, "matrix row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < expected_cols; ++c) m(r, c) = scalar_from_json(row[c], f);
  }
  return m;
}

json index_to_json(const PluckerIndex& idx, const MonomialBasis& basis) {
  json out = json::array();
  for (auto p : idx) out.push_back(monomial_to_json(basis[p]));
  return out;
}

PluckerIndex index_from_json(const json& j, const MonomialBasis& basis) {
  std::vector<std::uint32_t> pos;
  if (!j.is_array()) throw Error(ErrorKind::Parse, "Plücker index must be an array of monomials");
  for (const auto& m : j) pos.push_back(static_cast<std::uint32_t>(basis.index_of(monomial_from_json(m, basis.n()))));
  const CanonicalIndex ci = canonical_index(pos);
  if (ci.sign != 1) throw Error(ErrorKind::Parse, "Plücker index must be strictly increasing in the canonical order");
  return ci.index;
}

json tuple_to_json(const MonomialTuple& t, const MonomialBasis& basis) {
  json out = json::array();
  for (auto p : t) out.push_back(monomial_to_json(basis[p]));
  return out;
}

MonomialTuple tuple_from_json(const json& j, const MonomialBasis& basis) {
  MonomialTuple t;
  for (const auto& m : j) t.push_back(static_cast<std::uint32_t>(basis.index_of(monomial_from_json(m, basis.n()))));
  return t;
}

json form_to_json(const EquationForm& f, const SubsetRanker& ranker, const MonomialBasis& basis) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json idx;
    if (t.v == EquationForm::kNone)
      idx = index_to_json(ranker.unrank(t.u), basis);
    else
      idx = json::array({index_to_json(ranker.unrank(t.u), basis), index_to_json(ranker.unrank(t.v), basis)});
    terms.push_back({{"c", std::to_string(t.c)}, {"idx", std::move(idx)}});
  }
  return terms;
}

EquationForm form_from_json(const json& terms, EquationForm::Kind kind, const SubsetRanker& ranker,
                            const MonomialBasis& basis) {
  EquationForm f(kind);
  for (const auto& t : terms) {
    const std::int64_t c = std::stoll(t.at("c").get<std::string>());
    const json& idx = t.at("idx");
    if (kind == EquationForm::Kind::Linear) {
      f.add(c, ranker.rank(index_from_json(idx, basis)));
    } else {
      if (!idx.is_array() || idx.size() != 2) throw Error(ErrorKind::Parse, "quadratic term needs two indices");
      f.add(c, ranker.rank(index_from_json(idx[0], basis)), ranker.rank(index_from_json(idx[1], basis)));
    }
  }
  f.finalize();
  return f;
}

std::string certificate_kind(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::Codimension: return "codimension";
    case Certificate::Kind::LinearForm: return "linear_form";
    case Certificate::Kind::CrossQuadric: return "cross_quadric";
    case Certificate::Kind::PluckerRelation: return "plucker_relation";
    case Certificate::Kind::NotDecomposable: return "not_decomposable";
    case Certificate::Kind::Oracle: return "oracle";
  }
  return "unknown";
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IO, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, "'" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IO, "cannot write '" + path + "'");
  out << dump(j);
  if (!out) throw Error(ErrorKind::IO, "write to '" + path + "' failed");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json monomial_to_json(const Monomial& m) { return m.e; }

Monomial monomial_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n + 1)
    throw Error(ErrorKind::Parse, "exponent vector must have n+1 entries");
  Monomial m;
  for (const auto& e : j) {
    const int v = e.get<int>();
    if (v < 0) throw Error(ErrorKind::Parse, "negative exponent");
    m.e.push_back(v);
  }
  return m;
}

json subspace_to_json(const GradedSubspace& w) {
  return {{"n", w.n()}, {"d", w.d()}, {"field", w.field().to_string()}, {"basis", matrix_to_json(w.rows())}};
}

GradedSubspace subspace_from_json(const json& j) {
  try {
    const Field f = field_of(j);
    const int n = j.at("n").get<int>(), d = j.at("d").get<int>();
    const Matrix rows = matrix_from_json(j.at("basis"), f, monomial_basis(n, d).size());
    if (rows.rows() == 0) return GradedSubspace(f, n, d);
    return GradedSubspace::from_rows(n, d, rows);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("subspace: ") + e.what());
  }
}

json plucker_to_json(const PluckerVector& v) {
  const auto& basis = monomial_basis(v.n(), v.d());
  json coords = json::array();
  for (std::uint64_t k = 0; k < v.coords().size(); ++k) {
    if (v.coords()[k].is_zero()) continue;
    coords.push_back({{"idx", index_to_json(v.ranker().unrank(k), basis)}, {"val", v.coords()[k].to_fraction_string()}});
  }
  return {{"n", v.n()}, {"d", v.d()}, {"r", v.r()}, {"field", v.field().to_string()}, {"coords", std::move(coords)}};
}

PluckerVector plucker_from_json(const json& j) {
  try {
    const Field f = field_of(j);
    const int n = j.at("n").get<int>(), d = j.at("d").get<int>();
    const std::size_t r = j.at("r").get<std::size_t>();
    const auto& basis = monomial_basis(n, d);
    const SubsetRanker ranker(basis.size(), r);
    if (ranker.count() > kMaxPluckerCoordinates) throw Error(ErrorKind::TooLarge, "Grassmannian too large");
    std::vector<Scalar> coords(ranker.count(), Scalar(f));
    for (const auto& c : j.at("coords")) {
      const PluckerIndex idx = index_from_json(c.at("idx"), basis);
      if (idx.size() != r) throw Error(ErrorKind::Parse, "Plücker index must hold r monomials");
      coords[ranker.rank(idx)] = scalar_from_json(c.at("val"), f);
    }
    return PluckerVector(f, n, d, r, std::move(coords));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("Plücker vector: ") + e.what());
  }
}

json quiver_to_json(const QuiverPoint& q) {
  json ms = json::array();
  for (const auto& m : q.M) ms.push_back(matrix_to_json(m));
  return {{"n", q.n}, {"R", q.R}, {"field", q.field.to_string()}, {"rho", matrix_to_json(q.rho)}, {"M", std::move(ms)}};
}

QuiverPoint quiver_from_json(const json& j) {
  try {
    QuiverPoint q;
    q.field = field_of(j);
    q.n = j.at("n").get<int>();
    q.R = j.at("R").get<int>();
    if (q.R < 1) throw Error(ErrorKind::Parse, "R must be at least 1");
    q.rho = matrix_from_json(j.at("rho"), q.field, monomial_basis(q.n, q.R).size());
    const json& ms = j.at("M");
    if (!ms.is_array() || ms.size() != static_cast<std::size_t>(q.n + 1))
      throw Error(ErrorKind::Parse, "M must hold n+1 matrices");
    for (const auto& m : ms) {
      const std::size_t cols = m.empty() ? q.rho.rows() : m.front().size();
      if (cols != q.rho.rows()) throw Error(ErrorKind::Parse, "M_i must have p(R) columns");
      q.M.push_back(matrix_from_json(m, q.field, cols));
    }
    for (const auto& m : q.M)
      if (m.rows() != q.M.front().rows()) throw Error(ErrorKind::Parse, "all M_i must have the same shape");
    q.beta = derive_beta(q);
    return q;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("quiver point: ") + e.what());
  }
}

json validation_to_json(const ValidationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"ok", rep.ok()}, {"checks", std::move(checks)}};
}

json equations_to_json(const EquationBundle& b) {
  const auto& basisR = monomial_basis(b.n, b.R);
  const auto& basisR1 = monomial_basis(b.n, b.R + 1);
  const auto pR = static_cast<std::size_t>(b.spec(b.R));
  const auto pR1 = static_cast<std::size_t>(b.spec(b.R + 1));
  const SubsetRanker ranker(basisR1.size(), pR1);

  json notes = json::array();
  json sections = json::array();
  if (b.include_plucker) sections.push_back("plucker");
  if (b.include_E) sections.push_back("E");
  if (b.include_Fquad) sections.push_back("Fquad");

  json linear = json::array();
  if (b.include_E) {
    for (const auto& f : b.E.forms) linear.push_back({{"terms", form_to_json(f, ranker, basisR1)}});
    if (b.E.forms.empty())
      notes.push_back(b.spec.is_constant() ? "linear section empty: the Hilbert polynomial is constant"
                                           : "linear section empty: every generated form vanishes identically");
  }
  json fsymbols = json::array();
  json quadrics = json::array();
  if (b.include_Fquad) {
    for (std::size_t r = 0; r < b.F.rows.size(); ++r)
      for (std::size_t c = 0; c < b.F.cols.size(); ++c) {
        const EquationForm& f = b.F.at(r, c);
        fsymbols.push_back({{"m", tuple_to_json(b.F.rows[r], basisR)},
                            {"n", tuple_to_json(b.F.cols[c].first, basisR1)},
                            {"alpha", b.F.cols[c].second},
                            {"terms", form_to_json(f, ranker, basisR1)},
                            {"zero", f.is_zero()}});
      }
    for (const auto& q : b.quadrics)
      quadrics.push_back({{"terms", form_to_json(q.form, ranker, basisR1)},
                          {"rows", {q.row1, q.row2}},
                          {"cols", {q.col1, q.col2}}});
    if (b.quadrics.empty()) notes.push_back("quadric section empty: every cross quadric vanishes identically");
  }
  json relations = json::array();
  for (const auto& f : b.plucker_relations) relations.push_back({{"terms", form_to_json(f, ranker, basisR1)}});

  json counts = {{"linear", b.E.forms.size()},
                 {"linear_generated", b.E.stats.generated},
                 {"linear_zero_dropped", b.E.stats.zero},
                 {"linear_duplicates", b.E.stats.duplicates},
                 {"fsymbols", b.F.entries.size()},
                 {"fsymbols_zero", b.F.zero_count()},
                 {"quadrics", b.quadrics.size()},
                 {"quadrics_mode", b.quadrics_full ? "full" : "sample"},
                 {"plucker_relations", b.plucker_relations.size()}};
  json meta = {{"n", b.n},
               {"poly", b.spec.to_string()},
               {"decomposition", b.spec.decomposition()},
               {"gotzmann", b.spec.gotzmann()},
               {"R", b.R},
               {"pR", pR},
               {"pR1", pR1},
               {"sections", std::move(sections)},
               {"counts", std::move(counts)},
               {"notes", std::move(notes)}};
  return {{"meta", std::move(meta)},
          {"linear", std::move(linear)},
          {"fsymbols", std::move(fsymbols)},
          {"quadrics", std::move(quadrics)},
          {"plucker_relations", std::move(relations)}};
}

EquationSet equation_set_from_json(const json& j) {
  try {
    const json& meta = j.at("meta");
    EquationSet s;
    s.n = meta.at("n").get<int>();
    s.R = meta.at("R").get<int>();
    s.spec = meta.contains("decomposition")
                 ? HilbertSpec::from_decomposition(meta.at("decomposition").get<std::vector<int>>())
                 : HilbertSpec::parse(meta.at("poly").get<std::string>());
    const auto& basisR = monomial_basis(s.n, s.R);
    const auto& basisR1 = monomial_basis(s.n, s.R + 1);
    const auto pR = static_cast<std::size_t>(s.spec(s.R));
    const auto pR1 = static_cast<std::size_t>(s.spec(s.R + 1));
    const SubsetRanker ranker(basisR1.size(), pR1);

    s.E.n = s.n;
    s.E.R = s.R;
    s.E.pR = pR;
    s.E.pR1 = pR1;
    for (const auto& f : j.at("linear"))
      s.E.forms.push_back(form_from_json(f.at("terms"), EquationForm::Kind::Linear, ranker, basisR1));
    for (const auto& f : j.at("plucker_relations"))
      s.plucker_relations.push_back(form_from_json(f.at("terms"), EquationForm::Kind::Quadratic, ranker, basisR1));

    const json& fs = j.at("fsymbols");
    if (fs.empty()) {
      s.F = gen_F_symbols(s.spec, s.n, s.R);
      return s;
    }
    FTable& t = s.F;
    t.n = s.n;
    t.R = s.R;
    t.pR = pR;
    t.pR1 = pR1;
    std::map<MonomialTuple, std::size_t> row_of;
    std::map<std::pair<MonomialTuple, VariableMultiset>, std::size_t> col_of;
    std::vector<std::tuple<std::size_t, std::size_t, EquationForm>> cells;
    for (const auto& sym : fs) {
      MonomialTuple m = tuple_from_json(sym.at("m"), basisR);
      MonomialTuple nt = tuple_from_json(sym.at("n"), basisR1);
      VariableMultiset alpha = sym.at("alpha").get<VariableMultiset>();
      auto [ri, rnew] = row_of.emplace(m, t.rows.size());
      if (rnew) t.rows.push_back(m);
      auto key = std::make_pair(nt, alpha);
      auto [ci, cnew] = col_of.emplace(key, t.cols.size());
      if (cnew) t.cols.push_back(key);
      cells.emplace_back(ri->second, ci->second,
                         form_from_json(sym.at("terms"), EquationForm::Kind::Linear, ranker, basisR1));
    }
    if (cells.size() != t.rows.size() * t.cols.size())
      throw Error(ErrorKind::Parse, "F-symbol table is incomplete");
    t.entries.assign(cells.size(), EquationForm(EquationForm::Kind::Linear));
    for (auto& [r, c, f] : cells) t.entries[r * t.cols.size() + c] = std::move(f);
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("equation file: ") + e.what());
  }
}

json verdict_to_json(const Verdict& v, const EquationSet& eqs) {
  const auto& basisR = monomial_basis(eqs.n, eqs.R);
  const auto& basisR1 = monomial_basis(eqs.n, eqs.R + 1);
  const SubsetRanker ranker(basisR1.size(), static_cast<std::size_t>(eqs.spec(eqs.R + 1)));
  json certs = json::array();
  for (const auto& c : v.certificates) {
    json cj = {{"kind", certificate_kind(c.kind)}, {"message", c.message}};
    if (c.form) cj["form"] = {{"terms", form_to_json(*c.form, ranker, basisR1)}};
    if (c.value) cj["value"] = c.value->to_fraction_string();
    if (c.expected) cj["expected"] = *c.expected;
    if (c.actual) cj["actual"] = *c.actual;
    if (c.minor) {
      const auto& m = *c.minor;
      auto col = [&](std::size_t k) {
        return json{{"n", tuple_to_json(eqs.F.cols[k].first, basisR1)}, {"alpha", eqs.F.cols[k].second}};
      };
      cj["minor"] = {{"m1", tuple_to_json(eqs.F.rows[m.row1], basisR)},
                     {"m2", tuple_to_json(eqs.F.rows[m.row2], basisR)},
                     {"c1", col(m.col1)},
                     {"c2", col(m.col2)},
                     {"value", m.value.to_fraction_string()}};
    }
    certs.push_back(std::move(cj));
  }
  return {{"member", v.equations_ok()},
          {"decomposable", v.decomposable},
          {"codim_ok", v.codim_ok},
          {"E_ok", v.E_ok},
          {"Fquad_ok", v.Fquad_ok},
          {"oracle_ok", v.oracle_ok},
          {"h_ok", v.h_ok},
          {"conductor_k_rational", v.conductor_k_rational},
          {"codim", v.codim},
          {"oracle_colon_codim", v.oracle_colon_codim},
          {"conductor_codim", v.conductor_codim},
          {"relations_checked", v.relations_checked},
          {"certificates", std::move(certs)}};
}

json corpus_to_json(const std::vector<CorpusPoint>& corpus) {
  json out = json::array();
  for (const auto& p : corpus)
    out.push_back({{"kind", p.kind == CorpusPoint::Kind::Member ? "member" : "nonmember"},
                   {"source", p.source},
                   {"IR", p.IR ? subspace_to_json(*p.IR) : json(nullptr)},
                   {"IR1", subspace_to_json(p.IR1)}});
  return out;
}

std::vector<CorpusPoint> corpus_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "corpus file must be a JSON array");
  std::vector<CorpusPoint> out;
  try {
    for (const auto& e : j) {
      const std::string kind = e.at("kind").get<std::string>();
      if (kind != "member" && kind != "nonmember") throw Error(ErrorKind::Parse, "unknown corpus kind '" + kind + "'");
      std::optional<GradedSubspace> ir;
      if (e.contains("IR") && !e.at("IR").is_null()) ir = subspace_from_json(e.at("IR"));
      out.push_back({kind == "member" ? CorpusPoint::Kind::Member : CorpusPoint::Kind::Nonmember,
                     e.at("source").get<std::string>(), std::move(ir), subspace_from_json(e.at("IR1"))});
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("corpus: ") + ex.what());
  }
  return out;
}

}  // namespace hilbeq::io
