#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hilbeq/acceptance.hpp"
#include "hilbeq/corpus.hpp"
#include "hilbeq/equations.hpp"
#include "hilbeq/error.hpp"
#include "hilbeq/io.hpp"
#include "hilbeq/macaulay.hpp"
#include "hilbeq/membership.hpp"
#include "hilbeq/quiver.hpp"

namespace hilbeq::cli {

namespace {

using io::json;

struct Common {
  int n = 2;
  std::string poly;
  std::optional<int> R;
  std::string field = "Q";
  std::string gens;
  std::string eqs_path;
  std::string out_path;
  bool allow_below = false;
};

int resolve_R(const Common& c, const HilbertSpec& spec) {
  const int R = c.R.value_or(spec.gotzmann());
  if (R < 1) throw Error(ErrorKind::Parse, "--R must be at least 1");
  return R;
}

void check_n(int n) {
  if (n < 1 || n > 7) throw Error(ErrorKind::Parse, "--n must be between 1 and 7");
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << io::dump(j);
  else
    io::write_json_file(path, j);
}

EquationSet load_or_make(const std::string& eqs_path, const HilbertSpec* spec, int n, int R) {
  if (!eqs_path.empty()) {
    EquationSet s = io::equation_set_from_json(io::read_json_file(eqs_path));
    if (spec && (s.n != n || s.R != R || s.spec.decomposition() != spec->decomposition()))
      throw Error(ErrorKind::DimensionMismatch, "equation file was generated for different (n, p, R)");
    return s;
  }
  if (!spec) throw Error(ErrorKind::Parse, "either --eqs or --poly is required");
  return make_equation_set(*spec, n, R);
}

int verdict_exit(const CrossCheckReport& rep) {
  if (!rep.consistent) return kInconsistent;
  return rep.verdict.equations_ok() ? kOk : kNotMember;
}

json report_json(const CrossCheckReport& rep, const EquationSet& eqs) {
  json j = io::verdict_to_json(rep.verdict, eqs);
  j["consistent"] = rep.consistent;
  j["violations"] = rep.violations;
  return j;
}

int cmd_gotzmann(const Common& c, std::ostream& out) {
  const HilbertSpec spec = HilbertSpec::parse(c.poly);
  const int r = spec.gotzmann();
  const std::int64_t pr = spec(r), pr1 = spec(r + 1);
  const std::int64_t upper = macaulay_upper(pr, r);
  json j = {{"poly", spec.to_string()},
            {"decomposition", spec.decomposition()},
            {"gotzmann", r},
            {"p_r", std::to_string(pr)},
            {"p_r1", std::to_string(pr1)},
            {"p_r_upper", std::to_string(upper)},
            {"persistence_ok", upper == pr1}};
  out << io::dump(j);
  return upper == pr1 ? kOk : kInconsistent;
}

int cmd_gen_equations(const Common& c, const std::vector<std::string>& include, const std::string& sample_quadrics,
                      std::size_t sample_plucker, std::uint64_t seed, std::ostream& out) {
  check_n(c.n);
  const HilbertSpec spec = HilbertSpec::parse(c.poly);
  const int R = resolve_R(c, spec);
  if (R < spec.gotzmann() && !c.allow_below)
    throw Error(ErrorKind::BelowGotzmann, "R is below the Gotzmann number; pass --allow-below-gotzmann");
  ExportOptions opt;
  opt.include_plucker = opt.include_E = opt.include_Fquad = false;
  for (const auto& s : include) {
    if (s == "plucker")
      opt.include_plucker = true;
    else if (s == "E")
      opt.include_E = true;
    else if (s == "Fquad")
      opt.include_Fquad = true;
    else
      throw Error(ErrorKind::Parse, "unknown section '" + s + "' (expected plucker, E, Fquad)");
  }
  if (sample_quadrics == "full")
    opt.sample_quadrics = std::nullopt;
  else
    try {
      opt.sample_quadrics = static_cast<std::size_t>(std::stoull(sample_quadrics));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "--sample-quadrics expects a count or 'full'");
    }
  opt.sample_plucker = sample_plucker;
  opt.seed = seed;
  const EquationBundle b = build_equations(spec, c.n, R, opt);
  emit(io::equations_to_json(b), c.out_path, out);
  if (!c.out_path.empty())
    out << "wrote " << c.out_path << ": " << b.E.forms.size() << " linear, " << b.quadrics.size() << " quadrics, "
        << b.plucker_relations.size() << " Plücker relations\n";
  return kOk;
}

int cmd_check_ideal(const Common& c, std::ostream& out) {
  check_n(c.n);
  const Field f = Field::parse(c.field);
  const HilbertSpec spec = HilbertSpec::parse(c.poly);
  const int R = resolve_R(c, spec);
  const EquationSet eqs = load_or_make(c.eqs_path, &spec, c.n, R);
  const GradedSubspace IR1 = ideal_degree_piece(parse_polynomials(c.gens, c.n, f), c.n, R + 1, f);
  const CrossCheckReport rep = cross_check(IR1, eqs, c.allow_below, false);
  emit(report_json(rep, eqs), c.out_path, out);
  return verdict_exit(rep);
}

int cmd_check_point(const Common& c, const std::string& point_path, std::ostream& out) {
  const PluckerVector v = io::plucker_from_json(io::read_json_file(point_path));
  std::optional<HilbertSpec> spec;
  if (!c.poly.empty()) spec = HilbertSpec::parse(c.poly);
  const EquationSet eqs = load_or_make(c.eqs_path, spec ? &*spec : nullptr, v.n(), v.d() - 1);
  if (eqs.n != v.n() || eqs.R + 1 != v.d())
    throw Error(ErrorKind::DimensionMismatch, "point does not match the equation file");
  const CrossCheckReport rep = cross_check(v, eqs, c.allow_below, false);
  emit(report_json(rep, eqs), c.out_path, out);
  return verdict_exit(rep);
}

int cmd_oracle(const Common& c, std::ostream& out) {
  check_n(c.n);
  const Field f = Field::parse(c.field);
  const HilbertSpec spec = HilbertSpec::parse(c.poly);
  const int R = resolve_R(c, spec);
  const GradedSubspace IR1 = ideal_degree_piece(parse_polynomials(c.gens, c.n, f), c.n, R + 1, f);
  const OracleResult o = gotzmann_oracle(IR1, spec, R, c.allow_below);
  json j = {{"member", o.member},
            {"R", R},
            {"codim", o.codim},
            {"expected_codim", o.expected_codim},
            {"colon_codim", o.colon_codim},
            {"expected_colon_codim", o.expected_colon_codim}};
  emit(j, c.out_path, out);
  return kOk;
}

int cmd_quiver(const Common& c, std::ostream& out) {
  check_n(c.n);
  const Field f = Field::parse(c.field);
  const HilbertSpec spec = HilbertSpec::parse(c.poly);
  const int R = resolve_R(c, spec);
  const PointPair p = truncation(parse_polynomials(c.gens, c.n, f), c.n, R, f);
  const QuiverPoint q = build_representation(p.first, p.second, spec);
  const ValidationReport rep = validate(q);
  const auto [pr, pr1] = plucker_via_minors(q);
  const bool agree_R = proportional(pr, plucker_from_subspace(p.first));
  const bool agree_R1 = proportional(pr1, plucker_from_subspace(p.second));
  json j = {{"point", io::quiver_to_json(q)},
            {"validation", io::validation_to_json(rep)},
            {"plucker_agreement", {{"degree_R", agree_R}, {"degree_R1", agree_R1}}}};
  emit(j, c.out_path, out);
  return rep.ok() && agree_R && agree_R1 ? kOk : kInconsistent;
}

int cmd_corpus(const Common& c, std::uint64_t seed, const std::vector<std::size_t>& counts, std::ostream& out) {
  check_n(c.n);
  CorpusSpec cs;
  cs.n = c.n;
  cs.spec = HilbertSpec::parse(c.poly);
  cs.R = resolve_R(c, cs.spec);
  cs.field = Field::parse(c.field);
  cs.seed = seed;
  if (!counts.empty()) {
    if (counts.size() != 3) throw Error(ErrorKind::Parse, "--counts expects monomial,gl,nonmembers");
    cs.members_monomial = counts[0];
    cs.members_gl = counts[1];
    cs.nonmembers = counts[2];
  }
  const auto corpus = build_corpus(cs);
  emit(io::corpus_to_json(corpus), c.out_path, out);
  if (!c.out_path.empty()) out << "wrote " << corpus.size() << " entries to " << c.out_path << "\n";
  return kOk;
}

int cmd_selftest(const std::string& level, const std::vector<std::string>& only, std::ostream& out) {
  const auto lvl = level == "full" ? acceptance::Level::Full : acceptance::Level::Quick;
  bool all = true;
  for (const auto& r : acceptance::run_all(lvl, only)) {
    out << acceptance::format_line(r) << "\n" << std::flush;
    all = all && r.passed;
  }
  return all ? kOk : kInconsistent;
}

void add_problem_options(CLI::App* sub, Common& c, bool gens) {
  sub->add_option("--n", c.n, "projective dimension")->required();
  sub->add_option("--poly", c.poly, "Hilbert polynomial, e.g. \"t+2\" or \"a:[1,0]\"")->required();
  sub->add_option("--R", c.R, "degree R (default: the Gotzmann number)");
  sub->add_option("--field", c.field, "Q or Fp:<prime>");
  if (gens) sub->add_option("--gens", c.gens, "comma-separated homogeneous generators")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equations of Hilbert schemes of projective space", "hilbeq"};
  app.require_subcommand(1);
  Common c;

  auto* gotz = app.add_subcommand("gotzmann", "Gotzmann decomposition and persistence check");
  gotz->add_option("--poly", c.poly, "Hilbert polynomial")->required();

  std::vector<std::string> include{"plucker", "E", "Fquad"};
  std::string sample_quadrics = "100";
  std::size_t sample_plucker = 200;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen-equations", "write the equation file");
  add_problem_options(gen, c, false);
  gen->add_option("--include", include, "sections: plucker,E,Fquad")->delimiter(',');
  gen->add_option("--sample-quadrics", sample_quadrics, "number of F cross quadrics, or 'full'");
  gen->add_option("--sample-plucker", sample_plucker, "number of Plücker relations");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", c.out_path, "output file")->required();
  gen->add_flag("--allow-below-gotzmann", c.allow_below, "permit R below the Gotzmann number");

  auto* ideal = app.add_subcommand("check-ideal", "evaluate the equations on an ideal");
  add_problem_options(ideal, c, true);
  ideal->add_option("--eqs", c.eqs_path, "equation file (generated when omitted)");
  ideal->add_option("--out", c.out_path, "write the verdict here instead of stdout");
  ideal->add_flag("--allow-below-gotzmann", c.allow_below, "permit R below the Gotzmann number");

  std::string point_path;
  auto* point = app.add_subcommand("check-point", "evaluate the equations on a Plücker vector");
  point->add_option("--point", point_path, "Plücker vector JSON")->required();
  point->add_option("--eqs", c.eqs_path, "equation file");
  point->add_option("--poly", c.poly, "Hilbert polynomial (when no --eqs)");
  point->add_option("--out", c.out_path, "write the verdict here instead of stdout");
  point->add_flag("--allow-below-gotzmann", c.allow_below, "permit R below the Gotzmann number");

  auto* oracle = app.add_subcommand("oracle", "Gotzmann colon criterion");
  add_problem_options(oracle, c, true);
  oracle->add_option("--out", c.out_path, "write the result here instead of stdout");
  oracle->add_flag("--allow-below-gotzmann", c.allow_below, "permit R below the Gotzmann number");

  auto* quiver = app.add_subcommand("quiver", "quiver point of an ideal");
  add_problem_options(quiver, c, true);
  quiver->add_option("--out", c.out_path, "write the result here instead of stdout");

  std::vector<std::size_t> counts;
  auto* corpus = app.add_subcommand("corpus", "members and nonmembers for testing");
  add_problem_options(corpus, c, false);
  corpus->add_option("--seed", seed, "random seed");
  corpus->add_option("--counts", counts, "monomial,gl,nonmembers")->delimiter(',');
  corpus->add_option("--out", c.out_path, "output file");

  std::string level = "quick";
  std::vector<std::string> only;
  auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
  self->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  self->add_option("--only", only, "criterion ids, e.g. A1,A5")->delimiter(',');

  std::vector<std::string> storage{"hilbeq"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (gotz->parsed()) return cmd_gotzmann(c, out);
    if (gen->parsed()) return cmd_gen_equations(c, include, sample_quadrics, sample_plucker, seed, out);
    if (ideal->parsed()) return cmd_check_ideal(c, out);
    if (point->parsed()) return cmd_check_point(c, point_path, out);
    if (oracle->parsed()) return cmd_oracle(c, out);
    if (quiver->parsed()) return cmd_quiver(c, out);
    if (corpus->parsed()) return cmd_corpus(c, seed, counts, out);
    if (self->parsed()) return cmd_selftest(level, only, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::InconsistencyDetected ? kInconsistent : kInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace hilbeq::cli
