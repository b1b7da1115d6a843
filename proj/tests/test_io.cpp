#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>

#include "hilbeq/error.hpp"
#include "hilbeq/io.hpp"
#include "hilbeq/rng.hpp"

using namespace hilbeq;
using hilbeq::io::json;

namespace {

const Field Q = Field::rationals();
const Field P = Field::prime(kDefaultTestPrime);

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::PreconditionFailed;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hilbeq_test_io_" + name)).string();
}

EquationBundle small_bundle(std::optional<std::size_t> sample) {
  ExportOptions opt;
  opt.sample_quadrics = sample;
  opt.sample_plucker = 30;
  return build_equations(HilbertSpec::parse("t+2"), 2, 2, opt);
}

}  // namespace

TEST_SUITE("round trips") {
  TEST_CASE("subspace") {
    SplitMix64 rng(71);
    for (const Field& f : {Q, P}) {
      for (int t = 0; t < 10; ++t) {
        Matrix rows(f, 3, 10);
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 10; ++j) rows(i, j) = random_scalar(f, rng);
        rows(0, 0) = Scalar::one(f) / Scalar(f, 7L);
        const GradedSubspace w = GradedSubspace::from_rows(2, 3, rows);
        const json j = io::subspace_to_json(w);
        CHECK(j["n"] == 2);
        CHECK(j["d"] == 3);
        CHECK(j["field"] == f.to_string());
        CHECK(io::subspace_from_json(j) == w);
        CHECK(io::subspace_from_json(json::parse(io::dump(j))) == w);
      }
    }
  }

  TEST_CASE("Plücker vector keeps values and drops zeros") {
    const GradedSubspace w = ideal_degree_piece(parse_polynomials("2*x0 - x1", 1, Q), 1, 2, Q);
    const PluckerVector v = plucker_from_subspace(w);
    const json j = io::plucker_to_json(v);
    std::size_t nonzero = 0;
    for (const auto& c : v.coords()) nonzero += !c.is_zero();
    CHECK(j["coords"].size() == nonzero);
    const PluckerVector back = io::plucker_from_json(j);
    CHECK(back.coords() == v.coords());
    CHECK(back.r() == v.r());
    CHECK(back.provenance() == PluckerVector::Provenance::Raw);
  }

  TEST_CASE("quiver point") {
    const auto [IR, IR1] = lex_segment_point(HilbertSpec::parse("t+2"), 2, 2);
    const QuiverPoint q = build_representation(IR, IR1);
    const QuiverPoint back = io::quiver_from_json(io::quiver_to_json(q));
    CHECK(back.rho == q.rho);
    REQUIRE(back.M.size() == q.M.size());
    for (std::size_t i = 0; i < q.M.size(); ++i) CHECK(back.M[i] == q.M[i]);
    CHECK(back.beta == q.beta);
    const json rep = io::validation_to_json(validate(back));
    CHECK(rep.dump().find("false") == std::string::npos);
  }

  TEST_CASE("equation file restores the same equation set") {
    const EquationBundle b = small_bundle(10);
    const json j = io::equations_to_json(b);
    const EquationSet s = io::equation_set_from_json(json::parse(io::dump(j)));
    const EquationSet direct = make_equation_set(b.spec, 2, 2, 30, 1);
    CHECK(s.spec == b.spec);
    CHECK(s.R == 2);
    CHECK(s.E.forms == b.E.forms);
    CHECK(s.F.entries == b.F.entries);
    CHECK(s.F.rows == b.F.rows);
    CHECK(s.plucker_relations == b.plucker_relations);
    CHECK(j["meta"]["counts"]["quadrics_mode"] == "sample");
    const auto [IR, IR1] = lex_segment_point(b.spec, 2, 2);
    CHECK(equation_verdict(IR1, s).equations_ok());
    CHECK_FALSE(equation_verdict(catalog_nonmember(), s).equations_ok());
    CHECK(direct.E.forms == s.E.forms);
  }

  TEST_CASE("equation file without F symbols regenerates them") {
    json j = io::equations_to_json(small_bundle(5));
    j["fsymbols"] = json::array();
    const EquationSet s = io::equation_set_from_json(j);
    CHECK(s.F.entries == gen_F_symbols(HilbertSpec::parse("t+2"), 2, 2).entries);
  }

  TEST_CASE("corpus") {
    CorpusSpec cs;
    cs.spec = HilbertSpec::parse("t+2");
    cs.R = 2;
    cs.field = P;
    cs.seed = 72;
    cs.members_gl = 3;
    cs.nonmembers = 3;
    const auto corpus = build_corpus(cs);
    const json j = io::corpus_to_json(corpus);
    CHECK(j.is_array());
    const auto back = io::corpus_from_json(j);
    REQUIRE(back.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      CHECK(back[i].kind == corpus[i].kind);
      CHECK(back[i].source == corpus[i].source);
      CHECK(back[i].IR1 == corpus[i].IR1);
      CHECK(back[i].IR.has_value() == corpus[i].IR.has_value());
    }
  }

  TEST_CASE("file round trip is byte-identical") {
    const std::string a = temp_path("a.json"), b = temp_path("b.json");
    const json j = io::equations_to_json(small_bundle(5));
    io::write_json_file(a, j);
    io::write_json_file(b, io::read_json_file(a));
    std::ifstream fa(a), fb(b);
    const std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
    CHECK(sa == sb);
    CHECK(sa == io::dump(j));
    CHECK(io::dump(io::equations_to_json(small_bundle(5))) == io::dump(j));
    std::remove(a.c_str());
    std::remove(b.c_str());
  }
}

TEST_SUITE("verdict") {
  TEST_CASE("verdict JSON carries flags and certificates") {
    const EquationSet s = make_equation_set(HilbertSpec::parse("t+2"), 2, 2, 30, 1);
    const CrossCheckReport rep = cross_check(catalog_nonmember(), s);
    const json j = io::verdict_to_json(rep.verdict, s);
    CHECK(j["member"] == false);
    CHECK(j["certificates"].is_array());
    CHECK_FALSE(j["certificates"].empty());
    bool oracle = false;
    for (const auto& c : j["certificates"]) oracle = oracle || c["kind"] == "oracle";
    CHECK(oracle);
    const auto [IR, IR1] = lex_segment_point(s.spec, 2, 2);
    CHECK(io::verdict_to_json(cross_check(IR1, s).verdict, s)["member"] == true);
  }
}

TEST_SUITE("errors") {
  TEST_CASE("missing and malformed files") {
    CHECK(kind_of([] { io::read_json_file("/nonexistent/dir/x.json"); }) == ErrorKind::IO);
    const std::string p = temp_path("bad.json");
    {
      std::ofstream out(p);
      out << "{ not json";
    }
    CHECK(kind_of([&] { io::read_json_file(p); }) == ErrorKind::Parse);
    std::remove(p.c_str());
    CHECK(kind_of([] { io::write_json_file("/nonexistent/dir/x.json", json::object()); }) == ErrorKind::IO);
  }

  TEST_CASE("malformed documents") {
    CHECK(kind_of([] { io::subspace_from_json(json::parse(R"({"n":1,"d":1,"field":"Q","basis":[["1"]]})")); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { io::subspace_from_json(json::parse(R"({"n":1,"d":1,"field":"Q","basis":[[1.5,0]]})")); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { io::monomial_from_json(json::parse("[1,-1]"), 1); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::monomial_from_json(json::parse("[1]"), 1); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::corpus_from_json(json::object()); }) == ErrorKind::Parse);
    CHECK(kind_of([] {
            io::corpus_from_json(json::parse(R"([{"kind":"maybe","source":"lex","IR":null,"IR1":{}}])"));
          }) == ErrorKind::Parse);
    CHECK(kind_of([] {
            io::plucker_from_json(json::parse(
                R"({"n":1,"d":1,"r":1,"field":"Q","coords":[{"idx":[[1,0],[0,1]],"val":"1"}]})"));
          }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::equation_set_from_json(json::parse("{}")); }) == ErrorKind::Parse);
  }
}
