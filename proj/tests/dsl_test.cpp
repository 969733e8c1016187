#include <cstdio>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "proxlab/proxlab.hpp"

namespace px = proxlab;
namespace dsl = proxlab::dsl;
using px::FunctionSpec;
using px::Proximity;
using px::SetAlgebra;
using px::Status;
using px::Strategy;
using px::SymSet;
using px::Universe;

namespace {

const std::string kRoot = PROXLAB_SOURCE_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string script(const std::string& name) { return slurp(kRoot + "/scripts/" + name + ".prox"); }

dsl::DslError elaboration_error(const std::string& src) {
  try {
    dsl::Interpreter in;
    in.elaborate(dsl::parse(src));
  } catch (const dsl::DslError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << src;
  return dsl::DslError({}, "");
}

bool has_witness(const px::LawReport& r, const std::string& text) {
  for (const auto& w : r.witnesses)
    if (w.rendering.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Lexer, OperatorsCommentsAndLawIds) {
  const auto toks = dsl::tokenize("check thm.2.1.4 M  # trailing\nset S = A ∪ B\n");
  ASSERT_GE(toks.size(), 9u);
  EXPECT_EQ(toks[1].text, "thm.2.1.4");
  EXPECT_EQ(toks[3].kind, dsl::TokenKind::Newline);
  EXPECT_EQ(toks[8].text, "∪");
  EXPECT_TRUE(dsl::tokenize("pl{0: 1}")[1].spaced == false);
  EXPECT_TRUE(dsl::tokenize("E {1}")[1].spaced);
  EXPECT_EQ(toks[8].loc.column, 11u);
  EXPECT_EQ(dsl::parse("set S = A ∪ B ∩ C").statements[0].value, dsl::parse("set S = A ∪ (B ∩ C)").statements[0].value);
}

TEST(Parser, EvensOddsScriptShape) {
  const auto p = dsl::parse(script("evens_odds"));
  EXPECT_EQ(p.declarations(), 7u);
  EXPECT_EQ(p.commands(), 3u);
  EXPECT_EQ(p.statements[1].scope->text, "Z");
  const auto& seq = p.statements[4].value;
  ASSERT_EQ(seq.kind, dsl::ExprKind::Call);
  EXPECT_EQ(seq.keys, (std::vector<std::string>{"core", "tail"}));
}

TEST(Parser, RenderRoundTrip) {
  const std::string src =
      "universe Zi = integers with_infinity\n"
      "universe F = finite(3)\n"
      "set S = ({0, 1} - {1}) ∪ ~{2} in F\n"
      "set J = [0, 1/2) | (1/2, 1]\n"
      "seq L = list({0}, {1}; tail={2})\n"
      "fn f = table(F, unit_interval){0: 1/2, 1: 1, 2: 0}\n"
      "fn g = pl{0: 0, 1/2: 1, 1: 1}\n"
      "fn r = residue_map(Zi, finite(2), p=2){0: 0, 1: 1, inf: 0}\n"
      "fnseq P = eventually(f, f; limit=f)\n"
      "check prox.near D {0} {-1}\n"
      "stone M --dot out/stone.dot\n"
      "report\n";
  const auto p = dsl::parse(src);
  const auto text = dsl::render(p);
  EXPECT_EQ(dsl::parse(text), p);
  EXPECT_EQ(dsl::render(dsl::parse(text)), text);
  for (const auto* s : {"evens_odds", "finite_cofinite", "partition_sweep"}) {
    const auto q = dsl::parse(script(s));
    EXPECT_EQ(dsl::parse(dsl::render(q)), q) << s;
  }
}

TEST(Parser, SyntaxErrorsCarryLocations) {
  try {
    dsl::parse("universe Z = integers\nset E = {1, 2\n");
    FAIL();
  } catch (const dsl::DslError& e) {
    EXPECT_EQ(e.where().line, 3u);
  }
  try {
    dsl::parse("sett X = 1");
    FAIL();
  } catch (const dsl::DslError& e) {
    EXPECT_EQ(e.render(), "line 1, column 1: unknown statement 'sett'");
  }
}

TEST(Elaboration, UnknownIdentifierLocation) {
  const auto e = elaboration_error("universe Z = integers\nproximity D = one_point(Z)\ncheck prox.near D E {1}\n");
  EXPECT_EQ(e.where().line, 3u);
  EXPECT_EQ(e.where().column, 19u);
  EXPECT_EQ(std::string(e.what()), "unknown identifier E");
}

TEST(Elaboration, TypeArityAndUniverseErrors) {
  EXPECT_NE(std::string(elaboration_error("universe Z = integers\ncheck prox.axioms Z\n").what()).find("expected a proximity"),
            std::string::npos);
  EXPECT_NE(std::string(elaboration_error("universe Z = integers\nproximity D = discrete(Z)\ncheck prox.axioms D D\n").what())
                .find("expects 1 arguments"),
            std::string::npos);
  EXPECT_NE(std::string(elaboration_error("universe F = finite(2)\nset S = {5} in F\n").what()).find("not a point"),
            std::string::npos);
  EXPECT_NE(std::string(elaboration_error("universe F = finite(2)\nuniverse G = finite(3)\nset A = {0} in F\nset B = {0} in G\nset C = A ∪ B\n").what())
                .find("UniverseMismatch"),
            std::string::npos);
  EXPECT_NE(std::string(elaboration_error("check no.such.law X\n").what()).find("unknown law id"), std::string::npos);
  EXPECT_NE(std::string(elaboration_error("universe F = finite(2)\nset A = {0} in F\nset A = {1} in F\n").what()).find("duplicate"),
            std::string::npos);
}

TEST(Elaboration, ValuesMatchLibraryConstructors) {
  dsl::Interpreter in;
  in.elaborate(dsl::parse(
      "universe Z = integers\n"
      "universe F = finite(3)\n"
      "set E = periodic(p=2, residues={0}) in Z\n"
      "set S = {0, 2} ∪ {1} - {2} in F\n"
      "set J = [0, 1/2) ∪ [3/4, 1]\n"
      "algebra M = atoms({0}, {1, 2})\n"
      "algebra FC = finite_cofinite(Z)\n"
      "proximity D = from_algebra(M)\n"
      "fn c = chi(E)\n"
      "fn t = table(F, unit_interval){0: 1/2, 1: 1, 2: 0}\n"));
  const Universe Z = Universe::integers(), F = Universe::finite(3);
  EXPECT_EQ(std::get<SymSet>(*in.lookup("E")), SymSet::periodic(Z, 2, {0}));
  EXPECT_EQ(std::get<SymSet>(*in.lookup("S")), SymSet::indices(F, {0, 1}));
  EXPECT_EQ(std::get<SymSet>(*in.lookup("J")).render(), "[0,1/2) ∪ [3/4,1]");
  EXPECT_EQ(std::get<SetAlgebra>(*in.lookup("M")).atoms(), (std::vector<SymSet>{SymSet::indices(F, {0}), SymSet::indices(F, {1, 2})}));
  EXPECT_EQ(std::get<SetAlgebra>(*in.lookup("FC")).render(), "finite_cofinite(integers)");
  EXPECT_EQ(std::get<Proximity>(*in.lookup("D")).render(), Proximity::from_algebra(std::get<SetAlgebra>(*in.lookup("M"))).render());
  EXPECT_EQ(std::get<FunctionSpec>(*in.lookup("c")).render(), FunctionSpec::characteristic(SymSet::periodic(Z, 2, {0}), Universe::unit_interval()).render());
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(px::run_script(script("evens_odds")).exit, dsl::ExitCode::Holds);
  EXPECT_EQ(px::run_script(script("finite_cofinite")).exit, dsl::ExitCode::Counterexample);
  EXPECT_EQ(px::run_script("universe Z = integers\nproximity D = one_point(Z)\ncheck thm.2.3 D\n").exit, dsl::ExitCode::Inconclusive);
  EXPECT_EQ(px::run_script("set X = (\n").exit, dsl::ExitCode::ConfigError);
  // a counterexample outranks a refusal
  EXPECT_EQ(px::run_script("universe Z = integers\nproximity D = one_point(Z)\ncheck thm.2.3 D\ncheck p_aleph1 from_algebra(finite_cofinite(Z))\n").exit,
            dsl::ExitCode::Counterexample);
}

TEST(Run, RefusalNamesTheModuleError) {
  const auto r = px::run_script("universe Z = integers\nproximity D = one_point(Z)\ncheck thm.2.3 D\n");
  ASSERT_EQ(r.reports.size(), 1u);
  EXPECT_EQ(r.reports[0].status, Status::Refused);
  EXPECT_EQ(r.reports[0].witnesses[0].kind, "error");
  EXPECT_EQ(r.reports[0].witnesses[0].rendering.rfind("PreconditionNotEstablished: ", 0), 0u);
}

TEST(Run, AlgebraSweep) {
  const auto r = px::run_script(script("partition_sweep"));
  ASSERT_EQ(r.reports.size(), 15u);
  for (const auto& rep : r.reports) {
    EXPECT_EQ(rep.law, "smirnov");
    EXPECT_EQ(rep.status, Status::HoldsExhaustive);
  }
  EXPECT_EQ(r.reports.front().subjects, std::vector<std::string>{"atoms({0,1,2,3})"});
}

TEST(Run, DefaultProximityAndSubjects) {
  const auto r = px::run_script(script("evens_odds"));
  ASSERT_EQ(r.reports.size(), 3u);
  EXPECT_EQ(r.reports[2].law, "prox.near");
  EXPECT_EQ(r.reports[2].subjects, (std::vector<std::string>{"D", "E", "O"}));
  EXPECT_TRUE(has_witness(r.reports[2], "near = true"));
}

TEST(Run, FindCounterexampleStopsEarly) {
  const std::string src = "universe Z = integers\nproximity D = one_point(Z)\nfn c = chi(periodic(p=2, residues={0}))\n";
  const auto all = px::run_script(src + "check prox.map c D metric(unit_interval)\n");
  const auto first = px::run_script(src + "find_counterexample prox.map c D metric(unit_interval)\n");
  EXPECT_EQ(all.reports[0].status, Status::Counterexample);
  EXPECT_EQ(first.reports[0].status, Status::Counterexample);
  EXPECT_LE(first.reports[0].cases_checked, all.reports[0].cases_checked);
}

TEST(Run, CounterexamplesReplayOnTheirWitnesses) {
  const Universe Z = Universe::integers();
  const auto chi = FunctionSpec::characteristic(SymSet::periodic(Z, 2, {0}), Universe::unit_interval());
  const auto d = Proximity::one_point(Z), metric = Proximity::metric(Universe::unit_interval());
  const auto r = px::is_proximity_map(chi, d, metric, Strategy::family());
  ASSERT_EQ(r.status, Status::Counterexample);
  EXPECT_EQ(px::is_proximity_map(chi, d, metric, Strategy::on_witnesses(r.witness_sets)).status, Status::Counterexample);

  const auto fc = Proximity::from_algebra(SetAlgebra::finite_cofinite(Z));
  const auto p = px::is_p_aleph1(fc, Strategy::family());
  ASSERT_EQ(p.status, Status::Counterexample);
  EXPECT_EQ(px::is_p_aleph1(fc, Strategy::on_witnesses(p.witness_sets)).status, Status::Counterexample);

  const auto script_run = px::run_script(script("finite_cofinite"));
  ASSERT_EQ(script_run.reports.size(), 1u);
  EXPECT_EQ(px::is_p_aleph1(fc, Strategy::on_witnesses(script_run.reports[0].witness_sets)).status, Status::Counterexample);
}

TEST(Run, StoneWritesDot) {
  const std::string path = ::testing::TempDir() + "proxlab_stone.dot";
  std::remove(path.c_str());
  const auto r = px::run_script("universe F = finite(3)\nalgebra M = atoms({0}, {1, 2})\nstone M --dot " + path + "\n");
  ASSERT_EQ(r.exit, dsl::ExitCode::Holds) << r.error;
  EXPECT_EQ(r.reports[0].law, "stone");
  const auto m = SetAlgebra::from_atoms(Universe::finite(3), {SymSet::indices(Universe::finite(3), {0}), SymSet::indices(Universe::finite(3), {1, 2})});
  EXPECT_EQ(slurp(path), px::emit_dot(px::StoneSpace(m)));
}

TEST(Output, JsonFieldOrderAndGolden) {
  const auto r = px::run_script(script("evens_odds"));
  const auto json = dsl::render_json(r.reports);
  EXPECT_EQ(json, slurp(kRoot + "/tests/golden/evens_odds.json"));
  const auto j = nlohmann::ordered_json::parse(json);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j["reports"][0].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"law", "subjects", "status", "witnesses", "cases_checked", "seed", "elapsed_ms"}));
  EXPECT_EQ(j["summary"]["exit_code"], 0);
}

TEST(Output, SeedIsRecordedAndTextIsStable) {
  dsl::Options o;
  o.seed = 11;
  o.samples = 50;
  const std::string src = "universe Z = integers\nproximity D = one_point(Z)\ncheck prox.axioms D\n";
  const auto a = px::run_script(src, o), b = px::run_script(src, o);
  EXPECT_EQ(a.reports[0].seed, 11u);
  EXPECT_EQ(dsl::render_json(a.reports), dsl::render_json(b.reports));
  EXPECT_EQ(dsl::render_text(a.reports).substr(0, 26), "prox.axioms [D]: holds-on-");
}
