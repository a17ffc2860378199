#include "ramsey/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ramsey/cosets.hpp"
#include "ramsey/coxeter.hpp"
#include "ramsey/faces.hpp"
#include "ramsey/verify.hpp"

namespace ramsey::cli {

namespace {

struct SuiteResult {
  std::size_t instances = 0;
  std::size_t disagreements = 0;
  std::size_t skipped = 0;
};

Json read_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read spec file \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_build(const std::string& path, std::size_t budget, std::ostream& out) {
  const auto built = build_monoid(read_spec(path), budget);
  const auto& m = built.monoid;
  out << "kind: " << built.kind << '\n';
  out << "size: " << m.size() << '\n';
  out << "generators:";
  for (Index g : m.generators()) out << ' ' << built.names[g];
  out << '\n';
  if (built.product) out << "product: " << to_string(*built.product) << '\n';
  out << "r_trivial: " << yes_no(is_r_trivial(m)) << '\n';
  out << "almost_r_trivial: " << yes_no(is_almost_r_trivial(m)) << '\n';
  out << "l_trivial: " << yes_no(is_l_trivial(m)) << '\n';
  out << "j_trivial: " << yes_no(is_j_trivial(m)) << '\n';
  return kOk;
}

int cmd_xm(const std::string& path, const std::string& format, std::size_t budget,
           std::ostream& out) {
  const auto built = build_monoid(read_spec(path), budget);
  const auto cosets = coset_poset(built.monoid);
  if (format == "dot") {
    out << coset_dot(cosets, built.namer());
  } else if (format == "json") {
    auto j = coset_json(built.monoid, cosets, built.namer());
    if (built.extra) j["faces"] = *built.extra;
    out << j.dump(2) << '\n';
  } else {
    out << coset_table(cosets, built.namer());
  }
  return kOk;
}

int cmd_check(const std::string& path, std::size_t budget, std::ostream& out) {
  const auto built = build_monoid(read_spec(path), budget);
  const auto result = is_xm_linear(built.monoid);
  if (result.linear) {
    out << "linear\n";
  } else {
    out << "nonlinear\nwitness: " << built.names[result.witness->first] << " M and "
        << built.names[result.witness->second] << " M are incomparable\n";
  }
  return kOk;
}

void emit(std::ostream& out, const Json& line) { out << line.dump() << '\n'; }

SuiteResult run_family(const FamilySpec& family, std::size_t n_max, std::size_t budget,
                       std::ostream& out) {
  const auto report = run_classification(family, n_max, budget);
  write_jsonl(report, out);
  return {report.instances.size(), report.disagreements(), report.skipped()};
}

SuiteResult run_tetris(std::size_t n_max, std::ostream& out) {
  SuiteResult r;
  for (const auto& row : tetris_linearity_table(n_max)) {
    const bool predicted = row.n < 4;
    emit(out, {{"id", "I" + std::to_string(row.n)},
               {"family", "tetris"},
               {"size", row.size},
               {"predicted", predicted},
               {"observed", row.linear}});
    ++r.instances;
    r.disagreements += predicted == row.linear ? 0 : 1;
  }
  emit(out, {{"summary", {{"family", "tetris"}, {"instances", r.instances},
                          {"disagreements", r.disagreements}, {"skipped", 0}}}});
  return r;
}

SuiteResult run_hecke(std::size_t budget, std::ostream& out) {
  std::vector<CoxeterType> types{{CoxeterFamily::A, 1}, {CoxeterFamily::A, 2},
                                 {CoxeterFamily::A, 3}, {CoxeterFamily::B, 2},
                                 {CoxeterFamily::B, 3}};
  for (unsigned m = 3; m <= 6; ++m) types.push_back({CoxeterFamily::I2, m});
  SuiteResult r;
  for (const auto& type : types) {
    const auto group = build_coxeter_group(realization(type), budget);
    const auto h = hecke_monoid(group);
    const bool predicted = group.rank() < 2;
    const bool observed = is_xm_linear(h).linear;
    const auto pair = generator_incomparability(h);
    const auto subword = verify_initial_subword(h, group.length.back());
    const bool ok = predicted == observed && h.size() == group.size() && is_r_trivial(h) &&
                    is_j_trivial(h) && (group.rank() < 2 || pair.has_value()) && subword.ok();
    emit(out, {{"id", to_string(type)},
               {"family", "hecke"},
               {"group_size", group.size()},
               {"size", h.size()},
               {"predicted", predicted},
               {"observed", observed},
               {"generator_witness", pair ? Json{h.generator_names()[pair->a],
                                                 h.generator_names()[pair->b]}
                                          : Json(nullptr)},
               {"initial_subword_pairs", subword.pairs_checked},
               {"ok", ok}});
    ++r.instances;
    r.disagreements += ok ? 0 : 1;
  }
  emit(out, {{"summary", {{"family", "hecke"}, {"instances", r.instances},
                          {"disagreements", r.disagreements}, {"skipped", 0}}}});
  return r;
}

SuiteResult run_faces(std::ostream& out) {
  struct Case {
    std::string id;
    std::size_t dim;
    std::vector<RationalVec> normals;
    std::size_t expected_faces;
  };
  const std::vector<Case> cases{
      {"line", 1, {{1}}, 3},
      {"three_lines", 2, {{1, 0}, {0, 1}, {1, -1}}, 13},
      {"coordinate_planes", 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 27},
      {"braid_A2", 3, {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}, {1, 1, 1}}, 39},
  };
  SuiteResult r;
  for (const auto& c : cases) {
    const auto fm = face_monoid(arrangement_from_normals(c.dim, c.normals));
    const bool linear = is_xm_linear(fm.monoid).linear;
    const auto pair = generator_incomparability(fm.monoid);
    const bool ok = fm.faces.size() == c.expected_faces && !linear && pair.has_value();
    emit(out, {{"id", c.id},
               {"family", "faces"},
               {"faces", fm.faces.size()},
               {"expected_faces", c.expected_faces},
               {"predicted", false},
               {"observed", linear},
               {"ok", ok}});
    ++r.instances;
    r.disagreements += ok ? 0 : 1;
  }
  emit(out, {{"summary", {{"family", "faces"}, {"instances", r.instances},
                          {"disagreements", r.disagreements}, {"skipped", 0}}}});
  return r;
}

int cmd_verify(const std::string& suite, std::optional<std::size_t> nmax, const std::string& out_path,
               std::size_t budget, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw InputError("cannot write \"" + out_path + "\"");
  }
  std::ostream& sink = out_path.empty() ? out : file;
  const bool all = suite == "all";

  // an explicit --nmax above a suite's range is an error for that suite
  // alone and is clamped when running everything
  auto size_for = [&](std::size_t fallback, std::size_t limit) {
    if (!nmax) return fallback;
    if (all) return std::min(*nmax, limit);
    if (*nmax > limit) {
      throw InputError("--nmax " + std::to_string(*nmax) + " exceeds " + std::to_string(limit) +
                       " for suite " + suite);
    }
    return *nmax;
  };

  std::vector<std::pair<std::string, SuiteResult>> results;
  auto want = [&](const char* name) { return all || suite == name; };
  if (want("s33")) {
    results.emplace_back("s33", run_family({Family::all_regressive}, size_for(5, 5), budget, sink));
  }
  if (want("s34")) {
    results.emplace_back("s34", run_family({Family::op_lattice}, size_for(6, 6), budget, sink));
  }
  if (want("s35k1")) {
    results.emplace_back("s35k1", run_family({Family::k_lip, 1}, size_for(6, 6), budget, sink));
  }
  if (want("s35k2")) {
    results.emplace_back("s35k2", run_family({Family::k_lip, 2}, size_for(6, 6), budget, sink));
  }
  if (want("s36")) {
    results.emplace_back("s36", run_family({Family::constants_lemma}, size_for(4, 5), budget, sink));
  }
  if (want("tetris")) results.emplace_back("tetris", run_tetris(size_for(6, 8), sink));
  if (want("hecke")) results.emplace_back("hecke", run_hecke(budget, sink));
  if (want("faces")) results.emplace_back("faces", run_faces(sink));

  std::size_t disagreements = 0, skipped = 0;
  for (const auto& [name, r] : results) {
    err << name << ": " << r.instances << " instances, " << r.disagreements << " disagreements, "
        << r.skipped << " skipped\n";
    disagreements += r.disagreements;
    skipped += r.skipped;
  }
  if (disagreements) return kDisagreement;
  if (skipped) return kBudgetExceeded;
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite monoids, their left-coset posets X(M), and Ramsey classification checks"};
  app.require_subcommand(1);
  std::size_t budget = kDefaultElementBudget;
  app.add_option("--budget", budget, "Maximum number of monoid elements to generate")
      ->check(CLI::PositiveNumber);

  std::string spec_path;
  auto* build = app.add_subcommand("build", "Build a monoid and print its size and Green properties");
  build->add_option("spec", spec_path, "JSON monoid spec")->required();

  std::string format = "table";
  auto* xm = app.add_subcommand("xm", "Print the poset of left cosets X(M)");
  xm->add_option("spec", spec_path, "JSON monoid spec")->required();
  xm->add_option("--format", format, "table, dot or json")
      ->check(CLI::IsMember({"table", "dot", "json"}));

  auto* check = app.add_subcommand("check", "Decide whether X(M) is a linear order");
  check->add_option("spec", spec_path, "JSON monoid spec")->required();

  std::string suite = "all";
  std::optional<std::size_t> nmax;
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; JSON lines per instance");
  verify->add_option("--suite", suite, "s33, s34, s35k1, s35k2, s36, tetris, hecke, faces or all")
      ->check(CLI::IsMember({"s33", "s34", "s35k1", "s35k2", "s36", "tetris", "hecke", "faces", "all"}));
  verify->add_option("--nmax", nmax, "Largest instance size")->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*build) return cmd_build(spec_path, budget, out);
    if (*xm) return cmd_xm(spec_path, format, budget, out);
    if (*check) return cmd_check(spec_path, budget, out);
    return cmd_verify(suite, nmax, out_path, budget, out, err);
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kDisagreement;
  }
}

}  // namespace ramsey::cli
