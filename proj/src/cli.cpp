#include "glat/cli.hpp"

#include <CLI11.hpp>

#include "glat/error.hpp"
#include "glat/properties.hpp"
#include "glat/serialize.hpp"
#include "glat/workspace.hpp"

namespace glat {
namespace {

constexpr int kExitComputation = 1;
constexpr int kExitInput = 2;

bool is_input_error(ErrorCode c) {
  return c == ErrorCode::ParseError || c == ErrorCode::UnknownName;
}

void emit_error(std::ostream& err, std::string_view code, const std::string& message) {
  Json j{{"error", Json{{"code", std::string(code)}, {"message", message}}}};
  err << j.dump() << "\n";
}

struct Settings {
  std::string workspace;
  bool table = false;
  long coord_bound = RecognitionOptions{}.coord_bound;
  bool narrative_only = false;
  bool seedless = false;

  RecognitionOptions recognition() const {
    RecognitionOptions r;
    r.coord_bound = coord_bound;
    return r;
  }
  EmbeddingSearchOptions search() const {
    EmbeddingSearchOptions s;
    s.allow_random = !seedless;
    return s;
  }
};

void print(std::ostream& out, const Settings& s, Json body) {
  Json doc{{"format", 1}};
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  if (s.table)
    out << render_table(doc);
  else
    out << doc.dump(2) << "\n";
}

Json check_json(const CheckReport& report, std::size_t lattices, std::size_t reductions) {
  Json props = Json::array();
  for (const auto& p : report.properties) {
    Json failures = Json::array();
    for (const auto& f : p.failures) failures.push_back(f);
    props.push_back(
        Json{{"name", p.name}, {"passed", p.passed}, {"failed", p.failed}, {"failures", failures}});
  }
  return Json{{"lattices", lattices},
              {"reductions", reductions},
              {"properties", props},
              {"all_passed", report.ok()}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral lattices with finite group actions: Artin and Ono constructions"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--workspace", s.workspace, "Workspace JSON file");
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  auto* table_flag = app.add_flag("--table", s.table, "Plain-text key/value output");
  json_flag->excludes(table_flag);
  app.add_option("--coord-bound", s.coord_bound, "Coefficient bound for permuted-basis search")
      ->check(CLI::Range(0L, 64L));
  app.add_flag("--narrative-only", s.narrative_only, "reduce: print only the step trace");
  app.add_flag("--seedless", s.seedless, "Fail instead of using the randomized search fallback");

  std::string name, second;
  auto* group_info = app.add_subcommand("group-info", "Order, classes and cyclic subgroups");
  group_info->add_option("group", name, "Group name")->required();
  auto* artin = app.add_subcommand("artin", "Artin decomposition of a lattice character");
  artin->add_option("lattice", name, "Lattice name")->required();
  auto* ono = app.add_subcommand("ono", "Ono embedding M1 -> M^r + M0");
  ono->add_option("lattice", name, "Lattice name")->required();
  auto* twist_cmd = app.add_subcommand("twist", "Twist a lattice over F x| Gamma by a cocycle");
  twist_cmd->add_option("lattice", name, "Lattice name")->required();
  twist_cmd->add_option("cocycle", second, "Cocycle name")->required();
  auto* reduce = app.add_subcommand("reduce", "Kernel data for a stabilizer reduction");
  reduce->add_option("input", name, "Reduction name")->required();
  auto* check = app.add_subcommand("check", "Run the property suite");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "UsageError", e.what());
    return kExitInput;
  }

  Workspace ws;
  try {
    if (!s.workspace.empty())
      ws = load_workspace_file(s.workspace);
    else if (!check->parsed())
      fail(ErrorCode::InvalidArgument, "--workspace is required for this command");
  } catch (const Error& e) {
    emit_error(err, error_code_name(e.code()), e.what());
    return kExitInput;
  }

  try {
    if (group_info->parsed()) {
      print(out, s, Json{{"group", name}, {"info", group_info_json(*ws.group(name))}});
    } else if (artin->parsed()) {
      const GammaLattice& m = ws.lattice(name);
      print(out, s, Json{{"lattice", name}, {"artin", to_json(artin_decompose(m), *m.group())}});
    } else if (ono->parsed()) {
      print(out, s, Json{{"lattice", name}, {"ono", to_json(ono_construct(ws.lattice(name), s.search()))}});
    } else if (twist_cmd->parsed()) {
      const GammaLattice& m = ws.lattice(name);
      const Cocycle& x = ws.cocycle(second);
      const SemidirectProduct* sp = ws.semidirect_for(m.group());
      if (!sp) fail(ErrorCode::GroupMismatch, "lattice '" + name + "' is not over a semidirect product");
      const GammaLattice t = twist(m, *sp, x);
      print(out, s, Json{{"lattice", name}, {"cocycle", second}, {"twisted", to_json(t)},
                         {"permutation", to_json(is_permutation_lattice(t, s.recognition()))}});
    } else if (reduce->parsed()) {
      const ReductionReport rep = reduce_stabilizer(ws.reduction(name), s.search());
      if (s.narrative_only) {
        for (const auto& line : rep.narrative) out << line << "\n";
      } else {
        print(out, s, Json{{"reduction", name}, {"report", to_json(rep)}});
      }
    } else if (check->parsed()) {
      std::vector<CorpusLattice> lattices = builtin_lattices();
      for (const auto& [n, m] : ws.lattices) lattices.push_back({"workspace/" + n, m});
      std::vector<CorpusReduction> reductions = builtin_reductions();
      for (const auto& [n, r] : ws.reductions) reductions.push_back({"workspace/" + n, r});
      const CheckReport report =
          run_property_suite(lattices, reductions, CheckOptions{s.recognition(), s.search()});
      print(out, s, check_json(report, lattices.size(), reductions.size()));
      return report.ok() ? 0 : kExitComputation;
    }
  } catch (const Error& e) {
    emit_error(err, error_code_name(e.code()), e.what());
    return is_input_error(e.code()) ? kExitInput : kExitComputation;
  }
  return 0;
}

}  // namespace glat
