#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "shadow/branching.hpp"
#include "shadow/canonical.hpp"
#include "shadow/explore.hpp"
#include "shadow/gleam.hpp"
#include "shadow/moves.hpp"
#include "shadow/script.hpp"
#include "shadow/stf.hpp"
#include "shadow/thickening.hpp"

using namespace shadow;

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

MoveKind kind_arg(const std::string& text) {
  const auto kind = MoveKind::parse(text);
  if (!kind) throw UsageError("unknown move kind '" + text + "'");
  return *kind;
}

// Parses a document without enforcing the parity law.
Shadow load_unchecked(const std::string& path) {
  ShadowDocument doc = parse_stf(read_file(path));
  return {Polyhedron(std::move(doc.data)), std::move(doc.gleams), doc.name};
}

void print_invariants(const Shadow& s, std::ostream& out) {
  const Polyhedron& p = s.poly;
  out << "chi: " << euler_characteristic(p) << "\n";
  out << "vertices: " << p.num_vertices() << "\n";
  out << "edges: " << p.num_edges() << "\n";
  out << "circles: " << p.num_circles() << "\n";
  out << "regions: " << p.num_regions() << "\n";
  out << "standard: " << (is_standard(p) ? "yes" : "no") << "\n";
  const auto mod2 = mod2_gleams(p);
  for (int r = 0; r < p.num_regions(); ++r) out << "mod2_gleam." << p.regions()[r].id << ": " << mod2[r] << "\n";
  const ValidationReport parity = check_parity(p, s.gleams);
  out << "parity: " << (parity.ok() ? "ok" : "violated") << "\n";
  if (!parity.ok()) out << parity.str();
}

void print_sites(const Shadow& s, MoveKind kind, std::ostream& out) {
  for (const MoveSite& site : enumerate_sites(s, kind)) out << site.str() << "\n";
}

int run_validate(const std::string& path) {
  ShadowDocument doc = parse_stf(read_file(path));
  ValidationReport report = validate(doc.data);
  if (!report.ok()) {
    std::cout << "invalid\n" << report.str();
    return kDomainError;
  }
  Polyhedron p(std::move(doc.data));
  ValidationReport parity = check_parity(p, doc.gleams);
  if (!parity.ok()) {
    std::cout << "invalid\n" << parity.str();
    return kDomainError;
  }
  std::cout << "valid: " << p.num_vertices() << " vertices, " << p.num_edges() << " edges, " << p.num_circles()
            << " circles, " << p.num_regions() << " regions\n";
  return 0;
}

int run_repl(const std::string& path) {
  ScriptSession session(read_shadow_file(path));
  int n = 0;
  for (std::string line; std::getline(std::cin, line);) {
    ++n;
    std::istringstream in(line);
    std::string word;
    in >> word;
    try {
      if (word == "quit" || word == "exit") break;
      if (word == "show") {
        std::cout << serialize_stf(session.current());
      } else if (word == "invariants") {
        print_invariants(session.current(), std::cout);
      } else if (word == "sites") {
        std::string kind;
        if (!(in >> kind)) throw UsageError("usage: sites <kind>");
        print_sites(session.current(), kind_arg(kind), std::cout);
      } else {
        const std::string entry = session.execute(line, n);
        if (!entry.empty()) std::cout << entry << "\n";
      }
    } catch (const std::exception& e) {
      std::cout << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shadowed polyhedra toolkit"};
  app.require_subcommand(1);
  std::string file, file2, kind, anchor, script, output, moves = "equivalences", mode = "lax";
  int max_vertices = 4, depth = 2, three = 0, four = 0;
  std::size_t budget = ExploreLimits{}.budget;
  bool gleams = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a document");
  validate_cmd->add_option("file", file)->required();
  auto* invariants_cmd = app.add_subcommand("invariants", "combinatorial invariants and parity report");
  invariants_cmd->add_option("file", file)->required();
  auto* thicken_cmd = app.add_subcommand("thicken", "thickening report");
  thicken_cmd->add_option("file", file)->required();
  thicken_cmd->add_option("--three-handles", three, "3-handles attached when closing up");
  thicken_cmd->add_option("--four-handles", four, "4-handles attached when closing up");
  auto* branch_cmd = app.add_subcommand("branch", "enumerate branchings");
  branch_cmd->add_option("file", file)->required();
  branch_cmd->add_option("--mode", mode)->check(CLI::IsMember({"strict", "lax"}));
  auto* sites_cmd = app.add_subcommand("sites", "list move sites");
  sites_cmd->add_option("file", file)->required();
  sites_cmd->add_option("kind", kind)->required();
  auto* apply_cmd = app.add_subcommand("apply", "apply one move");
  apply_cmd->add_option("file", file)->required();
  apply_cmd->add_option("kind", kind)->required();
  apply_cmd->add_option("anchor", anchor)->required();
  apply_cmd->add_option("-o,--output", output)->required();
  auto* script_cmd = app.add_subcommand("script", "run a move script");
  script_cmd->add_option("file", file)->required();
  script_cmd->add_option("script", script)->required();
  script_cmd->add_option("-o,--output", output)->required();
  auto* explore_cmd = app.add_subcommand("explore", "bounded move graph");
  explore_cmd->add_option("file", file)->required();
  explore_cmd->add_option("--moves", moves);
  explore_cmd->add_option("--max-vertices", max_vertices);
  explore_cmd->add_option("--depth", depth);
  explore_cmd->add_option("--budget", budget);
  auto* canon_cmd = app.add_subcommand("canon", "canonical form");
  canon_cmd->add_option("file", file)->required();
  auto* iso_cmd = app.add_subcommand("iso", "test isomorphism");
  iso_cmd->add_option("file1", file)->required();
  iso_cmd->add_option("file2", file2)->required();
  iso_cmd->add_flag("--gleams", gleams, "require equal gleams");
  auto* repl_cmd = app.add_subcommand("repl", "interactive move session on stdin");
  repl_cmd->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*validate_cmd) return run_validate(file);
    if (*invariants_cmd) {
      print_invariants(load_unchecked(file), std::cout);
      return 0;
    }
    if (*thicken_cmd) {
      ThickeningReport report = thicken(read_shadow_file(file));
      if (three != 0 || four != 0) report = tunnel_annotation(report, three, four);
      std::cout << report.str();
      return 0;
    }
    if (*branch_cmd) {
      const Shadow s = read_shadow_file(file);
      const auto found = find_branchings(s.poly, mode == "strict" ? BranchingMode::Strict : BranchingMode::Lax);
      std::cout << "branchings: " << found.size() << "\n";
      for (std::size_t k = 0; k < found.size(); ++k)
        std::cout << "branching " << k << "\n" << branching_table(s.poly, found[k]);
      return 0;
    }
    if (*sites_cmd) {
      const MoveKind k = kind_arg(kind);
      print_sites(read_shadow_file(file), k, std::cout);
      return 0;
    }
    if (*apply_cmd) {
      const MoveKind k = kind_arg(kind);
      const Shadow s = read_shadow_file(file);
      const MoveResult r = apply_move(s, {k, anchor});
      write_file(output, serialize_stf(r.shadow));
      std::cout << "applied " << r.provenance.site.str() << ": chi " << euler_characteristic(s.poly) << " -> "
                << euler_characteristic(r.shadow.poly) << "\n";
      if (r.inverse_site) std::cout << "inverse: " << r.inverse_site->str() << "\n";
      return 0;
    }
    if (*script_cmd) {
      const ScriptRun run = run_script(read_shadow_file(file), read_file(script));
      for (const auto& line : run.transcript) std::cout << line << "\n";
      write_file(output, serialize_stf(run.result));
      return 0;
    }
    if (*explore_cmd) {
      std::vector<MoveKind> allowed;
      try {
        allowed = parse_move_list(moves);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const MoveGraph g = explore(read_shadow_file(file), allowed, {max_vertices, depth, budget});
      std::cout << g.str();
      return 0;
    }
    if (*canon_cmd) {
      std::cout << canonical_form(read_shadow_file(file));
      return 0;
    }
    if (*iso_cmd) {
      const Shadow a = read_shadow_file(file), b = read_shadow_file(file2);
      const auto iso = isomorphic(a, b, gleams);
      if (!iso) {
        std::cout << "not isomorphic\n";
        return kDomainError;
      }
      std::cout << "isomorphic\n" << iso->str(a.poly, b.poly);
      return 0;
    }
    if (*repl_cmd) return run_repl(file);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}
