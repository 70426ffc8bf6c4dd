// quasicell: canonical bases, W-graphs, a-functions, and Beissinger
// insertion for the fixed-point-free involution modules, with an
// end-to-end verification pipeline.
//
// Subcommands: canonical | graph | afun | insert | verify.
// All exports go to stdout; diagnostics go to stderr.
// Exit codes: 0 pass, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quasicell/cache.hpp"
#include "quasicell/export.hpp"
#include "quasicell/verify.hpp"

namespace {

using namespace quasicell;

struct Options {
  int n = 4;
  std::string set = "fpf";
  std::string kind = "both";
  std::string cache_dir;
  std::string output = "json";
  int jobs = 1;
  bool allow_n8 = false;
  int regular_max = 4;
};

std::filesystem::path resolve_cache_dir(const Options& opt) {
  if (const char* env = std::getenv("QUASICELL_CACHE"); env && *env) return env;
  if (!opt.cache_dir.empty()) return opt.cache_dir;
  return ".quasicell-cache";
}

int rank_cap(const Options& opt) { return opt.allow_n8 ? 8 : 6; }

// common validation; returns false (usage error) when the configuration is
// inconsistent
bool validate(const Options& opt, std::string& err) {
  if (opt.n < 1) {
    err = "--n must be positive";
    return false;
  }
  if (opt.n > rank_cap(opt)) {
    err = "rank above maximum (" + std::to_string(rank_cap(opt)) +
          "); pass --allow-n8 for ranks 7 and 8";
    return false;
  }
  if (opt.set == "fpf" && opt.n % 2 != 0) {
    err = "the fpf set needs an even rank";
    return false;
  }
  if (opt.set != "fpf" && opt.set != "regular") {
    err = "--set must be fpf or regular";
    return false;
  }
  if (opt.kind != "m" && opt.kind != "n" && opt.kind != "both") {
    err = "--kind must be m, n or both";
    return false;
  }
  if (opt.output != "json" && opt.output != "csv" && opt.output != "dot") {
    err = "--output must be json, csv or dot";
    return false;
  }
  if (opt.jobs < 1) {
    err = "--jobs must be positive";
    return false;
  }
  return true;
}

QpSet build_set(const Options& opt) {
  return opt.set == "fpf" ? build_fpf_set(opt.n) : build_regular_set(opt.n);
}

std::vector<ModuleKind> kinds_of(const Options& opt) {
  if (opt.kind == "m") return {ModuleKind::M};
  if (opt.kind == "n") return {ModuleKind::N};
  return {ModuleKind::M, ModuleKind::N};
}

int cmd_canonical(const Options& opt) {
  QpSet X = build_set(opt);
  Json out = Json::array();
  for (ModuleKind kind : kinds_of(opt)) {
    CanonicalData data = compute_canonical(kind, X);
    // internal consistency: the independent recurrence must agree
    if (compute_canonical_recurrence(kind, X) != data.c) {
      std::cerr << "internal consistency failure: recurrence disagrees with bar-solve\n";
      return 1;
    }
    if (opt.output == "csv") {
      std::cout << canonical_csv(data);
    } else {
      out.push_back(canonical_json(data));
    }
  }
  if (opt.output != "csv") std::cout << out.dump(1) << '\n';
  return 0;
}

int cmd_graph(const Options& opt) {
  QpSet X = build_set(opt);
  Json out = Json::array();
  for (ModuleKind kind : kinds_of(opt)) {
    CanonicalData data = compute_canonical(kind, X);
    LabeledGraph g = build_graph(kind, X, data);
    const auto cell_part = cells(g);
    const auto mol_part = molecules(g);
    if (opt.output == "dot") {
      std::cout << graph_dot(g);
    } else {
      out.push_back(graph_json(g, cell_part, mol_part));
    }
  }
  if (opt.output != "dot") std::cout << out.dump(1) << '\n';
  return 0;
}

int cmd_afun(const Options& opt) {
  QpSet X = build_set(opt);
  const KLTable kl = cached_kl(resolve_cache_dir(opt), opt.n, rank_cap(opt));
  if (opt.n >= 7)
    std::cerr << "note: rank " << opt.n << " holds every operator matrix in memory; "
              << "expect a long, memory-hungry run\n";
  CanonicalData cm = compute_canonical(ModuleKind::M, X);
  CanonicalData cn = compute_canonical(ModuleKind::N, X);
  StructCoeffTables tm = compute_struct_coeffs(ModuleKind::M, X, cm, kl, opt.jobs);
  StructCoeffTables tn = compute_struct_coeffs(ModuleKind::N, X, cn, kl, opt.jobs);
  if (opt.output == "csv")
    std::cout << afun_csv(X, tm.a, tn.a);
  else
    std::cout << afun_json(tm, tn).dump(1) << '\n';
  return 0;
}

int cmd_insert(const Options& opt) {
  if (opt.set != "fpf") {
    std::cerr << "insert enumerates fixed-point-free involutions; use --set fpf\n";
    return 2;
  }
  if (opt.output == "csv")
    std::cout << insertion_csv(opt.n);
  else
    std::cout << insertion_json(opt.n).dump(1) << '\n';
  return 0;
}

int cmd_verify(const Options& opt) {
  const auto cache = resolve_cache_dir(opt);
  VerifyReport rep;
  if (opt.set == "fpf") {
    const KLTable kl = cached_kl(cache, opt.n, rank_cap(opt));
    rep.merge(verify_fpf(opt.n, kl, opt.jobs));
    rep.merge(verify_qp_classifier());
  } else {
    const int k = std::min(opt.n, opt.regular_max);
    const KLTable kl = cached_kl(cache, k, rank_cap(opt));
    rep.merge(verify_regular(k, kl, opt.jobs));
  }
  int warns = 0;
  for (const auto& line : rep.lines) {
    const char* tagstr = line.status == VerifyLine::Status::pass   ? "PASS"
                         : line.status == VerifyLine::Status::warn ? "WARN"
                                                                   : "FAIL";
    if (line.status == VerifyLine::Status::warn) ++warns;
    std::cout << tagstr << "  " << line.name;
    if (!line.detail.empty()) std::cout << "  [" << line.detail << "]";
    std::cout << '\n';
  }
  std::cout << (rep.ok() ? "VERIFY PASS" : "VERIFY FAIL") << " (" << rep.lines.size()
            << " checks, " << warns << " warnings)\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact canonical-basis, cell and a-function computations for Hecke modules on fixed-point-free involutions"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", opt.n, "rank of the symmetric group")->required();
    cmd->add_option("--set", opt.set, "carrier set: fpf or regular");
    cmd->add_option("--kind", opt.kind, "module kind: m, n or both");
    cmd->add_option("--cache-dir", opt.cache_dir, "disk cache directory");
    cmd->add_option("--output", opt.output, "export format: json, csv or dot");
    cmd->add_option("--jobs", opt.jobs, "worker count (output is identical for any value)");
    cmd->add_flag("--allow-n8", opt.allow_n8, "unlock ranks 7 and 8");
  };

  CLI::App* canonical = app.add_subcommand("canonical", "canonical-basis matrices and mu tables");
  CLI::App* graph = app.add_subcommand("graph", "W-graphs with cells and molecules");
  CLI::App* afun = app.add_subcommand("afun", "a-function tables and gamma summaries");
  CLI::App* insert = app.add_subcommand("insert", "row/column Beissinger insertion tables");
  CLI::App* verify = app.add_subcommand("verify", "run the full verification pipeline");
  for (CLI::App* cmd : {canonical, graph, afun, insert, verify}) add_common(cmd);
  verify->add_option("--max", opt.regular_max,
                     "rank cap for the regular-set suite (effective rank = min(n, max))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  std::string err;
  if (!validate(opt, err)) {
    std::cerr << "usage error: " << err << '\n';
    return 2;
  }

  try {
    if (canonical->parsed()) return cmd_canonical(opt);
    if (graph->parsed()) return cmd_graph(opt);
    if (afun->parsed()) return cmd_afun(opt);
    if (insert->parsed()) return cmd_insert(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
