// Command-line front end: validate, solve, optimal, verify, generate,
// convert, export. Exit codes: 0 success / achievable, 1 not achievable or
// invalid input for validate, 2 error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "costgames/generators.hpp"
#include "costgames/semantics.hpp"
#include "costgames/solver.hpp"
#include "costgames/streett.hpp"

namespace fs = std::filesystem;
using namespace cg;

namespace {

using AnyGame = std::variant<CostGame, CostStreettGame>;

bool is_streett_text(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::getline(in, tok);
      continue;
    }
    return tok == "coststreett";
  }
  return false;
}

AnyGame load_any(const std::string& path) {
  std::string text = read_file(path);
  if (is_streett_text(text)) return parse_cst(text);
  return parse_cpg(text);
}

std::string strat_path(const std::string& game_path, const std::string& out) {
  if (!out.empty()) return out;
  return fs::path(game_path).replace_extension(".strat").string();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") std::cout << text;
  else write_file(out, text);
}

Cost parse_bound(const std::string& s) {
  if (s == "inf") throw Error("usage", "bound must be finite");
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw Error("usage", "bound must be a natural number");
    return v;
  } catch (const std::logic_error&) {
    throw Error("usage", "bound must be a natural number");
  }
}

struct Flags {
  std::string file, out, strategy, engine = "explicit", family, qdimacs, bound;
  std::size_t budget = 0;
  int d = 1;
  bool subdivide = false, dot = false;
};

int cmd_validate(const Flags& f) {
  auto g = load_any(f.file);
  auto vs = std::visit(
      [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, CostGame>) return validate_game(x);
        else return validate_streett(x);
      },
      g);
  for (const auto& v : vs) std::cout << "violation " << v.rule << " " << v.where << "\n";
  std::cout << (vs.empty() ? "valid" : "invalid") << "\n";
  return vs.empty() ? 0 : 1;
}

int cmd_solve(const Flags& f) {
  Cost b = parse_bound(f.bound);
  auto g = load_any(f.file);
  if (auto* sg = std::get_if<CostStreettGame>(&g)) {
    if (f.engine != "explicit") throw Error("usage", "Streett games support only the explicit engine");
    StreettOptions opt;
    if (f.budget) opt.budget = f.budget;
    auto r = decide_bounded_cost_streett(*sg, b, opt);
    std::cout << (r.achievable ? "ACHIEVABLE" : "NOT-ACHIEVABLE") << "\n";
    if (r.clamped) std::cout << "clamped " << cost_str(streett_clamp_bound(*sg)) << "\n";
    if (r.certificate) {
      std::string p = strat_path(f.file, f.out);
      write_file(p, write_strat(sg->shadow(), *r.certificate));
      std::cout << "certificate " << p << " player " << r.certificate->player << " states "
                << r.certificate->num_states << " bound " << cost_str(r.certificate_bound) << "\n";
    }
    return r.achievable ? 0 : 1;
  }
  const auto& cg = std::get<CostGame>(g);
  if (f.engine == "finite-duration") {
    auto r = decide_bounded_cost_finite_duration(cg, b, f.budget ? f.budget : kDefaultNodeBudget);
    if (r.outcome == FdOutcome::Exhausted)
      throw Error("budget", "finite-duration search exceeded " +
                                std::to_string(f.budget ? f.budget : kDefaultNodeBudget) + " nodes");
    bool ok = r.outcome == FdOutcome::Player0;
    std::cout << (ok ? "ACHIEVABLE" : "NOT-ACHIEVABLE") << "\n";
    std::cout << "nodes " << r.nodes << "\n";
    return ok ? 0 : 1;
  }
  if (f.engine != "explicit") throw Error("usage", "unknown engine '" + f.engine + "'");
  DecideOptions opt;
  if (f.budget) opt.budget = f.budget;
  auto r = decide_bounded_cost(cg, b, opt);
  std::cout << (r.achievable ? "ACHIEVABLE" : "NOT-ACHIEVABLE") << "\n";
  if (r.clamped) std::cout << "clamped " << cost_str(r.effective_bound) << "\n";
  if (r.certificate) {
    std::string p = strat_path(f.file, f.out);
    write_file(p, write_strat(cg, *r.certificate));
    std::cout << "certificate " << p << " player " << r.certificate->player << " states "
              << r.certificate->num_states << " bound " << cost_str(r.certificate_bound) << "\n";
  }
  return r.achievable ? 0 : 1;
}

int cmd_optimal(const Flags& f) {
  auto g = load_any(f.file);
  std::string p = strat_path(f.file, f.out);
  if (auto* sg = std::get_if<CostStreettGame>(&g)) {
    StreettOptions opt;
    if (f.budget) opt.budget = f.budget;
    auto r = optimal_cost_streett(*sg, opt);
    if (r.cap_hit) std::cout << "optimal >" << cost_str(r.value - 1) << "\n";
    else std::cout << "optimal " << cost_str(r.value) << "\n";
    if (r.witness.certificate) {
      write_file(p, write_strat(sg->shadow(), *r.witness.certificate));
      std::cout << "witness " << p << " player " << r.witness.certificate->player << "\n";
    }
    return 0;
  }
  const auto& cg = std::get<CostGame>(g);
  OptimalOptions opt;
  if (f.budget) opt.budget = f.budget;
  auto r = optimal_cost(cg, opt);
  std::cout << "optimal " << cost_str(r.value) << "\n";
  if (r.witness.certificate) {
    write_file(p, write_strat(cg, *r.witness.certificate));
    std::cout << "witness " << p << " player " << r.witness.certificate->player << "\n";
  }
  return 0;
}

int cmd_verify(const Flags& f) {
  auto g = load_any(f.file);
  std::string text = read_file(f.strategy);
  Cost c;
  if (auto* sg = std::get_if<CostStreettGame>(&g)) {
    c = streett_strategy_cost(*sg, parse_strat(sg->shadow(), text));
  } else {
    const auto& cg = std::get<CostGame>(g);
    auto s = parse_strat(cg, text);
    c = s.player == 0 ? strategy_cost(cg, s) : spoiler_cost(cg, s);
  }
  std::cout << "cost " << cost_str(c) << "\n";
  return 0;
}

QbfInput default_qbf(int n) {
  // true formula touching every variable; used when no QDIMACS file is given
  QbfInput q;
  q.num_vars = n;
  for (int v = 1; v <= n; ++v) {
    bool ex = v % 2 == 1;
    q.prefix.push_back({v, ex});
    if (ex) q.clauses.push_back({v, v, v});
    else q.clauses.push_back({v, -v, v});
  }
  return q;
}

int cmd_generate(const Flags& f) {
  std::string base = f.out.empty() ? f.family + "-d" + std::to_string(f.d) : f.out;
  if (f.family == "streett") {
    auto inst = streett_counter_family(f.d);
    write_file(base + ".cst", write_cst(inst.game));
    CostGame sh = inst.game.shadow();
    for (const auto& s : inst.strategies) write_file(base + "." + s.name + ".strat", write_strat(sh, s.spec));
    std::string m = manifest_line(inst.family, inst.d, inst.target_bound, inst.strategies) + "\n";
    write_file(base + ".manifest", m);
    std::cout << "game " << base << ".cst\n" << m;
    return 0;
  }
  GeneratedInstance inst;
  if (f.family == "qbf") {
    QbfInput q = f.qdimacs.empty() ? default_qbf(f.d) : parse_qdimacs(read_file(f.qdimacs));
    inst = qbf_to_game(normalize_qbf(q));
  } else if (f.family == "p0mem") {
    inst = p0_memory_family(f.d);
  } else if (f.family == "p1mem") {
    inst = p1_memory_family(f.d);
  } else if (f.family == "p1trade") {
    inst = p1_tradeoff_family(f.d);
  } else if (f.family == "bintrade") {
    inst = binary_tradeoff_family(f.d);
  } else {
    throw Error("usage", "unknown family '" + f.family + "'");
  }
  write_file(base + ".cpg", write_cpg(inst.game));
  for (const auto& s : inst.strategies) write_file(base + "." + s.name + ".strat", write_strat(inst.game, s.spec));
  std::string m = manifest_line(inst.family, inst.d, inst.target_bound, inst.strategies) + "\n";
  write_file(base + ".manifest", m);
  std::cout << "game " << base << ".cpg\n" << m;
  return 0;
}

int cmd_convert(const Flags& f) {
  auto g = load_any(f.file);
  auto* cg = std::get_if<CostGame>(&g);
  if (!cg) throw Error("usage", "convert applies to parity games with costs only");
  if (!f.subdivide) throw Error("usage", "convert needs --subdivide");
  emit(write_cpg(subdivide_costs(*cg, f.budget ? f.budget : kDefaultSubdivisionBudget)), f.out);
  return 0;
}

int cmd_export(const Flags& f) {
  auto g = load_any(f.file);
  if (auto* sg = std::get_if<CostStreettGame>(&g)) emit(export_dot(sg->shadow()), f.out);
  else emit(export_dot(std::get<CostGame>(g)), f.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity and Streett games with costs"};
  app.require_subcommand(1);
  Flags f;

  auto* v = app.add_subcommand("validate", "check a game file");
  v->add_option("file", f.file)->required();

  auto* s = app.add_subcommand("solve", "decide whether Player 0 can keep the cost within a bound");
  s->add_option("--bound,-b", f.bound)->required();
  s->add_option("--engine", f.engine)->check(CLI::IsMember({"explicit", "finite-duration"}));
  s->add_option("--budget", f.budget, "product vertices (explicit) or search nodes");
  s->add_option("--out,-o", f.out, "certificate path (default: <file>.strat)");
  s->add_option("file", f.file)->required();

  auto* o = app.add_subcommand("optimal", "compute the optimal cost and a witness");
  o->add_option("--budget", f.budget);
  o->add_option("--out,-o", f.out, "witness path (default: <file>.strat)");
  o->add_option("file", f.file)->required();

  auto* vf = app.add_subcommand("verify", "exact cost of a finite-state strategy");
  vf->add_option("--strategy,-s", f.strategy)->required();
  vf->add_option("file", f.file)->required();

  auto* gsub = app.add_subcommand("generate", "write a generated instance and its manifest");
  gsub->add_option("family", f.family)
      ->required()
      ->check(CLI::IsMember({"qbf", "p0mem", "p1mem", "p1trade", "bintrade", "streett"}));
  gsub->add_option("--d", f.d)->required();
  gsub->add_option("--qdimacs", f.qdimacs);
  gsub->add_option("--out,-o", f.out, "output path prefix");

  auto* c = app.add_subcommand("convert", "rewrite a game");
  c->add_flag("--subdivide", f.subdivide, "unary encoding by subdividing costly edges");
  c->add_option("--budget", f.budget);
  c->add_option("--out,-o", f.out);
  c->add_option("file", f.file)->required();

  auto* x = app.add_subcommand("export", "render a game");
  x->add_flag("--dot", f.dot)->required();
  x->add_option("--out,-o", f.out);
  x->add_option("file", f.file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (v->parsed()) return cmd_validate(f);
    if (s->parsed()) return cmd_solve(f);
    if (o->parsed()) return cmd_optimal(f);
    if (vf->parsed()) return cmd_verify(f);
    if (gsub->parsed()) return cmd_generate(f);
    if (c->parsed()) return cmd_convert(f);
    if (x->parsed()) return cmd_export(f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: budget: out of memory\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
