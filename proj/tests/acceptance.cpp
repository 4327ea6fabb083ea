// Acceptance checks: one PASS/FAIL line per criterion. Each criterion also
// fails when it exceeds its time limit. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "costgames/generators.hpp"
#include "support.hpp"

using namespace cg;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void need(bool ok, const std::string& what) {
    if (!ok) {
      detail << (pass ? " -- " : "; ");
      pass = false;
      detail << what;
    }
  }
};

// Every certificate produced anywhere below is checked here (criterion 14).
struct CertificateLedger {
  long checked = 0;
  long failed = 0;
  std::string first_failure;
  void record(bool ok, const std::string& where) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = where;
  }
} certs;

BoundedCostResult decide(const CostGame& g, Cost b, const std::string& where) {
  auto r = decide_bounded_cost(g, b);
  certs.record(cgtest::certificate_ok(g, r), where);
  return r;
}

OptimalResult optimal(const CostGame& g, const std::string& where) {
  auto r = optimal_cost(g);
  certs.record(cgtest::certificate_ok(g, r.witness), where);
  return r;
}

StreettOptimal optimal(const CostStreettGame& g, const std::string& where) {
  auto r = optimal_cost_streett(g);
  certs.record(cgtest::certificate_ok(g, r.witness), where);
  return r;
}

CostGame loop_game(Cost loop) {
  return make_game({{0, 0, 1}, {1, 1, 0}, {2, 0, 2}}, {{0, 1, 1}, {1, 1, loop}, {1, 2, 1}, {2, 0, 1}}, 0);
}

bool raw_decide(const CostGame& g, Cost b) {
  return solve_parity(build_quotient_game(g, b).pg).winner_from_initial() == 0;
}

// ------------------------------------------------------------ criteria

void c1(Verdict& v) {
  Cost right = optimal(loop_game(0), "loop right").value;
  Cost left = optimal(loop_game(1), "loop left").value;
  v.detail << "right=" << cost_str(right) << " left=" << cost_str(left);
  v.need(right == 2, "expected right=2");
  v.need(left == kInf, "expected left=inf");
}

void c2(Verdict& v) {
  std::vector<int> colors{3, 0, 1, 1, 2, 4, 1, 0};
  std::vector<Cost> costs{0, 1, 1, 0, 1, 1, 1};
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (int i = 0; i < 8; ++i) vs.push_back({i, 0, colors[i]});
  for (int i = 0; i < 7; ++i) es.push_back({i, i + 1, costs[i]});
  es.push_back({7, 7, 0});
  auto g = make_game(vs, es, 0);
  std::vector<int> o{0, 0, 0, 0, 0, 1, 1, 1};
  std::vector<Cost> r1{kBot, kBot, 0, 1, kBot, kBot, 0, 1};
  std::vector<Cost> r3{0, 0, 1, 2, 2, kBot, kBot, kBot};
  auto p = annotate(g, 2, {0, 1, 2, 3, 4, 5, 6, 7});
  int ok = 0;
  for (int i = 0; i < 8; ++i)
    if (p[i].o == o[i] && p[i].r[0] == r1[i] && p[i].r[1] == r3[i]) ++ok;
  v.detail << ok << "/8 rows match";
  v.need(ok == 8, "mismatching rows");
}

void c3(Verdict& v) {
  // Grid: n = 1 with every clause over x1 (4 clauses), n = 3 (∃∀∃) with
  // every clause on three distinct variables (8 clauses); all clause sets of
  // size 1..3 from each pool.
  struct Pool {
    std::vector<char> exists;
    std::vector<std::array<int, 3>> clauses;
  };
  std::vector<Pool> pools(2);
  pools[0].exists = {1};
  pools[0].clauses = {{1, 1, 1}, {1, 1, -1}, {1, -1, -1}, {-1, -1, -1}};
  pools[1].exists = {1, 0, 1};
  for (int m = 0; m < 8; ++m)
    pools[1].clauses.push_back({m & 1 ? -1 : 1, m & 2 ? -2 : 2, m & 4 ? -3 : 3});
  int total = 0, agree = 0, truths = 0;
  for (const auto& pool : pools) {
    int k = static_cast<int>(pool.clauses.size());
    for (int a = 0; a < k; ++a)
      for (int b = a; b <= k; ++b)
        for (int c = b; c <= k; ++c) {
          // b == k / c == k mean "no further clause"; keep sets strictly increasing
          if ((b == a) || (c == b && c != k)) continue;
          if (b == k && c != k) continue;
          QbfFormula f{pool.exists, {pool.clauses[a]}};
          if (b < k) f.clauses.push_back(pool.clauses[b]);
          if (c < k) f.clauses.push_back(pool.clauses[c]);
          auto inst = qbf_to_game(f);
          Cost bound = 3 * f.n() + 5;
          if (inst.target_bound != bound) v.need(false, "target bound differs from 3n+5");
          bool game = decide(inst.game, bound, "qbf").achievable;
          bool truth = eval_qbf(f);
          ++total;
          truths += truth;
          agree += game == truth;
        }
  }
  v.detail << agree << "/" << total << " formulas agree (" << truths << " true)";
  v.need(total == 106, "grid size changed");
  v.need(agree == total, "disagreement");
}

void c4(Verdict& v) {
  for (int d = 1; d <= 2; ++d) {
    Cost opt = optimal(p0_memory_family(d).game, "p0mem").value;
    v.detail << "opt(d=" << d << ")=" << cost_str(opt) << " ";
    v.need(opt == d * d + 2 * d, "wrong optimum");
  }
  for (int d = 1; d <= 3; ++d) {
    auto inst = p0_memory_family(d);
    for (int j = 1; j <= d; ++j) {
      Cost c = strategy_cost(inst.game, inst.strategies[j - 1].spec);
      v.detail << "s" << d << "," << j << "=" << cost_str(c) << " ";
      v.need(c == d * d + 3 * d - j, "wrong strategy cost");
    }
  }
}

void c5(Verdict& v) {
  auto g = p0_memory_family(2).game;
  auto choices = cgtest::all_choices(g, 0);
  Cost best = kInf;
  for (const auto& c : choices) best = std::min(best, strategy_cost(g, positional_strategy(g, 0, c)));
  v.detail << choices.size() << " positional strategies, best cost " << cost_str(best);
  v.need(best > 8, "a positional strategy reaches 8");
}

void c6(Verdict& v) {
  for (int d = 1; d <= 2; ++d) {
    auto inst = p1_memory_family(d);
    Cost c = spoiler_cost(inst.game, inst.strategies[0].spec);
    v.detail << "tau(d=" << d << ")=" << cost_str(c) << " ";
    v.need(c == 5 * (d - 1) + 7, "wrong spoiler cost");
  }
  auto t = p1_tradeoff_family(2);
  Cost a = spoiler_cost(t.game, t.strategies[0].spec);
  Cost b = spoiler_cost(t.game, t.strategies[1].spec);
  v.detail << "chain " << cost_str(a) << " < " << cost_str(b);
  v.need(a == 7 && b == 12, "chain is not 7 < 12");
}

void c7(Verdict& v) {
  auto inst = binary_tradeoff_family(2);
  Cost s1 = strategy_cost(inst.game, inst.strategies[0].spec);
  Cost s2 = strategy_cost(inst.game, inst.strategies[1].spec);
  Cost opt = optimal(inst.game, "bintrade").value;
  v.detail << "sigma1=" << cost_str(s1) << " sigma2=" << cost_str(s2) << " (optimum " << cost_str(opt)
           << ")";
  v.need(s1 == 14, "expected sigma1=14");
  v.need(s2 == 12, "expected sigma2=12");
}

void c8(Verdict& v) {
  std::mt19937_64 rng(801);
  int games = 0, compared = 0, exhausted = 0, agree = 0;
  while (games < 240) {
    auto g = cgtest::random_game(rng, {});
    if (g.odd_colors().size() > 2) continue;
    ++games;
    for (Cost b = 0; b <= 1; ++b) {
      auto fd = decide_bounded_cost_finite_duration(g, b, kDefaultNodeBudget);
      bool ex = decide(g, b, "oracle").achievable;
      if (fd.outcome == FdOutcome::Exhausted) {
        ++exhausted;
        continue;
      }
      ++compared;
      agree += ex == (fd.outcome == FdOutcome::Player0);
    }
  }
  double rate = static_cast<double>(exhausted) / (compared + exhausted);
  v.detail << games << " games, " << agree << "/" << compared << " agree, " << exhausted << " exhausted";
  v.need(agree == compared, "disagreement");
  v.need(rate < 0.10, "exhaustion rate too high");
}

void c9(Verdict& v) {
  std::mt19937_64 rng(901);
  cgtest::RandomSpec s;
  s.max_cost = 3;
  s.encoding = Encoding::Binary;
  int games = 0, checks = 0, agree = 0;
  while (games < 120) {
    auto g = cgtest::random_game(rng, s);
    if (g.max_cost() < 2) continue;  // only games where subdivision changes something
    ++games;
    auto h = subdivide_costs(g);
    for (Cost b = 0; b <= 4; ++b) {
      ++checks;
      agree += decide(g, b, "binary").achievable == decide(h, b, "subdivided").achievable;
    }
  }
  v.detail << games << " games, " << agree << "/" << checks << " decisions agree";
  v.need(agree == checks, "disagreement");
}

void c10(Verdict& v) {
  std::mt19937_64 rng(1001);
  int won = 0, within = 0, tried = 0;
  while (won < 520) {
    cgtest::RandomSpec s;
    s.max_n = 4;
    if (tried++ % 2) {
      s.max_cost = 3;
      s.encoding = Encoding::Binary;
    }
    auto g = cgtest::random_game(rng, s);
    Cost cap = regime_cap(g);
    // winning at all: a bound far above the cap, without any clamping
    if (!raw_decide(g, 2 * cap + 1)) continue;
    ++won;
    Cost opt = optimal(g, "cap").value;
    within += opt <= cap;
  }
  v.detail << within << "/" << won << " winning games have optimum <= cap";
  v.need(within == won, "optimum above the cap");
}

void c11(Verdict& v) {
  std::mt19937_64 rng(1101);
  long pairs = 0, violations = 0;
  int games = 0;
  while (games < 50) {
    auto g = cgtest::random_game(rng, {});
    ColorIndex ci(g);
    if (ci.d() > 2) continue;
    ++games;
    int d = ci.d(), n = g.n();
    for (Cost b = 0; b <= 2; ++b) {
      std::vector<TrackState> all;
      int per = static_cast<int>(b) + 2;
      int rcount = 1;
      for (int i = 0; i < d; ++i) rcount *= per;
      for (int o = 0; o <= n; ++o)
        for (int code = 0; code < rcount; ++code) {
          TrackState t{o, RequestFunction(d)};
          int x = code;
          for (int i = 0; i < d; ++i, x /= per) t.requests[i] = x % per - 1;
          all.push_back(t);
        }
      for (const auto& a : all)
        for (const auto& c : all) {
          if (c.overflow >= n || !dominates(a, c)) continue;
          for (const auto& e : g.edges) {
            ++pairs;
            auto a2 = update_track_state(g, b, a, e.cost, e.target);
            auto c2 = update_track_state(g, b, c, e.cost, e.target);
            violations += !dominates(a2, c2);
          }
        }
    }
  }
  v.detail << pairs << " (pair, edge) checks, " << violations << " violations";
  v.need(violations == 0, "stability violated");
}

void c12(Verdict& v) {
  std::mt19937_64 rng(1201);
  long walks = 0, unsettled = 0;
  for (int gi = 0; gi < 20; ++gi) {
    auto g = cgtest::random_game(rng, {});
    Cost b = static_cast<Cost>(rng() % 3);
    Cost len = settled_bound(g, b) + 1;
    for (int w = 0; w < 1000; ++w) {
      std::vector<int> walk{g.initial};
      walk.reserve(len);
      while (static_cast<Cost>(walk.size()) < len) {
        const auto& out = g.out[walk.back()];
        walk.push_back(g.edges[out[rng() % out.size()]].target);
      }
      ++walks;
      unsettled += settled(g, b, annotate(g, b, walk)).kind == SettleVerdict::Unsettled;
    }
  }
  v.detail << walks << " walks, " << unsettled << " unsettled";
  v.need(unsettled == 0, "unsettled walk");
}

void c13(Verdict& v) {
  for (int d = 1; d <= 2; ++d) {
    auto r = optimal(streett_counter_family(d).game, "streett");
    v.detail << "opt(d=" << d << ")=" << cost_str(r.value) << (r.cap_hit ? "(cap)" : "") << " ";
    v.need(!r.cap_hit && r.value == 3 * ((1 << d) - 1) + 2, "wrong optimum");
  }
  auto d3 = streett_counter_family(3);
  Cost c = streett_strategy_cost(d3.game, d3.strategies[0].spec);
  v.detail << "counter(d=3)=" << cost_str(c);
  v.need(c == 23, "wrong counter strategy cost");
}

void c14(Verdict& v) {
  v.detail << certs.checked << " certificates checked, " << certs.failed << " failed";
  if (certs.failed) v.detail << " (first: " << certs.first_failure << ")";
  v.need(certs.failed == 0 && certs.checked > 0, "");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Verdict&)> run;
  };
  std::vector<Criterion> all = {
      {1, "loop-game-optimal", 1, c1},
      {2, "request-trace", 1, c2},
      {3, "qbf-reduction-grid", 300, c3},
      {4, "p0-memory-family", 120, c4},
      {5, "positional-insufficiency-d2", 60, c5},
      {6, "p1-memory-family", 60, c6},
      {7, "binary-tradeoff-d2", 60, c7},
      {8, "oracle-equivalence", 600, c8},
      {9, "encoding-equivalence", 300, c9},
      {10, "cost-cap", 300, c10},
      {11, "domination-stability", 120, c11},
      {12, "settledness-bound", 300, c12},
      {13, "streett-counter-family", 300, c13},
      {14, "certificate-soundness", 1, c14},
  };
  int failures = 0;
  for (const auto& c : all) {
    Verdict v;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.need(false, std::string(" exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.need(secs <= c.limit_s, "time limit exceeded");
    failures += !v.pass;
    std::printf("%s %2d %-28s %s [%.2fs / %.0fs]\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                v.detail.str().c_str(), secs, c.limit_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failures, all.size());
  return failures;
}
