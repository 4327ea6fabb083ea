// Python bindings. Games, strategies and manifests cross the boundary in
// their text formats; infinite costs become None.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "costgames/error.hpp"
#include "costgames/generators.hpp"
#include "costgames/semantics.hpp"
#include "costgames/solver.hpp"
#include "costgames/streett.hpp"

namespace py = pybind11;
using namespace cg;

namespace {

py::object cost_obj(Cost c) {
  if (c == kInf) return py::none();
  return py::int_(c);
}

py::dict decision(const CostGame& arena, bool achievable, const std::optional<StrategySpec>& cert,
                  Cost cert_bound, bool clamped, std::size_t product_size) {
  py::dict d;
  d["achievable"] = achievable;
  d["certificate"] = cert ? py::object(py::str(write_strat(arena, *cert))) : py::none();
  d["certificate_player"] = cert ? py::object(py::int_(cert->player)) : py::none();
  d["certificate_bound"] = cert_bound;
  d["clamped"] = clamped;
  d["product_size"] = product_size;
  return d;
}

py::dict decision(const CostGame& g, const BoundedCostResult& r) {
  return decision(g, r.achievable, r.certificate, r.certificate_bound, r.clamped, r.product_size);
}

py::dict decision(const CostStreettGame& g, const StreettDecision& r) {
  return decision(g.shadow(), r.achievable, r.certificate, r.certificate_bound, r.clamped, r.product_size);
}

py::dict instance_dict(const std::string& game_text, const std::string& manifest, const CostGame& arena,
                       const std::vector<ReferenceStrategy>& strategies) {
  py::dict strats;
  for (const auto& s : strategies) strats[py::str(s.name)] = write_strat(arena, s.spec);
  py::dict d;
  d["game"] = game_text;
  d["manifest"] = manifest;
  d["strategies"] = strats;
  return d;
}

}  // namespace

PYBIND11_MODULE(costgames, m) {
  m.doc() = "Cost-parity and cost-Streett games: bounded-cost decisions, optimal costs, generators.";

  py::register_exception<Error>(m, "CostGamesError", PyExc_ValueError);

  py::class_<CostGame>(m, "CostParityGame")
      .def(py::init(&parse_cpg), py::arg("text"))
      .def_static("load", &load_cpg, py::arg("path"))
      .def_property_readonly("num_vertices", &CostGame::n)
      .def_property_readonly("num_edges", [](const CostGame& g) { return g.edges.size(); })
      .def_property_readonly("initial", [](const CostGame& g) { return g.initial; })
      .def_property_readonly("binary", [](const CostGame& g) { return g.encoding == Encoding::Binary; })
      .def("validate",
           [](const CostGame& g) {
             std::vector<std::pair<std::string, std::string>> res;
             for (const auto& v : validate_game(g)) res.emplace_back(v.rule, v.where);
             return res;
           })
      .def("decide",
           [](const CostGame& g, Cost b, bool finite_duration, std::uint64_t budget) -> py::object {
             if (b < 0) throw Error("usage", "bound must be a natural number");
             if (!finite_duration) return decision(g, decide_bounded_cost(g, b));
             auto r = decide_bounded_cost_finite_duration(g, b, budget);
             if (r.outcome == FdOutcome::Exhausted) return py::none();
             return py::bool_(r.outcome == FdOutcome::Player0);
           },
           py::arg("bound"), py::arg("finite_duration") = false, py::arg("budget") = kDefaultNodeBudget)
      .def("optimal", [](const CostGame& g) { return cost_obj(optimal_cost(g).value); })
      .def("strategy_cost",
           [](const CostGame& g, const std::string& strat) {
             StrategySpec s = parse_strat(g, strat);
             return cost_obj(s.player == 0 ? strategy_cost(g, s) : spoiler_cost(g, s));
           },
           py::arg("strategy"))
      .def("subdivide", [](const CostGame& g) { return subdivide_costs(g); })
      .def("to_cpg", &write_cpg)
      .def("to_dot", &export_dot);

  py::class_<CostStreettGame>(m, "CostStreettGame")
      .def(py::init(&parse_cst), py::arg("text"))
      .def_property_readonly("num_vertices", &CostStreettGame::n)
      .def("decide", [](const CostStreettGame& g, Cost b) { return decision(g, decide_bounded_cost_streett(g, b)); },
           py::arg("bound"))
      .def("optimal",
           [](const CostStreettGame& g) {
             auto r = optimal_cost_streett(g);
             return py::make_tuple(cost_obj(r.value), r.cap_hit);
           })
      .def("strategy_cost",
           [](const CostStreettGame& g, const std::string& strat) {
             return cost_obj(streett_strategy_cost(g, parse_strat(g.shadow(), strat)));
           },
           py::arg("strategy"))
      .def("to_cst", &write_cst);

  m.def("from_parity", &streett_from_parity, py::arg("game"));

  m.def(
      "generate",
      [](const std::string& family, int d) {
        if (family == "streett") {
          auto inst = streett_counter_family(d);
          return instance_dict(write_cst(inst.game), manifest_line(inst.family, d, inst.target_bound, inst.strategies),
                               inst.game.shadow(), inst.strategies);
        }
        GeneratedInstance inst;
        if (family == "p0mem") inst = p0_memory_family(d);
        else if (family == "p1mem") inst = p1_memory_family(d);
        else if (family == "p1trade") inst = p1_tradeoff_family(d);
        else if (family == "bintrade") inst = binary_tradeoff_family(d);
        else throw Error("usage", "unknown family '" + family + "'");
        return instance_dict(write_cpg(inst.game), manifest_line(inst.family, d, inst.target_bound, inst.strategies),
                             inst.game, inst.strategies);
      },
      py::arg("family"), py::arg("d"));

  m.def(
      "qbf_game",
      [](const std::string& qdimacs) {
        auto inst = qbf_to_game(normalize_qbf(parse_qdimacs(qdimacs)));
        return py::make_tuple(inst.game, inst.target_bound);
      },
      py::arg("qdimacs"));

  m.def(
      "eval_qdimacs", [](const std::string& qdimacs) { return eval_qbf(normalize_qbf(parse_qdimacs(qdimacs))); },
      py::arg("qdimacs"));
}
