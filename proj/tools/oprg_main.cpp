#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oprg/axioms.hpp"
#include "oprg/contraction.hpp"
#include "oprg/errors.hpp"
#include "oprg/model_operad.hpp"
#include "oprg/morphism.hpp"
#include "oprg/operad.hpp"
#include "oprg/series.hpp"
#include "oprg/wick.hpp"

namespace {

using namespace oprg;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitCap = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerifyFailed = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content << std::flush;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot write file '" + out_path + "'");
  out << content;
}

// Group/Lie element file -> components a_2..a_order (a_1 is implicit).
GroupElement<ModelCarrier> load_element(const ModelCarrier& carrier,
                                        const std::string& path, int order) {
  const auto by_arity =
      parse_contraction_entries(read_file(path), carrier.domain());
  GroupElement<ModelCarrier> g = group_unit(carrier, order);
  for (const auto& [arity, comp] : by_arity) {
    if (arity == 1)
      throw PreconditionError(
          "arity-1 lines are not allowed in element files (the identity "
          "component is implicit)");
    if (arity > order)
      throw PreconditionError("element file has an arity-" +
                              std::to_string(arity) +
                              " component above the truncation order " +
                              std::to_string(order));
    g.comps[arity - 2] = comp;
  }
  return g;
}

std::string render_group_file(const ModelCarrier& carrier,
                              const GroupElement<ModelCarrier>& g) {
  return render_element(carrier, g);
}

LieElement<ModelCarrier> as_lie(const GroupElement<ModelCarrier>& g) {
  LieElement<ModelCarrier> l;
  l.order = g.order;
  l.comps = g.comps;
  return l;
}

GroupElement<ModelCarrier> as_group(const LieElement<ModelCarrier>& l) {
  GroupElement<ModelCarrier> g;
  g.order = l.order;
  g.comps = l.comps;
  return g;
}

int run_verify(const ModelCarrier& carrier, const std::string& which,
               int max_arity, int max_composite, int samples, unsigned seed,
               int flag_cap) {
  const auto& model = *carrier.model();
  if (which == "axioms") {
    AxiomCheckOptions opts;
    opts.max_arity = max_arity;
    opts.max_composite_arity = max_composite;
    opts.samples = samples;
    opts.seed = seed;
    const AxiomReport report = check_operad_axioms(carrier, opts);
    std::cout << "axioms " << report.summary() << "\n";
    return report.passed ? kExitOk : kExitVerifyFailed;
  }
  if (which == "closure") {
    std::vector<SystemFilter> systems;
    systems.push_back(system_1pi(model.sig));
    systems.push_back(system_admissible_no_tadpole(carrier.model()));
    systems.push_back(system_vertex_types(carrier.model()));
    systems.push_back(system_intersection(
        {system_1pi(model.sig), system_admissible_no_tadpole(carrier.model()),
         system_vertex_types(carrier.model())}));
    bool all_passed = true;
    for (const auto& s : systems) {
      const ClosureReport report =
          closure_check(s, *carrier.domain(), max_arity);
      std::cout << "closure " << s.name() << ": "
                << (report.passed ? "PASS" : "FAIL") << " ("
                << report.checked_triples << " triples)\n";
      for (const auto& f : report.failures) std::cout << "  " << f << "\n";
      all_passed = all_passed && report.passed;
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
  }
  if (which == "wick") {
    const int dim = model.type_count();
    std::vector<int> tuple;
    bool passed = true;
    long cases = 0;
    // all type tuples with total flag count <= flag_cap and <= 5 vertices
    std::function<void(int)> visit = [&](int flags_used) {
      if (!tuple.empty()) {
        const DiagramSum a = wick_enumerate(model, tuple);
        const DiagramSum b = wick_differential(model, tuple);
        ++cases;
        if (!(a == b)) {
          passed = false;
          std::cout << "wick mismatch on tuple of size " << tuple.size()
                    << "\n";
        }
      }
      if (tuple.size() >= 5) return;
      for (int t = 0; t < dim; ++t) {
        const int extra = static_cast<int>(model.types[t].corolla.size());
        if (flags_used + extra > flag_cap) continue;
        tuple.push_back(t);
        visit(flags_used + extra);
        tuple.pop_back();
      }
    };
    visit(0);
    std::cout << "wick enumerate == differential: "
              << (passed ? "PASS" : "FAIL") << " (" << cases << " tuples)\n";
    return passed ? kExitOk : kExitVerifyFailed;
  }
  if (which == "morphism") {
    std::mt19937 rng(seed);
    const EndCarrier end(model.type_count());
    bool passed = true;
    int checks = 0;
    for (int round = 0; round < samples; ++round) {
      for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 2; ++n) {
          const ContractionMap outer = carrier.random(m, rng);
          const ContractionMap inner = carrier.random(n, rng);
          const EndTensor outer_t = morphism_tensor(outer);
          const EndTensor inner_t = morphism_tensor(inner);
          for (int i = 1; i <= m; ++i) {
            ++checks;
            const EndTensor lhs = morphism_tensor(pcomp(outer, i, inner));
            const EndTensor rhs = end.pcomp(outer_t, i, inner_t);
            if (!end.equal(lhs, rhs)) {
              passed = false;
              std::cout << "morphism law fails at arities (" << m << "," << n
                        << "), slot " << i << "\n";
            }
          }
          const Permutation sigma = random_permutation(m, rng);
          ++checks;
          if (!end.equal(morphism_tensor(act(outer, sigma)),
                         end.act(outer_t, sigma))) {
            passed = false;
            std::cout << "morphism equivariance fails at arity " << m << "\n";
          }
        }
      }
    }
    std::cout << "morphism law: " << (passed ? "PASS" : "FAIL") << " ("
              << checks << " checks)\n";
    return passed ? kExitOk : kExitVerifyFailed;
  }
  throw ParseError("unknown verify target '" + which + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operadic renormalization group calculator"};
  app.require_subcommand(1);

  std::string model_path;
  std::string out_path;
  int order = 3;
  unsigned seed = 0;
  std::size_t cap = 100000;
  bool permissive = false;
  bool no_symmetrize_adm = false;

  auto add_common = [&](CLI::App* cmd, bool needs_order) {
    cmd->add_option("--model", model_path, "model config JSON")->required();
    cmd->add_option("--out", out_path, "output path (default: stdout)");
    cmd->add_option("--cap", cap, "diagram enumeration cap");
    if (needs_order)
      cmd->add_option("--order", order, "truncation order m")->required();
  };

  auto* cmd_diagrams = app.add_subcommand("diagrams", "enumerate diagram classes");
  int arity = 1;
  add_common(cmd_diagrams, false);
  cmd_diagrams->add_option("-n,--arity", arity, "vertex count")->required();

  std::vector<std::string> element_paths;
  auto* cmd_compose = app.add_subcommand("compose", "group product g * f");
  add_common(cmd_compose, true);
  cmd_compose->add_option("files", element_paths, "element files g f")
      ->expected(2);

  auto* cmd_invert = app.add_subcommand("invert", "group inverse");
  add_common(cmd_invert, true);
  cmd_invert->add_option("files", element_paths, "element file")->expected(1);

  auto* cmd_exp = app.add_subcommand("exp", "exponential of a Lie element");
  add_common(cmd_exp, true);
  cmd_exp->add_option("files", element_paths, "Lie element file")->expected(1);

  auto* cmd_log = app.add_subcommand("log", "logarithm of a group element");
  add_common(cmd_log, true);
  cmd_log->add_option("files", element_paths, "element file")->expected(1);

  auto* cmd_rg = app.add_subcommand(
      "rg-action", "coupling-space formal diffeomorphism of a group element");
  add_common(cmd_rg, true);
  cmd_rg->add_option("files", element_paths, "element file")->expected(1);
  cmd_rg->add_flag("--permissive", permissive,
                   "project out-of-type contractions to zero");

  auto* cmd_verify = app.add_subcommand("verify", "run a property suite");
  std::string which;
  int max_arity = 3;
  int max_composite = 5;
  int samples = 20;
  int flag_cap = 10;
  cmd_verify->add_option("which", which, "axioms|closure|wick|morphism")
      ->required();
  add_common(cmd_verify, false);
  cmd_verify->add_option("--seed", seed, "random seed");
  cmd_verify->add_option("--samples", samples, "sample rounds");
  cmd_verify->add_option("--max-arity", max_arity, "max operand arity");
  cmd_verify->add_option("--max-composite", max_composite,
                         "max composite arity");
  cmd_verify->add_option("--flag-cap", flag_cap, "max total flags for wick");
  cmd_verify->add_flag("--no-symmetrize-adm", no_symmetrize_adm,
                       "do not close the admissible set under swap");

  CLI11_PARSE(app, argc, argv);

  try {
    const ModelPtr model = load_model_file(model_path, !no_symmetrize_adm);
    const ModelCarrier carrier(model, cap);

    if (cmd_diagrams->parsed()) {
      const auto diagrams = enumerate_diagrams(*model, arity, cap);
      std::ostringstream body;
      for (const auto& d : diagrams) body << d.text() << "\n";
      write_output(out_path, body.str());
      if (!out_path.empty())
        std::cout << "count " << diagrams.size() << "\n";
      else
        std::cerr << "count " << diagrams.size() << "\n";
      return kExitOk;
    }
    if (cmd_compose->parsed()) {
      const auto g = load_element(carrier, element_paths[0], order);
      const auto f = load_element(carrier, element_paths[1], order);
      write_output(out_path,
                   render_group_file(carrier, group_product(carrier, g, f)));
      return kExitOk;
    }
    if (cmd_invert->parsed()) {
      const auto f = load_element(carrier, element_paths[0], order);
      write_output(out_path,
                   render_group_file(carrier, group_inverse(carrier, f)));
      return kExitOk;
    }
    if (cmd_exp->parsed()) {
      const auto l = as_lie(load_element(carrier, element_paths[0], order));
      write_output(out_path,
                   render_group_file(carrier, exp_map(carrier, l)));
      return kExitOk;
    }
    if (cmd_log->parsed()) {
      const auto g = load_element(carrier, element_paths[0], order);
      write_output(out_path,
                   render_group_file(carrier, as_group(log_map(carrier, g))));
      return kExitOk;
    }
    if (cmd_rg->parsed()) {
      const auto g = load_element(carrier, element_paths[0], order);
      const SeriesElement series = rg_action(carrier, g, permissive);
      write_output(out_path, render_series(series, model->type_names()));
      return kExitOk;
    }
    if (cmd_verify->parsed())
      return run_verify(carrier, which, max_arity, max_composite, samples,
                        seed, flag_cap);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
