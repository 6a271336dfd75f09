// Command line front end: build complexes, run homology/UBC/filling
// pipelines, certify constants, and emit desk reports.
#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "report.hpp"
#include "ubcw/builders.hpp"
#include "ubcw/calculus.hpp"
#include "ubcw/errors.hpp"
#include "ubcw/families.hpp"
#include "ubcw/homology.hpp"
#include "ubcw/json_io.hpp"
#include "ubcw/quadratic.hpp"
#include "ubcw/stable_range.hpp"
#include "ubcw/ubc.hpp"

namespace {

using namespace ubcw;

// File-system failures get their own exit code, distinct from precondition
// and budget failures.
struct IoFailure {
  std::string message;
};

std::string load_file(const std::string& path) {
  try {
    return load_text(path);
  } catch (const PreconditionError& e) {
    throw IoFailure{e.what()};
  }
}

void save_file(const std::string& path, const std::string& text) {
  try {
    save_text(path, text);
  } catch (const PreconditionError& e) {
    throw IoFailure{e.what()};
  }
}

SemiSimplicialSet load_complex(const std::string& path) {
  return complex_from_json(load_file(path));
}

bool is_prime(long m) {
  if (m < 2) return false;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

FiniteRing make_ring(long m) {
  return is_prime(m) ? ring_field(m) : ring_zmod(m);
}

std::vector<long> parse_longs(const std::string& text, char sep) {
  std::vector<long> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(std::stol(item));
  return out;
}

std::vector<std::vector<long>> parse_vectors(const std::string& text) {
  std::vector<std::vector<long>> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ';'))
    if (!item.empty()) out.push_back(parse_longs(item, ','));
  return out;
}

SimplicialComplex as_simplicial(const SemiSimplicialSet& x) {
  SimplicialComplex c(x.name());
  for (int s = 0; s < x.count(0); ++s) c.add_vertex(x.id_of(0, s));
  for (int q = 1; q <= x.dim(); ++q) {
    for (int s = 0; s < x.count(q); ++s) {
      std::vector<std::string> ids;
      for (int v : x.vertices_of(q, s)) ids.push_back(x.id_of(0, v));
      c.add_simplex_by_ids(ids);
    }
  }
  return c;
}

struct BuildOptions {
  std::string family;
  std::string out;
  long p = 2;
  long m = 2;
  int n = 1;
  int k = 0;
  long delta = 1;
  long epsilon = -1;
  std::string universe = "full";
  std::string suffix;
  std::string lambda;
  std::string input;
  std::string input2;
  std::string apex = "apex";
  std::string which = "s";
};

SemiSimplicialSet run_build(const BuildOptions& opt, const Budget& budget) {
  if (opt.family == "tits-a")
    return order_complex(tits_building_A(opt.p, opt.n), budget)
        .to_semi_simplicial();
  if (opt.family == "tits-c")
    return order_complex(tits_building_C(opt.p, opt.n), budget)
        .to_semi_simplicial();
  if (opt.family == "unimodular") {
    UnimodularPosetSpec spec;
    spec.ring = make_ring(opt.m);
    spec.n = opt.n;
    spec.delta = opt.delta;
    if (opt.universe == "full")
      spec.universe = UnimodularPosetSpec::Universe::full;
    else if (opt.universe == "affine")
      spec.universe = UnimodularPosetSpec::Universe::affine;
    else if (opt.universe == "union")
      spec.universe = UnimodularPosetSpec::Universe::union_shape;
    else
      throw PreconditionError("unknown universe: " + opt.universe);
    spec.suffix = parse_vectors(opt.suffix);
    return order_complex(unimodular_poset(spec, budget), budget)
        .to_semi_simplicial();
  }
  if (opt.family == "split-inj")
    return split_injection_complex(make_ring(opt.m), opt.n, budget);
  if (opt.family == "hyperbolic") {
    FiniteRing r = make_ring(opt.m);
    FormParameter fp;
    if (!opt.lambda.empty())
      fp = form_parameter(r, opt.epsilon, parse_longs(opt.lambda, ','));
    else if (opt.epsilon == -1)
      fp = symplectic_form_parameter(r);
    else
      fp = minimal_form_parameter(r, opt.epsilon);
    QuadraticModule m = hyperbolic_module(fp, r, opt.n);
    HyperbolicComplexes hc = hyperbolic_split_injection_complex(m, budget);
    if (opt.which == "x") return hc.x;
    return hc.s.to_semi_simplicial();
  }
  if (opt.family == "cone") return cone(load_complex(opt.input), opt.apex);
  if (opt.family == "join") {
    SemiSimplicialSet a = load_complex(opt.input);
    SemiSimplicialSet b = load_complex(opt.input2);
    return ssset_join(a, b, a.name() + "*" + b.name());
  }
  if (opt.family == "sd") return sd_complex(load_complex(opt.input), budget);
  if (opt.family == "ord")
    return ord_construction(as_simplicial(load_complex(opt.input)), budget);
  if (opt.family == "horn") return horn(opt.n, opt.k);
  throw PreconditionError("unknown family: " + opt.family);
}

nlohmann::ordered_json constant_to_json(const CertifiedConstant& c) {
  nlohmann::ordered_json j;
  j["rule"] = c.rule;
  j["params"] = c.params;
  j["scalars"] = nlohmann::ordered_json::array();
  for (const XRat& s : c.scalars) j["scalars"].push_back(s.str());
  j["value"] = c.value.str();
  j["inputs"] = nlohmann::ordered_json::array();
  for (const CertifiedConstant& in : c.inputs)
    j["inputs"].push_back(constant_to_json(in));
  return j;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    save_file(out_path, text);
}

int run(int argc, char** argv) {
  CLI::App app{"workbench for l1 filling norms of combinatorial complexes"};
  app.require_subcommand(1);

  Budget budget;
  std::string out_path;

  // build
  BuildOptions build_opt;
  CLI::App* cmd_build = app.add_subcommand("build", "construct a complex");
  cmd_build->add_option("family", build_opt.family)->required();
  cmd_build->add_option("--out", build_opt.out);
  cmd_build->add_option("--p", build_opt.p);
  cmd_build->add_option("--m", build_opt.m);
  cmd_build->add_option("--n", build_opt.n);
  cmd_build->add_option("--k", build_opt.k);
  cmd_build->add_option("--delta", build_opt.delta);
  cmd_build->add_option("--epsilon", build_opt.epsilon);
  cmd_build->add_option("--universe", build_opt.universe);
  cmd_build->add_option("--suffix", build_opt.suffix);
  cmd_build->add_option("--lambda", build_opt.lambda);
  cmd_build->add_option("--input", build_opt.input);
  cmd_build->add_option("--input2", build_opt.input2);
  cmd_build->add_option("--apex", build_opt.apex);
  cmd_build->add_option("--which", build_opt.which);
  cmd_build->add_option("--max-vertices", budget.max_vertices);
  cmd_build->add_option("--max-circuits", budget.max_circuits);

  // homology
  std::string input_path;
  int max_q = -2;
  CLI::App* cmd_hom = app.add_subcommand("homology", "reduced Betti numbers");
  cmd_hom->add_option("--input", input_path)->required();
  cmd_hom->add_option("--max-q", max_q);
  cmd_hom->add_option("--out", out_path);

  // ubc
  int ubc_q = 0;
  std::string ubc_mode = "exact";
  std::size_t samples = 12;
  std::uint64_t seed = 0;
  CLI::App* cmd_ubc = app.add_subcommand("ubc", "per-degree UBC constant");
  cmd_ubc->add_option("--input", input_path)->required();
  cmd_ubc->add_option("--q", ubc_q)->required();
  cmd_ubc->add_option("--mode", ubc_mode);
  cmd_ubc->add_option("--samples", samples);
  cmd_ubc->add_option("--seed", seed);
  cmd_ubc->add_option("--out", out_path);
  cmd_ubc->add_option("--max-vertices", budget.max_vertices);
  cmd_ubc->add_option("--max-circuits", budget.max_circuits);

  // minfill
  std::string chain_path, sub_path;
  int fill_q = 0;
  CLI::App* cmd_fill = app.add_subcommand("minfill", "l1-minimal filling");
  cmd_fill->add_option("--input", input_path)->required();
  cmd_fill->add_option("--chain", chain_path)->required();
  cmd_fill->add_option("--q", fill_q)->required();
  cmd_fill->add_option("--sub", sub_path);
  cmd_fill->add_option("--out", out_path);

  // certify
  std::string rule_name;
  std::vector<std::string> rule_args;
  CLI::App* cmd_cert = app.add_subcommand("certify", "evaluate a calculus rule");
  cmd_cert->add_option("--rule", rule_name)->required();
  cmd_cert->add_option("--args", rule_args);
  cmd_cert->add_option("--out", out_path);

  // stable-range
  std::string range_family;
  long sr_n = 0, sr_sr = 1, sr_q = 0;
  CLI::App* cmd_range = app.add_subcommand("stable-range", "stability verdict");
  cmd_range->add_option("family", range_family)->required();
  cmd_range->add_option("--n", sr_n)->required();
  cmd_range->add_option("--sr", sr_sr);
  cmd_range->add_option("--q", sr_q)->required();
  cmd_range->add_option("--out", out_path);

  // report
  std::string suite = "desk";
  std::string out_json = "desk_report.json";
  std::string out_csv = "desk_report.csv";
  double time_budget_sec = 0.0;
  CLI::App* cmd_report = app.add_subcommand("report", "run a report suite");
  cmd_report->add_option("--suite", suite);
  cmd_report->add_option("--seed", seed);
  cmd_report->add_option("--out-json", out_json);
  cmd_report->add_option("--out-csv", out_csv);
  cmd_report->add_option("--time-budget-sec", time_budget_sec);
  cmd_report->add_option("--max-vertices", budget.max_vertices);
  cmd_report->add_option("--max-circuits", budget.max_circuits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (cmd_build->parsed()) {
    SemiSimplicialSet x = run_build(build_opt, budget);
    std::string path =
        build_opt.out.empty() ? build_opt.family + ".json" : build_opt.out;
    save_file(path, complex_to_json(x));
    std::cout << x.name() << ": dim " << x.dim() << ", "
              << x.total_simplices() << " simplices -> " << path << "\n";
    return 0;
  }

  if (cmd_hom->parsed()) {
    SemiSimplicialSet x = load_complex(input_path);
    int cap = (max_q == -2) ? x.dim() : max_q;
    HomologyProfile prof = reduced_betti(x, cap, budget);
    nlohmann::ordered_json j;
    j["name"] = prof.name;
    j["nonempty"] = prof.nonempty;
    j["max_degree"] = prof.max_degree;
    j["betti"] = nlohmann::ordered_json::array();
    for (const Int& b : prof.betti) j["betti"].push_back(b.get_str());
    emit(out_path, j.dump(2) + "\n");
    return 0;
  }

  if (cmd_ubc->parsed()) {
    SemiSimplicialSet x = load_complex(input_path);
    UbcMeasurement m;
    if (ubc_mode == "exact")
      m = ubc_exact(x, ubc_q, budget);
    else if (ubc_mode == "sampled")
      m = ubc_sampled(x, ubc_q, samples, seed, budget);
    else
      throw PreconditionError("unknown mode: " + ubc_mode);
    nlohmann::ordered_json j;
    j["name"] = x.name();
    j["q"] = m.q;
    j["mode"] = (m.mode == UbcMode::exact && !m.downgraded) ? "exact" : "sampled";
    j["downgraded"] = m.downgraded;
    j["value"] = m.value.str();
    j["circuits_enumerated"] = m.circuits_enumerated;
    j["sample_count"] = m.sample_count;
    j["seed"] = m.seed;
    emit(out_path, j.dump(2) + "\n");
    return 0;
  }

  if (cmd_fill->parsed()) {
    SemiSimplicialSet x = load_complex(input_path);
    Chain sigma = chain_from_json(load_file(chain_path));
    FillResult res;
    if (sub_path.empty()) {
      res = min_fill(x, fill_q, sigma);
    } else {
      SemiSimplicialSet y = load_complex(sub_path);
      std::vector<std::set<std::string>> sub_ids(
          static_cast<std::size_t>(y.dim()) + 1);
      for (int q = 0; q <= y.dim(); ++q)
        for (int s = 0; s < y.count(q); ++s) sub_ids[q].insert(y.id_of(q, s));
      PairComplex pair(x, sub_ids);
      res = relative_min_fill(pair, fill_q, sigma);
    }
    nlohmann::ordered_json j;
    j["q"] = fill_q;
    j["fill_norm"] = rat_to_string(res.fill_norm);
    j["witness"] = nlohmann::ordered_json::parse(chain_to_json(res.witness));
    j["residual"] = nlohmann::ordered_json::parse(chain_to_json(res.residual));
    emit(out_path, j.dump(2) + "\n");
    return 0;
  }

  if (cmd_cert->parsed()) {
    const RuleInfo* rule = find_rule(rule_name);
    if (rule == nullptr)
      throw PreconditionError("unknown rule: " + rule_name);
    if (static_cast<int>(rule_args.size()) != rule->n_ints + rule->n_scalars)
      throw PreconditionError(
          rule_name + " takes " + std::to_string(rule->n_ints) +
          " integer and " + std::to_string(rule->n_scalars) +
          " constant arguments");
    std::vector<long> ints;
    std::vector<XRat> scalars;
    for (int i = 0; i < rule->n_ints; ++i)
      ints.push_back(std::stol(rule_args[i]));
    for (int i = 0; i < rule->n_scalars; ++i) {
      const std::string& a = rule_args[rule->n_ints + i];
      scalars.push_back(a == "inf" ? XRat::infinity()
                                   : XRat(rat_from_string(a)));
    }
    CertifiedConstant c = rule->apply(ints, scalars);
    nlohmann::ordered_json j;
    j["value"] = c.value.str();
    j["derivation"] = constant_to_json(c);
    emit(out_path, j.dump(2) + "\n");
    return 0;
  }

  if (cmd_range->parsed()) {
    nlohmann::ordered_json j;
    j["family"] = range_family;
    j["n"] = sr_n;
    j["q"] = sr_q;
    if (range_family == "gl") {
      j["sr"] = sr_sr;
      GlRange r = stable_range_gl(sr_n, sr_sr, sr_q);
      j["iso"] = r.iso;
      j["inj"] = r.inj;
      j["gamma_tilde"] = r.gamma_tilde;
    } else if (range_family == "aut") {
      AutRange r = stable_range_aut(sr_n, sr_q);
      j["iso"] = r.iso;
      j["inj"] = r.inj;
      j["gamma_tilde"] = r.gamma_tilde;
      j["tau_tilde"] = r.tau_tilde;
    } else {
      throw PreconditionError("unknown stable-range family: " + range_family);
    }
    emit(out_path, j.dump(2) + "\n");
    return 0;
  }

  if (cmd_report->parsed()) {
    if (suite != "desk") throw PreconditionError("unknown suite: " + suite);
    ubcw_cli::Report rep = ubcw_cli::run_desk_suite(seed, time_budget_sec);
    save_file(out_json, ubcw_cli::report_to_json(rep));
    save_file(out_csv, ubcw_cli::report_to_csv(rep));
    int failures = 0;
    for (const ubcw_cli::ReportRow& r : rep.rows)
      if (!r.verdict) ++failures;
    std::cout << "suite=desk seed=" << seed << " rows=" << rep.rows.size()
              << " failures=" << failures << " -> " << out_json << ", "
              << out_csv << "\n";
    return rep.all_verdicts_hold ? 0 : 1;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoFailure& e) {
    std::cerr << "io error: " << e.message << "\n";
    return 3;
  } catch (const ResourceBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
