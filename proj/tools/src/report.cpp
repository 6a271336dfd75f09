// Desk suite: builds the fixed instance matrix and pairs measurements with
// certified constants.
#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "ubcw/builders.hpp"
#include "ubcw/calculus.hpp"
#include "ubcw/errors.hpp"
#include "ubcw/families.hpp"
#include "ubcw/homology.hpp"
#include "ubcw/quadratic.hpp"
#include "ubcw/ubc.hpp"

namespace ubcw_cli {

namespace {

using namespace ubcw;

// One measurement together with the constant certifying it.
struct Paired {
  UbcMeasurement m;
  std::string rule;
  XRat certified;
};

SemiSimplicialSet path_complex(int n) {
  SimplicialComplex c("path" + std::to_string(n));
  for (int i = 0; i <= n; ++i) c.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i)
    c.add_simplex_by_ids({std::to_string(i), std::to_string(i + 1)});
  return c.to_semi_simplicial();
}

SemiSimplicialSet oc_of(const Poset& p) {
  return order_complex(p).to_semi_simplicial();
}

// Both horns of the tetrahedron keep the full 1-skeleton; their overlap
// keeps the two facets away from the removed pair as well.
SemiSimplicialSet horn_overlap() {
  SimplicialComplex c("bD3cap");
  for (int i = 0; i < 4; ++i) c.add_vertex(std::to_string(i));
  c.add_simplex_by_ids({"0", "1", "3"});
  c.add_simplex_by_ids({"0", "1", "2"});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      c.add_simplex_by_ids({std::to_string(i), std::to_string(j)});
  return c.to_semi_simplicial();
}

// Worst constant witnessing that a 2-dimensional complex is bounded
// Cohen-Macaulay of level 2: the complex itself through degree 1 and every
// nonempty vertex link at degree 0.
XRat cm_constant_level2(const SimplicialComplex& s) {
  SemiSimplicialSet x = s.to_semi_simplicial();
  XRat best = ubc_exact(x, 0).value;
  best = xmax(best, ubc_exact(x, 1).value);
  for (int i = 0; i < s.vertex_count(); ++i) {
    SimplicialComplex lk = s.link({s.vertex_id(i)});
    if (lk.vertex_count() > 0)
      best = xmax(best, ubc_exact(lk.to_semi_simplicial(), 0).value);
  }
  return best;
}

ReportRow base_row(const std::string& family, const std::string& params,
                   int degree, const std::string& betti) {
  ReportRow r;
  r.family = family;
  r.params = params;
  r.degree = degree;
  r.betti = betti;
  r.mode = "none";
  r.value = "-";
  r.rule = "none";
  r.certified = "inf";
  r.verdict = true;
  return r;
}

// One row per degree of the profile; degrees with measurements get one row
// per measurement instead of the placeholder.
std::vector<ReportRow> rows_for(const std::string& family,
                                const std::string& params,
                                const HomologyProfile& prof,
                                const std::vector<Paired>& measured) {
  std::vector<ReportRow> rows;
  for (int q = 0; q <= prof.max_degree; ++q) {
    std::string betti = prof.betti[q].get_str();
    bool has_measurement = false;
    for (const Paired& p : measured) {
      if (p.m.q != q) continue;
      has_measurement = true;
      ReportRow r = base_row(family, params, q, betti);
      r.mode = (p.m.mode == UbcMode::exact && !p.m.downgraded) ? "exact"
                                                               : "sampled";
      r.value = p.m.value.str();
      r.seed = p.m.seed;
      r.rule = p.rule;
      r.certified = p.certified.str();
      r.verdict = p.certified.is_infinite() || p.m.value <= p.certified;
      rows.push_back(std::move(r));
    }
    if (!has_measurement) rows.push_back(base_row(family, params, q, betti));
  }
  return rows;
}

std::vector<ReportRow> path_instance(int n) {
  SemiSimplicialSet x = path_complex(n);
  HomologyProfile prof = reduced_betti(x, 1);
  std::vector<Paired> measured;
  measured.push_back({ubc_exact(x, 0), "none", XRat::infinity()});
  return rows_for("path", "n=" + std::to_string(n), prof, measured);
}

std::vector<ReportRow> cone_instance(const std::string& tag,
                                     const SemiSimplicialSet& base) {
  SemiSimplicialSet x = cone(base);
  int d = x.dim();
  HomologyProfile prof = reduced_betti(x, d);
  XRat one = k_cone().value;
  std::vector<Paired> measured;
  for (int q = 0; q <= d; ++q)
    measured.push_back({ubc_exact(x, q), "k_cone", one});
  return rows_for("cone", "base=" + tag, prof, measured);
}

std::vector<ReportRow> sd_instance(const std::string& tag,
                                   const SemiSimplicialSet& base,
                                   std::uint64_t seed, bool with_sampled) {
  SemiSimplicialSet sd = sd_complex(base);
  int d = sd.dim();
  HomologyProfile prof = reduced_betti(sd, d);
  std::vector<Paired> measured;
  for (int q = 0; q <= d && q <= 2; ++q) {
    XRat base_value = ubc_exact(base, q).value;
    XRat certified = k_sd_down(q, base_value).value;
    measured.push_back({ubc_exact(sd, q), "k_sd_down", certified});
    if (with_sampled && q == 1)
      measured.push_back({ubc_sampled(sd, q, 12, seed), "k_sd_down", certified});
  }
  return rows_for("sd", "base=" + tag, prof, measured);
}

std::vector<ReportRow> mv_instance(std::uint64_t seed) {
  SemiSimplicialSet x = boundary_simplex(3).to_semi_simplicial();
  SemiSimplicialSet h0 = horn(3, 0);
  SemiSimplicialSet h1 = horn(3, 1);
  SemiSimplicialSet cap = horn_overlap();
  HomologyProfile prof = reduced_betti(x, 2);
  std::vector<Paired> measured;
  XRat c0 = k_mv(0, ubc_exact(h0, 0).value, ubc_exact(h1, 0).value,
                 XRat(0)).value;
  measured.push_back({ubc_exact(x, 0), "k_mv", c0});
  XRat c1 = k_mv(1, ubc_exact(h0, 1).value, ubc_exact(h1, 1).value,
                 ubc_exact(cap, 0).value).value;
  measured.push_back({ubc_exact(x, 1), "k_mv", c1});
  measured.push_back({ubc_sampled(x, 1, 12, seed), "k_mv", c1});
  return rows_for("mv", "space=bD3", prof, measured);
}

std::vector<ReportRow> tits_a_instance(int n, std::uint64_t seed) {
  SemiSimplicialSet x = oc_of(tits_building_A(2, n));
  HomologyProfile prof = reduced_betti(x, std::max(0, n - 2));
  std::vector<Paired> measured;
  if (n - 3 >= 0) {
    XRat certified = k_tits(n).value;
    for (int q = 0; q <= n - 3; ++q)
      measured.push_back({ubc_exact(x, q), "k_tits", certified});
    measured.push_back({ubc_sampled(x, 0, 12, seed), "k_tits", certified});
  }
  return rows_for("tits-a", "p=2;n=" + std::to_string(n), prof, measured);
}

std::vector<ReportRow> tits_c_instance(int n) {
  SemiSimplicialSet x = oc_of(tits_building_C(2, n));
  HomologyProfile prof = reduced_betti(x, std::max(0, n - 1));
  return rows_for("tits-c", "p=2;n=" + std::to_string(n), prof, {});
}

std::vector<ReportRow> unimodular_instance(long m) {
  UnimodularPosetSpec spec;
  spec.ring = (m == 2 || m == 3) ? ring_field(m) : ring_zmod(m);
  spec.n = 2;
  SemiSimplicialSet x = oc_of(unimodular_poset(spec));
  HomologyProfile prof = reduced_betti(x, 1);
  std::vector<Paired> measured;
  measured.push_back({ubc_exact(x, 0), "k1", k1(2, 1).value});
  return rows_for("unimodular", "m=" + std::to_string(m) + ";n=2", prof,
                  measured);
}

std::vector<ReportRow> ord_instance(const std::string& tag,
                                    const SimplicialComplex& s,
                                    std::uint64_t seed, bool with_sampled) {
  SemiSimplicialSet x = ord_construction(s);
  int d = x.dim();
  HomologyProfile prof = reduced_betti(x, d);
  XRat certified = k_ord(2, cm_constant_level2(s)).value;
  std::vector<Paired> measured;
  for (int q = 0; q <= 1; ++q)
    measured.push_back({ubc_exact(x, q), "k_ord", certified});
  if (with_sampled)
    measured.push_back({ubc_sampled(x, 1, 12, seed), "k_ord", certified});
  return rows_for("ord", "base=" + tag, prof, measured);
}

std::vector<ReportRow> hyperbolic_instance(long p, int genus) {
  FiniteRing r = ring_field(p);
  QuadraticModule m = hyperbolic_module(symplectic_form_parameter(r), r, genus);
  HyperbolicComplexes hc = hyperbolic_split_injection_complex(m);
  SemiSimplicialSet x = hc.s.to_semi_simplicial();
  int cap = std::min(x.dim(), 1);
  HomologyProfile prof = reduced_betti(x, cap);
  std::vector<Paired> measured;
  if (genus == 2)
    measured.push_back({ubc_exact(x, 0), "none", XRat::infinity()});
  return rows_for("hyperbolic",
                  "m=" + std::to_string(p) + ";g=" + std::to_string(genus),
                  prof, measured);
}

}  // namespace

Report run_desk_suite(std::uint64_t seed, double time_budget_sec) {
  using Task = std::function<std::vector<ReportRow>()>;
  std::vector<Task> tasks = {
      [] { return path_instance(2); },
      [] { return path_instance(4); },
      [] { return path_instance(8); },
      [] {
        return cone_instance("bD2",
                             boundary_simplex(2).to_semi_simplicial());
      },
      [] {
        return cone_instance("bD3",
                             boundary_simplex(3).to_semi_simplicial());
      },
      [] { return cone_instance("TA(F2,2)", oc_of(tits_building_A(2, 2))); },
      [seed] {
        return sd_instance("D2", standard_simplex(2).to_semi_simplicial(),
                           seed, false);
      },
      [seed] {
        return sd_instance("bD3", boundary_simplex(3).to_semi_simplicial(),
                           seed, true);
      },
      [seed] { return mv_instance(seed); },
      [seed] { return tits_a_instance(2, seed); },
      [seed] { return tits_a_instance(3, seed); },
      [] { return tits_c_instance(1); },
      [] { return tits_c_instance(2); },
      [] { return unimodular_instance(2); },
      [] { return unimodular_instance(3); },
      [seed] { return ord_instance("D2", standard_simplex(2), seed, true); },
      [seed] { return ord_instance("bD3", boundary_simplex(3), seed, false); },
      [] { return hyperbolic_instance(3, 1); },
      [] { return hyperbolic_instance(2, 2); },
  };

  auto start = std::chrono::steady_clock::now();
  std::vector<std::future<std::vector<ReportRow>>> futures;
  futures.reserve(tasks.size());
  for (Task& t : tasks)
    futures.push_back(std::async(std::launch::async, std::move(t)));

  Report report;
  report.suite = "desk";
  report.seed = seed;
  for (auto& f : futures) {
    std::vector<ReportRow> rows = f.get();
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    if (time_budget_sec > 0) {
      std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      if (elapsed.count() > time_budget_sec)
        throw ResourceBudgetExceeded("desk suite exceeded the time budget");
    }
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const ReportRow& a, const ReportRow& b) {
              return std::tie(a.family, a.params, a.degree, a.mode) <
                     std::tie(b.family, b.params, b.degree, b.mode);
            });
  for (const ReportRow& r : report.rows)
    if (!r.verdict) report.all_verdicts_hold = false;
  return report;
}

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& row : r.rows) {
    nlohmann::ordered_json jr;
    jr["family"] = row.family;
    jr["params"] = row.params;
    jr["degree"] = row.degree;
    jr["betti"] = row.betti;
    jr["mode"] = row.mode;
    jr["value"] = row.value;
    jr["seed"] = row.seed;
    jr["rule"] = row.rule;
    jr["certified"] = row.certified;
    jr["verdict"] = row.verdict;
    j["rows"].push_back(std::move(jr));
  }
  j["all_verdicts_hold"] = r.all_verdicts_hold;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const Report& r) {
  std::ostringstream out;
  out << "family,params,degree,betti,mode,value,seed,rule,certified,verdict\n";
  for (const ReportRow& row : r.rows) {
    out << row.family << "," << row.params << "," << row.degree << ","
        << row.betti << "," << row.mode << "," << row.value << "," << row.seed
        << "," << row.rule << "," << row.certified << ","
        << (row.verdict ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace ubcw_cli
