// Minimal fillings by exact LP; UBC constants by circuit enumeration.
#include "ubcw/ubc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ubcw/homology.hpp"
#include "ubcw/lp.hpp"

namespace ubcw {

namespace {

constexpr std::uint64_t kDowngradeSeed = 0x5eedba5eULL;
constexpr std::size_t kDowngradeSamples = 12;

void validate_chain_ids(const SemiSimplicialSet& x, int q, const Chain& sigma) {
  if (sigma.q != q)
    throw PreconditionError("chain degree " + std::to_string(sigma.q) +
                            " does not match requested degree " +
                            std::to_string(q));
  for (const auto& [id, c] : sigma.coeffs)
    if (!x.has(q, id))
      throw PreconditionError("chain mentions unknown " + std::to_string(q) +
                              "-simplex '" + id + "'");
}

// LP columns for rho = u - v: [B | -B], restricted to the kept rows.
std::vector<std::vector<Rat>> split_lp_rows(const SparseIntMat& b,
                                            const std::vector<int>& row_of,
                                            int nrows) {
  std::vector<std::vector<Rat>> a(nrows,
                                  std::vector<Rat>(2 * b.cols, Rat(0)));
  for (int c = 0; c < b.cols; ++c)
    for (const auto& [r, v] : b.col[c]) {
      int rr = row_of.empty() ? r : row_of[r];
      if (rr < 0) continue;
      a[rr][c] = Rat(v);
      a[rr][b.cols + c] = -Rat(v);
    }
  return a;
}

FillResult fill_from_lp(const SemiSimplicialSet& x, int q, const LpResult& lp) {
  FillResult out;
  out.witness.q = q + 1;
  int m = x.count(q + 1);
  for (int i = 0; i < m; ++i) {
    Rat coeff = lp.x[i] - lp.x[m + i];
    if (coeff != 0) out.witness.set(x.id_of(q + 1, i), coeff);
  }
  out.fill_norm = lp.objective;
  out.residual.q = q;
  return out;
}

// A support-minimal member of im d_{q+1}, recorded by simplex index.
struct RawCircuit {
  std::vector<std::pair<int, Rat>> entries;
};

Rat circuit_norm(const RawCircuit& c) {
  Rat n(0);
  for (const auto& [i, v] : c.entries) n += rat_abs(v);
  return n;
}

Chain circuit_chain(const SemiSimplicialSet& x, int q, const RawCircuit& c) {
  Chain out;
  out.q = q;
  for (const auto& [i, v] : c.entries) out.set(x.id_of(q, i), v);
  return out;
}

// Scale to a primitive integer vector with positive leading entry.
void make_primitive(RawCircuit& c) {
  Int l(1);
  for (const auto& [i, v] : c.entries)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  Int g(0);
  for (const auto& [i, v] : c.entries) {
    Int scaled = v.get_num() * (l / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  if (g == 0) return;
  Rat s = make_rat(l, g);
  if (c.entries.front().second < 0) s = -s;
  for (auto& [i, v] : c.entries) v = v * s;
}

// Degree 0: the circuits of im d_1 are same-component vertex differences,
// and a minimal filling of w - v is a shortest edge path.
UbcMeasurement ubc_q0(const SemiSimplicialSet& x, const Budget& budget) {
  UbcMeasurement m;
  m.q = 0;
  m.mode = UbcMode::exact;
  m.value = XRat(Rat(0));
  m.attaining_cycle.q = 0;
  int nv = x.count(0), ne = x.count(1);
  std::size_t work = static_cast<std::size_t>(nv) * (nv + 2 * ne);
  if (work > budget.max_search_nodes) {
    UbcMeasurement s =
        ubc_sampled(x, 0, kDowngradeSamples, kDowngradeSeed, budget);
    s.downgraded = true;
    return s;
  }
  std::vector<std::vector<int>> adj(nv);
  for (int e = 0; e < ne; ++e) {
    int a = x.face(1, e, 0), b = x.face(1, e, 1);
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int best_d = 0, best_v = -1, best_w = -1;
  std::size_t pairs = 0;
  std::vector<int> dist(nv);
  for (int v = 0; v < nv; ++v) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[v] = 0;
    std::queue<int> bfs;
    bfs.push(v);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          bfs.push(w);
        }
    }
    for (int w = v + 1; w < nv; ++w)
      if (dist[w] > 0) {
        ++pairs;
        if (dist[w] > best_d) {
          best_d = dist[w];
          best_v = v;
          best_w = w;
        }
      }
  }
  m.circuits_enumerated = pairs;
  if (best_d > 0) {
    m.value = XRat(make_rat(best_d, 2));
    m.attaining_cycle.set(x.id_of(0, best_w), Rat(1));
    m.attaining_cycle.set(x.id_of(0, best_v), Rat(-1));
  }
  return m;
}

// Degree 1 with vanishing first homology: im d_2 is the cycle space of the
// 1-skeleton multigraph, whose circuits are the simple cycles.  Sign of an
// edge traversed u -> w is +1 when (d1, d0) = (u, w).
bool enumerate_graph_cycles(const SemiSimplicialSet& x, const Budget& budget,
                            std::vector<RawCircuit>& out) {
  int nv = x.count(0), ne = x.count(1);
  auto over = [&]() { return out.size() > budget.max_circuits; };
  for (int e = 0; e < ne; ++e)
    if (x.face(1, e, 0) == x.face(1, e, 1)) {
      out.push_back({{{e, Rat(1)}}});
      if (over()) return false;
    }
  std::map<std::pair<int, int>, std::vector<int>> parallel;
  for (int e = 0; e < ne; ++e) {
    int a = x.face(1, e, 0), b = x.face(1, e, 1);
    if (a != b) parallel[{std::min(a, b), std::max(a, b)}].push_back(e);
  }
  for (const auto& [ends, group] : parallel)
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        int e = group[i], f = group[j];
        bool same_dir = x.face(1, e, 0) == x.face(1, f, 0);
        out.push_back({{{e, Rat(1)}, {f, Rat(same_dir ? -1 : 1)}}});
        if (over()) return false;
      }

  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (edge, other end)
  for (int e = 0; e < ne; ++e) {
    int a = x.face(1, e, 0), b = x.face(1, e, 1);
    if (a == b) continue;
    adj[a].emplace_back(e, b);
    adj[b].emplace_back(e, a);
  }
  auto sign_of = [&](int e, int from, int to) {
    return x.face(1, e, 1) == from && x.face(1, e, 0) == to ? 1 : -1;
  };
  std::vector<char> in_path(nv, 0);
  std::vector<int> path;
  std::vector<std::pair<int, int>> pedges;  // (edge, traversal sign)
  std::size_t nodes = 0;
  bool ok = true;
  std::function<void(int, int)> dfs = [&](int s, int u) {
    if (!ok) return;
    for (const auto& [e, w] : adj[u]) {
      if (++nodes > budget.max_search_nodes) {
        ok = false;
        return;
      }
      if (w == s) {
        // close only the canonical direction of a >= 3-vertex cycle
        if (path.size() >= 3 && path[1] < u) {
          RawCircuit c;
          for (const auto& [pe, ps] : pedges) c.entries.push_back({pe, Rat(ps)});
          c.entries.push_back({e, Rat(sign_of(e, u, s))});
          std::sort(c.entries.begin(), c.entries.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          out.push_back(std::move(c));
          if (over()) {
            ok = false;
            return;
          }
        }
      } else if (w > s && !in_path[w]) {
        in_path[w] = 1;
        path.push_back(w);
        pedges.emplace_back(e, sign_of(e, u, w));
        dfs(s, w);
        pedges.pop_back();
        path.pop_back();
        in_path[w] = 0;
      }
      if (!ok) return;
    }
  };
  for (int s = 0; s < nv && ok; ++s) {
    in_path[s] = 1;
    path.assign(1, s);
    dfs(s, s);
    in_path[s] = 0;
  }
  return ok;
}

// Rows spanning the left null space of b, i.e. ker(transpose(b)).
std::vector<std::vector<Rat>> left_null_basis(const SparseIntMat& b) {
  int rows = b.cols, cols = b.rows;  // transpose dimensions
  std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(cols, Rat(0)));
  for (int c = 0; c < b.cols; ++c)
    for (const auto& [r, v] : b.col[c]) t[c][r] = Rat(v);
  std::vector<int> pivot_col;
  int r = 0;
  for (int j = 0; j < cols && r < rows; ++j) {
    int pi = -1;
    for (int i = r; i < rows; ++i)
      if (t[i][j] != 0) {
        pi = i;
        break;
      }
    if (pi < 0) continue;
    std::swap(t[r], t[pi]);
    Rat inv = t[r][j];
    for (int k = 0; k < cols; ++k) t[r][k] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || t[i][j] == 0) continue;
      Rat f = t[i][j];
      for (int k = 0; k < cols; ++k) t[i][k] -= f * t[r][k];
    }
    pivot_col.push_back(j);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int j : pivot_col) is_pivot[j] = 1;
  std::vector<std::vector<Rat>> basis;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[j] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[pivot_col[i]] = -t[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Circuits of the column matroid of a (columns indexed by q-simplices):
// depth-first over independent prefix sets; a closing column j yields the
// circuit C = S + {j} exactly when the dependency has full support on S.
bool enumerate_matroid_circuits(const std::vector<std::vector<Rat>>& acol,
                                const Budget& budget,
                                std::vector<RawCircuit>& out) {
  int n = static_cast<int>(acol.size());
  int mrows = n > 0 ? static_cast<int>(acol[0].size()) : 0;
  struct Ech {
    std::vector<Rat> r;     // reduced column
    std::vector<Rat> comb;  // r = sum comb[i] * a[chosen[i]]
    int pivot;
  };
  std::vector<Ech> ech;
  std::vector<int> chosen;
  std::size_t nodes = 0;
  bool ok = true;
  std::function<void(int)> dfs = [&](int start) {
    for (int j = start; j < n && ok; ++j) {
      if (++nodes > budget.max_search_nodes) {
        ok = false;
        return;
      }
      std::vector<Rat> r = acol[j];
      std::vector<Rat> comb(chosen.size(), Rat(0));
      for (const Ech& e : ech) {
        const Rat& pv = r[e.pivot];
        if (pv == 0) continue;
        Rat alpha = pv / e.r[e.pivot];
        for (int t = 0; t < mrows; ++t)
          if (e.r[t] != 0) r[t] -= alpha * e.r[t];
        for (std::size_t t = 0; t < e.comb.size(); ++t)
          comb[t] -= alpha * e.comb[t];
      }
      int piv = -1;
      for (int t = 0; t < mrows; ++t)
        if (r[t] != 0) {
          piv = t;
          break;
        }
      if (piv < 0) {
        bool full = true;
        for (const Rat& v : comb)
          if (v == 0) {
            full = false;
            break;
          }
        if (full) {
          RawCircuit c;
          for (std::size_t i = 0; i < chosen.size(); ++i)
            c.entries.push_back({chosen[i], comb[i]});
          c.entries.push_back({j, Rat(1)});
          make_primitive(c);
          out.push_back(std::move(c));
          if (out.size() > budget.max_circuits) {
            ok = false;
            return;
          }
        }
      } else {
        chosen.push_back(j);
        comb.push_back(Rat(1));
        ech.push_back(Ech{std::move(r), std::move(comb), piv});
        dfs(j + 1);
        ech.pop_back();
        chosen.pop_back();
      }
    }
  };
  dfs(0);
  return ok;
}

// Particular-solution operator from a column echelon of b: preimage_norm(c)
// is the l1 norm of one preimage, an upper bound for the minimal filling.
class FillBound {
 public:
  explicit FillBound(const SparseIntMat& b) : nrows_(b.rows) {
    for (int c = 0; c < b.cols; ++c) {
      std::vector<Rat> r(nrows_, Rat(0));
      for (const auto& [row, v] : b.col[c]) r[row] = Rat(v);
      std::map<int, Rat> t{{c, Rat(1)}};
      reduce(r, t);
      int piv = first_nonzero(r);
      if (piv >= 0) cols_.push_back(Col{std::move(r), std::move(t), piv});
    }
  }

  Rat preimage_norm(const std::vector<Rat>& c) const {
    std::vector<Rat> r = c;
    std::map<int, Rat> t;
    for (const Col& col : cols_) {
      const Rat& pv = r[col.pivot];
      if (pv == 0) continue;
      Rat alpha = pv / col.r[col.pivot];
      for (int i = 0; i < nrows_; ++i)
        if (col.r[i] != 0) r[i] -= alpha * col.r[i];
      for (const auto& [k, v] : col.t) {
        Rat nv = (t.count(k) ? t[k] : Rat(0)) + alpha * v;
        if (nv == 0)
          t.erase(k);
        else
          t[k] = nv;
      }
    }
    if (first_nonzero(r) >= 0)
      throw PreconditionError("vector is not in the boundary image");
    Rat norm(0);
    for (const auto& [k, v] : t) norm += rat_abs(v);
    return norm;
  }

 private:
  struct Col {
    std::vector<Rat> r;
    std::map<int, Rat> t;  // r = b * t
    int pivot;
  };

  static int first_nonzero(const std::vector<Rat>& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0) return static_cast<int>(i);
    return -1;
  }

  void reduce(std::vector<Rat>& r, std::map<int, Rat>& t) const {
    for (const Col& col : cols_) {
      const Rat& pv = r[col.pivot];
      if (pv == 0) continue;
      Rat alpha = pv / col.r[col.pivot];
      for (int i = 0; i < nrows_; ++i)
        if (col.r[i] != 0) r[i] -= alpha * col.r[i];
      for (const auto& [k, v] : col.t) {
        Rat nv = (t.count(k) ? t[k] : Rat(0)) - alpha * v;
        if (nv == 0)
          t.erase(k);
        else
          t[k] = nv;
      }
    }
  }

  int nrows_;
  std::vector<Col> cols_;
};

}  // namespace

FillResult min_fill(const SemiSimplicialSet& x, int q, const Chain& sigma) {
  if (q < 0)
    throw PreconditionError("fill degree must be >= 0, got " +
                            std::to_string(q));
  validate_chain_ids(x, q, sigma);
  int m = x.count(q + 1);
  if (m == 0) {
    if (!sigma.is_zero())
      throw NotABoundary("no (" + std::to_string(q + 1) +
                         ")-simplices are available to fill with");
    FillResult out;
    out.witness.q = q + 1;
    out.fill_norm = 0;
    out.residual.q = q;
    return out;
  }
  SparseIntMat b = x.boundary_matrix(q + 1);
  std::vector<std::vector<Rat>> a = split_lp_rows(b, {}, b.rows);
  std::vector<Rat> rhs = to_dense(sigma, x);
  std::vector<Rat> cost(2 * m, Rat(1));
  LpResult lp = solve_lp_min(a, rhs, cost);
  if (!lp.feasible)
    throw NotABoundary("chain is not in the image of the degree-" +
                       std::to_string(q + 1) + " boundary");
  return fill_from_lp(x, q, lp);
}

FillResult relative_min_fill(const PairComplex& p, int q, const Chain& sigma) {
  const SemiSimplicialSet& x = p.total();
  if (q < 0)
    throw PreconditionError("fill degree must be >= 0, got " +
                            std::to_string(q));
  validate_chain_ids(x, q, sigma);
  if (q >= 1) {
    Chain bd = boundary(sigma, x);
    for (const auto& [id, c] : bd.coeffs)
      if (!p.in_sub(q - 1, id))
        throw PreconditionError("boundary of the chain leaves the subcomplex at '" +
                                id + "'");
  }
  std::vector<int> row_of(x.count(q), -1);
  int nrows = 0;
  for (int s = 0; s < x.count(q); ++s)
    if (!p.in_sub(q, s)) row_of[s] = nrows++;
  std::vector<Rat> rhs(nrows, Rat(0));
  for (const auto& [id, c] : sigma.coeffs) {
    int s = x.index_of(q, id);
    if (row_of[s] >= 0) rhs[row_of[s]] = c;
  }
  int m = x.count(q + 1);
  if (m == 0) {
    for (const Rat& v : rhs)
      if (v != 0)
        throw NotABoundary("no (" + std::to_string(q + 1) +
                           ")-simplices are available to fill with");
    FillResult out;
    out.witness.q = q + 1;
    out.fill_norm = 0;
    out.residual.q = q;
    out.residual -= sigma;
    return out;
  }
  SparseIntMat b = x.boundary_matrix(q + 1);
  std::vector<std::vector<Rat>> a = split_lp_rows(b, row_of, nrows);
  std::vector<Rat> cost(2 * m, Rat(1));
  LpResult lp = solve_lp_min(a, rhs, cost);
  if (!lp.feasible)
    throw NotABoundary("chain is not a boundary modulo the subcomplex");
  FillResult out = fill_from_lp(x, q, lp);
  out.residual = boundary(out.witness, x) - sigma;
  return out;
}

UbcMeasurement ubc_exact(const SemiSimplicialSet& x, int q,
                         const Budget& budget) {
  if (q < 0)
    throw PreconditionError("ubc degree must be >= 0, got " +
                            std::to_string(q));
  UbcMeasurement m;
  m.q = q;
  m.mode = UbcMode::exact;
  m.value = XRat(Rat(0));
  m.attaining_cycle.q = q;
  if (x.count(q + 1) == 0) return m;  // zero boundary image convention
  if (q == 0) return ubc_q0(x, budget);

  std::vector<RawCircuit> circuits;
  bool complete = false;
  try {
    bool graph_mode = false;
    if (q == 1) {
      HomologyProfile h = reduced_betti(x, 1, budget);
      graph_mode = h.betti[1] == 0;
    }
    if (graph_mode) {
      complete = enumerate_graph_cycles(x, budget, circuits);
    } else {
      std::size_t cells =
          static_cast<std::size_t>(x.count(q)) * x.count(q + 1);
      if (cells > budget.max_dense_cells)
        throw ResourceBudgetExceeded("null-space basis would need " +
                                     std::to_string(cells) + " dense cells");
      std::vector<std::vector<Rat>> rows = left_null_basis(x.boundary_matrix(q + 1));
      std::vector<std::vector<Rat>> acol(
          x.count(q), std::vector<Rat>(rows.size(), Rat(0)));
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < x.count(q); ++j) acol[j][i] = rows[i][j];
      complete = enumerate_matroid_circuits(acol, budget, circuits);
    }
  } catch (const ResourceBudgetExceeded&) {
    complete = false;
  }
  if (!complete) {
    UbcMeasurement s = ubc_sampled(x, q, kDowngradeSamples,
                                   kDowngradeSeed + static_cast<std::uint64_t>(q),
                                   budget);
    s.downgraded = true;
    s.circuits_enumerated = circuits.size();
    return s;
  }
  m.circuits_enumerated = circuits.size();
  if (circuits.empty()) return m;

  // Particular-solution norms bound each ratio from above; run the exact
  // LPs in decreasing bound order and stop once no bound can win.
  FillBound fb(x.boundary_matrix(q + 1));
  std::vector<Rat> bound(circuits.size());
  std::vector<Rat> norms(circuits.size());
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    std::vector<Rat> dense(x.count(q), Rat(0));
    for (const auto& [idx, v] : circuits[i].entries) dense[idx] = v;
    norms[i] = circuit_norm(circuits[i]);
    bound[i] = fb.preimage_norm(dense) / norms[i];
  }
  std::vector<std::size_t> order(circuits.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return bound[b] < bound[a]; });
  Rat best(-1);
  for (std::size_t idx : order) {
    if (best >= 0 && bound[idx] <= best) break;
    Chain c = circuit_chain(x, q, circuits[idx]);
    FillResult f = min_fill(x, q, c);
    Rat ratio = f.fill_norm / norms[idx];
    if (ratio > best) {
      best = ratio;
      m.attaining_cycle = c;
    }
  }
  m.value = XRat(best);
  return m;
}

UbcMeasurement ubc_sampled(const SemiSimplicialSet& x, int q,
                           std::size_t samples, std::uint64_t seed,
                           const Budget& budget) {
  (void)budget;
  if (q < 0)
    throw PreconditionError("ubc degree must be >= 0, got " +
                            std::to_string(q));
  if (samples < 1) throw PreconditionError("ubc_sampled needs samples >= 1");
  UbcMeasurement m;
  m.q = q;
  m.mode = UbcMode::sampled;
  m.seed = seed;
  m.sample_count = samples;
  m.value = XRat(Rat(0));
  m.attaining_cycle.q = q;
  int ntop = x.count(q + 1);
  if (ntop == 0) return m;
  std::mt19937_64 rng(seed);
  bool have = false;
  Rat best(0);
  for (std::size_t s = 0; s < samples; ++s) {
    std::uint64_t span = static_cast<std::uint64_t>(std::min(ntop, 8));
    std::size_t k = static_cast<std::size_t>(1 + rng() % span);
    std::set<int> picked;
    while (picked.size() < k)
      picked.insert(static_cast<int>(rng() % static_cast<std::uint64_t>(ntop)));
    Chain tau;
    tau.q = q + 1;
    for (int t : picked) {
      long a = static_cast<long>(rng() % 7) - 3;
      if (a != 0) tau.set(x.id_of(q + 1, t), Rat(a));
    }
    if (tau.is_zero()) continue;
    Chain sigma = boundary(tau, x);
    if (sigma.is_zero()) continue;
    FillResult f = min_fill(x, q, sigma);
    Rat ratio = f.fill_norm / sigma.norm();
    if (!have || ratio > best) {
      have = true;
      best = ratio;
      m.attaining_cycle = sigma;
    }
  }
  if (have) m.value = XRat(best);
  return m;
}

bool check_uniform_acyclicity(const SemiSimplicialSet& x, int n, const Rat& k,
                              const Budget& budget) {
  if (!is_n_acyclic(x, n, budget)) return false;
  for (int q = 0; q <= n; ++q) {
    UbcMeasurement m = ubc_exact(x, q, budget);
    if (m.downgraded)
      throw ResourceBudgetExceeded(
          "exact " + std::to_string(q) +
          "-UBC measurement was downgraded; cannot certify uniformity");
    if (XRat(k) < m.value) return false;
  }
  return true;
}

Rat transport_ubc(const HomotopyCertificate& cert, int q, const Rat& k_other) {
  if (q < 0 || q > cert.max_degree())
    throw PreconditionError("transport degree " + std::to_string(q) +
                            " outside certificate range 0.." +
                            std::to_string(cert.max_degree()));
  ValidationReport rep = cert.verify();
  if (!rep.ok())
    throw PreconditionError("unverified certificate: " + rep.issues.front());
  return cert.hc_norm[q] + cert.g_norm[q] * k_other * cert.f_norm[q];
}

}  // namespace ubcw
