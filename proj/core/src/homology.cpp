// Rank computations: unit-pivot sparse elimination with a dense exact residual.
#include "ubcw/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

namespace ubcw {

namespace {

// Fraction-free (Bareiss) elimination; returns the rank and destroys a.
int bareiss_rank(std::vector<std::vector<Int>>& a) {
  int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(a[0].size());
  Int prev = 1;
  int rank = 0;
  for (int k = 0; k < rows && k < cols; ++k) {
    int pi = -1, pj = -1;
    for (int i = k; i < rows && pi < 0; ++i)
      for (int j = k; j < cols; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    std::swap(a[k], a[pi]);
    if (pj != k)
      for (int i = 0; i < rows; ++i) std::swap(a[i][k], a[i][pj]);
    for (int i = k + 1; i < rows; ++i)
      for (int j = k + 1; j < cols; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
    ++rank;
  }
  return rank;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

}  // namespace

bool HomologyProfile::acyclic_through(int n) const {
  if (n > max_degree)
    throw PreconditionError("acyclic_through(" + std::to_string(n) +
                            ") asked beyond profile degree " +
                            std::to_string(max_degree));
  if (!nonempty) return false;
  for (int q = 0; q <= n; ++q)
    if (betti[q] != 0) return false;
  return true;
}

Int matrix_rank(const SparseIntMat& m, const Budget& budget) {
  int ncols = m.cols;
  std::vector<std::map<int, Int>> col(ncols);
  std::vector<std::set<int>> row_cols(m.rows);
  for (int c = 0; c < ncols; ++c)
    for (const auto& [r, v] : m.col[c]) {
      if (v == 0) continue;
      col[c][r] = v;
      row_cols[r].insert(c);
    }

  std::vector<char> alive(ncols, 1);
  using Entry = std::pair<std::size_t, int>;  // (column size, column)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  std::set<int> deferred;  // alive columns without a unit entry
  auto push_col = [&](int c) {
    if (alive[c] && !col[c].empty()) heap.emplace(col[c].size(), c);
  };
  for (int c = 0; c < ncols; ++c) push_col(c);

  Int rank = 0;
  auto kill_column = [&](int c) {
    for (const auto& [r, v] : col[c]) row_cols[r].erase(c);
    col[c].clear();
    alive[c] = 0;
  };

  while (!heap.empty()) {
    auto [sz, pc] = heap.top();
    heap.pop();
    if (!alive[pc]) continue;
    if (col[pc].empty()) {
      alive[pc] = 0;
      continue;
    }
    if (sz != col[pc].size()) continue;  // stale heap entry

    // Unit pivot with the sparsest row; defer columns without one.
    int pr = -1;
    std::size_t best_row_deg = 0;
    Int s = 0;
    for (const auto& [r, v] : col[pc])
      if (v == 1 || v == -1) {
        std::size_t deg = row_cols[r].size();
        if (pr < 0 || deg < best_row_deg) {
          pr = r;
          best_row_deg = deg;
          s = v;
        }
      }
    if (pr < 0) {
      deferred.insert(pc);
      continue;
    }
    deferred.erase(pc);
    rank += 1;

    std::vector<int> affected(row_cols[pr].begin(), row_cols[pr].end());
    for (int c : affected) {
      if (c == pc) continue;
      Int factor = col[c][pr] * s;
      for (const auto& [r, v] : col[pc]) {
        auto it = col[c].find(r);
        Int nv = (it != col[c].end() ? it->second : Int(0)) - factor * v;
        if (nv == 0) {
          if (it != col[c].end()) {
            col[c].erase(it);
            row_cols[r].erase(c);
          }
        } else {
          if (it == col[c].end()) row_cols[r].insert(c);
          col[c][r] = nv;
        }
      }
      deferred.erase(c);
      push_col(c);
    }
    kill_column(pc);
  }

  // Dense exact elimination on whatever the unit-pivot phase left behind.
  std::vector<int> res_cols(deferred.begin(), deferred.end());
  if (res_cols.empty()) return rank;
  std::map<int, int> res_row_index;
  for (int c : res_cols)
    for (const auto& [r, v] : col[c]) res_row_index.emplace(r, 0);
  int nr = 0;
  for (auto& [r, idx] : res_row_index) idx = nr++;
  std::size_t cells = static_cast<std::size_t>(nr) * res_cols.size();
  if (cells > budget.max_dense_cells) {
    std::ostringstream msg;
    msg << "rank residual " << nr << "x" << res_cols.size()
        << " exceeds max_dense_cells " << budget.max_dense_cells;
    throw ResourceBudgetExceeded(msg.str());
  }
  std::vector<std::vector<Int>> dense(nr, std::vector<Int>(res_cols.size(), 0));
  for (std::size_t j = 0; j < res_cols.size(); ++j)
    for (const auto& [r, v] : col[res_cols[j]])
      dense[res_row_index[r]][j] = v;
  rank += bareiss_rank(dense);
  return rank;
}

Int boundary_rank(const SemiSimplicialSet& x, int q, const Budget& budget) {
  if (q < 0)
    throw PreconditionError("boundary_rank needs q >= 0, got " +
                            std::to_string(q));
  if (x.count(q) == 0) return 0;
  if (q == 0) return 1;  // augmentation of a nonempty complex
  if (q == 1) {
    UnionFind uf(x.count(0));
    for (int e = 0; e < x.count(1); ++e) uf.unite(x.face(1, e, 0), x.face(1, e, 1));
    std::set<int> comps;
    for (int v = 0; v < x.count(0); ++v) comps.insert(uf.find(v));
    return Int(x.count(0)) - Int(comps.size());
  }
  return matrix_rank(x.boundary_matrix(q), budget);
}

HomologyProfile reduced_betti(const SemiSimplicialSet& x, int max_q,
                              const Budget& budget) {
  if (max_q < -1)
    throw PreconditionError("reduced_betti needs max_q >= -1, got " +
                            std::to_string(max_q));
  HomologyProfile p;
  p.name = x.name();
  p.max_degree = max_q;
  p.nonempty = x.count(0) > 0;
  if (max_q < 0) return p;
  std::vector<Int> rk(max_q + 2, 0);
  for (int q = 0; q <= max_q + 1; ++q)
    rk[q] = q <= x.dim() ? boundary_rank(x, q, budget) : Int(0);
  p.betti.resize(max_q + 1);
  for (int q = 0; q <= max_q; ++q)
    p.betti[q] = Int(x.count(q)) - rk[q] - rk[q + 1];
  return p;
}

HomologyProfile relative_betti(const PairComplex& p, int max_q,
                               const Budget& budget) {
  if (max_q < -1)
    throw PreconditionError("relative_betti needs max_q >= -1, got " +
                            std::to_string(max_q));
  const SemiSimplicialSet& x = p.total();
  bool sub_empty = true;
  for (int q = 0; q <= x.dim(); ++q)
    if (p.sub_count(q) > 0) sub_empty = false;
  if (sub_empty) {
    HomologyProfile out = reduced_betti(x, max_q, budget);
    out.name = x.name() + "|rel";
    return out;
  }

  HomologyProfile out;
  out.name = x.name() + "|rel";
  out.max_degree = max_q;
  for (int q = 0; q <= x.dim(); ++q)
    if (x.count(q) - p.sub_count(q) > 0) out.nonempty = true;
  if (max_q < 0) return out;

  // Quotient boundary matrices: rows and columns off the subcomplex.
  auto quotient_rank = [&](int q) -> Int {
    if (q < 1 || q > x.dim()) return 0;  // no augmentation in a quotient
    std::vector<int> col_of(x.count(q), -1), row_of(x.count(q - 1), -1);
    int nc = 0, nr = 0;
    for (int s = 0; s < x.count(q); ++s)
      if (!p.in_sub(q, s)) col_of[s] = nc++;
    for (int s = 0; s < x.count(q - 1); ++s)
      if (!p.in_sub(q - 1, s)) row_of[s] = nr++;
    SparseIntMat m(nr, nc);
    for (int s = 0; s < x.count(q); ++s) {
      if (col_of[s] < 0) continue;
      Int sign = 1;
      for (int i = 0; i <= q; ++i) {
        int f = x.face(q, s, i);
        if (row_of[f] >= 0) m.col[col_of[s]].emplace_back(row_of[f], sign);
        sign = -sign;
      }
      normalize_column(m.col[col_of[s]]);
    }
    return matrix_rank(m, budget);
  };

  std::vector<Int> rk(max_q + 2, 0);
  for (int q = 0; q <= max_q + 1; ++q) rk[q] = quotient_rank(q);
  out.betti.resize(max_q + 1);
  for (int q = 0; q <= max_q; ++q) {
    Int off = q <= x.dim() ? Int(x.count(q) - p.sub_count(q)) : Int(0);
    out.betti[q] = off - rk[q] - rk[q + 1];
  }
  return out;
}

bool is_n_acyclic(const SemiSimplicialSet& x, int n, const Budget& budget) {
  return reduced_betti(x, n, budget).acyclic_through(n);
}

Int euler_characteristic(const SemiSimplicialSet& x) {
  Int chi = 0;
  for (int q = 0; q <= x.dim(); ++q)
    chi += (q % 2 == 0 ? 1 : -1) * Int(x.count(q));
  return chi;
}

}  // namespace ubcw
