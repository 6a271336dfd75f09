// Quadratic modules, hyperbolic modules, and hyperbolic split injections.
#include "ubcw/quadratic.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ubcw/rational.hpp"

namespace ubcw {

namespace {

std::string vec_id(const std::vector<long>& v) {
  std::string id;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) id += ',';
    id += std::to_string(v[i]);
  }
  return id;
}

std::string morphism_id(const std::vector<long>& x, const std::vector<long>& y) {
  return vec_id(x) + ";" + vec_id(y);
}

long eps_elem(const FiniteRing& r, long epsilon) {
  return epsilon == 1 ? 1 % r.m : r.m - 1;
}

bool is_subgroup(const FiniteRing& r, const std::vector<long>& lambda) {
  std::set<long> s(lambda.begin(), lambda.end());
  if (s.count(0) == 0) return false;
  for (long a : s)
    for (long b : s)
      if (s.count(r.add(a, b)) == 0) return false;
  return true;
}

// Bareiss determinant; the last pivot is det up to the row-swap sign.
Int det_int(std::vector<std::vector<Int>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign == 1 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

// All form-preserving morphisms H -> M in lex order of (x, y), plus the
// pairwise-orthogonality relation on them.
struct MorphismTable {
  std::vector<std::pair<std::vector<long>, std::vector<long>>> list;
  std::vector<std::vector<bool>> orth;
};

MorphismTable enumerate_morphisms(const QuadraticModule& m, const Budget& budget) {
  ValidationReport rep = m.validate();
  if (!rep.ok()) throw PreconditionError("invalid quadratic module: " + rep.issues.front());

  double space = 1;
  for (int i = 0; i < m.rank; ++i) space *= static_cast<double>(m.ring.m);
  if (space > static_cast<double>(budget.max_search_nodes))
    throw ResourceBudgetExceeded("morphism enumeration exceeds the search budget");

  // Isotropic vectors first; morphism pairs are drawn from them.
  std::vector<std::vector<long>> iso;
  std::vector<long> v(m.rank, 0);
  while (true) {
    if (m.lambda_of(v, v) == 0 && m.mu_vanishes(v)) iso.push_back(v);
    int i = m.rank - 1;
    while (i >= 0 && v[i] == m.ring.m - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  if (static_cast<double>(iso.size()) * static_cast<double>(iso.size()) >
      static_cast<double>(budget.max_search_nodes))
    throw ResourceBudgetExceeded("morphism enumeration exceeds the search budget");

  long eps = eps_elem(m.ring, m.fp.epsilon);
  MorphismTable t;
  for (const auto& x : iso)
    for (const auto& y : iso)
      if (m.lambda_of(x, y) == 1 % m.ring.m && m.lambda_of(y, x) == eps)
        t.list.emplace_back(x, y);

  int n = static_cast<int>(t.list.size());
  t.orth.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto& [xa, ya] = t.list[a];
      const auto& [xb, yb] = t.list[b];
      bool o = m.lambda_of(xa, xb) == 0 && m.lambda_of(xa, yb) == 0 &&
               m.lambda_of(ya, xb) == 0 && m.lambda_of(ya, yb) == 0;
      t.orth[a][b] = t.orth[b][a] = o;
    }
  return t;
}

}  // namespace

FormParameter form_parameter(const FiniteRing& r, long epsilon,
                             std::vector<long> lambda) {
  if (epsilon != 1 && epsilon != -1)
    throw PreconditionError("form parameter sign must be +1 or -1");
  for (long& a : lambda) a = ((a % r.m) + r.m) % r.m;
  std::sort(lambda.begin(), lambda.end());
  lambda.erase(std::unique(lambda.begin(), lambda.end()), lambda.end());
  if (!is_subgroup(r, lambda))
    throw PreconditionError("form parameter Lambda is not a subgroup");
  long eps = eps_elem(r, epsilon);
  std::set<long> s(lambda.begin(), lambda.end());
  for (long a = 0; a < r.m; ++a)
    if (s.count(r.sub(a, r.mul(eps, a))) == 0)
      throw PreconditionError("form parameter Lambda misses a - eps*a");
  for (long l : lambda)
    if (r.add(l, r.mul(eps, l)) != 0)
      throw PreconditionError("form parameter Lambda exceeds the eps-kernel");
  return FormParameter{epsilon, std::move(lambda)};
}

FormParameter symplectic_form_parameter(const FiniteRing& r) {
  std::vector<long> all(static_cast<std::size_t>(r.m));
  for (long a = 0; a < r.m; ++a) all[static_cast<std::size_t>(a)] = a;
  return form_parameter(r, -1, std::move(all));
}

FormParameter minimal_form_parameter(const FiniteRing& r, long epsilon) {
  if (epsilon != 1 && epsilon != -1)
    throw PreconditionError("form parameter sign must be +1 or -1");
  long eps = eps_elem(r, epsilon);
  std::vector<long> lambda;
  for (long a = 0; a < r.m; ++a) lambda.push_back(r.sub(a, r.mul(eps, a)));
  return form_parameter(r, epsilon, std::move(lambda));
}

long QuadraticModule::lambda_of(const std::vector<long>& x,
                                const std::vector<long>& y) const {
  if (static_cast<int>(x.size()) != rank || static_cast<int>(y.size()) != rank)
    throw PreconditionError("vector length does not match the module rank");
  long acc = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    long row = 0;
    for (int j = 0; j < rank; ++j)
      row = ring.add(row, ring.mul(gram[i][j], y[j] % ring.m));
    acc = ring.add(acc, ring.mul(x[i] % ring.m, row));
  }
  return acc;
}

long QuadraticModule::mu_raw(const std::vector<long>& x) const {
  if (static_cast<int>(x.size()) != rank)
    throw PreconditionError("vector length does not match the module rank");
  long acc = 0;
  for (int i = 0; i < rank; ++i) {
    long xi = x[i] % ring.m;
    acc = ring.add(acc, ring.mul(ring.mul(xi, xi), mu_basis[i]));
    for (int j = i + 1; j < rank; ++j)
      acc = ring.add(acc, ring.mul(ring.mul(xi, x[j] % ring.m), gram[i][j]));
  }
  return acc;
}

bool QuadraticModule::in_lambda(long v) const {
  v = ((v % ring.m) + ring.m) % ring.m;
  return std::binary_search(fp.lambda.begin(), fp.lambda.end(), v);
}

bool QuadraticModule::mu_vanishes(const std::vector<long>& x) const {
  return in_lambda(mu_raw(x));
}

bool QuadraticModule::nondegenerate() const {
  std::vector<std::vector<Int>> a(static_cast<std::size_t>(rank),
                                  std::vector<Int>(static_cast<std::size_t>(rank)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) a[i][j] = gram[i][j];
  Int d = det_int(std::move(a));
  Int g;
  Int mm(ring.m);
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), mm.get_mpz_t());
  return g == 1;
}

ValidationReport QuadraticModule::validate() const {
  ValidationReport rep;
  if (rank < 0) rep.issues.push_back("negative rank");
  if (static_cast<int>(gram.size()) != rank ||
      static_cast<int>(mu_basis.size()) != rank) {
    rep.issues.push_back("gram or mu table does not match the rank");
    return rep;
  }
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(gram[i].size()) != rank) {
      rep.issues.push_back("gram row length does not match the rank");
      return rep;
    }
    for (int j = 0; j < rank; ++j)
      if (gram[i][j] < 0 || gram[i][j] >= ring.m)
        rep.issues.push_back("gram entry out of range");
    if (mu_basis[i] < 0 || mu_basis[i] >= ring.m)
      rep.issues.push_back("mu entry out of range");
  }
  long eps = eps_elem(ring, fp.epsilon);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (gram[j][i] != ring.mul(eps, gram[i][j])) {
        rep.issues.push_back("form is not eps-symmetric");
        i = j = rank;
      }
  if (!is_subgroup(ring, fp.lambda))
    rep.issues.push_back("Lambda is not a subgroup");
  std::set<long> s(fp.lambda.begin(), fp.lambda.end());
  for (long a = 0; a < ring.m; ++a)
    if (s.count(ring.sub(a, ring.mul(eps, a))) == 0) {
      rep.issues.push_back("Lambda misses a - eps*a");
      break;
    }
  for (long l : fp.lambda)
    if (ring.add(l, ring.mul(eps, l)) != 0) {
      rep.issues.push_back("Lambda exceeds the eps-kernel");
      break;
    }
  return rep;
}

QuadraticModule hyperbolic_module(const FormParameter& fp, const FiniteRing& r,
                                  int n) {
  if (n < 0) throw PreconditionError("hyperbolic module needs n >= 0");
  QuadraticModule m;
  m.ring = r;
  m.rank = 2 * n;
  m.fp = fp;
  m.gram.assign(static_cast<std::size_t>(m.rank),
                std::vector<long>(static_cast<std::size_t>(m.rank), 0));
  m.mu_basis.assign(static_cast<std::size_t>(m.rank), 0);
  long eps = eps_elem(r, fp.epsilon);
  for (int i = 0; i < n; ++i) {
    m.gram[2 * i][2 * i + 1] = 1 % r.m;
    m.gram[2 * i + 1][2 * i] = eps;
  }
  ValidationReport rep = m.validate();
  if (!rep.ok()) throw PreconditionError("invalid form parameter for the ring: " + rep.issues.front());
  return m;
}

HyperbolicComplexes hyperbolic_split_injection_complex(const QuadraticModule& m,
                                                       const Budget& budget) {
  MorphismTable t = enumerate_morphisms(m, budget);
  int n = static_cast<int>(t.list.size());

  std::string base = m.ring.label() + "^" + std::to_string(m.rank);
  HyperbolicComplexes out;
  out.morphisms = t.list;
  out.outside_theorem_hypotheses = (m.ring.m == 2);

  out.s = SimplicialComplex("S(" + base + ")");
  for (int a = 0; a < n; ++a)
    out.s.add_vertex(morphism_id(t.list[a].first, t.list[a].second));
  for (int a = 0; a < n; ++a) out.s.add_simplex({a});

  // Every clique of the orthogonality graph, grown over later vertices only.
  std::vector<std::vector<int>> cliques;
  std::vector<int> cur;
  std::function<void(const std::vector<int>&)> grow_clique =
      [&](const std::vector<int>& cand) {
        for (std::size_t i = 0; i < cand.size(); ++i) {
          int v = cand[i];
          cur.push_back(v);
          cliques.push_back(cur);
          if (cliques.size() > budget.max_simplices)
            throw ResourceBudgetExceeded("orthogonal cliques exceed the simplex budget");
          std::vector<int> next;
          for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (t.orth[v][cand[j]]) next.push_back(cand[j]);
          grow_clique(next);
          cur.pop_back();
        }
      };
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) all[static_cast<std::size_t>(a)] = a;
  grow_clique(all);
  for (const auto& c : cliques)
    if (c.size() >= 2) out.s.add_simplex(c);

  // Ordered version, built from the morphisms themselves: injective tuples
  // with pairwise-orthogonal entries, the i-th face deleting position i.
  Int tuples = 0;
  for (const auto& c : cliques) tuples += factorial(static_cast<int>(c.size()));
  if (tuples > Int(static_cast<unsigned long>(budget.max_simplices)))
    throw ResourceBudgetExceeded("ordered tuples exceed the simplex budget");

  out.x = SemiSimplicialSet("X(" + base + ")", true);
  std::vector<std::vector<std::vector<int>>> by_deg;
  std::vector<int> tup;
  std::function<void()> grow_tuple = [&]() {
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (int u : tup)
        if (u == v || !t.orth[u][v]) { ok = false; break; }
      if (!ok) continue;
      tup.push_back(v);
      if (by_deg.size() < tup.size()) by_deg.resize(tup.size());
      by_deg[tup.size() - 1].push_back(tup);
      grow_tuple();
      tup.pop_back();
    }
  };
  grow_tuple();
  auto tuple_id = [&](const std::vector<int>& tu) {
    std::string id;
    for (std::size_t i = 0; i < tu.size(); ++i) {
      if (i) id += '|';
      id += out.s.vertex_id(tu[i]);
    }
    return id;
  };
  for (std::size_t k = 0; k < by_deg.size(); ++k)
    for (const auto& tu : by_deg[k]) {
      std::vector<int> faces;
      if (k >= 1) {
        faces.resize(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
          std::vector<int> f(tu);
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
          faces[i] = out.x.index_of(static_cast<int>(k) - 1, tuple_id(f));
        }
      }
      out.x.add_simplex(static_cast<int>(k), tuple_id(tu), faces);
    }
  return out;
}

int witt_index(const QuadraticModule& m, const Budget& budget) {
  MorphismTable t = enumerate_morphisms(m, budget);
  int n = static_cast<int>(t.list.size());
  int best = 0;
  std::size_t nodes = 0;
  std::vector<int> cur;
  std::function<void(const std::vector<int>&)> go = [&](const std::vector<int>& cand) {
    best = std::max(best, static_cast<int>(cur.size()));
    if (cur.size() + cand.size() <= static_cast<std::size_t>(best)) return;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (cur.size() + (cand.size() - i) <= static_cast<std::size_t>(best)) break;
      if (++nodes > budget.max_search_nodes)
        throw ResourceBudgetExceeded("witt index search exceeds the node budget");
      int v = cand[i];
      cur.push_back(v);
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (t.orth[v][cand[j]]) next.push_back(cand[j]);
      go(next);
      cur.pop_back();
    }
  };
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) all[static_cast<std::size_t>(a)] = a;
  go(all);
  return best;
}

ComplementModule orthogonal_complement(const QuadraticModule& m,
                                       const std::vector<long>& x,
                                       const std::vector<long>& y) {
  if (!m.ring.field)
    throw PreconditionError("orthogonal complement requires a prime field");
  long p = m.ring.m;
  ValidationReport rep = m.validate();
  if (!rep.ok()) throw PreconditionError("invalid quadratic module: " + rep.issues.front());

  // Constraints lambda(z, x) = lambda(x, z) = lambda(z, y) = lambda(y, z) = 0
  // as linear functionals of z: rows G*x, G^T*x, G*y, G^T*y.
  auto functional = [&](const std::vector<long>& v, bool transpose) {
    std::vector<long> row(static_cast<std::size_t>(m.rank), 0);
    for (int i = 0; i < m.rank; ++i)
      for (int j = 0; j < m.rank; ++j) {
        long g = transpose ? m.gram[j][i] : m.gram[i][j];
        row[i] = m.ring.add(row[i], m.ring.mul(g, v[j] % p));
      }
    return row;
  };
  std::vector<std::vector<long>> rows = {functional(x, false), functional(x, true),
                                         functional(y, false), functional(y, true)};

  // Row reduce over F_p and read the kernel off the free columns.
  auto inv = [&](long a) {
    long r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int nr = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int rrow = 0;
  for (int c = 0; c < m.rank && rrow < nr; ++c) {
    int pr = -1;
    for (int i = rrow; i < nr; ++i)
      if (rows[i][c] % p != 0) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(rows[rrow], rows[pr]);
    long s = inv(rows[rrow][c]);
    for (int j = 0; j < m.rank; ++j) rows[rrow][j] = rows[rrow][j] * s % p;
    for (int i = 0; i < nr; ++i) {
      if (i == rrow || rows[i][c] % p == 0) continue;
      long f = rows[i][c];
      for (int j = 0; j < m.rank; ++j)
        rows[i][j] = m.ring.sub(rows[i][j], m.ring.mul(f, rows[rrow][j]));
    }
    pivot_col.push_back(c);
    ++rrow;
  }
  std::vector<std::vector<long>> basis;
  for (int c = 0; c < m.rank; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end())
      continue;
    std::vector<long> v(static_cast<std::size_t>(m.rank), 0);
    v[static_cast<std::size_t>(c)] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[static_cast<std::size_t>(pivot_col[i])] = m.ring.neg(rows[i][c]);
    basis.push_back(std::move(v));
  }

  ComplementModule out;
  out.basis = basis;
  out.module.ring = m.ring;
  out.module.fp = m.fp;
  out.module.rank = static_cast<int>(basis.size());
  out.module.gram.assign(basis.size(), std::vector<long>(basis.size(), 0));
  out.module.mu_basis.assign(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.module.mu_basis[i] = m.mu_raw(basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j)
      out.module.gram[i][j] = m.lambda_of(basis[i], basis[j]);
  }
  return out;
}

}  // namespace ubcw
