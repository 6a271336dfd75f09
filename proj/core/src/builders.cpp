#include "ubcw/builders.hpp"

#include <algorithm>
#include <functional>

namespace ubcw {

SimplicialComplex standard_simplex(int n) {
  if (n < 0) throw PreconditionError("standard_simplex: n < 0");
  SimplicialComplex X("D" + std::to_string(n));
  std::vector<std::string> all;
  for (int i = 0; i <= n; ++i) all.push_back(std::to_string(i));
  X.add_simplex_by_ids(all);
  return X;
}

SimplicialComplex boundary_simplex(int n) {
  if (n < 0) throw PreconditionError("boundary_simplex: n < 0");
  SimplicialComplex X("bD" + std::to_string(n));
  for (int i = 0; i <= n; ++i) X.add_vertex(std::to_string(i));
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<std::string> facet;
    for (int i = 0; i <= n; ++i)
      if (i != skip) facet.push_back(std::to_string(i));
    if (!facet.empty()) X.add_simplex_by_ids(facet);
  }
  return X;
}

SemiSimplicialSet horn(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw PreconditionError("horn: need 0 <= k <= n");
  SimplicialComplex X("horn(" + std::to_string(n) + "," + std::to_string(k) + ")");
  for (int i = 0; i <= n; ++i) X.add_vertex(std::to_string(i));
  for (int skip = 0; skip <= n; ++skip) {
    if (skip == k) continue;
    std::vector<std::string> facet;
    for (int i = 0; i <= n; ++i)
      if (i != skip) facet.push_back(std::to_string(i));
    if (!facet.empty()) X.add_simplex_by_ids(facet);
  }
  return X.to_semi_simplicial();
}

SemiSimplicialSet ssset_join(const SemiSimplicialSet& X, const SemiSimplicialSet& Y,
                             const std::string& name) {
  SemiSimplicialSet out(name, X.regular_flag() && Y.regular_flag());
  int dx = X.dim(), dy = Y.dim();
  int d = (dx < 0 && dy < 0) ? -1 : dx + dy + 1;
  // Within degree q the order is: pure X, then mixed pairs by (p, sx, sy)
  // with p = dim of the X part, then pure Y.  Face indices are computed
  // from this layout.
  auto mixed_base = [&](int q, int p) {
    int base = X.count(q);
    for (int pp = 0; pp < p; ++pp) base += X.count(pp) * Y.count(q - 1 - pp);
    return base;
  };
  auto pure_y_base = [&](int q) { return mixed_base(q, q); };
  for (int q = 0; q <= d; ++q) {
    for (int s = 0; s < X.count(q); ++s) {
      std::vector<int> faces;
      if (q >= 1) {
        faces.resize(q + 1);
        for (int i = 0; i <= q; ++i) faces[i] = X.face(q, s, i);
      }
      out.add_simplex(q, X.id_of(q, s), faces);
    }
    for (int p = 0; p <= q - 1; ++p) {
      int r = q - 1 - p;
      for (int sx = 0; sx < X.count(p); ++sx) {
        for (int sy = 0; sy < Y.count(r); ++sy) {
          std::vector<int> faces(q + 1);
          for (int i = 0; i <= p; ++i) {
            if (p == 0)
              faces[i] = pure_y_base(q - 1) + sy;
            else
              faces[i] = mixed_base(q - 1, p - 1) + X.face(p, sx, i) * Y.count(r) + sy;
          }
          for (int i = p + 1; i <= q; ++i) {
            int j = i - p - 1;
            if (r == 0)
              faces[i] = sx;  // pure X part of degree q-1 = p
            else
              faces[i] = mixed_base(q - 1, p) + sx * Y.count(r - 1) + Y.face(r, sy, j);
          }
          out.add_simplex(q, X.id_of(p, sx) + "*" + Y.id_of(r, sy), faces);
        }
      }
    }
    for (int t = 0; t < Y.count(q); ++t) {
      std::vector<int> faces;
      if (q >= 1) {
        faces.resize(q + 1);
        for (int i = 0; i <= q; ++i) faces[i] = pure_y_base(q - 1) + Y.face(q, t, i);
      }
      out.add_simplex(q, Y.id_of(q, t), faces);
    }
  }
  return out;
}

SemiSimplicialSet cone(const SemiSimplicialSet& X, const std::string& apex_id) {
  if (X.has(0, apex_id))
    throw PreconditionError("cone: apex id '" + apex_id + "' already a vertex");
  SemiSimplicialSet pt("pt", true);
  pt.add_simplex(0, apex_id);
  return ssset_join(X, pt, "cone(" + X.name() + ")");
}

SemiSimplicialSet boundary_simplex_join(int n, const SemiSimplicialSet& X) {
  if (n < 0) throw PreconditionError("boundary_simplex_join: n < 0");
  SimplicialComplex B("bD" + std::to_string(n));
  for (int i = 0; i <= n; ++i) B.add_vertex("s" + std::to_string(i));
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<std::string> facet;
    for (int i = 0; i <= n; ++i)
      if (i != skip) facet.push_back("s" + std::to_string(i));
    if (!facet.empty()) B.add_simplex_by_ids(facet);
  }
  return ssset_join(B.to_semi_simplicial(), X,
                    "bD" + std::to_string(n) + "*" + X.name());
}

SimplicialComplex order_complex(const Poset& F, const Budget& budget) {
  if (!F.closed()) throw PreconditionError("order_complex: poset not closed");
  if (static_cast<std::size_t>(F.size()) > budget.max_vertices)
    throw ResourceBudgetExceeded("order_complex: " + std::to_string(F.size()) +
                                 " elements exceed the vertex budget");
  SimplicialComplex out("oc(" + F.name() + ")");
  std::vector<int> ext = F.linear_extension();
  std::vector<int> pos(F.size());
  for (int p = 0; p < static_cast<int>(ext.size()); ++p) pos[ext[p]] = p;
  for (int x : ext) out.add_vertex(F.id_of(x));

  std::size_t chains = 0;
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int x) {
    chain.push_back(pos[x]);
    if (++chains > budget.max_simplices)
      throw ResourceBudgetExceeded("order_complex: chain count exceeds the simplex budget (" +
                                   std::to_string(budget.max_simplices) + ")");
    out.add_simplex(chain);
    for (int y : F.above(x)) extend(y);
    chain.pop_back();
  };
  for (int x = 0; x < F.size(); ++x) extend(x);
  return out;
}

Poset barycentric_subdivision(const SemiSimplicialSet& X) {
  if (!X.regular_flag())
    throw PreconditionError("barycentric_subdivision requires the regular flag");
  ValidationReport rep = X.validate();
  if (!rep.ok())
    throw PreconditionError("barycentric_subdivision: input invalid: " + rep.issues[0]);
  Poset P("Sd(" + X.name() + ")");
  int d = X.dim();
  for (int q = 0; q <= d; ++q)
    for (int s = 0; s < X.count(q); ++s)
      P.add_element(std::to_string(q) + ":" + X.id_of(q, s));
  for (int q = 1; q <= d; ++q) {
    for (int s = 0; s < X.count(q); ++s) {
      int e = P.index_of(std::to_string(q) + ":" + X.id_of(q, s));
      for (int i = 0; i <= q; ++i) {
        int f = P.index_of(std::to_string(q - 1) + ":" +
                           X.id_of(q - 1, X.face(q, s, i)));
        P.add_less(f, e);
      }
    }
  }
  P.close();
  return P;
}

SemiSimplicialSet sd_complex(const SemiSimplicialSet& X, const Budget& budget) {
  SimplicialComplex oc = order_complex(barycentric_subdivision(X), budget);
  SemiSimplicialSet out = oc.to_semi_simplicial();
  out.set_name("Sd(" + X.name() + ")");
  return out;
}

SemiSimplicialSet ord_construction(const SimplicialComplex& S, const Budget& budget) {
  // Each simplex of S contributes exactly the orderings of its own vertex
  // set; faces of those tuples belong to smaller simplices of S.
  Int total = 0;
  for (const auto& s : S.simplices()) total += factorial(static_cast<int>(s.size()));
  if (total > Int(static_cast<unsigned long>(budget.max_simplices)))
    throw ResourceBudgetExceeded("ord_construction: tuple count exceeds the simplex budget");

  SemiSimplicialSet out("ord(" + S.name() + ")", true);
  int d = S.dim();
  auto tuple_id = [&](const std::vector<int>& tup) {
    std::string id;
    for (std::size_t i = 0; i < tup.size(); ++i) {
      if (i) id += '|';
      id += S.vertex_id(tup[i]);
    }
    return id;
  };
  for (int k = 0; k <= d; ++k) {
    for (const auto& s : S.simplices()) {
      if (static_cast<int>(s.size()) != k + 1) continue;
      std::vector<int> tup(s);  // sorted; iterate all permutations
      do {
        std::vector<int> faces;
        if (k >= 1) {
          faces.resize(k + 1);
          for (int i = 0; i <= k; ++i) {
            std::vector<int> f(tup);
            f.erase(f.begin() + i);
            faces[i] = out.index_of(k - 1, tuple_id(f));
          }
        }
        out.add_simplex(k, tuple_id(tup), faces);
      } while (std::next_permutation(tup.begin(), tup.end()));
    }
  }
  return out;
}

}  // namespace ubcw
