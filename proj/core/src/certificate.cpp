#include "ubcw/certificate.hpp"

#include <algorithm>
#include <functional>

#include "ubcw/errors.hpp"

namespace ubcw {

namespace {

RatMat boundary_or_zero(const SemiSimplicialSet& X, int q) {
  if (q >= 1 && q <= X.dim()) return to_rat(X.boundary_matrix(q));
  return RatMat(X.count(q - 1), X.count(q));
}

RatMat augmentation_or_zero(const SemiSimplicialSet& X) {
  if (X.count(0) > 0) return to_rat(X.augmentation_matrix());
  return RatMat(1, 0);
}

// All strict chains of a closed poset, keyed by the order-complex simplex id
// (element ids joined by '|' in chain order).
std::map<std::string, std::vector<int>> enumerate_flags(const Poset& P,
                                                        const Budget& budget) {
  std::map<std::string, std::vector<int>> out;
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int x) {
    chain.push_back(x);
    if (out.size() >= budget.max_simplices)
      throw ResourceBudgetExceeded("flag enumeration exceeds the simplex budget");
    std::string id;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i) id += '|';
      id += P.id_of(chain[i]);
    }
    out.emplace(std::move(id), chain);
    for (int y : P.above(x)) extend(y);
    chain.pop_back();
  };
  for (int x = 0; x < P.size(); ++x) extend(x);
  return out;
}

int permutation_sign(const std::vector<int>& phi) {
  int inv = 0;
  for (std::size_t a = 0; a < phi.size(); ++a)
    for (std::size_t b = a + 1; b < phi.size(); ++b)
      if (phi[a] > phi[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

HomotopyCertificate HomotopyCertificate::swapped() const {
  HomotopyCertificate out;
  out.C = Cp;
  out.Cp = C;
  out.f = g;
  out.g = f;
  out.H_C = H_Cp;
  out.H_Cp = H_C;
  out.f_norm = g_norm;
  out.g_norm = f_norm;
  out.hc_norm = hcp_norm;
  out.hcp_norm = hc_norm;
  return out;
}

ValidationReport HomotopyCertificate::verify() const {
  ValidationReport rep;
  int md = max_degree();
  auto note = [&](int q, const std::string& what) {
    rep.issues.push_back("degree " + std::to_string(q) + ": " + what);
  };
  auto shapes_ok = [&](const RatMat& m, int r, int c, int q, const std::string& lbl) {
    if (m.rows != r || m.cols != c) {
      note(q, lbl + " has shape " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                  ", expected " + std::to_string(r) + "x" + std::to_string(c));
      return false;
    }
    return true;
  };
  if (static_cast<int>(g.size()) != md + 1 || static_cast<int>(H_C.size()) != md + 1 ||
      static_cast<int>(H_Cp.size()) != md + 1 || static_cast<int>(f_norm.size()) != md + 1 ||
      static_cast<int>(g_norm.size()) != md + 1 || static_cast<int>(hc_norm.size()) != md + 1 ||
      static_cast<int>(hcp_norm.size()) != md + 1) {
    rep.issues.push_back("per-degree arrays have mismatched lengths");
    return rep;
  }
  for (int q = 0; q <= md; ++q) {
    bool ok = true;
    ok &= shapes_ok(f[q], Cp.count(q), C.count(q), q, "f");
    ok &= shapes_ok(g[q], C.count(q), Cp.count(q), q, "g");
    ok &= shapes_ok(H_C[q], C.count(q + 1), C.count(q), q, "H_C");
    ok &= shapes_ok(H_Cp[q], Cp.count(q + 1), Cp.count(q), q, "H_C'");
    if (!ok) continue;

    if (q >= 1) {
      if (!equal(multiply(boundary_or_zero(Cp, q), f[q]),
                 multiply(f[q - 1], boundary_or_zero(C, q))))
        note(q, "f does not commute with the boundary");
      if (!equal(multiply(boundary_or_zero(C, q), g[q]),
                 multiply(g[q - 1], boundary_or_zero(Cp, q))))
        note(q, "g does not commute with the boundary");
    } else {
      if (!equal(multiply(augmentation_or_zero(Cp), f[0]), augmentation_or_zero(C)))
        note(q, "f does not commute with the augmentation");
      if (!equal(multiply(augmentation_or_zero(C), g[0]), augmentation_or_zero(Cp)))
        note(q, "g does not commute with the augmentation");
    }

    RatMat lhs = multiply(boundary_or_zero(C, q + 1), H_C[q]);
    if (q >= 1) lhs = add(lhs, multiply(H_C[q - 1], boundary_or_zero(C, q)));
    RatMat rhs = subtract(multiply(g[q], f[q]), RatMat::identity(C.count(q)));
    if (!equal(lhs, rhs)) note(q, "homotopy identity fails on C");

    lhs = multiply(boundary_or_zero(Cp, q + 1), H_Cp[q]);
    if (q >= 1) lhs = add(lhs, multiply(H_Cp[q - 1], boundary_or_zero(Cp, q)));
    rhs = subtract(multiply(f[q], g[q]), RatMat::identity(Cp.count(q)));
    if (!equal(lhs, rhs)) note(q, "homotopy identity fails on C'");

    if (!(f_norm[q] == f[q].operator_norm())) note(q, "recorded |f| norm mismatch");
    if (!(g_norm[q] == g[q].operator_norm())) note(q, "recorded |g| norm mismatch");
    if (!(hc_norm[q] == H_C[q].operator_norm())) note(q, "recorded |H_C| norm mismatch");
    if (!(hcp_norm[q] == H_Cp[q].operator_norm())) note(q, "recorded |H_C'| norm mismatch");
  }
  return rep;
}

HomotopyCertificate sd_certificate(const SemiSimplicialSet& X, const Budget& budget) {
  Poset P = barycentric_subdivision(X);  // checks regularity and validity
  SimplicialComplex oc = order_complex(P, budget);
  SemiSimplicialSet Sd = oc.to_semi_simplicial();
  Sd.set_name("Sd(" + X.name() + ")");

  // Poset element -> (degree, index) in X.
  int nE = P.size();
  std::vector<std::pair<int, int>> elem(nE);
  for (int e = 0; e < nE; ++e) {
    const std::string& id = P.id_of(e);
    auto colon = id.find(':');
    int q = std::stoi(id.substr(0, colon));
    elem[e] = {q, X.index_of(q, id.substr(colon + 1))};
  }

  std::map<std::string, std::vector<int>> flags = enumerate_flags(P, budget);
  auto flag_id = [&](const std::vector<int>& chain) {
    std::string id;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i) id += '|';
      id += P.id_of(chain[i]);
    }
    return id;
  };
  auto sd_index = [&](int deg, const std::vector<int>& chain) {
    int s = Sd.index_of(deg, flag_id(chain));
    if (s < 0) throw PreconditionError("sd_certificate: missing flag " + flag_id(chain));
    return s;
  };
  // chain (flag) of each Sd simplex, by degree and index
  int d = X.dim();
  std::vector<std::vector<std::vector<int>>> chain_of(d + 1);
  for (int q = 0; q <= d; ++q) {
    chain_of[q].resize(Sd.count(q));
    for (int t = 0; t < Sd.count(q); ++t) chain_of[q][t] = flags.at(Sd.id_of(q, t));
  }

  HomotopyCertificate cert;
  cert.C = X;
  cert.Cp = Sd;
  if (d < 0) return cert;

  cert.f.assign(d + 1, RatMat());
  cert.g.assign(d + 1, RatMat());
  cert.H_C.assign(d + 1, RatMat());
  cert.H_Cp.assign(d + 1, RatMat());

  // f: alternating sum over orderings of each simplex's vertex positions.
  for (int q = 0; q <= d; ++q) {
    RatMat F(Sd.count(q), X.count(q));
    std::vector<int> phi(q + 1);
    for (int s = 0; s < X.count(q); ++s) {
      for (int i = 0; i <= q; ++i) phi[i] = i;
      do {
        int sign = permutation_sign(phi);
        std::vector<int> chain(q + 1);
        std::vector<int> keep;
        for (int k = 0; k <= q; ++k) {
          keep.push_back(phi[k]);
          std::sort(keep.begin(), keep.end());
          auto [deg, idx] = X.face_by_positions(q, s, keep);
          int e = P.index_of(std::to_string(deg) + ":" + X.id_of(deg, idx));
          if (e < 0) throw PreconditionError("sd_certificate: missing poset element");
          chain[k] = e;
        }
        F.col[s].emplace_back(sd_index(q, chain), Rat(sign));
      } while (std::next_permutation(phi.begin(), phi.end()));
      normalize_column(F.col[s]);
    }
    cert.f[q] = std::move(F);
  }

  // g: a flag maps to the face of its top simplex cut out by the last
  // vertices of its members, when those sit at strictly increasing
  // positions; otherwise to zero.
  for (int q = 0; q <= d; ++q) {
    RatMat G(X.count(q), Sd.count(q));
    for (int t = 0; t < Sd.count(q); ++t) {
      const std::vector<int>& chain = chain_of[q][t];
      auto [m, sTop] = elem[chain.back()];
      std::vector<int> verts = X.vertices_of(m, sTop);
      std::vector<int> pos(q + 1);
      bool good = true;
      for (int j = 0; j <= q && good; ++j) {
        auto [dj, sj] = elem[chain[j]];
        int vj = X.vertices_of(dj, sj).back();
        auto it = std::find(verts.begin(), verts.end(), vj);
        if (it == verts.end()) throw PreconditionError("sd_certificate: flag vertex escape");
        pos[j] = static_cast<int>(it - verts.begin());
        if (j > 0 && pos[j] <= pos[j - 1]) good = false;
      }
      if (!good) continue;
      auto [degF, idxF] = X.face_by_positions(m, sTop, pos);
      if (degF != q) throw PreconditionError("sd_certificate: face degree mismatch");
      G.col[t].emplace_back(idxF, Rat(1));
    }
    cert.g[q] = std::move(G);
  }

  // H on Sd, built inductively so that dH + Hd = id - f.g; stored negated
  // to match the global convention dH + Hd = f.g - id.
  std::vector<RatMat> Hraw(d + 1);
  {
    RatMat H0(Sd.count(1), Sd.count(0));
    for (int t = 0; t < Sd.count(0); ++t) {
      int e = chain_of[0][t][0];
      auto [m, sTop] = elem[e];
      if (m == 0) continue;
      int v = X.vertices_of(m, sTop).back();
      int eV = P.index_of("0:" + X.id_of(0, v));
      H0.col[t].emplace_back(sd_index(1, {eV, e}), Rat(1));
    }
    Hraw[0] = std::move(H0);
  }
  for (int q = 1; q <= d; ++q) {
    // z-column matrix: id - f.g - H.d, each column a cycle in the cone of
    // simplices below (and including) the flag's top element.
    RatMat Z = subtract(subtract(RatMat::identity(Sd.count(q)), multiply(cert.f[q], cert.g[q])),
                        multiply(Hraw[q - 1], boundary_or_zero(Sd, q)));
    RatMat H(Sd.count(q + 1), Sd.count(q));
    Rat cone_sign((q + 1) % 2 == 0 ? 1 : -1);  // (-1)^(q+1)
    for (int t = 0; t < Sd.count(q); ++t) {
      int apex = chain_of[q][t].back();
      for (const auto& [rowF, coeff] : Z.col[t]) {
        const std::vector<int>& Fchain = chain_of[q][rowF];
        if (Fchain.back() == apex) continue;  // apex terms are not coned
        std::vector<int> coned(Fchain);
        if (!P.less(coned.back(), apex))
          throw PreconditionError("sd_certificate: cycle escapes the cone");
        coned.push_back(apex);
        H.col[t].emplace_back(sd_index(q + 1, coned), coeff * cone_sign);
      }
      normalize_column(H.col[t]);
    }
    Hraw[q] = std::move(H);
  }
  for (int q = 0; q <= d; ++q) {
    cert.H_Cp[q] = negate(Hraw[q]);
    cert.H_C[q] = RatMat(X.count(q + 1), X.count(q));
  }

  for (int q = 0; q <= d; ++q) {
    cert.f_norm.push_back(cert.f[q].operator_norm());
    cert.g_norm.push_back(cert.g[q].operator_norm());
    cert.hc_norm.push_back(cert.H_C[q].operator_norm());
    cert.hcp_norm.push_back(cert.H_Cp[q].operator_norm());
  }
  return cert;
}

RetractResult poset_retract(const Poset& F, const std::vector<int>& S,
                            const Budget& budget) {
  if (!F.closed()) throw PreconditionError("poset_retract: poset not closed");
  std::vector<int> sub_elems(S);
  std::sort(sub_elems.begin(), sub_elems.end());
  sub_elems.erase(std::unique(sub_elems.begin(), sub_elems.end()), sub_elems.end());
  for (int y : sub_elems)
    if (y < 0 || y >= F.size()) throw PreconditionError("poset_retract: element out of range");

  int n = F.size();
  std::vector<int> r(n, -1);
  for (int x = 0; x < n; ++x) {
    std::vector<int> cands;
    for (int y : sub_elems)
      if (F.leq(y, x)) cands.push_back(y);
    if (cands.empty())
      throw PreconditionError("poset_retract: S^-(" + F.id_of(x) + ") is empty");
    r[x] = F.maximum_of(cands);
    if (r[x] < 0)
      throw PreconditionError("poset_retract: S^-(" + F.id_of(x) + ") has no maximum");
  }

  RetractResult out;
  out.sub = F.induced(sub_elems, F.name() + "|S");
  for (int x = 0; x < n; ++x) out.retraction.emplace(F.id_of(x), F.id_of(r[x]));

  SemiSimplicialSet FS = order_complex(F, budget).to_semi_simplicial();
  SemiSimplicialSet SS = order_complex(out.sub, budget).to_semi_simplicial();
  std::map<std::string, std::vector<int>> flags = enumerate_flags(F, budget);
  auto chain_id = [&](const std::vector<int>& chain) {
    std::string id;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i) id += '|';
      id += F.id_of(chain[i]);
    }
    return id;
  };

  int d = FS.dim();
  HomotopyCertificate& cert = out.cert;
  cert.C = FS;
  cert.Cp = SS;
  if (d < 0) return out;
  cert.f.assign(d + 1, RatMat());
  cert.g.assign(d + 1, RatMat());
  cert.H_C.assign(d + 1, RatMat());
  cert.H_Cp.assign(d + 1, RatMat());

  std::vector<std::vector<std::vector<int>>> chain_of(d + 1);
  for (int q = 0; q <= d; ++q) {
    chain_of[q].resize(FS.count(q));
    for (int t = 0; t < FS.count(q); ++t) chain_of[q][t] = flags.at(FS.id_of(q, t));
  }

  for (int q = 0; q <= d; ++q) {
    RatMat fq(SS.count(q), FS.count(q));
    RatMat gq(FS.count(q), SS.count(q));
    RatMat Hq(FS.count(q + 1), FS.count(q));
    for (int t = 0; t < FS.count(q); ++t) {
      const std::vector<int>& chain = chain_of[q][t];
      // f: retract pointwise; degenerate images vanish.
      std::vector<int> image(q + 1);
      bool strict = true;
      for (int j = 0; j <= q; ++j) {
        image[j] = r[chain[j]];
        if (j > 0 && image[j] == image[j - 1]) strict = false;
      }
      if (strict) {
        int row = SS.index_of(q, chain_id(image));
        if (row < 0) throw PreconditionError("poset_retract: image flag missing");
        fq.col[t].emplace_back(row, Rat(1));
      }
      // H: mixed flags (r(x_0) < ... < r(x_i) < x_i < ... < x_q).
      for (int i = 0; i <= q; ++i) {
        std::vector<int> mixed;
        mixed.reserve(q + 2);
        for (int j = 0; j <= i; ++j) mixed.push_back(r[chain[j]]);
        for (int j = i; j <= q; ++j) mixed.push_back(chain[j]);
        bool ok = true;
        for (std::size_t a = 0; a + 1 < mixed.size() && ok; ++a)
          if (!F.less(mixed[a], mixed[a + 1])) ok = false;
        if (!ok) continue;
        int row = FS.index_of(q + 1, chain_id(mixed));
        if (row < 0) throw PreconditionError("poset_retract: homotopy flag missing");
        Hq.col[t].emplace_back(row, Rat(i % 2 == 0 ? -1 : 1));  // (-1)^(i+1)
      }
      normalize_column(Hq.col[t]);
    }
    for (int t = 0; t < SS.count(q); ++t) {
      int row = FS.index_of(q, SS.id_of(q, t));
      if (row < 0) throw PreconditionError("poset_retract: inclusion flag missing");
      gq.col[t].emplace_back(row, Rat(1));
    }
    cert.f[q] = std::move(fq);
    cert.g[q] = std::move(gq);
    cert.H_C[q] = std::move(Hq);
    cert.H_Cp[q] = RatMat(SS.count(q + 1), SS.count(q));
  }

  for (int q = 0; q <= d; ++q) {
    cert.f_norm.push_back(cert.f[q].operator_norm());
    cert.g_norm.push_back(cert.g[q].operator_norm());
    cert.hc_norm.push_back(cert.H_C[q].operator_norm());
    cert.hcp_norm.push_back(cert.H_Cp[q].operator_norm());
  }
  return out;
}

RetractResult poset_retract(const Poset& F, const std::vector<std::string>& S_ids,
                            const Budget& budget) {
  std::vector<int> S;
  for (const auto& id : S_ids) {
    int i = F.index_of(id);
    if (i < 0) throw PreconditionError("poset_retract: unknown element '" + id + "'");
    S.push_back(i);
  }
  return poset_retract(F, S, budget);
}

}  // namespace ubcw
