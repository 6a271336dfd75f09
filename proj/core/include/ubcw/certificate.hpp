// Homotopy certificates: explicit chain maps f, g and homotopies H with
// recorded norms, verified by exact matrix identities.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ubcw/builders.hpp"
#include "ubcw/matrix.hpp"
#include "ubcw/poset.hpp"
#include "ubcw/semi_simplicial.hpp"

namespace ubcw {

// Sign convention, fixed once for every certificate:
//   dH_C  + H_C  d = g.f - id   on C,
//   dH_C' + H_C' d = f.g - id   on C'.
// f[q]: C_q -> C'_q, g[q]: C'_q -> C_q, H_C[q]: C_q -> C_{q+1},
// H_Cp[q]: C'_q -> C'_{q+1}; degrees 0..max_degree().
struct HomotopyCertificate {
  SemiSimplicialSet C;
  SemiSimplicialSet Cp;
  std::vector<RatMat> f, g, H_C, H_Cp;
  std::vector<Rat> f_norm, g_norm, hc_norm, hcp_norm;

  int max_degree() const { return static_cast<int>(f.size()) - 1; }

  // Exact checks: f and g commute with boundaries and augmentations, the
  // two homotopy identities hold, and every recorded norm equals the max
  // column l1 sum of its matrix.  Empty report iff the certificate is valid.
  ValidationReport verify() const;

  // Same data with the roles of C and C' exchanged; the sign convention is
  // symmetric, so the swap verifies iff the original does.
  HomotopyCertificate swapped() const;
};

// Chain-level barycentric subdivision data for a regular complex X:
// C = chains of X, C' = chains of sd_complex(X).  g.f = id on C, so
// H_C = 0; norms satisfy |f|_q <= (q+1)!, |g|_q <= 1, |H_C'|_q <= (q+2)!-1.
HomotopyCertificate sd_certificate(const SemiSimplicialSet& X,
                                   const Budget& budget = Budget{});

// Deformation retract of a poset onto a subposet S where every weak
// down-set S^-(x) has a maximum.  C = chains of the order complex of F,
// C' = chains of the order complex of S; f = induced by r, g = inclusion,
// f.g = id so H_Cp = 0, and |H_C|_q <= q+1.
struct RetractResult {
  Poset sub;                                      // induced subposet on S
  std::map<std::string, std::string> retraction;  // element id -> image id
  HomotopyCertificate cert;
};

RetractResult poset_retract(const Poset& F, const std::vector<int>& S,
                            const Budget& budget = Budget{});
RetractResult poset_retract(const Poset& F, const std::vector<std::string>& S_ids,
                            const Budget& budget = Budget{});

}  // namespace ubcw
