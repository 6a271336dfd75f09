// Generic constructions: simplices, horns, joins, cones, order complexes,
// barycentric subdivision, and the ord-construction.
#pragma once

#include <string>

#include "ubcw/errors.hpp"
#include "ubcw/poset.hpp"
#include "ubcw/semi_simplicial.hpp"
#include "ubcw/simplicial_complex.hpp"

namespace ubcw {

// The n-simplex / its boundary as ordered simplicial complexes on vertices
// "0", ..., "n".
SimplicialComplex standard_simplex(int n);
SimplicialComplex boundary_simplex(int n);

// The boundary of the n-simplex minus the interior of its k-th facet,
// 0 <= k <= n, as a semi-simplicial set.
SemiSimplicialSet horn(int n, int k);

// Join of semi-simplicial sets: q-simplices are pairs (sigma, tau) with
// dim sigma + dim tau + 1 = q, plus the pure simplices of each factor.
// Face maps act on the sigma part first (X's vertices come first).  Mixed
// simplices get ids "<sigma>*<tau>"; per-degree id collisions between the
// factors are a precondition error.
SemiSimplicialSet ssset_join(const SemiSimplicialSet& X, const SemiSimplicialSet& Y,
                             const std::string& name);

// X * {apex}; the apex is last.  Throws if apex_id already names a vertex.
SemiSimplicialSet cone(const SemiSimplicialSet& X, const std::string& apex_id = "apex");

// Boundary-of-n-simplex join (suspension when n = 1): the sphere part uses
// vertex ids "s0", ..., "sn".
SemiSimplicialSet boundary_simplex_join(int n, const SemiSimplicialSet& X);

// Order complex: vertices are the poset's elements in a linear extension,
// p-simplices the strict chains x_0 < ... < x_p.  Budgeted by total chains.
SimplicialComplex order_complex(const Poset& F, const Budget& budget = Budget{});

// Poset of the simplices of a regular semi-simplicial set, ordered by the
// iterated-face relation.  Elements are named "q:id".
Poset barycentric_subdivision(const SemiSimplicialSet& X);

// Convenience: order complex of the subdivision poset, as a semi-simplicial
// set (what chain-level subdivision statements are about).
SemiSimplicialSet sd_complex(const SemiSimplicialSet& X, const Budget& budget = Budget{});

// k-simplices are injective (k+1)-tuples whose underlying set is a simplex
// of S; face i deletes position i.  Tuple ids join vertex ids with '|'.
SemiSimplicialSet ord_construction(const SimplicialComplex& S,
                                   const Budget& budget = Budget{});

}  // namespace ubcw
