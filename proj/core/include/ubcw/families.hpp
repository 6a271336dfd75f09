// Concrete families: unimodular-sequence posets, split-injection complexes,
// Tits buildings of types A and C, and the building filtration by stars.
#pragma once

#include <string>
#include <vector>

#include "ubcw/errors.hpp"
#include "ubcw/poset.hpp"
#include "ubcw/semi_simplicial.hpp"

namespace ubcw {

// Z/m, or a prime field F_p when `field` is set.  Elements are 0..m-1.
// Every ring here is semi-local, so the stable rank is 1.
struct FiniteRing {
  long m = 2;
  bool field = false;

  long add(long a, long b) const { return (a + b) % m; }
  long sub(long a, long b) const { return ((a - b) % m + m) % m; }
  long mul(long a, long b) const { return (a * b) % m; }
  long neg(long a) const { return (m - a % m) % m; }
  int stable_rank() const { return 1; }
  std::string label() const {
    return (field ? "F" : "Z/") + std::to_string(m);
  }
};

FiniteRing ring_zmod(long m);   // m >= 2
FiniteRing ring_field(long p);  // p prime

// True iff the n x k matrix with the given columns admits a left inverse
// over R; decided by full column rank modulo every prime dividing m.
bool is_unimodular(const FiniteRing& r, int n,
                   const std::vector<std::vector<long>>& vectors);

// Vector universe shapes for unimodular-sequence posets.  `full` is all of
// R^n (ambient rank n); `affine` is R^n + delta*e_{n+1} (ambient n+1);
// `union_shape` is (R^n + delta*e_{n+1}) union (R^n + delta*e_{n+1} +
// e_{n+2}) (ambient n+2).  Suffix vectors are given in ambient coordinates.
struct UnimodularPosetSpec {
  FiniteRing ring;
  int n = 1;
  enum class Universe { full, affine, union_shape } universe = Universe::full;
  long delta = 1;
  std::vector<std::vector<long>> suffix;

  int ambient() const {
    return universe == Universe::full ? n
           : universe == Universe::affine ? n + 1
                                          : n + 2;
  }
};

// Poset of nonempty sequences of distinct universe vectors w with
// (w, suffix) unimodular, ordered by subsequence.  An infeasible suffix
// produces an empty poset whose name carries an "|infeasible-suffix" mark.
Poset unimodular_poset(const UnimodularPosetSpec& spec,
                       const Budget& budget = {});

// p-simplices = unimodular (p+1)-tuples in R^n, i-th face deletes the i-th
// vector; regular.  Its barycentric-subdivision poset is order-isomorphic
// to unimodular_poset(R, n, full universe, empty suffix).
SemiSimplicialSet split_injection_complex(const FiniteRing& r, int n,
                                          const Budget& budget = {});

// Proper nontrivial subspaces of F_p^n under inclusion; ids are reduced
// row-echelon bases with rows joined by '|'.
Poset tits_building_A(long p, int n);

// Nonzero isotropic subspaces of F_p^{2n} for the standard symplectic form
// on interleaved hyperbolic pairs, under inclusion.
Poset tits_building_C(long p, int n);

// One stage of the star filtration of a type-A building along a line l:
// Q_0 = star(l); Q_r adds the subspaces of dimension <= r avoiding l.  For
// every element added at stage 1 <= r <= n-2 its link in the previous stage
// is a cone (apex P + l); at the last stage the link is isomorphic to the
// building of rank n-1 by an explicit coordinate relabeling.
struct SolomonTitsStep {
  int r = 0;
  Poset q;
  std::vector<std::string> added;
  bool links_are_cones = false;
  bool links_isomorphic_to_lower_building = false;
};

// `t` must come from tits_building_A (the field and rank are read back from
// its name); `line_id` must be one of its dimension-1 elements.
std::vector<SolomonTitsStep> solomon_tits_filtration(const Poset& t,
                                                     const std::string& line_id);

}  // namespace ubcw
