// Exact rational homology ranks of semi-simplicial sets and pairs.
#pragma once

#include <string>
#include <vector>

#include "ubcw/errors.hpp"
#include "ubcw/matrix.hpp"
#include "ubcw/pair_complex.hpp"
#include "ubcw/rational.hpp"
#include "ubcw/semi_simplicial.hpp"

namespace ubcw {

// Reduced (or relative) Betti numbers through a degree cap.
struct HomologyProfile {
  std::string name;
  int max_degree = -1;  // profile covers degrees 0..max_degree
  bool nonempty = false;
  std::vector<Int> betti;  // betti[q] for 0 <= q <= max_degree

  // True when the profile certifies n-acyclicity: nonempty and betti[q] = 0
  // for 0 <= q <= n.  n = -1 asks only for nonemptiness.  Requires n <=
  // max_degree.
  bool acyclic_through(int n) const;
};

// Exact rank over the rationals.  Unit-pivot sparse elimination first,
// fraction-free dense elimination on whatever residual is left; throws
// ResourceBudgetExceeded when the residual is larger than
// budget.max_dense_cells.
Int matrix_rank(const SparseIntMat& m, const Budget& budget = {});

// Rank of the degree-q boundary map of x.  q = 0 is the augmentation
// (rank 1 iff nonempty); q = 1 counts connected components instead of
// eliminating.
Int boundary_rank(const SemiSimplicialSet& x, int q, const Budget& budget = {});

// Reduced Betti numbers of x for degrees 0..max_q (max_q >= -1).
HomologyProfile reduced_betti(const SemiSimplicialSet& x, int max_q,
                              const Budget& budget = {});

// Relative Betti numbers of a pair: boundary matrices restricted to the
// rows and columns off the subcomplex, no augmentation in degree 0.  An
// empty subcomplex falls back to the reduced absolute profile.
HomologyProfile relative_betti(const PairComplex& p, int max_q,
                               const Budget& budget = {});

// Nonempty with vanishing reduced homology through degree n (n = -1 means
// nonempty).
bool is_n_acyclic(const SemiSimplicialSet& x, int n, const Budget& budget = {});

// Signed simplex count  sum_q (-1)^q count(q).
Int euler_characteristic(const SemiSimplicialSet& x);

}  // namespace ubcw
