// Quadratic modules over finite rings, hyperbolic modules, and the
// complexes of hyperbolic split injections.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ubcw/errors.hpp"
#include "ubcw/families.hpp"
#include "ubcw/semi_simplicial.hpp"
#include "ubcw/simplicial_complex.hpp"

namespace ubcw {

// Sign epsilon (+1 or -1) together with a subgroup Lambda of (R,+) wedged
// between {a - eps*a : a in R} and {a : a + eps*a = 0}.
struct FormParameter {
  long epsilon = -1;
  std::vector<long> lambda;  // sorted distinct coset representatives
};

// Validates the wedge condition and the subgroup axioms for the ring.
FormParameter form_parameter(const FiniteRing& r, long epsilon,
                             std::vector<long> lambda);
FormParameter symplectic_form_parameter(const FiniteRing& r);  // eps=-1, L=R
FormParameter minimal_form_parameter(const FiniteRing& r, long epsilon);

// R^rank with a bilinear form gram (lambda(e_i,e_j)) satisfying
// lambda(x,y) = eps*lambda(y,x), and a quadratic refinement mu given on the
// basis and extended by
//   mu(sum a_i e_i) = sum a_i^2 mu(e_i) + sum_{i<j} a_i a_j lambda(e_i,e_j)
// modulo Lambda.
struct QuadraticModule {
  FiniteRing ring;
  int rank = 0;
  FormParameter fp;
  std::vector<std::vector<long>> gram;
  std::vector<long> mu_basis;

  long lambda_of(const std::vector<long>& x, const std::vector<long>& y) const;
  long mu_raw(const std::vector<long>& x) const;   // before Lambda reduction
  bool mu_vanishes(const std::vector<long>& x) const;  // mu(x) in Lambda
  bool in_lambda(long v) const;
  bool nondegenerate() const;  // det(gram) a unit of R

  // Form symmetry, shape coherence, and the form-parameter wedge.
  ValidationReport validate() const;
};

// H^{(+n)} on the interleaved basis e_1 f_1 ... e_n f_n with
// lambda(e_i, f_i) = 1, lambda(f_i, e_i) = eps, mu = 0 on the basis.
QuadraticModule hyperbolic_module(const FormParameter& fp, const FiniteRing& r,
                                  int n);

// Vertices: morphisms h = (x, y) = (h(e), h(f)) of quadratic modules H -> M.
// S^M: simplices = sets of morphisms with pairwise orthogonal images.
// X^M: ordered tuples of such morphisms, i-th face deletes position i; this
// equals ord_construction(S^M) simplex for simplex.
struct HyperbolicComplexes {
  SimplicialComplex s;
  SemiSimplicialSet x;
  std::vector<std::pair<std::vector<long>, std::vector<long>>> morphisms;
  bool outside_theorem_hypotheses = false;  // characteristic 2 instance
};

HyperbolicComplexes hyperbolic_split_injection_complex(const QuadraticModule& m,
                                                       const Budget& budget = {});

// Largest g admitting a morphism H^{(+g)} -> M, i.e. g pairwise-orthogonal
// morphisms H -> M; equals dim(S^M) + 1.
int witt_index(const QuadraticModule& m, const Budget& budget = {});

// Orthogonal complement of the image of the morphism (x, y) as a quadratic
// module on its own coordinates; `basis` maps them back into m.  Prime
// fields only.
struct ComplementModule {
  QuadraticModule module;
  std::vector<std::vector<long>> basis;
};

ComplementModule orthogonal_complement(const QuadraticModule& m,
                                       const std::vector<long>& x,
                                       const std::vector<long>& y);

}  // namespace ubcw
