// A complex together with a face-closed subcomplex, for relative norms.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "ubcw/chain.hpp"
#include "ubcw/semi_simplicial.hpp"

namespace ubcw {

// (X, A): A is given by the ids of its simplices, one set per degree.
// Chains of the pair are chains of X; the pair norm ignores coefficients on A.
class PairComplex {
 public:
  PairComplex(SemiSimplicialSet total, std::vector<std::set<std::string>> sub_ids);

  const SemiSimplicialSet& total() const { return total_; }
  bool in_sub(int q, const std::string& id) const;
  bool in_sub(int q, int s) const { return in_sub(q, total_.id_of(q, s)); }
  int sub_count(int q) const;

  // Checks that the subcomplex ids exist in X and are closed under faces.
  ValidationReport validate() const;

  // The subcomplex as a standalone semi-simplicial set (same ids).
  SemiSimplicialSet sub_complex() const;

  // l1 norm of c off the subcomplex (the quotient seminorm of C(X)/C(A)).
  Rat relative_norm(const Chain& c) const;

  // Drops the coefficients of c that lie on the subcomplex.
  Chain reduce_mod_sub(const Chain& c) const;

 private:
  SemiSimplicialSet total_;
  std::vector<std::set<std::string>> sub_;
};

}  // namespace ubcw
