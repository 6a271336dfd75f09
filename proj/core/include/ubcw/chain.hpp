// Exact rational chains on a semi-simplicial set, with l1 norms and boundaries.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ubcw/rational.hpp"
#include "ubcw/semi_simplicial.hpp"

namespace ubcw {

// A degree-q chain, stored by simplex id. Degree -1 chains live on the single
// augmentation generator "*". Zero coefficients are never stored.
struct Chain {
  int q = 0;
  std::map<std::string, Rat> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  Rat norm() const;  // l1 norm: sum of |coefficient|

  void set(const std::string& id, const Rat& c);
  Rat get(const std::string& id) const;

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain operator*(const Rat& s) const;
};

Chain operator+(Chain a, const Chain& b);
Chain operator-(Chain a, const Chain& b);
bool operator==(const Chain& a, const Chain& b);

// Dense coefficient vector in the simplex order of X at degree c.q.
// Throws if a coefficient's id is absent from X.
std::vector<Rat> to_dense(const Chain& c, const SemiSimplicialSet& X);
Chain from_dense(int q, const std::vector<Rat>& v, const SemiSimplicialSet& X);

// Boundary of a degree-q chain in X. For q = 0 the result is the degree -1
// augmentation chain on "*" (reduced complex); for q = -1 it is zero.
Chain boundary(const Chain& c, const SemiSimplicialSet& X);

// Norm of a chain off a subcomplex: sum of |coefficient| over simplices whose
// id is not in `sub_ids` (the quotient seminorm of the relative complex).
Rat norm_off(const Chain& c, const std::vector<std::string>& sub_ids);

}  // namespace ubcw
