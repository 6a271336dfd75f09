// Certified uniform-boundary-constant calculus over exact extended rationals.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ubcw/rational.hpp"

namespace ubcw {

// A constant together with the rule that produced it.  params holds the
// integer arguments and scalars the constant arguments, both in signature
// order; inputs may carry immediate sub-derivations for display.  replay()
// re-evaluates the named rule from the stored arguments.
struct CertifiedConstant {
  XRat value;
  std::string rule;
  std::vector<long> params;
  std::vector<XRat> scalars;
  std::vector<CertifiedConstant> inputs;
};

// Pair transfers.  q is the degree of the conclusion throughout.
CertifiedConstant k_three(long q, const XRat& k_x, const XRat& k_y);
CertifiedConstant k_two(long q, const XRat& k_x, const XRat& k_pair);
CertifiedConstant k_one(long q, const XRat& k_y, const XRat& k_pair);
CertifiedConstant k_fact(long q, const XRat& k_pair, const XRat& k_mid);

// Union of two pieces; k_int_prev is the intersection constant one degree
// down (ignored at q = 0, where a filling is split along components).
CertifiedConstant k_mv(long q, const XRat& k_y, const XRat& k_y2,
                       const XRat& k_int_prev);

// n-fold unreduced suspension; k_shifted is the constant of the base in
// degree q - n.  Valid for q >= -1; n = 0 returns k_shifted unchanged.
CertifiedConstant k_susp(long n, long q, const XRat& k_shifted);

// Attaching cells along p-sphere links, and the Morse-type consequence.
CertifiedConstant k_cell(long p, long q, const XRat& k_link);
CertifiedConstant k_mt(long p, long q, const XRat& k_y, const XRat& k_link);

// Deformation retracts of posets, subdivision transfers, and cones.
CertifiedConstant k_retract_up(long q, const XRat& k_sub);
CertifiedConstant k_retract_down(const XRat& k_ambient);
CertifiedConstant k_sd_up(long q, const XRat& k_x);
CertifiedConstant k_sd_down(long q, const XRat& k_sd);
CertifiedConstant k_cone();

// Two-level filtrations: level-by-level cell attachment and the quadratic
// refinement used for doubled joins.
CertifiedConstant k_tl1(long q, long n, const XRat& k_link);
CertifiedConstant k_tl2(long q, const XRat& k_link_prev);

// Order-complex-of-chains transfer: k_ord_star bounds the flag poset of
// chains, k_ord the composite back-and-forth transfer.
CertifiedConstant k_ord(long n, const XRat& k);
CertifiedConstant k_ord_star(long n, const XRat& k);

// Poset link lemmas for general linear families (sr is the stable rank of
// the base ring, l the column count, d the acyclicity range aimed for).
CertifiedConstant k_gl1(long l, long sr, long m, long d, const XRat& k);
CertifiedConstant k_gl1_plus(long l, long sr, long m, long d, const XRat& k);
CertifiedConstant k_gl2(long l, long sr, long d, const XRat& k);

// The mutually recursive family of acyclicity constants for unimodular
// posets (k1: full poset, k2: with k columns removed, k3/k4: the augmented
// variants).  All arguments are integers; values grow quickly.
CertifiedConstant k1(long n, long sr);
CertifiedConstant k2(long n, long sr, long k);
CertifiedConstant k3(long n, long sr);
CertifiedConstant k4(long n, long sr, long k);

// Spherical-building constants and the mapping-class-style recursion.
CertifiedConstant k_tits(long n);
CertifiedConstant k_aut(long g);

// Re-evaluates the rule named in c from its stored arguments.
XRat replay(const CertifiedConstant& c);

// Indented one-line-per-node rendering of a derivation tree.
std::string describe(const CertifiedConstant& c);

// Uniform access to every rule, for generic property checks and the CLI.
struct RuleInfo {
  std::string name;
  int n_ints;
  int n_scalars;
  std::function<CertifiedConstant(const std::vector<long>&,
                                  const std::vector<XRat>&)>
      apply;
};

const std::vector<RuleInfo>& calculus_rules();
const RuleInfo* find_rule(const std::string& name);

}  // namespace ubcw
