// Exact l1-minimal fillings and per-degree UBC constants.
#pragma once

#include <cstdint>
#include <string>

#include "ubcw/certificate.hpp"
#include "ubcw/chain.hpp"
#include "ubcw/errors.hpp"
#include "ubcw/pair_complex.hpp"
#include "ubcw/rational.hpp"
#include "ubcw/semi_simplicial.hpp"

namespace ubcw {

// Outcome of a minimal-filling problem.  In relative mode the witness only
// has to hit the target modulo the subcomplex; the discrepancy comes back
// as `residual` = boundary(witness) - target, supported in the subcomplex.
struct FillResult {
  Chain witness;   // degree q+1
  Rat fill_norm;   // l1 norm of the witness, the LP optimum
  Chain residual;  // degree q; empty in absolute mode
};

enum class UbcMode { exact, sampled };

// One per-degree UBC measurement.  Exact mode maximizes fill_norm/|c| over
// the circuits of im d_{q+1}; sampled mode is a seeded lower bound.  When
// exact enumeration blows a budget the result is a sampled measurement with
// `downgraded` set.
struct UbcMeasurement {
  int q = 0;
  UbcMode mode = UbcMode::exact;
  bool downgraded = false;
  XRat value;
  Chain attaining_cycle;
  std::size_t circuits_enumerated = 0;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
};

// Exact minimizer of |rho|_1 subject to boundary(rho) = sigma, solved as an
// LP with rho split into nonnegative parts.  Throws NotABoundary when sigma
// is not in the image of d_{q+1}.
FillResult min_fill(const SemiSimplicialSet& x, int q, const Chain& sigma);

// Relative variant: boundary(rho) - sigma only has to be supported in the
// subcomplex, the objective is still the full l1 norm of rho.  Requires
// boundary(sigma) supported in the subcomplex.
FillResult relative_min_fill(const PairComplex& p, int q, const Chain& sigma);

UbcMeasurement ubc_exact(const SemiSimplicialSet& x, int q,
                         const Budget& budget = {});

// Random integer combinations of (q+1)-simplices with coefficients in
// -3..3; reproducible from the seed, always a lower bound for the exact
// constant.
UbcMeasurement ubc_sampled(const SemiSimplicialSet& x, int q,
                           std::size_t samples, std::uint64_t seed,
                           const Budget& budget = {});

// is_n_acyclic(x, n) and every exact q-UBC constant for q <= n bounded by
// k.  Throws ResourceBudgetExceeded when a needed exact measurement had to
// be downgraded.
bool check_uniform_acyclicity(const SemiSimplicialSet& x, int n, const Rat& k,
                              const Budget& budget = {});

// Transport of a UBC constant along a verified certificate:
//   |H_C|_q + |g|_q * k_other * |f|_q
// bounds the degree-q constant of C given the constant k_other of C'.  Use
// cert.swapped() for the other direction.  Throws on an invalid certificate.
Rat transport_ubc(const HomotopyCertificate& cert, int q, const Rat& k_other);

}  // namespace ubcw
