// Stable ranges: iterated-shift minimum formulas with closed-form checks.
#include "ubcw/stable_range.hpp"

#include <stdexcept>

#include "ubcw/errors.hpp"

namespace ubcw {

namespace {

long floor_div2(long a) { return (a >= 0) ? a / 2 : -((-a + 1) / 2); }

void require(bool ok, const char* msg) {
  if (!ok) throw PreconditionError(msg);
}

}  // namespace

GlRange stable_range_gl(long n, long sr, long q) {
  require(n >= 0, "stable_range_gl: n must be nonnegative");
  require(sr >= 1, "stable_range_gl: sr must be positive");
  require(q >= 0, "stable_range_gl: q must be nonnegative");
  // Both the inner and outer offsets are n - sr - 1, so the iterated shift
  // minimizes (n + 1 - 2(q - j) - sr - 1) - j over j = 1..q, which is
  // attained at j = 1.
  long closed = n - 2 * q - sr + 1;
  if (q >= 1) {
    long lowest = closed;
    bool seen = false;
    for (long j = 1; j <= q; ++j) {
      long shifted = (n + 1 - 2 * (q - j) - sr - 1) - j;
      if (!seen || shifted < lowest) lowest = shifted;
      seen = true;
    }
    if (lowest != closed)
      throw std::logic_error("stable_range_gl: shift minimum mismatch");
  }
  GlRange out;
  out.gamma_tilde = closed;
  out.iso = (2 * q <= n - sr);
  out.inj = (2 * q <= n - sr + 2);
  return out;
}

AutRange stable_range_aut(long n, long q) {
  require(n >= 0, "stable_range_aut: n must be nonnegative");
  require(q >= 0, "stable_range_aut: q must be nonnegative");
  // Inner offset floor((n - 4) / 2), outer offset n - 4.  The 2j gained by
  // stepping up the level cancels the j spent, so j = 1 is again optimal
  // and the floors commute with the shift.
  long tau_closed = n - 2 * q - 2;
  long gamma_closed = floor_div2(n - 2 * q - 3);
  if (q >= 1) {
    long tau_lowest = tau_closed;
    long gamma_lowest = gamma_closed;
    bool seen = false;
    for (long j = 1; j <= q; ++j) {
      long tau_shifted = (n + 1 - 2 * (q - j) - 4) - j;
      long gamma_shifted = floor_div2(n + 1 - 2 * (q - j) - 4) - j;
      if (!seen || tau_shifted < tau_lowest) tau_lowest = tau_shifted;
      if (!seen || gamma_shifted < gamma_lowest) gamma_lowest = gamma_shifted;
      seen = true;
    }
    if (tau_lowest != tau_closed || gamma_lowest != gamma_closed)
      throw std::logic_error("stable_range_aut: shift minimum mismatch");
  }
  AutRange out;
  out.gamma_tilde = gamma_closed;
  out.tau_tilde = tau_closed;
  out.iso = (2 * q <= n - 3);
  out.inj = (2 * q <= n - 1);
  return out;
}

}  // namespace ubcw
