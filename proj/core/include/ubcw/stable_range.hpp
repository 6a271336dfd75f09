// Stability ranges for bounded-cohomology comparison maps.
#pragma once

namespace ubcw {

// Ranges for the general linear family over a ring of stable rank sr.
// gamma_tilde is the largest level shift for which degree-q comparison
// still lands in the stable regime; iso/inj report whether the degree-q
// comparison map is an isomorphism resp. an injection.
struct GlRange {
  bool iso;
  bool inj;
  long gamma_tilde;
};

// Ranges for the handlebody automorphism family; the inner and outer
// acyclicity offsets differ, so two shifted quantities are reported.
struct AutRange {
  bool iso;
  bool inj;
  long gamma_tilde;
  long tau_tilde;
};

GlRange stable_range_gl(long n, long sr, long q);
AutRange stable_range_aut(long n, long q);

}  // namespace ubcw
