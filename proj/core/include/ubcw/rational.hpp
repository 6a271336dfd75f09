// Exact arithmetic: arbitrary-precision integers and rationals (GMP backed)
// plus the extended nonnegative rationals used for certified constants.
#pragma once

#include <gmpxx.h>

#include <string>

namespace ubcw {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; every construction from a
// numerator/denominator pair must go through here.  Invariant: lowest terms,
// denominator > 0.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den);

// Parses "p", "-p", or "p/q" (lowest terms not required on input).
Rat rat_from_string(const std::string& s);

// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

Rat rat_abs(const Rat& r);

Int factorial(int n);  // n < 0 is a precondition error

// Extended nonnegative rational with +infinity; infinity absorbs under
// addition, multiplication by nonzero, and max.
class XRat {
 public:
  XRat() : inf_(false), v_(0) {}
  XRat(const Rat& v) : inf_(false), v_(v) {}  // NOLINT: implicit by design
  XRat(long v) : inf_(false), v_(v) {}        // NOLINT
  static XRat infinity();

  bool is_infinite() const { return inf_; }
  const Rat& finite_value() const;  // precondition: finite

  XRat operator+(const XRat& o) const;
  XRat operator*(const XRat& o) const;
  bool operator==(const XRat& o) const;
  bool operator<(const XRat& o) const;
  bool operator<=(const XRat& o) const { return *this < o || *this == o; }

  std::string str() const;

 private:
  bool inf_;
  Rat v_;
};

XRat xmax(const XRat& a, const XRat& b);

}  // namespace ubcw
