#include "ubcw/rational.hpp"

#include "ubcw/errors.hpp"

namespace ubcw {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat rat_from_string(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return make_rat(Int(s), Int(1));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw PreconditionError("not a rational: '" + s + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Int factorial(int n) {
  if (n < 0) throw PreconditionError("factorial of negative number");
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

XRat XRat::infinity() {
  XRat x;
  x.inf_ = true;
  return x;
}

const Rat& XRat::finite_value() const {
  if (inf_) throw PreconditionError("finite_value of infinity");
  return v_;
}

XRat XRat::operator+(const XRat& o) const {
  if (inf_ || o.inf_) return infinity();
  return XRat(Rat(v_ + o.v_));
}

XRat XRat::operator*(const XRat& o) const {
  // 0 * infinity is 0: an absent term never turns a bound infinite.
  if (inf_ && !o.inf_ && o.v_ == 0) return XRat(0);
  if (o.inf_ && !inf_ && v_ == 0) return XRat(0);
  if (inf_ || o.inf_) return infinity();
  return XRat(Rat(v_ * o.v_));
}

bool XRat::operator==(const XRat& o) const {
  if (inf_ != o.inf_) return false;
  return inf_ || v_ == o.v_;
}

bool XRat::operator<(const XRat& o) const {
  if (inf_) return false;
  if (o.inf_) return true;
  return v_ < o.v_;
}

std::string XRat::str() const { return inf_ ? "inf" : rat_to_string(v_); }

XRat xmax(const XRat& a, const XRat& b) { return a < b ? b : a; }

}  // namespace ubcw
