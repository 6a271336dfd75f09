// Evaluators for the certified constant calculus, with memoized recursions.
#include "ubcw/calculus.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "ubcw/errors.hpp"

namespace ubcw {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw PreconditionError(msg);
}

void require_constant(const XRat& k) {
  require(k.is_infinite() || !(k < XRat(0)),
          "constant arguments must be nonnegative");
}

XRat xl(long v) { return XRat(v); }

XRat xint(const Int& v) { return XRat(Rat(v)); }

Int pow2(long n) { return Int(1) << static_cast<unsigned long>(n); }

// Falling factorial a * (a-1) * ... * (a-k+1); zero once a factor hits zero.
Int falling(long a, long k) {
  Int res = 1;
  for (long t = 0; t < k; ++t) {
    if (a - t <= 0) return Int(0);
    res *= (a - t);
  }
  return res;
}

XRat r_three(long q, const XRat& kx, const XRat& ky) {
  return kx * (XRat(1) + ky * xl(q + 1));
}

XRat r_two(long q, const XRat& kx, const XRat& kp) {
  return xl(q + 2) * kp * kx + kx;
}

XRat r_one(long q, const XRat& ky, const XRat& kp) {
  return kp + ky + xl(q + 2) * kp * ky;
}

XRat r_fact(long q, const XRat& kp, const XRat& km) {
  return kp + km + xl(q + 2) * kp * km;
}

XRat r_mv(long q, const XRat& ky, const XRat& ky2, const XRat& kint) {
  // Degree-zero fillings split along components, so the intersection
  // constant only enters from degree one upward.
  if (q == 0) return ky + ky2;
  return (XRat(1) + xl(q + 1) * kint) * (ky + ky2);
}

XRat r_susp(long n, long q, const XRat& k) {
  if (n == 0) return k;
  long a = q + 1;
  XRat total = xint(pow2(n) * falling(a, n)) * k;
  Int sum = 0;
  for (long i = 1; i <= n; ++i) sum += pow2(i) * falling(a, i - 1);
  return total + xint(sum);
}

XRat r_cell(long p, long q, const XRat& kl) {
  return XRat(1) + xl(q + 1) * r_susp(p, q, kl);
}

XRat r_mt(long p, long q, const XRat& ky, const XRat& kl) {
  return r_one(q, ky, r_cell(p, q, kl));
}

XRat r_tl1(long q, long n, const XRat& kl) {
  XRat acc(0);
  for (long p = 0; p <= n; ++p) acc = r_fact(q, r_cell(p, q, kl), acc);
  return acc;
}

XRat r_tl2(long q, const XRat& kprev) {
  XRat mid = XRat(1) + xl(q + 1) * kprev;
  return xl(q + 2) * mid * xl(2 + 2 * (q + 2) * (q + 1) + 2 * (q + 1));
}

XRat r_ord(long n, const XRat& k);

XRat r_ord_star(long n, const XRat& k) {
  if (n <= 0) return XRat(0);
  XRat prev(1);
  for (long i = 1; i <= n; ++i) {
    XRat inner = r_ord(n - i - 1, xmax(XRat(1), k));
    XRat best(0);
    for (long q = 0; q < n; ++q)
      best = xmax(best, r_mv(q, XRat(1), prev, r_susp(i, q - 1, inner)));
    prev = best;
  }
  return prev;
}

XRat r_ord(long n, const XRat& k) {
  if (n <= 0) return XRat(0);
  XRat star = r_ord_star(n, k);
  XRat homotopy = XRat(2) * star;
  XRat best = homotopy;
  for (long step = 1; step < n; ++step) {
    homotopy = star * (XRat(2) + xl(n) * homotopy);
    best = xmax(best, homotopy);
  }
  return xint(factorial(static_cast<int>(n))) * best;
}

using GlMemo = std::map<std::pair<long, long>, XRat>;

XRat r_gl1_plus(long l, long sr, long m, long d, const XRat& k, GlMemo& memo) {
  if (d - m < 0) return XRat(0);
  auto key = std::make_pair(m, d);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  XRat base = (m == 1) ? k : r_gl1_plus(l, sr, m - 1, d - 1, k, memo);
  XRat acc = xl(d - m + 1) + base;
  long steps = l + sr - m;
  for (long r = 0; r < steps; ++r) {
    long range = (d - r - 2) - (m - 1);
    XRat link_plus(0);
    if (range >= 0) {
      link_plus = (m == 1) ? (xl(d - r - 2) + k)
                           : (xl(range + 1) +
                              r_gl1_plus(l, sr, m - 1, d - r - 2, k, memo));
    }
    XRat link(0);
    for (long q = 0; q <= d - m - 1; ++q)
      link = xmax(link, r_susp(m + r + 1, q, link_plus));
    XRat next(0);
    for (long q = 0; q <= d - m; ++q)
      next = xmax(next, r_mt(0, q, acc, link));
    acc = next;
  }
  memo.emplace(key, acc);
  return acc;
}

XRat r_gl1(long l, long sr, long m, long d, const XRat& k, GlMemo& memo) {
  if (d - 1 < 0) return XRat(0);
  XRat plus = r_gl1_plus(l, sr, m, d, k, memo);
  XRat best(0);
  for (long q = 0; q <= d - 1; ++q) best = xmax(best, r_susp(m, q, plus));
  return best;
}

XRat r_gl2(long l, long sr, long d, const XRat& k) {
  GlMemo memo;
  XRat branch1(0);
  if (d >= 0) {
    XRat acc = xl(d) + k;
    for (long r = 0; r < l + sr; ++r) {
      XRat link =
          (d >= 1) ? (xl(d) + r_gl1(l, sr, r + 1, d, k, memo)) : XRat(0);
      XRat next(0);
      for (long q = 0; q <= d; ++q) next = xmax(next, r_mt(0, q, acc, link));
      acc = next;
    }
    branch1 = acc;
  }
  XRat branch2(0);
  if (d + 1 >= 0) {
    auto lk = [&](long r) {
      if (d < 0) return XRat(0);
      return xl(d + 1) + r_gl1(l, sr, r + 1, d + 1, k, memo);
    };
    XRat doubled(0);
    for (long q = 0; q <= d + 1; ++q)
      doubled = xmax(doubled, r_tl2(q, lk(1)));
    XRat acc(0);
    for (long q = 0; q <= d + 1; ++q)
      acc = xmax(acc, r_mt(0, q, doubled, lk(0)));
    for (long r = 1; r < l + sr; ++r) {
      XRat next(0);
      for (long q = 0; q <= d + 1; ++q)
        next = xmax(next, r_mt(0, q, acc, lk(r)));
      acc = next;
    }
    branch2 = acc;
  }
  return xmax(branch1, branch2);
}

// The four mutually recursive unimodular-poset constants.  Each call site
// strictly decreases the size 2n - k (+1 for the augmented variants), and
// negative sizes are vacuous, so the recursion terminates.
std::mutex g_kfam_mutex;
std::map<std::array<long, 4>, XRat> g_kfam_memo;

XRat r_kfam(long branch, long n, long sr, long k) {
  {
    std::lock_guard<std::mutex> lock(g_kfam_mutex);
    auto it = g_kfam_memo.find({branch, n, sr, k});
    if (it != g_kfam_memo.end()) return it->second;
  }
  XRat result(0);
  switch (branch) {
    case 1: {
      if (n == 0) break;
      XRat best = r_kfam(3, n - 1, sr, 0);
      for (long kk = 1; kk <= n + 1 + sr; ++kk)
        best = xmax(best, r_kfam(4, n - 1, sr, kk));
      result = r_gl2(n + 1, sr, n - sr - 1, best);
      break;
    }
    case 2: {
      if (2 * n - k < 0) break;
      if (k == 0) {
        result = r_kfam(1, n, sr, 0);
        break;
      }
      if (n <= sr) break;
      XRat best = r_kfam(4, n - 1, sr, k);
      for (long kk = 1; kk <= n + 1 + sr; ++kk)
        best = xmax(best, r_kfam(4, n - 1, sr, k + kk));
      result = r_gl2(n + 1, sr, n - sr - 1 - k, best);
      break;
    }
    case 3: {
      XRat best(0);
      for (long kk = 1; kk <= n + 2 + sr; ++kk)
        best = xmax(best, r_kfam(2, n, sr, kk));
      result = r_gl2(n + 2, sr, n - sr - 1, best);
      break;
    }
    case 4: {
      if (2 * n - k + 1 < 0) break;
      if (k == 0) {
        result = r_kfam(3, n, sr, 0);
        break;
      }
      if (n <= sr) break;
      XRat best = r_kfam(4, n - 1, sr, k - 1);
      for (long kk = 1; kk <= n + 2 + sr; ++kk)
        best = xmax(best, r_kfam(4, n - 1, sr, kk + k - 1));
      result = r_gl2(n + 2, sr, n - sr - k, best);
      break;
    }
  }
  std::lock_guard<std::mutex> lock(g_kfam_mutex);
  g_kfam_memo.emplace(std::array<long, 4>{branch, n, sr, k}, result);
  return result;
}

std::mutex g_tits_mutex;
std::map<long, XRat> g_tits_memo;

XRat r_tits(long n) {
  if (n <= 2) return XRat(0);
  {
    std::lock_guard<std::mutex> lock(g_tits_mutex);
    auto it = g_tits_memo.find(n);
    if (it != g_tits_memo.end()) return it->second;
  }
  XRat smaller = r_tits(n - 1);
  XRat best(0);
  for (long q = 0; q <= n - 3; ++q) {
    XRat acc(1);
    for (long r = 0; r <= n - 2; ++r)
      acc = r_mt(0, q, acc, r == n - 2 ? smaller : XRat(1));
    best = xmax(best, acc);
  }
  std::lock_guard<std::mutex> lock(g_tits_mutex);
  g_tits_memo.emplace(n, best);
  return best;
}

std::mutex g_aut_mutex;
std::map<long, XRat> g_aut_memo;

XRat r_aut(long g) {
  if (g <= 3) return XRat(0);
  if (g <= 5) return XRat(2);
  {
    std::lock_guard<std::mutex> lock(g_aut_mutex);
    auto it = g_aut_memo.find(g);
    if (it != g_aut_memo.end()) return it->second;
  }
  long level = (g - 4) / 2;
  XRat prev = r_aut(g - 1);
  XRat deep(0);
  for (long p = 0; p <= g - 2; ++p) deep = xmax(deep, r_aut(g - p - 2));
  XRat k_one_sided(0), k_two_sided(0);
  for (long q = 0; q <= level; ++q) {
    k_one_sided = xmax(k_one_sided, r_tl1(q, level, prev));
    k_two_sided = xmax(k_two_sided, r_tl1(q, level, deep));
  }
  XRat help(0);
  for (long q = 0; q <= level; ++q)
    help = xmax(help, r_fact(q, r_fact(q, k_two_sided, k_one_sided), XRat(1)));
  XRat result = xmax(help, prev);
  std::lock_guard<std::mutex> lock(g_aut_mutex);
  g_aut_memo.emplace(g, result);
  return result;
}

CertifiedConstant make(const XRat& value, std::string rule,
                       std::vector<long> params, std::vector<XRat> scalars,
                       std::vector<CertifiedConstant> inputs = {}) {
  return CertifiedConstant{value, std::move(rule), std::move(params),
                           std::move(scalars), std::move(inputs)};
}

}  // namespace

CertifiedConstant k_three(long q, const XRat& k_x, const XRat& k_y) {
  require(q >= 0, "k_three: q must be nonnegative");
  require_constant(k_x);
  require_constant(k_y);
  return make(r_three(q, k_x, k_y), "k_three", {q}, {k_x, k_y});
}

CertifiedConstant k_two(long q, const XRat& k_x, const XRat& k_pair) {
  require(q >= 0, "k_two: q must be nonnegative");
  require_constant(k_x);
  require_constant(k_pair);
  return make(r_two(q, k_x, k_pair), "k_two", {q}, {k_x, k_pair});
}

CertifiedConstant k_one(long q, const XRat& k_y, const XRat& k_pair) {
  require(q >= 0, "k_one: q must be nonnegative");
  require_constant(k_y);
  require_constant(k_pair);
  return make(r_one(q, k_y, k_pair), "k_one", {q}, {k_y, k_pair});
}

CertifiedConstant k_fact(long q, const XRat& k_pair, const XRat& k_mid) {
  require(q >= 0, "k_fact: q must be nonnegative");
  require_constant(k_pair);
  require_constant(k_mid);
  return make(r_fact(q, k_pair, k_mid), "k_fact", {q}, {k_pair, k_mid});
}

CertifiedConstant k_mv(long q, const XRat& k_y, const XRat& k_y2,
                       const XRat& k_int_prev) {
  require(q >= 0, "k_mv: q must be nonnegative");
  require_constant(k_y);
  require_constant(k_y2);
  require_constant(k_int_prev);
  return make(r_mv(q, k_y, k_y2, k_int_prev), "k_mv", {q},
              {k_y, k_y2, k_int_prev});
}

CertifiedConstant k_susp(long n, long q, const XRat& k_shifted) {
  require(n >= 0, "k_susp: n must be nonnegative");
  require(q >= -1, "k_susp: q must be at least -1");
  require_constant(k_shifted);
  return make(r_susp(n, q, k_shifted), "k_susp", {n, q}, {k_shifted});
}

CertifiedConstant k_cell(long p, long q, const XRat& k_link) {
  require(p >= 0, "k_cell: p must be nonnegative");
  require(q >= 0, "k_cell: q must be nonnegative");
  require_constant(k_link);
  return make(r_cell(p, q, k_link), "k_cell", {p, q}, {k_link});
}

CertifiedConstant k_mt(long p, long q, const XRat& k_y, const XRat& k_link) {
  require(p >= 0, "k_mt: p must be nonnegative");
  require(q >= 0, "k_mt: q must be nonnegative");
  require_constant(k_y);
  require_constant(k_link);
  return make(r_mt(p, q, k_y, k_link), "k_mt", {p, q}, {k_y, k_link},
              {k_cell(p, q, k_link)});
}

CertifiedConstant k_retract_up(long q, const XRat& k_sub) {
  require(q >= 0, "k_retract_up: q must be nonnegative");
  require_constant(k_sub);
  return make(xl(q + 1) + k_sub, "k_retract_up", {q}, {k_sub});
}

CertifiedConstant k_retract_down(const XRat& k_ambient) {
  require_constant(k_ambient);
  return make(k_ambient, "k_retract_down", {}, {k_ambient});
}

CertifiedConstant k_sd_up(long q, const XRat& k_x) {
  require(q >= 0, "k_sd_up: q must be nonnegative");
  require_constant(k_x);
  return make(xint(factorial(static_cast<int>(q) + 1)) * k_x, "k_sd_up", {q},
              {k_x});
}

CertifiedConstant k_sd_down(long q, const XRat& k_sd) {
  require(q >= 0, "k_sd_down: q must be nonnegative");
  require_constant(k_sd);
  XRat value = xint(factorial(static_cast<int>(q) + 2)) +
               xint(factorial(static_cast<int>(q) + 1)) * k_sd;
  return make(value, "k_sd_down", {q}, {k_sd});
}

CertifiedConstant k_cone() { return make(XRat(1), "k_cone", {}, {}); }

CertifiedConstant k_tl1(long q, long n, const XRat& k_link) {
  require(q >= 0, "k_tl1: q must be nonnegative");
  require(n >= 0, "k_tl1: n must be nonnegative");
  require_constant(k_link);
  return make(r_tl1(q, n, k_link), "k_tl1", {q, n}, {k_link});
}

CertifiedConstant k_tl2(long q, const XRat& k_link_prev) {
  require(q >= 0, "k_tl2: q must be nonnegative");
  require_constant(k_link_prev);
  return make(r_tl2(q, k_link_prev), "k_tl2", {q}, {k_link_prev});
}

CertifiedConstant k_ord(long n, const XRat& k) {
  require_constant(k);
  CertifiedConstant star = k_ord_star(n, k);
  return make(r_ord(n, k), "k_ord", {n}, {k}, {star});
}

CertifiedConstant k_ord_star(long n, const XRat& k) {
  require_constant(k);
  return make(r_ord_star(n, k), "k_ord_star", {n}, {k});
}

CertifiedConstant k_gl1(long l, long sr, long m, long d, const XRat& k) {
  require(l >= 0, "k_gl1: l must be nonnegative");
  require(sr >= 1, "k_gl1: sr must be positive");
  require(m >= 1, "k_gl1: m must be positive");
  require_constant(k);
  GlMemo memo;
  return make(r_gl1(l, sr, m, d, k, memo), "k_gl1", {l, sr, m, d}, {k});
}

CertifiedConstant k_gl1_plus(long l, long sr, long m, long d, const XRat& k) {
  require(l >= 0, "k_gl1_plus: l must be nonnegative");
  require(sr >= 1, "k_gl1_plus: sr must be positive");
  require(m >= 1, "k_gl1_plus: m must be positive");
  require_constant(k);
  GlMemo memo;
  return make(r_gl1_plus(l, sr, m, d, k, memo), "k_gl1_plus", {l, sr, m, d},
              {k});
}

CertifiedConstant k_gl2(long l, long sr, long d, const XRat& k) {
  require(l >= 0, "k_gl2: l must be nonnegative");
  require(sr >= 1, "k_gl2: sr must be positive");
  require_constant(k);
  return make(r_gl2(l, sr, d, k), "k_gl2", {l, sr, d}, {k});
}

CertifiedConstant k1(long n, long sr) {
  require(n >= 0, "k1: n must be nonnegative");
  require(sr >= 1, "k1: sr must be positive");
  return make(r_kfam(1, n, sr, 0), "k1", {n, sr}, {});
}

CertifiedConstant k2(long n, long sr, long k) {
  require(n >= 0, "k2: n must be nonnegative");
  require(sr >= 1, "k2: sr must be positive");
  require(k >= 0, "k2: k must be nonnegative");
  return make(r_kfam(2, n, sr, k), "k2", {n, sr, k}, {});
}

CertifiedConstant k3(long n, long sr) {
  require(n >= 0, "k3: n must be nonnegative");
  require(sr >= 1, "k3: sr must be positive");
  return make(r_kfam(3, n, sr, 0), "k3", {n, sr}, {});
}

CertifiedConstant k4(long n, long sr, long k) {
  require(n >= 0, "k4: n must be nonnegative");
  require(sr >= 1, "k4: sr must be positive");
  require(k >= 0, "k4: k must be nonnegative");
  return make(r_kfam(4, n, sr, k), "k4", {n, sr, k}, {});
}

CertifiedConstant k_tits(long n) {
  require(n >= 0, "k_tits: n must be nonnegative");
  std::vector<CertifiedConstant> inputs;
  if (n > 3) inputs.push_back(k_tits(n - 1));
  return make(r_tits(n), "k_tits", {n}, {}, std::move(inputs));
}

CertifiedConstant k_aut(long g) {
  require(g >= 0, "k_aut: g must be nonnegative");
  std::vector<CertifiedConstant> inputs;
  if (g > 5) inputs.push_back(k_aut(g - 1));
  return make(r_aut(g), "k_aut", {g}, {}, std::move(inputs));
}

XRat replay(const CertifiedConstant& c) {
  const RuleInfo* rule = find_rule(c.rule);
  require(rule != nullptr, "replay: unknown rule name");
  require(static_cast<int>(c.params.size()) == rule->n_ints,
          "replay: wrong integer argument count");
  require(static_cast<int>(c.scalars.size()) == rule->n_scalars,
          "replay: wrong constant argument count");
  return rule->apply(c.params, c.scalars).value;
}

namespace {

void describe_into(const CertifiedConstant& c, int depth,
                   std::ostringstream& out) {
  for (int i = 0; i < depth; ++i) out << "  ";
  out << c.rule << "(";
  bool first = true;
  for (long p : c.params) {
    if (!first) out << ",";
    out << p;
    first = false;
  }
  if (!c.scalars.empty()) {
    out << "; ";
    first = true;
    for (const XRat& s : c.scalars) {
      if (!first) out << ",";
      out << s.str();
      first = false;
    }
  }
  out << ") = " << c.value.str() << "\n";
  for (const CertifiedConstant& child : c.inputs)
    describe_into(child, depth + 1, out);
}

std::vector<RuleInfo> build_rules() {
  using Ints = std::vector<long>;
  using Ks = std::vector<XRat>;
  std::vector<RuleInfo> rules;
  auto add = [&rules](const char* name, int ni, int ns,
                      std::function<CertifiedConstant(const Ints&, const Ks&)>
                          fn) {
    rules.push_back(RuleInfo{name, ni, ns, std::move(fn)});
  };
  add("k_three", 1, 2, [](const Ints& i, const Ks& k) {
    return k_three(i[0], k[0], k[1]);
  });
  add("k_two", 1, 2, [](const Ints& i, const Ks& k) {
    return k_two(i[0], k[0], k[1]);
  });
  add("k_one", 1, 2, [](const Ints& i, const Ks& k) {
    return k_one(i[0], k[0], k[1]);
  });
  add("k_fact", 1, 2, [](const Ints& i, const Ks& k) {
    return k_fact(i[0], k[0], k[1]);
  });
  add("k_mv", 1, 3, [](const Ints& i, const Ks& k) {
    return k_mv(i[0], k[0], k[1], k[2]);
  });
  add("k_susp", 2, 1, [](const Ints& i, const Ks& k) {
    return k_susp(i[0], i[1], k[0]);
  });
  add("k_cell", 2, 1, [](const Ints& i, const Ks& k) {
    return k_cell(i[0], i[1], k[0]);
  });
  add("k_mt", 2, 2, [](const Ints& i, const Ks& k) {
    return k_mt(i[0], i[1], k[0], k[1]);
  });
  add("k_retract_up", 1, 1, [](const Ints& i, const Ks& k) {
    return k_retract_up(i[0], k[0]);
  });
  add("k_retract_down", 0, 1, [](const Ints&, const Ks& k) {
    return k_retract_down(k[0]);
  });
  add("k_sd_up", 1, 1, [](const Ints& i, const Ks& k) {
    return k_sd_up(i[0], k[0]);
  });
  add("k_sd_down", 1, 1, [](const Ints& i, const Ks& k) {
    return k_sd_down(i[0], k[0]);
  });
  add("k_cone", 0, 0, [](const Ints&, const Ks&) { return k_cone(); });
  add("k_tl1", 2, 1, [](const Ints& i, const Ks& k) {
    return k_tl1(i[0], i[1], k[0]);
  });
  add("k_tl2", 1, 1, [](const Ints& i, const Ks& k) {
    return k_tl2(i[0], k[0]);
  });
  add("k_ord", 1, 1, [](const Ints& i, const Ks& k) {
    return k_ord(i[0], k[0]);
  });
  add("k_ord_star", 1, 1, [](const Ints& i, const Ks& k) {
    return k_ord_star(i[0], k[0]);
  });
  add("k_gl1", 4, 1, [](const Ints& i, const Ks& k) {
    return k_gl1(i[0], i[1], i[2], i[3], k[0]);
  });
  add("k_gl1_plus", 4, 1, [](const Ints& i, const Ks& k) {
    return k_gl1_plus(i[0], i[1], i[2], i[3], k[0]);
  });
  add("k_gl2", 3, 1, [](const Ints& i, const Ks& k) {
    return k_gl2(i[0], i[1], i[2], k[0]);
  });
  add("k1", 2, 0, [](const Ints& i, const Ks&) { return k1(i[0], i[1]); });
  add("k2", 3, 0,
      [](const Ints& i, const Ks&) { return k2(i[0], i[1], i[2]); });
  add("k3", 2, 0, [](const Ints& i, const Ks&) { return k3(i[0], i[1]); });
  add("k4", 3, 0,
      [](const Ints& i, const Ks&) { return k4(i[0], i[1], i[2]); });
  add("k_tits", 1, 0, [](const Ints& i, const Ks&) { return k_tits(i[0]); });
  add("k_aut", 1, 0, [](const Ints& i, const Ks&) { return k_aut(i[0]); });
  return rules;
}

}  // namespace

std::string describe(const CertifiedConstant& c) {
  std::ostringstream out;
  describe_into(c, 0, out);
  return out.str();
}

const std::vector<RuleInfo>& calculus_rules() {
  static const std::vector<RuleInfo> rules = build_rules();
  return rules;
}

const RuleInfo* find_rule(const std::string& name) {
  for (const RuleInfo& r : calculus_rules())
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace ubcw
