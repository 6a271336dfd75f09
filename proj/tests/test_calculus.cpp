// Certified constant calculus: pinned values, replayability, monotonicity,
// infinity handling, and the stability-range formulas.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "ubcw/calculus.hpp"
#include "ubcw/errors.hpp"
#include "ubcw/rational.hpp"
#include "ubcw/stable_range.hpp"

using namespace ubcw;

namespace {

// Admissible integer-argument ranges per rule, for randomized checks.
std::vector<std::pair<long, long>> int_ranges(const std::string& name) {
  if (name == "k_susp") return {{0, 3}, {-1, 4}};
  if (name == "k_cell" || name == "k_mt") return {{0, 3}, {0, 4}};
  if (name == "k_tl1") return {{0, 3}, {0, 3}};
  if (name == "k_ord" || name == "k_ord_star") return {{0, 3}};
  if (name == "k_gl1" || name == "k_gl1_plus")
    return {{0, 3}, {1, 2}, {1, 3}, {-2, 4}};
  if (name == "k_gl2") return {{0, 3}, {1, 2}, {-2, 3}};
  if (name == "k1" || name == "k3") return {{0, 2}, {1, 2}};
  if (name == "k2" || name == "k4") return {{0, 2}, {1, 2}, {0, 3}};
  if (name == "k_tits") return {{0, 5}};
  if (name == "k_aut") return {{0, 7}};
  if (name == "k_cone" || name == "k_retract_down") return {};
  return {{0, 4}};  // single degree argument
}

XRat random_scalar(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 12);
  long den = 1 + static_cast<long>(rng() % 5);
  return XRat(make_rat(num, den));
}

}  // namespace

TEST_CASE("pair-transfer rules match their closed forms") {
  CHECK(k_three(2, XRat(3), XRat(5)).value == XRat(3 * (1 + 5 * (2 + 1))));
  CHECK(k_two(1, XRat(2), XRat(3)).value == XRat((1 + 2) * 3 * 2 + 2));
  CHECK(k_one(1, XRat(2), XRat(3)).value == XRat(3 + 2 + (1 + 2) * 3 * 2));
  CHECK(k_fact(0, XRat(1), XRat(1)).value == XRat(4));
  // Symmetric in the two scalars.
  CHECK(k_fact(2, XRat(3), XRat(7)).value == k_fact(2, XRat(7), XRat(3)).value);
}

TEST_CASE("union rule pins") {
  CHECK(k_mv(0, XRat(3), XRat(4), XRat(9)).value == XRat(7));  // intersection ignored
  CHECK(k_mv(1, XRat(1), XRat(1), XRat(1)).value == XRat(6));
  CHECK(k_mv(2, XRat(0), XRat(0), XRat(5)).value == XRat(0));
}

TEST_CASE("suspension rule pins and shape") {
  CHECK(k_susp(0, 2, XRat(make_rat(7, 3))).value == XRat(make_rat(7, 3)));
  CHECK(k_susp(1, 0, XRat(0)).value == XRat(2));
  CHECK(k_susp(1, 1, XRat(1)).value == XRat(6));
  CHECK(k_susp(2, 1, XRat(0)).value == XRat(10));
  CHECK(k_susp(1, -1, XRat(5)).value == XRat(2 * 0 * 5 + 2));  // degree clamp
  for (long q = 0; q <= 3; ++q)
    CHECK(k_susp(0, q, XRat(4)).value == XRat(4));
}

TEST_CASE("cell attachment and the Morse-type composite") {
  CHECK(k_cell(0, 2, XRat(1)).value == XRat(4));
  for (long q = 0; q <= 3; ++q)
    for (long kk : {0L, 1L, 7L}) {
      XRat expected(kk + (q + 2) * (q + 2) * kk + 2 + q);
      CHECK(k_mt(0, q, XRat(kk), XRat(1)).value == expected);
    }
  CHECK(k_mt(0, 1, XRat(7), XRat(1)).value == XRat(73));
}

TEST_CASE("retract, subdivision, and cone rules") {
  CHECK(k_retract_up(2, XRat(5)).value == XRat(8));
  CHECK(k_retract_down(XRat(9)).value == XRat(9));
  CHECK(k_sd_up(1, XRat(1)).value == XRat(2));
  CHECK(k_sd_up(2, XRat(3)).value == XRat(18));
  CHECK(k_sd_down(1, XRat(0)).value == XRat(6));
  CHECK(k_sd_down(2, XRat(1)).value == XRat(24 + 6));
  CHECK(k_cone().value == XRat(1));
}

TEST_CASE("two-level filtration rules") {
  CHECK(k_tl2(0, XRat(0)).value == XRat(16));
  CHECK(k_tl2(1, XRat(0)).value == XRat(54));
  CHECK(k_tl1(0, 0, XRat(0)).value ==
        k_fact(0, k_cell(0, 0, XRat(0)).value, XRat(0)).value);
}

TEST_CASE("ord-construction transfer pins") {
  for (long kk : {0L, 1L, 7L}) CHECK(k_ord(1, XRat(kk)).value == XRat(4));
  CHECK(k_ord(0, XRat(5)).value == XRat(0));
  CHECK(k_ord(2, XRat(make_rat(1, 2))).value == XRat(164164));
  CHECK(k_ord_star(0, XRat(3)).value == XRat(0));
}

TEST_CASE("general-linear recursion pins") {
  for (long sr = 1; sr <= 3; ++sr) CHECK(k1(0, sr).value == XRat(0));
  CHECK(k1(1, 1).value == XRat(445));
  CHECK(k1(2, 1).value == XRat(Rat(Int("34181572214885"))));
  for (long n = 0; n <= 2; ++n)
    for (long sr = 1; sr <= 2; ++sr) CHECK(k2(n, sr, 0).value == k1(n, sr).value);
  // Vacuous ranges collapse to zero.
  CHECK(k2(2, 2, 1).value == XRat(0));  // n <= sr with columns removed
  CHECK(k4(1, 1, 2).value == XRat(0));
  CHECK(k_gl2(1, 1, -3, XRat(5)).value == XRat(0));
  CHECK(k_gl1(0, 1, 1, -1, XRat(3)).value == XRat(0));
}

TEST_CASE("spherical building and automorphism recursions") {
  CHECK(k_tits(0).value == XRat(0));
  CHECK(k_tits(2).value == XRat(0));
  CHECK(k_tits(3).value == XRat(22));
  CHECK(k_tits(4).value == XRat(18133));
  CHECK(k_aut(0).value == XRat(0));
  CHECK(k_aut(3).value == XRat(0));
  CHECK(k_aut(4).value == XRat(2));
  CHECK(k_aut(5).value == XRat(2));
  CHECK(k_aut(6).value == XRat(1398101));
}

TEST_CASE("infinity flows through every additive slot") {
  XRat inf = XRat::infinity();
  CHECK(k_one(0, inf, XRat(1)).value.is_infinite());
  CHECK(k_mv(1, XRat(1), XRat(1), inf).value.is_infinite());
  CHECK(k_susp(1, -1, inf).value == XRat(2));  // clamped factor kills it
  CHECK(k_susp(1, 1, inf).value.is_infinite());
  CHECK(k_sd_down(1, inf).value.is_infinite());
  CHECK(k_mt(0, 0, XRat(1), inf).value.is_infinite());
  // the ord bound is universal: the input constant only reaches level <= 0
  // leaves of the recursion, so even an infinite argument is absorbed
  CHECK(k_ord(1, inf).value == XRat(4));
  CHECK(k_ord(2, inf).value == k_ord(2, XRat(0)).value);
  CHECK_FALSE(k_ord(2, inf).value.is_infinite());
}

TEST_CASE("rules refuse out-of-domain arguments") {
  CHECK_THROWS_AS(k_three(-1, XRat(1), XRat(1)), PreconditionError);
  CHECK_THROWS_AS(k_susp(-1, 0, XRat(1)), PreconditionError);
  CHECK_THROWS_AS(k_susp(0, -2, XRat(1)), PreconditionError);
  CHECK_THROWS_AS(k_gl1(0, 0, 1, 1, XRat(1)), PreconditionError);
  CHECK_THROWS_AS(k1(-1, 1), PreconditionError);
  CHECK_THROWS_AS(k_tits(-1), PreconditionError);
}

TEST_CASE("the registry lists every rule once with correct arities") {
  const auto& rules = calculus_rules();
  CHECK(rules.size() == 26);
  std::set<std::string> names;
  for (const auto& r : rules) {
    CHECK(names.insert(r.name).second);
    CHECK(int_ranges(r.name).size() == static_cast<std::size_t>(r.n_ints));
  }
  CHECK(find_rule("k_tits") != nullptr);
  CHECK(find_rule("k_tits")->n_ints == 1);
  CHECK(find_rule("k_tits")->n_scalars == 0);
  CHECK(find_rule("nonsense") == nullptr);
}

TEST_CASE("every rule is monotone in each scalar slot") {
  std::mt19937_64 rng(0xC0FFEE);
  for (const auto& rule : calculus_rules()) {
    if (rule.n_scalars == 0) continue;
    auto ranges = int_ranges(rule.name);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<long> ints;
      for (auto [lo, hi] : ranges)
        ints.push_back(lo + static_cast<long>(rng() % (hi - lo + 1)));
      std::vector<XRat> a;
      for (int i = 0; i < rule.n_scalars; ++i) a.push_back(random_scalar(rng));
      auto b = a;
      int slot = static_cast<int>(rng() % rule.n_scalars);
      if (rng() % 8 == 0)
        b[slot] = XRat::infinity();
      else
        b[slot] = b[slot] + random_scalar(rng);
      INFO(rule.name << " slot " << slot);
      auto va = rule.apply(ints, a).value;
      auto vb = rule.apply(ints, b).value;
      CHECK(va <= vb);
    }
  }
}

TEST_CASE("integer-only rules are nonnegative and replayable") {
  std::mt19937_64 rng(0xBEEF);
  for (const auto& rule : calculus_rules()) {
    auto ranges = int_ranges(rule.name);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long> ints;
      for (auto [lo, hi] : ranges)
        ints.push_back(lo + static_cast<long>(rng() % (hi - lo + 1)));
      std::vector<XRat> ks;
      for (int i = 0; i < rule.n_scalars; ++i) ks.push_back(random_scalar(rng));
      auto c = rule.apply(ints, ks);
      CHECK_FALSE(c.value < XRat(0));
      CHECK(replay(c) == c.value);
      CHECK(c.rule == rule.name);
      CHECK(describe(c).find(rule.name) == 0);
    }
  }
}

TEST_CASE("replay recurses through recorded sub-derivations") {
  auto c = k_tits(4);
  REQUIRE_FALSE(c.inputs.empty());
  CHECK(replay(c) == XRat(18133));
  for (const auto& child : c.inputs) CHECK(replay(child) == child.value);

  auto tampered = c;
  tampered.value = XRat(1);
  CHECK_FALSE(replay(tampered) == tampered.value);

  auto renamed = c;
  renamed.rule = "unknown-rule";
  CHECK_THROWS_AS(replay(renamed), PreconditionError);

  auto short_args = c;
  short_args.params.clear();
  CHECK_THROWS_AS(replay(short_args), PreconditionError);
}

TEST_CASE("describe renders one indented line per node") {
  auto c = k_mt(0, 1, XRat(7), XRat(1));
  auto text = describe(c);
  CHECK(text.find("k_mt(0,1; 7,1) = 73") != std::string::npos);
  CHECK(text.find("\n  k_cell") != std::string::npos);
}

TEST_CASE("general-linear stable ranges match the closed forms") {
  auto r = stable_range_gl(10, 1, 3);
  CHECK(r.gamma_tilde == 10 - 6 - 1 + 1);
  CHECK(r.iso);
  CHECK(r.inj);
  auto edge = stable_range_gl(8, 1, 4);  // 2q = n - sr + 1: just past iso
  CHECK_FALSE(edge.iso);
  CHECK(edge.inj);
  auto gone = stable_range_gl(8, 1, 6);
  CHECK_FALSE(gone.inj);
  CHECK_THROWS_AS(stable_range_gl(-1, 1, 0), PreconditionError);
  CHECK_THROWS_AS(stable_range_gl(3, 0, 0), PreconditionError);
  CHECK_THROWS_AS(stable_range_gl(3, 1, -1), PreconditionError);
}

TEST_CASE("automorphism stable ranges match the closed forms") {
  auto r = stable_range_aut(11, 3);
  CHECK(r.tau_tilde == 11 - 6 - 2);
  CHECK(r.gamma_tilde == (11 - 6 - 3) / 2);
  CHECK(r.iso);
  auto r2 = stable_range_aut(11, 4);
  CHECK(r2.iso);  // 2q = n - 3 sits on the boundary
  CHECK(r2.gamma_tilde == 0);
  CHECK(r2.tau_tilde == 1);
  auto past = stable_range_aut(11, 5);
  CHECK_FALSE(past.iso);
  CHECK(past.inj);  // 2q = n - 1 still injects
  // Negative shifted values floor toward minus infinity.
  auto low = stable_range_aut(2, 1);
  CHECK(low.gamma_tilde == -2);  // floor((2-2-3)/2) = floor(-3/2)
  CHECK_THROWS_AS(stable_range_aut(-1, 0), PreconditionError);
}
