// Concrete families: finite rings, unimodular posets, split-injection
// complexes, and Tits buildings with their star filtration.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "ubcw/builders.hpp"
#include "ubcw/errors.hpp"
#include "ubcw/families.hpp"
#include "ubcw/homology.hpp"

using namespace ubcw;
using ubcw_test::oc_of;

namespace {

// Oracle: V (n x k) is unimodular iff some A (k x n) has A.V = I_k.
// Brute force over all A; only viable for tiny sizes.
bool left_inverse_exists(const FiniteRing& r, int n,
                         const std::vector<std::vector<long>>& vectors) {
  int k = static_cast<int>(vectors.size());
  if (k == 0) return true;
  long cells = static_cast<long>(k) * n;
  long total = 1;
  for (long i = 0; i < cells; ++i) total *= r.m;
  for (long code = 0; code < total; ++code) {
    long c = code;
    std::vector<std::vector<long>> a(k, std::vector<long>(n));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) {
        a[i][j] = c % r.m;
        c /= r.m;
      }
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        long s = 0;
        for (int t = 0; t < n; ++t) s = r.add(s, r.mul(a[i][t], vectors[j][t]));
        if (s != (i == j ? 1 % r.m : 0)) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

std::vector<std::vector<long>> all_vectors(long m, int n) {
  std::vector<std::vector<long>> out;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  for (long code = 0; code < total; ++code) {
    long c = code;
    std::vector<long> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = c % m;
      c /= m;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("finite ring arithmetic and labels") {
  auto z6 = ring_zmod(6);
  CHECK(z6.add(4, 5) == 3);
  CHECK(z6.sub(1, 5) == 2);
  CHECK(z6.mul(4, 5) == 2);
  CHECK(z6.neg(0) == 0);
  CHECK(z6.neg(2) == 4);
  CHECK(z6.label() == "Z/6");
  CHECK(z6.stable_rank() == 1);
  CHECK_FALSE(z6.field);

  auto f3 = ring_field(3);
  CHECK(f3.field);
  CHECK(f3.label() == "F3");
  CHECK_THROWS_AS(ring_field(4), PreconditionError);
  CHECK_THROWS_AS(ring_zmod(1), PreconditionError);
}

TEST_CASE("is_unimodular agrees with the brute-force left-inverse oracle") {
  for (long m : {2L, 3L, 4L, 6L}) {
    auto r = m == 2 || m == 3 ? ring_field(m) : ring_zmod(m);
    auto universe = all_vectors(m, 2);
    for (const auto& v : universe)
      CHECK(is_unimodular(r, 2, {v}) == left_inverse_exists(r, 2, {v}));
  }
  auto z4 = ring_zmod(4);
  auto universe = all_vectors(4, 2);
  for (const auto& v : universe)
    for (const auto& w : universe)
      CHECK(is_unimodular(z4, 2, {v, w}) == left_inverse_exists(z4, 2, {v, w}));
}

TEST_CASE("more columns than the rank is never unimodular") {
  auto f2 = ring_field(2);
  CHECK_FALSE(is_unimodular(f2, 2, {{1, 0}, {0, 1}, {1, 1}}));
  CHECK(is_unimodular(f2, 2, {}));
}

TEST_CASE("unimodular posets over F2^2 and their order complex") {
  UnimodularPosetSpec spec;
  spec.ring = ring_field(2);
  spec.n = 2;
  auto p = unimodular_poset(spec);
  CHECK(p.size() == 9);  // 3 vectors + 6 ordered bases
  CHECK(p.height() == 1);
  CHECK(p.has("1,0"));
  CHECK(p.has("1,0|0,1"));
  CHECK(p.less(p.index_of("1,0"), p.index_of("1,0|0,1")));
  CHECK(p.less(p.index_of("0,1"), p.index_of("1,0|0,1")));

  auto oc = oc_of(p);
  CHECK(oc.count(0) == 9);
  CHECK(oc.count(1) == 12);
  auto h = reduced_betti(oc, 1);
  CHECK(h.betti[0] == 0);
  CHECK(h.betti[1] == 4);
}

TEST_CASE("poset chains never exceed the ambient rank") {
  for (long m : {2L, 3L, 4L}) {
    UnimodularPosetSpec spec;
    spec.ring = m == 4 ? ring_zmod(m) : ring_field(m);
    spec.n = 2;
    auto p = unimodular_poset(spec);
    CHECK(p.height() + 1 <= spec.n);
  }
}

TEST_CASE("affine universes extend by a marked coordinate") {
  UnimodularPosetSpec spec;
  spec.ring = ring_field(2);
  spec.n = 2;
  spec.universe = UnimodularPosetSpec::Universe::affine;
  CHECK(spec.ambient() == 3);
  auto p = unimodular_poset(spec);
  // 4 affine vectors, 12 ordered pairs, 24 ordered triples.
  CHECK(p.size() == 40);
  CHECK(p.height() == 2);
  CHECK(p.has("0,0,1"));
}

TEST_CASE("union universes cover two affine sheets") {
  UnimodularPosetSpec spec;
  spec.ring = ring_field(2);
  spec.n = 1;
  spec.universe = UnimodularPosetSpec::Universe::union_shape;
  CHECK(spec.ambient() == 3);
  auto p = unimodular_poset(spec);
  CHECK(p.size() > 0);
  CHECK(p.has("0,1,0"));
  CHECK(p.has("0,1,1"));
  CHECK(p.height() + 1 <= spec.n + 2);
}

TEST_CASE("suffix conditioning and infeasible suffixes") {
  UnimodularPosetSpec spec;
  spec.ring = ring_field(2);
  spec.n = 2;
  spec.suffix = {{0, 1}};
  auto p = unimodular_poset(spec);
  // Sequences w with (w, e_2) unimodular: w in {(1,0), (1,1)} and nothing longer.
  CHECK(p.size() == 2);
  CHECK(p.height() == 0);

  UnimodularPosetSpec dead = spec;
  dead.suffix = {{0, 0}};
  auto d = unimodular_poset(dead);
  CHECK(d.size() == 0);
  CHECK(d.name().find("|infeasible-suffix") != std::string::npos);

  UnimodularPosetSpec bad = spec;
  bad.suffix = {{0, 1, 0}};  // wrong ambient length
  CHECK_THROWS_AS(unimodular_poset(bad), PreconditionError);
}

TEST_CASE("poset budgets refuse early") {
  UnimodularPosetSpec spec;
  spec.ring = ring_field(3);
  spec.n = 2;
  Budget tiny;
  tiny.max_vertices = 5;
  CHECK_THROWS_AS(unimodular_poset(spec, tiny), ResourceBudgetExceeded);
}

TEST_CASE("split-injection complexes are regular with tuple counts") {
  auto f2 = ring_field(2);
  auto x = split_injection_complex(f2, 2);
  CHECK(x.validate().ok());
  CHECK(x.regular_flag());
  CHECK(x.count(0) == 3);
  CHECK(x.count(1) == 6);
  CHECK(x.dim() == 1);
  int e = x.index_of(1, "1,0|0,1");
  REQUIRE(e >= 0);
  CHECK(x.id_of(0, x.face(1, e, 0)) == "0,1");  // face i deletes vector i
  CHECK(x.id_of(0, x.face(1, e, 1)) == "1,0");
}

TEST_CASE("subdividing the split-injection complex recovers the poset") {
  for (long m : {2L, 3L}) {
    auto r = ring_field(m);
    auto x = split_injection_complex(r, 2);
    auto sd = barycentric_subdivision(x);
    std::map<std::string, std::string> strip;
    for (int i = 0; i < sd.size(); ++i) {
      const auto& id = sd.id_of(i);
      strip[id] = id.substr(id.find(':') + 1);
    }
    UnimodularPosetSpec spec;
    spec.ring = r;
    spec.n = 2;
    auto u = unimodular_poset(spec);
    CHECK(sd.relabeled(strip, u.name()).equals(u));
  }
}

TEST_CASE("type-A buildings list proper nontrivial subspaces") {
  auto t22 = tits_building_A(2, 2);
  CHECK(t22.size() == 3);
  CHECK(t22.height() == 0);

  auto t32 = tits_building_A(3, 2);
  CHECK(t32.size() == 4);

  auto t23 = tits_building_A(2, 3);
  CHECK(t23.size() == 14);  // 7 lines + 7 planes
  CHECK(t23.height() == 1);
  auto oc = oc_of(t23);
  CHECK(oc.count(1) == 21);  // incident line-plane flags
  auto h = reduced_betti(oc, 1);
  CHECK(h.betti[0] == 0);
  CHECK(h.betti[1] == 8);

  CHECK_THROWS_AS(tits_building_A(4, 2), PreconditionError);  // prime only
  CHECK_THROWS_AS(tits_building_A(2, 1), PreconditionError);  // no proper parts
}

TEST_CASE("type-A homology concentrates in the top flag degree") {
  auto h2 = reduced_betti(oc_of(tits_building_A(2, 2)), 0);
  CHECK(h2.betti[0] == 2);
}

TEST_CASE("type-C buildings collect nonzero isotropic subspaces") {
  auto c1 = tits_building_C(2, 1);
  CHECK(c1.size() == 3);
  auto h1 = reduced_betti(oc_of(c1), 0);
  CHECK(h1.betti[0] == 2);

  auto c2 = tits_building_C(2, 2);
  CHECK(c2.size() == 30);  // 15 isotropic lines + 15 Lagrangian planes
  auto oc = oc_of(c2);
  auto h2 = reduced_betti(oc, 1);
  CHECK(h2.betti[0] == 0);
  CHECK(h2.betti[1] == 16);
}

TEST_CASE("the star filtration flags cones below the top stage") {
  auto t = tits_building_A(2, 3);
  std::string line = "1,0,0";
  REQUIRE(t.has(line));
  auto steps = solomon_tits_filtration(t, line);
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].r == 0);
  CHECK(steps.back().q.size() == t.size());

  std::size_t added = steps[0].q.size();
  for (std::size_t i = 1; i < steps.size(); ++i) {
    CHECK_FALSE(steps[i].added.empty());
    added += steps[i].added.size();
  }
  CHECK(added == static_cast<std::size_t>(t.size()));

  CHECK(steps[1].links_are_cones);
  CHECK_FALSE(steps[1].links_isomorphic_to_lower_building);
  CHECK(steps[2].links_isomorphic_to_lower_building);
  CHECK_FALSE(steps[2].links_are_cones);

  CHECK_THROWS_AS(solomon_tits_filtration(t, "1,0,0|0,1,0"), PreconditionError);
}
