// Quadratic modules, hyperbolic modules, and hyperbolic split-injection
// complexes with their links and orthogonal complements.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "ubcw/builders.hpp"
#include "ubcw/errors.hpp"
#include "ubcw/quadratic.hpp"

using namespace ubcw;

namespace {

std::string vec_id(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string morphism_id(const std::vector<long>& x, const std::vector<long>& y) {
  return vec_id(x) + ";" + vec_id(y);
}

// Simplices of a complex as sets of vertex ids, optionally relabeled.
std::set<std::set<std::string>> simplex_id_sets(
    const SimplicialComplex& c, const std::map<std::string, std::string>& m) {
  std::set<std::set<std::string>> out;
  for (const auto& s : c.simplices()) {
    std::set<std::string> ids;
    for (int v : s) {
      const auto& id = c.vertex_id(v);
      auto it = m.find(id);
      ids.insert(it == m.end() ? id : it->second);
    }
    out.insert(ids);
  }
  return out;
}

std::vector<long> add_vectors(const FiniteRing& r, const std::vector<long>& a,
                              const std::vector<long>& b) {
  std::vector<long> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.add(a[i], b[i]);
  return out;
}

}  // namespace

TEST_CASE("form parameters enforce the wedge condition") {
  auto f3 = ring_field(3);
  // eps = -1 over F3: {a + a} is everything, so Lambda must be all of F3.
  CHECK(symplectic_form_parameter(f3).lambda == std::vector<long>{0, 1, 2});
  CHECK(minimal_form_parameter(f3, -1).lambda == std::vector<long>{0, 1, 2});
  CHECK_THROWS_AS(form_parameter(f3, -1, {0}), PreconditionError);
  // eps = +1 over F3: the eps-kernel is {0}, so Lambda = {0} is forced.
  CHECK(form_parameter(f3, 1, {0}).lambda == std::vector<long>{0});
  CHECK_THROWS_AS(form_parameter(f3, 1, {0, 1, 2}), PreconditionError);

  auto f2 = ring_field(2);
  CHECK(minimal_form_parameter(f2, -1).lambda == std::vector<long>{0});
  CHECK(symplectic_form_parameter(f2).lambda == std::vector<long>{0, 1});
  CHECK(form_parameter(f2, -1, {0, 1}).lambda == std::vector<long>{0, 1});

  auto z4 = ring_zmod(4);
  CHECK(minimal_form_parameter(z4, -1).lambda == std::vector<long>{0, 2});
  CHECK_THROWS_AS(form_parameter(z4, -1, {0}), PreconditionError);
  CHECK_THROWS_AS(form_parameter(z4, -1, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(form_parameter(f3, 2, {0}), PreconditionError);
}

TEST_CASE("hyperbolic modules carry the interleaved gram matrix") {
  auto f3 = ring_field(3);
  auto h = hyperbolic_module(symplectic_form_parameter(f3), f3, 1);
  CHECK(h.rank == 2);
  CHECK(h.validate().ok());
  CHECK(h.nondegenerate());
  CHECK(h.lambda_of({1, 0}, {0, 1}) == 1);
  CHECK(h.lambda_of({0, 1}, {1, 0}) == 2);  // eps = -1
  CHECK(h.mu_raw({1, 0}) == 0);
  CHECK(h.mu_raw({1, 1}) == 1);  // cross term lambda(e, f)
  CHECK(h.mu_vanishes({1, 1}));  // Lambda is everything
  CHECK(h.in_lambda(2));

  auto h2 = hyperbolic_module(symplectic_form_parameter(f3), f3, 2);
  CHECK(h2.rank == 4);
  CHECK(h2.lambda_of({1, 0, 0, 0}, {0, 0, 0, 1}) == 0);  // different block pairs
  CHECK(h2.nondegenerate());

  CHECK_THROWS_AS(hyperbolic_module(symplectic_form_parameter(f3), f3, -1),
                  PreconditionError);
}

TEST_CASE("the quadratic refinement polarizes over lambda") {
  auto f3 = ring_field(3);
  auto h = hyperbolic_module(minimal_form_parameter(f3, 1), f3, 1);
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long> x = {coef(rng), coef(rng)};
    std::vector<long> y = {coef(rng), coef(rng)};
    long lhs = h.mu_raw(add_vectors(f3, x, y));
    long rhs = f3.add(f3.add(h.mu_raw(x), h.mu_raw(y)), h.lambda_of(x, y));
    CHECK(h.in_lambda(f3.sub(lhs, rhs)));
  }
}

TEST_CASE("validation catches broken symmetry and degenerate grams") {
  auto f3 = ring_field(3);
  auto h = hyperbolic_module(symplectic_form_parameter(f3), f3, 1);
  auto broken = h;
  broken.gram[1][0] = 1;  // must be eps * gram[0][1] = 2
  CHECK_FALSE(broken.validate().ok());

  auto degenerate = h;
  degenerate.gram[0][1] = 0;
  degenerate.gram[1][0] = 0;
  CHECK(degenerate.validate().ok());
  CHECK_FALSE(degenerate.nondegenerate());
}

TEST_CASE("the rank-one hyperbolic complex over F3 has 24 isolated morphisms") {
  auto f3 = ring_field(3);
  auto h = hyperbolic_module(symplectic_form_parameter(f3), f3, 1);
  auto hc = hyperbolic_split_injection_complex(h);
  CHECK(hc.morphisms.size() == 24);
  CHECK(hc.s.vertex_count() == 24);
  CHECK(hc.s.dim() == 0);
  CHECK_FALSE(hc.outside_theorem_hypotheses);
  CHECK(witt_index(h) == 1);
  CHECK(hc.s.dim() + 1 == witt_index(h));
  CHECK(equal_complexes(ord_construction(hc.s), hc.x));
}

TEST_CASE("the genus-two complex over F2 pairs morphisms orthogonally") {
  auto f2 = ring_field(2);
  auto h2 = hyperbolic_module(symplectic_form_parameter(f2), f2, 2);
  auto hc = hyperbolic_split_injection_complex(h2);
  CHECK(hc.outside_theorem_hypotheses);
  CHECK(hc.s.vertex_count() == 120);
  CHECK(hc.s.count(1) == 360);
  CHECK(hc.s.dim() == 1);
  CHECK(witt_index(h2) == 2);
  CHECK(hc.x.count(0) == 120);
  CHECK(hc.x.count(1) == 720);  // both orders of every edge
  CHECK(hc.x.validate().ok());
  CHECK(equal_complexes(ord_construction(hc.s), hc.x));
}

TEST_CASE("links of morphism vertices match orthogonal complements") {
  auto f2 = ring_field(2);
  auto h2 = hyperbolic_module(symplectic_form_parameter(f2), f2, 2);
  auto hc = hyperbolic_split_injection_complex(h2);
  const auto& [x, y] = hc.morphisms.front();
  auto comp = orthogonal_complement(h2, x, y);
  CHECK(comp.module.rank == 2);
  CHECK(comp.module.nondegenerate());
  CHECK(witt_index(comp.module) == 1);

  auto comp_hc = hyperbolic_split_injection_complex(comp.module);
  CHECK(comp_hc.s.vertex_count() == 6);  // rank-one complex over F2

  // Push complement morphisms into ambient coordinates through the basis.
  std::map<std::string, std::string> into_ambient;
  for (const auto& [cx, cy] : comp_hc.morphisms) {
    auto lift = [&](const std::vector<long>& v) {
      std::vector<long> out(h2.rank, 0);
      for (int i = 0; i < comp.module.rank; ++i)
        for (int j = 0; j < h2.rank; ++j)
          out[j] = f2.add(out[j], f2.mul(v[i], comp.basis[i][j]));
      return out;
    };
    into_ambient[morphism_id(cx, cy)] = morphism_id(lift(cx), lift(cy));
  }

  auto link = hc.s.link({morphism_id(x, y)});
  CHECK(simplex_id_sets(comp_hc.s, into_ambient) == simplex_id_sets(link, {}));
}

TEST_CASE("hyperbolic complexes over Z4 build with the minimal parameter") {
  auto z4 = ring_zmod(4);
  auto h = hyperbolic_module(minimal_form_parameter(z4, -1), z4, 1);
  CHECK(h.validate().ok());
  CHECK(h.nondegenerate());
  auto hc = hyperbolic_split_injection_complex(h);
  CHECK(hc.s.vertex_count() > 0);
  CHECK(hc.x.validate().ok());
  CHECK(equal_complexes(ord_construction(hc.s), hc.x));
}

TEST_CASE("witt index searches obey their node budget") {
  auto f2 = ring_field(2);
  auto h2 = hyperbolic_module(symplectic_form_parameter(f2), f2, 2);
  Budget tiny;
  tiny.max_search_nodes = 1;
  CHECK_THROWS_AS(hyperbolic_split_injection_complex(h2, tiny), ResourceBudgetExceeded);
}

TEST_CASE("orthogonal complements require a prime field") {
  auto z4 = ring_zmod(4);
  auto h = hyperbolic_module(minimal_form_parameter(z4, -1), z4, 1);
  auto hc = hyperbolic_split_injection_complex(h);
  REQUIRE_FALSE(hc.morphisms.empty());
  const auto& [x, y] = hc.morphisms.front();
  CHECK_THROWS_AS(orthogonal_complement(h, x, y), PreconditionError);
}
