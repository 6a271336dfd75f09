// Shared builders for the test suites.
#pragma once

#include <string>

#include "ubcw/builders.hpp"
#include "ubcw/families.hpp"
#include "ubcw/poset.hpp"
#include "ubcw/semi_simplicial.hpp"
#include "ubcw/simplicial_complex.hpp"

namespace ubcw_test {

inline ubcw::SemiSimplicialSet path_complex(int n) {
  ubcw::SimplicialComplex c("path" + std::to_string(n));
  for (int i = 0; i <= n; ++i) c.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i)
    c.add_simplex_by_ids({std::to_string(i), std::to_string(i + 1)});
  return c.to_semi_simplicial();
}

inline ubcw::SemiSimplicialSet oc_of(const ubcw::Poset& p) {
  return ubcw::order_complex(p).to_semi_simplicial();
}

// Two facets of the tetrahedron plus its full 1-skeleton: the overlap of
// the horns at vertices 0 and 1.
inline ubcw::SemiSimplicialSet horn_overlap() {
  ubcw::SimplicialComplex c("bD3cap");
  for (int i = 0; i < 4; ++i) c.add_vertex(std::to_string(i));
  c.add_simplex_by_ids({"0", "1", "3"});
  c.add_simplex_by_ids({"0", "1", "2"});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      c.add_simplex_by_ids({std::to_string(i), std::to_string(j)});
  return c.to_semi_simplicial();
}

inline ubcw::SemiSimplicialSet two_points() {
  ubcw::SemiSimplicialSet x("two-points");
  x.add_simplex(0, "a");
  x.add_simplex(0, "b");
  return x;
}

}  // namespace ubcw_test
