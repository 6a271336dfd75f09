// Ordered simplicial complexes: vertex set with a fixed linear order,
// simplices as vertex subsets, closed under taking faces.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ubcw/semi_simplicial.hpp"

namespace ubcw {

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int add_vertex(const std::string& id);  // appends to the vertex order
  int vertex_index(const std::string& id) const;  // -1 when absent
  const std::string& vertex_id(int i) const { return vertices_.at(i); }

  // Inserts the simplex spanned by the given vertices together with all of
  // its faces.  Vertices may come in any order; they are sorted by the
  // vertex order.  Repeated vertices are a precondition error.
  void add_simplex_by_ids(const std::vector<std::string>& vertex_ids);
  void add_simplex(std::vector<int> vertex_indices);

  bool has_simplex(const std::vector<int>& sorted_vertex_indices) const;
  bool has_simplex_by_ids(const std::vector<std::string>& vertex_ids) const;

  int dim() const;
  int count(int q) const;  // number of q-simplices
  std::size_t total_simplices() const { return simplices_.size(); }
  const std::set<std::vector<int>>& simplices() const { return simplices_; }

  // Sorted vertex-index tuple for ids given in any order; throws on unknown
  // or repeated vertices.
  std::vector<int> simplex_key(const std::vector<std::string>& vertex_ids) const;

  // Semi-simplicial set with one q-simplex per q-element subset; the i-th
  // face deletes the i-th vertex in the vertex order.  Simplex ids join the
  // vertex ids with '|'.  The result is regular.
  SemiSimplicialSet to_semi_simplicial() const;

  // Vertices not in sigma together with sigma span a simplex.  Vertex order
  // inherited.  Throws when sigma is not a simplex.
  SimplicialComplex link(const std::vector<std::string>& sigma_ids) const;
  // star = sigma * link(sigma), as a subcomplex.
  SimplicialComplex star(const std::vector<std::string>& sigma_ids) const;

  // Join: every simplex sigma_X sqcup sigma_Y (either part may be empty,
  // not both); X's vertices come before Y's in the order.
  static SimplicialComplex join(const SimplicialComplex& X, const SimplicialComplex& Y,
                                const std::string& name);

  // A vertex a with sigma cup {a} a simplex for every simplex sigma;
  // returns its id, or empty string when there is none.
  std::string cone_apex() const;

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::map<std::string, int> vertex_index_;
  std::set<std::vector<int>> simplices_;  // sorted index tuples, nonempty
};

}  // namespace ubcw
