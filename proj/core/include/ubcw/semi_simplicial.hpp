// Semi-simplicial sets: degree-indexed simplex sets with face maps
// d_i d_j = d_{j-1} d_i for i < j.  The universal carrier for every complex
// in the workbench.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ubcw/matrix.hpp"

namespace ubcw {

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

class SemiSimplicialSet {
 public:
  SemiSimplicialSet() = default;
  explicit SemiSimplicialSet(std::string name, bool regular = false)
      : name_(std::move(name)), regular_(regular) {}

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  bool regular_flag() const { return regular_; }
  void set_regular_flag(bool r) { regular_ = r; }

  // Dimension is the largest degree with simplices; -1 when empty.
  int dim() const;
  bool empty() const { return dim() < 0; }
  int count(int q) const;
  std::size_t total_simplices() const;

  // Adds a q-simplex with the given identifier and, for q >= 1, its q+1
  // faces as indices into degree q-1.  Returns the new index.
  int add_simplex(int q, const std::string& id, const std::vector<int>& faces = {});

  bool has(int q, const std::string& id) const;
  int index_of(int q, const std::string& id) const;  // -1 when absent
  const std::string& id_of(int q, int s) const;
  const std::vector<std::string>& ids(int q) const;

  // i-th face (0 <= i <= q) of the s-th q-simplex, as an index in degree q-1.
  int face(int q, int s, int i) const;

  // Iteratively deletes the positions NOT in keep (given as a sorted strict
  // subset of {0..q}), highest first; returns (degree, index).
  std::pair<int, int> face_by_positions(int q, int s, const std::vector<int>& keep) const;

  // Ordered vertex list (v_0, ..., v_q) as indices into degree 0.
  std::vector<int> vertices_of(int q, int s) const;

  // Checks every simplicial identity and, when the regular flag is set, that
  // every simplex has pairwise distinct codimension-1 faces.
  ValidationReport validate() const;

  // del_q: C_q -> C_{q-1} as a signed incidence matrix, 1 <= q <= dim.
  // Columns index q-simplices, rows (q-1)-simplices.
  SparseIntMat boundary_matrix(int q) const;

  // Augmentation row (1 x count(0)): every vertex maps to 1.  This is the
  // degree-0 differential of the reduced complex.
  SparseIntMat augmentation_matrix() const;

  // Copy with ids sorted per degree and face indices remapped; canonical
  // form for serialization and isomorphism checks.
  SemiSimplicialSet canonicalized() const;

  // Copy with every id rewritten through `map` (which must cover all ids).
  SemiSimplicialSet relabeled(const std::map<std::string, std::string>& map,
                              const std::string& new_name) const;

 private:
  std::string name_;
  bool regular_ = false;
  std::vector<std::vector<std::string>> ids_;
  std::vector<std::map<std::string, int>> index_;
  // faces_[q][s] has q+1 entries for q >= 1; faces_[0] is empty per simplex.
  std::vector<std::vector<std::vector<int>>> faces_;
};

// Same simplices and same faces, compared by id (insertion order ignored).
bool equal_complexes(const SemiSimplicialSet& a, const SemiSimplicialSet& b);

}  // namespace ubcw
