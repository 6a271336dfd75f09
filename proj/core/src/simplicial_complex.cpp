#include "ubcw/simplicial_complex.hpp"

#include <algorithm>

#include "ubcw/errors.hpp"

namespace ubcw {

int SimplicialComplex::add_vertex(const std::string& id) {
  if (vertex_index_.count(id))
    throw PreconditionError("duplicate vertex '" + id + "'");
  int i = vertex_count();
  vertices_.push_back(id);
  vertex_index_.emplace(id, i);
  return i;
}

int SimplicialComplex::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  return it == vertex_index_.end() ? -1 : it->second;
}

std::vector<int> SimplicialComplex::simplex_key(
    const std::vector<std::string>& vertex_ids) const {
  std::vector<int> key;
  key.reserve(vertex_ids.size());
  for (const auto& id : vertex_ids) {
    int i = vertex_index(id);
    if (i < 0) throw PreconditionError("unknown vertex '" + id + "'");
    key.push_back(i);
  }
  std::sort(key.begin(), key.end());
  if (std::adjacent_find(key.begin(), key.end()) != key.end())
    throw PreconditionError("repeated vertex in simplex");
  return key;
}

void SimplicialComplex::add_simplex(std::vector<int> vertex_indices) {
  std::sort(vertex_indices.begin(), vertex_indices.end());
  if (std::adjacent_find(vertex_indices.begin(), vertex_indices.end()) !=
      vertex_indices.end())
    throw PreconditionError("repeated vertex in simplex");
  if (vertex_indices.empty()) throw PreconditionError("empty simplex");
  for (int i : vertex_indices)
    if (i < 0 || i >= vertex_count())
      throw PreconditionError("vertex index out of range");
  // Insert the simplex and all faces: iterate over nonempty subsets only
  // when the simplex is new (faces of known simplices are already present).
  if (simplices_.count(vertex_indices)) return;
  int k = static_cast<int>(vertex_indices.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> face;
    for (int j = 0; j < k; ++j)
      if (mask & (1u << j)) face.push_back(vertex_indices[j]);
    simplices_.insert(std::move(face));
  }
}

void SimplicialComplex::add_simplex_by_ids(const std::vector<std::string>& vertex_ids) {
  std::vector<int> key;
  key.reserve(vertex_ids.size());
  for (const auto& id : vertex_ids) {
    int i = vertex_index(id);
    if (i < 0) i = add_vertex(id);
    key.push_back(i);
  }
  add_simplex(std::move(key));
}

bool SimplicialComplex::has_simplex(const std::vector<int>& sorted) const {
  return simplices_.count(sorted) > 0;
}

bool SimplicialComplex::has_simplex_by_ids(const std::vector<std::string>& ids) const {
  return has_simplex(simplex_key(ids));
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

int SimplicialComplex::count(int q) const {
  int c = 0;
  for (const auto& s : simplices_)
    if (static_cast<int>(s.size()) == q + 1) ++c;
  return c;
}

static std::string simplex_id(const SimplicialComplex& X, const std::vector<int>& s) {
  std::string id;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) id += '|';
    id += X.vertex_id(s[i]);
  }
  return id;
}

SemiSimplicialSet SimplicialComplex::to_semi_simplicial() const {
  SemiSimplicialSet out(name_, true);
  int d = dim();
  for (int q = 0; q <= d; ++q) {
    for (const auto& s : simplices_) {
      if (static_cast<int>(s.size()) != q + 1) continue;
      std::vector<int> faces;
      if (q >= 1) {
        faces.resize(q + 1);
        for (int i = 0; i <= q; ++i) {
          std::vector<int> f(s);
          f.erase(f.begin() + i);
          faces[i] = out.index_of(q - 1, simplex_id(*this, f));
        }
      }
      out.add_simplex(q, simplex_id(*this, s), faces);
    }
  }
  return out;
}

SimplicialComplex SimplicialComplex::link(const std::vector<std::string>& sigma_ids) const {
  std::vector<int> sigma = simplex_key(sigma_ids);
  if (!has_simplex(sigma))
    throw PreconditionError("link: simplex not in complex");
  SimplicialComplex out(name_ + ".lk");
  // Keep the ambient vertex order on the link's vertex set.
  std::vector<int> old_to_new(vertex_count(), -1);
  for (const auto& tau : simplices_) {
    std::vector<int> merged;
    std::set_union(tau.begin(), tau.end(), sigma.begin(), sigma.end(),
                   std::back_inserter(merged));
    if (merged.size() != tau.size() + sigma.size()) continue;  // not disjoint
    if (!has_simplex(merged)) continue;
    for (int v : tau)
      if (old_to_new[v] < 0) old_to_new[v] = 1;  // mark
  }
  for (int v = 0; v < vertex_count(); ++v)
    if (old_to_new[v] == 1) old_to_new[v] = out.add_vertex(vertices_[v]);
  for (const auto& tau : simplices_) {
    std::vector<int> merged;
    std::set_union(tau.begin(), tau.end(), sigma.begin(), sigma.end(),
                   std::back_inserter(merged));
    if (merged.size() != tau.size() + sigma.size()) continue;
    if (!has_simplex(merged)) continue;
    std::vector<int> key;
    for (int v : tau) key.push_back(old_to_new[v]);
    out.add_simplex(std::move(key));
  }
  return out;
}

SimplicialComplex SimplicialComplex::star(const std::vector<std::string>& sigma_ids) const {
  std::vector<int> sigma = simplex_key(sigma_ids);
  if (!has_simplex(sigma))
    throw PreconditionError("star: simplex not in complex");
  SimplicialComplex out(name_ + ".st");
  std::vector<std::string> ids;
  // Same vertex order as the ambient complex, restricted to the star.
  std::set<int> used;
  for (const auto& tau : simplices_) {
    std::vector<int> merged;
    std::set_union(tau.begin(), tau.end(), sigma.begin(), sigma.end(),
                   std::back_inserter(merged));
    if (has_simplex(merged)) used.insert(tau.begin(), tau.end());
  }
  std::vector<int> old_to_new(vertex_count(), -1);
  for (int v : used) old_to_new[v] = out.add_vertex(vertices_[v]);
  for (const auto& tau : simplices_) {
    std::vector<int> merged;
    std::set_union(tau.begin(), tau.end(), sigma.begin(), sigma.end(),
                   std::back_inserter(merged));
    if (!has_simplex(merged)) continue;
    std::vector<int> key;
    for (int v : merged) key.push_back(old_to_new[v]);
    out.add_simplex(std::move(key));
  }
  return out;
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& X,
                                          const SimplicialComplex& Y,
                                          const std::string& name) {
  SimplicialComplex out(name);
  for (int v = 0; v < X.vertex_count(); ++v) out.add_vertex(X.vertex_id(v));
  int off = X.vertex_count();
  for (int v = 0; v < Y.vertex_count(); ++v) out.add_vertex(Y.vertex_id(v));
  for (const auto& s : X.simplices_) out.add_simplex(s);
  for (const auto& t : Y.simplices_) {
    std::vector<int> shifted(t);
    for (int& v : shifted) v += off;
    out.add_simplex(shifted);
    for (const auto& s : X.simplices_) {
      std::vector<int> merged(s);
      merged.insert(merged.end(), shifted.begin(), shifted.end());
      out.add_simplex(std::move(merged));
    }
  }
  return out;
}

std::string SimplicialComplex::cone_apex() const {
  for (int a = 0; a < vertex_count(); ++a) {
    bool apex = true;
    for (const auto& s : simplices_) {
      std::vector<int> merged(s);
      if (!std::binary_search(merged.begin(), merged.end(), a)) {
        merged.push_back(a);
        std::sort(merged.begin(), merged.end());
      }
      if (!has_simplex(merged)) {
        apex = false;
        break;
      }
    }
    if (apex && vertex_count() > 0) return vertices_[a];
  }
  return "";
}

}  // namespace ubcw
