#include "ubcw/semi_simplicial.hpp"

#include <algorithm>
#include <set>

#include "ubcw/errors.hpp"

namespace ubcw {

int SemiSimplicialSet::dim() const {
  for (int q = static_cast<int>(ids_.size()) - 1; q >= 0; --q)
    if (!ids_[q].empty()) return q;
  return -1;
}

int SemiSimplicialSet::count(int q) const {
  if (q < 0 || q >= static_cast<int>(ids_.size())) return 0;
  return static_cast<int>(ids_[q].size());
}

std::size_t SemiSimplicialSet::total_simplices() const {
  std::size_t t = 0;
  for (const auto& d : ids_) t += d.size();
  return t;
}

int SemiSimplicialSet::add_simplex(int q, const std::string& id,
                                   const std::vector<int>& faces) {
  if (q < 0) throw PreconditionError("negative degree");
  if (q >= 1 && static_cast<int>(faces.size()) != q + 1)
    throw PreconditionError("simplex in degree " + std::to_string(q) + " needs " +
                            std::to_string(q + 1) + " faces");
  if (static_cast<int>(ids_.size()) <= q) {
    ids_.resize(q + 1);
    index_.resize(q + 1);
    faces_.resize(q + 1);
  }
  if (index_[q].count(id))
    throw PreconditionError("duplicate simplex id '" + id + "' in degree " +
                            std::to_string(q));
  for (int f : faces)
    if (f < 0 || f >= count(q - 1))
      throw PreconditionError("face index out of range for simplex '" + id + "'");
  int s = static_cast<int>(ids_[q].size());
  ids_[q].push_back(id);
  index_[q].emplace(id, s);
  faces_[q].push_back(q >= 1 ? faces : std::vector<int>{});
  return s;
}

bool SemiSimplicialSet::has(int q, const std::string& id) const {
  if (q < 0 || q >= static_cast<int>(index_.size())) return false;
  return index_[q].count(id) > 0;
}

int SemiSimplicialSet::index_of(int q, const std::string& id) const {
  if (q < 0 || q >= static_cast<int>(index_.size())) return -1;
  auto it = index_[q].find(id);
  return it == index_[q].end() ? -1 : it->second;
}

const std::string& SemiSimplicialSet::id_of(int q, int s) const {
  return ids_.at(q).at(s);
}

const std::vector<std::string>& SemiSimplicialSet::ids(int q) const {
  static const std::vector<std::string> kEmpty;
  if (q < 0 || q >= static_cast<int>(ids_.size())) return kEmpty;
  return ids_[q];
}

int SemiSimplicialSet::face(int q, int s, int i) const {
  if (q < 1 || q > dim()) throw PreconditionError("face: degree out of range");
  if (i < 0 || i > q) throw PreconditionError("face: index out of range");
  return faces_.at(q).at(s).at(i);
}

std::pair<int, int> SemiSimplicialSet::face_by_positions(
    int q, int s, const std::vector<int>& keep) const {
  std::vector<bool> keep_mask(q + 1, false);
  for (int p : keep) {
    if (p < 0 || p > q) throw PreconditionError("face_by_positions: bad position");
    keep_mask[p] = true;
  }
  int cq = q, cs = s;
  for (int p = q; p >= 0; --p) {
    if (!keep_mask[p]) {
      cs = face(cq, cs, p);
      --cq;
    }
  }
  return {cq, cs};
}

std::vector<int> SemiSimplicialSet::vertices_of(int q, int s) const {
  std::vector<int> vs(q + 1);
  for (int j = 0; j <= q; ++j) vs[j] = face_by_positions(q, s, {j}).second;
  return vs;
}

ValidationReport SemiSimplicialSet::validate() const {
  ValidationReport rep;
  int d = dim();
  // d_i d_j = d_{j-1} d_i for i < j, checked on every simplex of degree >= 2.
  for (int q = 2; q <= d; ++q) {
    for (int s = 0; s < count(q); ++s) {
      for (int j = 1; j <= q; ++j) {
        for (int i = 0; i < j; ++i) {
          int a = face(q - 1, face(q, s, j), i);
          int b = face(q - 1, face(q, s, i), j - 1);
          if (a != b)
            rep.issues.push_back("identity d_" + std::to_string(i) + " d_" +
                                 std::to_string(j) + " != d_" + std::to_string(j - 1) +
                                 " d_" + std::to_string(i) + " on " + id_of(q, s) +
                                 " (degree " + std::to_string(q) + ")");
        }
      }
    }
  }
  if (regular_) {
    for (int q = 1; q <= d; ++q) {
      for (int s = 0; s < count(q); ++s) {
        std::set<int> distinct;
        for (int i = 0; i <= q; ++i) distinct.insert(face(q, s, i));
        if (static_cast<int>(distinct.size()) != q + 1)
          rep.issues.push_back("regularity: simplex " + id_of(q, s) + " (degree " +
                               std::to_string(q) + ") has repeated codimension-1 faces");
      }
    }
  }
  return rep;
}

SparseIntMat SemiSimplicialSet::boundary_matrix(int q) const {
  if (q < 1 || q > dim()) throw PreconditionError("boundary_matrix: degree out of range");
  SparseIntMat m(count(q - 1), count(q));
  for (int s = 0; s < count(q); ++s) {
    for (int i = 0; i <= q; ++i) {
      m.col[s].emplace_back(face(q, s, i), (i % 2 == 0) ? Int(1) : Int(-1));
    }
    normalize_column(m.col[s]);
  }
  return m;
}

SparseIntMat SemiSimplicialSet::augmentation_matrix() const {
  if (empty()) throw PreconditionError("augmentation of empty complex");
  SparseIntMat m(1, count(0));
  for (int s = 0; s < count(0); ++s) m.col[s].emplace_back(0, Int(1));
  return m;
}

SemiSimplicialSet SemiSimplicialSet::canonicalized() const {
  SemiSimplicialSet out(name_, regular_);
  int d = dim();
  std::vector<std::vector<int>> old_to_new(d + 1);
  for (int q = 0; q <= d; ++q) {
    std::vector<int> order(count(q));
    for (int i = 0; i < count(q); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ids_[q][a] < ids_[q][b]; });
    old_to_new[q].resize(count(q));
    for (int pos = 0; pos < count(q); ++pos) old_to_new[q][order[pos]] = pos;
    for (int pos = 0; pos < count(q); ++pos) {
      int s = order[pos];
      std::vector<int> fs;
      if (q >= 1) {
        fs.resize(q + 1);
        for (int i = 0; i <= q; ++i) fs[i] = old_to_new[q - 1][faces_[q][s][i]];
      }
      out.add_simplex(q, ids_[q][s], fs);
    }
  }
  return out;
}

SemiSimplicialSet SemiSimplicialSet::relabeled(
    const std::map<std::string, std::string>& map,
    const std::string& new_name) const {
  SemiSimplicialSet out(new_name, regular_);
  for (int q = 0; q <= dim(); ++q)
    for (int s = 0; s < count(q); ++s) {
      auto it = map.find(ids_[q][s]);
      if (it == map.end())
        throw PreconditionError("relabel map misses id '" + ids_[q][s] + "'");
      out.add_simplex(q, it->second,
                      q >= 1 ? faces_[q][s] : std::vector<int>{});
    }
  return out;
}

bool equal_complexes(const SemiSimplicialSet& a, const SemiSimplicialSet& b) {
  if (a.dim() != b.dim()) return false;
  for (int q = 0; q <= a.dim(); ++q) {
    if (a.count(q) != b.count(q)) return false;
    for (int s = 0; s < a.count(q); ++s) {
      int t = b.index_of(q, a.id_of(q, s));
      if (t < 0) return false;
      for (int i = 0; q >= 1 && i <= q; ++i)
        if (a.id_of(q - 1, a.face(q, s, i)) != b.id_of(q - 1, b.face(q, t, i)))
          return false;
    }
  }
  return true;
}

}  // namespace ubcw
