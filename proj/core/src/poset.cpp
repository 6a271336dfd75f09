#include "ubcw/poset.hpp"

#include <algorithm>
#include <queue>

#include "ubcw/errors.hpp"

namespace ubcw {

int Poset::add_element(const std::string& id) {
  if (index_.count(id)) throw PreconditionError("duplicate poset element '" + id + "'");
  int i = size();
  ids_.push_back(id);
  index_.emplace(id, i);
  gen_.emplace_back();
  closed_ = false;
  return i;
}

int Poset::index_of(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

void Poset::add_less(int a, int b) {
  if (a < 0 || a >= size() || b < 0 || b >= size())
    throw PreconditionError("relation with unknown element");
  if (a == b) throw PreconditionError("reflexive pair in strict order");
  gen_[a].push_back(b);
  closed_ = false;
}

void Poset::add_less(const std::string& a, const std::string& b) {
  int ia = index_of(a), ib = index_of(b);
  if (ia < 0) throw PreconditionError("unknown poset element '" + a + "'");
  if (ib < 0) throw PreconditionError("unknown poset element '" + b + "'");
  add_less(ia, ib);
}

void Poset::close() {
  if (closed_) return;
  int n = size();
  // Kahn topological order over the generator digraph; a cycle means the
  // generators do not define a strict order.
  std::vector<int> indeg(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b : gen_[a]) ++indeg[b];
  std::vector<int> topo;
  topo.reserve(n);
  std::queue<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  while (!ready.empty()) {
    int a = ready.front();
    ready.pop();
    topo.push_back(a);
    for (int b : gen_[a])
      if (--indeg[b] == 0) ready.push(b);
  }
  if (static_cast<int>(topo.size()) != n)
    throw PreconditionError("poset '" + name_ + "': relation generators contain a cycle");

  above_.assign(n, {});
  for (int t = n - 1; t >= 0; --t) {
    int a = topo[t];
    std::vector<int>& up = above_[a];
    for (int b : gen_[a]) {
      up.push_back(b);
      up.insert(up.end(), above_[b].begin(), above_[b].end());
    }
    std::sort(up.begin(), up.end());
    up.erase(std::unique(up.begin(), up.end()), up.end());
  }
  below_.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int b : above_[a]) below_[b].push_back(a);  // stays sorted: a ascends
  closed_ = true;
}

void Poset::require_closed() const {
  if (!closed_) throw PreconditionError("poset '" + name_ + "' not closed; call close()");
}

bool Poset::less(int a, int b) const {
  require_closed();
  const auto& up = above_.at(a);
  return std::binary_search(up.begin(), up.end(), b);
}

const std::vector<int>& Poset::above(int a) const {
  require_closed();
  return above_.at(a);
}

const std::vector<int>& Poset::below(int a) const {
  require_closed();
  return below_.at(a);
}

Poset Poset::induced(const std::vector<int>& elements, const std::string& name) const {
  require_closed();
  Poset out(name);
  std::vector<int> sorted(elements);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> old_to_new(size(), -1);
  for (int e : sorted) {
    if (e < 0 || e >= size()) throw PreconditionError("induced: element out of range");
    old_to_new[e] = out.add_element(ids_[e]);
  }
  for (int e : sorted)
    for (int b : above_[e])
      if (old_to_new[b] >= 0) out.add_less(old_to_new[e], old_to_new[b]);
  out.close();
  return out;
}

int Poset::maximum_of(const std::vector<int>& subset) const {
  require_closed();
  if (subset.empty()) return -1;
  int m = subset[0];
  for (int x : subset)
    if (less(m, x)) m = x;
  for (int x : subset)
    if (x != m && !less(x, m)) return -1;
  return m;
}

std::vector<int> Poset::linear_extension() const {
  require_closed();
  int n = size();
  // rank(x) = longest chain strictly below x; y < x implies |below(y)| <
  // |below(x)|, so ranks fill in below-size order.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return below_[a].size() < below_[b].size();
  });
  std::vector<int> rank(n, 0);
  for (int x : order)
    for (int y : below_[x]) rank[x] = std::max(rank[x], rank[y] + 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (rank[a] != rank[b]) return rank[a] < rank[b];
    return ids_[a] < ids_[b];
  });
  return order;
}

int Poset::height() const {
  require_closed();
  int h = -1;
  std::vector<int> order = linear_extension();
  std::vector<int> rank(size(), 0);
  for (int x : order) {
    for (int y : below_[x]) rank[x] = std::max(rank[x], rank[y] + 1);
    h = std::max(h, rank[x]);
  }
  return size() == 0 ? -1 : h;
}

bool Poset::equals(const Poset& other) const {
  require_closed();
  other.require_closed();
  if (size() != other.size()) return false;
  for (int a = 0; a < size(); ++a) {
    int oa = other.index_of(ids_[a]);
    if (oa < 0) return false;
    const auto& up = above_[a];
    const auto& oup = other.above_[oa];
    if (up.size() != oup.size()) return false;
    for (int b : up)
      if (!std::binary_search(oup.begin(), oup.end(), other.index_of(ids_[b])))
        return false;
  }
  return true;
}

Poset Poset::relabeled(const std::map<std::string, std::string>& m,
                       const std::string& name) const {
  Poset out(name);
  for (const auto& id : ids_) {
    auto it = m.find(id);
    if (it == m.end()) throw PreconditionError("relabeled: no image for '" + id + "'");
    out.add_element(it->second);
  }
  for (int a = 0; a < size(); ++a)
    for (int b : gen_[a]) out.add_less(a, b);
  if (closed_) out.close();
  return out;
}

static Poset induced_named(const Poset& ambient, std::vector<int> elems,
                           const std::string& suffix, int x) {
  return ambient.induced(elems, ambient.name() + suffix + "(" + ambient.id_of(x) + ")");
}

PosetLinks poset_link(const Poset& ambient, const std::vector<int>& sub, int x) {
  if (!ambient.closed()) throw PreconditionError("poset_link: ambient not closed");
  if (x < 0 || x >= ambient.size()) throw PreconditionError("poset_link: unknown element");
  std::vector<int> upw, downw, ups, downs, comp;
  for (int y : sub) {
    bool gt = ambient.less(x, y), lt = ambient.less(y, x);
    if (y == x || gt) upw.push_back(y);
    if (y == x || lt) downw.push_back(y);
    if (gt) ups.push_back(y);
    if (lt) downs.push_back(y);
    if (gt || lt) comp.push_back(y);
  }
  PosetLinks out;
  out.up_weak = induced_named(ambient, upw, "^+", x);
  out.down_weak = induced_named(ambient, downw, "^-", x);
  out.link_up = induced_named(ambient, ups, ".lk+", x);
  out.link_down = induced_named(ambient, downs, ".lk-", x);
  out.link = induced_named(ambient, comp, ".lk", x);
  return out;
}

PosetLinks poset_link(const Poset& poset, int x) {
  std::vector<int> all(poset.size());
  for (int i = 0; i < poset.size(); ++i) all[i] = i;
  return poset_link(poset, all, x);
}

PosetLinks poset_link(const Poset& poset, const std::string& x) {
  int i = poset.index_of(x);
  if (i < 0) throw PreconditionError("poset_link: unknown element '" + x + "'");
  return poset_link(poset, i);
}

}  // namespace ubcw
