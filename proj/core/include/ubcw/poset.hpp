// Finite posets: strict partial orders closed transitively from generator
// pairs, with induced subposets, links, and linear extensions.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace ubcw {

class Poset {
 public:
  Poset() = default;
  explicit Poset(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int size() const { return static_cast<int>(ids_.size()); }
  int add_element(const std::string& id);
  int index_of(const std::string& id) const;  // -1 when absent
  const std::string& id_of(int i) const { return ids_.at(i); }
  bool has(const std::string& id) const { return index_of(id) >= 0; }

  // Records the generator a < b; the full strict order is the transitive
  // closure, computed on close().
  void add_less(int a, int b);
  void add_less(const std::string& a, const std::string& b);

  // Computes up-sets and down-sets from the generators.  Throws when the
  // generators contain a cycle (not a strict order).  Idempotent.
  void close();
  bool closed() const { return closed_; }

  bool less(int a, int b) const;  // strict; requires close()
  bool leq(int a, int b) const { return a == b || less(a, b); }
  const std::vector<int>& above(int a) const;  // sorted strict up-set
  const std::vector<int>& below(int a) const;  // sorted strict down-set

  // Subposet on the given elements with the induced order; already closed.
  Poset induced(const std::vector<int>& elements, const std::string& name) const;

  // Maximum of a subset: the m in subset with x <= m for all x, or -1.
  int maximum_of(const std::vector<int>& subset) const;

  // Element order sorted by (longest-chain-below length, id); a linear
  // extension of the order, used to order order-complex vertices.
  std::vector<int> linear_extension() const;
  int height() const;  // longest chain length minus one; -1 when empty

  // Same elements (by id) and same relation.
  bool equals(const Poset& other) const;

  // Copy with every id replaced through the map; map must cover all ids
  // injectively.
  Poset relabeled(const std::map<std::string, std::string>& m,
                  const std::string& name) const;

 private:
  std::string name_;
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> gen_;
  bool closed_ = false;
  std::vector<std::vector<int>> above_;
  std::vector<std::vector<int>> below_;

  void require_closed() const;
};

// The poset links of x in the subposet S of the ambient poset P:
// weak up/down sets S^+(x), S^-(x) and strict ones Lk^+, Lk^-, plus
// Lk = the induced subposet on all strict comparables (every element of
// Lk^- sits below every element of Lk^+ via x).
struct PosetLinks {
  Poset up_weak;    // S^+(x) = {y in S : y >= x}
  Poset down_weak;  // S^-(x) = {y in S : y <= x}
  Poset link_up;    // {y in S : y > x}
  Poset link_down;  // {y in S : y < x}
  Poset link;       // induced on {y in S : y < x or y > x}
};

PosetLinks poset_link(const Poset& ambient, const std::vector<int>& sub, int x);
PosetLinks poset_link(const Poset& poset, int x);  // sub = all elements
PosetLinks poset_link(const Poset& poset, const std::string& x);

}  // namespace ubcw
