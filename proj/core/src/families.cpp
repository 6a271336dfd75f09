// Unimodular sequences, split injections, and Tits buildings over small rings.
#include "ubcw/families.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace ubcw {

namespace {

std::vector<long> prime_factors(long m) {
  std::vector<long> out;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) out.push_back(m);
  return out;
}

long mod_inverse(long a, long p) {  // p prime, a % p != 0
  long r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Column rank of an n x k matrix modulo the prime p; destroys its copy.
int rank_mod_p(std::vector<std::vector<long>> a, long p) {
  int n = static_cast<int>(a.size());
  int k = n > 0 ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < k && rank < n; ++col) {
    int piv = -1;
    for (int row = rank; row < n; ++row)
      if (a[row][col] % p != 0) {
        piv = row;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    long inv = mod_inverse(((a[rank][col] % p) + p) % p, p);
    for (int j = col; j < k; ++j) a[rank][j] = ((a[rank][j] % p) + p) % p * inv % p;
    for (int row = 0; row < n; ++row) {
      if (row == rank) continue;
      long f = ((a[row][col] % p) + p) % p;
      if (f == 0) continue;
      for (int j = col; j < k; ++j)
        a[row][j] = (((a[row][j] - f * a[rank][j]) % p) + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::string vec_id(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string seq_id(const std::vector<std::vector<long>>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += '|';
    out += vec_id(seq[i]);
  }
  return out;
}

std::vector<std::vector<long>> universe_vectors(const UnimodularPosetSpec& s) {
  long m = s.ring.m;
  std::vector<std::vector<long>> base;
  std::vector<long> v(s.n, 0);
  for (;;) {
    base.push_back(v);
    int i = s.n - 1;
    while (i >= 0 && v[i] == m - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  using U = UnimodularPosetSpec::Universe;
  if (s.universe == U::full) return base;
  std::vector<std::vector<long>> out;
  for (const auto& x : base) {
    std::vector<long> w = x;
    w.push_back(((s.delta % m) + m) % m);
    if (s.universe == U::union_shape) w.push_back(0);
    out.push_back(w);
  }
  if (s.universe == U::union_shape)
    for (const auto& x : base) {
      std::vector<long> w = x;
      w.push_back(((s.delta % m) + m) % m);
      w.push_back(1);
      out.push_back(w);
    }
  return out;
}

std::string spec_name(const UnimodularPosetSpec& s) {
  using U = UnimodularPosetSpec::Universe;
  std::ostringstream os;
  os << "U(" << s.ring.label() << "^" << s.n;
  if (s.universe != U::full) {
    os << "+d" << s.delta << "e" << (s.n + 1);
    if (s.universe == U::union_shape) os << "ue" << (s.n + 2);
  }
  if (!s.suffix.empty()) {
    os << ";v=";
    os << seq_id(s.suffix);
  }
  os << ")";
  return os.str();
}

// Enumerates every sequence of distinct universe vectors whose extension by
// the suffix stays unimodular; calls emit(seq) at each node.
void enumerate_sequences(
    const UnimodularPosetSpec& spec, const std::vector<std::vector<long>>& xs,
    const std::function<void(const std::vector<std::vector<long>>&)>& emit) {
  int ambient = spec.ambient();
  std::vector<std::vector<long>> seq;
  std::set<std::vector<long>> used;
  std::function<void()> extend = [&]() {
    for (const auto& x : xs) {
      if (used.count(x)) continue;
      seq.push_back(x);
      std::vector<std::vector<long>> test = seq;
      test.insert(test.end(), spec.suffix.begin(), spec.suffix.end());
      if (is_unimodular(spec.ring, ambient, test)) {
        emit(seq);
        used.insert(x);
        extend();
        used.erase(x);
      }
      seq.pop_back();
    }
  };
  extend();
}

// ---- subspace machinery over prime fields ----

using Rows = std::vector<std::vector<long>>;  // RREF basis rows

Rows rref(Rows rows, long p) {
  int nr = static_cast<int>(rows.size());
  int nc = nr > 0 ? static_cast<int>(rows[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (rows[i][c] % p != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    long inv = mod_inverse(((rows[r][c] % p) + p) % p, p);
    for (int j = 0; j < nc; ++j)
      rows[r][j] = ((rows[r][j] % p) + p) % p * inv % p;
    for (int i = 0; i < nr; ++i) {
      if (i == r) continue;
      long f = rows[i][c];
      if (f % p == 0) continue;
      for (int j = 0; j < nc; ++j)
        rows[i][j] = (((rows[i][j] - f * rows[r][j]) % p) + p) % p;
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool in_row_space(const Rows& base, std::vector<long> v, long p) {
  for (const auto& row : base) {
    int piv = 0;
    while (piv < static_cast<int>(row.size()) && row[piv] == 0) ++piv;
    if (piv == static_cast<int>(row.size())) continue;
    long f = ((v[piv] % p) + p) % p;
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = (((v[j] - f * row[j]) % p) + p) % p;
  }
  for (long x : v)
    if (x % p != 0) return false;
  return true;
}

bool subspace_leq(const Rows& a, const Rows& b, long p) {
  for (const auto& row : a)
    if (!in_row_space(b, row, p)) return false;
  return true;
}

Rows parse_rows(const std::string& id) {
  Rows out;
  std::istringstream rs(id);
  std::string row;
  while (std::getline(rs, row, '|')) {
    std::vector<long> v;
    std::istringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) v.push_back(std::stol(e));
    out.push_back(v);
  }
  return out;
}

// All rank-k RREF bases in F_p^n, lexicographic by (pivot columns, entries).
std::vector<Rows> enumerate_subspaces(long p, int n, int k) {
  std::vector<Rows> out;
  std::vector<int> pivots;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(pivots.size()) == k) {
      Rows rows(k, std::vector<long>(n, 0));
      for (int i = 0; i < k; ++i) rows[i][pivots[i]] = 1;
      // free positions: (i, j) with j > pivots[i], j not a pivot column
      std::vector<std::pair<int, int>> free_pos;
      std::set<int> pivset(pivots.begin(), pivots.end());
      for (int i = 0; i < k; ++i)
        for (int j = pivots[i] + 1; j < n; ++j)
          if (!pivset.count(j)) free_pos.emplace_back(i, j);
      std::function<void(std::size_t)> fill = [&](std::size_t t) {
        if (t == free_pos.size()) {
          out.push_back(rows);
          return;
        }
        for (long v = 0; v < p; ++v) {
          rows[free_pos[t].first][free_pos[t].second] = v;
          fill(t + 1);
        }
        rows[free_pos[t].first][free_pos[t].second] = 0;
      };
      fill(0);
      return;
    }
    for (int c = from; c < n; ++c) {
      pivots.push_back(c);
      choose(c + 1);
      pivots.pop_back();
    }
  };
  choose(0);
  return out;
}

void require_prime(long p) {
  if (p < 2) throw PreconditionError("field order must be a prime >= 2");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw PreconditionError("field order " + std::to_string(p) +
                              " is not prime");
}

Poset building_from_subspaces(const std::string& name, long p,
                              const std::vector<Rows>& spaces) {
  Poset t(name);
  for (const auto& s : spaces) t.add_element(seq_id(s));
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = 0; j < spaces.size(); ++j) {
      if (spaces[i].size() >= spaces[j].size()) continue;
      if (subspace_leq(spaces[i], spaces[j], p))
        t.add_less(static_cast<int>(i), static_cast<int>(j));
    }
  t.close();
  return t;
}

}  // namespace

FiniteRing ring_zmod(long m) {
  if (m < 2)
    throw PreconditionError("modulus must be >= 2, got " + std::to_string(m));
  return FiniteRing{m, false};
}

FiniteRing ring_field(long p) {
  require_prime(p);
  return FiniteRing{p, true};
}

bool is_unimodular(const FiniteRing& r, int n,
                   const std::vector<std::vector<long>>& vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != n)
      throw PreconditionError("vector dimension " + std::to_string(v.size()) +
                              " does not match ambient " + std::to_string(n));
  int k = static_cast<int>(vectors.size());
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<std::vector<long>> a(n, std::vector<long>(k, 0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) a[i][j] = ((vectors[j][i] % r.m) + r.m) % r.m;
  for (long p : prime_factors(r.m))
    if (rank_mod_p(a, p) != k) return false;
  return true;
}

Poset unimodular_poset(const UnimodularPosetSpec& spec, const Budget& budget) {
  if (spec.n < 1) throw PreconditionError("ambient rank must be >= 1");
  int ambient = spec.ambient();
  for (const auto& v : spec.suffix)
    if (static_cast<int>(v.size()) != ambient)
      throw PreconditionError("suffix vector '" + vec_id(v) +
                              "' does not have ambient dimension " +
                              std::to_string(ambient));
  std::string name = spec_name(spec);
  if (!is_unimodular(spec.ring, ambient, spec.suffix)) {
    Poset empty(name + "|infeasible-suffix");
    empty.close();
    return empty;
  }
  Poset f(name);
  std::vector<std::vector<std::vector<long>>> elements;
  enumerate_sequences(spec, universe_vectors(spec),
                      [&](const std::vector<std::vector<long>>& seq) {
                        if (elements.size() >= budget.max_vertices)
                          throw ResourceBudgetExceeded(
                              name + " exceeds max_vertices " +
                              std::to_string(budget.max_vertices));
                        elements.push_back(seq);
                        f.add_element(seq_id(seq));
                      });
  // generators: delete one position (covers of the subsequence order)
  for (const auto& seq : elements) {
    if (seq.size() < 2) continue;
    std::string whole = seq_id(seq);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      std::vector<std::vector<long>> sub = seq;
      sub.erase(sub.begin() + static_cast<long>(i));
      f.add_less(seq_id(sub), whole);
    }
  }
  f.close();
  return f;
}

SemiSimplicialSet split_injection_complex(const FiniteRing& r, int n,
                                          const Budget& budget) {
  if (n < 1) throw PreconditionError("ambient rank must be >= 1");
  UnimodularPosetSpec spec;
  spec.ring = r;
  spec.n = n;
  std::string name = "SI(" + r.label() + "^" + std::to_string(n) + ")";
  std::map<int, std::vector<std::vector<std::vector<long>>>> per_degree;
  std::size_t total = 0;
  enumerate_sequences(spec, universe_vectors(spec),
                      [&](const std::vector<std::vector<long>>& seq) {
                        if (++total > budget.max_simplices)
                          throw ResourceBudgetExceeded(
                              name + " exceeds max_simplices " +
                              std::to_string(budget.max_simplices));
                        per_degree[static_cast<int>(seq.size()) - 1].push_back(seq);
                      });
  SemiSimplicialSet x(name, true);
  for (const auto& [q, seqs] : per_degree)
    for (const auto& seq : seqs) {
      std::vector<int> faces;
      if (q >= 1)
        for (int i = 0; i <= q; ++i) {
          std::vector<std::vector<long>> sub = seq;
          sub.erase(sub.begin() + i);
          faces.push_back(x.index_of(q - 1, seq_id(sub)));
        }
      x.add_simplex(q, seq_id(seq), faces);
    }
  return x;
}

Poset tits_building_A(long p, int n) {
  require_prime(p);
  if (n < 2)
    throw PreconditionError("type-A building needs rank >= 2, got " +
                            std::to_string(n));
  std::vector<Rows> spaces;
  for (int k = 1; k <= n - 1; ++k)
    for (auto& s : enumerate_subspaces(p, n, k)) spaces.push_back(std::move(s));
  return building_from_subspaces(
      "TA(F" + std::to_string(p) + "," + std::to_string(n) + ")", p, spaces);
}

Poset tits_building_C(long p, int n) {
  require_prime(p);
  if (n < 1)
    throw PreconditionError("type-C building needs n >= 1, got " +
                            std::to_string(n));
  int dim = 2 * n;
  auto symp = [&](const std::vector<long>& x, const std::vector<long>& y) {
    long s = 0;
    for (int i = 0; i < n; ++i)
      s += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
    return ((s % p) + p) % p;
  };
  std::vector<Rows> spaces;
  for (int k = 1; k <= n; ++k)
    for (auto& s : enumerate_subspaces(p, dim, k)) {
      bool iso = true;
      for (std::size_t i = 0; i < s.size() && iso; ++i)
        for (std::size_t j = i + 1; j < s.size() && iso; ++j)
          if (symp(s[i], s[j]) != 0) iso = false;
      if (iso) spaces.push_back(std::move(s));
    }
  return building_from_subspaces(
      "TC(F" + std::to_string(p) + "," + std::to_string(n) + ")", p, spaces);
}

std::vector<SolomonTitsStep> solomon_tits_filtration(const Poset& t,
                                                     const std::string& line_id) {
  long p = 0;
  int n = 0;
  if (std::sscanf(t.name().c_str(), "TA(F%ld,%d)", &p, &n) != 2)
    throw PreconditionError("poset '" + t.name() +
                            "' is not a type-A building");
  int lx = t.index_of(line_id);
  if (lx < 0)
    throw PreconditionError("line '" + line_id + "' is not in the building");
  Rows line = parse_rows(line_id);
  if (line.size() != 1) throw PreconditionError("'" + line_id + "' is not a line");

  auto dim_of = [&](int i) {
    return static_cast<int>(parse_rows(t.id_of(i)).size());
  };
  auto contains_line = [&](int i) {
    return in_row_space(parse_rows(t.id_of(i)), line[0], p);
  };

  std::vector<SolomonTitsStep> steps;
  std::vector<int> members;
  for (int i = 0; i < t.size(); ++i)
    if (contains_line(i)) members.push_back(i);

  SolomonTitsStep s0;
  s0.r = 0;
  s0.q = t.induced(members, "Q0");
  for (int i : members) s0.added.push_back(t.id_of(i));
  steps.push_back(std::move(s0));

  std::set<int> in_prev(members.begin(), members.end());
  for (int r = 1; r <= n - 1; ++r) {
    std::vector<int> added;
    for (int i = 0; i < t.size(); ++i)
      if (!in_prev.count(i) && dim_of(i) <= r) added.push_back(i);

    SolomonTitsStep st;
    st.r = r;
    bool cones = true, isos = true;
    for (int px : added) {
      std::vector<int> link;
      for (int v : t.below(px))
        if (in_prev.count(v)) link.push_back(v);
      for (int v : t.above(px))
        if (in_prev.count(v)) link.push_back(v);
      if (r <= n - 2) {
        // cone test: some link element comparable to every other
        bool has_apex = false;
        for (int a : link) {
          bool apex = true;
          for (int b : link)
            if (b != a && !t.less(a, b) && !t.less(b, a)) {
              apex = false;
              break;
            }
          if (apex) {
            has_apex = true;
            break;
          }
        }
        if (!has_apex) cones = false;
      } else {
        // last stage: link = proper subspaces of P, rebased to F_p^{n-1}
        Rows base = parse_rows(t.id_of(px));
        std::map<std::string, std::string> rename;
        for (int v : link) {
          Rows rows = parse_rows(t.id_of(v));
          Rows coords;
          for (const auto& row : rows) {
            std::vector<long> alpha(base.size(), 0);
            for (std::size_t bi = 0; bi < base.size(); ++bi) {
              int piv = 0;
              while (base[bi][piv] == 0) ++piv;
              alpha[bi] = row[piv];
            }
            coords.push_back(alpha);
          }
          rename[t.id_of(v)] = seq_id(rref(coords, p));
        }
        Poset rel = t.induced(link, "L").relabeled(rename, "L");
        if (n - 1 >= 2) {
          if (!rel.equals(tits_building_A(p, n - 1))) isos = false;
        } else {
          if (rel.size() != 0) isos = false;
        }
      }
    }
    st.links_are_cones = r <= n - 2 && cones;
    st.links_isomorphic_to_lower_building = r == n - 1 && isos;
    for (int i : added) {
      in_prev.insert(i);
      members.push_back(i);
      st.added.push_back(t.id_of(i));
    }
    st.q = t.induced(members, "Q" + std::to_string(r));
    steps.push_back(std::move(st));
  }
  return steps;
}

}  // namespace ubcw
