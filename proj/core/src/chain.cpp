#include "ubcw/chain.hpp"

#include <set>

#include "ubcw/errors.hpp"

namespace ubcw {

Rat Chain::norm() const {
  Rat n = 0;
  for (const auto& [id, c] : coeffs) n += rat_abs(c);
  return n;
}

void Chain::set(const std::string& id, const Rat& c) {
  if (c == 0)
    coeffs.erase(id);
  else
    coeffs[id] = c;
}

Rat Chain::get(const std::string& id) const {
  auto it = coeffs.find(id);
  return it == coeffs.end() ? Rat(0) : it->second;
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.coeffs.empty()) return *this;
  if (q != other.q) throw PreconditionError("chain degree mismatch");
  for (const auto& [id, c] : other.coeffs) set(id, get(id) + c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (other.coeffs.empty()) return *this;
  if (q != other.q) throw PreconditionError("chain degree mismatch");
  for (const auto& [id, c] : other.coeffs) set(id, get(id) - c);
  return *this;
}

Chain Chain::operator*(const Rat& s) const {
  Chain out;
  out.q = q;
  if (s == 0) return out;
  for (const auto& [id, c] : coeffs) out.coeffs.emplace(id, c * s);
  return out;
}

Chain operator+(Chain a, const Chain& b) {
  a += b;
  return a;
}

Chain operator-(Chain a, const Chain& b) {
  a -= b;
  return a;
}

bool operator==(const Chain& a, const Chain& b) {
  return a.q == b.q ? a.coeffs == b.coeffs : (a.coeffs.empty() && b.coeffs.empty());
}

std::vector<Rat> to_dense(const Chain& c, const SemiSimplicialSet& X) {
  std::vector<Rat> v(c.q >= 0 ? X.count(c.q) : 1, Rat(0));
  for (const auto& [id, coef] : c.coeffs) {
    if (c.q < 0) {
      if (id != "*") throw PreconditionError("degree -1 chains live on '*'");
      v[0] = coef;
      continue;
    }
    int s = X.index_of(c.q, id);
    if (s < 0)
      throw PreconditionError("chain coefficient on unknown simplex '" + id + "'");
    v[s] = coef;
  }
  return v;
}

Chain from_dense(int q, const std::vector<Rat>& v, const SemiSimplicialSet& X) {
  Chain c;
  c.q = q;
  if (q < 0) {
    if (v.size() != 1) throw PreconditionError("degree -1 vector must have length 1");
    c.set("*", v[0]);
    return c;
  }
  if (static_cast<int>(v.size()) != X.count(q))
    throw PreconditionError("dense vector length mismatch");
  for (int s = 0; s < X.count(q); ++s) c.set(X.id_of(q, s), v[s]);
  return c;
}

Chain boundary(const Chain& c, const SemiSimplicialSet& X) {
  Chain out;
  out.q = c.q - 1;
  if (c.q < 0) {
    out.q = c.q - 1;
    return out;
  }
  if (c.q == 0) {
    Rat total = 0;
    for (const auto& [id, coef] : c.coeffs) {
      if (X.index_of(0, id) < 0)
        throw PreconditionError("boundary: unknown vertex '" + id + "'");
      total += coef;
    }
    out.set("*", total);
    return out;
  }
  for (const auto& [id, coef] : c.coeffs) {
    int s = X.index_of(c.q, id);
    if (s < 0) throw PreconditionError("boundary: unknown simplex '" + id + "'");
    for (int i = 0; i <= c.q; ++i) {
      const std::string& fid = X.id_of(c.q - 1, X.face(c.q, s, i));
      out.set(fid, out.get(fid) + (i % 2 == 0 ? coef : -coef));
    }
  }
  return out;
}

Rat norm_off(const Chain& c, const std::vector<std::string>& sub_ids) {
  std::set<std::string> sub(sub_ids.begin(), sub_ids.end());
  Rat n = 0;
  for (const auto& [id, coef] : c.coeffs)
    if (!sub.count(id)) n += rat_abs(coef);
  return n;
}

}  // namespace ubcw
