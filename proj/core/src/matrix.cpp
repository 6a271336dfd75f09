#include "ubcw/matrix.hpp"

#include <map>

#include "ubcw/errors.hpp"

namespace ubcw {

namespace {

template <typename T>
void normalize_column_impl(std::vector<std::pair<int, T>>& c) {
  std::sort(c.begin(), c.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, T>> out;
  out.reserve(c.size());
  for (auto& e : c) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second == 0) out.pop_back();
    } else if (e.second != 0) {
      out.push_back(std::move(e));
    }
  }
  c = std::move(out);
}

template <typename M>
M multiply_impl(const M& a, const M& b) {
  if (a.cols != b.rows) throw PreconditionError("matrix shape mismatch in multiply");
  M r;
  r.rows = a.rows;
  r.cols = b.cols;
  r.col.resize(b.cols);
  for (int j = 0; j < b.cols; ++j) {
    for (const auto& [k, bkj] : b.col[j]) {
      for (const auto& [i, aik] : a.col[k]) {
        r.col[j].emplace_back(i, aik * bkj);
      }
    }
    normalize_column_impl(r.col[j]);
  }
  return r;
}

}  // namespace

void normalize_column(std::vector<std::pair<int, Rat>>& c) { normalize_column_impl(c); }
void normalize_column(std::vector<std::pair<int, Int>>& c) { normalize_column_impl(c); }

SparseIntMat multiply(const SparseIntMat& a, const SparseIntMat& b) { return multiply_impl(a, b); }
RatMat multiply(const RatMat& a, const RatMat& b) { return multiply_impl(a, b); }

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.col[i].emplace_back(i, Rat(1));
  return m;
}

Rat RatMat::operator_norm() const {
  Rat best(0);
  for (const auto& c : col) {
    Rat s(0);
    for (const auto& [i, v] : c) s += rat_abs(v);
    if (s > best) best = s;
  }
  return best;
}

RatMat add(const RatMat& a, const RatMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw PreconditionError("matrix shape mismatch in add");
  RatMat r(a.rows, a.cols);
  for (int j = 0; j < a.cols; ++j) {
    r.col[j] = a.col[j];
    r.col[j].insert(r.col[j].end(), b.col[j].begin(), b.col[j].end());
    normalize_column(r.col[j]);
  }
  return r;
}

RatMat negate(const RatMat& a) {
  RatMat r = a;
  for (auto& c : r.col)
    for (auto& e : c) e.second = -e.second;
  return r;
}

RatMat subtract(const RatMat& a, const RatMat& b) { return add(a, negate(b)); }

RatMat to_rat(const SparseIntMat& a) {
  RatMat r(a.rows, a.cols);
  for (int j = 0; j < a.cols; ++j)
    for (const auto& [i, v] : a.col[j]) r.col[j].emplace_back(i, Rat(v));
  return r;
}

bool equal(const RatMat& a, const RatMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (int j = 0; j < a.cols; ++j)
    if (a.col[j] != b.col[j]) return false;
  return true;
}

std::vector<Rat> apply(const RatMat& a, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != a.cols)
    throw PreconditionError("vector length mismatch in apply");
  std::vector<Rat> y(a.rows, Rat(0));
  for (int j = 0; j < a.cols; ++j) {
    if (x[j] == 0) continue;
    for (const auto& [i, v] : a.col[j]) y[i] += v * x[j];
  }
  return y;
}

}  // namespace ubcw
