// Column-sparse exact matrices: integer matrices for boundary operators and
// rational matrices for chain maps and homotopies.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ubcw/rational.hpp"

namespace ubcw {

// Column-sparse integer matrix.  Each column holds (row, entry) pairs sorted
// by row with no zero entries.
struct SparseIntMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, Int>>> col;

  SparseIntMat() = default;
  SparseIntMat(int r, int c) : rows(r), cols(c), col(c) {}

  bool is_zero() const {
    for (const auto& c : col)
      if (!c.empty()) return false;
    return true;
  }
};

SparseIntMat multiply(const SparseIntMat& a, const SparseIntMat& b);

// Column-sparse rational matrix with the same conventions.
struct RatMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, Rat>>> col;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), col(c) {}

  static RatMat identity(int n);
  static RatMat zero(int r, int c) { return RatMat(r, c); }

  bool is_zero() const {
    for (const auto& c : col)
      if (!c.empty()) return false;
    return true;
  }

  // Max column l1 sum; this is the operator norm for the l1 norms on chains.
  Rat operator_norm() const;
};

RatMat multiply(const RatMat& a, const RatMat& b);
RatMat add(const RatMat& a, const RatMat& b);
RatMat subtract(const RatMat& a, const RatMat& b);
RatMat negate(const RatMat& a);
RatMat to_rat(const SparseIntMat& a);
bool equal(const RatMat& a, const RatMat& b);

// Applies a to the coordinate vector x (dense), returning a dense vector.
std::vector<Rat> apply(const RatMat& a, const std::vector<Rat>& x);

// Sorts and merges duplicate rows inside a column, dropping zeros.
void normalize_column(std::vector<std::pair<int, Rat>>& c);
void normalize_column(std::vector<std::pair<int, Int>>& c);

}  // namespace ubcw
