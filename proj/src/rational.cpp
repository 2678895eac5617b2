#include "cvxgeo/rational.hpp"

#include <stdexcept>

namespace cvx {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t probe = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (probe == text.size()) throw std::invalid_argument("bad rational literal: " + text);
  bool seen_slash = false;
  for (std::size_t i = probe; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '/' && !seen_slash && i + 1 < text.size() && i > probe) {
      seen_slash = true;
      continue;
    }
    if (c < '0' || c > '9') throw std::invalid_argument("bad rational literal: " + text);
  }
  try {
    Rational r(text);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

std::string rational_to_string(const Rational& r) { return r.str(); }

int rat_rank(RatMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::optional<RatVec> solve_unique(RatMat a, RatVec b) {
  const std::size_t rows = a.size();
  if (rows == 0 || rows != b.size()) return std::nullopt;
  const std::size_t cols = a[0].size();

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    std::swap(b[rank], b[pivot]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
      b[r] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  // Inconsistent?
  for (std::size_t r = rank; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  // Underdetermined?
  if (rank < cols) return std::nullopt;

  RatVec x(cols, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r] / a[r][pivot_col[r]];
  return x;
}

}  // namespace cvx
