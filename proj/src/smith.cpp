#include "shadow/smith.hpp"

#include <algorithm>
#include <utility>

namespace shadow {

namespace {

// Euclidean remainder with a non-negative result, so the pivot strictly
// decreases in absolute value until it divides its row and column.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<BigInt> smith_invariants(IntMatrix m) {
  std::vector<BigInt> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero |entry| in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt q = floor_div(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt q = floor_div(m[t][j], m[t][t]);
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // The pivot must divide every remaining entry.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            clean = false;
            break;
          }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

int rank_mod2(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::vector<std::vector<char>> a(rows, std::vector<char>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<char>((m[i][j] % 2) != 0);
  int rank = 0;
  for (std::size_t j = 0; j < cols && static_cast<std::size_t>(rank) < rows; ++j) {
    std::size_t p = rank;
    while (p < rows && !a[p][j]) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != static_cast<std::size_t>(rank) && a[i][j])
        for (std::size_t k = j; k < cols; ++k) a[i][k] ^= a[rank][k];
    ++rank;
  }
  return rank;
}

}  // namespace shadow
