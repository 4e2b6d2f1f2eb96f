#include "orelt/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace orelt {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

void swapRows(Matrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swapCols(Matrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

void addRow(Matrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += k * m[src][j];
}

void addCol(Matrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (auto& row : m) row[dst] += k * row[src];
}

// Smith normal form diagonal of m (destructive). Sizes here are tiny, so
// plain gcd elimination is fine.
std::vector<std::int64_t> smithDiagonal(Matrix m) {
  std::vector<std::int64_t> diag;
  if (m.empty() || m[0].empty()) return diag;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero pivot.
    std::size_t pr = t, pc = t;
    bool found = false;
    for (std::size_t i = t; i < rows && !found; ++i)
      for (std::size_t j = t; j < cols && !found; ++j)
        if (m[i][j] != 0) {
          pr = i;
          pc = j;
          found = true;
        }
    if (!found) break;
    swapRows(m, t, pr);
    swapCols(m, t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] % m[t][t] != 0) {
          // Replace pivot by gcd via a row combination.
          std::int64_t q = m[i][t] / m[t][t];
          addRow(m, i, t, -q);
          swapRows(m, i, t);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] % m[t][t] != 0) {
          std::int64_t q = m[t][j] / m[t][t];
          addCol(m, j, t, -q);
          swapCols(m, j, t);
          clean = false;
        }
      }
      if (clean) break;
    }
    for (std::size_t i = t + 1; i < rows; ++i)
      if (m[i][t] != 0) addRow(m, i, t, -m[i][t] / m[t][t]);
    for (std::size_t j = t + 1; j < cols; ++j)
      if (m[t][j] != 0) addCol(m, j, t, -m[t][j] / m[t][t]);
    diag.push_back(std::llabs(m[t][t]));
    ++t;
  }
  // Enforce the divisibility chain d1 | d2 | ...
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      std::int64_t g = std::gcd(diag[i], diag[j]);
      std::int64_t l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  }
  return diag;
}

}  // namespace

std::vector<std::int64_t> exponentVector(const Word& w, int rank) {
  std::vector<std::int64_t> v(rank, 0);
  for (Letter l : w.letters()) v[generatorOf(l) - 1] += l > 0 ? 1 : -1;
  return v;
}

bool inRowLattice(Matrix rows, std::vector<std::int64_t> v) {
  if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) return true;
  std::size_t cols = v.size();
  // Column-by-column Hermite-style elimination, then reduce v.
  std::size_t pivotRow = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    // gcd-combine all rows with nonzero entry in column c into pivotRow.
    std::size_t nz = pivotRow;
    while (nz < rows.size() && rows[nz][c] == 0) ++nz;
    if (nz == rows.size()) continue;
    swapRows(rows, pivotRow, nz);
    for (std::size_t i = pivotRow + 1; i < rows.size(); ++i) {
      while (rows[i][c] != 0) {
        std::int64_t q = rows[pivotRow][c] / rows[i][c];
        addRow(rows, pivotRow, i, -q);
        swapRows(rows, pivotRow, i);
      }
    }
    if (rows[pivotRow][c] < 0)
      for (auto& x : rows[pivotRow]) x = -x;
    // Reduce v against the pivot.
    if (v[c] % rows[pivotRow][c] != 0) return false;
    std::int64_t q = v[c] / rows[pivotRow][c];
    for (std::size_t j = 0; j < cols; ++j) v[j] -= q * rows[pivotRow][j];
    ++pivotRow;
    if (pivotRow == rows.size()) break;
  }
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

AbelianInvariants abelianInvariants(const Presentation& p) {
  AbelianInvariants out;
  if (p.rank == 0) return out;
  if (p.relators.empty()) {
    out.freeRank = p.rank;
    return out;
  }
  Matrix m;
  for (const Word& r : p.relators) m.push_back(exponentVector(r, p.rank));
  std::vector<std::int64_t> diag = smithDiagonal(std::move(m));
  int nonzero = 0;
  for (std::int64_t d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) out.torsion.push_back(d);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  out.freeRank = p.rank - nonzero;
  return out;
}

bool nontrivialInAbelianization(const Presentation& p, const Word& w) {
  Matrix rows;
  for (const Word& r : p.relators) rows.push_back(exponentVector(r, p.rank));
  return !inRowLattice(std::move(rows), exponentVector(w, p.rank));
}

}  // namespace orelt
