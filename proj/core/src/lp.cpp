#include "spatialvote/lp.hpp"

#include <cstddef>

#include "spatialvote/errors.hpp"

namespace spatialvote {

namespace {

// Row-reduces M (r x n), applying the same operations to the tracking matrix
// E (initially the identity), and records the pivot columns. Returns the
// rank; rows at index >= rank are identically zero in M afterwards.
size_t row_reduce(std::vector<RatVec>& M, std::vector<RatVec>& E,
                  std::vector<size_t>& pivot_cols) {
  const size_t d = M.size();
  const size_t n = d == 0 ? 0 : M[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < d; ++col) {
    size_t src = rank;
    while (src < d && M[src][col].is_zero()) ++src;
    if (src == d) continue;
    std::swap(M[src], M[rank]);
    std::swap(E[src], E[rank]);
    Rat inv = Rat(1) / M[rank][col];
    for (auto& v : M[rank]) v = v * inv;
    for (auto& v : E[rank]) v = v * inv;
    for (size_t i = 0; i < d; ++i) {
      if (i == rank || M[i][col].is_zero()) continue;
      Rat f = M[i][col];
      for (size_t j = 0; j < n; ++j) M[i][j] = M[i][j] - f * M[rank][j];
      for (size_t j = 0; j < E[i].size(); ++j) E[i][j] = E[i][j] - f * E[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  return rank;
}

}  // namespace

std::optional<RatVec> strict_homogeneous_lp(const std::vector<RatVec>& rows, int dim) {
  if (dim < 1) throw Error("strict_homogeneous_lp: dimension must be positive");
  const size_t d = static_cast<size_t>(dim);
  const size_t n = rows.size();
  for (const auto& row : rows) {
    if (row.size() != d) throw Error("strict_homogeneous_lp: row dimension mismatch");
    if (is_zero(row)) return std::nullopt;
  }
  if (n == 0) {
    RatVec e1(d, Rat(0));
    e1[0] = Rat(1);
    return e1;
  }

  // Work on the transpose: columns of M are the input rows. A nonnegative,
  // nonzero kernel vector of M certifies infeasibility of the strict system;
  // otherwise the terminal simplex multipliers of
  //   min -sum(lambda)  s.t.  M lambda = 0, lambda >= 0
  // yield a strict witness.
  std::vector<RatVec> M(d, RatVec(n, Rat(0)));
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < d; ++k) M[k][j] = rows[j][k];
  std::vector<RatVec> E(d, RatVec(d, Rat(0)));
  for (size_t k = 0; k < d; ++k) E[k][k] = Rat(1);

  std::vector<size_t> pivot_cols;
  const size_t r = row_reduce(M, E, pivot_cols);
  // r >= 1: a rank-0 matrix would mean every input row is zero.
  M.resize(r);
  E.resize(r);

  // After reduction the pivot columns form an identity block, so they are a
  // valid starting basis with B^{-1} = I. All basic values stay zero (the
  // right-hand side is zero), making every ratio test degenerate.
  std::vector<size_t> basis = pivot_cols;
  std::vector<RatVec> binv(r, RatVec(r, Rat(0)));
  for (size_t i = 0; i < r; ++i) binv[i][i] = Rat(1);
  std::vector<char> in_basis(n, 0);
  for (size_t b : basis) in_basis[b] = 1;

  const size_t max_pivots = 10000 + 100 * (n + d);
  for (size_t iter = 0;; ++iter) {
    if (iter > max_pivots)
      throw InternalError("strict_homogeneous_lp: pivot limit exceeded");

    // Entering column: least index with negative reduced cost. Costs are all
    // -1, so the reduced cost of column j is sum_i T_ij - 1 with T = B^{-1}M.
    size_t enter = n;
    RatVec tcol(r);
    for (size_t j = 0; j < n && enter == n; ++j) {
      if (in_basis[j]) continue;
      Rat acc(1);
      for (size_t i = 0; i < r; ++i) {
        Rat t(0);
        for (size_t k = 0; k < r; ++k) t = t + binv[i][k] * M[k][j];
        tcol[i] = t;
        acc = acc - t;
      }
      if (acc.sign() > 0) enter = j;
    }

    if (enter == n) {
      // Optimal at value zero: pi = c_B B^{-1} prices every column at most
      // its cost, which rearranges to rows . y >= 1 for y = -E'^T pi.
      RatVec y(d, Rat(0));
      for (size_t i = 0; i < r; ++i) {
        Rat pi(0);
        for (size_t k = 0; k < r; ++k) pi = pi - binv[k][i];  // pi_i, c_B = -1
        for (size_t t = 0; t < d; ++t) y[t] = y[t] - E[i][t] * pi;
      }
      for (const auto& row : rows) {
        if (dot(row, y) < Rat(1))
          throw InternalError("strict_homogeneous_lp: witness verification failed");
      }
      return y;
    }

    // Leaving row among positive tableau entries, smallest basic index
    // first. No positive entry means an improving ray, i.e. a nonnegative
    // kernel vector: the strict system is infeasible.
    size_t leave = r;
    for (size_t i = 0; i < r; ++i) {
      if (tcol[i].sign() > 0 && (leave == r || basis[i] < basis[leave])) leave = i;
    }
    if (leave == r) {
      RatVec cert(n, Rat(0));
      cert[enter] = Rat(1);
      for (size_t i = 0; i < r; ++i) cert[basis[i]] = -tcol[i];
      RatVec combo(d, Rat(0));
      bool nonneg = true, nonzero = false;
      for (size_t j = 0; j < n; ++j) {
        if (cert[j].sign() < 0) nonneg = false;
        if (cert[j].sign() != 0) nonzero = true;
        for (size_t t = 0; t < d; ++t) combo[t] = combo[t] + cert[j] * rows[j][t];
      }
      if (!nonneg || !nonzero || !is_zero(combo))
        throw InternalError("strict_homogeneous_lp: infeasibility certificate failed");
      return std::nullopt;
    }

    Rat inv = Rat(1) / tcol[leave];
    for (size_t k = 0; k < r; ++k) binv[leave][k] = binv[leave][k] * inv;
    for (size_t i = 0; i < r; ++i) {
      if (i == leave || tcol[i].is_zero()) continue;
      for (size_t k = 0; k < r; ++k)
        binv[i][k] = binv[i][k] - tcol[i] * binv[leave][k];
    }
    in_basis[basis[leave]] = 0;
    in_basis[enter] = 1;
    basis[leave] = enter;
  }
}

}  // namespace spatialvote
