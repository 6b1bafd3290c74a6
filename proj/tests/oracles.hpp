// Test-only oracles, independent of the library code they check.
#pragma once

#include <functional>
#include <vector>

namespace howelab::oracles {

/// Number of semistandard Young tableaux of the given shape with entries in
/// {1..n}: weakly increasing along rows, strictly increasing down columns.
/// Exhaustive backtracking, cell by cell.
inline long long ssyt_count(const std::vector<int>& shape, int n) {
  std::vector<std::vector<int>> tableau(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) tableau[r].assign(shape[r], 0);
  std::function<long long(std::size_t, int)> fill = [&](std::size_t r,
                                                        int c) -> long long {
    if (r == tableau.size()) return 1;
    if (c == static_cast<int>(tableau[r].size())) return fill(r + 1, 0);
    int lo = 1;
    if (c > 0) lo = std::max(lo, tableau[r][c - 1]);
    if (r > 0 && c < static_cast<int>(tableau[r - 1].size()))
      lo = std::max(lo, tableau[r - 1][c] + 1);
    long long total = 0;
    for (int v = lo; v <= n; ++v) {
      tableau[r][c] = v;
      total += fill(r, c + 1);
    }
    tableau[r][c] = 0;
    return total;
  };
  return fill(0, 0);
}

/// Number of monomials of total degree `degree` in `vars` variables,
/// counted by walking every exponent vector (no closed form).
inline long long monomial_count(int vars, int degree) {
  if (vars <= 0) return degree == 0 ? 1 : 0;
  std::function<long long(int, int)> walk = [&](int var,
                                                int remaining) -> long long {
    if (var == vars - 1) return 1;  // last exponent is forced
    long long total = 0;
    for (int e = 0; e <= remaining; ++e) total += walk(var + 1, remaining - e);
    return total;
  };
  return walk(0, degree);
}

}  // namespace howelab::oracles
