#include "delsarte/lp.hpp"

#include <numeric>

namespace delsarte {

DelsarteLpInstance::DelsarteLpInstance(const SchemeParameters& p, int distance)
    : params(&p), d(distance) {
  if (!p.is_exact) throw DomainError("DelsarteLpInstance: requires an exact table");
  if (distance < 1 || distance > p.n)
    throw DomainError("DelsarteLpInstance: d must lie in [1, n], got " +
                      std::to_string(distance));
  if (p.n > kLpDimensionCap)
    throw CapExceeded("DelsarteLpInstance: n exceeds the exact-simplex cap " +
                      std::to_string(kLpDimensionCap));
  constraint_order.resize(p.n + 1);
  std::iota(constraint_order.begin(), constraint_order.end(), 0);
}

LpSolution solve_lp(const DelsarteLpInstance& instance) {
  const SchemeParameters& params = *instance.params;
  const int n = params.n;
  const int d = instance.d;

  // Substitute u(0) = 1 and drop the forced zeros: free variables are
  // y_t = u(t) for t in [d, n]. Constraint i becomes
  //   sum_t q_i(t) y_t >= -q_i(0) = -m_i,  i.e.  -sum_t q_i(t) y_t <= m_i,
  // so the slack basis is feasible from the start (m_i > 0).
  const int nv = n - d + 1;
  const int nc = n + 1;
  if (static_cast<int>(instance.constraint_order.size()) != nc)
    throw DomainError("solve_lp: constraint order must list each row once");

  // Dense tableau, rows 0..nc-1 constraints, row nc objective.
  // Columns 0..nv-1 structurals, nv..nv+nc-1 slacks, last column RHS.
  const int cols = nv + nc + 1;
  std::vector<std::vector<Rational>> tab(nc + 1, std::vector<Rational>(cols, Rational(0)));
  for (int row = 0; row < nc; ++row) {
    const int i = instance.constraint_order[row];
    for (int t = d; t <= n; ++t) tab[row][t - d] = -params.Q(i, t);
    tab[row][nv + row] = Rational(1);
    tab[row][cols - 1] = params.m[i];
  }
  for (int t = 0; t < nv; ++t) tab[nc][t] = Rational(-1);  // maximize sum y_t

  std::vector<int> basis(nc);
  for (int row = 0; row < nc; ++row) basis[row] = nv + row;

  LpSolution solution;
  for (;;) {
    // Bland: entering column = smallest index with negative objective row.
    int enter = -1;
    for (int c = 0; c < nv + nc; ++c) {
      if (tab[nc][c].sign() < 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;  // optimal
    int leave = -1;
    Rational best_ratio;
    for (int row = 0; row < nc; ++row) {
      if (tab[row][enter].sign() <= 0) continue;
      Rational ratio = tab[row][cols - 1] / tab[row][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[row] < basis[leave])) {
        leave = row;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      solution.status = LpStatus::unbounded;
      throw SoundnessError(
          "solve_lp: unbounded direction found; the MacWilliams constraints of a valid "
          "scheme bound the optimum");
    }
    // Pivot on (leave, enter).
    Rational inv = Rational(1) / tab[leave][enter];
    for (int c = 0; c < cols; ++c) tab[leave][c] *= inv;
    for (int row = 0; row <= nc; ++row) {
      if (row == leave || tab[row][enter].is_zero()) continue;
      Rational factor = tab[row][enter];
      for (int c = 0; c < cols; ++c) tab[row][c] -= factor * tab[leave][c];
    }
    basis[leave] = enter;
  }

  solution.status = LpStatus::optimal;
  solution.u = RadialFunction::Zero(n + 1);
  solution.u(0) = Rational(1);
  for (int row = 0; row < nc; ++row)
    if (basis[row] < nv) solution.u(d + basis[row]) = tab[row][cols - 1];
  solution.value = Rational(1);
  for (int t = d; t <= n; ++t) solution.value += solution.u(t);

  // Invariant: at optimality all MacWilliams constraints hold exactly.
  for (int i = 0; i <= n; ++i) {
    Rational acc(0);
    for (int t = 0; t <= n; ++t) acc += solution.u(t) * params.Q(i, t);
    if (acc.sign() < 0)
      throw SoundnessError("solve_lp: optimal point violates MacWilliams constraint " +
                           std::to_string(i));
  }
  return solution;
}

LpSolution solve_primal(const SchemeParameters& params, int d) {
  return solve_lp(DelsarteLpInstance(params, d));
}

}  // namespace delsarte
