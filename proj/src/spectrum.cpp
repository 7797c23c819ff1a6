#include "delsarte/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace delsarte {

SchemeSpectrum spectral_decomposition(const AdjacencySet& adj) {
  const int n = adj.n;
  const int size = adj.size;
  Eigen::MatrixXd d1 = adj.D[1].cast<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d1);
  if (solver.info() != Eigen::Success)
    throw SpectralAmbiguity("eigendecomposition of D_1 failed");

  // Solver returns ascending eigenvalues; cluster them in descending order.
  Eigen::VectorXd evals = solver.eigenvalues().reverse();
  Eigen::MatrixXd evecs = solver.eigenvectors().rowwise().reverse();
  std::vector<std::pair<int, int>> clusters;  // [begin, end) column ranges
  int begin = 0;
  for (int c = 1; c <= size; ++c) {
    if (c == size || std::abs(evals(c) - evals(c - 1)) > kEigenvalueClusterTol) {
      clusters.emplace_back(begin, c);
      begin = c;
    }
  }
  if (static_cast<int>(clusters.size()) != n + 1)
    throw SpectralAmbiguity("D_1 has " + std::to_string(clusters.size()) +
                            " eigenvalue clusters, expected " + std::to_string(n + 1));

  // The top eigenspace must be the Perron line through the all-ones vector.
  if (clusters[0].second - clusters[0].first != 1)
    throw SpectralAmbiguity("top eigenvalue of D_1 is not simple");
  {
    Eigen::VectorXd top = evecs.col(0);
    double coherence = std::abs(top.sum()) / (std::sqrt(static_cast<double>(size)));
    if (std::abs(coherence - 1.0) > 1e-6)
      throw SpectralAmbiguity("top eigenvector of D_1 is not the all-ones direction");
  }

  SchemeSpectrum spectrum;
  spectrum.eigenvalues.resize(n + 1);
  spectrum.projectors.reserve(n + 1);
  for (int j = 0; j <= n; ++j) {
    auto [lo, hi] = clusters[j];
    spectrum.eigenvalues(j) = evals(lo);
    if (j == 0) {
      spectrum.projectors.push_back(
          Eigen::MatrixXd::Constant(size, size, 1.0 / static_cast<double>(size)));
    } else {
      Eigen::MatrixXd basis = evecs.middleCols(lo, hi - lo);
      spectrum.projectors.push_back(basis * basis.transpose());
    }
  }
  return spectrum;
}

NumericSchemeParameters extract_parameters(const AdjacencySet& adj,
                                           const SchemeSpectrum& spectrum) {
  const int n = adj.n;
  const int size = adj.size;
  if (static_cast<int>(spectrum.projectors.size()) != n + 1)
    throw DomainError("extract_parameters: spectrum does not match the scheme");
  NumericSchemeParameters params;
  params.n = n;
  params.cardinality = static_cast<double>(size);
  params.v.resize(n + 1);
  params.m.resize(n + 1);
  std::vector<Eigen::MatrixXd> D(n + 1);
  for (int i = 0; i <= n; ++i) {
    D[i] = adj.D[i].cast<double>();
    params.v[i] = D[i].row(0).sum();  // valency: constant row sum of D_i
  }
  for (int j = 0; j <= n; ++j) {
    double trace = spectrum.projectors[j].trace();
    double rounded = std::round(trace);
    if (std::abs(trace - rounded) > 1e-6)
      throw MultiplicityExtractionError("trace of E_" + std::to_string(j) + " is " +
                                        std::to_string(trace) + ", not near an integer");
    params.m[j] = rounded;
  }
  params.P.resize(n + 1, n + 1);
  params.Q.resize(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      double inner = (D[i].cwiseProduct(spectrum.projectors[j])).sum();
      params.P(i, j) = inner / params.m[j];
      params.Q(j, i) = inner / params.v[i];
    }
  }
  Eigen::MatrixXd residual =
      params.P * params.Q - params.cardinality * Eigen::MatrixXd::Identity(n + 1, n + 1);
  if (residual.cwiseAbs().maxCoeff() > kProjectorTol * params.cardinality)
    throw MultiplicityExtractionError("extracted P*Q deviates from |X| I");
  params.is_exact = false;
  return params;
}

FundamentalPPolynomials fundamental_p_polynomials(const IntersectionTable& table) {
  const int n = table.n;
  for (int k = 0; k < n; ++k)
    if (table.at(1, k, k + 1) == 0) throw DegenerateScheme(k);
  FundamentalPPolynomials polys;
  polys.coeffs.resize(n + 1);
  polys.coeffs[0] = {Rational(1)};
  if (n >= 1) polys.coeffs[1] = {Rational(0), Rational(1)};
  for (int k = 1; k < n; ++k) {
    // P_{k+1} = (X P_k - p_{1,k}^{k-1} P_{k-1} - p_{1,k}^k P_k) / p_{1,k}^{k+1}
    const Rational a(static_cast<long>(table.at(1, k, k - 1)));
    const Rational b(static_cast<long>(table.at(1, k, k)));
    const Rational c(static_cast<long>(table.at(1, k, k + 1)));
    std::vector<Rational> next(k + 2, Rational(0));
    for (int d = 0; d <= k; ++d) next[d + 1] += polys.coeffs[k][d];
    for (int d = 0; d < static_cast<int>(polys.coeffs[k - 1].size()); ++d)
      next[d] -= a * polys.coeffs[k - 1][d];
    for (int d = 0; d <= k; ++d) next[d] -= b * polys.coeffs[k][d];
    for (auto& coeff : next) coeff /= c;
    polys.coeffs[k + 1] = std::move(next);
  }
  return polys;
}

void verify_fundamental_p_polynomials(const FundamentalPPolynomials& polys,
                                      const AdjacencySet& adj) {
  const int n = adj.n;
  const int size = adj.size;
  RationalMatrix d1(size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) d1(r, c) = Rational(adj.D[1](r, c));
  RationalMatrix power = RationalMatrix::Identity(size, size);
  std::vector<RationalMatrix> accum(n + 1);
  for (int i = 0; i <= n; ++i) accum[i] = RationalMatrix::Zero(size, size);
  const int max_degree = n;
  for (int d = 0; d <= max_degree; ++d) {
    for (int i = 0; i <= n; ++i) {
      const auto& coeffs = polys.coeffs[i];
      if (d < static_cast<int>(coeffs.size()) && !coeffs[d].is_zero())
        accum[i] += coeffs[d] * power;
    }
    if (d < max_degree) power = (power * d1).eval();
  }
  for (int i = 0; i <= n; ++i)
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c)
        if (accum[i](r, c) != Rational(adj.D[i](r, c)))
          throw SoundnessError("P_" + std::to_string(i) + "(D_1) != D_" + std::to_string(i) +
                               " at entry (" + std::to_string(r) + "," + std::to_string(c) +
                               ")");
}

}  // namespace delsarte
