#pragma once

#include <Eigen/Core>
#include <vector>

#include "delsarte/explicit_scheme.hpp"
#include "delsarte/parameters.hpp"
#include "delsarte/rational.hpp"

namespace delsarte {

/// Absolute gap below which two eigenvalues of D_1 are treated as equal.
inline constexpr double kEigenvalueClusterTol = 1e-6;

/// Tolerance for the floating projector identities.
inline constexpr double kProjectorTol = 1e-9;

/// Eigenprojectors of the adjacency algebra, ordered with E_0 = J/|X| first
/// and the rest by decreasing eigenvalue of D_1.
struct SchemeSpectrum {
  Eigen::VectorXd eigenvalues;           // lambda_j of D_1, one per eigenspace
  std::vector<Eigen::MatrixXd> projectors;
};

SchemeSpectrum spectral_decomposition(const AdjacencySet& adj);

/// Reads off v, m, P, Q from the projectors; verifies P*Q = |X| I within
/// kProjectorTol. Multiplicities come from rounded projector traces.
NumericSchemeParameters extract_parameters(const AdjacencySet& adj,
                                           const SchemeSpectrum& spectrum);

/// Coefficients (ascending degree) of the polynomials P_i with D_i = P_i(D_1).
struct FundamentalPPolynomials {
  std::vector<std::vector<Rational>> coeffs;
};

/// Builds P_0..P_n from the three-term recurrence on the intersection
/// numbers p_{1,k}^{k-1..k+1}.
FundamentalPPolynomials fundamental_p_polynomials(const IntersectionTable& table);

/// Exact check that P_i(D_1) = D_i in rational matrix arithmetic.
void verify_fundamental_p_polynomials(const FundamentalPPolynomials& polys,
                                      const AdjacencySet& adj);

}  // namespace delsarte
