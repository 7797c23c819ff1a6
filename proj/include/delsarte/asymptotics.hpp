#pragma once

#include <string>
#include <utility>
#include <vector>

#include "delsarte/errors.hpp"

namespace delsarte {

/// q-ary entropy h_q on [0, 1], with h_q(0) = 0 and h_q((q-1)/q) = 1.
double entropy(int q, double x);

enum class RateBoundId {
  gv,
  hamming,
  eb,
  mrrw1,
  mrrw2,
  lwb1,
  lwb2,
  js_hamming,
  js_eb,
  js_mrrw,
};

/// An asymptotic rate bound delta -> R(delta). q parametrizes the q-ary
/// family; alpha the Johnson (constant-weight) family, whose delta is the
/// Johnson-normalized distance on [0, alpha(1-alpha)].
struct RateBound {
  RateBoundId id = RateBoundId::gv;
  int q = 2;
  double alpha = 0.0;
};

RateBound make_rate_bound(const std::string& name, int q, double alpha);
std::string rate_bound_name(RateBoundId id);

/// Admissible delta interval of a bound.
std::pair<double, double> rate_bound_domain(const RateBound& bound);

double rate_bound_eval(const RateBound& bound, double delta);

struct BoundCurve {
  RateBound bound;
  std::vector<std::pair<double, double>> samples;
};

/// Uniform grid over the bound's domain, endpoints included. Sampling is
/// parallel over grid points; DELSARTE_THREADS caps the workers.
BoundCurve sample_curve(const RateBound& bound, int grid);

// Closed-form ingredients, exposed for tests and the acceptance suite.
double gamma_q(int q, double delta);
double J_q(int q, double delta);
double K_delta_alpha(double delta, double alpha);
double B_delta_alpha(double delta, double alpha);

/// Second linear programming bound; reports the minimizing alpha when
/// `alpha_star` is non-null (the optimum is not asserted to be unique).
double mrrw2_eval(double delta, double* alpha_star = nullptr);

}  // namespace delsarte
