#pragma once

#include "delsarte/parameters.hpp"
#include "delsarte/rational.hpp"

namespace delsarte {

/// A rational-valued function on distances (or eigenspace indices) 0..n.
using RadialFunction = RationalVector;

/// Indicator of the single value u.
RadialFunction indicator(int n, int u);

/// Indicator of the interval [0, e].
RadialFunction indicator_leq(int n, int e);

/// Fourier transform: hat(f)(x) = sum_y f(y) p_y(x).
RadialFunction hat(const SchemeParameters& params, const RadialFunction& f);

/// Inverse transform: tilde(f)(x) = (1/|X|) sum_y f(y) q_y(x).
RadialFunction tilde(const SchemeParameters& params, const RadialFunction& f);

/// Convolution (f * g)(x) = sum_{y,z} f(y) g(z) p_{y,z}^x. Evaluated over the
/// supports of f and g with memoized intersection rows.
RadialFunction star(const SchemeParameters& params, const RadialFunction& f,
                    const RadialFunction& g);

/// Reverse convolution (f (*) g)(x) = (1/|X|) sum_{y,z} f(y) g(z) q_{y,z}^x,
/// evaluated over supports with memoized Krein rows.
RadialFunction ostar(const SchemeParameters& params, const RadialFunction& f,
                     const RadialFunction& g);

}  // namespace delsarte
