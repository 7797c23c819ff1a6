#pragma once

#include <variant>

#include "delsarte/parameters.hpp"
#include "delsarte/radial.hpp"

namespace delsarte {

struct CustomTag {};
struct HammingTag {};

/// Data of the Elias-Bassalygo construction: the chosen support radius u.
struct EbData {
  int u;
};

/// Data of the MRRW construction: the dual radius r_perp, the support
/// radius r = min{x >= 1 : q_x(r_perp) <= 0}, and lambda = q_1(r_perp).
struct MrrwData {
  int r_perp;
  int r;
  Rational lambda;
};

/// A verified dual-feasible function for the Delsarte LP. `bound` is the
/// exact value |X| f(0) / fhat(0) proved by the certificate itself;
/// `closed_form_bound` is the theorem-level expression of the construction
/// (it coincides with `bound` for the Hamming construction and dominates it
/// for the EB and MRRW constructions).
struct Certificate {
  RadialFunction f;
  RadialFunction fhat;
  int d = 0;
  Rational bound;
  Rational closed_form_bound;
  std::variant<CustomTag, HammingTag, EbData, MrrwData> construction;
};

/// Verifies fhat >= 0, fhat(0) > 0 and f(x) <= 0 for x >= d, all exact, and
/// returns the certified bound. Throws InfeasibleCertificate on violation.
Certificate check_and_bound(const SchemeParameters& params, const RadialFunction& f, int d);

/// f = 1_{<=e} * 1_{<=e} with e = floor((d-1)/2); bound |X| / sum_{x<=e} v_x.
Certificate hamming_certificate(const SchemeParameters& params, int d);

/// f(x) = (q_1(x) - q_1(d)) (1_u * 1_u)(x) for the admissible u maximizing
/// v_u (smallest u on ties); closed form (q_1(0) - q_1(d)) |X| / v_u.
Certificate eb_certificate(const SchemeParameters& params, int d);

/// The dual-Laplacian construction: fhat(x) = q_x(r_perp)/m_x on [0, r-1],
/// squared through an extra reverse convolution; closed form
/// (q_1(0) - q_1(d)) sum_{x<r} m_x.
Certificate mrrw_certificate(const SchemeParameters& params, int d);

/// Whether |X| (1_{1} (*) fhat)(x) >= lambda fhat(x) for every x, exactly.
bool dual_laplacian_check(const SchemeParameters& params, const RadialFunction& fhat,
                          const Rational& lambda);

// Closed-form values for the q-ary Hamming family, evaluated directly from
// binomial sums so they remain usable far beyond the parameter-table cap.

Rational hamming_bound_closed_form(long n, long q, long d);

struct EbClosedForm {
  Rational bound;
  long u;
};
EbClosedForm eb_bound_closed_form(long n, long q, long d);

struct MrrwClosedForm {
  Rational bound;
  long r_perp;
  long r;
};
MrrwClosedForm mrrw_bound_closed_form(long n, long q, long d);

}  // namespace delsarte
