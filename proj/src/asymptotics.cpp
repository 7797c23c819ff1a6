#include "delsarte/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace delsarte {

namespace {

double xlog(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

std::string interval_message(const char* who, double lo, double hi, double delta) {
  return std::string(who) + ": delta = " + std::to_string(delta) +
         " outside the admissible interval [" + std::to_string(lo) + ", " +
         std::to_string(hi) + "]";
}

int worker_count() {
  long n = std::thread::hardware_concurrency();
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("DELSARTE_THREADS")) {
    long requested = std::strtol(env, nullptr, 10);
    if (requested >= 1) n = std::min(n, requested);
  }
  return static_cast<int>(n);
}

}  // namespace

double entropy(int q, double x) {
  if (q < 2) throw DomainError("entropy: q must be >= 2");
  if (x < 0.0 || x > 1.0)
    throw DomainError("entropy: x = " + std::to_string(x) + " outside [0, 1]");
  const double logq = std::log2(static_cast<double>(q));
  return (-xlog(1.0 - x) - xlog(x) + x * std::log2(static_cast<double>(q - 1))) / logq;
}

double gamma_q(int q, double delta) {
  const double qd = static_cast<double>(q);
  return (qd - 1.0 - (qd - 2.0) * delta -
          2.0 * std::sqrt((qd - 1.0) * delta * (1.0 - delta))) /
         qd;
}

double J_q(int q, double delta) {
  const double qd = static_cast<double>(q);
  return (qd - 1.0) / qd * (1.0 - std::sqrt(1.0 - qd * delta / (qd - 1.0)));
}

double K_delta_alpha(double delta, double alpha) {
  const double aa = alpha * (1.0 - alpha);
  return aa * (1.0 - std::sqrt(1.0 - delta / aa));
}

double B_delta_alpha(double delta, double alpha) {
  const double gap = std::max(0.0, alpha * (1.0 - alpha) - delta * (1.0 - delta));
  const double inner = std::sqrt(gap) - delta;
  const double radicand = std::max(0.0, 1.0 - 4.0 * inner * inner);
  return 0.5 * (1.0 - std::sqrt(radicand));
}

double mrrw2_eval(double delta, double* alpha_star) {
  if (delta <= 0.0) {
    if (alpha_star) *alpha_star = 0.0;
    return 1.0;
  }
  // Minimize 1 - h(alpha) + h(B(delta/2, alpha)) over alpha with
  // alpha(1-alpha) >= delta/2; the alpha = 1/2 endpoint reproduces the first
  // linear programming bound.
  const double x = delta / 2.0;
  const double disc = 1.0 - 2.0 * delta;
  const double alpha_lo = disc <= 0.0 ? 0.5 : (1.0 - std::sqrt(disc)) / 2.0;
  auto objective = [&](double alpha) {
    return 1.0 - entropy(2, alpha) + entropy(2, B_delta_alpha(x, alpha));
  };
  // Coarse grid, then golden-section refinement around the best cell.
  const int grid = 1024;
  double best_alpha = 0.5;
  double best = objective(0.5);
  for (int i = 0; i <= grid; ++i) {
    double alpha = alpha_lo + (0.5 - alpha_lo) * i / grid;
    double value = objective(alpha);
    if (value < best) {
      best = value;
      best_alpha = alpha;
    }
  }
  const double cell = (0.5 - alpha_lo) / grid;
  double lo = std::max(alpha_lo, best_alpha - cell);
  double hi = std::min(0.5, best_alpha + cell);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = objective(c), fd = objective(d);
  while (hi - lo > 1e-10) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = objective(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = objective(d);
    }
  }
  double refined_alpha = (lo + hi) / 2.0;
  double refined = objective(refined_alpha);
  if (refined < best) {
    best = refined;
    best_alpha = refined_alpha;
  }
  if (alpha_star) *alpha_star = best_alpha;
  return best;
}

RateBound make_rate_bound(const std::string& name, int q, double alpha) {
  RateBound bound;
  bound.q = q;
  bound.alpha = alpha;
  auto matches = [&](const char* canonical, const char* alias = nullptr) {
    return name == canonical || (alias != nullptr && name == alias);
  };
  if (matches("gv"))
    bound.id = RateBoundId::gv;
  else if (matches("hamming", "hamming_q"))
    bound.id = RateBoundId::hamming;
  else if (matches("eb", "eb_q"))
    bound.id = RateBoundId::eb;
  else if (matches("mrrw1", "mrrw1_q"))
    bound.id = RateBoundId::mrrw1;
  else if (matches("mrrw2"))
    bound.id = RateBoundId::mrrw2;
  else if (matches("lwb1"))
    bound.id = RateBoundId::lwb1;
  else if (matches("lwb2"))
    bound.id = RateBoundId::lwb2;
  else if (matches("js_hamming"))
    bound.id = RateBoundId::js_hamming;
  else if (matches("js_eb"))
    bound.id = RateBoundId::js_eb;
  else if (matches("js_mrrw"))
    bound.id = RateBoundId::js_mrrw;
  else
    throw DomainError("unknown rate bound '" + name + "'");
  if (bound.q < 2) throw DomainError("rate bound: q must be >= 2");
  bool johnson = bound.id == RateBoundId::js_hamming || bound.id == RateBoundId::js_eb ||
                 bound.id == RateBoundId::js_mrrw;
  if (johnson && (alpha <= 0.0 || alpha >= 0.5))
    throw DomainError("rate bound: Johnson bounds need alpha in (0, 1/2)");
  bool binary_only = bound.id == RateBoundId::mrrw2 || bound.id == RateBoundId::lwb1 ||
                     bound.id == RateBoundId::lwb2;
  if (binary_only && bound.q != 2)
    throw DomainError("rate bound '" + name + "' is defined for q = 2 only");
  return bound;
}

std::string rate_bound_name(RateBoundId id) {
  switch (id) {
    case RateBoundId::gv: return "gv";
    case RateBoundId::hamming: return "hamming";
    case RateBoundId::eb: return "eb";
    case RateBoundId::mrrw1: return "mrrw1";
    case RateBoundId::mrrw2: return "mrrw2";
    case RateBoundId::lwb1: return "lwb1";
    case RateBoundId::lwb2: return "lwb2";
    case RateBoundId::js_hamming: return "js_hamming";
    case RateBoundId::js_eb: return "js_eb";
    case RateBoundId::js_mrrw: return "js_mrrw";
  }
  return "?";
}

std::pair<double, double> rate_bound_domain(const RateBound& bound) {
  switch (bound.id) {
    case RateBoundId::gv:
    case RateBoundId::hamming:
    case RateBoundId::eb:
    case RateBoundId::mrrw1:
      return {0.0, static_cast<double>(bound.q - 1) / bound.q};
    case RateBoundId::mrrw2:
    case RateBoundId::lwb1:
    case RateBoundId::lwb2:
      return {0.0, 0.5};
    case RateBoundId::js_hamming:
    case RateBoundId::js_eb:
    case RateBoundId::js_mrrw:
      return {0.0, bound.alpha * (1.0 - bound.alpha)};
  }
  throw DomainError("rate_bound_domain: unknown bound");
}

double rate_bound_eval(const RateBound& bound, double delta) {
  auto [lo, hi] = rate_bound_domain(bound);
  if (delta < lo - 1e-15 || delta > hi + 1e-15)
    throw DomainError(interval_message(rate_bound_name(bound.id).c_str(), lo, hi, delta));
  delta = std::clamp(delta, lo, hi);
  const int q = bound.q;
  const double alpha = bound.alpha;
  switch (bound.id) {
    case RateBoundId::gv:
      return 1.0 - entropy(q, delta);
    case RateBoundId::hamming:
      return 1.0 - entropy(q, delta / 2.0);
    case RateBoundId::eb:
      return 1.0 - entropy(q, J_q(q, delta));
    case RateBoundId::mrrw1:
      return entropy(q, gamma_q(q, delta));
    case RateBoundId::mrrw2:
      return mrrw2_eval(delta);
    case RateBoundId::lwb1:
      return 0.5 * ((1.0 - entropy(2, delta)) + entropy(2, gamma_q(2, delta)));
    case RateBoundId::lwb2:
      return 0.5 * entropy(2, 1.0 - 2.0 * std::sqrt(delta * (1.0 - delta)));
    case RateBoundId::js_hamming:
      return entropy(2, alpha) - (alpha * entropy(2, delta / (2.0 * alpha)) +
                                  (1.0 - alpha) * entropy(2, delta / (2.0 * (1.0 - alpha))));
    case RateBoundId::js_eb: {
      const double k = K_delta_alpha(delta, alpha);
      return entropy(2, alpha) - (alpha * entropy(2, k / alpha) +
                                  (1.0 - alpha) * entropy(2, k / (1.0 - alpha)));
    }
    case RateBoundId::js_mrrw:
      return entropy(2, B_delta_alpha(delta, alpha));
  }
  throw DomainError("rate_bound_eval: unknown bound");
}

BoundCurve sample_curve(const RateBound& bound, int grid) {
  if (grid < 2) throw DomainError("sample_curve: grid must be >= 2");
  auto [lo, hi] = rate_bound_domain(bound);
  BoundCurve curve;
  curve.bound = bound;
  curve.samples.resize(grid);
  const int workers = std::min(worker_count(), grid);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = w; i < grid; i += workers) {
        double delta = lo + (hi - lo) * i / (grid - 1);
        curve.samples[i] = {delta, rate_bound_eval(bound, delta)};
      }
    });
  }
  for (auto& t : pool) t.join();
  return curve;
}

}  // namespace delsarte
