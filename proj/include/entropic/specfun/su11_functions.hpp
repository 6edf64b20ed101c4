#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "entropic/error.hpp"
#include "entropic/half_int.hpp"
#include "entropic/probability.hpp"
#include "entropic/specfun/hyp2f1.hpp"
#include "entropic/specfun/jacobi.hpp"
#include "entropic/specfun/log_gamma.hpp"

namespace entropic {

/// cosh t bound for the discrete series: |z(it)| = (cosh t - 1)/2 < 0.95.
inline constexpr double kDiscreteCoshLimit = 2.9;
/// cosh t bound for the mixed and continuous series: |z(t)| = cosh(t)/2 < 0.95.
inline constexpr double kContinuousCoshLimit = 2.0 * kHyp2f1RadiusLimit;

/// Discrete-series element b^j_{m',m}(t) with j = -k/2.
struct DiscreteArgs {
  SeriesKind series = SeriesKind::discrete_positive;
  int k = 1;
  HalfInt m_prime;
  HalfInt m;
  double t = 0.0;

  HalfInt j() const { return HalfInt::from_doubled(-k); }

  void validate() const {
    if (series != SeriesKind::discrete_positive && series != SeriesKind::discrete_negative) {
      throw DomainError("discrete-series element needs a discrete series kind");
    }
    if (k < 1) throw DomainError("discrete series needs k >= 1");
    const HalfInt jj = j();
    if (!jj.same_class(m_prime) || !jj.same_class(m)) {
      throw DomainError("weights must differ from j = -k/2 by integers");
    }
    if (series == SeriesKind::discrete_positive && (m_prime < -jj || m < -jj)) {
      throw DomainError("positive discrete series needs m', m >= -j = " + (-jj).to_string());
    }
    if (series == SeriesKind::discrete_negative && (m_prime > jj || m > jj)) {
      throw DomainError("negative discrete series needs m', m <= j = " + jj.to_string());
    }
    if (!std::isfinite(t) || t < 0.0) throw DomainError("rapidity t must be finite and nonnegative");
    if (std::cosh(t) >= kDiscreteCoshLimit) {
      throw DomainError("rapidity t outside the discrete-series domain cosh t < 2.9");
    }
  }
};

/// Mixed-basis element c^j_{m',m}(t): discrete m' (j = -k/2), continuous label m.
struct MixedArgs {
  int k = 1;
  HalfInt m_prime;
  double m = 0.0;
  double t = 0.0;

  HalfInt j() const { return HalfInt::from_doubled(-k); }
};

/// Continuous-series element l^j_{m',m,sigma}(t) with j = -1/2 + i s.
struct ContinuousArgs {
  double s = 0.5;
  HalfInt m_prime;
  double m = 0.0;
  int sigma = 0;
  double t = 0.0;

  Complex j() const { return {-0.5, s}; }
};

namespace detail {

inline void require_finite(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError(std::string(what) + ": non-finite result");
}

// Canonical discrete element in log form: m' >= m, both in the positive series.
// The normalization carries 1/Gamma(m'-m+1), required for unitarity; the
// hypergeometric factor goes through Euler's transformation
//   2F1(a,b;c;z) = (1-z)^{c-a-b} 2F1(c-a, c-b; c; z),
// where c - b = -(j+m) is a nonpositive integer, so the series is a
// polynomial with no cancellation at z < 0.
inline Complex canonical_bargmann(double j, double mp, double m, double t) {
  if (t == 0.0) return mp == m ? 1.0 : 0.0;
  const double z = -std::pow(std::sinh(0.5 * t), 2);
  const double log_norm = 0.5 * (log_gamma(mp + j + 1.0) + log_gamma(mp - j) - log_gamma(m + j + 1.0) - log_gamma(m - j)) -
                          log_gamma(mp - m + 1.0);
  const double a = mp - j;
  const double b = j + mp + 1.0;
  const double c = mp - m + 1.0;
  const Complex poly = hyp2f1(c - a, c - b, c, z);
  if (poly == Complex(0.0, 0.0)) return 0.0;
  const Complex log_one_minus_z = std::log(Complex(1.0 - z, 0.0));
  const Complex log_z = std::log(Complex(z, 0.0));
  const Complex log_value = log_norm + 0.5 * (mp + m) * log_one_minus_z + 0.5 * (mp - m) * log_z +
                            (c - a - b) * log_one_minus_z + std::log(poly);
  return std::exp(log_value);
}

// Maps (m', m) onto the canonical sector. Returns the sign picked up along the way.
struct SectorMap {
  HalfInt m_prime;
  HalfInt m;
  double sign;
};

inline SectorMap to_canonical(HalfInt mp, HalfInt m) {
  const int sum = mp.doubled() + m.doubled();
  const bool ascending = mp >= m;
  const double sign = parity_sign(integer_difference(mp, m));
  if (sum >= 0 && ascending) return {mp, m, 1.0};
  if (sum <= 0 && ascending) return {-m, -mp, 1.0};
  if (sum >= 0) return {m, mp, sign};
  return {-mp, -m, sign};
}

inline Complex complex_pow(Complex base, Complex exponent) { return std::exp(exponent * std::log(base)); }

// 2F1(a, b; c; z) / Gamma(c) as (1-z)^{c-a-b} 2F1(c-a, c-b; c; z) / Gamma(c). In the
// mixed and continuous elements c - a and c - b do not depend on m', while a and b
// grow with it; the direct series cancels badly for large |m'|.
inline Complex euler_regularized(Complex a, Complex b, Complex c, Complex z, Hyp2f1Options options) {
  return complex_pow(1.0 - z, c - a - b) * hyp2f1_regularized(c - a, c - b, c, z, options);
}

inline void require_continuous_domain(double t) {
  if (!std::isfinite(t) || t < 0.0) throw DomainError("rapidity t must be finite and nonnegative");
  if (std::cosh(t) >= kContinuousCoshLimit) throw DomainError("rapidity t outside the domain cosh t < 1.9");
}

}  // namespace detail

/// Bargmann function b^j_{m',m}(t) = N F(z(it)), z(it) = (1 - cosh t)/2.
/// Sectors other than m' + m >= 0, m' - m >= 0 use the same symmetry relations as the d-function.
inline Complex bargmann_b(const DiscreteArgs& args) {
  args.validate();
  const auto mapped = detail::to_canonical(args.m_prime, args.m);
  const Complex v = mapped.sign * detail::canonical_bargmann(args.j().value(), mapped.m_prime.value(), mapped.m.value(), args.t);
  detail::require_finite(v, "bargmann_b");
  return v;
}

/// |b^j_{m',m}(t)|^2 by continuing the d-function to imaginary angle
/// (cos(it/2) = cosh(t/2), sin(it/2) = i sinh(t/2)).
///
/// With j = -kappa, m = kappa + mu, m' = kappa + mu', mu' >= mu, the Jacobi form of
/// degree j + m = mu stays a polynomial:
///   |b|^2 = mu! Gamma(2 kappa + mu') / (mu'! Gamma(2 kappa + mu)) sinh^{2(mu'-mu)}(t/2)
///           cosh^{-2(2 kappa + mu + mu')}(t/2) [P_mu^{(mu'-mu, -2 kappa - mu - mu')}(cosh t)]^2.
inline double bargmann_b_continued(const DiscreteArgs& args) {
  args.validate();
  HalfInt mp = args.m_prime;
  HalfInt m = args.m;
  if (args.series == SeriesKind::discrete_negative) {
    mp = -mp;
    m = -m;
  }
  if (mp < m) std::swap(mp, m);
  if (args.t == 0.0) return mp == m ? 1.0 : 0.0;
  const double kappa2 = static_cast<double>(args.k);
  const int mu = integer_difference(m, -args.j());
  const int mu_prime = integer_difference(mp, -args.j());
  const double log_prefactor = std::lgamma(mu + 1.0) + std::lgamma(kappa2 + mu_prime) - std::lgamma(mu_prime + 1.0) -
                               std::lgamma(kappa2 + mu);
  const double half = 0.5 * args.t;
  const double log_powers = 2.0 * (mu_prime - mu) * std::log(std::sinh(half)) -
                            2.0 * (kappa2 + mu + mu_prime) * std::log(std::cosh(half));
  const double p = jacobi<double>(static_cast<unsigned>(mu), mu_prime - mu, -(kappa2 + mu + mu_prime), std::cosh(args.t));
  return std::exp(log_prefactor + log_powers) * p * p;
}

namespace detail {

// log(sqrt(2) 2^{-j-2} S^j_{m'} Gamma(j+1+im) Gamma((-j-im)/2) Gamma((-j+1+im)/2) / (pi Gamma(m'-j))),
// i.e. log N_{m'm} without its 1/Gamma(-m'+1+im) factor.
inline Complex log_mixed_normalization_head(const MixedArgs& args) {
  const double j = args.j().value();
  const double mp = args.m_prime.value();
  const Complex im(0.0, args.m);
  if (reciprocal_gamma_vanishes(j + 1.0 + im)) throw PoleError("c_function: Gamma(j + 1 + im) has a pole (m = 0)");
  // S = sqrt(Gamma(m'-j) / Gamma(m'+j+1)); both arguments are positive on this branch.
  const double log_s = 0.5 * (log_gamma(mp - j) - log_gamma(mp + j + 1.0));
  const Complex log_r = log_gamma(j + 1.0 + im) + log_gamma(0.5 * (-j - im)) + log_gamma(0.5 * (-j + 1.0 + im)) -
                        log_gamma(mp - j);
  const double log_prefactor = 0.5 * std::log(2.0) + (-j - 2.0) * std::log(2.0) - std::log(std::numbers::pi);
  return log_prefactor + log_s + log_r;
}

inline void validate_mixed(const MixedArgs& args) {
  if (args.k < 1) throw DomainError("c_function needs k >= 1");
  const HalfInt j = args.j();
  if (!j.same_class(args.m_prime)) throw DomainError("c_function: m' must differ from j by an integer");
  if (args.m_prime < -j) throw UnsupportedBranchError("c_function: only the m' >= -j branch is implemented");
  if (!std::isfinite(args.m)) throw DomainError("c_function: m must be finite");
  require_continuous_domain(args.t);
}

}  // namespace detail

/// Normalization N_{m'm} = sqrt(2) 2^{-j-2} S^j_{m'} R^j_{m'm} / pi of the mixed-basis element.
inline Complex mixed_normalization(const MixedArgs& args) {
  detail::validate_mixed(args);
  const Complex head = detail::log_mixed_normalization_head(args);
  const Complex tail_arg = -args.m_prime.value() + 1.0 + Complex(0.0, args.m);
  if (reciprocal_gamma_vanishes(tail_arg)) return 0.0;
  return std::exp(head - log_gamma(tail_arg));
}

/// Mixed-basis element c^j_{m',m}(t) = N_{m'm} F^j_{-m',-im}(z(-t)), z(t) = (1 - i sinh t)/2,
/// for m' >= -j. The m' <= j branch is not implemented.
///
/// N carries 1/Gamma(-m'+1+im) and F carries 2F1(...; -m'+1+im; z); they are
/// combined into a regularized 2F1 so m = 0 with integer m' >= 1 stays finite.
inline Complex c_function(const MixedArgs& args, Hyp2f1Options options = {}) {
  detail::validate_mixed(args);
  const double j = args.j().value();
  // Even k, m = 0: Gamma(im) blows up while the regularized 2F1 has a simple zero.
  // The limit is finite; take the symmetric average, error O(delta^2).
  if (args.m == 0.0 && reciprocal_gamma_vanishes(Complex(j + 1.0, 0.0))) {
    constexpr double delta = 1e-6;
    MixedArgs lo = args;
    MixedArgs hi = args;
    lo.m = -delta;
    hi.m = delta;
    return 0.5 * (c_function(lo, options) + c_function(hi, options));
  }
  const double mu = -args.m_prime.value();
  const Complex nu(0.0, -args.m);
  const Complex z(0.5, 0.5 * std::sinh(args.t));  // z(-t)
  const Complex powers = detail::complex_pow(1.0 - z, 0.5 * (mu + nu)) * detail::complex_pow(z, 0.5 * (mu - nu));
  const Complex v = std::exp(detail::log_mixed_normalization_head(args)) * powers *
                    detail::euler_regularized(-j + mu, j + mu + 1.0, mu - nu + 1.0, z, options);
  detail::require_finite(v, "c_function");
  return v;
}

/// Continuous-series element
///   l = S^j_{m'} (T^j_{m'm sigma} F^j_{m',-im}(z(t)) - (-1)^sigma T^j_{-m'm sigma} F^j_{-m',-im}(z(-t))).
///
/// Each T carries 1/Gamma(mu+1+im) and the matching F carries 2F1(...; mu+1+im; z);
/// they are evaluated together as a regularized 2F1.
inline Complex l_function(const ContinuousArgs& args, Hyp2f1Options options = {}) {
  if (!std::isfinite(args.s) || args.s <= 0.0) throw DomainError("continuous series needs s > 0");
  if (args.sigma != 0 && args.sigma != 1) throw DomainError("continuous series parity sigma must be 0 or 1");
  if (!std::isfinite(args.m)) throw DomainError("l_function: m must be finite");
  detail::require_continuous_domain(args.t);

  const Complex j = args.j();
  const Complex im(0.0, args.m);
  const double mp = args.m_prime.value();
  constexpr double pi = std::numbers::pi;

  const Complex sine = std::sin(pi * (-j + static_cast<double>(args.sigma) - im) / 2.0);
  if (std::abs(sine) < 1e-300) throw PoleError("l_function: sin(pi(-j + sigma - im)/2) vanishes");
  const Complex i_pow_sigma = args.sigma == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
  const Complex log_common = (j - 1.0) * std::log(2.0) + log_gamma(-j + im);

  // T^j_{mu m sigma} F^j_{mu,-im}(z) with the 1/Gamma(mu+1+im) moved into the 2F1.
  const auto branch = [&](double mu, Complex z) -> Complex {
    const Complex head = std::exp(log_common - log_gamma(-mu - j)) / (i_pow_sigma * sine);
    const Complex powers = detail::complex_pow(1.0 - z, 0.5 * (mu - im)) * detail::complex_pow(z, 0.5 * (mu + im));
    return head * powers * detail::euler_regularized(-j + mu, j + mu + 1.0, mu + im + 1.0, z, options);
  };

  const Complex s_factor = std::exp(0.5 * (log_gamma(mp - j) + log_gamma(mp + j + 1.0)) - log_gamma(mp + j + 1.0));
  const Complex z_t(0.5, -0.5 * std::sinh(args.t));
  const Complex z_minus_t(0.5, 0.5 * std::sinh(args.t));
  const Complex v = s_factor * (branch(mp, z_t) - parity_sign(args.sigma) * branch(-mp, z_minus_t));
  detail::require_finite(v, "l_function");
  return v;
}

}  // namespace entropic
