#include "mlf_oracle.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace oracle {

namespace {

// Minimal RAII wrapper; precision fixed at construction.
class Big {
public:
  explicit Big(mpfr_prec_t prec) : prec_(prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Big(double d, mpfr_prec_t prec) : prec_(prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
  Big(const Big& o) : prec_(o.prec_) { mpfr_init2(v_, prec_); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Big& operator=(const Big& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Big() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return prec_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
  mpfr_t v_;
  mpfr_prec_t prec_;
};

Big bin(int op, const Big& a, const Big& b) {
  Big r(std::max(a.prec(), b.prec()));
  switch (op) {
    case 0: mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN); break;
    case 1: mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN); break;
    case 2: mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN); break;
    default: mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN); break;
  }
  return r;
}

Big operator+(const Big& a, const Big& b) { return bin(0, a, b); }
Big operator-(const Big& a, const Big& b) { return bin(1, a, b); }
Big operator*(const Big& a, const Big& b) { return bin(2, a, b); }
Big operator/(const Big& a, const Big& b) { return bin(3, a, b); }

Big fn(int op, const Big& a) {
  Big r(a.prec());
  switch (op) {
    case 0: mpfr_exp(r.raw(), a.raw(), MPFR_RNDN); break;
    case 1: mpfr_sin(r.raw(), a.raw(), MPFR_RNDN); break;
    case 2: mpfr_cos(r.raw(), a.raw(), MPFR_RNDN); break;
    case 3: mpfr_sinh(r.raw(), a.raw(), MPFR_RNDN); break;
    case 4: mpfr_cosh(r.raw(), a.raw(), MPFR_RNDN); break;
    case 5: mpfr_abs(r.raw(), a.raw(), MPFR_RNDN); break;
    default: mpfr_neg(r.raw(), a.raw(), MPFR_RNDN); break;
  }
  return r;
}

Big big_pow(const Big& a, const Big& b) {
  Big r(a.prec());
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Big big_pi(mpfr_prec_t prec) {
  Big r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

// 1/Gamma(x), zero at the poles.
Big big_rgamma(const Big& x) {
  Big r(x.prec());
  if (mpfr_integer_p(x.raw()) && mpfr_sgn(x.raw()) <= 0) return Big(x.prec());
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  Big one(1.0, x.prec());
  return one / r;
}

Big big_gamma(const Big& x) {
  Big r(x.prec());
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

// The Gamma(alpha k + beta) ladder advances by an exact integer shift only
// when q * alpha is an integer exactly as a real number.  For binary doubles
// that means alpha must be dyadic (q a power of two): multiplying by any
// other q can *round* to an integer (0.9 * 20 rounds to 18 exactly) while
// the true product is not one, and the ladder would drift off the series.
bool exact_ladder(double alpha, long& p, long& q) {
  for (long den = 1; den <= 64; den *= 2) {
    double num = alpha * den; // exact: power-of-two scaling
    double rn = std::round(num);
    if (num == rn && rn >= 1) {
      p = static_cast<long>(rn);
      q = den;
      return true;
    }
  }
  return false;
}

struct SeriesPlan {
  bool feasible = false;
  double k_peak = 0.0;
  long max_terms = 0;
  mpfr_prec_t prec = 0;
};

SeriesPlan plan_series(double alpha, double beta, double z, int digits) {
  SeriesPlan plan;
  double x = -z;
  double kp = 0.0, ln_max = 0.0;
  if (x > 1.0) {
    kp = std::max(0.0, (std::pow(x, 1.0 / alpha) - beta) / alpha);
    if (kp > 0.0)
      ln_max = std::max(0.0, kp * std::log(x) - std::lgamma(alpha * kp + std::max(beta, 1e-3)));
  }
  double digits_needed = digits + 30 + ln_max / std::log(10.0);
  // terms beyond the peak decay slowly at first; locate the index where
  // ln|term| has dropped below the stopping threshold by bisection on
  // k ln x - lgamma(alpha k + beta)
  double target = -(digits + 20.0) * std::log(10.0) - 60.0;
  auto ln_term = [&](double k) {
    return k * std::log(std::max(x, 1e-6)) - std::lgamma(alpha * k + std::max(beta, 1e-3));
  };
  double k_end = kp + 600.0 + 10.0 * digits;
  if (x > 1.0) {
    double lo = kp, hi = std::max(4.0 * kp + 1e4, 2e4);
    while (ln_term(hi) > target && hi < 5e7) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if (ln_term(mid) > target)
        lo = mid;
      else
        hi = mid;
    }
    k_end = hi + 600.0 + 10.0 * digits;
  }
  double est_terms = k_end;
  long p, q;
  bool ladder = exact_ladder(alpha, p, q);
  double dig_cap = ladder ? 20000.0 : 600.0;
  double term_cap = ladder ? 300000.0 : 6000.0;
  if (digits_needed > dig_cap || est_terms > term_cap) return plan;
  plan.feasible = true;
  plan.k_peak = kp;
  plan.max_terms = static_cast<long>(est_terms) + 200;
  plan.prec = static_cast<mpfr_prec_t>(digits_needed * 3.3220 + 64);
  return plan;
}

// Series sum_{k>=0} (rho)_k / k! * z^k / Gamma(alpha k + beta) at adaptive
// precision.  For rational alpha = p/q the Gamma ladder advances by
// Gamma(y + p) = Gamma(y) * (y)(y+1)...(y+p-1) every q terms.
Big series_big(double alpha, double beta, double z, int rho, int digits,
               const SeriesPlan& plan) {
  mpfr_prec_t prec = plan.prec;
  long p = 0, q = 0;
  bool rational = exact_ladder(alpha, p, q);
  Big a(alpha, prec), b(beta, prec), zz(z, prec);
  std::vector<Big> gam; // ring buffer of Gamma(alpha k + beta), k mod q
  Big sum(prec), coef(1.0, prec);
  Big tol_scale(prec);
  long consecutive_small = 0;
  for (long k = 0; k < plan.max_terms; ++k) {
    Big arg = a * Big(static_cast<double>(k), prec) + b;
    Big g(prec);
    if (rational) {
      if (k < q) {
        gam.push_back(big_gamma(arg));
      } else {
        // Gamma(arg) = Gamma(arg - p) * prod_{j=0}^{p-1} (arg - p + j)
        Big prev_arg = arg - Big(static_cast<double>(p), prec);
        Big prod(1.0, prec);
        for (long j = 0; j < p; ++j)
          prod = prod * (prev_arg + Big(static_cast<double>(j), prec));
        gam[k % q] = gam[k % q] * prod;
      }
      g = gam[k % q];
    } else {
      g = big_gamma(arg);
    }
    // poles of Gamma -> zero term
    bool pole = mpfr_nan_p(g.raw()) ||
                (mpfr_integer_p(arg.raw()) && mpfr_sgn(arg.raw()) <= 0);
    Big term_mag = pole ? Big(prec) : fn(5, coef / g);
    if (!pole) sum = sum + coef / g;
    // next coefficient
    coef = coef * zz * (Big(static_cast<double>(rho + k), prec) /
                        Big(static_cast<double>(k + 1), prec));
    if (static_cast<double>(k) > plan.k_peak + 4) {
      Big sum_mag = fn(5, sum);
      Big thresh = sum_mag * big_pow(Big(10.0, prec), Big(-(digits + 12.0), prec));
      if (mpfr_cmp(term_mag.raw(), thresh.raw()) < 0) {
        if (++consecutive_small >= 3) {
          if (std::getenv("ORACLE_TRACE"))
            std::fprintf(stderr, "[series] exit k=%ld prec=%ld max_terms=%ld kp=%.1f sum=%.17e\n",
                         k, (long)prec, plan.max_terms, plan.k_peak, sum.to_double());
          return sum;
        }
      } else {
        consecutive_small = 0;
      }
    }
  }
  throw std::runtime_error("oracle series did not converge within term budget");
}

// Integrand of the real-line representation after r = u^alpha:
//   (1/pi) u^{alpha-beta} e^{-u} [u^alpha s1 - z s2] /
//          (u^{2 alpha} - 2 u^alpha z c + z^2)
// with s1 = sin(pi(1-beta)), s2 = sin(pi(1-beta+alpha)), c = cos(pi alpha).
// Valid for 0 < alpha < 1, beta < 1 + alpha, z < 0.
struct GllParams {
  Big alpha, beta, z, s1, s2, c, pi;
  GllParams(double alpha_d, const Big& beta_b, double z_d, mpfr_prec_t prec)
      : alpha(alpha_d, prec),
        beta(beta_b),
        z(z_d, prec),
        s1(prec),
        s2(prec),
        c(prec),
        pi(big_pi(prec)) {
    Big one(1.0, prec);
    s1 = fn(1, pi * (one - beta));
    s2 = fn(1, pi * (one - beta + alpha));
    c = fn(2, pi * alpha);
  }
};

Big gll_integrand(const GllParams& P, const Big& u) {
  mpfr_prec_t prec = u.prec();
  Big ua = big_pow(u, P.alpha);
  Big numer = ua * P.s1 - P.z * P.s2;
  Big denom = ua * ua - Big(2.0, prec) * ua * P.z * P.c + P.z * P.z;
  Big amp = big_pow(u, P.alpha - P.beta) * fn(0, fn(6, u)); // u^{a-b} e^{-u}
  return amp * numer / (denom * P.pi);
}

// exp-sinh quadrature over (0, inf): u = exp((pi/2) sinh(tau)).
Big gll_quad(const GllParams& P, int digits, mpfr_prec_t prec) {
  Big half_pi = big_pi(prec) / Big(2.0, prec);
  Big log_eps = Big(-(digits + 14.0), prec) * fn(0, Big(0.0, prec)); // placeholder
  double h = 0.5;
  Big prev(prec);
  bool have_prev = false;
  for (int level = 0; level < 7; ++level) {
    Big acc(prec);
    // j = 0
    {
      Big u = fn(0, half_pi * fn(3, Big(0.0, prec)));
      acc = acc + gll_integrand(P, u) * u * half_pi * fn(4, Big(0.0, prec));
    }
    for (int dir = -1; dir <= 1; dir += 2) {
      long small_run = 0;
      for (long j = 1; j < 200000; ++j) {
        double tau_d = dir * h * static_cast<double>(j);
        Big tau(tau_d, prec);
        Big u = fn(0, half_pi * fn(3, tau));
        if (!mpfr_number_p(u.raw()) || mpfr_zero_p(u.raw())) break;
        Big contrib = gll_integrand(P, u) * u * half_pi * fn(4, tau);
        if (!mpfr_number_p(contrib.raw())) break;
        acc = acc + contrib;
        Big mag = fn(5, contrib);
        Big ref = fn(5, acc) + Big(1e-300, prec);
        Big thresh = ref * big_pow(Big(10.0, prec), Big(-(digits + 14.0), prec));
        if (mpfr_cmp(mag.raw(), thresh.raw()) < 0) {
          if (++small_run >= 4) break;
        } else {
          small_run = 0;
        }
      }
    }
    Big I = acc * Big(h, prec);
    if (have_prev) {
      Big diff = fn(5, I - prev);
      Big thresh = fn(5, I) * big_pow(Big(10.0, prec), Big(-(digits + 4.0), prec));
      if (mpfr_cmp(diff.raw(), thresh.raw()) < 0) return I;
    }
    prev = I;
    have_prev = true;
    h *= 0.5;
  }
  return prev; // converged levels exhausted; best estimate
}

// E_{alpha,beta}(z) via the integral path, any real beta (shift chain).
Big gll_ml(double alpha, double beta, double z, int digits) {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>((digits + 40) * 3.3220 + 64);
  Big zb(z, prec);
  int down = 0, up = 0;
  double br = beta;
  while (br > 1.0) {
    br -= alpha;
    ++down;
  }
  while (br <= 0.0) {
    br += alpha;
    ++up;
  }
  Big ab(alpha, prec), bb(beta, prec);
  Big br_big = bb;
  if (down)
    br_big = bb - Big(static_cast<double>(down), prec) * ab;
  else if (up)
    br_big = bb + Big(static_cast<double>(up), prec) * ab;
  GllParams P(alpha, br_big, z, prec);
  Big val = gll_quad(P, digits + 6 * (down + up), prec);
  for (int j = 1; j <= down; ++j) {
    // b_j = b_0 + j*alpha; E_{b_j} = (E_{b_{j-1}} - 1/Gamma(b_{j-1})) / z
    Big bprev = br_big + Big(static_cast<double>(j - 1), prec) * ab;
    val = (val - big_rgamma(bprev)) / zb;
  }
  for (int j = 1; j <= up; ++j) {
    // b_j = b_0 - j*alpha; E_{b_j} = z E_{b_{j-1}} + 1/Gamma(b_j)
    Big bj = br_big - Big(static_cast<double>(j), prec) * ab;
    val = zb * val + big_rgamma(bj);
  }
  return val;
}

Big ml_big(double alpha, double beta, double z, int rho, int digits) {
  mpfr_prec_t base_prec = static_cast<mpfr_prec_t>((digits + 30) * 3.3220 + 64);
  if (z > 0.0) throw std::domain_error("oracle::ml: z must be <= 0");
  if (z == 0.0) {
    Big b(beta, base_prec);
    return big_rgamma(b);
  }
  SeriesPlan plan = plan_series(alpha, beta, z, digits);
  if (plan.feasible) return series_big(alpha, beta, z, rho, digits, plan);
  if (rho == 1) {
    if (alpha >= 1.0)
      throw std::runtime_error("oracle::ml: no path for alpha = 1 outside series range");
    return gll_ml(alpha, beta, z, digits);
  }
  // rho = 2 from the one-step parameter recurrence at high precision
  Big e1 = ml_big(alpha, beta - 1.0, z, 1, digits + 10);
  Big e2 = ml_big(alpha, beta, z, 1, digits + 10);
  mpfr_prec_t prec = std::max(e1.prec(), e2.prec());
  Big coefc(1.0 - beta + alpha, prec);
  return (e1 + coefc * e2) / Big(alpha, prec);
}

} // namespace

double ml(double alpha, double beta, double z, int rho, int digits) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("oracle::ml: alpha");
  if (rho < 1 || rho > 2) throw std::domain_error("oracle::ml: rho");
  return ml_big(alpha, beta, z, rho, digits).to_double();
}

double gamma_hp(double x) {
  Big b(x, 256);
  return big_gamma(b).to_double();
}

bool series_feasible(double alpha, double beta, double z, int digits) {
  return plan_series(alpha, beta, z, digits).feasible;
}

double ml_integral_path(double alpha, double beta, double z, int digits) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(z < 0.0))
    throw std::domain_error("oracle::ml_integral_path: need 0 < alpha < 1, z < 0");
  return gll_ml(alpha, beta, z, digits).to_double();
}

} // namespace oracle
