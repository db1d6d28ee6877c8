#include "growdom/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "growdom/errors.hpp"

namespace growdom::analytic {

namespace {

constexpr int kMaxIter = 600;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;

// log of the upper incomplete gamma function Gamma(s, z), s > 0, z >= 0.
// Series for the lower function when z < s+1 (the complement is then far
// from 0, so the subtraction is benign), Lentz continued fraction otherwise.
double log_upper_gamma(double s, double z) {
    if (z < 0.0 || s <= 0.0) throw NumericError("log_upper_gamma: need s > 0, z >= 0");
    if (z == 0.0) return std::lgamma(s);

    if (z < s + 1.0) {
        double term = 1.0 / s;
        double sum = term;
        for (int n = 1; n <= kMaxIter; ++n) {
            term *= z / (s + n);
            sum += term;
            if (std::abs(term) < std::abs(sum) * kEps) {
                // P(s,z) = z^s e^-z sum / Gamma(s); return log((1-P) Gamma(s))
                const double log_p_gamma = s * std::log(z) - z + std::log(sum);
                const double p = std::exp(log_p_gamma - std::lgamma(s));
                return std::lgamma(s) + std::log1p(-p);
            }
        }
        throw NumericError("log_upper_gamma: series failed to converge");
    }

    // Gamma(s,z) = e^-z z^s * H, H evaluated by the modified Lentz method.
    double b = z + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return -z + s * std::log(z) + std::log(h);
    }
    throw NumericError("log_upper_gamma: continued fraction failed to converge");
}

// Adaptive Simpson on [a,b] with absolute tolerance.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) throw NumericError("phi_radial: quadrature recursion limit reached");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(const F& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

bool criterion_is_one(double crit) { return std::abs(crit - 1.0) <= kCriterionTol * std::max(1.0, std::abs(crit)); }

}  // namespace

double criterion(const PowerDrift& drift, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("criterion: c must be > 0");
    const double p = 1.0 + drift.exponent();
    return 2.0 * drift.amplitude() * std::pow(c, p) / p;
}

double log_phi(const PowerDrift& drift, double x) {
    if (x < 1.0) throw std::domain_error("log_phi: x must be >= 1");
    const double p = 1.0 + drift.exponent();
    const double a = 2.0 * drift.amplitude() / p;
    const double s = 1.0 / p;
    const double z = a * std::pow(x, p);
    return -s * std::log(a) - std::log(p) + log_upper_gamma(s, z);
}

double phi(const PowerDrift& drift, double x) { return std::exp(log_phi(drift, x)); }

double phi_asymptotic(const PowerDrift& drift, double x) {
    if (x < 1.0) throw std::domain_error("phi_asymptotic: x must be >= 1");
    const double g = drift.exponent();
    const double b = drift.amplitude();
    const double z = 2.0 * b * std::pow(x, 1.0 + g) / (1.0 + g);
    return std::exp(-g * std::log(x) - std::log(2.0 * b) - z);
}

double phi_asym_threshold(const PowerDrift& drift) {
    const double g = drift.exponent();
    return std::max(30.0, 200.0 * std::abs(g) / (1.0 + g));
}

double phi_radial_diff(const PowerDrift& drift, int dimension, double lo, double hi) {
    if (dimension < 2) throw std::invalid_argument("phi_radial: dimension must be >= 2");
    if (lo < 1.0 || hi < lo) throw std::domain_error("phi_radial_diff: need 1 <= lo <= hi");
    if (hi == lo) return 0.0;
    const double p = 1.0 + drift.exponent();
    const double a = 2.0 * drift.amplitude() / p;
    const double zlo = a * std::pow(lo, p);
    // integrand scaled by e^{z(lo)}; <= 1 everywhere on [lo, hi]
    const auto h = [&](double t) {
        return std::pow(t, 1.0 - dimension) * std::exp(zlo - a * std::pow(t, p));
    };
    return integrate(h, lo, hi, 1e-14 * (hi - lo)) * std::exp(-zlo);
}

double phi_radial(const PowerDrift& drift, int dimension, double x) {
    if (dimension < 2) throw std::invalid_argument("phi_radial: dimension must be >= 2");
    if (x < 1.0) throw std::domain_error("phi_radial: x must be >= 1");
    const double g = drift.exponent();
    const double b = drift.amplitude();
    const double p = 1.0 + g;
    const double a = 2.0 * b / p;
    const double zx = a * std::pow(x, p);

    // Scaled integral over doubling segments plus the asymptotic tail once it
    // is negligible: tail(X) ~ X^{1-d-g} e^{-a X^p} / (2b).
    const auto h = [&](double t) {
        return std::pow(t, 1.0 - dimension) * std::exp(zx - a * std::pow(t, p));
    };
    double acc = 0.0;
    double seg_lo = x;
    for (int k = 0; k < 64; ++k) {
        const double seg_hi = seg_lo * 2.0 + 1.0;
        acc += integrate(h, seg_lo, seg_hi, 1e-15 * std::max(acc, 1e-30));
        const double tail = std::pow(seg_hi, 1.0 - dimension - g) / (2.0 * b) *
                            std::exp(zx - a * std::pow(seg_hi, p));
        if (tail < 1e-13 * acc) {
            return (acc + tail) * std::exp(-zx);
        }
        seg_lo = seg_hi;
    }
    throw NumericError("phi_radial: tail did not become negligible");
}

HittingLaw hitting_prob_up(const PowerDrift& drift, double alpha, double x, double beta,
                           std::optional<int> radial_dimension) {
    if (!(1.0 <= alpha && alpha <= x && x <= beta))
        throw std::domain_error("hitting_prob_up: need 1 <= alpha <= x <= beta");
    double v;
    if (beta == alpha) {
        v = 1.0;  // degenerate interval: the two hitting targets coincide
    } else if (radial_dimension) {
        const double num = phi_radial_diff(drift, *radial_dimension, alpha, x);
        const double den = phi_radial_diff(drift, *radial_dimension, alpha, beta);
        v = num / den;
    } else {
        // (phi(a)-phi(x))/(phi(a)-phi(b)) = expm1(L(x)-L(a)) / expm1(L(b)-L(a)),
        // exact at the endpoints and stable when the phi values nearly cancel.
        const double la = log_phi(drift, alpha);
        const double num = std::expm1(log_phi(drift, x) - la);
        const double den = std::expm1(log_phi(drift, beta) - la);
        v = num / den;
    }
    v = std::clamp(v, 0.0, 1.0);
    return {v, LawKind::Probability, "1 <= alpha <= x <= beta"};
}

double prop1_lambda_hat(const PowerDrift& drift, double alpha, double beta) {
    if (!(1.0 <= alpha && alpha <= beta))
        throw std::domain_error("prop1_lambda_hat: need 1 <= alpha <= beta");
    const double g = drift.exponent();
    const double m = std::max(std::pow(alpha, g), std::pow(beta, g));
    return std::exp(-(2.0 + 2.0 * drift.amplitude() * m) * (beta - alpha));
}

HittingLaw prop2_mgf(const ConstantDrift& drift, double x, double beta) {
    if (!(1.0 <= x && x <= beta)) throw std::domain_error("prop2_mgf: need 1 <= x <= beta");
    const double d = drift.value();
    double v;
    if (x == beta) {
        v = 1.0;  // T_beta = 0
    } else {
        v = std::exp(d * (beta - 1.0)) / (1.0 + d * (beta - 1.0)) * (1.0 + d * (x - 1.0)) *
            std::exp(-d * (x - 1.0));
    }
    return {v, LawKind::MgfValue, "lambda = D^2/2"};
}

HittingLaw prop3_laplace(const ConstantDrift& drift, double lambda, double alpha, double beta) {
    if (!(lambda > 0.0)) throw std::domain_error("prop3_laplace: lambda must be > 0");
    if (!(1.0 <= alpha && alpha <= beta))
        throw std::domain_error("prop3_laplace: need 1 <= alpha <= beta");
    const double delta = beta - alpha;
    double v;
    if (delta == 0.0) {
        v = 1.0;  // degenerate limit
    } else {
        const double d = drift.value();
        const double s = std::sqrt(d * d + 2.0 * lambda);
        // all exponents nonpositive in this arrangement
        v = 2.0 * s * std::exp(-(d + s) * delta) /
            ((s - d) + (s + d) * std::exp(-2.0 * s * delta));
    }
    v = std::clamp(v, 0.0, 1.0);
    return {v, LawKind::LaplaceValue, "lambda > 0, 1 < alpha < beta"};
}

double prop4_lambda_bar(const PowerDrift& drift, double alpha, double beta) {
    if (!(1.0 <= alpha && alpha < beta))
        throw std::domain_error("prop4_lambda_bar: need 1 <= alpha < beta");
    const double g = drift.exponent();
    const double m = std::min(std::pow(alpha, g), std::pow(beta, g));
    return drift.amplitude() * m / ((2.0 * M_E - 1.0) * (beta - alpha));
}

Verdict classify_1d(const PowerDrift& drift, double c) {
    const double crit = criterion(drift, c);
    const double g = drift.exponent();
    Verdict v;
    v.margin = crit - 1.0;
    if (criterion_is_one(crit)) {
        if (g >= -0.5) {
            v.classification = Classification::Recurrent;
        } else {
            v.classification = Classification::Undetermined;  // open in the borderline gamma range
        }
        v.positive_recurrent = std::nullopt;  // open at criticality
    } else if (crit < 1.0) {
        v.classification = Classification::Recurrent;
        v.positive_recurrent = true;
    } else {
        v.classification = Classification::Transient;
        v.positive_recurrent = false;
    }
    return v;
}

Verdict classify_multid(const RadialBounds& bounds, const DomainSpec& dom, double c,
                        bool f_energy_finite) {
    if (dom.dimension() < 2)
        throw std::invalid_argument("classify_multid: use classify_1d for dimension 1");
    const double crit_trans = criterion(bounds.b_minus, c * dom.rad_minus());
    const double crit_rec = criterion(bounds.b_plus, c * dom.rad_plus());
    const bool geometry_ok = dom.is_ball() || f_energy_finite;

    Verdict v;
    if (!criterion_is_one(crit_trans) && crit_trans > 1.0) {
        v.classification = Classification::Transient;
        v.positive_recurrent = false;
        v.margin = crit_trans - 1.0;
        return v;
    }
    v.margin = crit_rec - 1.0;
    if (geometry_ok && !criterion_is_one(crit_rec) && crit_rec < 1.0) {
        v.classification = Classification::Recurrent;
        v.positive_recurrent = true;
    } else if (geometry_ok && criterion_is_one(crit_rec) && dom.dimension() == 2 &&
               bounds.b_plus.exponent() >= 0.0) {
        v.classification = Classification::Recurrent;
        v.positive_recurrent = std::nullopt;
    } else {
        v.classification = Classification::Undetermined;
        v.positive_recurrent = std::nullopt;
    }
    return v;
}

std::optional<bool> positive_recurrent(const Verdict& verdict) { return verdict.positive_recurrent; }

double liminf_constant(const PowerDrift& drift, double c) {
    const double g = drift.exponent();
    if (!(g > -1.0 && g < 1.0))
        throw std::invalid_argument("liminf_constant: gamma must be in (-1,1)");
    const double crit = criterion(drift, c);
    if (criterion_is_one(crit) || crit < 1.0)
        throw std::domain_error("liminf_constant: undefined unless 2bc^{1+g}/(1+g) > 1");
    return std::pow(1.0 - 1.0 / crit, 1.0 / (1.0 + g));
}

double deviation_exponent_q0(double gamma, double l) {
    if (!(gamma > -1.0 && gamma < 1.0))
        throw std::invalid_argument("deviation_exponent_q0: gamma must be in (-1,1)");
    if (!(l > 0.0 && l < 1.0 / (1.0 - gamma)))
        throw std::invalid_argument("deviation_exponent_q0: l must lie in (0, 1/(1-gamma))");
    return gamma >= 0.0 ? 0.0 : -l * gamma;
}

GrowthOrder unconstrained_growth_order(double gamma) {
    if (!(gamma > -1.0)) throw std::invalid_argument("unconstrained_growth_order: gamma must be > -1");
    if (gamma < 1.0) return {GrowthOrder::Kind::PowerLaw, 1.0 / (1.0 - gamma)};
    if (gamma == 1.0) return {GrowthOrder::Kind::Exponential, 0.0};
    return {GrowthOrder::Kind::Explosive, 0.0};
}

}  // namespace growdom::analytic
