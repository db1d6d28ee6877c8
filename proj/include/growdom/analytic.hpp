#pragma once

#include <optional>
#include <string>

#include "growdom/model.hpp"

namespace growdom::analytic {

enum class LawKind { Probability, MgfValue, LaplaceValue, UpperBound };

/// A closed-form hitting-time result together with the parameter range on
/// which the formula is valid.
struct HittingLaw {
    double value;
    LawKind kind;
    std::string validity;
};

enum class Classification { Recurrent, Transient, Undetermined };

inline const char* to_string(Classification c) {
    switch (c) {
        case Classification::Recurrent: return "Recurrent";
        case Classification::Transient: return "Transient";
        case Classification::Undetermined: return "Undetermined";
    }
    return "?";
}

struct Verdict {
    Classification classification;
    std::optional<bool> positive_recurrent;
    double margin;  // criterion value minus 1
};

struct GrowthOrder {
    enum class Kind { PowerLaw, Exponential, Explosive };
    Kind kind;
    double exponent;  // 1/(1-gamma) when kind == PowerLaw, else unused
};

/// The decision scalar 2 b c^{1+gamma} / (1+gamma).
double criterion(const PowerDrift& drift, double c);

/// Relative tolerance used when comparing the criterion against 1.
inline constexpr double kCriterionTol = 1e-12;

// ---- scale function ----------------------------------------------------

/// log of phi(x) = int_x^inf exp(-2 b t^{1+gamma}/(1+gamma)) dt.
/// Computed through the substitution u = 2 b t^{1+gamma}/(1+gamma), which
/// turns phi into an upper incomplete gamma function; staying in log space
/// keeps ratios usable far beyond the double underflow point of phi itself.
double log_phi(const PowerDrift& drift, double x);

/// phi(x); underflows to 0 once the exponent passes ~745 (use log_phi then).
double phi(const PowerDrift& drift, double x);

/// Leading asymptotic (1/2b) x^{-gamma} exp(-2 b x^{1+gamma}/(1+gamma)).
double phi_asymptotic(const PowerDrift& drift, double x);

/// Threshold on z = 2 b x^{1+gamma}/(1+gamma) past which phi/phi_asymptotic
/// is within 1% of 1. The first correction is (s-1)/z with s = 1/(1+gamma),
/// so the threshold grows like |gamma|/(1+gamma); 30 suffices near gamma = 0.
double phi_asym_threshold(const PowerDrift& drift);

/// Radial scale function (d >= 2): int_x^inf t^{1-d} exp(-2bt^{1+g}/(1+g)) dt,
/// with the undetermined multiplicative constant fixed to 1 (only ratios of
/// differences are ever consumed, and those are constant-free).
double phi_radial(const PowerDrift& drift, int dimension, double x);

/// phi_radial(lo) - phi_radial(hi), computed as a single integral scaled at
/// lo so that no cancellation or underflow occurs.
double phi_radial_diff(const PowerDrift& drift, int dimension, double lo, double hi);

/// P(T_beta < T_alpha | X_0 = x) = (phi(alpha)-phi(x)) / (phi(alpha)-phi(beta))
/// for 1 <= alpha <= x <= beta. With radial_dimension set, uses the radial
/// scale function of that dimension instead.
HittingLaw hitting_prob_up(const PowerDrift& drift, double alpha, double x, double beta,
                           std::optional<int> radial_dimension = std::nullopt);

// ---- hitting-time transforms -------------------------------------------

/// lambda_hat(alpha,beta) = exp(-(2 + 2 b max(alpha^g, beta^g)) (beta-alpha)).
/// For lambda <= lambda_hat the reflected-at-beta process satisfies
/// E_x exp(lambda T_alpha) <= 2 on [alpha, beta].
double prop1_lambda_hat(const PowerDrift& drift, double alpha, double beta);

/// E_x exp((D^2/2) T_beta) for constant drift D, reflected at 1:
/// [exp(D(beta-1)) / (1 + D(beta-1))] (1 + D(x-1)) exp(-D(x-1)).
HittingLaw prop2_mgf(const ConstantDrift& drift, double x, double beta);

/// E_beta exp(-lambda T_alpha) for constant drift D, reflected at beta.
HittingLaw prop3_laplace(const ConstantDrift& drift, double lambda, double alpha, double beta);

/// lambda_bar = b min(alpha^g, beta^g) / ((2e-1)(beta-alpha)). For
/// lambda <= lambda_bar the reflected-at-alpha process satisfies
/// E_x exp(lambda T_beta) <= 2 on [alpha, beta].
double prop4_lambda_bar(const PowerDrift& drift, double alpha, double beta);

// ---- classification ----------------------------------------------------

/// Recurrence/transience verdict for the 1-D process with B(x) = b x^gamma
/// and f(t) = c (log t)^{1/(1+gamma)}.
Verdict classify_1d(const PowerDrift& drift, double c);

/// Multi-dimensional verdict: recurrence side tested with the upper envelope
/// and c scaled by rad+, transience side with the lower envelope and rad-.
Verdict classify_multid(const RadialBounds& bounds, const DomainSpec& dom, double c,
                        bool f_energy_finite);

/// Positive recurrence: true below criticality, false when transient,
/// unknown at criticality.
std::optional<bool> positive_recurrent(const Verdict& verdict);

/// liminf X(t)/f(t) = (1 - (1+gamma)/(2 b c^{1+gamma}))^{1/(1+gamma)} in the
/// transient regime with gamma in (-1,1).
double liminf_constant(const PowerDrift& drift, double c);

/// Deviation threshold exponent for f(t) = t^l: q0 = 0 for gamma >= 0,
/// q0 = -l*gamma for gamma in (-1,0).
double deviation_exponent_q0(double gamma, double l);

/// Growth order of the unconstrained process on [1, inf): t^{1/(1-gamma)}
/// for gamma in (-1,1), exponential at gamma = 1, explosive past it.
GrowthOrder unconstrained_growth_order(double gamma);

}  // namespace growdom::analytic
