#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace growdom {

/// x^e with fast paths for the exponents the experiments actually use.
/// Simulation loops evaluate this a few billion times, so the common cases
/// avoid std::pow.
class PowerFn {
 public:
    explicit PowerFn(double exponent = 1.0) : e_(exponent) {
        if (exponent == 0.0) mode_ = Mode::Zero;
        else if (exponent == 1.0) mode_ = Mode::One;
        else if (exponent == 2.0) mode_ = Mode::Two;
        else if (exponent == 0.5) mode_ = Mode::Half;
        else if (exponent == -0.5) mode_ = Mode::NegHalf;
        else if (exponent == -1.0) mode_ = Mode::NegOne;
        else mode_ = Mode::General;
    }

    double exponent() const { return e_; }

    double operator()(double x) const {
        switch (mode_) {
            case Mode::Zero: return 1.0;
            case Mode::One: return x;
            case Mode::Two: return x * x;
            case Mode::Half: return std::sqrt(x);
            case Mode::NegHalf: return 1.0 / std::sqrt(x);
            case Mode::NegOne: return 1.0 / x;
            case Mode::General: return std::pow(x, e_);
        }
        return std::pow(x, e_);
    }

 private:
    enum class Mode { Zero, One, Two, Half, NegHalf, NegOne, General };
    double e_;
    Mode mode_;
};

/// Power-law drift field B(x) = b x^gamma on [1, inf), b > 0, gamma > -1.
class PowerDrift {
 public:
    PowerDrift(double b, double gamma) : b_(b), gamma_(gamma), pow_(gamma) {
        if (!(b > 0.0)) throw std::invalid_argument("PowerDrift: amplitude b must be > 0");
        if (!(gamma > -1.0)) throw std::invalid_argument("PowerDrift: exponent gamma must be > -1");
    }

    double amplitude() const { return b_; }
    double exponent() const { return gamma_; }

    /// b * x^gamma, finite for all x >= 1.
    double eval(double x) const { return b_ * pow_(x); }

 private:
    double b_;
    double gamma_;
    PowerFn pow_;
};

/// Constant drift D > 0 (the gamma = 0 specialization used in the closed-form
/// hitting-time transforms).
class ConstantDrift {
 public:
    explicit ConstantDrift(double d) : d_(d) {
        if (!(d > 0.0)) throw std::invalid_argument("ConstantDrift: value must be > 0");
    }
    double value() const { return d_; }
    double eval(double) const { return d_; }

 private:
    double d_;
};

/// Moving-boundary radius f(t).
///
/// Kinds:
///   LogPower            f(t) = c (log t)^e            (t >= 1)
///   Power               f(t) = t^l                    (t >= 0)
///   CanonicalPiecewise  f(t) = 2 on [0, t*], c (log t)^{1/(1+gamma)} after,
///                       t* = exp((2/c)^{1+gamma}); continuous at t*.
///
/// LogPower and Power only exceed 1 for large enough t; simulations are
/// required to start at a time where f(t_start) > 1.
class GrowthFunction {
 public:
    enum class Kind { LogPower, Power, CanonicalPiecewise };

    static GrowthFunction log_power(double c, double exponent) {
        if (!(c > 0.0)) throw std::invalid_argument("GrowthFunction::log_power: c must be > 0");
        if (!(exponent > 0.0))
            throw std::invalid_argument("GrowthFunction::log_power: exponent must be > 0");
        return GrowthFunction(Kind::LogPower, c, exponent, 0.0);
    }

    static GrowthFunction power(double l) {
        if (!(l > 0.0)) throw std::invalid_argument("GrowthFunction::power: l must be > 0");
        return GrowthFunction(Kind::Power, 1.0, l, 0.0);
    }

    static GrowthFunction canonical(double c, double gamma) {
        if (!(c > 0.0)) throw std::invalid_argument("GrowthFunction::canonical: c must be > 0");
        if (!(gamma > -1.0))
            throw std::invalid_argument("GrowthFunction::canonical: gamma must be > -1");
        return GrowthFunction(Kind::CanonicalPiecewise, c, 1.0 / (1.0 + gamma), gamma);
    }

    Kind kind() const { return kind_; }
    double coefficient() const { return c_; }
    double exponent() const { return exp_.exponent(); }

    /// Switch time t* of the canonical piecewise form.
    double switch_time() const {
        if (kind_ != Kind::CanonicalPiecewise)
            throw std::logic_error("switch_time: only defined for the canonical form");
        return switch_time_;
    }

    /// Smallest t with f(t) defined; f is nondecreasing from there on.
    double min_time() const { return kind_ == Kind::LogPower ? 1.0 : 0.0; }

    /// Smallest t with f(t) > 1 for all later times.
    double min_start_time() const {
        switch (kind_) {
            case Kind::LogPower: return std::exp(std::pow(1.0 / c_, 1.0 / exp_.exponent()));
            case Kind::Power: return 1.0;
            case Kind::CanonicalPiecewise: return 0.0;
        }
        return 0.0;
    }

    double operator()(double t) const {
        switch (kind_) {
            case Kind::LogPower: {
                if (t < 1.0)
                    throw std::domain_error("GrowthFunction: log-power form needs t >= 1");
                return c_ * exp_(std::log(t));
            }
            case Kind::Power: {
                if (t < 0.0) throw std::domain_error("GrowthFunction: t must be >= 0");
                return exp_(t);
            }
            case Kind::CanonicalPiecewise: {
                if (t < 0.0) throw std::domain_error("GrowthFunction: t must be >= 0");
                if (t <= switch_time_) return 2.0;
                return c_ * exp_(std::log(t));
            }
        }
        return 0.0;
    }

    /// df/dt (one-sided 0 on the flat canonical segment).
    double derivative(double t) const {
        switch (kind_) {
            case Kind::LogPower: {
                if (t < 1.0)
                    throw std::domain_error("GrowthFunction: log-power form needs t >= 1");
                const double lg = std::log(t);
                if (lg == 0.0) return 0.0;
                return c_ * exp_.exponent() * exp_(lg) / (lg * t);
            }
            case Kind::Power:
                if (t <= 0.0) return 0.0;
                return exp_.exponent() * exp_(t) / t;
            case Kind::CanonicalPiecewise: {
                if (t <= switch_time_) return 0.0;
                const double lg = std::log(t);
                return c_ * exp_.exponent() * exp_(lg) / (lg * t);
            }
        }
        return 0.0;
    }

 private:
    GrowthFunction(Kind kind, double c, double exponent, double gamma)
        : kind_(kind), c_(c), exp_(exponent), gamma_(gamma) {
        if (kind_ == Kind::CanonicalPiecewise)
            switch_time_ = std::exp(std::pow(2.0 / c_, 1.0 + gamma_));
    }

    Kind kind_;
    double c_;
    PowerFn exp_;
    double gamma_ = 0.0;
    double switch_time_ = 0.0;
};

/// Domain geometry: 1-D interval (1, f(t)), or a d-dimensional ball / star
/// body scaled by f(t).
class DomainSpec {
 public:
    struct Interval {};
    struct Ball {
        double radius;
    };
    struct StarBody {
        double rad_minus;
        double rad_plus;
    };
    using Shape = std::variant<Interval, Ball, StarBody>;

    static DomainSpec interval(GrowthFunction growth) {
        return DomainSpec(1, Interval{}, std::move(growth));
    }

    static DomainSpec ball(int dimension, double radius, GrowthFunction growth) {
        if (dimension < 2) throw std::invalid_argument("DomainSpec::ball: dimension must be >= 2");
        if (!(radius > 0.0)) throw std::invalid_argument("DomainSpec::ball: radius must be > 0");
        return DomainSpec(dimension, Ball{radius}, std::move(growth));
    }

    static DomainSpec star_body(int dimension, double rad_minus, double rad_plus,
                                GrowthFunction growth) {
        if (dimension < 2)
            throw std::invalid_argument("DomainSpec::star_body: dimension must be >= 2");
        if (!(rad_minus > 0.0) || !(rad_minus <= rad_plus))
            throw std::invalid_argument("DomainSpec::star_body: need 0 < rad_minus <= rad_plus");
        return DomainSpec(dimension, StarBody{rad_minus, rad_plus}, std::move(growth));
    }

    int dimension() const { return dimension_; }
    const Shape& shape() const { return shape_; }
    const GrowthFunction& growth() const { return growth_; }

    bool is_ball() const { return std::holds_alternative<Ball>(shape_); }

    double rad_plus() const {
        if (const auto* b = std::get_if<Ball>(&shape_)) return b->radius;
        if (const auto* s = std::get_if<StarBody>(&shape_)) return s->rad_plus;
        throw std::logic_error("rad_plus: 1-D interval has no radial extent");
    }

    double rad_minus() const {
        if (const auto* b = std::get_if<Ball>(&shape_)) return b->radius;
        if (const auto* s = std::get_if<StarBody>(&shape_)) return s->rad_minus;
        throw std::logic_error("rad_minus: 1-D interval has no radial extent");
    }

 private:
    DomainSpec(int dimension, Shape shape, GrowthFunction growth)
        : dimension_(dimension), shape_(shape), growth_(std::move(growth)) {}

    int dimension_;
    Shape shape_;
    GrowthFunction growth_;
};

/// Power-law envelopes for the radial drift component: b_minus bounds
/// B^-(r) from below arguments, b_plus bounds B^+(r). The pair must satisfy
/// b_minus.eval(r) <= b_plus.eval(r) for all r >= 1, which for power laws is
/// equivalent to ordering both the amplitudes and the exponents.
struct RadialBounds {
    RadialBounds(PowerDrift plus, PowerDrift minus)
        : b_plus(std::move(plus)), b_minus(std::move(minus)) {
        if (b_minus.amplitude() > b_plus.amplitude() || b_minus.exponent() > b_plus.exponent())
            throw std::invalid_argument(
                "RadialBounds: lower envelope exceeds upper envelope on [1, inf)");
    }

    PowerDrift b_plus;
    PowerDrift b_minus;
};

// ---- operations -------------------------------------------------------

inline double eval_growth(const GrowthFunction& f, double t) { return f(t); }

/// b x^gamma for x >= 1; the process never queries the drift below 1.
inline double eval_drift(const PowerDrift& drift, double x) {
    if (x < 1.0) throw std::domain_error("eval_drift: state space is [1, f(t)), got x < 1");
    return drift.eval(x);
}

/// The 1-D drift for the radial part of the d-dimensional ball process:
/// B(r) + (d-1)/(2r).
inline double radial_reduced_drift(const PowerDrift& drift, int dimension, double r) {
    if (dimension < 2) throw std::invalid_argument("radial_reduced_drift: dimension must be >= 2");
    if (r < 1.0) throw std::domain_error("radial_reduced_drift: r must be >= 1");
    return drift.eval(r) + static_cast<double>(dimension - 1) / (2.0 * r);
}

}  // namespace growdom
