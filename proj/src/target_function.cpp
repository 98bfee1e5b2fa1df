#include "qbs/target_function.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qbs {

namespace {

// f must be finite on [0,1]; sampled on 101 points.
void check_finite(const TargetFunction::Fn& f, const std::string& name) {
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        if (!std::isfinite(f(x))) {
            std::ostringstream msg;
            msg << "TargetFunction '" << name << "': non-finite value at x = " << x;
            throw std::invalid_argument(msg.str());
        }
    }
}

}  // namespace

TargetFunction::TargetFunction(std::string name, Fn eval)
    : name_(std::move(name)), eval_(std::move(eval)) {
    if (!eval_) throw std::invalid_argument("TargetFunction: eval must be callable");
    check_finite(eval_, name_);
}

TargetFunction& TargetFunction::with_derivative(Fn d1, bool approximate) {
    d1_ = std::move(d1);
    deriv_approx_ = deriv_approx_ || approximate;
    return *this;
}

TargetFunction& TargetFunction::with_second_derivative(Fn d2, bool approximate) {
    d2_ = std::move(d2);
    deriv_approx_ = deriv_approx_ || approximate;
    return *this;
}

TargetFunction& TargetFunction::with_lipschitz(double M, double alpha, bool approximate) {
    if (!(M > 0.0)) throw std::invalid_argument("lipschitz: M must be > 0");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("lipschitz: alpha must be in (0,1]");
    // |f(t)-f(x)| <= M |t-x|^alpha checked on the 101-point grid.
    for (int i = 0; i <= 100; ++i) {
        for (int j = i + 1; j <= 100; ++j) {
            const double x = i / 100.0, t = j / 100.0;
            if (std::abs(eval_(t) - eval_(x)) > M * std::pow(t - x, alpha) + 1e-12) {
                std::ostringstream msg;
                msg << "TargetFunction '" << name_ << "': Lipschitz data (M = " << M
                    << ", alpha = " << alpha << ") violated at (" << x << ", " << t << ")";
                throw std::invalid_argument(msg.str());
            }
        }
    }
    lipschitz_ = LipschitzData{M, alpha, approximate};
    return *this;
}

double TargetFunction::d1(double x) const {
    if (!d1_) throw std::logic_error("TargetFunction '" + name_ + "': no first derivative");
    return d1_(x);
}

double TargetFunction::d2(double x) const {
    if (!d2_) throw std::logic_error("TargetFunction '" + name_ + "': no second derivative");
    return d2_(x);
}

}  // namespace qbs
