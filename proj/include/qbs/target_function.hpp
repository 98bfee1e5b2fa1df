#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace qbs {

/// Holder/Lipschitz class data: |f(t)-f(x)| <= M |t-x|^alpha on [0,1].
struct LipschitzData {
    double M;
    double alpha;
    bool approximate = false;  // estimated numerically rather than supplied
};

/// An evaluable function on [0,1] with optional smoothness metadata used by
/// the bound calculators. Construction checks that eval is finite on a
/// [0,1] grid; attaching Lipschitz data re-checks the inequality on a
/// 101-point grid and rejects metadata the function does not satisfy.
class TargetFunction {
public:
    using Fn = std::function<double(double)>;

    TargetFunction(std::string name, Fn eval);

    TargetFunction& with_derivative(Fn d1, bool approximate = false);
    TargetFunction& with_second_derivative(Fn d2, bool approximate = false);
    TargetFunction& with_lipschitz(double M, double alpha, bool approximate = false);

    double operator()(double x) const { return eval_(x); }
    const Fn& fn() const { return eval_; }
    const std::string& name() const { return name_; }

    bool has_d1() const { return static_cast<bool>(d1_); }
    bool has_d2() const { return static_cast<bool>(d2_); }
    double d1(double x) const;
    double d2(double x) const;
    bool derivatives_approximate() const { return deriv_approx_; }

    const std::optional<LipschitzData>& lipschitz() const { return lipschitz_; }

private:
    std::string name_;
    Fn eval_;
    Fn d1_;
    Fn d2_;
    bool deriv_approx_ = false;
    std::optional<LipschitzData> lipschitz_;
};

}  // namespace qbs
