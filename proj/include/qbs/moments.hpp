#pragma once

#include <optional>
#include <string>

#include "qbs/operators.hpp"
#include "qbs/qcalc.hpp"
#include "qbs/stancu.hpp"

namespace qbs {

/// Fault-injection hook for the closed-form moment verification: multiplies
/// one named coefficient by (1 + rel). Used by the verify suite to prove the
/// oracle comparisons catch seeded coefficient errors; production callers
/// leave it defaulted.
enum class MomentTweakSite {
    None,
    FirstMomentSlope,
    FirstMomentOffset,
    SecondMomentQuadratic,
    SecondMomentLinear,
    SecondMomentConstant,
    BoundLeadingTerm,
};

struct MomentTweak {
    MomentTweakSite site = MomentTweakSite::None;
    double rel = 0.0;
};

std::optional<MomentTweakSite> parse_tweak_site(const std::string& name);
const char* tweak_site_names();

/// Closed form of K(t; x):
///   ([n]+b2)/([n+1]+b1) * (2q/[2]) * (x-a) + (a1 + 1/[2])/([n+1]+b1),
/// a = alpha2/([n]+beta2).
double first_moment(int n, QValue q, const StancuParams& params, double x,
                    const MomentTweak& tweak = {});

/// Closed form of K(t^2; x), quadratic term read as the ordinary square
/// (x-a)^2. This is the reading consistent with the partition of unity;
/// matches the operator to brute-force accuracy.
double second_moment(int n, QValue q, const StancuParams& params, double x,
                     const MomentTweak& tweak = {});

/// Diagnostic variant: quadratic term read as the q-shifted product
/// (x-a)(x-qa). Kept so the verify suite can report which reading matches
/// the operator; it is not used by any bound.
double second_moment_qshifted(int n, QValue q, const StancuParams& params, double x);

/// K((t-x)^2; x) = m2 - 2x m1 + x^2; nonnegative on [a,b].
double central_second_moment(int n, QValue q, const StancuParams& params, double x,
                             const MomentTweak& tweak = {});

/// The five-term closed upper bound for the central second moment.
/// Evaluated verbatim; it genuinely dominates only in the near-1 regime
/// (q >= 0.7 on the test grids) and can even go negative for small q with
/// large shifts -- callers that need a valid bound must stay in the regime,
/// and the verify suite scans and reports where it holds.
double central_second_moment_bound(int n, QValue q, const StancuParams& params,
                                   const MomentTweak& tweak = {});

/// sqrt of the five-term bound: the delta driving the sup-norm modulus
/// estimates. Throws std::domain_error when the bound is negative
/// (parameter regime where it is meaningless); never clamps silently.
double delta_global(int n, QValue q, const StancuParams& params,
                    const MomentTweak& tweak = {});

/// Coefficients of the affine map the operator applies to the identity:
/// K(t; x) = slope * x + offset exactly.
struct AffineCoeffs {
    double slope;
    double offset;
};
AffineCoeffs first_moment_line(int n, QValue q, const StancuParams& params);

/// The quadratic-in-x expression bounding central moment + drift^2 that
/// feeds the second-modulus local estimate.
double delta_local(int n, QValue q, const StancuParams& params, double x);

/// Voronovskaja-scale limits: [n](K(t;x) - x) -> drift and
/// [n] K((t-x)^2;x) -> diffusion, along q_n -> 1 with q_n^n -> a.
struct VoronovskajaLimit {
    double drift;
    double diffusion;
};

/// drift = -(1+a+2(b1-b2))x/2 + (1+2(a1-a2))/2; diffusion = x - x^2.
/// The diffusion is parameter-free: the printed shifted-knot formula
/// (see voronovskaja_limit_printed) does not match the operator, this does.
VoronovskajaLimit voronovskaja_limit(double x, double a, const StancuParams& params);

/// Diagnostic variant with diffusion = (a + 2b1 - 2b2)x^2 + x, kept for the
/// verify suite's formula comparison.
VoronovskajaLimit voronovskaja_limit_printed(double x, double a, const StancuParams& params);

/// Sequences q_n -> 1 used by the convergence and Voronovskaja experiments.
class QSequence {
public:
    enum class Kind { Fixed, OneMinusCOverN, NthRootOfA };

    static QSequence fixed(QValue q);
    /// q_n = 1 - c/n; requires n > c at generation time.
    static QSequence one_minus_c_over_n(double c);
    /// q_n = a^{1/n} so q_n^n = a exactly, for a in (0,1). For a = 0 the
    /// generator uses q_n = (1/(n+1))^{1/n}, i.e. q_n^n = 1/(n+1) -> 0.
    static QSequence nth_root_of(double a);

    QValue at(int n) const;
    /// Limit of q_n^n: a for NthRootOfA, e^{-c} for OneMinusCOverN,
    /// empty for Fixed (whose q_n does not tend to 1).
    std::optional<double> limit_a() const;
    Kind kind() const { return kind_; }
    std::string describe() const;

private:
    QSequence(Kind kind, double p) : kind_(kind), param_(p) {}
    Kind kind_;
    double param_;
};

/// Bundle of all moment quantities at one point; m0 is the operator
/// actually applied to the constant 1, not the constant folded.
struct MomentReport {
    double m0;
    double m1;
    double m2;
    double central2;
    double central2_bound;
    double at_x;
};

MomentReport moment_report(const OperatorSpec& spec, double x, JacksonTolerance tol = {});

}  // namespace qbs
