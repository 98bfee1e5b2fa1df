#include "qbs/moments.hpp"

#include <cmath>
#include <sstream>

namespace qbs {

namespace {

double tweak_factor(const MomentTweak& t, MomentTweakSite site) {
    return t.site == site ? 1.0 + t.rel : 1.0;
}

struct MomentContext {
    double qn;      // [n]
    double D;       // [n+1] + beta1
    double a;       // left endpoint alpha2/([n]+beta2)
    double q2;      // [2]
    double q3;      // [3]
    double R;       // ([n]+beta2)/D
};

MomentContext make_context(int n, QValue q, const StancuParams& p) {
    if (n < 1) throw std::invalid_argument("moments: n must be >= 1");
    const double qq = q.value();
    MomentContext c;
    c.qn = q_integer(n, q);
    c.D = q_integer(n + 1, q) + p.beta1;
    c.a = p.alpha2 / (c.qn + p.beta2);
    c.q2 = 1.0 + qq;
    c.q3 = 1.0 + qq + qq * qq;
    c.R = (c.qn + p.beta2) / c.D;
    return c;
}

}  // namespace

std::optional<MomentTweakSite> parse_tweak_site(const std::string& name) {
    if (name.empty() || name == "none") return MomentTweakSite::None;
    if (name == "m1-slope") return MomentTweakSite::FirstMomentSlope;
    if (name == "m1-offset") return MomentTweakSite::FirstMomentOffset;
    if (name == "m2-quad") return MomentTweakSite::SecondMomentQuadratic;
    if (name == "m2-lin") return MomentTweakSite::SecondMomentLinear;
    if (name == "m2-const") return MomentTweakSite::SecondMomentConstant;
    if (name == "bound-lead") return MomentTweakSite::BoundLeadingTerm;
    return std::nullopt;
}

const char* tweak_site_names() {
    return "none|m1-slope|m1-offset|m2-quad|m2-lin|m2-const|bound-lead";
}

double first_moment(int n, QValue q, const StancuParams& p, double x, const MomentTweak& tweak) {
    const MomentContext c = make_context(n, q, p);
    const double qq = q.value();
    const double slope = tweak_factor(tweak, MomentTweakSite::FirstMomentSlope) *
                         c.R * (2.0 * qq / c.q2);
    const double offset = tweak_factor(tweak, MomentTweakSite::FirstMomentOffset) *
                          (p.alpha1 + 1.0 / c.q2) / c.D;
    return slope * (x - c.a) + offset;
}

namespace {

double second_moment_impl(int n, QValue q, const StancuParams& p, double x,
                          const MomentTweak& tweak, bool qshifted_quadratic) {
    const MomentContext c = make_context(n, q, p);
    const double qq = q.value();
    const double A = 1.0 + (qq - 1.0) * (qq - 1.0) / c.q3 + 2.0 * (qq - 1.0) / c.q2;
    const double AB = 1.0 + (qq * qq - 1.0) / c.q3 + (2.0 * p.alpha1 + 1.0) * 2.0 * qq / c.q2;
    const double C = p.alpha1 * p.alpha1 + 2.0 * p.alpha1 / c.q2 + 1.0 / c.q3;
    const double quad = qshifted_quadratic ? (x - c.a) * (x - qq * c.a)
                                           : (x - c.a) * (x - c.a);
    return tweak_factor(tweak, MomentTweakSite::SecondMomentQuadratic) *
               (qq * q_integer(n - 1, q) / c.qn) * A * c.R * c.R * quad +
           tweak_factor(tweak, MomentTweakSite::SecondMomentLinear) *
               AB * (c.qn + p.beta2) / (c.D * c.D) * (x - c.a) +
           tweak_factor(tweak, MomentTweakSite::SecondMomentConstant) * C / (c.D * c.D);
}

}  // namespace

double second_moment(int n, QValue q, const StancuParams& p, double x, const MomentTweak& tweak) {
    return second_moment_impl(n, q, p, x, tweak, false);
}

double second_moment_qshifted(int n, QValue q, const StancuParams& p, double x) {
    return second_moment_impl(n, q, p, x, {}, true);
}

double central_second_moment(int n, QValue q, const StancuParams& p, double x,
                             const MomentTweak& tweak) {
    return second_moment(n, q, p, x, tweak) - 2.0 * x * first_moment(n, q, p, x, tweak) + x * x;
}

double central_second_moment_bound(int n, QValue q, const StancuParams& p,
                                   const MomentTweak& tweak) {
    const MomentContext c = make_context(n, q, p);
    const double qq = q.value();
    const double t1 = tweak_factor(tweak, MomentTweakSite::BoundLeadingTerm) *
                      (2.0 * qq * qq * (2.0 * qq + 1.0)) / (c.q2 * c.q3) *
                      c.qn * (c.qn + p.alpha2) / (c.D * c.D);
    const double t2 = qq / c.q2 * ((3.0 + 5.0 * qq + 4.0 * qq * qq) / c.q3 + 4.0 * p.alpha1) *
                      c.qn / (c.D * c.D);
    const double t3 = -2.0 / c.q2 * (2.0 * qq * c.qn + 2.0 * p.alpha1 + 1.0) *
                      (c.qn + p.alpha2) / (c.D * (c.qn + p.beta2));
    const double t4 = (c.qn + p.alpha2) / (c.qn + p.beta2) *
                      ((c.qn + p.alpha2) / (c.qn + p.beta2));
    const double t5 = (1.0 + p.alpha1) / c.D * ((1.0 + p.alpha1) / c.D);
    return t1 + t2 + t3 + t4 + t5;
}

double delta_global(int n, QValue q, const StancuParams& p, const MomentTweak& tweak) {
    const double b = central_second_moment_bound(n, q, p, tweak);
    if (b < 0.0) {
        std::ostringstream msg;
        msg << "delta_global: central moment bound is negative (" << b << ") at n = " << n
            << ", q = " << q.value() << "; the closed bound is outside its valid regime here";
        throw std::domain_error(msg.str());
    }
    return std::sqrt(b);
}

AffineCoeffs first_moment_line(int n, QValue q, const StancuParams& p) {
    const MomentContext c = make_context(n, q, p);
    const double qq = q.value();
    const double slope = 2.0 * qq / (1.0 + qq) * c.R;
    const double offset = (p.alpha1 + 1.0 / (1.0 + qq)) / c.D -
                          2.0 * qq / (1.0 + qq) * p.alpha2 / c.D;
    return {slope, offset};
}

double delta_local(int n, QValue q, const StancuParams& p, double x) {
    const MomentContext c = make_context(n, q, p);
    const double qq = q.value();
    const double cx2 =
        (1.0 + 2.0 * qq + 4.0 * qq * qq + 5.0 * qq * qq * qq) /
            (1.0 + 2.0 * qq + 2.0 * qq * qq + qq * qq * qq) * c.R * c.R -
        2.0 * (3.0 * qq + 1.0) / c.q2 * c.R + 2.0;
    const double cx1 =
        ((5.0 + 7.0 * qq + 6.0 * qq * qq) / c.q3 +
         2.0 * qq * qq * (2.0 * qq + 1.0) * p.alpha2 / (c.q3 * c.qn) + 4.0 * p.alpha1) *
            (c.qn + p.beta2) / (c.D * c.D) +
        2.0 * p.alpha2 / c.D;
    const double cx0 =
        qq * qq * (2.0 * qq + 1.0) / c.q3 * (p.alpha2 / c.D) * (p.alpha2 / c.D) -
        qq / c.q2 * ((3.0 + 5.0 * qq + 4.0 * qq * qq) / c.q3 + 4.0 * p.alpha1) * p.alpha2 /
            (c.D * c.D) +
        2.0 * ((1.0 + p.alpha1) / c.D) * ((1.0 + p.alpha1) / c.D);
    return cx2 * x * x + cx1 * x + cx0;
}

VoronovskajaLimit voronovskaja_limit(double x, double a, const StancuParams& p) {
    if (!(a >= 0.0 && a < 1.0))
        throw std::invalid_argument("voronovskaja_limit: a must be in [0,1)");
    const double drift = -(1.0 + a + 2.0 * (p.beta1 - p.beta2)) * x / 2.0 +
                         (1.0 + 2.0 * (p.alpha1 - p.alpha2)) / 2.0;
    return {drift, x - x * x};
}

VoronovskajaLimit voronovskaja_limit_printed(double x, double a, const StancuParams& p) {
    const double drift = voronovskaja_limit(x, a, p).drift;
    return {drift, (a + 2.0 * p.beta1 - 2.0 * p.beta2) * x * x + x};
}

QSequence QSequence::fixed(QValue q) { return {Kind::Fixed, q.value()}; }

QSequence QSequence::one_minus_c_over_n(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("QSequence: c must be > 0");
    return {Kind::OneMinusCOverN, c};
}

QSequence QSequence::nth_root_of(double a) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("QSequence: a must be in [0,1)");
    return {Kind::NthRootOfA, a};
}

QValue QSequence::at(int n) const {
    if (n < 1) throw std::invalid_argument("QSequence: n must be >= 1");
    switch (kind_) {
        case Kind::Fixed:
            return QValue(param_);
        case Kind::OneMinusCOverN:
            if (n <= param_)
                throw std::invalid_argument("QSequence: 1 - c/n needs n > c");
            return QValue(1.0 - param_ / n);
        case Kind::NthRootOfA:
            if (param_ == 0.0) return QValue(std::pow(1.0 / (n + 1.0), 1.0 / n));
            return QValue(std::pow(param_, 1.0 / n));
    }
    throw std::logic_error("QSequence: unknown kind");
}

std::optional<double> QSequence::limit_a() const {
    switch (kind_) {
        case Kind::Fixed: return std::nullopt;
        case Kind::OneMinusCOverN: return std::exp(-param_);
        case Kind::NthRootOfA: return param_;
    }
    return std::nullopt;
}

std::string QSequence::describe() const {
    std::ostringstream s;
    switch (kind_) {
        case Kind::Fixed: s << "fixed:" << param_; break;
        case Kind::OneMinusCOverN: s << "one-minus-c/N:" << param_; break;
        case Kind::NthRootOfA: s << "nthroot:" << param_; break;
    }
    return s.str();
}

MomentReport moment_report(const OperatorSpec& spec, double x, JacksonTolerance tol) {
    if (spec.kind() != OperatorKind::QKantorovichStancu)
        throw std::invalid_argument("moment_report: closed moments exist for the "
                                    "q-kantorovich-stancu kind only");
    const int n = spec.degree();
    const QValue q = spec.q();
    const StancuParams& p = spec.params();
    const TargetFunction one("one", [](double) { return 1.0; });
    MomentReport r;
    r.m0 = Evaluator(spec, one, tol)(x);
    r.m1 = first_moment(n, q, p, x);
    r.m2 = second_moment(n, q, p, x);
    r.central2 = central_second_moment(n, q, p, x);
    r.central2_bound = central_second_moment_bound(n, q, p);
    r.at_x = x;
    return r;
}

}  // namespace qbs
