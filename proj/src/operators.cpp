#include "qbs/operators.hpp"

#include <cmath>
#include <utility>

namespace qbs {

namespace {

// 16-point Gauss-Legendre rule on [-1,1].
constexpr int kGL = 16;
constexpr double kGLNode[kGL] = {
    -0.98940093499164994, -0.9445750230732326,  -0.86563120238783176, -0.755404408355003,
    -0.61787624440264377, -0.45801677765722737, -0.28160355077925892, -0.095012509837637454,
    0.095012509837637454, 0.28160355077925892,  0.45801677765722737,  0.61787624440264377,
    0.755404408355003,    0.86563120238783176,  0.9445750230732326,   0.98940093499164994};
constexpr double kGLWeight[kGL] = {
    0.027152459411754037, 0.062253523938647706, 0.095158511682492591, 0.12462897125553403,
    0.14959598881657676,  0.16915651939500262,  0.18260341504492361,  0.18945061045506859,
    0.18945061045506859,  0.18260341504492361,  0.16915651939500262,  0.14959598881657676,
    0.12462897125553403,  0.095158511682492591, 0.062253523938647706, 0.027152459411754037};

double gauss_legendre_unit(const std::function<double(double)>& g) {
    double s = 0.0;
    for (int i = 0; i < kGL; ++i) s += kGLWeight[i] * g(0.5 * (kGLNode[i] + 1.0));
    return 0.5 * s;
}

// Above this q the Jackson series needs >3e5 terms for abs_tol 1e-14; the
// node measure is then dense enough that the Euler-Maclaurin-corrected
// Gauss-Legendre value I + eps/2 (g(1) - I), eps = -ln q, is accurate to
// O(eps^2) <= 1e-8 and exact for constant g.
constexpr double kNearOneSwitch = 0.9999;

double q_integral_unit(const std::function<double(double)>& g, QValue q, JacksonTolerance tol) {
    const double qq = q.value();
    if (qq < kNearOneSwitch) return jackson_integral(g, 1.0, q, tol);
    const double eps = -std::log(qq);
    const double I = gauss_legendre_unit(g);
    return I + 0.5 * eps * (g(1.0) - I);
}

// Ordinary binomial weights C(n,k) u^k (1-u)^{n-k}; running products keep
// every factor well-defined at u = 0 and u = 1.
std::vector<double> binomial_weights(int n, double u) {
    std::vector<double> w(n + 1);
    double c = 1.0;   // C(n,k)
    double uk = 1.0;  // u^k
    for (int k = 0; k <= n; ++k) {
        w[k] = c * uk * std::pow(1.0 - u, n - k);
        c *= static_cast<double>(n - k) / (k + 1.0);
        uk *= u;
    }
    return w;
}

StancuDomain classical_domain(int n, const StancuParams& p) {
    return {p.alpha2 / (n + p.beta2), (n + p.alpha2) / (n + p.beta2)};
}

}  // namespace

const char* kind_name(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::Bernstein: return "bernstein";
        case OperatorKind::Kantorovich: return "kantorovich";
        case OperatorKind::QBernsteinKantorovich: return "q-bernstein-kantorovich";
        case OperatorKind::StancuShifted: return "stancu-shifted";
        case OperatorKind::KantorovichStancu: return "kantorovich-stancu";
        case OperatorKind::QKantorovichStancu: return "q-kantorovich-stancu";
    }
    return "?";
}

OperatorSpec::OperatorSpec(OperatorKind kind, int n, std::optional<QValue> q,
                           std::optional<StancuParams> params)
    : kind_(kind), n_(n), q_(q), params_(params) {
    if (n < 1) throw std::invalid_argument("OperatorSpec: n must be >= 1");
}

OperatorSpec OperatorSpec::bernstein(int n) {
    return {OperatorKind::Bernstein, n, std::nullopt, std::nullopt};
}
OperatorSpec OperatorSpec::kantorovich(int n) {
    return {OperatorKind::Kantorovich, n, std::nullopt, std::nullopt};
}
OperatorSpec OperatorSpec::q_bernstein_kantorovich(int n, QValue q) {
    return {OperatorKind::QBernsteinKantorovich, n, q, std::nullopt};
}
OperatorSpec OperatorSpec::stancu_shifted(int n, const StancuParams& params) {
    return {OperatorKind::StancuShifted, n, std::nullopt, params};
}
OperatorSpec OperatorSpec::kantorovich_stancu(int n, const StancuParams& params) {
    return {OperatorKind::KantorovichStancu, n, std::nullopt, params};
}
OperatorSpec OperatorSpec::q_kantorovich_stancu(int n, QValue q, const StancuParams& params) {
    return {OperatorKind::QKantorovichStancu, n, q, params};
}

const QValue& OperatorSpec::q() const {
    if (!q_) throw std::logic_error("OperatorSpec: this kind carries no q");
    return *q_;
}

const StancuParams& OperatorSpec::params() const {
    if (!params_) throw std::logic_error("OperatorSpec: this kind carries no Stancu params");
    return *params_;
}

StancuDomain OperatorSpec::domain() const {
    switch (kind_) {
        case OperatorKind::Bernstein:
        case OperatorKind::Kantorovich:
        case OperatorKind::QBernsteinKantorovich:
            return {0.0, 1.0};
        case OperatorKind::StancuShifted:
        case OperatorKind::KantorovichStancu:
            return classical_domain(n_, *params_);
        case OperatorKind::QKantorovichStancu:
            return stancu_domain(n_, *q_, *params_);
    }
    throw std::logic_error("OperatorSpec: unknown kind");
}

std::vector<NodeSegment> sample_nodes(const OperatorSpec& spec) {
    const int n = spec.degree();
    std::vector<NodeSegment> nodes;
    nodes.reserve(n + 1);
    switch (spec.kind()) {
        case OperatorKind::Bernstein:
            for (int k = 0; k <= n; ++k) {
                const double t = static_cast<double>(k) / n;
                nodes.push_back({k, t, t});
            }
            break;
        case OperatorKind::Kantorovich:
            for (int k = 0; k <= n; ++k)
                nodes.push_back({k, k / (n + 1.0), (k + 1.0) / (n + 1.0)});
            break;
        case OperatorKind::QBernsteinKantorovich: {
            const QValue q = spec.q();
            const double D = q_integer(n + 1, q);
            for (int k = 0; k <= n; ++k) {
                const double kk = q_integer(k, q);
                nodes.push_back({k, kk / D, (kk + std::pow(q.value(), k)) / D});
            }
            break;
        }
        case OperatorKind::StancuShifted: {
            const StancuParams& p = spec.params();
            for (int k = 0; k <= n; ++k) {
                const double t = (k + p.alpha1) / (n + p.beta1);
                nodes.push_back({k, t, t});
            }
            break;
        }
        case OperatorKind::KantorovichStancu: {
            const StancuParams& p = spec.params();
            for (int k = 0; k <= n; ++k)
                nodes.push_back({k, (k + p.alpha1) / (n + p.beta1 + 1.0),
                                 (k + p.alpha1 + 1.0) / (n + p.beta1 + 1.0)});
            break;
        }
        case OperatorKind::QKantorovichStancu: {
            const QValue q = spec.q();
            const StancuParams& p = spec.params();
            const double D = q_integer(n + 1, q) + p.beta1;
            for (int k = 0; k <= n; ++k) {
                const double kk = q_integer(k, q);
                nodes.push_back({k, (kk + p.alpha1) / D,
                                 (kk + std::pow(q.value(), k) + p.alpha1) / D});
            }
            break;
        }
    }
    return nodes;
}

Evaluator::Evaluator(const OperatorSpec& spec, const TargetFunction& f, JacksonTolerance tol)
    : spec_(spec) {
    const int n = spec.degree();
    node_values_.resize(n + 1);
    switch (spec.kind()) {
        case OperatorKind::Bernstein:
            for (int k = 0; k <= n; ++k) node_values_[k] = f(static_cast<double>(k) / n);
            break;
        case OperatorKind::Kantorovich:
            for (int k = 0; k <= n; ++k)
                node_values_[k] = gauss_legendre_unit(
                    [&](double t) { return f((k + t) / (n + 1.0)); });
            break;
        case OperatorKind::QBernsteinKantorovich: {
            const QValue q = spec.q();
            const double D = q_integer(n + 1, q);
            double qk = 1.0;
            for (int k = 0; k <= n; ++k) {
                const double kk = q_integer(k, q);
                const double qkc = qk;
                node_values_[k] = q_integral_unit(
                    [&, kk, qkc](double t) { return f((kk + qkc * t) / D); }, q, tol);
                qk *= q.value();
            }
            break;
        }
        case OperatorKind::StancuShifted: {
            const StancuParams& p = spec.params();
            for (int k = 0; k <= n; ++k) node_values_[k] = f((k + p.alpha1) / (n + p.beta1));
            break;
        }
        case OperatorKind::KantorovichStancu: {
            const StancuParams& p = spec.params();
            for (int k = 0; k <= n; ++k)
                node_values_[k] = gauss_legendre_unit(
                    [&](double t) { return f((k + p.alpha1 + t) / (n + p.beta1 + 1.0)); });
            break;
        }
        case OperatorKind::QKantorovichStancu: {
            const QValue q = spec.q();
            const StancuParams& p = spec.params();
            const double D = q_integer(n + 1, q) + p.beta1;
            double qk = 1.0;
            for (int k = 0; k <= n; ++k) {
                const double kk = q_integer(k, q);
                const double qkc = qk;
                node_values_[k] = q_integral_unit(
                    [&, kk, qkc](double t) { return f((kk + qkc * t + p.alpha1) / D); }, q, tol);
                qk *= q.value();
            }
            break;
        }
    }
}

double Evaluator::operator()(double x) const {
    const int n = spec_.degree();
    std::vector<double> w;
    switch (spec_.kind()) {
        case OperatorKind::Bernstein:
        case OperatorKind::Kantorovich:
            w = binomial_weights(n, x);
            break;
        case OperatorKind::QBernsteinKantorovich:
            w = q_bernstein_weights(n, spec_.q(), x).w;
            break;
        case OperatorKind::StancuShifted:
        case OperatorKind::KantorovichStancu:
            // Rescaled ordinary Bernstein basis; identical to the shifted-knot
            // weights with their ((n+beta2)/n)^n normalizer.
            w = binomial_weights(n, rescale(x, classical_domain(n, spec_.params())));
            break;
        case OperatorKind::QKantorovichStancu:
            w = stancu_weights(n, spec_.q(), spec_.params(), x).w;
            break;
    }
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += w[k] * node_values_[k];
    return s;
}

double apply(const OperatorSpec& spec, const TargetFunction& f, double x, JacksonTolerance tol) {
    return Evaluator(spec, f, tol)(x);
}

}  // namespace qbs
