#pragma once

#include <optional>
#include <vector>

#include "qbs/qcalc.hpp"
#include "qbs/stancu.hpp"
#include "qbs/target_function.hpp"

namespace qbs {

enum class OperatorKind {
    Bernstein,               // point samples f(k/n), ordinary binomial weights
    Kantorovich,             // sliding integral means over [k/(n+1), (k+1)/(n+1)]
    QBernsteinKantorovich,   // q-basis weights, Jackson integral means
    StancuShifted,           // shifted knots, point samples, q = 1
    KantorovichStancu,       // shifted knots, ordinary integral means, q = 1
    QKantorovichStancu,      // shifted knots, q-basis, Jackson integral means
};

const char* kind_name(OperatorKind kind);

/// Which operator of the family, with its degree and parameters.
/// Construct through the factory functions; invalid combinations
/// (a q-kind without q, a Stancu kind without params) cannot be built.
class OperatorSpec {
public:
    static OperatorSpec bernstein(int n);
    static OperatorSpec kantorovich(int n);
    static OperatorSpec q_bernstein_kantorovich(int n, QValue q);
    static OperatorSpec stancu_shifted(int n, const StancuParams& params);
    static OperatorSpec kantorovich_stancu(int n, const StancuParams& params);
    static OperatorSpec q_kantorovich_stancu(int n, QValue q, const StancuParams& params);

    OperatorKind kind() const { return kind_; }
    int degree() const { return n_; }
    bool has_q() const { return q_.has_value(); }
    bool has_params() const { return params_.has_value(); }
    const QValue& q() const;
    const StancuParams& params() const;

    /// Interval on which the weights form a basis: [0,1] for unshifted
    /// kinds, the shifted-knot interval otherwise (ordinary n for the
    /// classical Stancu kinds, [n]_q for the q-kind).
    StancuDomain domain() const;

private:
    OperatorSpec(OperatorKind kind, int n, std::optional<QValue> q,
                 std::optional<StancuParams> params);

    OperatorKind kind_;
    int n_;
    std::optional<QValue> q_;
    std::optional<StancuParams> params_;
};

/// Where the operator probes f: a point node (lo == hi) or the closed
/// interval swept by the k-th inner integral. All segments lie in [0,1]
/// under the StancuParams ordering constraint.
struct NodeSegment {
    int k;
    double lo;
    double hi;
};

std::vector<NodeSegment> sample_nodes(const OperatorSpec& spec);

/// Evaluates one operator for one target function. The inner integrals /
/// node samples do not depend on x, so they are computed once at
/// construction and reused for every evaluation point; each call then
/// costs one weight vector and a dot product. Immutable after
/// construction, hence freely shareable across threads.
class Evaluator {
public:
    Evaluator(const OperatorSpec& spec, const TargetFunction& f, JacksonTolerance tol = {});

    double operator()(double x) const;
    const OperatorSpec& spec() const { return spec_; }
    const std::vector<double>& node_values() const { return node_values_; }

private:
    OperatorSpec spec_;
    std::vector<double> node_values_;
};

/// One-shot evaluation; prefer Evaluator for grids.
double apply(const OperatorSpec& spec, const TargetFunction& f, double x,
             JacksonTolerance tol = {});

}  // namespace qbs
