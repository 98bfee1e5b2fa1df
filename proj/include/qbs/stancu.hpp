#pragma once

#include <vector>

#include "qbs/qcalc.hpp"

namespace qbs {

/// Shift quadruple of the Stancu-type operators. The ordering constraint
/// 0 <= alpha1 <= alpha2 <= beta1 <= beta2 keeps every sample node inside
/// [0,1] and the domain inside [0, 1 + alpha2/([n]+beta2)].
struct StancuParams {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;

    StancuParams() = default;
    StancuParams(double a1, double a2, double b1, double b2);
};

/// The interval [a, b] on which the shifted-knot weights form a basis:
/// a = alpha2/([n]+beta2), b = ([n]+alpha2)/([n]+beta2).
struct StancuDomain {
    double a;
    double b;
    double width() const { return b - a; }
    bool contains(double x) const { return x >= a && x <= b; }
};

struct BasisWeights {
    int n;
    std::vector<double> w;       // n+1 entries, indexed by k
    bool in_domain = true;       // diagnostic: was the requested x inside [a,b]?
    double sum() const;
};

StancuDomain stancu_domain(int n, QValue q, const StancuParams& params);

/// Affine map of [a,b] onto [0,1]; values outside [0,1] are allowed and
/// flagged by callers.
double rescale(double x, const StancuDomain& dom);

/// q-Bernstein basis p_{n,k}(q; u) = [n k]_q u^k (1-u)_q^{n-k}.
/// Partition of unity: sum_k p_{n,k} = 1 for every u.
BasisWeights q_bernstein_weights(int n, QValue q, double u);

/// Shifted-knot weights: the q-Bernstein basis evaluated at the rescaled
/// variable u = (x-a)/(b-a). For alpha2 = beta2 = 0 this is exactly
/// q_bernstein_weights(n, q, x) (same code path, u == x). At q -> 1 it
/// converges to the ordinary shifted-knot weights
/// ((n+beta2)/n)^n C(n,r) (x-a)^r (b-x)^{n-r}.
BasisWeights stancu_weights(int n, QValue q, const StancuParams& params, double x);

}  // namespace qbs
