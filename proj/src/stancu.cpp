#include "qbs/stancu.hpp"

#include <cmath>

namespace qbs {

StancuParams::StancuParams(double a1, double a2, double b1, double b2)
    : alpha1(a1), alpha2(a2), beta1(b1), beta2(b2) {
    if (!(0.0 <= a1 && a1 <= a2 && a2 <= b1 && b1 <= b2))
        throw std::invalid_argument(
            "StancuParams: need 0 <= alpha1 <= alpha2 <= beta1 <= beta2");
}

double BasisWeights::sum() const {
    double s = 0.0;
    for (double v : w) s += v;
    return s;
}

StancuDomain stancu_domain(int n, QValue q, const StancuParams& params) {
    if (n < 1) throw std::invalid_argument("stancu_domain: n must be >= 1");
    const double qn = q_integer(n, q);
    return {params.alpha2 / (qn + params.beta2), (qn + params.alpha2) / (qn + params.beta2)};
}

double rescale(double x, const StancuDomain& dom) {
    return (x - dom.a) / (dom.b - dom.a);
}

BasisWeights q_bernstein_weights(int n, QValue q, double u) {
    if (n < 1) throw std::invalid_argument("q_bernstein_weights: n must be >= 1");
    const double qq = q.value();

    // (1-u)_q^m table, built with the same left-to-right product order as
    // q_pochhammer_one_minus so the two agree bitwise.
    std::vector<double> poch(n + 1);
    poch[0] = 1.0;
    {
        double qs = 1.0;
        for (int m = 1; m <= n; ++m) {
            poch[m] = poch[m - 1] * (1.0 - qs * u);
            qs *= qq;
        }
    }

    // [j]_q via the closed form, matching q_integer bit for bit.
    std::vector<double> qint(n + 1);
    for (int j = 0; j <= n; ++j) qint[j] = (1.0 - std::pow(qq, j)) / (1.0 - qq);

    BasisWeights out;
    out.n = n;
    out.w.resize(n + 1);
    double uk = 1.0;  // u^k
    for (int k = 0; k <= n; ++k) {
        // [n k]_q as the same symmetric ratio product q_binomial uses.
        const int kk = std::min(k, n - k);
        double binom = 1.0;
        for (int i = 1; i <= kk; ++i) binom *= qint[n - kk + i] / qint[i];
        out.w[k] = binom * uk * poch[n - k];
        uk *= u;
    }
    return out;
}

BasisWeights stancu_weights(int n, QValue q, const StancuParams& params, double x) {
    const StancuDomain dom = stancu_domain(n, q, params);
    BasisWeights out = q_bernstein_weights(n, q, rescale(x, dom));
    out.in_domain = dom.contains(x);
    return out;
}

}  // namespace qbs
