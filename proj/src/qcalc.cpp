#include "qbs/qcalc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qbs {

double q_integer(int n, QValue q) {
    if (n < 0) throw std::invalid_argument("q_integer: n must be >= 0");
    if (n == 0) return 0.0;
    const double qq = q.value();
    return (1.0 - std::pow(qq, n)) / (1.0 - qq);
}

double q_factorial(int n, QValue q) {
    if (n < 0) throw std::invalid_argument("q_factorial: n must be >= 0");
    double r = 1.0;
    for (int j = 2; j <= n; ++j) r *= q_integer(j, q);
    return r;
}

double q_binomial(int n, int k, QValue q) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("q_binomial: need 0 <= k <= n");
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= q_integer(n - k + i, q) / q_integer(i, q);
    return r;
}

double q_pochhammer_one_minus(double x, int m, QValue q) {
    if (m < 0) throw std::invalid_argument("q_pochhammer_one_minus: m must be >= 0");
    const double qq = q.value();
    double r = 1.0;
    double qs = 1.0;  // q^s
    for (int s = 0; s < m; ++s) {
        r *= (1.0 - qs * x);
        qs *= qq;
    }
    return r;
}

double jackson_integral(const std::function<double(double)>& f, double upper, QValue q,
                        JacksonTolerance tol) {
    if (!(upper > 0.0)) throw std::invalid_argument("jackson_integral: upper must be > 0");
    const double qq = q.value();
    // Running sup|f| over the nodes seen so far, seeded with f(0); the
    // geometric tail after term j is at most upper * sup|f| * q^(j+1).
    double sup = std::abs(f(0.0));
    double sum = 0.0;
    double qj = 1.0;  // q^j
    for (int j = 0; j < tol.max_terms; ++j) {
        const double fj = f(upper * qj);
        sum += fj * qj;
        sup = std::max(sup, std::abs(fj));
        qj *= qq;
        if (upper * sup * qj < tol.abs_tol)
            return upper * (1.0 - qq) * sum;
    }
    std::ostringstream msg;
    msg << "jackson_integral: tail bound " << upper * sup * qj << " still above abs_tol "
        << tol.abs_tol << " after " << tol.max_terms << " terms (q = " << qq
        << "); raise max_terms or abs_tol";
    throw TruncationError(msg.str());
}

}  // namespace qbs
