#pragma once

#include <functional>
#include <stdexcept>

namespace qbs {

/// Deformation parameter of all q-formulas, restricted to (0,1).
/// q = 1 is served by the dedicated classical operator kinds, never by
/// q-formulas, so code downstream may use (1-q^n)/(1-q) without branching.
class QValue {
public:
    explicit QValue(double q) : q_(q) {
        if (!(q > 0.0 && q < 1.0))
            throw std::invalid_argument("QValue: q must satisfy 0 < q < 1");
    }
    double value() const { return q_; }

private:
    double q_;
};

/// Truncation control for the Jackson series.
struct JacksonTolerance {
    double abs_tol = 1e-14;
    int max_terms = 4096;

    JacksonTolerance() = default;
    JacksonTolerance(double tol, int terms) : abs_tol(tol), max_terms(terms) {
        if (!(abs_tol > 0.0)) throw std::invalid_argument("JacksonTolerance: abs_tol must be > 0");
        if (max_terms < 1) throw std::invalid_argument("JacksonTolerance: max_terms must be >= 1");
    }
};

/// Raised when the Jackson series hits max_terms before its tail bound
/// falls below abs_tol.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// [n]_q = (1 - q^n)/(1 - q); equals sum_{s<n} q^s; 0 for n = 0.
double q_integer(int n, QValue q);

/// [n]_q! = [n][n-1]...[1]; 1 for n = 0.
double q_factorial(int n, QValue q);

/// Gaussian binomial [n k]_q = [n]!/([k]![n-k]!), evaluated as a ratio
/// product so intermediates never exceed the result's magnitude.
/// Throws if k < 0 or k > n.
double q_binomial(int n, int k, QValue q);

/// (1-x)_q^m = prod_{s=0}^{m-1} (1 - q^s x); 1 for m = 0.
double q_pochhammer_one_minus(double x, int m, QValue q);

/// Jackson integral of f over [0, A]:
///   A(1-q) sum_{j>=0} f(A q^j) q^j.
/// The series stops once the geometric tail bound A * sup|f| * q^(j+1)
/// drops below tol.abs_tol, with sup|f| the running max of |f| over the
/// nodes seen so far together with f(0). Throws TruncationError if
/// tol.max_terms is reached first. Deterministic for fixed inputs.
double jackson_integral(const std::function<double(double)>& f, double upper, QValue q,
                        JacksonTolerance tol = {});

}  // namespace qbs
