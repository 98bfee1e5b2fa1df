#include "qbs/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <vector>

namespace qbs {

namespace {

std::vector<double> sample_unit_grid(const TargetFunction& f, int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("modulus: grid_points must be >= 2");
    std::vector<double> v(grid_points);
    for (int i = 0; i < grid_points; ++i) v[i] = f(static_cast<double>(i) / (grid_points - 1));
    return v;
}

// Largest index offset whose grid distance does not exceed delta.
int max_offset(double delta, int grid_points) {
    const double h = 1.0 / (grid_points - 1);
    const int k = static_cast<int>(std::floor(delta / h + 1e-9));
    return std::clamp(k, 0, grid_points - 1);
}

}  // namespace

ModulusEstimate modulus(const TargetFunction& f, double delta, int grid_points) {
    if (!(delta > 0.0)) throw std::invalid_argument("modulus: delta must be > 0");
    const std::vector<double> v = sample_unit_grid(f, grid_points);
    const int kmax = max_offset(delta, grid_points);
    double best = 0.0;
    for (int d = 1; d <= kmax; ++d)
        for (int i = 0; i + d < grid_points; ++i)
            best = std::max(best, std::abs(v[i + d] - v[i]));
    return {delta, best, grid_points};
}

ModulusEstimate second_modulus(const TargetFunction& f, double delta, int grid_points) {
    if (!(delta > 0.0)) throw std::invalid_argument("second_modulus: delta must be > 0");
    const std::vector<double> v = sample_unit_grid(f, grid_points);
    const int kmax = std::min(max_offset(delta, grid_points), (grid_points - 1) / 2);
    double best = 0.0;
    for (int d = 1; d <= kmax; ++d)
        for (int i = d; i + d < grid_points; ++i)
            best = std::max(best, std::abs(v[i - d] - 2.0 * v[i] + v[i + d]));
    return {delta, best, grid_points};
}

double global_modulus_bound(const TargetFunction& f, int n, QValue q,
                            const StancuParams& params, int grid_points) {
    return 2.0 * modulus(f, delta_global(n, q, params), grid_points).value;
}

double local_smoothness_bound(const TargetFunction& f, int n, QValue q,
                              const StancuParams& params, double x, double C,
                              int grid_points) {
    const double dloc = delta_local(n, q, params, x);
    const AffineCoeffs line = first_moment_line(n, q, params);
    const double drift = std::abs((line.slope - 1.0) * x + line.offset);
    double bound = C * second_modulus(f, std::sqrt(dloc), grid_points).value;
    if (drift > 0.0) bound += modulus(f, drift, grid_points).value;
    return bound;
}

double shisha_mond_bound(double m0, double m1_shift, double central2, double delta,
                         double f_at_x, double fprime_at_x, double omega_fprime_at_delta) {
    if (central2 < 0.0) throw std::invalid_argument("shisha_mond_bound: central2 must be >= 0");
    if (!(delta > 0.0)) throw std::invalid_argument("shisha_mond_bound: delta must be > 0");
    const double root = std::sqrt(central2);
    return std::abs(f_at_x) * std::abs(m0 - 1.0) + std::abs(fprime_at_x) * std::abs(m1_shift) +
           root * (std::sqrt(m0) + root / delta) * omega_fprime_at_delta;
}

double derivative_modulus_bound(const TargetFunction& f, int n, QValue q,
                                const StancuParams& params, double x, int grid_points) {
    if (!f.has_d1())
        throw std::invalid_argument("derivative_modulus_bound: f needs a first derivative");
    const double D = central_second_moment(n, q, params, x);
    const AffineCoeffs line = first_moment_line(n, q, params);
    const double drift = std::abs((line.slope - 1.0) * x + line.offset);
    const TargetFunction fprime(f.name() + "'", [&f](double t) { return f.d1(t); });
    double bound = drift * std::abs(f.d1(x));
    if (D > 0.0) {
        const double root = std::sqrt(D);
        bound += 2.0 * root * modulus(fprime, root, grid_points).value;
    }
    return bound;
}

double lipschitz_class_bound(const TargetFunction& f, int n, QValue q,
                             const StancuParams& params) {
    if (!f.lipschitz())
        throw std::invalid_argument("lipschitz_class_bound: f needs Lipschitz data");
    const LipschitzData& lip = *f.lipschitz();
    return lip.M * std::pow(delta_global(n, q, params), lip.alpha);
}

JacksonTolerance analysis_tolerance() { return {1e-14, 1 << 20}; }

double voronovskaja_deviation(const TargetFunction& f, const QSequence& qseq,
                              const StancuParams& params, int n,
                              std::span<const double> x_grid) {
    if (!f.has_d1() || !f.has_d2())
        throw std::invalid_argument("voronovskaja_deviation: f needs d1 and d2");
    const std::optional<double> a = qseq.limit_a();
    if (!a)
        throw std::invalid_argument(
            "voronovskaja_deviation: the q-sequence has no q_n^n limit (fixed q never "
            "approaches 1)");
    const QValue q = qseq.at(n);
    const double qn = q_integer(n, q);
    const Evaluator op(OperatorSpec::q_kantorovich_stancu(n, q, params), f,
                       analysis_tolerance());
    double worst = 0.0;
    for (double x : x_grid) {
        const VoronovskajaLimit lim = voronovskaja_limit(x, *a, params);
        const double lhs = qn * (op(x) - f(x));
        const double rhs = f.d1(x) * lim.drift + 0.5 * f.d2(x) * lim.diffusion;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

SupError sup_error(const Evaluator& op, const TargetFunction& f, int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("sup_error: grid_points must be >= 2");
    const StancuDomain dom = op.spec().domain();
    SupError best{0.0, dom.a};
    for (int i = 0; i < grid_points; ++i) {
        const double x = std::lerp(dom.a, dom.b, static_cast<double>(i) / (grid_points - 1));
        const double e = std::abs(op(x) - f(x));
        if (e > best.value) best = {e, x};
    }
    return best;
}

std::vector<ExperimentRow> convergence_sweep(const TargetFunction& f, const QSequence& qseq,
                                             const StancuParams& params,
                                             std::span<const int> n_list, int grid_points) {
    if (n_list.empty()) throw std::invalid_argument("convergence_sweep: n_list is empty");
    std::vector<ExperimentRow> rows;
    rows.reserve(n_list.size());
    for (int n : n_list) {
        try {
            const QValue q = qseq.at(n);
            const Evaluator op(OperatorSpec::q_kantorovich_stancu(n, q, params), f,
                               analysis_tolerance());
            const SupError sup = sup_error(op, f, grid_points);
            std::optional<double> bound;
            try {
                bound = global_modulus_bound(f, n, q, params);
            } catch (const std::domain_error&) {
                // negative closed bound: leave the column empty for this row
            }
            rows.push_back({n, q.value(), sup.value, bound, sup.argmax});
        } catch (const std::exception& e) {
            std::cerr << "sweep: skipping n = " << n << ": " << e.what() << "\n";
        }
    }
    return rows;
}

}  // namespace qbs
