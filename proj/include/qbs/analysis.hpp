#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qbs/moments.hpp"
#include "qbs/operators.hpp"
#include "qbs/target_function.hpp"

namespace qbs {

/// Grid estimate of a modulus: a lower bound of the true modulus that
/// converges to it as the grid refines (for continuous f).
struct ModulusEstimate {
    double delta;
    double value;
    int grid_points;
};

/// omega(f; delta) = max |f(x_i) - f(x_j)| over equispaced [0,1] grid pairs
/// with |x_i - x_j| <= delta.
ModulusEstimate modulus(const TargetFunction& f, double delta, int grid_points = 2001);

/// Second modulus of smoothness: max |f(x-h) - 2f(x) + f(x+h)| over grid x
/// and grid h in (0, delta] with x +- h in [0,1].
ModulusEstimate second_modulus(const TargetFunction& f, double delta, int grid_points = 2001);

/// Sup-norm rate bound 2 omega(f, delta_global). Propagates the
/// negative-bound error from delta_global.
double global_modulus_bound(const TargetFunction& f, int n, QValue q,
                            const StancuParams& params, int grid_points = 2001);

/// Local bound C omega_2(f, sqrt(delta_local(x))) + omega(f, |drift(x)|).
/// The absolute constant is not derivable from first principles here; it is
/// a configuration value (default 4) validated empirically at desk scale.
double local_smoothness_bound(const TargetFunction& f, int n, QValue q,
                              const StancuParams& params, double x, double C = 4.0,
                              int grid_points = 2001);

/// Shisha-Mond general estimate for positive linear operators, exposed on
/// raw moment data so it applies to every kind:
///   |f(x)||m0-1| + |f'(x)||m1_shift|
///   + sqrt(central2) (sqrt(m0) + sqrt(central2)/delta) omega.
double shisha_mond_bound(double m0, double m1_shift, double central2, double delta,
                         double f_at_x, double fprime_at_x, double omega_fprime_at_delta);

/// C^1 bound |drift(x)| |f'(x)| + 2 sqrt(D) omega(f', sqrt(D)) with
/// D = central_second_moment(x); the Shisha-Mond estimate at
/// delta = sqrt(D). Requires f.d1.
double derivative_modulus_bound(const TargetFunction& f, int n, QValue q,
                                const StancuParams& params, double x,
                                int grid_points = 2001);

/// Lipschitz-class rate M * delta_global^alpha. Requires f.lipschitz.
double lipschitz_class_bound(const TargetFunction& f, int n, QValue q,
                             const StancuParams& params);

/// Deep truncation budget for brute-force operator evaluation inside the
/// analysis routines (covers q < 0.9999 at abs_tol 1e-14).
JacksonTolerance analysis_tolerance();

/// max over x_grid of |[n](K f - f)(x) - (f'(x) drift + f''(x) diffusion / 2)|
/// with (drift, diffusion) = voronovskaja_limit(x, qseq.limit_a(), params).
/// Requires f.d1, f.d2 and a sequence with a defined limit_a.
double voronovskaja_deviation(const TargetFunction& f, const QSequence& qseq,
                              const StancuParams& params, int n,
                              std::span<const double> x_grid);

struct ExperimentRow {
    int n;
    double q;
    double sup_error;
    std::optional<double> bound;
    double x_argmax;
};

struct SupError {
    double value;
    double argmax;
};

/// Largest |K f - f| over an equispaced grid on the operator's domain.
SupError sup_error(const Evaluator& op, const TargetFunction& f, int grid_points = 501);

/// Per-n sup error and modulus bound rows, ordered by n. A row whose
/// evaluation fails (e.g. q_n out of range) is skipped with a diagnostic
/// on stderr; the sweep continues.
std::vector<ExperimentRow> convergence_sweep(const TargetFunction& f, const QSequence& qseq,
                                             const StancuParams& params,
                                             std::span<const int> n_list,
                                             int grid_points = 501);

}  // namespace qbs
