#include <cmath>
#include <vector>

#include <doctest.h>

#include "qbs/analysis.hpp"
#include "qbs/functions.hpp"

using namespace qbs;

namespace {
const std::vector<StancuParams> kParamGrid = {
    StancuParams(0, 0, 0, 0), StancuParams(1, 2, 3, 4),
    StancuParams(0, 1, 1, 2), StancuParams(2, 2, 2, 2)};

std::vector<double> domain_grid(const StancuDomain& dom, int count) {
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i)
        xs[i] = std::lerp(dom.a, dom.b, i / (count - 1.0));
    return xs;
}
}  // namespace

TEST_CASE("modulus: constants, identity, kink function") {
    const TargetFunction c("c", [](double) { return 3.7; });
    CHECK(modulus(c, 0.2).value == 0.0);
    const TargetFunction id = builtin_function("x");
    CHECK(modulus(id, 0.35).value == doctest::Approx(0.35).epsilon(1e-12));
    const TargetFunction kink = builtin_function("abshalf");
    CHECK(std::abs(modulus(kink, 0.1, 1001).value - 0.1) <= 1e-3);
    CHECK_THROWS_AS(modulus(id, 0.0), std::invalid_argument);
}

TEST_CASE("modulus is nondecreasing in delta") {
    const TargetFunction f = builtin_function("fig6");
    double prev = -1.0;
    for (double d : {0.01, 0.05, 0.1, 0.3, 0.8}) {
        const double v = modulus(f, d).value;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("second_modulus: affine kills it, x^2 gives 2 h^2, monotone") {
    const TargetFunction aff("aff", [](double x) { return 2.0 - 3.0 * x; });
    CHECK(second_modulus(aff, 0.25).value <= 1e-13);
    const TargetFunction sq = builtin_function("x2");
    CHECK(std::abs(second_modulus(sq, 0.1).value - 0.02) <= 1e-4);
    double prev = -1.0;
    const TargetFunction f = builtin_function("fig6");
    for (double d : {0.02, 0.1, 0.4}) {
        const double v = second_modulus(f, d).value;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("global modulus bound: zero for constants, dominates the sup error") {
    const TargetFunction c("c", [](double) { return 1.25; });
    CHECK(global_modulus_bound(c, 8, QValue(0.9), StancuParams(1, 2, 3, 4)) == 0.0);

    for (const char* name : {"fig6", "abshalf", "x3", "exp"})
        for (int n : {4, 8, 16, 32})
            for (double qv : {0.7, 0.9, 0.99}) {
                const TargetFunction f = builtin_function(name);
                const QValue q(qv);
                const StancuParams p(1, 2, 3, 4);
                const Evaluator op(OperatorSpec::q_kantorovich_stancu(n, q, p), f,
                                   analysis_tolerance());
                const double sup = sup_error(op, f).value;
                CHECK(sup <= global_modulus_bound(f, n, q, p) + 1e-9);
            }
}

TEST_CASE("global modulus bound is at most 2 M delta^alpha for Lipschitz f") {
    const TargetFunction f = builtin_function("abshalf");
    for (int n : {4, 16})
        for (double qv : {0.7, 0.99}) {
            const QValue q(qv);
            const double d = delta_global(n, q, StancuParams());
            CHECK(global_modulus_bound(f, n, q, StancuParams()) <=
                  2.0 * f.lipschitz()->M * std::pow(d, f.lipschitz()->alpha) + 1e-12);
        }
}

TEST_CASE("local smoothness bound: affine reduces to the drift modulus, constants vanish") {
    const QValue q(0.9);
    const StancuParams p(1, 2, 3, 4);
    const TargetFunction c("c", [](double) { return 0.4; });
    const StancuDomain dom = stancu_domain(8, q, p);
    for (double x : domain_grid(dom, 5)) CHECK(local_smoothness_bound(c, 8, q, p, x) <= 1e-13);

    const TargetFunction aff("aff", [](double t) { return 0.3 + 0.5 * t; });
    const AffineCoeffs line = first_moment_line(8, q, p);
    for (double x : domain_grid(dom, 5)) {
        const double drift = std::abs((line.slope - 1.0) * x + line.offset);
        const double expect = modulus(aff, drift).value;  // omega_2 of affine is 0
        CHECK(local_smoothness_bound(aff, 8, q, p, x) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("local smoothness bound dominates the error for x^3 at the default constant") {
    const TargetFunction f = builtin_function("x3");
    for (const StancuParams& p : kParamGrid)
        for (int n : {4, 8, 16})
            for (double qv : {0.7, 0.9, 0.99}) {
                const QValue q(qv);
                const Evaluator op(OperatorSpec::q_kantorovich_stancu(n, q, p), f,
                                   analysis_tolerance());
                for (double x : domain_grid(op.spec().domain(), 7)) {
                    const double err = std::abs(op(x) - f(x));
                    CHECK(err <= local_smoothness_bound(f, n, q, p, x) + 1e-9);
                }
            }
}

TEST_CASE("shisha_mond_bound arithmetic") {
    CHECK(shisha_mond_bound(1.0, 0.0, 0.0, 0.5, 3.0, 2.0, 0.7) == 0.0);
    // delta = sqrt(central2) collapses the tail to 2 sqrt(c2) omega
    const double c2 = 0.04;
    const double collapsed = shisha_mond_bound(1.0, 0.1, c2, std::sqrt(c2), 5.0, 2.0, 0.3);
    CHECK(collapsed == doctest::Approx(2.0 * 0.1 + 2.0 * std::sqrt(c2) * 0.3).epsilon(1e-14));
    // monotone in central2
    double prev = -1.0;
    for (double c : {0.0, 0.01, 0.1, 0.5}) {
        const double v = shisha_mond_bound(1.0, 0.1, c, 0.2, 5.0, 2.0, 0.3);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK_THROWS_AS(shisha_mond_bound(1, 0, -0.1, 0.5, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(shisha_mond_bound(1, 0, 0.1, 0.0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("derivative modulus bound: affine slope case and domination for sin(3x)") {
    const QValue q(0.9);
    const StancuParams p(0, 1, 1, 2);
    const TargetFunction aff =
        TargetFunction("aff", [](double t) { return 1.0 - 2.0 * t; })
            .with_derivative([](double) { return -2.0; });
    const AffineCoeffs line = first_moment_line(8, q, p);
    for (double x : domain_grid(stancu_domain(8, q, p), 5)) {
        const double drift = std::abs((line.slope - 1.0) * x + line.offset);
        // omega of the constant derivative is 0, so only the drift term is left
        CHECK(derivative_modulus_bound(aff, 8, q, p, x) ==
              doctest::Approx(2.0 * drift).epsilon(1e-12));
    }

    const TargetFunction f = builtin_function("sin3");
    for (const StancuParams& pp : kParamGrid)
        for (int n : {4, 8, 16, 32})
            for (double qv : {0.7, 0.9, 0.99}) {
                const QValue qq(qv);
                const Evaluator op(OperatorSpec::q_kantorovich_stancu(n, qq, pp), f,
                                   analysis_tolerance());
                for (double x : domain_grid(op.spec().domain(), 7)) {
                    CHECK(std::abs(op(x) - f(x)) <=
                          derivative_modulus_bound(f, n, qq, pp, x) + 1e-9);
                }
            }
    const TargetFunction nod = builtin_function("abshalf");
    CHECK_THROWS_AS(derivative_modulus_bound(nod, 4, q, p, 0.5), std::invalid_argument);
}

TEST_CASE("derivative bound drift factor equals the first-moment line") {
    // (1 + a1 + q a1 - 2 q a2)/((1+q)([n+1]+b1)) is exactly the line offset.
    for (double qv : {0.3, 0.5, 0.9})
        for (const StancuParams& p : kParamGrid)
            for (int n : {1, 4, 16}) {
                const QValue q(qv);
                const AffineCoeffs line = first_moment_line(n, q, p);
                const double direct = (1.0 + p.alpha1 + qv * p.alpha1 - 2.0 * qv * p.alpha2) /
                                      ((1.0 + qv) * (q_integer(n + 1, q) + p.beta1));
                CHECK(std::abs(direct - line.offset) <= 1e-12);
            }
}

TEST_CASE("lipschitz class bound: spot value, domination, monotone in M") {
    const TargetFunction f = builtin_function("abshalf");
    CHECK(std::abs(lipschitz_class_bound(f, 99, QValue(1.0 - 1e-12), StancuParams()) - 0.1) <=
          1e-6);

    for (const char* name : {"abshalf", "sqrtabshalf"})
        for (int n : {4, 8, 16, 32})
            for (double qv : {0.7, 0.9, 0.99}) {
                const TargetFunction g = builtin_function(name);
                const QValue q(qv);
                for (const StancuParams& p : kParamGrid) {
                    const Evaluator op(OperatorSpec::q_kantorovich_stancu(n, q, p), g,
                                       analysis_tolerance());
                    CHECK(sup_error(op, g).value <= lipschitz_class_bound(g, n, q, p) + 1e-12);
                }
            }

    TargetFunction half("half", [](double t) { return 0.5 * std::abs(t - 0.5); });
    half.with_lipschitz(0.5, 1.0);
    TargetFunction one_lip("onelip", [](double t) { return 0.5 * std::abs(t - 0.5); });
    one_lip.with_lipschitz(1.0, 1.0);
    CHECK(lipschitz_class_bound(half, 8, QValue(0.9), StancuParams()) <
          lipschitz_class_bound(one_lip, 8, QValue(0.9), StancuParams()));
    const TargetFunction plain("plain", [](double t) { return t; });
    CHECK_THROWS_AS(lipschitz_class_bound(plain, 8, QValue(0.9), StancuParams()),
                    std::invalid_argument);
}

TEST_CASE("voronovskaja deviation: requirements and limiting behaviour") {
    const std::vector<double> xs = {0.2, 0.35, 0.5, 0.65, 0.8};
    const TargetFunction noderiv = builtin_function("abshalf");
    CHECK_THROWS_AS(
        voronovskaja_deviation(noderiv, QSequence::nth_root_of(0.5), StancuParams(), 16, xs),
        std::invalid_argument);
    CHECK_THROWS_AS(voronovskaja_deviation(builtin_function("x2"),
                                           QSequence::fixed(QValue(0.5)), StancuParams(), 16, xs),
                    std::invalid_argument);

    // constant f: every term vanishes up to quadrature noise
    CHECK(voronovskaja_deviation(builtin_function("one"), QSequence::nth_root_of(0.5),
                                 StancuParams(), 32, xs) <= 1e-9);

    // affine f, zero shifts, a -> 0: deviation reduces to the first-moment
    // drift mismatch and decreases
    const TargetFunction id = builtin_function("x");
    double prev = 1e9;
    for (int n : {16, 64, 256}) {
        const double dev =
            voronovskaja_deviation(id, QSequence::nth_root_of(0.0), StancuParams(), n, xs);
        CHECK(dev < prev);
        prev = dev;
    }

    // strict decrease for curved functions across parameter sets and limits
    for (const char* name : {"x2", "sin3"})
        for (double a : {0.0, 0.5})
            for (const StancuParams& p : {StancuParams(), StancuParams(0, 1, 1, 2)}) {
                prev = 1e9;
                for (int n : {16, 64, 256}) {
                    const double dev = voronovskaja_deviation(builtin_function(name),
                                                              QSequence::nth_root_of(a), p, n, xs);
                    CHECK(dev < prev);
                    prev = dev;
                }
            }
}

TEST_CASE("convergence sweep: constants reproduce, benchmark decreases, bound dominates") {
    const StancuParams p(1, 2, 3, 4);
    const std::vector<int> ns = {4, 8, 16, 32, 64};

    const TargetFunction c("c", [](double) { return 0.7; });
    for (const ExperimentRow& r :
         convergence_sweep(c, QSequence::one_minus_c_over_n(1.0), p, ns, 101))
        CHECK(r.sup_error <= 1e-12);

    const TargetFunction f = builtin_function("fig6");
    const auto rows = convergence_sweep(f, QSequence::one_minus_c_over_n(1.0), p, ns);
    REQUIRE(rows.size() == ns.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == ns[i]);
        REQUIRE(rows[i].bound.has_value());
        CHECK(rows[i].sup_error <= *rows[i].bound + 1e-9);
        if (i) CHECK(rows[i].sup_error < rows[i - 1].sup_error);
    }
}

TEST_CASE("uniform convergence: error at n = 64 is under half the n = 8 error") {
    for (const char* name : {"fig6", "abshalf", "x3", "exp"}) {
        const TargetFunction f = builtin_function(name);
        const std::vector<int> ns = {8, 64};
        const auto rows =
            convergence_sweep(f, QSequence::one_minus_c_over_n(1.0), StancuParams(), ns);
        REQUIRE(rows.size() == 2);
        CHECK(rows[1].sup_error < 0.5 * rows[0].sup_error);
    }
}

TEST_CASE("sweep skips impossible rows instead of aborting") {
    const TargetFunction f = builtin_function("x2");
    const std::vector<int> ns = {1, 8};  // n = 1 is invalid for 1 - 1/n
    const auto rows = convergence_sweep(f, QSequence::one_minus_c_over_n(1.0), StancuParams(), ns);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].n == 8);
}
