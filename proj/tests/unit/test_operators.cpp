#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "qbs/functions.hpp"
#include "qbs/operators.hpp"

using namespace qbs;

namespace {
const std::vector<double> kQGrid = {0.3, 0.5, 0.9, 0.99};
const std::vector<StancuParams> kParamGrid = {
    StancuParams(0, 0, 0, 0), StancuParams(1, 2, 3, 4),
    StancuParams(0, 1, 1, 2), StancuParams(2, 2, 2, 2)};
const JacksonTolerance kTol{1e-14, 1 << 20};
}  // namespace

TEST_CASE("OperatorSpec construction and accessors") {
    CHECK_THROWS_AS(OperatorSpec::bernstein(0), std::invalid_argument);
    const OperatorSpec plain = OperatorSpec::bernstein(4);
    CHECK_FALSE(plain.has_q());
    CHECK_FALSE(plain.has_params());
    CHECK_THROWS_AS(plain.q(), std::logic_error);
    CHECK_THROWS_AS(plain.params(), std::logic_error);
    const OperatorSpec full =
        OperatorSpec::q_kantorovich_stancu(4, QValue(0.5), StancuParams(1, 2, 3, 4));
    CHECK(full.has_q());
    CHECK(full.has_params());
    CHECK(full.q().value() == 0.5);
    CHECK(full.domain().a > 0.0);
}

TEST_CASE("constant reproduction across every kind") {
    const TargetFunction one = builtin_function("one");
    const StancuParams p(1, 2, 3, 4);
    const QValue q(0.9);
    const std::vector<OperatorSpec> specs = {
        OperatorSpec::bernstein(6),
        OperatorSpec::kantorovich(6),
        OperatorSpec::q_bernstein_kantorovich(6, q),
        OperatorSpec::stancu_shifted(6, p),
        OperatorSpec::kantorovich_stancu(6, p),
        OperatorSpec::q_kantorovich_stancu(6, q, p),
    };
    for (const OperatorSpec& spec : specs) {
        const Evaluator op(spec, one, kTol);
        const StancuDomain dom = spec.domain();
        for (int i = 0; i <= 10; ++i) {
            const double x = dom.a + dom.width() * i / 10.0;
            CHECK(std::abs(op(x) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("classical Kantorovich spot value: f = t, n = 1, x = 0") {
    const TargetFunction f("t", [](double t) { return t; });
    CHECK(apply(OperatorSpec::kantorovich(1), f, 0.0) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("zero shifts reduce the shifted q-kind to the plain q-kind") {
    const TargetFunction f = builtin_function("sin3");
    for (double qv : kQGrid)
        for (int n : {1, 2, 5, 8, 16}) {
            const QValue q(qv);
            const Evaluator a(OperatorSpec::q_kantorovich_stancu(n, q, StancuParams()), f, kTol);
            const Evaluator b(OperatorSpec::q_bernstein_kantorovich(n, q), f, kTol);
            for (int i = 0; i <= 10; ++i) {
                const double x = i / 10.0;
                CHECK(std::abs(a(x) - b(x)) <= 1e-12);
            }
        }
}

TEST_CASE("q -> 1 with zero shifts approaches the classical Kantorovich operator") {
    const QValue q(1.0 - 1e-8);
    for (const char* name : {"x2", "x3", "sin3", "exp"}) {
        const TargetFunction f = builtin_function(name);
        for (int n : {1, 2, 4, 8, 16}) {
            const Evaluator a(OperatorSpec::q_kantorovich_stancu(n, q, StancuParams()), f, kTol);
            const Evaluator b(OperatorSpec::kantorovich(n), f, kTol);
            for (int i = 0; i <= 10; ++i) {
                const double x = i / 10.0;
                CHECK(std::abs(a(x) - b(x)) <= 1e-5);
            }
        }
    }
}

TEST_CASE("positivity and monotonicity") {
    const TargetFunction f("pos", [](double t) { return 0.2 + std::abs(std::sin(5 * t)); });
    const TargetFunction g("big", [](double t) { return 0.4 + std::abs(std::sin(5 * t)); });
    for (double qv : {0.5, 0.9})
        for (const StancuParams& p : kParamGrid) {
            const QValue q(qv);
            const OperatorSpec spec = OperatorSpec::q_kantorovich_stancu(8, q, p);
            const Evaluator opf(spec, f, kTol), opg(spec, g, kTol);
            const StancuDomain dom = spec.domain();
            for (int i = 0; i <= 10; ++i) {
                const double x = dom.a + dom.width() * i / 10.0;
                CHECK(opf(x) >= -1e-12);
                CHECK(opf(x) <= opg(x) + 2e-12);
            }
        }
}

TEST_CASE("linearity in the target function") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> scale(-2.0, 2.0);
    const TargetFunction f = builtin_function("x2");
    const TargetFunction g = builtin_function("sin3");
    for (int trial = 0; trial < 8; ++trial) {
        const double a = scale(rng), b = scale(rng);
        const TargetFunction h("combo", [&f, &g, a, b](double t) { return a * f(t) + b * g(t); });
        const QValue q(kQGrid[trial % kQGrid.size()]);
        const StancuParams& p = kParamGrid[trial % kParamGrid.size()];
        const OperatorSpec spec = OperatorSpec::q_kantorovich_stancu(6, q, p);
        const Evaluator opf(spec, f, kTol), opg(spec, g, kTol), oph(spec, h, kTol);
        const StancuDomain dom = spec.domain();
        for (int i = 0; i <= 10; ++i) {
            const double x = dom.a + dom.width() * i / 10.0;
            CHECK(std::abs(oph(x) - a * opf(x) - b * opg(x)) <= 1e-11);
        }
    }
}

TEST_CASE("endpoint interpolation: x = a keeps only the k = 0 integral, bitwise") {
    const StancuParams p(1, 2, 3, 4);
    for (double qv : {0.5, 0.9, 0.99}) {
        const QValue q(qv);
        const TargetFunction f = builtin_function("fig6");
        const int n = 7;
        const OperatorSpec spec = OperatorSpec::q_kantorovich_stancu(n, q, p);
        const double direct = jackson_integral(
            [&](double t) {
                return f((t + p.alpha1) / (q_integer(n + 1, q) + p.beta1));
            },
            1.0, q, kTol);
        CHECK(Evaluator(spec, f, kTol)(spec.domain().a) == direct);
    }
}

TEST_CASE("sample_nodes per kind") {
    // Bernstein probes k/n.
    const auto bern = sample_nodes(OperatorSpec::bernstein(4));
    for (int k = 0; k <= 4; ++k) {
        CHECK(bern[k].lo == doctest::Approx(k / 4.0).epsilon(1e-15));
        CHECK(bern[k].lo == bern[k].hi);
    }
    // Q-kind with n=1, q=0.5, zero shifts: [0, 1/[2]] and [1/[2], [2]/[2]],
    // i.e. [0, 2/3] and [2/3, 1] (q^0 = 1, [2] = 1.5).
    const auto qks = sample_nodes(
        OperatorSpec::q_kantorovich_stancu(1, QValue(0.5), StancuParams()));
    CHECK(qks[0].lo == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(qks[0].hi == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(qks[1].lo == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(qks[1].hi == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sample nodes stay inside [0,1] and tile when shifts vanish") {
    for (double qv : kQGrid)
        for (const StancuParams& p : kParamGrid)
            for (int n : {1, 2, 5, 16}) {
                const auto nodes =
                    sample_nodes(OperatorSpec::q_kantorovich_stancu(n, QValue(qv), p));
                for (const NodeSegment& s : nodes) {
                    CHECK(s.lo >= -1e-14);
                    CHECK(s.hi <= 1.0 + 1e-14);
                    CHECK(s.lo <= s.hi);
                }
            }
    // With zero shifts consecutive intervals share endpoints: [k]+q^k = [k+1].
    for (double qv : kQGrid)
        for (int n : {1, 3, 9}) {
            const auto nodes =
                sample_nodes(OperatorSpec::q_kantorovich_stancu(n, QValue(qv), StancuParams()));
            for (size_t i = 0; i + 1 < nodes.size(); ++i)
                CHECK(nodes[i].hi == doctest::Approx(nodes[i + 1].lo).epsilon(1e-14));
            CHECK(nodes.back().hi == doctest::Approx(1.0).epsilon(1e-14));
        }
}

TEST_CASE("TargetFunction rejects bad metadata and missing derivatives") {
    TargetFunction f("steep", [](double t) { return 5.0 * t; });
    CHECK_THROWS_AS(f.with_lipschitz(1.0, 1.0), std::invalid_argument);  // true slope is 5
    CHECK_THROWS_AS(f.d1(0.5), std::logic_error);
    CHECK_THROWS_AS(TargetFunction("bad", [](double t) { return 1.0 / (t - 0.5); }),
                    std::invalid_argument);
}
