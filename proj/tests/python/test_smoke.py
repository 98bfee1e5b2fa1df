"""Smoke tests for the python bindings."""
import math

import pytest

qbstancu = pytest.importorskip("qbstancu")


def test_q_calculus_primitives():
    assert qbstancu.q_integer(3, 0.5) == pytest.approx(1.75, abs=1e-15)
    assert qbstancu.q_factorial(3, 0.5) == pytest.approx(2.625, abs=1e-15)
    assert qbstancu.q_binomial(4, 2, 0.5) == pytest.approx(2.1875, abs=1e-15)
    assert qbstancu.q_pochhammer_one_minus(0.5, 2, 0.5) == pytest.approx(0.375, abs=1e-15)


def test_jackson_integral():
    assert qbstancu.jackson_integral(lambda t: t, 1.0, 0.5) == pytest.approx(2.0 / 3.0, abs=1e-13)
    assert qbstancu.jackson_integral(lambda t: t * t, 1.0, 0.5) == pytest.approx(4.0 / 7.0, abs=1e-13)


def test_weights_partition_of_unity():
    w = qbstancu.q_bernstein_weights(8, 0.9, 0.37)
    assert sum(w) == pytest.approx(1.0, abs=1e-12)
    ws, inside = qbstancu.stancu_weights(8, 0.9, (1, 2, 3, 4), 0.5)
    assert sum(ws) == pytest.approx(1.0, abs=1e-12)
    assert inside


def test_operator_reproduces_constants_and_matches_moments():
    op = qbstancu.Operator("q-kantorovich-stancu", n=8, q=0.9, params=(1, 2, 3, 4), f="one")
    a, b = op.domain()
    assert 0.0 < a < b <= 1.0
    for i in range(5):
        x = a + (b - a) * i / 4.0
        assert op(x) == pytest.approx(1.0, abs=1e-12)

    ident = qbstancu.Operator("q-kantorovich-stancu", n=8, q=0.9, params=(1, 2, 3, 4), f=lambda t: t)
    x = 0.5
    assert ident(x) == pytest.approx(qbstancu.first_moment(8, 0.9, (1, 2, 3, 4), x), abs=1e-10)


def test_nodes_stay_in_unit_interval():
    op = qbstancu.Operator("q-kantorovich-stancu", n=6, q=0.8, params=(1, 2, 3, 4), f="x2")
    for _, lo, hi in op.nodes():
        assert -1e-15 <= lo <= hi <= 1 + 1e-15


def test_moment_bound_spot_value():
    assert qbstancu.delta_global(99, 1 - 1e-12, (0, 0, 0, 0)) == pytest.approx(0.1, abs=1e-6)


def test_voronovskaja_limit_and_modulus():
    drift, diffusion = qbstancu.voronovskaja_limit(0.4, 0.0, (0, 0, 0, 0))
    assert drift == pytest.approx(0.3, abs=1e-14)
    assert diffusion == pytest.approx(0.24, abs=1e-14)
    assert qbstancu.modulus("abshalf", 0.1, 1001) == pytest.approx(0.1, abs=1e-3)


def test_expression_parsing():
    assert qbstancu.eval_function("1 - cos(4*e^x)", 0.5) == pytest.approx(
        1.0 - math.cos(4.0 * math.exp(0.5)), abs=1e-12
    )
    with pytest.raises(Exception):
        qbstancu.eval_function("1/(x-0.5)", 0.1)


def test_verify_suite_passes():
    results = qbstancu.run_verify()
    assert results
    assert all(ok for _, ok, _ in results)
