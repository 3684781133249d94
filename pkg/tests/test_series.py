import random
from fractions import Fraction

import pytest

from ncnperms.core import Discipline, ValidationError
from ncnperms.recurrences import nonnesting_231_system, noncrossing_231_system
from ncnperms.series import (
    BivariatePolynomial,
    SolverError,
    TruncatedSeries,
    builtin_equation,
    residual,
    solve_algebraic,
)

GEOMETRIC = BivariatePolynomial({(0, 1): 1, (0, 0): -1, (1, 1): -1})  # y - 1 - x*y


def series(*coeffs):
    return TruncatedSeries(tuple(Fraction(c) for c in coeffs))


def test_series_validation_and_order():
    assert series(1, 2).order == 1
    with pytest.raises(ValidationError):
        TruncatedSeries(())


def test_add_mul_scale_shift():
    one_plus_x = series(1, 1, 0)
    assert one_plus_x.mul(one_plus_x) == series(1, 2, 1)
    geometric = series(1, 1, 1, 1)
    assert geometric.mul(series(1, -1, 0, 0)) == series(1, 0, 0, 0)
    assert series(1, 1).shift_by_x() == series(0, 1, 1)
    assert series(1, 2).add(series(3, 4)) == series(4, 6)
    assert series(1, 2).scale(Fraction(1, 2)) == series(Fraction(1, 2), 1)
    assert (series(1, 1) + series(1, 1)) == series(2, 2)
    assert (series(1, 1) - series(1, 1)).is_zero()


def test_mixed_orders_resolve_to_smaller():
    long = series(1, 1, 1, 1, 1)
    short = series(1, 1)
    assert long.mul(short).order == 1
    assert long.add(short).order == 1


def test_truncate():
    s = series(1, 2, 3)
    assert s.truncate(1) == series(1, 2)
    with pytest.raises(ValidationError):
        s.truncate(5)


def test_render_and_strings():
    s = series(1, 0, Fraction(-4))
    assert s.render() == "1 + 0*x + -4*x^2"
    assert s.coefficient_strings() == ["1", "0", "-4"]
    assert series(Fraction(1, 3)).coefficient_strings() == ["1/3"]


def test_bivariate_polynomial_basics():
    cubic = builtin_equation(Discipline.NON_NESTING)
    quartic = builtin_equation(Discipline.NON_CROSSING)
    assert cubic.evaluate(0, 1) == 0
    assert quartic.evaluate(0, 1) == 0
    assert cubic.derivative_y().evaluate(0, 1) == 1
    assert quartic.derivative_y().evaluate(0, 1) == 1
    assert cubic.y_degree == 3
    assert quartic.y_degree == 4
    with pytest.raises(ValidationError):
        BivariatePolynomial({(-1, 0): 1})


def test_solver_geometric_series():
    assert solve_algebraic(GEOMETRIC, 1, 4) == series(1, 1, 1, 1, 1)


def test_solver_published_expansions():
    cubic = solve_algebraic(builtin_equation(Discipline.NON_NESTING), 1, 10)
    assert [c.numerator for c in cubic.coefficients] == [
        1, 1, 4, 17, 77, 367, 1815, 9233, 48014, 254123, 1364491,
    ]
    quartic = solve_algebraic(builtin_equation(Discipline.NON_CROSSING), 1, 9)
    assert [c.numerator for c in quartic.coefficients] == [
        1, 1, 4, 19, 102, 590, 3588, 22617, 146460, 968520,
    ]


def test_solver_output_is_integral_for_builtins():
    for disc in Discipline:
        solved = solve_algebraic(builtin_equation(disc), 1, 60)
        assert all(c.denominator == 1 for c in solved.coefficients)


def test_residual_zero_for_builtin_solutions():
    for disc in Discipline:
        equation = builtin_equation(disc)
        solved = solve_algebraic(equation, 1, 60)
        assert residual(equation, solved).is_zero()


def test_residual_detects_non_solutions():
    assert residual(GEOMETRIC, series(1, 1)).is_zero()
    quartic = builtin_equation(Discipline.NON_CROSSING)
    res = residual(quartic, series(1, 1, 0))
    assert res == series(0, 0, -4)


def test_solver_agrees_with_recurrences_to_order_60():
    nn = nonnesting_231_system(60).unconstrained
    nc = noncrossing_231_system(60).unconstrained
    cubic = solve_algebraic(builtin_equation(Discipline.NON_NESTING), 1, 60)
    quartic = solve_algebraic(builtin_equation(Discipline.NON_CROSSING), 1, 60)
    for n in range(61):
        assert cubic[n] == nn[n]
        assert quartic[n] == nc[n]


def test_newton_and_direct_paths_agree():
    for equation in (GEOMETRIC, builtin_equation(Discipline.NON_NESTING)):
        direct = solve_algebraic(equation, 1, 40, method="direct")
        newton = solve_algebraic(equation, 1, 40, method="newton")
        assert direct == newton


def test_auto_switches_to_newton_above_threshold():
    # above the threshold the auto path is newton; check it against the
    # recurrence tables rather than against another series run
    table = noncrossing_231_system(80).unconstrained
    solved = solve_algebraic(builtin_equation(Discipline.NON_CROSSING), 1, 80)
    for n in range(81):
        assert solved[n] == table[n]


def test_truncation_consistency():
    equation = builtin_equation(Discipline.NON_NESTING)
    assert solve_algebraic(equation, 1, 30).truncate(12) == solve_algebraic(equation, 1, 12)


def test_solver_precondition_errors():
    with pytest.raises(SolverError):
        solve_algebraic(GEOMETRIC, 2, 5)  # F(0, 2) = 1 != 0
    double_root = BivariatePolynomial({(0, 2): 1, (0, 1): -2, (0, 0): 1, (1, 0): -1})
    # (y - 1)^2 - x: root at (0, 1) is not simple
    with pytest.raises(SolverError):
        solve_algebraic(double_root, 1, 5)
    with pytest.raises(ValidationError):
        solve_algebraic(GEOMETRIC, 1, -1)
    with pytest.raises(ValidationError):
        solve_algebraic(GEOMETRIC, 1, 5, method="magic")


def _random_solvable(rng: random.Random) -> tuple[BivariatePolynomial, int]:
    while True:
        y0 = rng.randint(-2, 2)
        grid = {
            (i, j): rng.randint(-3, 3)
            for i in range(0, 3)
            for j in range(0, 3)
            if rng.random() < 0.7
        }
        poly = BivariatePolynomial(grid)
        slope = poly.derivative_y().evaluate(0, y0)
        if slope == 0:
            continue
        # shift the constant term so the series root starts at y0
        shift = poly.evaluate(0, y0)
        grid[(0, 0)] = grid.get((0, 0), 0) - shift
        candidate = BivariatePolynomial(grid)
        if candidate.evaluate(0, y0) == 0 and candidate.derivative_y().evaluate(0, y0) != 0:
            return candidate, y0


def test_randomized_solutions_have_zero_residual():
    rng = random.Random(20250810)
    for _ in range(20):
        equation, y0 = _random_solvable(rng)
        solved = solve_algebraic(equation, y0, 12)
        assert residual(equation, solved).is_zero()
        newton = solve_algebraic(equation, y0, 12, method="newton")
        assert newton == solved
