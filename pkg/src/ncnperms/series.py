"""Truncated formal power series over exact rationals, and a solver that
extracts the unique power-series root of an implicit polynomial equation.

Given a polynomial F(x, y) with F(0, y0) = 0 and dF/dy nonzero at (0, y0),
there is exactly one power series y(x) with y(0) = y0 and F(x, y(x)) = 0;
the solver computes its truncation to any order.  Both generating functions
of the 231-avoiding families are defined this way, so their coefficients
can be read off without ever running the convolution recurrences -- an
independent route used for cross-validation.

No floating point enters this module; every coefficient is a Fraction and
the residual postcondition F(x, y(x)) = 0 is checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import Discipline, ValidationError

NEWTON_THRESHOLD = 64

RationalLike = Fraction | int


class SolverError(ValueError):
    """The implicit equation fails a solvability precondition."""


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series known exactly up to x**order, nothing beyond."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs:
            raise ValidationError("a truncated series stores at least order 0")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def add(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Coefficientwise sum, truncated to the smaller order."""
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(self[i] + other[i] for i in range(order + 1))
        )

    def sub(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(self[i] - other[i] for i in range(order + 1))
        )

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product, truncated to the smaller order."""
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        return TruncatedSeries(
            tuple(
                sum((a[i] * b[m - i] for i in range(m + 1)), Fraction(0))
                for m in range(order + 1)
            )
        )

    def scale(self, factor: RationalLike) -> "TruncatedSeries":
        factor = Fraction(factor)
        return TruncatedSeries(tuple(c * factor for c in self.coefficients))

    def shift_by_x(self) -> "TruncatedSeries":
        """Multiply by x; the order grows by one, no information is lost."""
        return TruncatedSeries((Fraction(0),) + self.coefficients)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValidationError(
                f"cannot extend a series of order {self.order} to {order}"
            )
        return TruncatedSeries(self.coefficients[: order + 1])

    __add__ = add
    __sub__ = sub
    __mul__ = mul

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def render(self) -> str:
        """Human form "c0 + c1*x + ... + cN*x^N", every term shown."""
        parts = [str(self.coefficients[0])]
        for i, c in enumerate(self.coefficients[1:], start=1):
            parts.append(f"{c}*x" if i == 1 else f"{c}*x^{i}")
        return " + ".join(parts)

    def coefficient_strings(self) -> list[str]:
        """Exact decimal strings; non-integers render as "num/den"."""
        return [str(c) for c in self.coefficients]


@dataclass(frozen=True)
class BivariatePolynomial:
    """An integer polynomial in x and y, stored as (x-degree, y-degree) -> coefficient."""

    coefficients: Mapping[tuple[int, int], int]

    def __post_init__(self) -> None:
        cleaned = {
            (int(i), int(j)): int(c)
            for (i, j), c in dict(self.coefficients).items()
            if c != 0
        }
        if any(i < 0 or j < 0 for i, j in cleaned):
            raise ValidationError("monomial degrees must be non-negative")
        object.__setattr__(self, "coefficients", cleaned)

    @property
    def y_degree(self) -> int:
        return max((j for _, j in self.coefficients), default=0)

    def evaluate(self, x: RationalLike, y: RationalLike) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return sum(
            (c * x**i * y**j for (i, j), c in self.coefficients.items()),
            Fraction(0),
        )

    def derivative_y(self) -> "BivariatePolynomial":
        return BivariatePolynomial(
            {(i, j - 1): c * j for (i, j), c in self.coefficients.items() if j > 0}
        )

    def compose(self, y: list[Fraction], order: int) -> list[Fraction]:
        """Coefficients 0..order of F(x, y(x)) for y given as a coefficient list."""
        zero = Fraction(0)
        y = (y + [zero] * (order + 1))[: order + 1]
        powers = [[Fraction(1)] + [zero] * order]
        for _ in range(self.y_degree):
            prev = powers[-1]
            powers.append(
                [
                    sum((prev[i] * y[m - i] for i in range(m + 1)), zero)
                    for m in range(order + 1)
                ]
            )
        out = [zero] * (order + 1)
        for (i, j), c in self.coefficients.items():
            if i > order:
                continue
            pj = powers[j]
            for m in range(i, order + 1):
                out[m] += c * pj[m - i]
        return out


def residual(equation: BivariatePolynomial, series: TruncatedSeries) -> TruncatedSeries:
    """F(x, y(x)) truncated at the order of ``series``; zero iff it solves F."""
    return TruncatedSeries(
        tuple(equation.compose(list(series.coefficients), series.order))
    )


def _check_simple_root(
    equation: BivariatePolynomial, y0: Fraction
) -> Fraction:
    if equation.evaluate(0, y0) != 0:
        raise SolverError(
            f"F(0, {y0}) = {equation.evaluate(0, y0)} != 0: no series root starts there"
        )
    slope = equation.derivative_y().evaluate(0, y0)
    if slope == 0:
        raise SolverError(
            f"dF/dy vanishes at (0, {y0}): the root is not simple, "
            "order-by-order extraction is not forced"
        )
    return slope


def _solve_direct(
    equation: BivariatePolynomial, y0: Fraction, order: int, slope: Fraction
) -> list[Fraction]:
    # With coefficients c_0..c_{n-1} fixed, coefficient n of F(x, y) is
    # linear in c_n with slope dF/dy(0, y0); solve for it one index at a time.
    coeffs = [y0]
    for n in range(1, order + 1):
        res_n = equation.compose(coeffs, n)[n]
        coeffs.append(-res_n / slope)
    return coeffs


def _reciprocal(f: list[Fraction], order: int) -> list[Fraction]:
    inv0 = 1 / f[0]
    inv = [inv0]
    for m in range(1, order + 1):
        acc = sum((f[i] * inv[m - i] for i in range(1, m + 1)), Fraction(0))
        inv.append(-inv0 * acc)
    return inv


def _solve_newton(
    equation: BivariatePolynomial, y0: Fraction, order: int
) -> list[Fraction]:
    # y <- y - F(y)/F'(y) doubles the number of correct coefficients per step.
    derivative = equation.derivative_y()
    coeffs = [y0]
    correct = 0
    while correct < order:
        correct = min(2 * correct + 1, order)
        value = equation.compose(coeffs, correct)
        slope = derivative.compose(coeffs, correct)
        inv = _reciprocal(slope, correct)
        zero = Fraction(0)
        update = [
            sum((value[i] * inv[m - i] for i in range(m + 1)), zero)
            for m in range(correct + 1)
        ]
        coeffs = (coeffs + [zero] * (correct + 1 - len(coeffs)))[: correct + 1]
        coeffs = [coeffs[m] - update[m] for m in range(correct + 1)]
    return coeffs


def solve_algebraic(
    equation: BivariatePolynomial,
    y0: RationalLike,
    order: int,
    method: str = "auto",
) -> TruncatedSeries:
    """The unique series y with y(0) = y0 and F(x, y(x)) = 0 mod x**(order+1).

    Preconditions (checked): F(0, y0) = 0 and dF/dy(0, y0) != 0.  The method
    is "direct" (one coefficient per step) for small orders and "newton"
    (order doubling) beyond NEWTON_THRESHOLD; both produce identical output.
    """
    if order < 0:
        raise ValidationError("order must be non-negative")
    if method not in ("auto", "direct", "newton"):
        raise ValidationError(f"unknown method {method!r}")
    y0 = Fraction(y0)
    slope = _check_simple_root(equation, y0)
    if method == "auto":
        method = "newton" if order > NEWTON_THRESHOLD else "direct"
    if method == "direct":
        coeffs = _solve_direct(equation, y0, order, slope)
    else:
        coeffs = _solve_newton(equation, y0, order)
    return TruncatedSeries(tuple(coeffs))


def builtin_equation(which: Discipline) -> BivariatePolynomial:
    """The implicit equation pinning down the 231-avoider generating function.

    Non-nesting (cubic in y):

        x^3 y^3 - (x^3 + 3x^2 + x) y^2 + (2x^2 - x + 1) y + (x - 1) = 0

    Non-crossing (quartic in y):

        x^2 y^4 - (x^2 + x) y^3 - x y^2 + (x + 1) y - 1 = 0

    Both have a simple series root at (0, 1), matching the single empty word
    of semilength 0.
    """
    if which is Discipline.NON_NESTING:
        return BivariatePolynomial(
            {
                (3, 3): 1,
                (3, 2): -1,
                (2, 2): -3,
                (1, 2): -1,
                (2, 1): 2,
                (1, 1): -1,
                (0, 1): 1,
                (1, 0): 1,
                (0, 0): -1,
            }
        )
    if which is Discipline.NON_CROSSING:
        return BivariatePolynomial(
            {
                (2, 4): 1,
                (2, 3): -1,
                (1, 3): -1,
                (1, 2): -1,
                (1, 1): 1,
                (0, 1): 1,
                (0, 0): -1,
            }
        )
    raise ValidationError(f"unknown discipline {which!r}")
