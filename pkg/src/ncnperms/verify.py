"""Cross-validation: every number this package produces is computed at least
two independent ways, and this module runs the comparisons.

Routes compared: brute-force enumeration, the convolution recurrences, the
implicit-equation series solver, and the closed forms.  On top of the value
comparisons there are structural checks on the enumerated words themselves
(what may happen inside the window spanned by the largest label, and which
labelings of a non-crossing matching avoid 122).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import permutations

from .core import Discipline, Word, pair_steps
from .enumeration import Constraint, count_by_constraint, dyck_words, labeled_words
from .patterns import Pattern, contains
from .recurrences import (
    NonCrossing231System,
    NonNesting231System,
    catalan,
    nonnesting_231_system,
    noncrossing_231_system,
    qbar_via_compositions,
)
from .series import builtin_equation, residual, solve_algebraic

PATTERN_231 = Pattern((2, 3, 1))
PATTERN_122 = Pattern((1, 2, 2))


class Level(Enum):
    QUICK = "quick"
    FULL = "full"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


# ---------------------------------------------------------------------------
# Structural checks on single words
# ---------------------------------------------------------------------------


def _max_label_window(word: Word) -> tuple[int, int]:
    """1-based positions (i, j) of the two occurrences of the largest label."""
    n = word.semilength
    first = word.entries.index(n) + 1
    second = word.entries.index(n, first) + 1
    return first, second


def window_traffic_ok(word: Word) -> bool:
    """At most one arc closes and at most one opens strictly between the two
    positions of the largest label.  Holds for every 231-avoiding
    non-nesting word.
    """
    n = word.semilength
    if n <= 1:
        return True
    i, j = _max_label_window(word)
    closers = openers = 0
    seen: dict[int, int] = {}
    for pos, lab in enumerate(word.entries, start=1):
        if lab == n:
            continue
        if lab in seen:
            if seen[lab] < i and i < pos < j:
                closers += 1
            if i < seen[lab] < j and pos > j:
                openers += 1
        else:
            seen[lab] = pos
    return closers <= 1 and openers <= 1


def window_extremes_ok(word: Word) -> bool:
    """An arc closing strictly inside the largest-label window carries the
    largest label seen before the window; one opening inside carries the
    smallest label seen after it.  Holds for every 231-avoiding non-nesting
    word.
    """
    n = word.semilength
    if n <= 1:
        return True
    i, j = _max_label_window(word)
    entries = word.entries
    left = entries[: i - 1]
    right = entries[j:]
    seen: dict[int, int] = {}
    for pos, lab in enumerate(entries, start=1):
        if lab == n:
            continue
        if lab in seen:
            if seen[lab] < i and i < pos < j and lab != max(left):
                return False
            if i < seen[lab] < j and pos > j and lab != min(right):
                return False
        else:
            seen[lab] = pos
    return True


def decreasing_labeling_is_unique_122_avoider(n: int) -> bool:
    """For every non-crossing matching shape of semilength n, exactly one of
    the n! labelings avoids 122, and it labels arcs in decreasing opener
    order (first-opened arc gets n).
    """
    decreasing = tuple(range(n, 0, -1))
    labelings = list(permutations(range(1, n + 1)))
    for dyck in dyck_words(n):
        pairs = pair_steps(dyck, Discipline.NON_CROSSING)
        survivors = []
        for labels in labelings:
            entries = [0] * (2 * n)
            for (a, b), lab in zip(pairs, labels):
                entries[a - 1] = lab
                entries[b - 1] = lab
            if not contains(Word(tuple(entries)), PATTERN_122):
                survivors.append(labels)
        if survivors != [decreasing]:
            return False
    return True


def count_122_family(n: int) -> dict[str, int]:
    """One enumeration pass: counts of non-crossing words avoiding 122, and
    avoiding 122 plus each single second pattern of length 3.
    """
    seconds = {
        key: Pattern.parse(key) for key in ("132", "213", "231", "123", "312", "321")
    }
    counts = {"122": 0, **{f"122,{key}": 0 for key in seconds}}
    for word in labeled_words(n, Discipline.NON_CROSSING):
        if contains(word, PATTERN_122):
            continue
        counts["122"] += 1
        for key, sigma in seconds.items():
            if not contains(word, sigma):
                counts[f"122,{key}"] += 1
    return counts


# ---------------------------------------------------------------------------
# The verification run
# ---------------------------------------------------------------------------


def _expected_122(key: str, n: int) -> int:
    if key in ("122", "122,132"):
        return catalan(n)
    if key == "122,213":
        a, b = 1, 2
        for _ in range(n - 1):
            a, b = b, a + b
        return a
    if key in ("122,231", "122,123"):
        return 2 ** (n - 1)
    if key == "122,312":
        return n
    return [1, 2][n - 1] if n <= 2 else 0  # 122,321


def run_verification(
    level: Level = Level.QUICK,
    nonnesting: NonNesting231System | None = None,
    noncrossing: NonCrossing231System | None = None,
) -> list[CheckResult]:
    """Run every cross-check at the given level and report one result each.

    ``nonnesting`` / ``noncrossing`` default to freshly computed systems;
    passing tables in lets tests confirm that corrupt data is caught.
    """
    max_n = 4 if level is Level.QUICK else 6
    order = 20 if level is Level.QUICK else 60
    nn = nonnesting if nonnesting is not None else nonnesting_231_system(order)
    nc = noncrossing if noncrossing is not None else noncrossing_231_system(order)
    results: list[CheckResult] = []

    def record(name: str, passed: bool, detail: str = "") -> None:
        results.append(CheckResult(name, passed, detail))

    # Unfiltered counts are n! * C(n) for both disciplines.
    for disc in Discipline:
        failure = ""
        for n in range(max_n + 1):
            got = count_by_constraint(n, disc, (), cap=max_n)[Constraint.NONE]
            expected = math.factorial(n) * catalan(n)
            if got != expected:
                failure = f"n={n}, expected {expected}, got {got}"
                break
        record(f"baseline count n!*C(n), {disc.value}, n<={max_n}", not failure, failure)

    # Brute force vs the non-nesting convolution tables, all four constraints.
    tables_nn = {
        Constraint.NONE: nn.unconstrained,
        Constraint.FIRST_IS_1: nn.first_is_1,
        Constraint.LAST_IS_N: nn.last_is_n,
        Constraint.BOTH: nn.both,
    }
    failure = ""
    for n in range(max_n + 1):
        counted = count_by_constraint(n, Discipline.NON_NESTING, (PATTERN_231,), cap=max_n)
        for constraint, table in tables_nn.items():
            if counted[constraint] != table[n]:
                failure = (
                    f"n={n}, family={table.name}, "
                    f"expected {table[n]}, got {counted[constraint]}"
                )
                break
        if failure:
            break
    record(f"oracle vs non-nesting 231 tables, n<={max_n}", not failure, failure)

    # Brute force vs the non-crossing convolution tables (the two that exist).
    tables_nc = {
        Constraint.NONE: nc.unconstrained,
        Constraint.FIRST_IS_1: nc.first_is_1,
    }
    failure = ""
    for n in range(max_n + 1):
        counted = count_by_constraint(n, Discipline.NON_CROSSING, (PATTERN_231,), cap=max_n)
        for constraint, table in tables_nc.items():
            if counted[constraint] != table[n]:
                failure = (
                    f"n={n}, family={table.name}, "
                    f"expected {table[n]}, got {counted[constraint]}"
                )
                break
        if failure:
            break
    record(f"oracle vs non-crossing 231 tables, n<={max_n}", not failure, failure)

    # Brute force vs the 122 closed forms.
    failure = ""
    for n in range(1, max_n + 1):
        counts = count_122_family(n)
        for key, got in counts.items():
            expected = _expected_122(key, n)
            if got != expected:
                failure = f"n={n}, family=q{key}, expected {expected}, got {got}"
                break
        if failure:
            break
    record(f"oracle vs 122 closed forms, n<={max_n}", not failure, failure)

    # Series solver vs the convolution tables.
    for disc, table in (
        (Discipline.NON_NESTING, nn.unconstrained),
        (Discipline.NON_CROSSING, nc.unconstrained),
    ):
        solved = solve_algebraic(builtin_equation(disc), 1, order)
        failure = ""
        for n in range(order + 1):
            c = solved[n]
            if c.denominator != 1 or c.numerator != table[n]:
                failure = f"n={n}, family={table.name}, expected {table[n]}, got {c}"
                break
        record(f"series solver vs {table.name}, order {order}", not failure, failure)
        res = residual(builtin_equation(disc), solved)
        record(
            f"residual of solved series is zero, {disc.value}, order {order}",
            res.is_zero(),
            "" if res.is_zero() else f"residual {res.render()}",
        )

    # Tail identities: differencing the constrained tables recovers the
    # unconstrained ones (last entry n strips to index n-1).
    failure = ""
    for n in range(1, min(order, nn.unconstrained.last_index) + 1):
        if nn.last_is_n[n] - nn.last_is_n[n - 1] != nn.unconstrained[n - 1]:
            failure = f"r231[{n}] - r231[{n - 1}] != p231[{n - 1}]"
            break
        expected = nn.first_is_1[n - 1] + (1 if n == 1 else 0)
        if nn.both[n] - nn.both[n - 1] != expected:
            failure = f"rprime231[{n}] - rprime231[{n - 1}] != q231[{n - 1}]"
            break
    record(f"tail-difference identities, order {order}", not failure, failure)

    # Composition sum route for first=1 non-crossing counts.
    comp_limit = 8 if level is Level.QUICK else 12
    comp = qbar_via_compositions(comp_limit)
    failure = ""
    for n in range(comp_limit + 1):
        if comp[n] != nc.first_is_1[n]:
            failure = f"n={n}, expected {nc.first_is_1[n]}, got {comp[n]}"
            break
    record(f"composition sum vs qbar231, n<={comp_limit}", not failure, failure)

    if level is Level.FULL:
        # Structure of 231-avoiding non-nesting words around the max label.
        failure = ""
        for n in range(6):
            for word in labeled_words(n, Discipline.NON_NESTING):
                if contains(word, PATTERN_231):
                    continue
                if not window_traffic_ok(word):
                    failure = f"traffic violation at {word}"
                    break
                if not window_extremes_ok(word):
                    failure = f"extremes violation at {word}"
                    break
            if failure:
                break
        record("max-label window structure, n<=5", not failure, failure)

        failure = ""
        for n in range(6):
            if not decreasing_labeling_is_unique_122_avoider(n):
                failure = f"bijection fails at n={n}"
                break
        record("unique 122-avoiding labeling per matching, n<=5", not failure, failure)

    return results


def first_failure(results: list[CheckResult]) -> CheckResult | None:
    for result in results:
        if not result.passed:
            return result
    return None
