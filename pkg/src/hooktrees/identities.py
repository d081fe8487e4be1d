"""Exhaustive exact verification of the hook-length identities.

Every identity family pairs a left-hand side, obtained by summing a
per-tree (or per-forest) product of linear factors in x over an
exhaustively enumerated universe, with an independently built closed-form
right-hand side; a check compares the two values exactly.  The families:

====================  =========================================================
postnikov             (n!/2^n) * sum prod (1 + 1/h_v) = (n+1)^(n-1), numeric,
                      over binary trees with standard hooks.
lascoux_1_1           sum prod ((h+1)x - h + 1)/(2h) = rhs_binomial_poly(1, n).
duliu_1_2a            sum prod ((mh+1)x - h + 1)/((m+1)h) over arity-(m+1)
                      trees, standard hooks = rhs_binomial_poly(m, n).
duliu_1_2b            sum prod (x + 1/h), same universe
                      = rhs_product_poly("thm1_2_eq51a", m, n, 0).
forest_1_3a           sum prod (x + 1/H_v) over plane forests, all vertices
                      = rhs_product_poly("thm1_1_eq16", 2, n).
forest_1_3b           sum prod ((2H-1)x - H + 1)/H = rhs_binomial_poly(2, n).
thm1_1_eq1_6          sum prod (x + 1/hcal_v) over arity-m trees
                      = rhs_product_poly("thm1_1_eq16", m, n).
thm1_1_eq1_7          sum prod ((m*hcal-1)x - hcal + 1)/((m-1)hcal)
                      = rhs_binomial_poly(m, n).
thm1_2_eq5_1a         sum prod (x + 1/hbb_v^S) over arity-(m+1) trees
                      = rhs_product_poly("thm1_2_eq51a", m, n, |S|).
thm1_2_eq5_1b         sum prod (((m-s)hbb+1)x - hbb + 1)/((m-s+1)hbb)
                      = rhs_binomial_poly(m, n); independent of S entirely.
cor1_first            sum prod (1/hcal) = m^n * rhs_binomial_poly(m, n)(1/m),
                      numeric; cross-checked against the x = 0 value of the
                      thm1_1_eq1_6 right side.
cor1_second           sum prod (m - 1/hcal) = (m-1)^n (mn+1)^(n-1) / n!,
                      cross-checked at x = -m.
cor2_first            sum prod (m-s-1 + 1/hbb^S)
                      = rhs_binomial_poly(m, n)(m-s), cross-checked at
                      x = m-s-1 of the thm1_2_eq5_1a right side.
cor2_second           sum prod (m-s + 1/hbb^S) = (m-s+1)^n (mn+1)^(n-1) / n!,
                      cross-checked at x = m-s.
cor2_third            sum prod (x - hbb^[m] + 1)/hbb^[m]
                      = rhs_binomial_poly(m, n), with S the full set [m].
====================  =========================================================

``check_recurrence_thm1_1`` and ``check_gf_relations`` verify the
convolution recurrence and the truncated-series relations behind the two
main families.

Summations are associative exact reductions, so ``verify_suite`` may
partition a grid across worker processes and still assemble a
deterministic result.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass, replace
from fractions import Fraction
from time import perf_counter
from typing import Callable, Iterable, Sequence

from .algebra import (
    ONE,
    Poly,
    PolySeries,
    ZERO,
    rhs_binomial_poly,
    rhs_product_poly,
    series_compose_scaled,
)
from .hooks import first_kind_hooks, forest_hooks, second_kind_hooks, standard_hooks
from .trees import count_trees, enumerate_forests, enumerate_trees

FAMILIES = (
    "postnikov",
    "lascoux_1_1",
    "duliu_1_2a",
    "duliu_1_2b",
    "forest_1_3a",
    "forest_1_3b",
    "thm1_1_eq1_6",
    "thm1_1_eq1_7",
    "thm1_2_eq5_1a",
    "thm1_2_eq5_1b",
    "cor1_first",
    "cor1_second",
    "cor2_first",
    "cor2_second",
    "cor2_third",
)

# Families grouped by the parameters they take.
_NO_M = {"postnikov", "lascoux_1_1", "forest_1_3a", "forest_1_3b"}
_M_GE_2 = {"thm1_1_eq1_6", "thm1_1_eq1_7", "cor1_first", "cor1_second"}
_M_GE_1 = {
    "duliu_1_2a",
    "duliu_1_2b",
    "thm1_2_eq5_1a",
    "thm1_2_eq5_1b",
    "cor2_first",
    "cor2_second",
    "cor2_third",
}
_TAKES_S = {"thm1_2_eq5_1a", "thm1_2_eq5_1b", "cor2_first", "cor2_second", "cor2_third"}


@dataclass(frozen=True)
class IdentitySpec:
    """One identity instance: a family plus its parameters.

    ``m`` is the family's branching parameter (``None`` for the families
    that do not take one); ``S`` the pruned position set for the
    second-kind families, normalized to a frozenset.
    """

    family: str
    m: int | None = None
    n: int = 0
    S: frozenset[int] | None = None

    def __post_init__(self):
        if self.S is not None and not isinstance(self.S, frozenset):
            object.__setattr__(self, "S", frozenset(self.S))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exact check.

    ``passed`` is True iff ``lhs`` equals ``rhs`` exactly (both are a Poly,
    a Fraction, or -- for the structural series checks -- a tuple of Poly
    coefficients).  ``note`` carries diagnostics for reports produced from
    invalid parameters by ``verify_suite``.
    """

    spec: IdentitySpec
    lhs: Poly | Fraction | tuple | None
    rhs: Poly | Fraction | tuple | None
    passed: bool
    trees_visited: int
    elapsed: float
    note: str | None = None


def _validated(spec: IdentitySpec) -> IdentitySpec:
    """Check parameter ranges and fill in the normalized S for a family."""
    f = spec.family
    if f not in FAMILIES:
        raise ValueError(f"unknown identity family {f!r}")
    min_n = 1 if f == "postnikov" else 0
    if spec.n < min_n:
        raise ValueError(f"{f} needs n >= {min_n}, got {spec.n}")
    if f in _NO_M:
        if spec.m is not None:
            raise ValueError(f"{f} does not take an m parameter")
    elif f in _M_GE_2:
        if spec.m is None or spec.m < 2:
            raise ValueError(f"{f} needs m >= 2, got {spec.m}")
    else:
        if spec.m is None or spec.m < 1:
            raise ValueError(f"{f} needs m >= 1, got {spec.m}")
    if f not in _TAKES_S:
        if spec.S is not None:
            raise ValueError(f"{f} does not take an S parameter")
        return spec
    full = frozenset(range(1, spec.m + 1))
    if f == "cor2_third":
        s_set = full if spec.S is None else spec.S
        if s_set != full:
            raise ValueError(f"cor2_third requires S = [m], got {sorted(s_set)}")
    else:
        s_set = frozenset() if spec.S is None else spec.S
        if not s_set <= full:
            raise ValueError(f"S = {sorted(s_set)} is not a subset of [1..{spec.m}]")
    return replace(spec, S=s_set)


# ---------------------------------------------------------------------------
# Summation engine.
#
# A per-item product of linear factors (c1*x + c0)/d is accumulated as an
# integer numerator coefficient list plus an integer denominator, bucketed
# by denominator; each bucket is converted to Fractions once at the end.
# Items of one universe always contribute the same number of factors, so
# all numerators in a bucket share a length.
# ---------------------------------------------------------------------------


def _poly_sum(universe, values_of, table, n: int) -> tuple[Poly, int]:
    buckets: dict[int, list[int]] = {}
    visited = 0
    for item in universe:
        visited += 1
        num = [1]
        den = 1
        for h in values_of(item):
            c1, c0, d = table[h]
            den *= d
            new = [num[0] * c0]
            for k in range(1, len(num)):
                new.append(num[k] * c0 + num[k - 1] * c1)
            new.append(num[-1] * c1)
            num = new
        acc = buckets.get(den)
        if acc is None:
            buckets[den] = num
        else:
            for k in range(n + 1):
                acc[k] += num[k]
    coeffs = [Fraction(0)] * (n + 1)
    for den, num in buckets.items():
        for k, c in enumerate(num):
            if c:
                coeffs[k] += Fraction(c, den)
    return Poly(coeffs), visited


def _numeric_sum(universe, values_of, table) -> tuple[Fraction, int]:
    buckets: dict[int, int] = {}
    visited = 0
    for item in universe:
        visited += 1
        num = 1
        den = 1
        for h in values_of(item):
            c0, d = table[h]
            num *= c0
            den *= d
        buckets[den] = buckets.get(den, 0) + num
    total = sum((Fraction(num, den) for den, num in buckets.items()), Fraction(0))
    return total, visited


def _hook_values(kind: str, S: frozenset[int] | None = None) -> Callable:
    if kind == "standard":
        return lambda t: standard_hooks(t).values()
    if kind == "first":
        return lambda t: first_kind_hooks(t).values()
    if kind == "second":
        if not S:
            return lambda t: standard_hooks(t).values()
        return lambda t, _s=S: second_kind_hooks(t, _s).values()
    if kind == "forest":
        return lambda f: forest_hooks(f).values()
    raise ValueError(kind)


def _table(n: int, triple: Callable[[int], tuple]) -> list:
    return [None] + [triple(h) for h in range(1, n + 1)]


def _lhs_thm1_1(m: int, n: int, form: str) -> tuple[Poly, int]:
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if form == "eq1_6":
        table = _table(n, lambda h: (h, 1, h))
    elif form == "eq1_7":
        table = _table(n, lambda h: (m * h - 1, 1 - h, (m - 1) * h))
    else:
        raise ValueError(f"unknown form {form!r}")
    return _poly_sum(enumerate_trees(m, n), _hook_values("first"), table, n)


def _lhs_thm1_2(m: int, S: Iterable[int], n: int, form: str) -> tuple[Poly, int]:
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    s_set = frozenset(S)
    if not s_set <= frozenset(range(1, m + 1)):
        raise ValueError(f"S = {sorted(s_set)} is not a subset of [1..{m}]")
    s = len(s_set)
    if form == "eq5_1a":
        table = _table(n, lambda h: (h, 1, h))
    elif form == "eq5_1b":
        table = _table(n, lambda h: ((m - s) * h + 1, 1 - h, (m - s + 1) * h))
    else:
        raise ValueError(f"unknown form {form!r}")
    return _poly_sum(enumerate_trees(m + 1, n), _hook_values("second", s_set), table, n)


def _lhs_forests(n: int, form: str) -> tuple[Poly, int]:
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if form == "eq1_3a":
        table = _table(n, lambda h: (h, 1, h))
    elif form == "eq1_3b":
        table = _table(n, lambda h: (2 * h - 1, 1 - h, h))
    else:
        raise ValueError(f"unknown form {form!r}")
    return _poly_sum(enumerate_forests(n), _hook_values("forest"), table, n)


def lhs_thm1_1(m: int, n: int, form: str) -> Poly:
    """Enumerated left side of the first-kind identities ("eq1_6" or "eq1_7")."""
    return _lhs_thm1_1(m, n, form)[0]


def lhs_thm1_2(m: int, S: Iterable[int], n: int, form: str) -> Poly:
    """Enumerated left side of the second-kind identities ("eq5_1a" or "eq5_1b").

    Sums over complete (m+1)-ary trees; m = 0 (unary paths) is supported
    for use as the inner series of the composition check.
    """
    return _lhs_thm1_2(m, S, n, form)[0]


def lhs_forests(n: int, form: str) -> Poly:
    """Enumerated left side of the plane-forest identities ("eq1_3a" or "eq1_3b")."""
    return _lhs_forests(n, form)[0]


def _evaluate(spec: IdentitySpec) -> tuple[Poly | Fraction, Poly | Fraction, int, bool]:
    """Build (lhs, rhs, trees_visited, cross_ok) for a validated spec."""
    f, m, n, S = spec.family, spec.m, spec.n, spec.S
    cross_ok = True

    if f == "postnikov":
        table = _table(n, lambda h: (h + 1, h))
        total, visited = _numeric_sum(enumerate_trees(2, n), _hook_values("standard"), table)
        lhs = Fraction(math.factorial(n), 2**n) * total
        rhs: Poly | Fraction = Fraction((n + 1) ** (n - 1))
    elif f == "lascoux_1_1":
        table = _table(n, lambda h: (h + 1, 1 - h, 2 * h))
        lhs, visited = _poly_sum(enumerate_trees(2, n), _hook_values("standard"), table, n)
        rhs = rhs_binomial_poly(1, n)
    elif f == "duliu_1_2a":
        table = _table(n, lambda h: (m * h + 1, 1 - h, (m + 1) * h))
        lhs, visited = _poly_sum(enumerate_trees(m + 1, n), _hook_values("standard"), table, n)
        rhs = rhs_binomial_poly(m, n)
    elif f == "duliu_1_2b":
        table = _table(n, lambda h: (h, 1, h))
        lhs, visited = _poly_sum(enumerate_trees(m + 1, n), _hook_values("standard"), table, n)
        rhs = rhs_product_poly("thm1_2_eq51a", m, n, 0)
    elif f == "forest_1_3a":
        lhs, visited = _lhs_forests(n, "eq1_3a")
        rhs = rhs_product_poly("thm1_1_eq16", 2, n)
    elif f == "forest_1_3b":
        lhs, visited = _lhs_forests(n, "eq1_3b")
        rhs = rhs_binomial_poly(2, n)
    elif f == "thm1_1_eq1_6":
        lhs, visited = _lhs_thm1_1(m, n, "eq1_6")
        rhs = rhs_product_poly("thm1_1_eq16", m, n)
    elif f == "thm1_1_eq1_7":
        lhs, visited = _lhs_thm1_1(m, n, "eq1_7")
        rhs = rhs_binomial_poly(m, n)
    elif f == "thm1_2_eq5_1a":
        lhs, visited = _lhs_thm1_2(m, S, n, "eq5_1a")
        rhs = rhs_product_poly("thm1_2_eq51a", m, n, len(S))
    elif f == "thm1_2_eq5_1b":
        lhs, visited = _lhs_thm1_2(m, S, n, "eq5_1b")
        rhs = rhs_binomial_poly(m, n)
    elif f == "cor1_first":
        table = _table(n, lambda h: (1, h))
        lhs, visited = _numeric_sum(enumerate_trees(m, n), _hook_values("first"), table)
        rhs = m**n * rhs_binomial_poly(m, n)(Fraction(1, m))
        cross_ok = rhs == rhs_product_poly("thm1_1_eq16", m, n)(0)
    elif f == "cor1_second":
        table = _table(n, lambda h: (m * h - 1, h))
        lhs, visited = _numeric_sum(enumerate_trees(m, n), _hook_values("first"), table)
        rhs = Fraction((m - 1) ** n, math.factorial(n)) * Fraction(m * n + 1) ** (n - 1)
        cross_ok = rhs == (-1) ** n * rhs_product_poly("thm1_1_eq16", m, n)(-m)
    elif f == "cor2_first":
        s = len(S)
        table = _table(n, lambda h: ((m - s - 1) * h + 1, h))
        lhs, visited = _numeric_sum(
            enumerate_trees(m + 1, n), _hook_values("second", S), table
        )
        rhs = rhs_binomial_poly(m, n)(m - s)
        cross_ok = rhs == rhs_product_poly("thm1_2_eq51a", m, n, s)(m - s - 1)
    elif f == "cor2_second":
        s = len(S)
        table = _table(n, lambda h: ((m - s) * h + 1, h))
        lhs, visited = _numeric_sum(
            enumerate_trees(m + 1, n), _hook_values("second", S), table
        )
        rhs = Fraction((m - s + 1) ** n, math.factorial(n)) * Fraction(m * n + 1) ** (n - 1)
        cross_ok = rhs == rhs_product_poly("thm1_2_eq51a", m, n, s)(m - s)
    elif f == "cor2_third":
        table = _table(n, lambda h: (1, 1 - h, h))
        lhs, visited = _poly_sum(
            enumerate_trees(m + 1, n), _hook_values("second", S), table, n
        )
        rhs = rhs_binomial_poly(m, n)
    else:  # pragma: no cover - guarded by _validated
        raise ValueError(f)

    return lhs, rhs, visited, cross_ok


def check_identity(spec: IdentitySpec, *, _corrupt_rhs: bool = False) -> VerificationReport:
    """Verify one identity instance exactly.

    ``_corrupt_rhs`` is a test hook that perturbs the closed form by +1 so
    negative controls can confirm failures surface as ``passed=False``.
    """
    spec = _validated(spec)
    start = perf_counter()
    lhs, rhs, visited, cross_ok = _evaluate(spec)
    if _corrupt_rhs:
        rhs = rhs + 1
    passed = cross_ok and lhs == rhs
    note = None if cross_ok else "closed-form cross-check mismatch"
    return VerificationReport(spec, lhs, rhs, passed, visited, perf_counter() - start, note)


def check_postnikov_lascoux(n: int, form: str) -> VerificationReport:
    """Check the two binary-tree precursors: "postnikov" (numeric) or "eq1_1"."""
    if form == "postnikov":
        return check_identity(IdentitySpec("postnikov", n=n))
    if form == "eq1_1":
        return check_identity(IdentitySpec("lascoux_1_1", n=n))
    raise ValueError(f"unknown form {form!r}")


def check_recurrence_thm1_1(m: int, n: int) -> VerificationReport:
    """Compare direct enumeration with the root-composition convolution.

    The recurrence computes the degree-n sum from the n smaller sums: group
    the root compositions (i_1, ..., i_m) of n-1 by j = i_1 + ... + i_(m-1);
    the root vertex contributes the eq1_7 factor at hook value j+1, the
    first m-1 subtrees contribute [t^j] of the (m-1)-th power of the partial
    generating series, the last subtree the sum at size n-1-j.  The base of
    the recurrence route is the constant 1, so the two routes share nothing
    but the closed forms they are checked against elsewhere.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    start = perf_counter()
    memo: list[Poly] = [ONE]
    for k in range(1, n + 1):
        partial = PolySeries(memo, order=k - 1)
        conv = partial ** (m - 1)
        acc = ZERO
        for j in range(k):
            hook = j + 1
            root = Poly(
                [Fraction(1 - hook, (m - 1) * hook), Fraction(m * hook - 1, (m - 1) * hook)]
            )
            acc = acc + root * conv.coeffs[j] * memo[k - 1 - j]
        memo.append(acc)
    direct, visited = _lhs_thm1_1(m, n, "eq1_7")
    spec = IdentitySpec("recurrence_thm1_1", m=m, n=n)
    passed = direct == memo[n]
    return VerificationReport(spec, direct, memo[n], passed, visited, perf_counter() - start)


def check_gf_relations(m: int, s: int, order: int) -> VerificationReport:
    """Check the truncated-series relations satisfied by the second-kind sums.

    With A(t) the generating series of the eq5_1a sums for pruned positions
    {1..s} on arity-(m+1) trees, two facts are verified through the given
    truncation order:

    * the differential relation
      A' = (x+1) A^(m+1) + ((m+1)x + s) t A^m A'  (residual zero), and
    * the composition A(t) = B(t * A(t)^s) where B is the s = 0 series of
      the smaller arity m-s+1 (trivially the identity when s = 0).

    The report's lhs/rhs are the concatenated coefficient tuples of the two
    sides, so ``passed`` remains an exact lhs == rhs comparison.
    """
    if m < 1 or not 0 <= s <= m:
        raise ValueError(f"need m >= 1 and 0 <= s <= m, got m={m}, s={s}")
    if order < 0:
        raise ValueError(f"need order >= 0, got {order}")
    start = perf_counter()
    s_rep = frozenset(range(1, s + 1))
    visited = 0
    a_coeffs = []
    d_coeffs = []
    for k in range(order + 1):
        poly, seen = _lhs_thm1_2(m, s_rep, k, "eq5_1a")
        a_coeffs.append(poly)
        visited += seen
        poly, seen = _lhs_thm1_2(m - s, frozenset(), k, "eq5_1a")
        d_coeffs.append(poly)
        visited += seen
    series_a = PolySeries(a_coeffs, order=order)
    series_b = PolySeries(d_coeffs, order=order)

    lhs_parts: tuple[Poly, ...] = ()
    rhs_parts: tuple[Poly, ...] = ()
    if order >= 1:
        deriv = series_a.derivative()
        ode_rhs = (series_a.truncate(order - 1) ** (m + 1)) * Poly([1, 1])
        if order >= 2:
            inner = (series_a.truncate(order - 2) ** m) * deriv.truncate(order - 2)
            ode_rhs = ode_rhs + inner.mul_t() * Poly([s, m + 1])
        lhs_parts += deriv.coeffs
        rhs_parts += ode_rhs.coeffs

    composed = series_compose_scaled(series_b, series_a, s)
    lhs_parts += series_a.coeffs
    rhs_parts += composed.coeffs

    spec = IdentitySpec("gf_relations", m=m, n=order, S=s_rep)
    passed = lhs_parts == rhs_parts
    return VerificationReport(
        spec, lhs_parts, rhs_parts, passed, visited, perf_counter() - start
    )


@dataclass(frozen=True)
class SuiteResult:
    """All reports of one grid run plus the aggregate outcome."""

    reports: tuple[VerificationReport, ...]
    elapsed: float

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.reports if r.passed)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def all_passed(self) -> bool:
        return self.failed == 0


def _run_one(args: tuple[IdentitySpec, bool]) -> VerificationReport:
    spec, corrupt = args
    try:
        return check_identity(spec, _corrupt_rhs=corrupt)
    except ValueError as exc:
        return VerificationReport(spec, None, None, False, 0, 0.0, note=str(exc))


def verify_suite(
    grid: Iterable[IdentitySpec], jobs: int = 1, _corrupt_rhs: bool = False
) -> SuiteResult:
    """Run ``check_identity`` over a grid, optionally across processes.

    Results are deterministic and independent of the worker count: exact
    arithmetic makes the reductions order-free and reports come back in
    grid order.  A spec with invalid parameters yields a failed report
    carrying the error text instead of aborting the run.
    """
    specs = [(spec, _corrupt_rhs) for spec in grid]
    start = perf_counter()
    if jobs > 1 and len(specs) > 1:
        with multiprocessing.Pool(jobs) as pool:
            reports = pool.map(_run_one, specs)
    else:
        reports = [_run_one(item) for item in specs]
    return SuiteResult(tuple(reports), perf_counter() - start)


def ns_within_budget(arity: int, cap: int) -> list[int]:
    """All n (from 0) whose universe size count_trees(arity, n) stays <= cap."""
    ns = []
    n = 0
    while count_trees(arity, n) <= cap:
        ns.append(n)
        n += 1
    return ns


def all_position_subsets(m: int) -> list[frozenset[int]]:
    """Every subset of {1..m}, smallest first, then lexicographic."""
    subsets = [frozenset()]
    for p in range(1, m + 1):
        subsets += [s | {p} for s in subsets]
    return sorted(subsets, key=lambda s: (len(s), sorted(s)))


def grid_theorem1(cap: int = 200_000, ms: Sequence[int] = (2, 3, 4, 5)) -> list[IdentitySpec]:
    """Both first-kind families over every n within the universe budget."""
    return [
        IdentitySpec(family, m=m, n=n)
        for m in ms
        for n in ns_within_budget(m, cap)
        for family in ("thm1_1_eq1_6", "thm1_1_eq1_7")
    ]


def grid_theorem2(cap: int = 50_000, ms: Sequence[int] = (1, 2, 3)) -> list[IdentitySpec]:
    """Both second-kind families, every subset S, every n within budget."""
    return [
        IdentitySpec(family, m=m, n=n, S=subset)
        for m in ms
        for subset in all_position_subsets(m)
        for n in ns_within_budget(m + 1, cap)
        for family in ("thm1_2_eq5_1a", "thm1_2_eq5_1b")
    ]


def grid_priors(cap: int = 50_000) -> list[IdentitySpec]:
    """The precursor identities: numeric, binomial, standard-hook, forest."""
    grid = [IdentitySpec("postnikov", n=n) for n in range(1, 10)]
    grid += [IdentitySpec("lascoux_1_1", n=n) for n in range(10)]
    grid += [
        IdentitySpec(family, m=m, n=n)
        for m in (1, 2, 3)
        for n in ns_within_budget(m + 1, cap)
        for family in ("duliu_1_2a", "duliu_1_2b")
    ]
    grid += [
        IdentitySpec(family, n=n)
        for n in range(9)
        for family in ("forest_1_3a", "forest_1_3b")
    ]
    return grid


def grid_corollaries() -> list[IdentitySpec]:
    """The five special-value identities on their acceptance ranges."""
    grid = [
        IdentitySpec(family, m=m, n=n)
        for m in (2, 3, 4)
        for n in range(7)
        for family in ("cor1_first", "cor1_second")
    ]
    grid += [
        IdentitySpec(family, m=m, n=n, S=subset)
        for m in (1, 2, 3)
        for subset in all_position_subsets(m)
        for n in range(6)
        for family in ("cor2_first", "cor2_second")
    ]
    grid += [IdentitySpec("cor2_third", m=m, n=n) for m in (1, 2, 3) for n in range(6)]
    return grid


def default_grid() -> list[IdentitySpec]:
    """The full identity grid used by the acceptance suite."""
    return grid_theorem1() + grid_theorem2() + grid_priors() + grid_corollaries()
