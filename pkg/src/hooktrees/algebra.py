"""Exact univariate polynomials and truncated power series.

Coefficients are ``fractions.Fraction`` throughout, so every operation is
exact; there is no floating point anywhere in this package.  ``Poly`` is a
dense polynomial in the statistic variable x, ``PolySeries`` a power series
in the size variable t truncated at a fixed order, with ``Poly``
coefficients.

On top of the two value types the module provides the closed forms used as
right-hand sides by the identity checks (``rhs_binomial_poly``,
``rhs_product_poly``), and coefficient-recurrence solvers for two
first-order series equations::

    W' = x*W^(b+1) + a*t*W^b*W'                 (solve_omega / closed_omega)
    F' = x*F^(b+s+1) + (a+s*x)*t*F^(b+s)*F'     (solve_phi / closed_phi)

where the prime is d/dt.  The second one is the fixed point
F(t) = W(t*F(t)^s) of the first, which ``series_compose_scaled`` can verify
directly.

All values are immutable; every function is pure and thread-safe.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of x**i.  The representation is
    canonical: no trailing zero coefficients (the zero polynomial has an
    empty coefficient tuple and degree -1).  Instances are immutable.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, point: Scalar) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                if mag == 1:
                    body = var
                elif mag.denominator == 1:
                    body = f"{mag}{var}"
                else:
                    body = f"({mag}){var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(value) -> Poly | None:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly([value])
    return None


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


class PolySeries:
    """Power series in t truncated at a fixed order, with Poly coefficients.

    ``coeffs[n]`` is the coefficient of t**n; there are exactly
    ``order + 1`` of them.  Binary operations require both operands to
    share the same truncation order and never consult anything above it.
    """

    __slots__ = ("order", "coeffs")

    order: int
    coeffs: tuple[Poly, ...]

    def __init__(self, coeffs: Iterable[Union[Poly, Scalar]] = (), order: int | None = None):
        polys = [c if isinstance(c, Poly) else Poly([c]) for c in coeffs]
        if order is None:
            if not polys:
                raise ValueError("empty series needs an explicit order")
            order = len(polys) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        if len(polys) > order + 1:
            raise ValueError(f"{len(polys)} coefficients exceed order {order}")
        polys.extend([ZERO] * (order + 1 - len(polys)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(polys))

    def __setattr__(self, name, value):
        raise AttributeError("PolySeries is immutable")

    def __reduce__(self):
        return (PolySeries, (self.coeffs, self.order))

    @classmethod
    def zero(cls, order: int) -> "PolySeries":
        return cls([], order=order)

    @classmethod
    def constant(cls, value: Union[Poly, Scalar], order: int) -> "PolySeries":
        return cls([value], order=order)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def _match(self, other: "PolySeries"):
        if self.order != other.order:
            raise ValueError(f"series order mismatch: {self.order} vs {other.order}")

    def __add__(self, other) -> "PolySeries":
        if not isinstance(other, PolySeries):
            return NotImplemented
        self._match(other)
        return PolySeries([a + b for a, b in zip(self.coeffs, other.coeffs)], order=self.order)

    def __sub__(self, other) -> "PolySeries":
        if not isinstance(other, PolySeries):
            return NotImplemented
        self._match(other)
        return PolySeries([a - b for a, b in zip(self.coeffs, other.coeffs)], order=self.order)

    def __mul__(self, other) -> "PolySeries":
        if isinstance(other, (Poly, int, Fraction)):
            return PolySeries([c * other for c in self.coeffs], order=self.order)
        if not isinstance(other, PolySeries):
            return NotImplemented
        self._match(other)
        out = [ZERO] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return PolySeries(out, order=self.order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PolySeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series exponent must be a nonnegative integer")
        result = PolySeries.constant(ONE, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self) -> "PolySeries":
        """d/dt; the result is truncated one order lower."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 truncation")
        return PolySeries(
            [self.coeffs[n] * n for n in range(1, self.order + 1)], order=self.order - 1
        )

    def integrate(self) -> "PolySeries":
        """Antiderivative in t with constant term 0; order rises by one."""
        out = [ZERO]
        out.extend(self.coeffs[n] * Fraction(1, n + 1) for n in range(self.order + 1))
        return PolySeries(out, order=self.order + 1)

    def mul_t(self) -> "PolySeries":
        """Multiply by t; order rises by one."""
        return PolySeries((ZERO,) + self.coeffs, order=self.order + 1)

    def truncate(self, order: int) -> "PolySeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return PolySeries(self.coeffs[: order + 1], order=order)

    def __repr__(self):
        return f"PolySeries({[str(c) for c in self.coeffs]}, order={self.order})"


def series_compose_scaled(outer: PolySeries, inner: PolySeries, s: int) -> PolySeries:
    """Compose ``outer(t * inner(t)**s)``, truncated to the common order.

    The substituted argument has zero constant term by construction, so the
    composition of truncations is well-defined.  Raises ``ValueError`` on
    order mismatch or negative s.
    """
    if s < 0:
        raise ValueError("composition power s must be nonnegative")
    outer._match(inner)
    order = outer.order
    arg = (inner**s).mul_t().truncate(order)
    result = PolySeries.zero(order)
    for k in range(order, -1, -1):
        result = result * arg + PolySeries.constant(outer.coeffs[k], order)
    return result


def rhs_binomial_poly(m: int, n: int) -> Poly:
    """The closed form (1/(mn+1)) * C((mn+1)*x, n) as a polynomial in x.

    C(y, n) is the falling-factorial binomial y*(y-1)*...*(y-n+1)/n!.
    Degree exactly n for n >= 1; the constant 1 for n = 0.
    """
    if m < 1 or n < 0:
        raise ValueError(f"need m >= 1 and n >= 0, got m={m}, n={n}")
    top = m * n + 1
    prod = ONE
    for j in range(n):
        prod = prod * Poly([-j, top])
    return prod * Fraction(1, top * math.factorial(n))


PRODUCT_FAMILIES = ("thm1_1_eq16", "thm1_2_eq51a")


def rhs_product_poly(family: str, m: int, n: int, s: int = 0) -> Poly:
    """Product-of-linear-factors closed forms, one per identity family.

    thm1_1_eq16:   ((x+1)/n!) * prod_{i=1..n-1} ((mn+1-i)(x+1) - (m-1)i),
                   for m >= 2 (s is ignored).
    thm1_2_eq51a:  ((x+1)/n!) * prod_{i=1..n-1} ((mn+i+1)(x+1) - (m-s+1)i),
                   for m >= 1 and 0 <= s <= m.

    Both return the constant 1 for n = 0.
    """
    if family == "thm1_1_eq16":
        if m < 2:
            raise ValueError(f"thm1_1_eq16 needs m >= 2, got {m}")
    elif family == "thm1_2_eq51a":
        if m < 1 or not 0 <= s <= m:
            raise ValueError(f"thm1_2_eq51a needs m >= 1 and 0 <= s <= m, got m={m}, s={s}")
    else:
        raise ValueError(f"unknown product family {family!r}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n == 0:
        return ONE
    prod = Poly([1, 1])
    for i in range(1, n):
        if family == "thm1_1_eq16":
            k = m * n + 1 - i
            prod = prod * Poly([k - (m - 1) * i, k])
        else:
            k = m * n + i + 1
            prod = prod * Poly([k - (m - s + 1) * i, k])
    return prod * Fraction(1, math.factorial(n))


def closed_omega(a: int, b: int, n: int) -> Poly:
    """Coefficient n of the solved series W: (x/n!) * prod_{i=1..n-1} (a*i + b*(n-i)*x + x)."""
    if n < 1:
        raise ValueError(f"closed form defined for n >= 1, got {n}")
    prod = X
    for i in range(1, n):
        prod = prod * Poly([a * i, b * (n - i) + 1])
    return prod * Fraction(1, math.factorial(n))


def closed_phi(a: int, b: int, s: int, n: int) -> Poly:
    """Coefficient n of the fixed-point series: (x/n!) * prod_{i=1..n-1} (a*i + b*(n-i)*x + (s*n+1)*x)."""
    if n < 1:
        raise ValueError(f"closed form defined for n >= 1, got {n}")
    prod = X
    for i in range(1, n):
        prod = prod * Poly([a * i, b * (n - i) + s * n + 1])
    return prod * Fraction(1, math.factorial(n))


def solve_omega(a: int, b: int, order: int) -> PolySeries:
    """Solve W' = x*W^(b+1) + a*t*W^b*W' with W = 1 + O(t), coefficient by coefficient.

    Matching the coefficient of t^(n-1) gives the linear recurrence

        n*W_n = x*[t^(n-1)] W^(b+1) + a*sum_{j<=n-2} ([t^j] W^b) * (n-1-j) * W_(n-1-j)

    whose right side only involves W_0 .. W_(n-1).
    """
    if a < 1 or b < 1:
        raise ValueError(f"need positive integers a, b; got a={a}, b={b}")
    if order < 0:
        raise ValueError(f"need order >= 0, got {order}")
    coeffs: list[Poly] = [ONE]
    for n in range(1, order + 1):
        partial = PolySeries(coeffs, order=n - 1)
        pow_b = partial**b
        pow_b1 = pow_b * partial
        rhs = X * pow_b1.coeffs[n - 1]
        acc = ZERO
        for j in range(n - 1):
            acc = acc + pow_b.coeffs[j] * ((n - 1 - j) * coeffs[n - 1 - j])
        rhs = rhs + a * acc
        coeffs.append(rhs * Fraction(1, n))
    return PolySeries(coeffs, order=order)


def solve_phi(a: int, b: int, s: int, order: int) -> PolySeries:
    """Solve F' = x*F^(b+s+1) + (a+s*x)*t*F^(b+s)*F' with F = 1 + O(t).

    Same recurrence shape as ``solve_omega`` with exponent b+s and the
    polynomial multiplier a + s*x; s = 0 degenerates to ``solve_omega``.
    """
    if a < 1 or b < 1 or s < 0:
        raise ValueError(f"need a, b >= 1 and s >= 0; got a={a}, b={b}, s={s}")
    if order < 0:
        raise ValueError(f"need order >= 0, got {order}")
    mult = Poly([a, s])
    coeffs: list[Poly] = [ONE]
    for n in range(1, order + 1):
        partial = PolySeries(coeffs, order=n - 1)
        pow_b = partial ** (b + s)
        pow_b1 = pow_b * partial
        rhs = X * pow_b1.coeffs[n - 1]
        acc = ZERO
        for j in range(n - 1):
            acc = acc + pow_b.coeffs[j] * ((n - 1 - j) * coeffs[n - 1 - j])
        rhs = rhs + mult * acc
        coeffs.append(rhs * Fraction(1, n))
    return PolySeries(coeffs, order=order)
