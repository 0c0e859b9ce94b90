"""Exact truncated power series over two-variable Laurent polynomials.

The series variable z marks semilength; coefficient polynomials use x
for a path statistic and y for the flaw count.  All arithmetic is exact
integer arithmetic, and every generating function here is built either
by fixed-point iteration of its defining equation or by explicit
composition, then compared coefficientwise.

The identity suite re-derives each published relation between these
series in multiplication form (no division by formal non-units) and
reports the first offending coefficient on failure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .enumeration import StatKind, count_table


class SeriesDomainError(ValueError):
    """Operation applied to a series outside its domain."""


class XYPoly:
    """Laurent polynomial in x and y: {(x_exp, y_exp): coeff}, no zeros."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        merged: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                if c:
                    acc = merged.get(key, 0) + c
                    if acc:
                        merged[key] = acc
                    elif key in merged:
                        del merged[key]
        self.terms = merged

    @classmethod
    def constant(cls, c: int) -> "XYPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int, x_exp: int = 0, y_exp: int = 0) -> "XYPoly":
        return cls({(x_exp, y_exp): c})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, x_exp: int, y_exp: int = 0) -> int:
        return self.terms.get((x_exp, y_exp), 0)

    def _coerce(self, other):
        if isinstance(other, int):
            return XYPoly.constant(other)
        if isinstance(other, XYPoly):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in o.terms.items():
            acc = out.get(key, 0) + c
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return XYPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return XYPoly({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for (ax, ay), a in self.terms.items():
            for (bx, by), b in o.terms.items():
                key = (ax + bx, ay + by)
                acc = out.get(key, 0) + a * b
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return XYPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def map_exponents(self, fn: Callable[[int, int], tuple]) -> "XYPoly":
        return XYPoly([(fn(kx, ky), c) for (kx, ky), c in self.terms.items()])

    def halved(self) -> "XYPoly":
        for key, c in self.terms.items():
            if c % 2:
                raise SeriesDomainError(f"odd coefficient {c} at {key}")
        return XYPoly({key: c // 2 for key, c in self.terms.items()})

    def has_negative_exponent(self) -> bool:
        return any(kx < 0 or ky < 0 for kx, ky in self.terms)

    def __repr__(self):
        return f"XYPoly({self.terms!r})"


ONE = XYPoly.constant(1)
X = XYPoly.monomial(1, 1, 0)
Y = XYPoly.monomial(1, 0, 1)
X_INV = XYPoly.monomial(1, -1, 0)


class ZSeries:
    """Power series in z truncated at a fixed order, exact coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: Optional[int] = None):
        cs = [c if isinstance(c, XYPoly) else XYPoly.constant(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise SeriesDomainError("truncation order must be nonnegative")
        cs = cs[: order + 1]
        cs.extend(XYPoly() for _ in range(order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, value, order: int) -> "ZSeries":
        return cls([value], order)

    def coeff(self, n: int) -> XYPoly:
        if 0 <= n <= self.order:
            return self.coeffs[n]
        raise SeriesDomainError(f"order {n} beyond truncation {self.order}")

    def _coerce(self, other):
        if isinstance(other, (int, XYPoly)):
            return ZSeries.constant(other, self.order)
        if isinstance(other, ZSeries):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        order = min(self.order, o.order)
        return ZSeries(
            [self.coeffs[n] + o.coeffs[n] for n in range(order + 1)], order
        )

    __radd__ = __add__

    def __neg__(self):
        return ZSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, XYPoly)):
            return ZSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, ZSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = []
        for n in range(order + 1):
            acc = XYPoly()
            for i in range(n + 1):
                a = self.coeffs[i]
                b = other.coeffs[n - i]
                if not (a.is_zero() or b.is_zero()):
                    acc = acc + a * b
            out.append(acc)
        return ZSeries(out, order)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.order == o.order and all(
            a == b for a, b in zip(self.coeffs, o.coeffs)
        )

    def shift_z(self, j: int) -> "ZSeries":
        """Multiply by z**j; the truncation order is unchanged."""
        if j < 0:
            raise SeriesDomainError("negative z shift")
        return ZSeries([XYPoly()] * j + list(self.coeffs), self.order)

    def truncate(self, order: int) -> "ZSeries":
        if order > self.order:
            raise SeriesDomainError("cannot extend a truncated series")
        return ZSeries(list(self.coeffs[: order + 1]), order)

    def inverse(self) -> "ZSeries":
        """Multiplicative inverse; requires constant coefficient 1."""
        if self.coeffs[0] != ONE:
            raise SeriesDomainError("inverse requires unit constant term")
        inv = [ONE]
        for n in range(1, self.order + 1):
            acc = XYPoly()
            for j in range(1, n + 1):
                a = self.coeffs[j]
                if not a.is_zero():
                    acc = acc + a * inv[n - j]
            inv.append(-acc)
        return ZSeries(inv, self.order)

    def sqrt(self) -> "ZSeries":
        """Square root with constant coefficient 1; each z-coefficient is
        fixed by the lower ones and must come out integral."""
        if self.coeffs[0] != ONE:
            raise SeriesDomainError("sqrt requires unit constant term")
        root = [ONE]
        for n in range(1, self.order + 1):
            acc = self.coeffs[n]
            for i in range(1, n):
                acc = acc - root[i] * root[n - i]
            root.append(acc.halved())
        return ZSeries(root, self.order)

    def substitute_yz(self) -> "ZSeries":
        """Substitute z -> y*z, tagging each z**n coefficient with y**n."""
        return ZSeries(
            [
                c.map_exponents(lambda kx, ky, n=n: (kx, ky + n))
                for n, c in enumerate(self.coeffs)
            ],
            self.order,
        )

    def map_coeffs(self, fn: Callable[[int, XYPoly], XYPoly]) -> "ZSeries":
        return ZSeries([fn(n, c) for n, c in enumerate(self.coeffs)], self.order)

    def y_slice(self, m: int) -> "ZSeries":
        """Extract the y**m part as a series with x-only coefficients."""
        return self.map_coeffs(
            lambda n, c: XYPoly(
                {(kx, 0): v for (kx, ky), v in c.terms.items() if ky == m}
            )
        )

    def has_negative_exponent(self) -> bool:
        return any(c.has_negative_exponent() for c in self.coeffs)

    def __repr__(self):
        return f"ZSeries(order={self.order}, coeffs={list(self.coeffs)!r})"


def first_mismatch(got: ZSeries, expected: ZSeries) -> Optional[dict]:
    """Locate the lowest differing coefficient between two series."""
    for n in range(min(got.order, expected.order) + 1):
        a, b = got.coeffs[n], expected.coeffs[n]
        if a != b:
            keys = sorted(set(a.terms) | set(b.terms))
            for kx, ky in keys:
                if a.coeff(kx, ky) != b.coeff(kx, ky):
                    return {
                        "n": n,
                        "xexp": kx,
                        "yexp": ky,
                        "expected": str(b.coeff(kx, ky)),
                        "got": str(a.coeff(kx, ky)),
                    }
    return None


# --- the generating functions ------------------------------------------------

def catalan_peak_series(order: int) -> ZSeries:
    """Catalan paths counted by semilength (z) and peaks (x).

    Fixed point of F = 1 + z*F*(x + F - 1); each sweep pins one more
    z-coefficient, so order+1 sweeps suffice.
    """
    f = ZSeries.constant(1, order)
    for _ in range(order + 1):
        f = 1 + (f * (f + (X - 1))).shift_z(1)
    return f


def catalan_valley_series(order: int) -> ZSeries:
    """Catalan paths counted by semilength (z) and valleys (x).

    Fixed point of F = 1 + z + z*(F - 1)*(1 + x*F).
    """
    f = ZSeries.constant(1, order)
    for _ in range(order + 1):
        f = 1 + ((f - 1) * (f * X + 1) + 1).shift_z(1)
    return f


def catalan_double_ascent_series(order: int) -> ZSeries:
    """Catalan paths counted by semilength (z) and double ascents (x).

    Fixed point of F = 1 + z*F / (1 - x*z*F).
    """
    f = ZSeries.constant(1, order)
    for _ in range(order + 1):
        f = 1 + (f * (1 - (f * X).shift_z(1)).inverse()).shift_z(1)
    return f


def peak_discriminant(order: int) -> ZSeries:
    """The quadratic 1 - 2(1+x)z + (1-x)^2 z^2 whose square root closes
    the peak series."""
    one_minus_x = ONE - X
    return ZSeries([ONE, (ONE + X) * (-2), one_minus_x * one_minus_x], order)


@lru_cache(maxsize=None)
def flawed_peak_series(order: int) -> ZSeries:
    """All paths counted by peaks (x), flaws (y) and semilength (z):
    V(x, yz) / (1 - z*(x + P(x,z) - 1)*V(x, yz)) with P, V the Catalan
    peak and valley series."""
    p0 = catalan_peak_series(order)
    v0y = catalan_valley_series(order).substitute_yz()
    denom = 1 - ((p0 + (X - 1)) * v0y).shift_z(1)
    return v0y * denom.inverse()


@lru_cache(maxsize=None)
def flawed_double_ascent_series(order: int) -> ZSeries:
    """All paths counted by double ascents (x), flaws (y) and semilength
    (z): A(x,z)*A(x,yz) / (1 - x*(A(x,z)-1)*(A(x,yz)-1))."""
    a0 = catalan_double_ascent_series(order)
    a0y = a0.substitute_yz()
    denom = 1 - (a0 - 1) * (a0y - 1) * X
    return a0 * a0y * denom.inverse()


def oracle_coefficient_poly(n: int, stat: StatKind) -> XYPoly:
    """The brute-force z**n coefficient: sum of count * x**k * y**m."""
    table = count_table(n, stat)
    terms = {}
    for m, row in table.entries.items():
        for k, c in row.items():
            terms[(k, m)] = c
    return XYPoly(terms)


# --- identity suite -----------------------------------------------------------

@dataclass
class IdentityReport:
    identity: str
    status: str
    first_failure: Optional[dict]

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "status": self.status,
            "first_failure": self.first_failure,
        }


def _report(identity: str, got: ZSeries, expected: ZSeries) -> IdentityReport:
    failure = first_mismatch(got, expected)
    return IdentityReport(
        identity=identity,
        status="pass" if failure is None else "fail",
        first_failure=failure,
    )


def run_identity_suite(
    order: int, corrupt_peak_order: Optional[int] = None
) -> list[IdentityReport]:
    """Check the eight series identities (a)-(h) at one truncation order.

    (a) squared closed form of the Catalan peak series against its
        discriminant;
    (b) closed form of the full peak/flaw series via both square roots;
    (c) reciprocity: the (k, m) -> (n-k, n-m) coefficient symmetry;
    (d) the one-flaw slice equals (1 + z - xz)*P - 1;
    (e) the pair-sum kernel: (1-y)*R = y*a(x,z) - a(x,yz) for the
        auxiliary series a built from the peak and valley series;
    (f) the division-free double-ascent kernel identity;
    (g) (y-1)*A = y*A(x,yz) - A(x,z) for the full double-ascent series;
    (h) x*V(x,z) = x + P(x,z) - 1 linking the valley and peak series.

    ``corrupt_peak_order`` bumps one coefficient of the Catalan peak
    series first; it exists so negative-control tests can confirm the
    suite actually bites.
    """
    p0 = catalan_peak_series(order)
    if corrupt_peak_order is not None:
        bumped = list(p0.coeffs)
        bumped[corrupt_peak_order] = bumped[corrupt_peak_order] + 1
        p0 = ZSeries(bumped, order)
    v0 = catalan_valley_series(order)
    a0 = catalan_double_ascent_series(order)
    v0y = v0.substitute_yz()
    p0y = p0.substitute_yz()
    a0y = a0.substitute_yz()
    disc = peak_discriminant(order)
    disc_y = disc.substitute_yz()

    # the full trivariate series, rebuilt from the (possibly corrupted) p0
    peak_full = v0y * (1 - ((p0 + (X - 1)) * v0y).shift_z(1)).inverse()
    ascent_full = a0 * a0y * (1 - (a0 - 1) * (a0y - 1) * X).inverse()

    reports = []

    # (a) (2z*P - 1 - (1-x)z)^2 == discriminant
    lhs_root = (p0 * 2).shift_z(1) - 1 - ZSeries.constant(ONE - X, order).shift_z(1)
    reports.append(_report("a", lhs_root * lhs_root, disc))

    # (b) P_full * (sqrt(disc) + sqrt(disc_y) + (1-x)(1-y)z) == 2
    radical_sum = (
        disc.sqrt()
        + disc_y.sqrt()
        + ZSeries.constant((ONE - X) * (ONE - Y), order).shift_z(1)
    )
    reports.append(
        _report("b", peak_full * radical_sum, ZSeries.constant(2, order))
    )

    # (c) reciprocity as an exponent remap
    remapped = peak_full.map_coeffs(
        lambda n, c: c.map_exponents(lambda kx, ky, n=n: (n - kx, n - ky))
    )
    reports.append(_report("c", remapped, peak_full))

    # (d) one-flaw slice == (1 + z - xz)*P - 1
    one_flaw = peak_full.y_slice(1)
    rhs = p0 + (p0 * (ONE - X)).shift_z(1) - 1
    reports.append(_report("d", one_flaw, rhs))

    # (e) (1-y)*R == y*a(x,z) - a(x,yz)
    alpha = (
        p0 * (X_INV + 1)
        - (p0 * (X_INV - 1)).shift_z(1)
        - p0 * v0.inverse()
        - ZSeries.constant(X_INV, order)
    )
    pair_sum = (
        peak_full
        + peak_full.map_coeffs(
            lambda n, c: c.map_exponents(lambda kx, ky, n=n: (kx, n - ky))
        )
        + 2
        - v0
        - v0y
        - p0
        - p0y
    )
    reports.append(
        _report("e", pair_sum * (ONE - Y), alpha * Y - alpha.substitute_yz())
    )

    # (f) z*(1 - x*(A-1)*(Ay-1))*(y*Ay - A) == z*(y-1)*A*Ay
    kernel = 1 - (a0 - 1) * (a0y - 1) * X
    reports.append(
        _report(
            "f",
            (kernel * (a0y * Y - a0)).shift_z(1),
            (a0 * a0y * (Y - ONE)).shift_z(1),
        )
    )

    # (g) (y-1)*A_full == y*A(x,yz) - A(x,z)
    reports.append(
        _report("g", ascent_full * (Y - ONE), a0y * Y - a0)
    )

    # (h) x*V == x + P - 1
    reports.append(_report("h", v0 * X, p0 + (X - 1)))

    return reports


def identity_suite_json(reports: list[IdentityReport]) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=2)
