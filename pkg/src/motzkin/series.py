"""Exact truncated power series in z over Q[u, s, t].

Coefficients are sparse polynomials in three markers: u tracks the end level
of a walk, s the number of DU factors (valleys) and t the number of UD
factors (peaks).  Series are dense lists of such polynomials indexed by the
power of z, each carrying a truncation order; arithmetic results carry the
minimum order of the operands.  All arithmetic is exact (ints and Fractions,
never floats).

The second half of the module is the generating-function pipeline: the
discriminant square root W, the power-series root r2 of the kernel quadratic
(and z*r1 for its companion root), boundary values at u=0 obtained by an
exact linear solve, and the assembled closed forms for walks grouped by the
layer their last step put them in (F after an up step, G after a horizontal
step or at the start, H after a down step, K after a left-down step).
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from . import _speedups
from .paths import Variant

Rat = Union[int, Fraction]

DEFAULT_ORDER = 24

# exponent triples (e_u, e_s, e_t) are packed into one int so that monomial
# products become integer additions
_SHIFT = 21
_MASK = (1 << _SHIFT) - 1
_EXP_LIMIT = 1 << _SHIFT


def default_order() -> int:
    """Truncation order used by the CLI: MOTZKIN_ORDER env var or 24."""
    text = os.environ.get("MOTZKIN_ORDER")
    if text is None:
        return DEFAULT_ORDER
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"MOTZKIN_ORDER must be an integer, got {text!r}") from None
    if value < 0:
        raise ValueError("MOTZKIN_ORDER must be nonnegative")
    return value


def _pack(eu: int, es: int, et: int) -> int:
    if not (0 <= eu < _EXP_LIMIT and 0 <= es < _EXP_LIMIT and 0 <= et < _EXP_LIMIT):
        raise ValueError(f"exponent out of range: {(eu, es, et)}")
    return eu | (es << _SHIFT) | (et << (2 * _SHIFT))


def _unpack(key: int) -> tuple[int, int, int]:
    return key & _MASK, (key >> _SHIFT) & _MASK, key >> (2 * _SHIFT)


def _canon(value: Rat) -> Rat:
    """Canonical coefficient: plain int whenever the denominator is 1."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, int):
        return value
    raise TypeError(f"coefficients must be int or Fraction, got {type(value)!r}")


def _term_sort_key(exps: tuple[int, int, int]):
    # ascending total degree, then descending lexicographic with u > s > t
    eu, es, et = exps
    return (eu + es + et, -eu, -es, -et)


class Poly:
    """Sparse polynomial in u, s, t with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[tuple[int, int, int], Rat]] = ()):
        acc: dict[int, Rat] = {}
        for (eu, es, et), coeff in terms:
            key = _pack(eu, es, et)
            acc[key] = acc.get(key, 0) + coeff
        self._terms = _speedups.clean_terms(acc)

    @classmethod
    def _raw(cls, terms: dict[int, Rat]) -> "Poly":
        """Wrap an already-clean term dict without copying."""
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Poly":
        return cls._raw({0: 1})

    @classmethod
    def constant(cls, value: Rat) -> "Poly":
        value = _canon(value)
        return cls._raw({0: value} if value else {})

    @classmethod
    def monomial(cls, coeff: Rat, eu: int = 0, es: int = 0, et: int = 0) -> "Poly":
        coeff = _canon(coeff)
        return cls._raw({_pack(eu, es, et): coeff} if coeff else {})

    def is_zero(self) -> bool:
        return not self._terms

    def as_constant(self) -> Optional[Fraction]:
        """The value if the polynomial is constant (including zero), else None."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and 0 in self._terms:
            return Fraction(self._terms[0])
        return None

    def coefficient(self, eu: int = 0, es: int = 0, et: int = 0) -> Fraction:
        return Fraction(self._terms.get(_pack(eu, es, et), 0))

    def terms(self) -> list[tuple[tuple[int, int, int], Rat]]:
        """Terms in display order (degree, then u > s > t descending)."""
        items = [(_unpack(key), value) for key, value in self._terms.items()]
        items.sort(key=lambda kv: _term_sort_key(kv[0]))
        return items

    def degrees(self) -> tuple[int, int, int]:
        """Maximum exponent of u, s, t (0, 0, 0 for the zero polynomial)."""
        du = ds = dt = 0
        for key in self._terms:
            eu, es, et = _unpack(key)
            du = max(du, eu)
            ds = max(ds, es)
            dt = max(dt, et)
        return du, ds, dt

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for key, value in other._terms.items():
            acc[key] = acc.get(key, 0) + value
        return Poly._raw(_speedups.clean_terms(acc))

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        if not other._terms:
            return self
        acc = dict(self._terms)
        for key, value in other._terms.items():
            acc[key] = acc.get(key, 0) - value
        return Poly._raw(_speedups.clean_terms(acc))

    def __neg__(self) -> "Poly":
        return Poly._raw({k: -v for k, v in self._terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        ta, tb = self._terms, other._terms
        if not ta or not tb:
            return Poly.zero()
        if len(ta) == 1:
            ((ka, va),) = ta.items()
            return Poly._raw({ka + kb: _canon(va * vb) for kb, vb in tb.items()})
        if len(tb) == 1:
            ((kb, vb),) = tb.items()
            return Poly._raw({ka + kb: _canon(va * vb) for ka, va in ta.items()})
        return Poly._raw(_speedups.poly_mul(ta, tb))

    def scale(self, value: Rat) -> "Poly":
        value = _canon(value)
        if value == 0:
            return Poly.zero()
        if value == 1:
            return self
        return Poly._raw({k: _canon(v * value) for k, v in self._terms.items()})

    def divide_u(self, k: int = 1) -> "Poly":
        """Divide by u^k; every term must have u-exponent >= k."""
        out: dict[int, Rat] = {}
        for key, value in self._terms.items():
            eu, es, et = _unpack(key)
            if eu < k:
                raise ValueError(
                    f"cannot divide {self} by u^{k}: term with u^{eu}"
                )
            out[_pack(eu - k, es, et)] = value
        return Poly._raw(out)

    def substitute(
        self,
        u: Optional[Rat] = None,
        sigma: Optional[Rat] = None,
        tau: Optional[Rat] = None,
    ) -> "Poly":
        """Evaluate some of the variables at exact rational values."""
        if u is None and sigma is None and tau is None:
            return self
        acc: dict[int, Rat] = {}
        for key, value in self._terms.items():
            eu, es, et = _unpack(key)
            if u is not None:
                value = value * u**eu
                eu = 0
            if sigma is not None:
                value = value * sigma**es
                es = 0
            if tau is not None:
                value = value * tau**et
                et = 0
            new_key = _pack(eu, es, et)
            acc[new_key] = acc.get(new_key, 0) + value
        return Poly._raw(_speedups.clean_terms(acc))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, value in self.terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(("u", "s", "t"), exps)
                if e
            )
            negative = value < 0
            mag = -value if negative else value
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


_U = Poly.monomial(1, eu=1)
_SIGMA = Poly.monomial(1, es=1)
_TAU = Poly.monomial(1, et=1)


class Series:
    """Truncated power series in z with Poly coefficients."""

    __slots__ = ("_coeffs", "order")

    def __init__(self, coeffs: Iterable[Poly], order: Optional[int] = None):
        coeffs = tuple(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients, got {len(coeffs)}")
        self._coeffs = coeffs
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls((Poly.zero(),) * (order + 1), order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls((Poly.one(),) + (Poly.zero(),) * order, order)

    @classmethod
    def z(cls, order: int) -> "Series":
        return cls.from_terms(order, [(1, 0, 0, 0, 1)])

    @classmethod
    def constant_poly(cls, poly: Poly, order: int) -> "Series":
        return cls((poly,) + (Poly.zero(),) * order, order)

    @classmethod
    def from_terms(
        cls, order: int, terms: Iterable[tuple[int, int, int, int, Rat]]
    ) -> "Series":
        """Build from (z power, e_u, e_s, e_t, coeff) tuples.

        Terms beyond the truncation order are dropped, which is what
        truncation means.
        """
        buckets: list[dict[int, Rat]] = [{} for _ in range(order + 1)]
        for zpow, eu, es, et, coeff in terms:
            if zpow < 0:
                raise ValueError("z powers must be nonnegative")
            if zpow > order:
                continue
            key = _pack(eu, es, et)
            bucket = buckets[zpow]
            bucket[key] = bucket.get(key, 0) + coeff
        return cls(
            tuple(Poly._raw(_speedups.clean_terms(b)) for b in buckets), order
        )

    def coefficient(self, n: int) -> Poly:
        if not 0 <= n <= self.order:
            raise IndexError(f"z^{n} is beyond the truncation order {self.order}")
        return self._coeffs[n]

    def coefficients(self) -> tuple[Poly, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self._coeffs)

    def prefix(self, order: int) -> "Series":
        """Truncate to a lower (or equal) order."""
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        if order == self.order:
            return self
        return Series(self._coeffs[: order + 1], order)

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        return Series(
            tuple(
                a + b
                for a, b in zip(self._coeffs[: order + 1], other._coeffs[: order + 1])
            ),
            order,
        )

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        return Series(
            tuple(
                a - b
                for a, b in zip(self._coeffs[: order + 1], other._coeffs[: order + 1])
            ),
            order,
        )

    def __neg__(self) -> "Series":
        return Series(tuple(-p for p in self._coeffs), self.order)

    def __mul__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        a = self._coeffs
        b = other._coeffs
        out = []
        for n in range(order + 1):
            acc: dict[int, Rat] = {}
            for k in range(n + 1):
                ta = a[k]._terms
                if not ta:
                    continue
                tb = b[n - k]._terms
                if not tb:
                    continue
                _speedups.poly_acc(acc, ta, tb)
            out.append(Poly._raw(_speedups.clean_terms(acc)))
        return Series(tuple(out), order)

    def __truediv__(self, other: "Series") -> "Series":
        return self.div(other)

    def div(self, other: "Series") -> "Series":
        """Divide by a series whose constant term is a nonzero rational."""
        if not isinstance(other, Series):
            raise TypeError("can only divide by another Series")
        const = other._coeffs[0].as_constant()
        if const is None or const == 0:
            raise ValueError(
                "series division needs a nonzero rational constant term, got "
                f"{other._coeffs[0]}"
            )
        inv = 1 / const
        order = min(self.order, other.order)
        b = other._coeffs
        quot: list[Poly] = []
        for n in range(order + 1):
            acc = dict(self._coeffs[n]._terms)
            for k in range(n):
                tq = quot[k]._terms
                if not tq:
                    continue
                tb = b[n - k]._terms
                if not tb:
                    continue
                _speedups.poly_acc(acc, tq, tb, True)
            quot.append(Poly._raw(_speedups.clean_terms(acc)).scale(inv))
        return Series(tuple(quot), order)

    def sqrt(self) -> "Series":
        """Square root of a series with constant term exactly 1."""
        if self._coeffs[0] != Poly.one():
            raise ValueError(
                f"series sqrt needs constant term 1, got {self._coeffs[0]}"
            )
        half = Fraction(1, 2)
        root: list[Poly] = [Poly.one()]
        for n in range(1, self.order + 1):
            acc = dict(self._coeffs[n]._terms)
            for k in range(1, n):
                _speedups.poly_acc(acc, root[k]._terms, root[n - k]._terms, True)
            root.append(Poly._raw(_speedups.clean_terms(acc)).scale(half))
        return Series(tuple(root), self.order)

    def scale(self, value: Rat) -> "Series":
        return Series(tuple(p.scale(value) for p in self._coeffs), self.order)

    def mul_poly(self, poly: Poly) -> "Series":
        """Multiply every coefficient by a fixed polynomial."""
        return Series(tuple(p * poly for p in self._coeffs), self.order)

    def shift_up(self, k: int = 1) -> "Series":
        """Multiply by z^k; the result is valid (and longer) by k orders."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return Series((Poly.zero(),) * k + self._coeffs, self.order + k)

    def shift_down(self, k: int = 1) -> "Series":
        """Divide by z^k; the low-order coefficients must vanish."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k > self.order:
            raise ValueError(f"cannot shift order {self.order} down by {k}")
        for n in range(k):
            if not self._coeffs[n].is_zero():
                raise ValueError(
                    f"cannot divide by z^{k}: nonzero coefficient at z^{n}"
                )
        return Series(self._coeffs[k:], self.order - k)

    def div_u(self, k: int = 1) -> "Series":
        """Divide every coefficient by u^k (each must be divisible)."""
        return Series(tuple(p.divide_u(k) for p in self._coeffs), self.order)

    def specialize(
        self,
        u: Optional[Rat] = None,
        sigma: Optional[Rat] = None,
        tau: Optional[Rat] = None,
    ) -> "Series":
        """Substitute exact rational values for some of u, s, t."""
        return Series(
            tuple(p.substitute(u=u, sigma=sigma, tau=tau) for p in self._coeffs),
            self.order,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    __hash__ = None  # type: ignore[assignment]

    def to_text(self) -> str:
        return "\n".join(f"z^{n}: {p}" for n, p in enumerate(self._coeffs))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [
                [[list(exps), str(value)] for exps, value in p.terms()]
                for p in self._coeffs
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Series":
        order = data["order"]
        coeffs = []
        for entries in data["coeffs"]:
            coeffs.append(
                Poly(
                    (tuple(exps), Fraction(value))  # type: ignore[misc]
                    for exps, value in entries
                )
            )
        return cls(tuple(coeffs), order)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Series(order={self.order})"


def specialize(
    series: Series,
    u: Optional[Rat] = None,
    sigma: Optional[Rat] = None,
    tau: Optional[Rat] = None,
) -> Series:
    """Module-level alias for Series.specialize."""
    return series.specialize(u=u, sigma=sigma, tau=tau)


# ---------------------------------------------------------------------------
# kernel pipeline
#
# Grouping length-counted walks by the layer of their last step gives linear
# recurrences whose generating function F+G+H(+K) satisfies a quadratic in a
# catalytic variable u.  Writing the quadratic as z*u^2 - P*u + Q, the
# discriminant is W^2 = P^2 - 4*z*Q and the power-series root is
# r2 = (P - W)/(2z); the companion root r1 has a 1/z pole, so z*r1 =
# (P + W)/2 is the object that appears in denominators (its constant term
# is 1, making z*u - z*r1 invertible as a series).

_PLAIN_CUBIC_TAIL = (
    (2, 0, 0, 0, 1),
    (2, 0, 1, 1, -1),
    (3, 0, 1, 1, 1),
    (3, 0, 1, 0, -1),
    (3, 0, 0, 0, 1),
    (3, 0, 0, 1, -1),
)

# the skew discriminant, written out term by term
_SKEW_RADICAND_TERMS = (
    (0, 0, 0, 0, 1),
    (2, 0, 1, 1, -2),
    (3, 0, 1, 1, 4),
    (4, 0, 1, 1, -2),
    (2, 0, 0, 0, -3),
    (4, 0, 0, 1, 2),
    (6, 0, 0, 2, 1),
    (6, 0, 0, 1, -4),
    (5, 0, 0, 1, -4),
    (6, 0, 2, 0, 1),
    (6, 0, 1, 0, -4),
    (5, 0, 1, 0, -4),
    (6, 0, 0, 0, 4),
    (5, 0, 0, 0, 8),
    (6, 0, 1, 1, 6),
    (6, 0, 1, 2, -2),
    (5, 0, 1, 2, 2),
    (6, 0, 2, 1, -2),
    (5, 0, 2, 1, 2),
    (6, 0, 2, 2, 1),
    (5, 0, 2, 2, -2),
    (4, 0, 2, 2, 1),
    (3, 0, 0, 1, -2),
    (4, 0, 1, 0, 2),
    (3, 0, 1, 0, -2),
    (1, 0, 0, 0, -2),
)

_SKEW_KERNEL_SUM_TERMS = (
    (0, 0, 0, 0, 1),
    (1, 0, 0, 0, -1),
    (2, 0, 0, 0, 2),
    (3, 0, 0, 0, 2),
    (3, 0, 1, 0, -1),
    (3, 0, 0, 1, -1),
    (2, 0, 1, 1, -1),
    (3, 0, 1, 1, 1),
)


def _plain_cubic(z1_coeff: int, order: int) -> Series:
    terms = ((0, 0, 0, 0, 1), (1, 0, 0, 0, z1_coeff)) + _PLAIN_CUBIC_TAIL
    return Series.from_terms(order, terms)


def kernel_radicand(variant: Variant, order: int) -> Series:
    """The polynomial under the square root of the discriminant."""
    if variant is Variant.PLAIN:
        return _plain_cubic(-3, order) * _plain_cubic(1, order)
    return Series.from_terms(order, _SKEW_RADICAND_TERMS)


def kernel_sum(variant: Variant, order: int) -> Series:
    """P = z*r1 + z*r2, the linear coefficient of the kernel quadratic."""
    if variant is Variant.PLAIN:
        return _plain_cubic(-1, order)
    return Series.from_terms(order, _SKEW_KERNEL_SUM_TERMS)


@functools.lru_cache(maxsize=None)
def _kernel_parts(variant: Variant, order: int) -> tuple[Series, Series, Series]:
    # one extra order so that (P - W)/(2z) is exact at the requested order
    ext = order + 1
    w_ext = kernel_radicand(variant, ext).sqrt()
    p_ext = kernel_sum(variant, ext)
    r2 = (p_ext - w_ext).shift_down(1).scale(Fraction(1, 2))
    zr1 = (p_ext + w_ext).scale(Fraction(1, 2)).prefix(order)
    return w_ext.prefix(order), r2, zr1


def kernel_w(variant: Variant, order: int) -> Series:
    """The square root W of the discriminant, with constant term +1."""
    return _kernel_parts(variant, order)[0]


def kernel_r2(variant: Variant, order: int) -> Series:
    """The kernel root that is a power series: (P - W)/(2z)."""
    return _kernel_parts(variant, order)[1]


def kernel_zr1(variant: Variant, order: int) -> Series:
    """z times the companion root: (P + W)/2, constant term 1."""
    return _kernel_parts(variant, order)[2]


@dataclass(frozen=True)
class BoundaryValues:
    """The u=0 values of the layer generating functions."""

    variant: Variant
    order: int
    g0: Series
    h0: Series
    k0: Optional[Series]


def _solve_series_system(
    matrix: list[list[Series]], rhs: list[Series]
) -> list[Series]:
    """Gauss-Jordan over the series ring; every pivot must be a unit."""
    n = len(rhs)
    rows = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = rows[col][col]
        const = pivot._coeffs[0].as_constant()
        if const is None or const == 0:
            raise ValueError(
                "boundary system is singular at this truncation order: pivot "
                f"constant term {pivot._coeffs[0]}"
            )
        rows[col] = [entry / pivot for entry in rows[col]]
        for i in range(n):
            if i == col:
                continue
            factor = rows[i][col]
            if factor.is_zero():
                continue
            rows[i] = [
                entry - factor * other for entry, other in zip(rows[i], rows[col])
            ]
    return [rows[i][n] for i in range(n)]


@functools.lru_cache(maxsize=None)
def boundary_values(variant: Variant, order: int) -> BoundaryValues:
    """Solve the linear system pinning down the u=0 layer values.

    Setting u=0 in the closed forms and using that the power-series root r2
    kills the kernel turns the divided closed forms into linear equations for
    G(0), H(0) (and K(0) in the skew variant) over the series ring.
    """
    zr1 = kernel_zr1(variant, order)
    if variant is Variant.PLAIN:
        r2 = kernel_r2(variant, order)
        # z^3*(s - 1) couples G(0) and H(0) in the G equation
        coupler = Series.from_terms(order, [(3, 0, 1, 0, 1), (3, 0, 0, 0, -1)])
        z2 = Series.from_terms(order, [(2, 0, 0, 0, 1)])
        a11 = -zr1 - coupler
        a12 = -coupler
        b1 = r2.shift_up(1) + Series.from_terms(
            order, [(2, 0, 1, 1, 1), (2, 0, 0, 0, -1), (0, 0, 0, 0, -1)]
        )
        a21 = z2
        a22 = -zr1 + z2
        b2 = Series.from_terms(order, [(2, 0, 0, 0, 1), (2, 0, 0, 1, -1)])
        g0, h0 = _solve_series_system([[a11, a12], [a21, a22]], [b1, b2])
        return BoundaryValues(variant, order, g0, h0, None)
    # Skew.  In (G0, H0, K0) coordinates every available equation multiplies
    # H0 by z, so the system determinant has no constant term and plain
    # elimination stalls.  Changing coordinates to C0 = G0+H0+K0 makes the
    # system triangular with unit pivots:
    #   1. C0 from the kernel-vanishing remainder: substituting the series
    #      root r2 into the quadratic for the grand total forces
    #      C0*(-2 + s*t*z^2 + r2*(2z + 2z^2 - s*z^2))
    #        = (r2/z)*(z*r2 - 1 + s*t*z^2 - t*z^2)        (pivot -2)
    #   2. G0 = 1 + z*C0, the level-0 layer recursion
    #   3. K0 from the u=0 instance of the K closed form:
    #      z*r1*K0 = z^2*(C0 - 1)                         (pivot 1)
    #   4. H0 = C0 - G0 - K0
    ext = order + 1
    r2e = kernel_r2(variant, ext)
    r2_over_z = r2e.shift_down(1)
    one = Series.one(order)
    bracket = (
        r2e.shift_up(1).prefix(order)
        - one
        + Series.from_terms(order, [(2, 0, 1, 1, 1), (2, 0, 0, 1, -1)])
    )
    pivot = Series.from_terms(
        order, [(0, 0, 0, 0, -2), (2, 0, 1, 1, 1)]
    ) + r2e.prefix(order) * Series.from_terms(
        order, [(1, 0, 0, 0, 2), (2, 0, 0, 0, 2), (2, 0, 1, 0, -1)]
    )
    c0 = (r2_over_z * bracket) / pivot
    g0 = one + c0.shift_up(1).prefix(order)
    k0 = (c0 - one).shift_up(2).prefix(order) / zr1
    h0 = c0 - g0 - k0
    return BoundaryValues(variant, order, g0, h0, k0)


@dataclass(frozen=True)
class ClosedForm:
    """The layer generating functions and their total, divided by the kernel.

    f: walks whose last step was U; g: empty walk or last step H; h: last
    step D; k: last step L (skew only, None otherwise).  total is the
    grand generating function of all walks.
    """

    variant: Variant
    order: int
    f: Series
    g: Series
    h: Series
    k: Optional[Series]
    total: Series


@functools.lru_cache(maxsize=None)
def closed_form(variant: Variant, order: int) -> ClosedForm:
    """Assemble the layer generating functions from the kernel data.

    Every layer function is a numerator over the common denominator
    z*u - z*r1, whose constant term is -1, so the division is exact series
    arithmetic with no radicals left over.
    """
    r2 = kernel_r2(variant, order)
    zr1 = kernel_zr1(variant, order)
    bnd = boundary_values(variant, order)
    u_series = Series.constant_poly(_U, order)
    z1 = Series.z(order)
    z_sigma = Series.from_terms(order, [(1, 0, 1, 0, 1)])
    one = Series.one(order)
    tau_series = Series.constant_poly(_TAU, order)
    denom = Series.from_terms(order, [(1, 1, 0, 0, 1)]) - zr1

    if variant is Variant.PLAIN:
        s0 = bnd.g0 + bnd.h0
        s0_sigma = s0.mul_poly(_SIGMA)
        inner_f = (
            r2
            + u_series
            + s0_sigma.shift_up(2)
            - s0.shift_up(2)
            + z_sigma
            - z1
            - s0_sigma.shift_up(1)
        )
        num_f = -inner_f.shift_up(1)
        num_g = (
            r2.shift_up(1)
            + s0_sigma.shift_up(3)
            - s0.shift_up(3)
            + Series.from_terms(
                order,
                [(2, 0, 1, 1, 1), (2, 0, 0, 0, -1), (0, 0, 0, 0, -1), (1, 1, 0, 0, 1)],
            )
        )
        num_h = -(bnd.h0 + tau_series - one + bnd.g0).shift_up(2)
        f = num_f / denom
        g = num_g / denom
        h = num_h / denom
        return ClosedForm(variant, order, f, g, h, None, f + g + h)

    c0 = bnd.g0 + bnd.h0 + bnd.k0
    c0_sigma = c0.mul_poly(_SIGMA)
    inner_f = (
        r2
        - bnd.k0.shift_up(2).scale(2)
        + c0_sigma.shift_up(2)
        - c0_sigma.shift_up(1)
        - bnd.g0.shift_up(2).scale(2)
        - bnd.h0.shift_up(2).scale(2)
        + z_sigma
        - z1.scale(2)
        + u_series
    )
    num_f = -inner_f.shift_up(1)
    num_g = (
        r2.shift_up(1)
        + c0.mul_poly(_SIGMA - Poly.constant(2)).shift_up(3)
        + Series.from_terms(
            order,
            [(2, 0, 1, 1, 1), (2, 0, 0, 0, -2), (0, 0, 0, 0, -1), (1, 1, 0, 0, 1)],
        )
    )
    num_k = -(c0 - one).shift_up(2)
    f = num_f / denom
    g = num_g / denom
    k = num_k / denom
    # the layer recursion gives H = K + tau*z*F/u directly (F is divisible
    # by u: a walk ending with an up step sits at level >= 1)
    h = k + f.div_u().shift_up(1).prefix(order).mul_poly(_TAU)
    return ClosedForm(variant, order, f, g, h, k, f + g + h + k)


def plain_printed_boundary_identities(
    order: int,
) -> list[tuple[str, Series, Series]]:
    """Cross-checks for the plain u=0 boundary values in radical form.

    Each entry is (name, lhs, rhs) where lhs is the solved boundary value
    multiplied by the closed form's denominator and rhs is the closed form's
    numerator (which involves W), so equality avoids dividing by a non-unit.
    """
    w = kernel_w(Variant.PLAIN, order)
    bnd = boundary_values(Variant.PLAIN, order)
    den_g = Series.from_terms(
        order, [(1, 0, 1, 0, -2), (2, 0, 1, 0, 2), (2, 0, 0, 0, -2)]
    )
    rhs_g = w + Series.from_terms(
        order,
        [
            (2, 0, 1, 1, 1),
            (3, 0, 1, 1, -1),
            (3, 0, 0, 1, 1),
            (3, 0, 1, 0, 1),
            (3, 0, 0, 0, -1),
            (2, 0, 0, 0, -1),
            (1, 0, 0, 0, 1),
            (1, 0, 1, 0, -2),
            (0, 0, 0, 0, -1),
        ],
    )
    den_h = Series.from_terms(
        order, [(2, 0, 1, 0, 2), (3, 0, 0, 0, 2), (3, 0, 1, 0, -2)]
    )
    rhs_h = (
        w.shift_up(1)
        - w
        + Series.from_terms(
            order,
            [
                (2, 0, 1, 1, -1),
                (3, 0, 1, 1, 2),
                (3, 0, 0, 1, -1),
                (4, 0, 1, 1, -1),
                (4, 0, 0, 1, 1),
                (4, 0, 1, 0, 1),
                (4, 0, 0, 0, -1),
                (3, 0, 1, 0, -1),
                (1, 0, 0, 0, -2),
                (0, 0, 0, 0, 1),
            ],
        )
    )
    den_gh = Series.from_terms(
        order, [(3, 0, 0, 0, -2), (2, 0, 1, 0, -2), (3, 0, 1, 0, 2)]
    )
    rhs_gh = w + Series.from_terms(
        order,
        [
            (0, 0, 0, 0, -1),
            (3, 0, 0, 0, -1),
            (2, 0, 1, 1, 1),
            (3, 0, 1, 1, -1),
            (3, 0, 0, 1, 1),
            (1, 0, 0, 0, 1),
            (2, 0, 0, 0, 1),
            (2, 0, 1, 0, -2),
            (3, 0, 1, 0, 1),
        ],
    )
    return [
        ("G(0)", bnd.g0 * den_g, rhs_g),
        ("H(0)", bnd.h0 * den_h, rhs_h),
        ("G(0)+H(0)", (bnd.g0 + bnd.h0) * den_gh, rhs_gh),
    ]
