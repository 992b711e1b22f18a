"""Truncated power series and exact (Laurent) polynomials.

A :class:`PowerSeries` stores coefficients c_0..c_N together with the
truncation order N ("precision"). Coefficients above N are unknown, not
zero, and every operation returns the lowest precision its inputs support:
arithmetic and composition truncate to the minimum of the operands'
precisions, and dividing by x^n costs n orders.

:class:`Polynomial` is exact and unbounded. It is also the one legal outer
factor of a composition whose inner series has a nonzero constant term;
a series outer factor requires the inner constant term to vanish.

:class:`LaurentPolynomial` extends a polynomial by a (possibly negative)
base exponent. It exists to carry the shifted q-Pochhammer products used
by the iterate recurrence checks.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    FieldMismatch,
    NonzeroInnerConstantTerm,
    NotDivisibleByXn,
    NotInvertible,
    ParseError,
    PrecisionTooLow,
    ZeroAtNegativeExponent,
)
from .fields import FIELDS, Field, QQ, field_pow


def _require_same_field(a, b):
    if a.field is not b.field:
        raise FieldMismatch(f"mixed fields {a.field} and {b.field}")


class PowerSeries:
    """Coefficients c_0..c_N of a formal power series, truncated at N."""

    __slots__ = ("field", "_coeffs")

    def __init__(self, coeffs=(), precision=None, field: Field = QQ):
        cs = [field.coerce(c) for c in coeffs]
        if precision is None:
            precision = max(len(cs) - 1, 0)
        if precision < 0:
            raise ValueError("precision must be >= 0")
        del cs[precision + 1:]
        zero = field.zero
        cs.extend([zero] * (precision + 1 - len(cs)))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def zero(cls, precision: int, field: Field = QQ) -> "PowerSeries":
        return cls((), precision, field)

    @classmethod
    def x(cls, precision: int, field: Field = QQ) -> "PowerSeries":
        return cls((0, 1), precision, field)

    @property
    def precision(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, j: int):
        if not 0 <= j <= self.precision:
            raise IndexError(
                f"coefficient {j} outside known range 0..{self.precision}"
            )
        return self._coeffs[j]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (
            self.field is other.field
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.field.name, self._coeffs))

    def __repr__(self):
        body = ", ".join(self.field.format(c) for c in self._coeffs)
        return f"PowerSeries([{body}], field={self.field})"

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def truncate(self, precision: int) -> "PowerSeries":
        """Forget coefficients above the given (not larger) precision."""
        if precision > self.precision:
            raise PrecisionTooLow(
                f"cannot extend precision {self.precision} to {precision}"
            )
        return PowerSeries(self._coeffs[: precision + 1], precision, self.field)

    def map_coefficients(self, fn, field: Field | None = None) -> "PowerSeries":
        field = field or self.field
        return PowerSeries([fn(c) for c in self._coeffs], self.precision, field)

    # -- linear structure ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        _require_same_field(self, other)
        n = min(self.precision, other.precision)
        return PowerSeries(
            [self._coeffs[i] + other._coeffs[i] for i in range(n + 1)],
            n,
            self.field,
        )

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return PowerSeries([-c for c in self._coeffs], self.precision, self.field)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            _require_same_field(self, other)
            n = min(self.precision, other.precision)
            a, b = self._coeffs, other._coeffs
            out = [self.field.zero] * (n + 1)
            for i in range(n + 1):
                ai = a[i]
                if not ai:
                    continue
                for j in range(n + 1 - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
            return PowerSeries(out, n, self.field)
        c = self.field.coerce(other)
        return PowerSeries(
            [c * ci for ci in self._coeffs], self.precision, self.field
        )

    def __rmul__(self, other):
        return self * other

    # -- the operations the solvers are built from ---------------------------

    def scale_arg(self, c) -> "PowerSeries":
        """The series f(c*x): coefficient j becomes c^j * f_j."""
        c = self.field.coerce(c)
        out = []
        ck = self.field.one
        for fj in self._coeffs:
            out.append(ck * fj)
            ck = ck * c
        return PowerSeries(out, self.precision, self.field)

    def div_xn(self, n: int) -> "PowerSeries":
        """Shift coefficients down by n; every dropped one must be zero."""
        if n < 0:
            raise ValueError("shift must be nonnegative")
        if n == 0:
            return self
        if n > self.precision:
            raise PrecisionTooLow(
                f"cannot divide precision-{self.precision} series by x^{n}"
            )
        for m in range(n):
            if self._coeffs[m]:
                raise NotDivisibleByXn(
                    f"coefficient {m} is {self.field.format(self._coeffs[m])}, not 0"
                )
        return PowerSeries(self._coeffs[n:], self.precision - n, self.field)

    def compose(self, g: "PowerSeries") -> "PowerSeries":
        """f o g for a series outer factor; needs g(0) = 0."""
        if not isinstance(g, PowerSeries):
            raise TypeError("inner factor must be a PowerSeries")
        _require_same_field(self, g)
        if g._coeffs[0]:
            raise NonzeroInnerConstantTerm(
                "series composition needs a zero inner constant term"
            )
        n = min(self.precision, g.precision)
        g = g.truncate(n)
        acc = [self.field.zero] * (n + 1)
        acc[0] = self._coeffs[0]
        power = PowerSeries((1,), n, self.field)
        # g^l has valuation >= l, so powers above the precision cannot
        # contribute below it
        for l in range(1, n + 1):
            power = power * g
            fl = self._coeffs[l]
            if fl:
                for i, ci in enumerate(power._coeffs):
                    if ci:
                        acc[i] += fl * ci
        return PowerSeries(acc, n, self.field)

    def revert(self) -> "PowerSeries":
        """Compositional inverse g with f(g(x)) = g(f(x)) = x.

        Exists iff f_0 = 0 and f_1 != 0. Found by matching coefficients of
        f(g(x)) = x one order at a time, which pins g_j uniquely because the
        only appearance of g_j at order j is through the linear term f_1 g_j.
        """
        if self._coeffs[0] or self.precision < 1 or not self._coeffs[1]:
            raise NotInvertible("need f(0) = 0 and a nonzero linear coefficient")
        n = self.precision
        f1 = self._coeffs[1]
        g = [self.field.zero, self.field.one / f1]
        for j in range(2, n + 1):
            partial = PowerSeries(g, j, self.field)
            e = self.truncate(j).compose(partial)
            g.append(-e[j] / f1)
        return PowerSeries(g, n, self.field)


class Polynomial:
    """Exact dense polynomial over a coefficient field."""

    __slots__ = ("field", "_coeffs")

    def __init__(self, coeffs=(), field: Field = QQ):
        cs = [field.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, j: int):
        if j < 0:
            raise IndexError("negative exponent in a polynomial")
        if j >= len(self._coeffs):
            return self.field.zero
        return self._coeffs[j]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field is other.field and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.field.name, self._coeffs))

    def __repr__(self):
        body = ", ".join(self.field.format(c) for c in self._coeffs) or "0"
        return f"Polynomial([{body}], field={self.field})"

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        _require_same_field(self, other)
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(
            [
                (self._coeffs[i] if i < len(self._coeffs) else 0)
                + (other._coeffs[i] if i < len(other._coeffs) else 0)
                for i in range(n)
            ],
            self.field,
        )

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Polynomial([-c for c in self._coeffs], self.field)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            _require_same_field(self, other)
            if self.is_zero() or other.is_zero():
                return Polynomial((), self.field)
            out = [self.field.zero] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, ai in enumerate(self._coeffs):
                if not ai:
                    continue
                for j, bj in enumerate(other._coeffs):
                    out[i + j] += ai * bj
            return Polynomial(out, self.field)
        c = self.field.coerce(other)
        return Polynomial([c * ci for ci in self._coeffs], self.field)

    def __rmul__(self, other):
        return self * other

    def __call__(self, v):
        """Exact evaluation by Horner's rule; v is coerced into the field."""
        v = self.field.coerce(v)
        acc = self.field.zero
        for c in reversed(self._coeffs):
            acc = acc * v + c
        return acc

    def as_series(self, precision: int) -> PowerSeries:
        return PowerSeries(self._coeffs, precision, self.field)

    def compose(self, g: PowerSeries) -> PowerSeries:
        """p o g; a polynomial outer factor accepts any inner series."""
        if not isinstance(g, PowerSeries):
            raise TypeError("inner factor must be a PowerSeries")
        _require_same_field(self, g)
        n = g.precision
        acc = PowerSeries.zero(n, self.field)
        power = PowerSeries((1,), n, self.field)
        for l, cl in enumerate(self._coeffs):
            if l:
                power = power * g
            if cl:
                acc = acc + cl * power
        return acc


class LaurentPolynomial:
    """Finite coefficient sequence on exponents low..high, low may be < 0."""

    __slots__ = ("field", "_coeffs", "_low")

    def __init__(self, coeffs=(), low: int = 0, field: Field = QQ):
        cs = [field.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        while cs and not cs[0]:
            cs.pop(0)
            low += 1
        if not cs:
            low = 0
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_coeffs", tuple(cs))
        object.__setattr__(self, "_low", low)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    @property
    def low(self) -> int:
        return self._low

    @property
    def high(self) -> int:
        return self._low + len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, exponent: int):
        """Coefficient at an exponent, zero outside the support."""
        i = exponent - self._low
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return self.field.zero

    def eval(self, v):
        v = self.field.coerce(v)
        if self._low < 0 and not v:
            raise ZeroAtNegativeExponent(
                "cannot evaluate negative exponents at 0"
            )
        acc = self.field.zero
        for c in reversed(self._coeffs):
            acc = acc * v + c
        return acc * field_pow(v, self._low) if self._coeffs else acc

    __call__ = eval

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return (
            self.field is other.field
            and self._low == other._low
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.field.name, self._low, self._coeffs))

    def __repr__(self):
        body = ", ".join(self.field.format(c) for c in self._coeffs) or "0"
        return f"LaurentPolynomial([{body}], low={self._low}, field={self.field})"


# ---------------------------------------------------------------------------
# JSON encodings
#
# series:     {"field": "Q"|"Q(q)", "precision": N, "coeffs": ["c0", ...]}
# polynomial: {"field": ..., "degree": d, "coeffs": [...]}
# laurent:    {"field": ..., "degree": high, "low": low, "coeffs": [...]}


def series_to_json(f: PowerSeries) -> dict:
    return {
        "field": f.field.name,
        "precision": f.precision,
        "coeffs": [f.field.format(c) for c in f.coeffs],
    }


def _field_from_json(d: dict) -> Field:
    name = d.get("field")
    if name not in FIELDS:
        raise ParseError(f"unknown field {name!r}")
    return FIELDS[name]


def series_from_json(d: dict) -> PowerSeries:
    field = _field_from_json(d)
    try:
        precision = int(d["precision"])
        raw = list(d["coeffs"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed series document: {exc}") from exc
    if len(raw) != precision + 1:
        raise ParseError("coefficient count does not match precision")
    return PowerSeries([field.parse(s) for s in raw], precision, field)


def polynomial_to_json(p: Polynomial) -> dict:
    degree = max(p.degree, 0)
    coeffs = [p.field.format(p[i]) for i in range(degree + 1)]
    return {"field": p.field.name, "degree": degree, "coeffs": coeffs}


def polynomial_from_json(d: dict) -> Polynomial:
    field = _field_from_json(d)
    try:
        raw = list(d["coeffs"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed polynomial document: {exc}") from exc
    return Polynomial([field.parse(s) for s in raw], field)


def laurent_to_json(l: LaurentPolynomial) -> dict:
    if l.is_zero():
        return {"field": l.field.name, "degree": 0, "low": 0, "coeffs": ["0"]}
    coeffs = [l.field.format(c) for c in l.coeffs]
    return {"field": l.field.name, "degree": l.high, "low": l.low, "coeffs": coeffs}


def laurent_from_json(d: dict) -> LaurentPolynomial:
    field = _field_from_json(d)
    try:
        low = int(d["low"])
        raw = list(d["coeffs"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed Laurent document: {exc}") from exc
    return LaurentPolynomial([field.parse(s) for s in raw], low, field)
