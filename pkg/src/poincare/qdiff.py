"""Homogeneous quantum difference operators.

For a nonzero polynomial g and a base q (nonzero, not a root of unity
within the working bound), the operator built here maps a series f to

    x^(-n) * sum_i g_i f(q^i x)

where n, the q-difference order of g, is the least nonnegative integer
with g(q^n) != 0. The first n coefficients of the sum vanish identically
because coefficient m of the sum is g(q^m) f_m, so the shift by x^n is
always exact; that cancellation is re-checked on every application rather
than trusted.

Applied to x^j and evaluated at 0, an order-j operator picks out the j-th
series coefficient up to the factor g(q^j), which gives the Maclaurin-like
extraction rule implemented by :func:`maclaurin_coefficient`.
"""

from __future__ import annotations

from .errors import (
    FieldMismatch,
    OrderMismatch,
    PrecisionTooLow,
    ZeroBase,
    ZeroPolynomial,
    RootOfUnityBase,
)
from .fields import Field, field_of, field_pow, is_root_of_unity_up_to
from .series import LaurentPolynomial, Polynomial, PowerSeries


def qdiff_order(g: Polynomial, q, bound: int | None = None) -> int:
    """Least n >= 0 with g(q^n) != 0.

    The powers q^0..q^deg(g) are pairwise distinct when q is not a root of
    unity, and a nonzero g cannot vanish at deg(g)+1 distinct points, so
    the answer is at most deg(g). ``bound`` widens the root-of-unity check
    when the caller will use powers beyond deg(g)+1.
    """
    if g.is_zero():
        raise ZeroPolynomial("the zero polynomial has no q-difference order")
    q = g.field.coerce(q)
    bound = max(bound or 0, g.degree + 1)
    if is_root_of_unity_up_to(q, bound):
        raise RootOfUnityBase(f"base is a root of unity within bound {bound}")
    value = g.field.one
    for n in range(g.degree + 1):
        if g(value):
            return n
        value = value * q
    raise AssertionError("nonzero polynomial vanished at deg(g)+1 distinct points")


class QDiffOperator:
    """D = x^(-order) applied after summing g_i f(q^i x)."""

    __slots__ = ("g", "q", "order")

    def __init__(self, g: Polynomial, q, bound: int | None = None):
        q = g.field.coerce(q)
        order = qdiff_order(g, q, bound)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("QDiffOperator is immutable")

    def __repr__(self):
        return f"QDiffOperator(g={self.g!r}, q={self.g.field.format(self.q)}, order={self.order})"

    def apply(self, f: PowerSeries) -> PowerSeries:
        """Apply to a series of precision >= order; costs `order` precision."""
        if f.field is not self.g.field:
            raise FieldMismatch(
                f"operator over {self.g.field}, series over {f.field}"
            )
        if f.precision < self.order:
            raise PrecisionTooLow(
                f"operator of order {self.order} needs precision >= {self.order}, "
                f"got {f.precision}"
            )
        acc = PowerSeries.zero(f.precision, f.field)
        power = f.field.one
        for gi in self.g:
            if gi:
                acc = acc + gi * f.scale_arg(power)
            power = power * self.q
        # exact cancellation below the order; div_xn re-verifies it
        return acc.div_xn(self.order)

    __call__ = apply


def maclaurin_coefficient(f: PowerSeries, j: int, g_j: Polynomial, q):
    """Extract f_j as (D f)(0) / g_j(q^j) for an order-j operator.

    Independent of which order-j polynomial g_j is chosen; equals the
    stored coefficient, which makes it a cross-check of the whole operator
    stack rather than a faster accessor.
    """
    op = QDiffOperator(g_j, q, bound=max(j, 1))
    if op.order != j:
        raise OrderMismatch(
            f"polynomial has q-difference order {op.order}, needed {j}"
        )
    return op.apply(f)[0] / g_j(field_pow(op.q, j))


def canonical_order_poly(j: int, q, field: Field | None = None) -> Polynomial:
    """The q-Pochhammer product (x - 1)(x - q)...(x - q^(j-1)), expanded.

    Vanishes at q^0..q^(j-1) and nowhere else among powers of q, so its
    q-difference order is exactly j.
    """
    if j < 0:
        raise ValueError("order must be nonnegative")
    field = field or field_of(q)
    q = field.coerce(q)
    if not q:
        raise ZeroBase("base must be nonzero")
    if j > 0 and is_root_of_unity_up_to(q, j):
        raise RootOfUnityBase(f"base is a root of unity within bound {j}")
    out = Polynomial((1,), field)
    power = field.one
    for _ in range(j):
        out = out * Polynomial((-power, 1), field)
        power = power * q
    return out


def laurent_q_pochhammer(n: int, j: int, q, field: Field | None = None) -> LaurentPolynomial:
    """x^n times the canonical order-j product; n may be negative."""
    base = canonical_order_poly(j, q, field)
    return LaurentPolynomial(base.coeffs, n, base.field)
