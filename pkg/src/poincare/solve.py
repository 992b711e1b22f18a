"""Solvers for the Poincare functional equation f(qx) = p(f(x)).

An invertible solution exists iff p(0) = 0 and the linear coefficient of p
equals q; fixing f_1 = 1 makes it unique. Two independent construction
paths are provided:

* :func:`solve_poincare_recursive` matches coefficients of f(qx) = p(f(x))
  order by order. Isolating the linear term of p gives

      f_j = ( sum_{l=2}^{j} p_l (f^l)_j ) / (q^j - q),   j >= 2,

  where (f^l)_j only involves f_1..f_{j-l+1}, so the right side is always
  already known. See docs/recursion-derivation.md for the derivation and
  for why the superficially similar rule with denominator q^j - 1 and sum
  l = 1..j-1 is rejected.

* :func:`solve_poincare_nonrecursive` extracts each coefficient in closed
  form from iterates of p: for any polynomial g_j of q-difference order j,

      f_j = ( sum_i g_{j,i} (p^(i))_j ) / g_j(q^j),

  with p^(i) the i-fold composition of p with itself.

The compositional inverse of f solves Schroder's equation q*s = s o p.
"""

from __future__ import annotations

from .errors import (
    InvalidInstance,
    OrderMismatch,
    PrecisionTooLow,
    RootOfUnityDivisor,
)
from .fields import field_pow, is_root_of_unity_up_to
from .qdiff import canonical_order_poly, qdiff_order
from .series import Polynomial, PowerSeries


class PoincareInstance:
    """A polynomial map p with its multiplier q and a working precision N.

    Construction enforces the existence and well-posedness conditions:
    p(0) = 0, q = p_1 != 0, and q not a root of unity up to N (so that the
    denominators q^j - q and the canonical g_j(q^j) are provably nonzero).
    """

    __slots__ = ("p", "q", "N")

    def __init__(self, p: Polynomial, N: int, q=None):
        if not isinstance(p, Polynomial):
            raise InvalidInstance("p must be a Polynomial")
        if N < 1:
            raise InvalidInstance(f"precision must be >= 1, got {N}")
        if p[0]:
            raise InvalidInstance("p has a nonzero constant term")
        p1 = p[1]
        if not p1:
            raise InvalidInstance("p has a zero linear coefficient")
        if q is not None and p.field.coerce(q) != p1:
            raise InvalidInstance("q does not match the linear coefficient of p")
        if is_root_of_unity_up_to(p1, N):
            raise InvalidInstance("q is a root of unity")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", p1)
        object.__setattr__(self, "N", N)

    def __setattr__(self, name, value):
        raise AttributeError("PoincareInstance is immutable")

    def __repr__(self):
        return f"PoincareInstance(p={self.p!r}, N={self.N})"

    def with_precision(self, N: int) -> "PoincareInstance":
        return self if N == self.N else PoincareInstance(self.p, N)


def solve_poincare_recursive(inst: PoincareInstance) -> PowerSeries:
    """The normalized solution, by order-by-order coefficient matching."""
    p, q, N = inst.p, inst.q, inst.N
    field = p.field
    zero, one = field.zero, field.one
    f = [zero] * (N + 1)
    if N >= 1:
        f[1] = one

    # (f^l)_d, memoized; safe during the fill because the entry for (l, d)
    # only reads f_1..f_{d-l+1}, all final before f_d is computed
    memo = {}

    def power_coeff(l, d):
        if l == 0:
            return one if d == 0 else zero
        if l == 1:
            return f[d]
        key = (l, d)
        cached = memo.get(key)
        if cached is None:
            cached = zero
            for m in range(1, d - l + 2):
                fm = f[m]
                if fm:
                    cached += fm * power_coeff(l - 1, d - m)
            memo[key] = cached
        return cached

    top = p.degree
    for j in range(2, N + 1):
        s = zero
        for l in range(2, min(j, top) + 1):
            pl = p[l]
            if pl:
                s += pl * power_coeff(l, j)
        denom = field_pow(q, j) - q
        if not denom:
            raise RootOfUnityDivisor(f"q^{j} - q vanished")
        f[j] = s / denom
    return PowerSeries(f, N, field)


def iterates_of(p: Polynomial, count: int, precision: int) -> list[PowerSeries]:
    """[x, p, p o p, ...] as series, count+1 entries."""
    out = [PowerSeries.x(precision, p.field)]
    for _ in range(count):
        out.append(p.compose(out[-1]))
    return out


def solve_poincare_nonrecursive(
    inst: PoincareInstance, gs: list[Polynomial] | None = None
) -> PowerSeries:
    """The normalized solution, each coefficient in closed form.

    ``gs``, when given, supplies the order-j polynomial for every j = 1..N;
    the default is the canonical q-Pochhammer product. The result does not
    depend on the choice, which the test suite exercises directly.
    """
    p, q, N = inst.p, inst.q, inst.N
    field = p.field
    if gs is None:
        gs = [canonical_order_poly(j, q, field) for j in range(1, N + 1)]
    else:
        gs = list(gs)
        if len(gs) != N:
            raise OrderMismatch(f"need one polynomial per degree 1..{N}")
        for j, g in enumerate(gs, start=1):
            order = qdiff_order(g, q, bound=max(N, g.degree + 1))
            if order != j:
                raise OrderMismatch(
                    f"polynomial for degree {j} has q-difference order {order}"
                )
    its = iterates_of(p, max(g.degree for g in gs), N)
    f = [field.zero] * (N + 1)
    for j in range(1, N + 1):
        g = gs[j - 1]
        s = field.zero
        for i, gi in enumerate(g):
            if gi:
                s += gi * its[i][j]
        f[j] = s / g(field_pow(q, j))
    return PowerSeries(f, N, field)


def solve_schroder(inst: PoincareInstance) -> PowerSeries:
    """The normalized solution s of q*s = s o p (inverse of the Poincare f)."""
    return solve_poincare_recursive(inst).revert()


def verify_poincare(f: PowerSeries, inst: PoincareInstance) -> PowerSeries:
    """Residual f(qx) - p(f(x)) through degree N; zero iff f solves the equation.

    Also forms the residual of the equivalent inverse-map statement
    f(x/q) = p^(-1)(f(x)) and insists the two agree about being zero, so a
    bug in reversion or composition cannot silently vouch for itself.
    """
    p, q, N = inst.p, inst.q, inst.N
    if f.precision < N:
        raise PrecisionTooLow(
            f"residual through {N} needs precision >= {N}, got {f.precision}"
        )
    if f[0]:
        raise InvalidInstance("candidate solution has a nonzero constant term")
    ft = f.truncate(N)
    direct = ft.scale_arg(q) - p.compose(ft)
    p_inverse = p.as_series(N).revert()
    equivalent = ft.scale_arg(inst.p.field.one / q) - p_inverse.compose(ft)
    if direct.is_zero() != equivalent.is_zero():
        raise AssertionError(
            "direct and inverse-map residuals disagree; series arithmetic is broken"
        )
    return direct
