"""Exact coefficient fields: rationals Q and rational functions Q(q).

Every coefficient in this package is either a :class:`fractions.Fraction`
(field Q) or a :class:`RatFunc` (field Q(q), reduced rational functions of
an indeterminate q over Q). Both representations are canonical, so ``==``
is mathematical equality and values are safe to hash and share.

The two fields are exposed through the singletons :data:`QQ` and
:data:`QQ_Q`, which know how to coerce, parse and format their elements.
Series and polynomials carry one of these singletons as a tag; mixing tags
raises :class:`~poincare.errors.FieldMismatch`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import (
    DivisionByZero,
    FieldMismatch,
    ParseError,
    PoleAtEvaluationPoint,
    ZeroBase,
)

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense polynomials in q over Q: tuples of Fractions, ascending exponents,
# trailing zeros trimmed, () is the zero polynomial

def _ptrim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim(
        (a[i] if i < len(a) else _ZERO) + (b[i] if i < len(b) else _ZERO)
        for i in range(n)
    )


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _ptrim(out)


def _pdivmod(a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    q = [_ZERO] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and _ptrim(r):
        r = list(_ptrim(r))
        if len(r) < len(b):
            break
        k = len(r) - len(b)
        c = r[-1] / lead
        q[k] = c
        for i, bi in enumerate(b):
            r[k + i] -= c * bi
        r.pop()
    return _ptrim(q), _ptrim(r)


def _pgcd(a, b):
    """Monic gcd via Euclid; gcd((), b) = monic b."""
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    lead = a[-1]
    return tuple(c / lead for c in a)


def _peval(a, v):
    acc = _ZERO
    for c in reversed(a):
        acc = acc * v + c
    return acc


def _format_qpoly(cs) -> str:
    if not cs:
        return "0"
    parts = []
    for e in range(len(cs) - 1, -1, -1):
        c = cs[e]
        if not c:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            power = "q" if e == 1 else f"q^{e}"
            body = power if abs(c) == 1 else f"{abs(c)}*{power}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = (first_sign if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += sign + body
    return text


def _parse_qterm(t: str):
    coef = _ONE
    if "*" in t:
        cs, t = t.split("*", 1)
        try:
            coef = Fraction(cs)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient {cs!r}") from exc
    else:
        m = re.match(r"\d+(?:/\d+)?", t)
        if m:
            try:
                coef = Fraction(m.group())
            except ZeroDivisionError as exc:
                raise ParseError(f"zero denominator in {t!r}") from exc
            t = t[m.end():]
    if not t:
        return coef, 0
    if t == "q":
        return coef, 1
    m = re.fullmatch(r"q\^(\d+)", t)
    if not m:
        raise ParseError(f"bad term {t!r}")
    return coef, int(m.group(1))


def _parse_qpoly(s: str):
    s = s.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    terms = re.findall(r"[+-][^+-]+", s)
    if sum(len(t) for t in terms) != len(s):
        raise ParseError(f"cannot parse polynomial {s!r}")
    coeffs: dict[int, Fraction] = {}
    for t in terms:
        coef, exp = _parse_qterm(t[1:])
        if t[0] == "-":
            coef = -coef
        coeffs[exp] = coeffs.get(exp, _ZERO) + coef
    if not coeffs:
        return ()
    out = [_ZERO] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return _ptrim(out)


class RatFunc:
    """Element of Q(q): numerator/denominator reduced, denominator monic.

    The canonical form makes equality testing structural: gcd(num, den) = 1
    and the denominator's leading coefficient is 1, with any content pushed
    into the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = self._as_poly(num)
        den = self._as_poly(den)
        if not den:
            raise DivisionByZero("zero denominator in Q(q)")
        if not num:
            den = (_ONE,)
        else:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
            lead = den[-1]
            if lead != 1:
                num = tuple(c / lead for c in num)
                den = tuple(c / lead for c in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _as_poly(x):
        if isinstance(x, tuple) or isinstance(x, list):
            return _ptrim(Fraction(c) for c in x)
        if isinstance(x, (int, Fraction)):
            return _ptrim((Fraction(x),))
        raise TypeError(f"cannot build Q(q) element from {type(x).__name__}")

    # -- classification ----------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    @property
    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        return self.num[0] / self.den[0] if self.num else _ZERO

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(
            _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
            _pmul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RatFunc)
        object.__setattr__(out, "num", _pneg(self.num))
        object.__setattr__(out, "den", self.den)
        return out

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
        return RatFunc(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise DivisionByZero("division by zero in Q(q)")
        return RatFunc(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self:
                raise DivisionByZero("zero to a negative power in Q(q)")
            base = RatFunc(self.den, self.num)
            k = -k
        else:
            base = self
        acc = RatFunc(1)
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant:
            return hash(self.constant_value())
        return hash((self.num, self.den))

    # -- evaluation and text ------------------------------------------------

    def eval(self, v) -> Fraction:
        """Exact value at q = v; raises PoleAtEvaluationPoint on a pole."""
        v = Fraction(v)
        d = _peval(self.den, v)
        if not d:
            raise PoleAtEvaluationPoint(f"q = {v} is a pole of {self}")
        return _peval(self.num, v) / d

    __call__ = eval

    def __str__(self):
        if self.den == (_ONE,):
            return _format_qpoly(self.num)
        return f"({_format_qpoly(self.num)})/({_format_qpoly(self.den)})"

    def __repr__(self):
        return f"RatFunc({self})"


#: the indeterminate of Q(q)
q = RatFunc((0, 1))


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except ValueError as exc:
        raise ParseError(f"bad rational {s!r}") from exc
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator in {s!r}") from exc


def parse_ratfunc(s: str) -> RatFunc:
    """Parse ``(num)/(den)`` or a bare expanded polynomial in q."""
    s = s.strip().replace(" ", "")
    if s.startswith("(") and s.endswith(")") and ")/(" in s:
        cut = s.index(")/(")
        num = _parse_qpoly(s[1:cut])
        den = _parse_qpoly(s[cut + 3:-1])
        if not den:
            raise ParseError(f"zero denominator in {s!r}")
        return RatFunc(num, den)
    return RatFunc(_parse_qpoly(s))


class Field:
    """Coercion, parsing and formatting for one coefficient field."""

    name: str = ""

    def coerce(self, x):
        raise NotImplementedError

    def parse(self, s: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def __repr__(self):
        return self.name


class _RationalField(Field):
    name = "Q"

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise FieldMismatch(f"{x!r} is not an element of Q")

    def parse(self, s):
        return parse_rational(s)


class _RationalFunctionField(Field):
    name = "Q(q)"

    def coerce(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc(x)
        raise FieldMismatch(f"{x!r} is not an element of Q(q)")

    def parse(self, s):
        return parse_ratfunc(s)


QQ = _RationalField()
QQ_Q = _RationalFunctionField()

FIELDS = {QQ.name: QQ, QQ_Q.name: QQ_Q}


def field_of(x) -> Field:
    """The field singleton a bare element belongs to."""
    if isinstance(x, RatFunc):
        return QQ_Q
    if isinstance(x, (int, Fraction)):
        return QQ
    raise FieldMismatch(f"{x!r} is not a field element")


def field_pow(a, k: int):
    """a**k with a^0 = 1; rejects 0**k for negative k."""
    if k < 0 and not a:
        raise DivisionByZero("zero to a negative power")
    return a ** k


def is_root_of_unity_up_to(a, k: int) -> bool:
    """True iff a^m = 1 for some 1 <= m <= k.

    A nonconstant element of Q(q) is transcendental over Q, so it is never
    a root of unity; a constant one is tested through its rational value.
    """
    if k < 1:
        raise ValueError("bound must be positive")
    if not a:
        raise ZeroBase("root-of-unity test for base 0")
    if isinstance(a, RatFunc):
        if not a.is_constant:
            return False
        a = a.constant_value()
    acc = a
    for _ in range(k):
        if acc == 1:
            return True
        acc *= a
    return False


def ratfun_eval_at(r: RatFunc, v) -> Fraction:
    """Evaluate an element of Q(q) at a rational point q = v."""
    if not isinstance(r, RatFunc):
        raise FieldMismatch(f"{r!r} is not an element of Q(q)")
    return r.eval(v)
