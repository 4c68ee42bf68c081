"""Truncated Levi-Civita series arithmetic.

A value is a finite sum  sum_i c_i * eps^(q_i)  plus a truncation marker
O(eps^T): exponents q_i are rationals, eps is a positive infinitesimal, and
terms with exponent >= T are unknown.  T = +inf means the value is exact.
The field order is lexicographic in the exponents: a series is positive
iff its lowest-order coefficient is positive, so eps is smaller than every
positive real while staying strictly positive.

Coefficients come in two modes that must not be mixed inside one number:

* rational -- ``fractions.Fraction``, exact;
* numeric  -- ``mpmath.mpf`` binary floats at a configurable precision.
  Coefficients smaller in absolute value than a zero threshold tied to the
  precision are canonicalised away, so signs of surviving coefficients are
  meaningful.

Addition and multiplication propagate truncation orders the obvious way
(min of the operand orders, shifted by leading exponents for products).
Inversion and square roots expand geometric/binomial series; on exact
inputs the expansion depth is the ambient default truncation order, which
is a module-level setting with a context manager for temporary overrides.
"""

from __future__ import annotations

import math
import re
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple, Union

import mpmath

from .errors import ModeMismatchError, NumericModeRequired, SeriesParseError

INF = math.inf

RATIONAL = "rational"
NUMERIC = "numeric"

Exponent = Fraction
Coefficient = Union[Fraction, mpmath.mpf]

_precision_bits = 256
_tau = mpmath.mpf(2) ** -128
_default_trunc = Fraction(8)


def set_numeric_precision(bits: int) -> None:
    """Set the precision (bits) of numeric coefficients, globally.

    The zero threshold used during canonicalisation follows the precision
    as 2**-(bits//2).  Affects the shared mpmath context.
    """
    global _precision_bits, _tau
    bits = int(bits)
    if bits < 64:
        raise ValueError("numeric precision below 64 bits is not supported")
    _precision_bits = bits
    mpmath.mp.prec = bits
    _tau = mpmath.mpf(2) ** (-(bits // 2))


def numeric_precision() -> int:
    return _precision_bits


def zero_threshold() -> mpmath.mpf:
    """Numeric coefficients with |c| below this are treated as exact zero."""
    return _tau


def default_truncation() -> Fraction:
    """Ambient truncation order used when an exact value needs a series."""
    return _default_trunc


def set_default_truncation(order) -> None:
    global _default_trunc
    order = _as_exponent(order, what="truncation order")
    if order <= 0:
        raise ValueError("truncation order must be positive")
    _default_trunc = order


@contextmanager
def truncation(order) -> Iterator[Fraction]:
    """Temporarily override the ambient default truncation order."""
    global _default_trunc
    saved = _default_trunc
    set_default_truncation(order)
    try:
        yield _default_trunc
    finally:
        _default_trunc = saved


def _as_exponent(q, what="exponent") -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    raise TypeError(f"{what} must be an int or Fraction, got {type(q).__name__}")


def _as_trunc(t):
    if t == INF:
        return INF
    return _as_exponent(t, what="truncation order")


def _split_coeff(c) -> Tuple[Coefficient, str]:
    if isinstance(c, Fraction):
        return c, RATIONAL
    if isinstance(c, int):
        return Fraction(c), RATIONAL
    if isinstance(c, mpmath.mpf):
        return c, NUMERIC
    if isinstance(c, float):
        return mpmath.mpf(c), NUMERIC
    raise TypeError(f"coefficient must be Fraction, int, mpf or float, got {type(c).__name__}")


def _frac_to_mpf(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


class LCNumber:
    """One truncated Levi-Civita series.  Immutable.

    ``terms`` is a tuple of (exponent, coefficient) pairs, strictly
    increasing in exponent, with no zero coefficients and every exponent
    below ``trunc``.  ``mode`` is "rational", "numeric", or None for a
    representation with no terms (zero is mode-polymorphic).
    """

    __slots__ = ("terms", "trunc", "mode")

    def __init__(self, terms=(), trunc=INF):
        trunc = _as_trunc(trunc)
        merged = {}
        mode = None
        items = terms.items() if isinstance(terms, dict) else terms
        for q, c in items:
            q = _as_exponent(q)
            c, cmode = _split_coeff(c)
            if mode is None:
                mode = cmode
            elif mode != cmode:
                raise ModeMismatchError(
                    "rational and numeric coefficients in one series")
            if q in merged:
                merged[q] = merged[q] + c
            else:
                merged[q] = c
        kept = []
        for q in sorted(merged):
            if q >= trunc:
                continue
            c = merged[q]
            if mode == NUMERIC:
                if abs(c) < _tau:
                    continue
            elif c == 0:
                continue
            kept.append((q, c))
        object.__setattr__(self, "terms", tuple(kept))
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "mode", mode if kept else None)

    @classmethod
    def _raw(cls, terms, trunc, mode) -> "LCNumber":
        # trusted constructor for arithmetic-internal use: terms must
        # already be sorted, filtered and below trunc
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "trunc", trunc)
        object.__setattr__(obj, "mode", mode if terms else None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("LCNumber is immutable")

    # -- basic inspection ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        """True when no terms survive below the truncation order."""
        return not self.terms

    @property
    def is_exact(self) -> bool:
        return self.trunc == INF

    @property
    def lead_exp(self):
        """Exponent of the lowest-order term; +inf for (truncated) zero."""
        return self.terms[0][0] if self.terms else INF

    @property
    def lead_coeff(self) -> Optional[Coefficient]:
        return self.terms[0][1] if self.terms else None

    def coeff(self, q) -> Coefficient:
        q = _as_exponent(q)
        for e, c in self.terms:
            if e == q:
                return c
            if e > q:
                break
        return mpmath.mpf(0) if self.mode == NUMERIC else Fraction(0)

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- coercion and mode handling --------------------------------------

    def _coerce(self, other):
        if isinstance(other, LCNumber):
            return other
        if isinstance(other, (int, Fraction)):
            if self.mode == NUMERIC:
                return monomial(_frac_to_mpf(Fraction(other)))
            return monomial(Fraction(other))
        if isinstance(other, (float, mpmath.mpf)):
            return monomial(mpmath.mpf(other))
        return None

    def _join_mode(self, other: "LCNumber") -> Optional[str]:
        if self.mode is None:
            return other.mode
        if other.mode is None or other.mode == self.mode:
            return self.mode
        raise ModeMismatchError(
            "cannot combine rational-mode and numeric-mode series; "
            "convert one side with to_numeric()")

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        mode = self._join_mode(other)
        trunc = min(self.trunc, other.trunc)
        a, b = self.terms, other.terms
        na, nb = len(a), len(b)
        numeric = mode == NUMERIC
        out = []
        i = j = 0
        while i < na and j < nb:
            qa, qb = a[i][0], b[j][0]
            if qa < qb:
                q, c = a[i]
                i += 1
            elif qb < qa:
                q, c = b[j]
                j += 1
            else:
                q = qa
                c = a[i][1] + b[j][1]
                i += 1
                j += 1
            if q >= trunc:
                return LCNumber._raw(tuple(out), trunc, mode)
            if (abs(c) >= _tau) if numeric else (c != 0):
                out.append((q, c))
        rest = a[i:] if i < na else b[j:]
        for q, c in rest:
            if q >= trunc:
                break
            out.append((q, c))
        return LCNumber._raw(tuple(out), trunc, mode)

    __radd__ = __add__

    def __neg__(self):
        return LCNumber._raw(tuple((q, -c) for q, c in self.terms),
                             self.trunc, self.mode)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__add__(-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        mode = self._join_mode(other)
        t = _as_trunc(min(self.trunc + other.lead_exp,
                          other.trunc + self.lead_exp))
        if not self.terms or not other.terms:
            return LCNumber._raw((), t, None)
        # exponents rescaled to one integer denominator: the convolution
        # then runs on int keys instead of Fractions
        den = 1
        for q, _ in self.terms:
            den = den * q.denominator // math.gcd(den, q.denominator)
        for q, _ in other.terms:
            den = den * q.denominator // math.gcd(den, q.denominator)
        if t is INF or t == INF:
            cut = None
        else:
            den = den * t.denominator // math.gcd(den, t.denominator)
            cut = t.numerator * (den // t.denominator)
        a = [(q.numerator * (den // q.denominator), c) for q, c in self.terms]
        b = [(q.numerator * (den // q.denominator), c) for q, c in other.terms]
        b0 = b[0][0]
        prod = {}
        for qa, ca in a:
            if cut is not None and qa + b0 >= cut:
                break
            for qb, cb in b:
                q = qa + qb
                if cut is not None and q >= cut:
                    break
                if q in prod:
                    prod[q] = prod[q] + ca * cb
                else:
                    prod[q] = ca * cb
        numeric = mode == NUMERIC
        out = []
        for q in sorted(prod):
            c = prod[q]
            if (abs(c) >= _tau) if numeric else (c != 0):
                out.append((Fraction(q, den), c))
        return LCNumber._raw(tuple(out), t, mode)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = monomial(mpmath.mpf(1)) if self.mode == NUMERIC else monomial(Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    # -- field operations -------------------------------------------------

    def truncate(self, order) -> "LCNumber":
        """Forget all terms with exponent >= order."""
        order = _as_trunc(order)
        trunc = min(self.trunc, order)
        keep = len(self.terms)
        while keep and self.terms[keep - 1][0] >= trunc:
            keep -= 1
        return LCNumber._raw(self.terms[:keep], trunc, self.mode)

    def inverse(self) -> "LCNumber":
        """Multiplicative inverse, by geometric expansion of the tail.

        The result's truncation order is T_eff - 2q where q is the leading
        exponent and T_eff is the input's own order when finite, otherwise
        q plus the ambient default order.
        """
        if not self.terms:
            raise ZeroDivisionError("inverse of a series that is zero at its truncation order")
        q, c = self.terms[0]
        c_inv = (1 / c) if self.mode == NUMERIC else Fraction(c.denominator, c.numerator)
        lead_inv = monomial(c_inv, -q)
        if len(self.terms) == 1:
            return LCNumber(lead_inv.terms, trunc=self.trunc - 2 * q)
        t_eff = self.trunc if self.trunc != INF else q + _default_trunc
        t_rel = t_eff - q
        tail = LCNumber(self.terms[1:], trunc=self.trunc)
        u = (tail * lead_inv).truncate(t_rel)
        neg_u = -u
        acc = monomial(mpmath.mpf(1)) if self.mode == NUMERIC else monomial(Fraction(1))
        p = acc
        while True:
            p = (p * neg_u).truncate(t_rel)
            if p.is_zero:
                break
            acc = acc + p
        return lead_inv * acc.truncate(t_rel)

    def sqrt(self) -> "LCNumber":
        """Square root of a strictly positive series.

        Needs an even leading exponent and, in rational mode, a leading
        coefficient that is a square in Q; otherwise numeric mode is
        required.  Expands the binomial series for the tail.
        """
        if self.sign() <= 0:
            raise ValueError("sqrt needs a strictly positive series")
        q, c = self.terms[0]
        if self.mode == NUMERIC:
            c_root = mpmath.sqrt(c)
            c_inv = 1 / c
        else:
            rn, rd = math.isqrt(c.numerator), math.isqrt(c.denominator)
            if rn * rn != c.numerator or rd * rd != c.denominator:
                raise NumericModeRequired(
                    f"leading coefficient {c} is not a rational square; "
                    "convert with to_numeric() first")
            c_root = Fraction(rn, rd)
            c_inv = 1 / c
        half_q = q / 2
        lead_root = monomial(c_root, half_q)
        if len(self.terms) == 1:
            return LCNumber(lead_root.terms, trunc=(self.trunc - q) + half_q)
        t_eff = self.trunc if self.trunc != INF else q + _default_trunc
        t_rel = t_eff - q
        tail = LCNumber(self.terms[1:], trunc=self.trunc)
        u = (tail * monomial(c_inv, -q)).truncate(t_rel)
        acc = monomial(mpmath.mpf(1)) if self.mode == NUMERIC else monomial(Fraction(1))
        p = acc
        binom = Fraction(1)
        k = 0
        while True:
            p = (p * u).truncate(t_rel)
            binom = binom * (Fraction(1, 2) - k) / (k + 1)
            k += 1
            if p.is_zero:
                break
            acc = acc + p * binom
        return lead_root * acc.truncate(t_rel)

    # -- order ------------------------------------------------------------

    def sign(self) -> int:
        """-1, 0 or 1 according to the field order; 0 means zero at truncation."""
        if not self.terms:
            return 0
        c = self.terms[0][1]
        return 1 if c > 0 else -1

    def __abs__(self) -> "LCNumber":
        return -self if self.sign() < 0 else self

    def _cmp(self, other) -> Optional[int]:
        other = self._coerce(other)
        if other is None:
            return None
        return (self - other).sign()

    def __lt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s < 0

    def __le__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s <= 0

    def __gt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s > 0

    def __ge__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s >= 0

    def __eq__(self, other):
        if not isinstance(other, (LCNumber, int, Fraction, float, mpmath.mpf)):
            return NotImplemented
        s = self._cmp(other)
        return NotImplemented if s is None else s == 0

    def __ne__(self, other):
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    __hash__ = None  # order-based equality; not suitable for hashing

    def identical(self, other: "LCNumber") -> bool:
        """Structural equality: same terms, same truncation order."""
        return (isinstance(other, LCNumber)
                and self.trunc == other.trunc
                and self.terms == other.terms)

    # -- conversions and display ------------------------------------------

    def to_numeric(self) -> "LCNumber":
        """Copy with rational coefficients converted to numeric floats."""
        if self.mode != RATIONAL:
            return self
        return LCNumber(tuple((q, _frac_to_mpf(c)) for q, c in self.terms),
                        trunc=self.trunc)

    def eval_at(self, x):
        """Substitute a concrete value for eps (diagnostics, plots, tests)."""
        if self.mode != NUMERIC and isinstance(x, (int, Fraction)) \
                and all(q.denominator == 1 and q >= 0 for q, _ in self.terms):
            x = Fraction(x)
            return sum((c * x ** int(q) for q, c in self.terms), Fraction(0))
        xv = mpmath.mpf(x.numerator) / x.denominator if isinstance(x, Fraction) else mpmath.mpf(x)
        total = mpmath.mpf(0)
        for q, c in self.terms:
            cv = _frac_to_mpf(c) if isinstance(c, Fraction) else c
            total += cv * mpmath.power(xv, _frac_to_mpf(Fraction(q)))
        return total

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        return f"LCNumber({format_series(self)!r})"


# -- constructors ----------------------------------------------------------

def monomial(coeff, q=0, trunc=INF) -> LCNumber:
    """The series coeff * eps^q."""
    return LCNumber(((_as_exponent(q), coeff),), trunc=trunc)


def eps(q=1) -> LCNumber:
    """The infinitesimal eps, or eps^q for a rational q."""
    return monomial(Fraction(1), q)


def zero(trunc=INF) -> LCNumber:
    return LCNumber((), trunc=trunc)


def one() -> LCNumber:
    return monomial(Fraction(1))


def from_rational(value, trunc=INF) -> LCNumber:
    return monomial(Fraction(value), trunc=trunc)


def from_real(value, trunc=INF) -> LCNumber:
    """A numeric-mode constant from a float/mpf (or exact int/Fraction)."""
    if isinstance(value, (int, Fraction)):
        value = _frac_to_mpf(Fraction(value))
    return monomial(mpmath.mpf(value), trunc=trunc)


def sign(a: LCNumber) -> int:
    return a.sign()


def comparable(a: LCNumber, b) -> bool:
    """True when a and b agree to leading order (written a ≈ b).

    Zero is comparable only to zero.  Nonzero series are comparable when
    their leading exponents and leading coefficients coincide (numeric
    coefficients: up to the zero threshold).
    """
    if not isinstance(b, LCNumber):
        coerced = a._coerce(b)
        if coerced is None:
            raise TypeError(f"cannot compare series with {type(b).__name__}")
        b = coerced
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    qa, ca = a.terms[0]
    qb, cb = b.terms[0]
    if qa != qb:
        return False
    if a.mode == NUMERIC or b.mode == NUMERIC:
        ca = _frac_to_mpf(ca) if isinstance(ca, Fraction) else ca
        cb = _frac_to_mpf(cb) if isinstance(cb, Fraction) else cb
        return abs(ca - cb) < _tau
    return ca == cb


# -- printing ---------------------------------------------------------------

def _format_exponent(q: Fraction) -> str:
    if q.denominator == 1 and q >= 0:
        return str(q)
    return f"({q})"


def _format_coeff(c, digits) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return mpmath.nstr(c, digits if digits is not None else mpmath.mp.dps + 5,
                       strip_zeros=True)


def format_series(a: LCNumber, digits: Optional[int] = None) -> str:
    """Render a series in the grammar accepted by parse_series.

    Rational coefficients print exactly; numeric ones print with enough
    digits to reparse to the same float unless ``digits`` trims them.
    """
    parts = []
    for q, c in a.terms:
        body = _format_coeff(abs(c), digits)
        if q != 0:
            epspart = "eps" if q == 1 else f"eps^{_format_exponent(q)}"
            if isinstance(c, Fraction) and abs(c) == 1:
                body = epspart
            else:
                body = f"{body}*{epspart}"
        negative = c < 0
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    text = " ".join(parts) if parts else "0"
    if a.trunc != INF:
        text += f" + O(eps^{_format_exponent(Fraction(a.trunc))})"
    return text


# -- parsing ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"""
      (?P<ws>\s+)
    | (?P<decimal>\d+\.\d*(?:[eE][-+]?\d+)?|\.\d+(?:[eE][-+]?\d+)?|\d+[eE][-+]?\d+)
    | (?P<int>\d+)
    | (?P<eps>eps\b)
    | (?P<bigo>O\b)
    | (?P<sym>[-+*/^()])
""", re.VERBOSE)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise SeriesParseError(f"unexpected character {text[pos]!r}", position=pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, mode: str):
        if mode not in (RATIONAL, NUMERIC):
            raise ValueError(f"mode must be {RATIONAL!r} or {NUMERIC!r}")
        self.text = text
        self.mode = mode
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, kind=None, value=None):
        if self.i >= len(self.tokens):
            return None
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            return None
        if value is not None and tok[1] != value:
            return None
        return tok

    def take(self, kind=None, value=None, what="token"):
        tok = self.peek(kind, value)
        if tok is None:
            pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
            raise SeriesParseError(f"expected {what}", position=pos)
        self.i += 1
        return tok

    def at_end(self):
        return self.i >= len(self.tokens)

    def error(self, message):
        pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        raise SeriesParseError(message, position=pos)

    def parse(self) -> LCNumber:
        if self.at_end():
            self.error("empty series")
        terms = []
        trunc = INF
        negate = False
        if self.peek("sym", "-"):
            self.take()
            negate = True
        while True:
            if self.peek("bigo"):
                trunc = self.parse_marker()
                if negate:
                    self.error("truncation marker cannot be negated")
                break
            q, c = self.parse_term()
            terms.append((q, -c if negate else c))
            if self.at_end():
                break
            sep = self.take("sym", what="'+' or '-' between terms")
            if sep[1] == "+":
                negate = False
            elif sep[1] == "-":
                negate = True
            else:
                raise SeriesParseError("expected '+' or '-' between terms",
                                       position=sep[2])
        if not self.at_end():
            self.error("trailing input after series")
        return LCNumber(terms, trunc=trunc)

    def parse_marker(self):
        self.take("bigo")
        self.take("sym", "(", what="'(' after O")
        self.take("eps", what="eps inside O(...)")
        q = Fraction(1)
        if self.peek("sym", "^"):
            self.take()
            q = self.parse_exponent()
        self.take("sym", ")", what="')' closing O(...)")
        return q

    def parse_term(self):
        if self.peek("eps"):
            self.take()
            q = Fraction(1)
            if self.peek("sym", "^"):
                self.take()
                q = self.parse_exponent()
            c = _frac_to_mpf(Fraction(1)) if self.mode == NUMERIC else Fraction(1)
            return q, c
        c = self.parse_coeff()
        q = Fraction(0)
        if self.peek("sym", "*"):
            self.take()
            self.take("eps", what="eps after '*'")
            q = Fraction(1)
            if self.peek("sym", "^"):
                self.take()
                q = self.parse_exponent()
        return q, c

    def parse_coeff(self):
        tok = self.peek("decimal")
        if tok is not None:
            self.take()
            if self.mode == RATIONAL:
                raise SeriesParseError(
                    "decimal coefficients need numeric mode", position=tok[2])
            return mpmath.mpf(tok[1])
        tok = self.take("int", what="coefficient")
        num = int(tok[1])
        if self.peek("sym", "/"):
            self.take()
            den_tok = self.take("int", what="denominator")
            den = int(den_tok[1])
            if den == 0:
                raise SeriesParseError("zero denominator", position=den_tok[2])
            value = Fraction(num, den)
        else:
            value = Fraction(num)
        if self.mode == NUMERIC:
            return _frac_to_mpf(value)
        return value

    def parse_exponent(self) -> Fraction:
        if self.peek("sym", "("):
            self.take()
            sign_ = 1
            if self.peek("sym", "-"):
                self.take()
                sign_ = -1
            num = int(self.take("int", what="exponent numerator")[1])
            den = 1
            if self.peek("sym", "/"):
                self.take()
                den_tok = self.take("int", what="exponent denominator")
                den = int(den_tok[1])
                if den == 0:
                    raise SeriesParseError("zero denominator", position=den_tok[2])
            self.take("sym", ")", what="')' closing exponent")
            return Fraction(sign_ * num, den)
        if self.peek("sym", "-"):
            self.take()
            return -Fraction(int(self.take("int", what="exponent")[1]))
        return Fraction(int(self.take("int", what="exponent")[1]))


def parse_series(text: str, mode: str = RATIONAL) -> LCNumber:
    """Parse a series literal like ``1/2 - 3*eps^2 + eps^(1/2)``.

    In rational mode coefficients must be integers or fractions; numeric
    mode also accepts decimals and converts everything to floats.  An
    optional trailing ``+ O(eps^T)`` records a truncation order.
    """
    return _Parser(text, mode).parse()


set_numeric_precision(256)
