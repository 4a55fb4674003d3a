"""Dense polynomials in one, two and three variables with exact rational coefficients.

All values are immutable.  Coefficients are stored lowest degree first as
``gmpy2.mpq``.  A bivariate polynomial is indexed ``(i, j)`` for ``x^i y^j``;
the second variable is the *main* variable by convention (``y`` in a residue
computation, ``z`` for a residue annihilator, ``Delta`` for a diagonal
annihilator).  Callers decide what the two variables mean.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, Sequence

from gmpy2 import mpq, mpz

__all__ = [
    "MINUS_INFINITY",
    "UniPoly",
    "BiPoly",
    "TriPoly",
    "reciprocal",
    "shift_y",
    "canonical",
    "canonical_unipoly",
    "format_bipoly",
    "format_unipoly",
]

ZERO = mpq(0)
ONE = mpq(1)


class _MinusInfinity:
    """Degree of the zero polynomial.

    Compares below every integer and absorbs addition, so that
    ``deg(P*Q) == deg P + deg Q`` holds for zero operands too.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-oo"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-oo")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("-oo - -oo is undefined")
        return self

    def __mul__(self, other):
        if isinstance(other, int) and other > 0:
            return self
        raise ArithmeticError("-oo can only be scaled by a positive integer")

    __rmul__ = __mul__


MINUS_INFINITY = _MinusInfinity()


def _q(v) -> mpq:
    return v if type(v) is type(ZERO) else mpq(v)


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


# ---------------------------------------------------------------------------
# list kernels shared by the classes below (lowest degree first)


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _sub(a, b):
    n = max(len(a), len(b))
    out = [ZERO] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] -= v
    return _trim(out)


def _mul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _trim(out)


def _divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], _trim(r)
    inv = ONE / b[-1]
    q = [ZERO] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        coef = r[k]
        if coef:
            coef = coef * inv
            q[k - db] = coef
            for j in range(db):
                r[k - db + j] -= coef * b[j]
        r[k] = ZERO
    return _trim(q), _trim(r[:db])


class UniPoly:
    """Univariate polynomial over Q; ``coeffs[k]`` multiplies ``x^k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = tuple(_trim([_q(v) for v in coeffs]))

    @classmethod
    def _raw(cls, coeffs) -> "UniPoly":
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def constant(cls, v) -> "UniPoly":
        return cls((v,))

    @classmethod
    def monomial(cls, k: int, v=1) -> "UniPoly":
        return cls([0] * k + [v])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return self.coeffs[k]
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    @property
    def leading(self) -> mpq:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, type(ZERO))):
            return self.coeffs == ((_q(other),) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other.coeffs
        return (_q(other),) if other else ()

    def __add__(self, other):
        return UniPoly._raw(_add(self.coeffs, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return UniPoly._raw(_sub(self.coeffs, self._coerce(other)))

    def __rsub__(self, other):
        return UniPoly._raw(_sub(self._coerce(other), self.coeffs))

    def __neg__(self):
        return UniPoly._raw(tuple(-v for v in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            return UniPoly._raw(_mul(self.coeffs, other.coeffs))
        s = _q(other)
        if not s:
            return UniPoly._raw(())
        return UniPoly._raw(tuple(v * s for v in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out, base = UniPoly._raw((ONE,)), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __divmod__(self, other: "UniPoly"):
        q, r = _divmod(self.coeffs, other.coeffs)
        return UniPoly._raw(q), UniPoly._raw(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return self * (ONE / _q(other))
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, x0):
        acc = ZERO
        for v in reversed(self.coeffs):
            acc = acc * x0 + v
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly._raw(tuple(k * v for k, v in enumerate(self.coeffs) if k))

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic form")
        inv = ONE / self.coeffs[-1]
        return UniPoly._raw(tuple(v * inv for v in self.coeffs))

    @property
    def valuation(self):
        for k, v in enumerate(self.coeffs):
            if v:
                return k
        return MINUS_INFINITY

    def __repr__(self):
        return f"UniPoly({format_unipoly(self)})"


def format_unipoly(p: UniPoly, var: str = "x") -> str:
    """Ascending text form without spaces, e.g. ``1-4*x+x^2``."""
    if not p.coeffs:
        return "0"
    parts = []
    for k, v in enumerate(p.coeffs):
        if not v:
            continue
        sign = "-" if v < 0 else "+"
        a = -v if v < 0 else v
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = _fmt_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_rational(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def _fmt_rational(v: mpq) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


# ---------------------------------------------------------------------------


class BiPoly:
    """Dense bivariate polynomial; ``coeffs[i][j]`` multiplies ``x^i y^j``.

    The array is rectangular: every row has ``deg_y + 1`` entries and there
    are ``deg_x + 1`` rows.  The zero polynomial has no rows.
    """

    __slots__ = ("coeffs",)

    def __init__(self, rows: Iterable[Iterable] = ()):
        rows = [[_q(v) for v in r] for r in rows]
        self.coeffs = _canon_rows(rows)

    @classmethod
    def _raw(cls, rows) -> "BiPoly":
        p = object.__new__(cls)
        p.coeffs = rows
        return p

    @classmethod
    def from_dict(cls, terms: dict) -> "BiPoly":
        if not terms:
            return cls._raw(())
        nx = max(i for i, _ in terms) + 1
        ny = max(j for _, j in terms) + 1
        rows = [[ZERO] * ny for _ in range(nx)]
        for (i, j), v in terms.items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            rows[i][j] += _q(v)
        return cls._raw(_canon_rows(rows))

    @classmethod
    def constant(cls, v) -> "BiPoly":
        return cls(((v,),))

    @classmethod
    def x(cls) -> "BiPoly":
        return cls(((0,), (1,)))

    @classmethod
    def y(cls) -> "BiPoly":
        return cls(((0, 1),))

    @classmethod
    def from_y_coeffs(cls, polys: Sequence[UniPoly]) -> "BiPoly":
        """Build from ``polys[j]`` = coefficient of ``y^j`` as a polynomial in x."""
        nx = max((len(p) for p in polys), default=0)
        rows = [[p[i] for p in polys] for i in range(nx)]
        return cls._raw(_canon_rows(rows))

    @classmethod
    def from_x_coeffs(cls, polys: Sequence[UniPoly]) -> "BiPoly":
        """Build from ``polys[i]`` = coefficient of ``x^i`` as a polynomial in y."""
        return cls._raw(_canon_rows([list(p.coeffs) for p in polys]))

    # -- shape ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def deg_x(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def deg_y(self):
        return len(self.coeffs[0]) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def bidegree(self):
        return (self.deg_x, self.deg_y)

    def terms(self) -> Iterator[tuple[int, int, mpq]]:
        for i, row in enumerate(self.coeffs):
            for j, v in enumerate(row):
                if v:
                    yield i, j, v

    def to_dict(self) -> dict:
        return {(i, j): v for i, j, v in self.terms()}

    def coeff(self, i: int, j: int) -> mpq:
        if 0 <= i < len(self.coeffs) and 0 <= j < len(self.coeffs[0]):
            return self.coeffs[i][j]
        return ZERO

    def y_coeffs(self) -> list[UniPoly]:
        """Coefficients wrt y, each a polynomial in x."""
        if not self.coeffs:
            return []
        return [UniPoly([row[j] for row in self.coeffs]) for j in range(len(self.coeffs[0]))]

    def x_coeffs(self) -> list[UniPoly]:
        """Coefficients wrt x, each a polynomial in y."""
        return [UniPoly(row) for row in self.coeffs]

    def lc_y(self) -> UniPoly:
        if not self.coeffs:
            return UniPoly()
        return UniPoly([row[-1] for row in self.coeffs])

    def transpose(self) -> "BiPoly":
        if not self.coeffs:
            return self
        return BiPoly._raw(tuple(zip(*self.coeffs)))

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, type(ZERO))):
            return self == BiPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _coerce(other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UniPoly):
            # a bare univariate polynomial is read as a polynomial in x
            return BiPoly.from_x_coeffs([UniPoly.constant(v) for v in other.coeffs])
        return BiPoly.constant(other)

    def __add__(self, other):
        return _bi_linear(self, BiPoly._coerce(other), 1)

    __radd__ = __add__

    def __sub__(self, other):
        return _bi_linear(self, BiPoly._coerce(other), -1)

    def __rsub__(self, other):
        return _bi_linear(BiPoly._coerce(other), self, -1)

    def __neg__(self):
        return BiPoly._raw(tuple(tuple(-v for v in r) for r in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (BiPoly, UniPoly)):
            return _bi_mul(self, BiPoly._coerce(other))
        s = _q(other)
        if not s:
            return BiPoly._raw(())
        return BiPoly._raw(tuple(tuple(v * s for v in r) for r in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out, base = BiPoly.constant(1), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def exact_div(self, other) -> "BiPoly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        if not isinstance(other, (BiPoly, UniPoly)):
            return self * (ONE / _q(other))
        other = BiPoly._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return self
        num = self.y_coeffs()
        den = other.y_coeffs()
        dn = len(den) - 1
        if len(num) - 1 < dn:
            raise ArithmeticError("inexact polynomial division")
        lc = den[-1]
        quo = [UniPoly()] * (len(num) - dn)
        for k in range(len(num) - 1, dn - 1, -1):
            if not num[k]:
                continue
            qk = num[k].exact_div(lc)
            quo[k - dn] = qk
            for j in range(dn + 1):
                num[k - dn + j] = num[k - dn + j] - qk * den[j]
        if any(num[:dn]):
            raise ArithmeticError("inexact polynomial division")
        return BiPoly.from_y_coeffs(quo)

    def divides(self, other: "BiPoly") -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    # -- evaluation and calculus ---------------------------------------------

    def __call__(self, x0, y0):
        acc = ZERO
        for row in reversed(self.coeffs):
            r = ZERO
            for v in reversed(row):
                r = r * y0 + v
            acc = acc * x0 + r
        return acc

    def eval_x(self, x0) -> UniPoly:
        """Specialize x = x0; the result is a polynomial in y."""
        if not self.coeffs:
            return UniPoly()
        x0 = _q(x0)
        acc = [ZERO] * len(self.coeffs[0])
        for row in reversed(self.coeffs):
            acc = [a * x0 + v for a, v in zip(acc, row)]
        return UniPoly._raw(_trim(acc))

    def eval_y(self, y0) -> UniPoly:
        """Specialize y = y0; the result is a polynomial in x."""
        return self.transpose().eval_x(y0)

    def diff_y(self) -> "BiPoly":
        return BiPoly._raw(_canon_rows([[j * v for j, v in enumerate(r)][1:] for r in self.coeffs]))

    def diff_x(self) -> "BiPoly":
        return BiPoly._raw(_canon_rows([[i * v for v in r] for i, r in enumerate(self.coeffs)][1:]))

    def substitute_powers(self, qx: int, qy: int) -> "BiPoly":
        """Return P(x^qx, y^qy)."""
        return BiPoly.from_dict({(i * qx, j * qy): v for i, j, v in self.terms()})

    def __repr__(self):
        return f"BiPoly({format_bipoly(self)})"


def _canon_rows(rows) -> tuple:
    rows = [list(r) for r in rows]
    while rows and not any(rows[-1]):
        rows.pop()
    if not rows:
        return ()
    ny = 0
    for r in rows:
        for j in range(len(r) - 1, -1, -1):
            if r[j]:
                ny = max(ny, j + 1)
                break
    return tuple(tuple(r[:ny]) + (ZERO,) * (ny - len(r)) for r in rows)


def _bi_linear(a: BiPoly, b: BiPoly, sign: int) -> BiPoly:
    nx = max(len(a.coeffs), len(b.coeffs))
    ny = max(a.deg_y + 1 if a else 0, b.deg_y + 1 if b else 0)
    rows = [[ZERO] * ny for _ in range(nx)]
    for i, r in enumerate(a.coeffs):
        row = rows[i]
        for j, v in enumerate(r):
            row[j] = v
    for i, r in enumerate(b.coeffs):
        row = rows[i]
        if sign > 0:
            for j, v in enumerate(r):
                row[j] += v
        else:
            for j, v in enumerate(r):
                row[j] -= v
    return BiPoly._raw(_canon_rows(rows))


def _bi_mul(a: BiPoly, b: BiPoly) -> BiPoly:
    if not a or not b:
        return BiPoly._raw(())
    nx = len(a.coeffs) + len(b.coeffs) - 1
    ny = len(a.coeffs[0]) + len(b.coeffs[0]) - 1
    rows = [[ZERO] * ny for _ in range(nx)]
    bt = [[(j, v) for j, v in enumerate(r) if v] for r in b.coeffs]
    for i1, r1 in enumerate(a.coeffs):
        for j1, u in enumerate(r1):
            if not u:
                continue
            for i2, r2 in enumerate(bt):
                row = rows[i1 + i2]
                for j2, v in r2:
                    row[j1 + j2] += u * v
    return BiPoly._raw(_canon_rows(rows))


def format_bipoly(p: BiPoly, names: tuple[str, str] = ("x", "y")) -> str:
    """Text form grouped by descending powers of the main (second) variable.

    ``(1-4*t)*D^2 - 1`` is the rendering of ``(1-4t)D^2 - 1`` with names
    ``("t", "D")``.  The output parses back with the expression parser when
    the names are ``x`` and ``y``.
    """
    if not p:
        return "0"
    xn, yn = names
    pieces = []
    ycs = p.y_coeffs()
    for j in range(len(ycs) - 1, -1, -1):
        c = ycs[j]
        if not c:
            continue
        mono = "" if j == 0 else (yn if j == 1 else f"{yn}^{j}")
        nz = [(k, v) for k, v in enumerate(c.coeffs) if v]
        if len(nz) == 1:
            k, v = nz[0]
            sign = "-" if v < 0 else "+"
            a = -v if v < 0 else v
            xm = "" if k == 0 else (xn if k == 1 else f"{xn}^{k}")
            factors = [] if (a == 1 and (xm or mono)) else [_fmt_rational(a)]
            factors += [f for f in (xm, mono) if f]
            pieces.append((sign, "*".join(factors)))
        else:
            body = "(" + format_unipoly(c, xn) + ")"
            pieces.append(("+", body + ("*" + mono if mono else "")))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------


class TriPoly:
    """Dense trivariate polynomial; ``coeffs[i][j][k]`` multiplies ``x^i y^j t^k``."""

    __slots__ = ("coeffs",)

    def __init__(self, terms: dict | None = None):
        terms = {key: _q(v) for key, v in (terms or {}).items() if v}
        if not terms:
            self.coeffs = ()
            return
        nx = max(i for i, _, _ in terms) + 1
        ny = max(j for _, j, _ in terms) + 1
        nt = max(k for _, _, k in terms) + 1
        arr = [[[ZERO] * nt for _ in range(ny)] for _ in range(nx)]
        for (i, j, k), v in terms.items():
            arr[i][j][k] = v
        self.coeffs = tuple(tuple(tuple(r) for r in plane) for plane in arr)

    @classmethod
    def from_t_slices(cls, slices: Sequence[BiPoly]) -> "TriPoly":
        """Build from ``slices[k]`` = coefficient of ``t^k`` as a polynomial in (x, y)."""
        terms = {}
        for k, s in enumerate(slices):
            for i, j, v in s.terms():
                terms[(i, j, k)] = v
        return cls(terms)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degrees(self):
        if not self.coeffs:
            return (MINUS_INFINITY,) * 3
        return (len(self.coeffs) - 1, len(self.coeffs[0]) - 1, len(self.coeffs[0][0]) - 1)

    @property
    def deg_t(self):
        return self.degrees[2]

    def terms(self):
        for i, plane in enumerate(self.coeffs):
            for j, r in enumerate(plane):
                for k, v in enumerate(r):
                    if v:
                        yield i, j, k, v

    def t_slice(self, k: int) -> BiPoly:
        """Coefficient of ``t^k`` as a bivariate polynomial in (x, y)."""
        if not self.coeffs or k < 0 or k >= len(self.coeffs[0][0]):
            return BiPoly()
        return BiPoly([[r[k] for r in plane] for plane in self.coeffs])

    def __call__(self, x0, y0, t0):
        acc = ZERO
        for i, j, k, v in self.terms():
            acc += v * x0**i * y0**j * t0**k
        return acc

    def __eq__(self, other):
        if isinstance(other, TriPoly):
            return dict(((i, j, k), v) for i, j, k, v in self.terms()) == dict(
                ((i, j, k), v) for i, j, k, v in other.terms()
            )
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.terms()))

    def __repr__(self):
        return f"TriPoly({dict(((i, j, k), v) for i, j, k, v in self.terms())})"


# ---------------------------------------------------------------------------


def reciprocal(p: UniPoly) -> UniPoly:
    """``x^deg(p) * p(1/x)``: the coefficient list reversed."""
    if not p:
        raise ValueError("reciprocal of the zero polynomial is undefined")
    return UniPoly(reversed(p.coeffs))


def shift_y(p: BiPoly) -> TriPoly:
    """Taylor shift ``P(x, y + t)`` as a trivariate polynomial."""
    terms: dict = {}
    for i, l, v in p.terms():
        for k in range(l + 1):
            key = (i, l - k, k)
            terms[key] = terms.get(key, ZERO) + v * comb(l, k)
    return TriPoly(terms)


# ---------------------------------------------------------------------------
# canonical normalization


def _lcm_den(values) -> mpz:
    from math import lcm

    m = 1
    for v in values:
        d = int(v.denominator)
        if d != 1:
            m = lcm(m, d)
    return mpz(m)


def _int_content(values) -> mpz:
    from math import gcd

    g = 0
    for v in values:
        g = gcd(g, int(v.numerator))
        if g == 1:
            break
    return mpz(g)


def integer_primitive_scale(values) -> mpq:
    """The positive rational ``s`` making ``s * values`` coprime integers."""
    values = [v for v in values if v]
    if not values:
        return ONE
    m = _lcm_den(values)
    g = _int_content([v * m for v in values])
    return mpq(m, g)


def canonical_unipoly(p: UniPoly) -> UniPoly:
    """Integer-primitive with positive leading coefficient."""
    if not p:
        return p
    s = integer_primitive_scale(p.coeffs)
    if p.leading < 0:
        s = -s
    return p * s


def canonical(p: BiPoly) -> BiPoly:
    """Canonical form of an annihilating polynomial in (x, main).

    Integer-primitive, with the sign chosen so that the leading coefficient
    wrt the main variable, itself a polynomial in x, has a positive
    lowest-order coefficient.  Under this rule ``(1-4t)D^2 - 1`` and
    ``4x z^2 - 1`` are both canonical.
    """
    if not p:
        return p
    s = integer_primitive_scale([v for _, _, v in p.terms()])
    lc = p.lc_y()
    low = lc.coeffs[lc.valuation]
    if low < 0:
        s = -s
    return p * s
