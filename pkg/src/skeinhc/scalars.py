"""Exact coefficient arithmetic.

Three layers:

* :class:`GaussianRational` -- elements a + b*i of Q(i), with exact
  `fractions.Fraction` parts.
* :class:`ScalarQ` -- rational functions in the variable q over Q(i),
  stored as a reduced fraction of dense polynomials with a monic
  denominator, so structural equality coincides with equality of values.
* :class:`CyclotomicValue` -- elements of Q(zeta_m) represented densely
  modulo the m-th cyclotomic polynomial.  The specialization points of
  interest send q to the primitive root exp(2*pi*i/(4N)), under which i
  becomes zeta^N.

>>> (Q * Q.inv()) == ONE
True
>>> str(loop_value())
'(2*i*q)/(q^2 - 1)'
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, PoleError

__all__ = [
    "GaussianRational",
    "ScalarQ",
    "CyclotomicValue",
    "SpecializationPoint",
    "RationalFunctionField",
    "CyclotomicField",
    "QIQ",
    "ZERO",
    "ONE",
    "I",
    "Q",
    "loop_value",
    "q_power",
    "specialize",
    "parse_scalar",
    "cyclotomic_polynomial",
]


class GaussianRational:
    """An exact element a + b*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        other = _gauss(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _gauss(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _gauss(other) - self

    def __mul__(self, other):
        other = _gauss(other)
        if not self.im:
            if not other.im:
                return GaussianRational(self.re * other.re)
            return GaussianRational(self.re * other.re, self.re * other.im)
        if not other.im:
            return GaussianRational(self.re * other.re, self.im * other.re)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _gauss(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise DomainError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return _gauss(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_zero(self) -> bool:
        return not (self.re or self.im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __complex__(self):
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return _frac_str(self.re)
        if not self.re:
            return _imag_str(self.im)
        im = _imag_str(self.im) if self.im > 0 else "- " + _imag_str(-self.im)
        sep = " + " if self.im > 0 else " "
        return f"{_frac_str(self.re)}{sep}{im}"


def _gauss(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise TypeError(f"cannot coerce {x!r} into Q(i)")


def _frac_str(f: Fraction) -> str:
    return str(f)


def _imag_str(f: Fraction) -> str:
    if f == 1:
        return "i"
    if f == -1:
        return "-i"
    return f"{f}*i"


_G0 = GaussianRational(0)
_G1 = GaussianRational(1)

# ---------------------------------------------------------------------------
# Dense polynomials over Q(i), lowest degree first, no trailing zeros.

Poly = tuple  # tuple[GaussianRational, ...]


def _ptrim(c: list) -> Poly:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, v in enumerate(b):
        out[k] = out[k] + v
    return _ptrim(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-v for v in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [_G0] * (len(a) + len(b) - 1)
    for j, x in enumerate(a):
        if not x:
            continue
        for k, y in enumerate(b):
            if y:
                out[j + k] = out[j + k] + x * y
    return _ptrim(out)


def _pscale(a: Poly, c: GaussianRational) -> Poly:
    if not c:
        return ()
    return tuple(v * c for v in a)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise DomainError("polynomial division by zero")
    a = list(a)
    q = [_G0] * max(0, len(a) - len(b) + 1)
    inv_lead = _G1 / b[-1]
    while len(a) >= len(b) and _ptrim(list(a)):
        a = list(_ptrim(a))
        if len(a) < len(b):
            break
        c = a[-1] * inv_lead
        d = len(a) - len(b)
        q[d] = c
        for k, v in enumerate(b):
            a[d + k] = a[d + k] - c * v
        a.pop()
    return _ptrim(q), _ptrim(a)


def _pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    return _pscale(a, _G1 / a[-1])  # monic


def _peval_cyclo(p: Poly, field: "CyclotomicField") -> "CyclotomicValue":
    """Evaluate p at q = zeta (Horner), mapping i -> zeta^N."""
    acc = field.zero
    for c in reversed(p):
        acc = acc * field.zeta + field.from_gaussian(c)
    return acc


def _peval_gauss(p: Poly, x: GaussianRational) -> GaussianRational:
    acc = GaussianRational(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------


class ScalarQ:
    """A rational function in q over Q(i), kept in reduced normal form.

    Invariants: gcd(num, den) = 1 and den is monic, so two ScalarQ values
    are equal as functions iff they are structurally equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(_G1,), _normalized=False):
        if isinstance(num, (int, Fraction, GaussianRational)):
            num = (_gauss(num),) if num else ()
        if isinstance(den, (int, Fraction, GaussianRational)):
            den = (_gauss(den),) if den else ()
        num = _ptrim(list(num))
        den = _ptrim(list(den))
        if not den:
            raise DomainError("zero denominator")
        if not _normalized:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _scalar(other)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return ScalarQ(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __sub__(self, other):
        other = _scalar(other)
        num = _padd(_pmul(self.num, other.den), _pneg(_pmul(other.num, self.den)))
        return ScalarQ(num, _pmul(self.den, other.den))

    def __rsub__(self, other):
        return _scalar(other) - self

    def __mul__(self, other):
        other = _scalar(other)
        return ScalarQ(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _scalar(other)
        if not other.num:
            raise DomainError("division by zero scalar")
        return ScalarQ(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return _scalar(other) / self

    def __neg__(self):
        return ScalarQ(_pneg(self.num), self.den, _normalized=True)

    def __pow__(self, k: int):
        if k < 0:
            return (ONE / self) ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inv(self):
        return ONE / self

    # -- structure ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = _scalar(other)
        if not isinstance(other, ScalarQ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    @property
    def is_zero(self) -> bool:
        return not self.num

    def __repr__(self):
        return f"ScalarQ({self!s})"

    def __str__(self):
        num = _poly_str(self.num)
        if self.den == (_G1,):
            return num
        den = _poly_str(self.den)
        if len(self.num) > 1 or (self.num and (self.num[0].re and self.num[0].im)):
            num = f"({num})"
        if len(self.den) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def eval_at(self, x) -> GaussianRational:
        """Evaluate at a rational (or Gaussian-rational) value of q."""
        x = _gauss(x)
        den = _peval_gauss(self.den, x)
        if not den:
            raise PoleError(f"denominator vanishes at q = {x}")
        return _peval_gauss(self.num, x) / den


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not num:
        return (), (_G1,)
    if len(den) == 1:
        if den[0] == _G1:
            return num, den
        return _pscale(num, _G1 / den[0]), (_G1,)
    # strip common powers of q cheaply before the general gcd
    vn = next(k for k, c in enumerate(num) if c)
    vd = next(k for k, c in enumerate(den) if c)
    shift = vn if vn < vd else vd
    if shift:
        num = num[shift:]
        den = den[shift:]
        if len(den) == 1:
            return _reduce(num, den)
    if not any(den[:-1]):  # monomial denominator: gcd is now trivial
        lead = den[-1]
        if lead != _G1:
            inv = _G1 / lead
            return _pscale(num, inv), _pscale(den, inv)
        return num, den
    g = _pgcd(num, den)
    if len(g) > 1:
        num = _pdivmod(num, g)[0]
        den = _pdivmod(den, g)[0]
    lead = den[-1]
    if lead != _G1:
        inv = _G1 / lead
        num = _pscale(num, inv)
        den = _pscale(den, inv)
    return num, den


def _scalar(x) -> ScalarQ:
    if isinstance(x, ScalarQ):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return ScalarQ(x)
    raise TypeError(f"cannot coerce {x!r} into Q(i)(q)")


def _poly_str(p: Poly) -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        if k == 0:
            mon = ""
        elif k == 1:
            mon = "q"
        else:
            mon = f"q^{k}"
        cs = str(c)
        if (c.re and c.im) and mon:
            cs = f"({cs})"
        if mon and cs == "1":
            term = mon
        elif mon and cs == "-1":
            term = f"-{mon}"
        elif mon:
            term = f"{cs}*{mon}"
        else:
            term = cs
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


ZERO = ScalarQ(0)
ONE = ScalarQ(1)
I = ScalarQ(GaussianRational(0, 1))
Q = ScalarQ((_G0, _G1))


def q_power(k: int) -> ScalarQ:
    """q**k for any integer k (negative allowed)."""
    if k >= 0:
        return ScalarQ(tuple([_G0] * k + [_G1]))
    return ScalarQ((_G1,), tuple([_G0] * (-k) + [_G1]))


def loop_value() -> ScalarQ:
    """The value of a closed loop, 2i/(q - q^(-1))."""
    return (2 * I) / (Q - q_power(-1))


# ---------------------------------------------------------------------------
# Cyclotomic fields Q(zeta_m).


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Monic cyclotomic polynomial Phi_n over Q, dense, lowest degree first.

    >>> cyclotomic_polynomial(8)
    (Fraction(1, 1), Fraction(0, 1), Fraction(0, 1), Fraction(0, 1), Fraction(1, 1))
    """
    if n < 1:
        raise DomainError("cyclotomic order must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _qdiv_rational(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _qdiv_rational(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    a = list(a)
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        out[d] = c
        for k, v in enumerate(b):
            a[d + k] -= c * v
        a.pop()
        while a and a[-1] == 0 and len(a) >= len(b):
            a.pop()
    if any(a):
        raise ConsistencyError("inexact cyclotomic division")  # pragma: no cover
    return out


class CyclotomicValue:
    """An element of Q(zeta_m), reduced modulo Phi_m(x)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        deg = len(cyclotomic_polynomial(order)) - 1
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > deg:
            coeffs = _cyclo_reduce(order, coeffs)
        coeffs += [Fraction(0)] * (deg - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicValue(self.order, [other])
        if other.order != self.order:
            raise DomainError("mixed cyclotomic orders")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CyclotomicValue(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return CyclotomicValue(
            self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for j, x in enumerate(a):
            if not x:
                continue
            for k, y in enumerate(b):
                if y:
                    out[j + k] += x * y
        return CyclotomicValue(self.order, out)

    __rmul__ = __mul__

    def __neg__(self):
        return CyclotomicValue(self.order, [-c for c in self.coeffs])

    def inv(self) -> "CyclotomicValue":
        if self.is_zero:
            raise DomainError("inverse of zero cyclotomic value")
        phi = list(cyclotomic_polynomial(self.order))
        inv = _poly_modinv(list(self.coeffs), phi)
        return CyclotomicValue(self.order, inv)

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inv()

    def __rtruediv__(self, other):
        return self._check(other) * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = CyclotomicValue(self.order, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicValue(self.order, [other])
        if not isinstance(other, CyclotomicValue):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def conjugate(self) -> "CyclotomicValue":
        """Complex conjugation, zeta -> zeta^(order-1)."""
        out = CyclotomicValue(self.order, [0])
        z = CyclotomicValue(self.order, [1])
        zc = CyclotomicValue(self.order, [0, 1]) ** (self.order - 1)
        for c in self.coeffs:
            out = out + c * z
            z = z * zc
        return out

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def __repr__(self):
        return f"CyclotomicValue({self.order}, {list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*z" if c != 1 else "z")
            else:
                parts.append(f"{c}*z^{k}" if c != 1 else f"z^{k}")
        return " + ".join(parts).replace("+ -", "- ")


def _cyclo_reduce(order: int, coeffs: list) -> list:
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c:
            for j in range(deg + 1):
                coeffs[k - deg + j] -= c * phi[j]
    return coeffs[:deg]


def _poly_modinv(a: list, m: list) -> list:
    """Inverse of a modulo m in Q[x] via the extended Euclidean algorithm."""

    def divmod_(x, y):
        x = list(x)
        q = [Fraction(0)] * max(1, len(x) - len(y) + 1)
        while x and len(x) >= len(y):
            c = x[-1] / y[-1]
            d = len(x) - len(y)
            q[d] = c
            for k, v in enumerate(y):
                x[d + k] -= c * v
            while x and x[-1] == 0:
                x.pop()
        return q, x

    def trim(x):
        x = list(x)
        while x and x[-1] == 0:
            x.pop()
        return x

    r0, r1 = trim(m), trim(a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, trim(r)
        qs = trim(_polymul_rational(q, s1))
        s = [Fraction(0)] * max(len(s0), len(qs))
        for k, v in enumerate(s0):
            s[k] += v
        for k, v in enumerate(qs):
            s[k] -= v
        s0, s1 = s1, trim(s)
    # r0 = gcd (a unit since Phi is irreducible and a != 0 mod Phi)
    lead = r0[-1]
    return [c / lead for c in s0]


def _polymul_rational(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for j, x in enumerate(a):
        if x:
            for k, y in enumerate(b):
                if y:
                    out[j + k] += x * y
    return out


# ---------------------------------------------------------------------------
# Specialization points and field adapters.


class SpecializationPoint:
    """The evaluation q -> exp(2*pi*i/(4N)), a primitive 4N-th root with q^N = i."""

    __slots__ = ("N",)

    def __init__(self, N: int):
        if N < 2:
            raise DomainError("specialization points require N >= 2")
        self.N = N

    @property
    def order(self) -> int:
        return 4 * self.N

    def __eq__(self, other):
        return isinstance(other, SpecializationPoint) and self.N == other.N

    def __hash__(self):
        return hash(("spec", self.N))

    def __repr__(self):
        return f"SpecializationPoint(N={self.N})"


class RationalFunctionField:
    """Field adapter for Q(i)(q)-valued coefficients."""

    name = "Q(i)(q)"

    zero = ZERO
    one = ONE
    i = I
    q = Q
    z = Q - ScalarQ((_G1,), (_G0, _G1))  # q - q^(-1)
    loop = (2 * I) / z

    @staticmethod
    def from_int(k: int) -> ScalarQ:
        return ScalarQ(k)


QIQ = RationalFunctionField()


class CyclotomicField:
    """Field adapter for Q(zeta_{4N}) at the distinguished point q = zeta_{4N}."""

    def __init__(self, N: int):
        self.point = SpecializationPoint(N)
        m = self.point.order
        self.order = m
        self.name = f"Q(zeta_{m})"
        self.zero = CyclotomicValue(m, [])
        self.one = CyclotomicValue(m, [1])
        self.zeta = CyclotomicValue(m, [0, 1])
        self.q = self.zeta
        self.i = self.zeta ** N
        self.z = self.zeta - self.zeta.inv()
        self.loop = (2 * self.i) / self.z

    def from_int(self, k: int) -> CyclotomicValue:
        return CyclotomicValue(self.order, [k])

    def from_gaussian(self, g: GaussianRational) -> CyclotomicValue:
        return CyclotomicValue(self.order, [g.re]) + g.im * self.i


@lru_cache(maxsize=None)
def _field_for(N: int) -> CyclotomicField:
    return CyclotomicField(N)


def specialize(f: ScalarQ, point: SpecializationPoint | int) -> CyclotomicValue:
    """Exact image of f under q -> zeta_{4N}; raises PoleError at a pole.

    >>> str(specialize(Q, SpecializationPoint(2)))
    'z'
    """
    if isinstance(point, int):
        point = SpecializationPoint(point)
    field = _field_for(point.N)
    den = _peval_cyclo(f.den, field)
    if den.is_zero:
        raise PoleError(f"denominator of {f} vanishes at q = zeta_{field.order}")
    return _peval_cyclo(f.num, field) / den


# ---------------------------------------------------------------------------
# Textual scalar grammar: integers, i, q, ^ exponents, + - * /, parentheses.


def parse_scalar(text: str) -> ScalarQ:
    """Parse the scalar grammar into an exact ScalarQ.

    >>> parse_scalar("2*i/(q - q^-1)") == loop_value()
    True
    """
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def take(expected=None):
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise DomainError(f"scalar parse error near token {pos[0]} in {text!r}")
        pos[0] += 1
        return tok

    def parse_expr():
        node = parse_term()
        while peek() in ("+", "-"):
            op = take()
            rhs = parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term():
        node = parse_factor()
        while peek() in ("*", "/"):
            op = take()
            rhs = parse_factor()
            node = node * rhs if op == "*" else node / rhs
        return node

    def parse_factor():
        if peek() == "-":
            take()
            return -parse_factor()
        if peek() == "+":
            take()
            return parse_factor()
        return parse_atom()

    def parse_atom():
        tok = take()
        if tok == "(":
            node = parse_expr()
            take(")")
        elif tok == "i":
            node = I
        elif tok == "q":
            node = Q
        elif isinstance(tok, int):
            node = ScalarQ(tok)
        else:
            raise DomainError(f"unexpected token {tok!r} in scalar {text!r}")
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            exp = take()
            if not isinstance(exp, int):
                raise DomainError(f"bad exponent in scalar {text!r}")
            node = node ** (sign * exp)
        return node

    node = parse_expr()
    if pos[0] != len(tokens):
        raise DomainError(f"trailing input in scalar {text!r}")
    return node


def _tokenize(text: str):
    tokens = []
    k = 0
    while k < len(text):
        ch = text[k]
        if ch.isspace():
            k += 1
        elif ch.isdigit():
            j = k
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(int(text[k:j]))
            k = j
        elif ch in "iq+-*/^()":
            tokens.append(ch)
            k += 1
        else:
            raise DomainError(f"bad character {ch!r} in scalar {text!r}")
    return tokens


# Local import kept at the bottom to avoid a cycle with errors for the
# consistency check in _qdiv_rational.
from .errors import ConsistencyError  # noqa: E402


if __name__ == "__main__":
    import doctest

    doctest.testmod()
