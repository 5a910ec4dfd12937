"""Exact scalar fields (Q and prime fields F_p) and univariate polynomials.

Scalars are plain Python values: ``gmpy2.mpq`` (exact, lowest terms) over Q and
``int`` in ``range(p)`` over F_p.  All arithmetic goes through a
:class:`FieldCtx` so that generic linear algebra never has to know which
field it is working in.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
import re
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

from gmpy2 import mpq

from .errors import (DivisionByZero, FieldMismatch, LpaError, NotMonic,
                     Unsupported)

Q_FACTOR_DEGREE_CAP = 8


_MPQ = type(mpq(0))
_MPZ = type(mpq(0).numerator)
_RATIONAL = re.compile(r"([+-]?\d+)(?:/(\d+))?")

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldCtx:
    """Ground field: ``kind`` is ``"Q"`` or ``"Fp"`` (then ``p`` is prime)."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind == "Q":
            if self.p:
                raise LpaError("Q takes no characteristic")
        elif self.kind == "Fp":
            if not is_prime(self.p):
                raise LpaError(f"F_p needs a prime p, got {self.p}")
        else:
            raise LpaError(f"unknown field kind {self.kind!r}")

    # -- construction -------------------------------------------------
    @classmethod
    def Q(cls) -> FieldCtx:
        return cls("Q")

    @classmethod
    def Fp(cls, p: int) -> FieldCtx:
        return cls("Fp", p)

    @classmethod
    def parse(cls, text: str) -> FieldCtx:
        """``"Q"``, ``"F5"`` or ``"Fp:5"`` style names (CLI flags)."""
        t = text.strip()
        if t.upper() in ("Q", "QQ"):
            return cls.Q()
        if t[:1] in "Ff":
            digits = t[1:].lstrip("p:P")
            return cls.Fp(int(digits))
        raise LpaError(f"cannot parse field {text!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "Fp"

    @property
    def order(self) -> int | None:
        return self.p if self.kind == "Fp" else None

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    def __str__(self):
        return "Q" if self.kind == "Q" else f"F{self.p}"

    # -- elements ------------------------------------------------------
    @cached_property
    def zero(self):
        return mpq(0) if self.kind == "Q" else 0

    @cached_property
    def one(self):
        return mpq(1) if self.kind == "Q" else 1

    def __call__(self, value):
        """Coerce an int, rational or text encoding into this field."""
        if isinstance(value, str):
            return self.parse_scalar(value)
        if self.kind == "Q":
            if isinstance(value, float):
                raise LpaError("floating point values are not accepted")
            if isinstance(value, bool) or not isinstance(value, (int, Fraction, _MPQ, _MPZ)):
                raise LpaError(f"cannot coerce {value!r} into {self}")
            return mpq(value)
        if isinstance(value, (Fraction, _MPQ)):
            num, den = int(value.numerator), int(value.denominator)
            if den % self.p == 0:
                raise DivisionByZero(f"{value} has no image in {self}")
            return num * pow(den, -1, self.p) % self.p
        if isinstance(value, _MPZ):
            value = int(value)
        if isinstance(value, bool) or not isinstance(value, int):
            raise LpaError(f"cannot coerce {value!r} into {self}")
        return value % self.p

    def parse_scalar(self, text: str):
        t = text.strip()
        if self.kind == "Q":
            m = _RATIONAL.fullmatch(t)
            if not m:
                raise LpaError(f"bad rational {text!r}")
            den = int(m.group(2) or 1)
            if den == 0:
                raise DivisionByZero(f"zero denominator in {text!r}")
            return mpq(int(m.group(1)), den)
        try:
            v = int(t)
        except ValueError as exc:
            raise LpaError(f"bad F_{self.p} element {text!r}") from exc
        if not 0 <= v < self.p:
            raise LpaError(f"{text!r} is not a canonical residue mod {self.p}")
        return v

    def format(self, x) -> str:
        return str(x)

    def is_canonical(self, x) -> bool:
        if self.kind == "Q":
            return isinstance(x, _MPQ)
        return isinstance(x, int) and 0 <= x < self.p

    # -- arithmetic ------------------------------------------------------
    def add(self, a, b):
        return a + b if self.kind == "Q" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "Q" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "Q" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "Q" else (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / a if self.kind == "Q" else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def reduce(self, a):
        """Bring a raw int/rational combination back to canonical form."""
        return a if self.kind == "Q" else a % self.p

    def arith(self, a, b, op: str):
        ops = {"add": self.add, "sub": self.sub, "mul": self.mul, "div": self.div}
        if not (self.is_canonical(a) and self.is_canonical(b)):
            raise FieldMismatch(f"operands are not elements of {self}")
        return ops[op](a, b)

    # -- enumeration / sampling -------------------------------------------
    def elements(self) -> Iterator:
        if self.kind == "Q":
            raise Unsupported("Q is infinite")
        return iter(range(self.p))

    def units(self) -> list:
        if self.kind == "Q":
            raise Unsupported("Q is infinite")
        return list(range(1, self.p))

    def random(self, rng: random.Random, height: int = 3):
        """Uniform over F_p; small-height rationals over Q."""
        if self.kind == "Fp":
            return rng.randrange(self.p)
        num = rng.randint(-height, height)
        den = rng.randint(1, max(1, height // 2 + 1))
        return mpq(num, den)

    def random_unit(self, rng: random.Random):
        while True:
            x = self.random(rng)
            if x != 0:
                return x


# ---------------------------------------------------------------------------
# Polynomials


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    The zero polynomial has an empty coefficient tuple.
    """

    field: FieldCtx
    coeffs: tuple

    def __post_init__(self):
        c = [self.field(a) for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_high(cls, field: FieldCtx, coeffs_high_first: Sequence) -> Poly:
        return cls(field, tuple(reversed(list(coeffs_high_first))))

    @classmethod
    def x(cls, field: FieldCtx) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def const(cls, field: FieldCtx, c) -> Poly:
        return cls(field, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> Poly:
        inv = self.field.inv(self.leading)
        return Poly(self.field, tuple(self.field.mul(a, inv) for a in self.coeffs))

    def _check(self, other: Poly):
        if other.field != self.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (F.zero,) * (n - len(self.coeffs))
        b = other.coeffs + (F.zero,) * (n - len(other.coeffs))
        return Poly(F, tuple(F.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> Poly:
        return Poly(self.field, tuple(self.field.neg(a) for a in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        if self.is_zero or other.is_zero:
            return Poly(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(F, tuple(F.reduce(v) for v in out))

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(F, ()), self
        quo = [F.zero] * (dq + 1)
        inv_lead = F.inv(other.leading)
        for k in range(dq, -1, -1):
            c = F.mul(rem[k + other.degree], inv_lead)
            quo[k] = c
            if c == 0:
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = F.sub(rem[k + j], F.mul(c, b))
        return Poly(F, tuple(quo)), Poly(F, tuple(rem[: other.degree]))

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __pow__(self, n: int) -> Poly:
        out = Poly.const(self.field, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def powmod(self, n: int, mod: Poly) -> Poly:
        out = Poly.const(self.field, 1) % mod
        base = self % mod
        while n:
            if n & 1:
                out = (out * base) % mod
            base = (base * base) % mod
            n >>= 1
        return out

    def gcd(self, other: Poly) -> Poly:
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def derivative(self) -> Poly:
        F = self.field
        return Poly(F, tuple(F.mul(F(i), c) for i, c in enumerate(self.coeffs) if i))

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.to_text()} over {self.field})"


def _require_monic(f: Poly):
    if not f.is_monic or f.degree < 1:
        raise NotMonic(f"{f.to_text()} is not monic of degree >= 1")


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _rabin_irreducible(f: Poly) -> bool:
    p, d = f.field.p, f.degree
    x = Poly.x(f.field)
    if x.powmod(p ** d, f) != x % f:
        return False
    for q in _prime_factors(d):
        h = x.powmod(p ** (d // q), f) - x
        if f.gcd(h).degree > 0:
            return False
    return True


def poly_is_irreducible(f: Poly) -> bool:
    """Decide irreducibility of a monic polynomial.

    Over F_p this is Rabin's test.  Over Q the polynomial is factored over
    the integers (sympy), which is only done up to degree 8.
    """
    _require_monic(f)
    if f.degree == 1:
        return True
    if f.field.is_finite:
        return _rabin_irreducible(f)
    if f.degree > Q_FACTOR_DEGREE_CAP:
        raise Unsupported(f"Q-irreducibility capped at degree {Q_FACTOR_DEGREE_CAP}")
    factors = factor(f)
    return len(factors) == 1 and factors[0][1] == 1


def factor(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factorization ``[(g, multiplicity), ...]``.

    Delegates to sympy's Zassenhaus/Berlekamp machinery.
    """
    import sympy

    F = f.field
    if f.is_zero:
        raise LpaError("cannot factor the zero polynomial")
    if f.degree == 0:
        return []
    x = sympy.Symbol("x")
    high = [sympy.Rational(int(c.numerator), int(c.denominator)) if F.kind == "Q" else int(c)
            for c in reversed(f.coeffs)]
    if F.kind == "Q":
        sp = sympy.Poly(high, x, domain=sympy.QQ)
    else:
        sp = sympy.Poly(high, x, modulus=F.p)
    _, facs = sp.factor_list()
    out = []
    for g, m in facs:
        coeffs = [mpq(int(c.p), int(c.q)) if F.kind == "Q" else F(int(c))
                  for c in g.all_coeffs()]
        out.append((Poly.from_high(F, coeffs).monic(), int(m)))
    out.sort(key=lambda t: (t[0].degree, [str(c) for c in t[0].coeffs]))
    return out


def monic_polys(F: FieldCtx, degree: int) -> Iterator[Poly]:
    """All monic polynomials of the given degree over a finite field."""
    import itertools

    for tail in itertools.product(range(F.p), repeat=degree):
        yield Poly(F, tuple(tail) + (1,))


def companion_matrix(f: Poly) -> list[list]:
    """Matrix of multiplication by x on k[x]/f in the basis 1, x, ..., x^(d-1)."""
    _require_monic(f)
    F = f.field
    d = f.degree
    M = [[F.zero] * d for _ in range(d)]
    for i in range(1, d):
        M[i][i - 1] = F.one
    for i in range(d):
        M[i][d - 1] = F.neg(f.coeffs[i])
    return M
