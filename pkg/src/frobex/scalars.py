"""Exact arithmetic in cyclotomic fields, plus sparse central polynomials.

Everything downstream of this module is exact.  Scalars live in Q(zeta_n)
for a root-of-unity order n fixed per algebra instance, represented in the
power basis {zeta^i : 0 <= i < phi(n)} modulo the n-th cyclotomic
polynomial.  Elements of central subalgebras are sparse polynomials in named
central generators with cyclotomic coefficients; exponents may be negative
(Laurent monomials) so that inverted central generators such as K^{-l} have
a canonical home.

All values are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

_F0 = Fraction(0)
_F1 = Fraction(1)


class ScalarError(ValueError):
    """Raised on invalid scalar arithmetic (order mismatch, bad division)."""


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_exact(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Quotient of an exact polynomial division (remainder must be zero)."""
    num = list(num)
    dlead = den[-1]
    q = [_F0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / dlead
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    poly = [-_F1] + [_F0] * (n - 1) + [_F1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divmod_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


_FIELD_CACHE: dict[int, "CycField"] = {}


class CycField:
    """Interned context for Q(zeta_n): reduction tables and constants."""

    __slots__ = ("order", "phi", "cyclo", "_red", "zero", "one", "zeta", "_zeta_pows")

    def __init__(self, n: int):
        if n < 1:
            raise ScalarError(f"invalid cyclotomic order {n}")
        self.order = n
        self.phi = euler_phi(n) if n > 1 else 1
        self.cyclo = cyclotomic_polynomial(n) if n > 1 else (-(_F1), _F1)
        d = self.phi
        # x^k mod cyclo for k = d .. 2d-2, as coefficient tuples
        red: list[tuple[Fraction, ...]] = []
        base = [-c for c in self.cyclo[:d]]  # x^d = base
        red.append(tuple(base))
        for _ in range(d - 2):
            prev = red[-1]
            nxt = [_F0] + list(prev[: d - 1])
            top = prev[d - 1]
            if top:
                for i in range(d):
                    nxt[i] += top * base[i]
            red.append(tuple(nxt))
        self._red = red
        self.zero = CycScalar(self, (_F0,) * d)
        self.one = CycScalar(self, (_F1,) + (_F0,) * (d - 1))
        if n == 1:
            self.zeta = self.one
        elif d == 1:
            self.zeta = CycScalar(self, tuple(base))  # e.g. zeta_2 = -1
        else:
            self.zeta = CycScalar(self, (_F0, _F1) + (_F0,) * (d - 2))
        pows = [self.one]
        for _ in range(n - 1):
            pows.append(pows[-1] * self.zeta)
        self._zeta_pows = pows

    @staticmethod
    def get(n: int) -> "CycField":
        fld = _FIELD_CACHE.get(n)
        if fld is None:
            fld = CycField(n)
            _FIELD_CACHE[n] = fld
        return fld

    def from_rational(self, r) -> "CycScalar":
        r = Fraction(r)
        if not r:
            return self.zero
        return CycScalar(self, (r,) + (_F0,) * (self.phi - 1))

    def scalar(self, coeffs: Iterable) -> "CycScalar":
        c = tuple(Fraction(x) for x in coeffs)
        if len(c) != self.phi:
            raise ScalarError(
                f"need {self.phi} power-basis coefficients for order {self.order}, got {len(c)}"
            )
        return CycScalar(self, c)

    def root_power(self, k: int) -> "CycScalar":
        """zeta_n^k for any integer k."""
        return self._zeta_pows[k % self.order]

    def _reduce(self, conv: list[Fraction]) -> tuple[Fraction, ...]:
        d = self.phi
        out = conv[:d]
        red = self._red
        for k in range(d, len(conv)):
            ck = conv[k]
            if ck:
                row = red[k - d]
                for i in range(d):
                    out[i] += ck * row[i]
        return tuple(out)


class CycScalar:
    """An element of Q(zeta_n) in the power basis."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: CycField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    # -- coercion -----------------------------------------------------------

    def _pair(self, other):
        """Coerce `other` alongside self; rational embedding only."""
        if isinstance(other, CycScalar):
            if other.field is self.field:
                return self, other
            if other.field.order == 1:
                return self, self.field.from_rational(other.coeffs[0])
            if self.field.order == 1:
                return other.field.from_rational(self.coeffs[0]), other
            raise ScalarError(
                f"incompatible cyclotomic orders {self.field.order} and {other.field.order}"
            )
        if isinstance(other, (int, Fraction)):
            return self, self.field.from_rational(other)
        return self, None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if b is None:
            return NotImplemented
        return CycScalar(a.field, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.field, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._pair(other)
        if b is None:
            return NotImplemented
        return CycScalar(a.field, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        a, b = self._pair(other)
        if b is None:
            return NotImplemented
        fld = a.field
        d = fld.phi
        ac, bc = a.coeffs, b.coeffs
        if d == 1:
            return CycScalar(fld, (ac[0] * bc[0],))
        conv = [_F0] * (2 * d - 1)
        for i, ai in enumerate(ac):
            if ai:
                for j, bj in enumerate(bc):
                    if bj:
                        conv[i + j] += ai * bj
        return CycScalar(fld, fld._reduce(conv))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        fld = self.field
        if fld.phi == 1:
            return CycScalar(fld, (1 / self.coeffs[0],))
        # extended Euclid: s*a + t*cyclo = gcd = const
        a = list(self.coeffs)
        b = list(fld.cyclo)
        sa, sb = [_F1], [_F0]
        while True:
            while a and not a[-1]:
                a.pop()
            if len(a) == 1:
                inv = 1 / a[0]
                out = [c * inv for c in sa] + [_F0] * fld.phi
                return CycScalar(fld, fld._reduce(out[: 2 * fld.phi - 1]))
            if len(a) > len(b):
                a, b, sa, sb = b, a, sb, sa
                continue
            # b -= (lead b / lead a) x^(db-da) * a
            shift = len(b) - len(a)
            c = b[-1] / a[-1]
            for i, ai in enumerate(a):
                b[shift + i] -= c * ai
            b.pop()
            grow = shift + len(sa)
            if len(sb) < grow:
                sb = sb + [_F0] * (grow - len(sb))
            for i, si in enumerate(sa):
                sb[shift + i] -= c * si
            a, b, sa, sb = b, a, sb, sa

    def __truediv__(self, other):
        a, b = self._pair(other)
        if b is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        if other.field is not self.field:
            try:
                a, b = self._pair(other)
            except ScalarError:
                return False
            return a.coeffs == b.coeffs
        return self.coeffs == other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.coeffs) if self.field.order > 1 else hash(self.coeffs[0])
            self._hash = h
        return h

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ScalarError(f"{self} is not rational")
        return self.coeffs[0]

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if k == 0:
                parts.append(cs)
            elif k == 1:
                parts.append(f"{cs}*z")
            else:
                parts.append(f"{cs}*z^{k}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"CycScalar({self.field.order}; {self})"


def cyc_arith(a: CycScalar, b: CycScalar, op: str) -> CycScalar:
    """Dispatcher form of field arithmetic: op in {'add', 'mul', 'div'}."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ScalarError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Central polynomials
# ---------------------------------------------------------------------------

CentralCharacter = Mapping[str, CycScalar]


class CentralPoly:
    """Sparse (Laurent) polynomial in named central generators.

    Terms map exponent vectors (tuples of ints, negatives allowed) to nonzero
    CycScalar coefficients.  The variable list is fixed per algebra instance;
    printing follows graded-lex order on exponent vectors.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: tuple[str, ...], terms: dict[tuple[int, ...], CycScalar]):
        self.variables = variables
        self.terms = terms

    @classmethod
    def zero(cls, variables) -> "CentralPoly":
        return cls(tuple(variables), {})

    @classmethod
    def constant(cls, variables, value: CycScalar) -> "CentralPoly":
        variables = tuple(variables)
        if not value:
            return cls(variables, {})
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def monomial(cls, variables, exponents, value: CycScalar) -> "CentralPoly":
        variables = tuple(variables)
        if not value:
            return cls(variables, {})
        return cls(variables, {tuple(exponents): value})

    @classmethod
    def variable(cls, variables, name: str, one: CycScalar) -> "CentralPoly":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): one})

    def _check(self, other: "CentralPoly"):
        if self.variables != other.variables:
            raise ScalarError(
                f"central polynomials over different variables: {self.variables} vs {other.variables}"
            )

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e)
            s = c if acc is None else acc + c
            if s:
                terms[e] = s
            elif acc is not None:
                del terms[e]
        return CentralPoly(self.variables, terms)

    def __neg__(self):
        return CentralPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            return self.scale(other)
        self._check(other)
        terms: dict[tuple[int, ...], CycScalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = terms.get(e)
                s = c if acc is None else acc + c
                if s:
                    terms[e] = s
                elif acc is not None:
                    del terms[e]
        return CentralPoly(self.variables, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "CentralPoly":
        if not c:
            return CentralPoly(self.variables, {})
        return CentralPoly(self.variables, {e: v * c for e, v in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            if not other:
                return not self.terms
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, CentralPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def is_constant(self) -> bool:
        if not self.terms:
            return True
        if len(self.terms) > 1:
            return False
        (e,) = self.terms
        return not any(e)

    def constant_value(self) -> CycScalar:
        for e, c in self.terms.items():
            if any(e):
                raise ScalarError(f"{self} is not constant")
            return c
        raise ScalarError("constant_value of zero polynomial (no field context)")

    def is_unit(self) -> bool:
        """Invertible in the polynomial ring: nonzero constant only."""
        return bool(self.terms) and self.is_constant()

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def eval(self, chi: CentralCharacter, zero: CycScalar) -> CycScalar:
        """Exact evaluation at a central character (ring homomorphism)."""
        acc = zero
        for e, c in self.terms.items():
            val = c
            for i, k in enumerate(e):
                if k == 0:
                    continue
                name = self.variables[i]
                if name not in chi:
                    raise ScalarError(f"character missing assignment for {name!r}")
                x = chi[name]
                if k < 0:
                    x = x.inverse()
                    k = -k
                for _ in range(k):
                    val = val * x
            acc = acc + val
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t)):
            c = self.terms[e]
            cs = str(c)
            if " + " in cs:
                cs = f"({cs})"
            factors = [
                f"{v}^{k}" if k != 1 else v
                for v, k in zip(self.variables, e)
                if k
            ]
            if not factors:
                parts.append(cs)
            elif cs == "1":
                parts.append("*".join(factors))
            else:
                parts.append("*".join([cs] + factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"CentralPoly({self})"


def poly_eval(p: CentralPoly, chi: CentralCharacter, zero: CycScalar) -> CycScalar:
    return p.eval(chi, zero)
