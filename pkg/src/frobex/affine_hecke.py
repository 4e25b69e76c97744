"""The extended affine Hecke algebra of type A1 with equal parameters.

Generators T_s and the invertible lattice element theta = theta_omega, over
a specialised parameter v0 (v0 nonzero, v0^2 not 0 or 1, so the quadratic
relation stays non-degenerate).  Relations:

    (T_s - v0)(T_s + v0^-1) = 0,
    theta T_s = T_s theta^-1 + (v0 - v0^-1) theta     (Bernstein-Lusztig).

The standard basis is T_w theta^j (w in {e, s}, j in Z); the centre is
generated by zeta = theta + theta^-1, and the algebra is free of rank
|W|^2 = 4 over it with lifted basis {T_w a_i}, a_1 = 1, a_2 = theta.
Phi_H picks the centre-coefficient of T_e * theta.

The length filtration H_i (span of T_w a_j with l(w) <= i) is the engine's
termination weight: Bernstein straightening never raises the T-letter count.
"""

from __future__ import annotations

from fractions import Fraction

from .pbw import PBWElement, RewriteSystem
from .scalars import CentralPoly, CycField, CycScalar

ZETA_VAR = ("zeta",)


class AffineHeckeA1:
    def __init__(self, v0, field: CycField | None = None, step_budget: int = 10**6):
        if isinstance(v0, CycScalar):
            field = v0.field
        else:
            field = field or CycField.get(1)
            v0 = field.from_rational(Fraction(v0))
        self.field = field
        sq = v0 * v0
        if not v0 or sq == field.one or not sq:
            raise ValueError("need v0 with v0^2 not in {0, 1}")
        self.v0 = v0
        self.c = v0 - v0.inverse()
        self.variables = ZETA_VAR
        self.rs = RewriteSystem(
            field,
            rewrite_pair=self._rewrite_pair,
            compress=self._compress,
            expand=self._expand,
            weight=self._weight,
            step_budget=step_budget,
        )
        # basis over the centre: (t, i) with t = T-letter count, a_1 = 1, a_2 = theta
        self.basis = [(0, 0), (0, 1), (1, 0), (1, 1)]
        self.basis_index = {b: k for k, b in enumerate(self.basis)}
        self.dim = 4
        self.top_index = self.basis_index[(0, 1)]
        self.unit_index = self.basis_index[(0, 0)]
        self._theta_cache: dict[int, tuple[CentralPoly, CentralPoly]] = {}

    # -- rewrite rules ---------------------------------------------------------

    def _rewrite_pair(self, t1, t2):
        one = self.field.one
        k1, k2 = t1[0], t2[0]
        if k1 == "T":
            if k2 == "T":
                return [((("T",),), self.c), ((), one)]
            return None
        # k1 == "th"
        if k2 == "T":
            e = t1[1]
            if e > 0:
                # theta T = T theta^-1 + (v - v^-1) theta
                return [((("T",), ("th", -1)), one), ((("th", 1),), self.c)]
            # theta^-1 T = T theta - (v - v^-1) theta
            return [((("T",), ("th", 1)), one), ((("th", 1),), -self.c)]
        if t1[1] != t2[1]:
            return [((), one)]  # theta theta^-1 cancels
        return None

    @staticmethod
    def _compress(word):
        t = 0
        j = 0
        for tok in word:
            if tok[0] == "T":
                t += 1
            else:
                j += tok[1]
        return (t, j)

    @staticmethod
    def _expand(mono):
        t, j = mono
        word = [("T",)] * t
        word.extend([("th", 1 if j > 0 else -1)] * abs(j))
        return tuple(word)

    @staticmethod
    def _weight(word):
        return sum(1 for tok in word if tok[0] == "T")

    # -- elements ----------------------------------------------------------------

    def monomial_of(self, key):
        t, i = key
        return (t, i)  # a_1 = theta^0, a_2 = theta^1

    def element_of(self, key) -> PBWElement:
        return PBWElement({self.monomial_of(key): self.field.one})

    def multiply_monomials(self, m1, m2) -> PBWElement:
        return self.rs.multiply_monomials(m1, m2)

    def multiply(self, a: PBWElement, b: PBWElement) -> PBWElement:
        return self.rs.multiply(a, b)

    def straighten_theta_past_T(self, j: int, w: str) -> PBWElement:
        """Exact Bernstein-Lusztig expansion of theta^j T_w."""
        if w == "e":
            return PBWElement({(0, j): self.field.one})
        if w != "s":
            raise ValueError("w must be 'e' or 's'")
        word = self._expand((0, j)) + (("T",),)
        return self.rs.normal_form_word(word)

    # -- centre structure -----------------------------------------------------------

    def theta_power_coords(self, j: int) -> tuple[CentralPoly, CentralPoly]:
        """theta^j = r0(zeta) * 1 + r1(zeta) * theta via theta^2 = zeta theta - 1."""
        cached = self._theta_cache.get(j)
        if cached is not None:
            return cached
        fld = self.field
        zero = CentralPoly.zero(ZETA_VAR)
        one = CentralPoly.constant(ZETA_VAR, fld.one)
        zeta = CentralPoly.variable(ZETA_VAR, "zeta", fld.one)
        if j == 0:
            out = (one, zero)
        elif j == 1:
            out = (zero, one)
        elif j > 1:
            r0, r1 = self.theta_power_coords(j - 1)
            s0, s1 = self.theta_power_coords(j - 2)
            out = (zeta * r0 - s0, zeta * r1 - s1)
        else:
            r0, r1 = self.theta_power_coords(j + 1)
            s0, s1 = self.theta_power_coords(j + 2)
            out = (zeta * r0 - s0, zeta * r1 - s1)
        self._theta_cache[j] = out
        return out

    def decompose(self, elt: PBWElement) -> dict[int, CentralPoly]:
        out: dict[int, CentralPoly] = {}
        for (t, j), c in elt.items():
            r0, r1 = self.theta_power_coords(j)
            for i, r in ((0, r0), (1, r1)):
                if not r:
                    continue
                idx = self.basis_index[(t, i)]
                contrib = r.scale(c)
                cur = out.get(idx)
                s = contrib if cur is None else cur + contrib
                if s:
                    out[idx] = s
                elif cur is not None:
                    del out[idx]
        return out

    def phi(self, elt: PBWElement) -> CentralPoly:
        """Phi_H: the centre-coefficient of T_e * theta."""
        acc = CentralPoly.zero(ZETA_VAR)
        for (t, j), c in elt.items():
            if t != 0:
                continue
            r1 = self.theta_power_coords(j)[1]
            if r1:
                acc = acc + r1.scale(c)
        return acc

    # -- hypothesis machinery -----------------------------------------------------------

    _WITNESS_UNITS = {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): -1}

    def witness(self, idx: int):
        """Witness T_{w^-1} a^i with dual lifts a^1 = theta, a^2 = 1."""
        t, i = self.basis[idx]
        mono = (t, 1 - i)
        unit = self.field.from_rational(self._WITNESS_UNITS[(t, i)])
        return PBWElement({mono: self.field.one}), unit

    def leading_of(self, coords: dict[int, CentralPoly]) -> int:
        """Minimal T-length block first, then the max-degree lift in it."""
        live = [idx for idx in coords if coords[idx]]
        if not live:
            raise ValueError("zero element has no leading term")
        tmin = min(self.basis[idx][0] for idx in live)
        cands = [idx for idx in live if self.basis[idx][0] == tmin]
        return max(cands, key=lambda idx: self.basis[idx][1])

    def leading_T_coefficient_test(self) -> list[tuple[str, str, bool]]:
        """Exhaustive check of: h_e != 0 in T_x T_w implies w = x^-1."""
        results = []
        for tx, xn in ((0, "e"), (1, "s")):
            for tw, wn in ((0, "e"), (1, "s")):
                prod = self.multiply_monomials((tx, 0), (tw, 0))
                h_e_nonzero = any(t == 0 and c for (t, _), c in prod.items())
                ok = (not h_e_nonzero) or (xn == wn == "s") or (xn == wn == "e")
                results.append((xn, wn, ok))
        return results

    # -- characters ----------------------------------------------------------------------

    def character(self, zeta0) -> dict[str, CycScalar]:
        if not isinstance(zeta0, CycScalar):
            zeta0 = self.field.from_rational(Fraction(zeta0))
        return {"zeta": zeta0}

    def label(self, idx: int) -> str:
        t, i = self.basis[idx]
        tw = "Te" if t == 0 else "Ts"
        return f"{tw}*theta" if i else tw
