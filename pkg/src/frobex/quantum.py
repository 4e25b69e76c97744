"""U_eps(sl2) at an odd root of unity, its Borel, and the localised
quantised function algebra of SL2 on the tensor-embedding presentation.

Root datum (rank 1, simply connected form): weight lattice P = Z.omega,
root lattice Q = Z.alpha with alpha = 2 omega, and the W-equivariant pairing
P x Q -> Z normalised by (alpha, alpha) = 2, so (omega, alpha) = 1 and
rho = omega.  Exponents such as (2 rho, lambda) are computed from this
record, never hand-entered.

U_eps(sl2): generators E, F, K = K_omega, K^-1 with

    K E K^-1 = eps E,   K F K^-1 = eps^-1 F,
    E F - F E = (K^2 - K^-2) / (eps - eps^-1),

PBW basis F^k K^c E^m (k, m >= 0, c in Z), l-centre spanned by l-th powers,
free basis B' with 0 <= k, c, m < l.  Centrality of E^l, F^l, K^l is
verified computationally at build time; failure aborts construction (it
would signal a wrong pairing normalisation).

The function algebra lives in the eps^-1-parameter tensor square of the
Borels and is generated by f = F ex 1, e = 1 ex E, k = K_{-omega} ex K_omega,
giving the presentation e f = f e, k e = eps^-1 e k, k f = eps^-1 f k with
k invertible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pbw import PBWElement, RewriteSystem
from .scalars import CentralPoly, CycField, CycScalar


class QuantumBuildError(RuntimeError):
    pass


@dataclass(frozen=True)
class RootDatumSL2:
    """P = Z.omega, Q = Z.alpha, alpha = 2 omega, (alpha, alpha) = 2."""

    def pairing(self, weight_coeff: int, root_coeff: int) -> int:
        # (a.omega, b.alpha) = a * b * (omega, alpha) = a * b
        return weight_coeff * root_coeff

    @property
    def two_rho_root_coeff(self) -> int:
        return 1  # 2 rho = alpha

    def two_rho_pairing(self, weight_coeff: int) -> int:
        """(2 rho, lambda) for lambda = weight_coeff * omega."""
        return self.pairing(weight_coeff, self.two_rho_root_coeff)


def _require_odd_ell(ell: int):
    if ell < 3 or ell % 2 == 0:
        raise QuantumBuildError(f"need an odd l >= 3, got {ell}")


class QuantumSL2:
    def __init__(self, ell: int, step_budget: int = 10**6):
        _require_odd_ell(ell)
        self.ell = ell
        self.field = CycField.get(ell)
        self.eps = self.field.zeta
        self.datum = RootDatumSL2()
        fld = self.field
        self._q = (self.eps - self.eps.inverse()).inverse()
        self.rs = RewriteSystem(
            fld,
            rewrite_pair=self._rewrite_pair,
            compress=self._compress,
            expand=self._expand,
            weight=self._weight,
            step_budget=step_budget,
        )
        self.variables = ("Fl", "Kl", "El")
        self.basis = [
            (k, c, m) for k in range(ell) for c in range(ell) for m in range(ell)
        ]
        self.basis_index = {b: i for i, b in enumerate(self.basis)}
        self.dim = ell**3
        self.top_index = self.basis_index[(ell - 1, 0, ell - 1)]
        self.unit_index = self.basis_index[(0, 0, 0)]
        self.max_deg = 2 * (ell - 1)  # one positive root of height 1
        self._ef_cache: dict = {}
        self._mul_cache: dict = {}
        self._check_centrality()

    # -- rewrite rules ---------------------------------------------------------

    def _rewrite_pair(self, t1, t2):
        k1, k2 = t1[0], t2[0]
        one = self.field.one
        if k1 == "K":
            if k2 == "F":
                return [((t2, t1), self.field.root_power(-t1[1]))]
            if k2 == "K" and t1[1] != t2[1]:
                return [((), one)]
            return None
        if k1 == "E":
            if k2 == "K":
                return [((t2, t1), self.field.root_power(-t2[1]))]
            if k2 == "F":
                q = self._q
                return [
                    ((t2, t1), one),
                    ((("K", 1), ("K", 1)), q),
                    ((("K", -1), ("K", -1)), -q),
                ]
            return None
        return None  # F letters commute among themselves and sit first

    @staticmethod
    def _compress(word):
        k = c = m = 0
        for t in word:
            if t[0] == "F":
                k += 1
            elif t[0] == "K":
                c += t[1]
            else:
                m += 1
        return (k, c, m)

    @staticmethod
    def _expand(mono):
        k, c, m = mono
        word = [("F",)] * k
        word.extend([("K", 1 if c > 0 else -1)] * abs(c))
        word.extend([("E",)] * m)
        return tuple(word)

    @staticmethod
    def _weight(word):
        return sum(1 for t in word if t[0] != "K")

    # -- structured multiplication ------------------------------------------------

    def ef(self, m: int, k: int) -> PBWElement:
        """Normal form of E^m F^k, built by recursion on the defining relation."""
        key = (m, k)
        cached = self._ef_cache.get(key)
        if cached is not None:
            return cached
        fld = self.field
        one = fld.one
        if m == 0 or k == 0:
            out = PBWElement({(k, 0, m): one})
        elif m == 1 and k == 1:
            q = self._q
            out = PBWElement({(1, 0, 1): one, (0, 2, 0): q, (0, -2, 0): -q})
        elif m == 1:
            out = PBWElement({})
            for (a, b, c), coeff in self.ef(1, 1).items():
                if c == 0:
                    # F^a K^b F^(k-1) = eps^(-b(k-1)) F^(a+k-1) K^b
                    out.add_term(
                        (a + k - 1, b, 0), coeff * fld.root_power(-b * (k - 1))
                    )
                else:
                    # F^a K^b (E F^(k-1))
                    for (a2, b2, c2), coeff2 in self.ef(1, k - 1).items():
                        out.add_term(
                            (a + a2, b + b2, c2),
                            coeff * coeff2 * fld.root_power(-b * a2),
                        )
        else:
            out = PBWElement({})
            for (a, b, c), coeff in self.ef(1, k).items():
                # E^(m-1) F^a K^b E^c
                for (a2, b2, c2), coeff2 in self.ef(m - 1, a).items():
                    out.add_term(
                        (a2, b2 + b, c2 + c),
                        coeff * coeff2 * fld.root_power(-c2 * b),
                    )
        self._ef_cache[key] = out
        return out

    def multiply_monomials(self, m1, m2) -> PBWElement:
        key = (m1, m2)
        cached = self._mul_cache.get(key)
        if cached is not None:
            return cached
        k1, c1, e1 = m1
        k2, c2, e2 = m2
        fld = self.field
        out = PBWElement({})
        for (a, b, c), coeff in self.ef(e1, k2).items():
            # F^k1 K^c1 (F^a K^b E^c) K^c2 E^m2
            scale = fld.root_power(-c1 * a - c * c2)
            out.add_term((k1 + a, c1 + b + c2, c + e2), coeff * scale)
        self._mul_cache[key] = out
        return out

    def multiply(self, a: PBWElement, b: PBWElement) -> PBWElement:
        out = PBWElement({})
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                c = c1 * c2
                for m, v in self.multiply_monomials(m1, m2).items():
                    out.add_term(m, v * c)
        return out

    def multiply_raw(self, a: PBWElement, b: PBWElement) -> PBWElement:
        return self.rs.multiply(a, b)

    def _check_centrality(self):
        ell = self.ell
        centrals = [(ell, 0, 0), (0, ell, 0), (0, 0, ell)]
        gens = [(1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1)]
        for z in centrals:
            for g in gens:
                zg = self.multiply_monomials(z, g)
                gz = self.multiply_monomials(g, z)
                if zg != gz:
                    raise QuantumBuildError(
                        f"l-th power {z} fails to commute with generator {g}; "
                        "wrong pairing normalisation?"
                    )

    # -- l-centre structure ------------------------------------------------------

    def monomial_of(self, key):
        return key

    def element_of(self, key) -> PBWElement:
        return PBWElement({key: self.field.one})

    def _central_part(self, k: int, c: int, m: int):
        ell = self.ell
        c0 = c % ell
        return (k % ell, c0, m % ell), (k // ell, (c - c0) // ell, m // ell)

    def decompose(self, elt: PBWElement) -> dict[int, CentralPoly]:
        out: dict[int, CentralPoly] = {}
        for (k, c, m), coeff in elt.items():
            rep, exps = self._central_part(k, c, m)
            idx = self.basis_index[rep]
            contrib = CentralPoly.monomial(self.variables, exps, coeff)
            cur = out.get(idx)
            s = contrib if cur is None else cur + contrib
            if s:
                out[idx] = s
            elif cur is not None:
                del out[idx]
        return out

    def phi(self, elt: PBWElement) -> CentralPoly:
        """The l-centre coefficient of F^(l-1) K^0 E^(l-1)."""
        ell = self.ell
        acc = CentralPoly.zero(self.variables)
        for (k, c, m), coeff in elt.items():
            rep, exps = self._central_part(k, c, m)
            if rep == (ell - 1, 0, ell - 1):
                acc = acc + CentralPoly.monomial(self.variables, exps, coeff)
        return acc

    # -- degrees -------------------------------------------------------------------

    @staticmethod
    def deg(mono) -> int:
        k, _, m = mono
        return k + m

    @staticmethod
    def total_degree_key(mono):
        """Reverse-lex total degree d = (k, m, deg): last coordinate dominates."""
        k, _, m = mono
        return (k + m, m, k)

    def qgrade(self, mono) -> int:
        """Q-grading in units of alpha: m - k."""
        k, _, m = mono
        return m - k

    # -- hypothesis machinery ---------------------------------------------------------

    def witness(self, idx: int):
        k, c, m = self.basis[idx]
        ell = self.ell
        return PBWElement({(ell - 1 - k, -c, ell - 1 - m): self.field.one}), None

    def leading_of(self, coords: dict[int, CentralPoly]) -> int:
        live = [idx for idx in coords if coords[idx]]
        if not live:
            raise ValueError("zero element has no leading term")
        return max(live, key=lambda idx: self.total_degree_key(self.basis[idx]) + (-idx,))

    # -- characters ----------------------------------------------------------------------

    def character(self, phi_f, phi_k, phi_e) -> dict[str, CycScalar]:
        fld = self.field
        vals = []
        for x in (phi_f, phi_k, phi_e):
            if not isinstance(x, CycScalar):
                x = fld.from_rational(x)
            vals.append(x)
        if not vals[1]:
            raise ValueError("K^l must be sent to a unit")
        return dict(zip(self.variables, vals))

    def label(self, idx: int) -> str:
        k, c, m = self.basis[idx]
        return f"F^{k} K^{c} E^{m}"


class QuantumBorelSL2:
    """The non-negative Borel: K^(+-1), E with K E = eps E K."""

    def __init__(self, ell: int, step_budget: int = 10**6):
        _require_odd_ell(ell)
        self.ell = ell
        self.field = CycField.get(ell)
        self.eps = self.field.zeta
        self.datum = RootDatumSL2()
        self.rs = RewriteSystem(
            self.field,
            rewrite_pair=self._rewrite_pair,
            compress=self._compress,
            expand=self._expand,
            weight=self._weight,
            step_budget=step_budget,
        )
        self.variables = ("Kl", "El")
        self.basis = [(c, m) for c in range(ell) for m in range(ell)]
        self.basis_index = {b: i for i, b in enumerate(self.basis)}
        self.dim = ell**2
        self.top_index = self.basis_index[(0, ell - 1)]
        self.unit_index = self.basis_index[(0, 0)]
        self._check_centrality()

    def _rewrite_pair(self, t1, t2):
        if t1[0] == "E" and t2[0] == "K":
            return [((t2, t1), self.field.root_power(-t2[1]))]
        if t1[0] == "K" and t2[0] == "K" and t1[1] != t2[1]:
            return [((), self.field.one)]
        return None

    @staticmethod
    def _compress(word):
        c = m = 0
        for t in word:
            if t[0] == "K":
                c += t[1]
            else:
                m += 1
        return (c, m)

    @staticmethod
    def _expand(mono):
        c, m = mono
        word = [("K", 1 if c > 0 else -1)] * abs(c)
        word.extend([("E",)] * m)
        return tuple(word)

    @staticmethod
    def _weight(word):
        return sum(1 for t in word if t[0] == "E")

    def monomial_of(self, key):
        return key

    def element_of(self, key) -> PBWElement:
        return PBWElement({key: self.field.one})

    def multiply_monomials(self, m1, m2) -> PBWElement:
        (c1, e1), (c2, e2) = m1, m2
        scale = self.field.root_power(-e1 * c2)  # E^e1 K^c2 = eps^(-e1 c2) K^c2 E^e1
        return PBWElement({(c1 + c2, e1 + e2): scale})

    def multiply(self, a: PBWElement, b: PBWElement) -> PBWElement:
        out = PBWElement({})
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                for m, v in self.multiply_monomials(m1, m2).items():
                    out.add_term(m, v * c1 * c2)
        return out

    def multiply_raw(self, a, b):
        return self.rs.multiply(a, b)

    def _check_centrality(self):
        ell = self.ell
        for z in [(ell, 0), (0, ell)]:
            for g in [(1, 0), (-1, 0), (0, 1)]:
                if self.multiply_monomials(z, g) != self.multiply_monomials(g, z):
                    raise QuantumBuildError(f"{z} not central against {g}")

    def _central_part(self, c: int, m: int):
        ell = self.ell
        c0 = c % ell
        return (c0, m % ell), ((c - c0) // ell, m // ell)

    def decompose(self, elt: PBWElement) -> dict[int, CentralPoly]:
        out: dict[int, CentralPoly] = {}
        for (c, m), coeff in elt.items():
            rep, exps = self._central_part(c, m)
            idx = self.basis_index[rep]
            contrib = CentralPoly.monomial(self.variables, exps, coeff)
            cur = out.get(idx)
            s = contrib if cur is None else cur + contrib
            if s:
                out[idx] = s
            elif cur is not None:
                del out[idx]
        return out

    def phi(self, elt: PBWElement) -> CentralPoly:
        ell = self.ell
        acc = CentralPoly.zero(self.variables)
        for (c, m), coeff in elt.items():
            rep, exps = self._central_part(c, m)
            if rep == (0, ell - 1):
                acc = acc + CentralPoly.monomial(self.variables, exps, coeff)
        return acc

    def witness(self, idx: int):
        c, m = self.basis[idx]
        return PBWElement({(-c, self.ell - 1 - m): self.field.one}), None

    def leading_of(self, coords) -> int:
        live = [idx for idx in coords if coords[idx]]
        if not live:
            raise ValueError("zero element has no leading term")
        return max(live, key=lambda idx: (self.basis[idx][1], -idx))

    def character(self, phi_k, phi_e) -> dict[str, CycScalar]:
        fld = self.field
        vals = []
        for x in (phi_k, phi_e):
            if not isinstance(x, CycScalar):
                x = fld.from_rational(x)
            vals.append(x)
        if not vals[0]:
            raise ValueError("K^l must be sent to a unit")
        return dict(zip(self.variables, vals))

    def nakayama_k_exponent(self) -> int:
        """(2 rho, omega) from the root datum: expected K-eigenvalue exponent."""
        return self.datum.two_rho_pairing(1)

    def label(self, idx: int) -> str:
        c, m = self.basis[idx]
        return f"K^{c} E^{m}"


class QuantumFunctionSL2:
    """O_eps[SL2][z^-1] on the tensor-embedding basis f^k kgen^c e^m.

    Relations realised by the embedding into the eps^-1-parameter Borel
    tensor square: e f = f e, k e = eps^-1 e k, k f = eps^-1 f k.
    """

    def __init__(self, ell: int, step_budget: int = 10**6):
        _require_odd_ell(ell)
        self.ell = ell
        self.field = CycField.get(ell)
        self.eps = self.field.zeta
        self.datum = RootDatumSL2()
        self.rs = RewriteSystem(
            self.field,
            rewrite_pair=self._rewrite_pair,
            compress=self._compress,
            expand=self._expand,
            weight=self._weight,
            step_budget=step_budget,
        )
        self.variables = ("fl", "kl", "el")
        self.basis = [
            (k, c, m) for k in range(ell) for c in range(ell) for m in range(ell)
        ]
        self.basis_index = {b: i for i, b in enumerate(self.basis)}
        self.dim = ell**3
        self.top_index = self.basis_index[(ell - 1, 0, ell - 1)]
        self.unit_index = self.basis_index[(0, 0, 0)]
        self._check_centrality()

    def _rewrite_pair(self, t1, t2):
        k1, k2 = t1[0], t2[0]
        one = self.field.one
        if k1 == "k":
            if k2 == "f":
                return [((t2, t1), self.field.root_power(-t1[1]))]
            if k2 == "k" and t1[1] != t2[1]:
                return [((), one)]
            return None
        if k1 == "e":
            if k2 == "f":
                return [((t2, t1), one)]
            if k2 == "k":
                return [((t2, t1), self.field.root_power(t2[1]))]
            return None
        return None

    @staticmethod
    def _compress(word):
        k = c = m = 0
        for t in word:
            if t[0] == "f":
                k += 1
            elif t[0] == "k":
                c += t[1]
            else:
                m += 1
        return (k, c, m)

    @staticmethod
    def _expand(mono):
        k, c, m = mono
        word = [("f",)] * k
        word.extend([("k", 1 if c > 0 else -1)] * abs(c))
        word.extend([("e",)] * m)
        return tuple(word)

    @staticmethod
    def _weight(word):
        return sum(1 for t in word if t[0] != "k")

    def monomial_of(self, key):
        return key

    def element_of(self, key) -> PBWElement:
        return PBWElement({key: self.field.one})

    def multiply_monomials(self, m1, m2) -> PBWElement:
        (k1, c1, e1), (k2, c2, e2) = m1, m2
        # k^c1 past f^k2 gives eps^(-c1 k2); e^e1 past k^c2 gives eps^(e1 c2)
        scale = self.field.root_power(e1 * c2 - c1 * k2)
        return PBWElement({(k1 + k2, c1 + c2, e1 + e2): scale})

    def multiply(self, a: PBWElement, b: PBWElement) -> PBWElement:
        out = PBWElement({})
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                for m, v in self.multiply_monomials(m1, m2).items():
                    out.add_term(m, v * c1 * c2)
        return out

    def multiply_raw(self, a, b):
        return self.rs.multiply(a, b)

    def _check_centrality(self):
        ell = self.ell
        centrals = [(ell, 0, 0), (0, ell, 0), (0, 0, ell)]
        gens = [(1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1)]
        for z in centrals:
            for g in gens:
                if self.multiply_monomials(z, g) != self.multiply_monomials(g, z):
                    raise QuantumBuildError(f"{z} not central against {g}")

    def _central_part(self, k: int, c: int, m: int):
        ell = self.ell
        c0 = c % ell
        return (k % ell, c0, m % ell), (k // ell, (c - c0) // ell, m // ell)

    def decompose(self, elt: PBWElement) -> dict[int, CentralPoly]:
        out: dict[int, CentralPoly] = {}
        for (k, c, m), coeff in elt.items():
            rep, exps = self._central_part(k, c, m)
            idx = self.basis_index[rep]
            contrib = CentralPoly.monomial(self.variables, exps, coeff)
            cur = out.get(idx)
            s = contrib if cur is None else cur + contrib
            if s:
                out[idx] = s
            elif cur is not None:
                del out[idx]
        return out

    def phi(self, elt: PBWElement) -> CentralPoly:
        ell = self.ell
        acc = CentralPoly.zero(self.variables)
        for (k, c, m), coeff in elt.items():
            rep, exps = self._central_part(k, c, m)
            if rep == (ell - 1, 0, ell - 1):
                acc = acc + CentralPoly.monomial(self.variables, exps, coeff)
        return acc

    def witness(self, idx: int):
        k, c, m = self.basis[idx]
        ell = self.ell
        return PBWElement({(ell - 1 - k, -c, ell - 1 - m): self.field.one}), None

    def leading_of(self, coords) -> int:
        live = [idx for idx in coords if coords[idx]]
        if not live:
            raise ValueError("zero element has no leading term")
        return max(
            live,
            key=lambda idx: (
                self.basis[idx][0] + self.basis[idx][2],
                self.basis[idx][2],
                -idx,
            ),
        )

    def character(self, phi_f, phi_k, phi_e) -> dict[str, CycScalar]:
        fld = self.field
        vals = []
        for x in (phi_f, phi_k, phi_e):
            if not isinstance(x, CycScalar):
                x = fld.from_rational(x)
            vals.append(x)
        if not vals[1]:
            raise ValueError("k^l must be sent to a unit")
        return dict(zip(self.variables, vals))

    def nakayama_k_exponent_magnitude(self) -> int:
        """|2 (2 rho, omega)| from the root datum."""
        return 2 * self.datum.two_rho_pairing(1)

    def label(self, idx: int) -> str:
        k, c, m = self.basis[idx]
        return f"f^{k} k^{c} e^{m}"
