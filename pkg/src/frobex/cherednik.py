"""The rational Cherednik algebra at t = 0 over a complex reflection group.

Generators: the group W, a basis x_1..x_n of V and the dual basis y_1..y_n
of V*.  Group elements conjugate V and V* by the reflection representation
and its dual; V and V* are each commutative; the cross relation is

    [x, y] = sum_s c(s) <y, acheck_s> <alpha_s, x> s

summed over the reflections, with c constant on conjugacy classes and the
root data normalised so <alpha_s, acheck_s> = 2.  The PBW basis over the
bi-invariant centre Z = S(V)^W (x) S(V*)^W is {a_i w b_j} with monomial
lifts a_i, b_j of the two coinvariant bases, |W|^3 elements in all.

The functional Phi picks the Z-coefficient of a_max * e * b_max.  Products
of basis monomials are assembled around an engine-straightened middle kernel
y^beta * x^gamma (the only out-of-order block), which keeps the |W|^3 x
|W|^3 Gram computation tractable; the assembly uses only the conjugation
relation and is cross-checked against raw word rewriting in the tests.
"""

from __future__ import annotations

from fractions import Fraction

from .pbw import PBWElement, RewriteSystem
from .reflection import ReflectionGroup, build_group, coinvariant_data
from .scalars import CentralPoly, CycScalar


class CherednikAlgebra:
    def __init__(self, group, c=None, step_budget: int = 10**6):
        if isinstance(group, str):
            group = build_group(group)
        self.group: ReflectionGroup = group
        self.field = group.field
        fld = self.field
        if c is None:
            c = fld.one
        if isinstance(c, (int, Fraction)):
            c = fld.from_rational(c)
        if isinstance(c, CycScalar):
            c = [c] * group.reflection_class_count
        if len(c) != group.reflection_class_count:
            raise ValueError(
                f"need {group.reflection_class_count} c-values "
                f"(one per reflection class), got {len(c)}"
            )
        self.cparams = [x if isinstance(x, CycScalar) else fld.from_rational(x) for x in c]

        self.coinv_v = coinvariant_data(group, "V", "p")
        self.coinv_w = coinvariant_data(group, "V*", "q")
        self.variables = self.coinv_v.var_names + self.coinv_w.var_names
        self._np = len(self.coinv_v.var_names)
        self._nq = len(self.coinv_w.var_names)

        n = group.dim
        self._zero_exp = (0,) * n
        # cross-relation coefficients: cross[i][j] = sum_s c(s) acheck_s[i] alpha_s[j] s
        self._cross = [[[] for _ in range(n)] for _ in range(n)]
        for refl in group.reflections:
            cs = self.cparams[refl.conj_class]
            for i in range(n):
                yi = refl.alpha_check[i]
                if not yi:
                    continue
                for j in range(n):
                    xj = refl.alpha[j]
                    coeff = cs * yi * xj
                    if coeff:
                        self._cross[i][j].append((refl.element, coeff))

        self.rs = RewriteSystem(
            fld,
            rewrite_pair=self._rewrite_pair,
            compress=self._compress,
            expand=self._expand,
            weight=self._weight,
            step_budget=step_budget,
        )

        # PBW basis over the bi-invariant centre: a_i w b_j, monomial lifts
        self.basis: list[tuple[int, int, int]] = []
        for i in range(group.size):
            for w in range(group.size):
                for j in range(group.size):
                    self.basis.append((i, w, j))
        self.basis_index = {b: k for k, b in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.top_index = self.basis_index[
            (self.coinv_v.max_index, 0, self.coinv_w.max_index)
        ]
        self.unit_index = self.basis_index[(0, 0, 0)]
        self._mul_cache: dict = {}

    # -- rewrite rules ---------------------------------------------------------

    def _rewrite_pair(self, t1, t2):
        k1 = t1[0]
        k2 = t2[0]
        one = self.field.one
        if k1 == "x":
            if k2 == "x" and t1[1] > t2[1]:
                return [((t2, t1), one)]
            return None
        if k1 == "g":
            if k2 == "x":
                # g x_j -> (^g x_j) g, image = column j of the matrix
                g, j = t1[1], t2[1]
                m = self.group.elements[g]
                return [
                    ((("x", k), t1), m[k][j])
                    for k in range(self.group.dim)
                    if m[k][j]
                ]
            if k2 == "g":
                return [((("g", self.group.mult[t1[1]][t2[1]]),), one)]
            return None
        # k1 == "y"
        if k2 == "y":
            if t1[1] > t2[1]:
                return [((t2, t1), one)]
            return None
        if k2 == "g":
            # y_i g -> g ^(g^-1) y_i, coefficients (M_g)_{i k}
            i, g = t1[1], t2[1]
            m = self.group.elements[g]
            return [
                ((t2, ("y", k)), m[i][k])
                for k in range(self.group.dim)
                if m[i][k]
            ]
        # y_i x_j -> x_j y_i - sum_s c(s) <y_i, acheck_s><alpha_s, x_j> s
        i, j = t1[1], t2[1]
        reps = [((t2, t1), one)]
        for elem, coeff in self._cross[i][j]:
            reps.append(((("g", elem),), -coeff))
        return reps

    def _compress(self, word):
        n = self.group.dim
        xexp = [0] * n
        yexp = [0] * n
        g = 0
        phase = 0
        for t in word:
            k = t[0]
            if k == "x":
                assert phase == 0
                xexp[t[1]] += 1
            elif k == "g":
                assert phase <= 1
                g = self.group.mult[g][t[1]] if phase == 1 else t[1]
                phase = 1
            else:
                yexp[t[1]] += 1
                phase = 2
        return (tuple(xexp), g, tuple(yexp))

    def _expand(self, mono):
        xexp, g, yexp = mono
        word = []
        for i, e in enumerate(xexp):
            word.extend([("x", i)] * e)
        if g:
            word.append(("g", g))
        for i, e in enumerate(yexp):
            word.extend([("y", i)] * e)
        return tuple(word)

    @staticmethod
    def _weight(word):
        return sum(1 for t in word if t[0] != "g")

    # -- multiplication ----------------------------------------------------------

    def monomial_of(self, key: tuple[int, int, int]):
        i, w, j = key
        return (self.coinv_v.basis_monos[i], w, self.coinv_w.basis_monos[j])

    def element_of(self, key) -> PBWElement:
        return PBWElement({self.monomial_of(key): self.field.one})

    def multiply_monomials(self, m1, m2) -> PBWElement:
        """Structured product around the engine-straightened middle kernel."""
        key = (m1, m2)
        cached = self._mul_cache.get(key)
        if cached is not None:
            return cached
        a1, w1, b1 = m1
        a2, w2, b2 = m2
        group = self.group
        zero = self._zero_exp
        mid = self.rs.multiply_monomials((zero, 0, b1), (a2, 0, zero))
        inv_w2 = group.inv[w2]
        mult_w1 = group.mult[w1]
        out = PBWElement({})
        terms = out.terms
        for (ga, v, gb), c in mid.items():
            xp = group.action.act_mono(w1, ga)
            yp = group.dual_action.act_mono(inv_w2, gb)
            g = group.mult[mult_w1[v]][w2]
            for ea, ca in xp.items():
                cca = c * ca
                ea2 = tuple(p + q for p, q in zip(a1, ea))
                for eb, cb in yp.items():
                    eb2 = tuple(p + q for p, q in zip(eb, b2))
                    mono = (ea2, g, eb2)
                    val = cca * cb
                    cur = terms.get(mono)
                    s = val if cur is None else cur + val
                    if s:
                        terms[mono] = s
                    elif cur is not None:
                        del terms[mono]
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
        """Pure word rewriting, for cross-checks against the assembly path."""
        return self.rs.multiply(a, b)

    # -- Z-module structure --------------------------------------------------------

    def _embed_v(self, p: CentralPoly) -> CentralPoly:
        pad = (0,) * self._nq
        return CentralPoly(self.variables, {e + pad: c for e, c in p.terms.items()})

    def _embed_w(self, p: CentralPoly) -> CentralPoly:
        pad = (0,) * self._np
        return CentralPoly(self.variables, {pad + e: c for e, c in p.terms.items()})

    def decompose(self, elt: PBWElement) -> dict[int, CentralPoly]:
        """Coordinates over the basis {a_i w b_j}, values in the centre."""
        out: dict[int, CentralPoly] = {}
        for (xe, w, ye), c in elt.items():
            zv = self.coinv_v.decompose_mono(xe)
            zw = self.coinv_w.decompose_mono(ye)
            for i, zi in enumerate(zv):
                if not zi:
                    continue
                for j, zj in enumerate(zw):
                    if not zj:
                        continue
                    idx = self.basis_index[(i, w, j)]
                    contrib = (self._embed_v(zi) * self._embed_w(zj)).scale(c)
                    if not contrib:
                        continue
                    cur = out.get(idx)
                    s = contrib if cur is None else cur + contrib
                    if s:
                        out[idx] = s
                    elif cur is not None:
                        del out[idx]
        return out

    def phi(self, elt: PBWElement) -> CentralPoly:
        """The Z-coefficient of a_max * e * b_max."""
        acc = CentralPoly.zero(self.variables)
        for (xe, w, ye), c in elt.items():
            if w != 0:
                continue
            zv = self.coinv_v.max_coord({xe: self.field.one})
            if not zv:
                continue
            zw = self.coinv_w.max_coord({ye: self.field.one})
            if not zw:
                continue
            acc = acc + (self._embed_v(zv) * self._embed_w(zw)).scale(c)
        return acc

    # -- hypothesis machinery ---------------------------------------------------------

    def witness(self, idx: int) -> tuple[PBWElement, CycScalar]:
        """x = b^j w^-1 a^i for basis element a_i w b_j; unit eps_{V*}(w)."""
        i, w, j = self.basis[idx]
        fld = self.field
        zero = self._zero_exp
        bj = PBWElement({})
        for k, mono in enumerate(self.coinv_w.basis_monos):
            c = self.coinv_w.dual_coords.at(k, j)
            if c:
                bj.add_term((zero, 0, mono), c)
        ai = PBWElement({})
        for k, mono in enumerate(self.coinv_v.basis_monos):
            c = self.coinv_v.dual_coords.at(k, i)
            if c:
                ai.add_term((mono, 0, zero), c)
        winv = PBWElement({(zero, self.group.inv[w], zero): fld.one})
        x = self.multiply(self.multiply(bj, winv), ai)
        # the unit is the top-class character of the S(V*) side at w; with
        # generators spanning V* itself this is eps_{V*}(w)^-1 = eps_V(w)
        # (the two readings coincide on real groups)
        return x, self.coinv_w.top_character[w]

    def leading_of(self, coords: dict[int, CentralPoly]) -> int:
        best = None
        best_deg = -1
        for idx in sorted(coords):
            if not coords[idx]:
                continue
            i, _, j = self.basis[idx]
            deg = self.coinv_v.basis_degrees[i] + self.coinv_w.basis_degrees[j]
            if deg > best_deg:
                best, best_deg = idx, deg
        if best is None:
            raise ValueError("zero element has no leading term")
        return best

    def reduced_algebra(self, chi: dict):
        """Structure constants of the |W|^3-dimensional reduction at chi.

        Products are computed lazily and memoised (full tables are large at
        |W| = 6); entry (r, s) is the coordinate vector of the image of
        b_r b_s over the reduced basis.
        """
        memo: dict = {}
        zero = self.field.zero
        dim = self.dim

        def product(r: int, s: int) -> list[CycScalar]:
            key = (r, s)
            vec = memo.get(key)
            if vec is None:
                prod = self.multiply(
                    self.element_of(self.basis[r]), self.element_of(self.basis[s])
                )
                vec = [zero] * dim
                for idx, z in self.decompose(prod).items():
                    vec[idx] = z.eval(chi, zero)
                memo[key] = vec
            return vec

        return product

    # -- characters ------------------------------------------------------------------

    def augmentation(self) -> dict[str, CycScalar]:
        return {v: self.field.zero for v in self.variables}

    def character(self, values) -> dict[str, CycScalar]:
        chi = {}
        for v in self.variables:
            if v not in values:
                raise ValueError(f"character missing value for {v}")
            x = values[v]
            if not isinstance(x, CycScalar):
                x = self.field.from_rational(x)
            chi[v] = x
        return chi

    def label(self, idx: int) -> str:
        i, w, j = self.basis[idx]
        return f"a{i + 1}*{self.group.element_label(w)}*b{j + 1}"
