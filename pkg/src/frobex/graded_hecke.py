"""The graded Hecke algebra of Drinfeld type over a complex reflection group.

Generators: W and a basis of V, with w x w^-1 = ^w x and

    [x, y] = sum_w Omega_w(x, y) w,

where each Omega_w is an alternating 2-form on V.  Nonzero forms may only be
supported on the bireflection set R (elements with rank(id - w) = 2 whose
centraliser acts with determinant one on V/V^w); Omega_e vanishes for a
faithful reflection representation.  Coherence of an Omega table is made
operational here: tables are solved from the joint linear system of
W-equivariance and the Jacobi identity, and every table (solved or supplied)
is re-validated before use - equivariance entry by entry, Jacobi inside the
rewrite engine, and associativity by sampling.

The PBW basis over Z_gr = S(V)^W is {a_i w}, |W|^2 elements.  Phi_gr picks
the Z_gr-coefficient of a_max * e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .pbw import PBWElement, RewriteSystem, check_associativity
from .reflection import ReflectionGroup, build_group, coinvariant_data
from .scalars import CentralPoly, CycScalar


class OmegaInvalidError(ValueError):
    def __init__(self, violation):
        super().__init__(f"invalid Omega table: {violation}")
        self.violation = violation


@dataclass
class OmegaViolation:
    condition: str       # "support" | "equivariance" | "jacobi" | "associativity"
    details: str

    def __str__(self):
        return f"{self.condition}: {self.details}"


@dataclass
class OmegaData:
    """Alternating 2-forms on V indexed by group elements (support in R)."""

    forms: dict[int, tuple]

    def value(self, w: int, i: int, j: int):
        m = self.forms.get(w)
        return None if m is None else m[i][j]

    def is_zero(self) -> bool:
        return all(not x for m in self.forms.values() for row in m for x in row)

    def support(self):
        return [w for w, m in self.forms.items() if any(x for row in m for x in row)]


def bireflection_set(group: ReflectionGroup) -> list[int]:
    """Elements w with rank(id - w) = 2 whose centraliser acts with det 1 on V/V^w."""
    out = []
    for w in range(1, group.size):
        if group.fixed_rank_defect(w) != 2:
            continue
        if all(
            _det_on_quotient(group, g, w) == group.field.one
            for g in group.centraliser(w)
        ):
            out.append(w)
    return out


def _det_on_quotient(group: ReflectionGroup, g: int, w: int) -> CycScalar:
    """det of g acting on V / V^w (g centralises w, so it preserves V^w)."""
    fixed = group.fixed_space(w)
    if not fixed:
        return group.eps_V[g]
    from .linalg import Matrix

    fld = group.field
    mg = group.elements[g]
    n = group.dim
    basis = Matrix(fld, [[fixed[k][r] for k in range(len(fixed))] for r in range(n)])
    images = []
    for vec in fixed:
        img = [
            sum((mg[r][s] * vec[s] for s in range(n) if vec[s]), fld.zero)
            for r in range(n)
        ]
        images.append(img)
    rhs = Matrix(fld, [[images[k][r] for k in range(len(fixed))] for r in range(n)])
    coords = basis.solve(rhs)
    if coords is None:
        raise RuntimeError("centraliser does not preserve the fixed space?")
    det_fixed = _small_det(fld, coords)
    return group.eps_V[g] * det_fixed.inverse()


def _small_det(fld, m) -> CycScalar:
    n = m.rows
    if n == 1:
        return m.at(0, 0)
    if n == 2:
        return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)
    acc = fld.zero
    for j in range(n):
        minor_rows = [
            [m.at(r, c) for c in range(n) if c != j] for r in range(1, n)
        ]
        from .linalg import Matrix

        sub = _small_det(fld, Matrix(fld, minor_rows))
        term = m.at(0, j) * sub
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def solve_omega(group: ReflectionGroup) -> OmegaData:
    """A nonzero coherent Omega table if one exists, else the zero table.

    Unknowns are the above-diagonal entries of Omega_w for w in R; rows are
    the W-equivariance conditions and the Jacobi conditions (both linear).
    """
    from .linalg import Matrix

    fld = group.field
    n = group.dim
    R = bireflection_set(group)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    unknowns = [(w, a, b) for w in R for (a, b) in pairs]
    if not unknowns:
        return OmegaData({})
    pos = {u: k for k, u in enumerate(unknowns)}

    def form_coeffs(w: int, i: int, j: int):
        """Omega_w(v_i, v_j) as a row over the unknowns (may be +-1 slots)."""
        row = {}
        if i == j:
            return row
        if i < j:
            row[pos[(w, i, j)]] = fld.one
        else:
            row[pos[(w, j, i)]] = -fld.one
        return row

    rows = []
    # (a) equivariance: Omega_{gwg^-1}(g v_a, g v_b) = Omega_w(v_a, v_b)
    for g in range(group.size):
        mg = group.elements[g]
        for w in R:
            wc = group.conjugate(g, w)
            for (a, b) in pairs:
                row = [fld.zero] * len(unknowns)
                if wc in R:
                    for k in range(n):
                        if not mg[k][a]:
                            continue
                        for l in range(n):
                            if not mg[l][b] or k == l:
                                continue
                            c = mg[k][a] * mg[l][b]
                            for idx, cc in form_coeffs(wc, k, l).items():
                                row[idx] = row[idx] + c * cc
                for idx, cc in form_coeffs(w, a, b).items():
                    row[idx] = row[idx] - cc
                if any(row):
                    rows.append(row)
    # (b) Jacobi: sum_cyc sum_w Omega_w(v_a, v_b) (^w v_c - v_c) w = 0,
    # coordinates over (variable k, group element w)
    for (a, b, c) in permutations(range(n), 3):
        if not (a < b):
            continue
        coords: dict[tuple[int, int], list] = {}
        for (xa, xb, xc) in ((a, b, c), (b, c, a), (c, a, b)):
            for w in R:
                mw = group.elements[w]
                fc = form_coeffs(w, xa, xb)
                if not fc:
                    continue
                for k in range(n):
                    delta = mw[k][xc] - (fld.one if k == xc else fld.zero)
                    if not delta:
                        continue
                    key = (k, w)
                    row = coords.setdefault(key, [fld.zero] * len(unknowns))
                    for idx, cc in fc.items():
                        row[idx] = row[idx] + delta * cc
        for row in coords.values():
            if any(row):
                rows.append(row)

    if not rows:
        basis = Matrix.identity(fld, len(unknowns)).data
    else:
        basis = Matrix(fld, rows).nullspace()
    if not basis:
        return OmegaData({})
    sol = basis[0]
    lead = next(x for x in sol if x)
    inv = lead.inverse()
    sol = [x * inv for x in sol]
    forms: dict[int, list] = {}
    for (w, a, b), k in pos.items():
        if sol[k]:
            m = forms.setdefault(w, [[fld.zero] * n for _ in range(n)])
            m[a][b] = sol[k]
            m[b][a] = -sol[k]
    return OmegaData({w: tuple(tuple(r) for r in m) for w, m in forms.items()})


def validate_omega(group: ReflectionGroup, omega: OmegaData, rng=None, trials: int = 50):
    """None when the table is coherent, else an OmegaViolation naming the failure."""
    fld = group.field
    n = group.dim
    R = set(bireflection_set(group))
    for w in omega.support():
        if w not in R:
            return OmegaViolation(
                "support", f"Omega supported on {group.element_label(w)} outside R"
            )
    # (a) equivariance, entry by entry
    def omega_val(w, i, j):
        v = omega.value(w, i, j)
        return v if v is not None else fld.zero

    for g in range(group.size):
        mg = group.elements[g]
        for w in (omega.support() or list(R)):
            wc = group.conjugate(g, w)
            for a in range(n):
                for b in range(a + 1, n):
                    lhs = fld.zero
                    for k in range(n):
                        if not mg[k][a]:
                            continue
                        for l in range(n):
                            if k == l or not mg[l][b]:
                                continue
                            lhs = lhs + mg[k][a] * mg[l][b] * omega_val(wc, k, l)
                    if lhs != omega_val(w, a, b):
                        return OmegaViolation(
                            "equivariance",
                            f"Omega_{{g w g^-1}}(g v{a+1}, g v{b+1}) != Omega_w(v{a+1}, v{b+1}) "
                            f"at g={group.element_label(g)}, w={group.element_label(w)}",
                        )
    # (b) Jacobi inside a candidate rewrite engine
    try:
        alg = GradedHeckeAlgebra(group, omega, _validate=False)
    except Exception as exc:  # engine-level failure also rejects the table
        return OmegaViolation("jacobi", f"engine construction failed: {exc}")
    for (a, b, c) in permutations(range(n), 3):
        if not (a < b):
            continue
        acc = PBWElement({})
        for (xa, xb, xc) in ((a, b, c), (b, c, a), (c, a, b)):
            inner = alg.multiply(alg.gen_x(xa), alg.gen_x(xb)) - alg.multiply(
                alg.gen_x(xb), alg.gen_x(xa)
            )
            term = alg.multiply(inner, alg.gen_x(xc)) - alg.multiply(
                alg.gen_x(xc), inner
            )
            acc = acc + term
        if acc:
            return OmegaViolation(
                "jacobi", f"[[v{a+1},v{b+1}],v{c+1}] + cyclic != 0"
            )
    # (c) associativity sampling
    if rng is not None:
        monos = [alg.monomial_of((i, w)) for (i, w) in alg.basis]
        bad = check_associativity(
            alg.multiply,
            monos,
            rng,
            element=lambda m: PBWElement({m: fld.one}),
            trials=trials,
        )
        if bad is not None:
            return OmegaViolation("associativity", f"offending triple {bad}")
    return None


class GradedHeckeAlgebra:
    def __init__(self, group, omega="solved", step_budget: int = 10**6, _validate=True, rng=None):
        if isinstance(group, str):
            group = build_group(group)
        self.group: ReflectionGroup = group
        self.field = group.field
        fld = self.field
        if omega == "zero":
            omega = OmegaData({})
        elif omega == "solved":
            omega = solve_omega(group)
        if not isinstance(omega, OmegaData):
            raise ValueError("omega must be OmegaData, 'zero' or 'solved'")
        if _validate:
            violation = validate_omega(group, omega, rng=rng)
            if violation is not None:
                raise OmegaInvalidError(violation)
        self.omega = omega

        self.coinv_v = coinvariant_data(group, "V", "p")
        self.variables = self.coinv_v.var_names
        n = group.dim
        self._zero_exp = (0,) * n
        self.rs = RewriteSystem(
            fld,
            rewrite_pair=self._rewrite_pair,
            compress=self._compress,
            expand=self._expand,
            weight=self._weight,
            step_budget=step_budget,
        )
        self.basis = [(i, w) for i in range(group.size) for w in range(group.size)]
        self.basis_index = {b: k for k, b in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.top_index = self.basis_index[(self.coinv_v.max_index, 0)]
        self.unit_index = self.basis_index[(0, 0)]
        self._central_gens: list[PBWElement] | None = None
        self._central_monos: dict = {}

    # -- rewrite rules ---------------------------------------------------------

    def _rewrite_pair(self, t1, t2):
        k1, k2 = t1[0], t2[0]
        one = self.field.one
        if k1 == "x":
            if k2 == "x" and t1[1] > t2[1]:
                # v_i v_j = v_j v_i + sum_w Omega_w(v_i, v_j) w
                i, j = t1[1], t2[1]
                reps = [((t2, t1), one)]
                for w, m in self.omega.forms.items():
                    c = m[i][j]
                    if c:
                        reps.append(((("g", w),), c))
                return reps
            return None
        # k1 == "g"
        if k2 == "x":
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

    def _compress(self, word):
        n = self.group.dim
        exps = [0] * n
        g = 0
        seen_g = False
        for t in word:
            if t[0] == "x":
                assert not seen_g
                exps[t[1]] += 1
            else:
                g = self.group.mult[g][t[1]] if seen_g else t[1]
                seen_g = True
        return (tuple(exps), g)

    def _expand(self, mono):
        exps, g = mono
        word = []
        for i, e in enumerate(exps):
            word.extend([("x", i)] * e)
        if g:
            word.append(("g", g))
        return tuple(word)

    @staticmethod
    def _weight(word):
        return sum(1 for t in word if t[0] == "x")

    # -- elements ----------------------------------------------------------------

    def monomial_of(self, key):
        i, w = key
        return (self.coinv_v.basis_monos[i], w)

    def element_of(self, key) -> PBWElement:
        return PBWElement({self.monomial_of(key): self.field.one})

    def gen_x(self, i: int) -> PBWElement:
        exps = [0] * self.group.dim
        exps[i] = 1
        return PBWElement({(tuple(exps), 0): self.field.one})

    def gen_w(self, w: int) -> PBWElement:
        return PBWElement({(self._zero_exp, w): self.field.one})

    def multiply_monomials(self, m1, m2) -> PBWElement:
        return self.rs.multiply_monomials(m1, m2)

    def multiply(self, a: PBWElement, b: PBWElement) -> PBWElement:
        return self.rs.multiply(a, b)

    # -- Z_gr structure: central generators with exact central lifts -----------

    def central_generators(self) -> list[PBWElement]:
        """Central elements Z_1..Z_n with top symbols the fundamental invariants.

        For nonzero Omega the naive PBW embedding of an invariant polynomial
        fails to be central (the Omega corrections obstruct it); the true
        generators of the centre are lifts with lower-order correction
        terms.  They are solved from the centre slice of the right degree
        with the top polynomial layer pinned to the invariant.
        """
        if self._central_gens is not None:
            return self._central_gens
        fld = self.field
        gens: list[PBWElement] = []
        if self.omega.is_zero():
            for f in self.coinv_v.invariants:
                gens.append(PBWElement({(m, 0): c for m, c in f.items()}))
        else:
            from .linalg import Matrix, PreparedSolver

            for d, f in zip(self.coinv_v.inv_degrees, self.coinv_v.invariants):
                slice_basis, vectors = self.centre_in_degree(d)
                if not vectors:
                    raise RuntimeError("centre slice unexpectedly trivial")
                top_rows = [
                    k for k, (m, w) in enumerate(slice_basis) if sum(m) == d
                ]
                mat = Matrix(
                    fld,
                    [[vec[r] for vec in vectors] for r in top_rows],
                )
                target = []
                for r in top_rows:
                    m, w = slice_basis[r]
                    target.append(f.get(m, fld.zero) if w == 0 else fld.zero)
                sol = PreparedSolver(mat).solve(target)
                if sol is None:
                    raise RuntimeError(
                        f"no central lift with symbol of degree {d}; "
                        "centre smaller than the invariant ring?"
                    )
                elt = PBWElement({})
                for t, vec in zip(sol, vectors):
                    if t:
                        for k, c in enumerate(vec):
                            if c:
                                elt.add_term(slice_basis[k], c * t)
                gens.append(elt)
        self._central_gens = gens
        return gens

    def central_monomial(self, exps: tuple[int, ...]) -> PBWElement:
        """The algebra product Z_1^e1 ... Z_n^en (central, cached)."""
        cached = self._central_monos.get(exps)
        if cached is not None:
            return cached
        if not any(exps):
            out = PBWElement({(self._zero_exp, 0): self.field.one})
        else:
            i = next(k for k, e in enumerate(exps) if e)
            rest = tuple(e - 1 if k == i else e for k, e in enumerate(exps))
            out = self.multiply(self.central_generators()[i], self.central_monomial(rest))
        self._central_monos[exps] = out
        return out

    def central_element(self, z: CentralPoly) -> PBWElement:
        out = PBWElement({})
        for exps, c in z.terms.items():
            for m, v in self.central_monomial(exps).items():
                out.add_term(m, v * c)
        return out

    def decompose(self, elt: PBWElement) -> dict[int, CentralPoly]:
        """True free-module coordinates over {a_i w}.

        The polynomial part of H_gr is not a commutative subalgebra, so the
        coordinates are peeled off degree by degree: the top polynomial
        layer determines the top homogeneous pieces of the coordinates via
        the commutative decomposition (symbols of the central generators
        are the fundamental invariants), and the actual algebra products
        z * (a_i w) are subtracted before recursing (their corrections live
        in strictly lower degree).
        """
        out: dict[int, CentralPoly] = {}
        work = PBWElement(dict(elt.terms))
        while work:
            deg = max(sum(xe) for (xe, _w) in work.terms)
            layers: dict[int, dict] = {}
            for (xe, w), c in work.items():
                if sum(xe) == deg:
                    layers.setdefault(w, {})[xe] = c
            for w, poly in layers.items():
                zs = self.coinv_v.decompose(poly)
                for i, zi in enumerate(zs):
                    if not zi:
                        continue
                    idx = self.basis_index[(i, w)]
                    cur = out.get(idx)
                    s = zi if cur is None else cur + zi
                    if s:
                        out[idx] = s
                    elif cur is not None:
                        del out[idx]
                    work = work - self.multiply(
                        self.central_element(zi), self.element_of((i, w))
                    )
        return out

    def phi(self, elt: PBWElement) -> CentralPoly:
        """Phi_gr: the Z_gr-coefficient of a_max * e."""
        coords = self.decompose(elt)
        z = coords.get(self.top_index)
        return z if z is not None else CentralPoly.zero(self.variables)

    def witness(self, idx: int):
        i, w = self.basis[idx]
        fld = self.field
        ai = PBWElement({})
        for k, mono in enumerate(self.coinv_v.basis_monos):
            c = self.coinv_v.dual_coords.at(k, i)
            if c:
                ai.add_term((mono, 0), c)
        winv = PBWElement({(self._zero_exp, self.group.inv[w]): fld.one})
        return self.multiply(winv, ai), fld.one

    def leading_of(self, coords: dict[int, CentralPoly]) -> int:
        best, best_deg = None, -1
        for idx in sorted(coords):
            if not coords[idx]:
                continue
            i, _ = self.basis[idx]
            deg = self.coinv_v.basis_degrees[i]
            if deg > best_deg:
                best, best_deg = idx, deg
        if best is None:
            raise ValueError("zero element has no leading term")
        return best

    # -- centre check -----------------------------------------------------------------

    def centre_in_degree(self, d: int):
        """Exact basis of central elements of filtration degree <= d.

        Solves [z, gen] = 0 over the degree <= d slice for each algebra
        generator (a basis of V and the group generators).
        """
        if d > 2 * self.coinv_v.top_degree:
            raise ValueError(
                f"centre check degree {d} exceeds the 2N cost guard "
                f"({2 * self.coinv_v.top_degree})"
            )
        from .linalg import Matrix
        from .reflection import monomials_of_degree

        fld = self.field
        n = self.group.dim
        slice_monos = []
        for dd in range(d + 1):
            slice_monos.extend(monomials_of_degree(n, dd))
        slice_basis = [(m, w) for m in slice_monos for w in range(self.group.size)]
        big_monos = list(slice_monos)
        big_monos.extend(monomials_of_degree(n, d + 1))
        big_index = {
            (m, w): k
            for k, (m, w) in enumerate(
                (m, w) for m in big_monos for w in range(self.group.size)
            )
        }
        gens = [self.gen_x(i) for i in range(n)]
        gens.extend(self.gen_w(g) for g in self.group.generator_indices)
        cols = []
        for (m, w) in slice_basis:
            u = PBWElement({(m, w): fld.one})
            col = [fld.zero] * (len(big_index) * len(gens))
            for gi, gen in enumerate(gens):
                comm = self.multiply(u, gen) - self.multiply(gen, u)
                off = gi * len(big_index)
                for mono, c in comm.items():
                    col[off + big_index[mono]] = c
            cols.append(col)
        mat = Matrix(fld, [[col[r] for col in cols] for r in range(len(cols[0]))])
        vectors = mat.nullspace()
        return slice_basis, vectors

    # -- characters ----------------------------------------------------------------------

    def augmentation(self):
        return {v: self.field.zero for v in self.variables}

    def character(self, values):
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
        i, w = self.basis[idx]
        return f"a{i + 1}*{self.group.element_label(w)}"
