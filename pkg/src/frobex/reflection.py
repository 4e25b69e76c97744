"""Finite (complex) reflection groups and their coinvariant theory.

Supported groups: cyclic Z/m acting on C^1, symmetric groups S_n (n <= 4)
in the (n-1)-dimensional reflection representation (integer matrices), and
dihedral I2(m) (m <= 6) on C^2 in the complex basis where the rotation is
diag(zeta_m, zeta_m^-1).  Everything is enumerated exhaustively and exactly:
elements, reflections with root/coroot data normalised to <alpha, acheck> = 2,
determinant characters on V and V*, fundamental invariants (found degree by
degree with the Reynolds operator), a graded-lex minimal monomial basis of
the coinvariant algebra, dual bases for the top-degree pairing, and the
free-module decomposition of polynomials over the invariant subring.

Polynomials here are plain dicts {exponent tuple: CycScalar}; only nonzero
coefficients are stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .linalg import Matrix, PreparedSolver
from .scalars import CentralPoly, CycField, CycScalar

Poly = dict


class GroupError(ValueError):
    pass


# ---------------------------------------------------------------------------
# commutative polynomial helpers (exponent-tuple dicts)
# ---------------------------------------------------------------------------

def poly_add_into(acc: Poly, p: Poly, c: CycScalar | None = None) -> None:
    for e, v in p.items():
        if c is not None:
            v = v * c
        cur = acc.get(e)
        s = v if cur is None else cur + v
        if s:
            acc[e] = s
        elif cur is not None:
            del acc[e]


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            c = c1 * c2
            cur = out.get(e)
            s = c if cur is None else cur + c
            if s:
                out[e] = s
            elif cur is not None:
                del out[e]
    return out


def poly_scale(p: Poly, c: CycScalar) -> Poly:
    if not c:
        return {}
    return {e: v * c for e, v in p.items()}


def monomials_of_degree(nvars: int, d: int) -> list[tuple[int, ...]]:
    """All exponent tuples of total degree d, graded-lex descending in x1."""
    if nvars == 1:
        return [(d,)]
    out = []
    for k in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - k):
            out.append((k,) + rest)
    return out


class PolyAction:
    """Action of group elements on polynomials by linear substitution."""

    def __init__(self, field: CycField, matrices: list):
        self.field = field
        self.matrices = matrices
        self.n = len(matrices[0])
        self._mono_cache: dict = {}

    def act_mono(self, g: int, exps: tuple[int, ...]) -> Poly:
        key = (g, exps)
        cached = self._mono_cache.get(key)
        if cached is not None:
            return cached
        m = self.matrices[g]
        out: Poly = {(0,) * self.n: self.field.one}
        for i, e in enumerate(exps):
            if not e:
                continue
            # image of x_i: column i of the matrix
            col = {
                tuple(1 if t == k else 0 for t in range(self.n)): m[k][i]
                for k in range(self.n)
                if m[k][i]
            }
            for _ in range(e):
                out = poly_mul(out, col)
        self._mono_cache[key] = out
        return out

    def act_poly(self, g: int, p: Poly) -> Poly:
        out: Poly = {}
        for e, c in p.items():
            poly_add_into(out, self.act_mono(g, e), c)
        return out


# ---------------------------------------------------------------------------
# group construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Reflection:
    element: int
    alpha: tuple          # covector on V (vanishes on the fixed hyperplane)
    alpha_check: tuple    # vector in V spanning the moved line
    conj_class: int


class ReflectionGroup:
    def __init__(self, descriptor: str, field: CycField, generators: list):
        self.descriptor = descriptor
        self.field = field
        self.dim = len(generators[0])
        self.elements: list[tuple] = []
        self._index: dict[tuple, int] = {}
        ident = tuple(
            tuple(field.one if i == j else field.zero for j in range(self.dim))
            for i in range(self.dim)
        )
        self._add_element(ident)
        gen_idx = []
        for g in generators:
            gen_idx.append(self._add_element(self._freeze(g)))
        # closure
        frontier = list(range(len(self.elements)))
        while frontier:
            nxt = []
            for i in frontier:
                for j in gen_idx:
                    prod = self._matmul(self.elements[i], self.elements[j])
                    if prod not in self._index:
                        nxt.append(self._add_element(prod))
            frontier = nxt
            if len(self.elements) > 10000:
                raise GroupError("group enumeration exploded; bad generators?")
        self.size = len(self.elements)
        self.generator_indices = gen_idx
        n = self.size
        self.mult = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                self.mult[i][j] = self._index[self._matmul(self.elements[i], self.elements[j])]
        self.inv = [0] * n
        for i in range(n):
            for j in range(n):
                if self.mult[i][j] == 0:
                    self.inv[i] = j
                    break
        self.eps_V = [self._det(self.elements[i]) for i in range(n)]
        self.eps_Vdual = [d.inverse() for d in self.eps_V]
        self.orders = [self._element_order(i) for i in range(n)]
        self._find_reflections()
        self.action = PolyAction(field, [self.elements[i] for i in range(n)])
        self.dual_action = PolyAction(field, [self._dual_matrix(i) for i in range(n)])

    # -- internals ----------------------------------------------------------

    def _freeze(self, m):
        return tuple(
            tuple(x if isinstance(x, CycScalar) else self.field.from_rational(x) for x in row)
            for row in m
        )

    def _add_element(self, m) -> int:
        if m in self._index:
            return self._index[m]
        idx = len(self.elements)
        self.elements.append(m)
        self._index[m] = idx
        return idx

    def _matmul(self, a, b):
        n = self.dim
        zero = self.field.zero
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    x = a[i][k]
                    if x:
                        y = b[k][j]
                        if y:
                            acc = acc + x * y
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def _det(self, m) -> CycScalar:
        n = self.dim
        if n == 1:
            return m[0][0]
        if n == 2:
            return m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if n == 3:
            return (
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            )
        raise GroupError("determinant only implemented for dim <= 3")

    def _element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != 0:
            cur = self.mult[cur][i]
            k += 1
        return k

    def _dual_matrix(self, i: int):
        # action on V*: transpose of the inverse matrix
        minv = self.elements[self.inv[i]]
        return tuple(tuple(minv[j][k] for j in range(self.dim)) for k in range(self.dim))

    def _find_reflections(self):
        refl_elems = []
        for i in range(1, self.size):
            if self.fixed_rank_defect(i) == 1:
                refl_elems.append(i)
        # conjugacy classes among reflections
        assigned: dict[int, int] = {}
        n_class = 0
        for s in refl_elems:
            if s in assigned:
                continue
            orbit = {self.mult[self.mult[g][s]][self.inv[g]] for g in range(self.size)}
            for t in orbit:
                assigned[t] = n_class
            n_class += 1
        self.reflection_class_count = n_class
        refls = []
        for s in refl_elems:
            m = self.elements[s]
            diff = [
                [m[a][b] - (self.field.one if a == b else self.field.zero) for b in range(self.dim)]
                for a in range(self.dim)
            ]
            acheck = None
            for b in range(self.dim):
                col = tuple(diff[a][b] for a in range(self.dim))
                if any(col):
                    acheck = col
                    break
            alpha = None
            for a in range(self.dim):
                row = tuple(diff[a][b] for b in range(self.dim))
                if any(row):
                    alpha = row
                    break
            pairing = None
            for a, ac in zip(alpha, acheck):
                p = a * ac
                pairing = p if pairing is None else pairing + p
            if not pairing:
                raise GroupError("degenerate root data for a reflection")
            scale = self.field.from_rational(2) * pairing.inverse()
            alpha = tuple(x * scale for x in alpha)
            refls.append(Reflection(s, alpha, acheck, assigned[s]))
        self.reflections = refls

    # -- public helpers -----------------------------------------------------

    def fixed_rank_defect(self, i: int) -> int:
        """rank(id - g): 1 for reflections, 2 for bireflections."""
        m = self.elements[i]
        one, zero = self.field.one, self.field.zero
        rows = [
            [(one if a == b else zero) - m[a][b] for b in range(self.dim)]
            for a in range(self.dim)
        ]
        return Matrix(self.field, rows).rank()

    def fixed_space(self, i: int) -> list[list[CycScalar]]:
        m = self.elements[i]
        one, zero = self.field.one, self.field.zero
        rows = [
            [m[a][b] - (one if a == b else zero) for b in range(self.dim)]
            for a in range(self.dim)
        ]
        return Matrix(self.field, rows).nullspace()

    def centraliser(self, i: int) -> list[int]:
        return [g for g in range(self.size) if self.mult[g][i] == self.mult[i][g]]

    def conjugate(self, g: int, s: int) -> int:
        return self.mult[self.mult[g][s]][self.inv[g]]

    def element_label(self, i: int) -> str:
        return f"w{i}"


def build_group(descriptor: str) -> ReflectionGroup:
    """Construct a supported reflection group from its descriptor string."""
    d = descriptor.strip()
    if d.startswith("Z/"):
        try:
            m = int(d[2:])
        except ValueError:
            raise GroupError(f"bad cyclic descriptor {descriptor!r}")
        if m < 2:
            raise GroupError("cyclic group needs m >= 2")
        fld = CycField.get(m)
        return ReflectionGroup(d, fld, [[[fld.zeta]]])
    if d in ("S2", "S3", "S4"):
        n = int(d[1])
        fld = CycField.get(1)
        gens = [_sym_refl_matrix(n, k, fld) for k in range(n - 1)]
        return ReflectionGroup(d, fld, gens)
    if d.startswith("I2(") and d.endswith(")"):
        try:
            m = int(d[3:-1])
        except ValueError:
            raise GroupError(f"bad dihedral descriptor {descriptor!r}")
        if not 2 <= m <= 6:
            raise GroupError("dihedral I2(m) supported for 2 <= m <= 6")
        fld = CycField.get(m)
        z, zero, one = fld.zeta, fld.zero, fld.one
        rot = [[z, zero], [zero, z.inverse()]]
        flip = [[zero, one], [one, zero]]
        return ReflectionGroup(d, fld, [rot, flip])
    raise GroupError(f"unsupported group descriptor {descriptor!r}")


def _sym_refl_matrix(n: int, k: int, fld: CycField):
    """Adjacent transposition (k+1, k+2) of S_n on the basis e_i - e_{i+1}."""
    one, zero = fld.one, fld.zero

    def basis_coords(a: int, b: int):
        # e_a - e_b as a combination of eps_i = e_i - e_{i+1}, a < b
        v = [zero] * (n - 1)
        for t in range(a, b):
            v[t] = one
        return v

    cols = []
    for i in range(n - 1):
        # image of eps_i = e_i - e_{i+1} under the transposition
        a, b = i, i + 1
        s = {k: k + 1, k + 1: k}
        ia, ib = s.get(a, a), s.get(b, b)
        if ia < ib:
            col = basis_coords(ia, ib)
        else:
            col = [-x for x in basis_coords(ib, ia)]
        cols.append(col)
    return [[cols[j][i] for j in range(n - 1)] for i in range(n - 1)]


# ---------------------------------------------------------------------------
# coinvariant algebra
# ---------------------------------------------------------------------------

@dataclass
class CoinvariantData:
    """Invariants, coinvariant monomial basis and dual bases for one side."""

    field: CycField
    nvars: int
    action: PolyAction
    eps: list                      # determinant character of this side's action
    top_character: list            # character of the top coinvariant class:
                                   # with variables spanning the module itself
                                   # (not its dual), this is eps^-1
    var_names: tuple[str, ...]     # names of the fundamental invariants
    inv_degrees: list[int]
    invariants: list[Poly]
    basis_monos: list[tuple[int, ...]]
    basis_degrees: list[int]
    top_degree: int
    max_index: int
    dual_coords: Matrix            # column j = coordinates of the dual lift a^j
    _degree_solvers: dict = dc_field(default_factory=dict)
    _reduce_solvers: dict = dc_field(default_factory=dict)
    _mono_decomp: dict = dc_field(default_factory=dict)
    _inv_mono_cache: dict = dc_field(default_factory=dict)

    # -- invariant-monomial bookkeeping --------------------------------------

    def inv_monomials_of_degree(self, d: int) -> list[tuple[int, ...]]:
        """Exponent tuples e with sum(e_i * deg_i) = d."""
        key = ("layer", d)
        if key in self._inv_mono_cache:
            return self._inv_mono_cache[key]

        def rec(i: int, rem: int):
            if i == len(self.inv_degrees):
                return [()] if rem == 0 else []
            out = []
            step = self.inv_degrees[i]
            for k in range(rem // step + 1):
                for rest in rec(i + 1, rem - k * step):
                    out.append((k,) + rest)
            return out

        res = rec(0, d)
        self._inv_mono_cache[key] = res
        return res

    def inv_mono_poly(self, exps: tuple[int, ...]) -> Poly:
        cached = self._inv_mono_cache.get(exps)
        if cached is not None:
            return cached
        out: Poly = {(0,) * self.nvars: self.field.one}
        for f, e in zip(self.invariants, exps):
            for _ in range(e):
                out = poly_mul(out, f)
        self._inv_mono_cache[exps] = out
        return out

    # -- reduction to the coinvariant basis ----------------------------------

    def _reduce_solver(self, d: int):
        solver = self._reduce_solvers.get(d)
        if solver is None:
            monos = monomials_of_degree(self.nvars, d)
            mono_pos = {m: i for i, m in enumerate(monos)}
            cols: list[list[CycScalar]] = []
            meta: list[tuple[str, object]] = []
            for fi, f in enumerate(self.invariants):
                dd = d - self.inv_degrees[fi]
                if dd < 0:
                    continue
                for mu in monomials_of_degree(self.nvars, dd):
                    prod = poly_mul({mu: self.field.one}, f)
                    vec = [self.field.zero] * len(monos)
                    for e, c in prod.items():
                        vec[mono_pos[e]] = c
                    cols.append(vec)
                    meta.append(("ideal", (fi, mu)))
            for bi, m in enumerate(self.basis_monos):
                if self.basis_degrees[bi] == d:
                    vec = [self.field.zero] * len(monos)
                    vec[mono_pos[m]] = self.field.one
                    cols.append(vec)
                    meta.append(("basis", bi))
            a = Matrix(self.field, [[col[r] for col in cols] for r in range(len(monos))])
            solver = (PreparedSolver(a), meta, mono_pos)
            self._reduce_solvers[d] = solver
        return solver

    def reduce_coords(self, p: Poly) -> dict[int, CycScalar]:
        """Coordinates of p's class over the coinvariant monomial basis."""
        out: dict[int, CycScalar] = {}
        by_degree: dict[int, Poly] = {}
        for e, c in p.items():
            by_degree.setdefault(sum(e), {})[e] = c
        for d, comp in by_degree.items():
            solver, meta, mono_pos = self._reduce_solver(d)
            vec = [self.field.zero] * len(mono_pos)
            for e, c in comp.items():
                vec[mono_pos[e]] = c
            sol = solver.solve(vec)
            if sol is None:
                raise GroupError("internal consistency error: reduction failed")
            for k, c in enumerate(sol):
                if c:
                    kind, payload = meta[k]
                    if kind == "basis":
                        cur = out.get(payload)
                        s = c if cur is None else cur + c
                        if s:
                            out[payload] = s
                        elif cur is not None:
                            del out[payload]
        return out

    def pi_top(self, p: Poly) -> CycScalar:
        """Projection to the top coinvariant component (coefficient of it)."""
        coords = self.reduce_coords(p)
        return coords.get(self.max_index, self.field.zero)

    # -- free-module decomposition over the invariants ------------------------

    def _degree_solver(self, d: int):
        solver = self._degree_solvers.get(d)
        if solver is None:
            monos = monomials_of_degree(self.nvars, d)
            mono_pos = {m: i for i, m in enumerate(monos)}
            cols = []
            meta = []
            for bi, bmono in enumerate(self.basis_monos):
                dd = d - self.basis_degrees[bi]
                if dd < 0:
                    continue
                for mu in self.inv_monomials_of_degree(dd):
                    prod = poly_mul(self.inv_mono_poly(mu), {bmono: self.field.one})
                    vec = [self.field.zero] * len(monos)
                    for e, c in prod.items():
                        vec[mono_pos[e]] = c
                    cols.append(vec)
                    meta.append((bi, mu))
            a = Matrix(self.field, [[col[r] for col in cols] for r in range(len(monos))])
            ps = PreparedSolver(a)
            if not ps.unique or ps.rank != len(monos):
                raise GroupError(
                    f"free-module decomposition not unique/onto at degree {d}; "
                    "this contradicts freeness over the invariants"
                )
            solver = (ps, meta, mono_pos)
            self._degree_solvers[d] = solver
        return solver

    def decompose_mono(self, exps: tuple[int, ...]) -> tuple[CentralPoly, ...]:
        """Coordinates z_i (polynomials in the invariants) of one monomial."""
        cached = self._mono_decomp.get(exps)
        if cached is not None:
            return cached
        d = sum(exps)
        solver, meta, mono_pos = self._degree_solver(d)
        vec = [self.field.zero] * len(mono_pos)
        vec[mono_pos[exps]] = self.field.one
        sol = solver.solve(vec)
        if sol is None:
            raise GroupError("internal consistency error: decomposition failed")
        zs = [CentralPoly.zero(self.var_names) for _ in self.basis_monos]
        for k, c in enumerate(sol):
            if c:
                bi, mu = meta[k]
                zs[bi] = zs[bi] + CentralPoly.monomial(self.var_names, mu, c)
        cached = tuple(zs)
        self._mono_decomp[exps] = cached
        return cached

    def decompose(self, p: Poly) -> list[CentralPoly]:
        """z_1..z_|W| with p = sum z_i a_i, each z_i in the invariants."""
        zs = [CentralPoly.zero(self.var_names) for _ in self.basis_monos]
        for e, c in p.items():
            for i, z in enumerate(self.decompose_mono(e)):
                if z:
                    zs[i] = zs[i] + z.scale(c)
        return zs

    def max_coord(self, p: Poly) -> CentralPoly:
        """The a_max coordinate of p in the free-module decomposition."""
        acc = CentralPoly.zero(self.var_names)
        for e, c in p.items():
            z = self.decompose_mono(e)[self.max_index]
            if z:
                acc = acc + z.scale(c)
        return acc

    def recompose(self, zs: list[CentralPoly]) -> Poly:
        """Inverse of decompose: sum z_i a_i as a plain polynomial."""
        out: Poly = {}
        for z, bmono in zip(zs, self.basis_monos):
            for mu, c in z.terms.items():
                poly_add_into(out, poly_mul(self.inv_mono_poly(mu), {bmono: self.field.one}), c)
        return out

    def poly_of_central(self, z: CentralPoly) -> Poly:
        """A central-subalgebra polynomial as a plain polynomial in the x's."""
        out: Poly = {}
        for mu, c in z.terms.items():
            poly_add_into(out, self.inv_mono_poly(mu), c)
        return out

    def dual_lift(self, j: int) -> Poly:
        """The homogeneous dual lift a^j as a polynomial."""
        out: Poly = {}
        for k in range(len(self.basis_monos)):
            c = self.dual_coords.at(k, j)
            if c:
                poly_add_into(out, {self.basis_monos[k]: c})
        return out


class _Span:
    """Incremental row space over a fixed monomial list."""

    def __init__(self, field: CycField, width: int):
        self.field = field
        self.width = width
        self.rows: dict[int, list[CycScalar]] = {}

    def residual(self, vec: list[CycScalar]) -> list[CycScalar]:
        v = list(vec)
        for p, row in self.rows.items():
            c = v[p]
            if c:
                for j in range(self.width):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
        return v

    def add(self, vec: list[CycScalar]) -> bool:
        v = self.residual(vec)
        for p in range(self.width):
            if v[p]:
                inv = v[p].inverse()
                self.rows[p] = [x * inv for x in v]
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def coinvariant_data(
    group: ReflectionGroup,
    side: str = "V",
    var_prefix: str = "p",
) -> CoinvariantData:
    """Invariants, coinvariant basis and dual bases for S(V) or S(V*)."""
    fld = group.field
    n = group.dim
    if side == "V":
        action, eps = group.action, group.eps_V
    elif side == "V*":
        action, eps = group.dual_action, group.eps_Vdual
    else:
        raise GroupError(f"side must be 'V' or 'V*', got {side!r}")

    size = group.size
    inv_list: list[tuple[int, Poly]] = []
    max_d = size + 1
    inv_avg = fld.from_rational(Fraction(1, size))
    d = 1
    while d <= max_d:
        prod = 1
        for dd, _ in inv_list:
            prod *= dd
        if len(inv_list) == n and prod == size:
            break
        monos = monomials_of_degree(n, d)
        mono_pos = {m: i for i, m in enumerate(monos)}

        def to_vec(p: Poly) -> list[CycScalar]:
            v = [fld.zero] * len(monos)
            for e, c in p.items():
                v[mono_pos[e]] = c
            return v

        # span of products of the invariants already found, in degree d
        old = _Span(fld, len(monos))
        def walk(i: int, rem: int, acc: Poly):
            if rem == 0:
                old.add(to_vec(acc))
                return
            if i == len(inv_list):
                return
            step = inv_list[i][0]
            cur = acc
            k = 0
            while k * step <= rem:
                if k > 0:
                    cur = poly_mul(cur, inv_list[i][1])
                walk(i + 1, rem - k * step, cur)
                k += 1
        if inv_list:
            walk(0, d, {(0,) * n: fld.one})

        full = _Span(fld, len(monos))
        for row in old.rows.values():
            full.add(list(row))
        for mono in monos:
            img: Poly = {}
            for g in range(size):
                poly_add_into(img, action.act_mono(g, mono), inv_avg)
            if img and full.add(to_vec(img)):
                inv_list.append((d, img))
        d += 1
    prod = 1
    for dd, _ in inv_list:
        prod *= dd
    if len(inv_list) != n or prod != size:
        raise GroupError(
            f"invariant search failed for {group.descriptor} ({side}): "
            f"degrees {[dd for dd, _ in inv_list]}"
        )
    inv_list.sort(key=lambda t: t[0])
    inv_degrees = [dd for dd, _ in inv_list]
    invariants = [p for _, p in inv_list]
    var_names = tuple(f"{var_prefix}{i + 1}" for i in range(n))

    # coinvariant monomial basis, degree by degree
    top_n = sum(dd - 1 for dd in inv_degrees)
    basis_monos: list[tuple[int, ...]] = []
    basis_degrees: list[int] = []
    for dd in range(top_n + 1):
        monos = monomials_of_degree(n, dd)
        mono_pos = {m: i for i, m in enumerate(monos)}
        span = _Span(fld, len(monos))
        for fi, f in enumerate(invariants):
            rem = dd - inv_degrees[fi]
            if rem < 0:
                continue
            for mu in monomials_of_degree(n, rem):
                prod_p = poly_mul({mu: fld.one}, f)
                vec = [fld.zero] * len(monos)
                for e, c in prod_p.items():
                    vec[mono_pos[e]] = c
                span.add(vec)
        for mono in sorted(monos):
            vec = [fld.zero] * len(monos)
            vec[mono_pos[mono]] = fld.one
            if span.add(vec):
                basis_monos.append(mono)
                basis_degrees.append(dd)
    if len(basis_monos) != size:
        raise GroupError(
            f"coinvariant dimension {len(basis_monos)} != |W| = {size} "
            f"for {group.descriptor} ({side})"
        )
    if basis_degrees.count(top_n) != 1:
        raise GroupError("top coinvariant component is not one-dimensional")
    max_index = basis_degrees.index(top_n)

    data = CoinvariantData(
        field=fld,
        nvars=n,
        action=action,
        eps=eps,
        top_character=[e.inverse() for e in eps],
        var_names=var_names,
        inv_degrees=inv_degrees,
        invariants=invariants,
        basis_monos=basis_monos,
        basis_degrees=basis_degrees,
        top_degree=top_n,
        max_index=max_index,
        dual_coords=Matrix.identity(fld, size),
    )

    # dual bases for B(a, a') = pi(a' a)
    gram_rows = []
    for i, mi in enumerate(basis_monos):
        row = []
        for j, mj in enumerate(basis_monos):
            if basis_degrees[i] + basis_degrees[j] != top_n:
                row.append(fld.zero)
            else:
                row.append(data.pi_top(poly_mul({mj: fld.one}, {mi: fld.one})))
        gram_rows.append(row)
    b = Matrix(fld, gram_rows)
    data.dual_coords = b.inverse()
    return data
