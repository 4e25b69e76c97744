"""Generic noncommutative normal-form engine.

Elements are finitely supported CycScalar-linear combinations of
algebra-specific PBW monomials.  An algebra plugs in a RewriteSystem:

  * a rank function making the generator alphabet totally ordered,
  * a pair-rewrite callback that maps an adjacent out-of-order generator
    pair to a linear combination of replacement subwords,
  * compress/expand between sorted words and canonical monomial encodings,
  * a filtration weight on words: no rewrite output may increase it (this,
    with a hard step budget, is the termination guard against invalid rule
    data such as an incoherent Omega table).

Rewriting is leftmost-outermost on the first out-of-order adjacent pair, so
normal forms are deterministic.  Multiplication is the bilinear extension of
concatenate-then-normalise, with a per-system monomial-pair cache.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .scalars import CycField, CycScalar


class RewriteError(RuntimeError):
    pass


class PBWElement:
    """Finitely supported map from canonical monomials to scalars."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = terms if terms is not None else {}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def items(self):
        return self.terms.items()

    def __add__(self, other: "PBWElement") -> "PBWElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            cur = out.get(m)
            s = c if cur is None else cur + c
            if s:
                out[m] = s
            elif cur is not None:
                del out[m]
        return PBWElement(out)

    def __sub__(self, other: "PBWElement") -> "PBWElement":
        return self + other.scale(-1)

    def scale(self, c) -> "PBWElement":
        if not c:
            return PBWElement({})
        return PBWElement({m: v * c for m, v in self.terms.items()})

    def add_term(self, mono, c) -> None:
        cur = self.terms.get(mono)
        s = c if cur is None else cur + c
        if s:
            self.terms[mono] = s
        elif cur is not None:
            del self.terms[mono]

    def __repr__(self):
        if not self.terms:
            return "PBWElement(0)"
        bits = [f"({c})*{m}" for m, c in sorted(self.terms.items(), key=lambda t: repr(t[0]))]
        return "PBWElement(" + " + ".join(bits) + ")"


def render_element(elt: PBWElement, label: Callable[[object], str]) -> str:
    if not elt.terms:
        return "0"
    bits = []
    for m in sorted(elt.terms, key=label):
        c = str(elt.terms[m])
        if " + " in c:
            c = f"({c})"
        bits.append(f"{c} * {label(m)}")
    return " + ".join(bits)


class RewriteSystem:
    """Per-algebra rewrite callbacks driving the generic engine.

    rewrite_pair(t1, t2) returns None when the pair is already in order,
    otherwise a list of (replacement word tuple, coefficient) pairs whose
    spliced-in sum equals t1*t2 in the algebra.

    The system is immutable after construction apart from the product memo
    table, whose insertions are idempotent (same key, same value), so
    callers may multiply disjoint pairs concurrently.
    """

    def __init__(
        self,
        field: CycField,
        rewrite_pair: Callable,
        compress: Callable,
        expand: Callable,
        weight: Callable,
        step_budget: int = 10**6,
    ):
        self.field = field
        self.rewrite_pair = rewrite_pair
        self.compress = compress
        self.expand = expand
        self.weight = weight
        self.step_budget = step_budget
        self._pair_cache: dict = {}

    # -- normal form ----------------------------------------------------------

    def normal_form_word(self, word: tuple, coeff=None) -> PBWElement:
        if coeff is None:
            coeff = self.field.one
        pending: dict[tuple, CycScalar] = {tuple(word): coeff}
        out = PBWElement({})
        rewrite_pair = self.rewrite_pair
        weight = self.weight
        budget = self.step_budget
        steps = 0
        while pending:
            w, c = pending.popitem()
            reps = None
            pos = -1
            for i in range(len(w) - 1):
                reps = rewrite_pair(w[i], w[i + 1])
                if reps is not None:
                    pos = i
                    break
            if reps is None:
                out.add_term(self.compress(w), c)
                continue
            steps += 1
            if steps > budget:
                raise RewriteError(
                    f"rewrite step budget ({budget}) exceeded; invalid rule data?"
                )
            base = weight(w)
            head, tail = w[:pos], w[pos + 2 :]
            for mid, rc in reps:
                nw = head + mid + tail
                if weight(nw) > base:
                    raise RewriteError(
                        f"rewrite increased filtration weight on {w[pos]}, {w[pos+1]}"
                    )
                nc = c * rc
                cur = pending.get(nw)
                s = nc if cur is None else cur + nc
                if s:
                    pending[nw] = s
                elif cur is not None:
                    del pending[nw]
        return out

    def normal_form(self, words: Iterable[tuple[tuple, CycScalar]]) -> PBWElement:
        """Normal form of a linear combination of raw words."""
        out = PBWElement({})
        for w, c in words:
            nf = self.normal_form_word(w, c)
            for m, v in nf.items():
                out.add_term(m, v)
        return out

    # -- multiplication ---------------------------------------------------------

    def multiply_monomials(self, m1, m2) -> PBWElement:
        key = (m1, m2)
        cached = self._pair_cache.get(key)
        if cached is None:
            cached = self.normal_form_word(self.expand(m1) + self.expand(m2))
            self._pair_cache[key] = cached
        return cached

    def multiply(self, a: PBWElement, b: PBWElement) -> PBWElement:
        out = PBWElement({})
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                c = c1 * c2
                for m, v in self.multiply_monomials(m1, m2).items():
                    out.add_term(m, v * c)
        return out

    def monomial(self, m, coeff=None) -> PBWElement:
        return PBWElement({m: coeff if coeff is not None else self.field.one})

    def one(self, unit_mono) -> PBWElement:
        return PBWElement({unit_mono: self.field.one})


def check_associativity(
    multiply: Callable,
    monomials: list,
    rng,
    element: Callable,
    trials: int = 100,
):
    """Sample (a, b, c) triples and compare (ab)c with a(bc).

    Returns None when all trials pass, else the offending triple.  This is
    the executable form of the PBW coherence conditions and the detector for
    invalid structure data.
    """
    for _ in range(trials):
        a = element(rng.choice(monomials))
        b = element(rng.choice(monomials))
        c = element(rng.choice(monomials))
        left = multiply(multiply(a, b), c)
        right = multiply(a, multiply(b, c))
        if left != right:
            return (a, b, c)
    return None


def check_idempotence(rs: RewriteSystem, words: list[tuple], strict: bool = True):
    """normal_form of an already-canonical element must be itself."""
    for w in words:
        nf = rs.normal_form_word(tuple(w))
        for mono in nf.terms:
            again = rs.normal_form_word(rs.expand(mono))
            if len(again.terms) != 1 or mono not in again.terms:
                return w
            if again.terms[mono] != rs.field.one:
                return w
    return None
