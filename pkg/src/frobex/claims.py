"""Family-specific claim suites: executable identity checks.

These are the engine-level properties run under the `claims` check: the
associativity oracle, normal-form idempotence, per-family degree bounds, the
pre-specialisation symmetry of the Cherednik functional, the quantum
degree-vanishing claim and Q-grading selection rule, the affine T-pair
identity, and the structure-constant cross-check on small instances.
"""

from __future__ import annotations

from .pbw import PBWElement, check_associativity, check_idempotence
from .verifier import FrobeniusInstance, make_reduce, structure_cross_check


def run_claims(alg, inst: FrobeniusInstance, rng, chi=None, trials: int = 100) -> dict:
    out: dict = {}
    fld = inst.field
    monos = [next(iter(inst.element(i).terms)) for i in range(inst.dim)]

    bad = check_associativity(
        inst.multiply,
        monos,
        rng,
        element=lambda m: PBWElement({m: fld.one}),
        trials=trials,
    )
    out["associativity"] = {"trials": trials, "ok": bad is None}
    if bad is not None:
        out["associativity"]["offending"] = repr(bad)

    sample = [monos[rng.randrange(len(monos))] for _ in range(min(50, inst.dim))]
    bad_word = check_idempotence(alg.rs, [alg.rs.expand(m) for m in sample])
    out["idempotence"] = {"ok": bad_word is None}

    fam = inst.family
    if fam == "cherednik":
        out["phi_symmetry"] = _cherednik_symmetry(alg, rng, trials=60)
        out["degree_bound"] = _degree_bound(
            alg, inst, rng, lambda m: sum(m[0]) + sum(m[2]), trials=60
        )
    elif fam == "graded-hecke":
        out["commutator_degree_bound"] = _gh_commutator_bound(alg, rng, trials=40)
        out["degree_bound"] = _degree_bound(
            alg, inst, rng, lambda m: sum(m[0]), trials=60
        )
    elif fam == "affine-hecke-a1":
        tests = alg.leading_T_coefficient_test()
        out["leading_T_pair"] = {
            "ok": all(ok for (_x, _w, ok) in tests),
            "cases": [f"T_{x} T_{w}" for (x, w, ok) in tests],
        }
        out["bernstein_filtration"] = _affine_filtration(alg, rng)
    elif fam == "uq-sl2":
        out["claim1_degree_vanishing"] = _quantum_claim1(alg, rng, pairs=500)
        out["q_grading_selection"] = _quantum_qgrading(alg, rng, trials=100)
        out["degree_bound"] = _degree_bound(
            alg, inst, rng, lambda m: m[0] + m[2], trials=60
        )
    elif fam in ("uq-borel-sl2", "oq-sl2-localized"):
        out["degree_bound"] = _degree_bound(
            alg,
            inst,
            rng,
            (lambda m: m[1]) if fam == "uq-borel-sl2" else (lambda m: m[0] + m[2]),
            trials=60,
        )

    if chi is not None and inst.dim <= 32:
        reduce_fn = make_reduce(inst, chi)
        from .verifier import gram as gram_fn

        g = gram_fn(inst, chi)
        out["structure_cross_check"] = {
            "ok": structure_cross_check(inst, chi, g, reduce_fn)
        }
    out["ok"] = all(v.get("ok", True) for v in out.values() if isinstance(v, dict))
    return out


def _cherednik_symmetry(alg, rng, trials: int) -> dict:
    """Phi(u v) = Phi(v u) before specialisation, u a generator."""
    zero = alg._zero_exp
    gens = []
    for w in range(alg.group.size):
        gens.append(PBWElement({(zero, w, zero): alg.field.one}))
    for j in range(alg.group.dim):
        e = tuple(1 if t == j else 0 for t in range(alg.group.dim))
        gens.append(PBWElement({(e, 0, zero): alg.field.one}))
        gens.append(PBWElement({(zero, 0, e): alg.field.one}))
    for _ in range(trials):
        u = gens[rng.randrange(len(gens))]
        b = alg.basis[rng.randrange(len(alg.basis))]
        v = alg.element_of(b)
        if alg.phi(alg.multiply(u, v)) != alg.phi(alg.multiply(v, u)):
            return {"ok": False, "trials": trials}
    return {"ok": True, "trials": trials}


def _degree_bound(alg, inst, rng, degree, trials: int) -> dict:
    """Filtration degree of a product never exceeds the sum of degrees."""
    for _ in range(trials):
        i = rng.randrange(inst.dim)
        j = rng.randrange(inst.dim)
        mi = next(iter(inst.element(i).terms))
        mj = next(iter(inst.element(j).terms))
        prod = inst.multiply(inst.element(i), inst.element(j))
        bound = degree(mi) + degree(mj)
        if any(degree(m) > bound for m in prod.terms):
            return {"ok": False, "pair": (inst.label(i), inst.label(j))}
    return {"ok": True, "trials": trials}


def _gh_commutator_bound(alg, rng, trials: int) -> dict:
    """|[f, g]| <= |f| + |g| - 2 for polynomial-part elements."""
    from .reflection import monomials_of_degree

    n = alg.group.dim
    for _ in range(trials):
        d1 = rng.randrange(1, 4)
        d2 = rng.randrange(1, 4)
        m1 = rng.choice(monomials_of_degree(n, d1))
        m2 = rng.choice(monomials_of_degree(n, d2))
        f = PBWElement({(m1, 0): alg.field.one})
        g = PBWElement({(m2, 0): alg.field.one})
        comm = alg.multiply(f, g) - alg.multiply(g, f)
        if any(sum(xe) > d1 + d2 - 2 for (xe, _w) in comm.terms):
            return {"ok": False, "pair": (m1, m2)}
    return {"ok": True, "trials": trials}


def _affine_filtration(alg, rng) -> dict:
    """theta^j T_s lies in H_1 with leading term T_s theta^-j."""
    for j in list(range(-4, 5)):
        if j == 0:
            continue
        res = alg.straighten_theta_past_T(j, "s")
        lead = res.terms.get((1, -j))
        if lead != alg.field.one:
            return {"ok": False, "j": j, "reason": "leading term wrong"}
        if any(t > 1 for (t, _jj) in res.terms):
            return {"ok": False, "j": j, "reason": "escapes H_1"}
    return {"ok": True}


def _quantum_claim1(alg, rng, pairs: int) -> dict:
    """deg(x) + deg(y) < max implies Phi(xy) = 0, sampled over B'."""
    ell = alg.ell
    tried = 0
    while tried < pairs:
        x = (rng.randrange(ell), rng.randrange(ell), rng.randrange(ell))
        y = (rng.randrange(ell), rng.randrange(ell), rng.randrange(ell))
        if alg.deg(x) + alg.deg(y) >= alg.max_deg:
            continue
        tried += 1
        p = alg.phi(alg.multiply(alg.element_of(x), alg.element_of(y)))
        if p:
            return {"ok": False, "pair": (x, y)}
    return {"ok": True, "pairs": pairs}


def _quantum_qgrading(alg, rng, trials: int) -> dict:
    """Phi kills any basis monomial whose Q-grade is nonzero mod l."""
    ell = alg.ell
    done = 0
    while done < trials:
        m = (rng.randrange(2 * ell), rng.randrange(-ell, ell + 1), rng.randrange(2 * ell))
        if (m[2] - m[0]) % ell == 0:
            continue
        done += 1
        if alg.phi(alg.element_of(m)):
            return {"ok": False, "monomial": m}
    return {"ok": True, "trials": trials}
