"""Adapters packaging each algebra family as a FrobeniusInstance.

Each adapter fixes the basis order, the functional, the witness op with its
side (the side is the one the family's non-degeneracy argument actually
uses: right for the Cherednik, graded Hecke and affine Hecke families, left
for the three quantum families), and the expected Nakayama images of the
generators where the theory predicts them.
"""

from __future__ import annotations

from .affine_hecke import AffineHeckeA1
from .cherednik import CherednikAlgebra
from .graded_hecke import GradedHeckeAlgebra
from .pbw import PBWElement
from .quantum import QuantumBorelSL2, QuantumFunctionSL2, QuantumSL2
from .verifier import FrobeniusInstance, GeneratorExpectation


def borel_nakayama(ell: int, phi_k, phi_e, rng=None):
    """Nakayama matrix and generator images for the reduced quantum Borel."""
    from . import verifier as V

    alg = QuantumBorelSL2(ell)
    inst = borel_instance(alg)
    chi = alg.character(phi_k, phi_e)
    g = V.gram(inst, chi)
    res = V.nakayama(inst, chi, g, rng=rng, reduce_fn=V.make_reduce(inst, chi))
    return res.matrix, res.generator_images, res


def function_algebra_nakayama(ell: int, phi_f, phi_k, phi_e, rng=None):
    """Nakayama matrix and generator images for the reduced function algebra."""
    from . import verifier as V

    alg = QuantumFunctionSL2(ell)
    inst = function_instance(alg)
    chi = alg.character(phi_f, phi_k, phi_e)
    g = V.gram(inst, chi)
    res = V.nakayama(inst, chi, g, rng=rng, reduce_fn=V.make_reduce(inst, chi))
    return res.matrix, res.generator_images, res


def cherednik_instance(alg: CherednikAlgebra) -> FrobeniusInstance:
    group = alg.group

    def generators(chi):
        out = []
        zero = alg._zero_exp
        for w in range(group.size):
            out.append(
                GeneratorExpectation(
                    name=group.element_label(w),
                    element=PBWElement({(zero, w, zero): alg.field.one}),
                    kind="fixed",
                )
            )
        for j in range(group.dim):
            e = tuple(1 if t == j else 0 for t in range(group.dim))
            out.append(
                GeneratorExpectation(
                    name=f"x{j + 1}",
                    element=PBWElement({(e, 0, zero): alg.field.one}),
                    kind="fixed",
                )
            )
            out.append(
                GeneratorExpectation(
                    name=f"y{j + 1}",
                    element=PBWElement({(zero, 0, e): alg.field.one}),
                    kind="fixed",
                )
            )
        return out

    return FrobeniusInstance(
        name=f"cherednik[{group.descriptor}]",
        family="cherednik",
        field=alg.field,
        dim=alg.dim,
        variables=alg.variables,
        element=lambda i: alg.element_of(alg.basis[i]),
        multiply=alg.multiply,
        decompose=alg.decompose,
        phi=alg.phi,
        top_index=alg.top_index,
        unit_index=alg.unit_index,
        witness=alg.witness,
        witness_side="right",
        leading_of=alg.leading_of,
        label=alg.label,
        generators=generators,
        dual_pair_mode="full",
        degree_of=lambda idx: (
            alg.coinv_v.basis_degrees[alg.basis[idx][0]]
            + alg.coinv_w.basis_degrees[alg.basis[idx][2]]
        ),
        summary={
            "algebra": "cherednik",
            "group": group.descriptor,
            "group_order": group.size,
            "dimension": alg.dim,
            "coefficient_order": alg.field.order,
            "c": [str(c) for c in alg.cparams],
            "invariant_degrees_V": alg.coinv_v.inv_degrees,
            "invariant_degrees_Vdual": alg.coinv_w.inv_degrees,
        },
    )


def graded_hecke_instance(alg: GradedHeckeAlgebra) -> FrobeniusInstance:
    group = alg.group

    def generators(chi):
        out = []
        for w in range(group.size):
            # nu(w) = (top character)(w)^-1 w: the determinant-character
            # twist of the top coinvariant class.  With variables spanning V
            # itself this is eps_V(w); on real groups it equals eps_V(w)^-1
            # as well, so the two conventions agree there.
            out.append(
                GeneratorExpectation(
                    name=group.element_label(w),
                    element=alg.gen_w(w),
                    kind="scale",
                    scale=alg.coinv_v.top_character[w].inverse(),
                )
            )
        for j in range(group.dim):
            out.append(
                GeneratorExpectation(
                    name=f"v{j + 1}", element=alg.gen_x(j), kind="fixed"
                )
            )
        return out

    return FrobeniusInstance(
        name=f"graded-hecke[{group.descriptor}]",
        family="graded-hecke",
        field=alg.field,
        dim=alg.dim,
        variables=alg.variables,
        element=lambda i: alg.element_of(alg.basis[i]),
        multiply=alg.multiply,
        decompose=alg.decompose,
        phi=alg.phi,
        top_index=alg.top_index,
        unit_index=alg.unit_index,
        witness=alg.witness,
        witness_side="right",
        leading_of=alg.leading_of,
        label=alg.label,
        generators=generators,
        dual_pair_mode="triangular",
        degree_of=lambda idx: alg.coinv_v.basis_degrees[alg.basis[idx][0]],
        summary={
            "algebra": "graded-hecke",
            "group": group.descriptor,
            "group_order": group.size,
            "dimension": alg.dim,
            "coefficient_order": alg.field.order,
            "omega_support": [group.element_label(w) for w in alg.omega.support()],
            "invariant_degrees": alg.coinv_v.inv_degrees,
        },
    )


def affine_instance(alg: AffineHeckeA1) -> FrobeniusInstance:
    def generators(chi):
        return [
            GeneratorExpectation(
                name="Ts", element=alg.element_of((1, 0)), kind="record"
            ),
            GeneratorExpectation(
                name="theta", element=alg.element_of((0, 1)), kind="record"
            ),
        ]

    return FrobeniusInstance(
        name="affine-hecke-a1",
        family="affine-hecke-a1",
        field=alg.field,
        dim=alg.dim,
        variables=alg.variables,
        element=lambda i: alg.element_of(alg.basis[i]),
        multiply=alg.multiply,
        decompose=alg.decompose,
        phi=alg.phi,
        top_index=alg.top_index,
        unit_index=alg.unit_index,
        witness=alg.witness,
        witness_side="right",
        leading_of=alg.leading_of,
        label=alg.label,
        generators=generators,
        summary={
            "algebra": "affine-hecke-a1",
            "dimension": alg.dim,
            "coefficient_order": alg.field.order,
            "v0": str(alg.v0),
        },
    )


def uqsl2_instance(alg: QuantumSL2) -> FrobeniusInstance:
    def generators(chi):
        one = alg.field.one
        return [
            GeneratorExpectation("E", PBWElement({(0, 0, 1): one}), "fixed"),
            GeneratorExpectation("F", PBWElement({(1, 0, 0): one}), "fixed"),
            GeneratorExpectation("K", PBWElement({(0, 1, 0): one}), "fixed"),
            GeneratorExpectation("K^-1", PBWElement({(0, -1, 0): one}), "fixed"),
        ]

    return FrobeniusInstance(
        name=f"uq-sl2[l={alg.ell}]",
        family="uq-sl2",
        field=alg.field,
        dim=alg.dim,
        variables=alg.variables,
        element=lambda i: alg.element_of(alg.basis[i]),
        multiply=alg.multiply,
        decompose=alg.decompose,
        phi=alg.phi,
        top_index=alg.top_index,
        unit_index=alg.unit_index,
        witness=alg.witness,
        witness_side="left",
        leading_of=alg.leading_of,
        label=alg.label,
        generators=generators,
        summary={
            "algebra": "uq-sl2",
            "ell": alg.ell,
            "dimension": alg.dim,
            "coefficient_order": alg.field.order,
            "max_degree": alg.max_deg,
        },
    )


def borel_instance(alg: QuantumBorelSL2) -> FrobeniusInstance:
    def generators(chi):
        one = alg.field.one
        e = alg.nakayama_k_exponent()
        return [
            GeneratorExpectation("E", PBWElement({(0, 1): one}), "fixed"),
            GeneratorExpectation(
                "K",
                PBWElement({(1, 0): one}),
                "scale",
                scale=alg.field.root_power(e),
            ),
            GeneratorExpectation(
                "K^-1",
                PBWElement({(-1, 0): one}),
                "scale",
                scale=alg.field.root_power(-e),
            ),
        ]

    return FrobeniusInstance(
        name=f"uq-borel-sl2[l={alg.ell}]",
        family="uq-borel-sl2",
        field=alg.field,
        dim=alg.dim,
        variables=alg.variables,
        element=lambda i: alg.element_of(alg.basis[i]),
        multiply=alg.multiply,
        decompose=alg.decompose,
        phi=alg.phi,
        top_index=alg.top_index,
        unit_index=alg.unit_index,
        witness=alg.witness,
        witness_side="left",
        leading_of=alg.leading_of,
        label=alg.label,
        generators=generators,
        summary={
            "algebra": "uq-borel-sl2",
            "ell": alg.ell,
            "dimension": alg.dim,
            "coefficient_order": alg.field.order,
            "nakayama_k_exponent": alg.nakayama_k_exponent(),
        },
    )


def function_instance(alg: QuantumFunctionSL2) -> FrobeniusInstance:
    def generators(chi):
        one = alg.field.one
        mag = alg.nakayama_k_exponent_magnitude()
        return [
            GeneratorExpectation("F(x)1", PBWElement({(1, 0, 0): one}), "fixed"),
            GeneratorExpectation("1(x)E", PBWElement({(0, 0, 1): one}), "fixed"),
            GeneratorExpectation(
                "K_-w(x)K_w",
                PBWElement({(0, 1, 0): one}),
                "scale_pm",
                scale_pm=(alg.field.root_power(mag), alg.field.root_power(-mag)),
            ),
        ]

    return FrobeniusInstance(
        name=f"oq-sl2-localized[l={alg.ell}]",
        family="oq-sl2-localized",
        field=alg.field,
        dim=alg.dim,
        variables=alg.variables,
        element=lambda i: alg.element_of(alg.basis[i]),
        multiply=alg.multiply,
        decompose=alg.decompose,
        phi=alg.phi,
        top_index=alg.top_index,
        unit_index=alg.unit_index,
        witness=alg.witness,
        witness_side="left",
        leading_of=alg.leading_of,
        label=alg.label,
        generators=generators,
        summary={
            "algebra": "oq-sl2-localized",
            "ell": alg.ell,
            "dimension": alg.dim,
            "coefficient_order": alg.field.order,
            "nakayama_k_exponent_magnitude": alg.nakayama_k_exponent_magnitude(),
        },
    )
