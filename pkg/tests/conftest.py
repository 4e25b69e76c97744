import random

import pytest

from frobex.affine_hecke import AffineHeckeA1
from frobex.cherednik import CherednikAlgebra
from frobex.families import (
    affine_instance,
    borel_instance,
    cherednik_instance,
    function_instance,
    graded_hecke_instance,
    uqsl2_instance,
)
from frobex.graded_hecke import GradedHeckeAlgebra
from frobex.quantum import QuantumBorelSL2, QuantumFunctionSL2, QuantumSL2


def rng(seed=0):
    return random.Random(seed)


@pytest.fixture(scope="session")
def cherednik_z2():
    alg = CherednikAlgebra("Z/2", c=1)
    return alg, cherednik_instance(alg)


@pytest.fixture(scope="session")
def cherednik_s3():
    alg = CherednikAlgebra("S3", c=1)
    return alg, cherednik_instance(alg)


@pytest.fixture(scope="session")
def graded_s3():
    alg = GradedHeckeAlgebra("S3", "solved", rng=random.Random(3))
    return alg, graded_hecke_instance(alg)


@pytest.fixture(scope="session")
def graded_s3_zero():
    alg = GradedHeckeAlgebra("S3", "zero", rng=random.Random(3))
    return alg, graded_hecke_instance(alg)


@pytest.fixture(scope="session")
def affine_v2():
    alg = AffineHeckeA1(2)
    return alg, affine_instance(alg)


@pytest.fixture(scope="session")
def uq3():
    alg = QuantumSL2(3)
    return alg, uqsl2_instance(alg)


@pytest.fixture(scope="session")
def uq5():
    alg = QuantumSL2(5)
    return alg, uqsl2_instance(alg)


@pytest.fixture(scope="session")
def borel3():
    alg = QuantumBorelSL2(3)
    return alg, borel_instance(alg)


@pytest.fixture(scope="session")
def oq3():
    alg = QuantumFunctionSL2(3)
    return alg, function_instance(alg)
