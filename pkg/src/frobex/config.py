"""Run configuration: TOML parsing and instance construction.

One config file describes one algebra instance, the central characters to
test, and the checks to run.  Scalars in configs are strings: rationals
("2", "-1/2") or small polynomials in the root of unity z ("z", "2*z^2",
"1 + z").
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

try:
    import tomllib  # Python >= 3.11
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

from .affine_hecke import AffineHeckeA1
from .cherednik import CherednikAlgebra
from .families import (
    affine_instance,
    borel_instance,
    cherednik_instance,
    function_instance,
    graded_hecke_instance,
    uqsl2_instance,
)
from .graded_hecke import GradedHeckeAlgebra, OmegaData
from .quantum import QuantumBorelSL2, QuantumFunctionSL2, QuantumSL2
from .reflection import build_group
from .scalars import CycField, CycScalar

ALL_CHECKS = ("gram", "nakayama", "dual", "hypothesis", "claims", "centre")

RANDOM_GRID = ("-2", "-1", "0", "1", "2", "1/2")
RANDOM_UNIT_GRID = ("-2", "-1", "1", "2", "1/2")


class ConfigError(ValueError):
    pass


def parse_scalar(text, field: CycField) -> CycScalar:
    """Parse "p/q", "z", "z^k", "c*z^k" and "+"/"- "-joined sums thereof."""
    if isinstance(text, (int, float)):
        if isinstance(text, float) and not text.is_integer():
            raise ConfigError(f"non-exact numeric scalar {text!r}; use strings like \"1/2\"")
        return field.from_rational(int(text))
    if not isinstance(text, str):
        raise ConfigError(f"cannot parse scalar {text!r}")
    total = field.zero
    try:
        for raw in text.replace("- ", "+ -").split("+"):
            part = raw.strip()
            if not part:
                continue
            neg = part.startswith("-")
            if neg:
                part = part[1:].strip()
            if "z" in part:
                coeff_s, _, pow_s = part.partition("z")
                coeff_s = coeff_s.rstrip("*").strip()
                coeff = Fraction(coeff_s) if coeff_s else Fraction(1)
                if pow_s and not pow_s.startswith("^"):
                    raise ValueError(f"bad power suffix {pow_s!r}")
                k = int(pow_s[1:]) if pow_s else 1
                term = field.root_power(k) * field.from_rational(coeff)
            else:
                term = field.from_rational(Fraction(part))
            total = total + (-term if neg else term)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot parse scalar {text!r}: {exc}")
    return total


@dataclass
class RunConfig:
    algebra: str
    instance_table: dict
    characters_table: dict
    checks: tuple
    hypothesis_samples: int
    centre_check_degree: int
    threads: int
    seed: int
    out_dir: str
    csv: bool
    name: str
    raw: dict = dc_field(default_factory=dict)


def load_config(path: str) -> RunConfig:
    with open(path, "rb") as fh:
        try:
            raw = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"bad TOML in {path}: {exc}")
    inst = raw.get("instance")
    if not isinstance(inst, dict) or "algebra" not in inst:
        raise ConfigError("config needs an [instance] table with an 'algebra' key")
    algebra = inst["algebra"]
    if algebra not in (
        "cherednik",
        "graded-hecke",
        "affine-hecke-a1",
        "uq-sl2",
        "uq-borel-sl2",
        "oq-sl2-localized",
    ):
        raise ConfigError(f"unknown algebra kind {algebra!r}")
    checks_tbl = raw.get("checks", {})
    checks = tuple(checks_tbl.get("run", [c for c in ALL_CHECKS if c != "centre"]))
    for c in checks:
        if c not in ALL_CHECKS:
            raise ConfigError(f"unknown check {c!r}; choose from {ALL_CHECKS}")
    run_tbl = raw.get("run", {})
    name = run_tbl.get("name") or os.path.splitext(os.path.basename(path))[0]
    return RunConfig(
        algebra=algebra,
        instance_table=inst,
        characters_table=raw.get("characters", {}),
        checks=checks,
        hypothesis_samples=int(checks_tbl.get("hypothesis_samples", 50)),
        centre_check_degree=int(checks_tbl.get("centre_check_degree", 4)),
        threads=int(run_tbl.get("threads", 1)),
        seed=int(run_tbl.get("seed", 0)),
        out_dir=run_tbl.get("out", "reports"),
        csv=bool(run_tbl.get("csv", False)),
        name=name,
        raw=raw,
    )


def build_instance(cfg: RunConfig):
    """Construct (algebra, FrobeniusInstance, unit_variables) from a config."""
    t = cfg.instance_table
    kind = cfg.algebra
    try:
        if kind == "cherednik":
            descriptor = t.get("group")
            if not descriptor:
                raise ConfigError("cherednik needs a 'group' descriptor")
            group = build_group(descriptor)
            c = t.get("c", 1)
            if isinstance(c, list):
                c = [parse_scalar(x, group.field) for x in c]
            else:
                c = parse_scalar(c, group.field)
            alg = CherednikAlgebra(group, c=c)
            return alg, cherednik_instance(alg), set()
        if kind == "graded-hecke":
            group = t.get("group")
            if not group:
                raise ConfigError("graded-hecke needs a 'group' descriptor")
            omega = t.get("omega", "solved")
            if omega not in ("solved", "zero"):
                if omega != "explicit":
                    raise ConfigError("omega must be 'solved', 'zero' or 'explicit'")
                rows = t.get("omega_table")
                if not rows:
                    raise ConfigError("explicit omega needs [[instance.omega_table]]")
                g = build_group(group)
                forms = {}
                for row in rows:
                    mat = [
                        [parse_scalar(x, g.field) for x in r] for r in row["matrix"]
                    ]
                    forms[int(row["element"])] = tuple(tuple(r) for r in mat)
                omega = OmegaData(forms)
                alg = GradedHeckeAlgebra(g, omega, rng=random.Random(cfg.seed))
                return alg, graded_hecke_instance(alg), set()
            alg = GradedHeckeAlgebra(group, omega, rng=random.Random(cfg.seed))
            return alg, graded_hecke_instance(alg), set()
        if kind == "affine-hecke-a1":
            fld = CycField.get(int(t.get("order", 1)))
            v0 = parse_scalar(t.get("v0", "2"), fld)
            alg = AffineHeckeA1(v0)
            return alg, affine_instance(alg), set()
        ell = int(t.get("ell", 3))
        if kind == "uq-sl2":
            alg = QuantumSL2(ell)
            return alg, uqsl2_instance(alg), {"Kl"}
        if kind == "uq-borel-sl2":
            alg = QuantumBorelSL2(ell)
            return alg, borel_instance(alg), {"Kl"}
        alg = QuantumFunctionSL2(ell)
        return alg, function_instance(alg), {"kl"}
    except ConfigError:
        raise
    except Exception as exc:
        from .graded_hecke import OmegaInvalidError

        if isinstance(exc, OmegaInvalidError):
            raise  # a verification failure, not a config problem
        raise ConfigError(f"instance construction failed: {exc}")


def build_characters(cfg: RunConfig, inst, unit_vars) -> list[tuple[str, dict]]:
    """Labelled central characters from the [characters] table."""
    tbl = cfg.characters_table
    fld = inst.field
    mode = tbl.get("mode", "list" if tbl.get("values") else "augmentation")
    out = []
    if cfg.algebra == "affine-hecke-a1":
        zeta0 = cfg.instance_table.get("zeta0", ["0", "3", "5", "1/2"])
        for k, z in enumerate(zeta0):
            out.append((f"zeta0={z}", {"zeta": parse_scalar(z, fld)}))
        return out
    if mode == "augmentation":
        if any(v in unit_vars for v in inst.variables):
            raise ConfigError(
                f"{cfg.algebra} has unit-constrained central generators; "
                "augmentation is not a valid character"
            )
        out.append(("augmentation", {v: fld.zero for v in inst.variables}))
        return out
    if mode == "random":
        count = int(tbl.get("count", 2))
        seed = int(tbl.get("seed", cfg.seed))
        rng = random.Random(seed)
        for k in range(count):
            chi = {}
            for v in inst.variables:
                grid = RANDOM_UNIT_GRID if v in unit_vars else RANDOM_GRID
                chi[v] = parse_scalar(rng.choice(grid), fld)
            out.append((f"random{k}", chi))
        return out
    if mode != "list":
        raise ConfigError(f"unknown characters mode {mode!r}")
    values = tbl.get("values")
    if not values:
        raise ConfigError("characters mode 'list' needs [[characters.values]]")
    for k, row in enumerate(values):
        if row == "augmentation" or row.get("augmentation"):
            chi = {v: fld.zero for v in inst.variables}
            label = "augmentation"
        else:
            chi = {}
            for v in inst.variables:
                if v not in row:
                    raise ConfigError(f"character {k} missing value for {v!r}")
                chi[v] = parse_scalar(row[v], fld)
            label = row.get("label", f"chi{k}")
        for v in unit_vars:
            if not chi[v]:
                raise ConfigError(f"character {k}: {v} must be a unit (nonzero)")
        out.append((label, chi))
    return out
