"""Scenario harness: validated configs, seeded runs, canonical reports.

Each scenario wires a construction to its certifications and emits a
report whose canonical JSON is byte-reproducible for a fixed config
(the wall-time field is excluded from the canonical form).  Every
numeric claim in a report points at a certificate; anything the
underlying modules cannot verify raises instead of being reported.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import jsonschema

from ._version import __version__
from .certify import (
    HyperplaneFunctional,
    all_subsets_full_rank,
    annihilator_decay_check,
    coefficient_samples,
    density_certificate,
    greedy_separated_subset,
    hyperplane_cover,
    l1_lower_bound_certificate,
    free_set_extract,
    pigeonhole_majority,
    support_annihilator_witness,
    weak_norm_convergence_probe,
)
from .constructors import (
    BiorthSystem,
    GeometricSchedule,
    IncompleteModel,
    OpenBall,
    convergence_gaps,
    fd_overcomplete,
    geometric_variant_sequence,
    incomplete_space_sequence,
    klee_vectors,
    separated_overcomplete_fd,
    sliding_hump_extract,
    verify_schedule,
)
from .errors import CertificationError, ConfigError
from .linalg import (
    Matrix,
    NormTag,
    det_exact,
    dual_norm,
    exact_vector,
    nullspace_exact,
    unit_vector,
    vandermonde_det,
    zero_vector,
)
from .rng import rng_for, sample_subset
from .serialize import canonical_json, certificate, digest, frac_str, to_jsonable

__all__ = [
    "SCENARIO_NAMES",
    "scenario_schema",
    "parse_config",
    "load_config",
    "Report",
    "run_scenario",
    "emit_report",
]

_EXHAUSTIVE_GUARD = 200_000


# ---------------------------------------------------------------------------
# scenario schemas
# ---------------------------------------------------------------------------

_COMMON = {
    "seed": {"type": "integer", "minimum": 0, "default": 0},
}

_SCHEMAS = {
    "klee": {
        "lambdas": {"type": "string"},
        "d": {"type": "integer", "minimum": 1},
        "subset_samples": {"type": "integer", "minimum": 0, "default": 0},
        **_COMMON,
    },
    "fd-dense": {
        "d": {"type": "integer", "minimum": 1},
        "n": {"type": "integer", "minimum": 1},
        "radius": {"type": "string", "default": "1/2"},
        "targets": {"type": "string", "enum": ["auto", "none"], "default": "auto"},
        "subset_samples": {"type": "integer", "minimum": 0, "default": 0},
        **_COMMON,
    },
    "separated": {
        "d": {"type": "integer", "minimum": 1},
        "eps": {"type": "string", "default": "1/20"},
        "tag": {"type": "string", "enum": ["L1", "L2", "Linf"], "default": "L2"},
        **_COMMON,
    },
    "incomplete": {
        "c": {"type": "string", "default": "1/2"},
        "rho": {"type": "string", "default": "1/2"},
        "K": {"type": "integer", "minimum": 1, "default": 12},
        "ks": {"type": "string", "default": "10,20,30,40"},
        "j_max": {"type": "integer", "minimum": 0, "default": 5},
        "tau": {"type": ["string", "number"], "default": "1/1000"},
        **_COMMON,
    },
    "geometric-variant": {
        "c": {"type": "string", "default": "1/2"},
        "rho": {"type": "string", "default": "1/2"},
        "K": {"type": "integer", "minimum": 1, "default": 8},
        "j_max": {"type": "integer", "minimum": 0, "default": 3},
        "threshold": {"type": "string", "default": "1"},
        "schedule": {"type": "string", "enum": ["harmonic", "dyadic"], "default": "harmonic"},
        **_COMMON,
    },
    "sliding-hump": {
        "family": {"type": "string", "enum": ["blocks", "disjoint"], "default": "blocks"},
        "L": {"type": "integer", "minimum": 2, "default": 200},
        "m": {"type": "integer", "minimum": 1, "default": 15},
        "left_mass": {"type": "string", "default": "3/10"},
        "eps": {"type": "string", "default": "1/20"},
        "samples": {"type": "integer", "minimum": 1, "default": 64},
        **_COMMON,
    },
    "free-set": {
        "n": {"type": "integer", "minimum": 1},
        "f": {"type": "string", "enum": ["chain", "self", "full", "random"], "default": "chain"},
        "max_deg": {"type": "integer", "minimum": 0, "default": 2},
        **_COMMON,
    },
    "cover": {
        "mode": {"type": "string", "enum": ["grid", "escape"], "default": "grid"},
        "h": {"type": "integer", "minimum": 1, "default": 3},
        "points": {"type": "integer", "minimum": 1, "default": 12},
        "d": {"type": "integer", "minimum": 1, "default": 4},
        "lambdas": {"type": "string", "default": "1/10,1/5,3/10,2/5,9/20"},
        **_COMMON,
    },
    "probe": {
        "variant": {"type": "string", "enum": ["gk", "basis"], "default": "gk"},
        "c": {"type": "string", "default": "1/2"},
        "rho": {"type": "string", "default": "1/2"},
        "K": {"type": "integer", "minimum": 1, "default": 25},
        "window": {"type": "integer", "minimum": 1, "default": 8},
        "tau": {"type": "number", "default": 1e-6},
        **_COMMON,
    },
}

SCENARIO_NAMES = tuple(sorted(_SCHEMAS))


def scenario_schema(name: str) -> dict:
    """Full JSON schema for one scenario's parameter object."""
    if name not in _SCHEMAS:
        raise ConfigError(f"unknown scenario {name!r}; valid scenarios: {', '.join(SCENARIO_NAMES)}")
    props = _SCHEMAS[name]
    required = [k for k, spec in props.items() if "default" not in spec]
    return {
        "type": "object",
        "properties": {k: {a: b for a, b in spec.items() if a != "default"} for k, spec in props.items()},
        "required": required,
        "additionalProperties": False,
    }


def _defaults(name: str) -> dict:
    return {k: spec["default"] for k, spec in _SCHEMAS[name].items() if "default" in spec}


# ---------------------------------------------------------------------------
# config parsing
# ---------------------------------------------------------------------------


def parse_config(text: str) -> dict:
    """Parse a config document: a JSON object or "key = value" lines.

    In the line-oriented form, blank lines and lines starting with '#'
    are skipped and values stay strings until schema coercion.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("JSON config must be a single object")
        return data
    out: dict = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not key:
            raise ConfigError(f"line {lineno}: empty key")
        if key in out:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        out[key] = value
    return out


def _coerce_value(raw, type_spec):
    if not isinstance(raw, str):
        return raw
    first = type_spec[0] if isinstance(type_spec, list) else type_spec
    try:
        if first == "integer":
            return int(raw)
        if first == "number":
            return float(raw)
        if first == "boolean":
            if raw.lower() in ("true", "false"):
                return raw.lower() == "true"
            raise ValueError(raw)
    except ValueError as exc:
        raise ConfigError(f"cannot read {raw!r} as {first}") from exc
    return raw


def load_config(name: str, raw: dict) -> dict:
    """Check keys, apply defaults, coerce strings, validate the schema."""
    schema = scenario_schema(name)
    props = schema["properties"]
    unknown = sorted(set(raw) - set(props))
    if unknown:
        raise ConfigError(
            f"unknown key(s) for scenario {name!r}: {', '.join(unknown)}; "
            f"valid keys: {', '.join(sorted(props))}"
        )
    params = _defaults(name)
    for key, value in raw.items():
        params[key] = _coerce_value(value, props[key]["type"])
    try:
        jsonschema.validate(params, schema)
    except jsonschema.ValidationError as exc:
        raise ConfigError(f"config invalid for scenario {name!r}: {exc.message}") from exc
    return params


def _frac(value, name: str) -> Fraction:
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot read {name}={value!r} as a rational") from exc


def _frac_list(value, name: str) -> list:
    items = [p.strip() for p in str(value).split(",") if p.strip()]
    if not items:
        raise ConfigError(f"{name} must list at least one rational")
    return [_frac(p, name) for p in items]


def _int_list(value, name: str) -> list:
    try:
        return [int(p.strip()) for p in str(value).split(",") if p.strip()]
    except ValueError as exc:
        raise ConfigError(f"{name} must be a comma-separated integer list") from exc


# ---------------------------------------------------------------------------
# scenario runners
# ---------------------------------------------------------------------------


def _run_klee(params, seed):
    lambdas = _frac_list(params["lambdas"], "lambdas")
    d = params["d"]
    family = klee_vectors(lambdas, d)
    n = len(family.vectors)
    samples = params["subset_samples"]
    if samples == 0:
        if math.comb(n, d) > _EXHAUSTIVE_GUARD:
            raise ConfigError(
                f"C({n},{d}) subsets is too many to enumerate; set subset_samples"
            )
        subsets = list(itertools.combinations(range(n), d))
    else:
        rng = rng_for(seed, "klee-subsets")
        subsets = [sample_subset(rng, n, d) for _ in range(samples)]
    certs = []
    for sub in subsets:
        cert = density_certificate(family.vectors, sub, d)
        if cert.verdict == "Full" and len(sub) == d:
            rows = Matrix.from_rows([family.vectors[i] for i in sub])
            det = det_exact(rows)
            prod = vandermonde_det([lambdas[i] for i in sub])
            if det != prod:
                raise CertificationError(
                    f"elimination determinant disagrees with the product formula on {sub}"
                )
            witness = {"det_elimination": det, "det_product": prod}
        else:
            witness = cert.witness
        certs.append(
            certificate(
                "density",
                cert.verdict,
                witness=witness,
                pivot_log=cert.pivot_log,
                inputs={"lambdas": lambdas, "d": d, "subset": sub},
                subset=sub,
            )
        )
    constructed = {"vectors": to_jsonable(list(family.vectors))}
    return constructed, certs


def _run_fd_dense(params, seed):
    d, n = params["d"], params["n"]
    radius = _frac(params["radius"], "radius")
    if radius <= 0:
        raise ConfigError("radius must be positive")
    if params["targets"] == "auto":
        rng = rng_for(seed, "fd-targets")
        targets = []
        for _ in range(n):
            center = exact_vector(
                [Fraction(rng.randrange(-(1 << 8) + 1, 1 << 8), 1 << 8) for _ in range(d)],
                NormTag.L2,
            )
            targets.append(OpenBall(center, radius, NormTag.L2))
    else:
        targets = None
    vectors = fd_overcomplete(d, n, targets=targets, seed=seed)
    certs = []
    balls = targets if targets is not None else [
        OpenBall(zero_vector(d, NormTag.L2), Fraction(1), NormTag.L2)
    ] * n
    for j, (v, ball) in enumerate(zip(vectors, balls)):
        if not ball.contains(v):
            raise CertificationError(f"vector {j} landed outside its target ball")
        certs.append(
            certificate(
                "ball-membership",
                "Inside",
                witness={"index": j, "center": ball.center, "radius": ball.radius},
                inputs={"vector": v, "center": ball.center, "radius": ball.radius},
            )
        )
    samples = params["subset_samples"]
    if samples == 0:
        if math.comb(n, d) > _EXHAUSTIVE_GUARD:
            raise ConfigError(
                f"C({n},{d}) subsets is too many to enumerate; set subset_samples"
            )
        subsets = None
    else:
        rng = rng_for(seed, "fd-subsets")
        subsets = [sample_subset(rng, n, d) for _ in range(samples)]
    checked, failures = all_subsets_full_rank(vectors, d, subsets)
    certs.append(
        certificate(
            "subset-rank-sweep",
            "Full" if not failures else "Deficient",
            witness={"subsets_checked": checked, "failures": failures},
            inputs={"d": d, "n": n, "seed": seed},
        )
    )
    spot = density_certificate(vectors, range(d), d)
    certs.append(
        certificate(
            "density",
            spot.verdict,
            witness=spot.witness,
            pivot_log=spot.pivot_log,
            inputs={"subset": list(range(d))},
            subset=range(d),
        )
    )
    constructed = {"vectors": to_jsonable(list(vectors))}
    return constructed, certs


def _run_separated(params, seed):
    d = params["d"]
    eps = _frac(params["eps"], "eps")
    tag = NormTag(params["tag"])
    family = separated_overcomplete_fd(d, eps, tag, seed=seed)
    n = len(family.vectors)
    delta = 1 - eps
    greedy = greedy_separated_subset(family.vectors, delta, tag)
    if list(greedy) != list(range(n)):
        raise CertificationError("greedy packing rejected a member of a separated family")
    certs = [
        certificate(
            "separation",
            "Separated",
            witness={
                "pairs_checked": math.comb(n, 2),
                "lower_bound": delta,
                "greedy_selects_all": True,
            },
            inputs={"d": d, "eps": eps, "tag": tag.value},
        )
    ]
    spot = density_certificate(family.vectors, range(n), d)
    certs.append(
        certificate(
            "density",
            spot.verdict,
            witness=spot.witness,
            pivot_log=spot.pivot_log,
            inputs={"subset": list(range(n))},
            subset=range(n),
        )
    )
    constructed = {"vectors": to_jsonable(list(family.vectors))}
    return constructed, certs


def _make_annihilator(model, sequence, ks, seed):
    dim = sequence[0].dim
    rows = [sequence[k] for k in ks] + [model.y_truncation(dim)]
    basis = nullspace_exact(Matrix.from_rows(rows))
    if not basis:
        raise ConfigError("no annihilator exists at this truncation; raise K")
    rng = rng_for(seed, "annihilator")
    combo = basis[0].scale(rng.randrange(1, 17))
    for b in basis[1:]:
        combo = combo + b.scale(rng.randrange(1, 17))
    return combo.scale(1 / dual_norm(combo, model.norm_tag))


def _run_incomplete(params, seed):
    model = IncompleteModel(_frac(params["c"], "c"), _frac(params["rho"], "rho"))
    ks = _int_list(params["ks"], "ks")
    if not ks or min(ks) < 1:
        raise ConfigError("ks must list positive integers")
    K = max([params["K"]] + ks)
    sequence = incomplete_space_sequence(model, K)
    certs = []
    for k, (lhs, rhs) in enumerate(convergence_gaps(model, sequence)):
        certs.append(
            certificate(
                "approximation-bound",
                "Holds",
                witness={"k": k, "distance": lhs, "bound": rhs},
                inputs={"c": model.c, "rho": model.rho, "k": k},
            )
        )
    e_star = _make_annihilator(model, sequence, ks, seed)
    tau = params["tau"]
    tau = float(tau) if isinstance(tau, (int, float)) else Fraction(str(tau))
    report = annihilator_decay_check(model, sequence, ks, [e_star], params["j_max"], tau)
    certs.append(
        certificate(
            "annihilator-decay",
            "Verified",
            witness=report,
            inputs={"functional": e_star, "ks": ks, "j_max": params["j_max"]},
        )
    )
    constructed = {
        "vectors": to_jsonable(list(sequence)),
        "annihilator": to_jsonable(e_star),
    }
    return constructed, certs


def _run_geometric_variant(params, seed):
    model = IncompleteModel(_frac(params["c"], "c"), _frac(params["rho"], "rho"))
    K = params["K"]
    if params["schedule"] == "harmonic":
        lambdas = [Fraction(1, n + 2) for n in range(K + 1)]
    else:
        lambdas = [Fraction(1, 2 ** (n + 1)) for n in range(K + 1)]
    schedule = GeometricSchedule(
        tuple(lambdas), params["j_max"], _frac(params["threshold"], "threshold")
    )
    onsets = verify_schedule(model, schedule, K)
    sequence = geometric_variant_sequence(model, schedule, K)
    certs = [
        certificate(
            "schedule-rate",
            "Verified",
            witness={"onsets": list(onsets), "j_max": params["j_max"]},
            inputs={"lambdas": lambdas, "c": model.c, "rho": model.rho},
        )
    ]
    constructed = {"vectors": to_jsonable(list(sequence))}
    return constructed, certs


def block_family(L: int, m: int, left_mass: Fraction) -> list:
    """Unit-mass family sharing a left block, with disjoint tail blocks."""
    if not 0 <= left_mass < 1:
        raise ConfigError("left_mass must lie in [0, 1)")
    lead = 3 if left_mass > 0 else 0
    width = (L - lead) // m
    if width < 1:
        raise ConfigError(f"cannot fit {m} disjoint blocks into [0, {L})")
    members = []
    tail = 1 - left_mass
    for j in range(m):
        coords = [Fraction(0)] * L
        for i in range(lead):
            coords[i] = left_mass / lead
        for i in range(lead + j * width, lead + (j + 1) * width):
            coords[i] = tail / width
        members.append(exact_vector(coords, NormTag.L1))
    return members


def _run_sliding_hump(params, seed):
    L, m = params["L"], params["m"]
    eps = _frac(params["eps"], "eps")
    left = _frac(params["left_mass"], "left_mass") if params["family"] == "blocks" else Fraction(0)
    family = block_family(L, m, left)
    data = sliding_hump_extract(family, eps)
    samples = coefficient_samples(len(data.extracted), params["samples"], seed)
    cert = l1_lower_bound_certificate(data, samples)
    certs = [
        certificate(
            "l1-lower-bound",
            "Certified",
            witness=cert,
            inputs={"members": data.members, "cuts": data.cuts, "eps": eps},
        )
    ]
    constructed = {
        "vectors": to_jsonable(list(data.extracted)),
        "n_table": [frac_str(v) for v in data.n_table],
        "n_value": frac_str(data.n_value),
        "alpha0": data.alpha0,
        "alpha0_rule": data.alpha0_rule,
        "members": list(data.members),
        "cuts": list(data.cuts),
    }
    return constructed, certs


def _free_map(n: int, kind: str, max_deg: int, seed: int) -> list:
    if kind == "chain":
        return [{i + 1} if i + 1 < n else {i} for i in range(n)]
    if kind == "self":
        return [{i} for i in range(n)]
    if kind == "full":
        return [set(range(n)) for _ in range(n)]
    rng = rng_for(seed, "free-set")
    return [{rng.randrange(n) for _ in range(max_deg)} for _ in range(n)]


def _run_free_set(params, seed):
    n = params["n"]
    fmap = _free_map(n, params["f"], params["max_deg"], seed)
    instance = free_set_extract(n, fmap)
    system = BiorthSystem(n)
    rng = rng_for(seed, "free-weights")
    family = []
    for a in range(n):
        coords = [Fraction(0)] * n
        for i in sorted(fmap[a]):
            coords[i] = Fraction(rng.randrange(1, 17))
        family.append(exact_vector(coords, NormTag.L1))
    certs = [
        certificate(
            "free-set",
            "Free",
            witness={"H": list(instance.H), "n": n},
            inputs={"f": [sorted(s) for s in fmap]},
        )
    ]
    for gamma in instance.H:
        record = support_annihilator_witness(system, family, instance.H, gamma)
        certs.append(
            certificate(
                "support-witness",
                "Verified",
                witness=record,
                inputs={"gamma": gamma, "H": list(instance.H)},
            )
        )
    constructed = {"vectors": to_jsonable(family), "H": list(instance.H)}
    return constructed, certs


def _run_cover(params, seed):
    mode = params["mode"]
    if mode == "grid":
        h, count, d = params["h"], params["points"], params["d"]
        if h > d:
            raise ConfigError("grid mode needs h <= d coordinate hyperplanes")
        points = []
        for t in range(count):
            coords = [Fraction(t + i + 1) for i in range(d)]
            coords[t % h] = Fraction(0)
            points.append(exact_vector(coords, NormTag.L1))
        planes = [HyperplaneFunctional(unit_vector(j, d, NormTag.LINF)) for j in range(h)]
        cover = hyperplane_cover(points, planes)
        majority = pigeonhole_majority(points, planes)
        certs = [
            certificate(
                "hyperplane-cover",
                cover.verdict,
                witness={"assignment": list(cover.assignment)},
                inputs={"points": points, "h": h},
            ),
            certificate(
                "pigeonhole-majority",
                "Quota",
                witness={
                    "hyperplane": majority.hyperplane_index,
                    "members": list(majority.members),
                    "quota": majority.quota,
                },
                inputs={"points": points, "h": h},
            ),
        ]
    else:
        lambdas = _frac_list(params["lambdas"], "lambdas")
        d = 3
        family = klee_vectors(lambdas, d)
        points = list(family.vectors)
        if len(points) < 3:
            raise ConfigError("escape mode needs at least three lambdas")
        span_two = Matrix.from_rows(points[:2])
        witness_fn = nullspace_exact(span_two)[0]
        planes = [HyperplaneFunctional(witness_fn)]
        cover = hyperplane_cover(points, planes)
        if cover.covered:
            raise ConfigError("escape instance unexpectedly covered")
        certs = [
            certificate(
                "hyperplane-cover",
                cover.verdict,
                witness={
                    "escape_index": cover.escape_index,
                    "pairings": list(cover.escape_pairings),
                },
                inputs={"points": points, "plane": witness_fn},
            )
        ]
    constructed = {"vectors": to_jsonable(points)}
    return constructed, certs


def _run_probe(params, seed):
    window, tau = params["window"], float(params["tau"])
    if params["variant"] == "gk":
        model = IncompleteModel(_frac(params["c"], "c"), _frac(params["rho"], "rho"))
        sequence = incomplete_space_sequence(model, params["K"])
        limit = model.y_truncation(sequence[0].dim)
    else:
        dim = params["K"] + 1
        sequence = [unit_vector(k, dim, NormTag.L1) for k in range(dim)]
        limit = zero_vector(dim, NormTag.L1)
    if window > limit.dim:
        raise ConfigError(f"window {window} exceeds dimension {limit.dim}")
    report = weak_norm_convergence_probe(sequence, limit, window, tau)
    certs = [
        certificate(
            "convergence-probe",
            report.classification,
            witness=report,
            inputs={"window": window, "tau": tau, "variant": params["variant"]},
        )
    ]
    constructed = {"vectors": to_jsonable(list(sequence))}
    return constructed, certs


_RUNNERS = {
    "klee": _run_klee,
    "fd-dense": _run_fd_dense,
    "separated": _run_separated,
    "incomplete": _run_incomplete,
    "geometric-variant": _run_geometric_variant,
    "sliding-hump": _run_sliding_hump,
    "free-set": _run_free_set,
    "cover": _run_cover,
    "probe": _run_probe,
}


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Report:
    scenario: str
    params: dict
    seed: int
    toolkit_version: str
    constructed: dict
    certificates: tuple
    wall_time_s: float

    def canonical_form(self) -> dict:
        """Everything but the wall time; the byte-reproducible record."""
        return {
            "scenario": self.scenario,
            "params": to_jsonable(self.params),
            "seed": self.seed,
            "toolkit_version": self.toolkit_version,
            "constructed": self.constructed,
            "certificates": list(self.certificates),
        }

    def canonical_bytes(self) -> bytes:
        return canonical_json(self.canonical_form()).encode("utf-8")


def run_scenario(name: str, raw_config: dict, seed: Optional[int] = None, tol: Optional[float] = None) -> Report:
    """Validate the config, run the scenario, assemble the report."""
    if name not in _RUNNERS:
        raise ConfigError(f"unknown scenario {name!r}; valid scenarios: {', '.join(SCENARIO_NAMES)}")
    params = load_config(name, raw_config)
    if seed is not None:
        params["seed"] = seed
    if tol is not None:
        if "tau" not in _SCHEMAS[name]:
            raise ConfigError(f"scenario {name!r} has no tolerance parameter")
        params["tau"] = float(tol)
    start = time.perf_counter()
    extras, certs = _RUNNERS[name](params, params["seed"])
    wall = time.perf_counter() - start
    constructed = {
        "kind": name,
        "params": to_jsonable(params),
        "seed": params["seed"],
        "certificate_refs": [digest(c) for c in certs],
    }
    constructed.update(extras)
    return Report(
        scenario=name,
        params=params,
        seed=params["seed"],
        toolkit_version=__version__,
        constructed=constructed,
        certificates=tuple(certs),
        wall_time_s=wall,
    )


def emit_report(report: Report, fmt: str = "json") -> str:
    """Render a report: canonical JSON plus wall time, or flat CSV."""
    if fmt == "json":
        record = report.canonical_form()
        record["wall_time_s"] = report.wall_time_s
        return json.dumps(record, sort_keys=True, separators=(",", ":"), allow_nan=False)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["scenario", "subset", "verdict", "witness_digest"])
        for cert in report.certificates:
            subset = ";".join(str(i) for i in cert.get("subset", ()))
            writer.writerow([report.scenario, subset, cert["verdict"], digest(cert["witness"])])
        return buf.getvalue()
    raise ConfigError(f"unknown report format {fmt!r}; valid formats: csv, json")
