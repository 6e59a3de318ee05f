"""Machine-checkable certificates for every constructed property.

The certificates here follow one discipline: each claim is either
verified in exact rational arithmetic (ranks, annihilators, norm
inequalities, cover assignments) or is explicitly a float diagnostic.
Pivot logs are replayed by a plain rational eliminator that shares only
the pivot-selection rule with the fraction-free kernel, so a bug in one
cannot hide in the other.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .constructors import BiorthSystem, IncompleteModel, SlidingHumpData
from .errors import (
    CertificationError,
    DomainError,
    ModeError,
    PreconditionError,
)
from .linalg import (
    Matrix,
    Mode,
    NormTag,
    PivotLog,
    Vector,
    dual_norm,
    norm,
    norm_squared,
    nullspace_exact,
    pairing,
    rank_exact,
    scaled_int_coords,
    _int_rank,
)
from .rng import rng_for

__all__ = [
    "HyperplaneFunctional",
    "DensityCertificate",
    "CoverResult",
    "MajorityResult",
    "FreeSetInstance",
    "WitnessRecord",
    "SplitEntry",
    "L1EquivalenceCertificate",
    "FunctionalDecay",
    "DecayEntry",
    "DecayReport",
    "ProbeReport",
    "density_certificate",
    "replay_pivot_log",
    "all_subsets_full_rank",
    "hyperplane_cover",
    "pigeonhole_majority",
    "free_set_extract",
    "support_annihilator_witness",
    "greedy_separated_subset",
    "coefficient_samples",
    "l1_lower_bound_certificate",
    "decay_bound",
    "annihilator_decay_check",
    "weak_norm_convergence_probe",
]


# ---------------------------------------------------------------------------
# density and rank certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HyperplaneFunctional:
    """A nonzero exact functional; represents the hyperplane ker(coeffs)."""

    coeffs: Vector

    def __post_init__(self):
        if self.coeffs.mode is not Mode.EXACT:
            raise ModeError("hyperplane functionals must be exact")
        if self.coeffs.is_zero():
            raise DomainError("the zero functional does not define a hyperplane")


@dataclass(frozen=True)
class DensityCertificate:
    """Either a full-rank proof (pivot log) or an annihilator witness.

    ``verdict`` is "full" when the selected vectors span the ambient
    space, with the elimination trace attached; otherwise "proper", with
    a nonzero exact functional whose pairings against every selected
    vector are exactly zero.
    """

    verdict: str
    subset: tuple
    ambient_dim: int
    rank: int
    pivot_log: Optional[PivotLog] = None
    witness: Optional[Vector] = None
    max_abs_pairing: Optional[Fraction] = None


def density_certificate(vectors: Sequence[Vector], subset: Iterable[int], d: int) -> DensityCertificate:
    """Decide whether the selected vectors span R^d, with a checkable proof."""
    sel_idx = tuple(subset)
    if not sel_idx:
        raise DomainError("subset must be nonempty")
    for i in sel_idx:
        if not 0 <= i < len(vectors):
            raise DomainError(f"subset index {i} out of range")
    selected = [vectors[i] for i in sel_idx]
    for v in selected:
        if v.dim != d:
            raise DomainError(f"vector of dimension {v.dim} in ambient dimension {d}")
        if v.mode is not Mode.EXACT:
            raise ModeError("density certificates need exact vectors")
    result = rank_exact(Matrix.from_rows(selected))
    if result.rank == d:
        return DensityCertificate("Full", sel_idx, d, d, pivot_log=result.log)
    basis = nullspace_exact(Matrix.from_rows(selected))
    witness = basis[0]
    worst = max(abs(pairing(witness, v)) for v in selected)
    if worst != 0:
        raise CertificationError("annihilator witness failed to annihilate")
    return DensityCertificate(
        "Proper", sel_idx, d, result.rank, witness=witness, max_abs_pairing=worst
    )


def replay_pivot_log(M: Matrix, log: PivotLog, expected_rank: Optional[int] = None) -> int:
    """Re-check an elimination trace with plain rational elimination.

    Scales the rows by the logged factors, then runs ordinary Gaussian
    elimination with the same pivot rule (lowest original row index with
    a nonzero entry in the scan column).  Each Gaussian pivot must equal
    the ratio of consecutive logged pivots, the step positions must
    match, and every unprocessed row must vanish at the end.
    """
    if log.shape != (M.nrows, M.ncols):
        raise CertificationError("pivot log shape does not match the matrix")
    if len(log.row_scales) != M.nrows:
        raise CertificationError("pivot log carries the wrong number of row scales")
    rows = []
    for vec, scale in zip(M.rows, log.row_scales):
        if scale <= 0:
            raise CertificationError("row scales must be positive integers")
        scaled = [c * scale for c in vec.coords]
        if any(x.denominator != 1 for x in scaled):
            raise CertificationError("logged row scale does not clear denominators")
        rows.append(scaled)
    m, n = M.nrows, M.ncols
    processed: set = set()
    steps = list(log.steps)
    step_pos = 0
    prev_pivot = Fraction(1)
    for col in range(n):
        src = -1
        for i in range(m):
            if i not in processed and rows[i][col] != 0:
                src = i
                break
        if src < 0:
            continue
        if step_pos >= len(steps):
            raise CertificationError(f"unlogged pivot at column {col}")
        lrow, lcol, lpiv = steps[step_pos]
        if (lrow, lcol) != (src, col):
            raise CertificationError(
                f"pivot position mismatch at step {step_pos}: "
                f"log says ({lrow}, {lcol}), replay finds ({src}, {col})"
            )
        u = rows[src][col]
        if u * prev_pivot != Fraction(lpiv):
            raise CertificationError(f"pivot value mismatch at step {step_pos}")
        for i in range(m):
            if i != src and i not in processed and rows[i][col] != 0:
                factor = rows[i][col] / u
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[src])]
        processed.add(src)
        prev_pivot = Fraction(lpiv)
        step_pos += 1
    if step_pos != len(steps):
        raise CertificationError("log contains more steps than the replay produced")
    for i in range(m):
        if i not in processed and any(x != 0 for x in rows[i]):
            raise CertificationError(f"row {i} is not eliminated but was never pivoted")
    if expected_rank is not None and expected_rank != step_pos:
        raise CertificationError(
            f"replayed rank {step_pos} does not match expected {expected_rank}"
        )
    return step_pos


def all_subsets_full_rank(vectors: Sequence[Vector], d: int, subsets=None):
    """Exact rank-d sweep over d-subsets; returns (checked, failures).

    Rows are integer-scaled once per vector; each subset then costs one
    small fraction-free elimination.  ``subsets`` defaults to every
    d-combination in index order.
    """
    cache = [list(scaled_int_coords(v)) for v in vectors]
    if subsets is None:
        subsets = itertools.combinations(range(len(vectors)), d)
    checked = 0
    failures = []
    for sub in subsets:
        rows = [cache[i][:] for i in sub]
        checked += 1
        if _int_rank(rows) != d:
            failures.append(tuple(sub))
    return checked, failures


# ---------------------------------------------------------------------------
# hyperplane covers and the pigeonhole step
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoverResult:
    """Decision partition: exactly one of the two shapes.

    Covered: ``assignment[i]`` names a hyperplane exactly annihilating
    point i.  Escape: ``escape_index`` is the first point whose pairings
    against every hyperplane are exactly nonzero, listed in
    ``escape_pairings``.
    """

    covered: bool
    assignment: Optional[tuple] = None
    escape_index: Optional[int] = None
    escape_pairings: Optional[tuple] = None

    @property
    def verdict(self) -> str:
        return "Covered" if self.covered else "Escape"


def hyperplane_cover(S: Sequence[Vector], H: Sequence[HyperplaneFunctional]) -> CoverResult:
    """Assign each point a containing hyperplane, or exhibit an escapee."""
    if not H:
        raise DomainError("need at least one hyperplane")
    if not S:
        raise DomainError("need at least one point")
    assignment = []
    for idx, s in enumerate(S):
        pairings = [pairing(h.coeffs, s) for h in H]
        hit = next((j for j, p in enumerate(pairings) if p == 0), None)
        if hit is None:
            return CoverResult(False, escape_index=idx, escape_pairings=tuple(pairings))
        assignment.append(hit)
    return CoverResult(True, assignment=tuple(assignment))


@dataclass(frozen=True)
class MajorityResult:
    hyperplane_index: int
    members: tuple
    quota: int


def pigeonhole_majority(S: Sequence[Vector], H: Sequence[HyperplaneFunctional]) -> MajorityResult:
    """A hyperplane containing at least ceil(|S|/|H|) of the covered points."""
    cover = hyperplane_cover(S, H)
    if not cover.covered:
        raise PreconditionError("the points are not covered by the given hyperplanes")
    counts = [0] * len(H)
    for j in cover.assignment:
        counts[j] += 1
    best = max(range(len(H)), key=lambda j: (counts[j], -j))
    quota = -(-len(S) // len(H))
    members = tuple(i for i, s in enumerate(S) if pairing(H[best].coeffs, s) == 0)
    if len(members) < quota:
        raise CertificationError("pigeonhole count fell below the quota")
    return MajorityResult(best, members, quota)


# ---------------------------------------------------------------------------
# free sets over set mappings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FreeSetInstance:
    """A set mapping f on [n] together with an extracted free set H:
    for every a in H, f(a) minus {a} misses H entirely.
    """

    n: int
    f: tuple
    H: tuple


def free_set_extract(n: int, f: Sequence[Iterable[int]]) -> FreeSetInstance:
    """Greedy free set, scanning indices in ascending order.

    An index joins H when its image avoids the current H and no earlier
    member's image contains it.  Optimality is not claimed; freeness is
    verified exactly before returning.
    """
    if n < 1:
        raise DomainError("ground set must be nonempty")
    fsets = [frozenset(x) for x in f]
    if len(fsets) != n:
        raise DomainError(f"the map must be total on [0, {n})")
    for i, fs in enumerate(fsets):
        for v in fs:
            if not 0 <= v < n:
                raise DomainError(f"f({i}) contains {v}, outside the ground set")
    chosen = []
    chosen_set: set = set()
    blocked: set = set()
    for a in range(n):
        image = fsets[a] - {a}
        if image & chosen_set or a in blocked:
            continue
        chosen.append(a)
        chosen_set.add(a)
        blocked |= image
    for a in chosen:
        if (fsets[a] - {a}) & chosen_set:
            raise CertificationError("greedy output violates the free-set property")
    return FreeSetInstance(n, tuple(fsets), tuple(chosen))


@dataclass(frozen=True)
class WitnessRecord:
    gamma: int
    checked: tuple
    vacuous: bool


def support_annihilator_witness(
    system: BiorthSystem, family: Sequence[Vector], H: Iterable[int], gamma: int
) -> WitnessRecord:
    """Verify that the gamma-th coordinate functional kills the rest of H.

    This is the density-killing step: when H is free for the support map
    of the family, every other member's support misses gamma, so the
    pairings must vanish exactly.  A nonzero pairing means the free set
    was broken and raises.
    """
    H = tuple(H)
    if gamma not in H:
        raise PreconditionError(f"gamma={gamma} is not a member of H")
    f_gamma = system.functional(gamma)
    checked = []
    for a in H:
        if a == gamma:
            continue
        p = pairing(f_gamma, family[a])
        if p != 0:
            raise CertificationError(
                f"functional {gamma} pairs to {p} with member {a}; the free set is broken"
            )
        checked.append(a)
    return WitnessRecord(gamma, tuple(checked), vacuous=not checked)


# ---------------------------------------------------------------------------
# separation / packing diagnostic
# ---------------------------------------------------------------------------


def _distance_at_least(u: Vector, v: Vector, delta, tag: NormTag) -> bool:
    diff = u - v
    if u.mode is Mode.EXACT and tag is NormTag.L2:
        return norm_squared(diff) >= delta * delta
    return norm(diff, tag) >= delta


def greedy_separated_subset(points: Sequence[Vector], delta, tag: NormTag) -> tuple:
    """Maximal delta-separated subset, greedy by ascending index.

    Every selected pair is at distance >= delta; every excluded point is
    within delta of an earlier selection, which is the maximality
    witness.  Exact arithmetic on exact points (squared comparisons for
    L2), floats otherwise.
    """
    tag = NormTag(tag)
    if isinstance(delta, float):
        if delta <= 0:
            raise DomainError("delta must be positive")
    else:
        delta = Fraction(delta)
        if delta <= 0:
            raise DomainError("delta must be positive")
    selected: list = []
    for i, p in enumerate(points):
        if all(_distance_at_least(p, points[j], delta, tag) for j in selected):
            selected.append(i)
    return tuple(selected)


# ---------------------------------------------------------------------------
# the L1 lower-bound chain
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SplitEntry:
    """Per-member decomposition log: the middle strip was removed."""

    member: int
    cut: int
    approximation_gap: Fraction
    tail_mass: Fraction


@dataclass(frozen=True)
class L1EquivalenceCertificate:
    constant: Fraction
    floor: Fraction
    split_log: tuple
    sampled_min: Fraction
    sample_count: int


def coefficient_samples(m: int, count: int, seed: int = 0) -> list:
    """Coefficient vectors of exact total mass one: the 2m signed unit
    vectors first, then seeded random points of the same mass."""
    if m < 1:
        raise DomainError("need at least one coefficient slot")
    if count < 1:
        raise DomainError("need at least one sample")
    samples = []
    for j in range(m):
        for sgn in (1, -1):
            vec = [Fraction(0)] * m
            vec[j] = Fraction(sgn)
            samples.append(tuple(vec))
            if len(samples) == count:
                return samples
    rng = rng_for(seed, "l1-samples")
    while len(samples) < count:
        raw = [rng.randrange(0, 1 << 16) for _ in range(m)]
        total = sum(raw)
        if total == 0:
            continue
        signs = [1 if rng.getrandbits(1) else -1 for _ in range(m)]
        samples.append(tuple(Fraction(s * r, total) for s, r in zip(signs, raw)))
    return samples


def l1_lower_bound_certificate(data: SlidingHumpData, samples: Sequence) -> L1EquivalenceCertificate:
    """Replay the lower-bound chain exactly and sanity-check it on samples.

    Chain: strip each extracted member's middle mass (must be within
    eps), observe the remaining tails are disjointly supported, bound
    each tail's mass from below, and emit c = 1 - N - 2*eps.  Every
    sampled combination of total mass one must then have L1 norm >= c;
    a sampled violation is a hard error, not a statistic.
    """
    n_value, eps, alpha0 = data.n_value, data.epsilon, data.alpha0
    L = data.source[0].dim
    splits = []
    tails = []
    for g, x in enumerate(data.extracted):
        cut = data.cuts[g]
        y = x - x.restrict(alpha0, cut)
        gap = norm(x - y, NormTag.L1)
        if gap > eps:
            raise CertificationError(
                f'chain step "middle strip within eps" failed at pick {g}: {gap} > {eps}'
            )
        tail = y.restrict(alpha0, L)
        tails.append(tail)
        tail_mass = norm(tail, NormTag.L1)
        if tail_mass < 1 - n_value - 2 * eps:
            raise CertificationError(
                f'chain step "tail mass at least 1-N-2*eps" failed at pick {g}'
            )
        if tail_mass < 1 - n_value - eps:
            raise CertificationError(
                f'chain step "tail mass at least 1-N-eps" failed at pick {g}'
            )
        splits.append(SplitEntry(data.members[g], cut, gap, tail_mass))
    seen: set = set()
    for g, t in enumerate(tails):
        sup = set(t.support())
        if sup & seen:
            raise CertificationError(f'chain step "disjoint tails" failed at pick {g}')
        seen |= sup
    constant = 1 - n_value - 2 * eps
    floor = (1 - n_value) / 2
    if constant < floor:
        raise CertificationError("the certified constant fell below its floor")

    # integer fast path for the sampled combinations
    m = len(data.extracted)
    den = 1
    for x in data.extracted:
        for c in x.coords:
            den = den * c.denominator // math.gcd(den, c.denominator)
    int_rows = [[int(c * den) for c in x.coords] for x in data.extracted]
    supports = [x.support() for x in data.extracted]
    sampled_min = None
    for a in samples:
        if len(a) != m:
            raise DomainError(f"sample of length {len(a)}, expected {m}")
        coeffs = [Fraction(v) for v in a]
        if sum(map(abs, coeffs)) != 1:
            raise DomainError("samples must have exact total mass one")
        d_a = 1
        for v in coeffs:
            d_a = d_a * v.denominator // math.gcd(d_a, v.denominator)
        nums = [int(v * d_a) for v in coeffs]
        acc = [0] * L
        for j in range(m):
            aj = nums[j]
            if aj == 0:
                continue
            row = int_rows[j]
            for idx in supports[j]:
                acc[idx] += aj * row[idx]
        total = sum(abs(v) for v in acc)
        # total/(d_a*den) >= constant, cross-multiplied to stay integral
        if total * constant.denominator < constant.numerator * d_a * den:
            raise CertificationError("sampled combination fell below the certified constant")
        value = Fraction(total, d_a * den)
        if sampled_min is None or value < sampled_min:
            sampled_min = value
    if sampled_min is None:
        raise DomainError("need at least one coefficient sample")
    return L1EquivalenceCertificate(
        constant=constant,
        floor=floor,
        split_log=tuple(splits),
        sampled_min=sampled_min,
        sample_count=len(samples),
    )


# ---------------------------------------------------------------------------
# annihilator decay bounds
# ---------------------------------------------------------------------------


def decay_bound(j: int, k: int, norm_value=Fraction(1), exact_limit: int = 60):
    """The elimination bound ||e||*((j+2)^k/k! + ((j+2)/(j+3))^k * k).

    Exact rational up to ``exact_limit``; beyond that the factorial and
    power terms are combined in log space and the result is a float
    (the mode switch is visible in the return type and recorded by the
    caller).
    """
    if j < 0 or k < 0:
        raise DomainError("bound indices must be nonnegative")
    if k <= exact_limit:
        term1 = Fraction((j + 2) ** k, math.factorial(k))
        term2 = Fraction(j + 2, j + 3) ** k * k
        return Fraction(norm_value) * (term1 + term2)
    t1 = math.exp(k * math.log(j + 2) - math.lgamma(k + 1))
    t2 = math.exp(k * (math.log(j + 2) - math.log(j + 3))) * k
    return float(norm_value) * (t1 + t2)


@dataclass(frozen=True)
class DecayEntry:
    j: int
    pairing: Fraction
    bounds: tuple               # (k, bound) pairs, only k > j contribute
    min_bound: Union[Fraction, float, None]
    bound_holds: Optional[bool]
    forced_zero: Optional[bool]
    onset_k: Optional[int]


@dataclass(frozen=True)
class FunctionalDecay:
    functional_norm: Fraction
    annihilates_target: bool
    entries: tuple


@dataclass(frozen=True)
class DecayReport:
    ks: tuple
    j_max: int
    tau: Fraction
    exact_limit: int
    mode_switch_ks: tuple
    functionals: tuple


def annihilator_decay_check(
    model: IncompleteModel,
    sequence: Sequence[Vector],
    ks: Sequence[int],
    functionals: Sequence[Vector],
    j_max: int,
    tau=Fraction(1, 1000),
    exact_limit: int = 60,
) -> DecayReport:
    """Evaluate the per-coordinate elimination bounds for annihilators.

    Each supplied functional must exactly annihilate the designated
    subsequence members (checked; that is the precondition making the
    bounds meaningful).  For every coordinate index j the report lists
    the exact bounds over the usable subsequence (k > j), their minimum,
    whether the actual pairing respects it, and whether the minimum has
    dropped below tau — the "forces a zero pairing" flag.  Bounds for
    j >= 1 presume the earlier pairings already vanished (the inductive
    elimination); they are reported, not asserted.
    """
    ks = tuple(sorted(set(int(k) for k in ks)))
    if not ks:
        raise DomainError("need at least one subsequence index")
    if ks[0] < 0 or ks[-1] >= len(sequence):
        raise DomainError("subsequence index out of range")
    dim = sequence[0].dim
    if j_max < 0 or j_max >= dim:
        raise DomainError(f"j_max must lie in [0, {dim})")
    tau = tau if isinstance(tau, float) else Fraction(tau)
    reports = []
    for e in functionals:
        if e.mode is not Mode.EXACT:
            raise ModeError("annihilators must be exact functionals")
        if e.dim != dim:
            raise DomainError("functional dimension mismatch")
        for k in ks:
            if pairing(e, sequence[k]) != 0:
                raise PreconditionError(
                    f"functional does not annihilate the subsequence member at k={k}"
                )
        e_norm = dual_norm(e, model.norm_tag)
        hits_target = pairing(e, model.y_truncation(dim)) == 0
        entries = []
        for j in range(j_max + 1):
            usable = [k for k in ks if k > j]
            bounds = tuple((k, decay_bound(j, k, e_norm, exact_limit)) for k in usable)
            pair_j = e.coords[j]
            if bounds:
                min_bound = min((b for _, b in bounds), key=float)
                if isinstance(min_bound, Fraction):
                    holds = abs(pair_j) <= min_bound
                    forced = min_bound < tau
                else:
                    holds = float(abs(pair_j)) <= min_bound
                    forced = min_bound < float(tau)
                onset_pos = 0
                vals = [b for _, b in bounds]
                for idx in range(1, len(vals)):
                    if float(vals[idx - 1]) <= float(vals[idx]):
                        onset_pos = idx
                onset_k = usable[onset_pos]
            else:
                min_bound, holds, forced, onset_k = None, None, None, None
            entries.append(
                DecayEntry(j, pair_j, bounds, min_bound, holds, forced, onset_k)
            )
        reports.append(FunctionalDecay(e_norm, hits_target, tuple(entries)))
    return DecayReport(
        ks=ks,
        j_max=j_max,
        tau=tau,
        exact_limit=exact_limit,
        mode_switch_ks=tuple(k for k in ks if k > exact_limit),
        functionals=tuple(reports),
    )


# ---------------------------------------------------------------------------
# coordinatewise vs norm convergence probe
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProbeReport:
    """Window-sup coordinate deviations vs norm deviations, per member.

    The classification looks at the final member: norm gap below tau
    means norm-convergent; otherwise a window-sup below tau means the
    deviation has escaped the window (coordinatewise-only); otherwise
    divergent.  This is a finite diagnostic for the weak-vs-norm gap,
    not a decision procedure for weak convergence.
    """

    window: int
    tau: float
    coord_sups: tuple
    norm_gaps: tuple
    classification: str


def weak_norm_convergence_probe(
    sequence: Sequence[Vector], limit: Vector, window: int, tau: float = 1e-6
) -> ProbeReport:
    if not sequence:
        raise DomainError("need a nonempty sequence")
    dim = limit.dim
    if window < 1 or window > dim:
        raise DomainError(f"window must lie in [1, {dim}]")
    coord_sups = []
    norm_gaps = []
    for v in sequence:
        if v.dim != dim:
            raise DomainError("sequence members must share the limit's dimension")
        diff = v - limit
        coord_sups.append(max(abs(c) for c in diff.coords[:window]))
        if diff.mode is Mode.EXACT and diff.norm_tag is NormTag.L2:
            norm_gaps.append(norm(diff.to_float(), NormTag.L2))
        else:
            norm_gaps.append(norm(diff))
    last_gap = float(norm_gaps[-1])
    last_coord = float(coord_sups[-1])
    if last_gap < tau:
        classification = "norm-convergent"
    elif last_coord < tau:
        classification = "coordinatewise-only"
    else:
        classification = "divergent"
    return ProbeReport(window, tau, tuple(coord_sups), tuple(norm_gaps), classification)
