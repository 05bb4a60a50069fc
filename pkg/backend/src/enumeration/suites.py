"""
Verification suites behind `verify --suite`.

Each suite is a function returning a SuiteResult. Exhaustive suites are exact;
the sampled ones (geodesics, boltzmann-law, cutequiv, quadrant-split,
boundary, busemann-stability, slice-identity) draw everything from their
master seed.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from opentelemetry import trace

from src.busemann.cut_events import cut_events_agree, default_guard
from src.busemann.profile import estimate_profile, profile_on_window, window_builder
from src.config import (
    DEFAULT_DOUBLING_STABILITY,
    DEFAULT_INITIAL_WINDOW,
    DEFAULT_MAX_ATTEMPTS,
    DEFAULT_PROBES,
    DEFAULT_SUITE_MAX_WINDOW,
)
from src.distances.dp import distance_field, max_xdp
from src.distances.geodesics import geodesic_slices, leftmost_geodesic
from src.errors import NotCoalescedError, NotStabilizedError, RejectionBudgetError
from src.kmsw.boundary import boundary_creation_check, boundary_lengths_from_walk
from src.kmsw.builder import build
from src.kmsw.inverse import invert
from src.maps.boundary import lower_boundary_vertices, upper_boundary_vertices
from src.maps.isomorphism import canonical_form, isomorphic
from src.maps.submaps import reachable_submap, strip_missing
from src.models.busemann import BusemannProfile
from src.models.distances import NO_PATH, Mode
from src.models.experiments import SuiteResult
from src.models.planar_map import MapWindow, OrientedMap
from src.models.walk import Walk
from src.samplers.boltzmann import boltzmann_walk
from src.walks.flip import flip_preimages, pitman_flip, pitman_unflip
from src.walks.rng import SeedLike, make_rng, replica_seeds
from src.walks.sampling import sample_conditioned_walk, sample_uibot_walk
from src.walks.stopping import split_quadrant_walks

from .channeled import channeled_walk_check, phi_bijection_check
from .cone import (
    Cone,
    admissible_walks,
    boundary_classes,
    count_triangulations,
    enumerate_maps,
    iter_walks_in_cone,
)
from .laws import exact_weighted_law, ruin_probability, total_mass
from .oracle import brute_force_geodesics

logger = logging.getLogger("enumeration_logger")
tracer = trace.get_tracer(__name__)

SuiteFunction = Callable[..., SuiteResult]

SUITES: Dict[str, SuiteFunction] = {}

# Failure lists are truncated in reports
_MAX_REPORTED = 50


def suite(name: str) -> Callable[[SuiteFunction], SuiteFunction]:
    def register(fn: SuiteFunction) -> SuiteFunction:
        SUITES[name] = fn
        return fn

    return register


def _result(name: str, checked: int, failures: List[str], **parameters) -> SuiteResult:
    return SuiteResult(
        suite=name,
        passed=not failures,
        checked=checked,
        failures=failures[:_MAX_REPORTED],
        parameters=parameters,
    )


@suite("roundtrip")
def roundtrip_suite(max_steps: int = 10, max_edges: int = 9) -> SuiteResult:
    """invert(build(w)) == w on admissible walks; build(invert(m)) is
    isomorphic to m and class counts match the number of distinct maps."""
    failures: List[str] = []
    checked = 0
    for n in range(max_steps + 1):
        for walk in admissible_walks(n, cap=max_steps):
            checked += 1
            if invert(build(walk)) != walk:
                failures.append(f"invert(build({walk.tags()!r})) differs")
    for n_edges in range(1, max_edges + 1):
        for l, r in boundary_classes(n_edges):
            maps = enumerate_maps(n_edges, l, r, cap=max_edges)
            forms = set()
            for map_ in maps:
                checked += 1
                if not isomorphic(build(invert(map_)), map_):
                    failures.append(f"class ({n_edges}, {l}, {r}): rebuild not isomorphic")
                forms.add(canonical_form(map_))
            expected = count_triangulations(n_edges, l, r, cap=max_edges)
            if len(forms) != expected:
                failures.append(
                    f"class ({n_edges}, {l}, {r}): {len(forms)} distinct maps, count {expected}"
                )
    return _result("roundtrip", checked, failures, max_steps=max_steps, max_edges=max_edges)


@suite("pitman")
def pitman_suite(max_n: int = 9, max_unflip: int = 8) -> SuiteResult:
    """Flipped law equals the h-transform law exactly; unflipping recovers
    every lazy path and each flip image has level + 1 preimages."""
    failures: List[str] = []
    checked = 0
    for n in range(max_n + 1):
        laws = {w: exact_weighted_law(n, w) for w in ("plain", "h-transform", "flipped")}
        for weighting, law in laws.items():
            if total_mass(law) != 1:
                failures.append(f"n={n}: {weighting} law has mass {total_mass(law)}")
        if laws["flipped"] != laws["h-transform"]:
            failures.append(f"n={n}: flipped law differs from the h-transform law")
        checked += len(laws["h-transform"])
    for n in range(max_unflip + 1):
        for increments in product((-1, 0, 1), repeat=n):
            levels = np.concatenate(([0], np.cumsum(increments, dtype=np.int64)))
            flipped = pitman_flip(levels)
            checked += 1
            if not np.array_equal(pitman_unflip(flipped, int(-levels.min())), levels):
                failures.append(f"unflip does not recover {levels.tolist()}")
            preimages = flip_preimages(flipped)
            if len(preimages) != flipped[-1] + 1:
                failures.append(f"{flipped.tolist()} has {len(preimages)} preimages")
            if not any(np.array_equal(p, levels) for p in preimages):
                failures.append(f"{levels.tolist()} missing from the preimages of its flip")
    return _result("pitman", checked, failures, max_n=max_n, max_unflip=max_unflip)


@suite("ruin")
def ruin_suite(max_k: int = 20) -> SuiteResult:
    failures: List[str] = []
    checked = 0
    for K in range(max_k + 1):
        for s in range(K + 1):
            checked += 1
            value = ruin_probability(s, K)
            if value != Fraction(s + 1, K + 1):
                failures.append(f"s={s}, K={K}: {value} != {Fraction(s + 1, K + 1)}")
    return _result("ruin", checked, failures, max_k=max_k)


@suite("phi")
def phi_suite(max_boundary: int = 6, max_interior: int = 8) -> SuiteResult:
    """Boundary reversal between channeled classes, and channeled walks
    against the classes with left length 1."""
    failures: List[str] = []
    checked = 0
    for total in range(3, max_boundary + 1):
        for l in range(1, total - 1):
            r = total - l
            for k in range(1, r):
                for interior in range(max_interior + 1):
                    checked += 1
                    failures.extend(phi_bijection_check(l, r, k, interior))
    for l in range(1, max_boundary):
        for n in range(1, max_interior + 2):
            checked += 1
            failures.extend(channeled_walk_check(l, n))
    return _result(
        "phi", checked, failures, max_boundary=max_boundary, max_interior=max_interior
    )


def _geodesic_failures(map_: OrientedMap, label: str) -> List[str]:
    failures = []
    lengths: Dict[Mode, Dict] = {Mode.LDP: {}, Mode.SDP: {}}
    for src in range(map_.vertex_count):
        reachable = distance_field(map_, Mode.LDP, src).values
        for dst in np.flatnonzero(reachable != NO_PATH).tolist():
            for mode in Mode:
                oracle = brute_force_geodesics(map_, mode, src, dst)
                lengths[mode][(src, dst)] = oracle.length
                greedy = leftmost_geodesic(map_, mode, src, dst)
                if oracle.dominating != 1:
                    failures.append(
                        f"{label}: {oracle.dominating} dominating {mode.value} "
                        f"geodesics {src}->{dst}"
                    )
                elif greedy != oracle.leftmost:
                    failures.append(
                        f"{label}: greedy {mode.value} path {src}->{dst} is not leftmost"
                    )
    if max_xdp(map_, Mode.LDP) != max(lengths[Mode.LDP].values(), default=0):
        failures.append(f"{label}: max LDP differs from brute force")
    lower, upper = lower_boundary_vertices(map_), upper_boundary_vertices(map_)
    sdp = [
        length
        for (x, y), length in lengths[Mode.SDP].items()
        if x in lower and y in upper
    ]
    if max_xdp(map_, Mode.SDP) != max(sdp, default=0):
        failures.append(f"{label}: max SDP differs from brute force")
    return failures


@suite("geodesics")
def geodesics_suite(
    max_edges: int = 8, random_maps: int = 500, random_steps: int = 19, seed: int = 0
) -> SuiteResult:
    """Greedy leftmost geodesics against brute-force dominance."""
    failures: List[str] = []
    checked = 0
    for n_edges in range(1, max_edges + 1):
        for l, r in boundary_classes(n_edges):
            for index, map_ in enumerate(enumerate_maps(n_edges, l, r)):
                checked += 1
                failures.extend(_geodesic_failures(map_, f"map {index} of ({n_edges}, {l}, {r})"))
    rng = make_rng(seed)
    for child in replica_seeds(seed, random_maps):
        walk = sample_uibot_walk(int(rng.integers(1, random_steps + 1)), child)
        checked += 1
        failures.extend(_geodesic_failures(build(walk), f"random build {walk.tags()}"))
    return _result(
        "geodesics",
        checked,
        failures,
        max_edges=max_edges,
        random_maps=random_maps,
        random_steps=random_steps,
        seed=seed,
    )


def _attempt_class_mass(r: int, n_edges: int) -> List[Walk]:
    """Accepted prefixes of attempts whose map has n_edges edges; each has
    attempt probability 3^-n_edges."""
    prefixes = iter_walks_in_cone(n_edges - 1, (0, 0), None, Cone(0, 1 - r), cap=n_edges)
    return [w for w in prefixes if w.second_coordinate[-1] == 1 - r]


@suite("boltzmann-law")
def boltzmann_law_suite(
    r: int = 1, max_edges: int = 7, draws: int = 20_000, seed: int = 0, z: float = 4.0
) -> SuiteResult:
    """Attempt-level law: every map with n edges and right length r comes
    from exactly one accepted attempt, of probability 3^-n; sampled edge
    counts match the resulting law."""
    failures: List[str] = []
    checked = 0
    weights: Dict[int, Fraction] = {}
    for n_edges in range(1, max_edges + 1):
        prefixes = _attempt_class_mass(r, n_edges)
        forms = set()
        for walk in prefixes:
            checked += 1
            map_ = build(walk)
            if map_.missing_edge_count or map_.segments.lengths()[2] != r:
                failures.append(f"attempt {walk.tags()} builds outside the class")
            forms.add(canonical_form(map_))
        expected = sum(count_triangulations(n_edges, l, r) for l in range(1, n_edges + 1))
        if len(forms) != len(prefixes) or len(forms) != expected:
            failures.append(
                f"n={n_edges}: {len(prefixes)} attempts, {len(forms)} maps, {expected} expected"
            )
        weights[n_edges] = Fraction(len(prefixes), 3**n_edges)

    rng = make_rng(seed)
    sizes: Counter = Counter()
    for _ in range(draws):
        for _attempt in range(DEFAULT_MAX_ATTEMPTS):
            walk = boltzmann_walk(rng, r)
            if walk is not None:
                break
        else:
            raise RejectionBudgetError(f"no accepted attempt in {DEFAULT_MAX_ATTEMPTS} tries")
        if walk.length + 1 <= max_edges:
            sizes[walk.length + 1] += 1
    total = sum(sizes.values())
    norm = sum(weights.values())
    for n_edges, weight in weights.items():
        p = float(weight / norm)
        checked += 1
        if total == 0 or p in (0.0, 1.0):
            continue
        se = math.sqrt(p * (1 - p) / total)
        freq = sizes[n_edges] / total
        if abs(freq - p) > z * se:
            failures.append(f"n={n_edges}: frequency {freq:.4f} vs {p:.4f} (se {se:.4f})")
    return _result(
        "boltzmann-law", checked, failures, r=r, max_edges=max_edges, draws=draws, seed=seed
    )


@suite("cutequiv")
def cutequiv_suite(windows: int = 500, steps: int = 10_000, seed: int = 0) -> SuiteResult:
    """Map-side cut vertices against walk-side cut events."""
    failures: List[str] = []
    guard = default_guard(steps)
    for index, child in enumerate(replica_seeds(seed, windows)):
        walk = sample_conditioned_walk(steps, 0, child)
        if not cut_events_agree(walk, build(walk), guard):
            failures.append(f"window {index}: cut events disagree")
    return _result("cutequiv", windows, failures, windows=windows, steps=steps, seed=seed)


@suite("quadrant-split")
def quadrant_split_suite(walks: int = 1000, length: int = 1000, seed: int = 0) -> SuiteResult:
    """The map built from walk_hat is the part of the full build reachable
    from the root's tail."""
    failures: List[str] = []
    for index, child in enumerate(replica_seeds(seed, walks)):
        walk = sample_uibot_walk(length, child)
        hat, _ = split_quadrant_walks(walk)
        full = build(walk)
        if not isomorphic(reachable_submap(full, full.root_tail), strip_missing(build(hat))):
            failures.append(f"walk {index}: reachable part differs from the walk_hat build")
    return _result("quadrant-split", walks, failures, walks=walks, length=length, seed=seed)


@suite("boundary")
def boundary_suite(walks: int = 10_000, max_length: int = 1000, seed: int = 0) -> SuiteResult:
    """Segment lengths and creation times read off the walk."""
    failures: List[str] = []
    rng = make_rng(seed)
    for index, child in enumerate(replica_seeds(seed, walks)):
        walk = sample_uibot_walk(int(rng.integers(0, max_length + 1)), child)
        map_ = build(walk)
        if map_.segments.lengths() != boundary_lengths_from_walk(walk):
            failures.append(
                f"walk {index}: segments {map_.segments.lengths()} "
                f"vs formula {boundary_lengths_from_walk(walk)}"
            )
        failures.extend(f"walk {index}: {p}" for p in boundary_creation_check(walk))
    return _result("boundary", walks, failures, walks=walks, max_length=max_length, seed=seed)


@dataclass(frozen=True)
class StabilityCheck:
    """Diagnostics of one replica.

    `profile` is None when the replica was censored; `doubling_unchanged` is
    None when the doubled window did not stabilize.
    """

    profile: Optional[BusemannProfile]
    failures: Tuple[str, ...] = ()
    doubling_unchanged: Optional[bool] = None


def _constraint_failures(profile: BusemannProfile, label: str) -> List[str]:
    failures = []
    if profile[0] != 0:
        failures.append(f"{label}: X(0) = {profile[0]}")
    for k in range(1, profile.K + 1):
        step = profile[k] - profile[k - 1]
        if (profile.mode is Mode.LDP and step > -1) or (profile.mode is Mode.SDP and step < -1):
            failures.append(f"{label}: {profile.mode.value} increment at k={k} is {step}")
    return failures


def _recompute(
    window: MapWindow, mode: Mode, K: int, probes: int, label: str, failures: List[str]
) -> Optional[BusemannProfile]:
    try:
        return profile_on_window(window, mode, K, probes)
    except NotStabilizedError:
        return None
    except ValueError as exc:
        # BusemannProfile rejects X(0) != 0 and sign violations on construction
        failures.append(f"{label}: {exc}")
        return None


def stability_check(
    mode: Mode,
    K: int,
    seed: SeedLike,
    initial_window: int = DEFAULT_INITIAL_WINDOW,
    max_window: int = DEFAULT_SUITE_MAX_WINDOW,
    probes: int = DEFAULT_PROBES,
    label: str = "replica",
) -> StabilityCheck:
    """Estimate one profile, then recompute it with twice the probes on the
    same window and with the same probes on the doubled window."""
    mode = Mode.parse(mode)
    try:
        profile = estimate_profile(mode, K, initial_window, max_window, probes, seed)
    except NotStabilizedError:
        return StabilityCheck(None)
    except ValueError as exc:
        return StabilityCheck(None, (f"{label}: {exc}",))
    failures = _constraint_failures(profile, label)
    builder = window_builder("uibot", K, seed)
    more = _recompute(builder(profile.window), mode, K, 2 * probes, label, failures)
    if more is not None and more.values != profile.values:
        failures.append(
            f"{label}: {2 * probes} probes give {more.values}, {probes} give {profile.values}"
        )
    doubled = _recompute(builder(2 * profile.window), mode, K, probes, label, failures)
    unchanged = None if doubled is None else doubled.values == profile.values
    return StabilityCheck(profile, tuple(failures), unchanged)


@suite("busemann-stability")
def busemann_stability_suite(
    windows: int = 200,
    K: int = 2,
    initial_window: int = DEFAULT_INITIAL_WINDOW,
    max_window: int = DEFAULT_SUITE_MAX_WINDOW,
    probes: int = DEFAULT_PROBES,
    seed: int = 0,
    min_unchanged: float = DEFAULT_DOUBLING_STABILITY,
) -> SuiteResult:
    """X(0) = 0, sign constraints and probe invariance on every stabilized
    window; at least `min_unchanged` of the profiles survive window doubling.

    `windows` replicas are drawn per mode; censored replicas are not checked.
    """
    failures: List[str] = []
    stabilized = 0
    for mode in Mode:
        compared = unchanged = 0
        for index, child in enumerate(replica_seeds(seed, windows)):
            check = stability_check(
                mode, K, child, initial_window, max_window, probes,
                label=f"{mode.value} window {index}",
            )
            failures.extend(check.failures)
            if check.profile is None:
                continue
            stabilized += 1
            if check.doubling_unchanged is not None:
                compared += 1
                unchanged += check.doubling_unchanged
        logger.info(
            f"{mode.value}: {unchanged}/{compared} profiles unchanged at the doubled window"
        )
        if compared and unchanged < min_unchanged * compared:
            failures.append(
                f"{mode.value}: {unchanged}/{compared} profiles unchanged after doubling, "
                f"need {min_unchanged:.0%}"
            )
    if stabilized == 0:
        failures.append("no window stabilized")
    return _result(
        "busemann-stability",
        stabilized,
        failures,
        windows=windows,
        K=K,
        initial_window=initial_window,
        max_window=max_window,
        probes=probes,
        seed=seed,
        min_unchanged=min_unchanged,
    )


@suite("slice-identity")
def slice_identity_suite(
    windows: int = 100,
    K: int = 2,
    initial_window: int = DEFAULT_INITIAL_WINDOW,
    max_window: int = DEFAULT_SUITE_MAX_WINDOW,
    probes: int = DEFAULT_PROBES,
    seed: int = 0,
) -> SuiteResult:
    """X(k) - X(k-1) equals theta_k - theta_k^- of the geodesic slices towards
    the probe vertex, on every window where both computations succeed."""
    failures: List[str] = []
    checked = 0
    for mode in Mode:
        for index, child in enumerate(replica_seeds(seed, windows)):
            try:
                profile = estimate_profile(mode, K, initial_window, max_window, probes, child)
            except NotStabilizedError:
                continue
            window = window_builder("uibot", K, child)(profile.window)
            try:
                slices = geodesic_slices(
                    window.map, window.indexing, mode, (-K + 1, K), profile.probe_vertex
                )
            except NotCoalescedError:
                continue
            checked += 1
            for piece in slices:
                expected = profile[piece.k] - profile[piece.k - 1]
                if piece.increment != expected:
                    failures.append(
                        f"{mode.value} window {index}, k={piece.k}: slice gives "
                        f"{piece.increment}, profile gives {expected}"
                    )
    if checked == 0:
        failures.append("no window where both the profile and the slices exist")
    return _result(
        "slice-identity",
        checked,
        failures,
        windows=windows,
        K=K,
        initial_window=initial_window,
        max_window=max_window,
        probes=probes,
        seed=seed,
    )


def run_suite(name: str, **parameters) -> SuiteResult:
    """Run a registered suite; unknown names raise ValueError."""
    if name not in SUITES:
        raise ValueError(f"Unknown suite '{name}', expected one of {sorted(SUITES)}")
    with tracer.start_as_current_span("verify_suite", kind=trace.SpanKind.INTERNAL) as span:
        span.set_attribute("suite.name", name)
        try:
            result = SUITES[name](**parameters)
        except Exception as e:
            logger.error(f"Suite {name} raised: {str(e)}")
            raise
        span.set_attribute("suite.checked", result.checked)
        span.set_attribute("suite.passed", result.passed)
        logger.info(
            f"Suite {name}: {result.checked} checks, {len(result.failures)} failures reported"
        )
        return result
