"""End-to-end braid monodromy pipeline.

run_pipeline goes from a curve to a Report: discriminant and its certified
roots, one lasso per root, braid monodromy by path tracking, the
Zariski-van Kampen presentation and the group-theoretic post-processing.
Lasso tracking fans out over worker threads; results are merged in lasso
order so reports are deterministic.
"""

from __future__ import annotations

import asyncio
import logging
import time
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import mpmath

from braidmono.cache import BraidCacheProtocol, braid_cache_key, create_cache
from braidmono.exactpoly import (
    BivariatePoly,
    GaussianRational,
    UnivariatePoly,
    discriminant_y,
    to_fraction,
)
from braidmono.exceptions import (
    CertificationError,
    DegenerateAlignmentError,
    GenericityError,
    IdentificationError,
    PuiseuxError,
    TangentialCrossingError,
    TrackingError,
)
from braidmono.grouptheory import (
    FiniteGroupTable,
    GroupPresentation,
    Order30Verdict,
    SimplifiedPresentation,
    abelianization,
    alexander_polynomial,
    coset_enumeration_order,
    find_epimorphisms,
    identify_order30,
    named_group,
    tietze_simplify,
    verify_witness,
)
from braidmono.grouptheory.finite import NAMED_GROUPS
from braidmono.models import (
    AlignmentEventRecord,
    AlignmentRecord,
    CurveRecord,
    DiscriminantRecord,
    FactorRecord,
    IdentificationRecord,
    LassoRecord,
    LocalBraidRecord,
    OrderRecord,
    PipelineConfig,
    PresentationRecord,
    QuotientRecord,
    Report,
    RootRecord,
)
from braidmono.newtonpuiseux import (
    classify_fiber_point,
    fiber_singular_points,
    local_braid_exponent,
)
from braidmono.numroots import ComplexDisk, RootConfiguration, isolate_complex_roots
from braidmono.parsers import format_poly
from braidmono.pathtrack import (
    LassoPath,
    NumericCurve,
    StepPolicy,
    Trajectory,
    basepoint_disks,
    braid_from_events,
    build_lasso,
    build_lasso_system,
    certify_real_segment,
    default_basepoint,
    default_epsilon,
    endpoint_permutation,
    extract_crossings,
    local_strands,
    real_segments,
    relative_half_turns,
    track_fiber,
    write_trajectory_dump,
)
from braidmono.vankampen import (
    BraidWord,
    FreeWord,
    affine_presentation,
    assemble_presentation,
    redundant_lassos,
    relators_from_lasso,
)

logger = logging.getLogger(__name__)

ROOT_DIGITS = 15
RADIUS_DIGITS = 3
ALIGNMENT_DIGITS = 6
PREFERRED_WITNESS = FreeWord((2, 1))


@dataclass(frozen=True)
class LassoBraid:
    """Braid monodromy of one lasso.

    Attributes:
        lasso: The path actually tracked (possibly nudged)
        braid: Braid word in composition order
        permutation: Endpoint permutation of the strands
        cached: Whether the braid came from the cache
        trajectory: Tracked trajectory (None for cache hits)
    """

    lasso: LassoPath
    braid: BraidWord
    permutation: tuple[int, ...]
    cached: bool = False
    trajectory: Trajectory | None = None


@dataclass
class _Tracking:
    """Shared state of one run's tracking stage."""

    curve: BivariatePoly
    numeric: NumericCurve
    singular_values: tuple[ComplexDisk, ...]
    basepoint: GaussianRational
    epsilon: Fraction
    start: tuple[ComplexDisk, ...]
    policy: StepPolicy
    tilt: Fraction
    polynomial_text: str


class _Timer:
    def __init__(self) -> None:
        self.stages: dict[str, float] = {}

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        started = time.perf_counter()
        try:
            yield
        finally:
            self.stages[name] = round(time.perf_counter() - started, 3)


def check_genericity(curve: BivariatePoly) -> None:
    """Raise unless the vertical pencil is generic: deg_y f = deg f.

    Then the axis point (0:1:0) is not on the projective closure.
    """
    if curve.degree < 1:
        raise GenericityError("the curve must have positive degree")
    if curve.degree_inner != curve.degree:
        raise GenericityError(
            f"deg_y f = {curve.degree_inner} differs from deg f = {curve.degree}; "
            "the point (0:1:0) lies on the curve. Retry with --shear a to apply x -> x + a*y"
        )


def quotient_target(name: str) -> FiniteGroupTable:
    """Named group or a multiplication table file."""
    if name.lower() in NAMED_GROUPS:
        return named_group(name)
    return FiniteGroupTable.from_file(Path(name).expanduser())


def _nstr(value: object, digits: int) -> str:
    return str(mpmath.nstr(value, digits, min_fixed=-mpmath.inf, max_fixed=mpmath.inf))


def _curve_record(name: str, curve: BivariatePoly, shear: str | None) -> CurveRecord:
    return CurveRecord(
        name=name,
        polynomial=format_poly(curve),
        degree=curve.degree,
        degree_y=curve.degree_inner,
        terms=curve.nterms,
        shear=shear,
    )


def _discriminant_record(
    discriminant: UnivariatePoly, roots: RootConfiguration | None
) -> DiscriminantRecord:
    factors = [
        FactorRecord(polynomial=str(factor.as_expr()), multiplicity=multiplicity)
        for factor, multiplicity in discriminant.squarefree_factors()
    ]
    records = []
    if roots is not None:
        for index, (disk, multiplicity) in enumerate(
            zip(roots.disks, roots.multiplicities, strict=True)
        ):
            records.append(
                RootRecord(
                    index=index,
                    re=_nstr(disk.real, ROOT_DIGITS),
                    im=_nstr(disk.imag, ROOT_DIGITS),
                    radius=_nstr(disk.radius, RADIUS_DIGITS),
                    multiplicity=multiplicity,
                    real=disk.is_real_certified,
                )
            )
    return DiscriminantRecord(degree=discriminant.degree, factors=factors, roots=records)


def _presentation_record(p: GroupPresentation) -> PresentationRecord:
    return PresentationRecord(
        generators=p.generator_count,
        relators=[r.format() for r in p.relators],
        total_length=p.total_length,
    )


def _lasso_record(position: int, result: LassoBraid) -> LassoRecord:
    return LassoRecord(
        index=position,
        target=result.lasso.target,
        letters=result.braid.to_list(),
        braid=result.braid.format(),
        crossings=len(result.braid),
        permutation=list(result.permutation),
        nudged=result.lasso.nudged,
        relators=[r.format() for r in relators_from_lasso(result.braid)],
    )


def _in_original_generators(word: FreeWord, simplified: SimplifiedPresentation) -> FreeWord:
    images = {
        k: FreeWord.generator(original)
        for k, original in enumerate(simplified.kept_generators, start=1)
    }
    return word.substitute(images)


def _witness_text(
    raw: GroupPresentation,
    simplified: SimplifiedPresentation,
    verdict: Order30Verdict,
    cfg: PipelineConfig,
) -> str | None:
    """x2*x1 if it is a witness in the input generators, else the simplified group's witness."""
    try:
        if raw.generator_count >= 2 and verify_witness(raw, PREFERRED_WITNESS, cfg.coset_bound):
            return PREFERRED_WITNESS.format()
    except IdentificationError as e:
        logger.warning("witness x2*x1 not checked: %s", e)
    if verdict.witness is None:
        return None
    return _in_original_generators(verdict.witness, simplified).format()


def track_lasso(state: _Tracking, lasso: LassoPath) -> LassoBraid:
    """Track one lasso and read off its braid.

    Raises:
        TrackingError: If certification fails at the ceiling, or the endpoint
            permutation disagrees with the braid
    """
    trajectory = track_fiber(state.numeric, lasso, state.policy, state.tilt, state.start)
    braid = braid_from_events(extract_crossings(trajectory), state.numeric.degree)
    permutation = endpoint_permutation(trajectory)
    if permutation != braid.permutation():
        raise TrackingError(
            f"lasso {lasso.target}: endpoint permutation {permutation} does not match "
            f"the braid permutation {braid.permutation()}"
        )
    return LassoBraid(lasso, braid, permutation, trajectory=trajectory)


def _cache_key(state: _Tracking, lasso: LassoPath) -> str:
    return braid_cache_key(
        state.polynomial_text,
        lasso.describe(),
        state.policy.precision,
        state.policy.ceiling,
        state.tilt,
    )


async def _cached_braid(
    state: _Tracking, lasso: LassoPath, cache: BraidCacheProtocol | None
) -> LassoBraid | None:
    if cache is None:
        return None
    letters = await cache.get_braid(_cache_key(state, lasso))
    if letters is None:
        return None
    braid = BraidWord(letters, state.numeric.degree)
    return LassoBraid(lasso, braid, braid.permutation(), cached=True)


async def _store(state: _Tracking, result: LassoBraid, cache: BraidCacheProtocol | None) -> None:
    if cache is None or result.cached:
        return
    await cache.store_braid(
        _cache_key(state, result.lasso),
        result.braid.to_list(),
        result.braid.strands,
        {"target": result.lasso.target, "nudged": result.lasso.nudged},
    )


async def lasso_braid(
    state: _Tracking,
    lasso: LassoPath,
    cache: BraidCacheProtocol | None = None,
    use_cached: bool = True,
) -> LassoBraid:
    """Braid of one lasso: from the cache, by tracking, or by tracking a nudged lasso.

    A tangential crossing triggers one retry on the nudged lasso around the
    same singular value.
    """
    if use_cached:
        for candidate in (lasso, _nudged(state, lasso)):
            hit = await _cached_braid(state, candidate, cache)
            if hit is not None:
                logger.debug("cache hit for lasso %d", lasso.target)
                return hit
    try:
        result = await asyncio.to_thread(track_lasso, state, lasso)
    except TangentialCrossingError as e:
        logger.warning("lasso %d: %s; retrying with a nudged lasso", lasso.target, e)
        result = await asyncio.to_thread(track_lasso, state, _nudged(state, lasso))
    await _store(state, result, cache)
    logger.info(
        "lasso %d: %d crossings, braid %s", lasso.target, len(result.braid), result.braid.format()
    )
    return result


def _nudged(state: _Tracking, lasso: LassoPath) -> LassoPath:
    return build_lasso(
        state.singular_values, lasso.target, state.basepoint, state.epsilon, nudge=True
    )


async def track_all(
    state: _Tracking,
    lassos: Sequence[LassoPath],
    cache: BraidCacheProtocol | None,
    max_workers: int,
    use_cached: bool = True,
) -> list[LassoBraid]:
    """Braids of all lassos, in lasso order; the first failure in that order is raised."""
    semaphore = asyncio.Semaphore(max_workers)

    async def bounded(lasso: LassoPath) -> LassoBraid:
        async with semaphore:
            return await lasso_braid(state, lasso, cache, use_cached)

    outcomes = await asyncio.gather(*(bounded(lasso) for lasso in lassos), return_exceptions=True)
    results: list[LassoBraid] = []
    for outcome in outcomes:
        if isinstance(outcome, BaseException):
            raise outcome
        results.append(outcome)
    return results


def _dump(results: Sequence[LassoBraid], directory: Path) -> None:
    for position, result in enumerate(results):
        if result.trajectory is not None:
            write_trajectory_dump(result.trajectory, directory / f"lasso_{position:02d}.txt")


def _group_stage(
    cfg: PipelineConfig,
    braids: list[BraidWord],
    d: int,
    timer: _Timer,
    updates: dict[str, object],
    messages: list[str],
) -> None:
    with timer.stage("presentation"):
        raw = assemble_presentation(braids, d, projective=True)
        simplified = tietze_simplify(raw, cfg.tietze_limits)
    group = simplified.presentation
    updates["raw_presentation"] = _presentation_record(raw)
    updates["simplified_presentation"] = _presentation_record(group)

    with timer.stage("abelianization"):
        invariants = abelianization(group)
    updates["abelianization"] = invariants.as_list()
    logger.info("abelianization: %s", invariants)

    with timer.stage("coset_enumeration"):
        cosets = coset_enumeration_order(group, cfg.coset_bound)
    if cosets.exceeded:
        logger.warning("coset enumeration exceeded %d cosets", cfg.coset_bound)
        updates["order"] = OrderRecord(status="exceeded", bound=cfg.coset_bound)
    else:
        logger.info("group order: %d", cosets.order)
        updates["order"] = OrderRecord(status="finite", order=cosets.order, bound=cfg.coset_bound)

    with timer.stage("quotients"):
        quotients = []
        for name in cfg.quotients:
            target = quotient_target(name)
            maps = find_epimorphisms(group, target, cfg.epimorphism_order_bound)
            quotients.append(
                QuotientRecord(
                    target=name, target_order=target.order, exists=bool(maps), count=len(maps)
                )
            )
    updates["quotients"] = quotients

    if cfg.identify and cosets.order == 30:
        try:
            with timer.stage("identification"):
                verdict = identify_order30(group, cfg.coset_bound)
        except IdentificationError as e:
            messages.append(f"identification: {e}")
        else:
            updates["identification"] = IdentificationRecord(
                label=verdict.label, witness=_witness_text(raw, simplified, verdict, cfg)
            )

    if cfg.alexander:
        with timer.stage("alexander"):
            affine = tietze_simplify(affine_presentation(braids, d), cfg.tietze_limits)
            polynomial = alexander_polynomial(affine.presentation)
        updates["alexander"] = str(polynomial.as_expr())

    if cfg.check_redundancy:
        with timer.stage("redundancy"):
            updates["redundant_lassos"] = redundant_lassos(braids, d, projective=True)


def _rational_singular_values(discriminant: UnivariatePoly) -> list[Fraction]:
    values = []
    for factor, _ in discriminant.poly.factor_list()[1]:
        if factor.degree() == 1:
            c1, c0 = factor.all_coeffs()
            values.append(to_fraction(-c0 / c1))
    return sorted(values)


def _local_braid_stage(
    curve: BivariatePoly,
    discriminant: UnivariatePoly,
    singular_values: Sequence[ComplexDisk],
    results: Sequence[LassoBraid],
) -> list[LocalBraidRecord]:
    """Half twists of the local strand pairs over rational singular values.

    Only lassos tracked in this run are checked; cache hits carry no trajectory.
    """
    tracked = {r.lasso.target: r for r in results if r.trajectory is not None}
    records = []
    for eta in _rational_singular_values(discriminant):
        value = mpmath.mpf(eta.numerator) / eta.denominator
        targets = [k for k, disk in enumerate(singular_values) if disk.contains(value)]
        if len(targets) != 1 or targets[0] not in tracked:
            continue
        result = tracked[targets[0]]
        assert result.trajectory is not None
        try:
            points = fiber_singular_points(curve, eta)
        except PuiseuxError as e:
            logger.info("local braids over x = %s skipped: %s", eta, e)
            continue
        for point in points:
            try:
                kind = classify_fiber_point(curve, point)
                if kind is None:
                    continue
                expected = local_braid_exponent(kind)
            except PuiseuxError as e:
                logger.debug("no local braid prediction at %s: %s", point, e)
                continue
            y0 = mpmath.mpf(point[1].numerator) / point[1].denominator
            a, b = local_strands(result.trajectory, result.lasso.head_index, y0)
            measured = round(relative_half_turns(result.trajectory, a, b))
            records.append(
                LocalBraidRecord(
                    target=targets[0],
                    x=str(point[0]),
                    y=str(point[1]),
                    label=kind.label,
                    expected=expected,
                    measured=measured,
                )
            )
            logger.info(
                "local braid at (%s, %s) %s: %d half twists, expected %d",
                point[0],
                point[1],
                kind.label,
                measured,
                expected,
            )
    return records


def _certification_stage(
    curve: BivariatePoly,
    singular_values: Sequence[ComplexDisk],
    epsilon: Fraction,
    messages: list[str],
) -> list[AlignmentRecord]:
    records = []
    for lower, upper in real_segments(singular_values, epsilon):
        try:
            certificate = certify_real_segment(curve, lower, upper)
        except DegenerateAlignmentError as e:
            messages.append(f"segment [{lower}, {upper}]: {e}")
            continue
        records.append(
            AlignmentRecord(
                lower=str(lower),
                upper=str(upper),
                resultant_roots=certificate.resultant_root_count,
                events=[
                    AlignmentEventRecord(
                        x0=_nstr(event.x0, ALIGNMENT_DIGITS),
                        u0=None if event.u0 is None else _nstr(event.u0, ALIGNMENT_DIGITS),
                        aligned=event.aligned,
                    )
                    for event in certificate.events
                ],
            )
        )
    return records


async def run_pipeline(cfg: PipelineConfig, cache: BraidCacheProtocol | None = None) -> Report:
    """Compute the report for one configuration.

    Args:
        cfg: Pipeline configuration
        cache: Braid cache; when omitted and cfg.use_cache is set, the SQLite
            cache from cfg.cache_db_path (or settings) is used and closed

    Returns:
        Report with status "complete", or "partial" when certification or
        tracking failed at the precision ceiling.

    Raises:
        GenericityError: If deg_y f != deg f after the optional shear
        BraidMonoError: For invalid input (parse errors, bad epsilon, ...)
    """
    owned = None
    if cache is None and cfg.use_cache:
        owned = cache = create_cache(cfg.cache_db_path)
    try:
        return await _run(cfg, cache)
    finally:
        if owned is not None:
            await owned.close()


async def _run(cfg: PipelineConfig, cache: BraidCacheProtocol | None) -> Report:
    timer = _Timer()
    messages: list[str] = []
    updates: dict[str, object] = {"tilt": str(cfg.tilt)}

    def finish(status: str) -> Report:
        return Report(status=status, messages=messages, timing=timer.stages, **updates)

    with timer.stage("parse"):
        curve = cfg.load_curve()
        if cfg.shear_value is not None:
            curve = curve.shear(cfg.shear_value)
    updates["curve"] = _curve_record(cfg.curve_label, curve, cfg.shear)
    check_genericity(curve)
    d = curve.degree_inner
    logger.info("curve %s: degree %d, %d terms", cfg.curve_label, d, curve.nterms)

    with timer.stage("discriminant"):
        discriminant = discriminant_y(curve)
    logger.info("discriminant has degree %d", discriminant.degree)
    try:
        with timer.stage("roots"):
            roots = isolate_complex_roots(
                discriminant, cfg.precision_bits, cfg.precision_ceiling, source="discriminant"
            )
    except CertificationError as e:
        messages.append(f"discriminant roots: {e}")
        updates["discriminant"] = _discriminant_record(discriminant, None)
        return finish("partial")
    updates["discriminant"] = _discriminant_record(discriminant, roots)
    logger.info("discriminant has %d distinct roots", len(roots))

    singular_values = roots.disks
    epsilon = cfg.epsilon_value or default_epsilon(singular_values)
    basepoint = cfg.basepoint_value or default_basepoint(singular_values, epsilon, cfg.side)
    updates["epsilon"] = str(epsilon)
    updates["basepoint"] = str(basepoint.re)
    lassos = build_lasso_system(singular_values, basepoint, epsilon)

    policy = cfg.step_policy
    try:
        with timer.stage("tracking"):
            start = basepoint_disks(curve, basepoint, cfg.tilt, policy.precision, policy.ceiling)
            state = _Tracking(
                curve=curve,
                numeric=NumericCurve(curve),
                singular_values=singular_values,
                basepoint=basepoint,
                epsilon=epsilon,
                start=start,
                policy=policy,
                tilt=cfg.tilt,
                polynomial_text=format_poly(curve),
            )
            results = await track_all(
                state,
                lassos,
                cache,
                cfg.max_workers,
                use_cached=cfg.dump_trajectories is None and not cfg.check_local_braids,
            )
    except (CertificationError, TrackingError) as e:
        messages.append(f"tracking: {e}")
        logger.error("tracking failed: %s", e)
        return finish("partial")

    updates["lassos"] = [_lasso_record(k, r) for k, r in enumerate(results)]
    crossings = sum(r.braid.exponent_sum for r in results)
    if crossings != discriminant.degree:
        messages.append(
            f"total crossing exponent sum {crossings} differs from the discriminant degree "
            f"{discriminant.degree}"
        )
        logger.warning(messages[-1])
    if cfg.check_local_braids:
        with timer.stage("local_braids"):
            local = _local_braid_stage(curve, discriminant, singular_values, results)
        updates["local_braids"] = local
        for record in local:
            if not record.agrees:
                messages.append(
                    f"lasso {record.target}: {record.measured} half twists at "
                    f"({record.x}, {record.y}), {record.label} predicts {record.expected}"
                )
                logger.warning(messages[-1])
    if cfg.dump_trajectories is not None:
        _dump(results, cfg.dump_trajectories)

    _group_stage(cfg, [r.braid for r in results], d, timer, updates, messages)

    if cfg.certify_segments:
        with timer.stage("certify_segments"):
            updates["certification_log"] = _certification_stage(
                curve, singular_values, epsilon, messages
            )
    return finish("complete")


__all__ = [
    "LassoBraid",
    "check_genericity",
    "lasso_braid",
    "quotient_target",
    "run_pipeline",
    "track_all",
    "track_lasso",
]
