"""Tests for the end-to-end pipeline."""

from collections import Counter
from pathlib import Path

import pytest

from braidmono import pipeline
from braidmono.exceptions import GenericityError, TrackingError
from braidmono.grouptheory import FiniteGroupTable
from braidmono.models import PipelineConfig
from braidmono.newtonpuiseux import classify_fiber_point, local_braid_exponent
from braidmono.parsers import parse_curve
from braidmono.pipeline import check_genericity, quotient_target, run_pipeline
from braidmono.reporting import emit_report


def _config(text: str, **options: object) -> PipelineConfig:
    return PipelineConfig(curve_text=text, use_cache=False, **options)


class TestGenericity:
    """The vertical pencil must be generic."""

    def test_generic_curve_passes(self, conic):
        check_genericity(conic)

    def test_hyperbola_is_rejected(self):
        with pytest.raises(GenericityError, match="--shear"):
            check_genericity(parse_curve("x*y - 1"))

    def test_constant_is_rejected(self):
        with pytest.raises(GenericityError):
            check_genericity(parse_curve("3"))

    async def test_pipeline_raises_for_non_generic_curve(self):
        with pytest.raises(GenericityError):
            await run_pipeline(_config("x*y - 1"))

    async def test_shear_makes_hyperbola_generic(self):
        report = await run_pipeline(_config("x*y - 1", shear="1"))
        assert report.status == "complete"
        assert report.curve.shear == "1"
        assert report.curve.degree_y == 2
        assert report.order.order == 2


class TestQuotientTarget:
    """Quotient targets by name or table file."""

    def test_named_group(self):
        assert quotient_target("D10").order == 10

    def test_table_file(self, tmp_path: Path):
        path = tmp_path / "z4.txt"
        path.write_text(FiniteGroupTable.cyclic(4).to_text(), encoding="utf-8")
        table = quotient_target(str(path))
        assert table.order == 4
        assert table.name == "z4"


class TestSmallCurves:
    """Smooth conic and cubic."""

    async def test_conic(self):
        report = await run_pipeline(_config("x^2 + y^2 - 1"))
        assert report.status == "complete"
        assert report.is_conclusive
        assert report.discriminant.degree == 2
        assert len(report.lassos) == 2
        assert all(lasso.letters == [1] for lasso in report.lassos)
        assert report.abelianization == [2]
        assert report.order.order == 2
        assert report.quotients[0].target == "d10"
        assert not report.quotients[0].exists
        assert report.identification is None
        assert report.messages == []

    async def test_conic_local_braids(self):
        report = await run_pipeline(_config("x^2 + y^2 - 1", check_local_braids=True))
        assert sorted((b.x, b.y, b.label) for b in report.local_braids) == [
            ("-1", "0", "T2"),
            ("1", "0", "T2"),
        ]
        assert all(b.expected == b.measured == 1 for b in report.local_braids)

    async def test_cubic(self):
        cfg = PipelineConfig(fixture="cubic", use_cache=False, quotients="z3,s3")
        report = await run_pipeline(cfg)
        assert report.abelianization == [3]
        assert report.order.order == 3
        by_target = {q.target: q for q in report.quotients}
        assert by_target["z3"].exists
        assert not by_target["s3"].exists
        assert sum(len(lasso.letters) for lasso in report.lassos) == report.discriminant.degree

    async def test_lasso_order_follows_targets(self):
        report = await run_pipeline(_config("x^2 + y^2 - 1"))
        assert [lasso.index for lasso in report.lassos] == [0, 1]
        assert sorted(lasso.target for lasso in report.lassos) == [0, 1]

    async def test_coset_bound_exceeded_is_inconclusive(self):
        report = await run_pipeline(_config("x^2 + y^2 - 1", coset_bound=1))
        assert report.order.status == "exceeded"
        assert not report.is_conclusive

    async def test_redundancy_and_alexander_for_conic(self):
        report = await run_pipeline(
            _config("x^2 + y^2 - 1", check_redundancy=True, alexander=True)
        )
        assert report.redundant_lassos is not None
        assert report.alexander is not None


class TestTrackingFailure:
    """Tracking failures produce a partial report."""

    async def test_tracking_error_gives_partial_report(self, monkeypatch):
        def fail(state, lasso):
            raise TrackingError("forced failure")

        monkeypatch.setattr(pipeline, "track_lasso", fail)
        report = await run_pipeline(_config("x^2 + y^2 - 1"))
        assert report.status == "partial"
        assert not report.is_conclusive
        assert any("forced failure" in m for m in report.messages)
        assert report.discriminant is not None
        assert report.lassos == []


class TestCache:
    """Braid words are cached per lasso."""

    async def test_second_run_uses_cache(self, braid_cache, monkeypatch):
        cfg = _config("x^2 + y^2 - 1")
        first = await run_pipeline(cfg, braid_cache)
        assert await braid_cache.count() == 2

        def fail(state, lasso):
            raise AssertionError("tracked despite cached braid")

        monkeypatch.setattr(pipeline, "track_lasso", fail)
        second = await run_pipeline(cfg, braid_cache)
        assert emit_report(first, "structured") == emit_report(second, "structured")

    async def test_local_braid_check_bypasses_cache_reads(self, braid_cache):
        await run_pipeline(_config("x^2 + y^2 - 1"), braid_cache)
        again = await run_pipeline(
            _config("x^2 + y^2 - 1", check_local_braids=True), braid_cache
        )
        assert len(again.local_braids) == 2
        assert again.messages == []

    async def test_local_braids_off_by_default(self, braid_cache):
        report = await run_pipeline(_config("x^2 + y^2 - 1"), braid_cache)
        assert report.local_braids == []

    async def test_dump_bypasses_cache_reads(self, braid_cache, tmp_path: Path):
        cfg = _config("x^2 + y^2 - 1")
        await run_pipeline(cfg, braid_cache)
        dump_dir = tmp_path / "dumps"
        await run_pipeline(
            _config("x^2 + y^2 - 1", dump_trajectories=dump_dir), braid_cache
        )
        files = sorted(p.name for p in dump_dir.iterdir())
        assert files == ["lasso_00.txt", "lasso_01.txt"]
        assert (dump_dir / "lasso_00.txt").read_text(encoding="utf-8").strip()


@pytest.mark.slow
@pytest.mark.integration
class TestSexticC:
    """The sextic C: cyclic group of order 6."""

    def test_status(self, report_c):
        assert report_c.status == "complete"
        assert report_c.messages == []

    def test_discriminant(self, report_c):
        assert report_c.discriminant.degree == 30
        assert len(report_c.discriminant.roots) == 10

    def test_crossings_match_discriminant_degree(self, report_c):
        total = sum(sum(1 if s > 0 else -1 for s in lasso.letters) for lasso in report_c.lassos)
        assert total == report_c.discriminant.degree

    def test_group(self, report_c):
        assert report_c.abelianization == [6]
        assert report_c.order.order == 6
        assert not report_c.quotients[0].exists
        assert report_c.identification is None

    def test_alexander_polynomial_is_trivial(self, report_c):
        assert report_c.alexander == "1"

    def test_local_braids_agree_with_singularity_types(self, report_c):
        assert report_c.local_braids
        assert all(b.agrees for b in report_c.local_braids)
        at_origin = {b.label: b.measured for b in report_c.local_braids if b.x == "0"}
        assert at_origin == {"A9": 10, "A4": 5}

    def test_origin_lasso_is_a9_times_a4(self, report_c, curve_c):
        (target,) = {b.target for b in report_c.local_braids if b.x == "0"}
        (lasso,) = [lasso for lasso in report_c.lassos if lasso.target == target]
        assert all(s > 0 for s in lasso.letters)
        counts = Counter(lasso.letters)
        assert len(counts) == 2
        first, second = sorted(counts)
        assert second - first >= 2
        expected = sorted(
            local_braid_exponent(classify_fiber_point(curve_c, point))
            for point in [(0, 0), (0, 1)]
        )
        assert sorted(counts.values()) == expected == [5, 10]

    def test_certification_finds_alignment_near_tenth(self, report_c):
        events = [
            float(event.x0)
            for record in report_c.certification_log
            for event in record.events
        ]
        assert any(abs(x0 - 0.1205) < 1e-3 for x0 in events)


@pytest.mark.slow
@pytest.mark.integration
class TestSexticCprime:
    """The sextic C': a group of order 30 with a D10 quotient."""

    def test_status(self, report_cprime):
        assert report_cprime.status == "complete"

    def test_discriminant(self, report_cprime):
        assert report_cprime.discriminant.degree == 30
        assert len(report_cprime.discriminant.roots) == 8

    def test_crossings_match_discriminant_degree(self, report_cprime):
        total = sum(
            sum(1 if s > 0 else -1 for s in lasso.letters) for lasso in report_cprime.lassos
        )
        assert total == report_cprime.discriminant.degree

    def test_group(self, report_cprime):
        assert report_cprime.abelianization == [6]
        assert report_cprime.order.order == 30
        assert report_cprime.quotients[0].exists

    def test_identification(self, report_cprime):
        assert report_cprime.identification.label == "D10 x Z/3"
        assert report_cprime.identification.witness == "x2*x1"

    def test_alexander_polynomial_is_trivial(self, report_cprime):
        assert report_cprime.alexander == "1"

    def test_local_braids_agree_with_singularity_types(self, report_cprime):
        # the A9 point of C' has four local strands and no two-strand prediction
        checked = {(b.x, b.y): b for b in report_cprime.local_braids}
        assert ("0", "0") not in checked
        assert checked[("1", "-1")].label == checked[("1", "1")].label == "A4"
        assert checked[("1", "1")].measured == 5
        assert all(b.agrees for b in report_cprime.local_braids)

    def test_redundancy_checked(self, report_cprime):
        assert report_cprime.redundant_lassos is not None

    async def test_structured_output_is_deterministic(self, report_cprime):
        cfg = PipelineConfig(
            fixture="Cprime",
            use_cache=False,
            alexander=True,
            check_redundancy=True,
            check_local_braids=True,
        )
        again = await run_pipeline(cfg)
        assert emit_report(again, "structured") == emit_report(report_cprime, "structured")

    async def test_doubled_precision_gives_identical_braids(self, report_cprime):
        cfg = PipelineConfig(fixture="Cprime", use_cache=False, identify=False, precision_bits=128)
        doubled = await run_pipeline(cfg)
        assert doubled.status == "complete"
        assert [lasso.letters for lasso in doubled.lassos] == [
            lasso.letters for lasso in report_cprime.lassos
        ]
