import json
import math

import pytest

from logsine.errors import UnknownIdentityError
from logsine.identities import RunConfig, registry
from logsine.verifier import render_report, run_all, run_identity, run_selected

PI = math.pi


@pytest.fixture(scope="module")
def default_report():
    return run_all()


class TestRegistry:
    def test_count_and_order(self):
        ids = [c.id for c in registry()]
        assert len(ids) == 24
        assert ids == sorted(ids)
        assert len(set(ids)) == 24

    def test_known_entries(self):
        by_id = {c.id: c for c in registry()}
        assert by_id["b4-series"].rhs_closed_form == pytest.approx(7 * PI**3 / 216, rel=1e-15)
        assert by_id["apostol-l4-residual"].rhs_closed_form == pytest.approx(19 * PI**4 / 3240, rel=1e-15)
        assert by_id["k2"].rhs_closed_form == pytest.approx(7 * PI**4 / 216 + 17 * PI**4 / 12960, rel=1e-15)

    def test_rhs_finite(self):
        assert all(math.isfinite(c.rhs_closed_form) for c in registry())

    def test_default_tolerance_classes(self):
        by_id = {c.id: c.default_tol for c in registry()}
        for i in ("b4-series", "c4-series", "apostol-b2", "k3-psi"):
            assert by_id[i].rel_tol == 1e-11
        for i in ("k-double", "apostol-l2", "apostol-l4-residual", "i3-psi"):
            assert by_id[i].rel_tol == 1e-7
        assert by_id["challenge-3"].rel_tol == 1e-9
        assert all(t.abs_tol == 1e-12 for t in by_id.values())


class TestRunIdentity:
    def test_examples(self):
        o = run_identity("challenge-1")
        assert o.passed and o.status == "pass"
        assert o.lhs_value == pytest.approx(0.1196230, abs=1e-7)
        assert o.rhs_value == pytest.approx(5 * PI**3 / 1296, rel=1e-15)

    def test_unknown(self):
        with pytest.raises(UnknownIdentityError):
            run_identity("nope")

    def test_outcome_fields(self):
        o = run_identity("b4-series")
        assert o.work <= 60 and o.work >= 1
        assert o.abs_error == abs(o.lhs_value - o.rhs_value)
        assert o.rel_error == pytest.approx(o.abs_error / abs(o.rhs_value))
        assert o.seconds >= 0

    def test_pass_rule_is_or(self):
        # rel fails but abs passes
        o = run_identity("b4-logsine", RunConfig(rel_tol=1e-300, abs_tol=1.0))
        assert o.passed

    def test_cap_gives_error_not_exception(self):
        o = run_identity("c4-series", RunConfig(max_terms=3))
        assert o.status == "error" and not o.passed
        assert o.lhs_value is None and "NonConvergenceError" in o.message
        assert o.work == 3

    def test_quad_level_cap_gives_error(self):
        o = run_identity("k-double", RunConfig(quad_level=2))
        assert o.status == "error"

    def test_deterministic(self):
        a = run_identity("k2")
        b = run_identity("k2")
        assert (a.lhs_value, a.work) == (b.lhs_value, b.work)


class TestRunAll:
    def test_default_passes(self, default_report):
        s = default_report.summary
        assert s == {"total": 24, "passed": 24, "failed": 0, "errored": 0}

    def test_impossible_tolerance_fails(self):
        rep = run_all(RunConfig(rel_tol=1e-30, abs_tol=1e-300))
        assert rep.summary["failed"] >= 1
        assert rep.summary["total"] == rep.summary["passed"] + rep.summary["failed"] + rep.summary["errored"]

    def test_parallel_matches_serial(self, default_report):
        par = run_all(jobs=3)
        assert render_report(par, "json") == render_report(default_report, "json")

    def test_selected(self):
        rep = run_selected(["k1", "i1"])
        assert [o.id for o in rep.outcomes] == ["i1", "k1"]


class TestRender:
    def test_json_schema(self, default_report):
        doc = json.loads(render_report(default_report, "json"))
        assert doc["version"] == 1
        assert set(doc["config"]) == {"rel_tol", "abs_tol", "max_terms", "quad_level"}
        assert set(doc["summary"]) == {"total", "passed", "failed", "errored"}
        for r in doc["results"]:
            assert list(r) == ["id", "lhs", "rhs", "abs_error", "rel_error", "status", "work", "seconds"]
            assert r["status"] in ("pass", "fail", "error")
            assert r["seconds"] is None
        assert [r["id"] for r in doc["results"]] == sorted(r["id"] for r in doc["results"])

    def test_json_validates_with_jsonschema(self, default_report):
        jsonschema = pytest.importorskip("jsonschema")
        num_or_null = {"type": ["number", "null"]}
        schema = {
            "type": "object",
            "required": ["version", "config", "results", "summary"],
            "properties": {
                "version": {"const": 1},
                "results": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["id", "lhs", "rhs", "abs_error", "rel_error", "status", "work", "seconds"],
                        "properties": {
                            "id": {"type": "string"},
                            "lhs": num_or_null,
                            "rhs": {"type": "number"},
                            "abs_error": num_or_null,
                            "rel_error": num_or_null,
                            "status": {"enum": ["pass", "fail", "error"]},
                            "work": {"type": "integer", "minimum": 0},
                            "seconds": num_or_null,
                        },
                    },
                },
            },
        }
        jsonschema.validate(json.loads(render_report(default_report, "json")), schema)

    def test_timings_opt_in(self):
        rep = run_selected(["i1"], timings=True)
        doc = json.loads(render_report(rep, "json"))
        assert doc["results"][0]["seconds"] >= 0

    def test_text_table(self, default_report):
        text = render_report(default_report, "text").decode()
        line = next(ln for ln in text.splitlines() if ln.startswith("c4-series"))
        assert line.rstrip().endswith("PASS")
        rel = line.split()[3]
        mantissa = rel.split("e")[0]
        assert len(mantissa.replace(".", "").lstrip("-")) == 3

    def test_text_shows_errors(self):
        rep = run_selected(["c4-series"], RunConfig(max_terms=2))
        text = render_report(rep, "text").decode()
        assert "ERROR" in text and "errors:" in text

    def test_bad_format(self, default_report):
        with pytest.raises(ValueError):
            render_report(default_report, "xml")
