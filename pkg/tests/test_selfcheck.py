from app.errors import IncompleteData
from app.selfcheck import CHECKS, SelfCheckRunner, run_selfcheck


def test_all_checks_pass():
    """Testar att alla inbyggda invarianter håller."""
    report = run_selfcheck()
    failed = [r.name for r in report.results if not r.passed]
    assert failed == []
    assert report.ok
    assert report.passed == len(CHECKS)


def test_module_filter():
    """Testar att --module bara kör den modulens kontroller."""
    report = run_selfcheck("rootdata")
    assert report.results
    assert {r.module for r in report.results} == {"rootdata"}
    assert run_selfcheck("nonexistent").results == []


def test_failing_check_is_reported():
    """Testar att en fallerande kontroll och ett LLC-fel räknas som misslyckade."""

    def broken():
        raise IncompleteData("no dimension")

    runner = SelfCheckRunner({"demo.false": ("demo", lambda: False), "demo.raises": ("demo", broken)})
    report = runner.run()
    assert report.failed == 2 and not report.ok
    errors = {r.name: r.error for r in report.results}
    assert errors["demo.false"] is None
    assert errors["demo.raises"] == "incomplete_data: no dimension"
    assert report.model_dump(by_alias=True)["schema"] == "v1"
