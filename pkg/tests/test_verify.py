from woctree import verify


def test_full_scope_passes():
    results = verify.run_checks("all")
    assert [r.name for r in results] == [c.name for c in verify.checks()]
    assert all(r.ok for r in results), [r.line() for r in results if not r.ok]
    sims = {r.name: r.detail for r in results}
    assert sims["size2-sequences"] == "n<=9" and sims["fubini-bound"] == "n<=9"


def test_crash_becomes_failure(monkeypatch):
    def boom(n):
        raise RuntimeError("broken")
    monkeypatch.setattr(verify, "checks", lambda: [verify.Check("boom", boom)])
    [r] = verify.run_checks("quick")
    assert not r.ok and "RuntimeError" in r.detail and r.line().startswith("FAIL\tboom")
