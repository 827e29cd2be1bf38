import math

from cubeslice.report import CheckRecord, VerificationReport, close, lower, upper


def test_upper_and_lower_margins():
    r = upper("x <= 1", 0.5, 1.0)
    assert r.margin == 0.5 and r.passed
    r = lower("x >= 1", 0.5, 1.0)
    assert r.margin == -0.5 and not r.passed
    assert lower("x >= 1", 1.0 - 1e-9, 1.0, 1e-8).passed


def test_close_and_nan():
    assert close("x == 1", 1.0 + 1e-10, 1.0, 1e-9).passed
    assert not close("x == 1", 1.1, 1.0, 1e-9).passed
    assert not CheckRecord("nan", {}, math.nan, 0.0, "<=", math.nan, 1.0).passed


def test_report_aggregation():
    rep = VerificationReport("demo")
    rep.add(upper("a", 1.0, 2.0, n=3))
    rep.add(upper("b", 3.0, 2.0, n=4))
    assert not rep.passed
    assert [r.name for r in rep.failures] == ["b"]
    assert rep.worst.name == "b"
    assert "FAIL" in rep.summary() and "2 checks" in rep.summary()
    sub = VerificationReport("sub", info={"y0": 0.2})
    rep.extend(sub)
    assert rep.info == {"sub.y0": 0.2}


def test_as_dict_round_trip():
    d = upper("a", 1.0, 2.0, n=3).as_dict()
    assert d["inputs"] == {"n": 3} and d["passed"] is True
