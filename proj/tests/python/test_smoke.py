import os

import pytest

import ellsurf


def test_classify_constant_j_row():
    out = ellsurf.classify("0", "t^5*(t-1)^2")
    assert out["deg_L"] == 2
    assert out["places"] == [("t", "II*", 1), ("t - 1", "IV", 1), ("inf", "II*", 1)]


def test_classify_text_and_errors():
    assert "no singular fibers" in ellsurf.classify_text("A = 1\nB = 0\n")
    with pytest.raises(ellsurf.ParseError):
        ellsurf.classify("t^2 +* 1", "0")
    with pytest.raises(ellsurf.DomainError):
        ellsurf.classify("0", "0")
    with pytest.raises(ValueError):
        ellsurf.classify("0", "0")


def test_fiber_types():
    assert ellsurf.euler_number("I0*") == 6
    assert ellsurf.twist_type("IV") == "II*"
    assert ellsurf.base_change_type("III", 2) == "I0*"
    assert ellsurf.classify_local(None, 5, 10) == "II*"


def test_configuration_calculus():
    c = ellsurf.Configuration(0, [("P", "I1"), ("Q", "I1"), ("R", "I1"), ("S", "I9")])
    r = ellsurf.report(c)
    assert (r["deg_L"], r["h11"], r["rho_tr"], r["delta"]) == (1, 10, 10, 0)
    assert ellsurf.is_extremal(c, False) == "extremal"

    d = ellsurf.Configuration.parse("genus = 1\nP : I6\nQ : I0*\n")
    twisted, change = ellsurf.twist(d, ["P", "Q"])
    assert twisted.fibers == [("P", "I6*")]
    assert change == -1
    assert ellsurf.star_minimal_twist(twisted).deg_L == 1

    four = {"P": [2], "Q": [2], "R": [2], "S": [2]}
    b = ellsurf.base_change(ellsurf.Configuration.parse("genus = 0\nP : III\nQ : III\nR : III\nS : I3\n"), 2, four)
    assert b.genus == 1
    assert sorted(t for _, t in b.fibers) == ["I0*", "I0*", "I0*", "I6"]


def test_search_and_survey():
    w, n = ellsurf.search(12, "3,3,3,3", "2,2,2,2,2,2", "11,1")
    assert w is not None and n == 23
    assert ellsurf.verify_witness(12, "3,3,3,3", "2,2,2,2,2,2", "11,1", w.sigma0, w.sigma1)
    none, n = ellsurf.search(12, "3,3,3,3", "2,2,2,2,2,2", "7,5")
    assert none is None and n == 10395

    table = ellsurf.survey(12)
    assert len(table) == 76
    assert sum(table.values()) == 11
    assert not table["7,5"]
    assert table == ellsurf.survey(12, workers=4)


def test_survey_matches_snapshot():
    data = os.environ.get("ELLSURF_TEST_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "data"))
    with open(os.path.join(data, "survey_degree12.txt")) as f:
        lines = f.read().splitlines()[1:-2]
    pinned = {line.split()[0]: line.split()[2] == "realizable" for line in lines}
    assert pinned == ellsurf.survey(12)


def test_misc_verdicts():
    assert ellsurf.torelli_verdict(2, True, True) == "FAILS infinitesimal Torelli"
    assert ellsurf.family_bound_s_max(2, 1) == 2
