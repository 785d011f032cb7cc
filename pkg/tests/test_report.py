import json

import pytest

from quadcycles.algebra import existence_condition
from quadcycles.report import AnalysisReport, analyze, regime
from quadcycles.stability import c_tilde

CT = c_tilde().value


@pytest.mark.parametrize(
    "c, expected",
    [(0.0, "A"), (-1.7499, "A"), (-1.75, "B"), (-1.75 + 1e-13, "B"), (-1.76, "C"), (CT, "C"), (CT - 1e-9, "D"), (-2.0, "D")],
)
def test_regime(c, expected):
    assert regime(c) == expected


def test_regime_agrees_with_existence(rng):
    for c in rng.uniform(-4, 1, size=500):
        assert (regime(c) == "A") == (not existence_condition(c))


def test_analyze_examples():
    rep = analyze(-1.0)
    assert rep.regime == "A" and rep.cycles == []

    rep = analyze(-1.75)
    assert rep.regime == "B"
    (cyc,) = rep.cycles
    assert cyc.stability == "NonHyperbolicUnstable"
    assert cyc.diagnostics["kind"] == "second_derivative"
    assert cyc.cubic == [1.0, 0.5, -2.25, -0.125]

    rep = analyze(-2.0)
    assert rep.regime == "D"
    assert [c.stability for c in rep.cycles] == ["Unstable", "Unstable"]
    assert sorted(round(c.multiplier, 9) for c in rep.cycles) == [-8.0, 8.0]
    assert rep.fixed_points == [-1.0, 2.0]
    assert rep.logistic.r == [-2.0, 4.0]


def test_analyze_without_fixed_points():
    rep = analyze(1.0)
    assert rep.fixed_points is None and rep.logistic is None


@pytest.mark.parametrize("c", [-1.0, -1.75, -1.76, CT, -2.0, 0.3])
def test_json_round_trip(c):
    text = analyze(c).to_json()
    data = json.loads(text)
    assert data["schema"] == 1
    assert list(data)[0] == "schema"
    assert AnalysisReport.from_dict(data).to_json() == text


def test_from_dict_rejects_unknown_schema():
    data = json.loads(analyze(-2.0).to_json())
    data["schema"] = 2
    with pytest.raises(ValueError):
        AnalysisReport.from_dict(data)


def test_text_report_mentions_everything():
    text = analyze(-1.76).to_text()
    assert "regime C" in text
    assert "AsymptoticallyStable" in text and "Unstable" in text
    assert "stable 3-cycle window (upper)" in text
