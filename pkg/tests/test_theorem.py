import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nullumbilics.liecartan import D1, D2, D3
from nullumbilics.surfaces import ROTATION_HOSTS
from nullumbilics.theorem import (BOUNDARY, OUTSIDE, classify_closed_form,
                                  cross_validate, matching_clauses,
                                  report_rows_to_csv)


@pytest.mark.parametrize("abc, kind", [
    ((3, 1, 0), D1),
    ((3, 2, 1), D2),
    ((1, 2, 5), D3),
    ((-3, -2, 1), OUTSIDE),   # 1 < a/b < 2 with b < 0 is not claimed
    ((2, 2, 1), BOUNDARY),    # a = b
    ((1, 0.001, 1), BOUNDARY),  # b near 0
])
def test_closed_form_cases(abc, kind):
    assert classify_closed_form(*abc).kind == kind


def test_closed_form_witness_fields():
    v = classify_closed_form(3, 2, 1)
    assert v.ratio == pytest.approx(1.5)
    assert v.corner == pytest.approx((1 / 4) ** 2 + 2)
    assert v.signs == (1, 1, 1)


def test_closed_form_rejects_bad_margin():
    with pytest.raises(ValueError):
        classify_closed_form(1, 1, 1, margin=0.0)


@given(a=st.floats(-5, 5), b=st.floats(-5, 5), c=st.floats(-5, 5))
@settings(max_examples=300, deadline=None)
def test_clause_disjointness(a, b, c):
    assert len(matching_clauses(a, b, c)) <= 1


@given(s=st.floats(min_value=1e-3, max_value=1e3),
       a=st.floats(-5, 5), b=st.floats(-5, 5), c=st.floats(-5, 5))
@settings(max_examples=300, deadline=None)
def test_scale_invariance(s, a, b, c):
    assert classify_closed_form(a, b, c).kind == \
        classify_closed_form(s * a, s * b, s * c).kind


def test_margin_widening_only_removes_samples():
    narrow = cross_validate("light-cone", 300, margin=0.05, seed=3)
    wide = cross_validate("light-cone", 300, margin=0.2, seed=3)
    assert wide.admitted < narrow.admitted
    assert narrow.all_agree and wide.all_agree


def test_cross_validation_smoke_all_hosts():
    for host in ROTATION_HOSTS:
        report = cross_validate(host, 500, margin=0.05, seed=42)
        assert report.admitted > 0
        assert report.all_agree, report.disagreements[:3]
        assert report.agreements == report.admitted


def test_cross_host_verdicts_coincide():
    reports = [cross_validate(host, 400, margin=0.05, seed=5, keep_rows=True)
               for host in ROTATION_HOSTS]
    rows0 = [(r.closed_form, r.numeric) for r in reports[0].rows]
    for rep in reports[1:]:
        assert [(r.closed_form, r.numeric) for r in rep.rows] == rows0


def test_injected_convention_bug_is_caught(monkeypatch):
    # halving b2 in the measured jet must surface as disagreements
    from nullumbilics import liecartan

    original = liecartan.bde_one_jet_numeric

    def corrupted(surface, h=1e-3):
        jet = original(surface, h)
        return liecartan.BdeOneJet(jet.a1, jet.a2, jet.b1, 0.5 * jet.b2)

    monkeypatch.setattr(liecartan, "bde_one_jet_numeric", corrupted)
    report = cross_validate("light-cone", 400, margin=0.05, seed=42)
    assert not report.all_agree
    assert len(report.disagreements) > 0


def test_report_csv_round(tmp_path):
    report = cross_validate("cylinder", 200, margin=0.05, seed=9, keep_rows=True)
    path = tmp_path / "rows.csv"
    report_rows_to_csv(report.rows, str(path))
    text = path.read_text()
    assert text.splitlines()[0] == "a,b,c,closed_form,numeric,roots,betas"
    assert len(text.splitlines()) == len(report.rows) + 1


def test_invalid_host_and_samples():
    with pytest.raises(ValueError):
        cross_validate("generic", 10)
    with pytest.raises(ValueError):
        cross_validate("light-cone", 0)
