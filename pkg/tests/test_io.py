import json

import pytest

from wrep.io import FixtureError, dump_fixture, dump_rep_bundle, emit, fixture_path, load_fixture, load_rep_bundle
from wrep.reps import make_catalog_rep
from wrep.report import RepReport
from wrep.ring import LaurentPoly, MatrixLP

TQ = ("t", "q")
FIXTURES = ["lm12_sigma1.json", "lm12_sigma2.json", "lm9_sigma1.json", "lm9_sigma2.json"]


def test_lm12_entry():
    (m,) = load_fixture(fixture_path("lm12_sigma1.json"))
    assert m.shape == (12, 12)
    assert m.entries[0][4] == LaurentPoly.parse("q*t", TQ)


def test_lm9_entry():
    (m,) = load_fixture(fixture_path("lm9_sigma1.json"))
    assert m.shape == (9, 9)
    assert m.entries[0][3] == LaurentPoly.parse("q*(1-t)", TQ)


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_round_trip_is_byte_exact(name):
    path = fixture_path(name)
    mats, prov = load_fixture(path, with_provenance=True)
    assert dump_fixture(mats, prov) == path.read_text(encoding="utf-8")


@pytest.mark.parametrize("text", ["", "{", "[]", '{"provenance": "x", "matrices": []}',
                                  '{"provenance": "x", "matrices": [{"rows": 1, "cols": 1, "entries": "no"}]}'])
def test_bad_fixture(tmp_path, text):
    p = tmp_path / "bad.json"
    p.write_text(text)
    with pytest.raises(FixtureError):
        load_fixture(p)


def test_missing_fixture(tmp_path):
    with pytest.raises(FixtureError):
        load_fixture(tmp_path / "nope.json")


def test_emit_identity_json():
    out = json.loads(emit(MatrixLP.identity(2, ("t",))))
    assert out["rows"] == out["cols"] == 2
    assert out["entries"][0][0]["terms"] == [{"c": "1", "e": [0]}]
    assert out["entries"][0][1]["terms"] == []


def test_emit_latex_block():
    m = make_catalog_rep("burau", 2).sigma[0]
    assert emit(m, "latex").strip() == "\\begin{pmatrix}0 & t\\\\1 & 1-t\\end{pmatrix}"


def test_emit_rep_latex_lists_generators():
    text = emit(make_catalog_rep("burau", 3), "latex")
    assert text.count("\\mapsto") == 4
    assert text.startswith("\\sigma_{1} \\mapsto")


def test_emit_is_deterministic():
    rho = make_catalog_rep("dual_burau", 3, vars=TQ)
    r = RepReport(check="x", verdicts={"b": 1, "a": [2]})
    for obj in (rho, r, rho.sigma[0]):
        for fmt in ("json", "latex", "text"):
            assert emit(obj, fmt) == emit(obj, fmt)
    assert list(json.loads(emit(r))) == sorted(json.loads(emit(r)))


def test_emit_rejects_unknown():
    with pytest.raises(ValueError):
        emit(MatrixLP.identity(2, ("t",)), "yaml")
    with pytest.raises(TypeError):
        emit(object())


def test_bundle_round_trip(tmp_path):
    rho = make_catalog_rep("tym", 3, vars=TQ)
    p = tmp_path / "tym.json"
    p.write_text(dump_rep_bundle(rho))
    assert load_rep_bundle(p).same_matrices(rho)


def test_bundle_shape_checked(tmp_path):
    obj = make_catalog_rep("burau", 3).to_json()
    obj["sigma"] = obj["sigma"][:1]
    p = tmp_path / "short.json"
    p.write_text(json.dumps(obj))
    with pytest.raises(FixtureError):
        load_rep_bundle(p)
