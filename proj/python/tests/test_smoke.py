import hitchin_fibre as hf
import pytest


def test_smooth_fibre_dimension():
    r = hf.analyze(3, "p+q+r+s+t+u")
    assert r["branch"] == "Smooth"
    assert r["fibre_dim"] == 3 + 3 - 1
    assert list(r)[:2] == ["input", "branch"]


def test_node_report_matches_kernel_shape():
    r = hf.analyze(2, "4p")
    assert (r["prym_dim"], r["torus_rank"], r["affine_dim"]) == (1, 1, 1)
    assert r["connected"]


def test_reducible_report_embeds_strata():
    r = hf.analyze(2, "2p+2q", d=2, reducible=True)
    assert r["branch"] == "Reducible"
    assert r["graph"]["connected"]
    assert max(row["dim"] for row in r["strata"]) == r["fibre_dim"]
    assert "strata" not in hf.analyze(2, "2p+2q", d=2, reducible=True, emit_strata=False)


def test_validation_carries_path():
    with pytest.raises(hf.ValidationError) as info:
        hf.analyze(1, "4p")
    assert hf.error_path(info.value) == "/g"
    with pytest.raises(hf.ValidationError) as info:
        hf.analyze(2, "4p", d_L=3)
    assert hf.error_path(info.value) == "/D_s"
    with pytest.raises(ValueError):
        hf._core.analyze("{not json")


def test_strata_table():
    t = hf.strata(2, 2, "2p")
    assert len(t["strata"]) == 4
    assert t["summary"]["max_dim"] == 3
    assert hf.strata(2, 2, {"points": [{"label": "p", "mult": 2}]}) == t


def test_verify_example():
    assert hf.verify_example(4)["passed"]
    w = hf.verify_example(8, case2=True)
    assert w["passed"] and w["twist"] == 1
    basis = w["source"]["basis"]
    assert len(basis) == w["source"]["dim"]
    assert all("/" in x for row in basis for x in row)
    with pytest.raises(hf.ValidationError):
        hf.verify_example(6, case2=True)


def test_roundtrip_is_deterministic():
    a = hf.roundtrip(seed=11, trials=60)
    assert a["ok"] and a["failures"] == []
    assert a == hf.roundtrip(seed=11, trials=60)


def test_sweep_all_pass():
    s = hf.sweep()
    assert [c["id"] for c in s["criteria"]] == list(range(1, 10))
    assert s["all_passed"]


def test_divisor_text_form():
    assert hf.parse_divisor("3q + p") == {"points": [{"label": "p", "mult": 1}, {"label": "q", "mult": 3}]}
    with pytest.raises(hf.HitchinError):
        hf.parse_divisor("2p+")
