import pytest

import sp3gk


def test_enumerate_matches_weyl_dimension():
    for lam in [(2, 0, 0), (2, 1, 0), (3, 1, -2), (0, 0, 0)]:
        assert len(sp3gk.enumerate(lam)) == sp3gk.weyl_dim(lam)
    assert sp3gk.weyl_dim((2, 0, 0)) == 6


def test_sigma_subset():
    pats = sp3gk.sigma_enumerate((2, 0, 0), (0, 0, 0))
    assert [p[5] for p in pats] == [2, 0, 0]


def test_rmatrix_column():
    assert sp3gk.rmatrix((0, 0, 0), (0, 0, 0), 1, 1, 1) == [
        ["12*nu1 + 36"],
        ["12*nu2 + 24"],
        ["12*nu3 + 12"],
    ]


def test_chi_and_oracle():
    assert sp3gk.chi((1, 0, 0), "l+1ll", "tilde") == "nu1^2 - l^2"
    for op in ["C2", "C4", "C6", "tilde"]:
        assert sp3gk.chi_at((0, 1, 1), "lll-1", op, 3) == sp3gk.chi_oracle((0, 1, 1), "lll-1", op, 3)


def test_parity_mismatch_raises():
    with pytest.raises(ValueError):
        sp3gk.chi_at((0, 0, 0), "lll", "C2", 1)
    with pytest.raises(ValueError):
        sp3gk.chi((1, 0, 0), "lll", "C2")


def test_systems():
    r = sp3gk.compare_system((0, 0, 0), 0, "lll")
    assert r["equal"] and r["scale"] == "1"
    printed = sp3gk.compare_system((1, 0, 0), 0, "l+1ll", as_printed=True)
    assert not printed["equal"] and "C4" in printed["diff"]
    ops = sp3gk.system_operators((1, 0, 0), 0, "l+1ll")
    assert set(ops) == {"D", "C2", "C4", "C6"}
    assert len(ops["C2"][0]) == 3


def test_normal_order_mod_nn():
    full = sp3gk.normal_order("C2")
    reduced = sp3gk.normal_order("C2", mod_nn=True)
    assert "E[e1+e2]" in full and "E[e1+e2]" not in reduced


def test_suites():
    assert "holonomic" in sp3gk.suite_names()
    for name in ["clebsch-constants", "chi-oracle", "dimension"]:
        r = sp3gk.run_suite(name)
        assert r["ok"], r["failures"]
        assert r["checked"] > 0
    with pytest.raises(ValueError):
        sp3gk.run_suite("nope")
