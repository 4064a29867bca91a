import json

import pytest

import hallskew


def test_group_orders():
    assert hallskew.group("psl:3,2").order() == 168
    assert hallskew.group("m23").order() == 10200960
    assert hallskew.count_involutions(hallskew.group("m11")) == 165


def test_factorization_and_skew():
    g = hallskew.group("sym:4")
    h = hallskew.group("d8")
    k = hallskew.Permutation("(1,2,3)", 4)
    f = hallskew.certify_factorization(g, h, k)
    assert f.is_hall and f.k_core_free and f.k_order == 3
    s = hallskew.skew_morphism(f)
    assert s.order == 3 and not s.trivial()
    assert hallskew.verify_axioms(s)
    assert len(set(s.pi)) > 1


def test_table1_row():
    f = hallskew.table1_factorization("psl:3,2")
    assert f.is_hall and f.k_order == 7


def test_maps():
    m = hallskew.rotary_map("alt:5")
    assert (m["V"], m["E"], m["F"], m["chi"], m["genus"]) == (12, 30, 20, 2, 0)
    b = hallskew.rotary_map("alt:5", birotary=True)
    assert (b["F"], b["chi"]) == (6, -12)


def test_numth():
    assert hallskew.e_value("psl:3,2") == 7
    assert hallskew.prime_family(2, 3) == [5, 7]
    assert hallskew.gcd_identity(3, 2)
    with pytest.raises(ValueError):
        hallskew.gcd_identity(3, 4)


def test_cli_and_suites():
    code, out, err = hallskew.run_cli(["map", "rota", "--group", "alt:5"])
    assert code == 0 and err == ""
    assert json.loads(out)["genus"] == 0
    code, _, err = hallskew.run_cli(["group", "--bogus"])
    assert code == 2 and "Usage" in err
    ok, items = hallskew.run_suite("lemma21")
    assert ok and len(items) == 2


def test_errors():
    with pytest.raises(ValueError):
        hallskew.group("nonsense")
    with pytest.raises(hallskew.NotAFactorization):
        hallskew.certify_factorization(hallskew.group("sym:4"), hallskew.group("alt:4"),
                                       hallskew.Permutation("(1,2)(3,4)", 4))
