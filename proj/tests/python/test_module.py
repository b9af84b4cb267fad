import pytest

lambdag = pytest.importorskip("lambdag")


def test_root_system():
    rs = lambdag.root_system("E", 8)
    assert rs["num_positive"] == 120
    assert rs["dim_g"] == 248


def test_bad_type_raises_value_error():
    with pytest.raises(ValueError):
        lambdag.root_system("B", 1)
    with pytest.raises(lambdag.ConfigError):
        lambdag.verify_theorem("A", 2, [1], 7)


def test_theorem_case():
    r = lambdag.verify_theorem("B", 2, [2], 3)
    assert r["outcome"] == "pass"
    assert r["params"]["X"] == [2]
    assert r["dims"]["closure"] == r["dims"]["ambient"] == 120


def test_orthogonality_case():
    assert lambdag.verify_orthogonality("A", 2, [1], 2, "n5")["outcome"] == "pass"


def test_invariants_records():
    recs = lambdag.verify_invariants("B", 2, 2, 2)
    assert [r["statement"] for r in recs] == ["cau1", "lau1", "cau2", "pau2"]
    assert all(r["outcome"] == "pass" for r in recs)


def test_appendix_tables():
    recs = lambdag.verify_appendix("EFG", 12)
    assert [r["statement"] for r in recs] == ["rs4-tables"] * 5
