"""End-to-end checks of the Python bindings."""

import pytest

import tuttecover as tc


def test_uniform_tutte():
    m = tc.Matroid.uniform(2, 3)
    assert m.rank == 2
    assert m.size == 3
    p = tc.tutte_direct(m)
    assert str(p) == "x^2 + x + y"
    assert p.terms() == {(2, 0): 1, (1, 0): 1, (0, 1): 1}
    assert p.evaluate(1, 1) == 3
    assert p.evaluate(2, 2) == 8


def test_engines_agree():
    m = tc.graphic_matroid([("e0", "a", "b"), ("e1", "b", "c"), ("e2", "c", "a"),
                            ("e3", "a", "b")])
    direct = tc.tutte_direct(m)
    assert tc.tutte_dc(m) == direct
    assert tc.tutte_dc(m, strategy="max-index") == direct
    assert tc.tutte_dc(m, strategy="random", seed=11, memo=False) == direct


def test_from_bases_and_minors():
    m = tc.Matroid.from_bases(["a", "b", "c"], [["a", "b"], ["a", "c"], ["b", "c"]])
    assert m.bases() == [["a", "b"], ["a", "c"], ["b", "c"]]
    d = m.deletion(["a"])
    assert d.labels == ["b", "c"]
    assert d.rank == 2
    c = m.contraction(["a"])
    assert c.rank == 1
    assert m.classify("a") == "non-degenerate"


def test_big_counts():
    # spanning trees of K6: 6^4 = 1296; tutte evaluations stay exact ints
    k6 = tc.graphic_matroid([(f"e{i}_{j}", f"v{i}", f"v{j}")
                             for i in range(6) for j in range(i + 1, 6)])
    p = tc.tutte_dc(k6)
    assert p.evaluate(1, 1) == 1296
    assert p.evaluate(2, 2) == 2 ** 15


def test_k0_roundtrip():
    m = tc.Matroid.uniform(2, 3)
    cls = tc.k0_class(m)
    assert cls == {(0, 1): 1, (0, 2): 1, (1, 0): 1}
    assert tc.tutte_from_class(cls) == tc.tutte_direct(m)
    assert tc.leaf_classes(m, strategy="max-index") == cls


def test_duality():
    m = tc.Matroid.uniform(2, 5)
    d = m.dual()
    assert d.rank == 3
    assert d.dual() == m
    assert tc.duality_involution(tc.k0_class(m)) == tc.k0_class(d)


def test_convolution_matches_direct_sum():
    a = tc.Matroid.uniform(1, 2)
    b = tc.Matroid.uniform(2, 3)
    s = tc.direct_sum(a, b)
    assert tc.k0_class(s) == tc.k0_convolve(tc.k0_class(a), tc.k0_class(b))


def test_isomorphism():
    tri = tc.graphic_matroid([("t0", "a", "b"), ("t1", "b", "c"), ("t2", "c", "a")])
    mapping = tc.are_isomorphic(tri, tc.Matroid.uniform(2, 3))
    assert mapping is not None
    assert sorted(mapping.keys()) == ["t0", "t1", "t2"]
    assert tc.are_isomorphic(tri, tc.Matroid.uniform(1, 3)) is None
    assert tc.automorphism_count(tc.Matroid.uniform(2, 4)) == 24


def test_indecomposable_class():
    m = tc.Matroid.from_bases(["l", "c0", "c1"], [["c0", "c1"]])
    assert m.is_indecomposable()
    assert m.indecomposable_class() == (1, 2)


def test_json_roundtrip():
    m = tc.Matroid.uniform(2, 4)
    assert tc.matroid_from_json(tc.matroid_to_json(m)) == m


def test_errors():
    with pytest.raises(ValueError):
        tc.matroid_from_json("not json")
    with pytest.raises(OverflowError):
        tc.automorphism_count(tc.Matroid.uniform(1, 9))
    with pytest.raises(ValueError):
        tc.Matroid.from_bases(["a", "b", "c", "d"], [["a", "b"], ["c", "d"]])
    with pytest.raises(OverflowError):
        tc.tutte_direct(tc.Matroid.uniform(1, 25))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
