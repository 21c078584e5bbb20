from fractions import Fraction

import pytest

import exactldu as ldu


GOLDEN = [
    [0, 2, 3, 0],
    [0, 0, 0, -3],
    [5, 3, 2, 1],
    [0, -1, 0, 0],
]


def test_factorize_and_verify_golden():
    f = ldu.factorize(GOLDEN)
    assert f["alpha"] == 1
    assert f["alpha_r"] == -45
    assert [p["det"] for p in f["pivots"]] == [2, 10, -30, -45]
    assert f["L"]["entries"][3] == [-1, 0, 0, -45]
    assert f["U"]["entries"][0] == [10, 0, -5, 2]
    checks = ldu.verify(GOLDEN, f, deep=True)
    assert checks, "verification report is empty"
    failed = [name for name, ok, _ in checks if not ok]
    assert failed == []


def test_fraction_weights_round_trip():
    f = ldu.factorize([[1, 2], [3, 4]])
    weights = {(p["row"], p["col"]): p["w"] for p in f["D"]["pivots"]}
    assert weights == {(1, 1): Fraction(1), (2, 2): Fraction(-1, 2)}
    assert ldu.verify([[1, 2], [3, 4]], f) == [
        (name, True, "") for name, _, _ in ldu.verify([[1, 2], [3, 4]], f)
    ]


def test_rank_det_inv_solve():
    a = [[1, 2], [3, 4]]
    assert ldu.rank(a) == 2
    assert ldu.det(a) == -2
    assert ldu.inv(a) == [
        [Fraction(-2), Fraction(1)],
        [Fraction(3, 2), Fraction(-1, 2)],
    ]
    assert ldu.solve(a, [1, 1]) == [Fraction(-1), Fraction(1)]


def test_rectangular_rank():
    assert ldu.rank([[1, 2, 3], [2, 4, 6]]) == 1


def test_gen_is_deterministic():
    a1 = ldu.gen(6, rank=3, seed=7)
    a2 = ldu.gen(6, rank=3, seed=7)
    assert a1 == a2
    assert ldu.rank(a1) == 3
    assert ldu.gen(6, rank=3, seed=8) != a1


def test_string_entries_accepted():
    assert ldu.det([["10", "-3"], ["7", "2"]]) == 41


def test_parse_error():
    with pytest.raises(ldu.ParseError):
        ldu.rank([["not-a-number"]])
    with pytest.raises(ValueError):
        ldu.det([["1/2"]])


def test_singular_matrix_error():
    with pytest.raises(ldu.SingularMatrixError):
        ldu.inv([[1, 2], [2, 4]])
    with pytest.raises(ArithmeticError):
        ldu.solve([[0]], [1])
