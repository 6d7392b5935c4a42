import random
from fractions import Fraction

import pytest

from zerohecke.algebra import gen_pi, one, scale, w_plus
from zerohecke.analysis import (
    coefficient_scan,
    descent_class,
    lambda_character_table,
    matrix_rank,
    norton_ideal_dimension,
    radical_dimension,
    rank_of_idempotent,
    trace_left,
    trace_right,
    verify_orthogonal_decomposition,
)
from zerohecke.diagrams import all_diagrams, idempotent, plus_set
from zerohecke.permutations import left_descents
from zerohecke.tables import monoid_tables


def test_descent_class_examples():
    assert descent_class(set(), 4) == [(1, 2, 3, 4)]
    assert descent_class({1, 2, 3}, 4) == [(4, 3, 2, 1)]
    assert sorted(descent_class({1}, 3)) == [(2, 1, 3), (2, 3, 1)]


@pytest.mark.parametrize("n", range(2, 6))
def test_descent_classes_partition_the_group(n):
    by_class = {}
    for mask in range(2 ** (n - 1)):
        J = {i + 1 for i in range(n - 1) if mask >> i & 1}
        members = descent_class(J, n)
        for perm in members:
            assert left_descents(perm) == J
        by_class[frozenset(J)] = len(members)
    assert sum(by_class.values()) == monoid_tables(n).size


def test_rank_examples():
    assert rank_of_idempotent(one(3)) == 6
    assert rank_of_idempotent(idempotent("+-")) == 2
    assert rank_of_idempotent(idempotent("++")) == 1
    with pytest.raises(ValueError):
        rank_of_idempotent(scale(2, one(3)))


@pytest.mark.parametrize("n", range(2, 6))
def test_left_and_right_traces_coincide(n):
    for diagram in all_diagrams(n):
        e = idempotent(diagram)
        assert trace_left(e) == trace_right(e)
    x = gen_pi(1, n) + scale(3, w_plus(set(range(1, n)), n))
    assert trace_left(x) == trace_right(x)


def _rank_over_rationals(rows):
    """Independent oracle: plain Gaussian elimination over Fractions."""
    m = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    for col in range(len(m[0]) if m else 0):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, len(m)):
            factor = m[r][col] / pivot
            m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def test_matrix_rank_basics():
    assert matrix_rank([]) == 0
    assert matrix_rank([[0, 0], [0, 0]]) == 0
    assert matrix_rank([[1, 0], [0, 1]]) == 2
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[1, 2, 3], [4, 5, 6]]) == 2
    assert matrix_rank([[2, 0], [0, 0], [1, 1]]) == 2


def test_matrix_rank_against_rational_oracle():
    rng = random.Random(11)
    for _ in range(40):
        rows = rng.randrange(1, 7)
        cols = rng.randrange(1, 7)
        m = [[rng.randrange(-4, 5) for _ in range(cols)] for _ in range(rows)]
        assert matrix_rank(m) == _rank_over_rationals(m)


def test_norton_ideal_dimensions_n3():
    assert norton_ideal_dimension(set(), 3) == 1
    assert norton_ideal_dimension({1, 2}, 3) == 1
    assert norton_ideal_dimension({1}, 3) == 2
    assert norton_ideal_dimension({2}, 3) == 2


@pytest.mark.parametrize("n", range(2, 5))
def test_norton_ideal_dimensions_sum_to_group_size(n):
    total = 0
    for mask in range(2 ** (n - 1)):
        J = {i + 1 for i in range(n - 1) if mask >> i & 1}
        dim = norton_ideal_dimension(J, n)
        assert dim == len(descent_class(J, n))
        total += dim
    assert total == monoid_tables(n).size


def test_radical_dimension_examples():
    assert radical_dimension(2) == 0
    assert radical_dimension(3) == 2
    assert radical_dimension(4) == 16


@pytest.mark.parametrize("n", range(2, 5))
def test_lambda_character_table_is_the_flip_pairing(n):
    table = lambda_character_table(n)
    size = 2 ** (n - 1)
    # single 1 per row and column, sitting at the sign-flipped position
    assert table == [
        [1 if j == size - 1 - i else 0 for j in range(size)] for i in range(size)
    ]


@pytest.mark.parametrize("orientation", ["standard", "opposite"])
def test_verification_report(orientation):
    report = verify_orthogonal_decomposition(4, orientation)
    assert report.passed
    assert report.sum_to_identity and report.pairwise_orthogonal
    assert len(report.records) == 8
    assert report.pairs_checked == report.pairs_total == 8 * 7
    assert sum(r.rank for r in report.records) == 24
    data = report.to_dict()
    assert data["passed"] and len(data["records"]) == 8
    rows = report.csv_rows()
    assert rows[0][0] == "++++"[:3]
    assert all(len(row) == 6 for row in rows)


def test_verification_parallel_matches_sequential():
    seq = verify_orthogonal_decomposition(4, jobs=1)
    par = verify_orthogonal_decomposition(4, jobs=2)
    assert seq.passed and par.passed
    assert [r.to_dict() for r in seq.records] == [r.to_dict() for r in par.records]
    assert seq.pairs_checked == par.pairs_checked


def test_verification_fail_fast_on_corrupted_family(monkeypatch):
    import zerohecke.analysis as module

    real = idempotent

    def corrupted(diagram, orientation="standard"):
        if diagram == "++":
            return real("--", orientation)
        return real(diagram, orientation)

    monkeypatch.setattr(module, "idempotent", corrupted)
    report = module.verify_orthogonal_decomposition(3, fail_fast=True)
    assert not report.passed
    assert not report.pairwise_orthogonal or not report.sum_to_identity
    assert report.failures
    assert report.pairs_checked < report.pairs_total


@pytest.mark.parametrize("n", range(2, 6))
def test_rank_matches_descent_class_of_plus_nodes(n):
    for diagram in all_diagrams(n):
        rank = rank_of_idempotent(idempotent(diagram))
        assert rank == len(descent_class(plus_set(diagram), n))


def test_coefficient_scan_reports_ranges():
    scan = coefficient_scan(5)
    assert scan.all_unit and not scan.violations
    assert set(scan.ranges) == set(all_diagrams(5))
    assert scan.to_dict()["all_unit"] is True


def test_trace_is_linear_in_the_element():
    x = idempotent("+-")
    y = idempotent("-+")
    assert trace_right(x + y) == trace_right(x) + trace_right(y)
    assert trace_left(scale(5, x)) == 5 * trace_left(x)
