from math import comb

import pytest

from helpers import generated
from permutomino import counting, geometry as g


def catalan_by_recurrence(n):
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def central_binomial_by_pascal(n):
    row = [1]
    for _ in range(2 * n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[n]


def test_catalan():
    assert counting.catalan(0) == 1
    assert counting.catalan(3) == 5
    assert counting.catalan(5) == 42
    assert all(counting.catalan(n) == catalan_by_recurrence(n) for n in range(40))


def test_central_binomial():
    assert counting.central_binomial(0) == 1
    assert counting.central_binomial(3) == 20
    assert counting.central_binomial(5) == 252
    assert all(counting.central_binomial(n) == central_binomial_by_pascal(n) for n in range(40))


def test_convex_count_listed_terms():
    assert [counting.convex_count(n) for n in range(1, 8)] == [1, 4, 18, 84, 394, 1836, 8468]
    assert counting.convex_count(10) == 780156


def test_convex_count_integer_form():
    # 16 * count = 2(n+3)4^n - 8n C(2n, n), all in integers
    for n in range(1, 201):
        assert 16 * counting.convex_count(n) == 2 * (n + 3) * 4 ** n - 8 * n * comb(2 * n, n)
    with pytest.raises(ValueError):
        counting.convex_count(0)


def test_subclass_formulas():
    assert counting.parallelogram_count(2) == 2
    assert counting.directed_count(4) == 35
    assert counting.stack_count(1) == 1
    for n in range(1, 201):
        r = counting.formula_report(n)
        assert 0 <= r.parallelogram <= r.directed <= r.convex
        assert r.stack <= r.directed


@pytest.mark.parametrize("n", range(1, 6))
def test_distinct_first_permutations(n):
    first = {name: set() for name in ("parallelogram", "directed", "stack")}
    for p in generated(n):
        pi1 = g.permutations(p).pi1
        for name in g.class_of(p):
            first[name].add(pi1)
    assert len(first["parallelogram"]) == counting.parallelogram_perm_count(n)
    assert len(first["directed"]) == counting.directed_perm_count(n)
    assert len(first["stack"]) == counting.stack_perm_count(n)


def test_verify_counts():
    flags = counting.verify_counts(5, counting.tally(generated(5), 5, "generated"))
    assert flags == dict.fromkeys(counting.CLASSES, True)
    assert counting.tally(generated(5), 5, "generated").convex == 394
    assert all(counting.verify_counts(2, counting.tally(generated(2), 2, "oracle")).values())
    bad = counting.CountReport(3, 18, 5, 11, 4, "generated")
    assert counting.verify_counts(3, bad) == {
        "convex": True, "parallelogram": True, "directed": False, "stack": True}


def test_report_serialization():
    r = counting.formula_report(4)
    assert r.to_json() == {"n": 4, "convex": 84, "parallelogram": 14, "directed": 35,
                           "stack": 8, "source": "formula"}
    assert len(r.table_rows()) == 4
    with pytest.raises(ValueError):
        counting.CountReport(1, -1, 0, 0, 0, "formula")
