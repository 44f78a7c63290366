import pytest

from permutomino import eco, geometry as g, oracle
from permutomino.eco import ALPHA, DELTA, EcoOp, OpNotApplicable, beta, gamma

UNIT = g.unit_cell()
L_UP = g.from_columns(2, [(1, 1), (1, 2)])
L_LOW_RIGHT = g.from_columns(2, [(1, 2), (1, 1)])


@pytest.fixture(scope="module")
def oracle_sets():
    return {n: oracle.brute_force_enumerate(n) for n in range(1, 7)}


def test_conditions():
    assert eco.satisfies_u1(UNIT) and eco.satisfies_u2(UNIT)
    assert not eco.satisfies_u1(L_LOW_RIGHT)
    assert eco.satisfies_u1(L_UP)
    assert not eco.satisfies_u2(g.from_columns(2, [(1, 2), (2, 2)]))
    assert eco.satisfies_u2(L_UP)


def test_applicable_ops():
    assert eco.applicable_ops(UNIT) == [ALPHA, beta(1), gamma(1), DELTA]
    assert len(eco.applicable_ops(L_UP)) == 6
    assert eco.applicable_ops(L_LOW_RIGHT) == [beta(1), gamma(1), DELTA]


def test_apply_op_on_unit_cell():
    got = {op: eco.apply_op(UNIT, op).cols for op in eco.applicable_ops(UNIT)}
    assert got == {
        ALPHA: ((1, 1), (1, 2)),
        beta(1): ((1, 2), (1, 1)),
        gamma(1): ((1, 2), (2, 2)),
        DELTA: ((2, 2), (1, 2)),
    }


def test_apply_beta_on_l_tromino():
    assert eco.apply_op(L_UP, beta(1)).cols == ((1, 2), (1, 3), (1, 1))


@pytest.mark.parametrize("op", [ALPHA, beta(2), gamma(0), gamma(2), EcoOp("omega")])
def test_apply_op_rejects_inapplicable(op):
    with pytest.raises(OpNotApplicable):
        eco.apply_op(L_LOW_RIGHT, op)


def test_op_serialization():
    assert [str(op) for op in eco.applicable_ops(UNIT)] == ["alpha", "beta:1", "gamma:1", "delta"]
    for op in eco.applicable_ops(L_UP):
        assert EcoOp.parse(str(op)) == op
    with pytest.raises(ValueError):
        EcoOp.parse("beta:0")


def test_children_match_apply_op():
    for n in range(1, 5):
        for p in oracle.brute_force_enumerate(n).values():
            kids = eco.children(p)
            assert [op for op, _ in kids] == eco.applicable_ops(p)
            assert all(c == eco.apply_op(p, op) for op, c in kids)


@pytest.mark.parametrize("n", range(1, 7))
def test_closure_and_injectivity(n, oracle_sets):
    for p in oracle_sets[n].values():
        kids = [c for _, c in eco.children(p)]
        for c in kids:
            assert g.from_columns(n + 1, c.cols) == c
        assert len({c.cols for c in kids}) == len(kids)


@pytest.mark.parametrize("n", range(1, 6))
def test_children_partition_next_size(n, oracle_sets):
    produced = [c.cols for p in oracle_sets[n].values() for _, c in eco.children(p)]
    assert len(produced) == len(set(produced))
    assert set(produced) == set(oracle_sets[n + 1])


def test_children_count_sums(oracle_sets):
    assert sum(len(eco.children(p)) for p in oracle_sets[2].values()) == 18
    assert sum(len(eco.children(p)) for p in oracle_sets[3].values()) == 84


@pytest.mark.parametrize("n", range(1, 7))
def test_count_identity(n, oracle_sets):
    total = sum(2 * g.degree(p) + eco.satisfies_u1(p) + eco.satisfies_u2(p)
                for p in oracle_sets[n].values())
    # size 7 is past the oracle bound; compare with the listed sequence term
    expected = len(oracle_sets[n + 1]) if n < 6 else 8468
    assert total == expected


def _expected_new_corner(p, op):
    lo, _ = p.cols[-1]
    x = p.size + 1
    if op.kind == "alpha":
        return ("alpha", (x, p.size + 1))
    if op.kind == "delta":
        return ("delta", (x, 2))
    return (op.kind, (x, lo + op.index))


@pytest.mark.parametrize("n", range(1, 6))
def test_new_reentrant_point_names_the_op(n, oracle_sets):
    for p in oracle_sets[n].values():
        for op, c in eco.children(p):
            new = [(k.cls, k.pos) for k in g.corner_points(c)
                   if k.kind == "reentrant" and k.pos[0] > n]
            assert new == [_expected_new_corner(p, op)]
