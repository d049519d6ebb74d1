import itertools

import pytest

from bpengine.coalgebra import (
    CoproductScheme,
    check_beta_squared,
    check_coassociativity,
    check_counit,
    check_relations,
    coproduct,
    cp_square_check,
    expected_obstruction,
    geometric_obstruction,
    geometric_scheme,
    obstruction_report,
    obstruction_reproduced,
    singer_scheme,
)
from bpengine.terms import BETA as b, Element, Grading, InvalidGrading, admissible_basis, bidegree_of, multiply
from bpengine.tensor import TensorElement, tensor_multiply

T = TensorElement.pure


def W(p, *letters):
    return Element.word(p, *letters)


@pytest.mark.parametrize("scheme", [singer_scheme(3), geometric_scheme(3)])
def test_power_rule(scheme):
    assert coproduct(W(3, 1), scheme) == T(3, (0,), (1,)) + T(3, (1,), (0,))


def test_singer_beta_squared_and_unit():
    s = singer_scheme(3)
    assert coproduct(W(3, b, b), s) == 0
    assert coproduct(Element.one(3), s) == TensorElement.one(3)
    assert coproduct(W(3, b), s) == T(3, (b,), ()) + T(3, (), (b,))


def test_geometric_beta():
    assert coproduct(W(3, b), geometric_scheme(3)) == T(3, (b,), (0,)) + T(3, (0,), (b,))


@pytest.mark.parametrize("t", [0, 1])
def test_singer_beta_square_needs_odd_beta(t):
    assert check_beta_squared(singer_scheme(3), 3, (1, t)).passed
    rep = check_beta_squared(singer_scheme(3), 3, (0, t))
    assert not rep.passed
    assert rep.failures[0].residual == T(3, (b,), (b,), 2)


def test_geometric_beta_square_residuals():
    rep = check_beta_squared(geometric_scheme(3), 3, (0, 0))
    assert rep.failures[0].residual == T(3, (b, 0), (0, b)) + T(3, (0, b), (b, 0))
    rep = check_beta_squared(geometric_scheme(3), 3, (1, 1))
    assert rep.failures[0].residual == T(3, (b, 0), (0, b), -1) + T(3, (0, b), (b, 0), -1)
    assert rep.failures[0].parities == (1, 1)


@pytest.mark.parametrize("p,bound", [(3, 6), (5, 5)])
def test_singer_relations_hold(p, bound):
    rep = check_relations(singer_scheme(p), p, bound, bound)
    assert rep.passed, [f.to_dict() for f in rep.failures]
    assert rep.checked > 1


@pytest.mark.parametrize("bound", [0, 1, 3])
def test_geometric_relations_fail_on_beta_square(bound):
    rep = check_relations(geometric_scheme(3), 3, bound, bound)
    assert not rep.passed
    assert ("beta_squared", "b b") in [f.instance for f in rep.failures]


def test_parallel_sweep_matches_serial():
    s = geometric_scheme(3, 1, 0)
    a = check_relations(s, 3, 4, 4)
    c = check_relations(s, 3, 4, 4, jobs=2)
    assert a.to_dict() == c.to_dict()


def test_beta_free_sweep():
    rep = check_relations(singer_scheme(3), 3, 8, 8, families=("pp",))
    assert rep.passed and rep.family == "pp"


@pytest.mark.parametrize(
    "p,r,t,expected",
    [
        (3, 0, 0, {((b, 0), (0, b)): 1, ((0, b), (b, 0)): 1}),
        # the P0 b | b P0 term carries the sign of b's parity
        (3, 1, 0, {((b, 0), (0, b)): 1, ((0, b), (b, 0)): 2}),
        (5, 0, 1, {((b, 0), (0, b)): 4, ((0, b), (b, 0)): 1}),
    ],
)
def test_obstruction_examples(p, r, t, expected):
    got = geometric_obstruction(p, r, t)
    assert got.terms == expected
    assert got == expected_obstruction(p, r, t)


@pytest.mark.parametrize("p", [3, 5])
def test_obstruction_report(p):
    rep = obstruction_report(p)
    assert obstruction_reproduced(rep)
    assert len(rep.trace) == 4


@pytest.mark.parametrize("p", [3, 5, 7])
def test_cp_square_vanishes(p):
    rep = cp_square_check(p)
    assert rep.passed
    assert rep.trace[0].endswith("-> 0") and rep.trace[3].endswith("-> 0")
    assert "-(P0 P0 b P0 | b P0 P0 P0)" in rep.trace[2]


@pytest.mark.parametrize("p,n_max,s", [(3, 8, 1), (3, 0, 0), (5, 8, 2), (3, 12, 0)])
def test_counit(p, n_max, s):
    rep = check_counit(singer_scheme(p), p, n_max, s)
    assert rep.passed and rep.checked > 0


def test_counit_refuses_geometric():
    with pytest.raises(InvalidGrading):
        check_counit(geometric_scheme(3), 3, 4, 1)


def test_coassociativity():
    rep = check_coassociativity(singer_scheme(3), 3, 12, 2)
    assert rep.passed
    # b, P2 and b P1 all lie in range
    names = {(1, 0): (b,), (8, 1): (2,), (5, 1): (b, 1)}
    for (n, s), w in names.items():
        assert w in admissible_basis(3, n, s)


def _broken_scheme():
    s = singer_scheme(3)
    return CoproductScheme("broken", s.beta_image + ((((0,), (b,)), 1),), s.grading)


def test_checkers_detect_bad_schemes():
    bad = _broken_scheme()
    assert not check_counit(bad, 3, 1, 0).passed
    rep = check_coassociativity(bad, 3, 1, 0)
    assert [f.instance for f in rep.failures] == [("coassoc", "b")]


def _admissible_short(p):
    out = []
    for s in range(3):
        for n in range(30):
            out += [w for w in admissible_basis(p, n, s) if len(w) <= 2 and all(x <= 6 for x in w)]
    return out


def test_multiplicativity():
    p = 3
    s = singer_scheme(p)
    g = s.grading
    words = _admissible_short(p)
    for u, v in itertools.product(words, repeat=2):
        x, y = W(p, *u), W(p, *v)
        assert coproduct(multiply(x, y), s) == tensor_multiply(coproduct(x, s), coproduct(y, s), g), (u, v)


def test_singer_homogeneity():
    p = 3
    s = singer_scheme(p)
    g = Grading.standard(p)
    for w in _admissible_short(p):
        n, sd = bidegree_of(w, g)
        for (u, v) in coproduct(W(p, *w), s).terms:
            assert bidegree_of(u, g)[1] == bidegree_of(v, g)[1] == sd
            assert bidegree_of(u, g)[0] + bidegree_of(v, g)[0] == n


def test_sweep_detects_corrupted_relation(monkeypatch):
    import bpengine.coalgebra as cp

    real = cp.relation_rhs

    def corrupted(pattern, p):
        out = dict(real(pattern, p))
        if pattern == (1, b, 1):
            out[(b, 2, 0)] = (out.get((b, 2, 0), 0) + 1) % p
        return out

    monkeypatch.setattr(cp, "relation_rhs", corrupted)
    rep = check_relations(singer_scheme(3), 3, 2, 2)
    assert [f.instance for f in rep.failures] == [("pbp", "P1 b P1")]
