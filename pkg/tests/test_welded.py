import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import free_words, welded_words
from wrep.freegroup import FreeEndo, FreeWord
from wrep.welded import (
    ARTIN,
    ActionSpec,
    WeldedWord,
    XiSpec,
    act,
    action_extends,
    check_cond1,
    defining_relations,
    epsilon_check,
    shift,
    wada_extends,
    words_equal,
    xi_image,
)


def WW(text, n):
    return WeldedWord.parse(text, n)


def F(text, n):
    return FreeWord.parse(text, n)


# -- relations -----------------------------------------------------------------

def test_wb2_has_only_tau_squared():
    rels = defining_relations(2)
    assert len(rels) == 1
    assert rels[0].lhs == WW("t1 t1", 2) and rels[0].rhs == WeldedWord(2)


def _has(rels, lhs, rhs):
    return any((r.lhs, r.rhs) in ((lhs, rhs), (rhs, lhs)) for r in rels)


def test_relation_samples():
    assert _has(defining_relations(3), WW("s1 s2 s1", 3), WW("s2 s1 s2", 3))
    assert _has(defining_relations(4), WW("s1 t3", 4), WW("t3 s1", 4))


@pytest.mark.parametrize("n", range(2, 7))
def test_every_defining_relation_holds(n):
    for rel in defining_relations(n):
        assert words_equal(rel.lhs, rel.rhs), rel


def test_words_equal_examples():
    assert words_equal(WW("t1 s2 s1", 3), WW("s2 s1 t2", 3))
    assert words_equal(WW("s2 s1 t1 S2", 3), WW("t1 s2 t2 t1", 3))
    assert words_equal(WW("s2 s1 t1 S2", 3), WW("t1 s2 s1 t2 t1 S2", 3))
    assert not words_equal(WW("s1 t1", 2), WW("t1 s1", 2))


def test_forbidden_relation_fails():
    # tau_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i tau_{i+1} is not
    # accompanied by its mirror with the sigmas on the other side
    assert not words_equal(WW("s1 s2 t1", 3), WW("t2 s1 s2", 3))


# -- Artin action --------------------------------------------------------------

@pytest.mark.parametrize("n,i", [(3, 1), (3, 2), (5, 3)])
def test_artin_sigma(n, i):
    phi = act(ARTIN, WeldedWord.sigma(n, i))
    assert phi.image(i) == FreeWord.gen(n, i + 1)
    assert phi.image(i + 1) == F(f"x{i + 1}^-1 x{i} x{i + 1}", n)
    for j in set(range(1, n + 1)) - {i, i + 1}:
        assert phi.image(j) == FreeWord.gen(n, j)


def test_artin_sigma_inverse():
    phi = act(ARTIN, WW("S1", 3))
    assert phi.image(1) == F("x1 x2 x1^-1", 3)
    assert phi.image(2) == F("x1", 3)


def test_artin_tau():
    phi = act(ARTIN, WW("t2", 4))
    assert phi.image(2) == F("x3", 4) and phi.image(3) == F("x2", 4)
    assert phi.image(1) == F("x1", 4) and phi.image(4) == F("x4", 4)
    assert (phi @ phi).is_identity()


def test_composite_on_last_strand():
    # the composite sends x_{i+2} to a conjugate of x_i by x_{i+2}
    phi = act(ARTIN, WW("s2 s1 t2", 3))
    assert phi.image(3) == F("x3^-1 x1 x3", 3)
    assert phi == act(ARTIN, WW("t1 s2 s1", 3))


def test_endo_identity_law():
    phi = act(ARTIN, WW("s1 S2 t1", 3))
    assert phi @ FreeEndo.identity(3) == phi
    assert act(ARTIN, WeldedWord(3)).is_identity()


def test_wada2_sigma():
    phi = act(ActionSpec("wada2"), WW("s1", 3))
    assert phi.image(1) == F("x2^-1", 3) and phi.image(2) == F("x1", 3)


def test_wada4_h1_is_artin():
    for n in (3, 4):
        for rel_word in ("s1", "S1", "t1", "s2 t1 S1"):
            w = WW(rel_word, n)
            assert act(ActionSpec("wada4", 1), w) == act(ARTIN, w)


@pytest.mark.parametrize("n", [3, 4])
def test_wada_table(n):
    expected = {1: False, 2: True, 3: True, 5: True, 6: False, 7: False}
    for k, want in expected.items():
        assert wada_extends(k, 1, n)[0] is want, k
    for h in (1, 2, 3):
        assert wada_extends(4, h, n)[0]


def test_failing_wada_reports_relations():
    ok, bad = wada_extends(1, 1, 3)
    assert not ok and bad
    assert all(act(ActionSpec("wada1"), r.lhs) != act(ActionSpec("wada1"), r.rhs) for r in bad)


def test_unknown_action_rejected():
    with pytest.raises(ValueError):
        ActionSpec("wada9")


@settings(max_examples=40)
@given(st.integers(3, 5).flatmap(lambda n: st.tuples(welded_words(n), welded_words(n))))
def test_act_is_multiplicative(pair):
    u, v = pair
    assert act(ARTIN, u * v) == act(ARTIN, u) @ act(ARTIN, v)
    assert act(ARTIN, u * u.inverse()).is_identity()


@settings(max_examples=40)
@given(welded_words(4), free_words(rank=4, max_len=6))
def test_action_preserves_exponent_sum_under_tau_sigma(w, x):
    # generators go to conjugates of generators, so the total exponent sum is kept
    phi = act(ARTIN, w)
    total = sum(x.exponent_sum(k) for k in range(1, 5))
    assert sum(phi(x).exponent_sum(k) for k in range(1, 5)) == total


# -- stabilisation and xi --------------------------------------------------------

def test_shift():
    assert shift(WW("s1", 3)) == WW("s2", 4)
    assert shift(WW("t2", 3)) == WW("t3", 4)
    assert shift(WeldedWord(3)) == WeldedWord(4)


def test_xi1_images():
    xi = XiSpec("xi1", 3)
    assert xi_image(xi, F("x1", 3)) == WW("s1 t1", 4)
    assert words_equal(xi_image(xi, F("x2", 3)), WW("t1 s2 t2 t1", 4))
    assert words_equal(xi_image(xi, F("x1^-1", 3)), WW("t1 S1", 4))


@pytest.mark.parametrize("n", range(2, 6))
def test_cond1_artin(n):
    assert check_cond1(ARTIN, XiSpec("xi1", n), n).ok
    assert check_cond1(ARTIN, XiSpec("trivial", n), n).ok


def test_cond1_wada2_counterexample():
    report = check_cond1(ActionSpec("wada2"), XiSpec("xi1", 3), 3)
    assert not report.ok
    ce = report.counterexample
    lam, x = WW(ce["lambda"], 3), F(ce["x"], 3)
    lhs = shift(lam) * xi_image(XiSpec("xi1", 3), x)
    rhs = xi_image(XiSpec("xi1", 3), act(ActionSpec("wada2"), lam)(x)) * shift(lam)
    assert not words_equal(lhs, rhs)


def test_cond1_deep_random():
    # the generator check implies the identity for arbitrary lambda and x
    rng = random.Random(7)
    for n in (3, 4):
        xi = XiSpec("xi1", n)
        for _ in range(60):
            lam = WeldedWord(n, [(rng.choice("sSt"), rng.randint(1, n - 1)) for _ in range(rng.randint(0, 5))])
            x = FreeWord(n, [rng.choice((1, -1)) * rng.randint(1, n) for _ in range(rng.randint(0, 4))])
            lhs = shift(lam) * xi_image(xi, x)
            rhs = xi_image(xi, act(ARTIN, lam)(x)) * shift(lam)
            assert words_equal(lhs, rhs)


@pytest.mark.parametrize("n,i", [(3, 1), (3, 2), (3, 3), (4, 2), (5, 5)])
def test_epsilon_check(n, i):
    assert epsilon_check(n, i)


def test_action_extends_for_each_kind():
    assert action_extends(ARTIN, 4)[0]
    assert not action_extends(ActionSpec("wada7"), 3)[0]
