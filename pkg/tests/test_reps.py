import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import welded_words
from wrep.reps import (
    CATALOG_NAMES,
    ClosureFailure,
    MatrixRep,
    burau_extension_report,
    conjugate,
    coordinate_subquotient,
    direct_sum,
    dual_rep,
    lower_ones,
    make_catalog_rep,
    rep_certificates,
    rep_diff,
    specialize_rep,
    split_obstruction,
    tensor_rep,
    twist,
    verify_rep,
)
from wrep.ring import LaurentPoly, MatrixLP, NotAUnit

T = ("t",)


def M(rows, vars=T):
    return MatrixLP.parse(rows, vars)


def t(vars=T):
    return LaurentPoly.var("t", vars)


def all_catalog(n):
    out = []
    for name in CATALOG_NAMES:
        if name == "onedim" or ("reduced" in name and n < 3):
            continue
        out.append(make_catalog_rep(name, n))
    out.append(dual_rep(make_catalog_rep("burau", n), "transpose_inverse"))
    out.append(make_catalog_rep("onedim", n, r=t()))
    return out


# -- catalog -------------------------------------------------------------------

def test_burau3_sigma1():
    assert make_catalog_rep("burau", 3).sigma[0] == M([["0", "t", "0"], ["1", "1-t", "0"], ["0", "0", "1"]])


def test_tym3_sigma2():
    assert make_catalog_rep("tym", 3).sigma[1] == M([["1", "0", "0"], ["0", "0", "1"], ["0", "t", "0"]])


def test_reduced_burau_blocks():
    rho = make_catalog_rep("reduced_burau", 4)
    assert rho.sigma[0] == M([["-t", "t", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    assert rho.sigma[1] == M([["1", "0", "0"], ["1", "-t", "t"], ["0", "0", "1"]])
    assert rho.sigma[2] == M([["1", "0", "0"], ["0", "1", "0"], ["0", "1", "-t"]])
    assert rho.tau[1] == M([["1", "0", "0"], ["1", "-1", "1"], ["0", "0", "1"]])


def test_reduced_burau_with_exchanged_middle_row_is_not_a_rep():
    good = make_catalog_rep("reduced_burau", 4)
    bad_mid = M([["1", "0", "0"], ["t", "-t", "1"], ["0", "0", "1"]])
    bad = MatrixRep("swapped", 4, T, (good.sigma[0], bad_mid, good.sigma[2]), good.tau)
    rels = verify_rep(bad)
    assert rels and all(r.family in (2, 7, 8) for r in rels)


@pytest.mark.parametrize("n", range(2, 7))
def test_catalog_satisfies_relations(n):
    for rho in all_catalog(n):
        assert verify_rep(rho) == [], rho.name


@pytest.mark.parametrize("n", [2, 4])
def test_catalog_invariants(n):
    for rho in all_catalog(n):
        for _, m in rho.generators():
            assert m.det().is_unit()
        for m in rho.tau:
            assert (m @ m).is_identity()


def test_swapped_roles_violate_tau_squared():
    bur, perm = make_catalog_rep("burau", 3), make_catalog_rep("permutation", 3)
    swapped = MatrixRep("swapped", 3, T, perm.sigma, bur.sigma)
    assert any(r.family == 5 for r in verify_rep(swapped))


def test_unknown_catalog_name():
    with pytest.raises(ValueError):
        make_catalog_rep("lawrence", 3)
    with pytest.raises(NotAUnit):
        make_catalog_rep("onedim", 3, r=LaurentPoly.parse("1+t", T))


# -- duals, twists, tensors --------------------------------------------------------

def test_dual_of_onedim():
    one = make_catalog_rep("onedim", 3, r=t())
    for v in ("transpose_inverse",):
        assert dual_rep(one, v).sigma[0] == M([["t^-1"]])


def test_dual_of_permutation():
    perm = make_catalog_rep("permutation", 4)
    for v in ("transpose_inverse", "transpose_inverse_bar"):
        assert dual_rep(perm, v).same_matrices(perm)


def test_dual_burau_local_block():
    d = make_catalog_rep("dual_burau", 3)
    assert d.sigma[0] == M([["1-t", "t", "0"], ["1", "0", "0"], ["0", "0", "1"]])


def test_dual_tym_block_and_determinant():
    d = make_catalog_rep("dual_tym", 2)
    assert d.sigma[0] == M([["0", "1"], ["t^-1", "0"]])
    assert d.sigma[0].det() == LaurentPoly.parse("-t^-1", T)


def test_tensor_with_onedim_is_twist():
    r = t()
    rho = make_catalog_rep("burau", 3)
    assert tensor_rep(make_catalog_rep("onedim", 3, r=r), rho).same_matrices(twist(r, rho))
    assert tensor_rep(rho, rho).dim == 9


def test_twist_examples():
    one = make_catalog_rep("onedim", 3, r=t())
    assert twist(t().inverse(), one).sigma[0].is_identity()
    rho = make_catalog_rep("burau", 3)
    assert twist(t(), twist(t().inverse(), rho)).same_matrices(rho)
    vars = ("t", "q")
    q = LaurentPoly.var("q", vars)
    tw = twist(q, make_catalog_rep("dual_burau", 4, vars=vars))
    assert tw.sigma[0].entries[0][1] == LaurentPoly.parse("q*t", vars)
    assert tw.tau[0] == make_catalog_rep("dual_burau", 4, vars=vars).tau[0]


@pytest.mark.parametrize("n", [3, 4])
def test_constructions_preserve_validity(n):
    bur, tym = make_catalog_rep("burau", n), make_catalog_rep("tym", n)
    g = M([["1", "t", "0"], ["0", "1", "0"], ["1-t", "0", "t^2"]]) if n == 3 else lower_ones(n, T)
    for rho in (dual_rep(bur, "transpose_inverse"), dual_rep(tym, "transpose_inverse_bar"),
                twist(t(), bur), conjugate(tym, g), tensor_rep(bur, tym), direct_sum(bur, tym)):
        assert verify_rep(rho) == [], rho.name


# -- conjugation and subquotients --------------------------------------------------

@pytest.mark.parametrize("n", [3, 4, 5])
def test_r_conjugation_block_form(n):
    conj = conjugate(make_catalog_rep("burau", n), lower_ones(n, T))
    red = make_catalog_rep("reduced_burau", n)
    for i, m in enumerate(conj.sigma, start=1):
        assert m.submatrix(range(n - 1), range(n - 1)) == red.sigma[i - 1]
        assert m.submatrix([n - 1], range(n - 1)).is_zero()
        assert m.entries[n - 1][n - 1] == 1
        # last column above the corner: t at position n-1 for sigma_{n-1} only
        col = [m.entries[k][n - 1] for k in range(n - 1)]
        assert col == [0] * (n - 2) + [t() if i == n - 1 else 0]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_extension_structures(n):
    for dual in (False, True):
        report = burau_extension_report(n, dual)
        assert report.ok, report.violations
        assert report.verdicts["split"] is False


def test_split_obstruction_absent_for_permutation():
    assert split_obstruction(make_catalog_rep("permutation", 3), "column") is None


def test_conjugate_by_identity():
    rho = make_catalog_rep("tym", 3)
    assert conjugate(rho, MatrixLP.identity(3, T)).same_matrices(rho)


def test_conjugation_keeps_similarity_invariants():
    rho = make_catalog_rep("burau", 4)
    conj = conjugate(rho, lower_ones(4, T))
    for (_, a), (_, b) in zip(rho.generators(), conj.generators()):
        assert a.trace() == b.trace() and a.det() == b.det()


def test_subquotient_reassembly():
    # blocks of (sub, quot) agree with the reordered images off the lower-left
    rho = conjugate(make_catalog_rep("burau", 4), lower_ones(4, T))
    order = [0, 1, 2, 3]
    sub, quot = coordinate_subquotient(rho, order, 3)
    for (_, m), s, q in zip(rho.generators(), (*sub.sigma, *sub.tau), (*quot.sigma, *quot.tau)):
        assert m.submatrix([0, 1, 2], [0, 1, 2]) == s
        assert m.submatrix([3], [3]) == q


def test_subquotient_split_zero():
    rho = make_catalog_rep("burau", 3)
    sub, quot = coordinate_subquotient(rho, [0, 1, 2], 0)
    assert sub is None and quot.same_matrices(rho)


def test_subquotient_detects_non_invariance():
    with pytest.raises(ClosureFailure):
        coordinate_subquotient(make_catalog_rep("burau", 3), [0, 1, 2], 1)


def test_subquotient_accepts_permutation_matrix():
    rho = conjugate(make_catalog_rep("burau", 3), lower_ones(3, T))
    p = MatrixLP.permutation([2, 0, 1], T)
    with pytest.raises(ClosureFailure):
        coordinate_subquotient(rho, p, 1)


# -- certificates -----------------------------------------------------------------

def test_burau_vs_tym_trace():
    r = rep_certificates(make_catalog_rep("burau", 4), make_catalog_rep("tym", 4))
    assert r.verdicts["equivalent"] is False
    assert "trace@sigma1" in r.verdicts["separating_invariants"]
    assert r.certificates["sigma1"]["trace"] == ["3 - t", "2"]


def test_tym_vs_dual_determinant():
    r = rep_certificates(make_catalog_rep("tym", 4), make_catalog_rep("dual_tym", 4))
    assert r.verdicts["equivalent"] is False
    assert r.certificates["sigma2"]["det"] == ["-t", "-t^-1"]


def test_conjugate_is_inconclusive():
    rho = make_catalog_rep("burau", 3)
    g = M([["1", "t", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    assert rep_certificates(rho, conjugate(rho, g)).status == "inconclusive"


# -- specialisation -----------------------------------------------------------------

@pytest.mark.parametrize("name", ["burau", "tym"])
def test_specialise_to_permutation(name):
    perm = make_catalog_rep("permutation", 4)
    assert not rep_diff(specialize_rep(make_catalog_rep(name, 4), {"t": 1}), perm)


def test_reduced_at_one_sigma_equals_tau():
    red = specialize_rep(make_catalog_rep("reduced_burau", 5), {"t": 1})
    assert list(red.sigma) == list(red.tau)


# -- images of words ---------------------------------------------------------------

@settings(max_examples=30)
@given(st.data())
def test_image_is_multiplicative(data):
    rho = make_catalog_rep("tym", 4)
    u, v = data.draw(welded_words(4)), data.draw(welded_words(4))
    assert rho.image(u * v) == rho.image(u) @ rho.image(v)
    assert rho.image(u * u.inverse()).is_identity()


def test_json_round_trip():
    rho = make_catalog_rep("dual_burau", 3, vars=("t", "q"))
    assert MatrixRep.from_json(rho.to_json()).same_matrices(rho)


def test_parallel_verification_agrees():
    good = make_catalog_rep("tym", 5)
    rho = make_catalog_rep("burau", 5)
    bad = MatrixRep("bad", 5, T, rho.tau, rho.sigma)
    assert verify_rep(good, workers=2) == []
    assert verify_rep(bad, workers=2) == verify_rep(bad)
