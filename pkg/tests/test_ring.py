import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import laurent
from wrep.ring import ContextError, LaurentPoly, MatrixLP, NotAUnit

T = ("t",)
TQ = ("t", "q")


def P(text, vars=T):
    return LaurentPoly.parse(text, vars)


def M(rows, vars=T):
    return MatrixLP.parse(rows, vars)


def to_sympy(p: LaurentPoly):
    syms = sp.symbols(p.vars)
    return sum((c * sp.prod([s ** e for s, e in zip(syms, exps)]) for exps, c in p.terms.items()),
               sp.Integer(0))


# -- polynomials ---------------------------------------------------------------

def test_unit_times_inverse():
    t = LaurentPoly.var("t", T)
    assert t * t.inverse() == 1


def test_add_cancels():
    assert P("1-t") + P("t") == 1


def test_mul_distributes():
    assert P("(1-t)*(1-q)", TQ) == P("1 - t - q + t*q", TQ)


def test_zero_terms_are_dropped():
    p = P("t - t + 0*q", TQ)
    assert p.is_zero() and p.terms == {}


def test_exponent_vectors_match_context():
    p = P("q*t^-2 + 3", TQ)
    assert all(len(e) == 2 for e in p.terms)


@pytest.mark.parametrize("text,assign,expected", [
    ("q*t", {"q": 1}, "t"),
    ("1-t", {"t": 1}, "0"),
    ("q*t^-1*(1-t-t^2+t^3)", {"t": 1}, "0"),
])
def test_specialize(text, assign, expected):
    assert P(text, TQ).subs(assign) == P(expected, TQ)


def test_specialize_to_non_unit_rejected():
    with pytest.raises(NotAUnit):
        P("t^-1").subs({"t": P("1+t")})


def test_mixed_contexts_rejected():
    with pytest.raises(ContextError):
        P("t") + P("q", TQ)


def test_inverse_of_non_unit():
    with pytest.raises(NotAUnit):
        P("1-t").inverse()


def test_str_and_latex():
    assert str(P("1-t")) == "1 - t"
    assert P("1-t").latex() == "1-t"


def test_bar_inverts_variables():
    assert P("t^2 - q", TQ).bar() == P("t^-2 - q^-1", TQ)


@given(laurent(TQ), laurent(TQ), laurent(TQ))
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == 0


@given(laurent(TQ), laurent(TQ))
def test_product_matches_sympy(a, b):
    assert sp.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(laurent(TQ))
def test_json_round_trip(a):
    assert LaurentPoly.from_json(a.to_json()) == a


@given(laurent(TQ))
def test_parse_round_trip(a):
    assert LaurentPoly.parse(str(a), TQ) == a


# -- matrices ------------------------------------------------------------------

BUR = [["0", "t"], ["1", "1-t"]]
SWAP = [["0", "1"], ["1", "0"]]


def test_identity_is_neutral():
    assert MatrixLP.identity(2, T) @ M(BUR) == M(BUR)


def test_swap_squares_to_identity():
    assert (M(SWAP) @ M(SWAP)).is_identity()


def test_burau_block_square():
    assert M(BUR) @ M(BUR) == M([["t", "t-t^2"], ["1-t", "1-t+t^2"]])


@pytest.mark.parametrize("rows,det", [(SWAP, "-1"), (BUR, "-t"), ([["1", "0"], ["0", "1"]], "1")])
def test_det_small(rows, det):
    assert M(rows).det() == P(det)


def test_inverse_examples():
    assert M([["0", "1"], ["t", "0"]]).inverse() == M([["0", "t^-1"], ["1", "0"]])
    assert MatrixLP.identity(4, T).inverse().is_identity()
    with pytest.raises(NotAUnit):
        M([["1", "1"], ["1", "1"]]).inverse()


def test_trace_examples():
    assert MatrixLP.identity(5, T).trace() == 5
    assert M(BUR).trace() == P("1-t")


def test_kron_block_layout():
    a = M([["1", "t"], ["0", "1"]])
    b = M(SWAP)
    k = a.kron(b)
    assert k.shape == (4, 4)
    assert k.submatrix([0, 1], [2, 3]) == b.scale(P("t"))
    assert k.submatrix([2, 3], [0, 1]).is_zero()


def test_latex_matrix():
    assert M(BUR).latex() == "\\begin{pmatrix}0 & t\\\\1 & 1-t\\end{pmatrix}"


def _square(n, vars=T):
    return st.lists(laurent(vars, max_terms=3, max_exp=2, max_coeff=3), min_size=n * n, max_size=n * n).map(
        lambda xs: MatrixLP([xs[i * n:(i + 1) * n] for i in range(n)], vars))


def _at(p: LaurentPoly, value):
    return sum(c * sp.Rational(value) ** e[0] for e, c in p.terms.items())


@pytest.mark.parametrize("n", [2, 3, 4])
@settings(max_examples=15)
@given(data=st.data())
def test_det_and_charpoly_match_sympy(n, data):
    m = data.draw(_square(n))
    sm = sp.Matrix(n, n, lambda i, j: to_sympy(m.entries[i][j]))
    assert sp.expand(to_sympy(m.det()) - sm.det(method="berkowitz")) == 0
    x = sp.Symbol("x")
    expected = sp.Poly(sp.expand((x * sp.eye(n) - sm).det(method="berkowitz")), x).all_coeffs()
    got = [to_sympy(c) for c in m.charpoly()]
    assert len(got) == len(expected)
    assert all(sp.expand(a - b) == 0 for a, b in zip(got, expected))


@pytest.mark.parametrize("n", [5, 6, 7])
@settings(max_examples=10)
@given(data=st.data())
def test_det_and_charpoly_at_rational_points(n, data):
    # larger sizes: compare values at a few points, exact over Q
    m = data.draw(_square(n))
    det, cp = m.det(), m.charpoly()
    for value in ("2", "-3", "1/2"):
        num = sp.Matrix(n, n, lambda i, j: _at(m.entries[i][j], value))
        assert _at(det, value) == num.det()
        expected = num.charpoly().all_coeffs()
        assert [_at(c, value) for c in cp] == expected


@given(data=st.data())
def test_inverse_of_unimodular_product(data):
    # products of elementary and monomial matrices are invertible
    n = 3
    m = MatrixLP.identity(n, TQ)
    for _ in range(data.draw(st.integers(1, 5))):
        i, j = data.draw(st.sampled_from([(a, b) for a in range(n) for b in range(n) if a != b]))
        e = [list(row) for row in MatrixLP.identity(n, TQ).entries]
        e[i][j] = data.draw(laurent(TQ, max_terms=2, max_exp=2))
        m = m @ MatrixLP(e, TQ)
    m = m @ MatrixLP([[P("t", TQ), 0, 0], [0, P("-q^-1", TQ), 0], [0, 0, 1]], TQ)
    assert (m @ m.inverse()).is_identity()
    assert m.det().is_unit()


def test_matrix_json_round_trip():
    m = M([["1-t*q", "q^-1"], ["0", "t^3"]], TQ)
    assert MatrixLP.from_json(m.to_json()) == m


def test_transpose_inverse_of_tym_block():
    assert M([["0", "1"], ["t", "0"]]).transpose_inverse() == M([["0", "1"], ["t^-1", "0"]])
