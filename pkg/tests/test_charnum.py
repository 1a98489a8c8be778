from itertools import combinations, product as iproduct
from math import comb

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from psc_cobordism.arith import DomainError
from psc_cobordism.charnum import (
    CP,
    HP2,
    MilnorH,
    NotComplexError,
    Product,
    chern_total,
    cohomology_ring,
    format_ppoly,
    generator_pool,
    generator_search,
    generator_target,
    omega8_report,
    parse_manifold,
    pontryagin_total,
    s_class,
    s_class_expanded,
    s_number,
    s_polynomial_in_pontryagin,
    signature,
)

X, Y = sympy.symbols("x y")


# -- independent oracle: H_ij as the (1,1)-hypersurface in CP^i x CP^j -------


def _truncate(expr, i, j):
    poly = sympy.Poly(sympy.expand(expr), X, Y)
    return sum(
        c * X**a * Y**b for (a, b), c in poly.terms() if a <= i and b <= j
    )


def hypersurface_pairing(expr, i, j):
    """<expr, [H_ij]> = coefficient of x^i y^j in expr*(x+y) on CP^i x CP^j."""
    poly = sympy.Poly(sympy.expand(expr * (X + Y)), X, Y)
    return int(poly.coeff_monomial(X**i * Y**j))


def hypersurface_s_number(i, j):
    k2 = i + j - 1
    return hypersurface_pairing((i + 1) * X**k2 + (j + 1) * Y**k2 - (X + Y) ** k2, i, j)


def hypersurface_pontryagin(i, j):
    # normal bundle O(1,1): p(H) = p(ambient) / (1 + (x+y)^2), truncated
    inv = sum((-1) ** r * (X + Y) ** (2 * r) for r in range((i + j) // 2 + 1))
    return _truncate((1 + X**2) ** (i + 1) * (1 + Y**2) ** (j + 1) * inv, i, j)


def to_sympy(elem):
    assert elem.ring.nvars == 2
    return sum(c * X**a * Y**b for (a, b), c in elem.terms.items())


# -- descriptors ------------------------------------------------------------


@pytest.mark.parametrize("text", ["cp4", "h_2_3", "hp2", "cp2*cp2", "cp1*hp2*h_0_3"])
def test_descriptor_round_trip(text):
    assert str(parse_manifold(text)) == text


@pytest.mark.parametrize("text", ["cp", "h_3_2", "hp3", "", "cp2**cp2", "h_0_0"])
def test_descriptor_rejects(text):
    with pytest.raises(DomainError):
        parse_manifold(text)


def test_dimensions():
    assert CP(4).dim == 8
    assert MilnorH(2, 3).dim == 8
    assert HP2().dim == 8
    assert Product((CP(2), CP(2))).dim == 8


# -- characteristic classes --------------------------------------------------


def test_chern_examples():
    assert chern_total(CP(1)).total().format() == "1 + 2*x"
    assert chern_total(CP(4)).total().format() == "1 + 5*x + 10*x^2 + 10*x^3 + 5*x^4"
    for j in range(2, 7):
        h = chern_total(MilnorH(0, j)).format()
        assert [s.replace("y", "x") for s in h] == chern_total(CP(j - 1)).format()


def test_pontryagin_examples():
    assert pontryagin_total(CP(2)).total().format() == "1 + 3*x^2"
    assert pontryagin_total(CP(4)).total().format() == "1 + 5*x^2 + 10*x^4"
    assert pontryagin_total(HP2()).total().format() == "1 + 2*u + 7*u^2"


def test_hp2_is_not_complex():
    with pytest.raises(NotComplexError):
        chern_total(HP2())


@pytest.mark.parametrize("n", range(1, 12))
def test_cp_pontryagin_is_binomial(n):
    # (1 + x^2)^{n+1}, truncated
    classes = pontryagin_total(CP(n)).classes
    for q, cls in enumerate(classes):
        assert cls.terms == ({(2 * q,): comb(n + 1, q)} if 2 * q <= n and comb(n + 1, q) else {})


def test_chern_to_pontryagin_identity():
    for d in (CP(5), MilnorH(2, 4), MilnorH(3, 3), Product((CP(2), CP(3)))):
        c = chern_total(d).classes
        ring = cohomology_ring(d)
        conj = ring.zero()
        for i, ci in enumerate(c):
            conj = conj + ci * (-1) ** i
        alt = ring.zero()
        for i, pi in enumerate(pontryagin_total(d).classes):
            alt = alt + pi * (-1) ** i
        assert alt == chern_total(d).total() * conj


MILNOR_SMALL = [(i, j) for i in range(0, 5) for j in range(max(i, 1), 7)]


@pytest.mark.parametrize("i,j", MILNOR_SMALL)
def test_milnor_ring_pairing_matches_hypersurface(i, j):
    ring = cohomology_ring(MilnorH(i, j))
    n = i + j - 1
    for a in range(n + 1):
        mono = ring.element({(a, n - a): 1})
        assert mono.evaluate() == hypersurface_pairing(X**a * Y ** (n - a), i, j)


@pytest.mark.parametrize("i,j", [(1, 2), (2, 3), (2, 4), (3, 4), (2, 6), (4, 5)])
def test_milnor_pontryagin_matches_hypersurface(i, j):
    d = MilnorH(i, j)
    mine = pontryagin_total(d).total()
    oracle = hypersurface_pontryagin(i, j)
    n = i + j - 1
    ring = cohomology_ring(d)
    # equal as cohomology classes: every pairing against a complementary monomial agrees
    for q in range(n // 2 + 1):
        mine_q = to_sympy(mine.homogeneous(4 * q)) if mine.homogeneous(4 * q).terms else 0
        oracle_q = sum(
            t for t in sympy.Add.make_args(sympy.expand(oracle))
            if t != 0 and sympy.Poly(t, X, Y).total_degree() == 2 * q
        )
        for a in range(n - 2 * q + 1):
            beta = X**a * Y ** (n - 2 * q - a)
            lhs = (mine.homogeneous(4 * q) * ring.element({(a, n - 2 * q - a): 1})).evaluate()
            assert lhs == hypersurface_pairing(oracle_q * beta, i, j)
            assert hypersurface_pairing(mine_q * beta, i, j) == lhs or mine_q == 0


# -- s-numbers ---------------------------------------------------------------


def test_s_polynomials():
    assert format_ppoly(s_polynomial_in_pontryagin(1)) == "p1"
    assert s_polynomial_in_pontryagin(2) == {(2, 0): 1, (0, 1): -2}
    assert s_polynomial_in_pontryagin(3) == {(3, 0, 0): 1, (1, 1, 0): -3, (0, 0, 1): 3}


@pytest.mark.parametrize("k", range(1, 7))
def test_s_polynomial_against_sympy_power_sums(k):
    roots = sympy.symbols(f"r1:{k + 1}")
    e = [sympy.Integer(1)] + [
        sum(sympy.prod(c) for c in combinations(roots, q)) for q in range(1, k + 1)
    ]
    expr = sum(c * sympy.prod(e[i + 1] ** m for i, m in enumerate(mono))
               for mono, c in s_polynomial_in_pontryagin(k).items())
    assert sympy.expand(expr - sum(r**k for r in roots)) == 0


def test_headline_s_numbers():
    assert s_number(CP(4), 2) == 5
    assert s_number(HP2(), 2) == -10
    assert s_number(Product((CP(2), CP(2))), 2) == 0


def test_cp_s_numbers():
    for k in range(1, 11):
        assert s_number(CP(2 * k), k) == 2 * k + 1


def test_milnor_s_numbers_closed_form():
    for n in range(5, 22, 2):
        k = (n - 1) // 2
        for i in range(2, n):
            j = n - i
            if j < 4 or i > j:
                continue
            assert s_number(MilnorH(i, j), k) == -comb(n, i)


@pytest.mark.parametrize("i,j", [(1, 2), (1, 4), (2, 3), (3, 4), (2, 5), (4, 5), (3, 6), (1, 8)])
def test_milnor_s_numbers_against_hypersurface(i, j):
    assert s_number(MilnorH(i, j), (i + j - 1) // 2) == hypersurface_s_number(i, j)


def test_h1j_s_number_vanishes():
    # H_1j bounds; the (j+1) y^{2k} root term cancels the binomial term
    for j in (2, 4, 6, 8):
        assert s_number(MilnorH(1, j), j // 2) == 0 == hypersurface_s_number(1, j)


def test_products_have_zero_s_number():
    factors = [CP(1), CP(2), CP(3), CP(4), HP2(), MilnorH(2, 3), MilnorH(1, 2)]
    seen = 0
    for a, b in iproduct(factors, repeat=2):
        dim = a.dim + b.dim
        if dim % 4 == 0 and dim <= 20:
            assert s_number(Product((a, b)), dim // 4) == 0
            seen += 1
    assert seen >= 10


def test_newton_recursion_equals_expanded_substitution():
    for d, k in ((CP(6), 3), (MilnorH(2, 5), 3), (HP2(), 2), (Product((CP(2), CP(4))), 3)):
        assert s_class(d, k) == s_class_expanded(d, k)


def test_s_number_dimension_mismatch():
    with pytest.raises(DomainError):
        s_number(CP(4), 3)


# -- signature and Omega_8 -----------------------------------------------------


@pytest.mark.parametrize("d", [CP(2), CP(4), HP2(), Product((CP(2), CP(2)))])
def test_signature_is_one(d):
    assert signature(d) == 1


def test_signature_products_multiply():
    assert signature(Product((CP(2), CP(2)))) == signature(CP(2)) ** 2
    assert signature(Product((CP(1), CP(1)))) == 0


def test_signature_unsupported_dimension():
    with pytest.raises(DomainError):
        signature(CP(6))


def test_omega8():
    rep = omega8_report()
    assert (rep.cp4_coeff, rep.cp2xcp2_coeff, rep.index) == (-2, 3, 3)
    sig = {k: v[0] for k, v in rep.invariants.items()}
    s2 = {k: v[1] for k, v in rep.invariants.items()}
    assert sig["hp2"] == -2 * sig["cp4"] + 3 * sig["cp2*cp2"]
    assert s2["hp2"] == -2 * s2["cp4"] + 3 * s2["cp2*cp2"]


# -- generators --------------------------------------------------------------


def test_generator_examples():
    assert generator_search(2) == [(1, CP(4))]
    assert generator_search(3) == [(1, CP(6))]
    combo = generator_search(4)
    assert sum(c * s_number(d, 4) for c, d in combo) == 3
    assert sorted(s_number(d, 4) for d in generator_pool(4)) == [-126, -84, -36, 9]


@settings(max_examples=19, deadline=None)
@given(st.integers(2, 20))
def test_generator_search_reaches_target(k):
    combo = generator_search(k)
    assert sum(c * s_number(d, k) for c, d in combo) == generator_target(k)


def test_generator_search_domain():
    with pytest.raises(DomainError):
        generator_search(1)
