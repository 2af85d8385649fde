import pytest
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from src.obstruction.core.errors import WitnessNotFound
from src.obstruction.core.graphs import derive_r
from src.obstruction.core.modpoly import (
    ModPoly,
    degree_pattern,
    degree_pattern_certificate,
    modpoly_factor,
    modpoly_is_irreducible,
    modpoly_product,
    smallest_irreducibility_witness,
)
from src.obstruction.core.polyring import IntPoly

P = IntPoly.from_high

PUBLISHED_WITNESSES = {7: 3, 8: 2, 9: 5, 10: 3, 11: 3, 12: 2, 13: 11}


def sympy_irreducible(g: ModPoly) -> bool:
    return gf_irreducible_p([ZZ(c) for c in reversed(g.coeffs)], g.p, ZZ)


def test_factor_x2_plus_1_mod_2_is_a_square():
    assert modpoly_factor(ModPoly(2, (1, 0, 1))) == [(ModPoly(2, (1, 1)), 2)]


def test_factor_x2_plus_1_mod_5_splits():
    assert modpoly_factor(ModPoly(5, (1, 0, 1))) == [(ModPoly(5, (2, 1)), 1), (ModPoly(5, (3, 1)), 1)]


def test_factor_keeps_leading_unit():
    f = ModPoly(7, (3, 0, 0, 2))
    factors = modpoly_factor(f)
    assert all(g.lc == 1 for g, _ in factors)
    assert modpoly_product(factors, 7, unit=f.lc) == f


@pytest.mark.parametrize("p", [2, 3, 5, 7, 13])
def test_factor_random_polynomials(rng, p):
    for _ in range(200):
        deg = rng.randint(1, 12)
        coeffs = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
        f = ModPoly(p, tuple(coeffs))
        factors = modpoly_factor(f, seed=rng.randrange(1 << 30))
        assert modpoly_product(factors, p, unit=f.lc) == f
        for g, e in factors:
            assert e >= 1
            assert g.lc == 1
            assert sympy_irreducible(g)
            assert modpoly_is_irreducible(g)


def test_is_irreducible_matches_sympy(rng):
    for p in (2, 3, 11):
        for _ in range(150):
            deg = rng.randint(1, 10)
            f = ModPoly(p, tuple([rng.randrange(p) for _ in range(deg)] + [1]))
            assert modpoly_is_irreducible(f) == sympy_irreducible(f)


def test_degree_pattern():
    # (x + 1)(x^3 + x + 1) over GF(2)
    f = ModPoly(2, (1, 1, 0, 1)) * ModPoly(2, (1, 1))
    assert degree_pattern(f) == [1, 3]
    assert degree_pattern(ModPoly(2, (1, 0, 1))) is None


def test_r7_mod_3_is_a_single_irreducible():
    r7 = derive_r(7)
    factors = modpoly_factor(ModPoly.from_intpoly(r7, 3))
    assert factors == [(ModPoly.from_intpoly(r7, 3), 1)]
    assert factors[0][0].degree == r7.degree == 15


def test_witness_small_examples():
    assert smallest_irreducibility_witness(P([1, 0, 1]), 10) == 3
    with pytest.raises(WitnessNotFound) as err:
        smallest_irreducibility_witness(P([1, -3, 2]), 50)
    assert err.value.bound == 50


def test_witness_needs_monic():
    with pytest.raises(ValueError):
        smallest_irreducibility_witness(P([2, 0, 1]), 10)


@pytest.mark.parametrize("k,p", sorted(PUBLISHED_WITNESSES.items()))
def test_published_witnesses(k, p):
    r = derive_r(k)
    assert smallest_irreducibility_witness(r, 200) == p
    assert modpoly_factor(ModPoly.from_intpoly(r, p)) == [(ModPoly.from_intpoly(r, p), 1)]


def test_degree_pattern_certificate():
    cert = degree_pattern_certificate(P([1, 0, 1]), 20)
    assert cert.irreducible
    assert cert.possible_degrees == (0, 2)
    assert cert.primes[-1] == 3

    # x^4 + 1 is irreducible but splits into quadratics mod every prime
    quartic = degree_pattern_certificate(P([1, 0, 0, 0, 1]), 60)
    assert not quartic.irreducible
    assert 2 in quartic.possible_degrees
    assert 2 not in quartic.primes

    reducible = degree_pattern_certificate(P([1, -3, 2]), 60)
    assert not reducible.irreducible
    assert reducible.possible_degrees == (0, 1, 2)


def test_degree_pattern_certificate_respects_max_primes():
    cert = degree_pattern_certificate(P([1, 0, 0, 0, 1]), 200, max_primes=4)
    assert len(cert.primes) == 4
