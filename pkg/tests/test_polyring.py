import itertools

import pytest
import sympy

from src.obstruction.core.errors import NotDivisible, NotMonic, RepeatedRoot, ZeroPolynomial
from src.obstruction.core.polyring import (
    ONE,
    X,
    ZERO,
    IntPoly,
    SquareMatrixZ,
    count_real_roots,
    det_fraction_free,
    discriminant,
    format_poly,
    poly_add,
    poly_derivative,
    poly_divexact,
    poly_eval,
    poly_from_json,
    poly_gcd,
    poly_mul,
    poly_pow,
    poly_sub,
    poly_to_json,
    resultant,
    squarefree_part,
    sylvester_matrix,
)

P = IntPoly.from_high

Q0 = P([1, -5, 3])
R1 = P([1, -8, 17, -5])


def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def random_poly(rng, deg, lo=-9, hi=9, monic=False):
    coeffs = [rng.randint(lo, hi) for _ in range(deg)]
    lead = 1 if monic else rng.choice([c for c in range(lo, hi + 1) if c != 0])
    return IntPoly(tuple(coeffs) + (lead,))


def to_sympy(f):
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(f.coeffs)) or [0], x)


def test_zero_polynomial_has_degree_minus_one():
    assert ZERO.degree == -1
    assert IntPoly((0, 0, 0)) == ZERO
    assert IntPoly((3, 0)).degree == 0


def test_add_mul_examples():
    assert poly_add(P([1, 2]), P([1, -2])) == P([2, 0])
    assert poly_mul(P([1, -1]), P([1, 1])) == P([1, 0, -1])
    assert poly_mul(P([1, -2]), ZERO) == ZERO


def test_divexact_examples():
    quartic = poly_mul(Q0, poly_pow(P([1, -2]), 2))
    assert quartic == P([1, -9, 27, -32, 12])
    assert poly_divexact(quartic, poly_pow(P([1, -2]), 2)) == Q0
    assert poly_divexact(P([1, -9, 25, -22, 5]), P([1, -1])) == R1
    assert poly_divexact(ZERO, P([1, 1])) == ZERO


@pytest.mark.parametrize(
    "a,b",
    [
        (P([1, 0, 1]), P([1, -1])),      # remainder 2
        (P([1, 0]), P([2, 1])),          # non-integer quotient coefficient
        (P([1, 1]), P([1, 0, 1])),       # deg a < deg b
    ],
)
def test_divexact_refuses_inexact_division(a, b):
    with pytest.raises(NotDivisible):
        poly_divexact(a, b)


def test_divexact_by_zero():
    with pytest.raises(ZeroPolynomial):
        poly_divexact(X, ZERO)


def test_eval_and_derivative():
    assert poly_eval(Q0, 1) == -1
    assert poly_eval(P([1, -4, 2]), 2) == -2
    assert poly_derivative(P([1, -5, 3])) == P([2, -5])
    assert poly_derivative(IntPoly.const(7)) == ZERO


def test_sylvester_matrix_example():
    m = sylvester_matrix(P([1, -3, 2]), P([2, -3]))
    assert m.entries == ((1, -3, 2), (2, -3, 0), (0, 2, -3))


@pytest.mark.parametrize("a,b", [(5, 2), (-3, 4), (0, 0), (7, 7), (-1, -6)])
def test_resultant_of_linear_factors(a, b):
    assert resultant(P([1, -a]), P([1, -b])) == a - b


def test_resultant_with_common_root_is_zero():
    f = poly_mul(P([1, -3]), P([1, 1, 1]))
    g = poly_mul(P([1, -3]), P([2, 5]))
    assert resultant(f, g) == 0


def test_det_small_cases():
    assert det_fraction_free(SquareMatrixZ.from_rows([])) == 1
    assert det_fraction_free(SquareMatrixZ.from_rows([[2, 0, 0], [0, 3, 0], [0, 0, 5]])) == 30
    # zero pivot in the first column forces a row swap
    assert det_fraction_free(SquareMatrixZ.from_rows([[0, 1], [1, 0]])) == -1
    assert det_fraction_free(SquareMatrixZ.from_rows([[1, 2], [2, 4]])) == 0


def test_bareiss_matches_cofactor_expansion(rng):
    for n in range(1, 8):
        for _ in range(30):
            rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            if rng.random() < 0.3:
                rows[rng.randrange(n)][0] = 0
                rows[0][0] = 0
            assert det_fraction_free(SquareMatrixZ.from_rows(rows)) == cofactor_det(rows)


def test_bareiss_matches_sympy_on_large_entries(rng):
    n = 9
    rows = [[rng.randint(-10**12, 10**12) for _ in range(n)] for _ in range(n)]
    assert det_fraction_free(SquareMatrixZ.from_rows(rows)) == sympy.Matrix(rows).det()


def test_ring_axioms(rng):
    for _ in range(1000):
        a, b, c = (random_poly(rng, rng.randint(0, 5)) for _ in range(3))
        assert poly_add(a, b) == poly_add(b, a)
        assert poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c))
        assert poly_mul(a, b) == poly_mul(b, a)
        assert poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c))
        assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))
        assert poly_sub(a, a) == ZERO
        assert poly_mul(a, ONE) == a
        if not b.is_zero:
            assert poly_divexact(poly_mul(a, b), b) == a


def test_resultant_symmetry_against_cofactor_oracle(rng):
    for _ in range(150):
        p = random_poly(rng, rng.randint(1, 3))
        q = random_poly(rng, rng.randint(1, 3))
        expected = cofactor_det([list(r) for r in sylvester_matrix(p, q).entries])
        assert resultant(p, q) == expected
        assert resultant(q, p) == (-1) ** (p.degree * q.degree) * expected


def test_resultant_matches_sympy(rng):
    for _ in range(60):
        p = random_poly(rng, rng.randint(1, 4))
        q = random_poly(rng, rng.randint(1, 4))
        assert resultant(p, q) == sympy.resultant(to_sympy(p), to_sympy(q))


def test_resultant_is_multiplicative(rng):
    for _ in range(60):
        p = random_poly(rng, rng.randint(1, 4))
        q = random_poly(rng, rng.randint(1, 4))
        r = random_poly(rng, rng.randint(1, 4))
        assert resultant(p, poly_mul(q, r)) == resultant(p, q) * resultant(p, r)


def test_discriminant_examples():
    assert discriminant(Q0) == 13
    assert discriminant(R1) == 169
    assert resultant(R1, poly_derivative(R1)) == -169
    assert discriminant(P([1, 0, 1])) == -4
    assert discriminant(P([1, 0, 0, -2])) == -108


def test_discriminant_matches_sympy(rng):
    for _ in range(60):
        f = random_poly(rng, rng.randint(1, 6), monic=True)
        expected = sympy.discriminant(to_sympy(f))
        if expected == 0:
            with pytest.raises(RepeatedRoot):
                discriminant(f)
        else:
            assert discriminant(f) == expected


def test_discriminant_rejects_bad_input():
    with pytest.raises(NotMonic):
        discriminant(P([2, 0, 1]))
    with pytest.raises(RepeatedRoot):
        discriminant(poly_pow(P([1, -1]), 2))
    with pytest.raises(ZeroPolynomial):
        discriminant(ZERO)


def test_discriminant_sign_follows_real_roots(rng):
    for _ in range(80):
        f = random_poly(rng, rng.randint(2, 6), monic=True)
        if sympy.discriminant(to_sympy(f)) == 0:
            continue
        nonreal_pairs = (f.degree - count_real_roots(f)) // 2
        assert (discriminant(f) > 0) == (nonreal_pairs % 2 == 0)


def test_count_real_roots():
    assert count_real_roots(P([1, 0, 1])) == 0
    assert count_real_roots(P([1, 0, 0, -2])) == 1
    assert count_real_roots(R1) == 3
    # repeated roots are counted once
    assert count_real_roots(poly_mul(poly_pow(P([1, -1]), 2), P([1, 2]))) == 2


def test_gcd_and_squarefree_part():
    a = poly_mul(P([1, -1]), P([1, 2]))
    b = poly_mul(P([1, -1]), P([1, -3]))
    assert poly_gcd(a, b) == P([1, -1])
    assert poly_gcd(poly_mul(IntPoly.const(-4), a), IntPoly.const(6) * b) == IntPoly.const(2) * P([1, -1])
    assert squarefree_part(poly_mul(poly_pow(P([1, -1]), 2), P([1, 2]))) == P([1, 1, -2])


def test_json_and_formatting():
    assert poly_to_json(Q0) == ["3", "-5", "1"]
    assert poly_from_json(["3", "-5", "1"]) == Q0
    assert poly_from_json([str(10**40), "1"]).coeffs[0] == 10**40
    assert format_poly(Q0) == "x^2 - 5*x + 3"
    assert format_poly(P([-1, 0, 2])) == "-x^2 + 2"
    assert format_poly(ZERO) == "0"
    with pytest.raises(ValueError):
        poly_from_json("x^2")
    with pytest.raises(ValueError):
        poly_from_json(["1.5"])


def test_linear_factor_resultants_grid():
    for a, b in itertools.product(range(-3, 4), repeat=2):
        assert resultant(P([1, -a]), P([1, -b])) == a - b
