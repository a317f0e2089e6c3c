from hypothesis import given, strategies as st

from bruhatlab.poly import IntPolynomial, is_palindromic

coeffs = st.lists(st.integers(-5, 5), max_size=6)


def test_rendering_and_evaluation():
    p = IntPolynomial([1, 3, 5, 4, 1])
    assert str(p) == "1 + 3q + 5q^2 + 4q^3 + q^4"
    assert p(1) == 14 and p.degree == 4
    assert str(IntPolynomial([])) == "0"


def test_palindromes():
    assert is_palindromic(IntPolynomial.chain(4))
    assert not IntPolynomial([1, 3, 5, 4, 1]).is_palindromic()


def test_exact_division():
    p = IntPolynomial([1, 2, 2, 1])
    assert p.exact_quotient(IntPolynomial([1, 1])) == IntPolynomial([1, 1, 1])
    assert p.exact_quotient(IntPolynomial([1, 0, 1])) is None


@given(coeffs, coeffs)
def test_product_division_roundtrip(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b + [1])
    assert (p * q).exact_quotient(q) == p
    assert (p + q)(2) == p(2) + q(2)
