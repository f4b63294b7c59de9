"""Field arithmetic: table construction and the field axioms."""

import numpy as np
import pytest

from footprint_lab.errors import (BadEncoding, CapExceeded, DivisionByZero,
                                  NotPrimePower)
from footprint_lab.gf import enumerate_field, field_arith, make_field


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms_exhaustive(q):
    f = make_field(q)
    els = f.elements()
    assert els == list(range(q))
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
    # associativity and distributivity on the full cube
    for a in els:
        for b in els:
            for c in els:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11])
def test_prime_field_is_mod_p(q):
    f = make_field(q)
    for a in range(q):
        for b in range(q):
            assert f.add(a, b) == (a + b) % q
            assert f.mul(a, b) == (a * b) % q


def test_f4_multiplication_table():
    f = make_field(4)
    assert f.p == 2 and f.e == 2
    # encodings 2 and 3 are the two roots of the modulus x^2 + x + 1
    assert f.modulus == (1, 1, 1)
    assert f.mul(2, 2) == 3
    assert f.mul(3, 3) == 2
    assert f.mul(2, 3) == 1
    assert f.add(2, 3) == 1
    for a in (1, 2, 3):
        assert f.pow(a, 3) == 1


def test_extension_moduli_are_lex_smallest():
    assert make_field(8).modulus == (1, 1, 0, 1)   # x^3 + x + 1
    assert make_field(9).modulus == (1, 0, 1)      # x^2 + 1
    assert make_field(2).modulus == ()
    assert make_field(25).modulus == (2, 0, 1)     # x^2 + 2


@pytest.mark.parametrize("q", [4, 8, 9, 27])
def test_frobenius(q):
    f = make_field(q)
    p = f.p
    for a in range(q):
        for b in range(q):
            assert f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p))


@pytest.mark.parametrize("q", [3, 4, 8, 9])
def test_generator_has_full_order(q):
    f = make_field(q)
    seen = set()
    x = 1
    for _ in range(q - 1):
        seen.add(x)
        x = f.mul(x, f.generator)
    assert x == 1 and len(seen) == q - 1


def test_pow_conventions():
    f = make_field(9)
    assert f.pow(0, 0) == 1
    assert f.pow(0, 5) == 0
    with pytest.raises(DivisionByZero):
        f.pow(0, -1)
    with pytest.raises(DivisionByZero):
        f.inv(0)
    for a in range(1, 9):
        assert f.pow(a, 8) == 1
        assert f.pow(a, -1) == f.inv(a)


def test_pow_table_matches_pow():
    f = make_field(4)
    t = f.pow_table(5)
    assert t.shape == (4, 6)
    for a in range(4):
        for k in range(6):
            assert int(t[a, k]) == f.pow(a, k)


def test_bad_sizes():
    with pytest.raises(NotPrimePower):
        make_field(6)
    with pytest.raises(NotPrimePower):
        make_field(1)
    with pytest.raises(NotPrimePower):
        make_field(12)
    with pytest.raises(CapExceeded):
        make_field(128)
    make_field(64)  # the cap itself is allowed


def test_bad_encodings():
    f = make_field(5)
    for bad in (-1, 5, 3.0, "3", True):
        with pytest.raises(BadEncoding):
            f.add(bad, 1)


def test_field_arith_dispatch():
    f = make_field(4)
    assert field_arith(f, "add", 2, 3) == 1
    assert field_arith(f, "sub", 2, 3) == f.sub(2, 3)
    assert field_arith(f, "mul", 2, 2) == 3
    assert field_arith(f, "div", 1, 2) == f.inv(2)
    assert field_arith(f, "neg", 3) == 3  # characteristic 2
    assert field_arith(f, "inv", 3) == f.inv(3)
    assert field_arith(f, "pow", 2, 2) == 3
    with pytest.raises(ValueError):
        field_arith(f, "gcd", 2, 3)


def test_enumerate_field():
    assert enumerate_field(make_field(7)) == list(range(7))
    assert enumerate_field(make_field(9)) == list(range(9))


def test_tables_are_numpy():
    f = make_field(8)
    assert isinstance(f.add_table, np.ndarray)
    assert f.add_table.shape == (8, 8)
    assert f.mul_table.shape == (8, 8)
    # the exp/log tables invert each other away from 0
    for a in range(1, 8):
        assert int(f.exp_table[int(f.log_table[a])]) == a
