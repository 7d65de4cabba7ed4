"""Unit and property tests for the exact C_n representation arithmetic."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bredon.rep_cn import (
    ComplexRep,
    IrredComplex,
    QuatRep,
    classify_type,
    divisors,
    extend,
    fixed_dim_profile,
    isotypical_dim_complex,
    isotypical_dim_quat,
    reduce_quat_index,
    restrict_quat,
    restrict_subgroup,
    tensor_phi,
    tensor_phi_fixed_dim,
)


def brute_force_tensor_multiplicity(n: int, k: int, v: ComplexRep, r: int) -> int:
    """Independent oracle: expand the tensor product summand by summand
    (index k plus index s lands at index k + s) and count index r."""
    count = 0
    for s, mult in enumerate(v.mult):
        for _ in range(mult):
            if (k + s - r) % n == 0:
                count += 1
    return count


def brute_force_fixed_dim(v: ComplexRep, d: int) -> Fraction:
    """Independent oracle for the fixed dimension under the subgroup of
    divisor d: average of exact character values over the subgroup,
    computed with sympy's symbolic roots of unity."""
    import sympy

    n = v.n
    h = n // d  # subgroup order
    total = sympy.Integer(0)
    for j in range(h):
        # character of the realified representation at the group element
        # that is the (d*j)-th power of the generator
        value = sympy.Integer(0)
        for r, mult in enumerate(v.mult):
            angle = sympy.Rational(2 * r * d * j, n)
            value += 2 * mult * sympy.cos(angle * sympy.pi)
        total += value
    result = sympy.simplify(total / h)
    return Fraction(int(result), 1)


class TestIndexNormalization:
    def test_complex_index_reduced_on_construction(self):
        assert IrredComplex(3, 4).r == 1
        assert IrredComplex(3, -1).r == 2

    def test_complex_conjugate(self):
        phi = IrredComplex(5, 2)
        assert phi.conjugate().r == 3
        assert phi.conjugate().conjugate() == phi

    def test_quat_index_reduced_on_construction(self):
        from bredon.rep_cn import IrredQuat

        assert IrredQuat(3, 2).r == 1
        assert IrredQuat(5, 8).r == 2
        assert IrredQuat(4, 3).r == 1

    def test_order_cap(self):
        import bredon.rep_cn as rep_cn

        with pytest.raises(ValueError):
            ComplexRep.zero(rep_cn.MAX_ORDER + 1)


class TestExamples:
    def test_classify_type(self):
        assert classify_type(IrredComplex(2, 0)) == "real"
        assert classify_type(IrredComplex(2, 1)) == "real"
        assert classify_type(IrredComplex(3, 1)) == "complex"
        assert classify_type(IrredComplex(4, 2)) == "real"
        assert classify_type(IrredComplex(1, 0)) == "real"

    def test_extend_reduces_index(self):
        # extension of index 2 over C_3 is the quaternionic irreducible of
        # index 1 because 2 = -1 mod 3
        assert extend(ComplexRep.of(3, 2)) == QuatRep.of(3, 1)

    def test_extend_componentwise(self):
        assert extend(ComplexRep.of(2, 0, 1)) == QuatRep.of(2, 0, 1)

    def test_extend_multiplicity(self):
        # frozen from a character comparison: two copies of index 3 over
        # C_5 extend to two copies of quaternionic index 2
        got = extend(ComplexRep.of(5, 3, 3))
        assert got == QuatRep.of(5, 2, 2)
        assert got.dim() == 2 * ComplexRep.of(5, 3, 3).dim()

    def test_restrict_quat(self):
        assert restrict_quat(QuatRep.of(2, 1)).mult == (0, 2)
        assert restrict_quat(QuatRep.of(3, 1)).mult == (0, 1, 1)
        assert restrict_quat(QuatRep.of(4, 2)).mult == (0, 0, 2, 0)

    def test_restrict_subgroup(self):
        assert restrict_subgroup(ComplexRep.of(6, 2), 2) == ComplexRep.of(3, 2)
        assert restrict_subgroup(ComplexRep.of(6, 4), 3) == ComplexRep.of(2, 0)
        got = restrict_subgroup(ComplexRep.of(4, 0, 1, 2, 3), 2)
        assert got == ComplexRep(2, (2, 2))

    def test_restrict_subgroup_rejects_nondivisor(self):
        with pytest.raises(ValueError):
            restrict_subgroup(ComplexRep.of(6, 1), 4)

    def test_isotypical_dim_complex(self):
        assert isotypical_dim_complex(QuatRep.of(2, 0, 1), 1) == 4
        assert isotypical_dim_complex(QuatRep.of(3, 0, 1), 1) == 2
        assert isotypical_dim_complex(QuatRep.zero(3), 0) == 0

    def test_tensor_phi_fixed_dim(self):
        assert tensor_phi_fixed_dim(1, ComplexRep.of(3, 2)) == 2
        assert tensor_phi_fixed_dim(0, ComplexRep.of(3, 1, 2)) == 0
        # frozen from the brute-force expansion of (index 3) x (4 copies
        # of index 2) over C_5: all four summands land at index 0
        assert tensor_phi_fixed_dim(3, ComplexRep(5, (0, 0, 4, 0, 0))) == 8

    def test_fixed_dim_profile(self):
        assert fixed_dim_profile(ComplexRep.of(2, 0, 1)) == {1: 2, 2: 4}
        assert fixed_dim_profile(ComplexRep.of(4, 2)) == {1: 0, 2: 2, 4: 2}
        assert fixed_dim_profile(ComplexRep.zero(3)) == {1: 0, 3: 0}


class TestAgainstIndependentOracles:
    def test_tensor_shift_identity_brute_force(self):
        # multiplicity of index r in (index k) x v equals v's multiplicity
        # at r - k, verified against summand-by-summand expansion
        for n in range(1, 9):
            v = ComplexRep(n, tuple((3 * i + 1) % 4 for i in range(n)))
            for k in range(n):
                product = tensor_phi(k, v)
                for r in range(n):
                    assert product.mult[r] == brute_force_tensor_multiplicity(
                        n, k, v, r
                    )
                    assert product.mult[r] == v.mult[(r - k) % n]

    def test_fixed_dims_against_character_averages(self):
        cases = [
            ComplexRep.of(2, 0, 1),
            ComplexRep.of(3, 1, 2, 2),
            ComplexRep.of(4, 0, 1, 2, 3),
            ComplexRep.of(6, 2, 3, 5),
            ComplexRep(5, (1, 0, 2, 0, 1)),
        ]
        for v in cases:
            profile = fixed_dim_profile(v)
            for d in divisors(v.n):
                assert profile[d] == brute_force_fixed_dim(v, d)


@st.composite
def complex_reps(draw, max_n=12, max_total=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    total = draw(st.integers(min_value=0, max_value=max_total))
    mult = [0] * n
    for _ in range(total):
        mult[draw(st.integers(min_value=0, max_value=n - 1))] += 1
    return ComplexRep(n, tuple(mult))


@st.composite
def quat_reps(draw, max_n=12, max_total=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    total = draw(st.integers(min_value=0, max_value=max_total))
    mult = [0] * (n // 2 + 1)
    for _ in range(total):
        mult[draw(st.integers(min_value=0, max_value=n // 2))] += 1
    return QuatRep(n, tuple(mult))


class TestInvariants:
    @given(complex_reps())
    @settings(max_examples=150)
    def test_round_trip_is_self_plus_conjugate(self, v):
        assert restrict_quat(extend(v)) == v + v.conjugate()

    @given(quat_reps())
    @settings(max_examples=150)
    def test_dimension_conservation(self, w):
        total = sum(isotypical_dim_quat(w, r) for r in range(w.n // 2 + 1))
        assert total == w.dim() == 4 * sum(w.mult)

    @given(quat_reps())
    @settings(max_examples=150)
    def test_restriction_preserves_dimension(self, w):
        assert restrict_quat(w).dim() == w.dim()

    @given(quat_reps())
    @settings(max_examples=150)
    def test_trivial_subgroup_fixes_everything(self, w):
        profile = fixed_dim_profile(restrict_quat(w))
        assert profile[w.n] == w.dim()

    @given(complex_reps())
    @settings(max_examples=150)
    def test_profile_monotone_under_divisor_refinement(self, v):
        # a larger subgroup fixes no more: divisor d | d' means the
        # subgroup for d contains the one for d'
        profile = fixed_dim_profile(v)
        for d in divisors(v.n):
            for d2 in divisors(v.n):
                if d2 % d == 0:
                    assert profile[d] <= profile[d2]

    @given(complex_reps(), st.integers(min_value=-20, max_value=20))
    @settings(max_examples=150)
    def test_tensor_preserves_dimension(self, v, k):
        assert tensor_phi(k, v).dim() == v.dim()

    @given(quat_reps(), st.integers(min_value=-20, max_value=20))
    @settings(max_examples=150)
    def test_complex_isotypical_halving(self, w, r):
        dim_h = isotypical_dim_quat(w, r)
        dim_c = isotypical_dim_complex(w, r)
        if (2 * r) % w.n == 0:
            assert dim_c == dim_h
        else:
            assert 2 * dim_c == dim_h

    @given(st.integers(min_value=1, max_value=30), st.integers(min_value=-60, max_value=60))
    @settings(max_examples=200)
    def test_quat_index_reduction(self, n, r):
        reduced = reduce_quat_index(n, r)
        assert 0 <= reduced <= n // 2
        assert (r - reduced) % n == 0 or (r + reduced) % n == 0
