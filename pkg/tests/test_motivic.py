import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motivic_betti.hilb import HilbCache
from motivic_betti.motivic import (
    DEFAULT_CONSTANTS,
    ChainConstants,
    MotivicClass,
    PvFraction,
    affine,
    congruent_mod_dim,
    correction_polynomial,
    gl,
    hilb_class,
    projective,
    pv_degree,
    verify_congruence_chain,
    virtual_poincare,
)
from motivic_betti.series import NEG_INF, IntPoly


def L_poly(*coeffs):
    return MotivicClass(IntPoly(coeffs))


class TestRingOps:
    def test_cancellation(self):
        # (L+1)(L-1)/(L-1) == L+1
        frac = MotivicClass(IntPoly([1, 1]) * IntPoly([-1, 1]), den=(1,))
        assert frac == L_poly(1, 1)

    def test_additive_inverse(self):
        x = MotivicClass(IntPoly([2, 0, 5]), lshift=1, den=(2,))
        assert (x + (-x)).is_zero
        assert x + (-x) == MotivicClass(0)

    def test_power_law(self):
        assert affine(2) * affine(3) == affine(5)

    def test_negative_affine(self):
        assert affine(-2) * affine(5) == affine(3)

    def test_scalar_multiplication(self):
        assert 3 * projective(1) == projective(1) + projective(1) + projective(1)

    def test_div_appends_denominator(self):
        x = L_poly(-1, 1)  # L - 1
        assert x.div(1) == MotivicClass(1)


class TestConstructors:
    def test_projective_small(self):
        assert projective(0) == MotivicClass(1)
        assert projective(1) == L_poly(1, 1)
        assert projective(2) == L_poly(1, 1, 1)

    def test_projective_cell_sum(self):
        for n in range(6):
            cells = MotivicClass(IntPoly([1] * (n + 1)))
            assert projective(n) == cells

    def test_projective_times_l_minus_one(self):
        for n in range(6):
            lhs = L_poly(-1, 1) * projective(n)
            assert lhs == MotivicClass(IntPoly([-1] + [0] * n + [1]))

    def test_gl1(self):
        assert gl(1) == L_poly(-1, 1)

    def test_gl2(self):
        assert gl(2) == L_poly(0, 1, -1, -1, 1)

    def test_hilb_class_small(self):
        assert hilb_class(0) == MotivicClass(1)
        assert hilb_class(1) == projective(2)
        assert hilb_class(2) == L_poly(1, 2, 3, 2, 1)

    def test_gl_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            gl(0)


class TestVirtualPoincare:
    def test_lefschetz_is_z_squared(self):
        assert virtual_poincare(affine(1)) == PvFraction(IntPoly([0, 0, 1]), IntPoly.one())

    def test_projective_plane(self):
        pv = virtual_poincare(projective(2))
        assert pv.as_polynomial() == IntPoly([1, 0, 1, 0, 1])

    def test_gl1(self):
        pv = virtual_poincare(gl(1))
        assert pv == PvFraction(IntPoly([-1, 0, 1]), IntPoly.one())
        assert pv.degree == 2

    def test_degrees(self):
        assert pv_degree(affine(4)) == 8
        assert pv_degree(projective(4)) == 8
        assert pv_degree(hilb_class(3)) == 12

    @pytest.mark.parametrize("n", range(1, 5))
    def test_gl_degree_is_twice_dimension(self, n):
        assert pv_degree(gl(n)) == 2 * n * n

    def test_zero_class_degree_sentinel(self):
        z = projective(2) + (-projective(2))
        assert pv_degree(z) == NEG_INF
        assert pv_degree(z) < -(10**9)

    def test_negative_lshift_stays_polynomial(self):
        pv = virtual_poincare(MotivicClass(IntPoly.one(), lshift=-3))
        assert pv.as_polynomial() == IntPoly.monomial(6)


class TestCongruence:
    def test_equal_classes_any_bound(self):
        a = projective(3)
        assert congruent_mod_dim(a, a, 0)

    def test_affine_three(self):
        zero = MotivicClass(0)
        assert congruent_mod_dim(affine(3), zero, 3)
        assert not congruent_mod_dim(affine(3), zero, 2)

    def test_projective_minus_affine(self):
        # difference is [P^1], dimension 1
        assert congruent_mod_dim(projective(2), affine(2), 1)
        assert not congruent_mod_dim(projective(2), affine(2), 0)


# ---------------------------------------------------------------------------
# Random-class properties
# ---------------------------------------------------------------------------

polys = st.lists(st.integers(min_value=-5, max_value=5), max_size=6).map(IntPoly)
dens = st.lists(st.integers(min_value=1, max_value=4), max_size=3).map(tuple)
classes = st.builds(
    MotivicClass,
    num=polys,
    lshift=st.integers(min_value=-3, max_value=3),
    den=dens,
)


def _same_class_variant(c, j, k):
    """A different representation of the same class."""
    scaled = MotivicClass(
        c.num * IntPoly([-1] + [0] * (j - 1) + [1]) * IntPoly.monomial(k),
        c.lshift + k,
        c.den + (j,),
    )
    return scaled


@given(classes, st.integers(1, 4), st.integers(0, 3), st.integers(1, 4))
def test_equality_is_equivalence(c, j, k, j2):
    a = _same_class_variant(c, j, k)
    b = _same_class_variant(c, j2, 0)
    assert c == c
    assert a == c and c == a
    assert b == c
    assert a == b  # transitivity through c


@given(classes, classes, st.integers(1, 4), st.integers(0, 3))
def test_ops_respect_equality(x, y, j, k):
    x2 = _same_class_variant(x, j, k)
    assert x + y == x2 + y
    assert x * y == x2 * y


@settings(max_examples=100)
@given(classes, classes)
def test_virtual_poincare_is_ring_homomorphism(a, b):
    assert virtual_poincare(a * b) == virtual_poincare(a) * virtual_poincare(b)
    assert virtual_poincare(a + b) == virtual_poincare(a) + virtual_poincare(b)


@given(classes, classes)
def test_pv_degree_additive(a, b):
    if a.is_zero or b.is_zero:
        assert pv_degree(a * b) == NEG_INF
    else:
        assert pv_degree(a * b) == pv_degree(a) + pv_degree(b)


# ---------------------------------------------------------------------------
# The congruence chain
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def cache():
    return HilbCache()


class TestCongruenceChain:
    def test_d5_passes(self, cache):
        report = verify_congruence_chain(5, cache)
        assert report.all_pass
        assert [c.name for c in report.checks] == [
            "collapse_sum",
            "close_up",
            "extract_corrections",
        ]

    def test_d5_correction_coefficients(self, cache):
        poly = correction_polynomial(5, cache)
        assert poly.degree == 44
        assert poly[44] == 3
        assert poly[42] == 12

    def test_d5_close_up_degree_bound(self, cache):
        # the difference across the close_up step has pv degree <= 2(d^2-d)
        d = 5
        n1 = (d - 1) * (d - 2) // 2 + 1
        x = projective(2) * hilb_class(n1, cache)
        lhs = (3 * (affine(2 * d - 3) * x)).div(1)
        rhs = 3 * (projective(2 * d - 4) * x)
        diff = lhs - rhs
        assert pv_degree(diff) <= 40

    @pytest.mark.parametrize(
        "name", ["multiplier", "double_coeff", "expected_top", "expected_subtop"]
    )
    def test_mutations_fail(self, cache, name):
        constants = DEFAULT_CONSTANTS.mutated(name)
        report = verify_congruence_chain(5, cache, constants)
        assert not report.all_pass, name

    def test_unknown_mutation_rejected(self):
        with pytest.raises(ValueError):
            DEFAULT_CONSTANTS.mutated("bogus")

    def test_report_serialization(self, cache):
        report = verify_congruence_chain(5, cache)
        obj = report.to_json_obj()
        assert obj["d"] == "5"
        assert obj["all_pass"] is True
        assert len(obj["checks"]) == 3
        first = obj["checks"][0]
        assert set(first) == {"name", "pass", "lhs_pv", "rhs_pv", "bound"}
        assert first["bound"] == str(2 * (25 + 1 - 5))

    def test_failing_report_carries_both_sides(self, cache):
        report = verify_congruence_chain(
            5, cache, ChainConstants(expected_top=4)
        )
        bad = report.failing()
        assert [c.name for c in bad] == ["extract_corrections"]
        assert "z^44" in bad[0].lhs_pv
        assert "4*z^44" in bad[0].rhs_pv
