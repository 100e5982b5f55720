import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotbands.algebra import LaurentPoly
from knotbands.invariants import (
    DEFAULT_SAMPLES,
    Omega,
    SignatureSample,
    alexander,
    alexander_cable2,
    alexander_satellite,
    arf,
    determinant_knot,
    levine_tristram,
    sigma_function,
    sigma_satellite,
    sigma_squared_compare,
    signature,
    torus2_alexander,
)
from knotbands.obstruct import random_unimodular
from knotbands.presets import get_preset

TREFOIL = get_preset("trefoil").seifert
FIGURE_EIGHT = get_preset("figure-eight").seifert
T25 = get_preset("t25").seifert
UNKNOT = get_preset("unknot").seifert

# every Hermitian evaluation of this matrix is singular: the first
# generator pairs to zero against everything
ALWAYS_SINGULAR = ((0, 0), (0, 1))


def conjugate(v, p):
    n = len(v)
    pv = [[sum(p[i][k] * v[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return tuple(
        tuple(sum(pv[i][k] * p[j][k] for k in range(n)) for j in range(n))
        for i in range(n)
    )


seifert_presets = st.sampled_from([TREFOIL, FIGURE_EIGHT, T25])


class TestOmega:
    def test_constructor_contracts(self):
        with pytest.raises(ValueError, match="unit circle"):
            Omega(Fraction(1, 2), Fraction(1, 2))
        with pytest.raises(ValueError, match="omega = 1 is excluded"):
            Omega(Fraction(1), Fraction(0))

    def test_from_s(self):
        assert Omega.from_s(Fraction(1, 2)) == Omega(Fraction(3, 5), Fraction(4, 5))
        assert Omega.from_s(1) == Omega(Fraction(0), Fraction(1))
        assert Omega.from_s(Fraction(1, 3)).s_param() == Fraction(1, 3)
        with pytest.raises(ValueError, match="omega = 1 is excluded"):
            Omega.from_s(0)  # s = 0 lands on the excluded point

    def test_squared(self):
        assert Omega.minus_one().squared() is None
        assert Omega.from_s(1).squared() == Omega.minus_one()
        w = Omega.from_s(Fraction(1, 2))
        assert w.squared() == Omega(Fraction(-7, 25), Fraction(24, 25))

    def test_labels(self):
        assert Omega.minus_one().label() == "omega=-1"
        assert Omega.from_s(Fraction(2, 3)).label() == "s=2/3"

    def test_json_round_trip(self):
        for w in DEFAULT_SAMPLES:
            assert Omega.from_json(w.to_json()) == w
        assert Omega.from_json({"omega": -1}) == Omega.minus_one()
        assert Omega.from_json({"s": "1/2"}) == Omega.from_s(Fraction(1, 2))

    def test_json_errors(self):
        with pytest.raises(ValueError, match="only omega = -1"):
            Omega.from_json({"omega": 2})
        with pytest.raises(ValueError, match="'omega' or 's'"):
            Omega.from_json({})

    def test_default_samples(self):
        assert [w.label() for w in DEFAULT_SAMPLES] == [
            "omega=-1", "s=1/2", "s=1/3", "s=2/3", "s=1/5", "s=3/5",
        ]

    @settings(max_examples=50)
    @given(
        st.fractions(min_value=Fraction(-50), max_value=Fraction(50)).filter(
            lambda s: s != 0
        )
    )
    def test_from_s_parametrization(self, s):
        w = Omega.from_s(s)
        assert w.cos ** 2 + w.sin ** 2 == 1
        assert w.s_param() == s
        assert Omega.from_json(w.to_json()) == w


class TestSignatureSample:
    def test_value_singular_coupling(self):
        with pytest.raises(ValueError, match="singular samples carry no value"):
            SignatureSample(Omega.minus_one(), None, False)
        with pytest.raises(ValueError, match="singular samples carry no value"):
            SignatureSample(Omega.minus_one(), -2, True)

    def test_to_json(self):
        assert SignatureSample(Omega.minus_one(), -2, False).to_json() == {
            "omega": -1,
            "value": -2,
        }
        assert SignatureSample(Omega.from_s(Fraction(1, 2)), None, True).to_json() == {
            "s": "1/2",
            "value": "singular",
        }


class TestAlexander:
    def test_fixtures(self):
        assert str(alexander(UNKNOT)) == "1"
        assert str(alexander(TREFOIL)) == "t^-1 - 1 + t"
        assert str(alexander(FIGURE_EIGHT)) == "-t^-1 + 3 - t"
        assert str(alexander(T25)) == "t^-2 - t^-1 + 1 - t + t^2"

    def test_normalization_properties(self):
        for v in (TREFOIL, FIGURE_EIGHT, T25):
            d = alexander(v)
            assert d.evaluate_int(1) == 1
            assert d == d.substitute(-1)  # t <-> 1/t symmetry

    def test_degenerate_presentations(self):
        with pytest.raises(ValueError, match="zero Alexander determinant"):
            alexander(ALWAYS_SINGULAR)
        with pytest.raises(ValueError, match="value 0 at t=1"):
            alexander(((1, 0), (0, 1)))
        with pytest.raises(ValueError, match="support cannot be centered"):
            alexander(((1,),))

    def test_rejects_nonsquare(self):
        with pytest.raises(ValueError, match="matrix must be square"):
            alexander(((1, 0),))

    @settings(max_examples=40, deadline=None)
    @given(seifert_presets, st.integers(0, 10 ** 6))
    def test_congruence_invariance(self, v, seed):
        p = random_unimodular(random.Random(seed), len(v))
        assert alexander(conjugate(v, p)) == alexander(v)


class TestSignature:
    def test_fixtures(self):
        assert signature(UNKNOT) == 0
        assert signature(TREFOIL) == -2
        assert signature(FIGURE_EIGHT) == 0
        assert signature(T25) == -4

    def test_mirror_negates(self):
        for v in (TREFOIL, T25):
            mirrored = tuple(tuple(-x for x in row) for row in v)
            assert signature(mirrored) == -signature(v)

    @settings(max_examples=40, deadline=None)
    @given(seifert_presets, st.integers(0, 10 ** 6))
    def test_congruence_invariance(self, v, seed):
        p = random_unimodular(random.Random(seed), len(v))
        assert signature(conjugate(v, p)) == signature(v)


class TestLevineTristram:
    def test_trefoil_table(self):
        expected = {
            "omega=-1": -2,
            "s=1/2": 0,
            "s=1/3": 0,
            "s=2/3": -2,
            "s=1/5": 0,
            "s=3/5": -2,
        }
        for w in DEFAULT_SAMPLES:
            sample = levine_tristram(TREFOIL, w)
            assert not sample.singular
            assert sample.value == expected[w.label()]

    def test_minus_one_matches_ordinary_signature(self):
        for v in (UNKNOT, TREFOIL, FIGURE_EIGHT, T25):
            assert levine_tristram(v, Omega.minus_one()).value == signature(v)

    def test_singular_detection(self):
        for w in DEFAULT_SAMPLES:
            sample = levine_tristram(ALWAYS_SINGULAR, w)
            assert sample.singular and sample.value is None

    def test_empty_matrix(self):
        sample = levine_tristram(UNKNOT, Omega.from_s(Fraction(1, 7)))
        assert (sample.value, sample.singular) == (0, False)

    def test_sigma_function_wraps(self):
        f = sigma_function(TREFOIL)
        assert f(Omega.minus_one()).value == -2

    @settings(max_examples=30, deadline=None)
    @given(seifert_presets, st.integers(0, 10 ** 6), st.sampled_from(DEFAULT_SAMPLES))
    def test_congruence_invariance(self, v, seed, w):
        p = random_unimodular(random.Random(seed), len(v))
        assert levine_tristram(conjugate(v, p), w).value == levine_tristram(v, w).value


class TestSigmaSquared:
    def test_trefoil_against_itself_fails(self):
        report = sigma_squared_compare(TREFOIL, TREFOIL)
        assert [e.status for e in report.entries] == [
            "skipped-singular", "disagree", "disagree", "agree", "agree", "agree",
        ]
        assert report.passed is False

    def test_unknot_self_comparison_passes(self):
        report = sigma_squared_compare(UNKNOT, UNKNOT)
        assert report.passed is True
        assert [e.status for e in report.entries] == (
            ["skipped-singular"] + ["agree"] * 5
        )

    def test_custom_samples(self):
        report = sigma_squared_compare(
            TREFOIL, TREFOIL, samples=[Omega.from_s(Fraction(2, 3))]
        )
        assert len(report.entries) == 1
        assert report.entries[0].status == "agree"
        assert report.entries[0].sigma_k == report.entries[0].sigma_j_squared == -2

    def test_singular_side_skips(self):
        report = sigma_squared_compare(ALWAYS_SINGULAR, TREFOIL)
        assert all(e.status == "skipped-singular" for e in report.entries)
        assert report.passed is True  # skips never obstruct

    def test_json_shape(self):
        data = sigma_squared_compare(UNKNOT, UNKNOT).to_json()
        assert set(data) == {"entries", "passed"}
        assert data["entries"][0] == {
            "omega": {"omega": -1},
            "sigma_k": None,
            "sigma_j_squared": None,
            "status": "skipped-singular",
        }


class TestTorusAndCables:
    def test_torus2_fixtures(self):
        assert str(torus2_alexander(1)) == "1"
        assert str(torus2_alexander(3)) == "t^-1 - 1 + t"
        assert str(torus2_alexander(5)) == "t^-2 - t^-1 + 1 - t + t^2"
        assert str(torus2_alexander(7)) == (
            "t^-3 - t^-2 + t^-1 - 1 + t - t^2 + t^3"
        )
        assert torus2_alexander(-3) == torus2_alexander(3)

    def test_torus2_rejects_even(self):
        with pytest.raises(ValueError, match="p must be odd"):
            torus2_alexander(4)

    def test_cable_fixtures(self):
        d = alexander(TREFOIL)
        assert str(alexander_cable2(d, 1)) == "t^-2 - 1 + t^2"
        assert str(alexander_cable2(d, -1)) == "t^-2 - 1 + t^2"
        assert str(alexander_cable2(d, 3)) == "t^-3 - t^-2 + 1 - t^2 + t^3"

    def test_satellite_fixtures(self):
        d_tref = alexander(TREFOIL)
        d_fig8 = alexander(FIGURE_EIGHT)
        assert str(alexander_satellite(d_fig8, d_tref)) == (
            "-t^-3 + 3t^-2 - 3 + 3t^2 - t^3"
        )
        assert alexander_satellite(LaurentPoly.one(), d_tref) == d_tref.substitute(2)

    def test_sigma_satellite_pointwise(self):
        combined = sigma_satellite(sigma_function(TREFOIL), sigma_function(TREFOIL))
        expected = {
            "omega=-1": None,
            "s=1/2": -2,
            "s=1/3": -2,
            "s=2/3": -4,
            "s=1/5": 0,
            "s=3/5": -4,
        }
        for w in DEFAULT_SAMPLES:
            sample = combined(w)
            assert sample.value == expected[w.label()]
            assert sample.singular == (sample.value is None)


class TestDeterminantAndArf:
    def test_determinant_fixtures(self):
        assert determinant_knot(seifert=UNKNOT) == 1
        assert determinant_knot(seifert=TREFOIL) == 3
        assert determinant_knot(seifert=FIGURE_EIGHT) == 5
        assert determinant_knot(seifert=T25) == 5

    def test_gl_variant(self):
        assert determinant_knot(gl=((3,),)) == 3
        assert determinant_knot(gl=((3, 1), (1, 2))) == 5
        for p in (1, 3, 5):
            assert determinant_knot(gl=((p, 0), (0, -p))) == p * p

    def test_exactly_one_source(self):
        with pytest.raises(ValueError, match="exactly one"):
            determinant_knot()
        with pytest.raises(ValueError, match="exactly one"):
            determinant_knot(seifert=TREFOIL, gl=((3,),))

    def test_arf_fixtures(self):
        assert arf(UNKNOT) == 0
        assert arf(TREFOIL) == 1
        assert arf(FIGURE_EIGHT) == 1
        assert arf(T25) == 1

    def test_arf_from_polynomial(self):
        assert arf(torus2_alexander(7)) == 0
        assert arf(alexander(TREFOIL)) == 1

    @settings(max_examples=40, deadline=None)
    @given(seifert_presets, st.integers(0, 10 ** 6))
    def test_det_and_arf_congruence_invariant(self, v, seed):
        p = random_unimodular(random.Random(seed), len(v))
        w = conjugate(v, p)
        assert determinant_knot(seifert=w) == determinant_knot(seifert=v)
        assert arf(w) == arf(v)
