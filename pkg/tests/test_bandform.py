import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotbands.bandform import (
    BandSurface,
    MultipleBoundaryError,
    NormalFormError,
    NotOrientableError,
    RouteEvent,
    boundary_connect_sum,
    boundary_walk,
    compile_curves,
    core_route,
    core_writhe,
    framing,
    gamma_curve,
    gl_form,
    interleave_data,
    klein_bottle_for_cables,
    mirror_core,
    mobius_band,
    seifert_matrix,
    shape,
    surgery_shape,
    validate_surface,
    zero_framing_stabilize,
)
from knotbands.diagram import validate as validate_diagram
from knotbands.obstruct import random_band_surface, random_core, random_normal_form
from knotbands.presets import get_preset

TREFOIL_CORE = core_route([(0, 3, 1), (4, 1, 1), (2, 5, 1)])


def mobius(h):
    return BandSurface.build([h], [(0, "A"), (0, "B")])


def two_bands(h0, h1, interleaved, events=()):
    attach = (
        [(0, "A"), (1, "A"), (0, "B"), (1, "B")]
        if interleaved
        else [(0, "A"), (0, "B"), (1, "A"), (1, "B")]
    )
    return BandSurface.build([h0, h1], attach, events)


# the standard punctured Klein bottle piece: one odd and one even band,
# interleaved, with the single disk-forced crossing compensated
def klein_piece(h_odd=1, h_even=0):
    return two_bands(h_odd, h_even, True, [((1, 0), (0, 0), 1)])


class TestBoundaryWalk:
    def test_disk(self):
        assert boundary_walk(BandSurface.build([], [])) == (((),), 1)

    def test_mobius_single_boundary(self):
        walks, count = boundary_walk(mobius(1))
        assert count == 1
        steps = walks[0]
        assert len(steps) == 4  # two arcs, two passes over the band
        assert {s[0] for s in steps} == {"arc", "band"}

    def test_annulus_two_boundaries(self):
        _, count = boundary_walk(mobius(0))
        assert count == 2
        _, count = boundary_walk(mobius(2))
        assert count == 2

    def test_separated_bands_two_boundaries(self):
        _, count = boundary_walk(two_bands(1, 0, False))
        assert count == 2

    def test_interleaved_bands_single_boundary(self):
        _, count = boundary_walk(klein_piece())
        assert count == 1

    def test_alternates_arcs_and_bands(self):
        for F in (mobius(3), klein_piece(), get_preset("t25").orientable_surface):
            walks, _ = boundary_walk(F)
            for w in walks:
                kinds = [s[0] for s in w]
                for a, b in zip(kinds, kinds[1:] + kinds[:1]):
                    assert {a, b} == {"arc", "band"}


class TestShape:
    def test_fixtures(self):
        disk = shape(BandSurface.build([], []))
        assert (disk.orientable, disk.genus, disk.euler) == (True, 0, 1)
        mb = shape(mobius(1))
        assert (mb.orientable, mb.genus, mb.euler) == (False, 1, 0)
        tref = shape(get_preset("trefoil").orientable_surface)
        assert (tref.orientable, tref.genus, tref.euler) == (True, 1, -1)
        t25 = shape(get_preset("t25").orientable_surface)
        assert (t25.orientable, t25.genus, t25.euler) == (True, 2, -3)
        kb = shape(klein_piece())
        assert (kb.orientable, kb.genus, kb.euler) == (False, 2, -1)
        assert kb.boundary_components == 1

    def test_multiple_boundary_rejected(self):
        with pytest.raises(MultipleBoundaryError, match="multiple boundary components"):
            shape(two_bands(1, 0, False))

    def test_invalid_surface_rejected(self):
        bad = BandSurface.build([1, 1], [(0, "A"), (0, "B"), (1, "A"), (1, "B")],
                                [((0, 0), (0, 0), 1)])
        with pytest.raises(ValueError, match="invalid surface"):
            shape(bad)


class TestValidate:
    def test_presets_clean(self):
        for name in ("unknot", "trefoil", "figure-eight", "t25"):
            pk = get_preset(name)
            assert validate_surface(pk.orientable_surface) == []
            assert validate_surface(pk.nonorientable_surface) == []

    def test_attach_problems(self):
        F = BandSurface.build([1], [(0, "A")])
        assert any("attach has length" in p for p in validate_surface(F))
        F = BandSurface.build([1], [(0, "A"), (0, "A")])
        assert any("attached more than once" in p for p in validate_surface(F))
        F = BandSurface.build([1], [(0, "A"), (1, "B")])
        assert any("out of range" in p for p in validate_surface(F))

    def test_route_problems(self):
        F = BandSurface.build([1], [(0, "A"), (0, "B")], [((0, 0), (0, 0), 1)])
        assert any("crosses a slot with itself" in p for p in validate_surface(F))
        F = BandSurface.build([1], [(0, "A"), (0, "B")], [((0, 0), (0, 1), 2)])
        assert any("has sign" in p for p in validate_surface(F))
        F = BandSurface.build(
            [1, 1],
            [(0, "A"), (0, "B"), (1, "A"), (1, "B")],
            [((0, 0), (1, 0), 1), ((0, 0), (1, 1), -1)],
        )
        assert any("used twice as over" in p for p in validate_surface(F))

    def test_disk_forced_crossing_balance(self):
        # interleaved pair with no compensating event is unrealizable
        F = two_bands(1, 0, True)
        problems = validate_surface(F)
        assert any("unbalanced" in p for p in problems)
        assert validate_surface(klein_piece()) == []
        # and a canceling pair keeps a separated pair balanced
        F = two_bands(1, 0, False, [((0, 0), (1, 0), 1), ((0, 1), (1, 1), -1)])
        assert validate_surface(F) == []

    def test_interleave_data(self):
        data = interleave_data(two_bands(1, 0, True))
        assert data[(0, 1)][0] is True
        data = interleave_data(two_bands(1, 0, False))
        assert data[(0, 1)][0] is False


class TestFraming:
    def test_mobius_twist_fixtures(self):
        for h in (-7, -5, -3, -1, 1, 3, 5, 7):
            assert framing(mobius(h)) == 2 * h

    def test_preset_fixtures(self):
        for name, f in (("unknot", 2), ("trefoil", 6), ("figure-eight", 4), ("t25", 10)):
            assert framing(get_preset(name).nonorientable_surface) == f

    def test_orientable_is_zero(self):
        for name in ("trefoil", "figure-eight", "t25"):
            assert framing(get_preset(name).orientable_surface) == 0

    def test_knotted_core_compensation(self):
        # a core with writhe w contributes 4w, so the band must give up 2w
        # half-twists to keep the same boundary framing
        raw = BandSurface.build([1], [(0, "A"), (0, "B")], TREFOIL_CORE)
        assert framing(raw) == 2 + 4 * core_writhe(TREFOIL_CORE)
        assert framing(mobius_band(TREFOIL_CORE, 1)) == 2
        assert framing(mobius_band(TREFOIL_CORE, -3)) == -6

    def test_mirror_core_negates_writhe(self):
        assert core_writhe(TREFOIL_CORE) == 3
        assert core_writhe(mirror_core(TREFOIL_CORE)) == -3
        assert framing(mobius_band(mirror_core(TREFOIL_CORE), 5)) == 10


class TestCompile:
    def test_boundary_and_longitude(self):
        cc = compile_curves(mobius(1), ["K", "lambda"])
        assert validate_diagram(cc.diagram) == []
        assert cc.linking("K", "lambda") == framing(mobius(1))

    def test_core_and_tau_give_gl(self):
        F = get_preset("figure-eight").nonorientable_surface
        cc = compile_curves(F, [("core", 0), ("core", 1), ("tau", 0), ("tau", 1)])
        G = gl_form(F)
        assert cc.linking(("core", 0), ("tau", 1)) == G[0][1]
        assert cc.linking(("core", 1), ("tau", 0)) == G[1][0]

    def test_error_contracts(self):
        mob = mobius(1)
        with pytest.raises(ValueError, match="does not close up"):
            compile_curves(mob, [("pushoff", 0, 1)])
        with pytest.raises(ValueError, match="pushoff side"):
            compile_curves(klein_piece(), [("pushoff", 1, 2)])
        with pytest.raises(NormalFormError, match="gamma unavailable"):
            compile_curves(mob, ["gamma"])
        with pytest.raises(ValueError, match="duplicate curve request"):
            compile_curves(mob, ["K", "K"])
        with pytest.raises(ValueError, match="unknown curve request"):
            compile_curves(mob, ["Q"])
        with pytest.raises(ValueError, match="no band"):
            compile_curves(mob, [("core", 3)])


class TestSeifert:
    def test_preset_matrices(self):
        for name in ("trefoil", "figure-eight", "t25"):
            pk = get_preset(name)
            assert seifert_matrix(pk.orientable_surface) == pk.seifert

    def test_disk_is_empty(self):
        assert seifert_matrix(BandSurface.build([], [])) == ()

    def test_rejects_nonorientable(self):
        with pytest.raises(NotOrientableError, match="surface not orientable"):
            seifert_matrix(mobius(1))


class TestGlForm:
    def test_preset_matrices(self):
        for name in ("unknot", "trefoil", "figure-eight", "t25"):
            pk = get_preset(name)
            assert gl_form(pk.nonorientable_surface) == pk.gl_nonorientable

    def test_orientable_symmetrizes_seifert(self):
        for name in ("trefoil", "figure-eight", "t25"):
            pk = get_preset(name)
            v = pk.seifert
            n = len(v)
            sym = tuple(
                tuple(v[i][j] + v[j][i] for j in range(n)) for i in range(n)
            )
            assert gl_form(pk.orientable_surface) == sym

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_always_symmetric(self, seed):
        F = random_band_surface(random.Random(seed), max_bands=4, max_events=8)
        G = gl_form(F)
        assert all(G[i][j] == G[j][i] for i in range(len(G)) for j in range(len(G)))


class TestGamma:
    def test_framing_is_four_times_self_linking(self):
        F = get_preset("figure-eight").nonorientable_surface
        g = gamma_curve(F)
        assert g.self_linking == 1
        assert framing(F) == 4

    def test_zero_framed_bottle(self):
        F = klein_piece()
        assert framing(F) == 0
        assert gamma_curve(F).self_linking == 0

    def test_rejects_non_normal_forms(self):
        with pytest.raises(NormalFormError, match="positive even number"):
            gamma_curve(mobius(1))
        with pytest.raises(NormalFormError, match="exactly one odd-twisted band"):
            gamma_curve(two_bands(0, 2, True, [((1, 0), (0, 0), 1)]))
        with pytest.raises(NormalFormError, match="must attach bands"):
            gamma_curve(
                BandSurface.build(
                    [1, 0],
                    [(0, "A"), (1, "B"), (0, "B"), (1, "A")],
                    [((0, 0), (1, 0), 1)],
                )
            )

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10 ** 6), st.booleans())
    def test_law_on_random_normal_forms(self, seed, force_zero):
        F = random_normal_form(random.Random(seed), force_zero_framing=force_zero)
        f = framing(F)
        sl = gamma_curve(F).self_linking
        assert f == 4 * sl
        assert (f == 0) == (sl == 0)


class TestSums:
    def test_connect_sum_adds_framing_and_blocks(self):
        a = get_preset("trefoil").nonorientable_surface
        b = get_preset("figure-eight").nonorientable_surface
        s = boundary_connect_sum(a, b)
        assert validate_surface(s) == []
        assert framing(s) == framing(a) + framing(b)
        ga, gb, gs = gl_form(a), gl_form(b), gl_form(s)
        na = len(ga)
        assert all(gs[i][j] == ga[i][j] for i in range(na) for j in range(na))
        assert all(
            gs[na + i][na + j] == gb[i][j]
            for i in range(len(gb))
            for j in range(len(gb))
        )
        assert all(gs[i][na + j] == 0 for i in range(na) for j in range(len(gb)))
        sh = shape(s)
        assert sh.genus == shape(a).genus + shape(b).genus
        assert sh.boundary_components == 1

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_connect_sum_random(self, seed):
        rng = random.Random(seed)
        a = random_band_surface(rng, max_bands=3, max_events=6)
        b = random_band_surface(rng, max_bands=3, max_events=6)
        s = boundary_connect_sum(a, b)
        assert validate_surface(s) == []
        assert framing(s) == framing(a) + framing(b)

    def test_zero_framing_stabilize(self):
        F = zero_framing_stabilize(mobius(3))
        assert framing(F) == 0
        assert validate_surface(F) == []
        assert shape(F).genus == 1 + 3  # three compensating cross caps
        already = klein_piece()
        assert zero_framing_stabilize(already) == already


class TestSurgery:
    def test_klein_bottle_becomes_disk(self):
        after = surgery_shape(shape(klein_piece()), True)
        assert (after.orientable, after.genus, after.euler) == (True, 0, 1)

    def test_higher_genus(self):
        F = boundary_connect_sum(klein_piece(), klein_piece())
        sh = shape(F)  # nonorientable genus 4
        assert surgery_shape(sh, True).genus == 1
        assert surgery_shape(sh, False).genus == 2

    def test_invalid_surgeries(self):
        with pytest.raises(ValueError, match="invalid surgery"):
            surgery_shape(shape(BandSurface.build([], [])), True)
        with pytest.raises(ValueError, match="invalid surgery"):
            surgery_shape(shape(mobius(1)), True)
        with pytest.raises(ValueError, match="invalid surgery"):
            surgery_shape(shape(mobius(1)), False)


class TestMobiusAndKlein:
    def test_mobius_band_matches_target_framing(self):
        for p in (-5, -3, -1, 1, 3, 5):
            F = mobius_band(TREFOIL_CORE, p)
            assert framing(F) == 2 * p
            assert gl_form(F) == ((p,),)
            assert shape(F).genus == 1 and not shape(F).orientable

    def test_mobius_band_rejects_even(self):
        with pytest.raises(ValueError, match="p must be odd"):
            mobius_band(TREFOIL_CORE, 2)

    def test_klein_bottle_for_cables(self):
        for p in (-3, -1, 1, 3):
            F = klein_bottle_for_cables(TREFOIL_CORE, (), p)
            assert validate_surface(F) == []
            assert framing(F) == 0
            assert gl_form(F) == ((p, 0), (0, -p))
            sh = shape(F)
            assert (sh.orientable, sh.genus, sh.boundary_components) == (False, 2, 1)

    def test_klein_bottle_with_two_knotted_cores(self):
        rng = random.Random(5)
        core_j, _ = random_core(rng)
        F = klein_bottle_for_cables(TREFOIL_CORE, core_j, 5)
        assert framing(F) == 0
        assert gl_form(F) == ((5, 0), (0, -5))


class TestJson:
    def test_round_trip(self):
        for F in (
            mobius(3),
            klein_piece(),
            get_preset("t25").orientable_surface,
            mobius_band(TREFOIL_CORE, 1),
        ):
            assert BandSurface.from_json(F.to_json()) == F

    def test_compact_attach_form(self):
        data = {
            "bands": [{"half_twists": 1}],
            "attach": [[0, "A"], [0, "B"]],
            "route": [],
        }
        assert BandSurface.from_json(data) == mobius(1)

    def test_malformed(self):
        with pytest.raises(ValueError, match="malformed band surface JSON"):
            BandSurface.from_json({"bands": [{"half_twists": 1}]})
        with pytest.raises(ValueError, match="malformed band surface JSON"):
            BandSurface.from_json(
                {"bands": [{}], "attach": [[0, "A"], [0, "B"]], "route": []}
            )

    def test_core_route_rejects_other_bands(self):
        with pytest.raises(ValueError, match="single band"):
            core_route([RouteEvent((1, 0), (0, 0), 1)])
        assert core_route(TREFOIL_CORE) == TREFOIL_CORE
        assert core_route([(0, 1, -1)]) == (RouteEvent((0, 0), (0, 1), -1),)


class TestGeneratorContracts:
    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10 ** 6), st.booleans())
    def test_random_surfaces_are_embeddable_data(self, seed, orientable):
        F = random_band_surface(random.Random(seed), orientable=orientable)
        assert validate_surface(F) == []
        sh = shape(F)
        assert sh.orientable == orientable
        assert sh.boundary_components == 1
        f = framing(F)
        if orientable:
            assert f == 0
        else:
            assert f % 4 == (2 if sh.genus % 2 else 0)
