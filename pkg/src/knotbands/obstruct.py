"""Mechanical consistency checkers and sliceness obstructions.

Every checker is one-sided: "fail" is a certificate that the claimed
data cannot all hold (for example, that a knot cannot be slice with the
given surface), while "pass" only means this screen found nothing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .algebra import (
    LaurentPoly,
    fp_abelian_invariants,
    signature_exact,
    smith_normal_form,
)
from .bandform import (
    BandSurface,
    RouteEvent,
    boundary_connect_sum,
    boundary_walk,
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
from .invariants import (
    DEFAULT_SAMPLES,
    Omega,
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
)
from .presets import get_preset, preset_names


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class TestResult:
    name: str
    status: str  # "pass" | "fail" | "skipped-singular"
    details: str

    def __post_init__(self):
        if self.status not in ("pass", "fail", "skipped-singular"):
            raise ValueError(f"unknown test status {self.status!r}")


@dataclass(frozen=True)
class ObstructionReport:
    tests: tuple[TestResult, ...]

    def __post_init__(self):
        names = [t.name for t in self.tests]
        if len(set(names)) != len(names):
            raise ValueError("duplicate test name in report")

    @property
    def verdict(self) -> str:
        return "obstructed" if any(t.status == "fail" for t in self.tests) else "consistent"

    def to_json(self) -> dict:
        return {
            "tests": [
                {"name": t.name, "status": t.status, "details": t.details}
                for t in self.tests
            ],
            "verdict": self.verdict,
        }

    def to_text(self) -> str:
        lines = [
            f"{t.status:>16}  {t.name}: {t.details}" for t in self.tests
        ]
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# checkers


def genus_framing_check(F: BandSurface, v_orientable=None) -> ObstructionReport:
    """Framing mod 4 against genus parity; optionally the signature
    bridge against an orientable Seifert matrix for the same boundary."""
    sh = shape(F)
    if sh.orientable:
        raise ValueError(
            "orientable input: the genus-framing relation concerns non-orientable surfaces"
        )
    f = framing(F)
    expected = 2 if sh.genus % 2 else 0
    tests = [
        TestResult(
            "genus-framing",
            "pass" if f % 4 == expected else "fail",
            f"framing {f} mod 4 = {f % 4}, genus {sh.genus} expects {expected}",
        )
    ]
    if v_orientable is not None:
        lhs = signature(v_orientable)
        rhs = signature_exact([list(r) for r in gl_form(F)]) - f // 2
        tests.append(
            TestResult(
                "signature-bridge",
                "pass" if lhs == rhs else "fail",
                f"signature {lhs} vs sign(GL) - framing/2 = {rhs}",
            )
        )
    return ObstructionReport(tuple(tests))


def determinant_mod8_check(gl) -> ObstructionReport:
    """The determinant leg of the sliceness screen, on a bare GL form:
    a zero-framed Klein bottle with slice boundary forces det = +-1 mod 8."""
    d = determinant_knot(gl=gl)
    r = d % 8
    return ObstructionReport(
        (
            TestResult(
                "determinant-mod-8",
                "pass" if r in (1, 7) else "fail",
                f"|det GL| = {d} = {r} mod 8",
            ),
        )
    )


def slice_obstruction_report(
    F: BandSurface,
    v_j=None,
    samples: Iterable[Omega] | None = None,
    v_boundary=None,
) -> ObstructionReport:
    """Screen the boundary of a zero-framed punctured Klein bottle against
    the invariant constraints that sliceness would impose.

    v_j: claimed Seifert matrix of the 2-sided companion J (enables the
    squared-parameter signature test when v_boundary is also given).
    v_boundary: independent Seifert matrix of the boundary knot itself.
    """
    sh = shape(F)
    if sh.orientable or sh.genus != 2:
        raise ValueError(
            "not a punctured Klein bottle: need a single-boundary non-orientable genus-2 surface"
        )
    f = framing(F)
    if f != 0:
        raise ValueError(f"framing must be 0, got {f}")
    G = gl_form(F)
    d = determinant_knot(gl=G)
    tests = [
        TestResult(
            "determinant-mod-8",
            "pass" if d % 8 in (1, 7) else "fail",
            f"|det GL| = {d} = {d % 8} mod 8",
        )
    ]
    sig_g = signature_exact([list(r) for r in G])
    tests.append(
        TestResult(
            "ordinary-signature",
            "pass" if sig_g == 0 else "fail",
            f"sign(GL) - framing/2 = {sig_g}, slice boundary needs 0",
        )
    )
    if v_boundary is not None:
        s_b = signature(v_boundary)
        tests.append(
            TestResult(
                "boundary-signature",
                "pass" if s_b == 0 else "fail",
                f"ordinary signature of supplied boundary matrix = {s_b}",
            )
        )
        if v_j is not None:
            rep = sigma_squared_compare(v_boundary, v_j, samples)
            for e in rep.entries:
                status = {
                    "agree": "pass",
                    "disagree": "fail",
                    "skipped-singular": "skipped-singular",
                }[e.status]
                tests.append(
                    TestResult(
                        f"sigma-squared {e.omega.label()}",
                        status,
                        f"sigma_K = {e.sigma_k}, sigma_J(omega^2) = {e.sigma_j_squared}",
                    )
                )
    return ObstructionReport(tuple(tests))


def cable_concordance_check(
    v_k, v_j, p: int, samples: Iterable[Omega] | None = None
) -> ObstructionReport:
    """Necessary conditions for the (2,p) cables of K and J to be
    concordant over Z[1/2]: the signature functions of K and J must agree
    at every sample, and the cable determinants must match."""
    if p % 2 == 0:
        raise ValueError("p must be odd")
    tests = []
    for omega in DEFAULT_SAMPLES if samples is None else samples:
        sk = levine_tristram(v_k, omega)
        sj = levine_tristram(v_j, omega)
        if sk.singular or sj.singular:
            tests.append(
                TestResult(
                    f"sigma-match {omega.label()}",
                    "skipped-singular",
                    "Alexander root on one side",
                )
            )
            continue
        tests.append(
            TestResult(
                f"sigma-match {omega.label()}",
                "pass" if sk.value == sj.value else "fail",
                f"sigma_K = {sk.value}, sigma_J = {sj.value}",
            )
        )
    dk = abs(alexander_cable2(alexander(v_k), p).evaluate_int(-1))
    dj = abs(alexander_cable2(alexander(v_j), p).evaluate_int(-1))
    tests.append(
        TestResult(
            "cable-determinant",
            "pass" if dk == dj == abs(p) else "fail",
            f"|det K_(2,{p})| = {dk}, |det J_(2,{p})| = {dj}, formula forces {abs(p)}",
        )
    )
    return ObstructionReport(tuple(tests))


# ---------------------------------------------------------------------------
# random generators for the batteries


_CORE_FACTORS: tuple[tuple[tuple[int, int, int], ...], ...] = (
    (),
    ((0, 3, 1), (4, 1, 1), (2, 5, 1)),  # (2,3) torus knot
    ((0, 5, 1), (6, 1, 1), (2, 7, 1), (8, 3, 1), (4, 9, 1)),  # (2,5) torus knot
    ((0, 1, 1),),  # positive kink
    ((0, 1, -1),),  # negative kink
)

_CORE_DELTAS = (
    LaurentPoly.one(),
    LaurentPoly({-1: 1, 0: -1, 1: 1}),
    LaurentPoly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}),
    LaurentPoly.one(),
    LaurentPoly.one(),
)


def random_core(rng: random.Random, max_factors: int = 2):
    """A knot route for a band core, as a connected sum of small factors;
    returns (route, its Alexander polynomial)."""
    route: list[RouteEvent] = []
    delta = LaurentPoly.one()
    offset = 0
    for _ in range(rng.randint(0, max_factors)):
        idx = rng.randrange(len(_CORE_FACTORS))
        factor = core_route(_CORE_FACTORS[idx])
        if rng.random() < 0.5:
            factor = mirror_core(factor)
        for ev in factor:
            route.append(
                RouteEvent(
                    (0, ev.over[1] + offset), (0, ev.under[1] + offset), ev.sign
                )
            )
        offset += 2 * len(factor)
        delta = delta * _CORE_DELTAS[idx]
    return tuple(route), delta


def random_band_surface(
    rng: random.Random,
    max_bands: int = 6,
    max_twist: int = 5,
    max_events: int = 10,
    orientable: bool = False,
) -> BandSurface:
    """Seeded single-boundary surface with crossing data an embedded
    surface could actually have (interleaved band pairs get the one
    disk-forced crossing compensated in the route)."""
    while True:
        if orientable:
            n = 2 * rng.randint(1, max(1, max_bands // 2))
            twists = [2 * rng.randint(-(max_twist // 2), max_twist // 2) for _ in range(n)]
        else:
            n = rng.randint(1, max_bands)
            twists = [rng.randint(-max_twist, max_twist) for _ in range(n)]
            k = rng.randrange(n)
            if twists[k] % 2 == 0:
                twists[k] += 1 if twists[k] < max_twist else -1
        tokens = [(i, e) for i in range(n) for e in ("A", "B")]
        rng.shuffle(tokens)
        bare = BandSurface.build(twists, tokens)
        if boundary_walk(bare)[1] != 1:
            continue
        mandatory = [
            (pair, d) for pair, (ilv, d) in interleave_data(bare).items() if ilv
        ]
        if len(mandatory) > max_events:
            continue
        events: list[tuple] = []
        counters: dict[int, int] = {}

        def slot(b: int) -> int:
            counters[b] = counters.get(b, -1) + 1
            return counters[b]

        for (i, j), d in mandatory:
            if rng.random() < 0.5:
                events.append(((i, slot(i)), (j, slot(j)), -d))
            else:
                events.append(((j, slot(j)), (i, slot(i)), d))
        budget = max_events - len(events)
        while budget > 0 and rng.random() < 0.6:
            roll = rng.random()
            if roll < 0.4 and n >= 2 and budget >= 2:
                i, j = rng.sample(range(n), 2)
                s = rng.choice((1, -1))
                events.append(((i, slot(i)), (j, slot(j)), s))
                events.append(((i, slot(i)), (j, slot(j)), -s))
                budget -= 2
            elif roll < 0.7 and n >= 2 and budget >= 2:
                i, j = rng.sample(range(n), 2)
                s = rng.choice((1, -1))
                events.append(((i, slot(i)), (j, slot(j)), s))
                events.append(((j, slot(j)), (i, slot(i)), s))
                budget -= 2
            else:
                i = rng.randrange(n)
                events.append(((i, slot(i)), (i, slot(i)), rng.choice((1, -1))))
                budget -= 1
        F = BandSurface.build(twists, tokens, events)
        problems = validate_surface(F)
        if problems:
            raise AssertionError(f"generator produced invalid surface: {problems}")
        return F


def random_normal_form(
    rng: random.Random,
    max_pieces: int = 3,
    max_twist: int = 5,
    force_zero_framing: bool = False,
) -> BandSurface:
    """Ordered boundary connect sum of two-band pieces, each with exactly
    one odd-twisted band; optionally re-twisted to framing zero."""
    k = rng.randint(1, max_pieces)
    odd_choices = [h for h in range(-max_twist, max_twist + 1) if h % 2]
    even_choices = [h for h in range(-max_twist, max_twist + 1) if h % 2 == 0]
    twists: list[int] = []
    attach: list[tuple[int, str]] = []
    even_bands: list[int] = []
    for piece in range(k):
        x, y = 2 * piece, 2 * piece + 1
        h_odd = rng.choice(odd_choices)
        h_even = rng.choice(even_choices)
        if rng.random() < 0.5:
            twists += [h_odd, h_even]
            even_bands.append(y)
        else:
            twists += [h_even, h_odd]
            even_bands.append(x)
        attach += [(x, "A"), (y, "A"), (x, "B"), (y, "B")]

    counters: dict[int, int] = {}

    def slot(b: int) -> int:
        counters[b] = counters.get(b, -1) + 1
        return counters[b]

    bare = BandSurface.build(twists, attach)
    events: list[tuple] = []
    for (i, j), (ilv, d) in interleave_data(bare).items():
        if not ilv:
            continue
        if rng.random() < 0.5:
            events.append(((i, slot(i)), (j, slot(j)), -d))
        else:
            events.append(((j, slot(j)), (i, slot(i)), d))
    n = 2 * k
    extras = rng.randint(0, 3)
    for _ in range(extras):
        roll = rng.random()
        if roll < 0.4 and k >= 2:
            i, j = rng.sample(range(n), 2)
            s = rng.choice((1, -1))
            events.append(((i, slot(i)), (j, slot(j)), s))
            events.append(((j, slot(j)), (i, slot(i)), s))
        elif roll < 0.7:
            i, j = rng.sample(range(n), 2) if n >= 2 else (0, 0)
            s = rng.choice((1, -1))
            events.append(((i, slot(i)), (j, slot(j)), s))
            events.append(((i, slot(i)), (j, slot(j)), -s))
        else:
            i = rng.randrange(n)
            events.append(((i, slot(i)), (i, slot(i)), rng.choice((1, -1))))
    F = BandSurface.build(twists, attach, events)
    if force_zero_framing:
        f = framing(F)
        # framing of an even-genus surface is 0 mod 4, so the adjustment
        # keeps the adjusted band even-twisted
        adjust = even_bands[0]
        new_twists = list(twists)
        new_twists[adjust] -= f // 2
        F = BandSurface.build(new_twists, attach, events)
    return F


def random_unimodular(rng: random.Random, n: int) -> list[list[int]]:
    """Determinant +-1 integer matrix built from elementary operations."""
    A = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n == 0:
        return A
    for _ in range(2 * n + rng.randint(0, 3)):
        roll = rng.random()
        if n >= 2 and roll < 0.6:
            i, j = rng.sample(range(n), 2)
            c = rng.choice((1, -1, 2, -2))
            for col in range(n):
                A[i][col] += c * A[j][col]
        elif n >= 2 and roll < 0.8:
            i, j = rng.sample(range(n), 2)
            A[i], A[j] = A[j], A[i]
        else:
            i = rng.randrange(n)
            A[i] = [-x for x in A[i]]
    return A


# ---------------------------------------------------------------------------
# the randomized verification battery


@dataclass(frozen=True)
class VerifyProperty:
    name: str
    cases: int
    failures: int
    detail: str

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class VerifySummary:
    seed: int
    trials: int
    properties: tuple[VerifyProperty, ...]

    @property
    def all_passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "all_passed": self.all_passed,
            "properties": [
                {
                    "name": p.name,
                    "cases": p.cases,
                    "failures": p.failures,
                    "detail": p.detail,
                }
                for p in self.properties
            ],
        }

    def to_text(self) -> str:
        lines = []
        for p in self.properties:
            tag = "pass" if p.passed else "FAIL"
            extra = f" ({p.detail})" if p.detail else ""
            lines.append(f"{tag}  {p.name}: {p.cases} cases, {p.failures} failures{extra}")
        lines.append(
            f"battery: {'all properties hold' if self.all_passed else 'FAILURES PRESENT'}"
        )
        return "\n".join(lines)


class _Tally:
    def __init__(self):
        self.cases = 0
        self.failures = 0
        self.detail = ""

    def check(self, condition: bool, detail: str = ""):
        self.cases += 1
        if not condition:
            self.failures += 1
            if not self.detail:
                self.detail = detail

    def property(self, name: str) -> VerifyProperty:
        return VerifyProperty(name, self.cases, self.failures, self.detail)


def _prop_framing_fixtures(rng: random.Random, trials: int) -> VerifyProperty:
    t = _Tally()
    plus = BandSurface.build([1], [(0, "A"), (0, "B")])
    minus = BandSurface.build([-1], [(0, "A"), (0, "B")])
    t.check(framing(plus) == 2, "Möbius +1")
    t.check(framing(minus) == -2, "Möbius -1")
    t.check(framing(boundary_connect_sum(plus, minus)) == 0, "sum 2-2")
    for p in (-7, -5, -3, -1, 1, 3, 5, 7):
        t.check(
            framing(BandSurface.build([p], [(0, "A"), (0, "B")])) == 2 * p,
            f"Möbius h={p}",
        )
    for _ in range(min(trials, 25)):
        core, _delta = random_core(rng)
        p = rng.choice((-5, -3, -1, 1, 3, 5))
        t.check(
            framing(mobius_band(core, p)) == 2 * p,
            f"mobius_band core w={core_writhe(core)} p={p}",
        )
    return t.property("framing-fixtures")


def _prop_genus_framing(rng: random.Random, trials: int) -> VerifyProperty:
    t = _Tally()
    for _ in range(trials):
        F = random_band_surface(rng, orientable=False)
        sh = shape(F)
        f = framing(F)
        want = 2 if sh.genus % 2 else 0
        t.check(f % 4 == want, f"nonorientable framing {f}, genus {sh.genus}")
        t.check(f % 2 == 0, "framing parity")
    for _ in range(max(1, trials // 2)):
        F = random_band_surface(rng, orientable=True)
        t.check(framing(F) == 0, "orientable framing nonzero")
    return t.property("genus-framing-lemma")


def _prop_gamma_law(rng: random.Random, trials: int) -> VerifyProperty:
    t = _Tally()
    for i in range(trials):
        F = random_normal_form(rng, force_zero_framing=(i % 2 == 0))
        f = framing(F)
        sl = gamma_curve(F).self_linking
        t.check(f == 4 * sl, f"framing {f} != 4*{sl}")
        t.check((f == 0) == (sl == 0), "zero framing iff zero self-linking")
    return t.property("gamma-law")


def _prop_signature_bridge(rng: random.Random, trials: int) -> VerifyProperty:
    t = _Tally()
    for name in preset_names():
        pk = get_preset(name)
        F = pk.nonorientable_surface
        lhs = signature(pk.seifert)
        rhs = signature_exact([list(r) for r in gl_form(F)]) - framing(F) // 2
        t.check(lhs == rhs, f"{name}: {lhs} != {rhs}")
        rep = genus_framing_check(F, v_orientable=pk.seifert)
        t.check(rep.verdict == "consistent", f"{name} genus_framing_check")
    return t.property("signature-bridge")


def _prop_invariant_table(rng: random.Random, trials: int) -> VerifyProperty:
    t = _Tally()
    for name in preset_names():
        pk = get_preset(name)
        t.check(alexander(pk.seifert).to_string() == pk.delta, f"{name} delta")
        t.check(signature(pk.seifert) == pk.sigma, f"{name} sigma")
        t.check(determinant_knot(seifert=pk.seifert) == pk.det, f"{name} det (V)")
        t.check(
            determinant_knot(gl=pk.gl_nonorientable) == pk.det, f"{name} det (GL)"
        )
        t.check(arf(pk.seifert) == pk.arf, f"{name} arf")
        t.check(
            seifert_matrix(pk.orientable_surface) == pk.seifert,
            f"{name} stored orientable surface",
        )
        t.check(
            gl_form(pk.nonorientable_surface) == pk.gl_nonorientable,
            f"{name} stored GL form",
        )
        t.check(
            framing(pk.nonorientable_surface) == pk.framing_nonorientable,
            f"{name} stored framing",
        )
    return t.property("invariant-table")


def _prop_klein_obstructions(rng: random.Random, trials: int) -> VerifyProperty:
    t = _Tally()
    for _ in range(trials):
        core_k, delta_k = random_core(rng)
        core_j, delta_j = random_core(rng)
        p = rng.choice((-5, -3, -1, 1, 3, 5))
        F = klein_bottle_for_cables(core_k, core_j, p)
        t.check(framing(F) == 0, f"framing p={p}")
        G = gl_form(F)
        d = determinant_knot(gl=G)
        t.check(d == p * p, f"det GL {d} != p^2")
        t.check(d % 8 in (1, 7), f"det mod 8: {d}")
        t.check(
            abs(alexander_cable2(delta_k, p).evaluate_int(-1)) == abs(p),
            "cable determinant",
        )
        rep = slice_obstruction_report(F)
        t.check(rep.verdict == "consistent", "slice screen on honest bottle")
    return t.property("klein-slice-obstruction")


def _prop_satellite(rng: random.Random, trials: int) -> VerifyProperty:
    t = _Tally()
    names = preset_names()
    for rn in names:
        for jn in names:
            dr = alexander(get_preset(rn).seifert)
            dj = alexander(get_preset(jn).seifert)
            sat = alexander_satellite(dr, dj)
            t.check(sat.evaluate_int(1) == 1, f"{rn},{jn} value at 1")
            t.check(sat == sat.substitute(-1), f"{rn},{jn} palindromic")
            t.check(
                abs(sat.evaluate_int(-1)) == abs(dr.evaluate_int(-1)),
                f"{rn},{jn} det at -1",
            )
            t.check(arf(sat) == arf(dr), f"{rn},{jn} arf preserved")
            f = sigma_satellite(
                sigma_function(get_preset(rn).seifert),
                sigma_function(get_preset(jn).seifert),
            )
            for omega in DEFAULT_SAMPLES:
                got = f(omega)
                squared = omega.squared()
                if squared is None:
                    t.check(got.singular, "omega^2=1 must be singular")
                    continue
                a = levine_tristram(get_preset(rn).seifert, omega)
                b = levine_tristram(get_preset(jn).seifert, squared)
                if a.singular or b.singular:
                    t.check(got.singular, "singular propagation")
                else:
                    t.check(got.value == a.value + b.value, "pointwise sum")
    return t.property("satellite-formulas")


def _prop_homology(rng: random.Random, trials: int) -> VerifyProperty:
    t = _Tally()
    inv = fp_abelian_invariants(2, [[-2, 1], [0, 1]])
    t.check(
        inv.free_rank == 0 and inv.torsion == (2,),
        f"double cover homology gave {inv}",
    )
    inv = fp_abelian_invariants(1, [])
    t.check(inv.free_rank == 1 and inv.torsion == (), "free group")
    inv = fp_abelian_invariants(2, [[1, 1], [1, -1]])
    t.check(inv.free_rank == 0 and inv.torsion == (2,), "Z/2 from pairing")
    return t.property("homology-z2")


def _prop_cable_screen(rng: random.Random, trials: int) -> VerifyProperty:
    t = _Tally()
    tref = get_preset("trefoil").seifert
    unknot = get_preset("unknot").seifert
    fig8 = get_preset("figure-eight").seifert
    rep = cable_concordance_check(tref, unknot, 3)
    t.check(rep.verdict == "obstructed", "trefoil vs unknot must obstruct")
    minus_one = [x for x in rep.tests if x.name == "sigma-match omega=-1"]
    t.check(bool(minus_one) and minus_one[0].status == "fail", "obstruction at -1")
    for name in preset_names():
        v = get_preset(name).seifert
        t.check(
            cable_concordance_check(v, v, 3).verdict == "consistent",
            f"{name} vs itself",
        )
    t.check(
        cable_concordance_check(fig8, unknot, 1).verdict == "consistent",
        "figure-eight signature screen is blind",
    )
    return t.property("cable-screen")


def _det_cofactor(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(rows)
    if n == 0:
        return LaurentPoly.one()
    if n == 1:
        return rows[0][0]
    total = LaurentPoly.zero()
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _prop_algebra_oracles(rng: random.Random, trials: int) -> VerifyProperty:
    from .algebra import det_laurent

    t = _Tally()
    for _ in range(trials):
        n = rng.randint(0, 4)
        M = [
            [
                LaurentPoly(
                    {
                        e: rng.randint(-2, 2)
                        for e in range(rng.randint(-2, 0), rng.randint(0, 2) + 1)
                    }
                )
                for _ in range(n)
            ]
            for _ in range(n)
        ]
        t.check(det_laurent(M) == _det_cofactor(M), f"det mismatch at n={n}")
    for _ in range(trials):
        n = rng.randint(1, 4)
        S = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                S[i][j] = S[j][i] = rng.randint(-4, 4)
        A = random_unimodular(rng, n)
        congr = [
            [
                sum(A[k][i] * S[k][l] * A[l][j] for k in range(n) for l in range(n))
                for j in range(n)
            ]
            for i in range(n)
        ]
        t.check(
            signature_exact(congr) == signature_exact(S),
            "signature congruence invariance",
        )
    for _ in range(trials):
        rows_n = rng.randint(1, 4)
        cols_n = rng.randint(1, 4)
        M = [[rng.randint(-4, 4) for _ in range(cols_n)] for _ in range(rows_n)]
        P = random_unimodular(rng, rows_n)
        Q = random_unimodular(rng, cols_n)
        PMQ = [
            [
                sum(
                    P[i][k] * M[k][l] * Q[l][j]
                    for k in range(rows_n)
                    for l in range(cols_n)
                )
                for j in range(cols_n)
            ]
            for i in range(rows_n)
        ]
        t.check(
            smith_normal_form(M) == smith_normal_form(PMQ),
            "SNF unimodular invariance",
        )
    return t.property("algebra-oracles")


def _prop_surgery(rng: random.Random, trials: int) -> VerifyProperty:
    t = _Tally()
    for _ in range(trials):
        F = random_normal_form(rng, force_zero_framing=True)
        sh = shape(F)
        t.check(framing(F) == 0, "stabilized framing")
        if sh.genus == 2:
            after = surgery_shape(sh, True)
            t.check(
                after.orientable and after.genus == 0 and after.euler == 1,
                "genus-2 surgery must give a disk",
            )
        else:
            after = surgery_shape(sh, True)
            t.check(after.genus == (sh.genus - 2) // 2, "orientable surgery genus")
            after = surgery_shape(sh, False)
            t.check(after.genus == sh.genus - 2, "non-orientable surgery genus")
        Fz = zero_framing_stabilize(
            random_band_surface(rng, max_bands=4, max_events=6)
        )
        t.check(framing(Fz) == 0, "zero_framing_stabilize")
    return t.property("surgery-and-stabilization")


_BATTERY = (
    _prop_framing_fixtures,
    _prop_genus_framing,
    _prop_gamma_law,
    _prop_signature_bridge,
    _prop_invariant_table,
    _prop_klein_obstructions,
    _prop_satellite,
    _prop_homology,
    _prop_cable_screen,
    _prop_algebra_oracles,
    _prop_surgery,
)


def verify_paper(seed: int = 0, trials: int = 100) -> VerifySummary:
    """Run the whole randomized battery; deterministic in (seed, trials)."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    results = []
    for prop in _BATTERY:
        rng = random.Random(f"{seed}:{prop.__name__}")
        results.append(prop(rng, trials))
    return VerifySummary(seed, trials, tuple(results))
