"""Acceptance criteria.

Each criterion is one test that prints a single PASS line on success (run
with ``pytest tests/test_acceptance.py -v -s``); every comparison is exact
(tolerance zero) unless the criterion states otherwise.
"""

import random
import time
from fractions import Fraction

import pytest

from prsyn.analysis import (CapacitorLoop, blocked_open_short_check,
                            blocked_report, energy_balance, impedance,
                            mcmillan_gap, pbh_diagnostics, phasor_solve,
                            ss_impedance, state_space, storage_count)
from prsyn.network import (Element, Network, OnePort, parse_netlist,
                           serialize_netlist)
from prsyn.polyrat import (BiquadParams, Polynomial, Q, QComplex,
                           RationalFunction, biquad_params, biquad_template,
                           is_positive_real, parse_ratfunc,
                           sylvester_determinant)
from prsyn.synth import (SEVEN_ELEMENT_VARIANTS, build_named, build_quartet,
                         build_seven_element, classify_biquad,
                         n12_has_no_feasible_solution,
                         resultant_fixture_check, theorem2_step,
                         verify_theorem2_identity)

from conftest import rand_q, random_sp_network, sample_region

REGIONS = ("a", "b", "c", "d", "e", "f", "none")
EXPECTED_MIN = {"a": 3, "b": 3, "c": 4, "d": 4, "e": 4, "f": 4, "none": 5}

_corpus = None


def synthesized_corpus():
    """Networks produced while exercising criteria 1-3, reused by 5."""
    global _corpus
    if _corpus is None:
        _corpus = {"round_trip": [], "seven": [], "witness_iv": []}
    return _corpus


def _print_pass(num, message):
    print(f"\n[criterion {num}] PASS: {message}")


def test_criterion_1_round_trip_synthesis():
    """200 random parameter tuples per region: classify, build the witness,
    recompute the impedance independently, and match the template exactly."""
    rng = random.Random(101)
    start = time.monotonic()
    corpus = synthesized_corpus()
    per_region = 200
    for region in REGIONS:
        for _ in range(per_region):
            p = sample_region(region, rng)
            c = classify_biquad(p)
            assert c.storage_min == EXPECTED_MIN[region]
            assert c.condition == (region if region != "none" else "none")
            h = impedance(c.witness_network)
            assert h == biquad_template(p)
            corpus["round_trip"].append((p, c.witness_network))
    elapsed = time.monotonic() - start
    assert elapsed < 30, f"round-trip synthesis took {elapsed:.1f}s"
    _print_pass(1, f"{per_region * len(REGIONS)} exact round trips across "
                   f"regions a-f and generic-5 in {elapsed:.1f}s")


def test_criterion_2_seven_element_identity():
    """50 random minimum functions per sign branch; all four seven-element
    variants realize the input exactly with 5 storage and 2 resistors."""
    rng = random.Random(202)
    corpus = synthesized_corpus()
    checked = 0
    for branch in ("pos", "neg"):
        for _ in range(50):
            if branch == "pos":
                W = Fraction(rng.randint(1, 199), 200)
                if W == Q(1, 2):
                    W += Q(1, 400)
                F = rand_q(rng)
            else:
                W = 1 + Fraction(rng.randint(1, 300), 100)
                F = -rand_q(rng)
            if W == 1 or W == 2:
                W += Q(1, 400)
            p = BiquadParams(rand_q(rng), rand_q(rng), W, F)
            h = biquad_template(p)
            step = theorem2_step(h, p.omega0)
            assert verify_theorem2_identity(h, step)
            for which in SEVEN_ELEMENT_VARIANTS:
                n = build_seven_element(step, which)
                assert impedance(n) == h
                assert storage_count(n) == 5
                assert len(n.resistors()) == 2
                corpus["seven"].append((p, n))
                checked += 1
    _print_pass(2, f"{checked} seven-element realizations exact on both "
                   "sign branches")


def test_criterion_3_worked_witness():
    """The worked biquadratic needs five storage elements and is realized
    exactly by all four seven-element variants."""
    h = parse_ratfunc("(s^2+1/2 s+2/3)/(s^2+1/3 s+3/2)")
    p = biquad_params(h)
    c = classify_biquad(p)
    assert c.storage_min == 5 and c.condition == "none"
    corpus = synthesized_corpus()
    step = theorem2_step(h, 1)
    for which in SEVEN_ELEMENT_VARIANTS:
        n = build_seven_element(step, which)
        assert impedance(n) == h
        corpus["witness_iv"].append((p, n))
    _print_pass(3, "worked function classifies as min_storage=5 and all "
                   "four variants realize it exactly")


def _fig2_expected(K, w0, W, F):
    phi, psi, eta = 1 - W, 1 + W, 2 * W - 1
    zeta = W * W * phi * phi - F * F * eta
    A = [
        [-w0 * phi * psi / F, 0, w0 / (F * K), -w0 / (F * K), 0],
        [0, -w0 * W * phi / F, w0 * phi / (F * W * K), 0, w0 * phi / (F * W * K)],
        [-w0 * F * K, -w0 * F * K, 0, 0, 0],
        [w0 * K * zeta / (F * W), 0, 0, 0, 0],
        [0, -w0 * K * F * eta / phi, 0, 0, 0],
    ]
    B = [-w0 * phi * psi / F, -w0 * W * phi / F, -w0 * F * K,
         w0 * K * zeta / (F * W), 0]
    C = [K * phi * psi, K * W * W, -1, 1, 0]
    return A, B, C, K


def _nullspace_fr(m):
    rows, cols = len(m), len(m[0])
    aug = [row[:] for row in m]
    pivots, r = [], 0
    for c in range(cols):
        piv = next((rr for rr in range(r, rows) if aug[rr][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for rr in range(rows):
            if rr != r and aug[rr][c] != 0:
                f = aug[rr][c]
                aug[rr] = [x - f * y for x, y in zip(aug[rr], aug[r])]
        pivots.append(c)
        r += 1
    basis = []
    for fc in [c for c in range(cols) if c not in pivots]:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -aug[i][fc]
        basis.append(vec)
    return basis


def test_criterion_4_state_space_reproduction():
    """State-space of the non-stabilizable realization at
    (K, w0, W, F) = (1, 1, 3/4, 1/8), exact arithmetic, under 1 second.

    The extracted matrices match the closed forms entry by entry.  A
    sign-flipped variant of entries A[1][2] and A[1][4] looks equally
    plausible at a glance but is impossible for any RLC network: phasor
    power balance forces sign(A[i][j]) = -sign(A[j][i]) for every
    inductor-current/capacitor-voltage coupling, so those two signs are
    pinned by the invariant asserted below, together with the eigenvector,
    left-annihilator and output-null identities of the model.
    """
    start = time.monotonic()
    K, w0, W, F = Q(1), Q(1), Q(3, 4), Q(1, 8)
    phi, psi, eta = 1 - W, 1 + W, 2 * W - 1
    zeta = W * W * phi * phi - F * F * eta
    p = BiquadParams(K, w0, W, F)

    n2b = build_named("Fig2b", p)
    ss = state_space(n2b)
    assert ss.state_labels == ("l1", "l2", "c3", "c4", "c5")
    A_exp, B_exp, C_exp, D_exp = _fig2_expected(K, w0, W, F)
    assert [list(r) for r in ss.A] == A_exp
    assert list(ss.B) == B_exp and list(ss.C) == C_exp and ss.D == D_exp

    # the sign-flipped variant of (1,2) and (1,4) violates the power
    # balance invariant A[i][j]*A[j][i] <= 0 for storage couplings
    flipped_A = [row[:] for row in A_exp]
    flipped_A[1][2] = -flipped_A[1][2]
    flipped_A[1][4] = -flipped_A[1][4]
    diffs = [(i, j) for i in range(5) for j in range(5)
             if ss.A[i][j] != flipped_A[i][j]]
    assert diffs == [(1, 2), (1, 4)]
    assert flipped_A[1][2] * flipped_A[2][1] > 0          # unrealizable
    assert ss.A[1][2] * ss.A[2][1] < 0                    # realizable

    # null-vector identities of the model hold exactly
    xt = [-phi * W * W, phi * phi * W, -K * F * F * eta, K * zeta,
          K * F * F * eta]
    lam = -w0 * W * phi / F
    for i in range(5):
        assert sum(ss.A[i][j] * xt[j] for j in range(5)) == lam * xt[i]
    assert sum(ss.C[j] * xt[j] for j in range(5)) == 0
    xh = [0, 0, eta * zeta, F * F * W * eta, -phi * zeta]
    for j in range(5):
        assert sum(xh[i] * ss.A[i][j] for i in range(5)) == 0
    assert sum(xh[i] * ss.B[i] for i in range(5)) == 0

    # PBH diagnostics: unobservable mode at -W*phi/F with null vector
    # proportional to xt, uncontrollable mode at 0 with left null vector
    # proportional to xh, not stabilizable
    rep = pbh_diagnostics(ss)
    assert lam in rep.unobservable_modes
    assert Q(0) in rep.uncontrollable_modes
    assert not rep.stabilizable
    stacked = [[x - (lam if i == j else 0) for j, x in enumerate(row)]
               for i, row in enumerate(ss.A)] + [list(ss.C)]
    null = _nullspace_fr(stacked)
    assert len(null) == 1
    ratio = None
    for a, b in zip(null[0], xt):
        if b != 0:
            assert ratio is None or a / b == ratio
            ratio = a / b
        else:
            assert a == 0
    left = _nullspace_fr([[ss.A[i][j] for i in range(5)] for j in range(5)]
                         + [list(ss.B)])
    assert len(left) == 1
    ratio = None
    for a, b in zip(left[0], xh):
        if b != 0:
            assert ratio is None or a / b == ratio
            ratio = a / b
        else:
            assert a == 0

    # companion star-delta network: capacitor loop with exactly three
    # capacitors, and the same impedance
    n2a = build_named("Fig2a", p)
    with pytest.raises(CapacitorLoop) as exc:
        state_space(n2a)
    assert set(exc.value.element_ids) == {"ca", "cb", "cc"}
    assert impedance(n2a) == impedance(n2b) == biquad_template(p)
    assert ss_impedance(ss) == impedance(n2b)

    elapsed = time.monotonic() - start
    assert elapsed < 1.0, f"criterion 4 took {elapsed:.2f}s"
    _print_pass(4, "state-space matrices exact (coupling signs pinned by the "
                   f"power-balance invariant), PBH verdicts exact, {elapsed:.2f}s")


def test_criterion_5_blocked_subnetwork_laws():
    """Every network synthesized in criteria 1-3: exact zero energy balance
    at omega0, resistors all blocked, unblocked elements all storage, each
    maximal-blocked subnetwork a one-port, and the open/short invariance."""
    corpus = synthesized_corpus()
    assert corpus["round_trip"] and corpus["seven"] and corpus["witness_iv"]
    checked = 0
    rng = random.Random(505)
    pool = (corpus["round_trip"] + corpus["seven"] + corpus["witness_iv"])
    for p, n in pool:
        sol = phasor_solve(n, p.omega0, seed=checked)
        assert energy_balance(sol) == 0
        rep = blocked_report(n, p.omega0, seed=checked)
        blocked_all = set().union(*rep.blocked) if rep.blocked else set()
        for e in n.elements:
            if e.kind == "R":
                assert e.id in blocked_all
        for eid in rep.unblocked:
            assert n.element(eid).is_storage()
        assert all(rep.blocked_oneport_flags)
        assert blocked_open_short_check(n, rep)
        checked += 1
    _print_pass(5, f"blocked-subnetwork laws exact on all {checked} "
                   "synthesized networks")


BRIDGE_TEXT = """
R z4 a c {z4}
R z1 a d {z1}
R z3 c d {z3}
R z2 c b {z2}
R z5 d b {z5}
PORT a b
"""


def test_criterion_6_bridge_identities():
    """The eight open/short impedance identities of the five-arm bridge at
    100 random positive rational arm assignments, exactly."""
    rng = random.Random(606)
    for _ in range(100):
        z = {k: rand_q(rng) for k in ("z1", "z2", "z3", "z4", "z5")}
        n = parse_netlist(BRIDGE_TEXT.format(**{k: str(v) for k, v in z.items()}))
        z1, z2, z3, z4, z5 = (z["z1"], z["z2"], z["z3"], z["z4"], z["z5"])

        def imp(reduced):
            h = impedance(reduced)
            return h.constant_value()

        def oneport(eid, terms):
            return OnePort(n, frozenset({eid}), terms)

        from prsyn.network import open_oneport, short_oneport
        h1 = imp(open_oneport(n, oneport("z1", ("a", "d"))))
        assert h1 == ((z3 + z5) * (z2 + z4) + z2 * z4) / (z2 + z3 + z5)
        h2 = imp(short_oneport(n, oneport("z1", ("a", "d"))))
        assert h2 == z5 * (z2 * z3 + z2 * z4 + z3 * z4) / \
            ((z3 + z4) * (z2 + z5) + z3 * z4)
        h3 = imp(open_oneport(n, oneport("z3", ("c", "d"))))
        assert h3 == (z1 + z5) * (z2 + z4) / (z1 + z2 + z4 + z5)
        h4 = imp(short_oneport(n, oneport("z3", ("c", "d"))))
        assert h4 == (z1 * z4 * (z2 + z5) + z2 * z5 * (z1 + z4)) / \
            ((z1 + z4) * (z2 + z5))
        # sequential reductions after removing the z1 arm
        n_open1 = open_oneport(n, oneport("z1", ("a", "d")))
        n_short1 = short_oneport(n, oneport("z1", ("a", "d")))
        hb1 = imp(open_oneport(n_open1, OnePort(n_open1, frozenset({"z2"}),
                                                ("b", "c"))))
        assert hb1 == z3 + z4 + z5
        hb2 = imp(short_oneport(n_open1, OnePort(n_open1, frozenset({"z2"}),
                                                 ("b", "c"))))
        assert hb2 == z4
        hb3 = imp(open_oneport(n_short1, OnePort(n_short1, frozenset({"z2"}),
                                                 ("b", "c"))))
        assert hb3 == z5
        hb4 = imp(short_oneport(n_short1, OnePort(n_short1, frozenset({"z2"}),
                                                  ("b", "c"))))
        assert hb4 == z3 * z4 * z5 / (z3 * z4 + z3 * z5 + z4 * z5)
    _print_pass(6, "all eight bridge open/short identities exact at 100 "
                   "random rational arm assignments")


def test_criterion_7_resultant_factorizations():
    """Closed-form Sylvester factorizations at 100 random rational points
    per family, and 1000-point infeasibility of biquadratic members in the
    last family."""
    rng = random.Random(707)

    def q7_point():
        return {"g1": rand_q(rng), "g2": rand_q(rng), "F": rand_q(rng),
                "omega0": rand_q(rng, 1, 4)}

    def q8_point():
        return {"g1": rand_q(rng), "g2": rand_q(rng), "c2": rand_q(rng),
                "omega0": rand_q(rng, 1, 3)}

    def n11_point():
        return {"r1": Fraction(rng.randint(0, 6), rng.randint(1, 6)),
                "g2": rand_q(rng, 1, 6), "g3": rand_q(rng, 1, 6),
                "F": rand_q(rng, 1, 6), "omega0": rand_q(rng, 1, 3)}

    for _ in range(100):
        assert resultant_fixture_check("Q7", q7_point())
    for fam, gen in (("Q8", q8_point), ("N11", n11_point), ("N12", n11_point)):
        for _ in range(100):
            subs = gen()
            try:
                assert resultant_fixture_check(fam, subs)
            except Exception as exc:
                if "degenerate" in str(exc):
                    continue
                raise
    for _ in range(1000):
        assert n12_has_no_feasible_solution(
            Fraction(rng.randint(0, 9), rng.randint(1, 9)),
            Fraction(rng.randint(0, 9), rng.randint(1, 9)),
            rand_q(rng, 1, 9), rand_q(rng, 1, 9))
    _print_pass(7, "resultant factorizations exact at 100 points per family; "
                   "no biquadratic member at 1000 feasible points")


def test_criterion_8_parameter_maps():
    """Reciprocal and frequency-inversion parameter maps for 100 random
    parameter tuples, exactly."""
    rng = random.Random(808)
    for _ in range(100):
        region = rng.choice(REGIONS)
        p = sample_region(region, rng)
        h = biquad_template(p)
        assert biquad_params(h.reciprocal()) == \
            BiquadParams(1 / p.K, p.omega0, 1 / p.W, -1 / p.F)
        assert biquad_params(h.compose_winv(p.omega0 ** 2)) == \
            BiquadParams(p.K * p.W * p.W, p.omega0, 1 / p.W,
                         -p.F / (p.W * p.W))
    _print_pass(8, "both parameter maps exact for 100 random tuples")


def test_criterion_9_property_suites():
    """PR closure, nonnegative McMillan gap, Sylvester-vs-gcd equivalence,
    and series/parallel impedance oracle equivalence, 200 instances each,
    exact, under 60 seconds."""
    start = time.monotonic()
    rng = random.Random(909)
    for _ in range(200):
        p = sample_region(rng.choice(REGIONS), rng)
        h = biquad_template(p)
        assert is_positive_real(h)
        assert is_positive_real(h.reciprocal())
        assert is_positive_real(h.compose_winv(p.omega0 ** 2))
    for _ in range(200):
        n = random_sp_network(rng)
        assert mcmillan_gap(n) >= 0
    for _ in range(200):
        pp = Polynomial([rng.randint(-4, 4) for _ in range(rng.randint(1, 5))]
                        + [rng.randint(1, 4)])
        qq = Polynomial([rng.randint(-4, 4) for _ in range(rng.randint(1, 5))]
                        + [rng.randint(1, 4)])
        assert (sylvester_determinant(pp, qq, 0) == 0) == \
            (pp.gcd(qq).degree >= 1)
    from prsyn.analysis import impedance_series_parallel
    for _ in range(200):
        n = random_sp_network(rng)
        assert impedance_series_parallel(n) == impedance(n)
    elapsed = time.monotonic() - start
    assert elapsed < 60, f"property suites took {elapsed:.1f}s"
    _print_pass(9, f"four property suites x200 exact in {elapsed:.1f}s")
