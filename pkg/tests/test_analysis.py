"""Verification engine: impedance, phasors, blocking, state space, PBH."""

import random
from fractions import Fraction

import pytest

from prsyn.analysis import (CapacitorLoop, HypothesesNotMet, InductorCutset,
                            NoImpedance, blocked_open_short_check,
                            blocked_report, energy_balance, impedance,
                            impedance_series_parallel, mcmillan_gap,
                            pbh_diagnostics, phasor_solve, ss_impedance,
                            state_space, storage_count)
from prsyn.network import Network, OnePort, parse_netlist
from prsyn.polyrat import (BiquadParams, Polynomial, Q, QComplex,
                           RationalFunction, biquad_template,
                           is_positive_real, parse_ratfunc)
from prsyn.synth import build_named, build_seven_element, theorem2_step

from conftest import random_sp_network

N1_TEXT = """
L l4 a c 1
R r1 a d 1/2
C c3 c d 1
R r2 c b 1/2
L l5 d b 1
PORT a b
"""


@pytest.fixture
def n1():
    return parse_netlist(N1_TEXT)


@pytest.fixture
def rpfg():
    h = biquad_template(BiquadParams(1, 1, Q(2, 3), 1))
    return build_seven_element(theorem2_step(h), "rpfg_first")


class TestImpedance:
    def test_single_resistor(self):
        assert impedance(parse_netlist("R r1 a b 5\nPORT a b")) == \
            RationalFunction(Polynomial([5]))

    def test_series_lc(self):
        n = parse_netlist("L l1 a m 1\nC c1 m b 1\nPORT a b")
        assert impedance(n) == parse_ratfunc("(s^2+1)/(s)")

    def test_n1_fixture(self, n1):
        # independent oracle: spanning-tree bridge formula
        from prsyn.synth import bridge_structural_polys, _pair_R, _pair_L, _pair_C
        num, den = bridge_structural_polys({
            1: _pair_R(Q(1, 2)), 2: _pair_R(Q(1, 2)), 3: _pair_C(Q(1)),
            4: _pair_L(Q(1)), 5: _pair_L(Q(1))})
        assert RationalFunction(num, den) == impedance(n1)
        assert impedance(n1) == biquad_template(BiquadParams(1, 1, Q(1, 2), 1))

    def test_always_positive_real(self, rng):
        for _ in range(40):
            assert is_positive_real(impedance(random_sp_network(rng)))

    def test_series_parallel_oracle_equivalence(self, rng):
        for _ in range(200):
            n = random_sp_network(rng)
            assert impedance_series_parallel(n) == impedance(n)


class TestPhasor:
    def test_single_resistor(self):
        n = parse_netlist("R r1 a b 7\nPORT a b")
        sol = phasor_solve(n, Q(5))
        assert sol.source_current == QComplex(1, 0)
        assert sol.source_voltage == QComplex(7, 0)

    def test_n1_at_minimum_frequency(self, n1):
        sol = phasor_solve(n1, Q(1))
        assert sol.source_voltage == QComplex(0, 1)   # H(j) = j

    def test_resonant_tank_blocks_current(self):
        n = parse_netlist("L l1 a b 1\nC c1 a b 1\nPORT a b")
        sol = phasor_solve(n, Q(1), drive=("voltage", QComplex(1, 0)))
        assert sol.source_current == QComplex(0, 0)

    def test_energy_balance_single_element(self):
        sol = phasor_solve(parse_netlist("C c1 a b 2\nPORT a b"), Q(3))
        assert energy_balance(sol) == 0

    def test_energy_balance_n1_resistor_terms_vanish(self, n1):
        sol = phasor_solve(n1, Q(1))
        assert energy_balance(sol) == 0
        for eid in ("r1", "r2"):
            ik = sol.element_currents[eid]
            vk = sol.element_voltages[eid]
            assert (vk.conjugate() * ik + ik.conjugate() * vk).is_zero()

    def test_energy_balance_random(self, rng):
        for _ in range(100):
            n = random_sp_network(rng)
            w = Fraction(rng.randint(0, 6), rng.randint(1, 4))
            try:
                sol = phasor_solve(n, w)
            except Exception:
                continue
            assert energy_balance(sol) == 0


class TestBlocked:
    def test_n1_report(self, n1):
        rep = blocked_report(n1, Q(1))
        assert sorted(sorted(c) for c in rep.blocked) == [["r1"], ["r2"]]
        assert sorted(rep.unblocked) == ["c3", "l4", "l5"]
        assert all(rep.blocked_oneport_flags)
        assert blocked_open_short_check(n1, rep)

    def test_fig2b_report(self):
        n = build_named("Fig2b", BiquadParams(1, 1, Q(3, 4), Q(1, 8)))
        rep = blocked_report(n, Q(1))
        blocked_all = set().union(*rep.blocked)
        assert {"r1", "r2"} <= blocked_all
        assert all(rep.blocked_oneport_flags)
        assert blocked_open_short_check(n, rep)

    def test_rpfg_five_unblocked_storage(self, rpfg):
        rep = blocked_report(rpfg, Q(1))
        assert len(rep.unblocked) == 5
        for eid in rep.unblocked:
            assert rpfg.element(eid).is_storage()
        assert blocked_open_short_check(rpfg, rep)

    def test_hypotheses_checked(self, n1):
        with pytest.raises(HypothesesNotMet):
            blocked_report(n1, Q(7))     # not a minimum frequency
        lossless = parse_netlist("L l1 a b 1\nPORT a b")
        with pytest.raises(HypothesesNotMet):
            blocked_report(lossless, Q(1))


class TestStateSpace:
    def test_parallel_rl_hand_model(self):
        # hand derivation: state i_L; di/dt = (R/L)(i - i_L),
        # v = R(i - i_L); here R = 2, L = 3
        n = parse_netlist("R r1 a b 2\nL l1 a b 3\nPORT a b")
        ss = state_space(n)
        assert ss.state_labels == ("l1",)
        assert ss.A == ((Q(-2, 3),),)
        assert ss.B == (Q(2, 3),)
        assert ss.C == (Q(-2),)
        assert ss.D == 2
        assert ss.B[0] * ss.C[0] == Q(-4, 3)     # magnitude R^2/L
        assert ss_impedance(ss) == impedance(n)

    def test_series_rl_has_inductor_cutset(self):
        n = parse_netlist("R r1 a m 2\nL l1 m b 3\nPORT a b")
        with pytest.raises(InductorCutset, match="l1"):
            state_space(n)

    def test_capacitor_loop_detected(self):
        n = parse_netlist(
            "R r1 a m 1\nC c1 m k 1\nC c2 k b 1\nC c3 m b 1\nL l1 a b 1\n"
            "R r2 k b 2\nPORT a b")
        with pytest.raises(CapacitorLoop) as exc:
            state_space(n)
        assert set(exc.value.element_ids) == {"c1", "c2", "c3"}

    def test_transfer_equality_random(self, rng):
        done = 0
        for _ in range(80):
            n = random_sp_network(rng)
            try:
                ss = state_space(n)
            except (CapacitorLoop, InductorCutset):
                continue
            h = impedance(n)
            if isinstance(h, NoImpedance):
                continue
            assert ss_impedance(ss) == h
            done += 1
        assert done >= 20

    def test_failure_matches_graph_predicates(self, rng):
        from prsyn.analysis import _find_capacitor_loop, _find_inductor_cut
        for _ in range(80):
            n = random_sp_network(rng)
            predicted_fail = (_find_capacitor_loop(n) is not None
                              or _find_inductor_cut(n) is not None)
            try:
                state_space(n)
                assert not predicted_fail
            except (CapacitorLoop, InductorCutset):
                assert predicted_fail


class TestPBH:
    def test_minimal_parallel_rl(self):
        ss = state_space(parse_netlist("R r1 a b 2\nL l1 a b 3\nPORT a b"))
        rep = pbh_diagnostics(ss)
        assert rep.controllable and rep.observable and rep.stabilizable

    def test_fig2b_modes(self):
        W, F = Q(3, 4), Q(1, 8)
        n = build_named("Fig2b", BiquadParams(1, 1, W, F))
        ss = state_space(n)
        rep = pbh_diagnostics(ss)
        lam = -W * (1 - W) / F
        assert lam in rep.unobservable_modes
        assert Q(0) in rep.uncontrollable_modes
        assert not rep.stabilizable

    def test_rpfg_nonminimal_modes(self):
        # five states realize a degree-two impedance, so three dimensions
        # must be uncontrollable and/or unobservable
        h = biquad_template(BiquadParams(1, 1, Q(2, 3), 1))
        n = build_seven_element(theorem2_step(h), "rpfg_first")
        ss = state_space(n)
        rep = pbh_diagnostics(ss)
        assert not rep.controllable and not rep.observable
        assert int(rep.uncontrollable_poly.degree) \
            + int(rep.unobservable_poly.degree) >= 3


class TestCounts:
    def test_n1(self, n1):
        assert storage_count(n1) == 3 and mcmillan_gap(n1) == 1

    def test_seven_element(self, rpfg):
        assert storage_count(rpfg) == 5 and mcmillan_gap(rpfg) == 3

    def test_series_rl(self):
        n = parse_netlist("R r1 a m 2\nL l1 m b 3\nPORT a b")
        assert storage_count(n) == 1 and mcmillan_gap(n) == 0

    def test_gap_nonnegative_random(self, rng):
        for _ in range(60):
            assert mcmillan_gap(random_sp_network(rng)) >= 0


class TestNumericTolerance:
    def test_precision_env_override(self, monkeypatch):
        from prsyn.analysis import _numeric_tol
        assert _numeric_tol() == 1e-9
        monkeypatch.setenv("PRSYN_PRECISION", "1e-6")
        assert _numeric_tol() == 1e-6

    def test_float_path_phasor(self):
        # irrational frequency: float fallback with the default tolerance
        n = parse_netlist("R r1 a b 2\nL l1 a b 3\nPORT a b")
        sol = phasor_solve(n, 2.0 ** 0.5)
        assert energy_balance(sol) < 1e-9


class TestInconsistentDrive:
    def test_voltage_at_impedance_zero(self):
        from prsyn.analysis import InconsistentDrive
        n = parse_netlist("L l1 a m 1\nC c1 m b 1\nPORT a b")  # zero at j*1
        with pytest.raises(InconsistentDrive):
            phasor_solve(n, Q(1), drive=("voltage", QComplex(1, 0)))

    def test_current_at_impedance_pole(self):
        from prsyn.analysis import InconsistentDrive
        n = parse_netlist("L l1 a b 1\nC c1 a b 1\nPORT a b")  # pole at j*1
        with pytest.raises(InconsistentDrive):
            phasor_solve(n, Q(1), drive=("current", QComplex(1, 0)))


class TestDriveNormalization:
    def test_pole_at_omega_defaults_to_voltage_drive(self):
        n = parse_netlist("L l1 a b 1\nC c1 a b 1\nPORT a b")
        sol = phasor_solve(n, Q(1))     # impedance pole at j*1
        assert sol.source_voltage == QComplex(1, 0)
        assert sol.source_current == QComplex(0, 0)

    def test_no_pole_defaults_to_current_drive(self):
        n = parse_netlist("R r1 a b 3\nPORT a b")
        sol = phasor_solve(n, Q(2))
        assert sol.source_current == QComplex(1, 0)
