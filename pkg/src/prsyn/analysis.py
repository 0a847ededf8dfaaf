"""Independent verification engine for RLC one-ports.

Symbolic impedance by exact nodal analysis, phasor (sinusoidal trajectory)
solving, blocked-subnetwork detection at a minimum frequency, and
state-space extraction with controllability/observability diagnostics.
All paths with rational data are exact; floating point enters only when a
frequency is irrational.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union

from .polyrat import (ONE, Polynomial, Q, QComplex, RationalFunction, _as_q,
                      is_lossless, is_positive_real)
from . import network as net
from .network import (CAPACITOR, INDUCTOR, RESISTOR, Element, Network,
                      OnePort, OpenCircuit, ShortCircuit, one_port_boundary)


class AnalysisError(Exception):
    pass


class InconsistentDrive(AnalysisError):
    pass


class HypothesesNotMet(AnalysisError):
    pass


class ExtractionFailure(AnalysisError):
    """State extraction impossible; carries the offending element ids."""

    def __init__(self, element_ids: Sequence[str], message: str):
        super().__init__(message)
        self.element_ids = tuple(sorted(element_ids))


class CapacitorLoop(ExtractionFailure):
    pass


class InductorCutset(ExtractionFailure):
    pass



def _numeric_tol() -> float:
    """Float-path tolerance; overridable via PRSYN_PRECISION."""
    return float(os.environ.get("PRSYN_PRECISION", "1e-9"))


class NoImpedance:
    """Degenerate value: the port current/voltage law collapses (q = 0)."""

    def __repr__(self):
        return "NoImpedance()"

    def __eq__(self, other):
        return isinstance(other, NoImpedance)

    def __hash__(self):
        return hash("NoImpedance")


# ---------------------------------------------------------------------------
# exact impedance by nodal analysis
# ---------------------------------------------------------------------------

def _poly_det(matrix: List[List[Polynomial]]) -> Polynomial:
    """Fraction-free Bareiss determinant over Q[s]."""
    n = len(matrix)
    if n == 0:
        return ONE
    m = [row[:] for row in matrix]
    sign = 1
    prev = ONE
    for col in range(n - 1):
        if m[col][col].is_zero():
            swap = next((r for r in range(col + 1, n) if not m[r][col].is_zero()), None)
            if swap is None:
                return Polynomial()
            m[col], m[swap] = m[swap], m[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                num = m[r][c] * m[col][col] - m[r][col] * m[col][c]
                quo, rem = divmod(num, prev)
                assert rem.is_zero(), "Bareiss division must be exact"
                m[r][c] = quo
            m[r][col] = Polynomial()
        prev = m[col][col]
    return m[n - 1][n - 1] * sign


def _scaled_admittance(e: Element) -> Polynomial:
    """s * y_e as a polynomial: R -> s/R, L -> 1/L, C -> C s^2."""
    if e.kind == RESISTOR:
        return Polynomial([0, 1 / e.value])
    if e.kind == INDUCTOR:
        return Polynomial([1 / e.value])
    return Polynomial([0, 0, e.value])


def impedance(n: Network) -> Union[RationalFunction, NoImpedance]:
    """Exact driving-point impedance, asserted positive-real.

    Nodal analysis over Q[s] with all admittances scaled by s, determinants
    by fraction-free elimination; H = s * cofactor / determinant."""
    ground = n.port[1]
    nodes = [v for v in n.vertices if v != ground]
    idx = {v: i for i, v in enumerate(nodes)}
    k = len(nodes)
    mat = [[Polynomial() for _ in range(k)] for _ in range(k)]
    for e in n.elements:
        y = _scaled_admittance(e)
        for (u, w) in ((e.head, e.tail), (e.tail, e.head)):
            if u == ground:
                continue
            i = idx[u]
            mat[i][i] = mat[i][i] + y
            if w != ground:
                mat[i][idx[w]] = mat[i][idx[w]] - y
    det = _poly_det(mat)
    if det.is_zero():
        return NoImpedance()
    a = idx[n.port[0]]
    minor = [[mat[r][c] for c in range(k) if c != a] for r in range(k) if r != a]
    cof = _poly_det(minor)
    h = RationalFunction(cof * Polynomial([0, 1]), det)
    assert is_positive_real(h), "network impedance must be positive-real"
    return h


def impedance_series_parallel(n: Network) -> Optional[RationalFunction]:
    """Independent oracle: recursive series/parallel reduction, or None if
    the network is not series-parallel."""
    tree = net.sp_tree(n)
    if tree is None:
        return None

    def reduce_tree(t) -> RationalFunction:
        if isinstance(t, net.Leaf):
            return t.element.impedance()
        parts = [reduce_tree(p) for p in t.parts]
        if isinstance(t, net.Ser):
            total = parts[0]
            for p in parts[1:]:
                total = total + p
            return total
        inv = parts[0].reciprocal()
        for p in parts[1:]:
            inv = inv + p.reciprocal()
        return inv.reciprocal()

    return reduce_tree(tree)


def storage_count(n: Network) -> int:
    return sum(1 for e in n.elements if e.is_storage())


def mcmillan_gap(n: Network) -> int:
    h = impedance(n)
    if isinstance(h, NoImpedance):
        raise AnalysisError("network has no impedance")
    return storage_count(n) - h.mcmillan_degree


# ---------------------------------------------------------------------------
# complex linear algebra over QComplex (exact) or complex (float fallback)
# ---------------------------------------------------------------------------

def _solve_with_nullspace(rows, rhs, zero, is_zero):
    """Gauss-Jordan returning (particular, nullspace basis) or None if the
    system is inconsistent.  Works for QComplex (exact) and complex."""
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    aug = [list(rows[r]) + [rhs[r]] for r in range(m)]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for rr in range(r, m):
            if not is_zero(aug[rr][c]):
                piv = rr
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for rr in range(m):
            if rr != r and not is_zero(aug[rr][c]):
                f = aug[rr][c]
                aug[rr] = [x - f * y for x, y in zip(aug[rr], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for rr in range(r, m):
        if not is_zero(aug[rr][ncols]):
            return None
    particular = [zero] * ncols
    for i, c in enumerate(pivots):
        particular[c] = aug[i][ncols]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = zero + 1
        for i, c in enumerate(pivots):
            vec[c] = -aug[i][fc]
        basis.append(vec)
    return particular, basis


# ---------------------------------------------------------------------------
# phasor solving
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhasorSolution:
    """Sinusoidal trajectory at a fixed frequency: source and per-element
    phasor current/voltage pairs (exact when the frequency is rational)."""

    frequency: object                      # Fraction or float
    source_current: object                 # QComplex or complex
    source_voltage: object
    element_currents: Dict[str, object]
    element_voltages: Dict[str, object]
    free_modes: int = 0                    # dimension of the solution space


def _element_z_at(e: Element, omega, exact: bool):
    """Impedance value at s = j*omega, or None for a pole there."""
    if exact:
        if e.kind == RESISTOR:
            return QComplex(e.value, 0)
        if e.kind == INDUCTOR:
            return QComplex(0, omega * e.value)
        if omega == 0:
            return None                     # capacitor pole at s = 0
        return QComplex(0, Fraction(-1, 1) / (omega * e.value))
    w = float(omega)
    if e.kind == RESISTOR:
        return complex(float(e.value), 0.0)
    if e.kind == INDUCTOR:
        return 1j * w * float(e.value)
    if w == 0.0:
        return None
    return -1j / (w * float(e.value))


def _phasor_system(n: Network, omega, drive: Tuple[str, object], exact: bool):
    """Tableau rows for the phasor unknowns [potentials, element currents,
    source current]; ground is the port minus terminal."""
    if exact:
        zero = QComplex(0, 0)

        def is_zero(x):
            return x.is_zero()
    else:
        zero = 0j

        def is_zero(x):
            return abs(x) <= _numeric_tol() * 1e-3

    ground = n.port[1]
    nodes = [v for v in n.vertices if v != ground]
    nidx = {v: i for i, v in enumerate(nodes)}
    m = len(n.elements)
    ncols = len(nodes) + m + 1
    isrc = len(nodes) + m
    rows: List[List[object]] = []
    rhs: List[object] = []

    def new_row():
        rows.append([zero] * ncols)
        rhs.append(zero)
        return rows[-1]

    # KCL per non-ground node (element currents leave the head)
    kcl = {v: new_row() for v in nodes}
    for j, e in enumerate(n.elements):
        col = len(nodes) + j
        if e.head != ground:
            kcl[e.head][col] = kcl[e.head][col] + 1
        if e.tail != ground:
            kcl[e.tail][col] = kcl[e.tail][col] - 1
    if n.port[0] != ground:
        kcl[n.port[0]][isrc] = kcl[n.port[0]][isrc] - 1

    # element laws
    for j, e in enumerate(n.elements):
        row = new_row()
        z = _element_z_at(e, omega, exact)
        col = len(nodes) + j
        if z is None:
            row[col] = row[col] + 1         # pole at j*omega: current is zero
            continue
        if e.head != ground:
            row[nidx[e.head]] = row[nidx[e.head]] + 1
        if e.tail != ground:
            row[nidx[e.tail]] = row[nidx[e.tail]] - 1
        row[col] = row[col] - z

    # drive
    row = new_row()
    mode, value = drive
    if mode == "current":
        row[isrc] = row[isrc] + 1
    elif mode == "voltage":
        if n.port[0] != ground:
            row[nidx[n.port[0]]] = row[nidx[n.port[0]]] + 1
        else:
            raise AnalysisError("degenerate port")
    else:
        raise ValueError(f"unknown drive mode {mode!r}")
    rhs[-1] = value if not exact else QComplex(value.re, value.im)

    return rows, rhs, nodes, nidx, zero, is_zero


def phasor_solve(n: Network, omega, drive: Optional[Tuple[str, object]] = None,
                 seed: Optional[int] = None) -> PhasorSolution:
    """Solve for a sinusoidal trajectory at frequency omega.

    drive is ("current", phasor) or ("voltage", phasor); default drives unit
    current unless the impedance has a pole at j*omega, in which case unit
    voltage.  When internal resonant modes make the trajectory non-unique,
    a deterministic pseudo-random combination of the free modes (from
    ``seed``) is added so the returned trajectory is generic.
    """
    exact = not isinstance(omega, float)
    if exact:
        omega = _as_q(omega)
    if drive is None:
        h = impedance(n)
        pole = (not isinstance(h, NoImpedance)
                and _has_pole_at_jomega(h, omega, exact))
        one = QComplex(1, 0) if exact else 1 + 0j
        drive = ("voltage", one) if pole else ("current", one)
    else:
        mode, val = drive
        if exact and not isinstance(val, QComplex):
            val = QComplex(val, 0)
        drive = (mode, val)

    rows, rhs, nodes, nidx, zero, is_zero = _phasor_system(n, omega, drive, exact)
    solved = _solve_with_nullspace(rows, rhs, zero, is_zero)
    if solved is None:
        raise InconsistentDrive(
            f"no sinusoidal trajectory with drive {drive[0]}={drive[1]} at omega={omega}")
    particular, basis = solved
    vec = list(particular)
    if basis:
        rng = random.Random(seed if seed is not None else 0)
        for b in basis:
            if exact:
                c = QComplex(Fraction(rng.randint(1, 997), 61),
                             Fraction(rng.randint(1, 991), 53))
            else:
                c = complex(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0))
            vec = [x + c * y for x, y in zip(vec, b)]
    return _package_solution(n, omega, vec, nodes, nidx, zero, len(basis), exact)


def _has_pole_at_jomega(h: RationalFunction, omega, exact: bool) -> bool:
    if exact:
        a, b = h.den.eval_jomega(omega * omega)
        return a == 0 and b == 0
    val = complex(h.den(1j * float(omega)))
    return abs(val) <= _numeric_tol()


def _package_solution(n, omega, vec, nodes, nidx, zero, free_dim, exact):
    ground = n.port[1]

    def pot(v):
        return zero if v == ground else vec[nidx[v]]

    currents = {}
    voltages = {}
    for j, e in enumerate(n.elements):
        currents[e.id] = vec[len(nodes) + j]
        voltages[e.id] = pot(e.head) - pot(e.tail)
    src_i = vec[len(nodes) + len(n.elements)]
    src_v = pot(n.port[0]) - pot(n.port[1])
    return PhasorSolution(omega, src_i, src_v, currents, voltages, free_dim)


def energy_balance(sol: PhasorSolution):
    """|LHS - RHS| of the phasor power identity
    v*conj(i) + conj(v)*i = sum_k v_k*conj(i_k) + conj(v_k)*i_k;
    exactly zero (a Fraction) on rational paths."""
    v, i = sol.source_voltage, sol.source_current
    lhs = _conj(v) * i + _conj(i) * v
    rhs = None
    for eid, ik in sol.element_currents.items():
        vk = sol.element_voltages[eid]
        term = _conj(vk) * ik + _conj(ik) * vk
        rhs = term if rhs is None else rhs + term
    if rhs is None:
        rhs = lhs * 0
    diff = lhs - rhs
    if isinstance(diff, QComplex):
        return Q(0) if diff.is_zero() else math.sqrt(float(diff.abs2()))
    return abs(diff)


def _conj(x):
    return x.conjugate()


# ---------------------------------------------------------------------------
# blocked subnetworks (minimum-frequency structure)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockReport:
    """Partition of a network into maximal-blocked subnetworks and unblocked
    elements for a generic sinusoidal trajectory at omega0."""

    omega0: object
    blocked: Tuple[FrozenSet[str], ...]
    unblocked: FrozenSet[str]
    blocked_oneport_flags: Tuple[bool, ...]
    blocked_terminals: Tuple[Optional[Tuple[str, str]], ...]
    draws_disagree: bool


def blocked_report(n: Network, omega0, seed: int = 0, draws: int = 3) -> BlockReport:
    """Blocked/unblocked partition at a minimum frequency omega0.

    Requires (checked): the impedance is not lossless, has no pole at
    j*omega0, and H(j*omega0) is purely imaginary and nonzero.  Asserts the
    structural laws a minimum-frequency trajectory must satisfy; with at
    most four storage elements additionally asserts the counting laws."""
    exact = not isinstance(omega0, float)
    if exact:
        omega0 = _as_q(omega0)
    h = impedance(n)
    if isinstance(h, NoImpedance):
        raise HypothesesNotMet("network has no impedance")
    if is_lossless(h):
        raise HypothesesNotMet("impedance is lossless")
    if exact:
        try:
            re, im = h.eval_jomega_pair(omega0 * omega0)
        except ZeroDivisionError:
            raise HypothesesNotMet("impedance has a pole at j*omega0")
        if re != 0 or im == 0:
            raise HypothesesNotMet("H(j*omega0) must be nonzero purely imaginary")
    else:
        val = complex(h.num(1j * omega0)) / complex(h.den(1j * omega0))
        if abs(val.real) > _numeric_tol() or abs(val.imag) < _numeric_tol():
            raise HypothesesNotMet("H(j*omega0) must be nonzero purely imaginary")

    zero_sets = []
    sols = []
    for t in range(draws):
        sol = phasor_solve(n, omega0, seed=seed * 1000003 + t)
        sols.append(sol)
        zs = set()
        for e in n.elements:
            ik, vk = sol.element_currents[e.id], sol.element_voltages[e.id]
            if exact:
                if ik.is_zero() and vk.is_zero():
                    zs.add(e.id)
            else:
                if abs(ik) <= _numeric_tol() and abs(vk) <= _numeric_tol():
                    zs.add(e.id)
        zero_sets.append(zs)
    blocked_ids = set.intersection(*zero_sets)
    disagree = any(zs != blocked_ids for zs in zero_sets)

    comps = _element_components(n, blocked_ids)
    unblocked = frozenset(e.id for e in n.elements) - blocked_ids
    flags = []
    terminals = []
    for comp in comps:
        boundary = one_port_boundary(n, comp)
        flags.append(len(boundary) == 2)
        terminals.append(tuple(sorted(boundary)) if len(boundary) == 2 else None)

    report = BlockReport(omega0, tuple(frozenset(c) for c in comps),
                         frozenset(unblocked), tuple(flags), tuple(terminals),
                         disagree)
    _assert_blocked_laws(n, report, sols[0])
    return report


def _element_components(n: Network, ids: Set[str]) -> List[Set[str]]:
    """Connected components (by shared vertices) of an element subset."""
    elems = [e for e in n.elements if e.id in ids]
    comps = []
    remaining = {e.id: e for e in elems}
    while remaining:
        eid, e = next(iter(remaining.items()))
        comp = {eid}
        verts = {e.head, e.tail}
        del remaining[eid]
        grew = True
        while grew:
            grew = False
            for oid, o in list(remaining.items()):
                if o.head in verts or o.tail in verts:
                    comp.add(oid)
                    verts |= {o.head, o.tail}
                    del remaining[oid]
                    grew = True
        comps.append(comp)
    return sorted(comps, key=lambda c: sorted(c))


def _assert_blocked_laws(n: Network, report: BlockReport, sol: PhasorSolution):
    # 1. the driving-point trajectory is nonzero in both coordinates
    assert not _is_zero_phasor(sol.source_current), "driving current vanished"
    assert not _is_zero_phasor(sol.source_voltage), "driving voltage vanished"
    # 2. every resistor is blocked
    blocked_all = set().union(*report.blocked) if report.blocked else set()
    for e in n.elements:
        if e.kind == RESISTOR:
            assert e.id in blocked_all, f"resistor {e.id} is not blocked"
    elems = {e.id: e for e in n.elements}
    unblocked_at: Dict[str, List[str]] = {}
    for eid in report.unblocked:
        e = elems[eid]
        unblocked_at.setdefault(e.head, []).append(eid)
        unblocked_at.setdefault(e.tail, []).append(eid)
    src_at = set(n.port)
    for comp in report.blocked:
        verts = {v for eid in comp for v in (elems[eid].head, elems[eid].tail)}
        # 3./4. incidence rules at blocked-subnetwork vertices
        for v in verts:
            here = unblocked_at.get(v, [])
            if v in src_at:
                assert here, f"source joins blocked subnetwork at {v} alone"
            if here:
                assert v in src_at or len(here) >= 2, (
                    f"lone unblocked element at blocked vertex {v}")
        # 5. no two-vertex contact by the source or a single unblocked element
        assert not (n.port[0] in verts and n.port[1] in verts), \
            "source spans a blocked subnetwork"
        for eid in report.unblocked:
            e = elems[eid]
            assert not (e.head in verts and e.tail in verts), (
                f"unblocked element {eid} spans a blocked subnetwork")
    if storage_count(n) <= 4:
        # 6. three or four unblocked elements, all storage
        assert len(report.unblocked) in (3, 4), "unblocked count must be 3 or 4"
        for eid in report.unblocked:
            assert elems[eid].is_storage(), f"unblocked {eid} is not storage"
        # 7. one or two maximal-blocked subnetworks, each a one-port
        assert len(report.blocked) in (1, 2), "expected 1 or 2 blocked subnetworks"
        assert all(report.blocked_oneport_flags), "blocked subnetworks must be one-ports"


def _is_zero_phasor(x) -> bool:
    if isinstance(x, QComplex):
        return x.is_zero()
    return abs(x) <= _numeric_tol()


def blocked_open_short_check(n: Network, report: BlockReport) -> bool:
    """Check that opening or shorting each maximal-blocked one-port
    preserves the impedance value at j*omega0 (sequentially for the second
    one when it remains a one-port)."""
    omega0 = _as_q(report.omega0)
    w2 = omega0 * omega0
    h = impedance(n)
    target = h.eval_jomega_pair(w2)

    def value_at(reduced) -> Optional[Tuple[Fraction, Fraction]]:
        if isinstance(reduced, OpenCircuit):
            return None
        if isinstance(reduced, ShortCircuit):
            return (Q(0), Q(0))
        hr = impedance(reduced)
        if isinstance(hr, NoImpedance):
            return None
        try:
            return hr.eval_jomega_pair(w2)
        except ZeroDivisionError:
            return None

    current = n
    for comp, flag, terms in zip(report.blocked, report.blocked_oneport_flags,
                                 report.blocked_terminals):
        if not flag:
            return False
        if current is not n:
            # the one-port must survive into the reduced network
            present = {e.id for e in current.elements}
            if not comp <= present:
                continue
            boundary = one_port_boundary(current, comp)
            if len(boundary) != 2:
                continue
            port_obj = OnePort(current, frozenset(comp), tuple(sorted(boundary)))
        else:
            port_obj = OnePort(current, frozenset(comp), terms)
        succeeded = None
        for op in (net.open_oneport, net.short_oneport):
            reduced = op(current, port_obj)
            if value_at(reduced) == target:
                succeeded = reduced
                break
        if succeeded is None or isinstance(succeeded, (OpenCircuit, ShortCircuit)):
            if succeeded is None:
                return False
            continue
        current = succeeded
    return True


# ---------------------------------------------------------------------------
# state-space extraction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StateSpace:
    """dx/dt = A x + B i, v = C x + D i with states the inductor currents
    (netlist order) then capacitor voltages (netlist order)."""

    A: Tuple[Tuple[Fraction, ...], ...]
    B: Tuple[Fraction, ...]
    C: Tuple[Fraction, ...]
    D: Fraction
    state_labels: Tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.state_labels)


def _find_capacitor_loop(n: Network) -> Optional[List[str]]:
    caps = [e for e in n.elements if e.kind == CAPACITOR]
    adj: Dict[str, List[Tuple[str, str]]] = {}
    for e in caps:
        adj.setdefault(e.head, []).append((e.tail, e.id))
        adj.setdefault(e.tail, []).append((e.head, e.id))
    seen: Dict[str, Tuple[Optional[str], Optional[str]]] = {}
    for root in adj:
        if root in seen:
            continue
        seen[root] = (None, None)
        stack = [root]
        while stack:
            x = stack.pop()
            for (y, eid) in adj[x]:
                if eid == seen[x][1]:
                    continue
                if y in seen:
                    # found a cycle: walk both endpoints to their root paths
                    path_x, path_y = [], []
                    v = x
                    while v is not None:
                        path_x.append(v)
                        v = seen[v][0]
                    v = y
                    while v is not None:
                        path_y.append(v)
                        v = seen[v][0]
                    common = next(v for v in path_x if v in set(path_y))
                    cyc = [eid]
                    v = x
                    while v != common:
                        cyc.append(seen[v][1])
                        v = seen[v][0]
                    v = y
                    while v != common:
                        cyc.append(seen[v][1])
                        v = seen[v][0]
                    return sorted(set(cyc))
                seen[y] = (x, eid)
                stack.append(y)
    return None


def _find_inductor_cut(n: Network) -> Optional[List[str]]:
    """Inductors forming an all-inductor cut (with or without the source)."""
    edges = [(e.head, e.tail, e.id) for e in n.elements if e.kind != INDUCTOR]
    adj = net._adjacency(edges)
    comp: Dict[str, int] = {}
    cid = 0
    for v in n.vertices:
        if v in comp:
            continue
        stack = [v]
        comp[v] = cid
        while stack:
            x = stack.pop()
            for (y, _) in adj.get(x, ()):
                if y not in comp:
                    comp[y] = cid
                    stack.append(y)
        cid += 1
    if cid == 1:
        return None
    cut = [e.id for e in n.elements
           if e.kind == INDUCTOR and comp[e.head] != comp[e.tail]]
    return sorted(cut)


def _solve_rational_system(mat: List[List[Fraction]],
                           rhs: List[List[Fraction]]) -> List[List[Fraction]]:
    """Solve mat * X = rhs (multiple right-hand columns), exact."""
    k = len(mat)
    width = len(rhs[0])
    aug = [list(mat[r]) + list(rhs[r]) for r in range(k)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if piv is None:
            raise AnalysisError("singular algebraic system in state extraction")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def state_space(n: Network) -> StateSpace:
    """Extract the (A, B, C, D) model with states the inductor currents and
    capacitor voltages.

    Raises CapacitorLoop when the capacitors contain a circuit (their
    voltages are then linearly dependent) and InductorCutset when the
    inductors contain a cut-set (their currents are then constrained)."""
    loop = _find_capacitor_loop(n)
    if loop is not None:
        raise CapacitorLoop(loop, f"capacitor loop: {', '.join(loop)}")
    cut = _find_inductor_cut(n)
    if cut is not None:
        raise InductorCutset(cut, f"inductor cut-set: {', '.join(cut)}")

    inductors = [e for e in n.elements if e.kind == INDUCTOR]
    capacitors = [e for e in n.elements if e.kind == CAPACITOR]
    states = [e.id for e in inductors] + [e.id for e in capacitors]
    nstate = len(states)
    ncols = nstate + 1                     # coefficients over (x..., i)

    ground = n.port[1]
    nodes = [v for v in n.vertices if v != ground]
    nidx = {v: i for i, v in enumerate(nodes)}
    ncap = len(capacitors)
    k = len(nodes) + ncap                  # unknowns: potentials + cap currents
    mat = [[Q(0)] * k for _ in range(k)]
    rhs = [[Q(0)] * ncols for _ in range(k)]

    def state_col(eid: str) -> int:
        return states.index(eid)

    # KCL rows (currents leaving each non-ground node sum to zero; the
    # source injects the input current i at the plus terminal)
    for e in n.elements:
        if e.kind == RESISTOR:
            g = 1 / e.value
            for (v, sgn) in ((e.head, 1), (e.tail, -1)):
                if v == ground:
                    continue
                r = nidx[v]
                if e.head != ground:
                    mat[r][nidx[e.head]] += sgn * g
                if e.tail != ground:
                    mat[r][nidx[e.tail]] -= sgn * g
        elif e.kind == CAPACITOR:
            c = len(nodes) + capacitors.index(e)
            for (v, sgn) in ((e.head, 1), (e.tail, -1)):
                if v != ground:
                    mat[nidx[v]][c] += sgn
        else:                               # inductor: known state current
            col = state_col(e.id)
            for (v, sgn) in ((e.head, 1), (e.tail, -1)):
                if v != ground:
                    rhs[nidx[v]][col] -= sgn
    if n.port[0] != ground:
        rhs[nidx[n.port[0]]][nstate] += 1
    # capacitor voltage constraints: e_head - e_tail = v_C
    for j, e in enumerate(capacitors):
        r = len(nodes) + j
        if e.head != ground:
            mat[r][nidx[e.head]] += 1
        if e.tail != ground:
            mat[r][nidx[e.tail]] -= 1
        rhs[r][state_col(e.id)] += 1

    sol = _solve_rational_system(mat, rhs)

    def potential_row(v: str) -> List[Fraction]:
        if v == ground:
            return [Q(0)] * ncols
        return sol[nidx[v]]

    a_rows: List[List[Fraction]] = []
    b_col: List[Fraction] = []
    for e in inductors:
        vrow = [h - t for h, t in zip(potential_row(e.head), potential_row(e.tail))]
        row = [x / e.value for x in vrow]
        a_rows.append(row[:nstate])
        b_col.append(row[nstate])
    for j, e in enumerate(capacitors):
        irow = sol[len(nodes) + j]
        row = [x / e.value for x in irow]
        a_rows.append(row[:nstate])
        b_col.append(row[nstate])
    vout = potential_row(n.port[0])
    return StateSpace(tuple(tuple(r) for r in a_rows), tuple(b_col),
                      tuple(vout[:nstate]), vout[nstate], tuple(states))


def ss_impedance(ss: StateSpace) -> RationalFunction:
    """D + C (sI - A)^{-1} B as an exact rational function (Faddeev
    recursion for the resolvent)."""
    nn = ss.n
    A = [[Q(x) for x in row] for row in ss.A]
    # Faddeev-LeVerrier: M_{k+1} = A M_k + c_k I, char coeffs c_k
    M = [[Q(1) if i == j else Q(0) for j in range(nn)] for i in range(nn)]
    coeffs = [Q(1)]                         # char poly s^n + c1 s^(n-1) + ...
    CMB_terms: List[Fraction] = []

    def mat_mul(X, Y):
        return [[sum(X[i][t] * Y[t][j] for t in range(nn)) for j in range(nn)]
                for i in range(nn)]

    def trace(X):
        return sum(X[i][i] for i in range(nn))

    def cmb(X) -> Fraction:
        return sum(ss.C[i] * X[i][j] * ss.B[j]
                   for i in range(nn) for j in range(nn))

    CMB_terms.append(cmb(M))
    Mk = M
    for k in range(1, nn + 1):
        AM = mat_mul(A, Mk)
        ck = -trace(AM) / k
        coeffs.append(ck)
        if k < nn:
            Mk = [[AM[i][j] + (ck if i == j else 0) for j in range(nn)]
                  for i in range(nn)]
            CMB_terms.append(cmb(Mk))

    char = Polynomial(list(reversed(coeffs)))
    num = Polynomial(list(reversed(CMB_terms)))
    return RationalFunction(num, char) + RationalFunction(Polynomial([ss.D]))


# ---------------------------------------------------------------------------
# PBH diagnostics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PBHReport:
    """Uncontrollable/unobservable mode polynomials and their rational
    roots; stabilizable means no uncontrollable mode in the closed RHP."""

    uncontrollable_poly: Polynomial
    unobservable_poly: Polynomial
    uncontrollable_modes: Tuple[Fraction, ...]
    unobservable_modes: Tuple[Fraction, ...]
    controllable: bool
    observable: bool
    stabilizable: bool


def _si_minus_a(ss: StateSpace) -> List[List[Polynomial]]:
    nn = ss.n
    return [[Polynomial([-ss.A[i][j], 1]) if i == j else Polynomial([-ss.A[i][j]])
             for j in range(nn)] for i in range(nn)]


def _wide_minor_gcd(rows: List[List[Polynomial]]) -> Polynomial:
    """gcd of the maximal minors of an n x (n+1) polynomial matrix."""
    nn = len(rows)
    g = Polynomial()
    for drop in range(nn + 1):
        sub = [[row[c] for c in range(nn + 1) if c != drop] for row in rows]
        d = _poly_det(sub)
        g = d.monic() if g.is_zero() else g.gcd(d)
        if not g.is_zero() and g.degree == 0:
            return ONE
    return g


def _tall_minor_gcd(rows: List[List[Polynomial]]) -> Polynomial:
    """gcd of the maximal minors of an (n+1) x n polynomial matrix."""
    nn = len(rows) - 1
    g = Polynomial()
    for drop in range(nn + 1):
        sub = [rows[r] for r in range(nn + 1) if r != drop]
        d = _poly_det(sub)
        g = d.monic() if g.is_zero() else g.gcd(d)
        if not g.is_zero() and g.degree == 0:
            return ONE
    return g


def pbh_diagnostics(ss: StateSpace) -> PBHReport:
    """Exact PBH analysis via polynomial minor gcds.

    The uncontrollable (resp. unobservable) modes are the roots of the gcd
    of the maximal minors of [sI - A, B] (resp. [sI - A; C]); rational
    roots are listed explicitly and irrational ones remain inside the
    returned polynomials.  Stabilizability is decided exactly with a
    Hurwitz test on the uncontrollable polynomial."""
    from .polyrat import rational_roots, strict_hurwitz

    nn = ss.n
    sia = _si_minus_a(ss)
    wide = [sia[r] + [Polynomial([ss.B[r]])] for r in range(nn)]
    u = _wide_minor_gcd(wide)
    tall = [list(row) for row in sia] + [[Polynomial([c]) for c in ss.C]]
    o = _tall_minor_gcd(tall)

    u_modes = tuple(rational_roots(u)) if u.degree >= 1 else ()
    o_modes = tuple(rational_roots(o)) if o.degree >= 1 else ()
    controllable = u.degree < 1
    observable = o.degree < 1
    stabilizable = controllable or strict_hurwitz(u)
    return PBHReport(u, o, u_modes, o_modes, controllable, observable,
                     stabilizable)
