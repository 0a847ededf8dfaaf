"""One-port RLC network model: netlist format, graph structure, transforms.

A network is a labelled multigraph of R/L/C elements plus a distinguished
source port.  The graph including a virtual source edge across the port
must be connected and biconnected; elements outside the source's
biconnected component are rejected at parse time and silently pruned by
the open/short reductions (where the pruning is part of the operation).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple, Union

from .polyrat import Polynomial, Q, RationalFunction, _as_q

RESISTOR, INDUCTOR, CAPACITOR = "R", "L", "C"
ELECTRICAL_KINDS = (RESISTOR, INDUCTOR, CAPACITOR)
DAMPER, SPRING, INERTER = "DAMPER", "SPRING", "INERTER"
MECHANICAL_KINDS = (DAMPER, SPRING, INERTER)


class NetworkError(Exception):
    pass


class NetlistSyntaxError(NetworkError):
    pass


class NotBiconnected(NetworkError):
    pass


class NonpositiveValue(NetworkError):
    pass


class MissingPort(NetworkError):
    pass


class NotPlanarDualizable(NetworkError):
    pass


@dataclass(frozen=True)
class Element:
    """Two-terminal element, oriented head -> tail as written in the netlist."""

    id: str
    kind: str
    head: str
    tail: str
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", _as_q(self.value))
        if self.kind not in ELECTRICAL_KINDS + MECHANICAL_KINDS:
            raise NetworkError(f"unknown element kind {self.kind!r}")
        if self.value <= 0:
            raise NonpositiveValue(f"element {self.id}: value must be positive")
        if self.head == self.tail:
            raise NetworkError(f"element {self.id}: self-loop not allowed")

    def impedance(self) -> RationalFunction:
        """Element impedance R, Ls, or 1/(Cs)."""
        if self.kind == RESISTOR:
            return RationalFunction(Polynomial([self.value]))
        if self.kind == INDUCTOR:
            return RationalFunction(Polynomial([0, self.value]))
        if self.kind == CAPACITOR:
            return RationalFunction(Polynomial([1]), Polynomial([0, self.value]))
        raise NetworkError(f"element {self.id} has no electrical impedance")

    def is_storage(self) -> bool:
        return self.kind in (INDUCTOR, CAPACITOR)


def _check_graph(vertices, elements, port, *, cls_name):
    vset = set(vertices)
    if port[0] == port[1]:
        raise MissingPort("port terminals must be distinct")
    for t in port:
        if t not in vset:
            raise MissingPort(f"port terminal {t!r} is not a vertex")
    ids = set()
    for e in elements:
        if e.id in ids:
            raise NetworkError(f"duplicate element id {e.id!r}")
        ids.add(e.id)
        for v in (e.head, e.tail):
            if v not in vset:
                raise NetworkError(f"element {e.id}: unknown vertex {v!r}")
    # connectivity and biconnectivity of the graph *including* the source edge
    edges = [(e.head, e.tail, e.id) for e in elements] + [(port[0], port[1], "__source__")]
    comp = _edge_biconnected_components(vset, edges)
    source_comp = next(c for c in comp if "__source__" in c)
    outside = [eid for c in comp if c is not source_comp for eid in c]
    if outside or not _connected(vset, edges):
        bad = sorted(x for x in outside if x != "__source__")
        raise NotBiconnected(
            f"{cls_name}: element(s) {', '.join(bad) or '<none>'} are not in "
            "the source's biconnected component")


class Network:
    """Immutable RLC one-port."""

    __slots__ = ("vertices", "elements", "port")

    def __init__(self, vertices: Iterable[str], elements: Iterable[Element],
                 port: Tuple[str, str]):
        vertices = tuple(sorted(set(vertices)))
        elements = tuple(elements)
        port = (port[0], port[1])
        for e in elements:
            if e.kind not in ELECTRICAL_KINDS:
                raise NetworkError(f"element {e.id}: not an electrical kind")
        _check_graph(vertices, elements, port, cls_name="Network")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "port", port)

    def __setattr__(self, *a):
        raise AttributeError("Network is immutable")

    def element(self, eid: str) -> Element:
        for e in self.elements:
            if e.id == eid:
                return e
        raise KeyError(eid)

    def storage_elements(self) -> Tuple[Element, ...]:
        return tuple(e for e in self.elements if e.is_storage())

    def resistors(self) -> Tuple[Element, ...]:
        return tuple(e for e in self.elements if e.kind == RESISTOR)

    def __eq__(self, other):
        if not isinstance(other, Network):
            return NotImplemented
        return (self.vertices == other.vertices and self.port == other.port
                and sorted(self.elements, key=lambda e: e.id)
                == sorted(other.elements, key=lambda e: e.id))

    def __hash__(self):
        return hash((self.vertices, self.port,
                     tuple(sorted(self.elements, key=lambda e: e.id))))

    def __repr__(self):
        return (f"Network({len(self.elements)} elements, "
                f"port {self.port[0]}->{self.port[1]})")

    def __str__(self):
        return serialize_netlist(self)


@dataclass(frozen=True)
class MechElement:
    id: str
    kind: str
    head: str
    tail: str
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", _as_q(self.value))
        if self.kind not in MECHANICAL_KINDS:
            raise NetworkError(f"unknown mechanical kind {self.kind!r}")
        if self.value <= 0:
            raise NonpositiveValue(f"element {self.id}: value must be positive")
        if self.head == self.tail:
            raise NetworkError(f"element {self.id}: self-loop not allowed")


class MechanicalNetwork:
    """Damper/spring/inerter one-port under the force-current analogy."""

    __slots__ = ("vertices", "elements", "port")

    def __init__(self, vertices, elements, port):
        vertices = tuple(sorted(set(vertices)))
        elements = tuple(elements)
        port = (port[0], port[1])
        _check_graph(vertices, elements, port, cls_name="MechanicalNetwork")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "port", port)

    def __setattr__(self, *a):
        raise AttributeError("MechanicalNetwork is immutable")

    def __eq__(self, other):
        if not isinstance(other, MechanicalNetwork):
            return NotImplemented
        return (self.vertices == other.vertices and self.port == other.port
                and sorted(self.elements, key=lambda e: e.id)
                == sorted(other.elements, key=lambda e: e.id))

    def __hash__(self):
        return hash((self.vertices, self.port,
                     tuple(sorted(self.elements, key=lambda e: e.id))))

    def __str__(self):
        return serialize_netlist(self)


@dataclass(frozen=True)
class OnePort:
    """Connected element subset touching the rest of the network (and the
    source) at exactly its two terminal vertices."""

    parent: Network
    element_ids: FrozenSet[str]
    terminals: Tuple[str, str]

    def __post_init__(self):
        object.__setattr__(self, "element_ids", frozenset(self.element_ids))
        if not self.element_ids:
            raise NetworkError("one-port must contain at least one element")
        elems = [self.parent.element(eid) for eid in self.element_ids]
        verts = {v for e in elems for v in (e.head, e.tail)}
        if not _connected(verts, [(e.head, e.tail, e.id) for e in elems]):
            raise NetworkError("one-port subgraph must be connected")
        boundary = one_port_boundary(self.parent, self.element_ids)
        if boundary != set(self.terminals):
            raise NetworkError(
                f"one-port boundary {sorted(boundary)} does not match "
                f"terminals {sorted(self.terminals)}")

    def elements(self) -> List[Element]:
        return [e for e in self.parent.elements if e.id in self.element_ids]


def one_port_boundary(n: Network, element_ids: Iterable[str]) -> Set[str]:
    """Vertices of the subnetwork where the source or outside elements touch."""
    inside = set(element_ids)
    verts = {v for e in n.elements if e.id in inside for v in (e.head, e.tail)}
    boundary = set()
    for e in n.elements:
        if e.id not in inside:
            for v in (e.head, e.tail):
                if v in verts:
                    boundary.add(v)
    for v in n.port:
        if v in verts:
            boundary.add(v)
    return boundary


# ---------------------------------------------------------------------------
# basic graph algorithms (multigraph aware)
# ---------------------------------------------------------------------------

def _adjacency(edges) -> Dict[str, List[Tuple[str, str]]]:
    adj: Dict[str, List[Tuple[str, str]]] = {}
    for (u, v, eid) in edges:
        adj.setdefault(u, []).append((v, eid))
        adj.setdefault(v, []).append((u, eid))
    return adj


def _connected(vertices, edges) -> bool:
    vertices = set(vertices)
    if not vertices:
        return True
    adj = _adjacency(edges)
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for (y, _) in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen >= vertices


def _edge_biconnected_components(vertices, edges) -> List[Set[str]]:
    """Biconnected components as sets of edge ids (multigraph, iterative)."""
    adj: Dict[str, List[Tuple[str, int]]] = {v: [] for v in vertices}
    for idx, (u, v, eid) in enumerate(edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    visited: Dict[str, int] = {}
    low: Dict[str, int] = {}
    comps: List[Set[str]] = []
    stack_edges: List[int] = []
    counter = 0
    for root in vertices:
        if root in visited:
            continue
        dfs = [(root, None, iter(adj[root]))]
        visited[root] = low[root] = counter
        counter += 1
        while dfs:
            x, in_edge, it = dfs[-1]
            advanced = False
            for (y, idx) in it:
                if idx == in_edge:
                    continue
                if y not in visited:
                    stack_edges.append(idx)
                    visited[y] = low[y] = counter
                    counter += 1
                    dfs.append((y, idx, iter(adj[y])))
                    advanced = True
                    break
                elif visited[y] < visited[x]:
                    stack_edges.append(idx)
                    low[x] = min(low[x], visited[y])
            if advanced:
                continue
            dfs.pop()
            if dfs:
                px = dfs[-1][0]
                low[px] = min(low[px], low[x])
                if low[x] >= visited[px]:
                    comp = set()
                    while stack_edges:
                        idx = stack_edges.pop()
                        comp.add(edges[idx][2])
                        if idx == in_edge:
                            break
                    if comp:
                        comps.append(comp)
    return comps


def cut_vertices(n: Network) -> Set[str]:
    """Articulation points of the graph including the source edge."""
    edges = [(e.head, e.tail, e.id) for e in n.elements]
    edges.append((n.port[0], n.port[1], "__source__"))
    return _articulation_points(n.vertices, edges)


def _articulation_points(vertices, edges) -> Set[str]:
    adj: Dict[str, List[Tuple[str, int]]] = {v: [] for v in vertices}
    for idx, (u, v, _) in enumerate(edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    visited: Dict[str, int] = {}
    low: Dict[str, int] = {}
    points: Set[str] = set()
    counter = 0
    for root in vertices:
        if root in visited:
            continue
        visited[root] = low[root] = counter
        counter += 1
        root_children = 0
        dfs = [(root, None, iter(adj[root]))]
        while dfs:
            x, in_edge, it = dfs[-1]
            advanced = False
            for (y, idx) in it:
                if idx == in_edge:
                    continue
                if y not in visited:
                    if x == root:
                        root_children += 1
                    visited[y] = low[y] = counter
                    counter += 1
                    dfs.append((y, idx, iter(adj[y])))
                    advanced = True
                    break
                else:
                    low[x] = min(low[x], visited[y])
            if advanced:
                continue
            dfs.pop()
            if dfs:
                px = dfs[-1][0]
                low[px] = min(low[px], low[x])
                if px != root and low[x] >= visited[px]:
                    points.add(px)
        if root_children > 1:
            points.add(root)
    return points


def is_biconnected(n: Network) -> bool:
    edges = [(e.head, e.tail, e.id) for e in n.elements]
    edges.append((n.port[0], n.port[1], "__source__"))
    return _connected(n.vertices, edges) and not _articulation_points(n.vertices, edges)


# ---------------------------------------------------------------------------
# netlist text format
# ---------------------------------------------------------------------------

_KIND_ALIASES = {k: k for k in ELECTRICAL_KINDS + MECHANICAL_KINDS}


def parse_netlist(text: str):
    """Parse the one-statement-per-line netlist grammar.

    Electrical kinds R|L|C produce a Network; mechanical kinds
    DAMPER|SPRING|INERTER produce a MechanicalNetwork.  '#' starts a comment.
    """
    elements = []
    port = None
    kinds_seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        head = fields[0].upper()
        if head == "PORT":
            if len(fields) != 3:
                raise NetlistSyntaxError(f"line {lineno}: PORT needs two nodes")
            if port is not None:
                raise NetlistSyntaxError(f"line {lineno}: duplicate PORT")
            port = (fields[1], fields[2])
            continue
        if head not in _KIND_ALIASES:
            raise NetlistSyntaxError(f"line {lineno}: unknown statement {fields[0]!r}")
        if len(fields) != 5:
            raise NetlistSyntaxError(
                f"line {lineno}: expected '{head} <id> <node+> <node-> <value>'")
        try:
            value = Fraction(fields[4])
        except (ValueError, ZeroDivisionError) as exc:
            raise NetlistSyntaxError(f"line {lineno}: bad value {fields[4]!r}") from exc
        if value <= 0:
            raise NonpositiveValue(f"line {lineno}: value must be positive")
        kinds_seen.add("mech" if head in MECHANICAL_KINDS else "elec")
        cls = MechElement if head in MECHANICAL_KINDS else Element
        elements.append(cls(fields[1], head, fields[2], fields[3], value))
    if port is None:
        raise MissingPort("netlist has no PORT statement")
    if kinds_seen == {"mech", "elec"}:
        raise NetlistSyntaxError("cannot mix electrical and mechanical kinds")
    vertices = {v for e in elements for v in (e.head, e.tail)} | set(port)
    if kinds_seen == {"mech"}:
        return MechanicalNetwork(vertices, elements, port)
    return Network(vertices, elements, port)


def serialize_netlist(n) -> str:
    """Deterministic netlist text; inverse of parse_netlist up to whitespace."""
    lines = []
    for e in sorted(n.elements, key=lambda e: (e.kind, e.id)):
        v = e.value
        txt = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        lines.append(f"{e.kind} {e.id} {e.head} {e.tail} {txt}")
    lines.append(f"PORT {n.port[0]} {n.port[1]}")
    return "\n".join(lines) + "\n"


def network_to_json(n) -> str:
    def fmt(v: Fraction) -> str:
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    return json.dumps({
        "vertices": list(n.vertices),
        "port": list(n.port),
        "elements": [
            {"id": e.id, "kind": e.kind, "head": e.head, "tail": e.tail,
             "value": fmt(e.value)}
            for e in n.elements
        ],
    }, indent=2)


def network_from_json(text: str):
    data = json.loads(text)
    mech = any(e["kind"] in MECHANICAL_KINDS for e in data["elements"])
    cls, ecls = ((MechanicalNetwork, MechElement) if mech else (Network, Element))
    elems = [ecls(e["id"], e["kind"], e["head"], e["tail"], Fraction(e["value"]))
             for e in data["elements"]]
    return cls(data["vertices"], elems, tuple(data["port"]))


# ---------------------------------------------------------------------------
# incidence matrix
# ---------------------------------------------------------------------------

def incidence_matrix(n: Network) -> List[List[int]]:
    """Vertex-by-edge incidence matrix; column 0 is the source edge
    (oriented port+ -> port-), then elements in netlist order, oriented
    head -> tail.  Entry -1 when the edge is oriented toward the vertex."""
    rows = {v: [0] * (len(n.elements) + 1) for v in n.vertices}
    rows[n.port[0]][0] = 1
    rows[n.port[1]][0] = -1
    for j, e in enumerate(n.elements, start=1):
        rows[e.head][j] = 1
        rows[e.tail][j] = -1
    return [rows[v] for v in n.vertices]


# ---------------------------------------------------------------------------
# series / parallel structure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SPDecomposition:
    kind: str                      # "series" | "parallel" | "atomic"
    first: Optional[OnePort] = None
    second: Optional[OnePort] = None


def series_parallel_decomposition(n: Network) -> SPDecomposition:
    """Top-level split of the element graph into two one-ports, if any.

    Series: the parts share exactly one vertex; parallel: exactly two
    (the port terminals).  Impedances then add (series) or add reciprocally
    (parallel)."""
    a, b = n.port
    groups = _parallel_groups(n.elements, a, b)
    if len(groups) >= 2:
        first = frozenset(e.id for e in groups[0])
        rest = frozenset(e.id for g in groups[1:] for e in g)
        return SPDecomposition(
            "parallel",
            OnePort(n, first, (a, b)),
            OnePort(n, rest, (a, b)))
    m = _series_cut_vertex(n.elements, a, b)
    if m is not None:
        side_a, side_b = _series_split(n.elements, a, b, m)
        return SPDecomposition(
            "series",
            OnePort(n, frozenset(e.id for e in side_a), (a, m)),
            OnePort(n, frozenset(e.id for e in side_b), (m, b)))
    return SPDecomposition("atomic")


def _parallel_groups(elements, a, b) -> List[List[Element]]:
    """Partition elements into port-to-port parallel groups: components of
    the graph with the port vertices removed, plus direct a-b edges."""
    internal_adj: Dict[str, List[Element]] = {}
    for e in elements:
        for v in (e.head, e.tail):
            if v not in (a, b):
                internal_adj.setdefault(v, []).append(e)
    assigned: Dict[str, int] = {}
    groups: List[List[Element]] = []
    for v in internal_adj:
        if v in assigned:
            continue
        gid = len(groups)
        comp_elems: List[Element] = []
        stack = [v]
        assigned[v] = gid
        seen_e = set()
        while stack:
            x = stack.pop()
            for e in internal_adj[x]:
                if e.id in seen_e:
                    continue
                seen_e.add(e.id)
                comp_elems.append(e)
                for y in (e.head, e.tail):
                    if y not in (a, b) and y not in assigned:
                        assigned[y] = gid
                        stack.append(y)
        groups.append(comp_elems)
    for e in elements:
        if {e.head, e.tail} == {a, b}:
            groups.append([e])
    return groups


def _series_cut_vertex(elements, a, b) -> Optional[str]:
    verts = {v for e in elements for v in (e.head, e.tail)}
    edges = [(e.head, e.tail, e.id) for e in elements]
    for m in sorted(verts - {a, b}):
        kept = [ed for ed in edges if m not in (ed[0], ed[1])]
        if not _reachable(kept, a, b):
            return m
    return None


def _reachable(edges, a, b) -> bool:
    adj = _adjacency(edges)
    seen = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        if x == b:
            return True
        for (y, _) in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return b in seen


def _series_split(elements, a, b, m):
    edges = [(e.head, e.tail, e.id) for e in elements if m not in (e.head, e.tail)]
    adj = _adjacency(edges)
    seen = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        for (y, _) in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    side_a = [e for e in elements if e.head in seen or e.tail in seen]
    side_b = [e for e in elements if e not in side_a]
    return side_a, side_b


# ---------------------------------------------------------------------------
# open / short one-ports
# ---------------------------------------------------------------------------

class OpenCircuit:
    """Degenerate outcome: no element path remains between the terminals."""

    def __repr__(self):
        return "OpenCircuit()"

    def __eq__(self, other):
        return isinstance(other, OpenCircuit)

    def __hash__(self):
        return hash("OpenCircuit")


class ShortCircuit:
    """Degenerate outcome: the terminals coincide; impedance identically 0."""

    def __repr__(self):
        return "ShortCircuit()"

    def __eq__(self, other):
        return isinstance(other, ShortCircuit)

    def __hash__(self):
        return hash("ShortCircuit")


ReducedNetwork = Union[Network, OpenCircuit, ShortCircuit]


def _prune_to_source(vertices, elements, port) -> ReducedNetwork:
    """Drop self-loops and anything outside the source edge's biconnected
    component; classify degenerate outcomes."""
    if port[0] == port[1]:
        return ShortCircuit()
    elements = [e for e in elements if e.head != e.tail]
    edges = [(e.head, e.tail, e.id) for e in elements]
    if not _reachable(edges, port[0], port[1]):
        return OpenCircuit()
    edges.append((port[0], port[1], "__source__"))
    vset = {v for e in elements for v in (e.head, e.tail)} | set(port)
    comps = _edge_biconnected_components(vset, edges)
    keep = next(c for c in comps if "__source__" in c)
    kept = [e for e in elements if e.id in keep]
    if not kept:
        return OpenCircuit()
    verts = {v for e in kept for v in (e.head, e.tail)} | set(port)
    return Network(verts, kept, port)


def open_oneport(n: Network, p: OnePort) -> ReducedNetwork:
    """Remove the one-port's elements, then prune to the source component."""
    kept = [e for e in n.elements if e.id not in p.element_ids]
    return _prune_to_source(n.vertices, kept, n.port)


def short_oneport(n: Network, p: OnePort) -> ReducedNetwork:
    """Connect the one-port's two terminals, then prune to the source
    component (which removes the one-port's own elements)."""
    t1, t2 = p.terminals

    def ren(v: str) -> str:
        return t1 if v == t2 else v

    kept = [Element(e.id, e.kind, ren(e.head), ren(e.tail), e.value)
            for e in n.elements if ren(e.head) != ren(e.tail)]
    port = (ren(n.port[0]), ren(n.port[1]))
    verts = {v for e in kept for v in (e.head, e.tail)} | set(port)
    return _prune_to_source(verts, kept, port)


def open_elements(n: Network, ids: Iterable[str]) -> ReducedNetwork:
    kept = [e for e in n.elements if e.id not in set(ids)]
    return _prune_to_source(n.vertices, kept, n.port)


def short_elements(n: Network, ids: Iterable[str]) -> ReducedNetwork:
    """Short each listed element individually (merge its endpoints)."""
    ids = set(ids)
    parent: Dict[str, str] = {v: v for v in n.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in n.elements:
        if e.id in ids:
            ra, rb = find(e.head), find(e.tail)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    kept = [Element(e.id, e.kind, find(e.head), find(e.tail), e.value)
            for e in n.elements
            if e.id not in ids and find(e.head) != find(e.tail)]
    port = (find(n.port[0]), find(n.port[1]))
    verts = {v for e in kept for v in (e.head, e.tail)} | set(port)
    return _prune_to_source(verts, kept, port)


# ---------------------------------------------------------------------------
# driving-point cut-set / path predicates
# ---------------------------------------------------------------------------

def _dp_cutset(n: Network, kind: str) -> bool:
    edges = [(e.head, e.tail, e.id) for e in n.elements if e.kind != kind]
    return not _reachable(edges, n.port[0], n.port[1])


def _dp_path(n: Network, kind: str) -> bool:
    edges = [(e.head, e.tail, e.id) for e in n.elements if e.kind == kind]
    return _reachable(edges, n.port[0], n.port[1])


def has_C_cutset(n: Network) -> bool:
    """Removal of all capacitors disconnects the terminals (pole at s=0)."""
    return _dp_cutset(n, CAPACITOR)


def has_L_cutset(n: Network) -> bool:
    """Removal of all inductors disconnects the terminals (pole at s=inf)."""
    return _dp_cutset(n, INDUCTOR)


def has_C_path(n: Network) -> bool:
    """All-capacitor path between the terminals (zero at s=inf)."""
    return _dp_path(n, CAPACITOR)


def has_L_path(n: Network) -> bool:
    """All-inductor path between the terminals (zero at s=0)."""
    return _dp_path(n, INDUCTOR)


# ---------------------------------------------------------------------------
# element-wise transforms
# ---------------------------------------------------------------------------

def _invert_element(e: Element, w2: Fraction) -> Element:
    if e.kind == RESISTOR:
        return e
    if e.kind == INDUCTOR:
        return Element(e.id, CAPACITOR, e.head, e.tail, 1 / (e.value * w2))
    return Element(e.id, INDUCTOR, e.head, e.tail, 1 / (e.value * w2))


def frequency_invert(n: Network, omega0) -> Network:
    """Network whose impedance is H(omega0^2/s): R fixed, L <-> C swapped
    with values v -> 1/(v*omega0^2); topology unchanged."""
    w0 = _as_q(omega0)
    if w0 <= 0:
        raise NetworkError("omega0 must be positive")
    w2 = w0 * w0
    return Network(n.vertices, [_invert_element(e, w2) for e in n.elements], n.port)


def _dual_element(e: Element) -> Element:
    if e.kind == RESISTOR:
        return Element(e.id, RESISTOR, e.head, e.tail, 1 / e.value)
    if e.kind == INDUCTOR:
        return Element(e.id, CAPACITOR, e.head, e.tail, e.value)
    return Element(e.id, INDUCTOR, e.head, e.tail, e.value)


# -- two-terminal impedance trees (used by dual and the constructors) -------

@dataclass(frozen=True)
class Leaf:
    element: Element


@dataclass(frozen=True)
class Ser:
    parts: Tuple


@dataclass(frozen=True)
class Par:
    parts: Tuple


def ser(*parts):
    flat = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, Ser) else [p])
    return Ser(tuple(flat))


def par(*parts):
    flat = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, Par) else [p])
    return Par(tuple(flat))


def tree_elements(tree) -> List[Element]:
    if isinstance(tree, Leaf):
        return [tree.element]
    return [e for p in tree.parts for e in tree_elements(p)]


def dual_tree(tree):
    if isinstance(tree, Leaf):
        return Leaf(_dual_element(tree.element))
    if isinstance(tree, Ser):
        return Par(tuple(dual_tree(p) for p in tree.parts))
    return Ser(tuple(dual_tree(p) for p in tree.parts))


class _NodeGen:
    def __init__(self, taken: Iterable[str]):
        self.taken = set(taken)
        self.k = 0

    def fresh(self) -> str:
        while True:
            name = f"n{self.k}"
            self.k += 1
            if name not in self.taken:
                self.taken.add(name)
                return name


def _emit_tree(tree, a: str, b: str, gen: _NodeGen, out: List[Element]):
    if isinstance(tree, Leaf):
        e = tree.element
        out.append(Element(e.id, e.kind, a, b, e.value))
        return
    if isinstance(tree, Ser):
        nodes = [a] + [gen.fresh() for _ in tree.parts[:-1]] + [b]
        for part, (u, v) in zip(tree.parts, zip(nodes, nodes[1:])):
            _emit_tree(part, u, v, gen, out)
        return
    for part in tree.parts:
        _emit_tree(part, a, b, gen, out)


def assemble(edge_trees: Sequence[Tuple[str, str, object]],
             port: Tuple[str, str]) -> Network:
    """Build a Network from (node, node, impedance-tree) entries; series
    interiors get fresh node names."""
    skeleton_nodes = {v for (u, v, _) in edge_trees} | {u for (u, v, _) in edge_trees}
    gen = _NodeGen(skeleton_nodes | set(port))
    out: List[Element] = []
    for (u, v, tree) in edge_trees:
        _emit_tree(tree, u, v, gen, out)
    verts = {v for e in out for v in (e.head, e.tail)} | set(port)
    return Network(verts, out, port)


def sp_tree(n: Network):
    """Series-parallel tree of the whole network, or None if not SP."""
    return _sp_tree_rec(list(n.elements), n.port[0], n.port[1])


def _sp_tree_rec(elements, a, b):
    if len(elements) == 1:
        e = elements[0]
        return Leaf(e) if {e.head, e.tail} == {a, b} else None
    groups = _parallel_groups(elements, a, b)
    if len(groups) >= 2:
        parts = []
        for g in groups:
            t = _sp_tree_rec(g, a, b)
            if t is None:
                return None
            parts.append(t)
        return par(*parts)
    m = _series_cut_vertex(elements, a, b)
    if m is None:
        return None
    side_a, side_b = _series_split(elements, a, b, m)
    ta = _sp_tree_rec(side_a, a, m)
    tb = _sp_tree_rec(side_b, m, b)
    if ta is None or tb is None:
        return None
    return ser(ta, tb)


# -- skeleton classification -------------------------------------------------

def skeleton(n: Network):
    """Reduce parallel bundles and internal degree-2 chains to composite
    arms; return (edges, kind) where edges are (u, v, tree) on the reduced
    vertex set and kind classifies the shape:

    "sp"          -- single arm between the port vertices
    "bridge"      -- K4 on {port+, port-, c, d}
    "wheel_rim"   -- 4-wheel, source on the rim
    "wheel_spoke" -- 4-wheel, source on a spoke
    "other"
    """
    a, b = n.port
    edges: List[Tuple[str, str, object]] = [(e.head, e.tail, Leaf(e))
                                            for e in n.elements]
    changed = True
    while changed:
        changed = False
        bundles: Dict[FrozenSet[str], List[int]] = {}
        for i, (u, v, _) in enumerate(edges):
            bundles.setdefault(frozenset((u, v)), []).append(i)
        for pair, idxs in bundles.items():
            if len(idxs) > 1:
                u, v, _ = edges[idxs[0]]
                merged = par(*(edges[i][2] for i in idxs))
                edges = [e for i, e in enumerate(edges) if i not in idxs]
                edges.append((u, v, merged))
                changed = True
                break
        if changed:
            continue
        deg: Dict[str, List[int]] = {}
        for i, (u, v, _) in enumerate(edges):
            deg.setdefault(u, []).append(i)
            deg.setdefault(v, []).append(i)
        for v, idxs in deg.items():
            if v in (a, b) or len(idxs) != 2:
                continue
            i1, i2 = idxs
            (u1, v1, t1), (u2, v2, t2) = edges[i1], edges[i2]
            x = v1 if u1 == v else u1
            y = v2 if u2 == v else u2
            if x == y:
                # would create a self-loop; leave for "other"
                continue
            edges = [e for i, e in enumerate(edges) if i not in (i1, i2)]
            edges.append((x, y, ser(t1, t2)))
            changed = True
            break
    verts = {u for (u, v, _) in edges} | {v for (u, v, _) in edges}
    kind = "other"
    if len(edges) == 1 and {edges[0][0], edges[0][1]} == {a, b}:
        kind = "sp"
    elif len(verts) == 4 and len(edges) == 5:
        degc = {v: 0 for v in verts}
        for (u, v, _) in edges:
            degc[u] += 1
            degc[v] += 1
        degc[a] += 1
        degc[b] += 1
        pairs = {frozenset((u, v)) for (u, v, _) in edges} | {frozenset((a, b))}
        if all(d == 3 for d in degc.values()) and len(pairs) == 6:
            kind = "bridge"
    elif len(verts) == 5 and len(edges) == 7:
        degc = {v: 0 for v in verts}
        for (u, v, _) in edges:
            degc[u] += 1
            degc[v] += 1
        degc[a] += 1
        degc[b] += 1
        pairs = {frozenset((u, v)) for (u, v, _) in edges} | {frozenset((a, b))}
        hubs = [v for v, d in degc.items() if d == 4]
        if (len(pairs) == 8 and len(hubs) == 1
                and all(d in (3, 4) for d in degc.values())):
            hub = hubs[0]
            rim = [v for v in verts if v != hub]
            rim_pairs = [p for p in pairs if hub not in p]
            if len(rim_pairs) == 4 and all(frozenset((hub, v)) in pairs for v in rim):
                if hub in (a, b):
                    kind = "wheel_spoke"
                else:
                    kind = "wheel_rim"
    return edges, kind


def _bridge_positions(n: Network, edges):
    """Map skeleton edges of a bridge to positions N1..N5.

    Layout: port a-b; internal c,d; N4: a-c, N1: a-d, N3: c-d, N2: c-b,
    N5: d-b.  The labelling of (c, d) is the lexicographically first valid
    choice; callers needing the symmetric variants permute themselves."""
    a, b = n.port
    verts = {u for (u, v, _) in edges} | {v for (u, v, _) in edges}
    c, d = sorted(verts - {a, b})
    lookup = {frozenset((u, v)): t for (u, v, t) in edges}
    return {
        "N1": lookup[frozenset((a, d))],
        "N2": lookup[frozenset((c, b))],
        "N3": lookup[frozenset((c, d))],
        "N4": lookup[frozenset((a, c))],
        "N5": lookup[frozenset((d, b))],
    }, (a, b, c, d)


def dual(n: Network) -> Network:
    """Dual network with impedance 1/H(s).

    Supported: series-parallel networks; the Wheatstone-bridge skeleton
    (complete graph on four vertices, arms series-parallel); and the
    4-wheel skeletons used by the seven-element realizations.  Other
    topologies raise NotPlanarDualizable."""
    tree = sp_tree(n)
    if tree is not None:
        return assemble([(n.port[0], n.port[1], dual_tree(tree))], n.port)
    edges, kind = skeleton(n)
    if kind == "bridge":
        arms, (a, b, c, d) = _bridge_positions(n, edges)
        out = [
            (a, c, dual_tree(arms["N4"])),
            (a, d, dual_tree(arms["N2"])),   # N1 and N2 swap positions
            (c, d, dual_tree(arms["N3"])),
            (c, b, dual_tree(arms["N1"])),
            (d, b, dual_tree(arms["N5"])),
        ]
        return assemble(out, n.port)
    if kind in ("wheel_rim", "wheel_spoke"):
        return _dual_wheel(n, edges, kind)
    raise NotPlanarDualizable(
        "dual is implemented for series-parallel, bridge, and wheel shapes")


def _wheel_structure(n: Network, edges, kind):
    a, b = n.port
    verts = {u for (u, v, _) in edges} | {v for (u, v, _) in edges}
    degc = {v: 0 for v in verts}
    for (u, v, _) in edges:
        degc[u] += 1
        degc[v] += 1
    degc[a] += 1
    degc[b] += 1
    hub = next(v for v, d in degc.items() if d == 4)
    lookup = {frozenset((u, v)): t for (u, v, t) in edges}
    return hub, lookup


def _dual_wheel(n: Network, edges, kind) -> Network:
    a, b = n.port
    hub, look = _wheel_structure(n, edges, kind)
    if kind == "wheel_rim":
        # rim cycle a - b - q - p - a (source on rim a-b); spokes to hub x
        x = hub
        rim = [v for v in (set(u for (u, v, _) in edges)
                           | set(v for (u, v, _) in edges)) if v != x]
        q = next(v for v in rim if v not in (a, b)
                 and frozenset((b, v)) in look)
        p = next(v for v in rim if v not in (a, b, q)
                 and frozenset((a, v)) in look)
        if frozenset((q, p)) not in look:
            raise NotPlanarDualizable("unrecognised wheel embedding")
        # dual: hub O = a', rim (T_ab=b', T_bq, T_qp, T_pa); source on spoke
        out = [
            ("da", "r1", dual_tree(look[frozenset((b, q))])),
            ("da", "r2", dual_tree(look[frozenset((q, p))])),
            ("da", "r3", dual_tree(look[frozenset((p, a))])),
            ("db", "r1", dual_tree(look[frozenset((x, b))])),
            ("db", "r3", dual_tree(look[frozenset((x, a))])),
            ("r1", "r2", dual_tree(look[frozenset((x, q))])),
            ("r2", "r3", dual_tree(look[frozenset((x, p))])),
        ]
        return assemble(out, ("da", "db"))
    # wheel_spoke: hub is a port vertex; other port vertex t0 on the rim
    h0 = hub
    t0 = b if hub == a else a
    rim = [v for v in (set(u for (u, v, _) in edges)
                       | set(v for (u, v, _) in edges)) if v != h0]
    t1cands = [v for v in rim if v != t0 and frozenset((t0, v)) in look]
    t1 = t1cands[0]
    t3 = next(v for v in rim if v not in (t0, t1) and frozenset((t0, v)) in look)
    t2 = next(v for v in rim if v not in (t0, t1, t3))
    if (frozenset((t1, t2)) not in look or frozenset((t2, t3)) not in look):
        raise NotPlanarDualizable("unrecognised wheel embedding")
    out = [
        ("dx", "da", dual_tree(look[frozenset((t3, t0))])),
        ("dx", "db", dual_tree(look[frozenset((t0, t1))])),
        ("dx", "dq", dual_tree(look[frozenset((t1, t2))])),
        ("dx", "dp", dual_tree(look[frozenset((t2, t3))])),
        ("db", "dq", dual_tree(look[frozenset((h0, t1))])),
        ("dq", "dp", dual_tree(look[frozenset((h0, t2))])),
        ("dp", "da", dual_tree(look[frozenset((h0, t3))])),
    ]
    return assemble(out, ("da", "db"))


# ---------------------------------------------------------------------------
# mechanical analogy (force-current)
# ---------------------------------------------------------------------------

_TO_MECH = {RESISTOR: DAMPER, INDUCTOR: SPRING, CAPACITOR: INERTER}
_FROM_MECH = {DAMPER: RESISTOR, SPRING: INDUCTOR, INERTER: CAPACITOR}


def to_mechanical(n: Network) -> MechanicalNetwork:
    """R -> damper c=1/R, L -> spring k=1/L, C -> inerter b=C; topology kept."""
    elems = []
    for e in n.elements:
        value = e.value if e.kind == CAPACITOR else 1 / e.value
        elems.append(MechElement(e.id, _TO_MECH[e.kind], e.head, e.tail, value))
    return MechanicalNetwork(n.vertices, elems, n.port)


def from_mechanical(m: MechanicalNetwork) -> Network:
    elems = []
    for e in m.elements:
        value = e.value if e.kind == INERTER else 1 / e.value
        elems.append(Element(e.id, _FROM_MECH[e.kind], e.head, e.tail, value))
    return Network(m.vertices, elems, m.port)


def report_grounded_capacitors(n: Network) -> Dict[str, bool]:
    """Which capacitors touch the ground terminal (port minus); these are
    the inerters replaceable by masses under the analogy."""
    ground = n.port[1]
    return {e.id: ground in (e.head, e.tail)
            for e in n.elements if e.kind == CAPACITOR}
