"""Constructive certificates: induced cycles, faces, cycle pairs, border classes.

A *face* here is a chordless cycle whose deletion leaves only components that
contain a monitor.  A *cycle-pair certificate* for an interior link vw is a
face and a second cycle meeting only in vw (plus at most one extra node),
together with two disjoint monitor paths; :func:`verify_certificate` checks
the seven defining properties independently of how a certificate was found.
Searches are exhaustive in canonical order with configurable step ceilings;
they are meant for desk-scale graphs, not large topologies.
"""

from dataclasses import dataclass, fields

from .connectivity import condition_report
from .errors import (
    MalformedCertificate,
    NotFound,
    PreconditionFailed,
    SearchExhausted,
    SearchSpaceTooLarge,
)
from .graph import Link, Network, SimplePath, delete_nodes, link

DEFAULT_CEILING = 200_000

NON_BORDER = "NON_BORDER"
BORDER_CLASS_1 = "BORDER_CLASS_1"
BORDER_CLASS_2 = "BORDER_CLASS_2"


class _Budget:
    """Counts search steps and aborts once the configured ceiling is crossed."""

    def __init__(self, ceiling: int | None):
        self.ceiling = DEFAULT_CEILING if ceiling is None else ceiling
        self.used = 0

    def spend(self, amount: int = 1):
        self.used += amount
        if self.used > self.ceiling:
            raise SearchSpaceTooLarge(
                f"search exceeded the ceiling of {self.ceiling} steps")


def canonical_cycle(nodes) -> tuple[str, ...]:
    """Rotation/reflection-invariant representative of a node cycle."""
    seq = tuple(nodes)
    k = len(seq)
    i = seq.index(min(seq))
    forward = tuple(seq[(i + j) % k] for j in range(k))
    backward = tuple(seq[(i - j) % k] for j in range(k))
    return min(forward, backward)


def cycle_links(nodes) -> frozenset[Link]:
    seq = tuple(nodes)
    return frozenset(link(seq[j], seq[(j + 1) % len(seq)]) for j in range(len(seq)))


def is_cycle(net: Network, nodes) -> bool:
    seq = tuple(nodes)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    return all(net.has_link(seq[j], seq[(j + 1) % len(seq)]) for j in range(len(seq)))


def is_chordless(net: Network, cycle) -> bool:
    """No network link joins non-consecutive nodes of the cycle."""
    seq = tuple(cycle)
    k = len(seq)
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = (b - a == 1) or (a == 0 and b == k - 1)
            if not consecutive and net.has_link(seq[a], seq[b]):
                return False
    return True


def is_face(net: Network, cycle) -> bool:
    """Chordless cycle whose removal strands no monitor-free component."""
    if not is_cycle(net, cycle):
        raise ValueError(f"not a cycle in the network: {tuple(cycle)!r}")
    if not is_chordless(net, cycle):
        return False
    monitors = set(net.monitors)
    return all(monitors & set(comp) for comp in delete_nodes(net, set(cycle)))


@dataclass(frozen=True)
class Face:
    """A face, stored as its canonical node cycle."""

    cycle: tuple[str, ...]

    @property
    def links(self) -> frozenset[Link]:
        return cycle_links(self.cycle)

    @property
    def nodes(self) -> frozenset[str]:
        return frozenset(self.cycle)


@dataclass(frozen=True)
class CyclePairCertificate:
    """Witness for an interior link: a face, a second cycle, two monitor paths.

    ``monitor_assignment`` records which monitor the first path starts from;
    zero-length paths are allowed when the monitor already sits on the
    respective cycle.
    """

    v: str
    w: str
    c1: Face
    c2: tuple[str, ...]
    p1: SimplePath
    p2: SimplePath
    monitor_assignment: tuple[str, str]


@dataclass(frozen=True)
class CertificateVerdicts:
    """Independent verdicts for the seven certificate properties, in order."""

    c1_is_face: bool
    single_shared_link: bool
    at_most_one_extra_shared_node: bool
    path_endpoints_on_cycles: bool
    paths_disjoint: bool
    paths_avoid_cycle_links: bool
    paths_avoid_target_endpoints: bool

    def items(self) -> tuple[tuple[str, bool], ...]:
        return tuple((f.name, getattr(self, f.name)) for f in fields(self))

    @property
    def all_ok(self) -> bool:
        return all(ok for _, ok in self.items())


@dataclass(frozen=True)
class BorderClassification:
    """Outcome of the border-link decision for one interior link.

    NON_BORDER carries the strengthened witness certificate.  The border
    classes carry an example certificate illustrating the obstruction:
    class 1 when certificates exist whose cycles share only the link's
    endpoints but every first path touches the second cycle, class 2 when
    every certificate's cycles share an unavoidable extra node.
    """

    verdict: str
    witness: CyclePairCertificate | None
    shared_node: str | None
    note: str


def _require_conditions(net: Network):
    report = condition_report(net)
    if not report.satisfied:
        parts = []
        if not report.condition_one.passed:
            parts.append(f"condition one fails on {list(report.condition_one.failing_links)}")
        if not report.condition_two.passed:
            parts.append(f"condition two fails at {report.condition_two.witness}")
        raise PreconditionFailed("; ".join(parts))


def _require_interior_link(net: Network, target) -> Link:
    lk = link(*target)
    if lk not in net.link_set:
        raise PreconditionFailed(f"{lk[0]}-{lk[1]} is not a link of the network")
    if not net.is_interior_link(lk):
        raise PreconditionFailed(f"{lk[0]}-{lk[1]} is not an interior link")
    return lk


def _cycles_through(net: Network, v: str, w: str, budget: _Budget) -> list[tuple[str, ...]]:
    """All cycles containing link vw, oriented from v to w (closing link vw).

    Each cycle corresponds to exactly one simple v-to-w path that avoids the
    direct link, so the enumeration is duplicate-free.  Sorted by length then
    canonical form.
    """
    out = []
    path = [v]
    on_path = {v}

    def extend():
        node = path[-1]
        for nb in net.neighbors(node):
            budget.spend()
            if nb == w:
                if node != v:
                    out.append((*path, w))
                continue
            if nb in on_path:
                continue
            path.append(nb)
            on_path.add(nb)
            extend()
            path.pop()
            on_path.remove(nb)

    extend()
    out.sort(key=lambda c: (len(c), canonical_cycle(c)))
    return out


def _all_cycles(net: Network, budget: _Budget) -> list[tuple[str, ...]]:
    """Every simple cycle, each reported once in canonical form."""
    cycles = []
    for root in net.nodes:
        path = [root]
        on_path = {root}

        def extend():
            node = path[-1]
            for nb in net.neighbors(node):
                budget.spend()
                if nb == root:
                    if len(path) >= 3 and path[1] < path[-1]:
                        cycles.append(tuple(path))
                    continue
                if nb <= root or nb in on_path:
                    continue
                path.append(nb)
                on_path.add(nb)
                extend()
                path.pop()
                on_path.remove(nb)

        extend()
    cycles.sort(key=lambda c: (len(c), c))
    return cycles


def enumerate_faces(net: Network, ceiling: int | None = None) -> tuple[Face, ...]:
    """All faces of the network in canonical order."""
    budget = _Budget(ceiling)
    faces = [
        Face(canonical_cycle(cyc))
        for cyc in _all_cycles(net, budget)
        if is_face(net, cyc)
    ]
    faces.sort(key=lambda f: (len(f.cycle), f.cycle))
    return tuple(faces)


def _orient(cycle, v: str, w: str) -> tuple[str, ...]:
    """Rewrite a cycle so it runs v ... w with the closing link being vw."""
    seq = tuple(cycle)
    k = len(seq)
    i = seq.index(v)
    if seq[(i + 1) % k] == w:
        return tuple(seq[(i - j) % k] for j in range(k))
    if seq[(i - 1) % k] == w:
        return tuple(seq[(i + j) % k] for j in range(k))
    raise ValueError(f"link {v}-{w} is not on the cycle {seq!r}")


def _eliminate_chords(net: Network, oriented) -> tuple[str, ...]:
    """Shrink an oriented cycle across chords until it is induced.

    The arc between the chord's endpoints that does not carry the closing
    link is replaced by the chord, so the target link always survives.
    """
    cyc = list(oriented)
    while True:
        pos = {n: i for i, n in enumerate(cyc)}
        k = len(cyc)
        chord = None
        for x, y in net.links:
            if x in pos and y in pos:
                i, j = sorted((pos[x], pos[y]))
                if j - i != 1 and not (i == 0 and j == k - 1):
                    chord = (i, j)
                    break
        if chord is None:
            return tuple(cyc)
        i, j = chord
        cyc = cyc[: i + 1] + cyc[j:]


def _seed_cycle(net: Network, v: str, w: str) -> tuple[str, ...]:
    """Shortest deterministic cycle through vw: BFS path v->w avoiding the link."""
    parent: dict[str, str | None] = {v: None}
    frontier = [v]
    while frontier and w not in parent:
        nxt = []
        for node in frontier:
            for nb in net.neighbors(node):
                if node == v and nb == w:
                    continue
                if nb not in parent:
                    parent[nb] = node
                    nxt.append(nb)
        frontier = sorted(nxt)
    if w not in parent:
        raise PreconditionFailed(f"no cycle through {v}-{w}")
    rev = [w]
    while rev[-1] != v:
        rev.append(parent[rev[-1]])
    return tuple(reversed(rev))


def grow_induced_cycle(net: Network, target, ceiling: int | None = None) -> tuple[str, ...]:
    """A chordless cycle through the interior link, grown from a seed cycle.

    Seeds with the shortest cycle through the link and repeatedly replaces
    the chord-subtended arc that does not carry the link by the chord.
    """
    lk = _require_interior_link(net, target)
    _require_conditions(net)
    v, w = lk
    oriented = _seed_cycle(net, v, w)
    oriented = _eliminate_chords(net, oriented)
    return canonical_cycle(oriented)


def _monitor_free_components(net: Network, cycle_nodes) -> list[tuple[str, ...]]:
    monitors = set(net.monitors)
    return [comp for comp in delete_nodes(net, set(cycle_nodes))
            if not (monitors & set(comp))]


def _inner_path(net: Network, x1: str, comp: set[str], on_cycle: set[str]):
    """Shortest deterministic path x1 -> (through comp) -> another cycle node."""
    parent = {x1: None}
    frontier = sorted(nb for nb in net.neighbors(x1) if nb in comp)
    for nb in frontier:
        parent[nb] = x1
    while frontier:
        exits = sorted(
            (node, nb)
            for node in frontier
            for nb in net.neighbors(node)
            if nb in on_cycle and nb != x1
        )
        if exits:
            node, x2 = exits[0]
            rev = [x2, node]
            while rev[-1] != x1:
                rev.append(parent[rev[-1]])
            return tuple(reversed(rev))
        nxt = []
        for node in frontier:
            for nb in net.neighbors(node):
                if nb in comp and nb not in parent:
                    parent[nb] = node
                    nxt.append(nb)
        frontier = sorted(nxt)
    return None


def _reroute(net: Network, oriented, comp) -> tuple[str, ...]:
    """Swap the arc between two attachment nodes for a path through comp."""
    comp_set = set(comp)
    on_cycle = set(oriented)
    attachments = sorted(
        n for n in oriented if any(nb in comp_set for nb in net.neighbors(n)))
    for x1 in attachments:
        inner = _inner_path(net, x1, comp_set, on_cycle)
        if inner is None:
            continue
        x2 = inner[-1]
        i, j = oriented.index(x1), oriented.index(x2)
        middle = list(inner[1:-1])
        if i < j:
            return tuple(list(oriented[: i + 1]) + middle + list(oriented[j:]))
        return tuple(list(oriented[: j + 1]) + middle[::-1] + list(oriented[i:]))
    raise AssertionError("monitor-free component with no inner path")


def refine_to_face(net: Network, cycle, target, ceiling: int | None = None) -> Face:
    """Reroute a chordless cycle through stranded components until it is a face.

    Each iteration picks the first monitor-free component left by deleting
    the cycle, reroutes the cycle through it, restores chordlessness, and
    checks that the total size of monitor-free components strictly shrinks
    (the termination metric).
    """
    lk = link(*target)
    _require_conditions(net)
    seq = tuple(cycle)
    if not is_cycle(net, seq):
        raise PreconditionFailed(f"not a cycle in the network: {seq!r}")
    if lk not in cycle_links(seq):
        raise PreconditionFailed(f"target link {lk} is not on the cycle")
    v, w = lk
    oriented = _eliminate_chords(net, _orient(seq, v, w))
    while True:
        stranded = _monitor_free_components(net, oriented)
        if not stranded:
            break
        before = sum(len(c) for c in stranded)
        oriented = _reroute(net, oriented, stranded[0])
        oriented = _eliminate_chords(net, oriented)
        after = sum(len(c) for c in _monitor_free_components(net, oriented))
        assert after < before, "reroute must shrink monitor-free territory"
    return Face(canonical_cycle(oriented))


def _links_of(path_nodes) -> tuple[Link, ...]:
    return tuple(link(a, b) for a, b in zip(path_nodes, path_nodes[1:]))


def _cycle_minus_links(cycle, v: str, w: str) -> frozenset[Link]:
    """Links of the cycle with neither endpoint in {v, w}."""
    return frozenset(lk for lk in cycle_links(cycle)
                     if v not in lk and w not in lk)


def _paths_from(net: Network, start: str, targets: set[str], forbidden: set[str],
                budget: _Budget) -> list[tuple[str, ...]]:
    """Simple paths from start ending on a target node, avoiding forbidden nodes.

    Paths may pass through target nodes; every prefix ending on a target is
    reported.  Sorted by length then node sequence, so a zero-length path
    (start already a target) comes first.
    """
    if start in forbidden:
        return []
    found = []
    path = [start]
    on_path = {start}

    def extend():
        node = path[-1]
        if node in targets:
            found.append(tuple(path))
        for nb in net.neighbors(node):
            budget.spend()
            if nb in forbidden or nb in on_path:
                continue
            path.append(nb)
            on_path.add(nb)
            extend()
            path.pop()
            on_path.remove(nb)

    extend()
    found.sort(key=lambda p: (len(p), p))
    return found


class _PairSearch:
    """Shared candidate enumeration for certificate searches on one link."""

    def __init__(self, net: Network, v: str, w: str, budget: _Budget,
                 reverse: bool = False):
        self.net = net
        self.v = v
        self.w = w
        self.budget = budget
        cycles = _cycles_through(net, v, w, budget)
        faces = [c for c in cycles if is_face(net, c)]
        if reverse:
            cycles = cycles[::-1]
            faces = faces[::-1]
        self.cycle_entries = [(c, cycle_links(c), set(c)) for c in cycles]
        self.face_entries = [(c, cycle_links(c), set(c)) for c in faces]
        m1, m2 = net.monitors
        self.assignments = ((m1, m2), (m2, m1))
        self._path_cache: dict = {}

    def paths(self, cycle, monitor: str, other_monitor: str) -> list[tuple[str, ...]]:
        """Valid candidate paths from a monitor to the cycle minus v, w."""
        key = (cycle, monitor)
        if key not in self._path_cache:
            targets = set(cycle) - {self.v, self.w}
            # the other monitor can never appear in a disjoint pair
            forbidden = {self.v, self.w, other_monitor}
            avoid = _cycle_minus_links(cycle, self.v, self.w)
            raw = _paths_from(self.net, monitor, targets, forbidden, self.budget)
            self._path_cache[key] = [
                p for p in raw if not (set(_links_of(p)) & avoid)]
        return self._path_cache[key]

    def certificate(self, c1, c2, p1, p2, assignment) -> CyclePairCertificate:
        return CyclePairCertificate(
            v=self.v, w=self.w,
            c1=Face(canonical_cycle(c1)), c2=canonical_cycle(c2),
            p1=SimplePath(p1), p2=SimplePath(p2),
            monitor_assignment=assignment)


def _first_disjoint(p1s, p2s):
    for p1 in p1s:
        s1 = set(p1)
        for p2 in p2s:
            if not (s1 & set(p2)):
                return p1, p2
    return None


def find_cycle_pair(net: Network, target, ceiling: int | None = None) -> CyclePairCertificate:
    """First certificate, in canonical order, for an interior link.

    Exhausts faces through the link, second cycles, monitor assignments and
    path pairs; raises SearchExhausted only if no certificate exists, which
    signals a counterexample rather than a user error.
    """
    lk = _require_interior_link(net, target)
    _require_conditions(net)
    v, w = lk
    search = _PairSearch(net, v, w, _Budget(ceiling))
    for c1, c1_links, c1_nodes in search.face_entries:
        for c2, c2_links, c2_nodes in search.cycle_entries:
            if (c1_links & c2_links) != {lk}:
                continue
            if len((c1_nodes & c2_nodes) - {v, w}) > 1:
                continue
            for ms1, ms2 in search.assignments:
                pair = _first_disjoint(
                    search.paths(c1, ms1, ms2), search.paths(c2, ms2, ms1))
                if pair:
                    return search.certificate(c1, c2, pair[0], pair[1], (ms1, ms2))
    raise SearchExhausted(f"no cycle-pair certificate for {v}-{w}")


def _check_well_formed(net: Network, cert: CyclePairCertificate):
    if cert.v not in net.nodes or cert.w not in net.nodes or cert.v == cert.w:
        raise MalformedCertificate("target endpoints must be two distinct nodes")
    if link(cert.v, cert.w) not in net.link_set:
        raise MalformedCertificate(f"{cert.v}-{cert.w} is not a link of the network")
    if not is_cycle(net, cert.c1.cycle):
        raise MalformedCertificate("c1 is not a cycle in the network")
    if not is_cycle(net, cert.c2):
        raise MalformedCertificate("c2 is not a cycle in the network")
    for label, p in (("p1", cert.p1), ("p2", cert.p2)):
        for a, b in zip(p.nodes, p.nodes[1:]):
            if not net.has_link(a, b):
                raise MalformedCertificate(f"{label} uses a missing link {a}-{b}")
        if any(n not in net.adjacency for n in p.nodes):
            raise MalformedCertificate(f"{label} visits an unknown node")
    if sorted(cert.monitor_assignment) != sorted(net.monitors):
        raise MalformedCertificate("monitor assignment must pair up both monitors")


def verify_certificate(net: Network, cert: CyclePairCertificate) -> CertificateVerdicts:
    """Re-check the seven certificate properties from their definitions."""
    _check_well_formed(net, cert)
    v, w = cert.v, cert.w
    lk = link(v, w)
    c1, c2 = cert.c1.cycle, cert.c2
    ms1, ms2 = cert.monitor_assignment
    p1_nodes, p2_nodes = set(cert.p1.nodes), set(cert.p2.nodes)
    return CertificateVerdicts(
        c1_is_face=is_face(net, c1),
        single_shared_link=(cycle_links(c1) & cycle_links(c2)) == {lk},
        at_most_one_extra_shared_node=len((set(c1) & set(c2)) - {v, w}) <= 1,
        path_endpoints_on_cycles=(
            cert.p1.nodes[0] == ms1 and cert.p1.nodes[-1] in set(c1) - {v, w}
            and cert.p2.nodes[0] == ms2 and cert.p2.nodes[-1] in set(c2) - {v, w}),
        paths_disjoint=not (p1_nodes & p2_nodes),
        paths_avoid_cycle_links=(
            not (set(cert.p1.links) & _cycle_minus_links(c1, v, w))
            and not (set(cert.p2.links) & _cycle_minus_links(c2, v, w))),
        paths_avoid_target_endpoints=not ({v, w} & (p1_nodes | p2_nodes)),
    )


def classify_link(net: Network, target, ceiling: int | None = None,
                  search_order: str = "canonical") -> BorderClassification:
    """Decide whether an interior link is a border-link, by exhaustive search.

    NON_BORDER requires a certificate whose cycles share no node beyond the
    link endpoints and whose first path avoids the second cycle entirely.
    Otherwise the link is class 1 when endpoint-only certificates exist, and
    class 2 when every certificate's cycles share an extra node.  The verdict
    does not depend on the search order; the witness may.
    """
    lk = _require_interior_link(net, target)
    _require_conditions(net)
    if search_order not in ("canonical", "reversed"):
        raise ValueError(f"unknown search order {search_order!r}")
    v, w = lk
    search = _PairSearch(net, v, w, _Budget(ceiling),
                         reverse=search_order == "reversed")
    endpoint_only_example = None
    extra_node_example = None
    for c1, c1_links, c1_nodes in search.face_entries:
        for c2, c2_links, c2_nodes in search.cycle_entries:
            if (c1_links & c2_links) != {lk}:
                continue
            extra = (c1_nodes & c2_nodes) - {v, w}
            if len(extra) > 1:
                continue
            for ms1, ms2 in search.assignments:
                p1s = search.paths(c1, ms1, ms2)
                p2s = search.paths(c2, ms2, ms1)
                if not p1s or not p2s:
                    continue
                if not extra:
                    off_cycle = [p for p in p1s
                                 if not (set(p) & (c2_nodes - {v, w}))]
                    pair = _first_disjoint(off_cycle, p2s)
                    if pair:
                        cert = search.certificate(c1, c2, pair[0], pair[1], (ms1, ms2))
                        return BorderClassification(
                            NON_BORDER, cert, None,
                            "strengthened certificate found")
                need = (endpoint_only_example is None if not extra
                        else extra_node_example is None)
                if need:
                    pair = _first_disjoint(p1s, p2s)
                    if pair:
                        cert = search.certificate(c1, c2, pair[0], pair[1], (ms1, ms2))
                        if not extra:
                            endpoint_only_example = cert
                        else:
                            extra_node_example = (cert, min(extra))
    if endpoint_only_example is not None:
        return BorderClassification(
            BORDER_CLASS_1, endpoint_only_example, None,
            "cycles can share only the link endpoints, but every first path "
            "meets the second cycle")
    if extra_node_example is not None:
        cert, shared = extra_node_example
        return BorderClassification(
            BORDER_CLASS_2, cert, shared,
            "every certificate's cycles share an unavoidable extra node")
    raise SearchExhausted(f"no cycle-pair certificate for {v}-{w}")


def border_links_per_face(net: Network,
                          ceiling: int | None = None) -> tuple[tuple[Face, int], ...]:
    """For each face: how many of its interior links classify as border-links."""
    _require_conditions(net)
    faces = enumerate_faces(net, ceiling)
    verdicts: dict[Link, str] = {}
    counts = []
    for face in faces:
        count = 0
        for lk in sorted(face.links):
            if not net.is_interior_link(lk):
                continue
            if lk not in verdicts:
                verdicts[lk] = classify_link(net, lk, ceiling).verdict
            if verdicts[lk] != NON_BORDER:
                count += 1
        counts.append((face, count))
    return tuple(counts)


def find_monitor_free_face(net: Network, target, ceiling: int | None = None) -> Face:
    """A face through a border-link that avoids both monitors."""
    lk = _require_interior_link(net, target)
    classification = classify_link(net, lk, ceiling)
    if classification.verdict == NON_BORDER:
        raise PreconditionFailed(f"{lk[0]}-{lk[1]} is not a border-link")
    monitors = set(net.monitors)
    for face in enumerate_faces(net, ceiling):
        if lk in face.links and not (monitors & face.nodes):
            return face
    raise NotFound(f"no monitor-free face through {lk[0]}-{lk[1]}")


def _paths_avoiding_face(net: Network, start: str, goal: str, face_nodes: set[str],
                         budget: _Budget) -> list[tuple[str, ...]]:
    """Simple paths start -> goal whose intermediate nodes avoid the face."""
    found = []
    path = [start]
    on_path = {start}

    def extend():
        node = path[-1]
        for nb in net.neighbors(node):
            budget.spend()
            if nb in on_path:
                continue
            if nb == goal:
                found.append((*path, goal))
                continue
            if nb in face_nodes:
                continue
            path.append(nb)
            on_path.add(nb)
            extend()
            path.pop()
            on_path.remove(nb)

    extend()
    found.sort(key=lambda p: (len(p), p))
    return found


def find_disjoint_monitor_paths(net: Network, face: Face, v: str, w: str,
                                ceiling: int | None = None) -> tuple[SimplePath, SimplePath]:
    """Disjoint paths first monitor -> v and second monitor -> w, off the face.

    Each path touches the face only in its final node.  Requires the target
    link to lie on the face and the face to be entirely interior.
    """
    lk = link(v, w)
    if lk not in face.links:
        raise PreconditionFailed(f"{v}-{w} is not on the face")
    if any(not net.is_interior_link(fl) for fl in sorted(face.links)):
        raise PreconditionFailed("face must consist of interior links only")
    budget = _Budget(ceiling)
    m1, m2 = net.monitors
    face_nodes = set(face.cycle)
    p1s = _paths_avoiding_face(net, m1, v, face_nodes, budget)
    p2s = _paths_avoiding_face(net, m2, w, face_nodes, budget)
    for p1 in p1s:
        s1 = set(p1)
        for p2 in p2s:
            if not (s1 & set(p2)):
                return SimplePath(p1), SimplePath(p2)
    raise NotFound(f"no disjoint monitor paths to {v} and {w} off the face")


def certificate_to_dot(net: Network, cert: CyclePairCertificate) -> str:
    """DOT rendering of the network with certificate annotations."""
    lk = link(cert.v, cert.w)
    c1_links = cycle_links(cert.c1.cycle)
    c2_links = cycle_links(cert.c2)
    p1_links = set(cert.p1.links)
    p2_links = set(cert.p2.links)
    monitors = set(net.monitors)
    lines = ["graph certificate {"]
    for n in net.nodes:
        shape = "doublecircle" if n in monitors else "circle"
        lines.append(f'  "{n}" [shape={shape}];')
    for edge in net.links:
        attrs = []
        if edge == lk:
            attrs.append('color="black" penwidth=3 label="target"')
        elif edge in c1_links and edge in c2_links:
            attrs.append('color="purple" penwidth=2')
        elif edge in c1_links:
            attrs.append('color="blue" penwidth=2 label="c1"')
        elif edge in c2_links:
            attrs.append('color="red" penwidth=2 label="c2"')
        elif edge in p1_links:
            attrs.append('color="darkgreen" style=dashed label="p1"')
        elif edge in p2_links:
            attrs.append('color="orange" style=dashed label="p2"')
        else:
            attrs.append('color="gray"')
        lines.append(f'  "{edge[0]}" -- "{edge[1]}" [{attrs[0]}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
