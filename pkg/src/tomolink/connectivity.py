"""Bridges, cutvertices, and the two connectivity conditions for identifiability.

Condition one: deleting any single interior link leaves a 2-edge-connected
graph.  Condition two: for every pair of deleted nodes the remainder is
connected, or every remaining component keeps a surviving monitor; this is
equivalent to 3-vertex-connectivity of the graph augmented with a direct
monitor link, which the brute-force oracle checks by exhaustive deletion.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .errors import TooSmall
from .graph import Link, Network, connected_components, delete_nodes, link

CHARACTERIZATION = "CHARACTERIZATION"
BRUTE_FORCE = "BRUTE_FORCE"


def _adjacency_from_links(nodes: Iterable[str], links: Iterable[Link]) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {n: set() for n in nodes}
    for u, v in links:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _bridge_links(nodes: Iterable[str], adjacency: Mapping[str, Iterable[str]]) -> list[Link]:
    """Links whose removal disconnects the graph (iterative lowlink DFS)."""
    allowed = set(nodes)
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    out: list[Link] = []
    counter = 0
    for root in sorted(allowed):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(None, root, iter(sorted(adjacency.get(root, ()))))]
        while stack:
            parent, node, neighbors = stack[-1]
            moved = False
            for nb in neighbors:
                if nb not in allowed or nb == parent:
                    continue
                if nb in disc:
                    if disc[nb] < low[node]:
                        low[node] = disc[nb]
                else:
                    disc[nb] = low[nb] = counter
                    counter += 1
                    stack.append((node, nb, iter(sorted(adjacency.get(nb, ())))))
                    moved = True
                    break
            if not moved:
                stack.pop()
                if parent is not None:
                    if low[node] < low[parent]:
                        low[parent] = low[node]
                    if low[node] > disc[parent]:
                        out.append(link(parent, node))
    return sorted(out)


def _articulation_nodes(nodes: Iterable[str], adjacency: Mapping[str, Iterable[str]]) -> list[str]:
    """Nodes whose removal disconnects the graph (iterative lowlink DFS)."""
    allowed = set(nodes)
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    found: set[str] = set()
    counter = 0
    for root in sorted(allowed):
        if root in disc:
            continue
        root_children = 0
        disc[root] = low[root] = counter
        counter += 1
        stack = [(None, root, iter(sorted(adjacency.get(root, ()))))]
        while stack:
            parent, node, neighbors = stack[-1]
            moved = False
            for nb in neighbors:
                if nb not in allowed or nb == parent:
                    continue
                if nb in disc:
                    if disc[nb] < low[node]:
                        low[node] = disc[nb]
                else:
                    disc[nb] = low[nb] = counter
                    counter += 1
                    stack.append((node, nb, iter(sorted(adjacency.get(nb, ())))))
                    if node == root:
                        root_children += 1
                    moved = True
                    break
            if not moved:
                stack.pop()
                if parent is not None:
                    if low[node] < low[parent]:
                        low[parent] = low[node]
                    if parent != root and low[node] >= disc[parent]:
                        found.add(parent)
        if root_children >= 2:
            found.add(root)
    return sorted(found)


def bridges(net: Network) -> tuple[Link, ...]:
    """All links whose removal disconnects the network."""
    return tuple(_bridge_links(net.nodes, net.adjacency))


def cutvertices(net: Network) -> tuple[str, ...]:
    """All articulation points of the network."""
    return tuple(_articulation_nodes(net.nodes, net.adjacency))


def is_two_edge_connected(nodes: Iterable[str], links: Iterable[Link]) -> bool:
    """True iff the (sub)graph is connected and bridge-free.

    A single node with no links counts as 2-edge-connected; a disconnected
    graph never does.
    """
    node_list = list(nodes)
    if not node_list:
        raise ValueError("empty graph")
    adjacency = _adjacency_from_links(node_list, links)
    if len(connected_components(node_list, adjacency)) != 1:
        return False
    return not _bridge_links(node_list, adjacency)


@dataclass(frozen=True)
class ConditionOneResult:
    passed: bool
    failing_links: tuple[Link, ...]


@dataclass(frozen=True)
class ConditionTwoResult:
    passed: bool
    witness: tuple[str, str] | None


@dataclass(frozen=True)
class ConditionReport:
    condition_one: ConditionOneResult
    condition_two: ConditionTwoResult
    method_tag: str

    @property
    def satisfied(self) -> bool:
        return self.condition_one.passed and self.condition_two.passed


def condition_one(net: Network) -> ConditionOneResult:
    """Check each interior link: its deletion must leave a 2-edge-connected graph.

    An empty interior link set passes vacuously; the failure list names every
    violating link.
    """
    monitor_set = set(net.monitors)
    failing = []
    for lk in net.links:
        if lk[0] in monitor_set or lk[1] in monitor_set:
            continue
        remaining = [other for other in net.links if other != lk]
        if not is_two_edge_connected(net.nodes, remaining):
            failing.append(lk)
    return ConditionOneResult(not failing, tuple(failing))


def _pair_deletion_ok(net: Network, pair: tuple[str, str]) -> bool:
    comps = delete_nodes(net, pair)
    if len(comps) <= 1:
        return True
    alive = set(net.monitors) - set(pair)
    return all(alive & set(comp) for comp in comps)


def condition_two(net: Network) -> ConditionTwoResult:
    """Pair-deletion characterization of augmented 3-vertex-connectivity.

    For every 2-node subset, the node-deleted graph must be connected or
    every component must retain a surviving monitor.  The witness is the
    first violating pair in lexicographic order.
    """
    for pair in combinations(net.nodes, 2):
        if not _pair_deletion_ok(net, pair):
            return ConditionTwoResult(False, pair)
    return ConditionTwoResult(True, None)


def is_three_vertex_connected_bruteforce(net: Network, add_monitor_link: bool) -> bool:
    """Exhaustive 2-deletion check, optionally on the monitor-augmented graph."""
    if len(net.nodes) < 4:
        raise TooSmall("3-vertex-connectivity needs at least 4 nodes")
    adjacency = {n: set(net.adjacency[n]) for n in net.nodes}
    if add_monitor_link:
        m1, m2 = net.monitors
        adjacency[m1].add(m2)
        adjacency[m2].add(m1)
    for pair in combinations(net.nodes, 2):
        survivors = [n for n in net.nodes if n not in pair]
        if len(connected_components(survivors, adjacency)) > 1:
            return False
    return True


def condition_report(net: Network, method: str = CHARACTERIZATION) -> ConditionReport:
    """Evaluate both conditions; condition two per the requested method."""
    one = condition_one(net)
    if method == CHARACTERIZATION:
        two = condition_two(net)
    elif method == BRUTE_FORCE:
        two = ConditionTwoResult(is_three_vertex_connected_bruteforce(net, True), None)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ConditionReport(one, two, method)
