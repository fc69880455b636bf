"""Network model: parsing, validation, canonical serialization, decomposition.

Node identifiers are opaque strings compared lexicographically; every
canonical order (nodes, links, matrix columns, search order) derives from
that comparison so results are reproducible across runs and platforms.
"""

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import EmptyInterior, MalformedInput, ValidationError

Link = tuple[str, str]


def link(u: str, v: str) -> Link:
    """Canonical (lexicographically sorted) form of an undirected link."""
    return (u, v) if u <= v else (v, u)


def connected_components(
    nodes: Iterable[str], adjacency: Mapping[str, Iterable[str]]
) -> tuple[tuple[str, ...], ...]:
    """Connected components restricted to ``nodes``, each sorted, in sorted order.

    Neighbors outside ``nodes`` are ignored, so the same adjacency map can be
    reused for node-deleted subgraphs.
    """
    remaining = set(nodes)
    comps = []
    while remaining:
        seed = min(remaining)
        seen = {seed}
        frontier = [seed]
        while frontier:
            current = frontier.pop()
            for nb in adjacency.get(current, ()):
                if nb in remaining and nb not in seen:
                    seen.add(nb)
                    frontier.append(nb)
        remaining -= seen
        comps.append(tuple(sorted(seen)))
    comps.sort()
    return tuple(comps)


@dataclass(frozen=True)
class Network:
    """Connected simple undirected graph with an ordered monitor pair (m1, m2).

    Instances are immutable; construct through :meth:`build` or
    :func:`parse_network`, which enforce the invariants (no self-loops, no
    duplicate links, no direct monitor-to-monitor link, connected).
    """

    nodes: tuple[str, ...]
    links: tuple[Link, ...]
    monitors: tuple[str, str]

    @classmethod
    def build(cls, nodes: Iterable[str], links: Iterable[Iterable[str]],
              monitors: Iterable[str]) -> "Network":
        """Validate raw parts and return a canonically ordered Network."""
        node_list = list(nodes)
        if len(set(node_list)) != len(node_list):
            raise MalformedInput("duplicate node identifiers")
        node_set = set(node_list)
        monitor_pair = tuple(monitors)
        if len(monitor_pair) != 2:
            raise MalformedInput("monitors must name exactly two nodes")
        m1, m2 = monitor_pair
        if m1 == m2 or m1 not in node_set or m2 not in node_set:
            raise ValidationError(
                "MONITOR_MISSING", "monitors must be two distinct declared nodes")
        canonical = []
        seen: set[Link] = set()
        for raw in links:
            try:
                u, v = raw
            except (TypeError, ValueError) as exc:
                raise MalformedInput(f"link is not a node pair: {raw!r}") from exc
            if u == v:
                raise ValidationError("SELF_LOOP", f"self-loop at {u!r}")
            if u not in node_set or v not in node_set:
                raise MalformedInput(f"link endpoint not declared: {raw!r}")
            lk = link(u, v)
            if lk in seen:
                raise ValidationError("DUPLICATE_LINK", f"duplicate link {lk!r}")
            seen.add(lk)
            canonical.append(lk)
        if link(m1, m2) in seen:
            raise ValidationError(
                "MONITOR_LINK", "direct monitor-to-monitor link is not allowed")
        adjacency: dict[str, set[str]] = {n: set() for n in node_list}
        for u, v in canonical:
            adjacency[u].add(v)
            adjacency[v].add(u)
        if len(connected_components(node_set, adjacency)) != 1:
            raise ValidationError("DISCONNECTED", "graph is not connected")
        return cls(tuple(sorted(node_list)), tuple(sorted(canonical)), (m1, m2))

    @cached_property
    def adjacency(self) -> dict[str, tuple[str, ...]]:
        nbrs: dict[str, list[str]] = {n: [] for n in self.nodes}
        for u, v in self.links:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {n: tuple(sorted(ns)) for n, ns in nbrs.items()}

    @cached_property
    def link_set(self) -> frozenset[Link]:
        return frozenset(self.links)

    @cached_property
    def interior_nodes(self) -> tuple[str, ...]:
        m1, m2 = self.monitors
        return tuple(n for n in self.nodes if n != m1 and n != m2)

    @property
    def m1(self) -> str:
        return self.monitors[0]

    @property
    def m2(self) -> str:
        return self.monitors[1]

    def neighbors(self, node: str) -> tuple[str, ...]:
        return self.adjacency[node]

    def degree(self, node: str) -> int:
        return len(self.adjacency[node])

    def has_link(self, u: str, v: str) -> bool:
        return link(u, v) in self.link_set

    def is_interior_link(self, lk: Link) -> bool:
        """True when neither endpoint of an existing link is a monitor."""
        u, v = lk
        m1, m2 = self.monitors
        return (link(u, v) in self.link_set
                and u not in (m1, m2) and v not in (m1, m2))


def parse_network(text: str) -> Network:
    """Parse a graph document (JSON with nodes/links/monitors) into a Network."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) != {"nodes", "links", "monitors"}:
        raise MalformedInput(
            "document must be an object with exactly the fields nodes, links, monitors")
    nodes = doc["nodes"]
    raw_links = doc["links"]
    monitors = doc["monitors"]
    if not isinstance(nodes, list) or not all(isinstance(n, str) for n in nodes):
        raise MalformedInput("nodes must be an array of strings")
    if not isinstance(raw_links, list):
        raise MalformedInput("links must be an array")
    pairs = []
    for entry in raw_links:
        if (not isinstance(entry, list) or len(entry) != 2
                or not all(isinstance(e, str) for e in entry)):
            raise MalformedInput(f"links entries must be 2-element string arrays: {entry!r}")
        pairs.append((entry[0], entry[1]))
    if (not isinstance(monitors, list) or len(monitors) != 2
            or not all(isinstance(m, str) for m in monitors)):
        raise MalformedInput("monitors must be a 2-element string array")
    return Network.build(nodes, pairs, (monitors[0], monitors[1]))


def serialize_network(net: Network) -> str:
    """Canonical graph document: nodes sorted, links sorted after internal sorting."""
    doc = {
        "nodes": list(net.nodes),
        "links": [list(lk) for lk in net.links],
        "monitors": list(net.monitors),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class InteriorDecomposition:
    """Monitor-incident structure of a network plus its interior graph.

    ``m1_exterior`` lists the neighbors a_1..a_k1 of the first monitor and
    ``m2_exterior`` the neighbors b_1..b_k2 of the second, both sorted; the
    same node may appear in both lists.  ``column_links`` fixes the matrix
    column order: first-monitor links, second-monitor links, interior links.
    """

    monitors: tuple[str, str]
    interior_nodes: tuple[str, ...]
    interior_links: tuple[Link, ...]
    m1_exterior: tuple[str, ...]
    m2_exterior: tuple[str, ...]

    @property
    def k1(self) -> int:
        return len(self.m1_exterior)

    @property
    def k2(self) -> int:
        return len(self.m2_exterior)

    @property
    def k_h(self) -> int:
        return len(self.interior_links)

    @cached_property
    def column_links(self) -> tuple[Link, ...]:
        m1, m2 = self.monitors
        return tuple(
            [link(m1, a) for a in self.m1_exterior]
            + [link(b, m2) for b in self.m2_exterior]
            + list(self.interior_links)
        )


def interior_decomposition(net: Network) -> InteriorDecomposition:
    """Split a network into exterior link lists and the interior link sequence."""
    m1, m2 = net.monitors
    interior_nodes = net.interior_nodes
    if not interior_nodes:
        raise EmptyInterior("network has no interior node")
    monitor_set = {m1, m2}
    interior_links = tuple(
        lk for lk in net.links
        if lk[0] not in monitor_set and lk[1] not in monitor_set)
    return InteriorDecomposition(
        monitors=(m1, m2),
        interior_nodes=interior_nodes,
        interior_links=interior_links,
        m1_exterior=net.neighbors(m1),
        m2_exterior=net.neighbors(m2),
    )


@dataclass(frozen=True)
class SimplePath:
    """Sequence of distinct nodes; a single node is a valid zero-length path."""

    nodes: tuple[str, ...]

    def __post_init__(self):
        if not self.nodes:
            raise ValueError("path must contain at least one node")
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError(f"path repeats a node: {self.nodes!r}")

    @property
    def links(self) -> tuple[Link, ...]:
        return tuple(link(a, b) for a, b in zip(self.nodes, self.nodes[1:]))

    @property
    def is_zero_length(self) -> bool:
        return len(self.nodes) == 1


def delete_nodes(net: Network, victims: Iterable[str]) -> tuple[tuple[str, ...], ...]:
    """Connected components left after deleting ``victims`` (monitors included)."""
    victim_set = set(victims)
    unknown = victim_set - set(net.nodes)
    if unknown:
        raise ValueError(f"victims not in network: {sorted(unknown)}")
    survivors = [n for n in net.nodes if n not in victim_set]
    return connected_components(survivors, net.adjacency)
