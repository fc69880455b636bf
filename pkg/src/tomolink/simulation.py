"""Seeded network generators, weight assignment, and measurement round trips."""

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .connectivity import ConditionReport, condition_report
from .errors import Infeasible, MissingWeight, ValidationError
from .graph import Link, Network, SimplePath, link, serialize_network
from .measurement import (
    DEFAULT_PATH_CAP,
    build_measurement_matrix,
    enumerate_simple_paths,
    rank,
    recover_metrics,
)

LinkWeights = dict[Link, Fraction]


def random_network(n: int, extra_links: int, seed: int) -> Network:
    """Deterministic connected network: random tree plus extra random links.

    Monitors are the two lexicographically-first nodes and never share a
    link.  Identical (n, extra_links, seed) always yields the same network.
    """
    if n < 4:
        raise Infeasible("need at least 4 nodes")
    if extra_links < 0:
        raise Infeasible("extra_links must be non-negative")
    rng = random.Random(seed)
    names = [f"n{i:03d}" for i in range(n)]
    m1, m2 = names[0], names[1]
    links_set: set[Link] = set()
    grown = [m1]
    for node in names[2:]:
        links_set.add(link(node, rng.choice(grown)))
        grown.append(node)
    # the second monitor must not attach to the first one directly
    links_set.add(link(m2, rng.choice(grown[1:])))
    pool = sorted(
        link(u, v) for u, v in combinations(names, 2)
        if link(u, v) not in links_set and {u, v} != {m1, m2})
    if extra_links > len(pool):
        raise Infeasible(
            f"cannot add {extra_links} extra links, only {len(pool)} slots remain")
    links_set.update(rng.sample(pool, extra_links))
    return Network.build(names, sorted(links_set), (m1, m2))


def enumerate_networks(max_nodes: int, min_nodes: int = 3) -> Iterator[Network]:
    """Every connected simple network with up to ``max_nodes`` nodes.

    Nodes are 'a', 'b', ...; monitors are the two lexicographically-first
    nodes and the direct monitor link is excluded from the candidate set.
    """
    for n in range(min_nodes, max_nodes + 1):
        names = [chr(ord("a") + i) for i in range(n)]
        m1, m2 = names[0], names[1]
        candidates = [link(u, v) for u, v in combinations(names, 2)
                      if {u, v} != {m1, m2}]
        for bits in range(2 ** len(candidates)):
            chosen = [candidates[i] for i in range(len(candidates))
                      if bits >> i & 1]
            try:
                yield Network.build(names, chosen, (m1, m2))
            except ValidationError:
                continue


def assign_weights(net: Network, seed: int) -> LinkWeights:
    """Deterministic positive rational weight for every link."""
    rng = random.Random(seed)
    return {lk: Fraction(rng.randint(1, 12), rng.randint(1, 8)) for lk in net.links}


def measure_paths(net: Network, weights: LinkWeights,
                  paths: Sequence[SimplePath]) -> tuple[Fraction, ...]:
    """Exact path sums of the link weights, one entry per path."""
    totals = []
    for p in paths:
        total = Fraction(0)
        for lk in p.links:
            if lk not in weights:
                raise MissingWeight(f"no weight assigned to {lk}")
            total += weights[lk]
        totals.append(total)
    return tuple(totals)


@dataclass(frozen=True)
class LinkOutcome:
    assigned: Fraction
    recovered: Fraction | None
    identifiable: bool


@dataclass(frozen=True)
class RoundTripReport:
    """Outcome of one assign -> measure -> recover cycle on a network."""

    digest: str
    conditions: ConditionReport
    path_count: int
    rank: int
    per_link: dict[Link, LinkOutcome]
    exact_match: bool


def network_digest(net: Network) -> str:
    return hashlib.sha256(serialize_network(net).encode()).hexdigest()


def round_trip(net: Network, seed: int, cap: int = DEFAULT_PATH_CAP) -> RoundTripReport:
    """Assign weights, measure every simple path, recover, and compare."""
    weights = assign_weights(net, seed)
    conditions = condition_report(net)
    paths = enumerate_simple_paths(net, cap)
    matrix = build_measurement_matrix(net, paths)
    measurements = measure_paths(net, weights, paths)
    recovered = recover_metrics(matrix, measurements)
    per_link = {
        lk: LinkOutcome(weights[lk], recovered.get(lk), lk in recovered)
        for lk in matrix.column_labels
    }
    exact = all(o.recovered == o.assigned
                for o in per_link.values() if o.identifiable)
    return RoundTripReport(
        digest=network_digest(net),
        conditions=conditions,
        path_count=len(paths),
        rank=rank(matrix),
        per_link=per_link,
        exact_match=exact,
    )
