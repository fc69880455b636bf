"""Path enumeration, exact-rational measurement matrices, and identifiability.

All arithmetic in this module is exact (``fractions.Fraction``); floating
point is never used, because rank and identifiability are exact notions and
tolerance-based rank is a correctness hazard.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .connectivity import ConditionReport, condition_report
from .errors import (
    CapExceeded,
    InconsistentMeasurements,
    InteriorDisconnected,
    UnknownColumn,
)
from .graph import (
    InteriorDecomposition,
    Link,
    Network,
    SimplePath,
    interior_decomposition,
    link,
)

DEFAULT_PATH_CAP = 100_000

_ZERO = Fraction(0)
_ONE = Fraction(1)


def enumerate_simple_paths(net: Network, cap: int = DEFAULT_PATH_CAP) -> tuple[SimplePath, ...]:
    """All simple monitor-to-monitor paths in canonical order.

    Paths are grouped by first hop, then by last hop, lexicographic within a
    group.  Raises CapExceeded as soon as the count would pass ``cap``.
    """
    dec = interior_decomposition(net)
    m1, m2 = net.monitors
    interior = set(dec.interior_nodes)
    out: list[SimplePath] = []
    for a in dec.m1_exterior:
        for b in dec.m2_exterior:
            for segment in _interior_segments(net, a, b, interior):
                if len(out) >= cap:
                    raise CapExceeded(cap, len(out))
                out.append(SimplePath((m1, *segment, m2)))
    return tuple(out)


def _interior_segments(net: Network, start: str, goal: str, interior: set[str]):
    """Simple paths from start to goal through interior nodes, lexicographic."""
    path = [start]
    on_path = {start}

    def extend():
        node = path[-1]
        if node == goal:
            yield tuple(path)
            return
        for nb in net.neighbors(node):
            if nb in interior and nb not in on_path:
                path.append(nb)
                on_path.add(nb)
                yield from extend()
                path.pop()
                on_path.discard(nb)

    yield from extend()


@dataclass(frozen=True)
class MeasurementMatrix:
    """0/1 path-incidence rows over the canonical column order."""

    rows: tuple[tuple[Fraction, ...], ...]
    column_labels: tuple[Link, ...]
    paths: tuple[SimplePath, ...]
    decomposition: InteriorDecomposition


def build_measurement_matrix(net: Network, paths: Sequence[SimplePath]) -> MeasurementMatrix:
    """Incidence matrix of the given paths, one row per path."""
    dec = interior_decomposition(net)
    labels = dec.column_links
    col_index = {lk: i for i, lk in enumerate(labels)}
    rows = []
    for p in paths:
        row = [_ZERO] * len(labels)
        for lk in p.links:
            row[col_index[lk]] = _ONE
        rows.append(tuple(row))
    return MeasurementMatrix(tuple(rows), labels, tuple(paths), dec)


@dataclass(frozen=True)
class TransformedMatrix:
    """Block-structured equivalent of a measurement matrix.

    Rows are ordered: the k2 kept first-group rows (Boolean interior block B),
    then k1-1 difference rows (interior block T with entries in {-1, 0, 1}),
    then all remaining rows, which vanish on every exterior column (interior
    block L).  ``row_provenance`` expresses each output row as an integer
    combination of the original rows, as (row index, coefficient) pairs.
    """

    rows: tuple[tuple[Fraction, ...], ...]
    row_provenance: tuple[tuple[tuple[int, int], ...], ...]
    column_labels: tuple[Link, ...]
    k1: int
    k2: int
    k_h: int

    @property
    def exterior_width(self) -> int:
        return self.k1 + self.k2

    @property
    def top_block(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.rows[: self.k2]

    @property
    def tee_block(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.rows[self.k2: self.k2 + self.k1 - 1]

    @property
    def low_block(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.rows[self.k2 + self.k1 - 1:]

    @property
    def b_block(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(row[self.exterior_width:] for row in self.top_block)

    @property
    def t_block(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(row[self.exterior_width:] for row in self.tee_block)

    @property
    def l_block(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(row[self.exterior_width:] for row in self.low_block)


def block_transform(matrix: MeasurementMatrix) -> TransformedMatrix:
    """Row-reduce a measurement matrix into its canonical block shape.

    Stages, applied literally in order:

    1. Within each (first hop, last hop) group, subtract the group's first
       row from the others; the differences keep only interior columns and
       sink to the bottom.
    2. Subtract each first-group kept row from the matching kept row of every
       later group, then within each later group subtract its first kept row
       from the remaining kept rows.
    3. Relocate the rows produced by the second within-group subtraction to
       the bottom.

    Requires every (first hop, last hop) pair to have at least one path,
    i.e. a connected interior; raises InteriorDisconnected otherwise.
    """
    dec = matrix.decomposition
    k1, k2 = dec.k1, dec.k2

    groups: dict[tuple[str, str], list[int]] = {}
    for idx, p in enumerate(matrix.paths):
        groups.setdefault((p.nodes[1], p.nodes[-2]), []).append(idx)
    missing = [(a, b) for a in dec.m1_exterior for b in dec.m2_exterior
               if (a, b) not in groups]
    if missing:
        raise InteriorDisconnected(
            f"no interior path for {len(missing)} hop pair(s), first {missing[0]}")

    def base_row(idx):
        return (list(matrix.rows[idx]), {idx: 1})

    def subtract(row, other):
        vec, prov = row
        ovec, oprov = other
        new_vec = [x - y for x, y in zip(vec, ovec)]
        new_prov = dict(prov)
        for k, c in oprov.items():
            new_prov[k] = new_prov.get(k, 0) - c
            if new_prov[k] == 0:
                del new_prov[k]
        return (new_vec, new_prov)

    kept = [[None] * k2 for _ in range(k1)]
    low_rows = []
    for i, a in enumerate(dec.m1_exterior):
        for j, b in enumerate(dec.m2_exterior):
            idxs = groups[(a, b)]
            head = base_row(idxs[0])
            kept[i][j] = head
            for other in idxs[1:]:
                low_rows.append(subtract(base_row(other), head))

    for q in range(1, k1):
        for j in range(k2):
            kept[q][j] = subtract(kept[q][j], kept[0][j])
    for q in range(1, k1):
        for j in range(1, k2):
            kept[q][j] = subtract(kept[q][j], kept[q][0])

    ordered = (
        [kept[0][j] for j in range(k2)]
        + [kept[q][0] for q in range(1, k1)]
        + low_rows
        + [kept[q][j] for q in range(1, k1) for j in range(1, k2)]
    )

    ext = k1 + k2
    rows = []
    provenance = []
    for pos, (vec, prov) in enumerate(ordered):
        if pos >= k2 + (k1 - 1):
            assert all(x == 0 for x in vec[:ext]), \
                "low rows must vanish on exterior columns"
        rows.append(tuple(vec))
        provenance.append(tuple(sorted(prov.items())))
    for vec, _ in ordered[:k2]:
        assert all(x in (0, 1) for x in vec[ext:]), "top interior block must be Boolean"
    for vec, _ in ordered[k2: k2 + k1 - 1]:
        assert all(x in (-1, 0, 1) for x in vec[ext:]), \
            "difference interior block must be a (-1,0,1)-matrix"

    return TransformedMatrix(
        tuple(rows), tuple(provenance), matrix.column_labels, k1, k2, dec.k_h)


class _RowSpace:
    """Incremental reduced row-echelon basis over the rationals."""

    def __init__(self, width: int):
        self.width = width
        self.pivots: list[tuple[int, list[Fraction]]] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Iterable[Fraction]) -> list[Fraction]:
        v = list(vec)
        for col, row in self.pivots:
            coeff = v[col]
            if coeff:
                v = [a - coeff * b for a, b in zip(v, row)]
        return v

    def contains(self, vec: Iterable[Fraction]) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    def add(self, vec: Iterable[Fraction], pivot_limit: int | None = None):
        """Reduce ``vec`` against the basis and insert it if independent.

        Returns (inserted, residual).  Only the first ``pivot_limit`` columns
        are eligible to host a pivot, which lets callers keep an augmented
        right-hand side out of the basis.
        """
        limit = self.width if pivot_limit is None else pivot_limit
        v = self.reduce(vec)
        lead = next((c for c in range(limit) if v[c]), None)
        if lead is None:
            return False, v
        inv = v[lead]
        v = [a / inv for a in v]
        self.pivots = [
            (col, [a - row[lead] * b for a, b in zip(row, v)] if row[lead] else row)
            for col, row in self.pivots
        ]
        self.pivots.append((lead, v))
        self.pivots.sort(key=lambda item: item[0])
        return True, v


def _matrix_rows(matrix) -> list[tuple[Fraction, ...]]:
    rows = getattr(matrix, "rows", matrix)
    return [tuple(Fraction(x) for x in row) for row in rows]


def rank(matrix) -> int:
    """Exact rank of a matrix (an object with ``rows`` or a row sequence)."""
    rows = _matrix_rows(matrix)
    if not rows:
        return 0
    space = _RowSpace(len(rows[0]))
    for row in rows:
        space.add(row)
    return space.rank


def _unit_vector(length: int, index: int) -> list[Fraction]:
    v = [_ZERO] * length
    v[index] = _ONE
    return v


def link_identifiable(matrix: MeasurementMatrix, target: Link) -> bool:
    """True iff the unit vector of the link's column lies in the row space."""
    lk = link(*target)
    if lk not in matrix.column_labels:
        raise UnknownColumn(f"{lk} is not a matrix column")
    col = matrix.column_labels.index(lk)
    space = _RowSpace(len(matrix.column_labels))
    for row in matrix.rows:
        space.add(row)
    return space.contains(_unit_vector(space.width, col))


def recover_metrics(matrix: MeasurementMatrix,
                    measurements: Sequence[Fraction]) -> dict[Link, Fraction]:
    """Solve the noise-free system for every identifiable column.

    Returns a mapping from link to its uniquely determined value; columns
    that are not identifiable are absent.  Raises InconsistentMeasurements
    when no exact solution exists.
    """
    if len(measurements) != len(matrix.rows):
        raise ValueError(
            f"expected {len(matrix.rows)} measurements, got {len(measurements)}")
    ncols = len(matrix.column_labels)
    space = _RowSpace(ncols + 1)
    for row, value in zip(matrix.rows, measurements):
        inserted, residual = space.add((*row, Fraction(value)), pivot_limit=ncols)
        if not inserted and residual[ncols] != 0:
            raise InconsistentMeasurements(
                "measurements are not exact path sums of any weight assignment")
    pivot_rhs = {col: row[ncols] for col, row in space.pivots}
    out: dict[Link, Fraction] = {}
    for idx, label in enumerate(matrix.column_labels):
        residual = space.reduce((*_unit_vector(ncols, idx), _ZERO))
        if all(x == 0 for x in residual[:ncols]):
            out[label] = pivot_rhs[idx]
    return out


@dataclass(frozen=True)
class IdentifiabilityReport:
    """Conditions, matrix rank, and per-column identifiability verdicts."""

    conditions: ConditionReport
    rank: int
    per_link: dict[Link, bool]
    recovered: dict[Link, Fraction] | None


def identify(net: Network, measurements: Sequence[Fraction] | None = None,
             cap: int = DEFAULT_PATH_CAP) -> IdentifiabilityReport:
    """Full pipeline: conditions, paths, matrix, rank, per-link verdicts."""
    conditions = condition_report(net)
    paths = enumerate_simple_paths(net, cap)
    matrix = build_measurement_matrix(net, paths)
    space = _RowSpace(len(matrix.column_labels))
    for row in matrix.rows:
        space.add(row)
    per_link = {
        label: space.contains(_unit_vector(space.width, idx))
        for idx, label in enumerate(matrix.column_labels)
    }
    recovered = recover_metrics(matrix, measurements) if measurements is not None else None
    return IdentifiabilityReport(conditions, space.rank, per_link, recovered)
