"""Decorated multigraphs of circle-bundle pieces glued along tori.

A graph manifold is stored as its dual graph: one vertex per Seifert piece,
one directed edge per gluing torus.  Each piece is a trivial circle bundle
over an orientable surface of genus at least 2 with at least one boundary
torus, carrying a fixed section-fiber coordinate system on every boundary
component.  Each edge carries a 2 x 2 integer matrix expressing the sewing
map between the coordinates of its two sides.

Validity of a decorated graph means:

* every piece has genus >= 2 and boundary count >= 1;
* every gluing matrix has determinant -1 (orientation-reversing sewing of
  boundary tori inside an oriented manifold) and nonzero upper-right entry
  (the fiber of one side never maps to the fiber of the other, which is
  exactly minimality of the torus decomposition);
* edges join distinct pieces, every boundary slot of every piece is used by
  exactly one edge endpoint, and the graph is connected with at least one
  edge.

Transport convention: the sewing map carries the tail basis to the head
basis row-wise, so coordinates of curves transform by the column action of
the matrix (tail to head) and of its inverse (head to tail).  This single
convention is fixed here and used everywhere downstream.

Exchange format (canonical JSON, UTF-8, sorted keys, pieces sorted by id,
edges sorted by (tail, head, matrix)):

    {"pieces": [{"id": "A", "genus": 2, "boundary": 1}, ...],
     "edges": [{"tail": ["A", 0], "head": ["B", 0],
                "matrix": [[0, 1], [1, 0]]}, ...]}

Slots are 0-based indices into a piece's boundary components.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .errors import ParseError, ValidationError
from .seifert import SeifertInvariants, euler_number, fill_framed_piece
from .serialize import canonical_json_bytes


@dataclass(frozen=True, order=True)
class Slope:
    """A primitive curve class (a, b) in a section-fiber basis.

    Canonical form: a > 0, or a = 0 and b = 1.  Slopes are unoriented, so
    negating both entries gives the same slope; the canonical sign makes
    the representative unique.
    """

    a: int
    b: int

    def __post_init__(self):
        if (self.a, self.b) == (0, 0):
            raise ValueError("slope (0, 0) is not a curve")
        if math.gcd(abs(self.a), abs(self.b)) != 1:
            raise ValueError(f"slope ({self.a}, {self.b}) is not primitive")
        if self.a < 0 or (self.a == 0 and self.b < 0):
            raise ValueError(
                f"slope ({self.a}, {self.b}) is not canonical; use Slope.canonical"
            )

    @classmethod
    def canonical(cls, a: int, b: int) -> "Slope":
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        return cls(a, b)

    @property
    def is_fiber(self) -> bool:
        return self.a == 0


FIBER = Slope(0, 1)


@dataclass(frozen=True, order=True)
class GluingMatrix:
    """2 x 2 integer matrix [[a, b], [c, d]] acting on curve coordinates."""

    rows: tuple[tuple[int, int], tuple[int, int]]

    @classmethod
    def of(cls, a: int, b: int, c: int, d: int) -> "GluingMatrix":
        return cls(((a, b), (c, d)))

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def apply(self, x: int, y: int) -> tuple[int, int]:
        (a, b), (c, d) = self.rows
        return a * x + b * y, c * x + d * y

    def inverse(self) -> "GluingMatrix":
        (a, b), (c, d) = self.rows
        if self.det == 1:
            return GluingMatrix(((d, -b), (-c, a)))
        if self.det == -1:
            return GluingMatrix(((-d, b), (c, -a)))
        raise ValueError(f"matrix with determinant {self.det} is not invertible over Z")

    @property
    def is_pm_j(self) -> bool:
        return self.rows == ((0, 1), (1, 0)) or self.rows == ((0, -1), (-1, 0))


J = GluingMatrix.of(0, 1, 1, 0)
MINUS_J = GluingMatrix.of(0, -1, -1, 0)


@dataclass(frozen=True)
class BundlePiece:
    """A trivial circle bundle over a genus >= 2 surface with boundary tori."""

    id: str
    genus: int
    boundary: int


@dataclass(frozen=True)
class Edge:
    """A directed gluing torus between two boundary slots."""

    tail: tuple[str, int]
    head: tuple[str, int]
    matrix: GluingMatrix


def _edge_sort_key(edge: Edge):
    return (edge.tail, edge.head, edge.matrix.rows)


@dataclass(frozen=True)
class GraphManifold:
    """A decorated dual graph; pieces and edges are kept in canonical order."""

    pieces: tuple[BundlePiece, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        pieces = tuple(sorted(self.pieces, key=lambda p: p.id))
        edges = tuple(sorted(self.edges, key=_edge_sort_key))
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "edges", edges)

    def piece(self, piece_id: str) -> BundlePiece:
        for piece in self.pieces:
            if piece.id == piece_id:
                return piece
        raise KeyError(f"no piece with id {piece_id!r}")

    def piece_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.pieces)

    def adjacent_pieces(self, piece_id: str) -> tuple[str, ...]:
        """Ids of the pieces sharing at least one gluing torus with piece_id."""
        seen = set()
        for edge in self.edges:
            if edge.tail[0] == piece_id:
                seen.add(edge.head[0])
            elif edge.head[0] == piece_id:
                seen.add(edge.tail[0])
        return tuple(sorted(seen))


Direction = Literal["tail_to_head", "head_to_tail"]


def transport_slope(edge: Edge, direction: Direction, slope: Slope) -> Slope:
    """Carry a slope across a gluing torus, returning the canonical form."""
    if direction == "tail_to_head":
        matrix = edge.matrix
    elif direction == "head_to_tail":
        matrix = edge.matrix.inverse()
    else:
        raise ValueError(f"unknown transport direction {direction!r}")
    x, y = matrix.apply(slope.a, slope.b)
    return Slope.canonical(x, y)


def _slot_assignments(gm: GraphManifold) -> dict[tuple[str, int], tuple[int, str]]:
    """Map every (piece id, slot) to (edge index, side) for a valid graph."""
    assignments: dict[tuple[str, int], tuple[int, str]] = {}
    for index, edge in enumerate(gm.edges):
        assignments[edge.tail] = (index, "tail")
        assignments[edge.head] = (index, "head")
    return assignments


def validate(gm: GraphManifold) -> list[str]:
    """Check every structural invariant; return the violations (empty if valid)."""
    violations: list[str] = []
    seen_ids: set[str] = set()
    for piece in gm.pieces:
        if piece.id in seen_ids:
            violations.append(f"duplicate piece id {piece.id!r}")
        seen_ids.add(piece.id)
        if piece.genus < 2:
            violations.append(f"piece {piece.id!r}: genus below 2")
        if piece.boundary < 1:
            violations.append(f"piece {piece.id!r}: boundary count below 1")

    by_id = {p.id: p for p in gm.pieces}
    usage: dict[tuple[str, int], int] = {}
    for index, edge in enumerate(gm.edges):
        for side, (pid, slot) in (("tail", edge.tail), ("head", edge.head)):
            if pid not in by_id:
                violations.append(f"edge {index}: unknown piece id {pid!r} on {side}")
            elif not 0 <= slot < by_id[pid].boundary:
                violations.append(
                    f"edge {index}: slot {slot} out of range for piece {pid!r}"
                )
            usage[(pid, slot)] = usage.get((pid, slot), 0) + 1
        if edge.tail[0] == edge.head[0]:
            violations.append(f"edge {index}: edge joins a piece to itself")
        det = edge.matrix.det
        if det != -1:
            violations.append(
                f"edge {index}: determinant of gluing matrix is {det}, not -1"
            )
        if edge.matrix.rows[0][1] == 0:
            violations.append(
                f"edge {index}: minimality violated, the fiber maps to a fiber "
                "(upper-right entry is 0)"
            )

    for piece in gm.pieces:
        for slot in range(piece.boundary):
            count = usage.get((piece.id, slot), 0)
            if count != 1:
                violations.append(
                    f"slot {piece.id!r}[{slot}] used by {count} edge endpoints, "
                    "expected exactly 1"
                )

    if not gm.edges:
        violations.append("graph has no edges")
    elif not violations:
        # Connectivity is only meaningful once the incidence data is sane.
        reached = {gm.pieces[0].id}
        frontier = [gm.pieces[0].id]
        while frontier:
            current = frontier.pop()
            for neighbor in gm.adjacent_pieces(current):
                if neighbor not in reached:
                    reached.add(neighbor)
                    frontier.append(neighbor)
        if len(reached) != len(gm.pieces):
            violations.append("graph is not connected")
    return violations


def graph_from_document(doc) -> GraphManifold:
    """Build a GraphManifold from a parsed JSON document without validating it."""
    if not isinstance(doc, dict):
        raise ParseError("document root must be an object")
    allowed = {"pieces", "edges", "certificate", "torus_map"}
    unknown = set(doc) - allowed
    if unknown:
        raise ParseError(f"unexpected keys in document: {sorted(unknown)}")
    if "pieces" not in doc or "edges" not in doc:
        raise ParseError('document must contain "pieces" and "edges"')

    pieces = []
    for raw in _expect_list(doc["pieces"], "pieces"):
        if not isinstance(raw, dict) or set(raw) != {"id", "genus", "boundary"}:
            raise ParseError(f"malformed piece entry: {raw!r}")
        if not isinstance(raw["id"], str):
            raise ParseError(f"piece id must be a string: {raw['id']!r}")
        pieces.append(
            BundlePiece(
                id=raw["id"],
                genus=_expect_int(raw["genus"], "genus"),
                boundary=_expect_int(raw["boundary"], "boundary"),
            )
        )

    edges = []
    for raw in _expect_list(doc["edges"], "edges"):
        if not isinstance(raw, dict) or set(raw) != {"tail", "head", "matrix"}:
            raise ParseError(f"malformed edge entry: {raw!r}")
        edges.append(
            Edge(
                tail=_expect_end(raw["tail"]),
                head=_expect_end(raw["head"]),
                matrix=_expect_matrix(raw["matrix"]),
            )
        )
    return GraphManifold(tuple(pieces), tuple(edges))


def parse_graph(data: bytes | str) -> GraphManifold:
    """Parse and validate a graph document; raise on any violation."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"document is not valid JSON: {exc}") from exc
    gm = graph_from_document(doc)
    violations = validate(gm)
    if violations:
        raise ValidationError(violations)
    return gm


def graph_to_document(gm: GraphManifold) -> dict:
    """The JSON document of a graph, with pieces and edges in canonical order."""
    return {
        "pieces": [
            {"id": p.id, "genus": p.genus, "boundary": p.boundary} for p in gm.pieces
        ],
        "edges": [
            {
                "tail": [e.tail[0], e.tail[1]],
                "head": [e.head[0], e.head[1]],
                "matrix": [list(e.matrix.rows[0]), list(e.matrix.rows[1])],
            }
            for e in gm.edges
        ],
    }


def serialize_graph(gm: GraphManifold, pretty: bool = False) -> bytes:
    """Canonical byte serialization; parse_graph inverts it exactly."""
    return canonical_json_bytes(graph_to_document(gm), pretty=pretty)


def canonical_framing(gm: GraphManifold, piece_id: str) -> list[Slope]:
    """The framing of a piece by the fibers of its neighbors, one slope per slot.

    For each boundary slot, the fiber slope (0, 1) of the opposite side of
    the gluing torus is transported into this piece's coordinates.  The
    minimality invariant (nonzero upper-right matrix entry) guarantees the
    result is never the fiber of this piece.
    """
    piece = gm.piece(piece_id)
    assignments = _slot_assignments(gm)
    framing = []
    for slot in range(piece.boundary):
        try:
            index, side = assignments[(piece_id, slot)]
        except KeyError:
            raise ValidationError(
                [f"slot {piece_id!r}[{slot}] used by 0 edge endpoints, expected exactly 1"]
            ) from None
        edge = gm.edges[index]
        if side == "head":
            framing.append(transport_slope(edge, "tail_to_head", FIBER))
        else:
            framing.append(transport_slope(edge, "head_to_tail", FIBER))
    return framing


def filled_piece_invariants(
    gm: GraphManifold, piece_id: str, slopes: Sequence[Slope]
) -> SeifertInvariants:
    """Seifert invariants of a piece Dehn filled along one slope per slot."""
    piece = gm.piece(piece_id)
    if len(slopes) != piece.boundary:
        raise ValueError(
            f"piece {piece_id!r} has {piece.boundary} boundary slots, "
            f"got {len(slopes)} slopes"
        )
    return fill_framed_piece(piece.genus, slopes)


def absolute_euler_number(gm: GraphManifold) -> Fraction:
    """Sum over pieces of |e| of the piece filled along its canonical framing."""
    total = Fraction(0)
    for piece in gm.pieces:
        framing = canonical_framing(gm, piece.id)
        total += abs(euler_number(filled_piece_invariants(gm, piece.id, framing)))
    return total


def is_pm_j_form(gm: GraphManifold) -> bool:
    """True when every gluing matrix is the swap J or its negative."""
    return all(edge.matrix.is_pm_j for edge in gm.edges)


def _expect_list(value, name: str) -> list:
    if not isinstance(value, list):
        raise ParseError(f'"{name}" must be a list')
    return value


def _expect_int(value, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f'"{name}" must be an integer, got {value!r}')
    return value


def _expect_end(value) -> tuple[str, int]:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not isinstance(value[0], str)
    ):
        raise ParseError(f"malformed edge endpoint: {value!r}")
    return (value[0], _expect_int(value[1], "slot"))


def _expect_matrix(value) -> GluingMatrix:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or any(not isinstance(row, list) or len(row) != 2 for row in value)
    ):
        raise ParseError(f"malformed gluing matrix: {value!r}")
    (a, b), (c, d) = value
    return GluingMatrix.of(
        _expect_int(a, "matrix entry"),
        _expect_int(b, "matrix entry"),
        _expect_int(c, "matrix entry"),
        _expect_int(d, "matrix entry"),
    )
