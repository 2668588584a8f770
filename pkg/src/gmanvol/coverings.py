"""Finite covers of decorated graph manifolds, with verifiable bookkeeping.

Covers are represented purely combinatorially: a covered graph manifold, a
certificate recording degrees and surface data for every covered piece, and
a map sending each covering edge to the edge it lies over.  Two explicit
constructions are provided.

characteristic_cover(gm, q)
    A connected cover of degree q^2, for a prime q exceeding every boundary
    count.  Every piece is unwrapped q times in the fiber direction and q
    times over its base surface, every piece preimage and torus preimage is
    connected, the graph shape is unchanged, and every gluing matrix is
    preserved.  Over each gluing torus the cover restricts to the subgroup
    of index q x q, so the cover is q-characteristic; it is separable
    because each piece cover comes from a product epimorphism onto
    Z/q x Z/q (base factor times fiber factor).  The construction needs at
    least two boundary tori on every piece: with a single boundary circle,
    the boundary word is a product of commutators and dies in any abelian
    quotient of the base group, so no epimorphism gives the boundary circle
    full order q.  Such inputs are rejected with a hint to raise the
    boundary count first via genus_raising_cover.

genus_raising_cover(gm, center, q)
    A connected cover of degree q, trivial over a chosen center piece and
    over every gluing torus.  Pieces adjacent to the center are unwrapped q
    times over their base surface only (fiber untouched), which raises
    their genus; the center and every non-adjacent piece are replicated q
    times, with copies labeled by Z/q.  Each torus preimage with label k
    attaches to copy k of a replicated piece and to the k-th boundary lift
    of a connectedly covered piece; this deterministic matching always
    yields a connected cover.  The cover is 1-characteristic and separable
    (each piece cover has fiber degree one).

The genus of a covered base surface follows the Riemann-Hurwitz count for
unbranched covers of surfaces with boundary, exposed separately as
riemann_hurwitz_genus so its two boundary behaviors can be tested as plain
integer identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    BoundaryCountTooSmall,
    DisconnectedCover,
    GmanvolError,
    NonIntegralGenus,
    NotPrime,
    ParseError,
    PrimeTooSmall,
)
from .graph import (
    BundlePiece,
    Edge,
    GraphManifold,
    Slope,
    _edge_sort_key,
    filled_piece_invariants,
    graph_from_document,
    graph_to_document,
    validate,
)
from .seifert import ehn_horizontal_foliation, fill_framed_piece


@dataclass(frozen=True)
class PieceCoverRecord:
    """How one covering piece lies over its downstairs piece."""

    over: str
    vertical_degree: int
    horizontal_degree: int
    genus_up: int
    boundary_up: int

    @property
    def degree(self) -> int:
        return self.vertical_degree * self.horizontal_degree


@dataclass(frozen=True)
class CoveringCertificate:
    """Degree and surface bookkeeping for one covering stage.

    per_piece maps every covering piece id to its record.  The
    characteristic level m means the cover restricts over every gluing
    torus to the subgroup of index m x m (m = 1 for a cover that is trivial
    over the tori).  separable_case names which separability criterion the
    construction used.
    """

    total_degree: int
    characteristic_level: int
    per_piece: Mapping[str, PieceCoverRecord]
    separable: bool
    separable_case: str


@dataclass(frozen=True)
class CoveredGraph:
    """A covering graph manifold together with its certificate.

    torus_map[i] is the index (in canonical edge order of the base graph)
    of the edge under the i-th edge (in canonical order) of the cover.
    """

    manifold: GraphManifold
    certificate: CoveringCertificate
    torus_map: tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def next_prime_above(n: int) -> int:
    candidate = max(2, n + 1)
    while not is_prime(candidate):
        candidate += 1
    return candidate


def riemann_hurwitz_genus(
    genus: int, boundary: int, q: int, boundary_order: str
) -> tuple[int, int]:
    """Genus and boundary count of a degree-q surface cover.

    boundary_order "q": every boundary circle has connected preimage (one
    circle winding q times); then 2 (g_up - g) = (2g + p - 2)(q - 1) and the
    boundary count is unchanged.  boundary_order "1": the cover is trivial
    over the boundary; then g_up = 1 + q (g - 1) and the boundary count is
    multiplied by q.  Both satisfy chi(up) = q * chi(down).  q = 1 returns
    the input unchanged.
    """
    if boundary_order not in ("q", "1"):
        raise ValueError(f"boundary_order must be 'q' or '1', got {boundary_order!r}")
    if q < 1:
        raise ValueError(f"covering degree must be positive, got {q}")
    if q == 1:
        return genus, boundary
    if boundary_order == "q":
        doubled = (2 * genus + boundary - 2) * (q - 1)
        if doubled % 2:
            raise NonIntegralGenus(
                f"(2g + p - 2)(q - 1) = {doubled} is odd for "
                f"(g, p, q) = ({genus}, {boundary}, {q})"
            )
        return genus + doubled // 2, boundary
    return 1 + q * (genus - 1), q * boundary


def characteristic_cover(gm: GraphManifold, q: int) -> CoveredGraph:
    """The q-characteristic separable cover of degree q^2 (q prime)."""
    if not is_prime(q):
        raise NotPrime(f"covering order {q} is not prime")
    max_boundary = max(piece.boundary for piece in gm.pieces)
    if q <= max_boundary:
        raise PrimeTooSmall(
            f"prime {q} must exceed the largest boundary count {max_boundary}"
        )
    small = [p.id for p in gm.pieces if p.boundary < 2]
    if small:
        raise BoundaryCountTooSmall(
            f"pieces {small} have a single boundary torus; apply a "
            "genus-raising cover first to multiply boundary tori"
        )

    pieces = []
    records = {}
    for piece in gm.pieces:
        genus_up, boundary_up = riemann_hurwitz_genus(piece.genus, piece.boundary, q, "q")
        pieces.append(BundlePiece(piece.id, genus_up, boundary_up))
        records[piece.id] = PieceCoverRecord(
            over=piece.id,
            vertical_degree=q,
            horizontal_degree=q,
            genus_up=genus_up,
            boundary_up=boundary_up,
        )

    certificate = CoveringCertificate(
        total_degree=q * q,
        characteristic_level=q,
        per_piece=records,
        separable=True,
        separable_case="product-epimorphism",
    )
    manifold = GraphManifold(tuple(pieces), gm.edges)
    return CoveredGraph(
        manifold=manifold,
        certificate=certificate,
        torus_map=tuple(range(len(gm.edges))),
    )


def genus_raising_cover(gm: GraphManifold, center: str, q: int) -> CoveredGraph:
    """The degree-q cover that is trivial over the center and all tori."""
    if not is_prime(q):
        raise NotPrime(f"covering order {q} is not prime")
    try:
        gm.piece(center)
    except KeyError:
        raise GmanvolError(f"unknown center piece {center!r}") from None
    adjacent = set(gm.adjacent_pieces(center))
    replicated = {p.id for p in gm.pieces if p.id not in adjacent}

    def copy_id(piece_id: str, label: int) -> str:
        return f"{piece_id}~{label}"

    pieces = []
    records = {}
    for piece in gm.pieces:
        if piece.id in adjacent:
            genus_up, boundary_up = riemann_hurwitz_genus(
                piece.genus, piece.boundary, q, "1"
            )
            pieces.append(BundlePiece(piece.id, genus_up, boundary_up))
            records[piece.id] = PieceCoverRecord(
                over=piece.id,
                vertical_degree=1,
                horizontal_degree=q,
                genus_up=genus_up,
                boundary_up=boundary_up,
            )
        else:
            for label in range(q):
                new_id = copy_id(piece.id, label)
                pieces.append(BundlePiece(new_id, piece.genus, piece.boundary))
                records[new_id] = PieceCoverRecord(
                    over=piece.id,
                    vertical_degree=1,
                    horizontal_degree=1,
                    genus_up=piece.genus,
                    boundary_up=piece.boundary,
                )
    if len(records) != len(pieces) or len({p.id for p in pieces}) != len(pieces):
        raise GmanvolError("piece id collision while labeling covering copies")

    def lift_end(end: tuple[str, int], label: int) -> tuple[str, int]:
        piece_id, slot = end
        if piece_id in replicated:
            return (copy_id(piece_id, label), slot)
        # Boundary lifts of a connectedly covered piece: lift k of downstairs
        # slot i sits at slot i*q + k.
        return (piece_id, slot * q + label)

    lifted: list[tuple[Edge, int]] = []
    for base_index, edge in enumerate(gm.edges):
        for label in range(q):
            lifted.append(
                (
                    Edge(
                        tail=lift_end(edge.tail, label),
                        head=lift_end(edge.head, label),
                        matrix=edge.matrix,
                    ),
                    base_index,
                )
            )
    lifted.sort(key=lambda pair: _edge_sort_key(pair[0]))

    manifold = GraphManifold(tuple(pieces), tuple(edge for edge, _ in lifted))
    if "graph is not connected" in validate(manifold):
        raise DisconnectedCover(
            "genus-raising cover came out disconnected; this is a bug"
        )
    certificate = CoveringCertificate(
        total_degree=q,
        characteristic_level=1,
        per_piece=records,
        separable=True,
        separable_case="fiber-degree-one",
    )
    return CoveredGraph(
        manifold=manifold,
        certificate=certificate,
        torus_map=tuple(base_index for _, base_index in lifted),
    )


def verify_covering_certificate(cov: CoveredGraph, base: GraphManifold) -> list[str]:
    """Re-check every certificate invariant against the base graph.

    Returns violations as data; an empty report means the cover, its
    certificate and its torus map are mutually consistent and consistent
    with the base.
    """
    report: list[str] = []
    up = cov.manifold
    cert = cov.certificate
    base_by_id = {p.id: p for p in base.pieces}
    up_by_id = {p.id: p for p in up.pieces}

    report.extend(f"cover graph: {v}" for v in validate(up))
    if cert.total_degree < 1:
        report.append(f"total degree {cert.total_degree} is not positive")
    if cert.characteristic_level < 1:
        report.append(f"characteristic level {cert.characteristic_level} is not positive")

    for piece_id in sorted(up_by_id):
        if piece_id not in cert.per_piece:
            report.append(f"piece {piece_id!r} has no covering record")
    degree_over: dict[str, int] = {pid: 0 for pid in base_by_id}
    for piece_id in sorted(cert.per_piece):
        record = cert.per_piece[piece_id]
        if piece_id not in up_by_id:
            report.append(f"covering record for missing piece {piece_id!r}")
            continue
        if record.over not in base_by_id:
            report.append(
                f"piece {piece_id!r} claims to cover unknown piece {record.over!r}"
            )
            continue
        piece = up_by_id[piece_id]
        down = base_by_id[record.over]
        if (piece.genus, piece.boundary) != (record.genus_up, record.boundary_up):
            report.append(
                f"covering record for piece {piece_id!r} disagrees with the cover graph"
            )
        chi_up = 2 - 2 * record.genus_up - record.boundary_up
        chi_down = 2 - 2 * down.genus - down.boundary
        if chi_up != record.horizontal_degree * chi_down:
            report.append(f"chi multiplicativity fails for piece {piece_id!r}")
        if record.vertical_degree < 1 or record.horizontal_degree < 1:
            report.append(f"non-positive covering degrees for piece {piece_id!r}")
        degree_over[record.over] += record.degree
    for pid in sorted(degree_over):
        if degree_over[pid] != cert.total_degree:
            report.append(
                f"degree bookkeeping fails over piece {pid!r}: piece covers "
                f"sum to {degree_over[pid]}, total degree is {cert.total_degree}"
            )

    if len(cov.torus_map) != len(up.edges):
        report.append(
            f"torus map covers {len(cov.torus_map)} edges, cover has {len(up.edges)}"
        )
        return report
    preimages: dict[int, int] = {j: 0 for j in range(len(base.edges))}
    for index, edge in enumerate(up.edges):
        base_index = cov.torus_map[index]
        if not 0 <= base_index < len(base.edges):
            report.append(f"torus map entry {base_index} out of range on edge {index}")
            continue
        base_edge = base.edges[base_index]
        preimages[base_index] += 1
        if edge.matrix != base_edge.matrix:
            report.append(f"matrix lift differs from downstairs on edge {index}")
        for end, base_end, side in (
            (edge.tail, base_edge.tail, "tail"),
            (edge.head, base_edge.head, "head"),
        ):
            record = cert.per_piece.get(end[0])
            if record is not None and record.over != base_end[0]:
                report.append(
                    f"torus map endpoint mismatch on edge {index} ({side} side)"
                )
    level_sq = cert.characteristic_level**2
    for base_index in sorted(preimages):
        if preimages[base_index] * level_sq != cert.total_degree:
            report.append(
                f"torus degree bookkeeping fails over edge {base_index}: "
                f"{preimages[base_index]} preimages at torus degree {level_sq}, "
                f"total degree is {cert.total_degree}"
            )
    return report


def min_prime_for_ehn_cover(
    gm: GraphManifold, piece_id: str, slopes: Sequence[Slope]
) -> int:
    """Smallest characteristic-cover prime after which the filled piece foliates.

    Returns the sentinel 1 when the horizontal foliation test already
    passes downstairs (no cover needed).  Otherwise searches primes
    q > boundary count of the piece; the covered filled piece keeps the
    same filling slopes while its genus grows, and the foliation test is
    monotone in the genus, so the search terminates.
    """
    piece = gm.piece(piece_id)
    downstairs = filled_piece_invariants(gm, piece_id, slopes)
    if ehn_horizontal_foliation(downstairs):
        return 1
    if piece.boundary < 2:
        raise BoundaryCountTooSmall(
            f"piece {piece_id!r} has a single boundary torus; apply a "
            "genus-raising cover first to multiply boundary tori"
        )
    q = next_prime_above(piece.boundary)
    while True:
        genus_up, _ = riemann_hurwitz_genus(piece.genus, piece.boundary, q, "q")
        if ehn_horizontal_foliation(fill_framed_piece(genus_up, slopes)):
            return q
        q = next_prime_above(q)


def certificate_to_document(cert: CoveringCertificate) -> dict:
    return {
        "total_degree": cert.total_degree,
        "characteristic_level": cert.characteristic_level,
        "separable": cert.separable,
        "separable_case": cert.separable_case,
        "per_piece": {
            piece_id: {
                "over": record.over,
                "vertical_degree": record.vertical_degree,
                "horizontal_degree": record.horizontal_degree,
                "genus_up": record.genus_up,
                "boundary_up": record.boundary_up,
            }
            for piece_id, record in cert.per_piece.items()
        },
    }


def covered_graph_to_document(cov: CoveredGraph) -> dict:
    doc = graph_to_document(cov.manifold)
    doc["certificate"] = certificate_to_document(cov.certificate)
    doc["torus_map"] = list(cov.torus_map)
    return doc


def covered_graph_from_document(doc: dict) -> CoveredGraph:
    """Rebuild a CoveredGraph from its document, for certificate re-checking."""
    if not isinstance(doc, dict) or "certificate" not in doc or "torus_map" not in doc:
        raise ParseError('covered graph document needs "certificate" and "torus_map"')
    manifold = graph_from_document(
        {"pieces": doc.get("pieces"), "edges": doc.get("edges")}
    )
    raw = doc["certificate"]
    try:
        per_piece = {
            piece_id: PieceCoverRecord(
                over=record["over"],
                vertical_degree=record["vertical_degree"],
                horizontal_degree=record["horizontal_degree"],
                genus_up=record["genus_up"],
                boundary_up=record["boundary_up"],
            )
            for piece_id, record in raw["per_piece"].items()
        }
        certificate = CoveringCertificate(
            total_degree=raw["total_degree"],
            characteristic_level=raw["characteristic_level"],
            per_piece=per_piece,
            separable=raw["separable"],
            separable_case=raw["separable_case"],
        )
        torus_map = tuple(int(i) for i in doc["torus_map"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed covering certificate: {exc}") from exc
    return CoveredGraph(manifold=manifold, certificate=certificate, torus_map=torus_map)
