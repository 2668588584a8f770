"""Seifert-volume lower-bound certificates for covers of graph manifolds.

The certified quantity is the volume of a representation of the fundamental
group of an explicit finite cover into the universal cover of SL(2, R),
computed through two exact identities:

* a filled circle-bundle piece that carries a horizontal foliation admits a
  flat connection whose Chern-Simons invariant is 2 pi^2 times the Euler
  number of the filled piece (cs_of_filled_piece);
* the Godbillon-Vey invariant of the associated representation is twice the
  Chern-Simons invariant (gv_of_certified_connection).

All values are exact rational multiples of pi^2 and the emitted bound is a
statement about the cover named in the certificate, never about the input
manifold itself (volume can only be pushed down a covering, not up).

The construction splits on the absolute Euler number |e| of the graph:

Case |e| != 0 (case1_bound).  Some piece keeps a nonzero Euler number after
filling along its canonical framing.  A characteristic cover raises that
piece's base genus until the foliation test passes; the flat connection on
the filled piece contributes |cs| = 2 pi^2 |e|, every neighbor carries a
connection that kills the fiber and contributes zero, and the certificate
bound is the Godbillon-Vey value 4 pi^2 |e|.  What remains existential is
the boundary translation data of the neighbors: realizing it as a product
of commutators needs |sum of translation classes| < 2 genus - 1, and the
certificate records the genus threshold under a configured bound on that
sum, discharged by the existence of genus-raising covers of every order.

Case |e| = 0 (case2_bound).  The graph must already have all gluing
matrices equal to plus or minus the swap J (inputs outside that form are
rejected: the normalizing cover that arranges it is not constructed by
this tool).  Two adjacent pieces joined by r parallel tori are filled with
the slope section-minus-fiber on the shared tori, which the swap carries
to itself, so the two boundary connection normal forms match.  Each side's
filled Euler number has magnitude r, the combined connection has
|cs| = 4 pi^2 r, and the certificate bound is 8 pi^2 r.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .coverings import (
    CoveredGraph,
    certificate_to_document,
    characteristic_cover,
    is_prime,
    min_prime_for_ehn_cover,
    next_prime_above,
)
from .errors import (
    EhnFails,
    NotAdjacent,
    NotPMJ,
    PMJFormRequired,
    ValidationError,
    WrongCase,
)
from .graph import (
    GraphManifold,
    Slope,
    absolute_euler_number,
    canonical_framing,
    filled_piece_invariants,
    is_pm_j_form,
    validate,
)
from .seifert import SeifertInvariants, ehn_horizontal_foliation, euler_number
from .serialize import format_rational

CASE_NONZERO = "e_nonzero"
CASE_ZERO_PMJ = "e_zero_pmj"

SHARED_FILLING_SLOPE = Slope(1, -1)


@dataclass(frozen=True)
class PiSquaredValue:
    """An exact rational multiple of pi^2."""

    coefficient: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))

    def approx(self, digits: int = 12) -> float:
        """Decimal rendering for display only; never used in computation."""
        import math

        return round(float(self.coefficient) * math.pi**2, digits)


@dataclass(frozen=True)
class VolumeConfig:
    """Knobs for certificate emission.

    alpha_bound is the assumed bound on the sum of boundary translation
    classes of each fiber-killed neighbor; it parameterizes the existential
    genus side condition and nothing else.
    """

    alpha_bound: int = 10**6


@dataclass(frozen=True)
class VolumeCertificate:
    """A checkable lower bound on the Seifert volume of an explicit cover.

    The asserted statement is SV(cover) >= bound, where the cover is the
    result of applying the covering tower (left to right) to the input and
    has degree total_cover_degree over it.
    """

    case_tag: str
    tower: tuple[CoveredGraph, ...]
    total_cover_degree: int
    chosen_piece: str | None
    chosen_pair: tuple[str, str] | None
    parallel_tori: int | None
    filling_slopes: dict[str, Slope]
    bound: PiSquaredValue
    side_conditions: tuple[dict, ...]
    covered_manifold: GraphManifold = field(repr=False)

    def to_document(self) -> dict:
        if self.case_tag == CASE_NONZERO:
            chosen = {"piece": self.chosen_piece}
        else:
            chosen = {"pieces": list(self.chosen_pair), "r": self.parallel_tori}
        return {
            "case": self.case_tag,
            "cover_degree": self.total_cover_degree,
            "tower": [certificate_to_document(stage.certificate) for stage in self.tower],
            "chosen": chosen,
            "filling_slopes": {
                key: [slope.a, slope.b]
                for key, slope in sorted(self.filling_slopes.items())
            },
            "bound_pi2": format_rational(self.bound.coefficient),
            "side_conditions": list(self.side_conditions),
        }


def cs_of_filled_piece(inv: SeifertInvariants) -> PiSquaredValue:
    """Chern-Simons invariant of the flat connection on a foliated filled piece.

    Defined only when the horizontal foliation test passes; the value is
    2 pi^2 times the Euler number of the filled piece.
    """
    if not ehn_horizontal_foliation(inv):
        raise EhnFails(
            "the filled piece admits no horizontal foliation, so the flat "
            "connection with known Chern-Simons invariant does not exist"
        )
    return PiSquaredValue(2 * euler_number(inv))


def gv_of_certified_connection(cs: PiSquaredValue) -> PiSquaredValue:
    """Godbillon-Vey value of the representation: twice the Chern-Simons value."""
    return PiSquaredValue(2 * cs.coefficient)


def _tower_for(gm: GraphManifold, q_needed: int) -> tuple[tuple[CoveredGraph, ...], GraphManifold, int]:
    """Build the characteristic tower reaching the required prime, if any.

    The constructor needs a prime above every boundary count in the whole
    graph; if the piece-level search returned a smaller prime, the next
    admissible one is used instead (the foliation test only gets easier as
    the covered genus grows).
    """
    if q_needed == 1:
        return (), gm, 1
    max_boundary = max(piece.boundary for piece in gm.pieces)
    q = q_needed if q_needed > max_boundary else next_prime_above(max_boundary)
    assert is_prime(q)
    stage = characteristic_cover(gm, q)
    return (stage,), stage.manifold, stage.certificate.total_degree


def _commutator_side_conditions(
    gm: GraphManifold, chosen: tuple[str, ...], config: VolumeConfig
) -> list[dict]:
    """Existential genus conditions for the fiber-killed neighbors.

    For a neighbor sharing r tori with the chosen piece(s), the boundary
    holonomy shifts sum to an unknown value alpha; writing their product as
    genus many commutators needs |alpha| < 2 genus - 1 (strict).  Under the
    configured bound B on |alpha| the condition becomes
    genus > (B + 1) / 2, and genus-raising covers reach any genus.
    """
    conditions = []
    shared: dict[str, int] = {}
    for edge in gm.edges:
        tail, head = edge.tail[0], edge.head[0]
        if (tail in chosen) != (head in chosen):
            neighbor = head if tail in chosen else tail
            shared[neighbor] = shared.get(neighbor, 0) + 1
    bound = config.alpha_bound
    threshold = Fraction(bound + 1, 2)
    for neighbor in sorted(shared):
        conditions.append(
            {
                "type": "neighbor-commutator-genus",
                "piece": neighbor,
                "shared_tori": shared[neighbor],
                "translation_sum_bound": format_rational(bound),
                "genus_threshold": format_rational(threshold),
                "discharged_by": "genus-raising covers reach any base genus",
            }
        )
    conditions.append(
        {
            "type": "commutator-realizability",
            "inequality": "|alpha_1 + ... + alpha_r| < 2*genus - 1",
            "strict": True,
        }
    )
    conditions.append(
        {
            "type": "fiber-killed-zero-contribution",
            "rule": (
                "a neighbor whose holonomy kills the fiber factors through its "
                "base surface group, so its Godbillon-Vey contribution is zero"
            ),
        }
    )
    return conditions


def case1_bound(gm: GraphManifold, config: VolumeConfig | None = None) -> VolumeCertificate:
    """Certificate for the nonzero-absolute-Euler-number case.

    Selects the piece with the largest |Euler number after filling along
    its canonical framing| (ties broken by smallest id), covers the graph
    until that filled piece passes the foliation test, and certifies the
    bound 4 pi^2 |e| for the cover.
    """
    config = config or VolumeConfig()
    filled_euler = {
        piece.id: euler_number(
            filled_piece_invariants(gm, piece.id, canonical_framing(gm, piece.id))
        )
        for piece in gm.pieces
    }
    if all(value == 0 for value in filled_euler.values()):
        raise WrongCase("absolute Euler number is zero; use the swap-form case")
    chosen = min(filled_euler, key=lambda pid: (-abs(filled_euler[pid]), pid))
    slopes = canonical_framing(gm, chosen)

    q_needed = min_prime_for_ehn_cover(gm, chosen, slopes)
    tower, covered, degree = _tower_for(gm, q_needed)
    if not ehn_horizontal_foliation(filled_piece_invariants(covered, chosen, slopes)):
        raise AssertionError("foliation test must hold at the emitted tower stage")

    bound = gv_of_certified_connection(
        PiSquaredValue(2 * abs(filled_euler[chosen]))
    )
    side_conditions = _commutator_side_conditions(gm, (chosen,), config)
    return VolumeCertificate(
        case_tag=CASE_NONZERO,
        tower=tower,
        total_cover_degree=degree,
        chosen_piece=chosen,
        chosen_pair=None,
        parallel_tori=None,
        filling_slopes={
            f"{chosen}:{slot}": slope for slot, slope in enumerate(slopes)
        },
        bound=bound,
        side_conditions=tuple(side_conditions),
        covered_manifold=covered,
    )


def _case2_filling_slopes(
    gm: GraphManifold, piece1: str, piece2: str
) -> tuple[list[Slope], list[Slope], int]:
    """Per-slot filling slopes for both pieces of an adjacent pair.

    Shared tori are filled with the slope section-minus-fiber of each side;
    every other slot takes the canonical framing slope.  Returns the two
    slope lists and the number of shared tori.
    """
    chosen = {piece1, piece2}
    shared_slots: dict[str, set[int]] = {piece1: set(), piece2: set()}
    r = 0
    for edge in gm.edges:
        ends = {edge.tail[0], edge.head[0]}
        if ends == chosen:
            r += 1
            for pid, slot in (edge.tail, edge.head):
                shared_slots[pid].add(slot)
    if r == 0:
        raise NotAdjacent(f"pieces {piece1!r} and {piece2!r} share no gluing torus")

    slopes = {}
    for pid in (piece1, piece2):
        framing = canonical_framing(gm, pid)
        slopes[pid] = [
            SHARED_FILLING_SLOPE if slot in shared_slots[pid] else framing[slot]
            for slot in range(gm.piece(pid).boundary)
        ]
    return slopes[piece1], slopes[piece2], r


def case2_euler_pair(
    gm: GraphManifold, piece1: str, piece2: str
) -> tuple[Fraction, Fraction, int]:
    """Filled Euler numbers of an adjacent pair in a swap-form graph.

    Each piece is filled with section-minus-fiber on the tori shared with
    the partner (in its own coordinates) and with the canonical framing on
    its remaining tori.  In swap form each framing slope is the section,
    so each side comes out to minus the number of shared tori.
    """
    if not is_pm_j_form(gm):
        raise NotPMJ("the gluing matrices are not all plus/minus swaps")
    slopes1, slopes2, r = _case2_filling_slopes(gm, piece1, piece2)
    e1 = euler_number(filled_piece_invariants(gm, piece1, slopes1))
    e2 = euler_number(filled_piece_invariants(gm, piece2, slopes2))
    return e1, e2, r


def case2_bound(gm: GraphManifold, config: VolumeConfig | None = None) -> VolumeCertificate:
    """Certificate for the zero-absolute-Euler-number, swap-form case.

    Selects the adjacent pair joined by the most parallel tori (ties broken
    lexicographically), fills both sides as in case2_euler_pair, covers the
    graph until both filled pieces pass the foliation test, and certifies
    the bound 8 pi^2 r for the cover.
    """
    config = config or VolumeConfig()
    if absolute_euler_number(gm) != 0:
        raise WrongCase("absolute Euler number is nonzero; use the nonzero case")
    if not is_pm_j_form(gm):
        raise PMJFormRequired(
            "absolute Euler number is zero but the gluing matrices are not all "
            "plus/minus swaps; the finite cover that normalizes a "
            "zero-absolute-Euler graph manifold into swap form is not "
            "constructed by this tool"
        )

    pair_count: dict[tuple[str, str], int] = {}
    for edge in gm.edges:
        pair = tuple(sorted((edge.tail[0], edge.head[0])))
        pair_count[pair] = pair_count.get(pair, 0) + 1
    piece1, piece2 = min(pair_count, key=lambda pair: (-pair_count[pair], pair))

    e1, e2, r = case2_euler_pair(gm, piece1, piece2)
    slopes1, slopes2, _ = _case2_filling_slopes(gm, piece1, piece2)
    cs_magnitude = PiSquaredValue(2 * abs(e1) + 2 * abs(e2))
    if cs_magnitude.coefficient != 4 * r:
        raise AssertionError("combined Chern-Simons magnitude must equal 4r")

    q_needed = max(
        min_prime_for_ehn_cover(gm, piece1, slopes1),
        min_prime_for_ehn_cover(gm, piece2, slopes2),
    )
    tower, covered, degree = _tower_for(gm, q_needed)
    for pid, slopes in ((piece1, slopes1), (piece2, slopes2)):
        if not ehn_horizontal_foliation(filled_piece_invariants(covered, pid, slopes)):
            raise AssertionError("foliation test must hold at the emitted tower stage")

    side_conditions = [
        {
            "type": "boundary-normal-form-match",
            "pieces": [piece1, piece2],
            "rule": (
                "every plus/minus swap carries the section-minus-fiber slope of "
                "one side to that of the other, so the boundary connection "
                "normal forms on the shared tori agree with equal dx and dy "
                "coefficients"
            ),
        },
        {
            "type": "orientation-convention",
            "filled_euler": [format_rational(e1), format_rational(e2)],
            "rule": (
                "in the fixed transport convention both filled Euler numbers "
                "equal -r; the certified Chern-Simons magnitude "
                "2*pi^2*(|e1| + |e2|) does not depend on orientation bookkeeping"
            ),
        },
    ]
    side_conditions.extend(_commutator_side_conditions(gm, (piece1, piece2), config))

    filling = {f"{piece1}:{slot}": s for slot, s in enumerate(slopes1)}
    filling.update({f"{piece2}:{slot}": s for slot, s in enumerate(slopes2)})
    return VolumeCertificate(
        case_tag=CASE_ZERO_PMJ,
        tower=tower,
        total_cover_degree=degree,
        chosen_piece=None,
        chosen_pair=(piece1, piece2),
        parallel_tori=r,
        filling_slopes=filling,
        bound=gv_of_certified_connection(cs_magnitude),
        side_conditions=tuple(side_conditions),
        covered_manifold=covered,
    )


def volume_lower_bound(
    gm: GraphManifold, config: VolumeConfig | None = None
) -> VolumeCertificate:
    """Emit a positive Seifert-volume lower bound for a finite cover of gm."""
    violations = validate(gm)
    if violations:
        raise ValidationError(violations)
    if absolute_euler_number(gm) != 0:
        return case1_bound(gm, config)
    return case2_bound(gm, config)
