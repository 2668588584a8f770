import random
from dataclasses import replace

import pytest

from gmanvol import (
    BoundaryCountTooSmall,
    BundlePiece,
    CoveredGraph,
    Edge,
    GluingMatrix,
    GraphManifold,
    J,
    NonIntegralGenus,
    NotPrime,
    PrimeTooSmall,
    Slope,
    canonical_framing,
    characteristic_cover,
    euler_number,
    filled_piece_invariants,
    genus_raising_cover,
    min_prime_for_ehn_cover,
    parse_graph,
    riemann_hurwitz_genus,
    serialize_graph,
    validate,
    verify_covering_certificate,
)
from gmanvol.coverings import covered_graph_to_document, is_prime, next_prime_above
from builders import random_cycle_graph, two_piece_graph

M1110 = GluingMatrix.of(1, 1, 1, 0)


class TestPrimes:
    def test_is_prime(self):
        assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]

    def test_next_prime_above(self):
        assert next_prime_above(1) == 2
        assert next_prime_above(5) == 7
        assert next_prime_above(8) == 11


class TestRiemannHurwitz:
    def test_connected_boundary(self):
        assert riemann_hurwitz_genus(2, 2, 3, "q") == (6, 2)

    def test_trivial_boundary(self):
        assert riemann_hurwitz_genus(2, 1, 3, "1") == (4, 3)

    def test_degree_one(self):
        assert riemann_hurwitz_genus(2, 2, 1, "q") == (2, 2)

    def test_chi_multiplicativity(self):
        for g in range(2, 6):
            for p in range(1, 5):
                for q in (2, 3, 5, 7):
                    chi = 2 - 2 * g - p
                    for order in ("q", "1"):
                        if order == "q" and ((2 * g + p - 2) * (q - 1)) % 2:
                            continue
                        gu, pu = riemann_hurwitz_genus(g, p, q, order)
                        assert 2 - 2 * gu - pu == q * chi

    def test_odd_case_rejected(self):
        # q = 2 with odd 2g + p - 2 cannot halve.
        with pytest.raises(NonIntegralGenus):
            riemann_hurwitz_genus(2, 1, 2, "q")

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            riemann_hurwitz_genus(2, 1, 3, "x")
        with pytest.raises(ValueError):
            riemann_hurwitz_genus(2, 1, 0, "q")


class TestCharacteristicCover:
    def test_single_boundary_rejected(self):
        with pytest.raises(BoundaryCountTooSmall):
            characteristic_cover(two_piece_graph([J]), 3)

    def test_parallel_swaps_q3(self):
        gm = two_piece_graph([J, J])
        cov = characteristic_cover(gm, 3)
        assert [(p.genus, p.boundary) for p in cov.manifold.pieces] == [(6, 2), (6, 2)]
        assert len(cov.manifold.edges) == 2
        assert all(e.matrix == J for e in cov.manifold.edges)
        assert cov.certificate.total_degree == 9
        assert cov.certificate.characteristic_level == 3
        assert verify_covering_certificate(cov, gm) == []

    def test_parallel_swaps_q5(self):
        gm = two_piece_graph([J, J])
        cov = characteristic_cover(gm, 5)
        assert [p.genus for p in cov.manifold.pieces] == [10, 10]
        assert cov.certificate.total_degree == 25

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            characteristic_cover(two_piece_graph([J, J]), 4)

    def test_prime_too_small(self):
        with pytest.raises(PrimeTooSmall):
            characteristic_cover(two_piece_graph([J, J]), 2)

    def test_euler_number_of_framed_filling_preserved(self):
        rng = random.Random(101)
        for _ in range(20):
            gm = random_cycle_graph(rng)
            for q in (3, 5, 7):
                cov = characteristic_cover(gm, q)
                for piece in gm.pieces:
                    down = euler_number(
                        filled_piece_invariants(
                            gm, piece.id, canonical_framing(gm, piece.id)
                        )
                    )
                    up = euler_number(
                        filled_piece_invariants(
                            cov.manifold,
                            piece.id,
                            canonical_framing(cov.manifold, piece.id),
                        )
                    )
                    assert up == down


class TestGenusRaisingCover:
    def test_two_piece_center_q3(self):
        gm = two_piece_graph([J])
        cov = genus_raising_cover(gm, "A", 3)
        ids = [p.id for p in cov.manifold.pieces]
        assert ids == ["A~0", "A~1", "A~2", "B"]
        b = cov.manifold.piece("B")
        assert (b.genus, b.boundary) == (4, 3)
        assert len(cov.manifold.edges) == 3
        assert all(e.matrix == J for e in cov.manifold.edges)
        assert verify_covering_certificate(cov, gm) == []

    def test_two_piece_center_q2(self):
        gm = two_piece_graph([J])
        cov = genus_raising_cover(gm, "A", 2)
        assert [p.id for p in cov.manifold.pieces] == ["A~0", "A~1", "B"]
        assert cov.manifold.piece("B").genus == 3
        assert len(cov.manifold.edges) == 2

    def test_path_graph_center(self):
        gm = GraphManifold(
            (
                BundlePiece("A", 2, 1),
                BundlePiece("B", 2, 2),
                BundlePiece("C", 2, 1),
            ),
            (
                Edge(("A", 0), ("B", 0), J),
                Edge(("B", 1), ("C", 0), M1110),
            ),
        )
        cov = genus_raising_cover(gm, "B", 2)
        ids = [p.id for p in cov.manifold.pieces]
        # A and C are adjacent to the center, so they are covered
        # connectedly; B is replicated.
        assert ids == ["A", "B~0", "B~1", "C"]
        assert cov.manifold.piece("A").genus == 3
        assert cov.manifold.piece("C").genus == 3
        assert validate(cov.manifold) == []
        assert verify_covering_certificate(cov, gm) == []

    def test_matrices_preserved(self):
        gm = two_piece_graph([M1110, J])
        cov = genus_raising_cover(gm, "B", 3)
        downstairs = sorted(e.matrix for e in gm.edges for _ in range(3))
        upstairs = sorted(e.matrix for e in cov.manifold.edges)
        assert upstairs == downstairs

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            genus_raising_cover(two_piece_graph([J]), "A", 6)

    def test_corpus_validates_and_connects(self, corpus_paths):
        for path in corpus_paths:
            gm = parse_graph(path.read_bytes())
            for q in (2, 3, 5):
                cov = genus_raising_cover(gm, gm.pieces[0].id, q)
                assert validate(cov.manifold) == []
                assert verify_covering_certificate(cov, gm) == []


class TestVerifyCertificate:
    def _cover(self):
        gm = two_piece_graph([J, J])
        return gm, characteristic_cover(gm, 3)

    def test_clean_cover_verifies(self):
        gm, cov = self._cover()
        assert verify_covering_certificate(cov, gm) == []

    def test_tampered_genus(self):
        gm, cov = self._cover()
        record = cov.certificate.per_piece["A"]
        tampered_records = dict(cov.certificate.per_piece)
        tampered_records["A"] = replace(record, genus_up=record.genus_up + 1)
        tampered = CoveredGraph(
            manifold=cov.manifold,
            certificate=replace(cov.certificate, per_piece=tampered_records),
            torus_map=cov.torus_map,
        )
        report = verify_covering_certificate(tampered, gm)
        assert any("chi multiplicativity" in line for line in report)

    def test_tampered_matrix(self):
        gm, cov = self._cover()
        edges = list(cov.manifold.edges)
        edges[0] = replace(edges[0], matrix=M1110)
        tampered = CoveredGraph(
            manifold=GraphManifold(cov.manifold.pieces, tuple(edges)),
            certificate=cov.certificate,
            torus_map=cov.torus_map,
        )
        report = verify_covering_certificate(tampered, gm)
        assert any("matrix lift" in line for line in report)

    def test_tampered_total_degree(self):
        gm, cov = self._cover()
        tampered = CoveredGraph(
            manifold=cov.manifold,
            certificate=replace(cov.certificate, total_degree=10),
            torus_map=cov.torus_map,
        )
        report = verify_covering_certificate(tampered, gm)
        assert any("degree bookkeeping" in line for line in report)

    def test_document_shape(self):
        gm, cov = self._cover()
        doc = covered_graph_to_document(cov)
        assert set(doc) == {"pieces", "edges", "certificate", "torus_map"}
        assert doc["certificate"]["per_piece"]["A"]["over"] == "A"
        assert doc["torus_map"] == [0, 1]


class TestMinPrime:
    def test_already_foliates(self):
        gm = two_piece_graph([J, J])
        assert min_prime_for_ehn_cover(gm, "A", [Slope(1, 0)] * 2) == 1

    def test_needs_genus_six(self):
        gm = two_piece_graph([J, J])
        assert min_prime_for_ehn_cover(gm, "A", [Slope(1, 5)] * 2) == 3

    def test_boundary_case(self):
        gm = two_piece_graph([J, J])
        assert min_prime_for_ehn_cover(gm, "A", [Slope(1, -1)] * 2) == 1

    def test_single_boundary_needs_cover_rejected(self):
        gm = two_piece_graph([J])
        with pytest.raises(BoundaryCountTooSmall):
            min_prime_for_ehn_cover(gm, "A", [Slope(1, 5)])


class TestRandomizedBookkeeping:
    def test_integer_identities_and_verification(self):
        rng = random.Random(202)
        for _ in range(20):
            gm = random_cycle_graph(rng)
            down = {p.id: p for p in gm.pieces}
            for q in (3, 5, 7):
                for cov in (
                    characteristic_cover(gm, q),
                    genus_raising_cover(gm, rng.choice(gm.pieces).id, q),
                ):
                    cert = cov.certificate
                    assert verify_covering_certificate(cov, gm) == []
                    degree_sum = {pid: 0 for pid in down}
                    for record in cert.per_piece.values():
                        base = down[record.over]
                        chi_down = 2 - 2 * base.genus - base.boundary
                        chi_up = 2 - 2 * record.genus_up - record.boundary_up
                        assert chi_up == record.horizontal_degree * chi_down
                        degree_sum[record.over] += record.degree
                    assert all(
                        total == cert.total_degree for total in degree_sum.values()
                    )
                    preimages = {}
                    for base_index in cov.torus_map:
                        preimages[base_index] = preimages.get(base_index, 0) + 1
                    level_sq = cert.characteristic_level**2
                    assert all(
                        count * level_sq == cert.total_degree
                        for count in preimages.values()
                    )

    def test_roundtrip_of_covered_manifolds(self):
        rng = random.Random(203)
        for _ in range(5):
            gm = random_cycle_graph(rng)
            cov = characteristic_cover(gm, 7)
            data = serialize_graph(cov.manifold)
            assert serialize_graph(parse_graph(data)) == data
