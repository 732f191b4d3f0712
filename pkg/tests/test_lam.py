from fractions import Fraction as F

import pytest

from circal.errors import BadCardinality, BoundaryVertex, NonInteger, NotMinimal
from circal.lam import (LamModel, boundary_measurement,
                        boundary_measurement_vector, enumerate_dimers,
                        face_weight, face_weights, gauge_transform,
                        is_minimal_model, k_gamma, lam_strands, scott_labels)
from circal.shapes import h_tree, parallel_edges, star, triangle
from circal.temperley import UNIFORM, build_temperley


def rank_two_model(a=F(2), b=F(3)):
    """Six boundary nodes, four black gadgets, k = 2.

    The unique dimer avoiding boundary nodes 1 and 5 picks the weighted
    pendants at nodes 2 and 3, so the {1,5} measurement is exactly a*b.
    """
    return LamModel.build(
        vertices=[("p%d" % i, "white", True) for i in range(1, 7)] +
                 [("B2", "black", False), ("B3", "black", False),
                  ("B45", "black", False), ("B61", "black", False)],
        edges=[("a", "p2", "B2", a), ("b", "p3", "B3", b),
               ("c4", "B45", "p4", 1), ("c5", "B45", "p5", 1),
               ("c6", "B61", "p6", 1), ("c1", "B61", "p1", 1)],
        rotation={"p1": ["c1"], "p2": ["a"], "p3": ["b"], "p4": ["c4"],
                  "p5": ["c5"], "p6": ["c6"], "B2": ["a"], "B3": ["b"],
                  "B45": ["c4", "c5"], "B61": ["c6", "c1"]},
        boundary_order=["p%d" % i for i in range(1, 7)])


def chain_model(extra_lollipop=False):
    """p1 -- black -- p2, optionally with a lollipop at p3."""
    vertices = [("p1", "white", True), ("p2", "white", True), ("B", "black", False)]
    edges = [("c1", "p1", "B", 1), ("c2", "B", "p2", 1)]
    rotation = {"p1": ["c1"], "p2": ["c2"], "B": ["c1", "c2"]}
    order = ["p1", "p2"]
    if extra_lollipop:
        vertices.append(("p3", "white", True))
        vertices.append(("B3", "black", False))
        edges.append(("lp", "p3", "B3", 1))
        rotation["p3"] = ["lp"]
        rotation["B3"] = ["lp"]
        order.append("p3")
    return LamModel.build(vertices, edges, rotation, order)


class TestKGamma:
    def test_rank_two_model(self):
        assert k_gamma(rank_two_model()) == 2

    def test_star_temperley_model(self):
        model = build_temperley(star(1, 1, 1), UNIFORM).model
        assert k_gamma(model) == 2

    def test_degree_two_white_inner(self):
        # one inner white node of degree 2 between two boundary nodes
        model = LamModel.build(
            vertices=[("p1", "white", True), ("p2", "white", True),
                      ("W", "white", False)],
            edges=[("e1", "p1", "W", 1), ("e2", "W", "p2", 1)],
            rotation={"p1": ["e1"], "p2": ["e2"], "W": ["e1", "e2"]},
            boundary_order=["p1", "p2"])
        assert k_gamma(model) == 1

    def test_non_integer_rejected(self):
        model = LamModel.build(
            vertices=[("p1", "white", True), ("B", "black", False)],
            edges=[("e1", "p1", "B", 1)],
            rotation={"p1": ["e1"], "B": ["e1"]},
            boundary_order=["p1"])
        with pytest.raises(NonInteger):
            k_gamma(model)


class TestDimers:
    def test_unique_dimer_weight(self):
        model = rank_two_model(F(2), F(3))
        dimers = enumerate_dimers(model, {1, 5})
        assert len(dimers) == 1
        assert dimers[0].weight(model) == 6
        assert dimers[0].covered_boundary == frozenset({2, 3, 4, 6})

    def test_measurement_contains_dimer(self):
        model = rank_two_model(F(2), F(3))
        assert boundary_measurement(model, {1, 5}) == 6

    def test_empty_condition_gives_zero(self):
        # boundary node 2 cannot stay uncovered: its pendant must be matched
        model = rank_two_model()
        assert boundary_measurement(model, {1, 2}) == 0

    def test_wrong_cardinality(self):
        with pytest.raises(BadCardinality):
            enumerate_dimers(rank_two_model(), {1})
        with pytest.raises(BadCardinality):
            enumerate_dimers(rank_two_model(), {1, 99})

    def test_every_dimer_uncovers_k_nodes(self):
        model = build_temperley(star(F(3), F(1), F(2)), UNIFORM).model
        k = k_gamma(model)
        for key, _ in boundary_measurement_vector(model):
            for d in enumerate_dimers(model, key):
                covered = d.covered_boundary
                assert len(model.boundary_order) - len(covered) == k
                assert covered == frozenset(range(1, 7)) - key


class TestStrands:
    def test_chain_has_strand_one_to_two(self):
        trips = lam_strands(chain_model())
        assert [(t.source, t.target) for t in trips] == [(1, 2), (2, 1)]

    def test_star_model_has_2n_strands(self):
        model = build_temperley(star(1, 1, 1), UNIFORM).model
        trips = lam_strands(model)
        assert len(trips) == 6
        assert sorted(t.source for t in trips) == list(range(1, 7))
        assert not any(t.is_loop for t in trips)

    def test_lollipop_bounce_allowed(self):
        model = chain_model(extra_lollipop=True)
        trips = lam_strands(model)
        assert (3, 3) in {(t.source, t.target) for t in trips}
        assert is_minimal_model(model)


class TestMinimality:
    def test_temperley_of_minimal_network_is_minimal(self):
        for net in (star(1, 1, 1), triangle(), h_tree()):
            assert is_minimal_model(build_temperley(net, UNIFORM).model)

    def test_temperley_of_lens_is_not_minimal(self):
        rep = is_minimal_model(build_temperley(parallel_edges(), UNIFORM).model)
        assert not rep
        assert "lens" in rep.reason

    def test_chain_model_minimal(self):
        assert is_minimal_model(chain_model())


class TestScottLabels:
    def test_star_labels_contain_worked_example_faces(self):
        model = build_temperley(star(1, 1, 1), UNIFORM).model
        labels = set(scott_labels(model).label_sets())
        for expected in ({2, 6}, {1, 6}, {5, 6}, {4, 6}, {4, 5}):
            assert frozenset(expected) in labels

    def test_all_labels_have_cardinality_k(self):
        for net in (star(1, 1, 1), triangle(), h_tree()):
            model = build_temperley(net, UNIFORM).model
            k = k_gamma(model)
            assert all(len(lbl) == k for lbl in scott_labels(model).label_sets())

    def test_boundary_faces_form_necklace(self):
        # consecutive boundary faces differ by swapping a single index
        for net in (star(1, 1, 1), triangle()):
            model = build_temperley(net, UNIFORM).model
            labeling = scott_labels(model).as_dict()
            faces, _ = model.embedding.trace_faces()
            ring = sorted((f.id for f in faces if f.is_boundary_face),
                          key=lambda fid: int(fid[2:]))
            for i, fid in enumerate(ring):
                nxt = ring[(i + 1) % len(ring)]
                assert len(labeling[fid] ^ labeling[nxt]) == 2

    def test_not_minimal_rejected(self):
        with pytest.raises(NotMinimal):
            scott_labels(build_temperley(parallel_edges(), UNIFORM).model)


class TestFaceWeights:
    def test_all_unit_faces_are_one(self):
        model = build_temperley(triangle(), UNIFORM).model
        assert set(face_weights(model).values()) == {F(1)}

    def test_interior_corner_faces_are_adjacent_ratios(self):
        model = build_temperley(triangle(F(2), F(3), F(5)), UNIFORM).model
        faces, _ = model.embedding.trace_faces()
        interior = sorted(face_weight(model, f.id)
                          for f in faces if not f.is_boundary_face)
        assert interior == sorted([F(5, 2), F(3, 5), F(2, 3)])

    def test_boundary_faces_are_single_conductivities(self):
        model = build_temperley(triangle(F(2), F(3), F(5)), UNIFORM).model
        faces, _ = model.embedding.trace_faces()
        boundary = sorted(face_weight(model, f.id)
                          for f in faces if f.is_boundary_face)
        assert boundary == sorted([F(2), F(1, 2), F(3), F(1, 3), F(5), F(1, 5)])


class TestGauge:
    def test_identity_gauge(self):
        model = rank_two_model()
        assert gauge_transform(model, "B45", 1) == model

    def test_gauge_then_inverse(self):
        model = rank_two_model()
        t = F(5, 3)
        assert gauge_transform(gauge_transform(model, "B45", t), "B45", 1 / t) == model

    def test_boundary_vertex_rejected(self):
        with pytest.raises(BoundaryVertex):
            gauge_transform(rank_two_model(), "p1", 2)

    def test_measurements_scale_uniformly(self):
        model = build_temperley(star(F(3), F(1), F(2)), UNIFORM).model
        base = dict(boundary_measurement_vector(model))
        t = F(7, 4)
        scaled = dict(boundary_measurement_vector(
            gauge_transform(model, "bv:c", t)))
        assert scaled == {k: v * t for k, v in base.items()}

    def test_face_weights_invariant(self):
        model = build_temperley(h_tree(), UNIFORM).model
        base = face_weights(model)
        assert face_weights(gauge_transform(model, "bv:x", F(9, 2))) == base
