from fractions import Fraction as F

import pytest

from circal.errors import InvalidEmbedding
from circal.network import (PlanarNetwork, dual_with_intersections, faces,
                            is_minimal, median_strands, validate_network)
from circal.shapes import (h_tree, parallel_edges, ring_lattice, single_edge,
                           star, triangle)


def k4_all_boundary():
    """K4 with every vertex on the circle: not embeddable in a disk."""
    vs = [(str(i), True) for i in range(1, 5)]
    es = [("e%d%d" % (i, j), str(i), str(j), 1)
          for i in range(1, 5) for j in range(i + 1, 5)]
    rot = {
        "1": ["e12", "e13", "e14"],
        "2": ["e23", "e24", "e12"],
        "3": ["e34", "e13", "e23"],
        "4": ["e14", "e24", "e34"],
    }
    return PlanarNetwork.build(vs, es, rot, ["1", "2", "3", "4"])


class TestValidation:
    def test_star_is_valid(self):
        assert validate_network(star(1, 1, 1)).ok

    def test_zero_weight_reported(self):
        net = PlanarNetwork.build([("1", True), ("2", True)],
                                  [("e", "1", "2", 0)],
                                  {"1": ["e"], "2": ["e"]}, ["1", "2"])
        report = validate_network(net)
        assert not report.ok
        assert any(v.code == "non-positive weight" for v in report.violations)

    def test_nonplanar_rotation_reported(self):
        report = validate_network(k4_all_boundary())
        assert any(v.code == "non-planar rotation" for v in report.violations)

    def test_bad_rotation_reported(self):
        net = PlanarNetwork.build([("1", True), ("2", True)],
                                  [("e", "1", "2", 1)],
                                  {"1": ["e", "e"], "2": ["e"]}, ["1", "2"])
        report = validate_network(net)
        assert any(v.code == "bad-rotation" for v in report.violations)

    def test_self_loop_reported(self):
        net = PlanarNetwork.build([("1", True)], [("e", "1", "1", 1)],
                                  {"1": ["e", "e"]}, ["1"])
        report = validate_network(net)
        assert any(v.code == "self-loop" for v in report.violations)

    def test_stranded_component_reported(self):
        net = PlanarNetwork.build(
            [("1", True), ("2", True), ("a", False), ("b", False)],
            [("e", "1", "2", 1), ("f", "a", "b", 1)],
            {"1": ["e"], "2": ["e"], "a": ["f"], "b": ["f"]}, ["1", "2"])
        report = validate_network(net)
        assert any(v.code == "stranded-component" for v in report.violations)


class TestFaces:
    def test_triangle_faces(self):
        fs = faces(triangle())
        assert sum(not f.is_boundary_face for f in fs) == 1
        assert sum(f.is_boundary_face for f in fs) == 3

    def test_star_faces(self):
        fs = faces(star(1, 1, 1))
        assert sum(not f.is_boundary_face for f in fs) == 0
        assert sum(f.is_boundary_face for f in fs) == 3

    def test_lattice_faces_match_euler(self):
        net = ring_lattice(1)
        interior = sum(not f.is_boundary_face for f in faces(net))
        assert interior == len(net.edges) - len(net.vertices) + 1
        assert sum(f.is_boundary_face for f in faces(net)) == net.n_boundary

    def test_every_dart_in_exactly_one_face(self):
        net = h_tree()
        fs = faces(net)
        darts = [d for f in fs for d in f.darts]
        assert len(darts) == len(set(darts))
        graph_darts = [d for d in darts if not d.edge.startswith("~")]
        assert len(graph_darts) == 2 * len(net.edges)

    def test_invalid_embedding_raises(self):
        with pytest.raises(InvalidEmbedding):
            faces(k4_all_boundary())


class TestOverlay:
    def test_single_edge_midpoint_sees_two_boundary_faces(self):
        overlay = dual_with_intersections(single_edge())
        right, left = overlay["e"].faces
        assert right.startswith("fb") and left.startswith("fb")
        assert right != left

    def test_triangle_edges_see_interior_and_boundary(self):
        overlay = dual_with_intersections(triangle())
        for entry in overlay.values():
            kinds = {fid.startswith("fb") for fid in entry.faces}
            assert kinds == {True, False}

    def test_star_edges_see_two_boundary_faces(self):
        overlay = dual_with_intersections(star(1, 1, 1))
        for entry in overlay.values():
            assert all(fid.startswith("fb") for fid in entry.faces)
            assert len(entry.corners) == 4


class TestStrands:
    def test_single_edge_crossing(self):
        strands = median_strands(single_edge())
        crossed = {e for s in strands for e in s.crossings}
        assert crossed == {"e"}
        assert all(s.crossings == ("e",) for s in strands)

    def test_star_strands_pairwise_cross_once(self):
        strands = median_strands(star(1, 1, 1))
        assert len(strands) == 3
        for i in range(3):
            for j in range(i + 1, 3):
                common = set(strands[i].crossings) & set(strands[j].crossings)
                assert len(common) == 1

    def test_parallel_edges_form_lens(self):
        strands = median_strands(parallel_edges())
        assert len(strands) == 2
        assert set(strands[0].crossings) == set(strands[1].crossings) == {"ea", "eb"}

    def test_total_crossings_equal_edge_count(self):
        for net in (star(1, 1, 1), triangle(), h_tree(), ring_lattice(1)):
            strands = median_strands(net)
            per_edge = {}
            for s in strands:
                for e in s.crossings:
                    per_edge[e] = per_edge.get(e, 0) + 1
            assert per_edge == {e.id: 2 for e in net.edges}


class TestMinimality:
    def test_corpus_minimal(self):
        for net in (single_edge(), star(1, 1, 1), triangle(), h_tree(), ring_lattice(1)):
            assert is_minimal(net)

    def test_parallel_edges_not_minimal(self):
        rep = is_minimal(parallel_edges())
        assert not rep
        assert "lens" in rep.reason
        assert rep.witness

    def test_pendant_inner_vertex_not_minimal(self):
        net = PlanarNetwork.build(
            [("1", True), ("2", True), ("p", False)],
            [("e", "1", "2", 1), ("f", "2", "p", 1)],
            {"1": ["e"], "2": ["e", "f"], "p": ["f"]}, ["1", "2"])
        rep = is_minimal(net)
        assert not rep
        assert "self-intersects" in rep.reason

    def test_invariant_under_inner_relabeling(self):
        base = h_tree()
        renamed = PlanarNetwork.build(
            [(v.id if v.boundary else "z" + v.id, v.boundary) for v in base.vertices],
            [(e.id,
              e.u if base.vertex_map[e.u].boundary else "z" + e.u,
              e.v if base.vertex_map[e.v].boundary else "z" + e.v,
              e.weight) for e in base.edges],
            {(v if base.vertex_map[v].boundary else "z" + v): list(r)
             for v, r in base.rotation},
            list(base.boundary_order))
        assert bool(is_minimal(renamed)) == bool(is_minimal(base))
