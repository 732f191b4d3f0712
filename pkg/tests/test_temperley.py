from fractions import Fraction as F

import pytest

from circal.errors import NotConnected
from circal.forward import response_matrix
from circal.grassmann import omega_from_response, plucker_vector
from circal.lam import (BLACK, WHITE, boundary_measurement_vector,
                        is_minimal_model, k_gamma)
from circal.network import PlanarNetwork
from circal.shapes import (h_tree, parallel_edges, ring_lattice, single_edge,
                           star, triangle)
from circal.temperley import (AUTO, LITERAL, UNIFORM, build_temperley,
                              expected_k, temperley_build, temperley_lam_model)


def origins(model):
    out = {}
    for v in model.vertices:
        out.setdefault(v.origin or ("boundary" if v.boundary else "?"), []).append(v.id)
    return out


class TestStructure:
    def test_triangle_model_matches_known_structure(self):
        model = temperley_lam_model(triangle(), UNIFORM)
        tally = origins(model)
        assert len(tally["boundary"]) == 6
        assert len(tally["b_i"]) == 3
        assert len(tally["w_e"]) == 3
        assert len(tally["b_F"]) == 4      # one interior face plus three boundary faces
        assert not model.validation_errors()

    def test_single_edge_model(self):
        model = temperley_lam_model(single_edge(F(5)), UNIFORM)
        tally = origins(model)
        assert len(tally["boundary"]) == 4
        assert len(tally["w_e"]) == 1
        assert len(tally["b_i"]) == 2
        assert len(tally["b_F"]) == 2
        assert "b_v" not in tally

    def test_bipartite_and_degree_one_boundary(self):
        for net in (star(1, 1, 1), h_tree(), ring_lattice(1)):
            model = temperley_lam_model(net, UNIFORM)
            assert not model.validation_errors()
            for e in model.edges:
                assert {model.color(e.u), model.color(e.v)} == {BLACK, WHITE}
            for b in model.boundary_order:
                assert len(model.incidence[b]) == 1

    def test_disconnected_rejected(self):
        net = PlanarNetwork.build(
            [("1", True), ("2", True), ("3", True)],
            [("e", "1", "2", 1)],
            {"1": ["e"], "2": ["e"], "3": []}, ["1", "2", "3"])
        with pytest.raises(NotConnected):
            temperley_lam_model(net, UNIFORM)


class TestRank:
    @pytest.mark.parametrize("n,net", [(2, single_edge()), (3, star(1, 1, 1)),
                                       (5, ring_lattice(1))])
    def test_expected_k(self, n, net):
        assert expected_k(net) == n - 1

    def test_model_rank_matches(self):
        for net in (single_edge(), star(1, 1, 1), triangle(), h_tree(),
                    ring_lattice(1)):
            model = temperley_lam_model(net, UNIFORM)
            assert k_gamma(model) == expected_k(net)


class TestMinimalityTransfer:
    def test_minimal_network_gives_minimal_model(self):
        for net in (single_edge(), star(1, 1, 1), triangle(), h_tree(),
                    ring_lattice(1)):
            assert is_minimal_model(temperley_lam_model(net, UNIFORM))

    def test_lens_network_gives_non_minimal_model(self):
        assert not is_minimal_model(temperley_lam_model(parallel_edges(), UNIFORM))


class TestConvention:
    def _proportional(self, model, net):
        meas = dict(boundary_measurement_vector(model))
        mins = plucker_vector(
            omega_from_response(response_matrix(net)).prime).as_dict()
        ratios = set()
        for key, mv in mins.items():
            if (mv == 0) != (meas[key] == 0):
                return False
            if mv != 0:
                ratios.add(meas[key] / mv)
        return len(ratios) == 1

    def test_uniform_matches_grassmann_point(self):
        for net in (single_edge(F(5, 3)), star(F(3), F(1), F(2)),
                    triangle(F(2), F(3), F(5)), h_tree()):
            assert self._proportional(temperley_lam_model(net, UNIFORM), net)

    def test_literal_fails_on_weighted_boundary_edges(self):
        net = star(F(3), F(1), F(2))
        assert not self._proportional(temperley_lam_model(net, LITERAL), net)

    def test_auto_selects_uniform(self):
        build = temperley_build(star(F(3), F(1), F(2)), AUTO)
        assert build.convention == UNIFORM
        assert build.proportionality_checked

    def test_auto_skips_check_on_large_models(self):
        build = temperley_build(ring_lattice(1), AUTO)
        assert build.convention == UNIFORM
        assert not build.proportionality_checked

    def test_conductivity_edges_are_tagged(self):
        net = triangle(F(2), F(3), F(5))
        model = temperley_lam_model(net, UNIFORM)
        tagged = {}
        for e in model.edges:
            if e.source:
                tagged.setdefault(e.source, []).append(e.weight)
        assert set(tagged) == {"e12", "e23", "e31"}
        for eid, weights in tagged.items():
            assert weights == [net.edge_map[eid].weight] * 2
