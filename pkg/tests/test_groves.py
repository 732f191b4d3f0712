from fractions import Fraction as F

import pytest

from circal.errors import TooLarge
from circal.forward import response_matrix
from circal.grassmann import minor, omega_from_response, twist
from circal.groves import (check_grove_plucker, enumerate_groves, grove_weight,
                           uncrossed_partition)
from circal.network import PlanarNetwork
from circal.shapes import h_tree, ring_lattice, single_edge, star, triangle


class TestEnumeration:
    def test_single_edge_has_two_groves(self):
        assert len(enumerate_groves(single_edge())) == 2

    def test_star_has_seven_groves(self):
        # every nonempty edge subset keeps the hub attached; the empty one strands it
        groves = enumerate_groves(star(1, 1, 1))
        assert len(groves) == 7
        assert frozenset() not in {g.edges for g in groves}

    def test_triangle_has_seven_groves(self):
        # every subset except the full 3-cycle
        groves = enumerate_groves(triangle())
        assert len(groves) == 7
        assert frozenset({"e12", "e23", "e31"}) not in {g.edges for g in groves}

    def test_too_large(self):
        big = PlanarNetwork.build(
            [("1", True), ("2", True)] + [("i%d" % k, False) for k in range(15)],
            [("e%d" % k, "1" if k == 0 else "i%d" % (k - 1),
              "2" if k == 15 else "i%d" % k, 1) for k in range(16)],
            {}, ["1", "2"])
        with pytest.raises(TooLarge):
            enumerate_groves(big)


class TestWeights:
    def test_empty_grove_weight_is_one(self):
        net = single_edge(F(9))
        empty = next(g for g in enumerate_groves(net) if not g.edges)
        assert grove_weight(net, empty) == 1

    def test_pair_weight(self):
        net = star(F(3), F(1), F(2))
        g = next(g for g in enumerate_groves(net)
                 if g.edges == frozenset({"e2", "e3"}))
        assert grove_weight(net, g) == 2

    def test_full_star_weight(self):
        net = star(F(3), F(1), F(2))
        g = next(g for g in enumerate_groves(net) if len(g.edges) == 3)
        assert grove_weight(net, g) == 6


class TestUncrossedPartition:
    def test_star_is_sum_of_conductivities(self):
        assert uncrossed_partition(star(F(3), F(1), F(2))) == 6
        a, b, c = F(5), F(7), F(11)
        assert uncrossed_partition(star(c, a, b)) == a + b + c

    def test_star_partition_clears_response_denominators(self):
        a, b, c = F(1), F(2), F(3)
        net = star(c, a, b)
        cleared = uncrossed_partition(net) * F(1)
        M = response_matrix(net)
        expected = ((c * a + c * b, -c * a, -c * b),
                    (-c * a, c * a + a * b, -a * b),
                    (-c * b, -a * b, c * b + a * b))
        for i in range(3):
            for j in range(3):
                assert M[i][j] * cleared == expected[i][j]

    def test_single_edge_partition_is_one(self):
        assert uncrossed_partition(single_edge(F(9, 2))) == 1

    def test_triangle_partition_is_one(self):
        assert uncrossed_partition(triangle(F(2), F(3), F(5))) == 1


class TestCrossValidation:
    @pytest.mark.parametrize("net", [single_edge(F(5, 3)), star(F(3), F(1), F(2)),
                                     triangle(F(2), F(3), F(5)), h_tree()],
                             ids=["single", "star", "triangle", "h_tree"])
    def test_report_passes(self, net):
        rep = check_grove_plucker(net)
        assert rep.ok, rep.mismatches
        assert rep.boundary_faces_unique
        assert rep.twisted_membership
        assert len(set(rep.boundary_products)) == 1

    def test_ring_lattice_report_passes(self):
        rep = check_grove_plucker(ring_lattice(1))
        assert rep.ok, rep.mismatches[:3]

    def test_star_worked_identity(self):
        # weight of the grove behind face {2,6} is a, behind {1,6} it is a*c,
        # and the twisted-minor ratio recovers c
        a, b, c = F(5), F(7), F(11)
        net = star(c, a, b)
        prime = omega_from_response(response_matrix(net)).prime
        tw = twist(prime)
        l_unc = uncrossed_partition(net)
        assert l_unc / minor(tw, {2, 6}) == a
        assert l_unc / minor(tw, {1, 6}) == a * c
        assert minor(tw, {2, 6}) / minor(tw, {1, 6}) == c
        weights = {grove_weight(net, g) for g in enumerate_groves(net)}
        assert a in weights and a * c in weights

    def test_entries_expose_three_routes(self):
        rep = check_grove_plucker(star(F(3), F(1), F(2)))
        for entry in rep.entries:
            assert entry.minor == entry.grove_value
            assert entry.dimer_sum == entry.minor * rep.l_unc
