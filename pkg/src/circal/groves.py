"""Brute-force grove oracles tying minors, dimers and spanning forests.

A grove is a spanning forest whose every component touches the boundary.
Everything here is deliberately exhaustive; the limits keep runtimes at desk
scale.  The oracle report cross-checks three independently computed vectors:
maximal minors of the response embedding, dimer partition functions of the
Temperley model, and grove sums scaled by the uncrossed partition function.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import TooLarge
from .grassmann import minor as matrix_minor
from .grassmann import omega_from_response, plucker_vector, twist
from .forward import response_matrix
from .lam import boundary_measurement_vector, enumerate_dimers, scott_labels
from .temperley import UNIFORM, build_temperley

GROVE_MAX_EDGES = 15
DIMER_MAX_MODEL_EDGES = 60


@dataclass(frozen=True)
class Grove:
    edges: frozenset
    components: tuple     # frozensets of vertex ids

    def n_components(self):
        return len(self.components)


def grove_weight(net, grove):
    """Product of the conductivities of the grove's edges; empty grove -> 1."""
    w = Fraction(1)
    for e in grove.edges:
        w *= net.edge_map[e].weight
    return w


def _components(net, edge_subset):
    parent = {v.id: v.id for v in net.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in edge_subset:
        e = net.edge_map[eid]
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            return None
        parent[ru] = rv
    comps = {}
    for v in net.vertices:
        comps.setdefault(find(v.id), set()).add(v.id)
    return tuple(frozenset(c) for c in comps.values())


def enumerate_groves(net):
    """Exhaustive list of groves, smallest edge sets first."""
    if len(net.edges) > GROVE_MAX_EDGES:
        raise TooLarge("%d edges exceeds the grove oracle limit of %d"
                       % (len(net.edges), GROVE_MAX_EDGES))
    boundary = set(net.boundary_order)
    edge_ids = sorted(e.id for e in net.edges)
    out = []
    for r in range(len(edge_ids) + 1):
        for subset in combinations(edge_ids, r):
            comps = _components(net, subset)
            if comps is None:
                continue
            if all(c & boundary for c in comps):
                out.append(Grove(frozenset(subset), comps))
    return out


def uncrossed_partition(net):
    """Weight sum of the groves with exactly n components."""
    n = net.n_boundary
    return sum((grove_weight(net, g) for g in enumerate_groves(net)
                if g.n_components() == n), Fraction(0))


@dataclass(frozen=True)
class GroveCheckEntry:
    subset: frozenset
    minor: Fraction
    dimer_sum: Fraction
    grove_value: Fraction    # dimer partition function over L_unc


@dataclass(frozen=True)
class GroveReport:
    ok: bool
    l_unc: Fraction
    entries: tuple
    boundary_faces_unique: bool
    boundary_products: tuple       # Delta_I(omega') * Delta_I(twist) per boundary face
    twisted_membership: bool       # L_unc / Delta_I(twist) is a grove weight, all faces
    mismatches: tuple

    def __bool__(self):
        return self.ok


def check_grove_plucker(net):
    """Cross-validate minors, dimers and groves on a desk-scale minimal net.

    Checks, exactly:
      * minor vector of the truncated embedding == dimer vector / L_unc;
      * every boundary face of the Temperley model has a unique dimer;
      * Delta_I(F)(omega') * Delta_I(F)(twist) is constant over boundary faces;
      * L_unc / Delta_I(F)(twist) is the weight of some grove, for every face.
    """
    if len(net.edges) > GROVE_MAX_EDGES:
        raise TooLarge("network too large for the grove oracle")
    build = build_temperley(net, UNIFORM)
    model = build.model
    if len(model.edges) > DIMER_MAX_MODEL_EDGES:
        raise TooLarge("Temperley model too large for the dimer oracle")
    groves = enumerate_groves(net)
    l_unc = sum((grove_weight(net, g) for g in groves
                 if g.n_components() == net.n_boundary), Fraction(0))
    grove_weights = {grove_weight(net, g) for g in groves}

    prime = omega_from_response(response_matrix(net)).prime
    minors = plucker_vector(prime).as_dict()
    dimers = dict(boundary_measurement_vector(model))
    mismatches = []
    entries = []
    for key in sorted(minors, key=sorted):
        mv, dv = minors[key], dimers[key]
        entries.append(GroveCheckEntry(key, mv, dv, dv / l_unc))
        if mv * l_unc != dv:
            mismatches.append("subset %s: minor %s != dimer sum %s / L_unc %s"
                              % (sorted(key), mv, dv, l_unc))

    labeling = scott_labels(model)
    twisted = twist(prime)
    faces, _ = model.embedding.trace_faces()
    unique = True
    products = []
    membership = True
    for f in faces:
        label = labeling[f.id]
        tw = matrix_minor(twisted, label)
        if tw == 0 or l_unc / tw not in grove_weights:
            membership = False
            mismatches.append("face %s: L_unc/twisted minor %s is not a grove weight"
                              % (f.id, "0" if tw == 0 else l_unc / tw))
        if f.is_boundary_face:
            count = len(enumerate_dimers(model, label))
            if count != 1:
                unique = False
                mismatches.append("boundary face %s has %d dimers" % (f.id, count))
            products.append(matrix_minor(prime, label) * tw)
    if len(set(products)) > 1:
        mismatches.append("boundary-face minor products are not constant: %s"
                          % sorted(set(map(str, products))))
    return GroveReport(not mismatches, l_unc, tuple(entries), unique,
                       tuple(products), membership, tuple(mismatches))
