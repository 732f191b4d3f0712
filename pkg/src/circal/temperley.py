"""Generalized Temperley trick: electrical network -> Lam model.

The model combines the network with its dual: black nodes for inner vertices,
for every face (interior and boundary alike, so that even boundary nodes have
a face vertex to attach to) and for boundary vertices; white nodes at edge
midpoints; 2n white boundary nodes on the circle, the odd ones at the
network's boundary vertices and the even ones on the arcs between them.

Weight placement is configurable because the construction's clauses conflict
for edges with boundary endpoints:

* ``literal``  - conductivity w(e) only on midpoint edges toward inner
  endpoints; midpoint edges toward boundary vertices get weight 1.  A bridge
  then carries its conductivity nowhere.
* ``uniform``  - w(e) on both vertex-side edges of the midpoint.

``auto`` picks the convention whose dimer measurements are proportional to
the maximal minors of the network's Grassmannian representative (the decisive
machine check); ``uniform`` is the one that passes, and it is assumed without
testing when the model is too large to enumerate.
"""

from dataclasses import dataclass
from fractions import Fraction

from .embedding import Dart, arc_index, is_arc
from .errors import NotConnected
from .lam import BLACK, WHITE, LamModel, boundary_measurement_vector
from .network import validate_network

LITERAL = "A"
UNIFORM = "B"
AUTO = "auto"

AUTO_MAX_MODEL_EDGES = 40


@dataclass(frozen=True)
class TemperleyBuild:
    model: LamModel
    convention: str
    face_of_network_face: dict    # network face id -> model face-vertex id
    proportionality_checked: bool = False


def expected_k(net):
    """Grassmannian rank the constructed model must have: n - 1."""
    return net.n_boundary - 1


def _node_weight(edge, vertex_is_boundary, convention):
    if vertex_is_boundary and convention == LITERAL:
        return Fraction(1), ""
    return edge.weight, edge.id


def build_temperley(net, convention=UNIFORM):
    """Construct the model and its provenance maps for a fixed convention."""
    report = validate_network(net)
    if not report.ok:
        raise ValueError("network invalid: %s" % report)
    if not net.is_connected():
        raise NotConnected("the Temperley construction requires a connected network")
    emb = net.embedding
    faces, _ = emb.trace_faces()
    n = net.n_boundary

    vertices = []
    edges = []
    rotation = {}
    counter = [0]

    def add_edge(u, v, weight, source=""):
        counter[0] += 1
        eid = "m%d" % counter[0]
        edges.append((eid, u, v, weight, source))
        return eid

    boundary_nodes = ["p%d" % (i + 1) for i in range(2 * n)]
    for p in boundary_nodes:
        vertices.append((p, WHITE, True))
    bb = {v: "bb:" + v for v in net.boundary_order}
    bv = {v: "bv:" + v for v in net.inner_vertices()}
    bf = {f.id: "bf:" + f.id for f in faces}
    we = {e.id: "we:" + e.id for e in net.edges}
    for v, node in sorted(bb.items()):
        vertices.append((node, BLACK, False, "b_i"))
    for v, node in sorted(bv.items()):
        vertices.append((node, BLACK, False, "b_v"))
    for f, node in sorted(bf.items()):
        vertices.append((node, BLACK, False, "b_F"))
    for e, node in sorted(we.items()):
        vertices.append((node, WHITE, False, "w_e"))

    def vertex_node(vid):
        return bb[vid] if net.vertex_map[vid].boundary else bv[vid]

    # midpoint edges, one bundle per network edge; rotation around the
    # midpoint is (head, right face, tail, left face) of the canonical dart
    mid_edges = {}
    for e in sorted(net.edges, key=lambda e: e.id):
        d = Dart(e.id, 0)
        right, left = emb.face_of(d), emb.face_of(d.reverse)
        w_u, src_u = _node_weight(e, net.vertex_map[e.u].boundary, convention)
        w_v, src_v = _node_weight(e, net.vertex_map[e.v].boundary, convention)
        eu = add_edge(we[e.id], vertex_node(e.u), w_u, src_u)
        ev = add_edge(we[e.id], vertex_node(e.v), w_v, src_v)
        er = add_edge(we[e.id], bf[right.id], Fraction(1))
        el = add_edge(we[e.id], bf[left.id], Fraction(1))
        mid_edges[e.id] = {"u": eu, "v": ev, "right": er, "left": el}
        rotation[we[e.id]] = (ev, er, eu, el)

    # boundary vertex gadgets: stem to the odd boundary node, then the
    # midpoint links in the network's clockwise rotation order
    stems = {}
    for i, v in enumerate(net.boundary_order, start=1):
        stem = add_edge(bb[v], "p%d" % (2 * i - 1), Fraction(1))
        stems[v] = stem
        links = [mid_edges[e]["u"] if net.edge_map[e].u == v else mid_edges[e]["v"]
                 for e in net.rotation_map.get(v, ())]
        rotation[bb[v]] = tuple([stem] + links)
        rotation["p%d" % (2 * i - 1)] = (stem,)

    # inner vertices: midpoint links in rotation order
    for v in sorted(net.inner_vertices()):
        links = [mid_edges[e]["u"] if net.edge_map[e].u == v else mid_edges[e]["v"]
                 for e in net.rotation_map.get(v, ())]
        rotation[bv[v]] = tuple(links)

    # face vertices: follow the face walk; a graph dart contributes its
    # midpoint link (the side the face sees), an arc dart the even node
    for f in faces:
        links = []
        for d in f.darts:
            if is_arc(d.edge):
                i = arc_index(d.edge) + 1
                even = "p%d" % (2 * i)
                eid = add_edge(bf[f.id], even, Fraction(1))
                links.append(eid)
                rotation[even] = (eid,)
            else:
                links.append(mid_edges[d.edge]["right" if d.end == 0 else "left"])
        rotation[bf[f.id]] = tuple(links)

    model = LamModel.build(vertices, edges, rotation, boundary_nodes)
    return TemperleyBuild(model, convention, dict(bf))


def _proportional(model, net):
    """Dimer measurement vector vs maximal minors of the response embedding."""
    from .forward import response_matrix
    from .grassmann import omega_from_response, plucker_vector
    meas = dict(boundary_measurement_vector(model))
    mins = plucker_vector(omega_from_response(response_matrix(net)).prime).as_dict()
    ratio = None
    for key in sorted(mins, key=sorted):
        a, b = meas[key], mins[key]
        if (a == 0) != (b == 0):
            return False
        if b != 0:
            r = a / b
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    return ratio is not None


def temperley_lam_model(net, convention=AUTO):
    """The Lam model of a network under the chosen weight convention."""
    return temperley_build(net, convention).model


def temperley_build(net, convention=AUTO):
    if convention in (LITERAL, UNIFORM):
        return build_temperley(net, convention)
    if convention != AUTO:
        raise ValueError("unknown convention %r" % convention)
    uniform = build_temperley(net, UNIFORM)
    if len(uniform.model.edges) > AUTO_MAX_MODEL_EDGES:
        return uniform
    if _proportional(uniform.model, net):
        return TemperleyBuild(uniform.model, UNIFORM, uniform.face_of_network_face, True)
    literal = build_temperley(net, LITERAL)
    if _proportional(literal.model, net):
        return TemperleyBuild(literal.model, LITERAL, literal.face_of_network_face, True)
    raise ValueError("neither weight convention matches the Grassmannian point")
