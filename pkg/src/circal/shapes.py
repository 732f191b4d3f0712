"""Reference network shapes used by the test corpus and the CLI.

All builders take conductivities as exact rationals and return networks with
hand-derived clockwise rotation systems.
"""

from fractions import Fraction

from .network import PlanarNetwork


def single_edge(w=1):
    """Two boundary nodes joined by one edge."""
    return PlanarNetwork.build(
        vertices=[("1", True), ("2", True)],
        edges=[("e", "1", "2", w)],
        rotation={"1": ["e"], "2": ["e"]},
        boundary_order=["1", "2"])


def star(*weights):
    """Spider: one inner hub joined to n boundary nodes.

    ``star(w1, w2, w3)`` gives the three-legged star with weight w_i on the
    edge at boundary node i; the hub's clockwise rotation follows the
    boundary numbering.
    """
    if not weights:
        weights = (1, 1, 1)
    n = len(weights)
    vertices = [(str(i), True) for i in range(1, n + 1)] + [("c", False)]
    edges = [("e%d" % i, str(i), "c", w) for i, w in enumerate(weights, start=1)]
    rotation = {str(i): ["e%d" % i] for i in range(1, n + 1)}
    rotation["c"] = ["e%d" % i for i in range(1, n + 1)]
    return PlanarNetwork.build(vertices, edges, rotation,
                               [str(i) for i in range(1, n + 1)])


def triangle(w12=1, w23=1, w31=1):
    """Three boundary nodes joined pairwise by chords."""
    return PlanarNetwork.build(
        vertices=[("1", True), ("2", True), ("3", True)],
        edges=[("e12", "1", "2", w12), ("e23", "2", "3", w23), ("e31", "3", "1", w31)],
        rotation={"1": ["e12", "e31"], "2": ["e23", "e12"], "3": ["e31", "e23"]},
        boundary_order=["1", "2", "3"])


def h_tree(w1x=1, w2y=1, w3y=1, w4x=1, wxy=1):
    """Four boundary leaves on two joined inner nodes (an H-shaped tree).

    With unit conductivities the effective resistances are 2 between the
    leaf pairs sharing an inner node and 3 otherwise.
    """
    return PlanarNetwork.build(
        vertices=[("1", True), ("2", True), ("3", True), ("4", True),
                  ("x", False), ("y", False)],
        edges=[("e1", "1", "x", w1x), ("e2", "2", "y", w2y),
               ("e3", "3", "y", w3y), ("e4", "4", "x", w4x),
               ("e5", "x", "y", wxy)],
        rotation={"1": ["e1"], "2": ["e2"], "3": ["e3"], "4": ["e4"],
                  "x": ["e1", "e5", "e4"], "y": ["e2", "e3", "e5"]},
        boundary_order=["1", "2", "3", "4"])


def parallel_edges(w1=1, w2=1):
    """Two boundary nodes joined by two parallel edges (a lens; not minimal)."""
    return PlanarNetwork.build(
        vertices=[("1", True), ("2", True)],
        edges=[("ea", "1", "2", w1), ("eb", "1", "2", w2)],
        rotation={"1": ["ea", "eb"], "2": ["eb", "ea"]},
        boundary_order=["1", "2"])


def ring_lattice(m=1, weights=None):
    """Concentric ring lattice with n = 4m+1 boundary spokes.

    Nodes sit at integer polar coordinates (ring i, spoke j) for 1 <= i <=
    m+1 and 1 <= j <= n; ring m+1 is the boundary.  Radial edges join
    consecutive rings along a spoke; circular edges join consecutive spokes
    along each inner ring.  ``weights`` may map edge ids to conductivities.
    """
    n = 4 * m + 1
    weights = weights or {}

    def vid(i, j):
        return "r%d.%d" % (i, j)

    vertices = []
    edges = []
    rotation = {}
    for j in range(1, n + 1):
        vertices.append((vid(m + 1, j), True))
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            vertices.append((vid(i, j), False))

    def radial(i, j):
        return "rad%d.%d" % (i, j)

    def circular(i, j):
        return "cir%d.%d" % (i, j)

    for i in range(1, m + 1):
        for j in range(1, n + 1):
            edges.append((radial(i, j), vid(i, j), vid(i + 1, j),
                          weights.get(radial(i, j), 1)))
            jn = j % n + 1
            edges.append((circular(i, j), vid(i, j), vid(i, jn),
                          weights.get(circular(i, j), 1)))
    for j in range(1, n + 1):
        rotation[vid(m + 1, j)] = [radial(m, j)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            jp = (j - 2) % n + 1
            rot = [radial(i, j), circular(i, j)]
            if i > 1:
                rot.append(radial(i - 1, j))
            rot.append(circular(i, jp))
            rotation[vid(i, j)] = rot
    return PlanarNetwork.build(vertices, edges, rotation,
                               [vid(m + 1, j) for j in range(1, n + 1)])


def corpus():
    """The named unit-weight shapes exercised across the test suites."""
    return {
        "single_edge": single_edge(),
        "star": star(1, 1, 1),
        "triangle": triangle(),
        "h_tree": h_tree(),
        "ring_lattice": ring_lattice(1),
    }


def random_weights(net, rng):
    """Random positive rationals p/q with p, q uniform in 1..100."""
    return {e.id: Fraction(rng.randint(1, 100), rng.randint(1, 100))
            for e in net.edges}
