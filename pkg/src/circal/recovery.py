"""Conductivity recovery from response or resistance matrices.

Pipeline: build the Grassmannian representative from the input matrix, twist
it, rebuild the network's Lam model with placeholder weights (the labeling is
purely combinatorial), read off a gauge representative of the model weights
from the twisted minors, turn every model face into a multiplicative
constraint on the unknown conductivities through the gauge-invariant face
weights, and solve by unit propagation from the single-variable anchors that
bridges and spikes provide.  The result is verified by an exact forward
re-solve; redundant constraints double as consistency checks.

The input matrix is deliberately not pre-validated here: a matrix that does
not come from the given graph must surface as Inconsistent or
VerificationFailed, never as silently wrong weights.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .embedding import is_arc
from .errors import (Inconsistent, NotConnected, NotMinimal, Underdetermined,
                     VerificationFailed, ZeroMinor)
from .forward import effective_resistance_matrix, response_matrix
from .grassmann import minor, omega_matrix, omega_matrix_resistance, twist
from .lam import WHITE, scott_labels
from .network import is_minimal, validate_network
from .temperley import AUTO, UNIFORM, build_temperley


def lam_weights_from_twist(model, twisted, labeling, tol=0.0):
    """Gauge representative of the model weights from twisted minors.

    An edge between two inner nodes gets 1/(D1*D2) for its two flanking
    faces; an edge hanging off a (white) boundary node gets 1/D for the
    closest face counterclockwise around that node, which is the face on the
    right of the edge directed away from the boundary.
    """
    labels = labeling.as_dict()
    cache = {}

    def face_minor(face_id):
        if face_id not in cache:
            val = minor(twisted, labels[face_id])
            if (abs(val) <= tol) if tol else (val == 0):
                raise ZeroMinor("twisted minor of face %s vanishes" % face_id)
            cache[face_id] = val
        return cache[face_id]

    emb = model.embedding
    emb.trace_faces()
    out = {}
    for e in model.edges:
        from .embedding import Dart
        d = Dart(e.id, 0)
        u_bd = model.vertex_map[e.u].boundary
        v_bd = model.vertex_map[e.v].boundary
        if not u_bd and not v_bd:
            f1 = emb.face_of(d).id
            f2 = emb.face_of(d.reverse).id
            out[e.id] = 1 / (face_minor(f1) * face_minor(f2))
        else:
            outward = d if u_bd else d.reverse
            out[e.id] = 1 / face_minor(emb.face_of(outward).id)
    return out


@dataclass(frozen=True)
class FaceConstraint:
    face: str
    exponents: tuple      # ((network edge id, exponent), ...)
    value: Fraction

    def exponent_map(self):
        return dict(self.exponents)


@dataclass(frozen=True)
class ConstraintSystem:
    constraints: tuple


def build_constraints(model, weights):
    """One multiplicative constraint per model face.

    The right-hand side is the face weight of the supplied gauge
    representative; the exponents record which network conductivities appear
    on the face boundary (weight-one model edges contribute nothing).
    """
    emb = model.embedding
    faces, _ = emb.trace_faces()
    out = []
    for f in faces:
        value = Fraction(1)
        exps = {}
        for d in f.darts:
            if is_arc(d.edge):
                continue
            e = model.edge_map[d.edge]
            sign = 1 if model.color(emb.tail(d)) == WHITE else -1
            w = weights[e.id]
            value = value * w if sign > 0 else value / w
            if e.source:
                exps[e.source] = exps.get(e.source, 0) + sign
        exps = {k: v for k, v in exps.items() if v}
        out.append(FaceConstraint(f.id, tuple(sorted(exps.items())), value))
    return ConstraintSystem(tuple(out))


def solve_constraints(system, tol=0.0):
    """Unit propagation over the multiplicative face constraints.

    Repeatedly solves any constraint with exactly one undetermined variable
    of exponent +-1, then verifies every constraint on the solved weights.
    Returns (weights, number of constraints that were pure redundancy checks).
    """
    known = {}
    constraints = list(system.constraints)
    progress = True
    used = set()
    while progress:
        progress = False
        for c in constraints:
            if c.face in used:
                continue
            unknown = [(e, x) for e, x in c.exponents if e not in known]
            if len(unknown) != 1 or abs(unknown[0][1]) != 1:
                continue
            eid, exp = unknown[0]
            rest = Fraction(1)
            for e, x in c.exponents:
                if e != eid:
                    rest *= known[e] ** x
            value = c.value / rest
            known[eid] = value if exp == 1 else 1 / value
            used.add(c.face)
            progress = True
    variables = {e for c in constraints for e, _ in c.exponents}
    missing = sorted(variables - set(known))
    if missing:
        raise Underdetermined("propagation stalled; undetermined edges: %s" % missing)
    bad = []
    for c in constraints:
        acc = Fraction(1)
        for e, x in c.exponents:
            acc *= known[e] ** x
        diff = abs(acc - c.value)
        if (diff > tol * max(1.0, abs(c.value))) if tol else (acc != c.value):
            bad.append(c.face)
    if bad:
        raise Inconsistent("face constraints %s fail on the solved weights" % bad)
    for e, w in known.items():
        if w <= 0:
            raise Inconsistent("recovered weight of edge %r is not positive" % e)
    return known, len(constraints) - len(used)


@dataclass(frozen=True)
class RecoveryResult:
    network: object
    weights: dict
    convention: str
    redundancy: int
    source: str            # "response" or "resistance"

    def report_lines(self):
        out = ["conductivities:"]
        for e in sorted(self.weights):
            out.append("  %s -> %s" % (e, self.weights[e]))
        out.append("verification:")
        out.append("  resolve_residual: exact-match")
        out.append("  redundant_constraints: %d" % self.redundancy)
        out.append("  convention: %s" % self.convention)
        return out


def _prepare_shape(shape):
    report = validate_network(shape)
    if not report.ok:
        raise NotMinimal("shape invalid: %s" % report)
    if not shape.is_connected():
        raise NotConnected("recovery requires a connected network")
    rep = is_minimal(shape)
    if not rep:
        raise NotMinimal(rep.reason)
    unit = shape.with_weights({e.id: Fraction(1) for e in shape.edges})
    return unit


def _recover(shape, prime, convention, tol=0.0):
    unit = _prepare_shape(shape)
    conv = UNIFORM if convention == AUTO else convention
    build = build_temperley(unit, conv)
    model = build.model
    labeling = scott_labels(model)
    twisted = twist(prime, tol)
    omega_weights = lam_weights_from_twist(model, twisted, labeling, tol)
    system = build_constraints(model, omega_weights)
    weights, redundancy = solve_constraints(system, tol)
    missing = [e.id for e in shape.edges if e.id not in weights]
    if missing:
        raise Underdetermined("no constraint mentions edges %s" % missing)
    return shape.with_weights(weights), weights, conv, redundancy


def recover_from_response(shape, M, convention=AUTO, tol=0.0):
    """Recover all conductivities of a minimal shape from a response matrix.

    The recovered network is re-solved and must reproduce M exactly.
    """
    if len(M) != shape.n_boundary:
        raise ValueError("matrix size %d does not match n=%d" % (len(M), shape.n_boundary))
    prime = omega_matrix(M)[:-1]
    net, weights, conv, redundancy = _recover(shape, prime, convention, tol)
    if not linalg.mat_eq(response_matrix(net), linalg.freeze(M), tol):
        raise VerificationFailed("re-solved response matrix differs from the input")
    return RecoveryResult(net, weights, conv, redundancy, "response")


def recover_from_resistance(shape, R, convention=AUTO, tol=0.0):
    """Recover all conductivities from an effective resistance matrix."""
    if len(R) != shape.n_boundary:
        raise ValueError("matrix size %d does not match n=%d" % (len(R), shape.n_boundary))
    prime = omega_matrix_resistance(R)[:-1]
    net, weights, conv, redundancy = _recover(shape, prime, convention, tol)
    if not linalg.mat_eq(effective_resistance_matrix(net), linalg.freeze(R), tol):
        raise VerificationFailed("re-solved resistance matrix differs from the input")
    return RecoveryResult(net, weights, conv, redundancy, "resistance")
