"""Whole-network invariant suite behind the ``verify`` CLI command.

Each check yields (status, name, detail) with status PASS, FAIL or SKIP.
Oversized oracles are skipped deterministically, never silently weakened.
"""

import random
from fractions import Fraction

from . import linalg
from .errors import CircalError, TooLarge
from .forward import (effective_resistance_matrix, response_matrix,
                      validate_response_properties)
from .grassmann import (alternating_sums, omega_from_resistance,
                        omega_from_response, plucker_vector, twist)
from .groves import check_grove_plucker
from .lam import (boundary_measurement, face_weights, gauge_transform,
                  is_minimal_model, k_gamma, scott_labels)
from .network import is_minimal, validate_network
from .temperley import UNIFORM, build_temperley
from .embedding import is_arc

GAUGE_SPOT_CHECKS = 5
MEASUREMENT_SAMPLES = 5


def _adjacent_label_swaps(model, labeling):
    labels = labeling.as_dict()
    _, dart_face = model.embedding.trace_faces()
    for e in model.edges:
        from .embedding import Dart
        d = Dart(e.id, 0)
        f1, f2 = dart_face[d].id, dart_face[d.reverse].id
        if f1 == f2:
            continue
        if len(labels[f1] ^ labels[f2]) != 2:
            return False, "faces %s/%s across edge %s differ by %d indices" % (
                f1, f2, e.id, len(labels[f1] ^ labels[f2]))
    return True, ""


def verify_network(net, seed=0):
    """Run the full invariant suite; returns a list of (status, name, detail)."""
    results = []

    def record(name, fn):
        try:
            ok, detail = fn()
        except TooLarge as exc:
            results.append(("SKIP", name, str(exc)))
            return None
        except CircalError as exc:
            results.append(("FAIL", name, "%s: %s" % (type(exc).__name__, exc)))
            return None
        results.append(("PASS" if ok else "FAIL", name, detail))
        return ok

    report = validate_network(net)
    results.append(("PASS" if report.ok else "FAIL", "network-valid", str(report)))
    if not report.ok:
        return results
    connected = net.is_connected()
    results.append(("PASS" if connected else "FAIL", "connected", ""))
    minimal = is_minimal(net)
    results.append(("PASS" if minimal else "FAIL", "minimal", minimal.reason))

    M = response_matrix(net)
    record("response-properties",
           lambda: (validate_response_properties(M).ok, str(validate_response_properties(M))))
    record("response-constant-voltage",
           lambda: (all(sum(row) == 0 for row in M), "row sums"))

    if connected:
        def ground_independent():
            r_last = effective_resistance_matrix(net)
            r_first = effective_resistance_matrix(net, ground=1)
            return r_last == r_first, "grounding at node n vs node 1"
        record("resistance-ground-independent", ground_independent)

    omega = omega_from_response(M)

    def rank_check():
        return linalg.rank(omega.full) == net.n_boundary - 1, \
            "rank %d" % linalg.rank(omega.full)
    record("omega-rank", rank_check)

    def alt_sums():
        for row in omega.full:
            a, b = alternating_sums(row)
            if a != 0 or b != 0:
                return False, "row %s" % (row,)
        return True, ""
    record("omega-alternating-sums", alt_sums)

    def minor_signs():
        vec = plucker_vector(omega.prime)
        return vec.sign_uniform, "maximal minors of the truncation"
    record("omega-minor-signs", minor_signs)

    if connected:
        def same_point():
            from .grassmann import same_projective_point
            R = effective_resistance_matrix(net)
            other = omega_from_resistance(R)
            return (same_projective_point(plucker_vector(omega.prime),
                                          plucker_vector(other.prime)),
                    "response vs resistance embeddings")
        record("embeddings-same-point", same_point)

    if not (connected and minimal):
        return results

    build = build_temperley(net, UNIFORM)
    model = build.model

    def model_checks():
        errs = model.validation_errors()
        if errs:
            return False, "; ".join(errs)
        if k_gamma(model) != net.n_boundary - 1:
            return False, "k(model) = %d" % k_gamma(model)
        rep = is_minimal_model(model)
        return bool(rep), rep.reason
    record("temperley-model", model_checks)

    def labels_check():
        labeling = scott_labels(model)
        k = k_gamma(model)
        if any(len(lbl) != k for lbl in labeling.label_sets()):
            return False, "label cardinality"
        return _adjacent_label_swaps(model, labeling)
    record("scott-labels", labels_check)

    def gauge_check():
        rng = random.Random(seed)
        inner = model.inner_ids()
        base_faces = face_weights(model)
        labeling = scott_labels(model)
        samples = [lbl for _, lbl in labeling.labels][:MEASUREMENT_SAMPLES]
        base_meas = {s: boundary_measurement(model, s) for s in samples}
        current = model
        scale = Fraction(1)
        for _ in range(GAUGE_SPOT_CHECKS):
            v = rng.choice(inner)
            t = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            current = gauge_transform(current, v, t)
            scale *= t
            if face_weights(current) != base_faces:
                return False, "face weight changed under gauge at %s" % v
            for s in samples:
                if boundary_measurement(current, s) != base_meas[s] * scale:
                    return False, "measurement class changed under gauge at %s" % v
        return True, "%d gauges" % GAUGE_SPOT_CHECKS
    if len(model.edges) <= 60:
        record("gauge-invariance", gauge_check)
    else:
        results.append(("SKIP", "gauge-invariance", "model too large for dimer checks"))

    def groves():
        rep = check_grove_plucker(net)
        return rep.ok, "; ".join(rep.mismatches) or \
            "L_unc = %s over %d subsets" % (rep.l_unc, len(rep.entries))
    record("grove-dimer-minor-oracle", groves)

    return results


def suite_passed(results):
    return all(status != "FAIL" for status, _, _ in results)
