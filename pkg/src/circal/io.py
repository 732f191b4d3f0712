"""File formats: JSON networks and Lam models, delimited rational matrices.

Weights and matrix entries are exact rational strings "p/q" (or bare
integers); parsing is bit-exact and rejects anything else, including zero
weights and floating point notation.
"""

import json
import re
from fractions import Fraction

from .errors import FormatError
from .lam import LamModel
from .network import PlanarNetwork

_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(value, context="value"):
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value.strip()):
        return Fraction(value.strip())
    raise FormatError("%s %r is not an exact rational (use p/q or an integer)"
                      % (context, value))


def parse_weight(value, context="weight"):
    w = parse_rational(value, context)
    if w <= 0:
        raise FormatError("%s %r must be positive" % (context, value))
    return w


def format_rational(x):
    return str(x)


# -- networks ----------------------------------------------------------------

def network_to_dict(net):
    return {
        "n_boundary": net.n_boundary,
        "vertices": [{"id": v.id, "boundary": v.boundary} for v in net.vertices],
        "edges": [{"id": e.id, "u": e.u, "v": e.v, "weight": format_rational(e.weight)}
                  for e in net.edges],
        "rotation": {v: list(r) for v, r in net.rotation},
        "boundary_order": list(net.boundary_order),
    }


def network_from_dict(data):
    try:
        vertices = [(v["id"], bool(v["boundary"])) for v in data["vertices"]]
        edges = [(e["id"], e["u"], e["v"], parse_weight(e["weight"], "weight of edge %r" % e["id"]))
                 for e in data["edges"]]
        rotation = {v: list(r) for v, r in data["rotation"].items()}
        order = list(data["boundary_order"])
        n = data.get("n_boundary", len(order))
    except (KeyError, TypeError) as exc:
        raise FormatError("malformed network file: %s" % exc)
    return PlanarNetwork.build(vertices, edges, rotation, order, n_boundary=n)


def dump_network(net, path):
    with open(path, "w") as fh:
        json.dump(network_to_dict(net), fh, indent=2)
        fh.write("\n")


def load_network(path):
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError("not valid JSON: %s" % exc)
    return network_from_dict(data)


# -- Lam models --------------------------------------------------------------

def model_to_dict(model):
    return {
        "vertices": [{"id": v.id, "color": v.color, "boundary": v.boundary,
                      **({"origin": v.origin} if v.origin else {})}
                     for v in model.vertices],
        "edges": [{"id": e.id, "u": e.u, "v": e.v, "weight": format_rational(e.weight),
                   **({"source": e.source} if e.source else {})}
                  for e in model.edges],
        "rotation": {v: list(r) for v, r in model.rotation},
        "boundary_order": list(model.boundary_order),
    }


def model_from_dict(data):
    try:
        vertices = [(v["id"], v["color"], bool(v["boundary"]), v.get("origin", ""))
                    for v in data["vertices"]]
        edges = [(e["id"], e["u"], e["v"],
                  parse_weight(e["weight"], "weight of edge %r" % e["id"]),
                  e.get("source", ""))
                 for e in data["edges"]]
        rotation = {v: list(r) for v, r in data["rotation"].items()}
        order = list(data["boundary_order"])
    except (KeyError, TypeError) as exc:
        raise FormatError("malformed Lam model file: %s" % exc)
    return LamModel.build(vertices, edges, rotation, order)


def dump_model(model, path):
    with open(path, "w") as fh:
        json.dump(model_to_dict(model), fh, indent=2)
        fh.write("\n")


def load_model(path):
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError("not valid JSON: %s" % exc)
    return model_from_dict(data)


# -- matrices ----------------------------------------------------------------

def format_matrix(mat):
    return "\n".join(",".join(format_rational(x) for x in row) for row in mat)


def parse_matrix(text, mode="exact", tol=0.0):
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cells = [c for c in re.split(r"[,\s]+", line) if c]
        if mode == "float":
            try:
                rows.append(tuple(float(Fraction(c)) if _RATIONAL.match(c) else float(c)
                                  for c in cells))
            except ValueError:
                raise FormatError("bad matrix entry in line %r" % line)
        else:
            rows.append(tuple(parse_rational(c, "matrix entry") for c in cells))
    if not rows:
        raise FormatError("matrix file is empty")
    if len({len(r) for r in rows}) != 1:
        raise FormatError("matrix rows have unequal lengths")
    return tuple(rows)


def load_matrix(path, mode="exact"):
    with open(path) as fh:
        return parse_matrix(fh.read(), mode)


def dump_matrix(mat, path):
    with open(path, "w") as fh:
        fh.write(format_matrix(mat))
        fh.write("\n")


# -- reports -----------------------------------------------------------------

def format_plucker(vec):
    """One "i1,i2,...,ik -> p/q" line per coordinate, in lex subset order."""
    out = []
    for key, value in sorted(vec.coords, key=lambda t: sorted(t[0])):
        out.append("%s -> %s" % (",".join(str(i) for i in sorted(key)),
                                 format_rational(value)))
    return "\n".join(out)


def format_labeling(labeling):
    out = []
    for face, label in labeling.labels:
        out.append("%s -> %s" % (face, ",".join(str(i) for i in sorted(label))))
    return "\n".join(out)
