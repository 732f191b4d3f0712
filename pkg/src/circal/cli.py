"""Command-line front end.

Subcommands: forward, embed, twist, recover, verify, roundtrip.  Every flag
can also be set through an environment variable with the CIRCAL_ prefix
(flags win).  Exit codes are stable per failure class:

  0  success
  1  usage or file-format error
  2  invalid network or matrix
  3  network rejected (not minimal / not connected)
  4  recovery failed (zero minor, underdetermined, inconsistent, twist scan)
  5  verification or round-trip mismatch
  6  invariant suite reported failures
"""

import argparse
import os
import random
import sys
from fractions import Fraction

from . import io
from .errors import (BadCardinality, BadResistance, BadResponse, CircalError,
                     FormatError, Inconsistent, InvalidEmbedding, NonInteger,
                     NotConnected, NotMinimal, NotOdd, NotStandard,
                     RankDeficient, ScanExhausted, SingularInterior,
                     TooLarge, Underdetermined, VerificationFailed,
                     ZeroColumn, ZeroMinor)
from .forward import (effective_resistance_matrix, response_matrix,
                      validate_response_properties)
from .grassmann import (alternating_sums, omega_from_response,
                        plucker_vector, twist)
from .network import validate_network
from .recovery import recover_from_resistance, recover_from_response
from .shapes import random_weights
from .verify import suite_passed, verify_network

EXIT_CODES = (
    (FormatError, 1),
    (BadResponse, 2), (BadResistance, 2), (InvalidEmbedding, 2),
    (SingularInterior, 2), (RankDeficient, 2), (BadCardinality, 2),
    (NonInteger, 2), (TooLarge, 2), (NotOdd, 2), (NotStandard, 2),
    (NotMinimal, 3), (NotConnected, 3),
    (ZeroMinor, 4), (Underdetermined, 4), (Inconsistent, 4),
    (ScanExhausted, 4), (ZeroColumn, 4),
    (VerificationFailed, 5),
)


def _env(name, default):
    return os.environ.get("CIRCAL_" + name.upper(), default)


def build_parser():
    top = argparse.ArgumentParser(prog="circal",
                                  description="Exact black-box solvers for "
                                              "circular planar electrical networks")
    top.add_argument("--out", default=_env("out", None),
                     help="write the report to this file instead of stdout")
    top.add_argument("--mode", choices=("exact", "float"),
                     default=_env("mode", "exact"),
                     help="arithmetic mode (default exact)")
    top.add_argument("--tol", type=float, default=float(_env("tol", "1e-9")),
                     help="relative tolerance in float mode")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forward", help="response and resistance matrices of a network")
    p.add_argument("network")

    p = sub.add_parser("embed", help="Grassmannian embedding and sign report")
    p.add_argument("network")

    p = sub.add_parser("twist", help="twist of a matrix file")
    p.add_argument("matrix")

    p = sub.add_parser("recover", help="recover conductivities on a known shape")
    p.add_argument("shape")
    p.add_argument("matrix")
    p.add_argument("--from", dest="source", choices=("response", "resistance"),
                   default=_env("from", "response"))
    p.add_argument("--convention", choices=("A", "B", "auto"),
                   default=_env("convention", "auto"))

    p = sub.add_parser("verify", help="full invariant suite on a network")
    p.add_argument("network")
    p.add_argument("--seed", type=int, default=int(_env("seed", "0")))

    p = sub.add_parser("roundtrip", help="randomized exact round-trip check")
    p.add_argument("shape")
    p.add_argument("--seed", type=int, default=int(_env("seed", "0")))
    p.add_argument("--trials", type=int, default=int(_env("trials", "20")))
    return top


def cmd_forward(args, emit):
    net = io.load_network(args.network)
    report = validate_network(net)
    if not report.ok:
        raise InvalidEmbedding(str(report))
    emit("# circal forward: %s" % args.network)
    emit("response:")
    emit(io.format_matrix(response_matrix(net)))
    emit("resistance:")
    emit(io.format_matrix(effective_resistance_matrix(net)))
    emit("ok")
    return 0


def cmd_embed(args, emit):
    net = io.load_network(args.network)
    report = validate_network(net)
    if not report.ok:
        raise InvalidEmbedding(str(report))
    M = response_matrix(net)
    pair = omega_from_response(M)
    vec = plucker_vector(pair.prime)
    emit("# circal embed: %s" % args.network)
    emit("omega:")
    emit(io.format_matrix(pair.full))
    emit("omega_prime:")
    emit(io.format_matrix(pair.prime))
    emit("plucker:")
    emit(io.format_plucker(vec))
    emit("report:")
    from . import linalg
    emit("  rank: %d (expected %d)" % (linalg.rank(pair.full), net.n_boundary - 1))
    sums_ok = all(alternating_sums(row) == (Fraction(0), Fraction(0))
                  for row in pair.full)
    emit("  alternating_sums: %s" % ("ok" if sums_ok else "violated"))
    emit("  sign: %s" % ("uniform" if vec.sign_uniform else "mixed"))
    emit("ok")
    return 0


def cmd_twist(args, emit):
    mat = io.load_matrix(args.matrix, args.mode)
    tol = args.tol if args.mode == "float" else 0.0
    emit("# circal twist: %s" % args.matrix)
    emit("twist:")
    emit(io.format_matrix(twist(mat, tol)))
    emit("ok")
    return 0


def cmd_recover(args, emit):
    shape = io.load_network(args.shape)
    mat = io.load_matrix(args.matrix, args.mode)
    tol = args.tol if args.mode == "float" else 0.0
    recover = recover_from_response if args.source == "response" else recover_from_resistance
    result = recover(shape, mat, convention=args.convention, tol=tol)
    emit("# circal recover (--from %s): %s + %s" % (args.source, args.shape, args.matrix))
    for line in result.report_lines():
        emit(line)
    emit("ok")
    return 0


def cmd_verify(args, emit):
    net = io.load_network(args.network)
    emit("# circal verify: %s" % args.network)
    results = verify_network(net, seed=args.seed)
    for status, name, detail in results:
        emit("%s %s%s" % (status, name, (": " + detail) if detail else ""))
    if not suite_passed(results):
        emit("failures:")
        for status, name, detail in results:
            if status == "FAIL":
                emit("  %s: %s" % (name, detail))
        return 6
    emit("ok")
    return 0


def cmd_roundtrip(args, emit):
    shape = io.load_network(args.shape)
    report = validate_network(shape)
    if not report.ok:
        raise InvalidEmbedding(str(report))
    emit("# circal roundtrip: %s (seed=%d, trials=%d)" % (args.shape, args.seed, args.trials))
    failures = 0
    for trial in range(args.trials):
        rng = random.Random("%s:%d" % (args.seed, trial))
        weights = random_weights(shape, rng)
        net = shape.with_weights(weights)
        M = response_matrix(net)
        R = effective_resistance_matrix(net)
        try:
            via_m = recover_from_response(shape, M).weights
            via_r = recover_from_resistance(shape, R).weights
        except CircalError as exc:
            failures += 1
            emit("trial %d: FAIL %s: %s" % (trial, type(exc).__name__, exc))
            continue
        if via_m == weights and via_r == weights:
            emit("trial %d: ok (response, resistance)" % trial)
        else:
            failures += 1
            emit("trial %d: FAIL recovered weights differ" % trial)
        emit("  weights: %s" % " ".join("%s=%s" % (e, weights[e]) for e in sorted(weights)))
    emit("summary: %d/%d exact" % (args.trials - failures, args.trials))
    if failures:
        emit("error: %d round trips failed" % failures)
        return 5
    emit("ok")
    return 0


COMMANDS = {
    "forward": cmd_forward,
    "embed": cmd_embed,
    "twist": cmd_twist,
    "recover": cmd_recover,
    "verify": cmd_verify,
    "roundtrip": cmd_roundtrip,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    lines = []

    def emit(text):
        lines.append(str(text))

    def flush():
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)

    try:
        code = COMMANDS[args.command](args, emit)
    except OSError as exc:
        emit("error: %s" % exc)
        flush()
        return 1
    except CircalError as exc:
        emit("error: %s: %s" % (type(exc).__name__, exc))
        for klass, code in EXIT_CODES:
            if isinstance(exc, klass):
                flush()
                return code
        flush()
        return 1
    flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
