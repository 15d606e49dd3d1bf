"""``tropluk`` command line.

Exit codes: 0 success, 2 input error, 3 domain error, 4 transient cap hit.
Nodes are printed 1-based.
"""

import argparse
import sys

from . import __version__
from .eigen import eigenspace_for, full_eigenspace, is_luk_eigenvector
from .errors import NoEigenvectorsError, TransientCapExceeded, TroplukError
from .io import InputError, load_matrix, parse_vector, pretty, report
from .linalg import check_unit_matrix, shift
from .partitions import Partition, enumerate_secure_partitions, is_secure_partition, least_secure_partition
from .powers import attraction_membership, luk_power, luk_trajectory, orbit_period, power_period
from .scalar import format_scalar, is_finite, to_scalar
from .spectral import critical_structure, csr_decompose, kleene_star
from .tconvex import minimal_generators

EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_CAP = 4


def _nodes(indices):
    return [i + 1 for i in indices]


def _partition_data(part):
    return {"K": _nodes(part.K), "L": _nodes(part.L)}


def _walk_text(walk, weight):
    return "→".join(str(i + 1) for i in walk) + f" (weight {format_scalar(weight)})"


def _lambda_arg(args, required=True):
    if args.lam is None:
        if required:
            raise InputError(f"{args.command} needs --lambda")
        return None
    try:
        lam = to_scalar(args.lam)
    except TroplukError as exc:
        raise InputError(f"--lambda: {exc}") from None
    if not is_finite(lam) or not 0 <= lam <= 1:
        raise InputError(f"--lambda {args.lam} is outside [0, 1]")
    return lam


def _vector_arg(args, n):
    if args.x is None:
        raise InputError(f"{args.command} needs --x")
    return parse_vector(args.x, n)


def _parse_partition(text, n):
    side, sep, rest = text.partition("=")
    if not sep or side.strip().upper() not in ("K", "L"):
        raise InputError(f"partition argument {text!r} must look like L=1,2 or K=3")
    try:
        nodes = [int(s) for s in rest.split(",") if s.strip()]
    except ValueError:
        raise InputError(f"partition argument {text!r} has a non-integer node") from None
    if any(not 1 <= k <= n for k in nodes) or len(set(nodes)) != len(nodes):
        raise InputError(f"partition argument {text!r} names nodes outside 1..{n} or repeats one")
    zero_based = [k - 1 for k in nodes]
    if side.strip().upper() == "L":
        return Partition.from_L(n, zero_based)
    return Partition.from_K(n, zero_based)


def _generators_data(entry):
    if entry.kind == "background":
        return {"kind": "background", "box": entry.box}
    gens = entry.generators
    return {
        "kind": entry.kind,
        "u": gens.u,
        "v": [{"index": k + 1, "vector": v} for k, v in gens.v_list],
        "w": [{"index": k + 1, "vector": w} for k, w in gens.w_list],
    }


def cmd_spectral(doc, args):
    A = doc.matrix
    profile = critical_structure(A)
    out = {
        "rho": profile.rho,
        "critical_nodes": _nodes(profile.critical_nodes),
        "critical_edges": [_nodes(e) for e in profile.critical_edges],
        "components": [_nodes(c) for c in profile.components],
        "representatives": _nodes(profile.representatives),
        "cyclicity": profile.cyclicity,
    }
    if is_finite(profile.rho):
        out["star"] = kleene_star(shift(A, profile.rho))
        triple = csr_decompose(A, args.max_transient)
        out["csr"] = {
            "C": triple.C,
            "S": triple.S,
            "R": triple.R,
            "critical_indices": _nodes(triple.critical_indices),
            "transient": triple.transient,
        }
    if doc.labels:
        out["labels"] = list(doc.labels)
    return out


def cmd_eigen(doc, args):
    A = doc.matrix
    check_unit_matrix(A)
    lam = _lambda_arg(args)
    if args.partition is not None:
        part = _parse_partition(args.partition, A.nrows)
        out = {"partition": _partition_data(part), "lambda": lam}
        verdict = is_secure_partition(A, lam, part) if part.K else None
        if verdict is not None and not verdict.secure:
            out.update(
                secure=False,
                failed_condition=verdict.failed_condition,
                witness=_nodes(verdict.witness),
                witness_weight=verdict.weight,
                witness_text=_walk_text(verdict.witness, verdict.weight),
            )
            return out
        out["secure"] = True
        out["eigenspace"] = _generators_data(eigenspace_for(A, lam, part))
        return out
    rep = full_eigenspace(A, lam)
    out = {
        "lambda": lam,
        "partitions": [
            dict(_partition_data(e.partition), **_generators_data(e)) for e in rep.entries
        ],
        "least": _partition_data(rep.least),
        "greatest": rep.greatest,
    }
    if args.dedupe:
        pool = [v for e in rep.entries if e.generators is not None for v in e.generators.vectors()]
        out["deduplicated_generators"] = minimal_generators(pool)
    return out


def cmd_partitions(doc, args):
    A = doc.matrix
    check_unit_matrix(A)
    lam = _lambda_arg(args)
    if not 0 < lam < 1:
        raise InputError("partitions needs 0 < lambda < 1; use eigen for lambda = 0 or 1")
    return {
        "lambda": lam,
        "partitions": [_partition_data(p) for p in enumerate_secure_partitions(A, lam)],
        "least": _partition_data(least_secure_partition(A, lam)),
    }


def cmd_power(doc, args):
    t = 1 if args.t is None else args.t
    if t < 1:
        raise InputError("--t must be positive for powers")
    return {"t": t, "power": luk_power(doc.matrix, t)}


def cmd_orbit(doc, args):
    x = _vector_arg(args, doc.n)
    t = 1 if args.t is None else args.t
    if t < 0:
        raise InputError("--t must be nonnegative for orbits")
    return {"t": t, "trajectory": luk_trajectory(doc.matrix, x, t)}


def _period_data(rep):
    return {
        "transient": rep.transient,
        "period": rep.period,
        "regime": rep.regime,
        "cyclicity": rep.cyclicity,
        "rho": rep.rho,
        "samples": list(rep.samples),
    }


def cmd_period(doc, args):
    if args.x is not None:
        rep = orbit_period(doc.matrix, _vector_arg(args, doc.n), args.max_transient)
        return dict(_period_data(rep), sequence="orbit")
    return dict(_period_data(power_period(doc.matrix, args.max_transient)), sequence="powers")


def cmd_check(doc, args):
    x = _vector_arg(args, doc.n)
    lam = _lambda_arg(args, required=False)
    if lam is not None:
        return {"lambda": lam, "x": x, "eigenvector": is_luk_eigenvector(doc.matrix, lam, x)}
    return {"x": x, "attraction": attraction_membership(doc.matrix, x)}


COMMANDS = {
    "spectral": cmd_spectral,
    "eigen": cmd_eigen,
    "partitions": cmd_partitions,
    "power": cmd_power,
    "orbit": cmd_orbit,
    "period": cmd_period,
    "check": cmd_check,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tropluk", description="Exact max-plus and max-Lukasiewicz matrix analyses."
    )
    parser.add_argument("--version", action="version", version=f"tropluk {__version__}")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("matrix", help="JSON or CSV matrix document")
    parser.add_argument("--lambda", dest="lam", metavar="D", help="eigenvalue as an exact decimal")
    parser.add_argument("--t", type=int, metavar="N", help="power exponent or orbit length")
    parser.add_argument("--x", metavar="CSV", help="vector literal such as 1,0.8,0.7")
    parser.add_argument("--partition", metavar="L=...|K=...", help="1-based node list of L or K")
    parser.add_argument("--dedupe", action="store_true", help="add a minimal union of all generators")
    parser.add_argument("--max-transient", type=int, metavar="N", help="cap for periodicity searches")
    parser.add_argument("--format", choices=("json", "pretty"), default="json")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        doc = load_matrix(args.matrix)
        result = COMMANDS[args.command](doc, args)
    except InputError as exc:
        print(f"tropluk: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TransientCapExceeded as exc:
        print(f"tropluk: cap exceeded: {exc} (cap {exc.cap})", file=sys.stderr)
        return EXIT_CAP
    except (TroplukError, ZeroDivisionError) as exc:
        kind = "no eigenvectors" if isinstance(exc, NoEigenvectorsError) else "domain error"
        print(f"tropluk: {kind}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "json":
        text = report(args.command, doc.digest, result)
    else:
        text = pretty(args.command, result)
    sys.stdout.buffer.write(text.encode("utf-8"))
    sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
