"""Batch command line interface with byte-deterministic output.

Partitions and compositions are comma-separated integers; tableaux are
semicolon-separated rows of comma-separated entries.  JSON output is
compact with sorted keys, so identical invocations produce identical
bytes.  Exit codes: 0 success, 1 failed mathematical verification
(witness printed as JSON), 2 usage error.
"""

import argparse
import json
import sys

from .presentation import (
    VerificationError,
    anti_invariant_transfer,
    build_quotient,
    certify_basis,
    h_of_tableau,
    rel_equivalence,
)
from .reports import betti, components, poset_dot
from .tableaux import (
    Composition,
    Partition,
    Tableau,
    enumerate_column_strict,
    enumerate_semistandard,
    tableau_degree,
)


def _dump(data):
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _parse_ints(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(int(v) for v in text.split(","))


def parse_partition(text):
    try:
        return Partition(_parse_ints(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def parse_composition(text):
    try:
        return Composition(_parse_ints(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def parse_tableau(text):
    try:
        rows = [_parse_ints(row) for row in text.split(";") if row.strip()]
        return Tableau(rows)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _add_pair_args(sub):
    sub.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    sub.add_argument("--mu", type=parse_composition, required=True)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spaltenstein",
        description="Exact presentations and tableau combinatorics for "
        "partial flag varieties annihilated by a nilpotent.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list column-strict tableaux")
    _add_pair_args(p)
    p.add_argument("--semistandard", action="store_true")
    p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("degree", help="degree of one tableau")
    _add_pair_args(p)
    p.add_argument("--tableau", type=parse_tableau, required=True)

    p = sub.add_parser("basis", help="tableau basis elements as polynomials")
    _add_pair_args(p)
    p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("present", help="graded quotient presentation report")
    _add_pair_args(p)
    p.add_argument("--family", choices=("H", "E"), default="H")
    p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("hilbert", help="Hilbert series of the quotient")
    _add_pair_args(p)
    p.add_argument("--family", choices=("H", "E"), default="H")

    p = sub.add_parser("verify", help="basis, family equivalence and Betti checks")
    _add_pair_args(p)

    p = sub.add_parser("components", help="irreducible components and fibers")
    _add_pair_args(p)
    p.add_argument("--format", choices=("json", "table", "dot"), default="json")

    p = sub.add_parser("transfer", help="anti-invariant transfer check")
    _add_pair_args(p)

    p = sub.add_parser("sweep", help="verify all pairs up to a size bound")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--family", choices=("H", "E"), default="H")
    return parser


def _check_pair(lam, mu, parser):
    if lam.size() != mu.size():
        parser.error(f"|lambda|={lam.size()} and |mu|={mu.size()} differ")
    if lam.height() > len(mu):
        parser.error(f"lambda has more than {len(mu)} parts")


def _cmd_enumerate(args, out):
    tabs = (
        enumerate_semistandard(args.lam, args.mu)
        if args.semistandard
        else enumerate_column_strict(args.lam, args.mu)
    )
    if args.format == "json":
        out.write(_dump([T.to_json() for T in tabs]) + "\n")
    else:
        for T in tabs:
            out.write(";".join(",".join(map(str, row)) for row in T.rows) + "\n")
    return 0


def _cmd_degree(args, out):
    out.write(str(tableau_degree(args.tableau, args.mu)) + "\n")
    return 0


def _cmd_basis(args, out):
    tabs = enumerate_column_strict(args.lam, args.mu)
    items = []
    for T in tabs:
        items.append(
            {
                "tableau": T.to_json(),
                "degree": 2 * tableau_degree(T, args.mu),
                "poly": h_of_tableau(T, args.mu).to_json(),
            }
        )
    if args.format == "json":
        out.write(_dump(items) + "\n")
    else:
        for item in items:
            word = ",".join(str(v) for row in item["tableau"]["rows"] for v in row)
            out.write(f"{word}\tdeg {item['degree']}\n")
    return 0


def _cmd_present(args, out):
    cert = certify_basis(args.lam, args.mu, args.family)
    data = cert.to_json()
    if args.format == "json":
        out.write(_dump(data) + "\n")
    else:
        out.write(f"lambda {list(args.lam.parts)} mu {list(args.mu.parts)}\n")
        out.write(f"hilbert {data['hilbert']}\n")
        out.write(f"dimension {sum(data['hilbert'])}\n")
    return 0


def _cmd_hilbert(args, out):
    q = build_quotient(args.lam, args.mu, args.family)
    out.write(_dump({"hilbert": q.hilbert.to_json()}) + "\n")
    return 0


def _cmd_verify(args, out):
    witness = {}
    cert = certify_basis(args.lam, args.mu, "H")
    if not rel_equivalence(args.lam, args.mu):
        witness = {
            "check": "family_equivalence",
            "lambda": args.lam.to_json(),
            "mu": args.mu.to_json(),
        }
    elif betti(args.lam, args.mu) != cert.quotient.hilbert:
        witness = {
            "check": "betti",
            "betti": betti(args.lam, args.mu).to_json(),
            "hilbert": cert.quotient.hilbert.to_json(),
        }
    if witness:
        out.write(_dump(witness) + "\n")
        return 1
    out.write(
        _dump(
            {
                "certified": True,
                "dimension": cert.size(),
                "hilbert": cert.quotient.hilbert.to_json(),
            }
        )
        + "\n"
    )
    return 0


def _cmd_components(args, out):
    if args.format == "dot":
        out.write(poset_dot(args.lam, args.mu) + "\n")
        return 0
    comps = components(args.lam, args.mu)
    data = [
        {
            "tableau": S.to_json(),
            "dimension": dim,
            "fiber": [T.to_json() for T in fiber],
        }
        for S, dim, fiber in comps
    ]
    if args.format == "json":
        out.write(_dump(data) + "\n")
    else:
        for item in data:
            word = ",".join(str(v) for row in item["tableau"]["rows"] for v in row)
            out.write(f"{word}\tdim {item['dimension']}\tfiber {len(item['fiber'])}\n")
    return 0


def _cmd_transfer(args, out):
    report = anti_invariant_transfer(args.lam, args.mu)
    out.write(_dump(report.to_json()) + "\n")
    return 0


def _iter_pairs(d_max, n_max):
    for d in range(d_max + 1):
        top_n = min(n_max, d) if n_max is not None else d
        for n in range(0 if d == 0 else 1, top_n + 1):
            for lam_parts in _partitions(d, n):
                for mu_parts in _compositions(d, n):
                    yield Partition(lam_parts), Composition(mu_parts)


def _partitions(d, n, maxpart=None):
    if maxpart is None:
        maxpart = d
    if d == 0:
        yield ()
        return
    if n == 0:
        return
    for p in range(min(maxpart, d), 0, -1):
        for rest in _partitions(d - p, n - 1, p):
            yield (p,) + rest


def _compositions(d, n):
    if n == 0:
        if d == 0:
            yield ()
        return
    for first in range(d + 1):
        for rest in _compositions(d - first, n - 1):
            yield (first,) + rest


def _cmd_sweep(args, out):
    failures = 0
    for lam, mu in _iter_pairs(args.d_max, args.n_max):
        record = {"lambda": lam.to_json(), "mu": mu.to_json()}
        try:
            cert = certify_basis(lam, mu, args.family)
            record["hilbert"] = cert.quotient.hilbert.to_json()
            record["dimension"] = cert.size()
            record["certified"] = True
        except VerificationError as exc:
            record["certified"] = False
            record["witness"] = exc.witness
            failures += 1
        out.write(_dump(record) + "\n")
    return 1 if failures else 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "degree": _cmd_degree,
    "basis": _cmd_basis,
    "present": _cmd_present,
    "hilbert": _cmd_hilbert,
    "verify": _cmd_verify,
    "components": _cmd_components,
    "transfer": _cmd_transfer,
    "sweep": _cmd_sweep,
}


def main(argv=None, out=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    if hasattr(args, "lam"):
        _check_pair(args.lam, args.mu, parser)
    try:
        return _COMMANDS[args.command](args, out)
    except VerificationError as exc:
        out.write(_dump({"error": str(exc), "witness": exc.witness}) + "\n")
        return 1
    except ValueError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
