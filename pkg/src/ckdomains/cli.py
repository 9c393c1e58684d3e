"""The ``ck`` command line tool.

Exit codes: 0 on success, 2 when a certificate fails verification, 3 when
no construction is known for the requested parameters.
"""

import argparse
import csv
import json
import logging
import sys

from .additive import plan_ck, richert_decompose
from .atoms import build_model, count_atoms
from .errors import NoWitnessError
from .primes import sieve
from .repunit import repunits_up_to, represent_as_repunits
from .semigroup import TwoGeneratorSemigroup, coverage_char_q
from .survey import (
    CKWitness,
    build_witness,
    survey_goldbach_shift,
    survey_repunit_pairs,
    survey_schinzel,
    verify_witness,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 2
EXIT_NO_WITNESS = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ck",
        description="Witnesses and atom counts for primefree Cohen-Kaplansky domains",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("primes", help="list or count primes up to a limit")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("decompose", help="additive decompositions")
    dsub = p.add_subparsers(dest="scheme", required=True)
    d = dsub.add_parser("richert", help="n as a sum of distinct p+1")
    d.add_argument("n", type=int)

    p = sub.add_parser("plan", help="split n into m tagged summands")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("repunit", help="generalized repunit values")
    rsub = p.add_subparsers(dest="action", required=True)
    r = rsub.add_parser("list", help="repunits up to a limit")
    r.add_argument("--limit", type=int, required=True)
    r = rsub.add_parser("represent", help="n as a sum of m repunit values")
    r.add_argument("n", type=int)
    r.add_argument("m", type=int)
    r.add_argument("--json", action="store_true")

    p = sub.add_parser("frobenius", help="two-generator representability")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("n", type=int, nargs="?")

    p = sub.add_parser("coverage", help="block coverage over a characteristic")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("atoms", help="count atoms of a local model")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument(
        "--subring",
        default="constants",
        help='"constants" or a path to a JSON basis file',
    )
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("survey", help="range scans")
    ssub = p.add_subparsers(dest="scan", required=True)
    s = ssub.add_parser("schinzel", help="odd n missing (p1^2+p1+1)+(p2+1)")
    s.add_argument("--limit", type=int, required=True)
    s.add_argument("--out", help="write exceptions as CSV")
    s.add_argument("--resume", help="checkpoint file (JSON), created if missing")
    s = ssub.add_parser("repunit-pairs", help="recheck exceptions as repunit pairs")
    s.add_argument("--from", dest="source", required=True, help="CSV of exceptions")
    s = ssub.add_parser("goldbach", help="even n with n+2 a sum of distinct primes")
    s.add_argument("--limit", type=int, required=True)

    p = sub.add_parser("witness", help="build or verify certificates")
    wsub = p.add_subparsers(dest="action", required=True)
    w = wsub.add_parser("build", help="witness for n atoms, m maximal ideals")
    w.add_argument("n", type=int)
    w.add_argument("m", type=int)
    w.add_argument("--char", type=int, default=0, help="0 or a prime power")
    w.add_argument("--json", action="store_true")
    w = wsub.add_parser("verify", help="verify a witness JSON file")
    w.add_argument("file")
    return parser


def _print_report(report) -> None:
    print(f"kind: {report.kind}")
    print(f"limit: {report.limit}")
    print(f"exceptions: {report.exception_count}")
    if report.max_exception is not None:
        print(f"max exception: {report.max_exception}")
    if report.density is not None:
        print(f"density: {report.density:.6f}")
    print(f"elapsed ms: {report.elapsed_ms:.0f}")


def _write_csv(report, path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "kind", "detail"])
        writer.writerows(report.csv_rows())


def _cmd_survey_schinzel(args) -> int:
    state = None
    if args.resume:
        try:
            with open(args.resume) as fh:
                state = json.load(fh)
        except FileNotFoundError:
            state = None

        def progress(next_n, exceptions):
            with open(args.resume, "w") as fh:
                json.dump({"next": next_n, "exceptions": exceptions}, fh)

    else:
        progress = None
    report = survey_schinzel(args.limit, state=state, progress=progress)
    if args.out:
        _write_csv(report, args.out)
    _print_report(report)
    return EXIT_OK


def _cmd_survey_repunit_pairs(args) -> int:
    with open(args.source, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or header[0] != "n":
            raise ValueError(f"{args.source} is not an exception CSV")
        exceptions = [int(row[0]) for row in reader]
    report = survey_repunit_pairs(exceptions)
    _print_report(report)
    return EXIT_OK if not report.exceptions else EXIT_VERIFY_FAILED


def _cmd_witness_verify(args) -> int:
    with open(args.file) as fh:
        data = json.load(fh)
    try:
        witness = CKWitness.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        print(f"malformed witness: {exc}")
        return EXIT_VERIFY_FAILED
    result = verify_witness(witness)
    if result:
        print(f"ok: CK({witness.n}, {witness.m}; {witness.characteristic})")
        return EXIT_OK
    for violation in result.violations:
        print(f"violation: {violation}")
    return EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(message)s")
    try:
        if args.command == "primes":
            table = sieve(args.limit)
            if args.count_only:
                print(table.count())
            else:
                for p in table:
                    print(p)
        elif args.command == "decompose":
            dec = richert_decompose(args.n)
            dec.validate()
            parts = " + ".join(f"({p}+1)" for p in dec.parts)
            print(f"{dec.n} = {parts}")
        elif args.command == "plan":
            plan = plan_ck(args.n, args.m)
            plan.validate()
            if args.json:
                print(json.dumps(plan.as_json()))
            else:
                print(" + ".join(str(p.value) for p in plan.parts))
        elif args.command == "repunit":
            if args.action == "list":
                for r in repunits_up_to(args.limit):
                    print(f"{r.value} = (q^d-1)/(q-1) for q={r.q.value}, d={r.d}")
            else:
                reps = represent_as_repunits(args.n, args.m)
                if reps is None:
                    print(f"no representation of {args.n} as {args.m} repunit values")
                    return EXIT_NO_WITNESS
                if args.json:
                    print(
                        json.dumps(
                            [
                                {"value": r.value, "q": r.q.value, "d": r.d}
                                for r in reps
                            ]
                        )
                    )
                else:
                    print(" + ".join(str(r.value) for r in reps))
        elif args.command == "frobenius":
            sg = TwoGeneratorSemigroup(args.x, args.y)
            if args.n is None:
                print(f"gcd: {sg.gcd}")
                print(f"representable threshold: {sg.threshold}")
                if sg.frobenius is not None:
                    print(f"frobenius number: {sg.frobenius}")
            else:
                ab = sg.representable(args.n)
                if ab is None:
                    print(f"{args.n} is not representable")
                else:
                    a, b = ab
                    print(f"{args.n} = {a}*{args.x} + {b}*{args.y}")
        elif args.command == "coverage":
            plan = coverage_char_q(args.q, args.n)
            if plan is None:
                print(f"no coverage of {args.n} over characteristic {args.q}")
                return EXIT_NO_WITNESS
            if args.json:
                print(json.dumps(plan.as_json()))
            else:
                print(" + ".join(str(p.value) for p in plan.parts))
        elif args.command == "atoms":
            subring = args.subring
            if subring != "constants":
                with open(subring) as fh:
                    subring = json.load(fh)
            report = count_atoms(build_model(args.q, args.d, args.e, subring))
            if args.json:
                print(json.dumps(report.as_json()))
            else:
                print(f"atoms: {report.atom_count}")
                if report.formula_count is not None:
                    print(f"formula: {report.formula_count}")
                if report.prime_element_exists:
                    print("degenerate: model is a discrete valuation ring")
        elif args.command == "survey":
            if args.scan == "schinzel":
                return _cmd_survey_schinzel(args)
            if args.scan == "repunit-pairs":
                return _cmd_survey_repunit_pairs(args)
            report = survey_goldbach_shift(args.limit)
            _print_report(report)
        elif args.command == "witness":
            if args.action == "verify":
                return _cmd_witness_verify(args)
            witness = build_witness(args.n, args.m, args.char)
            result = verify_witness(witness)
            if not result:
                for violation in result.violations:
                    print(f"violation: {violation}")
                return EXIT_VERIFY_FAILED
            if args.json:
                print(json.dumps(witness.as_json()))
            else:
                counts = " + ".join(str(b.atom_count) for b in witness.blocks)
                print(
                    f"CK({witness.n}, {witness.m}; {witness.characteristic}) "
                    f"via {witness.theorem_tag}: {counts}"
                )
    except NoWitnessError as exc:
        print(f"no construction known: {exc} (failing hypothesis: {exc.hypothesis})")
        return EXIT_NO_WITNESS
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
