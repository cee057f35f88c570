"""Command line front end.

Exit codes: 0 success / consistent / accepted, 1 inconsistent / refuted,
2 usage, format or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle, roth, vecsolve
from .errors import ParseError, StarSylvError
from .exactmat import ExactMatrix, StarMode, format_matrix, parse_matrix
from .field import field_from_spec
from .model import gen_consistent, gen_perturbed, parse_system, serialize_system

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _matrix_json(M):
    return [[M.field.format(x) for x in M.row(i)] for i in range(M.rows)]


def _emit(report, as_json, out):
    if as_json:
        payload = {k: (_matrix_json(v) if isinstance(v, ExactMatrix) else
                       [_matrix_json(x) for x in v] if isinstance(v, list) and v
                       and isinstance(v[0], ExactMatrix) else v)
                   for k, v in report.items()}
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    for key, value in report.items():
        if isinstance(value, ExactMatrix):
            out.write(f"{key}:\n{format_matrix(value)}")
        elif isinstance(value, list) and value and isinstance(value[0], ExactMatrix):
            out.write(f"{key}:\n")
            for M in value:
                out.write(format_matrix(M))
        elif isinstance(value, (list, tuple)):
            out.write(f"{key}: {' '.join(str(_lower(v)) for v in value)}\n")
        else:
            out.write(f"{key}: {_lower(value)}\n")


def _lower(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "n/a"
    return v


def _read(path):
    with open(path) as fh:
        return fh.read()


def _load_system(args):
    return parse_system(_read(args.path), allow_char2=args.probe_char2_enable)


def _load_matrix(path, fld):
    return parse_matrix(_read(path), fld)


# commands

def cmd_solve(args, out):
    sys_ = _load_system(args)
    verdict = vecsolve.solve(sys_)
    if verdict.consistent:
        sol = verdict.solutions
        report = {"verdict": "consistent", "dim": sol.dim, "X": sol.particular}
        if args.basis:
            report["homogeneous_basis"] = list(sol.homogeneous_basis)
        _emit(report, args.json, out)
        return EXIT_OK
    _emit({"verdict": "inconsistent", "rank": verdict.rank,
           "rank_augmented": verdict.rank_augmented}, args.json, out)
    return EXIT_NO


def cmd_witness(args, out):
    sys_ = _load_system(args)
    X = _load_matrix(args.solution, sys_.field)
    w = roth.witness_from_solution(sys_, X)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(format_matrix(w.S))
    _emit({"witness": "accepted" if w.accepted else "refuted", "S": w.S}, args.json, out)
    return EXIT_OK if w.accepted else EXIT_NO


def cmd_verify(args, out):
    sys_ = _load_system(args)
    S = _load_matrix(args.s, sys_.field)
    w = roth.verify_congruence(sys_, S)
    _emit({"witness": "accepted" if w.accepted else "refuted",
           "invertible": w.invertible,
           "per_equation_ok": list(w.per_equation_ok)}, args.json, out)
    return EXIT_OK if w.accepted else EXIT_NO


def cmd_extract(args, out):
    sys_ = _load_system(args)
    X = roth.extract_solution(sys_)
    if X is None:
        _emit({"verdict": "inconsistent", "target_in_image": False}, args.json, out)
        return EXIT_NO
    _emit({"verdict": "consistent", "target_in_image": True, "X": X}, args.json, out)
    return EXIT_OK


def cmd_analyze(args, out):
    sys_ = _load_system(args)
    S = _load_matrix(args.s, sys_.field) if args.s else None
    report = roth.check_claims(sys_, S).as_dict()
    _emit(report, args.json, out)
    checked = [report[k] for k in ("claim_i", "claim_ii", "claim_iii", "claim_iv",
                                   "s_twist", "rank_nullity_ok")]
    return EXIT_OK if all(v is not False for v in checked) else EXIT_NO


def cmd_gen(args, out):
    fld = field_from_spec(args.field, allow_char2=args.probe_char2_enable)
    mode = StarMode.from_str(args.star)
    seed = 0 if args.seed is None else args.seed
    sys_, X = gen_consistent(fld, mode, args.m, args.n, args.ell, seed, args.entry_bound)
    if args.perturb is not None:
        sys_ = gen_perturbed(sys_, args.perturb, args.entry_bound)
    text = serialize_system(sys_)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    if args.solution_out:
        with open(args.solution_out, "w") as fh:
            fh.write(format_matrix(X))
    return EXIT_OK


def cmd_oracle(args, out):
    sys_ = _load_system(args)
    v = oracle.brute_force_consistency(sys_, cap=args.cap)
    _emit({"verdict": "consistent" if v.consistent else "inconsistent",
           "solutions": v.solutions}, args.json, out)
    return EXIT_OK if v.consistent else EXIT_NO


def cmd_probe(args, out):
    seed = 0 if args.seed is None else args.seed
    report = oracle.probe_char2(args.max_total_dim, seed, args.samples,
                                enabled=args.probe_char2_enable, max_ell=args.max_ell,
                                dump_dir=args.dump_dir)
    if args.json:
        out.write(json.dumps({
            "instances": [{"seed": r.seed, "m": r.m, "n": r.n, "ell": r.ell,
                           "a_holds": r.a_holds, "b_holds": r.b_holds} for r in report.instances],
            "anomalies": len(report.anomalies),
            "dumped": report.dumped,
        }, indent=2) + "\n")
    else:
        out.write(report.to_text())
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable report")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--probe-char2-enable", action="store_true",
                        help="allow GF(2), which the consistency theorem excludes")

    parser = argparse.ArgumentParser(prog="starsylv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="decide consistency directly")
    p.add_argument("path")
    p.add_argument("--basis", action="store_true", help="also print the homogeneous basis")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("witness", parents=[common], help="congruence witness from a solution")
    p.add_argument("path")
    p.add_argument("--solution", required=True, help="matrix file holding X")
    p.add_argument("--out", help="write S to this matrix file")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="check a congruence witness")
    p.add_argument("path")
    p.add_argument("--s", required=True, help="matrix file holding S")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extract", parents=[common], help="solution from the pair space D")
    p.add_argument("path")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("analyze", parents=[common], help="dimensions of D, D0 and the claims")
    p.add_argument("path")
    p.add_argument("--s", help="matrix file holding an accepted witness S")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", parents=[common], help="generate a planted system")
    p.add_argument("--field", nargs="+", default=["Q"], help="Q, QI or GF <p>")
    p.add_argument("--star", default="T", choices=["T", "H"])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--entry-bound", type=int, default=9)
    p.add_argument("--perturb", type=int, metavar="SEED", help="perturb C_1 with this seed")
    p.add_argument("--out", help="write the system here instead of stdout")
    p.add_argument("--solution-out", help="write the planted X here")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", parents=[common], help="brute-force consistency over GF(p)")
    p.add_argument("path")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("probe-char2", parents=[common], help="explore GF(2) exhaustively")
    p.add_argument("--max-total-dim", type=int, default=3)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--max-ell", type=int, default=2)
    p.add_argument("--dump-dir")
    p.set_defaults(func=cmd_probe)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
    except (StarSylvError, OSError, ValueError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
    return EXIT_ERROR


def entry():
    sys.exit(main())
