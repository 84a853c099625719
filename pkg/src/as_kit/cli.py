"""Command-line interface: ``as-kit <command> ...``.

Exit codes: 0 success, 1 internal inconsistency (a proved statement failed on
this input, which indicates a bug), 2 user input error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .asclass import (
    as_character,
    is_vanishing,
    theorem_conditions,
    total_m_class,
)
from .builder import (
    BuildError,
    build_vanishing_family,
    c2_filter,
    family_report,
    finiteness_demo,
    integrality_scalar,
    nilpotence_check,
)
from .cohring import builtin_ring
from .cyclotomic import check_odd_prime, is_prime, to_complex
from .formats import FormatError, bundles_from_json, dumps, load_ring
from .numthy import predicted_rank, prime_profile, tau_rank
from .symfun import tau_table

EXIT_OK, EXIT_INCONSISTENT, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _frac(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def _cfloat(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}j"


def _prime_arg(text: str) -> int:
    try:
        p = int(text)
        check_odd_prime(p)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"{text!r} is not an odd prime") from None
    return p


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    Path(output).write_text(text)


def _odd_primes(pmax: int) -> list:
    return [p for p in range(3, pmax + 1) if is_prime(p)]


# -- tau-table -------------------------------------------------------------

def cmd_tau_table(args) -> int:
    table = tau_table(args.p, args.weight)
    rows = list(table.rows())
    if args.format == "json":
        out = []
        for k, lam, v in rows:
            item = {"p": args.p, "k": k, "partition": list(lam), "value": v.to_json()}
            if args.float:
                z = to_complex(v)
                item["float"] = [z.real, z.imag]
            out.append(item)
        _emit(dumps(out), args.output)
        return EXIT_OK
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["p", "k", "partition"] + [f"c{i}" for i in range(args.p - 1)]
    if args.float:
        header.append("float")
    w.writerow(header)
    for k, lam, v in rows:
        row = [args.p, k, "(" + ",".join(map(str, lam)) + ")"] + [_frac(c) for c in v.coords]
        if args.float:
            row.append(_cfloat(to_complex(v)))
        w.writerow(row)
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


# -- relations / span-dim / classify-primes ----------------------------------

def _relation_row(p: int, r: int) -> dict:
    prof = prime_profile(p)
    res = tau_rank(p, r)
    return {
        "p": p,
        "t": prof.t,
        "parity": prof.parity,
        "predicted_dim": predicted_rank(prof, r),
        "computed_rank": res.rank,
        "kernel_dim": res.kernel_dim,
        "sample_relation": "(" + ",".join(map(str, res.kernel[0])) + ")" if res.kernel else "",
    }


def cmd_relations(args) -> int:
    primes = _odd_primes(args.pmax)
    if args.jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_relation_row, primes, [args.r] * len(primes)))
    else:
        rows = [_relation_row(p, args.r) for p in primes]
    rows.sort(key=lambda row: row["p"])
    cols = ["p", "t", "parity", "predicted_dim", "computed_rank", "kernel_dim", "sample_relation"]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    _emit(buf.getvalue(), args.output)
    bad = [row["p"] for row in rows if row["predicted_dim"] != row["computed_rank"]]
    if bad:
        print(f"dimension mismatch for p in {bad}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_span_dim(args) -> int:
    row = _relation_row(args.p, args.r)
    res = tau_rank(args.p, args.r)
    row["kernel"] = [list(v) for v in res.kernel]
    if args.format == "json":
        _emit(dumps(row), args.output)
    else:
        lines = [f"{key}: {row[key]}" for key in ("p", "t", "parity", "predicted_dim", "computed_rank", "kernel_dim")]
        lines += [f"relation: {tuple(v)}" for v in res.kernel]
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if row["predicted_dim"] == row["computed_rank"] else EXIT_INCONSISTENT


def cmd_classify_primes(args) -> int:
    rows = []
    bad = []
    for p in _odd_primes(args.pmax):
        prof = prime_profile(p)
        rows.append({
            "p": p,
            "residue_mod_8": prof.residue_mod_8,
            "t": prof.t,
            "parity": prof.parity,
            "u": "" if prof.u is None else prof.u,
        })
        if prof.residue_mod_8 == 7 and prof.parity != "odd":
            bad.append(p)
    if args.format == "json":
        _emit(dumps(rows), args.output)
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["p", "residue_mod_8", "t", "parity", "u"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        _emit(buf.getvalue(), args.output)
    if bad:
        print(f"p = 7 mod 8 with even order of 2: {bad}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


# -- bundle commands --------------------------------------------------------

def _read_bundles(path: str) -> list:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno} "
                         f"(char {exc.pos}): {exc.msg}") from None
    return bundles_from_json(data, Path(path).parent)


def _bundle_report(b, with_float: bool, trivial_l: bool = False) -> dict:
    total = total_m_class(b, 1)
    verdict = is_vanishing(b)
    cond1, cond2 = theorem_conditions(b)
    L = b.ring.one() if trivial_l else b.ring.l_class()
    chars = []
    for n in range(1, b.p):
        v = as_character(b, L, n)
        item = {"n": n, "value": v.to_json()}
        if with_float:
            z = to_complex(v)
            item["float"] = [z.real, z.imag]
        chars.append(item)
    return {
        "ranks": list(b.ranks),
        "total_class": total.to_json(),
        "total_class_text": str(total),
        "vanishing": verdict,
        "cond1": cond1,
        "cond2": cond2,
        "consistent": verdict == (cond1 and cond2),
        "characters": chars,
    }


def _report_text(i: int, rep: dict, with_float: bool) -> str:
    lines = [
        f"bundle {i}: ranks {tuple(rep['ranks'])}",
        f"  total class: {rep['total_class_text']}",
        f"  vanishing: {rep['vanishing']}",
        f"  conditions: cond1={rep['cond1']} cond2={rep['cond2']}",
        f"  consistent: {rep['consistent']}",
        "  characters:",
    ]
    for item in rep["characters"]:
        coords = ", ".join(f"{a}/{b}" for a, b in item["value"]["coords"])
        line = f"    n={item['n']}: [{coords}]"
        if with_float:
            line += f"  ~ {_cfloat(complex(*item['float']))}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _run_bundle_checks(args, with_float: bool) -> int:
    bundles = _read_bundles(args.bundle)
    reports = []
    status = EXIT_OK
    for b in bundles:
        rep = _bundle_report(b, with_float, args.trivial_l)
        reports.append(rep)
        if not rep["consistent"]:
            status = EXIT_INCONSISTENT
            if args.mode == "fail-fast":
                break
    if args.format == "json":
        _emit(dumps(reports if len(reports) != 1 else reports[0]), args.output)
    else:
        _emit("".join(_report_text(i, rep, with_float) for i, rep in enumerate(reports, start=1)), args.output)
    if status == EXIT_INCONSISTENT:
        print("vanishing verdict disagrees with the theorem conditions", file=sys.stderr)
    return status


def cmd_check_theorem(args) -> int:
    return _run_bundle_checks(args, args.float)


def cmd_as_class(args) -> int:
    return _run_bundle_checks(args, args.float)


def _parse_beta(ring, text: str | None):
    if text is None:
        gens = ring.basis_in_degree(2)
        if not gens:
            raise UsageError("ring has no degree-2 class; pass --beta")
        return ring.gen(gens[0])
    data = {}
    for part in text.split(","):
        if not part.strip():
            continue
        if "=" not in part:
            raise UsageError(f"--beta expects name=coefficient pairs, got {part!r}")
        name, coeff = part.split("=", 1)
        data[name.strip()] = coeff.strip()
    return ring.element(data)


def cmd_build_bundle(args) -> int:
    ring = load_ring(args.ring, args.p)
    beta = _parse_beta(ring, args.beta)
    h = (args.p - 1) // 2
    mult = args.mult if args.mult is not None else [1] * h
    if len(mult) != h:
        raise UsageError(f"--mult needs {h} entries for p={args.p}")
    prof = prime_profile(args.p)
    family = build_vanishing_family(ring, beta, mult, args.relation, args.count)
    report = family_report(family)
    nil = nilpotence_check(beta, mult, prof.u if prof.u is not None else h)
    report["nilpotence"] = {"N": nil.N, "eligible_k": list(nil.eligible_k), "sufficient": nil.sufficient}
    report["u"] = prof.u
    if beta.is_rational():
        report["integrality_scalar"] = integrality_scalar(beta, max(mult))
    ring_ref = args.ring if isinstance(args.ring, str) and _is_builtin(args.ring, args.p) else ring.to_json()
    out = {"bundles": [b.to_json(ring_ref) for b in family], "report": report}
    _emit(dumps(out), args.output)
    return EXIT_OK if report["all_ok"] else EXIT_INCONSISTENT


def _is_builtin(name: str, p: int) -> bool:
    try:
        builtin_ring(name, p)
        return True
    except ValueError:
        return False


def cmd_finiteness_demo(args) -> int:
    sols = finiteness_demo(args.bound)
    out = {"bound": args.bound, "solutions": [list(s) for s in sols]}
    status = EXIT_OK
    if args.ring_bound is not None:
        admitted = c2_filter(args.ring_bound, args.p)
        expected = [s for s in finiteness_demo(args.ring_bound)]
        out["ring_check"] = {"p": args.p, "bound": args.ring_bound,
                             "admitted": [list(s) for s in admitted],
                             "matches": sorted(admitted) == sorted(expected)}
        if not out["ring_check"]["matches"]:
            status = EXIT_INCONSISTENT
    if args.format == "json":
        _emit(dumps(out), args.output)
    else:
        lines = [f"x^2 - y^2 = 1 with |x|,|y| <= {args.bound}: {sols}"]
        if "ring_check" in out:
            rc = out["ring_check"]
            lines.append(f"c2 filter on CP2#-CP2 (p={rc['p']}, |x|,|y| <= {rc['bound']}): "
                         f"{[tuple(s) for s in rc['admitted']]} matches={rc['matches']}")
        _emit("\n".join(lines) + "\n", args.output)
    return status


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="as-kit", description=__doc__.splitlines()[0])
    parser.add_argument("--weight-cap", type=int, help="override the global truncation cap (AS_KIT_WEIGHT_CAP)")
    sub = parser.add_subparsers(dest="command", required=True)

    def out_opt(sp):
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")

    sp = sub.add_parser("tau-table", help="tau(lambda)(zeta^k) for all partitions up to a weight")
    sp.add_argument("--p", type=_prime_arg, required=True)
    sp.add_argument("--weight", type=int, default=2)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--float", action="store_true", help="add a floating sanity column")
    out_opt(sp)
    sp.set_defaults(func=cmd_tau_table)

    sp = sub.add_parser("relations", help="Ewing span dimensions and relations over a prime range")
    sp.add_argument("--pmax", type=int, required=True)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--jobs", type=int, default=1)
    out_opt(sp)
    sp.set_defaults(func=cmd_relations)

    sp = sub.add_parser("span-dim", help="span dimension and relations for one prime")
    sp.add_argument("--p", type=_prime_arg, required=True)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    out_opt(sp)
    sp.set_defaults(func=cmd_span_dim)

    sp = sub.add_parser("classify-primes", help="order of 2 modulo odd primes")
    sp.add_argument("--pmax", type=int, required=True)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    out_opt(sp)
    sp.set_defaults(func=cmd_classify_primes)

    for name, func, helptext in (
        ("check-theorem", cmd_check_theorem, "compare the vanishing verdict with the Chern-class criterion"),
        ("as-class", cmd_as_class, "total class, verdict, conditions and character table"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("bundle", help="bundle JSON file (one bundle, a list, or build-bundle output)")
        sp.add_argument("--mode", choices=["fail-fast", "report-all"], default="report-all")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--float", action="store_true")
        sp.add_argument("--trivial-l", action="store_true",
                        help="use L = 1 in the character table instead of the ring's L class")
        out_opt(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("build-bundle", help="family of bundles with vanishing class")
    sp.add_argument("--p", type=_prime_arg, required=True)
    sp.add_argument("--ring", default="s2", help="builtin ring name or ring JSON path")
    sp.add_argument("--mult", type=_int_list, help="eigenbundle ranks d_1,...,d_h")
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--beta", help="degree-2 class as name=coeff,... (default: first degree-2 generator)")
    sp.add_argument("--relation", type=_int_list, help="integer relation u_1,...,u_h (default: computed)")
    out_opt(sp)
    sp.set_defaults(func=cmd_build_bundle)

    sp = sub.add_parser("finiteness-demo", help="integer solutions of x^2 - y^2 = 1")
    sp.add_argument("--bound", type=int, default=10**6)
    sp.add_argument("--ring-bound", type=int, help="also run the c2 filter on CP2#-CP2 up to this bound")
    sp.add_argument("--p", type=_prime_arg, default=7)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    out_opt(sp)
    sp.set_defaults(func=cmd_finiteness_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.weight_cap is not None:
        if args.weight_cap < 1:
            print("error: --weight-cap must be positive", file=sys.stderr)
            return EXIT_USAGE
        os.environ["AS_KIT_WEIGHT_CAP"] = str(args.weight_cap)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, FormatError, BuildError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
