"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 precision exhausted, 64 usage error.
Machine output is JSON Lines with big integers as decimal strings; timing goes
to a trailer line on stderr so stdout is byte-for-byte reproducible.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import applications as app
from .embeddings import MAX_BITS, embed, isolate_roots
from .interval import PrecisionExhausted
from .ring import FieldParam, RingElt, conjugate, norm, trace, verify_symbolic_identities
from .small_norm import classify, enumerate_small_norm, verify_case_norms, verify_table1, verify_theorem
from .units import reduce

EXIT_OK, EXIT_FAIL, EXIT_PRECISION, EXIT_USAGE = 0, 1, 2, 64
BITS_ENV = "SIMPLEST_CUBIC_BITS"
MIN_BITS = 16

IDENTITY_GROUPS = ("norm_form", "determinant", "discriminant", "trace_recovery", "cases", "table1")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def _a_value(text: str) -> int:
    try:
        a = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if a < 1:
        raise argparse.ArgumentTypeError(f"a must be >= 1, got {a}")
    return a


def _a_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(p) for p in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    if not 1 <= lo <= hi:
        raise argparse.ArgumentTypeError(f"need 1 <= LO <= HI, got {text!r}")
    return lo, hi


def _bits(text: str) -> int:
    b = int(text)
    if not MIN_BITS <= b <= MAX_BITS:
        raise argparse.ArgumentTypeError(f"precision must lie in [{MIN_BITS}, {MAX_BITS}]")
    return b


def _coeffs(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected r,s,t integers, got {text!r}")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected exactly three coefficients r,s,t")
    return parts


def _rational(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")
    if q <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return q


def _default_bits() -> int:
    env = os.environ.get(BITS_ENV)
    if env is None:
        return 64
    try:
        return _bits(env)
    except (ValueError, argparse.ArgumentTypeError):
        raise UsageError(f"{BITS_ENV}={env!r} is not a valid precision")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="simplest-cubic", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_a(sp, range_ok=False):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--a", type=_a_value)
        if range_ok:
            g.add_argument("--a-range", type=_a_range, metavar="LO:HI")

    def add_common(sp, formats=("json", "text")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")

    sp = sub.add_parser("verify-theorem", help="enumerate and classify |N| <= 2a+3")
    add_a(sp, range_ok=True)
    sp.add_argument("--bits", type=_bits)
    sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    add_common(sp)

    sp = sub.add_parser("verify-identities", help="symbolic identity, case and table checks")
    sp.add_argument("--only", choices=IDENTITY_GROUPS)
    add_common(sp, ("text", "json"))

    sp = sub.add_parser("scan", help="scan a-ranges for the corollary conditions")
    sp.add_argument("--criterion", choices=(app.COR1, app.COR2), required=True)
    sp.add_argument("--a-range", type=_a_range, required=True, metavar="LO:HI")
    add_common(sp, ("json", "text", "csv"))

    for name in ("norm", "trace", "conjugate"):
        sp = sub.add_parser(name, help=f"{name} of r + s*alpha + t*alpha'")
        add_a(sp)
        sp.add_argument("--coeffs", type=_coeffs, required=True, metavar="R,S,T")
        if name == "conjugate":
            sp.add_argument("--k", type=int, default=1)
        add_common(sp, ("text", "json"))

    sp = sub.add_parser("roots", help="certified root enclosures")
    add_a(sp)
    sp.add_argument("--bits", type=_bits)
    add_common(sp)

    sp = sub.add_parser("reduce", help="multiply by a unit into the c1/c2 box")
    add_a(sp)
    sp.add_argument("--coeffs", type=_coeffs, required=True, metavar="R,S,T")
    sp.add_argument("--c1", type=_rational, default=Fraction(1))
    sp.add_argument("--c2", type=_rational, default=Fraction(1))
    sp.add_argument("--bits", type=_bits)
    add_common(sp)

    sp = sub.add_parser("enumerate", help="list elements with 0 < |N| <= n_max")
    add_a(sp)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--bits", type=_bits)
    add_common(sp)

    sp = sub.add_parser("extfield", help="defining sextic of the quadratic generator")
    add_a(sp)
    sp.add_argument("--which", choices=(app.COR1, app.COR2), required=True)
    add_common(sp)
    return p


def _fix_negative_values(argv: list[str]) -> list[str]:
    # "--coeffs -1,1,0" would otherwise be read as an option
    out = []
    it = iter(range(len(argv)))
    for i in it:
        tok = argv[i]
        if tok in ("--coeffs", "--c1", "--c2") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            next(it, None)
        else:
            out.append(tok)
    return out


def _a_values(args) -> list[int]:
    if getattr(args, "a_range", None):
        lo, hi = args.a_range
        return list(range(lo, hi + 1))
    return [args.a]


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _theorem_worker(job: tuple[int, int]) -> dict:
    a, bits = job
    param = FieldParam(a)
    report = verify_theorem(param, isolate_roots(param, bits))
    return report.to_json()


def _theorem_text(rec: dict) -> str:
    st = rec["stats"]
    status = "verified" if rec["verified"] else "COUNTEREXAMPLE"
    return (f"a={rec['a']} m={rec['m']} n_max={rec['n_max']} {status} "
            f"elements={len(rec['elements'])} integer={st['integer']} "
            f"alpha_minus_one={st['alpha_minus_one']} counterexamples={len(rec['counterexamples'])}")


def cmd_verify_theorem(args, out) -> int:
    bits = args.bits or _default_bits()
    jobs = [(a, bits) for a in _a_values(args)]
    start = time.perf_counter()
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = pool.map(_theorem_worker, jobs, chunksize=max(1, len(jobs) // (4 * args.jobs)))
            records = list(records)
    else:
        records = [_theorem_worker(j) for j in jobs]
    failures = 0
    for rec in records:
        failures += not rec["verified"]
        out.write((_dump(rec) if args.format == "json" else _theorem_text(rec)) + "\n")
    sys.stderr.write(_dump({"trailer": True, "records": len(records), "failures": failures,
                            "wall_time_s": round(time.perf_counter() - start, 3)}) + "\n")
    return EXIT_FAIL if failures else EXIT_OK


def identity_checks(only: str | None):
    groups = {
        "norm_form": lambda: [c for c in verify_symbolic_identities().checks if c.name == "norm_form"],
        "determinant": lambda: [c for c in verify_symbolic_identities().checks if c.name == "determinant"],
        "discriminant": lambda: [c for c in verify_symbolic_identities().checks if c.name == "discriminant"],
        "trace_recovery": lambda: [c for c in verify_symbolic_identities().checks
                                   if c.name.startswith("trace_recovery")],
        "cases": lambda: verify_case_norms().checks,
        "table1": lambda: verify_table1().checks,
    }
    if only:
        return groups[only]()
    return verify_symbolic_identities().checks + verify_case_norms().checks + verify_table1().checks


def cmd_verify_identities(args, out) -> int:
    checks = identity_checks(args.only)
    for c in checks:
        if args.format == "json":
            out.write(_dump(c.to_json()) + "\n")
        else:
            out.write(f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f"  [{c.detail}]" if c.detail else "") + "\n")
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


def cmd_scan(args, out) -> int:
    hits = app.scan_corollary(args.criterion, *args.a_range)
    if args.format == "csv":
        out.write(app.hits_to_csv(hits))
    for h in hits:
        if args.format == "json":
            out.write(_dump(h.to_json()) + "\n")
        elif args.format == "text":
            tag = "HIT" if h.is_hit else f"excluded ({h.excluded_reason})"
            out.write(f"a={h.a} b={h.b} m={h.m} squarefree={h.m_squarefree} {tag}\n")
    return EXIT_OK


def _elt(args) -> RingElt:
    return RingElt(*args.coeffs, FieldParam(args.a))


def _scalar(args, out, key, value) -> int:
    if args.format == "json":
        out.write(_dump({"a": str(args.a), "coeffs": [str(c) for c in args.coeffs], key: value}) + "\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_norm(args, out) -> int:
    return _scalar(args, out, "norm", str(norm(_elt(args))))


def cmd_trace(args, out) -> int:
    return _scalar(args, out, "trace", str(trace(_elt(args))))


def cmd_conjugate(args, out) -> int:
    x = conjugate(_elt(args), args.k)
    if args.format == "json":
        out.write(_dump(x.to_json()) + "\n")
    else:
        out.write(f"{x.r},{x.s},{x.t}\n")
    return EXIT_OK


def cmd_roots(args, out) -> int:
    enc = isolate_roots(FieldParam(args.a), args.bits or _default_bits())
    if args.format == "json":
        out.write(_dump(enc.to_json()) + "\n")
    else:
        for name, iv in zip(("alpha", "alpha'", "alpha''"), enc.intervals):
            out.write(f"{name}: [{float(iv.lo):.17g}, {float(iv.hi):.17g}]  width <= 2^-{enc.precision_bits}\n")
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    gamma = _elt(args)
    enc = isolate_roots(gamma.param, args.bits or _default_bits())
    eta, reduced = reduce(gamma, args.c1, args.c2, enc)
    rec = {"a": str(args.a), "gamma": gamma.to_json(), "eta": eta.to_json(),
           "reduced": reduced.to_json(), "c1": str(args.c1), "c2": str(args.c2),
           "abs_embeddings": [abs(embed(reduced, enc, k)).to_json() for k in (0, 1)]}
    if args.format == "json":
        out.write(_dump(rec) + "\n")
    else:
        out.write(f"eta = {eta.sign:+d} * alpha^{eta.i} * alpha''^{eta.j}\n"
                  f"reduced = {reduced.r},{reduced.s},{reduced.t}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    param = FieldParam(args.a)
    n_max = args.n_max if args.n_max is not None else param.threshold
    if not 1 <= n_max <= param.threshold:
        raise UsageError(f"--n-max must lie in [1, {param.threshold}]")
    enc = isolate_roots(param, args.bits or _default_bits())
    for x in enumerate_small_norm(param, n_max, enc):
        ce = classify(x, param, enc)
        if args.format == "json":
            out.write(_dump(ce.to_json()) + "\n")
        else:
            out.write(f"{x.r},{x.s},{x.t}  N={ce.norm_value}  {ce.classification.kind}\n")
    return EXIT_OK


def cmd_extfield(args, out) -> int:
    param = FieldParam(args.a)
    polys = app.extension_generator_poly(param, args.which)
    if args.format == "json":
        out.write(_dump({"a": str(args.a), "criterion": args.which,
                         "polys": [[str(c) for c in p] for p in polys]}) + "\n")
    else:
        for p in polys:
            out.write(" ".join(str(c) for c in p) + "\n")
    return EXIT_OK


COMMANDS = {
    "verify-theorem": cmd_verify_theorem,
    "verify-identities": cmd_verify_identities,
    "scan": cmd_scan,
    "norm": cmd_norm,
    "trace": cmd_trace,
    "conjugate": cmd_conjugate,
    "roots": cmd_roots,
    "reduce": cmd_reduce,
    "enumerate": cmd_enumerate,
    "extfield": cmd_extfield,
}


def main(argv: list[str] | None = None) -> int:
    argv = _fix_negative_values(list(sys.argv[1:] if argv is None else argv))
    args = build_parser().parse_args(argv)
    out = open(args.output, "w") if getattr(args, "output", None) else sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        sys.stderr.write(f"simplest-cubic: error: {e}\n")
        return EXIT_USAGE
    except PrecisionExhausted as e:
        sys.stderr.write(f"simplest-cubic: precision exhausted: {e}\n")
        return EXIT_PRECISION
    finally:
        if out is not sys.stdout:
            out.close()
        else:
            out.flush()


if __name__ == "__main__":
    sys.exit(main())
