"""Command line front end over the formula and check modules.

Exit codes: 0 success, 1 a mandatory verification failed, 2 bad usage or
parameters.
"""
import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from itertools import product

from . import __version__
from . import formulas as fm
from .checks import FAIL, INFO, PASS, run

FLOAT_CONTEXT = Context(prec=12, rounding=ROUND_HALF_EVEN)


def exact(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def approx(q: Fraction) -> str:
    q = Fraction(q)
    return format(FLOAT_CONTEXT.divide(Decimal(q.numerator), Decimal(q.denominator)), "f")


# family -> (parameter names, evaluator)

def _koszul(s, i):
    k = fm.KoszulSetup(s, i)
    slope = fm.koszul_slope(s, i)
    flags = {"bound_ok": fm.koszul_bound_check(s, i) if s >= 2 else None}
    return {"g": k.g, "r": k.r, "d": k.d}, {"slope": slope}, flags


def _khosla(s):
    k = fm.khosla_class(s)
    return {"g": s * (2 * s + 1), "r": 2 * s}, {"slope": k.slope, "b0_over_cr": k.b0_over_cr}, {}


def _gp(r, s):
    res = fm.gp_class(r, s)
    g = r * s + s
    vals = {"slope": res.slope, "lambda": res.cls.lam, "b0": res.cls.b(0), "b1": res.cls.b(1)}
    return {"g": g, "d": r * s + r}, vals, {"slope_bound_ok": res.slope >= 6 + Fraction(12, g + 1)}


def _mgn_values(cls, pre=Fraction(1)):
    vals = {"lambda": cls.lam.value * pre, "psi": cls.psi.value * pre, "delta_irr": cls.d_irr.value * pre}
    if cls.lam.value and cls.d_irr.value:
        vals["lambda_over_b_irr"] = cls.lam.value / -cls.d_irr.value
    return vals


def _lin(r, s):
    res = fm.lin_class(r, s)
    vals = _mgn_values(res.cls, res.prefactor)
    vals["prefactor"] = res.prefactor
    return {"g": r * s + s, "n": r + 1}, vals, {}


def _mrc(g, r, i):
    return {"n": fm.mrc_n(g, r, i)}, _mgn_values(fm.mrc_class(g, r, i)), {}


def _nfold(g, n):
    return {"d": fm.nfold_d(g, n)}, _mgn_values(fm.nfold_class(g, n)), {}


def _syz(g, i):
    n, cls = fm.syz_class(g, i)
    return {"n": n}, _mgn_values(cls), {}


def _wahl(g):
    n, cls = fm.wahl_class(g)
    return {"n": n}, _mgn_values(cls), {}


_MGN = ("lambda", "psi", "delta_irr", "lambda_over_b_irr")

# family -> (parameters, evaluator, derived parameters, value columns, flag columns)
FAMILIES = {
    "koszul": (("s", "i"), _koszul, ("g", "r", "d"), ("slope",), ("bound_ok",)),
    "khosla": (("s",), _khosla, ("g", "r"), ("slope", "b0_over_cr"), ()),
    "gp": (("r", "s"), _gp, ("g", "d"), ("slope", "lambda", "b0", "b1"), ("slope_bound_ok",)),
    "lin": (("r", "s"), _lin, ("g", "n"), _MGN + ("prefactor",), ()),
    "mrc": (("g", "r", "i"), _mrc, ("n",), _MGN, ()),
    "nfold": (("g", "n"), _nfold, ("d",), _MGN, ()),
    "syz": (("g", "i"), _syz, ("n",), _MGN, ()),
    "wahl": (("g",), _wahl, ("n",), _MGN, ()),
}

PARAMETER_ERRORS = (ValueError, ArithmeticError, LookupError)


def evaluate(family: str, params: dict) -> dict:
    names, fn = FAMILIES[family][:2]
    record = {"params": dict(params), "values": {}, "flags": {}, "status": "ok"}
    try:
        derived, values, flags = fn(*(params[k] for k in names))
    except PARAMETER_ERRORS as exc:
        record["status"] = f"{type(exc).__name__}: {exc}"
        return record
    record["params"].update(derived)
    record["values"] = {k: {"exact": exact(v), "float": approx(v)} for k, v in values.items()}
    record["flags"] = flags
    return record


def _evaluate_point(job):
    return evaluate(*job)


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[str, list[int]]:
    key, sep, span = text.partition("=")
    if not sep or not key:
        raise UsageError(f"range {text!r} is not key=a..b")
    lo, dots, hi = span.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if dots else lo_i
    except ValueError:
        raise UsageError(f"range {text!r} needs integer bounds") from None
    return key.strip(), list(range(lo_i, hi_i + 1))


def table_records(family: str, ranges: dict, jobs: int = 1) -> list[dict]:
    names = FAMILIES[family][0]
    missing = [k for k in names if k not in ranges]
    extra = [k for k in ranges if k not in names]
    if missing or extra:
        raise UsageError(f"{family} takes ranges for {', '.join(names)}; missing {missing}, unexpected {extra}")
    points = [dict(zip(names, combo)) for combo in product(*(ranges[k] for k in names))]
    jobs_list = [(family, p) for p in points]
    if jobs > 1 and len(jobs_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_evaluate_point, jobs_list, chunksize=4))
    else:
        records = [evaluate(family, p) for p in points]
    return sorted(records, key=lambda rec: tuple(rec["params"][k] for k in names))


def render_csv(family: str, records: list[dict]) -> str:
    names, _, derived, values, flags = FAMILIES[family]
    header = [*names, *derived, *(c for v in values for c in (v, v + "_float")), *flags, "status"]
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for rec in records:
        row = [str(rec["params"].get(k, "")) for k in names + derived]
        for v in values:
            cell = rec["values"].get(v)
            row += [f'"{cell["exact"]}"', cell["float"]] if cell else ["", ""]
        for f in flags:
            val = rec["flags"].get(f)
            row.append("" if val is None else str(val).lower())
        row.append(_csv_text(rec["status"]))
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


def _csv_text(text: str) -> str:
    out = io.StringIO()
    csv.writer(out, lineterminator="").writerow([text])
    return out.getvalue()


def render_json(family: str, records: list[dict]) -> str:
    return json.dumps({"version": __version__, "family": family, "records": records}, indent=2, sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="slopecalc", description="Exact slopes and divisor classes on moduli of curves")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("slope", help="evaluate one family at one parameter point")
    sp.add_argument("family", choices=sorted(FAMILIES))
    for k in ("s", "i", "r", "g", "n", "j", "t"):
        sp.add_argument(f"--{k}", type=int)
    sp.add_argument("--json", action="store_true", help="print the record as JSON")

    tp = sub.add_parser("table", help="evaluate a family over a parameter grid")
    tp.add_argument("family", choices=sorted(FAMILIES))
    tp.add_argument("--range", action="append", default=[], metavar="KEY=A..B")
    tp.add_argument("--format", choices=("csv", "json"), default="csv")
    tp.add_argument("--out")
    tp.add_argument("--jobs", type=int, default=1)

    vp = sub.add_parser("verify", help="run cross-check suites")
    vp.add_argument("suite", choices=["all", "schubert", "vandermonde", "koszul", "gp", "lin", "mrc", "identities"])
    vp.add_argument("--grid", choices=("small", "default", "large"), default="default")
    vp.add_argument("--json", dest="json_path")
    return p


def cmd_slope(args) -> int:
    names = FAMILIES[args.family][0]
    params = {k: getattr(args, k) for k in names}
    missing = [k for k, v in params.items() if v is None]
    if missing:
        print(f"error: {args.family} needs --{' --'.join(missing)}", file=sys.stderr)
        return 2
    rec = evaluate(args.family, params)
    if rec["status"] != "ok":
        print(f"error: {rec['status']}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(rec, indent=2, sort_keys=True))
        return 0
    print(" ".join(f"{k}={v}" for k, v in rec["params"].items()))
    for k, v in rec["values"].items():
        print(f"{k} = {v['exact']}  ({v['float']})")
    for k, v in rec["flags"].items():
        print(f"{k}: {v}")
    return 0


def cmd_table(args) -> int:
    try:
        ranges = dict(parse_range(r) for r in args.range)
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        records = table_records(args.family, ranges, args.jobs)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render_csv(args.family, records) if args.format == "csv" else render_json(args.family, records)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    checks = run(args.suite, args.grid)
    label = {PASS: "PASS", FAIL: "FAIL", INFO: "INFO"}
    for c in checks:
        print(f"{label[c.status]} [{c.suite}] {c.name}" + (f": {c.detail}" if c.detail else ""))
    counts = {s: sum(c.status == s for c in checks) for s in (PASS, FAIL, INFO)}
    summary = {"suite": args.suite, "grid": args.grid, "counts": counts,
               "checks": [c.__dict__ for c in checks]}
    print(json.dumps({"suite": args.suite, "grid": args.grid, "counts": counts}))
    if args.json_path:
        with open(args.json_path, "w") as fh:
            json.dump(summary, fh, indent=2)
    return 1 if counts[FAIL] else 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return {"slope": cmd_slope, "table": cmd_table, "verify": cmd_verify}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
