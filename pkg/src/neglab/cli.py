"""Command-line front end.

Subcommands cover batch negation, entropy reports, convergence traces,
the full certificate suite, dissimilarity profiles, and a golden-fixture
report.  Output goes to stdout or ``--out`` as JSON (full precision,
round-trip safe), CSV, or readable text; numeric text is printed with 15
significant digits.

Exit codes are a stable contract: 0 success, 2 input validation failure,
3 certificate or fixture failure, 4 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from .certificates import Certificate
from .distribution import (
    DimensionError,
    DomainError,
    ProbDist,
    ValidationReport,
    make_dist,
    uniform,
)
from .dissimilarity import (
    dissimilarity,
    dissimilarity_properties,
    iterated_negation_dissimilarity,
    negation_dissimilarity,
)
from .entropy import (
    cross_entropy_check,
    entropy_chain_check,
    entropy_report,
    shannon_entropy,
)
from .jensen import (
    NEG_LOG,
    X_LOG_X,
    BUILTIN_FUNCTIONS,
    double_negation_mixture_bound,
    get_function,
    mixture_bound,
    partial_mean_chain,
    pointwise_bound,
    concave_mixture_bound,
    self_information_bound,
)
from .negation import converge_to_uniform, negate, negate_iterated, negate_twice

__all__ = ["main", "EXIT_OK", "EXIT_VALIDATION", "EXIT_FAILURE", "EXIT_USAGE"]

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_FAILURE = 3
EXIT_USAGE = 4

_DEFAULT_TOLERANCE = 1e-9


class _UsageError(Exception):
    """Bad flags or malformed values; maps to exit code 4."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep 2 for validation
        raise _UsageError(message)


def _fmt(x) -> str:
    """15 significant digits for text and CSV output."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.15g}"
    return str(x)


def _parse_scalar(token: str) -> float:
    token = token.strip()
    if not token:
        raise _UsageError("empty value in distribution")
    try:
        if "/" in token:
            num, den = token.split("/", 1)
            return float(Fraction(int(num.strip()), int(den.strip())))
        return float(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"cannot parse value {token!r}: {exc}") from None


def _parse_dist_text(text: str) -> list[float]:
    text = text.strip()
    if text.startswith("uniform:"):
        tail = text.split(":", 1)[1]
        try:
            n = int(tail)
        except ValueError:
            raise _UsageError(f"uniform:n needs an integer, got {tail!r}") from None
        if n < 2:
            raise _UsageError(f"uniform:n needs n >= 2, got {n}")
        return [1.0 / n] * n
    return [_parse_scalar(tok) for tok in text.split(",")]


def _load_file(path: str) -> list[list[float]]:
    """JSON array of distributions, or CSV with one distribution per row.

    A flat JSON array of numbers is taken as a single distribution, and a
    JSON object emitted by this tool is re-ingested through its
    ``input.distributions`` field, so output documents round-trip.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from None
    stripped = text.lstrip()
    if stripped.startswith("[") or stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise _UsageError(f"invalid JSON in {path}: {exc}") from None
        if isinstance(data, dict):
            data = data.get("input", {}).get("distributions")
            if data is None:
                raise _UsageError(f"{path}: JSON object lacks input.distributions")
        if data and all(isinstance(v, (int, float)) for v in data):
            data = [data]
        return [[float(v) for v in row] for row in data]
    rows = []
    for row in csv.reader(io.StringIO(text)):
        cells = [c.strip() for c in row if c.strip()]
        if cells:
            rows.append([_parse_scalar(c) for c in cells])
    return rows


def _gather_inputs(args) -> list[list[float]]:
    if getattr(args, "dist", None):
        return [_parse_dist_text(args.dist)]
    if getattr(args, "file", None):
        rows = _load_file(args.file)
        if not rows:
            raise _UsageError(f"{args.file}: no distributions found")
        return rows
    raise _UsageError("provide a distribution with --dist or --file")


def _resolve_tolerance(args) -> float:
    if getattr(args, "tol", None) is not None:
        tol = args.tol
    else:
        env = os.environ.get("NEGLAB_TOL")
        if env is not None and env.strip():
            try:
                tol = float(env)
            except ValueError:
                raise _UsageError(f"NEGLAB_TOL is not a number: {env!r}") from None
        else:
            tol = _DEFAULT_TOLERANCE
    if not tol > 0:
        raise _UsageError(f"tolerance must be > 0, got {tol}")
    return tol


def _validate(raw: list[list[float]], tolerance: float):
    """All rows into ProbDists, or (index, report) for the first bad row."""
    dists = []
    for idx, row in enumerate(raw):
        try:
            result = make_dist(row, tolerance)
        except DimensionError as exc:
            return idx, ValidationReport(ok=False, sum_error=math.inf, bad_indices=()), str(exc)
        if isinstance(result, ValidationReport):
            return idx, result, "values outside [0, 1] or bad total mass"
        dists.append(result)
    return dists


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (records, csv_rows, all_hold)

def _run_negate(dists, args):
    records, rows = [], []
    for d_idx, p in enumerate(dists):
        nb, nbb = negate(p), negate_twice(p)
        records.append(
            {
                "distribution": p.tolist(),
                "negation": nb.tolist(),
                "double_negation": nbb.tolist(),
            }
        )
        for i in range(p.n):
            rows.append(
                {
                    "dist": d_idx,
                    "index": i,
                    "p": p[i],
                    "negation": nb[i],
                    "double_negation": nbb[i],
                }
            )
    return records, rows, True


def _run_entropy(dists, args):
    records, rows = [], []
    for d_idx, p in enumerate(dists):
        rep = entropy_report(p)
        rec = {"distribution": p.tolist(), **rep.as_dict()}
        records.append(rec)
        rows.append({"dist": d_idx, **rep.as_dict()})
    return records, rows, True


def _run_converge(dists, args):
    records, rows = [], []
    for d_idx, p in enumerate(dists):
        trace = converge_to_uniform(p, tolerance=args.tolerance, max_steps=args.max_steps)
        records.append(
            {
                "distribution": p.tolist(),
                "tolerance": args.tolerance,
                **trace.as_dict(),
            }
        )
        for k in range(len(trace.distances)):
            rows.append(
                {
                    "dist": d_idx,
                    "step": k,
                    "distance": trace.distances[k],
                    "entropy_bits": trace.entropies[k],
                    "converged": trace.converged,
                    "oscillating": trace.oscillating,
                }
            )
    return records, rows, True


def _run_dissim(dists, args):
    records, rows = [], []
    all_hold = True
    for d_idx, p in enumerate(dists):
        profile = [negation_dissimilarity(p, a) for a in args.alphas]
        props = dissimilarity_properties(p, args.alphas)
        iterated = iterated_negation_dissimilarity(p, args.alphas[0], args.depth)
        all_hold &= props.holds
        records.append(
            {
                "distribution": p.tolist(),
                "negation": negate(p).tolist(),
                "profile": [r.as_dict() for r in profile],
                "properties": props.as_dict(),
                "iterated": iterated.as_dict(),
            }
        )
        for r in profile:
            rows.append(
                {
                    "dist": d_idx,
                    "kind": "alpha",
                    "level": r.alpha,
                    "value": r.value,
                    "closed_form_value": r.closed_form_value,
                    "l1": r.l1,
                    "properties_hold": props.holds,
                }
            )
        for k, r in enumerate(iterated.results, start=1):
            rows.append(
                {
                    "dist": d_idx,
                    "kind": "iterate",
                    "level": k,
                    "value": r.value,
                    "closed_form_value": r.closed_form_value,
                    "l1": r.l1,
                    "properties_hold": props.holds,
                }
            )
    return records, rows, all_hold


def _verify_suite(p: ProbDist, fn_name: str) -> list[Certificate]:
    f = get_function(fn_name)
    convex = f if f.curvature == "convex" else NEG_LOG
    concave = f if f.curvature == "concave" else X_LOG_X
    certs = [mixture_bound(convex, p)]
    certs.extend(pointwise_bound(convex, p, i) for i in range(p.n))
    certs.append(self_information_bound(p))
    certs.append(double_negation_mixture_bound(convex, p))
    certs.append(concave_mixture_bound(concave, p))
    if p.n >= 3:
        for i in range(p.n):
            _, cert = partial_mean_chain(convex, p, i)
            certs.append(cert)
    certs.append(cross_entropy_check(p, uniform(p.n)))
    certs.append(entropy_chain_check(p))
    return certs


def _cert_rows(d_idx, certs, rows):
    for c in certs:
        rows.append(
            {
                "dist": d_idx,
                "name": c.name,
                "lhs": c.lhs,
                "rhs": c.rhs,
                "slack": c.slack,
                "holds": c.holds,
                "equality": c.equality,
                "infinite": c.infinite,
            }
        )
        for sub in c.detail:
            rows.append(
                {
                    "dist": d_idx,
                    "name": f"{c.name}/{sub.name}",
                    "lhs": sub.lhs,
                    "rhs": sub.rhs,
                    "slack": sub.slack,
                    "holds": sub.holds,
                    "equality": sub.equality,
                    "infinite": sub.infinite,
                }
            )


def _run_verify(dists, args):
    records, rows = [], []
    all_hold = True
    for d_idx, p in enumerate(dists):
        certs = _verify_suite(p, args.fn)
        failing = [name for c in certs for name in c.failures()]
        ok = not failing
        all_hold &= ok
        record = {
            "distribution": p.tolist(),
            "function": args.fn,
            "certificates": [c.as_dict() for c in certs],
            "all_hold": ok,
            "failing": failing,
        }
        if p.n < 3:
            record["notes"] = ["partial_mean_chain skipped: needs n >= 3"]
        records.append(record)
        _cert_rows(d_idx, certs, rows)
    return records, rows, all_hold


# ---------------------------------------------------------------------------
# the golden fixture report

def _close(a, b, tol) -> tuple[bool, float]:
    err = max(abs(x - y) for x, y in zip(a, b)) if hasattr(a, "__len__") else abs(a - b)
    return err <= tol, err


def _frac(*pairs) -> list[float]:
    return [float(Fraction(num, den)) for num, den in pairs]


def _report_fixtures() -> list[dict]:
    fixtures = []

    p4 = make_dist(_frac((1, 3), (1, 6), (1, 6), (1, 3)))
    neg_ok, neg_err = _close(
        negate(p4).tolist(), _frac((2, 9), (5, 18), (5, 18), (2, 9)), 1e-14
    )
    dbl_ok, dbl_err = _close(
        negate_twice(p4).tolist(), _frac((7, 27), (13, 54), (13, 54), (7, 27)), 1e-14
    )
    fixtures.append(
        {
            "name": "negation_golden_four_outcomes",
            "passed": neg_ok and dbl_ok,
            "max_error": max(neg_err, dbl_err),
            "negation": negate(p4).tolist(),
            "double_negation": negate_twice(p4).tolist(),
        }
    )

    p3 = make_dist(_frac((2, 3), (1, 6), (1, 6)))
    q5 = make_dist(_frac((2, 3), (1, 6), (1, 6), (0, 1), (0, 1)))
    n3_ok, n3_err = _close(negate(p3).tolist(), _frac((1, 6), (5, 12), (5, 12)), 1e-14)
    n5_ok, n5_err = _close(
        negate(q5).tolist(), _frac((1, 12), (5, 24), (5, 24), (1, 4), (1, 4)), 1e-14
    )
    fixtures.append(
        {
            "name": "negation_golden_padded",
            "passed": n3_ok and n5_ok,
            "max_error": max(n3_err, n5_err),
            "negation_three": negate(p3).tolist(),
            "negation_five": negate(q5).tolist(),
        }
    )

    h3, h5 = shannon_entropy(p3), shannon_entropy(q5)
    g3, g5 = shannon_entropy(negate(p3)), shannon_entropy(negate(q5))
    pad_ok = abs(h3 - h5) <= 1e-12 and (g5 - g3) > 1e-6
    fixtures.append(
        {
            "name": "entropy_padding_ordering",
            "passed": pad_ok,
            "entropy_three": h3,
            "entropy_five": h5,
            "negation_entropy_three": g3,
            "negation_entropy_five": g5,
            "negation_entropy_gap": g5 - g3,
        }
    )

    h0, h1, h2 = (
        shannon_entropy(p4),
        shannon_entropy(negate(p4)),
        shannon_entropy(negate_twice(p4)),
    )
    chain_ok = (h1 - h0) > 1e-6 and (h2 - h1) > 1e-6 and h2 <= 2.0 and (2.0 - h2) > 1e-6
    fixtures.append(
        {
            "name": "entropy_chain_four_outcomes",
            "passed": chain_ok,
            "entropies": [h0, h1, h2],
            "ceiling_bits": 2.0,
        }
    )

    p5 = make_dist(_frac((1, 8), (1, 8), (1, 2), (1, 8), (1, 8)))
    _, cert = partial_mean_chain(NEG_LOG, p5, 2)
    sym_ok = cert.lhs == 3.0 and abs(cert.rhs - cert.lhs) <= 1e-12 and cert.equality
    perturbed_raw = [float(Fraction(1, 8)) + 0.01] + _frac((1, 8), (1, 2), (1, 8), (1, 8))
    perturbed = make_dist([v / sum(perturbed_raw) for v in perturbed_raw])
    _, pert_cert = partial_mean_chain(NEG_LOG, perturbed, 2)
    pert_gap = abs(pert_cert.rhs - pert_cert.lhs)
    fixtures.append(
        {
            "name": "symmetric_peak_equality",
            "passed": sym_ok and pert_gap > 1e-4,
            "lhs_bits": cert.lhs,
            "chain_end_bits": cert.rhs,
            "equality_gap": abs(cert.rhs - cert.lhs),
            "perturbed_gap": pert_gap,
        }
    )

    expected0 = -math.log2(8.0 / 9.0)
    res = [negation_dissimilarity(p4, a) for a in (0, 1, 2, 3)]
    props = dissimilarity_properties(p4, [0, 1, 2, 3])
    sub = {c.name: c for c in props.detail}
    decreasing = sub["value_non_increasing_in_alpha"].holds
    claimed = sub["value_non_decreasing_in_alpha"].holds
    dis_ok = (
        abs(res[0].value - expected0) <= 1e-12
        and all(abs(r.value - r.closed_form_value) <= 1e-12 for r in res)
        and props.holds
        and decreasing
        and not claimed
    )
    fixtures.append(
        {
            "name": "dissimilarity_golden",
            "passed": dis_ok,
            "values": [r.value for r in res],
            "expected_alpha0": expected0,
            "properties_hold": props.holds,
            "alpha_direction_observed": "non-increasing",
            "claimed_non_decreasing_direction_holds": claimed,
            "direction_note": (
                "the closed form shrinks as alpha grows; the once-claimed "
                "non-decreasing direction fails and is recorded, not asserted"
            ),
        }
    )
    return fixtures


def _run_report(args):
    fixtures = _report_fixtures()
    rows = [
        {"fixture": f["name"], "passed": f["passed"]}
        for f in fixtures
    ]
    return fixtures, rows, all(f["passed"] for f in fixtures)


# ---------------------------------------------------------------------------
# rendering

def _render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _render_csv(doc: dict) -> str:
    rows = doc.pop("_csv_rows", [])
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _fmt(v) for k, v in row.items()})
    return buf.getvalue()


def _vec(values) -> str:
    return ", ".join(_fmt(v) for v in values)


def _cert_lines(cert: dict, indent: str, out: list[str]) -> None:
    mark = "ok" if cert["holds"] else "FAIL"
    eq = " (equality)" if cert["equality"] else ""
    inf = " (infinite)" if cert["infinite"] else ""
    out.append(
        f"{indent}[{mark}] {cert['name']}: lhs={_fmt(cert['lhs'])} "
        f"rhs={_fmt(cert['rhs'])} slack={_fmt(cert['slack'])}{eq}{inf}"
    )
    for sub in cert["detail"]:
        _cert_lines(sub, indent + "  ", out)


def _render_text(doc: dict) -> str:
    cmd = doc["command"]
    out = [f"command: {cmd}"]
    if "error" in doc:
        err = doc["error"]
        rep = err["report"]
        out.append(
            f"validation failed for distribution {err['index']}: {err['why']} "
            f"(sum_error={_fmt(rep['sum_error'])}, bad_indices={rep['bad_indices']})"
        )
    for idx, rec in enumerate(doc["results"]):
        if cmd == "report":
            status = "PASS" if rec["passed"] else "FAIL"
            extras = {
                k: v
                for k, v in rec.items()
                if k not in ("name", "passed") and isinstance(v, (int, float))
            }
            shown = ", ".join(f"{k}={_fmt(v)}" for k, v in extras.items())
            out.append(f"{status} {rec['name']}" + (f"  ({shown})" if shown else ""))
            continue
        out.append(f"distribution {idx}: {_vec(rec['distribution'])}")
        if cmd == "negate":
            out.append(f"  negation:        {_vec(rec['negation'])}")
            out.append(f"  double negation: {_vec(rec['double_negation'])}")
        elif cmd == "entropy":
            out.append(
                f"  entropy {_fmt(rec['entropy_bits'])} bits of "
                f"{_fmt(rec['max_entropy_bits'])} max, gap {_fmt(rec['gap_bits'])}"
            )
        elif cmd == "converge":
            state = "converged" if rec["converged"] else (
                "oscillating (period 2, never converges)" if rec["oscillating"] else "stopped at max_steps"
            )
            out.append(f"  {state} after {rec['steps']} steps")
            out.append(f"  final distance {_fmt(rec['distances'][-1])}, entropy {_fmt(rec['entropies'][-1])} bits")
        elif cmd == "dissim":
            for r in rec["profile"]:
                out.append(f"  alpha={r['alpha']}: value={_fmt(r['value'])} (l1={_fmt(r['l1'])})")
            _cert_lines(rec["properties"], "  ", out)
            iterated = rec["iterated"]
            vals = _vec([r["value"] for r in iterated["results"]])
            out.append(
                f"  vs iterates 1..{len(iterated['results'])}: {vals} "
                f"(non-decreasing: {_fmt(iterated['non_decreasing'])})"
            )
        elif cmd == "verify":
            for cert in rec["certificates"]:
                _cert_lines(cert, "  ", out)
            for note in rec.get("notes", ()):
                out.append(f"  note: {note}")
    out.append(f"all_hold: {_fmt(doc['all_hold'])}")
    return "\n".join(out) + "\n"


def _emit(doc: dict, fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        text = _render_json(doc)
    elif fmt == "csv":
        text = _render_csv(doc)
    else:
        text = _render_text(doc)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(
        prog="neglab",
        description="Negation of discrete probability distributions: "
        "entropy orderings, convexity certificates, dissimilarity profiles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, dist_input=True):
        if dist_input:
            p.add_argument("--dist", help="comma-separated values (decimals or a/b rationals), or uniform:n")
            p.add_argument("--file", help="JSON array of distributions, or CSV one distribution per row")
        p.add_argument("--tol", type=float, default=None,
                       help="validation/convergence tolerance (default 1e-9, env NEGLAB_TOL)")
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--out", help="write output to this path instead of stdout")

    add_common(sub.add_parser("negate", help="emit a distribution, its negation, and its double negation"))
    add_common(sub.add_parser("entropy", help="entropy in bits against the log2(n) ceiling"))

    p_conv = sub.add_parser("converge", help="iterate negation toward uniform and trace the path")
    add_common(p_conv)
    p_conv.add_argument("--max-steps", type=int, default=1000)

    p_verify = sub.add_parser("verify", help="run the full certificate suite")
    add_common(p_verify)
    p_verify.add_argument("--fn", default="neg_log", help=f"built-in function ({', '.join(BUILTIN_FUNCTIONS)})")

    p_dissim = sub.add_parser("dissim", help="dissimilarity profile against the negation")
    add_common(p_dissim)
    p_dissim.add_argument("--alpha", default="0,1,2,3", help="comma-separated nonnegative integer levels")
    p_dissim.add_argument("--depth", type=int, default=3, help="negation iterates to compare against (>= 1)")

    p_report = sub.add_parser("report", help="reproduce the golden fixtures and report pass/fail")
    add_common(p_report, dist_input=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"neglab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help lands here; argparse uses 0 for it
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        args.tolerance = _resolve_tolerance(args)

        if args.command == "report":
            results, rows, all_hold = _run_report(args)
            doc_input = {"tolerance": args.tolerance}
        else:
            raw = _gather_inputs(args)
            validated = _validate(raw, args.tolerance)
            if isinstance(validated, tuple):
                idx, report, why = validated
                doc = {
                    "command": args.command,
                    "input": {"distributions": raw, "tolerance": args.tolerance},
                    "error": {"kind": "validation", "index": idx, "why": why,
                              "report": report.as_dict()},
                    "results": [],
                    "all_hold": False,
                }
                if args.format == "csv":
                    doc["_csv_rows"] = [
                        {
                            "dist": idx,
                            "error": why,
                            "sum_error": report.sum_error,
                            "bad_indices": " ".join(map(str, report.bad_indices)),
                        }
                    ]
                _emit(doc, args.format, args.out)
                return EXIT_VALIDATION
            dists = validated
            doc_input = {"distributions": raw, "tolerance": args.tolerance}

            if args.command == "negate":
                results, rows, all_hold = _run_negate(dists, args)
            elif args.command == "entropy":
                results, rows, all_hold = _run_entropy(dists, args)
            elif args.command == "converge":
                if args.max_steps < 1:
                    raise _UsageError(f"--max-steps must be >= 1, got {args.max_steps}")
                results, rows, all_hold = _run_converge(dists, args)
            elif args.command == "verify":
                if args.fn not in BUILTIN_FUNCTIONS:
                    raise _UsageError(
                        f"unknown function {args.fn!r}; built-ins: {', '.join(sorted(BUILTIN_FUNCTIONS))}"
                    )
                doc_input["function"] = args.fn
                results, rows, all_hold = _run_verify(dists, args)
            elif args.command == "dissim":
                try:
                    alphas = [int(a) for a in args.alpha.split(",") if a.strip()]
                except ValueError:
                    raise _UsageError(f"--alpha must be comma-separated integers, got {args.alpha!r}") from None
                if not alphas or alphas != sorted(alphas) or alphas[0] < 0:
                    raise _UsageError("--alpha must be nonempty, nonnegative, sorted ascending")
                if args.depth < 1:
                    raise _UsageError(f"--depth must be >= 1, got {args.depth}")
                args.alphas = alphas
                doc_input["alphas"] = alphas
                doc_input["depth"] = args.depth
                results, rows, all_hold = _run_dissim(dists, args)
            else:  # pragma: no cover - argparse enforces the choices
                raise _UsageError(f"unknown command {args.command!r}")

        doc = {
            "command": args.command,
            "input": doc_input,
            "results": results,
            "all_hold": all_hold,
            "_csv_rows": rows,
        }
        if args.format != "csv":
            doc.pop("_csv_rows")
        _emit(doc, args.format, args.out)
        if args.command in ("verify", "dissim", "report") and not all_hold:
            return EXIT_FAILURE
        return EXIT_OK
    except _UsageError as exc:
        print(f"neglab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, DimensionError) as exc:
        print(f"neglab: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
