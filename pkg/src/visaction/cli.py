"""Command-line front end: verify tables, run certificates, list families.

Exit codes: 0 pass, 2 usage or data error, 3 verification did not pass
(a failed exact check or an inconclusive certificate).  Reports are JSON
records (schema in docs/report-schema.json) or a rendered markdown
summary; identical inputs reproduce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import DatasetError, UnsupportedFamily, VisactionError

EXIT_PASS = 0
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="visaction",
        description="Exact involution-triple verification and numeric "
                    "strong-visibility certificates")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tables-verify",
                       help="verify catalog rows against their closed forms")
    t.add_argument("--filter", default="",
                   help="comma list of tokens: table1..table4, row=LABEL")
    t.add_argument("--max-ambient", type=int, default=8)
    t.add_argument("--fingerprints", action="store_true",
                   help="also check fixed-algebra fingerprints (slower)")
    t.add_argument("--jobs", type=int, default=1)
    t.add_argument("--dataset", default=None)
    t.add_argument("--format", choices=("json", "md"), default="json")
    t.add_argument("--output", default=None)

    c = sub.add_parser("certify", help="run a numeric visibility certificate")
    c.add_argument("action", help="action id, e.g. sl2R:K or su6:Sp3")
    c.add_argument("--seed", type=int, default=2024)
    c.add_argument("--tol", type=float, default=1e-6)
    c.add_argument("--samples", type=int, default=100)
    c.add_argument("--restarts", type=int, default=32)
    c.add_argument("--format", choices=("json", "md"), default="json")
    c.add_argument("--output", default=None)

    e = sub.add_parser("epsilon",
                       help="list twisted fixed-algebra fingerprints")
    e.add_argument("spec", help="family spec: slNR, or TABLE:LABEL")
    e.add_argument("--params", default="",
                   help="comma-separated row parameters for TABLE:LABEL")
    e.add_argument("--format", choices=("json", "md"), default="json")
    e.add_argument("--output", default=None)

    args = parser.parse_args(argv)
    try:
        if args.command == "tables-verify":
            return _cmd_tables_verify(args)
        if args.command == "certify":
            return _cmd_certify(args)
        if args.command == "epsilon":
            return _cmd_epsilon(args)
    except DatasetError as exc:
        print(f"dataset error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedFamily as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VisactionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


# ---------------------------------------------------------------------------
# tables-verify
# ---------------------------------------------------------------------------

def _parse_filter(text: str):
    tables = set()
    labels = set()
    for token in filter(None, (t.strip() for t in text.split(","))):
        m = re.fullmatch(r"table([1-4])", token)
        if m:
            tables.add(int(m.group(1)))
            continue
        m = re.fullmatch(r"row=(\S+)", token)
        if m:
            labels.add(m.group(1))
            continue
        raise DatasetError(f"unknown filter token {token!r}")
    return tables, labels


def _verify_one(job):
    from .analysis import verify_catalog_row
    from .catalog import dataset_row, load_dataset
    table, label, params, fingerprints, dataset = job
    rows = load_dataset(dataset)
    row = dataset_row(table, label, rows=rows)
    rec = {"table": table, "row": label, "params": list(params)}
    try:
        report = verify_catalog_row(row, params,
                                    check_fingerprints=fingerprints)
        rec["status"] = "pass" if report.passed else "fail"
        rec["rank"] = report.rank_tau_theta
        rec["rank_sigma_side"] = report.rank_sigma_tau_theta
        rec["expected_rank"] = report.expected_rank
        rec["conditions"] = {
            "commute": report.commute,
            "rank_equality": report.rank_equal,
            "sigma_reverses_Z": report.sigma_reverses_Z,
        }
        if not report.passed:
            rec["failed_condition"] = report.failed_condition
    except VisactionError as exc:
        rec["status"] = "fail"
        rec["failed_condition"] = type(exc).__name__
        rec["detail"] = str(exc)
    return rec


def _cmd_tables_verify(args) -> int:
    from .catalog import enumerate_params, load_dataset
    rows = load_dataset(args.dataset)
    tables, labels = _parse_filter(args.filter)
    records = []
    jobs = []
    for row in rows:
        if tables and row.table not in tables:
            continue
        if labels and row.label not in labels:
            continue
        if not tables and not labels and row.table == 4:
            continue  # table 4 annotates table 1; skip the duplicate sweep
        if not row.implementable:
            records.append({"table": row.table, "row": row.label,
                            "status": "data-only", "family": row.g_label,
                            "fixed": row.h_label or row.sigma_label,
                            "epsilon_family": row.epsilon_family})
            continue
        for params in enumerate_params(row, args.max_ambient):
            jobs.append((row.table, row.label, params, args.fingerprints,
                         args.dataset))
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records.extend(pool.map(_verify_one, jobs, chunksize=4))
    else:
        records.extend(_verify_one(j) for j in jobs)
    records.sort(key=lambda r: (r["table"], _label_key(r["row"]),
                                r.get("params", [])))
    summary = {"pass": sum(r["status"] == "pass" for r in records),
               "fail": sum(r["status"] == "fail" for r in records),
               "data-only": sum(r["status"] == "data-only" for r in records)}
    report = {"schema_version": 1, "kind": "table-verification",
              "filter": args.filter, "max_ambient": args.max_ambient,
              "fingerprints": bool(args.fingerprints),
              "summary": summary, "records": records}
    _emit(args, report, _tables_markdown)
    return EXIT_PASS if summary["fail"] == 0 else EXIT_INCONCLUSIVE


def _label_key(label: str):
    return (0, int(label)) if label.isdigit() else (1, label)


def _tables_markdown(report: dict) -> str:
    lines = ["# Catalog verification", "",
             f"filter: `{report['filter'] or '(all)'}`  "
             f"max ambient: {report['max_ambient']}", "",
             "| table | row | params | status | rank | expected |",
             "|---|---|---|---|---|---|"]
    for r in report["records"]:
        lines.append(
            f"| {r['table']} | {r['row']} | "
            f"{','.join(map(str, r.get('params', []))) or '-'} "
            f"| {r['status']} | {r.get('rank', '-')} "
            f"| {r.get('expected_rank', '-')} |")
    s = report["summary"]
    lines += ["", f"pass: {s['pass']}  fail: {s['fail']}  "
                  f"data-only: {s['data-only']}", ""]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# certify
# ---------------------------------------------------------------------------

def _cmd_certify(args) -> int:
    from .actions import ACTIONS, prepare_action
    from .certify import (certify_strong_visibility,
                          certify_unipotent_visibility)
    if args.action not in ACTIONS:
        print(f"unsupported action {args.action!r}; known: "
              f"{', '.join(sorted(ACTIONS))}", file=sys.stderr)
        return EXIT_USAGE
    prepared = prepare_action(args.action)
    if prepared.iwasawa is not None:
        cert = certify_unipotent_visibility(
            prepared.numeric, prepared.iwasawa, seed=args.seed,
            samples=args.samples, tol=args.tol, restarts=args.restarts)
    else:
        cert = certify_strong_visibility(
            prepared.numeric, seed=args.seed, samples=args.samples,
            tol=args.tol, restarts=args.restarts)
    _emit(args, cert.as_record(), _certificate_markdown)
    return EXIT_PASS if cert.passed else EXIT_INCONCLUSIVE


def _certificate_markdown(rec: dict) -> str:
    lines = [f"# Certificate: {rec['action']}", "",
             f"kind: {rec['action_kind']}  seed: {rec['seed']}  "
             f"samples: {rec['samples']}  tol: {rec['tol']:g}", "",
             "| condition | max residual |", "|---|---|"]
    for k in sorted(rec["residuals"]):
        lines.append(f"| {k} | {rec['residuals'][k]:.3e} |")
    lines += ["", f"status: **{rec['status']}**", ""]
    if rec.get("inconclusive_samples"):
        lines.append(f"inconclusive samples: "
                     f"{len(rec['inconclusive_samples'])}")
        lines.append("")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# epsilon
# ---------------------------------------------------------------------------

def _cmd_epsilon(args) -> int:
    from .epsilon import epsilon_listing
    params = tuple(int(x) for x in args.params.split(",") if x.strip())
    listing = epsilon_listing(args.spec, params)
    _emit(args, listing, _epsilon_markdown)
    ok = all(e["passed"] for e in listing["entries"])
    return EXIT_PASS if ok else EXIT_INCONCLUSIVE


def _epsilon_markdown(rec: dict) -> str:
    lines = [f"# Signature family: {rec['spec']}", "",
             f"rank: {rec['rank']}  roots: {rec['roots']}  "
             f"signatures: {len(rec['entries'])}", "",
             "| signature | fixed algebra | fingerprint | checks |",
             "|---|---|---|---|"]
    for e in rec["entries"]:
        lines.append(f"| {e['signature']} | {e['label'] or '?'} "
                     f"| {e['fingerprint']} "
                     f"| {'pass' if e['passed'] else 'FAIL'} |")
    lines.append("")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------

def _emit(args, record: dict, render_md) -> None:
    if args.format == "md":
        text = render_md(record)
    else:
        text = json.dumps(record, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    raise SystemExit(main())
