"""Command-line front end.

Commands: subgroups, idempotents, classify, sweep, verify.  Groups are
given as comma-separated divisor lists (``9,3``), fields as ``p`` or
``p^m`` (``2``, ``2^6``).  Output is deterministic: identical invocations
produce byte-identical output.  Exit status: 0 success, 1 domain error
(with a machine-readable error record), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .abelian_group import (
    abelian_groups_of_order,
    cocyclic_subgroups,
    group_make,
    quotient_type,
    all_subgroups,
)
from .codes import DEFAULT_DIMENSION_CAP, classify, tau_sweep, verify_tables
from .errors import DomainError
from .finite_field import field_make
from .group_algebra import primitive_idempotents


def _parse_group(spec):
    try:
        parts = [p.strip() for p in spec.split(",") if p.strip()]
        divisors = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError("group spec must be comma-separated integers")
    divisors = [d for d in divisors if d != 1]
    return group_make(divisors)


def _parse_field(spec):
    try:
        if "^" in spec:
            p_str, m_str = spec.split("^", 1)
            return field_make(int(p_str), int(m_str))
        return field_make(int(spec))
    except DomainError:
        raise
    except ValueError:
        raise argparse.ArgumentTypeError("field spec must be p or p^m")


# ---------------------------------------------------------------------------
# renderers
# ---------------------------------------------------------------------------

def _to_json(obj):
    return json.dumps(obj, indent=2) + "\n"


def _csv_block(headers, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _md_table(headers, rows):
    cells = [[str(c) for c in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for i, c in enumerate(row):
            widths[i] = max(widths[i], len(c))
    lines = []
    lines.append("| " + " | ".join(h.ljust(w) for h, w in zip(headers, widths)) + " |")
    lines.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
    for row in cells:
        lines.append("| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |")
    return "\n".join(lines) + "\n"


def _fmt_cell(value):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return json.dumps(value)
    return value


def _render_classification(report_dict, fmt):
    if fmt == "json":
        return _to_json(report_dict)
    code_headers = [
        "idempotent_ref", "phi_subgroup", "dimension", "min_weight",
        "min_weight_exact", "distribution",
    ]
    code_rows = [
        [_fmt_cell(entry.get(h, "")) for h in code_headers]
        for entry in report_dict["codes"]
    ]
    class_headers = [
        "representative", "members", "size", "dimension", "min_weight",
    ]
    class_rows = [
        [_fmt_cell(entry.get(h, "")) for h in class_headers]
        for entry in report_dict["classes"]
    ]
    summary = (
        "group: %s  field: GF(%s)  class_count: %d  tau: %d  homocyclic: %s  "
        "thm56_match: %s"
        % (
            report_dict["group"], report_dict["field"],
            report_dict["class_count"], report_dict["tau"],
            "yes" if report_dict["homocyclic"] else "no",
            "yes" if report_dict["thm56_match"] else "no",
        )
    )
    if fmt == "csv":
        out = _csv_block(["section"] + code_headers,
                         [["code"] + r for r in code_rows])
        out += _csv_block(["section"] + class_headers,
                          [["class"] + r for r in class_rows])
        out += _csv_block(
            ["section", "group", "field", "class_count", "tau", "homocyclic",
             "thm56_match"],
            [["summary", report_dict["group"], report_dict["field"],
              report_dict["class_count"], report_dict["tau"],
              report_dict["homocyclic"], report_dict["thm56_match"]]],
        )
        return out
    out = summary + "\n\ncodes:\n"
    out += _md_table(code_headers, code_rows)
    out += "\nclasses:\n"
    out += _md_table(class_headers, class_rows)
    return out


def _rle(values):
    runs = []
    for v in values:
        if runs and runs[-1][0] == v:
            runs[-1][1] += 1
        else:
            runs.append([v, 1])
    return runs


def _idempotents_dict(group, ctx):
    prims = primitive_idempotents(group, ctx)
    entries = []
    for ide in prims:
        coeff_values = [
            c if isinstance(c, int) else list(c) for c in ide.element.coeffs
        ]
        entries.append({
            "orbit_rep": list(ide.orbit_rep),
            "phi_subgroup": [list(g) for g in ide.phi_subgroup.generators],
            "support_size": len(ide.element.support),
            "coeffs": _rle(coeff_values),
        })
    return {
        "group": group.spec_string(),
        "field": ctx.spec_string(),
        "idempotents": entries,
    }


def _render_idempotents(data, fmt):
    if fmt == "json":
        return _to_json(data)
    headers = ["orbit_rep", "phi_subgroup", "support_size", "coeffs"]
    rows = [[_fmt_cell(e[h]) for h in headers] for e in data["idempotents"]]
    if fmt == "csv":
        return _csv_block(headers, rows)
    head = "group: %s  field: GF(%s)\n\n" % (data["group"], data["field"])
    return head + _md_table(headers, rows)


def _subgroups_dict(group, ctx):
    cocyclic = {H.elements for H in cocyclic_subgroups(group)}
    entries = []
    for H in all_subgroups(group):
        entries.append({
            "generators": [list(g) for g in H.generators],
            "order": H.order,
            "quotient": list(quotient_type(group, H)),
            "cocyclic": H.elements in cocyclic,
        })
    return {
        "group": group.spec_string(),
        "field": ctx.spec_string(),
        "subgroups": entries,
    }


def _render_subgroups(data, fmt):
    if fmt == "json":
        return _to_json(data)
    headers = ["generators", "order", "quotient", "cocyclic"]
    rows = [[_fmt_cell(e[h]) for h in headers] for e in data["subgroups"]]
    if fmt == "csv":
        return _csv_block(headers, rows)
    head = "group: %s  (%d subgroups)\n\n" % (data["group"], len(rows))
    return head + _md_table(headers, rows)


def _sweep_dict(ctx, max_order):
    groups = []
    from math import gcd
    for n in range(1, max_order + 1):
        if gcd(n, ctx.order) != 1:
            continue
        groups.extend(abelian_groups_of_order(n))
    rows = tau_sweep(groups, ctx)
    return {
        "field": ctx.spec_string(),
        "max_order": max_order,
        "rows": [
            {
                "group": r["group"],
                "class_count": r["class_count"],
                "tau": r["tau"],
                "homocyclic": r["homocyclic"],
                "thm56_match": r["match"],
            }
            for r in rows
        ],
    }


def _render_sweep(data, fmt):
    if fmt == "json":
        return _to_json(data)
    headers = ["group", "class_count", "tau", "homocyclic", "thm56_match"]
    rows = [[_fmt_cell(e[h]) for h in headers] for e in data["rows"]]
    if fmt == "csv":
        return _csv_block(headers, rows)
    head = "field: GF(%s)  max order: %d\n\n" % (data["field"], data["max_order"])
    return head + _md_table(headers, rows)


def _render_verify(data, fmt):
    if fmt == "json":
        return _to_json(data)
    headers = ["label", "check", "expected", "actual", "pass"]
    rows = [
        [_fmt_cell(r["label"]), _fmt_cell(r["check"]),
         _fmt_cell(r["expected"]), _fmt_cell(r["actual"]), _fmt_cell(r["pass"])]
        for r in data["rows"]
    ]
    if fmt == "csv":
        return _csv_block(headers, rows)
    head = "group: %s  field: GF(%s)  table: %s\nall rows pass: %s\n\n" % (
        data["group"], data["field"], data["table"],
        "yes" if data["all_pass"] else "no",
    )
    return head + _md_table(headers, rows)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="abelian-codes",
        description="Minimal abelian group codes and their equivalence classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_group=True):
        if need_group:
            p.add_argument("--group", required=True, type=_parse_group,
                           help="comma-separated divisor list, e.g. 9,3")
        p.add_argument("--field", required=True, type=_parse_field,
                       help="field spec: p or p^m, e.g. 2 or 2^6")
        p.add_argument("--format", choices=["json", "csv", "md"], default="md")
        p.add_argument("--dimension-cap", type=int, default=DEFAULT_DIMENSION_CAP)
        p.add_argument("--seed-independent", action="store_true",
                       help="reserved; all computations are deterministic")

    common(sub.add_parser("subgroups", help="list the subgroup lattice"))
    common(sub.add_parser("idempotents", help="dump the primitive idempotents"))
    p_classify = sub.add_parser("classify", help="classify the minimal codes")
    common(p_classify)
    p_classify.add_argument("--with-distributions", action="store_true")
    p_sweep = sub.add_parser(
        "sweep", help="class count vs tau(exponent) over all small groups")
    common(p_sweep, need_group=False)
    p_sweep.add_argument("--max-order", type=int, default=81)
    common(sub.add_parser("verify", help="check the built-in reference tables"))
    return parser


def run(argv):
    parser = _build_parser()
    try:
        # domain errors raised while converting --group/--field (e.g. a
        # non-prime characteristic) fall through to the handler below;
        # malformed syntax is a usage error handled by argparse itself
        args = parser.parse_args(argv)
        ctx = args.field
        if args.command == "sweep":
            data = _sweep_dict(ctx, args.max_order)
            sys.stdout.write(_render_sweep(data, args.format))
            return 0
        group = args.group
        if args.command == "subgroups":
            sys.stdout.write(_render_subgroups(_subgroups_dict(group, ctx), args.format))
            return 0
        if args.command == "idempotents":
            sys.stdout.write(_render_idempotents(_idempotents_dict(group, ctx), args.format))
            return 0
        if args.command == "classify":
            report = classify(
                group, ctx,
                with_distributions=args.with_distributions,
                dimension_cap=args.dimension_cap,
            )
            sys.stdout.write(_render_classification(report.to_dict(), args.format))
            return 0
        if args.command == "verify":
            data = verify_tables(group, ctx, dimension_cap=args.dimension_cap)
            sys.stdout.write(_render_verify(data, args.format))
            return 0 if data["all_pass"] else 1
    except DomainError as exc:
        sys.stdout.write(_to_json(exc.record()))
        return 1
    raise AssertionError("unhandled command")  # argparse guards this


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
