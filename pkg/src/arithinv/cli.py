"""Command-line front end.

Computes invariants of zero-sum sequences, runs witness verifications and
named check suites, and manages the on-disk atom cache.  Reports come in
three formats: ``json`` (canonical, schema-versioned), ``csv`` (a projection
of the report's rows), and ``md`` (human-readable, the default).

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 size limit hit.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Callable, Sequence as Seq

from . import cache
from .errors import (
    ArithInvError,
    InvalidInstanceError,
    InvariantViolationError,
    ParseError,
    SizeLimitError,
)
from .factorize import catenary as catenary_of
from .factorize import davenport as davenport_of
from .factorize import enumerate_atoms, factorizations
from .group import GroupSpec, format_group_spec, parse_element, parse_group_spec
from .invariants import (
    ScanReport,
    ca_scan,
    daleth_star,
    davenport_star,
    delta_scan,
    elasticity_of,
    elasticity_scan,
    r_scan,
    rho_group,
)
from .sequence import Alphabet, Sequence, block_alphabet, parse_sequence
from .tame import ta_scan, tame as tame_of
from .verify import SUITE_VERSION, run_suite, suite_description, suite_names
from .witnesses import (
    Witness,
    WitnessReport,
    catenary_two_witness,
    integer_catenary_witnesses,
    rank3_tame_two_witness,
    reflection_tame_witness,
    tame_two_case_witness,
    two_group_tame_family,
    two_primes_witness,
    verify_witness,
)

_SCHEMA = 1
_TERM_SEP = re.compile(r"[\s·*]+")
_ALIAS_RE = re.compile(r"^e(\d+)$")

Report = dict
Handler = Callable[[argparse.Namespace], "tuple[int, Report]"]


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------

def _block(spec_text: str) -> tuple[GroupSpec, Alphabet]:
    spec = parse_group_spec(spec_text)
    return spec, block_alphabet(spec)


def _support_elements(spec: GroupSpec, text: str) -> list:
    """Group elements named by the terms of a sequence description."""
    out = []
    stripped = text.strip()
    if not stripped or stripped == "1":
        return out
    for term in _TERM_SEP.split(stripped):
        base = term.rpartition("^")[0] if "^" in term and term.rpartition("^")[2].isdigit() else term
        if not base:
            base = term
        m = _ALIAS_RE.match(base)
        if m:
            i = int(m.group(1))
            if i > spec.rank:
                raise ParseError(f"alias {base!r} exceeds the {spec.rank} "
                                 f"coordinates of {format_group_spec(spec)}")
            basis = spec.standard_basis(with_sum=True)
            out.append(basis[i] if i else basis[0])
            continue
        inner = base[1:-1] if base.startswith("(") and base.endswith(")") else None
        for candidate in (base, inner):
            if candidate is None:
                continue
            try:
                out.append(parse_element(spec, candidate))
                break
            except ParseError:
                continue
        else:
            raise ParseError(f"cannot read term {base!r} as an element of "
                             f"{format_group_spec(spec)}")
    return out


def _element_alphabet(spec_text: str, *seq_texts: str) -> tuple[GroupSpec, Alphabet]:
    """Alphabet for parsing sequences: the whole group when finite, else the
    classes the sequence texts actually name."""
    spec = parse_group_spec(spec_text)
    if spec.is_finite():
        return spec, block_alphabet(spec)
    elems = []
    for text in seq_texts:
        elems.extend(_support_elements(spec, text))
    if not elems:
        elems = [spec.zero()]
    return spec, block_alphabet(elems)


def _scan_report(command: str, scan: ScanReport) -> Report:
    data = scan.to_json()
    rows = [{"value": v,
             "witness": data["witnesses"].get(str(v), {}).get("text", "")}
            for v in data["values"]]
    return {
        "schema": _SCHEMA,
        "command": command,
        "invariant": data["invariant"],
        "group": data["group"],
        "bound": data["bound"],
        "complete": data["complete"],
        "summary": scan.summary(),
        "values": data["values"],
        "annotations": data["annotations"],
        "rows": rows,
    }


def _render_factorization(atoms: tuple[Sequence, ...]) -> str:
    return " ".join(f"[{a.render()}]" for a in atoms) or "(empty)"


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_atoms(args: argparse.Namespace) -> tuple[int, Report]:
    spec, alpha = _block(args.spec)
    enum = enumerate_atoms(alpha) if args.no_cache else cache.cached_enumerate_atoms(alpha)
    rows = [{"atom": a.render(), "length": len(a)} for a in enum.atoms]
    return 0, {
        "schema": _SCHEMA,
        "command": "atoms",
        "group": format_group_spec(spec),
        "count": len(enum.atoms),
        "davenport": enum.davenport,
        "rows": rows,
    }


def _cmd_davenport(args: argparse.Namespace) -> tuple[int, Report]:
    spec, alpha = _block(args.spec)
    enum = enumerate_atoms(alpha) if args.no_cache else cache.cached_enumerate_atoms(alpha)
    star = davenport_star(spec)
    return 0, {
        "schema": _SCHEMA,
        "command": "davenport",
        "group": format_group_spec(spec),
        "davenport": enum.davenport,
        "davenport_star": star,
        "summary": f"D={enum.davenport}, D*={star}",
        "rows": [{"davenport": enum.davenport, "davenport_star": star}],
    }


def _cmd_factor(args: argparse.Namespace) -> tuple[int, Report]:
    spec, alpha = _element_alphabet(args.spec, args.sequence)
    b = parse_sequence(alpha, args.sequence)
    fs = factorizations(b)
    rows = []
    for i in range(len(fs)):
        z = fs.factorization(i)
        rows.append({"length": len(z), "factorization": _render_factorization(z)})
    rows.sort(key=lambda r: (r["length"], r["factorization"]))
    lengths = sorted({r["length"] for r in rows})
    return 0, {
        "schema": _SCHEMA,
        "command": "factor",
        "group": format_group_spec(spec),
        "element": b.render(),
        "count": len(fs),
        "lengths": lengths,
        "elasticity": str(elasticity_of(lengths)) if lengths else "1",
        "rows": rows,
    }


def _cmd_catenary(args: argparse.Namespace) -> tuple[int, Report]:
    spec, alpha = _element_alphabet(args.spec, args.sequence)
    b = parse_sequence(alpha, args.sequence)
    value = catenary_of(b)
    return 0, {
        "schema": _SCHEMA,
        "command": "catenary",
        "group": format_group_spec(spec),
        "element": b.render(),
        "catenary": value,
        "rows": [{"element": b.render(), "catenary": value}],
    }


def _cmd_tame(args: argparse.Namespace) -> tuple[int, Report]:
    spec, alpha = _element_alphabet(args.spec, args.sequence, args.atom)
    b = parse_sequence(alpha, args.sequence)
    u = parse_sequence(alpha, args.atom)
    value = tame_of(b, u)
    return 0, {
        "schema": _SCHEMA,
        "command": "tame",
        "group": format_group_spec(spec),
        "element": b.render(),
        "atom": u.render(),
        "tame": value,
        "rows": [{"element": b.render(), "atom": u.render(), "tame": value}],
    }


def _default_bound(alpha: Alphabet) -> int:
    return 2 * davenport_of(alpha) + 2


def _cmd_delta(args: argparse.Namespace) -> tuple[int, Report]:
    _, alpha = _block(args.spec)
    bound = args.bound if args.bound is not None else _default_bound(alpha)
    return 0, _scan_report("delta", delta_scan(alpha, bound, jobs=args.jobs))


def _cmd_daleth(args: argparse.Namespace) -> tuple[int, Report]:
    _, alpha = _block(args.spec)
    return 0, _scan_report("daleth", daleth_star(alpha))


def _cmd_elasticity(args: argparse.Namespace) -> tuple[int, Report]:
    spec, alpha = _block(args.spec)
    bound = args.bound if args.bound is not None else _default_bound(alpha)
    report = _scan_report("elasticity", elasticity_scan(alpha, bound, jobs=args.jobs))
    report["group_elasticity"] = str(rho_group(spec))
    return 0, report


def _cmd_scan_ca(args: argparse.Namespace) -> tuple[int, Report]:
    _, alpha = _block(args.spec)
    return 0, _scan_report("scan-ca", ca_scan(alpha, args.bound, jobs=args.jobs))


def _cmd_scan_r(args: argparse.Namespace) -> tuple[int, Report]:
    _, alpha = _block(args.spec)
    return 0, _scan_report("scan-r", r_scan(alpha, args.bound, jobs=args.jobs))


def _cmd_scan_ta(args: argparse.Namespace) -> tuple[int, Report]:
    _, alpha = _block(args.spec)
    return 0, _scan_report("scan-ta", ta_scan(alpha, args.bound, jobs=args.jobs))


# -- witness --------------------------------------------------------------------

def _int_param(name: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{name} must be an integer, got {text!r}") from None


def _need(params: Seq[str], *names: str) -> list[str]:
    if len(params) != len(names):
        raise InvalidInstanceError(
            f"expected parameters: {' '.join(f'<{n}>' for n in names)}")
    return list(params)


def _build_catenary_two(params: Seq[str]) -> list[Witness]:
    (spec_text,) = _need(params, "group")
    return [catenary_two_witness(parse_group_spec(spec_text))]


def _build_integer_chain(params: Seq[str]) -> list[Witness]:
    (n,) = _need(params, "n")
    return [integer_catenary_witnesses(_int_param("n", n))[0]]


def _build_integer_window(params: Seq[str]) -> list[Witness]:
    _need(params)
    return [integer_catenary_witnesses(2)[1]]


def _build_reflection(params: Seq[str]) -> list[Witness]:
    spec_text, m = _need(params, "group", "length")
    return [reflection_tame_witness(parse_group_spec(spec_text),
                                    _int_param("length", m))]


def _build_tame_two(params: Seq[str]) -> list[Witness]:
    (case,) = _need(params, "case")
    return [tame_two_case_witness(case)]


def _build_rank3(params: Seq[str]) -> list[Witness]:
    _need(params)
    return [rank3_tame_two_witness()]


def _build_two_primes(params: Seq[str]) -> list[Witness]:
    (n,) = _need(params, "order")
    return [two_primes_witness(_int_param("order", n))]


def _build_two_group(params: Seq[str]) -> list[Witness]:
    variant, r, nu = _need(params, "variant", "rank", "nu")
    return [two_group_tame_family(variant, _int_param("rank", r),
                                  _int_param("nu", nu))]


_WITNESSES: dict[str, tuple[Callable[[Seq[str]], list[Witness]], str]] = {
    "catenary-two": (_build_catenary_two,
                     "<group>: an element with catenary degree exactly 2"),
    "integer-chain": (_build_integer_chain,
                      "<n>: integer element g^n (-g)^n (ng) (-ng), catenary n+1"),
    "integer-window": (_build_integer_window,
                       "fixed eight-letter integer element, catenary 2"),
    "reflection": (_build_reflection,
                   "<group> <length>: atom times its reflection, tame = length"),
    "tame-two": (_build_tame_two,
                 "<case: c6, c3c3 or z>: a two-atom product of tame degree 2"),
    "rank3": (_build_rank3, "rank-three two-atom product of tame degree 2"),
    "two-primes": (_build_two_primes,
                   "<order>: doubled letter class, tame degree 2"),
    "two-group": (_build_two_group,
                  "<variant: even, odd, chain2 or chain0> <rank> <nu>: "
                  "two-group family member with its closed-form tame degree"),
}


def _cmd_witness(args: argparse.Namespace) -> tuple[int, Report]:
    name = args.name
    if name == "list":
        rows = [{"witness": key, "parameters": desc}
                for key, desc in sorted((k, d) for k, (_, d) in _WITNESSES.items())]
        return 0, {"schema": _SCHEMA, "command": "witness", "rows": rows}
    if name not in _WITNESSES:
        raise ParseError(f"unknown witness {name!r}; run `witness list` "
                         f"or pick from: {', '.join(sorted(_WITNESSES))}")
    builder, _ = _WITNESSES[name]
    witnesses = builder(args.params)
    rows = []
    reports: list[WitnessReport] = []
    for w in witnesses:
        rep = verify_witness(w)
        reports.append(rep)
        rows.append({
            "witness": rep.name,
            "element": w.element.render(),
            "predicted": rep.predicted,
            "computed": rep.computed if rep.computed is not None else "",
            "method": rep.method,
            "ok": rep.ok,
        })
    ok = all(r.ok for r in reports)
    return (0 if ok else 1), {
        "schema": _SCHEMA,
        "command": "witness",
        "name": name,
        "ok": ok,
        "claims": [w.claim for w in witnesses],
        "rows": rows,
    }


def _cmd_verify(args: argparse.Namespace) -> tuple[int, Report]:
    checks = run_suite(args.suite)
    rows = [{"check": c.label, "ok": c.ok, "detail": c.detail} for c in checks]
    failed = sum(1 for c in checks if not c.ok)
    return (0 if not failed else 1), {
        "schema": _SCHEMA,
        "command": "verify",
        "suite": args.suite,
        "suite_version": SUITE_VERSION,
        "description": ("every suite in order" if args.suite == "all"
                        else suite_description(args.suite)),
        "ok": not failed,
        "passed": len(checks) - failed,
        "failed": failed,
        "rows": rows,
    }


def _cmd_cache(args: argparse.Namespace) -> tuple[int, Report]:
    if args.action == "clear":
        removed = cache.clear()
        return 0, {
            "schema": _SCHEMA,
            "command": "cache",
            "action": "clear",
            "removed": removed,
            "rows": [{"removed": removed}],
        }
    entries = cache.list_entries()
    rows = [{"file": p.name, "bytes": p.stat().st_size} for p in entries]
    return 0, {
        "schema": _SCHEMA,
        "command": "cache",
        "action": "list",
        "directory": str(cache.cache_dir()),
        "count": len(entries),
        "rows": rows,
    }


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _render_json(report: Report) -> str:
    return json.dumps(report, indent=2)


def _render_csv(report: Report) -> str:
    rows = report.get("rows")
    if not rows:
        rows = [{k: v for k, v in report.items()
                 if k != "schema" and not isinstance(v, (dict, list))}]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _render_md(report: Report) -> str:
    lines = [f"## {report['command']}"]
    for key, value in report.items():
        if key in ("schema", "command", "rows") or isinstance(value, dict):
            continue
        if isinstance(value, list):
            value = ", ".join(str(v) for v in value)
        lines.append(f"- {key}: {value}")
    rows = report.get("rows") or []
    if rows:
        cols = list(rows[0])
        lines.append("")
        lines.append("| " + " | ".join(cols) + " |")
        lines.append("| " + " | ".join("---" for _ in cols) + " |")
        for row in rows:
            lines.append("| " + " | ".join(str(row.get(c, "")) for c in cols) + " |")
    return "\n".join(lines)


_RENDERERS = {"json": _render_json, "csv": _render_csv, "md": _render_md}


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"), default="md",
                        help="report format (default: md)")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker threads for scans (default: 1)")

    parser = argparse.ArgumentParser(
        prog="arithinv",
        description="Invariants of zero-sum sequences over finitely "
                    "generated abelian groups.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("atoms", parents=[common],
                       help="list every atom over a group's full alphabet")
    p.add_argument("spec", help="group, e.g. C6, C2^3, C4xC6")
    p.add_argument("--no-cache", action="store_true",
                   help="skip the on-disk atom cache")
    p.set_defaults(handler=_cmd_atoms)

    p = sub.add_parser("davenport", parents=[common],
                       help="longest atom length and the torsion bound")
    p.add_argument("spec")
    p.add_argument("--no-cache", action="store_true",
                   help="skip the on-disk atom cache")
    p.set_defaults(handler=_cmd_davenport)

    p = sub.add_parser("factor", parents=[common],
                       help="all factorizations of a zero-sum sequence")
    p.add_argument("spec")
    p.add_argument("sequence", help='e.g. "g^3 (-g)^3" or "e1 e2 e0"')
    p.set_defaults(handler=_cmd_factor)

    p = sub.add_parser("catenary", parents=[common],
                       help="catenary degree of a zero-sum sequence")
    p.add_argument("spec")
    p.add_argument("sequence")
    p.set_defaults(handler=_cmd_catenary)

    p = sub.add_parser("tame", parents=[common],
                       help="tame degree of a sequence with respect to an atom")
    p.add_argument("spec")
    p.add_argument("sequence")
    p.add_argument("atom")
    p.set_defaults(handler=_cmd_tame)

    p = sub.add_parser("delta", parents=[common],
                       help="set of length gaps across all elements up to a bound")
    p.add_argument("spec")
    p.add_argument("--bound", type=int, default=None, metavar="N",
                   help="max element length (default: twice the longest atom + 2)")
    p.set_defaults(handler=_cmd_delta)

    p = sub.add_parser("daleth", parents=[common],
                       help="adjusted shortest lengths over products of atom pairs")
    p.add_argument("spec")
    p.add_argument("--bound", type=int, default=None, metavar="N",
                   help="accepted for symmetry; the pair sweep is already finite")
    p.set_defaults(handler=_cmd_daleth)

    p = sub.add_parser("elasticity", parents=[common],
                       help="set of element elasticities up to a bound")
    p.add_argument("spec")
    p.add_argument("--bound", type=int, default=None, metavar="N",
                   help="max element length (default: twice the longest atom + 2)")
    p.set_defaults(handler=_cmd_elasticity)

    for name, handler, blurb in (
            ("scan-ca", _cmd_scan_ca, "catenary degrees across all elements"),
            ("scan-r", _cmd_scan_r, "minimal-relation lengths across all elements"),
            ("scan-ta", _cmd_scan_ta, "tame degrees across all atom/element pairs")):
        p = sub.add_parser(name, parents=[common], help=blurb + " up to a bound")
        p.add_argument("spec")
        p.add_argument("--bound", type=int, required=True, metavar="N",
                       help="max element length")
        p.set_defaults(handler=handler)

    p = sub.add_parser("witness", parents=[common],
                       help="build a named witness element and verify its claim")
    p.add_argument("name", help='witness name, or "list" for the catalog')
    p.add_argument("params", nargs="*", help="witness parameters")
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("verify", parents=[common],
                       help="run a named check suite (or all of them)")
    p.add_argument("suite", choices=[*suite_names(), "all"])
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("cache", parents=[common],
                       help="list or clear the on-disk atom cache")
    p.add_argument("action", nargs="?", choices=("list", "clear"), default="list")
    p.set_defaults(handler=_cmd_cache)

    return parser


def main(argv: Seq[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return code
    try:
        code, report = args.handler(args)
    except SizeLimitError as exc:
        print(_RENDERERS[args.format]({
            "schema": _SCHEMA,
            "command": args.command,
            "partial": True,
            "error": str(exc),
        }), file=sys.stderr)
        return 3
    except InvariantViolationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except ArithInvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(_RENDERERS[args.format](report))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
