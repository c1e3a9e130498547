"""Command-line front end.

Subcommands: roots, graph, capacity, table, verify.  Every rational is
emitted exactly ('p/q' or integer string); there is no floating-point
formatting anywhere.  BC_GROUP_CAP overrides the default group cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import capacity, checks, graphs
from .errors import BruhatCapError, ValidationError
from .rootsystem import build, parse_rational, rational_str, vector_strs
from .weyl import DEFAULT_GROUP_CAP, generate


def _env_group_cap() -> int:
    raw = os.environ.get("BC_GROUP_CAP")
    if raw is None:
        return DEFAULT_GROUP_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"BC_GROUP_CAP must be an integer, got {raw!r}") from None


def parse_lambda(raw: str) -> tuple[Fraction, ...]:
    """Comma-separated rationals: '3,2,1' or '3/2,-1,0'."""
    parts = [p for p in raw.split(",") if p.strip()]
    if not parts:
        raise ValidationError("empty lambda")
    return tuple(parse_rational(p) for p in parts)


def default_table_lambda(rs) -> tuple[Fraction, ...]:
    """Documented default sample: lambda = sum_i (rank+1-i) * omega_i, a
    regular dominant weight."""
    return capacity.dominant_from_pairings(rs, [rs.rank - i for i in range(rs.rank)])


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_type_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", "-t", required=True, help="family letter A..G")
    p.add_argument("--rank", "-r", required=True, type=int)


# ---------------------------------------------------------------------------


def cmd_roots(args) -> int:
    rs = build(args.type, args.rank)
    rows = []
    for i in rs.positive:
        rows.append({
            "root": vector_strs(rs.roots[i]),
            "coroot": vector_strs(rs.coroot(i)),
            "coroot_coefficients": list(rs.coroot_coefficients(i)),
            "height": rs.coroot_height(i),
            "simple": i in rs.simple,
            "highest": i == rs.highest,
        })
    if args.format == "json":
        payload = {
            "type": rs.family,
            "rank": rs.rank,
            "ambient_dim": rs.ambient_dim,
            "n_roots": len(rs.roots),
            "n_positive": len(rs.positive),
            "weyl_order": rs.weyl_order,
            "highest_root": vector_strs(rs.rho),
            "simple_roots": [vector_strs(rs.roots[i]) for i in rs.simple],
            "positive_roots": rows,
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["root", "coroot", "coroot_coefficients", "height", "simple", "highest"])
        for row in rows:
            writer.writerow([
                " ".join(row["root"]), " ".join(row["coroot"]),
                " ".join(map(str, row["coroot_coefficients"])),
                row["height"], row["simple"], row["highest"],
            ])
        _emit(buf.getvalue(), args.output)
    else:
        lines = [
            f"{rs.family}{rs.rank}: {len(rs.roots)} roots, {len(rs.positive)} positive, "
            f"|W| = {rs.weyl_order}",
            f"highest root rho = ({','.join(vector_strs(rs.rho))})",
            "positive roots (root | coroot | height):",
        ]
        for row in rows:
            mark = " *" if row["simple"] else ("  <- rho" if row["highest"] else "")
            lines.append(
                f"  ({','.join(row['root'])}) | ({','.join(row['coroot'])}) | {row['height']}{mark}"
            )
        lines.append("(* marks simple roots)")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_graph(args) -> int:
    lam = parse_lambda(args.lam) if args.lam else None
    if args.kind == "cayley":
        if args.n is None:
            raise ValidationError("graph cayley requires --n")
        if lam is None:
            raise ValidationError("graph cayley requires --lambda")
        graph = graphs.cayley_graph(args.n, lam, cap=args.cayley_cap)
        _emit(graphs.export(graph, args.format), args.output)
        return 0
    if not args.type or args.rank is None:
        raise ValidationError(f"graph {args.kind} requires --type and --rank")
    rs = build(args.type, args.rank)
    weyl = generate(rs, cap=args.group_cap)
    if args.kind == "quantum":
        graph = graphs.quantum_bruhat_graph(weyl)
        _emit(graphs.export(graph, args.format, lam=lam), args.output)
        return 0
    # bruhat: an explicit lambda induces S_P and decorates edges with areas
    if lam is not None:
        if len(lam) != rs.ambient_dim:
            raise ValidationError(
                f"lambda has {len(lam)} coordinates; {rs.family}{rs.rank} needs {rs.ambient_dim}"
            )
        lam_used = rs.project_to_root_span(lam) if rs.family == "G" else lam
        capacity.require_dominant(rs, lam_used)
        pd = weyl.parabolic(capacity.parabolic_positions(rs, lam_used))
        graph = graphs.bruhat_graph(weyl, pd)
        _emit(graphs.export(graph, args.format, lam=lam_used), args.output)
    else:
        graph = graphs.bruhat_graph(weyl)
        _emit(graphs.export(graph, args.format), args.output)
    return 0


def cmd_capacity(args) -> int:
    lam = parse_lambda(args.lam)
    bounds = capacity.hz_bounds(
        args.type, args.rank, lam,
        confirm_cap=args.confirm_cap, group_cap=args.group_cap,
    )
    if args.format == "json":
        _emit(json.dumps(bounds.as_dict(), indent=2, sort_keys=True) + "\n", args.output)
        return 0
    lines = [
        f"type {bounds.family}{bounds.rank}, lambda = ({','.join(vector_strs(bounds.lam_input))})",
    ]
    if bounds.lam != bounds.lam_input:
        lines.append(
            f"projected onto the root plane: ({','.join(vector_strs(bounds.lam))})"
        )
    lines += [
        f"lower bound  = {rational_str(bounds.lower)}   (witness simple root alpha_{bounds.witness + 1})",
        f"upper bound  = {rational_str(bounds.upper)}",
    ]
    if bounds.exact is not None:
        lines.append(f"exact value  = {rational_str(bounds.exact)}")
    lines.append(
        "decomposition roots: "
        + "; ".join("(" + ",".join(vector_strs(v)) + ")" for v in bounds.decomposition.vectors)
    )
    if bounds.d_min_degree is not None:
        lines.append(f"d_min(w0, e) = {tuple(bounds.d_min_degree)}")
    if bounds.min_area is not None:
        lines.append(f"min path area (Bruhat graph) = {rational_str(bounds.min_area)}")
    lines.append("checks: " + ", ".join(f"{k}={v}" for k, v in bounds.checks.items()))
    _emit("\n".join(lines) + "\n", args.output)
    return 0


_SO_LABELS = {"B": lambda r: f"SO({2 * r + 1})", "D": lambda r: f"SO({2 * r})"}


def _group_label(fam: str, rank: int) -> str:
    if fam == "A":
        return f"U({rank + 1})"
    if fam == "C":
        return f"Sp({2 * rank})"
    if fam in _SO_LABELS:
        n = 2 * rank + (1 if fam == "B" else 0)
        return f"SO({n})=SO(4m+{n % 4})"
    return f"{fam}{rank}"


def cmd_table(args) -> int:
    lam_fixed = parse_lambda(args.lam) if args.lam else None
    wanted = checks.TABLE_TYPES
    if args.type:
        wanted = tuple((f, r) for f, r in wanted if f == args.type.upper())
    if args.rank is not None:
        wanted = tuple((f, r) for f, r in wanted if r == args.rank)
    if not wanted:
        raise ValidationError("no table rows match the requested type/rank")
    if lam_fixed is not None and len(wanted) != 1:
        raise ValidationError("--lambda with `table` needs a single row (--type and --rank)")
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow([
        "family", "rank", "group", "lambda",
        "lower_closed_form", "lower_first_principles",
        "upper_closed_form", "upper_first_principles",
        "lower_match", "upper_match", "sharp", "exact_value",
    ])
    all_match = True
    for fam, rank in wanted:
        rs = build(fam, rank)
        lam = lam_fixed if lam_fixed is not None else default_table_lambda(rs)
        if fam == "G":
            lam = rs.project_to_root_span(lam)
        dec = capacity.w0_decomposition(rs)
        closed_low, closed_up = capacity.closed_form_table(rs, lam)
        up = capacity.upper_bound(rs, lam, dec)
        low, _ = capacity.lower_bound(rs, lam, dec)
        exact = capacity.unitary_capacity(lam) if fam == "A" else None
        lower_match = closed_low == low
        upper_match = closed_up == up
        all_match = all_match and lower_match and upper_match
        writer.writerow([
            fam, rank, _group_label(fam, rank),
            " ".join(vector_strs(lam)),
            rational_str(closed_low), rational_str(low),
            rational_str(closed_up), rational_str(up),
            lower_match, upper_match, low == up,
            rational_str(exact) if exact is not None else "",
        ])
    _emit(buf.getvalue(), args.output)
    return 0 if all_match else 2


def cmd_verify(args) -> int:
    names = [n.strip() for n in args.only.split(",")] if args.only else None
    results = checks.run_checks(
        names=names, seed=args.seed, type_filter=args.type, rank_filter=args.rank
    )
    lines = []
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        lines.append(f"[{status}] {res.name} ({res.seconds:.2f}s): {res.detail}")
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 2


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bruhatcap",
        description="Exact capacity bounds for coadjoint orbits via Bruhat-type graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_roots = sub.add_parser("roots", help="list roots, coroots and heights of a type")
    _add_type_args(p_roots)
    p_roots.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_roots.add_argument("--output", "-o", default=None)
    p_roots.set_defaults(func=cmd_roots)

    p_graph = sub.add_parser("graph", help="export a Bruhat, quantum Bruhat or Cayley graph")
    p_graph.add_argument("kind", choices=["bruhat", "quantum", "cayley"])
    p_graph.add_argument("--type", "-t", default=None)
    p_graph.add_argument("--rank", "-r", type=int, default=None)
    p_graph.add_argument("--n", type=int, default=None, help="symmetric group size (cayley)")
    p_graph.add_argument("--lambda", dest="lam", default=None,
                         help="comma-separated rationals; for bruhat, induces S_P and areas")
    p_graph.add_argument("--format", choices=["dot", "json"], default="dot")
    p_graph.add_argument("--group-cap", type=int, default=_env_group_cap())
    p_graph.add_argument("--cayley-cap", type=int, default=graphs.DEFAULT_CAYLEY_CAP)
    p_graph.add_argument("--output", "-o", default=None)
    p_graph.set_defaults(func=cmd_graph)

    p_cap = sub.add_parser("capacity", help="compute capacity bounds for a dominant weight")
    _add_type_args(p_cap)
    p_cap.add_argument("--lambda", dest="lam", required=True)
    p_cap.add_argument("--format", choices=["text", "json"], default="text")
    p_cap.add_argument("--confirm-cap", type=int, default=capacity.DEFAULT_CONFIRM_CAP,
                       help="enumerate W and run graph confirmations when |W| is at most this")
    p_cap.add_argument("--group-cap", type=int, default=_env_group_cap())
    p_cap.add_argument("--output", "-o", default=None)
    p_cap.set_defaults(func=cmd_capacity)

    p_table = sub.add_parser(
        "table",
        help="closed-form bounds vs first principles, one CSV row per type; "
        "default lambda per row is sum_i (rank+1-i)*omega_i",
    )
    p_table.add_argument("--type", "-t", default=None)
    p_table.add_argument("--rank", "-r", type=int, default=None)
    p_table.add_argument("--lambda", dest="lam", default=None,
                         help="fixed weight (requires a single row via --type/--rank)")
    p_table.add_argument("--output", "-o", default=None)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--only", default=None,
                          help=f"comma-separated subset of: {', '.join(checks.ALL_CHECKS)}")
    p_verify.add_argument("--type", "-t", default=None, help="restrict typed checks to a family")
    p_verify.add_argument("--rank", "-r", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--output", "-o", default=None)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BruhatCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
