"""Command-line entry point.

Exit status: 0 on success, 1 on a domain error (one ``error: ...`` line on
stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources
from typing import Optional, Sequence

from . import _poly
from . import characters as ch
from . import groebner as gb
from . import identities as ids
from . import selftest as st
from . import series
from .core import Field, Signature
from .terms import normalize, parse_term
from .textio import format_monomial, parse_polynomial, polynomial_to_json

__all__ = ["main", "build_parser", "load_schema"]


def load_schema(name: str) -> dict:
    """The shipped JSON schema for a command's envelope (``gs basis`` -> ``gs-basis``)."""
    path = resources.files("bisuper").joinpath("schemas", f"{name.replace(' ', '-')}.schema.json")
    return json.loads(path.read_text(encoding="utf-8"))


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _field(text: str) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None
    if any(v < 0 for v in vals):
        raise argparse.ArgumentTypeError(f"entries must be nonnegative: {text!r}")
    return vals


def _partition(text: str) -> ch.Partition:
    try:
        return ch.Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sig_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--p", type=_nonneg, required=required, help="number of even generators")
    p.add_argument("--q", type=_nonneg, required=required, help="number of odd generators")
    p.add_argument("--field", type=_field, default=Field(0), help="QQ (default) or GF(c) for an odd prime c")


def _fmt_args(p: argparse.ArgumentParser, csv_ok: bool = False) -> None:
    choices = ["text", "json", "csv"] if csv_ok else ["text", "json"]
    p.add_argument("--format", choices=choices, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bisuper", description="Free bicommutative superalgebras: exact computations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("normalize", help="canonical form of a term")
    p.add_argument("term")
    _sig_args(p)
    _fmt_args(p)

    p = sub.add_parser("identity-check", help="check identities by substitution")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--name", action="append", help="catalog identity name (repeatable)")
    g.add_argument("--all", action="store_true", help="the whole catalog")
    g.add_argument("--list", action="store_true", help="list catalog names")
    g.add_argument("--lhs", help="left pattern, e.g. '(x1 (x2 x3))'")
    p.add_argument("--rhs", help="right pattern (omit for '= 0')")
    p.add_argument("--sign", default="0", help="sign exponent over parity symbols, e.g. 'x1*x2'")
    p.add_argument("--parity", action="append", default=[], help="fix a variable parity, e.g. z=1")
    p.add_argument("--p", type=_nonneg, default=2)
    p.add_argument("--q", type=_nonneg, default=3)
    p.add_argument("--field", type=_field, default=Field(0))
    p.add_argument("--trials", type=_nonneg, default=200)
    p.add_argument("--seed", type=int, default=0)
    _fmt_args(p)

    p = sub.add_parser("hilbert", help="Hilbert series of the free algebra")
    _sig_args(p)
    p.add_argument("--grading", choices=series.GRADINGS, default="total")
    p.add_argument("--trunc", type=_nonneg, default=series.DEFAULT_BOUND)
    _fmt_args(p, csv_ok=True)

    p = sub.add_parser("dim", help="dimension of a homogeneous component")
    _sig_args(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_nonneg, help="total degree")
    g.add_argument("--bi", type=_int_list, help="bidegree k,l")
    g.add_argument("--multi", help="multidegree 'k1,..,kp;l1,..,lq'")
    _fmt_args(p)

    p = sub.add_parser("codim", help="codimensions")
    p.add_argument("--n", type=_nonneg, help="ordinary codimension c_n")
    p.add_argument("--p", type=_nonneg)
    p.add_argument("--q", type=_nonneg)
    _fmt_args(p)

    p = sub.add_parser("gk", help="Gelfand-Kirillov dimension of the free algebra")
    _sig_args(p)
    _fmt_args(p)

    p = sub.add_parser("gs", help="Groebner-Shirshov computations for two-sided ideals")
    gsub = p.add_subparsers(dest="gs_command", required=True, parser_class=_Parser)
    for name in ("basis", "reduce", "member", "dims"):
        q = gsub.add_parser(name)
        q.add_argument("--ideal", required=True, help="file with one polynomial per line")
        _sig_args(q)
        q.add_argument("--max-degree", type=_nonneg, default=None)
        q.add_argument("--order", choices=["deglex", "weight"], default="deglex")
        if name in ("reduce", "member"):
            q.add_argument("--poly", required=True)
        _fmt_args(q)

    p = sub.add_parser("cochar", help="cocharacter multiplicities")
    p.add_argument("--lambda", dest="lam", type=_partition)
    p.add_argument("--mu", type=_partition)
    p.add_argument("--table", action="store_true")
    p.add_argument("--max", type=_nonneg, default=6)
    p.add_argument("--field", type=_field, default=Field(0))
    _fmt_args(p, csv_ok=True)

    p = sub.add_parser("schur", help="Schur polynomial")
    p.add_argument("--shape", type=_partition, required=True)
    p.add_argument("--vars", type=_nonneg, required=True)
    p.add_argument("--field", type=_field, default=Field(0))
    _fmt_args(p)

    p = sub.add_parser("selftest", help="run the invariant suite")
    p.add_argument("--seed", type=int, default=0)
    _fmt_args(p)
    return parser


def _sig(args) -> Signature:
    try:
        return Signature(args.p, args.q, args.field)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def _read_ideal(path: str, sig: Signature):
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise DomainError(f"cannot read ideal file: {exc.strerror}: {path}") from None
    gens = []
    for lineno, line in enumerate(lines, 1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            gens.append(parse_polynomial(text, sig))
        except ValueError as exc:
            raise DomainError(f"{path}:{lineno}: {exc}") from None
    return [g for g in gens if g]


def _poly_json(f) -> dict:
    return {"text": str(f), "terms": polynomial_to_json(f)}


def _cmd_normalize(args):
    sig = _sig(args)
    f = normalize(parse_term(args.term, sig), sig)
    return {"p": sig.p, "q": sig.q, "term": args.term}, _poly_json(f), [str(f)], None


def _cmd_identity(args):
    if args.list:
        names = [i.name for i in ids.catalog()]
        return {}, {"names": names}, names, None
    sig = _sig(args)
    if args.lhs:
        pars = {}
        for item in args.parity:
            name, _, val = item.partition("=")
            if val not in ("0", "1"):
                raise DomainError(f"bad parity annotation {item!r}")
            pars[name.strip()] = int(val)
        selected = [ids.Identity.from_text("custom", args.lhs, args.rhs, args.sign, pars or None)]
    elif args.all:
        selected = ids.catalog()
    else:
        selected = [ids.by_name(n) for n in args.name]
    results = [ids.check_identity(i, sig, trials=args.trials, seed=args.seed) for i in selected]
    lines = []
    data = []
    for r in results:
        if r.passed:
            lines.append(f"PASS {r.name} ({r.checked} substitutions)")
        else:
            lines.append(f"FAIL {r.name} witness: {json.dumps(r.witness, sort_keys=True)}")
        data.append({"name": r.name, "passed": r.passed, "checked": r.checked, "witness": r.witness})
    inputs = {"p": sig.p, "q": sig.q, "trials": args.trials, "identities": [i.name for i in selected]}
    failed = [r.name for r in results if not r.passed]
    return inputs, {"results": data, "all_passed": not failed}, lines, failed


def _cmd_hilbert(args):
    sig = _sig(args)
    s = series.hilbert_free(sig, args.grading, bound=args.trunc)
    coeffs = sorted(s.expansion().items(), key=lambda kv: (sum(kv[0]), tuple(-a for a in kv[0])))
    rows = [list(e) + [c] for e, c in coeffs]
    lines = [f"H = {s}"]
    for e, c in coeffs:
        label = " ".join(f"{v}^{a}" for v, a in zip(s.variables, e) if a)
        lines.append(f"{label}: {c}")
    result = {
        "variables": list(s.variables),
        "rational": str(s),
        "numerator": [{"exponent": list(e), "coeff": c} for e, c in sorted(s.numerator.items())],
        "denominator": [{"monomial": list(m), "power": e} for m, e in s.denominator],
        "coefficients": [{"degree": list(e), "dimension": c} for e, c in coeffs],
    }
    header = [f"deg_{v}" for v in s.variables] + ["dimension"]
    inputs = {"p": sig.p, "q": sig.q, "grading": args.grading, "trunc": args.trunc}
    return inputs, result, lines, (header, rows)


def _cmd_dim(args):
    sig = _sig(args)
    if args.n is not None:
        degree = args.n
        shown = args.n
    elif args.bi is not None:
        if len(args.bi) != 2:
            raise DomainError("--bi expects k,l")
        degree = tuple(args.bi)
        shown = list(degree)
    else:
        left, sep, right = args.multi.partition(";")
        if not sep:
            raise DomainError("--multi expects 'k1,..,kp;l1,..,lq'")
        try:
            degree = (_int_list(left), _int_list(right))
        except argparse.ArgumentTypeError as exc:
            raise DomainError(str(exc)) from None
        shown = [list(degree[0]), list(degree[1])]
    d = series.dim_component(sig, degree)
    return {"p": sig.p, "q": sig.q, "degree": shown}, {"dimension": d}, [str(d)], None


def _cmd_codim(args):
    if args.n is not None:
        if args.p is not None or args.q is not None:
            raise DomainError("give either --n or --p/--q")
        c = series.codimension("ordinary", args.n)
        inputs = {"n": args.n}
    else:
        if args.p is None or args.q is None:
            raise DomainError("give --n, or both --p and --q")
        c = series.codimension("super", args.p, args.q)
        inputs = {"p": args.p, "q": args.q}
    return inputs, {"codimension": c}, [str(c)], None


def _cmd_gk(args):
    sig = _sig(args)
    gk = series.gk_dimension_free(sig)
    return {"p": sig.p, "q": sig.q}, {"gk_dimension": gk}, [str(gk)], None


def _cmd_gs(args):
    sig = _sig(args)
    gens = _read_ideal(args.ideal, sig)
    order = gb.MonomialOrder(sig, args.order)
    f = parse_polynomial(args.poly, sig) if args.gs_command in ("reduce", "member") else None
    D = args.max_degree
    if D is None:
        D = max([g.degree for g in gens] + ([f.degree] if f is not None else []) + [1])
    B = gb.truncated_basis(gens, order, D)
    inputs = {"p": sig.p, "q": sig.q, "ideal": [str(g) for g in gens], "max_degree": D, "order": args.order}
    info = {"staircase": [format_monomial(m) for m in B.staircase], "stable_through": B.stable_through}
    if args.gs_command == "basis":
        result = dict(info, generators=[str(g) for g in B.generators], ideal_dims=list(B.ideal_dims))
        lines = [f"staircase: {', '.join(info['staircase']) or '(empty)'}", f"stable_through: {B.stable_through}"]
        lines += [f"g{i}: {g}" for i, g in enumerate(B.generators, 1)]
    elif args.gs_command == "dims":
        dims = gb.quotient_dims(B)
        result = dict(info, quotient_dims=dims)
        lines = [f"{d}: {n}" for d, n in enumerate(dims) if d]
    elif args.gs_command == "reduce":
        inputs["poly"] = args.poly
        r = gb.reduce(f, B.generators, order)
        result = dict(info, remainder=_poly_json(r))
        lines = [str(r)]
    else:
        inputs["poly"] = args.poly
        ans = gb.member(f, B)
        result = dict(info, member=ans)
        lines = [ans]
    return inputs, result, lines, None


def _require_char0(args):
    if args.field.characteristic != 0:
        raise DomainError("cocharacter computations assume characteristic 0")


def _cmd_cochar(args):
    _require_char0(args)
    if args.table:
        rows = []
        for n in range(1, args.max + 1):
            for k in range(n + 1):
                for lam in ch.partitions(k):
                    for mu in ch.partitions(n - k):
                        rows.append((lam, mu, ch.multiplicity(lam, mu)))
        lines = [f"{lam} {mu} {m}" for lam, mu, m in rows]
        result = {"table": [{"lambda": list(l.parts), "mu": list(u.parts), "m": m} for l, u, m in rows]}
        csv_rows = [[",".join(map(str, l.parts)), ",".join(map(str, u.parts)), m] for l, u, m in rows]
        return {"max": args.max}, result, lines, (["lambda", "mu", "m"], csv_rows)
    if args.lam is None or args.mu is None:
        raise DomainError("give --lambda and --mu, or --table")
    m = ch.multiplicity(args.lam, args.mu)
    inputs = {"lambda": list(args.lam.parts), "mu": list(args.mu.parts)}
    return inputs, {"m": m}, [str(m)], (["lambda", "mu", "m"], [[",".join(map(str, args.lam.parts)), ",".join(map(str, args.mu.parts)), m]])


def _cmd_schur(args):
    _require_char0(args)
    if args.vars < 1:
        raise DomainError("need at least one variable")
    f = ch.schur(args.shape, args.vars)
    names = tuple(f"u{i}" for i in range(1, args.vars + 1))
    text = _poly.format_poly(f, names)
    result = {"polynomial": text, "terms": [{"exponent": list(e), "coeff": c} for e, c in sorted(f.items(), reverse=True)]}
    return {"shape": list(args.shape.parts), "vars": args.vars}, result, [text], None


def _cmd_selftest(args):
    results = st.run(args.seed)
    width = max(len(r.name) for r in results)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.detail}" for r in results]
    data = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
    failed = [r.name for r in results if not r.passed]
    return {}, {"checks": data, "all_passed": not failed}, lines, failed


COMMANDS = {
    "normalize": _cmd_normalize,
    "identity-check": _cmd_identity,
    "hilbert": _cmd_hilbert,
    "dim": _cmd_dim,
    "codim": _cmd_codim,
    "gk": _cmd_gk,
    "gs": _cmd_gs,
    "cochar": _cmd_cochar,
    "schur": _cmd_schur,
    "selftest": _cmd_selftest,
}
RANDOMIZED = {"identity-check", "selftest"}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    command = args.command if args.command != "gs" else f"gs {args.gs_command}"
    randomized = args.command in RANDOMIZED and not getattr(args, "list", False)
    seed = args.seed if randomized else None
    try:
        out = COMMANDS[args.command](args)
    except (DomainError, ValueError, KeyError, ZeroDivisionError) as exc:
        msg = str(exc.args[0]) if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"error: {' '.join(msg.split())}", file=sys.stderr)
        return 1
    inputs, result, lines, extra = out
    buf = io.StringIO()
    fmt = args.format
    if fmt == "json":
        envelope = {"command": command, "inputs": inputs, "result": result, "seed": seed}
        buf.write(json.dumps(envelope, indent=2) + "\n")
    elif fmt == "csv":
        header, rows = extra
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        if seed is not None:
            buf.write(f"# seed: {seed}\n")
        for line in lines:
            buf.write(line + "\n")
    sys.stdout.write(buf.getvalue())
    sys.stdout.flush()
    if randomized and extra:
        print(f"error: failed: {', '.join(extra)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
