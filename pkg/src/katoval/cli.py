"""Command-line front end: ``katoval <command> ...``.

Every report is deterministic text.  Failures print one line
``error[<tag>]: <message>`` on stderr and exit with status 2.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import blowup, dualgraph, germdyn, kato
from .numerics import QuadNumber, hj_expand

_TAGS = [
    (dualgraph.GraphFormatError, "graph-format"),
    (dualgraph.NotInvertibleError, "singular-matrix"),
    (dualgraph.NotNegativeDefiniteError, "not-negative-definite"),
    (blowup.BlowupError, "blowup"),
    (germdyn.InvalidGermError, "invalid-germ"),
    (kato.KatoError, "kato"),
    (OSError, "io"),
    (ValueError, "invalid-input"),
    (ArithmeticError, "arithmetic"),
]


class _Out:
    def __init__(self, approx: bool):
        self.approx = approx
        self.lines: list[str] = []

    def num(self, x) -> str:
        text = str(x)
        if self.approx and isinstance(x, QuadNumber) and not x.is_rational():
            text += f" (~{float(x):.6f}, approximate)"
        return text

    def __call__(self, line: str = "") -> None:
        self.lines.append(line)

    def section(self, title: str) -> None:
        if self.lines:
            self.lines.append("")
        self.lines.append(f"== {title}")

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _matrix(out: _Out, rows) -> None:
    cells = [[str(x) for x in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    for row in cells:
        out("  [" + " ".join(c.rjust(width) for c in row) + "]")


def _graph_report(out: _Out, g: dualgraph.DualGraph) -> None:
    m = dualgraph.intersection_matrix(g)
    out.section("graph")
    out(f"primes: {' '.join(g.ids)}")
    out.section("intersection matrix")
    _matrix(out, m.tolist())
    det = dualgraph.determinant(m)
    out(f"det: {det}")
    nd = dualgraph.is_negative_definite(m)
    out(f"negative definite: {'yes' if nd else 'no'}")
    if det == 0:
        out("inverse: none (singular)")
        return
    out.section("inverse")
    _matrix(out, dualgraph.inverse_matrix(m))
    out.section("log-discrepancies")
    for vid, a in dualgraph.log_discrepancies(g).items():
        out(f"A({vid}) = {a}")
    if nd and g.is_connected():
        out.section("fundamental cycle")
        z = dualgraph.fundamental_cycle(g)
        out(" + ".join(f"{c}*{v}" for v, c in z.items()))


def _write_dot(path: str | None, g: dualgraph.DualGraph) -> None:
    if path:
        Path(path).write_text(g.to_dot())


def cmd_graph(args, out: _Out) -> None:
    g = dualgraph.DualGraph.from_text(_read(args.file))
    _graph_report(out, g)
    _write_dot(args.dot, g)


def cmd_quotient(args, out: _Out) -> None:
    chain = hj_expand(args.p, args.q)
    out.section(f"cyclic quotient 1/{args.p}(1,{args.q})")
    out(f"continued fraction: [{', '.join(map(str, chain))}]")
    g = dualgraph.quotient_chain(args.p, args.q)
    _graph_report(out, g)
    _write_dot(args.dot, g)


def cmd_blowup(args, out: _Out) -> None:
    seq = blowup.BlowupSequence.from_script(_read(args.script))
    out.section("steps")
    for n, (step, pid) in enumerate(zip(blowup.parse_steps(seq.to_script()), seq.created), 1):
        out(f"{n}: {blowup.format_steps([step]).strip()} -> {pid}")
    out.section("primes")
    out("id  b  A  self")
    for pid in seq.primes:
        r = seq.record(pid)
        out(f"{pid}  {r.b}  {r.A}  {r.self_intersection}")
    if not seq.primes:
        return
    g = seq.to_dual_graph()
    out.section("skeleton")
    sk = seq.skeleton()
    for u, v in g.edges:
        be, bf = sk.segment(u, v)
        out(f"{u}-{v}: {be}*r + {bf}*s = 1")
    _write_dot(args.dot, g)


def _eigen_lines(out: _Out, rep: germdyn.EigenReport) -> None:
    out(f"type: {rep.type}")
    slope = "infinite" if rep.shadow_slope is None else out.num(rep.shadow_slope)
    out(f"fixed slope: {slope}")
    if rep.eigenvalue is not None:
        out(f"eigenvalue: {out.num(rep.eigenvalue)}")
        w = rep.normalized_weights
        out(f"eigen-weights: ({out.num(w.r)}, {out.num(w.s)})")
        out(f"component action: {rep.component_action}")
    for msg in rep.warnings:
        out(f"warning: {msg}")


def cmd_germ(args, out: _Out) -> None:
    form = " ".join(args.form)
    nf = germdyn.parse_germ(form)
    out.section("germ")
    out(f"input: {form}")
    errs = germdyn.validate(nf)
    if errs:
        raise germdyn.InvalidGermError("; ".join(errs))
    out("valid: yes")
    out(f"topological degree: {germdyn.topdeg(nf)}")
    out.section("eigenvaluation")
    rep = germdyn.eigenvaluation(nf)
    _eigen_lines(out, rep)
    out.section("contracted curves")
    for tag, w in germdyn.contracted_curves(nf):
        out(f"{tag} -> ({w.r}, {w.s})")
    out.section("surface")
    out(f"class: {kato.classify_surface(rep)}")


def _load_datum(token: str) -> kato.KatoDatum:
    if token.startswith("family:"):
        return kato.quotient_family_datum(int(token.split(":", 1)[1]))
    if token.startswith("class6:"):
        a, b, c, d = (int(x) for x in token.split(":", 1)[1].split(","))
        return kato.datum_from_class6(germdyn.Class6(a, b, c, d))
    return kato.KatoDatum.from_text(_read(token))


def _datum_summary(out: _Out, d: kato.KatoDatum) -> None:
    out.section("datum")
    out(d.to_text().rstrip("\n"))
    seq = d.modification
    out(f"blow-ups: {len(seq)}")
    out(f"exceptional primes: {len(seq.primes)}")
    for chain, (p, q) in d.singular_points:
        out(f"quotient point 1/{p}(1,{q}) from {','.join(chain)}")


def _config_lines(out: _Out, c: kato.CurveConfig) -> None:
    for line in c.to_text().splitlines():
        out(line)


def cmd_kato(args, out: _Out) -> None:
    if args.source[0] == "family":
        if len(args.source) != 2:
            raise ValueError("usage: kato family <k>")
        k = int(args.source[1])
        d = kato.quotient_family_datum(k)
    elif len(args.source) == 1:
        k = None
        d = _load_datum(args.source[0])
    else:
        raise ValueError("usage: kato <file> | kato family <k>")
    _datum_summary(out, d)
    if d.mark.kind == "chain":
        out.section("jacobian gaps")
        for e in d.modification.base.ids:
            out(f"{e} -> {d.correspondence()[e]}: {kato.jacobian_gap(d, e)}")
    if k is not None:
        b1, b3, b = kato.jacobian_divisor_coeffs(k)
        out.section("jacobian divisor")
        out(f"b1 = {b1}, b3 = {b3}, b = {b}")
    if d.is_trivial:
        return
    out.section("surface curves")
    c = kato.surface_curves(d)
    _config_lines(out, c)
    out.section("minimal model")
    _config_lines(out, kato.minimal_model(c))
    out.section("surface")
    out(f"class: {kato.classify_configuration(c) or 'undetermined'}")
    if args.dot:
        _write_dot(args.dot, d.modification.to_dual_graph())


def cmd_compose(args, out: _Out) -> None:
    d = kato.compose(_load_datum(args.first), _load_datum(args.second))
    _datum_summary(out, d)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--approx", action="store_true", help="add decimal approximations of irrational numbers")
    common.add_argument("--dot", metavar="PATH", help="write the dual graph in DOT format")
    p = argparse.ArgumentParser(prog="katoval", description="Exact valuative computations for strict germs.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("graph", parents=[common], help="invariants of a dual graph file")
    s.add_argument("file")
    s.set_defaults(func=cmd_graph)
    s = sub.add_parser("quotient", parents=[common], help="resolution of 1/p(1,q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_quotient)
    s = sub.add_parser("blowup", parents=[common], help="replay a blow-up script")
    s.add_argument("script")
    s.set_defaults(func=cmd_blowup)
    s = sub.add_parser("germ", parents=[common], help="analyse a strict germ normal form")
    s.add_argument("form", nargs="+")
    s.set_defaults(func=cmd_germ)
    s = sub.add_parser("kato", parents=[common], help="analyse a Kato datum file or 'family <k>'")
    s.add_argument("source", nargs="+")
    s.set_defaults(func=cmd_kato)
    s = sub.add_parser("compose", parents=[common], help="compose two Kato data")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_compose)
    return p


def _tag(exc: BaseException) -> str:
    for cls, tag in _TAGS:
        if isinstance(exc, cls):
            return tag
    return "internal"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(args.approx)
    try:
        args.func(args, out)
    except (ValueError, ArithmeticError, OSError, KeyError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"error[{_tag(exc)}]: {msg}", file=sys.stderr)
        return 2
    sys.stdout.write(out.text())
    return 0


if __name__ == "__main__":
    sys.exit(main())
