"""Command-line front end (``nestcone``).

Exit codes: 0 success / everything certified, 1 verification failure or
table diff, 2 usage or expression-parse errors.  All output is deterministic
for fixed inputs; set NESTCONE_NO_COLOR to suppress ANSI styling.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import click

from . import render
from .cone import COORD_SUM, cross_section, positive_functional
from .errors import FunctionalNotPositive, NestconeError, ParseError
from .rationals import primitive, rat_str
from .spaces import (
    CurClass,
    DivClass,
    SurfaceModel,
    SpaceId,
    curve,
    divisor,
    hilb,
    hirzebruch,
    k3,
    nested,
    normalize_label,
    p1xp1,
    p2,
    surface_space,
    univ,
    zero_curve,
    zero_divisor,
)
from .studies import ButlerInput, asymptotic_report, butler_check
from .verify import (
    CATALOG,
    reproduce_table,
    standard_eff_certificate,
    standard_nef_certificate,
    table_cone_with_labels,
)

# ---------------------------------------------------------------------------
# Class-expression grammar
# ---------------------------------------------------------------------------
#   expr    := term (('+' | '-') term)*
#   term    := factor ('*' factor)*
#   factor  := NUMBER | LABEL | '-' factor | '(' expr ')'
#   NUMBER  := digits ['/' digits]
#   LABEL   := letter (letter | digit | '^')* ['/' digits]
# At most one class label per product; parse errors cite byte offsets.


class _Tok:
    def __init__(self, kind, text, offset):
        self.kind = kind
        self.text = text
        self.offset = offset


def _tokenize(src: str) -> list[_Tok]:
    toks = []
    i = 0
    n = len(src)
    while i < n:
        c = src[i]
        if c.isspace():
            i += 1
            continue
        if c in "+-*()":
            toks.append(_Tok(c, c, i))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            if j < n and src[j] == "/":
                k = j + 1
                while k < n and src[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ParseError("expected digits after '/'", j + 1)
                j = k
            toks.append(_Tok("num", src[i:j], i))
            i = j
            continue
        if c.isalpha():
            j = i
            while j < n and (src[j].isalnum() or src[j] == "^"):
                j += 1
            if j < n and src[j] == "/":
                k = j + 1
                while k < n and src[k].isdigit():
                    k += 1
                if k > j + 1:
                    j = k
            toks.append(_Tok("label", src[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    toks.append(_Tok("end", "", n))
    return toks


class _Value:
    """Scalar times at-most-one class."""

    def __init__(self, scalar: Fraction, cls=None):
        self.scalar = scalar
        self.cls = cls


class _Parser:
    def __init__(self, src: str, resolve):
        self.src = src
        self.toks = _tokenize(src)
        self.pos = 0
        self.resolve = resolve  # label, offset -> class

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def next(self) -> _Tok:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def parse(self):
        v = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected token {t.text!r}", t.offset)
        return v

    def expr(self) -> _Value:
        v = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.next()
            w = self.term()
            v = self._add(v, w, op)
        return v

    def _add(self, v: _Value, w: _Value, op: _Tok) -> _Value:
        if op.kind == "-":
            w = _Value(-w.scalar, w.cls)
        if v.cls is None and w.cls is None:
            return _Value(v.scalar + w.scalar)
        if v.cls is not None and w.cls is not None:
            try:
                return _Value(Fraction(1), v.scalar * v.cls + w.scalar * w.cls)
            except NestconeError as e:
                raise ParseError(str(e), op.offset) from e
        raise ParseError("cannot add a bare number to a class", op.offset)

    def term(self) -> _Value:
        v = self.factor()
        while self.peek().kind == "*":
            op = self.next()
            w = self.factor()
            if v.cls is not None and w.cls is not None:
                raise ParseError("at most one class per product", op.offset)
            v = _Value(v.scalar * w.scalar, v.cls or w.cls)
        return v

    def factor(self) -> _Value:
        t = self.next()
        if t.kind == "-":
            v = self.factor()
            return _Value(-v.scalar, v.cls)
        if t.kind == "num":
            return _Value(Fraction(t.text))
        if t.kind == "label":
            return _Value(Fraction(1), self.resolve(t.text, t.offset))
        if t.kind == "(":
            v = self.expr()
            close = self.next()
            if close.kind != ")":
                raise ParseError("expected ')'", close.offset)
            return v
        raise ParseError(f"unexpected token {t.text or 'end of input'!r}", t.offset)


def parse_divisor_expr(src: str, surface: SurfaceModel, space: SpaceId) -> DivClass:
    def resolve(label, offset):
        try:
            return divisor(surface, space, label)
        except NestconeError as e:
            raise ParseError(str(e), offset) from e

    v = _Parser(src, resolve).parse()
    if v.cls is None:
        if v.scalar == 0:
            return zero_divisor(surface, space)
        raise ParseError("expression is a bare number, not a divisor class", 0)
    return v.scalar * v.cls


def parse_curve_expr(src: str, surface: SurfaceModel, space: SpaceId) -> CurClass:
    def resolve(label, offset):
        try:
            return curve(surface, space, label)
        except NestconeError as e:
            raise ParseError(str(e), offset) from e

    v = _Parser(src, resolve).parse()
    if v.cls is None:
        if v.scalar == 0:
            return zero_curve(surface, space)
        raise ParseError("expression is a bare number, not a curve class", 0)
    return v.scalar * v.cls


# ---------------------------------------------------------------------------
# Flag handling
# ---------------------------------------------------------------------------

def _surface_from_flags(name: str, genus: int | None) -> SurfaceModel:
    name = name.lower()
    if name == "p2":
        return p2()
    if name == "p1xp1":
        return p1xp1()
    if name.startswith("f") and name[1:].isdigit():
        i = int(name[1:])
        return p1xp1() if i == 0 else hirzebruch(i)
    if name == "k3":
        if genus is None:
            raise click.UsageError("--surface k3 requires --genus")
        return k3(genus)
    raise click.UsageError(f"unknown surface {name!r} (use p2, p1xp1, f<i>, k3)")


def _space_from_flags(kind: str, n: int | None) -> SpaceId:
    kind = kind.lower()
    if kind == "surface":
        return surface_space()
    if n is None:
        raise click.UsageError(f"--space {kind} requires --n")
    if kind == "hilb":
        return hilb(n)
    if kind == "nested":
        return nested(n)
    if kind == "univ":
        return univ(n)
    raise click.UsageError(f"unknown space {kind!r} (use hilb, nested, univ, surface)")


def _style(text: str, ok: bool) -> str:
    if os.environ.get("NESTCONE_NO_COLOR"):
        return text
    return click.style(text, fg="green" if ok else "red")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=not text.endswith("\n"))


_TABLE_PARAMS = ("n", "g", "i")


def _table_kwargs(n, g, i):
    return {"n": n, "g": g, "i": i}


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

@click.group()
def cli():
    """Exact intersection pairings and cone-duality certificates for
    Hilbert schemes of points, nested Hilbert schemes, and universal
    families over rational and K3 surfaces."""


@cli.command("pair")
@click.option("--surface", "surface_name", default="p2", show_default=True)
@click.option("--genus", type=int, default=None, help="genus for --surface k3")
@click.option("--space", "space_kind", default="hilb", show_default=True)
@click.option("--n", type=int, default=None)
@click.argument("divisor_expr")
@click.argument("curve_expr")
def cmd_pair(surface_name, genus, space_kind, n, divisor_expr, curve_expr):
    """Exact intersection pairing of a divisor expression with a curve
    expression, e.g.  pair --space nested --n 3 "A^b" "B^b/2"
    (the two arguments may be given in either order)."""
    from .pairing import pair

    s = _surface_from_flags(surface_name, genus)
    sp = _space_from_flags(space_kind, n)
    # Accept (divisor, curve) in either order for convenience.
    try:
        d = parse_divisor_expr(divisor_expr, s, sp)
        c = parse_curve_expr(curve_expr, s, sp)
    except ParseError:
        d = parse_divisor_expr(curve_expr, s, sp)
        c = parse_curve_expr(divisor_expr, s, sp)
    click.echo(rat_str(pair(d, c)))


@cli.command("table")
@click.option("--table", "table_id", required=True, type=click.Choice(sorted(CATALOG)))
@click.option("--n", type=int, default=None)
@click.option("--g", "--genus", "g", type=int, default=None)
@click.option("--i", type=int, default=None)
@click.option("--format", "fmt", default="text", type=click.Choice(["text", "json", "csv"]))
@click.option("--out", default=None, type=click.Path(dir_okay=False))
def cmd_table(table_id, n, g, i, fmt, out):
    """Recompute a catalog table cell by cell and report matches/diffs."""
    report = reproduce_table(table_id, **_table_kwargs(n, g, i))
    if fmt == "json":
        _emit(report.json_str() + "\n", out)
    elif fmt == "csv":
        _emit(report.to_csv(), out)
    else:
        _emit(report.text(), out)
    if not report.ok:
        sys.exit(1)


@cli.command("nef")
@click.option("--table", "table_id", required=True,
              type=click.Choice(sorted(t for t in CATALOG if "nef" in t)))
@click.option("--n", type=int, default=None)
@click.option("--g", "--genus", "g", type=int, default=None)
@click.option("--i", type=int, default=None)
@click.option("--format", "fmt", default="text", type=click.Choice(["text", "json"]))
def cmd_nef(table_id, n, g, i, fmt):
    """Produce and check the duality certificate for a catalog nef cone."""
    params = dict(CATALOG[table_id].defaults)
    for key, val in _table_kwargs(n, g, i).items():
        if val is not None and key in params:
            params[key] = val
    cert = standard_nef_certificate(table_id, **params)
    if fmt == "json":
        click.echo(cert.json_str())
    else:
        click.echo(f"{table_id} {params}: {_style(cert.verdict, cert.ok)}")
        for lab, row in zip(cert.witness_labels, cert.matrix):
            cells = " ".join(rat_str(x) for x in row)
            click.echo(f"  {lab}: [{cells}]")
    if not cert.ok:
        sys.exit(1)


@cli.command("eff")
@click.option("--table", "table_id", required=True,
              type=click.Choice(["eff_p2_2_1", "eff_p2_3_2"]))
@click.option("--format", "fmt", default="text", type=click.Choice(["text", "json"]))
def cmd_eff(table_id, fmt):
    """Produce and check the moving-curve certificate for a catalog
    effective cone."""
    cert = standard_eff_certificate(table_id)
    if fmt == "json":
        click.echo(cert.json_str())
    else:
        click.echo(f"{table_id}: {_style(cert.verdict, cert.ok)}")
        for lab, row in zip(cert.witness_labels, cert.matrix):
            cells = " ".join(rat_str(x) for x in row)
            click.echo(f"  {lab}: [{cells}]")
    if not cert.ok:
        sys.exit(1)


@cli.command("verify")
@click.option("--table", "table_id", default=None, type=click.Choice(sorted(CATALOG)))
@click.option("--all", "run_all", is_flag=True, help="verify the whole catalog")
@click.option("--n", type=int, default=None)
@click.option("--g", "--genus", "g", type=int, default=None)
@click.option("--i", type=int, default=None)
@click.option("--jobs", type=int, default=1, show_default=True)
def cmd_verify(table_id, run_all, n, g, i, jobs):
    """Verify one catalog table, or the entire catalog with --all (the
    repository's primary acceptance gate)."""
    if run_all == (table_id is not None):
        raise click.UsageError("give exactly one of --table or --all")
    if run_all:
        ids = sorted(CATALOG)
        kwargs = {}
    else:
        ids = [table_id]
        kwargs = _table_kwargs(n, g, i)

    def work(tid):
        return tid, reproduce_table(tid, **kwargs)

    if jobs > 1 and len(ids) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = dict(pool.map(work, ids))
    else:
        results = dict(map(work, ids))
    failed = 0
    for tid in ids:
        report = results[tid]
        n_cells = sum(len(s.cells) for s in report.sections)
        n_skip = sum(
            1 for s in report.sections for c in s.cells if c.status == "skipped"
        )
        status = "OK" if report.ok else "FAIL"
        extra = f" ({n_cells} cells, {n_skip} skipped)" if n_skip else f" ({n_cells} cells)"
        click.echo(f"{tid}: {_style(status, report.ok)}{extra}")
        if not report.ok:
            failed += 1
            click.echo(report.text(), err=True)
    if failed:
        sys.exit(1)


@cli.command("cross-section")
@click.option("--table", "table_id", required=True,
              type=click.Choice(sorted(t for t in CATALOG if "nef" in t or t.startswith("eff_p2"))))
@click.option("--n", type=int, default=None)
@click.option("--g", "--genus", "g", type=int, default=None)
@click.option("--i", type=int, default=None)
@click.option("--format", "fmt", default="svg",
              type=click.Choice(["svg", "tikz", "csv", "json"]))
@click.option("--out", default=None, type=click.Path(dir_okay=False))
def cmd_cross_section(table_id, n, g, i, fmt, out):
    """Emit the cross-section polytope of a catalog cone (vertices labeled
    by the generator rays)."""
    params = dict(CATALOG[table_id].defaults)
    for key, val in _table_kwargs(n, g, i).items():
        if val is not None and key in params:
            params[key] = val
    cone, labeled = table_cone_with_labels(table_id, **params)
    try:
        cs = cross_section(cone, COORD_SUM)
    except FunctionalNotPositive:
        cs = cross_section(cone, positive_functional(cone))
    labels = []
    for v in cs.vertices:
        prim = primitive(v)
        match = next((lab for lab, ray in labeled if ray == prim), None)
        labels.append(match if match is not None else "?")
    if fmt == "svg":
        _emit(render.cross_section_svg(cs, labels), out)
    elif fmt == "tikz":
        _emit(render.cross_section_tikz(cs, labels), out)
    elif fmt == "csv":
        _emit(render.cross_section_csv(cs, labels), out)
    else:
        payload = cs.to_json()
        payload["labels"] = labels
        _emit(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n", out)


@cli.command("butler")
@click.option("--i", type=int, default=1, show_default=True)
@click.option("--a", type=int, default=1, show_default=True)
@click.option("--b", type=int, default=1, show_default=True)
@click.option("--n", type=int, default=4, show_default=True)
@click.option("--k-min", type=int, default=1, show_default=True)
@click.option("--k-max", type=int, default=5, show_default=True)
@click.option("--ordering", default="b", type=click.Choice(["b", "res"]), show_default=True)
@click.option("--format", "fmt", default="text", type=click.Choice(["text", "json"]))
def cmd_butler(i, a, b, n, k_min, k_max, ordering, fmt):
    """Projective-normality scan: position of the adjoint classes in the
    nef cone of the universal family over a Hirzebruch surface."""
    try:
        inp = ButlerInput(i=i, a=a, b=b, n=n, k_range=(k_min, k_max))
    except NestconeError as e:
        raise click.UsageError(str(e)) from e
    report = butler_check(inp, ordering)
    if fmt == "json":
        click.echo(report.json_str())
    else:
        click.echo(report.text(), nl=False)
    if not report.all_interior:
        sys.exit(1)


@cli.command("asymptotic")
@click.option("--k-max", type=int, default=10, show_default=True)
@click.option("--format", "fmt", default="text", type=click.Choice(["text", "json"]))
def cmd_asymptotic(k_max, fmt):
    """Nesting and convergence of the asymptotic effective cones in the
    fixed 4-dimensional frame (H1, H2, B1, B2)."""
    try:
        report = asymptotic_report(k_max)
    except NestconeError as e:
        raise click.UsageError(str(e)) from e
    if fmt == "json":
        click.echo(report.json_str())
    else:
        click.echo(report.text(), nl=False)
    if not report.ok:
        sys.exit(1)


def main(argv=None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else 0
        return code
    except ParseError as e:
        click.echo(f"parse error at byte {e.offset}: {e}", err=True)
        return 2
    except click.UsageError as e:
        click.echo(f"usage error: {e.format_message()}", err=True)
        return 2
    except click.ClickException as e:
        e.show()
        return 2
    except NestconeError as e:
        click.echo(f"error: {e}", err=True)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
