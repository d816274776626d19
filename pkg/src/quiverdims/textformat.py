"""Plain-text quiver presentations.

    # paths: application        (or: composition, i.e. written right to left)
    [quiver]
    name = triangle
    vertices = 0 1 2
    x = 0 -> 1
    y = 1 -> 2
    z = 0 -> 2
    [relations]
    1 x y ; -1 z                # x then y, minus z
    [order]
    0 1 2
    [cap]
    3

In application order a path lists its arrows in the order they are
traversed.  With ``# paths: composition`` each path is read right to left.
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import FiniteDimAlgebra, build_algebra
from .linalg import QQ, Field
from .quiver import Quiver


class FormatError(ValueError):
    pass


def _int_token(tok: str) -> bool:
    try:
        return str(int(tok)) == tok
    except ValueError:
        return False


def _vertex_names(toks):
    """Integer-looking names become ints, unless some name is zero-padded
    ('00'), in which case all digit names stay strings ('10' too)."""
    padded = any(t.isdigit() and not _int_token(t) for t in toks)
    return {t: int(t) if _int_token(t) and not padded else t for t in toks}


def parse_algebra_text(text: str, field: Field = QQ) -> FiniteDimAlgebra:
    convention = "application"
    section = None
    name = ""
    vmap, arrows, rels, order, cap = {}, [], [], None, None
    for no, raw in enumerate(text.splitlines(), 1):
        head = raw.strip()
        if head.startswith("#") and "paths:" in head:
            convention = head.split("paths:", 1)[1].split()[0].strip()
            if convention not in ("application", "composition"):
                raise FormatError(f"line {no}: unknown path convention {convention!r}")
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section not in ("quiver", "relations", "order", "cap"):
                raise FormatError(f"line {no}: unknown section [{section}]")
            continue
        if section == "quiver":
            key, sep, val = line.partition("=")
            if not sep:
                raise FormatError(f"line {no}: expected 'key = value'")
            key, val = key.strip(), val.strip()
            if key == "name":
                name = val
            elif key == "vertices":
                vmap = _vertex_names(val.split())
            else:
                src, arrow, tgt = val.partition("->")
                if not arrow:
                    raise FormatError(f"line {no}: arrow needs 'source -> target'")
                try:
                    arrows.append((key, vmap[src.strip()], vmap[tgt.strip()]))
                except KeyError as e:
                    raise FormatError(f"line {no}: undeclared vertex {e.args[0]!r}") from None
        elif section == "relations":
            terms = []
            for part in line.split(";"):
                toks = part.split()
                if len(toks) < 2:
                    raise FormatError(f"line {no}: term needs a coefficient and a path")
                try:
                    c = Fraction(toks[0])
                except ValueError:
                    raise FormatError(f"line {no}: bad coefficient {toks[0]!r}") from None
                path = tuple(toks[1:])
                if convention == "composition":
                    path = path[::-1]
                terms.append((c, path))
            rels.append(terms)
        elif section == "order":
            try:
                order = [vmap[t] for t in line.split()]
            except KeyError as e:
                raise FormatError(f"line {no}: undeclared vertex {e.args[0]!r}") from None
        elif section == "cap":
            cap = int(line)
        else:
            raise FormatError(f"line {no}: content outside a section")
    if not vmap:
        raise FormatError("no vertices declared")
    return build_algebra(Quiver(list(vmap.values()), arrows), rels, field, cap=cap, name=name or "file", order=order)


def load_algebra(path, field: Field = QQ) -> FiniteDimAlgebra:
    with open(path) as fh:
        return parse_algebra_text(fh.read(), field)


def dump_algebra(a: FiniteDimAlgebra) -> str:
    lines = ["# paths: application", "[quiver]", f"name = {a.name}",
             "vertices = " + " ".join(map(str, a.vertices))]
    lines += [f"{x.name} = {x.source} -> {x.target}" for x in a.quiver.arrows]
    if a.relations:
        lines.append("[relations]")
        for r in a.relations:
            lines.append(" ; ".join(f"{c} {' '.join(p)}" for c, p in r.terms))
    if a.order:
        lines += ["[order]", " ".join(map(str, a.order))]
    if a.cap is not None:
        lines += ["[cap]", str(a.cap)]
    return "\n".join(lines) + "\n"
