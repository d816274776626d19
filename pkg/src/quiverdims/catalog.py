"""Named algebras used throughout the package."""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .algebra import FiniteDimAlgebra, build_algebra, tensor_algebra
from .linalg import QQ, Field
from .quiver import Arrow, Quiver

INF = "inf"


def linear_A(m: int, field: Field = QQ) -> FiniteDimAlgebra:
    """Path algebra of 0 -> 1 -> ... -> m-1 (this is B_m)."""
    q = Quiver(range(m), [(f"a{i}", i, i + 1) for i in range(m - 1)])
    return build_algebra(q, [], field, name=f"A{m}")


def _dynkin_edges(kind: str, n: int):
    if kind == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "D":
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if kind == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in 6, 7, 8")
        return [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    raise ValueError(f"unknown Dynkin type {kind}")


def dynkin(kind: str, n: int | None = None, orientation: str = "linear", field: Field = QQ):
    """Path algebra of a Dynkin quiver.

    ``kind`` may be 'D4' or ('D', 4).  Orientation 'linear' points every edge
    towards the larger label; 'bipartite' makes every vertex a source or sink.
    """
    if n is None:
        kind, n = kind[0], int(kind[1:])
    edges = _dynkin_edges(kind, n)
    if orientation == "linear":
        oriented = edges
    elif orientation == "bipartite":
        colour = {0: 0}
        changed = True
        while changed:
            changed = False
            for u, w in edges:
                if u in colour and w not in colour:
                    colour[w] = 1 - colour[u]
                    changed = True
                elif w in colour and u not in colour:
                    colour[u] = 1 - colour[w]
                    changed = True
        oriented = [(u, w) if colour[u] == 0 else (w, u) for u, w in edges]
    else:
        raise ValueError(f"unknown orientation {orientation}")
    q = Quiver(range(n), [(f"a{i}", u, w) for i, (u, w) in enumerate(oriented)])
    return build_algebra(q, [], field, name=f"{kind}{n}")


def b_grid(sizes, field: Field = QQ) -> FiniteDimAlgebra:
    """B_{m1} (x) B_{m2} (x) ...: a grid with commuting squares; vertex '01' has coordinates 0, 1."""
    sizes = list(sizes)
    if max(sizes) > 10:
        raise ValueError("grid labels use one digit per coordinate")
    n = len(sizes)
    verts = ["".join(map(str, c)) for c in product(*(range(m) for m in sizes))]
    arrows = []

    def step(v, k):
        return v[:k] + str(int(v[k]) + 1) + v[k + 1:]

    def open_(v, k):
        return int(v[k]) < sizes[k] - 1

    for v in verts:
        for k in range(n):
            if open_(v, k):
                arrows.append((f"d{k}@{v}", v, step(v, k)))
    rels = []
    for v in verts:
        for k in range(n):
            for l in range(k + 1, n):
                if open_(v, k) and open_(v, l):
                    vk, vl = step(v, k), step(v, l)
                    rels.append([(1, (f"d{k}@{v}", f"d{l}@{vk}")),
                                 (-1, (f"d{l}@{v}", f"d{k}@{vl}"))])
    if len(set(sizes)) == 1:
        m = sizes[0]
        name = f"B{m}" if n == 1 else f"B{m}^{n}"
    else:
        name = "(x)".join(f"B{m}" for m in sizes)
    return build_algebra(Quiver(verts, arrows), rels, field, name=name)


def b_power(m: int, n: int, field: Field = QQ) -> FiniteDimAlgebra:
    """B_m tensored n times: the n-dimensional m x ... x m grid with commuting squares."""
    return b_grid([m] * n, field)


def kronecker(field: Field = QQ):
    return build_algebra(Quiver([0, 1], [("u", 0, 1), ("v", 0, 1)]), [], field, name="kronecker")


def _point_form(p):
    """Linear form a*u + b*v vanishing at the point p of P^1."""
    if p == INF:
        return (Fraction(1), Fraction(0))
    return (-Fraction(p), Fraction(1))


def _default_points(n):
    return [INF, 0] + list(range(1, n - 1))


def _check_points(points, n):
    if len(points) != n:
        raise ValueError("need one point per weight")
    forms = [_point_form(p) for p in points]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = forms[i], forms[j]
            if a[0] * b[1] - a[1] * b[0] == 0:
                raise ValueError("points must be pairwise distinct")
    return forms


def canonical(weights, points=None, field: Field = QQ) -> FiniteDimAlgebra:
    """Canonical algebra: arms of lengths r_i from a source 's' to a sink 'c'.

    The arm X_i^{r_i} is identified with the linear form of the i-th point, so
    arms 3..n satisfy one linear relation each with the first two.
    """
    weights = list(weights)
    n = len(weights)
    if n < 2 or any(r < 1 for r in weights):
        raise ValueError("need at least two positive weights")
    forms = _check_points(points if points is not None else _default_points(n), n)
    verts = ["s"]
    arrows = []
    arms = []
    for i, r in enumerate(weights, 1):
        chain = ["s"] + [f"{i}.{j}" for j in range(1, r)] + ["c"]
        verts.extend(chain[1:-1])
        names = []
        for j in range(r):
            nm = f"x{i}_{j + 1}"
            arrows.append((nm, chain[j], chain[j + 1]))
            names.append(nm)
        arms.append(tuple(names))
    verts.append("c")
    rels = []
    (a1, b1), (a2, b2) = forms[0], forms[1]
    det = a1 * b2 - a2 * b1
    for i in range(2, n):
        a, b = forms[i]
        # solve (a, b) = al*(a1, b1) + be*(a2, b2)
        al = (a * b2 - b * a2) / det
        be = (a1 * b - b1 * a) / det
        rels.append([(1, arms[i]), (-al, arms[0]), (-be, arms[1])])
    name = "canonical(" + ",".join(map(str, weights)) + ")"
    return build_algebra(Quiver(verts, arrows), rels, field, name=name)


def bar_canonical(weights, points=None, field: Field = QQ) -> FiniteDimAlgebra:
    """Two arrows u, v from 0 to 1 followed by arms of lengths r_i - 1, each arm
    killing the linear form of its point."""
    weights = list(weights)
    n = len(weights)
    forms = _check_points(points if points is not None else _default_points(n), n)
    verts = [0, 1]
    arrows = [("u", 0, 1), ("v", 0, 1)]
    rels = []
    for i, r in enumerate(weights, 1):
        prev = 1
        for j in range(1, r):
            v = f"{i}.{j}"
            verts.append(v)
            arrows.append((f"a{i}_{j}", prev, v))
            prev = v
        if r >= 2:
            a, b = forms[i - 1]
            rels.append([(a, ("u", f"a{i}_1")), (b, ("v", f"a{i}_1"))])
    name = "bar_canonical(" + ",".join(map(str, weights)) + ")"
    return build_algebra(Quiver(verts, arrows), rels, field, name=name)


def example_8_1(field: Field = QQ):
    """x: 0->1, y: 1->2, z: 0->2 with yx = 0."""
    return intro_family(0, field)


def intro_family(t, field: Field = QQ):
    """x: 0->1, y: 1->2, z: 0->2 with yx = t z."""
    q = Quiver([0, 1, 2], [("x", 0, 1), ("y", 1, 2), ("z", 0, 2)])
    rel = [(1, ("x", "y")), (-Fraction(t), ("z",))]
    name = "example_8_1" if t == 0 else f"intro_family({t})"
    return build_algebra(q, [rel], field, name=name)


def example_8_2(field: Field = QQ):
    """x: 0->1, y: 1->2, z: 2->0 with zy = xz = 0."""
    q = Quiver([0, 1, 2], [("x", 0, 1), ("y", 1, 2), ("z", 2, 0)])
    rels = [[(1, ("y", "z"))], [(1, ("z", "x"))]]
    return build_algebra(q, rels, field, cap=3, name="example_8_2")


def example_8_3(field: Field = QQ):
    """x: 0->1, y: 1->0 with xy = 0."""
    q = Quiver([0, 1], [("x", 0, 1), ("y", 1, 0)])
    return build_algebra(q, [[(1, ("y", "x"))]], field, cap=3, name="example_8_3")


def gamma_d2(n: int, field: Field = QQ):
    """Linear quiver 1 -> ... -> n with all length-two paths zero."""
    q = Quiver(range(1, n + 1), [(f"d{i}", i, i + 1) for i in range(1, n)])
    rels = [[(1, (f"d{i}", f"d{i + 1}"))] for i in range(1, n - 1)]
    return build_algebra(q, rels, field, name=f"gamma_d2({n})")


def reoriented_b3_square(field: Field = QQ):
    """k(1 -> 0 <- 2) tensor k(1 <- 0 -> 2), derived equivalent to B3^2."""
    sink = build_algebra(Quiver([0, 1, 2], [("p", 1, 0), ("q", 2, 0)]), [], field, name="A3sink")
    src = build_algebra(Quiver([0, 1, 2], [("r", 0, 1), ("s", 0, 2)]), [], field, name="A3source")
    return tensor_algebra(sink, src, label=lambda u, w: f"{u}{w}", name="reoriented_b3_square")


def dynkin_square(kind: str, field: Field = QQ):
    """kQ tensor kQ for a bipartite Dynkin quiver Q, e.g. 'E6'."""
    a = dynkin(kind, orientation="bipartite", field=field)
    return tensor_algebra(a, a, label=lambda u, w: f"{u}.{w}", name=f"{kind}^2")


def catalog(entry: str, field: Field = QQ) -> FiniteDimAlgebra:
    """Build an algebra from a short name such as 'b_power:2,3' or 'dynkin:E6'."""
    name, _, arg = entry.partition(":")
    args = [x for x in arg.split(",") if x] if arg else []
    if name == "linear_A":
        return linear_A(int(args[0]), field)
    if name == "dynkin":
        orient = args[1] if len(args) > 1 else "linear"
        return dynkin(args[0], orientation=orient, field=field)
    if name == "b_power":
        return b_power(int(args[0]), int(args[1]), field)
    if name == "b_grid":
        return b_grid([int(x) for x in args], field)
    if name == "kronecker":
        return kronecker(field)
    if name in ("canonical", "bar_canonical"):
        fn = canonical if name == "canonical" else bar_canonical
        return fn([int(x) for x in args], field=field)
    if name == "example_8_1":
        return example_8_1(field)
    if name == "example_8_2":
        return example_8_2(field)
    if name == "example_8_3":
        return example_8_3(field)
    if name == "intro_family":
        return intro_family(Fraction(args[0]), field)
    if name == "gamma_d2":
        return gamma_d2(int(args[0]), field)
    if name == "reoriented_b3_square":
        return reoriented_b3_square(field)
    if name == "dynkin_square":
        return dynkin_square(args[0], field)
    raise KeyError(f"unknown catalog entry {entry!r}")


CATALOG_NAMES = [
    "linear_A:<m>", "dynkin:<A|D|E><n>[,bipartite]", "b_power:<m>,<n>", "b_grid:<m1>,<m2>,...", "kronecker",
    "canonical:<r1,...>", "bar_canonical:<r1,...>", "example_8_1", "example_8_2",
    "example_8_3", "intro_family:<t>", "gamma_d2:<n>", "reoriented_b3_square",
    "dynkin_square:<type>",
]
