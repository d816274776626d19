"""Bound quiver algebras kQ/I with an explicit path-class basis.

Notation: ``piece(v, u)`` is e_v A e_u, spanned by classes of paths from u
to v.  A product ``x * y`` means "first y, then x".  Elements are sparse
dicts {basis index: coefficient}.
"""
from __future__ import annotations

from .linalg import QQ, Field, Matrix, rref
from .quiver import Path, Quiver, enumerate_paths, quiver_length


class Relation:
    """Linear combination of parallel paths, each given in application order."""

    def __init__(self, terms):
        self.terms = [(c, tuple(p)) for c, p in terms if c != 0]
        if not self.terms:
            raise ValueError("empty relation")

    def __repr__(self):
        return " + ".join(f"{c}*{''.join(reversed(p))}" for c, p in self.terms)


def word(s: str):
    """Right-to-left written path 'yx' -> application order ('x', 'y')."""
    return tuple(reversed(s))


class BuildError(ValueError):
    pass


class FiniteDimAlgebra:
    def __init__(self, quiver: Quiver, relations=(), field: Field = QQ, cap: int | None = None,
                 name: str = "", order=None):
        self.quiver = quiver
        self.field = field
        self.relations = [r if isinstance(r, Relation) else Relation(r) for r in relations]
        self.name = name
        self.order = list(order) if order is not None else None
        self.cyclic = not quiver.is_acyclic()
        if self.cyclic and cap is None:
            raise BuildError("an oriented cycle needs a length cap")
        self.cap = cap
        self._build()
        self._mul_cache = {}
        self._proj = {}
        self._inj = {}

    # construction ----------------------------------------------------------
    def _check_relations(self):
        q = self.quiver
        for r in self.relations:
            ends = set()
            lengths = set()
            for _, p in r.terms:
                if not p:
                    raise BuildError("relations may not contain trivial paths")
                for x in p:
                    if x not in q.arrow:
                        raise BuildError(f"unknown arrow {x}")
                for a, b in zip(p, p[1:]):
                    if q.arrow[a].target != q.arrow[b].source:
                        raise BuildError(f"path {p} is not composable")
                ends.add((q.arrow[p[0]].source, q.arrow[p[-1]].target))
                lengths.add(len(p))
            if len(ends) != 1:
                raise BuildError(f"relation {r} is not endpoint-homogeneous")
            if max(lengths) < 2:
                raise BuildError(f"relation {r} has no term of length >= 2")
            if self.cyclic and len(lengths) != 1:
                raise BuildError("with oriented cycles relations must be length-homogeneous")
            r.source, r.target = ends.pop()

    def _build(self):
        q = self.quiver
        f = self.field
        self._check_relations()
        lmax = self.cap if self.cyclic else quiver_length(q)
        bylen = enumerate_paths(q, lmax)
        pieces_paths = {}
        for (s, t, n), ps in bylen.items():
            pieces_paths.setdefault((s, t), []).extend(ps)
        ending_at = {}
        starting_at = {}
        for (s, t), ps in pieces_paths.items():
            for p in ps:
                ending_at.setdefault(t, []).append(p)
                starting_at.setdefault(s, []).append(p)
        ideal = {}
        for r in self.relations:
            rl = max(len(p) for _, p in r.terms)
            for qp in ending_at.get(r.source, []):
                for pp in starting_at.get(r.target, []):
                    if len(qp) + rl + len(pp) > lmax:
                        continue
                    elem = {}
                    for c, term in r.terms:
                        key = qp.arrows + term + pp.arrows
                        elem[key] = elem.get(key, 0) + f.convert(c)
                    ideal.setdefault((qp.source, pp.target), []).append(elem)
        self._nf_path = {}
        basis = []
        pending = []
        for (s, t) in sorted(pieces_paths, key=lambda st: (q.vertices.index(st[0]), q.vertices.index(st[1]))):
            ps = sorted(pieces_paths[(s, t)], key=lambda p: (-len(p), p.arrows))
            col = {p.arrows: i for i, p in enumerate(ps)}
            rows = []
            for elem in ideal.get((s, t), []):
                row = [0] * len(ps)
                for k, c in elem.items():
                    row[col[k]] = f.reduce(row[col[k]] + c)
                if any(row):
                    rows.append(row)
            red, piv = rref(rows, len(ps), f)
            pivset = set(piv)
            if self.cyclic:
                top = [i for i, p in enumerate(ps) if len(p) == lmax]
                if any(i not in pivset for i in top):
                    raise BuildError(f"paths of length {lmax} from {s} to {t} are not all in the ideal; "
                                     "raise the cap")
            free = [i for i in range(len(ps)) if i not in pivset]
            for i in free:
                basis.append(ps[i])
            pending.append((ps, red, piv, free))
        basis.sort(key=lambda p: (len(p), q.vertices.index(p.source), q.vertices.index(p.target), p.arrows))
        self.basis = basis
        self.index = {(p.source, p.arrows): i for i, p in enumerate(basis)}
        for ps, red, piv, free in pending:
            for i in free:
                p = ps[i]
                self._nf_path[(p.source, p.arrows)] = {self.index[(p.source, p.arrows)]: 1}
            for row, pc in zip(red, piv):
                p = ps[pc]
                nf = {}
                for j in free:
                    if row[j]:
                        nf[self.index[(ps[j].source, ps[j].arrows)]] = f.reduce(-row[j])
                self._nf_path[(p.source, p.arrows)] = nf
        self._lmax = lmax
        self.pieces = {}
        for i, p in enumerate(basis):
            self.pieces.setdefault((p.target, p.source), []).append(i)
        self.idem = {v: self.index[(v, ())] for v in q.vertices}

    # basic data ------------------------------------------------------------
    @property
    def dim(self):
        return len(self.basis)

    @property
    def vertices(self):
        return self.quiver.vertices

    def __repr__(self):
        return f"<algebra {self.name or '?'} dim={self.dim}>"

    def piece(self, v, u):
        """Basis indices of e_v A e_u (paths from u to v)."""
        return self.pieces.get((v, u), [])

    def source(self, i):
        return self.basis[i].source

    def target(self, i):
        return self.basis[i].target

    def path_nf(self, source, arrows) -> dict:
        """Normal form of a path given by its source and arrows in application order."""
        arrows = tuple(arrows)
        if len(arrows) > self._lmax:
            if self.cyclic:
                return {}
            raise ValueError("path longer than any path in the quiver")
        try:
            return dict(self._nf_path[(source, arrows)])
        except KeyError:
            raise ValueError(f"not a path: {arrows} from {source}") from None

    def element(self, terms):
        """Element from [(coeff, path)]; a path is 'e<v>', a right-to-left word
        of one-letter arrows such as 'yx', or a tuple in application order."""
        out = {}
        for c, w in terms:
            if isinstance(w, str) and w.startswith("e"):
                nf = {self.idem[self._vertex_by_name(w[1:])]: 1}
            else:
                arrows = word(w) if isinstance(w, str) else tuple(w)
                nf = self.path_nf(self.quiver.arrow[arrows[0]].source, arrows)
            for k, v in nf.items():
                out[k] = self.field.reduce(out.get(k, 0) + self.field.convert(c) * v)
        return {k: v for k, v in out.items() if v}

    def _vertex_by_name(self, s):
        for v in self.vertices:
            if str(v) == s:
                return v
        raise KeyError(s)

    # multiplication ----------------------------------------------------------
    def mul_basis(self, i, j) -> dict:
        """b_i * b_j (first b_j, then b_i)."""
        key = (i, j)
        r = self._mul_cache.get(key)
        if r is None:
            bi, bj = self.basis[i], self.basis[j]
            if bi.source != bj.target:
                r = {}
            else:
                r = self.path_nf(bj.source, bj.arrows + bi.arrows)
            self._mul_cache[key] = r
        return r

    def mul(self, x: dict, y: dict) -> dict:
        out = {}
        red = self.field.reduce
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.mul_basis(i, j).items():
                    out[k] = red(out.get(k, 0) + a * b * c)
        return {k: v for k, v in out.items() if v}

    def add(self, x, y, c=1):
        out = dict(x)
        red = self.field.reduce
        for k, v in y.items():
            out[k] = red(out.get(k, 0) + c * v)
        return {k: v for k, v in out.items() if v}

    def scale(self, x, c):
        red = self.field.reduce
        return {k: red(v * c) for k, v in x.items() if red(v * c)}

    def is_radical(self, x: dict) -> bool:
        return not any(k in x for k in self.idem.values())

    def inverse_local(self, x: dict, v) -> dict:
        """Inverse of a unit of e_v A e_v."""
        e = self.idem[v]
        lam = x.get(e, 0)
        if not lam:
            raise ValueError("element is not invertible")
        f = self.field
        li = f.inv(lam)
        n = self.scale({k: c for k, c in x.items() if k != e}, -li)
        out = {e: 1}
        term = {e: 1}
        while True:
            term = self.mul(term, n)
            if not term:
                break
            out = self.add(out, term)
        return self.scale(out, li)

    def left_matrix(self, x: dict, u, w, v) -> Matrix:
        """Matrix of y -> x*y from e_u A e_v to e_w A e_v (x in e_w A e_u)."""
        src = self.piece(u, v)
        dst = self.piece(w, v)
        pos = {k: i for i, k in enumerate(dst)}
        rows = [[0] * len(src) for _ in dst]
        red = self.field.reduce
        for c, j in enumerate(src):
            for i, a in x.items():
                for k, b in self.mul_basis(i, j).items():
                    rows[pos[k]][c] = red(rows[pos[k]][c] + a * b)
        return Matrix(rows, len(src), self.field)

    def right_matrix(self, x: dict, w, u, v) -> Matrix:
        """Matrix of y -> y*x from e_w A e_u to e_w A e_v (x in e_u A e_v)."""
        src = self.piece(w, u)
        dst = self.piece(w, v)
        pos = {k: i for i, k in enumerate(dst)}
        rows = [[0] * len(src) for _ in dst]
        red = self.field.reduce
        for c, j in enumerate(src):
            for i, a in x.items():
                for k, b in self.mul_basis(j, i).items():
                    rows[pos[k]][c] = red(rows[pos[k]][c] + a * b)
        return Matrix(rows, len(src), self.field)

    def arrow_element(self, name):
        a = self.quiver.arrow[name]
        return self.path_nf(a.source, (name,))

    # radical ---------------------------------------------------------------
    def radical_power(self, k: int):
        """{(v, u): Matrix whose columns span the part of R^k in e_v A e_u}."""
        out = {}
        for (s, t, arrows), nf in self._path_items():
            if len(arrows) < k:
                continue
            out.setdefault((t, s), []).append(nf)
        res = {}
        for key, vecs in out.items():
            idx = self.piece(*key)
            cols = [[nf.get(i, 0) for i in idx] for nf in vecs]
            m = Matrix.from_columns(cols, len(idx), self.field).image()
            if m.ncols:
                res[key] = m
        return res

    def _path_items(self):
        q = self.quiver
        for (s, arrows), nf in self._nf_path.items():
            t = q.arrow[arrows[-1]].target if arrows else s
            yield (s, t, arrows), nf

    def check_associative(self) -> bool:
        n = self.dim
        for i in range(n):
            for j in range(n):
                if self.basis[i].source != self.basis[j].target:
                    continue
                ij = self.mul_basis(i, j)
                for k in range(n):
                    if self.basis[j].source != self.basis[k].target:
                        continue
                    left = self.mul(ij, {k: 1})
                    right = self.mul({i: 1}, self.mul_basis(j, k))
                    if left != right:
                        return False
        return True


def build_algebra(quiver: Quiver, relations=(), field: Field = QQ, cap: int | None = None,
                  name: str = "", order=None) -> FiniteDimAlgebra:
    """Quotient kQ/I with an explicit basis; cyclic quivers need a provable cap."""
    return FiniteDimAlgebra(quiver, relations, field, cap, name, order)


def radical_degree(a: FiniteDimAlgebra) -> int:
    """Largest d with R^d != 0."""
    d = 0
    while a.radical_power(d + 1):
        d += 1
    return d


def is_ordered(a: FiniteDimAlgebra, order=None) -> bool:
    """A_{uv} = 0 whenever u < v in the given vertex order."""
    order = order or a.order or a.vertices
    pos = {v: i for i, v in enumerate(order)}
    return all(pos[v] >= pos[u] for (v, u), idx in a.pieces.items() if idx)


def tensor_algebra(a: FiniteDimAlgebra, b: FiniteDimAlgebra, label=None, name: str = "") -> FiniteDimAlgebra:
    """kQ/I tensor kQ'/I' presented on the product quiver with commutativity relations."""
    if a.field != b.field:
        raise ValueError("field mismatch")
    label = label or (lambda u, w: (u, w))
    qa, qb = a.quiver, b.quiver
    verts = [label(u, w) for u in qa.vertices for w in qb.vertices]
    arrows = []
    for x in qa.arrows:
        for w in qb.vertices:
            arrows.append((f"{x.name}|{w}", label(x.source, w), label(x.target, w)))
    for u in qa.vertices:
        for y in qb.arrows:
            arrows.append((f"{u}|{y.name}", label(u, y.source), label(u, y.target)))
    rels = []
    for r in a.relations:
        for w in qb.vertices:
            rels.append([(c, tuple(f"{x}|{w}" for x in p)) for c, p in r.terms])
    for r in b.relations:
        for u in qa.vertices:
            rels.append([(c, tuple(f"{u}|{y}" for y in p)) for c, p in r.terms])
    for x in qa.arrows:
        for y in qb.arrows:
            # (x at target(y)) after (source(x) on y)  =  (target(x) on y) after (x at source(y))
            rels.append([(1, (f"{x.source}|{y.name}", f"{x.name}|{y.target}")),
                         (-1, (f"{x.name}|{y.source}", f"{x.target}|{y.name}"))])
    cap = None
    if a.cyclic or b.cyclic:
        cap = (a.cap or quiver_length(qa)) + (b.cap or quiver_length(qb))
    return build_algebra(Quiver(verts, arrows), rels, a.field, cap, name or f"{a.name}*{b.name}")
