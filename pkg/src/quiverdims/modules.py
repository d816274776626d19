"""Right modules as quiver representations.

A right module M has spaces M_v = M e_v, and an arrow a: u -> v acts as a
linear map M_v -> M_u.  Matrices act on column vectors.
"""
from __future__ import annotations

import random

from .algebra import FiniteDimAlgebra
from .linalg import Matrix, extend_to_basis, solve


class RightModule:
    def __init__(self, algebra: FiniteDimAlgebra, dims: dict, maps: dict | None = None, name: str = ""):
        self.algebra = algebra
        self.dims = {v: dims.get(v, 0) for v in algebra.vertices}
        f = algebra.field
        self.maps = {}
        for a in algebra.quiver.arrows:
            m = (maps or {}).get(a.name)
            shape = (self.dims[a.source], self.dims[a.target])
            if m is None:
                m = Matrix.zeros(*shape, f)
            elif not isinstance(m, Matrix):
                m = Matrix(m, shape[1], f)
            if m.shape != shape:
                raise ValueError(f"arrow {a.name}: expected shape {shape}, got {m.shape}")
            self.maps[a.name] = m
        self.name = name
        self._act = {}

    def __repr__(self):
        return f"<module {self.name or ''} dims={self.dim_vector()}>"

    def dim_vector(self):
        return tuple(self.dims[v] for v in self.algebra.vertices)

    @property
    def dim(self):
        return sum(self.dims.values())

    def act(self, i: int) -> Matrix:
        """Matrix of m -> m * b_i, from M_target(b_i) to M_source(b_i)."""
        m = self._act.get(i)
        if m is None:
            p = self.algebra.basis[i]
            f = self.algebra.field
            m = Matrix.identity(self.dims[p.target], f)
            for x in reversed(p.arrows):
                m = self.maps[x] @ m
            self._act[i] = m
        return m

    def act_element(self, x: dict, v, u) -> Matrix:
        """Right action of x in e_v A e_u as a map M_v -> M_u."""
        f = self.algebra.field
        out = Matrix.zeros(self.dims[u], self.dims[v], f)
        for i, c in x.items():
            out = out + self.act(i).scale(c)
        return out

    def satisfies_relations(self) -> bool:
        a = self.algebra
        for r in a.relations:
            tot = Matrix.zeros(self.dims[r.source], self.dims[r.target], a.field)
            for c, p in r.terms:
                m = Matrix.identity(self.dims[r.target], a.field)
                for x in reversed(p):
                    m = self.maps[x] @ m
                tot = tot + m.scale(c)
            if not tot.is_zero():
                return False
        return True


def direct_sum(algebra, modules) -> RightModule:
    dims = {v: sum(m.dims[v] for m in modules) for v in algebra.vertices}
    maps = {}
    for a in algebra.quiver.arrows:
        maps[a.name] = block_diag([m.maps[a.name] for m in modules], algebra.field)
    return RightModule(algebra, dims, maps)


def block_diag(mats, field):
    nr = sum(m.nrows for m in mats)
    nc = sum(m.ncols for m in mats)
    rows = [[0] * nc for _ in range(nr)]
    r0 = c0 = 0
    for m in mats:
        for i, row in enumerate(m.rows):
            rows[r0 + i][c0:c0 + m.ncols] = row
        r0 += m.nrows
        c0 += m.ncols
    return Matrix(rows, nc, field)


def projective(a: FiniteDimAlgebra, v) -> RightModule:
    """P_v = e_v A, with (P_v)_u = e_v A e_u."""
    if v in a._proj:
        return a._proj[v]
    dims = {u: len(a.piece(v, u)) for u in a.vertices}
    maps = {}
    for ar in a.quiver.arrows:
        # x in e_v A e_t  ->  x * ar in e_v A e_s
        maps[ar.name] = a.right_matrix(a.arrow_element(ar.name), v, ar.target, ar.source)
    m = RightModule(a, dims, maps, name=f"P{v}")
    a._proj[v] = m
    return m


def injective(a: FiniteDimAlgebra, v) -> RightModule:
    """I_v = (A e_v)^*, with (I_v)_u dual to e_u A e_v."""
    if v in a._inj:
        return a._inj[v]
    dims = {u: len(a.piece(u, v)) for u in a.vertices}
    maps = {}
    for ar in a.quiver.arrows:
        # (f.ar)(y) = f(ar * y): transpose of left multiplication e_s A e_v -> e_t A e_v
        maps[ar.name] = a.left_matrix(a.arrow_element(ar.name), ar.source, ar.target, v).transpose()
    m = RightModule(a, dims, maps, name=f"I{v}")
    a._inj[v] = m
    return m


def simple(a: FiniteDimAlgebra, v) -> RightModule:
    return RightModule(a, {v: 1}, name=f"S{v}")


def representation(a: FiniteDimAlgebra, dims: dict, maps: dict, name: str = "") -> RightModule:
    """Module from arrow matrices; checks that all relations hold."""
    m = RightModule(a, dims, maps, name)
    if not m.satisfies_relations():
        raise ValueError("matrices violate the relations")
    return m


class ModuleMap:
    """Per-vertex matrices f_v: M_v -> N_v."""

    def __init__(self, src: RightModule, dst: RightModule, mats: dict):
        self.src, self.dst = src, dst
        f = src.algebra.field
        self.mats = {v: mats.get(v) if mats.get(v) is not None else Matrix.zeros(dst.dims[v], src.dims[v], f)
                     for v in src.algebra.vertices}

    def is_homomorphism(self) -> bool:
        for a in self.src.algebra.quiver.arrows:
            if self.dst.maps[a.name] @ self.mats[a.target] != self.mats[a.source] @ self.src.maps[a.name]:
                return False
        return True

    def compose(self, other: ModuleMap) -> ModuleMap:
        """self after other."""
        return ModuleMap(other.src, self.dst, {v: self.mats[v] @ other.mats[v] for v in self.mats})

    def is_iso(self) -> bool:
        return all(m.nrows == m.ncols and m.rank() == m.nrows for m in self.mats.values())


def hom_space(m: RightModule, n: RightModule):
    """Basis of Hom_A(m, n) as ModuleMaps."""
    a = m.algebra
    f = a.field
    verts = a.vertices
    offs, tot = {}, 0
    for v in verts:
        offs[v] = tot
        tot += n.dims[v] * m.dims[v]

    def var(v, i, j):  # entry (i, j) of f_v
        return offs[v] + i * m.dims[v] + j

    rows = []
    for ar in a.quiver.arrows:
        s, t = ar.source, ar.target
        Na, Ma = n.maps[ar.name], m.maps[ar.name]
        # (N_a f_t - f_s M_a)[i, j] = 0, i in N_s, j in M_t
        for i in range(n.dims[s]):
            for j in range(m.dims[t]):
                row = [0] * tot
                for k in range(n.dims[t]):
                    if Na[i, k]:
                        row[var(t, k, j)] += Na[i, k]
                for k in range(m.dims[s]):
                    if Ma[k, j]:
                        row[var(s, i, k)] -= Ma[k, j]
                if any(row):
                    rows.append(row)
    ker = Matrix(rows, tot, f).kernel() if rows else Matrix.identity(tot, f)
    out = []
    for col in ker.columns():
        mats = {}
        for v in verts:
            mats[v] = Matrix([[col[var(v, i, j)] for j in range(m.dims[v])] for i in range(n.dims[v])],
                             m.dims[v], f)
        out.append(ModuleMap(m, n, mats))
    return out


def radical_span(m: RightModule, sub: dict) -> dict:
    """(S R)_w = sum over arrows a from w of M_a(S_target(a)); sub maps v -> column basis."""
    a = m.algebra
    f = a.field
    out = {}
    for w in a.vertices:
        cols = []
        for ar in a.quiver.out_arrows(w):
            S = sub[ar.target]
            if S.ncols:
                cols.extend((m.maps[ar.name] @ S).columns())
        out[w] = Matrix.from_columns(cols, m.dims[w], f)
    return out


def top_generators(m: RightModule, sub: dict | None = None, avoid: dict | None = None):
    """Vectors of ``sub`` (default all of m) giving a basis of sub / (sub R + avoid).

    Returns [(vertex, vector)].
    """
    a = m.algebra
    f = a.field
    if sub is None:
        sub = {v: Matrix.identity(m.dims[v], f) for v in a.vertices}
    rad = radical_span(m, sub)
    gens = []
    for w in a.vertices:
        S = sub[w]
        if S.ncols == 0:
            continue
        base = rad[w]
        if avoid is not None and avoid[w].ncols:
            base = base.hstack(avoid[w]) if base.ncols else avoid[w]
        for j in extend_to_basis(base, S):
            gens.append((w, S.column(j)))
    return gens


def map_from_projective(n: RightModule, w, g) -> ModuleMap:
    """The map P_w -> n sending e_w to g in n_w."""
    a = n.algebra
    P = projective(a, w)
    mats = {}
    for u in a.vertices:
        cols = [n.act(i).apply(g) for i in a.piece(w, u)]
        mats[u] = Matrix.from_columns(cols, n.dims[u], a.field)
    return ModuleMap(P, n, mats)


def projective_cover(m: RightModule):
    """(list of vertices, surjection from the sum of their projectives)."""
    a = m.algebra
    gens = top_generators(m)
    verts = [w for w, _ in gens]
    P = direct_sum(a, [projective(a, w) for w in verts])
    mats = {}
    for u in a.vertices:
        cols = []
        for w, g in gens:
            cols.extend(m.act(i).apply(g) for i in a.piece(w, u))
        mats[u] = Matrix.from_columns(cols, m.dims[u], a.field)
    return verts, ModuleMap(P, m, mats)


def socle(m: RightModule) -> dict:
    """Per-vertex basis of elements killed by every arrow."""
    a = m.algebra
    f = a.field
    out = {}
    for v in a.vertices:
        maps = [m.maps[ar.name] for ar in a.quiver.in_arrows(v)]
        if not maps or m.dims[v] == 0:
            out[v] = Matrix.identity(m.dims[v], f)
            continue
        out[v] = maps[0].vstack(*maps[1:]).kernel()
    return out


def is_projective_module(m: RightModule, v) -> bool:
    """Decides m = P_v exactly: the cover is a single P_v and dimensions agree."""
    verts, _ = projective_cover(m)
    return verts == [v] and m.dim_vector() == projective(m.algebra, v).dim_vector()


def is_injective_module(m: RightModule, v) -> bool:
    """Decides m = I_v exactly: simple socle at v and matching dimensions."""
    soc = socle(m)
    sd = {u: soc[u].ncols for u in m.algebra.vertices}
    return all(sd[u] == (1 if u == v else 0) for u in sd) and \
        m.dim_vector() == injective(m.algebra, v).dim_vector()


def module_iso(m: RightModule, n: RightModule, tries: int = 12, seed: int = 0):
    """True/False when decided, None when no isomorphism was found by search
    and no complete test applies."""
    if m.dim_vector() != n.dim_vector():
        return False
    a = m.algebra
    for v in a.vertices:
        if n is a._proj.get(v):
            return is_projective_module(m, v)
        if n is a._inj.get(v):
            return is_injective_module(m, v)
    homs = hom_space(m, n)
    if not homs:
        return False
    for h in homs:
        if h.is_iso():
            return True
    rng = random.Random(seed)
    for _ in range(tries):
        coeffs = [rng.randint(-9, 9) for _ in homs]
        mats = {}
        for v in a.vertices:
            acc = Matrix.zeros(n.dims[v], m.dims[v], a.field)
            for c, h in zip(coeffs, homs):
                if c:
                    acc = acc + h.mats[v].scale(c)
            mats[v] = acc
        if ModuleMap(m, n, mats).is_iso():
            return True
    back = hom_space(n, m)
    if not back:
        return False
    return None


def subquotient(m: RightModule, sub: dict, below: dict) -> RightModule:
    """The module sub / below, for submodules below <= sub given by column bases."""
    a = m.algebra
    f = a.field
    reps = {}
    coords = {}
    for v in a.vertices:
        S, B = sub[v], below[v]
        idx = extend_to_basis(B, S)
        reps[v] = Matrix.from_columns([S.column(j) for j in idx], m.dims[v], f)
        coords[v] = (B, reps[v])
    dims = {v: reps[v].ncols for v in a.vertices}
    maps = {}
    for ar in a.quiver.arrows:
        s, t = ar.source, ar.target
        R = reps[t]
        B, Rs = coords[s]
        if R.ncols == 0 or Rs.ncols == 0:
            maps[ar.name] = Matrix.zeros(dims[s], dims[t], f)
            continue
        img = m.maps[ar.name] @ R
        full = Rs.hstack(B) if B.ncols else Rs
        x = solve(full, img)
        if x is None:
            raise ValueError("sub is not a submodule")
        maps[ar.name] = x.submatrix(range(Rs.ncols), range(img.ncols))
    return RightModule(a, dims, maps)
