"""Cochain complexes of right modules and perfect complexes of projectives.

Grading is cohomological: X[1]^i = X^{i+1}, with differential negated.  A
perfect complex stores, in each degree, the list of vertices v of its
summands P_v; a differential entry from P_u to P_v is an element of
e_v A e_u acting by left multiplication.
"""
from __future__ import annotations

from .algebra import FiniteDimAlgebra
from .linalg import Matrix
from .modules import (ModuleMap, RightModule, direct_sum, projective, subquotient, top_generators)


class ResolutionCapExceeded(RuntimeError):
    pass


class PerfectComplex:
    def __init__(self, algebra: FiniteDimAlgebra, terms: dict, diff: dict | None = None):
        self.algebra = algebra
        self.terms = {i: list(v) for i, v in terms.items() if v}
        diff = diff or {}
        self.diff = {}
        for i in self.terms:
            if i + 1 in self.terms:
                d = diff.get(i)
                if d is None:
                    d = [[{} for _ in self.terms[i]] for _ in self.terms[i + 1]]
                self.diff[i] = [[dict(x) for x in row] for row in d]
        self._vm = {}

    # basic -----------------------------------------------------------------
    @classmethod
    def stalk(cls, a, v, degree=0):
        return cls(a, {degree: [v]})

    def __repr__(self):
        parts = [f"{i}:{''.join('P' + str(v) for v in self.terms[i])}" for i in self.degrees]
        return "PerfectComplex(" + ", ".join(parts) + ")"

    @property
    def degrees(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def d(self, i):
        """Entries of d^i as [row summand of degree i+1][column summand of degree i]."""
        if i in self.diff:
            return self.diff[i]
        return [[{} for _ in self.terms.get(i, [])] for _ in self.terms.get(i + 1, [])]

    def shape(self):
        return {i: tuple(self.terms[i]) for i in self.degrees}

    def single_projective(self):
        """(v, degree) when the complex is one P_v in one degree, else None."""
        if len(self.terms) == 1:
            (i, vs), = self.terms.items()
            if len(vs) == 1:
                return vs[0], i
        return None

    def is_minimal(self) -> bool:
        a = self.algebra
        return all(a.is_radical(x) for d in self.diff.values() for row in d for x in row)

    def shift(self, s: int) -> PerfectComplex:
        a = self.algebra
        sign = -1 if s % 2 else 1
        terms = {i - s: v for i, v in self.terms.items()}
        diff = {i - s: [[a.scale(x, sign) for x in row] for row in d] for i, d in self.diff.items()}
        return PerfectComplex(a, terms, diff)

    def check_d2(self) -> bool:
        a = self.algebra
        for i in self.terms:
            if i + 1 in self.terms and i + 2 in self.terms:
                d0, d1 = self.d(i), self.d(i + 1)
                for r in range(len(self.terms[i + 2])):
                    for c in range(len(self.terms[i])):
                        acc = {}
                        for k in range(len(self.terms[i + 1])):
                            acc = a.add(acc, a.mul(d1[r][k], d0[k][c]))
                        if acc:
                            return False
        return True

    # vertex-wise linear algebra ------------------------------------------------
    def vertex_space(self, i, u):
        return sum(len(self.algebra.piece(v, u)) for v in self.terms.get(i, []))

    def vertex_matrix(self, i, u) -> Matrix:
        """d^i restricted to the u-component, (C^{i+1} e_u) x (C^i e_u)."""
        key = (i, u)
        if key in self._vm:
            return self._vm[key]
        m = entries_vertex_matrix(self.algebra, self.terms.get(i + 1, []), self.terms.get(i, []),
                                  self.d(i), u)
        self._vm[key] = m
        return m

    def homology_dims(self) -> dict:
        """{degree: {vertex: dim}} for nonzero homology."""
        a = self.algebra
        out = {}
        for i in self.degrees:
            row = {}
            for u in a.vertices:
                n = self.vertex_space(i, u)
                if not n:
                    continue
                r_out = self.vertex_matrix(i, u).rank() if i + 1 in self.terms else 0
                r_in = self.vertex_matrix(i - 1, u).rank() if i - 1 in self.terms else 0
                h = n - r_out - r_in
                if h:
                    row[u] = h
            if row:
                out[i] = row
        return out

    def support(self):
        """(inf, sup) of degrees with nonzero homology, or None for acyclic."""
        h = self.homology_dims()
        if not h:
            return None
        return min(h), max(h)

    def to_modules(self) -> ModuleComplex:
        a = self.algebra
        mods = {i: direct_sum(a, [projective(a, v) for v in vs]) for i, vs in self.terms.items()}
        maps = {}
        for i in self.diff:
            maps[i] = ModuleMap(mods[i], mods[i + 1], {u: self.vertex_matrix(i, u) for u in a.vertices})
        return ModuleComplex(a, mods, maps)

    def homology_module(self, i) -> RightModule:
        return self.to_modules().homology_module(i)


def entries_vertex_matrix(a, row_verts, col_verts, entries, u) -> Matrix:
    rsz = [len(a.piece(v, u)) for v in row_verts]
    csz = [len(a.piece(v, u)) for v in col_verts]
    nr, nc = sum(rsz), sum(csz)
    rows = [[0] * nc for _ in range(nr)]
    r0 = 0
    for r, vr in enumerate(row_verts):
        c0 = 0
        for c, vc in enumerate(col_verts):
            x = entries[r][c]
            if x and rsz[r] and csz[c]:
                blk = a.left_matrix(x, vc, vr, u)
                for ii in range(rsz[r]):
                    rows[r0 + ii][c0:c0 + csz[c]] = blk.rows[ii]
            c0 += csz[c]
        r0 += rsz[r]
    return Matrix(rows, nc, a.field)


class ModuleComplex:
    """Bounded complex of right modules; maps[i]: terms[i] -> terms[i+1]."""

    def __init__(self, algebra, terms: dict, maps: dict | None = None):
        self.algebra = algebra
        self.terms = {i: m for i, m in terms.items() if m.dim}
        self.maps = {}
        for i in self.terms:
            if i + 1 in self.terms:
                self.maps[i] = (maps or {})[i]

    @property
    def degrees(self):
        return sorted(self.terms)

    def map_at(self, i, u) -> Matrix:
        f = self.algebra.field
        if i in self.maps:
            return self.maps[i].mats[u]
        src = self.terms[i].dims[u] if i in self.terms else 0
        dst = self.terms[i + 1].dims[u] if i + 1 in self.terms else 0
        return Matrix.zeros(dst, src, f)

    def cycles_boundaries(self, i):
        a = self.algebra
        f = a.field
        M = self.terms[i]
        Z, B = {}, {}
        for u in a.vertices:
            n = M.dims[u]
            d = self.map_at(i, u)
            Z[u] = d.kernel() if d.nrows else Matrix.identity(n, f)
            if i - 1 in self.terms:
                B[u] = self.map_at(i - 1, u).image()
            else:
                B[u] = Matrix.zeros(n, 0, f)
        return Z, B

    def homology_dims(self) -> dict:
        out = {}
        for i in self.degrees:
            Z, B = self.cycles_boundaries(i)
            row = {u: Z[u].ncols - B[u].ncols for u in Z if Z[u].ncols - B[u].ncols}
            if row:
                out[i] = row
        return out

    def homology_module(self, i) -> RightModule:
        if i not in self.terms:
            return RightModule(self.algebra, {})
        Z, B = self.cycles_boundaries(i)
        return subquotient(self.terms[i], Z, B)


def _sum_module(a, verts):
    return direct_sum(a, [projective(a, v) for v in verts])


def _offsets(a, verts, u):
    offs, tot = [], 0
    for v in verts:
        offs.append(tot)
        tot += len(a.piece(v, u))
    return offs, tot


def resolve_complex(c, cap: int | None = None, with_map: bool = False):
    """Minimal perfect complex quasi-isomorphic to a bounded module complex
    (or a minimal model of a perfect complex).

    With ``with_map`` also returns the quasi-isomorphism as {degree: [vector
    in C^i at the summand's vertex]}, the image of each summand's idempotent.
    """
    if isinstance(c, PerfectComplex):
        return minimize(c)
    a = c.algebra
    f = a.field
    cap = a.dim + 2 if cap is None else cap
    if not c.terms:
        return (PerfectComplex(a, {}), {}) if with_map else PerfectComplex(a, {})
    top, bottom = max(c.terms), min(c.terms)
    verts = a.vertices
    P_terms, P_diff, gens_at = {}, {}, {}
    Pnext, Pnext_mod = [], _sum_module(a, [])
    dPnext = {u: Matrix.zeros(0, 0, f) for u in verts}   # P^{i+1} -> P^{i+2}
    phinext = None                                        # P^{i+1} -> C^{i+1}
    Pnext2_dims = {u: 0 for u in verts}
    i = top
    while True:
        if i < bottom - cap - 1:
            raise ResolutionCapExceeded(f"no finite resolution within cap {cap}")
        Ci = c.terms.get(i)
        Cdim = {u: (Ci.dims[u] if Ci else 0) for u in verts}
        Cnext_dim = {u: (c.terms[i + 1].dims[u] if i + 1 in c.terms else 0) for u in verts}
        Pdim = {u: Pnext_mod.dims[u] for u in verts}
        Dmod = direct_sum(a, [Pnext_mod] + ([Ci] if Ci else []))
        Z, B = {}, {}
        for u in verts:
            n = Pdim[u] + Cdim[u]
            rows_out = Pnext2_dims[u] + Cnext_dim[u]
            blk = [[0] * n for _ in range(rows_out)]
            dp = dPnext[u]
            for r in range(dp.nrows):
                for k in range(dp.ncols):
                    if dp[r, k]:
                        blk[r][k] = f.reduce(-dp[r, k])
            if phinext is not None:
                ph = phinext[u]
                for r in range(ph.nrows):
                    for k in range(ph.ncols):
                        blk[Pnext2_dims[u] + r][k] = ph[r, k]
            if Ci and i + 1 in c.terms:
                dc = c.map_at(i, u)
                for r in range(dc.nrows):
                    for k in range(dc.ncols):
                        blk[Pnext2_dims[u] + r][Pdim[u] + k] = dc[r, k]
            D = Matrix(blk, n, f)
            Z[u] = D.kernel() if rows_out else Matrix.identity(n, f)
            if Ci and i - 1 in c.terms:
                dcm = c.map_at(i - 1, u)
                cols = [[0] * Pdim[u] + col for col in dcm.columns()]
                B[u] = Matrix.from_columns(cols, n, f)
            else:
                B[u] = Matrix.zeros(n, 0, f)
        gens = top_generators(Dmod, Z, avoid=B)
        if not gens and i < bottom:
            break
        new_verts = [w for w, _ in gens]
        entries = [[{} for _ in new_verts] for _ in Pnext]
        for col, (w, g) in enumerate(gens):
            offs, _ = _offsets(a, Pnext, w)
            for k, v in enumerate(Pnext):
                idx = a.piece(v, w)
                x = {}
                for t, bi in enumerate(idx):
                    val = g[offs[k] + t]
                    if val:
                        x[bi] = f.reduce(-val)
                entries[k][col] = x
        phi = {}
        for u in verts:
            cols = []
            for w, g in gens:
                gc = g[Pdim[w]:]
                for bi in a.piece(w, u):
                    cols.append(Ci.act(bi).apply(gc) if Ci else [])
            phi[u] = Matrix.from_columns(cols, Cdim[u], f)
        if new_verts:
            P_terms[i] = new_verts
            gens_at[i] = [g[Pdim[w]:] for w, g in gens]
            if Pnext:
                P_diff[i] = entries
        dP = {u: entries_vertex_matrix(a, Pnext, new_verts, entries, u) for u in verts}
        Pnext2_dims = Pdim
        Pnext, Pnext_mod = new_verts, _sum_module(a, new_verts)
        dPnext, phinext = dP, phi
        i -= 1
    out = PerfectComplex(a, P_terms, P_diff)
    return (out, gens_at) if with_map else out


def min_resolution(m: RightModule, cap: int | None = None) -> PerfectComplex:
    """Minimal projective resolution, as a complex in degrees <= 0."""
    return resolve_complex(ModuleComplex(m.algebra, {0: m}), cap)


def projective_dimension(m: RightModule, cap: int | None = None) -> int:
    res = min_resolution(m, cap)
    return -min(res.terms) if res.terms else 0


def gldim(a, cap: int | None = None) -> int:
    from .modules import simple
    return max(projective_dimension(simple(a, v), cap) for v in a.vertices)


def ext_dims(m: RightModule, n: RightModule, cap: int | None = None) -> dict:
    """{i: dim Ext^i(m, n)} for nonzero groups."""
    a = m.algebra
    f = a.field
    res = min_resolution(m, cap)
    # cochain complex Hom(P^{-j}, n): Hom(P_w, n) = n_w
    def space(j):
        return res.terms.get(-j, [])

    def dmat(j):
        """Hom(P^{-j}, n) -> Hom(P^{-j-1}, n), f -> f o d^{-j-1}."""
        src, dst = space(j), space(j + 1)
        rs = [n.dims[v] for v in dst]
        cs = [n.dims[v] for v in src]
        rows = [[0] * sum(cs) for _ in range(sum(rs))]
        d = res.d(-j - 1)
        r0 = 0
        for r, vr in enumerate(dst):
            c0 = 0
            for c, vc in enumerate(src):
                x = d[c][r]
                if x:
                    blk = n.act_element(x, vc, vr)
                    for ii in range(rs[r]):
                        rows[r0 + ii][c0:c0 + cs[c]] = blk.rows[ii]
                c0 += cs[c]
            r0 += rs[r]
        return Matrix(rows, sum(cs), f)

    depth = -min(res.terms) if res.terms else 0
    out = {}
    for j in range(depth + 1):
        dim = sum(n.dims[v] for v in space(j))
        rk_out = dmat(j).rank() if space(j + 1) and dim else 0
        rk_in = dmat(j - 1).rank() if j > 0 and space(j - 1) and dim else 0
        e = dim - rk_out - rk_in
        if e:
            out[j] = e
    return out


def ext_table(a, cap: int | None = None) -> dict:
    from .modules import simple
    return {(u, v): ext_dims(simple(a, u), simple(a, v), cap) for u in a.vertices for v in a.vertices}


# Gaussian elimination ----------------------------------------------------------

def minimize(pc: PerfectComplex) -> PerfectComplex:
    """Cancel invertible differential entries until every entry lies in the radical."""
    a = pc.algebra
    terms = {i: list(v) for i, v in pc.terms.items()}
    diff = {i: [[dict(x) for x in row] for row in pc.diff[i]] for i in pc.diff}
    while True:
        hit = None
        for i in sorted(diff):
            d = diff[i]
            for r, row in enumerate(d):
                for c, x in enumerate(row):
                    if terms[i + 1][r] == terms[i][c] and a.idem[terms[i][c]] in x:
                        hit = (i, r, c)
                        break
                if hit:
                    break
            if hit:
                break
        if hit is None:
            break
        i, r, c = hit
        d = diff[i]
        inv = a.inverse_local(d[r][c], terms[i][c])
        nr, nc = len(terms[i + 1]), len(terms[i])
        new = []
        for rr in range(nr):
            if rr == r:
                continue
            row = []
            for cc in range(nc):
                if cc == c:
                    continue
                x = d[rr][cc]
                if d[rr][c] and d[r][cc]:
                    x = a.add(x, a.mul(a.mul(d[rr][c], inv), d[r][cc]), -1)
                row.append(x)
            new.append(row)
        diff[i] = new
        if i - 1 in diff:
            diff[i - 1] = [row for k, row in enumerate(diff[i - 1]) if k != c]
        if i + 1 in diff:
            diff[i + 1] = [[x for k, x in enumerate(row) if k != r] for row in diff[i + 1]]
        del terms[i][c]
        del terms[i + 1][r]
        for j in (i, i + 1):
            if not terms[j]:
                del terms[j]
                diff.pop(j, None)
                diff.pop(j - 1, None)
    return PerfectComplex(a, terms, diff)


# sums, maps, cones ----------------------------------------------------------------

def direct_sum_complexes(cs) -> PerfectComplex:
    cs = list(cs)
    a = cs[0].algebra
    degs = sorted(set(i for c in cs for i in c.terms))
    terms = {i: sum((c.terms.get(i, []) for c in cs), []) for i in degs}
    diff = {}
    for i in degs:
        if i + 1 not in terms:
            continue
        rows = []
        for k, c in enumerate(cs):
            dk = c.d(i)
            for r in range(len(c.terms.get(i + 1, []))):
                row = []
                for m, c2 in enumerate(cs):
                    n = len(c2.terms.get(i, []))
                    row.extend(dk[r] if m == k else [{}] * n)
                rows.append(row)
        diff[i] = rows
    return PerfectComplex(a, terms, diff)


class ChainMap:
    """Degree-zero map; comps[i][l][k] goes from src summand k to dst summand l in degree i."""

    def __init__(self, src: PerfectComplex, dst: PerfectComplex, comps: dict):
        self.src, self.dst = src, dst
        self.comps = comps

    def comp(self, i):
        c = self.comps.get(i)
        if c is None:
            return [[{} for _ in self.src.terms.get(i, [])] for _ in self.dst.terms.get(i, [])]
        return c

    def is_chain_map(self) -> bool:
        a = self.src.algebra
        for i in set(self.src.terms) | set(self.dst.terms):
            g0, g1 = self.comp(i), self.comp(i + 1)
            dx, dy = self.src.d(i), self.dst.d(i)
            for l in range(len(self.dst.terms.get(i + 1, []))):
                for k in range(len(self.src.terms.get(i, []))):
                    acc = {}
                    for m in range(len(self.dst.terms.get(i, []))):
                        acc = a.add(acc, a.mul(dy[l][m], g0[m][k]))
                    for m in range(len(self.src.terms.get(i + 1, []))):
                        acc = a.add(acc, a.mul(g1[l][m], dx[m][k]), -1)
                    if acc:
                        return False
        return True


def cone(g: ChainMap) -> PerfectComplex:
    """Cone^i = X^{i+1} + Y^i with d = [[-d_X, 0], [g, d_Y]]."""
    X, Y = g.src, g.dst
    a = X.algebra
    degs = sorted(set(i - 1 for i in X.terms) | set(Y.terms))
    terms = {i: X.terms.get(i + 1, []) + Y.terms.get(i, []) for i in degs}
    diff = {}
    for i in degs:
        if i + 1 not in terms:
            continue
        dx = X.d(i + 1)
        dy = Y.d(i)
        gi = g.comp(i + 1)
        nx1, ny1 = len(X.terms.get(i + 2, [])), len(Y.terms.get(i + 1, []))
        nx0, ny0 = len(X.terms.get(i + 1, [])), len(Y.terms.get(i, []))
        rows = []
        for r in range(nx1):
            rows.append([a.scale(dx[r][k], -1) for k in range(nx0)] + [{}] * ny0)
        for r in range(ny1):
            rows.append([gi[r][k] for k in range(nx0)] + [dy[r][k] for k in range(ny0)])
        diff[i] = rows
    return PerfectComplex(a, terms, diff)


# Hom complexes -------------------------------------------------------------------------

class HomComplex:
    """Hom^n(X, Y) = prod_i Hom(X^i, Y^{i+n}) with D f = d_Y f - (-1)^n f d_X."""

    def __init__(self, X: PerfectComplex, Y: PerfectComplex):
        self.X, self.Y = X, Y
        self.a = X.algebra
        self._coords = {}
        self._cache = {}

    def range(self):
        if not self.X.terms or not self.Y.terms:
            return range(0)
        return range(min(self.Y.terms) - max(self.X.terms), max(self.Y.terms) - min(self.X.terms) + 1)

    def coords(self, n):
        """List of (i, l, k, basis index) labelling coordinates of Hom^n."""
        if n not in self._coords:
            out = []
            a = self.a
            for i in sorted(self.X.terms):
                ys = self.Y.terms.get(i + n, [])
                for k, u in enumerate(self.X.terms[i]):
                    for l, v in enumerate(ys):
                        for b in a.piece(v, u):
                            out.append((i, l, k, b))
            self._coords[n] = out
        return self._coords[n]

    def differential(self, n) -> Matrix:
        a = self.a
        f = a.field
        src, dst = self.coords(n), self.coords(n + 1)
        pos = {c: j for j, c in enumerate(dst)}
        rows = [[0] * len(src) for _ in dst]
        sign = -1 if n % 2 else 1
        for col, (i, l, k, b) in enumerate(src):
            # d_Y o f : Y^{i+n} -> Y^{i+n+1}
            dy = self.Y.d(i + n)
            for l2 in range(len(self.Y.terms.get(i + n + 1, []))):
                x = dy[l2][l]
                if x:
                    for bb, cval in a.mul(x, {b: 1}).items():
                        j = pos[(i, l2, k, bb)]
                        rows[j][col] = f.reduce(rows[j][col] + cval)
            # -(-1)^n f o d_X : X^{i-1} -> X^i
            dx = self.X.d(i - 1)
            for k2 in range(len(self.X.terms.get(i - 1, []))):
                x = dx[k][k2]
                if x:
                    for bb, cval in a.mul({b: 1}, x).items():
                        j = pos[(i - 1, l, k2, bb)]
                        rows[j][col] = f.reduce(rows[j][col] - sign * cval)
        return Matrix(rows, len(src), f)

    def _data(self, n):
        if n not in self._cache:
            f = self.a.field
            N = len(self.coords(n))
            dn = self.differential(n)
            Z = dn.kernel() if dn.nrows else Matrix.identity(N, f)
            B = self.differential(n - 1).image()
            self._cache[n] = (Z, B)
        return self._cache[n]

    def cohomology_dim(self, n) -> int:
        if not self.coords(n):
            return 0
        Z, B = self._data(n)
        return Z.ncols - B.ncols

    def cohomology(self) -> dict:
        out = {}
        for n in self.range():
            h = self.cohomology_dim(n)
            if h:
                out[n] = h
        return out

    def representatives(self, n):
        """Cocycles whose classes form a basis of H^n, as coordinate lists."""
        from .linalg import extend_to_basis
        if not self.coords(n):
            return []
        Z, B = self._data(n)
        return [Z.column(j) for j in extend_to_basis(B, Z)]

    def class_coordinates(self, n, vec):
        """Coordinates of the class of a cocycle in the representative basis."""
        from .linalg import solve
        reps = self.representatives(n)
        Z, B = self._data(n)
        N = len(self.coords(n))
        if not reps:
            return []
        M = Matrix.from_columns(reps + B.columns(), N, self.a.field)
        x = solve(M, Matrix.from_columns([vec], N, self.a.field))
        if x is None:
            raise ValueError("not a cocycle")
        return [x[j, 0] for j in range(len(reps))]

    def to_components(self, n, vec) -> dict:
        """{i: entries X^i -> Y^{i+n}} from a coordinate vector."""
        out = {}
        for (i, l, k, b), c in zip(self.coords(n), vec):
            if not c:
                continue
            if i not in out:
                out[i] = [[{} for _ in self.X.terms[i]] for _ in self.Y.terms.get(i + n, [])]
            out[i][l][k][b] = c
        return out

    def from_components(self, n, comps) -> list:
        vec = []
        for (i, l, k, b) in self.coords(n):
            e = comps.get(i)
            vec.append(e[l][k].get(b, 0) if e else 0)
        return vec


def hom_dims(X: PerfectComplex, Y: PerfectComplex) -> dict:
    return HomComplex(X, Y).cohomology()
