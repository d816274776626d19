"""Serre functor on perfect complexes, iteration statistics and the
tensor powers of the dual bimodule."""
from __future__ import annotations

from dataclasses import dataclass, field as dfield
from fractions import Fraction

from .algebra import FiniteDimAlgebra
from .complexes import ChainMap, HomComplex, ModuleComplex, PerfectComplex, resolve_complex
from .linalg import Matrix, rref, solve
from .modules import ModuleMap, direct_sum, injective


def _nu_block(a, rows_v, cols_v, entries, w) -> Matrix:
    """Vertex-w matrix of the injective map induced by entries P_vc -> P_vr."""
    rs = [len(a.piece(w, v)) for v in rows_v]
    cs = [len(a.piece(w, v)) for v in cols_v]
    rows = [[0] * sum(cs) for _ in range(sum(rs))]
    r0 = 0
    for r, vr in enumerate(rows_v):
        c0 = 0
        for c, vc in enumerate(cols_v):
            if entries[r][c] and rs[r] and cs[c]:
                # f -> f(- * alpha): transpose of e_w A e_vr -> e_w A e_vc
                blk = a.right_matrix(entries[r][c], w, vr, vc).transpose()
                for ii in range(rs[r]):
                    rows[r0 + ii][c0:c0 + cs[c]] = blk.rows[ii]
            c0 += cs[c]
        r0 += rs[r]
    return Matrix(rows, sum(cs), a.field)


def nakayama(x: PerfectComplex) -> ModuleComplex:
    """Apply - (x) A^* termwise: P_v becomes I_v, entries keep their algebra elements."""
    a = x.algebra
    mods = {i: direct_sum(a, [injective(a, v) for v in vs]) for i, vs in x.terms.items()}
    maps = {}
    for i, d in x.diff.items():
        mats = {w: _nu_block(a, x.terms[i + 1], x.terms[i], d, w) for w in a.vertices}
        maps[i] = ModuleMap(mods[i], mods[i + 1], mats)
    return ModuleComplex(a, mods, maps)


def serre_apply(x: PerfectComplex, cap: int | None = None) -> PerfectComplex:
    """Minimal perfect complex representing S(x) = x (x)^L A^*."""
    return resolve_complex(nakayama(x), cap)


def serre_power(x: PerfectComplex, n: int, cap: int | None = None) -> PerfectComplex:
    for _ in range(n):
        x = serre_apply(x, cap)
    return x


def serre_apply_map(g: ChainMap, cap: int | None = None):
    """(S(X), S(Y), S(g)) for a degree-zero chain map g: X -> Y.

    S(g) is the lift through the resolutions P_X -> nu X and P_Y -> nu Y,
    found by solving phi_Y h = nu(g) phi_X + D s with h a cocycle.
    """
    X, Y = g.src, g.dst
    a = X.algebra
    f = a.field
    nX, nY = nakayama(X), nakayama(Y)
    PX, gX = resolve_complex(nX, cap, with_map=True)
    PY, gY = resolve_complex(nY, cap, with_map=True)
    H = HomComplex(PX, PY)
    hco = H.coords(0)

    def mcoords(n):
        out = []
        for i in sorted(PX.terms):
            M = nY.terms.get(i + n)
            if M is None:
                continue
            for k, w in enumerate(PX.terms[i]):
                for t in range(M.dims[w]):
                    out.append((i, k, t))
        return out

    c0, cm1 = mcoords(0), mcoords(-1)
    pos0 = {c: j for j, c in enumerate(c0)}
    nh, ns = len(hco), len(cm1)
    rows = []
    rhs = []
    # cocycle condition on h
    D0 = H.differential(0)
    for r in D0.rows:
        rows.append(list(r) + [0] * ns)
        rhs.append(0)
    eq = [[0] * (nh + ns) for _ in c0]
    # phi_Y o h
    for col, (i, l, k, b) in enumerate(hco):
        if i not in nY.terms:
            continue
        img = nY.terms[i].act(b).apply(gY[i][l])
        for t, val in enumerate(img):
            if val:
                eq[pos0[(i, k, t)]][col] += val
    # - D s, s in Hom^{-1}(P_X, nu Y):  D s = d_M s + s d_P
    for col, (i, k, t) in enumerate(cm1):
        w = PX.terms[i][k]
        Mi = nY.terms[i - 1]
        e = [0] * Mi.dims[w]
        e[t] = 1
        if i in nY.terms:
            img = nY.map_at(i - 1, w).apply(e)
            for tt, val in enumerate(img):
                if val:
                    eq[pos0[(i, k, tt)]][nh + col] -= val
        dP = PX.d(i - 1)
        for k2, w2 in enumerate(PX.terms.get(i - 1, [])):
            x = dP[k][k2]
            if x:
                img = Mi.act_element(x, w, w2).apply(e)
                for tt, val in enumerate(img):
                    if val:
                        eq[pos0[(i - 1, k2, tt)]][nh + col] -= val
    # right side: nu(g) o phi_X
    target = [0] * len(c0)
    for i in sorted(PX.terms):
        if i not in nY.terms or i not in nX.terms:
            continue
        for k, w in enumerate(PX.terms[i]):
            blk = _nu_block(a, Y.terms[i], X.terms[i], g.comp(i), w)
            img = blk.apply(gX[i][k])
            for t, val in enumerate(img):
                if val:
                    target[pos0[(i, k, t)]] += val
    rows.extend(eq)
    rhs.extend(target)
    M = Matrix(rows, nh + ns, f)
    sol = solve(M, Matrix([[x] for x in rhs], 1, f))
    if sol is None:
        raise ArithmeticError("no lift of the Serre image found")
    hvec = [sol[j, 0] for j in range(nh)]
    return PX, PY, ChainMap(PX, PY, H.to_components(0, hvec))


def functorial_fcy(a: FiniteDimAlgebra, n: int, m: int, cap: int | None = None) -> bool:
    """Whether S^n and [m] agree as functors on projectives, i.e. S^n(alpha) is
    conjugate to alpha by units theta_v of e_v A e_v for every arrow alpha."""
    phi = {}
    for ar in a.quiver.arrows:
        u, v = ar.source, ar.target
        X = PerfectComplex.stalk(a, u)
        Y = PerfectComplex.stalk(a, v)
        g = ChainMap(X, Y, {0: [[a.arrow_element(ar.name)]]})
        for _ in range(n):
            X, Y, g = serre_apply_map(g, cap)
        if X.single_projective() != (u, -m) or Y.single_projective() != (v, -m):
            return False
        phi[ar.name] = g.comp(-m)[0][0]
    # unknowns: coordinates of theta_v in e_v A e_v
    var = []
    for v in a.vertices:
        for b in a.piece(v, v):
            var.append((v, b))
    pos = {x: j for j, x in enumerate(var)}
    rows = []
    for ar in a.quiver.arrows:
        u, v = ar.source, ar.target
        alpha = a.arrow_element(ar.name)
        eqs = {}
        for b in a.piece(v, v):
            for k, c in a.mul({b: 1}, phi[ar.name]).items():
                eqs.setdefault(k, {})[pos[(v, b)]] = eqs.get(k, {}).get(pos[(v, b)], 0) + c
        for b in a.piece(u, u):
            for k, c in a.mul(alpha, {b: 1}).items():
                eqs.setdefault(k, {})[pos[(u, b)]] = eqs.get(k, {}).get(pos[(u, b)], 0) - c
        for e in eqs.values():
            row = [0] * len(var)
            for j, c in e.items():
                row[j] = c
            if any(row):
                rows.append(row)
    K = Matrix(rows, len(var), a.field).kernel() if rows else Matrix.identity(len(var), a.field)
    for v in a.vertices:
        j = pos[(v, a.idem[v])]
        if not any(K[j, c] for c in range(K.ncols)):
            return False
    return True


@dataclass
class SerreTrace:
    """Iterates S^m(P_v) for m = 0..steps with their homology."""
    algebra: FiniteDimAlgebra
    steps: int
    complexes: dict = dfield(default_factory=dict)   # (v, m) -> PerfectComplex
    homology: dict = dfield(default_factory=dict)    # (v, m) -> {deg: {vertex: dim}}

    def support(self, v, m):
        h = self.homology[(v, m)]
        return (min(h), max(h)) if h else None

    def inf(self, m):
        return min(self.support(v, m)[0] for v in self.algebra.vertices)

    def sup(self, m):
        return max(self.support(v, m)[1] for v in self.algebra.vertices)

    def rows(self):
        """(m, inf_m, sup_m, -sup_m/m, -inf_m/m) for m >= 1."""
        return [(m, self.inf(m), self.sup(m), Fraction(-self.sup(m), m), Fraction(-self.inf(m), m))
                for m in range(1, self.steps + 1)]


def serre_iterate(a: FiniteDimAlgebra, steps: int, cap: int | None = None, vertices=None) -> SerreTrace:
    tr = SerreTrace(a, steps)
    for v in vertices or a.vertices:
        x = PerfectComplex.stalk(a, v)
        tr.complexes[(v, 0)] = x
        tr.homology[(v, 0)] = x.homology_dims()
        for m in range(1, steps + 1):
            x = serre_apply(x, cap)
            tr.complexes[(v, m)] = x
            tr.homology[(v, m)] = x.homology_dims()
    return tr


def fcy_certificate(a: FiniteDimAlgebra, max_n: int, max_shift: int | None = None,
                    cap: int | None = None, trace: SerreTrace | None = None):
    """Least n <= max_n with S^n(P_v) = P_v[m] for every v (common m).

    Minimal perfect complexes are unique up to isomorphism, so the test is
    exact: each minimal S^n(P_v) must be the single term P_v in degree -m.
    Returns (n, m) or None.
    """
    tr = trace if trace is not None and trace.steps >= max_n else serre_iterate(a, max_n, cap)
    for n in range(1, max_n + 1):
        shifts = set()
        for v in a.vertices:
            sp = tr.complexes[(v, n)].single_projective()
            if sp is None or sp[0] != v:
                shifts = None
                break
            shifts.add(-sp[1])
        if shifts and len(shifts) == 1:
            m = shifts.pop()
            if max_shift is None or abs(m) <= max_shift:
                return n, m
    return None


def fcy_holds(a: FiniteDimAlgebra, n: int, m: int, cap: int | None = None,
              trace: SerreTrace | None = None) -> bool:
    """S^n(P_v) = P_v[m] for every vertex v."""
    tr = trace if trace is not None and trace.steps >= n else serre_iterate(a, n, cap)
    return all(tr.complexes[(v, n)].single_projective() == (v, -m) for v in a.vertices)


@dataclass
class Estimate:
    ls: object               # Fraction when exact, else None
    us: object
    rows: list
    provenance: str

    @property
    def exact(self):
        return self.ls is not None and self.us is not None


def ls_us_estimate(a: FiniteDimAlgebra, steps: int, cap: int | None = None) -> Estimate:
    """Sequences -sup_m/m and -inf_m/m; exact limits only from certificates."""
    from .closed_forms import regression_for
    tr = serre_iterate(a, steps, cap)
    rows = tr.rows()
    cert = fcy_certificate(a, steps, trace=tr)
    if cert is not None:
        n, m = cert
        val = Fraction(m, n)
        return Estimate(val, val, rows, f"fCY certificate S^{n} = [{m}]")
    reg = regression_for(a)
    if reg is not None:
        res = reg(a, tr)
        if res.holds:
            return Estimate(res.ls, res.us, rows, res.provenance)
    return Estimate(None, None, rows, "interval only")


# bimodules --------------------------------------------------------------------------

class Bimodule:
    """A-A bimodule with basis vectors e_i b e_j; actions stored sparsely.

    ``left[c][k]`` is c*b_k and ``right[c][k]`` is b_k*c as {index: coeff}.
    """

    def __init__(self, algebra, ends, left, right):
        self.algebra = algebra
        self.ends = list(ends)
        self.left = left
        self.right = right

    @property
    def dim(self):
        return len(self.ends)

    def piece_dims(self):
        out = {}
        for e in self.ends:
            out[e] = out.get(e, 0) + 1
        return out


def dual_bimodule(a: FiniteDimAlgebra) -> Bimodule:
    """A^* with (a f b)(x) = f(b x a); the dual of b_p lives at (source p, target p)."""
    ends = [(p.source, p.target) for p in a.basis]
    left, right = {}, {}
    for ar in a.quiver.arrows:
        c = a.arrow_element(ar.name)
        (ci, cv), = [(i, v) for i, v in c.items()] if len(c) == 1 else [(None, None)]
        lc, rc = {}, {}
        for q in range(a.dim):
            # (c.f_p)(x) = f_p(x c): contributes f_q coefficient [p in q*c]
            for p, v in a.mul({q: 1}, c).items():
                lc.setdefault(p, {})[q] = lc.get(p, {}).get(q, 0) + v
            for p, v in a.mul(c, {q: 1}).items():
                rc.setdefault(p, {})[q] = rc.get(p, {}).get(q, 0) + v
        left[ar.name] = lc
        right[ar.name] = rc
    return Bimodule(a, ends, left, right)


def tensor_over(t: Bimodule, n: Bimodule) -> Bimodule:
    """t (x)_A n, presented as pairs modulo (t c) (x) s - t (x) (c s) for arrows c."""
    a = t.algebra
    f = a.field
    pairs = {}
    for i, (li, ri) in enumerate(t.ends):
        for j, (lj, rj) in enumerate(n.ends):
            if ri == lj:
                pairs.setdefault((li, rj), []).append((i, j))
    rels = {}
    for ar in a.quiver.arrows:
        c = ar.name
        for i, (li, ri) in enumerate(t.ends):
            if ri != ar.target:
                continue
            ti = t.right[c].get(i, {})
            for j, (lj, rj) in enumerate(n.ends):
                if lj != ar.source:
                    continue
                nj = n.left[c].get(j, {})
                if not ti and not nj:
                    continue
                elem = {}
                for k, v in ti.items():
                    elem[(k, j)] = elem.get((k, j), 0) + v
                for k, v in nj.items():
                    elem[(i, k)] = elem.get((i, k), 0) - v
                rels.setdefault((li, rj), []).append(elem)
    ends, nf = [], {}
    for key in sorted(pairs, key=lambda k: (str(k[0]), str(k[1]))):
        ps = pairs[key]
        col = {p: k for k, p in enumerate(ps)}
        rows = []
        for e in rels.get(key, []):
            row = [0] * len(ps)
            for p, v in e.items():
                row[col[p]] = f.reduce(row[col[p]] + v)
            if any(row):
                rows.append(row)
        red, piv = rref(rows, len(ps), f)
        pivset = set(piv)
        free = [k for k in range(len(ps)) if k not in pivset]
        base = len(ends)
        fpos = {k: base + s for s, k in enumerate(free)}
        for k in free:
            ends.append(key)
            nf[ps[k]] = {fpos[k]: 1}
        for row, pc in zip(red, piv):
            nf[ps[pc]] = {fpos[k]: f.reduce(-row[k]) for k in free if row[k]}
    reps = {}
    for p, v in nf.items():
        if len(v) == 1 and list(v.values())[0] == 1 and list(v)[0] not in reps:
            reps[list(v)[0]] = p
    left, right = {}, {}
    for ar in a.quiver.arrows:
        c = ar.name
        lc, rc = {}, {}
        for idx, (i, j) in reps.items():
            acc = {}
            for k, v in t.left[c].get(i, {}).items():
                for q, w in nf[(k, j)].items():
                    acc[q] = f.reduce(acc.get(q, 0) + v * w)
            acc = {q: w for q, w in acc.items() if w}
            if acc:
                lc[idx] = acc
            acc = {}
            for k, v in n.right[c].get(j, {}).items():
                for q, w in nf[(i, k)].items():
                    acc[q] = f.reduce(acc.get(q, 0) + v * w)
            acc = {q: w for q, w in acc.items() if w}
            if acc:
                rc[idx] = acc
        left[c], right[c] = lc, rc
    return Bimodule(a, ends, left, right)


def bimodule_tensor_power(a: FiniteDimAlgebra, r: int) -> Bimodule:
    """(A^*) tensored over A with itself r times (underived)."""
    d = dual_bimodule(a)
    t = d
    for _ in range(r - 1):
        if t.dim == 0:
            break
        t = tensor_over(t, d)
    return t


def nilpotence_degree(a: FiniteDimAlgebra, max_r: int):
    """(least r <= max_r with (A^*)^{(x) r} = 0 or None, [dims for r = 1..])."""
    d = dual_bimodule(a)
    t = d
    dims = [t.dim]
    for r in range(1, max_r + 1):
        if t.dim == 0:
            return r, dims
        if r == max_r:
            break
        t = tensor_over(t, d)
        dims.append(t.dim)
    return None, dims
