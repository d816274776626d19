"""Alternating tensor spaces V (x) V* (x) V (x) ... and the joint kernels of
their adjacent traces, for a finite-dimensional graded space V.

V is given as the list of degrees of a basis.  Every trace map preserves
the torus weight of a word (letters counted with sign by position), so the
kernels are computed block by block.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dfield
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .linalg import QQ, Matrix, solve

AMBIENT_CAP = 65536


def dual(V):
    return tuple(-d for d in V)


def width(V) -> int:
    return max(V) - min(V)


def _poly_mul(p, q):
    out = Counter()
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] += x * y
    return Counter({k: v for k, v in out.items() if v})


def _poly_sub(p, q):
    out = Counter(p)
    for k, v in q.items():
        out[k] -= v
    return Counter({k: v for k, v in out.items() if v})


def at_space(V, n: int) -> Counter:
    """Graded dimension {degree: dim} of V (x) V* (x) ... with n factors."""
    out = Counter({0: 1})
    gv, gd = Counter(V), Counter(dual(V))
    for k in range(1, n + 1):
        out = _poly_mul(out, gv if k % 2 else gd)
    return out


def _letter_sign(pos):  # pos is 1-based
    return 1 if pos % 2 else -1


def _weight(w):
    lam = Counter()
    for pos, a in enumerate(w, 1):
        lam[a] += _letter_sign(pos)
    return tuple(sorted((a, c) for a, c in lam.items() if c))


def _degree(V, w):
    return sum(_letter_sign(pos) * V[a] for pos, a in enumerate(w, 1))


def _contract(w, i):
    """tr_i on a word: contracts positions i, i+1 (1-based)."""
    if w[i - 1] != w[i]:
        return None
    return w[:i - 1] + w[i + 1:]


@lru_cache(maxsize=None)
def _blocks(V, n):
    if len(V) ** n > AMBIENT_CAP:
        raise MemoryError(f"ambient dimension {len(V)}^{n} exceeds {AMBIENT_CAP}")
    groups = {}
    for w in product(range(len(V)), repeat=n):
        groups.setdefault(_weight(w), []).append(w)
    return groups


@dataclass
class TraceSpace:
    """psi_n(V): per weight block the words and a kernel basis (columns)."""
    V: tuple
    n: int
    blocks: dict = dfield(default_factory=dict)   # weight -> (words, Matrix)

    @property
    def dim(self):
        return sum(m.ncols for _, m in self.blocks.values())

    def graded_dims(self) -> Counter:
        out = Counter()
        for words, m in self.blocks.values():
            if m.ncols:
                out[_degree(self.V, words[0])] += m.ncols
        return out

    def vectors(self):
        """Basis vectors as {word: coeff}."""
        for words, m in self.blocks.values():
            for c in range(m.ncols):
                yield {w: m[r, c] for r, w in enumerate(words) if m[r, c]}

    def contains(self, vec: dict) -> bool:
        for i in range(1, self.n):
            img = Counter()
            for w, c in vec.items():
                t = _contract(w, i)
                if t is not None:
                    img[t] += c
            if any(img.values()):
                return False
        return True


@lru_cache(maxsize=None)
def psi(V, n: int) -> TraceSpace:
    """Joint kernel of tr_1, ..., tr_{n-1} on the n-factor alternating tensor space."""
    V = tuple(V)
    sp = TraceSpace(V, n)
    if n < 0:
        return sp
    if n == 0:
        sp.blocks[()] = ([()], Matrix.identity(1, QQ))
        return sp
    for lam, words in _blocks(V, n).items():
        if n == 1:
            sp.blocks[lam] = (words, Matrix.identity(len(words), QQ))
            continue
        rowpos = {}
        entries = []
        for col, w in enumerate(words):
            for i in range(1, n):
                t = _contract(w, i)
                if t is not None:
                    key = (i, t)
                    if key not in rowpos:
                        rowpos[key] = len(rowpos)
                    entries.append((rowpos[key], col))
        rows = [[0] * len(words) for _ in rowpos]
        for r, c in entries:
            rows[r][c] += 1
        k = Matrix(rows, len(words), QQ).kernel() if rows else Matrix.identity(len(words), QQ)
        sp.blocks[lam] = (words, k)
    return sp


def psi_graded_dims(V, n: int) -> Counter:
    """Graded dims from the exact sequences: psi_{i+1} = psi_i (x) V^(*) - psi_{i-1}."""
    V = tuple(V)
    if n < 0:
        return Counter()
    prev, cur = Counter(), Counter({0: 1})
    gv, gd = Counter(V), Counter(dual(V))
    for i in range(n):
        nxt = _poly_sub(_poly_mul(cur, gv if i % 2 == 0 else gd), prev)
        prev, cur = cur, nxt
    return cur


@dataclass
class ExactnessReport:
    i: int
    alpha_into: bool          # psi_{i+1} lies in psi_i (x) V^(*)
    composite_zero: bool      # beta o alpha = 0
    kernel_matches: bool      # dim ker beta = dim psi_{i+1}
    beta_surjective: bool     # beta lands in and onto psi_{i-1}
    graded_ok: bool

    @property
    def ok(self):
        return all((self.alpha_into, self.composite_zero, self.kernel_matches,
                    self.beta_surjective, self.graded_ok))


def verify_exact(V, i: int, strict: bool = True) -> ExactnessReport:
    """Check 0 -> psi_{i+1} -> psi_i (x) W -> psi_{i-1} -> 0, with W = V for
    even i and W = V* for odd i, the second map being the last trace."""
    V = tuple(V)
    if strict and len(V) < 2:
        raise ValueError("exactness needs dim V >= 2")
    if i < 0:
        raise ValueError("i must be non-negative")
    big, mid, small = psi(V, i + 1), psi(V, i), psi(V, i - 1)
    sign = _letter_sign(i + 1)
    alpha_into = composite_zero = kernel_matches = beta_surj = True
    # source basis of psi_i (x) W grouped by weight of the product word
    src = {}
    for vec in mid.vectors():
        for a in range(len(V)):
            prod_vec = {w + (a,): c for w, c in vec.items()}
            lam = _weight(next(iter(prod_vec)))
            src.setdefault(lam, []).append(prod_vec)
    weights = set(src) | set(big.blocks) | set(small.blocks)
    for lam in weights:
        cols = src.get(lam, [])
        bwords, bmat = big.blocks.get(lam, ([], Matrix.zeros(0, 0, QQ)))
        words = sorted(set(w for v in cols for w in v) | set(bwords))
        pos = {w: k for k, w in enumerate(words)}
        S = Matrix.from_columns([[v.get(w, 0) for w in words] for v in cols], len(words), QQ)
        # alpha: the inclusion of psi_{i+1}
        if bmat.ncols:
            Bcols = [[0] * len(words) for _ in range(bmat.ncols)]
            for r, w in enumerate(bwords):
                for c in range(bmat.ncols):
                    Bcols[c][pos[w]] = bmat[r, c]
            Bm = Matrix.from_columns(Bcols, len(words), QQ)
            if not cols or solve(S, Bm) is None:
                alpha_into = False
        # beta: tr_i, landing in words of length i-1
        swords, smat = small.blocks.get(lam, ([], Matrix.zeros(0, 0, QQ)))
        if i == 0:
            continue
        tpos = {}
        img_cols = []
        for v in cols:
            img = Counter()
            for w, c in v.items():
                t = _contract(w, i)
                if t is not None:
                    img[t] += c
            img_cols.append(img)
            for t in img:
                tpos.setdefault(t, len(tpos))
        for w in swords:
            tpos.setdefault(w, len(tpos))
        beta = Matrix.from_columns([[img.get(t, 0) for t in tpos] for img in img_cols], len(tpos), QQ) \
            if cols else Matrix.zeros(len(tpos), 0, QQ)
        rk = beta.rank() if cols else 0
        if len(cols) - rk != bmat.ncols:
            kernel_matches = False
        if bmat.ncols and cols and alpha_into:
            x = solve(S, Bm)
            if not (beta @ x).is_zero():
                composite_zero = False
        # image inside psi_{i-1} and of full dimension
        if smat.ncols:
            Sm = Matrix.from_columns(
                [[smat[swords.index(t), c] if t in swords else 0 for t in tpos] for c in range(smat.ncols)],
                len(tpos), QQ)
            if cols and rk and solve(Sm, beta.image()) is None:
                beta_surj = False
            if rk != smat.ncols:
                beta_surj = False
        elif rk:
            beta_surj = False
    g_mid = _poly_mul(mid.graded_dims(), Counter(V) if sign > 0 else Counter(dual(V)))
    graded_ok = _poly_sub(g_mid, _poly_mul(big.graded_dims(), Counter({0: 1}))) == small.graded_dims()
    return ExactnessReport(i, alpha_into, composite_zero, kernel_matches, beta_surj, graded_ok)


def kw_bounds(V, k: int, direct: bool = True) -> dict:
    """Extreme degrees of psi_{2k-1} and psi_{2k} against their closed forms."""
    V = tuple(V)
    w = width(V)
    pred = {
        "sup_odd": k * w + min(V), "inf_odd": -k * w + max(V),
        "sup_even": k * w, "inf_even": -k * w,
    }
    if direct:
        go, ge = psi(V, 2 * k - 1).graded_dims(), psi(V, 2 * k).graded_dims()
    else:
        go, ge = psi_graded_dims(V, 2 * k - 1), psi_graded_dims(V, 2 * k)
    got = {"sup_odd": max(go), "inf_odd": min(go), "sup_even": max(ge), "inf_even": min(ge)}
    top = max(range(len(V)), key=lambda a: (V[a], -a))
    bot = min(range(len(V)), key=lambda a: (V[a], a))
    witness_ok = None
    if direct and top != bot:
        wit = tuple(top if p % 2 == 0 else bot for p in range(2 * k))
        witness_ok = psi(V, 2 * k).contains({wit: 1}) and _degree(V, wit) == k * w
    return {"predicted": pred, "computed": got, "match": pred == got, "witness_in_psi": witness_ok}


@dataclass
class AVSummand:
    name: str
    first: Counter     # graded dims at vertex 1
    second: Counter    # graded dims at vertex 2
    shift: int

    def support(self):
        degs = [d - self.shift for d in list(self.first) + list(self.second)]
        return (min(degs), max(degs)) if degs else None


def _psi_dims(V, n, direct):
    if n < 0:
        return Counter()
    if direct and len(V) ** max(n, 0) <= AMBIENT_CAP:
        return psi(tuple(V), n).graded_dims()
    return psi_graded_dims(V, n)


def av_serre_homology(V, m: int, direct: bool = True):
    """Summands of the m-th derived tensor power of the dual of A_V on the two
    projectives, with the resulting inf and sup."""
    V = tuple(V)
    Vd = dual(V)
    p1 = AVSummand("P1", _psi_dims(Vd, 2 * m - 2, direct), _psi_dims(Vd, 2 * m - 1, direct), m - 1)
    p2 = AVSummand("P2", _psi_dims(V, 2 * m - 3, direct), _psi_dims(V, 2 * m - 2, direct), m - 1)
    sups = [s.support() for s in (p1, p2) if s.support()]
    inf_m = min(s[0] for s in sups)
    sup_m = max(s[1] for s in sups)
    return {"summands": (p1, p2), "inf": inf_m, "sup": sup_m}


def av_closed_forms(V, m: int):
    w = width(V)
    return {"sup": (m - 1) * w + abs(min(V)) + 1 - m, "inf": -(m - 1) * w - abs(max(V)) + 1 - m}


def av_dims(V, steps: int = 8, direct: bool = False):
    """(1 - w, 1 + w) together with the finite-step estimator rows."""
    w = width(V)
    rows = []
    for m in range(1, steps + 1):
        h = av_serre_homology(V, m, direct)
        rows.append((m, h["inf"], h["sup"], Fraction(-h["sup"], m), Fraction(-h["inf"], m)))
    return (1 - w, 1 + w), rows
