"""Exceptional collections of perfect complexes, their mutations, and the
Rouquier / diagonal dimension bounds that can be certified from them."""
from __future__ import annotations

import re
from functools import lru_cache
from dataclasses import dataclass, field as dfield
from importlib import resources

from .algebra import FiniteDimAlgebra, radical_degree
from .catalog import catalog
from .complexes import (ChainMap, HomComplex, PerfectComplex, cone, direct_sum_complexes,
                        gldim, min_resolution, minimize)
from .linalg import Matrix
from .modules import injective, simple
from .quiver import Quiver, _topological_order, classify_underlying, enumerate_paths, full_subquiver


class MutationError(ValueError):
    pass


class ScriptError(RuntimeError):
    def __init__(self, line_no, line, msg):
        super().__init__(f"line {line_no}: {line.strip()!r}: {msg}")
        self.line_no = line_no


def hom_complex(x: PerfectComplex, y: PerfectComplex) -> dict:
    """{degree: dim Hom^degree(x, y)} for nonzero degrees."""
    if x.algebra is not y.algebra:
        raise ValueError("objects live over different algebras")
    return HomComplex(x, y).cohomology()


def is_exceptional(x: PerfectComplex) -> bool:
    return hom_complex(x, x) == {0: 1}


class ExcCollection:
    """An ordered list of objects with a cached graded Hom table."""

    def __init__(self, objects, labels=None):
        self.objects = list(objects)
        if not self.objects:
            raise ValueError("empty collection")
        self.algebra = self.objects[0].algebra
        self.labels = list(labels) if labels else [f"E{k + 1}" for k in range(len(self.objects))]
        self._hom = {}

    def __len__(self):
        return len(self.objects)

    def __repr__(self):
        return "ExcCollection(" + ", ".join(self.labels) + ")"

    def hom(self, k, l) -> dict:
        """Hom table between positions k and l (0-based)."""
        if (k, l) not in self._hom:
            self._hom[(k, l)] = hom_complex(self.objects[k], self.objects[l])
        return self._hom[(k, l)]

    def table(self) -> dict:
        n = len(self)
        return {(k, l): self.hom(k, l) for k in range(n) for l in range(n)}

    def violations(self, strong: bool = False) -> list:
        """(k, l, i), 1-based, with Hom^i(E_k, E_l) != 0 where it should vanish."""
        out = []
        for (k, l), h in sorted(self.table().items()):
            for i, d in sorted(h.items()):
                bad = (k > l) or (k == l and (i != 0 or d != 1)) or (strong and i != 0)
                if bad:
                    out.append((k + 1, l + 1, i))
            if k == l and 0 not in h:
                out.append((k + 1, l + 1, 0))
        return out

    def is_exceptional(self) -> bool:
        return not self.violations()

    def is_strong(self) -> bool:
        return not self.violations(strong=True)

    def is_block(self, p, q) -> bool:
        """Positions p..q (1-based, inclusive) are mutually orthogonal."""
        return all(not self.hom(k, l) for k in range(p - 1, q) for l in range(p - 1, q) if k != l)

    def replaced(self, objects, labels):
        return ExcCollection(objects, labels)


def projective_collection(a: FiniteDimAlgebra, order=None) -> ExcCollection:
    """P_v in a vertex order with A_{uv} = 0 for u earlier than v."""
    if order is None:
        order = a.order or _topological_order(a.quiver)
        if order is None:
            raise ValueError("quiver has an oriented cycle; pass an explicit order")
    return ExcCollection([PerfectComplex.stalk(a, v) for v in order], [f"P{v}" for v in order])


# mutations ----------------------------------------------------------------------------

def _single_degree(h: dict, what: str):
    if not h:
        return None
    if len(h) > 1:
        raise MutationError(f"mixed-degree Hom not supported ({what}: {h})")
    (d, r), = h.items()
    return d


def left_mutation_object(Es, F: PerfectComplex) -> PerfectComplex:
    """L_{E_1..E_n}(F) = Cone(sum_i Hom(E_i, F) (x) E_i -> F) for a block E_1..E_n."""
    a = F.algebra
    summands, maps = [], []
    for E in Es:
        H = HomComplex(E, F)
        d = _single_degree(H.cohomology(), "Hom(E, F)")
        if d is None:
            continue
        for rep in H.representatives(d):
            summands.append(E.shift(-d))
            maps.append((d, H.to_components(d, rep)))
    if not summands:
        return F
    S = direct_sum_complexes(summands)
    comps = {}
    for i in S.terms:
        rows = [[{} for _ in S.terms[i]] for _ in F.terms.get(i, [])]
        off = 0
        for X, (d, fc) in zip(summands, maps):
            n = len(X.terms.get(i, []))
            block = fc.get(i - d)
            if block:
                for l in range(len(F.terms.get(i, []))):
                    for k in range(n):
                        rows[l][off + k] = block[l][k]
            off += n
        comps[i] = rows
    g = ChainMap(S, F, comps)
    if not g.is_chain_map():
        raise AssertionError("cocycle representatives did not give a chain map")
    return minimize(cone(g))


def right_mutation_object(E: PerfectComplex, Fs) -> PerfectComplex:
    """R_{F_1..F_n}(E) = Cone(E -> sum_i Hom(E, F_i)^* (x) F_i)[-1] for a block F_1..F_n."""
    summands, maps = [], []
    for F in Fs:
        H = HomComplex(E, F)
        d = _single_degree(H.cohomology(), "Hom(E, F)")
        if d is None:
            continue
        for rep in H.representatives(d):
            summands.append(F.shift(d))
            maps.append(H.to_components(d, rep))
    if not summands:
        return E
    T = direct_sum_complexes(summands)
    comps = {}
    for i in E.terms:
        rows = [[{} for _ in E.terms[i]] for _ in T.terms.get(i, [])]
        off = 0
        for Y, fc in zip(summands, maps):
            n = len(Y.terms.get(i, []))
            block = fc.get(i)
            if block:
                for l in range(n):
                    for k in range(len(E.terms[i])):
                        rows[off + l][k] = block[l][k]
            off += n
        comps[i] = rows
    g = ChainMap(E, T, comps)
    if not g.is_chain_map():
        raise AssertionError("cocycle representatives did not give a chain map")
    return minimize(cone(g).shift(-1))


def _check_range(coll, p, q):
    if not (1 <= p <= q <= len(coll)):
        raise MutationError(f"range {p}..{q} out of bounds for {len(coll)} objects")
    if not coll.is_block(p, q):
        raise MutationError(f"positions {p}..{q} do not form a block")


def block_left(coll: ExcCollection, p: int, q: int) -> ExcCollection:
    """Replace (E_p..E_q, E_{q+1}) by (L_{E_p..E_q}(E_{q+1}), E_p..E_q)."""
    _check_range(coll, p, q)
    if q + 1 > len(coll):
        raise MutationError("nothing to the right of the block")
    objs, labs = coll.objects, coll.labels
    new = left_mutation_object(objs[p - 1:q], objs[q])
    lab = f"L({','.join(labs[p - 1:q])};{labs[q]})"
    return coll.replaced(objs[:p - 1] + [new] + objs[p - 1:q] + objs[q + 1:],
                         labs[:p - 1] + [lab] + labs[p - 1:q] + labs[q + 1:])


def block_right(coll: ExcCollection, p: int, q: int) -> ExcCollection:
    """Replace (E_{p-1}, E_p..E_q) by (E_p..E_q, R_{E_p..E_q}(E_{p-1}))."""
    _check_range(coll, p, q)
    if p < 2:
        raise MutationError("nothing to the left of the block")
    objs, labs = coll.objects, coll.labels
    new = right_mutation_object(objs[p - 2], objs[p - 1:q])
    lab = f"R({','.join(labs[p - 1:q])};{labs[p - 2]})"
    return coll.replaced(objs[:p - 2] + objs[p - 1:q] + [new] + objs[q:],
                         labs[:p - 2] + labs[p - 1:q] + [lab] + labs[q:])


def left_mutate(coll: ExcCollection, i: int) -> ExcCollection:
    """i-th left mutation (2 <= i <= n): (E_{i-1}, E_i) -> (L_{E_{i-1}}(E_i), E_{i-1})."""
    if not 2 <= i <= len(coll):
        raise MutationError(f"left mutation index {i} out of range")
    return block_left(coll, i - 1, i - 1)


def right_mutate(coll: ExcCollection, i: int) -> ExcCollection:
    """i-th right mutation (1 <= i < n): (E_i, E_{i+1}) -> (E_{i+1}, R_{E_{i+1}}(E_i))."""
    if not 1 <= i < len(coll):
        raise MutationError(f"right mutation index {i} out of range")
    return block_right(coll, i + 1, i + 1)


def block_mutate(coll: ExcCollection, p: int, q: int, side: str = "L") -> ExcCollection:
    return block_left(coll, p, q) if side == "L" else block_right(coll, p, q)


def iterated_left_object(Es, F):
    """L_{E_1}(L_{E_2}(... L_{E_n}(F)))."""
    for E in reversed(Es):
        F = left_mutation_object([E], F)
    return F


def shift_object(coll: ExcCollection, i: int, k: int) -> ExcCollection:
    if not 1 <= i <= len(coll):
        raise MutationError(f"position {i} out of range")
    objs, labs = list(coll.objects), list(coll.labels)
    objs[i - 1] = objs[i - 1].shift(k)
    labs[i - 1] = f"{labs[i - 1]}[{k}]"
    return coll.replaced(objs, labs)


# endomorphism algebra ---------------------------------------------------------------------

def _compose(a, g: dict, f: dict) -> dict:
    """Degree-zero composition g o f, both given as {degree: entries}."""
    out = {}
    for i, fi in f.items():
        gi = g.get(i)
        if not gi:
            continue
        rows = [[{} for _ in fi[0]] for _ in gi] if fi else []
        for r in range(len(gi)):
            for k in range(len(fi[0]) if fi else 0):
                acc = {}
                for l in range(len(fi)):
                    acc = a.add(acc, a.mul(gi[r][l], fi[l][k]))
                rows[r][k] = acc
        out[i] = rows
    return out


@dataclass
class EndAlgebra:
    labels: list
    arrows: dict          # (k, l) -> number of irreducible maps E_k -> E_l, 0-based
    dim: int
    quiver: Quiver
    shape: str
    path_count: int
    structure: dict = dfield(default_factory=dict)   # (k, m, l) -> composition matrix

    @property
    def hereditary_shape(self) -> bool:
        """End is the path algebra of its quiver (a quotient with the same dimension)."""
        return self.dim == self.path_count

    @property
    def dynkin_hereditary(self) -> bool:
        return self.hereditary_shape and classify_underlying(self.quiver).is_dynkin

    def matches(self, name: str, dim: int) -> bool:
        return self.shape == name and self.dim == dim


def end_algebra(coll: ExcCollection) -> EndAlgebra:
    if not coll.is_strong():
        raise ValueError(f"collection not strong: {coll.violations(strong=True)}")
    a = coll.algebra
    n = len(coll)
    reps, hcs = {}, {}
    for k in range(n):
        for l in range(k + 1, n):
            if coll.hom(k, l):
                H = HomComplex(coll.objects[k], coll.objects[l])
                hcs[(k, l)] = H
                reps[(k, l)] = [H.to_components(0, v) for v in H.representatives(0)]
    arrows, structure = {}, {}
    dim = n
    for (k, l), fs in reps.items():
        dim += len(fs)
        H = hcs[(k, l)]
        comp_vecs = []
        for m in range(k + 1, l):
            if (k, m) in reps and (m, l) in reps:
                mat = []
                for g in reps[(m, l)]:
                    for f in reps[(k, m)]:
                        c = H.class_coordinates(0, H.from_components(0, _compose(a, g, f)))
                        mat.append(c)
                        comp_vecs.append(c)
                structure[(k, m, l)] = mat
        rk = Matrix.from_columns(comp_vecs, len(fs), a.field).rank() if comp_vecs else 0
        if len(fs) - rk:
            arrows[(k, l)] = len(fs) - rk
    q = Quiver(list(range(n)), [(f"e{k}_{l}_{j}", k, l) for (k, l), c in sorted(arrows.items())
                                 for j in range(c)])
    paths = sum(len(ps) for ps in enumerate_paths(q).values())
    return EndAlgebra(coll.labels, arrows, dim, q, classify_underlying(q).name, paths, structure)


# scripts --------------------------------------------------------------------------------

@dataclass
class StepResult:
    line_no: int
    command: str
    ok: bool
    detail: str = ""


@dataclass
class ScriptReport:
    name: str
    algebra: FiniteDimAlgebra
    collection: ExcCollection
    steps: list
    end: EndAlgebra | None = None
    homs: dict = dfield(default_factory=dict)      # (i, j) -> table
    kronecker: tuple | None = None                 # (i, j) 1-based
    full: bool = False

    @property
    def ok(self):
        return all(s.ok for s in self.steps)


def _parse_object(a, tok):
    kind, v = tok[0], tok[1:]
    match = [u for u in a.vertices if str(u) == v]
    if not match:
        raise ValueError(f"no vertex {v!r}")
    u = match[0]
    if kind == "P":
        return PerfectComplex.stalk(a, u)
    if kind == "S":
        return min_resolution(simple(a, u))
    if kind == "I":
        return min_resolution(injective(a, u))
    raise ValueError(f"unknown object {tok!r}")


def _parse_table(s):
    out = {}
    for part in s.replace(",", " ").split():
        d, n = part.split(":")
        if int(n):
            out[int(d)] = int(n)
    return out


_RANGE = re.compile(r"^(\d+)\.\.(\d+)$")


def parse_script(text: str):
    """Lines as (line_no, words); comments start with '#'."""
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def run_script(text: str, algebra: FiniteDimAlgebra | None = None, name: str = "script",
               stop_on_failure: bool = True) -> ScriptReport:
    coll = None
    a = algebra
    steps = []
    rep = None
    for no, line in parse_script(text):
        w = line.split()
        cmd = w[0]
        try:
            if cmd == "algebra":
                if a is None:
                    a = catalog(w[1])
                continue
            if cmd == "start":
                coll = ExcCollection([_parse_object(a, t) for t in w[1:]], w[1:])
                rep = ScriptReport(name, a, coll, steps)
                rep.full = set(w[1:]) == {f"P{v}" for v in a.vertices}
                ok = coll.is_exceptional()
                steps.append(StepResult(no, line, ok, "" if ok else f"not exceptional: {coll.violations()}"))
            elif coll is None:
                raise ValueError("no 'start' line before commands")
            elif cmd == "mutate":
                side, i = w[1], int(w[2])
                coll = left_mutate(coll, i) if side == "L" else right_mutate(coll, i)
                steps.append(StepResult(no, line, True, repr(coll)))
            elif cmd == "block":
                side = w[1]
                m = _RANGE.match(w[2])
                if not m or side not in ("L", "R"):
                    raise ValueError("expected 'block L|R p..q'")
                coll = block_mutate(coll, int(m.group(1)), int(m.group(2)), side)
                steps.append(StepResult(no, line, True, repr(coll)))
            elif cmd == "shift":
                coll = shift_object(coll, int(w[1]), int(w[2]))
                steps.append(StepResult(no, line, True, repr(coll)))
            elif cmd == "label":
                labs = list(coll.labels)
                labs[int(w[1]) - 1] = w[2]
                coll = ExcCollection(coll.objects, labs)
                coll._hom = {}
                steps.append(StepResult(no, line, True))
            elif cmd == "expect-exceptional":
                v = coll.violations()
                steps.append(StepResult(no, line, not v, f"violations {v}" if v else ""))
            elif cmd == "expect-strong":
                v = coll.violations(strong=True)
                steps.append(StepResult(no, line, not v, f"violations {v}" if v else ""))
            elif cmd == "expect-end":
                kv = dict(x.split("=") for x in w[1:])
                end = end_algebra(coll)
                rep.end = end
                ok = end.shape == kv.get("quiver", end.shape) and end.dim == int(kv.get("dim", end.dim))
                if kv.get("hereditary", "yes") == "yes":
                    ok = ok and end.hereditary_shape
                steps.append(StepResult(no, line, ok, f"quiver {end.shape}, dim {end.dim}, "
                                                      f"path count {end.path_count}"))
            elif cmd in ("expect-hom", "kronecker"):
                i, j = int(w[1]), int(w[2])
                got = coll.hom(i - 1, j - 1)
                if cmd == "kronecker":
                    ok = (got == {0: 2} and not coll.hom(j - 1, i - 1) and i < j
                          and is_exceptional(coll.objects[i - 1]) and is_exceptional(coll.objects[j - 1]))
                    if ok:
                        rep.kronecker = (i, j)
                else:
                    ok = got == _parse_table(" ".join(w[w.index("=") + 1:]))
                rep.homs[(i, j)] = got
                steps.append(StepResult(no, line, ok, f"Hom = {got}"))
            else:
                raise ValueError(f"unknown command {cmd!r}")
        except (MutationError, ValueError, KeyError) as e:
            steps.append(StepResult(no, line, False, str(e)))
        if rep is not None:
            rep.collection = coll
        if stop_on_failure and steps and not steps[-1].ok:
            break
    if rep is None:
        raise ScriptError(0, "", "script has no 'start' line")
    return rep


SCRIPT_NAMES = ["d4", "e6", "kronecker-in-b2cubed", "b3sq-kronecker"]


def script_text(name: str) -> str:
    return resources.files("quiverdims").joinpath("scripts").joinpath(f"{name}.mut").read_text()


@lru_cache(maxsize=None)
def run_named_script(name: str) -> ScriptReport:
    return run_script(script_text(name), name=name)


# Kronecker pairs ---------------------------------------------------------------------------

@dataclass
class KroneckerCertificate:
    labels: tuple
    hom: dict


def kronecker_certificate(a: FiniteDimAlgebra, pair=None):
    """An exceptional pair (X, Y) with Hom(X, Y) = k^2 in degree 0 and Hom(Y, X) = 0.

    ``pair`` is ((label, X), (label, Y)); without it, pairs of projectives are scanned.
    """
    if pair is not None:
        cands = [pair]
    else:
        P = {v: PerfectComplex.stalk(a, v) for v in a.vertices}
        cands = [((f"P{u}", P[u]), (f"P{v}", P[v])) for u in a.vertices for v in a.vertices
                 if u != v and len(a.piece(v, u)) == 2]
    for (lx, X), (ly, Y) in cands:
        h = hom_complex(X, Y)
        if h == {0: 2} and not hom_complex(Y, X) and is_exceptional(X) and is_exceptional(Y):
            return KroneckerCertificate((lx, ly), h)
    return None


# bounds --------------------------------------------------------------------------------------

@dataclass
class BoundsLedger:
    quantity: str
    lower: int
    lower_cert: str
    upper: int | None
    upper_cert: str
    facts: list = dfield(default_factory=list)

    @property
    def exact(self):
        return self.upper is not None and self.lower == self.upper

    def interval(self):
        return f"{self.lower}" if self.exact else f"[{self.lower}, {self.upper}]"

    def raise_lower(self, value, cert):
        if value > self.lower:
            self.lower, self.lower_cert = value, cert

    def lower_upper(self, value, cert):
        if self.upper is None or value < self.upper:
            self.upper, self.upper_cert = value, cert
        elif value == self.upper and cert != self.upper_cert:
            self.facts.append(f"also <= {value}: {cert}")


def is_semisimple(a: FiniteDimAlgebra) -> bool:
    return a.dim == len(a.vertices)


def is_connected(a: FiniteDimAlgebra) -> bool:
    return classify_underlying(a.quiver).connected


def check_slices(a: FiniteDimAlgebra, slices) -> str | None:
    """None if the partition is valid, else the reason."""
    where = {}
    for j, sl in enumerate(slices):
        for v in sl:
            if v in where:
                raise ValueError(f"vertex {v} in two slices")
            where[v] = j
    if set(where) != set(a.vertices):
        return "slices do not cover the vertices"
    for arr in a.quiver.arrows:
        if where[arr.target] < where[arr.source]:
            return f"arrow {arr.name} goes backwards"
    for j, sl in enumerate(slices):
        q = full_subquiver(a.quiver, sl)
        if not classify_underlying(q).is_dynkin:
            return f"slice {j} is not Dynkin"
        paths = sum(len(p) for p in enumerate_paths(q).values())
        inside = sum(len(a.piece(v, u)) for u in sl for v in sl)
        if paths != inside:
            return f"slice {j} carries relations"
    return None


def ddim_bounds(a: FiniteDimAlgebra, blocks=None, hereditary_collection: EndAlgebra | None = None,
                factors=None, citation: str = "") -> BoundsLedger:
    """``blocks``: list of lists of (label, object), forming a full exceptional collection
    (fullness is taken from ``citation``)."""
    semi = is_semisimple(a)
    led = BoundsLedger("Ddim", 0 if semi else 1, "semisimple" if semi else "not semisimple",
                       None, "")
    if not semi:
        led.facts.append("Ddim >= 1 for non-semisimple algebras (cited)")
    g = gldim(a)
    led.lower_upper(g, f"gldim = {g}")
    r = radical_degree(a)
    led.lower_upper(r, f"radical degree: R^{r + 1} = 0")
    if blocks is not None:
        objs = [o for b in blocks for _, o in b]
        labs = [l for b in blocks for l, _ in b]
        coll = ExcCollection(objs, labs)
        if coll.violations():
            raise ValueError(f"declared collection not exceptional: {coll.violations()}")
        p = 1
        for b in blocks:
            if not coll.is_block(p, p + len(b) - 1):
                raise ValueError(f"declared block {[l for l, _ in b]} fails the block test")
            p += len(b)
        led.lower_upper(len(blocks) - 1, f"{len(blocks)}-block full collection {labs}")
        if citation:
            led.facts.append(citation)
    if hereditary_collection is not None and hereditary_collection.hereditary_shape:
        led.lower_upper(1, f"derived equivalent to k{hereditary_collection.shape} (hereditary)")
    if factors:
        tot = sum(f.upper for f in factors)
        led.lower_upper(tot, "sum over tensor factors")
    return led


def rdim_bounds(a: FiniteDimAlgebra, hints: dict | None = None) -> BoundsLedger:
    """Certified interval for the Rouquier dimension.

    hints keys:
      scripts   names of mutation scripts over ``a``
      slices    vertex partition with arrows pointing weakly forward
      groups    list of lists of (label, object): semi-orthogonal groups, each a strong
                collection with Dynkin hereditary End; fullness from ``citation``
      regression a RegressionResult with exact ls != us
      via       list of (ledger, relation, citation) with relation 'equivalent' or 'contained'
      projectives  bool, try the End quiver of the projectives (default True)
      ddim      a Ddim ledger to use instead of the default one
      claims    cited statements kept as facts; they never move the interval
    """
    from .closed_forms import regression_for
    from .serre import serre_iterate
    hints = hints or {}
    led = BoundsLedger("Rdim", 0, "trivial", None, "")

    # lower bounds
    cert = kronecker_certificate(a)
    if cert:
        led.raise_lower(1, f"Kronecker pair {cert.labels}")
    scripts = [run_named_script(name) for name in hints.get("scripts", [])]
    for rep in scripts:
        if rep.algebra.name != a.name:
            raise ValueError(f"script {rep.name} runs over {rep.algebra.name}, not {a.name}")
    for rep in scripts:
        name = rep.name
        if rep.ok and rep.kronecker:
            i, j = rep.kronecker
            led.raise_lower(1, f"Kronecker pair ({rep.collection.labels[i - 1]}, "
                               f"{rep.collection.labels[j - 1]}) from script {name}")
    reg = hints.get("regression")
    if reg is None and regression_for(a) is not None:
        reg = regression_for(a)(a, serre_iterate(a, hints.get("steps", 6)))
    if reg is not None and reg.holds and reg.ls != reg.us and is_connected(a):
        led.raise_lower(1, f"LS = {reg.ls} != US = {reg.us} ({reg.provenance})")
        led.facts.append("Rdim = 0 forces LS = US (cited)")

    # upper bounds
    if hints.get("projectives", True) and not a.cyclic:
        end = end_algebra(projective_collection(a))
        if end.dynkin_hereditary:
            led.lower_upper(0, f"End of projectives is k{end.shape}")
            led.facts.append("Rdim = 0 for Dynkin path algebras (cited)")
    for rep in scripts:
        name = rep.name
        if rep.ok and rep.full and rep.end is not None and rep.end.dynkin_hereditary:
            led.lower_upper(0, f"script {name}: full strong collection with End k{rep.end.shape}")
    if "slices" in hints:
        why = check_slices(a, hints["slices"])
        if why:
            raise ValueError(f"invalid slice partition: {why}")
        led.lower_upper(len(hints["slices"]) - 1, f"{len(hints['slices'])} Dynkin slices")
    if "groups" in hints:
        groups = hints["groups"]
        objs = [o for g in groups for _, o in g]
        labs = [l for g in groups for l, _ in g]
        whole = ExcCollection(objs, labs)
        if whole.violations():
            raise ValueError(f"groups do not form an exceptional collection: {whole.violations()}")
        for g in groups:
            e = end_algebra(ExcCollection([o for _, o in g], [l for l, _ in g]))
            if not e.dynkin_hereditary:
                raise ValueError(f"group {[l for l, _ in g]} has End {e.shape}, dim {e.dim}")
        led.lower_upper(len(groups) - 1, f"{len(groups)} Dynkin groups {[[l for l, _ in g] for g in groups]}")
        if hints.get("citation"):
            led.facts.append(hints["citation"])
    for other, relation, citation in hints.get("via", []):
        if relation == "equivalent":
            led.raise_lower(other.lower, f"{other.lower_cert} (via {citation})")
        if other.upper is not None:
            led.lower_upper(other.upper, f"{other.upper_cert} (via {citation})")
        led.facts.append(citation)
    led.facts.extend(hints.get("claims", []))
    dd = hints.get("ddim") or ddim_bounds(a)
    led.lower_upper(dd.upper, f"Rdim <= Ddim <= {dd.upper} ({dd.upper_cert})")
    if led.lower > led.upper:
        raise AssertionError(f"inconsistent bounds {led}")
    return led
