"""Finite quivers, paths and Dynkin recognition of underlying graphs."""
from __future__ import annotations

from dataclasses import dataclass, field as dfield


@dataclass(frozen=True)
class Arrow:
    name: str
    source: object
    target: object


@dataclass(frozen=True)
class Path:
    """A path stored in application order (first arrow first).

    ``str`` renders the composition right to left, so the path that first
    follows ``x`` and then ``y`` prints as ``yx``.
    """
    source: object
    target: object
    arrows: tuple = ()

    def __len__(self):
        return len(self.arrows)

    def __str__(self):
        if not self.arrows:
            return f"e{self.source}"
        return "".join(reversed(self.arrows)) if all(len(a) == 1 for a in self.arrows) \
            else "*".join(reversed(self.arrows))


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = list(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex")
        vs = set(self.vertices)
        self.arrows = []
        seen = set()
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(*a)
            if a.name in seen:
                raise ValueError(f"duplicate arrow {a.name}")
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.name} has an unknown endpoint")
            seen.add(a.name)
            self.arrows.append(a)
        self.arrow = {a.name: a for a in self.arrows}

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def out_arrows(self, v):
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v):
        return [a for a in self.arrows if a.target == v]

    def is_acyclic(self) -> bool:
        return _topological_order(self) is not None


def _topological_order(q: Quiver):
    indeg = {v: 0 for v in q.vertices}
    for a in q.arrows:
        indeg[a.target] += 1
    ready = [v for v in q.vertices if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for a in q.out_arrows(v):
            indeg[a.target] -= 1
            if indeg[a.target] == 0:
                ready.append(a.target)
    return order if len(order) == len(q.vertices) else None


def quiver_length(q: Quiver) -> int:
    """Length of the longest path; raises on oriented cycles."""
    order = _topological_order(q)
    if order is None:
        raise ValueError("quiver has an oriented cycle")
    best = {v: 0 for v in q.vertices}
    for v in order:
        for a in q.out_arrows(v):
            best[a.target] = max(best[a.target], best[v] + 1)
    return max(best.values(), default=0)


def enumerate_paths(q: Quiver, length_cap: int | None = None):
    """All paths of length <= cap, grouped as {(source, target, length): [Path]}.

    Without a cap the quiver must be acyclic.
    """
    if length_cap is None:
        length_cap = quiver_length(q)
    out = {}
    layer = [Path(v, v, ()) for v in q.vertices]
    for n in range(length_cap + 1):
        for p in layer:
            out.setdefault((p.source, p.target, n), []).append(p)
        if n == length_cap:
            break
        layer = [Path(p.source, a.target, p.arrows + (a.name,))
                 for p in layer for a in q.out_arrows(p.target)]
    return out


def reflect(q: Quiver, v, kind: str) -> Quiver:
    """Invert all arrows at a source (kind='source') or a sink (kind='sink')."""
    if kind == "source" and q.in_arrows(v):
        raise ValueError(f"vertex {v} is not a source")
    if kind == "sink" and q.out_arrows(v):
        raise ValueError(f"vertex {v} is not a sink")
    if kind not in ("source", "sink"):
        raise ValueError("kind must be 'source' or 'sink'")
    arrows = [Arrow(a.name, a.target, a.source) if v in (a.source, a.target) else a
              for a in q.arrows]
    return Quiver(q.vertices, arrows)


@dataclass
class DynkinReport:
    """Type of a connected underlying graph; ``kind`` is 'A','D','E' or 'non-Dynkin'."""
    kind: str
    rank: int
    coxeter: int | None
    connected: bool
    components: list = dfield(default_factory=list)

    @property
    def name(self):
        if not self.connected:
            return "+".join(c.name for c in self.components)
        return f"{self.kind}{self.rank}" if self.kind in "ADE" else "non-Dynkin"

    @property
    def is_dynkin(self):
        if not self.connected:
            return all(c.is_dynkin for c in self.components)
        return self.kind in ("A", "D", "E")


def coxeter_number(kind: str, n: int) -> int:
    if kind == "A":
        return n + 1
    if kind == "D":
        return 2 * (n - 1)
    return {6: 12, 7: 18, 8: 30}[n]


def _components(vertices, edges):
    adj = {v: set() for v in vertices}
    for u, w in edges:
        adj[u].add(w)
        adj[w].add(u)
    seen, comps = set(), []
    for v in vertices:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def _classify_connected(vertices, edges) -> DynkinReport:
    n = len(vertices)
    non = DynkinReport("non-Dynkin", n, None, True)
    pairs = [frozenset(e) for e in edges]
    if any(len(p) == 1 for p in pairs) or len(set(pairs)) != len(pairs):
        return non
    if len(edges) != n - 1:
        return non
    adj = {v: [] for v in vertices}
    for u, w in edges:
        adj[u].append(w)
        adj[w].append(u)
    deg = {v: len(adj[v]) for v in vertices}
    branch = [v for v in vertices if deg[v] >= 3]
    if not branch:
        return DynkinReport("A", n, n + 1, True)
    if len(branch) > 1 or deg[branch[0]] > 3:
        return non
    c = branch[0]
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while deg[cur] == 2:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return DynkinReport("D", n, 2 * (n - 1), True)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return DynkinReport("E", n, {6: 12, 7: 18, 8: 30}[n], True)
    return non


def classify_underlying(q: Quiver) -> DynkinReport:
    edges = [(a.source, a.target) for a in q.arrows]
    comps = _components(q.vertices, edges)
    if len(comps) == 1:
        return _classify_connected(q.vertices, edges)
    reports = []
    for comp in comps:
        cs = set(comp)
        reports.append(_classify_connected(comp, [e for e in edges if e[0] in cs]))
    dyn = all(r.is_dynkin for r in reports)
    return DynkinReport("disjoint" if dyn else "non-Dynkin", len(q.vertices), None, False, reports)


def full_subquiver(q: Quiver, vertices) -> Quiver:
    vs = [v for v in q.vertices if v in set(vertices)]
    s = set(vs)
    return Quiver(vs, [a for a in q.arrows if a.source in s and a.target in s])
