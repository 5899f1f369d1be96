"""Simple undirected graphs, degeneracy machinery, and matching classification."""

from dataclasses import dataclass


def _norm_edge(u, v):
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Immutable after construction; no self-loops or parallel edges."""

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("vertex out of range in edge (%s, %s)" % (u, v))
            if u == v:
                raise ValueError("self-loop at vertex %s" % u)
            e = _norm_edge(u, v)
            if e in seen:
                raise ValueError("duplicate edge (%s, %s)" % (u, v))
            seen.add(e)
        self.edges = frozenset(seen)
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = [tuple(sorted(a)) for a in adj]

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return len(self.adj[v])

    def neighbors(self, v):
        return self.adj[v]

    def has_edge(self, u, v):
        return _norm_edge(u, v) in self.edges

    def max_degree(self):
        return max((len(a) for a in self.adj), default=0)

    def sorted_edges(self):
        return sorted(self.edges)

    def __eq__(self, other):
        if isinstance(other, Graph):
            return self.n == other.n and self.edges == other.edges
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, self.m)


def induced_subgraph(g, s):
    """Subgraph of g induced by vertex set s.

    Vertices are remapped to 0..|s|-1 in ascending order of their original
    identifiers; returns (subgraph, original_ids) with original_ids[i] the
    vertex of g that became i."""
    vs = sorted(set(s))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError("unknown vertex %s" % v)
    index = {v: i for i, v in enumerate(vs)}
    inside = set(vs)
    edges = [(index[u], index[v]) for u, v in g.edges if u in inside and v in inside]
    return Graph(len(vs), edges), tuple(vs)


@dataclass(frozen=True)
class DegeneracyCertificate:
    """Peeling order witnessing that a graph is r-degenerate."""

    order: tuple
    r: int

    def verify(self, g):
        if sorted(self.order) != list(range(g.n)):
            return False
        pos = {v: i for i, v in enumerate(self.order)}
        for v in self.order:
            later = sum(1 for w in g.adj[v] if pos[w] > pos[v])
            if later > self.r:
                return False
        return True


def _peel(g, stop_above=None):
    """Min-degree peeling, smallest id among ties.

    Returns (order, degeneracy, remaining); if stop_above is given and the
    current minimum degree exceeds it, peeling stops and `remaining` holds the
    stuck vertex set (otherwise remaining is empty)."""
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    order = []
    worst = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        if stop_above is not None and deg[v] > stop_above:
            return order, worst, frozenset(alive)
        worst = max(worst, deg[v])
        alive.remove(v)
        order.append(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
    return order, worst, frozenset()


def degeneracy(g):
    """Exact degeneracy: the largest minimum degree seen while peeling."""
    _, worst, _ = _peel(g)
    return worst


def is_r_degenerate(g, r):
    """Test r-degeneracy by peeling.

    Returns (True, DegeneracyCertificate) or (False, stuck_vertex_set) where
    the stuck set induces a subgraph of minimum degree > r."""
    if r < 0:
        raise ValueError("r must be non-negative")
    order, _, stuck = _peel(g, stop_above=r)
    if stuck:
        return False, stuck
    return True, DegeneracyCertificate(tuple(order), r)


def max_degree(g):
    return g.max_degree()


class Matching:
    """Edge subset with pairwise disjoint endpoints."""

    def __init__(self, edges):
        es = set()
        used = set()
        for u, v in edges:
            if u == v:
                raise ValueError("self-loop (%s, %s) in matching" % (u, v))
            e = _norm_edge(u, v)
            if e in es:
                continue
            if u in used or v in used:
                raise ValueError("edges share endpoint at (%s, %s)" % (u, v))
            es.add(e)
            used.add(u)
            used.add(v)
        self.edges = frozenset(es)
        self.vertices = frozenset(used)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    def __eq__(self, other):
        if isinstance(other, Matching):
            return self.edges == other.edges
        return NotImplemented

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self):
        return "Matching(%s)" % (sorted(self.edges),)


@dataclass(frozen=True)
class MatchingClass:
    is_matching: bool
    is_induced: bool
    is_acyclic: bool
    is_uniquely_restricted: bool
    degeneracy_of_induced: int
    is_r_degenerate: bool


def _is_forest(g):
    # acyclic iff every component has |V| - 1 edges
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _mate_digraph_acyclic(sub, matching_edges):
    """Cycle test on the mate digraph of a matching.

    sub is the subgraph induced by V(M) (local ids); for every non-matching
    edge xy of sub we add arcs mate(x)->y and mate(y)->x. The matching is
    uniquely restricted iff no directed cycle exists."""
    mate = {}
    for u, v in matching_edges:
        mate[u] = v
        mate[v] = u
    succ = {v: [] for v in range(sub.n)}
    for x, y in sub.edges:
        if (x, y) in matching_edges:
            continue
        succ[mate[x]].append(y)
        succ[mate[y]].append(x)
    indeg = {v: 0 for v in range(sub.n)}
    for v, outs in succ.items():
        for w in outs:
            indeg[w] += 1
    queue = [v for v in range(sub.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == sub.n


def classify_matching(g, m, r):
    """Place a matching in the induced/acyclic/uniquely-restricted hierarchy.

    Also computes the exact degeneracy of G[V(M)], so one call answers the
    r-degeneracy question for every r."""
    if r < 0:
        raise ValueError("r must be non-negative")
    for e in m.edges:
        if e not in g.edges:
            raise ValueError("matching edge %s not in graph" % (e,))
    if not m.edges:
        return MatchingClass(True, True, True, True, 0, True)
    sub, ids = induced_subgraph(g, m.vertices)
    index = {v: i for i, v in enumerate(ids)}
    local = frozenset(_norm_edge(index[u], index[v]) for u, v in m.edges)
    induced = sub.m == len(local)
    acyclic = _is_forest(sub)
    ur = _mate_digraph_acyclic(sub, local)
    deg = degeneracy(sub)
    return MatchingClass(True, induced, acyclic, ur, deg, deg <= r)
