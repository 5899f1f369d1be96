"""Shared corpus helpers for the test suite."""

from itertools import combinations

from degenmatch import Graph, Matching
from degenmatch.generate import Rng, random_bounded_degree


def gnp(n, p, seed):
    """Erdos-Renyi-style graph from the package RNG (degree cap disabled)."""
    return random_bounded_degree(n, p, max_degree=max(n, 1), seed=seed)


def random_matching(g, rng):
    """Greedy random matching: shuffle edges, take what fits."""
    edges = g.sorted_edges()
    rng.shuffle(edges)
    used = set()
    chosen = []
    for u, v in edges:
        if u not in used and v not in used:
            chosen.append((u, v))
            used.update((u, v))
    k = rng.randbelow(len(chosen) + 1)
    return Matching(chosen[:k])


def all_matchings(g):
    """Every matching of g, the empty one included."""
    edges = g.sorted_edges()
    out = []

    def rec(i, used, chosen):
        out.append(list(chosen))
        for j in range(i, len(edges)):
            u, v = edges[j]
            if u in used or v in used:
                continue
            chosen.append((u, v))
            rec(j + 1, used | {u, v}, chosen)
            chosen.pop()

    rec(0, set(), [])
    return out


def is_induced_cycle(g, vs):
    vs = list(vs)
    inside = set(vs)
    degs = [sum(1 for w in g.adj[v] if w in inside) for v in vs]
    if any(d != 2 for d in degs):
        return False
    # connected 2-regular subgraph on >= 3 vertices is a cycle
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        x = stack.pop()
        for w in g.adj[x]:
            if w in inside and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def has_chordless_cycle(g):
    """Brute search for an induced cycle of length >= 4."""
    for size in range(4, g.n + 1):
        for vs in combinations(range(g.n), size):
            if is_induced_cycle(g, vs):
                return True
    return False
