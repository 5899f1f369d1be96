"""Bottom-up dynamic program for maximum r-degenerate matchings in chordal graphs.

Tables map a state (S, N) -- N inside S inside the current bag, |S| <= r+1 --
to the best matching size (or weight) achievable below the node, together with
a backpointer for witness reconstruction. Only the maximum value per state is
kept; the recursions are monotone in the value, so pruning is exact."""

from dataclasses import dataclass

from .chordal import build_nice_decomposition, mcs_order
from .graphs import Matching, _norm_edge


@dataclass(frozen=True)
class WeightedGraph:
    graph: object
    weights: dict  # edge (u, v) with u < v -> number

    def __post_init__(self):
        missing = self.graph.edges - set(self.weights)
        if missing:
            raise ValueError("missing weight for edges %s" % sorted(missing))

    def weight(self, u, v):
        return self.weights[_norm_edge(u, v)]


_EMPTY = ((), ())


def dp_leaf():
    return {_EMPTY: (0, ("leaf",))}


def _insert(table, key, value, bp):
    # strictly greater replaces; ties keep the first insertion, so callers
    # control tie-breaking by insertion order
    cur = table.get(key)
    if cur is None or value > cur[0]:
        table[key] = (value, bp)


def dp_introduce(child, x, r):
    """Introduce node for x: keep child states, and add x to any S' of size <= r."""
    table = {}
    for key in sorted(child):
        _insert(table, key, child[key][0], ("intro-keep", key))
    for key in sorted(child):
        s, n = key
        if x in s or len(s) > r:
            continue
        new_key = (tuple(sorted(s + (x,))), n)
        _insert(table, new_key, child[key][0], ("intro-add", key))
    return table


def dp_forget(child, x, g, r, weights=None):
    """Forget node for x, three case families.

    Case 1 keeps states avoiding x; case 3 drops an already matched x; case 2
    matches x to some other bag vertex y in S' (the bag is a clique, so xy is
    an edge) adding 1 or weight(xy). Reconstruction ties prefer case 1, then
    case 3, then case 2 with smallest y."""
    table = {}
    for key in sorted(child):
        s, n = key
        if x not in s:
            _insert(table, key, child[key][0], ("forget-keep", key))
    for key in sorted(child):
        s, n = key
        if x in n:
            new_key = (tuple(v for v in s if v != x), tuple(v for v in n if v != x))
            _insert(table, new_key, child[key][0], ("forget-drop", key))
    for key in sorted(child):
        s, n = key
        if x not in s or x in n:
            continue
        s_minus = tuple(v for v in s if v != x)
        for y in s_minus:
            if y in n:
                continue
            gain = 1 if weights is None else weights.weight(x, y)
            new_key = (s_minus, tuple(sorted(n + (y,))))
            _insert(table, new_key, child[key][0] + gain,
                    ("forget-match", key, _norm_edge(x, y)))
    return table


def dp_join(left, right):
    """Join node: combine same-S states with disjoint matched sets."""
    by_s = {}
    for key in sorted(right):
        by_s.setdefault(key[0], []).append(key)
    table = {}
    for lkey in sorted(left):
        s, ln = lkey
        for rkey in by_s.get(s, ()):
            rn = rkey[1]
            if set(ln) & set(rn):
                continue
            new_key = (s, tuple(sorted(ln + rn)))
            _insert(table, new_key, left[lkey][0] + right[rkey][0],
                    ("join", lkey, rkey))
    return table


def run_tables(g, decomp, r, weights=None):
    """Compute the table at every decomposition node, bottom-up."""
    tables = {}
    for t in decomp.post_order():
        nd = decomp.nodes[t]
        if nd.kind == "leaf":
            tables[t] = dp_leaf()
        elif nd.kind == "introduce":
            tables[t] = dp_introduce(tables[nd.children[0]], nd.vertex, r)
        elif nd.kind == "forget":
            tables[t] = dp_forget(tables[nd.children[0]], nd.vertex, g, r, weights)
        elif nd.kind == "join":
            tables[t] = dp_join(tables[nd.children[0]], tables[nd.children[1]])
        else:
            raise ValueError("unknown node kind %r" % nd.kind)
    return tables


def _reconstruct(decomp, tables, root):
    pairs = []
    stack = [(root, _EMPTY)]
    while stack:
        t, key = stack.pop()
        _, bp = tables[t][key]
        nd = decomp.nodes[t]
        tag = bp[0]
        if tag == "leaf":
            continue
        if tag == "forget-match":
            pairs.append(bp[2])
            stack.append((nd.children[0], bp[1]))
        elif tag == "join":
            stack.append((nd.children[0], bp[1]))
            stack.append((nd.children[1], bp[2]))
        else:
            stack.append((nd.children[0], bp[1]))
    return Matching(pairs)


@dataclass(frozen=True)
class DPResult:
    value: object
    matching: Matching
    nodes: int
    max_table: int


def solve(g, r, weights=None):
    """Full pipeline: recognize, decompose, run the DP, reconstruct a witness.

    Raises NotChordalError on non-chordal input and ValueError for r < 1."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    peo = mcs_order(g)
    decomp = build_nice_decomposition(g, peo)
    tables = run_tables(g, decomp, r, weights)
    root_table = tables[decomp.root]
    value = root_table[_EMPTY][0]
    matching = _reconstruct(decomp, tables, decomp.root)
    return DPResult(value, matching, len(decomp.nodes),
                    max(len(t) for t in tables.values()))


def nu_r(g, r):
    """Maximum size of an r-degenerate matching of a chordal graph, with witness."""
    res = solve(g, r)
    return res.value, res.matching


def nu_r_weighted(wg, r):
    """Maximum weight of an r-degenerate matching; unit weights reduce to nu_r."""
    res = solve(wg.graph, r, weights=wg)
    return res.value, res.matching
