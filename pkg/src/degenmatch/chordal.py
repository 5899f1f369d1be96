"""Chordality recognition and nice clique-tree decompositions."""

import json
from dataclasses import dataclass, field


class NotChordalError(Exception):
    """Raised when an input graph contains a chordless cycle of length >= 4."""


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple


def is_perfect_elimination(g, order):
    """Lex check of the perfect-elimination property (Rose-Tarjan-Lueker).

    For each vertex v, the later neighbors of v minus the earliest of them
    must all be adjacent to that earliest later neighbor."""
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    adj = [set(g.adj[v]) for v in range(g.n)]
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=lambda w: pos[w])
        for w in later:
            if w != u and w not in adj[u]:
                return False
    return True


def mcs_order(g):
    """Maximum cardinality search, reversed into an elimination order.

    Tie-break: highest weight, then smallest vertex id. Raises NotChordalError
    when the resulting order fails the perfect-elimination check."""
    weight = [0] * g.n
    visited = [False] * g.n
    visit = []
    for _ in range(g.n):
        v = max((v for v in range(g.n) if not visited[v]),
                key=lambda v: (weight[v], -v))
        visited[v] = True
        visit.append(v)
        for w in g.adj[v]:
            if not visited[w]:
                weight[w] += 1
    order = tuple(reversed(visit))
    if not is_perfect_elimination(g, order):
        raise NotChordalError("graph is not chordal")
    return EliminationOrder(order)


def is_chordal(g):
    try:
        mcs_order(g)
        return True
    except NotChordalError:
        return False


@dataclass
class DecompNode:
    kind: str  # "leaf" | "introduce" | "forget" | "join"
    bag: tuple
    children: tuple = ()
    vertex: int = None


@dataclass
class NiceTreeDecomposition:
    """Rooted binary tree of clique bags with empty root and leaf bags."""

    nodes: list = field(default_factory=list)
    root: int = 0

    def max_bag_size(self):
        return max((len(nd.bag) for nd in self.nodes), default=0)

    def post_order(self):
        out = []
        stack = [(self.root, False)]
        while stack:
            t, done = stack.pop()
            if done:
                out.append(t)
                continue
            stack.append((t, True))
            for c in self.nodes[t].children:
                stack.append((c, False))
        return out

    def subtree_vertices(self, t):
        """Union of the bags at t and all its descendants."""
        seen = set()
        stack = [t]
        while stack:
            s = stack.pop()
            seen.update(self.nodes[s].bag)
            stack.extend(self.nodes[s].children)
        return frozenset(seen)

    def to_json(self):
        payload = {
            "root": self.root,
            "nodes": [
                {
                    "id": i,
                    "kind": nd.kind,
                    "bag": list(nd.bag),
                    "children": list(nd.children),
                    "vertex": nd.vertex,
                }
                for i, nd in enumerate(self.nodes)
            ],
        }
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text):
        payload = json.loads(text)
        nodes = [None] * len(payload["nodes"])
        for rec in payload["nodes"]:
            nodes[rec["id"]] = DecompNode(rec["kind"], tuple(rec["bag"]),
                                          tuple(rec["children"]), rec["vertex"])
        return cls(nodes, payload["root"])


class _Builder:
    def __init__(self):
        self.nodes = []

    def add(self, kind, bag, children=(), vertex=None):
        self.nodes.append(DecompNode(kind, tuple(bag), tuple(children), vertex))
        return len(self.nodes) - 1

    def chain(self, below, from_bag, to_bag):
        """Forget/introduce chain turning from_bag into to_bag, bottom-up.

        Forgets come before introduces, each in ascending vertex id."""
        cur = below
        bag = set(from_bag)
        for v in sorted(set(from_bag) - set(to_bag)):
            bag.remove(v)
            cur = self.add("forget", sorted(bag), (cur,), v)
        for v in sorted(set(to_bag) - set(from_bag)):
            bag.add(v)
            cur = self.add("introduce", sorted(bag), (cur,), v)
        return cur


def build_nice_decomposition(g, peo):
    """Nice decomposition from a perfect elimination order.

    Per-vertex bags {v} + later-neighbors parented at the bag of v's earliest
    later neighbor, then normalized: left-deep join binarization, canonical
    forget-before-introduce chains, empty root and leaves. Disconnected graphs
    get one subtree per component joined under the empty root."""
    order = tuple(peo.order)
    if not is_perfect_elimination(g, order):
        raise ValueError("invalid perfect elimination order")
    pos = {v: i for i, v in enumerate(order)}
    bags = {}
    parent = {}
    children = {v: [] for v in range(g.n)}
    roots = []
    for v in range(g.n):
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        bags[v] = tuple(sorted([v] + later))
        if later:
            u = min(later, key=lambda w: pos[w])
            parent[v] = u
            children[u].append(v)
        else:
            roots.append(v)

    b = _Builder()
    top = {}
    for v in order:
        subtrees = [b.chain(top[c], bags[c], bags[v]) for c in sorted(children[v])]
        if not subtrees:
            leaf = b.add("leaf", ())
            cur = b.chain(leaf, (), bags[v])
        else:
            cur = subtrees[0]
            for s in subtrees[1:]:
                cur = b.add("join", bags[v], (cur, s))
        top[v] = cur

    comp_tops = [b.chain(top[v], bags[v], ()) for v in sorted(roots)]
    if not comp_tops:
        root = b.add("leaf", ())
    else:
        root = comp_tops[0]
        for s in comp_tops[1:]:
            root = b.add("join", (), (root, s))
    return NiceTreeDecomposition(b.nodes, root)


def validate_decomposition(g, d):
    """Check every nice-decomposition invariant; returns (ok, report).

    report names the first violated axiom, None when everything holds."""
    n_nodes = len(d.nodes)
    if not 0 <= d.root < n_nodes:
        return False, "tree-structure: root out of range"
    parent = [None] * n_nodes
    seen = [False] * n_nodes
    stack = [d.root]
    seen[d.root] = True
    while stack:
        t = stack.pop()
        for c in d.nodes[t].children:
            if not 0 <= c < n_nodes or seen[c]:
                return False, "tree-structure: not a tree"
            seen[c] = True
            parent[c] = t
            stack.append(c)
    if not all(seen):
        return False, "tree-structure: unreachable nodes"

    for t, nd in enumerate(d.nodes):
        if len(nd.children) > 2:
            return False, "binary: node %d has %d children" % (t, len(nd.children))
        bag = set(nd.bag)
        if len(bag) != len(nd.bag):
            return False, "bag: duplicate vertices at node %d" % t
        if any(not 0 <= v < g.n for v in bag):
            return False, "bag: unknown vertex at node %d" % t
        if nd.kind == "leaf":
            if nd.children or nd.bag:
                return False, "leaf-shape: node %d" % t
        elif nd.kind == "join":
            if len(nd.children) != 2:
                return False, "join-shape: node %d" % t
            for c in nd.children:
                if set(d.nodes[c].bag) != bag:
                    return False, "join-shape: bag mismatch at node %d" % t
        elif nd.kind == "introduce":
            if len(nd.children) != 1:
                return False, "introduce-shape: node %d" % t
            child = set(d.nodes[nd.children[0]].bag)
            if nd.vertex is None or bag != child | {nd.vertex} or nd.vertex in child:
                return False, "introduce-shape: node %d" % t
        elif nd.kind == "forget":
            if len(nd.children) != 1:
                return False, "forget-shape: node %d" % t
            child = set(d.nodes[nd.children[0]].bag)
            if nd.vertex is None or child != bag | {nd.vertex} or nd.vertex in bag:
                return False, "forget-shape: node %d" % t
        else:
            return False, "kind: unknown kind %r at node %d" % (nd.kind, t)

    if d.nodes[d.root].bag:
        return False, "root-empty"

    covered = set()
    for nd in d.nodes:
        covered.update(nd.bag)
    if covered != set(range(g.n)):
        return False, "vertex-coverage"

    for u, v in g.edges:
        if not any(u in nd.bag and v in nd.bag
                   for nd in d.nodes if u in nd.bag):
            return False, "edge-coverage: edge (%d, %d) in no bag" % (u, v)

    # connected subtree per vertex: exactly one containing node whose parent
    # does not contain it
    for v in range(g.n):
        holders = [t for t, nd in enumerate(d.nodes) if v in nd.bag]
        tops = [t for t in holders
                if parent[t] is None or v not in d.nodes[parent[t]].bag]
        if len(tops) != 1:
            return False, "connectivity: vertex %d" % v

    adj = [set(g.adj[v]) for v in range(g.n)]
    for t, nd in enumerate(d.nodes):
        bag = nd.bag
        for i in range(len(bag)):
            for j in range(i + 1, len(bag)):
                if bag[j] not in adj[bag[i]]:
                    return False, "clique-bag: node %d" % t

    forgets = {}
    for nd in d.nodes:
        if nd.kind == "forget":
            forgets[nd.vertex] = forgets.get(nd.vertex, 0) + 1
    if g.n and any(forgets.get(v, 0) != 1 for v in range(g.n)):
        return False, "forget-uniqueness"

    bound = 6 * max(g.n, 1) * max(d.max_bag_size(), 1) + 3
    if n_nodes > bound:
        return False, "size-bound: %d nodes > %d" % (n_nodes, bound)
    return True, None
