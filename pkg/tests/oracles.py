"""Independent brute-force oracles used to derive expected test values.

Nothing here touches the package's canonical labeling: isomorphism is
decided by trying every vertex permutation, and free trees are counted by
decoding every Prufer sequence and hashing an AHU-style rooted code at the
tree's center.
"""

from __future__ import annotations

import heapq
from itertools import combinations, permutations, product

from reconkit import Graph


def exhaustive_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    target = set(h.edges())
    gedges = g.edges()
    for perm in permutations(range(g.n)):
        ok = True
        for u, v in gedges:
            a, b = perm[u], perm[v]
            if (a, b) not in target and (b, a) not in target:
                ok = False
                break
        if ok:
            return True
    return False


def labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        yield Graph.from_edges(n, edges)


def iso_classes_by_permutation(graphs) -> int:
    """Number of isomorphism classes, grouping with the permutation oracle."""
    reps: list = []
    for g in graphs:
        if not any(exhaustive_isomorphic(g, r) for r in reps):
            reps.append(g)
    return len(reps)


def prufer_edges(seq, n: int) -> list:
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def ahu_code(n: int, edges) -> str:
    """Canonical string of a free tree: AHU rooted code at the center."""
    if n == 1:
        return "()"
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            deg[v] = 0
            for u in adj[v]:
                if deg[u] > 1:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        remaining -= len(layer)
        layer = nxt

    def code(v, parent):
        subs = sorted(code(u, v) for u in adj[v] if u != parent)
        return "(" + "".join(subs) + ")"

    if len(layer) == 1:
        return code(layer[0], -1)
    a, b = layer
    return "".join(sorted([code(a, b), code(b, a)]))


def prufer_tree_class_count(n: int) -> int:
    """Free trees on n vertices, counted over all labeled trees."""
    if n == 1:
        return 1
    if n == 2:
        return 1
    codes = set()
    for seq in product(range(n), repeat=n - 2):
        codes.add(ahu_code(n, prufer_edges(seq, n)))
    return len(codes)
