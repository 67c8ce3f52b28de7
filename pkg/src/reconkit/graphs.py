"""Small labeled simple graphs with exact canonical forms.

Graphs live on vertices 0..n-1 (n <= 32) with the adjacency relation stored
as one bitmask row per vertex.  A Certificate is the graph6 encoding of the
lexicographically least upper-triangle bit packing over all vertex orders
that respect the refined degree partition, so certificates of two graphs are
equal exactly when the graphs are isomorphic.  That makes certificates
usable directly as multiset keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_VERTICES = 32

__all__ = [
    "MAX_VERTICES",
    "Graph",
    "GraphError",
    "Graph6Error",
    "Certificate",
    "CentroidInfo",
    "canonical_form",
    "canonical_graph",
    "certificate_graph",
    "is_isomorphic",
    "edge_degree",
    "components",
    "centroid",
    "parse_graph6",
    "write_graph6",
]


class GraphError(ValueError):
    """Malformed graph, vertex, or edge input."""


class Graph6Error(ValueError):
    """Malformed graph6 text; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _bits(mask: int):
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``rows[v]`` has bit ``u`` set iff ``u`` and ``v`` are adjacent.  Values
    are never mutated after construction, so graphs are safe to share, hash,
    and use as cache keys.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows):
        rows = tuple(rows)
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} has adjacency bits beyond vertex {n - 1}")
            if row >> v & 1:
                raise GraphError(f"vertex {v} has a loop")
            for u in _bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric between {u} and {v}")
        self.n = n
        self.rows = rows

    @staticmethod
    def _raw(n: int, rows: tuple) -> "Graph":
        # Internal fast path: caller guarantees a valid symmetric loop-free tuple.
        g = object.__new__(Graph)
        g.n = n
        g.rows = rows
        return g

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple:
        return tuple(row.bit_count() for row in self.rows)

    def edges(self) -> list:
        out = []
        for v in range(self.n):
            row = self.rows[v] >> (v + 1)
            for off in _bits(row):
                out.append((v, v + 1 + off))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> tuple:
        return tuple(_bits(self.rows[v]))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"invalid edge ({u},{v})")
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._raw(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._raw(self.n, tuple(rows))

    def add_vertex(self, neighbors=()) -> "Graph":
        """New graph with one extra vertex adjacent to ``neighbors``."""
        n = self.n
        if n + 1 > MAX_VERTICES:
            raise GraphError(f"vertex cap {MAX_VERTICES} exceeded")
        nb = 0
        for u in neighbors:
            if not 0 <= u < n:
                raise GraphError(f"neighbor {u} out of range")
            nb |= 1 << u
        rows = [self.rows[v] | ((nb >> v & 1) << n) for v in range(n)]
        rows.append(nb)
        return Graph._raw(n + 1, tuple(rows))

    def permuted(self, perm) -> "Graph":
        """Relabel vertex ``v`` as ``perm[v]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise GraphError("perm is not a permutation of the vertices")
        rows = [0] * n
        for v in range(n):
            row = 0
            for u in _bits(self.rows[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph._raw(n, tuple(rows))

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on ``vertices`` relabeled 0..k-1 in sorted order."""
        vs = sorted(vertices)
        if len(set(vs)) != len(vs) or not vs:
            raise GraphError("vertex set must be nonempty without repeats")
        if vs[0] < 0 or vs[-1] >= self.n:
            raise GraphError("vertex out of range")
        idx = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            row = 0
            for u in _bits(self.rows[v]):
                if u in idx:
                    row |= 1 << idx[u]
            rows.append(row)
        return Graph._raw(len(vs), tuple(rows))

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph({self.n}, {self.edges()})"


# ---------------------------------------------------------------------------
# graph6 text format (short form, n <= 62; one graph per line in files)
# ---------------------------------------------------------------------------

def write_graph6(g: Graph) -> str:
    """Encode the labeled graph: header byte n+63, then the upper triangle
    packed column by column in 6-bit groups, each offset by 63."""
    n = g.n
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        rowj = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (rowj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optionally prefixed with '>>graph6<<')."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    c0 = ord(s[0])
    if c0 == 126:
        raise Graph6Error("multi-byte vertex counts are not supported", 0)
    if not 63 <= c0 <= 125:
        raise Graph6Error(f"invalid header byte {c0}", 0)
    n = c0 - 63
    if n == 0:
        raise Graph6Error("graphs must have at least one vertex", 0)
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds cap {MAX_VERTICES}", 0)
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} body bytes for n={n}, got {len(body)}",
            1 + min(len(body), need),
        )
    rows = [0] * n
    i, j = 0, 1
    bitpos = 0
    for idx, ch in enumerate(body):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid body byte {c}", idx + 1)
        group = c - 63
        for shift in range(5, -1, -1):
            bit = group >> shift & 1
            if bitpos < npairs:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6Error("nonzero padding bits", idx + 1)
            bitpos += 1
    return Graph._raw(n, tuple(rows))


# ---------------------------------------------------------------------------
# Canonical form: degree-partition refinement + backtracking over
# partition-respecting orders, taking the least adjacency encoding.
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Certificate:
    """Canonical identifier of an isomorphism class.

    ``canon`` is the graph6 string of the canonically relabeled graph; two
    certificates are equal iff the underlying graphs are isomorphic, and the
    total order on certificates makes multisets and reports reproducible.
    """

    n: int
    m: int
    canon: str


def _refined_cells(g: Graph) -> list:
    """Stable color classes, ordered by an isomorphism-invariant key."""
    n, rows = g.n, g.rows
    nbrs = [tuple(_bits(rows[v])) for v in range(n)]
    degs = [rows[v].bit_count() for v in range(n)]
    rank = {d: i for i, d in enumerate(sorted(set(degs)))}
    colors = [rank[d] for d in degs]
    ncolors = len(rank)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)
        ]
        srank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [srank[s] for s in sigs]
        if len(srank) == ncolors:
            colors = new
            break
        colors, ncolors = new, len(srank)
    cells = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _min_encoding(g: Graph):
    """Least (perm, chunk) pair: chunk[k] packs vertex k's adjacency bits to
    positions 0..k-1, which is exactly the graph6 column order."""
    n, rows = g.n, g.rows
    cells = _refined_cells(g)
    cell_of_pos = []
    for ci, cell in enumerate(cells):
        cell_of_pos.extend([ci] * len(cell))

    perm = [0] * n
    cur = [0] * n
    best: list | None = None
    best_perm: list | None = None
    version = 0
    used = 0

    def dfs(pos: int):
        nonlocal best, best_perm, version, used
        if pos == n:
            if best is None or cur < best:
                best = cur.copy()
                best_perm = perm.copy()
                version += 1
            return
        # Candidates from this position's cell; interchangeable twins
        # (equal open or closed neighborhoods) are explored once.
        scored = []
        seen_open = set()
        seen_closed = set()
        for v in cells[cell_of_pos[pos]]:
            if used >> v & 1:
                continue
            row = rows[v]
            closed = row | (1 << v)
            if row in seen_open or closed in seen_closed:
                continue
            seen_open.add(row)
            seen_closed.add(closed)
            chunk = 0
            for k in range(pos):
                chunk = chunk << 1 | (row >> perm[k] & 1)
            scored.append((chunk, v))
        scored.sort()

        if best is None:
            cmp = -1
        else:
            cmp = 0
            for k in range(pos):
                if cur[k] != best[k]:
                    cmp = -1 if cur[k] < best[k] else 1
                    break
        for chunk, v in scored:
            if best is not None:
                if cmp > 0:
                    break
                if cmp == 0 and chunk > best[pos]:
                    break
            perm[pos] = v
            cur[pos] = chunk
            used |= 1 << v
            before = version
            dfs(pos + 1)
            used ^= 1 << v
            if version != before:
                cmp = 0  # new best extends our prefix

    dfs(0)
    return best_perm, best


@lru_cache(maxsize=1 << 18)
def canonical_form(g: Graph) -> Certificate:
    """Certificate of g; equal across all relabelings, distinct across
    non-isomorphic graphs."""
    perm, _ = _min_encoding(g)
    mapping = [0] * g.n
    for pos, v in enumerate(perm):
        mapping[v] = pos
    return Certificate(g.n, g.m, write_graph6(g.permuted(mapping)))


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return parse_graph6(canonical_form(g).canon)


def certificate_graph(cert: Certificate) -> Graph:
    """Rebuild the canonical representative from a certificate."""
    return parse_graph6(cert.canon)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if g.rows == h.rows:
        return True
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# Structure helpers
# ---------------------------------------------------------------------------

def edge_degree(g: Graph, e) -> int:
    """Number of edges adjacent to e = uv, i.e. deg(u) + deg(v) - 2."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u},{v}) not in graph")
    return g.degree(u) + g.degree(v) - 2


def _component_masks(g: Graph) -> list:
    masks = []
    remaining = (1 << g.n) - 1
    rows = g.rows
    while remaining:
        comp = remaining & -remaining
        while True:
            grow = comp
            for v in _bits(comp):
                grow |= rows[v]
            if grow == comp:
                break
            comp = grow
        masks.append(comp)
        remaining &= ~comp
    return masks


def components(g: Graph) -> list:
    """Connected components as induced graphs, largest certificate first."""
    comps = [g.induced(list(_bits(mask))) for mask in _component_masks(g)]
    comps.sort(key=canonical_form, reverse=True)
    return comps


def _require_tree(t: Graph):
    if t.m != t.n - 1 or len(_component_masks(t)) != 1:
        raise GraphError("not a tree")


@dataclass(frozen=True)
class CentroidInfo:
    """Per-vertex weights and the centroid of a tree.

    ``weights[v]`` is the order of a largest component of T - v; the
    centroid collects the vertices of minimum weight (one vertex, or two
    adjacent ones joined by ``centroidal_edge``).
    """

    weights: tuple
    centroid: tuple
    kind: str  # "unicentroidal" | "bicentroidal"
    centroidal_edge: tuple | None


def centroid(t: Graph) -> CentroidInfo:
    _require_tree(t)
    n = t.n
    if n == 1:
        return CentroidInfo((0,), (0,), "unicentroidal", None)
    weights = []
    for v in range(n):
        rest = t.induced([u for u in range(n) if u != v])
        weights.append(max(mask.bit_count() for mask in _component_masks(rest)))
    wt = min(weights)
    cen = tuple(v for v in range(n) if weights[v] == wt)
    if len(cen) == 1:
        return CentroidInfo(tuple(weights), cen, "unicentroidal", None)
    if len(cen) != 2 or not t.has_edge(*cen):
        raise GraphError("centroid structure violated; input is not a tree")
    return CentroidInfo(tuple(weights), cen, "bicentroidal", cen)
