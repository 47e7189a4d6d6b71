"""Simple undirected graphs as per-vertex bit masks.

Vertices are 0-based integers below the order ``n``; adjacency is a tuple of
``n`` bit masks, so the whole graph fits in a handful of machine words for
orders up to 62 (the largest order a single-byte graph6 header can carry).
The module covers parsing/serialization (graph6 and plain edge lists), the
named graph families used throughout the package, structural predicates
(connectivity, cut vertices, vertex cuts), and an exact canonical form for
isomorphism-class deduplication of small graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

MAX_ORDER = 62

CANONICAL_MAX_ORDER = 10


class Graph6ParseError(ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class EdgeListParseError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` holds the neighbor set of ``v`` as a bit mask.  Construction
    validates symmetry, the absence of loops, and that every set bit names a
    vertex, so downstream code can rely on those invariants.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"graph order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbor bit outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise ValueError(f"vertex {v} has a loop")
        for v, mask in enumerate(self.adj):
            w = mask
            while w:
                u = (w & -w).bit_length() - 1
                w &= w - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(mask.bit_count() for mask in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.adj)

    def edges(self):
        """Yield edges as (u, v) pairs with u < v."""
        for v in range(self.n):
            w = self.adj[v] >> (v + 1) << (v + 1)
            while w:
                u = (w & -w).bit_length() - 1
                w &= w - 1
                yield (v, u)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)


def graph_from_edges(n: int, edges) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def relabel(g: Graph, perm) -> Graph:
    """Relabel vertices; ``perm[v]`` is the new label of old vertex ``v``."""
    adj = [0] * g.n
    for v in range(g.n):
        mask = g.adj[v]
        new = 0
        while mask:
            u = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            new |= 1 << perm[u]
        adj[perm[v]] = new
    return Graph(g.n, tuple(adj))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    n = a.n + b.n
    if n > MAX_ORDER:
        raise ValueError(f"union order {n} exceeds {MAX_ORDER}")
    adj = list(a.adj) + [mask << a.n for mask in b.adj]
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# graph6 interchange format (single size byte, order <= 62)

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.

    The optional ``>>graph6<<`` header is tolerated.  Upper-triangle bits are
    packed column-major (x01, x02, x12, x03, ...), six per character, each
    character value being the byte minus 63.  Extended size encodings (order
    above 62) are rejected.
    """
    line = text.rstrip("\r\n")
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise Graph6ParseError("empty graph6 string")
    first = ord(line[0])
    if first == 126:
        raise Graph6ParseError("extended size encoding (order > 62) unsupported", 0)
    if not 63 <= first <= 63 + MAX_ORDER:
        raise Graph6ParseError(f"size byte {first} outside [63,125]", 0)
    n = first - 63
    if n == 0:
        raise Graph6ParseError("graph of order 0 unsupported", 0)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(line) - 1 < nchars:
        raise Graph6ParseError(
            f"need {nchars} data characters for order {n}, got {len(line) - 1}")
    if len(line) - 1 > nchars:
        raise Graph6ParseError("trailing garbage after graph6 data", 1 + nchars)
    adj = [0] * n
    bit_index = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for pos, ch in enumerate(line[1:], start=1):
        byte = ord(ch)
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"data byte {byte} outside [63,126]", pos)
        value = byte - 63
        for k in range(5, -1, -1):
            bit = value >> k & 1
            if bit_index < nbits:
                if bit:
                    i, j = pairs[bit_index]
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            elif bit:
                raise Graph6ParseError("nonzero padding bit", pos)
            bit_index += 1
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (no header), the exact inverse of
    :func:`parse_graph6`."""
    chars = [chr(g.n + 63)]
    value = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            value = value << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(value + 63))
                value = 0
                nbits = 0
    if nbits:
        chars.append(chr((value << (6 - nbits)) + 63))
    return "".join(chars)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n u1 v1 u2 v2 ...`` with 0-based endpoints; duplicate edges are
    ignored."""
    tokens = text.split()
    if not tokens:
        raise EdgeListParseError("empty edge list")
    try:
        n = int(tokens[0])
    except ValueError:
        raise EdgeListParseError(f"order token {tokens[0]!r} is not an integer") from None
    if not 1 <= n <= MAX_ORDER:
        raise EdgeListParseError(f"order must be in 1..{MAX_ORDER}, got {n}")
    rest = tokens[1:]
    if len(rest) % 2:
        raise EdgeListParseError("odd number of endpoint tokens")
    adj = [0] * n
    for a, b in zip(rest[::2], rest[1::2]):
        try:
            u, v = int(a), int(b)
        except ValueError:
            raise EdgeListParseError(f"non-integer endpoint in pair {a!r} {b!r}") from None
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"edge {u} {v} out of range for order {n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# named families

FAMILY_KINDS = (
    "complete",
    "empty",
    "path",
    "cycle",
    "star",
    "complete-bipartite",
    "bonded-complete-leaf",
    "disjoint-union",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance.

    ``params`` are the integer parameters of the kind; ``parts`` carries the
    two sub-specs of a disjoint-union.
    """

    kind: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = ()

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "disjoint-union":
            if len(self.parts) != 2 or self.params:
                raise ValueError("disjoint-union takes exactly two sub-specs")
        else:
            if self.parts:
                raise ValueError(f"{self.kind} takes no sub-specs")
            want = 2 if self.kind == "complete-bipartite" else 1
            if len(self.params) != want:
                raise ValueError(f"{self.kind} takes {want} parameter(s)")
            if any(p <= 0 for p in self.params):
                raise ValueError(f"{self.kind} parameters must be positive")
            if self.kind == "cycle" and self.params[0] < 3:
                raise ValueError("cycle needs order >= 3")
            if self.kind == "bonded-complete-leaf" and self.params[0] < 2:
                raise ValueError("bonded-complete-leaf needs order >= 2")
        if self.order > MAX_ORDER:
            raise ValueError(f"family order {self.order} exceeds {MAX_ORDER}")

    @property
    def order(self) -> int:
        if self.kind == "disjoint-union":
            return sum(part.order for part in self.parts)
        if self.kind == "complete-bipartite":
            return self.params[0] + self.params[1]
        return self.params[0]

    def label(self) -> str:
        if self.kind == "disjoint-union":
            return f"union({self.parts[0].label()},{self.parts[1].label()})"
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"


def make_family(spec: FamilySpec) -> Graph:
    """Construct the named graph.

    ``bonded-complete-leaf(n)`` is the complete graph on ``n-1`` vertices with
    one pendant vertex attached to vertex 0 (order ``n``).
    """
    kind, params = spec.kind, spec.params
    if kind == "complete":
        n = params[0]
        return graph_from_edges(n, combinations(range(n), 2))
    if kind == "empty":
        return Graph(params[0], (0,) * params[0])
    if kind == "path":
        n = params[0]
        return graph_from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        n = params[0]
        return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "star":
        n = params[0]
        return graph_from_edges(n, ((0, i) for i in range(1, n)))
    if kind == "complete-bipartite":
        a, b = params
        return graph_from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))
    if kind == "bonded-complete-leaf":
        n = params[0]
        edges = list(combinations(range(n - 1), 2))
        edges.append((0, n - 1))
        return graph_from_edges(n, edges)
    if kind == "disjoint-union":
        return disjoint_union(make_family(spec.parts[0]), make_family(spec.parts[1]))
    raise ValueError(f"unknown family kind {kind!r}")


# ---------------------------------------------------------------------------
# structural predicates

def _component_mask(adj, start_bit, within):
    reached = start_bit
    frontier = start_bit
    while frontier:
        grown = 0
        w = frontier
        while w:
            v = (w & -w).bit_length() - 1
            w &= w - 1
            grown |= adj[v]
        frontier = grown & within & ~reached
        reached |= frontier
    return reached


def mask_is_connected(adj, mask) -> bool:
    """Whether the subgraph induced by the vertex set ``mask`` is connected
    (empty sets count as disconnected)."""
    if mask == 0:
        return False
    start = mask & -mask
    return _component_mask(adj, start, mask) == mask


def is_connected(g: Graph) -> bool:
    return mask_is_connected(g.adj, (1 << g.n) - 1)


def component_count(g: Graph, removed: int = 0) -> int:
    remaining = ((1 << g.n) - 1) & ~removed
    count = 0
    while remaining:
        start = remaining & -remaining
        remaining &= ~_component_mask(g.adj, start, remaining)
        count += 1
    return count


def cut_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices whose removal increases the number of connected components."""
    base = component_count(g)
    out = []
    for v in range(g.n):
        if g.n == 1:
            break
        if component_count(g, removed=1 << v) > base:
            out.append(v)
    return tuple(out)


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def min_vertex_cut(g: Graph) -> int | None:
    """Size of a smallest vertex set whose removal leaves a disconnected graph
    on at least two vertices, or None when no such set exists (complete
    graphs).

    Brute force over subsets in increasing size; exponential in the cut size,
    fine for the small orders this package analyzes.
    """
    if is_complete(g):
        return None
    if not is_connected(g):
        return 0
    for size in range(1, g.n - 1):
        for subset in combinations(range(g.n), size):
            removed = 0
            for v in subset:
                removed |= 1 << v
            remaining = ((1 << g.n) - 1) & ~removed
            if remaining and remaining.bit_count() >= 2:
                if not mask_is_connected(g.adj, remaining):
                    return size
    return None


@dataclass(frozen=True)
class StructuralStats:
    m: int
    max_degree: int
    triangles: int
    cut_vertex_count: int
    min_cut_size: int | None
    leaves: int
    leaves_on_degree_two: int
    degree_sequence: tuple[int, ...]


def triangle_count(g: Graph) -> int:
    total = 0
    for u, v in g.edges():
        total += (g.adj[u] & g.adj[v]).bit_count()
    return total // 3


def structural_stats(g: Graph, with_min_cut: bool = True) -> StructuralStats:
    """Edge count, maximum degree, triangle count, cut vertices, minimum
    vertex cut, leaf counts, and the sorted degree sequence.

    ``with_min_cut=False`` skips the exponential minimum-cut search (useful
    for large dense graphs).
    """
    degs = g.degrees()
    leaves = [v for v in range(g.n) if degs[v] == 1]
    s = sum(
        1 for v in leaves
        if degs[(g.adj[v] & -g.adj[v]).bit_length() - 1] == 2
    )
    return StructuralStats(
        m=g.m,
        max_degree=max(degs),
        triangles=triangle_count(g),
        cut_vertex_count=len(cut_vertices(g)),
        min_cut_size=min_vertex_cut(g) if with_min_cut else None,
        leaves=len(leaves),
        leaves_on_degree_two=s,
        degree_sequence=tuple(sorted(degs, reverse=True)),
    )


# ---------------------------------------------------------------------------
# canonical form (exact minimum over vertex orderings)

def _twin_classes(adj, n):
    # u,v are twins when swapping them is an automorphism; twin classes let
    # the canonical search try a single representative per class.
    cls = list(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if cls[v] != v:
                continue
            clear = ~((1 << u) | (1 << v))
            if adj[u] & clear == adj[v] & clear:
                cls[v] = cls[u]
    return cls


def _canonical_order(g: Graph) -> tuple[list[int], list[int]]:
    """Vertex ordering minimizing the column-major upper-triangle bit string.

    Returns (ordering, column values); ``ordering[j]`` is the original vertex
    placed at position ``j``.  Exhaustive over orderings, with prefix pruning
    against the best string found and one-representative-per-twin-class
    branching, so highly symmetric graphs stay cheap.
    """
    n, adj = g.n, g.adj
    twins = _twin_classes(adj, n)
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None

    def rec(placed, cols, placed_mask, cand_cols):
        nonlocal best_cols, best_perm
        j = len(placed)
        if j == n:
            if best_cols is None or cols < best_cols:
                best_cols = list(cols)
                best_perm = list(placed)
            return
        options = []
        seen = set()
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            t = twins[v]
            if t in seen:
                continue
            seen.add(t)
            options.append((cand_cols[v], v))
        options.sort()
        for col, v in options:
            if best_cols is not None:
                prefix = cols + [col] if j else cols
                if j and prefix > best_cols[: j]:
                    break  # options ascend, the rest only get larger
            new_cand = [
                (cand_cols[u] << 1) | (adj[v] >> u & 1) for u in range(n)
            ]
            placed.append(v)
            if j:
                cols.append(col)
            rec(placed, cols, placed_mask | (1 << v), new_cand)
            placed.pop()
            if j:
                cols.pop()

    rec([], [], 0, [0] * n)
    assert best_perm is not None
    return best_perm, best_cols


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class (order <= 10)."""
    if g.n > CANONICAL_MAX_ORDER:
        raise ValueError(f"canonical form unsupported beyond order {CANONICAL_MAX_ORDER}")
    if g.n == 1:
        return g
    order, _ = _canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return relabel(g, perm)


def canonical_key(g: Graph) -> bytes:
    """Order byte plus the minimal upper-triangle bit string, packed; equal
    keys hold exactly for isomorphic graphs (order <= 10)."""
    if g.n > CANONICAL_MAX_ORDER:
        raise ValueError(f"canonical form unsupported beyond order {CANONICAL_MAX_ORDER}")
    if g.n == 1:
        return bytes([1])
    _, cols = _canonical_order(g)
    bits = 0
    width = 0
    for j, col in enumerate(cols, start=1):
        bits = bits << j | col
        width += j
    return bytes([g.n]) + bits.to_bytes((width + 7) // 8, "big")
