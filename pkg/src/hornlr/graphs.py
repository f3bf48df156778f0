"""Bipartite graphs, line graphs, and exact integer spectra.

Graphs here are simple and finite. A :class:`BipartiteGraph` keeps its
two colour classes explicit; a :class:`Graph` is a plain undirected
graph used for line graphs and their spectra. Characteristic polynomials
are computed exactly (integer arithmetic throughout), so "this graph is
integral" is a proof, not a float heuristic: the polynomial either
splits over the integers or it does not.

Vertex order of a line graph is the lexicographic order of the base
graph's edges by (x-index, y-index); every operation that returns
edge-indexed data uses that same ordering.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from . import _kernels
from .errors import FormatError, InputError
from .partitions import Partition


class Graph:
    """Immutable simple undirected graph on vertices 0..order-1."""

    __slots__ = ("_adj",)

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 1:
            raise InputError(f"graph order must be positive, got {order}")
        adj: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise InputError(f"edge ({u},{v}) out of range for order {order}")
            if u == v:
                raise InputError(f"loops are not allowed: ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(tuple(sorted(s)) for s in adj)

    @property
    def order(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._adj]

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in self._adj[u] if u < v]

    def adjacency_rows(self) -> list[list[int]]:
        rows = [[0] * self.order for _ in range(self.order)]
        for u, nb in enumerate(self._adj):
            for v in nb:
                rows[u][v] = 1
        return rows

    def regular_degree(self) -> Optional[int]:
        """Common degree if the graph is regular, else None."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()!r})"


class BipartiteGraph:
    """Simple bipartite graph with colour classes X (size m) and Y (size n).

    Edges are pairs (x-index, y-index), 0-based. Connectivity is not a
    type invariant; operations that need it check and say so.
    """

    __slots__ = ("_m", "_n", "_edges")

    def __init__(self, x_size: int, y_size: int, edges: Iterable[tuple[int, int]] = ()):
        if x_size < 1 or y_size < 1:
            raise InputError(
                f"colour classes must be non-empty, got sizes ({x_size},{y_size})"
            )
        edge_set = set()
        for x, y in edges:
            if not (0 <= x < x_size and 0 <= y < y_size):
                raise InputError(
                    f"edge ({x},{y}) out of range for classes ({x_size},{y_size})"
                )
            edge_set.add((int(x), int(y)))
        self._m = x_size
        self._n = y_size
        self._edges = tuple(sorted(edge_set))

    @property
    def x_size(self) -> int:
        return self._m

    @property
    def y_size(self) -> int:
        return self._n

    @property
    def order(self) -> int:
        return self._m + self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        """Edges in the canonical lexicographic (x, y) order."""
        return self._edges

    def x_degrees(self) -> list[int]:
        degs = [0] * self._m
        for x, _ in self._edges:
            degs[x] += 1
        return degs

    def y_degrees(self) -> list[int]:
        degs = [0] * self._n
        for _, y in self._edges:
            degs[y] += 1
        return degs

    def is_connected(self) -> bool:
        """BFS across both classes; order >= 2 always, so edgeless
        bipartite graphs are never connected."""
        if not self._edges:
            return False
        adj_x: list[list[int]] = [[] for _ in range(self._m)]
        adj_y: list[list[int]] = [[] for _ in range(self._n)]
        for x, y in self._edges:
            adj_x[x].append(y)
            adj_y[y].append(x)
        seen_x, seen_y = {self._edges[0][0]}, set()
        stack: list[tuple[str, int]] = [("x", self._edges[0][0])]
        while stack:
            side, v = stack.pop()
            if side == "x":
                for y in adj_x[v]:
                    if y not in seen_y:
                        seen_y.add(y)
                        stack.append(("y", y))
            else:
                for x in adj_y[v]:
                    if x not in seen_x:
                        seen_x.add(x)
                        stack.append(("x", x))
        return len(seen_x) == self._m and len(seen_y) == self._n

    def regular_degree(self) -> Optional[int]:
        """Common degree when every vertex in both classes shares it."""
        degs = set(self.x_degrees()) | set(self.y_degrees())
        return degs.pop() if len(degs) == 1 else None

    def as_graph(self) -> Graph:
        """The same graph with X vertices 0..m-1 followed by Y vertices."""
        return Graph(
            self.order, [(x, self._m + y) for x, y in self._edges]
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BipartiteGraph)
            and (self._m, self._n, self._edges) == (other._m, other._n, other._edges)
        )

    def __hash__(self) -> int:
        return hash((self._m, self._n, self._edges))

    def __repr__(self) -> str:
        return (
            f"BipartiteGraph({self._m}, {self._n}, edges={list(self._edges)!r})"
        )


# ---------------------------------------------------------------------------
# constructions


def line_graph(bg: BipartiteGraph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph of a bipartite graph plus the edge ordering used.

    Vertices of the result are the edges of `bg` in lexicographic order;
    two are adjacent when the edges share an endpoint.
    """
    edges = bg.sorted_edges
    if not edges:
        raise InputError("line graph of an edgeless graph is undefined")
    e = len(edges)
    lg_edges = [
        (a, b)
        for a in range(e)
        for b in range(a + 1, e)
        if edges[a][0] == edges[b][0] or edges[a][1] == edges[b][1]
    ]
    return Graph(e, lg_edges), edges


def star_decomposition(bg: BipartiteGraph) -> tuple[Graph, Graph]:
    """Split the line graph's adjacency by which endpoint is shared.

    Returns (G_X, G_Y) on the edge set of `bg` (same ordering as
    line_graph): G_X joins edges meeting in X, G_Y those meeting in Y.
    Their adjacency matrices sum to the line graph's, entrywise; G_X is
    a disjoint union of cliques, one per X vertex, and likewise G_Y.
    """
    edges = bg.sorted_edges
    if not edges:
        raise InputError("star decomposition of an edgeless graph is undefined")
    e = len(edges)
    gx = [
        (a, b)
        for a in range(e)
        for b in range(a + 1, e)
        if edges[a][0] == edges[b][0]
    ]
    gy = [
        (a, b)
        for a in range(e)
        for b in range(a + 1, e)
        if edges[a][1] == edges[b][1]
    ]
    return Graph(e, gx), Graph(e, gy)


def degree_partitions(bg: BipartiteGraph) -> tuple[Partition, Partition]:
    """Weakly decreasing degree sequences of the two colour classes.

    Both partitions have full class length, so every vertex must have
    degree >= 1; the error names the first isolated vertex found.
    """
    xd = bg.x_degrees()
    yd = bg.y_degrees()
    for i, d in enumerate(xd):
        if d == 0:
            raise InputError(f"isolated vertex x{i}: degree partitions need min degree 1")
    for j, d in enumerate(yd):
        if d == 0:
            raise InputError(f"isolated vertex y{j}: degree partitions need min degree 1")
    return Partition(xd), Partition(yd)


def bipartite_complement(bg: BipartiteGraph) -> BipartiteGraph:
    """Same colour classes, edge (x, y) present exactly where absent."""
    present = set(bg.sorted_edges)
    edges = [
        (x, y)
        for x in range(bg.x_size)
        for y in range(bg.y_size)
        if (x, y) not in present
    ]
    return BipartiteGraph(bg.x_size, bg.y_size, edges)


def complete_bipartite(s: int, t: int) -> BipartiteGraph:
    return BipartiteGraph(s, t, [(i, j) for i in range(s) for j in range(t)])


def even_cycle(length: int) -> BipartiteGraph:
    """C_length as a bipartite graph; length must be even and >= 4."""
    if length < 4 or length % 2:
        raise InputError(f"cycle length must be even and >= 4, got {length}")
    k = length // 2
    edges = [(i, i) for i in range(k)] + [((i + 1) % k, i) for i in range(k)]
    return BipartiteGraph(k, k, edges)


def matching(n: int) -> BipartiteGraph:
    """n disjoint edges (the graph nK_2 drawn across two classes)."""
    if n < 1:
        raise InputError(f"matching needs n >= 1, got {n}")
    return BipartiteGraph(n, n, [(i, i) for i in range(n)])


def disjoint_union(parts: Sequence[BipartiteGraph]) -> BipartiteGraph:
    """Disjoint union; classes of the parts are concatenated in order."""
    if not parts:
        raise InputError("disjoint union of nothing is undefined")
    edges = []
    off_x = off_y = 0
    for bg in parts:
        edges.extend((x + off_x, y + off_y) for x, y in bg.sorted_edges)
        off_x += bg.x_size
        off_y += bg.y_size
    return BipartiteGraph(off_x, off_y, edges)


# ---------------------------------------------------------------------------
# spectra


@dataclass(frozen=True)
class ExactSpectrum:
    """Exact spectral data: monic integer characteristic polynomial and,
    when the polynomial splits over the integers, the full root multiset
    as ((eigenvalue, multiplicity), ...) sorted by descending eigenvalue.
    `integer_roots` is None exactly when the graph is not integral.
    """

    char_poly: tuple[int, ...]
    integer_roots: Optional[tuple[tuple[int, int], ...]]


def char_poly_exact(g: Graph) -> tuple[int, ...]:
    """Integer coefficients of det(xI - A), descending degree."""
    return tuple(_kernels.char_poly(g.adjacency_rows()))


def exact_spectrum(g: Graph) -> ExactSpectrum:
    """Characteristic polynomial plus integer root extraction.

    Candidate roots are bounded by the maximum degree (every eigenvalue
    of an adjacency matrix is) and must divide the running constant
    term; zero roots are stripped as a power of x first. The polynomial
    is deflated by synthetic division until it stops splitting.
    """
    coeffs = char_poly_exact(g)
    roots = _integer_roots(list(coeffs), g.max_degree())
    return ExactSpectrum(coeffs, roots)


def integer_spectrum(g: Graph) -> Optional[tuple[tuple[int, int], ...]]:
    """Root multiset when the graph is integral, else None."""
    return exact_spectrum(g).integer_roots


def _integer_roots(
    coeffs: list[int], bound: int
) -> Optional[tuple[tuple[int, int], ...]]:
    roots: dict[int, int] = {}
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
        roots[0] = roots.get(0, 0) + 1
    for t in range(-bound, bound + 1):
        if t == 0:
            continue
        while len(coeffs) > 1 and coeffs[-1] % t == 0:
            quotient = _synthetic_division(coeffs, t)
            if quotient is None:
                break
            coeffs = quotient
            roots[t] = roots.get(t, 0) + 1
    if len(coeffs) != 1:
        return None
    return tuple(sorted(roots.items(), reverse=True))


def _synthetic_division(coeffs: list[int], t: int) -> Optional[list[int]]:
    """Divide by (x - t); returns the quotient or None on remainder."""
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(c + t * out[-1])
    if out[-1] != 0:
        return None
    return out[:-1]


def root_multiplicity(coeffs: Sequence[int], t: int) -> int:
    """Multiplicity of the integer t as a root of the polynomial."""
    current = list(coeffs)
    mult = 0
    while len(current) > 1:
        quotient = _synthetic_division(current, t)
        if quotient is None:
            break
        current = quotient
        mult += 1
    return mult


def expand_root_multiset(
    roots: Sequence[tuple[int, int]]
) -> list[int]:
    """Flatten ((value, mult), ...) into a descending eigenvalue list."""
    out = []
    for value, mult in sorted(roots, reverse=True):
        out.extend([value] * mult)
    return out


def numeric_spectrum(g: Graph) -> list[float]:
    """All adjacency eigenvalues, descending, via a symmetric eigensolver
    (LAPACK through numpy; relative accuracy well inside 1e-9)."""
    a = np.array(g.adjacency_rows(), dtype=float)
    return [float(v) for v in np.linalg.eigvalsh(a)[::-1]]


# ---------------------------------------------------------------------------
# metrics


def is_connected(g: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.order


def is_bipartite_graph(g: Graph) -> bool:
    """Two-colourability by BFS, component by component."""
    colour: dict[int, int] = {}
    for src in range(g.order):
        if src in colour:
            continue
        colour[src] = 0
        queue = [src]
        for v in queue:
            for w in g.neighbors(v):
                if w not in colour:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def diameter(g: Graph) -> Union[int, float]:
    """Longest BFS distance between any two vertices; math.inf when
    disconnected."""
    best = 0
    for src in range(g.order):
        dist = {src: 0}
        queue = [src]
        for v in queue:
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        if len(dist) < g.order:
            return math.inf
        best = max(best, max(dist.values()))
    return best


def clique_number(g: Graph) -> int:
    """Exact maximum clique size, branch and bound with a greedy
    colouring bound (candidates are pruned when even one vertex per
    colour class cannot beat the incumbent)."""
    n = g.order
    adj = [0] * n
    for v in range(n):
        for w in g.neighbors(v):
            adj[v] |= 1 << w
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            if size > best:
                best = size
            return
        order: list[tuple[int, int]] = []
        colour = 0
        rem = cand
        while rem:
            colour += 1
            avail = rem
            while avail:
                vbit = avail & -avail
                v = vbit.bit_length() - 1
                avail &= ~(adj[v] | vbit)
                rem ^= vbit
                order.append((v, colour))
        for v, c in reversed(order):
            if size + c <= best:
                return
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


# ---------------------------------------------------------------------------
# file formats


def parse_graph_text(text: str) -> BipartiteGraph:
    """Text format: `X <m>`, `Y <n>`, then one `xi yj` edge per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) < 2:
        raise FormatError("graph file needs `X <m>` and `Y <n>` header lines")
    sizes = []
    for expected, ln in zip(("X", "Y"), lines[:2]):
        parts = ln.split()
        if len(parts) != 2 or parts[0] != expected or not parts[1].isdigit():
            raise FormatError(f"bad header line {ln!r}, expected `{expected} <size>`")
        sizes.append(int(parts[1]))
    edges = []
    for ln in lines[2:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {ln!r}, expected `xi yj`")
        try:
            edge = (int(parts[0]), int(parts[1]))
        except ValueError:
            raise FormatError(f"bad edge line {ln!r}, expected integers") from None
        if edge in edges:
            raise FormatError(f"duplicate edge {ln!r}")
        edges.append(edge)
    try:
        return BipartiteGraph(sizes[0], sizes[1], edges)
    except InputError as exc:
        raise FormatError(str(exc)) from None


def graph_to_text(bg: BipartiteGraph) -> str:
    lines = [f"X {bg.x_size}", f"Y {bg.y_size}"]
    lines.extend(f"{x} {y}" for x, y in bg.sorted_edges)
    return "\n".join(lines) + "\n"


def parse_graph_json(text: str) -> BipartiteGraph:
    """JSON format: {"x_size": m, "y_size": n, "edges": [[xi, yj], ...]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad JSON: {exc}") from None
    if not isinstance(data, dict):
        raise FormatError("graph JSON must be an object")
    try:
        x_size, y_size = data["x_size"], data["y_size"]
        raw_edges = data["edges"]
    except KeyError as exc:
        raise FormatError(f"graph JSON missing key {exc}") from None
    edges = []
    for item in raw_edges:
        if not (isinstance(item, (list, tuple)) and len(item) == 2):
            raise FormatError(f"bad edge entry {item!r}")
        edges.append((int(item[0]), int(item[1])))
    if len(set(edges)) != len(edges):
        raise FormatError("duplicate edge in JSON edge list")
    try:
        return BipartiteGraph(x_size, y_size, edges)
    except InputError as exc:
        raise FormatError(str(exc)) from None


def graph_to_json_dict(bg: BipartiteGraph) -> dict:
    return {
        "x_size": bg.x_size,
        "y_size": bg.y_size,
        "edges": [[x, y] for x, y in bg.sorted_edges],
    }


def load_graph(path) -> BipartiteGraph:
    """Parse a graph file, JSON when the name ends in .json, else text."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        return parse_graph_json(text)
    return parse_graph_text(text)


# ---------------------------------------------------------------------------
# corpus generation


def connected_bipartite_graphs(
    max_order: int, min_order: int = 2
) -> Iterator[BipartiteGraph]:
    """All connected bipartite graphs without isolated vertices, one per
    isomorphism class, ordered by (order, smaller class size).

    Graphs are generated as biadjacency bitmask rows and deduplicated by
    a canonical signature: the maximum, over all permutations of the
    smaller class, of the sorted column masks (plus the transpose when
    the classes have equal size). For a connected bipartite graph the
    bipartition is unique up to swapping the classes, so this signature
    is a complete isomorphism invariant.
    """
    for order in range(min_order, max_order + 1):
        for m in range(1, order // 2 + 1):
            n = order - m
            full = (1 << n) - 1
            seen: set[tuple[int, ...]] = set()
            for rows in product(range(1, 1 << n), repeat=m):
                union = 0
                for rm in rows:
                    union |= rm
                if union != full:
                    continue
                if not _masks_connected(rows, m, n):
                    continue
                sig = _canonical_signature(rows, m, n)
                if sig in seen:
                    continue
                seen.add(sig)
                yield _graph_from_columns(sig, m, n)


def _columns_of(rows: Sequence[int], m: int, n: int) -> list[int]:
    cols = [0] * n
    for i, rm in enumerate(rows):
        for j in range(n):
            if rm >> j & 1:
                cols[j] |= 1 << i
    return cols


def _masks_connected(rows: Sequence[int], m: int, n: int) -> bool:
    cols = _columns_of(rows, m, n)
    seen_x, seen_y = 1, 0
    frontier_x = 1
    while frontier_x:
        new_y = 0
        for i in range(m):
            if frontier_x >> i & 1:
                new_y |= rows[i]
        new_y &= ~seen_y
        seen_y |= new_y
        new_x = 0
        for j in range(n):
            if new_y >> j & 1:
                new_x |= cols[j]
        frontier_x = new_x & ~seen_x
        seen_x |= frontier_x
    return seen_x == (1 << m) - 1 and seen_y == (1 << n) - 1


def _canonical_signature(rows, m: int, n: int) -> tuple[int, ...]:
    best = None
    for perm in permutations(range(m)):
        sig = tuple(sorted(_columns_of([rows[i] for i in perm], m, n), reverse=True))
        if best is None or sig > best:
            best = sig
    if m == n:
        cols = _columns_of(rows, m, n)
        for perm in permutations(range(n)):
            sig = tuple(sorted(_columns_of([cols[j] for j in perm], n, m), reverse=True))
            if sig > best:
                best = sig
    return best


def _graph_from_columns(cols: Sequence[int], m: int, n: int) -> BipartiteGraph:
    edges = [
        (i, j) for j, cm in enumerate(cols) for i in range(m) if cm >> i & 1
    ]
    return BipartiteGraph(m, n, edges)
