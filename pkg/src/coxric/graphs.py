"""Undirected simple graphs with the local queries the curvature needs.

Vertices are dense integers 0..n-1.  ``ball(x, i)`` follows the sphere
convention: vertices at distance exactly i.  All adjacency is kept in
sorted tuples so every iteration order is reproducible.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np


class Graph:
    """Immutable undirected simple graph."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels=None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            seen.add((min(u, v), max(u, v)))
        adj = [[] for _ in range(n)]
        for u, v in sorted(seen):
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adj = tuple(tuple(nbrs) for nbrs in adj)
        self.edges = tuple(sorted(seen))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels length must equal vertex count")
        self.labels = labels
        self._adj_sets = tuple(frozenset(nbrs) for nbrs in self.adj)
        self._edge_arrays = None

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, x: int) -> int:
        return len(self.adj[x])

    def neighbor_set(self, x: int) -> frozenset:
        return self._adj_sets[x]

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    def has_isolated_vertices(self) -> bool:
        return any(len(nbrs) == 0 for nbrs in self.adj)

    def edge_arrays(self):
        """Edge endpoints as two aligned integer arrays (cached)."""
        if self._edge_arrays is None:
            if self.edges:
                us, vs = zip(*self.edges)
            else:
                us, vs = (), ()
            self._edge_arrays = (np.array(us, dtype=np.int64),
                                 np.array(vs, dtype=np.int64))
        return self._edge_arrays

    def distances_from(self, x: int) -> list[int]:
        """BFS distances; unreachable vertices get -1."""
        dist = [-1] * self.n
        dist[x] = 0
        queue = deque([x])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def ball(self, x: int, i: int) -> tuple[int, ...]:
        """Vertices at distance exactly ``i`` from ``x`` (a sphere)."""
        if i < 0:
            raise ValueError("distance must be nonnegative")
        if i == 0:
            return (x,)
        dist = self.distances_from(x)
        return tuple(v for v in range(self.n) if dist[v] == i)

    def two_ball(self, x: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(sphere 1, sphere 2) around ``x`` by local exploration only."""
        b1 = self.adj[x]
        b1_set = self._adj_sets[x]
        b2 = set()
        for v in b1:
            for w in self.adj[v]:
                if w != x and w not in b1_set:
                    b2.add(w)
        return b1, tuple(sorted(b2))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return -1 not in self.distances_from(0)

    def two_ball_subgraph(self, x: int) -> "Graph":
        """Union of all paths of length 1 and 2 starting at ``x``.

        Vertex 0 of the result is ``x``; original ids are kept as labels.
        Edges between two sphere-2 vertices are dropped: no path of
        length <= 2 from ``x`` traverses them.
        """
        b1, b2 = self.two_ball(x)
        vertices = [x] + list(b1) + list(b2)
        index = {v: i for i, v in enumerate(vertices)}
        b1_set = set(b1)
        b2_set = set(b2)
        edges = []
        for v in b1:
            edges.append((index[x], index[v]))
            for w in self.adj[v]:
                if w in b1_set and v < w:
                    edges.append((index[v], index[w]))
                elif w in b2_set:
                    edges.append((index[v], index[w]))
        return Graph(len(vertices), edges, labels=vertices)

    def triangle_stats(self):
        """Per-edge triangle counts and their supremum over vertex pairs.

        A triangle containing two vertices forces them adjacent, so the
        supremum over all pairs is attained on edges.
        """
        per_edge = {}
        t_max = 0
        for u, v in self.edges:
            t = len(self._adj_sets[u] & self._adj_sets[v])
            per_edge[(u, v)] = t
            if t > t_max:
                t_max = t
        return per_edge, t_max

    def is_triangle_free(self) -> bool:
        return self.triangle_stats()[1] == 0

    # -- interchange formats ------------------------------------------------

    def to_edge_list_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)

    @classmethod
    def from_edge_list_text(cls, text: str) -> "Graph":
        edges = []
        top = -1
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
            u, v = int(parts[0]), int(parts[1])
            edges.append((u, v))
            top = max(top, u, v)
        return cls(top + 1, edges)

    def to_json_dict(self) -> dict:
        data = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    @classmethod
    def from_json_dict(cls, data: dict) -> "Graph":
        return cls(data["n"], [tuple(e) for e in data["edges"]],
                   labels=data.get("labels"))

    def to_dot(self, name: str = "G", ranks: Sequence[int] | None = None) -> str:
        """GraphViz text; ``ranks`` groups vertices onto same-rank rows."""
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            label = self.labels[v] if self.labels is not None else v
            lines.append(f'  {v} [label="{label}"];')
        if ranks is not None:
            for r in sorted(set(ranks)):
                members = " ".join(str(v) for v in range(self.n) if ranks[v] == r)
                lines.append(f"  {{ rank=same; {members} }}")
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


# -- small standard graphs used throughout the tests ------------------------

def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube_graph(d: int) -> Graph:
    edges = [(x, x ^ (1 << b)) for x in range(1 << d) for b in range(d)
             if x < x ^ (1 << b)]
    return Graph(1 << d, edges)
