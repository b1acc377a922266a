"""Finite Coxeter groups materialized as permutations of root indices.

Each element is the permutation its action induces on the stored roots,
so equality is exact integer comparison and composition is array
indexing.  Elements get dense integer ids in BFS discovery order with
the identity at 0, and the BFS depth is the Coxeter length.
"""

from __future__ import annotations

import numpy as np

from .coxeter import CoxeterMatrix
from .graphs import Graph
from .roots import RootSystem, generate_roots

ELEMENT_CAP = 100_000


class GroupTooLargeError(RuntimeError):
    """Generation passed the element cap; the input is too big or infinite."""


class Group:
    """A finite Coxeter group acting faithfully on its root system.

    Composition convention: ``mult(u, v).perm[i] = v.perm[u.perm[i]]``,
    i.e. the permutations compose left to right.  Any consistent choice
    works; this one makes a product a single fancy-indexing step.
    """

    def __init__(self, rs: RootSystem, perms: np.ndarray, lengths: np.ndarray,
                 index: dict[bytes, int]):
        self.rs = rs
        self.perms = perms
        self.lengths = lengths
        self._index = index
        self._reflections: tuple[int, ...] | None = None
        self._root_of: dict[int, int] | None = None
        self._bruhat: Graph | None = None

    @property
    def order(self) -> int:
        return self.perms.shape[0]

    @property
    def rank(self) -> int:
        return self.rs.rank

    identity = 0

    def find(self, perm: np.ndarray) -> int:
        key = np.asarray(perm, dtype=np.int32).tobytes()
        try:
            return self._index[key]
        except KeyError:
            raise KeyError("permutation is not an element of the group") from None

    def mult(self, u: int, v: int) -> int:
        return self.find(self.perms[v][self.perms[u]])

    def inv(self, u: int) -> int:
        return self.find(np.argsort(self.perms[u]).astype(np.int32))

    def element_order(self, u: int) -> int:
        k, w = 1, u
        while w != self.identity:
            w = self.mult(w, u)
            k += 1
        return k

    def length(self, u: int) -> int:
        return int(self.lengths[u])

    def length_histogram(self) -> list[int]:
        counts = np.bincount(self.lengths)
        return counts.tolist()

    def num_inversions(self, u: int) -> int:
        """Positive roots sent negative; equals the length."""
        p = self.rs.num_positive
        return int((self.perms[u][:p] >= p).sum())

    @property
    def simple(self) -> tuple[int, ...]:
        return tuple(self.find(self.rs.reflection_perm(i)) for i in range(self.rank))

    @property
    def reflections(self) -> tuple[int, ...]:
        """Element ids of all reflections, ordered by positive-root index."""
        if self._reflections is None:
            ids = []
            root_of = {}
            for b in range(self.rs.num_positive):
                t = self.find(self.rs.reflection_perm(b))
                ids.append(t)
                root_of[t] = b
            if len(root_of) != self.rs.num_positive:
                raise RuntimeError("distinct positive roots gave equal reflections")
            self._reflections = tuple(ids)
            self._root_of = root_of
        return self._reflections

    def is_reflection(self, u: int) -> bool:
        self.reflections
        return u in self._root_of

    def root_of_reflection(self, t: int) -> int:
        """Positive-root index fixed by reflection ``t``."""
        self.reflections
        return self._root_of[t]

    def bruhat_graph(self) -> Graph:
        """Edges {w, tw} over all reflections t (cached)."""
        if self._bruhat is None:
            edges = set()
            for t in self.reflections:
                t_perm = self.perms[t]
                rows = self.perms[:, t_perm]
                for w in range(self.order):
                    tw = self._index[rows[w].tobytes()]
                    edges.add((w, tw) if w < tw else (tw, w))
            self._bruhat = Graph(self.order, sorted(edges))
        return self._bruhat

    def longest_element(self) -> int:
        return int(self.lengths.argmax())

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "rank": self.rank,
            "num_roots": self.rs.num_roots,
            "num_reflections": len(self.reflections),
            "simple": list(self.simple),
            "reflections": list(self.reflections),
            "lengths": self.lengths.tolist(),
            "coxeter_matrix": self.rs.cm.to_json_dict(),
        }


def generate_group(rs: RootSystem, cap: int = ELEMENT_CAP) -> Group:
    """BFS closure of the identity under the simple reflections."""
    num_roots = rs.num_roots
    simple_perms = [rs.reflection_perm(i).astype(np.int32) for i in range(rs.rank)]
    identity = np.arange(num_roots, dtype=np.int32)
    rows = [identity]
    index = {identity.tobytes(): 0}
    lengths = [0]
    frontier = [0]
    depth = 0
    while frontier:
        depth += 1
        batch = np.stack([rows[i] for i in frontier])
        next_frontier = []
        for sp in simple_perms:
            # right multiplication: (w * s).perm = s.perm applied after w.perm
            products = sp[batch]
            for row in products:
                key = row.tobytes()
                if key not in index:
                    if len(rows) >= cap:
                        raise GroupTooLargeError(
                            f"group generation passed {cap} elements"
                        )
                    index[key] = len(rows)
                    rows.append(row.copy())
                    lengths.append(depth)
                    next_frontier.append(index[key])
        frontier = next_frontier
    perms = np.stack(rows)
    perms.setflags(write=False)
    return Group(rs, perms, np.array(lengths, dtype=np.int32), index)


def build_group(cm: CoxeterMatrix, cap: int = ELEMENT_CAP) -> Group:
    return generate_group(generate_roots(cm), cap=cap)
