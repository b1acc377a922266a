"""Root systems of finite Coxeter groups in the simple-root basis.

The orbit of the simple roots under the simple reflections is closed by
breadth-first search.  Coordinates are double precision; two roots are
the same point when their max-norm distance is below ``MATCH_TOL``, and
the generation aborts if distinct roots ever come closer than
``SEPARATION_TOL`` (the gap between the two tolerances is the safety
margin against numeric drift).
"""

from __future__ import annotations

import numpy as np

from .coxeter import CoxeterMatrix, DegenerateTypeError, bilinear_form, is_finite_type

MATCH_TOL = 1e-6
SEPARATION_TOL = 1e-4
POSITIVITY_TOL = 1e-8
ROOT_CAP = 10_000


class ClosureDivergedError(RuntimeError):
    """Root closure exceeded the cap; the input is not of finite type."""


class DedupAmbiguityError(RuntimeError):
    """Two stored roots are suspiciously close: numeric degradation."""


class RootSystem:
    """All roots of a finite Coxeter system, positive roots first.

    ``coords[i]`` holds root i over the simple-root basis; the negative
    of root i sits at index ``i + num_positive`` (mod the full count).
    """

    def __init__(self, cm: CoxeterMatrix, form: np.ndarray, coords: np.ndarray,
                 num_positive: int):
        self.cm = cm
        self.form = form
        self.coords = coords
        self.num_positive = num_positive
        self._perm_cache: dict[int, np.ndarray] = {}

    @property
    def num_roots(self) -> int:
        return self.coords.shape[0]

    @property
    def rank(self) -> int:
        return self.cm.n

    def is_positive(self, i: int) -> bool:
        return i < self.num_positive

    def neg_of(self, i: int) -> int:
        n = self.num_positive
        return i + n if i < n else i - n

    def inner(self, x: np.ndarray, y: np.ndarray) -> float:
        return float(x @ self.form @ y)

    def reflect(self, x: np.ndarray, root_index: int) -> np.ndarray:
        """Image of ``x`` under the reflection fixed by root ``root_index``."""
        alpha = self.coords[root_index]
        return x - 2.0 * self.inner(x, alpha) * alpha

    def find_root(self, x: np.ndarray) -> int:
        """Index of the stored root matching ``x``, or raise KeyError."""
        dist = np.abs(self.coords - x).max(axis=1)
        i = int(dist.argmin())
        if dist[i] >= MATCH_TOL:
            raise KeyError(f"no stored root within {MATCH_TOL} of {x}")
        return i

    def reflection_perm(self, root_index: int) -> np.ndarray:
        """Permutation of root indices induced by one reflection (cached).

        Always an involution, and it commutes with negation.
        """
        cached = self._perm_cache.get(root_index)
        if cached is not None:
            return cached
        alpha = self.coords[root_index]
        scale = 2.0 * (self.coords @ (self.form @ alpha))
        images = self.coords - scale[:, None] * alpha[None, :]
        dist = np.abs(images[:, None, :] - self.coords[None, :, :]).max(axis=2)
        perm = dist.argmin(axis=1).astype(np.int32)
        if (dist[np.arange(self.num_roots), perm] >= MATCH_TOL).any():
            raise KeyError("reflection image fell outside the stored root set")
        if len(set(perm.tolist())) != self.num_roots:
            raise DedupAmbiguityError("reflection action is not a bijection")
        perm.setflags(write=False)
        self._perm_cache[root_index] = perm
        return perm

    def simple_reflection_perms(self) -> list[np.ndarray]:
        return [self.reflection_perm(i) for i in range(self.rank)]

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "num_positive": self.num_positive,
            "form": self.form.tolist(),
            "roots": [
                {"coords": self.coords[i].tolist(), "positive": i < self.num_positive}
                for i in range(self.num_roots)
            ],
        }


def generate_roots(cm: CoxeterMatrix, cap: int = ROOT_CAP) -> RootSystem:
    """Close the simple roots under all simple reflections.

    Requires a finite-type matrix; the cap is a backstop against
    non-finite inputs slipping through.
    """
    try:
        finite = is_finite_type(cm)
    except DegenerateTypeError:
        finite = False
    if not finite:
        raise ValueError("root generation requires a finite-type Coxeter matrix")
    form = bilinear_form(cm)
    n = cm.n

    stored: list[np.ndarray] = []
    matrix = np.zeros((0, n))

    def lookup(x: np.ndarray) -> int:
        nonlocal matrix
        if len(stored):
            dist = np.abs(matrix - x).max(axis=1)
            i = int(dist.argmin())
            if dist[i] < MATCH_TOL:
                if dist[i] > 0 and dist[i] >= MATCH_TOL / 100:
                    raise DedupAmbiguityError(
                        f"candidate root at distance {dist[i]:.2e} from stored root {i}"
                    )
                return i
        stored.append(x)
        matrix = np.vstack([matrix, x[None, :]])
        return len(stored) - 1

    for i in range(n):
        simple = np.zeros(n)
        simple[i] = 1.0
        lookup(simple)

    frontier = list(range(n))
    while frontier:
        next_frontier = []
        for idx in frontier:
            x = stored[idx]
            for i in range(n):
                image = x - 2.0 * float(x @ form[:, i]) * _basis(n, i)
                before = len(stored)
                j = lookup(image)
                if j == before:
                    next_frontier.append(j)
                    if len(stored) > cap:
                        raise ClosureDivergedError(
                            f"root closure diverged past {cap} roots"
                        )
        frontier = next_frontier

    all_coords = np.array(stored)
    _check_separation(all_coords)

    positive = [i for i, x in enumerate(stored) if (x >= -POSITIVITY_TOL).all()]
    negative_of = {}
    for p in positive:
        negative_of[p] = _match_row(all_coords, -stored[p])
    if 2 * len(positive) != len(stored):
        raise DedupAmbiguityError(
            f"{len(positive)} positive roots among {len(stored)}: sign split failed"
        )

    order = positive + [negative_of[p] for p in positive]
    coords = all_coords[order]
    norms = np.einsum("ij,jk,ik->i", coords, form, coords)
    if np.abs(norms - 1.0).max() > 1e-8:
        raise DedupAmbiguityError("generated roots drifted off unit norm")
    coords.setflags(write=False)
    return RootSystem(cm, form, coords, len(positive))


def _basis(n: int, i: int) -> np.ndarray:
    e = np.zeros(n)
    e[i] = 1.0
    return e


def _match_row(matrix: np.ndarray, x: np.ndarray) -> int:
    dist = np.abs(matrix - x).max(axis=1)
    i = int(dist.argmin())
    if dist[i] >= MATCH_TOL:
        raise KeyError("row not found")
    return i


def _check_separation(coords: np.ndarray, limit: float = SEPARATION_TOL):
    m = coords.shape[0]
    for start in range(0, m, 256):
        block = coords[start:start + 256]
        dist = np.abs(block[:, None, :] - coords[None, :, :]).max(axis=2)
        rows = np.arange(block.shape[0])
        dist[rows, start + rows] = np.inf
        if (dist < limit).any():
            raise DedupAmbiguityError(
                f"two stored roots are within {limit}: numeric degradation"
            )
