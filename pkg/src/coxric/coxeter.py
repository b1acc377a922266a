"""Coxeter matrices, type-string parsing and the geometric bilinear form.

A Coxeter system is encoded by its symmetric matrix of bond orders
``m[i][j]``: 1 on the diagonal, integers >= 2 (or infinity) elsewhere.
Infinite bonds are ``math.inf`` in memory and ``0`` in JSON files.
"""

from __future__ import annotations

import json
import math
import re

import numpy as np

from .linalg import sym_eigen

INFINITY = math.inf

#: Smallest eigenvalue of the bilinear form above this -> positive definite.
FINITENESS_TOL = 1e-9


class SpecError(ValueError):
    """Malformed type string or invalid Coxeter matrix."""


class DegenerateTypeError(ValueError):
    """The bilinear form is exactly singular (affine type)."""


class CoxeterMatrix:
    """Symmetric matrix of bond orders defining a Coxeter system."""

    def __init__(self, orders, label=None):
        rows = [tuple(row) for row in orders]
        n = len(rows)
        if n < 1:
            raise SpecError("rank must be at least 1")
        if any(len(row) != n for row in rows):
            raise SpecError("Coxeter matrix must be square")
        for i in range(n):
            if rows[i][i] != 1:
                raise SpecError(f"diagonal entry m[{i}][{i}] must be 1")
            for j in range(i + 1, n):
                mij = rows[i][j]
                if mij != rows[j][i]:
                    raise SpecError(f"matrix not symmetric at ({i},{j})")
                if mij == INFINITY:
                    continue
                if not (isinstance(mij, int) or float(mij).is_integer()) or mij < 2:
                    raise SpecError(
                        f"off-diagonal bond m[{i}][{j}]={mij!r} must be an "
                        "integer >= 2 or infinity"
                    )
        self.n = n
        self.m = tuple(
            tuple(INFINITY if v == INFINITY else int(v) for v in row) for row in rows
        )
        self.label = label

    def order(self, i: int, j: int):
        return self.m[i][j]

    def __eq__(self, other):
        return isinstance(other, CoxeterMatrix) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        name = self.label or "?"
        return f"CoxeterMatrix(rank={self.n}, label={name!r})"

    def key(self) -> bytes:
        """Canonical byte key (used for caching built groups)."""
        return json.dumps(self.to_json_dict(), separators=(",", ":")).encode()

    def to_json_dict(self) -> dict:
        """JSON form; infinite bonds are stored as 0."""
        return {"m": [[0 if v == INFINITY else int(v) for v in row] for row in self.m]}

    @classmethod
    def from_json_dict(cls, data: dict, label=None) -> "CoxeterMatrix":
        try:
            raw = data["m"]
        except (KeyError, TypeError):
            raise SpecError('matrix JSON must be an object {"m": [[...], ...]}')
        rows = [[INFINITY if v == 0 else v for v in row] for row in raw]
        return cls(rows, label=label)

    @classmethod
    def block_diagonal(cls, factors, label=None) -> "CoxeterMatrix":
        """Assemble a product type; factor blocks keep their given order."""
        n = sum(f.n for f in factors)
        rows = [[2] * n for _ in range(n)]
        offset = 0
        for f in factors:
            for i in range(f.n):
                for j in range(f.n):
                    rows[offset + i][offset + j] = f.m[i][j]
            offset += f.n
        return cls(rows, label=label)


def _path_matrix(bonds):
    """Matrix of a path diagram with the given consecutive bond orders."""
    n = len(bonds) + 1
    rows = [[2] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
    for i, b in enumerate(bonds):
        rows[i][i + 1] = rows[i + 1][i] = b
    return rows


def _atom_matrix(atom: str) -> CoxeterMatrix:
    m = re.fullmatch(r"A(\d+)", atom)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise SpecError("A requires rank >= 1")
        return CoxeterMatrix(_path_matrix([3] * (k - 1)), label=atom)
    m = re.fullmatch(r"B(\d+)", atom)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise SpecError("B requires rank >= 1")
        bonds = [3] * (k - 1)
        if bonds:
            bonds[-1] = 4
        return CoxeterMatrix(_path_matrix(bonds), label=atom)
    m = re.fullmatch(r"D(\d+)", atom)
    if m:
        k = int(m.group(1))
        if k < 2:
            raise SpecError("D requires rank >= 2")
        # Chain 0-1-...-(k-2) with the extra node k-1 forking off node k-3.
        rows = _path_matrix([3] * (k - 2))
        for row in rows:
            row.append(2)
        rows.append([2] * (k - 1) + [1])
        if k >= 3:
            rows[k - 3][k - 1] = rows[k - 1][k - 3] = 3
        return CoxeterMatrix(rows, label=atom)
    if atom == "F4":
        return CoxeterMatrix(_path_matrix([3, 4, 3]), label=atom)
    if atom == "H3":
        return CoxeterMatrix(_path_matrix([5, 3]), label=atom)
    if atom == "H4":
        return CoxeterMatrix(_path_matrix([5, 3, 3]), label=atom)
    m = re.fullmatch(r"I2\((\d+)\)", atom)
    if m:
        order = int(m.group(1))
        if order < 2:
            raise SpecError("I2 parameter must be >= 2")
        return CoxeterMatrix([[1, order], [order, 1]], label=atom)
    raise SpecError(f"unknown type atom {atom!r}")


def parse_spec(text: str) -> CoxeterMatrix:
    """Parse a type string like ``"A3"``, ``"I2(7)"`` or ``"B4xA2"``.

    Products are assembled block-diagonally, left to right.
    """
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise SpecError("empty type specification")
    atoms = cleaned.split("x")
    if any(not a for a in atoms):
        raise SpecError(f"malformed product in {text!r}")
    factors = [_atom_matrix(a) for a in atoms]
    if len(factors) == 1:
        return factors[0]
    return CoxeterMatrix.block_diagonal(factors, label="x".join(atoms))


def load_matrix_file(path: str, label=None) -> CoxeterMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return CoxeterMatrix.from_json_dict(data, label=label or path)


def bilinear_form(cm: CoxeterMatrix) -> np.ndarray:
    """Gram matrix of the simple roots: ``B[i][j] = -cos(pi / m[i][j])``.

    Exact values are used where the cosine is exact (m = 1, 2, infinity)
    so that orthogonal factors stay exactly orthogonal.
    """
    b = np.empty((cm.n, cm.n))
    for i in range(cm.n):
        for j in range(cm.n):
            mij = cm.m[i][j]
            if mij == 1:
                b[i, j] = 1.0
            elif mij == 2:
                b[i, j] = 0.0
            elif mij == INFINITY:
                b[i, j] = -1.0
            else:
                b[i, j] = -math.cos(math.pi / mij)
    return b


def is_finite_type(cm: CoxeterMatrix, tol: float = FINITENESS_TOL) -> bool:
    """True iff the group is finite (bilinear form positive definite).

    An infinite bond forces an infinite group outright, whatever the
    form's spectrum.  Otherwise the smallest eigenvalue decides:
    above ``tol`` finite, below ``-tol`` infinite, and the window in
    between raises ``DegenerateTypeError`` (affine forms are exactly
    singular, and misreading one as a boolean would be silent).
    """
    if any(v == INFINITY for row in cm.m for v in row):
        return False
    eigenvalues = sym_eigen(bilinear_form(cm))
    smallest = eigenvalues[0]
    if smallest > tol:
        return True
    if smallest < -tol:
        return False
    raise DegenerateTypeError(
        f"degenerate (affine) type: smallest form eigenvalue {smallest:.3e}"
    )
