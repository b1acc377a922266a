"""Request and response models for the HTTP service.

Every endpoint that works on a graph accepts three target forms: a type
spec string ("B3", "I2(7)", "A1xA2"), an explicit Coxeter matrix (bond
orders, 0 standing in for infinity), or a raw edge list.  Exactly one
form must be given; edge lists are only meaningful for the commands that
operate on plain graphs.
"""

from __future__ import annotations

from pydantic import BaseModel


class CoxeterTarget(BaseModel):
    spec: str | None = None
    matrix: list[list[int]] | None = None


class GraphTarget(CoxeterTarget):
    edges: list[tuple[int, int]] | None = None
    num_vertices: int | None = None


class GroupRequest(CoxeterTarget):
    pass


class RicciRequest(GraphTarget):
    vertex: int | None = None
    all_vertices: bool = False
    emit_minimizer: bool = False
    force: bool = False


class SpectralRequest(GraphTarget):
    force: bool = False


class IsoRequest(GraphTarget):
    mode: str = "sampled"
    seed: int = 0
    samples: int = 10_000
    force: bool = False


class ClassesRequest(CoxeterTarget):
    pass


class CheckRequest(CoxeterTarget):
    seed: int = 0
    samples: int = 1000
    functions: int = 25


class ExportRequest(GraphTarget):
    what: str = "group"


class HealthResponse(BaseModel):
    status: str


class GroupResponse(BaseModel):
    target: str
    order: int
    rank: int
    num_reflections: int
    num_positive_roots: int
    longest_length: int
    length_histogram: list[int]


class VertexCurvature(BaseModel):
    vertex: int
    ric: float
    form_order: int
    solver: str
    minimizer: list[tuple[int, float]] | None = None


class RicciResponse(BaseModel):
    target: str
    n: int
    ric: float
    argmin: int
    transitive: bool
    expected: float | None
    passed: bool | None
    vertices: list[VertexCurvature]


class SpectralResponse(BaseModel):
    target: str
    n: int
    gap: float
    lambda_max: float
    zero_multiplicity: int
    connected: bool
    expected_min: float | None
    passed: bool | None
    eigenvalues: list[float] | None


class IsoRow(BaseModel):
    label: str
    size: int
    boundary: int
    bound: float
    bound_corollary: float
    bound_theorem: float | None
    slack: float
    passed: bool
    subset: list[int] | None = None


class IsoResponse(BaseModel):
    target: str
    mode: str
    seed: int | None
    n: int
    gap: float | None
    ric: float | None
    checked: int
    failures: int
    min_slack: float
    passed: bool
    reports: list[IsoRow]


class SphereClassRow(BaseModel):
    representative: int
    size: int
    members: list[int]
    member_orders: list[int]
    m: int
    subgroup_order: int
    num_reflections: int
    saturated: bool
    proper_pair_closure: bool


class ClassesResponse(BaseModel):
    target: str
    order: int
    sphere2_size: int
    num_classes: int
    classes: list[SphereClassRow]


class CheckResponse(BaseModel):
    target: str
    order: int
    rank: int
    num_reflections: int
    seed: int
    checks: list[dict]
    passed: bool


class ExportResponse(BaseModel):
    target: str
    what: str
    text: str | None = None
    data: dict | None = None
