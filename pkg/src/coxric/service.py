"""HTTP service exposing group construction, curvature, and the checks.

The CLI talks to this app in process by default; ``coxric serve`` runs
it under uvicorn for remote use.  Domain failures (bad specs, infinite
type, size guards) come back as HTTP 400 with the reason in ``detail``.
"""

from __future__ import annotations

from functools import lru_cache

from fastapi import FastAPI, HTTPException

from . import checks, coxeter, curvature, dihedral, isoperimetry, spectral
from .coxeter import CoxeterMatrix, SpecError
from .graphs import Graph
from .groups import Group, GroupTooLargeError, build_group
from .roots import ClosureDivergedError, DedupAmbiguityError
from .schemas import (
    CheckRequest,
    CheckResponse,
    ClassesRequest,
    ClassesResponse,
    CoxeterTarget,
    ExportRequest,
    ExportResponse,
    GraphTarget,
    GroupRequest,
    GroupResponse,
    HealthResponse,
    IsoRequest,
    IsoResponse,
    IsoRow,
    RicciRequest,
    RicciResponse,
    SpectralRequest,
    SpectralResponse,
    SphereClassRow,
    VertexCurvature,
)
from .spectral import GraphTooLargeError

SPECTRUM_REPORT_LIMIT = 512

app = FastAPI(title="coxric", description=__doc__)

_DOMAIN_ERRORS = (
    SpecError,
    GroupTooLargeError,
    GraphTooLargeError,
    ClosureDivergedError,
    DedupAmbiguityError,
    ValueError,
)


def _bad(msg: str):
    raise HTTPException(status_code=400, detail=msg)


def _run(fn):
    try:
        return fn()
    except HTTPException:
        raise
    except _DOMAIN_ERRORS as exc:
        _bad(str(exc))


@lru_cache(maxsize=32)
def _group_for(cm: CoxeterMatrix) -> Group:
    return build_group(cm)


def _coxeter_matrix(req: CoxeterTarget) -> CoxeterMatrix | None:
    if req.spec is not None and req.matrix is not None:
        _bad("give either a type spec or a Coxeter matrix, not both")
    if req.spec is not None:
        return coxeter.parse_spec(req.spec)
    if req.matrix is not None:
        return CoxeterMatrix.from_json_dict({"m": req.matrix}, label="matrix")
    return None


def _group_target(req: CoxeterTarget) -> tuple[str, Group]:
    cm = _coxeter_matrix(req)
    if cm is None:
        _bad("request needs a type spec or a Coxeter matrix")
    return cm.label or "matrix", _group_for(cm)


def _graph_target(req: GraphTarget) -> tuple[str, Graph, Group | None]:
    """Either the Bruhat graph of a Coxeter target or a raw edge list."""
    has_cox = req.spec is not None or req.matrix is not None
    if req.edges is not None:
        if has_cox:
            _bad("give either a Coxeter target or an edge list, not both")
        top = max((max(u, v) for u, v in req.edges), default=-1)
        n = req.num_vertices if req.num_vertices is not None else top + 1
        return "graph", Graph(n, req.edges), None
    label, grp = _group_target(req)
    return label, grp.bruhat_graph(), grp


def _minimizer_pairs(report) -> list[tuple[int, float]]:
    return sorted(report.minimizer.values.items())


@app.get("/", response_model=HealthResponse)
@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok")


@app.post("/group", response_model=GroupResponse)
def group_endpoint(req: GroupRequest) -> GroupResponse:
    def go():
        label, grp = _group_target(req)
        return GroupResponse(
            target=label,
            order=grp.order,
            rank=grp.rank,
            num_reflections=len(grp.reflections),
            num_positive_roots=grp.rs.num_positive,
            longest_length=grp.length(grp.longest_element()),
            length_histogram=grp.length_histogram(),
        )

    return _run(go)


@app.post("/ricci", response_model=RicciResponse)
def ricci_endpoint(req: RicciRequest) -> RicciResponse:
    def go():
        label, g, grp = _graph_target(req)
        single = req.vertex is not None
        if g.n > spectral.SIZE_GUARD and not req.force:
            _bad(
                f"{g.n} vertices exceeds the curvature guard of "
                f"{spectral.SIZE_GUARD}; pass force to override"
            )
        if single:
            if not 0 <= req.vertex < g.n:
                _bad(f"vertex {req.vertex} out of range for {g.n} vertices")
            rep = curvature.global_ricci(g, vertices=[req.vertex])
        elif req.all_vertices or grp is None:
            rep = curvature.global_ricci(g)
        else:
            rep = curvature.global_ricci(g, transitive=True)
        is_cox = grp is not None
        # a single-vertex report on a Bruhat graph still decides the
        # global value: all vertices of B(W) share one local curvature
        transitive = rep.transitive or (is_cox and single and req.vertex == 0)
        expected = 2.0 if is_cox else None
        passed = abs(rep.ric - 2.0) <= checks.RIC_TOL if is_cox else None
        rows = [
            VertexCurvature(
                vertex=r.vertex,
                ric=r.ric,
                form_order=r.form_order,
                solver=r.solver,
                minimizer=_minimizer_pairs(r) if req.emit_minimizer else None,
            )
            for r in rep.locals
        ]
        return RicciResponse(
            target=label,
            n=g.n,
            ric=rep.ric,
            argmin=rep.argmin,
            transitive=transitive,
            expected=expected,
            passed=passed,
            vertices=rows,
        )

    return _run(go)


@app.post("/spectral", response_model=SpectralResponse)
def spectral_endpoint(req: SpectralRequest) -> SpectralResponse:
    def go():
        label, g, grp = _graph_target(req)
        rep = spectral.spectral_gap(g, force=req.force)
        is_cox = grp is not None
        return SpectralResponse(
            target=label,
            n=rep.n,
            gap=rep.gap,
            lambda_max=rep.lambda_max,
            zero_multiplicity=rep.zero_multiplicity,
            connected=rep.connected,
            expected_min=2.0 if is_cox else None,
            passed=(rep.gap >= 2.0 - spectral.COMPARISON_TOL)
            if is_cox
            else None,
            eigenvalues=[float(v) for v in rep.eigenvalues]
            if rep.n <= SPECTRUM_REPORT_LIMIT
            else None,
        )

    return _run(go)


@app.post("/iso", response_model=IsoResponse)
def iso_endpoint(req: IsoRequest) -> IsoResponse:
    def go():
        if req.mode not in ("sampled", "exhaustive"):
            _bad(f"unknown mode {req.mode!r}; use sampled or exhaustive")
        label, g, grp = _graph_target(req)
        lam = None
        ric = None
        if grp is not None:
            ric = curvature.local_ricci(g, 0).ric
            try:
                lam = spectral.spectral_gap(g, force=req.force).gap
            except GraphTooLargeError:
                lam = None
        elif g.n > spectral.SIZE_GUARD and not req.force:
            _bad(
                f"{g.n} vertices exceeds the curvature sweep guard of "
                f"{spectral.SIZE_GUARD}; pass force to override"
            )
        result = isoperimetry.verify_isoperimetry(
            g, mode=req.mode, seed=req.seed, samples=req.samples,
            lam=lam, ric=ric,
        )
        rows = [
            IsoRow(
                label=r.label,
                size=r.size,
                boundary=r.boundary,
                bound=r.bound,
                bound_corollary=r.bound_corollary,
                bound_theorem=r.bound_theorem,
                slack=r.slack,
                passed=r.passed,
                subset=list(r.subset) if r.subset is not None else None,
            )
            for r in result.reports
        ]
        return IsoResponse(
            target=label,
            mode=result.mode,
            seed=result.seed,
            n=result.n,
            gap=result.gap,
            ric=result.ric,
            checked=result.checked,
            failures=result.failures,
            min_slack=result.min_slack,
            passed=result.failures == 0,
            reports=rows,
        )

    return _run(go)


@app.post("/classes", response_model=ClassesResponse)
def classes_endpoint(req: ClassesRequest) -> ClassesResponse:
    def go():
        label, grp = _group_target(req)
        rows = [
            SphereClassRow(
                representative=c.representative,
                size=len(c.members),
                members=list(c.members),
                member_orders=list(c.member_orders),
                m=c.subgroup.m,
                subgroup_order=c.subgroup.order,
                num_reflections=len(c.subgroup.reflections),
                saturated=c.saturated,
                proper_pair_closure=c.proper_pair_closure,
            )
            for c in dihedral.classes(grp)
        ]
        return ClassesResponse(
            target=label,
            order=grp.order,
            sphere2_size=len(dihedral.sphere2(grp)),
            num_classes=len(rows),
            classes=rows,
        )

    return _run(go)


@app.post("/check", response_model=CheckResponse)
def check_endpoint(req: CheckRequest) -> CheckResponse:
    def go():
        label, grp = _group_target(req)
        data = checks.run_check(
            grp, label, seed=req.seed, iso_samples=req.samples,
            num_functions=req.functions,
        )
        return CheckResponse(
            target=data["spec"],
            order=data["order"],
            rank=data["rank"],
            num_reflections=data["num_reflections"],
            seed=data["seed"],
            checks=data["checks"],
            passed=data["passed"],
        )

    return _run(go)


@app.post("/export", response_model=ExportResponse)
def export_endpoint(req: ExportRequest) -> ExportResponse:
    def go():
        if req.what in ("group", "roots"):
            label, grp = _group_target(req)
            data = grp.to_json_dict() if req.what == "group" else grp.rs.to_json_dict()
            return ExportResponse(target=label, what=req.what, data=data)
        if req.what in ("edges", "dot"):
            label, g, grp = _graph_target(req)
            if req.what == "edges":
                return ExportResponse(target=label, what=req.what,
                                      text=g.to_edge_list_text())
            ranks = [int(v) for v in grp.lengths] if grp is not None else None
            return ExportResponse(target=label, what=req.what,
                                  text=g.to_dot(ranks=ranks))
        _bad(f"unknown export {req.what!r}; use group, roots, edges, or dot")

    return _run(go)


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=8000)
