"""Command line front end.

Thin client over the HTTP service: every command builds a request,
posts it (in process by default, to ``--server URL`` if given), and
renders the response.  Exit codes: 0 all verdicts pass, 1 a
mathematical check failed, 2 usage or input error.
"""

from __future__ import annotations

import asyncio
import csv as csvlib
import io
import json

import click
import httpx

from .graphs import Graph
from .jsonio import canonical_dumps

FLOAT_FMT = ".12g"


def _post(server: str | None, path: str, payload: dict) -> dict:
    if server:
        with httpx.Client(base_url=server.rstrip("/"), timeout=600.0) as client:
            resp = client.post(path, json=payload)
    else:
        from .service import app

        async def go():
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://coxric", timeout=600.0
            ) as client:
                return await client.post(path, json=payload)

        resp = asyncio.run(go())
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        raise click.UsageError(str(detail))
    return resp.json()


def _cox_payload(spec: str | None, matrix_path: str | None) -> dict:
    if spec and matrix_path:
        raise click.UsageError("give a type spec or --matrix, not both")
    if spec:
        return {"spec": spec}
    if matrix_path:
        try:
            with open(matrix_path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            return {"matrix": data["m"]}
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise click.UsageError(f"cannot read matrix file: {exc}")
    raise click.UsageError("a type spec or --matrix is required")


def _graph_payload(spec, matrix_path, graph_path) -> dict:
    if graph_path:
        if spec or matrix_path:
            raise click.UsageError(
                "give a Coxeter target or --graph, not both"
            )
        try:
            with open(graph_path, "r", encoding="utf-8") as fh:
                g = Graph.from_edge_list_text(fh.read())
        except (OSError, ValueError) as exc:
            raise click.UsageError(f"cannot read graph file: {exc}")
        return {"edges": [list(e) for e in g.edges], "num_vertices": g.n}
    return _cox_payload(spec, matrix_path)


def _f(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, FLOAT_FMT)
    return str(v)


def _csv(columns: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csvlib.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["" if v is None else _f(v) for v in row])
    return buf.getvalue()


def _table(columns: list[str], rows: list[list]) -> str:
    cells = [[_f(v) for v in row] for row in rows]
    widths = [
        max(len(columns[i]), max((len(r[i]) for r in cells), default=0))
        for i in range(len(columns))
    ]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    for r in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _json_report(command: str, config: dict, data: dict) -> str:
    header = {"command": command}
    header.update(config)
    return canonical_dumps({"config": header, "report": data})


def output_options(fn):
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None,
                      help="Write the report to a file instead of stdout.")(fn)
    fn = click.option("--json", "as_json", is_flag=True,
                      help="Shorthand for --format json.")(fn)
    fn = click.option("--format", "fmt",
                      type=click.Choice(["table", "json", "csv", "dot"]),
                      default="table", help="Output format.")(fn)
    return fn


def cox_options(fn):
    fn = click.option("--matrix", "matrix_path",
                      type=click.Path(exists=True, dir_okay=False),
                      default=None,
                      help='Coxeter matrix JSON file {"m": [[...]]}, '
                           "0 meaning an infinite bond.")(fn)
    fn = click.argument("spec", required=False)(fn)
    return fn


def graph_option(fn):
    return click.option("--graph", "graph_path",
                        type=click.Path(exists=True, dir_okay=False),
                        default=None,
                        help="Edge-list file for a non-Coxeter graph.")(fn)


def _fmt_of(fmt: str, as_json: bool) -> str:
    return "json" if as_json else fmt


def _no_dot(fmt: str):
    if fmt == "dot":
        raise click.UsageError("dot output only makes sense for export")


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Talk to a running service instead of computing in process.")
@click.pass_context
def main(ctx, server):
    """Finite Coxeter groups, Bruhat graphs, and their discrete curvature."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command("group")
@cox_options
@output_options
@click.pass_context
def group_cmd(ctx, spec, matrix_path, fmt, as_json, out):
    """Build a group and print its summary."""
    fmt = _fmt_of(fmt, as_json)
    _no_dot(fmt)
    data = _post(ctx.obj["server"], "/group", _cox_payload(spec, matrix_path))
    config = {"target": spec or matrix_path, "format": fmt}
    if fmt == "json":
        _emit(_json_report("group", config, data), out)
        return
    if fmt == "csv":
        rows = [[i, c] for i, c in enumerate(data["length_histogram"])]
        _emit(_csv(["length", "count"], rows), out)
        return
    hist = " ".join(str(c) for c in data["length_histogram"])
    lines = [
        f"type:             {data['target']}",
        f"order:            {data['order']}",
        f"rank:             {data['rank']}",
        f"reflections:      {data['num_reflections']}",
        f"positive roots:   {data['num_positive_roots']}",
        f"longest length:   {data['longest_length']}",
        f"length histogram: {hist}",
    ]
    _emit("\n".join(lines) + "\n", out)


@main.command("ricci")
@cox_options
@graph_option
@click.option("--vertex", default=None, metavar="V",
              help="Compute at one vertex; 'e' is the identity.")
@click.option("--all", "all_vertices", is_flag=True,
              help="Compute at every vertex.")
@click.option("--emit-minimizer", is_flag=True,
              help="Include the minimizing function in the report.")
@click.option("--force", is_flag=True, help="Lift the size guard.")
@output_options
@click.pass_context
def ricci_cmd(ctx, spec, matrix_path, graph_path, vertex, all_vertices,
              emit_minimizer, force, fmt, as_json, out):
    """Discrete Ricci curvature of a Bruhat graph or a plain graph."""
    fmt = _fmt_of(fmt, as_json)
    _no_dot(fmt)
    payload = _graph_payload(spec, matrix_path, graph_path)
    if vertex is not None:
        if vertex == "e":
            payload["vertex"] = 0
        else:
            try:
                payload["vertex"] = int(vertex)
            except ValueError:
                raise click.UsageError(f"bad vertex {vertex!r}")
    payload.update(all_vertices=all_vertices, emit_minimizer=emit_minimizer,
                   force=force)
    data = _post(ctx.obj["server"], "/ricci", payload)
    config = {"target": spec or matrix_path or graph_path, "vertex": vertex,
              "all": all_vertices, "force": force, "format": fmt}
    if fmt == "json":
        _emit(_json_report("ricci", config, data), out)
    elif fmt == "csv":
        rows = [[v["vertex"], v["ric"], v["form_order"], v["solver"]]
                for v in data["vertices"]]
        _emit(_csv(["vertex", "ric", "form_order", "solver"], rows), out)
    else:
        lines = [
            f"target:     {data['target']}",
            f"vertices:   {data['n']}",
            f"ricci:      {_f(data['ric'])}",
            f"argmin:     {data['argmin']}",
            f"transitive: {_f(data['transitive'])}",
        ]
        if len(data["vertices"]) > 1:
            body = _table(["vertex", "ric", "solver"],
                          [[v["vertex"], v["ric"], v["solver"]]
                           for v in data["vertices"]])
            lines.append(body.rstrip("\n"))
        if emit_minimizer:
            for v in data["vertices"]:
                if v["minimizer"] is None:
                    continue
                lines.append(f"minimizer at {v['vertex']}:")
                lines.append(_table(["vertex", "f"], v["minimizer"]).rstrip("\n"))
        if data["passed"] is not None:
            verdict = "PASS" if data["passed"] else "FAIL"
            lines.append(f"verdict:    Ric = 2 {verdict}")
        _emit("\n".join(lines) + "\n", out)
    if data["passed"] is False:
        ctx.exit(1)


@main.command("spectral")
@cox_options
@graph_option
@click.option("--force", is_flag=True,
              help="Lift the size guard (hard limit stays at 20000).")
@output_options
@click.pass_context
def spectral_cmd(ctx, spec, matrix_path, graph_path, force, fmt, as_json, out):
    """Laplacian spectral gap."""
    fmt = _fmt_of(fmt, as_json)
    _no_dot(fmt)
    payload = _graph_payload(spec, matrix_path, graph_path)
    payload["force"] = force
    data = _post(ctx.obj["server"], "/spectral", payload)
    config = {"target": spec or matrix_path or graph_path, "force": force,
              "format": fmt}
    if fmt == "json":
        _emit(_json_report("spectral", config, data), out)
    elif fmt == "csv":
        rows = [[data["n"], data["gap"], data["lambda_max"],
                 data["zero_multiplicity"], data["connected"]]]
        _emit(_csv(["n", "gap", "lambda_max", "zero_multiplicity",
                    "connected"], rows), out)
    else:
        lines = [
            f"target:            {data['target']}",
            f"vertices:          {data['n']}",
            f"spectral gap:      {_f(data['gap'])}",
            f"lambda max:        {_f(data['lambda_max'])}",
            f"zero multiplicity: {data['zero_multiplicity']}",
            f"connected:         {_f(data['connected'])}",
        ]
        if data["passed"] is not None:
            verdict = "PASS" if data["passed"] else "FAIL"
            lines.append(f"verdict:           lambda >= 2 {verdict}")
        _emit("\n".join(lines) + "\n", out)
    if data["passed"] is False:
        ctx.exit(1)


@main.command("iso")
@cox_options
@graph_option
@click.option("--samples", default=10_000, show_default=True,
              help="Random subsets to draw in sampled mode.")
@click.option("--seed", default=0, show_default=True)
@click.option("--exhaustive", is_flag=True,
              help="Check every subset (20 vertices at most).")
@click.option("--force", is_flag=True, help="Lift the size guard.")
@output_options
@click.pass_context
def iso_cmd(ctx, spec, matrix_path, graph_path, samples, seed, exhaustive,
            force, fmt, as_json, out):
    """Isoperimetric bounds over random or all vertex subsets."""
    fmt = _fmt_of(fmt, as_json)
    _no_dot(fmt)
    payload = _graph_payload(spec, matrix_path, graph_path)
    payload.update(mode="exhaustive" if exhaustive else "sampled",
                   seed=seed, samples=samples, force=force)
    data = _post(ctx.obj["server"], "/iso", payload)
    config = {"target": spec or matrix_path or graph_path,
              "mode": payload["mode"], "seed": seed, "samples": samples,
              "format": fmt}
    if fmt == "json":
        _emit(_json_report("iso", config, data), out)
    elif fmt == "csv":
        cols = ["label", "size", "boundary", "bound", "bound_corollary",
                "bound_theorem", "slack", "passed"]
        rows = [[r[c] for c in cols] for r in data["reports"]]
        _emit(_csv(cols, rows), out)
    else:
        lines = [
            f"target:    {data['target']}",
            f"mode:      {data['mode']}",
            f"seed:      {_f(data['seed'])}",
            f"vertices:  {data['n']}",
            f"gap:       {_f(data['gap'])}",
            f"ricci:     {_f(data['ric'])}",
            f"checked:   {data['checked']}",
            f"failures:  {data['failures']}",
            f"min slack: {_f(data['min_slack'])}",
        ]
        failing = [r for r in data["reports"] if not r["passed"]]
        if failing:
            body = _table(
                ["label", "size", "boundary", "bound", "slack"],
                [[r["label"], r["size"], r["boundary"], r["bound"],
                  r["slack"]] for r in failing],
            )
            lines.append(body.rstrip("\n"))
        verdict = "PASS" if data["passed"] else "FAIL"
        lines.append(f"verdict:   isoperimetric bounds {verdict}")
        _emit("\n".join(lines) + "\n", out)
    if not data["passed"]:
        ctx.exit(1)


@main.command("classes")
@cox_options
@output_options
@click.pass_context
def classes_cmd(ctx, spec, matrix_path, fmt, as_json, out):
    """Second-sphere classes and their dihedral subgroups."""
    fmt = _fmt_of(fmt, as_json)
    _no_dot(fmt)
    data = _post(ctx.obj["server"], "/classes", _cox_payload(spec, matrix_path))
    config = {"target": spec or matrix_path, "format": fmt}
    if fmt == "json":
        _emit(_json_report("classes", config, data), out)
        return
    cols = ["representative", "size", "m", "subgroup_order",
            "num_reflections", "saturated", "proper_pair_closure"]
    rows = [[c[k] for k in cols] for c in data["classes"]]
    if fmt == "csv":
        _emit(_csv(cols, rows), out)
        return
    lines = [
        f"target:       {data['target']}",
        f"order:        {data['order']}",
        f"sphere2 size: {data['sphere2_size']}",
        f"classes:      {data['num_classes']}",
        _table(cols, rows).rstrip("\n"),
    ]
    _emit("\n".join(lines) + "\n", out)


@main.command("check")
@cox_options
@click.option("--seed", default=0, show_default=True)
@click.option("--samples", default=1000, show_default=True,
              help="Subsets for the sampled isoperimetric check.")
@click.option("--functions", default=25, show_default=True,
              help="Random functions per operator identity check.")
@output_options
@click.pass_context
def check_cmd(ctx, spec, matrix_path, seed, samples, functions, fmt, as_json,
              out):
    """Run the full invariant suite against one group."""
    fmt = _fmt_of(fmt, as_json)
    _no_dot(fmt)
    payload = _cox_payload(spec, matrix_path)
    payload.update(seed=seed, samples=samples, functions=functions)
    data = _post(ctx.obj["server"], "/check", payload)
    config = {"target": spec or matrix_path, "seed": seed, "samples": samples,
              "functions": functions, "format": fmt}
    if fmt == "json":
        _emit(_json_report("check", config, data), out)
    elif fmt == "csv":
        rows = [[c["name"], c["verdict"]] for c in data["checks"]]
        _emit(_csv(["name", "verdict"], rows), out)
    else:
        lines = [
            f"target:      {data['target']}",
            f"order:       {data['order']}",
            f"reflections: {data['num_reflections']}",
            f"seed:        {data['seed']}",
        ]
        for c in data["checks"]:
            lines.append(f"  {c['verdict']:4} {c['name']}")
        lines.append(f"result: {'PASS' if data['passed'] else 'FAIL'}")
        _emit("\n".join(lines) + "\n", out)
    if not data["passed"]:
        ctx.exit(1)


@main.command("export")
@cox_options
@graph_option
@click.option("--what", type=click.Choice(["group", "roots", "edges", "dot"]),
              default="group", show_default=True,
              help="What to export.")
@output_options
@click.pass_context
def export_cmd(ctx, spec, matrix_path, graph_path, what, fmt, as_json, out):
    """Export the group, its root system, or the graph itself."""
    fmt = _fmt_of(fmt, as_json)
    if fmt == "dot":
        what = "dot"
    payload = _graph_payload(spec, matrix_path, graph_path)
    payload["what"] = what
    data = _post(ctx.obj["server"], "/export", payload)
    if data["text"] is not None:
        _emit(data["text"], out)
    else:
        _emit(canonical_dumps(data["data"]), out)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve_cmd(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
