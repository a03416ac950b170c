"""
Command-line front end.

Exit codes: 0 on success (including an INCONCLUSIVE verdict), 2 for bad
input, 3 when the coset limit is reached.  Input files that do not exist
are looked up by name in the bundled data directory, so
``borromean wirtinger borromean.pd`` works from anywhere.
"""

from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path

import click

from . import __version__, icosa
from .cosets import DEFAULT_MAX_COSETS, Exhausted, enumerate_cosets
from .decide import TargetTooLarge, find_homomorphisms, small_targets
from .homology import h1
from .links import LinkDiagram, MissingFraming, parse_pd, surgery_presentation, wirtinger
from .presentation import Presentation, parse_presentation, simplify
from .words import ParseError

EXIT_INPUT = 2
EXIT_EXHAUSTED = 3

_STRING_LIST = {"type": "array", "items": {"type": "string"}}
_PRESENTATION = {
    "type": "object",
    "required": ["generators", "relators"],
    "properties": {"generators": _STRING_LIST, "relators": _STRING_LIST},
}
_ABELIAN = {
    "type": "object",
    "required": ["free_rank", "torsion", "text"],
    "properties": {
        "free_rank": {"type": "integer", "minimum": 0},
        "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "text": {"type": "string"},
    },
}
_HOM = {
    "type": "object",
    "required": ["target", "degree", "surjective", "assignment"],
    "properties": {
        "target": {"type": "string"},
        "degree": {"type": "integer"},
        "surjective": {"type": "boolean"},
        "assignment": {"type": "object", "additionalProperties": {"type": "string"}},
    },
}
_ORDER = {"type": ["integer", "null"], "minimum": 1}
_GOLDEN = {
    "type": "object",
    "required": ["a", "b"],
    "properties": {"a": {"type": "string"}, "b": {"type": "string"}},
}
_VECTOR = {"type": "array", "items": _GOLDEN, "minItems": 3, "maxItems": 3}


def _command(name, props, required=None):
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": ["command"] + (required if required is not None else list(props)),
        "properties": {"command": {"const": name}, **props},
    }


#: JSON Schema of the ``--json`` output of every command.
SCHEMAS = {
    "wirtinger": _command(
        "wirtinger",
        {
            "presentation": _PRESENTATION,
            "meridians": _STRING_LIST,
            "simplified": {"type": "boolean"},
        },
    ),
    "h1": _command("h1", {"h1": _ABELIAN}),
    "surgery": _command(
        "surgery",
        {
            "presentation": _PRESENTATION,
            "framings": {"type": "array", "items": {"type": "integer"}},
            "simplified": {"type": "boolean"},
        },
    ),
    "decide": _command(
        "decide",
        {
            "order": _ORDER,
            "exhausted": {"type": "boolean"},
            "max_cosets": {"type": "integer"},
            "cosets_defined": {"type": ["integer", "null"]},
            "surjection": {"oneOf": [_HOM, {"type": "null"}]},
        },
    ),
    "distinguish": _command(
        "distinguish",
        {
            "verdict": {"enum": ["DIFFERENT", "INCONCLUSIVE"]},
            "reason": {"type": "string"},
            "framings": {"type": "array", "items": {"type": "integer"}},
            "groups": {
                "type": "array",
                "minItems": 2,
                "maxItems": 2,
                "items": {
                    "type": "object",
                    "required": ["input", "order", "h1", "a5_surjections"],
                    "properties": {
                        "input": {"type": "string"},
                        "order": _ORDER,
                        "h1": _ABELIAN,
                        "a5_surjections": {"type": ["integer", "null"]},
                    },
                },
            },
        },
    ),
    "icosa counts": _command(
        "icosa counts",
        {
            "vertices": {"const": 12},
            "edges": {"const": 30},
            "faces": {"const": 20},
            "rotations": {
                "type": "object",
                "required": ["vertex", "edge", "face", "identity"],
                "additionalProperties": {"type": "integer"},
            },
        },
    ),
    "icosa rotations": _command(
        "icosa rotations",
        {
            "rotations": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["kind", "order", "matrix", "axis", "permutation"],
                    "properties": {
                        "kind": {"enum": ["identity", "vertex", "face", "edge"]},
                        "order": {"enum": [1, 2, 3, 5]},
                        "matrix": {"type": "array", "items": _VECTOR, "minItems": 3, "maxItems": 3},
                        "axis": {"oneOf": [_VECTOR, {"type": "null"}]},
                        "permutation": {"type": "string"},
                    },
                },
            }
        },
    ),
    "icosa octahedra": _command(
        "icosa octahedra",
        {
            "octahedra": {
                "type": "array",
                "minItems": 5,
                "maxItems": 5,
                "items": {
                    "type": "object",
                    "required": ["label", "vertices"],
                    "properties": {
                        "label": {"type": "integer"},
                        "vertices": {"type": "array", "items": _VECTOR, "minItems": 6, "maxItems": 6},
                    },
                },
            }
        },
    ),
    "icosa certify": _command(
        "icosa certify",
        {
            "ok": {"type": "boolean"},
            "order": {"type": "integer"},
            "kernel_size": {"type": "integer"},
            "image_order": {"type": "integer"},
            "all_even": {"type": "boolean"},
            "homomorphism": {"type": "boolean"},
            "labels": {"type": "object", "additionalProperties": {"type": "string"}},
        },
    ),
    "icosa export": _command(
        "icosa export",
        {
            "vertices": {"type": "array", "items": _VECTOR},
            "edges": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
            "faces": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        },
    ),
}


class InputError(click.ClickException):
    exit_code = EXIT_INPUT


def data_dir() -> Path:
    return Path(str(resources.files("borromean") / "data"))


def resolve(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    bundled = data_dir() / path
    if bundled.exists():
        return bundled
    raise InputError(f"no such file: {path} (not in the bundled data either)")


def _read(path: str) -> str:
    try:
        return resolve(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None


def load_diagram(path: str) -> LinkDiagram:
    try:
        return parse_pd(_read(path))
    except (ParseError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def load_group(path: str) -> Presentation:
    """A presentation file, or a PD file read as its Wirtinger presentation."""
    text = _read(path)
    try:
        if text.lstrip().startswith("<"):
            return parse_presentation(text)
        return wirtinger(parse_pd(text))[0]
    except (ParseError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def parse_framings(text: str) -> list:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise InputError(f"framings must be a comma-separated list of integers, got {text!r}") from None


def _surgery(d: LinkDiagram, framings: list, path: str, simplify_result: bool = True) -> Presentation:
    if len(framings) != d.num_components:
        raise InputError(f"{path} has {d.num_components} component(s) but {len(framings)} framing(s) were given")
    try:
        return surgery_presentation(d, framings, simplify=simplify_result)
    except MissingFraming as exc:
        raise InputError(f"missing framing for component {exc.args[0]}") from None


def _emit(as_json: bool, payload: dict, text: str) -> None:
    if as_json:
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(text)


json_option = click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
framings_option = click.option(
    "-f", "--framings", required=True, help="Comma-separated integer framing per component, e.g. -1,-1,-1."
)
max_cosets_option = click.option(
    "--max-cosets",
    type=click.IntRange(min=1),
    default=DEFAULT_MAX_COSETS,
    show_default=True,
    help="Coset limit for enumeration.",
)


@click.group()
@click.version_option(version=__version__, prog_name="borromean")
def main():
    """Presentations, surgery and certificates for link diagrams."""


@main.command("wirtinger")
@click.argument("pd_path")
@click.option("--simplify", "do_simplify", is_flag=True, help="Eliminate redundant generators.")
@json_option
def cmd_wirtinger(pd_path, do_simplify, as_json):
    """Wirtinger presentation of a PD diagram."""
    d = load_diagram(pd_path)
    P, meridians = wirtinger(d)
    if do_simplify:
        P, _ = simplify(P, keep=list(meridians.components))
    payload = {
        "command": "wirtinger",
        "presentation": P.to_json(),
        "meridians": list(meridians.components),
        "simplified": do_simplify,
    }
    _emit(as_json, payload, str(P))


@main.command("h1")
@click.argument("path")
@json_option
def cmd_h1(path, as_json):
    """First homology of a presentation (.pres) or link complement (.pd)."""
    group = h1(load_group(path))
    _emit(as_json, {"command": "h1", "h1": group.to_json()}, str(group))


@main.command("surgery")
@click.argument("pd_path")
@framings_option
@click.option("--raw", is_flag=True, help="Keep every Wirtinger generator.")
@json_option
def cmd_surgery(pd_path, framings, raw, as_json):
    """
    Dehn surgery presentation.  Each component gets the relator
    meridian^f * longitude, with the 0-framed longitude.  Framing -1 on every
    component of borromean.pd gives the Poincare homology sphere.
    """
    d = load_diagram(pd_path)
    fr = parse_framings(framings)
    P = _surgery(d, fr, pd_path, simplify_result=not raw)
    payload = {"command": "surgery", "presentation": P.to_json(), "framings": fr, "simplified": not raw}
    _emit(as_json, payload, str(P))


def _first_surjection(P: Presentation):
    for name, group in small_targets():
        try:
            homs = find_homomorphisms(P, group, surjective_only=True, budget=1_000_000, target_name=name)
        except TargetTooLarge:
            continue
        if homs:
            return homs[0]
    return None


@main.command("decide")
@click.argument("path")
@max_cosets_option
@click.option("--strategy", type=click.Choice(["hlt", "felsch"]), default="hlt", show_default=True)
@json_option
def cmd_decide(path, max_cosets, strategy, as_json):
    """Order by coset enumeration, plus a surjection onto a small group when there is one."""
    P = load_group(path)
    try:
        table = enumerate_cosets(P, max_cosets=max_cosets, strategy=strategy)
        order, defined, exhausted = table.index, table.total_defined, False
    except Exhausted as exc:
        order, defined, exhausted = None, exc.total_defined, True
    hom = _first_surjection(P) if order != 1 else None
    parts = [f"order {order}" if order else f"order unknown (coset limit {max_cosets} reached)"]
    if hom is not None:
        parts.append(f"surjection onto {hom.target_name}: {hom}")
    payload = {
        "command": "decide",
        "order": order,
        "exhausted": exhausted,
        "max_cosets": max_cosets,
        "cosets_defined": defined,
        "surjection": hom.to_json() if hom else None,
    }
    _emit(as_json, payload, "; ".join(parts))
    if exhausted:
        sys.exit(EXIT_EXHAUSTED)


def _invariants(path: str, d: LinkDiagram, fr: list, max_cosets: int) -> dict:
    P = _surgery(d, fr, path)
    try:
        order = enumerate_cosets(P, max_cosets=max_cosets).index
    except Exhausted:
        order = None
    try:
        a5 = len(find_homomorphisms(P, dict(small_targets())["A5"], surjective_only=True, budget=1_000_000))
    except TargetTooLarge:
        a5 = None
    return {"input": path, "order": order, "h1": h1(P), "a5_surjections": a5}


def _compare(a: dict, b: dict):
    if a["order"] is not None and b["order"] is not None and a["order"] != b["order"]:
        return f"order {a['order']} vs order {b['order']}"
    if a["h1"] != b["h1"]:
        return f"h1 {a['h1']} vs h1 {b['h1']}"
    if a["a5_surjections"] is not None and b["a5_surjections"] is not None:
        if a["a5_surjections"] != b["a5_surjections"]:
            return f"{a['a5_surjections']} vs {b['a5_surjections']} surjections onto A5"
    return None


@main.command("distinguish")
@click.argument("pd_a")
@click.argument("pd_b")
@framings_option
@max_cosets_option
@json_option
def cmd_distinguish(pd_a, pd_b, framings, max_cosets, as_json):
    """
    Perform the same surgery on two diagrams and compare the groups.

    Prints DIFFERENT when an invariant (order, H1, number of surjections onto
    A5) disagrees, and INCONCLUSIVE otherwise.  Agreement proves nothing, so
    there is no SAME verdict.
    """
    da, db = load_diagram(pd_a), load_diagram(pd_b)
    if da.num_components != db.num_components:
        raise InputError(f"{pd_a} has {da.num_components} components but {pd_b} has {db.num_components}")
    fr = parse_framings(framings)
    ia = _invariants(pd_a, da, fr, max_cosets)
    ib = _invariants(pd_b, db, fr, max_cosets)
    why = _compare(ia, ib)
    verdict = "DIFFERENT" if why else "INCONCLUSIVE"
    if not why:
        orders = ", ".join(str(i["order"]) if i["order"] else "unknown" for i in (ia, ib))
        why = f"orders {orders}; h1 {ia['h1']}; no invariant tells them apart"
    payload = {
        "command": "distinguish",
        "verdict": verdict,
        "reason": why,
        "framings": fr,
        "groups": [{**i, "h1": i["h1"].to_json()} for i in (ia, ib)],
    }
    _emit(as_json, payload, f"{verdict} ({why})")


@main.group("icosa")
def cmd_icosa():
    """Exact icosahedron geometry and its rotation group."""


@cmd_icosa.command("counts")
@json_option
def icosa_counts(as_json):
    V, E, F = icosa.icosahedron().counts()
    c = icosa.census()
    text = (
        f"V={V} E={E} F={F}\n"
        f"rotations: {c['vertex']} vertex-axis + {c['edge']} edge-axis + {c['face']} face-axis "
        f"+ {c['identity']} identity = {sum(c.values())}"
    )
    _emit(as_json, {"command": "icosa counts", "vertices": V, "edges": E, "faces": F, "rotations": c}, text)


@cmd_icosa.command("rotations")
@json_option
def icosa_rotations(as_json):
    rows = []
    lines = []
    for k, r in enumerate(icosa.rotation_group(), 1):
        p = icosa.action_on_octahedra(r)
        rows.append({**r.to_json(), "permutation": str(p)})
        matrix = "; ".join(", ".join(str(x) for x in row) for row in r.matrix.rows)
        lines.append(f"{k:2d} {r.kind:8s} {str(p):10s} [{matrix}]")
    _emit(as_json, {"command": "icosa rotations", "rotations": rows}, "\n".join(lines))


@cmd_icosa.command("octahedra")
@json_option
def icosa_octahedra(as_json):
    octs = icosa.five_octahedra()
    rows = [{"label": k, "vertices": [v.to_json() for v in _sorted(o)]} for k, o in enumerate(octs, 1)]
    lines = [
        f"{k}: " + "  ".join("(" + ", ".join(str(c) for c in v) + ")" for v in _sorted(o))
        for k, o in enumerate(octs, 1)
    ]
    _emit(as_json, {"command": "icosa octahedra", "octahedra": rows}, "\n".join(lines))


def _sorted(points):
    return sorted(points, key=lambda v: v.to_floats(), reverse=True)


@cmd_icosa.command("certify")
@json_option
def icosa_certify(as_json):
    cert = icosa.certify_A5_isomorphism()
    payload = {"command": "icosa certify", **{k: v for k, v in cert.to_json().items() if k != "correspondence"}}
    _emit(as_json, payload, cert.summary())
    if not cert.ok:
        sys.exit(1)


@cmd_icosa.command("export")
@click.option("--format", "fmt", type=click.Choice(["off", "json"]), default="off", show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True), help="Write to a file.")
def icosa_export(fmt, output):
    """Icosahedron as OFF (12 significant digits) or exact JSON."""
    if fmt == "off":
        text = icosa.to_off()
    else:
        text = json.dumps({"command": "icosa export", **icosa.to_json()}, indent=2) + "\n"
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)


if __name__ == "__main__":  # pragma: no cover
    main()
