"""File formats: facet-list text, canonical JSON, and map files.

JSON is the interchange format; the text facet list exists for fixtures
and eyeballing.  Serialization is deterministic (sorted keys, canonical
facet order, two-space indent, trailing newline) so that build -> write
-> read -> write round-trips byte-identically.
"""

from __future__ import annotations

import json
from typing import Mapping

from .complex_core import Complex, Simplex, make_complex, simplex
from .constructions import ConstructionBundle
from .labels import VertexLabel, parse_label
from .simplicial_map import VertexMap


def dumps_canonical(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Facet-list text format


def complex_to_text(K: Complex) -> str:
    """One facet per line, labels separated by single spaces."""
    return "".join(f"{facet}\n" for facet in K.facets)


def complex_from_text(text: str) -> Complex:
    facets = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        facets.append([parse_label(tok) for tok in line.split()])
    return make_complex(facets)


# ---------------------------------------------------------------------------
# Complex JSON


def complex_to_json_obj(
    K: Complex, orientation: Mapping[Simplex, int] | None = None
) -> dict:
    obj = {
        "dimension": K.dimension,
        "vertices": [str(v) for v in K.vertices],
        "facets": [[str(v) for v in facet.vertices] for facet in K.facets],
    }
    if orientation is not None:
        obj["orientation"] = {str(f): s for f, s in orientation.items()}
    return obj


def complex_from_json_obj(obj: dict) -> tuple[Complex, dict[Simplex, int] | None]:
    K = make_complex(
        [[parse_label(tok) for tok in facet] for facet in obj["facets"]]
    )
    if K.dimension != obj.get("dimension", K.dimension):
        raise ValueError(
            f"dimension field {obj['dimension']} does not match facets (dim {K.dimension})"
        )
    declared = obj.get("vertices")
    if declared is not None and sorted(declared) != sorted(str(v) for v in K.vertices):
        raise ValueError("vertices field does not match the facet list")
    orientation = None
    if "orientation" in obj:
        orientation = {}
        for key, sign in obj["orientation"].items():
            if sign not in (1, -1):
                raise ValueError(f"orientation sign must be 1 or -1, got {sign!r}")
            orientation[simplex(parse_label(tok) for tok in key.split())] = sign
    return K, orientation


# ---------------------------------------------------------------------------
# Vertex-map files (one "from to" pair per line)


def map_to_text(f: VertexMap) -> str:
    pairs = sorted(f.assignment.items())
    return "".join(f"{src} {dst}\n" for src, dst in pairs)


def map_from_text(text: str) -> VertexMap:
    assignment: dict[VertexLabel, VertexLabel] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"map line needs exactly two labels: {line!r}")
        src, dst = (parse_label(t) for t in tokens)
        if src in assignment:
            raise ValueError(f"vertex {src} mapped twice")
        assignment[src] = dst
    return VertexMap(assignment)


# ---------------------------------------------------------------------------
# Bundle JSON


def bundle_to_json_obj(bundle: ConstructionBundle) -> dict:
    return {
        "source": complex_to_json_obj(bundle.source),
        "target": complex_to_json_obj(bundle.target),
        "map": [
            [str(src), str(dst)] for src, dst in sorted(bundle.vertex_map.items())
        ],
        "source_base": [str(v) for v in bundle.source_base],
        "expected_degree": bundle.expected_degree,
        "label": bundle.label,
    }


def bundle_from_json_obj(obj: dict) -> ConstructionBundle:
    source, _ = complex_from_json_obj(obj["source"])
    target, _ = complex_from_json_obj(obj["target"])
    assignment = {
        parse_label(src): parse_label(dst) for src, dst in obj["map"]
    }
    source_base = tuple(parse_label(tok) for tok in obj["source_base"])
    # the target base is pinned to the lexicographically least target facet
    target_base = target.facets[0].vertices
    return ConstructionBundle(
        source=source,
        target=target,
        vertex_map=VertexMap(assignment),
        source_base=source_base,
        target_base=target_base,
        expected_degree=obj["expected_degree"],
        expected_vertices=len(source.vertices),
        label=obj.get("label", "bundle"),
    )


def bundle_to_json(bundle: ConstructionBundle) -> str:
    return dumps_canonical(bundle_to_json_obj(bundle))


def bundle_from_json(text: str) -> ConstructionBundle:
    return bundle_from_json_obj(json.loads(text))


def complex_to_json(K: Complex, orientation=None) -> str:
    return dumps_canonical(complex_to_json_obj(K, orientation))


def complex_from_json(text: str) -> tuple[Complex, dict[Simplex, int] | None]:
    return complex_from_json_obj(json.loads(text))
