"""Command-line surface: build constructions, compute degrees, verify.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 on usage or input errors.  Reports render as text by default or as
canonical JSON with ``--format json``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .complex_core import Complex, f_vector_and_euler, simplex
from .constructions import (
    ConstructionBundle,
    build_double_cone_sphere,
    build_facet_cone_sphere,
    build_join_cone_sphere,
    build_stacked_sphere,
)
from .disc_delta import build_delta, disc_sign_census
from .errors import (
    InconsistentAlg,
    KernelRankNotOne,
    NonOrientable,
    NotClosed,
    SphereForgeError,
)
from .formats import (
    bundle_from_json,
    bundle_to_json,
    complex_from_json,
    complex_to_json,
    dumps_canonical,
    map_from_text,
)
from .homology import sphere_check, top_kernel_generator
from .minimality import verify_small_sphere_bounds
from .orientation import coherent_orientation, fundamental_cycle
from .simplicial_map import VertexMap, degree_by_counting, degree_by_cycle


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    text: str
    data: dict

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return dumps_canonical(self.data)
        return self.text if self.text.endswith("\n") else self.text + "\n"


def _summary_lines(bundle: ConstructionBundle) -> list[str]:
    fv, euler = f_vector_and_euler(bundle.source)
    return [
        f"{bundle.label}: degree {bundle.expected_degree}, "
        f"{len(bundle.source.vertices)} vertices, {len(bundle.source.facets)} facets",
        f"f-vector {fv.counts} (chi = {euler})",
    ]


def run_build(
    construction: str,
    n: int | None = None,
    d: int | None = None,
    k: int | None = None,
    variant: str | None = None,
    out: str | None = None,
) -> CommandResult:
    """Build one construction and optionally write it to ``out``."""

    def need(value, flag):
        if value is None:
            raise SphereForgeError(f"--{flag} is required for {construction}")
        return value

    if construction == "delta":
        disc = build_delta(need(d, "d"))
        counts = disc_sign_census(disc)
        fv, euler = f_vector_and_euler(disc.complex)
        payload = json.loads(complex_to_json(disc.complex, disc.signs))
        text = "\n".join(
            [
                f"delta d={disc.d}: {fv[0]} vertices, {fv[2]} triangles "
                f"({counts.positives} positive, {counts.negatives} negative)",
                f"f-vector {fv.counts} (chi = {euler})",
            ]
        )
        if out:
            Path(out).write_text(dumps_canonical(payload))
            text += f"\nwrote {out}"
        return CommandResult(0, text, payload)

    if construction == "join-cone":
        bundle = build_join_cone_sphere(need(n, "n"), need(d, "d"))
    elif construction == "double-cone":
        bundle = build_double_cone_sphere(
            need(n, "n"), need(d, "d"), need(variant, "variant")
        )
    elif construction == "facet-cone":
        bundle = build_facet_cone_sphere(need(n, "n"), need(k, "k"))
    elif construction == "stacked":
        bundle = build_stacked_sphere(need(n, "n"))
    else:
        raise SphereForgeError(f"unknown construction {construction!r}")

    payload = json.loads(bundle_to_json(bundle))
    text = "\n".join(_summary_lines(bundle))
    if out:
        Path(out).write_text(bundle_to_json(bundle))
        text += f"\nwrote {out}"
    return CommandResult(0, text, payload)


def _adhoc_bundle(K: Complex, f: VertexMap) -> ConstructionBundle:
    """Wrap a raw complex + map for degree computation.

    The target is the standard sphere of matching dimension; bases are
    the least target facet and the least source facet with a
    nondegenerate image (any facet if the map collapses everything).
    """
    from .complex_core import standard_sphere

    target = standard_sphere(K.dimension)
    source_base = K.facets[0].vertices
    for facet in K.facets:
        image = {f.assignment.get(v) for v in facet.vertices}
        if None in image:
            raise SphereForgeError(
                f"map does not cover facet [{facet}]"
            )
        if len(image) == len(facet.vertices):
            source_base = facet.vertices
            break
    return ConstructionBundle(
        source=K,
        target=target,
        vertex_map=f,
        source_base=source_base,
        target_base=target.facets[0].vertices,
        expected_degree=None,
        expected_vertices=len(K.vertices),
        label="ad-hoc",
    )


def _degree_payload(bundle: ConstructionBundle, method: str) -> tuple[dict, list[str], bool]:
    data: dict = {"label": bundle.label, "method": method}
    lines = [f"bundle: {bundle.label}"]
    agree = True
    if method in ("counting", "both"):
        report = degree_by_counting(bundle)
        data["counting"] = report.as_dict()
        lines.append(f"degree = {report.degree} (counting)")
        for sigma in sorted(report.per_facet):
            plus = ", ".join(f"[{t}]" for t in report.alpha_plus[sigma]) or "-"
            minus = ", ".join(f"[{t}]" for t in report.alpha_minus[sigma]) or "-"
            lines.append(f"  [{sigma}]: alg = {report.per_facet[sigma]}")
            lines.append(f"    alpha+ : {plus}")
            lines.append(f"    alpha- : {minus}")
        if report.degenerate_facets:
            lines.append(
                "  degenerate facets: "
                + ", ".join(f"[{t}]" for t in report.degenerate_facets)
            )
    if method in ("cycle", "both"):
        value = degree_by_cycle(bundle)
        data["cycle"] = value
        lines.append(f"degree = {value} (cycle)")
    if method == "both":
        agree = data["counting"]["degree"] == data["cycle"]
        lines.append("methods agree" if agree else "METHOD DISAGREEMENT")
    data["agree"] = agree
    return data, lines, agree


def run_degree(
    bundle_path: str | None = None,
    complex_path: str | None = None,
    map_path: str | None = None,
    method: str = "both",
) -> CommandResult:
    """Degree of a bundled map, or of a map file against a complex file."""
    if bundle_path:
        bundle = bundle_from_json(Path(bundle_path).read_text())
    else:
        if not (complex_path and map_path):
            raise SphereForgeError("need --bundle, or both --in and --map")
        K, _ = complex_from_json(Path(complex_path).read_text())
        f = map_from_text(Path(map_path).read_text())
        bundle = _adhoc_bundle(K, f)
    data, lines, agree = _degree_payload(bundle, method)
    exit_code = 0 if agree else 1
    return CommandResult(exit_code, "\n".join(lines), data)


def _verify_bundle_checks(bundle: ConstructionBundle) -> tuple[dict, list[str], bool]:
    n = bundle.source.dimension
    level = "certify_low_dim" if n <= 3 else "necessary"
    checks: list[tuple[str, bool, str]] = []

    vertices_ok = len(bundle.source.vertices) == bundle.expected_vertices
    checks.append(
        ("vertex_count", vertices_ok, f"{len(bundle.source.vertices)} vertices")
    )
    sphere_report = sphere_check(bundle.source, n, level)
    checks.append(("sphere_check", sphere_report.passed, f"level {level}"))

    counting = degree_by_counting(bundle)
    cycle = degree_by_cycle(bundle)
    agree = counting.degree == cycle
    checks.append(
        ("dual_oracle_agreement", agree, f"counting {counting.degree}, cycle {cycle}")
    )
    if bundle.expected_degree is not None:
        checks.append(
            (
                "expected_degree",
                counting.degree == bundle.expected_degree and agree,
                f"expected {bundle.expected_degree}",
            )
        )

    oriented = coherent_orientation(bundle.source, simplex(bundle.source_base), 1)
    cycle_coeffs = fundamental_cycle(oriented).coefficients
    kernel = top_kernel_generator(bundle.source)
    base = simplex(bundle.source_base)
    flip = 1 if kernel[base] == cycle_coeffs[base] else -1
    fundamental_ok = all(
        cycle_coeffs[s] == flip * kernel[s] for s in cycle_coeffs
    )
    checks.append(
        ("fundamental_cycle_matches_kernel", fundamental_ok, "entrywise up to sign")
    )

    ok = all(c[1] for c in checks)
    lines = [f"bundle: {bundle.label}"]
    for name, passed, detail in checks:
        mark = "pass" if passed else "FAIL"
        lines.append(f"  [{mark}] {name}: {detail}")
    data = {
        "label": bundle.label,
        "checks": [{"name": c[0], "ok": c[1], "detail": c[2]} for c in checks],
        "passed": ok,
        "sphere_check": sphere_report.as_dict(),
    }
    return data, lines, ok


def run_verify(
    what: str,
    in_path: str | None = None,
    n: int | None = None,
    d: int | None = None,
    level: str = "necessary",
    max_v: int = 7,
) -> CommandResult:
    """Dispatch to one of the verification suites."""
    if what == "sphere":
        if not in_path:
            raise SphereForgeError("verify sphere needs --in")
        K, _ = complex_from_json(Path(in_path).read_text())
        dim = K.dimension if n is None else n
        report = sphere_check(K, dim, level)
        lines = [f"sphere check (n = {dim}, level = {report.level})"]
        for item in report.items:
            mark = "pass" if item.ok else "FAIL"
            lines.append(f"  [{mark}] {item.name}: {item.detail}")
        lines.extend(f"  note: {note}" for note in report.notes)
        return CommandResult(
            0 if report.passed else 1, "\n".join(lines), report.as_dict()
        )

    if what == "disc-signs":
        if d is None:
            raise SphereForgeError("verify disc-signs needs --d")
        disc = build_delta(d)
        counts = disc_sign_census(disc)
        fv, euler = f_vector_and_euler(disc.complex)
        expectations = [
            ("triangles", fv[2] == 3 * d - 2, f"{fv[2]} = 3d-2"),
            ("positives", counts.positives == 2 * d - 1, f"{counts.positives} = 2d-1"),
            ("negatives", counts.negatives == d - 1, f"{counts.negatives} = d-1"),
            ("boundary_in_positive", counts.boundary_in_positive, ""),
            (
                "signs_match_orientation",
                counts.sign_agrees_with_orientation,
                "",
            ),
            ("euler", euler == 1, f"chi = {euler}"),
        ]
        ok = all(e[1] for e in expectations)
        lines = [f"disc d={d}: {counts.positives} positive, {counts.negatives} negative"]
        for name, passed, detail in expectations:
            lines.append(f"  [{'pass' if passed else 'FAIL'}] {name}: {detail}")
        data = {
            "d": d,
            "checks": [
                {"name": e[0], "ok": e[1], "detail": e[2]} for e in expectations
            ],
            "passed": ok,
        }
        return CommandResult(0 if ok else 1, "\n".join(lines), data)

    if what == "minimality":
        report = verify_small_sphere_bounds(max_v=max_v)
        sizes = ", ".join(f"v={v}: {c}" for v, c in sorted(report.census_sizes.items()))
        lines = [
            f"census sizes: {sizes}",
            f"independent search orders agree: {report.orders_agree}",
            f"max |degree| by vertex count: "
            + ", ".join(f"{v}: {m}" for v, m in sorted(report.max_degree_by_vertices.items())),
            f"no |degree| 2 with <= 6 vertices: {report.degree2_bound_ok}",
            f"no |degree| 3 with <= 7 vertices: {report.degree3_bound_ok}",
            f"degree 2 attained with 7 vertices: {report.degree2_attained_at_7}",
            f"degree 3 attained with 8 vertices: {report.degree3_attained_at_8}",
        ]
        for c in report.counterexamples:
            lines.append(f"  COUNTEREXAMPLE (implementation bug): {c}")
        return CommandResult(0 if report.passed else 1, "\n".join(lines), report.as_dict())

    if what == "bundle":
        if not in_path:
            raise SphereForgeError("verify bundle needs --in")
        bundle = bundle_from_json(Path(in_path).read_text())
        data, lines, ok = _verify_bundle_checks(bundle)
        return CommandResult(0 if ok else 1, "\n".join(lines), data)

    raise SphereForgeError(f"unknown verify target {what!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sphere-forge",
        description="Build triangulated spheres with prescribed-degree "
        "self-maps, compute degrees two ways, and verify the claims.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="build a construction")
    build.add_argument(
        "--construction",
        required=True,
        choices=["delta", "join-cone", "double-cone", "facet-cone", "stacked"],
    )
    build.add_argument("--n", type=int)
    build.add_argument("--d", type=int)
    build.add_argument("--k", type=int)
    build.add_argument("--variant", choices=["even", "odd"])
    build.add_argument("--out")
    build.add_argument("--format", choices=["text", "json"], default="text")

    degree = sub.add_parser("degree", help="compute the degree of a map")
    degree.add_argument("--bundle")
    degree.add_argument("--in", dest="in_path")
    degree.add_argument("--map", dest="map_path")
    degree.add_argument(
        "--method", choices=["counting", "cycle", "both"], default="both"
    )
    degree.add_argument("--format", choices=["text", "json"], default="text")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument(
        "what", choices=["sphere", "disc-signs", "minimality", "bundle"]
    )
    verify.add_argument("--in", dest="in_path")
    verify.add_argument("--n", type=int)
    verify.add_argument("--d", type=int)
    verify.add_argument(
        "--level", choices=["necessary", "certify"], default="necessary"
    )
    verify.add_argument("--max-v", type=int, default=7)
    verify.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "build":
            result = run_build(
                args.construction,
                n=args.n,
                d=args.d,
                k=args.k,
                variant=args.variant,
                out=args.out,
            )
        elif args.command == "degree":
            result = run_degree(
                bundle_path=args.bundle,
                complex_path=args.in_path,
                map_path=args.map_path,
                method=args.method,
            )
        else:
            result = run_verify(
                args.what,
                in_path=args.in_path,
                n=args.n,
                d=args.d,
                level=args.level,
                max_v=args.max_v,
            )
    except (InconsistentAlg, NonOrientable, KernelRankNotOne, NotClosed) as exc:
        # the input parsed fine but fails a mathematical check
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except (SphereForgeError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(result.render(args.format))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
