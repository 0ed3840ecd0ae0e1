"""Command-line front end, a thin client of the pipeline/service.

By default the pipeline runs in-process; with ``--server URL`` the same
request is POSTed to a running service instead, and ``--serve`` starts one.
Exit codes: 0 success, 2 bad group type, 3 bad genus, 4 bad lattice,
5 dual-strategy verification failure, 1 anything else.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .errors import GenusError, GroupSpecError, LatticeError, VerificationError
from .pipeline import SWEEP_PRESETS, run, sweep
from .root_datum import parse_group_spec
from .schemas import DEFAULT_ENUMERATION_CAP, Report, RunSpec

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BAD_TYPE = 2
EXIT_BAD_GENUS = 3
EXIT_BAD_LATTICE = 4
EXIT_VERIFY_FAILED = 5

_CONFIG_KEYS = {
    "type": "type",
    "lattice": "lattice",
    "central-rank": "central_rank",
    "central_rank": "central_rank",
    "genus": "genus",
    "max-enumeration": "max_enumeration",
    "max_enumeration": "max_enumeration",
    "verify": "verify",
    "format": "format",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hitchin-prym",
        description=(
            "Exact invariants of Hitchin-system abelianization for a "
            "reductive group and a curve genus."
        ),
    )
    parser.add_argument("--type", help='group type, e.g. "A2+B3" (empty for a torus)')
    parser.add_argument(
        "--lattice",
        help="character lattice: sc, adjoint, or file=PATH with a basis matrix",
    )
    parser.add_argument("--central-rank", type=int, help="rank of the central torus")
    parser.add_argument("--genus", type=int, help="curve genus (>= 2)")
    parser.add_argument(
        "--max-enumeration",
        type=int,
        help=f"Weyl enumeration cap (default {DEFAULT_ENUMERATION_CAP})",
    )
    parser.add_argument(
        "--verify",
        action="store_true",
        default=None,
        help="fail unless the closed form and the enumeration agree",
    )
    parser.add_argument("--format", choices=["text", "json"], help="output format")
    parser.add_argument(
        "--sweep",
        metavar="PRESET",
        help=f"run a built-in grid, one JSON report per line "
        f"({', '.join(sorted(SWEEP_PRESETS))})",
    )
    parser.add_argument("--config", help="flat key=value configuration file")
    parser.add_argument("--server", help="POST the request to a running service URL")
    parser.add_argument(
        "--serve", action="store_true", help="start the HTTP service and block"
    )
    parser.add_argument("--host", default="127.0.0.1", help="bind host for --serve")
    parser.add_argument("--port", type=int, default=8000, help="bind port for --serve")
    return parser


def _read_config(path: str) -> dict:
    values: dict = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[_CONFIG_KEYS[key]] = value.strip()
    return values


def _load_lattice(value: str):
    """Resolve a --lattice value to (kind, custom basis rows or None)."""
    if value.startswith("file="):
        path = value[len("file=") :]
        try:
            with open(path, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise LatticeError(f"cannot read lattice file {path}: {exc}") from exc
        try:
            if path.endswith(".json"):
                rows = json.loads(text)
            else:
                rows = [
                    [int(tok) for tok in line.split()]
                    for line in text.splitlines()
                    if line.strip()
                ]
            rows = [[int(x) for x in row] for row in rows]
        except (ValueError, TypeError) as exc:
            raise LatticeError(f"malformed lattice matrix in {path}: {exc}") from exc
        if not rows:
            raise LatticeError(f"lattice file {path} holds no matrix rows")
        return "custom", rows
    if value in ("sc", "simply_connected", "adjoint"):
        kind = "simply_connected" if value in ("sc", "simply_connected") else value
        return kind, None
    raise LatticeError(
        f"unknown lattice {value!r}; expected sc, adjoint or file=PATH"
    )


def parse_spec(argv) -> RunSpec:
    """Build a RunSpec from flags and an optional config file.

    Precedence: explicit flags, then keys embedded in the type string,
    then the config file, then defaults.
    """
    args = build_parser().parse_args(argv)
    config = _read_config(args.config) if args.config else {}

    type_text = args.type if args.type is not None else config.get("type", "")
    components, embedded_lattice, embedded_central = parse_group_spec(type_text)
    group = "+".join(f"{f}{r}" for f, r in components)

    lattice_value = args.lattice
    if lattice_value is None:
        lattice_value = embedded_lattice or config.get("lattice", "simply_connected")
    kind, custom = _load_lattice(lattice_value)

    central = args.central_rank
    if central is None:
        central = (
            embedded_central
            if embedded_central is not None
            else int(config.get("central_rank", 0))
        )

    genus = args.genus if args.genus is not None else config.get("genus")
    if genus is None:
        raise GenusError("genus is required (use --genus)")
    if int(genus) < 2:
        raise GenusError(f"genus must be >= 2, got {genus}")
    cap = args.max_enumeration
    if cap is None:
        cap = int(config.get("max_enumeration", DEFAULT_ENUMERATION_CAP))
    verify = args.verify
    if verify is None:
        verify = config.get("verify", "false").lower() in ("1", "true", "yes")
    fmt = args.format if args.format is not None else config.get("format", "text")

    return RunSpec(
        group=group,
        lattice=kind,
        custom_basis=custom,
        central_rank=central,
        genus=int(genus),
        enumeration_cap=cap,
        verify=verify,
        output_format=fmt,
    )


def format_text(report: Report) -> str:
    datum, cover = report.datum, report.cover
    dim, fib = report.dimension, report.fiber
    components = "+".join(datum.components) or "(torus)"
    lines = [
        f"group {components}  lattice {datum.lattice}  "
        f"central rank {datum.central_rank}  genus {cover.genus}",
        f"rank {datum.rank}  roots {datum.num_roots}  dim G {datum.dim_group}  "
        f"|W| {datum.weyl_order}  enumerated {'yes' if datum.enumerated else 'no'}",
        "derived group simply connected: "
        + ("yes" if datum.derived_simply_connected else "no"),
    ]
    for orbit in datum.orbits:
        lines.append(
            f"orbit {orbit.index}: component {orbit.component}, "
            f"size {orbit.size}, length {orbit.length}, "
            f"branch points {orbit.point_count}"
        )
    lines.append(
        f"cover: branch points {cover.branch_count}, "
        f"branch fiber {cover.branch_fiber_size}, "
        f"spectral genus {cover.spectral_genus}, "
        f"pullback degree {cover.pullback_degree}"
    )
    agreement = (
        "n/a" if dim.strategy_agreement is None
        else ("yes" if dim.strategy_agreement else "NO")
    )
    lines.append(
        f"dimension: hom {dim.hom_dim}, prym {dim.prym_dim}, "
        f"moduli {dim.moduli_dim}, strategies {'+'.join(dim.strategies)}, "
        f"agreement {agreement}"
    )
    lines.append(
        f"pairings: <triv,L> {dim.triv_lefschetz}, "
        f"<refl,L> {dim.reflection_lefschetz}, "
        f"<triv,H1> {dim.triv_h1}, <refl,H1> {dim.reflection_h1}"
    )
    lines.append(
        f"fiber: injective {'yes' if fib.injective else 'no'} ({fib.reason}), "
        f"exceptional roots {fib.exceptional_count}, "
        f"d {fib.pullback_degree}, bound {fib.bound}"
    )
    if fib.pgl2 is not None:
        lines.append(
            f"rank-1 adjoint exact count: {fib.pgl2.components} components, "
            f"fiber {fib.pgl2.per_component_fiber} each, "
            f"invariant quotient {fib.pgl2.invariant_pullback_quotient}"
        )
    lines.append(f"timing: {report.timing_ms:.3f} ms")
    return "\n".join(lines)


def _emit(report: Report):
    if report.spec.output_format == "json":
        print(report.model_dump_json())
    else:
        print(format_text(report))


def _run_remote(server: str, spec: RunSpec) -> Report:
    import httpx

    response = httpx.post(
        server.rstrip("/") + "/v1/report", json=spec.model_dump(), timeout=600.0
    )
    response.raise_for_status()
    return Report.model_validate(response.json())


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.serve:
            import uvicorn

            from .service import app

            uvicorn.run(app, host=args.host, port=args.port)
            return EXIT_OK
        if args.sweep is not None:
            try:
                reports = sweep(args.sweep)
            except KeyError as exc:
                print(f"error: sweep: {exc.args[0]}", file=sys.stderr)
                return EXIT_ERROR
            for report in reports:
                print(report.model_dump_json())
            return EXIT_OK
        spec = parse_spec(argv)
        report = _run_remote(args.server, spec) if args.server else run(spec)
        _emit(report)
        return EXIT_OK
    except GroupSpecError as exc:
        print(f"error: type: {exc}", file=sys.stderr)
        return EXIT_BAD_TYPE
    except GenusError as exc:
        print(f"error: genus: {exc}", file=sys.stderr)
        return EXIT_BAD_GENUS
    except LatticeError as exc:
        print(f"error: lattice: {exc}", file=sys.stderr)
        return EXIT_BAD_LATTICE
    except VerificationError as exc:
        print(f"error: verification: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except ValidationError as exc:
        field = str(exc.errors()[0].get("loc", ("input",))[0])
        message = exc.errors()[0].get("msg", "invalid value")
        print(f"error: {field}: {message}", file=sys.stderr)
        if field == "genus":
            return EXIT_BAD_GENUS
        if field in ("custom_basis", "lattice"):
            return EXIT_BAD_LATTICE
        if field == "group":
            return EXIT_BAD_TYPE
        return EXIT_ERROR
    except Exception as exc:  # noqa: BLE001 - the CLI boundary reports, not raises
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
