"""HTTP front end: a thin FastAPI layer over the pipeline.

Endpoints:
  GET  /healthz             liveness probe
  GET  /v1/presets          names of the built-in sweep grids
  POST /v1/report           run one specification, returns a Report
  GET  /v1/sweep/{preset}   run a built-in grid, returns a list of Reports
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .errors import GenusError, GroupSpecError, LatticeError, VerificationError
from .pipeline import SWEEP_PRESETS, run, sweep
from .schemas import Report, RunSpec

app = FastAPI(
    title="hitchin-prym",
    version=__version__,
    description=(
        "Exact integer invariants of Hitchin-system abelianization: "
        "spectral cover combinatorics, generalized Prym dimensions and "
        "abelianization fiber bounds."
    ),
)


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/v1/presets")
def presets() -> dict:
    return {"presets": sorted(SWEEP_PRESETS)}


@app.post("/v1/report", response_model=Report)
def create_report(spec: RunSpec) -> Report:
    try:
        return run(spec)
    except (GroupSpecError, LatticeError, GenusError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except VerificationError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc


@app.get("/v1/sweep/{preset}", response_model=list[Report])
def run_sweep(preset: str) -> list[Report]:
    try:
        return sweep(preset)
    except KeyError as exc:
        raise HTTPException(status_code=404, detail=str(exc.args[0])) from exc
