"""HTTP service exposing the exact-average computations.

The process keeps its recursion tables warm between requests, so a
long-running instance serves repeated table and compute queries without
refilling.  Run with ``polyavg serve`` or ``uvicorn polyavg.service:app``.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .ops import (
    OperationError,
    run_catalog,
    run_compute,
    run_fit,
    run_table,
    run_verify,
)
from .schemas import (
    CatalogResponse,
    ComputeRequest,
    ComputeResponse,
    FitRequest,
    FitResponse,
    TableRequest,
    TableResponse,
    VerifyRequest,
    VerifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="polyavg",
        version=__version__,
        description="Exact average norms of polynomials with restricted coefficients",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/compute", response_model=ComputeResponse)
    def compute(req: ComputeRequest) -> ComputeResponse:
        try:
            return run_compute(req)
        except OperationError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None

    @app.post("/table", response_model=TableResponse)
    def table(req: TableRequest) -> TableResponse:
        try:
            return run_table(req)
        except OperationError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None

    @app.post("/fit", response_model=FitResponse)
    def fit_endpoint(req: FitRequest) -> FitResponse:
        try:
            return run_fit(req)
        except OperationError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        return run_verify(req)

    @app.get("/catalog", response_model=CatalogResponse)
    def catalog_route() -> CatalogResponse:
        return run_catalog()

    return app


app = create_app()
