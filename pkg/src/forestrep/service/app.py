"""FastAPI service exposing the library; the CLI is a thin client of this app."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..characters import IntegrityError, IrredDecomposition, fixed_point_character
from ..forests import Odun, chain_odun, count_blossoming, enumerate_oduns, is_blossoming
from ..forest_reps import (
    analyze_odun,
    character_of_stratum,
    decompose_stratum,
    dimension_of_odun,
    rook_frobenius,
    sign_by_stratum,
    sign_in_top_stratum,
    sign_multiplicity,
    total_sign_multiplicity,
)
from ..partitions import partitions_of, partitions_with_parts
from ..symfunc import symfunc_to_json, to_schur
from ..transformations import count_nilpotent, count_nilpotent_total, enumerate_nilpotent
from ..verify import DEFAULT_SEED, run_verify
from . import models

N_CAP = 8

app = FastAPI(title="forestrep", version=__version__)


@app.exception_handler(ValueError)
async def _on_value_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": str(exc)})


@app.exception_handler(IntegrityError)
async def _on_integrity_error(request: Request, exc: IntegrityError) -> JSONResponse:
    return JSONResponse(status_code=500, content={"error": str(exc)})


def _guard(n: int, force: bool) -> None:
    if n > N_CAP and not force:
        raise ValueError(f"n={n} exceeds the default cap of {N_CAP}; pass force to override")


def _threads(t: int) -> int:
    return max(1, min(int(t), 8))


def _odun_info(odun: Odun) -> models.OdunInfo:
    return models.OdunInfo(
        encoding=odun.encoding,
        n=odun.n,
        components=odun.num_components,
        trees=odun.to_json()["trees"],
        blossoming=is_blossoming(odun),
    )


def _decomposition_response(n: int, k: int, method: str, deco: IrredDecomposition) -> models.DecomposeResponse:
    return models.DecomposeResponse(
        n=n,
        k=k,
        method=method,
        terms=[models.DecompositionTerm(**t) for t in deco.to_json()],
        degree=deco.degree(),
        line=f"C_{{{k},{n}}} = " + deco.format_text(),
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/count", response_model=models.CountResponse)
def count(req: models.CountRequest) -> models.CountResponse:
    if req.k is None:
        value = count_nilpotent_total(req.n)
    else:
        value = count_nilpotent(req.n, req.k)
    return models.CountResponse(n=req.n, k=req.k, count=value)


@app.post("/enumerate", response_model=models.EnumerateResponse)
def enumerate_maps(req: models.EnumerateRequest) -> models.EnumerateResponse:
    _guard(req.n, req.force)
    maps = [list(f.image) for f in enumerate_nilpotent(req.n, req.k)]
    return models.EnumerateResponse(n=req.n, k=req.k, count=len(maps), maps=maps)


@app.post("/oduns", response_model=models.OdunsResponse)
def oduns(req: models.OdunsRequest) -> models.OdunsResponse:
    _guard(req.n, req.force)
    if req.components is not None and not 1 <= req.components <= req.n:
        raise ValueError(f"components must lie in 1..{req.n}")
    found = enumerate_oduns(req.n, components=req.components)
    if req.blossoming_only:
        found = tuple(o for o in found if is_blossoming(o))
    return models.OdunsResponse(
        n=req.n, count=len(found), oduns=[_odun_info(o) for o in found]
    )


@app.post("/character", response_model=models.CharacterResponse)
def character(req: models.CharacterRequest) -> models.CharacterResponse:
    _guard(req.n, req.force)
    if req.k >= req.n:
        raise ValueError(f"k must lie in 0..{req.n - 1}")
    if req.method == "fixed":
        chi = fixed_point_character(req.n, req.k, threads=_threads(req.threads))
    elif req.method == "plethysm":
        chi = character_of_stratum(req.n, req.k, threads=_threads(req.threads))
    else:
        raise ValueError(f"unknown method {req.method!r}")
    values = [
        models.CharacterValue(cycle_type=list(rho.parts), value=int(chi.values[rho]))
        for rho in reversed(partitions_of(req.n))
    ]
    return models.CharacterResponse(n=req.n, k=req.k, method=req.method, values=values)


@app.post("/decompose", response_model=models.DecomposeResponse)
def decompose_endpoint(req: models.DecomposeRequest) -> models.DecomposeResponse:
    _guard(req.n, req.force)
    if req.k >= req.n:
        raise ValueError(f"k must lie in 0..{req.n - 1}")
    deco = decompose_stratum(req.n, req.k, method=req.method, threads=_threads(req.threads))
    return _decomposition_response(req.n, req.k, req.method, deco)


@app.post("/decompose-odun", response_model=models.DecomposeOdunResponse)
def decompose_odun(req: models.DecomposeOdunRequest) -> models.DecomposeOdunResponse:
    odun = Odun.from_text(req.odun)
    if odun.n == 0:
        raise ValueError("empty forest")
    result = analyze_odun(odun)
    return models.DecomposeOdunResponse(
        odun=_odun_info(odun),
        frobenius_p=symfunc_to_json(result.frobenius, "p"),
        frobenius_s=symfunc_to_json(result.frobenius, "s"),
        terms=[models.DecompositionTerm(**t) for t in result.decomposition.to_json()],
        line=result.decomposition.format_text(),
        dimension=result.dimension,
        sign_multiplicity=result.sign,
    )


@app.post("/table", response_model=models.TableResponse)
def table(req: models.TableRequest) -> models.TableResponse:
    _guard(req.n, req.force)
    strata = []
    for k in range(req.n):
        deco = decompose_stratum(req.n, k, method=req.method, threads=_threads(req.threads))
        strata.append(_decomposition_response(req.n, k, req.method, deco))
    return models.TableResponse(
        n=req.n, method=req.method, lines=[s.line for s in strata], strata=strata
    )


@app.post("/sign", response_model=models.SignResponse)
def sign(req: models.SignRequest) -> models.SignResponse:
    _guard(req.n, req.force)
    if req.method not in ("blossoming", "schur"):
        raise ValueError(f"unknown method {req.method!r}")
    out = models.SignResponse(n=req.n, method=req.method)
    if req.total or not req.per_stratum:
        out.total = total_sign_multiplicity(req.n, method=req.method)
        out.closed_form_total = 2 ** (req.n - 2) if req.n >= 2 else None
        if out.closed_form_total is not None:
            out.matches_closed_form = out.total == out.closed_form_total
    if req.per_stratum:
        out.per_stratum = sign_by_stratum(req.n, method=req.method)
        out.top_stratum = sign_in_top_stratum(req.n, method=req.method)
        out.closed_form_top = 2 ** (req.n - 3) if req.n >= 3 else None
    return out


@app.post("/blossoming", response_model=models.BlossomingResponse)
def blossoming(req: models.BlossomingRequest) -> models.BlossomingResponse:
    _guard(req.n, req.force)
    forests = None
    if req.list_forests:
        forests = [o.encoding for o in enumerate_oduns(req.n) if is_blossoming(o)]
    count = count_blossoming(req.n)
    closed = 2 ** (req.n - 2) if req.n >= 2 else None
    return models.BlossomingResponse(
        n=req.n,
        count=count,
        closed_form=closed,
        matches_closed_form=None if closed is None else count == closed,
        forests=forests,
    )


@app.post("/rooks", response_model=models.RooksResponse)
def rooks(req: models.RooksRequest) -> models.RooksResponse:
    _guard(req.n, req.force)
    if req.parts > req.n:
        raise ValueError("parts cannot exceed n")
    shapes = []
    for lam in partitions_with_parts(req.n, req.parts):
        odun = chain_odun(lam.parts)
        shapes.append(
            models.RookShape(
                partition=list(lam.parts),
                encoding=odun.encoding,
                sign_multiplicity=sign_multiplicity(odun),
                dimension=dimension_of_odun(odun),
            )
        )
    frob = rook_frobenius(req.n, req.parts)
    mults = {lam: int(c) for lam, c in to_schur(frob).items()}
    deco = IrredDecomposition(req.n, mults)
    return models.RooksResponse(
        n=req.n,
        parts=req.parts,
        shape_count=len(shapes),
        sign_count=sum(s.sign_multiplicity for s in shapes),
        shapes=shapes,
        schur_terms=symfunc_to_json(frob, "s"),
        line=f"Z_{{{req.parts},{req.n}}} = " + deco.format_text(),
    )


@app.post("/verify")
def verify(req: models.VerifyRequest) -> JSONResponse:
    report = run_verify(
        max_n=req.max_n,
        seed=req.seed if req.seed is not None else DEFAULT_SEED,
        threads=_threads(req.threads),
    )
    payload = report.to_json()
    payload["text"] = report.format_text()
    return JSONResponse(status_code=200, content=payload)
