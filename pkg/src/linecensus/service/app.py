"""HTTP front end: one POST route per toolkit operation."""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import handlers, schemas
from .handlers import CONFIG_ERRORS


def create_app() -> FastAPI:
    app = FastAPI(title="linecensus", version="1.0",
                  description="exact rational-line census for surfaces in P^3")

    @app.exception_handler(Exception)
    async def _config_errors(request: Request, exc: Exception):
        if isinstance(exc, CONFIG_ERRORS):
            return JSONResponse(status_code=400, content={"detail": str(exc)})
        raise exc

    @app.post("/census", response_model=schemas.CensusResponse,
              response_model_exclude_unset=True)
    def census(req: schemas.CensusRequest):
        return handlers.handle_census_json(req)

    @app.post("/tools/smooth", response_model=schemas.SmoothResponse)
    def smooth(req: schemas.SmoothRequest):
        return handlers.handle_smooth(req)

    @app.post("/tools/classical", response_model=schemas.ClassicalResponse)
    def classical(req: schemas.ClassicalRequest):
        return handlers.handle_classical(req)

    @app.post("/tools/aux", response_model=schemas.AuxResponse)
    def aux(req: schemas.AuxRequest):
        return handlers.handle_aux(req)

    @app.post("/tools/hessian", response_model=schemas.HessianResponse)
    def hessian(req: schemas.HessianRequest):
        return handlers.handle_hessian(req)

    @app.post("/tools/bounds", response_model=schemas.BoundsResponse)
    def bounds(req: schemas.BoundsRequest):
        return handlers.handle_bounds(req)

    @app.post("/tools/classify-line",
              response_model=schemas.ClassifyLineResponse)
    def classify_line(req: schemas.ClassifyLineRequest):
        return handlers.handle_classify_line(req)

    @app.post("/tools/search", response_model=schemas.SearchResponse)
    def search(req: schemas.SearchRequest):
        return handlers.handle_search(req)

    @app.post("/tools/gallery", response_model=schemas.GalleryResponse)
    def gallery(req: schemas.GalleryRequest):
        return handlers.handle_gallery(req)

    return app


app = create_app()
