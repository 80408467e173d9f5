"""
FastAPI prediction service
Routes layer - handles HTTP requests/responses only
"""
import logging

import uvicorn
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from src.api import services
from src.api.schemas import ErrorResponse, HealthResponse, PredictResponse
from src.classifier.model import GenderModel
from src.classifier.persistence import load_model
from src.config import LOG_FORMAT, LOG_LEVEL, MODEL_PATH, SERVICE_HOST, SERVICE_PORT

logger = logging.getLogger(__name__)


def create_app(model: GenderModel) -> FastAPI:
    """
    Build the service around a loaded model (shared read-only by all requests)
    """
    app = FastAPI(title="Gender Prediction Service")
    app.state.model = model

    @app.on_event("startup")
    async def startup_event():
        """Log service startup"""
        logger.info("=" * 60)
        logger.info("Gender prediction service starting up")
        logger.info(f"Model version: {model.model_version}")
        logger.info(f"Feature set: {model.feature_set.value if model.feature_set else 'none'}")
        logger.info(f"Calibrated: {model.calibrated}")
        logger.info("=" * 60)

    @app.get("/health", response_model=HealthResponse)
    async def health():
        """Health check endpoint"""
        return HealthResponse(
            status="ok",
            model_version=model.model_version,
            feature_set=model.feature_set.value if model.feature_set else "",
            calibrated=model.calibrated,
        )

    def error(message: str, status_code: int) -> JSONResponse:
        return JSONResponse(content=ErrorResponse(error=message).model_dump(), status_code=status_code)

    error_responses = {code: {"model": ErrorResponse} for code in (400, 413, 500)}

    @app.post("/predict", response_model=PredictResponse, responses=error_responses)
    async def predict(request: Request):
        """Predict the gender of {"name": ...}"""
        body = await request.body()
        logger.info(f"Request received: POST /predict ({len(body)} bytes)")

        if len(body) > services.MAX_BODY_BYTES:
            return error(f"Request body exceeds {services.MAX_BODY_BYTES} bytes", 413)

        success, message, parsed = services.parse_predict_body(body)
        if not success:
            logger.warning(f"Rejected request: {message}")
            return error(message, 400)

        success, message, data = services.predict_name(model, parsed.name)
        if not success:
            return error(message, 500)
        return data

    return app


def create_app_from_config() -> FastAPI:
    """App factory for `uvicorn --factory`: loads MODEL_PATH"""
    logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)
    return create_app(load_model(MODEL_PATH))


def serve_http(model_path: str = MODEL_PATH, host: str = SERVICE_HOST, port: int = SERVICE_PORT) -> None:
    """
    Load a model once and serve it until interrupted

    Raises:
        OSError, ModelFormatError: If the model cannot be loaded
    """
    app = create_app(load_model(model_path))
    logger.info(f"Serving on http://{host}:{port}")
    uvicorn.run(app, host=host, port=port)
