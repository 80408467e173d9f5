"""
Business logic of the prediction service
"""
import logging
import traceback
from typing import Any, Dict, Optional, Tuple

from pydantic import ValidationError

from src.api.schemas import PredictRequest, PredictResponse
from src.classifier.model import GenderModel, Prediction

logger = logging.getLogger(__name__)

MAX_BODY_BYTES = 8192

# Uncalibrated models report 0.5 + epsilon for a non-zero margin
UNCALIBRATED_EPSILON = 0.01


def reported_probability(prediction: Prediction, model: GenderModel) -> float:
    if model.calibrated:
        return prediction.probability
    return 0.5 if prediction.margin == 0.0 else 0.5 + UNCALIBRATED_EPSILON


def prediction_payload(prediction: Prediction, model: GenderModel) -> Dict[str, Any]:
    """Response fields for one prediction (shared with the CLI)"""
    return PredictResponse(
        gender=prediction.label.word,
        probability=reported_probability(prediction, model),
        model_version=model.model_version,
        calibrated=model.calibrated,
    ).model_dump()


def parse_predict_body(body: bytes) -> Tuple[bool, str, Optional[PredictRequest]]:
    """
    Validate a /predict request body

    Returns:
        Tuple of (success, message, request)
    """
    if len(body) > MAX_BODY_BYTES:
        return False, f"Request body exceeds {MAX_BODY_BYTES} bytes", None
    try:
        request = PredictRequest.model_validate_json(body)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first.get("loc", ())) or "body"
        return False, f"Invalid request ({location}): {first.get('msg', 'invalid value')}", None
    if not request.name.strip():
        return False, "name must not be empty", None
    return True, "ok", request


def predict_name(model: GenderModel, name: str) -> Tuple[bool, str, Dict[str, Any]]:
    """
    Predict the gender of a person's name

    Args:
        model: Loaded usernames model
        name: Name in Arabic or Latin script

    Returns:
        Tuple of (success, message, data)
        - data: gender, probability, model_version, calibrated
    """
    if not name or not name.strip():
        logger.warning("Empty name received")
        return False, "name must not be empty", {}

    try:
        prediction = model.predict_text(name)
    except Exception as e:
        logger.error(f"Error in predict_name: {str(e)}")
        logger.error(traceback.format_exc())
        return False, f"Prediction failed: {str(e)}", {}

    data = prediction_payload(prediction, model)
    logger.info(f"Predicted '{name}' -> {data['gender']} ({data['probability']:.3f})")
    return True, "ok", data
