"""
Request / response models of the prediction service
"""
from typing import Literal

from pydantic import BaseModel, ConfigDict


class PredictRequest(BaseModel):
    model_config = ConfigDict(extra="ignore")

    name: str


class PredictResponse(BaseModel):
    gender: Literal["male", "female"]
    probability: float
    model_version: str
    calibrated: bool


class HealthResponse(BaseModel):
    status: str
    model_version: str
    feature_set: str
    calibrated: bool


class ErrorResponse(BaseModel):
    success: bool = False
    error: str
