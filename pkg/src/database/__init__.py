"""Geocoder cache storage"""

from src.database.models import Base, GeocodeCacheEntry
from src.database.database import get_session, get_engine
from src.database.operations import get_cached_geocode, put_cached_geocode

__all__ = [
    # Models
    "Base",
    "GeocodeCacheEntry",
    # Database
    "get_session",
    "get_engine",
    # Operations
    "get_cached_geocode",
    "put_cached_geocode",
]
