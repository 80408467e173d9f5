"""
Database CRUD operations
"""
from typing import Optional
from sqlalchemy.orm import Session

from src.database.models import GeocodeCacheEntry


def get_cached_geocode(session: Session, query: str) -> Optional[GeocodeCacheEntry]:
    """
    Get the cached geocoder answer for a normalized query

    Args:
        session: Database session
        query: Normalized location text

    Returns:
        The cache entry or None if the query was never resolved
    """
    return session.get(GeocodeCacheEntry, query)


def put_cached_geocode(session: Session, query: str, country_code: Optional[str]) -> GeocodeCacheEntry:
    """
    Insert or replace the cached answer for a query (caller commits)

    Args:
        session: Database session
        query: Normalized location text
        country_code: ISO alpha-2 code, or None when the geocoder found nothing

    Returns:
        The stored entry
    """
    entry = session.get(GeocodeCacheEntry, query)
    if entry is None:
        entry = GeocodeCacheEntry(query=query, country_code=country_code)
        session.add(entry)
    else:
        entry.country_code = country_code
    session.flush()
    return entry
