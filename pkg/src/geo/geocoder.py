"""
Optional online fallback for locations the gazetteer cannot map.

The geocoder queries a Nominatim-compatible search endpoint over HTTP and
keeps every answer (misses included) in a SQLite cache, so a location is
sent to the service at most once. Network failures are not cached.
"""
import logging
import threading
from typing import Optional

import httpx

from src.config import GEOCODER_CACHE_DB, GEOCODER_URL, GEOCODER_USER_AGENT
from src.database import get_cached_geocode, get_session, put_cached_geocode
from src.geo.countries import ISO_ALPHA2, UNKNOWN_COUNTRY, to_country_category
from src.geo.gazetteer import Gazetteer, map_location
from src.text.normalize import normalize_text

logger = logging.getLogger(__name__)

_MISSING = object()


class GeocodeCache:
    """Thread-safe SQLite store of normalized query -> country code"""

    def __init__(self, db_path: str = GEOCODER_CACHE_DB):
        self.db_path = db_path
        self._lock = threading.Lock()

    def get(self, query: str):
        """Cached code, None for a cached miss, or _MISSING when never queried"""
        with self._lock, get_session(self.db_path) as session:
            entry = get_cached_geocode(session, query)
            if entry is None:
                return _MISSING
            return entry.country_code

    def put(self, query: str, country_code: Optional[str]) -> None:
        with self._lock, get_session(self.db_path) as session:
            put_cached_geocode(session, query, country_code)
            session.commit()


class NominatimGeocoder:
    """
    Country lookup through a Nominatim-style /search endpoint

    Args:
        cache: Answer cache (defaults to GEOCODER_CACHE_DB)
        base_url: Search endpoint URL
        user_agent: User-Agent header sent with each request
        client: httpx client to use (tests pass one with a mock transport)
        timeout: Request timeout in seconds
    """

    def __init__(
        self,
        cache: Optional[GeocodeCache] = None,
        base_url: str = GEOCODER_URL,
        user_agent: str = GEOCODER_USER_AGENT,
        client: Optional[httpx.Client] = None,
        timeout: float = 10.0,
    ):
        self.cache = cache or GeocodeCache()
        self.base_url = base_url
        self.user_agent = user_agent
        self.timeout = timeout
        self._client = client or httpx.Client(timeout=timeout)

    def close(self) -> None:
        self._client.close()

    def geocode(self, location: str) -> Optional[str]:
        """
        Resolve a location string to an ISO alpha-2 code

        Returns:
            Upper-case alpha-2 code, or None when the service has no answer
            or cannot be reached
        """
        query = normalize_text(location)
        if not query:
            return None

        cached = self.cache.get(query)
        if cached is not _MISSING:
            logger.debug(f"Geocoder cache hit for '{query}'")
            return cached

        try:
            response = self._client.get(
                self.base_url,
                params={"q": query, "format": "jsonv2", "addressdetails": 1, "limit": 1},
                headers={"User-Agent": self.user_agent},
                timeout=self.timeout,
            )
            response.raise_for_status()
            results = response.json()
        except (httpx.HTTPError, ValueError) as e:
            logger.warning(f"Geocoder request failed for '{query}': {e}")
            return None

        code = None
        if isinstance(results, list) and results:
            raw_code = (results[0].get("address") or {}).get("country_code", "")
            if raw_code and raw_code.upper() in ISO_ALPHA2:
                code = raw_code.upper()

        self.cache.put(query, code)
        logger.info(f"Geocoded '{query}' -> {code or 'no match'}")
        return code


class LocationResolver:
    """Gazetteer first, geocoder only for what the gazetteer leaves as UNK"""

    def __init__(self, gazetteer: Gazetteer, geocoder: Optional[NominatimGeocoder] = None):
        self.gazetteer = gazetteer
        self.geocoder = geocoder

    def resolve(self, location_raw: str) -> str:
        category = map_location(location_raw, self.gazetteer)
        if category != UNKNOWN_COUNTRY or self.geocoder is None:
            return category
        if not location_raw or not location_raw.strip():
            return UNKNOWN_COUNTRY

        code = self.geocoder.geocode(location_raw)
        if code is None:
            return UNKNOWN_COUNTRY
        return to_country_category(code)
