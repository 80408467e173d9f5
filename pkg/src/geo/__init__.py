"""Location string -> country mapping"""

from src.geo.countries import (
    ARAB_COUNTRIES,
    COUNTRY_CODES,
    ISO_ALPHA2,
    OTHER_COUNTRY,
    UNKNOWN_COUNTRY,
    to_country_category,
)
from src.geo.gazetteer import (
    Gazetteer,
    GazetteerError,
    alias_key,
    build_gazetteer,
    country_distribution,
    load_gazetteer,
    map_location,
)
from src.geo.geocoder import GeocodeCache, LocationResolver, NominatimGeocoder

__all__ = [
    "ARAB_COUNTRIES",
    "COUNTRY_CODES",
    "ISO_ALPHA2",
    "OTHER_COUNTRY",
    "UNKNOWN_COUNTRY",
    "to_country_category",
    "Gazetteer",
    "GazetteerError",
    "alias_key",
    "build_gazetteer",
    "country_distribution",
    "load_gazetteer",
    "map_location",
    "GeocodeCache",
    "LocationResolver",
    "NominatimGeocoder",
]
