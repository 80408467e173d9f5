"""Arabic and mixed-script text normalization"""

from src.text.normalize import (
    normalize_text,
    strip_decoration,
    first_token,
    first_surface_token,
    is_arabic_script,
)

__all__ = [
    "normalize_text",
    "strip_decoration",
    "first_token",
    "first_surface_token",
    "is_arabic_script",
]
