"""
SQLAlchemy ORM models for the geocoder cache
"""
from datetime import datetime
from typing import Optional
from sqlalchemy import String, DateTime
from sqlalchemy.orm import DeclarativeBase, Mapped, mapped_column


class Base(DeclarativeBase):
    """Base class for all models"""
    pass


class GeocodeCacheEntry(Base):
    """One resolved geocoder query (country_code is NULL for a miss)"""
    __tablename__ = "geocode_cache"

    query: Mapped[str] = mapped_column(String, primary_key=True)
    country_code: Mapped[Optional[str]] = mapped_column(String(2), nullable=True)
    created_at: Mapped[datetime] = mapped_column(DateTime, default=datetime.utcnow)

    def __repr__(self):
        return f"<GeocodeCacheEntry(query='{self.query}', country_code={self.country_code})>"
