"""Public API for spinmoduli."""

from .api import local, strata, supports, verify, verify_all

__all__ = ["local", "strata", "supports", "verify", "verify_all"]
