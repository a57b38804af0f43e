"""
Command-line interface for the Legendre ODE toolkit
"""

from .main import app

__all__ = ["app"]
