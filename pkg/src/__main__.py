"""
Entry point: python -m src <command> [options]
"""

from .cli import app

app(prog_name="legendre-ode")
