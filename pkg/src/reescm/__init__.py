"""Exact verification engine for Rees ideals of diagonal ideals."""

__version__ = "0.1.0"
