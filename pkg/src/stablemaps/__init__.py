"""Counting cusps and nodes of polynomial plane maps, and certifying generic topology."""

__version__ = "0.1.0"
