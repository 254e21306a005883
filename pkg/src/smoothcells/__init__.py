"""Smooth Schubert varieties in the minimal-special right cells of Weyl groups."""

__version__ = "0.1.0"
