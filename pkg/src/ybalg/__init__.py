"""Exact computer algebra for braided vector spaces and tensor algebras."""

__version__ = "0.1.0"
