"""Exact classification engine for semisimple symplectic extrinsic symmetric spaces."""

__version__ = "0.1.0"
