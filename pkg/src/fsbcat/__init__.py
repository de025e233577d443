"""Computational toolkit for the type B surjection category FS_B."""

__version__ = "0.1.0"
