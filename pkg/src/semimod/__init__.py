"""Finite semirings, semimodules and their exactness and projectivity notions."""

__version__ = "0.1.0"
