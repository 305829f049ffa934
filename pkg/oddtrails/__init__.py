"""Packing and covering odd (u,v)-trails in multigraphs."""

__version__ = '0.1.0'
