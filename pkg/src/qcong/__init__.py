"""Exact q-series arithmetic and congruence verification for biregular overpartitions."""

__version__ = "0.1.0"
