"""Test package for quantumgraphs.

Lets sweep modules import shared fixtures and mode tuples with `from .conftest
import ...` instead of resolving an unrelated third-party `tests` package.
"""
