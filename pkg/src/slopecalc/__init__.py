"""Exact slope and divisor-class arithmetic for moduli spaces of curves."""
__version__ = "0.1.0"
