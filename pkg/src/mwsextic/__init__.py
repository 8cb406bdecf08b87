"""Mordell-Weil lattices and ranks of the sextic twists y^2 = x^3 + A t^6 + B."""
__version__ = "0.1.0"
