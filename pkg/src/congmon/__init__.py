"""Exact computations with congruence monoids Sol_A = {X : X^t A X = A}."""

__version__ = "0.1.0"
