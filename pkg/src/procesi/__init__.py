"""Exact computations with Procesi bundle fibers and their fixed-point decompositions."""

__version__ = "0.1.0"
