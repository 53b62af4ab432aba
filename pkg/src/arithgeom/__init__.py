"""Arithmetic functions on free graded monoids: N^x, ideals of quadratic
fields and effective 0-cycles of varieties over finite fields."""

__version__ = "0.1.0"
