"""Exact computer algebra for graph operads, marked planar tree operads,
operadic twisting, and their actions on polynomial multivector fields and
multidifferential operators.

All arithmetic is over the rationals and exact.
"""

__version__ = "0.1.0"
