"""Exact computation of weighted homological regularities of connected graded algebras.

The package computes, over QQ or a prime field, truncated noncommutative
Groebner bases, graded dimensions, minimal free resolutions and Betti tables,
dual complexes and their cohomology, and the weighted regularity invariants
built from them (Tor/Ext/CM/AS regularity, depth, projective dimension, rate,
slope, concavity bounds).  All arithmetic is exact and all truncated results
carry their certification window.
"""

__version__ = "0.1.0"
