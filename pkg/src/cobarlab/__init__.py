"""cobarlab: exact-arithmetic cubical/simplicial topology engine.

Everything here computes over exact integers (or Fractions for geometric
realization); there is no floating point anywhere in the library.
"""

__version__ = "0.1.0"
