"""Exact computations with quasitriangular Hopf algebras, Yetter-Drinfeld
modules, braided Galois objects and Azumaya algebras."""

__version__ = "0.1.0"
