"""Isomorphism, isogeny and Brauer-kernel decisions for conics, quadric
surfaces, Severi-Brauer varieties and genus-one torsors over Q."""

__version__ = "0.1.0"
