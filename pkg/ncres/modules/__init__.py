"""Representations, supports, families and annihilators over catalog algebras."""
