"""ncres - Large and almost large modules over quiver algebras."""

__version__ = "0.1.0"
