"""Entry point for python -m ncres."""

from ncres.cli import app

if __name__ == "__main__":
    app()
