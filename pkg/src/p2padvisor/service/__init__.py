"""HTTP facade over a trained model bundle."""

from .app import make_app, serve

__all__ = ["make_app", "serve"]
