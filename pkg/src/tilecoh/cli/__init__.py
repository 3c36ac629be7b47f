"""Command-line front end."""
from .main import EXIT_DISTINGUISHED, EXIT_OK, build_parser, main
from .render import precision, render_svg

__all__ = ["EXIT_DISTINGUISHED", "EXIT_OK", "build_parser", "main", "precision", "render_svg"]
