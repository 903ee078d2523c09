"""straight - straightening fillings of Young diagrams."""

__version__ = "0.1.0"
