"""textannotator: raw text to dependency-annotated JSON lines."""

from .adapter import AdapterConfig, AdapterError, annotate_file

__version__ = "0.1.0"
