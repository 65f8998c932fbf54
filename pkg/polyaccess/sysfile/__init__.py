from .reader import SystemFile, parse, parse_file
from .writer import format_system

__all__ = ["SystemFile", "format_system", "parse", "parse_file"]
