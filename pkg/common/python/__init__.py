"""
CoinvKit Python Common Libraries

Provides common functionality shared by the command line:
- JSON/CSV/text output projections
- File helpers
"""

__version__ = "0.1.0"
__all__ = ['to_json', 'to_csv', 'write_output', 'ensure_directory']

from .utils import ensure_directory, to_csv, to_json, write_output
