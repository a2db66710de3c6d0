"""
Common Utility Functions

Output helpers shared by the CoinvKit command line:
- JSON serialization (canonical machine format)
- CSV and plain-text projections of the same row dictionaries
- File and directory operations
"""

import csv
import io
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import orjson


def ensure_directory(path: Union[str, Path]) -> Path:
    """
    Ensure a directory exists, creating it if necessary

    Args:
        path: Directory path

    Returns:
        Path object for the directory
    """
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _json_default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, 'to_dict'):
        return obj.to_dict()
    # sympy numbers and expressions, enums
    if hasattr(obj, 'value') and isinstance(getattr(obj, 'value'), str):
        return obj.value
    return str(obj)


def to_json(data: Any) -> str:
    """
    Serialize to indented JSON with orjson

    Key order is the insertion order of the dictionaries, so equal inputs
    give byte-identical output.
    """
    return orjson.dumps(data, default=_json_default,
                        option=orjson.OPT_INDENT_2 | orjson.OPT_NON_STR_KEYS).decode('utf-8')


def flatten_dict(d: Dict[str, Any], parent_key: str = '', separator: str = '.') -> Dict[str, Any]:
    """Nested record keys joined with `separator`, e.g. {'stats': {'maj': 3}} -> {'stats.maj': 3}"""
    items = []

    for key, value in d.items():
        new_key = f"{parent_key}{separator}{key}" if parent_key else str(key)

        if isinstance(value, dict):
            items.extend(flatten_dict(value, new_key, separator).items())
        else:
            items.append((new_key, value))

    return dict(items)


def _cell(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ' '.join(_cell(v) for v in value)
    if isinstance(value, dict):
        return to_json(value).replace('\n', '').replace('  ', '')
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if hasattr(value, 'value') and isinstance(getattr(value, 'value'), str):
        return value.value
    return str(value)


def row_columns(rows: Sequence[Dict[str, Any]]) -> List[str]:
    """Union of the flattened keys in first-seen order"""
    columns: List[str] = []
    for row in rows:
        for key in flatten_dict(row):
            if key not in columns:
                columns.append(key)
    return columns


def to_csv(rows: Sequence[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    """
    Project row dictionaries onto CSV text

    Nested dictionaries are flattened with dotted keys and lists are
    joined with spaces.
    """
    columns = columns or row_columns(rows)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        flat = flatten_dict(row)
        writer.writerow([_cell(flat.get(c, '')) for c in columns])
    return buffer.getvalue()


def text_cells(rows: Iterable[Dict[str, Any]], columns: List[str]) -> List[List[str]]:
    """Rows as lists of display strings for a table renderer"""
    result = []
    for row in rows:
        flat = flatten_dict(row)
        result.append([_cell(flat.get(c, '')) for c in columns])
    return result


def write_output(text: str, path: Optional[Union[str, Path]] = None) -> Optional[Path]:
    """
    Write text to a file, creating parent directories

    Returns:
        The written path, or None when no path was given
    """
    if path is None:
        return None
    path = Path(path)
    if path.parent != Path('.'):
        ensure_directory(path.parent)
    if not text.endswith('\n'):
        text += '\n'
    path.write_text(text, encoding='utf-8')
    return path
