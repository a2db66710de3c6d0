import json
from fractions import Fraction

from common.python import ensure_directory, to_csv, to_json, write_output
from common.python.utils import flatten_dict, row_columns


def test_json_handles_fractions_and_sets():
    text = to_json({'a': Fraction(1, 2), 'b': Fraction(4, 2), 'c': {3, 1}})
    assert json.loads(text) == {'a': '1/2', 'b': 2, 'c': [1, 3]}


def test_csv_flattens_rows():
    rows = [{'mu': [2, 1], 'stats': {'maj': 3}}, {'mu': [1], 'extra': True}]
    assert row_columns(rows) == ['mu', 'stats.maj', 'extra']
    assert to_csv(rows).splitlines() == ['mu,stats.maj,extra', '2 1,3,', '1,,true']


def test_flatten_dict():
    assert flatten_dict({'a': {'b': {'c': 1}}, 'd': 2}) == {'a.b.c': 1, 'd': 2}


def test_write_output(tmp_path):
    path = write_output('1,2,2,1', tmp_path / 'deep' / 'out.txt')
    assert path.read_text() == '1,2,2,1\n'
    assert write_output('ignored') is None
    assert ensure_directory(tmp_path / 'x' / 'y').is_dir()
