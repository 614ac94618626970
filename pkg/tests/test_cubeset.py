import io
import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from cubetile import cubeset
from cubetile.exact import CubesetError, DuplicateTranslate, TranslateSet

from test_exact import periodic_sets


def test_format_shape():
    s = TranslateSet.periodic([2, 2], [(0, 0), (1, F(1, 2))])
    doc = json.loads(cubeset.dumps(s))
    assert doc == {"dim": 2, "mode": "periodic", "period": [2, 2], "offsets": [["0", "0"], ["1", "1/2"]]}


def test_finite_has_no_period():
    doc = json.loads(cubeset.dumps(TranslateSet.finite([(3, F(-1, 3))])))
    assert "period" not in doc and doc["offsets"] == [["3", "-1/3"]]


def test_parser_rejects_duplicates():
    with pytest.raises(DuplicateTranslate):
        cubeset.loads('{"dim": 1, "mode": "periodic", "period": [1], "offsets": [["0"], ["1"]]}')


@pytest.mark.parametrize("text", [
    "[]",
    "not json",
    '{"dim": 2, "mode": "finite", "offsets": [["0"]]}',
    '{"dim": 1, "mode": "periodic", "offsets": [["0"]]}',
    '{"dim": 1, "mode": "periodic", "period": [1.5], "offsets": [["0"]]}',
    '{"dim": 1, "mode": "finite", "offsets": [[0.5]]}',
    '{"dim": 1, "mode": "finite", "offsets": [["1/0"]]}',
    '{"dim": 1, "mode": "torus", "offsets": [["0"]]}',
])
def test_parser_rejects_malformed(text):
    with pytest.raises(CubesetError):
        cubeset.loads(text)


def test_json_lines_roundtrip():
    sets = [TranslateSet.periodic([1], [[0]]), TranslateSet.finite([(F(1, 2), 2)])]
    buf = io.StringIO()
    assert cubeset.write_lines(sets, buf) == 2
    buf.seek(0)
    assert list(cubeset.read_lines(buf)) == sets


@settings(max_examples=60, deadline=None)
@given(periodic_sets())
def test_roundtrip_identity(s):
    assert cubeset.loads(cubeset.dumps(s)) == s
