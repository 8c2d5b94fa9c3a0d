import json
from fractions import Fraction

import pandas as pd
import pytest

from doamachine import __version__
from doamachine.data import example_a, example_b
from doamachine.documents import (
    RunManifest,
    dump_layout,
    layout_document,
    load_layout,
    parse_layout_document,
    render_document,
    sweep_body,
)
from doamachine.errors import LayoutFileError
from doamachine.geometry import make_layout


def test_parse_layout_document_strings():
    document = parse_layout_document('{"positions": ["0", "3.6", "81/10"]}')
    assert document.layout.positions == (0, Fraction(18, 5), Fraction(81, 10))
    assert document.pairs is None
    assert document.digest.startswith("sha256:")


def test_parse_layout_document_bare_numbers_are_exact():
    document = parse_layout_document('{"positions": [0, 1.2, 6]}')
    assert document.layout.exact
    assert document.layout.positions == (0, Fraction(6, 5), 6)


def test_parse_layout_document_remaps_pairs_to_sorted_order():
    document = parse_layout_document('{"positions": ["6", "0", "1.2"], "pairs": [[2, 3], [1, 3]]}')
    assert document.layout.positions == (0, Fraction(6, 5), 6)
    assert document.pairs == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "content, field",
    [
        ('{"positions": "0, 1"}', "positions"),
        ('{"positions": ["0", "x"]}', "positions"),
        ('{"positions": ["0", true]}', "positions"),
        ('{"positions": ["1", "1"]}', "positions"),
        ('{"positions": ["0"]}', "positions"),
        ('{"positions": ["0", "1"], "pairs": [[1, 1]]}', "pairs"),
        ('{"positions": ["0", "1"], "pairs": [[1, 3]]}', "pairs"),
        ('{"positions": ["0", "1"], "pairs": []}', "pairs"),
        ('{"positions": ["0", "1"], "pairs": [["a", 2]]}', "pairs"),
    ],
)
def test_parse_layout_document_names_offending_field(content, field):
    with pytest.raises(LayoutFileError) as error:
        parse_layout_document(content)
    assert error.value.field == field
    assert "field '{}'".format(field) in str(error.value)


@pytest.mark.parametrize("content", ["not json", "[1, 2]"])
def test_parse_layout_document_rejects_non_object(content):
    with pytest.raises(LayoutFileError):
        parse_layout_document(content)


def test_load_layout_missing_file(tmp_path):
    with pytest.raises(LayoutFileError):
        load_layout(str(tmp_path / "missing.json"))


def test_layout_document_written_and_read(tmp_path):
    layout = make_layout(["0", "3.6", "8.1"])
    path = tmp_path / "layout.json"
    dump_layout(layout, str(path), pairs=[(0, 2)])

    assert json.loads(path.read_text()) == {"positions": ["0", "18/5", "81/10"], "pairs": [[1, 3]]}
    document = load_layout(str(path))
    assert document.layout == layout
    assert document.pairs == [(0, 2)]


def test_digest_follows_content(layout_file):
    first = load_layout(layout_file({"positions": ["0", "1"]}, "first.json"))
    second = load_layout(layout_file({"positions": ["0", "1"]}, "second.json"))
    third = load_layout(layout_file({"positions": ["0", "2"]}, "third.json"))
    assert first.digest == second.digest
    assert first.digest != third.digest


def test_render_document_is_deterministic():
    manifest = RunManifest(command="check", parameters={"layout": "a.json"}, input_digest="sha256:00")
    body = {"report": {"verdict": "Identifiable"}}
    text = render_document(manifest, body)
    assert text == render_document(manifest, body)

    content = json.loads(text)
    assert list(content) == ["manifest", "report"]
    assert content["manifest"] == {
        "command": "check",
        "parameters": {"layout": "a.json"},
        "tool_version": __version__,
        "input_digest": "sha256:00",
    }


def test_sweep_body_handles_infinite_snr_and_nan():
    layout = make_layout(["0", "1"])
    sweep = pd.DataFrame(
        {"snr_db": [float("inf"), 10.0], "rmse_rad": [0.0, float("nan")], "trials_failed": [0, 3]}
    )
    body = sweep_body(layout, 0.25, 101, 3, 1, sweep)
    assert body["results"] == [
        {"snr_db": "inf", "rmse_rad": 0.0, "trials_failed": 0},
        {"snr_db": 10.0, "rmse_rad": None, "trials_failed": 3},
    ]
    render_document(RunManifest(command="simulate"), body)


def test_bundled_examples():
    a = example_a()
    assert a.layout.positions == (0, Fraction(6, 5), 6)
    b = example_b()
    assert b.layout.positions == (0, Fraction(18, 5), Fraction(81, 10))
    assert layout_document(b.layout) == '{\n  "positions": [\n    "0",\n    "18/5",\n    "81/10"\n  ]\n}\n'
