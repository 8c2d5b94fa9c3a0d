"""
Documentation:

    ---
    Description:
        File formats: layout documents read by the command line, and the JSON documents it
        writes (identifiability reports, RMSE sweeps, search results), each led by a
        RunManifest. Rationals are always written as "p" or "p/q" strings.

        Layout document:
            {"positions": ["0", "1.2", "6"], "pairs": [[1, 2], [2, 3]]}
        positions are decimal or "p/q" strings (bare JSON numbers are read as decimal text,
        so they are exact too); pairs are optional 1-based index pairs into positions as
        listed in the file.
"""
import hashlib
import json
import math
from dataclasses import dataclass, field

from . import __version__
from .errors import DoaMachineError, LayoutFileError
from .geometry.layout import format_rational, make_layout, parse_rational


@dataclass(frozen=True)
class LayoutDocument:
    """
    Documentation:

        ---
        Description:
            Parsed layout document.

        ---
        Parameters:
            layout : SensorLayout
                Normalized layout.
            pairs : list of (int, int) or None
                0-based pairs into layout.positions (after sorting); None means all pairs.
            digest : str
                sha256 of the raw document bytes.
    """

    layout: object
    pairs: object = None
    digest: str = None


@dataclass(frozen=True)
class RunManifest:
    """
    Documentation:

        ---
        Description:
            Reproducibility header carried by every output document.
    """

    command: str
    parameters: dict = field(default_factory=dict)
    tool_version: str = __version__
    input_digest: str = None

    def as_dict(self):
        return {
            "command": self.command,
            "parameters": self.parameters,
            "tool_version": self.tool_version,
            "input_digest": self.input_digest,
        }


def digest_bytes(raw):
    return "sha256:" + hashlib.sha256(raw).hexdigest()


def parse_layout_document(raw):
    """
    Documentation:

        ---
        Description:
            Parse and validate the bytes or text of a layout document.

        ---
        Parameters:
            raw : bytes or str
                Document content.

        ---
        Returns:
            document : LayoutDocument
    """
    if isinstance(raw, str):
        raw = raw.encode("utf-8")

    try:
        content = json.loads(raw.decode("utf-8"), parse_float=str, parse_int=str)
    except (UnicodeDecodeError, json.JSONDecodeError) as error:
        raise LayoutFileError("document is not valid JSON: {}".format(error))
    if not isinstance(content, dict):
        raise LayoutFileError("document must be a JSON object")

    ### positions
    positions = content.get("positions")
    if not isinstance(positions, list):
        raise LayoutFileError("must be an array of decimal or 'p/q' strings", field="positions")
    values = []
    for i, value in enumerate(positions):
        if not isinstance(value, str):
            raise LayoutFileError("entry {} is not a number or string: {!r}".format(i + 1, value), field="positions")
        try:
            values.append(parse_rational(value))
        except (TypeError, ValueError) as error:
            raise LayoutFileError("entry {}: {}".format(i + 1, error), field="positions")
    try:
        layout = make_layout(values)
    except DoaMachineError as error:
        raise LayoutFileError(str(error), field="positions")

    ### pairs, remapped from file order to sorted order
    pairs = content.get("pairs")
    if pairs is not None:
        if not isinstance(pairs, list) or not pairs:
            raise LayoutFileError("must be a non-empty array of [u, v] index pairs", field="pairs")
        rank = {original: new for new, original in enumerate(sorted(range(len(values)), key=lambda i: values[i]))}
        remapped = []
        for pair in pairs:
            try:
                u, v = (int(i) for i in pair)
            except (TypeError, ValueError):
                raise LayoutFileError("entry {!r} is not a pair of integers".format(pair), field="pairs")
            if not (1 <= u <= len(values) and 1 <= v <= len(values)) or u == v:
                raise LayoutFileError(
                    "entry [{}, {}] must name two distinct sensors in 1..{}".format(u, v, len(values)),
                    field="pairs",
                )
            a, b = rank[u - 1], rank[v - 1]
            remapped.append((min(a, b), max(a, b)))
        pairs = remapped

    return LayoutDocument(layout=layout, pairs=pairs, digest=digest_bytes(raw))


def load_layout(path):
    """
    Documentation:

        ---
        Description:
            Read a layout document from disk.
    """
    try:
        with open(path, "rb") as file:
            raw = file.read()
    except OSError as error:
        raise LayoutFileError("cannot read layout file {}: {}".format(path, error.strerror))
    return parse_layout_document(raw)


def layout_document(layout, pairs=None):
    """
    Documentation:

        ---
        Description:
            JSON text of a layout document; pairs are written 1-based.
    """
    content = {"positions": [format_rational(p) for p in layout.positions]}
    if pairs is not None:
        content["pairs"] = [[u + 1, v + 1] for u, v in pairs]
    return json.dumps(content, indent=2) + "\n"


def dump_layout(layout, path, pairs=None):
    with open(path, "w") as file:
        file.write(layout_document(layout, pairs=pairs))


def _json_number(value):
    # inf / nan have no JSON form
    value = float(value)
    if math.isnan(value):
        return None
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


def render_document(manifest, body):
    """
    Documentation:

        ---
        Description:
            Serialize an output document: the manifest first, then the body fields. Output is
            deterministic for identical inputs.
    """
    content = {"manifest": manifest.as_dict()}
    content.update(body)
    return json.dumps(content, indent=2, allow_nan=False) + "\n"


def report_body(report):
    return {"report": report.as_dict()}


def sweep_body(layout, theta0, grid_size, trials, seed, sweep):
    """
    Documentation:

        ---
        Description:
            RMSE sweep document body from the DataFrame returned by rmse_sweep.
    """
    return {
        "layout": [format_rational(p) for p in layout.positions],
        "theta0": float(theta0),
        "grid_size": int(grid_size),
        "trials": int(trials),
        "seed": int(seed),
        "results": [
            {
                "snr_db": _json_number(row.snr_db),
                "rmse_rad": _json_number(row.rmse_rad),
                "trials_failed": int(row.trials_failed),
            }
            for row in sweep.itertuples(index=False)
        ],
    }


def search_body(results, verdicts):
    return {
        "layouts": [
            {
                "positions": [format_rational(p) for p in layout.positions],
                "aperture": format_rational(aperture),
                "verdict": verdict.value,
            }
            for (layout, aperture), verdict in zip(results, verdicts)
        ]
    }
