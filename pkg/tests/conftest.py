import json

import pytest

from doamachine.geometry import make_layout, pair_distances


@pytest.fixture
def layout_a():
    # d = [1.2, 6, 4.8], D = [1, 5, 4], c = 6/5: unidentifiable
    return make_layout(["0", "1.2", "6"])


@pytest.fixture
def layout_b():
    # d = [3.6, 8.1, 4.5], D = [4, 9, 5], c = 9/10: identifiable
    return make_layout(["0", "3.6", "8.1"])


@pytest.fixture
def distances_a(layout_a):
    return pair_distances(layout_a)


@pytest.fixture
def distances_b(layout_b):
    return pair_distances(layout_b)


@pytest.fixture
def layout_file(tmp_path):
    def write(content, name="layout.json"):
        path = tmp_path / name
        if isinstance(content, str):
            path.write_text(content)
        else:
            path.write_text(json.dumps(content))
        return str(path)

    return write
