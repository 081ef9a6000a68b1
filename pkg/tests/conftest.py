import json

import pytest

from stochpoly.enumeration import (
    enumerate_latin_squares,
    enumerate_vertices_bruteforce,
    enumerate_vertices_dd,
)
from stochpoly.tensor import (
    fractional_vertex_example,
    latin_to_tensor,
    tensor_to_json,
    uniform_tensor,
)


@pytest.fixture(scope="session")
def half_vertex():
    """The canonical fractional vertex of the n = 3 polytope."""
    return fractional_vertex_example()


@pytest.fixture(scope="session")
def latin3_tensors():
    """All 12 permutation tensors of dimension 3, generated, not typed in."""
    return [latin_to_tensor(s) for s in enumerate_latin_squares(3)]


@pytest.fixture(scope="session")
def dd3():
    return enumerate_vertices_dd(3)


@pytest.fixture(scope="session")
def brute3():
    # the expensive one: ~2.2 million candidate active sets
    return enumerate_vertices_bruteforce(3)


@pytest.fixture()
def asset_dir(tmp_path, half_vertex):
    """Directory with the JSON assets the CLI examples use, all generated
    from the library rather than hand-written."""
    files = {
        "half_vertex.json": tensor_to_json(half_vertex),
        "uniform3.json": tensor_to_json(uniform_tensor(3)),
        "zeros.json": {
            "n": 2,
            "entries": [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]],
        },
    }
    for name, payload in files.items():
        (tmp_path / name).write_text(json.dumps(payload))
    return tmp_path
