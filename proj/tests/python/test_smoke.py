import json
import os
import pathlib

import pytest

import groupcodes as gc

DATA = pathlib.Path(os.environ.get("GROUPCODES_TEST_DATA", pathlib.Path(__file__).parent.parent / "data"))

Z2 = {"kind": "cyclic", "modulus": 2}


def even3():
    return gc.load({"alphabet": Z2, "length": 3, "group": True, "generators": [[1, 1, 0], [0, 1, 1]]})


def test_load_from_dict_text_and_file():
    c = even3()
    assert len(c) == 4
    assert c.q == 2 and c.length == 3 and c.is_group_code
    assert c.words == [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert gc.load(c.to_json()) == c
    assert gc.load(str(DATA / "even3.json")) == c


def test_parameters_and_classification():
    p = gc.parameters(even3())
    assert p["min_distance"] == 2
    assert gc.classify(even3())["mds"] is True
    assert gc.certificates(even3())[0] == "mds-nontrivial"


def test_decomposition():
    c = gc.load(str(DATA / "even3_squared.json"))
    assert gc.is_decomposable(c) == [0, 1, 2]
    d = gc.decompose(c)
    assert d["blocks"] == [[1, 2, 3], [4, 5, 6]]
    assert gc.is_decomposable(gc.load(str(DATA / "z4_example.json"))) is None


def test_isomorphism_and_automorphisms():
    a = gc.load(str(DATA / "even3_plus_rep3.json"))
    b = gc.load(str(DATA / "rep3_plus_even3.json"))
    w = gc.isomorphism(a, b)
    assert w["sigma"] == [4, 5, 6, 1, 2, 3]
    assert w["verified_hom"] is True
    assert gc.isomorphism(even3(), gc.load(str(DATA / "repetition3.json"))) is None
    assert gc.aut_group(even3())["order"] == 6


def test_cyclic_tools():
    code, sigma = gc.interleave(even3(), 2)
    assert sigma == [1, 3, 5, 2, 4, 6]
    assert gc.is_cyclic(code)
    assert gc.cyclic_report(code)["is_cyclic"] is True
    joined = gc.join([even3(), even3()])
    assert joined.q == 4 and len(joined) == 16


def test_errors():
    with pytest.raises(gc.GroupCodesError, match="parse-error"):
        gc.load(str(DATA / "malformed.json"))
    with pytest.raises(ValueError, match="closure-violation"):
        gc.load({"alphabet": Z2, "length": 2, "group": True, "codewords": [[0, 0], [0, 1], [1, 0]]})
    with pytest.raises(gc.GroupCodesError, match="precondition"):
        gc.interleave(gc.load(str(DATA / "z4_example.json")), 2)


def test_selftest_subset():
    rows = gc.selftest([1, 2])
    assert [r["id"] for r in rows] == [1, 2]
    assert all(r["pass"] for r in rows)
