import json
from fractions import Fraction as F

import pytest

from umbra import io
from umbra.symtensor import SiteSpace


def test_fraction_lists(tmp_path):
    assert io.parse_fraction_list("2, 1/2,-3") == [2, F(1, 2), -3]
    assert io.parse_fraction_list('["1/3", 4]') == [F(1, 3), 4]
    assert io.parse_fraction_list("[0,1,-1/2]") == [0, 1, F(-1, 2)]
    assert io.parse_fraction_list('{"degree": 2, "coeffs": ["1", "0", "5/7"]}') == [1, 0, F(5, 7)]
    path = tmp_path / "c.txt"
    path.write_text("1\n2/3\n")
    assert io.parse_fraction_list(str(path)) == [1, F(2, 3)]
    assert io.parse_fraction_list("") == []
    with pytest.raises(ValueError):
        io.parse_fraction_list("1,x")


def test_int_lists():
    assert io.parse_int_list("1,0,3") == [1, 0, 3]
    with pytest.raises(ValueError):
        io.parse_int_list("1/2")


def test_sites(tmp_path):
    assert io.parse_sites(None) == SiteSpace(1)
    assert io.parse_sites("3") == SiteSpace(3)
    assert io.parse_sites("1/2,2") == SiteSpace(2, (F(1, 2), 2))
    path = tmp_path / "sites.json"
    path.write_text(json.dumps({"m": 2, "weights": ["1/2", "3"]}))
    assert io.parse_sites(str(path)) == SiteSpace(2, (F(1, 2), 3))
    assert io.parse_sites('{"m": 2}') == SiteSpace(2)


def test_rendering():
    assert io.render(F(-3, 6)) == "-1/2"
    assert io.csv_line([1, F(2, 4)]) == "1,1/2"
    assert io.dumps({"a": "1/2"}) == '{\n  "a": "1/2"\n}'
