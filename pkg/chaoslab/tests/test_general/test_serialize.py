""" Tests for exact serialisation"""
import os
import sys
sys.path.insert(1, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

from fractions import Fraction
import inspect
import json

import pytest

from chaoslab.errors import ArgumentError
from chaoslab.general import (rational_to_str, rational_from_str, approx_decimal,
                              to_jsonable, canonical_json, fingerprint)

print("=== tests_general_serialize ===")




###############################################################################
################                MAIN TESTS
###############################################################################

def test_rational_text():
    assert rational_to_str(Fraction(6, 4)) == "3/2"
    assert rational_to_str(Fraction(-1, 3)) == "-1/3"
    assert rational_to_str(5) == "5"
    assert rational_from_str("10/4") == Fraction(5, 2)
    big = Fraction(3**200, 2**150 + 1)
    assert rational_from_str(rational_to_str(big)) == big
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_jsonable():
    report = {"count": 10**30, "delta": Fraction(1, 10), "ok": True, "none": None,
              "pairs": [(1, Fraction(1, 2))], Fraction(1, 4): "key"}
    out = to_jsonable(report)
    assert out == {"count": str(10**30), "delta": "1/10", "ok": True, "none": None,
                   "pairs": [["1", "1/2"]], "1/4": "key"}
    with pytest.raises(ArgumentError):
        to_jsonable(0.5)
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_canonical_json_is_stable():
    a = {"b": Fraction(1, 3), "a": [1, 2]}
    b = {"a": [1, 2], "b": Fraction(2, 6)}
    assert canonical_json(a) == canonical_json(b)
    assert canonical_json(a).endswith("\n")
    assert json.loads(canonical_json(a)) == {"a": ["1", "2"], "b": "1/3"}
    assert fingerprint(a) == fingerprint(b)
    assert fingerprint(a).startswith("sha256:")
    assert fingerprint(a) != fingerprint({"a": [1, 2], "b": Fraction(1, 4)})
    print(f"{inspect.stack()[0][3]} passed")
    return True


def test_approx_decimal():
    assert approx_decimal(Fraction(1, 4)) == "0.25"
    assert approx_decimal(Fraction(1, 3), 3) == "0.333"
    print(f"{inspect.stack()[0][3]} passed")
    return True
