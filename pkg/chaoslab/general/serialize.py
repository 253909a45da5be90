"""Exact text forms of rationals and big integers, and canonical JSON"""

from fractions import Fraction
import hashlib
import json

import chaoslab.defaults as default
from chaoslab.errors import ArgumentError
from chaoslab.general.validateKeyword import validate_keyword_rational


def rational_to_str(value):
    '''"p/q" (or "p" for integers), the only form rationals take in files'''
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_from_str(text, name="value"):
    return validate_keyword_rational(text, name)


def approx_decimal(value, digits=None):
    '''Decimal approximation for plotting; never fed back into a computation'''
    digits = default.csv_digits if digits is None else digits
    return f"{float(Fraction(value)):.{digits}g}"


def to_jsonable(obj):
    '''
    Convert a report into JSON-compatible values: rationals become "p/q"
    strings, integers become decimal strings (they may exceed any float),
    booleans and strings are kept. Mappings with non-string keys get their
    keys converted in the same way.
    '''
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return rational_to_str(obj)
    if isinstance(obj, dict):
        return {_key(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    raise ArgumentError(f"Cannot serialise value of type `{type(obj)}`")


def _key(key):
    if isinstance(key, str):
        return key
    if isinstance(key, (int, Fraction)):
        return rational_to_str(key)
    raise ArgumentError(f"Cannot serialise mapping key of type `{type(key)}`")


def canonical_json(obj):
    '''Byte-stable JSON text: sorted keys, fixed separators, trailing newline'''
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2,
                      separators=(",", ": "), ensure_ascii=True) + "\n"


def fingerprint(obj):
    '''sha256 digest of the compact canonical JSON form of `obj`'''
    payload = json.dumps(to_jsonable(obj), sort_keys=True, separators=(",", ":"),
                         ensure_ascii=True)
    return "sha256:" + hashlib.sha256(payload.encode("utf-8")).hexdigest()
