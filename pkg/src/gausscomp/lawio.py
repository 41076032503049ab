"""Text formats: form literals and the law JSON object.

Law files look like::

    {"f": [2, 2, 3], "fp": [2, 2, 3], "F": [1, 0, 5],
     "e": [[2, 0], [1, 1], [1, 1], [-2, 1]]}

Integers beyond 2**53 are written as decimal strings; both spellings are
accepted on input.
"""

from __future__ import annotations

import json
import re
import sys

from .bilinear import BilinearLaw
from .errors import UsageError, ZeroForm
from .forms import Form

SAFE_INT = 2 ** 53
FIELDS = ("f", "fp", "F", "e")
_INT_RE = re.compile(r"^[+-]?\d+$")


class FormSyntaxError(UsageError):
    pass


class LawFormatError(UsageError):
    pass


def parse_form(text: str) -> Form:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    tokens = [t.strip() for t in body.split(",")]
    if len(tokens) != 3:
        raise FormSyntaxError(f"expected three comma-separated integers, got {text!r}")
    for tok in tokens:
        if not _INT_RE.match(tok):
            raise FormSyntaxError(f"bad integer token {tok!r} in {text!r}")
    try:
        return Form(*(int(t) for t in tokens))
    except ZeroForm:
        raise FormSyntaxError("zero form") from None


def _int(value, name):
    if isinstance(value, bool):
        raise LawFormatError(f"invalid field: {name}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _INT_RE.match(value):
        return int(value)
    raise LawFormatError(f"invalid field: {name}")


def _ints(value, n, name):
    if not isinstance(value, list) or len(value) != n:
        raise LawFormatError(f"invalid field: {name}")
    return [_int(v, name) for v in value]


def law_from_obj(obj) -> tuple[Form, Form, Form, BilinearLaw]:
    if not isinstance(obj, dict):
        raise LawFormatError("law must be a JSON object")
    for name in FIELDS:
        if name not in obj:
            raise LawFormatError(f"missing field: {name}")
    forms = []
    for name in ("f", "fp", "F"):
        try:
            forms.append(Form(*_ints(obj[name], 3, name)))
        except ZeroForm:
            raise LawFormatError(f"invalid field: {name} (zero form)") from None
    e = obj["e"]
    if not isinstance(e, list) or len(e) != 4:
        raise LawFormatError("invalid field: e")
    law = BilinearLaw.from_list([_ints(v, 2, "e") for v in e])
    return forms[0], forms[1], forms[2], law


def _out(n: int):
    return str(n) if abs(n) > SAFE_INT else n


def law_to_obj(f: Form, fp: Form, F: Form, law: BilinearLaw) -> dict:
    return {
        "f": [_out(v) for v in f.coeffs()],
        "fp": [_out(v) for v in fp.coeffs()],
        "F": [_out(v) for v in F.coeffs()],
        "e": [[_out(v.x), _out(v.y)] for v in law.images()],
    }


def dumps_law(f, fp, F, law) -> str:
    return json.dumps(law_to_obj(f, fp, F, law)) + "\n"


def loads_law(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LawFormatError(f"invalid JSON: {exc}") from None
    return law_from_obj(obj)


def load_law(path: str):
    if path == "-":
        return loads_law(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return loads_law(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
