import json
import pathlib

import pytest

from gbgen import FieldSpec, PolyRing, lex

DATA = pathlib.Path(__file__).parent / "data"


def load_known_pairs():
    entries = json.loads((DATA / "known_pairs.json").read_text())["pairs"]
    out = []
    for entry in entries:
        field = FieldSpec.from_dict(entry["field"])
        ring = PolyRing(field, entry["nvars"], lex(entry["nvars"]))
        F = [ring.parse(s) for s in entry["F"]]
        G = [ring.parse(s) for s in entry["G"]]
        out.append((entry["id"], ring, F, G))
    return out


@pytest.fixture(scope="session")
def known_pairs():
    return load_known_pairs()
