import json

import pytest

from qtbrauer.fileformat import parse
from qtbrauer.hopf import check_qt
from qtbrauer.library import (ODD_ONLY_FILES, bundled_document, data_names, data_text, load_bundle,
                              regenerate_data, standard_bundles)
from qtbrauer.linalg import GF, QQ
from qtbrauer.suite import BUNDLED_FILES, load_expected


def test_data_files_match_generator():
    texts = regenerate_data(None)
    assert sorted(texts) == data_names()
    for name, text in texts.items():
        assert data_text(name) == text


@pytest.mark.parametrize("fld", [QQ, GF(7), GF(2)], ids=str)
def test_bundles_load_and_verify(fld):
    for name in data_names():
        if fld.characteristic == 2 and name in ODD_ONLY_FILES:
            continue
        b = load_bundle(bundled_document(name, fld), name)
        assert b.field == fld
        for r in b.r_matrices.values():
            assert check_qt(b.hopf, r.vector)


def test_standard_bundles_by_characteristic():
    assert [b.name for b in standard_bundles(QQ)] == ["sweedler", "C2", "C1"]
    assert [b.name for b in standard_bundles(GF(7))] == ["sweedler", "C2", "C1", "C3"]
    assert [b.name for b in standard_bundles(GF(2))] == ["C1"]


def test_expected_values_are_complete():
    exp = load_expected()
    assert set(BUNDLED_FILES) >= {"sweedler", "trivial"}
    assert exp["sweedler"]["invariant dims"] == {"k": 1, "L1(V)": 2, "L2(V)": 2, "RH": 4,
                                                  "RH(x)L2(regular)": 16}
    assert exp["sweedler"]["pi dim"] == 4
    assert exp["sweedler"]["EndV H*-Galois"] is False
    json.dumps(exp)
