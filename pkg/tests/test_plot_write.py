import io

import jsonschema
import pytest

from TorusConcordance.floer import TorusKnot
from TorusConcordance.order import load_schema
from TorusConcordance.upsilon import (SvgWriter, FORMATS, upsilon_torus, write_pl_function, pl_function_to_json,
                                      pl_function_from_json, pl_function_to_csv)

def test_json_validates_and_reads_back():
    f = upsilon_torus(TorusKnot(3, 7))
    data = pl_function_to_json(f)
    jsonschema.validate(instance=data, schema=load_schema("pl_function"))
    assert pl_function_from_json(data) == f


def test_csv_has_rational_rows():
    rows = pl_function_to_csv(upsilon_torus(TorusKnot(3, 4))).splitlines()
    assert rows[0] == "t,value"
    assert rows[1] == "0,0"
    assert rows[-1] == "2,0"
    assert all(len(r.split(",")) == 2 for r in rows)


def test_svg_writer():
    svg = SvgWriter(width=400, height=200, margin=10).render(upsilon_torus(TorusKnot(2, 3)))
    assert svg.startswith("<svg")
    assert 'viewBox="0 0 400 200"' in svg
    assert "10.000,10.000" in svg
    with pytest.raises(ValueError):
        SvgWriter(width=30, height=400, margin=20)


def test_write_formats():
    f = upsilon_torus(TorusKnot(2, 3))
    for fmt in FORMATS:
        stream = io.StringIO()
        write_pl_function(stream, fmt, f)
        assert stream.getvalue()
    with pytest.raises(ValueError):
        write_pl_function(io.StringIO(), "png", f)
