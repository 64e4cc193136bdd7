import pytest

from steaneChef.core.codes import parse_check_file, registry_lookup, serialize_check_file
from steaneChef.core.gf2 import BitMatrix
from steaneChef.utils.errors import CheckFileParseError

STEANE_FILE = """HX
1 0 1 0 1 0 1
0 1 1 0 0 1 1
0 0 0 1 1 1 1
HZ
1 0 1 0 1 0 1
0 1 1 0 0 1 1
0 0 0 1 1 1 1
"""

COMMENTED_FILE = """# Steane code
HX   # X checks

1 0 1 0 1 0 1
0 1 1 0 0 1 1  # second row
# interleaved comment
0 0 0 1 1 1 1

HZ
1010101
0110011
0001111
"""


def test_parse_steane():
    h_x, h_z = parse_check_file(STEANE_FILE)
    expected = BitMatrix.from_strings(["1010101", "0110011", "0001111"])
    assert h_x == expected
    assert h_z == expected


def test_comments_and_blank_lines_are_ignored():
    assert parse_check_file(COMMENTED_FILE) == parse_check_file(STEANE_FILE)


def test_ragged_row_reports_line():
    text = "HX\n1 0 1\n1 0\nHZ\n"
    with pytest.raises(CheckFileParseError) as info:
        parse_check_file(text)
    assert info.value.line_number == 3
    assert "line 3" in str(info.value)


def test_bad_character_reports_line():
    with pytest.raises(CheckFileParseError) as info:
        parse_check_file("HX\n1 0 2\nHZ\n")
    assert info.value.line_number == 2


def test_row_before_header():
    with pytest.raises(CheckFileParseError) as info:
        parse_check_file("1 0 1\nHX\nHZ\n")
    assert info.value.line_number == 1


def test_missing_section():
    with pytest.raises(CheckFileParseError):
        parse_check_file("HX\n1 1\n")


def test_empty_section_takes_width_from_other():
    h_x, h_z = parse_check_file("HX\nHZ\n1 1 1 1\n")
    assert h_x.shape == (0, 4)
    assert h_z.shape == (1, 4)


@pytest.mark.parametrize("name", ["steane", "cc_4_8_8_17", "surface_9"])
def test_serialize_round_trip(name):
    code = registry_lookup(name)
    h_x, h_z = parse_check_file(serialize_check_file(code))
    assert h_x == code.h_x
    assert h_z == code.h_z
