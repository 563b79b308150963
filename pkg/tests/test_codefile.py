import pytest

from gaugeqec.catalog import CATALOG_NAMES, catalog
from gaugeqec.codefile import CodeFileError, parse_code_file, serialize_code

SHOR9_FILE = """\
n: 9

[stabilizer]
XXXXXXIII
XXXIIIXXX
ZZIIIIIII
IZZIIIIII
IIIZZIIII
IIIIZZIII
IIIIIIZZI
IIIIIIIZZ

[logical_x]
XXXXXXXXX

[logical_z]
ZZZZZZZZZ
"""


def test_parse_table_one_transcription():
    code = parse_code_file(SHOR9_FILE)
    assert code == catalog("shor9")


def test_round_trip_catalog_codes():
    for name in CATALOG_NAMES:
        code = catalog(name)
        assert parse_code_file(serialize_code(code)) == code


def test_serialize_is_stable():
    text = serialize_code(catalog("shor9"))
    assert text == SHOR9_FILE
    assert serialize_code(parse_code_file(text)) == text


def test_comments_and_blank_lines_ignored():
    text = "# header comment\nn: 2\n\n[stabilizer]\nZZ  # the only generator\n"
    code = parse_code_file(text)
    assert code.s == 1 and code.n == 2


def test_signs_round_trip():
    text = "n: 2\n[gauge_x]\n-iYI\n[gauge_z]\nZI\n[logical_x]\nIX\n[logical_z]\nIZ\n"
    code = parse_code_file(text)
    assert serialize_code(code).count("-iYI") == 1


def test_bad_character_position():
    text = "n: 9\n[stabilizer]\nXXXXXXIIW\n"
    with pytest.raises(CodeFileError) as err:
        parse_code_file(text)
    assert err.value.line == 3
    assert err.value.col == 9


def test_missing_header():
    with pytest.raises(CodeFileError):
        parse_code_file("[stabilizer]\nZZ\n")


def test_unknown_section():
    with pytest.raises(CodeFileError) as err:
        parse_code_file("n: 2\n[stabilisers]\nZZ\n")
    assert err.value.line == 2


def test_operator_outside_section():
    with pytest.raises(CodeFileError):
        parse_code_file("n: 2\nZZ\n")


def test_wrong_length_operator():
    with pytest.raises(CodeFileError):
        parse_code_file("n: 3\n[stabilizer]\nZZ\n")


def test_unpaired_gauge_sections():
    text = "n: 2\n[gauge_x]\nXI\n"
    with pytest.raises(CodeFileError):
        parse_code_file(text)


def test_validation_errors_surface():
    text = "n: 9\n[stabilizer]\n-XXXXXXIII\n"
    with pytest.raises(CodeFileError) as err:
        parse_code_file(text)
    assert "sign" in str(err.value) or "-1" in str(err.value)


def test_negative_qubit_count():
    with pytest.raises(CodeFileError):
        parse_code_file("n: 0\n")
    with pytest.raises(CodeFileError):
        parse_code_file("n: nine\n")
