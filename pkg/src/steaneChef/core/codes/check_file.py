"""
Check-matrix text files.

Format::

    # comment
    HX
    1 0 1 0 1 0 1
    ...
    HZ
    1 0 1 0 1 0 1

Rows may be written with or without spaces between entries. ``#`` starts a comment
anywhere on a line.
"""

from typing import Dict, List, Optional, Tuple, Union

from steaneChef.core.codes.css_code import CssCode
from steaneChef.core.gf2 import BitMatrix
from steaneChef.utils.errors import CheckFileParseError

SECTIONS = ("HX", "HZ")
_ALLOWED = set("01 ")


def parse_check_file(text: str) -> Tuple[BitMatrix, BitMatrix]:
    """
    Parse the two check matrices exactly as written.

    Returns:
        (h_x, h_z), unvalidated.

    Raises:
        CheckFileParseError: On ragged rows, stray characters, rows before a header,
            repeated or missing sections.
    """
    rows: Dict[str, List[List[int]]] = {}
    width: Dict[str, int] = {}
    current: Optional[str] = None
    last_line = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        line = raw.split("#", 1)[0].rstrip("\r").strip()
        if not line:
            continue
        if line.upper() in SECTIONS:
            current = line.upper()
            if current in rows:
                raise CheckFileParseError(f"section {current} appears twice", number)
            rows[current] = []
            continue
        bad = set(line) - _ALLOWED
        if bad:
            raise CheckFileParseError(f"unexpected characters {''.join(sorted(bad))!r}", number)
        if current is None:
            raise CheckFileParseError("row before any HX/HZ section header", number)
        bits = [int(ch) for ch in line.replace(" ", "")]
        expected = width.setdefault(current, len(bits))
        if len(bits) != expected:
            raise CheckFileParseError(
                f"ragged row in {current}: {len(bits)} entries, expected {expected}", number
            )
        rows[current].append(bits)

    for section in SECTIONS:
        if section not in rows:
            raise CheckFileParseError(f"missing section header {section}", last_line + 1)

    n = max(width.values(), default=0)
    h_x = BitMatrix.from_rows(rows["HX"], cols=width.get("HX", n))
    h_z = BitMatrix.from_rows(rows["HZ"], cols=width.get("HZ", n))
    return h_x, h_z


def serialize_check_file(
    source: Union[CssCode, Tuple[BitMatrix, BitMatrix]], title: Optional[str] = None
) -> str:
    """Inverse of :func:`parse_check_file`."""
    if isinstance(source, CssCode):
        h_x, h_z = source.h_x, source.h_z
        title = title or f"{source.name} {source.label()}"
    else:
        h_x, h_z = source
    lines = []
    if title:
        lines.append(f"# {title}")
    for header, matrix in (("HX", h_x), ("HZ", h_z)):
        lines.append(header)
        lines.extend(" ".join(str(b) for b in v.to_list()) for v in matrix)
    return "\n".join(lines) + "\n"
