"""The embedded dataset of 53 sets of ternary forms sharing representations.

Each set lists inequivalent positive-definite ternary forms that represent
exactly the same integers (confirmed far beyond the bounds used here), with
the exact determinant, the ratio column (determinants within a set are
proportional to the printed ratios), a regularity mark, and the Bravais
label.  The data ships as a text file guarded by a checksum; the loader
re-derives and re-checks every numeric claim that the file makes.
"""

import functools
import hashlib
import math
from fractions import Fraction
from importlib import resources

from .forms import IntForm, _PickleBySlots, gram_determinant, is_positive_definite
from .repsets import rep_equal_up_to

_DATA_SHA256 = "7a26180bafc78a52a311d9808d50471e83e0ebb3939c6c783aa955b80a40fd9e"
_MARKS = ("", "*", "**", "*!")


class TableSet(_PickleBySlots):
    """One group of forms with identical represented sets, plus metadata."""

    __slots__ = ("number", "forms", "determinants", "ratios", "marks", "bravais")

    def __init__(self, number, forms, determinants, ratios, marks, bravais):
        object.__setattr__(self, "number", int(number))
        object.__setattr__(self, "forms", tuple(forms))
        object.__setattr__(self, "determinants", tuple(determinants))
        object.__setattr__(self, "ratios", tuple(ratios))
        object.__setattr__(self, "marks", tuple(marks))
        object.__setattr__(self, "bravais", tuple(bravais))

    def __setattr__(self, name, value):
        raise AttributeError("TableSet is immutable")

    def __len__(self):
        return len(self.forms)

    def __repr__(self):
        return f"TableSet({self.number}, {len(self.forms)} forms)"


def _parse_rows(text):
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cells = [c.strip() for c in line.split("|")]
        if len(cells) != 6:
            raise ValueError(f"corrupted table data: line {lineno}")
        number = int(cells[0])
        coeffs = tuple(int(t) for t in cells[1].split())
        det = Fraction(cells[2])
        ratio = int(cells[3])
        mark = "" if cells[4] == "-" else cells[4]
        if mark not in _MARKS:
            raise ValueError(f"corrupted table data: bad mark on line {lineno}")
        rows.append((number, coeffs, det, ratio, mark, cells[5]))
    return rows


def _validate(sets):
    if len(sets) != 53 or sum(len(s) for s in sets) != 151:
        raise ValueError("corrupted table data: wrong set/form counts")
    for s in sets:
        if len(s) < 2:
            raise ValueError(f"corrupted table data: set {s.number} too small")
        base = None
        for f, det, ratio in zip(s.forms, s.determinants, s.ratios):
            if not is_positive_definite(f):
                raise ValueError(f"corrupted table data: set {s.number} not definite")
            if math.gcd(*f.coeffs) != 1:
                raise ValueError(f"corrupted table data: set {s.number} imprimitive")
            if gram_determinant(f) != det:
                raise ValueError(f"corrupted table data: set {s.number} determinant")
            if base is None:
                base = det / ratio
            elif det / ratio != base:
                raise ValueError(f"corrupted table data: set {s.number} ratios")


@functools.lru_cache(maxsize=8)
def table_dataset(path=None):
    """All 53 sets, loaded from the bundled data file (or an override path).

    The bundled file must match its recorded checksum; any file must pass
    the structural re-checks (counts, definiteness, primitivity, exact
    determinants, ratio proportionality).
    """
    if path is None:
        data = (resources.files("repforms") / "data" / "table_sets.txt").read_bytes()
        digest = hashlib.sha256(data).hexdigest()
        if digest != _DATA_SHA256:
            raise ValueError("corrupted table data: checksum mismatch")
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    rows = _parse_rows(data.decode())
    groups = {}
    for number, coeffs, det, ratio, mark, brav in rows:
        groups.setdefault(number, []).append((coeffs, det, ratio, mark, brav))
    sets = []
    for number in sorted(groups):
        members = groups[number]
        sets.append(
            TableSet(
                number,
                [IntForm(m[0]) for m in members],
                [m[1] for m in members],
                [m[2] for m in members],
                [m[3] for m in members],
                [m[4] for m in members],
            )
        )
    sets = tuple(sets)
    _validate(sets)
    return sets


class TableReport(_PickleBySlots):
    """Outcome of checking one table set at a bound."""

    __slots__ = ("number", "bound", "pairs_checked", "all_equal", "mismatch")

    def __init__(self, number, bound, pairs_checked, all_equal, mismatch):
        object.__setattr__(self, "number", number)
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "pairs_checked", pairs_checked)
        object.__setattr__(self, "all_equal", all_equal)
        object.__setattr__(self, "mismatch", mismatch)

    def __setattr__(self, name, value):
        raise AttributeError("TableReport is immutable")

    @property
    def ok(self):
        return self.all_equal

    def __repr__(self):
        state = "ok" if self.ok else f"mismatch {self.mismatch!r}"
        return f"TableReport(set {self.number}, bound {self.bound}, {state})"


def verify_table_set(set_no, bound, path=None):
    """Pairwise-compare the represented sets of one table set up to bound.

    The determinant and ratio columns are re-checked at load time; this
    runs the representation comparison and reports the first mismatch
    (which would disprove the dataset) if any.
    """
    sets = table_dataset(path)
    if not 1 <= int(set_no) <= len(sets):
        raise ValueError(f"set number must be in 1..{len(sets)}")
    ts = sets[int(set_no) - 1]
    pairs = 0
    for i in range(len(ts.forms)):
        for j in range(i + 1, len(ts.forms)):
            cmp = rep_equal_up_to(ts.forms[i], ts.forms[j], bound)
            pairs += 1
            if not cmp.equal:
                return TableReport(ts.number, bound, pairs, False, (i, j, cmp))
    return TableReport(ts.number, bound, pairs, True, None)
