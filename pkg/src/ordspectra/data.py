"""Data-file ingestion and the shared provider store.

File format (UTF-8, line oriented, ``#`` comments):

    classnum <label> <a> <b> <k>      exact class numbers
    spectrum <family> <Q> <o1,o2,..>  exceptional element-order spectra
    q0 <key> <q0>                     field-size cutoffs for the searches
    constant <name> <value>           named integers / reals

Loading is transactional: any malformed line rejects the whole file with
its line number, and duplicate keys (within the file or against already
loaded data) are errors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from . import arith
from .class_numbers import LABELS, ClassNumberProvider
from .errors import DuplicateKey, ParseError
from .lie_catalog import EXCEPTIONAL_RANK
from .torus_spectra import SpectrumProvider


@dataclass
class DataStore:
    """All ingested data: class numbers, spectra, constants, q0 rows."""

    class_numbers: ClassNumberProvider = field(default_factory=ClassNumberProvider)
    spectra: SpectrumProvider = field(default_factory=SpectrumProvider)
    constants: dict = field(default_factory=dict)
    q0: dict = field(default_factory=dict)
    _keys: set = field(default_factory=set)


def _parse_int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line_no, f"{what} must be an integer, got {token!r}")


def _parse_line(line: str, line_no: int):
    parts = line.split()
    kind = parts[0]
    if kind == "classnum":
        if len(parts) != 5:
            raise ParseError(line_no, "classnum needs: label a b k")
        label = parts[1]
        if label not in LABELS:
            raise ParseError(line_no, f"unknown classnum label {label!r}")
        a = _parse_int(parts[2], line_no, "first parameter")
        b = _parse_int(parts[3], line_no, "second parameter")
        k = _parse_int(parts[4], line_no, "class number")
        if k < 1:
            raise ParseError(line_no, "class numbers are positive")
        return ("classnum", label, a, b), k
    if kind == "spectrum":
        if len(parts) != 4:
            raise ParseError(line_no, "spectrum needs: family Q orders")
        family = parts[1]
        if family not in EXCEPTIONAL_RANK:
            raise ParseError(line_no, f"spectra are ingested for exceptional "
                                      f"families only, got {family!r}")
        Q = _parse_int(parts[2], line_no, "Q")
        try:
            orders = sorted({int(tok) for tok in parts[3].split(",")})
        except ValueError:
            raise ParseError(line_no, "orders must be a comma-separated integer list")
        if not orders or orders[0] < 1:
            raise ParseError(line_no, "orders must be positive")
        return ("spectrum", family, Q), orders
    if kind == "q0":
        if len(parts) != 3:
            raise ParseError(line_no, "q0 needs: key q0")
        key: int | str = parts[1]
        if parts[1].isdigit():
            key = int(parts[1])
        elif parts[1] not in EXCEPTIONAL_RANK:
            raise ParseError(line_no, f"q0 key must be a rank or an exceptional "
                                      f"family, got {parts[1]!r}")
        q0 = _parse_int(parts[2], line_no, "q0")
        if arith.prime_power_split(q0) is None:
            raise ParseError(line_no, f"q0 value {q0} is not a prime power")
        return ("q0", key), q0
    if kind == "constant":
        if len(parts) != 3:
            raise ParseError(line_no, "constant needs: name value")
        name = parts[1]
        try:
            value: int | float = int(parts[2])
        except ValueError:
            try:
                value = float(parts[2])
            except ValueError:
                raise ParseError(line_no, f"bad constant value {parts[2]!r}")
        return ("constant", name), value
    raise ParseError(line_no, f"unknown record kind {kind!r}")


def load_lines(lines, store: DataStore) -> int:
    """Parse and apply records; transactional per call."""
    staged = []
    staged_keys = set()
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, value = _parse_line(line, line_no)
        if key in staged_keys or key in store._keys:
            raise DuplicateKey(line_no, " ".join(str(k) for k in key))
        staged_keys.add(key)
        staged.append((key, value))
    for key, value in staged:
        kind = key[0]
        if kind == "classnum":
            _, label, a, b = key
            store.class_numbers.ingest(label, a, b, value)
        elif kind == "spectrum":
            _, family, Q = key
            store.spectra.add(family, Q, value)
        elif kind == "q0":
            store.q0[key[1]] = value
        else:
            store.constants[key[1]] = value
        store._keys.add(key)
    return len(staged)


def load_data(path: str, store: DataStore) -> int:
    """Load one data file into the store; returns the record count."""
    with open(path, encoding="utf-8") as handle:
        return load_lines(handle, store)


def load_seed(store: DataStore) -> int:
    """Load the packaged seed table (small class numbers regenerable by
    the oracle, plus the Suzuki seed)."""
    text = resources.files("ordspectra").joinpath("data/seed.dat").read_text(
        encoding="utf-8"
    )
    return load_lines(text.splitlines(), store)


def default_store(seed: bool = True) -> DataStore:
    store = DataStore()
    if seed:
        load_seed(store)
    return store
