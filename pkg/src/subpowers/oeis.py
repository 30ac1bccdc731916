"""OEIS b-file parsing, sequence comparison and an opt-in fetcher.

A b-file is plain text, one ``<index> <value>`` pair per line, with
``#`` comment lines.  Snapshots of A131689 (the subpower triangle read by
rows) and A000670 (Fubini numbers) ship with the package, so comparisons work
offline.  Network access only happens through :func:`fetch_bfile` with
``fetch=True``.
"""
from __future__ import annotations

import os
import re
import tempfile
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Tuple, Union

from .core import SubpowerTable
from .transforms import IntSequence

__all__ = [
    "BFileRecord",
    "BFileParseError",
    "BFileStructureError",
    "ComparisonReport",
    "parse_bfile",
    "flatten_triangle",
    "compare",
    "fetch_bfile",
    "load_bfile",
    "validate_a_number",
    "cache_dir",
    "CACHE_ENV",
]

CACHE_ENV = "SUBPOWERS_CACHE"
OEIS_URL = "https://oeis.org/{a}/b{digits}.txt"
_A_NUMBER = re.compile(r"A\d{6}")


class BFileParseError(ValueError):
    def __init__(self, lineno: int, line: str):
        super().__init__(f"line {lineno}: malformed b-file line {line!r}")
        self.lineno = lineno


class BFileStructureError(ValueError):
    pass


@dataclass(frozen=True)
class BFileRecord:
    entries: Tuple[Tuple[int, int], ...]
    source_id: str = ""

    @property
    def first_index(self) -> int:
        return self.entries[0][0]

    @property
    def values(self) -> Tuple[int, ...]:
        return tuple(v for _, v in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def parse_bfile(text: Union[bytes, str], source_id: str = "") -> BFileRecord:
    """Parse b-file text into contiguous ``(index, value)`` pairs.

    Raises :class:`BFileParseError` (with the line number) on a line that is
    not two integers, and :class:`BFileStructureError` when indices skip or
    repeat.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(lineno, raw)
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(lineno, raw) from None
        if entries and idx != entries[-1][0] + 1:
            raise BFileStructureError(
                f"line {lineno}: index {idx} follows {entries[-1][0]} (indices must increase by 1)"
            )
        entries.append((idx, val))
    return BFileRecord(tuple(entries), source_id)


def flatten_triangle(table: SubpowerTable) -> IntSequence:
    """Rows m = 0..max_m concatenated, each holding ``n = 0..m``."""
    return IntSequence([v for row in table.rows for v in row])


@dataclass(frozen=True)
class ComparisonReport:
    compared: int
    matched: int
    # (b-file index, expected from the reference, actual from the sequence)
    first_mismatch: Optional[Tuple[int, int, int]] = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def compare(seq: IntSequence, reference: BFileRecord) -> ComparisonReport:
    """Positionally compare the common prefix of ``seq`` and ``reference``.

    The b-file's first index is taken as the offset of ``seq.values[0]``.
    Length differences are not an error; an empty overlap is.
    """
    n = min(len(seq.values), len(reference.entries))
    if n == 0:
        raise ValueError("nothing to compare: empty sequence or b-file")
    matched = 0
    first = None
    for actual, (idx, expected) in zip(seq.values[:n], reference.entries[:n]):
        if actual == expected:
            matched += 1
        elif first is None:
            first = (idx, expected, actual)
    return ComparisonReport(n, matched, first)


def validate_a_number(a_number: str) -> str:
    if not _A_NUMBER.fullmatch(a_number):
        raise ValueError(f"malformed A-number {a_number!r}; expected 'A' followed by 6 digits")
    return a_number


def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "subpowers"


def _bfile_name(a_number: str) -> str:
    return f"b{a_number[1:]}.txt"


def _bundled(a_number: str) -> Optional[bytes]:
    res = resources.files("subpowers").joinpath("data").joinpath(_bfile_name(a_number))
    if res.is_file():
        return res.read_bytes()
    return None


def _write_atomic(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".part")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def fetch_bfile(a_number: str, fetch: bool = False, timeout: float = 30.0) -> bytes:
    """Return b-file bytes for ``a_number``.

    Offline (the default) this reads the local cache, then the bundled
    snapshots, and raises :class:`OSError` if neither has the file.  With
    ``fetch=True`` it downloads from oeis.org and refreshes the cache.
    """
    validate_a_number(a_number)
    cached = cache_dir() / _bfile_name(a_number)
    if fetch:
        url = OEIS_URL.format(a=a_number, digits=a_number[1:])
        try:
            with urllib.request.urlopen(url, timeout=timeout) as resp:
                data = resp.read()
        except Exception as exc:  # URLError, timeouts, HTTP errors
            raise OSError(f"could not download {url}: {exc}") from exc
        _write_atomic(cached, data)
        return data
    if cached.is_file():
        return cached.read_bytes()
    data = _bundled(a_number)
    if data is None:
        raise OSError(f"no cached or bundled b-file for {a_number}; rerun with --fetch to download it")
    return data


def load_bfile(a_number: str, fetch: bool = False) -> BFileRecord:
    return parse_bfile(fetch_bfile(a_number, fetch=fetch), source_id=a_number)
