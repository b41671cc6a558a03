"""Source file discovery and line-of-code counting.

A line counts toward LoC when it is neither blank nor consists solely of
comment text; string literals containing comment markers stay code.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import InputError

DEFAULT_EXTENSION = ".java"


@dataclass(frozen=True)
class SourceFile:
    path: str
    text: str
    line_count: int

    @classmethod
    def from_text(cls, path: str, text: str) -> "SourceFile":
        return cls(path=path, text=text, line_count=count_code_lines(text))

    @classmethod
    def read(cls, path: str | Path) -> "SourceFile":
        p = Path(path)
        try:
            raw = p.read_bytes()
        except OSError as exc:
            raise InputError(f"cannot read source file {p}: {exc}") from exc
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"source file {p} is not valid UTF-8: {exc}") from exc
        return cls.from_text(p.as_posix(), text)


def count_code_lines(text: str) -> int:
    """Count lines that contain code after comments are stripped.

    Runs a small scanner so that // and /* inside string or char literals
    do not start a comment, and so block comments spanning lines suppress
    every line they fully cover.
    """
    total = 0
    has_code = False
    in_block = False
    in_line = False
    in_string = False
    in_char = False
    escaped = False
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            if has_code:
                total += 1
            has_code = False
            in_line = False
            # literals do not span lines in the supported subset
            in_string = False
            in_char = False
            escaped = False
            i += 1
            continue
        if in_line:
            i += 1
            continue
        if in_block:
            if c == "*" and i + 1 < n and text[i + 1] == "/":
                in_block = False
                i += 2
                continue
            i += 1
            continue
        if in_string or in_char:
            if escaped:
                escaped = False
            elif c == "\\":
                escaped = True
            elif in_string and c == '"':
                in_string = False
            elif in_char and c == "'":
                in_char = False
            i += 1
            continue
        if c == "/" and i + 1 < n and text[i + 1] == "/":
            in_line = True
            i += 2
            continue
        if c == "/" and i + 1 < n and text[i + 1] == "*":
            in_block = True
            i += 2
            continue
        if c == '"':
            in_string = True
            has_code = True
            i += 1
            continue
        if c == "'":
            in_char = True
            has_code = True
            i += 1
            continue
        if not c.isspace():
            has_code = True
        i += 1
    if has_code:
        total += 1
    return total


def count_loc(file: SourceFile) -> int:
    """LoC contribution of one file (identical to its line_count field)."""
    return count_code_lines(file.text)


def scan_directory(root: str | Path, extension: str = DEFAULT_EXTENSION) -> list[SourceFile]:
    """Collect all sources under root, recursively, in lexicographic path order."""
    root_path = Path(root)
    if not root_path.is_dir():
        raise InputError(f"not a readable directory: {root_path}")
    try:
        candidates = [p for p in root_path.rglob("*") if p.is_file() and p.name.endswith(extension)]
    except OSError as exc:
        raise InputError(f"cannot scan directory {root_path}: {exc}") from exc
    candidates.sort(key=lambda p: p.as_posix())
    return [SourceFile.read(p) for p in candidates]
