from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class SourceSpan:
    """A region of a definition file.  ``line`` and ``column`` are 1-based."""

    file: str
    line: int
    column: int
    length: int
    offset: int = 0

    def text(self, source: str) -> str:
        return source[self.offset : self.offset + self.length]

    def to_dict(self) -> dict:
        d = asdict(self)
        del d["offset"]
        return d

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"
