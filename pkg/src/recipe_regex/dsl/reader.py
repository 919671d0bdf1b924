"""S-expression reader that keeps a source span on every datum."""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Any, Optional

from ..span import SourceSpan


class ParseError(Exception):
    def __init__(self, message: str, span: Optional[SourceSpan] = None):
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self) -> str:
        return f"{self.span}: {self.message}" if self.span else self.message


@dataclass
class Atom:
    """``kind`` is one of symbol, string, int, bool, keyword."""

    kind: str
    value: Any
    span: SourceSpan = field(compare=False)


@dataclass
class SList:
    items: list
    span: SourceSpan = field(compare=False)
    bracket: str = field(default="(", compare=False)


@dataclass
class Quote:
    datum: Any
    span: SourceSpan = field(compare=False)


_CLOSERS = {"(": ")", "[": "]"}
_DELIMS = set("()[]\";'") | {" ", "\t", "\n", "\r", "\f", "\v"}


class Reader:
    def __init__(self, text: str, file: str = "<input>"):
        self.text = text
        self.file = file
        self.pos = 0
        # Line start offsets for offset -> (line, column).
        self.line_starts = [0]
        for i, ch in enumerate(text):
            if ch == "\n":
                self.line_starts.append(i + 1)

    def span(self, start: int, end: int) -> SourceSpan:
        line = bisect.bisect_right(self.line_starts, start)
        col = start - self.line_starts[line - 1] + 1
        return SourceSpan(self.file, line, col, end - start, start)

    def error(self, message: str, start: int, end: Optional[int] = None) -> ParseError:
        return ParseError(message, self.span(start, end if end is not None else start + 1))

    def skip_trivia(self) -> None:
        text = self.text
        while self.pos < len(text):
            ch = text[self.pos]
            if ch.isspace():
                self.pos += 1
            elif ch == ";":
                nl = text.find("\n", self.pos)
                self.pos = len(text) if nl < 0 else nl + 1
            elif text.startswith("#|", self.pos):
                close = text.find("|#", self.pos + 2)
                if close < 0:
                    raise self.error("unterminated block comment", self.pos, self.pos + 2)
                self.pos = close + 2
            elif text.startswith("#lang", self.pos):
                nl = text.find("\n", self.pos)
                self.pos = len(text) if nl < 0 else nl + 1
            else:
                return

    def read_all(self) -> list:
        out = []
        while True:
            self.skip_trivia()
            if self.pos >= len(self.text):
                return out
            out.append(self.read())

    def read(self) -> Any:
        self.skip_trivia()
        text = self.text
        if self.pos >= len(text):
            raise self.error("unexpected end of input", max(len(text) - 1, 0))
        start = self.pos
        ch = text[start]
        if ch in _CLOSERS:
            self.pos += 1
            items = []
            while True:
                self.skip_trivia()
                if self.pos >= len(text):
                    raise self.error(f"unbalanced parenthesis: no closing {_CLOSERS[ch]!r}", start)
                c = text[self.pos]
                if c in ")]":
                    if c != _CLOSERS[ch]:
                        raise self.error(f"expected {_CLOSERS[ch]!r} to close {ch!r}, found {c!r}", self.pos)
                    self.pos += 1
                    return SList(items, self.span(start, self.pos), ch)
                items.append(self.read())
        if ch in ")]":
            raise self.error(f"unexpected {ch!r}", start)
        if ch == "'":
            self.pos += 1
            datum = self.read()
            return Quote(datum, self.span(start, self.pos))
        if ch == '"':
            return self.read_string()
        self.pos += 1
        while self.pos < len(text) and text[self.pos] not in _DELIMS:
            self.pos += 1
        token = text[start : self.pos]
        sp = self.span(start, self.pos)
        if token.startswith("#:"):
            if len(token) == 2:
                raise self.error("empty keyword", start, self.pos)
            return Atom("keyword", token[2:], sp)
        if token in ("#t", "#true"):
            return Atom("bool", True, sp)
        if token in ("#f", "#false"):
            return Atom("bool", False, sp)
        if token.startswith("#"):
            raise self.error(f"unknown syntax {token!r}", start, self.pos)
        if _is_int(token):
            return Atom("int", int(token), sp)
        return Atom("symbol", token, sp)

    def read_string(self) -> Atom:
        text = self.text
        start = self.pos
        self.pos += 1
        chars = []
        escapes = {"n": "\n", "t": "\t", '"': '"', "\\": "\\"}
        while True:
            if self.pos >= len(text):
                raise self.error("unterminated string", start)
            c = text[self.pos]
            if c == '"':
                self.pos += 1
                return Atom("string", "".join(chars), self.span(start, self.pos))
            if c == "\\":
                nxt = text[self.pos + 1 : self.pos + 2]
                if nxt not in escapes:
                    raise self.error(f"unknown escape \\{nxt}", self.pos, self.pos + 2)
                chars.append(escapes[nxt])
                self.pos += 2
            else:
                chars.append(c)
                self.pos += 1


def _is_int(token: str) -> bool:
    body = token[1:] if token[:1] in "+-" else token
    return body.isascii() and body.isdigit()


def read_all(text: str, file: str = "<input>") -> list:
    return Reader(text, file).read_all()
