"""ASCII surface syntax for elements.

    expr   := term (('+' | '-') term)*
    term   := coeff factor* | factor+
    factor := 'b' | 'P' nat | '1'
    coeff  := nat

Juxtaposition is the free product; nothing is reduced at parse time.  A bare
coefficient denotes a multiple of the unit, so ``0`` and ``2`` parse.
"""
from __future__ import annotations

import re
from typing import List, Tuple

from .terms import BETA, Element, Word

__all__ = ["ParseError", "parse_expression", "format_element", "word_to_json"]

_TOKEN = re.compile(r"\s*(?:(?P<P>P)(?P<k>\d+)|(?P<b>b)|(?P<nat>\d+)|(?P<op>[+-])|(?P<bad>\S))")


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int, expected):
        super().__init__(f"{msg} at position {pos}; expected one of {sorted(expected)}")
        self.pos = pos
        self.expected = set(expected)


def _tokens(src: str) -> List[Tuple[str, object, int]]:
    out = []
    for m in _TOKEN.finditer(src):
        pos = m.start(m.lastgroup) if m.lastgroup else m.start()
        if m.group("P"):
            out.append(("P", int(m.group("k")), m.start("P")))
        elif m.group("b"):
            out.append(("b", None, pos))
        elif m.group("nat") is not None:
            out.append(("nat", int(m.group("nat")), pos))
        elif m.group("op"):
            out.append(("op", m.group("op"), pos))
        elif m.group("bad"):
            raise ParseError(f"unexpected character {m.group('bad')!r}", pos, {"b", "P<n>", "<nat>", "+", "-"})
    out.append(("end", None, len(src)))
    return out


def parse_expression(src: str, p: int) -> Element:
    toks = _tokens(src)
    i = 0
    terms = {}

    def term(sgn: int):
        nonlocal i
        kind, val, pos = toks[i]
        coeff = 1
        word: List[int] = []
        seen = False
        if kind == "nat":
            coeff = val
            i += 1
            seen = True
        while True:
            kind, val, pos = toks[i]
            if kind == "b":
                word.append(BETA)
            elif kind == "P":
                word.append(val)
            elif kind == "nat" and val == 1 and seen:
                pass
            else:
                break
            seen = True
            i += 1
        if not seen:
            raise ParseError("expected a term", pos, {"b", "P<n>", "<nat>"})
        w: Word = tuple(word)
        terms[w] = terms.get(w, 0) + sgn * coeff

    term(1)
    while True:
        kind, val, pos = toks[i]
        if kind == "end":
            break
        if kind != "op":
            raise ParseError(f"unexpected token {kind}", pos, {"+", "-", "<end>"})
        i += 1
        term(1 if val == "+" else -1)
    return Element(p, terms)


def format_element(e: Element) -> str:
    return str(e)


def word_to_json(w: Word):
    return [{"g": "b"} if x == BETA else {"g": "P", "k": x} for x in w]
