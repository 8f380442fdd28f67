"""Tokenizer for the Cypher subset.

Keywords are matched case-insensitively; identifiers stay case-sensitive.
String literals take single or double quotes with backslash escapes and
may span lines.
"""

from __future__ import annotations

from dataclasses import dataclass

from hazkg.cypher.errors import CypherSyntaxError

KEYWORDS = {
    "match", "where", "return", "distinct", "limit", "and", "or", "not", "contains",
}

# valid Cypher we deliberately do not execute; seeing one of these is an
# UnsupportedFeature, not a syntax error
RESERVED_UNSUPPORTED = {
    "create", "merge", "delete", "detach", "set", "remove", "with", "unwind",
    "call", "optional", "order", "by", "skip", "union", "foreach", "load",
    "case", "when", "then", "else", "end", "starts", "ends", "in", "is",
    "null", "exists", "asc", "desc", "yield",
}

_PUNCT = {
    "(": "LPAREN", ")": "RPAREN", "{": "LBRACE", "}": "RBRACE",
    "[": "LBRACKET", "]": "RBRACKET", ":": "COLON", ",": "COMMA",
    ".": "DOT", ";": "SEMI", "*": "STAR", "|": "PIPE",
}


@dataclass(frozen=True)
class Token:
    kind: str   # IDENT, STRING, INT, EOF, punctuation kinds, ARROW_*, EQ, REGEQ, LT, GT, DASH
    text: str
    value: str | int | None
    line: int
    column: int

    def keyword(self) -> str | None:
        """Lowercased text when this identifier spells a keyword, else None."""
        if self.kind != "IDENT":
            return None
        low = self.text.lower()
        if low in KEYWORDS or low in RESERVED_UNSUPPORTED:
            return low
        return None


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    line = 1
    col = 1

    def advance(n: int) -> None:
        nonlocal i, line, col
        for _ in range(n):
            if i < len(text) and text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < len(text):
        ch = text[i]
        if ch in " \t\r\n":
            advance(1)
            continue
        start_line, start_col = line, col
        if ch in "'\"":
            quote = ch
            advance(1)
            chunks: list[str] = []
            while True:
                if i >= len(text):
                    raise CypherSyntaxError("unterminated string literal", start_line, start_col)
                c = text[i]
                if c == "\\":
                    if i + 1 >= len(text):
                        raise CypherSyntaxError("unterminated string literal", start_line, start_col)
                    esc = text[i + 1]
                    chunks.append({"n": "\n", "t": "\t"}.get(esc, esc))
                    advance(2)
                elif c == quote:
                    advance(1)
                    break
                else:
                    chunks.append(c)
                    advance(1)
            value = "".join(chunks)
            tokens.append(Token("STRING", value, value, start_line, start_col))
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and (text[j].isalpha() or text[j] == "_"):
                raise CypherSyntaxError(f"malformed number {text[i:j+1]!r}", start_line, start_col)
            num = text[i:j]
            advance(j - i)
            tokens.append(Token("INT", num, int(num), start_line, start_col))
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            ident = text[i:j]
            advance(j - i)
            tokens.append(Token("IDENT", ident, ident, start_line, start_col))
            continue
        if ch == "=":
            if i + 1 < len(text) and text[i + 1] == "~":
                advance(2)
                tokens.append(Token("REGEQ", "=~", None, start_line, start_col))
            else:
                advance(1)
                tokens.append(Token("EQ", "=", None, start_line, start_col))
            continue
        if ch == "<":
            if i + 1 < len(text) and text[i + 1] in "=>":
                op = text[i : i + 2]
                advance(2)
                tokens.append(Token("CMP", op, None, start_line, start_col))
            else:
                advance(1)
                tokens.append(Token("LT", "<", None, start_line, start_col))
            continue
        if ch == ">":
            if i + 1 < len(text) and text[i + 1] == "=":
                advance(2)
                tokens.append(Token("CMP", ">=", None, start_line, start_col))
            else:
                advance(1)
                tokens.append(Token("GT", ">", None, start_line, start_col))
            continue
        if ch == "-":
            advance(1)
            tokens.append(Token("DASH", "-", None, start_line, start_col))
            continue
        if ch in _PUNCT:
            advance(1)
            tokens.append(Token(_PUNCT[ch], ch, None, start_line, start_col))
            continue
        raise CypherSyntaxError(f"unexpected character {ch!r}", start_line, start_col)

    tokens.append(Token("EOF", "", None, line, col))
    return tokens
