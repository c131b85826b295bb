"""Reading and writing univariate polynomials and rational functions.

Input grammar (whitespace ignored, single variable ``x``)::

    rational  := side '/' side | poly
    side      := '(' poly ')' | poly
    poly      := sign? term (('+' | '-') term)*
    term      := coeff ('x' power?)? | 'x' power?
    power     := '^' digits
    coeff     := number ('/' digits)? | '(' sign? number ('/' digits)? ')'
    number    := digits ('.' digits?)? | '.' digits

The only depth-0 ``/`` that may separate numerator from denominator is one
with a parenthesised group on both sides, or the unique depth-0 ``/``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .poly_core import Polynomial, RationalFunction

__all__ = [
    "ParseError",
    "Style",
    "Token",
    "TokenKind",
    "format_polynomial",
    "format_rational_function",
    "parse_polynomial",
    "parse_rational_function",
    "polynomial_from_json",
    "polynomial_to_json",
    "rational_from_json",
    "rational_to_json",
    "tokenize",
]


#: Guards against inputs like ``x^999999999`` allocating huge dense arrays.
MAX_EXPONENT = 10_000


class TokenKind(Enum):
    NUMBER = "number"
    SLASH = "'/'"
    PLUS = "'+'"
    MINUS = "'-'"
    CARET = "'^'"
    VARIABLE = "'x'"
    LPAREN = "'('"
    RPAREN = "')'"
    END = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    position: int


class ParseError(ValueError):
    """Malformed input. ``position`` is a character offset into the source."""

    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"at position {position}: expected {expected}, found {found}")


class Style(str, Enum):
    TEXT = "text"
    LATEX = "latex"
    JSON = "json"


_SINGLE = {
    "/": TokenKind.SLASH,
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "^": TokenKind.CARET,
    "x": TokenKind.VARIABLE,
    "X": TokenKind.VARIABLE,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
}


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, size = 0, len(text)
    while i < size:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, i))
            i += 1
        elif ch in "0123456789" or ch == ".":
            start = i
            while i < size and text[i] in "0123456789":
                i += 1
            if i < size and text[i] == ".":
                i += 1
                while i < size and text[i] in "0123456789":
                    i += 1
            lit = text[start:i]
            if lit == ".":
                raise ParseError(start, "a digit", repr("."))
            tokens.append(Token(TokenKind.NUMBER, lit, start))
        else:
            raise ParseError(i, "a number, 'x', an operator or a parenthesis", repr(ch))
    tokens.append(Token(TokenKind.END, "", size))
    return tokens


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind is TokenKind.END else repr(tok.text)


class _PolyParser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, offset: int = 1) -> Token:
        return self.toks[min(self.i + offset, len(self.toks) - 1)]

    def advance(self) -> Token:
        t = self.toks[self.i]
        if t.kind is not TokenKind.END:
            self.i += 1
        return t

    def expect(self, kind: TokenKind, what: str | None = None) -> Token:
        if self.tok.kind is not kind:
            raise ParseError(self.tok.position, what or kind.value, _describe(self.tok))
        return self.advance()

    def poly(self, stop: TokenKind = TokenKind.END) -> dict[int, Fraction]:
        terms: dict[int, Fraction] = {}
        sign = 1
        if self.tok.kind in (TokenKind.PLUS, TokenKind.MINUS):
            sign = -1 if self.advance().kind is TokenKind.MINUS else 1
        while True:
            deg, c = self.term()
            terms[deg] = terms.get(deg, Fraction(0)) + sign * c
            if self.tok.kind in (TokenKind.PLUS, TokenKind.MINUS):
                sign = -1 if self.advance().kind is TokenKind.MINUS else 1
                continue
            if self.tok.kind is stop:
                return terms
            raise ParseError(
                self.tok.position,
                "'+', '-' or " + ("end of input" if stop is TokenKind.END else stop.value),
                _describe(self.tok),
            )

    def _number(self) -> Fraction:
        t = self.expect(TokenKind.NUMBER, "a number")
        value = Fraction(t.text)
        if self.tok.kind is TokenKind.SLASH and self.peek().kind is TokenKind.NUMBER:
            self.advance()
            d = self.advance()
            den = Fraction(d.text)
            if den.denominator != 1 or "." in d.text:
                raise ParseError(d.position, "an integer denominator", repr(d.text))
            if not den:
                raise ParseError(d.position, "a nonzero denominator", repr(d.text))
            value /= den
        return value

    def _paren_coefficient(self) -> Fraction:
        self.expect(TokenKind.LPAREN)
        sign = 1
        if self.tok.kind in (TokenKind.PLUS, TokenKind.MINUS):
            sign = -1 if self.advance().kind is TokenKind.MINUS else 1
        value = self._number()
        self.expect(TokenKind.RPAREN)
        return sign * value

    def term(self) -> tuple[int, Fraction]:
        t = self.tok
        if t.kind is TokenKind.NUMBER:
            coeff = self._number()
        elif t.kind is TokenKind.LPAREN:
            coeff = self._paren_coefficient()
        elif t.kind is TokenKind.VARIABLE:
            coeff = None
        else:
            raise ParseError(t.position, "a term", _describe(t))
        if self.tok.kind is not TokenKind.VARIABLE:
            if coeff is None:  # pragma: no cover - guarded above
                raise ParseError(self.tok.position, "a term", _describe(self.tok))
            return 0, coeff
        self.advance()
        deg = 1
        if self.tok.kind is TokenKind.CARET:
            self.advance()
            d = self.expect(TokenKind.NUMBER, "an exponent")
            if not d.text.isdigit():
                raise ParseError(d.position, "a non-negative integer exponent", repr(d.text))
            if len(d.text) > len(str(MAX_EXPONENT)) or int(d.text) > MAX_EXPONENT:
                raise ParseError(d.position, f"an exponent <= {MAX_EXPONENT}", repr(d.text))
            deg = int(d.text)
        return deg, Fraction(1) if coeff is None else coeff


def _to_poly(terms: dict[int, Fraction]) -> Polynomial:
    if not terms:
        return Polynomial.zero()
    out = [Fraction(0)] * (max(terms) + 1)
    for d, c in terms.items():
        out[d] += c
    return Polynomial(tuple(out))


def _parse_tokens(tokens: list[Token]) -> Polynomial:
    if tokens[0].kind is TokenKind.END:
        raise ParseError(tokens[0].position, "a polynomial", "end of input")
    return _to_poly(_PolyParser(tokens).poly())


def parse_polynomial(text: str) -> Polynomial:
    """Parse text such as ``"8x^3+7"`` or ``"(5/4)x + 27/16"``."""
    tokens = tokenize(text)
    # tolerate one pair of parentheses around the whole polynomial
    inner = _unwrap(tokens)
    return _parse_tokens(inner if inner is not None else tokens)


def _match_parens(tokens: list[Token]) -> dict[int, int]:
    stack: list[int] = []
    pairs: dict[int, int] = {}
    for idx, t in enumerate(tokens):
        if t.kind is TokenKind.LPAREN:
            stack.append(idx)
        elif t.kind is TokenKind.RPAREN:
            if not stack:
                raise ParseError(t.position, "a matching '('", "')'")
            pairs[stack.pop()] = idx
    if stack:
        raise ParseError(tokens[stack[-1]].position, "a matching ')'", "'('")
    return pairs


def _unwrap(tokens: list[Token]) -> list[Token] | None:
    """Tokens inside a single group spanning the whole input, else None."""
    body = tokens[:-1]
    if len(body) < 2 or body[0].kind is not TokenKind.LPAREN:
        return None
    pairs = _match_parens(tokens)
    if pairs.get(0) != len(body) - 1:
        return None
    inner = body[1:-1]
    return inner + [Token(TokenKind.END, "", body[-1].position)]


def parse_rational_function(text: str) -> RationalFunction:
    """Parse ``"(num)/(den)"``, ``"num/den"`` or a bare polynomial (denominator 1).

    A zero denominator raises :class:`ZeroDivisionError` ("denominator is zero").
    """
    tokens = tokenize(text)
    if tokens[0].kind is TokenKind.END:
        raise ParseError(0, "a rational function", "end of input")
    pairs = _match_parens(tokens)
    closing = {v: k for k, v in pairs.items()}
    depth = 0
    slashes: list[int] = []
    for idx, t in enumerate(tokens):
        if t.kind is TokenKind.LPAREN:
            depth += 1
        elif t.kind is TokenKind.RPAREN:
            depth -= 1
        elif t.kind is TokenKind.SLASH and depth == 0:
            slashes.append(idx)

    last = len(tokens) - 1  # END token index
    split = None
    if len(slashes) == 1:
        split = slashes[0]
    elif slashes:
        wrapped = [
            s
            for s in slashes
            if tokens[s - 1].kind is TokenKind.RPAREN
            and closing.get(s - 1) == 0
            and tokens[s + 1].kind is TokenKind.LPAREN
            and pairs.get(s + 1) == last - 1
        ]
        if len(wrapped) != 1:
            raise ParseError(
                tokens[slashes[1]].position,
                "parentheses around numerator and denominator",
                "several top-level '/'",
            )
        split = wrapped[0]

    if split is None:
        return RationalFunction(parse_polynomial(text), Polynomial.constant(1))
    end_num = Token(TokenKind.END, "", tokens[split].position)
    num_toks = tokens[:split] + [end_num]
    den_toks = tokens[split + 1 :]
    num = _parse_side(num_toks)
    den = _parse_side(den_toks)
    if den.is_zero():
        raise ZeroDivisionError("denominator is zero")
    return RationalFunction(num, den)


def _parse_side(tokens: list[Token]) -> Polynomial:
    inner = _unwrap(tokens)
    return _parse_tokens(inner if inner is not None else tokens)


# -- formatting ---------------------------------------------------------------


def _text_coeff(c: Fraction, deg: int) -> str:
    if deg == 0:
        return str(c)
    if c == 1:
        return ""
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c})"


def _latex_coeff(c: Fraction, deg: int) -> str:
    if deg and c == 1:
        return ""
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def _power(deg: int, latex: bool) -> str:
    if deg == 0:
        return ""
    if deg == 1:
        return "x"
    if latex and deg > 9:
        return f"x^{{{deg}}}"
    return f"x^{deg}"


def format_polynomial(p: Polynomial, style: Style | str = Style.TEXT) -> str:
    """Render highest degree first: ``8x^2+32x+128``, ``(5/4)x+27/16``, or LaTeX/JSON."""
    style = Style(style)
    if style is Style.JSON:
        return json.dumps(polynomial_to_json(p))
    if p.is_zero():
        return "0"
    latex = style is Style.LATEX
    fmt = _latex_coeff if latex else _text_coeff
    parts: list[str] = []
    for deg in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[deg]
        if not c:
            continue
        body = fmt(abs(c), deg) + _power(deg, latex)
        if c < 0:
            parts.append("-" + body)
        else:
            parts.append(("+" if parts else "") + body)
    return "".join(parts)


def format_rational_function(rf: RationalFunction, style: Style | str = Style.TEXT) -> str:
    style = Style(style)
    if style is Style.JSON:
        return json.dumps(
            {
                "numerator": polynomial_to_json(rf.numerator),
                "denominator": polynomial_to_json(rf.denominator),
            }
        )
    num = format_polynomial(rf.numerator, style)
    den = format_polynomial(rf.denominator, style)
    if style is Style.LATEX:
        return rf"\frac{{{num}}}{{{den}}}"
    return f"({num})/({den})"


def rational_to_json(c: Fraction) -> dict[str, str]:
    return {"num": str(c.numerator), "den": str(c.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def polynomial_to_json(p: Polynomial) -> dict:
    return {"coefficients": [rational_to_json(c) for c in p.coeffs]}


def polynomial_from_json(obj: dict | str) -> Polynomial:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return Polynomial(tuple(rational_from_json(c) for c in obj["coefficients"]))
