"""Concrete syntax for first-order formulas.

Grammar, loosest binding first::

    formula  := iff
    iff      := implies ("<->" iff)?            right-associative
    implies  := or ("->" implies)?              right-associative
    or       := and ("|" and)*
    and      := unary ("&" unary)*
    unary    := "!" unary | ("forall"|"exists") VAR formula | "(" formula ")" | atom
    atom     := VAR "=" VAR | VAR SYM VAR | SYM "(" VAR ("," VAR)* ")"

Variables are v0, v1, ...; SYM is any declared relation symbol (infix form for
binary symbols, prefix form for any arity).  Precedence is ! > & > | > -> >
<->, and a quantifier's scope extends maximally to the right; parentheses
override.  The printer emits text that parses back to the identical tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .fo import (
    And,
    Atom,
    Equals,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Signature,
)


class FormulaSyntaxError(ValueError):
    """Parse failure with a 1-based column position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position})")
        self.position = position


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int  # 1-based column


_FIXED = (
    ("<->", "IFF"),
    ("->", "IMPLIES"),
    ("(", "LPAREN"),
    (")", "RPAREN"),
    (",", "COMMA"),
    ("=", "EQUALS"),
    ("!", "NOT"),
    ("&", "AND"),
    ("|", "OR"),
)
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_VAR = re.compile(r"v\d+\Z")
_KEYWORDS = {"forall": "FORALL", "exists": "EXISTS"}
# characters claimed by the fixed formula syntax; punctuation relation symbols
# must avoid them
_RESERVED_CHARS = set("-<>=!&|(),")


def _check_symbol_names(sig: Signature) -> None:
    for name, _ in sig.relations:
        if _IDENT.fullmatch(name):
            if name in _KEYWORDS or _VAR.fullmatch(name):
                raise ValueError(f"relation symbol {name!r} collides with formula syntax")
        else:
            if any(ch.isspace() or ch.isalnum() or ch in _RESERVED_CHARS for ch in name):
                raise ValueError(f"relation symbol {name!r} collides with formula syntax")


def _tokenize(text: str, sig: Signature) -> list[_Token]:
    punct_symbols = sorted(
        (name for name, _ in sig.relations if not _IDENT.fullmatch(name)),
        key=len,
        reverse=True,
    )
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        col = i + 1
        for lit, kind in _FIXED:
            if text.startswith(lit, i):
                tokens.append(_Token(kind, lit, col))
                i += len(lit)
                break
        else:
            m = _IDENT.match(text, i)
            if m:
                word = m.group(0)
                if word in _KEYWORDS:
                    tokens.append(_Token(_KEYWORDS[word], word, col))
                elif _VAR.fullmatch(word):
                    tokens.append(_Token("VAR", word, col))
                else:
                    tokens.append(_Token("REL", word, col))
                i = m.end()
                continue
            for sym in punct_symbols:
                if text.startswith(sym, i):
                    tokens.append(_Token("REL", sym, col))
                    i += len(sym)
                    break
            else:
                raise FormulaSyntaxError(f"unexpected character {ch!r}", col)
    tokens.append(_Token("EOF", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], sig: Signature):
        self.tokens = tokens
        self.sig = sig
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            got = repr(tok.text) if tok.kind != "EOF" else "end of input"
            raise FormulaSyntaxError(f"expected {what}, got {got}", tok.pos)
        return self.advance()

    def parse(self) -> Formula:
        f = self.formula()
        tok = self.peek()
        if tok.kind == "RPAREN":
            raise FormulaSyntaxError("unbalanced parentheses: unmatched ')'", tok.pos)
        if tok.kind != "EOF":
            raise FormulaSyntaxError(f"unexpected trailing input {tok.text!r}", tok.pos)
        return f

    def formula(self) -> Formula:
        return self.iff()

    def iff(self) -> Formula:
        left = self.implies()
        if self.peek().kind == "IFF":
            self.advance()
            return Iff(left, self.iff())
        return left

    def implies(self) -> Formula:
        left = self.or_()
        if self.peek().kind == "IMPLIES":
            self.advance()
            return Implies(left, self.implies())
        return left

    def or_(self) -> Formula:
        f = self.and_()
        while self.peek().kind == "OR":
            self.advance()
            f = Or(f, self.and_())
        return f

    def and_(self) -> Formula:
        f = self.unary()
        while self.peek().kind == "AND":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "NOT":
            self.advance()
            return Not(self.unary())
        if tok.kind in ("FORALL", "EXISTS"):
            self.advance()
            var = self._var(self.expect("VAR", "a variable after the quantifier"))
            body = self.formula()  # maximal scope
            return Forall(var, body) if tok.kind == "FORALL" else Exists(var, body)
        if tok.kind == "LPAREN":
            self.advance()
            f = self.formula()
            tok2 = self.peek()
            if tok2.kind != "RPAREN":
                raise FormulaSyntaxError("unbalanced parentheses: missing ')'", tok2.pos)
            self.advance()
            return f
        return self.atom()

    @staticmethod
    def _var(tok: _Token) -> int:
        return int(tok.text[1:])

    def _symbol(self, tok: _Token, infix: bool) -> str:
        if tok.text not in self.sig:
            raise FormulaSyntaxError(f"unknown symbol {tok.text!r}", tok.pos)
        arity = self.sig.arity(tok.text)
        if infix and arity != 2:
            raise FormulaSyntaxError(
                f"symbol {tok.text!r} has arity {arity} and cannot be written infix", tok.pos
            )
        return tok.text

    def atom(self) -> Formula:
        tok = self.peek()
        if tok.kind == "VAR":
            self.advance()
            left = self._var(tok)
            op = self.peek()
            if op.kind == "EQUALS":
                self.advance()
                right = self._var(self.expect("VAR", "a variable after '='"))
                return Equals(left, right)
            if op.kind == "REL":
                self.advance()
                sym = self._symbol(op, infix=True)
                right = self._var(self.expect("VAR", f"a variable after {sym!r}"))
                return Atom(sym, (left, right))
            got = repr(op.text) if op.kind != "EOF" else "end of input"
            raise FormulaSyntaxError(
                f"expected '=' or a binary relation symbol after v{left}, got {got}", op.pos
            )
        if tok.kind == "REL":
            self.advance()
            sym = self._symbol(tok, infix=False)
            self.expect("LPAREN", f"'(' after symbol {sym!r}")
            args = [self._var(self.expect("VAR", "a variable"))]
            while self.peek().kind == "COMMA":
                self.advance()
                args.append(self._var(self.expect("VAR", "a variable")))
            close = self.peek()
            if close.kind != "RPAREN":
                raise FormulaSyntaxError("unbalanced parentheses: missing ')'", close.pos)
            self.advance()
            arity = self.sig.arity(sym)
            if len(args) != arity:
                raise FormulaSyntaxError(
                    f"symbol {sym!r} has arity {arity}, got {len(args)} arguments", tok.pos
                )
            return Atom(sym, tuple(args))
        got = repr(tok.text) if tok.kind != "EOF" else "end of input"
        raise FormulaSyntaxError(f"expected a formula, got {got}", tok.pos)


def parse_formula(text: str, sig: Signature) -> Formula:
    """Parse the concrete syntax above; round-trips with format_formula."""
    _check_symbol_names(sig)
    return _Parser(_tokenize(text, sig), sig).parse()


_LEVEL_IFF = 1
_LEVEL_IMPLIES = 2
_LEVEL_OR = 3
_LEVEL_AND = 4
_LEVEL_UNARY = 5

_BIN_INFO = {
    Iff: ("<->", _LEVEL_IFF, "right"),
    Implies: ("->", _LEVEL_IMPLIES, "right"),
    Or: ("|", _LEVEL_OR, "left"),
    And: ("&", _LEVEL_AND, "left"),
}


def format_formula(f: Formula) -> str:
    """Canonical text with minimal parentheses; parse(format(f)) == f."""

    def fmt(node: Formula, require: int, tail: bool) -> str:
        if isinstance(node, Equals):
            return f"v{node.left} = v{node.right}"
        if isinstance(node, Atom):
            if len(node.args) == 2:
                return f"v{node.args[0]} {node.symbol} v{node.args[1]}"
            return f"{node.symbol}({', '.join(f'v{a}' for a in node.args)})"
        if isinstance(node, Not):
            return "!" + fmt(node.body, _LEVEL_UNARY, tail)
        if isinstance(node, (Forall, Exists)):
            kw = "forall" if isinstance(node, Forall) else "exists"
            body = fmt(node.body, _LEVEL_IFF, True)
            text = f"{kw} v{node.var} {body}"
            # a quantifier swallows everything to its right, so it needs
            # parentheses whenever material follows in the current unit
            return text if tail else f"({text})"
        op, level, assoc = _BIN_INFO[type(node)]
        wrap = level < require
        inner_tail = True if wrap else tail
        if assoc == "left":
            left = fmt(node.left, level, False)
            right = fmt(node.right, level + 1, inner_tail)
        else:
            left = fmt(node.left, level + 1, False)
            right = fmt(node.right, level, inner_tail)
        text = f"{left} {op} {right}"
        return f"({text})" if wrap else text

    return fmt(f, _LEVEL_IFF, True)
