"""Structure-spec mini-language.

Grammar (whitespace insensitive, case sensitive):

    spec  := named | chain
    named := NAME "(" INT { "," INT } ")" | "MT12U" | "tt"
    chain := OPNAME "(" chain ")" | SEED

with NAME in {M, Ulin, Ucyc}, OPNAME in {P4, TrsC, Op}, SEED in {T, D}.

parse() returns a syntax tree; format_spec() prints its canonical form,
and parse(format_spec(x)) == x.  All failures raise ParseError with a
machine-readable code and a character position, never any other
exception.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

NAMED_KINDS = {"M": 2, "Ulin": 1, "Ucyc": 1}
BARE_KINDS = ("MT12U", "tt")
OP_NAMES = ("P4", "TrsC", "Op")
SEEDS = ("T", "D")

E_SYNTAX = "syntax"
E_UNKNOWN = "unknown-identifier"
E_ARITY = "arity-mismatch"
E_RANGE = "parameter-out-of-range"
E_CHAIN = "invalid-chain"


class ParseError(ValueError):
    """Structure-spec rejection with an error code and position."""

    def __init__(self, message: str, code: str, position: int):
        super().__init__(f"{message} (at column {position + 1})")
        self.code = code
        self.position = position


@dataclass(frozen=True)
class NamedStructure:
    kind: str
    args: tuple[int, ...]


@dataclass(frozen=True)
class OperationChain:
    ops: tuple[str, ...]  # outermost first
    seed: str


StructureSpec = Union[NamedStructure, OperationChain]

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<int>\d+)|(?P<punct>[(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", E_SYNTAX, at)
        if m.group("name"):
            tokens.append(("name", m.group("name"), m.start("name")))
        elif m.group("int"):
            tokens.append(("int", m.group("int"), m.start("int")))
        else:
            tokens.append(("punct", m.group("punct"), m.start("punct")))
        pos = m.end()
    return tokens


def _validate_ranges(kind: str, args: tuple[int, ...], position: int) -> None:
    if kind == "M":
        m, r = args
        if not 1 <= m <= 17:
            raise ParseError(f"M takes m in 1..17, got {m}", E_RANGE, position)
        if r != max(0, m - 11):
            raise ParseError(
                f"M({m},...) grows with r = {max(0, m - 11)}, got {r}", E_RANGE, position
            )
    elif kind == "Ulin":
        if args[0] < 1:
            raise ParseError(f"Ulin takes u >= 1, got {args[0]}", E_RANGE, position)
    elif kind == "Ucyc":
        if args[0] < 6:
            raise ParseError(f"Ucyc takes u >= 6, got {args[0]}", E_RANGE, position)


def _validate_chain(ops: tuple[str, ...], positions: tuple[int, ...]) -> None:
    """Reject op sequences the operations cannot realize.

    TrsC consumes the face centres introduced by the P4 directly below it;
    Op consumes the cut faces left by the TrsC directly below it; nothing
    can follow an Op because the surface is no longer closed.
    """
    has_centers = has_cuts = has_ports = False
    for op, pos in zip(reversed(ops), reversed(positions)):
        if has_ports:
            raise ParseError(f"{op} cannot follow Op on an opened surface", E_CHAIN, pos)
        if op == "P4":
            has_centers, has_cuts = True, False
        elif op == "TrsC":
            if not has_centers:
                raise ParseError("TrsC needs a P4 directly below it", E_CHAIN, pos)
            has_centers, has_cuts = False, True
        else:
            if not has_cuts:
                raise ParseError("Op needs a TrsC directly below it", E_CHAIN, pos)
            has_cuts, has_ports = False, True


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.op_positions: list[int] = []

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", E_SYNTAX, len(self.text))
        self.i += 1
        return tok

    def expect_punct(self, ch: str):
        tok = self.take()
        if tok[0] != "punct" or tok[1] != ch:
            raise ParseError(f"expected {ch!r}, got {tok[1]!r}", E_SYNTAX, tok[2])
        return tok

    def parse(self) -> StructureSpec:
        spec = self.parse_spec()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"trailing input {tok[1]!r}", E_SYNTAX, tok[2])
        if isinstance(spec, OperationChain):
            _validate_chain(spec.ops, tuple(self.op_positions))
        return spec

    def parse_spec(self) -> StructureSpec:
        tok = self.take()
        if tok[0] != "name":
            raise ParseError(f"expected a name, got {tok[1]!r}", E_SYNTAX, tok[2])
        name, at = tok[1], tok[2]
        if name in BARE_KINDS:
            return NamedStructure(name, ())
        if name in NAMED_KINDS:
            args = self.parse_args(at)
            if len(args) != NAMED_KINDS[name]:
                raise ParseError(
                    f"{name} takes {NAMED_KINDS[name]} parameter(s), got {len(args)}",
                    E_ARITY,
                    at,
                )
            _validate_ranges(name, args, at)
            return NamedStructure(name, args)
        if name in OP_NAMES:
            self.op_positions.append(at)
            self.expect_punct("(")
            inner = self.parse_chain()
            self.expect_punct(")")
            return OperationChain((name,) + inner.ops, inner.seed)
        if name in SEEDS:
            return OperationChain((), name)
        raise ParseError(f"unknown name {name!r}", E_UNKNOWN, at)

    def parse_chain(self) -> OperationChain:
        tok = self.take()
        if tok[0] != "name":
            raise ParseError(f"expected a name, got {tok[1]!r}", E_SYNTAX, tok[2])
        name, at = tok[1], tok[2]
        if name in OP_NAMES:
            self.op_positions.append(at)
            self.expect_punct("(")
            inner = self.parse_chain()
            self.expect_punct(")")
            return OperationChain((name,) + inner.ops, inner.seed)
        if name in SEEDS:
            return OperationChain((), name)
        raise ParseError(
            f"expected an operation or seed, got {name!r}", E_UNKNOWN, at
        )

    def parse_args(self, at: int) -> tuple[int, ...]:
        self.expect_punct("(")
        args = []
        while True:
            tok = self.take()
            if tok[0] != "int":
                raise ParseError(f"expected an integer, got {tok[1]!r}", E_SYNTAX, tok[2])
            args.append(int(tok[1]))
            tok = self.take()
            if tok[0] == "punct" and tok[1] == ",":
                continue
            if tok[0] == "punct" and tok[1] == ")":
                return tuple(args)
            raise ParseError(f"expected ',' or ')', got {tok[1]!r}", E_SYNTAX, tok[2])


def parse(text: str) -> StructureSpec:
    """Parse a structure spec; raises ParseError on any invalid input."""
    if not isinstance(text, str):
        raise ParseError("structure spec must be text", E_SYNTAX, 0)
    p = _Parser(text)
    if p.peek() is None:
        raise ParseError("empty structure spec", E_SYNTAX, 0)
    return p.parse()


def format_spec(spec: StructureSpec) -> str:
    """Canonical printed form; round-trips through parse()."""
    if isinstance(spec, NamedStructure):
        if not spec.args:
            return spec.kind
        return f"{spec.kind}({','.join(str(a) for a in spec.args)})"
    out = spec.seed
    for op in reversed(spec.ops):
        out = f"{op}({out})"
    return out
