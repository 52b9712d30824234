"""Words over the named generators: parsing, printing and evaluation.

Grammar (whitespace-insensitive)::

    word   := term (('•' | '*') term)*
    term   := factor (('⊕' | '+') factor)*
    factor := (atom | '(' word ')') ('^-1')*
    atom   := name '[' args ']'

Atoms: ``x[c]``, ``tau[g]``, ``p[<cycles>,n]``, ``id[n]``, ``iota0[g]``,
``iota1[c,g]``.  ``a • b`` means "apply b, then a".
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import Action
from .cantor import _split_top
from .elements import (
    CompositionError,
    Element,
    compose,
    direct_sum,
    identity,
    invert,
    perm_from_cycles,
    simple_split,
    twist,
)
from .factorization import iota0, iota1

__all__ = [
    "Atom",
    "Compose",
    "Sum",
    "Inverse",
    "ParseError",
    "EvaluationError",
    "parse",
    "to_text",
    "evaluate",
    "ATOMS",
]

ATOMS = {"x": 1, "tau": 1, "p": 2, "id": 1, "iota0": 1, "iota1": 2}


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        caret = f"\n  {text}\n  {' ' * pos}^" if text else ""
        super().__init__(f"{message} at position {pos}{caret}")


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple


@dataclass(frozen=True)
class Compose:
    parts: tuple


@dataclass(frozen=True)
class Sum:
    parts: tuple


@dataclass(frozen=True)
class Inverse:
    inner: object


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, *options):
        self.skip()
        for o in options:
            if self.text.startswith(o, self.pos):
                return o
        return None

    def take(self, tok):
        if self.peek(tok) != tok:
            self.error(f"expected {tok!r}")
        self.pos += len(tok)

    def word(self):
        parts = [self.term()]
        while (op := self.peek("•", "*")) is not None:
            self.pos += len(op)
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Compose(tuple(parts))

    def term(self):
        parts = [self.factor()]
        while (op := self.peek("⊕", "+")) is not None:
            self.pos += len(op)
            parts.append(self.factor())
        return parts[0] if len(parts) == 1 else Sum(tuple(parts))

    def factor(self):
        if self.peek("(") is not None:
            self.pos += 1
            node = self.word()
            self.take(")")
        else:
            node = self.atom()
        while self.peek("^-1") is not None:
            self.pos += 3
            node = Inverse(node)
        return node

    def atom(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()):
            self.pos += 1
        name = self.text[start:self.pos]
        if not name:
            self.error("expected an atom or '('")
        if name not in ATOMS:
            self.pos = start
            self.error(f"unknown atom {name!r}")
        self.take("[")
        depth, begin = 1, self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in "([{":
                depth += 1
            elif ch in ")]}":
                depth -= 1
                if depth == 0:
                    break
            self.pos += 1
        if depth != 0 or self.pos >= len(self.text) or self.text[self.pos] != "]":
            self.error("unterminated '['")
        raw = self.text[begin:self.pos]
        self.pos += 1
        args = tuple(_split_top(raw, ","))
        if len(args) != ATOMS[name] or any(not a for a in args):
            self.pos = start
            self.error(f"{name}[...] takes {ATOMS[name]} argument(s)")
        return Atom(name, args)


def parse(text: str):
    p = _Parser(text)
    node = p.word()
    p.skip()
    if p.pos != len(text):
        p.error("unexpected trailing input")
    return node


def to_text(node) -> str:
    if isinstance(node, Atom):
        return f"{node.name}[{','.join(node.args)}]"
    if isinstance(node, Compose):
        return " • ".join(_wrap(p, Compose) for p in node.parts)
    if isinstance(node, Sum):
        return " ⊕ ".join(_wrap(p, (Compose, Sum)) for p in node.parts)
    if isinstance(node, Inverse):
        inner = to_text(node.inner)
        if not isinstance(node.inner, (Atom, Inverse)):
            inner = f"({inner})"
        return inner + "^-1"
    raise TypeError(node)


def _wrap(node, kinds) -> str:
    s = to_text(node)
    return f"({s})" if isinstance(node, kinds) else s


def evaluate(node, action: Action, env: dict | None = None) -> Element:
    """Evaluate a parsed word (or text) in the groupoid of ``action``.

    ``env`` maps symbolic names used inside atoms to colors or group elements.
    """
    if isinstance(node, str):
        node = parse(node)
    env = env or {}
    if isinstance(node, Atom):
        return _atom(node, action, env)
    if isinstance(node, Compose):
        vals = [evaluate(p, action, env) for p in node.parts]
        out = vals[-1]
        for v in reversed(vals[:-1]):
            try:
                out = compose(v, out)
            except CompositionError as exc:
                raise EvaluationError(str(exc)) from exc
        return out
    if isinstance(node, Sum):
        vals = [evaluate(p, action, env) for p in node.parts]
        out = vals[0]
        for v in vals[1:]:
            out = direct_sum(out, v)
        return out
    if isinstance(node, Inverse):
        return invert(evaluate(node.inner, action, env))
    raise TypeError(node)


def _color(text, action, env):
    if text in env:
        return action.check_color(env[text])
    try:
        return action.parse_color(text)
    except ValueError as exc:
        raise EvaluationError(f"unknown color {text!r} for {action.name}") from exc


def _gelem(text, action, env):
    if text in env:
        return env[text]
    try:
        return action.parse_element(text)
    except ValueError as exc:
        raise EvaluationError(f"unknown group element {text!r} for {action.name}") from exc


def _count(text):
    try:
        n = int(text)
    except ValueError as exc:
        raise EvaluationError(f"expected a positive integer, got {text!r}") from exc
    if n < 1:
        raise EvaluationError(f"expected a positive integer, got {text!r}")
    return n


def _atom(node: Atom, action, env) -> Element:
    name, args = node.name, node.args
    if name == "x":
        return simple_split(action, _color(args[0], action, env))
    if name == "tau":
        return twist(action, _gelem(args[0], action, env))
    if name == "id":
        return identity(action, _count(args[0]))
    if name == "p":
        try:
            return perm_from_cycles(action, args[0], _count(args[1]))
        except ValueError as exc:
            raise EvaluationError(str(exc)) from exc
    if name == "iota0":
        return iota0(action, _gelem(args[0], action, env))
    if name == "iota1":
        return iota1(action, _color(args[0], action, env), _gelem(args[1], action, env))
    raise EvaluationError(f"unknown atom {name!r}")  # pragma: no cover
