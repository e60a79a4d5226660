"""Generator expressions for graphs, and input resolution for the CLI and
the play service.

Grammar (whitespace-insensitive)::

    expr  := term ('+' term)*            disjoint union
    term  := atom ('[' expr ']')*        lexicographic product
    atom  := 'co(' expr ')'              complement
           | 'K[' expr '](' ints ')'     complete expansion (one size broadcasts)
           | 'I[' expr '](' ints ')'     independent expansion
           | '(' expr ')'
           | family

Families: P<n>, C<n>, K<n>, K<n1,n2,...> (complete multipartite; K1,t is the
star), star<t>, paw, kite, bull, dart, claw, diamond, p5bar, cop2p3.

Examples: ``P3[K2]``, ``K[C5](1,2,1,2,1)``, ``co(P5)``, ``C5+K3``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import families
from .graph6 import Graph6Error, decode_graph6
from .graphs import (
    Graph,
    GraphError,
    complement,
    complete_expansion,
    disjoint_union,
    independent_expansion,
    lexicographic_product,
)


@dataclass(frozen=True)
class FamilyNode:
    name: str
    params: tuple[int, ...]

    def build(self) -> Graph:
        return families.family_generator(self.name, self.params)

    def __str__(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}{','.join(map(str, self.params))}"


@dataclass(frozen=True)
class ProductNode:
    left: "Node"
    right: "Node"

    def build(self) -> Graph:
        return lexicographic_product(self.left.build(), self.right.build())

    def __str__(self) -> str:
        left = f"({self.left})" if isinstance(self.left, UnionNode) else str(self.left)
        return f"{left}[{self.right}]"


@dataclass(frozen=True)
class ExpandNode:
    kind: str  # "complete" | "independent"
    base: "Node"
    sizes: tuple[int, ...]

    def build(self) -> Graph:
        f = complete_expansion if self.kind == "complete" else independent_expansion
        return f(self.base.build(), self.sizes)

    def __str__(self) -> str:
        tag = "K" if self.kind == "complete" else "I"
        return f"{tag}[{self.base}]({','.join(map(str, self.sizes))})"


@dataclass(frozen=True)
class ComplementNode:
    inner: "Node"

    def build(self) -> Graph:
        return complement(self.inner.build())

    def __str__(self) -> str:
        return f"co({self.inner})"


@dataclass(frozen=True)
class UnionNode:
    left: "Node"
    right: "Node"

    def build(self) -> Graph:
        return disjoint_union(self.left.build(), self.right.build())

    def __str__(self) -> str:
        return f"{self.left}+{self.right}"


Node = Union[FamilyNode, ProductNode, ExpandNode, ComplementNode, UnionNode]

_NAMED = ("p5bar", "cop2p3", "diamond", "paw", "kite", "bull", "dart", "claw")


class ExpressionError(GraphError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ExpressionError(f"{msg} at position {self.pos} in {self.text!r}")

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def starts(self, token: str) -> bool:
        self.skip()
        return self.text[self.pos:self.pos + len(token)].lower() == token.lower()

    def parse(self) -> Node:
        node = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error("trailing input")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek() == "+":
            self.eat("+")
            node = UnionNode(node, self.term())
        return node

    def term(self) -> Node:
        node = self.atom()
        while self.peek() == "[":
            self.eat("[")
            inner = self.expr()
            self.eat("]")
            node = ProductNode(node, inner)
        return node

    def atom(self) -> Node:
        if self.starts("co("):
            self.pos += 3
            inner = self.expr()
            self.eat(")")
            return ComplementNode(inner)
        if self.starts("K["):
            return self.expand("complete")
        if self.starts("I["):
            return self.expand("independent")
        if self.peek() == "(":
            self.eat("(")
            inner = self.expr()
            self.eat(")")
            return inner
        return self.family()

    def expand(self, kind: str) -> Node:
        self.pos += 2
        base = self.expr()
        self.eat("]")
        self.eat("(")
        sizes = self.ints()
        self.eat(")")
        return ExpandNode(kind, base, sizes)

    def family(self) -> Node:
        self.skip()
        for name in _NAMED:
            if self.starts(name):
                self.pos += len(name)
                return FamilyNode(name, ())
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        name = self.text[start:self.pos]
        if not name:
            self.error("expected a family name")
        params = self.ints() if self.pos < len(self.text) and self.text[self.pos].isdigit() else ()
        return FamilyNode(name, tuple(params))

    def ints(self) -> tuple[int, ...]:
        out = []
        while True:
            self.skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("expected an integer")
            out.append(int(self.text[start:self.pos]))
            if self.peek() == ",":
                self.eat(",")
            else:
                return tuple(out)


def parse_expression(text: str) -> Node:
    return _Parser(text).parse()


def build_expression(text: str) -> Graph:
    return parse_expression(text).build()


def resolve_graph_input(text_or_dict, *, allow_files: bool = True
                        ) -> tuple[Graph, Optional[Node]]:
    """Accept a generator expression, a graph6 string, inline JSON, a JSON
    file path, or an already-parsed JSON dict.  ``g6:`` and ``json:``
    prefixes force an interpretation.  Returns the graph and, when the input
    was an expression, its parse tree (the play service uses the tree to wire
    product-aware engines)."""
    if isinstance(text_or_dict, dict):
        return Graph.from_json_dict(text_or_dict), None
    text = text_or_dict.strip()
    if text.startswith("g6:"):
        return decode_graph6(text[3:]), None
    if text.startswith("json:"):
        rest = text[5:].strip()
        if rest.startswith("{"):
            return Graph.from_json(rest), None
        if not allow_files:
            raise GraphError("file inputs are not allowed here")
        with open(rest, "r", encoding="utf-8") as fh:
            return Graph.from_json(fh.read()), None
    if text.startswith("{"):
        return Graph.from_json(text), None
    errors = []
    try:
        node = parse_expression(text)
        return node.build(), node
    except GraphError as exc:
        errors.append(f"as expression: {exc}")
    try:
        return decode_graph6(text), None
    except Graph6Error as exc:
        errors.append(f"as graph6: {exc}")
    if allow_files and os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            return Graph.from_json(fh.read()), None
    raise GraphError(
        "could not interpret graph input "
        + repr(text) + "; " + "; ".join(errors)
    )
