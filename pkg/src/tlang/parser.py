"""Recursive-descent parser for the tensor statement source language.

Grammar (EBNF), where `#` starts a comment running to end of line:

    program := item* ; item := decl | stmt ;
    decl := "tensor" ID "dim" INT "rank" INT sym? inner? ";"
          | "field" ID ";" | "const" ID "=" NUM ";" | "index" ID ":" INT ";"
    inner := "inner" "rank" INT sym? ; sym := ("sym" "(" INT "," INT ")")+
    stmt  := lval aop expr ";" ; aop := "=" | "+=" | "-=" | "*=" | "/="
    lval  := ID "(" (lsym ",")? terms ")" ("(" terms ")")?
    lsym  := "sym" "<" INT "," INT ">" ("&&" "sym" "<" INT "," INT ">")*
    terms := term ("," term)* ; term := INT | ID ("+" INT)?
    expr  := t (("+"|"-") t)* ; t := u (("*"|"/") u)* ; u := "-" u | p
    p := NUM | ID | ID "(" terms ")" ("(" terms ")")?
       | "Sum" "(" ID "," expr ")" | "sqrt" "(" expr ")" | "(" expr ")"

Indices i..o (dimension 3) and a..d (dimension 4) are predeclared and may be
overridden by `index` declarations; any other declaration of the same name
shadows the built-in index instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Union

from .fields import IndexVar, TensorShape
from .ir import (
    Add,
    Const,
    Declarations,
    Div,
    Expr,
    FieldRef,
    Fixed,
    IndexTerm,
    Leaf,
    Mul,
    Neg,
    Sqrt,
    Statement,
    Sub,
    Sum,
    TensorLeaf,
    VarTerm,
)
from .symmetry import ShapeError, SymmetrySpec

MAX_DIAGNOSTICS = 20

BUILTIN_INDICES = {
    **{n: IndexVar(n, 3) for n in "ijklmno"},
    **{n: IndexVar(n, 4) for n in "abcd"},
}

KEYWORDS = {"tensor", "field", "const", "index", "inner", "rank", "dim", "sym", "Sum", "sqrt"}

_PUNCT = ("+=", "-=", "*=", "/=", "&&", "(", ")", "<", ">", ",", ";", ":", "+", "-", "*", "/", "=")


@dataclass(frozen=True)
class Diagnostic:
    line: int
    col: int
    message: str

    def format(self, filename: str) -> str:
        return f"{filename}:{self.line}:{self.col}: {self.message}"


@dataclass(frozen=True)
class Token:
    kind: str  # "id" | "num" | "punct" | "eof"
    text: str
    line: int
    col: int


class _ParserBail(Exception):
    """Internal: unwind to item level after a recorded diagnostic."""


@dataclass
class TensorDecl:
    name: str
    dim: int
    rank: int
    sym: SymmetrySpec
    inner_rank: int = 0
    inner_sym: SymmetrySpec = dc_field(default_factory=SymmetrySpec)


@dataclass
class FieldDecl:
    name: str


@dataclass
class ConstDecl:
    name: str
    value: float


@dataclass
class IndexDecl:
    name: str
    dim: int


Item = Union[TensorDecl, FieldDecl, ConstDecl, IndexDecl, Statement]


@dataclass
class Program:
    items: list[Item] = dc_field(default_factory=list)
    decls: Declarations = dc_field(default_factory=lambda: Declarations({}, set()))
    consts: dict[str, float] = dc_field(default_factory=dict)
    indices: dict[str, IndexVar] = dc_field(default_factory=dict)
    statements: list[Statement] = dc_field(default_factory=list)
    statement_positions: list[tuple[int, int]] = dc_field(default_factory=list)


@dataclass
class ParseResult:
    program: Program
    diagnostics: list[Diagnostic]

    @property
    def ok(self) -> bool:
        return not self.diagnostics


def tokenize(text: str, diagnostics: list[Diagnostic]) -> list[Token]:
    tokens: list[Token] = []
    line, col, pos = 1, 1, 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch == "\n":
            line, col, pos = line + 1, 1, pos + 1
            continue
        if ch in " \t\r":
            pos += 1
            col += 1
            continue
        if ch == "#":
            while pos < n and text[pos] != "\n":
                pos += 1
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            tokens.append(Token("id", text[start:pos], line, col))
            col += pos - start
            continue
        if ch.isdigit() or (ch == "." and pos + 1 < n and text[pos + 1].isdigit()):
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if pos < n and text[pos] == ".":
                pos += 1
                while pos < n and text[pos].isdigit():
                    pos += 1
            if pos < n and text[pos] in "eE":
                mark = pos
                pos += 1
                if pos < n and text[pos] in "+-":
                    pos += 1
                if pos < n and text[pos].isdigit():
                    while pos < n and text[pos].isdigit():
                        pos += 1
                else:
                    pos = mark  # bare 'e' belongs to the next token
            tokens.append(Token("num", text[start:pos], line, col))
            col += pos - start
            continue
        for p in _PUNCT:
            if text.startswith(p, pos):
                tokens.append(Token("punct", p, line, col))
                pos += len(p)
                col += len(p)
                break
        else:
            if len(diagnostics) < MAX_DIAGNOSTICS:
                diagnostics.append(Diagnostic(line, col, f"unexpected character {ch!r}"))
            pos += 1
            col += 1
    tokens.append(Token("eof", "", line, col))
    return tokens


class Parser:
    def __init__(self, text: str):
        self.diagnostics: list[Diagnostic] = []
        self.tokens = tokenize(text, self.diagnostics)
        self.pos = 0
        self.program = Program()
        self.program.indices.update(BUILTIN_INDICES)

    # --- token plumbing ---

    @property
    def cur(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.cur
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None) -> None:
        tok = tok or self.cur
        if len(self.diagnostics) < MAX_DIAGNOSTICS:
            self.diagnostics.append(Diagnostic(tok.line, tok.col, message))
        raise _ParserBail()

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.cur
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind.upper()
            got = tok.text if tok.kind != "eof" else "end of input"
            self.error(f"expected {want!r}, found {got!r}")
        return self.advance()

    def expect_punct(self, text: str) -> Token:
        return self.expect("punct", text)

    def expect_id(self) -> Token:
        return self.expect("id")

    def expect_int(self) -> int:
        tok = self.cur
        if tok.kind != "num" or not tok.text.isdigit():
            self.error(f"expected an integer, found {tok.text!r}")
        self.advance()
        return int(tok.text)

    def expect_num(self) -> float:
        tok = self.cur
        if tok.kind != "num":
            self.error(f"expected a number, found {tok.text!r}")
        self.advance()
        return float(tok.text)

    def at_punct(self, text: str) -> bool:
        return self.cur.kind == "punct" and self.cur.text == text

    def eat_punct(self, text: str) -> bool:
        if self.at_punct(text):
            self.advance()
            return True
        return False

    # --- declarations ---

    def declare(self, tok: Token) -> str:
        name = tok.text
        if name in KEYWORDS:
            self.error(f"{name!r} is a reserved word", tok)
        prog = self.program
        explicit = (
            name in prog.decls.tensors
            or name in prog.decls.scalar_fields
            or name in prog.consts
            or (name in prog.indices and name not in BUILTIN_INDICES)
        )
        if explicit:
            self.error(f"{name!r} is already declared", tok)
        # an explicit declaration shadows a same-named built-in index
        prog.indices.pop(name, None)
        return name

    def parse_sym_list(self) -> SymmetrySpec:
        pairs = []
        while self.cur.kind == "id" and self.cur.text == "sym":
            tok = self.advance()
            self.expect_punct("(")
            p = self.expect_int()
            self.expect_punct(",")
            q = self.expect_int()
            self.expect_punct(")")
            if p >= q:
                self.error(f"symmetry pair must satisfy pos1 < pos2, got ({p},{q})", tok)
            pairs.append((p, q))
        return SymmetrySpec(tuple(pairs))

    def parse_tensor_decl(self) -> None:
        name_tok = self.expect_id()
        self.expect("id", "dim")
        dim = self.expect_int()
        self.expect("id", "rank")
        rank = self.expect_int()
        sym = self.parse_sym_list()
        inner_rank, inner_sym = 0, SymmetrySpec()
        if self.cur.kind == "id" and self.cur.text == "inner":
            self.advance()
            self.expect("id", "rank")
            inner_rank = self.expect_int()
            inner_sym = self.parse_sym_list()
        self.expect_punct(";")
        name = self.declare(name_tok)
        try:
            shape = TensorShape(dim, rank, sym, inner_rank, inner_sym)
        except ShapeError as exc:
            self.error(str(exc), name_tok)
        self.program.decls.tensors[name] = shape
        self.program.items.append(TensorDecl(name, dim, rank, sym, inner_rank, inner_sym))

    def parse_item(self) -> None:
        tok = self.cur
        if tok.kind == "id" and tok.text == "tensor":
            self.advance()
            self.parse_tensor_decl()
        elif tok.kind == "id" and tok.text == "field":
            self.advance()
            name = self.declare(self.expect_id())
            self.expect_punct(";")
            self.program.decls.scalar_fields.add(name)
            self.program.items.append(FieldDecl(name))
        elif tok.kind == "id" and tok.text == "const":
            self.advance()
            name_tok = self.expect_id()
            self.expect_punct("=")
            value = self.expect_num()
            self.expect_punct(";")
            name = self.declare(name_tok)
            self.program.consts[name] = value
            self.program.items.append(ConstDecl(name, value))
        elif tok.kind == "id" and tok.text == "index":
            self.advance()
            name_tok = self.expect_id()
            self.expect_punct(":")
            dim = self.expect_int()
            self.expect_punct(";")
            name = self.declare(name_tok)
            if dim < 1:
                self.error(f"index {name!r} must have positive dimension", name_tok)
            self.program.indices[name] = IndexVar(name, dim)
            self.program.items.append(IndexDecl(name, dim))
        else:
            self.parse_statement()

    # --- statements and expressions ---

    def lookup_index(self, tok: Token) -> IndexVar:
        var = self.program.indices.get(tok.text)
        if var is None:
            self.error(f"{tok.text!r} is not a declared index", tok)
        return var

    def parse_term(self) -> IndexTerm:
        tok = self.cur
        if tok.kind == "num":
            return Fixed(self.expect_int())
        if tok.kind == "id":
            self.advance()
            var = self.lookup_index(tok)
            offset = 0
            if self.eat_punct("+"):
                offset = self.expect_int()
            return VarTerm(var, offset)
        self.error(f"expected an index term, found {tok.text!r}")

    def parse_terms(self) -> tuple[IndexTerm, ...]:
        terms = [self.parse_term()]
        while self.eat_punct(","):
            terms.append(self.parse_term())
        return tuple(terms)

    def parse_lsym(self) -> SymmetrySpec:
        pairs = []
        while True:
            tok = self.expect("id", "sym")
            self.expect_punct("<")
            p = self.expect_int()
            self.expect_punct(",")
            q = self.expect_int()
            self.expect_punct(">")
            if p >= q:
                self.error(f"symmetry pair must satisfy pos1 < pos2, got ({p},{q})", tok)
            pairs.append((p, q))
            if not self.eat_punct("&&"):
                break
        return SymmetrySpec(tuple(pairs))

    def parse_lval(self) -> TensorLeaf:
        name_tok = self.expect_id()
        name = name_tok.text
        if name not in self.program.decls.tensors:
            self.error(f"{name!r} is not a declared tensor", name_tok)
        self.expect_punct("(")
        declared_sym: SymmetrySpec | None = None
        if self.cur.kind == "id" and self.cur.text == "sym":
            declared_sym = self.parse_lsym()
            self.expect_punct(",")
        outer = self.parse_terms()
        self.expect_punct(")")
        inner: tuple[IndexTerm, ...] = ()
        if self.eat_punct("("):
            inner = self.parse_terms()
            self.expect_punct(")")
        return TensorLeaf(name, outer, inner, declared_sym)

    def parse_statement(self) -> None:
        start = self.cur
        if start.kind == "eof":
            self.error("unexpected end of input")
        lhs = self.parse_lval()
        op_tok = self.cur
        if op_tok.kind != "punct" or op_tok.text not in ("=", "+=", "-=", "*=", "/="):
            self.error(f"expected an assignment operator, found {op_tok.text!r}")
        self.advance()
        rhs = self.parse_expr()
        self.expect_punct(";")
        self.program.statements.append(Statement(lhs, op_tok.text, rhs))
        self.program.statement_positions.append((start.line, start.col))
        self.program.items.append(self.program.statements[-1])

    def parse_expr(self) -> Expr:
        e = self.parse_multerm()
        while self.cur.kind == "punct" and self.cur.text in ("+", "-"):
            op = self.advance().text
            r = self.parse_multerm()
            e = Add(e, r) if op == "+" else Sub(e, r)
        return e

    def parse_multerm(self) -> Expr:
        e = self.parse_unary()
        while self.cur.kind == "punct" and self.cur.text in ("*", "/"):
            op = self.advance().text
            r = self.parse_unary()
            e = Mul(e, r) if op == "*" else Div(e, r)
        return e

    def parse_unary(self) -> Expr:
        if self.eat_punct("-"):
            return Neg(self.parse_unary())
        return self.parse_primary()

    def parse_primary(self) -> Expr:
        tok = self.cur
        if tok.kind == "num":
            self.advance()
            return Const(float(tok.text))
        if self.eat_punct("("):
            e = self.parse_expr()
            self.expect_punct(")")
            return e
        if tok.kind != "id":
            self.error(f"expected an expression, found {tok.text or 'end of input'!r}")
        if tok.text == "Sum":
            self.advance()
            self.expect_punct("(")
            var = self.lookup_index(self.expect_id())
            self.expect_punct(",")
            body = self.parse_expr()
            self.expect_punct(")")
            return Sum(var, body)
        if tok.text == "sqrt":
            self.advance()
            self.expect_punct("(")
            e = self.parse_expr()
            self.expect_punct(")")
            return Sqrt(e)
        self.advance()
        name = tok.text
        if self.at_punct("("):
            if name not in self.program.decls.tensors:
                self.error(f"{name!r} is not a declared tensor", tok)
            self.expect_punct("(")
            outer = self.parse_terms()
            self.expect_punct(")")
            inner: tuple[IndexTerm, ...] = ()
            if self.eat_punct("("):
                inner = self.parse_terms()
                self.expect_punct(")")
            return Leaf(TensorLeaf(name, outer, inner))
        if name in self.program.consts:
            return Const(self.program.consts[name])
        if name in self.program.decls.scalar_fields:
            return FieldRef(name)
        self.error(f"{name!r} is not a declared field or constant", tok)

    # --- driver ---

    def skip_to_item(self) -> None:
        while self.cur.kind != "eof":
            if self.advance().text == ";":
                return

    def run(self) -> ParseResult:
        while self.cur.kind != "eof" and len(self.diagnostics) < MAX_DIAGNOSTICS:
            try:
                self.parse_item()
            except _ParserBail:
                self.skip_to_item()
        return ParseResult(self.program, self.diagnostics)


def parse_program(text: str) -> ParseResult:
    """Parse source text; diagnostics carry 1-based line and column."""
    return Parser(text).run()


# --- pretty printer ----------------------------------------------------------


def _render_sym_decl(sym: SymmetrySpec) -> str:
    return "".join(f" sym({p},{q})" for p, q in sym.inequalities)


def _render_terms(terms: tuple[IndexTerm, ...]) -> str:
    out = []
    for t in terms:
        if isinstance(t, Fixed):
            out.append(str(t.value))
        elif t.offset:
            out.append(f"{t.var.name}+{t.offset}")
        else:
            out.append(t.var.name)
    return ", ".join(out)


def _render_expr(e: Expr, prec: int = 0) -> str:
    # precedence levels: 1 additive, 2 multiplicative, 3 unary
    if isinstance(e, Const):
        return repr(e.value)
    if isinstance(e, FieldRef):
        return e.name
    if isinstance(e, Leaf):
        s = f"{e.leaf.field}({_render_terms(e.leaf.outer)})"
        if e.leaf.inner:
            s += f"({_render_terms(e.leaf.inner)})"
        return s
    if isinstance(e, (Add, Sub)):
        op = "+" if isinstance(e, Add) else "-"
        s = f"{_render_expr(e.l, 1)} {op} {_render_expr(e.r, 2)}"
        return f"({s})" if prec > 1 else s
    if isinstance(e, (Mul, Div)):
        op = "*" if isinstance(e, Mul) else "/"
        s = f"{_render_expr(e.l, 2)}{op}{_render_expr(e.r, 3)}"
        return f"({s})" if prec > 2 else s
    if isinstance(e, Neg):
        return f"-{_render_expr(e.e, 3)}"
    if isinstance(e, Sqrt):
        return f"sqrt({_render_expr(e.e)})"
    if isinstance(e, Sum):
        return f"Sum({e.var.name}, {_render_expr(e.body)})"
    raise TypeError(f"not an expression node: {e!r}")


def render_statement(stmt: Statement) -> str:
    lhs = stmt.lhs
    head = lhs.field + "("
    if lhs.declared_sym is not None and lhs.declared_sym.inequalities:
        head += " && ".join(f"sym<{p},{q}>" for p, q in lhs.declared_sym.inequalities)
        head += ", "
    head += _render_terms(lhs.outer) + ")"
    if lhs.inner:
        head += f"({_render_terms(lhs.inner)})"
    return f"{head} {stmt.op} {_render_expr(stmt.rhs)};"


def render(program: Program) -> str:
    """Source text that reparses to a structurally identical program."""
    lines = []
    for item in program.items:
        if isinstance(item, TensorDecl):
            line = f"tensor {item.name} dim {item.dim} rank {item.rank}{_render_sym_decl(item.sym)}"
            if item.inner_rank:
                line += f" inner rank {item.inner_rank}{_render_sym_decl(item.inner_sym)}"
            lines.append(line + ";")
        elif isinstance(item, FieldDecl):
            lines.append(f"field {item.name};")
        elif isinstance(item, ConstDecl):
            lines.append(f"const {item.name} = {item.value!r};")
        elif isinstance(item, IndexDecl):
            lines.append(f"index {item.name}: {item.dim};")
        else:
            lines.append(render_statement(item))
    return "\n".join(lines) + "\n"
