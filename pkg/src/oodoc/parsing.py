"""Parser for the supported subset of a class-based OO language.

The subset covers: package declarations, imports, top-level class and
interface declarations, attributes (multiple declarators per statement),
constructors, methods with parameter lists and throws clauses, and method
bodies made of local variable declarations, assignments, call expressions,
field accesses and the if/else, for, while, switch, return and block
statements. Everything else inside a body is skipped with a warning;
unsupported top-level declarations (enums, generic types) are warned about
and omitted. Structural damage (unbalanced braces, malformed declaration
headers) aborts the file with a ParseFailure.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import ParseFailure
from .sources import SourceFile

KIND_LOCAL = "local-variable-declaration"
KIND_INVOCATION = "method-invocation"
KIND_ACCESS = "attribute-access"

_ACCESS_MODIFIERS = ("public", "protected", "private")
_MEMBER_FLAGS = ("static", "final", "abstract")
# statements we recognise well enough to refuse politely
_UNSUPPORTED_STATEMENT_KEYWORDS = {
    "do", "try", "catch", "finally", "throw", "synchronized", "assert",
}

_PUNCT = (
    "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=", "/=",
    "%=", "->", "...", "+", "-", "*", "/", "%", "<", ">", "=", "!", "&",
    "|", "^", "~", "?", ":", ".", ",", ";", "(", ")", "{", "}", "[", "]",
    "@",
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident | number | string | char | punct | eof
    text: str
    line: int


@dataclass(frozen=True)
class ParseWarning:
    path: str
    line: int
    message: str

    def __str__(self) -> str:
        return f"{self.path}:{self.line}: {self.message}"


@dataclass
class BodyItem:
    kind: str  # one of KIND_LOCAL, KIND_INVOCATION, KIND_ACCESS
    name: str
    type_or_receiver: str
    position: int


@dataclass
class RawParameter:
    name: str
    declared_type: str


@dataclass
class RawAttribute:
    name: str
    declared_type: str
    access_level: str
    is_static: bool
    line: int


@dataclass
class RawMethod:
    name: str
    return_type: str | None  # None for constructors
    access_level: str
    is_static: bool
    is_constructor: bool
    parameters: list[RawParameter]
    throws: list[str]
    body_items: list[BodyItem]
    has_body: bool
    line: int


@dataclass
class RawTypeDecl:
    name: str
    kind: str  # "class" | "interface"
    access_level: str  # "public" | "package-private"
    superclass_name: str | None
    interface_names: list[str]  # implements for classes, extends for interfaces
    members: list  # RawAttribute | RawMethod, in declaration order
    line: int


@dataclass
class FileSyntaxTree:
    path: str
    package_name: str
    imports: list[str]
    type_decls: list[RawTypeDecl]
    warnings: list[ParseWarning] = field(default_factory=list)


class _Unsupported(Exception):
    """Statement-level construct outside the subset; recoverable."""

    def __init__(self, line: int, what: str):
        super().__init__(what)
        self.line = line
        self.what = what


def tokenize(text: str, path: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(text)
    line = 1
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            i += 1
            continue
        if c.isspace():
            i += 1
            continue
        if c == "/" and i + 1 < n and text[i + 1] == "/":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if c == "/" and i + 1 < n and text[i + 1] == "*":
            start_line = line
            i += 2
            while True:
                if i + 1 >= n:
                    raise ParseFailure(path, start_line, "unterminated block comment")
                if text[i] == "\n":
                    line += 1
                    i += 1
                    continue
                if text[i] == "*" and text[i + 1] == "/":
                    i += 2
                    break
                i += 1
            continue
        if c == '"' or c == "'":
            quote = c
            start_line = line
            j = i + 1
            while j < n:
                if text[j] == "\\" and j + 1 < n:
                    j += 2
                    continue
                if text[j] == "\n":
                    raise ParseFailure(path, start_line, "unterminated literal")
                if text[j] == quote:
                    break
                j += 1
            else:
                raise ParseFailure(path, start_line, "unterminated literal")
            kind = "string" if quote == '"' else "char"
            tokens.append(Token(kind, text[i : j + 1], line))
            i = j + 1
            continue
        if c.isdigit():
            j = i + 1
            while j < n and (text[j].isdigit() or text[j] == "."):
                j += 1
            if j < n and text[j] in "fFdDlL":
                j += 1
            tokens.append(Token("number", text[i:j], line))
            i = j
            continue
        if c.isalpha() or c == "_" or c == "$":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] in "_$"):
                j += 1
            tokens.append(Token("ident", text[i:j], line))
            i = j
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                tokens.append(Token("punct", p, line))
                i += len(p)
                break
        else:
            raise ParseFailure(path, line, f"unexpected character {c!r}")
    tokens.append(Token("eof", "", line))
    return tokens


def parse_file(file: SourceFile) -> FileSyntaxTree:
    """Parse one source file into a raw syntax tree."""
    tokens = tokenize(file.text, file.path)
    try:
        return _Parser(tokens, file.path).parse_compilation_unit()
    except RecursionError:
        raise ParseFailure(file.path, 1, "nesting too deep to parse") from None


def parse_files(
    files: list[SourceFile], jobs: int = 1
) -> tuple[list[FileSyntaxTree], list[ParseFailure]]:
    """Parse many files, isolating per-file failures.

    Results come back in input order no matter how many workers run; file
    parsing shares no state so threading it is safe.
    """
    trees: list[FileSyntaxTree] = []
    failures: list[ParseFailure] = []

    def attempt(f: SourceFile):
        try:
            return parse_file(f)
        except ParseFailure as exc:
            return exc

    if jobs > 1 and len(files) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(attempt, files))
    else:
        results = [attempt(f) for f in files]
    for outcome in results:
        if isinstance(outcome, ParseFailure):
            failures.append(outcome)
        else:
            trees.append(outcome)
    return trees, failures


class _Parser:
    def __init__(self, tokens: list[Token], path: str):
        self.tokens = tokens
        self.path = path
        self.pos = 0
        self.warnings: list[ParseWarning] = []

    # -- token helpers -------------------------------------------------

    def peek(self, offset: int = 0) -> Token:
        idx = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[idx]

    def at(self, text: str) -> bool:
        return self.peek().text == text and self.peek().kind in ("punct", "ident")

    def at_kind(self, kind: str) -> bool:
        return self.peek().kind == kind

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.text != text:
            self.fail(f"expected {text!r} but found {tok.text!r}", tok.line)
        return self.advance()

    def expect_ident(self) -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            self.fail(f"expected an identifier but found {tok.text!r}", tok.line)
        return self.advance()

    def fail(self, message: str, line: int | None = None):
        raise ParseFailure(self.path, line if line is not None else self.peek().line, message)

    def warn(self, message: str, line: int):
        self.warnings.append(ParseWarning(self.path, line, message))

    # -- compilation unit ----------------------------------------------

    def parse_compilation_unit(self) -> FileSyntaxTree:
        package_name = ""
        imports: list[str] = []
        decls: list[RawTypeDecl] = []
        if self.at("package"):
            self.advance()
            package_name = self._dotted_name()
            self.expect(";")
        while self.at("import"):
            line = self.peek().line
            self.advance()
            if self.at("static"):
                self.warn("static imports are not supported; import skipped", line)
                self._skip_to_semicolon()
                continue
            name = self._dotted_name(allow_star=True)
            self.expect(";")
            imports.append(name)
        while not self.at_kind("eof"):
            if self.at("package"):
                self.fail("only one package declaration is allowed per file")
            decl = self._parse_type_decl()
            if decl is not None:
                decls.append(decl)
        tree = FileSyntaxTree(self.path, package_name, imports, decls)
        tree.warnings = self.warnings
        return tree

    def _dotted_name(self, allow_star: bool = False) -> str:
        parts = [self.expect_ident().text]
        while self.at("."):
            self.advance()
            if allow_star and self.at("*"):
                self.advance()
                parts.append("*")
                break
            parts.append(self.expect_ident().text)
        return ".".join(parts)

    # -- type declarations ----------------------------------------------

    def _parse_type_decl(self) -> RawTypeDecl | None:
        line = self.peek().line
        while self.at("@"):
            self._skip_annotation()
        mods = self._parse_modifiers(context="type declaration")
        if self.at("enum"):
            self.warn("enum declarations are not supported; declaration skipped", self.peek().line)
            self._skip_declaration()
            return None
        if self.at("class"):
            kind = "class"
        elif self.at("interface"):
            kind = "interface"
        else:
            self.fail(f"expected a class or interface declaration, found {self.peek().text!r}")
        self.advance()
        name = self.expect_ident().text
        if self.at("<"):
            self.warn(f"generic type {name} is not supported; declaration skipped", line)
            self._skip_declaration()
            return None
        if mods["access"] in ("protected", "private"):
            self.fail(f"{mods['access']} is not a valid top-level access level", line)
        superclass: str | None = None
        interfaces: list[str] = []
        if self.at("extends"):
            self.advance()
            first = self._dotted_name()
            if kind == "class":
                superclass = first
                if self.at(","):
                    self.fail("a class can extend only one superclass")
            else:
                interfaces.append(first)
                while self.at(","):
                    self.advance()
                    interfaces.append(self._dotted_name())
        if self.at("implements"):
            if kind == "interface":
                self.fail("an interface cannot declare implements")
            self.advance()
            interfaces.append(self._dotted_name())
            while self.at(","):
                self.advance()
                interfaces.append(self._dotted_name())
        self.expect("{")
        members = self._parse_members(name, kind == "interface")
        self.expect("}")
        return RawTypeDecl(
            name=name,
            kind=kind,
            access_level="public" if mods["access"] == "public" else "package-private",
            superclass_name=superclass,
            interface_names=interfaces,
            members=members,
            line=line,
        )

    def _parse_modifiers(self, context: str) -> dict:
        access = ""
        flags: set[str] = set()
        while True:
            tok = self.peek()
            if tok.kind != "ident":
                break
            if tok.text in _ACCESS_MODIFIERS:
                if access:
                    self.fail(f"conflicting access modifiers in {context}", tok.line)
                access = tok.text
                self.advance()
            elif tok.text in _MEMBER_FLAGS:
                flags.add(tok.text)
                self.advance()
            else:
                break
        return {"access": access, "flags": flags}

    def _member_access(self, mods: dict) -> str:
        return mods["access"] if mods["access"] else "package-private"

    def _parse_members(self, class_name: str, is_interface: bool) -> list:
        members: list = []
        while True:
            if self.at("}") or self.at_kind("eof"):
                return members
            if self.at(";"):
                self.advance()
                continue
            if self.at("@"):
                self._skip_annotation()
                continue
            line = self.peek().line
            mods = self._parse_modifiers(context="member declaration")
            if self.at("class") or self.at("interface") or self.at("enum"):
                self.warn("nested type declarations are not supported; member skipped", line)
                self._skip_declaration()
                continue
            tok = self.peek()
            if tok.kind != "ident":
                self.fail(f"malformed member declaration, found {tok.text!r}", tok.line)
            if tok.text == class_name and self.peek(1).text == "(":
                self.advance()
                method = self._parse_method(
                    name=class_name,
                    return_type=None,
                    mods=mods,
                    is_constructor=True,
                    is_interface=is_interface,
                    line=line,
                )
                if method is not None:
                    members.append(method)
                continue
            declared_type = self._parse_type_use(for_member=True)
            if declared_type is None:
                continue  # generic member skipped, warning already recorded
            name_tok = self.peek()
            if name_tok.kind != "ident":
                self.fail(f"malformed member declaration, found {name_tok.text!r}", name_tok.line)
            name = self.advance().text
            if self.at("("):
                method = self._parse_method(
                    name=name,
                    return_type=declared_type,
                    mods=mods,
                    is_constructor=False,
                    is_interface=is_interface,
                    line=line,
                )
                if method is not None:
                    members.append(method)
            else:
                members.extend(self._parse_attribute_declarators(name, declared_type, mods, line))

    def _parse_type_use(self, for_member: bool = False) -> str | None:
        """A type name: dotted identifiers plus [] suffixes.

        Returns None (with a warning) when the type carries generics and
        for_member is set, after skipping the whole member.
        """
        line = self.peek().line
        name = self._dotted_name()
        if self.at("<"):
            if for_member:
                self.warn("generic member declarations are not supported; member skipped", line)
                self._skip_member_tail()
                return None
            raise _Unsupported(line, "generic type use")
        while self.at("[") and self.peek(1).text == "]":
            self.advance()
            self.advance()
            name += "[]"
        return name

    def _parse_attribute_declarators(
        self, first_name: str, declared_type: str, mods: dict, line: int
    ) -> list[RawAttribute]:
        attrs: list[RawAttribute] = []
        name = first_name
        while True:
            decl_type = declared_type
            while self.at("[") and self.peek(1).text == "]":
                self.advance()
                self.advance()
                decl_type += "[]"
            attrs.append(
                RawAttribute(
                    name=name,
                    declared_type=decl_type,
                    access_level=self._member_access(mods),
                    is_static="static" in mods["flags"],
                    line=line,
                )
            )
            if self.at("="):
                self.advance()
                try:
                    self._parse_expression([])  # initializer harvest is discarded
                except _Unsupported as exc:
                    self.warn(f"unsupported attribute initializer ({exc.what}); skipped", exc.line)
                    self._skip_to_declarator_boundary()
            if self.at(","):
                self.advance()
                name = self.expect_ident().text
                continue
            self.expect(";")
            return attrs

    def _parse_method(
        self,
        name: str,
        return_type: str | None,
        mods: dict,
        is_constructor: bool,
        is_interface: bool,
        line: int,
    ) -> RawMethod | None:
        self.expect("(")
        parameters: list[RawParameter] = []
        if not self.at(")"):
            while True:
                if self.at("..."):
                    self.warn(f"varargs are not supported; method {name} skipped", self.peek().line)
                    self._recover_from_member_header()
                    return None
                try:
                    ptype = self._parse_type_use()
                except _Unsupported:
                    self.warn(f"unsupported parameter type; method {name} skipped", self.peek().line)
                    self._recover_from_member_header()
                    return None
                if self.at("..."):
                    self.warn(f"varargs are not supported; method {name} skipped", self.peek().line)
                    self._recover_from_member_header()
                    return None
                pname = self.expect_ident().text
                while self.at("[") and self.peek(1).text == "]":
                    self.advance()
                    self.advance()
                    ptype += "[]"
                parameters.append(RawParameter(pname, ptype))
                if self.at(","):
                    self.advance()
                    continue
                break
        self.expect(")")
        throws: list[str] = []
        if self.at("throws"):
            self.advance()
            throws.append(self._dotted_name())
            while self.at(","):
                self.advance()
                throws.append(self._dotted_name())
        body_items: list[BodyItem] = []
        has_body = False
        if self.at(";"):
            self.advance()
        elif self.at("{"):
            has_body = True
            if is_interface:
                # harvest is defined for class bodies only; skip the block
                self.warn("interface method bodies are ignored", self.peek().line)
                self._skip_balanced_block()
                body_items = []
            else:
                self.advance()
                self._parse_block(body_items)
                self.expect("}")
        else:
            self.fail(f"expected a method body or ';' after {name}", self.peek().line)
        return RawMethod(
            name=name,
            return_type=return_type,
            access_level=self._member_access(mods),
            is_static="static" in mods["flags"],
            is_constructor=is_constructor,
            parameters=parameters,
            throws=throws,
            body_items=body_items,
            has_body=has_body,
            line=line,
        )

    # -- statements ------------------------------------------------------

    def _parse_block(self, items: list[BodyItem]):
        while not self.at("}") and not self.at_kind("eof"):
            try:
                self._parse_statement(items)
            except _Unsupported as exc:
                self.warn(f"unsupported construct ({exc.what}); statement skipped", exc.line)
                self._skip_statement_tokens()

    def _parse_statement(self, items: list[BodyItem]):
        tok = self.peek()
        if tok.kind == "punct":
            if tok.text == "{":
                self.advance()
                self._parse_block(items)
                self.expect("}")
                return
            if tok.text == ";":
                self.advance()
                return
            if tok.text == "@":
                raise _Unsupported(tok.line, "annotation")
        if tok.kind == "ident":
            if tok.text in _UNSUPPORTED_STATEMENT_KEYWORDS:
                raise _Unsupported(tok.line, f"'{tok.text}' statement")
            if tok.text == "if":
                self.advance()
                self.expect("(")
                self._parse_expression(items)
                self.expect(")")
                self._parse_statement(items)
                if self.at("else"):
                    self.advance()
                    self._parse_statement(items)
                return
            if tok.text == "while":
                self.advance()
                self.expect("(")
                self._parse_expression(items)
                self.expect(")")
                self._parse_statement(items)
                return
            if tok.text == "for":
                self._parse_for(items)
                return
            if tok.text == "switch":
                self._parse_switch(items)
                return
            if tok.text == "return":
                self.advance()
                if not self.at(";"):
                    self._parse_expression(items)
                self.expect(";")
                return
            if tok.text in ("break", "continue"):
                self.advance()
                self.expect(";")
                return
        if self._looks_like_declaration():
            self._parse_local_declaration(items)
            self.expect(";")
            return
        self._parse_expression(items)
        if not self.at(";"):
            raise _Unsupported(self.peek().line, f"token {self.peek().text!r} in expression")
        self.expect(";")

    def _parse_for(self, items: list[BodyItem]):
        line = self.peek().line
        self.advance()
        self.expect("(")
        if not self.at(";"):
            if self._looks_like_declaration():
                self._parse_local_declaration(items)
                if self.at(":"):
                    raise _Unsupported(line, "enhanced for loop")
            else:
                self._parse_expression(items)
        self.expect(";")
        if not self.at(";"):
            self._parse_expression(items)
        self.expect(";")
        if not self.at(")"):
            self._parse_expression(items)
            while self.at(","):
                self.advance()
                self._parse_expression(items)
        self.expect(")")
        self._parse_statement(items)

    def _parse_switch(self, items: list[BodyItem]):
        self.advance()
        self.expect("(")
        self._parse_expression(items)
        self.expect(")")
        self.expect("{")
        while not self.at("}"):
            if self.at_kind("eof"):
                self.fail("unexpected end of file inside switch")
            if self.at("case"):
                self.advance()
                while not self.at(":"):
                    if self.at_kind("eof"):
                        self.fail("unexpected end of file inside case label")
                    self.advance()
                self.expect(":")
                continue
            if self.at("default"):
                self.advance()
                self.expect(":")
                continue
            try:
                self._parse_statement(items)
            except _Unsupported as exc:
                self.warn(f"unsupported construct ({exc.what}); statement skipped", exc.line)
                self._skip_statement_tokens()
        self.expect("}")

    def _looks_like_declaration(self) -> bool:
        """Lookahead: IDENT(.IDENT)*([])* IDENT followed by = , ; or [."""
        i = self.pos
        toks = self.tokens

        def kindtext(j):
            t = toks[min(j, len(toks) - 1)]
            return t.kind, t.text

        k, _ = kindtext(i)
        if k != "ident":
            return False
        i += 1
        while True:
            k, t = kindtext(i)
            if k == "punct" and t == "." and kindtext(i + 1)[0] == "ident":
                i += 2
                continue
            break
        while kindtext(i) == ("punct", "[") and kindtext(i + 1) == ("punct", "]"):
            i += 2
        k, _ = kindtext(i)
        if k != "ident":
            return False
        i += 1
        while kindtext(i) == ("punct", "[") and kindtext(i + 1) == ("punct", "]"):
            i += 2
        k, t = kindtext(i)
        return (k, t) in (("punct", "="), ("punct", ","), ("punct", ";"), ("punct", ":"))

    def _parse_local_declaration(self, items: list[BodyItem]):
        declared_type = self._parse_type_use()
        while True:
            line = self.peek().line
            name = self.expect_ident().text
            decl_type = declared_type
            while self.at("[") and self.peek(1).text == "]":
                self.advance()
                self.advance()
                decl_type += "[]"
            items.append(BodyItem(KIND_LOCAL, name, decl_type, line))
            if self.at("="):
                self.advance()
                self._parse_expression(items)
            if self.at(","):
                self.advance()
                continue
            return

    # -- expressions -------------------------------------------------------

    def _parse_expression(self, items: list[BodyItem]) -> str:
        text = self._parse_binary(items, 0)
        tok = self.peek()
        if tok.text == "=" and tok.kind == "punct":
            self.advance()
            rhs = self._parse_expression(items)
            return f"{text} = {rhs}"
        if tok.kind == "punct" and tok.text in ("+=", "-=", "*=", "/=", "%=", "?", "->", "++", "--"):
            raise _Unsupported(tok.line, f"operator {tok.text!r}")
        return text

    _BINARY_LEVELS = (
        ("||",),
        ("&&",),
        ("==", "!="),
        ("<", ">", "<=", ">="),
        ("+", "-"),
        ("*", "/", "%"),
    )

    def _parse_binary(self, items: list[BodyItem], level: int) -> str:
        if level >= len(self._BINARY_LEVELS):
            return self._parse_unary(items)
        text = self._parse_binary(items, level + 1)
        ops = self._BINARY_LEVELS[level]
        while self.peek().kind == "punct" and self.peek().text in ops:
            op = self.advance().text
            rhs = self._parse_binary(items, level + 1)
            text = f"{text} {op} {rhs}"
        return text

    def _parse_unary(self, items: list[BodyItem]) -> str:
        tok = self.peek()
        if tok.kind == "punct" and tok.text in ("!", "-", "+"):
            self.advance()
            return tok.text + self._parse_unary(items)
        if tok.kind == "punct" and tok.text in ("++", "--", "~"):
            raise _Unsupported(tok.line, f"operator {tok.text!r}")
        return self._parse_postfix(items)

    def _parse_postfix(self, items: list[BodyItem]) -> str:
        text = self._parse_primary(items)
        pending: tuple[str, str, int] | None = None  # (field name, receiver text, line)
        while True:
            tok = self.peek()
            if tok.kind == "punct" and tok.text == "." and self.peek(1).kind == "ident":
                self.advance()
                name_tok = self.advance()
                if self.at("("):
                    # a call consumes everything before it as receiver path
                    pending = None
                    self._parse_arguments(items)
                    items.append(BodyItem(KIND_INVOCATION, name_tok.text, text, name_tok.line))
                    text = f"{text}.{name_tok.text}()"
                else:
                    pending = (name_tok.text, text, name_tok.line)
                    text = f"{text}.{name_tok.text}"
                continue
            if tok.kind == "punct" and tok.text == "[":
                self.advance()
                self._parse_expression(items)
                self.expect("]")
                text = f"{text}[]"
                continue
            break
        if pending is not None:
            items.append(BodyItem(KIND_ACCESS, pending[0], pending[1], pending[2]))
        return text

    def _parse_arguments(self, items: list[BodyItem]):
        self.expect("(")
        if not self.at(")"):
            while True:
                self._parse_expression(items)
                if self.at(","):
                    self.advance()
                    continue
                break
        self.expect(")")

    def _parse_primary(self, items: list[BodyItem]) -> str:
        tok = self.peek()
        if tok.kind in ("number", "string", "char"):
            self.advance()
            return tok.text
        if tok.kind == "punct" and tok.text == "(":
            self.advance()
            self._parse_expression(items)
            self.expect(")")
            return "(...)"
        if tok.kind == "ident":
            if tok.text == "new":
                return self._parse_creation(items)
            if tok.text == "this":
                if self.peek(1).text == "(":
                    raise _Unsupported(tok.line, "this(...) constructor delegation")
                self.advance()
                return "this"
            if tok.text == "super":
                if self.peek(1).text == "(":
                    raise _Unsupported(tok.line, "super(...) constructor call")
                self.advance()
                return "super"
            self.advance()
            if self.at("("):
                self._parse_arguments(items)
                items.append(BodyItem(KIND_INVOCATION, tok.text, "", tok.line))
                return f"{tok.text}()"
            return tok.text
        raise _Unsupported(tok.line, f"token {tok.text!r} in expression")

    def _parse_creation(self, items: list[BodyItem]) -> str:
        new_tok = self.advance()
        type_name = self._dotted_name()
        if self.at("<"):
            raise _Unsupported(new_tok.line, "generic object creation")
        if self.at("("):
            self._parse_arguments(items)
            if self.at("{"):
                raise _Unsupported(new_tok.line, "anonymous class body")
            simple = type_name.rsplit(".", 1)[-1]
            items.append(BodyItem(KIND_INVOCATION, simple, type_name, new_tok.line))
            return f"new {type_name}()"
        if self.at("["):
            while self.at("["):
                self.advance()
                if not self.at("]"):
                    self._parse_expression(items)
                self.expect("]")
            if self.at("{"):
                raise _Unsupported(new_tok.line, "array initializer")
            return f"new {type_name}[]"
        raise _Unsupported(new_tok.line, "malformed object creation")

    # -- recovery helpers ----------------------------------------------

    def _skip_to_semicolon(self):
        while not self.at_kind("eof"):
            tok = self.advance()
            if tok.kind == "punct" and tok.text == ";":
                return

    def _skip_annotation(self):
        line = self.expect("@").line
        self.warn("annotations are not supported; annotation skipped", line)
        self._dotted_name()
        if self.at("("):
            self._skip_balanced("(", ")")

    def _skip_balanced(self, open_text: str, close_text: str):
        depth = 0
        start = self.peek().line
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                self.fail(f"unexpected end of file (unbalanced {open_text!r})", start)
            self.advance()
            if tok.kind == "punct":
                if tok.text == open_text:
                    depth += 1
                elif tok.text == close_text:
                    depth -= 1
                    if depth == 0:
                        return

    def _skip_balanced_block(self):
        self._skip_balanced("{", "}")

    def _skip_declaration(self):
        """Consume a declaration we chose not to model: through its block or ';'."""
        while not self.at_kind("eof"):
            tok = self.peek()
            if tok.kind == "punct" and tok.text == "{":
                self._skip_balanced_block()
                return
            if tok.kind == "punct" and tok.text == ";":
                self.advance()
                return
            self.advance()
        self.fail("unexpected end of file inside skipped declaration")

    def _skip_member_tail(self):
        self._skip_declaration()

    def _recover_from_member_header(self):
        """Abandon a member after its header failed: eat params, throws, body."""
        depth = 1  # the already-consumed '('
        while depth > 0:
            tok = self.peek()
            if tok.kind == "eof":
                self.fail("unexpected end of file (unbalanced parentheses)")
            self.advance()
            if tok.kind == "punct":
                if tok.text == "(":
                    depth += 1
                elif tok.text == ")":
                    depth -= 1
        self._skip_declaration()

    def _skip_statement_tokens(self):
        """Recover after an unsupported statement: to ';' or past one block."""
        depth = 0
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                return
            if tok.kind == "punct":
                if tok.text == "}" and depth == 0:
                    return
                if tok.text == "{":
                    depth += 1
                elif tok.text == "}":
                    depth -= 1
                    if depth == 0:
                        self.advance()
                        return
                elif tok.text == ";" and depth == 0:
                    self.advance()
                    return
            self.advance()

    def _skip_to_declarator_boundary(self):
        """After a bad initializer: stop before ',' or ';' at depth zero."""
        depth = 0
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                return
            if tok.kind == "punct":
                if tok.text in ("(", "[", "{"):
                    depth += 1
                elif tok.text in (")", "]", "}"):
                    if depth == 0:
                        return
                    depth -= 1
                elif tok.text in (",", ";") and depth == 0:
                    return
            self.advance()
