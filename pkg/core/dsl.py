"""
linkage-lab - Script language
Parses .lnk sessions: ring and ideal declarations, assertions and commands,
one statement per `;`, `#` line comments.
"""
import keyword
import logging
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import config
from core.errors import LinkageLabError, SessionError, UndeclaredNameError
from core.fields import field_from_name
from core.monomials import order_from_name
from core.polynomial import IDENTIFIER, POLY_TEXT
from core.rings import RingPresentation
from models.session import Assertion, Command, IdealDecl, PolyList, RingDecl, Session

log = logging.getLogger("linkage_lab.dsl")

ASSERTION_KINDS = ("prime", "cm", "licci", "generically-gorenstein", "gorenstein", "l1", "l2")

# verb -> argument kinds; ring-typed commands run in the named ring
CHECK_VERBS: Dict[str, Tuple[str, ...]] = {
    "link-theorem": ("ring", "ideal", "polys"),
    "canonical": ("ideal", "ideal"),
    "multiplicity": ("ring", "polys"),
    "bound": ("ideal", "ideal"),
    "delta": ("ring", "polys"),
    "gorenstein-gr": ("ideal", "ideal"),
}
COMPUTE_VERBS: Dict[str, Tuple[str, ...]] = {
    "reduction-number": ("ideal", "ideal"),
    "rees": ("ideal",),
    "multiplicity": ("ideal", "ideal"),
    "spread": ("ideal",),
    "gr": ("ideal",),
    "min-gens": ("ideal",),
    "socle": ("ideal",),
    "length": ("ideal",),
    "dim": ("ideal",),
    "height": ("ideal",),
    "embdim": ("ring",),
    "hilbert-samuel": ("ideal", "ideal", "int"),
    "self-linked": ("ideal", "ideal"),
    "saturate": ("ideal", "poly"),
}

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:-[A-Za-z][A-Za-z0-9_]*)*")
_NUMBER = re.compile(r"\d+")


@dataclass(frozen=True)
class Token:
    kind: str       # name | number | group | bracket | op
    text: str
    line: int
    column: int


def _position(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _strip_comments(text: str) -> str:
    """Blank out `#` comments, keeping offsets intact."""
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group(0)), text)


def _split_items(body: str) -> Tuple[str, ...]:
    items = [s.strip() for s in body.split(",")]
    if items == [""]:
        return ()
    return tuple(items)


def _inner_position(tok: Token, k: int) -> Tuple[int, int]:
    """Line and column of character k of a raw token; groups start after their bracket."""
    shift = 1 if tok.kind in ("group", "bracket") else 0
    before = tok.text[:k]
    newlines = before.count("\n")
    if newlines == 0:
        return tok.line, tok.column + shift + k
    return tok.line + newlines, k - before.rfind("\n")


def _scan_polys(tok: Token, variables: Sequence[str]):
    """Positioned grammar check of the polynomial text inside a token."""
    text = tok.text
    for k, ch in enumerate(text):
        if ch == "," and tok.kind == "group":
            continue
        if not POLY_TEXT.fullmatch(ch) or text.startswith("**", k):
            raise SessionError(f"unexpected {ch!r} in polynomial", *_inner_position(tok, k))
    for m in IDENTIFIER.finditer(text):
        if m.group(0) not in variables:
            raise UndeclaredNameError(m.group(0), *_inner_position(tok, m.start()))


def _ring_variables(tok: Token) -> Tuple[str, ...]:
    names, offset = [], 0
    for raw in tok.text.split(","):
        name = raw.strip()
        at = offset + (raw.index(name) if name else 0)
        if not IDENTIFIER.fullmatch(name) or keyword.iskeyword(name):
            raise SessionError(f"bad variable name {name!r}", *_inner_position(tok, at))
        if name in names:
            raise SessionError(f"duplicate variable {name!r}", *_inner_position(tok, at))
        names.append(name)
        offset += len(raw) + 1
    return tuple(names)


def tokenize(text: str) -> List[List[Token]]:
    """Statements as token lists; parenthesized and bracketed groups stay raw."""
    source = _strip_comments(text)
    statements: List[List[Token]] = []
    current: List[Token] = []
    i, n = 0, len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        line, column = _position(source, i)
        if ch == ";":
            if current:
                statements.append(current)
            current = []
            i += 1
        elif ch in "([":
            close = ")" if ch == "(" else "]"
            depth, j = 0, i
            while j < n:
                if source[j] == ch:
                    depth += 1
                elif source[j] == close:
                    depth -= 1
                    if depth == 0:
                        break
                elif source[j] == ";":
                    break
                j += 1
            if j >= n or source[j] != close:
                raise SessionError(f"unbalanced '{ch}'", line, column)
            kind = "group" if ch == "(" else "bracket"
            current.append(Token(kind, source[i + 1:j], line, column))
            i = j + 1
        elif ch in "=:/":
            current.append(Token("op", ch, line, column))
            i += 1
        else:
            m = _NAME.match(source, i) or _NUMBER.match(source, i)
            if not m:
                raise SessionError(f"unexpected character {ch!r}", line, column)
            kind = "name" if m.re is _NAME else "number"
            current.append(Token(kind, m.group(0), line, column))
            i = m.end()
    if current:
        last = current[-1]
        raise SessionError("missing ';'", last.line, last.column)
    return statements


def build_ring(decl: RingDecl, field_override: Optional[str] = None) -> RingPresentation:
    field = field_from_name(field_override or decl.field_name or config.DEFAULT_FIELD)
    order = order_from_name(decl.order or config.DEFAULT_ORDER)
    return RingPresentation(decl.variables, field, order, decl.quotient, name=decl.name)


class _Parser:
    def __init__(self):
        self.session = Session()
        self.rings: Dict[str, RingPresentation] = {}
        self.ideal_ring: Dict[str, str] = {}
        self.current_ring: Optional[str] = None

    # ── token helpers ────────────────────────────────────
    @staticmethod
    def _expect(tokens: List[Token], pos: int, kind: str, text: Optional[str] = None) -> Token:
        if pos >= len(tokens):
            last = tokens[-1]
            raise SessionError(f"unexpected end of statement, expected {text or kind}", last.line,
                               last.column + len(last.text))
        tok = tokens[pos]
        if tok.kind != kind or (text is not None and tok.text != text):
            raise SessionError(f"expected {text or kind}, found {tok.text!r}", tok.line, tok.column)
        return tok

    @staticmethod
    def _end(tokens: List[Token], pos: int):
        if pos < len(tokens):
            tok = tokens[pos]
            raise SessionError(f"unexpected {tok.text!r}", tok.line, tok.column)

    def _ring_of(self, tok: Token) -> str:
        if tok.text not in self.rings:
            raise UndeclaredNameError(tok.text, tok.line, tok.column)
        return tok.text

    def _ideal_of(self, tok: Token) -> str:
        if tok.text not in self.ideal_ring:
            raise UndeclaredNameError(tok.text, tok.line, tok.column)
        return self.ideal_ring[tok.text]

    def _check_polys(self, ring_name: str, items, tok: Token):
        ring = self.rings[ring_name]
        _scan_polys(tok, ring.variables)
        for item in items:
            try:
                ring.parse(item)
            except LinkageLabError as e:
                raise SessionError(str(e), tok.line, tok.column) from None

    # ── statements ───────────────────────────────────────
    def statement(self, tokens: List[Token]):
        head = tokens[0]
        if head.kind != "name":
            raise SessionError(f"unexpected {head.text!r}", head.line, head.column)
        if head.text == "ring":
            return self.ring_decl(tokens)
        if head.text == "ideal":
            return self.ideal_decl(tokens)
        if head.text == "assert":
            return self.assertion(tokens)
        expect_fail = False
        if head.text == "expect":
            self._expect(tokens, 1, "name", "fail")
            tokens = tokens[2:]
            if not tokens:
                raise SessionError("expected a command after 'expect fail'", head.line, head.column)
            expect_fail = True
            head = tokens[0]
        if head.text == "link":
            return self.link(tokens, expect_fail)
        if head.text in ("check", "compute"):
            return self.command(tokens, expect_fail)
        raise SessionError(f"unknown statement {head.text!r}", head.line, head.column)

    def ring_decl(self, tokens: List[Token]) -> RingDecl:
        name = self._expect(tokens, 1, "name")
        self._expect(tokens, 2, "op", "=")
        field_tok = self._expect(tokens, 3, "name")
        pos = 4
        field_name = field_tok.text
        if pos < len(tokens) and tokens[pos].kind == "group":
            field_name = f"{field_name}({tokens[pos].text.strip()})"
            pos += 1
        variables = _ring_variables(self._expect(tokens, pos, "bracket"))
        pos += 1
        quotient: Tuple[str, ...] = ()
        if pos < len(tokens) and tokens[pos].text == "/":
            group = self._expect(tokens, pos + 1, "group")
            _scan_polys(group, variables)
            quotient = _split_items(group.text)
            pos += 2
        order = None
        if pos < len(tokens) and tokens[pos].text == "order":
            order = self._expect(tokens, pos + 1, "name").text
            pos += 2
        self._end(tokens, pos)
        decl = RingDecl(name.text, field_name, variables, quotient, order, line=name.line)
        try:
            self.rings[name.text] = build_ring(decl)
        except LinkageLabError as e:
            raise SessionError(str(e), field_tok.line, field_tok.column) from None
        self.current_ring = name.text
        return decl

    def ideal_decl(self, tokens: List[Token]) -> IdealDecl:
        name = self._expect(tokens, 1, "name")
        self._expect(tokens, 2, "op", "=")
        if self.current_ring is None:
            raise SessionError("ideal declared before any ring", name.line, name.column)
        if len(tokens) > 3 and tokens[3].kind == "name" and tokens[3].text == "maximal":
            self._end(tokens, 4)
            decl = IdealDecl(name.text, self.current_ring, maximal=True, line=name.line)
        else:
            group = self._expect(tokens, 3, "group")
            self._end(tokens, 4)
            gens = _split_items(group.text)
            self._check_polys(self.current_ring, gens, group)
            decl = IdealDecl(name.text, self.current_ring, gens, line=name.line)
        self.ideal_ring[name.text] = self.current_ring
        return decl

    def assertion(self, tokens: List[Token]) -> Assertion:
        kind = self._expect(tokens, 1, "name")
        if kind.text not in ASSERTION_KINDS:
            raise SessionError(f"unknown assertion {kind.text!r}", kind.line, kind.column)
        target = self._expect(tokens, 2, "name")
        self._end(tokens, 3)
        if target.text not in self.ideal_ring and target.text not in self.rings:
            raise UndeclaredNameError(target.text, target.line, target.column)
        return Assertion(kind.text, target.text, line=kind.line)

    def link(self, tokens: List[Token], expect_fail: bool) -> Command:
        result = self._expect(tokens, 1, "name")
        self._expect(tokens, 2, "op", "=")
        j_tok = self._expect(tokens, 3, "name")
        self._expect(tokens, 4, "op", ":")
        p_tok = self._expect(tokens, 5, "name")
        self._end(tokens, 6)
        ring = self._ideal_of(j_tok)
        if self._ideal_of(p_tok) != ring:
            raise SessionError("ideal/ring mismatch", p_tok.line, p_tok.column)
        self.ideal_ring[result.text] = ring
        return Command("link", "link", (j_tok.text, p_tok.text), result=result.text, ring=ring,
                       expect_fail=expect_fail, line=tokens[0].line)

    def command(self, tokens: List[Token], expect_fail: bool) -> Command:
        kind = tokens[0].text
        verb_tok = self._expect(tokens, 1, "name")
        table = CHECK_VERBS if kind == "check" else COMPUTE_VERBS
        if verb_tok.text not in table:
            raise SessionError(f"unknown {kind} command {verb_tok.text!r}", verb_tok.line, verb_tok.column)
        signature = table[verb_tok.text]
        args = []
        ring: Optional[str] = None
        pending_polys = []
        for offset, arg_kind in enumerate(signature):
            pos = 2 + offset
            if arg_kind == "polys":
                tok = self._expect(tokens, pos, "group")
            elif arg_kind == "int":
                tok = self._expect(tokens, pos, "number")
            elif arg_kind == "poly" and pos < len(tokens) and tokens[pos].kind == "group":
                tok = tokens[pos]
            else:
                tok = self._expect(tokens, pos, "name")
            if arg_kind == "ring":
                ring = self._ring_of(tok)
                args.append(tok.text)
            elif arg_kind == "ideal":
                owner = self._ideal_of(tok)
                if ring is not None and owner != ring:
                    raise SessionError("ideal/ring mismatch", tok.line, tok.column)
                ring = owner
                args.append(tok.text)
            elif arg_kind == "int":
                args.append(int(tok.text))
            elif arg_kind == "polys":
                items = _split_items(tok.text)
                pending_polys.append((items, tok))
                args.append(PolyList(items))
            elif arg_kind == "poly":
                text = tok.text
                pending_polys.append(((text,), tok))
                args.append(PolyList((text,)) if tok.kind == "group" else text)
        self._end(tokens, 2 + len(signature))
        for items, tok in pending_polys:
            self._check_polys(ring, items, tok)
        return Command(kind, verb_tok.text, tuple(args), ring=ring, expect_fail=expect_fail,
                       line=tokens[0].line)


def parse_session(text: str) -> Session:
    """Parse a whole script; errors carry line and column."""
    parser = _Parser()
    for tokens in tokenize(text):
        parser.session.statements.append(parser.statement(tokens))
    log.debug(f"parsed session: {len(parser.session.statements)} statements")
    return parser.session
