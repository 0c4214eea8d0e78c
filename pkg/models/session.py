"""
linkage-lab - Session records
Parsed statements of a .lnk script and the report produced by running it.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

import config


@dataclass(frozen=True)
class RingDecl:
    name: str
    field_name: str
    variables: Tuple[str, ...]
    quotient: Tuple[str, ...] = ()
    order: Optional[str] = None
    line: int = 0

    def to_text(self) -> str:
        text = f"ring {self.name} = {self.field_name}[{','.join(self.variables)}]"
        if self.quotient:
            text += " / (" + ", ".join(self.quotient) + ")"
        if self.order:
            text += f" order {self.order}"
        return text + ";"


@dataclass(frozen=True)
class IdealDecl:
    name: str
    ring: str
    gens: Tuple[str, ...] = ()
    maximal: bool = False
    line: int = 0

    def to_text(self) -> str:
        if self.maximal:
            return f"ideal {self.name} = maximal;"
        return f"ideal {self.name} = (" + ", ".join(self.gens) + ");"


@dataclass(frozen=True)
class Assertion:
    kind: str
    target: str
    line: int = 0

    def to_text(self) -> str:
        return f"assert {self.kind} {self.target};"


@dataclass(frozen=True)
class PolyList:
    """A parenthesized polynomial list argument, kept as text."""
    items: Tuple[str, ...]

    def to_text(self) -> str:
        return "(" + ", ".join(self.items) + ")"


Argument = Union[str, int, PolyList]


@dataclass(frozen=True)
class Command:
    kind: str                       # link | check | compute
    verb: str
    args: Tuple[Argument, ...] = ()
    result: Optional[str] = None    # name bound by `link`
    ring: Optional[str] = None      # ring the command runs in
    expect_fail: bool = False
    line: int = 0

    def to_text(self) -> str:
        prefix = "expect fail " if self.expect_fail else ""
        if self.kind == "link":
            return f"{prefix}link {self.result} = {self.args[0]} : {self.args[1]};"
        parts = [self.kind, self.verb]
        for a in self.args:
            parts.append(a.to_text() if isinstance(a, PolyList) else str(a))
        return prefix + " ".join(parts) + ";"


Statement = Union[RingDecl, IdealDecl, Assertion, Command]


@dataclass
class Session:
    statements: List[Statement] = field(default_factory=list)

    @property
    def rings(self) -> Dict[str, RingDecl]:
        return {s.name: s for s in self.statements if isinstance(s, RingDecl)}

    @property
    def ideals(self) -> Dict[str, IdealDecl]:
        return {s.name: s for s in self.statements if isinstance(s, IdealDecl)}

    @property
    def commands(self) -> List[Command]:
        return [s for s in self.statements if isinstance(s, Command)]

    @property
    def assertions(self) -> List[Assertion]:
        return [s for s in self.statements if isinstance(s, Assertion)]

    def to_text(self) -> str:
        return "\n".join(s.to_text() for s in self.statements) + ("\n" if self.statements else "")


@dataclass
class CommandResult:
    index: int
    command: str
    status: str                 # ok | failed | error
    expect_fail: bool = False
    payload: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "command": self.command,
            "status": self.status,
            "expect_fail": self.expect_fail,
            **self.payload,
        }


@dataclass
class Report:
    """Per-command results for one session; timing is logged, never reported."""
    session: Session
    results: List[CommandResult] = field(default_factory=list)
    script: Optional[str] = None

    @property
    def exit_code(self) -> int:
        if any(r.status == "error" for r in self.results):
            return 2
        if any(r.status != "ok" for r in self.results):
            return 1
        return 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": config.REPORT_SCHEMA,
            "engine_version": config.ENGINE_VERSION,
            "script": self.script,
            "session": [s.to_text() for s in self.session.statements],
            "results": [r.to_dict() for r in self.results],
            "exit_code": self.exit_code,
        }
