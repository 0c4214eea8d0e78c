"""
Session runner: executes parsed .lnk sessions command by command.
- later commands see the names bound by earlier ones
- per-command engine failures are logged and recorded, never raised
"""
import logging
import time
from dataclasses import dataclass
from typing import Any, Dict, Optional, Set

import config
from core.dsl import build_ring
from core.errors import BudgetExceededError, LinkageLabError
from core.ideals import saturate
from core.invariants import (
    INFINITE,
    embedding_dim,
    height,
    hilbert_samuel,
    krull_dim,
    length_of_quotient,
    min_gens,
    multiplicity_table,
    socle_type,
)
from core.linkage import is_self_linked, link, reduction_number
from core.rees import analytic_spread, assoc_graded_presentation, rees_presentation
from core.rings import Ideal, RingPresentation
from models.linkage import NotWithin
from models.reports import Conclusion, VerificationReport
from models.session import Command, CommandResult, IdealDecl, PolyList, Report, RingDecl, Session
from services import verifiers

log = logging.getLogger("linkage_lab.runner")


@dataclass
class RunOptions:
    n_max: int = config.DEFAULT_NMAX
    s_max: int = config.DEFAULT_SMAX
    j_depth: Optional[int] = config.DEFAULT_JDEPTH
    field: Optional[str] = None


class _Environment:
    def __init__(self, options: RunOptions):
        self.options = options
        self.rings: Dict[str, RingPresentation] = {}
        self.ideals: Dict[str, Ideal] = {}
        self.assertions: Dict[str, Set[str]] = {}
        self.ideal_ring: Dict[str, str] = {}
        self.link_origin: Dict[str, str] = {}     # linked ideal -> ideal it was linked from

    def ring(self, name: str) -> RingPresentation:
        return self.rings[name]

    def ideal(self, name: str) -> Ideal:
        return self.ideals[name]

    def polys(self, ring_name: str, arg):
        ring = self.rings[ring_name]
        items = arg.items if isinstance(arg, PolyList) else (arg,)
        return [ring.parse(text) for text in items]

    def asserted(self, *names: str) -> Set[str]:
        out: Set[str] = set()
        for n in names:
            out |= self.assertions.get(n, set())
        return out


def run(session: Session, options: Optional[RunOptions] = None, script: Optional[str] = None) -> Report:
    """Execute every command in order and collect a Report."""
    options = options or RunOptions()
    env = _Environment(options)
    report = Report(session=session, script=script)
    started = time.perf_counter()
    index = 0
    for statement in session.statements:
        if isinstance(statement, RingDecl):
            env.rings[statement.name] = build_ring(statement, options.field)
        elif isinstance(statement, IdealDecl):
            ring = env.rings[statement.ring]
            env.ideals[statement.name] = ring.maximal_ideal() if statement.maximal else ring.ideal(statement.gens)
            env.ideal_ring[statement.name] = statement.ring
        elif isinstance(statement, Command):
            index += 1
            report.results.append(_run_command(env, statement, index))
        else:
            env.assertions.setdefault(statement.target, set()).add(statement.kind)
    elapsed = time.perf_counter() - started
    log.info(f"session {script or '<text>'}: {index} commands in {elapsed:.2f}s, exit {report.exit_code}")
    return report


def _run_command(env: _Environment, command: Command, index: int) -> CommandResult:
    text = command.to_text()
    started = time.perf_counter()
    try:
        if command.kind == "check":
            verification = _check(env, command)
            result = _from_verification(index, text, command.expect_fail, verification)
        else:
            payload = _link(env, command) if command.kind == "link" else _compute(env, command)
            result = CommandResult(index, text, "ok", command.expect_fail, payload)
    except LinkageLabError as e:
        log.error(f"command {index} ({text}) failed: {e}")
        payload = {"error": str(e)}
        if isinstance(e, BudgetExceededError) and e.table is not None:
            payload["partial_table"] = e.table.to_dict()
        result = CommandResult(index, text, "error", command.expect_fail, payload)
    log.info(f"command {index}: {result.status} in {time.perf_counter() - started:.2f}s")
    return result


def _from_verification(index: int, text: str, expect_fail: bool,
                       verification: VerificationReport) -> CommandResult:
    conclusion = verification.conclusion
    if conclusion is Conclusion.ERROR:
        status = "error"
    elif expect_fail:
        status = "ok" if conclusion in (Conclusion.FAIL, Conclusion.INAPPLICABLE) else "failed"
    else:
        status = "ok" if conclusion is Conclusion.PASS else "failed"
    return CommandResult(index, text, status, expect_fail, {"report": verification.to_dict()})


def _link(env: _Environment, command: Command) -> Dict[str, Any]:
    j_name, p_name = command.args
    data = link(env.ideal(j_name), env.ideal(p_name), p_is_prime="prime" in env.asserted(p_name))
    env.ideals[command.result] = data.I
    env.ideal_ring[command.result] = command.ring
    env.link_origin[command.result] = p_name
    return {"name": command.result, **data.to_dict()}


def _check(env: _Environment, command: Command) -> VerificationReport:
    verb, args, opts = command.verb, command.args, env.options
    if verb == "link-theorem":
        ring_name, p_name, z = args
        return verifiers.verify_link_theorem(env.ring(ring_name), env.ideal(p_name),
                                             env.polys(ring_name, z),
                                             env.asserted(ring_name, p_name), opts.n_max)
    if verb == "multiplicity":
        ring_name, z = args
        ring = env.ring(ring_name)
        return verifiers.verify_multiplicity_theorem(ring, ring.maximal_ideal(), env.polys(ring_name, z),
                                                     env.asserted(ring_name), opts.s_max)
    if verb == "delta":
        ring_name, z = args
        return verifiers.delta_length(env.ring(ring_name), env.polys(ring_name, z))
    i_name, j_name = args
    assertions = env.asserted(command.ring, i_name)
    I, J = env.ideal(i_name), env.ideal(j_name)
    if verb == "canonical":
        origin = env.link_origin.get(i_name)
        p = env.ideal(origin) if origin and "prime" in env.asserted(origin) else None
        return verifiers.verify_canonical_form(I, J, p, assertions, j_depth=opts.j_depth)
    if verb == "bound":
        return verifiers.multiplicity_bound_check(env.ring(command.ring), I, J, assertions)
    return verifiers.gorenstein_gr_check(I, J, assertions)


def _compute(env: _Environment, command: Command) -> Dict[str, Any]:
    verb, args, opts = command.verb, command.args, env.options
    if verb == "embdim":
        return {"value": embedding_dim(env.ring(args[0]))}
    A = env.ideal(args[0])
    if verb == "reduction-number":
        r = reduction_number(A, env.ideal(args[1]), opts.n_max)
        return {"value": r.to_dict() if isinstance(r, NotWithin) else r}
    if verb == "rees":
        return {"value": rees_presentation(A).to_dict()}
    if verb == "multiplicity":
        table = multiplicity_table(A, env.ideal(args[1]), opts.s_max)
        return {"value": table.multiplicity, "table": table.to_dict()}
    if verb == "hilbert-samuel":
        return {"value": hilbert_samuel(A, env.ideal(args[1]), args[2]).to_dict()}
    if verb == "spread":
        return {"value": analytic_spread(A)}
    if verb == "gr":
        return {"value": assoc_graded_presentation(A).gb_text()}
    if verb == "min-gens":
        return {"value": [g.to_text() for g in min_gens(A)]}
    if verb == "socle":
        socle = socle_type(A)
        return {"value": {"socle": socle.socle_ideal.gb_text(), "type": socle.type}}
    if verb == "length":
        value = length_of_quotient(A)
        return {"value": "infinite" if value is INFINITE else value}
    if verb == "dim":
        return {"value": krull_dim(A)}
    if verb == "height":
        return {"value": height(A)}
    if verb == "self-linked":
        return {"value": is_self_linked(A, env.ideal(args[1]))}
    if verb == "saturate":
        (f,) = env.polys(command.ring, args[1])
        return {"value": saturate(A, f).gb_text()}
    raise LinkageLabError(f"unknown command {verb}")
