"""Batch and interactive front end.

One command per line::

    eval E        value of E          canon E       canonical form of E
    outcome E     who wins            cmp E F       less/greater/equal/fuzzy
    stops E       left and right stop birthday E    birthday of the form
    grundy E      Grundy value        nim H1 H2 ... Nim position analysis
    moves E       options and winning first moves
    number E      dyadic value, if E is a number
    inverse E D   bracket 1/E after D rounds
    let NAME = E  bind a name         selftest [N]  random consistency checks
    help, quit

Exit status: 0 on success, 1 if any batch line failed, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .analysis import stops
from .canonical import canonical_form
from .errors import DomainError, GameError, ParseError
from .games import Arena, GameRef, OutcomeClass
from .impartial import grundy, nim_sum, nim_winning_move
from .numbers import game_to_number, inverse_bounds
from .parser import evaluate, parse, render, render_canonical
from .randgames import GameGenerator

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")
_RESERVED = {"up", "down"}


class CommandError(GameError):
    pass


@dataclass
class Result:
    command: str
    input: str
    result: str
    outcome: str | None = None
    value: str | None = None
    error: str | None = None

    def record(self) -> dict:
        rec = {"command": self.command, "input": self.input}
        if self.error is not None:
            rec["error"] = self.error
        else:
            rec["result"] = self.result
        if self.outcome is not None:
            rec["outcome"] = self.outcome
        if self.value is not None:
            rec["value"] = self.value
        return rec


def _split_two(text: str) -> tuple[str, str]:
    """Split ``"E F"`` at the leftmost top-level space where both halves parse."""
    depth = 0
    cuts = []
    for i, ch in enumerate(text):
        if ch in "{(":
            depth += 1
        elif ch in "})":
            depth -= 1
        elif ch.isspace() and depth == 0:
            cuts.append(i)
    for i in cuts:
        a, b = text[:i].strip(), text[i:].strip()
        if not a or not b:
            continue
        try:
            parse(a)
            parse(b)
        except ParseError:
            continue
        return a, b
    raise CommandError("expected two game expressions")


@dataclass
class Session:
    arena: Arena = field(default_factory=Arena)
    bindings: dict[str, GameRef] = field(default_factory=dict)
    seed: int = 0
    finished: bool = False

    def game(self, text: str) -> GameRef:
        if not text.strip():
            raise CommandError("missing game expression")
        return evaluate(self.arena, parse(text), self.bindings)

    def _value(self, g: GameRef) -> str | None:
        v = game_to_number(self.arena, g)
        return None if v is None else str(v)

    def run_command(self, line: str) -> Result | None:
        """Execute one command line; ``None`` for blank lines and comments."""
        line = line.strip()
        if not line or line.startswith("#"):
            return None
        command, _, arg = line.partition(" ")
        arg = arg.strip()
        handler = getattr(self, f"cmd_{command}", None)
        if handler is None:
            raise CommandError(f"unknown command {command!r} (try 'help')")
        result = handler(arg)
        result.command, result.input = command, arg
        return result

    # commands

    def cmd_eval(self, arg: str) -> Result:
        g = self.game(arg)
        return Result("", "", render(self.arena, g),
                      self.arena.outcome(g).value, self._value(g))

    def cmd_canon(self, arg: str) -> Result:
        g = self.game(arg)
        return Result("", "", render_canonical(self.arena, g),
                      self.arena.outcome(g).value, self._value(g))

    def cmd_outcome(self, arg: str) -> Result:
        o = self.arena.outcome(self.game(arg))
        return Result("", "", str(o), o.value)

    def cmd_cmp(self, arg: str) -> Result:
        a, b = _split_two(arg)
        return Result("", "", str(self.arena.compare(self.game(a), self.game(b))))

    def cmd_stops(self, arg: str) -> Result:
        s = stops(self.arena, self.game(arg))
        return Result("", "", f"left stop {s.left}, right stop {s.right}")

    def cmd_birthday(self, arg: str) -> Result:
        g = self.game(arg)
        b = self.arena.birthday(g)
        c = self.arena.birthday(canonical_form(self.arena, g))
        return Result("", "", f"{b} (canonical form {c})")

    def cmd_grundy(self, arg: str) -> Result:
        n = grundy(self.arena, self.game(arg))
        return Result("", "", str(n), value=None if n else "0")

    def cmd_nim(self, arg: str) -> Result:
        try:
            heaps = [int(h) for h in arg.split()]
        except ValueError:
            raise CommandError("nim expects whitespace-separated natural numbers") from None
        if any(h < 0 for h in heaps):
            raise CommandError("heap sizes must be natural numbers")
        move = nim_winning_move(heaps)
        if move is None:
            return Result("", "", "loss (second player wins)", OutcomeClass.ZERO.value)
        i, new = move
        text = (f"win (first player wins): reduce heap {i} from {heaps[i]} to {new}"
                f" (nim-sum {nim_sum(heaps)})")
        return Result("", "", text, OutcomeClass.FUZZY.value)

    def cmd_moves(self, arg: str) -> Result:
        arena = self.arena
        g = self.game(arg)
        lines = []
        for side, opts in (("L", arena.left(g)), ("R", arena.right(g))):
            for x in opts:
                o = arena.outcome(x)
                good = (o in (OutcomeClass.ZERO, OutcomeClass.POSITIVE) if side == "L"
                        else o in (OutcomeClass.ZERO, OutcomeClass.NEGATIVE))
                mark = "  winning" if good else ""
                lines.append(f"{side} {render(arena, x)}: {o.value}{mark}")
        if not lines:
            lines.append("no moves")
        return Result("", "", "\n".join(lines), arena.outcome(g).value)

    def cmd_number(self, arg: str) -> Result:
        v = self._value(self.game(arg))
        return Result("", "", v if v is not None else "not a number", value=v)

    def cmd_inverse(self, arg: str) -> Result:
        expr, _, depth = arg.rpartition(" ")
        if not depth.isdigit() or not expr.strip():
            raise CommandError("usage: inverse E DEPTH")
        lo, hi = inverse_bounds(self.arena, self.game(expr), int(depth))
        text = f"{lo} < 1/x < {hi}" if hi is not None else f"{lo} < 1/x"
        return Result("", "", text)

    def cmd_let(self, arg: str) -> Result:
        name, eq, expr = arg.partition("=")
        name = name.strip()
        if not eq or not _NAME.match(name) or name in _RESERVED:
            raise CommandError("usage: let NAME = E")
        g = self.game(expr)
        self.bindings[name] = g
        return Result("", "", f"{name} = {render(self.arena, g)}", value=self._value(g))

    def cmd_selftest(self, arg: str) -> Result:
        count = int(arg) if arg.isdigit() else 50
        arena = self.arena
        gen = GameGenerator(arena, self.seed)
        for g in gen.games(count):
            checks = (
                arena.equal(arena.subtract(g, g), arena.zero),
                arena.equal(canonical_form(arena, g), g),
                arena.equal(evaluate(arena, parse(render(arena, g))), g),
            )
            if not all(checks):
                raise DomainError(f"self-test failed on {render(arena, g)}")
        return Result("", "", f"selftest: {count} games ok (seed {self.seed})")

    def cmd_help(self, arg: str) -> Result:
        return Result("", "", __doc__.split("\n\n", 1)[1].rstrip())

    def cmd_quit(self, arg: str) -> Result:
        self.finished = True
        return Result("", "", "bye")

    cmd_exit = cmd_quit


def run_lines(session: Session, lines: Iterable[str], out: TextIO, err: TextIO,
              structured: bool = False) -> int:
    status = 0
    for lineno, line in enumerate(lines, 1):
        try:
            result = session.run_command(line)
        except (GameError, RecursionError) as exc:
            status = 1
            command, _, arg = line.strip().partition(" ")
            print(f"error: line {lineno}: {exc}", file=err)
            if structured:
                rec = Result(command, arg.strip(), "", error=str(exc)).record()
                print(json.dumps(rec), file=out)
            continue
        if result is None:
            continue
        if structured:
            print(json.dumps(result.record()), file=out)
        else:
            print(result.result, file=out)
        if session.finished:
            break
    return status


def _repl(session: Session, structured: bool) -> int:
    try:
        import readline  # noqa: F401
    except ImportError:
        pass
    while not session.finished:
        try:
            line = input("cgt> ")
        except EOFError:
            print()
            break
        run_lines(session, [line], sys.stdout, sys.stderr, structured)
    return 0


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="conway",
                                 description="Combinatorial game calculator.")
    ap.add_argument("--batch", metavar="FILE",
                    help="read commands from FILE ('-' for standard input)")
    ap.add_argument("-c", "--command", action="append", default=[],
                    help="run a single command (repeatable)")
    ap.add_argument("--format", choices=("text", "structured"), default="text")
    ap.add_argument("--seed", type=int, default=0, help="seed for selftest")
    args = ap.parse_args(argv)

    session = Session(seed=args.seed)
    structured = args.format == "structured"
    if args.command:
        return run_lines(session, args.command, sys.stdout, sys.stderr, structured)
    if args.batch:
        if args.batch == "-":
            return run_lines(session, sys.stdin, sys.stdout, sys.stderr, structured)
        try:
            with open(args.batch, encoding="utf-8") as fh:
                lines = fh.readlines()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return run_lines(session, lines, sys.stdout, sys.stderr, structured)
    if not sys.stdin.isatty():
        return run_lines(session, sys.stdin, sys.stdout, sys.stderr, structured)
    return _repl(session, structured)


if __name__ == "__main__":
    sys.exit(main())
