"""Command-line front end: ``boxball <subcommand> [options]``.

Inputs are read one item per line from ``--input`` (default stdin); blank
lines and ``#`` comments are skipped.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from boxball import scattering
from boxball.rigged import bounds
from boxball.state import enumerate_states, evolve
from boxball.textio import ParseError, format_rc, format_state, parse_rc, parse_state, render
from boxball.verify import SUITES, run_suite


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like a..b, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError("window needs a <= b")
    return lo, hi


def _non_negative(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxball", description=__doc__.splitlines()[0])
    parser.add_argument("--input", help="read items from this file instead of stdin")
    parser.add_argument("--output", help="write results to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="apply the update rule to states")
    p.add_argument("--steps", type=_non_negative, default=1)
    p.add_argument("--trace", action="store_true", help="print every intermediate state")

    sub.add_parser("scatter", help="print the rigged configuration of each state")
    sub.add_parser("inverse", help="print the state of each rigged configuration")

    p = sub.add_parser("solve", help="evolve through the scattering data")
    p.add_argument("--steps", type=int, default=1)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-L", dest="max_L", type=_non_negative, default=8)
    p.add_argument("--quiet", action="store_true", help="print FAIL lines and a summary only")

    p = sub.add_parser("enumerate", help="list the states in [0, L] with a given ball count")
    p.add_argument("--L", dest="L", type=_non_negative, required=True)
    p.add_argument("--balls", type=_non_negative, required=True)
    p.add_argument("--highest", action="store_true", help="highest-weight states only")

    p = sub.add_parser("render", help="draw states as rows of '.' and 'o'")
    p.add_argument("--window", type=_window, help="wall interval a..b")
    p.add_argument("--steps", type=_non_negative, default=0, help="also draw the next N states")
    return parser


def _items(stream) -> list[str]:
    out = []
    for line in stream:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _default_window(states) -> tuple[int, int]:
    lo = hi = None
    for st in states:
        b = bounds(scattering.direct_transform(st))
        if b.leftmost_tail is None:
            continue
        lo = b.leftmost_tail if lo is None else min(lo, b.leftmost_tail)
        hi = b.rightmost_front if hi is None else max(hi, b.rightmost_front)
    if lo is None:
        return 0, 10
    return lo - 2, hi + 2


def _run(args, lines: list[str]) -> tuple[list[str], bool]:
    out: list[str] = []
    ok = True
    cmd = args.command
    if cmd == "evolve":
        for line in lines:
            st = parse_state(line)
            for _ in range(args.steps):
                st = evolve(st)
                if args.trace:
                    out.append(format_state(st))
            if not args.trace or args.steps == 0:
                out.append(format_state(st))
    elif cmd == "scatter":
        out.extend(format_rc(scattering.direct_transform(parse_state(line))) for line in lines)
    elif cmd == "inverse":
        out.extend(format_state(scattering.inverse_transform(parse_rc(line))) for line in lines)
    elif cmd == "solve":
        out.extend(format_state(scattering.solve(parse_state(line), args.steps)) for line in lines)
    elif cmd == "verify":
        fails = total = 0
        for passed, line in run_suite(args.suite, args.max_L):
            total += 1
            if not passed:
                fails += 1
            if not args.quiet or not passed:
                out.append(line)
        if args.quiet:
            out.append(f"{args.suite}: {total - fails}/{total} passed")
        ok = fails == 0
    elif cmd == "enumerate":
        for st in enumerate_states(args.L, args.balls, args.highest):
            out.append(format_state(st))
    elif cmd == "render":
        states = [parse_state(line) for line in lines]
        trajectories = []
        for st in states:
            traj = [st]
            for _ in range(args.steps):
                traj.append(evolve(traj[-1]))
            trajectories.append(traj)
        lo, hi = args.window or _default_window(s for t in trajectories for s in t)
        for traj in trajectories:
            out.extend(render(s, lo, hi) for s in traj)
    return out, ok


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    needs_input = args.command not in ("verify", "enumerate")
    lines: list[str] = []
    if needs_input:
        if args.input:
            with open(args.input) as fh:
                lines = _items(fh)
        else:
            lines = _items(sys.stdin)
    try:
        out, ok = _run(args, lines)
    except ParseError as exc:
        print(f"boxball: {exc}", file=sys.stderr)
        return 2
    text = "\n".join(out) + ("\n" if out else "")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
