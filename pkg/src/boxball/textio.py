"""Line-oriented text forms for states, rigged configurations and polynomials.

state   ``1,3 4,6 9,10``      (vacuum: ``empty``)
rc      ``3:-2 1:1 1:4``      (longest rows first, riggings ascending)
poly    ``1 + q + 2*q^2``     (exponents ascending, zero: ``0``)
render  ``@origin=0 .oo.oo...o.``
"""

from __future__ import annotations

import re

from boxball.state import State, occupancy, state_from_blocks, from_occupancy


class ParseError(ValueError):
    pass


def format_state(state: State) -> str:
    if not state.blocks:
        return "empty"
    return " ".join(f"{a},{b}" for a, b in state.blocks)


def parse_state(text: str) -> State:
    text = text.strip()
    if text == "empty":
        return State()
    pairs = []
    for token in text.split():
        try:
            a, b = token.split(",")
            pairs.append((int(a), int(b)))
        except ValueError:
            raise ParseError(f"bad block token {token!r}") from None
    try:
        return state_from_blocks(pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_rc(rc) -> str:
    if not rc:
        return "empty"
    return " ".join(f"{i}:{j}" for i, js in reversed(rc.riggings) for j in js)


def parse_rc(text: str):
    from boxball.rigged import RiggedConfiguration

    text = text.strip()
    if text == "empty":
        return RiggedConfiguration()
    rows = []
    for token in text.split():
        m = re.fullmatch(r"(\d+):(-?\d+)", token)
        if not m or int(m.group(1)) < 1:
            raise ParseError(f"bad rigging token {token!r}")
        rows.append((int(m.group(1)), int(m.group(2))))
    return RiggedConfiguration.from_rows(rows)


def _term(e: int, c: int) -> str:
    if e == 0:
        return str(c)
    mono = "q" if e == 1 else f"q^{e}"
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    return f"{c}*{mono}"


def format_poly(p) -> str:
    terms = p.terms()
    if not terms:
        return "0"
    return " + ".join(_term(e, c) for e, c in terms)


_TERM = re.compile(r"(-?\d+)?(\*)?(?:(-)?q(?:\^(-?\d+))?)?")


def parse_poly(text: str):
    from boxball.qseries import QPolynomial

    text = text.strip()
    if text == "0":
        return QPolynomial()
    coeffs: dict[int, int] = {}
    for token in text.split(" + "):
        m = _TERM.fullmatch(token.strip())
        if not m or not token.strip():
            raise ParseError(f"bad polynomial term {token!r}")
        num, star, neg, exp = m.groups()
        has_q = "q" in token
        if star and (not has_q or num is None):
            raise ParseError(f"bad polynomial term {token!r}")
        if has_q:
            c = int(num) if num is not None else 1
            if neg:
                if num is not None:
                    raise ParseError(f"bad polynomial term {token!r}")
                c = -1
            e = int(exp) if exp is not None else 1
        else:
            c, e = int(num), 0
        coeffs[e] = coeffs.get(e, 0) + c
    return QPolynomial(coeffs)


def render(state: State, lo: int, hi: int) -> str:
    bits = occupancy(state, lo, hi)
    return f"@origin={lo} " + "".join("o" if b else "." for b in bits)


def parse_render(text: str) -> State:
    m = re.fullmatch(r"@origin=(-?\d+) ([.o]*)", text.strip())
    if not m:
        raise ParseError(f"bad rendering {text!r}")
    return from_occupancy([ch == "o" for ch in m.group(2)], int(m.group(1)))
