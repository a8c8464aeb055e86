"""Exhaustive verification suites.

Each suite yields ``(ok, line)`` with lines of the form
``OK|FAIL <identity-id> L=<L> lambda=<shape>``.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterator

from boxball import kkr, qseries, rigged, scattering
from boxball.rigged import Partition, partitions
from boxball.state import energy_ctm, enumerate_states, evolve

Check = tuple[bool, str]


def _line(ok: bool, ident: str, L: int, lam=None, extra: str = "") -> Check:
    text = f"{'OK' if ok else 'FAIL'} {ident} L={L}"
    if lam is not None:
        text += " lambda=(" + ",".join(map(str, lam)) + ")"
    if extra:
        text += " " + extra
    return ok, text


def _shapes(L: int) -> Iterator[Partition]:
    for n in range(L + 1):
        yield from partitions(n)


def _states_by_content(L: int):
    groups = defaultdict(list)
    for s in range(L + 1):
        for st in enumerate_states(L, s):
            groups[scattering.soliton_content(st)].append(st)
    return groups


def roundtrip(max_L: int) -> Iterator[Check]:
    for L in range(1, max_L + 1):
        groups = _states_by_content(L)
        for lam in _shapes(L):
            rcs = rigged.enumerate_rcs(L, lam)
            ok_a = all(scattering.direct_transform(scattering.inverse_transform(rc)) == rc for rc in rcs)
            states = groups.get(lam, [])
            ok_b = all(scattering.inverse_transform(scattering.direct_transform(p)) == p for p in states)
            # both sets are in bijection, so their sizes must agree too
            yield _line(ok_a and len(rcs) == len(states), "roundtrip-rc", L, lam)
            yield _line(ok_b, "roundtrip-state", L, lam)


def linearize(max_L: int) -> Iterator[Check]:
    for L in range(1, max_L + 1):
        for lam, states in sorted(_states_by_content(L).items()):
            ok = all(
                scattering.direct_transform(evolve(p))
                == rigged.evolve_riggings(scattering.direct_transform(p), 1)
                for p in states
            )
            ok_content = all(scattering.soliton_content(evolve(p)) == lam for p in states)
            ok_companion = True
            for p in states:
                rc = scattering.direct_transform(p)
                comp = scattering.companion_state(rc)
                ok_companion &= evolve(comp) == p and comp.fronts == p.tails
            yield _line(ok and ok_content, "linearize", L, lam)
            yield _line(ok_companion, "companion", L, lam)


def energy(max_L: int) -> Iterator[Check]:
    for L in range(1, max_L + 1):
        for lam in _shapes(L):
            ok = all(
                rigged.energy_rc(rc) == energy_ctm(scattering.inverse_transform(rc))
                for rc in rigged.enumerate_rcs(L, lam)
            )
            yield _line(ok, "energy", L, lam)


def fermionic(max_L: int) -> Iterator[Check]:
    for L in range(1, max_L + 1):
        groups = _states_by_content(L)
        for lam in _shapes(L):
            states = groups.get(lam, [])
            z = qseries.energy_generating_function(states)
            zp = qseries.energy_generating_function(
                p for p in states if _hw(p)
            )
            yield _line(z == qseries.fermionic_term(L, lam, False), "fermionic-Z", L, lam)
            yield _line(zp == qseries.fermionic_term(L, lam, True), "fermionic-Z+", L, lam)


def _hw(p) -> bool:
    from boxball.state import is_highest_weight

    return is_highest_weight(p)


def recursion(max_L: int) -> Iterator[Check]:
    for L in range(1, max_L + 1):
        for s in range(L + 1):
            for hw, tag in ((False, "Z"), (True, "Z+")):
                if hw and 2 * s > L:
                    continue
                brute = qseries.total_partition_function(L, s, hw, "brute")
                closed = qseries.total_partition_function(L, s, hw, "closed")
                rec = qseries.total_partition_function(L, s, hw, "recursion")
                yield _line(brute == closed, f"closed-{tag}", L, extra=f"s={s}")
                yield _line(brute == rec, f"recursion-{tag}", L, extra=f"s={s}")


def bethe(max_L: int) -> Iterator[Check]:
    for L in range(1, max_L + 1):
        for s in range(L + 1):
            lhs = qseries.qbinomial(L, s)
            rhs = qseries.bethe_sum(L, s, False).shift(-s)
            yield _line(lhs == rhs, "bethe-all", L, extra=f"s={s}")
            if 2 * s <= L:
                lhs = qseries.qbinomial(L, s) - qseries.qbinomial(L, s - 1)
                yield _line(lhs == qseries.bethe_sum(L, s, True), "bethe-hw", L, extra=f"s={s}")


def kkr_suite(max_L: int) -> Iterator[Check]:
    for L in range(1, max_L + 1):
        for lam in _shapes(L):
            ok_eq = ok_front = True
            for rc in rigged.enumerate_rcs(L, lam):
                ok_eq &= kkr.kkr_inverse(rc) == scattering.inverse_transform(rc)
                cur = rc
                while cur:
                    front = rigged.bounds(cur).rightmost_front
                    nxt, wall = kkr.remove_box(cur)
                    ok_front &= wall == front == scattering.inverse_transform(cur).fronts[-1]
                    cur = nxt
            yield _line(ok_eq, "kkr-equivalence", L, lam)
            yield _line(ok_front, "kkr-front", L, lam)


def kostka(max_L: int) -> Iterator[Check]:
    for L in range(1, max_L + 1):
        for s in range(L // 2 + 1):
            report = qseries.kostka_identity_check(L, s)
            for line in report.lines():
                yield line.startswith("OK"), line


def borderstrip(max_L: int) -> Iterator[Check]:
    for L in range(1, max_L + 1):
        for s in range(L + 1):
            states = enumerate_states(L, s)
            images = [qseries.state_to_restricted_partition(p, L) for p in states]
            target = set(qseries.restricted_partitions(s, L - s))
            ok_bij = len(set(images)) == len(images) and set(images) == target
            ok_energy = all(energy_ctm(p) == lam.weight for p, lam in zip(states, images))
            ok_inv = all(
                qseries.partition_to_state(lam, L, s) == p for p, lam in zip(states, images)
            )
            weights = qseries.QPolynomial()
            for lam in images:
                weights = weights + qseries.QPolynomial.monomial(lam.weight)
            ok_sum = weights == qseries.qbinomial(L, s)
            yield _line(ok_bij and ok_inv, "borderstrip-bijection", L, extra=f"s={s}")
            yield _line(ok_energy and ok_sum, "borderstrip-weight", L, extra=f"s={s}")


SUITES: dict[str, Callable[[int], Iterator[Check]]] = {
    "roundtrip": roundtrip,
    "linearize": linearize,
    "energy": energy,
    "fermionic": fermionic,
    "recursion": recursion,
    "bethe": bethe,
    "kkr": kkr_suite,
    "kostka": kostka,
    "borderstrip": borderstrip,
}


def run_suite(name: str, max_L: int) -> list[Check]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return list(suite(max_L))
