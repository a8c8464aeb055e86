"""Exact Laurent polynomials in q and the partition-function identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Literal, Mapping

from boxball.rigged import Partition, partitions, phi, vacancy
from boxball.state import State, energy_ctm, enumerate_states, is_highest_weight, state_from_boxes


class QPolynomial:
    """Laurent polynomial with integer coefficients; zero terms are never stored."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> "QPolynomial":
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int | None:
        return max(self._coeffs, default=None)

    def low_degree(self) -> int | None:
        return min(self._coeffs, default=None)

    def __call__(self, q):
        return sum(c * q**e for e, c in self._coeffs.items())

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q**k."""
        return QPolynomial({e + k: c for e, c in self._coeffs.items()})

    @staticmethod
    def _coerce(other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._coeffs) == 1:
                (e, c), = self._coeffs.items()
                if c in (1, -1):
                    return QPolynomial({e * n: c ** (-n)})
            raise ValueError("only monomials with unit coefficient can be inverted")
        out = QPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        return f"QPolynomial({str(self)!r})"

    def __str__(self):
        from boxball.textio import format_poly

        return format_poly(self)


ZERO = QPolynomial()
ONE = QPolynomial.constant(1)
q = QPolynomial.monomial(1)


@lru_cache(maxsize=None)
def qbinomial(n: int, m: int) -> QPolynomial:
    """Gaussian binomial via [n, m] = [n-1, m] + q^(n-m) [n-1, m-1]."""
    if m < 0 or n < 0 or m > n:
        return ZERO
    if m == 0 or m == n:
        return ONE
    return qbinomial(n - 1, m) + qbinomial(n - 1, m - 1).shift(n - m)


def qsum(polys: Iterable[QPolynomial]) -> QPolynomial:
    total = ZERO
    for p in polys:
        total = total + p
    return total


def energy_generating_function(states: Iterable[State]) -> QPolynomial:
    out: dict[int, int] = {}
    for st in states:
        e = energy_ctm(st)
        out[e] = out.get(e, 0) + 1
    return QPolynomial(out)


# -- partition functions with fixed soliton content ---------------------------

Method = Literal["brute", "fermionic"]


def states_with_content(L: int, shape, highest_only: bool = False) -> list[State]:
    from boxball.scattering import soliton_content

    shape = Partition(shape)
    return [
        st
        for st in enumerate_states(L, shape.weight, highest_only)
        if soliton_content(st) == shape
    ]


def fermionic_term(L: int, shape, highest_only: bool) -> QPolynomial:
    """q^{phi} prod [p_i + m_i, m_i] (highest weight) or the all-states variant."""
    shape = Partition(shape)
    mult = shape.multiplicities
    out = ONE
    for i, m in mult.items():
        p = vacancy(mult, i, L)
        out = out * qbinomial(p + m + (0 if highest_only else i), m)
    exponent = phi(mult) - (0 if highest_only else shape.weight)
    return out.shift(exponent)


def partition_function(
    L: int, shape, highest_only: bool = False, method: Method = "brute"
) -> QPolynomial:
    if method == "brute":
        return energy_generating_function(states_with_content(L, shape, highest_only))
    if method == "fermionic":
        return fermionic_term(L, shape, highest_only)
    raise ValueError(f"unknown method {method!r}")


# -- partition functions with fixed ball number -------------------------------


@lru_cache(maxsize=None)
def _z_recursion(L: int, s: int, highest_only: bool) -> QPolynomial:
    if s < 0 or s > L:
        return ZERO
    if s == 0:
        return ONE
    if highest_only:
        if 2 * s > L:
            return ZERO
    elif s == L:
        return ONE
    out = _z_recursion(L - 1, s, highest_only)
    for k in range(1, s + 1):
        out = out + _z_recursion(L - k - 1, s - k, highest_only).shift(L - k)
    return out


def total_partition_function(
    L: int, s: int, highest_only: bool = False, method: str = "brute"
) -> QPolynomial:
    """Z(L, s) or Z+(L, s) by enumeration, closed form, or recursion."""
    if method == "brute":
        if s < 0 or s > L:
            return ZERO
        return energy_generating_function(enumerate_states(L, s, highest_only))
    if method == "closed":
        if highest_only:
            return qbinomial(L, s) - qbinomial(L, s - 1)
        return qbinomial(L, s)
    if method == "recursion":
        return _z_recursion(L, s, highest_only)
    raise ValueError(f"unknown method {method!r}")


def bethe_sum(L: int, s: int, highest_only: bool) -> QPolynomial:
    """Sum over shapes of s of the fermionic products (without the q^-s factor)."""
    total = ZERO
    for lam in partitions(s):
        mult = lam.multiplicities
        prod = ONE
        for i, m in mult.items():
            prod = prod * qbinomial(vacancy(mult, i, L) + m + (0 if highest_only else i), m)
        total = total + prod.shift(phi(mult))
    return total


# -- Kostka identity ----------------------------------------------------------


def highest_weight_paths(L: int, s: int) -> Iterator[tuple[int, ...]]:
    """0/1 words with s ones whose prefixes of length i carry at most i // 2 ones."""

    def grow(prefix: list[int], ones: int):
        i = len(prefix)
        if i == L:
            if ones == s:
                yield tuple(prefix)
            return
        if s - ones > L - i:
            return
        prefix.append(0)
        yield from grow(prefix, ones)
        prefix.pop()
        if ones + 1 <= (i + 1) // 2 and ones < s:
            prefix.append(1)
            yield from grow(prefix, ones + 1)
            prefix.pop()

    yield from grow([], 0)


def path_to_state(path) -> State:
    return state_from_boxes(j for j, bit in enumerate(path, start=1) if bit)


def _rises(path) -> list[int]:
    return [j for j in range(1, len(path)) if path[j - 1] < path[j]]


@dataclass
class KostkaReport:
    L: int
    s: int
    fermionic: QPolynomial
    configuration_sum: QPolynomial
    refined: dict[Partition, tuple[QPolynomial, QPolynomial]] = field(default_factory=dict)
    problems: list[str] = field(default_factory=list)

    @property
    def global_ok(self) -> bool:
        return self.fermionic == self.configuration_sum

    @property
    def ok(self) -> bool:
        return self.global_ok and not self.problems and all(
            a == b for a, b in self.refined.values()
        )

    def lines(self) -> list[str]:
        out = [f"{'OK' if self.global_ok else 'FAIL'} kostka L={self.L} s={self.s}"]
        for lam, (a, b) in self.refined.items():
            tag = "OK" if a == b else "FAIL"
            out.append(f"{tag} kostka-refined L={self.L} lambda={_lam(lam)}")
        out.extend(f"FAIL {p}" for p in self.problems)
        return out


def _lam(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def kostka_identity_check(L: int, s: int) -> KostkaReport:
    """Compare both sides of the Kostka identity for mu = (L-s, s), nu = (1^L).

    Paths are split by the soliton content of the associated state; each
    part is compared with its own fermionic term.
    """
    if not 0 <= 2 * s <= L:
        raise ValueError("need 0 <= s <= L/2")
    from boxball.scattering import soliton_content

    base = L * (L - 1) // 2
    fermionic = ZERO
    for lam in partitions(s):
        mult = lam.multiplicities
        term = ONE
        for i, m in mult.items():
            term = term * qbinomial(vacancy(mult, i, L) + m, m)
        fermionic = fermionic + term.shift(phi(mult) - L * sum(mult.values()) + base)

    config: dict[int, int] = {}
    by_content: dict[Partition, dict[int, int]] = {}
    problems = []
    for path in highest_weight_paths(L, s):
        rises = _rises(path)
        e = sum(L - j for j in range(1, L) if j not in rises)
        config[e] = config.get(e, 0) + 1
        st = path_to_state(path)
        lam = soliton_content(st)
        energy = sum(rises)
        if energy != energy_ctm(st):
            problems.append(f"kostka-energy L={L} path={''.join(map(str, path))}")
        if len(rises) != len(lam):
            problems.append(f"kostka-rises L={L} path={''.join(map(str, path))}")
        bucket = by_content.setdefault(lam, {})
        bucket[energy] = bucket.get(energy, 0) + 1

    refined = {}
    for lam in partitions(s):
        refined[lam] = (fermionic_term(L, lam, True), QPolynomial(by_content.get(lam, {})))
    return KostkaReport(L, s, fermionic, QPolynomial(config), refined, problems)


# -- border-strip bijection ---------------------------------------------------


def _runs(state: State, L: int) -> tuple[list[int], list[int]]:
    """Run lengths alpha_1, beta_1, ..., alpha_p, beta_p of the box word in [0, L]."""
    alphas, betas = [], []
    pos = 0
    for a, b in state.blocks:
        if not alphas and a > 0:
            alphas.append(0)
        if alphas and len(betas) < len(alphas):
            betas.append(a - pos)
        alphas.append(b - a)
        pos = b
    if not alphas:
        alphas.append(0)
    betas.append(L - pos)
    return alphas, betas


def state_to_restricted_partition(state: State, L: int) -> Partition:
    """Map a state in [0, L] to a partition inside the s x (L - s) box.

    The diagram is grown by outer rims: rim k spans alpha_1 + ... + alpha_k + 1
    rows and beta_1 + ... + beta_k columns.  The size of the result equals the
    energy of the state.
    """
    if state.blocks and (state.blocks[0][0] < 0 or state.blocks[-1][1] > L):
        raise ValueError(f"state {state} does not lie in [0, {L}]")
    alphas, betas = _runs(state, L)
    rows: list[int] = []
    height = width = 0
    for alpha, beta in zip(alphas[:-1], betas[:-1]):
        height += alpha
        width += beta
        rows = _add_rim(rows, height + 1, width)
    return Partition(rows)


def _add_rim(rows: list[int], height: int, width: int) -> list[int]:
    inner = rows + [0] * (height - 1 - len(rows))
    return [width] + [r + 1 for r in inner]


def _strip_rim(rows: list[int]) -> tuple[list[int], int, int]:
    height, width = len(rows), rows[0]
    inner = [r - 1 for r in rows[1:]]
    while inner and inner[-1] == 0:
        inner.pop()
    return inner, height, width


def partition_to_state(partition, L: int, s: int) -> State:
    rows = list(Partition(partition))
    if len(rows) > s or (rows and rows[0] > L - s):
        raise ValueError(f"partition {rows} does not fit in a {s} x {L - s} box")
    dims = []
    while rows:
        rows, h, w = _strip_rim(rows)
        dims.append((h - 1, w))
    dims.reverse()
    alphas, betas = [], []
    prev_h = prev_w = 0
    for h, w in dims:
        alphas.append(h - prev_h)
        betas.append(w - prev_w)
        prev_h, prev_w = h, w
    alphas.append(s - prev_h)
    betas.append(L - s - prev_w)
    boxes = []
    pos = 0
    for alpha, beta in zip(alphas, betas):
        boxes.extend(range(pos + 1, pos + alpha + 1))
        pos += alpha + beta
    return state_from_boxes(boxes)


def restricted_partitions(s: int, width: int) -> Iterator[Partition]:
    """Partitions with at most s parts, each at most ``width``."""

    def grow(prefix: list[int], cap: int):
        yield Partition(prefix)
        if len(prefix) == s:
            return
        for part in range(1, cap + 1):
            prefix.append(part)
            yield from grow(prefix, part)
            prefix.pop()

    yield from grow([], width)
