"""Diagrams over a reduced word and their positivity combinatorics.

A diagram is a subset of the positions 1..t of a fixed reduced word.  The
module provides the right-to-left subexpression trace, the two classical
characterizations of positivity (the ascent test on the trace and the
length test on per-position products), the maps zeta / zeta' onto the
Bruhat intervals below w and w^{-1}, the left-to-right recursion that
reconstructs the unique positive diagram of an interval element, an
independent subword-product Bruhat oracle, and the root-sum obstruction
that certifies non-positivity.

Positive diagrams coincide with the admissible (Cauchon) diagrams of the
quantum nilpotent algebra attached to the word; user-facing names here say
"positive" throughout.

Both positivity tests run and are compared whenever __debug__ is set (the
normal interpreter and pytest); python -O keeps only the ascent test.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .roots import (
    IntMatrix,
    RootVector,
    WeylElement,
    _apply,
    _count_inversions,
    _identity_matrix,
    _invert_matrix,
    _left_mul,
    _right_mul,
    _wrap,
    coroot_pairing,
    invert,
    reflect,
)
from .words import Word, require_reduced


@dataclass(frozen=True)
class Diagram:
    """A subset of word positions, stored sorted and 1-based."""

    word: Word
    positions: tuple[int, ...]

    def __post_init__(self):
        positions = tuple(sorted(self.positions))
        t = self.word.t
        for k, pos in enumerate(positions):
            if not 1 <= pos <= t:
                raise DomainError(f"diagram position {pos} out of range 1..{t}")
            if k and positions[k - 1] == pos:
                raise DomainError(f"diagram position {pos} repeated")
        object.__setattr__(self, "positions", positions)

    @property
    def size(self) -> int:
        return len(self.positions)

    @property
    def mask(self) -> int:
        m = 0
        for pos in self.positions:
            m |= 1 << (pos - 1)
        return m

    def complement(self) -> tuple[int, ...]:
        inside = set(self.positions)
        return tuple(k for k in range(1, self.word.t + 1) if k not in inside)

    def __str__(self) -> str:
        return format_diagram(self)

    def __repr__(self) -> str:
        return f"Diagram({self.word!r}, {self.positions})"


def format_diagram(diagram: Diagram) -> str:
    return ",".join(str(p) for p in diagram.positions)


def diagram_from_mask(word: Word, mask: int) -> Diagram:
    """Positions of set bits, bit k-1 meaning position k."""
    positions = []
    k = 1
    while mask:
        if mask & 1:
            positions.append(k)
        mask >>= 1
        k += 1
    return Diagram(word, tuple(positions))


@dataclass(frozen=True)
class SubexpressionTrace:
    """The t+1 partial products v_0, ..., v_t read off the word right to left."""

    vs: tuple[WeylElement, ...]


def subexpression(diagram: Diagram) -> SubexpressionTrace:
    word = diagram.word
    require_reduced(word)
    system = word.system
    cartan = system.cartan
    inside = set(diagram.positions)
    m = _identity_matrix(system.rank)
    ell = 0
    vs = [WeylElement(m, 0)]
    for pos in range(word.t, 0, -1):
        if pos in inside:
            a0 = word.letters[pos - 1] - 1
            ell += 1 if sum(m[a0]) > 0 else -1
            m = _right_mul(m, a0, cartan)
        vs.append(WeylElement(m, ell))
    return SubexpressionTrace(tuple(vs))


def zeta(diagram: Diagram) -> WeylElement:
    """Product of the word's letters at the diagram's positions, left to right."""
    word = diagram.word
    require_reduced(word)
    m = _identity_matrix(word.system.rank)
    for pos in diagram.positions:
        m = _right_mul(m, word.letters[pos - 1] - 1, word.system.cartan)
    return _wrap(word.system, m)


def zeta_prime(diagram: Diagram) -> WeylElement:
    """Product in the reverse order; always the inverse of zeta."""
    return invert(zeta(diagram))


def _positive_by_ascents(diagram: Diagram) -> bool:
    # Marsh-Rietsch positivity: every step of the right-to-left trace must
    # ascend, i.e. v_{i-1}(alpha) is positive at every position, member or not.
    word = diagram.word
    system = word.system
    cartan = system.cartan
    letters = word.letters
    inside = set(diagram.positions)
    m = _identity_matrix(system.rank)
    for pos in range(word.t, 0, -1):
        a0 = letters[pos - 1] - 1
        if sum(m[a0]) < 0:
            return False
        if pos in inside:
            m = _right_mul(m, a0, cartan)
    return True


def _positive_by_lengths(diagram: Diagram) -> bool:
    # Length characterization: for every position j, the product of s_{alpha_j}
    # with the member letters strictly after j must have length 1 + (number of
    # those letters), with lengths obtained by inversion counting.
    word = diagram.word
    system = word.system
    cartan = system.cartan
    letters = word.letters
    t = word.t
    inside = set(diagram.positions)
    suffix = _identity_matrix(system.rank)
    suffix_size = 0
    for j in range(t, 0, -1):
        candidate = _left_mul(suffix, letters[j - 1] - 1, cartan)
        if _count_inversions(system, candidate) != 1 + suffix_size:
            return False
        if j in inside:
            suffix = candidate
            suffix_size += 1
    return True


def is_positive_by_ascents(diagram: Diagram) -> bool:
    require_reduced(diagram.word)
    return _positive_by_ascents(diagram)


def is_positive_by_lengths(diagram: Diagram) -> bool:
    require_reduced(diagram.word)
    return _positive_by_lengths(diagram)


def is_positive(diagram: Diagram) -> bool:
    """Positivity verdict for a diagram over a reduced word."""
    require_reduced(diagram.word)
    verdict = _positive_by_ascents(diagram)
    if __debug__:
        assert _positive_by_lengths(diagram) == verdict, (
            f"positivity tests disagree on {diagram.positions} "
            f"over {diagram.word}"
        )
    return verdict


def diagram_for(word: Word, u: WeylElement) -> Diagram | None:
    """The unique positive diagram with zeta image u, or None when u is not
    below the word's element in Bruhat order.

    Left-to-right recursion: include position i+1 exactly when the running
    residual u_i has the word's next simple root as a left descent; u is in
    the interval exactly when the final residual is the identity.
    """
    require_reduced(word)
    system = word.system
    cartan = system.cartan
    ident = _identity_matrix(system.rank)
    inv = _invert_matrix(u.matrix)
    positions = []
    for pos, i in enumerate(word.letters, start=1):
        if sum(inv[i - 1]) < 0:
            positions.append(pos)
            inv = _right_mul(inv, i - 1, cartan)
    if inv != ident:
        return None
    return Diagram(word, tuple(positions))


@lru_cache(maxsize=None)
def subword_products(word: Word) -> frozenset[WeylElement]:
    """All elements reachable as products of subwords, i.e. {u : u <= w}.

    Independent of the diagram machinery: a left-to-right dynamic scan over
    the set of reachable matrices.
    """
    require_reduced(word)
    system = word.system
    cartan = system.cartan
    reachable: set[IntMatrix] = {_identity_matrix(system.rank)}
    for i in word.letters:
        reachable |= {_right_mul(m, i - 1, cartan) for m in reachable}
    return frozenset(_wrap(system, m) for m in reachable)


def bruhat_leq_oracle(word: Word, u: WeylElement) -> bool:
    """Subword test for u <= element_of(word), via the reachable-product set."""
    return u in subword_products(word)


# -- the root-sum obstruction ------------------------------------------------


@dataclass(frozen=True)
class GammaTrace:
    """Reflection recursion over the complement positions between j and m.

    gammas[p] is beta_m; gammas[i-1] = s_{beta_{l_i}}(gammas[i]); and
    coefficients[i-1] = (beta_{l_i}^vee, gammas[i]), so that
    gammas[0] = beta_m - sum_i coefficients[i-1] * beta_{l_i}.
    """

    j: int
    m: int
    complement_positions: tuple[int, ...]
    gammas: tuple[RootVector, ...]
    coefficients: tuple[int, ...]


@dataclass(frozen=True)
class ObstructionCheck:
    applicable: bool
    violated: bool
    trace: GammaTrace | None


def _gamma_trace(diagram: Diagram, j: int, m: int) -> GammaTrace:
    word = diagram.word
    system = word.system
    betas = word.betas
    inside = set(diagram.positions)
    ls = tuple(k for k in range(j + 1, m) if k not in inside)
    p = len(ls)
    gammas: list[RootVector] = [()] * (p + 1)
    coeffs: list[int] = [0] * p
    gammas[p] = betas[m - 1]
    for i in range(p, 0, -1):
        beta_l = betas[ls[i - 1] - 1]
        coeffs[i - 1] = coroot_pairing(system, beta_l, gammas[i])
        gammas[i - 1] = reflect(system, beta_l, gammas[i])

    total = list(betas[m - 1])
    for a, l in zip(coeffs, ls):
        if a:
            bl = betas[l - 1]
            for k in range(len(total)):
                total[k] -= a * bl[k]
    assert tuple(total) == gammas[0], "telescoping identity for gamma_1"

    trace = GammaTrace(j, m, ls, tuple(gammas), tuple(coeffs))
    if __debug__:
        _assert_gammas_match_omitted_products(trace, word)
    return trace


def _assert_gammas_match_omitted_products(trace: GammaTrace, word: Word) -> None:
    # Independent recomputation: gamma_i must equal the image of the m-th
    # letter's simple root under the product of the first m-1 letters with
    # the letters at positions l_i..l_p omitted.
    system = word.system
    cartan = system.cartan
    letters = word.letters
    m, ls = trace.m, trace.complement_positions
    p = len(ls)
    prefixes = word.prefix_matrices
    alpha_m0 = letters[m - 1] - 1
    tail = _identity_matrix(system.rank)
    upper = m
    for i in range(p, 0, -1):
        for k in range(upper - 1, ls[i - 1], -1):
            tail = _left_mul(tail, letters[k - 1] - 1, cartan)
        upper = ls[i - 1]
        head = prefixes[ls[i - 1] - 1]
        image = _apply(head, tail[alpha_m0])
        assert image == trace.gammas[i - 1], (
            f"gamma_{i} mismatch at (j={trace.j}, m={m}) over {word}"
        )


def positivity_obstruction(diagram: Diagram, j: int, m: int) -> ObstructionCheck:
    """Root-sum obstruction at a pair j < m with m in the diagram.

    Applicable when some position strictly between j and m lies outside the
    diagram; violated means beta_j + beta_m equals the accumulated multiple
    sum of the complement betas, which certifies that the diagram is not
    positive.
    """
    word = diagram.word
    require_reduced(word)
    t = word.t
    if not (1 <= j < m <= t):
        raise DomainError(f"need 1 <= j < m <= {t}, got j={j}, m={m}")
    if m not in diagram.positions:
        raise DomainError(f"position m={m} must belong to the diagram")
    inside = set(diagram.positions)
    if all(k in inside for k in range(j + 1, m)):
        return ObstructionCheck(False, False, None)
    trace = _gamma_trace(diagram, j, m)
    betas = word.betas
    target = tuple(a + b for a, b in zip(betas[j - 1], betas[m - 1]))
    accumulated = [0] * word.system.rank
    for a, l in zip(trace.coefficients, trace.complement_positions):
        bl = betas[l - 1]
        for k in range(len(accumulated)):
            accumulated[k] += a * bl[k]
    violated = tuple(accumulated) == target
    return ObstructionCheck(True, violated, trace)


__all__ = [
    "Diagram",
    "SubexpressionTrace",
    "GammaTrace",
    "ObstructionCheck",
    "format_diagram",
    "diagram_from_mask",
    "subexpression",
    "zeta",
    "zeta_prime",
    "is_positive",
    "is_positive_by_ascents",
    "is_positive_by_lengths",
    "diagram_for",
    "subword_products",
    "bruhat_leq_oracle",
    "positivity_obstruction",
]
