"""Exhaustive sweeps, counts, and machine-readable verification reports."""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from functools import lru_cache

from .errors import SizeCapError
from .roots import (
    CartanType,
    IntMatrix,
    RootSystem,
    WeylElement,
    _identity_matrix,
    _right_mul,
    build_root_system,
)
from .words import Word, format_word, longest_word, require_reduced
from .diagrams import (
    Diagram,
    diagram_for,
    diagram_from_mask,
    is_positive,
    is_positive_by_ascents,
    is_positive_by_lengths,
    positivity_obstruction,
    subword_products,
    zeta,
)
from . import grid as grid_mod

DEFAULT_SWEEP_CAP = 24
SWEEP_CAP_ENV = "WEYLDIAG_SWEEP_CAP"


def sweep_cap() -> int:
    raw = os.environ.get(SWEEP_CAP_ENV)
    if raw is None:
        return DEFAULT_SWEEP_CAP
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_SWEEP_CAP


def _guard_sweep(t: int) -> None:
    cap = sweep_cap()
    if t > cap:
        raise SizeCapError(
            f"2^{t} diagram sweep exceeds the cap of 2^{cap} "
            f"(override with {SWEEP_CAP_ENV})"
        )


def enumerate_positive(word: Word) -> list[Diagram]:
    """All positive diagrams of a reduced word, in ascending bitmask order."""
    require_reduced(word)
    _guard_sweep(word.t)
    out = []
    for mask in range(1 << word.t):
        d = diagram_from_mask(word, mask)
        if is_positive(d):
            out.append(d)
    return out


@lru_cache(maxsize=None)
def group_elements(system: RootSystem) -> frozenset[WeylElement]:
    """The whole Weyl group by breadth-first closure of the generators."""
    cartan = system.cartan
    ident = _identity_matrix(system.rank)
    seen: dict[IntMatrix, int] = {ident: 0}
    frontier = [ident]
    depth = 0
    while frontier:
        depth += 1
        fresh = []
        for m in frontier:
            for i0 in range(system.rank):
                nxt = _right_mul(m, i0, cartan)
                if nxt not in seen:
                    seen[nxt] = depth
                    fresh.append(nxt)
        frontier = fresh
    return frozenset(WeylElement(m, d) for m, d in seen.items())


def group_order(system: RootSystem) -> int:
    return len(group_elements(system))


def bruhat_interval(word: Word) -> frozenset[WeylElement]:
    """{u : u <= w} as subword products; cross-checked against the zeta image
    of the positive diagrams when __debug__ is set."""
    require_reduced(word)
    _guard_sweep(word.t)
    interval = subword_products(word)
    if __debug__:
        images = {zeta(d) for d in enumerate_positive(word)}
        assert images == interval, "zeta image disagrees with subword products"
    return interval


@dataclass
class VerificationReport:
    ctype: str
    word: str
    total_diagrams: int
    positive_count: int
    interval_count: int
    bijection_ok: bool
    roundtrip_ok: bool
    dual_ok: bool
    obstruction_ok: bool
    le_equivalence_ok: bool | None
    order_stats: dict | None
    elapsed: float

    def all_ok(self) -> bool:
        checks = [self.bijection_ok, self.roundtrip_ok, self.dual_ok, self.obstruction_ok]
        if self.le_equivalence_ok is not None:
            checks.append(self.le_equivalence_ok)
        return all(checks)

    def to_dict(self, include_elapsed: bool = False) -> dict:
        out = {
            "type": self.ctype,
            "word": self.word,
            "total_diagrams": self.total_diagrams,
            "positive_count": self.positive_count,
            "interval_count": self.interval_count,
            "bijection_ok": self.bijection_ok,
            "roundtrip_ok": self.roundtrip_ok,
            "dual_ok": self.dual_ok,
            "obstruction_ok": self.obstruction_ok,
        }
        if self.le_equivalence_ok is not None:
            out["le_equivalence_ok"] = self.le_equivalence_ok
        if self.order_stats is not None:
            out["order_stats"] = self.order_stats
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return out

    def to_json(self, include_elapsed: bool = False) -> str:
        return json.dumps(self.to_dict(include_elapsed=include_elapsed), indent=2) + "\n"


def detect_grid_shape(word: Word) -> grid_mod.GridShape | None:
    """Recognize the m-run grid word, if the word is one."""
    t = word.t
    if word.system.ctype.family != "A" or t == 0:
        return None
    for p in range(1, t + 1):
        if t % p:
            continue
        m = t // p
        if p + m - 1 != word.system.rank:
            continue
        shape = grid_mod.GridShape(p, m)
        if grid_mod.quantum_matrices_word(shape).letters == word.letters:
            return shape
    return None


def _obstruction_clean(diagram: Diagram) -> bool:
    # A positive diagram must never trip the root-sum obstruction.
    inside = diagram.positions
    for m in inside:
        for j in range(1, m):
            if positivity_obstruction(diagram, j, m).violated:
                return False
    return True


def order_preservation_stats(word: Word, positives: list[Diagram]) -> dict:
    """Counts relating diagram inclusion to Bruhat comparability of the zeta
    images.  Reported as data only; no claim is asserted."""
    from .words import reduced_word

    images = {d.positions: zeta(d) for d in positives}
    below: dict[tuple[int, ...], frozenset[WeylElement]] = {}
    for pos, u in images.items():
        below[pos] = subword_products(reduced_word(word.system, u))
    inclusion_pairs = 0
    inclusion_and_bruhat = 0
    bruhat_pairs = 0
    bruhat_and_inclusion = 0
    items = sorted(images.items())
    for pos1, u1 in items:
        set1 = set(pos1)
        for pos2, u2 in items:
            if pos1 == pos2:
                continue
            included = set1 <= set(pos2)
            leq = u1 in below[pos2]
            if included:
                inclusion_pairs += 1
                if leq:
                    inclusion_and_bruhat += 1
            if leq:
                bruhat_pairs += 1
                if included:
                    bruhat_and_inclusion += 1
    return {
        "inclusion_pairs": inclusion_pairs,
        "inclusion_and_bruhat": inclusion_and_bruhat,
        "bruhat_pairs": bruhat_pairs,
        "bruhat_and_inclusion": bruhat_and_inclusion,
    }


def verify_word(word: Word, include_order_stats: bool = False) -> VerificationReport:
    """Run every diagram-level check over one reduced word."""
    require_reduced(word)
    _guard_sweep(word.t)
    start = time.perf_counter()
    t = word.t

    dual_ok = True
    positives: list[Diagram] = []
    positive_masks: set[int] = set()
    for mask in range(1 << t):
        d = diagram_from_mask(word, mask)
        by_ascents = is_positive_by_ascents(d)
        if is_positive_by_lengths(d) != by_ascents:
            dual_ok = False
        if by_ascents:
            positives.append(d)
            positive_masks.add(mask)

    interval = subword_products(word)
    images = [zeta(d) for d in positives]
    bijection_ok = len(set(images)) == len(images) and set(images) == interval

    roundtrip_ok = all(
        diagram_for(word, u) == d for d, u in zip(positives, images)
    )
    if roundtrip_ok:
        for u in interval:
            d = diagram_for(word, u)
            if d is None or zeta(d) != u:
                roundtrip_ok = False
                break

    obstruction_ok = all(_obstruction_clean(d) for d in positives)

    le_equivalence_ok = None
    shape = detect_grid_shape(word)
    if shape is not None:
        le_equivalence_ok = all(
            grid_mod.is_le_diagram(grid_mod.grid_from_mask(shape, mask))
            == (mask in positive_masks)
            for mask in range(1 << t)
        )

    stats = order_preservation_stats(word, positives) if include_order_stats else None

    return VerificationReport(
        ctype=str(word.system.ctype),
        word=format_word(word),
        total_diagrams=1 << t,
        positive_count=len(positives),
        interval_count=len(interval),
        bijection_ok=bijection_ok,
        roundtrip_ok=roundtrip_ok,
        dual_ok=dual_ok,
        obstruction_ok=obstruction_ok,
        le_equivalence_ok=le_equivalence_ok,
        order_stats=stats,
        elapsed=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class CensusResult:
    positive_root_count: int
    positive_count: int
    group_order: int

    @property
    def ok(self) -> bool:
        return self.positive_count == self.group_order


def longest_word_census(ctype: CartanType) -> CensusResult:
    """Count positive diagrams over a reduced word of w0 and compare with |W|."""
    system = build_root_system(ctype)
    word = longest_word(system)
    _guard_sweep(word.t)
    positives = enumerate_positive(word)
    return CensusResult(
        positive_root_count=system.num_positive_roots,
        positive_count=len(positives),
        group_order=group_order(system),
    )


__all__ = [
    "DEFAULT_SWEEP_CAP",
    "SWEEP_CAP_ENV",
    "sweep_cap",
    "enumerate_positive",
    "group_elements",
    "group_order",
    "bruhat_interval",
    "VerificationReport",
    "CensusResult",
    "detect_grid_shape",
    "order_preservation_stats",
    "verify_word",
    "longest_word_census",
]
