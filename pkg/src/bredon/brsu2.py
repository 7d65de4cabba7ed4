"""Additive structure of the equivariant cohomology of the infinite
quaternionic projective space over C_n.

For the group orders where the cohomology is known to be a free module
over the cohomology of a point (primes, and products of at least two
distinct odd primes), the module generators sit in the grading classes
of the canonical-flag cells; this module tabulates those classes.  For
n = 2 it additionally evaluates any single grading class as a finite
direct sum of point-cohomology table entries, exactly.  For the other
supported orders the point values themselves are not fully tabulated
(the twisted Burnside entries carry an undetermined parameter), so the
structure is emitted as formal shifted summands and never as invented
group values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cellgen import (
    CellDescriptor,
    ProperlyEvenVerdict,
    canonical_flag,
    cell_descriptor,
    check_properly_even,
)
from .mackey import (
    AbGroup,
    PointCohomClass,
    is_prime,
    named_functor,
    point_cohomology_c2,
    position_of,
)

SCOPE_EVALUATED = "evaluated"
SCOPE_FORMAL = "formal"


def freeness_scope_error(n: int) -> str | None:
    """None when the free-module description applies to C_n, otherwise an
    explanation.  The scope is: n prime, or n a product of at least two
    distinct odd primes."""
    if n < 1:
        return f"group order must be positive, got {n}"
    if is_prime(n):
        return None
    if n == 1:
        return "n=1 is not prime and not a product of distinct odd primes"
    factors = []
    m = n
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors.append(d)
            m //= d
        d += 1
    if m > 1:
        factors.append(m)
    if len(set(factors)) == len(factors) and all(f % 2 == 1 for f in factors):
        return None
    return (
        f"n={n} is outside the scope of the freeness description: "
        "the order must be prime or a product of distinct odd primes"
    )


@dataclass(frozen=True)
class AdditiveStructure:
    """Free-module generator table: one canonical-flag cell descriptor per
    generator, ordinal 0 being the base-point summand."""

    n: int
    generators: tuple[tuple[int, CellDescriptor], ...]
    scope_tag: str
    verdict: ProperlyEvenVerdict


def additive_structure(n: int, count: int) -> AdditiveStructure:
    """Generator table for ordinals 0..count, with the properly-even
    verdict of the canonical flag prefix attached.

    Raises for group orders where the free-module description is not
    available (neither prime nor a product of distinct odd primes).
    """
    error = freeness_scope_error(n)
    if error is not None:
        raise ValueError(error)
    if count < 0:
        raise ValueError("generator count must be non-negative")
    flag = canonical_flag(n, count + 1)
    generators = tuple((k, cell_descriptor(flag, k)) for k in range(count + 1))
    if count >= 1:
        verdict = check_properly_even(flag)
    else:
        verdict = ProperlyEvenVerdict(True)
    scope = SCOPE_EVALUATED if n == 2 else SCOPE_FORMAL
    return AdditiveStructure(n, generators, scope, verdict)


def plot_generators(structure: AdditiveStructure) -> list[tuple[int, int]]:
    """Lattice points (fixed dimension, total dimension), one per generator."""
    return [
        (descriptor.fixed_dim(1), descriptor.total_dim)
        for _, descriptor in structure.generators
    ]


def sun_level_rank(m: int, s: int) -> int:
    """Free rank of the underlying nonequivariant cohomology of the
    infinite quaternionic projective space in total degree m + s: one in
    non-negative degrees divisible by four, zero otherwise."""
    total = m + s
    return 1 if total >= 0 and total % 4 == 0 else 0


def _cell_form_c2(k: int) -> tuple[int, int]:
    # The k-th canonical C_2 cell is 4*floor(k/2) trivial plus
    # 4*ceil(k/2) sign summands.
    return (4 * (k // 2), 4 * ((k + 1) // 2))


def minimum_cutoff(m: int, s: int) -> int:
    """Smallest generator cutoff that provably captures every nonzero
    summand of the degree-(m + s*sigma) group.

    Past the total degree of the class, a summand can only be nonzero
    when its shifted position lands on the fixed-degree-zero column or
    in the odd positive strip, both of which force the generator ordinal
    below m/2 + 2.
    """
    total = m + s
    k1 = total // 4 if total >= 0 else 0
    k2 = m // 2 + 1 if m >= 0 else 0
    return max(0, k1, k2)


@dataclass(frozen=True)
class EvaluatedGroup:
    """One grading class of the C_2 cohomology, as a direct sum of point
    table entries (one per contributing generator), assembled into
    abelian-group presentations at the two Mackey levels."""

    m: int
    s: int
    summands: tuple[tuple[int, PointCohomClass], ...]
    top_level: AbGroup
    bottom_level: AbGroup


def evaluate_group_c2(m: int, s: int, cutoff: int | None = None) -> EvaluatedGroup:
    """Evaluate the degree-(m + s*sigma) cohomology group for C_2.

    Freeness gives one point-cohomology summand per generator, shifted
    by the generator's cell form.  ``cutoff`` limits the generators
    examined; it must be at least ``minimum_cutoff(m, s)`` (an exactness
    guard: smaller cutoffs could silently drop nonzero summands) and
    defaults to exactly that.

    >>> [cls.label for _, cls in evaluate_group_c2(0, 0).summands]
    ['A', 'braket_Z']
    """
    need = minimum_cutoff(m, s)
    if cutoff is None:
        cutoff = need
    if cutoff < need:
        raise ValueError(
            f"cutoff {cutoff} is too small to be exact for degree "
            f"({m}, {s}); need at least {need}"
        )
    summands = []
    top = AbGroup(0)
    bottom = AbGroup(0)
    for k in range(cutoff + 1):
        wm, ws = _cell_form_c2(k)
        x, y = position_of(m - wm, s - ws)
        cls = point_cohomology_c2(x, y)
        if not cls.is_zero:
            summands.append((k, cls))
            pres = named_functor(cls.label, 2)
            top = top.direct_sum(pres.top)
            bottom = bottom.direct_sum(pres.bottom)
    return EvaluatedGroup(m, s, tuple(summands), top, bottom)


def evaluated_group_as_dict(group: EvaluatedGroup) -> dict:
    return {
        "alpha": {"m": group.m, "s": group.s},
        "summands": [{"k": k, "label": cls.label} for k, cls in group.summands],
        "top": {"rank": group.top_level.rank, "torsion": list(group.top_level.torsion)},
        "bottom": {
            "rank": group.bottom_level.rank,
            "torsion": list(group.bottom_level.torsion),
        },
    }
