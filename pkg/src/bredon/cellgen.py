"""Cell structures on quaternionic projective spaces of C_n-universes.

A split full flag lists the irreducible quaternionic summands of a
universe in attachment order.  Attaching the k-th summand to the
projective space of the first k adds a single cell whose underlying
representation is the first k summands twisted by the inverse of the
incoming index; this module computes those cells' fixed-dimension
profiles, verifies the properly-even conditions on a flag prefix, and
describes the fixed-point components of a projective space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .rep_cn import (
    ComplexRep,
    QuatRep,
    check_order,
    divisors,
    fixed_dim_profile,
    isotypical_dim_complex,
    isotypical_dim_quat,
    reduce_quat_index,
    restrict_quat,
    tensor_phi,
)

QUATERNIONIC_PROJECTIVE = "quaternionic-projective"
COMPLEX_PROJECTIVE = "complex-projective"


@dataclass(frozen=True)
class SplitFullFlag:
    """A finite prefix of a split full flag: the k-th summand is the
    quaternionic irreducible with (canonical) index ``indices[k]``."""

    n: int
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        check_order(self.n)
        object.__setattr__(
            self,
            "indices",
            tuple(reduce_quat_index(self.n, r) for r in self.indices),
        )

    def __len__(self) -> int:
        return len(self.indices)


def canonical_flag(n: int, count: int) -> SplitFullFlag:
    """The flag whose k-th summand has index k (reduced).

    >>> canonical_flag(3, 6).indices
    (0, 1, 1, 0, 1, 1)
    """
    if count < 1:
        raise ValueError("flag prefix must have at least one summand")
    return SplitFullFlag(n, tuple(range(count)))


def interleaved_flag(n: int, count: int) -> SplitFullFlag:
    """The flag cycling through the distinct indices 0, 1, ..., n//2.

    >>> interleaved_flag(3, 4).indices
    (0, 1, 0, 1)
    """
    if count < 1:
        raise ValueError("flag prefix must have at least one summand")
    period = n // 2 + 1
    return SplitFullFlag(n, tuple(k % period for k in range(count)))


def cumulative_rep(flag: SplitFullFlag, k: int) -> QuatRep:
    """Direct sum of the first k flag summands."""
    if k < 0 or k > len(flag):
        raise ValueError(f"ordinal {k} exceeds the flag prefix length {len(flag)}")
    return QuatRep.of(flag.n, *flag.indices[:k])


def cell_rep(flag: SplitFullFlag, k: int) -> ComplexRep:
    """Underlying complex representation of the k-th cell.

    The cell attached when the k-th summand arrives is the sum of the
    previous summands twisted by the inverse of the incoming index.  The
    twisting index is only defined up to sign, which does not affect any
    fixed-dimension profile because the sum of the previous summands is
    conjugation-invariant.
    """
    if k == 0:
        return ComplexRep.zero(flag.n)
    if k >= len(flag):
        raise ValueError(f"ordinal {k} exceeds the flag prefix length {len(flag)}")
    incoming = flag.indices[k]
    return tensor_phi(-incoming, restrict_quat(cumulative_rep(flag, k)))


@dataclass(frozen=True)
class CellDescriptor:
    """Dimension data of one cell: its ordinal, total real dimension, the
    fixed dimension under each subgroup (keyed by divisor), and for n = 2
    the exact decomposition (m, s) into trivial and sign summands."""

    k: int
    total_dim: int
    profile: tuple[tuple[int, int], ...]
    c2_form: Optional[tuple[int, int]] = None

    def profile_dict(self) -> dict[int, int]:
        return dict(self.profile)

    def fixed_dim(self, d: int = 1) -> int:
        return self.profile_dict()[d]


def cell_descriptor(flag: SplitFullFlag, k: int) -> CellDescriptor:
    """Descriptor of the k-th cell of the flag filtration.

    Ordinal 0 is the base point (the projective space of a single
    summand), reported as an empty cell so that ordinals line up with
    the flag indexing.
    """
    rep = cell_rep(flag, k)
    profile = fixed_dim_profile(rep)
    total = rep.dim()
    c2 = None
    if flag.n == 2:
        fixed = profile[1]
        c2 = (fixed, total - fixed)
    return CellDescriptor(k, total, tuple(sorted(profile.items())), c2)


def fixed_dim_formula(n: int, k: int) -> int:
    """Closed form for the full fixed dimension of the k-th canonical cell.

    >>> fixed_dim_formula(3, 2)
    2
    >>> fixed_dim_formula(2, 7)
    12
    """
    check_order(n)
    if k < 0:
        raise ValueError("cell ordinal must be non-negative")
    q, rem = divmod(k, n)
    return 4 * q + 2 * ((2 * rem) // (n + 1))


@dataclass(frozen=True)
class ProperlyEvenVerdict:
    passed: bool
    failing_pair: Optional[tuple[int, int]] = None
    condition: Optional[str] = None

    def __str__(self) -> str:
        if self.passed:
            return "pass"
        return f"fail(cells {self.failing_pair}, condition {self.condition})"


def _dominated_in_order(
    earlier: dict[int, int], later: dict[int, int], n: int
) -> bool:
    """Ordering on real representations used by the attachment condition:
    whenever the earlier cell has strictly smaller fixed dimension at a
    subgroup S, its fixed dimension must be no larger at every subgroup
    containing S.  Subgroup containment in divisor terms: the subgroup
    for divisor t contains the one for divisor s exactly when t | s.
    """
    divs = divisors(n)
    for s in divs:
        if earlier[s] < later[s]:
            for t in divs:
                if s % t == 0 and earlier[t] > later[t]:
                    return False
    return True


def check_properly_even(
    flag: SplitFullFlag, prefix_len: Optional[int] = None
) -> ProperlyEvenVerdict:
    """Verify the properly-even conditions on the cells of a flag prefix.

    Checks, for the cells determined by the first ``prefix_len`` flag
    summands (cells 1 .. prefix_len-1):

    - (a) every fixed-dimension profile value is even;
    - (b) each cell is dominated by its successor in the ordering above;
    - (c) a growth certificate: the minimum profile value of cell k is at
      least 2*(k // n), which bounds below how fast cells must grow and
      certifies that only finitely many cells stay under any dimension
      bound (a finite prefix cannot witness the full condition, so the
      certified lower bound is checked instead);
    - (d) holds by construction: one cell is attached per step.

    Returns the first violation as (cell pair, condition tag).
    """
    if prefix_len is None:
        prefix_len = len(flag)
    if prefix_len < 2:
        raise ValueError("need a prefix of at least 2 summands to check")
    if prefix_len > len(flag):
        raise ValueError(
            f"prefix length {prefix_len} exceeds flag length {len(flag)}"
        )
    n = flag.n
    profiles: dict[int, dict[int, int]] = {}
    for k in range(1, prefix_len):
        profiles[k] = fixed_dim_profile(cell_rep(flag, k))
        if any(value % 2 != 0 for value in profiles[k].values()):
            return ProperlyEvenVerdict(False, (k, k), "a")
        if k >= 2 and not _dominated_in_order(profiles[k - 1], profiles[k], n):
            return ProperlyEvenVerdict(False, (k - 1, k), "b")
        if min(profiles[k].values()) < 2 * (k // n):
            return ProperlyEvenVerdict(False, (k, k), "c")
    return ProperlyEvenVerdict(True)


@dataclass(frozen=True)
class FixedComponent:
    """One component of the fixed-point space of a projective space: a
    quaternionic or complex projective space sitting inside the
    isotypical piece at index r."""

    r: int
    kind: str
    projective_dim: int
    ambient_dim: int

    @property
    def empty(self) -> bool:
        return self.projective_dim < 0


def fixed_components(w: QuatRep) -> tuple[FixedComponent, ...]:
    """Components of the fixed-point space of the projective space of w.

    There is one component per canonical index r in 0..n//2: a
    quaternionic projective space when 2r = 0 mod n, a complex one
    otherwise.  Components with no summand present are reported with
    projective dimension -1 and flagged empty.

    >>> [c.kind for c in fixed_components(QuatRep.of(3, 0, 1))]
    ['quaternionic-projective', 'complex-projective']
    """
    n = w.n
    out = []
    for r in range(n // 2 + 1):
        if (2 * r) % n == 0:
            ambient = isotypical_dim_quat(w, r)
            out.append(
                FixedComponent(r, QUATERNIONIC_PROJECTIVE, ambient // 4 - 1, ambient)
            )
        else:
            ambient = isotypical_dim_complex(w, r)
            out.append(
                FixedComponent(r, COMPLEX_PROJECTIVE, ambient // 2 - 1, ambient)
            )
    return tuple(out)


@dataclass(frozen=True)
class Cofiber:
    kind: str  # "sphere" or "point"
    dim: Optional[int] = None

    def __str__(self) -> str:
        return f"sphere({self.dim})" if self.kind == "sphere" else "point"


def cofiber_of_fixed_inclusion(w: QuatRep, k: int, r: int) -> Cofiber:
    """Cofiber of the inclusion of the r-th fixed component when a summand
    of index k is added to w: a sphere of the complex isotypical
    dimension when k = +/- r mod n, a point otherwise.

    >>> str(cofiber_of_fixed_inclusion(QuatRep.of(5, 2, 2), 3, 2))
    'sphere(4)'
    """
    n = w.n
    if (k - r) % n == 0 or (k + r) % n == 0:
        return Cofiber("sphere", isotypical_dim_complex(w, r))
    return Cofiber("point")


def plan_as_dict(
    flag: SplitFullFlag,
    flag_name: str,
    cells: list[CellDescriptor],
    verdict: ProperlyEvenVerdict,
) -> dict:
    """JSON-ready cell-complex plan."""
    cell_payload = []
    for c in cells:
        entry = {
            "k": c.k,
            "total": c.total_dim,
            "profile": {str(d): dim for d, dim in c.profile},
        }
        if c.c2_form is not None:
            entry["c2_form"] = {"m": c.c2_form[0], "s": c.c2_form[1]}
        cell_payload.append(entry)
    return {
        "n": flag.n,
        "flag": {"name": flag_name, "indices": list(flag.indices)},
        "cells": cell_payload,
        "verdict": {
            "passed": verdict.passed,
            "failing_pair": list(verdict.failing_pair)
            if verdict.failing_pair
            else None,
            "condition": verdict.condition,
        },
    }
