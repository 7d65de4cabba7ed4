"""Named Mackey functors for cyclic groups of prime order, and the lookup
tables for the equivariant cohomology of a point.

A Mackey functor for C_p is presented by two finitely generated abelian
groups (the values on the one-point orbit and on the free orbit),
integer restriction and transfer matrices between them, and an action of
the group on the free-orbit value whose p-th power is the identity.

The point-cohomology tables transcribe, position by position, the known
tabulations of the cohomology of the zero-sphere with Burnside-ring
coefficients, indexed by the pair (fixed dimension, total dimension) of
the grading class.  The published tabulations display a finite window;
the rules here extend the evident periodic pattern to all integers, and
consumers should treat positions far outside the window as that
extrapolation.  In particular, on the total-degree-zero row for p = 2
the entry at fixed dimension +1 is the sign-twisted restriction functor,
matching the drawn node; how that row continues past the window is not
determined by the window itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

Entry = Union[int, str]  # "d" marks the opaque twisting parameter
Matrix = tuple[tuple[Entry, ...], ...]

D_SYMBOL = "d"

LABELS = (
    "A",
    "A[d]",
    "R",
    "L",
    "R_minus",
    "L_minus",
    "braket_Z",
    "braket_Z2",
    "braket_Zp",
    "zero",
)

_DISPLAY = {
    "A": "A",
    "A[d]": "A[d]",
    "R": "R",
    "L": "L",
    "R_minus": "R-",
    "L_minus": "L-",
    "braket_Z": "<Z>",
    "braket_Z2": "<Z/2>",
    "braket_Zp": "<Z/p>",
    "zero": "0",
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d != 0 for d in range(2, int(n**0.5) + 1))


def display_label(label: str) -> str:
    """Human-readable form of a functor label, e.g. ``braket_Z2`` -> ``<Z/2>``."""
    return _DISPLAY[label]


@dataclass(frozen=True)
class AbGroup:
    """Finitely generated abelian group: free rank plus torsion orders.

    Equality is normalized by sorting the torsion orders, so two
    presentations of the same group compare equal regardless of the
    order the torsion summands were listed in.
    """

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion orders must be at least 2")
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def generator_count(self) -> int:
        return self.rank + len(self.torsion)

    def generator_orders(self) -> tuple[int, ...]:
        """Order of each generator; 0 stands for infinite order."""
        return (0,) * self.rank + self.torsion

    def direct_sum(self, other: "AbGroup") -> "AbGroup":
        return AbGroup(self.rank + other.rank, self.torsion + other.torsion)

    def __str__(self) -> str:
        parts = ["Z"] * self.rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def _scalar_mul(a: Entry, b: Entry) -> Entry:
    if a == 0 or b == 0:
        return 0
    if isinstance(a, int) and isinstance(b, int):
        return a * b
    if a == 1:
        return b
    if b == 1:
        return a
    raise ArithmeticError(f"cannot multiply symbolic entries {a!r} * {b!r}")


def _scalar_add(a: Entry, b: Entry) -> Entry:
    if a == 0:
        return b
    if b == 0:
        return a
    if isinstance(a, int) and isinstance(b, int):
        return a + b
    raise ArithmeticError(f"cannot add symbolic entries {a!r} + {b!r}")


def mat_mul(a: Matrix, b: Matrix, inner: int, cols: Optional[int] = None) -> Matrix:
    """Product of matrices given as row tuples.  ``inner`` is the shared
    dimension and ``cols`` the column count of ``b``; both are needed
    explicitly because a matrix with zero rows does not record its
    column count."""
    rows = len(a)
    if cols is None:
        cols = len(b[0]) if b else 0
    out = []
    for i in range(rows):
        if len(a[i]) != inner:
            raise ValueError("matrix shape mismatch")
        row: list[Entry] = []
        for j in range(cols):
            acc: Entry = 0
            for t in range(inner):
                acc = _scalar_add(acc, _scalar_mul(a[i][t], b[t][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def identity_matrix(k: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(_scalar_add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


@dataclass(frozen=True)
class MackeyPresentation:
    """Presentation of a C_p-Mackey functor.

    ``res`` maps the one-point-orbit value to the free-orbit value and
    has one row per bottom generator and one column per top generator;
    ``tr`` goes the other way; ``weyl`` is the group action on the
    free-orbit value.
    """

    label: str
    p: int
    top: AbGroup
    bottom: AbGroup
    res: Matrix
    tr: Matrix
    weyl: Matrix


def named_functor(label: str, p: int) -> MackeyPresentation:
    """Presentation of one of the named C_p-Mackey functors.

    The sign-twisted functors exist only for p = 2; the label "A[d]"
    carries the twisting parameter as an opaque symbol, never a number.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if label not in LABELS:
        raise ValueError(f"unknown Mackey functor label {label!r}")
    if label in ("R_minus", "L_minus") and p != 2:
        raise ValueError(f"{label} is defined only for p = 2")

    z = AbGroup(1)
    zero = AbGroup(0)
    if label == "A":
        return MackeyPresentation(
            label, p, AbGroup(2), z, ((1, p),), ((0,), (1,)), ((1,),)
        )
    if label == "A[d]":
        return MackeyPresentation(
            label, p, AbGroup(2), z, ((D_SYMBOL, p),), ((0,), (1,)), ((1,),)
        )
    if label == "R":
        return MackeyPresentation(label, p, z, z, ((1,),), ((p,),), ((1,),))
    if label == "L":
        return MackeyPresentation(label, p, z, z, ((p,),), ((1,),), ((1,),))
    if label == "R_minus":
        return MackeyPresentation(label, p, zero, z, ((),), (), ((-1,),))
    if label == "L_minus":
        return MackeyPresentation(
            label, p, AbGroup(0, (2,)), z, ((0,),), ((1,),), ((-1,),)
        )
    if label == "braket_Z":
        return MackeyPresentation(label, p, z, zero, (), ((),), ())
    if label == "braket_Z2":
        return MackeyPresentation(label, p, AbGroup(0, (2,)), zero, (), ((),), ())
    if label == "braket_Zp":
        return MackeyPresentation(label, p, AbGroup(0, (p,)), zero, (), ((),), ())
    # label == "zero"
    return MackeyPresentation(label, p, zero, zero, (), (), ())


def weyl_orbit_sum(m: MackeyPresentation) -> Matrix:
    """Sum of the powers weyl^0 + ... + weyl^(p-1)."""
    k = m.bottom.generator_count()
    acc = identity_matrix(k)
    total = acc
    for _ in range(m.p - 1):
        acc = mat_mul(m.weyl, acc, k)
        total = mat_add(total, acc)
    return total


def res_after_tr(m: MackeyPresentation) -> Matrix:
    """The endomorphism of the free-orbit value given by transferring up
    and restricting back down."""
    return mat_mul(m.res, m.tr, m.top.generator_count(), m.bottom.generator_count())


def double_coset_holds(m: MackeyPresentation) -> bool:
    """Check res o tr = sum of the group-action powers on the free-orbit
    value, comparing entries modulo the order of the target generator."""
    lhs = res_after_tr(m)
    rhs = weyl_orbit_sum(m)
    orders = m.bottom.generator_orders()
    for i, order in enumerate(orders):
        for j in range(m.bottom.generator_count()):
            a, b = lhs[i][j], rhs[i][j]
            if not isinstance(a, int) or not isinstance(b, int):
                return False
            if order == 0:
                if a != b:
                    return False
            elif (a - b) % order != 0:
                return False
    return True


def weyl_order_divides_p(m: MackeyPresentation) -> bool:
    """Check that the p-th power of the group action is the identity."""
    k = m.bottom.generator_count()
    acc = identity_matrix(k)
    for _ in range(m.p):
        acc = mat_mul(m.weyl, acc, k)
    return acc == identity_matrix(k)


@dataclass(frozen=True)
class PointCohomClass:
    """A point-cohomology table entry: the Mackey functor label found at
    position (x, y) = (fixed dimension, total dimension)."""

    label: str
    x: int
    y: int
    p: int

    @property
    def is_zero(self) -> bool:
        return self.label == "zero"

    def display(self) -> str:
        return _DISPLAY[self.label]


def point_cohomology_c2(x: int, y: int) -> PointCohomClass:
    """Table entry for C_2 at position (x, y) = (fixed dim, total dim).

    Transcription of the standard tabulation: the total-degree-zero row
    alternates restriction-type functors on the left of the Burnside
    functor and induction-type ones on its right (sign-twisted at odd
    positions, including +1); the fixed-degree-zero column carries the
    free one-generator functor; two quadrant strips carry order-two
    torsion; everything else vanishes.

    >>> point_cohomology_c2(0, 0).label
    'A'
    >>> point_cohomology_c2(-2, 3).label
    'braket_Z2'
    """
    if y == 0:
        if x == 0:
            label = "A"
        elif x < 0:
            label = "R" if x % 2 == 0 else "R_minus"
        elif x == 1:
            label = "R_minus"
        elif x % 2 == 0:
            label = "L"
        else:
            label = "L_minus"
    elif x == 0:
        label = "braket_Z"
    elif x <= -2 and x % 2 == 0 and y > 0:
        label = "braket_Z2"
    elif x >= 3 and x % 2 == 1 and y < 0:
        label = "braket_Z2"
    else:
        label = "zero"
    return PointCohomClass(label, x, y, 2)


def point_cohomology_odd(x: int, y: int, p: int) -> PointCohomClass:
    """Table entry for odd p at position (x, y) = (fixed dim, total dim).

    Nonzero entries require x and y of equal parity.  The origin carries
    the twisted Burnside functor with its symbolic parameter; the
    total-degree-zero row carries restriction/induction functors at even
    positions; the fixed-degree-zero column the free one-generator
    functor; two quadrant strips carry order-p torsion.

    >>> point_cohomology_odd(-4, 2, 5).label
    'braket_Zp'
    >>> point_cohomology_odd(1, 3, 3).label
    'zero'
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    if (x - y) % 2 != 0:
        label = "zero"
    elif y == 0:
        if x == 0:
            label = "A[d]"
        elif x < 0:
            label = "R"
        else:
            label = "L"
    elif x == 0:
        label = "braket_Z"
    elif x <= -2 and x % 2 == 0 and y > 0:
        label = "braket_Zp"
    elif x >= 3 and x % 2 == 1 and y < 0:
        label = "braket_Zp"
    else:
        label = "zero"
    return PointCohomClass(label, x, y, p)


def position_of(m: int, s: int) -> tuple[int, int]:
    """Table position of the C_2 grading class with m trivial and s sign
    summands: fixed dimension m, total dimension m + s."""
    return (m, m + s)


def presentation_as_dict(pres: MackeyPresentation) -> dict:
    return {
        "label": pres.label,
        "p": pres.p,
        "top": {"rank": pres.top.rank, "torsion": list(pres.top.torsion)},
        "bottom": {"rank": pres.bottom.rank, "torsion": list(pres.bottom.torsion)},
        "res": [list(row) for row in pres.res],
        "tr": [list(row) for row in pres.tr],
        "weyl": [list(row) for row in pres.weyl],
    }
