"""Exact representation theory of the cyclic group C_n over C and H.

Representations are stored as integer multiplicity vectors over the
irreducibles.  The complex irreducible with rotation index r is the one
where the chosen generator of C_n acts as the r-th power of a primitive
n-th root of unity; its quaternionic counterpart is the extension of
that representation to the quaternions.  Everything here is exact
integer arithmetic: no floating point and no numerical roots of unity.

Dimensions are always *real* dimensions, so a complex representation of
complex dimension m reports dimension 2m, and a quaternionic one of
quaternionic dimension m reports 4m.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MAX_ORDER = 64

# Cap on accepted group orders; front ends may raise it (see the CLI's
# --max-n flag).  Everything in scope is tiny, so the default is generous.
MAX_ORDER = DEFAULT_MAX_ORDER

REAL = "real"
COMPLEX = "complex"
QUATERNIONIC = "quaternionic"


def check_order(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"group order must be a positive integer, got {n!r}")
    if n > MAX_ORDER:
        raise ValueError(f"group order {n} exceeds the configured cap {MAX_ORDER}")


def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending.

    >>> divisors(12)
    (1, 2, 3, 4, 6, 12)
    """
    return tuple(d for d in range(1, n + 1) if n % d == 0)


def reduce_complex_index(n: int, r: int) -> int:
    """Reduce a rotation index to the canonical range 0 <= r < n."""
    return r % n


def reduce_quat_index(n: int, r: int) -> int:
    """Reduce a quaternionic index to 0 <= r <= n//2.

    Quaternionic irreducibles with indices r and -r are isomorphic, so
    every index is equivalent to one in this range.

    >>> reduce_quat_index(3, 2)
    1
    >>> reduce_quat_index(5, 8)
    2
    """
    r %= n
    return min(r, n - r)


@dataclass(frozen=True)
class IrredComplex:
    """The irreducible complex C_n-representation with rotation index r."""

    n: int
    r: int

    def __post_init__(self) -> None:
        check_order(self.n)
        object.__setattr__(self, "r", reduce_complex_index(self.n, self.r))

    def conjugate(self) -> "IrredComplex":
        return IrredComplex(self.n, -self.r)

    def as_rep(self) -> "ComplexRep":
        return ComplexRep.of(self.n, self.r)


@dataclass(frozen=True)
class IrredQuat:
    """The irreducible quaternionic C_n-representation with index r."""

    n: int
    r: int

    def __post_init__(self) -> None:
        check_order(self.n)
        object.__setattr__(self, "r", reduce_quat_index(self.n, self.r))

    def as_rep(self) -> "QuatRep":
        return QuatRep.of(self.n, self.r)


def _check_mult(mult: tuple[int, ...], expected_len: int) -> tuple[int, ...]:
    mult = tuple(int(m) for m in mult)
    if len(mult) != expected_len:
        raise ValueError(
            f"multiplicity vector has length {len(mult)}, expected {expected_len}"
        )
    if any(m < 0 for m in mult):
        raise ValueError("multiplicities must be non-negative")
    return mult


@dataclass(frozen=True)
class ComplexRep:
    """A finite-dimensional complex C_n-representation by multiplicities.

    ``mult[r]`` is the multiplicity of the irreducible with rotation
    index r, for 0 <= r < n.
    """

    n: int
    mult: tuple[int, ...]

    def __post_init__(self) -> None:
        check_order(self.n)
        object.__setattr__(self, "mult", _check_mult(self.mult, self.n))

    @classmethod
    def zero(cls, n: int) -> "ComplexRep":
        return cls(n, (0,) * n)

    @classmethod
    def of(cls, n: int, *indices: int) -> "ComplexRep":
        """Direct sum of irreducibles given by (possibly unreduced) indices.

        >>> ComplexRep.of(3, 1, 2).mult
        (0, 1, 1)
        >>> ComplexRep.of(3, 4).mult
        (0, 1, 0)
        """
        mult = [0] * n
        for r in indices:
            mult[r % n] += 1
        return cls(n, tuple(mult))

    def multiplicity(self, r: int) -> int:
        return self.mult[r % self.n]

    def dim(self) -> int:
        """Real dimension: two per complex irreducible summand."""
        return 2 * sum(self.mult)

    def conjugate(self) -> "ComplexRep":
        n = self.n
        return ComplexRep(n, tuple(self.mult[(n - r) % n] for r in range(n)))

    def __add__(self, other: "ComplexRep") -> "ComplexRep":
        if self.n != other.n:
            raise ValueError("cannot add representations of different groups")
        return ComplexRep(self.n, tuple(a + b for a, b in zip(self.mult, other.mult)))


@dataclass(frozen=True)
class QuatRep:
    """A finite-dimensional quaternionic C_n-representation by multiplicities.

    ``mult[r]`` is the multiplicity of the quaternionic irreducible with
    canonical index r, for 0 <= r <= n//2.
    """

    n: int
    mult: tuple[int, ...]

    def __post_init__(self) -> None:
        check_order(self.n)
        object.__setattr__(self, "mult", _check_mult(self.mult, self.n // 2 + 1))

    @classmethod
    def zero(cls, n: int) -> "QuatRep":
        return cls(n, (0,) * (n // 2 + 1))

    @classmethod
    def of(cls, n: int, *indices: int) -> "QuatRep":
        """Direct sum of quaternionic irreducibles by (unreduced) index.

        >>> QuatRep.of(3, 0, 2).mult   # index 2 reduces to 1
        (1, 1)
        """
        mult = [0] * (n // 2 + 1)
        for r in indices:
            mult[reduce_quat_index(n, r)] += 1
        return cls(n, tuple(mult))

    def multiplicity(self, r: int) -> int:
        return self.mult[reduce_quat_index(self.n, r)]

    def dim(self) -> int:
        """Real dimension: four per quaternionic irreducible summand."""
        return 4 * sum(self.mult)

    def __add__(self, other: "QuatRep") -> "QuatRep":
        if self.n != other.n:
            raise ValueError("cannot add representations of different groups")
        return QuatRep(self.n, tuple(a + b for a, b in zip(self.mult, other.mult)))


def classify_type(phi: IrredComplex) -> str:
    """Type tag of a complex irreducible: ``real`` or ``complex``.

    The Frobenius-Schur indicator (1/n) * sum_k chi(g^(2k)) is a
    geometric sum of n-th roots of unity, so it evaluates exactly to
    n/n = 1 when n divides 2r and to 0/n = 0 otherwise.  The value -1
    never occurs: cyclic groups have no quaternionic-type complex
    irreducibles.

    >>> classify_type(IrredComplex(2, 1))
    'real'
    >>> classify_type(IrredComplex(3, 1))
    'complex'
    """
    indicator = (phi.n if (2 * phi.r) % phi.n == 0 else 0) // phi.n
    return REAL if indicator == 1 else COMPLEX


def extend(v: ComplexRep) -> QuatRep:
    """Extension of scalars to the quaternions, irreducible by irreducible.

    The complex irreducible of index r extends to the quaternionic one
    of index r (reduced to canonical range); the real dimension doubles.
    """
    n = v.n
    mult = [0] * (n // 2 + 1)
    for r, m in enumerate(v.mult):
        mult[reduce_quat_index(n, r)] += m
    return QuatRep(n, tuple(mult))


def restrict_quat(w: QuatRep) -> ComplexRep:
    """Underlying complex representation of a quaternionic one.

    Each quaternionic irreducible of index r restricts to the sum of
    the complex irreducibles with indices r and -r, so the total real
    dimension is preserved.

    >>> restrict_quat(QuatRep.of(2, 1)).mult
    (0, 2)
    """
    n = w.n
    mult = [0] * n
    for r, m in enumerate(w.mult):
        mult[r % n] += m
        mult[(n - r) % n] += m
    return ComplexRep(n, tuple(mult))


def restrict_subgroup(v: ComplexRep, d: int) -> ComplexRep:
    """Restrict to the index-d subgroup, viewed as a C_{n/d}-representation.

    Requires d | n.  The irreducible of index r restricts to the
    irreducible of index r mod (n/d), so multiplicities accumulate along
    residue classes and the dimension is preserved.

    >>> restrict_subgroup(ComplexRep.of(6, 2), 2).mult
    (0, 0, 1)
    """
    if d < 1 or v.n % d != 0:
        raise ValueError(f"d={d} does not divide the group order {v.n}")
    m = v.n // d
    mult = [0] * m
    for r, a in enumerate(v.mult):
        mult[r % m] += a
    return ComplexRep(m, tuple(mult))


def isotypical_dim_quat(w: QuatRep, r: int) -> int:
    """Real dimension of the quaternionic isotypical component at index r."""
    return 4 * w.multiplicity(r)


def isotypical_dim_complex(w: QuatRep, r: int) -> int:
    """Real dimension of the complex isotypical component at index r,
    computed from the quaternionic multiplicities.

    When 2r = 0 mod n the quaternionic component is already complex-
    isotypical and the two dimensions agree; otherwise it splits into
    conjugate halves and the complex component is half as large.
    """
    dim_h = isotypical_dim_quat(w, r)
    if (2 * r) % w.n == 0:
        return dim_h
    return dim_h // 2


def tensor_phi(k: int, v: ComplexRep) -> ComplexRep:
    """Tensor with the complex irreducible of index k.

    Tensoring shifts every rotation index by k, so the multiplicity of
    index t in the product is the multiplicity of t - k in v.
    """
    n = v.n
    return ComplexRep(n, tuple(v.mult[(t - k) % n] for t in range(n)))


def tensor_phi_fixed_dim(k: int, v: ComplexRep) -> int:
    """Real dimension of the full fixed subspace of (index-k irreducible) (x) v.

    Equals the dimension of the isotypical component of v at index -k.

    >>> tensor_phi_fixed_dim(1, ComplexRep.of(3, 2))
    2
    """
    return 2 * v.mult[(-k) % v.n]


def fixed_dim_profile(v: ComplexRep) -> dict[int, int]:
    """Fixed real dimension under every subgroup, keyed by divisor.

    The key d stands for the subgroup generated by the d-th power of the
    chosen generator (so d = 1 is the whole group and d = n the trivial
    subgroup).  An irreducible of index r is fixed by that subgroup
    exactly when (n/d) divides r.

    >>> fixed_dim_profile(ComplexRep.of(4, 2))
    {1: 0, 2: 2, 4: 2}
    """
    n = v.n
    profile = {}
    for d in divisors(n):
        m = n // d
        profile[d] = 2 * sum(a for r, a in enumerate(v.mult) if r % m == 0)
    return profile
