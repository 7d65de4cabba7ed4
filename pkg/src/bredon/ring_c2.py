"""The multiplicative C_2-equivariant cohomology ring of the infinite
quaternionic projective space, in normal form.

Elements are integer combinations of monomials ``e^a * x^b * c^i * CC^j``
where ``e`` (degree: one sign summand) and ``x`` (degree: two sign
summands minus two trivial ones) generate the cone of point classes used
here, and ``c`` (degree 4*sigma) and ``CC`` (degree 4 + 4*sigma) are the
two ring generators.  The square of ``c`` rewrites to
``e^4*c + x^2*CC``, which caps the c-exponent at one and makes the
normal form unique, so equality is syntactic.

A monomial's grading class is m + s*sigma with m = -2b + 4j and
s = a + 2b + 4i + 4j, plotted at table position
(fixed, total) = (-2b + 4j, a + 4i + 8j).  Its coefficient is 2-torsion
exactly when a >= 1 and b >= 1 (the position of ``e^a*x^b`` in the point
table carries Z/2 there); such coefficients are stored reduced to {0,1}.
Only this non-negative cone of point classes is modelled.  As with the
point table itself, products landing outside the published table window
use the extrapolated pattern.

Three evaluations embed the ring for comparison purposes: the underlying
nonequivariant polynomial ring (``e`` dies, ``x`` is trivialized to 1,
``c`` and ``CC`` map to the first and second powers of the degree-4
generator), and the cohomology of each of the two fixed components,
polynomial rings on generators ``x0`` and ``x1`` over the point classes,
where ``c`` maps to ``delta_r + x^2*x_r`` (``delta_r`` is 0 for the
component of even index and ``e^4`` for the odd one) and ``CC`` maps to
``x_r * (e^4 + x^2*x_r)``.  Filtration level m truncates the
nonequivariant ring at the m-th power and the fixed rings at powers
ceil(m/2) and floor(m/2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, NamedTuple, Optional


class Monomial(NamedTuple):
    eps: int  # exponent of e
    xi: int  # exponent of x
    c: int  # exponent of c; 0 or 1 after normalization
    cc: int  # exponent of CC


def monomial_position(mono: Monomial) -> tuple[int, int]:
    """Table position (fixed dim, total dim) of a monomial's grading class.

    Stable under the c-squared rewrite, so it is well defined even for
    unnormalized exponents.
    """
    return (-2 * mono.xi + 4 * mono.cc, mono.eps + 4 * mono.c + 8 * mono.cc)


def monomial_degree_ms(mono: Monomial) -> tuple[int, int]:
    """Grading class (m, s), meaning m trivial plus s sign summands."""
    return (
        -2 * mono.xi + 4 * mono.cc,
        mono.eps + 2 * mono.xi + 4 * mono.c + 4 * mono.cc,
    )


def _is_torsion(eps: int, xi: int) -> bool:
    return eps >= 1 and xi >= 1


def _reduce_coeff(eps: int, xi: int, coeff: int) -> int:
    return coeff % 2 if _is_torsion(eps, xi) else coeff


@dataclass(frozen=True)
class RingElement:
    """A homogeneous element in normal form: sorted monomial/coefficient
    pairs with no squared c, torsion coefficients reduced, zeros pruned.
    The zero element has no terms and acts as identity for addition in
    any degree."""

    terms: tuple[tuple[Monomial, int], ...]

    @classmethod
    def _from_dict(cls, data: dict[Monomial, int]) -> "RingElement":
        # Rewrite away c-exponents above 1; each step lowers the exponent
        # by 2, so this terminates.
        work = list(data.items())
        flat: dict[Monomial, int] = {}
        while work:
            mono, co = work.pop()
            if co == 0:
                continue
            if mono.c >= 2:
                a, b, i, j = mono
                work.append((Monomial(a + 4, b, i - 1, j), co))
                work.append((Monomial(a, b + 2, i - 2, j + 1), co))
            else:
                flat[mono] = flat.get(mono, 0) + co
        out = {}
        for mono, co in flat.items():
            co = _reduce_coeff(mono.eps, mono.xi, co)
            if co != 0:
                out[mono] = co
        positions = {monomial_position(m) for m in out}
        if len(positions) > 1:
            raise ValueError(
                f"element mixes distinct degrees at positions {sorted(positions)}"
            )
        return cls(tuple(sorted(out.items(), reverse=True)))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def position(self) -> Optional[tuple[int, int]]:
        """Table position of the (homogeneous) element; None when zero."""
        if self.is_zero:
            return None
        return monomial_position(self.terms[0][0])

    def degree_ms(self) -> Optional[tuple[int, int]]:
        if self.is_zero:
            return None
        return monomial_degree_ms(self.terms[0][0])

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.position() != other.position():
            raise ValueError(
                "cannot add homogeneous elements of distinct degrees: "
                f"positions {self.position()} and {other.position()}"
            )
        data = dict(self.terms)
        for mono, co in other.terms:
            data[mono] = data.get(mono, 0) + co
        return RingElement._from_dict(data)

    def __neg__(self) -> "RingElement":
        return RingElement._from_dict({m: -co for m, co in self.terms})

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, other) -> "RingElement":
        if isinstance(other, int):
            return other * self
        data: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                mono = Monomial(m1.eps + m2.eps, m1.xi + m2.xi, m1.c + m2.c, m1.cc + m2.cc)
                data[mono] = data.get(mono, 0) + c1 * c2
        return RingElement._from_dict(data)

    def __rmul__(self, scalar: int) -> "RingElement":
        return RingElement._from_dict({m: scalar * co for m, co in self.terms})

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = one()
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        return format_element(self)


def zero() -> RingElement:
    return RingElement(())


def one() -> RingElement:
    return monomial()


def monomial(eps: int = 0, xi: int = 0, c: int = 0, cc: int = 0, coeff: int = 1) -> RingElement:
    if min(eps, xi, c, cc) < 0:
        raise ValueError("exponents must be non-negative")
    return RingElement._from_dict({Monomial(eps, xi, c, cc): coeff})


def eps(k: int = 1) -> RingElement:
    return monomial(eps=k)


def xi(k: int = 1) -> RingElement:
    return monomial(xi=k)


def gen_c() -> RingElement:
    return monomial(c=1)


def gen_cc() -> RingElement:
    return monomial(cc=1)


# ---------------------------------------------------------------------------
# Evaluation targets


@dataclass(frozen=True)
class SunElement:
    """Polynomial in the degree-4 nonequivariant generator, optionally
    truncated (trunc means that power and above vanish)."""

    terms: tuple[tuple[int, int], ...]  # (exponent, coefficient), sorted desc
    trunc: Optional[int] = None

    @classmethod
    def _from_dict(cls, data: dict[int, int], trunc: Optional[int]) -> "SunElement":
        out = {
            k: co
            for k, co in data.items()
            if co != 0 and (trunc is None or k < trunc)
        }
        return cls(tuple(sorted(out.items(), reverse=True)), trunc)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SunElement") -> "SunElement":
        if self.trunc != other.trunc:
            raise ValueError("cannot add at distinct truncation levels")
        data = dict(self.terms)
        for k, co in other.terms:
            data[k] = data.get(k, 0) + co
        return SunElement._from_dict(data, self.trunc)

    def __mul__(self, other: "SunElement") -> "SunElement":
        if self.trunc != other.trunc:
            raise ValueError("cannot multiply at distinct truncation levels")
        data: dict[int, int] = {}
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                data[k1 + k2] = data.get(k1 + k2, 0) + c1 * c2
        return SunElement._from_dict(data, self.trunc)

    def __rmul__(self, scalar: int) -> "SunElement":
        return SunElement._from_dict({k: scalar * co for k, co in self.terms}, self.trunc)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, co in self.terms:
            body = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
            parts.append(_signed_part(co, body, first=not parts))
        return "".join(parts)


FixedKey = tuple[int, int, int]  # (eps exponent, xi exponent, x_r exponent)


@dataclass(frozen=True)
class FixedRingElement:
    """Polynomial in the fixed-component generator x_r with point-class
    coefficients; coefficients with both e- and x-exponent positive are
    2-torsion and stored reduced.  ``trunc`` records the power of x_r
    that vanishes (and all higher ones)."""

    r: int
    terms: tuple[tuple[FixedKey, int], ...]
    trunc: Optional[int] = None

    @classmethod
    def _from_dict(
        cls, r: int, data: dict[FixedKey, int], trunc: Optional[int]
    ) -> "FixedRingElement":
        out = {}
        for key, co in data.items():
            if trunc is not None and key[2] >= trunc:
                continue
            co = _reduce_coeff(key[0], key[1], co)
            if co != 0:
                out[key] = co
        return cls(r, tuple(sorted(out.items(), reverse=True)), trunc)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FixedRingElement") -> "FixedRingElement":
        if self.r != other.r or self.trunc != other.trunc:
            raise ValueError("cannot add across components or truncation levels")
        data = dict(self.terms)
        for key, co in other.terms:
            data[key] = data.get(key, 0) + co
        return FixedRingElement._from_dict(self.r, data, self.trunc)

    def __mul__(self, other: "FixedRingElement") -> "FixedRingElement":
        if self.r != other.r or self.trunc != other.trunc:
            raise ValueError("cannot multiply across components or truncation levels")
        data: dict[FixedKey, int] = {}
        for (a1, b1, k1), c1 in self.terms:
            for (a2, b2, k2), c2 in other.terms:
                key = (a1 + a2, b1 + b2, k1 + k2)
                data[key] = data.get(key, 0) + c1 * c2
        return FixedRingElement._from_dict(self.r, data, self.trunc)

    def __rmul__(self, scalar: int) -> "FixedRingElement":
        return FixedRingElement._from_dict(
            self.r, {key: scalar * co for key, co in self.terms}, self.trunc
        )

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for (a, b, k), co in self.terms:
            factors = []
            if a:
                factors.append("e" if a == 1 else f"e^{a}")
            if b:
                factors.append("x" if b == 1 else f"x^{b}")
            if k:
                factors.append(f"x{self.r}" if k == 1 else f"x{self.r}^{k}")
            body = "*".join(factors) if factors else "1"
            parts.append(_signed_part(co, body, first=not parts))
        return "".join(parts)


def fixed_monomial(
    r: int,
    eps: int = 0,
    xi: int = 0,
    power: int = 0,
    coeff: int = 1,
    trunc: Optional[int] = None,
) -> FixedRingElement:
    return FixedRingElement._from_dict(r, {(eps, xi, power): coeff}, trunc)


def fixed_zero(r: int, trunc: Optional[int] = None) -> FixedRingElement:
    return FixedRingElement(r, (), trunc)


def sun_monomial(power: int = 0, coeff: int = 1, trunc: Optional[int] = None) -> SunElement:
    return SunElement._from_dict({power: coeff}, trunc)


# ---------------------------------------------------------------------------
# The three evaluations


def eval_sun(u: RingElement, level: Optional[int] = None) -> SunElement:
    """Underlying nonequivariant value: e dies, x trivializes to 1, c and
    CC map to the first and second power of the degree-4 generator.
    ``level`` truncates at that power of the generator.

    >>> str(eval_sun(gen_c() * gen_c()))
    'x^2'
    """
    data: dict[int, int] = {}
    for mono, co in u.terms:
        if mono.eps >= 1:
            continue
        k = mono.c + 2 * mono.cc
        data[k] = data.get(k, 0) + co
    return SunElement._from_dict(data, level)


def fixed_truncation(r: int, level: Optional[int]) -> Optional[int]:
    """Vanishing power of x_r at a filtration level: the even-index fixed
    component of level m is a quaternionic projective space of dimension
    ceil(m/2) - 1 and the odd one of dimension floor(m/2) - 1."""
    if level is None:
        return None
    return (level + 1) // 2 if r == 0 else level // 2


def eval_fixed(u: RingElement, r: int, level: Optional[int] = None) -> FixedRingElement:
    """Image in the cohomology of the index-r fixed component.

    Substitutes c -> delta_r + x^2*x_r and CC -> x_r*(e^4 + x^2*x_r),
    with delta_r equal to 0 for even r and e^4 for odd r, then reduces
    coefficients and truncates per the filtration level.

    >>> str(eval_fixed(gen_c() * gen_c(), 1))
    'e^8 + x^4*x1^2'
    >>> str(eval_fixed(gen_cc(), 0, level=3))
    'e^4*x0'
    """
    if r not in (0, 1):
        raise ValueError("fixed component index must be 0 or 1")
    trunc = fixed_truncation(r, level)
    data: dict[FixedKey, int] = {}
    for mono, co in u.terms:
        heads: list[tuple[FixedKey, int]]
        if mono.c == 0:
            heads = [((mono.eps, mono.xi, 0), co)]
        else:
            heads = [((mono.eps, mono.xi + 2, 1), co)]
            if r % 2 == 1:
                heads.append(((mono.eps + 4, mono.xi, 0), co))
        # CC^j expands binomially: sum_t C(j,t) e^(4(j-t)) x^(2t) x_r^(j+t)
        for (a, b, k), v in heads:
            for t in range(mono.cc + 1):
                key = (a + 4 * (mono.cc - t), b + 2 * t, k + mono.cc + t)
                data[key] = data.get(key, 0) + v * comb(mono.cc, t)
    return FixedRingElement._from_dict(r, data, trunc)


# ---------------------------------------------------------------------------
# Relation checking


@dataclass(frozen=True)
class EvaluationPair:
    name: str
    lhs: object
    rhs: object

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class RelationReport:
    pairs: tuple[EvaluationPair, ...]

    @property
    def passed(self) -> bool:
        return all(p.equal for p in self.pairs)

    def failing(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.pairs if not p.equal)


def relation_report(rhs: Optional[RingElement] = None, square_scale: int = 1) -> RelationReport:
    """Compare the square of c, computed inside each evaluation target,
    against the image of a claimed value for it (by default
    e^4*c + x^2*CC).  ``square_scale`` multiplies the squared side, for
    probing perturbed relations."""
    c = gen_c()
    if rhs is None:
        rhs = eps(4) * c + xi(2) * gen_cc()
    pairs = []
    evaluations: tuple[tuple[str, Callable[[RingElement], object]], ...] = (
        ("sun", lambda u: eval_sun(u)),
        ("fixed0", lambda u: eval_fixed(u, 0)),
        ("fixed1", lambda u: eval_fixed(u, 1)),
    )
    for name, ev in evaluations:
        lhs_img = square_scale * (ev(c) * ev(c))  # type: ignore[operator]
        pairs.append(EvaluationPair(name, lhs_img, ev(rhs)))
    return RelationReport(tuple(pairs))


def check_relation() -> RelationReport:
    """Verify c^2 = e^4*c + x^2*CC under all three evaluations."""
    return relation_report()


# ---------------------------------------------------------------------------
# The module generators at finite filtration levels


@dataclass(frozen=True)
class NuRecord:
    """The new module generator entering at filtration level n, together
    with its three images at level n+1 and the closed-form values they
    must equal: the n-th power of the nonequivariant generator, and on
    the fixed components e^(2n)*x0^(n/2) / 0 for even n and
    0 / e^(2n+2)*x1^((n-1)/2) for odd n."""

    n: int
    element: RingElement
    level: int
    sun_image: SunElement
    fixed0_image: FixedRingElement
    fixed1_image: FixedRingElement
    expected_sun: SunElement
    expected_fixed0: FixedRingElement
    expected_fixed1: FixedRingElement

    @property
    def passed(self) -> bool:
        return (
            self.sun_image == self.expected_sun
            and self.fixed0_image == self.expected_fixed0
            and self.fixed1_image == self.expected_fixed1
        )


def nu_class(n: int) -> NuRecord:
    """The generator entering at level n: CC^(n/2) for even n, c*CC^((n-1)/2)
    for odd n, verified at level n + 1.

    >>> nu_class(2).element == gen_cc()
    True
    """
    if n < 1:
        raise ValueError("level must be at least 1")
    if n % 2 == 0:
        element = monomial(cc=n // 2)
    else:
        element = monomial(c=1, cc=(n - 1) // 2)
    level = n + 1
    sun_image = eval_sun(element, level=level)
    fixed0 = eval_fixed(element, 0, level=level)
    fixed1 = eval_fixed(element, 1, level=level)
    t0 = fixed_truncation(0, level)
    t1 = fixed_truncation(1, level)
    if n % 2 == 0:
        exp0 = fixed_monomial(0, eps=2 * n, power=n // 2, trunc=t0)
        exp1 = fixed_zero(1, trunc=t1)
    else:
        exp0 = fixed_zero(0, trunc=t0)
        exp1 = fixed_monomial(1, eps=2 * n + 2, power=(n - 1) // 2, trunc=t1)
    expected_sun = sun_monomial(power=n, trunc=level)
    return NuRecord(
        n, element, level, sun_image, fixed0, fixed1, expected_sun, exp0, exp1
    )


# ---------------------------------------------------------------------------
# Degreewise bases and the comparison embedding


def monomial_basis(m: int, s: int, jmax: int) -> list[RingElement]:
    """All normal-form monomials of degree m + s*sigma with CC-exponent at
    most jmax.  Solves the position equations -2b + 4j = m and
    a + 4i + 8j = m + s over a, b >= 0, i in {0, 1}.

    >>> [str(u) for u in monomial_basis(0, 4, 2)]
    ['e^4', 'c']
    """
    if jmax < 0:
        raise ValueError("jmax must be non-negative")
    x, y = m, m + s
    out = []
    for j in range(jmax + 1):
        twice_b = 4 * j - x
        if twice_b < 0 or twice_b % 2 != 0:
            continue
        b = twice_b // 2
        for i in (0, 1):
            a = y - 4 * i - 8 * j
            if a >= 0:
                out.append(monomial(eps=a, xi=b, c=i, cc=j))
    out.sort(key=lambda u: u.terms[0][0], reverse=True)
    return out


def _rank_rational(rows: list[list[int]]) -> int:
    mat = [[Fraction(v) for v in row] for row in rows if any(row)]
    rank = 0
    cols = len(rows[0]) if rows else 0
    col = 0
    while mat and col < cols:
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                factor = mat[i][col] / mat[rank][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank


def _rank_gf2(rows: list[list[int]]) -> int:
    masks = []
    for row in rows:
        mask = 0
        for j, v in enumerate(row):
            if v % 2:
                mask |= 1 << j
        if mask:
            masks.append(mask)
    rank = 0
    for _ in range(len(masks)):
        masks = [m for m in masks if m]
        if not masks:
            break
        pivot = masks.pop()
        low = pivot & -pivot
        masks = [m ^ pivot if m & low else m for m in masks]
        rank += 1
    return rank


@dataclass(frozen=True)
class ProbeReport:
    m: int
    s: int
    jmax: int
    basis_size: int
    free_count: int
    torsion_count: int
    independent: bool


def embedding_injectivity_probe(m: int, s: int, jmax: int) -> ProbeReport:
    """Certify that the degree-(m + s*sigma) monomial basis maps to
    independent images under the combined evaluation
    (nonequivariant, fixed component 0, fixed component 1).

    The degree must be even (both m and m + s even), the hypothesis of
    the comparison embedding.  Independence is over the coefficient
    domains: integer independence for monomials with free coefficients,
    mod-2 independence for the 2-torsion ones.  A torsion monomial's
    image lands entirely in 2-torsion coordinates, so the check splits
    into a rational rank condition on the free block and a mod-2 rank
    condition on the torsion block.
    """
    if m % 2 != 0 or (m + s) % 2 != 0:
        raise ValueError(
            f"degree ({m}, {s}) is not even: both the fixed and total "
            "dimensions must be even"
        )
    basis = monomial_basis(m, s, jmax)
    free_cols = []
    torsion_cols = []
    coord_index: dict[tuple, int] = {}
    columns = []
    for u in basis:
        mono = u.terms[0][0]
        images = {
            "sun": eval_sun(u),
            "f0": eval_fixed(u, 0),
            "f1": eval_fixed(u, 1),
        }
        col: dict[tuple, int] = {}
        for k, co in images["sun"].terms:
            col[("sun", k, False)] = co
        for name in ("f0", "f1"):
            img = images[name]
            for (a, b, k), co in img.terms:  # type: ignore[union-attr]
                col[(name, a, b, k, _is_torsion(a, b))] = co
        for coord in col:
            coord_index.setdefault(coord, len(coord_index))
        columns.append((col, _is_torsion(mono.eps, mono.xi)))
        (torsion_cols if columns[-1][1] else free_cols).append(len(columns) - 1)

    free_coords = [c for c in coord_index if not c[-1]]
    torsion_coords = [c for c in coord_index if c[-1]]
    # A torsion monomial must not touch a free coordinate.
    for idx in torsion_cols:
        col = columns[idx][0]
        if any(not coord[-1] for coord in col):
            raise AssertionError("torsion monomial produced a free coordinate")

    a_ff = [
        [columns[idx][0].get(coord, 0) for idx in free_cols] for coord in free_coords
    ]
    a_tt = [
        [columns[idx][0].get(coord, 0) for idx in torsion_cols]
        for coord in torsion_coords
    ]
    free_ok = _rank_rational(a_ff) == len(free_cols) if free_cols else True
    torsion_ok = _rank_gf2(a_tt) == len(torsion_cols) if torsion_cols else True
    return ProbeReport(
        m,
        s,
        jmax,
        len(basis),
        len(free_cols),
        len(torsion_cols),
        free_ok and torsion_ok,
    )


# ---------------------------------------------------------------------------
# Parsing and printing


def _signed_part(co: int, body: str, first: bool) -> str:
    sign = "-" if co < 0 else "+"
    mag = abs(co)
    coeff = "" if (mag == 1 and body != "1") else str(mag)
    joint = "*" if coeff and body != "1" else ""
    shown = f"{coeff}{joint}{body}" if body != "1" else (coeff or "1")
    if first:
        return f"-{shown}" if co < 0 else shown
    return f" {sign} {shown}"


def format_element(u: RingElement) -> str:
    """Canonical text form, e.g. ``e^4*c + x^2*CC``; zero prints as 0."""
    if u.is_zero:
        return "0"
    parts = []
    for mono, co in u.terms:
        factors = []
        if mono.eps:
            factors.append("e" if mono.eps == 1 else f"e^{mono.eps}")
        if mono.xi:
            factors.append("x" if mono.xi == 1 else f"x^{mono.xi}")
        if mono.c:
            factors.append("c")
        if mono.cc:
            factors.append("CC" if mono.cc == 1 else f"CC^{mono.cc}")
        body = "*".join(factors) if factors else "1"
        parts.append(_signed_part(co, body, first=not parts))
    return "".join(parts)


_TOKEN = re.compile(r"\s*(CC|e|x|c|\d+|\^|\*|\+|-)")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            rest = text[pos:].strip()
            raise ValueError(f"cannot parse expression at {rest!r}")
        tokens.append(match.group(1))
        pos = match.end()
    return tokens


def parse_element(text: str) -> RingElement:
    """Parse an expression in the generators: integer coefficients and the
    symbols e, x, c, CC combined with ``*`` and ``^`` and added with
    ``+``/``-``.  Sums must be homogeneous; mixing degrees is an error
    reporting both positions.

    >>> parse_element("e^4*c + x^2*CC") == eps(4) * gen_c() + xi(2) * gen_cc()
    True
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty expression")
    result = zero()
    idx = 0

    def parse_factor() -> RingElement:
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        if tok.isdigit():
            return int(tok) * one()
        if tok in ("e", "x", "c", "CC"):
            power = 1
            if idx < len(tokens) and tokens[idx] == "^":
                idx += 1
                if idx >= len(tokens) or not tokens[idx].isdigit():
                    raise ValueError("expected an integer exponent after '^'")
                power = int(tokens[idx])
                idx += 1
            if tok == "e":
                return monomial(eps=power)
            if tok == "x":
                return monomial(xi=power)
            if tok == "c":
                return monomial(c=power)
            return monomial(cc=power)
        raise ValueError(f"unexpected token {tok!r}")

    def parse_term() -> RingElement:
        nonlocal idx
        sign = 1
        while idx < len(tokens) and tokens[idx] in ("+", "-"):
            if tokens[idx] == "-":
                sign = -sign
            idx += 1
        if idx >= len(tokens):
            raise ValueError("dangling sign at end of expression")
        term = parse_factor()
        while idx < len(tokens) and tokens[idx] == "*":
            idx += 1
            if idx >= len(tokens):
                raise ValueError("dangling '*' at end of expression")
            term = term * parse_factor()
        return sign * term if sign < 0 else term

    result = parse_term()
    while idx < len(tokens):
        if tokens[idx] not in ("+", "-"):
            raise ValueError(f"expected '+' or '-' but found {tokens[idx]!r}")
        result = result + parse_term()
    return result
