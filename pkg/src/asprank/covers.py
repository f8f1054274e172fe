"""Explicit Artin-Schreier covers y^p - y = f(x) of the projective line over a finite field.

The geometric data (branch points, lower jumps, genus, p-rank) come from the
standard form of f: the partial fraction decomposition of f over the splitting
field of its denominator, with every term c (x - P)^(-p w) replaced by
c^(1/p) (x - P)^(-w) and the additive constant dropped.

Point counts and the zeta-function p-rank are computed independently from the
Deuring-Shafarevich count, and both are compared in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import DegenerateCoverError, DisconnectedCoverError, FieldSizeError, OracleError
from .fieldarith import (
    DEFAULT_MAX_FIELD_SIZE,
    GF,
    Embedding,
    FieldElement,
    FiniteField,
    Poly,
    embedding,
    extension,
    factor_squarefree_roots,
    poly_gcd,
)
from .strata import Partition

MAX_SPLITTING_DEGREE = 8
DEFAULT_MAX_GENUS = 5


@dataclass(frozen=True)
class RationalFunction:
    """numerator / denominator in lowest terms with a monic denominator."""

    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if num.field != den.field:
            raise ValueError("numerator and denominator over different fields")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.field.inv(den.leading)
        object.__setattr__(self, "numerator", num.scale(lead))
        object.__setattr__(self, "denominator", den.scale(lead))

    @classmethod
    def from_coeffs(cls, field: FiniteField, numerator, denominator=(1,)) -> "RationalFunction":
        return cls(Poly(field, numerator), Poly(field, denominator))

    @classmethod
    def polynomial(cls, f: Poly) -> "RationalFunction":
        return cls(f, Poly(f.field, (1,)))

    @property
    def field(self) -> FiniteField:
        return self.numerator.field

    def is_constant(self) -> bool:
        return self.numerator.degree <= 0 and self.denominator.degree == 0

    def __add__(self, other):
        if isinstance(other, (int, FieldElement, Poly)):
            other = RationalFunction.polynomial(
                other if isinstance(other, Poly) else Poly(self.field, (other,)))
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __call__(self, x) -> FieldElement | None:
        """Value at x, or None at a pole."""
        den = self.denominator(x)
        if not den:
            return None
        return self.numerator(x) / den

    def embed(self, emb: Embedding) -> "RationalFunction":
        return RationalFunction(emb.poly(self.numerator), emb.poly(self.denominator))

    def __repr__(self):
        if self.denominator.degree == 0:
            return f"({self.numerator!r})"
        return f"({self.numerator!r})/({self.denominator!r})"


def splitting_field(f: Poly, max_degree: int = MAX_SPLITTING_DEGREE,
                    max_field_size: int = DEFAULT_MAX_FIELD_SIZE):
    """Smallest extension of f's field over which f splits into linear factors.

    Returns ``(field, embedding, [(root encoding, multiplicity), ...])``.
    """
    base = f.field
    for m in range(1, max_degree + 1):
        if base.q**m > max_field_size:
            break
        F = extension(base, m, max_field_size)
        emb = embedding(base, F)
        roots, rest = factor_squarefree_roots(emb.poly(f))
        if rest.degree <= 0:
            return F, emb, [(r.value, mult) for r, mult in roots]
    raise FieldSizeError(f"{f!r} does not split within degree {max_degree} and size {max_field_size}")


@dataclass(frozen=True)
class PartialFractions:
    """f = poly_part + sum over poles P of sum_i principal[P][i-1] * (x - P)^(-i), over ``field``."""

    base: FiniteField
    field: FiniteField
    embedding: Embedding
    poly_part: Poly
    principal: dict

    def recompose(self) -> RationalFunction:
        return _assemble(self.field, self.poly_part, self.principal)


def _assemble(F: FiniteField, poly_part: Poly, principal: dict) -> RationalFunction:
    den = Poly(F, (1,))
    for P, cs in principal.items():
        den = den * Poly.linear(F, P) ** len(cs)
    num = poly_part * den
    for P, cs in principal.items():
        lin = Poly.linear(F, P)
        other = den // lin ** len(cs)
        for i, c in enumerate(cs, start=1):
            if c:
                num = num + (lin ** (len(cs) - i) * other).scale(c)
    return RationalFunction(num, den)


def partial_fractions(f, max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> PartialFractions:
    """Partial fraction decomposition of a rational function (or of a cover's f)."""
    if isinstance(f, ASCover):
        f = f.f
    if f.is_constant():
        raise DegenerateCoverError("f is constant")
    quo, rem = divmod(f.numerator, f.denominator)
    F, emb, roots = splitting_field(f.denominator, max_field_size=max_field_size)
    rem_e, den_e = emb.poly(rem), emb.poly(f.denominator)
    principal = {}
    for P, m in roots:
        lin = Poly.linear(F, P)
        shifted_num = rem_e.shift(P)
        shifted_den = (den_e // lin**m).shift(P)
        inv0 = F.inv(shifted_den[0])
        taylor = []
        for k in range(m):
            acc = shifted_num[k]
            for j in range(1, k + 1):
                acc = F.sub(acc, F.mul(shifted_den[j], taylor[k - j]))
            taylor.append(F.mul(acc, inv0))
        principal[P] = tuple(taylor[m - i] for i in range(1, m + 1))
    return PartialFractions(f.field, F, emb, emb.poly(quo), principal)


def _reduce_indices(F: FiniteField, cs: list[int]) -> list[int]:
    # cs[i] multiplies u^i with u = 1/(x - P) or u = x; index 0 is left alone
    p = F.p
    cs = list(cs)
    for i in range(len(cs) - 1, 0, -1):
        if i % p == 0 and cs[i]:
            cs[i // p] = F.add(cs[i // p], F.pth_root(cs[i]))
            cs[i] = 0
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


@dataclass(frozen=True)
class StandardForm:
    decomposition: PartialFractions
    poly_part: Poly
    principal: dict
    constant: int
    reduced: RationalFunction


@dataclass(frozen=True)
class Place:
    point: FieldElement | None
    lower_jump: int

    @property
    def is_infinite(self) -> bool:
        return self.point is None


@dataclass(frozen=True)
class RamificationData:
    field: FiniteField
    places: tuple[Place, ...]
    partition: Partition


@dataclass(frozen=True)
class CoverInvariants:
    genus: int
    p_rank: int
    r: int
    d: int


@dataclass(frozen=True)
class ASCover:
    """The cover y^p - y = f(x) over ``field``."""

    field: FiniteField
    f: RationalFunction

    def __post_init__(self):
        if self.f.field != self.field:
            raise ValueError(f"f is defined over {self.f.field}, not {self.field}")
        if self.f.is_constant():
            raise DegenerateCoverError("f is constant")

    @classmethod
    def from_coeffs(cls, field: FiniteField, numerator, denominator=(1,)) -> "ASCover":
        return cls(field, RationalFunction.from_coeffs(field, numerator, denominator))

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def q(self) -> int:
        return self.field.q

    def __repr__(self):
        return f"ASCover(y^{self.p} - y = {self.f!r} over {self.field!r})"

    def base_change(self, m: int, max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> "ASCover":
        F = extension(self.field, m, max_field_size)
        return ASCover(F, self.f.embed(embedding(self.field, F)))

    @cached_property
    def _standard(self) -> StandardForm:
        pf = partial_fractions(self.f)
        F = pf.field
        poly = list(pf.poly_part.coeffs) or [0]
        constant = pf.embedding.preimage(poly[0])
        poly = _reduce_indices(F, [0] + poly[1:])
        principal = {}
        for P, cs in pf.principal.items():
            red = _reduce_indices(F, [0] + list(cs))
            if red:
                principal[P] = tuple(red[1:])
        if not principal and len(poly) <= 1:
            raise DisconnectedCoverError(f"{self!r} is geometrically disconnected")
        reduced = _assemble(F, Poly(F, poly), principal)
        emb = pf.embedding
        reduced = RationalFunction(emb.preimage_poly(reduced.numerator),
                                   emb.preimage_poly(reduced.denominator))
        return StandardForm(pf, Poly(F, poly), principal, constant, reduced)

    @cached_property
    def _ramification(self) -> RamificationData:
        sf = self._standard
        F = sf.decomposition.field
        places = [Place(FieldElement(F, P), len(cs)) for P, cs in sorted(sf.principal.items())]
        if sf.poly_part.degree >= 1:
            places.append(Place(None, sf.poly_part.degree))
        for pl in places:
            assert pl.lower_jump % self.p != 0
        partition = Partition(self.p, tuple(pl.lower_jump + 1 for pl in places))
        return RamificationData(F, tuple(places), partition)


def standard_form(cover: ASCover) -> ASCover:
    """Equivalent cover whose principal parts have no index divisible by p and no constant term."""
    return ASCover(cover.field, cover._standard.reduced)


def ramification_data(cover: ASCover) -> RamificationData:
    return cover._ramification


def genus(cover: ASCover) -> int:
    E = cover._ramification.partition
    return (sum(E.parts) - 2) * (cover.p - 1) // 2


def p_rank_DS(cover: ASCover) -> int:
    """Deuring-Shafarevich: (number of geometric branch points - 1) * (p - 1)."""
    return (len(cover._ramification.places) - 1) * (cover.p - 1)


def invariants(cover: ASCover) -> CoverInvariants:
    E = cover._ramification.partition
    return CoverInvariants(genus=genus(cover), p_rank=p_rank_DS(cover), r=E.r, d=E.d)


def point_count(cover: ASCover, i: int = 1, max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> int:
    """Number of F_{q^i}-points on the smooth projective model of the cover.

    Counted on y^p - y = f'(x) + c0, with f' the standard form and c0 the dropped
    constant.  That equation differs from the original by delta^p - delta for a
    delta defined over F_q, so both have the same points, and its poles are
    exactly the branch points, each carrying a single point.
    """
    if i < 1:
        raise ValueError("extension degree must be positive")
    base = cover.field
    if base.q**i > max_field_size:
        raise FieldSizeError(f"F_{base.q}^{i} exceeds the bound {max_field_size}")
    sf = cover._standard
    F = extension(base, i, max_field_size)
    emb = embedding(base, F)
    num, den = emb.poly(sf.reduced.numerator), emb.poly(sf.reduced.denominator)
    c0 = emb(sf.constant)
    nv = F.evaluate_all(num.coeffs)
    dv = F.evaluate_all(den.coeffs)
    poles = dv == 0
    values = F.vadd(F.vmul(nv, F.vinv(dv)), c0)
    hits = (F.vtrace(values) == 0) & ~poles
    count = cover.p * int(np.count_nonzero(hits)) + int(np.count_nonzero(poles))
    if num.degree > den.degree:
        count += 1
    else:
        at_infinity = F.div(num.leading, den.leading) if num.degree == den.degree else 0
        if F.trace(F.add(at_infinity, c0)) == 0:
            count += cover.p
    return count


@dataclass(frozen=True)
class ZetaData:
    q: int
    genus: int
    counts: tuple[int, ...]
    L: tuple[int, ...]
    p_rank: int


def _newton_L(q: int, g: int, power_sums: list[int]) -> list[int]:
    # L(T) = prod(1 - a_j T), given S_k = sum a_j^k for k = 1..g
    b = [1]
    for k in range(1, g + 1):
        acc = -sum(power_sums[i - 1] * b[k - i] for i in range(1, k + 1))
        if acc % k:
            raise OracleError(f"Newton identity not integral at k={k}")
        b.append(acc // k)
    for k in range(g + 1, 2 * g + 1):
        b.append(q ** (k - g) * b[2 * g - k])
    return b


def _power_sum_from_L(b: list[int], k: int, known: list[int]) -> int:
    # S_k from Newton's identity, with b_j = 0 beyond deg L
    bk = b[k] if k < len(b) else 0
    return -k * bk - sum(known[i - 1] * (b[k - i] if k - i < len(b) else 0) for i in range(1, k))


def zeta_data(cover: ASCover, max_genus: int = DEFAULT_MAX_GENUS,
              max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> ZetaData:
    """L-polynomial of the cover from point counts N_1..N_g and the functional equation.

    When F_{q^(g+1)} is within the size bound, N_{g+1} is counted as well and must
    agree with the value predicted by L, which guards against a wrong genus.
    """
    g = genus(cover)
    if g > max_genus:
        raise OracleError(f"genus {g} exceeds oracle bound {max_genus}")
    q = cover.q
    counts = [point_count(cover, i, max_field_size) for i in range(1, g + 1)]
    sums = [q**i + 1 - n for i, n in enumerate(counts, start=1)]
    for i, a in enumerate(sums, start=1):
        if a * a > 4 * g * g * q**i:
            raise OracleError(f"N_{i} = {counts[i - 1]} violates the Weil bound for genus {g}")
    b = _newton_L(q, g, sums)
    if b[0] != 1 or len(b) != 2 * g + 1 or b[-1] != q**g:
        raise OracleError("L(T) does not have constant term 1 and degree 2g")
    if q ** (g + 1) <= max_field_size:
        n_next = point_count(cover, g + 1, max_field_size)
        predicted = q ** (g + 1) + 1 - _power_sum_from_L(b, g + 1, sums)
        if n_next != predicted:
            raise OracleError(f"N_{g + 1} = {n_next} but L(T) predicts {predicted}")
        counts.append(n_next)
    p = cover.p
    p_rank = max(k for k, c in enumerate(b) if c % p)
    return ZetaData(q=q, genus=g, counts=tuple(counts), L=tuple(b), p_rank=p_rank)


def zeta_prank_oracle(cover: ASCover, max_genus: int = DEFAULT_MAX_GENUS,
                      max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> int:
    """p-rank as the degree of L(T) mod p."""
    return zeta_data(cover, max_genus, max_field_size).p_rank


def cover_with_partition(field: FiniteField, parts, points=None, coefficients=None) -> ASCover:
    """A cover whose ramification partition is ``parts``.

    The largest part sits at infinity as c x^(e-1); each other part e_j sits at a
    distinct finite point a_j as c_j (x - a_j)^(-(e_j - 1)).  Points default to the
    field elements with encodings 0, 1, 2, ...; coefficients default to 1.
    """
    E = Partition(field.p, tuple(parts))
    finite = E.parts[:-1]
    if points is None:
        points = list(range(len(finite)))
    points = [int(a) for a in points]
    if len(points) != len(finite) or len(set(points)) != len(points):
        raise ValueError("need one distinct point per finite pole")
    if coefficients is None:
        coefficients = [1] * len(E.parts)
    coefficients = [int(c) for c in coefficients]
    f = RationalFunction.polynomial(Poly.monomial(field, coefficients[-1], E.parts[-1] - 1))
    for a, e, c in zip(points, finite, coefficients):
        f = f + RationalFunction(Poly(field, (c,)), Poly.linear(field, a) ** (e - 1))
    return ASCover(field, f)


# -- text format -----------------------------------------------------------------

def parse_cover(text: str) -> ASCover:
    """Read a cover from the four-line text format (see README)."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line.split())
    if len(lines) not in (3, 4):
        raise ValueError(f"expected 3 or 4 non-empty lines, got {len(lines)}")
    try:
        p, n = (int(t) for t in lines[0])
    except ValueError:
        raise ValueError("line 1 must be 'p n'") from None
    if lines[1] == ["auto"]:
        field = GF(p, n)
    else:
        modulus = [int(t) for t in lines[1]]
        if any(not 0 <= c < p for c in modulus):
            raise ValueError("modulus coefficients must lie in 0..p-1")
        field = FiniteField(p, n, modulus)
        if field == GF(p, n):
            field = GF(p, n)
    numerator = [_coefficient(field, t) for t in lines[2]]
    denominator = [_coefficient(field, t) for t in lines[3]] if len(lines) == 4 else [1]
    return ASCover.from_coeffs(field, numerator, denominator)


def _coefficient(field: FiniteField, token: str) -> int:
    # either the integer encoding or comma-separated coordinates c0,c1,...
    if "," in token:
        coords = [int(c) for c in token.split(",")]
        if len(coords) > field.n or any(not 0 <= c < field.p for c in coords):
            raise ValueError(f"bad coordinate vector {token!r} for GF({field.p}^{field.n})")
        return field.from_coordinates(coords).value
    value = int(token)
    if not 0 <= value < field.q:
        raise ValueError(f"coefficient {value} out of range for GF({field.p}^{field.n})")
    return value


def format_cover(cover: ASCover) -> str:
    F = cover.field
    return "\n".join([
        f"{F.p} {F.n}",
        " ".join(map(str, F.modulus)),
        " ".join(map(str, cover.f.numerator.coeffs)),
        " ".join(map(str, cover.f.denominator.coeffs)),
    ]) + "\n"


def read_cover(path) -> ASCover:
    return parse_cover(Path(path).read_text(encoding="utf-8"))


def write_cover(cover: ASCover, path) -> None:
    Path(path).write_text(format_cover(cover), encoding="utf-8")
