"""The one-parameter family y^p - y = x^(e-1) / (1 - x t)^e1 and its fibres over finite fields.

At t = 0 the cover has one branch point (at infinity) with lower jump e - 1.  For
t != 0 the branch point splits into infinity, with lower jump e2 - 1, and
x = 1/t, with lower jump e1 - 1, so the p-rank rises by p - 1 while the genus
stays the same.  ``verify_deformation`` checks all of this on explicit fibres.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .covers import (
    DEFAULT_MAX_GENUS,
    ASCover,
    RationalFunction,
    invariants,
    ramification_data,
    zeta_prank_oracle,
)
from .errors import (
    DegenerateCoverError,
    DeformationHypothesisError,
    FieldSizeError,
    NoSuitableSpecializationError,
)
from .fieldarith import DEFAULT_MAX_FIELD_SIZE, GF, FiniteField, Poly, embedding, extension
from .strata import Partition

#: how many successive extensions of the starting field are searched for a usable t0
MAX_RETRY_DEGREE = 4


@dataclass(frozen=True)
class DeformationFamily:
    p: int
    e1: int
    e2: int

    @property
    def e(self) -> int:
        return self.e1 + self.e2

    def __str__(self):
        return f"y^{self.p} - y = x^{self.e - 1}/(1 - x t)^{self.e1}"


def make_family(p: int, e1: int, e2: int) -> DeformationFamily:
    """Family splitting {e1+e2} into {e1, e2}; e1 is made the part divisible by p."""
    failed = []
    if e1 < 2 or e2 < 2:
        failed.append("e1, e2 >= 2")
    if e1 % p == 1 or e2 % p == 1:
        failed.append(f"e1, e2 not congruent to 1 mod {p}")
    if e1 % p and e2 % p:
        failed.append(f"{p} divides e1 or e2")
    if (e1 + e2 - 1) % p == 0:
        failed.append(f"{p} does not divide e1 + e2 - 1")
    if failed:
        raise DeformationHypothesisError(f"(p, e1, e2) = ({p}, {e1}, {e2}) does not satisfy: " + "; ".join(failed))
    if e1 % p:
        e1, e2 = e2, e1
    return DeformationFamily(p, e1, e2)


def _family_function(family: DeformationFamily, t0: int, field: FiniteField) -> RationalFunction:
    one_minus_tx = Poly(field, (1, field.neg(t0)))
    return RationalFunction(Poly.monomial(field, 1, family.e - 1), one_minus_tx**family.e1)


def specialize(family: DeformationFamily, t0, field: FiniteField) -> ASCover:
    """The fibre y^p - y = x^(e-1)/(1 - x t0)^e1 over ``field``."""
    t0 = field(t0).value
    return ASCover(field, _family_function(family, t0, field))


@dataclass(frozen=True)
class FibreSummary:
    partition: tuple[int, ...]
    genus: int
    p_rank: int
    r: int
    d: int
    oracle_p_rank: int | None = None


@dataclass(frozen=True)
class DeformationReport:
    p: int
    e1: int
    e2: int
    field: tuple[int, int]
    t0: int
    special: FibreSummary
    generic: FibreSummary
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> str:
        out = asdict(self)
        out["passed"] = self.passed
        return json.dumps(out, indent=2)


def _summary(cover: ASCover, max_genus: int, max_field_size: int) -> FibreSummary:
    inv = invariants(cover)
    oracle = None
    if inv.genus <= max_genus:
        try:
            oracle = zeta_prank_oracle(cover, max_genus, max_field_size)
        except FieldSizeError:
            oracle = None
    return FibreSummary(ramification_data(cover).partition.parts, inv.genus, inv.p_rank,
                        inv.r, inv.d, oracle)


def _pole_is_split(cover: ASCover, pole: int) -> bool:
    # the generic fibre keeps a branch point at x = 1/t0
    rd = ramification_data(cover)
    target = embedding(cover.field, rd.field)(pole)
    return any(pl.point is not None and pl.point.value == target for pl in rd.places)


def choose_specialization(family: DeformationFamily, field: FiniteField,
                          max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> tuple[FiniteField, int]:
    """First nonzero t0 (by encoding) whose fibre keeps a branch point at 1/t0.

    The starting field is tried first, then its extensions of degree 2, 3, ...
    """
    for m in range(1, MAX_RETRY_DEGREE + 1):
        if field.q**m > max_field_size:
            break
        F = extension(field, m, max_field_size)
        for t0 in range(1, F.q):
            try:
                cover = specialize(family, t0, F)
                if _pole_is_split(cover, F.inv(t0)):
                    return F, t0
            except DegenerateCoverError:
                continue
    raise NoSuitableSpecializationError(f"no t0 in extensions of {field} separates the branch points of {family}")


def verify_deformation(p: int, e1: int, e2: int, field: FiniteField | None = None,
                       max_field_size: int = DEFAULT_MAX_FIELD_SIZE,
                       max_genus: int = DEFAULT_MAX_GENUS) -> DeformationReport:
    """Run the special (t = 0) and a generic (t = t0) fibre through the cover pipeline.

    Checks: special partition {e}; generic partition {e1, e2}; equal genus; p-rank
    up by exactly p - 1; and at x = 1/t0 the standard form has top index e1 - 1
    with nonzero coefficient.  Where the oracle bounds allow, both fibres also get
    a zeta-function p-rank that must match.
    """
    family = make_family(p, e1, e2)
    if field is None:
        field = GF(p)
    F, t0 = choose_specialization(family, field, max_field_size)
    special_cover = specialize(family, 0, F)
    generic_cover = specialize(family, t0, F)
    special = _summary(special_cover, max_genus, max_field_size)
    generic = _summary(generic_cover, max_genus, max_field_size)

    sf = generic_cover._standard
    pole = sf.decomposition.embedding(F.inv(t0))
    top = sf.principal.get(pole, ())
    checks = {
        "special_partition": special.partition == (family.e,),
        "generic_partition": generic.partition == tuple(sorted((family.e1, family.e2))),
        "equal_genus": special.genus == generic.genus,
        "p_rank_jump": generic.p_rank == special.p_rank + (p - 1),
        "leading_term_at_pole": len(top) == family.e1 - 1 and top[-1] != 0,
    }
    for name, fibre in (("special", special), ("generic", generic)):
        if fibre.oracle_p_rank is not None:
            checks[f"{name}_oracle"] = fibre.oracle_p_rank == fibre.p_rank
    return DeformationReport(p=p, e1=family.e1, e2=family.e2, field=(F.p, F.n), t0=t0,
                             special=special, generic=generic, checks=checks)


@dataclass(frozen=True)
class ClosureStepReport:
    p: int
    source: tuple[int, ...]
    target: tuple[int, ...]
    field: tuple[int, int]
    t0: int
    special: FibreSummary
    generic: FibreSummary
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_closure_step(p: int, E, max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> ClosureStepReport:
    """Deform a cover with partition E so that its largest part e >= p+2 splits into {p, e-p}.

    The cover carries e at infinity through the family above and every other part at
    a fixed finite point, so the remaining branch data does not move.
    """
    E = E if isinstance(E, Partition) else Partition(p, tuple(E))
    big = max(E.parts)
    if big < p + 2:
        raise DeformationHypothesisError(f"{E} has no part >= p + 2")
    others = list(E.parts)
    others.remove(big)
    family = make_family(p, p, big - p)
    target = Partition(p, tuple(others) + (p, big - p))

    m = 1
    while p**m < len(others) + 2:
        m += 1
    for degree in range(m, m + MAX_RETRY_DEGREE):
        if p**degree > max_field_size:
            break
        F = GF(p, degree)
        points = list(range(1, len(others) + 1))
        tail = _finite_poles(F, others, points)
        for t0 in range(1, F.q):
            if F.inv(t0) in points:
                continue
            special_cover = ASCover(F, _with_tail(_family_function(family, 0, F), tail))
            generic_cover = ASCover(F, _with_tail(_family_function(family, t0, F), tail))
            try:
                if not _pole_is_split(generic_cover, F.inv(t0)):
                    continue
            except DegenerateCoverError:
                continue
            special = _summary(special_cover, DEFAULT_MAX_GENUS, max_field_size)
            generic = _summary(generic_cover, DEFAULT_MAX_GENUS, max_field_size)
            checks = {
                "special_partition": special.partition == E.parts,
                "generic_partition": generic.partition == target.parts,
                "equal_genus": special.genus == generic.genus,
                "p_rank_jump": generic.p_rank == special.p_rank + (p - 1),
            }
            return ClosureStepReport(p, E.parts, target.parts, (F.p, F.n), t0, special, generic, checks)
    raise NoSuitableSpecializationError(f"no specialization realizes the closure step from {E}")


def _finite_poles(F: FiniteField, parts, points) -> RationalFunction | None:
    out = None
    for a, e in zip(points, parts):
        term = RationalFunction(Poly(F, (1,)), Poly.linear(F, a) ** (e - 1))
        out = term if out is None else out + term
    return out


def _with_tail(f: RationalFunction, tail: RationalFunction | None) -> RationalFunction:
    return f if tail is None else f + tail
