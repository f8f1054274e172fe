"""Partition sets indexing the p-rank strata and the integer invariants attached to them.

For a prime p and d >= 1 (d even when p = 2), the components of the moduli of
Artin-Schreier curves of genus g = d(p-1)/2 with p-rank s = r(p-1) are indexed by
partitions of d+2 into r+1 parts, each part >= 2 and not congruent to 1 mod p.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import InvalidParameters
from .fieldarith import is_prime


@dataclass(frozen=True, order=True)
class Partition:
    p: int
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(int(e) for e in self.parts))
        if not parts:
            raise InvalidParameters("a partition needs at least one part")
        for e in parts:
            if e < 2 or e % self.p == 1:
                raise InvalidParameters(f"part {e} is < 2 or congruent to 1 mod {self.p}")
        object.__setattr__(self, "parts", parts)

    @property
    def d(self) -> int:
        return sum(self.parts) - 2

    @property
    def r(self) -> int:
        return len(self.parts) - 1

    @property
    def s(self) -> int:
        return self.r * (self.p - 1)

    @property
    def g(self) -> int:
        return self.d * (self.p - 1) // 2

    @property
    def lower_jumps(self) -> tuple[int, ...]:
        return tuple(e - 1 for e in self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "{" + ",".join(map(str, self.parts)) + "}"


@dataclass(frozen=True)
class StratumRecord:
    p: int
    d: int
    g: int
    r: int
    s: int
    partition: tuple[int, ...]
    dim_AS: int
    dim_cov: int
    N_E: int
    closure_step: tuple[int, ...] | None = field(default=None)


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidParameters(f"p = {p} is not prime")


def _check_pd(p: int, d: int) -> None:
    _check_prime(p)
    if d < 1:
        raise InvalidParameters(f"d must be >= 1, got {d}")
    if p == 2 and d % 2:
        raise InvalidParameters(f"d must be even when p = 2, got {d}")


def _parts(p: int, total: int, max_part: int, length: int | None = None) -> Iterator[tuple[int, ...]]:
    # descending parts <= max_part, none congruent to 1 mod p, optionally exactly `length` of them
    if total == 0:
        if length in (None, 0):
            yield ()
        return
    if length is not None and (length <= 0 or 2 * length > total or length * max_part < total):
        return
    for e in range(min(total, max_part), 1, -1):
        if e % p == 1:
            continue
        for rest in _parts(p, total - e, e, None if length is None else length - 1):
            yield (e,) + rest


@lru_cache(maxsize=None)
def _omega(p: int, d: int) -> tuple[Partition, ...]:
    found = [Partition(p, tuple(reversed(ps))) for ps in _parts(p, d + 2, d + 2)]
    return tuple(sorted(found, key=lambda E: E.parts))


def enumerate_partitions(p: int, d: int, r: int | None = None) -> list[Partition]:
    """Omega_d, or Omega_{d,r} when r is given, in lexicographic order of ascending parts."""
    _check_pd(p, d)
    if r is None:
        return list(_omega(p, d))
    if r < 0:
        return []
    return sorted((Partition(p, tuple(reversed(ps))) for ps in _parts(p, d + 2, d + 2, r + 1)),
                  key=lambda E: E.parts)


def _as_partition(p: int, E) -> Partition:
    if isinstance(E, Partition):
        if E.p != p:
            raise InvalidParameters(f"partition built for p = {E.p}, not {p}")
        return E
    return Partition(p, tuple(E))


def _floor_sum(p: int, E: Partition) -> int:
    return sum((e - 1) // p for e in E.parts)


def stratum_dimension(p: int, E) -> int:
    """Dimension d - 1 - sum floor((e_j - 1)/p) of the component of AS_{g,s} indexed by E."""
    E = _as_partition(p, E)
    _check_pd(p, E.d)
    dim = E.d - 1 - _floor_sum(p, E)
    if dim < 0:
        raise AssertionError(f"negative dimension for {E}")
    return dim


def cover_stratum_dimension(p: int, E) -> tuple[int, int]:
    """(dimension of the cover stratum, dimension N_E of the fibre over a fixed branch divisor)."""
    E = _as_partition(p, E)
    _check_pd(p, E.d)
    dim_cov = E.d + 2 - _floor_sum(p, E)
    n_e = sum(dj - dj // p for dj in E.lower_jumps)
    assert dim_cov == len(E) + n_e
    return dim_cov, n_e


def _closure_target(p: int, E: Partition) -> Partition | None:
    big = [e for e in E.parts if e >= p + 2]
    if not big:
        return None
    e = max(big)
    parts = list(E.parts)
    parts.remove(e)
    return Partition(p, tuple(parts) + (p, e - p))


def stratum_records(p: int, d: int) -> list[StratumRecord]:
    """One record per partition of Omega_d, ordered by p-rank and then by parts."""
    out = []
    for E in sorted(enumerate_partitions(p, d), key=lambda E: (E.r, E.parts)):
        dim_cov, n_e = cover_stratum_dimension(p, E)
        dim = stratum_dimension(p, E)
        if E.g >= 2:
            assert dim_cov == dim + 3
        target = _closure_target(p, E)
        out.append(StratumRecord(p=p, d=d, g=E.g, r=E.r, s=E.s, partition=E.parts,
                                 dim_AS=dim, dim_cov=dim_cov, N_E=n_e,
                                 closure_step=target.parts if target else None))
    return out


def records_to_json(records: list[StratumRecord]) -> str:
    return json.dumps([asdict(rec) for rec in records], indent=2)


def _genus_to_d(p: int, g: int) -> int:
    if g < 0 or (2 * g) % (p - 1):
        raise InvalidParameters(f"g = {g} is not of the form d(p-1)/2 for p = {p}")
    return 2 * g // (p - 1)


def prank_exists(p: int, g: int, s: int) -> bool:
    """Whether some Artin-Schreier curve of genus g has p-rank s in characteristic p."""
    _check_prime(p)
    if g < 0 or s < 0 or (2 * g) % (p - 1) or s % (p - 1):
        return False
    d, r = 2 * g // (p - 1), s // (p - 1)
    return any(True for _ in _parts(p, d + 2, d + 2, r + 1))


def maximal_partitions(p: int, d: int) -> list[Partition]:
    """Maximal elements of Omega_d under refinement: parts in {2, 3} for odd p, all 2s for p = 2."""
    _check_pd(p, d)
    if p == 2:
        return [Partition(2, (2,) * ((d + 2) // 2))]
    out = []
    for threes in range((d + 2) // 3 + 1):
        rest = d + 2 - 3 * threes
        if rest % 2 == 0:
            out.append(Partition(p, (2,) * (rest // 2) + (3,) * threes))
    return sorted(out, key=lambda E: E.parts)


def is_irreducible_AS(p: int, g: int) -> tuple[bool, list[Partition]]:
    """Irreducibility of AS_g, with the partitions whose strata have full dimension d - 1.

    Those are exactly the partitions with every part at most p.
    """
    _check_prime(p)
    d = _genus_to_d(p, g)
    if p == 2 and d % 2:
        raise InvalidParameters("d must be even when p = 2")
    if d == 0:
        witnesses = [Partition(p, (2,))]
    else:
        witnesses = [E for E in enumerate_partitions(p, d) if stratum_dimension(p, E) == d - 1]
    return len(witnesses) == 1, witnesses


@lru_cache(maxsize=None)
def partition_count(n: int, k: int) -> int:
    """Number of partitions of n into exactly k positive parts."""
    if n == k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return partition_count(n - 1, k - 1) + partition_count(n - k, k)


def hyperelliptic_components(g: int, s: int) -> tuple[int, int]:
    """(number, common dimension) of components of the 2-rank s locus of hyperelliptic genus g curves."""
    if g < 1 or s < 0:
        raise InvalidParameters("need g >= 1 and s >= 0")
    if s > g:
        raise InvalidParameters(f"2-rank {s} exceeds genus {g}")
    count = partition_count(g + 1, s + 1)
    strata = enumerate_partitions(2, 2 * g, s)
    halves = sorted(tuple(e // 2 for e in E.parts) for E in strata)
    assert len(halves) == count == len(set(halves))
    dims = {stratum_dimension(2, E) for E in strata}
    assert dims == {g - 1 + s}
    return count, g - 1 + s


def codim_check(p: int, g: int, s: int) -> tuple[int, int, bool]:
    """(codimension of AS_{g,s} in AS_g, g - s, whether codim < g - s)."""
    if p < 3:
        raise InvalidParameters("the codimension comparison is stated for p >= 3")
    d = _genus_to_d(p, g)
    if s < 0 or s % (p - 1):
        raise InvalidParameters(f"s = {s} is not a multiple of p - 1")
    if s >= g:
        raise InvalidParameters("need s < g")
    strata = enumerate_partitions(p, d, s // (p - 1))
    if not strata:
        raise InvalidParameters(f"Omega_{{{d},{s // (p - 1)}}} is empty for p = {p}")
    codim = min(_floor_sum(p, E) for E in strata)
    return codim, g - s, codim < g - s
