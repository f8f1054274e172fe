import random

import pytest
from hypothesis import given, settings, strategies as st

from asprank.covers import (
    ASCover,
    RationalFunction,
    cover_with_partition,
    format_cover,
    genus,
    invariants,
    p_rank_DS,
    parse_cover,
    partial_fractions,
    point_count,
    ramification_data,
    read_cover,
    standard_form,
    write_cover,
    zeta_data,
    zeta_prank_oracle,
)
from asprank.errors import DegenerateCoverError, DisconnectedCoverError, OracleError
from asprank.fieldarith import GF, Poly, embedding, extension, factor_squarefree_roots


def brute_point_count(cover: ASCover, i: int = 1) -> int:
    """Points of the smooth model over F_{q^i} by direct search over (x, y).

    Only valid when every rational pole of f has order prime to p and the pole
    order at infinity is either 0 or prime to p: those poles are then branch
    points with one point each, and infinity, when not a pole, is unramified.
    """
    K = cover.field
    F = extension(K, i)
    emb = embedding(K, F)
    f = cover.f.embed(emb)
    p = cover.p
    ys = [F(y) for y in range(F.q)]
    artin = {}
    for y in ys:
        v = (y ** p - y).value
        artin[v] = artin.get(v, 0) + 1
    count = 0
    for x in range(F.q):
        val = f(x)
        if val is None:
            count += 1
        else:
            count += artin.get(val.value, 0)
    dn, dd = f.numerator.degree, f.denominator.degree
    if dn > dd:
        count += 1
    else:
        at_inf = F.div(f.numerator.leading, f.denominator.leading) if dn == dd else 0
        count += artin.get(at_inf, 0)
    return count


def has_clean_poles(cover: ASCover) -> bool:
    p = cover.p
    roots, _ = factor_squarefree_roots(cover.f.denominator)
    if any(m % p == 0 for _, m in roots):
        return False
    excess = cover.f.numerator.degree - cover.f.denominator.degree
    return excess <= 0 or excess % p != 0


def random_cover(rng: random.Random, field):
    for _ in range(100):
        num = [rng.randrange(field.q) for _ in range(rng.randint(1, 6))]
        den = [rng.randrange(field.q) for _ in range(rng.randint(1, 4))]
        if not any(den):
            continue
        try:
            c = ASCover.from_coeffs(field, num, den)
            g = genus(c)
        except DegenerateCoverError:
            continue
        if 1 <= g <= 4 and has_clean_poles(c):
            return c
    raise RuntimeError("no suitable random cover")


BRUTE_FIELDS = [GF(2), GF(2, 2), GF(2, 3), GF(3), GF(3, 2), GF(5), GF(7)]


@pytest.mark.parametrize("seed", range(40))
def test_point_count_against_direct_search(seed):
    rng = random.Random(seed)
    field = BRUTE_FIELDS[seed % len(BRUTE_FIELDS)]
    cover = random_cover(rng, field)
    for i in (1, 2):
        if field.q**i <= 64:
            assert point_count(cover, i) == brute_point_count(cover, i), (cover, i)


def test_named_covers():
    F2, F3, F5 = GF(2), GF(3), GF(5)
    c = ASCover.from_coeffs(F2, [0, 0, 0, 1])
    assert ramification_data(c).partition.parts == (4,)
    assert (genus(c), p_rank_DS(c), point_count(c)) == (1, 0, 3)
    assert zeta_data(c).L == (1, 0, 2)
    c = ASCover.from_coeffs(F2, [1, 0, 1], [0, 1])
    assert ramification_data(c).partition.parts == (2, 2)
    assert (genus(c), p_rank_DS(c)) == (1, 1)
    assert zeta_data(c).L == (1, 1, 2)
    c = ASCover.from_coeffs(F3, [0, 0, 1])
    assert (genus(c), p_rank_DS(c), zeta_prank_oracle(c)) == (1, 0, 0)
    c = ASCover.from_coeffs(F5, [0, 0, 1, 1])
    assert (genus(c), p_rank_DS(c), zeta_prank_oracle(c)) == (4, 0, 0)
    c = ASCover.from_coeffs(F5, [1, 0, 1], [0, 1])
    assert (genus(c), p_rank_DS(c), zeta_prank_oracle(c)) == (4, 4, 4)


def test_standard_form_examples():
    F3 = GF(3)
    # x^3 + x = (x^3 - x) + 2x
    sf = standard_form(ASCover.from_coeffs(F3, [0, 1, 0, 1]))
    assert sf.f == RationalFunction.from_coeffs(F3, [0, 2])
    # x^3 + x^2 + 1 over F2: x^2 -> x, constant dropped
    c = ASCover.from_coeffs(GF(2), [1, 0, 1, 1])
    assert standard_form(c).f == RationalFunction.from_coeffs(GF(2), [0, 1, 0, 1])
    assert c._standard.constant == 1
    # x^6 + x over F3: x^6 -> x^2
    c = ASCover.from_coeffs(F3, [0, 1, 0, 0, 0, 0, 1])
    assert ramification_data(c).partition.parts == (3,)
    # 1/x^3 + 1/x + x^2 over F3: 1/x^3 -> 1/x, leaving 2/x
    c = ASCover.from_coeffs(F3, [1, 0, 1, 0, 0, 1], [0, 0, 0, 1])
    assert ramification_data(c).partition.parts == (2, 3)
    # 1/x^3 + 2/x + x^2: the pole at 0 disappears
    c = ASCover.from_coeffs(F3, [1, 0, 2, 0, 0, 1], [0, 0, 0, 1])
    assert ramification_data(c).partition.parts == (3,)


def test_disconnected_and_constant_covers():
    with pytest.raises(DisconnectedCoverError):
        standard_form(ASCover.from_coeffs(GF(3), [0, 2, 0, 1]))  # x^3 - x
    with pytest.raises(DegenerateCoverError):
        ASCover.from_coeffs(GF(3), [2])


def test_partial_fractions_example():
    F5 = GF(5)
    pf = partial_fractions(RationalFunction.from_coeffs(F5, [0, 0, 0, 1], [4, 1]))
    assert pf.poly_part == Poly(F5, (1, 1, 1))
    assert pf.principal == {1: (1,)}


@pytest.mark.parametrize("seed", range(30))
def test_partial_fractions_recompose(seed):
    rng = random.Random(1000 + seed)
    field = [GF(2), GF(3), GF(3, 2), GF(5), GF(2, 2)][seed % 5]
    num = [rng.randrange(field.q) for _ in range(rng.randint(2, 7))]
    den = [rng.randrange(field.q) for _ in range(rng.randint(2, 5))]
    if not any(den) or not any(num):
        return
    f = RationalFunction.from_coeffs(field, num, den)
    if f.is_constant():
        return
    pf = partial_fractions(f)
    assert pf.recompose() == f.embed(pf.embedding)
    for P, cs in pf.principal.items():
        assert cs[-1] != 0


def traces_agree(cover: ASCover, i: int) -> bool:
    # f and its standard form plus the dropped constant differ by some h^p - h
    K = cover.field
    F = extension(K, i)
    emb = embedding(K, F)
    f = cover.f.embed(emb)
    red = cover._standard.reduced.embed(emb)
    c0 = emb(cover._standard.constant)
    for x in range(F.q):
        a, b = f(x), red(x)
        if a is None or b is None:
            continue
        if F.trace(a.value) != F.trace(F.add(b.value, c0)):
            return False
    return True


@pytest.mark.parametrize("seed", range(30))
def test_standard_form_properties(seed):
    rng = random.Random(2000 + seed)
    field = [GF(2), GF(3), GF(3, 2), GF(5), GF(2, 2), GF(2, 3)][seed % 6]
    num = [rng.randrange(field.q) for _ in range(rng.randint(2, 9))]
    den = [rng.randrange(field.q) for _ in range(rng.randint(1, 5))]
    if not any(den):
        return
    try:
        cover = ASCover.from_coeffs(field, num, den)
        sf = standard_form(cover)
    except DegenerateCoverError:
        return
    p = field.p
    # no index divisible by p survives, and a second pass changes nothing
    for P, cs in sf._standard.principal.items():
        assert all(c == 0 for i, c in enumerate(cs, start=1) if i % p == 0)
    poly = sf._standard.poly_part.coeffs
    assert all(c == 0 for i, c in enumerate(poly) if i and i % p == 0)
    assert standard_form(sf).f == sf.f
    assert sf._standard.constant == 0
    assert ramification_data(sf).partition == ramification_data(cover).partition
    for i in (1, 2):
        if field.q**i <= 81:
            assert traces_agree(cover, i)
            if cover._standard.constant == 0:
                assert point_count(sf, i) == point_count(cover, i)


@pytest.mark.parametrize("seed", range(15))
def test_base_change_preserves_invariants(seed):
    rng = random.Random(3000 + seed)
    field = [GF(2), GF(3), GF(5)][seed % 3]
    cover = random_cover(rng, field)
    for m in (1, 2, 3):
        bc = cover.base_change(m)
        assert ramification_data(bc).partition == ramification_data(cover).partition
        assert genus(bc) == genus(cover) and p_rank_DS(bc) == p_rank_DS(cover)
        assert point_count(bc, 1) == point_count(cover, m)


@pytest.mark.parametrize("p,n,parts", [
    (2, 1, (4,)), (2, 2, (2, 2, 4)), (3, 1, (2, 3)), (3, 2, (3, 3, 5)), (5, 1, (2, 2, 3)), (7, 1, (2, 4, 7)),
])
def test_cover_with_partition(p, n, parts):
    c = cover_with_partition(GF(p, n), parts)
    rd = ramification_data(c)
    assert rd.partition.parts == tuple(sorted(parts))
    inv = invariants(c)
    assert inv.genus == (sum(parts) - 2) * (p - 1) // 2
    assert inv.p_rank == (len(parts) - 1) * (p - 1)


def test_zeta_consistency():
    c = cover_with_partition(GF(3), (2, 3))
    z = zeta_data(c)
    g, q = z.genus, z.q
    assert len(z.L) == 2 * g + 1 and z.L[0] == 1 and z.L[-1] == q**g
    for j in range(g + 1):
        assert z.L[2 * g - j] == q ** (g - j) * z.L[j]
    # an extra count beyond N_g was checked against L
    assert len(z.counts) == g + 1


def test_oracle_genus_bound():
    c = cover_with_partition(GF(3), (12,))
    with pytest.raises(OracleError):
        zeta_data(c, max_genus=5)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)]), st.data())
def test_formula_matches_oracle(pn, data):
    field = GF(*pn)
    p = field.p
    max_e = {2: 10, 3: 6, 5: 4}[p]
    E = data.draw(st.lists(st.integers(2, max_e).filter(lambda e: e % p != 1), min_size=1,
                           max_size=min(field.q + 1, 4)))
    g = (sum(E) - 2) * (p - 1) // 2
    if not 1 <= g <= 4 or field.q**g > 2**16:
        return
    coeffs = [data.draw(st.integers(1, field.q - 1)) for _ in E]
    c = cover_with_partition(field, E, coefficients=coeffs)
    z = zeta_data(c, max_genus=4, max_field_size=2**16)
    assert z.p_rank == p_rank_DS(c)
    assert len(z.L) - 1 == 2 * genus(c)


def test_file_roundtrip(tmp_path):
    c = ASCover.from_coeffs(GF(3, 2), [3, 0, 1], [1, 0, 1])
    path = tmp_path / "c.txt"
    write_cover(c, path)
    assert read_cover(path) == c
    assert parse_cover(format_cover(c)) == c


def test_file_grammar():
    text = "# y^3 - y = (x^2 + w)/(x^2 + 1)\n3 2\n1 0 1\n0,1 0 1\n1 0 1\n"
    c = parse_cover(text)
    assert c == ASCover.from_coeffs(GF(3, 2), [3, 0, 1], [1, 0, 1])
    c = parse_cover("2 1\nauto\n0 0 0 1  # x^3\n")
    assert genus(c) == 1
    for bad in ["2\nauto\n1 1\n", "2 1\nauto\n", "3 1\nauto\n0 5\n", "3 2\n1 1 1\n0 1\n", "3 2\nauto\n0,3\n"]:
        with pytest.raises(ValueError):
            parse_cover(bad)
