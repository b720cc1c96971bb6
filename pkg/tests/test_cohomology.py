from itertools import product

import numpy as np
import pytest

from gerbeforge.abelian import FinAbGroup
from gerbeforge.cohomology import (
    Cochain,
    CohomologyResult,
    CoeffModule,
    cochain_from_json,
    cohomology,
    cohomology_cx,
    cohomology_ox,
    differential,
    induced_map,
    inclusion_hom,
    is_cocycle,
    is_cohomologous,
    mu_coefficients,
    pullback_matrix,
    relative_der_complex,
    restriction_cx,
    trivial_coefficients,
)
from gerbeforge.groups import (
    SubgroupDatum,
    catalog_group,
    cyclic_group,
    derived_subgroup,
    dihedral_group,
    elementary_abelian,
    generated_subgroup,
    center_subgroup,
    quotient_with_section,
    symmetric_group,
)


def random_cochain(rng, n, group, coeff):
    g1 = group.order - 1
    vals = rng.integers(0, max(coeff.group.exponent, 2),
                        size=(g1,) * n + (coeff.rank,))
    return Cochain(n, group, coeff, vals).reduced()


def test_differential_constant_zero():
    g = cyclic_group(3)
    coeff = mu_coefficients(g, 3)
    c = Cochain.zero(2, g, coeff)
    assert not differential(c).flat().any()


def test_differential_degree1_z2():
    # c on Z/2 with c(g)=a, trivial action: (dc)(g,g) = a + a - c(g^2=1) = 2a
    g = cyclic_group(2)
    coeff = trivial_coefficients(g, FinAbGroup((8,)))
    c = Cochain(1, g, coeff, np.array([[3]]))
    dc = differential(c)
    assert dc.get(1, 1)[0] == 6


def test_d_squared_zero_randomized():
    rng = np.random.default_rng(1)
    battery = [
        (cyclic_group(4), trivial_coefficients(cyclic_group(4), FinAbGroup((4,)))),
        (symmetric_group(3), mu_coefficients(symmetric_group(3), 6)),
        (elementary_abelian(2, 2), mu_coefficients(elementary_abelian(2, 2), 2)),
    ]
    for g, coeff in battery:
        for n in (0, 1, 2):
            for _ in range(20):
                c = random_cochain(rng, n, g, coeff)
                ddc = differential(differential(c))
                assert not ddc.reduced().flat().any()


def test_twisted_d_squared():
    # Z/2 acting on Z/3 by inversion
    g = cyclic_group(2)
    act = np.array([np.eye(1, dtype=np.int64), [[2]]])
    coeff = CoeffModule(FinAbGroup((3,)), g, act)
    rng = np.random.default_rng(2)
    for n in (0, 1, 2):
        for _ in range(20):
            c = random_cochain(rng, n, g, coeff)
            assert not differential(differential(c)).reduced().flat().any()


def brute_force_classes(group, modulus, n):
    """Enumerate all normalized n-cocycles mod coboundaries over mu_modulus."""
    from gerbeforge.cohomology import bar_matrix
    g1 = group.order - 1
    cells = g1 ** n
    d_out = bar_matrix(group, n, 1)
    cands = np.array(list(product(range(modulus), repeat=cells)), dtype=np.int64)
    dz = (cands @ d_out.T) % modulus
    n_cocycles = int((dz == 0).all(axis=1).sum())
    lower = g1 ** (n - 1)
    d_in = bar_matrix(group, n - 1, 1)
    lows = np.array(list(product(range(modulus), repeat=lower)), dtype=np.int64)
    cobs = {tuple(row) for row in (lows @ d_in.T) % modulus}
    return n_cocycles, len(cobs)


@pytest.mark.parametrize("n_group,modulus,expected", [
    (2, 2, 2),   # H^2(Z/2, Z/2) = Z/2
    (3, 3, 3),   # H^2(Z/3, Z/3) = Z/3
    (4, 4, 4),   # H^2(Z/4, Z/4) = Z/4
])
def test_h2_cyclic_finite_coefficients(n_group, modulus, expected):
    g = cyclic_group(n_group)
    h = cohomology(g, mu_coefficients(g, modulus), 2)
    z, b = brute_force_classes(g, modulus, 2)
    assert z == h.group.order * b
    assert h.group.order == expected


def test_h2_klein_mu2_matches_enumeration():
    # 512 normalized 2-cochains over mu_2; |Z^2| = |H^2| * |B^2| exactly
    g = elementary_abelian(2, 2)
    h = cohomology(g, mu_coefficients(g, 2), 2)
    z, b = brute_force_classes(g, 2, 2)
    assert z == h.group.order * b
    # honest finite-coefficient value: (Z/2)^3, of order 8
    assert h.group.order == 8


def test_h1_is_hom_to_mu():
    g = symmetric_group(3)
    h = cohomology(g, mu_coefficients(g, 6), 1)
    # Hom(S3_ab, Z/6) = Hom(Z/2, Z/6) = Z/2
    assert h.group.order == 2


def test_cx_schur_multipliers():
    expected = {
        "cyclic 2": 1, "cyclic 3": 1, "cyclic 4": 1, "cyclic 6": 1,
        "elementary-abelian 2 2": 2,
        "elementary-abelian 2 3": 8,
        "dihedral 4": 2,
        "quaternion8": 1,
        "sym 3": 1,
        "sym 4": 2,
        "alt4": 2,
    }
    for spec, order in expected.items():
        g = catalog_group(spec)
        h = cohomology_cx(g, 2)
        assert h.order == order, f"Schur multiplier of {spec}"


def test_cx_h3_and_h2_cyclic():
    for n in (2, 3, 4):
        g = cyclic_group(n)
        assert cohomology_cx(g, 3).order == n   # H^3(Z/n) = Z/n
        assert cohomology_cx(g, 2).order == 1   # H^2(Z/n) = 0


def test_cx_generator_is_cocycle_and_nontrivial():
    g = elementary_abelian(2, 2)
    h = cohomology_cx(g, 2)
    gen = h.generator(0)
    coeff = mu_coefficients(g, h.modulus)
    c = Cochain.from_flat(2, g, coeff, gen).reduced()
    assert is_cocycle(c)
    assert not h.is_trivial(gen)
    assert h.is_trivial(np.zeros_like(np.array(gen)))


def test_cx_standard_z2_three_cocycle():
    # omega(a,b,c) = (-1)^{abc} generates H^3(Z/2)
    g = cyclic_group(2)
    h = cohomology_cx(g, 3)
    assert h.factors == (2,)
    coeff = mu_coefficients(g, h.modulus)
    vals = np.zeros((1, 1, 1, 1), dtype=np.int64)
    vals[0, 0, 0, 0] = h.modulus // 2
    c = Cochain(3, g, coeff, vals)
    assert is_cocycle(c)
    assert not h.is_trivial(c.flat())


def test_is_cohomologous_witness():
    g = cyclic_group(2)
    coeff = mu_coefficients(g, 2)
    h = cohomology(g, coeff, 2)
    assert h.group.order == 2
    c0 = h.lift((0,))
    c1 = h.lift((1,))
    same, w = is_cohomologous(c1, c1)
    assert same and w is not None
    assert not differential(w).reduced().flat().any()
    diff, _ = is_cohomologous(c0, c1)
    assert not diff
    # constructed coboundary shift
    rng = np.random.default_rng(3)
    b = random_cochain(rng, 1, g, coeff)
    shifted = Cochain(2, g, coeff,
                      (np.array(c1.values, dtype=object)
                       + np.array(differential(b).values, dtype=object)))
    same, w = is_cohomologous(c1, shifted.reduced())
    assert same and w is not None
    got = differential(w).reduced()
    want = (np.array(c1.values, dtype=object) -
            np.array(shifted.values, dtype=object)) % 2
    assert (np.array(got.values, dtype=object) % 2 == want).all()


def test_restriction_kills_schur_class_of_klein():
    g = elementary_abelian(2, 2)
    hg = cohomology_cx(g, 2)
    for members in [(0, 1), (0, 2), (0, 3)]:
        k = SubgroupDatum(g, members)
        hk = cohomology_cx(subgroup_of(g, k), 2, modulus=hg.modulus)
        res = restriction_cx(g, k, 2, hg, hk)
        assert not (res.matrix % 2).any()


def subgroup_of(g, k):
    from gerbeforge.groups import subgroup_as_group
    return subgroup_as_group(k)[0]


def test_inflation_z4_to_z2():
    # inflation-restriction: the transgression H^1(K,mu2)^Q -> H^2(Q,mu2) is
    # onto here, so inflation H^2(Z/2,mu2) -> H^2(Z/4,mu2) vanishes; check by
    # pulling back the generator cocycle and testing cohomologous-to-zero
    g4 = cyclic_group(4)
    k = SubgroupDatum(g4, (0, 2))
    qd = quotient_with_section(g4, k)
    q = qd.quotient
    coeff_q = mu_coefficients(q, 2)
    coeff_g = mu_coefficients(g4, 2)
    hq = cohomology(q, coeff_q, 2)
    hg = cohomology(g4, coeff_g, 2)
    assert hq.group.order == 2 and hg.group.order == 2
    m = induced_map("inflation", {
        "source": hq, "target": hg, "projection": qd.projection})
    assert not (m.matrix % 2).any()
    gen = hq.lift((1,))
    mat = pullback_matrix(qd.projection, 2, 1)
    pulled = Cochain.from_flat(2, g4, coeff_g, mat @ np.asarray(gen.flat())).reduced()
    same, w = is_cohomologous(pulled, Cochain.zero(2, g4, coeff_g))
    assert same and w is not None


def test_functoriality_res_after_inf():
    # restriction∘inflation along Z/2 <= Z/4 -> Z/2 equals pullback by the
    # composite (which factors through the trivial element), i.e. zero on H^2
    g4 = cyclic_group(4)
    k = SubgroupDatum(g4, (0, 2))
    qd = quotient_with_section(g4, k)
    q = qd.quotient
    coeff_q = mu_coefficients(q, 2)
    coeff_g = mu_coefficients(g4, 2)
    coeff_k = mu_coefficients(subgroup_of(g4, k), 2)
    hq = cohomology(q, coeff_q, 2)
    hg = cohomology(g4, coeff_g, 2)
    hk = cohomology(subgroup_of(g4, k), coeff_k, 2)
    inf = induced_map("inflation", {"source": hq, "target": hg,
                                    "projection": qd.projection})
    res = induced_map("restriction", {"source": hg, "target": hk, "subgroup": k})
    comp = res.compose(inf)
    # composite factors through restriction of the quotient map to K = kernel
    assert not (comp.matrix % 2 != 0).any() or comp.matrix.size == 0


def test_relative_cone_k_trivial():
    g = cyclic_group(4)
    k = SubgroupDatum(g, (0,))
    cone = relative_der_complex(g, k, 3)
    h3 = cohomology_cx(g, 3, modulus=cone.modulus)
    assert cone.h.order == h3.order == 4


def test_relative_cone_g_equals_k():
    g = cyclic_group(2)
    k = SubgroupDatum(g, (0, 1))
    cone = relative_der_complex(g, k, 3)
    # middle-row exactness: |H^3(G;G)| = |H^2(G)/im H^2(G)| * |ker H^3(G)->H^3(G)|
    assert cone.h.order == 1


def test_relative_cone_exactness_z4_z2():
    g = cyclic_group(4)
    k = SubgroupDatum(g, (0, 2))
    cone = relative_der_complex(g, k, 3)
    m = cone.modulus
    hk2 = cohomology_cx(cone.kg, 2, modulus=m)
    hg2 = cohomology_cx(g, 2, modulus=m)
    hg3 = cohomology_cx(g, 3, modulus=m)
    hk3 = cohomology_cx(cone.kg, 3, modulus=m)
    res2 = restriction_cx(g, k, 2, hg2, hk2)
    res3 = restriction_cx(g, k, 3, hg3, hk3)
    from gerbeforge.abelian import hom_structure
    _, coker2 = hom_structure(res2)
    ker3, _ = hom_structure(res3)
    assert cone.h.order == coker2.order * ker3.order


def test_cochain_json_round_trip():
    g = cyclic_group(3)
    coeff = mu_coefficients(g, 3)
    rng = np.random.default_rng(5)
    c = random_cochain(rng, 2, g, coeff)
    doc = c.to_json()
    c2 = cochain_from_json(g, coeff, doc)
    assert (np.array(c.values, dtype=object) ==
            np.array(c2.values, dtype=object)).all()
