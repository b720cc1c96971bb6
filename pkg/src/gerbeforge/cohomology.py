"""Group cohomology with twisted coefficients via the normalized bar complex.

Finite coefficient modules are handled directly as ker/im subquotients.
C^x-valued cohomology H^n(G) is *defined* as H^{n+1}(G, Z) and computed
without degree-(n+2) matrices through the Bockstein identity

    H^n(G, C^x) = coker( H^n(G, Z) -> H^n(G, Z/M) )

valid whenever M annihilates H^{n+1}(G, Z); class representatives come out
as mu_M-valued cocycles (exponents mod M).  The same pairing of an integral
and a mod-M complex computes C^x cohomology of function coefficients
O^x_X and of the relative mapping cone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .abelian import FinAbGroup, AbHom, Subquotient, _matmul
from .config import CapExceeded, snf_long_side
from .groups import FiniteGroup, GroupHom, SubgroupDatum, subgroup_as_group

MAX_DEGREE = 4


# ---------------------------------------------------------------------------
# coefficient modules and cochains


@dataclass(frozen=True)
class CoeffModule:
    """Finite abelian coefficients with an action of the group by automorphisms."""

    group: FinAbGroup
    acting_group: FiniteGroup
    action: Optional[np.ndarray] = None  # (|G|, rank, rank); None = trivial

    def __post_init__(self):
        if self.action is None:
            return
        act = np.asarray(self.action, dtype=np.int64)
        g, a = self.acting_group, self.group
        if act.shape != (g.order, a.rank, a.rank):
            raise ValueError("action array has wrong shape")
        object.__setattr__(self, "action", act)
        mods = np.array(a.invariant_factors, dtype=np.int64)
        if a.rank and not (act[0] % mods[:, None] == np.eye(a.rank) % mods[:, None]).all():
            raise ValueError("identity must act as the identity matrix")
        for x in g.elements():
            for y in g.elements():
                lhs = act[x] @ act[y]
                rhs = act[g.mul(x, y)]
                if a.rank and not ((lhs - rhs) % mods[:, None] == 0).all():
                    raise ValueError("action is not a homomorphism")

    @property
    def rank(self) -> int:
        return self.group.rank

    def matrix(self, g: int) -> np.ndarray:
        if self.action is None:
            return np.eye(self.rank, dtype=np.int64)
        return self.action[g]

    def moduli(self) -> np.ndarray:
        return np.array(self.group.invariant_factors, dtype=np.int64)


def trivial_coefficients(g: FiniteGroup, a: FinAbGroup) -> CoeffModule:
    return CoeffModule(group=a, acting_group=g)


def mu_coefficients(g: FiniteGroup, n: int) -> CoeffModule:
    """mu_N as exponents: the coefficient group Z/N with trivial action."""
    return CoeffModule(group=FinAbGroup((n,)), acting_group=g)


def permutation_coefficients(g: FiniteGroup, action_table: np.ndarray,
                             n: int) -> CoeffModule:
    """O^x_X modelled as (Z/N)^X with g permuting coordinates: (g·u)(x)=u(g^{-1}x)."""
    t = np.asarray(action_table, dtype=np.int64)
    size = t.shape[1]
    mats = np.zeros((g.order, size, size), dtype=np.int64)
    for q in g.elements():
        qi = g.inv(q)
        for x in range(size):
            mats[q, x, t[qi, x]] = 1
    return CoeffModule(group=FinAbGroup((n,) * size) if size else FinAbGroup(()),
                       acting_group=g, action=mats)


@dataclass
class Cochain:
    """Normalized n-cochain: values indexed by tuples of non-identity elements.

    values has shape ((|G|-1),)*n + (rank,); a tuple containing the identity
    evaluates to zero implicitly."""

    degree: int
    group: FiniteGroup
    coeff: CoeffModule
    values: np.ndarray

    def __post_init__(self):
        g1 = self.group.order - 1
        want = (g1,) * self.degree + (self.coeff.rank,)
        v = np.asarray(self.values)
        if v.shape != want:
            raise ValueError(f"cochain values must have shape {want}")
        self.values = v

    def get(self, *elements) -> np.ndarray:
        if len(elements) != self.degree:
            raise ValueError("wrong tuple length")
        if any(e == 0 for e in elements):
            return np.zeros(self.coeff.rank, dtype=np.int64)
        idx = tuple(e - 1 for e in elements)
        return self.values[idx]

    def flat(self) -> np.ndarray:
        return self.values.reshape(-1)

    def reduced(self) -> "Cochain":
        mods = self.coeff.moduli()
        vals = np.array(self.values)
        out = np.zeros_like(vals)
        for i, d in enumerate(mods):
            out[..., i] = vals[..., i] % int(d) if d else vals[..., i]
        if out.dtype == object and out.size:
            if all(abs(int(x)) < (1 << 62) for x in out.flat):
                out = out.astype(np.int64)
        return Cochain(self.degree, self.group, self.coeff, out)

    @staticmethod
    def zero(degree: int, group: FiniteGroup, coeff: CoeffModule) -> "Cochain":
        g1 = group.order - 1
        return Cochain(degree, group, coeff,
                       np.zeros((g1,) * degree + (coeff.rank,), dtype=np.int64))

    @staticmethod
    def from_flat(degree: int, group: FiniteGroup, coeff: CoeffModule,
                  flat) -> "Cochain":
        g1 = group.order - 1
        arr = np.asarray(flat).reshape((g1,) * degree + (coeff.rank,))
        return Cochain(degree, group, coeff, arr)

    def to_json(self) -> dict:
        vals = {}
        g1 = self.group.order - 1
        for idx in product(range(g1), repeat=self.degree):
            v = self.values[idx]
            if np.asarray(v).any():
                key = ",".join(str(i + 1) for i in idx)
                vals[key] = [int(x) for x in np.atleast_1d(v)]
        return {
            "degree": self.degree,
            "coeff": list(self.coeff.group.invariant_factors),
            "values": vals,
        }


def cochain_from_json(group: FiniteGroup, coeff: CoeffModule, doc: dict) -> Cochain:
    c = Cochain.zero(int(doc["degree"]), group, coeff)
    vals = np.array(c.values, dtype=object)
    for key, vec in doc.get("values", {}).items():
        idx = tuple(int(p) - 1 for p in key.split(","))
        vals[idx] = np.array(vec, dtype=object)
    return Cochain(c.degree, group, coeff, vals)


# ---------------------------------------------------------------------------
# bar differential


def _tuple_digits(g1: int, n: int) -> np.ndarray:
    """All n-tuples over {0..g1-1} in C order, shape (g1^n, n)."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    idx = np.arange(g1 ** n)
    out = np.zeros((g1 ** n, n), dtype=np.int64)
    for i in range(n - 1, -1, -1):
        out[:, i] = idx % g1
        idx //= g1
    return out


def _tuple_index(g1: int, digits: np.ndarray) -> np.ndarray:
    idx = np.zeros(digits.shape[0], dtype=np.int64)
    for i in range(digits.shape[1]):
        idx = idx * g1 + digits[:, i]
    return idx


def bar_matrix(group: FiniteGroup, n: int, rank: int = 1,
               action: Optional[np.ndarray] = None) -> np.ndarray:
    """Integer matrix of d: C^n -> C^{n+1} on normalized cochains."""
    g1 = group.order - 1
    rows_t = g1 ** (n + 1)
    cols_t = g1 ** n
    if max(rows_t * rank, cols_t * rank) > snf_long_side():
        raise CapExceeded("bar complex exceeds the SNF size cap")
    M = np.zeros((rows_t * rank, cols_t * rank), dtype=np.int64)
    if g1 == 0:
        return M
    tuples = _tuple_digits(g1, n + 1) + 1  # entries are group elements >= 1
    eye = np.eye(rank, dtype=np.int64)
    for r in range(rows_t):
        tup = tuples[r]
        rb = r * rank
        # leading term g_1 . c(g_2, ..., g_{n+1})
        cols = _tuple_index(g1, (tup[1:] - 1).reshape(1, -1))[0]
        block = eye if action is None else action[tup[0]]
        M[rb:rb + rank, cols * rank:cols * rank + rank] += block
        # face terms with a composed entry
        for i in range(1, n + 1):
            h = group.mul(int(tup[i - 1]), int(tup[i]))
            if h == 0:
                continue
            merged = np.concatenate([tup[:i - 1], [h], tup[i + 1:]])
            cols = _tuple_index(g1, (merged - 1).reshape(1, -1))[0]
            sign = -1 if i % 2 else 1
            M[rb:rb + rank, cols * rank:cols * rank + rank] += sign * eye
        # final term dropping g_{n+1}
        cols = _tuple_index(g1, (tup[:n] - 1).reshape(1, -1))[0]
        sign = -1 if (n + 1) % 2 else 1
        M[rb:rb + rank, cols * rank:cols * rank + rank] += sign * eye
    return M


_BAR_CACHE: "weakref.WeakKeyDictionary" = None  # created below


def _bar_matrix_cached(group: FiniteGroup, n: int, rank: int,
                       action: Optional[np.ndarray]) -> np.ndarray:
    global _BAR_CACHE
    if _BAR_CACHE is None:
        import weakref
        _BAR_CACHE = weakref.WeakKeyDictionary()
    per_group = _BAR_CACHE.setdefault(group, {})
    key = (n, rank, None if action is None else action.tobytes())
    if key not in per_group:
        per_group[key] = bar_matrix(group, n, rank, action)
    return per_group[key]


def differential(c: Cochain) -> Cochain:
    """Twisted bar differential; d∘d = 0."""
    if c.degree + 1 > MAX_DEGREE + 1:
        raise CapExceeded("degree above the supported cap")
    m = _bar_matrix_cached(c.group, c.degree, c.coeff.rank,
                           None if c.coeff.action is None else c.coeff.action)
    flat = _matmul(m, np.asarray(c.flat()))
    return Cochain.from_flat(c.degree + 1, c.group, c.coeff, flat).reduced()


# ---------------------------------------------------------------------------
# cohomology with finite coefficients


@dataclass
class CohomClass:
    ambient: str
    representative: Cochain
    structure: FinAbGroup
    coordinates: tuple


class CohomologyResult:
    """H^n(G, A) for a finite module A, with canonical class coordinates."""

    def __init__(self, group: FiniteGroup, coeff: CoeffModule, n: int):
        self.base = group
        self.coeff = coeff
        self.degree = n
        if n > MAX_DEGREE:
            raise CapExceeded(f"degree cap is {MAX_DEGREE}")
        act = coeff.action
        d_out = _bar_matrix_cached(group, n, coeff.rank, act)
        d_in = _bar_matrix_cached(group, n - 1, coeff.rank, act) if n > 0 else None
        g1 = group.order - 1
        mods = np.tile(coeff.moduli(), g1 ** n) if coeff.rank else \
            np.zeros(0, dtype=np.int64)
        out_mods = np.tile(coeff.moduli(), g1 ** (n + 1)) if coeff.rank else \
            np.zeros(0, dtype=np.int64)
        self.subquotient = Subquotient(moduli=mods, d_in=d_in, d_out=d_out,
                                       out_moduli=out_mods)
        self.group = self.subquotient.group

    def classes(self) -> list[CohomClass]:
        out = []
        for i in range(len(self.subquotient.factors)):
            rep = Cochain.from_flat(self.degree, self.base, self.coeff,
                                    self.subquotient.generator(i)).reduced()
            coords = tuple(1 if j == i else 0
                           for j in range(len(self.subquotient.factors)))
            out.append(CohomClass(self._ambient(), rep, self.group, coords))
        return out

    def coords(self, c: Cochain) -> tuple:
        self._check(c)
        return self.subquotient.coords(c.flat())

    def lift(self, coords) -> Cochain:
        return Cochain.from_flat(self.degree, self.base, self.coeff,
                                 self.subquotient.lift(coords)).reduced()

    def all_class_coords(self):
        for tup in product(*[range(f) for f in self.subquotient.factors]):
            yield tup

    def _check(self, c: Cochain):
        if c.degree != self.degree or c.group is not self.base:
            raise ValueError("cochain does not match this cohomology group")

    def _ambient(self) -> str:
        return f"H^{self.degree}({self.base.name}, {self.coeff.group})"


def cohomology(group: FiniteGroup, coeff: CoeffModule, n: int) -> CohomologyResult:
    return CohomologyResult(group, coeff, n)


def is_cocycle(c: Cochain) -> bool:
    return not differential(c).reduced().flat().any()


def is_cohomologous(c1: Cochain, c2: Cochain):
    """(equal classes?, witness b with db = c1 - c2 or None)."""
    if c1.degree != c2.degree or c1.group is not c2.group:
        raise ValueError("ambient mismatch")
    for c in (c1, c2):
        if not is_cocycle(c):
            raise ValueError("input is not a cocycle")
    h = CohomologyResult(c1.group, c1.coeff, c1.degree)
    diff = np.array(c1.flat(), dtype=object) - np.array(c2.flat(), dtype=object)
    if h.subquotient.coords(diff) != tuple([0] * len(h.subquotient.factors)):
        return False, None
    w = h.subquotient.witness(diff)
    if w is None:
        return True, None
    witness = Cochain.from_flat(c1.degree - 1, c1.group, c1.coeff, w).reduced()
    return True, witness


# ---------------------------------------------------------------------------
# C^x cohomology: coker(H(Z) -> H(Z/M))


class ComplexSpot:
    """One spot of a cochain complex: middle module, incoming and outgoing maps."""

    def __init__(self, moduli, d_in, d_out, out_moduli):
        self.moduli = np.asarray(moduli, dtype=np.int64)
        self.d_in = d_in
        self.d_out = d_out
        self.out_moduli = np.asarray(out_moduli, dtype=np.int64)

    def subquotient(self) -> Subquotient:
        return Subquotient(moduli=self.moduli, d_in=self.d_in, d_out=self.d_out,
                           out_moduli=self.out_moduli)


class CxCohomology:
    """C^x-valued cohomology of a complex, as coker(H(over Z) -> H(over Z/M)).

    Requires M · H^{n+1}(complex over Z) = 0, which callers guarantee by the
    choice of M (|G| for plain group cohomology, |G|^2 for relative cones,
    |Q| for action-groupoid nerves).  Generators are mu_M-exponent vectors.
    """

    def __init__(self, integral: ComplexSpot, reduced: ComplexSpot, modulus: int):
        self.modulus = modulus
        hz = integral.subquotient()
        hm = reduced.subquotient()
        self._hm = hm
        rels = [hm.coords(g) for g in hz.generators()]
        rel_mat = np.array(rels, dtype=object).T if rels else \
            np.zeros((len(hm.factors), 0), dtype=object)
        self._quot = Subquotient(moduli=np.array(hm.factors, dtype=np.int64),
                                 d_in=rel_mat)
        self.factors = self._quot.factors
        self.group = FinAbGroup(self.factors)

    @property
    def order(self) -> int:
        return self.group.order

    def coords(self, flat_values, given_modulus: Optional[int] = None) -> tuple:
        """Class coordinates of a mu-valued cocycle (exponent vector)."""
        vec = np.array(flat_values, dtype=object).reshape(-1)
        if given_modulus is not None and given_modulus != self.modulus:
            if self.modulus % given_modulus != 0:
                raise ValueError("cocycle modulus does not divide the stage modulus")
            vec = vec * (self.modulus // given_modulus)
        return self._quot.coords(np.array(self._hm.coords(vec), dtype=object))

    def generator(self, i: int) -> np.ndarray:
        hm_coords = self._quot.generator(i)
        return self._hm.lift(hm_coords)

    def generators(self) -> list[np.ndarray]:
        return [self.generator(i) for i in range(len(self.factors))]

    def lift(self, coords) -> np.ndarray:
        return self._hm.lift(self._quot.lift(coords))

    def is_trivial(self, flat_values, given_modulus: Optional[int] = None) -> bool:
        return all(c == 0 for c in self.coords(flat_values, given_modulus))

    def all_class_coords(self):
        for tup in product(*[range(f) for f in self.factors]):
            yield tup


def _plain_spots(group: FiniteGroup, n: int, rank: int,
                 action: Optional[np.ndarray], modulus: int):
    d_out = _bar_matrix_cached(group, n, rank, action)
    d_in = _bar_matrix_cached(group, n - 1, rank, action) if n > 0 else None
    g1 = group.order - 1
    size_mid = rank * g1 ** n
    size_out = rank * g1 ** (n + 1)
    zero_mid = np.zeros(size_mid, dtype=np.int64)
    zero_out = np.zeros(size_out, dtype=np.int64)
    integral = ComplexSpot(zero_mid, d_in, d_out, zero_out)
    reduced = ComplexSpot(zero_mid + modulus, d_in, d_out, zero_out + modulus)
    return integral, reduced


def cohomology_cx(group: FiniteGroup, n: int,
                  modulus: Optional[int] = None) -> CxCohomology:
    """H^n(G) := H^{n+1}(G, Z), with mu_M-valued representative cocycles."""
    if n > MAX_DEGREE:
        raise CapExceeded(f"degree cap is {MAX_DEGREE}")
    m = modulus or group.order
    if m % group.order != 0:
        raise ValueError("modulus must be a multiple of |G|")
    integral, reduced = _plain_spots(group, n, 1, None, m)
    return CxCohomology(integral, reduced, m)


def cohomology_ox(group: FiniteGroup, action_table: np.ndarray, n: int,
                  modulus: Optional[int] = None) -> CxCohomology:
    """H^n(Q, O^x_X) for the permutation module of functions on X."""
    t = np.asarray(action_table, dtype=np.int64)
    size = t.shape[1]
    m = modulus or group.order
    if m % group.order != 0:
        raise ValueError("modulus must be a multiple of |Q|")
    coeff = permutation_coefficients(group, t, m)
    integral, reduced = _plain_spots(group, n, size, coeff.action, m)
    return CxCohomology(integral, reduced, m)


# ---------------------------------------------------------------------------
# induced maps


def pullback_matrix(hom: GroupHom, n: int, rank: int = 1) -> np.ndarray:
    """Matrix of c -> c∘hom on normalized cochains (source of hom varies)."""
    g1s = hom.source.order - 1
    g1t = hom.target.order - 1
    rows = rank * g1s ** n
    cols = rank * g1t ** n
    M = np.zeros((rows, cols), dtype=np.int64)
    tuples = _tuple_digits(g1s, n) + 1
    for r in range(g1s ** n):
        imgs = [hom.apply(int(x)) for x in tuples[r]]
        if any(v == 0 for v in imgs):
            continue
        cidx = 0
        for v in imgs:
            cidx = cidx * g1t + (v - 1)
        M[r * rank:(r + 1) * rank, cidx * rank:(cidx + 1) * rank] = np.eye(rank)
    return M


def inclusion_hom(k: SubgroupDatum) -> GroupHom:
    kg, to_local = subgroup_as_group(k)
    image = np.array([k.members[i] for i in range(kg.order)], dtype=np.int64)
    return GroupHom(kg, k.parent, image)


def induced_map_cx(h_source: CxCohomology, h_target: CxCohomology,
                   chain_matrix: np.ndarray) -> AbHom:
    """Map on C^x cohomology induced by a chain map at the middle spot."""
    cols = []
    scale = h_target.modulus // h_source.modulus
    if h_source.modulus * scale != h_target.modulus:
        raise ValueError("stage moduli are incompatible")
    for g in h_source.generators():
        img = _matmul(chain_matrix, np.array(g, dtype=object) * scale)
        cols.append(h_target.coords(img))
    mat = np.array(cols, dtype=np.int64).T if cols else \
        np.zeros((len(h_target.factors), 0), dtype=np.int64)
    return AbHom(h_source.group, h_target.group, mat)


def restriction_cx(group: FiniteGroup, k: SubgroupDatum, n: int,
                   h_g: CxCohomology, h_k: CxCohomology) -> AbHom:
    incl = inclusion_hom(k)
    return induced_map_cx(h_g, h_k, pullback_matrix(incl, n))


def induced_map(kind: str, data: dict) -> AbHom:
    """Restriction / inflation / coefficient maps on finite-coefficient H^n.

    data carries "source" and "target" CohomologyResult objects plus, per
    kind, "subgroup" (restriction), "projection" GroupHom G->Q (inflation),
    or "map" AbHom on coefficients (coefficient)."""
    hs: CohomologyResult = data["source"]
    ht: CohomologyResult = data["target"]
    if kind == "restriction":
        mat = pullback_matrix(inclusion_hom(data["subgroup"]),
                              hs.degree, hs.coeff.rank)
    elif kind == "inflation":
        mat = pullback_matrix(data["projection"], hs.degree, hs.coeff.rank)
    elif kind == "coefficient":
        phi: AbHom = data["map"]
        _check_equivariant(hs.coeff, ht.coeff, phi)
        blocks = (hs.base.order - 1) ** hs.degree
        mat = np.kron(np.eye(blocks, dtype=np.int64), phi.matrix)
    else:
        raise ValueError(f"unknown induced map kind {kind!r}")
    cols = [ht.subquotient.coords(_matmul(mat, np.asarray(g)))
        for g in hs.subquotient.generators()]
    m = np.array(cols, dtype=np.int64).T if cols else \
        np.zeros((len(ht.subquotient.factors), 0), dtype=np.int64)
    return AbHom(hs.group, ht.group, m)


def _check_equivariant(cs: CoeffModule, ct: CoeffModule, phi: AbHom):
    g = cs.acting_group
    mods = np.array(ct.group.invariant_factors, dtype=np.int64)
    for x in g.elements():
        lhs = phi.matrix @ cs.matrix(x)
        rhs = ct.matrix(x) @ phi.matrix
        if ct.rank and not ((lhs - rhs) % mods[:, None] == 0).all():
            raise ValueError("coefficient map is not equivariant")


# ---------------------------------------------------------------------------
# relative cohomology: mapping cone of restriction


class RelativeCone:
    """H^n(G;K) via the cone of C*(G) -> C*(K); C^x coefficients.

    Cone^n = C^n(G) ⊕ C^{n-1}(K); D(a, b) = (d a, res a - d b).
    """

    def __init__(self, group: FiniteGroup, k: SubgroupDatum, n: int,
                 modulus: Optional[int] = None):
        if not k.is_normal:
            raise ValueError("subgroup must be normal")
        self.base = group
        self.k = k
        self.kg, self.to_local = subgroup_as_group(k)
        self.degree = n
        self.modulus = modulus or group.order ** 2
        if self.modulus % group.order ** 2 != 0 and self.modulus % group.order != 0:
            raise ValueError("modulus too small for the cone")
        incl = inclusion_hom(k)
        self._sizes = {}
        integral = self._spot(group, incl, n, 0)
        reduced = self._spot(group, incl, n, self.modulus)
        self.h = CxCohomology(integral, reduced, self.modulus)
        self.factors = self.h.factors
        self.group = self.h.group

    def _cone_diff(self, g: FiniteGroup, incl: GroupHom, n: int) -> np.ndarray:
        """Cone^n -> Cone^{n+1}."""
        dg = _bar_matrix_cached(g, n, 1, None)
        dk = _bar_matrix_cached(self.kg, n - 1, 1, None) if n >= 1 else None
        res = pullback_matrix(incl, n)
        g1, k1 = g.order - 1, self.kg.order - 1
        rows = g1 ** (n + 1) + k1 ** n
        cols = g1 ** n + (k1 ** (n - 1) if n >= 1 else 0)
        M = np.zeros((rows, cols), dtype=np.int64)
        M[: g1 ** (n + 1), : g1 ** n] = dg
        M[g1 ** (n + 1):, : g1 ** n] = res
        if n >= 1:
            M[g1 ** (n + 1):, g1 ** n:] = -dk
        return M

    def _spot(self, g: FiniteGroup, incl: GroupHom, n: int, m: int) -> ComplexSpot:
        g1, k1 = g.order - 1, self.kg.order - 1
        mid = g1 ** n + (k1 ** (n - 1) if n >= 1 else 0)
        out = g1 ** (n + 1) + k1 ** n
        d_out = self._cone_diff(g, incl, n)
        d_in = self._cone_diff(g, incl, n - 1) if n >= 1 else None
        mid_mods = np.zeros(mid, dtype=np.int64) + m
        out_mods = np.zeros(out, dtype=np.int64) + m
        return ComplexSpot(mid_mods, d_in, d_out, out_mods)

    def split_vector(self, vec) -> tuple[np.ndarray, np.ndarray]:
        g1 = self.base.order - 1
        v = np.array(vec, dtype=object).reshape(-1)
        return v[: g1 ** self.degree], v[g1 ** self.degree:]

    def embed_h_k(self, beta_flat) -> np.ndarray:
        """(0, beta) for a (n-1)-cocycle beta on K."""
        g1 = self.base.order - 1
        out = np.zeros(g1 ** self.degree + (self.kg.order - 1) ** (self.degree - 1),
                       dtype=object)
        out[g1 ** self.degree:] = np.array(beta_flat, dtype=object).reshape(-1)
        return out


def relative_der_complex(group: FiniteGroup, k: SubgroupDatum, n: int = 3,
                         modulus: Optional[int] = None) -> RelativeCone:
    """The paper-facing relative complex; degree 3 is the default of interest."""
    if n > MAX_DEGREE:
        raise CapExceeded(f"degree cap is {MAX_DEGREE}")
    return RelativeCone(group, k, n, modulus)
