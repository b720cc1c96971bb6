"""Finite groups by multiplication table: catalog, quotients, actions.

Elements are dense indices 0..order-1 with 0 the identity; all structure is
precomputed tables, so every downstream enumeration loop is array lookups.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Optional, Sequence

import numpy as np

from . import config
from .abelian import FinAbGroup, _snf, _diag_of
from .config import CapExceeded


class GroupError(ValueError):
    """Invalid table, non-closure, or failed structural precondition."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    mult: np.ndarray
    inverse: np.ndarray
    name: str = "G"
    labels: Optional[tuple[str, ...]] = None

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, g: int, x: int) -> int:
        """g x g^{-1}"""
        return int(self.mult[self.mult[g, x], self.inverse[g]])

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.mult == self.mult.T).all())

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            n += 1
        return n

    @cached_property
    def exponent(self) -> int:
        e = 1
        for a in self.elements():
            e = math.lcm(e, self.element_order(a))
        return e

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes sorted by least member; the identity class comes first."""
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for x in self.elements():
            if seen[x]:
                continue
            cls = {self.conj(g, x) for g in self.elements()}
            for y in cls:
                seen[y] = True
            classes.append(tuple(sorted(cls)))
        classes.sort(key=lambda c: c[0])
        return tuple(classes)

    def class_of(self, x: int) -> int:
        for i, cls in enumerate(self.conjugacy_classes):
            if x in cls:
                return i
        raise GroupError("element outside group")

    def centralizer(self, a: int) -> list[int]:
        return [g for g in self.elements() if self.mul(g, a) == self.mul(a, g)]

    def power(self, a: int, k: int) -> int:
        k %= self.element_order(a)
        x = 0
        for _ in range(k):
            x = self.mul(x, a)
        return x

    def __str__(self):
        return f"{self.name} (order {self.order})"


def make_group(mult, name: str = "G", labels=None, skip_checks=False) -> FiniteGroup:
    """Validate a table (identity, Latin square, associativity) and wrap it."""
    m = np.asarray(mult, dtype=np.int64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise GroupError("multiplication table must be square")
    n = m.shape[0]
    if n == 0:
        raise GroupError("empty table")
    if n > config.max_order():
        raise CapExceeded(f"group order {n} exceeds cap {config.max_order()}")
    if m.min() < 0 or m.max() >= n:
        raise GroupError("table entries out of range")
    if not skip_checks:
        if not ((m[0, :] == np.arange(n)).all() and (m[:, 0] == np.arange(n)).all()):
            raise GroupError("element 0 is not a two-sided identity")
        ar = np.arange(n)
        for i in range(n):
            if sorted(m[i, :]) != list(ar) or sorted(m[:, i]) != list(ar):
                raise GroupError("table is not a Latin square")
        if not (m[m] == m[:, m]).all():
            # m[m][i,j,k] = m[m[i,j],k]; m[:,m][i,j,k] = m[i, m[j,k]]
            raise GroupError("table is not associative")
    inv = np.zeros(n, dtype=np.int64)
    for i in range(n):
        js = np.nonzero(m[i, :] == 0)[0]
        inv[i] = js[0]
    return FiniteGroup(order=n, mult=m, inverse=inv, name=name,
                       labels=tuple(labels) if labels else None)


# ---------------------------------------------------------------------------
# catalog


def trivial_group() -> FiniteGroup:
    return make_group([[0]], name="1", labels=("e",))


def cyclic_group(n: int) -> FiniteGroup:
    i = np.arange(n)
    return make_group((i[:, None] + i[None, :]) % n, name=f"Z/{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Order 2n; index e*n + k encodes s^e r^k with s r s = r^{-1}."""
    if n < 1:
        raise GroupError("dihedral parameter must be >= 1")
    size = 2 * n
    m = np.zeros((size, size), dtype=np.int64)
    labels = []
    for e1, k1 in product(range(2), range(n)):
        for e2, k2 in product(range(2), range(n)):
            e = (e1 + e2) % 2
            k = ((k1 if e2 == 0 else -k1) + k2) % n
            m[e1 * n + k1, e2 * n + k2] = e * n + k
    for e, k in product(range(2), range(n)):
        labels.append(("s" if e else "") + (f"r{k}" if k else ("e" if not e else "")))
    return make_group(m, name=f"D{n}", labels=labels)


def quaternion_group() -> FiniteGroup:
    """Q8 = <x, y | x^4, y^2 = x^2, yxy^{-1} = x^{-1}>, index a + 4b for x^a y^b."""
    m = np.zeros((8, 8), dtype=np.int64)
    for a, b in product(range(4), range(2)):
        for c, d in product(range(4), range(2)):
            if b == 0:
                aa, bb = (a + c) % 4, d
            elif d == 0:
                aa, bb = (a - c) % 4, 1
            else:
                aa, bb = (a - c + 2) % 4, 0
            m[a + 4 * b, c + 4 * d] = aa + 4 * bb
    labels = ["e", "x", "x2", "x3", "y", "xy", "x2y", "x3y"]
    return make_group(m, name="Q8", labels=labels)


def _perm_group(perms: list[tuple[int, ...]], name: str) -> FiniteGroup:
    perms = sorted(perms)
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    m = np.zeros((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            m[i, j] = index[tuple(p[q[x]] for x in range(len(p)))]
    labels = ["".join(map(str, p)) for p in perms]
    return make_group(m, name=name, labels=labels)


def symmetric_group(n: int) -> FiniteGroup:
    if n > 4:
        raise CapExceeded("sym n supported for n <= 4")
    from itertools import permutations
    return _perm_group([tuple(p) for p in permutations(range(max(n, 1)))], f"S{n}")


def alternating_group_4() -> FiniteGroup:
    from itertools import permutations

    def sign(p):
        s = 1
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                if p[i] > p[j]:
                    s = -s
        return s

    evens = [tuple(p) for p in permutations(range(4)) if sign(p) == 1]
    return _perm_group(evens, "A4")


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    n = p ** k
    m = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            total, mul, a, b = 0, 1, i, j
            for _ in range(k):
                total += ((a + b) % p) * mul
                a //= p
                b //= p
                mul *= p
            m[i, j] = total
    return make_group(m, name=f"(Z/{p})^{k}")


def heisenberg_3() -> FiniteGroup:
    """Upper unitriangular 3x3 over F_3; (a,b,c) with c the corner entry."""
    m = np.zeros((27, 27), dtype=np.int64)
    enc = lambda a, b, c: a + 3 * b + 9 * c
    for a, b, c in product(range(3), repeat=3):
        for x, y, z in product(range(3), repeat=3):
            m[enc(a, b, c), enc(x, y, z)] = enc((a + x) % 3, (b + y) % 3,
                                                (c + z + a * y) % 3)
    return make_group(m, name="Heis3")


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    n1, n2 = g1.order, g2.order
    m = np.zeros((n1 * n2, n1 * n2), dtype=np.int64)
    for a1, a2 in product(range(n1), range(n2)):
        for b1, b2 in product(range(n1), range(n2)):
            m[a1 * n2 + a2, b1 * n2 + b2] = g1.mul(a1, b1) * n2 + g2.mul(a2, b2)
    return make_group(m, name=f"{g1.name}x{g2.name}")


_CATALOG_DOC = [
    ("trivial", "the one-element group"),
    ("cyclic n", "Z/n with mult(i,j) = (i+j) mod n"),
    ("dihedral n", "order 2n, s^e r^k indexed e*n+k"),
    ("quaternion8", "Q8 on x^a y^b indexed a+4b"),
    ("sym n", "S_n for n <= 4, permutations in lexicographic order"),
    ("alt4", "A4, even permutations in lexicographic order"),
    ("elementary-abelian p k", "(Z/p)^k, little-endian digit vectors"),
    ("heisenberg 3", "unitriangular 3x3 over F_3, order 27"),
]


def catalog_group(spec: str) -> FiniteGroup:
    parts = spec.strip().split()
    if not parts:
        raise GroupError("empty catalog spec")
    kind, args = parts[0], parts[1:]
    if kind == "trivial":
        return trivial_group()
    if kind == "cyclic":
        return cyclic_group(int(args[0]))
    if kind == "dihedral":
        return dihedral_group(int(args[0]))
    if kind == "quaternion8":
        return quaternion_group()
    if kind == "sym":
        return symmetric_group(int(args[0]))
    if kind == "alt4":
        return alternating_group_4()
    if kind == "elementary-abelian":
        return elementary_abelian(int(args[0]), int(args[1]))
    if kind == "heisenberg":
        if int(args[0]) != 3:
            raise CapExceeded("heisenberg is catalogued at p=3 only")
        return heisenberg_3()
    raise GroupError(f"unknown catalog group {spec!r}")


def _closure_from_generators(degree: int, gens: list[tuple[int, ...]]) -> FiniteGroup:
    ident = tuple(range(degree))
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupError("generator is not a permutation")
    els = {ident}
    frontier = [ident]
    cap = config.max_order()
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[x]] for x in range(degree))
                if q not in els:
                    els.add(q)
                    new.append(q)
                    if len(els) > cap:
                        raise CapExceeded(f"generator closure exceeds cap {cap}")
        frontier = new
    return _perm_group(sorted(els), f"perm{degree}")


def load_group(spec) -> FiniteGroup:
    """Build a group from a group-spec document.

    Accepts `catalog:<name> [params]`, a JSON string, or a dict of the two
    documented shapes ({"order", "mult"} or {"degree", "generators"}).
    """
    if isinstance(spec, str):
        s = spec.strip()
        if s.startswith("catalog:"):
            return catalog_group(s[len("catalog:"):])
        try:
            spec = json.loads(s)
        except json.JSONDecodeError as e:
            raise GroupError(f"unparseable group spec {s!r}") from e
    if not isinstance(spec, dict):
        raise GroupError("group spec must be a string or an object")
    if "mult" in spec:
        m = spec["mult"]
        if "order" in spec and len(m) != spec["order"]:
            raise GroupError("declared order does not match table size")
        return make_group(m, name=spec.get("name", "G"))
    if "generators" in spec:
        gens = [tuple(g) for g in spec["generators"]]
        return _closure_from_generators(int(spec["degree"]), gens)
    raise GroupError("group object needs 'mult' or 'generators'")


def catalog_names() -> list[str]:
    return [name for name, _ in _CATALOG_DOC]


# ---------------------------------------------------------------------------
# homomorphisms, subgroups, actions


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    image: np.ndarray

    def __post_init__(self):
        img = np.asarray(self.image, dtype=np.int64)
        object.__setattr__(self, "image", img)
        if img.shape != (self.source.order,):
            raise GroupError("image vector has wrong length")
        if img[0] != 0:
            raise GroupError("homomorphism must fix the identity")
        s, t = self.source.mult, self.target.mult
        if not (img[s] == t[img[:, None], img[None, :]]).all():
            raise GroupError("not a homomorphism")

    def apply(self, x: int) -> int:
        return int(self.image[x])


@dataclass(frozen=True, eq=False)
class SubgroupDatum:
    parent: FiniteGroup
    members: tuple[int, ...]
    is_normal: bool = field(init=False)

    def __post_init__(self):
        mem = tuple(sorted(set(int(x) for x in self.members)))
        object.__setattr__(self, "members", mem)
        g = self.parent
        if 0 not in mem:
            raise GroupError("subgroup must contain the identity")
        ms = set(mem)
        for a in mem:
            if g.inv(a) not in ms:
                raise GroupError("subgroup not closed under inverse")
            for b in mem:
                if g.mul(a, b) not in ms:
                    raise GroupError("subgroup not closed under multiplication")
        normal = all(g.conj(x, a) in ms for x in g.elements() for a in mem)
        object.__setattr__(self, "is_normal", normal)

    @property
    def order(self) -> int:
        return len(self.members)


def generated_subgroup(g: FiniteGroup, gens: Sequence[int]) -> SubgroupDatum:
    els = {0}
    frontier = [0]
    gens = [int(x) for x in gens]
    while frontier:
        new = []
        for a in frontier:
            for x in gens:
                b = g.mul(a, x)
                if b not in els:
                    els.add(b)
                    new.append(b)
        frontier = new
    return SubgroupDatum(g, tuple(sorted(els)))


def center_subgroup(g: FiniteGroup) -> SubgroupDatum:
    members = [a for a in g.elements()
               if all(g.mul(a, b) == g.mul(b, a) for b in g.elements())]
    return SubgroupDatum(g, tuple(members))


def derived_subgroup(g: FiniteGroup) -> SubgroupDatum:
    comms = set()
    for a in g.elements():
        for b in g.elements():
            comms.add(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))))
    return generated_subgroup(g, sorted(comms))


def subgroup_as_group(k: SubgroupDatum) -> tuple[FiniteGroup, dict[int, int]]:
    """Re-index a subgroup into its own FiniteGroup; returns (group, parent->local)."""
    members = list(k.members)
    to_local = {m: i for i, m in enumerate(members)}
    n = len(members)
    m = np.zeros((n, n), dtype=np.int64)
    g = k.parent
    for i, a in enumerate(members):
        for j, b in enumerate(members):
            m[i, j] = to_local[g.mul(a, b)]
    labels = [g.label(a) for a in members]
    return make_group(m, name=f"{g.name}|sub{n}", labels=labels), to_local


@dataclass(frozen=True, eq=False)
class GroupAction:
    group: FiniteGroup
    set_size: int
    table: np.ndarray  # (order, set_size) -> point

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        object.__setattr__(self, "table", t)
        g = self.group
        if t.shape != (g.order, self.set_size):
            raise GroupError("action table has wrong shape")
        if not (t[0] == np.arange(self.set_size)).all():
            raise GroupError("identity must act trivially")
        for a in g.elements():
            if sorted(t[a]) != list(range(self.set_size)):
                raise GroupError("group element does not act by a bijection")
        # act(g, act(h, x)) == act(gh, x)
        for a in g.elements():
            for b in g.elements():
                if not (t[a][t[b]] == t[g.mul(a, b)]).all():
                    raise GroupError("not a left action")

    def act(self, a: int, x: int) -> int:
        return int(self.table[a, x])


def action_from_generator_images(g: FiniteGroup, set_size: int,
                                 images: dict[int, Sequence[int]]) -> GroupAction:
    """Extend images of generators to the whole group by BFS over words."""
    table = -np.ones((g.order, set_size), dtype=np.int64)
    table[0] = np.arange(set_size)
    frontier = [0]
    while frontier:
        new = []
        for a in frontier:
            for x, perm in images.items():
                b = g.mul(x, a)
                if table[b][0] < 0:
                    table[b] = np.asarray(perm)[table[a]]
                    new.append(b)
        frontier = new
    if (table < 0).any():
        raise GroupError("generator images do not reach the whole group")
    return GroupAction(g, set_size, table)


def trivial_action(g: FiniteGroup, set_size: int = 1) -> GroupAction:
    return GroupAction(g, set_size, np.tile(np.arange(set_size), (g.order, 1)))


def act_orbits(a: GroupAction) -> list[tuple[list[int], int, SubgroupDatum]]:
    """Orbits (sorted), least-point representative, full stabilizer of the rep."""
    g = a.group
    seen = set()
    out = []
    for x in range(a.set_size):
        if x in seen:
            continue
        orbit = sorted({a.act(q, x) for q in g.elements()})
        seen.update(orbit)
        rep = orbit[0]
        stab = [q for q in g.elements() if a.act(q, rep) == rep]
        out.append((orbit, rep, SubgroupDatum(g, tuple(stab))))
    return out


# ---------------------------------------------------------------------------
# quotients with section


@dataclass(frozen=True, eq=False)
class QuotientDatum:
    quotient: FiniteGroup
    projection: GroupHom
    section: np.ndarray        # Q -> G, normalized: section[0] == 0
    cocycle: np.ndarray        # (|Q|,|Q|) -> element of K (as G-element)
    cosets: tuple[tuple[int, ...], ...]


def quotient_with_section(g: FiniteGroup, k: SubgroupDatum) -> QuotientDatum:
    """G/K with the least-member coset ordering and normalized section.

    The cocycle is f(q,q') = s(q) s(q') s(qq')^{-1}, valued in K."""
    if k.parent is not g:
        raise GroupError("subgroup datum belongs to a different group")
    if not k.is_normal:
        raise GroupError("subgroup is not normal")
    members = set(k.members)
    cosets = []
    assigned = {}
    for x in g.elements():
        if x in assigned:
            continue
        coset = tuple(sorted(g.mul(x, h) for h in k.members))
        for y in coset:
            assigned[y] = None
        cosets.append(coset)
    cosets.sort(key=lambda c: c[0])
    index = {}
    for i, coset in enumerate(cosets):
        for y in coset:
            index[y] = i
    nq = len(cosets)
    qmult = np.zeros((nq, nq), dtype=np.int64)
    section = np.array([c[0] for c in cosets], dtype=np.int64)
    for i in range(nq):
        for j in range(nq):
            qmult[i, j] = index[g.mul(section[i], section[j])]
    quotient = make_group(qmult, name=f"{g.name}/{k.order}")
    proj = GroupHom(g, quotient, np.array([index[x] for x in g.elements()]))
    f = np.zeros((nq, nq), dtype=np.int64)
    for i in range(nq):
        for j in range(nq):
            v = g.mul(g.mul(section[i], section[j]), g.inv(section[qmult[i, j]]))
            assert v in members
            f[i, j] = v
    assert section[0] == 0
    return QuotientDatum(quotient, proj, section, f, tuple(cosets))


def conj_band(g: FiniteGroup, k: SubgroupDatum):
    """Action of Q = G/K on the conjugacy classes of K, via any section.

    Returns (action, K as its own group, parent->local map, quotient datum)."""
    qd = quotient_with_section(g, k)
    kg, to_local = subgroup_as_group(k)
    classes = kg.conjugacy_classes
    local_class = {}
    for ci, cls in enumerate(classes):
        for x in cls:
            local_class[x] = ci
    nq = qd.quotient.order
    table = np.zeros((nq, len(classes)), dtype=np.int64)
    for q in range(nq):
        s = int(qd.section[q])
        for ci, cls in enumerate(classes):
            rep_parent = k.members[cls[0]]
            img = g.conj(s, rep_parent)
            table[q, ci] = local_class[to_local[img]]
    action = GroupAction(qd.quotient, len(classes), table)
    return action, kg, to_local, qd


# ---------------------------------------------------------------------------
# automorphisms


def _generating_sequence(g: FiniteGroup) -> list[int]:
    gens: list[int] = []
    have = {0}
    for x in g.elements():
        if x in have:
            continue
        gens.append(x)
        have = set(generated_subgroup(g, gens).members)
        if len(have) == g.order:
            break
    return gens


def automorphism_group(g: FiniteGroup) -> tuple[FiniteGroup, list[tuple[int, ...]]]:
    """All automorphisms, as a group under composition plus raw permutations.

    Permutations are sorted; composition convention (p*q)(x) = p(q(x))."""
    if g.order > config.aut_search_max():
        raise CapExceeded(
            f"automorphism search capped at order {config.aut_search_max()}")
    gens = _generating_sequence(g)
    orders = [g.element_order(x) for x in g.elements()]
    by_order: dict[int, list[int]] = {}
    for x in g.elements():
        by_order.setdefault(orders[x], []).append(x)

    # express every element as a word in the generators once
    words: dict[int, tuple[int, ...]] = {0: ()}
    frontier = [0]
    while frontier:
        new = []
        for a in frontier:
            for gi, x in enumerate(gens):
                b = g.mul(a, x)
                if b not in words:
                    words[b] = words[a] + (gi,)
                    new.append(b)
        frontier = new

    auts = []

    def extend(i, partial_images):
        if i == len(gens):
            perm = np.zeros(g.order, dtype=np.int64)
            for el, word in words.items():
                y = 0
                for gi in word:
                    y = g.mul(y, partial_images[gi])
                perm[el] = y
            if sorted(perm) != list(range(g.order)):
                return
            if (perm[g.mult] == g.mult[perm[:, None], perm[None, :]]).all():
                auts.append(tuple(int(x) for x in perm))
            return
        for cand in by_order[orders[gens[i]]]:
            extend(i + 1, partial_images + [cand])

    extend(0, [])
    auts = sorted(set(auts))
    index = {p: i for i, p in enumerate(auts)}
    n = len(auts)
    if n > config.max_order():
        raise CapExceeded(f"automorphism group order {n} exceeds group cap")
    ident = tuple(range(g.order))
    order_key = auts.index(ident)
    # reorder so that the identity automorphism is element 0
    auts = [auts[order_key]] + auts[:order_key] + auts[order_key + 1:]
    index = {p: i for i, p in enumerate(auts)}
    m = np.zeros((n, n), dtype=np.int64)
    for i, p in enumerate(auts):
        for j, q in enumerate(auts):
            m[i, j] = index[tuple(p[q[x]] for x in range(g.order))]
    return make_group(m, name=f"Aut({g.name})"), auts


# ---------------------------------------------------------------------------
# abelian structure of an abelian FiniteGroup


@dataclass(frozen=True, eq=False)
class AbelianStructure:
    group: FiniteGroup
    ab: FinAbGroup
    to_vec: np.ndarray    # element index -> coordinate vector
    from_vec: dict        # coordinate tuple -> element index

    def vec(self, x: int) -> np.ndarray:
        return self.to_vec[x].copy()

    def element(self, v) -> int:
        key = tuple(int(c) % d for c, d in zip(v, self.ab.invariant_factors))
        return self.from_vec[key]


def abelian_structure(g: FiniteGroup) -> AbelianStructure:
    """Invariant-factor coordinates for an abelian group given by its table."""
    if not g.is_abelian:
        raise GroupError("group is not abelian")
    if g.order == 1:
        return AbelianStructure(g, FinAbGroup(()), np.zeros((1, 0), dtype=np.int64),
                                {(): 0})
    gens = _generating_sequence(g)
    gen_orders = [g.element_order(x) for x in gens]
    # relation lattice: all exponent tuples that multiply to the identity
    rels = []
    for tup in product(*[range(o) for o in gen_orders]):
        y = 0
        for gi, e in enumerate(tup):
            y = g.mul(y, g.power(gens[gi], e))
        if y == 0:
            rels.append(list(tup))
    for gi, o in enumerate(gen_orders):
        row = [0] * len(gens)
        row[gi] = o
        rels.append(row)
    relmat = np.array(rels, dtype=object).T  # columns are relations
    work = _snf(relmat, want_u=True)
    diag = _diag_of(work.D)
    diag += [0] * (len(gens) - len(diag))
    keep = [i for i, d in enumerate(diag) if d != 1]
    assert all(diag[i] != 0 for i in keep), "abelian structure must be finite"
    factors = tuple(diag[i] for i in keep)
    ab = FinAbGroup(factors)
    assert ab.order == g.order
    u = np.array(work.U, dtype=object)
    to_vec = np.zeros((g.order, len(keep)), dtype=np.int64)
    for x in g.elements():
        # write x in the generators by greedy digit extraction
        expo = _exponents_of(g, gens, gen_orders, x)
        y = u @ np.array(expo, dtype=object)
        to_vec[x] = [int(y[i]) % diag[i] for i in keep]
    from_vec = {tuple(int(c) for c in to_vec[x]): x for x in g.elements()}
    assert len(from_vec) == g.order
    return AbelianStructure(g, ab, to_vec, from_vec)


def _exponents_of(g: FiniteGroup, gens, gen_orders, x: int) -> list[int]:
    for tup in product(*[range(o) for o in gen_orders]):
        y = 0
        for gi, e in enumerate(tup):
            y = g.mul(y, g.power(gens[gi], e))
        if y == x:
            return list(tup)
    raise GroupError("generators do not generate")
