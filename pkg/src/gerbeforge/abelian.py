"""Finite abelian groups and exact integer linear algebra.

Everything downstream (group/groupoid cohomology, extension classification,
class counting) reduces to two primitives implemented here:

  * Smith normal form of integer matrices with tracked unimodular transforms,
    in exact arbitrary-precision arithmetic (int64 fast path, Python-int
    fallback on overflow risk);
  * subquotients ker/im of maps between direct sums of cyclic groups, with
    canonical class coordinates and explicit generator lifting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .config import CapExceeded, snf_long_side

_INT64_GUARD = np.int64(1) << 59


class _NeedExact(Exception):
    """int64 entries got close to overflow; redo with Python ints."""


def _as_int_matrix(m, dtype) -> np.ndarray:
    a = np.array(m, dtype=dtype)
    if a.ndim != 2:
        raise ValueError("expected a 2-d integer matrix")
    return a


def _matmul(a, b) -> np.ndarray:
    """Exact integer matmul: int64 when provably overflow-free, else objects."""
    A, B = np.asarray(a), np.asarray(b)
    if A.dtype == np.int64 and B.dtype == np.int64:
        if A.size and B.size:
            ma = int(np.abs(A).max())
            mb = int(np.abs(B).max())
            k = A.shape[-1]
            if ma and mb and ma * mb * k >= (1 << 62):
                return np.array(A, dtype=object) @ np.array(B, dtype=object)
        return A @ B
    return np.array(A, dtype=object) @ np.array(B, dtype=object)


def _compact(a: np.ndarray) -> np.ndarray:
    """Convert an object array back to int64 when entries fit."""
    if a.dtype != object or a.size == 0:
        return a
    mx = max(abs(int(x)) for x in a.flat)
    if mx < (1 << 62):
        return a.astype(np.int64)
    return a


def _balanced_reduce(a: np.ndarray, L: int) -> None:
    """In place: entries to balanced residues in (-L/2, L/2]."""
    a %= L
    half = L // 2
    np.subtract(a, L, out=a, where=a > half)


def _round_div(a: np.ndarray, p):
    """Elementwise nearest-integer division by p > 0."""
    return (2 * a + p) // (2 * p)


class _SnfWork:
    """Row/col elimination state.  U @ A0 @ V == D (mod L if reducing).

    The inner loops only touch rows/columns that actually carry nonzeros,
    which is what makes the very sparse bar-complex matrices tractable.
    Pivot selection follows smallest-nonzero-absolute-value with a
    fewest-nonzeros tie-break (capped candidate list; the choice only
    affects speed, never correctness)."""

    def __init__(self, a, want_u, want_v, want_vinv, want_uinv, reduce_mod, dtype):
        self.D = _as_int_matrix(a, dtype)
        m, n = self.D.shape
        eye = lambda k: np.eye(k, dtype=dtype)
        self.U = eye(m) if want_u else None
        self.Uinv = eye(m) if want_uinv else None
        self.V = eye(n) if want_v else None
        self.Vinv = eye(n) if want_vinv else None
        self.L = reduce_mod
        self.guard = dtype is np.int64
        self.rank = 0
        self._row_nnz = np.count_nonzero(self.D != 0, axis=1).astype(np.int64)
        self._steps = 0

    def _recount_rows(self, rows, k):
        if len(rows) == 0:
            return
        block = self.D[rows, k:]
        self._row_nnz[rows] = np.count_nonzero(block != 0, axis=1)

    def _check(self, force=False):
        if not self.guard:
            return
        self._steps += 1
        if not force and self._steps % 32:
            return
        for mat in (self.D, self.U, self.V, self.Vinv, self.Uinv):
            if mat is not None and mat.size and np.abs(mat).max() > _INT64_GUARD:
                raise _NeedExact

    def _swap_rows(self, i, j):
        if i == j:
            return
        self.D[[i, j], :] = self.D[[j, i], :]
        self._row_nnz[[i, j]] = self._row_nnz[[j, i]]
        if self.U is not None:
            self.U[[i, j], :] = self.U[[j, i], :]
        if self.Uinv is not None:
            self.Uinv[:, [i, j]] = self.Uinv[:, [j, i]]

    def _swap_cols(self, i, j):
        if i == j:
            return
        self.D[:, [i, j]] = self.D[:, [j, i]]
        if self.V is not None:
            self.V[:, [i, j]] = self.V[:, [j, i]]
        if self.Vinv is not None:
            self.Vinv[[i, j], :] = self.Vinv[[j, i], :]

    def _negate_row(self, i):
        self.D[i, :] = -self.D[i, :]
        if self.U is not None:
            self.U[i, :] = -self.U[i, :]
        if self.Uinv is not None:
            self.Uinv[:, i] = -self.Uinv[:, i]

    def _row_ops(self, k, rows_q):
        """rows k+1.. minus q*row k (q aligned with D[k+1:]); sparse-aware."""
        nz = np.nonzero(rows_q)[0]
        if len(nz) == 0:
            return
        rows = k + 1 + nz
        q = rows_q[nz]
        self.D[rows, k:] -= q[:, None] * self.D[k, k:]
        if self.L:
            # fancy indexing yields a copy; reduce it and write back
            blk = self.D[rows, k:]
            _balanced_reduce(blk, self.L)
            self.D[rows, k:] = blk
        if self.U is not None:
            self.U[rows, :] -= q[:, None] * self.U[k, :]
        if self.Uinv is not None:
            self.Uinv[:, k] += self.Uinv[:, rows] @ q
        self._recount_rows(rows, k)

    def _col_ops(self, k, cols_q):
        nz = np.nonzero(cols_q)[0]
        if len(nz) == 0:
            return
        cols = k + 1 + nz
        q = cols_q[nz]
        pivot_col = self.D[k:, k]
        touched = k + np.nonzero(pivot_col)[0]
        self.D[k:, cols] -= pivot_col[:, None] * q[None, :]
        if self.L:
            blk = self.D[k:, cols]
            _balanced_reduce(blk, self.L)
            self.D[k:, cols] = blk
        if self.V is not None:
            self.V[:, cols] -= self.V[:, k][:, None] * q[None, :]
        if self.Vinv is not None:
            self.Vinv[k, :] += q @ self.Vinv[cols, :]
        self._recount_rows(touched, k)

    def _pick_pivot(self, k):
        active = k + np.nonzero(self._row_nnz[k:] > 0)[0]
        if len(active) == 0:
            return None
        # scan the sparsest few rows first; a unit entry cannot be beaten
        order = active[np.argsort(self._row_nnz[active], kind="stable")]
        best = None  # (abs, nnz, i, j)
        for i in order[:48]:
            row = self.D[i, k:]
            nzj = np.nonzero(row)[0]
            vals = np.abs(row[nzj])
            jj = int(nzj[np.argmin(vals)])
            a = int(vals.min())
            cand = (a, int(self._row_nnz[i]), int(i), k + jj)
            if best is None or cand < best:
                best = cand
            if a == 1:
                break
        if best is None or best[0] != 1:
            # no unit among the sparsest rows: do a full exact min scan
            sub = np.abs(self.D[k:, k:])
            masked = np.where(sub == 0, sub.max() + 1, sub)
            i, j = np.unravel_index(int(np.argmin(masked)), masked.shape)
            if best is None or int(masked[i, j]) < best[0]:
                best = (int(masked[i, j]), 0, k + int(i), k + int(j))
        return best[2], best[3]

    def run(self):
        D = self.D
        m, n = D.shape
        k = 0
        while k < min(m, n):
            pos = self._pick_pivot(k)
            if pos is None:
                break
            self._swap_rows(k, pos[0])
            self._swap_cols(k, pos[1])
            while True:
                if D[k, k] < 0:
                    self._negate_row(k)
                p = D[k, k]
                col = D[k + 1 :, k]
                if col.any():
                    self._row_ops(k, _round_div(col, p))
                    col = D[k + 1 :, k]
                    if col.any():
                        nz = np.nonzero(col)[0]
                        i = nz[np.argmin(np.abs(col[nz]))]
                        self._swap_rows(k, k + 1 + int(i))
                        continue
                p = D[k, k]
                row = D[k, k + 1 :]
                if row.any():
                    self._col_ops(k, _round_div(row, p))
                    row = D[k, k + 1 :]
                    if row.any():
                        nz = np.nonzero(row)[0]
                        j = nz[np.argmin(np.abs(row[nz]))]
                        self._swap_cols(k, k + 1 + int(j))
                        continue
                if not D[k + 1 :, k].any():
                    break
            self._row_nnz[k] = 0  # row k leaves the active region
            self._check()
            k += 1
        self.rank = k
        self._fix_divisibility()
        self._check(force=True)

    def _fix_divisibility(self):
        D = self.D
        r = self.rank
        changed = True
        while changed:
            changed = False
            for i in range(r - 1):
                a, b = int(D[i, i]), int(D[i + 1, i + 1])
                if a and b % a != 0:
                    changed = True
                    # col_i += col_{i+1}, then clear the 2x2 block by Euclid
                    self._col_pair_add(i)
                    self._euclid_block(i)

    def _col_pair_add(self, i):
        self.D[:, i] += self.D[:, i + 1]
        if self.V is not None:
            self.V[:, i] += self.V[:, i + 1]
        if self.Vinv is not None:
            self.Vinv[i + 1, :] -= self.Vinv[i, :]

    def _euclid_block(self, i):
        D = self.D
        while True:
            if D[i, i] < 0:
                self._negate_row(i)
            if D[i + 1, i] != 0:
                q = _round_div(D[i + 1 : i + 2, i], D[i, i])
                self._row_ops_pair(i, int(q[0]))
                if D[i + 1, i] != 0:
                    self._swap_rows(i, i + 1)
                    continue
            break
        # row i may have picked up an entry at column i+1
        if D[i, i + 1] != 0:
            q = int(D[i, i + 1]) // int(D[i, i])
            assert q * int(D[i, i]) == int(D[i, i + 1])
            self._col_op_single(i, q)
        if D[i + 1, i + 1] < 0:
            self._negate_row(i + 1)

    def _row_ops_pair(self, i, q):
        self.D[i + 1, :] -= q * self.D[i, :]
        if self.U is not None:
            self.U[i + 1, :] -= q * self.U[i, :]
        if self.Uinv is not None:
            self.Uinv[:, i] += q * self.Uinv[:, i + 1]

    def _col_op_single(self, i, q):
        self.D[:, i + 1] -= q * self.D[:, i]
        if self.V is not None:
            self.V[:, i + 1] -= q * self.V[:, i]
        if self.Vinv is not None:
            self.Vinv[i, :] += q * self.Vinv[i + 1, :]


def _snf(a, want_u=False, want_v=False, want_vinv=False, want_uinv=False,
         reduce_mod=None) -> _SnfWork:
    for dtype in (np.int64, object):
        work = _SnfWork(a, want_u, want_v, want_vinv, want_uinv, reduce_mod, dtype)
        try:
            work.run()
            return work
        except _NeedExact:
            continue
    raise AssertionError("unreachable")


def _diag_of(D) -> list[int]:
    r = min(D.shape)
    return [int(D[i, i]) for i in range(r)]


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ original @ V == D with U, V unimodular and D diagonal, d_i | d_{i+1}."""

    U: np.ndarray
    D: np.ndarray
    V: np.ndarray
    original: np.ndarray

    def diagonal(self) -> list[int]:
        return _diag_of(self.D)

    def rank(self) -> int:
        return sum(1 for d in self.diagonal() if d != 0)


def smith_normal_form(m) -> SmithDecomposition:
    """Exact Smith normal form; raises CapExceeded above the configured size."""
    a = np.array(m, dtype=object)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if max(a.shape) > snf_long_side():
        raise CapExceeded(f"matrix long side {max(a.shape)} exceeds SNF cap")
    work = _snf(a, want_u=True, want_v=True)
    d = work.D
    # round-trip is part of the contract, cheap to enforce here
    u, v = work.U, work.V
    check = np.array(u, dtype=object) @ np.array(a, dtype=object) @ np.array(v, dtype=object)
    assert (check == np.array(d, dtype=object)).all(), "SNF round trip failed"
    return SmithDecomposition(U=u, D=d, V=v, original=a)


# ---------------------------------------------------------------------------
# finite abelian groups


def _normalize_factors(factors: Sequence[int]) -> tuple[int, ...]:
    fs = tuple(int(f) for f in factors)
    for f in fs:
        if f < 2:
            raise ValueError("invariant factors must be >= 2")
    for a, b in zip(fs, fs[1:]):
        if b % a != 0:
            raise ValueError(f"divisibility chain violated: {a} does not divide {b}")
    return fs


@dataclass(frozen=True)
class FinAbGroup:
    """Direct sum of Z/d_i with d_1 | d_2 | ... ; elements are int vectors."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors",
                           _normalize_factors(self.invariant_factors))

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def zero(self) -> np.ndarray:
        return np.zeros(self.rank, dtype=np.int64)

    def reduce(self, v) -> np.ndarray:
        vec = np.asarray(v, dtype=np.int64).copy()
        if vec.shape != (self.rank,):
            raise ValueError("element vector has wrong length")
        for i, d in enumerate(self.invariant_factors):
            vec[i] %= d
        return vec

    def elements(self) -> Iterator[np.ndarray]:
        for i in range(self.order):
            yield self.unindex(i)

    def index(self, v) -> int:
        vec = self.reduce(v)
        idx = 0
        for x, d in zip(vec, self.invariant_factors):
            idx = idx * d + int(x)
        return idx

    def unindex(self, idx: int) -> np.ndarray:
        out = np.zeros(self.rank, dtype=np.int64)
        for i in range(self.rank - 1, -1, -1):
            d = self.invariant_factors[i]
            out[i] = idx % d
            idx //= d
        return out

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


@dataclass(frozen=True)
class AbHom:
    """Homomorphism between finite abelian groups, as an integer matrix
    acting on coordinate column vectors."""

    source: FinAbGroup
    target: FinAbGroup
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.int64)
        if m.shape != (self.target.rank, self.source.rank):
            raise ValueError("matrix shape does not match source/target ranks")
        object.__setattr__(self, "matrix", m)
        for j, dj in enumerate(self.source.invariant_factors):
            col = m[:, j] * dj
            for i, di in enumerate(self.target.invariant_factors):
                if col[i] % di != 0:
                    raise ValueError("matrix is not well-defined on residues")

    def apply(self, v) -> np.ndarray:
        return self.target.reduce(self.matrix @ self.source.reduce(v))

    def compose(self, other: "AbHom") -> "AbHom":
        if other.target is not self.source and \
                other.target.invariant_factors != self.source.invariant_factors:
            raise ValueError("composition mismatch")
        return AbHom(other.source, self.target, self.matrix @ other.matrix)


# ---------------------------------------------------------------------------
# subquotients ker(d_out)/im(d_in) of ∏ Z/m_j


class Subquotient:
    """H = {x : d_out·x ≡ 0 mod out_moduli} / (im d_in + moduli relations).

    The middle module is ∏_j Z/moduli[j]; moduli entries must be all zero
    (free: integral cochains) or all nonzero.  Provides canonical class
    coordinates, generator lifting, and membership witnesses.
    """

    def __init__(self, moduli, d_in=None, d_out=None, out_moduli=None):
        self.moduli = np.asarray(moduli, dtype=np.int64)
        n = len(self.moduli)
        self.size = n
        self._d_in = None if d_in is None else np.asarray(d_in)
        finite = bool(self.moduli.all()) if n else True
        if n and not finite and self.moduli.any():
            raise ValueError("moduli must be all zero or all nonzero")
        self._finite = finite

        # step 1: preimage lattice P of the kernel, as scaled columns of V
        if d_out is None or (hasattr(d_out, "size") and d_out.size == 0) or n == 0:
            self._V = np.eye(n, dtype=np.int64)
            self._Vinv = np.eye(n, dtype=np.int64)
            self._scales = [1] * n if finite else [1] * n
            self._kerdim = n
        else:
            d_out = np.asarray(d_out)
            out_moduli = np.asarray(out_moduli, dtype=np.int64)
            if out_moduli.all():
                L = int(np.lcm.reduce(out_moduli)) if out_moduli.size else 1
                scaled = np.array(d_out, dtype=object) * \
                    np.array([L // int(t) for t in out_moduli], dtype=object)[:, None]
                work = _snf(scaled, want_v=True, want_vinv=True, reduce_mod=L)
                diag = _diag_of(work.D)
                scales = [L // math.gcd(d, L) if d else 1 for d in diag]
                scales += [1] * (n - len(scales))
                self._V, self._Vinv = work.V, work.Vinv
                self._scales = scales
                self._kerdim = n
            else:
                # integral target: honest integer kernel
                work = _snf(d_out, want_v=True, want_vinv=True)
                r = work.rank
                self._V, self._Vinv = work.V, work.Vinv
                self._scales = [None] * r + [1] * (n - r)
                self._kerdim = n - r

        # step 2: relation generators expressed in P-coordinates
        rels = []
        if self._d_in is not None and self._d_in.size:
            rels.append(np.asarray(self._d_in))
        if finite and n:
            rels.append(np.diag(self.moduli))
        if rels:
            if any(r.dtype == object for r in rels):
                rels = [np.array(r, dtype=object) for r in rels]
            lg = np.concatenate(rels, axis=1)
        else:
            lg = np.zeros((n, 0), dtype=np.int64)
        W = self._p_coords_matrix(lg)

        # step 3: quotient structure
        work = _snf(W, want_u=True, want_uinv=True)
        diag = _diag_of(work.D)
        t = W.shape[0]
        factors = [abs(d) for d in diag] + [0] * (t - len(diag))
        self._U = work.U
        self._Uinv = work.Uinv
        self._all_factors = factors
        self._keep = [i for i, f in enumerate(factors) if f != 1]
        self.factors = tuple(factors[i] for i in self._keep)
        if any(f == 0 for f in self.factors):
            self.group = None  # infinite; internal callers only
        else:
            self.group = FinAbGroup(tuple(f for f in self.factors)) \
                if self.factors else FinAbGroup(())

    # -- lattice plumbing ---------------------------------------------------

    def _p_coords_matrix(self, cols: np.ndarray) -> np.ndarray:
        """P-basis coordinates of the given integer column vectors."""
        y = _matmul(self._Vinv, cols)
        if self._kerdim < self.size:
            r = self.size - self._kerdim
            if (y[:r] != 0).any():
                raise ValueError("vector not in the kernel lattice")
            return y[r:]
        out = np.zeros_like(y)
        for i, s in enumerate(self._scales):
            row = y[i]
            if s == 1:
                out[i] = row
            else:
                q = row // s
                if (row - q * s != 0).any():
                    raise ValueError("vector not in the kernel lattice")
                out[i] = q
        return out

    def _p_vector(self, y) -> np.ndarray:
        """Back from P-coordinates to the middle module."""
        yy = np.array(y, dtype=object)
        if self._kerdim < self.size:
            full = np.zeros(self.size, dtype=object)
            full[self.size - self._kerdim :] = yy
            return _matmul(self._V, full)
        scaled = yy * np.array(
            [s if s is not None else 1 for s in self._scales], dtype=object)
        return _matmul(self._V, scaled)

    # -- public interface ---------------------------------------------------

    @property
    def order(self) -> int:
        if any(f == 0 for f in self.factors):
            raise ValueError("subquotient has a free part")
        return math.prod(self.factors) if self.factors else 1

    def contains_cocycle(self, x) -> bool:
        try:
            self._p_coords_matrix(np.array(x, dtype=object).reshape(-1, 1))
        except ValueError:
            return False
        return True

    def coords(self, x) -> tuple[int, ...]:
        """Canonical class coordinates of a cocycle vector."""
        y = self._p_coords_matrix(np.asarray(x).reshape(-1, 1))[:, 0]
        h = _matmul(self._U, y)
        out = []
        for i in self._keep:
            f = self._all_factors[i]
            out.append(int(h[i]) % f if f else int(h[i]))
        return tuple(out)

    def generator(self, i: int) -> np.ndarray:
        """Cocycle vector representing the i-th canonical generator."""
        t = len(self._all_factors)
        e = np.zeros(t, dtype=object)
        e[self._keep[i]] = 1
        y = _matmul(self._Uinv, e)
        return self._p_vector(y)

    def generators(self) -> list[np.ndarray]:
        return [self.generator(i) for i in range(len(self.factors))]

    def lift(self, coords) -> np.ndarray:
        """A cocycle vector in the class with the given coordinates."""
        t = len(self._all_factors)
        e = np.zeros(t, dtype=object)
        for i, c in zip(self._keep, coords):
            e[i] = int(c)
        y = _matmul(self._Uinv, e)
        return self._p_vector(y)

    def is_trivial_class(self, x) -> bool:
        return all(c == 0 for c in self.coords(x))

    def witness(self, x) -> Optional[np.ndarray]:
        """If x is a trivial class, express it: y with d_in·y ≡ x (mod moduli).

        Returns the d_in-coefficient vector, or None when x is not in the
        image (or there is no d_in)."""
        if self._d_in is None or not self.is_trivial_class(x):
            return None
        cols = [np.array(self._d_in, dtype=object)]
        if self._finite and self.size:
            cols.append(np.diag(np.array(self.moduli, dtype=object)))
        M = np.concatenate(cols, axis=1)
        sol = solve_integer(M, np.array(x, dtype=object).reshape(-1))
        if sol is None:
            return None
        return sol[: self._d_in.shape[1]]


def kernel_lattice_basis(M, out_moduli) -> np.ndarray:
    """Integer basis columns of {x : M x ≡ 0 mod out_moduli} (full rank)."""
    M = np.array(M, dtype=object)
    mods = np.asarray(out_moduli, dtype=np.int64)
    assert mods.size == 0 or mods.all(), "kernel_lattice_basis needs finite moduli"
    n = M.shape[1]
    if M.size == 0:
        return np.eye(n, dtype=object)
    L = int(np.lcm.reduce(mods)) if mods.size else 1
    scaled = M * np.array([L // int(t) for t in mods], dtype=object)[:, None]
    work = _snf(scaled, want_v=True, reduce_mod=L)
    diag = _diag_of(work.D)
    scales = [L // math.gcd(d, L) if d else 1 for d in diag]
    scales += [1] * (n - len(scales))
    return np.array(work.V, dtype=object) * np.array(scales, dtype=object)[None, :]


def solve_integer(M, b) -> Optional[np.ndarray]:
    """One integer solution y of M y = b, or None."""
    M = np.asarray(M)
    b = np.array(b, dtype=object).reshape(-1)
    work = _snf(M, want_u=True, want_v=True)
    c = _matmul(work.U, b)
    diag = _diag_of(work.D)
    y = np.zeros(M.shape[1], dtype=object)
    for i in range(len(c)):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            if i < M.shape[1]:
                y[i] = c[i] // d
    return _matmul(work.V, y)


def solve_mod(M, b, moduli) -> Optional[np.ndarray]:
    """One solution y of M y ≡ b componentwise mod the target moduli."""
    M = np.array(M, dtype=object)
    mods = np.asarray(moduli, dtype=np.int64)
    if mods.size and mods.all():
        aug = np.concatenate([M, np.diag(np.array(mods, dtype=object))], axis=1)
    else:
        aug = M
    sol = solve_integer(aug, b)
    if sol is None:
        return None
    return sol[: M.shape[1]]


# ---------------------------------------------------------------------------
# spec-level operations


def hom_structure(hom: AbHom):
    """Kernel (with generator vectors) and cokernel (with projection) of hom."""
    kernel = Subquotient(
        moduli=hom.source.invariant_factors,
        d_out=hom.matrix,
        out_moduli=hom.target.invariant_factors,
    )
    cokernel = Subquotient(
        moduli=hom.target.invariant_factors,
        d_in=hom.matrix,
    )
    return kernel, cokernel


@dataclass(frozen=True)
class DualGroup:
    """A* = Hom(A, C^x) with the evaluation pairing in exponents mod N."""

    group: FinAbGroup          # abstractly isomorphic to A
    source: FinAbGroup
    modulus: int               # N = exponent of A
    action: Optional[dict]     # element -> matrix, contragredient band

    def pair_exponent(self, chi, a) -> int:
        """<chi, a> as an exponent mod N (the phase is exp(2 pi i k / N))."""
        chi = self.group.reduce(chi)
        a = self.source.reduce(a)
        n = self.modulus
        total = 0
        for c, x, d in zip(chi, a, self.source.invariant_factors):
            total += int(c) * int(x) * (n // int(d))
        return total % n


def contragredient_matrix(a: FinAbGroup, m: np.ndarray) -> np.ndarray:
    """Dual action matrix m* with <m*·chi, x> = <chi, m^{-1}·x>."""
    d = a.invariant_factors
    mm = np.asarray(m, dtype=np.int64)
    for j, dj in enumerate(d):
        for i, di in enumerate(d):
            if (int(mm[i, j]) * dj) % di != 0:
                raise ValueError("band matrix is not well-defined on residues")
    inv = _invert_automorphism(a, m)
    out = np.zeros_like(np.asarray(m, dtype=np.int64))
    for j in range(a.rank):
        for k in range(a.rank):
            num = int(inv[k, j]) * d[j]
            assert num % d[k] == 0, "matrix not well-defined for dualization"
            out[j, k] = (num // d[k]) % d[j]
    return out


def _invert_automorphism(a: FinAbGroup, m) -> np.ndarray:
    m = np.asarray(m, dtype=np.int64)
    cols = []
    mods = np.asarray(a.invariant_factors, dtype=np.int64)
    for j in range(a.rank):
        e = np.zeros(a.rank, dtype=object)
        e[j] = 1
        sol = solve_mod(m, e, mods)
        if sol is None:
            raise ValueError("matrix is not an automorphism")
        cols.append([int(x) % int(d) for x, d in zip(sol, mods)])
    return np.array(cols, dtype=np.int64).T


def dual_group(a: FinAbGroup, band: Optional[dict] = None) -> DualGroup:
    """Character group A* with evaluation pairing and contragredient action.

    `band`, when given, maps acting-group elements to automorphism matrices
    of A; the returned action satisfies <q·chi, x> = <chi, q^{-1}·x>.
    """
    dual_action = None
    if band is not None:
        dual_action = {}
        for g, mat in band.items():
            dual_action[g] = contragredient_matrix(a, mat)
    return DualGroup(
        group=FinAbGroup(a.invariant_factors),
        source=a,
        modulus=a.exponent,
        action=dual_action,
    )
