"""Linear codes over R_{s,p} through their component codes over Z_p.

A code is stored component-first: one generator matrix over Z_p per root
in I_s. The ring-level generator G = sum_i alpha_i G_i is a derived view.
Components may have different dimensions.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (
    AllComponentsZero,
    EnumerationCapExceeded,
    LengthMismatch,
    NotSystematic,
    RankDeficient,
    RingMismatch,
    ShapeMismatch,
    ValidationError,
    WrongComponentCount,
)
from .linalg import ZpMatrix, component_rank, pivot_columns, row_reduce, row_space_basis
from .ring import RingElement, RingParams, from_components, to_components

DEFAULT_ENUM_CAP = 10**7
_CHUNK = 1 << 15

RingCodeword = tuple[RingElement, ...]


def enumeration_cap() -> int:
    """Cap on enumerated codewords; ``RINGCODES_ENUM_CAP`` overrides the default."""
    raw = os.environ.get("RINGCODES_ENUM_CAP")
    if raw is None or not raw.strip():
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap < 1:
        raise ValidationError(f"RINGCODES_ENUM_CAP must be a positive integer, got {raw!r}")
    return cap


@dataclass(frozen=True)
class RingMatrix:
    ring: RingParams
    ncols: int
    rows: tuple[tuple[RingElement, ...], ...]

    def __post_init__(self):
        if self.ncols < 1:
            raise ShapeMismatch("matrix needs at least one column")
        rows = tuple(tuple(r) for r in self.rows)
        for r in rows:
            if len(r) != self.ncols:
                raise ShapeMismatch(f"row of length {len(r)} in a matrix with {self.ncols} columns")
            for x in r:
                if not isinstance(x, RingElement) or x.ring != self.ring:
                    raise RingMismatch(f"entry {x!r} does not belong to {self.ring}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, ring: RingParams, rows: Sequence[Sequence[RingElement]], ncols: int | None = None):
        rows = [tuple(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ShapeMismatch("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        return cls(ring, ncols, tuple(rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> RingElement:
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> RingMatrix:
        return RingMatrix(self.ring, self.nrows, tuple(zip(*self.rows)))


def decompose_generator(G: RingMatrix) -> list[ZpMatrix]:
    """Split a ring matrix into its p-1 component matrices (ordered as I_s)."""
    ring = G.ring
    comps = [[to_components(x).values for x in row] for row in G.rows]
    return [
        ZpMatrix(ring.p, G.ncols, tuple(tuple(v[k] for v in row) for row in comps))
        for k in range(ring.dim)
    ]


def compose_generator(ring: RingParams, mats: Sequence[ZpMatrix]) -> RingMatrix:
    """Entrywise sum_i alpha_i G_i; inverse of :func:`decompose_generator`."""
    if len(mats) != ring.dim:
        raise WrongComponentCount(f"{ring} needs {ring.dim} component matrices, got {len(mats)}")
    shape = mats[0].shape
    for M in mats:
        if M.shape != shape:
            raise ShapeMismatch(f"component shapes differ: {shape} vs {M.shape}")
        if M.p != ring.p:
            raise RingMismatch(f"component matrix mod {M.p} for {ring}")
    k, n = shape
    rows = tuple(
        tuple(from_components(ring, [M.rows[r][c] for M in mats]) for c in range(n)) for r in range(k)
    )
    return RingMatrix(ring, n, rows)


@dataclass(frozen=True)
class ComponentCode:
    """The Z_p-code attached to root ``index`` of I_s."""

    ring: RingParams
    index: int
    generator: ZpMatrix

    @property
    def length(self) -> int:
        return self.generator.ncols

    @cached_property
    def rank(self) -> int:
        return component_rank(self.generator)

    @cached_property
    def basis(self) -> ZpMatrix:
        return row_space_basis(self.generator)

    @property
    def cardinality(self) -> int:
        return self.ring.p ** self.rank


@dataclass(frozen=True)
class RingLinearCode:
    ring: RingParams
    length: int
    components: tuple[ComponentCode, ...]

    def __post_init__(self):
        if len(self.components) != self.ring.dim:
            raise WrongComponentCount(f"{self.ring} needs {self.ring.dim} components, got {len(self.components)}")
        for root, comp in zip(self.ring.index_set, self.components):
            if comp.ring != self.ring or comp.index != root:
                raise RingMismatch(f"component for root {comp.index} misplaced at root {root}")
            if comp.length != self.length:
                raise ShapeMismatch(f"component of length {comp.length} in a code of length {self.length}")

    @classmethod
    def from_component_matrices(cls, ring: RingParams, mats: Sequence[ZpMatrix]) -> RingLinearCode:
        if len(mats) != ring.dim:
            raise WrongComponentCount(f"{ring} needs {ring.dim} component matrices, got {len(mats)}")
        n = mats[0].ncols
        return cls(ring, n, tuple(ComponentCode(ring, r, M) for r, M in zip(ring.index_set, mats)))

    @classmethod
    def from_generator(cls, G: RingMatrix) -> RingLinearCode:
        return cls.from_component_matrices(G.ring, decompose_generator(G))

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(c.rank for c in self.components)

    def component(self, root: int) -> ComponentCode:
        return self.components[self.ring.position(root)]

    def generator_matrix(self) -> RingMatrix:
        """Ring generator; shorter components are padded with zero rows."""
        k = max(c.generator.nrows for c in self.components)
        return compose_generator(self.ring, [c.generator.pad_rows(k) for c in self.components])


def cardinality(C: RingLinearCode) -> int:
    return C.ring.p ** sum(C.ranks)


def hamming_weight(c: Sequence[RingElement]) -> int:
    return sum(1 for x in c if not x.is_zero())


def zp_weight(v: Sequence[int]) -> int:
    return sum(1 for x in v if x)


def embed(ring: RingParams, root: int, v: Sequence[int]) -> RingCodeword:
    """alpha_root * v for a vector v over Z_p."""
    alpha = ring.idempotents[ring.position(root)]
    return tuple(alpha * int(x) for x in v)


def _digits(p: int, k: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    powers = p ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % p


def min_weight_word(comp: ComponentCode, cap: int | None = None) -> tuple[int | None, tuple[int, ...] | None]:
    """Minimum weight of the nonzero codewords, with the lexicographically
    smallest codeword attaining it. ``(None, None)`` for the zero code."""
    cap = enumeration_cap() if cap is None else cap
    basis = comp.basis
    k, p = basis.nrows, comp.ring.p
    if k == 0:
        return None, None
    total = p**k
    if total > cap:
        raise EnumerationCapExceeded(f"{p}^{k} = {total} codewords exceeds cap {cap}")
    B = basis.to_numpy()
    best_w: int | None = None
    best_word: tuple[int, ...] | None = None
    for start in range(1, total, _CHUNK):
        words = (_digits(p, k, start, min(start + _CHUNK, total)) @ B) % p
        weights = np.count_nonzero(words, axis=1)
        w = int(weights.min())
        if best_w is not None and w > best_w:
            continue
        cand = words[weights == w]
        first = cand[np.lexsort(cand.T[::-1])[0]]
        word = tuple(int(x) for x in first)
        if best_w is None or w < best_w or word < best_word:
            best_w, best_word = w, word
    return best_w, best_word


def component_min_distance(comp: ComponentCode, cap: int | None = None) -> int | None:
    return min_weight_word(comp, cap)[0]


def min_distance(C: RingLinearCode, cap: int | None = None) -> int:
    """Minimum over the nonzero components' distances."""
    dists = [component_min_distance(c, cap) for c in C.components if c.rank > 0]
    if not dists:
        raise AllComponentsZero("every component code is zero")
    return min(dists)


def is_mds(comp: ComponentCode, cap: int | None = None) -> bool:
    d = component_min_distance(comp, cap)
    if d is None:
        return False
    return d == comp.length - comp.rank + 1


@dataclass(frozen=True)
class SystematicForm:
    """``matrix`` = (I_k | redundancy) in permuted coordinates: its column j
    is column ``permutation[j]`` of the original matrix."""

    matrix: ZpMatrix
    redundancy: ZpMatrix | None
    permutation: tuple[int, ...]

    @property
    def permuted(self) -> bool:
        return self.permutation != tuple(range(len(self.permutation)))


def systematic_form(G: ZpMatrix) -> SystematicForm:
    k, n = G.shape
    if component_rank(G) != k:
        raise RankDeficient(f"generator of {k} rows has rank {component_rank(G)}")
    R = row_reduce(G)
    pivots = pivot_columns(G)
    rest = [c for c in range(n) if c not in pivots]
    perm = tuple(pivots) + tuple(rest)
    S = R.select_columns(perm)
    M = S.select_columns(range(k, n)) if k < n else None
    return SystematicForm(S, M, perm)


def parity_check(G: ZpMatrix) -> ZpMatrix:
    """(-M^t | I_{n-k}) for a generator G = (I_k | M)."""
    k, n = G.shape
    p = G.p
    for i in range(k):
        for j in range(k):
            if G.rows[i][j] != int(i == j):
                raise NotSystematic("leading block is not the identity")
    rows = tuple(
        tuple(-G.rows[i][k + j] for i in range(k)) + tuple(int(j == t) for t in range(n - k))
        for j in range(n - k)
    )
    return ZpMatrix(p, n, rows)


def component_dual(comp: ComponentCode) -> tuple[ZpMatrix, tuple[int, ...]]:
    """Parity-check matrix of one component in original coordinates, plus
    the column permutation that was needed to reach systematic form."""
    sf = systematic_form(comp.basis)
    H_perm = parity_check(sf.matrix)
    n = comp.length
    inverse = [0] * n
    for j, c in enumerate(sf.permutation):
        inverse[c] = j
    return H_perm.select_columns(inverse), sf.permutation


def dual_code(C: RingLinearCode) -> RingLinearCode:
    return RingLinearCode.from_component_matrices(C.ring, [component_dual(c)[0] for c in C.components])


def dual_matrix(C: RingLinearCode) -> RingMatrix:
    return dual_code(C).generator_matrix()


def ring_dot(x: Sequence[RingElement], y: Sequence[RingElement]) -> RingElement:
    if len(x) != len(y):
        raise LengthMismatch(f"dot product of lengths {len(x)} and {len(y)}")
    if not x:
        raise LengthMismatch("dot product of empty vectors")
    acc = x[0].ring.zero
    for a, b in zip(x, y):
        acc = acc + a * b
    return acc


def encode(msg: Sequence[RingElement], G: RingMatrix) -> RingCodeword:
    if len(msg) != G.nrows:
        raise LengthMismatch(f"message of length {len(msg)} for {G.nrows} generator rows")
    out = [G.ring.zero] * G.ncols
    for m, row in zip(msg, G.rows):
        if m.is_zero():
            continue
        out = [acc + m * g for acc, g in zip(out, row)]
    return tuple(out)
