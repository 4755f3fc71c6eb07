"""Brute-force verifiers.

Everything here works from the field tables and the raw parity-check matrix
only; nothing imports the cubic classifier or the closed forms, so a bug
there cannot confirm itself.  Syndromes are encoded as integers
s0*q^3 + s1*q^2 + s2*q + s3; histograms are arrays indexed by that code.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from math import comb

import numpy as np

from . import gf
from .errors import NoRepresentativeWithin3, RankDeficient, ScopeExceeded, WeightTooLarge

MAX_BRUTE_CODEWORDS = 9**6


def encode_syndrome(q: int, s) -> int:
    s0, s1, s2, s3 = (int(x) for x in s)
    return ((s0 * q + s1) * q + s2) * q + s3


def decode_syndrome(q: int, code: int) -> tuple[int, int, int, int]:
    out = []
    for _ in range(4):
        out.append(code % q)
        code //= q
    return tuple(reversed(out))


def _encode_many(q: int, arr: np.ndarray) -> np.ndarray:
    return ((arr[..., 0] * q + arr[..., 1]) * q + arr[..., 2]) * q + arr[..., 3]


def colex_supports(n: int, w: int) -> list[tuple[int, ...]]:
    return sorted(itertools.combinations(range(n), w), key=lambda s: s[::-1])


class SupportEnumeration:
    """Every weight-w vector of F_q^n exactly once, as (support, coefficients).

    Supports run in colexicographic order, coefficient tuples in field order.
    """

    def __init__(self, n: int, w: int, q: int):
        self.n, self.w, self.q = n, w, q

    def __len__(self):
        return comb(self.n, self.w) * (self.q - 1) ** self.w

    def __iter__(self):
        nonzero = range(1, self.q)
        for support in colex_supports(self.n, self.w):
            for coeffs in itertools.product(nonzero, repeat=self.w):
                yield support, coeffs

    def vectors(self):
        for support, coeffs in self:
            x = [0] * self.n
            for i, c in zip(support, coeffs):
                x[i] = c
            yield x


def _coefficient_grid(q: int, w: int) -> np.ndarray:
    """All nonzero coefficient tuples of length w, field order, shape (K, w)."""
    return np.array(list(itertools.product(range(1, q), repeat=w)), dtype=np.int64).reshape((q - 1) ** w, w)


def _support_syndromes(F: gf.FieldSpec, H: np.ndarray, support, grid: np.ndarray) -> np.ndarray:
    """Syndrome codes of all vectors with the given support, in grid order."""
    acc = np.zeros((grid.shape[0], H.shape[0]), dtype=np.int64)
    for pos, col in enumerate(support):
        acc = F.add_table[acc, F.mul_table[grid[:, pos][:, None], H[:, col][None, :]]]
    return _encode_many(F.order, acc)


def _histogram_chunk(args):
    F, H, w, supports = args
    q = F.order
    grid = _coefficient_grid(q, w)
    tally = np.zeros(q**4, dtype=np.int64)
    for support in supports:
        tally += np.bincount(_support_syndromes(F, H, support, grid), minlength=q**4)
    return tally


def _split(items, jobs):
    jobs = max(1, min(jobs, len(items)))
    return [items[i::jobs] for i in range(jobs)]


def _run(func, chunks, jobs):
    if jobs <= 1 or len(chunks) <= 1:
        return [func(c) for c in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, chunks))


def histogram_weight_w(F: gf.FieldSpec, H, w: int, jobs: int = 1) -> np.ndarray:
    """tally[code(s)] = number of weight-w vectors with syndrome s."""
    if w > 4:
        raise WeightTooLarge(f"weight {w} histogram exceeds the enumeration bound 4")
    H = np.asarray(H, dtype=np.int64)
    q = F.order
    if w == 0:
        tally = np.zeros(q**4, dtype=np.int64)
        tally[0] = 1
        return tally
    supports = colex_supports(H.shape[1], w)
    parts = _run(_histogram_chunk, [(F, H, w, chunk) for chunk in _split(supports, jobs)], jobs)
    return np.sum(parts, axis=0)


def derive_generator(F: gf.FieldSpec, H) -> np.ndarray:
    H = np.asarray(H, dtype=np.int64)
    r = gf.rank(F, H)
    if r != H.shape[0]:
        raise RankDeficient(f"H has rank {r}, expected {H.shape[0]}")
    G = gf.null_space(F, H)
    G.flags.writeable = False
    return G


def _span(F: gf.FieldSpec, rows: np.ndarray, n: int) -> np.ndarray:
    q = F.order
    words = np.zeros((1, n), dtype=np.int64)
    for row in rows:
        scaled = F.mul_table[np.arange(q)[:, None], row[None, :]]
        words = F.add_table[words[:, None, :], scaled[None, :, :]].reshape(-1, n)
    return words


def _brute_chunk(args):
    F, G, rep, leads = args
    n = G.shape[1]
    rest = _span(F, G[1:], n)
    tally = np.zeros(n + 1, dtype=np.int64)
    for a in leads:
        shifted = F.add_table[rest, F.add_table[F.mul_table[a, G[0]], rep][None, :]]
        tally += np.bincount(np.count_nonzero(shifted, axis=1), minlength=n + 1)
    return tally


def brute_coset_distribution(F: gf.FieldSpec, H, representative, jobs: int = 1) -> tuple[int, ...]:
    """Weight distribution of representative + code by listing every codeword."""
    H = np.asarray(H, dtype=np.int64)
    G = derive_generator(F, H)
    q, (k, n) = F.order, G.shape
    if q**k > MAX_BRUTE_CODEWORDS:
        raise ScopeExceeded(f"{q}^{k} codewords exceeds the brute-force bound {MAX_BRUTE_CODEWORDS}")
    rep = np.asarray(representative, dtype=np.int64)
    if rep.shape != (n,):
        raise ValueError(f"representative must have length {n}")
    leads = list(range(q))
    parts = _run(_brute_chunk, [(F, G, rep, chunk) for chunk in _split(leads, jobs)], jobs)
    return tuple(int(x) for x in np.sum(parts, axis=0))


class RepresentativeIndex:
    """First vector of weight <= 3 (enumeration order) for every syndrome."""

    def __init__(self, F: gf.FieldSpec, H):
        self.field = F
        self.H = H = np.asarray(H, dtype=np.int64)
        q, n = F.order, H.shape[1]
        self.weight = np.full(q**4, -1, dtype=np.int64)
        self.support_of = {}
        self.coeffs_of = {}
        self.weight[0] = 0
        for w in range(1, 4):
            grid = _coefficient_grid(q, w)
            for support in colex_supports(n, w):
                codes = _support_syndromes(F, H, support, grid)
                uniq, first = np.unique(codes, return_index=True)
                fresh = self.weight[uniq] == -1
                for code, pos in zip(uniq[fresh], first[fresh]):
                    self.support_of[int(code)] = support
                    self.coeffs_of[int(code)] = tuple(int(c) for c in grid[pos])
                self.weight[uniq[fresh]] = w
        self.weight.flags.writeable = False

    def find(self, s) -> np.ndarray:
        q, n = self.field.order, self.H.shape[1]
        code = encode_syndrome(q, s)
        x = np.zeros(n, dtype=np.int64)
        w = self.weight[code]
        if w < 0:
            raise NoRepresentativeWithin3(f"syndrome {tuple(s)} needs more than 3 columns")
        if w > 0:
            x[list(self.support_of[code])] = self.coeffs_of[code]
        return x


@lru_cache(maxsize=16)
def _index_for(F: gf.FieldSpec, shape, data: bytes) -> RepresentativeIndex:
    return RepresentativeIndex(F, np.frombuffer(data, dtype=np.int64).reshape(shape))


def representative_index(F: gf.FieldSpec, H) -> RepresentativeIndex:
    H = np.ascontiguousarray(H, dtype=np.int64)
    return _index_for(F, H.shape, H.tobytes())


def find_representative(F: gf.FieldSpec, H, s) -> np.ndarray:
    """A minimum-weight (<= 3) vector with syndrome s."""
    return representative_index(F, H).find(s)


def leader_weights(F: gf.FieldSpec, H) -> np.ndarray:
    """Coset weight for every syndrome code; raises if some exceeds 3."""
    idx = representative_index(F, H)
    if np.any(idx.weight < 0):
        bad = int(np.argmax(idx.weight < 0))
        raise NoRepresentativeWithin3(f"syndrome {decode_syndrome(F.order, bad)} needs more than 3 columns")
    return idx.weight
