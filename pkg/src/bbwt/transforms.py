"""Rotation-sort transforms and their inverses.

bwt sorts all cyclic rotations of the input; bbwt sorts all rotations of all
Lyndon factors in omega order.  Both report the circular suffix array: entry i
is the 1-based text position starting the i-th sorted rotation, so the output
symbol at i sits at the cyclic predecessor of csa[i] inside its factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._ranks import power_ranks
from .strings import as_text, lyndon_factorize, smallest_rotation

_SMALL = 64  # below this, plain python sorting beats numpy setup cost


@dataclass(frozen=True)
class TransformResult:
    output: bytes
    csa: tuple[int, ...]
    runs: int


def count_runs(x) -> int:
    """Number of maximal blocks of equal adjacent symbols."""
    x = as_text(x)
    if not x:
        raise ValueError("count_runs: empty input")
    if len(x) > 4096:
        a = np.frombuffer(x, dtype=np.uint8)
        return 1 + int(np.count_nonzero(a[1:] != a[:-1]))
    runs = 1
    for i in range(1, len(x)):
        if x[i] != x[i - 1]:
            runs += 1
    return runs


def bwt(w) -> TransformResult:
    """Last symbols of all cyclic rotations of w, sorted; equal rotations keep text order."""
    w = as_text(w)
    if not w:
        raise ValueError("bwt: empty input")
    n = len(w)
    if n <= _SMALL:
        doubled = w + w
        order = sorted(range(n), key=lambda i: doubled[i:i + n])
    else:
        ranks = power_ranks(
            np.frombuffer(w, dtype=np.uint8).astype(np.int64),
            np.zeros(n, dtype=np.int64),
            np.full(n, n, dtype=np.int64),
        )
        order = np.lexsort((np.arange(n), ranks)).tolist()
    out = bytes(w[i - 1] for i in order)
    return TransformResult(out, tuple(i + 1 for i in order), count_runs(out))


def _bbwt_order(w: bytes):
    """Sorted rotation starts for all Lyndon factor copies of w.

    Returns (order, seg_start, seg_len): order lists 0-based rotation start
    positions in omega order (ties broken by text position), seg_start/seg_len
    give each position's factor-copy segment.
    """
    n = len(w)
    fact = lyndon_factorize(w)
    seg_start = [0] * n
    seg_len = [0] * n
    pos = 0
    for factor, count in fact.necklaces:
        flen = len(factor)
        for _ in range(count):
            for off in range(flen):
                seg_start[pos + off] = pos
                seg_len[pos + off] = flen
            pos += flen
    if n <= _SMALL:
        pad = 2 * n
        entries = []
        pos = 0
        for factor, count in fact.necklaces:
            flen = len(factor)
            reps = factor * (pad // flen + 2)
            for _ in range(count):
                for off in range(flen):
                    entries.append((reps[off:off + pad], pos + off))
                pos += flen
        entries.sort()
        order = [p for _, p in entries]
    else:
        ranks = power_ranks(
            np.frombuffer(w, dtype=np.uint8).astype(np.int64),
            np.asarray(seg_start, dtype=np.int64),
            np.asarray(seg_len, dtype=np.int64),
        )
        order = np.lexsort((np.arange(n), ranks)).tolist()
    return order, seg_start, seg_len


def bbwt(w) -> TransformResult:
    """Last symbols of all rotations of all Lyndon factors, sorted in omega order.

    Rotations of equal factor copies tie; ties resolve by text position, so the
    copies of one necklace appear adjacently in text order.
    """
    w = as_text(w)
    if not w:
        raise ValueError("bbwt: empty input")
    order, seg_start, seg_len = _bbwt_order(w)
    out = bytes(
        w[seg_start[p] + (p - seg_start[p] - 1) % seg_len[p]] for p in order
    )
    return TransformResult(out, tuple(p + 1 for p in order), count_runs(out))


def lf_map(x) -> list[int]:
    """1-based stable symbol-sort map: entry i is
    |{j : x[j] < x[i]}| + |{j <= i : x[j] = x[i]}|."""
    x = as_text(x)
    if not x:
        raise ValueError("lf_map: empty input")
    counts = [0] * 256
    for c in x:
        counts[c] += 1
    smaller = [0] * 256
    acc = 0
    for v in range(256):
        smaller[v] = acc
        acc += counts[v]
    seen = [0] * 256
    out = []
    for c in x:
        seen[c] += 1
        out.append(smaller[c] + seen[c])
    return out


def bwt_inverse_multiset(x) -> list[bytes]:
    """Primitive cyclic words spelled by the LF cycles of x.

    Each cycle starting at i spells x[psi^(m-1)(i)] ... x[psi^0(i)]; words are
    stored as their least rotation and sorted nonincreasing.
    """
    x = as_text(x)
    if not x:
        raise ValueError("bwt_inverse_multiset: empty input")
    psi = lf_map(x)
    n = len(x)
    seen = bytearray(n)
    words = []
    for i0 in range(n):
        if seen[i0]:
            continue
        chars = []
        i = i0
        while not seen[i]:
            seen[i] = 1
            chars.append(x[i])
            i = psi[i] - 1
        chars.reverse()
        words.append(smallest_rotation(bytes(chars))[0])
    words.sort(reverse=True)
    return words


def bbwt_inverse(x) -> bytes:
    """The unique preimage: cycle words concatenated in nonincreasing order."""
    return b"".join(bwt_inverse_multiset(x))


class _OmegaInfinity:
    """Sentinel for equal adjacent rotations (their powers agree forever)."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"


INF = _OmegaInfinity()


def omega_lcp_array(w) -> list:
    """Longest common prefix of the infinite powers of adjacent sorted rotations.

    Entry 1 is 0 by convention; equal rotations yield the INF sentinel.  The
    count of irreducible entries (i = 1 or a symbol change in the transform
    output) equals the transform's run count.
    """
    w = as_text(w)
    if not w:
        raise ValueError("omega_lcp_array: empty input")
    order, seg_start, seg_len = _bbwt_order(w)
    rotations = []
    for p in order:
        s, L = seg_start[p], seg_len[p]
        rotations.append(w[p:s + L] + w[s:p])
    values: list = [0]
    for i in range(1, len(order)):
        u, v = rotations[i - 1], rotations[i]
        if u == v:
            values.append(INF)
            continue
        bound = len(u) + len(v)
        eu = (u * (bound // len(u) + 1))[:bound]
        ev = (v * (bound // len(v) + 1))[:bound]
        lcp = 0
        while lcp < bound and eu[lcp] == ev[lcp]:
            lcp += 1
        values.append(lcp)
    return values
