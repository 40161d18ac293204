"""Rotations, Lyndon words, Duval factorization, least rotations, omega order.

Every public function accepts bytes, bytearray, or str (encoded latin-1 so one
character is one byte) and returns bytes where it returns text.
"""

from __future__ import annotations

from dataclasses import dataclass

Text = bytes


def as_text(x) -> bytes:
    """Coerce input to bytes; str is encoded latin-1."""
    if isinstance(x, str):
        return x.encode("latin-1")
    return bytes(x)


def rot(x, k: int = 1) -> bytes:
    """Rotate by k steps; one step moves the last symbol to the front.

    Negative k rotates the other way (first symbol to the end).
    """
    x = as_text(x)
    n = len(x)
    if n == 0:
        raise ValueError("rot: empty input")
    k %= n
    return x[n - k:] + x[:n - k]


def is_primitive(x) -> bool:
    """True iff x is not u^k for any shorter u and k >= 2."""
    x = as_text(x)
    if not x:
        raise ValueError("is_primitive: empty input")
    return (x + x).find(x, 1) == len(x)


def is_lyndon(x) -> bool:
    """True iff x is strictly smaller than every proper suffix of x.

    Single scan maintaining the length p of the longest Lyndon prefix
    period; x is Lyndon exactly when p reaches len(x).
    """
    x = as_text(x)
    if not x:
        raise ValueError("is_lyndon: empty input")
    p = 1
    for j in range(1, len(x)):
        prev, cur = x[j - p], x[j]
        if cur < prev:
            return False
        if cur > prev:
            p = j + 1
    return p == len(x)


@dataclass(frozen=True)
class LyndonFactorization:
    """Grouped factorization: (factor, exponent) pairs, factors strictly decreasing."""

    necklaces: tuple[tuple[bytes, int], ...]

    @property
    def total_factors(self) -> int:
        return sum(k for _, k in self.necklaces)

    @property
    def necklace_count(self) -> int:
        return len(self.necklaces)

    def expand(self) -> bytes:
        return b"".join(f * k for f, k in self.necklaces)


def lyndon_factorize(x) -> LyndonFactorization:
    """Unique factorization of x into a nonincreasing product of Lyndon words.

    Duval's scan; each emitted batch is one maximal group of equal factors.
    """
    x = as_text(x)
    if not x:
        raise ValueError("lyndon_factorize: empty input")
    n = len(x)
    groups = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and x[k] <= x[j]:
            k = i if x[k] < x[j] else k + 1
            j += 1
        length = j - k
        count = (j - i) // length
        groups.append((x[i:i + length], count))
        i += length * count
    return LyndonFactorization(tuple(groups))


def _least_rotation_start(x: bytes) -> int:
    """Booth's algorithm: 0-based start index of the least rotation."""
    n = len(x)
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = x[j % n]
        i = f[j - k - 1]
        while i != -1 and c != x[(k + i + 1) % n]:
            if c < x[(k + i + 1) % n]:
                k = j - i - 1
            i = f[i]
        if c != x[(k + i + 1) % n]:
            if c < x[(k + i + 1) % n]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def smallest_rotation(x) -> tuple[bytes, int]:
    """Return (least rotation of x, smallest k >= 0 with rot(x, k) equal to it)."""
    x = as_text(x)
    if not x:
        raise ValueError("smallest_rotation: empty input")
    n = len(x)
    start = _least_rotation_start(x)
    least = x[start:] + x[:start]
    period = (least + least).find(least, 1)
    start %= period
    if start == 0:
        return least, 0
    # all valid starts are start + j*period; the largest one gives the smallest k
    last = start + period * ((n - 1 - start) // period)
    return least, n - last


def omega_compare(x, y) -> int:
    """Compare the infinite repetitions x^inf and y^inf; returns -1, 0, or 1.

    Both inputs must be primitive; distinct primitive strings always differ
    within the first len(x) + len(y) symbols.
    """
    x, y = as_text(x), as_text(y)
    if not is_primitive(x) or not is_primitive(y):
        raise ValueError("omega_compare: inputs must be primitive")
    if x == y:
        return 0
    total = len(x) + len(y)
    ex = (x * (total // len(x) + 1))[:total]
    ey = (y * (total // len(y) + 1))[:total]
    return -1 if ex < ey else 1
