"""Reachability between equal-content strings under rotation and the
factor-sort transform: descent toward the sorted string, path search, and
whole-class orbit connectivity checks."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .strings import as_text, rot, smallest_rotation
from .transforms import bbwt, bbwt_inverse


class NotANecklaceError(ValueError):
    """Input is not its own smallest rotation."""


class AlreadyMinimalError(ValueError):
    """Input already is the sorted (smallest possible) string."""


class DescentConditionError(ValueError):
    """The last symbol matches the symbol at the sorted-prefix boundary, so the
    one-step descent is not guaranteed to decrease."""


class UnsupportedAlphabetError(ValueError):
    """Constructive transformation only covers binary or all-distinct inputs."""


class OrbitBudgetError(RuntimeError):
    """Content class is larger than the enumeration budget."""


class ReachabilityCounterexample(Exception):
    """Two equal-content strings whose orbits never meet."""

    def __init__(self, first: bytes, second: bytes):
        self.first = first
        self.second = second
        super().__init__(
            f"no operation path connects {first!r} and {second!r}")


@dataclass(frozen=True)
class ParikhVector:
    """Symbol multiplicities, stored sorted by symbol byte."""

    counts: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return sum(c for _, c in self.counts)

    @property
    def sigma(self) -> int:
        return len(self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)


def parikh(w) -> ParikhVector:
    """Multiplicity of every symbol occurring in w."""
    w = as_text(w)
    if not w:
        raise ValueError("parikh: empty input")
    seen: dict[int, int] = {}
    for c in w:
        seen[c] = seen.get(c, 0) + 1
    return ParikhVector(tuple(sorted(seen.items())))


def canonical_smallest(p: ParikhVector) -> bytes:
    """The lexicographically smallest string with these symbol counts."""
    return b"".join(bytes([c]) * e for c, e in p.counts)


def class_size(p: ParikhVector) -> int:
    """Number of distinct strings with these symbol counts (multinomial)."""
    size = factorial(p.n)
    for _, e in p.counts:
        size //= factorial(e)
    return size


def _lcp_len(x: bytes, y: bytes) -> int:
    m = min(len(x), len(y))
    for i in range(m):
        if x[i] != y[i]:
            return i
    return m


def descent_step(x) -> bytes:
    """One guaranteed-decreasing move: the smallest rotation of the transform
    preimage of rot(x, 1).

    Requires x to be a necklace, not already the sorted string, and the symbol
    closing the sorted prefix to differ from the last symbol.
    """
    x = as_text(x)
    if not x:
        raise ValueError("descent_step: empty input")
    if smallest_rotation(x)[0] != x:
        raise NotANecklaceError(f"{x!r} is not its own smallest rotation")
    y = canonical_smallest(parikh(x))
    if x == y:
        raise AlreadyMinimalError(f"{x!r} is already the sorted string")
    i = _lcp_len(x, y)
    if x[i - 1] == x[-1]:
        raise DescentConditionError(
            f"symbol at position {i} equals the final symbol; "
            "descent not guaranteed")
    return smallest_rotation(bbwt_inverse(rot(x, 1)))[0]


@dataclass(frozen=True)
class OpPath:
    """Alternating sequence of ('rot', k) / ('bbwt', m) steps.

    Positive bbwt counts apply the forward transform, negative the inverse.
    """

    steps: tuple[tuple[str, int], ...]

    def apply(self, x) -> bytes:
        x = as_text(x)
        for kind, amount in self.steps:
            if kind == "rot":
                x = rot(x, amount)
            elif kind == "bbwt":
                for _ in range(abs(amount)):
                    x = bbwt(x).output if amount > 0 else bbwt_inverse(x)
            else:
                raise ValueError(f"unknown step kind {kind!r}")
        return x

    def format(self) -> str:
        return ",".join(
            ("r" if kind == "rot" else "b") + str(amount)
            for kind, amount in self.steps)

    def __str__(self) -> str:
        return self.format()


def parse_path(text: str) -> OpPath:
    """Parse the comma-separated r<k>/b<m> token form."""
    text = text.strip()
    if not text:
        return OpPath(())
    steps = []
    for token in text.split(","):
        token = token.strip()
        if len(token) < 2 or token[0] not in "rb":
            raise ValueError(f"bad path token {token!r}")
        try:
            amount = int(token[1:])
        except ValueError:
            raise ValueError(f"bad path token {token!r}") from None
        steps.append(("rot" if token[0] == "r" else "bbwt", amount))
    return OpPath(tuple(steps))


def normalize_steps(steps, n: int) -> tuple[tuple[str, int], ...]:
    """Merge adjacent same-kind steps, reduce rotations modulo n, drop no-ops."""
    cur = list(steps)
    while True:
        merged: list[list] = []
        for kind, amount in cur:
            if merged and merged[-1][0] == kind:
                merged[-1][1] += amount
            else:
                merged.append([kind, amount])
        reduced = []
        for kind, amount in merged:
            if kind == "rot":
                amount %= n
            if amount != 0:
                reduced.append((kind, amount))
        if reduced == cur:
            return tuple(reduced)
        cur = reduced


_GENERATORS = (("rot", 1), ("rot", -1), ("bbwt", 1), ("bbwt", -1))


def _apply_one(x: bytes, kind: str, amount: int) -> bytes:
    if kind == "rot":
        return rot(x, amount)
    return bbwt(x).output if amount > 0 else bbwt_inverse(x)


def find_path(x, y) -> OpPath:
    """Shortest operation path from x to y (bidirectional breadth-first search).

    Raises ValueError when the symbol counts differ and
    ReachabilityCounterexample when the whole class is exhausted without
    connecting the two strings.
    """
    x, y = as_text(x), as_text(y)
    if not x or not y:
        raise ValueError("find_path: empty input")
    if parikh(x) != parikh(y):
        raise ValueError("find_path: inputs have different symbol counts")
    n = len(x)
    if x == y:
        return OpPath(())
    fwd: dict[bytes, tuple[bytes, tuple[str, int]] | None] = {x: None}
    bwd: dict[bytes, tuple[bytes, tuple[str, int]] | None] = {y: None}
    frontier_f, frontier_b = [x], [y]
    meet = None
    while meet is None and (frontier_f or frontier_b):
        grow_fwd = frontier_f and (not frontier_b
                                   or len(frontier_f) <= len(frontier_b))
        frontier, seen, other = ((frontier_f, fwd, bwd) if grow_fwd
                                 else (frontier_b, bwd, fwd))
        nxt = []
        for state in frontier:
            for step in _GENERATORS:
                image = _apply_one(state, *step)
                if image in seen:
                    continue
                seen[image] = (state, step)
                nxt.append(image)
                if image in other:
                    meet = image
                    break
            if meet is not None:
                break
        frontier[:] = nxt
    if meet is None:
        raise ReachabilityCounterexample(x, y)
    steps: list[tuple[str, int]] = []
    cur = meet
    while fwd[cur] is not None:
        prev, step = fwd[cur]
        steps.append(step)
        cur = prev
    steps.reverse()
    cur = meet
    while bwd[cur] is not None:
        prev, (kind, amount) = bwd[cur]
        steps.append((kind, -amount))
        cur = prev
    path = OpPath(normalize_steps(steps, n))
    return path


def _next_perm(a: bytearray) -> bool:
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = bytes(reversed(a[i + 1:]))
    return True


def _perm_rank(s: bytes, symbols: tuple[int, ...], counts: list[int],
               total: int) -> int:
    """Lexicographic index of s among all arrangements of its multiset."""
    cnt = counts[:]
    perms = total
    remaining = len(s)
    r = 0
    for ch in s:
        for idx, d in enumerate(symbols):
            if d >= ch:
                break
            if cnt[idx]:
                r += perms * cnt[idx] // remaining
        perms = perms * cnt[idx] // remaining
        cnt[idx] -= 1
        remaining -= 1
    return r


def _perm_unrank(r: int, symbols: tuple[int, ...], counts: list[int],
                 total: int, n: int) -> bytes:
    cnt = counts[:]
    perms = total
    out = bytearray()
    remaining = n
    for _ in range(n):
        for idx, d in enumerate(symbols):
            if not cnt[idx]:
                continue
            here = perms * cnt[idx] // remaining
            if r < here:
                out.append(d)
                perms = here
                cnt[idx] -= 1
                remaining -= 1
                break
            r -= here
    return bytes(out)


@dataclass(frozen=True)
class OrbitReport:
    class_size: int
    orbit_count: int
    connected: bool
    witness: tuple[bytes, bytes] | None


def _find(parent: list[int], i: int) -> int:
    root = i
    while parent[root] != root:
        root = parent[root]
    while parent[i] != root:
        parent[i], i = root, parent[i]
    return root


def orbit_connected(p: ParikhVector, budget: int = 10_000_000) -> OrbitReport:
    """Union all strings of one content class under rotation and the transform.

    Enumerates the class in lexicographic order; every member is linked to its
    single rotation and to its transform image (both stay inside the class).
    A witness pair from two distinct orbits is reported when disconnected.
    """
    size = class_size(p)
    if size > budget:
        raise OrbitBudgetError(
            f"class has {size} members, budget is {budget}")
    symbols = tuple(c for c, _ in p.counts)
    counts = [e for _, e in p.counts]
    n = p.n
    parent = list(range(size))
    cur = bytearray(canonical_smallest(p))
    index = 0
    while True:
        s = bytes(cur)
        for image in (rot(s, 1), bbwt(s).output):
            j = (_perm_rank(image, symbols, counts, size)
                 if image != s else index)
            ri, rj = _find(parent, index), _find(parent, j)
            if ri != rj:
                parent[rj] = ri
        index += 1
        if not _next_perm(cur):
            break
    roots = {_find(parent, i) for i in range(size)}
    orbit_count = len(roots)
    witness = None
    if orbit_count > 1:
        base = _find(parent, 0)
        other = next(i for i in range(size) if _find(parent, i) != base)
        witness = (_perm_unrank(0, symbols, counts, size, n),
                   _perm_unrank(other, symbols, counts, size, n))
    return OrbitReport(size, orbit_count, orbit_count == 1, witness)


def transform_to_smallest(x) -> OpPath:
    """Path from x to the sorted string, via repeated rotate-to-necklace and
    guaranteed-decreasing inverse-transform rounds.

    Only binary or all-distinct-symbol inputs carry the guarantee; anything
    else raises UnsupportedAlphabetError.
    """
    x = as_text(x)
    if not x:
        raise ValueError("transform_to_smallest: empty input")
    distinct = len(set(x))
    if distinct > 2 and distinct != len(x):
        raise UnsupportedAlphabetError(
            "guaranteed descent needs a binary or all-distinct alphabet")
    target = canonical_smallest(parikh(x))
    n = len(x)
    steps: list[tuple[str, int]] = []
    cur = x
    prev_necklace = None
    while True:
        least, k = smallest_rotation(cur)
        if k:
            steps.append(("rot", k))
        cur = least
        if prev_necklace is not None and not cur < prev_necklace:
            raise AssertionError("descent failed to decrease")
        prev_necklace = cur
        if cur == target:
            break
        steps.append(("rot", 1))
        steps.append(("bbwt", -1))
        cur = bbwt_inverse(rot(cur, 1))
    return OpPath(normalize_steps(steps, n))
