"""Permutations as tuples, Lehmer ranking, signs."""

from __future__ import annotations

from math import factorial
from typing import Sequence

MAX_RANK_N = 20

Bijection = tuple[int, ...]


class RankOverflowError(ValueError):
    pass


def _check_n(n: int) -> None:
    if n > MAX_RANK_N:
        raise RankOverflowError(f"n={n} exceeds the 64-bit rank range (n <= {MAX_RANK_N})")


def identity(n: int) -> Bijection:
    return tuple(range(n))


def is_permutation(b: Sequence[int]) -> bool:
    return sorted(b) == list(range(len(b)))


def rank(b: Sequence[int]) -> int:
    """Lehmer-code rank in ``[0, n!)``; identity -> 0, reversal -> n! - 1."""
    n = len(b)
    _check_n(n)
    r = 0
    seen = 0
    for i, x in enumerate(b):
        smaller_used = (seen & ((1 << x) - 1)).bit_count()
        r += (x - smaller_used) * factorial(n - 1 - i)
        seen |= 1 << x
    return r


def unrank(index: int, n: int) -> Bijection:
    _check_n(n)
    if not 0 <= index < factorial(n):
        raise ValueError(f"rank {index} out of range for n={n}")
    free = list(range(n))
    out = []
    for i in range(n):
        f = factorial(n - 1 - i)
        d, index = divmod(index, f)
        out.append(free.pop(d))
    return tuple(out)


def inverse(b: Sequence[int]) -> Bijection:
    inv = [0] * len(b)
    for i, x in enumerate(b):
        inv[x] = i
    return tuple(inv)


def compose(f: Sequence[int], g: Sequence[int]) -> Bijection:
    """``f o g``: apply ``g`` first."""
    return tuple(f[x] for x in g)


def sign(b: Sequence[int]) -> int:
    """Parity in Z/2: 0 for even permutations, 1 for odd."""
    seen = [False] * len(b)
    parity = 0
    for i in range(len(b)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = b[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def transpose_positions(b: Sequence[int], a: int, c: int) -> Bijection:
    """``b o (a c)``: swap the images of X-vertices ``a`` and ``c``."""
    out = list(b)
    out[a], out[c] = out[c], out[a]
    return tuple(out)


def parse_perm(text: str) -> Bijection:
    b = tuple(int(t) for t in text.replace(" ", "").split(",") if t != "")
    if not is_permutation(b):
        raise ValueError(f"{text!r} is not a permutation of 0..n-1")
    return b


def format_perm(b: Sequence[int]) -> str:
    return ",".join(str(x) for x in b)
