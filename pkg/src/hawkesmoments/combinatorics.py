"""Set partitions, Bell polynomials, and moment/cumulant conversions.

Partitions of {1..n} are enumerated through restricted growth strings in
lexicographic order, so every partition-indexed sum in this package walks
one deterministic sequence.  Bell polynomial evaluation is generic in the
coefficient ring: arguments only need ``+`` and ``*``, which lets the same
code act on floats and on exponential polynomials.
"""

from __future__ import annotations

import math
from typing import Callable, Iterator, Sequence, TypeVar

Block = tuple[int, ...]
Partition = tuple[Block, ...]

T = TypeVar("T")

# B_12 = 4,213,597 partitions is already minutes of downstream work; anything
# larger must be requested explicitly via the cap argument.
DEFAULT_SET_SIZE_CAP = 12

#: Bell numbers B_0..B_12, used for cheap count checks.
BELL_NUMBERS = (1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597)


class SizeCapError(ValueError):
    """A partition-indexed computation was asked to exceed its size cap."""


def enumerate_set_partitions(n: int, cap: int = DEFAULT_SET_SIZE_CAP) -> Iterator[Partition]:
    """Yield every partition of {1..n} exactly once.

    Partitions appear in lexicographic order of their restricted growth
    strings, starting from the single block {1..n} and ending at the
    all-singletons partition.  Blocks are ordered by smallest element and
    each block is internally sorted.
    """
    if n < 1 or n > cap:
        raise SizeCapError(f"set partitions need 1 <= n <= {cap}, got n={n}")
    rgs = [0] * n
    while True:
        yield _blocks_from_rgs(rgs)
        i = n - 1
        while i > 0:
            # rgs[i] may rise to max(prefix) + 1 and no further
            if rgs[i] <= max(rgs[:i]):
                rgs[i] += 1
                for j in range(i + 1, n):
                    rgs[j] = 0
                break
            i -= 1
        else:
            return


def _blocks_from_rgs(rgs: Sequence[int]) -> Partition:
    blocks: list[list[int]] = [[] for _ in range(max(rgs) + 1)]
    for element, label in enumerate(rgs, start=1):
        blocks[label].append(element)
    return tuple(tuple(block) for block in blocks)


def partial_bell(n: int, k: int, args: Sequence[T]) -> T:
    """Partial Bell polynomial B_{n,k}(args[0], ..., args[n-k]).

    Evaluated as the sum over partitions of {1..n} into exactly k blocks of
    the product over blocks of args[len(block) - 1].  Arguments may be any
    values supporting + and * among themselves.
    """
    if not 1 <= k <= n:
        raise ValueError(f"partial Bell polynomial needs 1 <= k <= n, got n={n}, k={k}")
    if len(args) < n - k + 1:
        raise ValueError(f"B_{{{n},{k}}} needs {n - k + 1} arguments, got {len(args)}")
    total: T | None = None
    for blocks in enumerate_set_partitions(n):
        if len(blocks) != k:
            continue
        prod = args[len(blocks[0]) - 1]
        for block in blocks[1:]:
            prod = prod * args[len(block) - 1]
        total = prod if total is None else total + prod
    assert total is not None  # S(n, k) >= 1 whenever 1 <= k <= n
    return total


def complete_bell(n: int, args: Sequence[T]) -> T:
    """Complete Bell polynomial B_n(args[0], ..., args[n-1]) = sum_k B_{n,k}."""
    if n < 1:
        raise ValueError(f"complete Bell polynomial needs n >= 1, got n={n}")
    total = partial_bell(n, 1, args)
    for k in range(2, n + 1):
        total = total + partial_bell(n, k, args)
    return total


def moments_from_cumulants(kappas: Sequence[float]) -> float:
    """Raw moment E[X^n] from the cumulants (kappa_1, ..., kappa_n).

    The empty sequence gives E[X^0] = 1.
    """
    if len(kappas) == 0:
        return 1.0
    return complete_bell(len(kappas), kappas)


def cumulants_from_moments(moments: Sequence[float]) -> float:
    """Cumulant kappa_n from the raw moments (E[X], ..., E[X^n])."""
    n = len(moments)
    if n == 0:
        raise ValueError("need at least one moment")
    total = 0.0
    for k in range(n):
        total += math.factorial(k) * (-1.0) ** k * partial_bell(n, k + 1, moments[: n - k])
    return total


def joint_moment_from_block_cumulants(n: int, block_cumulant: Callable[[Block], float]) -> float:
    """E[X_1 ... X_n] as the partition sum of products of joint cumulants."""
    total = 0.0
    for blocks in enumerate_set_partitions(n):
        prod = 1.0
        for block in blocks:
            prod *= block_cumulant(block)
        total += prod
    return total


def joint_cumulant_from_block_moments(n: int, block_moment: Callable[[Block], float]) -> float:
    """Joint cumulant of X_1..X_n from joint moments of all sub-multisets.

    Moebius inversion over the partition lattice: partitions into l blocks
    carry weight (l-1)! (-1)^(l-1).
    """
    total = 0.0
    for blocks in enumerate_set_partitions(n):
        prod = math.factorial(len(blocks) - 1) * (-1.0) ** (len(blocks) - 1)
        for block in blocks:
            prod *= block_moment(block)
        total += prod
    return total
