"""The Fibonacci right-triangular array and the classic Terquem count.

Fibonacci numbers are indexed with ``f_0 = f_1 = 1`` throughout, so
``fib_number(n)`` is the usual ``F(n + 1)``.
"""

from math import comb

from .errors import DomainError


def _require_int(x, name):
    if not isinstance(x, int) or isinstance(x, bool):
        raise DomainError(f"{name} must be an integer, got {x!r}")


def _check_index(n, name="n", low=0):
    _require_int(n, name)
    if n < low:
        raise DomainError(f"{name} must be >= {low}, got {n}")


def fib_row_recurrence(n: int) -> list[int]:
    """Row ``n`` built from ``f(n, k) = f(n-1, k) + f(n-2, k-1)``."""
    _check_index(n)
    older, old = [1], [1]
    if n < 2:
        return [1]
    for m in range(2, n + 1):
        row = []
        for k in range(m // 2 + 1):
            left = old[k] if k < len(old) else 0
            diag = older[k - 1] if 1 <= k <= len(older) else 0
            row.append(left + diag)
        older, old = old, row
    return old


def fib_entry_recurrence(n: int, k: int) -> int:
    _check_index(n)
    _require_int(k, "k")
    if k < 0 or k > n // 2:
        return 0
    return fib_row_recurrence(n)[k]


def fib_entry(n: int, k: int) -> int:
    """Entry ``f(n, k) = C(n - k, k)``; zero when ``k`` is outside ``0..n//2``."""
    _check_index(n)
    _require_int(k, "k")
    if k < 0 or k > n // 2:
        return 0
    return comb(n - k, k)


def fib_row(n: int) -> list[int]:
    _check_index(n)
    return [comb(n - k, k) for k in range(n // 2 + 1)]


def fib_number(n: int) -> int:
    """Fibonacci number with ``f_0 = f_1 = 1``."""
    _check_index(n)
    prev, cur = 1, 1
    for _ in range(n - 1):
        prev, cur = cur, prev + cur
    return cur


def fib_triangle(rows: int) -> list[list[int]]:
    """The first ``rows`` rows of the array."""
    _check_index(rows, "rows")
    return [fib_row(n) for n in range(rows)]


def terquem_classic_count(n: int, m: int) -> int:
    """Number of alternating-parity subsets of ``{1..n}`` of size ``m``.

    This is the count ``C(floor((n + m) / 2), m)`` with no condition on the
    parity of the length.
    """
    _check_index(n, low=1)
    _check_index(m, "m")
    if m > n:
        raise DomainError(f"m must satisfy 0 <= m <= n, got m={m}, n={n}")
    return comb((n + m) // 2, m)
