"""Consecutive-free and alternating-parity sequences, and the maps between them.

Sequences are plain tuples of positive integers. Families are produced in
shortlex order: shorter sequences first, lexicographic within a length.
"""

from collections.abc import Iterator, Sequence
from enum import Enum

from .errors import DomainError, SizeLimitError

DEFAULT_MAX_N = 40

IntSeq = tuple[int, ...]


class SeqKind(Enum):
    CONSECUTIVE_FREE = "cf"
    OE = "oe"
    EO = "eo"
    ALT_PARITY = "alt"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise DomainError(f"unknown sequence kind {value!r} (expected one of {names})") from None


def _min_bound(kind: SeqKind) -> int:
    return -1 if kind in (SeqKind.OE, SeqKind.EO) else 1


def _check_bound(kind: SeqKind, n) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"bound n must be an integer, got {n!r}")
    low = _min_bound(kind)
    if n < low:
        raise DomainError(f"bound n must be >= {low} for kind {kind.value}, got {n}")


def _is_int_seq(seq) -> bool:
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in seq):
        return False
    if any(x < 1 for x in seq):
        return False
    return all(x < y for x, y in zip(seq, seq[1:]))


def _alternates(seq) -> bool:
    return all((y - x) % 2 == 1 for x, y in zip(seq, seq[1:]))


def validate(seq: Sequence[int], kind, n: int) -> bool:
    """True iff ``seq`` is a sequence of the given kind bounded by ``n``."""
    kind = SeqKind.parse(kind)
    _check_bound(kind, n)
    seq = tuple(seq)
    if not _is_int_seq(seq):
        return False
    if kind is SeqKind.CONSECUTIVE_FREE:
        if seq and seq[-1] >= n:
            return False
        return all(y - x >= 2 for x, y in zip(seq, seq[1:]))
    if seq and seq[-1] > n:
        return False
    if not _alternates(seq):
        return False
    if kind is SeqKind.ALT_PARITY:
        return not seq or seq[0] % 2 == 1
    if kind is SeqKind.OE:
        return len(seq) % 2 == n % 2 and (not seq or seq[0] % 2 == 1)
    return len(seq) % 2 == (n + 1) % 2 and (not seq or seq[0] % 2 == 0)


def is_oe_by_complement(seq: Sequence[int], n: int) -> bool:
    """Alternative oe test: every maximal run of ``{1..n} \\ seq`` has even length."""
    seq = tuple(seq)
    if n < 0 or not _is_int_seq(seq) or (seq and seq[-1] > n):
        return False
    run = 0
    members = set(seq)
    for j in range(1, n + 1):
        if j in members:
            if run % 2:
                return False
            run = 0
        else:
            run += 1
    return run % 2 == 0


def _lengths(kind: SeqKind, n: int) -> range:
    if kind is SeqKind.CONSECUTIVE_FREE:
        return range(0, n // 2 + 1)
    if kind is SeqKind.ALT_PARITY:
        return range(0, max(n, 0) + 1)
    if kind is SeqKind.OE:
        start = n % 2
    else:
        start = (n + 1) % 2
    return range(start, max(n, 0) + 1, 2)


def _of_length(kind: SeqKind, n: int, m: int) -> Iterator[IntSeq]:
    # depth-first in lexicographic order; prunes branches that cannot
    # reach length m inside the bound
    if kind is SeqKind.CONSECUTIVE_FREE:
        step, top = 2, n - 1
    else:
        step, top = 1, n

    def firsts():
        if kind is SeqKind.CONSECUTIVE_FREE:
            return range(1, top + 1)
        if kind is SeqKind.EO:
            return range(2, top + 1, 2)
        return range(1, top + 1, 2)

    def nexts(last):
        if kind is SeqKind.CONSECUTIVE_FREE:
            return range(last + 2, top + 1)
        return range(last + 1, top + 1, 2)

    if m == 0:
        yield ()
        return

    prefix: list[int] = []

    def extend(candidates):
        remaining = m - len(prefix)
        for x in candidates:
            if x + step * (remaining - 1) > top:
                break
            prefix.append(x)
            if remaining == 1:
                yield tuple(prefix)
            else:
                yield from extend(nexts(x))
            prefix.pop()

    yield from extend(firsts())


def iter_sequences(kind, n: int, length: int | None = None, *, max_n: int = DEFAULT_MAX_N) -> Iterator[IntSeq]:
    """Stream the family of sequences of ``kind`` bounded by ``n`` in shortlex order.

    ``length`` restricts to one length. ``max_n`` is the size guard; pass a
    larger value to allow bigger families.
    """
    kind = SeqKind.parse(kind)
    _check_bound(kind, n)
    if length is not None and (not isinstance(length, int) or length < 0):
        raise DomainError(f"length must be a nonnegative integer, got {length!r}")
    if n > max_n:
        raise SizeLimitError(f"n={n} exceeds the enumeration limit {max_n}; raise max_n to override")
    lengths = _lengths(kind, n)
    if length is not None:
        lengths = [length] if length in lengths else []
    for m in lengths:
        yield from _of_length(kind, n, m)


def enumerate_sequences(kind, n: int, length: int | None = None, *, max_n: int = DEFAULT_MAX_N) -> list[IntSeq]:
    return list(iter_sequences(kind, n, length, max_n=max_n))


def cf(n: int, k: int, **kw) -> list[IntSeq]:
    """``CF(n, k)``: consecutive-free sequences of length ``k`` strictly below ``n``."""
    return enumerate_sequences(SeqKind.CONSECUTIVE_FREE, n, k, **kw)


def oe(n: int, k: int, **kw) -> list[IntSeq]:
    """``OE(n, k)``: oe-sequences of length ``n - 2k``."""
    m = n - 2 * k
    if k < 0 or m < 0:
        return []
    return enumerate_sequences(SeqKind.OE, n, m, **kw)


def eo(n: int, k: int, **kw) -> list[IntSeq]:
    """``EO(n, k)``: eo-sequences of length ``(n - 1) - 2k``."""
    m = n - 1 - 2 * k
    if k < 0 or m < 0:
        return []
    return enumerate_sequences(SeqKind.EO, n, m, **kw)


def phi(S: Sequence[int], n: int, k: int | None = None) -> IntSeq:
    """Remove each pair ``{s, s + 1}`` from ``{1..n}``; maps ``CF(n, k)`` onto ``OE(n, k)``."""
    S = tuple(S)
    if k is None:
        k = len(S)
    if not validate(S, SeqKind.CONSECUTIVE_FREE, n) or len(S) != k:
        raise DomainError(f"{S} is not a consecutive-free sequence of length {k} strictly bounded by {n}")
    removed = set(S) | {s + 1 for s in S}
    return tuple(j for j in range(1, n + 1) if j not in removed)


def phi_inverse(T: Sequence[int], n: int) -> IntSeq:
    T = tuple(T)
    if not validate(T, SeqKind.OE, n):
        raise DomainError(f"{T} is not an oe-sequence bounded by {n}")
    members = set(T)
    S = []
    run_start = None
    for j in range(1, n + 2):
        if j <= n and j not in members:
            if run_start is None:
                run_start = j
            continue
        if run_start is not None:
            S.extend(range(run_start, j, 2))
            run_start = None
    return tuple(S)


def psi(T: Sequence[int]) -> IntSeq:
    """Shift an eo-sequence down by one; maps ``EO(n, k)`` onto ``OE(n - 1, k)``."""
    T = tuple(T)
    if not T:
        return ()
    if not _is_int_seq(T) or T[0] % 2 or T[0] < 2 or not _alternates(T):
        raise DomainError(f"{T} is not an eo-sequence (entries alternate parity, first entry even)")
    return tuple(t - 1 for t in T)


def psi_inverse(T: Sequence[int]) -> IntSeq:
    T = tuple(T)
    if T and (not _is_int_seq(T) or T[0] % 2 == 0 or not _alternates(T)):
        raise DomainError(f"{T} is not an oe-sequence")
    return tuple(t + 1 for t in T)
