"""The eo- and oe-polynomials ``g_n`` and ``h_n`` (continuants).

``h_n`` sums the monomials ``x_T`` over oe-sequences ``T`` bounded by ``n``
and ``g_n`` does the same over eo-sequences. Both obey
``p_{n+1} = p_{n-1} + p_n * x_{n+1}`` with starting values
``g_{-1} = 1, g_0 = 0`` and ``h_{-1} = 0, h_0 = 1``.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from math import prod

from .errors import DomainError
from .sequences import DEFAULT_MAX_N, IntSeq, SeqKind, enumerate_sequences

_SEEDS = {"g": (1, 0), "h": (0, 1)}
_FAMILY = {"g": SeqKind.EO, "h": SeqKind.OE}


def _check_kind(kind):
    if kind not in _SEEDS:
        raise DomainError(f"polynomial kind must be 'g' or 'h', got {kind!r}")
    return kind


@dataclass(frozen=True)
class OereoPolynomial:
    kind: str
    n: int
    monomials: tuple[IntSeq, ...]

    def __str__(self):
        return render(self)

    def __len__(self):
        return len(self.monomials)

    def degree_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for mono in self.monomials:
            counts[len(mono)] = counts.get(len(mono), 0) + 1
        return counts

    def to_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "monomials": [list(m) for m in self.monomials]}

    @classmethod
    def from_dict(cls, data: dict) -> "OereoPolynomial":
        return cls(_check_kind(data["kind"]), int(data["n"]), tuple(tuple(m) for m in data["monomials"]))


def build_poly(kind: str, n: int, *, max_n: int = DEFAULT_MAX_N) -> OereoPolynomial:
    _check_kind(kind)
    if not isinstance(n, int) or n < -1:
        raise DomainError(f"polynomial order must be an integer >= -1, got {n!r}")
    monomials = enumerate_sequences(_FAMILY[kind], n, max_n=max_n)
    return OereoPolynomial(kind, n, tuple(monomials))


def render(poly: OereoPolynomial) -> str:
    """Text form such as ``1 + x1x2``; degree-ascending, lexicographic within a degree."""
    if not poly.monomials:
        return "0"
    terms = ("".join(f"x{j}" for j in mono) if mono else "1" for mono in poly.monomials)
    return " + ".join(terms)


def eval_prefixes(kind: str, values: Sequence[int]) -> list[int]:
    """Values of ``p_{-1}, p_0, ..., p_n`` at ``values`` (list index ``i + 1`` holds ``p_i``)."""
    _check_kind(kind)
    out = list(_SEEDS[kind])
    for c in values:
        out.append(out[-2] + out[-1] * c)
    return out


def eval_recurrence(kind: str, values: Sequence[int]) -> int:
    """``g_n`` or ``h_n`` at ``(c_1, ..., c_n)`` in O(n) exact steps."""
    _check_kind(kind)
    older, old = _SEEDS[kind]
    for c in values:
        older, old = old, older + old * c
    return old


def eval_expanded(poly: OereoPolynomial, values: Sequence[int]) -> int:
    """Sum of ``prod(values[j-1] for j in T)`` over the monomials ``T``."""
    if len(values) < poly.n:
        raise DomainError(f"need at least {poly.n} values to evaluate order {poly.n}, got {len(values)}")
    return sum(prod(values[j - 1] for j in mono) for mono in poly.monomials)


def shift_identities_check(values: Sequence[int]) -> bool:
    """Check ``h_{n-1}(c_2..c_n) = g_n(c_1..c_n)`` and
    ``c_1 h_{n-1}(c_2..c_n) + g_{n-1}(c_2..c_n) = h_n(c_1..c_n)``."""
    values = list(values)
    if not values:
        raise DomainError("need at least one value")
    head, tail = values[0], values[1:]
    h_tail = eval_recurrence("h", tail)
    first = h_tail == eval_recurrence("g", values)
    second = head * h_tail + eval_recurrence("g", tail) == eval_recurrence("h", values)
    return first and second


def euler_monomials(n: int) -> list[IntSeq]:
    """Monomials of ``h_n`` obtained from ``x_1 ... x_n`` by deleting disjoint adjacent pairs.

    Independent of the oe-sequence enumeration; returned in shortlex order.
    """
    if n < 0:
        return []

    def walk(j: int) -> Iterator[IntSeq]:
        if j > n:
            yield ()
            return
        for rest in walk(j + 1):
            yield (j,) + rest
        if j + 1 <= n:
            yield from walk(j + 2)

    return sorted(walk(1), key=lambda t: (len(t), t))
