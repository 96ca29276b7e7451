"""A traced Euclidean Algorithm and the continuant formulas read off its trace.

For ``a >= b >= 1`` the trace records remainders ``r_{-1} = a, r_0 = b, ...,
r_n = 0`` and quotients ``q_1..q_n`` with ``r_{i-2} = r_{i-1} q_i + r_i``.
Everything else (Bezout coefficients, cofactors, every remainder) is a
continuant of the quotient list.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from .continuants import eval_prefixes, eval_recurrence
from .errors import DomainError, NotCoprimeError


@dataclass(frozen=True)
class EATrace:
    a: int
    b: int
    gcd: int
    num_steps: int
    rem_list: tuple[int, ...]
    quo_list: tuple[int, ...]

    def remainder(self, i: int) -> int:
        """``r_i`` for ``-1 <= i <= n``."""
        if not -1 <= i <= self.num_steps:
            raise DomainError(f"remainder index must lie in -1..{self.num_steps}, got {i}")
        return self.rem_list[i + 1]

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "gcd": self.gcd,
            "num_steps": self.num_steps,
            "rem_list": list(self.rem_list),
            "quo_list": list(self.quo_list),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EATrace":
        return cls(
            data["a"], data["b"], data["gcd"], data["num_steps"],
            tuple(data["rem_list"]), tuple(data["quo_list"]),
        )


@dataclass(frozen=True)
class BezoutResult:
    s: int
    t: int
    gcd: int

    def to_dict(self) -> dict:
        return {"s": self.s, "t": self.t, "gcd": self.gcd}


def _check_pair(a, b):
    for name, v in (("a", a), ("b", b)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise DomainError(f"{name} must be an integer, got {v!r}")
    if b < 1:
        raise DomainError(f"inputs must be positive, got b={b}")
    if a < b:
        raise DomainError(f"inputs must satisfy a >= b, got a={a}, b={b}")


def run_ea(a: int, b: int) -> EATrace:
    _check_pair(a, b)
    rems = [a, b]
    quos = []
    while rems[-1]:
        q, r = divmod(rems[-2], rems[-1])
        quos.append(q)
        rems.append(r)
    return EATrace(a, b, rems[-2], len(quos), tuple(rems), tuple(quos))


def bezout_from_trace(trace: EATrace) -> BezoutResult:
    n = trace.num_steps
    head = trace.quo_list[: n - 1]
    sign = -1 if n % 2 else 1
    s = sign * eval_recurrence("g", head)
    t = -sign * eval_recurrence("h", head)
    return BezoutResult(s, t, trace.gcd)


def bezout(a: int, b: int) -> BezoutResult:
    """Bezout pair ``s = (-1)^n g_{n-1}(q_1..q_{n-1})``, ``t = (-1)^(n-1) h_{n-1}(q_1..q_{n-1})``."""
    return bezout_from_trace(run_ea(a, b))


def bezout_backtrack(a: int, b: int) -> BezoutResult:
    """Bezout pair by back-substituting the division equations, last to first."""
    trace = run_ea(a, b)
    # gcd = u * r_{j-1} + v * r_j, starting at j = n - 1
    u, v = 0, 1
    for j in range(trace.num_steps - 1, 0, -1):
        u, v = v, u - v * trace.quo_list[j - 1]
    return BezoutResult(u, v, trace.gcd)


def _check_index(trace: EATrace, i: int):
    if not isinstance(i, int) or not -1 <= i <= trace.num_steps:
        raise DomainError(f"index must lie in -1..{trace.num_steps}, got {i!r}")


def remainder_forward(trace: EATrace, i: int) -> int:
    """``(-1)^(i+1) g_i(q_1..q_i) a + (-1)^i h_i(q_1..q_i) b``, which equals ``r_i``."""
    _check_index(trace, i)
    q = trace.quo_list[: max(i, 0)]
    g = eval_prefixes("g", q)[i + 1]
    h = eval_prefixes("h", q)[i + 1]
    sign = 1 if i % 2 else -1
    return sign * g * trace.a - sign * h * trace.b


def _suffix(trace: EATrace, i: int):
    n = trace.num_steps
    return trace.quo_list[n - i:] if i > 0 else ()


def _order_value(kind, values, i):
    # order -1 has no variables; index into the prefix table instead
    return eval_prefixes(kind, values)[i + 1] if i == -1 else eval_recurrence(kind, values)


def remainder_backward(trace: EATrace, i: int) -> int:
    """``g_i(q_{n+1-i}..q_n) * gcd``, which equals ``r_{n-i}``.

    At ``i = -1`` this is ``gcd`` itself, the value one step past the end of
    the remainder list.
    """
    _check_index(trace, i)
    return _order_value("g", _suffix(trace, i), i) * trace.gcd


def remainder_backward_h(trace: EATrace, i: int) -> int:
    """``h_i(q_{n+1-i}..q_n) * gcd``, which equals ``r_{n-1-i}``."""
    _check_index(trace, i)
    return _order_value("h", _suffix(trace, i), i) * trace.gcd


def cofactors(trace: EATrace) -> tuple[int, int]:
    """``(a / gcd, b / gcd)`` as ``(h_n(q), g_n(q))``."""
    return eval_recurrence("h", trace.quo_list), eval_recurrence("g", trace.quo_list)


def check_quotients(quotients: Sequence[int]) -> None:
    """Raise unless ``quotients`` can be the quotient list of some EA run."""
    if not quotients:
        raise DomainError("quotient list must be nonempty")
    for q in quotients:
        if not isinstance(q, int) or isinstance(q, bool) or q < 1:
            raise DomainError(f"every quotient must be a positive integer, got {q!r}")
    if len(quotients) >= 2 and quotients[-1] < 2:
        raise DomainError(
            "the last quotient must be >= 2 when there are two or more quotients; "
            "a trailing 1 merges into the previous division step"
        )


def construct_input(quotients: Sequence[int], d: int = 1) -> tuple[int, int]:
    """The pair ``(h_n(q) d, g_n(q) d)`` whose EA run has quotients ``q`` and gcd ``d``."""
    quotients = list(quotients)
    check_quotients(quotients)
    if not isinstance(d, int) or d < 1:
        raise DomainError(f"gcd d must be a positive integer, got {d!r}")
    return eval_recurrence("h", quotients) * d, eval_recurrence("g", quotients) * d


def worst_case_pair(n: int) -> tuple[int, int]:
    """Pair with smallest ``a + b`` whose EA run takes exactly ``n`` steps.

    For ``n >= 2`` this is built from the quotients ``(1, ..., 1, 2)``, giving
    consecutive Fibonacci numbers. For ``n = 1`` it is ``(1, 1)``.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"step count must be a positive integer, got {n!r}")
    quotients = [1] * (n - 1) + [2] if n >= 2 else [1]
    return construct_input(quotients, 1)


def mod_inverse(b: int, a: int) -> int:
    """Inverse of ``b`` modulo ``a``, taken from the Bezout coefficient of ``b``."""
    if not isinstance(a, int) or a < 2:
        raise DomainError(f"modulus must be an integer >= 2, got {a!r}")
    if not isinstance(b, int) or not 1 <= b < a:
        raise DomainError(f"b must satisfy 1 <= b < a (reduce it mod {a} first), got {b!r}")
    res = bezout(a, b)
    if res.gcd != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) = {res.gcd}; {b} has no inverse modulo {a}")
    return res.t % a
