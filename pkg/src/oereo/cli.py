"""Command-line front end: one subcommand per library operation.

Exit codes: 0 success, 2 usage or parse error, 3 domain error, 4 overflow,
5 no modular inverse.
"""

import argparse
import json
import re
import sys

from . import continuants, euclid, fib_array, sequences
from .errors import DomainError, NotCoprimeError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_OVERFLOW = 4
EXIT_NOT_COPRIME = 5

_INT_RE = re.compile(r"[+-]?\d+")


def decimal_int(text: str) -> int:
    if not _INT_RE.fullmatch(text.strip()):
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    return int(text)


def int_list(text: str) -> list[int]:
    """Comma-separated decimal integers; ``""`` or ``"()"`` is the empty list."""
    text = text.strip()
    if text in ("", "()", "[]"):
        return []
    text = text.strip("()[]")
    return [decimal_int(part) for part in text.split(",")]


def fmt_seq(seq) -> str:
    return "(" + ",".join(str(x) for x in seq) + ")"


def _ordered_pair(a: int, b: int) -> tuple[int, int]:
    if a < 1 or b < 1:
        raise DomainError(f"inputs must be positive integers, got {a} and {b}")
    if a < b:
        print(f"note: swapped inputs so that a >= b (a={b}, b={a})", file=sys.stderr)
        return b, a
    return a, b


def ea_tableau(trace: euclid.EATrace) -> list[str]:
    """Division equations in two columns, read down the left column first."""
    eqs = []
    for i in range(1, trace.num_steps + 1):
        r = trace.rem_list
        eqs.append((str(r[i - 1]), f"{r[i]} * {trace.quo_list[i - 1]} + {r[i + 1]}"))
    half = (len(eqs) + 1) // 2
    columns = [eqs[:half], eqs[half:]]
    rendered = []
    for col in columns:
        if not col:
            rendered.append([])
            continue
        lw = max(len(lhs) for lhs, _ in col)
        rw = max(len(rhs) for _, rhs in col)
        rendered.append([f"{lhs:>{lw}} = {rhs:<{rw}}" for lhs, rhs in col])
    lines = []
    for row in range(half):
        parts = [col[row] for col in rendered if row < len(col)]
        lines.append("    ".join(parts).rstrip())
    lines.append(f"gcd={trace.gcd} steps={trace.num_steps}")
    return lines


# Each handler returns (table lines, json-ready object).

def cmd_fib_entry(args):
    v = fib_array.fib_entry(args.n, args.k)
    return [str(v)], v


def cmd_fib_row(args):
    row = fib_array.fib_row(args.n)
    return [" ".join(map(str, row))], row


def cmd_fib_number(args):
    v = fib_array.fib_number(args.n)
    return [str(v)], v


def cmd_terquem_classic(args):
    if args.m is None:
        row = [fib_array.terquem_classic_count(args.n, m) for m in range(args.n + 1)]
        return [" ".join(map(str, row))], row
    v = fib_array.terquem_classic_count(args.n, args.m)
    return [str(v)], v


def _length_from_k(kind: sequences.SeqKind, n: int, k: int):
    if kind is sequences.SeqKind.ALT_PARITY:
        raise DomainError("--k is not defined for kind alt; use --length")
    if k < 0:
        raise DomainError(f"--k must be nonnegative, got {k}")
    if kind is sequences.SeqKind.CONSECUTIVE_FREE:
        return k
    length = n - 2 * k if kind is sequences.SeqKind.OE else n - 1 - 2 * k
    if length < 0:
        raise DomainError(f"--k {k} is out of range for n={n}")
    return length


def cmd_enumerate(args):
    kind = sequences.SeqKind.parse(args.kind)
    length = args.length
    if args.k is not None:
        if length is not None:
            raise DomainError("give at most one of --length and --k")
        length = _length_from_k(kind, args.n, args.k)
    family = sequences.enumerate_sequences(kind, args.n, length, max_n=args.max_n)
    return [fmt_seq(s) for s in family], [list(s) for s in family]


def cmd_phi(args):
    if args.inverse:
        out = sequences.phi_inverse(args.seq, args.n)
    else:
        out = sequences.phi(args.seq, args.n)
    return [fmt_seq(out)], list(out)


def cmd_psi(args):
    out = sequences.psi_inverse(args.seq) if args.inverse else sequences.psi(args.seq)
    return [fmt_seq(out)], list(out)


def cmd_poly(args):
    poly = continuants.build_poly(args.kind, args.n, max_n=args.max_n)
    return [continuants.render(poly)], poly.to_dict()


def cmd_eval(args):
    v = continuants.eval_recurrence(args.kind, args.values)
    return [str(v)], v


def cmd_ea(args):
    trace = euclid.run_ea(*_ordered_pair(args.a, args.b))
    return ea_tableau(trace), trace.to_dict()


def cmd_bezout(args):
    a, b = _ordered_pair(args.a, args.b)
    res = euclid.bezout(a, b)
    lines = [
        f"{a} * {res.s} + {b} * {res.t} = {res.gcd}",
        f"s={res.s} t={res.t} gcd={res.gcd}",
    ]
    return lines, {"a": a, "b": b, **res.to_dict()}


def cmd_remainders(args):
    trace = euclid.run_ea(*_ordered_pair(args.a, args.b))
    n = trace.num_steps
    rows = []
    if args.backward:
        lines = ["i g_i*gcd r[n-i] h_i*gcd r[n-1-i]"]
        for i in range(-1, n + 1):
            g = euclid.remainder_backward(trace, i)
            h = euclid.remainder_backward_h(trace, i)
            target = trace.gcd if i == -1 else trace.remainder(n - i)
            rows.append({"i": i, "g_value": g, "r_n_minus_i": target,
                         "h_value": h, "r_n_minus_1_minus_i": trace.remainder(n - 1 - i)})
            lines.append(f"{i} {g} {target} {h} {trace.remainder(n - 1 - i)}")
    else:
        lines = ["i formula r_i"]
        for i in range(-1, n + 1):
            v = euclid.remainder_forward(trace, i)
            rows.append({"i": i, "value": v, "r_i": trace.remainder(i)})
            lines.append(f"{i} {v} {trace.remainder(i)}")
    return lines, rows


def cmd_cofactors(args):
    trace = euclid.run_ea(*_ordered_pair(args.a, args.b))
    ca, cb = euclid.cofactors(trace)
    return [f"a/gcd={ca} b/gcd={cb} gcd={trace.gcd}"], {"a_over_gcd": ca, "b_over_gcd": cb, "gcd": trace.gcd}


def cmd_construct(args):
    a, b = euclid.construct_input(args.quotients, args.gcd)
    return [f"a={a} b={b}"], {"a": a, "b": b, "gcd": args.gcd, "quotients": args.quotients}


def cmd_worst_case(args):
    a, b = euclid.worst_case_pair(args.n)
    return [f"a={a} b={b}"], {"n": args.n, "a": a, "b": b}


def cmd_inverse(args):
    v = euclid.mod_inverse(args.b, args.a)
    return [str(v)], v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")

    guard = argparse.ArgumentParser(add_help=False)
    guard.add_argument("--max-n", type=decimal_int, default=sequences.DEFAULT_MAX_N,
                       help="enumeration size guard (default %(default)s)")

    parser = argparse.ArgumentParser(
        prog="oereo",
        description="Fibonacci array, oereo sequences, continuants and the traced Euclidean Algorithm. "
                    "Fibonacci numbers use f_0 = f_1 = 1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, parents=(common,)):
        p = sub.add_parser(name, help=help_, parents=list(parents))
        p.set_defaults(func=func)
        return p

    p = add("fib-entry", cmd_fib_entry, "entry f(n,k) of the Fibonacci array")
    p.add_argument("n", type=decimal_int)
    p.add_argument("k", type=decimal_int)

    p = add("fib-row", cmd_fib_row, "row n of the Fibonacci array")
    p.add_argument("n", type=decimal_int)

    p = add("fib-number", cmd_fib_number, "Fibonacci number f_n (f_0 = f_1 = 1)")
    p.add_argument("n", type=decimal_int)

    p = add("terquem-classic", cmd_terquem_classic, "alternating-parity subset count t(n,m)")
    p.add_argument("n", type=decimal_int)
    p.add_argument("m", type=decimal_int, nargs="?")

    p = add("enumerate", cmd_enumerate, "list cf/oe/eo/alt sequences bounded by n", (common, guard))
    p.add_argument("kind", choices=[k.value for k in sequences.SeqKind])
    p.add_argument("n", type=decimal_int)
    p.add_argument("--length", type=decimal_int)
    p.add_argument("--k", type=decimal_int)

    p = add("phi", cmd_phi, "map a consecutive-free sequence to an oe-sequence")
    p.add_argument("seq", type=int_list, help="comma-separated entries, '' for the empty sequence")
    p.add_argument("n", type=decimal_int)
    p.add_argument("--inverse", action="store_true")

    p = add("psi", cmd_psi, "map an eo-sequence to an oe-sequence")
    p.add_argument("seq", type=int_list)
    p.add_argument("--inverse", action="store_true")

    p = add("poly", cmd_poly, "print g_n or h_n", (common, guard))
    p.add_argument("kind", choices=("g", "h"))
    p.add_argument("n", type=decimal_int)

    p = add("eval", cmd_eval, "evaluate g_n or h_n at comma-separated values")
    p.add_argument("kind", choices=("g", "h"))
    p.add_argument("values", type=int_list)

    for name, func, help_ in (
        ("ea", cmd_ea, "run the traced Euclidean Algorithm"),
        ("bezout", cmd_bezout, "continuant Bezout coefficients"),
        ("cofactors", cmd_cofactors, "a/gcd and b/gcd from continuants"),
    ):
        p = add(name, func, help_)
        p.add_argument("a", type=decimal_int)
        p.add_argument("b", type=decimal_int)

    p = add("remainders", cmd_remainders, "rebuild remainders from continuants")
    p.add_argument("a", type=decimal_int)
    p.add_argument("b", type=decimal_int)
    direction = p.add_mutually_exclusive_group()
    direction.add_argument("--forward", action="store_true", default=True)
    direction.add_argument("--backward", action="store_true")

    p = add("construct", cmd_construct, "build (a, b) from a quotient list")
    p.add_argument("quotients", type=int_list)
    p.add_argument("--gcd", type=decimal_int, default=1)

    p = add("worst-case", cmd_worst_case, "smallest pair needing exactly n division steps")
    p.add_argument("n", type=decimal_int)

    p = add("inverse", cmd_inverse, "inverse of b modulo a")
    p.add_argument("b", type=decimal_int)
    p.add_argument("a", type=decimal_int)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        lines, obj = args.func(args)
    except NotCoprimeError as exc:
        print(f"oereo: not coprime: {exc}", file=sys.stderr)
        return EXIT_NOT_COPRIME
    except DomainError as exc:
        print(f"oereo: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OverflowError as exc:
        print(f"oereo: overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    if args.format == "json":
        print(json.dumps(obj))
    else:
        print("\n".join(lines))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
