"""Independent reference routines used as oracles by the tests."""


def ref_gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def ref_steps(a, b):
    steps = 0
    while b:
        a, b = b, a % b
        steps += 1
    return steps


def brute_force_minima(limit):
    """Map step count -> (a, b) minimizing a + b (then a), over a >= b >= 1, a + b <= limit."""
    best = {}
    for total in range(2, limit + 1):
        for b in range(1, total // 2 + 1):
            a = total - b
            n = ref_steps(a, b)
            # totals ascend and a descends with b, so the first hit for a total wins only on smaller a
            if n not in best or (best[n][0] + best[n][1] == total and a < best[n][0]):
                best[n] = (a, b)
    return best


def all_steps(limit):
    """Yield (a, b, steps) for every a >= b >= 1 with a + b <= limit."""
    for total in range(2, limit + 1):
        for b in range(1, total // 2 + 1):
            a = total - b
            yield a, b, ref_steps(a, b)
