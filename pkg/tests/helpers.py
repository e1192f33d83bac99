"""Oracles shared by several test modules."""


def naive_divmod(f, g, p):
    """Integer-list long division over F_p, used as an independent oracle."""
    f = list(f)
    inv = pow(g[-1], p - 2, p)
    quot = [0] * max(len(f) - len(g) + 1, 0)
    for k in range(len(f) - len(g), -1, -1):
        c = f[k + len(g) - 1] * inv % p
        quot[k] = c
        for j, gj in enumerate(g):
            f[k + j] = (f[k + j] - c * gj) % p
    rem = f[: len(g) - 1]
    while rem and rem[-1] == 0:
        rem.pop()
    while quot and quot[-1] == 0:
        quot.pop()
    return quot, rem
