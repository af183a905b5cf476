#!/usr/bin/env python3
"""Independent high-precision evaluation of the bound formulas.

Recomputes the spot values frozen into the acceptance suite with mpmath at
60 decimal digits, entirely separate from the C++ implementation. Run it
whenever the acceptance constants need re-deriving:

    python3 scripts/spot_check.py
"""

from mpmath import mp, mpf, sqrt, exp

mp.dps = 60


def ratio(n, m, q):
    return mpf(q) / mpf(2) ** (mpf(n + m) / 2)


def hall_bound(n, m, q):
    r = ratio(n, m, q)
    return 5 * r ** (mpf(2) / 3) + mpf(1) / 2 * r**3 * mpf(2) ** (-mpf(n - 7 * m) / 2)


def gg_small_m(n, m, q):
    r = ratio(n, m, q)
    return (
        2 * mpf(2) ** (mpf(1) / 3) * r ** (mpf(2) / 3)
        + (2 * sqrt(mpf(2)) / sqrt(mpf(3))) * r ** (mpf(3) / 2)
        + r**2
    )


def gg_large_m(n, m, q):
    r = ratio(n, m, q)
    return (
        3 * r ** (mpf(2) / 3)
        + 2 * r
        + 5 * r**2
        + mpf(1) / 2 * (2 * r) ** (mpf(n) / (n - m))
    )


def stam_bound(n, m, q):
    num = (mpf(2) ** (n - m) - 1) * q * (q - 1)
    den = (mpf(2) ** n - 1) * (mpf(2) ** n - (q - 1))
    return mpf(1) / 2 * sqrt(num / den)


def birthday_exact(n, q):
    p = mpf(1)
    for k in range(1, q):
        p *= 1 - mpf(k) / mpf(2) ** n
    return 1 - p


def main():
    checks = [
        ("hall(28, 0, 2^10)", hall_bound(28, 0, 1024)),
        ("gg_small(28, 0, 2^10)", gg_small_m(28, 0, 1024)),
        ("gg_large(16, 8, 2^8)", gg_large_m(16, 8, 256)),
        ("stam(4, 1, 2)", stam_bound(4, 1, 2)),
        ("stam(2, 1, 3)", stam_bound(2, 1, 3)),
        ("birthday(8, 20)", birthday_exact(8, 20)),
    ]
    for label, value in checks:
        print(f"{label:24s} = {mp.nstr(value, 30)}")

    print("\nstam q-half scan at (4, 1):")
    for q in range(2, 9):
        print(f"  q={q}: {mp.nstr(stam_bound(4, 1, q), 20)}")


if __name__ == "__main__":
    main()
