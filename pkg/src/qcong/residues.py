"""Residues mod 12 reached by the quadratic forms behind the Theorem 4 argument."""

from __future__ import annotations

from itertools import product

FAMILIES = (
    "2^a n^2",
    "3^b n^2",
    "2^a i^2 + j^2",
    "3^b i^2 + j^2",
    "2^a i^2 + 3^b j^2",
)

PARITY_CASES = (("odd", "even"), ("even", "odd"), ("odd", "odd"), ("even", "even"))

# sets as printed, keyed by (alpha parity, beta parity)
PRINTED = {
    ("odd", "even"): {
        "2^a n^2": {0, 8},
        "3^b n^2": {0, 9},
        "2^a i^2 + j^2": {0, 1, 4, 5, 8, 9},
        "3^b i^2 + j^2": {0, 1, 4, 6, 9, 10},
        "2^a i^2 + 3^b j^2": {0, 5, 8, 9},
    },
    ("even", "odd"): {
        "2^a n^2": {0, 4},
        "3^b n^2": {0, 3},
        "2^a i^2 + j^2": {0, 1, 4, 5, 8, 9},
        "3^b i^2 + j^2": {0, 1, 3, 4, 7, 9},
        "2^a i^2 + 3^b j^2": {0, 3, 4, 7},
    },
    ("odd", "odd"): {
        "2^a n^2": {0, 8},
        "3^b n^2": {0, 3},
        "2^a i^2 + j^2": {0, 1, 4, 5, 8, 9},
        "3^b i^2 + j^2": {0, 1, 3, 4, 7, 9},
        "2^a i^2 + 3^b j^2": {0, 3, 8, 11},
    },
    ("even", "even"): {
        "2^a n^2": {0, 4},
        "3^b n^2": {0, 9},
        "2^a i^2 + j^2": {0, 1, 4, 5, 8, 9},
        "3^b i^2 + j^2": {0, 1, 4, 6, 9, 10},
        "2^a i^2 + 3^b j^2": {0, 1, 4, 9},
    },
}

MIN_ALPHA, MIN_BETA = 2, 1


def representative(parity: str, minimum: int) -> int:
    """Smallest exponent >= ``minimum`` with the given parity."""
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    x = minimum
    while (x % 2 == 1) != (parity == "odd"):
        x += 1
    return x


def attained(family: str, alpha: int, beta: int, modulus: int = 12) -> set[int]:
    """Brute-force the residues of one family over a full period of its variables."""
    two, three = pow(2, alpha, modulus), pow(3, beta, modulus)
    period = range(modulus)
    if family == "2^a n^2":
        return {two * n * n % modulus for n in period}
    if family == "3^b n^2":
        return {three * n * n % modulus for n in period}
    if family == "2^a i^2 + j^2":
        return {(two * i * i + j * j) % modulus for i, j in product(period, period)}
    if family == "3^b i^2 + j^2":
        return {(three * i * i + j * j) % modulus for i, j in product(period, period)}
    if family == "2^a i^2 + 3^b j^2":
        return {(two * i * i + three * j * j) % modulus for i, j in product(period, period)}
    raise KeyError(f"unknown family {family!r}")


def residue_table(family: str, alpha_parity: str, beta_parity: str) -> set[int]:
    alpha = representative(alpha_parity, MIN_ALPHA)
    beta = representative(beta_parity, MIN_BETA)
    return attained(family, alpha, beta)


def all_tables() -> dict[tuple[str, str], dict[str, set[int]]]:
    return {case: {fam: residue_table(fam, *case) for fam in FAMILIES} for case in PARITY_CASES}
