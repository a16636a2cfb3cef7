"""Print B(l1, l2; n) from the product formula beside both direct counts."""

import argparse

from qcong import oracle, products


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--l1", type=int, default=4)
    ap.add_argument("--l2", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=20)
    args = ap.parse_args()

    gf = products.biregular_gf(args.l1, args.l2, args.n_max)
    dp = oracle.count_dp(args.l1, args.l2, args.n_max)
    print(f"{'n':>4} {'series':>12} {'dp':>12} {'listed':>12}")
    for n in range(args.n_max + 1):
        listed = oracle.count_enumerate(args.l1, args.l2, n) if n <= 25 else "-"
        print(f"{n:>4} {gf[n]:>12} {dp[n]:>12} {listed!s:>12}")


if __name__ == "__main__":
    main()
