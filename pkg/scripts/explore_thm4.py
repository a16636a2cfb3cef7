"""Observed behaviour of the 12n+3, 12n+7, 12n+11 families mod 8 over a
grid of (alpha, beta), claimed or not.

A grid cell reads ``P`` (claimed, passes), ``p`` (not claimed, holds anyway),
``x`` (not claimed, fails) or ``F`` (claimed, fails).
"""

import argparse

from qcong import verify
from qcong.claims import REGISTRY
from qcong.report import FAIL, PASS, UNCLAIMED_PASS

MARK = {PASS: "P", UNCLAIMED_PASS: "p", FAIL: "F"}


def main() -> None:
    ap = argparse.ArgumentParser(description="explore Theorem 4 outside its hypothesis")
    ap.add_argument("--alpha-max", type=int, default=6)
    ap.add_argument("--beta-max", type=int, default=5)
    ap.add_argument("--order", type=int, default=1500)
    args = ap.parse_args()

    alphas = range(2, args.alpha_max + 1)
    betas = range(1, args.beta_max + 1)
    for cid in ("thm4-12n+3", "thm4-12n+7", "thm4-12n+11"):
        claim = REGISTRY[cid]
        print(f"\n{claim.statement()}")
        print("      " + " ".join(f"b={b}" for b in betas))
        for a in alphas:
            cells = []
            for b in betas:
                r = verify.verify_claim(claim, {"alpha": a, "beta": b}, args.order, explore=True)
                cells.append(f"{MARK.get(r.status, 'x'):>3}")
            print(f"a={a:<3} " + " ".join(cells))


if __name__ == "__main__":
    main()
