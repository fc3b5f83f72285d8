"""Print coefficient tables of the one-site polynomials p_n(t) for the named lifts.

Rows are n, columns the coefficients of t^0..t^N.
"""

import argparse
from fractions import Fraction

from umbra import lifted, oracles
from umbra.io import render


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=6)
    ap.add_argument("--alpha", default="1", help="Abel parameter")
    ap.add_argument("families", nargs="*",
                    default=["falling", "rising", "abel", "laguerre-binomial", "monomial"])
    args = ap.parse_args()

    for name in args.families:
        a = lifted.named_series(name, args.degree, Fraction(args.alpha))
        print(f"# {name}")
        for n in range(args.degree + 1):
            row = oracles.onedim_sheffer_poly(a, n)
            print(n, " ".join(render(c) for c in row))
        print()


if __name__ == "__main__":
    main()
