"""The APN function (x^3 + alpha y^12, xy) on F_16^2 and its Gamma-rank.

Pass --full to run the 65536 x 65536 rank computation (about a minute).
"""
import argparse
import time

from semifields import alpha_apn_condition, apn_two_param_fn, build_field, gamma_rank, is_apn
from semifields.fn_analysis import field_fn


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--full", action="store_true")
    args = ap.parse_args()

    F = build_field(2, 4, [1, 1, 0, 0, 1])
    print(f"F_16 modulus x^4+x+1, primitive alpha = {F.g}")

    print("\nalpha  cube  " + "  ".join(f"i={i}" for i in range(4)))
    for alpha in range(1, 16):
        row = []
        for i in range(4):
            pred = alpha_apn_condition(F, 1, i, alpha)
            real = is_apn(apn_two_param_fn(F, 1, i, alpha))
            row.append(("APN" if real else " - ") + ("" if pred == real else "!"))
        print(f"{alpha:>5}  {'yes' if F.is_cube(alpha) else 'no ':<4}  " + "  ".join(row))

    print(f"\nGamma-rank of x^3 on F_16: {gamma_rank(field_fn(F, 3))}")
    if args.full:
        f = apn_two_param_fn(F, 1, 2, F.g)
        t0 = time.perf_counter()
        print(f"Gamma-rank of (x^3 + alpha y^12, xy): {gamma_rank(f)} "
              f"({time.perf_counter() - t0:.0f}s)")


if __name__ == "__main__":
    main()
