"""Run the oracle calibration suite and print each reference table."""

from __future__ import annotations

import argparse

from bettisplit.oracle import FieldSpec, betti_oracle, calibrate, calibration_cases


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--char", type=int, default=0)
    k = FieldSpec(ap.parse_args().char)
    calibrate(k)
    for name, I, expected in calibration_cases():
        got = betti_oracle(I, k)
        print(f"== {name} over {k}: {'ok' if got == expected else 'MISMATCH'}")
        print(got.render())


if __name__ == "__main__":
    main()
