"""Tabulate v(I_n) with exact quasi-linear fits for a few graph families.

    python scripts/series_table.py --n-max 6
"""

import argparse

from vfilt.asymptotics import best_fit, v_series
from vfilt.filtrations import FiltrationSpec, closure_power, svd_detect
from vfilt.graphs import cover_ideal, graph_from_string
from vfilt.serialize import parse_ideal

FAMILIES = ["Kb(2,3)", "Kb(3,3)", "K(4)", "K(5)", "C(5)", "C(6)", "C(7)", "kpend(2,2)", "kpend(3,2)"]
CLOSURES = ["(x^2, y^2) in [x,y]", "(x^3, x*y, y^3) in [x,y]", "(x^4, x*y^2, y^3) in [x,y]"]


def describe(fit) -> str:
    if fit is None:
        return "no fit"
    parts = [f"{s}n{'+' if b >= 0 else '-'}{abs(b)}" for s, b in fit.lines]
    return f"period {fit.period}: " + " | ".join(parts) + f" from n={fit.n0}"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=6)
    args = ap.parse_args()

    print("symbolic powers of cover ideals")
    for fam in FAMILIES:
        spec = FiltrationSpec("symbolic_minass", base=cover_ideal(graph_from_string(fam)))
        s = v_series(spec, 1, args.n_max)
        svd = svd_detect(spec, 2, 3).svd
        vals = ",".join(str(v) for v in s.values().values())
        print(f"  {fam:<11} v = {vals:<24} svd<=2: {svd}   {describe(best_fit(s))}")
    print("integral closures of powers")
    for text in CLOSURES:
        I = parse_ideal(text)
        s = v_series(FiltrationSpec("closure", base=I), 1, args.n_max)
        vals = ",".join(str(v) for v in s.values().values())
        print(f"  {text:<27} v = {vals:<20} {describe(best_fit(s))}  closure = {closure_power(I, 1)}")


if __name__ == "__main__":
    main()
