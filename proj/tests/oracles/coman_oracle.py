"""Boundary polynomial E(s, t) of the two-pole ball family, expanded in real arithmetic. Prints JSON."""
import json
import sys

import sympy as sp

s, x, y, c, d = sp.symbols("s x y c d", real=True)


def expanded_E():
    t2 = x**2 + y**2
    one_minus_st = (1 - s * x) ** 2 + (s * y) ** 2
    st_plus_d = (s * x + d) ** 2 + (s * y) ** 2
    return sp.expand((s**2 - c) * (t2 - c) * one_minus_st - (1 - s**2) * (1 - t2) * st_plus_d)


def main():
    e = expanded_E()
    cases = [
        {"s": "7/10", "x": "-3/10", "y": "2/5", "c": "1/10", "d": "1/5"},
        {"s": "1/2", "x": "3/5", "y": "-1/10", "c": "1/5", "d": "-3/10"},
        {"s": "9/10", "x": "1/10", "y": "4/5", "c": "-1/4", "d": "1/2"},
    ]
    out = []
    for case in cases:
        subs = {sym: sp.Rational(case[str(sym)]) for sym in (s, x, y, c, d)}
        out.append({**{k: float(sp.Rational(v)) for k, v in case.items()}, "E": float(e.subs(subs))})
    json.dump(out, sys.stdout, indent=2)
    print()


if __name__ == "__main__":
    main()
