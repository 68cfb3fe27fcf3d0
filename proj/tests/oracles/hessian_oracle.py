"""Symbolic complex Hessians d^2 u / dz_i dzbar_j at fixed points. Prints JSON."""
import json
import sys

import sympy as sp

x1, y1, x2, y2 = sp.symbols("x1 y1 x2 y2", real=True)
z1 = x1 + sp.I * y1
z2 = x2 + sp.I * y2


def dz(f, x, y):
    return (sp.diff(f, x) - sp.I * sp.diff(f, y)) / 2


def dzbar(f, x, y):
    return (sp.diff(f, x) + sp.I * sp.diff(f, y)) / 2


def hessian(u, point):
    coords = [(x1, y1), (x2, y2)]
    subs = {x1: point[0][0], y1: point[0][1], x2: point[1][0], y2: point[1][1]}
    rows = []
    for i in range(2):
        row = []
        for j in range(2):
            h = sp.simplify(dz(dzbar(u, *coords[j]), *coords[i]))
            v = complex(sp.N(h.subs(subs), 30))
            row.append([v.real, v.imag])
        rows.append(row)
    return rows


def main():
    point = ((sp.Rational(3, 10), sp.Rational(-1, 5)), (sp.Rational(-2, 5), sp.Rational(1, 2)))
    fields = {
        "abs2_product": (z1 * sp.conjugate(z1)) * (z2 * sp.conjugate(z2)),
        "exp_norm2": sp.exp(z1 * sp.conjugate(z1) + z2 * sp.conjugate(z2)),
    }
    out = {"point": [[float(c) for c in p] for p in point]}
    for name, u in fields.items():
        u = sp.expand(sp.simplify(u))
        out[name] = hessian(u, point)
    json.dump(out, sys.stdout, indent=2)
    print()


if __name__ == "__main__":
    main()
