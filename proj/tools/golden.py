#!/usr/bin/env python3
"""Writes data/golden/*.txt from closed-form values, independently of the engine."""

import pathlib
import sys


def series(terms):
    """Ascending Laurent polynomial in the engine's text format."""
    terms = {d: c for d, c in terms.items() if c}
    if not terms:
        return "0"
    out = []
    for i, d in enumerate(sorted(terms)):
        c = terms[d]
        mag = abs(c)
        sign = ("-" if c < 0 else "") if i == 0 else (" - " if c < 0 else " + ")
        if d == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + "t" + ("" if d == 1 else "^" + str(d))
        out.append(sign + body)
    return "".join(out)


def add(*pairs):
    acc = {}
    for d, c in pairs:
        acc[d] = acc.get(d, 0) + c
    return acc


def k(n):
    """The graded space k[n] has Poincare polynomial t^-n."""
    return (-n, 1)


def exts_tcap(q):
    names = ["K-", "E", "E'", "K+"]
    table = {
        "K-": [add(k(0), k(q - 1)), add(k(0)), add(k(0)), {}],
        "E": [add(k(q - 1)), add(k(0)), add(k(0), k(-q)), add(k(-q - 1))],
        "E'": [add(k(q - 1)), {}, add(k(0)), add(k(-1))],
        "K+": [{}, add(k(0)), add(k(-q)), add(k(0), k(-q - 1))],
    }
    lines = []
    for a in names:
        for j, b in enumerate(names):
            lines.append(f"Ext({a}, {b}) = {series(table[a][j])}")
    return lines


def sphericity(q):
    return [
        f"S(K+) = K+[{1 + q}]: yes",
        f"S(K-) = K-[{1 - q}]: yes",
        f"S(helix:2) = helix:0[{1 - q}]: yes",
    ]


def localization(p):
    return [
        "localize(E) = free[0]",
        "localize(E') = free[0]",
        "localize(K+) = 0",
        f"localize(K-) = torsion(m=1, s={p})",
        "localize(K-) = koszul-dual(A): yes",
    ]


def koszul(p):
    lines = []
    for i in range(1, 5):
        lines.append(f"Ext(kappa(A^({i})), freeB) = " + series({j * (p + 1): 1 for j in range(i)}))
    lines.append(f"cone = A[{-p}] + A[{p + 1}]: yes")
    return lines


def self_ext(q):
    lines = ["Ext(M, P) = 1", "Ext(M, M) = " + series(add(k(0), k(q - 1)))]
    for i in (2, 3):
        lines.append(f"Ext(M^({i}), P) = " + series({j * q: 1 for j in range(i)}))
    return lines


def spinor_chi(d):
    lines = [f"rank(S) = {2 ** ((d - 1) // 2)}", "chi(S, S) = 1"]
    if d % 2:
        lines.append("chi(S(1), S) = -1")
    else:
        lines += [
            "chi(S', S') = 1",
            "chi(S, S') = 0",
            "chi(S', S) = 0",
            "chi(S(1), S') = -1",
            "chi(S'(1), S) = -1",
        ]
    lines.append("chi(O, S) = 0")
    return lines


def eta_chi(d):
    if d % 2:
        return ["chi(eta S, eta S) = 2", "chi(K, K) = 2"]
    return ["chi(eta S, eta S) = 1", "chi(eta S, eta S') = 1", "chi(K, K) = 0"]


def lattice():
    lines = [
        "[[1]]: maximal, projective 2/2",
        "[[2]]: Q-maximal-only, projective 2/2",
        "[[0]]: neither, projective 0/2",
    ]
    for r in (1, 2, 3):
        lines.append(f"quintic del Pezzo r={r}: maximal, projective {2 ** r}/{2 ** r}")
    return lines


def golden_name(table_id):
    return table_id.replace(":", "_").replace(",", "_").replace("=", "") + ".txt"


def tables():
    for q in range(1, 5):
        yield f"exts-tcap:q={q}", exts_tcap(q)
    for q in range(1, 4):
        yield f"sphericity:q={q}", sphericity(q)
    for p in range(3):
        yield f"localization:p={p}", localization(p)
    for p in range(3):
        yield f"koszul:p={p}", koszul(p)
    for q in range(1, 4):
        yield f"self-ext:q={q}", self_ext(q)
    for d in range(1, 7):
        yield f"spinor-chi:d={d}", spinor_chi(d)
    for d in range(1, 7):
        yield f"eta-chi:d={d}", eta_chi(d)
    yield "lattice", lattice()


def main():
    root = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent
    out = root / "data" / "golden"
    out.mkdir(parents=True, exist_ok=True)
    for table_id, lines in tables():
        (out / golden_name(table_id)).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
