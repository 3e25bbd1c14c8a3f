#!/usr/bin/env python3
"""Validate the golden table CSVs against their defining identities.

Independent of the C++ library: every row is recomputed from scratch, so a
corrupted golden file (or a transcription slip) is caught without trusting
the generator under test.  Exits nonzero on the first failure.
"""
import csv
import math
import sys
from pathlib import Path

GOLDEN = Path(__file__).resolve().parent.parent / "data" / "golden"


def rows(name):
    with open(GOLDEN / name, newline="") as f:
        for row in csv.DictReader(f):
            yield {k: v for k, v in row.items()}


def fail(msg):
    print(f"FAIL: {msg}")
    sys.exit(1)


def check_quintuple(c1, c2, c3, q, c4m, c4p, where):
    if q * q != c1 * c2 + (c1 + c2) * c3:
        fail(f"{where}: q^2 != c1 c2 + (c1+c2) c3")
    if c4m != c1 + c2 + c3 - 2 * q or c4p != c1 + c2 + c3 + 2 * q:
        fail(f"{where}: c4 values inconsistent")
    if math.gcd(math.gcd(c1, c2), c3) != 1:
        fail(f"{where}: triple not primitive")
    for c4 in (c4m, c4p):
        s = c1 + c2 + c3 + c4
        if s * s != 2 * (c1 * c1 + c2 * c2 + c3 * c3 + c4 * c4):
            fail(f"{where}: Descartes identity fails for c4={c4}")


def table1():
    n_rows = 0
    for r in rows("table1.csv"):
        n, m, typ = int(r["n"]), int(r["m"]), int(r["type"])
        c1, c2, c3 = int(r["c1"]), int(r["c2"]), int(r["c3"])
        check_quintuple(c1, c2, c3, int(r["q"]), int(r["c4m"]), int(r["c4p"]),
                        f"table1 ({n},{m})")
        if not (1 <= m < n and math.gcd(n, m) == 1 and (n - m) % 2 == 1):
            fail(f"table1 ({n},{m}): invalid parameter pair")
        rep = c1 if c1 == c2 else c2
        want = (n - m) ** 2 if typ == 1 else 2 * m * m
        if c1 != c2 and c2 != c3:
            fail(f"table1 ({n},{m}): no repeated curvature")
        if rep != want:
            fail(f"table1 ({n},{m}) type {typ}: repeated curvature {rep} != {want}")
        n_rows += 1
    # one type-1 and one type-2 row per valid pair with n <= 17
    expect = 2 * sum(1 for n in range(2, 18) for m in range(1, n)
                     if math.gcd(n, m) == 1 and (n - m) % 2 == 1)
    if n_rows != expect:
        fail(f"table1: {n_rows} rows, expected {expect}")


def table2():
    seen = set()
    for r in rows("table2.csv"):
        c1, c2, c3 = int(r["c1"]), int(r["c2"]), int(r["c3"])
        check_quintuple(c1, c2, c3, int(r["q"]), int(r["c4m"]), int(r["c4p"]),
                        f"table2 [{c1},{c2},{c3}]")
        if not (c1 < c2 < c3 <= 38):
            fail(f"table2 [{c1},{c2},{c3}]: not distinct/in range")
        seen.add((c1, c2, c3))
    # completeness: brute-force every distinct primitive DS triple, c3 <= 38
    want = set()
    for c3 in range(3, 39):
        for c1 in range(1, c3):
            for c2 in range(c1 + 1, c3):
                qq = c1 * c2 + (c1 + c2) * c3
                q = math.isqrt(qq)
                if q * q == qq and math.gcd(math.gcd(c1, c2), c3) == 1:
                    want.add((c1, c2, c3))
    if seen != want:
        fail(f"table2: row set mismatch ({seen ^ want})")


def table3():
    for r in rows("table3.csv"):
        s, x, y = int(r["s"]), int(r["x"]), int(r["y"])
        X, Y, q = int(r["X"]), int(r["Y"]), int(r["q"])
        if (X, Y) != (y - x, y + x):
            fail(f"table3 s={s}: X,Y != y-x,y+x")
        if X * X - 2 * Y * Y != -s * s:
            fail(f"table3 s={s}: Pell identity fails")
        if not (0 < X < Y) or math.gcd(X, Y) != 1:
            fail(f"table3 s={s}: not a proper 0<X<Y solution")
        if 2 * q != Y + s:
            fail(f"table3 s={s}: 2q != Y + s")
        # the triple itself is [x, y, q] with c3 = q
        check_quintuple(x, y, q, q, x + y - q, x + y + 3 * q, f"table3 s={s}")
        for col, target in (("t_I", (1, 2, -1)), ("t_II", (1, 2, -1))):
            word = [int(v) for v in r[col].split()]
            # replay the reduction word on the parallel form [-s^2, 2j, c]
            # indirectly: the word must at least be nonempty with the sign
            # convention (leading entry negative, the rest positive)
            if not word or word[0] >= 0 or any(v <= 0 for v in word[1:]):
                fail(f"table3 s={s}: malformed {col} word {word}")


def table45(name, sign):
    for r in rows(name):
        c1, c2, c3 = int(r["c1"]), int(r["c2"]), int(r["c3"])
        q, k, t, a = int(r["q"]), int(r["k"]), int(r["t"]), int(r["a"])
        X, Yh = int(r["X"]), int(r["Yhat"])
        check_quintuple(c1, c2, c3, q, int(r["c4m"]), int(r["c4p"]),
                        f"{name} [{c1},{c2},{c3}]")
        if q != c3 + sign * k or k < 1:
            fail(f"{name} [{c1},{c2},{c3}]: q != c3 {sign:+d} k")
        if X != c2 - c1 or Yh != c1 + c2 - sign * k:
            fail(f"{name} [{c1},{c2},{c3}]: X/Yhat mismatch")
        if t != c3 + q - Yh or a != t * t + 2 * k * k:
            fail(f"{name} [{c1},{c2},{c3}]: t/a mismatch")
        if X * X - 2 * Yh * Yh != -a:
            fail(f"{name} [{c1},{c2},{c3}]: Pell identity fails")


def table6():
    for r in rows("table6.csv"):
        n = int(r["n"])
        c1, c2, c3 = int(r["c1"]), int(r["c2"]), int(r["c3"])
        check_quintuple(c1, c2, c3, int(r["q"]), int(r["c4m"]), int(r["c4p"]),
                        f"table6 n={n}")
        if c3 != n * n or int(r["c4m"]) != 0:
            fail(f"table6 n={n}: c3 != n^2 or c4- != 0")
        m, nn = math.isqrt(c1), math.isqrt(c2)
        if (m * m, nn * nn) != (c1, c2) or (m + nn) ** 2 != c3:
            fail(f"table6 n={n}: not [M^2, N^2, (M+N)^2]")


def main():
    table1()
    table2()
    table3()
    table45("table4.csv", -1)
    table45("table5.csv", +1)
    table6()
    print("all golden tables consistent")


if __name__ == "__main__":
    main()
