#!/usr/bin/env python3
"""Writes the golden table files from the periodicity tables, transcribed
cell-for-cell in terms of s.

Columns: C(q_k), C(q'_k), C(q_k + <1>), d(q_k), d(q'_k), d(q_k + <1>) for
k = P*r + n, with q_k negative definite and q'_k positive definite.

    python3 transcribe.py   # run from this directory
"""
import re

TABLE_8R = [
    ("C(s)", "k(s)^2", "k(2s)", "2s", "s", "2s"),
    ("H(s)", "k(2s)", "C(2s)", "4s", "2s", "4s"),
    ("H(s)^2", "C(2s)", "H(2s)", "4s", "4s", "8s"),
    ("H(2s)", "H(2s)", "H(2s)^2", "8s", "8s", "8s"),
    ("C(4s)", "H(2s)^2", "H(4s)", "8s", "8s", "16s"),
    ("k(8s)", "H(4s)", "C(8s)", "8s", "16s", "16s"),
    ("k(8s)^2", "C(8s)", "k(16s)", "8s", "16s", "16s"),
    ("k(16s)", "k(16s)", "k(16s)^2", "16s", "16s", "16s"),
]

TABLE_4R = [
    ("C(s)", "k(s)^2", "k(2s)", "2s", "s", "2s"),
    ("k(2s)", "k(2s)", "C(2s)", "2s", "2s", "4s"),
    ("k(2s)^2", "C(2s)", "k(4s)", "2s", "4s", "4s"),
    ("k(4s)", "k(4s)", "k(4s)^2", "4s", "4s", "4s"),
]

ALGEBRA = re.compile(r"^([kCH])\((\d*)s\)(\^2)?$")
SIZE = re.compile(r"^(\d*)s$")


def times_s(coeff, s):
    return (int(coeff) if coeff else 1) * s


def algebra(cell, s):
    base, coeff, split = ALGEBRA.match(cell).groups()
    return "%s(%d)%s" % ({"k": "K"}.get(base, base), times_s(coeff, s), split or "")


def size(cell, s):
    return str(times_s(SIZE.match(cell).group(1), s))


def render(kind, profile, table, s, r):
    lines = ["TABLE kind=%s profile=%s r=%d" % (kind, profile, r)]
    for n, (c, cp, cperp, d, dp, dperp) in enumerate(table, start=1):
        lines.append(
            "n=%d C=%s Cprime=%s Cperp=%s d=%s dprime=%s dperp=%s"
            % (n, algebra(c, s), algebra(cp, s), algebra(cperp, s), size(d, s), size(dp, s), size(dperp, s))
        )
    return "\n".join(lines) + "\n"


def main():
    for r in range(5):
        with open("paper-8r_r%d.txt" % r, "w") as f:
            f.write(render("paper-8r", "level-inf", TABLE_8R, 16**r, r))
        with open("paper-4r_r%d.txt" % r, "w") as f:
            f.write(render("paper-4r", "level-2", TABLE_4R, 4**r, r))


if __name__ == "__main__":
    main()
