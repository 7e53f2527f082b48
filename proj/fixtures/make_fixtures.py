#!/usr/bin/env python3
# Copyright 2026 The smwt Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the fixture tensors from their block displays.

A (I1,I2|J1,J2) tensor is displayed as an (I1*J1) x (I2*J2) grid with
entry a[i1 i2, j1 j2] at display row i1 + I1*(j1-1), column i2 + I2*(j2-1)
(1-based). Files store the row-major unfolded matrix, whose row is
i1 + I1*(i2-1) and column j1 + J1*(j2-1).

Run from the repository root: python3 fixtures/make_fixtures.py
"""

import os

HERE = os.path.dirname(os.path.abspath(__file__))


def unfold_display(shape, display):
    (i1n, i2n), (j1n, j2n) = shape
    rows, cols = i1n * i2n, j1n * j2n
    out = [[0.0] * cols for _ in range(rows)]
    for a in range(i1n):
        for b in range(i2n):
            for c in range(j1n):
                for d in range(j2n):
                    out[a + i1n * b][c + j1n * d] = float(display[a + i1n * c][b + i2n * d])
    return [v for row in out for v in row]


def render(shape, display, comment):
    flat = unfold_display(shape, display)
    grid = "; ".join(" ".join(_num(v) for v in row) for row in display)
    lines = [
        "{",
        f'  "comment": "{comment} Block display rows: [{grid}].",',
        f'  "row_dims": [{", ".join(map(str, shape[0]))}],',
        f'  "col_dims": [{", ".join(map(str, shape[1]))}],',
        '  "entries": [',
    ]
    lines.append(",\n".join(f"    [{repr(v)}, 0.0]" for v in flat))
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def _num(v):
    return repr(float(v)).rstrip("0").rstrip(".") if float(v) != int(v) else str(int(v))


SQ = ((2, 2), (2, 2))
COL = ((2, 2), (1, 1))
ROW = ((1, 1), (2, 2))
SCALAR = ((1, 1), (1, 1))

A = [[1, -1, 0, 0], [0, 0, -1, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
A_PINV = [[1, 0, 0, 0], [1, 0, 1, 0], [0, -0.5, 0, 0], [0, 0.5, 0, 0]]

FIXTURES = {
    "orthogonal/A": (SQ, A, "Rank-3 base tensor."),
    "orthogonal/A_pinv": (SQ, A_PINV, "Moore-Penrose inverse of A."),
    "orthogonal/A_H": (SQ, [[1, 0, -1, 0], [0, 0, 1, 0], [0, -1, 0, 0], [0, 1, 0, 0]],
                       "Conjugate transpose of A."),
    "orthogonal/B": (SCALAR, [[1]], "Unit core."),
    "orthogonal/U": (COL, [[0, 0], [0, 1]], "Update factor; orthogonal to the column space of A."),
    "orthogonal/V": (ROW, [[0, 1], [0, 1]], "Update factor; orthogonal to the column space of A^H."),
    "orthogonal/S": (SQ, [[1, -1, 0, 0], [0, 0, -1, 1], [0, 1, 0, 0], [0, 0, 1, 1]],
                     "Updated tensor A + U*B*V."),
    "orthogonal/S_pinv": (SQ, [[1, 0, 0, 0], [1, 0, 1, 0], [0, -0.5, 0, 0.5], [0, 0.5, 0, 0.5]],
                          "Moore-Penrose inverse of S."),
    "orthogonal/E1": (COL, [[0, 0], [0, 1]], "E1 = Y1 * pinv(Y1^H * Y1)."),
    "orthogonal/E2": (COL, [[0, 0.5], [0, 0.5]], "E2 = Y2 * pinv(Y2^H * Y2)."),
    "mixed/U": (COL, [[0, 1], [0, 1]], "Update factor with parts in and orthogonal to the column space of A."),
    "mixed/V": (ROW, [[0, 0], [0, 2]], "Update factor with parts in and orthogonal to the column space of A^H."),
    "mixed/S": (SQ, [[1, -1, 0, 0], [0, 0, -1, 0], [0, 1, 0, 2], [0, 0, 1, 2]],
                "Updated tensor A + U*B*V."),
    "mixed/S_pinv": (SQ, [[1, 0, 0, 0], [1, 0, 1, 0], [0, -1, 0, 0.5], [0, 0, -1, 0.5]],
                     "Moore-Penrose inverse of S."),
    "mixed/X1": (COL, [[0, 1], [0, 0]], "Projection of U onto the column space of A."),
    "mixed/Y1": (COL, [[0, 0], [0, 1]], "U - X1."),
    "mixed/X2": (COL, [[0, -1], [0, 1]], "Projection of V^H onto the column space of A^H."),
    "mixed/Y2": (COL, [[0, 1], [0, 1]], "V^H - X2."),
    "mixed/E1": (COL, [[0, 0], [0, 1]], "E1 = Y1 * pinv(Y1^H * Y1)."),
    "mixed/E2": (COL, [[0, 0.5], [0, 0.5]], "E2 = Y2 * pinv(Y2^H * Y2)."),
    "system/A": (SQ, A, "Coefficient tensor of A*X = D."),
    "system/A_pinv": (SQ, A_PINV, "Moore-Penrose inverse of A."),
    "system/D": (COL, [[1, 2], [1, 1]], "Right-hand side; Frobenius norm sqrt(7)."),
}


def main():
    for name, (shape, display, comment) in FIXTURES.items():
        path = os.path.join(HERE, name + ".json")
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w") as f:
            f.write(render(shape, display, comment))


if __name__ == "__main__":
    main()
