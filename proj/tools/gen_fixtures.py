#!/usr/bin/env python3
"""Regenerates the group/representation fixtures in ../fixtures."""

import itertools
import json
import pathlib

import numpy as np

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def table(elements, mul):
    index = {e: n for n, e in enumerate(elements)}
    return [[index[mul(a, b)] for b in elements] for a in elements]


def encode(mats):
    return [[[[float(np.real(x)), float(np.imag(x))] for x in row] for row in m] for m in mats]


def rep(name, mats):
    mats = [np.atleast_2d(np.asarray(m, dtype=complex)) for m in mats]
    return {"name": name, "dim": mats[0].shape[0], "matrices": encode(mats)}


def cyclic(n):
    elements = list(range(n))
    w = np.exp(2j * np.pi / n)
    reps = [rep("trivial", [[[1]] for _ in elements]), rep("chi1", [[[w**g]] for g in elements])]
    if n > 3:
        reps.append(rep("chi2", [[[w ** (2 * g)]] for g in elements]))
    return {"order": n, "mult": table(elements, lambda a, b: (a + b) % n), "reps": reps}


def perm_matrix(p):
    m = np.zeros((len(p), len(p)))
    for i, pi in enumerate(p):
        m[pi, i] = 1
    return m


def symmetric3():
    elements = list(itertools.permutations(range(3)))
    compose = lambda a, b: tuple(a[b[i]] for i in range(3))  # noqa: E731
    # the permutation rep restricted to the sum-zero plane, orthonormal basis
    basis = np.array([[1, -1, 0], [1, 1, -2]], dtype=float).T
    basis /= np.linalg.norm(basis, axis=0)
    standard = [basis.T @ perm_matrix(p) @ basis for p in elements]
    sign = [[[round(np.linalg.det(perm_matrix(p)))]] for p in elements]
    return {
        "order": 6,
        "mult": table(elements, compose),
        "reps": [rep("trivial", [[[1]]] * 6), rep("sign", sign), rep("standard", standard)],
    }


def qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quaternion8():
    units = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    elements = [u for u in units] + [tuple(-x for x in u) for u in units]
    s = [
        np.eye(2),
        np.array([[0, 1], [1, 0]]),
        np.array([[0, -1j], [1j, 0]]),
        np.array([[1, 0], [0, -1]]),
    ]
    # a + bi + cj + dk -> a s0 - i (b s1 + c s2 + d s3)
    spinor = [q[0] * s[0] - 1j * (q[1] * s[1] + q[2] * s[2] + q[3] * s[3]) for q in elements]

    def character(on_i, on_j):
        out = []
        for q in elements:
            value = 1
            if q[1] != 0 or q[3] != 0:
                value *= on_i
            if q[2] != 0 or q[3] != 0:
                value *= on_j
            out.append([[value]])
        return out

    return {
        "order": 8,
        "mult": table(elements, qmul),
        "reps": [
            rep("trivial", character(1, 1)),
            rep("sign_i", character(1, -1)),
            rep("sign_j", character(-1, 1)),
            rep("sign_k", character(-1, -1)),
            rep("spinor", spinor),
        ],
    }


def dihedral4():
    # r^a s^b with s r s = r^-1
    elements = [(a, b) for b in range(2) for a in range(4)]

    def mul(x, y):
        a1, b1 = x
        a2, b2 = y
        return ((a1 + (a2 if b1 == 0 else -a2)) % 4, (b1 + b2) % 2)

    rot = np.array([[0, -1], [1, 0]])
    ref = np.array([[1, 0], [0, -1]])
    standard = [np.linalg.matrix_power(rot, a) @ np.linalg.matrix_power(ref, b) for a, b in elements]
    det = [[[(-1) ** b]] for _, b in elements]
    reducible = [np.block([[m, np.zeros((2, 1))], [np.zeros((1, 2)), np.array(d)]]) for m, d in zip(standard, det)]
    return {
        "order": 8,
        "mult": table(elements, mul),
        "reps": [
            rep("trivial", [[[1]]] * 8),
            rep("det", det),
            rep("standard", standard),
            rep("standard+det", reducible),
        ],
    }


def dump(data):
    """One table row and one matrix per line."""
    lines = ["{", f' "order": {data["order"]},', ' "mult": [']
    lines += ["  " + json.dumps(row) + "," for row in data["mult"]]
    lines[-1] = lines[-1].rstrip(",")
    lines += [" ],", ' "reps": [']
    for r in data["reps"]:
        lines.append(f'  {{"name": {json.dumps(r["name"])}, "dim": {r["dim"]}, "matrices": [')
        lines += ["   " + json.dumps(m) + "," for m in r["matrices"]]
        lines[-1] = lines[-1].rstrip(",")
        lines.append("  ]},")
    lines[-1] = lines[-1].rstrip(",")
    lines += [" ]", "}"]
    return "\n".join(lines) + "\n"


def main():
    OUT.mkdir(exist_ok=True)
    for name, data in [
        ("z3", cyclic(3)),
        ("z5", cyclic(5)),
        ("s3", symmetric3()),
        ("q8", quaternion8()),
        ("d4", dihedral4()),
    ]:
        (OUT / f"{name}.json").write_text(dump(data))


if __name__ == "__main__":
    main()
