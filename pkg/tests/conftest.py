"""Shared fixtures: fans and Gram matrices used across test modules."""

import json

import pytest

from torictop import fan as fanmod

# Smooth, complete, NOT projective: P^3 blown up along three coordinate
# lines with a twisted (flopped) triangulation.  Verified exactly: all cone
# determinants are +-1, walls pair up, cone interiors are pairwise disjoint,
# and the wall-positivity system is infeasible over Q.
NONPROJ_FAN = {
    "dim": 3,
    "rays": [
        [1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1],
        [1, 1, 0], [0, 1, 1], [1, 0, 1], [0, -1, -1],
    ],
    "max_cones": [
        [0, 4, 6], [0, 4, 7], [0, 6, 7], [1, 3, 5], [1, 3, 7], [1, 4, 5],
        [1, 4, 7], [2, 3, 5], [2, 3, 6], [2, 4, 5], [2, 4, 6], [3, 6, 7],
    ],
}

# Weighted projective P(1,1,2): complete but the cone on rays 0,2 has
# determinant -2, so not smooth.
SINGULAR_FAN = {
    "dim": 2,
    "rays": [[1, 0], [0, 1], [-1, -2]],
    "max_cones": [[0, 1], [1, 2], [0, 2]],
}

# Hirzebruch surface F_1 (P^2 blown up at a point); the wall on ray 2 is the
# -1-curve.
F1_FAN = {
    "dim": 2,
    "rays": [[1, 0], [0, 1], [-1, 1], [0, -1]],
    "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
}

E8_GRAM = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
]

U_GRAM = [[0, 1], [1, 0]]

# U + U + U conjugated by a unimodular change of basis chosen so that no
# isotropic vector has sup-norm 1: radius-1 searches exhaust honestly.
EXHAUST_GRAM = [
    [-660, -545, 603, 954, -231, -493],
    [-545, -450, 498, 788, -191, -407],
    [603, 498, -548, -865, 198, 451],
    [954, 788, -865, -1364, 304, 714],
    [-231, -191, 198, 304, -24, -175],
    [-493, -407, 451, 714, -175, -368],
]


def make_fan(data):
    return fanmod.parse_fan(json.dumps(data))


def write_fan_file(tmp_path, data, name="fan.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def write_gram_file(tmp_path, gram, name="gram.txt"):
    lines = [str(len(gram))]
    lines += [" ".join(str(x) for x in row) for row in gram]
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


@pytest.fixture
def nonproj_fan():
    return make_fan(NONPROJ_FAN)


@pytest.fixture
def f1_fan():
    return make_fan(F1_FAN)
