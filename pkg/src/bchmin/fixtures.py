"""Bundled golden supports: verified minimum-weight words of BCH(27) for
m = 8..16 and of BCH(23) for m = 16, stored as discrete-log exponents
relative to the field's own primitive polynomial."""

from __future__ import annotations

# m -> (primitive polynomial, exponents e such that alpha^e is in the support)
BCH27_FIXTURES: dict[int, tuple[int, tuple[int, ...]]] = {
    8: (0x11D, (
        30, 37, 42, 51, 57, 61, 74, 77, 90,
        91, 99, 115, 121, 134, 136, 146, 154,
        162, 176, 193, 207, 227, 231, 239, 242, 244, 245,
    )),
    9: (0x211, (
        21, 52, 54, 58, 108, 109, 122, 160, 193,
        195, 197, 204, 218, 236, 238, 247, 276, 292,
        312, 374, 381, 391, 396, 411, 413, 479, 503,
    )),
    10: (0x409, (
        46, 48, 108, 118, 160, 251, 330, 341, 346,
        366, 385, 389, 451, 452, 459, 541, 671, 682,
        687, 693, 726, 793, 800, 842, 869, 933, 944,
    )),
    11: (0x805, (
        5, 19, 29, 77, 128, 188, 245, 256, 291,
        356, 524, 737, 832, 906, 992, 1182, 1187, 1233,
        1284, 1422, 1453, 1507, 1514, 1631, 1740, 1782, 1875,
    )),
    12: (0x1053, (
        186, 325, 477, 500, 707, 749, 1036, 1077, 1147,
        1225, 1609, 1637, 1733, 1842, 2367, 2401, 2442, 2853,
        2916, 2974, 3002, 3103, 3207, 3230, 3437, 3734, 3877,
    )),
    13: (0x201B, (
        1104, 1213, 1261, 1381, 1823, 2044, 3254, 4896, 4982,
        5010, 5017, 5498, 5722, 5866, 5902, 6527, 7003, 7196,
        7212, 7579, 7648, 7725, 7731, 7793, 7810, 7960, 8093,
    )),
    14: (0x4443, (
        75, 2064, 3354, 4180, 4411, 5074, 5536, 5559, 6082,
        7083, 7525, 7586, 8815, 9600, 9872, 10664, 11020, 11180,
        12496, 12544, 13047, 13956, 14276, 15061, 15798, 15996, 16245,
    )),
    15: (0x8003, (
        458, 508, 894, 1188, 1453, 2023, 4522, 6610, 10300,
        10946, 11107, 11370, 12145, 12635, 14841, 18805, 19244, 19780,
        19915, 20926, 23454, 24062, 25744, 26911, 27453, 27851, 29367,
    )),
    16: (0x1100B, (
        1535, 3131, 5026, 6975, 7701, 7713, 14337, 15167, 24718,
        28238, 29546, 29558, 34509, 36182, 37012, 37492, 45225, 46563,
        46821, 50072, 51391, 53448, 53461, 53989, 56354, 59337, 62153,
    )),
}

# (m, primitive polynomial, exponents) for the weight-23 word of BCH(23)
BCH23_FIXTURE: tuple[int, int, tuple[int, ...]] = (
    16,
    0x1100B,
    (
        613, 7637, 10903, 13152, 13971, 14915, 14983,
        18473, 30809, 30977, 37218, 39604, 40125, 41649,
        48399, 48563, 51105, 51306, 53563, 55559, 55823,
        56625, 62722,
    ),
)
