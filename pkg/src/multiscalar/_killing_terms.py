"""Monomial expansion of the 20-parameter Killing-tensor family.

Each covariant component K_ij, in coordinate order (u, w, z), is a sum of
terms ``c[k] * (num/den) * u**pu * w**pw * exp(nz*z)``.  Rows are
``(k, num, den, pu, pw, nz)`` with ``k`` the 1-based constant index.
Storing the family this way gives exact partial derivatives for free.
"""

TERMS = {
    "uu": [
        (9, 1, 1, 0, 0, -2),
        (9, 1, 1, 0, 4, 2),
        (9, 2, 1, 0, 2, 0),
        (10, -1, 1, 0, 1, 0),
        (10, -1, 1, 0, 3, 2),
        (11, -1, 1, 0, 0, 0),
        (12, 1, 2, 0, 2, 2),
        (13, 1, 1, 0, 1, 2),
        (14, 1, 1, 0, 0, 2),
    ],
    "uw": [
        (4, -1, 4, 2, 0, -1),
        (4, 1, 4, 2, 4, 3),
        (5, 1, 4, 2, 3, 3),
        (5, 3, 4, 2, 1, 1),
        (6, -1, 8, 2, 3, 3),
        (6, 1, 8, 2, 1, 1),
        (7, 1, 2, 2, 0, 1),
        (9, 2, 1, 1, 1, 0),
        (9, 2, 1, 1, 3, 2),
        (10, -3, 2, 1, 2, 2),
        (10, -1, 2, 1, 0, 0),
        (12, 1, 2, 1, 1, 2),
        (13, 1, 2, 1, 0, 2),
        (17, -1, 2, 2, 0, 1),
        (17, -1, 2, 2, 2, 3),
        (18, 1, 2, 2, 1, 3),
        (19, 1, 2, 2, 0, 3),
    ],
    "uz": [
        (4, -1, 2, 2, 1, -1),
        (4, -1, 2, 2, 3, 1),
        (5, -1, 2, 2, 0, -1),
        (6, 1, 4, 2, 2, 1),
        (7, 1, 2, 2, 1, 1),
        (8, 1, 2, 2, 0, 1),
        (9, -1, 1, 1, 0, -2),
        (9, 1, 1, 1, 4, 2),
        (10, -1, 1, 1, 3, 2),
        (12, 1, 2, 1, 2, 2),
        (13, 1, 1, 1, 1, 2),
        (14, 1, 1, 1, 0, 2),
    ],
    "ww": [
        (1, -1, 4, 4, 2, 2),
        (1, 1, 8, 4, 0, 0),
        (1, 1, 8, 4, 4, 4),
        (2, -1, 2, 4, 1, 2),
        (2, 1, 2, 4, 3, 4),
        (3, 1, 1, 4, 0, 2),
        (4, -1, 1, 3, 1, 1),
        (4, 1, 1, 3, 3, 3),
        (5, 1, 2, 3, 0, 1),
        (5, 3, 2, 3, 2, 3),
        (6, -1, 4, 3, 2, 3),
        (6, 1, 4, 3, 0, 1),
        (7, 1, 1, 3, 1, 3),
        (8, 1, 1, 3, 0, 3),
        (9, 4, 1, 2, 2, 2),
        (10, -2, 1, 2, 1, 2),
        (11, 1, 1, 2, 0, 2),
        (12, 1, 2, 2, 0, 2),
        (15, -1, 2, 4, 2, 4),
        (15, 1, 2, 4, 0, 2),
        (16, -1, 1, 4, 1, 4),
        (17, -2, 1, 3, 1, 3),
        (18, 1, 1, 3, 0, 3),
        (20, 1, 1, 4, 0, 4),
    ],
    "wz": [
        (1, -1, 4, 4, 3, 2),
        (1, 1, 4, 4, 1, 0),
        (2, -3, 4, 4, 2, 2),
        (2, 1, 4, 4, 0, 0),
        (4, -3, 2, 3, 2, 1),
        (4, 1, 4, 3, 0, -1),
        (4, 1, 4, 3, 4, 3),
        (5, -3, 4, 3, 1, 1),
        (5, 1, 4, 3, 3, 3),
        (6, -1, 8, 3, 3, 3),
        (6, 3, 8, 3, 1, 1),
        (9, -2, 1, 2, 1, 0),
        (9, 2, 1, 2, 3, 2),
        (10, -3, 2, 2, 2, 2),
        (10, 1, 2, 2, 0, 0),
        (12, 1, 2, 2, 1, 2),
        (13, 1, 2, 2, 0, 2),
        (15, 1, 2, 4, 1, 2),
        (16, 1, 2, 4, 0, 2),
        (17, -1, 2, 3, 2, 3),
        (17, 1, 2, 3, 0, 1),
        (18, 1, 2, 3, 1, 3),
        (19, 1, 2, 3, 0, 3),
    ],
    "zz": [
        (1, 1, 2, 4, 2, 0),
        (2, 1, 1, 4, 1, 0),
        (3, 1, 1, 4, 0, 0),
        (4, -1, 1, 3, 3, 1),
        (4, 1, 1, 3, 1, -1),
        (5, 1, 1, 3, 0, -1),
        (6, 1, 2, 3, 2, 1),
        (7, 1, 1, 3, 1, 1),
        (8, 1, 1, 3, 0, 1),
        (9, -2, 1, 2, 2, 0),
        (9, 1, 1, 2, 0, -2),
        (9, 1, 1, 2, 4, 2),
        (10, -1, 1, 2, 3, 2),
        (10, 1, 1, 2, 1, 0),
        (11, 1, 1, 2, 0, 0),
        (12, 1, 2, 2, 2, 2),
        (13, 1, 1, 2, 1, 2),
        (14, 1, 1, 2, 0, 2),
    ],
}

COMPONENTS = ("uu", "uw", "uz", "ww", "wz", "zz")
INDEX = {"uu": (0, 0), "uw": (0, 1), "uz": (0, 2), "ww": (1, 1), "wz": (1, 2), "zz": (2, 2)}
