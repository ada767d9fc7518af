"""Frozen fixtures shared across the test suite.

Facet lists are written as label strings; helpers turn them into
complexes.  The degree-4 alpha sets are the expected signed preimages of
each target facet for the (n=3, d=4) join-cone bundle.
"""

from sphere_forge import make_complex, parse_label, simplex


def labels(text):
    return [parse_label(tok) for tok in text.split()]


def complex_of(facet_strings):
    return make_complex([labels(f) for f in facet_strings])


def simplex_of(text):
    return simplex(labels(text))


def facet_set(facet_strings):
    return frozenset(frozenset(labels(f)) for f in facet_strings)


# the 3d-vertex discs for d = 2, 3, 4 with their sign split
DELTA2_POSITIVE = ["u1_1 u2_1 u3_1", "u1_2 u2_2 u3_1", "u1_1 u2_2 u3_2"]
DELTA2_NEGATIVE = ["u1_1 u2_2 u3_1"]

DELTA3_POSITIVE = [
    "u1_1 u2_1 u3_1",
    "u1_2 u2_2 u3_1",
    "u1_3 u2_2 u3_2",
    "u1_3 u2_3 u3_3",
    "u1_1 u2_2 u3_3",
]
DELTA3_NEGATIVE = ["u1_1 u2_2 u3_1", "u1_3 u2_2 u3_3"]

DELTA4_POSITIVE = [
    "u1_1 u2_1 u3_1",
    "u1_2 u2_2 u3_1",
    "u1_3 u2_2 u3_2",
    "u1_3 u2_3 u3_3",
    "u1_4 u2_4 u3_3",
    "u1_1 u2_4 u3_4",
    "u1_1 u2_2 u3_3",
]
DELTA4_NEGATIVE = ["u1_1 u2_2 u3_1", "u1_3 u2_2 u3_3", "u1_1 u2_4 u3_3"]

DELTA4_TRIANGLES = DELTA4_POSITIVE + DELTA4_NEGATIVE


# minimal 6-vertex triangulation of the projective plane (every edge in
# two triangles, chi = 1, one 2-torsion class in H_1)
PROJECTIVE_PLANE = [
    "w1 w2 w5",
    "w1 w2 w6",
    "w1 w3 w4",
    "w1 w3 w5",
    "w1 w4 w6",
    "w2 w3 w4",
    "w2 w3 w6",
    "w2 w4 w5",
    "w3 w5 w6",
    "w4 w5 w6",
]


# expected signed preimage sets for the (n=3, d=4) join-cone bundle
DEGREE4_ALPHA = {
    ("v1 v2 v3 v4", "+"): [
        "u1_1 u2_1 u3_1 u4",
        "u1_2 u2_2 u3_1 u4",
        "u1_3 u2_2 u3_2 u4",
        "u1_3 u2_3 u3_3 u4",
        "u1_4 u2_4 u3_3 u4",
        "u1_1 u2_4 u3_4 u4",
        "u1_1 u2_2 u3_3 u4",
    ],
    ("v1 v2 v3 v4", "-"): [
        "u1_1 u2_2 u3_1 u4",
        "u1_3 u2_2 u3_3 u4",
        "u1_1 u2_4 u3_3 u4",
    ],
    ("v1 v2 v3 v5", "+"): [
        "u1_1 u2_2 u3_1 u5",
        "u1_3 u2_2 u3_3 u5",
        "u1_1 u2_4 u3_3 u5",
    ],
    ("v1 v2 v3 v5", "-"): [
        "u1_1 u2_1 u3_1 u5",
        "u1_2 u2_2 u3_1 u5",
        "u1_3 u2_2 u3_2 u5",
        "u1_3 u2_3 u3_3 u5",
        "u1_4 u2_4 u3_3 u5",
        "u1_1 u2_4 u3_4 u5",
        "u1_1 u2_2 u3_3 u5",
    ],
    ("v1 v2 v4 v5", "+"): [
        "u1_1 u2_1 u4 u5",
        "u1_2 u2_2 u4 u5",
        "u1_3 u2_3 u4 u5",
        "u1_4 u2_4 u4 u5",
    ],
    ("v1 v2 v4 v5", "-"): [],
    ("v1 v3 v4 v5", "+"): [],
    ("v1 v3 v4 v5", "-"): [
        "u1_2 u3_1 u4 u5",
        "u1_3 u3_2 u4 u5",
        "u1_4 u3_3 u4 u5",
        "u1_1 u3_4 u4 u5",
    ],
    ("v2 v3 v4 v5", "+"): [
        "u2_1 u3_1 u4 u5",
        "u2_2 u3_2 u4 u5",
        "u2_3 u3_3 u4 u5",
        "u2_4 u3_4 u4 u5",
    ],
    ("v2 v3 v4 v5", "-"): [],
}

# the six nonempty published preimage lists (the trust anchor for the
# degree-4 worked example)
DEGREE4_ALPHA_SIX = {
    key: value for key, value in DEGREE4_ALPHA.items() if value and key[0] != "v1 v2 v3 v5"
}
DEGREE4_ALPHA_SIX[("v1 v2 v3 v5", "-")] = DEGREE4_ALPHA[("v1 v2 v3 v5", "-")]
