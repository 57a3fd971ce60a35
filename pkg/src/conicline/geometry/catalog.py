"""Built-in arrangements.

Every entry is exact. Coefficients are written over the rationals or, for
entries needing irrationalities, over ``Q(sqrt3)`` (generator ``s``, s² = 3)
or ``Q(w)`` (generator ``w``, w² + w + 1 = 0, a primitive cube root of unity).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import UnknownName
from ..numbers import QQ, NumberField
from .arrangement import Arrangement

SQRT3 = NumberField([-3, 0, 1], "Q(sqrt3)")
OMEGA = NumberField([1, 1, 1], "Q(w)")


@dataclass(frozen=True)
class Expected:
    """What an entry is known to be, used by the reproduction checks."""

    counts: tuple | None = None  # (n2, t, n3) for in-class entries
    verdict: str | None = None
    exponents: tuple | None = None
    note: str = ""


def _cl1():
    return Arrangement(QQ, [[1, 0, 0], [0, 1, 0]], [[0, 1, 0, 0, 1, 0], [1, 1, 0, 0, 2, 0]], name="CL1")


def _cl2():
    return Arrangement(QQ, [[1, 0, 0], [1, -13, 0]], [[0, 1, 0, 0, 1, 0], [1, 1, 0, 0, 2, 0]], name="CL2")


def _cl3():
    return Arrangement(QQ, [[1, 0, -1]], [[1, 1, -1, 0, 0, 0]], name="CL3")


def _cl4():
    return Arrangement(QQ, [[1, 0, -1], [1, 0, 1]], [[1, 1, -1, 0, 0, 0]], name="CL4")


def _cl5():
    return Arrangement(QQ, [[0, 1, -1], [1, 0, -1], [1, 0, 1]], [[1, 1, -1, 0, 0, 0]], name="CL5")


def _cl5p():
    return Arrangement(QQ, [[0, 1, 0], [1, 1, -4], [1, -1, 4]], [[1, 1, -16, 0, 0, 0]], name="CL5'")


def _cl7():
    K = SQRT3
    s3 = K.gen / 3  # sqrt(3)/3
    lines = [
        [K(1), K(0), K(-1)],
        [s3, K(1), 2 * s3],
        [-s3, K(1), -2 * s3],
    ]
    conics = [[1, 1, -1, 0, 0, 0], [1, 1, -4, 0, 0, 0]]
    return Arrangement(K, lines, conics, name="CL7")


def _dual_hesse():
    K = OMEGA
    w = K.gen
    w2 = w * w
    lines = []
    for i, j in ((0, 1), (1, 2), (0, 2)):
        for c in (K.one, w, w2):
            row = [K.zero, K.zero, K.zero]
            row[i] = K.one
            row[j] = -c
            lines.append(row)
    return Arrangement(K, lines, [], name="dual-hesse")


def _a0_six():
    lines = [[1, 1, 0], [1, -1, 0], [1, 0, 1], [1, 0, -1], [0, 1, 1], [0, 1, -1]]
    return Arrangement(QQ, lines, [], name="A0-6")


def _a0_seven():
    lines = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, -1], [1, 1, 1]]
    return Arrangement(QQ, lines, [], name="A0-7")


def _generic_lines():
    return Arrangement(QQ, [[1, i, i * i] for i in range(1, 13)], [], name="12-generic-lines")


# found by a seeded search and frozen; the census checks n2 = 60, t = n3 = 0
GENERIC_CONICS = [
    [0, -2, 2, 1, -1, -2],
    [2, 0, 3, 2, 3, -1],
    [1, -2, 2, 3, 2, 0],
    [-1, 0, 1, 2, 1, -2],
    [-1, 1, 2, -1, 1, -3],
    [2, 3, 3, -2, 2, 3],
]

# Q_i and Q_i + L_i^2 are bitangent at the two points of Q_i ∩ L_i; the census checks n2 = 48, t = 6
BITANGENT_CONICS = [
    [-1, 0, 0, -1, 1, -2],
    [0, 1, 1, -3, -1, 0],  # previous + (x - y - z)^2
    [-3, 2, -2, 3, -3, 3],
    [-3, 6, -2, 3, -3, 3],  # previous + (2y)^2
    [3, 1, 3, 2, 0, 1],
    [7, 1, 7, 2, -8, 1],  # previous + (2x - 2z)^2
]


def _generic_conics():
    return Arrangement(QQ, [], GENERIC_CONICS, name="6-generic-conics")


def _bitangent_conics():
    return Arrangement(QQ, [], BITANGENT_CONICS, name="6-conics-3-bitangent-pairs")


_ENTRIES = {
    "CL1": (_cl1, Expected(None, "Free", (2, 3), "quadruple point at (0:0:1)")),
    "CL2": (_cl2, Expected(None, "NearlyFree", None, "quadruple point at (0:0:1)")),
    "CL3": (_cl3, Expected((0, 1, 0), "Free", (1, 1), "conic and a tangent line")),
    "CL4": (_cl4, Expected((1, 2, 0), "Free", (1, 2), "conic and two tangent lines")),
    "CL5": (_cl5, Expected((3, 3, 0), "Free", (2, 2), "conic inscribed in a triangle")),
    "CL5'": (_cl5p, Expected((0, 0, 3), "Free", (2, 2), "conic circumscribed about a triangle")),
    "CL7": (_cl7, Expected((0, 5, 3), "Free", (3, 3), "triangle with inscribed and circumscribed conics")),
    "dual-hesse": (_dual_hesse, Expected((0, 0, 12), "Free", (4, 4), "nine lines, twelve triple points")),
    "A0-6": (_a0_six, Expected((3, 0, 4), None, None, "six lines (x²-y²)(x²-z²)(y²-z²)")),
    "A0-7": (_a0_seven, Expected((3, 0, 6), None, None, "seven lines xyz(x+y)(x+z)(y-z)(x+y+z)")),
    "12-generic-lines": (_generic_lines, Expected((66, 0, 0), None, None, "twelve lines in general position")),
    "6-generic-conics": (_generic_conics, Expected((60, 0, 0), None, None, "six conics in general position")),
    "6-conics-3-bitangent-pairs": (
        _bitangent_conics,
        Expected((48, 6, 0), None, None, "three bitangent conic pairs, otherwise general"),
    ),
}


def names():
    return list(_ENTRIES)


def catalog(name: str) -> Arrangement:
    try:
        build, _ = _ENTRIES[name]
    except KeyError:
        raise UnknownName(f"no catalog entry named {name!r}; known: {', '.join(_ENTRIES)}") from None
    return build()


def expected(name: str) -> Expected:
    if name not in _ENTRIES:
        raise UnknownName(f"no catalog entry named {name!r}")
    return _ENTRIES[name][1]


def describe(name: str) -> str:
    return expected(name).note
