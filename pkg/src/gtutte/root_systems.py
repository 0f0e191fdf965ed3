"""Positive roots of the irreducible root systems in simple-root coordinates.

Roots are generated from a Gram matrix of the simple roots (Bourbaki
numbering) by the root-string algorithm, so the only hand-entered data
are the Dynkin diagrams and the tabulated constants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .abelian_core import ElementList, free_group
from .errors import UnsupportedType
from .polynomials import UniPoly

MAX_RANK = {"A": 8, "B": 6, "C": 6, "D": 6}
EXCEPTIONAL_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}


def _chain(n: int, long_sq: int = 2) -> list[list[int]]:
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = long_sq
        if i + 1 < n:
            b[i][i + 1] = b[i + 1][i] = -long_sq // 2
    return b


def gram_matrix(kind: str, rank: int) -> list[list[int]]:
    """Inner products of the simple roots, scaled to integers."""
    if kind == "A":
        return _chain(rank)
    if kind == "B":
        b = _chain(rank, 4)
        b[-1][-1] = 2
        return b
    if kind == "C":
        b = _chain(rank)
        b[-1][-1] = 4
        b[-1][-2] = b[-2][-1] = -2
        return b
    if kind == "D":
        b = _chain(rank)
        b[-1][-2] = b[-2][-1] = 0
        b[-1][-3] = b[-3][-1] = -1
        return b
    if kind == "E":
        # 1-3-4-5-6-7-8 with 2 attached to 4
        b = [[0] * rank for _ in range(rank)]
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, rank - 1)]
        for i in range(rank):
            b[i][i] = 2
        for i, j in edges:
            b[i][j] = b[j][i] = -1
        return b
    if kind == "F":
        return [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    if kind == "G":
        return [[2, -3], [-3, 6]]
    raise UnsupportedType(kind)


def cartan_matrix(kind: str, rank: int) -> list[list[int]]:
    """``A[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``."""
    b = gram_matrix(kind, rank)
    return [[2 * b[i][j] // b[j][j] for j in range(rank)] for i in range(rank)]


def _positive_roots(gram: list[list[int]]) -> list[tuple[int, ...]]:
    n = len(gram)
    simple = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    roots = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pair = sum(beta[j] * gram[j][i] for j in range(n))
                coroot = Fraction(2 * pair, gram[i][i])
                p = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) in roots:
                        p += 1
                    else:
                        break
                if p - coroot > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
                        ordered.append(up)
        layer = nxt
    return ordered


def _det(m: list[list[int]]) -> int:
    a = [[Fraction(x) for x in row] for row in m]
    n, det = len(a), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    return int(det)


# (#W, Coxeter number h, index of connection f, period)
def table_constants(kind: str, rank: int) -> tuple[int, int, int, int]:
    l = rank
    if kind == "A":
        return factorial(l + 1), l + 1, l + 1, 1
    if kind in ("B", "C"):
        return 2 ** l * factorial(l), 2 * l, 2, 2
    if kind == "D":
        return 2 ** (l - 1) * factorial(l), 2 * l - 2, 4, 2
    return {
        ("E", 6): (2 ** 7 * 3 ** 4 * 5, 12, 3, 6),
        ("E", 7): (2 ** 10 * 3 ** 4 * 5 * 7, 18, 2, 12),
        ("E", 8): (2 ** 14 * 3 ** 5 * 5 ** 2 * 7, 30, 1, 60),
        ("F", 4): (2 ** 7 * 3 ** 2, 12, 1, 12),
        ("G", 2): (2 ** 2 * 3, 6, 1, 6),
    }[(kind, rank)]


def table_polynomial(kind: str, rank: int) -> UniPoly:
    """The most degenerate constituent, as tabulated for each type."""
    t = UniPoly.t()
    l = rank
    if kind == "A":
        return UniPoly.from_roots(range(1, l + 1))
    if kind in ("B", "C"):
        return (t - l) * UniPoly.from_roots(2 * k for k in range(1, l))
    if kind == "D":
        return (t ** 2 - 2 * (l - 1) * t + l * (l - 1) // 2) * UniPoly.from_roots(2 * k for k in range(1, l - 1))
    if (kind, l) == ("E", 6):
        return (t - 6) ** 2 * UniPoly.from_coeffs([480, -504, 186, -24, 1])
    if (kind, l) == ("E", 7):
        return (t - 12) * UniPoly.from_coeffs([120960, -116064, 47784, -9675, 1005, -51, 1])
    if (kind, l) == ("E", 8):
        return UniPoly.from_coeffs([696729600, -445824000, 142577280, -25260480, 2626008,
                                    -163800, 6020, -120, 1])
    if (kind, l) == ("F", 4):
        return UniPoly.from_coeffs([1152, -768, 208, -24, 1])
    if (kind, l) == ("G", 2):
        return UniPoly.from_coeffs([12, -6, 1])
    raise UnsupportedType(f"{kind}{l}")


# Poincare polynomials of the toric complements, exceptional types
TABLE_POINCARE = {
    ("E", 6): [1, 42, 705, 6020, 27459, 63378, 58555],
    ("E", 7): [1, 70, 2016, 30800, 268289, 1328670, 3479734, 3842020],
    ("E", 8): [1, 128, 6888, 202496, 3539578, 37527168, 235845616, 818120000, 1313187309],
    ("F", 4): [1, 28, 286, 1260, 2153],
    ("G", 2): [1, 8, 19],
}


@dataclass(frozen=True)
class RootSystemData:
    kind: str
    rank: int
    positive_roots: ElementList
    weyl_order: int
    coxeter_number: int
    index_of_connection: int
    period: int

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    def cartan(self) -> list[list[int]]:
        return cartan_matrix(self.kind, self.rank)

    def weight_lattice_map(self) -> list[list[int]]:
        """Matrix sending simple-root coordinates to fundamental-weight coordinates."""
        a = self.cartan()
        return [[a[j][i] for j in range(self.rank)] for i in range(self.rank)]

    def table_polynomial(self) -> UniPoly:
        return table_polynomial(self.kind, self.rank)


def parse_type(kind: str, rank: int | None = None) -> tuple[str, int]:
    """Normalize ``("G2", None)``, ``("B", 3)`` or ``("b3", None)`` to ``("B", 3)``."""
    m = re.fullmatch(r"([A-Ga-g])(\d*)", kind.strip())
    if not m:
        raise UnsupportedType(f"unknown root system type {kind!r}")
    letter = m.group(1).upper()
    if m.group(2):
        if rank is not None and rank != int(m.group(2)):
            raise UnsupportedType(f"conflicting ranks for {kind!r}: {rank}")
        rank = int(m.group(2))
    if rank is None:
        raise UnsupportedType(f"rank required for type {letter}")
    name = f"{letter}{rank}"
    if letter in MAX_RANK:
        low = 4 if letter == "D" else (2 if letter in "BC" else 1)
        if not low <= rank <= MAX_RANK[letter]:
            raise UnsupportedType(f"{name} outside supported ranks {low}..{MAX_RANK[letter]}")
    elif name not in EXCEPTIONAL_RANK:
        raise UnsupportedType(f"unsupported root system {name}")
    return letter, rank


def positive_roots(kind: str, rank: int | None = None) -> RootSystemData:
    """Positive roots of an irreducible root system as a list in ``Z^rank``."""
    kind, rank = parse_type(kind, rank)
    roots = _positive_roots(gram_matrix(kind, rank))
    labels = ["+".join(f"{c}a{i + 1}" if c > 1 else f"a{i + 1}" for i, c in enumerate(r) if c) for r in roots]
    lst = ElementList(free_group(rank), tuple(roots), tuple(labels))
    w, h, f, rho = table_constants(kind, rank)
    return RootSystemData(kind, rank, lst, w, h, f, rho)


def index_of_connection(kind: str, rank: int) -> int:
    """``|det|`` of the Cartan matrix."""
    return abs(_det(cartan_matrix(kind, rank)))
