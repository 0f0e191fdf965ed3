"""Target groups ``G = F x (S^1)^p x R^q`` and their compact text names."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, prod

from .errors import ParseError


@dataclass(frozen=True)
class TargetGroup:
    """A torsion-wise finite abelian group ``F x (S^1)^p x R^q``.

    ``finite_factors`` lists the cyclic factors of ``F`` (each >= 2, sorted).
    """

    finite_factors: tuple[int, ...] = ()
    torus_rank: int = 0
    real_rank: int = 0

    def __post_init__(self):
        factors = tuple(int(f) for f in self.finite_factors)
        if any(f < 1 for f in factors) or self.torus_rank < 0 or self.real_rank < 0:
            raise ValueError(f"invalid target group {factors}, {self.torus_rank}, {self.real_rank}")
        object.__setattr__(self, "finite_factors", tuple(sorted(f for f in factors if f > 1)))

    @classmethod
    def trivial(cls):
        return cls()

    @classmethod
    def cyclic(cls, k: int):
        return cls((k,))

    @classmethod
    def circle(cls):
        return cls((), 1, 0)

    @classmethod
    def complex_star(cls):
        return cls((), 1, 1)

    @classmethod
    def complex(cls):
        return cls((), 0, 2)

    @classmethod
    def real(cls):
        return cls((), 0, 1)

    def __mul__(self, other: "TargetGroup") -> "TargetGroup":
        return TargetGroup(self.finite_factors + other.finite_factors,
                           self.torus_rank + other.torus_rank,
                           self.real_rank + other.real_rank)

    def torsion_count(self, d: int) -> int:
        """``#G[d]``, the number of ``d``-torsion points."""
        return d ** self.torus_rank * prod(gcd(d, f) for f in self.finite_factors)

    @property
    def finite_order(self) -> int:
        return prod(self.finite_factors)

    @property
    def is_finite(self) -> bool:
        return self.torus_rank == 0 and self.real_rank == 0

    @property
    def order(self) -> int | None:
        return self.finite_order if self.is_finite else None

    @property
    def dim(self) -> int:
        return self.torus_rank + self.real_rank

    @property
    def is_compact(self) -> bool:
        return self.real_rank == 0

    @property
    def is_divisible(self) -> bool:
        return not self.finite_factors

    @property
    def e_semi(self) -> int:
        if self.torus_rank > 0:
            return 0
        return (-1) ** self.real_rank * self.finite_order

    @property
    def e_top(self) -> int:
        return 0 if self.torus_rank > 0 else self.finite_order

    def poincare_coefficients(self) -> list[int]:
        """Coefficients of ``(1 + t)^p * #F`` in increasing degree."""
        coeffs = [1]
        for _ in range(self.torus_rank):
            coeffs = [a + b for a, b in zip(coeffs + [0], [0] + coeffs)]
        return [c * self.finite_order for c in coeffs]

    def __str__(self):
        parts = [f"Z/{f}" for f in self.finite_factors]
        parts += ["S1"] * self.torus_rank + ["R"] * self.real_rank
        return " x ".join(parts) if parts else "triv"

    def to_json(self) -> dict:
        return {"finite": list(self.finite_factors), "tori": self.torus_rank, "reals": self.real_rank}

    @classmethod
    def from_json(cls, obj: dict) -> "TargetGroup":
        try:
            return cls(tuple(int(f) for f in obj.get("finite", ())),
                       int(obj.get("tori", 0)), int(obj.get("reals", 0)))
        except (TypeError, ValueError, AttributeError) as exc:
            raise ParseError(f"bad group object {obj!r}: {exc}") from None


_ATOMS = {
    "triv": TargetGroup(),
    "0": TargetGroup(),
    "S1": TargetGroup((), 1, 0),
    "Cx": TargetGroup((), 1, 1),
    "C": TargetGroup((), 0, 2),
    "R": TargetGroup((), 0, 1),
}
_CYCLIC = re.compile(r"Z/(\d+)")
_POWER = re.compile(r"(.+?)\^(\d+)")


def parse_group_spec(text: str) -> TargetGroup:
    """Parse names such as ``Z/4``, ``S1``, ``Cx``, ``C``, ``R``, ``triv``
    and products like ``Z/2 x S1 x R`` (``R^2`` is accepted as a shorthand).
    """
    result = TargetGroup()
    pieces = [p.strip() for p in re.split(r"\s+x\s+|\*", text.strip())]
    if not pieces or any(not p for p in pieces):
        raise ParseError(f"empty factor in group spec {text!r}")
    for piece in pieces:
        power = 1
        m = _POWER.fullmatch(piece)
        if m:
            piece, power = m.group(1), int(m.group(2))
        if piece in _ATOMS:
            atom = _ATOMS[piece]
        elif (m := _CYCLIC.fullmatch(piece)) and int(m.group(1)) > 0:
            atom = TargetGroup((int(m.group(1)),))
        else:
            raise ParseError(f"unknown group factor {piece!r} in {text!r}")
        for _ in range(power):
            result = result * atom
    return result
