"""Joint squeezing rules for the barrier-well geometry.

A squeeze path fixes how the gap ``rho`` shrinks while the width ``l`` goes
to zero.  The zero-range limit of the pair depends on the chosen path, not
only on the limiting distribution.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["SqueezePath", "BARRIER_FIRST", "ADJACENT", "POWER"]

BARRIER_FIRST = "barrier-first"
ADJACENT = "adjacent"
POWER = "power"


@dataclass(frozen=True)
class SqueezePath:
    """Rule rho(l) describing how the gap closes as the width shrinks.

    Variants:
        barrier-first: rho stays fixed while l -> 0,
        adjacent:      rho = 0 identically,
        power:         rho = c * l**tau.

    A power law with c = 0 is normalized to the adjacent rule.
    """

    kind: str
    rho: float = 0.0
    c: float = 0.0
    tau: float = 0.0

    @classmethod
    def barrier_first(cls, rho: float) -> "SqueezePath":
        if rho <= 0:
            raise ValueError(f"barrier-first separation must be positive, got {rho}")
        return cls(kind=BARRIER_FIRST, rho=rho)

    @classmethod
    def adjacent(cls) -> "SqueezePath":
        return cls(kind=ADJACENT)

    @classmethod
    def power_law(cls, c: float, tau: float) -> "SqueezePath":
        if c < 0:
            raise ValueError(f"path constant c must be >= 0, got {c}")
        if tau <= 0:
            raise ValueError(f"path exponent tau must be positive, got {tau}")
        if c == 0:
            return cls.adjacent()
        return cls(kind=POWER, c=c, tau=tau)

    @classmethod
    def parse(cls, spec: str) -> "SqueezePath":
        """Parse a path out of a compact string.

        Accepted forms: ``adjacent``, ``barrier-first:RHO``, ``linear[:C]``,
        ``quadratic[:C]`` and ``power:C:TAU``.  ``linear`` and ``quadratic``
        are power laws with tau = 1 and tau = 2 (C defaults to 1).
        """
        name, _, rest = spec.partition(":")
        try:
            if name == "adjacent" and not rest:
                return cls.adjacent()
            if name == "barrier-first":
                return cls.barrier_first(float(rest))
            if name == "linear":
                return cls.power_law(float(rest) if rest else 1.0, 1.0)
            if name == "quadratic":
                return cls.power_law(float(rest) if rest else 1.0, 2.0)
            if name == "power":
                c, tau = rest.split(":")
                return cls.power_law(float(c), float(tau))
        except ValueError as exc:
            raise ValueError(f"bad squeeze-path spec {spec!r}: {exc}") from None
        raise ValueError(f"bad squeeze-path spec {spec!r}")

    def rho_of(self, l: float) -> float:
        """Gap width at barrier width ``l``."""
        if self.kind == BARRIER_FIRST:
            return self.rho
        if self.kind == ADJACENT:
            return 0.0
        return self.c * l ** self.tau

    def describe(self) -> str:
        if self.kind == BARRIER_FIRST:
            return f"barrier-first:{self.rho:g}"
        if self.kind == ADJACENT:
            return "adjacent"
        return f"power:{self.c:g}:{self.tau:g}"
