"""Exact arithmetic in the quadratic ring Z[w], w**2 = -6."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["QuadInt"]


@dataclass(frozen=True)
class QuadInt:
    """Ring element a + b*w with w**2 = -6; components are plain ints."""

    a: int
    b: int

    def __add__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(
            self.a * other.a - 6 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __pow__(self, n: int) -> "QuadInt":
        if n < 0:
            raise ValueError(f"ring powers need n >= 0, got {n}")
        result = QuadInt(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conj(self) -> "QuadInt":
        return QuadInt(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a + 6 * self.b * self.b
