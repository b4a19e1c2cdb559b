"""Binomials x^u - x^v of the toric ideal I_H, stored as exponent pairs."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInIdeal


def _monomial(exps):
    parts = []
    for i, c in enumerate(exps, start=1):
        if c == 1:
            parts.append(f"x{i}")
        elif c:
            parts.append(f"x{i}^{c}")
    return "*".join(parts) or "1"


@dataclass(frozen=True, order=True)
class Binomial:
    """x^plus - x^minus in normal form.

    Normal form: the monomial gcd is removed and ``plus`` is the
    lexicographically larger exponent tuple.
    """

    plus: tuple[int, ...]
    minus: tuple[int, ...]
    degree: int

    @classmethod
    def from_pair(cls, u, v, gens) -> "Binomial":
        lo = [min(a, b) for a, b in zip(u, v)]
        u = tuple(a - m for a, m in zip(u, lo))
        v = tuple(b - m for b, m in zip(v, lo))
        du = sum(a * n for a, n in zip(u, gens))
        dv = sum(b * n for b, n in zip(v, gens))
        if du != dv:
            raise NotInIdeal(f"{_monomial(u)} - {_monomial(v)}: degrees {du} != {dv}")
        if u < v:
            u, v = v, u
        return cls(u, v, du)

    @classmethod
    def from_vector(cls, vec, gens) -> "Binomial":
        plus = tuple(max(c, 0) for c in vec)
        minus = tuple(max(-c, 0) for c in vec)
        return cls.from_pair(plus, minus, gens)

    @property
    def is_zero(self):
        return self.plus == self.minus

    @property
    def vector(self):
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    def variables(self):
        return {i for i, c in enumerate(self.plus) if c}, {i for i, c in enumerate(self.minus) if c}

    def moves(self, u):
        """Factorizations reachable from ``u`` by one application of this binomial."""
        out = []
        if all(a >= b for a, b in zip(u, self.plus)):
            out.append(tuple(a - p + m for a, p, m in zip(u, self.plus, self.minus)))
        if all(a >= b for a, b in zip(u, self.minus)):
            out.append(tuple(a - m + p for a, p, m in zip(u, self.plus, self.minus)))
        return out

    def __str__(self):
        return f"{_monomial(self.plus)} - {_monomial(self.minus)}"

    def as_dict(self):
        return {"plus": list(self.plus), "minus": list(self.minus), "degree": self.degree,
                "text": str(self)}


def binomial(gens, plus, minus) -> Binomial:
    """Build a normalized binomial, raising NotInIdeal on unequal degrees."""
    return Binomial.from_pair(tuple(plus), tuple(minus), tuple(gens))
