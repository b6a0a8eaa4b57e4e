"""Monomial matrices over roots of unity.

A monomial matrix has one nonzero entry per row and column; we store the
column permutation and the column entries, so entry (perm[j], j) equals
diag[j].  Products, inverses, determinants and bilinear-form checks are
all exact.  A symmetric form is described by a pairing involution iota,
the form sum_j x_j * x_{iota(j)}; the antidiagonal iota(j) = dim-1-j is
the default.
"""

from __future__ import annotations

from dataclasses import dataclass

from .roots import ONE, RootOfUnity

__all__ = ["MonomialMatrix", "antidiagonal_pairing"]


def antidiagonal_pairing(dim: int) -> tuple[int, ...]:
    return tuple(dim - 1 - j for j in range(dim))


@dataclass(frozen=True)
class MonomialMatrix:
    perm: tuple[int, ...]
    diag: tuple[RootOfUnity, ...]

    def __post_init__(self) -> None:
        if len(self.perm) != len(self.diag):
            raise ValueError("permutation and diagonal sizes differ")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("not a permutation")

    @property
    def dim(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, dim: int) -> "MonomialMatrix":
        return cls(tuple(range(dim)), (ONE,) * dim)

    @classmethod
    def diagonal(cls, entries: tuple[RootOfUnity, ...]) -> "MonomialMatrix":
        return cls(tuple(range(len(entries))), tuple(entries))

    @classmethod
    def permutation(cls, perm: tuple[int, ...]) -> "MonomialMatrix":
        return cls(perm, (ONE,) * len(perm))

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        p1, d1 = self.perm, self.diag
        p2, d2 = other.perm, other.diag
        perm = tuple(p1[p2[k]] for k in range(self.dim))
        diag = tuple(d1[p2[k]] * d2[k] for k in range(self.dim))
        return MonomialMatrix(perm, diag)

    def inverse(self) -> "MonomialMatrix":
        n = self.dim
        pinv = [0] * n
        for j, i in enumerate(self.perm):
            pinv[i] = j
        diag = tuple(self.diag[pinv[k]].inverse() for k in range(n))
        return MonomialMatrix(tuple(pinv), diag)

    def det(self) -> RootOfUnity:
        d = ONE
        for x in self.diag:
            d = d * x
        if _perm_sign(self.perm) < 0:
            d = d * RootOfUnity(1, 2)
        return d

    def preserves_form(self, pairing: tuple[int, ...] | None = None) -> bool:
        """Whether M^T J M = J for the symmetric form given by the pairing."""
        iota = pairing if pairing is not None else antidiagonal_pairing(self.dim)
        if any(iota[iota[j]] != j for j in range(self.dim)):
            raise ValueError("pairing must be an involution")
        for j in range(self.dim):
            if self.perm[iota[j]] != iota[self.perm[j]]:
                return False
            if not (self.diag[j] * self.diag[iota[j]]).is_one:
                return False
        return True

    def trace_int(self) -> int:
        """Trace when every fixed-point entry is +-1."""
        t = 0
        for j in range(self.dim):
            if self.perm[j] == j:
                t += self.diag[j].as_int()
        return t

    def trace_exponents(self) -> list[RootOfUnity]:
        """The diagonal entries actually on the diagonal, as a multiset."""
        return [self.diag[j] for j in range(self.dim) if self.perm[j] == j]

    @property
    def is_identity(self) -> bool:
        return all(i == j for j, i in enumerate(self.perm)) and \
            all(x.is_one for x in self.diag)

    def sort_key(self):
        return (self.perm, tuple(x.sort_key() for x in self.diag))

    def to_json(self) -> dict:
        return {"perm": list(self.perm),
                "diag": [str(x) for x in self.diag]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialMatrix":
        return cls(tuple(data["perm"]),
                   tuple(RootOfUnity.parse(s) for s in data["diag"]))

    def __repr__(self) -> str:
        return f"MonomialMatrix(perm={self.perm}, diag={self.diag})"


def _perm_sign(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
