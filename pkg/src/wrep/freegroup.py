"""Free groups, their endomorphisms, and the integral group ring.

Letters are nonzero signed integers: ``k`` stands for ``x_k`` and ``-k``
for ``x_k^{-1}``.  A :class:`FreeWord` is always freely reduced.

The group ring part carries the coordinate expansion of the augmentation
ideal: every ``w - 1`` is written uniquely as ``sum_j (x_j - 1) * c_j`` with
*right* coefficients ``c_j`` in Z[F_n] (a Fox-derivative style expansion).
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

__all__ = [
    "FreeWord",
    "FreeEndo",
    "GroupRingElem",
    "ideal_coordinates",
    "coordinates_to_element",
]


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


class FreeWord:
    __slots__ = ("rank", "letters")

    def __init__(self, rank: int, letters: Iterable[int] = ()):
        letters = tuple(int(a) for a in letters)
        for a in letters:
            if a == 0 or abs(a) > rank:
                raise ValueError(f"letter {a} out of range for rank {rank}")
        self.rank = rank
        self.letters = _reduce(letters)

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank)

    @classmethod
    def gen(cls, rank: int, k: int, sign: int = 1) -> "FreeWord":
        return cls(rank, (k * sign,))

    @classmethod
    def parse(cls, text: str, rank: int) -> "FreeWord":
        """Parse ``"x1 x2^-1 x1"``; the empty string (or ``"1"``) is the identity."""
        letters = []
        for tok in text.split():
            if tok == "1":
                continue
            m = re.fullmatch(r"x(\d+)(?:\^(-?\d+))?", tok)
            if not m:
                raise ValueError(f"bad free-group token {tok!r}")
            k, p = int(m.group(1)), int(m.group(2) or 1)
            letters.extend([k if p > 0 else -k] * abs(p))
        return cls(rank, letters)

    def _check(self, other: "FreeWord"):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        self._check(other)
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, (-a for a in reversed(self.letters)))

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        return FreeWord(self.rank, base.letters * abs(k))

    def __len__(self):
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sum(self, k: int | None = None) -> int:
        if k is None:
            return sum(1 if a > 0 else -1 for a in self.letters)
        return sum((1 if a > 0 else -1) for a in self.letters if abs(a) == k)

    def conjugate_of_generator(self) -> tuple[int, "FreeWord"] | None:
        """If this word is syntactically ``u^{-1} x_k u``, return ``(k, u)``."""
        n = len(self.letters)
        if n % 2 == 0:
            return None
        m = n // 2
        mid = self.letters[m]
        head, tail = self.letters[:m], self.letters[m + 1:]
        if mid < 0 or tuple(-a for a in reversed(tail)) != head:
            return None
        return mid, FreeWord(self.rank, tail)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self):
        return hash((self.rank, self.letters))

    def __lt__(self, other: "FreeWord"):
        return (len(self.letters), self.letters) < (len(other.letters), other.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in self.letters)

    def __repr__(self):
        return f"FreeWord({self.rank}, {str(self)!r})"

    def to_json(self) -> dict:
        return {"rank": self.rank, "letters": [[abs(a), 1 if a > 0 else -1] for a in self.letters]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "FreeWord":
        return cls(int(obj["rank"]), [int(k) * int(s) for k, s in obj["letters"]])


class FreeEndo:
    """Endomorphism of F_n determined by the images of x_1..x_n."""

    __slots__ = ("rank", "images")

    def __init__(self, rank: int, images: Sequence[FreeWord]):
        images = tuple(images)
        if len(images) != rank:
            raise ValueError(f"need {rank} images, got {len(images)}")
        for w in images:
            if w.rank != rank:
                raise ValueError("image rank differs from endomorphism rank")
        self.rank = rank
        self.images = images

    @classmethod
    def identity(cls, rank: int) -> "FreeEndo":
        return cls(rank, [FreeWord.gen(rank, k) for k in range(1, rank + 1)])

    @classmethod
    def from_assignment(cls, rank: int, assignment: Mapping[int, Iterable[int]]) -> "FreeEndo":
        """Images given as letter tuples for some generators; the rest fixed."""
        imgs = []
        for k in range(1, rank + 1):
            imgs.append(FreeWord(rank, assignment[k]) if k in assignment else FreeWord.gen(rank, k))
        return cls(rank, imgs)

    def __call__(self, w: FreeWord) -> FreeWord:
        if w.rank != self.rank:
            raise ValueError(f"rank mismatch: endomorphism {self.rank}, word {w.rank}")
        out: list[int] = []
        for a in w.letters:
            img = self.images[abs(a) - 1].letters
            out.extend(img if a > 0 else (-b for b in reversed(img)))
        return FreeWord(self.rank, out)

    def compose(self, other: "FreeEndo") -> "FreeEndo":
        """``self ∘ other``: apply ``other`` first."""
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return FreeEndo(self.rank, [self(w) for w in other.images])

    def __matmul__(self, other: "FreeEndo") -> "FreeEndo":
        return self.compose(other)

    def image(self, k: int) -> FreeWord:
        return self.images[k - 1]

    def is_identity(self) -> bool:
        return all(w.letters == (k,) for k, w in enumerate(self.images, 1))

    def __eq__(self, other):
        if not isinstance(other, FreeEndo):
            return NotImplemented
        return self.rank == other.rank and self.images == other.images

    def __hash__(self):
        return hash((self.rank, self.images))

    def __str__(self):
        return ", ".join(f"x{k} -> {w}" for k, w in enumerate(self.images, 1))

    def __repr__(self):
        return f"FreeEndo({self})"


class GroupRingElem:
    """Finite integer combination of reduced words of F_n."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[FreeWord, int] | None = None):
        clean = {}
        for w, c in (terms or {}).items():
            if w.rank != rank:
                raise ValueError("term rank differs from ring rank")
            if c:
                clean[w] = int(c)
        self.rank = rank
        self.terms = clean

    @classmethod
    def of(cls, w: FreeWord, c: int = 1) -> "GroupRingElem":
        return cls(w.rank, {w: c})

    @classmethod
    def const(cls, rank: int, c: int) -> "GroupRingElem":
        return cls(rank, {FreeWord.identity(rank): c})

    def _coerce(self, other) -> "GroupRingElem":
        if isinstance(other, GroupRingElem):
            if other.rank != self.rank:
                raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
            return other
        if isinstance(other, FreeWord):
            return self._coerce(GroupRingElem.of(other))
        if isinstance(other, int):
            return GroupRingElem.const(self.rank, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElem(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElem(self.rank, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[FreeWord, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                out[w] = out.get(w, 0) + c1 * c2
        return GroupRingElem(self.rank, out)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def augmentation(self) -> int:
        return sum(self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, FreeWord)):
            other = self._coerce(other)
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            body = "" if w.is_identity() else str(w)
            if not body:
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}*({body})"
            parts.append(("-" if c < 0 else "+", s))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return out + "".join(f" {sg} {s}" for sg, s in parts[1:])

    def __repr__(self):
        return f"GroupRingElem({self})"


def ideal_coordinates(w: FreeWord) -> list[GroupRingElem]:
    """Right coefficients ``c_1..c_n`` with ``w - 1 = sum_j (x_j - 1) c_j``.

    Built letter by letter from the cocycle rule
    ``coords(u x) = coords(u) x + coords(x)``, using ``coords(x_j) = e_j``
    and ``coords(x_j^{-1}) = -e_j x_j^{-1}``.
    """
    n = w.rank
    coords: list[dict[FreeWord, int]] = [{} for _ in range(n)]
    for a in w.letters:
        x = FreeWord(n, (a,))
        shifted = []
        for c in coords:
            nc: dict[FreeWord, int] = {}
            for u, k in c.items():
                v = u * x
                nc[v] = nc.get(v, 0) + k
            shifted.append(nc)
        j = abs(a) - 1
        extra = FreeWord.identity(n) if a > 0 else x
        shifted[j][extra] = shifted[j].get(extra, 0) + (1 if a > 0 else -1)
        coords = shifted
    return [GroupRingElem(n, c) for c in coords]


def coordinates_to_element(coords: Sequence[GroupRingElem]) -> GroupRingElem:
    """Evaluate ``sum_j (x_j - 1) c_j``."""
    n = len(coords)
    total = GroupRingElem(n)
    for j, c in enumerate(coords, 1):
        total = total + (GroupRingElem.of(FreeWord.gen(n, j)) - 1) * c
    return total
