"""Welded braid words, their defining relations, and actions on free groups.

A :class:`WeldedWord` ``g_1 g_2 ... g_k`` denotes the composite
``g_1 ∘ g_2 ∘ ... ∘ g_k``: the rightmost generator acts first.  Text syntax
uses ``s<i>`` for sigma_i, ``S<i>`` for its inverse and ``t<i>`` for tau_i,
so ``"t1 s2 s1"`` is tau_1 ∘ sigma_2 ∘ sigma_1.

Equality of welded words is decided through the Artin action on F_n, which
is faithful; no rewriting system is involved.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .freegroup import FreeEndo, FreeWord
from .report import FAIL, PASS, RepReport

__all__ = [
    "WeldedGen",
    "WeldedWord",
    "Relation",
    "ActionSpec",
    "XiSpec",
    "ARTIN",
    "defining_relations",
    "act",
    "words_equal",
    "wada_extends",
    "action_extends",
    "shift",
    "xi_image",
    "check_cond1",
    "epsilon_endo",
    "epsilon_check",
]

SIGMA, SIGMA_INV, TAU = "s", "S", "t"
_INVERSE_KIND = {SIGMA: SIGMA_INV, SIGMA_INV: SIGMA, TAU: TAU}


class WeldedGen(NamedTuple):
    kind: str
    index: int

    def inverse(self) -> "WeldedGen":
        return WeldedGen(_INVERSE_KIND[self.kind], self.index)

    def __str__(self):
        return f"{self.kind}{self.index}"


class WeldedWord:
    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Iterable[WeldedGen | tuple[str, int]] = ()):
        gens = tuple(WeldedGen(*g) for g in gens)
        for g in gens:
            if g.kind not in _INVERSE_KIND:
                raise ValueError(f"unknown generator kind {g.kind!r}")
            if not 1 <= g.index <= n - 1:
                raise ValueError(f"generator {g} out of range for wB_{n}")
        self.n = n
        self.gens = gens

    @classmethod
    def parse(cls, text: str, n: int) -> "WeldedWord":
        gens = []
        for tok in text.replace(",", " ").split():
            m = re.fullmatch(r"([sSt])(\d+)", tok)
            if not m:
                raise ValueError(f"bad welded token {tok!r} (expected s<i>, S<i> or t<i>)")
            gens.append(WeldedGen(m.group(1), int(m.group(2))))
        return cls(n, gens)

    @classmethod
    def sigma(cls, n: int, i: int) -> "WeldedWord":
        return cls(n, [(SIGMA, i)])

    @classmethod
    def tau(cls, n: int, i: int) -> "WeldedWord":
        return cls(n, [(TAU, i)])

    def __mul__(self, other: "WeldedWord") -> "WeldedWord":
        if self.n != other.n:
            raise ValueError(f"group index mismatch: wB_{self.n} vs wB_{other.n}")
        return WeldedWord(self.n, self.gens + other.gens)

    def inverse(self) -> "WeldedWord":
        return WeldedWord(self.n, [g.inverse() for g in reversed(self.gens)])

    def normalized(self) -> "WeldedWord":
        """Cancel adjacent inverse pairs (including tau_i tau_i)."""
        out: list[WeldedGen] = []
        for g in self.gens:
            if out and out[-1] == g.inverse():
                out.pop()
            else:
                out.append(g)
        return WeldedWord(self.n, out)

    def sigma_exponent_sum(self) -> int:
        return sum(1 if g.kind == SIGMA else -1 for g in self.gens if g.kind != TAU)

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        # syntactic; use words_equal for equality in the group
        if not isinstance(other, WeldedWord):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return hash((self.n, self.gens))

    def __str__(self):
        return " ".join(map(str, self.gens)) if self.gens else "1"

    def __repr__(self):
        return f"WeldedWord({self.n}, {str(self)!r})"


class Relation(NamedTuple):
    family: int
    lhs: WeldedWord
    rhs: WeldedWord

    def __str__(self):
        return f"[{self.family}] {self.lhs} = {self.rhs}"


def defining_relations(n: int) -> list[Relation]:
    """All instances of the eight relation families of wB_n."""
    if n < 2:
        raise ValueError("wB_n needs n >= 2")
    W = lambda s: WeldedWord.parse(s, n)  # noqa: E731
    rels: list[Relation] = []
    idx = range(1, n)
    far = [(i, k) for i in idx for k in idx if k - i >= 2]
    rels += [Relation(1, W(f"s{i} s{k}"), W(f"s{k} s{i}")) for i, k in far]
    rels += [Relation(2, W(f"s{i} s{i+1} s{i}"), W(f"s{i+1} s{i} s{i+1}")) for i in range(1, n - 1)]
    rels += [Relation(3, W(f"t{i} t{k}"), W(f"t{k} t{i}")) for i, k in far]
    rels += [Relation(4, W(f"t{i} t{i+1} t{i}"), W(f"t{i+1} t{i} t{i+1}")) for i in range(1, n - 1)]
    rels += [Relation(5, W(f"t{i} t{i}"), W("")) for i in idx]
    rels += [Relation(6, W(f"s{i} t{k}"), W(f"t{k} s{i}")) for i in idx for k in idx if abs(i - k) >= 2]
    rels += [Relation(7, W(f"t{i} s{i+1} s{i}"), W(f"s{i+1} s{i} t{i+1}")) for i in range(1, n - 1)]
    rels += [Relation(8, W(f"s{i} t{i+1} t{i}"), W(f"t{i+1} t{i} s{i+1}")) for i in range(1, n - 1)]
    return rels


# Local actions on the pair (x_i, x_{i+1}): letters 1 -> x_i, 2 -> x_{i+1}.
def _pow(letter: int, k: int) -> tuple[int, ...]:
    return (letter if k >= 0 else -letter,) * abs(k)


def _local_images(kind: str, h: int):
    """(sigma images, sigma^{-1} images) as pairs of local letter tuples."""
    if kind in ("artin", "wada4"):
        k = 1 if kind == "artin" else h
        return (((2,), _pow(2, -k) + (1,) + _pow(2, k)),
                (_pow(1, k) + (2,) + _pow(1, -k), (1,)))
    table = {
        "wada1": (((1,), (2,)), ((1,), (2,))),
        "wada2": (((-2,), (1,)), ((2,), (-1,))),
        "wada3": (((-2,), (-1,)), ((-2,), (-1,))),
        "wada5": (((2,), (2, -1, 2)), ((1, -2, 1), (1,))),
        "wada6": (((-2,), (2, 1, 2)), ((1, 2, 1), (-1,))),
        "wada7": (((1, -2, -1), (1, 2, 2)), ((1, 1, 2), (-2, -1, 2))),
    }
    try:
        return table[kind]
    except KeyError:
        raise ValueError(f"unknown action kind {kind!r}") from None


def _localize(word: Sequence[int], i: int) -> tuple[int, ...]:
    return tuple((i if abs(a) == 1 else i + 1) * (1 if a > 0 else -1) for a in word)


@dataclass(frozen=True)
class ActionSpec:
    """An action of wB_n on F_n: Artin's, or a Wada local type with
    tau_i acting by the transposition of x_i and x_{i+1}."""

    kind: str = "artin"
    h: int = 1

    def __post_init__(self):
        sig, inv = _local_images(self.kind, self.h)
        f = FreeEndo(2, [FreeWord(2, w) for w in sig])
        g = FreeEndo(2, [FreeWord(2, w) for w in inv])
        if not (f @ g).is_identity() or not (g @ f).is_identity():
            raise ValueError(f"stored inverse for {self} does not invert the sigma image")

    @property
    def label(self) -> str:
        return f"wada4(h={self.h})" if self.kind == "wada4" else self.kind

    def generator_endo(self, gen: WeldedGen, n: int) -> FreeEndo:
        return _generator_endo(self.kind, self.h, gen.kind, gen.index, n)

    def __str__(self):
        return self.label


@lru_cache(maxsize=None)
def _generator_endo(kind: str, h: int, gkind: str, i: int, n: int) -> FreeEndo:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    if gkind == TAU:
        u, v = (2,), (1,)
    else:
        sig, inv = _local_images(kind, h)
        u, v = sig if gkind == SIGMA else inv
    return FreeEndo.from_assignment(n, {i: _localize(u, i), i + 1: _localize(v, i)})


ARTIN = ActionSpec("artin")


def act(spec: ActionSpec, w: WeldedWord) -> FreeEndo:
    result = FreeEndo.identity(w.n)
    for g in w.gens:
        result = result @ spec.generator_endo(g, w.n)
    return result


def words_equal(w1: WeldedWord, w2: WeldedWord) -> bool:
    if w1.n != w2.n:
        raise ValueError(f"group index mismatch: wB_{w1.n} vs wB_{w2.n}")
    return act(ARTIN, w1) == act(ARTIN, w2)


def action_extends(spec: ActionSpec, n: int) -> tuple[bool, list[Relation]]:
    """Whether ``spec`` respects every defining relation of wB_n."""
    bad = [r for r in defining_relations(n) if act(spec, r.lhs) != act(spec, r.rhs)]
    return not bad, bad


def wada_extends(wada_type: int, h: int = 1, n: int = 3) -> tuple[bool, list[Relation]]:
    """Whether Wada's type-k action, with tau acting by permutations, respects
    every defining relation of wB_n.  Returns the violated relations."""
    return action_extends(ActionSpec(f"wada{wada_type}", h), n)


def shift(w: WeldedWord) -> WeldedWord:
    """Stabilization wB_n -> wB_{n+1} adding a strand on the left."""
    return WeldedWord(w.n + 1, [(g.kind, g.index + 1) for g in w.gens])


@dataclass(frozen=True)
class XiSpec:
    """A morphism F_n -> wB_{n+1}: ``xi1`` or the trivial one."""

    kind: str = "xi1"
    n: int = 3

    def __post_init__(self):
        if self.kind not in ("xi1", "trivial"):
            raise ValueError(f"unknown xi kind {self.kind!r}")

    def generator_image(self, k: int) -> WeldedWord:
        m = self.n + 1
        if self.kind == "trivial":
            return WeldedWord(m)
        # (tau_{k-1} ... tau_1)^{-1} (sigma_k tau_k) (tau_{k-1} ... tau_1)
        conj = [(TAU, j) for j in range(k - 1, 0, -1)]
        left = [(TAU, j) for j in range(1, k)]
        return WeldedWord(m, left + [(SIGMA, k), (TAU, k)] + conj)


def xi_image(spec: XiSpec, w: FreeWord) -> WeldedWord:
    if w.rank != spec.n:
        raise ValueError(f"rank mismatch: xi defined on F_{spec.n}, word in F_{w.rank}")
    out = WeldedWord(spec.n + 1)
    for a in w.letters:
        g = spec.generator_image(abs(a))
        out = out * (g if a > 0 else g.inverse())
    return out


def check_cond1(alpha: ActionSpec, xi: XiSpec, n: int | None = None) -> RepReport:
    """Check ``shift(l) xi(x) = xi(alpha(l)(x)) shift(l)`` in wB_{n+1} for
    every generator l of wB_n and every x_k.

    Both sides are multiplicative in x, and the condition is closed under
    products and inverses in l, so generator pairs suffice.
    """
    n = xi.n if n is None else n
    if xi.n != n:
        raise ValueError(f"xi is defined on F_{xi.n}, not F_{n}")
    report = RepReport(check=f"cond1[{alpha.label}, {xi.kind}, n={n}]")
    checked = 0
    for i in range(1, n):
        for gk in (SIGMA, TAU):
            lam = WeldedWord(n, [(gk, i)])
            up = shift(lam)
            phi = act(alpha, lam)
            for k in range(1, n + 1):
                x = FreeWord.gen(n, k)
                lhs = up * xi_image(xi, x)
                rhs = xi_image(xi, phi(x)) * up
                checked += 1
                if not words_equal(lhs, rhs):
                    if report.counterexample is None:
                        report.counterexample = {"lambda": str(lam), "x": str(x),
                                                 "lhs": str(lhs), "rhs": str(rhs)}
                    report.fail(f"lambda={lam}, x={x}")
    report.details["pairs_checked"] = checked
    report.status = FAIL if report.violations else PASS
    return report


def epsilon_endo(n: int, i: int) -> FreeEndo:
    """epsilon_{i,1}: x_1 -> x_i^{-1} x_1 x_i, other generators fixed (rank n)."""
    return FreeEndo.from_assignment(n, {1: (-i, 1, i)})


def epsilon_check(n: int, i: int) -> bool:
    """Artin image of xi1(x_i) in wB_{n+1} is epsilon_{i+1,1}."""
    if not 1 <= i <= n:
        raise ValueError(f"i={i} out of range 1..{n}")
    w = xi_image(XiSpec("xi1", n), FreeWord.gen(n, i))
    return act(ARTIN, w) == epsilon_endo(n + 1, i + 1)
