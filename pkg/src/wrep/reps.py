"""Matrix representations of welded braid groups.

A :class:`MatrixRep` stores the images of sigma_1..sigma_{n-1} and
tau_1..tau_{n-1}; a word ``g_1 ... g_k`` is sent to the matrix product
``rho(g_1) ... rho(g_k)`` acting on column vectors.

Dual conventions
----------------
``dual_rep(rho, "transpose_inverse")`` is the literal ``M -> (M^{-1})^T``.
``dual_rep(rho, "transpose_inverse_bar")`` also inverts every variable.
The catalog's ``dual_burau`` and ``dual_reduced_burau`` use the second one,
which has local block ``[[1-t, t], [1, 0]]`` and is the convention under
which the iterated Long-Moody matrices come out as tabulated; ``dual_tym``
uses the first one (the barred variant of TYM is TYM itself).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from .report import INCONCLUSIVE, PASS, RepReport
from .ring import LaurentPoly, MatrixLP, NotAUnit, merge_contexts
from .welded import SIGMA, SIGMA_INV, Relation, WeldedGen, WeldedWord, defining_relations

__all__ = [
    "MatrixRep",
    "ClosureFailure",
    "CATALOG_NAMES",
    "make_catalog_rep",
    "lower_ones",
    "verify_rep",
    "dual_rep",
    "tensor_rep",
    "twist",
    "conjugate",
    "direct_sum",
    "coordinate_subquotient",
    "rep_certificates",
    "specialize_rep",
    "substitute_rep",
    "rep_diff",
    "burau_extension_report",
    "split_obstruction",
]


class ClosureFailure(ValueError):
    """A coordinate subspace is not invariant under some generator."""

    def __init__(self, generator: str, row: int, col: int, entry: LaurentPoly):
        self.generator, self.row, self.col, self.entry = generator, row, col, entry
        super().__init__(f"{generator}: entry ({row}, {col}) = {entry} leaves the subspace")


@dataclass(frozen=True)
class MatrixRep:
    name: str
    n: int
    vars: tuple[str, ...]
    sigma: tuple[MatrixLP, ...]
    tau: tuple[MatrixLP, ...]
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if len(self.sigma) != self.n - 1 or len(self.tau) != self.n - 1:
            raise ValueError(f"wB_{self.n} needs {self.n - 1} sigma and tau images")
        dims = {m.shape for m in self.sigma + self.tau}
        if len(dims) != 1 or not next(iter(dims))[0] == next(iter(dims))[1]:
            raise ValueError(f"images must be square of one size, got {dims}")
        if any(m.vars != self.vars for m in self.sigma + self.tau):
            raise ValueError("image contexts differ from the representation context")

    @property
    def dim(self) -> int:
        return self.sigma[0].rows

    @cached_property
    def sigma_inv(self) -> tuple[MatrixLP, ...]:
        return tuple(m.inverse() for m in self.sigma)

    def gen_image(self, g: WeldedGen) -> MatrixLP:
        if g.kind == SIGMA:
            return self.sigma[g.index - 1]
        if g.kind == SIGMA_INV:
            return self.sigma_inv[g.index - 1]
        return self.tau[g.index - 1]

    def image(self, w: WeldedWord) -> MatrixLP:
        if w.n != self.n:
            raise ValueError(f"word lives in wB_{w.n}, representation in wB_{self.n}")
        out = MatrixLP.identity(self.dim, self.vars)
        for g in w.gens:
            out = out @ self.gen_image(g)
        return out

    def generators(self):
        """Yield (label, matrix) for sigma_1.., tau_1.."""
        for i, m in enumerate(self.sigma, 1):
            yield f"sigma{i}", m
        for i, m in enumerate(self.tau, 1):
            yield f"tau{i}", m

    def map(self, f, name: str | None = None, vars: Sequence[str] | None = None) -> "MatrixRep":
        sig = tuple(f(m) for m in self.sigma)
        tau = tuple(f(m) for m in self.tau)
        return MatrixRep(name or self.name, self.n, tuple(vars) if vars else sig[0].vars, sig, tau)

    def lift(self, vars: Sequence[str]) -> "MatrixRep":
        return self.map(lambda m: m.lift(vars), vars=vars)

    def renamed(self, name: str) -> "MatrixRep":
        return MatrixRep(name, self.n, self.vars, self.sigma, self.tau, dict(self.meta))

    def same_matrices(self, other: "MatrixRep") -> bool:
        return self.n == other.n and self.sigma == other.sigma and self.tau == other.tau

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "dim": self.dim,
            "vars": list(self.vars),
            "sigma": [m.to_json() for m in self.sigma],
            "tau": [m.to_json() for m in self.tau],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "MatrixRep":
        sigma = tuple(MatrixLP.from_json(m) for m in obj["sigma"])
        tau = tuple(MatrixLP.from_json(m) for m in obj["tau"])
        return cls(obj["name"], int(obj["n"]), tuple(obj["vars"]), sigma, tau)


# -- catalog -----------------------------------------------------------------

CATALOG_NAMES = ("burau", "reduced_burau", "dual_burau", "dual_reduced_burau",
                 "tym", "dual_tym", "permutation", "onedim")


def _embed(block: Sequence[Sequence], pos: int, dim: int, vars) -> MatrixLP:
    """Id_pos ⊕ block ⊕ Id_rest, block entries given as polys or ints."""
    k = len(block)
    rows = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for a in range(k):
        for b in range(k):
            rows[pos + a][pos + b] = block[a][b]
    return MatrixLP(rows, vars)


def lower_ones(n: int, vars: Sequence[str]) -> MatrixLP:
    """The matrix r_n with r_{ij} = 1 for j <= i, else 0."""
    return MatrixLP([[1 if j <= i else 0 for j in range(n)] for i in range(n)], vars)


def make_catalog_rep(name: str, n: int, var: str = "t", vars: Sequence[str] | None = None,
                     r: LaurentPoly | None = None) -> MatrixRep:
    """Named representation of wB_n with parameter variable ``var``.

    ``vars`` is the variable context (default ``(var,)``); ``r`` is the
    scalar for ``onedim``.
    """
    vars = tuple(vars) if vars is not None else (var,)
    if name not in CATALOG_NAMES:
        raise ValueError(f"unknown representation {name!r}; choose from {', '.join(CATALOG_NAMES)}")
    if n < 2:
        raise ValueError("n must be at least 2")
    if name in ("reduced_burau", "dual_reduced_burau") and n < 3:
        raise ValueError("reduced Burau needs n >= 3")
    t = LaurentPoly.var(var, vars)
    swap = [[0, 1], [1, 0]]

    if name == "onedim":
        if r is None:
            raise ValueError("onedim needs r")
        r = r.lift(vars) if isinstance(r, LaurentPoly) else LaurentPoly.const(r, vars)
        if not r.is_unit():
            raise NotAUnit(f"onedim scalar {r} is not a unit")
        one = MatrixLP([[1]], vars)
        return MatrixRep(f"onedim({r})", n, vars, (MatrixLP([[r]], vars),) * (n - 1), (one,) * (n - 1))
    if name in ("burau", "tym", "permutation"):
        block = {"burau": [[0, t], [1, 1 - t]], "tym": [[0, 1], [t, 0]], "permutation": swap}[name]
        sig = tuple(_embed(block, i - 1, n, vars) for i in range(1, n))
        tau = tuple(_embed(swap, i - 1, n, vars) for i in range(1, n))
        label = name if name == "permutation" else f"{name}_{var}"
        return MatrixRep(f"{label}({n})", n, vars, sig, tau)
    if name == "reduced_burau":
        d = n - 1
        sig, tau = [], []
        for i in range(1, n):
            if i == 1:
                s, u, pos = [[-t, t], [0, 1]], [[-1, 1], [0, 1]], 0
            elif i == n - 1:
                s, u, pos = [[1, 0], [1, -t]], [[1, 0], [1, -1]], d - 2
            else:
                # the variant with t and 1 exchanged in the middle row breaks
                # the braid relation for n >= 4; this one is the restriction of
                # r_n Bur r_n^{-1}
                s, u, pos = [[1, 0, 0], [1, -t, t], [0, 0, 1]], [[1, 0, 0], [1, -1, 1], [0, 0, 1]], i - 2
            sig.append(_embed(s, pos, d, vars))
            tau.append(_embed(u, pos, d, vars))
        return MatrixRep(f"reduced_burau_{var}({n})", n, vars, tuple(sig), tuple(tau))
    if name == "dual_burau":
        return dual_rep(make_catalog_rep("burau", n, var, vars), "transpose_inverse_bar").renamed(f"dual_burau_{var}({n})")
    if name == "dual_reduced_burau":
        return dual_rep(make_catalog_rep("reduced_burau", n, var, vars), "transpose_inverse_bar").renamed(
            f"dual_reduced_burau_{var}({n})")
    # dual_tym
    return dual_rep(make_catalog_rep("tym", n, var, vars), "transpose_inverse").renamed(f"dual_tym_{var}({n})")


# -- verification -------------------------------------------------------------

def _relation_holds(args) -> bool:
    rho, rel = args
    return rho.image(rel.lhs) == rho.image(rel.rhs)


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("WREP_THREADS", "1")))
    except ValueError:
        return 1


def verify_rep(rho: MatrixRep, workers: int | None = None) -> list[Relation]:
    """Defining relations of wB_n that the matrices violate (empty = valid)."""
    rels = defining_relations(rho.n)
    workers = _default_workers() if workers is None else workers
    if workers > 1 and len(rels) > 8:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            oks = list(pool.map(_relation_holds, [(rho, r) for r in rels], chunksize=4))
    else:
        oks = [_relation_holds((rho, r)) for r in rels]
    return [r for r, ok in zip(rels, oks) if not ok]


# -- structural operations ----------------------------------------------------

DUAL_VARIANTS = ("transpose_inverse", "transpose_inverse_bar")


def dual_rep(rho: MatrixRep, variant: str = "transpose_inverse") -> MatrixRep:
    if variant not in DUAL_VARIANTS:
        raise ValueError(f"unknown dual variant {variant!r}")
    if variant == "transpose_inverse":
        f = MatrixLP.transpose_inverse
    else:
        def f(m):
            return m.transpose_inverse().bar()
    suffix = "*" if variant == "transpose_inverse" else "*bar"
    return rho.map(f, name=f"{rho.name}{suffix}")


def tensor_rep(r1: MatrixRep, r2: MatrixRep) -> MatrixRep:
    if r1.n != r2.n:
        raise ValueError(f"group index mismatch: {r1.n} vs {r2.n}")
    vars = merge_contexts(r1.vars, r2.vars)
    a, b = r1.lift(vars), r2.lift(vars)
    sig = tuple(x.kron(y) for x, y in zip(a.sigma, b.sigma))
    tau = tuple(x.kron(y) for x, y in zip(a.tau, b.tau))
    return MatrixRep(f"({r1.name} ⊗ {r2.name})", r1.n, vars, sig, tau)


def twist(r: LaurentPoly | str, rho: MatrixRep) -> MatrixRep:
    """The representation r·rho: sigma images scaled by the unit r."""
    if isinstance(r, str):
        r = LaurentPoly.var(r, merge_contexts(rho.vars, (r,)))
    vars = merge_contexts(rho.vars, r.vars)
    r = r.lift(vars)
    if not r.is_unit():
        raise NotAUnit(f"twist scalar {r} is not a unit")
    base = rho.lift(vars)
    return MatrixRep(f"{r}·{rho.name}", rho.n, vars, tuple(m.scale(r) for m in base.sigma), base.tau)


def conjugate(rho: MatrixRep, m: MatrixLP) -> MatrixRep:
    """g -> M rho(g) M^{-1}."""
    if m.shape != (rho.dim, rho.dim):
        raise ValueError(f"conjugating matrix is {m.shape}, representation has dim {rho.dim}")
    vars = merge_contexts(rho.vars, m.vars)
    m = m.lift(vars)
    minv = m.inverse()
    return rho.lift(vars).map(lambda x: m @ x @ minv, name=f"conj({rho.name})")


def direct_sum(r1: MatrixRep, r2: MatrixRep) -> MatrixRep:
    if r1.n != r2.n:
        raise ValueError(f"group index mismatch: {r1.n} vs {r2.n}")
    vars = merge_contexts(r1.vars, r2.vars)
    a, b = r1.lift(vars), r2.lift(vars)
    sig = tuple(MatrixLP.block_diag(x, y) for x, y in zip(a.sigma, b.sigma))
    tau = tuple(MatrixLP.block_diag(x, y) for x, y in zip(a.tau, b.tau))
    return MatrixRep(f"({r1.name} ⊕ {r2.name})", r1.n, vars, sig, tau)


def coordinate_subquotient(rho: MatrixRep, order: Sequence[int] | MatrixLP, split: int
                           ) -> tuple[MatrixRep | None, MatrixRep | None]:
    """Restrict to and quotient by a coordinate subspace.

    ``order`` lists the original (0-based) basis indices in their new
    sequence, or is the permutation matrix P doing that reordering.  The
    first ``split`` reordered coordinates must span an invariant subspace,
    i.e. every reordered image has a zero lower-left block.  Returns
    ``(sub, quotient)``; either is None when it would be 0-dimensional.
    """
    if isinstance(order, MatrixLP):
        order = [row.index(next(x for x in row if not x.is_zero())) for row in order.entries]
    order = list(order)
    d = rho.dim
    if sorted(order) != list(range(d)):
        raise ValueError(f"{order} is not a permutation of 0..{d - 1}")
    if not 0 <= split <= d:
        raise ValueError(f"split {split} out of range for dim {d}")
    head, tail = order[:split], order[split:]
    for label, m in rho.generators():
        for a, i in enumerate(tail):
            for b, j in enumerate(head):
                if not m.entries[i][j].is_zero():
                    raise ClosureFailure(label, split + a, b, m.entries[i][j])
    sub = rho.map(lambda m: m.submatrix(head, head), name=f"sub({rho.name})") if head else None
    quot = rho.map(lambda m: m.submatrix(tail, tail), name=f"quot({rho.name})") if tail else None
    return sub, quot


def rep_diff(r1: MatrixRep, r2: MatrixRep) -> list[str]:
    """Human-readable list of entrywise disagreements (empty = identical)."""
    if r1.n != r2.n or r1.dim != r2.dim:
        return [f"shape mismatch: wB_{r1.n} dim {r1.dim} vs wB_{r2.n} dim {r2.dim}"]
    vars = merge_contexts(r1.vars, r2.vars)
    a, b = r1.lift(vars), r2.lift(vars)
    out = []
    for (label, x), (_, y) in zip(a.generators(), b.generators()):
        for i, j, p, q in x.diff(y):
            out.append(f"{label}[{i + 1},{j + 1}]: {p} != {q}")
    return out


def _gen_from_label(label: str) -> WeldedGen:
    kind = SIGMA if label.startswith("sigma") else "t"
    return WeldedGen(kind, int(label.lstrip("sigmatau")))


def rep_certificates(r1: MatrixRep, r2: MatrixRep, pairs: bool = True) -> RepReport:
    """Trace/determinant comparison per generator, then (if nothing separates)
    traces of all products of two generators.

    Differing invariants certify non-equivalence; identical matrices
    certify equality; anything else is inconclusive.
    """
    if r1.n != r2.n or r1.dim != r2.dim:
        raise ValueError("representations must share n and dimension")
    vars = merge_contexts(r1.vars, r2.vars)
    a, b = r1.lift(vars), r2.lift(vars)
    report = RepReport(check=f"certificates[{r1.name} vs {r2.name}]", status=INCONCLUSIVE)
    separating = []
    for (label, x), (_, y) in zip(a.generators(), b.generators()):
        tr = (x.trace(), y.trace())
        dt = (x.det(), y.det())
        report.certificates[label] = {
            "trace": [str(tr[0]), str(tr[1])],
            "det": [str(dt[0]), str(dt[1])],
        }
        if tr[0] != tr[1]:
            separating.append(("trace", label))
        if dt[0] != dt[1]:
            separating.append(("det", label))
    if pairs and not separating:
        gens = list(a.generators())
        for (la, x), (lb, y) in ((g, h) for g in gens for h in gens):
            xa = x @ y
            xb = b.gen_image(_gen_from_label(la)) @ b.gen_image(_gen_from_label(lb))
            if xa.trace() != xb.trace():
                word = f"{la}*{lb}"
                report.certificates[word] = {"trace": [str(xa.trace()), str(xb.trace())]}
                separating.append(("trace", word))
                break
    if separating:
        report.status = PASS
        report.verdicts["equivalent"] = False
        report.verdicts["separating_invariants"] = [f"{k}@{g}" for k, g in separating]
    elif a.same_matrices(b):
        report.status = PASS
        report.verdicts["equivalent"] = True
        report.verdicts["reason"] = "identical matrices"
    else:
        report.verdicts["equivalent"] = "unknown"
    return report


def substitute_rep(rho: MatrixRep, assignment: Mapping, vars: Sequence[str] | None = None,
                   name: str | None = None) -> MatrixRep:
    """Entrywise unit substitution, optionally into a new context."""
    return rho.map(lambda m: m.subs(assignment, vars), name=name or f"{rho.name}|{dict(assignment)}",
                   vars=vars)


def specialize_rep(rho: MatrixRep, assignment: Mapping) -> MatrixRep:
    return substitute_rep(rho, assignment)


def split_obstruction(rho: MatrixRep, side: str) -> dict | None:
    """Witness that ``rho`` fixes no nonzero vector (side="column") or
    functional (side="row") built from the all-ones vector.

    When every tau_i is the transposition of coordinates i, i+1, the
    tau-invariant vectors are the multiples of the all-ones vector, so it
    suffices that some sigma moves it.  Returns None if no witness is found.
    """
    n, d = rho.n, rho.dim
    if d != n:
        return None
    perm = make_catalog_rep("permutation", n, vars=rho.vars)
    if list(rho.tau) != list(perm.tau):
        return None
    ones = MatrixLP([[1]] * d, rho.vars)
    for i, m in enumerate(rho.sigma, start=1):
        img = (m @ ones) if side == "column" else (m.T @ ones)
        if img != ones:
            return {"generator": f"sigma{i}", "side": side,
                    "image_of_ones": [str(x[0]) for x in img.entries]}
    return None


def burau_extension_report(n: int, dual: bool = False) -> RepReport:
    """Burau as an extension of the trivial rep by reduced Burau (via r_n),
    or the dual statement via r_n^{-T}; also checks the extension is not split."""
    if n < 3:
        raise ValueError("reduced Burau needs n >= 3")
    r = lower_ones(n, ("t",))
    if dual:
        rho = make_catalog_rep("dual_burau", n)
        conj = conjugate(rho, r.inverse().T)
        order, split = [n - 1] + list(range(n - 1)), 1
        want_sub, want_quot = None, make_catalog_rep("dual_reduced_burau", n)
        side = "row"
    else:
        rho = make_catalog_rep("burau", n)
        conj = conjugate(rho, r)
        order, split = list(range(n)), n - 1
        want_sub, want_quot = make_catalog_rep("reduced_burau", n), None
        side = "column"
    report = RepReport(check=f"extension[{rho.name}]")
    sub, quot = coordinate_subquotient(conj, order, split)
    one = make_catalog_rep("onedim", n, r=LaurentPoly.one(("t",)))
    if dual:
        report.verdicts["sub_is_trivial"] = not rep_diff(sub, one)
        report.verdicts["quotient_is_reduced"] = not rep_diff(quot, want_quot)
    else:
        report.verdicts["sub_is_reduced"] = not rep_diff(sub, want_sub)
        report.verdicts["quotient_is_trivial"] = not rep_diff(quot, one)
    for key, ok in list(report.verdicts.items()):
        if not ok:
            report.fail(key.replace("_", " ") + " fails")
    witness = split_obstruction(rho, side)
    report.verdicts["split"] = False if witness else "unknown"
    if witness:
        report.certificates["non_split"] = witness
    return report
