"""Exact multivariate Laurent polynomials over the integers and small dense
matrices over them.

A :class:`LaurentPoly` lives in a fixed *variable context*, an ordered tuple
of variable names such as ``("t",)`` or ``("t", "q")``.  Arithmetic between
polynomials of different contexts raises :class:`ContextError`; use
:meth:`LaurentPoly.lift` to move a polynomial into a larger context.

Everything here is immutable.
"""

from __future__ import annotations

import ast
from functools import reduce
from typing import Iterable, Mapping, Sequence

__all__ = [
    "ContextError",
    "NotAUnit",
    "LaurentPoly",
    "MatrixLP",
    "merge_contexts",
]


class ContextError(ValueError):
    """Operands live in different variable contexts."""


class NotAUnit(ArithmeticError):
    """A value that had to be invertible in the Laurent ring is not."""


def merge_contexts(*ctxs: Sequence[str]) -> tuple[str, ...]:
    """Union of variable contexts, keeping first-seen order."""
    out: list[str] = []
    for ctx in ctxs:
        for v in ctx:
            if v not in out:
                out.append(v)
    return tuple(out)


class LaurentPoly:
    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple[int, ...], int] | None = None):
        self.vars = tuple(vars)
        nv = len(self.vars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nv:
                raise ValueError(f"exponent vector {e} does not match context {self.vars}")
            if c:
                clean[e] = int(c)
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int, vars: Sequence[str]) -> "LaurentPoly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "LaurentPoly":
        return cls(vars)

    @classmethod
    def one(cls, vars: Sequence[str]) -> "LaurentPoly":
        return cls.const(1, vars)

    @classmethod
    def var(cls, name: str, vars: Sequence[str] | None = None) -> "LaurentPoly":
        vars = tuple(vars) if vars is not None else (name,)
        if name not in vars:
            raise ContextError(f"{name!r} not in context {vars}")
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], vars: Sequence[str], coeff: int = 1) -> "LaurentPoly":
        vars = tuple(vars)
        e = [0] * len(vars)
        for name, k in exps.items():
            if name not in vars:
                raise ContextError(f"{name!r} not in context {vars}")
            e[vars.index(name)] = k
        return cls(vars, {tuple(e): coeff})

    @classmethod
    def parse(cls, text: str, vars: Sequence[str]) -> "LaurentPoly":
        """Parse an expression such as ``"q*t^-1*(1-t-t^2+t^3)"``.

        Accepts integers, variable names of the context, ``+ - *``, and
        ``^``/``**`` with integer exponents (negative only on units).
        """
        vars = tuple(vars)
        try:
            tree = ast.parse(text.replace("^", "**"), mode="eval")
        except SyntaxError as exc:
            raise ValueError(f"cannot parse polynomial {text!r}") from exc

        def ev(node):
            if isinstance(node, ast.Expression):
                return ev(node.body)
            if isinstance(node, ast.Constant) and isinstance(node.value, int):
                return cls.const(node.value, vars)
            if isinstance(node, ast.Name):
                return cls.var(node.id, vars)
            if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
                v = ev(node.operand)
                return -v if isinstance(node.op, ast.USub) else v
            if isinstance(node, ast.BinOp):
                if isinstance(node.op, ast.Pow):
                    k = ev(node.right)
                    if not k.is_constant():
                        raise ValueError(f"non-integer exponent in {text!r}")
                    return ev(node.left) ** k.constant_term()
                a, b = ev(node.left), ev(node.right)
                if isinstance(node.op, ast.Add):
                    return a + b
                if isinstance(node.op, ast.Sub):
                    return a - b
                if isinstance(node.op, ast.Mult):
                    return a * b
            raise ValueError(f"unsupported syntax in polynomial {text!r}")

        return ev(tree)

    # -- basic queries ------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        z = (0,) * len(self.vars)
        return all(e == z for e in self._terms)

    def constant_term(self) -> int:
        return self._terms.get((0,) * len(self.vars), 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of Z[x^{±1}, ...] are exactly ±(monomial)."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def augmentation(self) -> int:
        """Value at all variables = 1."""
        return sum(self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    # -- context handling ---------------------------------------------------

    def lift(self, vars: Sequence[str]) -> "LaurentPoly":
        """Re-express in a context containing every current variable."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        missing = [v for v in self.vars if v not in vars]
        if missing:
            raise ContextError(f"cannot lift {self.vars} into {vars}: missing {missing}")
        pos = [vars.index(v) for v in self.vars]
        out = {}
        for e, c in self._terms.items():
            f = [0] * len(vars)
            for p, k in zip(pos, e):
                f[p] = k
            out[tuple(f)] = c
        return LaurentPoly(vars, out)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise ContextError(f"context mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.vars)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vars, {e: -c for e, c in self._terms.items()})

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
        if not self._terms or not other._terms:
            return LaurentPoly(self.vars)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a unit")
        (e, c), = self._terms.items()
        return LaurentPoly(self.vars, {tuple(-x for x in e): c})

    def exact_div(self, unit: "LaurentPoly") -> "LaurentPoly":
        return self * self._coerce(unit).inverse()

    def bar(self) -> "LaurentPoly":
        """Involution sending every variable to its inverse."""
        return LaurentPoly(self.vars, {tuple(-x for x in e): c for e, c in self._terms.items()})

    def subs(self, assignment: Mapping[str, "LaurentPoly | int"],
             vars: Sequence[str] | None = None) -> "LaurentPoly":
        """Substitute units for variables.

        ``assignment`` values must be units of the target context ``vars``
        (default: this polynomial's context); unassigned variables are
        kept and must exist in the target context.
        """
        target = tuple(vars) if vars is not None else self.vars
        images = []
        for v in self.vars:
            if v in assignment:
                val = assignment[v]
                val = LaurentPoly.const(val, target) if isinstance(val, int) else val
                if val.vars != target:
                    raise ContextError(f"value for {v!r} is in {val.vars}, expected {target}")
                if not val.is_unit():
                    raise NotAUnit(f"cannot substitute non-unit {val} for {v!r}")
                images.append(val)
            else:
                images.append(LaurentPoly.var(v, target))
        mono = [next(iter(im._terms.items())) for im in images]
        out: dict[tuple[int, ...], int] = {}
        for e, c in self._terms.items():
            coeff = c
            exp = [0] * len(target)
            for k, (me, mc) in zip(e, mono):
                if k:
                    coeff *= mc ** abs(k)
                    for p, x in enumerate(me):
                        exp[p] += k * x
            exp = tuple(exp)
            out[exp] = out.get(exp, 0) + coeff
        return LaurentPoly(target, out)

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def _ordered(self):
        # low total degree first, then by exponent vector: "1 - t + t^2"
        return sorted(self._terms.items(), key=lambda ec: (sum(ec[0]), tuple(-x for x in ec[0])))

    def _render(self, latex: bool) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self._ordered():
            factors = []
            for v, k in zip(self.vars, e):
                if k == 0:
                    continue
                if k == 1:
                    factors.append(v)
                elif latex:
                    factors.append(f"{v}^{{{k}}}")
                else:
                    factors.append(f"{v}^{k}")
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not factors:
                body = str(a)
            elif a == 1:
                body = ("" if latex else "*").join(factors)
            else:
                body = str(a) + ("" if latex else "*") + ("" if latex else "*").join(factors)
            pieces.append((sign, body))
        sign0, body0 = pieces[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in pieces[1:]:
            out += ("-" if sign == "-" else "+") + body if latex else f" {sign} {body}"
        return out

    def __str__(self):
        return self._render(latex=False)

    def latex(self) -> str:
        return self._render(latex=True)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r}, vars={self.vars})"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"c": str(c), "e": list(e)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "LaurentPoly":
        try:
            vars = obj["vars"]
            terms = {}
            for t in obj["terms"]:
                e = tuple(t["e"])
                if e in terms:
                    raise ValueError(f"duplicate exponent {e}")
                terms[e] = int(t["c"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed polynomial JSON: {obj!r}") from exc
        return cls(vars, terms)


class MatrixLP:
    """Dense matrix of :class:`LaurentPoly` entries sharing one context."""

    __slots__ = ("rows", "cols", "vars", "entries", "_hash")

    def __init__(self, entries: Sequence[Sequence[LaurentPoly | int]], vars: Sequence[str] | None = None):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must have positive dimensions")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        if vars is None:
            found = [x.vars for r in rows for x in r if isinstance(x, LaurentPoly)]
            if not found:
                raise ValueError("cannot infer variable context from integer entries")
            vars = found[0]
        vars = tuple(vars)
        out = []
        for r in rows:
            row = []
            for x in r:
                if isinstance(x, int):
                    x = LaurentPoly.const(x, vars)
                elif x.vars != vars:
                    raise ContextError(f"entry context {x.vars} differs from matrix context {vars}")
                row.append(x)
            out.append(tuple(row))
        self.rows = len(out)
        self.cols = ncols
        self.vars = vars
        self.entries = tuple(out)
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, n: int, vars: Sequence[str]) -> "MatrixLP":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], vars)

    @classmethod
    def zeros(cls, rows: int, cols: int, vars: Sequence[str]) -> "MatrixLP":
        return cls([[0] * cols for _ in range(rows)], vars)

    @classmethod
    def permutation(cls, order: Sequence[int], vars: Sequence[str]) -> "MatrixLP":
        """Matrix P with ``P[a][order[a]] = 1``, so that ``P M P^{-1}``
        lists the basis vectors of M in the sequence ``order``."""
        n = len(order)
        if sorted(order) != list(range(n)):
            raise ValueError(f"{order} is not a permutation of 0..{n - 1}")
        return cls([[1 if order[a] == b else 0 for b in range(n)] for a in range(n)], vars)

    @classmethod
    def parse(cls, rows: Sequence[Sequence[str]], vars: Sequence[str]) -> "MatrixLP":
        return cls([[LaurentPoly.parse(x, vars) for x in r] for r in rows], vars)

    @classmethod
    def block_diag(cls, *blocks: "MatrixLP") -> "MatrixLP":
        vars = blocks[0].vars
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[LaurentPoly.zero(vars)] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            if b.vars != vars:
                raise ContextError("block contexts differ")
            for i in range(b.rows):
                out[r0 + i][c0:c0 + b.cols] = b.entries[i]
            r0 += b.rows
            c0 += b.cols
        return cls(out, vars)

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "MatrixLP":
        return MatrixLP([[self.entries[i][j] for j in cols] for i in rows], self.vars)

    def map(self, f) -> "MatrixLP":
        out = [[f(x) for x in r] for r in self.entries]
        vars = out[0][0].vars
        return MatrixLP(out, vars)

    def lift(self, vars: Sequence[str]) -> "MatrixLP":
        return MatrixLP([[x.lift(vars) for x in r] for r in self.entries], vars)

    def subs(self, assignment, vars=None) -> "MatrixLP":
        return self.map(lambda x: x.subs(assignment, vars))

    def bar(self) -> "MatrixLP":
        return self.map(LaurentPoly.bar)

    def transpose(self) -> "MatrixLP":
        return MatrixLP([list(c) for c in zip(*self.entries)], self.vars)

    @property
    def T(self) -> "MatrixLP":
        return self.transpose()

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.entries for x in r)

    def is_identity(self) -> bool:
        return self.is_square() and all(
            x == (1 if i == j else 0) for i, r in enumerate(self.entries) for j, x in enumerate(r))

    def nonzero_positions(self) -> list[tuple[int, int]]:
        return [(i, j) for i, r in enumerate(self.entries) for j, x in enumerate(r) if not x.is_zero()]

    # -- arithmetic ---------------------------------------------------------

    def _check_ctx(self, other: "MatrixLP"):
        if self.vars != other.vars:
            raise ContextError(f"context mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other: "MatrixLP") -> "MatrixLP":
        self._check_ctx(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return MatrixLP([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.vars)

    def __neg__(self) -> "MatrixLP":
        return MatrixLP([[-a for a in r] for r in self.entries], self.vars)

    def __sub__(self, other: "MatrixLP") -> "MatrixLP":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "MatrixLP":
        if isinstance(c, int):
            c = LaurentPoly.const(c, self.vars)
        return MatrixLP([[c * a for a in r] for r in self.entries], self.vars)

    def __matmul__(self, other: "MatrixLP") -> "MatrixLP":
        self._check_ctx(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = LaurentPoly.zero(self.vars)
        ocols = list(zip(*other.entries))
        out = []
        for r in self.entries:
            nz = [(k, a) for k, a in enumerate(r) if not a.is_zero()]
            row = []
            for col in ocols:
                acc = zero
                for k, a in nz:
                    b = col[k]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return MatrixLP(out, self.vars)

    def kron(self, other: "MatrixLP") -> "MatrixLP":
        """Kronecker product, row-major block order: block (a, b) is
        ``self[a, b] * other``."""
        self._check_ctx(other)
        out = []
        for ra in self.entries:
            for rb in other.entries:
                out.append([x * y for x in ra for y in rb])
        return MatrixLP(out, self.vars)

    def trace(self) -> LaurentPoly:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        return reduce(lambda a, b: a + b, (self.entries[i][i] for i in range(self.rows)))

    def charpoly(self) -> list[LaurentPoly]:
        """Coefficients ``[c_0=1, c_1, ..., c_n]`` of ``det(xI - M)``
        (highest power first), by Berkowitz's division-free algorithm."""
        if not self.is_square():
            raise ValueError("characteristic polynomial of a non-square matrix")
        return _berkowitz([list(r) for r in self.entries], self.vars)

    def det(self) -> LaurentPoly:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        if self.rows < 5:
            return _cofactor_det([list(r) for r in self.entries], self.vars)
        c = self.charpoly()[-1]
        return c if self.rows % 2 == 0 else -c

    def inverse(self) -> "MatrixLP":
        """Exact inverse; raises :class:`NotAUnit` unless det is ±monomial.

        The adjugate comes from Cayley-Hamilton: with charpoly coefficients
        c_k, ``adj(M) = (-1)^(n-1) (M^(n-1) + c_1 M^(n-2) + ... + c_(n-1) I)``.
        """
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        c = self.charpoly()
        det = c[-1] if n % 2 == 0 else -c[-1]
        if not det.is_unit():
            raise NotAUnit(f"determinant {det} is not a unit")
        ident = MatrixLP.identity(n, self.vars)
        b = ident
        for k in range(1, n):
            b = self @ b + ident.scale(c[k])
        adj = b if n % 2 == 1 else -b
        return adj.scale(det.inverse())

    def transpose_inverse(self) -> "MatrixLP":
        return self.inverse().transpose()

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MatrixLP):
            return NotImplemented
        return self.vars == other.vars and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, self.entries))
        return self._hash

    def diff(self, other: "MatrixLP") -> list[tuple[int, int, LaurentPoly, LaurentPoly]]:
        """Entries where the two matrices disagree, as (i, j, mine, theirs)."""
        self._check_ctx(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return [(i, j, a, b)
                for i, (r, s) in enumerate(zip(self.entries, other.entries))
                for j, (a, b) in enumerate(zip(r, s)) if a != b]

    # -- rendering / serialization ------------------------------------------

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.entries]
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + "  ".join(c.rjust(w) for c in r) + "]" for r in cells)

    def __repr__(self):
        return f"MatrixLP({self.rows}x{self.cols}, vars={self.vars})"

    def latex(self) -> str:
        body = "\\\\".join(" & ".join(x.latex() for x in r) for r in self.entries)
        return "\\begin{pmatrix}" + body + "\\end{pmatrix}"

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[x.to_json() for x in r] for r in self.entries],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "MatrixLP":
        try:
            rows, cols = int(obj["rows"]), int(obj["cols"])
            entries = [[LaurentPoly.from_json(x) for x in r] for r in obj["entries"]]
        except (KeyError, TypeError) as exc:
            raise ValueError("malformed matrix JSON") from exc
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError(f"matrix JSON declares {rows}x{cols} but entries disagree")
        ctxs = {x.vars for r in entries for x in r}
        if len(ctxs) != 1:
            raise ValueError(f"matrix JSON mixes variable contexts {sorted(ctxs)}")
        return cls(entries, ctxs.pop())


def _cofactor_det(m: list[list[LaurentPoly]], vars) -> LaurentPoly:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = LaurentPoly.zero(vars)
    for j, a in enumerate(m[0]):
        if a.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in m[1:]]
        term = a * _cofactor_det(minor, vars)
        total = total - term if j % 2 else total + term
    return total


def _matvec(a: list[list[LaurentPoly]], v: list[LaurentPoly], zero: LaurentPoly) -> list[LaurentPoly]:
    out = []
    for r in a:
        acc = zero
        for x, y in zip(r, v):
            if not x.is_zero() and not y.is_zero():
                acc = acc + x * y
        out.append(acc)
    return out


def _berkowitz(m: list[list[LaurentPoly]], vars) -> list[LaurentPoly]:
    zero = LaurentPoly.zero(vars)
    one = LaurentPoly.one(vars)
    n = len(m)
    if n == 0:
        return [one]
    # grow from the bottom-right 1x1 corner outwards
    vec = [one, -m[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        a = m[k][k]
        row = m[k][k + 1:]
        col = [m[i][k] for i in range(k + 1, n)]
        sub = [r[k + 1:] for r in m[k + 1:]]
        size = n - k
        diags = [one, -a]
        cur = col
        for _ in range(size - 1):
            diags.append(-sum((x * y for x, y in zip(row, cur)), zero))
            cur = _matvec(sub, cur, zero)
        # Toeplitz (size+1) x size lower-triangular matrix times vec
        new = []
        for i in range(size + 1):
            acc = zero
            for j in range(min(i, size - 1) + 1):
                if i - j < len(diags) and not vec[j].is_zero():
                    acc = acc + diags[i - j] * vec[j]
            new.append(acc)
        vec = new
    return vec


def poly_matrix(rows: Iterable[Iterable[str]], vars: Sequence[str]) -> MatrixLP:
    """Shorthand for :meth:`MatrixLP.parse`."""
    return MatrixLP.parse([list(r) for r in rows], vars)
