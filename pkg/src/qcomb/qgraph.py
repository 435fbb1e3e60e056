"""Rooted regular quantum trees over a finite quantum space.

The base space is either C^N with the uniform state (delta^2 = N) or
M_N(C) with the normalized trace (delta^2 = N^2).  The depth-k tree is
the direct sum of the tensor powers B^0 .. B^k with the weighted state
psi_k = (1/delta_k) sum delta^i psi^i and adjacency Id + sum (x -> x o 1).

All scalar arithmetic is exact in the field Q(sqrt(N)) (rational when
sqrt(N) or delta is rational), so the reported Schur constants are exact
values, not approximations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np


class TooLarge(Exception):
    pass


class NotUnitary(Exception):
    pass


class NonBinaryEntry(Exception):
    pass


# ---------------------------------------------------------------------------
# Exact scalars a + b sqrt(d)


@dataclass(frozen=True)
class Quad:
    a: Fraction
    b: Fraction
    d: int  # radicand; ignored when b == 0

    @staticmethod
    def of(x, d: int = 1) -> "Quad":
        return Quad(Fraction(x), Fraction(0), d)

    @staticmethod
    def sqrt(n: int) -> "Quad":
        r = math.isqrt(n)
        if r * r == n:
            return Quad.of(r)
        return Quad(Fraction(0), Fraction(1), n)

    def _join(self, other: "Quad") -> int:
        if self.b and other.b and self.d != other.d:
            raise ValueError("mixed radicands")
        return self.d if self.b else other.d

    def __add__(self, other: "Quad") -> "Quad":
        return Quad(self.a + other.a, self.b + other.b, self._join(other))

    def __sub__(self, other: "Quad") -> "Quad":
        return Quad(self.a - other.a, self.b - other.b, self._join(other))

    def __neg__(self) -> "Quad":
        return Quad(-self.a, -self.b, self.d)

    def __mul__(self, other: "Quad") -> "Quad":
        d = self._join(other)
        return Quad(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    def inverse(self) -> "Quad":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("zero scalar")
        return Quad(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other: "Quad") -> "Quad":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quad):
            return NotImplemented
        if self.b == other.b == 0:
            return self.a == other.a
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d if self.b else 0))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.d})"
        return f"{self.a}+{self.b}*sqrt({self.d})"


ZERO = Quad.of(0)
ONE = Quad.of(1)


# ---------------------------------------------------------------------------
# Base quantum spaces


@dataclass(frozen=True)
class QuantumSpace:
    """C^N with the uniform state or M_N(C) with the normalized trace."""

    kind: str  # "classical" | "matrix"
    N: int

    @property
    def delta_squared(self) -> int:
        return self.N if self.kind == "classical" else self.N * self.N

    @property
    def delta(self) -> Quad:
        return Quad.sqrt(self.delta_squared)

    @property
    def labels(self) -> list:
        if self.kind == "classical":
            return list(range(self.N))
        return [(a, b) for a in range(self.N) for b in range(self.N)]

    @property
    def dim(self) -> int:
        return len(self.labels)

    def mult(self, x, y):
        """Product of two basis elements: a basis element or None."""
        if self.kind == "classical":
            return x if x == y else None
        return (x[0], y[1]) if x[1] == y[0] else None

    def mult_pairs(self, z) -> list:
        """All basis pairs (x, y) with x y = z."""
        if self.kind == "classical":
            return [(z, z)]
        return [((z[0], b), (b, z[1])) for b in range(self.N)]

    def star(self, x):
        return x if self.kind == "classical" else (x[1], x[0])

    def state(self, x) -> Fraction:
        """psi on a basis element."""
        if self.kind == "classical":
            return Fraction(1, self.N)
        return Fraction(1, self.N) if x[0] == x[1] else Fraction(0)

    def unit_support(self) -> list:
        """Basis elements appearing in 1 (all coefficients are 1)."""
        if self.kind == "classical":
            return list(range(self.N))
        return [(a, a) for a in range(self.N)]

    def basis_norm(self) -> Fraction:
        """<b, b> = psi(b* b), equal for every basis element."""
        return Fraction(1, self.N)


def classical(N: int) -> QuantumSpace:
    return QuantumSpace("classical", N)


def matrix_trace(N: int) -> QuantumSpace:
    return QuantumSpace("matrix", N)


def check_delta_form(base: QuantumSpace) -> bool:
    """m m* = delta^2 id on the base, with the GNS adjoint of psi.

    For a basis element z, m*(z) = (1/<b,b>) sum of the pairs multiplying
    to z, so m m*(z) = (#pairs / <b,b>) z and the check is arithmetic.
    """
    npairs = len(base.mult_pairs(base.labels[0]))
    return all(
        Fraction(len(base.mult_pairs(z)), 1) / base.basis_norm() == base.delta_squared
        and len(base.mult_pairs(z)) == npairs
        for z in base.labels
    )


# ---------------------------------------------------------------------------
# Quantum trees


class QuantumTree:
    """Direct sum of B^0..B^k; basis elements are (level, tuple) pairs."""

    def __init__(self, base: QuantumSpace, depth: int):
        if base.dim**depth > 5000:
            raise TooLarge("tree level dimension out of budget")
        self.base = base
        self.depth = depth
        self.delta = base.delta
        self.delta_k = ONE
        power = ONE
        for _ in range(depth):
            power = power * self.delta
            self.delta_k = self.delta_k + power

    def level_basis(self, i: int) -> list:
        return list(product(self.base.labels, repeat=i))

    def basis(self) -> list:
        return [(i, t) for i in range(self.depth + 1) for t in self.level_basis(i)]

    def level_dims(self) -> list[int]:
        return [self.base.dim**i for i in range(self.depth + 1)]

    def delta_pow(self, i: int) -> Quad:
        out = ONE
        for _ in range(i):
            out = out * self.delta
        return out

    def basis_norm(self, i: int, weighted: bool = True) -> Quad:
        """<x, x> for a level-i basis element: (1/N)^i per tensorand,
        weighted by delta^i / delta_k under psi_k."""
        h = Quad.of(self.base.basis_norm() ** i)
        if weighted:
            h = h * self.delta_pow(i) / self.delta_k
        return h

    def mult_pairs(self, t: tuple) -> list:
        """All pairs of level-i tuples multiplying to t, componentwise."""
        per = [self.base.mult_pairs(c) for c in t]
        return [
            (tuple(u for u, _ in combo), tuple(v for _, v in combo))
            for combo in product(*per)
        ]

    def state_is_unital(self) -> bool:
        """psi_k applied to the unit of B_k equals 1."""
        total = ZERO
        for i in range(self.depth + 1):
            level = ZERO
            for t in product(self.base.unit_support(), repeat=i):
                s = Fraction(1)
                for c in t:
                    s *= self.base.state(c)
                level = level + Quad.of(s)
            total = total + self.delta_pow(i) * level
        return total / self.delta_k == ONE


@dataclass
class SchurReport:
    base: str
    N: int
    depth: int
    mode: str  # "weighted" (psi_k GNS) | "per-level"
    id_constants: list[Quad]
    embed_constants: list[Quad]
    delta_k_squared: Quad
    matches_global_constant: bool

    def verdict(self) -> str:
        if self.matches_global_constant:
            return "global constant delta_k^2"
        return "level-dependent constants"

    def lines(self) -> list[str]:
        out = [
            f"base={self.base}({self.N}) depth={self.depth} mode={self.mode} "
            f"delta_k^2={self.delta_k_squared}"
        ]
        for i, c in enumerate(self.id_constants):
            e = self.embed_constants[i] if i < len(self.embed_constants) else None
            out.append(
                f"  level {i}: id coefficient {c}"
                + (f", embedding coefficient {e}" if e is not None else "")
            )
        out.append(f"  verdict: {self.verdict()}")
        return out


def schur_constants(tree: QuantumTree, weighted: bool = True) -> SchurReport:
    """Decompose m (A_k o A_k) m* in {Id_level, A_i} exactly.

    m* is the GNS adjoint of multiplication, either for the weighted state
    psi_k or for the per-level unweighted states.  For a level-i basis
    element x, m*(x) = (1/h_i) sum of pairs (u, v) with u v = x, and the
    operator acts as

        L(x) = (pairs / h_i) (x + x o 1)        (x o 1 absent at level k)

    because the cross terms Id o A and A o Id land in the kernel of m.
    The constants are verified identical across the basis of each level
    rather than assumed.
    """
    base = tree.base
    id_consts: list[Quad] = []
    embed_consts: list[Quad] = []
    for i in range(tree.depth + 1):
        h = tree.basis_norm(i, weighted)
        consts_id = set()
        consts_embed = set()
        for t in tree.level_basis(i):
            pairs = tree.mult_pairs(t)
            # sanity: every pair multiplies back to t with coefficient 1
            assert all(
                tuple(base.mult(u, v) for u, v in zip(us, vs)) == t for us, vs in pairs
            )
            c = Quad.of(len(pairs)) / h
            consts_id.add(c)
            if i < tree.depth:
                consts_embed.add(c)
        assert len(consts_id) == 1
        id_consts.append(consts_id.pop())
        if i < tree.depth:
            assert len(consts_embed) == 1
            embed_consts.append(consts_embed.pop())
    dk2 = tree.delta_k * tree.delta_k
    matches = all(c == dk2 for c in id_consts) and all(c == dk2 for c in embed_consts)
    return SchurReport(
        base.kind,
        base.N,
        tree.depth,
        "weighted" if weighted else "per-level",
        id_consts,
        embed_consts,
        dk2,
        matches,
    )


def embedding_scalars(tree: QuantumTree) -> list[Quad]:
    """<A_i x, A_i x> / <x, x> under psi_k, per level; constant by direct
    computation (the embedded unit contributes one extra state factor and
    one extra weight factor)."""
    out = []
    for i in range(tree.depth):
        num = tree.basis_norm(i + 1) * Quad.of(len(tree.base.unit_support()))
        out.append(num / tree.basis_norm(i))
    return out


# ---------------------------------------------------------------------------
# Classical tree extraction


def classical_graph(N: int, k: int) -> dict[tuple, list[tuple]]:
    """Parent -> children adjacency of A_k - Id on the delta basis of the
    classical base; entries are checked to be 0/1."""
    tree = QuantumTree(classical(N), k)
    adj: dict[tuple, list[tuple]] = {}
    for i in range(k + 1):
        for t in tree.level_basis(i):
            if i < k:
                # x o 1 = sum over j of the child (t, j), coefficient 1 each
                children = [t + (j,) for j in range(N)]
                if len(set(children)) != len(children):
                    raise NonBinaryEntry("repeated child index")
                adj[t] = children
            else:
                adj[t] = []
    return adj


def tree_counts(N: int, k: int) -> tuple[int, int]:
    expected_vertices = (N ** (k + 1) - 1) // (N - 1)
    expected_edges = (N ** (k + 1) - N) // (N - 1)
    return expected_vertices, expected_edges


# ---------------------------------------------------------------------------
# Conjugation action (numerical)


def haar_unitary(N: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.normal(size=(N, N)) + 1j * rng.normal(size=(N, N))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def action_commutes(N: int, k: int, V: np.ndarray, tol: float) -> bool:
    """For the matrix-trace base with a scalar unitary V, check on matrix
    units that conjugation at level i+1 of T o 1 equals the embedding of
    the conjugation at level i, and that each level's normalized trace is
    preserved."""
    if np.linalg.norm(V @ V.conj().T - np.eye(N)) > max(tol, 1e-12):
        raise NotUnitary("V is not unitary within tolerance")

    def conj_level(T: np.ndarray, i: int) -> np.ndarray:
        Vi = np.eye(1, dtype=complex)
        for _ in range(i):
            Vi = np.kron(Vi, V)
        return Vi @ T @ Vi.conj().T

    for i in range(k):
        dim = N**i
        for a in range(dim):
            for b in range(dim):
                T = np.zeros((dim, dim), dtype=complex)
                T[a, b] = 1.0
                lhs = conj_level(np.kron(T, np.eye(N)), i + 1)
                rhs = np.kron(conj_level(T, i), np.eye(N))
                if np.abs(lhs - rhs).max() > tol:
                    return False
                if abs(np.trace(conj_level(T, i)) - np.trace(T)) > tol:
                    return False
    return True
