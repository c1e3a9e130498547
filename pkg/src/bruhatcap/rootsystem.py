"""Simple root systems realized by exact rational vectors.

Coordinate conventions per type (the ones in which all closed-form bounds
are stated):

* A_n: ambient R^{n+1}, simple roots e_i - e_{i+1};
* B_n: ambient R^n, roots {+-e_i, +-e_j +- e_k}, last simple root e_n;
* C_n: ambient R^n, roots {+-2e_i, +-e_j +- e_k}, last simple root 2e_n;
* D_n: ambient R^n, roots {+-e_j +- e_k}, last simple root e_{n-1}+e_n;
* E6/E7/E8: ambient R^8, the first 6/7/8 of the standard E8 simple roots;
* F4: ambient R^4; G2: ambient R^3, root plane {x : x_1+x_2+x_3 = 0}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import linalg
from .errors import ConsistencyError, ValidationError
from .linalg import Vector, vec

HALF = Fraction(1, 2)

_E8_SIMPLE: list[list[Fraction]] = [
    [HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF],
    [Fraction(1), Fraction(1)] + [Fraction(0)] * 6,
    [Fraction(-1), Fraction(1)] + [Fraction(0)] * 6,
]
for _k in range(5):
    _row = [Fraction(0)] * 8
    _row[_k + 1] = Fraction(-1)
    _row[_k + 2] = Fraction(1)
    _E8_SIMPLE.append(_row)


def _unit(dim: int, i: int, value=1) -> list[Fraction]:
    row = [Fraction(0)] * dim
    row[i] = Fraction(value)
    return row


def simple_root_vectors(family: str, rank: int) -> list[Vector]:
    """Simple roots of the chosen type in the standard realization."""
    fam = family.upper()
    if fam == "A":
        if rank < 1:
            raise ValidationError("type A requires rank >= 1")
        dim = rank + 1
        return [
            tuple(Fraction(1) if j == i else Fraction(-1) if j == i + 1 else Fraction(0) for j in range(dim))
            for i in range(rank)
        ]
    if fam in ("B", "C"):
        if rank < 2:
            raise ValidationError(f"type {fam} requires rank >= 2")
        out = [
            tuple(Fraction(1) if j == i else Fraction(-1) if j == i + 1 else Fraction(0) for j in range(rank))
            for i in range(rank - 1)
        ]
        out.append(vec(_unit(rank, rank - 1, 1 if fam == "B" else 2)))
        return out
    if fam == "D":
        if rank < 3:
            raise ValidationError("type D requires rank >= 3")
        out = [
            tuple(Fraction(1) if j == i else Fraction(-1) if j == i + 1 else Fraction(0) for j in range(rank))
            for i in range(rank - 1)
        ]
        last = [Fraction(0)] * rank
        last[rank - 2] = Fraction(1)
        last[rank - 1] = Fraction(1)
        out.append(tuple(last))
        return out
    if fam == "E":
        if rank not in (6, 7, 8):
            raise ValidationError("type E exists only for ranks 6, 7, 8")
        return [tuple(row) for row in _E8_SIMPLE[:rank]]
    if fam == "F":
        if rank != 4:
            raise ValidationError("type F exists only for rank 4")
        return [
            vec([0, 1, -1, 0]),
            vec([0, 0, 1, -1]),
            vec([0, 0, 0, 1]),
            (HALF, -HALF, -HALF, -HALF),
        ]
    if fam == "G":
        if rank != 2:
            raise ValidationError("type G exists only for rank 2")
        return [vec([1, -2, 1]), vec([0, 1, -1])]
    raise ValidationError(f"unknown family {family!r}; expected one of A, B, C, D, E, F, G")


def positive_root_count(family: str, rank: int) -> int:
    fam = family.upper()
    if fam == "A":
        return rank * (rank + 1) // 2
    if fam in ("B", "C"):
        return rank * rank
    if fam == "D":
        return rank * (rank - 1)
    if fam == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    if fam == "F":
        return 24
    if fam == "G":
        return 6
    raise ValidationError(f"unknown family {family!r}")


def weyl_group_order(family: str, rank: int) -> int:
    fam = family.upper()
    if fam == "A":
        return factorial(rank + 1)
    if fam in ("B", "C"):
        return (2**rank) * factorial(rank)
    if fam == "D":
        return (2 ** (rank - 1)) * factorial(rank)
    if fam == "E":
        return {6: 51_840, 7: 2_903_040, 8: 696_729_600}[rank]
    if fam == "F":
        return 1152
    if fam == "G":
        return 12
    raise ValidationError(f"unknown family {family!r}")


class RootSystem:
    """A simple root system with exact rational coordinates.

    Immutable after construction; all queries are pure.  Roots are stored in
    a canonical lexicographic order so root indices are reproducible.
    """

    def __init__(self, family: str, rank: int):
        fam = family.upper()
        simples = simple_root_vectors(fam, rank)
        self.family = fam
        self.rank = rank
        self.ambient_dim = len(simples[0])
        self.weyl_order = weyl_group_order(fam, rank)

        roots = set(simples)
        queue = list(simples)
        while queue:
            beta = queue.pop()
            for i, alpha in enumerate(simples):
                image = self._reflect_vec(alpha, beta)
                if image not in roots:
                    roots.add(image)
                    queue.append(image)
        self.roots: tuple[Vector, ...] = tuple(sorted(roots))
        self.index: dict[Vector, int] = {r: i for i, r in enumerate(self.roots)}
        self.simple: tuple[int, ...] = tuple(self.index[s] for s in simples)

        # Signed integer coefficients of every root over the simple roots.
        coeffs = []
        for r in self.roots:
            sol = linalg.solve_columns(simples, r)
            ints = []
            for c in sol:
                if c.denominator != 1:
                    raise ConsistencyError(
                        f"{fam}{rank}: non-integral root coefficient {c} for root {r}"
                    )
                ints.append(int(c))
            coeffs.append(tuple(ints))
        self._coeffs: tuple[tuple[int, ...], ...] = tuple(coeffs)

        self.is_positive: tuple[bool, ...] = tuple(all(c >= 0 for c in cs) for cs in coeffs)
        for i, cs in enumerate(coeffs):
            if not self.is_positive[i] and not all(c <= 0 for c in cs):
                raise ConsistencyError(f"{fam}{rank}: root with mixed-sign coefficients: {self.roots[i]}")
        self.positive: tuple[int, ...] = tuple(i for i in range(len(self.roots)) if self.is_positive[i])
        expected = positive_root_count(fam, rank)
        if len(self.positive) != expected or len(self.roots) != 2 * expected:
            raise ConsistencyError(
                f"{fam}{rank}: generated {len(self.positive)} positive roots, expected {expected}"
            )

        self.neg_of: tuple[int, ...] = tuple(self.index[linalg.neg(r)] for r in self.roots)

        # Signed integer coefficients of every coroot over the simple coroots.
        simple_coroots = [self._coroot_vec(simples[k]) for k in range(rank)]
        cocoeffs = []
        for r in self.roots:
            sol = linalg.solve_columns(simple_coroots, self._coroot_vec(r))
            ints = []
            for c in sol:
                if c.denominator != 1:
                    raise ConsistencyError(
                        f"{fam}{rank}: non-integral coroot coefficient {c} for root {r}"
                    )
                ints.append(int(c))
            cocoeffs.append(tuple(ints))
        self._cocoeffs: tuple[tuple[int, ...], ...] = tuple(cocoeffs)

        # Highest root: unique dominance-maximal positive root.
        best = max(self.positive, key=lambda i: sum(self._coeffs[i]))
        top = sum(self._coeffs[best])
        if sum(1 for i in self.positive if sum(self._coeffs[i]) == top) != 1:
            raise ConsistencyError(f"{fam}{rank}: highest root is not unique")
        for i in self.positive:
            if any(a < b for a, b in zip(self._coeffs[best], self._coeffs[i])):
                raise ConsistencyError(f"{fam}{rank}: highest root not dominance-maximal")
        self.highest: int = best

        self._fundamental: tuple[Vector, ...] | None = None
        self._dual_basis: tuple[Vector, ...] | None = None

    # -- elementary queries -------------------------------------------------

    @staticmethod
    def _coroot_vec(alpha: Vector) -> Vector:
        return linalg.scale(Fraction(2) / linalg.dot(alpha, alpha), alpha)

    @staticmethod
    def _reflect_vec(alpha: Vector, t: Vector) -> Vector:
        c = Fraction(2) * linalg.dot(t, alpha) / linalg.dot(alpha, alpha)
        return tuple(ti - c * ai for ti, ai in zip(t, alpha))

    def coroot(self, i: int) -> Vector:
        """The coroot 2*alpha/(alpha,alpha) of root i."""
        return self._coroot_vec(self.roots[i])

    def pairing(self, t: Vector, i: int) -> Fraction:
        """<t, coroot of root i> = 2(t, alpha)/(alpha, alpha)."""
        alpha = self.roots[i]
        if len(t) != self.ambient_dim:
            raise ValidationError(f"vector has dimension {len(t)}, ambient is {self.ambient_dim}")
        return Fraction(2) * linalg.dot(t, alpha) / linalg.dot(alpha, alpha)

    def reflect(self, i: int, t: Vector) -> Vector:
        """Reflection of t in the hyperplane orthogonal to root i."""
        if len(t) != self.ambient_dim:
            raise ValidationError(f"vector has dimension {len(t)}, ambient is {self.ambient_dim}")
        return self._reflect_vec(self.roots[i], t)

    def _require_positive(self, i: int) -> None:
        if not self.is_positive[i]:
            raise ValidationError(f"root {self.roots[i]} is not positive")

    def root_coefficients(self, i: int) -> tuple[int, ...]:
        """Nonnegative integers expressing positive root i over the simple roots."""
        self._require_positive(i)
        return self._coeffs[i]

    def coroot_coefficients(self, i: int) -> tuple[int, ...]:
        """Nonnegative integers expressing the coroot of positive root i over simple coroots."""
        self._require_positive(i)
        return self._cocoeffs[i]

    def coroot_height(self, i: int) -> int:
        """Sum of the simple-coroot coefficients of the coroot of positive root i."""
        self._require_positive(i)
        return sum(self._cocoeffs[i])

    def signed_coefficients(self, i: int) -> tuple[int, ...]:
        """Like root_coefficients, but defined (with signs) for every root."""
        return self._coeffs[i]

    def signed_cocoefficients(self, i: int) -> tuple[int, ...]:
        return self._cocoeffs[i]

    @property
    def rho(self) -> Vector:
        """The highest positive root."""
        return self.roots[self.highest]

    def simple_vectors(self) -> list[Vector]:
        return [self.roots[i] for i in self.simple]

    # -- derived bases ------------------------------------------------------

    def cartan_matrix(self) -> list[list[Fraction]]:
        """C[i][j] = <alpha_j, coroot of alpha_i>; always integral."""
        return [
            [self.pairing(self.roots[j], i) for j in self.simple]
            for i in self.simple
        ]

    def fundamental_weights(self) -> tuple[Vector, ...]:
        """Vectors w_j in the root span with <w_j, coroot of alpha_i> = delta_ij."""
        if self._fundamental is None:
            simples = self.simple_vectors()
            cart = self.cartan_matrix()
            cols = [vec(row) for row in zip(*cart)]
            out = []
            for j in range(self.rank):
                target = [Fraction(1) if i == j else Fraction(0) for i in range(self.rank)]
                coords = linalg.solve_columns(cols, target)
                amb = tuple(
                    sum((coords[k] * simples[k][i] for k in range(self.rank)), Fraction(0))
                    for i in range(self.ambient_dim)
                )
                out.append(amb)
            self._fundamental = tuple(out)
        return self._fundamental

    def dual_basis(self) -> tuple[Vector, ...]:
        """Vectors tau_j in the root span with (tau_j, alpha_i) = delta_ij."""
        if self._dual_basis is None:
            simples = self.simple_vectors()
            gram = [[linalg.dot(a, b) for b in simples] for a in simples]
            cols = [vec(row) for row in zip(*gram)]
            out = []
            for j in range(self.rank):
                target = [Fraction(1) if i == j else Fraction(0) for i in range(self.rank)]
                coords = linalg.solve_columns(cols, target)
                amb = tuple(
                    sum((coords[k] * simples[k][i] for k in range(self.rank)), Fraction(0))
                    for i in range(self.ambient_dim)
                )
                out.append(amb)
            self._dual_basis = tuple(out)
        return self._dual_basis

    def project_to_root_span(self, t: Vector) -> Vector:
        """Orthogonal projection of t onto the span of the roots."""
        if len(t) != self.ambient_dim:
            raise ValidationError(f"vector has dimension {len(t)}, ambient is {self.ambient_dim}")
        simples = self.simple_vectors()
        gram = [[linalg.dot(a, b) for b in simples] for a in simples]
        cols = [vec(row) for row in zip(*gram)]
        rhs = [linalg.dot(t, a) for a in simples]
        coords = linalg.solve_columns(cols, rhs)
        return tuple(
            sum((coords[k] * simples[k][i] for k in range(self.rank)), Fraction(0))
            for i in range(self.ambient_dim)
        )

    def __repr__(self) -> str:  # pragma: no cover
        return f"RootSystem({self.family}{self.rank}, |R+|={len(self.positive)})"


@lru_cache(maxsize=None)
def build(family: str, rank: int) -> RootSystem:
    """Build (and cache) the root system of the given simple type."""
    return RootSystem(family, rank)


def rational_str(x) -> str:
    """Exact decimal-free rendering: '3', '-1/2', ..."""
    return str(Fraction(x))


def vector_strs(v: Vector) -> list[str]:
    return [rational_str(x) for x in v]


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"cannot parse rational {s!r}: {exc}") from None
