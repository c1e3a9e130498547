"""Capacity bounds for coadjoint orbits: w0 decompositions, the coweight
lower bound, path-degree upper bounds, the exact unitary value and the
per-type closed-form table.

All values are exact rationals.  Weights are given in the ambient
coordinates of the type (see rootsystem module docstring); G2 weights are
orthogonally projected onto the root plane first, which leaves every bound
unchanged.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import ConsistencyError, ValidationError
from .graphs import Degree, bruhat_graph, d_min, min_path_area, quantum_bruhat_graph
from .linalg import Vector, vec
from .rootsystem import RootSystem, build, rational_str, vector_strs
from .weyl import DEFAULT_GROUP_CAP, generate

DEFAULT_CONFIRM_CAP = 2000

HALF = Fraction(1, 2)
TWO_THIRDS = Fraction(2, 3)


# ---------------------------------------------------------------------------
# Dominant weights


def dominance_violations(rs: RootSystem, lam: Vector) -> list[int]:
    """Positions of simple roots alpha with <lam, coroot(alpha)> < 0."""
    return [k for k, s in enumerate(rs.simple) if rs.pairing(lam, s) < 0]


def require_dominant(rs: RootSystem, lam: Vector) -> None:
    bad = dominance_violations(rs, lam)
    if bad:
        k = bad[0]
        alpha = rs.roots[rs.simple[k]]
        raise ValidationError(
            f"lambda is not dominant for {rs.family}{rs.rank}: "
            f"<lambda, coroot(alpha_{k + 1})> < 0 for alpha_{k + 1} = ({','.join(vector_strs(alpha))})"
        )


def is_regular(rs: RootSystem, lam: Vector) -> bool:
    return all(rs.pairing(lam, s) > 0 for s in rs.simple)


def parabolic_positions(rs: RootSystem, lam: Vector) -> tuple[int, ...]:
    """S_P for the orbit through lam: simple roots pairing to zero (the stabilizer)."""
    return tuple(k for k, s in enumerate(rs.simple) if rs.pairing(lam, s) == 0)


def dominant_from_pairings(rs: RootSystem, coeffs) -> Vector:
    """The weight in the root span with <lam, coroot(alpha_k)> = coeffs[k]."""
    if len(coeffs) != rs.rank:
        raise ValidationError(f"expected {rs.rank} chamber coordinates")
    fw = rs.fundamental_weights()
    lam = [Fraction(0)] * rs.ambient_dim
    for c, w in zip(coeffs, fw):
        c = Fraction(c)
        if c < 0:
            raise ValidationError("chamber coordinates must be nonnegative")
        for i in range(rs.ambient_dim):
            lam[i] += c * w[i]
    return tuple(lam)


def random_dominant(rs: RootSystem, rng: random.Random, *, regular: bool = False,
                    max_coeff: int = 9) -> Vector:
    low = 1 if regular else 0
    return dominant_from_pairings(rs, [rng.randint(low, max_coeff) for _ in range(rs.rank)])


def random_positive_coweight(rs: RootSystem, rng: random.Random, *, max_coeff: int = 9) -> Vector:
    """A random vector in the interior of the positive coweight cone."""
    tau = rs.dual_basis()
    xi = [Fraction(0)] * rs.ambient_dim
    for t in tau:
        c = Fraction(rng.randint(1, max_coeff))
        for i in range(rs.ambient_dim):
            xi[i] += c * t[i]
    return tuple(xi)


# ---------------------------------------------------------------------------
# w0 decompositions into pairwise orthogonal reflections


def _e(dim: int, i: int, value=1) -> list:
    row = [Fraction(0)] * dim
    row[i - 1] = Fraction(value)
    return row


def _decomposition_vectors(family: str, rank: int) -> list[Vector]:
    fam = family.upper()
    if fam == "A":
        m = rank + 1
        out = []
        for k in range(1, m // 2 + 1):
            v = [Fraction(0)] * m
            v[k - 1] = Fraction(1)
            v[m - k] = Fraction(-1)
            out.append(tuple(v))
        return out
    if fam in ("B", "D"):
        n = rank
        out = []
        last_pair = n - 1 if n % 2 == 0 else n - 2
        for k in range(1, last_pair + 1, 2):
            minus = [Fraction(0)] * n
            minus[k - 1], minus[k] = Fraction(1), Fraction(-1)
            plus = [Fraction(0)] * n
            plus[k - 1], plus[k] = Fraction(1), Fraction(1)
            out.append(tuple(minus))
            out.append(tuple(plus))
        if fam == "B" and n % 2 == 1:
            out.append(tuple(_e(n, n)))
        return out
    if fam == "C":
        return [tuple(_e(rank, k, 2)) for k in range(1, rank + 1)]
    if fam == "E":
        pairs = []
        for k in (1, 3, 5, 7):
            minus = [Fraction(0)] * 8
            minus[k - 1], minus[k] = Fraction(-1), Fraction(1)
            plus = [Fraction(0)] * 8
            plus[k - 1], plus[k] = Fraction(1), Fraction(1)
            pairs.extend([tuple(minus), tuple(plus)])
        if rank == 8:
            return pairs
        if rank == 7:
            return pairs[:6] + [pairs[6]]
        # rank 6
        return [
            vec([0, -1, 1, 0, 0, 0, 0, 0]),
            vec([-1, 0, 0, 1, 0, 0, 0, 0]),
            (HALF, HALF, HALF, HALF, HALF, -HALF, -HALF, HALF),
            (-HALF, -HALF, -HALF, -HALF, HALF, -HALF, -HALF, HALF),
        ]
    if fam == "F":
        return [
            vec([1, 1, 0, 0]),
            vec([1, -1, 0, 0]),
            vec([0, 0, 1, 1]),
            vec([0, 0, 1, -1]),
        ]
    if fam == "G":
        return [vec([0, 1, -1]), vec([2, -1, -1])]
    raise ValidationError(f"unknown family {family!r}")


@dataclass(frozen=True)
class W0Decomposition:
    """An ordered list of pairwise orthogonal positive roots whose
    reflections compose to w0; validated at construction."""

    root_indices: tuple[int, ...]
    vectors: tuple[Vector, ...]
    coroot_heights: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.root_indices)


def w0_decomposition(rs: RootSystem) -> W0Decomposition:
    """The per-type decomposition of w0 into orthogonal reflections.

    Four independent checks guard the transcribed data: the entries are
    positive roots, pairwise orthogonal, their reflections compose to w0
    (every positive root is sent to a negative one), the count equals the
    absolute length of w0 (fixed-space codimension), and the coroot heights
    satisfy sum(2*ht - 1) = |R+|.  Runs at the matrix level, so no Weyl
    group enumeration is needed (E8 included).
    """
    vectors = _decomposition_vectors(rs.family, rs.rank)
    indices = []
    for v in vectors:
        idx = rs.index.get(v)
        if idx is None or not rs.is_positive[idx]:
            raise ConsistencyError(
                f"decomposition data for {rs.family}{rs.rank}: {v} is not a positive root"
            )
        indices.append(idx)

    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            if linalg.dot(vectors[i], vectors[j]) != 0:
                raise ConsistencyError(
                    f"decomposition data for {rs.family}{rs.rank}: "
                    f"roots {vectors[i]} and {vectors[j]} are not orthogonal"
                )

    product = linalg.identity(rs.ambient_dim)
    for v in vectors:
        product = linalg.matmul(product, linalg.reflection_matrix(v))
    for p in rs.positive:
        image = linalg.mat_vec(product, rs.roots[p])
        idx = rs.index.get(image)
        if idx is None or rs.is_positive[idx]:
            raise ConsistencyError(
                f"decomposition data for {rs.family}{rs.rank}: product is not w0 "
                f"(does not map all positive roots to negative roots)"
            )

    fixed_codim = linalg.rank(linalg.mat_sub(product, linalg.identity(rs.ambient_dim)))
    if fixed_codim != len(vectors):
        raise ConsistencyError(
            f"decomposition data for {rs.family}{rs.rank}: {len(vectors)} reflections "
            f"but the absolute length of w0 is {fixed_codim}"
        )

    heights = tuple(rs.coroot_height(i) for i in indices)
    if sum(2 * h - 1 for h in heights) != len(rs.positive):
        raise ConsistencyError(
            f"decomposition data for {rs.family}{rs.rank}: "
            f"sum(2 ht - 1) = {sum(2 * h - 1 for h in heights)} != |R+| = {len(rs.positive)}"
        )

    return W0Decomposition(tuple(indices), tuple(vectors), heights)


# ---------------------------------------------------------------------------
# Bounds


def upper_bound(rs: RootSystem, lam: Vector, dec: W0Decomposition) -> Fraction:
    """sum_k <lam, coroot(alpha_k)> over the decomposition roots."""
    lam = vec(lam)
    require_dominant(rs, lam)
    return sum((rs.pairing(lam, i) for i in dec.root_indices), Fraction(0))


def lower_bound(rs: RootSystem, lam: Vector, dec: W0Decomposition) -> tuple[Fraction, int]:
    """max over simple alpha of sum_k (n_{alpha_k,alpha}/n_{rho,alpha}) <lam, coroot(alpha_k)>.

    Returns the value and the position of the maximizing simple root.
    """
    lam = vec(lam)
    require_dominant(rs, lam)
    n_rho = rs.root_coefficients(rs.highest)
    if any(c < 1 for c in n_rho):
        raise ConsistencyError("highest root must have full support over the simple roots")
    pairings = [rs.pairing(lam, i) for i in dec.root_indices]
    coeffs = [rs.root_coefficients(i) for i in dec.root_indices]
    best: Fraction | None = None
    witness = 0
    for j in range(rs.rank):
        value = sum(
            (Fraction(c[j], n_rho[j]) * p for c, p in zip(coeffs, pairings)),
            Fraction(0),
        )
        if best is None or value > best:
            best, witness = value, j
    assert best is not None
    return best, witness


def coweight_oscillation_bound(rs: RootSystem, lam: Vector, xi: Vector,
                               dec: W0Decomposition | None = None) -> Fraction:
    """osc(phi^xi) / m_xi^+ for a coweight xi in the closed positive cone.

    xi must pair nonnegatively with every simple root and positively with
    the highest root (the dual-basis vertices qualify).  The maximum of
    |(root, xi)| is then attained at the highest root, which is asserted.
    """
    lam = vec(lam)
    xi = vec(xi)
    require_dominant(rs, lam)
    if dec is None:
        dec = w0_decomposition(rs)
    if any(linalg.dot(xi, rs.roots[s]) < 0 for s in rs.simple):
        raise ValidationError("xi must pair nonnegatively with every simple root")
    m = linalg.dot(xi, rs.rho)
    if m <= 0:
        raise ValidationError("xi must pair positively with the highest root")
    worst = max(abs(linalg.dot(xi, r)) for r in rs.roots)
    if worst != m:
        raise ConsistencyError("max |(root, xi)| not attained at the highest root")
    osc = sum(
        (rs.pairing(lam, i) * linalg.dot(rs.roots[i], xi) for i in dec.root_indices),
        Fraction(0),
    )
    return osc / m


def unitary_capacity(lam) -> Fraction:
    """(1/2) sum_k |lam_k - lam_{n-k+1}| for a nonincreasing weight vector."""
    lam = vec(lam)
    n = len(lam)
    if any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise ValidationError("lambda must be sorted in nonincreasing order")
    return HALF * sum((abs(lam[k] - lam[n - 1 - k]) for k in range(n)), Fraction(0))


# ---------------------------------------------------------------------------
# Closed-form table


def closed_form_table(rs: RootSystem, lam: Vector) -> tuple[Fraction, Fraction]:
    """Per-type closed-form (lower, upper); the cross-check oracle for the
    general machinery, stated directly in the ambient weight coordinates.

    E-type rows are kept in the full 8-coordinate form.  The G2 row is
    written in a form invariant under shifts along (1,1,1), so projecting
    onto the root plane does not change it.
    """
    lam = vec(lam)
    require_dominant(rs, lam)
    fam, n = rs.family, rs.rank
    if fam == "A":
        exact = unitary_capacity(lam)
        return exact, exact
    if fam == "B":
        upper = 2 * sum((lam[k] for k in range(0, n, 2)), Fraction(0))
        lower = max(2 * lam[0], sum(lam, Fraction(0)))
        return lower, upper
    if fam == "C":
        total = sum(lam, Fraction(0))
        return total, total
    if fam == "D":
        pairs = n - 1 if n % 2 == 0 else n - 2
        upper = 2 * sum((lam[k] for k in range(0, pairs, 2)), Fraction(0))
        head = sum(lam[: n - 1], Fraction(0))
        if n % 2 == 0:
            head += abs(lam[n - 1])
        lower = max(2 * lam[0], head)
        return lower, upper
    if fam == "E" and n == 6:
        upper = -lam[0] - lam[1] + lam[2] + lam[3] + lam[4] - lam[5] - lam[6] + lam[7]
        lower = lam[4] - lam[5] - lam[6] + lam[7]
        return lower, upper
    if fam == "E" and n == 7:
        upper = 2 * lam[1] + 2 * lam[3] + 2 * lam[5] + lam[7] - lam[6]
        lower = max(
            2 * lam[5] + lam[7] - lam[6],
            HALF * (lam[0] + lam[1] + lam[2] + lam[3] + lam[4] + lam[5]) + lam[7] - lam[6],
        )
        return lower, upper
    if fam == "E" and n == 8:
        upper = 2 * lam[1] + 2 * lam[3] + 2 * lam[5] + 2 * lam[7]
        lower = max(
            2 * lam[7],
            Fraction(1, 3) * (sum(lam[:7], Fraction(0)) + 5 * lam[7]),
        )
        return lower, upper
    if fam == "F":
        return 2 * lam[0], 2 * lam[0] + 2 * lam[2]
    if fam == "G":
        upper = TWO_THIRDS * (lam[0] + lam[1] - 2 * lam[2])
        lower = TWO_THIRDS * (lam[0] - lam[2])
        return lower, upper
    raise ValidationError(f"no closed-form table row for {fam}{n}")


# ---------------------------------------------------------------------------
# Orchestration


@dataclass
class CapacityBounds:
    family: str
    rank: int
    lam_input: Vector
    lam: Vector                      # after G2 projection, if any
    lower: Fraction
    upper: Fraction
    exact: Fraction | None           # type A only
    witness: int                     # maximizing simple-root position
    decomposition: W0Decomposition
    regular: bool
    d_min_degree: Degree | None
    min_area: Fraction | None
    checks: dict

    def as_dict(self) -> dict:
        out = {
            "type": self.family,
            "rank": self.rank,
            "lambda": vector_strs(self.lam_input),
            "lower": rational_str(self.lower),
            "upper": rational_str(self.upper),
            "decomposition": [vector_strs(v) for v in self.decomposition.vectors],
            "witness_root": f"alpha_{self.witness + 1}",
            "regular": self.regular,
            "checks": dict(self.checks),
        }
        if self.lam != self.lam_input:
            out["lambda_projected"] = vector_strs(self.lam)
        if self.exact is not None:
            out["exact"] = rational_str(self.exact)
        if self.d_min_degree is not None:
            out["d_min_degree"] = list(self.d_min_degree)
        if self.min_area is not None:
            out["min_path_area"] = rational_str(self.min_area)
        return out


def hz_bounds(family: str, rank: int, lam, *, confirm_cap: int = DEFAULT_CONFIRM_CAP,
              group_cap: int = DEFAULT_GROUP_CAP) -> CapacityBounds:
    """Full pipeline: root system, decomposition, bounds and, for groups
    small enough to enumerate, independent graph confirmations of the upper
    bound (quantum d_min from w0 and the Bruhat-graph minimal path area)."""
    rs = build(family, rank)
    lam_input = vec(lam)
    if len(lam_input) != rs.ambient_dim:
        raise ValidationError(
            f"lambda has {len(lam_input)} coordinates; {rs.family}{rs.rank} needs {rs.ambient_dim}"
        )
    lam_used = rs.project_to_root_span(lam_input) if rs.family == "G" else lam_input
    require_dominant(rs, lam_used)

    dec = w0_decomposition(rs)
    upper = upper_bound(rs, lam_used, dec)
    lower, witness = lower_bound(rs, lam_used, dec)
    exact = unitary_capacity(lam_used) if rs.family == "A" else None

    if not (0 <= lower <= upper):
        raise ConsistencyError(f"bound ordering violated: 0 <= {lower} <= {upper}")
    if 3 * lower < 2 * upper:
        raise ConsistencyError(f"two-thirds bound violated: lower={lower}, upper={upper}")
    if exact is not None and (exact != upper or exact != lower):
        raise ConsistencyError("type A bounds must be sharp and equal the unitary value")

    regular = is_regular(rs, lam_used)
    checks = {
        "sharp": lower == upper,
        "ratio_ok": 3 * lower >= 2 * upper,
        "dmin_consistent": None,
    }
    d_deg: Degree | None = None
    area: Fraction | None = None
    if rs.weyl_order <= confirm_cap:
        weyl = generate(rs, cap=group_cap)
        if regular:
            q = quantum_bruhat_graph(weyl)
            d_deg, _length = d_min(q, weyl.longest_index, weyl.identity_index)
            pairing_of_degree = sum(
                (d_deg[k] * rs.pairing(lam_used, rs.simple[k]) for k in range(rs.rank)),
                Fraction(0),
            )
            pd = weyl.parabolic(())
            graph = bruhat_graph(weyl, pd)
            area = min_path_area(
                graph, lam_used,
                pd.coset_of[weyl.identity_index], pd.coset_of[weyl.longest_index],
            )
            ok = pairing_of_degree == upper == area
            checks["dmin_consistent"] = ok
            if not ok:
                raise ConsistencyError(
                    f"upper-bound triangle failed for regular lambda: "
                    f"decomposition {upper}, d_min pairing {pairing_of_degree}, Dijkstra {area}"
                )
        else:
            pd = weyl.parabolic(parabolic_positions(rs, lam_used))
            graph = bruhat_graph(weyl, pd)
            area = min_path_area(
                graph, lam_used,
                pd.coset_of[weyl.identity_index], pd.coset_of[weyl.longest_index],
            )
            # For degenerate orbits the minimal parabolic path area may drop
            # below the regular-orbit upper bound; report, do not hide.
            checks["dmin_consistent"] = area == upper

    return CapacityBounds(
        family=rs.family,
        rank=rs.rank,
        lam_input=lam_input,
        lam=lam_used,
        lower=lower,
        upper=upper,
        exact=exact,
        witness=witness,
        decomposition=dec,
        regular=regular,
        d_min_degree=d_deg,
        min_area=area,
        checks=checks,
    )
