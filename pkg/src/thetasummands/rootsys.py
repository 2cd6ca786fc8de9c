"""Root systems C_n, A_{2n-1} and E6 in exact arithmetic.

Weights are plain tuples of integers in the system's canonical coordinates:

* ``C`` (symplectic, rank n): length-n epsilon coordinates, dominant means
  weakly decreasing and nonnegative.
* ``A`` (special linear Sl_{2n}, rank 2n-1): length-2n vectors modulo the
  determinant character (1,...,1).  Every weight is stored as the unique
  representative whose last n entries have maximum zero; for dominant
  weights this is the (lambda+ | -lambda-) form with lambda- having a
  vanishing entry.
* ``E6``: length-6 Dynkin labels (coefficients on the fundamental weights),
  Bourbaki numbering with the branch node alpha_2 attached to alpha_4.

All arithmetic is exact (ints and fractions.Fraction).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidInputError

Coords = tuple[int, ...]


@dataclass(frozen=True)
class RootSystemKind:
    family: str  # "C", "A" or "E6"
    n: int  # C: rank; A: half the vector size (rank 2n-1); E6: unused (0)

    def __post_init__(self):
        if self.family not in ("C", "A", "E6"):
            raise InvalidInputError(f"unknown family {self.family!r}")
        if self.family in ("C", "A") and self.n < 1:
            raise InvalidInputError(f"{self.family}-family needs n >= 1, got {self.n}")

    def __str__(self):
        if self.family == "C":
            return f"C{self.n}"
        if self.family == "A":
            return f"A{2 * self.n - 1}"
        return "E6"


def SpC(n: int) -> RootSystemKind:
    """Symplectic kind: root system C_n."""
    return RootSystemKind("C", n)


def SlA(n: int) -> RootSystemKind:
    """Special linear kind Sl_{2n}: root system A_{2n-1}."""
    return RootSystemKind("A", n)


E6 = RootSystemKind("E6", 0)

# Bourbaki Cartan matrix of E6 (chain 1-3-4-5-6, node 2 attached to 4).
_E6_CARTAN = (
    (2, 0, -1, 0, 0, 0),
    (0, 2, 0, -1, 0, 0),
    (-1, 0, 2, -1, 0, 0),
    (0, -1, -1, 2, -1, 0),
    (0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, -1, 2),
)


def parse_kind(name: str) -> RootSystemKind:
    """Parse "C<n>", "A<2n-1>", "SL<2n>" or "E6"."""
    name = name.strip().upper()
    if name == "E6":
        return E6
    try:
        if name.startswith("SL"):
            m = int(name[2:])
            if m < 2 or m % 2:
                raise InvalidInputError(f"SL size must be even and >= 2: {name}")
            return SlA(m // 2)
        if name.startswith("C"):
            return SpC(int(name[1:]))
        if name.startswith("A"):
            r = int(name[1:])
            if r < 1 or r % 2 == 0:
                raise InvalidInputError(f"A-rank must be odd (A_(2n-1)): {name}")
            return SlA((r + 1) // 2)
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse root system {name!r}") from exc
    raise InvalidInputError(f"cannot parse root system {name!r}")


def _invert_exact(mat):
    """Exact inverse of an integer matrix, as a tuple of Fraction rows."""
    r = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(r)] + [Fraction(int(i == j)) for j in range(r)]
           for i in range(r)]
    for col in range(r):
        piv = next(i for i in range(col, r) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(r):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(tuple(row[r:]) for row in aug)


@dataclass(frozen=True)
class RootSystem:
    kind: RootSystemKind
    rank: int
    coord_len: int
    cartan: tuple[tuple[int, ...], ...]
    cartan_inv: tuple[tuple[Fraction, ...], ...]
    simple_roots: tuple[Coords, ...]
    fundamental_weights: tuple[Coords, ...]
    positive_roots: tuple[Coords, ...]
    weyl_vector_rho: Coords
    fundamental_group_exponent: int

    # --- coordinate arithmetic -------------------------------------------

    def normalize(self, coords) -> Coords:
        """Canonical representative of a weight (identity except for A-kind)."""
        coords = tuple(coords)
        if len(coords) != self.coord_len:
            raise InvalidInputError(
                f"{self.kind}: expected {self.coord_len} coordinates, got {len(coords)}")
        if self.kind.family != "A":
            return coords
        n = self.kind.n
        t = max(coords[n:])
        if t == 0:
            return coords
        return tuple(c - t for c in coords)

    def add(self, w: Coords, v: Coords) -> Coords:
        return self.normalize(tuple(a + b for a, b in zip(w, v)))

    def sub(self, w: Coords, v: Coords) -> Coords:
        return self.normalize(tuple(a - b for a, b in zip(w, v)))

    def scale(self, k: int, w: Coords) -> Coords:
        return self.normalize(tuple(k * c for c in w))

    def zero(self) -> Coords:
        return (0,) * self.coord_len

    def pairing(self, w: Coords, i: int) -> int:
        """<w, alpha_i^vee> for the i-th simple coroot (0-based index)."""
        if not 0 <= i < self.rank:
            raise InvalidInputError(f"simple root index {i} out of range 0..{self.rank - 1}")
        fam = self.kind.family
        if fam == "C":
            n = self.kind.n
            return w[i] - w[i + 1] if i < n - 1 else w[n - 1]
        if fam == "A":
            return w[i] - w[i + 1]
        return w[i]  # E6: canonical coords are the Dynkin labels

    def dynkin_labels(self, w: Coords) -> Coords:
        return tuple(self.pairing(w, i) for i in range(self.rank))

    def reflect(self, i: int, w: Coords) -> Coords:
        """Simple reflection s_i(w) = w - <w, alpha_i^vee> alpha_i."""
        p = self.pairing(w, i)
        if p == 0:
            return self.normalize(w)
        alpha = self.simple_roots[i]
        return self.normalize(tuple(c - p * a for c, a in zip(w, alpha)))

    def inner(self, w, v) -> Fraction:
        """W-invariant inner product (Euclidean for C/A, roots norm 2 for E6)."""
        fam = self.kind.family
        if fam == "C":
            return Fraction(sum(a * b for a, b in zip(w, v)))
        if fam == "A":
            # quotient form: project representatives to the sum-zero hyperplane
            m = 2 * self.kind.n
            sw, sv = sum(w), sum(v)
            return Fraction(sum(a * b for a, b in zip(w, v))) - Fraction(sw * sv, m)
        # E6, Dynkin labels x, y: (x, y) = x^T C^{-1} y
        total = Fraction(0)
        for i in range(6):
            if w[i]:
                total += w[i] * sum(self.cartan_inv[i][j] * v[j] for j in range(6))
        return total

    def root_basis_coords(self, w: Coords) -> tuple[Fraction, ...]:
        """Coefficients of w on the simple roots (may be rational)."""
        dyn = self.dynkin_labels(w)
        # dyn = C^T c  =>  c = (C^{-1})^T dyn
        return tuple(
            sum(self.cartan_inv[j][i] * dyn[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def equal_weights(self, w, v) -> bool:
        return self.normalize(w) == self.normalize(v)

    def __str__(self):
        return str(self.kind)


def _fundamental_weight(kind: RootSystemKind, d: int) -> Coords:
    if kind.family == "C":
        return tuple(1 if i < d else 0 for i in range(kind.n))
    if kind.family == "A":
        return tuple(1 if i < d else 0 for i in range(2 * kind.n))
    return tuple(1 if i == d - 1 else 0 for i in range(6))


def _simple_roots(kind: RootSystemKind) -> tuple[Coords, ...]:
    if kind.family == "C":
        n = kind.n
        roots = []
        for i in range(n - 1):
            r = [0] * n
            r[i], r[i + 1] = 1, -1
            roots.append(tuple(r))
        last = [0] * n
        last[n - 1] = 2
        roots.append(tuple(last))
        return tuple(roots)
    if kind.family == "A":
        m = 2 * kind.n
        roots = []
        for i in range(m - 1):
            r = [0] * m
            r[i], r[i + 1] = 1, -1
            roots.append(tuple(r))
        return tuple(roots)
    return _E6_CARTAN  # alpha_i has Dynkin labels = i-th Cartan row


@lru_cache(maxsize=None)
def build_root_system(kind: RootSystemKind) -> RootSystem:
    """Assemble the full Cartan data for one of the three supported kinds."""
    fam = kind.family
    if fam == "C":
        rank, coord_len, exponent = kind.n, kind.n, 2
    elif fam == "A":
        rank, coord_len, exponent = 2 * kind.n - 1, 2 * kind.n, 2 * kind.n
    else:
        rank, coord_len, exponent = 6, 6, 3

    simple = _simple_roots(kind)

    # probe object with just enough structure for pairing computations
    probe = RootSystem(kind, rank, coord_len, (), (), simple, (), (), (), exponent)
    cartan = tuple(tuple(probe.pairing(simple[i], j) for j in range(rank))
                   for i in range(rank))
    cartan_inv = _invert_exact(cartan)
    probe = RootSystem(kind, rank, coord_len, cartan, cartan_inv, simple, (), (), (), exponent)

    if fam == "A":
        simple = tuple(probe.normalize(r) for r in simple)
        probe = RootSystem(kind, rank, coord_len, cartan, cartan_inv, simple, (), (), (), exponent)

    fundamental = tuple(probe.normalize(_fundamental_weight(kind, d + 1)) for d in range(rank))
    positive = _positive_roots(probe)
    rho = _rho(probe, positive, fundamental)

    return RootSystem(kind, rank, coord_len, cartan, cartan_inv, simple,
                      fundamental, positive, rho, exponent)


def _positive_roots(rs: RootSystem) -> tuple[Coords, ...]:
    """All roots via closure of the simple roots under simple reflections,
    intersected with the positive cone."""
    seen = set(rs.simple_roots)
    frontier = list(seen)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(rs.rank):
                s = rs.reflect(i, r)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    positive = [r for r in seen if all(c >= 0 for c in rs.root_basis_coords(r))]
    return tuple(sorted(positive))


def positive_roots_of(rs: RootSystem) -> list[Coords]:
    return list(rs.positive_roots)


def _rho(rs: RootSystem, positive, fundamental) -> Coords:
    half = [Fraction(0)] * rs.coord_len
    for r in positive:
        for i, c in enumerate(r):
            half[i] += Fraction(c, 2)
    rho = rs.zero()
    for f in fundamental:
        rho = rs.add(rho, f)
    # consistency: half-sum of positive roots == sum of fundamental weights
    diff = [h - r for h, r in zip(half, rho)]
    if rs.kind.family == "A":
        ok = len(set(diff)) == 1  # equal modulo the determinant character
    else:
        ok = all(d == 0 for d in diff)
    if not ok:
        raise AssertionError(f"{rs}: rho consistency check failed")
    return rho


def rho_of(rs: RootSystem) -> Coords:
    return rs.weyl_vector_rho


def convert_coordinates(rs: RootSystem, w, target: str) -> tuple[Fraction, ...]:
    """Change of basis to "epsilon", "dynkin" or "root_basis" coordinates."""
    w = rs.normalize(w)
    if target == "epsilon":
        if rs.kind.family == "E6":
            raise InvalidInputError("epsilon coordinates are not defined for E6")
        return tuple(Fraction(c) for c in w)
    if target == "dynkin":
        return tuple(Fraction(c) for c in rs.dynkin_labels(w))
    if target == "root_basis":
        return rs.root_basis_coords(w)
    raise InvalidInputError(f"unknown coordinate target {target!r}")


def weight_from_dynkin(rs: RootSystem, labels) -> Coords:
    """Weight with the given Dynkin labels, in canonical coordinates."""
    labels = tuple(labels)
    if len(labels) != rs.rank:
        raise InvalidInputError(
            f"{rs.kind}: expected {rs.rank} Dynkin labels, got {len(labels)}")
    w = rs.zero()
    for lab, f in zip(labels, rs.fundamental_weights):
        if lab:
            w = rs.add(w, rs.scale(lab, f))
    return w
