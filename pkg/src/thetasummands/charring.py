"""The Weyl-invariant character ring in the orbit-sum basis.

A CharElem is a finite integer combination of orbit sums We_mu (mu dominant);
products are computed by convolving full orbit expansions, multiplicities of
irreducible characters by the Freudenthal recursion, with the Weyl character
formula kept as an independent small-rank oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .dominance import dominance_compare
from .errors import InvalidInputError, ResourceCapError
from .rootsys import Coords, RootSystem
from .weyl import dominant_projection, is_dominant, orbit, signed_orbit, weyl_group_order

DEFAULT_CAP = 10**8  # pairwise additions in a convolution
WEYL_FORMULA_GROUP_CAP = 10**4  # |W| above which the direct formula refuses


@dataclass(frozen=True)
class CharElem:
    """Element of Z[X]^W in the orbit basis: sum of coeffs[mu] * We_mu."""

    system: RootSystem
    coeffs: dict[Coords, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mu, c in self.coeffs.items():
            if c == 0:
                continue
            mu = self.system.normalize(mu)
            if not is_dominant(self.system, mu):
                raise InvalidInputError(f"orbit-basis key {mu} is not dominant")
            clean[mu] = clean.get(mu, 0) + c
        object.__setattr__(self, "coeffs", {m: c for m, c in clean.items() if c})

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_same_system(self, other: "CharElem"):
        if self.system is not other.system:
            raise InvalidInputError("mixing characters from different root systems")

    def __add__(self, other: "CharElem") -> "CharElem":
        self._check_same_system(other)
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, 0) + c
        return CharElem(self.system, out)

    def __sub__(self, other: "CharElem") -> "CharElem":
        return self + other.scale(-1)

    def scale(self, k: int) -> "CharElem":
        return CharElem(self.system, {mu: k * c for mu, c in self.coeffs.items()})

    def __mul__(self, other: "CharElem") -> "CharElem":
        return multiply(self, other)

    def expand(self) -> dict[Coords, int]:
        """Full weight multiset: every orbit element with its coefficient."""
        full: dict[Coords, int] = {}
        for mu, c in self.coeffs.items():
            for w in orbit(self.system, mu).elements:
                full[w] = full.get(w, 0) + c
        return {w: c for w, c in full.items() if c}

    def dimension(self) -> int:
        return sum(c * orbit(self.system, mu).size for mu, c in self.coeffs.items())

    def to_json(self) -> list[dict]:
        return [{"weight": list(mu), "coeff": c}
                for mu, c in sorted(self.coeffs.items())]

    def __eq__(self, other):
        return (isinstance(other, CharElem) and self.system == other.system
                and self.coeffs == other.coeffs)


# a virtual character is the same datum with negative coefficients allowed
VirtualChar = CharElem


def orbit_char(rs: RootSystem, mu) -> CharElem:
    """The basis element We_mu."""
    return CharElem(rs, {rs.normalize(mu): 1})


def unit_char(rs: RootSystem) -> CharElem:
    return orbit_char(rs, rs.zero())


def char_from_json(rs: RootSystem, data) -> CharElem:
    return CharElem(rs, {tuple(entry["weight"]): entry["coeff"] for entry in data})


def multiply(a: CharElem, b: CharElem, cap: int = DEFAULT_CAP) -> CharElem:
    """Product in Z[X]^W by convolution of the full orbit expansions."""
    a._check_same_system(b)
    rs = a.system
    fa, fb = a.expand(), b.expand()
    if len(fa) * len(fb) > cap:
        raise ResourceCapError(
            f"convolution needs {len(fa) * len(fb)} pairwise additions, cap is {cap}")
    acc: dict[Coords, int] = {}
    for w1, c1 in fa.items():
        for w2, c2 in fb.items():
            w = rs.add(w1, w2)
            acc[w] = acc.get(w, 0) + c1 * c2
    coeffs = {w: c for w, c in acc.items() if c and is_dominant(rs, w)}
    return CharElem(rs, coeffs)


# --- weight systems and Freudenthal multiplicities --------------------------


def weight_system(rs: RootSystem, lam, cap: int = DEFAULT_CAP) -> set[Coords]:
    """All weights of the irreducible representation with highest weight lam,
    by downward closure under simple-root subtraction."""
    lam = rs.normalize(lam)
    if not is_dominant(rs, lam):
        raise InvalidInputError(f"weight_system expects a dominant weight, got {lam}")
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for alpha in rs.simple_roots:
                v = rs.sub(w, alpha)
                if v in seen:
                    continue
                dom, _ = dominant_projection(rs, v)
                if dominance_compare(rs, lam, dom).comparable:
                    seen.add(v)
                    nxt.append(v)
                    if len(seen) > cap:
                        raise ResourceCapError(
                            f"weight system of {lam} exceeds cap {cap}")
        frontier = nxt
    return seen


def freudenthal_character(rs: RootSystem, lam, cap: int = DEFAULT_CAP) -> CharElem:
    """ch V_lam in the orbit basis: coeffs[mu] = m_lam(mu) for dominant mu."""
    return _freudenthal_cached(rs, rs.normalize(lam), cap)


@lru_cache(maxsize=4096)
def _freudenthal_cached(rs: RootSystem, lam: Coords, cap: int) -> CharElem:
    weights = weight_system(rs, lam, cap)
    strata: dict[Coords, int] = {}  # dominant rep -> height of lam - mu
    for w in weights:
        dom, _ = dominant_projection(rs, w)
        if dom not in strata:
            wit = dominance_compare(rs, lam, dom)
            strata[dom] = sum(wit.root_coefficients)
    rho = rs.weyl_vector_rho
    norm_top = rs.inner(rs.add(lam, rho), rs.add(lam, rho))
    mult: dict[Coords, int] = {lam: 1}
    for mu in sorted(strata, key=lambda m: (strata[m], m)):
        if mu == lam:
            continue
        total = Fraction(0)
        for alpha in rs.positive_roots:
            k = 1
            while True:
                nu = rs.add(mu, rs.scale(k, alpha))
                if nu not in weights:
                    break
                dom, _ = dominant_projection(rs, nu)
                total += mult[dom] * rs.inner(nu, alpha)
                k += 1
        denom = norm_top - rs.inner(rs.add(mu, rho), rs.add(mu, rho))
        m = 2 * total / denom
        if m.denominator != 1 or m <= 0:
            raise AssertionError(f"non-integral multiplicity {m} at {mu}")
        mult[mu] = int(m)
    return CharElem(rs, mult)


def weyl_dimension(rs: RootSystem, lam) -> int:
    """dim V_lam = prod over positive roots of (lam+rho, a) / (rho, a)."""
    lam = rs.normalize(lam)
    if not is_dominant(rs, lam):
        raise InvalidInputError(f"weyl_dimension expects a dominant weight, got {lam}")
    rho = rs.weyl_vector_rho
    top = rs.add(lam, rho)
    dim = Fraction(1)
    for alpha in rs.positive_roots:
        dim *= rs.inner(top, alpha) / rs.inner(rho, alpha)
    if dim.denominator != 1:
        raise AssertionError(f"non-integral Weyl dimension {dim} for {lam}")
    return int(dim)


def weyl_character_direct(rs: RootSystem, lam,
                          group_cap: int = WEYL_FORMULA_GROUP_CAP) -> CharElem:
    """ch V_lam by the alternating-sum formula and exact polynomial division.

    Small-rank oracle only; refuses when |W| exceeds group_cap.
    """
    lam = rs.normalize(lam)
    if not is_dominant(rs, lam):
        raise InvalidInputError(f"expected a dominant weight, got {lam}")
    if weyl_group_order(rs) > group_cap:
        raise ResourceCapError(
            f"|W| = {weyl_group_order(rs)} exceeds the oracle cap {group_cap}")
    rho = rs.weyl_vector_rho
    if rs.kind.family == "A":
        # work with honest Z^{2n} lifts: each signed orbit lives on a
        # fixed-coordinate-sum hyperplane, so division happens in Z[Z^{2n}]
        numer = _signed_orbit_poly_lifted(rs, rs.add(lam, rho))
        denom = _signed_orbit_poly_lifted(rs, rho)
    else:
        numer = {w: s for w, s in signed_orbit(rs, rs.add(lam, rho)).items()}
        denom = {w: s for w, s in signed_orbit(rs, rho).items()}
    quotient = _laurent_divide(numer, denom)
    coeffs = {}
    for expo, c in quotient.items():
        w = rs.normalize(expo)
        if is_dominant(rs, w):
            coeffs[w] = coeffs.get(w, 0) + c
    return CharElem(rs, coeffs)


def _signed_orbit_poly_lifted(rs: RootSystem, v: Coords) -> dict[Coords, int]:
    """Signed Weyl orbit of an A-kind weight, lifted to permutations of a
    fixed integer vector in Z^{2n}."""
    # the normalized representatives of a permutation orbit may differ by
    # multiples of det; re-lift each to the entry multiset of v itself
    base = tuple(sorted(v))
    out = {}
    for w, s in signed_orbit(rs, v).items():
        shift = base[0] - min(w)
        lift = tuple(c + shift for c in w)
        if tuple(sorted(lift)) != base:
            raise AssertionError("lift does not permute the base multiset")
        out[lift] = s
    return out


def _laurent_divide(numer: dict[Coords, int], denom: dict[Coords, int]) -> dict[Coords, int]:
    """Exact division in the group ring Z[Z^k] with lex leading terms."""
    rem = dict(numer)
    lead_d = max(denom)
    if denom[lead_d] != 1:
        raise AssertionError("denominator is not monic in lex order")
    quot: dict[Coords, int] = {}
    while rem:
        lead_r = max(rem)
        shift = tuple(a - b for a, b in zip(lead_r, lead_d))
        c = rem[lead_r]
        quot[shift] = quot.get(shift, 0) + c
        for expo, dcoef in denom.items():
            key = tuple(a + b for a, b in zip(shift, expo))
            val = rem.get(key, 0) - c * dcoef
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    return quot


# --- transition to the irreducible basis -----------------------------------


@dataclass(frozen=True)
class IrrDecomposition:
    """Coefficients on the irreducible characters ch V_lam."""

    system: RootSystem
    coeffs: dict[Coords, int]

    def to_char(self, cap: int = DEFAULT_CAP) -> CharElem:
        out = CharElem(self.system)
        for lam, c in self.coeffs.items():
            out = out + freudenthal_character(self.system, lam, cap).scale(c)
        return out

    def dimension(self) -> int:
        return sum(c * weyl_dimension(self.system, lam)
                   for lam, c in self.coeffs.items())

    def to_json(self) -> list[dict]:
        return [{"weight": list(mu), "coeff": c}
                for mu, c in sorted(self.coeffs.items())]

    def __eq__(self, other):
        return (isinstance(other, IrrDecomposition) and self.system == other.system
                and self.coeffs == other.coeffs)


def decompose_into_irreducibles(x: CharElem, cap: int = DEFAULT_CAP) -> IrrDecomposition:
    """Unitriangular stripping from dominance-maximal support weights."""
    rs = x.system
    remainder = x
    out: dict[Coords, int] = {}
    while not remainder.is_zero:
        support = list(remainder.coeffs)
        maximal = [mu for mu in support
                   if not any(nu != mu and dominance_compare(rs, nu, mu).comparable
                              for nu in support)]
        lam = min(maximal)  # deterministic tie-break
        c = remainder.coeffs[lam]
        out[lam] = out.get(lam, 0) + c
        remainder = remainder - freudenthal_character(rs, lam, cap).scale(c)
    return IrrDecomposition(rs, {m: c for m, c in out.items() if c})


def tensor_decompose(rs: RootSystem, lam, mu, cap: int = DEFAULT_CAP) -> IrrDecomposition:
    """Decomposition of V_lam (x) V_mu into irreducibles."""
    a = freudenthal_character(rs, lam, cap)
    b = freudenthal_character(rs, mu, cap)
    dec = decompose_into_irreducibles(multiply(a, b, cap), cap)
    if dec.dimension() != weyl_dimension(rs, lam) * weyl_dimension(rs, mu):
        raise AssertionError("tensor decomposition does not preserve dimension")
    return dec
