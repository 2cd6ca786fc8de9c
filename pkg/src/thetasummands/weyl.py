"""Weyl group actions: reflections, dominant projection, orbit enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInputError, ResourceCapError
from .rootsys import Coords, RootSystem

DEFAULT_ORBIT_CAP = 10**6


def simple_reflection(rs: RootSystem, i: int, w) -> Coords:
    """Reflection in the i-th simple root (0-based index)."""
    return rs.reflect(i, rs.normalize(w))


def is_dominant(rs: RootSystem, w) -> bool:
    w = rs.normalize(w)
    return all(rs.pairing(w, i) >= 0 for i in range(rs.rank))


def dominant_projection(rs: RootSystem, w) -> tuple[Coords, int]:
    """Unique dominant weight in the orbit of w, plus the number of simple
    reflections applied (reflect at the first negative Dynkin label)."""
    w = rs.normalize(w)
    length = 0
    while True:
        for i in range(rs.rank):
            if rs.pairing(w, i) < 0:
                w = rs.reflect(i, w)
                length += 1
                break
        else:
            return w, length


@dataclass(frozen=True)
class OrbitSum:
    """Full Weyl group orbit of a dominant weight, in sorted order."""

    system: RootSystem
    dominant_rep: Coords
    elements: tuple[Coords, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


def orbit(rs: RootSystem, lam, cap: int = DEFAULT_ORBIT_CAP) -> OrbitSum:
    """Breadth-first closure under simple reflections; any orbit member may
    be passed in, the stored representative is the dominant one."""
    lam, _ = dominant_projection(rs, lam)
    return _orbit_cached(rs, lam, cap)


@lru_cache(maxsize=4096)
def _orbit_cached(rs: RootSystem, lam: Coords, cap: int) -> OrbitSum:
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rs.rank):
                v = rs.reflect(i, w)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        if len(seen) > cap:
            raise ResourceCapError(
                f"orbit of {lam} in {rs} exceeds the cap of {cap} elements")
        frontier = nxt
    return OrbitSum(rs, lam, tuple(sorted(seen)))


def orbit_size(rs: RootSystem, lam, cap: int = DEFAULT_ORBIT_CAP) -> int:
    return orbit(rs, lam, cap).size


@lru_cache(maxsize=None)
def weyl_group_order(rs: RootSystem) -> int:
    """|W|, computed as the orbit size of the regular weight rho."""
    return orbit(rs, rs.weyl_vector_rho).size


def signed_orbit(rs: RootSystem, v) -> dict[Coords, int]:
    """Map w(v) -> sign(w) for a regular weight v (free orbit).

    Used by the Weyl character formula oracle; raises if the orbit is not
    free (two group elements reaching the same point with opposite parity).
    """
    v = rs.normalize(v)
    signs = {v: 1}
    frontier = [v]
    while frontier:
        nxt = []
        for w in frontier:
            s = signs[w]
            for i in range(rs.rank):
                u = rs.reflect(i, w)
                if u == w:
                    raise InvalidInputError(f"{v} is not regular (fixed by s_{i})")
                if u in signs:
                    if signs[u] != -s:
                        raise InvalidInputError(f"{v} is not regular (sign clash)")
                else:
                    signs[u] = -s
                    nxt.append(u)
        frontier = nxt
    return signs
