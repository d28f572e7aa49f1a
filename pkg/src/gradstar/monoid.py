"""Finitely generated submonoids of Z^k: decidable membership with
certificates, unit detection, and canonical enumeration."""

from __future__ import annotations

from .errors import RegistryError
from .intlin import in_row_lattice, solve_nonneg


class GradingMonoid:
    """Submonoid of Z^k generated by a finite list of integer vectors.

    Cancellative and torsionless by construction. Membership of a vector is
    decided by a bounded nonnegative-combination search whose exhaustion is a
    proof of non-membership; found certificates are cached.
    """

    __slots__ = ("dim", "generators", "_cert_cache", "_levels", "_is_group")

    def __init__(self, dim, generators):
        if dim < 1:
            raise RegistryError("embedding dimension must be positive")
        gens = []
        for g in generators:
            v = tuple(int(a) for a in g)
            if len(v) != dim:
                raise RegistryError(f"generator {g} does not have length {dim}")
            if any(v) and v not in gens:
                gens.append(v)
        if not gens:
            raise RegistryError("at least one nonzero generator is required")
        self.dim = dim
        self.generators = tuple(gens)
        self._cert_cache = {}
        self._levels = [[(0,) * dim]]
        self._is_group = None

    def __repr__(self):
        return f"GradingMonoid(dim={self.dim}, generators={list(self.generators)})"

    def certificate(self, vector):
        """Nonnegative integer combination realizing `vector`, or None."""
        v = tuple(vector)
        if v in self._cert_cache:
            return self._cert_cache[v]
        if not in_row_lattice(self.generators, v):
            cert = None
        else:
            cert = solve_nonneg(self.generators, v)
        self._cert_cache[v] = cert
        return cert

    def contains(self, vector):
        return self.certificate(vector) is not None

    def group_contains(self, vector):
        """Membership in the quotient group <Gamma> = Z-span of the generators."""
        return in_row_lattice(self.generators, tuple(vector))

    def is_group(self):
        """True when every generator's negation also lies in the monoid."""
        if self._is_group is None:
            self._is_group = all(
                self.contains(tuple(-a for a in g)) for g in self.generators
            )
        return self._is_group

    def level(self, n):
        """Degrees reachable with exactly <= n generator applications, as
        canonically ordered levels (new degrees only per level)."""
        while len(self._levels) <= n:
            seen = set()
            for lev in self._levels:
                seen.update(lev)
            frontier = set()
            for v in self._levels[-1]:
                for g in self.generators:
                    w = tuple(a + b for a, b in zip(v, g))
                    if w not in seen:
                        frontier.add(w)
            self._levels.append(sorted(frontier))
        return self._levels[n]

    def enumerate(self, max_level):
        """All degrees reachable within max_level applications, level order."""
        out = []
        for n in range(max_level + 1):
            out.extend(self.level(n))
        return out

    def ball(self, radius):
        """Degrees in the monoid with 1-norm <= radius, canonical order."""
        out = []
        seen = set()
        level = 0
        # every generator has 1-norm >= 1, so level > radius cannot help
        while level <= radius:
            for v in self.level(level):
                if v not in seen and sum(abs(a) for a in v) <= radius:
                    seen.add(v)
                    out.append(v)
            level += 1
        return sorted(out, key=lambda v: (sum(abs(a) for a in v), v))
