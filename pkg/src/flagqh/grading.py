"""The grading map ``gr`` on basis indices ``(w, lambda)``, its recursive
counterpart ``gr'`` and the lexicographic filtration they induce."""

from __future__ import annotations

from functools import cached_property

from .parabolic import ParabolicSetup, pw_lift_in, wp_wpprime
from .rootsys import Coroot
from .weyl import WeylElement, identity, parabolic_decompose


class GradeVector(tuple):
    """Integer vector in ``Z^{r+1}``; comparison is lexicographic."""

    def __new__(cls, coords):
        return super().__new__(cls, (int(c) for c in coords))

    def __add__(self, other):
        return GradeVector(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other):
        return GradeVector(a - b for a, b in zip(self, other, strict=True))

    def __neg__(self):
        return GradeVector(-a for a in self)

    def __mul__(self, k):
        return GradeVector(k * a for a in self)

    __rmul__ = __mul__

    @property
    def total(self) -> int:
        return sum(self)

    def truncate(self, j: int, k: int) -> "GradeVector":
        """Keep coordinates ``e_j .. e_k`` (1-based, inclusive), zero the rest."""
        return GradeVector(c if j <= m + 1 <= k else 0 for m, c in enumerate(self))

    def __repr__(self):
        return f"GradeVector{tuple(self)}"

    @classmethod
    def basis(cls, size: int, j: int, scale: int = 1) -> "GradeVector":
        """``scale * e_j`` (1-based)."""
        return cls(scale if m == j - 1 else 0 for m in range(size))

    @classmethod
    def zero(cls, size: int) -> "GradeVector":
        return cls([0] * size)


def compare(a, b) -> str:
    """``'<'``, ``'='`` or ``'>'`` in lexicographic order."""
    a, b = tuple(a), tuple(b)
    return "<" if a < b else ">" if a > b else "="


class Grader:
    """Evaluates ``gr`` for one setup, with per-level caches."""

    def __init__(self, setup: ParabolicSetup):
        self.setup = setup
        self.size = setup.r + 1

    @cached_property
    def simple_grades(self) -> tuple[GradeVector, ...]:
        """``gr(id, alpha_i^vee)`` for every simple index ``i``."""
        rs, sums = self.setup.rs, self.setup.level_sums
        out = []
        for i in range(rs.rank):
            out.append(GradeVector(rs.pairing(s, rs.simple_coroot(i)) for s in sums))
        return tuple(out)

    @cached_property
    def level_masks(self) -> tuple[int, ...]:
        masks = [0] * self.size
        for g, lvl in enumerate(self.setup.root_levels):
            masks[lvl - 1] |= 1 << g
        return tuple(masks)

    def coroot_grade(self, lam: Coroot) -> GradeVector:
        out = [0] * self.size
        for i, c in enumerate(lam):
            if c:
                for m, x in enumerate(self.simple_grades[i]):
                    out[m] += c * x
        return GradeVector(out)

    def inversion_grade(self, w: WeylElement) -> GradeVector:
        levels = self.setup.root_levels
        out = [0] * self.size
        for beta in w.inversion_set():
            out[levels[self.setup.rs.root_index[beta]] - 1] += 1
        return GradeVector(out)

    def mask_grade(self, mask: int) -> GradeVector:
        """Inversion part from a bitmask over positive roots."""
        return GradeVector((mask & m).bit_count() for m in self.level_masks)

    def __call__(self, w: WeylElement, lam: Coroot | None = None) -> GradeVector:
        g = self.inversion_grade(w)
        return g if lam is None else g + self.coroot_grade(lam)


_GRADERS: dict[int, Grader] = {}


def grader(setup: ParabolicSetup) -> Grader:
    g = _GRADERS.get(id(setup))
    if g is None or g.setup is not setup:
        g = _GRADERS[id(setup)] = Grader(setup)
    return g


def gr(setup: ParabolicSetup, w: WeylElement, lam: Coroot | None = None) -> GradeVector:
    """``sum_i (|Inv(w) at level i| + sum_{beta at level i} <beta, lam>) e_i``."""
    return grader(setup)(w, lam)


def filtration_leq(setup: ParabolicSetup, index, a) -> bool:
    """Whether the basis element ``q_lam sigma^w`` lies in ``F_a``."""
    w, lam = index
    return tuple(gr(setup, w, lam)) <= tuple(a)


def grade_table(setup: ParabolicSetup) -> dict[int, GradeVector]:
    """``gr(id, alpha_i^vee)`` keyed by 0-based simple index."""
    return dict(enumerate(grader(setup).simple_grades))


# -- recursive grading ---------------------------------------------------------


class RecursiveGrader:
    """``gr'`` built from Peterson-Woodward lifts along the chain.

    Each connected component of ``Delta_P`` is graded by its own chain; the
    roots outside ``Delta_P`` are graded through the lift relative to all of
    ``Delta_P``.  Coordinates are placed by the position of each simple
    root in ``setup.dp``, so the definition does not depend on how the
    components are interleaved.
    """

    def __init__(self, setup: ParabolicSetup):
        self.setup = setup
        self.size = setup.r + 1
        self.pos = {a: k for k, a in enumerate(setup.dp)}
        self.components = setup.components()
        self._simple: dict[int, GradeVector] = {}

    def _e(self, i: int, scale: int = 1) -> GradeVector:
        """``scale * e`` at the slot of simple root ``i`` (outside roots use ``e_{r+1}``)."""
        return GradeVector.basis(self.size, self.pos.get(i, self.setup.r) + 1, scale)

    def _chain_grade(self, w: WeylElement, comp) -> GradeVector:
        """``sum_j l(v_j) e_{comp_j}`` for ``w`` in ``W_comp`` along its own chain."""
        chain = [set(comp[:j]) for j in range(len(comp) + 1)]
        factors = parabolic_decompose(w, chain)
        out = GradeVector.zero(self.size)
        for j, v in zip(range(len(comp), 0, -1), factors):
            out = out + self._e(comp[j - 1], v.length())
        return out

    def grade_at_zero(self, w: WeylElement) -> GradeVector:
        """``gr'(w, 0)``: top factor in ``W^P`` then one factor per component."""
        setup = self.setup
        top = setup.coset_rep(w)
        rest = top.inverse() * w
        out = GradeVector.basis(self.size, self.size, top.length())
        comp_chain = [set()]
        for comp in self.components:
            comp_chain.append(comp_chain[-1] | set(comp))
        factors = parabolic_decompose(rest, comp_chain) if self.components else []
        for comp, v in zip(reversed(self.components), factors):
            out = out + self._chain_grade(v, comp)
        return out

    def simple(self, i: int) -> GradeVector:
        if i not in self._simple:
            self._simple[i] = self._compute_simple(i)
        return self._simple[i]

    def _compute_simple(self, i: int) -> GradeVector:
        setup, rs = self.setup, self.setup.rs
        if i in self.pos:
            comp = next(c for c in self.components if i in c)
            base = comp[: comp.index(i)]
            if not base:
                return self._e(i, 2)
        else:
            base = list(setup.dp)
        lam = rs.simple_coroot(i)
        lam_b, p_prime = pw_lift_in(rs, base, lam)
        u = wp_wpprime(rs, base, p_prime)
        a = {t: lam_b[t] - lam[t] for t in base}
        out = self._e(i, u.length() + 2 + 2 * sum(a.values()))
        if i in self.pos:
            out = out - self._chain_grade(u, comp)
        else:
            out = out - self.grade_at_zero(u)
        for t, c in a.items():
            if c:
                out = out - self.simple(t) * c
        return out

    def __call__(self, w: WeylElement, lam: Coroot | None = None) -> GradeVector:
        out = self.grade_at_zero(w)
        if lam is not None:
            for i, c in enumerate(lam):
                if c:
                    out = out + self.simple(i) * c
        return out


def gr_prime(setup: ParabolicSetup, w: WeylElement, lam: Coroot | None = None) -> GradeVector:
    return RecursiveGrader(setup)(w, lam)


def identity_grade(setup: ParabolicSetup) -> GradeVector:
    return gr(setup, identity(setup.rs))
