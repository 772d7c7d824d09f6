"""Finite crystallographic root systems with exact integer arithmetic.

Conventions (used everywhere in the package):

* Roots are integer tuples over the simple roots, coroots are integer tuples
  over the simple coroots.  Indices are 0-based internally and 1-based in
  every user-facing string.
* ``cartan[i][j] = <alpha_j, alpha_i^vee>``.  For B2 this gives
  ``cartan[0][1] = <alpha_2, alpha_1^vee> = -1`` and
  ``cartan[1][0] = <alpha_1, alpha_2^vee> = -2`` (alpha_2 short).
* Standard systems use Bourbaki numbering.  :meth:`RootSystem.relabel`
  produces the same system with simple roots listed in another order.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import cached_property

from .errors import ConfigurationError, DomainError, UsageError

Root = tuple[int, ...]
Coroot = tuple[int, ...]

_VALID_RANKS = {"E": {6, 7, 8}, "F": {4}, "G": {2}}


def _bourbaki_diagram(kind: str, n: int) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Squared lengths and edges (0-based) of the Bourbaki Dynkin diagram."""
    one, two = Fraction(1), Fraction(2)
    if kind == "A":
        return [two] * n, [(i, i + 1) for i in range(n - 1)]
    if kind == "B":
        return [two] * (n - 1) + [one], [(i, i + 1) for i in range(n - 1)]
    if kind == "C":
        return [one] * (n - 1) + [two], [(i, i + 1) for i in range(n - 1)]
    if kind == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        return [two] * n, edges
    if kind == "E":
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return [two] * n, edges
    if kind == "F":
        return [two, two, one, one], [(0, 1), (1, 2), (2, 3)]
    if kind == "G":
        return [Fraction(2, 3), two], [(0, 1)]
    raise ConfigurationError(f"unknown Dynkin type {kind!r}")


def _form_from_diagram(norms, edges) -> list[list[Fraction]]:
    n = len(norms)
    form = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        form[i][i] = norms[i]
    for i, j in edges:
        # -1 between roots of different lengths (double/triple bond), -L/2 otherwise
        value = -min(norms[i], norms[j]) / 2 if norms[i] == norms[j] else Fraction(-1)
        form[i][j] = form[j][i] = value
    return form


def build_root_system(dynkin_type: str, rank: int) -> "RootSystem":
    """Root system of the given type and rank in Bourbaki numbering."""
    kind = str(dynkin_type).upper()
    if kind not in "ABCDEFG" or len(kind) != 1:
        raise ConfigurationError(f"unknown Dynkin type {dynkin_type!r}")
    if not isinstance(rank, int) or rank < 1:
        raise ConfigurationError(f"rank must be a positive integer, got {rank!r}")
    if kind in _VALID_RANKS and rank not in _VALID_RANKS[kind]:
        raise ConfigurationError(f"type {kind} has no rank {rank}")
    minimum = {"B": 2, "C": 2, "D": 3}.get(kind, 1)
    if rank < minimum:
        raise ConfigurationError(f"type {kind} needs rank >= {minimum}")
    norms, edges = _bourbaki_diagram(kind, rank)
    return RootSystem(f"{kind}{rank}", _form_from_diagram(norms, edges))


class RootSystem:
    """Root system determined by a symmetric bilinear form on simple roots.

    The form is normalised so that long roots have squared length 2; it only
    serves to rescale roots into coroots.  ``labels`` records, for each
    simple root, its index in the system this one was derived from.
    """

    def __init__(self, name: str, form, labels: tuple[int, ...] | None = None):
        self.name = name
        self.rank = n = len(form)
        self.form = tuple(tuple(Fraction(x) for x in row) for row in form)
        self.labels = tuple(range(n)) if labels is None else tuple(labels)
        cartan = []
        for i in range(n):
            row = []
            for j in range(n):
                value = 2 * self.form[i][j] / self.form[i][i]
                if value.denominator != 1:
                    raise ConfigurationError("form does not define a crystallographic system")
                row.append(int(value))
            cartan.append(tuple(row))
        self.cartan = tuple(cartan)
        for i in range(n):
            if self.cartan[i][i] != 2 or any(self.cartan[i][j] > 0 for j in range(n) if j != i):
                raise ConfigurationError("not a Cartan matrix")
        self.positive_roots = self._close_under_reflections()
        self.root_index = {beta: k for k, beta in enumerate(self.positive_roots)}

    @property
    def dynkin_type(self) -> str:
        return self.name[0] if self.name[:1] in "ABCDEFG" else self.name

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    # -- construction ----------------------------------------------------
    def _close_under_reflections(self) -> tuple[Root, ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for i in range(n):
                image = self.reflect_root(i, beta)
                if all(c >= 0 for c in image) and image not in seen:
                    seen.add(image)
                    queue.append(image)
        return tuple(sorted(seen, key=lambda b: (sum(b), b)))

    def relabel(self, order, name: str | None = None) -> "RootSystem":
        """Same system with new simple root ``k`` equal to old root ``order[k]``."""
        order = tuple(order)
        if sorted(order) != list(range(self.rank)):
            raise ConfigurationError(f"{order} is not a permutation of the simple roots")
        form = [[self.form[a][b] for b in order] for a in order]
        labels = tuple(self.labels[a] for a in order)
        return RootSystem(name or self.name, form, labels)

    def subsystem(self, indices, name: str | None = None) -> "RootSystem":
        """Root subsystem spanned by the given simple roots, in the given order."""
        indices = tuple(indices)
        if not indices:
            raise UsageError("empty subsystem")
        form = [[self.form[a][b] for b in indices] for a in indices]
        labels = tuple(self.labels[a] for a in indices)
        return RootSystem(name or f"{self.name}|{','.join(str(i + 1) for i in indices)}", form, labels)

    # -- arithmetic --------------------------------------------------------
    def _check(self, vec, what="vector") -> tuple[int, ...]:
        if len(vec) != self.rank:
            raise UsageError(f"{what} {tuple(vec)} does not belong to {self.name}")
        return tuple(vec)

    def pairing(self, beta: Root, lam: Coroot) -> int:
        """``<beta, lam>`` extended bilinearly from the Cartan matrix."""
        beta, lam = self._check(beta, "root"), self._check(lam, "coroot")
        c = self.cartan
        return sum(lam[i] * beta[j] * c[i][j] for i in range(self.rank) if lam[i] for j in range(self.rank) if beta[j])

    def norm(self, beta) -> Fraction:
        f = self.form
        return sum((beta[i] * beta[j] * f[i][j] for i in range(self.rank) for j in range(self.rank)), Fraction(0))

    def is_root(self, beta) -> bool:
        beta = tuple(beta)
        return beta in self.root_index or tuple(-x for x in beta) in self.root_index

    def coroot_of(self, gamma: Root) -> Coroot:
        """``gamma^vee`` obtained by rescaling with root lengths."""
        gamma = self._check(gamma, "root")
        if not self.is_root(gamma):
            raise DomainError(f"{gamma} is not a root of {self.name}")
        size = self.norm(gamma)
        out = []
        for j, c in enumerate(gamma):
            value = c * self.form[j][j] / size
            out.append(int(value))
        return tuple(out)

    def root_of_coroot(self, lam: Coroot) -> Root:
        """Inverse of :meth:`coroot_of`."""
        lam = self._check(lam, "coroot")
        # (lam, lam) computed in the dual form where alpha_j^vee has length 4/|alpha_j|^2
        size = sum(
            (lam[i] * lam[j] * 4 * self.form[i][j] / (self.form[i][i] * self.form[j][j])
             for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )
        root = tuple(int(c * 4 / (self.form[j][j] * size)) for j, c in enumerate(lam))
        if not self.is_root(root) or self.coroot_of(root) != lam:
            raise DomainError(f"{lam} is not a coroot of {self.name}")
        return root

    def reflect_coroot(self, i: int, lam: Coroot) -> Coroot:
        """``s_i(lam) = lam - <alpha_i, lam> alpha_i^vee``."""
        lam = self._check(lam, "coroot")
        k = sum(lam[m] * self.cartan[m][i] for m in range(self.rank))
        return lam[:i] + (lam[i] - k,) + lam[i + 1:]

    def reflect_root(self, i: int, beta: Root) -> Root:
        """``s_i(beta) = beta - <beta, alpha_i^vee> alpha_i``."""
        beta = self._check(beta, "root")
        k = sum(beta[j] * self.cartan[i][j] for j in range(self.rank))
        return beta[:i] + (beta[i] - k,) + beta[i + 1:]

    def two_rho_pairing(self, lam: Coroot) -> int:
        """``<2 rho, lam>``; equals twice the sum of the coordinates."""
        lam = self._check(lam, "coroot")
        return 2 * sum(lam)

    # -- derived data ------------------------------------------------------
    @cached_property
    def positive_coroots(self) -> tuple[Coroot, ...]:
        return tuple(self.coroot_of(beta) for beta in self.positive_roots)

    def simple_root(self, i: int) -> Root:
        return tuple(int(i == j) for j in range(self.rank))

    simple_coroot = simple_root

    def positive_roots_in(self, indices) -> tuple[Root, ...]:
        """Positive roots supported on the given simple roots."""
        allowed = set(indices)
        return tuple(b for b in self.positive_roots if all(c == 0 or j in allowed for j, c in enumerate(b)))

    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def coxeter_number(self) -> int:
        return 2 * len(self.positive_roots) // self.rank

    def neighbours(self, i: int) -> set[int]:
        return {j for j in range(self.rank) if j != i and self.cartan[i][j] != 0}

    def components(self, indices) -> list[list[int]]:
        """Connected components of the Dynkin diagram restricted to ``indices``.

        Each component keeps the relative order of ``indices``.
        """
        indices = list(indices)
        remaining = set(indices)
        comps = []
        for start in indices:
            if start not in remaining:
                continue
            comp, stack = {start}, [start]
            remaining.discard(start)
            while stack:
                a = stack.pop()
                for b in self.neighbours(a) & remaining:
                    remaining.discard(b)
                    comp.add(b)
                    stack.append(b)
            comps.append([i for i in indices if i in comp])
        return comps

    def describe(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(b) for b in self.positive_roots],
        }
