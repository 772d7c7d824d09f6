"""Ordered parabolic setups, the Peterson-Woodward lift, the map psi and the
lattice of null coroots.

A :class:`ParabolicSetup` fixes an ambient root system and an ordered tuple
``dp = (a_1, ..., a_r)`` of simple indices.  The chain
``Delta_j = {a_1, ..., a_j}`` drives the grading.  Named presets place the
simple roots of the ambient system in the order used by the case tags
``C1B, C1C, C2, C4, C5, C7, C9, C10``.  Inside a preset, simple root ``k``
of the (relabelled) ambient system is the k-th root of that ordering; the
Bourbaki number of each root is kept in ``rs.labels``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import ConfigurationError, ConsistencyError, UsageError
from .lattice import hermite_rows, integer_kernel, inverse_rational, reduce_mod, smith_invariants
from .rootsys import Coroot, RootSystem, build_root_system
from .weyl import WeylElement, identity, is_min_coset_rep, longest_element, min_coset_rep

CASE_TAGS = ("C1B", "C1C", "C2", "C4", "C5", "C7", "C9", "C10")

# Bourbaki numbers of the simple roots in case order: the first r entries are
# Delta_P, followed by the boundary roots and then any remaining roots.
_EXCEPTIONAL_ORDERS = {
    ("C4", 6): ("E", (6, 5, 4, 3, 1, 2, 7, 8)),
    ("C4", 7): ("E", (7, 6, 5, 4, 3, 1, 2, 8)),
    ("C5", 5): ("E", (1, 3, 4, 2, 5, 6, 7, 8)),
    ("C7", 4): ("E", (5, 4, 2, 3, 1, 6, 7, 8)),
    ("C7", 5): ("E", (6, 5, 4, 2, 3, 1, 7, 8)),
    ("C7", 6): ("E", (7, 6, 5, 4, 2, 3, 1, 8)),
    ("C7", 7): ("E", (8, 7, 6, 5, 4, 2, 3, 1)),
    ("C9", 2): ("F", (2, 3, 4, 1)),
    ("C9", 3): ("F", (1, 2, 3, 4)),
    ("C10", 3): ("F", (4, 3, 2, 1)),
}


def _minimal_exceptional_rank(order, r):
    """Smallest E-type rank containing Delta_P and its boundary in E8."""
    e8 = build_root_system("E", 8)
    inside = {i - 1 for i in order[:r]}
    need = set(inside)
    for i in inside:
        need |= e8.neighbours(i)
    return max(6, max(need) + 1)


def preset_order(case: str, r: int, ambient_rank: int | None = None) -> tuple[str, int, tuple[int, ...]]:
    """``(type, rank, order)`` of a named preset; ``order`` is 1-based Bourbaki."""
    case = case.upper()
    if case in ("C1B", "C1C", "C2"):
        kind = {"C1B": "B", "C1C": "C", "C2": "D"}[case]
        low = {"C1B": 2, "C1C": 2, "C2": 3}[case]
        if r < low:
            raise ConfigurationError(f"{case} needs r >= {low}")
        n = r + 1 if ambient_rank is None else ambient_rank
        if n < r + 1:
            raise ConfigurationError(f"{case} with r={r} needs ambient rank >= {r + 1}")
        order = tuple(range(n - r + 1, n + 1)) + tuple(range(n - r, 0, -1))
        return kind, n, order
    key = (case, r)
    if key not in _EXCEPTIONAL_ORDERS:
        raise ConfigurationError(f"no preset for case {case} with r={r}")
    kind, full = _EXCEPTIONAL_ORDERS[key]
    if kind == "F":
        if ambient_rank not in (None, 4):
            raise ConfigurationError("F4 presets have ambient rank 4")
        return kind, 4, full
    n = _minimal_exceptional_rank(full, r) if ambient_rank is None else ambient_rank
    if n not in (6, 7, 8):
        raise ConfigurationError("E-type presets need ambient rank 6, 7 or 8")
    order = tuple(i for i in full if i <= n)
    if sorted(order[:r]) != sorted(i for i in full[:r]) or len(order) != n:
        raise ConfigurationError(f"{case} r={r} is not realisable in E{n}")
    return kind, n, order


@dataclass(frozen=True)
class NullLattice:
    """Null coroots ``L_B`` and their image ``L`` in ``Q^vee / Q_P^vee``."""

    lb_basis: tuple[tuple[int, ...], ...]
    l_basis: tuple[tuple[int, ...], ...]
    invariants: tuple[int, ...]

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariants:
            out *= d
        return out


@dataclass(frozen=True)
class LiftRow:
    rep: Coroot
    lam_b: Coroot
    u: WeylElement
    k: int


class ParabolicSetup:
    """Ambient root system plus an ordered parabolic subset ``dp``."""

    def __init__(self, rs: RootSystem, dp, case: str | None = None, name: str | None = None):
        dp = tuple(dp)
        if len(set(dp)) != len(dp):
            raise ConfigurationError("parabolic indices must be distinct")
        if any(not 0 <= i < rs.rank for i in dp):
            raise ConfigurationError(f"parabolic index out of range for {rs.name}")
        self.rs = rs
        self.dp = dp
        self.r = len(dp)
        self.n = rs.rank
        self.outside = tuple(i for i in range(rs.rank) if i not in dp)
        self.chain = [frozenset(dp[:j]) for j in range(self.r + 1)] + [frozenset(range(rs.rank))]
        self.boundary = tuple(i for i in self.outside if rs.neighbours(i) & set(dp))
        self.case = case or detect_case(rs, dp)
        self.name = name or f"{rs.name}[{','.join(str(i + 1) for i in dp)}]"

    def __repr__(self):
        return f"ParabolicSetup({self.name}, case={self.case})"

    def describe(self) -> dict:
        return {
            "ambient": self.rs.name,
            "bourbaki_labels": [i + 1 for i in self.rs.labels],
            "parabolic": [i + 1 for i in self.dp],
            "case": self.case,
            "boundary": [i + 1 for i in self.boundary],
        }

    # -- chain data ---------------------------------------------------------
    @cached_property
    def root_levels(self) -> tuple[int, ...]:
        """Level ``j`` (1..r+1) of every positive root: smallest ``Delta_j`` containing it."""
        pos = {a: k for k, a in enumerate(self.dp)}
        out = []
        for beta in self.rs.positive_roots:
            lvl = 0
            for i, c in enumerate(beta):
                if c:
                    lvl = max(lvl, pos.get(i, self.r) + 1)
            out.append(lvl)
        return tuple(out)

    @cached_property
    def level_sums(self) -> tuple[tuple[int, ...], ...]:
        """Sum of the positive roots of each level 1..r+1 (index 0 is level 1)."""
        sums = [[0] * self.n for _ in range(self.r + 1)]
        for beta, lvl in zip(self.rs.positive_roots, self.root_levels):
            for i, c in enumerate(beta):
                sums[lvl - 1][i] += c
        return tuple(tuple(s) for s in sums)

    @cached_property
    def w_p(self) -> WeylElement:
        return longest_element(self.rs, self.dp)

    def is_in_wp_quotient(self, w: WeylElement) -> bool:
        """True if ``w`` is a minimal representative of ``w W_P``."""
        return is_min_coset_rep(w, self.dp)

    def coset_rep(self, w: WeylElement) -> WeylElement:
        return min_coset_rep(w, self.dp)

    def components(self) -> list[list[int]]:
        return self.rs.components(self.dp)

    # -- coroot classes -----------------------------------------------------
    def coset_key(self, lam: Coroot) -> tuple[int, ...]:
        """Coordinates outside ``Delta_P``: a complete invariant of ``lam + Q_P^vee``."""
        return tuple(lam[i] for i in self.outside)

    def coset_rep_coroot(self, lam: Coroot) -> Coroot:
        """Representative of ``lam + Q_P^vee`` with all ``Delta_P`` coordinates zero."""
        inside = set(self.dp)
        return tuple(0 if i in inside else c for i, c in enumerate(lam))

    def pw_lift(self, lam: Coroot) -> tuple[Coroot, frozenset[int]]:
        return pw_lift_in(self.rs, self.dp, lam)

    def lift_element(self, lam: Coroot) -> tuple[Coroot, WeylElement]:
        """``(lambda_B, w_P w_P')`` for the class of ``lam``."""
        lam_b, p_prime = self.pw_lift(lam)
        return lam_b, _wp_wpprime(self.rs, self.dp, p_prime)

    def psi(self, lam: Coroot, w: WeylElement) -> tuple[WeylElement, Coroot]:
        """Basis index ``(w w_P w_P', lambda_B)`` of the image of ``q_lam sigma^w``."""
        if not self.is_in_wp_quotient(w):
            raise UsageError(f"{w!r} is not a minimal coset representative for W_P")
        lam_b, u = self.lift_element(lam)
        return w * u, lam_b

    def psi_preimage(self, w: WeylElement, lam: Coroot) -> tuple[WeylElement, Coroot] | None:
        """``(v, lambda_P)`` with ``psi(q_lambda_P sigma^v) = q_lam sigma^w``, or ``None``."""
        lam_b, u = self.lift_element(lam)
        if lam_b != tuple(lam):
            return None
        v = self.coset_rep(w)
        if v * u != w:
            return None
        return v, self.coset_rep_coroot(lam)

    # -- null coroots -------------------------------------------------------
    def is_virtual_null(self, lam: Coroot) -> bool:
        return all(self.rs.pairing(self.rs.simple_root(i), lam) == 0 for i in self.dp)

    def is_virtual_null_class(self, lam: Coroot) -> bool:
        """Whether the class of ``lam`` lies in ``L`` (its lift is null)."""
        lam_b, _ = self.pw_lift(lam)
        return self.is_virtual_null(lam_b)

    @cached_property
    def null_lattice(self) -> NullLattice:
        rs = self.rs
        rows = [[rs.cartan[k][i] for k in range(self.n)] for i in self.dp]
        lb = integer_kernel(rows) if rows else [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        proj = hermite_rows([[v[i] for i in self.outside] for v in lb])
        inv = tuple(d for d in smith_invariants(proj) if d != 1) if proj else ()
        return NullLattice(tuple(map(tuple, lb)), tuple(map(tuple, proj)), inv)

    def class_key(self, lam: Coroot) -> tuple[int, ...]:
        """Canonical invariant of the class of ``lam`` in ``(Q^vee/Q_P^vee)/L``."""
        return reduce_mod(self.coset_key(lam), self.null_lattice.l_basis)

    def nontrivial_classes(self) -> list[Coroot]:
        """One small nonnegative representative (outside ``Delta_P``) per nontrivial class.

        Candidates are nonnegative combinations of boundary coroots ordered by
        total size then lexicographically; the first hit of each class wins.
        """
        lat = self.null_lattice
        order = lat.order
        found: dict[tuple[int, ...], Coroot] = {}
        zero = self.class_key(tuple([0] * self.n))
        bound = order
        coords = list(self.boundary) or list(self.outside)
        for total in range(1, bound * len(coords) + 1):
            for combo in _compositions(total, len(coords)):
                lam = [0] * self.n
                for i, c in zip(coords, combo):
                    lam[i] = c
                lam = tuple(lam)
                key = self.class_key(lam)
                if key != zero and key not in found:
                    found[key] = lam
            if len(found) == order - 1:
                break
        return list(found.values())

    def lifting_table(self) -> list[LiftRow]:
        rows = []
        for rep in self.nontrivial_classes():
            lam_b, u = self.lift_element(rep)
            neg = [i for i in self.dp if self.rs.pairing(self.rs.simple_root(i), lam_b) == -1]
            if len(neg) != 1:
                raise ConsistencyError(f"lift of {rep} pairs to -1 with {len(neg)} simple roots")
            rows.append(LiftRow(rep, lam_b, u, neg[0]))
        return rows

    # -- Levi coweights -------------------------------------------------------
    @cached_property
    def levi_coweights(self) -> tuple[tuple[Fraction, ...], ...]:
        """``omega_{i,P}^vee`` over the simple coroots of ``dp`` (in ``dp`` order)."""
        rs, dp = self.rs, self.dp
        mat = [[rs.cartan[k][i] for k in dp] for i in dp]
        inv = inverse_rational(mat)
        return tuple(tuple(inv[a][j] for a in range(self.r)) for j in range(self.r))

    def quotient_via_coweights(self) -> tuple[int, ...]:
        """Invariant factors of the subgroup of ``Lambda_P^vee / Q_P^vee`` generated
        by the restrictions of the boundary coroots."""
        rs, dp = self.rs, self.dp
        if not self.boundary:
            return ()
        # restriction of alpha^vee to Q_P^vee in the coweight basis: (<alpha_i, alpha^vee>)_i
        gens = [[rs.cartan[b][i] for i in dp] for b in self.boundary]
        qp = [[rs.cartan[k][i] for i in dp] for k in dp]
        m = len(gens)
        # (c, d) with sum c_a gens_a + sum d_k qp_k = 0
        system = [[gens[a][row] for a in range(m)] + [qp[k][row] for k in range(self.r)] for row in range(self.r)]
        kernel = integer_kernel(system)
        proj = [v[:m] for v in kernel]
        return tuple(d for d in smith_invariants(proj) if d != 1)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


_LIFT_CACHE: dict = {}


def _cartan_inverse(rs: RootSystem, dp):
    key = ("inv", id(rs), tuple(dp))
    if key not in _LIFT_CACHE:
        mat = [[rs.cartan[k][i] for k in dp] for i in dp]
        _LIFT_CACHE[key] = (rs, inverse_rational(mat))
    return _LIFT_CACHE[key][1]


def pw_lift_in(rs: RootSystem, dp, lam: Coroot) -> tuple[Coroot, frozenset[int]]:
    """Peterson-Woodward lift of ``lam + Q_dp^vee``.

    Every sign pattern ``eps in {0,-1}^r`` on the simple roots of ``dp`` gives
    a rational correction in ``Q_dp^vee``; integral candidates are kept when
    all positive roots of ``dp`` pair to 0 or -1.  Exactly one survives.
    """
    dp = tuple(dp)
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise UsageError(f"coroot {lam} does not belong to {rs.name}")
    if not dp:
        return lam, frozenset()
    key = ("lift", id(rs), dp, tuple(c for i, c in enumerate(lam) if i not in dp))
    hit = _LIFT_CACHE.get(key)
    if hit is not None:
        return hit[1]
    inv = _cartan_inverse(rs, dp)
    r = len(dp)
    base = [rs.pairing(rs.simple_root(i), lam) for i in dp]
    roots = rs.positive_roots_in(dp)
    found = []
    for eps in itertools.product((0, -1), repeat=r):
        rhs = [e - b for e, b in zip(eps, base)]
        delta = [sum(inv[a][b] * rhs[b] for b in range(r)) for a in range(r)]
        if any(d.denominator != 1 for d in delta):
            continue
        cand = list(lam)
        for a, i in enumerate(dp):
            cand[i] += int(delta[a])
        cand = tuple(cand)
        if all(rs.pairing(g, cand) in (0, -1) for g in roots):
            found.append(cand)
    if len(found) != 1:
        raise ConsistencyError(f"{len(found)} Peterson-Woodward lifts of {lam} for {rs.name}{list(dp)}")
    lam_b = found[0]
    p_prime = frozenset(i for i in dp if rs.pairing(rs.simple_root(i), lam_b) == 0)
    _LIFT_CACHE[key] = (rs, (lam_b, p_prime))
    return lam_b, p_prime


def _wp_wpprime(rs: RootSystem, dp, p_prime) -> WeylElement:
    key = ("wpp", id(rs), frozenset(dp), frozenset(p_prime))
    hit = _LIFT_CACHE.get(key)
    if hit is None:
        hit = (rs, longest_element(rs, dp) * longest_element(rs, p_prime))
        _LIFT_CACHE[key] = hit
    return hit[1]


def wp_wpprime(rs: RootSystem, dp, p_prime) -> WeylElement:
    """``w_P w_P'`` for nested subsets ``P' c P``."""
    return _wp_wpprime(rs, dp, p_prime)


def _subsystem_type(rs: RootSystem, comp) -> str:
    """Cartan type letter and rank of a connected subdiagram."""
    sub = rs.subsystem(comp)
    n = len(comp)
    count = len(sub.positive_roots)
    norms = {sub.form[i][i] for i in range(n)}
    if len(norms) == 1:
        if count == n * (n + 1) // 2:
            return f"A{n}"
        if count == n * (n - 1):
            return f"D{n}"
        return f"E{n}"
    if n == 2 and count == 6:
        return "G2"
    if n == 4 and count == 24:
        return "F4"
    short = [i for i in range(n) if sub.form[i][i] == min(norms)]
    return f"B{n}" if len(short) == 1 else f"C{n}"


def detect_case(rs: RootSystem, dp) -> str:
    """Case tag read off the Dynkin diagram of ``dp`` inside the ambient system."""
    dp = tuple(dp)
    if not dp:
        return "empty"
    comps = rs.components(dp)
    if len(comps) > 1:
        return "disconnected-composite"
    kind = _subsystem_type(rs, dp)
    if kind.startswith("A"):
        return "A-type"
    if len(dp) == rs.rank:
        return "full"
    ambient = _subsystem_type(rs, range(rs.rank))
    letter = ambient[0]
    boundary = [i for i in range(rs.rank) if i not in dp and rs.neighbours(i) & set(dp)]
    if letter in "BCD":
        return {"B": "C1B", "C": "C1C", "D": "C2"}[letter]
    if letter == "F":
        return "C10" if kind.startswith("C") else "C9"
    if letter == "E":
        if kind.startswith("E"):
            return "C4"
        if len(boundary) == 2:
            return "C7"
        if ambient == "E6":
            return "C5"
        return "C7"
    return "other"


def make_setup(dynkin_type: str, rank: int, parabolic, case: str | None = None) -> ParabolicSetup:
    """Setup from Bourbaki data; ``parabolic`` lists 1-based indices in chain order."""
    rs = build_root_system(dynkin_type, rank)
    dp = [int(i) - 1 for i in parabolic]
    return ParabolicSetup(rs, dp, case=case)


def preset(case: str, r: int, ambient_rank: int | None = None) -> ParabolicSetup:
    """Named case ordering; the relabelled ambient lists ``Delta_P`` first."""
    kind, n, order = preset_order(case, r, ambient_rank)
    base = build_root_system(kind, n)
    rs = base.relabel([i - 1 for i in order], name=f"{kind}{n}")
    return ParabolicSetup(rs, range(r), case=case.upper(), name=f"{case.upper()}(r={r})@{kind}{n}")


def setup_identity(rs: RootSystem) -> WeylElement:
    return identity(rs)
