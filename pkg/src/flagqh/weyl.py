"""Weyl group elements, cosets, parabolic factorisations and Bruhat order.

An element is stored as the images of the simple coroots (one column per
simple coroot).  That matrix is canonical, hashable and independent of any
word.  :class:`WeylGroup` interns the elements of a parabolic subgroup with
integer ids for the heavier computations.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import ResourceError, UsageError
from .rootsys import Coroot, Root, RootSystem

DEFAULT_GROUP_CAP = 10**6


def _is_negative(vec) -> bool:
    for c in vec:
        if c:
            return c < 0
    return False


@dataclass(frozen=True, eq=False)
class WeylElement:
    rs: RootSystem = field(repr=False)
    cols: tuple[tuple[int, ...], ...]

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.cols == other.cols

    def __hash__(self):
        return hash(self.cols)

    def __repr__(self):
        word = "".join(str(i + 1) for i in self.reduced_word())
        return f"s[{word}]" if word else "id"

    # -- group structure ---------------------------------------------------
    def act(self, lam: Coroot) -> Coroot:
        """Image of a coroot."""
        n = len(self.cols)
        out = [0] * n
        for j, c in enumerate(lam):
            if c:
                col = self.cols[j]
                for i in range(n):
                    out[i] += c * col[i]
        return tuple(out)

    def act_root(self, beta: Root) -> Root:
        return self.rs.root_of_coroot(self.act(self.rs.coroot_of(beta)))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.rs, tuple(self.act(col) for col in other.cols))

    def times_simple(self, i: int) -> "WeylElement":
        """``w * s_i``; only the columns adjacent to ``i`` change."""
        cart = self.rs.cartan
        ci = self.cols[i]
        cols = list(self.cols)
        for j in range(len(cols)):
            a = cart[j][i]
            if j == i:
                cols[j] = tuple(-x for x in ci)
            elif a:
                cols[j] = tuple(x - a * y for x, y in zip(cols[j], ci))
        return WeylElement(self.rs, tuple(cols))

    def inverse(self) -> "WeylElement":
        return from_word(self.rs, list(reversed(self.reduced_word())))

    def has_right_descent(self, i: int) -> bool:
        return _is_negative(self.cols[i])

    def right_descents(self) -> list[int]:
        return [i for i in range(len(self.cols)) if _is_negative(self.cols[i])]

    # -- combinatorics ------------------------------------------------------
    def inversion_set(self) -> frozenset[Root]:
        rs = self.rs
        return frozenset(
            beta for beta, cb in zip(rs.positive_roots, rs.positive_coroots) if _is_negative(self.act(cb))
        )

    def length(self) -> int:
        return sum(1 for cb in self.rs.positive_coroots if _is_negative(self.act(cb)))

    def reduced_word(self) -> list[int]:
        """Reduced word (0-based) obtained by peeling the smallest right descent."""
        word = []
        w = self
        while True:
            descents = w.right_descents()
            if not descents:
                break
            i = descents[0]
            word.append(i)
            w = w.times_simple(i)
        word.reverse()
        return word

    def is_identity(self) -> bool:
        return all(c[j] == (1 if i == j else 0) for i, c in enumerate(self.cols) for j in range(len(c)))


def identity(rs: RootSystem) -> WeylElement:
    n = rs.rank
    return WeylElement(rs, tuple(tuple(int(i == j) for i in range(n)) for j in range(n)))


def from_word(rs: RootSystem, word) -> WeylElement:
    """Product ``s_{w[0]} s_{w[1]} ...`` of 0-based simple reflections."""
    w = identity(rs)
    for i in word:
        if not 0 <= i < rs.rank:
            raise UsageError(f"simple index {i + 1} out of range for {rs.name}")
        w = w.times_simple(i)
    return w


def reflection(rs: RootSystem, gamma: Root) -> WeylElement:
    """``s_gamma`` acting by ``lam -> lam - <gamma, lam> gamma^vee``."""
    gv = rs.coroot_of(gamma)
    cols = []
    for j in range(rs.rank):
        k = sum(gamma[i] * rs.cartan[j][i] for i in range(rs.rank))
        cols.append(tuple(int(i == j) - k * gv[i] for i in range(rs.rank)))
    return WeylElement(rs, tuple(cols))


def length(w: WeylElement) -> int:
    return w.length()


def inversion_set(w: WeylElement) -> frozenset[Root]:
    return w.inversion_set()


def reduced_word(w: WeylElement) -> list[int]:
    return w.reduced_word()


def sgn_alpha(w: WeylElement, i: int) -> int:
    """1 if ``w s_i`` is shorter than ``w``, else 0."""
    return int(w.has_right_descent(i))


def longest_element(rs: RootSystem, indices) -> WeylElement:
    """Longest element of ``W_indices``, built by climbing ascents."""
    indices = sorted(set(indices))
    w = identity(rs)
    climbing = True
    while climbing:
        climbing = False
        for i in indices:
            if not w.has_right_descent(i):
                w = w.times_simple(i)
                climbing = True
                break
    return w


def parabolic_order(rs: RootSystem, indices) -> int:
    """Order of ``W_indices`` via the product of degrees over components."""
    total = 1
    for comp in rs.components(sorted(set(indices))):
        sub = rs.subsystem(comp)
        # |W| = prod(d_i) and sum(d_i - 1) = |R^+|; use the exponent formula per type
        total *= _weyl_order(sub)
    return total


def _weyl_order(rs: RootSystem) -> int:
    # degrees are determined by the heights of positive roots (Kostant)
    heights = [sum(b) for b in rs.positive_roots]
    counts = [heights.count(h) for h in range(1, max(heights) + 1)]
    # exponent m appears (counts[m-1] - counts[m]) times
    order = 1
    for m in range(1, len(counts) + 1):
        mult = counts[m - 1] - (counts[m] if m < len(counts) else 0)
        order *= (m + 1) ** mult
    return order


def enumerate_parabolic(rs: RootSystem, indices, cap: int = DEFAULT_GROUP_CAP) -> list[WeylElement]:
    """All elements of ``W_indices`` in breadth-first (length) order."""
    indices = sorted(set(indices))
    order = parabolic_order(rs, indices)
    if order > cap:
        raise ResourceError(f"W of {rs.name} on {[i + 1 for i in indices]} has {order} elements > cap {cap}")
    start = identity(rs)
    seen = {start}
    out = [start]
    queue = deque(out)
    while queue:
        w = queue.popleft()
        for i in indices:
            if not w.has_right_descent(i):
                x = w.times_simple(i)
                if x not in seen:
                    seen.add(x)
                    out.append(x)
                    queue.append(x)
    return out


def is_min_coset_rep(w: WeylElement, small) -> bool:
    return not any(w.has_right_descent(i) for i in small)


def min_coset_rep(w: WeylElement, small) -> WeylElement:
    """Minimal length representative of ``w W_small``."""
    small = sorted(set(small))
    moved = True
    while moved:
        moved = False
        for i in small:
            if w.has_right_descent(i):
                w = w.times_simple(i)
                moved = True
                break
    return w


def min_coset_reps(rs: RootSystem, big, small, cap: int = DEFAULT_GROUP_CAP) -> list[WeylElement]:
    """Minimal length representatives of ``W_big / W_small``."""
    big, small = set(big), set(small)
    if not small <= big:
        raise UsageError("the smaller subset must be contained in the larger one")
    return [w for w in enumerate_parabolic(rs, big, cap) if is_min_coset_rep(w, small)]


def parabolic_decompose(w: WeylElement, chain) -> list[WeylElement]:
    """Factor ``w = v_{m} ... v_1`` along a nested chain of subsets.

    ``chain`` lists ``Delta_0 c Delta_1 c ... c Delta_m``; ``w`` must lie in
    ``W_{Delta_m}``.  Returns ``[v_m, ..., v_1]`` with ``v_j`` a minimal
    representative of ``W_{Delta_j} / W_{Delta_{j-1}}``.
    """
    chain = [set(c) for c in chain]
    for a, b in zip(chain, chain[1:]):
        if not a <= b:
            raise UsageError("chain is not nested")
    factors = []
    x = w
    for j in range(len(chain) - 1, 0, -1):
        v = min_coset_rep(x, chain[j - 1])
        factors.append(v)
        x = v.inverse() * x
    if not x.is_identity():
        raise UsageError("element does not lie in the top parabolic subgroup")
    return factors


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Bruhat order via the lifting property ``u <= v  <=>  min(u, us) <= vs``."""
    while True:
        lv = v.length()
        lu = u.length()
        if lu > lv:
            return False
        if lu == 0:
            return True
        if lu == lv:
            return u == v
        i = v.right_descents()[0]
        if u.has_right_descent(i):
            u = u.times_simple(i)
        v = v.times_simple(i)


def random_element(rs: RootSystem, rng: random.Random, indices=None) -> WeylElement:
    """Element obtained from a long random walk; adequate for spot checks."""
    indices = list(range(rs.rank)) if indices is None else list(indices)
    w = identity(rs)
    for _ in range(4 * len(rs.positive_roots) + 10):
        w = w.times_simple(rng.choice(indices))
    return w


class WeylGroup:
    """Integer-indexed table of ``W_indices`` (the whole group by default).

    Provides lengths, right multiplication by simple reflections and by the
    reflections ``s_gamma``, and per-element inversion data.
    """

    def __init__(self, rs: RootSystem, indices=None, cap: int = DEFAULT_GROUP_CAP):
        self.rs = rs
        self.indices = tuple(range(rs.rank)) if indices is None else tuple(sorted(set(indices)))
        self.elements = enumerate_parabolic(rs, self.indices, cap)
        self.index = {w: k for k, w in enumerate(self.elements)}
        self._lengths: list[int] | None = None

    def __len__(self):
        return len(self.elements)

    def id_of(self, w: WeylElement) -> int:
        return self.index[w]

    @cached_property
    def lengths(self) -> list[int]:
        return [w.length() for w in self.elements]

    @cached_property
    def simple_right(self) -> list[list[int]]:
        """``simple_right[k][i]`` is the id of ``elements[k] * s_i`` (or -1)."""
        out = []
        allowed = set(self.indices)
        for w in self.elements:
            out.append([self.index[w.times_simple(i)] if i in allowed else -1 for i in range(self.rs.rank)])
        return out

    @cached_property
    def reflection_words(self) -> list[list[int]]:
        """A (not necessarily reduced) word for each ``s_gamma``, gamma positive."""
        return [reflection(self.rs, g).reduced_word() for g in self.rs.positive_roots]

    def times_reflection(self, k: int, g: int) -> int:
        table = self.simple_right
        for i in self.reflection_words[g]:
            k = table[k][i]
        return k

    @cached_property
    def reflection_right(self) -> list[list[int]]:
        """``reflection_right[k][g]`` is the id of ``elements[k] * s_gamma_g``."""
        return [[self.times_reflection(k, g) for g in range(len(self.rs.positive_roots))] for k in range(len(self))]

    @cached_property
    def inversion_masks(self) -> list[int]:
        """Bitmask over positive roots of each element's inversion set."""
        out = []
        pcs = self.rs.positive_coroots
        for w in self.elements:
            mask = 0
            for g, cb in enumerate(pcs):
                if _is_negative(w.act(cb)):
                    mask |= 1 << g
            out.append(mask)
        return out

    def longest(self) -> int:
        lengths = self.lengths
        return max(range(len(self)), key=lengths.__getitem__)
