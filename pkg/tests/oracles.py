"""Independent reference implementations used only by the tests.

Nothing here imports the package's root, Weyl or product code.  Weyl group
elements are stored by the images of the simple roots (the package stores
coroot images), roots are generated by plain closure, and quantum products
of small groups are solved from the Chevalley rule and associativity by
sympy linear algebra.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

# Bourbaki Cartan matrices, entry [i][j] = <alpha_j, alpha_i^vee>.
CARTAN = {
    "A2": [[2, -1], [-1, 2]],
    "B2": [[2, -1], [-2, 2]],
    "C2": [[2, -2], [-1, 2]],
    "G2": [[2, -3], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "B3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
}

# |R^+| by type and rank.
POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

WEYL_ORDER = {"A2": 6, "A3": 24, "B2": 8, "B3": 48, "B4": 384, "C3": 48, "D4": 192, "F4": 1152, "G2": 12,
              "E6": 51840}


def _reflect(cartan, i, beta):
    c = sum(beta[j] * cartan[i][j] for j in range(len(beta)))
    out = list(beta)
    out[i] -= c
    return tuple(out)


def positive_roots(cartan) -> list[tuple[int, ...]]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                g = _reflect(cartan, i, beta)
                if all(c >= 0 for c in g) and g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    return sorted(seen, key=lambda b: (sum(b), b))


def root_norms(cartan) -> list[Fraction]:
    """``(alpha_i, alpha_i)`` up to scale, from ``cartan[i][j] (a_i,a_i) = cartan[j][i] (a_j,a_j)``."""
    n = len(cartan)
    norms: list[Fraction | None] = [None] * n
    norms[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if norms[i] is not None and norms[j] is None and cartan[i][j]:
                    norms[j] = norms[i] * cartan[i][j] / cartan[j][i]
                    changed = True
    return norms


class Group:
    """Weyl group acting on root coordinates; elements keyed by simple-root images."""

    def __init__(self, cartan):
        self.cartan = cartan
        self.n = n = len(cartan)
        self.roots = positive_roots(cartan)
        norms = root_norms(cartan)
        self.norms = norms

        def form(a, b):
            return sum(a[i] * b[j] * cartan[i][j] * norms[i] / 2 for i in range(n) for j in range(n))

        self.form = form
        self.coroots = [tuple(Fraction(b[j]) * norms[j] / form(b, b) for j in range(n)) for b in self.roots]
        for c in self.coroots:
            assert all(x.denominator == 1 for x in c)
        self.coroots = [tuple(int(x) for x in c) for c in self.coroots]
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        self.words = {ident: ()}
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(n):
                    x = self.times_simple(w, i)
                    if x not in self.words:
                        self.words[x] = self.words[w] + (i,)
                        nxt.append(x)
            frontier = nxt
        self.identity = ident

    def apply(self, w, beta):
        return tuple(sum(beta[j] * w[j][k] for j in range(self.n)) for k in range(self.n))

    def times_simple(self, w, i):
        # (w s_i)(alpha_j) = w(alpha_j) - <alpha_j, alpha_i^vee> w(alpha_i)
        return tuple(tuple(w[j][k] - self.cartan[i][j] * w[i][k] for k in range(self.n)) for j in range(self.n))

    def times_reflection(self, w, gamma_index):
        gamma = self.roots[gamma_index]
        cor = self.coroots[gamma_index]
        images = []
        for j in range(self.n):
            c = sum(cor[k] * self.cartan[k][j] for k in range(self.n))  # <alpha_j, gamma^vee>
            beta = tuple(int(j == m) - c * gamma[m] for m in range(self.n))
            images.append(self.apply(w, beta))
        return tuple(images)

    def length(self, w) -> int:
        return sum(1 for b in self.roots if any(x < 0 for x in self.apply(w, b)))

    def from_word(self, word):
        w = self.identity
        for i in word:
            w = self.times_simple(w, i)
        return w

    def chevalley(self, w, i) -> dict:
        """``sigma^w * sigma^{s_i}`` as ``{(element, q-exponent): coeff}``."""
        out = {}
        lw = self.length(w)
        for k, cor in enumerate(self.coroots):
            c = cor[i]
            if not c:
                continue
            x = self.times_reflection(w, k)
            lx = self.length(x)
            if lx == lw + 1:
                key = (x, (0,) * self.n)
            elif lx == lw + 1 - 2 * sum(cor):
                key = (x, tuple(cor))
            else:
                continue
            out[key] = out.get(key, 0) + c
        return out


def subword_bruhat_leq(group: Group, u, v) -> bool:
    """``u <= v`` iff ``u`` is the product of some subword of a reduced word of ``v``."""
    word = group.words[v]
    for mask in cartesian((0, 1), repeat=len(word)):
        if group.from_word([i for i, keep in zip(word, mask) if keep]) == u:
            return True
    return False


def solve_products(group: Group) -> dict:
    """All ``sigma^u * sigma^v`` from ``sigma^id`` as a two-sided unit, the Chevalley rule and
    ``(sigma^u * sigma^v) * sigma^{s_i} = sigma^u * (sigma^v * sigma^{s_i})``.

    Returns ``{(u, v): {(w, lam): Fraction}}``; raises if the system is not uniquely solvable.
    """
    n = group.n
    els = list(group.words)
    lengths = {w: group.length(w) for w in els}

    def basis(d):
        out = []
        for w in els:
            rest = d - lengths[w]
            if rest < 0 or rest % 2:
                continue
            for lam in cartesian(range(rest // 2 + 1), repeat=n):
                if sum(lam) == rest // 2:
                    out.append((w, lam))
        return out

    unknowns = {}
    for u in els:
        for v in els:
            for key in basis(lengths[u] + lengths[v]):
                unknowns[(u, v, key)] = len(unknowns)
    rows, rhs = [], []

    def shifted(terms, mu):
        return {(w, tuple(a + b for a, b in zip(lam, mu))): c for (w, lam), c in terms.items()}

    for v in els:
        for u in els:
            d = lengths[u] + lengths[v]
            if group.identity in (u, v):
                other = v if u == group.identity else u
                for key in basis(d):
                    rows.append({unknowns[(u, v, key)]: 1})
                    rhs.append(1 if key == (other, (0,) * n) else 0)
                continue
            for i in range(n):
                # left: sum_key N(u,v,key) * chevalley(key, i)
                eq: dict = {}
                for key in basis(d):
                    w, lam = key
                    for target, c in shifted(group.chevalley(w, i), lam).items():
                        eq.setdefault(target, {})
                        idx = unknowns[(u, v, key)]
                        eq[target][idx] = eq[target].get(idx, 0) + c
                # right: sum over chevalley(v, i) terms of q^mu * N(u, v', .)
                for (v2, mu), c in group.chevalley(v, i).items():
                    for key in basis(lengths[u] + lengths[v2]):
                        w, lam = key
                        target = (w, tuple(a + b for a, b in zip(lam, mu)))
                        eq.setdefault(target, {})
                        idx = unknowns[(u, v2, key)]
                        eq[target][idx] = eq[target].get(idx, 0) - c
                for coeffs in eq.values():
                    coeffs = {k: c for k, c in coeffs.items() if c}
                    if coeffs:
                        rows.append(coeffs)
                        rhs.append(0)
    m = len(unknowns)
    dense = [[QQ(row.get(j, 0)) for j in range(m)] + [QQ(b)] for row, b in zip(rows, rhs)]
    mat = DomainMatrix(dense, (len(dense), m + 1), QQ)
    rref, pivots = mat.rref()
    if len(pivots) != m or m in pivots:
        raise AssertionError(f"associativity system has rank {len(pivots)} for {m} unknowns")
    values = rref.to_Matrix()
    out: dict = {}
    for (u, v, key), idx in unknowns.items():
        val = values[idx, m]
        if val:
            out.setdefault((u, v), {})[key] = Fraction(int(val.p), int(val.q))
    for u in els:
        for v in els:
            out.setdefault((u, v), {})
    return out
