"""Quantum cohomology of ``G/B`` (and, through the comparison formula, of
``G/P``) in the Schubert basis, with exact rational coefficients.

Products are computed from the quantum Chevalley formula alone.  For each
degree ``d`` an exact elimination over Q expresses every Schubert class of
length ``d`` as a combination of products ``sigma^w * sigma^{s_i}`` with
``l(w) = d - 1`` (a "recipe"), minus the quantum terms those Chevalley
products create.  Then

    sigma^u * X = sum a_{w,i} (sigma^w * X) * sigma^{s_i} - sum b q_mu (sigma^x * X)

recurses on shorter classes only.  Results are cached per root system.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian

from .errors import ConsistencyError, ResourceError, UsageError
from .rootsys import Coroot, RootSystem
from .weyl import WeylElement, WeylGroup, from_word

DEFAULT_ENGINE_GROUP_CAP = 60_000
DEFAULT_DEGREE_CAP = 60
FULL_TABLE_CAP = 400

Index = tuple[int, tuple[int, ...]]  # (element id, q exponent)


def _add_into(target: dict, source: dict, scale=1, shift=None):
    for (w, lam), c in source.items():
        if shift is not None:
            lam = tuple(a + b for a, b in zip(lam, shift))
        key = (w, lam)
        value = target.get(key, 0) + scale * c
        if value:
            target[key] = value
        else:
            target.pop(key, None)


def _normalise(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def format_coefficient(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass
class QHClass:
    """Finite combination of basis elements ``q_lam sigma^w``.

    ``localized`` marks classes allowed to carry negative q-exponents.
    """

    rs: RootSystem
    terms: dict = field(default_factory=dict)
    localized: bool = False

    @classmethod
    def schubert(cls, w: WeylElement, lam: Coroot | None = None) -> "QHClass":
        lam = tuple(lam) if lam is not None else (0,) * w.rs.rank
        return cls(w.rs, {(w, lam): 1}, localized=any(c < 0 for c in lam))

    def __add__(self, other: "QHClass") -> "QHClass":
        out = dict(self.terms)
        for key, c in other.terms.items():
            value = out.get(key, 0) + c
            if value:
                out[key] = value
            else:
                out.pop(key, None)
        return QHClass(self.rs, out, self.localized or other.localized)

    def __sub__(self, other: "QHClass") -> "QHClass":
        return self + other.scale(-1)

    def scale(self, k) -> "QHClass":
        return QHClass(self.rs, {key: k * c for key, c in self.terms.items() if k * c}, self.localized)

    def shift(self, lam: Coroot) -> "QHClass":
        """Multiply by ``q_lam``."""
        out = {(w, tuple(a + b for a, b in zip(mu, lam))): c for (w, mu), c in self.terms.items()}
        return QHClass(self.rs, out, self.localized or any(c < 0 for _, mu in out for c in mu))

    def coefficient(self, w: WeylElement, lam: Coroot) -> Fraction:
        return Fraction(self.terms.get((w, tuple(lam)), 0))

    def __eq__(self, other):
        return isinstance(other, QHClass) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {w.length() + self.rs.two_rho_pairing(lam) for (w, lam) in self.terms}

    def q_zero(self) -> "QHClass":
        """Classical part (all q-exponents zero)."""
        return QHClass(self.rs, {(w, lam): c for (w, lam), c in self.terms.items() if not any(lam)})

    def sorted_terms(self, key=None):
        key = key or (lambda item: (item[0][0].length(), item[0][0].reduced_word(), item[0][1]))
        return sorted(self.terms.items(), key=key)

    def to_json(self, grade=None) -> dict:
        """``{"terms": [{"word", "q", "coeff"}]}`` sorted by grade (if given) then word."""

        def order(item):
            (w, lam), _ = item
            word = [i + 1 for i in w.reduced_word()]
            return (tuple(grade(w, lam)) if grade else (), len(word), word, lam)

        terms = []
        for (w, lam), c in sorted(self.terms.items(), key=order):
            entry = {"word": [i + 1 for i in w.reduced_word()], "q": list(lam), "coeff": format_coefficient(c)}
            if grade is not None:
                entry["grade"] = list(grade(w, lam))
            terms.append(entry)
        out = {"terms": terms}
        if self.localized:
            out["localized"] = True
        return out

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (w, lam), c in self.sorted_terms():
            q = "".join(f"q{i + 1}" + (f"^{e}" if e != 1 else "") for i, e in enumerate(lam) if e)
            word = "".join(str(i + 1) for i in w.reduced_word())
            sigma = f"s[{word}]" if word else ""
            body = "*".join(p for p in (q, sigma) if p) or "1"
            parts.append(f"{format_coefficient(c)}*{body}" if c != 1 else body)
        return " + ".join(parts)


@dataclass
class Recipe:
    """``sigma^u = sum coeff * sigma^w * sigma^{s_i} - quantum``."""

    monk: list  # (w_id, i, coeff)
    quantum: dict  # (x_id, mu) -> coeff


class QuantumCohomology:
    """Product engine for ``QH*(G/B)`` of one root system."""

    def __init__(self, rs: RootSystem, group_cap: int = DEFAULT_ENGINE_GROUP_CAP,
                 degree_cap: int = DEFAULT_DEGREE_CAP):
        self.rs = rs
        self.group = WeylGroup(rs, cap=group_cap)
        self.degree_cap = degree_cap
        self.n = rs.rank
        self.zero = (0,) * rs.rank
        self._chev: dict[int, list] = {}
        self._recipes: dict[int, Recipe] = {}
        self._done_degrees: set[int] = set()
        self._products: dict[tuple[int, int], dict] = {}
        self._heights = [sum(c) for c in rs.positive_coroots]
        self._reflect: dict[tuple[int, int], int] = {}

    # -- element plumbing ---------------------------------------------------
    def wid(self, w: WeylElement) -> int:
        return self.group.index[w]

    def element(self, k: int) -> WeylElement:
        return self.group.elements[k]

    def to_class(self, internal: dict) -> QHClass:
        els = self.group.elements
        return QHClass(self.rs, {(els[w], lam): _normalise(c) for (w, lam), c in internal.items()})

    def from_class(self, cls: QHClass) -> dict:
        return {(self.wid(w), tuple(lam)): c for (w, lam), c in cls.terms.items()}

    # -- Chevalley formula ----------------------------------------------------
    def _chevalley_row(self, w: int) -> list:
        """Per simple index: list of ``(target, q_shift or None, coeff)``."""
        row = self._chev.get(w)
        if row is not None:
            return row
        g = self.group
        lengths = g.lengths
        lw = lengths[w]
        row = [[] for _ in range(self.n)]
        for k, gv in enumerate(self.rs.positive_coroots):
            t = g.times_reflection(w, k)
            lt = lengths[t]
            if lt == lw + 1:
                shift = None
            elif lt == lw + 1 - 2 * self._heights[k]:
                shift = gv
            else:
                continue
            for i, c in enumerate(gv):
                if c:
                    row[i].append((t, shift, c))
        self._chev[w] = row
        return row

    def chevalley(self, internal: dict, i: int) -> dict:
        """``X * sigma^{s_i}`` for an internal class ``X``."""
        out: dict = {}
        for (w, lam), c in internal.items():
            for t, shift, k in self._chevalley_row(w)[i]:
                mu = lam if shift is None else tuple(a + b for a, b in zip(lam, shift))
                key = (t, mu)
                value = out.get(key, 0) + c * k
                if value:
                    out[key] = value
                else:
                    del out[key]
        return out

    def chevalley_mul(self, u: WeylElement, i: int) -> QHClass:
        if not 0 <= i < self.n:
            raise UsageError(f"simple index {i + 1} out of range")
        return self.to_class(self.chevalley({(self.wid(u), self.zero): 1}, i))

    # -- recipes ----------------------------------------------------------------
    def _prepare_degree(self, d: int):
        if d in self._done_degrees or d <= 1:
            return
        lengths = self.group.lengths
        targets = sorted(k for k, l in enumerate(lengths) if l == d)
        sources = sorted(k for k, l in enumerate(lengths) if l == d - 1)
        rows = []
        for w in sources:
            chev = self._chevalley_row(w)
            for i in range(self.n):
                vec = {}
                for t, shift, c in chev[i]:
                    if shift is None:
                        vec[t] = vec.get(t, 0) + c
                if vec:
                    rows.append((len(vec), w, i, vec))
        rows.sort(key=lambda r: (r[0], r[1], r[2]))
        pivots: dict[int, tuple[dict, dict]] = {}
        for _, w, i, vec in rows:
            if len(pivots) == len(targets):
                break
            vec = {k: Fraction(v) for k, v in vec.items()}
            combo = {(w, i): Fraction(1)}
            for col in [c for c in vec if c in pivots]:
                f = vec.get(col)
                if not f:
                    continue
                pv, pc = pivots[col]
                for k, v in pv.items():
                    x = vec.get(k, 0) - f * v
                    if x:
                        vec[k] = x
                    else:
                        vec.pop(k, None)
                for k, v in pc.items():
                    x = combo.get(k, 0) - f * v
                    if x:
                        combo[k] = x
                    else:
                        combo.pop(k, None)
            if not vec:
                continue
            col = min(vec)
            f = vec[col]
            vec = {k: v / f for k, v in vec.items()}
            combo = {k: v / f for k, v in combo.items()}
            for other, (pv, pc) in pivots.items():
                g = pv.get(col)
                if g:
                    for k, v in vec.items():
                        x = pv.get(k, 0) - g * v
                        if x:
                            pv[k] = x
                        else:
                            pv.pop(k, None)
                    for k, v in combo.items():
                        x = pc.get(k, 0) - g * v
                        if x:
                            pc[k] = x
                        else:
                            pc.pop(k, None)
            pivots[col] = (vec, combo)
        if len(pivots) != len(targets):
            raise ConsistencyError(f"divisor classes fail to span degree {d} of {self.rs.name}")
        for col, (vec, combo) in pivots.items():
            if vec != {col: 1}:
                raise ConsistencyError("elimination did not reach a unit vector")
            monk = sorted((w, i, c) for (w, i), c in combo.items())
            total: dict = {}
            for w, i, c in monk:
                _add_into(total, self.chevalley({(w, self.zero): 1}, i), c)
            quantum = {key: c for key, c in total.items() if any(key[1])}
            classical = {key: c for key, c in total.items() if not any(key[1])}
            if classical != {(col, self.zero): 1}:
                raise ConsistencyError("recipe does not reproduce its Schubert class")
            self._recipes[col] = Recipe(monk, quantum)
        self._done_degrees.add(d)

    def recipe(self, u: int) -> Recipe:
        d = self.group.lengths[u]
        if d > self.degree_cap:
            raise ResourceError(f"degree {d} exceeds cap {self.degree_cap}")
        self._prepare_degree(d)
        return self._recipes[u]

    def divisor_expression(self, u: WeylElement) -> dict:
        """``{(q exponent, sorted word of 0-based indices): coeff}`` with
        ``sum coeff * q * prod sigma^{s_i} = sigma^u``."""
        return self._expression(self.wid(u))

    def _expression(self, u: int) -> dict:
        d = self.group.lengths[u]
        if d == 0:
            return {(self.zero, ()): Fraction(1)}
        if d == 1:
            i = self.element(u).reduced_word()[0]
            return {(self.zero, (i,)): Fraction(1)}
        rec = self.recipe(u)
        out: dict = {}
        for w, i, c in rec.monk:
            for (mu, word), a in self._expression(w).items():
                key = (mu, tuple(sorted(word + (i,))))
                out[key] = out.get(key, 0) + a * c
        for (x, mu), c in rec.quantum.items():
            for (nu, word), a in self._expression(x).items():
                key = (tuple(p + q for p, q in zip(mu, nu)), word)
                out[key] = out.get(key, 0) - a * c
        return {k: v for k, v in out.items() if v}

    def evaluate_expression(self, expr: dict) -> QHClass:
        out: dict = {}
        for (mu, word), c in expr.items():
            cls = {(self.wid(from_word(self.rs, [])), self.zero): 1}
            for i in word:
                cls = self.chevalley(cls, i)
            _add_into(out, cls, c, shift=mu)
        return self.to_class(out)

    # -- products -----------------------------------------------------------
    def _product(self, u: int, v: int) -> dict:
        lengths = self.group.lengths
        if (lengths[u], u) > (lengths[v], v):
            u, v = v, u
        key = (u, v)
        hit = self._products.get(key)
        if hit is None:
            hit = self._product_via(u, v)
            self._products[key] = hit
        return hit

    def _product_via(self, u: int, v: int) -> dict:
        """``sigma^u * sigma^v`` expanding ``sigma^u`` (no top-level caching)."""
        lengths = self.group.lengths
        if lengths[u] + lengths[v] > self.degree_cap:
            raise ResourceError(f"product degree {lengths[u] + lengths[v]} exceeds cap {self.degree_cap}")
        if lengths[u] == 0:
            return {(v, self.zero): 1}
        if lengths[u] == 1:
            i = self.element(u).reduced_word()[0]
            return self.chevalley({(v, self.zero): 1}, i)
        rec = self.recipe(u)
        out: dict = {}
        for w, i, c in rec.monk:
            _add_into(out, self.chevalley(self._product(w, v), i), c)
        for (x, mu), c in rec.quantum.items():
            _add_into(out, self._product(x, v), -c, shift=mu)
        return {k: _normalise(c) for k, c in out.items()}

    def schubert_product(self, u: WeylElement, v: WeylElement) -> QHClass:
        return self.to_class(self._product(self.wid(u), self.wid(v)))

    def qmul(self, a: QHClass, b: QHClass) -> QHClass:
        if a.localized or b.localized:
            raise UsageError("products are defined on the unlocalized ring only")
        out: dict = {}
        for (u, lam), c in a.terms.items():
            for (v, mu), d in b.terms.items():
                shift = tuple(x + y for x, y in zip(lam, mu))
                _add_into(out, self._product(self.wid(u), self.wid(v)), c * d, shift=shift)
        return self.to_class(out)

    def gw_invariant(self, u: WeylElement, v: WeylElement, w: WeylElement, lam: Coroot) -> Fraction:
        return Fraction(self._product(self.wid(u), self.wid(v)).get((self.wid(w), tuple(lam)), 0))

    def product_count(self) -> int:
        return len(self._products)

    # -- invariant audit ----------------------------------------------------------
    def audit(self, seed: int = 0, commutativity_samples: int = 200, associativity_samples: int = 200,
              max_assoc_degree: int | None = None) -> dict:
        """Check every cached product for positivity, homogeneity and the
        descent bound; sample commutativity and associativity."""
        lengths = self.group.lengths
        els = self.group.elements
        rs = self.rs
        violations = []
        checked = 0
        rng = random.Random(seed)
        keys = sorted(self._products)
        comm = keys if len(keys) <= commutativity_samples else rng.sample(keys, commutativity_samples)
        for u, v in comm:
            if u != v and self._product_via(v, u) != self._products[(u, v)]:
                violations.append(("commutativity", u, v))
        assoc = 0
        if max_assoc_degree is None:
            max_assoc_degree = min(self.degree_cap, 12 if len(els) > FULL_TABLE_CAP else self.degree_cap)
        by_length: dict[int, list[int]] = {}
        for k in range(len(els)):
            if lengths[k] <= max_assoc_degree:
                by_length.setdefault(lengths[k], []).append(k)

        def budget_pool(budget):
            return [k for d, ks in by_length.items() if d <= budget for k in ks]

        while assoc < associativity_samples:
            a = rng.choice(budget_pool(max_assoc_degree))
            b = rng.choice(budget_pool(max_assoc_degree - lengths[a]))
            c = rng.choice(budget_pool(max_assoc_degree - lengths[a] - lengths[b]))
            left = self._times_class(self._product(a, b), c)
            right = self._times_class(self._product(b, c), a)
            if left != right:
                violations.append(("associativity", a, b, c))
            assoc += 1
        # scan last so products computed by the samples are covered too
        for (u, v), prod in list(self._products.items()):
            deg = lengths[u] + lengths[v]
            su = [int(els[u].has_right_descent(i)) for i in range(self.n)]
            sv = [int(els[v].has_right_descent(i)) for i in range(self.n)]
            for (w, lam), c in prod.items():
                checked += 1
                if c < 0 or Fraction(c).denominator != 1:
                    violations.append(("positivity", u, v, w, lam, str(c)))
                if lengths[w] + 2 * sum(lam) != deg or any(x < 0 for x in lam):
                    violations.append(("homogeneity", u, v, w, lam, str(c)))
                for i in range(self.n):
                    pair = sum(lam[m] * rs.cartan[m][i] for m in range(self.n))
                    if int(els[w].has_right_descent(i)) + pair > su[i] + sv[i]:
                        violations.append(("descent-bound", u, v, w, lam, i))
                        break
        return {
            "products": len(self._products),
            "terms": checked,
            "commutativity_pairs": len(comm),
            "associativity_triples": assoc,
            "violations": violations,
        }

    def _times_class(self, internal: dict, c: int) -> dict:
        out: dict = {}
        for (w, lam), k in internal.items():
            _add_into(out, self._product(w, c), k, shift=lam)
        return out


_ENGINES: dict[int, QuantumCohomology] = {}


_CAPS = {"group_cap": DEFAULT_ENGINE_GROUP_CAP, "degree_cap": DEFAULT_DEGREE_CAP}


def configure(group_cap: int | None = None, degree_cap: int | None = None) -> dict:
    """Set the caps used by engines created from now on; existing engines adopt the degree cap."""
    if group_cap is not None:
        _CAPS["group_cap"] = group_cap
    if degree_cap is not None:
        _CAPS["degree_cap"] = degree_cap
        for eng in _ENGINES.values():
            eng.degree_cap = degree_cap
    return dict(_CAPS)


def engine_for(rs: RootSystem, group_cap: int | None = None) -> QuantumCohomology:
    """Shared engine per root system object, so caches are reused across checks."""
    eng = _ENGINES.get(id(rs))
    if eng is None or eng.rs is not rs:
        eng = _ENGINES[id(rs)] = QuantumCohomology(rs, group_cap=group_cap or _CAPS["group_cap"],
                                                   degree_cap=_CAPS["degree_cap"])
    return eng


def all_engines() -> list[QuantumCohomology]:
    return list(_ENGINES.values())


def chevalley_mul(rs: RootSystem, u: WeylElement, i: int) -> QHClass:
    return engine_for(rs).chevalley_mul(u, i)


def qmul(a: QHClass, b: QHClass) -> QHClass:
    return engine_for(a.rs).qmul(a, b)


def gw_invariant(u: WeylElement, v: WeylElement, w: WeylElement, lam: Coroot) -> Fraction:
    return engine_for(u.rs).gw_invariant(u, v, w, lam)


def divisor_expression(u: WeylElement) -> dict:
    return engine_for(u.rs).divisor_expression(u)


def qhp_mul(setup, u: WeylElement, v: WeylElement) -> QHClass:
    """``sigma^u *_P sigma^v`` read off the ``G/B`` product through the lift.

    Keys of the result are ``(w in W^P, lambda_P)`` with ``lambda_P`` the
    representative whose ``Delta_P`` coordinates vanish.
    """
    for x in (u, v):
        if not setup.is_in_wp_quotient(x):
            raise UsageError(f"{x!r} is not a minimal coset representative for W_P")
    prod = engine_for(setup.rs).schubert_product(u, v)
    out = {}
    for (w, lam), c in prod.terms.items():
        pre = setup.psi_preimage(w, lam)
        if pre is not None:
            out[pre] = out.get(pre, 0) + c
    return QHClass(setup.rs, out)


def levi_system(setup) -> RootSystem:
    """Root subsystem of ``Delta_P`` in chain order (cached on the setup)."""
    sub = getattr(setup, "_levi_rs", None)
    if sub is None:
        sub = setup.rs.subsystem(setup.dp, name=f"{setup.rs.name}-Levi")
        setup._levi_rs = sub
    return sub


def to_levi(setup, w: WeylElement) -> WeylElement:
    pos = {a: k for k, a in enumerate(setup.dp)}
    word = w.reduced_word()
    if any(i not in pos for i in word):
        raise UsageError(f"{w!r} is not in W_P")
    return from_word(levi_system(setup), [pos[i] for i in word])


def from_levi(setup, w: WeylElement) -> WeylElement:
    return from_word(setup.rs, [setup.dp[i] for i in w.reduced_word()])


def classical_cup_PB(setup, u: WeylElement, v: WeylElement) -> QHClass:
    """Cup product in ``H*(P/B)``: the q = 0 part of the Levi quantum product."""
    sub = levi_system(setup)
    prod = engine_for(sub).schubert_product(to_levi(setup, u), to_levi(setup, v)).q_zero()
    zero = (0,) * setup.rs.rank
    return QHClass(setup.rs, {(from_levi(setup, w), zero): c for (w, _), c in prod.terms.items()})


def class_to_json_string(cls: QHClass, grade=None) -> str:
    return json.dumps(cls.to_json(grade), sort_keys=True)


def basis_of_degree(eng: QuantumCohomology, d: int) -> list[Index]:
    """All ``(w, lam)`` with ``l(w) + <2 rho, lam> = d`` and ``lam >= 0``."""
    out = []
    lengths = eng.group.lengths
    n = eng.n
    for k in range(d // 2 + 1):
        for lam in _monomials(n, k):
            rest = d - 2 * k
            out.extend((w, lam) for w, l in enumerate(lengths) if l == rest)
    return out


def _monomials(n, total):
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _monomials(n - 1, total - first):
            yield (first,) + rest


def effective_coroots(n: int, max_total: int):
    """Nonnegative coroots with coordinate sum at most ``max_total``."""
    for k in range(max_total + 1):
        yield from _monomials(n, k)


__all__ = [
    "QHClass", "QuantumCohomology", "engine_for", "chevalley_mul", "qmul", "gw_invariant",
    "divisor_expression", "qhp_mul", "classical_cup_PB", "basis_of_degree", "effective_coroots",
    "cartesian",
]
