"""Classical root systems and t-regular subalgebras as combinatorial data.

Roots live in integer e_i coordinates (A_n inside the zero-sum hyperplane of
R^{n+1}, B/C/D in R^n).  A t-regular subalgebra is a pair (toral subspace of
the Cartan coordinate space, closed set of roots); parabolic sets, normalizers,
Lie/module closures and Weyl orbits are all finite set manipulations here.
"""

from __future__ import annotations

import itertools
import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from crlie.exactlin import (
    DenseMatrix,
    Subspace,
    canonicalize,
    solve_linear,
)

Root = tuple  # integer coordinate tuple


def neg(alpha: Root) -> Root:
    return tuple(-a for a in alpha)


def root_sum(alpha: Root, beta: Root) -> Root:
    return tuple(a + b for a, b in zip(alpha, beta))


def format_root(alpha: Root) -> str:
    """Render a root in e_i syntax, e.g. "e1-e3", "2e1", "-e2"."""
    parts = []
    for i, c in enumerate(alpha):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        term = f"{mag}e{i + 1}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+{term}" if c > 0 else f"-{term}")
    return "".join(parts) if parts else "0"


def parse_root(text: str, coord_dim: int) -> Root:
    """Parse e_i syntax back into a coordinate tuple."""
    coords = [0] * coord_dim
    cleaned = text.replace(" ", "")
    if not _re.fullmatch(r"[+-]?\d*e\d+([+-]\d*e\d+)*", cleaned):
        raise ValueError(f"bad root literal {text!r}")
    for m in _re.finditer(r"([+-]?)(\d*)e(\d+)", cleaned):
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        idx = int(m.group(3)) - 1
        if not 0 <= idx < coord_dim:
            raise ValueError(f"coordinate e{idx + 1} out of range in {text!r}")
        coords[idx] += sign * mag
    return tuple(coords)


class RootSystem:
    """A classical root system of type A, B, C or D in e_i coordinates."""

    def __init__(self, family: str, rank: int):
        family = family.upper()
        if family not in ("A", "B", "C", "D"):
            raise ValueError(f"unsupported family {family!r}")
        if rank < 1:
            raise ValueError("rank must be positive")
        if family == "D" and rank < 3:
            raise ValueError("family D needs rank >= 3")
        self.family = family
        self.rank = rank
        self.coord_dim = rank + 1 if family == "A" else rank
        self.roots = frozenset(self._generate())
        self.roots_sorted = tuple(sorted(self.roots))
        self.positive_roots = tuple(
            sorted(a for a in self.roots if self._is_positive(a))
        )
        self.simple_roots = self._simples()
        self.cartan = self._cartan_space()
        self._simple_coeffs: dict[Root, tuple] = {}
        expected = {
            "A": rank * (rank + 1),
            "B": 2 * rank * rank,
            "C": 2 * rank * rank,
            "D": 2 * rank * (rank - 1),
        }[family]
        assert len(self.roots) == expected

    def _generate(self):
        n = self.coord_dim

        def e(i, c=1):
            v = [0] * n
            v[i] = c
            return v

        out = []
        if self.family == "A":
            for i in range(n):
                for j in range(n):
                    if i != j:
                        v = e(i)
                        v[j] -= 1
                        out.append(tuple(v))
            return out
        for i in range(n):
            for j in range(i + 1, n):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [0] * n
                        v[i], v[j] = si, sj
                        out.append(tuple(v))
        if self.family == "B":
            for i in range(n):
                out.append(tuple(e(i)))
                out.append(tuple(e(i, -1)))
        elif self.family == "C":
            for i in range(n):
                out.append(tuple(e(i, 2)))
                out.append(tuple(e(i, -2)))
        return out

    @staticmethod
    def _is_positive(alpha: Root) -> bool:
        for a in alpha:
            if a:
                return a > 0
        return False

    def _simples(self):
        n = self.coord_dim
        simples = []
        for i in range(self.rank - 1 if self.family != "A" else self.rank):
            v = [0] * n
            v[i], v[i + 1] = 1, -1
            simples.append(tuple(v))
        if self.family == "B":
            v = [0] * n
            v[n - 1] = 1
            simples.append(tuple(v))
        elif self.family == "C":
            v = [0] * n
            v[n - 1] = 2
            simples.append(tuple(v))
        elif self.family == "D":
            v = [0] * n
            v[n - 2], v[n - 1] = 1, 1
            simples.append(tuple(v))
        return tuple(simples)

    def _cartan_space(self) -> Subspace:
        if self.family != "A":
            return Subspace.full(self.coord_dim)
        return canonicalize(list(self.simple_roots), self.coord_dim)

    def is_root(self, alpha) -> bool:
        return tuple(alpha) in self.roots

    def coroot(self, alpha: Root) -> Root:
        norm = sum(a * a for a in alpha)
        scaled = [Fraction(2 * a, norm) for a in alpha]
        assert all(c.denominator == 1 for c in scaled)
        return tuple(int(c) for c in scaled)

    def simple_coefficients(self, alpha: Root) -> tuple:
        """Integer coordinates of a root in the simple-root basis."""
        alpha = tuple(alpha)
        cached = self._simple_coeffs.get(alpha)
        if cached is not None:
            return cached
        columns = DenseMatrix(
            [[s[i] for s in self.simple_roots] for i in range(self.coord_dim)]
        )
        sol = solve_linear(columns, list(alpha))
        assert sol is not None, "root outside the simple-root span"
        coeffs = []
        for c in sol:
            assert not c.im and c.re.denominator == 1
            coeffs.append(int(c.re))
        out = tuple(coeffs)
        self._simple_coeffs[alpha] = out
        return out

    def fundamental_coweight(self, index: int) -> tuple:
        """A rational vector A with alpha_j(A) = delta_{j,index} (1-based index)."""
        if not 1 <= index <= self.rank:
            raise ValueError("simple-root index out of range")
        rows = DenseMatrix([list(s) for s in self.simple_roots])
        rhs = [1 if j == index - 1 else 0 for j in range(self.rank)]
        sol = solve_linear(rows, rhs)
        assert sol is not None
        return tuple(c.re for c in sol)

    def parse_root(self, text: str) -> Root:
        alpha = parse_root(text, self.coord_dim)
        if alpha not in self.roots:
            raise ValueError(f"{text!r} is not a root of {self}")
        return alpha

    def __eq__(self, other):
        return (
            isinstance(other, RootSystem)
            and (self.family, self.rank) == (other.family, other.rank)
        )

    def __hash__(self):
        return hash((self.family, self.rank))

    def __repr__(self):
        return f"RootSystem({self.family}{self.rank})"


def build_root_system(family: str, rank: int) -> RootSystem:
    return RootSystem(family, rank)


def is_closed(system: RootSystem, rootset: Iterable[Root]) -> bool:
    s = set(rootset)
    for a, b in itertools.combinations(s, 2):
        c = root_sum(a, b)
        if c in system.roots and c not in s:
            return False
    return True


def closed_closure(system: RootSystem, rootset: Iterable[Root]) -> frozenset:
    """Smallest closed set of roots containing the input."""
    s = set(tuple(a) for a in rootset)
    if not s <= system.roots:
        raise ValueError("input contains non-roots")
    grew = True
    while grew:
        grew = False
        for a, b in itertools.combinations(list(s), 2):
            c = root_sum(a, b)
            if c in system.roots and c not in s:
                s.add(c)
                grew = True
    return frozenset(s)


def _coroot_line(system: RootSystem, alpha: Root) -> Subspace:
    return canonicalize([list(system.coroot(alpha))], system.coord_dim)


class RegularSpan:
    """A t-stable subspace: toral part plus a set of root spaces.

    Unlike RegularSubalgebra there is no closure requirement; module closures
    and intermediate sums live here.
    """

    def __init__(self, system: RootSystem, toral: Subspace, rootset):
        self.system = system
        self.toral = toral
        self.rootset = frozenset(tuple(a) for a in rootset)
        if not self.rootset <= system.roots:
            raise ValueError("rootset contains non-roots")
        if toral.ambient_dim != system.coord_dim:
            raise ValueError("toral subspace has wrong ambient dimension")
        if not toral.is_subspace_of(system.cartan):
            raise ValueError("toral part is not inside the Cartan subalgebra")

    @property
    def dim(self) -> int:
        return self.toral.dim + len(self.rootset)

    def same_span(self, other: "RegularSpan") -> bool:
        return (
            self.system == other.system
            and self.toral == other.toral
            and self.rootset == other.rootset
        )

    def __eq__(self, other):
        return isinstance(other, RegularSpan) and self.same_span(other)

    def __hash__(self):
        return hash((self.system, self.toral, self.rootset))

    def __repr__(self):
        roots = ",".join(format_root(a) for a in sorted(self.rootset))
        return (
            f"{type(self).__name__}({self.system.family}{self.system.rank}, "
            f"toral dim {self.toral.dim}, roots {{{roots}}})"
        )


class RegularSubalgebra(RegularSpan):
    """A subalgebra normalized by the Cartan: closed root set + toral part,
    with coroots of opposite pairs inside the toral part."""

    def __init__(self, system: RootSystem, toral: Subspace, rootset):
        super().__init__(system, toral, rootset)
        if not is_closed(system, self.rootset):
            raise ValueError("rootset is not closed")
        for alpha in self.rootset:
            if neg(alpha) in self.rootset:
                if not self.toral.contains(list(system.coroot(alpha))):
                    raise ValueError(
                        f"coroot of {format_root(alpha)} missing from toral part"
                    )

    @property
    def nilpotent_roots(self) -> frozenset:
        return frozenset(a for a in self.rootset if neg(a) not in self.rootset)

    @property
    def reductive_roots(self) -> frozenset:
        return frozenset(a for a in self.rootset if neg(a) in self.rootset)

    def conj(self) -> "RegularSubalgebra":
        return RegularSubalgebra(
            self.system,
            self.toral.conjugate(),
            frozenset(neg(a) for a in self.rootset),
        )

    def meets(self, other: "RegularSpan") -> "RegularSpan":
        return RegularSpan(
            self.system,
            self.toral.meet(other.toral),
            self.rootset & other.rootset,
        )

    def is_contained_in(self, other: "RegularSpan") -> bool:
        return (
            self.toral.is_subspace_of(other.toral)
            and self.rootset <= other.rootset
        )


def nr_and_levi(v: RegularSubalgebra) -> tuple[frozenset, RegularSubalgebra]:
    """Nilpotent ideal roots V_n and the Levi part (toral, V_r) of a regular
    subalgebra."""
    vn = v.nilpotent_roots
    levi = RegularSubalgebra(v.system, v.toral, v.reductive_roots)
    return vn, levi


def normalizer_regular(system: RootSystem, nilpotent_set) -> RegularSubalgebra:
    """Normalizer in k of the span of a purely nilpotent closed root set:
    full Cartan plus every k^beta with -beta outside the set that maps the
    set into itself under root addition."""
    n = frozenset(tuple(a) for a in nilpotent_set)
    if not n <= system.roots:
        raise ValueError("input contains non-roots")
    if n & frozenset(neg(a) for a in n):
        raise ValueError("set is not purely nilpotent (contains an opposite pair)")
    if not is_closed(system, n):
        raise ValueError("set is not closed")
    keep = []
    for beta in system.roots_sorted:
        if neg(beta) in n:
            continue
        ok = True
        for alpha in n:
            s = root_sum(alpha, beta)
            if s in system.roots and s not in n:
                ok = False
                break
        if ok:
            keep.append(beta)
    return RegularSubalgebra(system, system.cartan, frozenset(keep))


def regular_sum(system: RootSystem, pieces: Sequence[RegularSpan]) -> RegularSpan:
    toral = Subspace.zero(system.coord_dim)
    roots: set = set()
    for p in pieces:
        toral = toral.join(p.toral)
        roots |= p.rootset
    return RegularSpan(system, toral, roots)


def lie_closure_regular(
    system: RootSystem,
    span: RegularSpan,
    mode: str = "algebra",
    levi: RegularSpan | None = None,
):
    """Close a t-stable span under brackets.

    In "algebra" mode the result is the Lie subalgebra generated by the span
    (sums of roots are added, opposite pairs contribute coroot lines to the
    toral part) and is returned as a RegularSubalgebra.  In "module" mode the
    result is the levi-module generated by the span (only levi roots may be
    added to elements) and is returned as a RegularSpan, since it need not be
    a subalgebra.
    """
    toral = span.toral
    roots = set(span.rootset)
    if mode == "algebra":
        roots = set(closed_closure(system, roots))
        for alpha in list(roots):
            if neg(alpha) in roots:
                toral = toral.join(_coroot_line(system, alpha))
        return RegularSubalgebra(system, toral, frozenset(roots))
    if mode != "module":
        raise ValueError(f"unknown closure mode {mode!r}")
    if levi is None:
        raise ValueError("module closure needs the acting Levi subalgebra")
    grew = True
    while grew:
        grew = False
        for beta in levi.rootset:
            for gamma in list(roots):
                s = root_sum(beta, gamma)
                if s in system.roots and s not in roots:
                    roots.add(s)
                    grew = True
                if gamma == neg(beta):
                    line = _coroot_line(system, beta)
                    if not line.is_subspace_of(toral):
                        toral = toral.join(line)
                        grew = True
            if beta not in roots and any(
                sum(b * h for b, h in zip(beta, row)) for row in toral.basis
            ):
                roots.add(beta)
                grew = True
    return RegularSpan(system, toral, frozenset(roots))


class ParabolicRootSet:
    """A parabolic set of roots Q with Q union -Q = R, split as Q_n | Q_r."""

    def __init__(self, system: RootSystem, rootset):
        q = frozenset(tuple(a) for a in rootset)
        if not q <= system.roots:
            raise ValueError("rootset contains non-roots")
        if not is_closed(system, q):
            raise ValueError("parabolic set must be closed")
        if not all(a in q or neg(a) in q for a in system.roots):
            raise ValueError("Q union -Q must be all of R")
        self.system = system
        self.q = q
        self.q_n = frozenset(a for a in q if neg(a) not in q)
        self.q_r = frozenset(a for a in q if neg(a) in q)

    @property
    def dim(self) -> int:
        return self.system.cartan.dim + len(self.q)

    def to_regular(self) -> RegularSubalgebra:
        return RegularSubalgebra(self.system, self.system.cartan, self.q)

    def levi(self) -> RegularSubalgebra:
        return RegularSubalgebra(self.system, self.system.cartan, self.q_r)

    def contains_parabolic(self, other: "ParabolicRootSet") -> bool:
        return other.q <= self.q

    def sort_key(self):
        return tuple(sorted(self.q))

    def __eq__(self, other):
        return (
            isinstance(other, ParabolicRootSet)
            and self.system == other.system
            and self.q == other.q
        )

    def __hash__(self):
        return hash((self.system, self.q))

    def __repr__(self):
        qr = ",".join(format_root(a) for a in sorted(self.q_r))
        return f"ParabolicRootSet({self.system.family}{self.system.rank}, Q_r={{{qr}}})"


def parabolic_from_grading(system: RootSystem, a: Sequence) -> ParabolicRootSet:
    """q_A: all roots with alpha(A) >= 0, for a rational covector A."""
    vec = [Fraction(x) for x in a]
    if len(vec) != system.coord_dim:
        raise ValueError("grading covector has wrong length")
    q = [
        alpha
        for alpha in system.roots_sorted
        if sum(c * x for c, x in zip(alpha, vec)) >= 0
    ]
    return ParabolicRootSet(system, q)


def parabolic_from_crosses(system: RootSystem, crosses: Iterable[int]) -> ParabolicRootSet:
    """Parabolic selected by crossed simple roots (1-based indices): roots
    with nonnegative coefficients on every crossed simple root."""
    crossed = sorted(set(crosses))
    for c in crossed:
        if not 1 <= c <= system.rank:
            raise ValueError(f"crossed index {c} out of range 1..{system.rank}")
    q = [
        alpha
        for alpha in system.roots_sorted
        if all(system.simple_coefficients(alpha)[c - 1] >= 0 for c in crossed)
    ]
    return ParabolicRootSet(system, q)


def standard_parabolic(system: RootSystem, levi_simples: Iterable[int]) -> ParabolicRootSet:
    """Standard parabolic containing the standard Borel, whose Levi part is
    generated by the given simple roots (1-based indices)."""
    chosen = set(levi_simples)
    crosses = [i for i in range(1, system.rank + 1) if i not in chosen]
    return parabolic_from_crosses(system, crosses)


def standard_borel(system: RootSystem) -> ParabolicRootSet:
    return ParabolicRootSet(system, system.positive_roots)


# ---------------------------------------------------------------------------
# Weyl group enumeration (signed permutations) and parabolic enumeration.
# ---------------------------------------------------------------------------

RANK_CAP_DEFAULT = 6


def _weyl_signed_perms(system: RootSystem):
    n = system.coord_dim
    if system.family == "A":
        for perm in itertools.permutations(range(n)):
            yield perm, (1,) * n
        return
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            if system.family == "D" and signs.count(-1) % 2:
                continue
            yield perm, signs


def weyl_apply(element, alpha: Root) -> Root:
    perm, signs = element
    return tuple(signs[i] * alpha[perm[i]] for i in range(len(alpha)))


def weyl_root_permutations(system: RootSystem, rank_cap: int = RANK_CAP_DEFAULT):
    """Each Weyl element as a permutation of root indices (deterministic order)."""
    if system.rank > rank_cap:
        raise ValueError(
            f"rank {system.rank} exceeds the Weyl enumeration cap {rank_cap}"
        )
    index = {a: i for i, a in enumerate(system.roots_sorted)}
    out = []
    for element in _weyl_signed_perms(system):
        out.append(
            tuple(index[weyl_apply(element, a)] for a in system.roots_sorted)
        )
    return out


def enumerate_parabolics(
    system: RootSystem, rank_cap: int = RANK_CAP_DEFAULT
) -> list[ParabolicRootSet]:
    """All parabolic subsets of R: Weyl orbits of the standard parabolics."""
    perms = weyl_root_permutations(system, rank_cap)
    index = {a: i for i, a in enumerate(system.roots_sorted)}
    seen = set()
    for subset in itertools.product((0, 1), repeat=system.rank):
        chosen = [i + 1 for i, bit in enumerate(subset) if bit]
        std = standard_parabolic(system, chosen)
        std_idx = frozenset(index[a] for a in std.q)
        for perm in perms:
            seen.add(frozenset(perm[i] for i in std_idx))
    out = [
        ParabolicRootSet(system, [system.roots_sorted[i] for i in idx_set])
        for idx_set in seen
    ]
    out.sort(key=ParabolicRootSet.sort_key)
    return out


def weyl_conjugate_sets(
    system: RootSystem, set1, set2, rank_cap: int = RANK_CAP_DEFAULT
) -> bool:
    """Is some Weyl element mapping the first root set onto the second?"""
    s1 = frozenset(tuple(a) for a in set1)
    s2 = frozenset(tuple(a) for a in set2)
    if len(s1) != len(s2):
        return False
    index = {a: i for i, a in enumerate(system.roots_sorted)}
    i1 = frozenset(index[a] for a in s1)
    i2 = frozenset(index[a] for a in s2)
    for perm in weyl_root_permutations(system, rank_cap):
        if frozenset(perm[i] for i in i1) == i2:
            return True
    return False


# ---------------------------------------------------------------------------
# strongly orthogonal sets
# ---------------------------------------------------------------------------


def strongly_orthogonal(system: RootSystem, alpha: Root, beta: Root) -> bool:
    if alpha == beta or alpha == neg(beta):
        return False
    return (
        root_sum(alpha, beta) not in system.roots
        and root_sum(alpha, neg(beta)) not in system.roots
    )


def strongly_orthogonal_maximal_sets(system: RootSystem, candidates) -> list[frozenset]:
    """All inclusion-maximal subsets of the candidates that are pairwise
    strongly orthogonal, in deterministic order."""
    cand = sorted(set(tuple(a) for a in candidates))
    if not set(cand) <= system.roots:
        raise ValueError("candidates contain non-roots")
    compat = {
        a: {b for b in cand if strongly_orthogonal(system, a, b)} for a in cand
    }
    results = []

    def extend(current, allowed, forbidden):
        if not allowed and not forbidden:
            results.append(frozenset(current))
            return
        for a in list(allowed):
            extend(
                current + [a],
                allowed & compat[a],
                forbidden & compat[a],
            )
            allowed = allowed - {a}
            forbidden = forbidden | {a}

    extend([], set(cand), set())
    unique = sorted(set(results), key=lambda s: tuple(sorted(s)))
    return unique
