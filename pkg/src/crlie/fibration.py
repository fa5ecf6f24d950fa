"""Equivariant maps between CR algebras and the poset of compatible parabolics.

Covers the classification flags of a map (k0, v) -> (k0, e), membership and
maximal/minimal searches in Par(v) = {q parabolic : v in q, nr(v) cap L(q) = 0},
z-root decompositions of a parabolic, the lift v_q = v + nr(q), and the
homotopic characteristic of the intermediate fiber.  Matrix and t-regular
backends are implemented separately so tests can cross-check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from crlie.crcore import (
    is_n_reductive,
    is_n_reductive_regular,
    levi_part,
    levi_part_regular,
    strengthens,
    strengthens_regular,
)
from crlie.exactlin import DenseMatrix, Subspace, canonicalize, kernel
from crlie.matrixlie import (
    Subalg,
    bracket_closure,
    centralizer,
    derived_series,
    is_subalgebra,
    maximal_torus,
    nilradical_nr,
)
from crlie.regularize import certify_parabolic
from crlie.rootsys import (
    RANK_CAP_DEFAULT,
    ParabolicRootSet,
    RegularSpan,
    RegularSubalgebra,
    enumerate_parabolics,
    lie_closure_regular,
    neg,
    regular_sum,
    weyl_conjugate_sets,
)


@dataclass
class MapClassification:
    """Flags of an equivariant map (k0, v) -> (k0, e), plus the subspaces that
    were compared to decide them."""

    is_cr: bool
    is_submersion: bool
    is_spread: bool
    is_deployment: bool
    fibers_totally_real: bool
    fibers_totally_complex: bool
    witnesses: dict

    def __post_init__(self):
        assert not self.is_submersion or self.is_spread
        assert not self.is_deployment or (
            self.is_spread and self.fibers_totally_real
        )

    def flags(self) -> dict:
        """Fixed-key boolean map, for reports."""
        return {
            "is_cr": self.is_cr,
            "is_submersion": self.is_submersion,
            "is_spread": self.is_spread,
            "is_deployment": self.is_deployment,
            "fibers_totally_real": self.fibers_totally_real,
            "fibers_totally_complex": self.fibers_totally_complex,
        }


def classify_map(v: Subalg, e: Subalg) -> MapClassification:
    """Classify (k0, v) -> (k0, e) for matrix subalgebras.

    The map is CR iff v is contained in e; a submersion iff e = v + L(e); a
    spread iff e is generated by v + L(e) as a Lie algebra.  Fibers are
    totally real iff v cap sigma(e) = e cap sigma(v) = L(v) and totally
    complex iff those two meets sum to L(e).  The fiber conditions are only
    meaningful for CR maps and are reported false otherwise.
    """
    if v.ambient is not e.ambient:
        raise ValueError("map endpoints live in different ambient algebras")
    is_cr = v.is_subspace_of(e)
    lv = levi_part(v)
    le = levi_part(e)
    v_plus_le = v.join(le)
    closure = bracket_closure(v_plus_le)
    vse = v.meet(e.sigma_image())
    esv = e.meet(v.sigma_image())
    is_submersion = is_cr and v_plus_le.space == e.space
    is_spread = is_cr and closure.space == e.space
    totally_real = is_cr and vse.space == lv.space and esv.space == lv.space
    totally_complex = is_cr and vse.join(esv).space == le.space
    return MapClassification(
        is_cr=is_cr,
        is_submersion=is_submersion,
        is_spread=is_spread,
        is_deployment=is_spread and totally_real,
        fibers_totally_real=totally_real,
        fibers_totally_complex=totally_complex,
        witnesses={
            "levi_v": lv,
            "levi_e": le,
            "v_plus_levi_e": v_plus_le,
            "lie_closure": closure,
            "v_meet_conj_e": vse,
            "e_meet_conj_v": esv,
        },
    )


def classify_regular(
    v: RegularSubalgebra, e: RegularSubalgebra
) -> MapClassification:
    """Same flags as classify_map, decided purely on toral parts and root
    sets."""
    if v.system != e.system:
        raise ValueError("map endpoints live in different root systems")
    system = v.system
    is_cr = v.is_contained_in(e)
    lv = levi_part_regular(v)
    le = levi_part_regular(e)
    v_plus_le = regular_sum(system, [v, le])
    closure = lie_closure_regular(system, v_plus_le, mode="algebra")
    vse = v.meets(e.conj())
    esv = e.meets(v.conj())
    is_submersion = is_cr and v_plus_le.same_span(e)
    is_spread = is_cr and closure.same_span(e)
    totally_real = is_cr and vse.same_span(lv) and esv.same_span(lv)
    totally_complex = is_cr and regular_sum(system, [vse, esv]).same_span(le)
    return MapClassification(
        is_cr=is_cr,
        is_submersion=is_submersion,
        is_spread=is_spread,
        is_deployment=is_spread and totally_real,
        fibers_totally_real=totally_real,
        fibers_totally_complex=totally_complex,
        witnesses={
            "levi_v": lv,
            "levi_e": le,
            "v_plus_levi_e": v_plus_le,
            "lie_closure": closure,
            "v_meet_conj_e": vse,
            "e_meet_conj_v": esv,
        },
    )


# ---------------------------------------------------------------------------
# the poset Par(v)
# ---------------------------------------------------------------------------


def par_membership(v: Subalg, q: Subalg) -> bool:
    """Is q in Par(v)?  q must pass the parabolic certificate."""
    if v.ambient is not q.ambient:
        raise ValueError("v and q live in different ambient algebras")
    if not certify_parabolic(q).ok:
        raise ValueError("q does not certify as a parabolic subalgebra")
    return (
        v.is_subspace_of(q)
        and nilradical_nr(v).meet(levi_part(q)).dim == 0
    )


def par_membership_regular(v: RegularSubalgebra, q: ParabolicRootSet) -> bool:
    """Is q in Par(v), for t-regular v?  Here v in q reads as rootset
    containment and nr(v) cap L(q) = 0 as disjointness from Q_r."""
    if v.system != q.system:
        raise ValueError("v and q live in different root systems")
    return v.rootset <= q.q and not (v.nilpotent_roots & q.q_r)


def maximal_par(
    v: RegularSubalgebra,
    containing: ParabolicRootSet | None = None,
    rank_cap: int = RANK_CAP_DEFAULT,
) -> list[ParabolicRootSet]:
    """Inclusion-maximal elements of Par(v), optionally restricted to those
    containing a given parabolic.  Any member strictly above a restricted
    element still contains the constraint, so the restricted maximal elements
    are maximal in Par(v) as well."""
    members = [
        q
        for q in enumerate_parabolics(v.system, rank_cap)
        if par_membership_regular(v, q)
    ]
    if containing is not None:
        members = [q for q in members if q.contains_parabolic(containing)]
    out = [
        q
        for q in members
        if not any(o != q and o.contains_parabolic(q) for o in members)
    ]
    out.sort(key=ParabolicRootSet.sort_key)
    return out


def minimal_par(
    v: RegularSubalgebra, rank_cap: int = RANK_CAP_DEFAULT
) -> list[ParabolicRootSet]:
    """Inclusion-minimal elements of Par(v).  Each must absorb nr(v) into its
    nilradical and all their Levi root sets must be Weyl conjugate; both facts
    are rechecked here."""
    members = [
        q
        for q in enumerate_parabolics(v.system, rank_cap)
        if par_membership_regular(v, q)
    ]
    out = [
        q
        for q in members
        if not any(o != q and q.contains_parabolic(o) for o in members)
    ]
    out.sort(key=ParabolicRootSet.sort_key)
    for q in out:
        assert v.nilpotent_roots <= q.q_n, (
            f"minimal element {q!r} does not absorb nr(v)"
        )
    for q in out[1:]:
        assert weyl_conjugate_sets(v.system, out[0].q_r, q.q_r, rank_cap), (
            "minimal elements with non-conjugate Levi root sets"
        )
    return out


def combine_parabolics(
    q1: Subalg, q2: Subalg, v: Subalg | None = None
) -> Subalg:
    """q = nr(q1) + q1 cap q2, again parabolic; with v given, membership of
    q1, q2 and of the result in Par(v) is enforced."""
    if v is not None and not (par_membership(v, q1) and par_membership(v, q2)):
        raise ValueError("inputs are not both in Par(v)")
    q = nilradical_nr(q1).join(q1.meet(q2))
    assert certify_parabolic(q).ok, "combined subalgebra failed the certificate"
    if v is not None:
        assert par_membership(v, q)
    return q


def combine_parabolics_regular(
    q1: ParabolicRootSet,
    q2: ParabolicRootSet,
    v: RegularSubalgebra | None = None,
) -> ParabolicRootSet:
    if q1.system != q2.system:
        raise ValueError("parabolics live in different root systems")
    if v is not None and not (
        par_membership_regular(v, q1) and par_membership_regular(v, q2)
    ):
        raise ValueError("inputs are not both in Par(v)")
    q = ParabolicRootSet(q1.system, q1.q_n | (q1.q & q2.q))
    if v is not None:
        assert par_membership_regular(v, q)
    return q


# ---------------------------------------------------------------------------
# deployments
# ---------------------------------------------------------------------------


def deployment_verify(
    v: RegularSubalgebra, q: ParabolicRootSet, mode: str = "algebra"
) -> bool:
    """Does nr(v) + L(q) generate q in the given closure mode?

    For n-reductive v and q maximal in Par(v) the answer in "algebra" mode is
    a theorem; "module" mode asks for generation as an L(q)-module instead,
    which can genuinely fail.  When the algebra mode succeeds the resulting
    map is rechecked to be a deployment.
    """
    if not par_membership_regular(v, q):
        raise ValueError("q is not in Par(v)")
    if not is_n_reductive_regular(v):
        raise ValueError("deployment check needs an n-reductive v")
    system = v.system
    levi = q.levi()
    nr_span = RegularSpan(
        system, Subspace.zero(system.coord_dim), v.nilpotent_roots
    )
    start = regular_sum(system, [nr_span, levi])
    closure = lie_closure_regular(system, start, mode=mode, levi=levi)
    ok = closure.same_span(q.to_regular())
    if ok and mode == "algebra":
        flags = classify_regular(v, q.to_regular())
        assert flags.is_deployment, "generating parabolic is not a deployment"
    return ok


# ---------------------------------------------------------------------------
# z-root decompositions
# ---------------------------------------------------------------------------


@dataclass
class ZRootDecomposition:
    """Decomposition of the root spaces of k under the center z of L(q).

    zroots lists every nonzero restriction nu together with its component
    k_nu as a sorted root tuple; positive is the sublist of nu whose
    components fill nr(q); simple_zroots are the indecomposable positive
    entries."""

    center: Subspace
    zroots: tuple
    positive: tuple
    simple_zroots: tuple


def _restriction(alpha, basis) -> tuple:
    return tuple(
        sum((Fraction(a) * x.re for a, x in zip(alpha, row)), Fraction(0))
        for row in basis
    )


def _count_sums(target, fvalue, keys, fvals, idx) -> int:
    """Number of multisets of keys summing to target; fvalue is the value of
    a functional that is positive on every key, which bounds the search."""
    if not any(target):
        return 1
    if fvalue <= 0 or idx == len(keys):
        return 0
    total = 0
    cur, curf = target, fvalue
    while curf >= 0:
        total += _count_sums(cur, curf, keys, fvals, idx + 1)
        cur = tuple(a - b for a, b in zip(cur, keys[idx]))
        curf -= fvals[idx]
    return total


def z_root_decomposition(q: ParabolicRootSet) -> ZRootDecomposition:
    """Group all roots by their restriction to z = {H in t : Q_r(H) = 0}.

    Each nonzero class lies entirely inside Q_n or entirely inside -Q_n, the
    zero class is exactly Q_r, and every positive class decomposes uniquely
    into simple ones; all three facts are verified on the way.
    """
    system = q.system
    if q.q_r:
        rows = DenseMatrix([list(a) for a in sorted(q.q_r)])
        center = kernel(rows).meet(system.cartan)
    else:
        center = system.cartan
    basis = center.basis

    classes: dict = {}
    for alpha in system.roots_sorted:
        classes.setdefault(_restriction(alpha, basis), []).append(alpha)

    zero = tuple(Fraction(0) for _ in basis)
    assert frozenset(classes.get(zero, [])) == q.q_r, (
        "roots vanishing on z are not exactly the Levi roots"
    )

    zroots = []
    positive = []
    for nu in sorted(k for k in classes if k != zero):
        comp = tuple(sorted(classes[nu]))
        inside = sum(1 for a in comp if a in q.q_n)
        assert inside in (0, len(comp)), f"mixed z-root component at {nu}"
        zroots.append((nu, comp))
        if inside:
            positive.append(nu)
    covered = frozenset(
        a for nu, comp in zroots if nu in positive for a in comp
    )
    assert covered == q.q_n, "positive components do not fill nr(q)"

    # 2*rho of the nilradical lies in z and is positive on every positive
    # class; it bounds the decomposition search below.
    delta = tuple(sum(a[i] for a in q.q_n) for i in range(system.coord_dim))
    for beta in q.q_r:
        assert sum(b * d for b, d in zip(beta, delta)) == 0
    coords = [Fraction(delta[p]) for p in center.pivots]
    rebuilt = [
        sum((c * row[i].re for c, row in zip(coords, basis)), Fraction(0))
        for i in range(system.coord_dim)
    ]
    assert rebuilt == [Fraction(d) for d in delta], "2*rho_n is not in z"

    def functional(nu):
        return sum((c * x for c, x in zip(coords, nu)), Fraction(0))

    fvals = {nu: functional(nu) for nu in positive}
    assert all(fvals[nu] > 0 for nu in positive)

    keys = sorted(positive)
    kf = [fvals[nu] for nu in keys]
    simple = [
        nu
        for nu in keys
        if _count_sums(nu, fvals[nu], keys, kf, 0) == 1
    ]
    sf = [fvals[nu] for nu in simple]
    for nu in keys:
        count = _count_sums(nu, fvals[nu], simple, sf, 0)
        assert count == 1, (
            f"positive z-root {nu} has {count} decompositions into simples"
        )

    comp_of = dict(zroots)
    return ZRootDecomposition(
        center=center,
        zroots=tuple(zroots),
        positive=tuple(keys),
        simple_zroots=tuple((nu, comp_of[nu]) for nu in simple),
    )


# ---------------------------------------------------------------------------
# lifts
# ---------------------------------------------------------------------------


def lift(v: Subalg, q: Subalg) -> Subalg:
    """v_q = v + nr(q) for q in Par(v); its nilradical is nr(v) + nr(q) and,
    when v is n-reductive, v_q strengthens v with the same Levi part."""
    if not par_membership(v, q):
        raise ValueError("q is not in Par(v)")
    nrq = nilradical_nr(q)
    vq = v.join(nrq)
    assert is_subalgebra(vq)
    assert nilradical_nr(vq).space == nilradical_nr(v).join(nrq).space
    if is_n_reductive(v):
        assert levi_part(vq).space == levi_part(v).space
        assert is_n_reductive(vq)
        assert strengthens(v, vq)
    return vq


def lift_regular(v: RegularSubalgebra, q: ParabolicRootSet) -> RegularSubalgebra:
    if not par_membership_regular(v, q):
        raise ValueError("q is not in Par(v)")
    vq = RegularSubalgebra(v.system, v.toral, v.rootset | q.q_n)
    assert vq.nilpotent_roots == v.nilpotent_roots | q.q_n
    if is_n_reductive_regular(v):
        assert levi_part_regular(vq).same_span(levi_part_regular(v))
        assert is_n_reductive_regular(vq)
        assert strengthens_regular(v, vq)
    return vq


# ---------------------------------------------------------------------------
# homotopic characteristic of the intermediate fiber
# ---------------------------------------------------------------------------


def _semisimple_part(l: Subalg) -> Subalg:
    series = derived_series(l)
    return Subalg(l.ambient, series[1]) if len(series) > 1 else l


def homotopic_characteristic(q: Subalg, m: Subalg, seed: int = 0) -> int:
    """c = rank(s) - dim(tau cap s) for s = [L(q), L(q)] and tau a maximal
    torus of m, the Levi part of the CR algebra being fibered.

    The proof route rank(m + s) - rank(m) is computed as well and must agree.
    """
    lq = levi_part(q)
    if not m.is_subspace_of(lq):
        raise ValueError("m must lie inside the Levi part of q")
    s = _semisimple_part(lq)
    tau = maximal_torus(m, seed=seed) if m.dim else m
    rank_s = maximal_torus(s, seed=seed).dim if s.dim else 0
    c = rank_s - tau.meet(s).dim
    l = m.join(s)
    rank_l = maximal_torus(l, seed=seed).dim if l.dim else 0
    assert c == rank_l - tau.dim, "torus count disagrees with rank formula"
    assert c >= 0
    return c


def euler_positive_clause(q: Subalg, m: Subalg, seed: int = 0) -> bool:
    """The containment t cap s in tau, for t a maximal torus adapted to the
    pair: maximal in k, inside L(q), and containing tau.  Reported
    independently of the characteristic."""
    lq = levi_part(q)
    if not m.is_subspace_of(lq):
        raise ValueError("m must lie inside the Levi part of q")
    s = _semisimple_part(lq)
    tau = maximal_torus(m, seed=seed) if m.dim else m
    adapted = maximal_torus(centralizer(tau).meet(lq), seed=seed)
    assert tau.is_subspace_of(adapted)
    return adapted.meet(s).is_subspace_of(tau)


def _coroot_span(q: ParabolicRootSet) -> Subspace:
    rows = [list(q.system.coroot(a)) for a in sorted(q.q_r)]
    return canonicalize(rows, q.system.coord_dim)


def homotopic_characteristic_regular(
    q: ParabolicRootSet, m: RegularSubalgebra
) -> int:
    """Regular backend: tau is the toral part of m and the Cartan of s is the
    coroot span of Q_r, which has the same dimension as the root span."""
    if not (m.rootset <= q.q_r and m.toral.is_subspace_of(q.system.cartan)):
        raise ValueError("m must lie inside the Levi part of q")
    span = _coroot_span(q)
    assert span.dim == canonicalize(
        [list(a) for a in sorted(q.q_r)], q.system.coord_dim
    ).dim
    c = span.dim - span.meet(m.toral).dim
    assert c >= 0
    return c


def euler_positive_clause_regular(
    q: ParabolicRootSet, m: RegularSubalgebra
) -> bool:
    """Here the adapted maximal torus is the standard Cartan, whose meet with
    s is the whole coroot span of Q_r."""
    if not (m.rootset <= q.q_r and m.toral.is_subspace_of(q.system.cartan)):
        raise ValueError("m must lie inside the Levi part of q")
    return _coroot_span(q).is_subspace_of(m.toral)
