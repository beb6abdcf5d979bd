"""The group algebra F_qG: convolution arithmetic, averaging idempotents,
the co-cyclic idempotent family, and the primitive idempotents obtained
from q-power orbits of characters.

Coefficients always live in the base field; splitting-field arithmetic is
confined to primitive_idempotents and reduced back before anything is
returned.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .abelian_group import (
    GroupElement,
    Subgroup,
    _index_p_cover_within,
    cocyclic_subgroups,
    quotient_type,
    sylow_decompose,
)
from .errors import (
    CharDividesOrder,
    GroupMismatch,
    NoUniqueSubgroup,
    NotCocyclic,
    NotIdempotent,
)
from .finite_field import FieldScalar, element_of_order, splitting_field


@lru_cache(maxsize=None)
def get_algebra(group, ctx):
    return GroupAlgebra(group, ctx)


class GroupAlgebra:
    """The pair (G, F_q); owns shared lookup tables for convolution."""

    __slots__ = ("group", "ctx")

    def __init__(self, group, ctx):
        self.group = group
        self.ctx = ctx

    def zero(self):
        return AlgebraElement(self, (self.ctx.zero,) * self.group.order)

    def one(self):
        coeffs = [self.ctx.zero] * self.group.order
        coeffs[self.group.index_of(self.group.zero)] = self.ctx.one
        return AlgebraElement(self, coeffs)

    def from_raw_coeffs(self, coeffs):
        return AlgebraElement(self, coeffs)

    def from_dict(self, assignment):
        """Build an element from {exps tuple or GroupElement: int or raw}."""
        coeffs = [self.ctx.zero] * self.group.order
        for key, val in assignment.items():
            exps = key.exps if isinstance(key, GroupElement) else tuple(key)
            raw = val.raw if isinstance(val, FieldScalar) else self.ctx.from_int(val)
            coeffs[self.group.index_of(exps)] = raw
        return AlgebraElement(self, coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, GroupAlgebra)
            and self.group == other.group
            and self.ctx == other.ctx
        )

    def __hash__(self):
        return hash((self.group.divisors, self.ctx))

    def __repr__(self):
        return "GroupAlgebra(%r, %r)" % (self.group, self.ctx)


class AlgebraElement:
    """Dense coefficient vector over the canonical element enumeration."""

    __slots__ = ("algebra", "coeffs", "_support")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = tuple(coeffs)
        self._support = None

    @property
    def support(self):
        """Indices of nonzero coefficients."""
        if self._support is None:
            zero = self.algebra.ctx.zero
            self._support = tuple(i for i, c in enumerate(self.coeffs) if c != zero)
        return self._support

    def support_elements(self):
        group = self.algebra.group
        elems = group.elements
        return tuple(GroupElement(group, elems[i]) for i in self.support)

    def coefficient(self, g):
        exps = g.exps if isinstance(g, GroupElement) else tuple(g)
        return FieldScalar(self.algebra.ctx, self.coeffs[self.algebra.group.index_of(exps)])

    def is_zero(self):
        return not self.support

    def _check(self, other):
        if not isinstance(other, AlgebraElement) or other.algebra != self.algebra:
            raise GroupMismatch("elements of different group algebras")
        return other

    def __add__(self, other):
        other = self._check(other)
        add = self.algebra.ctx.add
        return AlgebraElement(
            self.algebra, [add(a, b) for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        other = self._check(other)
        sub = self.algebra.ctx.sub
        return AlgebraElement(
            self.algebra, [sub(a, b) for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        neg = self.algebra.ctx.neg
        return AlgebraElement(self.algebra, [neg(a) for a in self.coeffs])

    def __mul__(self, other):
        """Group convolution: (ab)_x = sum over y+z=x of a_y b_z."""
        other = self._check(other)
        alg = self.algebra
        ctx = alg.ctx
        group = alg.group
        res = [ctx.zero] * group.order
        table = group.add_table()
        sc, oc = self.coeffs, other.coeffs
        if table is not None:
            for i in self.support:
                a = sc[i]
                row = table[i]
                for j in other.support:
                    k = row[j]
                    res[k] = ctx.add(res[k], ctx.mul(a, oc[j]))
        else:
            elems = group.elements
            for i in self.support:
                a = sc[i]
                ei = elems[i]
                for j in other.support:
                    k = group.index_of(group.add(ei, elems[j]))
                    res[k] = ctx.add(res[k], ctx.mul(a, oc[j]))
        return AlgebraElement(alg, res)

    def scaled(self, scalar):
        raw = scalar.raw if isinstance(scalar, FieldScalar) else self.algebra.ctx.from_int(scalar)
        mul = self.algebra.ctx.mul
        return AlgebraElement(self.algebra, [mul(raw, c) for c in self.coeffs])

    def translated(self, g):
        """Left translation by a group element (a permutation of coefficients)."""
        exps = g.exps if isinstance(g, GroupElement) else tuple(g)
        alg = self.algebra
        group = alg.group
        res = [alg.ctx.zero] * group.order
        table = group.add_table()
        if table is not None:
            row = table[group.index_of(exps)]
            for j in self.support:
                res[row[j]] = self.coeffs[j]
        else:
            elems = group.elements
            for j in self.support:
                res[group.index_of(group.add(exps, elems[j]))] = self.coeffs[j]
        return AlgebraElement(alg, res)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.algebra == other.algebra
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.algebra.group.divisors, self.algebra.ctx, self.coeffs))

    def __repr__(self):
        return "AlgebraElement(support=%d/%d)" % (len(self.support), len(self.coeffs))


class PrimitiveIdempotent:
    """A primitive idempotent with its owning co-cyclic subgroup and the
    canonical representative of the character orbit that produced it."""

    __slots__ = ("element", "orbit_rep", "phi_subgroup")

    def __init__(self, element, orbit_rep, phi_subgroup):
        self.element = element
        self.orbit_rep = tuple(orbit_rep)
        self.phi_subgroup = phi_subgroup

    def __eq__(self, other):
        return (
            isinstance(other, PrimitiveIdempotent)
            and self.element == other.element
        )

    def __hash__(self):
        return hash(self.element)

    def __repr__(self):
        return "PrimitiveIdempotent(orbit_rep=%r)" % (self.orbit_rep,)


# ---------------------------------------------------------------------------
# idempotents from subgroups
# ---------------------------------------------------------------------------

def hat(H, ctx):
    """The averaging idempotent |H|^-1 * (sum of H), supported exactly on H."""
    group = H.group
    if H.order % ctx.p == 0:
        raise CharDividesOrder(
            "field characteristic divides the subgroup order",
            characteristic=ctx.p, subgroup_order=H.order,
        )
    alg = get_algebra(group, ctx)
    inv = ctx.inv(ctx.from_int(H.order))
    coeffs = [ctx.zero] * group.order
    for e in H.elements:
        coeffs[group.index_of(e)] = inv
    return AlgebraElement(alg, coeffs)


def _check_char(group, ctx):
    if gcd(ctx.order, group.order) != 1:
        raise CharDividesOrder(
            "field characteristic divides the group order",
            characteristic=ctx.p, group_order=group.order,
        )


def cocyclic_idempotent(group, H, ctx):
    """The idempotent attached to a member of the extended co-cyclic family:
    per Sylow component, hat(G_p) when the component of H fills it, else
    hat(H_p) - hat(index-p cover of H_p); the result is the product of the
    component factors (and hat(G) for H = G)."""
    _check_char(group, ctx)
    if not isinstance(H, Subgroup) or H.group != group:
        raise NotCocyclic("H is not a subgroup of G")
    if len(quotient_type(group, H)) > 1:
        raise NotCocyclic(
            "quotient G/H is not cyclic", subgroup=[list(g) for g in H.generators]
        )
    dec = sylow_decompose(group)
    if not dec.primes:
        return get_algebra(group, ctx).one()
    result = None
    for p in dec.primes:
        Gp = dec.embed_component(p)
        Hp = H.sylow_part(p)
        if Hp == Gp:
            factor = hat(Gp, ctx)
        else:
            covers = _index_p_cover_within(group, Gp.elements, Hp, p)
            if len(covers) != 1:
                raise NotCocyclic("index-p cover not unique inside the Sylow component")
            factor = hat(Hp, ctx) - hat(covers[0], ctx)
        result = factor if result is None else result * factor
    return result


def cocyclic_idempotent_family(group, ctx):
    """All pairs (H, e_H) over the co-cyclic subgroups together with G
    itself; pairwise orthogonal and summing to 1."""
    _check_char(group, ctx)
    members = cocyclic_subgroups(group) + [Subgroup.whole(group)]
    members.sort(key=lambda s: s.elements)
    return [(H, cocyclic_idempotent(group, H, ctx)) for H in members]


def phi_subgroup(e, family):
    """The unique family member whose idempotent acts as identity on e.

    Decided by direct multiplication against every family idempotent, so
    each call re-checks uniqueness.
    """
    if isinstance(e, PrimitiveIdempotent):
        e = e.element
    if e.is_zero() or e * e != e:
        raise NotIdempotent("phi_subgroup expects a nonzero idempotent")
    hits = []
    for H, eH in family:
        prod = e * eH
        if not prod.is_zero():
            hits.append((H, prod))
    if len(hits) != 1 or hits[0][1] != e:
        raise NoUniqueSubgroup(
            "idempotent meets %d family members; not primitive" % len(hits),
            hit_count=len(hits),
        )
    return hits[0][0]


# ---------------------------------------------------------------------------
# primitive idempotents via q-power character orbits
# ---------------------------------------------------------------------------

def _character_orbits(group, q):
    """Orbits of exponent tuples under k -> q*k, with lex-minimal reps."""
    orbits = []
    seen = set()
    for k in group.elements:
        if k in seen:
            continue
        orbit = []
        cur = k
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            cur = group.scale(q, cur)
        orbits.append((min(orbit), orbit))
    orbits.sort()
    return orbits


def primitive_idempotents(group, ctx):
    """The complete orthogonal family of primitive idempotents of F_qG.

    Characters are partitioned into q-power orbits; each orbit sum is an
    idempotent with coefficients fixed by the q-Frobenius, hence living in
    the base field.  Output is sorted by canonical orbit representative and
    each entry carries its owning co-cyclic subgroup.
    """
    _check_char(group, ctx)
    alg = get_algebra(group, ctx)
    n = group.exponent
    big, _embed, restrict = splitting_field(ctx, n)
    root = element_of_order(big, n)
    powers = [big.one]
    for _ in range(n - 1):
        powers.append(big.mul(powers[-1], root))
    weights = [n // d for d in group.divisors]
    elems = group.elements
    # pairing vector of -g against each coordinate, reduced mod n
    pair_vecs = []
    for g in elems:
        ng = group.neg(g)
        pair_vecs.append(tuple(w * x % n for w, x in zip(weights, ng)))
    inv_order = ctx.inv(ctx.from_int(group.order))
    q = ctx.order
    out = []
    for rep, orbit in _character_orbits(group, q):
        coeffs = []
        for pv in pair_vecs:
            s = big.zero
            for k in orbit:
                idx = 0
                for ki, wi in zip(k, pv):
                    idx += ki * wi
                s = big.add(s, powers[idx % n])
            try:
                raw = restrict(s)
            except ArithmeticError as exc:
                raise AssertionError(
                    "character-orbit sum escaped the base field; "
                    "orbit partition is inconsistent"
                ) from exc
            coeffs.append(ctx.mul(raw, inv_order))
        out.append(PrimitiveIdempotent(AlgebraElement(alg, coeffs), rep, None))
    family = cocyclic_idempotent_family(group, ctx)
    for ide in out:
        ide.phi_subgroup = phi_subgroup(ide.element, family)
    return out


# ---------------------------------------------------------------------------
# automorphism action and invariant elements
# ---------------------------------------------------------------------------

def apply_automorphism(psi, alpha):
    """Linear extension of a group automorphism: the coefficient of psi(g)
    in the result is the coefficient of g in alpha."""
    group = alpha.algebra.group
    if psi.group != group:
        raise GroupMismatch("automorphism of a different group")
    res = [alpha.algebra.ctx.zero] * group.order
    for i in alpha.support:
        res[psi.perm[i]] = alpha.coeffs[i]
    return AlgebraElement(alpha.algebra, res)


def generator_sum(g, ctx):
    """Sum of the phi(o(g)) generators of the cyclic subgroup <g>; fixed by
    every subgroup-fixing automorphism."""
    group = g.group if isinstance(g, GroupElement) else None
    if group is None:
        raise TypeError("expected a GroupElement")
    alg = get_algebra(group, ctx)
    o = g.order()
    coeffs = [ctx.zero] * group.order
    one = ctx.one
    for i in range(o):  # i = 0 qualifies only when o = 1 (gcd(0, 1) = 1)
        if gcd(i, o) == 1:
            coeffs[group.index_of(group.scale(i, g.exps))] = one
    return AlgebraElement(alg, coeffs)


def idempotent_group(e):
    """Invariant factors of the group {g*e : g in G} under convolution,
    computed from the translation stabilizer of e."""
    if isinstance(e, PrimitiveIdempotent):
        e = e.element
    group = e.algebra.group
    stab = [g for g in group.elements if e.translated(g) == e]
    N = Subgroup(group, stab, _trusted=True)
    return quotient_type(group, N)


# ---------------------------------------------------------------------------
# shared linear algebra over the coefficient field
# ---------------------------------------------------------------------------

def row_reduce_raw(rows, ctx):
    """Reduced row-echelon form of a list of raw-coefficient vectors.

    Pivot columns are chosen left to right in group enumeration order, so
    the resulting basis is deterministic.  Zero rows are dropped.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return []
    width = len(rows[0])
    basis = []
    pivots = []
    for row in rows:
        for pcol, pivot_row in zip(pivots, basis):
            c = row[pcol]
            if c != ctx.zero:
                # row -= c * pivot_row
                for i in range(width):
                    pv = pivot_row[i]
                    if pv != ctx.zero:
                        row[i] = ctx.sub(row[i], ctx.mul(c, pv))
        pcol = next((i for i, c in enumerate(row) if c != ctx.zero), None)
        if pcol is None:
            continue
        inv = ctx.inv(row[pcol])
        row = [ctx.mul(inv, c) for c in row]
        # back-substitute into existing basis rows
        for k in range(len(basis)):
            c = basis[k][pcol]
            if c != ctx.zero:
                basis[k] = [
                    ctx.sub(bv, ctx.mul(c, rv)) for bv, rv in zip(basis[k], row)
                ]
        basis.append(row)
        pivots.append(pcol)
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return [tuple(basis[i]) for i in order]
