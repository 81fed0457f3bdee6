"""Product-free set algebra and predicates.

A non-empty subset S of a group is product-free when S and SS are disjoint.
It is locally maximal when no proper product-free superset exists, which by
the closure criterion is equivalent to T(S) union sqrt(S) covering the whole
group, where T(S) = S u SS u S*S^-1 u S^-1*S and sqrt(S) is the set of
square roots of members.  S fills the group when every non-identity element
lies in S u SS.

Two independent local-maximality routes are provided on purpose: the closure
criterion and the one-element-extension definition.  They must agree
everywhere and are cross-checked in the test suite.
"""

from dataclasses import dataclass

from .groups import Group, as_generalized_quaternion, is_normal_mask, \
    is_subgroup_mask, quotient
from .sets import ElementSet


def _check_bound(g: Group, s: ElementSet) -> None:
    if s.size != g.order:
        raise ValueError(
            f"set is bound to order {s.size}, group has order {g.order}")


def set_product(g: Group, a: ElementSet, b: ElementSet) -> ElementSet:
    """The product set {x*y : x in a, y in b}."""
    _check_bound(g, a)
    _check_bound(g, b)
    table = g.table
    b_idx = list(b)
    bits = 0
    for x in a:
        row = table[x]
        for y in b_idx:
            bits |= 1 << row[y]
    return ElementSet(bits, g.order)


def set_inverse(g: Group, a: ElementSet) -> ElementSet:
    """The set of inverses {x^-1 : x in a}."""
    _check_bound(g, a)
    inv = g.inverses
    bits = 0
    for x in a:
        bits |= 1 << inv[x]
    return ElementSet(bits, g.order)


def t_closure(g: Group, s: ElementSet) -> ElementSet:
    """T(S) = S u SS u S*S^-1 u S^-1*S; always contains the identity."""
    _check_bound(g, s)
    if not s:
        raise ValueError("T(S) requires a non-empty set")
    s_inv = set_inverse(g, s)
    return (s | set_product(g, s, s) | set_product(g, s, s_inv)
            | set_product(g, s_inv, s))


def sqrt_set(g: Group, s: ElementSet) -> ElementSet:
    """All square roots {x : x*x in s}."""
    _check_bound(g, s)
    table = g.table
    bits = 0
    for x in range(g.order):
        if table[x][x] in s:
            bits |= 1 << x
    return ElementSet(bits, g.order)


def is_product_free(g: Group, s: ElementSet) -> bool:
    """True iff s is non-empty and disjoint from its product set."""
    _check_bound(g, s)
    if not s:
        raise ValueError("product-freeness is defined for non-empty sets only")
    table = g.table
    members = list(s)
    target = s.bits
    for x in members:
        row = table[x]
        for y in members:
            if (target >> row[y]) & 1:
                return False
    return True


def _require_product_free(g: Group, s: ElementSet) -> None:
    if not is_product_free(g, s):
        raise ValueError("operation requires a product-free set")


def is_locally_maximal(g: Group, s: ElementSet) -> bool:
    """Closure criterion: s is locally maximal iff T(S) u sqrt(S) = G."""
    _require_product_free(g, s)
    covered = t_closure(g, s) | sqrt_set(g, s)
    return covered.bits == (1 << g.order) - 1


def is_locally_maximal_definitional(g: Group, s: ElementSet) -> bool:
    """Definition route: no single element can be added product-freely."""
    _require_product_free(g, s)
    for e in range(1, g.order):
        if e in s:
            continue
        if _extension_is_product_free(g, s, e):
            return False
    return True


def _extension_is_product_free(g: Group, s: ElementSet, e: int) -> bool:
    """Whether s u {e} is still product-free, for product-free s."""
    table = g.table
    target = s.bits | (1 << e)
    row_e = table[e]
    if (s.bits >> row_e[e]) & 1 or row_e[e] == e:
        return False
    for x in s:
        if (target >> row_e[x]) & 1 or (target >> table[x][e]) & 1:
            return False
        row = table[x]
        for y in s:
            if row[y] == e:
                return False
    return True


def fills(g: Group, s: ElementSet) -> bool:
    """True iff every non-identity element lies in s u ss."""
    _require_product_free(g, s)
    covered = s | set_product(g, s, s)
    return g.nonidentity_set().issubset(covered)


@dataclass(frozen=True)
class SetAnalysis:
    """One-pass evaluation of all the set invariants for a single subset."""

    s: ElementSet
    ss: ElementSet
    s_inv: ElementSet
    t_closure: ElementSet
    sqrt_s: ElementSet
    product_free: bool
    locally_maximal: bool
    fills: bool


def analyze(g: Group, s: ElementSet) -> SetAnalysis:
    """Full analysis; locally_maximal and fills are False when s is not
    product-free (they are only meaningful on product-free sets)."""
    _check_bound(g, s)
    if not s:
        raise ValueError("analysis requires a non-empty set")
    ss = set_product(g, s, s)
    s_inv = set_inverse(g, s)
    tc = (s | ss | set_product(g, s, s_inv) | set_product(g, s_inv, s))
    sq = sqrt_set(g, s)
    pf = s.isdisjoint(ss)
    lm = pf and (tc | sq).bits == (1 << g.order) - 1
    fl = pf and g.nonidentity_set().issubset(s | ss)
    return SetAnalysis(s=s, ss=ss, s_inv=s_inv, t_closure=tc, sqrt_s=sq,
                       product_free=pf, locally_maximal=lm, fills=fl)


# -- witness constructions ---------------------------------------------------

def lift_from_quotient(g: Group, n: ElementSet, q: ElementSet) -> ElementSet:
    """Preimage of a product-free set q of G/N under the projection.

    The lift is product-free; when q is additionally locally maximal and
    non-filling in the quotient, the lift is a locally maximal non-filling
    set of g (verified here).
    """
    _check_bound(g, n)
    quot, proj = quotient(g, n)
    if q.size != quot.order:
        raise ValueError(
            f"quotient set bound to order {q.size}, quotient has order {quot.order}")
    if not is_product_free(quot, q):
        raise ValueError("lift requires a product-free set in the quotient")
    bits = 0
    for a in range(g.order):
        if proj[a] in q:
            bits |= 1 << a
    lifted = ElementSet(bits, g.order)
    if not is_product_free(g, lifted):
        raise RuntimeError("internal error: lifted set is not product-free")
    if is_locally_maximal(quot, q) and not fills(quot, q):
        if not is_locally_maximal(g, lifted) or fills(g, lifted):
            raise RuntimeError(
                "internal error: lift of a locally maximal non-filling set "
                "lost that property")
    return lifted


def index5_witness(g: Group, n: ElementSet, h: int) -> ElementSet:
    """Locally maximal non-filling witness {h} u h^2*N* for an index-5
    normal subgroup N with |N| >= 3 and h of order 5 outside N."""
    _check_bound(g, n)
    if not is_subgroup_mask(g, n.bits) or not is_normal_mask(g, n.bits):
        raise ValueError("witness requires a normal subgroup")
    size = len(n)
    if g.order != 5 * size:
        raise ValueError(
            f"subgroup has index {g.order / size:g}, expected exactly 5")
    if size < 3:
        raise ValueError("witness construction needs |N| >= 3")
    if not 0 <= h < g.order or h in n:
        raise ValueError("witness element must lie outside the subgroup")
    if g.element_orders[h] != 5:
        raise ValueError(
            f"witness element must have order 5, got {g.element_orders[h]}")
    table = g.table
    h2 = table[h][h]
    bits = 1 << h
    for m in n:
        if m != 0:
            bits |= 1 << table[h2][m]
    witness = ElementSet(bits, g.order)
    if not is_locally_maximal(g, witness) or fills(g, witness):
        raise RuntimeError("internal error: index-5 witness failed its post-check")
    return witness


def quaternion_witness(g: Group) -> ElementSet:
    """Locally maximal non-filling witness for a generalized quaternion group.

    Starts from the unique involution a^n and greedily extends inside the
    cyclic half <a> in ascending index order; every square root of a^n lies
    outside <a>, so the result is locally maximal in the whole group.
    """
    n = as_generalized_quaternion(g)
    if n is None:
        raise ValueError("witness requires a generalized quaternion group")
    cyclic_part = 2 * n
    z = n  # a^n, the unique involution
    s = ElementSet.singleton(z, g.order)
    for e in range(1, cyclic_part):
        if e != z and _extension_is_product_free(g, s, e):
            s = s.add(e)
    if not is_locally_maximal(g, s) or fills(g, s):
        raise RuntimeError("internal error: quaternion witness failed its post-check")
    return s
