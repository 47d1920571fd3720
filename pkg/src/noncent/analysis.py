"""Centralizer-derived structure: equal-centralizer classes and regularity tests.

The partition of G into classes of elements sharing a centralizer is the
backbone of the non-centralizer graph: its classes are the graph's parts,
class 0 is always the center, and every class is a union of center cosets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import FiniteGroup, Subgroup, TooLarge, all_subgroups

__all__ = [
    "AbelianGroup",
    "NotMaximal",
    "NotASubgroup",
    "NotRegular2Group",
    "BetaPartition",
    "RegularityReport",
    "beta_partition",
    "cent_count",
    "is_regular",
    "is_induced_regular",
    "maximal_centralizers",
    "h_subgroup",
    "is_reduced_regular",
    "brute_force_abelian_factor",
    "build_report",
]

BRUTE_FACTOR_CAP = 64


class AbelianGroup(ValueError):
    """Operation requires a non-abelian group."""


class NotMaximal(ValueError):
    """The class's centralizer is not maximal."""


class NotASubgroup(RuntimeError):
    """beta(x) union Z(G) failed the subgroup axioms.

    Never expected on a valid group; raising it would falsify the structure
    theory this library verifies, so it carries the offending data.
    """


class NotRegular2Group(ValueError):
    """Reduced-regularity is defined only for regular non-abelian 2-groups."""


@dataclass(frozen=True)
class BetaPartition:
    """Partition of G into classes of elements with identical centralizers.

    Class 0 is exactly the center; the remaining classes are ordered by their
    smallest member.
    """

    parent: FiniteGroup
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def cent_count(self) -> int:
        return len(self.classes)

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def centralizer_of_class(self, cid: int) -> Subgroup:
        return self.parent.centralizer(self.classes[cid][0])

    def center(self) -> Subgroup:
        return Subgroup(self.parent, self.classes[0])


def beta_partition(g: FiniteGroup) -> BetaPartition:
    """Group the elements of g by identical centralizer member-sets."""
    comm = g.commuting_matrix()
    _, inverse = np.unique(comm, axis=0, return_inverse=True)
    buckets: dict[int, list[int]] = {}
    for x in range(g.order):
        buckets.setdefault(int(inverse[x]), []).append(x)
    groups = sorted(buckets.values(), key=lambda c: c[0])
    center_pos = next(i for i, c in enumerate(groups) if c[0] == 0)
    ordered = [groups[center_pos]] + [c for i, c in enumerate(groups) if i != center_pos]
    class_of = [0] * g.order
    for cid, members in enumerate(ordered):
        for x in members:
            class_of[x] = cid
    return BetaPartition(g, tuple(tuple(c) for c in ordered), tuple(class_of))


def cent_count(g: FiniteGroup) -> int:
    """Number of distinct centralizers (= number of beta classes)."""
    return beta_partition(g).cent_count


def is_regular(g: FiniteGroup) -> Optional[int]:
    """Degree of the non-centralizer graph when it is regular, else None.

    Abelian groups are 0-regular (single-part, edgeless graph).  A non-abelian
    group is regular exactly when every class is a single center coset, giving
    degree |G| - |Z(G)|.
    """
    if g.is_abelian:
        return 0
    part = beta_partition(g)
    z = len(part.classes[0])
    if all(len(c) == z for c in part.classes):
        return g.order - z
    return None


def is_induced_regular(g: FiniteGroup) -> Optional[int]:
    """Degree of the induced graph (non-central vertices) when regular.

    Abelian groups are vacuously induced regular (empty vertex set, degree 0).
    Otherwise all non-center classes must share one size s and the degree is
    (|G| - |Z(G)|) - s.
    """
    if g.is_abelian:
        return 0
    part = beta_partition(g)
    sizes = {len(c) for c in part.classes[1:]}
    if len(sizes) != 1:
        return None
    s = sizes.pop()
    return (g.order - len(part.classes[0])) - s


def maximal_centralizers(g: FiniteGroup,
                         part: Optional[BetaPartition] = None) -> list[tuple[int, Subgroup]]:
    """Proper centralizers maximal under inclusion, as (class id, subgroup)."""
    if g.is_abelian:
        raise AbelianGroup("no proper centralizers in an abelian group")
    if part is None:
        part = beta_partition(g)
    cents = [(cid, part.centralizer_of_class(cid)) for cid in range(1, len(part.classes))]
    out = []
    for cid, c in cents:
        cm = c.member_set()
        if not any(cm < d.member_set() for _, d in cents):
            out.append((cid, c))
    return out


def h_subgroup(g: FiniteGroup, class_id: int,
               part: Optional[BetaPartition] = None) -> Subgroup:
    """The set beta(x) union Z(G) for a maximal-centralizer class, verified
    to be a subgroup.

    NotASubgroup here would be a falsification witness, not a user error.
    """
    if part is None:
        part = beta_partition(g)
    maximal_ids = {cid for cid, _ in maximal_centralizers(g, part)}
    if class_id not in maximal_ids:
        raise NotMaximal(f"class {class_id} does not have a maximal centralizer")
    members = sorted(set(part.classes[class_id]) | set(part.classes[0]))
    try:
        return g.subgroup(members)
    except ValueError as exc:
        raise NotASubgroup(
            f"beta-class {class_id} union center is not a subgroup: {exc}") from exc


def _cyclic_homs(gab: FiniteGroup, m: int):
    """Yield every homomorphism from abelian group gab to Z/m as an array."""
    n = gab.order
    orders = gab.element_orders()
    # greedy generating sequence
    gens: list[int] = []
    covered = {0}
    while len(covered) < n:
        x = next(i for i in range(n) if i not in covered)
        gens.append(x)
        covered = set(gab.generated_subgroup(gens).members)

    def extend(fmap: dict[int, int], gen: int, val: int) -> Optional[dict[int, int]]:
        fmap = dict(fmap)
        fmap[gen] = val
        frontier = [gen]
        while frontier:
            nxt = []
            for x in frontier:
                for y in list(fmap):
                    p = int(gab.table[x, y])
                    q = (fmap[x] + fmap[y]) % m
                    if p in fmap:
                        if fmap[p] != q:
                            return None
                    else:
                        fmap[p] = q
                        nxt.append(p)
            frontier = nxt
        return fmap

    def rec(i: int, fmap: dict[int, int]):
        if i == len(gens):
            yield fmap
            return
        gen = gens[i]
        if gen in fmap:
            yield from rec(i + 1, fmap)
            return
        o = int(orders[gen])
        step = m // np.gcd(m, o)
        for val in range(0, m, int(step)):
            ext = extend(fmap, gen, val)
            if ext is not None:
                yield from rec(i + 1, ext)

    yield from rec(0, {0: 0})


def _central_cyclic_splits(g: FiniteGroup, z: int,
                           gab: FiniteGroup, coset_of: dict[int, int]) -> bool:
    """True iff <z> (z central) is a direct factor of g.

    <z> of order m splits off exactly when some homomorphism g -> Z/m sends z
    to a generator; the kernel is then a complement.  Homomorphisms factor
    through the abelianization gab.
    """
    m = g.element_order(z)
    zbar = coset_of[z]
    if gab.element_order(zbar) != m:
        return False
    for fmap in _cyclic_homs(gab, m):
        if np.gcd(fmap[zbar], m) == 1:
            return True
    return False


def _abelianization(g: FiniteGroup) -> tuple[FiniteGroup, dict[int, int]]:
    """G/[G,G] plus the element-to-coset projection map."""
    comm_sub = g.commutator_subgroup()
    gab = g.quotient(comm_sub)
    # quotient() indexes cosets in the same order as comm_sub.cosets()
    coset_of: dict[int, int] = {}
    for idx, c in enumerate(comm_sub.cosets()):
        for mem in c.members:
            coset_of[mem] = idx
    return gab, coset_of


def is_reduced_regular(g: FiniteGroup) -> bool:
    """True iff a regular non-abelian 2-group admits no decomposition
    H x A with A a non-trivial abelian group.

    Any such decomposition yields a central cyclic direct factor, so the test
    looks for a central z whose cyclic subgroup splits off (equivalently, a
    homomorphism onto Z/o(z) sending z to a generator).  Cross-validated
    against brute_force_abelian_factor in the test suite.
    """
    if g.is_abelian or g.is_p_group() != 2 or is_regular(g) is None:
        raise NotRegular2Group("reduced-regularity needs a regular non-abelian 2-group")
    gab, coset_of = _abelianization(g)
    for z in g.center().members:
        if z == 0:
            continue
        if _central_cyclic_splits(g, z, gab, coset_of):
            return False
    return True


def brute_force_abelian_factor(
        g: FiniteGroup) -> Optional[tuple[Subgroup, Subgroup]]:
    """Search for an internal direct decomposition G = H x A, A central
    non-trivial; independent oracle for is_reduced_regular.

    For each candidate central subgroup A the complement H is sought by
    lifting generators of G/A in every possible way.  Deterministic: first
    hit in (|A|, members, lift order) wins.  None when G is directly
    indecomposable over its center.
    """
    if g.order > BRUTE_FACTOR_CAP:
        raise TooLarge(f"brute-force factor search capped at order {BRUTE_FACTOR_CAP}")
    z = g.center()
    z_subs = [s for s in all_subgroups(z.as_group()) if 1 < s.size]
    for a_small in sorted(z_subs, key=lambda s: (s.size, s.members)):
        a_members = tuple(sorted(z.members[i] for i in a_small.members))
        a_sub = g.subgroup(a_members)
        res = _find_complement(g, a_sub)
        if res is not None:
            return res, a_sub
    return None


def _find_complement(g: FiniteGroup, a_sub: Subgroup) -> Optional[Subgroup]:
    target = g.order // a_sub.size
    quo = g.quotient(a_sub)
    cosets = a_sub.cosets()
    # greedy generating sequence of the quotient
    gens: list[int] = []
    covered = {0}
    while len(covered) < quo.order:
        x = next(i for i in range(quo.order) if i not in covered)
        gens.append(x)
        covered = set(quo.generated_subgroup(gens).members)
    lift_choices = [cosets[q].members for q in gens]
    a_set = a_sub.member_set()

    def rec(i: int, picked: list[int]) -> Optional[Subgroup]:
        if i == len(lift_choices):
            h = g.generated_subgroup(picked)
            if h.size == target and len(h.member_set() & a_set) == 1:
                return h
            return None
        for x in lift_choices[i]:
            found = rec(i + 1, picked + [x])
            if found is not None:
                return found
        return None

    return rec(0, [])


@dataclass(frozen=True)
class RegularityReport:
    """Flat summary of a group's centralizer structure; field order is the
    serialization order."""

    label: str
    order: int
    center_size: int
    cent_count: int
    index: int
    degree_sequence: tuple[int, ...]
    is_regular: bool
    regular_degree: Optional[int]
    is_induced_regular: bool
    induced_degree: Optional[int]
    is_reduced: Optional[bool]
    class_sizes: tuple[int, ...]

    def to_text(self) -> str:
        degseq = _compress_multiset(self.degree_sequence)
        lines = [
            f"group:            {self.label}",
            f"order:            {self.order}",
            f"center size:      {self.center_size}",
            f"|Cent(G)|:        {self.cent_count}",
            f"[G:Z(G)]:         {self.index}",
            f"degree sequence:  {degseq}",
            f"regular:          {_yn(self.is_regular)}",
            f"regular degree:   {_opt(self.regular_degree)}",
            f"induced regular:  {_yn(self.is_induced_regular)}",
            f"induced degree:   {_opt(self.induced_degree)}",
            f"reduced:          {_opt(self.is_reduced)}",
            f"class sizes:      {_compress_multiset(self.class_sizes)}",
        ]
        return "\n".join(lines)

    def to_kv(self) -> str:
        pairs = [
            ("label", self.label),
            ("order", self.order),
            ("center_size", self.center_size),
            ("cent_count", self.cent_count),
            ("index", self.index),
            ("degree_sequence", ",".join(map(str, self.degree_sequence))),
            ("regular", str(self.is_regular).lower()),
            ("regular_degree", _opt(self.regular_degree)),
            ("induced_regular", str(self.is_induced_regular).lower()),
            ("induced_degree", _opt(self.induced_degree)),
            ("reduced", "-" if self.is_reduced is None else str(self.is_reduced).lower()),
            ("class_sizes", ",".join(map(str, self.class_sizes))),
        ]
        return "\n".join(f"{k}={v}" for k, v in pairs)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _opt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return _yn(v)
    return str(v)


def _compress_multiset(values: tuple[int, ...]) -> str:
    out = []
    i = 0
    vals = sorted(values)
    while i < len(vals):
        j = i
        while j < len(vals) and vals[j] == vals[i]:
            j += 1
        out.append(f"{vals[i]}" if j - i == 1 else f"{vals[i]}x{j - i}")
        i = j
    return "[" + ", ".join(out) + "]"


def build_report(g: FiniteGroup, label: str) -> RegularityReport:
    """Compute the full regularity report for one group."""
    part = beta_partition(g)
    z = len(part.classes[0])
    sizes = part.class_sizes()
    degseq = tuple(sorted(g.order - len(part.classes[int(part.class_of[x])])
                          for x in range(g.order)))
    reg = is_regular(g)
    ind = is_induced_regular(g)
    reduced: Optional[bool] = None
    if not g.is_abelian and reg is not None and g.is_p_group() == 2:
        reduced = is_reduced_regular(g)
    return RegularityReport(
        label=label,
        order=g.order,
        center_size=z,
        cent_count=len(part.classes),
        index=g.order // z,
        degree_sequence=degseq,
        is_regular=reg is not None,
        regular_degree=reg,
        is_induced_regular=ind is not None,
        induced_degree=ind,
        is_reduced=reduced,
        class_sizes=sizes,
    )
