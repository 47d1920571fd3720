"""Immutable finite groups over 0-based element indices, with structural queries.

A group is a validated n x n multiplication table.  Index 0 is always the
identity.  All operations are pure; FiniteGroup and Subgroup never mutate
after construction (internal caches aside), so instances are safe to share.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

__all__ = [
    "NotAGroup",
    "ClosureExceeded",
    "NotNormal",
    "TooLarge",
    "TrivialGroup",
    "TRIVIAL",
    "FiniteGroup",
    "Subgroup",
    "Coset",
    "from_table",
    "from_permutations",
    "direct_product",
    "is_isomorphic",
    "all_subgroups",
]

# Full associativity validation is O(n^3); above this order only random
# triples are checked.
FULL_ASSOC_LIMIT = 256
ISO_ORDER_CAP = 512
DEFAULT_CLOSURE_CAP = 10_000

TRIVIAL = "trivial"
"""Marker returned by is_p_group for the order-1 group (a p-group for every p)."""


class NotAGroup(ValueError):
    """The given table violates a group axiom."""


class ClosureExceeded(RuntimeError):
    """Permutation closure grew past the configured cap."""

    def __init__(self, cap: int):
        super().__init__(f"closure exceeded cap of {cap} elements")
        self.cap = cap


class NotNormal(ValueError):
    """Quotient requested by a non-normal subgroup."""


class TooLarge(ValueError):
    """Group order exceeds the supported cap for this operation."""


class TrivialGroup(ValueError):
    """Operation undefined on the order-1 group."""


def _prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(math.isqrt(n)) + 1))


def is_prime_power(n: int) -> Optional[tuple[int, int]]:
    """Return (p, k) when n = p^k with k >= 1, else None."""
    if n < 2:
        return None
    fac = _prime_factors(n)
    if len(fac) != 1:
        return None
    ((p, k),) = fac.items()
    return p, k


@dataclass(frozen=True)
class Subgroup:
    """A validated subgroup, as a sorted tuple of parent element indices."""

    parent: "FiniteGroup"
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "_member_set", frozenset(self.members))

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    def __iter__(self):
        return iter(self.members)

    def member_set(self) -> frozenset:
        return self._member_set

    def as_group(self) -> "FiniteGroup":
        """Materialize this subgroup as a standalone FiniteGroup.

        New element i corresponds to parent element self.members[i]; index 0
        stays the identity because members are sorted and contain 0.
        """
        g = self.parent
        pos = {m: i for i, m in enumerate(self.members)}
        n = len(self.members)
        rows = [[pos[int(g.table[a, b])] for b in self.members] for a in self.members]
        labels = [g.labels[m] for m in self.members]
        return from_table(rows, labels)

    def cosets(self) -> list["Coset"]:
        """Left cosets x*H, ordered by smallest member (identity coset first)."""
        g = self.parent
        seen = set()
        out = []
        for x in range(g.order):
            if x in seen:
                continue
            members = tuple(sorted(int(g.table[x, h]) for h in self.members))
            seen.update(members)
            out.append(Coset(representative=members[0], members=members))
        return out


@dataclass(frozen=True)
class Coset:
    """A coset of some subgroup, tagged with its smallest-index representative."""

    representative: int
    members: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in self.members


class FiniteGroup:
    """A finite group on elements 0..n-1 given by its multiplication table.

    table[i, j] is the index of (element i) * (element j).  Construct through
    from_table / from_permutations / the family constructors, which validate
    the axioms; the raw constructor trusts its input.
    """

    __slots__ = ("order", "table", "labels", "_inv", "_comm", "_elt_orders",
                 "_conj_class", "_abelian")

    def __init__(self, table: np.ndarray, labels: Sequence[str]):
        n = table.shape[0]
        self.order = n
        t = np.ascontiguousarray(table, dtype=np.int32)
        t.setflags(write=False)
        self.table = t
        self.labels = tuple(labels)
        self._inv = None
        self._comm = None
        self._elt_orders = None
        self._conj_class = None
        self._abelian = None

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses()[a])

    def inverses(self) -> np.ndarray:
        if self._inv is None:
            inv = np.empty(self.order, dtype=np.int32)
            rows, cols = np.nonzero(self.table == 0)
            inv[rows] = cols
            self._inv = inv
        return self._inv

    def commuting_matrix(self) -> np.ndarray:
        """Boolean matrix M with M[x, y] iff x and y commute."""
        if self._comm is None:
            m = self.table == self.table.T
            m.setflags(write=False)
            self._comm = m
        return self._comm

    @property
    def is_abelian(self) -> bool:
        if self._abelian is None:
            self._abelian = bool(self.commuting_matrix().all())
        return self._abelian

    def element_order(self, x: int) -> int:
        """Least k >= 1 with x^k = identity."""
        return int(self.element_orders()[x])

    def element_orders(self) -> np.ndarray:
        if self._elt_orders is None:
            n = self.order
            orders = np.empty(n, dtype=np.int32)
            for x in range(n):
                k, acc = 1, x
                while acc != 0:
                    acc = int(self.table[acc, x])
                    k += 1
                orders[x] = k
            orders.setflags(write=False)
            self._elt_orders = orders
        return self._elt_orders

    def order_histogram(self) -> tuple[tuple[int, int], ...]:
        vals, counts = np.unique(self.element_orders(), return_counts=True)
        return tuple((int(v), int(c)) for v, c in zip(vals, counts))

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv(x), -k
        acc = 0
        for _ in range(k):
            acc = int(self.table[acc, x])
        return acc

    def centralizer(self, x: int) -> Subgroup:
        """Subgroup of all elements commuting with x."""
        members = tuple(int(i) for i in np.flatnonzero(self.commuting_matrix()[x]))
        return Subgroup(self, members)

    def center(self) -> Subgroup:
        members = tuple(int(i) for i in np.flatnonzero(self.commuting_matrix().all(axis=1)))
        return Subgroup(self, members)

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Conjugacy classes ordered by smallest member."""
        if self._conj_class is None:
            n = self.order
            inv = self.inverses()
            seen = np.zeros(n, dtype=bool)
            classes = []
            for x in range(n):
                if seen[x]:
                    continue
                # conjugate of x by g is (g*x)*g^-1, vectorized over g
                orbit = np.unique(self.table[self.table[:, x], inv])
                seen[orbit] = True
                classes.append(tuple(int(i) for i in orbit))
            self._conj_class = classes
        return self._conj_class

    def subgroup(self, members: Iterable[int]) -> Subgroup:
        """Validate a member set as a subgroup (closure, inverses, Lagrange)."""
        ms = tuple(sorted(set(int(m) for m in members)))
        if not ms or ms[0] != 0:
            raise ValueError("subgroup must contain the identity (index 0)")
        mset = frozenset(ms)
        inv = self.inverses()
        for a in ms:
            if int(inv[a]) not in mset:
                raise ValueError(f"member set not closed under inverse at {a}")
            for b in ms:
                if int(self.table[a, b]) not in mset:
                    raise ValueError(f"member set not closed under product at ({a},{b})")
        assert self.order % len(ms) == 0, "Lagrange violation: parent order not divisible"
        return Subgroup(self, ms)

    def generated_subgroup(self, seeds: Iterable[int]) -> Subgroup:
        """Smallest subgroup containing the seed elements."""
        members = {0}
        frontier = [0]
        seeds = [int(s) for s in seeds]
        for s in seeds:
            if s not in members:
                members.add(s)
                frontier.append(s)
        while frontier:
            nxt = []
            for a in frontier:
                row = self.table[a]
                for b in list(members):
                    for c in (int(row[b]), int(self.table[b, a])):
                        if c not in members:
                            members.add(c)
                            nxt.append(c)
            frontier = nxt
        return Subgroup(self, tuple(sorted(members)))

    def is_normal(self, h: Subgroup) -> bool:
        """True iff g*H*g^-1 = H for every g."""
        if h.parent is not self:
            raise ValueError("subgroup belongs to a different group")
        inv = self.inverses()
        mset = h.member_set()
        members = np.asarray(h.members, dtype=np.int32)
        for g in range(self.order):
            conj = self.table[self.table[g, members], int(inv[g])]
            if any(int(c) not in mset for c in conj):
                return False
        return True

    def quotient(self, n_sub: Subgroup) -> "FiniteGroup":
        """Quotient group G/N on the cosets of N; coset of the identity is index 0."""
        if not self.is_normal(n_sub):
            raise NotNormal("subgroup is not normal; quotient undefined")
        cosets = n_sub.cosets()
        coset_of = {}
        for idx, c in enumerate(cosets):
            for m in c.members:
                coset_of[m] = idx
        k = len(cosets)
        rows = [[coset_of[int(self.table[cosets[i].representative, cosets[j].representative])]
                 for j in range(k)] for i in range(k)]
        labels = [f"[{self.labels[c.representative]}]" for c in cosets]
        return from_table(rows, labels)

    def is_p_group(self) -> Union[int, str, None]:
        """Prime p when |G| = p^k (k >= 1); TRIVIAL for order 1; None otherwise."""
        if self.order == 1:
            return TRIVIAL
        pk = is_prime_power(self.order)
        return pk[0] if pk else None

    def is_elementary_p(self) -> Optional[int]:
        """Prime p when every non-identity element has order exactly p.

        Commutativity is not required.  Raises TrivialGroup on order 1.
        """
        if self.order == 1:
            raise TrivialGroup("elementary-p test undefined for the trivial group")
        orders = self.element_orders()
        p = int(orders[1])
        if not is_prime(p):
            return None
        return p if bool((orders[1:] == p).all()) else None

    def is_elementary_abelian(self) -> Optional[int]:
        if not self.is_abelian:
            return None
        return self.is_elementary_p()

    def frattini(self) -> Subgroup:
        """Frattini subgroup (intersection of all maximal subgroups).

        For p-groups this is the subgroup generated by p-th powers and
        commutators; nilpotent groups reduce to their Sylow factors; other
        groups fall back to maximal-subgroup enumeration.
        """
        if self.order == 1:
            return Subgroup(self, (0,))
        p = self.is_p_group()
        if isinstance(p, int):
            return self._frattini_p_group(p)
        sylows = self._sylow_decomposition()
        if sylows is not None:
            gens: list[int] = []
            for prime, syl in sylows:
                sub = syl.as_group()
                phi = sub._frattini_p_group(prime)
                gens.extend(syl.members[i] for i in phi.members)
            return self.generated_subgroup(gens)
        return self.frattini_by_maximal_subgroups()

    def _frattini_p_group(self, p: int) -> Subgroup:
        inv = self.inverses()
        gens = set()
        for x in range(self.order):
            gens.add(self.power(x, p))
        for a in range(self.order):
            for b in range(a + 1, self.order):
                ab = int(self.table[a, b])
                ba = int(self.table[b, a])
                gens.add(int(self.table[int(inv[ba]), ab]))
        return self.generated_subgroup(gens)

    def frattini_by_maximal_subgroups(self) -> Subgroup:
        """Frattini subgroup straight from the definition; exponential fallback."""
        subs = [s for s in all_subgroups(self) if s.size < self.order]
        maximal = []
        for h in subs:
            hm = h.member_set()
            if not any(hm < k.member_set() for k in subs):
                maximal.append(h)
        members = frozenset(range(self.order))
        for h in maximal:
            members &= h.member_set()
        return Subgroup(self, tuple(sorted(members)))

    def _sylow_decomposition(self) -> Optional[list[tuple[int, Subgroup]]]:
        """(p, Sylow_p) per prime when every Sylow is the set of p-elements.

        Succeeds exactly when G is nilpotent; returns None otherwise.
        """
        fac = _prime_factors(self.order)
        orders = self.element_orders()
        out = []
        for prime, mult in fac.items():
            members = [x for x in range(self.order) if _is_power_of(int(orders[x]), prime)]
            if len(members) != prime ** mult:
                return None
            try:
                out.append((prime, self.subgroup(members)))
            except ValueError:
                return None
        return out

    def commutator_subgroup(self) -> Subgroup:
        inv = self.inverses()
        gens = set()
        for a in range(self.order):
            for b in range(a + 1, self.order):
                ab = int(self.table[a, b])
                ba = int(self.table[b, a])
                gens.add(int(self.table[int(inv[ba]), ab]))
        return self.generated_subgroup(gens)


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    idx = np.arange(n)
    for e in range(n):
        if (table[e] == idx).all() and (table[:, e] == idx).all():
            return e
    raise NotAGroup("no two-sided identity element")


def from_table(rows: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None) -> FiniteGroup:
    """Build a validated FiniteGroup from a multiplication table.

    The identity is relocated to index 0 by relabeling if needed.  Raises
    NotAGroup when the Latin-square, identity, inverse, or associativity
    checks fail.
    """
    table = np.asarray(rows, dtype=np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise NotAGroup("table is not square")
    n = table.shape[0]
    if n == 0:
        raise NotAGroup("empty table")
    if table.min() < 0 or table.max() >= n:
        raise NotAGroup("table entries out of range")

    idx = np.arange(n)
    if not (np.sort(table, axis=1) == idx).all():
        bad = int(np.flatnonzero(~(np.sort(table, axis=1) == idx).all(axis=1))[0])
        raise NotAGroup(f"row {bad} is not a permutation of 0..{n - 1}")
    if not (np.sort(table, axis=0) == idx[:, None]).all():
        bad = int(np.flatnonzero(~(np.sort(table, axis=0) == idx[:, None]).all(axis=0))[0])
        raise NotAGroup(f"column {bad} is not a permutation of 0..{n - 1}")

    e = _find_identity(table)
    if labels is None:
        labels = [f"g{i}" for i in range(n)]
    labels = list(labels)
    if len(labels) != n:
        raise NotAGroup("label count does not match order")
    if e != 0:
        perm = idx.copy()
        perm[e], perm[0] = 0, e
        new = np.empty_like(table)
        for i in range(n):
            for j in range(n):
                new[perm[i], perm[j]] = perm[table[i, j]]
        table = new
        labels[0], labels[e] = labels[e], labels[0]

    _check_associativity(table)
    _check_inverses(table)
    return FiniteGroup(table, labels)


def _check_associativity(table: np.ndarray) -> None:
    n = table.shape[0]
    if n <= FULL_ASSOC_LIMIT:
        for k in range(n):
            left = table[table, k]          # (i*j)*k
            right = table[:, table[:, k]]   # i*(j*k)
            if not (left == right).all():
                i, j = np.argwhere(left != right)[0]
                raise NotAGroup(f"associativity fails at ({int(i)},{int(j)},{k})")
    else:
        # 10 * n^2 random triples, seeded by n for reproducibility
        rng = np.random.default_rng(n)
        for _ in range(10):
            i = rng.integers(0, n, size=n * n)
            j = rng.integers(0, n, size=i.size)
            k = rng.integers(0, n, size=i.size)
            if not (table[table[i, j], k] == table[i, table[j, k]]).all():
                raise NotAGroup("associativity fails on a sampled triple")


def _check_inverses(table: np.ndarray) -> None:
    n = table.shape[0]
    right = np.argmin(table != 0, axis=1)
    if not (table[np.arange(n), right] == 0).all() or not (table[right, np.arange(n)] == 0).all():
        raise NotAGroup("an element lacks a two-sided inverse")


def from_permutations(degree: int, generators: Sequence[Sequence[int]],
                      cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    """Group generated by permutations of {0..degree-1}, in image notation.

    Element 0 is the identity; element order is BFS discovery order with the
    generator list order fixed, so the table is reproducible.
    """
    gens = []
    for g in generators:
        t = tuple(int(x) for x in g)
        if sorted(t) != list(range(degree)):
            raise ValueError(f"generator {g!r} is not a permutation of 0..{degree - 1}")
        gens.append(t)
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    queue = [ident]
    while queue:
        cur = queue.pop(0)
        for g in gens:
            nxt = tuple(cur[g[i]] for i in range(degree))  # cur applied after g
            if nxt not in index:
                if len(elems) >= cap:
                    raise ClosureExceeded(cap)
                index[nxt] = len(elems)
                elems.append(nxt)
                queue.append(nxt)
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            table[i, j] = index[tuple(a[b[k]] for k in range(degree))]
    labels = ["".join(str(x) if degree <= 10 else f"{x}," for x in el) for el in elems]
    return from_table(table, labels)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Componentwise product on pairs, ordered a-major: index = i_a * |B| + i_b."""
    na, nb = a.order, b.order
    ta = np.asarray(a.table, dtype=np.int64)
    tb = np.asarray(b.table, dtype=np.int64)
    table = (ta[:, None, :, None] * nb + tb[None, :, None, :]).reshape(na * nb, na * nb)
    labels = [f"({la},{lb})" for la in a.labels for lb in b.labels]
    return FiniteGroup(table, labels)


def all_subgroups(g: FiniteGroup, limit: int = 20_000) -> list[Subgroup]:
    """Every subgroup of g, found by closing seed extensions; sorted by (size, members).

    Exponential in the worst case; intended for small groups (catalog scale).
    """
    seen = {frozenset([0])}
    queue = [(0,)]
    out = [(0,)]
    while queue:
        base = queue.pop()
        base_set = set(base)
        for x in range(1, g.order):
            if x in base_set:
                continue
            closure = g.generated_subgroup(list(base) + [x]).members
            key = frozenset(closure)
            if key not in seen:
                seen.add(key)
                out.append(closure)
                queue.append(closure)
                if len(out) > limit:
                    raise TooLarge(f"subgroup enumeration exceeded {limit} subgroups")
    out.sort(key=lambda m: (len(m), m))
    return [Subgroup(g, m) for m in out]


# --- isomorphism testing ---------------------------------------------------

def _invariant_vector(g: FiniteGroup) -> tuple:
    comm = g.commuting_matrix()
    cent_sizes = comm.sum(axis=1)
    _, class_ids = np.unique(comm, axis=0, return_inverse=True)
    beta_sizes = tuple(sorted(np.bincount(class_ids).tolist()))
    conj_sizes = tuple(sorted(len(c) for c in g.conjugacy_classes()))
    orders = g.element_orders()
    center_hist = tuple(sorted(int(orders[z])
                               for z in np.flatnonzero(comm.all(axis=1))))
    return (
        g.order,
        g.is_abelian,
        g.order_histogram(),
        center_hist,
        len(beta_sizes),
        beta_sizes,
        conj_sizes,
        tuple(sorted(cent_sizes.tolist())),
    )


def _element_fingerprints(g: FiniteGroup) -> list[tuple]:
    orders = g.element_orders()
    comm = g.commuting_matrix()
    cent = comm.sum(axis=1)
    _, beta_ids = np.unique(comm, axis=0, return_inverse=True)
    beta_count = np.bincount(beta_ids)
    class_size = np.empty(g.order, dtype=np.int64)
    for c in g.conjugacy_classes():
        for x in c:
            class_size[x] = len(c)
    squares = g.table[np.arange(g.order), np.arange(g.order)]
    sqrt_count = np.bincount(squares, minlength=g.order)
    return [(int(orders[x]), int(cent[x]), int(class_size[x]),
             int(orders[int(squares[x])]), int(beta_count[beta_ids[x]]),
             int(sqrt_count[x]))
            for x in range(g.order)]


def _generating_sequence(g: FiniteGroup, rarity: dict) -> list[int]:
    gens: list[int] = []
    current = {0}
    fps = _element_fingerprints(g)
    while len(current) < g.order:
        best = None
        for x in range(g.order):
            if x in current:
                continue
            key = (rarity[fps[x]], x)
            if best is None or key < best:
                best = key
        x = best[1]
        gens.append(x)
        current = set(g.generated_subgroup(gens).members)
    return gens


def _extend_map(a: FiniteGroup, b: FiniteGroup, fmap: dict, used: set,
                gen: int, image: int) -> Optional[tuple[dict, set]]:
    """Extend a partial isomorphism domain-closed under products, or fail."""
    fmap = dict(fmap)
    used = set(used)
    if image in used:
        return None
    fmap[gen] = image
    used.add(image)
    frontier = [gen]
    while frontier:
        nxt = []
        for x in frontier:
            for y in list(fmap.keys()):
                for p, q in (((int(a.table[x, y])), int(b.table[fmap[x], fmap[y]])),
                             ((int(a.table[y, x])), int(b.table[fmap[y], fmap[x]]))):
                    if p in fmap:
                        if fmap[p] != q:
                            return None
                    else:
                        if q in used:
                            return None
                        fmap[p] = q
                        used.add(q)
                        nxt.append(p)
        frontier = nxt
    return fmap, used


def is_isomorphic(a: FiniteGroup, b: FiniteGroup) -> bool:
    """Decide isomorphism by invariants plus backtracking generator mapping.

    Deterministic regardless of element ordering.  Orders above ISO_ORDER_CAP
    raise TooLarge.
    """
    if a.order != b.order:
        return False
    if a.order > ISO_ORDER_CAP:
        raise TooLarge(f"isomorphism testing capped at order {ISO_ORDER_CAP}")
    if _invariant_vector(a) != _invariant_vector(b):
        return False
    if a.order == 1:
        return True
    if a.is_abelian:
        # equal order histograms classify finite abelian groups
        return True

    fps_a = _element_fingerprints(a)
    fps_b = _element_fingerprints(b)
    rarity: dict[tuple, int] = {}
    for f in fps_b:
        rarity[f] = rarity.get(f, 0) + 1
    if sorted(fps_a) != sorted(fps_b):
        return False
    gens = _generating_sequence(a, rarity)
    buckets: dict[tuple, list[int]] = {}
    for x, f in enumerate(fps_b):
        buckets.setdefault(f, []).append(x)

    def search(i: int, fmap: dict, used: set) -> bool:
        if i == len(gens):
            return len(fmap) == a.order
        gen = gens[i]
        if gen in fmap:
            return search(i + 1, fmap, used)
        for cand in buckets.get(fps_a[gen], ()):
            ext = _extend_map(a, b, fmap, used, gen, cand)
            if ext is not None:
                if search(i + 1, ext[0], ext[1]):
                    return True
        return False

    return search(0, {0: 0}, {0})
