"""Permutations of {1..n}, finite permutation groups, and group homomorphisms.

Everything downstream (Burnside rings, character tables, the Burnside
category) sits on the three classes here.  Elements are kept fully
enumerated: the groups in scope are small symmetric/alternating groups and
their subgroups, and total enumeration keeps every later computation exact
and deterministic.

Conventions, fixed once and used everywhere:

* permutations act on the left, (p * q)(x) = p(q(x));
* conjugation is conj(p, g) = g p g^-1, and H^g means g H g^-1;
* "least" always means lexicographically least image tuple.
"""

from __future__ import annotations

import re
from functools import reduce

from .errors import (
    CapExceededError,
    InvalidPermutationError,
    NotAHomomorphismError,
    NotASubgroupError,
    UsageError,
)

DEFAULT_MAX_GROUP_ORDER = 50000

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Perm:
    """A permutation of {1..degree}, stored as the tuple of images."""

    __slots__ = ("degree", "images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise InvalidPermutationError(f"not a bijection of 1..{n}: {images}")
        self.degree = n
        self.images = images
        self._hash = hash(images)

    @staticmethod
    def identity(degree: int) -> "Perm":
        return Perm(range(1, degree + 1))

    @staticmethod
    def from_cycles(degree: int, cycles) -> "Perm":
        images = list(range(1, degree + 1))
        for cyc in cycles:
            cyc = list(cyc)
            if len(set(cyc)) != len(cyc):
                raise InvalidPermutationError(f"repeated point in cycle {cyc}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not 1 <= a <= degree:
                    raise InvalidPermutationError(f"point {a} outside 1..{degree}")
                images[a - 1] = b
        return Perm(images)

    @staticmethod
    def parse(text: str, degree: int) -> "Perm":
        """Parse cycle notation like "(1 2)(3 4)"; "()" is the identity."""
        text = text.strip()
        if text in ("()", ""):
            return Perm.identity(degree)
        body = text.replace(",", " ")
        chunks = _CYCLE_RE.findall(body)
        if not chunks or _CYCLE_RE.sub("", body).strip():
            raise InvalidPermutationError(f"bad cycle notation: {text!r}")
        cycles = []
        for chunk in chunks:
            if not chunk.strip():
                continue
            try:
                cycles.append([int(tok) for tok in chunk.split()])
            except ValueError:
                raise InvalidPermutationError(f"bad cycle notation: {text!r}")
        return Perm.from_cycles(degree, cycles)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        # (p * q)(x) = p(q(x)); inlined for speed, this is the hot path.
        imgs = self.images
        out = Perm.__new__(Perm)
        out.degree = self.degree
        out.images = tuple(imgs[j - 1] for j in other.images)
        out._hash = hash(out.images)
        return out

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j - 1] = i + 1
        out = Perm.__new__(Perm)
        out.degree = self.degree
        out.images = tuple(inv)
        out._hash = hash(out.images)
        return out

    def conj(self, g: "Perm") -> "Perm":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            nxt = self.images[start - 1]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt - 1] = True
                nxt = self.images[nxt - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, descending; a partition of degree."""
        lens = [len(c) for c in self.cycles()]
        lens += [1] * (self.degree - sum(lens))
        return tuple(sorted(lens, reverse=True))

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def is_identity(self) -> bool:
        return all(self.images[i] == i + 1 for i in range(self.degree))

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Perm[{self}]"

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __le__(self, other: "Perm") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return self._hash


def close_generators(degree, generators, cap=DEFAULT_MAX_GROUP_ORDER):
    """Breadth-first closure of a generating set; returns the sorted element list.

    Raises CapExceededError once more than `cap` elements appear.
    """
    gens = list(generators)
    for g in gens:
        if g.degree != degree:
            raise UsageError(f"generator degree {g.degree} != {degree}")
    ident = Perm.identity(degree)
    found = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in found:
                    found.add(y)
                    new.append(y)
                    if len(found) > cap:
                        raise CapExceededError("group order", cap)
        frontier = new
    return sorted(found)


class PermGroup:
    """A fully enumerated permutation group on {1..degree}."""

    __slots__ = (
        "degree",
        "generators",
        "elements",
        "element_set",
        "order",
        "name",
        "_key",
        "_classes",
        "_class_index",
        "_orbits",
    )

    def __init__(self, degree, generators, cap=DEFAULT_MAX_GROUP_ORDER, name=""):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(close_generators(degree, self.generators, cap))
        self.element_set = frozenset(self.elements)
        self.order = len(self.elements)
        self.name = name
        self._key = None
        self._classes = None
        self._class_index = None
        self._orbits = None

    @staticmethod
    def from_elements(degree, elements, name="") -> "PermGroup":
        """Build a group from a set already known to be closed.

        Closure is the caller's responsibility (intersections, preimages and
        point stabilizers of subgroups are closed by construction); identity
        and inverses are cheap to check, so they are.
        """
        elems = sorted(set(elements))
        ident = Perm.identity(degree)
        if ident not in elems:
            raise NotASubgroupError("identity missing")
        eset = frozenset(elems)
        for x in elems:
            if x.inverse() not in eset:
                raise NotASubgroupError(f"inverse of {x} missing")
        g = PermGroup.__new__(PermGroup)
        g.degree = degree
        g.elements = tuple(elems)
        g.element_set = eset
        g.order = len(elems)
        g.name = name
        g.generators = tuple(_small_generating_set(degree, elems, eset))
        g._key = None
        g._classes = None
        g._class_index = None
        g._orbits = None
        return g

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def key(self):
        """Hashable identity of the group as a subset of Sym(degree)."""
        if self._key is None:
            self._key = (self.degree, frozenset(p.images for p in self.elements))
        return self._key

    def __contains__(self, p: Perm) -> bool:
        return p in self.element_set

    def __le__(self, other: "PermGroup") -> bool:
        """Subgroup test (same degree containment)."""
        return self.degree == other.degree and self.element_set <= other.element_set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PermGroup)
            and self.degree == other.degree
            and self.element_set == other.element_set
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        label = self.name or f"order {self.order}"
        return f"PermGroup(deg {self.degree}, {label})"

    def orbits(self) -> tuple[tuple[int, ...], ...]:
        """Orbits on {1..degree}, each sorted, ordered by least point."""
        if self._orbits is not None:
            return self._orbits
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            orb = {start}
            frontier = [start]
            while frontier:
                nxt = []
                for pt in frontier:
                    for g in self.generators:
                        q = g(pt)
                        if q not in orb:
                            orb.add(q)
                            nxt.append(q)
                frontier = nxt
            seen |= orb
            out.append(tuple(sorted(orb)))
        self._orbits = tuple(out)
        return self._orbits

    def conjugacy_classes(self) -> tuple[tuple[Perm, ...], ...]:
        """Conjugacy classes, each sorted; classes ordered by least member.

        The least member of each class is its representative.
        """
        if self._classes is not None:
            return self._classes
        gens = self.generators
        assigned = set()
        classes = []
        for x in self.elements:  # elements sorted, so reps come out least-first
            if x in assigned:
                continue
            orb = {x}
            frontier = [x]
            while frontier:
                nxt = []
                for y in frontier:
                    for g in gens:
                        z = g * y * g.inverse()
                        if z not in orb:
                            orb.add(z)
                            nxt.append(z)
                frontier = nxt
            assigned |= orb
            classes.append(tuple(sorted(orb)))
        self._classes = tuple(classes)
        self._class_index = {x: i for i, cls in enumerate(classes) for x in cls}
        return self._classes

    def class_index(self) -> dict[Perm, int]:
        """Element -> index into conjugacy_classes()."""
        if self._class_index is None:
            self.conjugacy_classes()
        return self._class_index

    def class_representatives(self) -> tuple[Perm, ...]:
        return tuple(cls[0] for cls in self.conjugacy_classes())


def _small_generating_set(degree, sorted_elems, eset):
    """Greedy generating set: repeatedly adjoin the least element not yet generated."""
    if len(sorted_elems) == 1:
        return []
    gens = []
    have = {Perm.identity(degree)}
    for x in sorted_elems:
        if x in have:
            continue
        gens.append(x)
        have = set(close_generators(degree, gens, cap=len(sorted_elems)))
        if len(have) == len(sorted_elems):
            break
    return gens


# ---------------------------------------------------------------------------
# standard groups


def symmetric_group(n: int) -> PermGroup:
    """Sym(n) on {1..n}; n = 0 and n = 1 are both the trivial group on one point."""
    if n < 0:
        raise UsageError("n must be >= 0")
    if n <= 1:
        return PermGroup(1, [], name=f"S{max(n, 1)}")
    gens = [Perm.from_cycles(n, [(1, 2)])]
    if n > 2:
        gens.append(Perm.from_cycles(n, [tuple(range(1, n + 1))]))
    return PermGroup(n, gens, name=f"S{n}")


def alternating_group(n: int) -> PermGroup:
    """Alt(n) on {1..n}; trivial for n <= 2."""
    if n < 0:
        raise UsageError("n must be >= 0")
    if n <= 2:
        return PermGroup(max(n, 1), [], name=f"A{max(n, 1)}")
    if n == 3:
        gens = [Perm.from_cycles(3, [(1, 2, 3)])]
    elif n % 2 == 1:
        gens = [Perm.from_cycles(n, [(1, 2, 3)]), Perm.from_cycles(n, [tuple(range(1, n + 1))])]
    else:
        gens = [Perm.from_cycles(n, [(1, 2, 3)]), Perm.from_cycles(n, [tuple(range(2, n + 1))])]
    return PermGroup(n, gens, name=f"A{n}")


def young_subgroup(degree: int, blocks) -> PermGroup:
    """Product of full symmetric groups on disjoint blocks; other points fixed."""
    blocks = [tuple(sorted(b)) for b in blocks if len(b) > 0]
    used = set()
    for b in blocks:
        for pt in b:
            if not 1 <= pt <= degree:
                raise UsageError(f"point {pt} outside 1..{degree}")
            if pt in used:
                raise UsageError(f"point {pt} in two blocks")
            used.add(pt)
    gens = []
    for b in blocks:
        for a, c in zip(b, b[1:]):
            gens.append(Perm.from_cycles(degree, [(a, c)]))
    name = "x".join(f"S({','.join(map(str, b))})" for b in blocks if len(b) > 1)
    return PermGroup(degree, gens, name=name or "e")


def young_two_block(n: int, k: int) -> PermGroup:
    """The subgroup of Sym(n) preserving {1..k} and {k+1..n}."""
    if not 0 <= k <= n:
        raise UsageError(f"need 0 <= k <= n, got k={k}, n={n}")
    return young_subgroup(n, [range(1, k + 1), range(k + 1, n + 1)])


def product_group(a: PermGroup, b: PermGroup) -> PermGroup:
    """A x B on degree a.degree + b.degree, B shifted past A."""
    d = a.degree + b.degree
    shift = a.degree
    gens = [Perm(g.images + tuple(range(shift + 1, d + 1))) for g in a.generators]
    gens += [
        Perm(tuple(range(1, shift + 1)) + tuple(i + shift for i in g.images))
        for g in b.generators
    ]
    name = f"{a.name}x{b.name}" if a.name and b.name else ""
    return PermGroup(d, gens, name=name)


_GROUP_SPEC_RE = re.compile(
    r"^(?:S(?P<sn>\d+)|A(?P<an>\d+)|S(?P<pk>\d+)xS(?P<pl>\d+)|Y(?P<yk>\d+),(?P<yl>\d+))$"
)


def parse_group_spec(spec: str) -> PermGroup:
    """Build a group from the mini-language: S<n>, A<n>, S<k>xS<l>, Y<k>,<l>.

    S<k>xS<l> and Y<k>,<l> both give the block subgroup of Sym(k+l)
    preserving {1..k} and {k+1..k+l}; that subgroup is the concrete
    realization of the product used throughout.
    """
    m = _GROUP_SPEC_RE.match(spec.strip())
    if not m:
        raise UsageError(f"cannot parse group spec {spec!r}")
    if m.group("sn") is not None:
        return symmetric_group(int(m.group("sn")))
    if m.group("an") is not None:
        return alternating_group(int(m.group("an")))
    if m.group("pk") is not None:
        k, l = int(m.group("pk")), int(m.group("pl"))
    else:
        k, l = int(m.group("yk")), int(m.group("yl"))
    g = young_two_block(k + l, k)
    g.name = f"S{k}xS{l}"
    return g


def trivial_subgroup(g: PermGroup) -> PermGroup:
    return PermGroup.from_elements(g.degree, [g.identity], name="e")


# ---------------------------------------------------------------------------
# homomorphisms


class GroupHom:
    """A homomorphism between enumerated groups, stored as a total map."""

    __slots__ = ("source", "target", "mapping", "_gen_images")

    def __init__(self, source: PermGroup, target: PermGroup, mapping: dict):
        self.source = source
        self.target = target
        self.mapping = mapping
        self._gen_images = tuple(mapping[g] for g in source.generators)
        self._check()

    def _check(self):
        if len(self.mapping) != self.source.order:
            raise NotAHomomorphismError("mapping is not total")
        tset = self.target.element_set
        for v in self.mapping.values():
            if v not in tset:
                raise NotAHomomorphismError(f"image {v} outside target")
        # f(g x) = f(g) f(x) for generators g and all x forces the full
        # multiplicativity by induction on word length.
        for g in self.source.generators:
            fg = self.mapping[g]
            for x in self.source.elements:
                if self.mapping[g * x] != fg * self.mapping[x]:
                    raise NotAHomomorphismError(f"fails at {g} * {x}")

    @staticmethod
    def from_callable(source, target, fn, name="") -> "GroupHom":
        return GroupHom(source, target, {x: fn(x) for x in source.elements})

    @staticmethod
    def from_gen_images(source, target, images) -> "GroupHom":
        """Extend generator images multiplicatively; None if inconsistent."""
        images = list(images)
        if len(images) != len(source.generators):
            raise UsageError("one image per generator required")
        ident = source.identity
        mapping = {ident: target.identity}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                fx = mapping[x]
                for g, fg in zip(source.generators, images):
                    y = g * x
                    fy = fg * fx
                    old = mapping.get(y)
                    if old is None:
                        mapping[y] = fy
                        nxt.append(y)
                    elif old != fy:
                        return None
            frontier = nxt
        return GroupHom(source, target, mapping)

    @staticmethod
    def identity(g: PermGroup) -> "GroupHom":
        return GroupHom(g, g, {x: x for x in g.elements})

    @staticmethod
    def inclusion(h: PermGroup, g: PermGroup) -> "GroupHom":
        if not h <= g:
            raise NotASubgroupError(f"{h} is not a subgroup of {g}")
        return GroupHom(h, g, {x: x for x in h.elements})

    @staticmethod
    def conjugation(source, target, g: Perm) -> "GroupHom":
        """x |-> g x g^-1 from source into target."""
        ginv = g.inverse()
        return GroupHom(source, target, {x: g * x * ginv for x in source.elements})

    def __call__(self, x: Perm) -> Perm:
        return self.mapping[x]

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self o inner."""
        if inner.target.key() != self.source.key():
            raise UsageError("homs not composable")
        return GroupHom(
            inner.source, self.target, {x: self.mapping[y] for x, y in inner.mapping.items()}
        )

    def image(self) -> PermGroup:
        return PermGroup.from_elements(self.target.degree, set(self.mapping.values()))

    def preimage(self, hbar: PermGroup) -> PermGroup:
        """Preimage of a subgroup of the target."""
        if not hbar <= self.target:
            raise NotASubgroupError("preimage target is not a subgroup")
        want = hbar.element_set
        return PermGroup.from_elements(
            self.source.degree, [x for x, fx in self.mapping.items() if fx in want]
        )

    def is_surjective_onto_target(self) -> bool:
        return len(set(self.mapping.values())) == self.target.order

    def key(self):
        """Memoization key: a hom is determined by its generator images."""
        return (
            self.source.key(),
            self.target.key(),
            tuple(g.images for g in self.source.generators),
            tuple(v.images for v in self._gen_images),
        )

    def __repr__(self) -> str:
        return f"GroupHom({self.source!r} -> {self.target!r})"


def restrict_to_block(g: PermGroup, block) -> GroupHom:
    """Projection of a block-preserving group onto its action on one block.

    The block is relabelled 1..len(block) in increasing order, so the target
    is a group of degree len(block).
    """
    block = tuple(sorted(block))
    pos = {pt: i + 1 for i, pt in enumerate(block)}

    def squash(p: Perm) -> Perm:
        return Perm(tuple(pos[p(pt)] for pt in block))

    target_gens = []
    for x in g.generators:
        for pt in block:
            if x(pt) not in pos:
                raise UsageError(f"group does not preserve block {block}")
        target_gens.append(squash(x))
    target = PermGroup(len(block), target_gens)
    return GroupHom.from_callable(g, target, squash)


def standard_inclusion(n: int) -> GroupHom:
    """i_n: Sym(n-1) -> Sym(n), adjoining n as a fixed point.

    For n = 1 this is the identity of the trivial group (degree-1 groups on
    both sides).
    """
    if n < 1:
        raise UsageError("n must be >= 1")
    src = symmetric_group(n - 1)
    tgt = symmetric_group(n)
    if n == 1:
        return GroupHom.identity(src)

    def extend(p: Perm) -> Perm:
        return Perm(p.images + tuple(range(p.degree + 1, n + 1)))

    return GroupHom.from_callable(src, tgt, extend)


def fixed_last_point_copy(n: int) -> PermGroup:
    """Sym(n-1) realized inside Sym(n) as the stabilizer of the point n."""
    return young_subgroup(n, [range(1, n)])


def unshift_iso(h: PermGroup, n: int) -> GroupHom:
    """Isomorphism from the point-n stabilizer copy of Sym(n-1) to Sym(n-1) itself."""
    return restrict_to_block(h, range(1, n))


def all_homs(source: PermGroup, target: PermGroup) -> list[GroupHom]:
    """Every homomorphism source -> target, by brute force over generator images.

    Sorted by the tuple of generator images, so the order is deterministic.
    """
    gens = source.generators
    if not gens:
        return [GroupHom(source, target, {source.identity: target.identity})]
    out = []
    stack = [[]]
    # depth-first over image tuples, pruned by element-order divisibility
    orders = [_element_order(g) for g in gens]
    while stack:
        partial = stack.pop()
        i = len(partial)
        if i == len(gens):
            hom = GroupHom.from_gen_images(source, target, partial)
            if hom is not None:
                out.append(hom)
            continue
        for cand in reversed(target.elements):
            if orders[i] % _element_order(cand) == 0:
                stack.append(partial + [cand])
    out.sort(key=lambda h: tuple(v.images for v in h._gen_images))
    return out


def _element_order(p: Perm) -> int:
    return reduce(_lcm, (len(c) for c in p.cycles()), 1)


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------
# conjugacy, cosets, fusion


def centralizer(g: PermGroup, x: Perm) -> PermGroup:
    return PermGroup.from_elements(g.degree, [y for y in g.elements if y * x == x * y])


def normalizer(g: PermGroup, h: PermGroup) -> PermGroup:
    if not h <= g:
        raise NotASubgroupError("normalizer needs h <= g")
    hset = h.element_set
    out = []
    for y in g.elements:
        yinv = y.inverse()
        if all(y * t * yinv in hset for t in h.generators):
            out.append(y)
    return PermGroup.from_elements(g.degree, out)


def weyl_order(g: PermGroup, h: PermGroup) -> int:
    """|N_G(H) / H|."""
    return normalizer(g, h).order // h.order


def conjugate_subgroup(h: PermGroup, g: Perm) -> PermGroup:
    ginv = g.inverse()
    return PermGroup.from_elements(h.degree, [g * x * ginv for x in h.elements])


def intersection(a: PermGroup, b: PermGroup) -> PermGroup:
    if a.degree != b.degree:
        raise UsageError("intersection needs equal degrees")
    return PermGroup.from_elements(a.degree, a.element_set & b.element_set)


def left_coset_reps(g: PermGroup, h: PermGroup) -> tuple[dict, list[Perm]]:
    """Map element -> least member of its coset xH, plus the sorted rep list."""
    if not h <= g:
        raise NotASubgroupError("cosets need h <= g")
    rep_of = {}
    reps = []
    for x in g.elements:  # sorted, so an unseen x is least in xH
        if x in rep_of:
            continue
        reps.append(x)
        for t in h.elements:
            rep_of[x * t] = x
    return rep_of, reps


def double_cosets(g: PermGroup, h: PermGroup, k: PermGroup) -> list[Perm]:
    """Representatives of H\\G/K, each the least element of its double coset.

    Sorted; the number of returned reps is the number of double cosets.
    """
    if not (h <= g and k <= g):
        raise NotASubgroupError("double cosets need h, k <= g")
    rep_of, reps = left_coset_reps(g, k)
    # H acts on the left cosets xK; each H-orbit is one double coset.
    seen = set()
    out = []
    for r in reps:  # reps sorted, so the first rep hit in an orbit is least
        if r in seen:
            continue
        orbit = {r}
        frontier = [r]
        while frontier:
            nxt = []
            for c in frontier:
                for t in h.generators:
                    c2 = rep_of[t * c]
                    if c2 not in orbit:
                        orbit.add(c2)
                        nxt.append(c2)
            frontier = nxt
        seen |= orbit
        out.append(min(orbit))
    return sorted(out)


def fused_pairs(h: PermGroup, g: PermGroup) -> list[tuple[Perm, Perm]]:
    """Pairs of H-class representatives that are not H-conjugate but are G-conjugate.

    Each pair is (a, b) with a < b; the list is sorted.
    """
    if not h <= g:
        raise NotASubgroupError("fusion needs h <= g")
    g_index = g.class_index()
    by_g_class: dict[int, list[Perm]] = {}
    for rep in h.class_representatives():
        by_g_class.setdefault(g_index[rep], []).append(rep)
    out = []
    for reps in by_g_class.values():
        if len(reps) > 1:
            reps = sorted(reps)
            for i in range(len(reps)):
                for j in range(i + 1, len(reps)):
                    out.append((reps[i], reps[j]))
    return sorted(out)
