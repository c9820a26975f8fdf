"""Character tables of symmetric groups and their block products, exactly.

A "block product" is a group of permutations that is the full symmetric
group on each of its orbits; Young subgroups, their conjugates, and the
concrete products built by `product_group` are all of this shape.  Character
values come from the Murnaghan-Nakayama recursion, so no table ever needs a
group larger than the one it describes.

Fixed orders, used by every value vector in this module:

* irreducibles (rows): partitions in reverse lexicographic order, largest
  part first, so (n) labels the trivial character and comes first;
* conjugacy classes (columns): cycle types in increasing lexicographic
  order, so the identity class (1,...,1) comes first and degrees sit in
  column 0;
* for block products, rows and columns are the row-major products of the
  per-block orders, blocks ordered by least point.

Induction is by direct summation of phi(x^-1 g x) over the ambient group;
the inner loop is hoisted into per-class fusion counts so each induced
character costs one pass over class data.
"""

from __future__ import annotations

from functools import cache, lru_cache
from math import factorial

from .errors import NonIntegralError, NotASubgroupError, UnsupportedGroupError, UsageError
from .perms import GroupHom, Perm, PermGroup

Partition = tuple[int, ...]

MAX_TABLE_N = 8


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of n, reverse lexicographic: (n) first, (1,...,1) last."""
    if n < 0:
        raise UsageError("n must be >= 0")

    def gen(remaining, biggest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, biggest), 0, -1):
            for rest in gen(remaining - part, part):
                yield (part,) + rest

    return tuple(gen(n, n))


@cache
def partition_count(n: int) -> int:
    return len(partitions(n))


def cycle_type_class_size(mu: Partition) -> int:
    """Number of permutations of Sym(sum mu) with cycle type mu: n!/z_mu."""
    n = sum(mu)
    z = 1
    mult: dict[int, int] = {}
    for part in mu:
        mult[part] = mult.get(part, 0) + 1
    for length, m in mult.items():
        z *= length**m * factorial(m)
    return factorial(n) // z


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character of Sym(n) for the partition lam at cycle type mu.

    Murnaghan-Nakayama on beta-numbers: removing a border strip of length l
    means moving one beta-number down by l, with sign (-1)^(number of
    beta-numbers jumped over).
    """
    if sum(lam) != sum(mu):
        raise UsageError(f"partition sizes differ: {lam} vs {mu}")
    if not mu:
        return 1
    length = mu[0]
    rest = mu[1:]
    pad = len(lam) + length
    beta = [lam[i] + (pad - 1 - i) if i < len(lam) else (pad - 1 - i) for i in range(pad)]
    bset = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - length
        if nb < 0 or nb in bset:
            continue
        jumped = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        newlam = tuple(x - (pad - 1 - j) for j, x in enumerate(newbeta))
        newlam = tuple(x for x in newlam if x > 0)
        total += (-1) ** jumped * mn_character(newlam, rest)
    return total


# ---------------------------------------------------------------------------
# block structures


def block_structure(group: PermGroup) -> tuple[tuple[int, ...], ...]:
    """Orbits of the group, verified to carry full symmetric action.

    Raises UnsupportedGroupError when the group is not a block product, e.g.
    for alternating groups.
    """
    blocks = group.orbits()
    expected = 1
    for b in blocks:
        expected *= factorial(len(b))
    if expected != group.order:
        raise UnsupportedGroupError(
            f"group of order {group.order} is not the full symmetric product on its orbits"
        )
    return blocks


class CharacterTable:
    """Integer character table of a block product group."""

    __slots__ = (
        "group",
        "blocks",
        "labels",
        "class_types",
        "class_reps",
        "class_sizes",
        "matrix",
        "_type_index",
        "_elem_index",
    )

    def __init__(self, group, blocks, labels, class_types, class_reps, class_sizes, matrix):
        self.group = group
        self.blocks = blocks
        self.labels = labels
        self.class_types = class_types
        self.class_reps = class_reps
        self.class_sizes = class_sizes
        self.matrix = matrix
        self._type_index = {t: i for i, t in enumerate(class_types)}
        self._elem_index = None

    @property
    def rank(self) -> int:
        return len(self.labels)

    def class_index_of(self, p: Perm) -> int:
        """Class index of any element of the group, via per-block cycle types."""
        types = []
        for b in self.blocks:
            lens = []
            seen = set()
            for start in b:
                if start in seen:
                    continue
                length = 1
                seen.add(start)
                nxt = p(start)
                while nxt != start:
                    if nxt not in b:
                        raise UsageError(f"element {p} does not preserve block {b}")
                    seen.add(nxt)
                    length += 1
                    nxt = p(nxt)
                lens.append(length)
            types.append(tuple(sorted(lens, reverse=True)))
        return self._type_index[tuple(types)]

    def irreducible(self, i: int) -> "ClassFunction":
        return ClassFunction(self, self.matrix[i])

    def __repr__(self) -> str:
        return f"CharacterTable({self.group!r}, {self.rank} irreducibles)"


class ClassFunction:
    """Integer class function, values in the table's fixed class order."""

    __slots__ = ("table", "values")

    def __init__(self, table: CharacterTable, values):
        values = tuple(values)
        if len(values) != len(table.class_types):
            raise UsageError("one value per conjugacy class required")
        self.table = table
        self.values = values

    @property
    def group(self) -> PermGroup:
        return self.table.group

    def __call__(self, p: Perm) -> int:
        return self.values[self.table.class_index_of(p)]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.table, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.table, [a - b for a, b in zip(self.values, other.values)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassFunction)
            and self.table is other.table
            and self.values == other.values
        )

    def __hash__(self):
        return hash((id(self.table), self.values))

    def __repr__(self) -> str:
        return f"ClassFunction{self.values}"


_table_memo: dict = {}


def _build_table(group: PermGroup, blocks) -> CharacterTable:
    per_block_labels = [partitions(len(b)) for b in blocks]
    per_block_types = [tuple(reversed(partitions(len(b)))) for b in blocks]

    def product_rows(lists):
        out = [()]
        for lst in lists:
            out = [pre + (x,) for pre in out for x in lst]
        return out

    labels = tuple(product_rows(per_block_labels))
    class_types = tuple(product_rows(per_block_types))

    reps = []
    sizes = []
    for types in class_types:
        images = list(range(1, group.degree + 1))
        size = 1
        for b, mu in zip(blocks, types):
            pos = 0
            for part in mu:
                cyc = b[pos : pos + part]
                for a, c in zip(cyc, cyc[1:] + cyc[:1]):
                    images[a - 1] = c
                pos += part
            size *= cycle_type_class_size(mu)
        reps.append(Perm(images))
        sizes.append(size)

    matrix = []
    for lab in labels:
        row = []
        for types in class_types:
            v = 1
            for lam, mu in zip(lab, types):
                v *= mn_character(lam, mu)
            row.append(v)
        matrix.append(tuple(row))

    return CharacterTable(
        group, blocks, labels, class_types, tuple(reps), tuple(sizes), tuple(matrix)
    )


def character_table(group: PermGroup, max_n: int = MAX_TABLE_N) -> CharacterTable:
    """The table of any block product group, memoized by group identity."""
    key = group.key()
    hit = _table_memo.get(key)
    if hit is not None:
        return hit
    blocks = block_structure(group)
    total = sum(len(b) for b in blocks if len(b) > 1)
    if total > max_n:
        raise UnsupportedGroupError(f"table for moved degree {total} exceeds cap {max_n}")
    table = _build_table(group, blocks)
    _table_memo[key] = table
    return table


def char_table_symmetric(n: int, max_n: int = MAX_TABLE_N) -> CharacterTable:
    if n > max_n:
        raise UnsupportedGroupError(f"n = {n} exceeds cap {max_n}")
    from .perms import symmetric_group

    return character_table(symmetric_group(n), max_n)


def char_table_product(a: CharacterTable, b: CharacterTable) -> CharacterTable:
    """Table of A x B, realized with B's points shifted past A's degree."""
    from .perms import product_group

    return character_table(product_group(a.group, b.group))


# ---------------------------------------------------------------------------
# restriction, induction, decomposition


def restrict_classfunction(phi: ClassFunction, alpha: GroupHom) -> ClassFunction:
    """phi o alpha along any homomorphism into phi's group."""
    if alpha.target.key() != phi.group.key():
        raise UsageError("hom target must be the class function's group")
    src_table = character_table(alpha.source)
    tgt_table = phi.table
    values = [phi.values[tgt_table.class_index_of(alpha(rep))] for rep in src_table.class_reps]
    return ClassFunction(src_table, values)


_fusion_memo: dict = {}


def _fusion_counts(h: PermGroup, g: PermGroup):
    """counts[i][j] = #{x in G : x^-1 (g_i) x in H, landing in H-class j}
    for the class representatives g_i of G."""
    key = (h.key(), g.key())
    hit = _fusion_memo.get(key)
    if hit is not None:
        return hit
    if not h <= g:
        raise NotASubgroupError("induction needs h <= g")
    g_table = character_table(g)
    h_table = character_table(h)
    hset = h.element_set
    counts = []
    for rep in g_table.class_reps:
        row = [0] * len(h_table.class_types)
        for x in g.elements:
            y = x.inverse() * rep * x
            if y in hset:
                row[h_table.class_index_of(y)] += 1
        counts.append(row)
    _fusion_memo[key] = (g_table, h_table, counts)
    return g_table, h_table, counts


def induce_classfunction(phi: ClassFunction, g: PermGroup) -> ClassFunction:
    """(ind phi)(y) = (1/|H|) sum over x in G of phi(x^-1 y x), summed where
    the conjugate lands in H."""
    h = phi.group
    g_table, h_table, counts = _fusion_counts(h, g)
    if h_table is not phi.table:
        raise UsageError("class function's table does not match the subgroup")
    values = []
    for row in counts:
        total = sum(c * v for c, v in zip(row, phi.values))
        if total % h.order:
            raise NonIntegralError("induced character value is not integral")
        values.append(total // h.order)
    return ClassFunction(g_table, values)


def decompose_into_irreducibles(phi: ClassFunction) -> tuple[int, ...]:
    """Multiplicities <phi, chi_i> in row order; exact, rejects non-integers."""
    table = phi.table
    order = table.group.order
    out = []
    for row in table.matrix:
        total = sum(s * a * b for s, a, b in zip(table.class_sizes, phi.values, row))
        if total % order:
            raise NonIntegralError("inner product is not an integer")
        out.append(total // order)
    return tuple(out)


def inner_product(phi: ClassFunction, psi: ClassFunction) -> int:
    """<phi, psi> over a shared table; exact."""
    if phi.table is not psi.table:
        raise UsageError("class functions live on different tables")
    table = phi.table
    total = sum(s * a * b for s, a, b in zip(table.class_sizes, phi.values, psi.values))
    if total % table.group.order:
        raise NonIntegralError("inner product is not an integer")
    return total // table.group.order
