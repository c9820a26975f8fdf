"""The Burnside category on finite groups, in its algebraic description.

A morphism from X to Y acts on every global functor as a map F(X) -> F(Y)
and is an integer combination of pair classes (H, alpha) with H a subgroup
of Y and alpha: H -> X a homomorphism; the pair acts as the transfer off H
composed with restriction along alpha.  Two pairs name the same class when
they differ by conjugating H inside Y (rewriting alpha accordingly) or by
post-conjugating alpha inside X, so a class is canonicalized by minimizing
over both group actions.  The restriction morphism along i_n goes from
Sym(n) to Sym(n-1), matching the direction of its action.

Composition pushes restrictions past transfers with the double coset
formula and pulls surjections through preimages, which on single pairs
collapses to one sum: composing (J <= Z, beta: J -> Y) after
(H <= Y, alpha: H -> X) gives, over representatives y of beta(J)\\Y/H,
the pairs (beta^{-1}(yHy^{-1}) <= Z, x |-> alpha(y^{-1} beta(x) y)).

section_of_restriction inverts composition-with-i_n^* on the identity; any
preimage is a section, and the kernel-reduced solution plus a second one
assembled from the splitting machinery are returned and verified.
"""

from .errors import MathCheckError, UsageError
from .functors import GlobalFunctor, FreeAbelian, ZMap
from .linalg import integer_kernel, reduce_mod_lattice, solve_exact
from .perms import (
    GroupHom,
    Perm,
    PermGroup,
    conjugate_subgroup,
    double_cosets,
    product_group,
    standard_inclusion,
    symmetric_group,
    all_homs,
)
from .subgroups import subgroup_classes


class CanonicalPair:
    """A canonical representative (H <= target, alpha: H -> source)."""

    __slots__ = ("subgroup", "hom", "key")

    def __init__(self, subgroup: PermGroup, hom: GroupHom, key):
        self.subgroup = subgroup
        self.hom = hom
        self.key = key

    def label(self) -> str:
        gens = self.subgroup.generators
        body = ",".join(str(g) for g in gens) if gens else "()"
        imgs = ",".join(str(self.hom(g)) for g in gens) if gens else "()"
        return f"(<{body}> -> {imgs})"

    def __repr__(self) -> str:
        return f"CanonicalPair{self.label()}"


def canonical_pair(h: PermGroup, alpha: GroupHom, target: PermGroup) -> CanonicalPair:
    """Minimize (H, alpha) over conjugation in the target and the source.

    The key is the sorted element tuple of the conjugated subgroup together
    with the full value table of the rewritten homomorphism, so it does not
    depend on any generating-set choice.
    """
    source = alpha.target
    best = None
    for g in target.elements:
        ginv = g.inverse()
        moved = sorted((g * x * ginv) for x in h.elements)
        skey = tuple(p.images for p in moved)
        if best is not None and skey > best[0][0]:
            continue
        values = [alpha(ginv * y * g) for y in moved]
        for k in source.elements:
            kinv = k.inverse()
            hkey = tuple((k * v * kinv).images for v in values)
            cand = (skey, hkey)
            if best is None or cand < best[0]:
                best = (cand, g, k)
    (skey, hkey), g, k = best
    ginv, kinv = g.inverse(), k.inverse()
    sub = conjugate_subgroup(h, g)
    mapping = {y: k * alpha(ginv * y * g) * kinv for y in sub.elements}
    return CanonicalPair(sub, GroupHom(sub, source, mapping), (skey, hkey))


def morphism_basis(source: PermGroup, target: PermGroup):
    """All pair classes (H <= target, alpha: H -> source), sorted by key."""
    lat = subgroup_classes(target)
    found = {}
    for cls in lat.classes:
        for alpha in all_homs(cls.representative, source):
            pair = canonical_pair(cls.representative, alpha, target)
            found.setdefault(pair.key, pair)
    return [found[k] for k in sorted(found)]


class BurnsideCatMorphism:
    """An integer combination of canonical pairs, acting F(source) -> F(target)."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, source: PermGroup, target: PermGroup, terms=()):
        self.source = source
        self.target = target
        # terms maps pair.key -> (CanonicalPair, coefficient), zeros dropped
        self.terms = {}
        for pair, coeff in terms:
            self._add(pair, coeff)

    def _add(self, pair: CanonicalPair, coeff: int):
        if not coeff:
            return
        old = self.terms.get(pair.key)
        total = coeff + (old[1] if old else 0)
        if total:
            self.terms[pair.key] = (pair, total)
        else:
            self.terms.pop(pair.key, None)

    @staticmethod
    def identity(g: PermGroup) -> "BurnsideCatMorphism":
        pair = canonical_pair(g, GroupHom.identity(g), g)
        return BurnsideCatMorphism(g, g, [(pair, 1)])

    @staticmethod
    def restriction(alpha: GroupHom) -> "BurnsideCatMorphism":
        """The morphism from alpha.target to alpha.source acting as F(alpha)."""
        pair = canonical_pair(alpha.source, alpha, alpha.source)
        return BurnsideCatMorphism(alpha.target, alpha.source, [(pair, 1)])

    @staticmethod
    def transfer(h: PermGroup, g: PermGroup) -> "BurnsideCatMorphism":
        pair = canonical_pair(h, GroupHom.identity(h), g)
        return BurnsideCatMorphism(h, g, [(pair, 1)])

    def __add__(self, other: "BurnsideCatMorphism") -> "BurnsideCatMorphism":
        if (self.source.key(), self.target.key()) != (other.source.key(), other.target.key()):
            raise UsageError("morphism sum needs equal endpoints")
        out = BurnsideCatMorphism(self.source, self.target, list(self.terms.values()))
        for pair, coeff in other.terms.values():
            out._add(pair, coeff)
        return out

    def scaled(self, c: int) -> "BurnsideCatMorphism":
        return BurnsideCatMorphism(
            self.source, self.target, [(p, c * v) for p, v in self.terms.values()]
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BurnsideCatMorphism)
            and self.source.key() == other.source.key()
            and self.target.key() == other.target.key()
            and {k: v for k, (_, v) in self.terms.items()}
            == {k: v for k, (_, v) in other.terms.items()}
        )

    def __hash__(self):
        raise TypeError("unhashable")

    def compose(self, first: "BurnsideCatMorphism") -> "BurnsideCatMorphism":
        """self o first, rewriting restriction-past-transfer double cosets."""
        if first.target.key() != self.source.key():
            raise UsageError("morphisms not composable")
        mid = self.source
        out = BurnsideCatMorphism(first.source, self.target)
        for key_j in sorted(self.terms):
            jpair, jcoeff = self.terms[key_j]
            beta = jpair.hom
            image = beta.image()
            for key_h in sorted(first.terms):
                hpair, hcoeff = first.terms[key_h]
                h, alpha = hpair.subgroup, hpair.hom
                for y in double_cosets(mid, image, h):
                    yinv = y.inverse()
                    moved = conjugate_subgroup(h, y)
                    low = beta.preimage(moved)
                    mapping = {x: alpha(yinv * beta(x) * y) for x in low.elements}
                    gamma = GroupHom(low, first.source, mapping)
                    out._add(canonical_pair(low, gamma, self.target), jcoeff * hcoeff)
        return out

    def action_on(self, f: GlobalFunctor) -> ZMap:
        """The matrix of this morphism on a functor instance."""
        total = ZMap.zero(f.value(self.source), f.value(self.target))
        for key in sorted(self.terms):
            pair, coeff = self.terms[key]
            term = f.tr(pair.subgroup, self.target).compose(f.res(pair.hom))
            total = total + ZMap(term.source, term.target,
                                 [[coeff * x for x in row] for row in term.matrix])
        return total

    def to_json_obj(self):
        out = []
        for key in sorted(self.terms):
            pair, coeff = self.terms[key]
            gens = [str(g) for g in pair.subgroup.generators]
            out.append(
                {
                    "subgroup_generators": gens,
                    "hom_images": [str(pair.hom(g)) for g in pair.subgroup.generators],
                    "coefficient": coeff,
                }
            )
        return out

    def __repr__(self) -> str:
        body = " + ".join(
            f"{v}*{p.label()}" for p, v in (self.terms[k] for k in sorted(self.terms))
        )
        return f"Morphism({body or '0'})"


class RepresentedFunctor(GlobalFunctor):
    """The functor a group represents: value(G) = morphisms from L to G.

    Restriction and transfer act by composing with the corresponding
    category morphisms, so this instance routes everything through compose
    and gives the splitting machinery a hold on morphism groups themselves.
    """

    def __init__(self, l_group: PermGroup):
        super().__init__()
        self.l_group = l_group
        self.name = f"represented({l_group.name or l_group.degree})"
        self._bases = {}

    def basis(self, g: PermGroup):
        k = g.key()
        if k not in self._bases:
            self._bases[k] = morphism_basis(self.l_group, g)
        return self._bases[k]

    def _coords(self, m: BurnsideCatMorphism, g: PermGroup):
        basis = self.basis(g)
        index = {p.key: i for i, p in enumerate(basis)}
        vec = [0] * len(basis)
        for key in m.terms:
            if key not in index:
                raise MathCheckError("composite pair missing from the enumerated basis")
            vec[index[key]] = m.terms[key][1]
        return vec

    def _as_morphism(self, g: PermGroup, vec) -> BurnsideCatMorphism:
        basis = self.basis(g)
        return BurnsideCatMorphism(
            self.l_group, g, [(p, c) for p, c in zip(basis, vec)]
        )

    def _value(self, g):
        return FreeAbelian(tuple(p.label() for p in self.basis(g)))

    def _res_matrix(self, alpha):
        star = BurnsideCatMorphism.restriction(alpha)
        cols = [
            self._coords(star.compose(self._as_morphism(alpha.target, unit)), alpha.source)
            for unit in _units(len(self.basis(alpha.target)))
        ]
        return [list(row) for row in zip(*cols)] if cols else [[] for _ in self.basis(alpha.source)]

    def _tr_matrix(self, h, g):
        up = BurnsideCatMorphism.transfer(h, g)
        cols = [
            self._coords(up.compose(self._as_morphism(h, unit)), g)
            for unit in _units(len(self.basis(h)))
        ]
        return [list(row) for row in zip(*cols)] if cols else [[] for _ in self.basis(g)]


def _units(n):
    return [[1 if j == i else 0 for j in range(n)] for i in range(n)]


class SectionReport:
    """A verified section of composition with the point-forgetting restriction."""

    __slots__ = ("n", "sigma", "sigma_from_splitting", "basis_size")

    def __init__(self, n, sigma, sigma_from_splitting, basis_size):
        self.n = n
        self.sigma = sigma
        self.sigma_from_splitting = sigma_from_splitting
        self.basis_size = basis_size

    def summary_lines(self):
        lines = [
            f"section of restriction at n={self.n}"
            f" (morphism basis size {self.basis_size})",
            f"solver section: {self.sigma!r}",
        ]
        if self.sigma_from_splitting is not None:
            agree = self.sigma == self.sigma_from_splitting
            lines.append(f"splitting section: {self.sigma_from_splitting!r}")
            lines.append(f"the two sections {'agree' if agree else 'differ'};"
                         " both compose to the identity")
        return lines

    def to_dict(self):
        return {
            "n": self.n,
            "basis_size": self.basis_size,
            "section": self.sigma.to_json_obj(),
            "section_from_splitting": (
                None
                if self.sigma_from_splitting is None
                else self.sigma_from_splitting.to_json_obj()
            ),
        }


def section_of_restriction(n: int, with_splitting_route: bool = True) -> SectionReport:
    """A right inverse of i_n^* in the category, certified by composition.

    Solves the integer system over the basis of morphisms from Sym(n-1) to
    Sym(n) and reduces the solution modulo the kernel lattice so the answer
    is deterministic.  A second section is assembled from the level-by-level
    decomposition of the identity in the represented functor; both composites
    are checked against the identity morphism, exactly.
    """
    if n < 1:
        raise UsageError("n must be >= 1")
    prev = symmetric_group(n - 1)
    cur = symmetric_group(n)
    istar = BurnsideCatMorphism.restriction(standard_inclusion(n))
    basis = morphism_basis(prev, cur)
    target_basis = morphism_basis(prev, prev)
    index = {p.key: i for i, p in enumerate(target_basis)}
    columns = []
    for p in basis:
        composite = istar.compose(BurnsideCatMorphism(prev, cur, [(p, 1)]))
        col = [0] * len(target_basis)
        for key, (_, coeff) in composite.terms.items():
            col[index[key]] = coeff
        columns.append(col)
    matrix = [list(row) for row in zip(*columns)]
    ident = BurnsideCatMorphism.identity(prev)
    rhs = [0] * len(target_basis)
    rhs[index[next(iter(ident.terms))]] = 1
    x = solve_exact(matrix, rhs)
    if x is None:
        raise MathCheckError("composition with the restriction morphism is not onto"
                             " the identity; this contradicts the splitting")
    x = reduce_mod_lattice(x, integer_kernel(matrix))
    sigma = BurnsideCatMorphism(prev, cur, [(p, c) for p, c in zip(basis, x)])
    if not istar.compose(sigma) == ident:
        raise MathCheckError("solver produced a non-section")

    sigma_split = None
    if with_splitting_route:
        sigma_split = _section_from_splitting(n)
        if not istar.compose(sigma_split) == ident:
            raise MathCheckError("splitting route produced a non-section")
    return SectionReport(n, sigma, sigma_split, len(basis))


def _section_from_splitting(n: int) -> BurnsideCatMorphism:
    """Decompose the identity one level down and push the slots back up."""
    from .splitting import decompose, psi

    prev = symmetric_group(n - 1)
    rep = RepresentedFunctor(prev)
    ident = BurnsideCatMorphism.identity(prev)
    target = rep._coords(ident, prev)
    parts = decompose(rep, n - 1, target)
    total = [0] * rep.value(symmetric_group(n)).rank
    for k, part in enumerate(parts):
        image = psi(rep, k, n).apply(part)
        total = [a + b for a, b in zip(total, image)]
    return rep._as_morphism(symmetric_group(n), total)


def _split_product_point(p: Perm, d: int):
    left = Perm(p.images[:d])
    right = Perm(tuple(v - d for v in p.images[d:]))
    return left, right


def product_section(g: PermGroup, n: int) -> "ProductSectionReport":
    """Pair every term of a section with the extra factor and verify it.

    Builds sigma for i_n, forms the morphism from G x Sym(n-1) to G x Sym(n)
    with basis pairs (G x H, G x alpha), and checks on the Burnside functor
    that it is a right inverse of restriction along G x i_n.
    """
    from .burnside import BurnsideFunctor

    base = section_of_restriction(n, with_splitting_route=False)
    prev, cur = symmetric_group(n - 1), symmetric_group(n)
    big_prev = product_group(g, prev)
    big_cur = product_group(g, cur)
    d = g.degree

    inc = standard_inclusion(n)

    def embed(p: Perm) -> Perm:
        left, right = _split_product_point(p, d)
        lifted = inc(right)
        return Perm(left.images + tuple(v + d for v in lifted.images))

    big_inc = GroupHom.from_callable(big_prev, big_cur, embed)

    paired = BurnsideCatMorphism(big_prev, big_cur)
    for key in sorted(base.sigma.terms):
        pair, coeff = base.sigma.terms[key]
        sub = product_group(g, pair.subgroup)

        def mapped(p: Perm, inner=pair.hom):
            left, right = _split_product_point(p, d)
            out = inner(right)
            return Perm(left.images + tuple(v + d for v in out.images))

        alpha = GroupHom.from_callable(sub, big_prev, mapped)
        paired._add(canonical_pair(sub, alpha, big_cur), coeff)

    burnside = BurnsideFunctor()
    act = paired.action_on(burnside)
    composite = burnside.res(big_inc).compose(act)
    ok = composite.is_identity()
    if not ok:
        raise MathCheckError("paired section is not a right inverse of restriction")
    return ProductSectionReport(g, n, paired, True)


class ProductSectionReport:
    __slots__ = ("group", "n", "paired", "verified")

    def __init__(self, group, n, paired, verified):
        self.group = group
        self.n = n
        self.paired = paired
        self.verified = verified

    def summary_lines(self):
        name = self.group.name or f"degree-{self.group.degree} group"
        return [
            f"product section for {name} x i_{self.n}:"
            f" right inverse on the Burnside values: {'yes' if self.verified else 'NO'}",
        ]

    def to_dict(self):
        return {
            "group": self.group.name or f"degree {self.group.degree}",
            "n": self.n,
            "verified": self.verified,
            "section": self.paired.to_json_obj(),
        }
