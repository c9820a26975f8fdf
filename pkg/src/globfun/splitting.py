"""Splitting the value of a global functor at a symmetric group.

Write i_n for the embedding Sym(n-1) -> Sym(n) and F(i_n) for restriction
along it.  The k-th kernel lattice is ker(F(i_k)) inside F(Sym(k)), with the
k = 0 slot read as all of F(e).  The map psi(k, n) sends that lattice into
F(Sym(n)) by restricting along the block projection Sym(k) x Sym(n-k) ->
Sym(k) and transferring up; psi(0, n) is inflation from the trivial group
and psi(n, n) the plain inclusion.  Stacking the psi columns gives a square
matrix, and the splitting statement is that it is unimodular: F(Sym(n)) is
the direct sum of the kernel lattices.  decompose inverts this sum level by
level, and verify_dcf_symmetric checks the double coset identity that makes
the induction step work.

The alternating story is the opposite: for n >= 5 restriction out of A_n
need not be surjective, witnessed by conjugacy fusion, and the low cases
n = 3, 4 still split because a unique group-homomorphism retraction exists.
"""

from .errors import MathCheckError, UsageError
from .functors import FreeAbelian, GlobalFunctor, ZMap, terminal_hom
from .linalg import (
    det_exact,
    identity_matrix,
    integer_kernel,
    mat_eq,
    mat_mul,
    solve_exact,
    transpose,
)
from .perms import (
    GroupHom,
    Perm,
    PermGroup,
    all_homs,
    alternating_group,
    fused_pairs,
    restrict_to_block,
    standard_inclusion,
    symmetric_group,
    young_two_block,
)


def _extend(p: Perm, n: int) -> Perm:
    """Re-read a permutation of degree < n as one of degree n."""
    return Perm(p.images + tuple(range(p.degree + 1, n + 1)))


def kernel_basis(f: GlobalFunctor, k: int):
    """Rows spanning ker(F(i_k)) in F(Sym(k)) coordinates; all of F(e) at k = 0."""
    if k < 0:
        raise UsageError("kernel index must be >= 0")
    if k == 0:
        return identity_matrix(f.value(symmetric_group(0)).rank)
    m = f.res(standard_inclusion(k)).matrix
    return integer_kernel([list(r) for r in m])


def _kernel_space(k: int, rank: int) -> FreeAbelian:
    return FreeAbelian(tuple(f"ker({k})#{i}" for i in range(rank)))


def psi(f: GlobalFunctor, k: int, n: int) -> ZMap:
    """The summand inclusion of the k-th kernel lattice into F(Sym(n))."""
    if not 0 <= k <= n:
        raise UsageError(f"need 0 <= k <= n, got k={k}, n={n}")
    basis = kernel_basis(f, k)
    src = _kernel_space(k, len(basis))
    target = f.value(symmetric_group(n))
    if k == 0:
        return ZMap(src, target, f.res(terminal_hom(symmetric_group(n))).matrix)
    y = young_two_block(n, k)
    first_block = restrict_to_block(y, range(1, k + 1))
    m = mat_mul(
        f.tr(y, symmetric_group(n)).matrix,
        mat_mul(f.res(first_block).matrix, transpose(basis)),
    )
    return ZMap(src, target, m)


class DcfCheck:
    """Outcome of the symmetric-group double coset identity at one (k, n)."""

    __slots__ = ("functor", "n", "k", "passed", "detail", "lhs", "rhs")

    def __init__(self, functor, n, k, passed, detail, lhs, rhs):
        self.functor = functor
        self.n = n
        self.k = k
        self.passed = passed
        self.detail = detail
        self.lhs = lhs
        self.rhs = rhs

    def summary(self) -> str:
        body = "EQUAL" if self.passed else f"DIFFER ({self.detail})"
        return f"dcf {self.functor} n={self.n} k={self.k}: {body}"

    def to_dict(self):
        return {
            "functor": self.functor,
            "n": self.n,
            "k": self.k,
            "passed": self.passed,
            "detail": self.detail,
        }


def verify_dcf_symmetric(f: GlobalFunctor, k: int, n: int) -> DcfCheck:
    """Check, for this functor, that restricting a transfer off the two-block
    subgroup of Sym(n) to Sym(n-1) equals the displayed two-summand formula.

    Both sides are maps F(Sym(k) x Sym(n-k)) -> F(Sym(n-1)).  The second
    summand restricts along conjugation by the transposition (k n), which
    carries the (k-1, n-k) block subgroup of Sym(n-1) into the two-block
    subgroup of Sym(n).
    """
    if not 1 <= k <= n - 1:
        raise UsageError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    sym_n = symmetric_group(n)
    sym_prev = symmetric_group(n - 1)
    h = young_two_block(n, k)

    lhs = f.res(standard_inclusion(n)).compose(f.tr(h, sym_n))

    low1 = young_two_block(n - 1, k)
    into1 = GroupHom.from_callable(low1, h, lambda x: _extend(x, n))
    term1 = f.tr(low1, sym_prev).compose(f.res(into1))

    low2 = young_two_block(n - 1, k - 1)
    t = Perm.from_cycles(n, [(k, n)])
    into2 = GroupHom.from_callable(low2, h, lambda x: _extend(x, n).conj(t))
    term2 = f.tr(low2, sym_prev).compose(f.res(into2))

    rhs = term1 + term2
    passed = lhs == rhs
    detail = ""
    if not passed:
        for j in range(lhs.source.rank):
            a = tuple(row[j] for row in lhs.matrix)
            b = tuple(row[j] for row in rhs.matrix)
            if a != b:
                detail = f"first differing column {j}: left {a}, right {b}"
                break
    return DcfCheck(f.name, n, k, passed, detail, lhs, rhs)


class SplittingReport:
    """The assembled splitting data for one functor at one symmetric group."""

    __slots__ = (
        "functor",
        "n",
        "kernel_bases",
        "psi_maps",
        "assembled",
        "determinant",
        "component_ranks",
    )

    def __init__(self, functor, n, kernel_bases, psi_maps, assembled, determinant):
        self.functor = functor
        self.n = n
        self.kernel_bases = kernel_bases
        self.psi_maps = psi_maps
        self.assembled = assembled
        self.determinant = determinant
        self.component_ranks = tuple(len(b) for b in kernel_bases)

    def summary_lines(self):
        return [
            f"splitting of {self.functor} at Sym({self.n})",
            f"component ranks: {list(self.component_ranks)}"
            f" (total {sum(self.component_ranks)})",
            f"determinant of the assembled map: {self.determinant}",
        ]

    def to_dict(self):
        return {
            "functor": self.functor,
            "n": self.n,
            "component_ranks": list(self.component_ranks),
            "determinant": self.determinant,
            "kernel_bases": [[list(r) for r in b] for b in self.kernel_bases],
            "assembled": [list(r) for r in self.assembled],
        }


def splitting_report(f: GlobalFunctor, n: int) -> SplittingReport:
    """Build all psi maps at level n, assemble them, and certify the split.

    Everything the splitting asserts is re-checked here: the ranks add up, the
    assembled square matrix is unimodular, each psi commutes with one more
    restriction (the ladder), and restriction to level n-1 is onto.  Any
    failure raises MathCheckError since it cannot be a data condition.
    """
    if n < 0:
        raise UsageError("n must be >= 0")
    value_rank = f.value(symmetric_group(n)).rank
    bases = [kernel_basis(f, k) for k in range(n + 1)]
    psis = [psi(f, k, n) for k in range(n + 1)]
    if sum(len(b) for b in bases) != value_rank:
        raise MathCheckError(
            f"kernel ranks {[len(b) for b in bases]} do not add up to {value_rank}"
        )
    assembled = [
        [x for p in psis for x in p.matrix[i]] for i in range(value_rank)
    ]
    det = det_exact(assembled)
    if abs(det) != 1:
        raise MathCheckError(f"assembled splitting matrix has determinant {det}")
    if n >= 1:
        down = [list(r) for r in f.res(standard_inclusion(n)).matrix]
        for k in range(n):
            lifted = mat_mul(down, [list(r) for r in psis[k].matrix])
            lower = [list(r) for r in psi(f, k, n - 1).matrix]
            if not mat_eq(lifted, lower):
                raise MathCheckError(f"ladder relation fails at k={k}, n={n}")
        prev_rank = f.value(symmetric_group(n - 1)).rank
        for j in range(prev_rank):
            e = [1 if i == j else 0 for i in range(prev_rank)]
            if solve_exact(down, e) is None:
                raise MathCheckError(
                    f"basis vector {j} of the lower level has no integer preimage"
                )
    return SplittingReport(f.name, n, bases, psis, assembled, det)


def decompose(f: GlobalFunctor, n: int, x):
    """The unique kernel-lattice components of x, one coordinate tuple per k.

    Recurses over levels: restrict, decompose below, and put what is left in
    the top kernel.  The top residue failing the lattice membership test
    would contradict the splitting, so it raises.
    """
    x = tuple(int(v) for v in x)
    if len(x) != f.value(symmetric_group(n)).rank:
        raise UsageError("vector length does not match the functor value rank")
    if n == 0:
        return (x,)
    below = decompose(f, n - 1, f.res(standard_inclusion(n)).apply(x))
    residual = list(x)
    for k, part in enumerate(below):
        image = psi(f, k, n).apply(part)
        residual = [a - b for a, b in zip(residual, image)]
    basis = kernel_basis(f, n)
    if not basis:
        if any(residual):
            raise MathCheckError("nonzero residue left for an empty kernel")
        top = ()
    else:
        coords = solve_exact(transpose(basis), residual)
        if coords is None:
            raise MathCheckError("residue does not lie in the top kernel lattice")
        top = tuple(coords)
    return below + (top,)


def reassemble(f: GlobalFunctor, n: int, components):
    """Inverse of decompose: sum the psi images of the components."""
    components = tuple(tuple(c) for c in components)
    if len(components) != n + 1:
        raise UsageError(f"expected {n + 1} components, got {len(components)}")
    total = [0] * f.value(symmetric_group(n)).rank
    for k, part in enumerate(components):
        image = psi(f, k, n).apply(part)
        total = [a + b for a, b in zip(total, image)]
    return tuple(total)


# ---------------------------------------------------------------------------
# the alternating family


def embedded_alternating(n: int) -> PermGroup:
    """Alt(n-1) inside Alt(n), fixing the last point."""
    inner = alternating_group(n - 1)
    return PermGroup.from_elements(
        n, [_extend(p, n) for p in inner.elements], name=f"A{n - 1}"
    )


class AlternatingFusionReport:
    """Fusion of conjugacy classes along Alt(n-1) <= Alt(n), and what it
    says about restriction out of the representation ring value."""

    __slots__ = ("n", "pairs", "class_count", "merged_rank")

    def __init__(self, n, pairs, class_count):
        self.n = n
        self.pairs = list(pairs)
        self.class_count = class_count
        # rank of the constant-on-fused-classes sublattice: one generator per
        # group of classes glued together by the pairs
        parent = {}

        def root(a):
            parent.setdefault(a, a)
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        merged = 0
        for a, b in self.pairs:
            ra, rb = root(a), root(b)
            if ra != rb:
                parent[ra] = rb
                merged += 1
        self.merged_rank = class_count - merged

    @property
    def restriction_surjective(self) -> bool:
        return not self.pairs

    def summary_lines(self):
        head = f"fusion in A{self.n - 1} <= A{self.n}:"
        if not self.pairs:
            return [head, "  no fusion witness at this n"]
        lines = [head]
        for a, b in self.pairs:
            lines.append(f"  classes of {a} and {b} fuse")
        lines.append(
            f"  restricted class functions are constant on each fused pair, so the"
            f" image of restriction has rank at most {self.merged_rank} of"
            f" {self.class_count}; restriction is not surjective"
        )
        return lines

    def to_dict(self):
        return {
            "n": self.n,
            "witnesses": [[str(a), str(b)] for a, b in self.pairs],
            "class_count": self.class_count,
            "restriction_surjective": self.restriction_surjective,
        }


def non_splitting_witness_alternating(n: int) -> AlternatingFusionReport:
    """Search Alt(n-1) <= Alt(n) for non-conjugate classes that fuse.

    A fused pair means every restricted class function takes equal values on
    the two classes, so restriction out of the representation ring value at
    Alt(n) cannot be surjective, and a natural splitting is impossible.
    """
    if not 5 <= n <= 8:
        raise UsageError("the fusion search covers 5 <= n <= 8")
    g = alternating_group(n)
    h = embedded_alternating(n)
    pairs = fused_pairs(h, g)
    return AlternatingFusionReport(n, pairs, len(h.conjugacy_classes()))


def alternating_retractions(n: int):
    """All group homomorphisms r: Alt(n) -> Alt(n-1) with r o i = id.

    Exactly one exists for n = 3 and n = 4, which is why the low alternating
    restrictions do split; none exists from n = 5 on.
    """
    if n < 3:
        raise UsageError("n must be >= 3")
    big = alternating_group(n)
    small = alternating_group(n - 1)
    found = []
    for r in all_homs(big, small):
        if all(r(_extend(x, n)) == x for x in small.elements):
            found.append(r)
    return found
