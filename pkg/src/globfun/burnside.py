"""The Burnside functor: isomorphism classes of finite G-sets.

The value at G is free abelian on the transitive G-sets [G/H], one basis
vector per conjugacy class of subgroups.  Restriction along alpha: K -> G
regards G/H as a K-set through alpha and decomposes it into orbits, each
identified by the conjugacy class of its stabilizer.  Transfer along H <= G
just re-reads an H-set as a G-set on the same cosets: [H/L] goes to [G/L].
"""

from .errors import MathCheckError
from .functors import FreeAbelian, GlobalFunctor
from .linalg import zeros
from .perms import PermGroup, left_coset_reps
from .subgroups import DEFAULT_MAX_LATTICE_ORDER, subgroup_classes


class BurnsideFunctor(GlobalFunctor):
    name = "burnside"

    def __init__(self, lattice_cap: int = DEFAULT_MAX_LATTICE_ORDER):
        super().__init__()
        self._cap = lattice_cap

    def _lattice(self, g: PermGroup):
        return subgroup_classes(g, self._cap)

    def _value(self, g: PermGroup) -> FreeAbelian:
        lat = self._lattice(g)
        return FreeAbelian(tuple(f"[G/{cls.label()}]" for cls in lat.classes))

    def _res_matrix(self, alpha):
        k, g = alpha.source, alpha.target
        lat_g = self._lattice(g)
        lat_k = self._lattice(k)
        kgens = k.generators or [k.identity]
        matrix = zeros(len(lat_k), len(lat_g))
        for j, cls in enumerate(lat_g.classes):
            rep_of, reps = left_coset_reps(g, cls.representative)
            todo = dict.fromkeys(reps)
            while todo:
                start, _ = todo.popitem()
                orbit = {start}
                frontier = [start]
                while frontier:
                    r = frontier.pop()
                    for x in kgens:
                        nxt = rep_of[alpha(x) * r]
                        if nxt not in orbit:
                            orbit.add(nxt)
                            todo.pop(nxt, None)
                            frontier.append(nxt)
                stab = PermGroup.from_elements(
                    k.degree, [x for x in k.elements if rep_of[alpha(x) * start] == start]
                )
                if stab.order * len(orbit) != k.order:
                    raise MathCheckError("orbit size does not match stabilizer index")
                matrix[lat_k.class_of(stab)][j] += 1
        return matrix

    def _tr_matrix(self, h, g):
        lat_h = self._lattice(h)
        lat_g = self._lattice(g)
        matrix = zeros(len(lat_g), len(lat_h))
        for j, cls in enumerate(lat_h.classes):
            matrix[lat_g.class_of(cls.representative)][j] = 1
        return matrix
