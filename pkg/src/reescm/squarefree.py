"""Square-free monomial ideal combinatorics.

Stanley-Reisner complexes, Alexander duality (generic transversal-based and
the staircase closed form), Betti numbers via degree-restricted simplicial
homology, regularity, linear-resolution tests, and Cohen-Macaulayness by two
independent criteria.

Monomials are represented as integer bitmasks over a fixed variable list; all
homology ranks are computed exactly (fraction-free integer elimination for
the rationals, modular elimination for prime fields).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_VERTEX_CAP = 24


class SquarefreeError(ValueError):
    pass


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _bits(m: int):
    i = 0
    while m:
        if m & 1:
            yield i
        m >>= 1
        i += 1


def minimalize_masks(masks) -> tuple:
    """Inclusion-minimal elements of a set of bitmasks."""
    uniq = sorted(set(masks), key=lambda m: (_popcount(m), m))
    out = []
    for m in uniq:
        if not any(k & m == k for k in out):
            out.append(m)
    return tuple(sorted(out))


@dataclass(frozen=True)
class MonomialIdeal:
    """A square-free monomial ideal: variable names plus generator bitmasks.

    Generators are stored inclusion-minimalized and sorted.
    """

    variables: tuple
    generators: tuple

    @staticmethod
    def from_masks(variables, masks) -> "MonomialIdeal":
        variables = tuple(variables)
        full = (1 << len(variables)) - 1
        for m in masks:
            if m & ~full or m == 0:
                raise SquarefreeError(f"generator mask {m:#x} out of range")
        return MonomialIdeal(variables, minimalize_masks(masks))

    @staticmethod
    def from_supports(variables, supports) -> "MonomialIdeal":
        variables = tuple(variables)
        index = {v: i for i, v in enumerate(variables)}
        masks = []
        for sup in supports:
            m = 0
            for v in sup:
                b = 1 << index[v]
                if m & b:
                    raise SquarefreeError(f"non-square-free support {sup}")
                m |= b
            masks.append(m)
        return MonomialIdeal.from_masks(variables, masks)

    @staticmethod
    def from_exponents(variables, exponent_tuples) -> "MonomialIdeal":
        masks = []
        for mono in exponent_tuples:
            m = 0
            for i, e in enumerate(mono):
                if e > 1:
                    raise SquarefreeError(f"non-square-free monomial {mono}")
                if e:
                    m |= 1 << i
            masks.append(m)
        return MonomialIdeal.from_masks(variables, masks)

    # -- queries --

    def supports(self):
        return [frozenset(self.variables[i] for i in _bits(m))
                for m in self.generators]

    def generator_strings(self):
        return ["*".join(self.variables[i] for i in _bits(m))
                for m in self.generators]

    def degrees(self):
        return [_popcount(m) for m in self.generators]

    def contains_monomial(self, mask: int) -> bool:
        return any(g & mask == g for g in self.generators)

    def nvars(self) -> int:
        return len(self.variables)

    def __len__(self):
        return len(self.generators)


# --- Alexander duality --------------------------------------------------------


def _minimal_transversals(gens, nvars) -> tuple:
    """Inclusion-minimal hitting sets of the generator hypergraph.

    Branch and bound on the vertices of an uncovered edge; an exclusion mask
    prevents the same cover being found along several branches, and a final
    minimality filter removes dominated covers.
    """
    if not gens:
        return ()
    results = []

    def rec(cover: int, excluded: int, remaining):
        if not remaining:
            results.append(cover)
            return
        edge = min(remaining, key=_popcount)
        free = edge & ~excluded
        if not free:
            return
        seen = 0
        for v in _bits(free):
            bit = 1 << v
            rec(cover | bit, excluded | seen, [e for e in remaining
                                               if not e & bit])
            seen |= bit

    rec(0, 0, list(gens))
    # the exclusion discipline can still leave non-minimal covers
    minimal = []
    for c in sorted(set(results), key=_popcount):
        for v in _bits(c):
            sub = c & ~(1 << v)
            if all(e & sub for e in gens):
                break
        else:
            minimal.append(c)
    return tuple(sorted(minimal))


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the intersection of the prime components P_f."""
    if not ideal.generators:
        raise SquarefreeError("Alexander dual of the zero ideal is undefined")
    covers = _minimal_transversals(ideal.generators, ideal.nvars())
    return MonomialIdeal(ideal.variables, minimalize_masks(covers))


def dual_brute_force(ideal: MonomialIdeal) -> MonomialIdeal:
    """Reference dual: expand the intersection of prime components directly.

    Exponential; intended for cross-checks on small ideals only.
    """
    n = ideal.nvars()
    if n > 20:
        raise SquarefreeError("brute-force dual capped at 20 variables")
    masks = [m for m in range(1, 1 << n)
             if all(m & g for g in ideal.generators)]
    return MonomialIdeal(ideal.variables, minimalize_masks(masks))


# --- staircase ideals (structured products) -----------------------------------


def grid_variables(m: int, n: int, name: str = "x"):
    return tuple(f"{name}[{i},{j}]" for i in range(1, m + 1)
                 for j in range(1, n + 1))


def _grid_bit(n, i, j):
    return 1 << ((i - 1) * n + (j - 1))


def staircase_ideal(m: int, n: int, l: int) -> MonomialIdeal:
    """Products x_{1 a_1}...x_{m a_m} with a_1 < ... < a_l <= a_{l+1} < ... < a_m."""
    if not (1 <= l <= m - 1 and m <= n):
        raise SquarefreeError(f"staircase parameters out of range: {(m, n, l)}")
    masks = []
    for a in itertools.product(range(1, n + 1), repeat=m):
        ok = all(a[i] < a[i + 1] for i in range(m - 1) if i != l - 1)
        if ok and a[l - 1] <= a[l]:
            masks.append(sum(_grid_bit(n, i + 1, a[i]) for i in range(m)))
    return MonomialIdeal.from_masks(grid_variables(m, n), masks)


def staircase_dual_closed_form(m: int, n: int, l: int) -> MonomialIdeal:
    """The closed-form Alexander dual of staircase_ideal(m, n, l).

    Generators are row-interval products controlled by thresholds
    0 <= k_1 < ... < k_l <= k_{l+1} < ... < k_{m-1} <= n: row 1 covers
    columns 1..k_1, each later row resumes one past (strict steps skip an
    extra column), and the weak step at row l+1 resumes at k_l + 1.
    """
    if not (1 <= l <= m - 1 and m <= n):
        raise SquarefreeError(f"staircase parameters out of range: {(m, n, l)}")
    masks = []
    for ks in itertools.product(range(0, n + 1), repeat=m - 1):
        ok = all(ks[i] < ks[i + 1] for i in range(m - 2) if i != l - 1)
        if m >= 3 and l <= m - 2 and not (ks[l - 1] <= ks[l] if l - 1 < m - 2
                                          else True):
            continue
        if not ok:
            continue
        mask = 0
        # row 1: columns 1..k_1
        for j in range(1, ks[0] + 1):
            mask |= _grid_bit(n, 1, j)
        for i in range(2, m + 1):
            hi = ks[i - 1] if i - 1 < m - 1 else n
            lo = ks[i - 2] + (1 if i == l + 1 else 2)
            for j in range(lo, hi + 1):
                mask |= _grid_bit(n, i, j)
        if mask:
            masks.append(mask)
    return MonomialIdeal.from_masks(grid_variables(m, n), masks)


# --- simplicial homology ------------------------------------------------------


def _rank_rational(rows) -> int:
    """Exact rank over the rationals: sparse elimination with exact Fractions,
    preferring unit pivots (boundary matrices mostly reduce without fractions).
    """
    pending = [dict(r) for r in rows if r]
    by_col = {}
    for idx, r in enumerate(pending):
        for c in r:
            by_col.setdefault(c, set()).add(idx)
    alive = set(range(len(pending)))
    rank = 0
    while alive:
        # pick the sparsest live row, preferring one with a unit entry
        ridx = min(alive, key=lambda i: (len(pending[i]),
                                         not any(abs(v) == 1
                                                 for v in pending[i].values())))
        row = pending[ridx]
        alive.discard(ridx)
        if not row:
            continue
        rank += 1
        col = min(row, key=lambda c: (abs(row[c]) != 1, len(by_col[c])))
        pv = row[col]
        for other in list(by_col.get(col, ())):
            if other == ridx or other not in alive:
                continue
            orow = pending[other]
            f = Fraction(orow[col], pv) if pv not in (1, -1) else orow[col] * pv
            for c, v in row.items():
                nv = orow.get(c, 0) - f * v
                if nv:
                    orow[c] = nv
                    by_col.setdefault(c, set()).add(other)
                else:
                    orow.pop(c, None)
                    by_col[c].discard(other)
        for c in row:
            by_col[c].discard(ridx)
    return rank


def _rank_mod(rows, p: int) -> int:
    pending = [{c: v % p for c, v in r.items() if v % p} for r in rows]
    pending = [r for r in pending if r]
    by_col = {}
    for idx, r in enumerate(pending):
        for c in r:
            by_col.setdefault(c, set()).add(idx)
    alive = set(range(len(pending)))
    rank = 0
    while alive:
        ridx = min(alive, key=lambda i: len(pending[i]))
        row = pending[ridx]
        alive.discard(ridx)
        if not row:
            continue
        rank += 1
        col = min(row, key=lambda c: len(by_col[c]))
        inv = pow(row[col], p - 2, p)
        for other in list(by_col.get(col, ())):
            if other == ridx or other not in alive:
                continue
            orow = pending[other]
            f = (orow[col] * inv) % p
            for c, v in row.items():
                nv = (orow.get(c, 0) - f * v) % p
                if nv:
                    orow[c] = nv
                    by_col.setdefault(c, set()).add(other)
                else:
                    orow.pop(c, None)
                    by_col[c].discard(other)
        for c in row:
            by_col[c].discard(ridx)
    return rank


def _matrix_rank(rows, char: int = 0) -> int:
    """Rank of a matrix given as sparse rows ({column: value} dicts)."""
    if char == 0:
        return _rank_rational(rows)
    return _rank_mod(rows, char)


def reduced_homology_dims(faces, char: int = 0) -> dict:
    """Reduced homology ranks of an abstract simplicial complex.

    ``faces`` is an iterable of frozensets (the empty face included when the
    complex is non-void). Returns {k: dim H~_k} with zero entries omitted.
    """
    faces = set(map(frozenset, faces))
    if not faces:
        return {}
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort(key=lambda s: tuple(sorted(s)))
    maxdim = max(by_dim)
    index = {d: {f: i for i, f in enumerate(by_dim[d])} for d in by_dim}
    # rank of each boundary map d_k : C_k -> C_{k-1}
    branks = {}
    for k in range(0, maxdim + 1):
        if k not in by_dim or (k - 1) not in by_dim:
            branks[k] = 0
            continue
        lower = index[k - 1]
        rows = []
        for f in by_dim[k]:
            verts = sorted(f)
            row = {}
            for i, v in enumerate(verts):
                sub = frozenset(f - {v})
                row[lower[sub]] = 1 if i % 2 == 0 else -1
            rows.append(row)
        branks[k] = _matrix_rank(rows, char)
    dims = {}
    for k in range(-1, maxdim + 1):
        ck = len(by_dim.get(k, ()))
        h = ck - branks.get(k, 0) - branks.get(k + 1, 0)
        if h:
            dims[k] = h
    return dims


# --- Stanley-Reisner complexes -------------------------------------------------


def restricted_faces(ideal: MonomialIdeal, sigma: int):
    """Faces of the Stanley-Reisner complex of ``ideal`` restricted to sigma.

    A subset is a face iff it contains no generator support. Enumerated by a
    DFS that only extends along face-preserving vertex additions.
    """
    gens = [g for g in ideal.generators if g & sigma == g]
    verts = list(_bits(sigma))
    faces = []

    def is_face(mask):
        return not any(g & mask == g for g in gens)

    def rec(mask, start):
        faces.append(mask)
        for i in range(start, len(verts)):
            b = 1 << verts[i]
            if is_face(mask | b):
                rec(mask | b, i + 1)

    rec(0, 0)
    return faces


def _mask_to_frozenset(mask):
    return frozenset(_bits(mask))


def support_closure(ideal: MonomialIdeal) -> list:
    """All unions of generator supports (the lcm-lattice degrees)."""
    closure = {0}
    for g in ideal.generators:
        closure |= {s | g for s in closure}
    closure.discard(0)
    return sorted(closure, key=lambda m: (_popcount(m), m))


def betti_numbers(ideal: MonomialIdeal, char: int = 0,
                  vertex_cap: int = DEFAULT_VERTEX_CAP,
                  method: str = "auto") -> "BettiTable":
    """Graded Betti numbers of the ideal over a field of the given characteristic.

    Degrees are restricted to the lcm-closure of generator supports; for each
    such degree the contribution is a reduced homology rank, computed either
    from the restricted complex directly or from its combinatorial Alexander
    dual within the degree support, whichever has fewer faces (or as forced
    by ``method`` in {"restriction", "dual", "auto"}).
    """
    if ideal.nvars() > vertex_cap:
        raise SquarefreeError(
            f"vertex count {ideal.nvars()} exceeds cap {vertex_cap}")
    if not ideal.generators:
        raise SquarefreeError("Betti numbers of the zero ideal are undefined")
    entries = {}
    for sigma in support_closure(ideal):
        nsig = _popcount(sigma)
        contrib = _sigma_homology(ideal, sigma, char, method)
        for k, h in contrib.items():
            # Hochster: beta_{i, sigma}(I) = dim H~_{|sigma| - i - 2}
            i = nsig - k - 2
            if i >= 0 and h:
                entries[(i, nsig)] = entries.get((i, nsig), 0) + h
    return BettiTable(entries, char)


def _sigma_homology(ideal: MonomialIdeal, sigma: int, char: int,
                    method: str) -> dict:
    """Reduced homology ranks H~_k(Delta(I)|_sigma), keyed by k."""
    nsig = _popcount(sigma)
    if method in ("restriction", "dual"):
        use_dual = method == "dual"
    else:
        use_dual = _estimate_dual_cheaper(ideal, sigma)
    if not use_dual:
        faces = [_mask_to_frozenset(f)
                 for f in restricted_faces(ideal, sigma)]
        return reduced_homology_dims(faces, char)
    # combinatorial Alexander duality inside sigma:
    #   H~_k(Delta|sigma) ~= H~_{|sigma|-k-3}(dual complex)
    dual_faces = _dual_restricted_faces(ideal, sigma)
    hom = reduced_homology_dims(dual_faces, char)
    return {nsig - j - 3: h for j, h in hom.items()}


def _dual_restricted_faces(ideal: MonomialIdeal, sigma: int):
    """Faces of the Alexander dual of Delta(I)|_sigma within sigma.

    These are the subsets tau of sigma whose complement sigma - tau contains
    a generator; i.e. the complex generated by the facets sigma - g.
    """
    complements = {sigma & ~g for g in ideal.generators if g & sigma == g}
    facets = [f for f in complements
              if not any(f != h and f & h == f for h in complements)]
    seen = set()
    out = []

    def rec(mask, free):
        if mask in seen:
            return
        seen.add(mask)
        out.append(_mask_to_frozenset(mask))
        rest = free
        while rest:
            v = rest & -rest
            rest &= rest - 1
            rec(mask & ~v, free & ~v)

    for f in facets:
        rec(f, f)
    return out


def _estimate_dual_cheaper(ideal: MonomialIdeal, sigma: int) -> bool:
    """Heuristic: use the dual complex when generators in sigma are large."""
    degs = [_popcount(g) for g in ideal.generators if g & sigma == g]
    if not degs:
        return False
    nsig = _popcount(sigma)
    return min(degs) > nsig / 2


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers {(i, j): rank} of a monomial ideal."""

    entries: dict
    char: int = 0

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def regularity(self) -> int:
        return max(j - i for (i, j) in self.entries)

    def projdim(self) -> int:
        return max(i for (i, _) in self.entries)

    def generator_degrees(self) -> set:
        return {j for (i, j) in self.entries if i == 0}

    def as_triples(self):
        return [{"i": i, "j": j, "rank": r}
                for (i, j), r in sorted(self.entries.items())]


def regularity(ideal: MonomialIdeal, char: int = 0, **kw) -> int:
    return betti_numbers(ideal, char, **kw).regularity()


def has_linear_resolution(ideal: MonomialIdeal, char: int = 0, **kw) -> bool:
    table = betti_numbers(ideal, char, **kw)
    degs = table.generator_degrees()
    if len(degs) != 1:
        return False
    (d,) = degs
    return table.regularity() == d


# --- Cohen-Macaulay criteria ---------------------------------------------------


def eagon_reiner_cm(ideal: MonomialIdeal, char: int = 0, **kw) -> bool:
    """R/I is Cohen-Macaulay iff the Alexander dual has a linear resolution."""
    return has_linear_resolution(alexander_dual(ideal), char, **kw)


def reisner_cm(ideal: MonomialIdeal, char: int = 0,
               vertex_cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """Reisner criterion: every face link has vanishing homology below its
    dimension (including the empty face, whose link is the whole complex)."""
    if ideal.nvars() > vertex_cap:
        raise SquarefreeError(
            f"vertex count {ideal.nvars()} exceeds cap {vertex_cap}")
    full = (1 << ideal.nvars()) - 1
    all_faces = restricted_faces(ideal, full)
    face_set = set(all_faces)
    for face in all_faces:
        link = _link_faces(face_set, face)
        if not link:
            continue
        dim_link = max(len(f) for f in link) - 1
        hom = reduced_homology_dims(link, 0 if char == 0 else char)
        if any(k < dim_link and h for k, h in hom.items()):
            return False
    return True


def _link_faces(face_set, face):
    """link(face) = {g : g disjoint from face, g | face in the complex}."""
    out = []
    for g in face_set:
        if g & face == 0 and (g | face) in face_set:
            out.append(_mask_to_frozenset(g))
    return out


# --- intersections and the instance-level dual ----------------------------------


def intersect_ideals(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection of square-free monomial ideals (pairwise lcm = union)."""
    if a.variables != b.variables:
        raise SquarefreeError("intersection requires a common variable list")
    return MonomialIdeal.from_masks(
        a.variables, {g | h for g in a.generators for h in b.generators})


def dual_of_initial_ideal(inst, cross_check: bool = False) -> MonomialIdeal:
    """Alexander dual of the initial ideal of the candidate basis.

    With ``cross_check`` the dual is recomputed as the intersection of the
    per-family component duals and compared for equality.
    """
    from . import rees

    ring = rees.instance_ring(inst)
    ideal = rees.initial_families(inst, ring)
    dual = alexander_dual(ideal)
    if cross_check:
        names = tuple(str(v) for v in ring.variables)
        acc = None
        for tag in rees.INITIAL_FAMILY_TAGS:
            monos = rees.initial_family_monomials(inst, tag, ring)
            if not monos:
                continue
            comp = alexander_dual(
                MonomialIdeal.from_exponents(names, monos))
            acc = comp if acc is None else intersect_ideals(acc, comp)
        if acc != dual:
            raise SquarefreeError(
                "component-wise dual disagrees with the generic dual")
    return dual
