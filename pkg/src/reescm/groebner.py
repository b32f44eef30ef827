"""Multivariate division, Buchberger's algorithm, elimination.

All computations are exact.  Over QQ every intermediate polynomial is kept
primitive (integer coefficients, positive lead, content 1), so returned basis
elements and remainders are canonical up to that normalization.  Resource use
is metered: exceeding the pair/size budget raises BudgetExceeded rather than
silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ring import PolyRing, Polynomial, Variable


class BudgetExceeded(Exception):
    """A Groebner run hit its configured resource cap."""


@dataclass
class Budget:
    max_pairs: int = 2_000_000
    max_terms: int = 5_000_000  # per-polynomial term cap during reduction

    def __post_init__(self):
        if self.max_pairs < 0 or self.max_terms < 0:
            raise ValueError("budget must be non-negative")


@dataclass
class RunLog:
    """Machine-readable trace of a Buchberger run."""

    pairs_processed: int = 0
    zero_reductions: int = 0
    pairs_pruned: int = 0
    basis_sizes: list = field(default_factory=list)

    def as_dict(self):
        return {
            "pairs_processed": self.pairs_processed,
            "zero_reductions": self.zero_reductions,
            "pairs_pruned": self.pairs_pruned,
            "basis_sizes": list(self.basis_sizes),
        }


def reduce_poly(f: Polynomial, G: list[Polynomial], budget: Budget | None = None) -> Polynomial:
    """Normal form of f modulo G (remainder of multivariate division).

    The remainder has no term divisible by any leading monomial of G and is
    congruent to f modulo (G) up to the canonical unit normalization.
    """
    if f.is_zero():
        return f
    ring = f.ring
    fld = ring.field
    divides = ring.mono_divides
    mono_div = ring.mono_div
    budget = budget or Budget()
    gs = [(g.lm, g) for g in G if not g.is_zero()]
    work = f
    tail: list = []  # finished remainder terms, decreasing
    while not work.is_zero():
        if len(work.terms) + len(tail) > budget.max_terms:
            raise BudgetExceeded("polynomial size cap exceeded during reduction")
        lm, lc = work.terms[0]
        for glm, g in gs:
            if divides(glm, lm):
                q = mono_div(lm, glm)
                c = fld.mul(lc, fld.inv(g.lc))
                work = work - g.mul_term(c, q)
                break
        else:
            tail.append((lm, lc))
            work = Polynomial(ring, work.terms[1:])
    return Polynomial(ring, tuple(tail)).normalized()


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S(f,g) = (lcm/lt f)*f - (lcm/lt g)*g, normalized."""
    if f.is_zero() or g.is_zero():
        raise ValueError("s_polynomial of zero polynomial")
    ring = f.ring
    fld = ring.field
    lcm = ring.mono_lcm(f.lm, g.lm)
    a = f.mul_term(fld.inv(f.lc), ring.mono_div(lcm, f.lm))
    b = g.mul_term(fld.inv(g.lc), ring.mono_div(lcm, g.lm))
    return (a - b).normalized()


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def buchberger(
    generators: list[Polynomial],
    budget: Budget | None = None,
    log: RunLog | None = None,
) -> list[Polynomial]:
    """Reduced Groebner basis of (generators) under the ring's order.

    Normal selection strategy (smallest lcm degree first) with the coprime
    and chain criteria.  Raises BudgetExceeded when the pair budget runs out.
    """
    budget = budget or Budget()
    log = log if log is not None else RunLog()
    G: list[Polynomial] = []
    for g in generators:
        if not g.is_zero():
            G.append(g.normalized())
    if not G:
        return []
    ring = G[0].ring
    lcm = ring.mono_lcm
    divides = ring.mono_divides

    def coprime(a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    pairs = {(i, j) for i in range(len(G)) for j in range(i)}

    def pair_key(p):
        i, j = p
        l = lcm(G[i].lm, G[j].lm)
        return (sum(l), l)

    while pairs:
        best = min(pairs, key=pair_key)
        pairs.discard(best)
        i, j = best
        fi, fj = G[i], G[j]
        l = lcm(fi.lm, fj.lm)
        if coprime(fi.lm, fj.lm):
            log.pairs_pruned += 1
            continue
        # chain criterion: some k with lt(k) | lcm and both other pairs done
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if divides(G[k].lm, l):
                a = (max(i, k), min(i, k))
                b = (max(j, k), min(j, k))
                if a not in pairs and b not in pairs:
                    skip = True
                    break
        if skip:
            log.pairs_pruned += 1
            continue
        if log.pairs_processed >= budget.max_pairs:
            raise BudgetExceeded(
                f"pair budget {budget.max_pairs} exceeded (basis size {len(G)})"
            )
        log.pairs_processed += 1
        r = reduce_poly(s_polynomial(fi, fj), G, budget)
        if r.is_zero():
            log.zero_reductions += 1
            continue
        G.append(r)
        t = len(G) - 1
        pairs.update((t, k) for k in range(t))
        log.basis_sizes.append(len(G))
    return autoreduce(G)


def autoreduce(G: list[Polynomial]) -> list[Polynomial]:
    """Minimal reduced basis: prune divisible leads, reduce all tails."""
    G = [g.normalized() for g in G if not g.is_zero()]
    if not G:
        return []
    ring = G[0].ring
    divides = ring.mono_divides
    # minimalize leading terms
    G.sort(key=lambda g: g.lm)
    keep: list[Polynomial] = []
    for g in G:
        if not any(divides(h.lm, g.lm) for h in keep):
            keep.append(g)
    # tail-reduce
    out = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1 :]
        out.append(reduce_poly(g, others))
    out.sort(key=lambda g: g.lm, reverse=True)
    return out


def is_groebner_basis(G: list[Polynomial], budget: Budget | None = None):
    """Buchberger criterion check.

    Returns (ok, certificate); the certificate lists every failing pair as
    (i, j, nonzero remainder).
    """
    G = [g for g in G if not g.is_zero()]
    failures = []
    if not G:
        return True, failures
    ring = G[0].ring
    for i in range(len(G)):
        for j in range(i):
            if all(a == 0 or b == 0 for a, b in zip(G[i].lm, G[j].lm)):
                continue  # coprime leads always reduce to zero
            r = reduce_poly(s_polynomial(G[i], G[j]), G, budget)
            if not r.is_zero():
                failures.append((i, j, r))
    return not failures, failures


def minimal_monomials(monos: list[tuple], ring: PolyRing) -> list[tuple]:
    """Inclusion-minimal elements under divisibility, sorted decreasing."""
    uniq = sorted(set(monos), key=lambda m: (sum(m), m))
    divides = ring.mono_divides
    out: list[tuple] = []
    for m in uniq:
        if not any(divides(k, m) for k in out):
            out.append(m)
    out.sort(reverse=True)
    return out


def initial_ideal(G: list[Polynomial], check: bool = False) -> list[tuple]:
    """Minimal generators of the leading-term ideal of a Groebner basis G."""
    G = [g for g in G if not g.is_zero()]
    if not G:
        return []
    if check:
        ok, cert = is_groebner_basis(G)
        if not ok:
            raise ValueError(f"input is not a Groebner basis ({len(cert)} bad pairs)")
    return minimal_monomials([g.lm for g in G], G[0].ring)


def eliminate(
    ring: PolyRing,
    generators: list[Polynomial],
    drop: list[Variable],
    budget: Budget | None = None,
    log: RunLog | None = None,
) -> tuple[PolyRing, list[Polynomial]]:
    """Generators of (generators) ∩ k[vars \\ drop].

    Computes a Groebner basis under the block elimination order (dropped
    variables first, ring order below) and keeps the drop-free elements,
    mapped into the smaller ring.
    """
    drop_set = set(drop)
    for v in drop_set:
        if v not in ring.index:
            raise ValueError(f"{v} not in ring")
    big_vars = [v for v in ring.variables if v in drop_set] + [
        v for v in ring.variables if v not in drop_set
    ]
    big = PolyRing(big_vars, ring.field)
    remap = [big.index[v] for v in ring.variables]

    def to_big(p: Polynomial) -> Polynomial:
        terms = []
        for m, c in p.terms:
            e = [0] * big.nvars
            for i, x in enumerate(m):
                e[remap[i]] = x
            terms.append((tuple(e), c))
        return big.from_terms(terms)

    gb = buchberger([to_big(g) for g in generators], budget, log)
    small = PolyRing([v for v in ring.variables if v not in drop_set], ring.field)
    ndrop = len(drop_set)
    out = []
    for g in gb:
        if all(m[:ndrop] == (0,) * ndrop for m, _ in g.terms):
            out.append(
                small.from_terms([(m[ndrop:], c) for m, c in g.terms])
            )
    return small, out


def ideal_membership(
    f: Polynomial, gb: list[Polynomial], budget: Budget | None = None
) -> bool:
    """True iff f reduces to zero against the Groebner basis gb."""
    return reduce_poly(f, gb, budget).is_zero()
