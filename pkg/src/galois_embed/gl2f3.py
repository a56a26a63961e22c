"""GL2(F3), PGL2(F3) and the isomorphism S4 -> PGL2(F3).

Matrices are 4-tuples (a, b, c, d) for [[a, b], [c, d]] with entries in {0, 1, 2}.
Permutations of {1, 2, 3, 4} are tuples p with p[i-1] the image of i;
products compose right to left, (s*t)(i) = s(t(i)).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import UnrecognizedGroup

Mat2F3 = tuple

IDENTITY = (1, 0, 0, 1)
MINUS_I = (2, 0, 0, 2)

# generator images of the transpositions (1 2), (2 3), (3 4)
GENERATORS = {
    (1, 2): (0, 1, 1, 0),
    (2, 3): (2, 1, 0, 1),
    (3, 4): (2, 0, 0, 1),
}


def mat(rows):
    (a, b), (c, d) = rows
    return (a % 3, b % 3, c % 3, d % 3)


def mul(M, N):
    a, b, c, d = M
    e, f, g, h = N
    return ((a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3)


def det(M):
    return (M[0] * M[3] - M[1] * M[2]) % 3


def neg(M):
    return tuple((-x) % 3 for x in M)


def inverse(M):
    a, b, c, d = M
    di = det(M)  # 1 or 2, its own inverse mod 3
    if di == 0:
        raise ValueError("singular matrix")
    return ((d * di) % 3, (-b * di) % 3, (-c * di) % 3, (a * di) % 3)


def all_gl2():
    return [M for M in product(range(3), repeat=4) if det(M)]


def proj(M):
    """Canonical representative of the class {M, -M} in PGL2(F3)."""
    return min(M, neg(M))


# --------------------------------------------------------------------------
# permutations and Phi
# --------------------------------------------------------------------------

PERM_ID = (1, 2, 3, 4)


def perm_mul(s, t):
    return tuple(s[t[i] - 1] for i in range(4))


def cycle(*pts):
    p = list(PERM_ID)
    for i, a in enumerate(pts):
        p[a - 1] = pts[(i + 1) % len(pts)]
    return tuple(p)


def transposition(i, j):
    return cycle(i, j)


def word_product(word):
    """Permutation given by a word of transpositions, e.g. [(1, 2), (3, 4)]."""
    p = PERM_ID
    for i, j in word:
        p = perm_mul(p, transposition(i, j))
    return p


@lru_cache(maxsize=1)
def _phi_table():
    # breadth-first over words in the three generators; every permutation is
    # reached, and a conflicting image would mean Phi is not well defined
    table = {PERM_ID: IDENTITY}
    words = {PERM_ID: ()}
    frontier = [PERM_ID]
    while frontier:
        nxt = []
        for p in frontier:
            for g, A in GENERATORS.items():
                q = perm_mul(p, transposition(*g))
                M = mul(table[p], A)
                if q in table:
                    if proj(table[q]) != proj(M):
                        raise AssertionError("generator images do not define a homomorphism")
                    continue
                table[q] = M
                words[q] = words[p] + (g,)
                nxt.append(q)
        frontier = nxt
    return table, words


def perm_word(perm):
    """A shortest word in (1 2), (2 3), (3 4) for the permutation."""
    return list(_phi_table()[1][tuple(perm)])


def phi(perm):
    """Phi(perm) as a PGL2(F3) element (canonical representative).

    ``perm`` is a permutation tuple or a word of transpositions.
    """
    if perm and isinstance(perm[0], tuple):
        M = IDENTITY
        for g in perm:
            M = mul(M, GENERATORS[tuple(g)])
        return proj(M)
    return proj(_phi_table()[0][tuple(perm)])


def phi_lift(perm):
    """A matrix in GL2(F3) lying over phi(perm)."""
    return _phi_table()[0][tuple(perm)]


def all_perms():
    return sorted(_phi_table()[0])


# --------------------------------------------------------------------------
# subgroups
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SubgroupRecord:
    elements: frozenset
    order: int
    iso_label: str
    generators: tuple
    projective: bool

    def __contains__(self, M):
        return (proj(M) if self.projective else M) in self.elements


def _closure(gens, projective):
    norm = proj if projective else (lambda M: M)
    start = norm(IDENTITY)
    elems = {start}
    frontier = [start]
    gens = [norm(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = norm(mul(x, g))
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def subgroup(generators, projective=False):
    """Subgroup generated by matrices; with ``projective=True`` it lives in PGL2(F3)."""
    gens = tuple(generators)
    for g in gens:
        if det(g) == 0:
            raise ValueError("generator is not invertible")
    elems = _closure(gens, projective)
    label = _recognize(elems, projective)
    return SubgroupRecord(elems, len(elems), label, gens, projective)


def image_of_perms(perms):
    """Phi(<perms>) as a PGL2(F3) subgroup record."""
    return subgroup([phi(p) for p in perms], projective=True)


def preimage(G):
    """Full preimage of a PGL2(F3) subgroup in GL2(F3)."""
    if not G.projective:
        raise ValueError("preimage expects a subgroup of PGL2(F3)")
    gens = tuple(G.generators) + (MINUS_I,)
    return subgroup(gens)


def project(H):
    return frozenset(proj(M) for M in H.elements)


# --------------------------------------------------------------------------
# recognition
# --------------------------------------------------------------------------

def _order(x, projective):
    e = proj(IDENTITY) if projective else IDENTITY
    k, y = 1, x
    while y != e:
        y = mul(y, x)
        if projective:
            y = proj(y)
        k += 1
    return k


def _recognize(elems, projective):
    n = len(elems)
    orders = {x: _order(x, projective) for x in elems}
    prof = Counter(orders.values())
    norm = proj if projective else (lambda M: M)
    abelian = all(norm(mul(x, y)) == norm(mul(y, x)) for x in elems for y in elems)
    inv = prof[2]
    if n == 1:
        return "C1"
    if abelian:
        if max(prof) == n:
            return f"C{n}"
        if n == 4:
            return "C2xC2"
        if n == 8:
            return "C2xC2xC2" if inv == 7 else "C4xC2"
        if n == 12:
            return "C6xC2"
        raise UnrecognizedGroup(f"abelian group of order {n}")
    if n == 6:
        return "S3"
    if n == 8:
        return "Q8" if inv == 1 else "D4"
    if n == 12:
        if inv == 7:
            return "D6"
        if inv == 3:
            return "A4"
        if inv == 1:
            return "Dic3"
    if n == 16:
        if inv == 1:
            return "Q16"
        if inv == 9:
            return "D8"
        if _is_semidihedral(elems, orders, norm):
            return "SD16"
    if n == 24:
        if inv == 9 and prof[3] == 8:
            return "S4"
        if inv == 1 and prof[3] == 8:
            return "SL2F3"
    if n == 48 and not projective and prof[8] == 12 and inv == 13:
        return "GL2F3"
    raise UnrecognizedGroup(f"order {n}, element orders {dict(sorted(prof.items()))}")


def _is_semidihedral(elems, orders, norm):
    for s in (x for x in elems if orders[x] == 8):
        powers = set()
        y = norm(IDENTITY)
        for _ in range(8):
            powers.add(y)
            y = norm(mul(y, s))
        s3 = norm(mul(mul(s, s), s))
        for r in elems:
            if orders[r] == 2 and r not in powers and norm(mul(mul(r, s), r)) == s3:
                return True
    return False


def iso_type(H):
    return H.iso_label


# --------------------------------------------------------------------------
# split test
# --------------------------------------------------------------------------

def is_split(Gtilde, G):
    """True iff some H <= Gtilde avoids -I and maps onto G.

    Every G_i is generated by two elements, so it suffices to try pairs.
    """
    target = G.elements
    cands = sorted(M for M in Gtilde.elements if M != MINUS_I)
    want = len(target)
    for i, x in enumerate(cands):
        for y in cands[i:]:
            H = _closure((x, y), False)
            if len(H) == want and MINUS_I not in H and frozenset(proj(M) for M in H) == target:
                return True
    return False


def conjugate(H, g):
    gi = inverse(g)
    if H.projective:
        gens = tuple(proj(mul(mul(g, x), gi)) for x in H.generators)
        return subgroup(gens, projective=True)
    return subgroup(tuple(mul(mul(g, x), gi) for x in H.generators))


# --------------------------------------------------------------------------
# the subgroups G_0 ... G_4
# --------------------------------------------------------------------------

SUBGROUP_PERMS = {
    0: [cycle(1, 2)],
    1: [cycle(1, 2), cycle(3, 4)],
    2: [cycle(1, 2, 3), cycle(1, 2)],
    3: [cycle(1, 2, 3, 4), cycle(2, 4)],
    4: [cycle(1, 2), cycle(2, 3), cycle(3, 4)],
}


@lru_cache(maxsize=None)
def G(i):
    return image_of_perms(SUBGROUP_PERMS[i])


@lru_cache(maxsize=None)
def G_tilde(i):
    return preimage(G(i))


def group_table():
    rows = []
    for i in range(5):
        g, gt = G(i), G_tilde(i)
        rows.append({
            "index": i,
            "G_order": g.order,
            "G_label": g.iso_label,
            "G_tilde_order": gt.order,
            "G_tilde_label": gt.iso_label,
            "split": is_split(gt, g),
        })
    return rows
