"""Buchberger Groebner bases for ideals and submodules of free modules.

Provides reduced bases, normal forms with division certificates, Krull
dimension/codimension, ideal and module intersections, standard monomials,
saturation, radical membership, Schreyer syzygies and matrix kernels.

Conventions fixed for reproducible output:
  * S-pairs are processed by minimal lcm total degree, ties broken by the
    lcm exponent vector and then the generator index pair;
  * reduced bases are monic and sorted by decreasing lead term;
  * syzygy and kernel generators are scaled so the first nonzero entry is
    monic.
"""

from __future__ import annotations

import heapq
import itertools
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from rescur import _kernel as K
from rescur.poly import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    Ring,
    RingMismatchError,
)

INFINITE_CODIM = float("inf")


# ---------------------------------------------------------------------------
# module vectors and module orders
# ---------------------------------------------------------------------------

class ModuleVector:
    """Element of a free module S^r, with optional graded twists per slot."""

    __slots__ = ("ring", "entries", "shifts")

    def __init__(self, entries: Sequence[Polynomial], shifts: Sequence[int] | None = None):
        entries = tuple(entries)
        if not entries:
            raise ValueError("module vector needs rank >= 1")
        ring = entries[0].ring
        for p in entries:
            if p.ring != ring:
                raise RingMismatchError("mixed rings in module vector")
        if shifts is None:
            shifts = (0,) * len(entries)
        shifts = tuple(shifts)
        if len(shifts) != len(entries):
            raise ValueError("one shift per entry required")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "shifts", shifts)

    def __setattr__(self, *a):
        raise AttributeError("ModuleVector is immutable")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.entries)

    def terms(self) -> dict:
        out = {}
        for pos, p in enumerate(self.entries):
            for e, c in p.terms.items():
                out[(pos, e)] = c
        return out

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        return ModuleVector([a + b for a, b in zip(self.entries, other.entries)], self.shifts)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return ModuleVector([a - b for a, b in zip(self.entries, other.entries)], self.shifts)

    def __neg__(self) -> "ModuleVector":
        return ModuleVector([-a for a in self.entries], self.shifts)

    def scale(self, c) -> "ModuleVector":
        return ModuleVector([a.scale(c) for a in self.entries], self.shifts)

    def mul_poly(self, p: Polynomial) -> "ModuleVector":
        return ModuleVector([a * p for a in self.entries], self.shifts)

    def graded_degree(self) -> int | None:
        """Degree of a homogeneous vector (entry degree + slot shift); None if mixed."""
        degs = {
            p.total_degree() + s
            for p, s in zip(self.entries, self.shifts)
            if not p.is_zero()
        }
        if not degs:
            return None
        if len(degs) > 1 or any(not p.is_homogeneous() for p in self.entries):
            return None
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.graded_degree() is not None

    def normalize_leading_entry(self) -> "ModuleVector":
        """Scale so the first nonzero entry is monic."""
        for p in self.entries:
            if not p.is_zero():
                inv = self.ring.coeff_div(self.ring.coeff(1), p.lead_coeff())
                return self.scale(inv)
        return self

    def __eq__(self, other):
        return (
            isinstance(other, ModuleVector)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "(" + ", ".join(str(p) for p in self.entries) + ")"


class _Rev:
    """Reverses any total order; lets heapq pop the largest term first."""

    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other):
        return other.key < self.key

    def __eq__(self, other):
        return self.key == other.key


@dataclass(frozen=True)
class ModuleOrder:
    name: str
    key: callable  # (pos, exponents) -> sort key; larger key = larger term


def term_over_position(base: MonomialOrder) -> ModuleOrder:
    return ModuleOrder(f"top-{base.name}", lambda t: (base.key(t[1]), -t[0]))


def position_over_term(base: MonomialOrder) -> ModuleOrder:
    return ModuleOrder(f"pot-{base.name}", lambda t: (-t[0], base.key(t[1])))


def schreyer_order(lead_terms: Sequence[tuple], prev: ModuleOrder) -> ModuleOrder:
    """Order induced on syzygies by the lead terms of a basis (Schreyer).

    x^a e_i > x^b e_j when x^a * lt(g_i) > x^b * lt(g_j) under the previous
    order, ties broken by preferring the smaller index i.
    """
    lts = tuple(lead_terms)

    def key(t):
        pos, e = t
        lpos, lexp = lts[pos]
        return (prev.key((lpos, K.exp_add(e, lexp))), -pos)

    return ModuleOrder("schreyer", key)


# ---------------------------------------------------------------------------
# Groebner bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced, monic Groebner basis (of an ideal or a submodule)."""

    ring: Ring
    generators: tuple
    order: MonomialOrder
    module_order: ModuleOrder | None = None
    rank: int = 1
    reduced: bool = True
    witness: tuple | None = None  # generators expressed in the input generators

    @property
    def is_module(self) -> bool:
        return self.module_order is not None

    def __len__(self):
        return len(self.generators)

    def lead_monomials(self):
        return [g.lead_monomial() for g in self.generators]

    def contains_unit(self) -> bool:
        return (
            not self.is_module
            and len(self.generators) == 1
            and self.generators[0].is_constant()
            and not self.generators[0].is_zero()
        )


@dataclass(frozen=True)
class DivisionRecord:
    """input = sum(quotient_i * basis_i) + remainder, exactly."""

    quotients: tuple
    remainder: object

    def reconstruct(self, basis):
        acc = None
        for q, g in zip(self.quotients, basis):
            piece = g.mul_poly(q) if isinstance(g, ModuleVector) else q * g
            acc = piece if acc is None else acc + piece
        return acc + self.remainder if acc is not None else self.remainder


def _with_order(p: Polynomial, order: MonomialOrder) -> Polynomial:
    if p.ring.order.name == order.name:
        return p
    return Ring(p.ring.names, order, p.ring.p).from_terms(p.terms)


# -- scalar (ideal) engine ---------------------------------------------------

def _reduce_terms(work_terms, basis, ring, want_quotients=False):
    """Fully reduce a term dict against monic basis entries.

    basis: list of (lead_mono, terms_dict).  Returns (remainder_terms,
    quotients) with quotients as term dicts (or None).
    """
    p = ring.p
    heap_key = ring.order.heap_key
    work = dict(work_terms)
    heap = [(heap_key(e), e) for e in work]
    heapq.heapify(heap)
    remainder = {}
    quotients = [{} for _ in basis] if want_quotients else None
    while heap:
        _, m = heapq.heappop(heap)
        c = work.get(m)
        if not c:
            continue
        for gi, (lm, terms) in enumerate(basis):
            if K.exp_divides(lm, m):
                shift = K.exp_sub(m, lm)
                for e in K.sub_scaled(work, c, shift, terms, p):
                    heapq.heappush(heap, (heap_key(e), e))
                if want_quotients:
                    quotients[gi][shift] = quotients[gi].get(shift, 0) + c
                break
        else:
            remainder[m] = c
            del work[m]
    return remainder, quotients


def _spair_key(lcm, i, j):
    return (K.total_deg(lcm), lcm, i, j)


def _buchberger_polys(gens: list[Polynomial], ring: Ring, track: bool):
    basis = []      # (lead_mono, terms) with monic terms
    polys = []      # Polynomial mirrors of basis
    wits = []       # witness rows (tuples of Polynomial) when tracking
    s = len(gens)

    def unit_witness(idx):
        return tuple(ring.one if t == idx else ring.zero for t in range(s))

    def add_element(poly, wit):
        if poly.is_zero():
            return
        lc = poly.lead_coeff()
        poly = poly.monic()
        if track:
            inv = ring.coeff_div(ring.coeff(1), lc)
            wit = tuple(w.scale(inv) for w in wit)
        idx = len(basis)
        basis.append((poly.lead_monomial(), poly.terms))
        polys.append(poly)
        wits.append(wit)
        for k in range(idx):
            lcm = K.exp_lcm(basis[k][0], basis[idx][0])
            heapq.heappush(pairs, (_spair_key(lcm, k, idx), lcm, k, idx))

    pairs: list = []
    for idx, g in enumerate(gens):
        if not g.is_zero():
            add_element(g, unit_witness(idx) if track else None)

    processed = set()
    while pairs:
        _, lcm, i, j = heapq.heappop(pairs)
        processed.add((i, j))
        lmi, lmj = basis[i][0], basis[j][0]
        if K.exp_lcm(lmi, lmj) != lcm:
            continue  # stale pair (an element was replaced conceptually)
        if lcm == K.exp_add(lmi, lmj):
            continue  # coprime lead terms (product criterion)
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not K.exp_divides(basis[k][0], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in processed and b in processed:
                skip = True  # chain criterion
                break
        if skip:
            continue
        si = K.exp_sub(lcm, lmi)
        sj = K.exp_sub(lcm, lmj)
        spoly_terms = K.merge_terms(
            K.mul_terms({si: ring.coeff(1)}, basis[i][1], ring.p),
            K.mul_terms({sj: ring.coeff(1)}, basis[j][1], ring.p),
            -1,
            ring.p,
        )
        rem, quot = _reduce_terms(spoly_terms, basis, ring, want_quotients=track)
        if rem:
            wit = None
            if track:
                wit = tuple(
                    wits[i][t].mul_monomial(si) - wits[j][t].mul_monomial(sj)
                    for t in range(s)
                )
                for gi, q in enumerate(quot):
                    if q:
                        qp = Polynomial(ring, q)
                        wit = tuple(w - qp * wg for w, wg in zip(wit, wits[gi]))
            add_element(Polynomial(ring, rem), wit)

    return polys, wits if track else None


def _interreduce(polys, wits, ring, track):
    key = ring.order.key
    order_idx = sorted(range(len(polys)), key=lambda t: key(polys[t].lead_monomial()), reverse=True)
    kept = []
    for t in order_idx:
        lm = polys[t].lead_monomial()
        if any(K.exp_divides(polys[u].lead_monomial(), lm) for u in kept):
            continue
        kept.append(t)
    # tail-reduce each element against the others
    final, final_wits = [], []
    for t in kept:
        others = [(polys[u].lead_monomial(), polys[u].terms) for u in kept if u != t]
        rem, quot = _reduce_terms(polys[t].terms, others, ring, want_quotients=track)
        poly = Polynomial(ring, rem)
        wit = None
        if track:
            wit = wits[t]
            oi = 0
            for u in kept:
                if u == t:
                    continue
                q = quot[oi]
                oi += 1
                if q:
                    qp = Polynomial(ring, q)
                    wit = tuple(w - qp * wg for w, wg in zip(wit, wits[u]))
        final.append(poly)
        final_wits.append(wit)
    idx = sorted(range(len(final)), key=lambda t: key(final[t].lead_monomial()), reverse=True)
    final = [final[t] for t in idx]
    final_wits = [final_wits[t] for t in idx]
    return final, final_wits


_GB_CACHE: dict = {}
_GB_CACHE_LOCK = threading.Lock()
_GB_CACHE_MAX = 512


def buchberger(gens: Iterable[Polynomial], order: MonomialOrder | None = None, track: bool = False) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    Output is independent of the order the generators are listed in.  With
    track=True each basis element also carries its expression in the input
    generators.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list (pass the zero polynomial for the zero ideal)")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators from different rings")
    if order is not None and order.name != ring.order.name:
        gens = [_with_order(g, order) for g in gens]
        ring = gens[0].ring
    cache_key = None
    if not track:
        cache_key = (ring, tuple(sorted(tuple(sorted(g.terms.items())) for g in gens)))
        with _GB_CACHE_LOCK:
            hit = _GB_CACHE.get(cache_key)
        if hit is not None:
            return hit
    polys, wits = _buchberger_polys(gens, ring, track)
    polys, wits = _interreduce(polys, wits or [None] * len(polys), ring, track)
    gb = GroebnerBasis(
        ring=ring,
        generators=tuple(polys),
        order=ring.order,
        witness=tuple(wits) if track else None,
    )
    if cache_key is not None:
        with _GB_CACHE_LOCK:
            if len(_GB_CACHE) >= _GB_CACHE_MAX:
                _GB_CACHE.clear()
            _GB_CACHE[cache_key] = gb
    return gb


def normal_form(p: Polynomial, gb: GroebnerBasis) -> DivisionRecord:
    """Full division of p by the basis; remainder is 0 iff p is in the ideal."""
    if gb.is_module:
        raise ValueError("use module_normal_form for module bases")
    ring = gb.ring
    p = _with_order(p, ring.order)
    basis = [(g.lead_monomial(), g.terms) for g in gb.generators]
    rem, quot = _reduce_terms(p.terms, basis, ring, want_quotients=True)
    return DivisionRecord(
        quotients=tuple(Polynomial(ring, q) for q in quot),
        remainder=Polynomial(ring, rem),
    )


def in_ideal(p: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(p, gb).remainder.is_zero()


# -- module engine -----------------------------------------------------------

def _vec_reduce(work_terms, basis, ring, morder, want_quotients=False):
    """Module analogue of _reduce_terms; basis entries ((pos, lm), terms)."""
    p = ring.p
    key = morder.key
    work = dict(work_terms)
    heap = [(_Rev(key(t)), t) for t in work]
    heapq.heapify(heap)
    remainder = {}
    quotients = [{} for _ in basis] if want_quotients else None
    while heap:
        _, t = heapq.heappop(heap)
        c = work.get(t)
        if not c:
            continue
        pos, m = t
        for gi, ((lpos, lm), terms) in enumerate(basis):
            if lpos == pos and K.exp_divides(lm, m):
                shift = K.exp_sub(m, lm)
                for nt in K.sub_scaled_vec(work, c, shift, terms, p):
                    heapq.heappush(heap, (_Rev(key(nt)), nt))
                if want_quotients:
                    quotients[gi][shift] = quotients[gi].get(shift, 0) + c
                break
        else:
            remainder[t] = c
            del work[t]
    return remainder, quotients


def _vec_from_terms(ring, rank, terms, shifts=None) -> ModuleVector:
    per_pos = [{} for _ in range(rank)]
    for (pos, e), c in terms.items():
        per_pos[pos][e] = c
    return ModuleVector([ring.from_terms(d) for d in per_pos], shifts)


def _vec_lead(terms, morder):
    return max(terms, key=morder.key)


def module_buchberger(
    gens: Iterable[ModuleVector],
    order: ModuleOrder | str | None = None,
    track: bool = False,
) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule generated by gens.

    `order` may be a ModuleOrder, or one of "top"/"pot" over the ring order
    (default "top", the term-over-position refinement).
    """
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    ring = gens[0].ring
    rank = gens[0].rank
    shifts = gens[0].shifts
    for v in gens:
        if v.ring != ring:
            raise RingMismatchError("generators from different rings")
        if v.rank != rank:
            raise ValueError(f"rank mismatch: {v.rank} vs {rank}")
    if order is None or order == "top":
        morder = term_over_position(ring.order)
    elif order == "pot":
        morder = position_over_term(ring.order)
    elif isinstance(order, ModuleOrder):
        morder = order
    else:
        raise ValueError(f"unknown module order {order!r}")

    s = len(gens)
    basis = []  # ((pos, lm), terms)
    vecs = []
    wits = []

    def unit_witness(idx):
        return tuple(ring.one if t == idx else ring.zero for t in range(s))

    pairs: list = []

    def add_element(vec: ModuleVector, wit):
        if vec.is_zero():
            return
        terms = vec.terms()
        lt = _vec_lead(terms, morder)
        lc = terms[lt]
        inv = ring.coeff_div(ring.coeff(1), lc)
        vec = vec.scale(inv)
        if track:
            wit = tuple(w.scale(inv) for w in wit)
        terms = vec.terms()
        idx = len(basis)
        basis.append((lt, terms))
        vecs.append(vec)
        wits.append(wit)
        for k in range(idx):
            (kp, km), _ = basis[k]
            if kp != lt[0]:
                continue
            lcm = K.exp_lcm(km, lt[1])
            heapq.heappush(pairs, ((K.total_deg(lcm), kp, lcm, k, idx), lcm, k, idx))

    for idx, v in enumerate(gens):
        add_element(v, unit_witness(idx) if track else None)

    processed = set()
    while pairs:
        _, lcm, i, j = heapq.heappop(pairs)
        processed.add((i, j))
        (pi, lmi), _ = basis[i]
        (pj, lmj), _ = basis[j]
        if K.exp_lcm(lmi, lmj) != lcm:
            continue
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            (pk, lmk), _ = basis[k]
            if pk != pi or not K.exp_divides(lmk, lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in processed and b in processed:
                skip = True
                break
        if skip:
            continue
        si = K.exp_sub(lcm, lmi)
        sj = K.exp_sub(lcm, lmj)
        svec = vecs[i].mul_poly(ring.monomial(si)) - vecs[j].mul_poly(ring.monomial(sj))
        rem, quot = _vec_reduce(svec.terms(), basis, ring, morder, want_quotients=track)
        if rem:
            wit = None
            if track:
                wit = tuple(
                    wits[i][t].mul_monomial(si) - wits[j][t].mul_monomial(sj)
                    for t in range(s)
                )
                for gi, q in enumerate(quot):
                    if q:
                        qp = Polynomial(ring, q)
                        wit = tuple(w - qp * wg for w, wg in zip(wit, wits[gi]))
            add_element(_vec_from_terms(ring, rank, rem, shifts), wit)

    # interreduce
    def lead_of(idx):
        return basis[idx][0]

    order_idx = sorted(range(len(vecs)), key=lambda t: morder.key(lead_of(t)), reverse=True)
    kept = []
    for t in order_idx:
        (tp, tm) = lead_of(t)
        if any(lead_of(u)[0] == tp and K.exp_divides(lead_of(u)[1], tm) for u in kept):
            continue
        kept.append(t)
    final, final_wits = [], []
    for t in kept:
        others = [basis[u] for u in kept if u != t]
        rem, quot = _vec_reduce(basis[t][1], others, ring, morder, want_quotients=track)
        vec = _vec_from_terms(ring, rank, rem, shifts)
        wit = None
        if track:
            wit = wits[t]
            oi = 0
            for u in kept:
                if u == t:
                    continue
                q = quot[oi]
                oi += 1
                if q:
                    qp = Polynomial(ring, q)
                    wit = tuple(w - qp * wg for w, wg in zip(wit, wits[u]))
        final.append(vec)
        final_wits.append(wit)
    idx_sorted = sorted(
        range(len(final)),
        key=lambda t: morder.key(_vec_lead(final[t].terms(), morder)),
        reverse=True,
    )
    return GroebnerBasis(
        ring=ring,
        generators=tuple(final[t] for t in idx_sorted),
        order=ring.order,
        module_order=morder,
        rank=rank,
        witness=tuple(final_wits[t] for t in idx_sorted) if track else None,
    )


def module_normal_form(v: ModuleVector, gb: GroebnerBasis) -> DivisionRecord:
    if not gb.is_module:
        raise ValueError("module_normal_form needs a module basis")
    basis = [(_vec_lead(g.terms(), gb.module_order), g.terms()) for g in gb.generators]
    rem, quot = _vec_reduce(v.terms(), basis, gb.ring, gb.module_order, want_quotients=True)
    return DivisionRecord(
        quotients=tuple(Polynomial(gb.ring, q) for q in quot),
        remainder=_vec_from_terms(gb.ring, gb.rank, rem, v.shifts),
    )


def in_module(v: ModuleVector, gb: GroebnerBasis) -> bool:
    return module_normal_form(v, gb).remainder.is_zero()


# ---------------------------------------------------------------------------
# syzygies and kernels
# ---------------------------------------------------------------------------

def schreyer_syzygies(gb: GroebnerBasis) -> list[ModuleVector]:
    """Syzygies of the basis elements, from all same-position S-pair reductions.

    By Schreyer's theorem these generate (indeed form a Groebner basis of,
    under the induced order) the full syzygy module of gb.generators.
    """
    ring = gb.ring
    if gb.is_module:
        items = [( _vec_lead(g.terms(), gb.module_order), g.terms()) for g in gb.generators]
        morder = gb.module_order
    else:
        items = [((0, g.lead_monomial()), {(0, e): c for e, c in g.terms.items()}) for g in gb.generators]
        morder = term_over_position(ring.order)
    t = len(items)
    shifts = []
    graded = True
    for g in gb.generators:
        d = g.graded_degree() if isinstance(g, ModuleVector) else (
            g.total_degree() if g.is_homogeneous() else None
        )
        if d is None:
            graded = False
        shifts.append(d)
    syz_shifts = tuple(shifts) if graded else None
    out = []
    for i in range(t):
        for j in range(i + 1, t):
            (pi, lmi), ti = items[i]
            (pj, lmj), tj = items[j]
            if pi != pj:
                continue
            lcm = K.exp_lcm(lmi, lmj)
            si = K.exp_sub(lcm, lmi)
            sj = K.exp_sub(lcm, lmj)
            sterms = K.merge_terms(
                {(p_, K.exp_add(e, si)): c for (p_, e), c in ti.items()},
                {(p_, K.exp_add(e, sj)): c for (p_, e), c in tj.items()},
                -1,
                ring.p,
            )
            rem, quot = _vec_reduce(sterms, items, ring, morder, want_quotients=True)
            if rem:
                raise ValueError("S-pair does not reduce to zero: input is not a Groebner basis")
            entries = [ring.zero] * t
            entries[i] = entries[i] + ring.monomial(si)
            entries[j] = entries[j] - ring.monomial(sj)
            for gi, q in enumerate(quot):
                if q:
                    entries[gi] = entries[gi] - Polynomial(ring, q)
            vec = ModuleVector(entries, syz_shifts)
            if not vec.is_zero():
                out.append(vec)
    return out


def syzygy_generators(gens) -> list[ModuleVector]:
    """Generators of the syzygy module of the given generators themselves.

    Accepts polynomials (ideal case) or module vectors.  Combines the Schreyer
    syzygies of a tracked Groebner basis with the redundancy relations
    I - A*B, where G = gens*A and gens = G*B.
    """
    gens = list(gens)
    if not gens:
        return []
    scalar = isinstance(gens[0], Polynomial)
    ring = gens[0].ring
    s = len(gens)
    if scalar:
        gb = buchberger(gens, track=True)
        records = [normal_form(g, gb) for g in gens]
    else:
        gb = module_buchberger(gens, track=True)
        records = [module_normal_form(v, gb) for v in gens]
    for r in records:
        if not r.remainder.is_zero():
            raise AssertionError("generator failed to reduce against its own basis")
    t = len(gb.generators)
    A = gb.witness  # A[k][j]: GB element k in terms of gen j
    syz_gb = schreyer_syzygies(gb)
    out = []
    seen = set()

    def push(entries):
        vec = ModuleVector(entries)
        if vec.is_zero():
            return
        vec = vec.normalize_leading_entry()
        if vec not in seen:
            seen.add(vec)
            out.append(vec)

    for z in syz_gb:
        push([
            sum((A[k][j] * z.entries[k] for k in range(t)), ring.zero)
            for j in range(s)
        ])
    # I - A*B columns: B[k][j] = quotient of gen j by GB element k
    for j in range(s):
        col = [ring.one if jj == j else ring.zero for jj in range(s)]
        for k in range(t):
            q = records[j].quotients[k]
            if not q.is_zero():
                for jj in range(s):
                    col[jj] = col[jj] - A[k][jj] * q
        push(col)
    return out


def kernel_of_matrix(f) -> list[ModuleVector]:
    """Generators of {v : f v = 0} inside the rank-(cols of f) free module."""
    cols = [ModuleVector(c) for c in f.columns()]
    if all(c.is_zero() for c in cols):
        ring = f.ring
        return [
            ModuleVector([ring.one if i == j else ring.zero for i in range(f.cols)])
            for j in range(f.cols)
        ]
    return syzygy_generators(cols)


# ---------------------------------------------------------------------------
# dimension, standard monomials, intersections, radicals
# ---------------------------------------------------------------------------

def dimension(gb: GroebnerBasis) -> tuple:
    """(Krull dimension of V(ideal), codimension); dim -1 / codim inf for (1)."""
    if gb.is_module:
        raise ValueError("dimension is defined for ideal bases")
    n = gb.ring.n
    if not gb.generators or all(g.is_zero() for g in gb.generators):
        return n, 0
    if gb.contains_unit():
        return -1, INFINITE_CODIM
    supports = [
        frozenset(i for i, e in enumerate(g.lead_monomial()) if e)
        for g in gb.generators
    ]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            u = set(subset)
            if all(not s <= u for s in supports):
                return size, n - size
    return 0, n  # unreachable: the empty set is always independent for proper ideals


def standard_monomials(gb: GroebnerBasis, d: int) -> list:
    """Monomials of total degree <= d outside the lead-term ideal, ascending."""
    if gb.is_module:
        raise ValueError("standard monomials are defined for ideal bases")
    if gb.contains_unit():
        return []
    n = gb.ring.n
    leads = [g.lead_monomial() for g in gb.generators if not g.is_zero()]
    out = []

    def rec(prefix, remaining, idx):
        if idx == n:
            m = tuple(prefix)
            if not any(K.exp_divides(lm, m) for lm in leads):
                out.append(m)
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, idx + 1)

    rec([], d, 0)
    out.sort(key=lambda m: (K.total_deg(m), gb.ring.order.key(m)))
    return out


def _fresh_name(ring: Ring, base: str) -> str:
    if base not in ring.names:
        return base
    k = 1
    while f"{base}{k}" in ring.names:
        k += 1
    return f"{base}{k}"


def elim_first(base: MonomialOrder = GREVLEX) -> MonomialOrder:
    """Block order eliminating the first variable, refined by `base` on the rest."""
    return MonomialOrder(
        name=f"elim1-{base.name}",
        key=lambda m: (m[0], base.key(m[1:])),
        heap_key=lambda m: (-m[0], base.heap_key(m[1:])),
        graded=False,
    )


def _lift_first(p: Polynomial, big: Ring) -> Polynomial:
    return big.from_terms({(0,) + e: c for e, c in p.terms.items()})


def _drop_first(p: Polynomial, small: Ring) -> Polynomial:
    return small.from_terms({e[1:]: c for e, c in p.terms.items()})


def intersect(I, J) -> GroebnerBasis:
    """Groebner basis of I ∩ J via elimination on t*I + (1-t)*J."""
    gens_i = list(I.generators if isinstance(I, GroebnerBasis) else I)
    gens_j = list(J.generators if isinstance(J, GroebnerBasis) else J)
    ring = gens_i[0].ring
    if gens_j[0].ring != ring:
        raise RingMismatchError("intersection needs one common ring")
    tname = _fresh_name(ring, "t")
    big = Ring((tname,) + ring.names, elim_first(ring.order), ring.p)
    t = big.variable(0)
    one = big.one
    gens = [t * _lift_first(g, big) for g in gens_i]
    gens += [(one - t) * _lift_first(g, big) for g in gens_j]
    gb = buchberger(gens)
    kept = [
        _drop_first(g, ring)
        for g in gb.generators
        if g.lead_monomial()[0] == 0
    ]
    if not kept:
        kept = [ring.zero]
    return buchberger(kept)


def module_intersect(A, B) -> list[ModuleVector]:
    """Generators of the intersection of two submodules of the same free module."""
    a = list(A)
    b = list(B)
    ring = a[0].ring
    rank = a[0].rank
    tname = _fresh_name(ring, "t")
    big = Ring((tname,) + ring.names, elim_first(ring.order), ring.p)
    t = big.variable(0)
    one = big.one

    def lift_vec(v, factor):
        return ModuleVector([factor * _lift_first(p, big) for p in v.entries])

    gens = [lift_vec(v, t) for v in a] + [lift_vec(v, one - t) for v in b]
    gb = module_buchberger(gens)
    out = []
    for g in gb.generators:
        lt = _vec_lead(g.terms(), gb.module_order)
        if lt[1][0] == 0:
            out.append(ModuleVector([_drop_first(p, ring) for p in g.entries]))
    return out


def radical_membership(g: Polynomial, gens) -> bool:
    """True iff g vanishes on V(ideal): 1 in ideal + (1 - y*g) (Rabinowitsch)."""
    gens = list(gens.generators if isinstance(gens, GroebnerBasis) else gens)
    ring = gens[0].ring
    if g.is_zero():
        return True
    yname = _fresh_name(ring, "y")
    big = Ring((yname,) + ring.names, elim_first(ring.order), ring.p)
    y = big.variable(0)
    lifted = [_lift_first(q, big) for q in gens]
    lifted.append(big.one - y * _lift_first(g, big))
    return buchberger(lifted).contains_unit()


def saturate(gens, g: Polynomial) -> GroebnerBasis:
    """Groebner basis of (I : g^infinity), by elimination."""
    gens = list(gens.generators if isinstance(gens, GroebnerBasis) else gens)
    ring = gens[0].ring
    yname = _fresh_name(ring, "y")
    big = Ring((yname,) + ring.names, elim_first(ring.order), ring.p)
    y = big.variable(0)
    lifted = [_lift_first(q, big) for q in gens]
    lifted.append(big.one - y * _lift_first(g, big))
    gb = buchberger(lifted)
    kept = [_drop_first(q, ring) for q in gb.generators if q.lead_monomial()[0] == 0]
    if not kept:
        kept = [ring.zero]
    return buchberger(kept)
