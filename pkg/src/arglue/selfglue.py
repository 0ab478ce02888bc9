"""Self-gluing an algebra along a matched pair of its own abutments.

Identifying a left-abutment tail of an algebra with one of its right-
abutment tails folds the quiver into a (usually cyclic) quotient.  The
finite "windows" of the associated infinite unfolding let us enumerate
the indecomposables of the quotient by pushing down window modules and
deduplicating modulo the deck shift.
"""

from . import arquiver, linalg, replab, verifier
from . import fracture as fx
from .core import (AlgebraError, BoundQuiverPresentation, KupischSeries,
                   Quiver, kupisch_of)
from .gluing import GluingSystemSpec, _tail_arrows, glue_system


class SelfGlueWitness:
    """A fractured pair (W, J) with a compatible sub-pair (P, I)."""

    def __init__(self, W, J, P, I):
        if P.height != I.height:
            raise AlgebraError("witness seam heights differ")
        self.W, self.J, self.P, self.I = W, J, P, I
        self.height = P.height

    def __repr__(self):
        return (f"SelfGlueWitness(P={self.P.tail}, I={self.I.tail}, "
                f"W={self.W.tail}, J={self.J.tail})")


def _sub_left(W):
    """Left sub-abutments of W: the suffix tails, tallest first."""
    return [fx.Abutment("left", W.tail[k], W.tail[k:])
            for k in range(len(W.tail))]


def _sub_right(J):
    """Right sub-abutments of J: the prefix tails, tallest first."""
    return [fx.Abutment("right", J.tail[m - 1], J.tail[:m])
            for m in range(len(J.tail), 0, -1)]


def self_glue_witness(A, fr):
    """First witness making (A, fr) self-gluable, or (None, reasons).

    A witness needs a maximal left abutment W such that every other
    maximal left abutment carries the projective fracture, a maximal
    right abutment J such that every other maximal right one carries the
    injective fracture, and a compatible sub-pair (P <= W, I <= J).
    """
    reasons = []
    lefts = [fr.max_left[a] for a in sorted(fr.max_left)]
    rights = [fr.max_right[a] for a in sorted(fr.max_right)]
    cand_W = [W for W in lefts
              if all(fr.left[V.anchor] == fx.projective_intervals(V.height)
                     for V in lefts if V is not W)]
    cand_J = [J for J in rights
              if all(fr.right[K.anchor] == fx.injective_intervals(K.height)
                     for K in rights if K is not J)]
    if not cand_W:
        reasons.append("more than one maximal left abutment carries a "
                       "non-projective fracture")
    if not cand_J:
        reasons.append("more than one maximal right abutment carries a "
                       "non-injective fracture")
    for W in cand_W:
        for J in cand_J:
            for P in _sub_left(W):
                for I in _sub_right(J):
                    if P.height != I.height:
                        continue
                    ok, why = fx.compatible_pair(A, fr, W, J, P, I)
                    if ok:
                        return SelfGlueWitness(W, J, P, I), []
                    reasons.append(
                        f"P={P.tail}, I={I.tail}: {why}")
    if not reasons:
        reasons.append("no sub-pair of matching height exists")
    return None, reasons


class SelfGlued:
    """The folded presentation with the covering maps onto it.

    ``vertex_map``/``arrow_map`` send the original names to the folded
    ones (many-to-one on the identified tails); ``rank`` orders the
    preimages of a folded vertex so module push-downs assemble block
    matrices consistently.
    """

    def __init__(self, base, witness, presentation,
                 vertex_map, arrow_map, rank):
        self.base = base
        self.witness = witness
        self.presentation = presentation
        self.vertex_map = vertex_map
        self.arrow_map = arrow_map
        self.rank = rank


def _chain_order(A):
    """Vertex order of a linearly oriented chain quiver; None otherwise."""
    q = A.quiver
    if any(len(q.out[v]) > 1 or len(q.inc[v]) > 1 for v in q.vertices):
        return None
    starts = [v for v in q.vertices if not q.inc[v]]
    if len(starts) != 1:
        return None
    order = [starts[0]]
    while q.out[order[-1]]:
        order.append(q.tgt[q.out[order[-1]][0]])
    if len(order) != len(q.vertices):
        return None
    return order


def _tilde_chain(A, witness):
    """Fold a linear chain whose two seam tails may overlap.

    Every vertex at chain position j lands on position j mod m where m
    counts the surviving vertices; relations and the seam-crossing path
    project the same way.
    """
    order = _chain_order(A)
    if order is None:
        raise AlgebraError(
            "seam supports overlap; folding is only supported for "
            "linearly oriented chain quivers in that case")
    h = witness.height
    m = len(order) - h
    if m < 1:
        raise AlgebraError("seam height leaves no vertex to fold onto")
    pos = {v: j for j, v in enumerate(order)}
    chain = _tail_arrows(A, order)             # arrows a_0 .. a_{k-2}
    vmap = {v: order[pos[v] % m] for v in order}
    amap = {a: chain[j % m] for j, a in enumerate(chain)}
    rank = {v: pos[v] // m for v in order}
    vertices = order[:m]
    arrows = [(chain[j], order[j], order[(j + 1) % m]) for j in range(m)]
    relations = [tuple(amap[a] for a in r) for r in A.relations]
    # the path that crosses the seam: last arrow before the identified
    # tail, the tail chain itself, and the first arrow after it
    cross = tuple(chain[j % m] for j in range(m - 1, m + h))
    relations.append(cross)
    pres = BoundQuiverPresentation(Quiver(vertices, arrows), relations)
    return SelfGlued(A, witness, pres, vmap, amap, rank)


def tilde(A, witness):
    """Fold A by identifying the P-tail with the I-tail of the witness."""
    ptail, itail = witness.P.tail, witness.I.tail
    if set(ptail) & set(itail):
        return _tilde_chain(A, witness)
    alpha = _tail_arrows(A, ptail)
    beta = _tail_arrows(A, itail)
    vmap = {p: itail[k] for k, p in enumerate(ptail)}
    rank = {}
    for v in A.quiver.vertices:
        rank[v] = 1 if v in vmap else 0
        vmap.setdefault(v, v)
    amap = {a: beta[k] for k, a in enumerate(alpha)}
    for a, _, _ in A.quiver.arrows:
        amap.setdefault(a, a)
    dropped_v, dropped_a = set(ptail), set(alpha)
    vertices = [v for v in A.quiver.vertices if v not in dropped_v]
    arrows = [(a, vmap[s], vmap[t])
              for a, s, t in A.quiver.arrows if a not in dropped_a]
    relations = [tuple(amap[x] for x in r) for r in A.relations]
    # kill every path crossing the new seam
    entries = [a for a, s, t in A.quiver.arrows
               if t == ptail[0] and a not in dropped_a]
    exits = [a for a, s, t in A.quiver.arrows
             if s == itail[-1] and a not in set(beta)]
    for g_in in entries:
        for g_out in exits:
            relations.append((amap[g_in],) + tuple(beta) + (g_out,))
    pres = BoundQuiverPresentation(Quiver(vertices, arrows), relations)
    return SelfGlued(A, witness, pres, vmap, amap, rank)


# -- module push-downs ---------------------------------------------------

def _assemble(L, pieces_v, pieces_a):
    """Block-assemble a representation of L from keyed pieces.

    ``pieces_v``: folded vertex -> ordered [(key, dim)]; ``pieces_a``:
    folded arrow -> [(tgt_key, src_key, matrix)].
    """
    offs, dims = {}, {}
    for w, parts in pieces_v.items():
        off = 0
        offs[w] = {}
        for key, d in parts:
            offs[w][key] = off
            off += d
        dims[w] = off
    q = L.quiver
    mats = {}
    for a, s, t in q.arrows:
        if not (dims.get(s) and dims.get(t)):
            continue
        m = [[0 * linalg.ONE] * dims[s] for _ in range(dims[t])]
        for tk, sk, block in pieces_a.get(a, []):
            r0, c0 = offs[t][tk], offs[s][sk]
            for i, row in enumerate(block):
                for j, x in enumerate(row):
                    m[r0 + i][c0 + j] = x
        mats[a] = m
    return replab.Representation(
        L, {w: d for w, d in dims.items() if d}, mats, check=True)


def push_down(M, sg):
    """Image of a module of the base algebra under the fold."""
    A, L = sg.base, sg.presentation
    pieces_v = {}
    for v in sorted(M.dim, key=lambda v: (sg.rank[v], v)):
        if M.dim[v]:
            pieces_v.setdefault(sg.vertex_map[v], []).append((v, M.dim[v]))
    pieces_a = {}
    q = A.quiver
    for a, block in M.mats.items():
        s, t = q.src[a], q.tgt[a]
        if M.dim.get(s) and M.dim.get(t):
            pieces_a.setdefault(sg.arrow_map[a], []).append((t, s, block))
    return _assemble(L, pieces_v, pieces_a)


# -- cover windows -------------------------------------------------------

class CoverWindow:
    """2k+1 copies of the base algebra glued in a chain along the seam."""

    def __init__(self, base, witness, k, presentation,
                 period_vertices, period_arrows):
        self.base = base
        self.witness = witness
        self.k = k
        self.presentation = presentation
        self.period_vertices = period_vertices  # name -> (copy, original)
        self.period_arrows = period_arrows


def cover_window(A, witness, k):
    if set(witness.P.tail) & set(witness.I.tail):
        raise AlgebraError("cover windows need disjoint seam supports")
    zs = list(range(-k, k + 1))
    edges = [(z, z + 1, witness.I.anchor, witness.P.anchor) for z in zs[:-1]]
    sysspec = GluingSystemSpec(zs, edges, {z: A for z in zs})
    L, vmaps, amaps = glue_system(sysspec, check_orders=False)
    period_v, period_a = {}, {}
    for z in zs:  # ascending: a seam vertex keeps its lower-copy name
        for orig, cur in vmaps[z].items():
            period_v.setdefault(cur, (z, orig))
        for orig, cur in amaps[z].items():
            period_a.setdefault(cur, (z, orig))
    return CoverWindow(A, witness, k, L, period_v, period_a)


def _window_copies(M, win):
    return {win.period_vertices[v][0] for v, d in M.dim.items() if d}


def _push_down_window(M, win, sg):
    """Push a window module down to the folded algebra."""
    L = sg.presentation
    pieces_v = {}
    for cv in sorted(M.dim, key=lambda cv: win.period_vertices[cv]):
        if M.dim[cv]:
            z, orig = win.period_vertices[cv]
            pieces_v.setdefault(sg.vertex_map[orig], []).append(
                (cv, M.dim[cv]))
    pieces_a = {}
    q = win.presentation.quiver
    for ca, block in M.mats.items():
        s, t = q.src[ca], q.tgt[ca]
        if M.dim.get(s) and M.dim.get(t):
            _, orig = win.period_arrows[ca]
            pieces_a.setdefault(sg.arrow_map[orig], []).append((t, s, block))
    return _assemble(L, pieces_v, pieces_a)


uniserial_modules = replab.uniserial_modules
_uniserial = replab._uniserial


def orbit_indecomposables(A, witness, k_min=2, k_max=6, cap=8192, sg=None):
    """Indecomposables of the fold, enumerated through cover windows.

    Window modules clear of the boundary copies push down to modules of
    the fold; growing the window until two consecutive sizes agree (up
    to isomorphism) certifies that every shift orbit has been seen.
    Nakayama folds are served by the uniserial enumeration directly.
    """
    if sg is None:
        sg = tilde(A, witness)
    try:
        kupisch_of(sg.presentation)
        return uniserial_modules(sg.presentation)
    except AlgebraError:
        pass
    previous = None
    for k in range(k_min, k_max + 1):
        win = cover_window(A, witness, k)
        reps = arquiver.indecomposables(win.presentation, cap=cap)
        index = arquiver._IsoIndex()
        found = []
        for M in reps:
            copies = _window_copies(M, win)
            if min(copies) <= -k or max(copies) >= k:
                continue
            down = _push_down_window(M, win, sg)
            if index.find(down) is None:
                index.add(down, True)
                found.append(down)
        if previous is not None and len(found) == len(previous):
            prev_index = arquiver._IsoIndex()
            for M in previous:
                prev_index.add(M, True)
            if all(prev_index.find(M) is not None for M in found):
                return found
        previous = found
    raise arquiver.EnumerationError(
        f"window growth did not stabilize by k={k_max}")


def tilde_nct(A, witness, modules, n, indecs=None):
    """Push a candidate subcategory down the fold and test it there.

    Returns (report, folded algebra data, pushed module list).
    """
    sg = tilde(A, witness)
    index = arquiver._IsoIndex()
    pushed = []
    for M in modules:
        down = push_down(M, sg)
        if index.find(down) is None:
            index.add(down, True)
            pushed.append(down)
    if indecs is None:
        indecs = orbit_indecomposables(A, witness, sg=sg)
    sub = verifier.Subcategory(sg.presentation, pushed, dedupe=False)
    report = verifier.check_nct(sg.presentation, sub, n, indecs=indecs)
    return report, sg, pushed


# -- simultaneous gluing -------------------------------------------------

def simultaneous_glue(A, B, pairs, mode="parallel"):
    """Glue A and B along several abutment pairs at once.

    Each pair (P, I) matches a left-abutment tail with a right-abutment
    tail; in ``parallel`` mode every P lives in A and every I in B, in
    ``antiparallel`` mode seams of both orientations must occur (P in B
    paired with I in A runs the other way).  B-side names win.  Returns
    the same journal structure as :func:`arglue.gluing.glue`.
    """
    from .gluing import GluedAlgebra, _fresh
    if mode not in ("parallel", "antiparallel"):
        raise AlgebraError("mode must be 'parallel' or 'antiparallel'")
    la, ra = fx.abutments(A, "left"), fx.abutments(A, "right")
    lb, rb = fx.abutments(B, "left"), fx.abutments(B, "right")
    seams = []   # (a_tail, b_tail, direction) with direction 'AB' | 'BA'
    for P, I in pairs:
        if P.side != "left" or I.side != "right":
            raise AlgebraError("each pair needs a left and a right abutment")
        if P.height != I.height:
            raise AlgebraError("paired abutments have different heights")
        if any(ab == P for ab in la) and any(ab == I for ab in rb):
            seams.append((P.tail, I.tail, "AB"))
        elif any(ab == P for ab in lb) and any(ab == I for ab in ra):
            seams.append((I.tail, P.tail, "BA"))
        else:
            raise AlgebraError(
                "pair is neither (left of A, right of B) nor "
                "(left of B, right of A)")
    dirs = {d for _, _, d in seams}
    if mode == "parallel" and dirs != {"AB"}:
        raise AlgebraError("parallel mode needs every seam to run A -> B")
    if mode == "antiparallel" and dirs != {"AB", "BA"}:
        raise AlgebraError("antiparallel mode needs seams in both directions")
    a_tails = [t for t, _, _ in seams]
    b_tails = [t for _, t, _ in seams]
    if not fx.independent([fx.Abutment("left", t[0], t) for t in a_tails]):
        raise AlgebraError("seam tails in the first algebra overlap")
    if not fx.independent([fx.Abutment("left", t[0], t) for t in b_tails]):
        raise AlgebraError("seam tails in the second algebra overlap")

    vmapB = {v: v for v in B.quiver.vertices}
    amapB = {a: a for a, _, _ in B.quiver.arrows}
    vmapA, amapA = {}, {}
    seam_arrows = []  # (a_chain, b_chain, direction)
    for a_tail, b_tail, d in seams:
        a_chain = _tail_arrows(A, a_tail)
        b_chain = _tail_arrows(B, b_tail)
        seam_arrows.append((a_chain, b_chain, d))
        for av, bv in zip(a_tail, b_tail):
            vmapA[av] = bv
        for aa, ba in zip(a_chain, b_chain):
            amapA[aa] = ba
    taken_v = set(B.quiver.vertices)
    for v in A.quiver.vertices:
        if v not in vmapA:
            name = _fresh(v, taken_v, "@A")
            vmapA[v] = name
            taken_v.add(name)
    taken_a = set(amapB)
    for a, _, _ in A.quiver.arrows:
        if a not in amapA:
            name = _fresh(a, taken_a, "@A")
            amapA[a] = name
            taken_a.add(name)

    drop_v = {v for t in a_tails for v in t}
    drop_a = {a for ch, _, _ in seam_arrows for a in ch}
    vertices = list(B.quiver.vertices) + [
        vmapA[v] for v in A.quiver.vertices if v not in drop_v]
    arrows = list(B.quiver.arrows) + [
        (amapA[a], vmapA[s], vmapA[t])
        for a, s, t in A.quiver.arrows if a not in drop_a]
    relations = [tuple(r) for r in B.relations]
    relations += [tuple(amapA[a] for a in r) for r in A.relations]
    for (a_tail, b_tail, d), (a_chain, b_chain, _) in zip(seams, seam_arrows):
        if d == "AB":
            entries = [amapA[a] for a, s, t in A.quiver.arrows
                       if t == a_tail[0] and a not in drop_a]
            exits = [a for a, s, t in B.quiver.arrows
                     if s == b_tail[-1] and a not in set(b_chain)]
        else:
            entries = [a for a, s, t in B.quiver.arrows
                       if t == b_tail[0] and a not in set(b_chain)]
            exits = [amapA[a] for a, s, t in A.quiver.arrows
                     if s == a_tail[-1] and a not in drop_a]
        for g_in in entries:
            for g_out in exits:
                relations.append((g_in,) + tuple(b_chain) + (g_out,))
    pres = BoundQuiverPresentation(Quiver(vertices, arrows), relations)
    return GluedAlgebra(pres, vmapA, vmapB, amapA, amapB, spec=None)
