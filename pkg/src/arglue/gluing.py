"""Gluing two algebras along matched abutments, amalgamated AR quivers,
glued fracturings, and gluing systems over finite directed trees."""

from . import fracture as fx
from . import replab, arquiver
from .core import AlgebraError, BoundQuiverPresentation, Quiver


class GluingSpec:
    """Glue a left abutment P of A onto a right abutment I of B."""

    def __init__(self, A, P, B, I):
        if P.side != "left" or I.side != "right":
            raise AlgebraError("need a left abutment of A and a right one of B")
        if P.height != I.height:
            raise AlgebraError(
                f"height mismatch: {P.height} vs {I.height}")
        if not any(ab == P for ab in fx.abutments(A, "left")):
            raise AlgebraError(f"{P} is not an abutment of the first algebra")
        if not any(ab == I for ab in fx.abutments(B, "right")):
            raise AlgebraError(f"{I} is not an abutment of the second algebra")
        self.A, self.P, self.B, self.I = A, P, B, I


class GluedAlgebra:
    def __init__(self, presentation, vertex_map_A, vertex_map_B,
                 arrow_map_A, arrow_map_B, spec=None):
        self.presentation = presentation
        self.vertex_map_A = vertex_map_A
        self.vertex_map_B = vertex_map_B
        self.arrow_map_A = arrow_map_A
        self.arrow_map_B = arrow_map_B
        self.spec = spec


def _fresh(name, taken, suffix):
    candidate = name
    while candidate in taken:
        candidate = candidate + suffix
    return candidate


def _tail_arrows(A, tail):
    out = []
    for s, t in zip(tail, tail[1:]):
        found = [a for a in A.quiver.out[s] if A.quiver.tgt[a] == t]
        if len(found) != 1:
            raise AlgebraError("abutment tail is not a simple chain")
        out.append(found[0])
    return out


def glue(spec):
    """The glued presentation; B-side names win on the identified tail."""
    A, P, B, I = spec.A, spec.P, spec.B, spec.I
    h = P.height
    ptail, itail = P.tail, I.tail
    alpha = _tail_arrows(A, ptail)
    beta = _tail_arrows(B, itail)

    vmapB = {v: v for v in B.quiver.vertices}
    amapB = {a: a for a, _, _ in B.quiver.arrows}
    vmapA = {}
    taken_v = set(B.quiver.vertices)
    for k, p in enumerate(ptail):
        vmapA[p] = itail[k]
    for v in A.quiver.vertices:
        if v in vmapA:
            continue
        name = _fresh(v, taken_v, "@A")
        vmapA[v] = name
        taken_v.add(name)
    amapA = {}
    taken_a = set(amapB)
    for k, a in enumerate(alpha):
        amapA[a] = beta[k]
    for a, _, _ in A.quiver.arrows:
        if a in amapA:
            continue
        name = _fresh(a, taken_a, "@A")
        amapA[a] = name
        taken_a.add(name)

    vertices = list(B.quiver.vertices) + [
        vmapA[v] for v in A.quiver.vertices if v not in set(ptail)]
    arrows = list(B.quiver.arrows) + [
        (amapA[a], vmapA[s], vmapA[t])
        for a, s, t in A.quiver.arrows if a not in set(alpha)]
    relations = [tuple(r) for r in B.relations]
    relations += [tuple(amapA[a] for a in r) for r in A.relations]
    # kill every path crossing from the A-only region to the B-only region
    tail_path = tuple(beta)
    entries = [a for a, s, t in A.quiver.arrows
               if t == ptail[0] and a not in set(alpha)]
    exits = [a for a, s, t in B.quiver.arrows
             if s == itail[-1] and a not in set(beta)]
    for g_in in entries:
        for g_out in exits:
            relations.append((amapA[g_in],) + tail_path + (g_out,))
    pres = BoundQuiverPresentation(Quiver(vertices, arrows), relations)
    return GluedAlgebra(pres, vmapA, vmapB, amapA, amapB, spec)


def push_forward(M, glued, side):
    """Zero-extension of a module along the gluing (side 'A' or 'B')."""
    vmap = glued.vertex_map_A if side == "A" else glued.vertex_map_B
    amap = glued.arrow_map_A if side == "A" else glued.arrow_map_B
    L = glued.presentation
    dims = {}
    for v, d in M.dim.items():
        if d:
            dims[vmap[v]] = d
    mats = {}
    for a, m in M.mats.items():
        mats[amap[a]] = m
    return replab.Representation(L, dims, mats, check=False)


# -- AR amalgamation ----------------------------------------------------

def glue_ar(arA, arB, glued):
    """Amalgamated sum of the two AR quivers over the foundation triangle."""
    spec = glued.spec
    L = glued.presentation
    fA = fx.foundation(spec.A, spec.P, arA)   # (a,b) -> node id in arA
    fB = fx.foundation(spec.B, spec.I, arB)
    ident = {fA[k]: fB[k] for k in fA}        # arA id -> arB id
    # new node list: all of B, then A nodes not identified
    reps = []
    origin = {}
    for node in arB.nodes:
        origin[("B", node.id)] = len(reps)
        reps.append(push_forward(node.rep, glued, "B"))
    for node in arA.nodes:
        if node.id in ident:
            origin[("A", node.id)] = origin[("B", ident[node.id])]
        else:
            origin[("A", node.id)] = len(reps)
            reps.append(push_forward(node.rep, glued, "A"))
    expected = arA.node_count() + arB.node_count() - len(fA)
    if len(reps) != expected:
        raise AlgebraError("foundation identification lost nodes")
    seen = {}
    nodes = []
    for rep in reps:
        dv = rep.dim_vector()
        k = seen.get(dv, 0)
        seen[dv] = k + 1
        dvs = ",".join(str(d) for d in dv)
        nodes.append(arquiver.ARNode(f"({dvs})@{k}", rep))
    arrows = {}
    for src_ar, tag in ((arB, "B"), (arA, "A")):
        for (x, y), mult in src_ar.arrows.items():
            key = (nodes[origin[(tag, x)]].id, nodes[origin[(tag, y)]].id)
            if key in arrows and arrows[key] != mult:
                raise AlgebraError("amalgamated arrow multiplicities clash")
            arrows[key] = mult
    tau = {}
    for src_ar, tag in ((arB, "B"), (arA, "A")):
        for x, y in src_ar.tau.items():
            key = nodes[origin[(tag, x)]].id
            val = nodes[origin[(tag, y)]].id
            if key in tau and tau[key] != val:
                raise AlgebraError("amalgamated tau maps clash")
            tau[key] = val
    # recompute projectivity/injectivity over the glued algebra
    index = arquiver._IsoIndex()
    for i, rep in enumerate(reps):
        index.add(rep, i)
    for v in L.quiver.vertices:
        i = index.find(replab.projective(L, v))
        if i is not None:
            nodes[i].is_projective = True
        i = index.find(replab.injective(L, v))
        if i is not None:
            nodes[i].is_injective = True
    return arquiver.ARData(L, nodes, arrows, tau)


def ar_isomorphic(ar1, ar2):
    """Decorated-quiver isomorphism via representation matching."""
    if ar1.node_count() != ar2.node_count():
        return False
    index = arquiver._IsoIndex()
    for i, node in enumerate(ar2.nodes):
        index.add(node.rep, node.id)
    match = {}
    for node in ar1.nodes:
        other = index.find(node.rep)
        if other is None or other in match.values():
            return False
        match[node.id] = other
    a1 = {(match[x], match[y]): m for (x, y), m in ar1.arrows.items()}
    a2 = dict(ar2.arrows)
    if a1 != a2:
        return False
    t1 = {match[x]: match[y] for x, y in ar1.tau.items()}
    return t1 == ar2.tau


# -- glued fracturings ---------------------------------------------------

def _transport_fracture(L, ab, glued, frA, frB):
    """Fracture for an abutment of the glued algebra, pulled back."""
    invB = {w: v for v, w in glued.vertex_map_B.items()}
    invA = {w: v for v, w in glued.vertex_map_A.items()}
    for inv, alg, fr in ((invB, glued.spec.B, frB), (invA, glued.spec.A, frA)):
        if not all(w in inv for w in ab.tail):
            continue
        tail = [inv[w] for w in ab.tail]
        source = fr.left if ab.side == "left" else fr.right
        maxima = fr.max_left if ab.side == "left" else fr.max_right
        candidate = fx.Abutment(ab.side, tail[0] if ab.side == "left"
                                else tail[-1], tail)
        for anchor, W in maxima.items():
            if fx.abutment_leq(candidate, W):
                try:
                    fx._tail_position(candidate, W)
                except AlgebraError:
                    continue
                return fx.restrict_fracture(source[anchor], candidate, W)
    raise AlgebraError(
        f"cannot transport a fracture onto glued abutment {ab}")


def glue_fracturings(frA, frB, glued):
    """Fracturing of the glued algebra (B-side data wins on the seam)."""
    spec = glued.spec
    WA = next((W for W in frA.max_left.values()
               if fx.abutment_leq(spec.P, W)), None)
    JB = next((J for J in frB.max_right.values()
               if fx.abutment_leq(spec.I, J)), None)
    if WA is None or JB is None:
        raise AlgebraError("abutments of the gluing are not under maximal ones")
    TW = frA.left[WA.anchor]
    TJ = frB.right[JB.anchor]
    if not fx.nonprojective_part_in_sub_triangle(TW, spec.P, WA):
        raise AlgebraError(
            "compatibility fails: nonprojective part of the left fracture "
            "does not lie in the sub-triangle of P")
    if not fx.noninjective_part_in_sub_triangle(TJ, spec.I, JB):
        raise AlgebraError(
            "compatibility fails: noninjective part of the right fracture "
            "does not lie in the sub-triangle of I")
    TP = fx.restrict_fracture(TW, spec.P, WA)
    TI = fx.restrict_fracture(TJ, spec.I, JB)
    if TP != TI:
        raise AlgebraError(
            f"compatibility fails: restricted fractures differ ({TP} vs {TI})")
    L = glued.presentation
    left = {}
    for ab in fx.abutments(L, "left"):
        if ab.maximal:
            left[ab.anchor] = _transport_fracture(L, ab, glued, frA, frB)
    right = {}
    for ab in fx.abutments(L, "right"):
        if ab.maximal:
            right[ab.anchor] = _transport_fracture(L, ab, glued, frA, frB)
    return fx.Fracturing(L, left, right)


# -- gluing systems over finite directed trees ---------------------------

class GluingSystemSpec:
    """Finite directed tree with algebras on vertices and abutment pairs
    (I_e in the source algebra, P_e in the target algebra) on arrows."""

    def __init__(self, tree_vertices, tree_arrows, algebras,
                 fracturings=None, subcategories=None):
        self.tree_vertices = list(tree_vertices)
        self.tree_arrows = list(tree_arrows)  # (u, v, I_anchor, P_anchor)
        self.algebras = dict(algebras)
        self.fracturings = dict(fracturings or {})
        self.subcategories = dict(subcategories or {})
        self._validate()

    def _validate(self):
        tv = set(self.tree_vertices)
        if set(self.algebras) != tv:
            raise AlgebraError("algebras must decorate every tree vertex")
        seen_pairs = set()
        adj = {v: set() for v in tv}
        for u, v, _, _ in self.tree_arrows:
            if u not in tv or v not in tv:
                raise AlgebraError("tree arrow with unknown endpoint")
            key = frozenset((u, v))
            if u == v or key in seen_pairs:
                raise AlgebraError("tree has a loop or multi-arrow")
            seen_pairs.add(key)
            adj[u].add(v)
            adj[v].add(u)
        if len(self.tree_arrows) != len(tv) - 1:
            raise AlgebraError("edge count wrong for a tree")
        if tv:
            stack = [self.tree_vertices[0]]
            reached = set()
            while stack:
                x = stack.pop()
                if x in reached:
                    continue
                reached.add(x)
                stack.extend(adj[x])
            if reached != tv:
                raise AlgebraError("tree is not connected")
        self.edge_data = {}
        for u, v, i_anchor, p_anchor in self.tree_arrows:
            I = self._abutment(u, i_anchor, "right")
            P = self._abutment(v, p_anchor, "left")
            if I.height != P.height:
                raise AlgebraError(
                    f"edge {u}->{v} pairs abutments of different heights")
            self.edge_data[(u, v)] = (I, P)
        for w in tv:
            incoming = [self.edge_data[(u, v)][1]
                        for u, v, _, _ in self.tree_arrows if v == w]
            outgoing = [self.edge_data[(u, v)][0]
                        for u, v, _, _ in self.tree_arrows if u == w]
            if incoming and not fx.independent(incoming):
                raise AlgebraError(
                    f"incoming abutments at {w} are not independent")
            if outgoing and not fx.independent(outgoing):
                raise AlgebraError(
                    f"outgoing abutments at {w} are not independent")

    def _abutment(self, tv, anchor, side):
        for ab in fx.abutments(self.algebras[tv], side):
            if ab.anchor == anchor:
                return ab
        raise AlgebraError(f"no {side} abutment anchored at {anchor} "
                           f"in the algebra at tree vertex {tv}")


class _Component:
    def __init__(self, tv, algebra, prefix):
        vmap = {v: f"{prefix}{v}" for v in algebra.quiver.vertices}
        amap = {a: f"{prefix}{a}" for a, _, _ in algebra.quiver.arrows}
        if prefix:
            from .core import rename_presentation
            algebra = rename_presentation(algebra, vmap, amap)
        self.members = {tv}
        self.algebra = algebra
        self.vmaps = {tv: vmap}
        self.amaps = {tv: amap}


def _fold(sys, edges, prefix_fn):
    comps = {tv: _Component(tv, sys.algebras[tv], prefix_fn(tv))
             for tv in sys.tree_vertices}
    for u, v, i_anchor, p_anchor in edges:
        cu, cv = comps[u], comps[v]
        ia = cu.vmaps[u][i_anchor]
        pa = cv.vmaps[v][p_anchor]
        I = next(ab for ab in fx.abutments(cu.algebra, "right")
                 if ab.anchor == ia)
        P = next(ab for ab in fx.abutments(cv.algebra, "left")
                 if ab.anchor == pa)
        glued = glue(GluingSpec(cv.algebra, P, cu.algebra, I))
        merged = _Component.__new__(_Component)
        merged.members = cu.members | cv.members
        merged.algebra = glued.presentation
        merged.vmaps = {}
        merged.amaps = {}
        for tv in cu.members:
            merged.vmaps[tv] = {orig: glued.vertex_map_B[cur]
                                for orig, cur in cu.vmaps[tv].items()}
            merged.amaps[tv] = {orig: glued.arrow_map_B[cur]
                                for orig, cur in cu.amaps[tv].items()}
        for tv in cv.members:
            merged.vmaps[tv] = {orig: glued.vertex_map_A[cur]
                                for orig, cur in cv.vmaps[tv].items()}
            merged.amaps[tv] = {orig: glued.arrow_map_A[cur]
                                for orig, cur in cv.amaps[tv].items()}
        for tv in merged.members:
            comps[tv] = merged
    final = comps[sys.tree_vertices[0]]
    if final.members != set(sys.tree_vertices):
        raise AlgebraError("fold did not connect the whole tree (bug)")
    return final


def glue_system(sys, check_orders=True):
    """Fold the gluings of the tree; asserts order-independence on small trees.

    Returns (presentation, vmaps, amaps) where the maps take (tree vertex,
    original name) to the final name.
    """
    multi = len(sys.tree_vertices) > 1

    def prefix(tv):
        return f"{tv}:" if multi else ""

    edges = sorted(sys.tree_arrows)
    result = _fold(sys, edges, prefix)
    if check_orders and 1 < len(edges) <= 8:
        other = _fold(sys, list(reversed(edges)), prefix)
        rename = {}
        for tv in sys.tree_vertices:
            for orig, cur in other.vmaps[tv].items():
                rename[cur] = result.vmaps[tv][orig]
        arename = {}
        for tv in sys.tree_vertices:
            for orig, cur in other.amaps[tv].items():
                arename[cur] = result.amaps[tv][orig]
        from .core import rename_presentation
        relabeled = rename_presentation(other.algebra, rename, arename)
        if relabeled != result.algebra:
            raise AlgebraError(
                "gluing fold is order-dependent (violates the tree identity)")
    return result.algebra, result.vmaps, result.amaps


def push_forward_system(M, tv, L, vmaps, amaps):
    """Zero-extension of a module at tree vertex tv into the glued algebra."""
    dims = {}
    for v, d in M.dim.items():
        if d:
            dims[vmaps[tv][v]] = d
    mats = {amaps[tv][a]: m for a, m in M.mats.items()}
    return replab.Representation(L, dims, mats, check=False)


def glue_fractured_system(sys, n, candidates=None):
    """Glue a fully fracturing-decorated system; returns
    (presentation, maps, candidate module list, complete flag)."""
    from . import verifier
    for tv in sys.tree_vertices:
        if tv not in sys.fracturings:
            raise AlgebraError(f"tree vertex {tv} lacks a fracturing")
    # per-edge compatibility
    for u, v, _, _ in sys.tree_arrows:
        I, P = sys.edge_data[(u, v)]
        frB, frA = sys.fracturings[u], sys.fracturings[v]
        J = next((J for J in frB.max_right.values()
                  if fx.abutment_leq(I, J)), None)
        W = next((W for W in frA.max_left.values()
                  if fx.abutment_leq(P, W)), None)
        if J is None or W is None:
            raise AlgebraError(f"edge {u}->{v}: abutment not under a maximal one")
        if not fx.nonprojective_part_in_sub_triangle(frA.left[W.anchor], P, W):
            raise AlgebraError(f"edge {u}->{v}: left fracture leaves F_P")
        if not fx.noninjective_part_in_sub_triangle(frB.right[J.anchor], I, J):
            raise AlgebraError(f"edge {u}->{v}: right fracture leaves G_I")
        if (fx.restrict_fracture(frA.left[W.anchor], P, W)
                != fx.restrict_fracture(frB.right[J.anchor], I, J)):
            raise AlgebraError(f"edge {u}->{v}: restricted fractures differ")
    # completeness: non-injective right fractures must feed an outgoing edge,
    # non-projective left fractures an incoming one
    complete = True
    for tv in sys.tree_vertices:
        fr = sys.fracturings[tv]
        used_I = {sys.edge_data[(u, v)][0].anchor
                  for u, v, _, _ in sys.tree_arrows if u == tv}
        used_P = {sys.edge_data[(u, v)][1].anchor
                  for u, v, _, _ in sys.tree_arrows if v == tv}
        for anchor, T in fr.right.items():
            if T != fx.injective_intervals(T.h) and anchor not in used_I:
                complete = False
        for anchor, T in fr.left.items():
            if T != fx.projective_intervals(T.h) and anchor not in used_P:
                complete = False
    L, vmaps, amaps = glue_system(sys)
    mods = []
    for tv in sys.tree_vertices:
        local = sys.subcategories.get(tv)
        if local is None:
            local = verifier.tau_orbit_candidate(sys.algebras[tv], n)
        for M in local:
            mods.append(push_forward_system(M, tv, L, vmaps, amaps))
    # iso-dedupe
    index = arquiver._IsoIndex()
    out = []
    for M in mods:
        if index.find(M) is None:
            index.add(M, True)
            out.append(M)
    return L, (vmaps, amaps), out, complete
