"""Verification of n-cluster tilting and fractured subcategories, the
canonical translate-orbit candidate, the radical-square-zero starlike
classification, and the sinks-and-sources generator."""

import json

from . import arquiver, fracture as fx, gluing, replab
from .core import AlgebraError, starlike


class Subcategory:
    """Additive closure of a finite list of pairwise non-isomorphic
    indecomposables, stored by chosen representatives."""

    def __init__(self, algebra, modules, dedupe=True):
        self.algebra = algebra
        if dedupe:
            index = arquiver._IsoIndex()
            kept = []
            for M in modules:
                if not M.is_zero() and index.find(M) is None:
                    index.add(M, True)
                    kept.append(M)
            self.modules = kept
        else:
            self.modules = list(modules)
        self._index = arquiver._IsoIndex()
        for i, M in enumerate(self.modules):
            self._index.add(M, i)

    def __len__(self):
        return len(self.modules)

    def locate(self, rep):
        """Index of the member isomorphic to rep, or None."""
        return self._index.find(rep)

    def contains(self, rep):
        return self.locate(rep) is not None


class VerificationReport:
    def __init__(self, kind, n):
        self.kind = kind
        self.n = n
        self.conditions = []       # (name, ok, detail)
        self.counterexamples = []  # (condition, description, dim vector)

    @property
    def verdict(self):
        return all(ok for _, ok, _ in self.conditions)

    def record(self, name, ok, detail=""):
        self.conditions.append((name, bool(ok), detail))

    def witness(self, condition, description, rep=None):
        dv = list(rep.dim_vector()) if rep is not None else None
        self.counterexamples.append((condition, description, dv))

    def to_json(self):
        return json.dumps({
            "kind": self.kind,
            "n": self.n,
            "verdict": "pass" if self.verdict else "fail",
            "conditions": [
                {"name": name, "ok": ok, "detail": detail}
                for name, ok, detail in self.conditions],
            "counterexamples": [
                {"condition": c, "description": d, "dim_vector": dv}
                for c, d, dv in self.counterexamples],
        }, indent=2)

    def __repr__(self):
        state = "pass" if self.verdict else "fail"
        return f"VerificationReport({self.kind}, n={self.n}, {state})"


def _is_indecomposable(M):
    if M.is_zero():
        return False
    return len(replab.decompose(M)) == 1


def tau_orbit_candidate(A, n, seed=None, cap=4096):
    """Closure of the projectives (or a seed list) under the inverse
    n-fold translate, the canonical candidate subcategory."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return Subcategory(A, arquiver.indecomposables(A, cap=cap),
                           dedupe=False)
    start = seed if seed is not None else [
        replab.projective(A, v) for v in sorted(A.quiver.vertices)]
    index = arquiver._IsoIndex()
    out = []
    queue = []
    for M in start:
        if not M.is_zero() and index.find(M) is None:
            index.add(M, True)
            out.append(M)
            queue.append(M)
    while queue:
        M = queue.pop(0)
        T = replab.tau_n(M, n, "-")
        if T.is_zero():
            continue
        for part in replab.decompose(T):
            if index.find(part) is None:
                if len(out) >= cap:
                    raise arquiver.EnumerationError(
                        f"orbit candidate exceeded cap {cap}")
                index.add(part, True)
                out.append(part)
                queue.append(part)
    return Subcategory(A, out, dedupe=False)


def check_nct(A, M, n, indecs=None, report_all=False):
    """Direct Ext-orthogonality check that add(M) is n-cluster tilting."""
    report = VerificationReport("n-cluster-tilting", n)
    if n < 1:
        raise ValueError("n must be >= 1")
    if indecs is None:
        indecs = arquiver.indecomposables(A)
    if n == 1:
        ok = len(indecs) == len(M) and all(M.contains(X) for X in indecs)
        report.record("whole-category", ok,
                      f"|M| = {len(M)}, |ind| = {len(indecs)}")
        if not ok:
            report.witness("whole-category",
                           "M differs from the full indecomposable list")
        return report
    # cheap pre-checks: projectives and injectives always belong
    missing = []
    for v in sorted(A.quiver.vertices):
        for kind, mod in (("projective", replab.projective(A, v)),
                          ("injective", replab.injective(A, v))):
            if not M.contains(mod):
                missing.append((kind, v))
                report.witness("proj-inj-membership",
                               f"{kind} at vertex {v} not in M", mod)
    report.record("proj-inj-membership", not missing,
                  f"{len(missing)} missing" if missing else "all present")
    if missing and not report_all:
        return report
    # rigidity: Ext^{1..n-1}(M, M) = 0
    rigid = True
    for X in M.modules:
        for Y in M.modules:
            for i in range(1, n):
                if replab.ext_dim(X, Y, i):
                    rigid = False
                    report.witness(
                        "rigidity",
                        f"Ext^{i} nonzero between members "
                        f"{X.dim_vector()} -> {Y.dim_vector()}", X)
                    break
            if not rigid:
                break
        if not rigid:
            break
    report.record("rigidity", rigid)
    if not rigid and not report_all:
        return report
    # maximality: every excluded indecomposable has nonzero Ext into M
    # and nonzero Ext from M, in some degree 0 < i < n
    maximal = True
    for X in indecs:
        if M.contains(X):
            continue
        into = any(replab.ext_dim(X, Y, i)
                   for Y in M.modules for i in range(1, n))
        outof = into and any(replab.ext_dim(Y, X, i)
                             for Y in M.modules for i in range(1, n))
        if not into:
            outof = any(replab.ext_dim(Y, X, i)
                        for Y in M.modules for i in range(1, n))
        if not (into and outof):
            maximal = False
            side = [] if into else ["Ext(X, M) = 0"]
            if not outof:
                side.append("Ext(M, X) = 0")
            report.witness("maximality",
                           f"excluded module violates {' and '.join(side)}",
                           X)
            if not report_all:
                break
    report.record("maximality", maximal)
    report.record("functorial-finiteness", True,
                  "automatic for representation-finite algebras")
    return report


def _left_class(A, fr):
    """Representatives of the projective-side comparison class: all
    non-abutment projectives plus the left fracture interval modules."""
    anchors = {ab.anchor for ab in fx.abutments(A, "left")}
    mods = [replab.projective(A, v)
            for v in sorted(A.quiver.vertices) if v not in anchors]
    for anchor, T in sorted(fr.left.items()):
        W = fr.max_left[anchor]
        for a, b in T.intervals:
            mods.append(fx.interval_module(A, W.tail, a, b))
    return Subcategory(A, mods)


def _right_class(A, fr):
    anchors = {ab.anchor for ab in fx.abutments(A, "right")}
    mods = [replab.injective(A, v)
            for v in sorted(A.quiver.vertices) if v not in anchors]
    for anchor, T in sorted(fr.right.items()):
        J = fr.max_right[anchor]
        for a, b in T.intervals:
            mods.append(fx.interval_module(A, J.tail, a, b))
    return Subcategory(A, mods)


def check_fractured(A, fr, M, n, report_all=False):
    """Translate/syzygy criterion for a fractured subcategory."""
    if n < 2:
        raise ValueError("the fractured criterion needs n >= 2")
    report = VerificationReport("fractured", n)
    PL = _left_class(A, fr)
    IR = _right_class(A, fr)
    # (a1) the projective-side class is contained in M
    missing = [X for X in PL.modules if not M.contains(X)]
    for X in missing:
        report.witness("a1", "projective-side class member not in M", X)
    report.record("a1", not missing,
                  f"{len(missing)} missing" if missing else "")
    if missing and not report_all:
        return report
    SP = [X for X in M.modules if not PL.contains(X)]
    SI = [X for X in M.modules if not IR.contains(X)]
    # (a2) the translates give mutually inverse bijections SP <-> SI
    si_index = arquiver._IsoIndex()
    for i, Y in enumerate(SI):
        si_index.add(Y, i)
    sp_index = arquiver._IsoIndex()
    for i, X in enumerate(SP):
        sp_index.add(X, i)
    a2 = True
    hit = set()
    for X in SP:
        T = replab.tau_n(X, n, "+")
        if T.is_zero() or not _is_indecomposable(T):
            a2 = False
            report.witness("a2", "forward translate zero or decomposable", X)
            if not report_all:
                break
            continue
        j = si_index.find(T)
        back = replab.tau_n(T, n, "-")
        if j is None or back.is_zero() or not replab.is_isomorphic(back, X):
            a2 = False
            report.witness("a2", "forward translate leaves the target class "
                           "or is not inverted", X)
            if not report_all:
                break
            continue
        hit.add(j)
    if a2:
        for j, Y in enumerate(SI):
            if j in hit:
                continue
            T = replab.tau_n(Y, n, "-")
            if (T.is_zero() or not _is_indecomposable(T)
                    or sp_index.find(T) is None
                    or not replab.is_isomorphic(replab.tau_n(T, n, "+"), Y)):
                a2 = False
                report.witness("a2", "backward translate fails", Y)
                if not report_all:
                    break
    report.record("a2", a2)
    if not a2 and not report_all:
        return report
    # (a3)/(a4) intermediate (co)syzygies stay indecomposable
    a3 = True
    for X in SP:
        cur = X
        for i in range(1, n):
            cur = replab.syzygy(cur, "+", 1)
            if cur.is_zero() or not _is_indecomposable(cur):
                a3 = False
                report.witness("a3", f"syzygy {i} zero or decomposable", X)
                break
        if not a3 and not report_all:
            break
    report.record("a3", a3)
    if not a3 and not report_all:
        return report
    a4 = True
    for Y in SI:
        cur = Y
        for i in range(1, n):
            cur = replab.syzygy(cur, "-", 1)
            if cur.is_zero() or not _is_indecomposable(cur):
                a4 = False
                report.witness("a4", f"cosyzygy {i} zero or decomposable", Y)
                break
        if not a4 and not report_all:
            break
    report.record("a4", a4)
    return report


# -- starlike classification ---------------------------------------------

def starlike_classify(rays, n):
    """Closed-form verdict for radical-square-zero starlike algebras.

    ``rays`` as in :func:`arglue.core.starlike`: (length incl. center,
    'out' = arm ends in a sink / 'in' = arm ends in a source).
    Returns (passes, gldim or None, case label).
    """
    if n < 2:
        raise ValueError("classification applies for n >= 2")
    k = len(rays)
    rays = [(int(m), d) for m, d in rays]
    for m, d in rays:
        if m < 2 or d not in ("in", "out"):
            raise AlgebraError("invalid ray specification")
    if k == 2:
        raise AlgebraError("two rays form a line, not a starlike tree")
    if k == 1:
        m = rays[0][0]
        if m >= n + 1 and (m - 1) % n == 0:
            return True, m - 1, "single-line"
        return False, None, "single-line"
    if k == 3:
        sink_arms = sorted(m for m, d in rays if d == "out")
        source_arms = sorted(m for m, d in rays if d == "in")
        for doubled, single, label in (
                (sink_arms, source_arms, "two-sinks"),
                (source_arms, sink_arms, "two-sources")):
            if len(doubled) != 2:
                continue
            m1, m2 = doubled
            m3 = single[0]
            if (m1 >= n + 1 and (m1 - 1) % n == 0
                    and m2 >= n + 1 and (m2 - 1) % n == 0
                    and m3 >= n and m3 % n == 0):
                return True, m3 + max(m1, m2) - 2, label
            return False, None, label
        return False, None, "three-rays-one-sided"
    if k == 4:
        sink_arms = [m for m, d in rays if d == "out"]
        source_arms = [m for m, d in rays if d == "in"]
        if (n == 2 and len(sink_arms) == 2 and len(source_arms) == 2
                and all(m >= 3 and m % 2 == 1 for m, _ in rays)):
            return True, max(sink_arms) + max(source_arms) - 2, "four-rays"
        return False, None, "four-rays"
    return False, None, "center-degree-exceeded"


def starlike_rep_finite(rays):
    """Gabriel's criterion via the separated quiver: a radical-square-zero
    starlike algebra is representation-finite iff the center star stays
    Dynkin on both sides, i.e. at most 3 arms point each way."""
    out = sum(1 for _, d in rays if d == "out")
    into = len(rays) - out
    return out <= 3 and into <= 3


# -- sinks-and-sources generator ------------------------------------------

def generate_sinks_sources(s, t, n):
    """An algebra with exactly s sources and t sinks whose canonical
    candidate is n-cluster tilting: a chain of starlike blocks glued
    along simple seams."""
    if s < 1 or t < 1:
        raise ValueError("need s >= 1 and t >= 1")
    if n < 2:
        raise ValueError("need n >= 2")
    blocks = {0: starlike([(n + 1, "out")])}
    for j in range(1, t):
        blocks[j] = starlike([(n + 1, "out"), (n + 1, "out"), (n, "in")])
    for j in range(1, s):
        blocks[-j] = starlike([(n + 1, "in"), (n + 1, "in"), (n, "out")])
    edges = []
    for j in range(1, t):
        u, v = j, j - 1
        i_anchor = sorted(blocks[u].quiver.sources())[0]
        p_anchor = sorted(blocks[v].quiver.sinks())[0]
        edges.append((u, v, i_anchor, p_anchor))
    for j in range(1, s):
        u, v = -(j - 1), -j
        i_anchor = sorted(blocks[u].quiver.sources())[0]
        p_anchor = sorted(blocks[v].quiver.sinks())[0]
        edges.append((u, v, i_anchor, p_anchor))
    if not edges:
        L = blocks[0]
        return L, tau_orbit_candidate(L, n)
    sysspec = gluing.GluingSystemSpec(sorted(blocks), edges, blocks)
    L, vmaps, amaps = gluing.glue_system(sysspec, check_orders=False)
    # candidate: push the per-block candidates forward and dedupe
    mods = []
    for tv in sorted(blocks):
        for M in tau_orbit_candidate(blocks[tv], n).modules:
            mods.append(gluing.push_forward_system(M, tv, L, vmaps, amaps))
    return L, Subcategory(L, mods)


def glued_indecomposables(sysspec, L, vmaps, amaps):
    """Complete indecomposable list of a glued system, pushed forward
    from the per-block lists and deduped on the seam foundations."""
    mods = []
    for tv in sysspec.tree_vertices:
        for M in arquiver.indecomposables(sysspec.algebras[tv]):
            mods.append(gluing.push_forward_system(M, tv, L, vmaps, amaps))
    return Subcategory(L, mods).modules
