"""Comma categories, slices, pullbacks of categories and the components functor."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (CodomainMismatch, FinCategory, FinFunctor, ONE,
                   identity_functor, pick)


class UnionFind:
    """Disjoint sets with path compression and size-based union."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        i, j = self.find(i), self.find(j)
        if i == j:
            return
        if self.size[i] < self.size[j]:
            i, j = j, i
        self.parent[j] = i
        self.size[i] += self.size[j]


@dataclass(frozen=True)
class ComponentsPartition:
    """Connected components of the undirected arrow graph of a category.

    Classes are numbered by first appearance in object order, so the
    partition is deterministic; `representative[c]` is the least object
    index in class c.
    """

    base: FinCategory
    class_of: tuple[int, ...]
    size: int
    representative: tuple[int, ...]

    def members(self, c: int) -> list[int]:
        return [o for o in range(self.base.n_objects) if self.class_of[o] == c]


def pi0(cat: FinCategory) -> ComponentsPartition:
    """Components via union-find over the arrow graph."""
    uf = UnionFind(cat.n_objects)
    for a in range(cat.n_arrows):
        uf.union(cat.dom[a], cat.cod[a])
    class_of = [-1] * cat.n_objects
    reps: list[int] = []
    for o in range(cat.n_objects):
        r = uf.find(o)
        if class_of[r] == -1:
            class_of[r] = len(reps)
            reps.append(o)
        class_of[o] = class_of[r]
    return ComponentsPartition(cat, tuple(class_of), len(reps), tuple(reps))


@dataclass(frozen=True)
class CommaCategory:
    """The comma category f/g of two functors into a shared codomain.

    Objects are triples (p, q, α: f p → g q); arrows are the commuting
    squares, stored as pairs of arrows of the two feet.  Objects and
    arrows are canonically ordered lexicographically.
    """

    apex: FinCategory
    left_proj: FinFunctor
    right_proj: FinFunctor
    objects: tuple[tuple[int, int, int], ...]   # (p, q, alpha)
    arrows: tuple[tuple[int, int], ...]         # (u in dom f, v in dom g)

    def obj_pos(self, p: int, q: int, alpha: int) -> int:
        return self.objects.index((p, q, alpha))


def comma(f: FinFunctor, g: FinFunctor) -> CommaCategory:
    """Build f/g; raises CodomainMismatch unless f, g share a codomain."""
    if f.target != g.target:
        raise CodomainMismatch("comma needs functors into the same category")
    x = f.target
    a_cat, b_cat = f.source, g.source
    objs: list[tuple[int, int, int]] = []
    for p in range(a_cat.n_objects):
        for q in range(b_cat.n_objects):
            for alpha in x.hom(f.obj_map[p], g.obj_map[q]):
                objs.append((p, q, alpha))
    obj_index = {t: i for i, t in enumerate(objs)}

    arrows: list[tuple[int, int]] = []
    dom, cod = [], []
    for i, (p, q, alpha) in enumerate(objs):
        for u in range(a_cat.n_arrows):
            if a_cat.dom[u] != p:
                continue
            for v in range(b_cat.n_arrows):
                if b_cat.dom[v] != q:
                    continue
                # square condition: α' ∘ f(u) = g(v) ∘ α
                left = x.compose(g.arr_map[v], alpha)
                for alpha2 in x.hom(f.obj_map[a_cat.cod[u]], g.obj_map[b_cat.cod[v]]):
                    if x.compose(alpha2, f.arr_map[u]) == left:
                        j = obj_index[(a_cat.cod[u], b_cat.cod[v], alpha2)]
                        arrows.append((u, v))
                        dom.append(i)
                        cod.append(j)
    names_o = [f"({a_cat.objects[p]},{b_cat.objects[q]};{x.arrows[al]})"
               for (p, q, al) in objs]
    names_a = [f"({a_cat.arrows[u]},{b_cat.arrows[v]}):{d}>{c}"
               for (u, v), d, c in zip(arrows, dom, cod)]
    # the same foot pair can carry several comma arrows, so key by endpoints too
    arr_pos: dict[tuple[int, int, int, int], int] = {}
    for k, ((u, v), d, c) in enumerate(zip(arrows, dom, cod)):
        arr_pos[(u, v, d, c)] = k
    identity = [0] * len(objs)
    for i, (p, q, alpha) in enumerate(objs):
        identity[i] = arr_pos[(a_cat.identity[p], b_cat.identity[q], i, i)]
    comp = {}
    for k2, ((u2, v2), d2) in enumerate(zip(arrows, dom)):
        for k1, ((u1, v1), d1) in enumerate(zip(arrows, dom)):
            if cod[k1] != d2:
                continue
            comp[(k2, k1)] = arr_pos[(a_cat.comp[(u2, u1)], b_cat.comp[(v2, v1)],
                                      d1, cod[k2])]
    apex = FinCategory(f"({f.source.name}/{g.source.name})", names_o, names_a,
                       dom, cod, identity, comp)
    left = FinFunctor(apex, a_cat, [p for (p, _, _) in objs],
                      [u for (u, _) in arrows])
    right = FinFunctor(apex, b_cat, [q for (_, q, _) in objs],
                       [v for (_, v) in arrows])
    return CommaCategory(apex, left, right, tuple(objs), tuple(arrows))


def slice_cat(cat: FinCategory, x: int) -> CommaCategory:
    """X/x as the comma id/x, so the identification X/x = id/x holds by construction."""
    return comma(identity_functor(cat), pick(cat, x))


def coslice_cat(cat: FinCategory, x: int) -> CommaCategory:
    """x\\X as the comma x/id."""
    return comma(pick(cat, x), identity_functor(cat))


@dataclass(frozen=True)
class PullbackCategory:
    """Strict pullback of two functors over a shared codomain."""

    apex: FinCategory
    to_left: FinFunctor
    to_right: FinFunctor
    objects: tuple[tuple[int, int], ...]
    arrows: tuple[tuple[int, int], ...]


def pullback_over(p: FinFunctor, q: FinFunctor) -> PullbackCategory:
    """P ×_X Q: objects and arrows are the strictly agreeing pairs."""
    if p.target != q.target:
        raise CodomainMismatch("pullback needs functors into the same category")
    a_cat, b_cat = p.source, q.source
    objs = [(o1, o2)
            for o1 in range(a_cat.n_objects)
            for o2 in range(b_cat.n_objects)
            if p.obj_map[o1] == q.obj_map[o2]]
    obj_index = {t: i for i, t in enumerate(objs)}
    arrows, dom, cod = [], [], []
    for u in range(a_cat.n_arrows):
        for v in range(b_cat.n_arrows):
            if p.arr_map[u] != q.arr_map[v]:
                continue
            if (a_cat.dom[u], b_cat.dom[v]) not in obj_index:
                continue
            arrows.append((u, v))
            dom.append(obj_index[(a_cat.dom[u], b_cat.dom[v])])
            cod.append(obj_index[(a_cat.cod[u], b_cat.cod[v])])
    arr_index = {t: i for i, t in enumerate(arrows)}
    identity = [arr_index[(a_cat.identity[o1], b_cat.identity[o2])]
                for (o1, o2) in objs]
    comp = {}
    for k2, (u2, v2) in enumerate(arrows):
        for k1, (u1, v1) in enumerate(arrows):
            if cod[k1] != dom[k2]:
                continue
            comp[(k2, k1)] = arr_index[(a_cat.comp[(u2, u1)], b_cat.comp[(v2, v1)])]
    names_o = [f"({a_cat.objects[o1]},{b_cat.objects[o2]})" for (o1, o2) in objs]
    names_a = [f"({a_cat.arrows[u]},{b_cat.arrows[v]})" for (u, v) in arrows]
    apex = FinCategory(f"({a_cat.name}x_{p.target.name}{b_cat.name})",
                       names_o, names_a, dom, cod, identity, comp)
    left = FinFunctor(apex, a_cat, [o1 for (o1, _) in objs], [u for (u, _) in arrows])
    right = FinFunctor(apex, b_cat, [o2 for (_, o2) in objs], [v for (_, v) in arrows])
    return PullbackCategory(apex, left, right, tuple(objs), tuple(arrows))
