"""Finite categories, functors and natural transformations.

Everything is stored fully materialized: a category is a list of objects,
a list of arrows with endpoints, an identity table and a complete
composition table.  Identifiers are strings at the boundary and dense
integer indices internally; all values are immutable after validation,
so every operation in the package is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence


class BkitError(Exception):
    """Base class for all library errors."""


class IdentityViolation(BkitError):
    pass


class MissingComposite(BkitError):
    pass


class AssociativityViolation(BkitError):
    pass


class ValidationError(BkitError):
    pass


class BoundExceeded(BkitError):
    pass


class CodomainMismatch(BkitError):
    pass


@dataclass(frozen=True)
class EnumerationBound:
    """Limits for exhaustive searches over functors and cones."""

    max_objects: int = 4
    max_arrows: int = 12

    def check_category(self, cat: "FinCategory", what: str = "category") -> None:
        if len(cat.objects) > self.max_objects or len(cat.arrows) > self.max_arrows:
            raise BoundExceeded(
                f"{what} has {len(cat.objects)} objects / {len(cat.arrows)} arrows, "
                f"bound is {self.max_objects}/{self.max_arrows}"
            )


DEFAULT_BOUND = EnumerationBound()


class FinCategory:
    """A finite category with an explicit composition table.

    `dom`, `cod` index arrows by position; `identity[x]` is the identity
    arrow of object `x`; `comp[(g, f)]` is defined exactly when
    `cod(f) == dom(g)` and holds the composite `g after f`.
    """

    __slots__ = ("name", "objects", "arrows", "dom", "cod", "identity", "comp",
                 "_hom", "_obj_index", "_arr_index", "_hash")

    def __init__(self, name, objects, arrows, dom, cod, identity, comp):
        self.name = name
        self.objects = tuple(objects)
        self.arrows = tuple(arrows)
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self.identity = tuple(identity)
        self.comp = dict(comp)
        self._obj_index = {o: i for i, o in enumerate(self.objects)}
        self._arr_index = {a: i for i, a in enumerate(self.arrows)}
        hom: dict[tuple[int, int], list[int]] = {}
        for a in range(len(self.arrows)):
            hom.setdefault((self.dom[a], self.cod[a]), []).append(a)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._hash = hash((self.objects, self.arrows, self.dom, self.cod,
                           self.identity, tuple(sorted(self.comp.items()))))

    # -- basic queries -------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def obj_index(self, name: str) -> int:
        try:
            return self._obj_index[name]
        except KeyError:
            raise ValidationError(f"unknown object {name!r}") from None

    def arr_index(self, name: str) -> int:
        try:
            return self._arr_index[name]
        except KeyError:
            raise ValidationError(f"unknown arrow {name!r}") from None

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        return self._hom.get((x, y), ())

    def endos(self, x: int) -> tuple[int, ...]:
        return self.hom(x, x)

    def is_identity(self, a: int) -> bool:
        return self.identity[self.dom[a]] == a

    def compose(self, g: int, f: int) -> int:
        """Composite g∘f; requires cod(f) == dom(g)."""
        return self.comp[(g, f)]

    def idempotents(self) -> list[tuple[int, int]]:
        """All (object, arrow) pairs with e: x→x and e∘e = e (identities included)."""
        out = []
        for x in range(self.n_objects):
            for e in self.endos(x):
                if self.compose(e, e) == e:
                    out.append((x, e))
        return out

    # -- equality is structural on the canonical index order ----------

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (self.objects == other.objects and self.arrows == other.arrows
                and self.dom == other.dom and self.cod == other.cod
                and self.identity == other.identity and self.comp == other.comp)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (f"FinCategory({self.name!r}, {self.n_objects} objects, "
                f"{self.n_arrows} arrows)")


def validate_category(name: str,
                      objects: Sequence[str],
                      arrows: Sequence[tuple[str, str, str]],
                      compositions: Mapping[tuple[str, str], str],
                      identities: Mapping[str, str] | None = None) -> FinCategory:
    """Build and validate a finite category from a raw description.

    `arrows` lists (arrow-name, dom, cod) for the non-identity arrows;
    identity arrows are created automatically (named `id_<obj>` unless
    overridden via `identities`).  `compositions` must cover every
    composable pair of non-identity arrows; identity composites are
    auto-filled.

    Raises MissingComposite, AssociativityViolation or IdentityViolation
    with a witness when the table breaks a category axiom.
    """
    objects = list(objects)
    if len(set(objects)) != len(objects):
        raise ValidationError(f"duplicate object names in {name!r}")
    identities = dict(identities or {})
    for o in identities:
        if o not in objects:
            raise ValidationError(f"identity declared for unknown object {o!r}")
    id_names = {o: identities.get(o, f"id_{o}") for o in objects}
    if len(set(id_names.values())) != len(id_names):
        raise IdentityViolation(f"identity arrow names collide in {name!r}")

    arrow_names = [id_names[o] for o in objects]
    dom = list(range(len(objects)))
    cod = list(range(len(objects)))
    obj_index = {o: i for i, o in enumerate(objects)}
    for a_name, d, c in arrows:
        if a_name in arrow_names:
            raise ValidationError(f"duplicate arrow name {a_name!r}")
        if d not in obj_index or c not in obj_index:
            raise ValidationError(f"arrow {a_name!r} has unknown endpoint")
        arrow_names.append(a_name)
        dom.append(obj_index[d])
        cod.append(obj_index[c])
    arr_index = {a: i for i, a in enumerate(arrow_names)}
    identity = list(range(len(objects)))
    n = len(arrow_names)

    comp: dict[tuple[int, int], int] = {}
    for i in range(n):
        comp[(identity[cod[i]], i)] = i
        comp[(i, identity[dom[i]])] = i
    for (g_name, f_name), h_name in compositions.items():
        for nm in (g_name, f_name, h_name):
            if nm not in arr_index:
                raise ValidationError(f"composition entry uses unknown arrow {nm!r}")
        g, f, h = arr_index[g_name], arr_index[f_name], arr_index[h_name]
        if cod[f] != dom[g]:
            raise ValidationError(f"pair ({g_name}, {f_name}) is not composable")
        if dom[h] != dom[f] or cod[h] != cod[g]:
            raise ValidationError(
                f"composite {g_name}.{f_name} = {h_name} has wrong endpoints")
        prev = comp.get((g, f))
        if prev is not None and prev != h:
            raise IdentityViolation(
                f"composite {g_name}.{f_name} conflicts with an identity law")
        comp[(g, f)] = h

    for g in range(n):
        for f in range(n):
            if cod[f] == dom[g] and (g, f) not in comp:
                raise MissingComposite(
                    f"no composite for {arrow_names[g]} . {arrow_names[f]}")
    # identity laws beyond the auto-filled entries cannot fail; associativity can
    for h in range(n):
        for g in range(n):
            if cod[g] != dom[h]:
                continue
            hg = comp[(h, g)]
            for f in range(n):
                if cod[f] != dom[g]:
                    continue
                if comp[(h, comp[(g, f)])] != comp[(hg, f)]:
                    raise AssociativityViolation(
                        f"({arrow_names[h]} . {arrow_names[g]}) . {arrow_names[f]} "
                        f"differs from {arrow_names[h]} . ({arrow_names[g]} . {arrow_names[f]})")

    return FinCategory(name, objects, arrow_names, dom, cod, identity, comp)


def opposite(cat: FinCategory) -> FinCategory:
    """Reverse all arrows; an involution up to structural equality."""
    comp = {(f, g): h for (g, f), h in cat.comp.items()}
    return FinCategory(f"{cat.name}^op" if not cat.name.endswith("^op") else cat.name[:-3],
                       cat.objects, cat.arrows, cat.cod, cat.dom, cat.identity, comp)


class FinFunctor:
    """A functor between finite categories, given by index tables."""

    __slots__ = ("source", "target", "obj_map", "arr_map", "_hash")

    def __init__(self, source: FinCategory, target: FinCategory,
                 obj_map: Sequence[int], arr_map: Sequence[int]):
        self.source = source
        self.target = target
        self.obj_map = tuple(obj_map)
        self.arr_map = tuple(arr_map)
        self._hash = hash((id(source), id(target), self.obj_map, self.arr_map))

    def on_obj(self, x: int) -> int:
        return self.obj_map[x]

    def on_arr(self, a: int) -> int:
        return self.arr_map[a]

    def __eq__(self, other):
        if not isinstance(other, FinFunctor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.obj_map == other.obj_map and self.arr_map == other.arr_map)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        os = ", ".join(f"{self.source.objects[i]}>{self.target.objects[j]}"
                       for i, j in enumerate(self.obj_map))
        return f"FinFunctor({self.source.name}->{self.target.name}; {os})"


def validate_functor(f: FinFunctor) -> FinFunctor:
    """Exhaustively check that f preserves endpoints, identities, composition."""
    s, t = f.source, f.target
    if len(f.obj_map) != s.n_objects or len(f.arr_map) != s.n_arrows:
        raise ValidationError("functor tables have wrong length")
    for a in range(s.n_arrows):
        fa = f.arr_map[a]
        if t.dom[fa] != f.obj_map[s.dom[a]] or t.cod[fa] != f.obj_map[s.cod[a]]:
            raise ValidationError(
                f"functor breaks endpoints at arrow {s.arrows[a]!r}")
    for x in range(s.n_objects):
        if f.arr_map[s.identity[x]] != t.identity[f.obj_map[x]]:
            raise ValidationError(f"functor breaks identity at {s.objects[x]!r}")
    for (g, a), h in s.comp.items():
        if t.comp[(f.arr_map[g], f.arr_map[a])] != f.arr_map[h]:
            raise ValidationError(
                f"functor breaks composition at {s.arrows[g]!r} . {s.arrows[a]!r}")
    return f


def make_functor(source: FinCategory, target: FinCategory,
                 obj_map: Sequence[int], arr_map: Sequence[int]) -> FinFunctor:
    return validate_functor(FinFunctor(source, target, obj_map, arr_map))


def identity_functor(cat: FinCategory) -> FinFunctor:
    return FinFunctor(cat, cat, range(cat.n_objects), range(cat.n_arrows))


def compose_functors(g: FinFunctor, f: FinFunctor) -> FinFunctor:
    """g∘f; requires f.target == g.source."""
    if f.target != g.source:
        raise CodomainMismatch("functor composition endpoints do not match")
    return FinFunctor(f.source, g.target,
                      [g.obj_map[o] for o in f.obj_map],
                      [g.arr_map[a] for a in f.arr_map])


def op_functor(f: FinFunctor) -> FinFunctor:
    """The same data viewed as a functor between the opposite categories."""
    return FinFunctor(opposite(f.source), opposite(f.target), f.obj_map, f.arr_map)


def pick(cat: FinCategory, x: int) -> FinFunctor:
    """The point functor one → cat at object index x."""
    return FinFunctor(ONE, cat, [x], [cat.identity[x]])


def bang(cat: FinCategory) -> FinFunctor:
    """The unique functor cat → one."""
    return FinFunctor(cat, ONE, [0] * cat.n_objects, [0] * cat.n_arrows)


def arrow_functor(cat: FinCategory, a: int) -> FinFunctor:
    """The functor two → cat picking arrow a."""
    return FinFunctor(TWO, cat,
                      [cat.dom[a], cat.cod[a]],
                      [cat.identity[cat.dom[a]], cat.identity[cat.cod[a]], a])


class NatTrans:
    """A natural transformation between parallel functors."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source: FinFunctor, target: FinFunctor,
                 components: Sequence[int]):
        self.source = source
        self.target = target
        self.components = tuple(components)

    def __eq__(self, other):
        if not isinstance(other, NatTrans):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.components == other.components)

    def __hash__(self):
        return hash((self.source, self.target, self.components))

    def __repr__(self):
        return f"NatTrans({self.components})"


def validate_nat_trans(t: NatTrans) -> NatTrans:
    f, g = t.source, t.target
    if f.source != g.source or f.target != g.target:
        raise ValidationError("natural transformation needs parallel functors")
    cat, tgt = f.source, f.target
    for x in range(cat.n_objects):
        c = t.components[x]
        if tgt.dom[c] != f.obj_map[x] or tgt.cod[c] != g.obj_map[x]:
            raise ValidationError(f"component at {cat.objects[x]!r} has wrong endpoints")
    for a in range(cat.n_arrows):
        x, y = cat.dom[a], cat.cod[a]
        if tgt.compose(t.components[y], f.arr_map[a]) != \
           tgt.compose(g.arr_map[a], t.components[x]):
            raise ValidationError(f"naturality fails at arrow {cat.arrows[a]!r}")
    return t


def enumerate_functors(source: FinCategory, target: FinCategory,
                       bound: EnumerationBound = DEFAULT_BOUND) -> list[FinFunctor]:
    """All functors source → target, by backtracking over arrow images.

    The source must fit the enumeration bound; the search assigns object
    images first, then arrow images constrained by endpoints, pruning
    with every composition entry whose factors are already assigned.
    """
    bound.check_category(source, "enumeration source")
    if source.n_objects and target.n_objects == 0:
        return []
    results: list[FinFunctor] = []
    n_arr = source.n_arrows
    nonid = [a for a in range(n_arr) if not source.is_identity(a)]
    # composition entries checked as soon as their last factor is assigned
    by_last: dict[int, list[tuple[int, int, int]]] = {a: [] for a in nonid}
    order_pos = {a: i for i, a in enumerate(nonid)}
    for (g, f), h in source.comp.items():
        if source.is_identity(g) or source.is_identity(f):
            continue
        last = max(order_pos.get(a, -1) for a in (g, f, h))
        if last >= 0:
            by_last.setdefault(nonid[last], []).append((g, f, h))

    for obj_map in _object_assignments(source.n_objects, target.n_objects):
        arr_map = [0] * n_arr
        for x in range(source.n_objects):
            arr_map[source.identity[x]] = target.identity[obj_map[x]]

        def backtrack(i):
            if i == len(nonid):
                results.append(FinFunctor(source, target, obj_map, list(arr_map)))
                return
            a = nonid[i]
            for cand in target.hom(obj_map[source.dom[a]], obj_map[source.cod[a]]):
                arr_map[a] = cand
                ok = True
                for (g, f, h) in by_last.get(a, ()):
                    if target.comp[(arr_map[g], arr_map[f])] != arr_map[h]:
                        ok = False
                        break
                if ok:
                    backtrack(i + 1)

        backtrack(0)
    return results


def _object_assignments(n_src: int, n_tgt: int):
    if n_src == 0:
        yield ()
        return
    stack = [0] * n_src
    while True:
        yield tuple(stack)
        i = n_src - 1
        while i >= 0 and stack[i] == n_tgt - 1:
            stack[i] = 0
            i -= 1
        if i < 0:
            return
        stack[i] += 1


def product_category(c: FinCategory, d: FinCategory) -> FinCategory:
    """The product category c × d with pairwise structure."""
    objects = [f"({o},{p})" for o in c.objects for p in d.objects]
    nd = d.n_objects
    arrows, dom, cod = [], [], []
    pair_index = {}
    for a in range(c.n_arrows):
        for b in range(d.n_arrows):
            pair_index[(a, b)] = len(arrows)
            arrows.append(f"({c.arrows[a]},{d.arrows[b]})")
            dom.append(c.dom[a] * nd + d.dom[b])
            cod.append(c.cod[a] * nd + d.cod[b])
    identity = [pair_index[(c.identity[x], d.identity[y])]
                for x in range(c.n_objects) for y in range(d.n_objects)]
    comp = {}
    for (g1, f1), h1 in c.comp.items():
        for (g2, f2), h2 in d.comp.items():
            comp[(pair_index[(g1, g2)], pair_index[(f1, f2)])] = pair_index[(h1, h2)]
    return FinCategory(f"{c.name}x{d.name}", objects, arrows, dom, cod, identity, comp)


def categories_isomorphic(c: FinCategory, d: FinCategory) -> bool:
    """Bounded search for an isomorphism of categories (on-the-nose)."""
    if c.n_objects != d.n_objects or c.n_arrows != d.n_arrows:
        return False
    if sorted(len(h) for h in c._hom.values()) != sorted(len(h) for h in d._hom.values()):
        return False
    objs = list(range(c.n_objects))

    def extend(obj_bij):
        # arrow bijection by backtracking per hom-set, checking composition
        hom_pairs = []
        for (x, y), arrs in c._hom.items():
            darrs = d.hom(obj_bij[x], obj_bij[y])
            if len(darrs) != len(arrs):
                return False
            hom_pairs.append((arrs, darrs))
        arr_map = [-1] * c.n_arrows

        def assign(i):
            if i == len(hom_pairs):
                for (g, f), h in c.comp.items():
                    if d.comp[(arr_map[g], arr_map[f])] != arr_map[h]:
                        return False
                return True
            arrs, darrs = hom_pairs[i]
            for perm in _permutations(list(darrs)):
                for a, b in zip(arrs, perm):
                    arr_map[a] = b
                if all(not c.is_identity(a) or d.is_identity(arr_map[a])
                       for a in arrs):
                    if assign(i + 1):
                        return True
            for a in arrs:
                arr_map[a] = -1
            return False

        return assign(0)

    def perm_objects(i, used, obj_bij):
        if i == c.n_objects:
            return extend(list(obj_bij))
        for j in objs:
            if j in used:
                continue
            if len(c.endos(i)) != len(d.endos(j)):
                continue
            used.add(j)
            obj_bij.append(j)
            if perm_objects(i + 1, used, obj_bij):
                return True
            obj_bij.pop()
            used.remove(j)
        return False

    return perm_objects(0, set(), [])


def _permutations(items):
    if not items:
        yield []
        return
    for i, x in enumerate(items):
        for rest in _permutations(items[:i] + items[i + 1:]):
            yield [x] + rest


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

ZERO = validate_category("zero", [], [], {})
ONE = validate_category("one", ["*"], [], {})
TWO = validate_category("two", ["0", "1"], [("a", "0", "1")], {})
PAIR = validate_category("pair", ["l", "r"], [], {})
PAR = validate_category("par", ["a", "b"], [("u", "a", "b"), ("v", "a", "b")], {})
IDEM = validate_category("idem", ["*"], [("e", "*", "*")], {("e", "e"): "e"})
Z2 = validate_category("z2", ["*"], [("s", "*", "*")], {("s", "s"): "id_*"})
CHAIN3 = validate_category(
    "chain3", ["0", "1", "2"],
    [("a01", "0", "1"), ("a12", "1", "2"), ("a02", "0", "2")],
    {("a12", "a01"): "a02"})
SPAN = validate_category(
    "span", ["s", "l", "r"],
    [("f", "s", "l"), ("g", "s", "r")], {})
COSPAN = validate_category(
    "cospan", ["l", "r", "t"],
    [("f", "l", "t"), ("g", "r", "t")], {})
SPLIT_IDEM = validate_category(
    "split_idem", ["x", "y"],
    [("e", "x", "x"), ("r", "x", "y"), ("i", "y", "x")],
    {("e", "e"): "e", ("r", "e"): "r", ("e", "i"): "i",
     ("r", "i"): "id_y", ("i", "r"): "e"})

CATALOG: dict[str, FinCategory] = {
    c.name: c for c in
    (ZERO, ONE, TWO, PAIR, PAR, IDEM, Z2, CHAIN3, SPAN, COSPAN, SPLIT_IDEM)
}
