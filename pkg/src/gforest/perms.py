"""Decorated permutations and the calculus that builds them from trees.

A decorated permutation is a permutation of [n] whose fixed points each
carry a colour (black or white).  Trip permutations of decorated forests
are computed by the rules-of-the-road walk: entering an internal vertex
through its i-th edge (edges ordered clockwise) the walk leaves through
edge i + h(v) mod deg(v).  Amalgamation glues two permutations the way
an edge glues two star trees; together with cyclic rotation it generates
exactly the permutations arising from trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations as all_permutations

from .oracle import WHITE, BLACK, BudgetExceeded


class SizeTooSmall(ValueError):
    """Amalgamation needs both operands on at least two letters."""


@dataclass(frozen=True)
class DecoratedPermutation:
    """One-line permutation with coloured fixed points.

    images[i-1] = w(i); decorations is a sorted tuple of (fixed point,
    colour) pairs covering exactly the fixed points.
    """

    images: tuple
    decorations: tuple = ()

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {self.images}")
        fixed = {i for i in range(1, n + 1) if self.images[i - 1] == i}
        dec = dict(self.decorations)
        if set(dec) != fixed:
            raise ValueError(f"decorations {sorted(dec)} do not match fixed points {sorted(fixed)}")
        if any(c not in (BLACK, WHITE) for c in dec.values()):
            raise ValueError("decorations must be black or white")
        object.__setattr__(self, "decorations", tuple(sorted(dec.items())))

    @classmethod
    def of(cls, *images, white=(), black=()):
        dec = tuple((i, WHITE) for i in white) + tuple((i, BLACK) for i in black)
        return cls(tuple(images), dec)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def decoration(self, i: int):
        return dict(self.decorations).get(i)

    def inverse_images(self) -> tuple:
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return tuple(inv)

    def to_text(self) -> str:
        """One-line notation; black fixed points as _i, white as ^i."""
        dec = dict(self.decorations)
        parts = []
        for i, v in enumerate(self.images, start=1):
            if i in dec:
                parts.append(("_" if dec[i] == BLACK else "^") + str(v))
            else:
                parts.append(str(v))
        return "(" + ",".join(parts) + ")"

    def to_json(self) -> dict:
        return {
            "images": list(self.images),
            "decorations": {str(i): c for i, c in self.decorations},
        }


def antiexcedances(w: DecoratedPermutation) -> int:
    """Number of i with w^{-1}(i) > i, plus white fixed points."""
    inv = w.inverse_images()
    count = sum(1 for i in range(1, w.n + 1) if inv[i - 1] > i)
    return count + sum(1 for _, c in w.decorations if c == WHITE)


def descents(images) -> int:
    return sum(1 for a, b in zip(images, images[1:]) if a > b)


def pi_perm(k: int, n: int) -> DecoratedPermutation:
    """The single-vertex permutation (k+1, ..., n, 1, ..., k); for n = 1 the
    decorated one-letter permutations (black for k = 0, white for k = 1)."""
    if n == 1:
        if k not in (0, 1):
            raise ValueError("one-letter permutations have k in {0, 1}")
        return DecoratedPermutation((1,), ((1, BLACK if k == 0 else WHITE),))
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    return DecoratedPermutation(tuple((i + k - 1) % n + 1 for i in range(1, n + 1)))


def direct_sum(s: DecoratedPermutation, t: DecoratedPermutation) -> DecoratedPermutation:
    """Block-diagonal concatenation, decorations shifted with their letters."""
    ns = s.n
    images = s.images + tuple(v + ns for v in t.images)
    dec = s.decorations + tuple((i + ns, c) for i, c in t.decorations)
    return DecoratedPermutation(images, dec)


def amalgamation(s: DecoratedPermutation, t: DecoratedPermutation) -> DecoratedPermutation:
    """Glue s and t into one permutation on n_s + n_t - 2 letters.

    Models gluing the tree of s at its boundary n_s to the tree of t at
    its boundary 1: trips of s that used to end at n_s continue through t
    from its first boundary, and vice versa.  Letters n_s .. n_s+n_t-2 of
    the result are letters 2 .. n_t of t.
    """
    ns, nt = s.n, t.n
    if ns < 2 or nt < 2:
        raise SizeTooSmall("amalgamation needs both operands on >= 2 letters")
    if s.decorations or t.decorations:
        raise ValueError("amalgamation is defined on permutations without fixed points")
    images = []
    for i in range(1, ns):
        v = s(i)
        images.append(t(1) + ns - 2 if v == ns else v)
    for i in range(ns, ns + nt - 1):
        v = t(i - ns + 2)
        images.append(s(ns) if v == 1 else v + ns - 2)
    return DecoratedPermutation(tuple(images))


def cyclic_rotation(w: DecoratedPermutation) -> DecoratedPermutation:
    """cyc(w)(i) = w(i-1) + 1 with both index and value wrapped modulo n."""
    n = w.n
    images = tuple(w(((i - 2) % n) + 1) % n + 1 for i in range(1, n + 1))
    dec = tuple((i % n + 1, c) for i, c in w.decorations)
    return DecoratedPermutation(images, dec)


# -- trip permutations -------------------------------------------------------------


def trip_permutation(G) -> DecoratedPermutation:
    """Decorated permutation of a decorated forest via the rules of the road.

    Fixed points come exactly from single-leaf components and are coloured
    black when the leaf has h = 0, white when h = 1.
    """
    n = sum(len(block) for block, _ in G)
    images = {}
    decorations = []
    for block, dec in G:
        if len(block) == 1:
            b = block[0]
            images[b] = b
            decorations.append((b, WHITE if dec == 1 else BLACK))
        elif len(block) == 2:
            a, b = block
            images[a] = b
            images[b] = a
        else:
            nodes, boundary = _component_graph(block, dec)
            for label, (nid, port) in boundary.items():
                images[label] = _walk(nodes, nid, port)
    return DecoratedPermutation(
        tuple(images[i] for i in range(1, n + 1)), tuple(decorations)
    )


def _component_graph(block, dec, rotations=None):
    """Explicit port lists for the walk.

    Each internal vertex gets its edges in clockwise order: parent edge
    first, then children left to right.  `rotations` optionally rotates
    every port list (the walk only uses relative offsets, so any reference
    edge must give the same permutation).
    """
    labels = iter(block[1:])
    nodes = []  # (helicity, [refs]); ref = ("b", label) or ("v", nid, back_port)
    boundary = {}

    def build(node, parent_ref):
        nid = len(nodes)
        ports = [parent_ref]
        nodes.append((node[0], ports))
        for child in node[1:]:
            port = len(ports)
            if child is None:
                label = next(labels)
                ports.append(("b", label))
                boundary[label] = (nid, port)
            else:
                ports.append(None)
                cid = build(child, ("v", nid, port))
                ports[port] = ("v", cid, 0)
        return nid

    root = build(dec, ("b", block[0]))
    boundary[block[0]] = (root, 0)

    if rotations:
        nodes, boundary = _rotate_ports(nodes, boundary, rotations)
    return nodes, boundary


def _rotate_ports(nodes, boundary, rotations):
    rotated = []
    shift = {}
    for nid, (h, ports) in enumerate(nodes):
        r = rotations(nid) % len(ports) if callable(rotations) else rotations % len(ports)
        shift[nid] = r
        rotated.append((h, ports[r:] + ports[:r]))
    fixed = []
    for h, ports in rotated:
        fixed.append(
            (
                h,
                [
                    ref if ref[0] == "b" else ("v", ref[1], (ref[2] - shift[ref[1]]) % len(nodes[ref[1]][1]))
                    for ref in ports
                ],
            )
        )
    new_boundary = {
        label: (nid, (port - shift[nid]) % len(nodes[nid][1]))
        for label, (nid, port) in boundary.items()
    }
    return fixed, new_boundary


def _walk(nodes, nid, port):
    steps = 0
    while True:
        h, ports = nodes[nid]
        ref = ports[(port + h) % len(ports)]
        if ref[0] == "b":
            return ref[1]
        _, nid, port = ref
        steps += 1
        if steps > 4 * sum(len(p) for _, p in nodes):
            raise RuntimeError("trip failed to terminate; malformed component")


# -- pattern avoidance ---------------------------------------------------------------


def is_separable(images) -> bool:
    """True when the permutation avoids both 2413 and 3142.

    Naive scan over 4-element subsequences; fine at the scale where
    exhaustive enumeration is feasible anyway.
    """
    for a, b, c, d in combinations(images, 4):
        if c < a < d < b or b < d < a < c:
            return False
    return True


def _plain_antiexcedances(images) -> int:
    inv = [0] * len(images)
    for i, v in enumerate(images, start=1):
        inv[v - 1] = i
    return sum(1 for i in range(1, len(images) + 1) if inv[i - 1] > i)


def enumerate_separable(n: int, by_descents: bool = True, budget: int = 10) -> dict:
    """Histogram of separable permutations of [n], by descents (default) or
    by antiexcedances (fixed points counting as non-antiexcedances)."""
    if n > budget:
        raise BudgetExceeded(f"separable enumeration capped at n = {budget}")
    hist = {}
    for w in all_permutations(range(1, n + 1)):
        if not is_separable(w):
            continue
        key = descents(w) if by_descents else _plain_antiexcedances(w)
        hist[key] = hist.get(key, 0) + 1
    return hist


# -- closures ------------------------------------------------------------------------


def grass_tree_permutation_sets(max_n: int, budget: int = 10**6) -> dict:
    """Permutations of trees on 1..max_n letters, built by closing the
    single-vertex permutations under amalgamation and cyclic rotation."""
    by_size = {m: set() for m in range(1, max_n + 1)}
    if max_n >= 1:
        by_size[1] = {pi_perm(0, 1), pi_perm(1, 1)}
    frontier = []
    if max_n >= 2:
        seed = pi_perm(1, 2)
        by_size[2].add(seed)
        frontier.append(seed)
    for m in range(3, max_n + 1):
        for k in range(1, m):
            w = pi_perm(k, m)
            if w not in by_size[m]:
                by_size[m].add(w)
                frontier.append(w)
    total = sum(len(s) for s in by_size.values())
    while frontier:
        w = frontier.pop()
        candidates = [cyclic_rotation(w)]
        for m in range(2, max_n + 2 - w.n + 1):
            for other in list(by_size.get(m, ())):
                if w.n + m - 2 <= max_n:
                    candidates.append(amalgamation(w, other))
                    candidates.append(amalgamation(other, w))
        for c in candidates:
            if c not in by_size[c.n]:
                by_size[c.n].add(c)
                frontier.append(c)
                total += 1
                if total > budget:
                    raise BudgetExceeded(f"closure exceeded {budget} permutations")
    return by_size


def enumerate_grass_tree_permutations(n: int, budget: int = 10**6):
    """All permutations on n letters arising from trees, deduplicated."""
    yield from sorted(
        grass_tree_permutation_sets(n, budget)[n], key=lambda w: (w.images, w.decorations)
    )


def grass_forest_permutation_sets(max_n: int, budget: int = 10**6) -> dict:
    """Closure of the tree permutations under direct sum and cyclic rotation."""
    trees = grass_tree_permutation_sets(max_n, budget)
    by_size = {m: set(s) for m, s in trees.items()}
    frontier = [w for s in by_size.values() for w in s]
    total = sum(len(s) for s in by_size.values())
    while frontier:
        w = frontier.pop()
        candidates = [cyclic_rotation(w)]
        for m in range(1, max_n - w.n + 1):
            for other in list(by_size.get(m, ())):
                candidates.append(direct_sum(w, other))
                candidates.append(direct_sum(other, w))
        for c in candidates:
            if c.n <= max_n and c not in by_size[c.n]:
                by_size[c.n].add(c)
                frontier.append(c)
                total += 1
                if total > budget:
                    raise BudgetExceeded(f"closure exceeded {budget} permutations")
    return by_size


def enumerate_grass_forest_permutations(n: int, budget: int = 10**6):
    yield from sorted(
        grass_forest_permutation_sets(n, budget)[n],
        key=lambda w: (w.images, w.decorations),
    )
