"""Exhaustive enumeration of the combinatorial families, for ground truth.

Everything here works from the definitions, independently of the series
machinery, so the two can cross-check each other coefficient by
coefficient.

Encodings (plain nested tuples, hashable and canonical):

* Schroeder tree on m leaves: ``None`` for a leaf, otherwise a tuple of
  >= 2 child subtrees in left-to-right order.
* Planar forest on [n]: tuple of components ordered by smallest label.
  A component is ``(block, shape)`` with ``block`` an ascending tuple of
  boundary labels and ``shape`` the Schroeder tree on ``len(block) - 1``
  leaves obtained by removing the smallest label's edge (``None`` for
  blocks of size 1 or 2).  Together the blocks form a noncrossing
  partition.  An internal vertex of degree 2 is unrepresentable: a
  Schroeder node has >= 2 children plus its parent edge, so degree >= 3.
* Decorated (Grassmannian) forest: same, except a decorated tree node is
  ``(h, child, ...)`` carrying its helicity first, and a singleton
  block's shape is the leaf helicity 0 or 1.  The degree of a decorated
  node equals ``len(node)``.

Colours: a vertex of degree d is white when h = 1, black when h = d - 1,
generic otherwise (boundary leaves: white h = 1, black h = 0).  A forest
is contracted when no edge joins two white or two black vertices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from .genfun import GFKind


class BudgetExceeded(RuntimeError):
    """The configured enumeration ceiling was hit."""


class InvalidMove(ValueError):
    """Contraction requested across a non-matching or generic vertex pair."""


DEFAULT_BUDGET = 10**8

WHITE = "white"
BLACK = "black"


# -- shapes --------------------------------------------------------------------


@lru_cache(maxsize=None)
def schroeder_trees(num_leaves: int) -> tuple:
    """All Schroeder trees (ordered, every internal node >= 2 children)."""
    if num_leaves < 1:
        return ()
    if num_leaves == 1:
        return (None,)
    out = []
    for parts in _compositions(num_leaves, 2):
        for children in product(*(schroeder_trees(p) for p in parts)):
            out.append(children)
    return tuple(out)


def _compositions(total: int, min_parts: int):
    """Ordered compositions of `total` into >= min_parts positive parts."""
    def rec(remaining, parts):
        if remaining == 0:
            if len(parts) >= min_parts:
                yield tuple(parts)
            return
        for p in range(1, remaining + 1):
            parts.append(p)
            yield from rec(remaining - p, parts)
            parts.pop()
    yield from rec(total, [])


def shape_degrees(shape) -> tuple:
    """Degrees of the internal vertices of a (plain) tree shape."""
    if shape is None:
        return ()
    out = []
    stack = [shape]
    while stack:
        node = stack.pop()
        out.append(len(node) + 1)
        stack.extend(c for c in node if c is not None)
    return tuple(out)


def component_degrees(component) -> tuple:
    """Internal-vertex degrees of a plain forest component."""
    block, shape = component
    if len(block) == 1:
        return (1,)
    return shape_degrees(shape)


def tree_type_vector(n: int, component) -> tuple:
    """(r_3, ..., r_n) for a single-block tree on n leaves."""
    r = [0] * max(0, n - 2)
    for d in component_degrees(component):
        r[d - 3] += 1
    return tuple(r)


# -- plain families --------------------------------------------------------------


def enumerate_nc_partitions(n: int):
    """Every noncrossing partition of [n] exactly once (blocks sorted by minimum)."""
    yield from _nc_partitions(tuple(range(1, n + 1)))


def _nc_partitions(elems: tuple):
    if not elems:
        yield ()
        return
    first, rest = elems[0], elems[1:]
    m = len(rest)
    for j in range(m + 1):
        for idxs in combinations(range(m), j):
            block = (first,) + tuple(rest[i] for i in idxs)
            gaps = []
            prev = -1
            for i in idxs:
                gaps.append(rest[prev + 1 : i])
                prev = i
            gaps.append(rest[prev + 1 :])
            for sub in product(*(_nc_partitions(g) for g in gaps)):
                parts = (block,)
                for s in sub:
                    parts += s
                yield parts


def enumerate_trees(n: int):
    """All series-reduced planar trees on [n] as single-component forests."""
    if n < 1:
        return
    block = tuple(range(1, n + 1))
    if n == 1:
        yield ((block, None),)
        return
    for shape in schroeder_trees(n - 1):
        yield ((block, shape),)


def enumerate_forests(n: int, allow_singletons: bool = True):
    """All series-reduced planar forests on [n]."""
    for partition in enumerate_nc_partitions(n):
        if not allow_singletons and any(len(b) == 1 for b in partition):
            continue
        choices = []
        for block in partition:
            if len(block) <= 2:
                choices.append(((block, None),))
            else:
                choices.append(tuple((block, s) for s in schroeder_trees(len(block) - 1)))
        yield from product(*choices)


# -- dissections ------------------------------------------------------------------


def enumerate_dissections(n: int):
    """All dissections of the convex n-gon, as frozensets of diagonals (i, j)."""
    if n < 3:
        raise ValueError("polygons need at least 3 vertices")
    diagonals = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 2, n + 1)
        if not (i == 1 and j == n)
    ]

    def crosses(d1, d2):
        a, b = d1
        c, d = d2
        return a < c < b < d or c < a < d < b

    def extend(chosen, start):
        yield frozenset(chosen)
        for i in range(start, len(diagonals)):
            d = diagonals[i]
            if all(not crosses(d, e) for e in chosen):
                chosen.append(d)
                yield from extend(chosen, i + 1)
                chosen.pop()

    yield from extend([], 0)


def dissection_piece_sizes(n: int, diagonals: frozenset) -> tuple:
    """Sizes of the sub-polygons cut out by a dissection, sorted."""

    def split(region):
        for ia in range(len(region)):
            for ib in range(ia + 2, len(region)):
                if ia == 0 and ib == len(region) - 1:
                    continue
                a, b = region[ia], region[ib]
                if ((a, b) if a < b else (b, a)) in diagonals:
                    return split(region[ia : ib + 1]) + split(
                        region[ib:] + region[: ia + 1]
                    )
        return [len(region)]

    return tuple(sorted(split(tuple(range(1, n + 1)))))


def dissection_type_vector(n: int, diagonals: frozenset) -> tuple:
    """(m_3, ..., m_n): number of i-gon pieces of a dissection."""
    r = [0] * max(0, n - 2)
    for size in dissection_piece_sizes(n, diagonals):
        r[size - 3] += 1
    return tuple(r)


# -- helicity decorations ----------------------------------------------------------


def vertex_color(h: int, deg: int):
    if h == 1 and deg != 2:
        return WHITE
    if h == deg - 1:
        return BLACK
    return None


def _decorated_nodes(shape, parent_color, plabic, contracted):
    """All helicity assignments of a tree shape, as decorated nodes."""
    deg = len(shape) + 1
    for h in range(1, deg):
        if plabic and h not in (1, deg - 1):
            continue
        color = vertex_color(h, deg)
        if contracted and color is not None and color == parent_color:
            continue
        pools = [
            (None,) if child is None else _decorated_cached(child, color, plabic, contracted)
            for child in shape
        ]
        for children in product(*pools):
            yield (h,) + children


@lru_cache(maxsize=None)
def _decorated_cached(shape, parent_color, plabic, contracted) -> tuple:
    return tuple(_decorated_nodes(shape, parent_color, plabic, contracted))


def decorate_grassmannian(forest, contracted_only: bool = True, plabic_only: bool = False):
    """All valid helicity decorations of a plain forest.

    The contracted filter drops decorations with two adjacent white or two
    adjacent black vertices; the plabic filter restricts every internal
    vertex to h in {1, deg - 1}.
    """
    pools = []
    for block, shape in forest:
        if len(block) == 1:
            pools.append(((block, 0), (block, 1)))
        elif len(block) == 2:
            pools.append(((block, None),))
        else:
            pools.append(
                tuple(
                    (block, dec)
                    for dec in _decorated_cached(shape, None, plabic_only, contracted_only)
                )
            )
    yield from product(*pools)


def decorated_vertices(component):
    """(h, deg) for each internal vertex of a decorated component."""
    block, dec = component
    if len(block) == 1:
        return ((dec, 1),)
    if len(block) == 2:
        return ()
    out = []
    stack = [dec]
    while stack:
        node = stack.pop()
        out.append((node[0], len(node)))
        stack.extend(c for c in node[1:] if c is not None)
    return tuple(out)


def vertex_mom_dimension(h: int, deg: int) -> int:
    return 2 * deg - 4 if vertex_color(h, deg) is None else deg - 1


def helicity(G) -> int:
    """Helicity of a decorated forest: sum(h(v) - deg(v)/2) + n/2."""
    twice = 0
    n = 0
    for block, dec in G:
        n += len(block)
        for h, deg in decorated_vertices((block, dec)):
            twice += 2 * h - deg
    assert (twice + n) % 2 == 0
    return (twice + n) // 2


def tree_helicity(component) -> int:
    """Per-tree form: 1 + sum(h(v) - 1) for trees with >= 2 boundary vertices."""
    block, dec = component
    if len(block) == 1:
        return dec
    return 1 + sum(h - 1 for h, _ in decorated_vertices(component))


def mom_dimension(G) -> int:
    """Sum over component trees of their dimension statistic."""
    return sum(_tree_mom_dimension(c) for c in G)


def _tree_mom_dimension(component) -> int:
    block, dec = component
    if len(block) <= 2:
        return len(block) - 1
    return 1 + sum(
        vertex_mom_dimension(h, deg) - 1 for h, deg in decorated_vertices(component)
    )


def is_contracted(G) -> bool:
    return not contractible_edges(G)


def is_plabic(G) -> bool:
    return all(
        vertex_color(h, deg) is not None
        for c in G
        for h, deg in decorated_vertices(c)
    )


# -- contraction moves --------------------------------------------------------------


def internal_edges(G):
    """Addresses (component_index, path) of edges between internal vertices.

    `path` is the tuple of child positions (1-based within each node tuple)
    leading from the component root to the child endpoint of the edge.
    """
    edges = []
    for ci, (block, dec) in enumerate(G):
        if len(block) < 3:
            continue

        def walk(node, path):
            for i in range(1, len(node)):
                child = node[i]
                if child is not None:
                    edges.append((ci, path + (i,)))
                    walk(child, path + (i,))

        walk(dec, ())
    return edges


def contractible_edges(G):
    out = []
    for ci, path in internal_edges(G):
        node = G[ci][1]
        for i in path[:-1]:
            node = node[i]
        child = node[path[-1]]
        cu = vertex_color(node[0], len(node))
        cv = vertex_color(child[0], len(child))
        if cu is not None and cu == cv:
            out.append((ci, path))
    return out


def contract_move(G, edge):
    """Contract the edge (u, v), merging v into its parent u.

    Both endpoints must be white or both black; the merged vertex keeps
    the colour, with degree deg(u) + deg(v) - 2 and helicity
    h(u) + h(v) - 1.
    """
    ci, path = edge
    block, dec = G[ci]
    if len(block) < 3 or not path:
        raise InvalidMove(f"no internal edge at {edge}")

    def rebuild(node, path):
        i = path[0]
        child = node[i]
        if child is None:
            raise InvalidMove("edge endpoint is a boundary leaf")
        if len(path) > 1:
            return node[:i] + (rebuild(child, path[1:]),) + node[i + 1 :]
        cu = vertex_color(node[0], len(node))
        cv = vertex_color(child[0], len(child))
        if cu is None or cv is None:
            raise InvalidMove("cannot contract through a generic vertex")
        if cu != cv:
            raise InvalidMove("cannot contract vertices of different colours")
        return (node[0] + child[0] - 1,) + node[1:i] + child[1:] + node[i + 1 :]

    merged = rebuild(dec, path)
    return G[:ci] + ((block, merged),) + G[ci + 1 :]


def contract_fully(G):
    """Canonical contracted representative of the refinement class."""
    while True:
        edges = contractible_edges(G)
        if not edges:
            return G
        G = contract_move(G, edges[0])


# -- statistics -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _node_hist(shape, parent_color, plabic, contracted) -> tuple:
    """Histogram {(sum h-1, sum m-1): count} over decorations of a subtree."""
    deg = len(shape) + 1
    hist = {}
    for h in range(1, deg):
        if plabic and h not in (1, deg - 1):
            continue
        color = vertex_color(h, deg)
        if contracted and color is not None and color == parent_color:
            continue
        base = (h - 1, vertex_mom_dimension(h, deg) - 1)
        partial = {base: 1}
        for child in shape:
            if child is None:
                continue
            child_hist = dict(_node_hist(child, color, plabic, contracted))
            partial = _convolve(partial, child_hist)
        for key, c in partial.items():
            hist[key] = hist.get(key, 0) + c
    return tuple(sorted(hist.items()))


def _convolve(a: dict, b: dict) -> dict:
    out = {}
    for (k1, r1), c1 in a.items():
        for (k2, r2), c2 in b.items():
            key = (k1 + k2, r1 + r2)
            out[key] = out.get(key, 0) + c1 * c2
    return out


@lru_cache(maxsize=None)
def _block_hist(size: int, plabic: bool, contracted: bool) -> tuple:
    """Histogram {(helicity, dimension): count} over decorated trees on `size` leaves."""
    if size == 1:
        return (((0, 0), 1), ((1, 0), 1))
    if size == 2:
        return (((1, 1), 1),)
    hist = {}
    for shape in schroeder_trees(size - 1):
        for (dh, dm), c in _node_hist(shape, None, plabic, contracted):
            key = (1 + dh, 1 + dm)
            hist[key] = hist.get(key, 0) + c
    return tuple(sorted(hist.items()))


def count_by_statistics(
    n: int,
    kind: GFKind,
    contracted_only: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> dict:
    """Exact histogram {(helicity k, dimension r): count} for the family.

    Forest kinds sum over noncrossing partitions, convolving the per-block tree
    histograms (statistics are additive over components).  The enumeration is
    exhaustive at tree level; `budget` caps the number of decorated objects
    accounted for.  Per-partition contributions merge by addition, so the
    outer loop could be partitioned across workers without changing results.
    """
    if n < 1:
        raise ValueError("n must be positive")
    plabic = kind.is_plabic
    seen = 0
    if kind.is_tree:
        hist = dict(_block_hist(n, plabic, contracted_only))
        seen = sum(hist.values())
        if seen > budget:
            raise BudgetExceeded(f"{seen} decorated trees exceed budget {budget}")
        return hist
    total = {}
    for partition in enumerate_nc_partitions(n):
        hist = {(0, 0): 1}
        for block in partition:
            hist = _convolve(hist, dict(_block_hist(len(block), plabic, contracted_only)))
        seen += sum(hist.values())
        if seen > budget:
            raise BudgetExceeded(f"enumeration ceiling {budget} hit at n = {n}")
        for key, c in hist.items():
            total[key] = total.get(key, 0) + c
    return total


# -- serialization -----------------------------------------------------------------


def _dec_to_json(dec):
    if dec is None or isinstance(dec, int):
        return dec
    return [dec[0]] + [_dec_to_json(c) for c in dec[1:]]


def forest_to_json(G) -> dict:
    """JSON-friendly rendering of a decorated forest (one object per line
    when dumped for external auditing)."""
    return {
        "n": sum(len(block) for block, _ in G),
        "helicity": helicity(G),
        "dimension": mom_dimension(G),
        "components": [
            {"block": list(block), "tree": _dec_to_json(dec)} for block, dec in G
        ],
    }


def write_json_lines(fh, forests) -> int:
    """Dump decorated forests one JSON object per line; returns the count."""
    import json

    count = 0
    for G in forests:
        fh.write(json.dumps(forest_to_json(G), separators=(",", ":")) + "\n")
        count += 1
    return count
