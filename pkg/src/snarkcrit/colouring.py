"""Exact 3- and 4-edge-colouring search on edge-induced subgraphs.

Colours are 1, 2, 3 for proper 3-edge-colourings; 4-edge-colourings add
colour 0, whose class is kept as small as possible.

Both questions are answered by one search: the fewest colour-0 edges needed
to finish a partial colouring. A subgraph is 3-edge-colourable exactly when
that number is zero.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations

from .graph import EdgeInducedSubgraph, EdgeSet, Graph, iter_bits

DEFAULT_CACHE_SIZE = 2 ** 20

ZERO = 8  # vertex-mask bit for colour 0; bits 0..2 stand for colours 1..3

_POP = tuple(bin(i).count("1") for i in range(16))
_COLOUR_BITS = tuple(tuple(b for b in range(3) if avail >> b & 1) for avail in range(8))
# each permutation of colours 1..3 acting on a 4-bit vertex mask (colour 0 fixed)
_PERMS = tuple(
    tuple(sum(1 << p[b] for b in range(3) if mask >> b & 1) | (mask & ZERO) for mask in range(16))
    for p in permutations(range(3))
)


@dataclass(frozen=True)
class Colouring:
    """A proper edge colouring of the subgraph ``scope`` of ``host``."""

    host: Graph
    scope: EdgeSet
    colour_of: dict[int, int]

    @cached_property
    def classes(self) -> tuple[EdgeSet, EdgeSet, EdgeSet, EdgeSet]:
        bits = [0, 0, 0, 0]
        for e, c in self.colour_of.items():
            bits[c] |= 1 << e
        m = self.host.n_edges
        return tuple(EdgeSet(b, m) for b in bits)  # type: ignore[return-value]

    def is_proper(self) -> bool:
        if set(self.colour_of) != set(self.scope):
            return False
        seen: set[tuple[int, int]] = set()
        for e, c in self.colour_of.items():
            if c not in (0, 1, 2, 3):
                return False
            for v in self.host.edges[e]:
                if (v, c) in seen:
                    return False
                seen.add((v, c))
        return True


@dataclass(frozen=True)
class MinimalColouring:
    colouring: Colouring
    conflict_set: EdgeSet


class _LRU:
    """Thread-safe bounded mapping."""

    def __init__(self, maxsize: int) -> None:
        self.maxsize = maxsize
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key, default=None):
        with self._lock:
            try:
                value = self._data[key]
            except KeyError:
                self.misses += 1
                return default
            self._data.move_to_end(key)
            self.hits += 1
            return value

    def put(self, key, value) -> None:
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            if self.maxsize and len(self._data) > self.maxsize:
                self._data.popitem(last=False)

    def __len__(self) -> int:
        return len(self._data)


class ColouringOracle:
    """Memoised edge-colouring search bound to one subcubic host graph.

    The search works on the uncoloured edges of a partial colouring. Edges
    with at most two blocking neighbours (coloured with 1..3 or uncoloured)
    are set aside, since they can always be coloured last. The rest splits
    into connected components that are solved independently; each result
    is cached under the component's edge bits plus the colours already
    present at its vertices, with colours 1..3 put in canonical order.
    Inside a component the most constrained edge is branched on first
    (ties by edge index).

    Results for whole queries are therefore memoised by their edge bits,
    and the cache is bounded (LRU) and safe to share between threads.
    """

    def __init__(self, graph: Graph, cache_size: int = DEFAULT_CACHE_SIZE) -> None:
        graph.require_subcubic()
        self.graph = graph
        self._ends = graph.edges
        self._nbrs = graph.edge_neighbour_bits
        self._vbits = tuple((1 << u) | (1 << v) for u, v in graph.edges)
        self._cache = _LRU(cache_size)
        self._comp_vertices: dict[int, tuple[int, ...]] = {}
        self._count_lock = threading.Lock()
        self.calls = 0

    # -- public surface -------------------------------------------------

    def is_colourable(self, scope: EdgeInducedSubgraph | EdgeSet | int) -> bool:
        bits = _bits(scope)
        with self._count_lock:
            self.calls += 1
        return self._solve_set(bits, self._fresh_used(), 0) == 0

    def is_conflicting(self, scope: EdgeInducedSubgraph | EdgeSet | int) -> bool:
        return not self.is_colourable(scope)

    def find_3_colouring(self, scope: EdgeInducedSubgraph | EdgeSet | int) -> Colouring | None:
        bits = _bits(scope)
        if not self.is_colourable(bits):
            return None
        colours = self._build(bits, 0)
        return Colouring(self.graph, EdgeSet(bits, self.graph.n_edges), colours)

    def min_zero_count(self, scope: EdgeInducedSubgraph | EdgeSet | int, budget: int) -> int:
        """Fewest colour-0 edges in a proper 4-edge-colouring of ``scope``, or ``budget + 1`` if above budget."""
        return self._solve_set(_bits(scope), self._fresh_used(), budget)

    def min_class0_colouring(self, scope: EdgeInducedSubgraph | EdgeSet | int | None = None) -> MinimalColouring:
        """Proper 4-edge-colouring minimising the colour-0 class.

        Iterative deepening on the colour-0 budget k = 0, 1, 2, ...; colour 0
        is an ordinary colour in the search, allowed at most k times.
        """
        g = self.graph
        bits = g.all_edges().bits if scope is None else _bits(scope)
        for k in range(bits.bit_count() + 1):
            if self._solve_set(bits, self._fresh_used(), k) <= k:
                colours = self._build(bits, k)
                col = Colouring(g, EdgeSet(bits, g.n_edges), colours)
                return MinimalColouring(col, col.classes[0])
        raise AssertionError("unreachable: colouring every edge 0 is never required")

    def enumerate_minimal_colourings(self, r: int, cap: int = 0) -> list[MinimalColouring]:
        """One witness colouring per distinct colour-0 class of size ``r``.

        Colour 0 is a matching in any proper colouring, so the candidates
        are matchings of size ``r`` whose removal leaves a 3-colourable
        graph. Output is ordered by conflict-set bits; ``cap`` truncates it
        (0 means no limit). An ``r`` below the true resistance yields ``[]``.
        """
        g = self.graph
        full = g.all_edges().bits
        out: list[MinimalColouring] = []
        for mask in self.colourable_deletions(r):
            colours = self._build(full & ~mask, 0)
            for e in iter_bits(mask):
                colours[e] = 0
            col = Colouring(g, g.all_edges(), dict(sorted(colours.items())))
            out.append(MinimalColouring(col, EdgeSet(mask, g.n_edges)))
            if cap and len(out) >= cap:
                break
        return out

    def shrink(self, bits: int, protect: int = 0, known: list[int] | None = None) -> int:
        """Deletion-based core extraction on a conflicting edge set.

        Edges are visited once in ascending index order; an edge is dropped
        when the remainder is still conflicting. Edges in ``protect`` are
        never dropped. ``known`` lists edge sets already known to be
        conflicting, which short-circuits oracle calls for supersets.
        """
        for e in iter_bits(bits & ~protect):
            trial = bits & ~(1 << e)
            if known and any(k & trial == k for k in known):
                bits = trial
            elif not self.is_colourable(trial):
                bits = trial
        return bits

    def colourable_deletions(self, size: int, vertex_mode: bool = False,
                             first_only: bool = False, cores: list[int] | None = None) -> list[int]:
        """All deletion sets of exactly ``size`` items leaving a 3-colourable graph.

        Items are edges forming a matching (``vertex_mode=False``) or
        vertices. The search branches on a conflicting core of the current
        remainder: any valid deletion must touch every core, and once an item
        has been tried it is excluded from later sibling branches, so each
        deletion set is produced once. Results are bitmasks (over edges or
        vertices), sorted ascending.
        """
        g = self.graph
        full = g.all_edges().bits
        cores = [] if cores is None else cores
        nbrs = g.edge_neighbour_bits
        incident = g.incident_bits
        ends = g.edges
        out: list[int] = []

        def removed_edges(items: int) -> int:
            if not vertex_mode:
                return items
            bits = 0
            for v in iter_bits(items):
                bits |= incident[v]
            return bits

        def extensions(items: int, left: int, allowed: int):
            if left == 0:
                yield items
                return
            while allowed and allowed.bit_count() >= left:
                low = allowed & -allowed
                allowed ^= low
                x = low.bit_length() - 1
                nxt = allowed if vertex_mode else allowed & ~nbrs[x]
                yield from extensions(items | low, left - 1, nxt)

        def rec(items: int, left: int, allowed: int) -> bool:
            rest = full & ~removed_edges(items)
            core = next((c for c in cores if c & rest == c), None)
            if core is None:
                if self.is_colourable(rest):
                    for ext in extensions(items, left, allowed):
                        out.append(ext)
                        if first_only:
                            return True
                    return False
                core = self.shrink(rest, known=cores)
                cores.append(core)
            if left == 0:
                return False
            if vertex_mode:
                touch = 0
                for e in iter_bits(core):
                    u, v = ends[e]
                    touch |= (1 << u) | (1 << v)
                branch = touch & allowed
            else:
                branch = core & allowed
            for x in iter_bits(branch):
                low = 1 << x
                allowed &= ~low
                nxt = allowed if vertex_mode else allowed & ~nbrs[x]
                if rec(items | low, left - 1, nxt) and first_only:
                    return True
            return False

        pool = (1 << g.n_vertices) - 1 if vertex_mode else full
        rec(0, size, pool)
        return sorted(set(out))

    @property
    def cache_info(self) -> dict[str, int]:
        return {"hits": self._cache.hits, "misses": self._cache.misses, "size": len(self._cache)}

    # -- search ------------------------------------------------------------

    def _fresh_used(self) -> list[int]:
        return [0] * self.graph.n_vertices

    def _strip(self, bits: int, used: list[int], seed: int = -1) -> tuple[int, list[int]]:
        """Set aside edges that can always be coloured last; ``seed`` limits the first sweep."""
        ends = self._ends
        nbrs = self._nbrs
        removed: list[int] = []
        work = bits & seed
        while work:
            low = work & -work
            work ^= low
            if not bits & low:
                continue
            e = low.bit_length() - 1
            u, v = ends[e]
            near = nbrs[e] & bits
            if near.bit_count() + _POP[(used[u] | used[v]) & 7] <= 2:
                bits ^= low
                removed.append(e)
                work |= near
        return bits, removed

    def _components(self, bits: int) -> list[int]:
        nbrs = self._nbrs
        comps = []
        while bits:
            comp = frontier = bits & -bits
            while frontier:
                grow = 0
                while frontier:
                    low = frontier & -frontier
                    frontier ^= low
                    grow |= nbrs[low.bit_length() - 1]
                frontier = grow & bits & ~comp
                comp |= frontier
            comps.append(comp)
            bits &= ~comp
        return comps

    def _vertices(self, comp: int) -> tuple[int, ...]:
        verts = self._comp_vertices.get(comp)
        if verts is None:
            vbits = 0
            rest = comp
            while rest:
                low = rest & -rest
                rest ^= low
                vbits |= self._vbits[low.bit_length() - 1]
            verts = tuple(iter_bits(vbits))
            if self._cache.maxsize and len(self._comp_vertices) >= self._cache.maxsize:
                self._comp_vertices.clear()
            self._comp_vertices[comp] = verts
        return verts

    def _key(self, comp: int, used: list[int]) -> tuple:
        boundary = [(v, used[v]) for v in self._vertices(comp) if used[v]]
        if not boundary:
            return (comp,)
        masks = [m for _, m in boundary]
        best = min([tuple([perm[m] for m in masks]) for perm in _PERMS])
        return (comp, tuple([v for v, _ in boundary]), best)

    def _solve_set(self, bits: int, used: list[int], budget: int, seed: int = -1) -> int:
        """Fewest zeros to colour ``bits`` given vertex masks ``used``, capped at ``budget + 1``.

        ``seed`` may name the only edges whose strip status can have changed
        (the neighbours of a freshly coloured edge of a stripped component).
        """
        kernel, _ = self._strip(bits, used, seed)
        total = 0
        for comp in sorted(self._components(kernel), key=int.bit_count):
            total += self._solve_comp(comp, used, budget - total)
            if total > budget:
                return budget + 1
        return total

    def _solve_comp(self, comp: int, used: list[int], budget: int) -> int:
        key = self._key(comp, used)
        hit = self._cache.get(key)
        if hit is not None:
            value, exact = hit
            if exact:
                return min(value, budget + 1)
            if value > budget:
                return budget + 1
        value = self._branch(comp, used, budget)
        self._cache.put(key, (value, value <= budget))
        return value

    def _pick(self, comp: int, used: list[int]) -> tuple[int, int, bool]:
        ends = self._ends
        best, best_avail, best_zero, best_n = -1, 0, False, 5
        for e in iter_bits(comp):
            u, v = ends[e]
            taken = used[u] | used[v]
            avail = 7 & ~taken
            zero_ok = not taken & ZERO
            n = _POP[avail] + zero_ok
            if n < best_n:
                best, best_avail, best_zero, best_n = e, avail, zero_ok, n
                if n <= 1:
                    break
        return best, best_avail, best_zero

    def _branch(self, comp: int, used: list[int], budget: int) -> int:
        e, avail, zero_ok = self._pick(comp, used)
        u, v = self._ends[e]
        rest = comp & ~(1 << e)
        near = self._nbrs[e]
        best = budget + 1
        for b in _COLOUR_BITS[avail]:
            bit = 1 << b
            used[u] |= bit
            used[v] |= bit
            cost = self._solve_set(rest, used, min(budget, best - 1), near)
            used[u] ^= bit
            used[v] ^= bit
            if cost < best:
                best = cost
                if best == 0:
                    return 0
        if zero_ok and best > 1 and budget >= 1:
            used[u] |= ZERO
            used[v] |= ZERO
            cost = 1 + self._solve_set(rest, used, min(budget, best - 1) - 1, near)
            used[u] ^= ZERO
            used[v] ^= ZERO
            best = min(best, cost)
        return min(best, budget + 1)

    def _build(self, bits: int, budget: int) -> dict[int, int]:
        """Reconstruct a colouring achieving the optimum found by the search (must be <= budget)."""
        used = self._fresh_used()
        colours: dict[int, int] = {}
        self._build_set(bits, used, budget, colours)
        return dict(sorted(colours.items()))

    def _build_set(self, bits: int, used: list[int], budget: int, colours: dict[int, int],
                   seed: int = -1) -> None:
        kernel, removed = self._strip(bits, used, seed)
        for comp in sorted(self._components(kernel), key=int.bit_count):
            target = self._solve_comp(comp, used, budget)
            if target > budget:
                raise AssertionError("reconstruction asked for an infeasible budget")
            self._build_comp(comp, used, target, colours)
            budget -= target
        ends = self._ends
        for e in reversed(removed):
            u, v = ends[e]
            b = _COLOUR_BITS[7 & ~(used[u] | used[v])][0]
            used[u] |= 1 << b
            used[v] |= 1 << b
            colours[e] = b + 1

    def _build_comp(self, comp: int, used: list[int], target: int, colours: dict[int, int]) -> None:
        e, avail, zero_ok = self._pick(comp, used)
        u, v = self._ends[e]
        rest = comp & ~(1 << e)
        near = self._nbrs[e]
        options = [(1 << b, b + 1, 0) for b in _COLOUR_BITS[avail]]
        if zero_ok and target >= 1:
            options.append((ZERO, 0, 1))
        for bit, colour, cost in options:
            used[u] |= bit
            used[v] |= bit
            if self._solve_set(rest, used, target - cost, near) == target - cost:
                colours[e] = colour
                self._build_set(rest, used, target - cost, colours, near)
                return
            used[u] ^= bit
            used[v] ^= bit
        raise AssertionError("no branch reproduces the optimum")


def matchings(g: Graph, size: int, allowed: int | None = None):
    """Yield every matching of ``size`` edges (within ``allowed``) as an ascending index tuple."""
    nbrs = g.edge_neighbour_bits
    pool = g.all_edges().bits if allowed is None else allowed
    chosen: list[int] = []

    def rec(candidates: int, need: int):
        if need == 0:
            yield tuple(chosen)
            return
        while candidates and candidates.bit_count() >= need:
            low = candidates & -candidates
            e = low.bit_length() - 1
            candidates ^= low
            chosen.append(e)
            yield from rec(candidates & ~nbrs[e], need - 1)
            chosen.pop()

    yield from rec(pool, size)


def _bits(scope: EdgeInducedSubgraph | EdgeSet | int) -> int:
    if isinstance(scope, int):
        return scope
    if isinstance(scope, EdgeInducedSubgraph):
        return scope.edge_set.bits
    return scope.bits


def plain_is_colourable(g: Graph, bits: int) -> bool:
    """Reference 3-edge-colourability test: plain backtracking in edge-index order.

    Shares nothing with :class:`ColouringOracle` (no reductions, caching or
    ordering heuristics), so the two can check each other.
    """
    order = list(iter_bits(bits))
    colour: dict[int, int] = {}
    nbrs = g.edge_neighbour_bits

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        taken = {colour[f] for f in iter_bits(nbrs[e]) if f in colour}
        for c in (1, 2, 3):
            if c not in taken:
                colour[e] = c
                if rec(i + 1):
                    return True
                del colour[e]
        return False

    return rec(0)


def brute_force_resistance(g: Graph) -> int:
    """Smallest k such that deleting some k edges (any edges, not only matchings) leaves a 3-colourable graph."""
    full = g.all_edges().bits
    for k in range(g.n_edges + 1):
        for combo in combinations(range(g.n_edges), k):
            mask = full
            for e in combo:
                mask &= ~(1 << e)
            if plain_is_colourable(g, mask):
                return k
    raise AssertionError("unreachable")
