"""Structural laws of factor graphs, as machine-checkable named predicates.

Every guarantee the library makes about a factor graph ``phi`` of a split
graph ``S`` is a named check here.  A check never raises on a violated
law; it returns a failed :class:`CheckResult` whose witness pinpoints the
offending pair, path, or cycle so the single check can be re-run against
it.  Exceptions are reserved for malformed inputs (precondition errors).

The laws, by check name:

- ``builders-agree``: formula and move-counting builders give the same map.
- ``size-equals-switch-degree``: total multiplicity = number of 2-switches.
- ``nesting-iff-zero``: multiplicity 0 with d_v <= d_u iff N_v is contained
  in N_u (every ordered pair).
- ``equality-iff-zero-equal-degrees``: multiplicity 0 with equal degrees iff
  equal neighborhoods.
- ``twins-equal-phi-rows``: equal neighborhoods force equal factor-graph
  neighbor sets.
- ``simple-edge-balanced``: multiplicity 1 forces equal degrees and single
  private neighbors on both sides.
- ``path-max-at-ends``: on an induced path the degree maximum is attained
  within the first two or last two positions.
- ``path-inclusion-chain``: head-maximal orientation: d_i >= d_j and
  N_i contains N_j whenever j >= i+2.
- ``path-union-collapse``: head-maximal orientation: N_i contains the union
  of all N_j with j >= i+2, and the whole union is N_1 with N_2.
- ``path-parity-monotone``: head-maximal orientation: degrees are
  non-increasing along each parity class.
- ``path-min-at-tail``: head-maximal orientation: the degree minimum is
  attained within the last two positions.
- ``p5-max-not-middle``: no induced 5-vertex path has its degree maximum at
  the middle vertex.
- ``first-edge-divisible-by-union-excess``: head-maximal orientation: the
  size of the union of path neighborhoods minus the head degree divides the
  first edge multiplicity.
- ``first-edge-divisible-by-clique-excess``: when phi IS the path and K is
  the union of all I-neighborhoods: |K| minus the head degree divides the
  first edge multiplicity.
- ``union-sqrt-bound``: the union excess squared is at most the first edge
  multiplicity.
- ``cycle-length-bound``: every induced cycle has length 3 or 4.
- ``simple-edges-terminal``: on an induced path, multiplicity-1 edges occur
  only in first or last position.
- ``p4-no-simple-middle``: no induced 4-path carries a multiplicity-1 middle
  edge (reported per degree pattern: peak, valley, ascent).
- ``p3-pendant-difference``: induced 3-path, d_1 <= d_2, last edge simple:
  N_1 - N_2 is a single vertex and equals N_3 - N_2.
- ``p3-tail-decomposition``: same hypothesis: N_3 is that vertex plus
  N_2 with N_3 shared part, and is a proper subset of N_1 union N_2.
- ``p3-first-multiplicity``: same hypothesis: the first edge multiplicity is
  exactly d_2 - d_1 + 1.
- ``diameter-bound``: a connected phi has diameter at most
  ceil((size + 1) / 2); disconnected instances pass with a note.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .corpus import CorpusSpec, corpus_size, generate
from .factor import FactorGraph, build_by_enumeration, build_by_formula
from .graph import GraphError, SplitGraph, bits
from .switches import two_switch_degree

BUILDERS_AGREE = "builders-agree"
SIZE_DEGREE = "size-equals-switch-degree"
NESTING_IFF = "nesting-iff-zero"
EQUALITY_IFF = "equality-iff-zero-equal-degrees"
TWIN_ROWS = "twins-equal-phi-rows"
SIMPLE_BALANCED = "simple-edge-balanced"
PATH_MAX = "path-max-at-ends"
PATH_INCLUSION = "path-inclusion-chain"
PATH_UNION = "path-union-collapse"
PATH_PARITY = "path-parity-monotone"
PATH_MIN = "path-min-at-tail"
P5_MIDDLE = "p5-max-not-middle"
DIV_UNION = "first-edge-divisible-by-union-excess"
DIV_CLIQUE = "first-edge-divisible-by-clique-excess"
SQRT_BOUND = "union-sqrt-bound"
CYCLE_BOUND = "cycle-length-bound"
SIMPLE_TERMINAL = "simple-edges-terminal"
P4_MIDDLE = "p4-no-simple-middle"
P3_PENDANT = "p3-pendant-difference"
P3_DECOMP = "p3-tail-decomposition"
P3_MULT = "p3-first-multiplicity"
DIAMETER_BOUND = "diameter-bound"

CHECK_NAMES: tuple[str, ...] = (
    BUILDERS_AGREE,
    SIZE_DEGREE,
    NESTING_IFF,
    EQUALITY_IFF,
    TWIN_ROWS,
    SIMPLE_BALANCED,
    PATH_MAX,
    PATH_INCLUSION,
    PATH_UNION,
    PATH_PARITY,
    PATH_MIN,
    P5_MIDDLE,
    DIV_UNION,
    DIV_CLIQUE,
    SQRT_BOUND,
    CYCLE_BOUND,
    SIMPLE_TERMINAL,
    P4_MIDDLE,
    P3_PENDANT,
    P3_DECOMP,
    P3_MULT,
    DIAMETER_BOUND,
)


@dataclass(frozen=True)
class InducedPath:
    """Vertex sequence of an induced path in the factor graph's simple view.

    Consecutive multiplicities are positive, all other pairs zero.  The
    canonical orientation puts the endpoint with the smaller internal
    index first.
    """

    vertices: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class InducedCycle:
    """Canonical rotation: starts at the minimum-index vertex, second
    vertex smaller than the last."""

    vertices: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None
    note: str | None = None

    def line(self) -> str:
        tail = f" {self.witness}" if (not self.passed and self.witness) else ""
        return f"CHECK {self.name} {'PASS' if self.passed else 'FAIL'}{tail}"


@dataclass
class VerificationReport:
    instance: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


# -- induced path / cycle machinery ------------------------------------------------


def is_induced_path(phi: FactorGraph, vertices: Sequence[str]) -> bool:
    seq = [phi.index_of(v) for v in vertices]
    n = len(seq)
    if n < 2 or len(set(seq)) != n:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            positive = phi.multiplicity_by_index(seq[i], seq[j]) > 0
            if positive != (j == i + 1):
                return False
    return True


def is_induced_cycle(phi: FactorGraph, vertices: Sequence[str]) -> bool:
    seq = [phi.index_of(v) for v in vertices]
    n = len(seq)
    if n < 3 or len(set(seq)) != n:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            consecutive = (j == i + 1) or (i == 0 and j == n - 1)
            if (phi.multiplicity_by_index(seq[i], seq[j]) > 0) != consecutive:
                return False
    return True


def _induced_path_indices(nbr: tuple[int, ...], max_len: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    n = len(nbr)
    for s in range(n):
        stack: list[tuple[tuple[int, ...], int, int]] = [((s,), 1 << s, 0)]
        while stack:
            path, used, forbid = stack.pop()
            if len(path) >= max_len:
                continue
            last = path[-1]
            for w in bits(nbr[last] & ~used & ~forbid):
                grown = path + (w,)
                if s < w:
                    out.append(grown)
                stack.append((grown, used | (1 << w), forbid | nbr[last]))
    return out


def _induced_cycle_indices(nbr: tuple[int, ...]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    n = len(nbr)
    for s in range(n):
        above = ~((1 << (s + 1)) - 1)
        stack: list[tuple[tuple[int, ...], int, int]] = [
            ((s, w), (1 << s) | (1 << w), 0) for w in bits(nbr[s] & above)
        ]
        while stack:
            path, used, forbid = stack.pop()
            last = path[-1]
            for w in bits(nbr[last] & above & ~used & ~forbid):
                if nbr[w] >> s & 1:
                    # closing edge; a longer walk through w would chord back to s
                    if len(path) >= 2 and path[1] < w:
                        out.append(path + (w,))
                    continue
                stack.append((path + (w,), used | (1 << w), forbid | nbr[last]))
    return out


def enumerate_induced_paths(phi: FactorGraph, max_len: int | None = None) -> list[InducedPath]:
    """All induced paths on 2..max_len vertices, one canonical orientation each."""
    n = len(phi.vertices)
    if max_len is None:
        max_len = max(2, n)
    if max_len < 2:
        raise GraphError(f"max_len must be at least 2, got {max_len}")
    verts = phi.vertices
    return [
        InducedPath(tuple(verts[i] for i in seq))
        for seq in _induced_path_indices(phi.neighbor_masks(), min(max_len, n))
    ]


def enumerate_induced_cycles(phi: FactorGraph) -> list[InducedCycle]:
    """All induced cycles, one canonical rotation/direction each."""
    verts = phi.vertices
    return [
        InducedCycle(tuple(verts[i] for i in seq))
        for seq in _induced_cycle_indices(phi.neighbor_masks())
    ]


# -- check context ------------------------------------------------------------------


class _Context:
    """Index-level view of one (S, phi) instance, built once per verification."""

    __slots__ = ("S", "phi", "labels", "deg", "nmask", "mult", "nbr", "k_is_union", "k_size")

    def __init__(self, S: SplitGraph, phi: FactorGraph):
        if set(phi.vertices) != set(S.independent):
            raise GraphError("factor graph vertices do not match the independent set")
        self.S = S
        self.phi = phi
        self.labels = phi.vertices
        self.deg = [S.degree(v) for v in self.labels]
        self.nmask = [S.adj_masks[S.index_of(v)] for v in self.labels]
        self.mult = phi.multiplicity_by_index
        self.nbr = phi.neighbor_masks()
        self.k_size = S.k_size
        union = 0
        for m in self.nmask:
            union |= m
        self.k_is_union = union == (1 << S.k_size) - 1

    def word(self, seq: Iterable[int]) -> str:
        return " ".join(self.labels[i] for i in seq)


def _as_index_path(ctx: _Context, path: Sequence[str] | InducedPath) -> tuple[int, ...]:
    vertices = path.vertices if isinstance(path, InducedPath) else tuple(path)
    if not is_induced_path(ctx.phi, vertices):
        raise GraphError(f"not an induced path: {' '.join(vertices)}")
    return tuple(ctx.phi.index_of(v) for v in vertices)


# -- per-path predicates (index level) ----------------------------------------------


def _eq_max_result(ctx: _Context, p: tuple[int, ...]) -> tuple[bool, str | None]:
    d = [ctx.deg[v] for v in p]
    top = max(d)
    if top in (d[0], d[1], d[-2], d[-1]):
        return True, None
    return False, f"path {ctx.word(p)}; max degree {top} only at interior positions"


def _head_max_orientations(ctx: _Context, p: tuple[int, ...]) -> list[tuple[int, ...]]:
    d = [ctx.deg[v] for v in p]
    top = max(d)
    out = []
    if d[0] == top:
        out.append(p)
    if d[-1] == top and p[::-1] != p:
        out.append(p[::-1])
    return out


def _oriented_item_results(ctx: _Context, seq: tuple[int, ...]) -> dict[str, tuple[bool, str | None]]:
    """Items for one orientation whose head degree attains the path max."""
    deg, nmask = ctx.deg, ctx.nmask
    d = [deg[v] for v in seq]
    N = [nmask[v] for v in seq]
    n = len(seq)
    where = f"path {ctx.word(seq)}"
    res: dict[str, tuple[bool, str | None]] = {}

    ok: bool = True
    wit: str | None = None
    for i in range(n - 2):
        for j in range(i + 2, n):
            if d[i] < d[j] or (N[j] & ~N[i]):
                ok, wit = False, f"{where}; positions {i + 1} vs {j + 1}"
                break
        if not ok:
            break
    res[PATH_INCLUSION] = (ok, wit)

    suffix = [0] * (n + 2)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] | N[j]
    ok, wit = True, None
    for i in range(n - 2):
        if suffix[i + 2] & ~N[i]:
            ok, wit = False, f"{where}; position {i + 1} misses later neighbors"
            break
    if ok and suffix[0] != (N[0] | N[1]):
        ok, wit = False, f"{where}; union exceeds the first two neighborhoods"
    res[PATH_UNION] = (ok, wit)

    ok, wit = True, None
    for t in range(n - 2):
        if d[t] < d[t + 2]:
            ok, wit = False, f"{where}; positions {t + 1} vs {t + 3}"
            break
    res[PATH_PARITY] = (ok, wit)

    ok = min(d) == min(d[-2], d[-1])
    res[PATH_MIN] = (ok, None if ok else f"{where}; minimum not within last two positions")
    return res


def _oriented_divisibility_results(
    ctx: _Context, seq: tuple[int, ...]
) -> dict[str, tuple[bool, str | None]]:
    """Divisibility laws for one head-maximal orientation."""
    where = f"path {ctx.word(seq)}"
    union = 0
    for v in seq:
        union |= ctx.nmask[v]
    d_head = ctx.deg[seq[0]]
    excess = union.bit_count() - d_head
    first = ctx.mult(seq[0], seq[1])
    res: dict[str, tuple[bool, str | None]] = {}
    if excess == 0:
        # impossible while first > 0; reaching this means the instance is inconsistent
        bad = f"{where}; degenerate divisor (internal inconsistency)"
        res[DIV_UNION] = (False, bad)
        res[SQRT_BOUND] = (False, bad)
    else:
        res[DIV_UNION] = (
            first % excess == 0,
            f"{where}; union excess {excess} does not divide first multiplicity {first}",
        )
        res[SQRT_BOUND] = (
            excess * excess <= first,
            f"{where}; union excess {excess} exceeds sqrt of first multiplicity {first}",
        )
    phi_is_path = (
        len(seq) == len(ctx.labels)
        and ctx.phi.simple_edge_count() == len(seq) - 1
    )
    if phi_is_path and ctx.k_is_union:
        clique_excess = ctx.k_size - d_head
        if clique_excess == 0:
            res[DIV_CLIQUE] = (False, f"{where}; degenerate divisor (internal inconsistency)")
        else:
            res[DIV_CLIQUE] = (
                first % clique_excess == 0,
                f"{where}; clique excess {clique_excess} does not divide first multiplicity {first}",
            )
    return res


def _simple_terminal_result(ctx: _Context, p: tuple[int, ...]) -> tuple[bool, str | None]:
    n = len(p)
    for t in range(n - 1):
        if t != 0 and t != n - 2 and ctx.mult(p[t], p[t + 1]) == 1:
            return False, f"path {ctx.word(p)}; interior edge {t + 1} has multiplicity 1"
    return True, None


def _p4_pattern_results(ctx: _Context, p: tuple[int, ...]) -> tuple[bool, str | None]:
    if len(p) != 4:
        return True, None
    deg = ctx.deg
    for seq in (p, p[::-1]):
        if ctx.mult(seq[1], seq[2]) != 1:
            continue
        d1, d2, d4 = deg[seq[0]], deg[seq[1]], deg[seq[3]]
        if d1 <= d2 >= d4:
            return False, f"path {ctx.word(seq)}; simple middle edge, peak degrees"
        if d1 >= d2 <= d4:
            return False, f"path {ctx.word(seq)}; simple middle edge, valley degrees"
        if d1 <= d2 <= d4:
            return False, f"path {ctx.word(seq)}; simple middle edge, ascending degrees"
    return True, None


def _p3_results(ctx: _Context, p: tuple[int, ...]) -> dict[str, tuple[bool, str | None]]:
    res: dict[str, tuple[bool, str | None]] = {}
    if len(p) != 3:
        return res
    deg, nmask = ctx.deg, ctx.nmask
    for seq in (p, p[::-1]):
        a, b, c = seq
        if deg[a] > deg[b] or ctx.mult(b, c) != 1:
            continue
        where = f"path {ctx.word(seq)}"
        Na, Nb, Nc = nmask[a], nmask[b], nmask[c]
        priv_a = Na & ~Nb
        priv_c = Nc & ~Nb
        ok = priv_a.bit_count() == 1 and priv_a == priv_c
        _accumulate(res, P3_PENDANT, ok, f"{where}; head/tail private neighbors differ")
        union_ab = Na | Nb
        decomposed = Nc == (priv_a | (Nb & Nc))
        proper = (Nc & ~union_ab) == 0 and Nc != union_ab
        _accumulate(res, P3_DECOMP, decomposed and proper,
                    f"{where}; tail neighborhood fails the pendant decomposition")
        _accumulate(res, P3_MULT, ctx.mult(a, b) == deg[b] - deg[a] + 1,
                    f"{where}; first multiplicity differs from degree gap plus one")
    return res


def _accumulate(
    res: dict[str, tuple[bool, str | None]], name: str, ok: bool, witness: str
) -> None:
    prev = res.get(name)
    if prev is not None and not prev[0]:
        return
    res[name] = (ok, None if ok else witness)


# -- public checks -------------------------------------------------------------------


def _result_map_to_list(
    names: Sequence[str], collected: dict[str, tuple[bool, str | None]]
) -> list[CheckResult]:
    out = []
    for name in names:
        ok, wit = collected.get(name, (True, None))
        out.append(CheckResult(name, ok, wit))
    return out


def check_path_structure(
    S: SplitGraph, path: Sequence[str] | InducedPath, phi: FactorGraph | None = None
) -> list[CheckResult]:
    """Degree/neighborhood laws along one induced path.

    The max-position law is orientation-free; the four item laws are
    asserted for every orientation whose head degree attains the path
    maximum (there may be zero, one, or two such orientations).
    """
    phi = build_by_formula(S) if phi is None else phi
    ctx = _Context(S, phi)
    p = _as_index_path(ctx, path)
    collected: dict[str, tuple[bool, str | None]] = {}
    ok, wit = _eq_max_result(ctx, p)
    collected[PATH_MAX] = (ok, wit)
    for seq in _head_max_orientations(ctx, p):
        for name, pair in _oriented_item_results(ctx, seq).items():
            _accumulate(collected, name, pair[0], pair[1] or "")
    return _result_map_to_list(
        (PATH_MAX, PATH_INCLUSION, PATH_UNION, PATH_PARITY, PATH_MIN), collected
    )


def check_divisibility(
    S: SplitGraph, path: Sequence[str] | InducedPath, phi: FactorGraph | None = None
) -> list[CheckResult]:
    """Divisibility laws for one induced path, on head-maximal orientations."""
    phi = build_by_formula(S) if phi is None else phi
    ctx = _Context(S, phi)
    p = _as_index_path(ctx, path)
    collected: dict[str, tuple[bool, str | None]] = {}
    for seq in _head_max_orientations(ctx, p):
        for name, pair in _oriented_divisibility_results(ctx, seq).items():
            _accumulate(collected, name, pair[0], pair[1] or "")
    return _result_map_to_list((DIV_UNION, DIV_CLIQUE, SQRT_BOUND), collected)


def check_p5_forbidden(
    S: SplitGraph,
    phi: FactorGraph | None = None,
    paths: Sequence[InducedPath] | None = None,
) -> CheckResult:
    """No induced 5-vertex path carries its degree maximum at the middle."""
    phi = build_by_formula(S) if phi is None else phi
    ctx = _Context(S, phi)
    if paths is None:
        paths = enumerate_induced_paths(phi, max_len=min(5, max(2, len(phi.vertices))))
    for path in paths:
        if len(path.vertices) != 5:
            continue
        p = tuple(phi.index_of(v) for v in path.vertices)
        d = [ctx.deg[v] for v in p]
        if d[2] == max(d):
            return CheckResult(
                P5_MIDDLE, False, f"path {ctx.word(p)}; middle degree equals the maximum"
            )
    return CheckResult(P5_MIDDLE, True)


def check_cycle_bound(phi: FactorGraph) -> CheckResult:
    """Every induced cycle has length 3 or 4."""
    for seq in _induced_cycle_indices(phi.neighbor_masks()):
        if len(seq) > 4:
            labels = " ".join(phi.vertices[i] for i in seq)
            return CheckResult(CYCLE_BOUND, False, f"cycle {labels}; length {len(seq)}")
    return CheckResult(CYCLE_BOUND, True)


def check_simple_edge_positions(
    S: SplitGraph,
    phi: FactorGraph | None = None,
    paths: Sequence[InducedPath] | None = None,
) -> list[CheckResult]:
    """Multiplicity-1 edges are terminal on every induced path, with the
    supporting 4-path degree patterns and 3-path pendant laws."""
    phi = build_by_formula(S) if phi is None else phi
    ctx = _Context(S, phi)
    if paths is None:
        paths = enumerate_induced_paths(phi)
    collected: dict[str, tuple[bool, str | None]] = {}
    for path in paths:
        p = tuple(phi.index_of(v) for v in path.vertices)
        ok, wit = _simple_terminal_result(ctx, p)
        _accumulate(collected, SIMPLE_TERMINAL, ok, wit or "")
        ok, wit = _p4_pattern_results(ctx, p)
        _accumulate(collected, P4_MIDDLE, ok, wit or "")
        for name, pair in _p3_results(ctx, p).items():
            _accumulate(collected, name, pair[0], pair[1] or "")
    return _result_map_to_list(
        (SIMPLE_TERMINAL, P4_MIDDLE, P3_PENDANT, P3_DECOMP, P3_MULT), collected
    )


def check_diameter_bound(S: SplitGraph, phi: FactorGraph | None = None) -> CheckResult:
    """Connected factor graphs have diameter <= ceil((size + 1) / 2)."""
    phi = build_by_formula(S) if phi is None else phi
    summary = phi.diameter()
    if summary.empty:
        return CheckResult(DIAMETER_BOUND, True, note="empty factor graph")
    if not summary.connected:
        return CheckResult(DIAMETER_BOUND, True, note="not applicable: disconnected")
    bound = (phi.size() + 2) // 2
    if summary.value <= bound:
        return CheckResult(DIAMETER_BOUND, True)
    return CheckResult(
        DIAMETER_BOUND, False, f"diameter {summary.value} exceeds bound {bound}"
    )


def _pair_results(ctx: _Context) -> list[CheckResult]:
    labels, deg, nmask, nbr = ctx.labels, ctx.deg, ctx.nmask, ctx.nbr
    n = len(labels)
    collected: dict[str, tuple[bool, str | None]] = {}
    equal_pairs = 0
    for a in range(n):
        da, Na = deg[a], nmask[a]
        for b in range(n):
            if a == b:
                continue
            m = ctx.mult(a, b)
            wit = f"pair {labels[a]} {labels[b]}"
            nested = (nmask[b] & ~Na) == 0
            _accumulate(
                collected, NESTING_IFF, (m == 0 and deg[b] <= da) == nested, wit
            )
            if a < b:
                equal = Na == nmask[b]
                if equal:
                    equal_pairs += 1
                _accumulate(
                    collected, EQUALITY_IFF, (m == 0 and da == deg[b]) == equal, wit
                )
                if equal:
                    _accumulate(collected, TWIN_ROWS, nbr[a] == nbr[b], wit)
                if m == 1:
                    balanced = (
                        da == deg[b]
                        and (Na & ~nmask[b]).bit_count() == 1
                        and (nmask[b] & ~Na).bit_count() == 1
                    )
                    _accumulate(collected, SIMPLE_BALANCED, balanced, wit)
    out = _result_map_to_list((NESTING_IFF, EQUALITY_IFF, TWIN_ROWS, SIMPLE_BALANCED), collected)
    if equal_pairs:
        head = out[0]
        out[0] = CheckResult(
            head.name, head.passed, head.witness, note=f"neighborhood-equal-pairs={equal_pairs}"
        )
    return out


def verify_all(
    S: SplitGraph, instance: str | None = None, max_len: int | None = None
) -> VerificationReport:
    """Run every structural check against one split graph.

    Builds the factor graph both ways, checks the builder and size
    identities, the pairwise laws, then every path/cycle law over the
    full induced-path enumeration (capped at ``max_len`` vertices when
    given).
    """
    if instance is None:
        instance = f"splitgraph-k{S.k_size}-i{len(S.independent)}-e{S.edge_count()}"
    phi = build_by_formula(S)
    phi_enum = build_by_enumeration(S)
    checks: list[CheckResult] = [
        CheckResult(
            BUILDERS_AGREE,
            phi == phi_enum,
            None if phi == phi_enum else "formula and enumeration builders disagree",
        ),
        CheckResult(
            SIZE_DEGREE,
            phi.size() == two_switch_degree(S),
            None if phi.size() == two_switch_degree(S) else
            f"size {phi.size()} != switch degree {two_switch_degree(S)}",
        ),
    ]
    ctx = _Context(S, phi)
    checks.extend(_pair_results(ctx))

    paths = enumerate_induced_paths(phi, max_len)
    collected: dict[str, tuple[bool, str | None]] = {}
    p5_failure: tuple[bool, str | None] = (True, None)
    for path in paths:
        p = tuple(phi.index_of(v) for v in path.vertices)
        ok, wit = _eq_max_result(ctx, p)
        _accumulate(collected, PATH_MAX, ok, wit or "")
        for seq in _head_max_orientations(ctx, p):
            for name, pair in _oriented_item_results(ctx, seq).items():
                _accumulate(collected, name, pair[0], pair[1] or "")
            for name, pair in _oriented_divisibility_results(ctx, seq).items():
                _accumulate(collected, name, pair[0], pair[1] or "")
        if len(p) == 5 and p5_failure[0]:
            d = [ctx.deg[v] for v in p]
            if d[2] == max(d):
                p5_failure = (False, f"path {ctx.word(p)}; middle degree equals the maximum")
        ok, wit = _simple_terminal_result(ctx, p)
        _accumulate(collected, SIMPLE_TERMINAL, ok, wit or "")
        ok, wit = _p4_pattern_results(ctx, p)
        _accumulate(collected, P4_MIDDLE, ok, wit or "")
        for name, pair in _p3_results(ctx, p).items():
            _accumulate(collected, name, pair[0], pair[1] or "")

    checks.extend(
        _result_map_to_list(
            (PATH_MAX, PATH_INCLUSION, PATH_UNION, PATH_PARITY, PATH_MIN), collected
        )
    )
    checks.append(CheckResult(P5_MIDDLE, p5_failure[0], p5_failure[1]))
    checks.extend(_result_map_to_list((DIV_UNION, DIV_CLIQUE, SQRT_BOUND), collected))
    checks.append(check_cycle_bound(phi))
    checks.extend(
        _result_map_to_list(
            (SIMPLE_TERMINAL, P4_MIDDLE, P3_PENDANT, P3_DECOMP, P3_MULT), collected
        )
    )
    checks.append(check_diameter_bound(S, phi))
    return VerificationReport(instance, checks)


# -- corpus sweeps -------------------------------------------------------------------


@dataclass(frozen=True)
class SweepSummary:
    instances: int
    failed: tuple[tuple[str, tuple[CheckResult, ...]], ...]

    @property
    def failures(self) -> int:
        return len(self.failed)

    @property
    def ok(self) -> bool:
        return not self.failed


def _sweep_range(
    spec: CorpusSpec, start: int, stop: int, max_len: int | None
) -> tuple[int, list[tuple[str, tuple[CheckResult, ...]]]]:
    count = 0
    failed: list[tuple[str, tuple[CheckResult, ...]]] = []
    for instance_id, S in generate(spec, start, stop):
        count += 1
        report = verify_all(S, instance=instance_id, max_len=max_len)
        if not report.ok:
            failed.append((instance_id, tuple(report.failures())))
    return count, failed


def _sweep_worker(args: tuple[CorpusSpec, int, int, int | None]):
    return _sweep_range(*args)


def sweep(spec: CorpusSpec, workers: int = 1, max_len: int | None = None) -> SweepSummary:
    """Verify every instance of a corpus; reports merge in index order."""
    total = corpus_size(spec)
    if workers <= 1 or total < 2048:
        count, failed = _sweep_range(spec, 0, total, max_len)
        return SweepSummary(count, tuple(failed))
    import multiprocessing

    chunk = max(256, -(-total // (workers * 4)))
    ranges = [
        (spec, lo, min(lo + chunk, total), max_len) for lo in range(0, total, chunk)
    ]
    instances = 0
    failed_all: list[tuple[str, tuple[CheckResult, ...]]] = []
    with multiprocessing.Pool(workers) as pool:
        for count, failed in pool.map(_sweep_worker, ranges):
            instances += count
            failed_all.extend(failed)
    return SweepSummary(instances, tuple(failed_all))
