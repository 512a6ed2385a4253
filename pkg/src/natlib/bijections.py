"""Bijections between labelled trees, permutations and coloured cycles.

The zigzag construction reads a tree in geometric form as a wiring diagram:
a path enters from the north of a column or the west of a row, moves down or
right, turns at every point of the tree (down becomes right, right becomes
down), and exits south or east.  Border edges are numbered so columns keep
their index and row ``y`` gets ``w_L + w_R - 1 - y``; the map entry -> exit
is the permutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .nat_core import (
    GeometricNat,
    Nat,
    geometric_to_nat,
    nat_to_geometric,
)
from .perms import (
    Permutation,
    TwoColouredCycle,
    cycles as _perm_cycles,
    excedance_profile,
    validate_2cbd,
)
from .trees import (
    EMPTY_LEFT,
    LEAF,
    BinaryTree,
    Empty,
    Node,
    OrderedTree,
)

__all__ = [
    "ZigzagTrace",
    "zigzag_traces",
    "phi",
    "psi",
    "recolour",
    "recolour_inverse",
    "psi_inverse",
    "theta",
    "omega",
    "ce",
    "zeta",
    "zeta_inverse",
]


# --------------------------------------------------------------------------
# Zigzag wiring: phi and psi
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ZigzagTrace:
    """One wire of the zigzag diagram: entry edge, turning points, exit edge."""

    start: int
    points: tuple[tuple[int, int], ...]
    end: int


def _wire(points: frozenset[tuple[int, int]], w_l: int, w_r: int,
          first_column: int) -> list[ZigzagTrace]:
    """All wires through the point set restricted to columns >= first_column."""
    pts = {(y, x) for (y, x) in points if x >= first_column}
    cols: dict[int, list[int]] = {}
    rows: dict[int, list[int]] = {}
    for (y, x) in pts:
        cols.setdefault(x, []).append(y)
        rows.setdefault(y, []).append(x)
    for v in cols.values():
        v.sort()
    for v in rows.values():
        v.sort()

    def row_label(y: int) -> int:
        return w_l + w_r - 1 - y

    def walk(start_label: int, point: tuple[int, int] | None,
             arriving_down: bool) -> ZigzagTrace:
        trace = []
        while point is not None:
            trace.append(point)
            y, x = point
            if arriving_down:
                # turn right: next point east in the row
                nxt = [x2 for x2 in rows.get(y, []) if x2 > x]
                if not nxt:
                    return ZigzagTrace(start_label, tuple(trace), row_label(y))
                point, arriving_down = (y, nxt[0]), False
            else:
                # turn down: next point south in the column
                nxt = [y2 for y2 in cols.get(x, []) if y2 > y]
                if not nxt:
                    return ZigzagTrace(start_label, tuple(trace), x)
                point, arriving_down = (nxt[0], x), True
        raise AssertionError("unreachable")

    traces = []
    for x in range(first_column, w_r):
        # north entry above column x
        top = cols.get(x, [])
        if not top:
            traces.append(ZigzagTrace(x, (), x))
        else:
            traces.append(walk(x, (top[0], x), True))
    for y in range(w_l):
        # west entry left of row y
        first = rows.get(y, [])
        if not first:
            traces.append(ZigzagTrace(row_label(y), (), row_label(y)))
        else:
            traces.append(walk(row_label(y), (y, first[0]), False))
    return traces


def zigzag_traces(t: Nat, keep_first_column: bool = False) -> list[ZigzagTrace]:
    g = nat_to_geometric(t)
    return _wire(g.points, g.w_l, g.w_r, 0 if keep_first_column else 1)


def phi(t: Nat) -> Permutation:
    """Zigzag permutation with the first column deleted.

    A permutation of {1..w_L+w_R-1} whose excedance set is {1..w_R-1}.
    """
    if not isinstance(t, Nat):
        raise ValueError("phi requires a non-empty tree")
    traces = zigzag_traces(t, keep_first_column=False)
    n = t.w_l + t.w_r - 1
    out = [0] * n
    for tr in traces:
        out[tr.start - 1] = tr.end
    return tuple(out)


def psi(t: Nat) -> Permutation:
    """Zigzag map keeping the first column: a single cycle on {0..w_L+w_R-1}.

    Returned in one-line notation, 0-indexed: the i-th entry is the image
    of i.
    """
    if not isinstance(t, Nat):
        raise ValueError("psi requires a non-empty tree")
    traces = zigzag_traces(t, keep_first_column=True)
    n = t.w_l + t.w_r
    out = [0] * n
    for tr in traces:
        out[tr.start] = tr.end
    return tuple(out)


# --------------------------------------------------------------------------
# Recolouring to two-coloured cycles
# --------------------------------------------------------------------------


def recolour(c: Permutation, w_l: int, w_r: int) -> TwoColouredCycle:
    """Replace 0..w_R-1 by blue symbols b(w_R)..b(1) and w_R..w_R+w_L-1 by
    red symbols r(1)..r(w_L) along the cycle."""
    n = w_l + w_r
    if sorted(c) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}")

    def colour(v: int) -> tuple[str, int]:
        if v < w_r:
            return ("b", w_r - v)
        return ("r", v - w_r + 1)

    word = []
    v = 0
    for _ in range(n):
        word.append(colour(v))
        v = c[v]
    if v != 0:
        raise ValueError("input permutation is not a single cycle")
    return TwoColouredCycle(w_l, w_r, tuple(word))


def recolour_inverse(c: TwoColouredCycle) -> Permutation:
    """The numeric single cycle on {0..i+j-1} behind a coloured cycle."""
    w_l, w_r = c.i, c.j

    def number(sym: tuple[str, int]) -> int:
        col, m = sym
        return w_r - m if col == "b" else w_r + m - 1

    out = [0] * (w_l + w_r)
    for idx, sym in enumerate(c.word):
        nxt = c.word[(idx + 1) % len(c.word)]
        out[number(sym)] = number(nxt)
    return tuple(out)


# --------------------------------------------------------------------------
# psi inverse: peeling the bottom row
# --------------------------------------------------------------------------


def _points_from_cycle(succ: dict[int, int], w_l: int, w_r: int) -> set[tuple[int, int]]:
    """Reconstruct the geometric point set from the full zigzag cycle.

    Peels the bottom row: its west wire exits south at the column of the
    leftmost bottom point, and the wires feeding the bottom row from single
    point columns immediately precede the bottom-row label in the cycle.
    """
    if w_l == 1:
        # a single row must fill every column
        return {(0, x) for x in range(w_r)}
    bottom = w_r  # label of the west entry of the bottom row
    lam = succ[bottom]  # column of the leftmost bottom-row point
    pred = {v: k for k, v in succ.items()}
    ds = []
    p = pred[bottom]
    while lam < p < bottom:
        ds.append(p)
        p = pred[p]
    # remove the bottom row and the columns whose only point was there
    removed = set(ds) | {bottom}
    sub_succ: dict[int, int] = {}
    for v in succ:
        if v in removed:
            continue
        nxt = succ[v]
        while nxt in removed:
            nxt = succ[nxt]
        sub_succ[v] = nxt
    kept_cols = [x for x in range(w_r) if x not in ds]

    def renumber(v: int) -> int:
        if v < w_r:
            return kept_cols.index(v)
        return v - len(ds) - 1

    sub = {renumber(v): renumber(nxt) for v, nxt in sub_succ.items()}
    inner = _points_from_cycle(sub, w_l - 1, w_r - len(ds))
    points = {(y, kept_cols[x]) for (y, x) in inner}
    points.add((w_l - 1, lam))
    points.update((w_l - 1, d) for d in ds)
    return points


def psi_inverse(c: TwoColouredCycle) -> Nat:
    """The unique tree T with recolour(psi(T)) = c."""
    bad = validate_2cbd(c)
    if bad:
        raise ValueError("not block-decreasing: " + "; ".join(bad))
    if c.i < 1 or c.j < 1:
        raise ValueError("cycle must contain both colours")
    numeric = recolour_inverse(c)
    succ = {v: numeric[v] for v in range(len(numeric))}
    points = _points_from_cycle(succ, c.i, c.j)
    return geometric_to_nat(GeometricNat(frozenset(points), c.i, c.j))


def theta(c: TwoColouredCycle) -> Permutation:
    """Theta = phi after psi inverse."""
    return phi(psi_inverse(c))


# --------------------------------------------------------------------------
# The involution omega and the CE statistic
# --------------------------------------------------------------------------


def omega(c: TwoColouredCycle) -> TwoColouredCycle:
    """Swap adjacent monochromatic blocks between b(j) and r(1) when their
    number is even; identity when it is odd.  An involution."""
    if c.i == 0 or c.j == 0:
        return c
    word = c.word  # canonical: starts at b(j)
    pos = word.index(("r", 1))
    middle = word[1:pos]
    blocks: list[list[tuple[str, int]]] = []
    for sym in middle:
        if blocks and blocks[-1][-1][0] == sym[0]:
            blocks[-1].append(sym)
        else:
            blocks.append([sym])
    if len(blocks) % 2 == 1:
        return c
    swapped: list[tuple[str, int]] = []
    for a in range(0, len(blocks), 2):
        swapped.extend(blocks[a + 1])
        swapped.extend(blocks[a])
    return TwoColouredCycle(c.i, c.j, (word[0],) + tuple(swapped) + word[pos:])


def ce(sigma: Permutation, i: int, j: int) -> int:
    """CE statistic: 1 + #{u in 1..j-1 : sigma(u) > j}.

    Positions 1..j-1 play the role of columns and values j+1..i+j-1 of
    rows other than the first one; the statistic counts columns mapped to
    such rows, plus one.  Requires sigma of size i+j-1 with excedance set
    exactly {1..j-1}.
    """
    if len(sigma) != i + j - 1:
        raise ValueError(f"expected a permutation of size {i + j - 1}")
    if excedance_profile(sigma) != set(range(1, j)):
        raise ValueError(f"excedance set must be exactly 1..{j - 1}")
    return 1 + sum(1 for u in range(1, j) if sigma[u - 1] > j)


# --------------------------------------------------------------------------
# zeta: binary trees to ordered trees (vertices to edges)
# --------------------------------------------------------------------------


def zeta(b: BinaryTree | None) -> OrderedTree:
    """Recursive bijection onto ordered trees with size(b) edges.

    The root hook of ``b`` is unrolled into the rightmost path of the
    ordered tree; hook_count(b) = childleaf_count(zeta(b)).
    """
    if b is None or isinstance(b, Empty):
        return LEAF
    # decompose the root hook: left branch with right subtrees a_list,
    # right branch with left subtrees c_list (both nearest-root first)
    a_list: list[BinaryTree | None] = []
    node = b.left
    while node is not None:
        a_list.append(node.right)
        node = node.left
    c_list: list[BinaryTree | None] = []
    node = b.right
    while node is not None:
        c_list.append(node.left)
        node = node.right
    cur = OrderedTree(tuple(zeta(c) for c in c_list) + (LEAF,))
    for a in a_list:
        cur = OrderedTree(zeta(a).children + (cur,))
    return cur


def zeta_inverse(t: OrderedTree) -> BinaryTree:
    """Inverse of zeta; the single-vertex ordered tree maps to EMPTY_LEFT."""
    if t.is_leaf:
        return EMPTY_LEFT
    # walk rightmost children down to the node whose rightmost child is
    # a leaf; that node carries the right branch of the root hook
    chain: list[OrderedTree] = []
    cur = t
    while not cur.children[-1].is_leaf:
        chain.append(cur)
        cur = cur.children[-1]

    def as_child(sub: BinaryTree) -> Node | None:
        return None if isinstance(sub, Empty) else sub

    right_branch: Node | None = None
    for c in reversed(cur.children[:-1]):
        right_branch = Node(as_child(zeta_inverse(c)), right_branch)
    left_branch: Node | None = None
    for n in chain:
        a = zeta_inverse(OrderedTree(n.children[:-1]))
        left_branch = Node(left_branch, as_child(a))
    return Node(left_branch, right_branch)
