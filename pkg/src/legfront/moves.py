"""
Front moves: the three Legendrian Reidemeister moves, distant-event
commutation, stabilization, and a deterministic normal form.

All moves act on event words and preserve tb, r, the component count and the
underlying smooth link type.  The concrete 3-event window encodings:

  type 1 (swallowtail, two up/down variants), on a strand at position p:
      []  <->  [L(p+1), X(p), R(p+1)]          variant "a"
      []  <->  [L(p),   X(p+1), R(p)]          variant "b"

  type 2 (cusp through a transverse strand), four variants:
      [L(p)]    <->  [L(p+1), X(p), X(p+1)]    "L1"
      [L(p+1)]  <->  [L(p), X(p+1), X(p)]      "L2"
      [R(p)]    <->  [X(p+1), X(p), R(p+1)]    "R1"
      [R(p+1)]  <->  [X(p), X(p+1), R(p)]      "R2"

  type 3 (triple point):
      [X(p), X(p+1), X(p)]  <->  [X(p+1), X(p), X(p+1)]

Adjacent events with disjoint position support commute after renumbering;
a right cusp followed by a left cusp in the same slot slides past it in two
ways (the freed vertical space can be crossed above or below).

Zig-zag insertion (stabilization) is NOT a Reidemeister move: it changes tb.
It is provided separately and never applied by normalize().
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .front import (
    Event,
    FrontWord,
    OrientedFront,
    classical_invariants,
    match_orientation,
    orient,
    splice,
    validate,
    widths,
)


@dataclass(frozen=True)
class Move:
    kind: str        # commute | r1_add | r1_remove | r2_add | r2_remove | r3
    index: int       # event index (window start) or boundary for r1_add
    variant: str = ""
    pos: int = 0     # strand position, used by r1_add

    def __str__(self) -> str:
        extra = f",{self.variant}" if self.variant else ""
        p = f"@{self.pos}" if self.kind == "r1_add" else ""
        return f"{self.kind}({self.index}{extra}){p}"


class MoveError(ValueError):
    pass


# ---------------------------------------------------------------------------
# commutation


def commute_results(w: FrontWord, i: int):
    """All words obtained by commuting events i and i+1 (0, 1 or 2 results,
    each tagged with a variant string)."""
    if not 0 <= i < len(w) - 1:
        return []
    A, B = w[i], w[i + 1]
    a, b = A.pos, B.pos
    out = []

    def res(variant, bk, bp, ak, ap):
        out.append((variant, w[:i] + (Event(bk, bp), Event(ak, ap)) + w[i + 2:]))

    if A.kind == "X" and B.kind == "X":
        if abs(a - b) >= 2:
            res("", "X", b, "X", a)
    elif A.kind == "X" and B.kind == "L":
        if b <= a:
            res("", "L", b, "X", a + 2)
        elif b >= a + 2:
            res("", "L", b, "X", a)
    elif A.kind == "X" and B.kind == "R":
        if b <= a - 2:
            res("", "R", b, "X", a - 2)
        elif b >= a + 2:
            res("", "R", b, "X", a)
    elif A.kind == "L" and B.kind == "X":
        if b <= a - 2:
            res("", "X", b, "L", a)
        elif b >= a + 2:
            res("", "X", b - 2, "L", a)
    elif A.kind == "L" and B.kind == "L":
        if b <= a:
            res("", "L", b, "L", a + 2)
        elif b >= a + 2:
            res("", "L", b - 2, "L", a)
    elif A.kind == "L" and B.kind == "R":
        if b <= a - 2:
            res("", "R", b, "L", a - 2)
        elif b >= a + 2:
            res("", "R", b - 2, "L", a)
    elif A.kind == "R" and B.kind == "X":
        if b <= a - 2:
            res("", "X", b, "R", a)
        elif b >= a:
            res("", "X", b + 2, "R", a)
    elif A.kind == "R" and B.kind == "L":
        if b <= a - 1:
            res("", "L", b, "R", a + 2)
        elif b == a:
            res("above", "L", a, "R", a + 2)
            res("below", "L", a + 2, "R", a)
        else:
            res("", "L", b + 2, "R", a)
    elif A.kind == "R" and B.kind == "R":
        if b <= a - 2:
            res("", "R", b, "R", a - 2)
        elif b >= a:
            res("", "R", b + 2, "R", a)
    return out


# ---------------------------------------------------------------------------
# pattern tables

# r1 windows keyed by variant: (offsets of positions relative to p)
def _r1_window(p: int, variant: str):
    if variant == "a":
        return (Event("L", p + 1), Event("X", p), Event("R", p + 1))
    if variant == "b":
        return (Event("L", p), Event("X", p + 1), Event("R", p))
    raise MoveError(f"bad r1 variant {variant!r}")


def _match_r1(w: FrontWord, i: int):
    """Return (variant, p) if events i..i+2 form a swallowtail window."""
    if i + 3 > len(w):
        return None
    A, B, C = w[i:i + 3]
    if A.kind == "L" and B.kind == "X" and C.kind == "R":
        if A.pos == B.pos + 1 and C.pos == B.pos + 1:
            return ("a", B.pos)
        if B.pos == A.pos + 1 and C.pos == A.pos:
            return ("b", A.pos)
    return None


_R2_SHAPES = {
    # variant: (single event, 3-event window), positions relative to p
    "L1": (("L", 0), (("L", 1), ("X", 0), ("X", 1))),
    "L2": (("L", 1), (("L", 0), ("X", 1), ("X", 0))),
    "R1": (("R", 0), (("X", 1), ("X", 0), ("R", 1))),
    "R2": (("R", 1), (("X", 0), ("X", 1), ("R", 0))),
}


def _match_r2_window(w: FrontWord, i: int):
    """Return (variant, p) if events i..i+2 form an expanded type-2 window."""
    if i + 3 > len(w):
        return None
    trip = w[i:i + 3]
    kinds = tuple(e.kind for e in trip)
    for variant, (_, shape) in _R2_SHAPES.items():
        if kinds != tuple(k for k, _ in shape):
            continue
        # solve p from the first event, then check the rest
        p = trip[0].pos - shape[0][1]
        if p >= 1 and all(e.pos == p + off for e, (_, off) in zip(trip, shape)):
            return (variant, p)
    return None


# ---------------------------------------------------------------------------
# enumeration


def enumerate_moves(w: FrontWord, adds: bool = True):
    """Every applicable move instance on w.

    Removal patterns, type-3 windows and commutations are always listed; the
    (infinitely repeatable) insertion moves are included unless adds=False.
    """
    out = []
    wd = widths(w)
    for i in range(len(w) - 1):
        for variant, _ in commute_results(w, i):
            out.append(Move("commute", i, variant))
    for i in range(len(w) - 2):
        m = _match_r1(w, i)
        if m:
            out.append(Move("r1_remove", i, m[0]))
        m = _match_r2_window(w, i)
        if m:
            out.append(Move("r2_remove", i, m[0]))
        a, b, c = w[i:i + 3]
        if a.kind == b.kind == c.kind == "X":
            if a.pos == c.pos and abs(b.pos - a.pos) == 1:
                out.append(Move("r3", i))
    if adds:
        for bdry in range(len(w) + 1):
            for p in range(1, wd[bdry] + 1):
                out.append(Move("r1_add", bdry, "a", p))
                out.append(Move("r1_add", bdry, "b", p))
        for k, e in enumerate(w):
            if e.kind == "L":
                if e.pos <= wd[k]:
                    out.append(Move("r2_add", k, "L1"))
                if e.pos >= 2:
                    out.append(Move("r2_add", k, "L2"))
            elif e.kind == "R":
                if e.pos + 2 <= wd[k]:
                    out.append(Move("r2_add", k, "R1"))
                if e.pos >= 2:
                    out.append(Move("r2_add", k, "R2"))
    return out


# ---------------------------------------------------------------------------
# application


def apply_move_word(w: FrontWord, m: Move):
    """Apply a move to a word.  Returns (new_word, event_map) where event_map
    sends surviving old event indices to new ones."""
    n = len(w)
    if m.kind == "commute":
        results = commute_results(w, m.index)
        for variant, nw in results:
            if variant == m.variant:
                em = {k: k for k in range(n)}
                em[m.index], em[m.index + 1] = m.index + 1, m.index
                return nw, em
        raise MoveError(f"{m} not applicable")
    if m.kind == "r1_remove":
        got = _match_r1(w, m.index)
        if not got or got[0] != m.variant:
            raise MoveError(f"{m} not applicable")
        nw = w[:m.index] + w[m.index + 3:]
        em = {k: k for k in range(m.index)}
        em.update({k: k - 3 for k in range(m.index + 3, n)})
        return nw, em
    if m.kind == "r1_add":
        bdry = m.index
        wd = widths(w)
        if not 0 <= bdry <= n or not 1 <= m.pos <= wd[bdry]:
            raise MoveError(f"{m} not applicable")
        nw = splice(w, bdry, _r1_window(m.pos, m.variant))
        em = {k: (k if k < bdry else k + 3) for k in range(n)}
        return nw, em
    if m.kind == "r2_remove":
        got = _match_r2_window(w, m.index)
        if not got or got[0] != m.variant:
            raise MoveError(f"{m} not applicable")
        variant, p = got
        (kind, off), _ = _R2_SHAPES[variant]
        nw = w[:m.index] + (Event(kind, p + off),) + w[m.index + 3:]
        em = {k: k for k in range(m.index)}
        cusp_at = m.index if variant.startswith("L") else m.index + 2
        em[cusp_at] = m.index
        em.update({k: k - 2 for k in range(m.index + 3, n)})
        return nw, em
    if m.kind == "r2_add":
        k = m.index
        if not 0 <= k < n:
            raise MoveError(f"{m} not applicable")
        e = w[k]
        (kind, off), shape = _R2_SHAPES[m.variant]
        if e.kind != kind:
            raise MoveError(f"{m} not applicable")
        p = e.pos - off
        if p < 1:
            raise MoveError(f"{m} not applicable")
        window = tuple(Event(kk, p + o) for kk, o in shape)
        nw = w[:k] + window + w[k + 1:]
        em = {j: j for j in range(k)}
        em[k] = k if m.variant.startswith("L") else k + 2
        em.update({j: j + 2 for j in range(k + 1, n)})
        nw_rep = validate(nw)
        if not nw_rep.ok:
            raise MoveError(f"{m} not applicable: {nw_rep.violations}")
        return nw, em
    if m.kind == "r3":
        i = m.index
        if i + 3 > n:
            raise MoveError(f"{m} not applicable")
        a, b, c = w[i:i + 3]
        if not (a.kind == b.kind == c.kind == "X" and a.pos == c.pos
                and abs(b.pos - a.pos) == 1):
            raise MoveError(f"{m} not applicable")
        nw = w[:i] + (Event("X", b.pos), Event("X", a.pos), Event("X", b.pos)) + w[i + 3:]
        return nw, {k: k for k in range(n)}
    raise MoveError(f"unknown move kind {m.kind!r}")


def apply_move(f: OrientedFront, m: Move) -> OrientedFront:
    """Apply a move to an oriented front, carrying the orientation across."""
    nw, em = apply_move_word(f.word, m)
    return match_orientation(nw, f, em)


def inverse_move(w: FrontWord, m: Move) -> Move:
    """A move undoing m on apply_move_word(w, m), for invertible kinds."""
    if m.kind == "r3":
        return m
    if m.kind == "commute":
        nw, _ = apply_move_word(w, m)
        for variant, back in commute_results(nw, m.index):
            if back == w:
                return Move("commute", m.index, variant)
        raise MoveError("no inverse commute found")
    if m.kind == "r2_add":
        return Move("r2_remove", m.index, m.variant)
    if m.kind == "r2_remove":
        got = _match_r2_window(w, m.index)
        if not got:
            raise MoveError(f"{m} not applicable")
        return Move("r2_add", m.index, m.variant)
    if m.kind == "r1_add":
        return Move("r1_remove", m.index, m.variant)
    if m.kind == "r1_remove":
        got = _match_r1(w, m.index)
        if not got:
            raise MoveError(f"{m} not applicable")
        return Move("r1_add", m.index, m.variant, got[1])
    raise MoveError(f"unknown move kind {m.kind!r}")


# ---------------------------------------------------------------------------
# stabilization (not an isotopy)


def stabilize(f: OrientedFront, sign: int, component: int = 0) -> OrientedFront:
    """Add a zig-zag to the given component.  sign=+1 raises r by 1, sign=-1
    lowers it; tb always drops by 1.  The zig-zag is inserted on the upper
    branch of the component's first left cusp."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    d = f.diag
    if not 0 <= component < d.n_components:
        raise ValueError("no such component")
    anchor = d.anchors[component]
    k0 = d.birth[anchor][0]
    bdry = k0 + 1
    p = d.cols[bdry].index(anchor) + 1
    going_right = f.direction(anchor) == "right"
    want_down = (sign == 1) == going_right
    if want_down:
        ins = (Event("L", p + 1), Event("R", p))
    else:
        ins = (Event("L", p), Event("R", p + 1))
    nw = splice(f.word, bdry, ins)
    em = {k: (k if k < bdry else k + 2) for k in range(len(f.word))}
    g = match_orientation(nw, f, em)
    a, b = classical_invariants(f), classical_invariants(g)
    assert b.tb == a.tb - 1 and b.r == a.r + sign, "zig-zag bookkeeping failed"
    return g


# ---------------------------------------------------------------------------
# normalization


_KIND_RANK = {"L": 0, "R": 1, "X": 2}


def _key(e: Event):
    return (e.pos, _KIND_RANK[e.kind])


@dataclass
class CanonicalForm:
    word: FrontWord
    certificate: list = field(default_factory=list)
    complete: bool = True


def normalize(w: FrontWord, budget: int = 0) -> CanonicalForm:
    """Deterministic tb-preserving simplification: greedy removal of
    swallowtail and expanded type-2 windows, interleaved with bubble passes
    that sort commuting adjacent events by (position, kind).

    Zig-zags are never removed (their removal is destabilization, which is
    not an isotopy).  Equal inputs give equal outputs; the result is a fixed
    point of the procedure when the budget suffices."""
    if budget <= 0:
        budget = max(40, 10 * len(w))
    cert: list = []
    steps = 0
    cur = w
    while steps < budget:
        reduced = False
        for i in range(len(cur) - 2):
            if _match_r1(cur, i):
                m = Move("r1_remove", i, _match_r1(cur, i)[0])
            elif _match_r2_window(cur, i):
                m = Move("r2_remove", i, _match_r2_window(cur, i)[0])
            else:
                continue
            cur, _ = apply_move_word(cur, m)
            cert.append(m)
            steps += 1
            reduced = True
            break
        if reduced:
            continue
        swapped = False
        i = 0
        while i < len(cur) - 1 and steps < budget:
            best = None
            for variant, nw in commute_results(cur, i):
                pair = (_key(nw[i]), _key(nw[i + 1]))
                if pair < (_key(cur[i]), _key(cur[i + 1])):
                    if best is None or pair < best[0]:
                        best = (pair, variant, nw)
            if best:
                cur = best[2]
                cert.append(Move("commute", i, best[1]))
                steps += 1
                swapped = True
            i += 1
        if not swapped:
            return CanonicalForm(cur, cert, True)
    return CanonicalForm(cur, cert, False)


def canonical_word(w: FrontWord, budget: int = 0) -> FrontWord:
    return normalize(w, budget).word


# ---------------------------------------------------------------------------
# dragging (used by surgery constructions)


def drag_event(w: FrontWord, src: int, dst: int):
    """Move the event at index src to index dst through adjacent commutations.

    Returns (word, event_map, moves).  Raises MoveError if blocked.  When a
    commutation has two variants the first listed is taken.
    """
    cur = w
    moves = []
    em = {k: k for k in range(len(w))}

    def step(i):
        nonlocal cur
        results = commute_results(cur, i)
        if not results:
            raise MoveError(f"drag blocked at index {i}: {cur[i]} | {cur[i+1]}")
        variant, nw = results[0]
        moves.append(Move("commute", i, variant))
        cur = nw
        for k, v in list(em.items()):
            if v == i:
                em[k] = i + 1
            elif v == i + 1:
                em[k] = i

    j = src
    while j < dst:
        step(j)
        j += 1
    while j > dst:
        step(j - 1)
        j -= 1
    return cur, em, moves
