"""
Event words for closed Legendrian front diagrams.

A front is read left to right as a sequence of Morse events over a varying
number of horizontal strands, numbered 1..n from the top:

    L<i>  left cusp: two new strands appear at positions i, i+1
    R<i>  right cusp: the strands at positions i, i+1 meet and disappear
    X<i>  crossing: the strands at positions i, i+1 cross transversally

A word is closed when the strand count starts and ends at 0.  Strand identity
follows the geometric strand through a crossing (the strand at position i
continues at position i+1 and vice versa).

Orientations: a front decomposes into components (circles); each carries one
orientation bit.  Directions of strand segments are derived by traversing the
curve: the horizontal direction flips exactly at cusps and is preserved
through crossings.  With directions in hand the classical invariants are

    tb = P - N - R        r = (D - U) / 2

where P/N count positive/negative crossings (positive iff the two segments at
the crossing share a horizontal direction), R counts right cusps, and D/U
count down/up cusps.  The cusp convention used here: a right cusp is DOWN iff
the segment traversed rightward into it is the upper one, and a left cusp is
DOWN iff the segment traversed rightward out of it is the lower one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

KINDS = ("L", "R", "X")


class Event(NamedTuple):
    kind: str
    pos: int

    def __str__(self) -> str:
        return f"{self.kind}{self.pos}"

    def __repr__(self) -> str:
        return f"Event({self.kind!r}, {self.pos})"


FrontWord = tuple  # tuple[Event, ...]


def ev(text: str) -> Event:
    """Parse a single event token such as "L1" or "X12"."""
    text = text.strip()
    if len(text) < 2 or text[0] not in KINDS or not text[1:].isdigit():
        raise ValueError(f"bad event token {text!r}")
    return Event(text[0], int(text[1:]))


def word(text: str) -> FrontWord:
    """Parse a whitespace-separated event word, e.g. ``word("L1 R1")``."""
    return tuple(ev(tok) for tok in text.split())


def format_word(w: FrontWord) -> str:
    return " ".join(str(e) for e in w)


@dataclass
class ValidationReport:
    ok: bool
    violations: list = field(default_factory=list)  # list[(event index | None, message)]

    def __bool__(self) -> bool:
        return self.ok


def widths(w: FrontWord) -> list:
    """Strand count at every column boundary (length = len(w) + 1).

    Raises ValueError on the first positional violation; use validate() for a
    report instead of an exception.
    """
    out = [0]
    n = 0
    for k, e in enumerate(w):
        if e.kind == "L":
            if not 1 <= e.pos <= n + 1:
                raise ValueError(f"event {k} ({e}): left cusp position out of range 1..{n + 1}")
            n += 2
        else:
            if not 1 <= e.pos <= n - 1:
                raise ValueError(f"event {k} ({e}): position {e.pos} needs strands "
                                 f"{e.pos},{e.pos + 1} but only {n} present")
            if e.kind == "R":
                n -= 2
        out.append(n)
    return out


def validate(w: FrontWord) -> ValidationReport:
    """Check well-formedness: positional bounds and closure at strand count 0."""
    rep = ValidationReport(True)
    n = 0
    for k, e in enumerate(w):
        if e.kind not in KINDS:
            rep.ok = False
            rep.violations.append((k, f"unknown event kind {e.kind!r}"))
            return rep
        if e.kind == "L":
            if not 1 <= e.pos <= n + 1:
                rep.ok = False
                rep.violations.append((k, f"{e}: left cusp position exceeds strand count {n}"))
                return rep
            n += 2
        else:
            if not 1 <= e.pos <= n - 1:
                rep.ok = False
                rep.violations.append((k, f"{e}: position {e.pos} exceeds strand count {n}"))
                return rep
            if e.kind == "R":
                n -= 2
    if n != 0:
        rep.ok = False
        rep.violations.append((None, f"nonzero terminal strand count {n}"))
    return rep


def splice(w: FrontWord, boundary: int, inserted: Iterable[Event]) -> FrontWord:
    """Insert events at a column boundary (0..len(w)).  Positions are taken
    relative to the strand configuration at that boundary."""
    inserted = tuple(inserted)
    return w[:boundary] + inserted + w[boundary:]


class _UnionFind:
    def __init__(self) -> None:
        self.parent = []

    def make(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


# Segment birth/death roles.
_L_UP, _L_LO = "Lu", "Ll"       # born at a left cusp (upper / lower branch)
_X_UP, _X_LO = "Xu", "Xl"       # born just right of a crossing (upper / lower slot)
_R_UP, _R_LO = "Ru", "Rl"       # dies at a right cusp
_XD_UP, _XD_LO = "xu", "xl"     # dies entering a crossing


@dataclass
class Diagram:
    """Strand-segment structure of a valid closed front word.

    Segments are maximal horizontal pieces between consecutive events touching
    them.  Each segment records where it is born and where it dies together
    with its role there; crossings link a dying segment to its continuation.
    """

    word: FrontWord
    widths: list
    cols: list                  # cols[b][p-1] = segment id at boundary b, position p
    birth: list                 # birth[s] = (event index, role)
    death: list                 # death[s] = (event index, role)
    partner: dict               # (event, role) -> segment id, for all four roles
    cont_right: dict            # seg dying at a crossing -> its continuation
    cont_left: dict             # seg born at a crossing -> what it continues
    comp_of: list               # comp_of[s] = component index (canonical order)
    n_components: int
    anchors: list               # anchors[c] = anchor segment (upper branch of first left cusp)

    @property
    def n_boundaries(self) -> int:
        return len(self.widths)

    def segments_of_event(self, k: int) -> dict:
        e = self.word[k]
        if e.kind == "L":
            return {"out_upper": self.partner[(k, _L_UP)], "out_lower": self.partner[(k, _L_LO)]}
        if e.kind == "R":
            return {"in_upper": self.partner[(k, _R_UP)], "in_lower": self.partner[(k, _R_LO)]}
        return {
            "in_upper": self.partner[(k, _XD_UP)],
            "in_lower": self.partner[(k, _XD_LO)],
            "out_upper": self.partner[(k, _X_UP)],
            "out_lower": self.partner[(k, _X_LO)],
        }


def diagram(w: FrontWord) -> Diagram:
    rep = validate(w)
    if not rep.ok:
        raise ValueError(f"invalid front word: {rep.violations}")
    wd = [0]
    cols = [[]]
    birth: list = []
    death: list = []
    partner: dict = {}
    cont_right: dict = {}
    cont_left: dict = {}
    uf = _UnionFind()

    def new_seg(k: int, role: str) -> int:
        s = len(birth)
        birth.append((k, role))
        death.append(None)
        uf.make()
        partner[(k, role)] = s
        return s

    cur: list = []
    for k, e in enumerate(w):
        i = e.pos - 1
        if e.kind == "L":
            a = new_seg(k, _L_UP)
            b = new_seg(k, _L_LO)
            uf.union(a, b)
            cur[i:i] = [a, b]
        elif e.kind == "R":
            u, v = cur[i], cur[i + 1]
            death[u] = (k, _R_UP)
            death[v] = (k, _R_LO)
            partner[(k, _R_UP)] = u
            partner[(k, _R_LO)] = v
            uf.union(u, v)
            del cur[i:i + 2]
        else:
            u, v = cur[i], cur[i + 1]
            death[u] = (k, _XD_UP)
            death[v] = (k, _XD_LO)
            partner[(k, _XD_UP)] = u
            partner[(k, _XD_LO)] = v
            nu = new_seg(k, _X_UP)   # occupies position i after the crossing
            nv = new_seg(k, _X_LO)
            # geometric continuation: the old upper strand is now the lower one
            cont_right[u] = nv
            cont_left[nv] = u
            cont_right[v] = nu
            cont_left[nu] = v
            uf.union(u, nv)
            uf.union(v, nu)
            cur[i] = nu
            cur[i + 1] = nv
        wd.append(len(cur))
        cols.append(list(cur))

    # canonical component order: by first left-cusp event
    roots: list = []
    root_index: dict = {}
    for k, e in enumerate(w):
        if e.kind == "L":
            r = uf.find(partner[(k, _L_UP)])
            if r not in root_index:
                root_index[r] = len(roots)
                roots.append(r)
    comp_of = [root_index[uf.find(s)] for s in range(len(birth))]
    anchors = [None] * len(roots)
    for k, e in enumerate(w):
        if e.kind == "L":
            c = comp_of[partner[(k, _L_UP)]]
            if anchors[c] is None:
                anchors[c] = partner[(k, _L_UP)]
    return Diagram(w, wd, cols, birth, death, partner, cont_right, cont_left,
                   comp_of, len(roots), anchors)


def components(w: FrontWord):
    """Component count and per-boundary labeling of strands by component id."""
    d = diagram(w)
    labeling = [[d.comp_of[s] for s in col] for col in d.cols]
    return d.n_components, labeling


RIGHT, LEFT = "right", "left"


@dataclass
class OrientedFront:
    """A front word with one orientation bit per component.

    Bit 0 orients the component so that the upper branch of its first left
    cusp is traversed rightward; bit 1 reverses the component.
    """

    word: FrontWord
    bits: tuple

    _diag: Diagram = field(default=None, repr=False, compare=False)
    _dir: list = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self._diag is None:
            object.__setattr__(self, "_diag", diagram(self.word))
        d = self._diag
        if len(self.bits) != d.n_components:
            raise ValueError(f"need {d.n_components} orientation bits, got {len(self.bits)}")
        object.__setattr__(self, "_dir", _directions(d, self.bits))

    @property
    def diag(self) -> Diagram:
        return self._diag

    def direction(self, seg: int) -> str:
        return self._dir[seg]

    def directions_at(self, boundary: int) -> list:
        return [self._dir[s] for s in self._diag.cols[boundary]]


def _directions(d: Diagram, bits) -> list:
    dirs = [None] * len(d.birth)
    for c, anchor in enumerate(d.anchors):
        cur = anchor
        cur_dir = RIGHT if bits[c] == 0 else LEFT
        while dirs[cur] is None:
            dirs[cur] = cur_dir
            if cur_dir == RIGHT:
                k, role = d.death[cur]
                if role in (_R_UP, _R_LO):
                    other = _R_LO if role == _R_UP else _R_UP
                    cur = d.partner[(k, other)]
                    cur_dir = LEFT
                else:
                    cur = d.cont_right[cur]
                    cur_dir = RIGHT
            else:
                k, role = d.birth[cur]
                if role in (_L_UP, _L_LO):
                    other = _L_LO if role == _L_UP else _L_UP
                    cur = d.partner[(k, other)]
                    cur_dir = RIGHT
                else:
                    cur = d.cont_left[cur]
                    cur_dir = LEFT
    assert all(x is not None for x in dirs)
    return dirs


def orient(w: FrontWord, bits=None) -> OrientedFront:
    """Attach orientation bits (default all 0) to a valid word."""
    d = diagram(w)
    if bits is None:
        bits = (0,) * d.n_components
    return OrientedFront(w, tuple(bits), _diag=d)


def reverse_orientation(f: OrientedFront) -> OrientedFront:
    return OrientedFront(f.word, tuple(1 - b for b in f.bits), _diag=f.diag)


def crossing_sign(f: OrientedFront, k: int) -> int:
    """+1 / -1 for the crossing at event index k (positive iff the two
    segments there share a horizontal direction)."""
    e = f.word[k]
    if e.kind != "X":
        raise ValueError(f"event {k} is {e}, not a crossing")
    segs = f.diag.segments_of_event(k)
    return 1 if f.direction(segs["in_upper"]) == f.direction(segs["in_lower"]) else -1


def cusp_updown(f: OrientedFront, k: int) -> str:
    """'D' or 'U' for the cusp at event index k."""
    e = f.word[k]
    segs = f.diag.segments_of_event(k)
    if e.kind == "R":
        return "D" if f.direction(segs["in_upper"]) == RIGHT else "U"
    if e.kind == "L":
        return "D" if f.direction(segs["out_lower"]) == RIGHT else "U"
    raise ValueError(f"event {k} is {e}, not a cusp")


@dataclass
class ClassicalInvariants:
    tb: int
    r: int
    components: int
    P: int
    N: int
    R: int
    D: int
    U: int
    left_cusps: int

    def as_dict(self) -> dict:
        return {"tb": self.tb, "r": self.r, "components": self.components,
                "P": self.P, "N": self.N, "R": self.R, "D": self.D, "U": self.U,
                "left_cusps": self.left_cusps}


def classical_invariants(f: OrientedFront) -> ClassicalInvariants:
    P = N = R = D = U = L = 0
    for k, e in enumerate(f.word):
        if e.kind == "X":
            if crossing_sign(f, k) > 0:
                P += 1
            else:
                N += 1
        else:
            if e.kind == "R":
                R += 1
            else:
                L += 1
            if cusp_updown(f, k) == "D":
                D += 1
            else:
                U += 1
    assert (D - U) % 2 == 0
    return ClassicalInvariants(P - N - R, (D - U) // 2, f.diag.n_components, P, N, R, D, U, L)


def tb_r(f: OrientedFront):
    inv = classical_invariants(f)
    return inv.tb, inv.r


def event_map_for_splice(n: int, boundary: int, inserted: int) -> dict:
    """Old event index -> new event index after splicing `inserted` events."""
    return {k: (k if k < boundary else k + inserted) for k in range(n)}


def match_orientation(new_word: FrontWord, old: OrientedFront, event_map: dict) -> OrientedFront:
    """Orient new_word so that segments surviving from `old` keep their
    directions.  `event_map` sends old event indices to new ones (or omits
    events that were removed).  Components made entirely of new events keep
    the default bit."""
    nd = diagram(new_word)
    inv_map = {new_k: old_k for old_k, new_k in event_map.items()}
    # directions of a component depend only on its own bit, so one all-zero
    # trial tells us the bit-0 direction of every segment
    trial = _directions(nd, (0,) * nd.n_components)
    bits = [0] * nd.n_components
    decided = [False] * nd.n_components
    for k, e in enumerate(new_word):
        if e.kind != "L" or k not in inv_map:
            continue
        old_k = inv_map[k]
        if old.word[old_k].kind != "L":
            continue
        s_new = nd.partner[(k, _L_UP)]
        c = nd.comp_of[s_new]
        if decided[c]:
            continue
        s_old = old.diag.partner[(old_k, _L_UP)]
        want = old.direction(s_old)
        bits[c] = 0 if trial[s_new] == want else 1
        decided[c] = True
    return OrientedFront(new_word, tuple(bits), _diag=nd)
