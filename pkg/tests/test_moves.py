import random

import pytest

from legfront.front import classical_invariants, orient, tb_r, validate, word
from legfront.moves import (
    Move,
    MoveError,
    apply_move,
    apply_move_word,
    canonical_word,
    drag_event,
    enumerate_moves,
    inverse_move,
    normalize,
    stabilize,
)

UNKNOT = word("L1 R1")
ZIGZAG = word("L1 L1 R2 R1")
TREFOIL = word("L1 L3 X2 X2 X2 R3 R1")


def random_front(rng, target_events=16, max_width=8):
    """Random valid closed word built by legal choices."""
    w = []
    width = 0
    while True:
        must_close = len(w) >= target_events
        choices = []
        if width >= 2:
            choices += ["R"] * (3 if must_close else 1)
            if not must_close:
                choices += ["X"] * 2
        if width < max_width and not must_close:
            choices += ["L"] * 2
        if not choices:
            choices = ["L"]
        kind = rng.choice(choices)
        if kind == "L":
            pos = rng.randint(1, width + 1)
            width += 2
        else:
            pos = rng.randint(1, width - 1)
            if kind == "R":
                width -= 2
        w.append((kind, pos))
        if width == 0 and (must_close or rng.random() < 0.1):
            break
    from legfront.front import Event

    return tuple(Event(k, p) for k, p in w)


def test_enumerate_unknot_no_patterns():
    moves = [m for m in enumerate_moves(UNKNOT, adds=False)]
    assert moves == []


def test_zigzag_has_no_r1_instance():
    # zig-zag removal is destabilization, not a front move
    kinds = {m.kind for m in enumerate_moves(ZIGZAG, adds=False)}
    assert "r1_remove" not in kinds


def test_trefoil_has_no_r1_instance():
    kinds = {m.kind for m in enumerate_moves(TREFOIL, adds=False)}
    assert "r1_remove" not in kinds


def test_r1_add_then_remove_roundtrip():
    m = Move("r1_add", 1, "a", 1)
    w1, _ = apply_move_word(UNKNOT, m)
    assert validate(w1).ok
    assert len(w1) == 5
    back = inverse_move(UNKNOT, m)
    w2, _ = apply_move_word(w1, back)
    assert w2 == UNKNOT


def test_r1_preserves_invariants():
    f = orient(TREFOIL)
    for variant in ("a", "b"):
        m = Move("r1_add", 3, variant, 2)
        g = apply_move(f, m)
        assert tb_r(g) == tb_r(f)


def test_r2_add_remove_roundtrip():
    w = TREFOIL
    moves = [m for m in enumerate_moves(w) if m.kind == "r2_add"]
    assert moves
    for m in moves:
        w1, _ = apply_move_word(w, m)
        assert validate(w1).ok
        inv = inverse_move(w, m)
        w2, _ = apply_move_word(w1, inv)
        assert w2 == w


def test_r3_involution():
    w = word("L1 L3 X2 X3 X2 R3 R1")
    assert validate(w).ok
    r3s = [m for m in enumerate_moves(w, adds=False) if m.kind == "r3"]
    assert r3s
    m = r3s[0]
    w1, _ = apply_move_word(w, m)
    w2, _ = apply_move_word(w1, m)
    assert w2 == w


def test_commute_distant_events():
    w = word("L1 R1 L1 R1")
    results = [m for m in enumerate_moves(w, adds=False) if m.kind == "commute"]
    # R1 then L1 in the same slot slides in two ways
    assert {m.variant for m in results if m.index == 1} == {"above", "below"}
    m = Move("commute", 1, "below")
    w1, _ = apply_move_word(w, m)
    assert validate(w1).ok
    assert w1 == word("L1 L3 R1 R1")


def test_commute_involution():
    w = word("L1 L3 R3 R1")
    m = [m for m in enumerate_moves(w, adds=False) if m.kind == "commute"][0]
    w1, _ = apply_move_word(w, m)
    back = inverse_move(w, m)
    w2, _ = apply_move_word(w1, back)
    assert w2 == w


def test_stabilize_effects():
    f = orient(UNKNOT)
    up = stabilize(f, +1)
    assert tb_r(up) == (-2, 1)
    dn = stabilize(f, -1)
    assert tb_r(dn) == (-2, -1)
    both = stabilize(stabilize(f, +1), -1)
    assert tb_r(both) == (-3, 0)


def test_normalize_keeps_zigzag():
    got = normalize(ZIGZAG)
    assert got.word == ZIGZAG
    assert got.complete


def test_normalize_fixed_point():
    got = normalize(UNKNOT)
    assert got.word == UNKNOT


def test_normalize_idempotent():
    rng = random.Random(7)
    for _ in range(30):
        w = random_front(rng)
        c1 = canonical_word(w)
        assert canonical_word(c1) == c1


def test_normalize_removes_inserted_swallowtail():
    w1, _ = apply_move_word(TREFOIL, Move("r1_add", 2, "a", 2))
    assert canonical_word(w1) == canonical_word(TREFOIL)


def test_normalize_commutation_invariance():
    w = word("L1 L3 R3 R1")
    m = Move("commute", 0, "")
    w2, _ = apply_move_word(w, m)
    assert canonical_word(w) == canonical_word(w2)


def test_drag_event():
    w = word("L1 L3 X2 R3 R1")
    # drag the L3 cusp rightward past the crossing: blocked (supports touch)
    with pytest.raises(MoveError):
        drag_event(w, 1, 2)
    w2 = word("L1 L3 X1 R3 R1")
    got, em, moves = drag_event(w2, 1, 2)
    assert validate(got).ok
    assert got == word("L1 X1 L3 R3 R1")
    assert em[1] == 2 and em[2] == 1


def test_move_invariance_fuzz():
    rng = random.Random(42)
    for trial in range(150):
        w = random_front(rng)
        f = orient(w)
        base = classical_invariants(f)
        for _ in range(6):
            moves = enumerate_moves(f.word)
            if not moves:
                break
            m = rng.choice(moves)
            try:
                f = apply_move(f, m)
            except MoveError:
                continue
            assert validate(f.word).ok
        got = classical_invariants(f)
        assert (got.tb, got.r, got.components) == (base.tb, base.r, base.components)
