import pytest

from legfront.front import (
    classical_invariants,
    components,
    crossing_sign,
    orient,
    reverse_orientation,
    splice,
    tb_r,
    validate,
    word,
)

UNKNOT = word("L1 R1")
ZIGZAG = word("L1 L1 R2 R1")
TREFOIL = word("L1 L3 X2 X2 X2 R3 R1")
HOPF = word("L1 L3 X2 X2 R3 R1")


def test_validate_minimal_closed():
    assert validate(UNKNOT).ok


def test_validate_unclosed():
    rep = validate(word("L1"))
    assert not rep.ok
    assert "terminal" in rep.violations[0][1]


def test_validate_positional_bound():
    rep = validate(word("L1 X2 R1"))
    assert not rep.ok
    idx, msg = rep.violations[0]
    assert idx == 1 and "position 2" in msg


def test_components_unknot():
    n, _ = components(UNKNOT)
    assert n == 1


def test_components_split_union():
    n, _ = components(word("L1 R1 L1 R1"))
    assert n == 2


def test_components_hopf():
    n, _ = components(HOPF)
    assert n == 2


def test_components_trefoil():
    n, _ = components(TREFOIL)
    assert n == 1


def test_orient_unknot_directions():
    f = orient(UNKNOT)
    assert f.directions_at(1) == ["right", "left"]


def test_orient_flip():
    f = reverse_orientation(orient(UNKNOT))
    assert f.directions_at(1) == ["left", "right"]


def test_orient_trefoil_all_crossings_leftward():
    f = orient(TREFOIL)
    for k in (2, 3, 4):
        segs = f.diag.segments_of_event(k)
        assert f.direction(segs["in_upper"]) == "left"
        assert f.direction(segs["in_lower"]) == "left"
        assert crossing_sign(f, k) == 1


def test_invariants_unknot():
    assert tb_r(orient(UNKNOT)) == (-1, 0)


def test_invariants_zigzag():
    tb, r = tb_r(orient(ZIGZAG))
    assert tb == -2
    assert abs(r) == 1


def test_invariants_trefoil():
    inv = classical_invariants(orient(TREFOIL))
    assert (inv.tb, inv.r) == (1, 0)
    assert (inv.P, inv.N, inv.R) == (3, 0, 2)
    assert inv.components == 1


def test_reverse_orientation_negates_r():
    f = orient(ZIGZAG)
    g = reverse_orientation(f)
    assert tb_r(g)[0] == tb_r(f)[0]
    assert tb_r(g)[1] == -tb_r(f)[1]


def test_reverse_is_involution():
    f = orient(TREFOIL)
    assert reverse_orientation(reverse_orientation(f)).bits == f.bits


def test_reverse_preserves_crossing_counts():
    f = orient(HOPF)
    g = reverse_orientation(f)
    a, b = classical_invariants(f), classical_invariants(g)
    assert (a.P, a.N) == (b.P, b.N)


def test_splice():
    w = splice(UNKNOT, 1, word("R1 L1"))
    assert w == word("L1 R1 L1 R1")


def test_left_cusps_equal_right_cusps():
    for w in (UNKNOT, ZIGZAG, TREFOIL, HOPF):
        inv = classical_invariants(orient(w))
        assert inv.left_cusps == inv.R


def test_even_widths():
    from legfront.front import widths

    for w in (UNKNOT, ZIGZAG, TREFOIL, HOPF):
        assert all(x % 2 == 0 for x in widths(w))
