"""Group elements over the regular action, BFS distances, structure checks."""

import random

from varikon import box, groups, perm

FROZEN_HISTOGRAM = [
    (0, 1), (1, 3), (2, 6), (3, 12), (4, 24), (5, 48), (6, 93), (7, 180),
    (8, 351), (9, 675), (10, 1191), (11, 1963), (12, 3015), (13, 3772),
    (14, 3732), (15, 2837), (16, 1589), (17, 572), (18, 78), (19, 18),
]


def test_multiply_basics():
    g = groups.element("RBRB")
    assert groups.multiply(groups.IDENTITY, g).canon == g.canon
    r = groups.element("R")
    assert groups.multiply(r, r).canon == box.SOLVED
    square = groups.multiply(g, g)
    assert square.canon == box.apply_word(box.SOLVED, "RBRBRBRB")
    assert perm.format_cycles(box.piece_perm(square.canon)) == "(5,7,6)"


def test_commutes_is_symmetric_on_examples():
    g = groups.element("RBRB")
    h = groups.element("RURU")
    assert groups.commutes(g, g)
    assert groups.commutes(g, h) == groups.commutes(h, g)


def test_depths(distance_table):
    assert distance_table.depth_of(box.SOLVED) == 0
    assert distance_table.depth_of(box.apply_word(box.SOLVED, "RBRB")) <= 4
    assert distance_table.max_depth == 19
    assert distance_table.histogram() == FROZEN_HISTOGRAM


def test_neighboring_depths_differ_by_one(distance_table):
    rng = random.Random(3)
    for _ in range(500):
        r = rng.randrange(box.N_REACHABLE)
        for m in box.LETTERS:
            nr = distance_table.move_rank[m][r]
            assert abs(distance_table.depth[r] - distance_table.depth[nr]) == 1


def test_word_to_is_a_shortest_witness(distance_table):
    rng = random.Random(4)
    for _ in range(300):
        c = box.unrank(rng.randrange(box.N_REACHABLE))
        w = distance_table.word_to(c)
        assert box.apply_word(box.SOLVED, w) == c
        assert len(w) == distance_table.depth_of(c)


def test_center_is_identity_plus_half_turns(center_elements):
    canons = {z.canon for z in center_elements}
    assert canons == {box.SOLVED} | {groups.half_turn_image(m) for m in (3, 5, 6)}
    for z in center_elements:
        assert box.apply_word(box.SOLVED, z.witness) == z.canon


def test_center_words_report(center_elements):
    rep = groups.verify_center_words(center_elements)
    assert rep.passed, [c.row() for c in rep.failures()]


def test_half_turn_images():
    assert groups.half_turn_image(6) == (7, None, 5, 6, 3, 4, 1, 2)
    assert groups.half_turn_image(5) == (6, 5, None, 7, 2, 1, 4, 3)
    assert groups.half_turn_image(3) == (4, 3, 2, 1, None, 7, 6, 5)


def test_kernel_report(distance_table):
    kernel = groups.subgroup_K(distance_table)
    rep = groups.verify_K_is_A7(kernel)
    assert rep.passed, [c.row() for c in rep.failures()]


def test_kernel_is_normal_on_samples(distance_table):
    kernel = groups.subgroup_K(distance_table)
    rng = random.Random(11)
    for k in rng.sample(kernel, 40):
        for x in box.LETTERS:
            conj = box.apply_word(box.SOLVED, x + k.witness + x)
            assert box.blank_cell(conj) == 7


def test_phi_factors_through_canon(distance_table):
    rng = random.Random(12)
    for _ in range(100):
        w = "".join(rng.choice(box.LETTERS) for _ in range(rng.randrange(20)))
        canon = box.apply_word(box.SOLVED, w)
        assert box.phi(w) == box.phi(distance_table.word_to(canon))


def test_structure_report(distance_table, center_elements):
    rep = groups.verify_structure(distance_table, center_elements)
    assert rep.passed, [c.row() for c in rep.failures()]
