from collections import deque

import pytest

from bruhatcap import SizeLimitError, build, generate
from bruhatcap.linalg import vec

ENUMERABLE = (
    [("A", r) for r in range(1, 5)]
    + [("B", r) for r in range(2, 5)]
    + [("C", r) for r in range(2, 5)]
    + [("D", 3), ("D", 4), ("F", 4), ("G", 2)]
)


@pytest.mark.parametrize("fam,rank,order", [
    ("A", 1, 2), ("A", 2, 6), ("A", 3, 24), ("B", 2, 8), ("B", 3, 48),
    ("C", 3, 48), ("D", 3, 24), ("D", 4, 192), ("G", 2, 12), ("F", 4, 1152),
])
def test_group_orders(fam, rank, order):
    assert len(generate(build(fam, rank))) == order


def test_cap_refusal():
    rs = build("E", 8)
    with pytest.raises(SizeLimitError) as err:
        generate(rs)
    assert "E8" in str(err.value)
    assert "696,729,600" in str(err.value)


@pytest.mark.parametrize("fam,rank", ENUMERABLE)
def test_length_equals_inversion_count(fam, rank):
    w = generate(build(fam, rank))
    for i in range(len(w)):
        assert w.lengths[i] == w.inversion_count(i)


@pytest.mark.parametrize("fam,rank", ENUMERABLE)
def test_longest_element_length(fam, rank):
    rs = build(fam, rank)
    w = generate(rs)
    assert w.lengths[w.longest_element()] == len(rs.positive)


def test_longest_element_stated_maps(w_b3, w_a2):
    # B3: w0 = -id on R^3
    rs = w_b3.rs
    p = w_b3.perms[w_b3.longest_index]
    for j, r in enumerate(rs.roots):
        assert rs.roots[p[j]] == tuple(-x for x in r)
    # D3 (odd): w0 fixes the sign of the last coordinate
    d3 = build("D", 3)
    wd3 = generate(d3)
    p = wd3.perms[wd3.longest_index]
    for j, r in enumerate(d3.roots):
        assert d3.roots[p[j]] == tuple(-x for x in r[:-1]) + (r[-1],)
    # D4 (even): w0 = -id
    d4 = build("D", 4)
    wd4 = generate(d4)
    p = wd4.perms[wd4.longest_index]
    for j, r in enumerate(d4.roots):
        assert d4.roots[p[j]] == tuple(-x for x in r)
    # A2: w0 reverses coordinates
    rs = w_a2.rs
    p = w_a2.perms[w_a2.longest_index]
    for j, r in enumerate(rs.roots):
        assert rs.roots[p[j]] == tuple(reversed(r))


def test_a1_longest_is_the_reflection():
    rs = build("A", 1)
    w = generate(rs)
    assert len(w) == 2
    assert w.longest_element() == w.reflection(rs.positive[0])


def test_compose_inverse_identity(w_b2):
    for i in range(len(w_b2)):
        assert w_b2.compose(i, w_b2.inverse(i)) == w_b2.identity_index
        assert w_b2.compose(w_b2.identity_index, i) == i


def test_perm_commutes_with_negation(w_b3):
    rs = w_b3.rs
    for p in w_b3.perms:
        for j in range(len(rs.roots)):
            assert p[rs.neg_of[j]] == rs.neg_of[p[j]]


def test_words_are_reduced(w_b3):
    for i in range(len(w_b3)):
        word = w_b3.word(i)
        assert len(word) == w_b3.lengths[i]
        acc = w_b3.identity_index
        for g in word:
            acc = w_b3.compose(acc, w_b3.simple_elements[g])
        assert acc == i


@pytest.mark.parametrize("fam,rank", [("A", 3), ("B", 3), ("G", 2)])
def test_deletion_property(fam, rank):
    w = generate(build(fam, rank))
    for i in range(len(w)):
        for g in w.simple_elements:
            j = w.compose(i, g)
            assert abs(w.lengths[j] - w.lengths[i]) == 1


# -- absolute length ---------------------------------------------------------


def _absolute_length_bfs(weyl):
    """Independent oracle: BFS over the generating set of ALL reflections."""
    gens = [weyl.reflection(a) for a in weyl.rs.positive]
    dist = {weyl.identity_index: 0}
    queue = deque([weyl.identity_index])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = weyl.compose(x, g)
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


@pytest.mark.parametrize("fam,rank", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2)])
def test_absolute_length_against_reflection_bfs(fam, rank):
    w = generate(build(fam, rank))
    oracle = _absolute_length_bfs(w)
    for i in range(len(w)):
        assert w.absolute_length(i) == oracle[i]


def test_absolute_length_basics(w_b3):
    assert w_b3.absolute_length(w_b3.identity_index) == 0
    for a in w_b3.rs.positive:
        assert w_b3.absolute_length(w_b3.reflection(a)) == 1
    for i in range(len(w_b3)):
        assert w_b3.absolute_length(i) <= w_b3.lengths[i]


@pytest.mark.parametrize("fam,rank,lt", [
    ("A", 3, 2), ("B", 3, 3), ("C", 4, 4), ("D", 4, 4), ("D", 5, 4), ("F", 4, 4), ("G", 2, 2),
])
def test_absolute_length_of_w0(fam, rank, lt):
    w = generate(build(fam, rank))
    assert w.absolute_length(w.longest_element()) == lt


# -- parabolic quotients -------------------------------------------------------


def test_parabolic_trivial(w_a2):
    pd = w_a2.parabolic(())
    assert pd.n_cosets == len(w_a2)
    assert pd.coset_reps == tuple(range(len(w_a2)))
    assert pd.rp_plus == ()


def test_parabolic_a3_grassmannian(w_a3):
    pd = w_a3.parabolic((0, 2))
    assert pd.n_cosets == 6
    assert len(pd.wp_elements) == 4
    assert set(pd.rp_plus) == {
        w_a3.rs.index[vec([1, -1, 0, 0])],
        w_a3.rs.index[vec([0, 0, 1, -1])],
    }


def test_parabolic_a2(w_a2):
    pd = w_a2.parabolic((0,))
    assert pd.n_cosets == 3
    assert len(pd.wp_elements) == 2


def test_parabolic_reps_are_unique_minima(w_b2):
    pd = w_b2.parabolic((1,))
    for cid, rep in enumerate(pd.coset_reps):
        members = [i for i in range(len(w_b2)) if pd.coset_of[i] == cid]
        lengths = sorted(w_b2.lengths[i] for i in members)
        assert w_b2.lengths[rep] == lengths[0]
        assert lengths[0] < lengths[1]  # the minimum is unique
        assert rep in members


def test_parabolic_counts_multiply(w_b3):
    for sp in [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]:
        pd = w_b3.parabolic(sp)
        assert pd.n_cosets * len(pd.wp_elements) == len(w_b3)
