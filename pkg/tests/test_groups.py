import random

import pytest

import oracles
from cga.groups import (
    CapExceeded,
    ClassLabel,
    GroupSpec,
    SubgroupGens,
    centralizer_elements,
    centralizer_gens,
    centralizer_order,
    class_label_of,
    class_labels,
    class_representative,
    class_size,
    classify_classes,
    close,
    cycle_types,
    has_abelian_centralizer,
    in_class,
    is_abelian,
    lies_in_abelian_centralizer,
    maximal_abelian_overgroups,
)
from cga.perm import CycleType, Permutation, conjugate, cycle_decomposition, is_even, parse_cycles, power

SPECS_UP_TO_9 = [GroupSpec(f, n) for n in range(1, 10) for f in ("sym", "alt")]


def _random_element(spec, rng):
    while True:
        imgs = list(range(spec.degree))
        rng.shuffle(imgs)
        p = Permutation(imgs)
        if spec.contains(p):
            return p


@pytest.mark.parametrize("spec", SPECS_UP_TO_9, ids=str)
def test_centralizers_match_full_scan(spec):
    for label in class_labels(spec):
        g = class_representative(label)
        expected = oracles.centralizer_scan(g.images, spec.family)
        got = {x.images for x in close(centralizer_gens(g, spec))}
        assert got == expected, f"{label} in {spec}"
        assert centralizer_order(g, spec) == len(expected)
        assert is_abelian(centralizer_gens(g, spec)) == oracles.is_abelian_set(expected)
        assert has_abelian_centralizer(g, spec) == oracles.is_abelian_set(expected)


@pytest.mark.parametrize("n", range(1, 10))
def test_symmetric_centralizer_order_formula(n):
    for t in cycle_types(n):
        g = t.representative()
        assert len(close(centralizer_gens(g, GroupSpec.sym(n)))) == t.centralizer_order()


def _brown_types():
    for n in range(2, 10):
        for t in cycle_types(n):
            if t.parts and len(set(t.parts)) == len(t.parts) and t.fixed <= 3:
                yield t


@pytest.mark.parametrize("t", list(_brown_types()), ids=lambda t: f"{t}/{t.degree}")
def test_distinct_cycle_lengths_centralizer_shape(t):
    """With distinct cycle lengths, a centralizing element is a power of each
    cycle on that cycle's points times a permutation of the fixed points."""
    g = t.representative()
    n = t.degree
    cycles = cycle_decomposition(g)
    moved = set(g.support())
    for images in oracles.centralizer_scan(g.images, "sym"):
        x = Permutation(images)
        for c in cycles:
            k = x(c[0])
            assert k in c
            shift = c.index(k)
            assert all(x(c[i]) == c[(i + shift) % len(c)] for i in range(len(c)))
        assert all(x(p) not in moved for p in range(n) if p not in moved)


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("family", ["sym", "alt"])
def test_class_sizes_and_splitting(n, family):
    spec = GroupSpec(family, n)
    labels = class_labels(spec)
    assert sum(class_size(lab, spec) for lab in labels) == spec.order()
    classes = oracles.conjugacy_classes(family, n)
    assert len(classes) == len(labels)
    seen = set()
    for orbit in classes:
        members = [Permutation(p) for p in orbit]
        lab = class_label_of(members[0], spec)
        assert all(class_label_of(m, spec) == lab for m in members)
        assert class_size(lab, spec) == len(orbit)
        assert in_class(class_representative(lab), lab, spec)
        seen.add(lab)
    assert seen == set(labels)


def _oracle_yb(family, n):
    """Classes disjoint from every abelian centralizer, from full scans."""
    classes = oracles.conjugacy_classes(family, n)
    covered = set()
    for orbit in classes:
        h = min(orbit)
        if h == tuple(range(n)):
            continue
        c = oracles.centralizer_scan(h, family)
        if oracles.is_abelian_set(c):
            covered |= c
    out = set()
    for orbit in classes:
        if tuple(range(n)) in orbit:
            continue  # the identity is not classified
        if orbit.isdisjoint(covered):
            out.add(class_label_of(Permutation(min(orbit)), GroupSpec(family, n)))
    return out


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("family", ["sym", "alt"])
def test_classification_matches_oracle(n, family):
    spec = GroupSpec(family, n)
    table = classify_classes(spec)
    assert not table.undecided
    assert {r.label for r in table.yb} == _oracle_yb(family, n)
    for r in table.records:
        if r.in_ya:
            assert r.witness is not None
            assert is_abelian(centralizer_gens(r.witness, spec))
            assert r.witness.images in oracles.centralizer_scan(r.representative.images, family)


@pytest.mark.parametrize("n", [6, 8, 9])
def test_membership_is_class_invariant(n):
    rng = random.Random(n)
    spec = GroupSpec.alt(n)
    for label in class_labels(spec):
        if not label.cycle_type.parts:
            continue
        g = class_representative(label)
        base = lies_in_abelian_centralizer(g, spec).in_ya
        for _ in range(5):
            q = _random_element(spec, rng)
            m = lies_in_abelian_centralizer(conjugate(g, q), spec)
            assert m.in_ya == base
            if m.in_ya:
                assert is_abelian(centralizer_gens(m.witness, spec))
                assert conjugate(g, q) in set(centralizer_elements(m.witness, spec))


def test_undecided_when_cap_too_small():
    spec = GroupSpec.alt(9)
    g = parse_cycles("(1,2,3,4)(5,6,7,8)", 9)
    m = lies_in_abelian_centralizer(g, spec, cap=5)
    assert m.in_ya is None


def test_close_respects_cap():
    s = SubgroupGens(8, [parse_cycles("(1,2)", 8), parse_cycles("(1,2,3,4,5,6,7,8)", 8)])
    with pytest.raises(CapExceeded):
        close(s, cap=100)
    assert len(close(s)) == 40320


def test_is_abelian_examples():
    n = 8
    assert is_abelian(SubgroupGens(n, [parse_cycles("(1,2,3,4)", n)]))
    assert is_abelian(SubgroupGens(n, [parse_cycles("(1,2,3)", n), parse_cycles("(4,5,6)", n),
                                       parse_cycles("(7,8)", n)]))
    assert not is_abelian(SubgroupGens(n, [parse_cycles("(1,2)", n), parse_cycles("(1,3)", n)]))


def test_alt_centralizer_is_even_part():
    g = parse_cycles("(1,2,3,4)(5,6,7,8)", 8)
    sym_c = close(centralizer_gens(g, GroupSpec.sym(8)))
    alt_c = close(centralizer_gens(g, GroupSpec.alt(8)))
    assert set(alt_c) == {x for x in sym_c if is_even(x)}
    assert len(alt_c) == 16


def test_maximal_abelian_overgroups_small():
    # a 3-cycle in A_5 has cyclic centralizer of order 3: one overgroup, itself
    spec = GroupSpec.alt(5)
    g = parse_cycles("(1,2,3)", 5)
    groups = maximal_abelian_overgroups(g, spec)
    assert len(groups) == 1 and len(groups[0].cached) == 3
    # a double transposition in A_5: its centralizer is the Klein four-group
    h = parse_cycles("(1,2)(3,4)", 5)
    assert [len(x.cached) for x in maximal_abelian_overgroups(h, spec)] == [4]


@pytest.mark.parametrize("n", [6, 7, 8])
def test_maximal_abelian_overgroups_against_brute_force(n):
    """Each returned group is abelian, contains g, and cannot be enlarged."""
    spec = GroupSpec.alt(n)
    for label in class_labels(spec):
        if not label.cycle_type.parts:
            continue
        g = class_representative(label)
        cg = oracles.centralizer_scan(g.images, "alt")
        for grp in maximal_abelian_overgroups(g, spec):
            elems = {x.images for x in grp.cached}
            assert g.images in elems and oracles.is_abelian_set(elems)
            for y in cg - elems:
                assert not all(oracles.commute(y, e) for e in elems)


def test_power_of_representative_stays_in_centralizer():
    spec = GroupSpec.alt(9)
    g = class_representative(ClassLabel(CycleType((4, 4), 9)))
    cent = set(centralizer_elements(g, spec))
    assert all(power(g, k) in cent for k in range(4))
