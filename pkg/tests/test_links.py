import pytest

from borromean.homology import h1
from borromean.links import (
    BadArcDegree,
    Crossing,
    InconsistentOrientation,
    LinkDiagram,
    MissingFraming,
    MissingLabel,
    SameComponent,
    crossing_relator,
    linking_number,
    parse_pd,
    surgery_presentation,
    wirtinger,
    writhe,
    zero_framed_longitude,
)
from borromean.presentation import eliminate_generator, parse_presentation, simplify
from borromean.words import IDENTITY, ParseError, cyclic_normal_form, parse_word
from conftest import DATA, load_pd

BUNDLED = sorted(p.name for p in DATA.glob("*.pd"))
HOPF = ["hopf.pd", "hopf_r1.pd", "hopf_r2.pd"]

COMPLEMENT = parse_presentation(
    """< X, Y, Z |
    Y*Z*Y^-1*X*Y*Z^-1*Y^-1*Z*X^-1*Z^-1,
    X*Y*X^-1*Z*X*Y^-1*X^-1*Y*Z^-1*Y^-1,
    Z*X*Z^-1*Y*Z*X^-1*Z^-1*X*Y^-1*X^-1 >"""
)


def normal(text):
    return cyclic_normal_form(parse_word(text))


def face_count(d):
    """Faces of the diagram's 4-valent plane graph, from the PD rotation system."""
    ends = {}
    for i, c in enumerate(d.crossings):
        for s, e in enumerate(c.slots):
            ends.setdefault(e, []).append((i, s))
    seen, faces = set(), 0
    for start in ((i, s) for i in range(len(d.crossings)) for s in range(4)):
        if start in seen:
            continue
        faces += 1
        dart = start
        while dart not in seen:
            seen.add(dart)
            i, s = dart
            a, b = ends[d.crossings[i].slots[s]]
            j, t = b if a == dart else a
            dart = (j, (t + 1) % 4)
    return faces


def test_circles(unknot, unlink3):
    assert unknot.num_components == 1 and not unknot.crossings
    assert unlink3.num_components == 3 and not unlink3.crossings
    assert str(wirtinger(unknot)[0]) == "< F | >"
    assert str(wirtinger(unlink3)[0]) == "< P, Q, R | >"


def test_borromean_shape(borromean):
    assert borromean.num_components == 3
    assert len(borromean.crossings) == 6
    assert len(borromean.arcs) == 6
    assert set(borromean.arc_names) == set("TUVXYZ")
    assert face_count(borromean) == len(borromean.crossings) + 2


@pytest.mark.parametrize("name", HOPF)
def test_hopf_variants_are_planar(name):
    d = load_pd(name)
    assert face_count(d) == len(d.crossings) + 2


def test_wirtinger_reduces_to_three_relators(borromean):
    P, _ = wirtinger(borromean)
    for g, w in (("T", "X*Y*X^-1"), ("U", "Y*Z*Y^-1"), ("V", "Z*X*Z^-1")):
        P = eliminate_generator(P, g, w)
    assert P.equivalent(COMPLEMENT)


def test_wirtinger_contains_the_inner_crossing_relation(borromean):
    P, _ = wirtinger(borromean)
    rels = {cyclic_normal_form(r) for r in P.relators}
    assert normal("U*X*U^-1*V^-1") in rels
    assert normal("T^-1*X*Y*X^-1") in rels


def test_crossing_relator_pattern():
    c = Crossing((1, 2, 3, 4), under_in=1, under_out=3, over_in=2, over_out=4, sign=1)
    labels = {1: "F", 3: "B", 2: "L", 4: "R"}
    assert cyclic_normal_form(crossing_relator(c, labels)) == normal("R*B^-1*L^-1*F")
    with pytest.raises(MissingLabel):
        crossing_relator(c, {1: "F"})


@pytest.mark.parametrize("pd", ["X[2,2,1,1]", "X[1,2,2,1]"])
def test_kink_relator_is_trivial(pd):
    d = parse_pd(pd)
    assert crossing_relator(d.crossings[0], d.edge_name).cyclically_reduce() == IDENTITY
    assert zero_framed_longitude(d, 0) == IDENTITY
    assert abs(writhe(d, 0)) == 1


@pytest.mark.parametrize("name", BUNDLED)
def test_wirtinger_counts_and_homology(name):
    d = load_pd(name)
    P, meridians = wirtinger(d)
    assert len(P.generators) == len(d.arcs)
    assert len(P.relators) == len(d.crossings)
    for r in P.relators:
        assert sum(r.exponent_sum(g) for g in P.generators) == 0
    group = h1(P)
    assert group.free_rank == d.num_components and not group.torsion
    assert len(meridians.components) == d.num_components


def test_linking_numbers(borromean, unlink3):
    for a in range(3):
        for b in range(3):
            if a != b:
                assert linking_number(borromean, a, b) == 0
                assert linking_number(unlink3, a, b) == 0
    with pytest.raises(SameComponent):
        linking_number(borromean, 1, 1)


@pytest.mark.parametrize("name", HOPF)
def test_hopf_linking_number_survives_reidemeister_moves(name):
    d = load_pd(name)
    assert linking_number(d, 0, 1) == linking_number(d, 1, 0) == linking_number(load_pd("hopf.pd"), 0, 1)
    assert abs(linking_number(d, 0, 1)) == 1


def _component_exponent(d, word, k):
    gens = {name for arc, name in zip(d.arcs, d.arc_names) if d.component_of[arc[0]] == k}
    return sum(word.exponent_sum(g) for g in gens)


@pytest.mark.parametrize("name", BUNDLED)
def test_longitude_exponent_sums(name):
    d = load_pd(name)
    for k in range(d.num_components):
        lam = zero_framed_longitude(d, k)
        assert _component_exponent(d, lam, k) == 0
        for j in range(d.num_components):
            if j != k:
                assert _component_exponent(d, lam, j) == linking_number(d, k, j)


def test_borromean_longitude(borromean):
    lam = zero_framed_longitude(borromean, 0)
    assert borromean.meridian(0) == "X"
    _, subs = simplify(wirtinger(borromean)[0], keep=["X", "Y", "Z"])
    assert cyclic_normal_form(lam.substitute(subs)) == normal("Y*Z^-1*Y^-1*Z")
    assert zero_framed_longitude(load_pd("unknot.pd"), 0) == IDENTITY


def test_surgery_on_the_unlink(unlink3):
    for f in (1, -1):
        S = surgery_presentation(unlink3, [f, f, f])
        assert S.equivalent(parse_presentation(f"< P, Q, R | P^{f}, Q^{f}, R^{f} >"))


def test_surgery_on_borromean_reproduces_glue_relators(borromean, poincare):
    S = surgery_presentation(borromean, {0: -1, 1: -1, 2: -1}, simplify=True)
    assert S.equivalent(poincare)
    raw = surgery_presentation(borromean, [-1, -1, -1])
    assert len(raw.generators) == 6 and len(raw.relators) == 9
    assert h1(raw).is_trivial


def test_surgery_needs_every_framing(borromean):
    with pytest.raises(MissingFraming):
        surgery_presentation(borromean, {0: 1, 1: 1})


def test_empty_diagram():
    d = LinkDiagram([])
    assert d.num_components == 0
    S = surgery_presentation(d, [])
    assert S.generators == () and S.relators == ()


def test_bad_diagrams():
    with pytest.raises(BadArcDegree):
        parse_pd("X[1,2,3,4]")
    with pytest.raises(BadArcDegree):
        parse_pd("X[1,2,2,1] O[1]")
    with pytest.raises(ParseError):
        parse_pd("X[1,2,2,1] Q[3]")
    with pytest.raises(ParseError):
        parse_pd("O[1] N[2,A]")
    with pytest.raises(InconsistentOrientation):
        # the under-strand enters slot 0 at one crossing and slot 2 at the other
        parse_pd("X[1,2,3,4] X[1,2,3,4]")


def test_pd_round_trip(borromean):
    again = parse_pd(borromean.to_pd())
    assert again.arc_names == borromean.arc_names
    assert wirtinger(again)[0] == wirtinger(borromean)[0]


def test_pd_wrapper_and_comments():
    d = parse_pd("PD[X[3,2,4,1], X[1,4,2,3]]  # Hopf link")
    assert d.num_components == 2
