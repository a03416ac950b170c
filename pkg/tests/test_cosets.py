import pytest

from borromean.cosets import DEFAULT_MAX_COSETS, Exhausted, enumerate_cosets, todd_coxeter
from borromean.perm import check_relations, closure, evaluate_word
from borromean.presentation import parse_presentation
from borromean.words import parse_word

GROUPS = {
    "< a | a^7 >": 7,
    "< a, b | a^2, b^3, (a*b)^5 >": 60,
    "< a, b | a^2, b^3, (a*b)^4 >": 24,
    "< a, b | a^2, b^3, (a*b)^3 >": 12,
    "< a, b | a^2, b^2, (a*b)^6 >": 12,
    "< a, b | a^2, b^3, (a*b)^7, (a^-1*b^-1*a*b)^4 >": 168,
    "< a, b | a^4, b^2*a^-2, b^-1*a*b*a >": 8,
    "< a, b | a*b*a^-1*b^-1 , a^3, b^5 >": 15,
    "< x | >": None,
}


def check_table(P, table):
    """The coset action satisfies every relator and is transitive."""
    rep = table.permutation_representation()
    assert check_relations(P, rep)
    G = closure(list(rep.values()), table.index)
    orbit = {p(1) for p in G}
    assert orbit == set(range(1, table.index + 1))
    return G


@pytest.mark.parametrize("text, order", [(t, o) for t, o in GROUPS.items() if o])
@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
def test_known_orders(text, order, strategy):
    P = parse_presentation(text)
    table = enumerate_cosets(P, strategy=strategy)
    assert table.index == order
    G = check_table(P, table)
    # the regular action of a group of order n on its own cosets
    assert G.order() == order


def test_infinite_group_exhausts():
    with pytest.raises(Exhausted) as info:
        todd_coxeter(parse_presentation("< x | >"), max_cosets=50)
    assert info.value.max_cosets == 50
    assert "inconclusive" in str(info.value)


def test_small_budget_exhausts_on_a_finite_group(poincare):
    with pytest.raises(Exhausted):
        todd_coxeter(poincare, max_cosets=20)


def test_trivial_groups(puzzle):
    assert todd_coxeter(puzzle) == 1
    assert todd_coxeter(puzzle, strategy="felsch") == 1
    assert todd_coxeter(parse_presentation("< X | X >")) == 1
    assert todd_coxeter(parse_presentation("< | >")) == 1


def test_poincare_orders(poincare, poincare_ab):
    for P in (poincare, poincare_ab):
        table = enumerate_cosets(P)
        assert table.index == 120
        check_table(P, table)


def test_subgroup_index():
    P = parse_presentation("< a, b | a^2, b^3, (a*b)^5 >")
    assert todd_coxeter(P, subgroup=["b"]) == 20
    assert todd_coxeter(P, subgroup=["a"]) == 30
    assert todd_coxeter(P, subgroup=["a", "b"]) == 1
    assert todd_coxeter(P, subgroup=[parse_word("a*b")], strategy="felsch") == 12


def test_subgroup_words_are_checked():
    P = parse_presentation("< a | a^3 >")
    with pytest.raises(ValueError):
        todd_coxeter(P, subgroup=["c"])


def test_bad_arguments():
    P = parse_presentation("< a | a^3 >")
    with pytest.raises(ValueError):
        todd_coxeter(P, max_cosets=0)
    with pytest.raises(ValueError):
        todd_coxeter(P, strategy="random")


def test_deterministic(puzzle):
    a = enumerate_cosets(puzzle)
    b = enumerate_cosets(puzzle)
    assert a == b and a.total_defined == b.total_defined
    assert a.total_defined <= DEFAULT_MAX_COSETS


def test_act_and_right_action():
    P = parse_presentation("< a | a^5 >")
    table = enumerate_cosets(P)
    assert table.act(0, parse_word("a^5")) == 0
    r = table.right_action("a")
    assert r.order() == 5
    assert evaluate_word(parse_word("a^5"), table.permutation_representation()).is_identity()


def test_json(poincare_ab):
    data = enumerate_cosets(poincare_ab).to_json()
    assert data["index"] == 120 and data["generators"] == ["A", "B"]
