import random

from propkit.formula import BOT, Var, depth
from propkit.generators import formulas_up_to, lists_up_to, random_formula, random_gc, random_nc
from propkit.natded import check_nc
from propkit.sequent import check_gc


def test_formula_counts():
    # n atoms, three binary connectives: a(k+1) = n + 3 a(k)^2
    assert len(formulas_up_to(1, [Var("p")])) == 1
    assert len(formulas_up_to(2, [Var("p"), Var("q")])) == 14
    assert len(formulas_up_to(3, [Var("p"), Var("q"), BOT])) == 2703


def test_formula_depths():
    fs = formulas_up_to(3, [Var("p"), BOT])
    assert max(map(depth, fs)) == 3
    assert len(set(fs)) == len(fs)


def test_lists_up_to():
    assert len(lists_up_to("ab", 2)) == 1 + 2 + 4


def test_random_formula_depth_bound():
    rng = random.Random(3)
    assert all(depth(random_formula(rng, depth=5)) <= 5 for _ in range(500))


def test_random_derivations_check_and_respect_bounds():
    rng = random.Random(4)
    for _ in range(200):
        d = random_nc(rng, depth=8)
        check_nc(d)
        assert d.height() <= 8
        g = random_gc(rng, force_cut=True)
        check_gc(g)
        assert g.rule == "Cut"
