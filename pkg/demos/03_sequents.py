"""Sequent proofs, translations and cut elimination."""

from propkit import parse, parse_list, complete, nc_to_g, g_to_nc, check_gc, check_nc, check_gcf
from propkit.cutfree import gcf_prove, cut_elimination, sizes
from propkit.natded import show_judgement
from propkit.sequent import gax, cut, show_sequent

gamma = parse_list("p -> q, q -> r")
delta = parse_list("p -> r")

d = gcf_prove(gamma, delta)
print(show_sequent(*check_gcf(d)), "nodes:", d.size())

# each backward step removes exactly one connective
for path, node in list(d.nodes())[:6]:
    print(path, node.rule, show_sequent(node.gamma, node.delta), sizes(node.gamma, node.delta))

# not every sequent holds
print(gcf_prove(parse_list("p | q"), parse_list("p")))

########################################
## cuts
########################################

# p => p, p  and  p, p => p  cut together on p
small = cut(gax([parse("p")], parse_list("p, p"), 0, 0), gax(parse_list("p, p"), [parse("p")], 0, 0))
print(show_sequent(*check_gc(small)), small.rule)

# translated natural deduction proofs use Cut for every elimination rule
g = nc_to_g(complete(parse("(p | q) & (p | r) -> p | q & r")))
print("cuts:", sum(1 for _, n in g.nodes() if n.rule == "Cut"), "nodes:", g.size())

e = cut_elimination(g)
print(show_sequent(*check_gcf(e)), "cuts:", sum(1 for _, n in e.nodes() if n.rule == "Cut"), "nodes:", e.size())

# sequent proofs read back as natural deduction: the right side becomes a disjunction
print(show_judgement(*check_nc(g_to_nc(d))))
