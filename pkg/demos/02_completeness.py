"""From a valid formula to a checked natural deduction proof, then to Hilbert style."""

from propkit import parse, check_nc, complete, nc_to_hc, check_hc, hc_to_nc
from propkit.normalforms import make_nnf, make_cnf, cnf_to_json, nnf_to_formula
from propkit.formula import format_formula
from propkit.natded import show_judgement

peirce = parse("((p -> q) -> p) -> p")

# the pipeline goes through negation normal form and then CNF
nnf = make_nnf(peirce)
print(format_formula(nnf_to_formula(nnf)))
print(cnf_to_json(make_cnf(nnf)))

proof = complete(peirce)
print(show_judgement(*check_nc(proof)))
print("nodes:", proof.size(), "height:", proof.height())

# an invalid formula comes back as a falsifying valuation
print(complete(parse("(p -> q) -> q -> p")))

########################################
## the same proof in the Hilbert calculus
########################################

h = nc_to_hc(proof)
print(show_judgement(*check_hc(h)))
print("hilbert nodes:", h.size())

schemata = {}
for _, node in h.nodes():
    if node.rule == "Hax":
        schemata[node.schema] = schemata.get(node.schema, 0) + 1
print(schemata)

# and back again
back = hc_to_nc(h)
print(check_nc(back)[1] == peirce, back.size())
