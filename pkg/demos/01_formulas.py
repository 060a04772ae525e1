"""Formulas, valuations and truth tables."""

from propkit import parse, format_formula, variables_of
from propkit.semantics import evaluate, find_countermodel, truth_table, format_valuation

########################################
## parsing and printing
########################################

# ~ binds tightest, then &, then |, then ->; everything groups to the right
f = parse("p & q -> ~r | p")
print(format_formula(f))
print(repr(f))

# negation is sugar for "implies bot", and top is ~bot
print(repr(parse("~p")))
print(format_formula(parse("bot -> bot")))

print(variables_of(parse("q -> p & q")))

########################################
## evaluating
########################################

v = {"p": True, "q": False}
print(evaluate(v, parse("p -> q")))
print(evaluate(v, parse("p | r")))  # r is missing, so false

# rows in counting order: false before true, last variable fastest
names, rows = truth_table(parse("p -> q"))
print(" ".join(names), "| p -> q")
for row, value in rows:
    print(" ".join("T" if row[n] else "F" for n in names), "|", "T" if value else "F")

# the first row that breaks the formula
print(format_valuation(find_countermodel([parse("p | q")], parse("p"))))
