"""The eight acceptance criteria, each at its stated scale.

Every test prints a single PASS or FAIL line (also repeated in the pytest
terminal summary) and then asserts.
"""

import json
import random
import time
from itertools import product

from propkit.cli import main
from propkit.cutfree import check_gcf, cut_elimination, gcf_prove, sizes
from propkit.formula import BOT, Var, format_formula, variables_of
from propkit.generators import formulas_up_to, lists_up_to, random_formula, random_gc, random_nc
from propkit.hilbert import check_hc, nc_to_hc
from propkit.natded import check_nc
from propkit.normalforms import (
    LBot,
    LNeg,
    LPos,
    LTop,
    clause_is_valid,
    clause_to_formula,
    cnf_provable,
    cnf_to_formula,
    complete,
    make_cnf,
    make_nnf,
    nnf_to_formula,
)
from propkit.semantics import evaluate, models, sequent_models, valuations
from propkit.sequent import big_or, check_gc, g_to_nc, g_to_nc_neg, nc_to_g, neg_list
from propkit.serialize import from_json, to_json

import oracle

NAMES = ("p", "q", "r", "s")
p, q = Var("p"), Var("q")


def test_1_soundness(report):
    rng = random.Random(1001)
    start = time.perf_counter()
    failures = 0
    n = 1000
    for _ in range(n):
        d = random_nc(rng, depth=8, names=NAMES)
        ctx, a = check_nc(d)
        assert d.height() <= 8 and len(variables_of(*ctx, a)) <= 4
        if not models(ctx, a):
            failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed <= 60
    report(1, ok, f"{n} derivations, {failures} unsound, {elapsed:.1f}s (limit 60s)")
    assert ok


def test_2_completeness(report):
    start = time.perf_counter()
    fs = formulas_up_to(3, [p, q, BOT])
    discrepancies = proofs = 0
    for f in fs:
        out = complete(f)
        if isinstance(out, dict):
            if oracle.valid(f) or evaluate(out, f):
                discrepancies += 1
        else:
            proofs += 1
            if not oracle.valid(f) or check_nc(out) != ((), f):
                discrepancies += 1
    elapsed = time.perf_counter() - start
    ok = discrepancies == 0 and elapsed <= 120
    report(2, ok, f"{len(fs)} formulas, {proofs} proved, {discrepancies} discrepancies, {elapsed:.1f}s (limit 120s)")
    assert ok


def test_3_normal_form_equivalences(report):
    rng = random.Random(3003)
    mismatches = checks = 0
    for _ in range(500):
        f = random_formula(rng, NAMES, depth=6)
        pos, neg_ = make_nnf(f), make_nnf(f, True)
        cnf = cnf_to_formula(make_cnf(pos))
        for v in valuations(variables_of(f)):
            checks += 1
            value = evaluate(v, f)
            if evaluate(v, nnf_to_formula(pos)) != value:
                mismatches += 1
            if evaluate(v, nnf_to_formula(neg_)) != (not value):
                mismatches += 1
            if evaluate(v, cnf) != evaluate(v, nnf_to_formula(pos)):
                mismatches += 1
    ok = mismatches == 0
    report(3, ok, f"500 formulas, {checks} valuations, {mismatches} mismatches")
    assert ok


def test_4_clause_decision(report):
    literals = [LPos("p"), LNeg("p"), LPos("q"), LNeg("q"), LBot(), LTop()]
    clauses = [c for n in range(5) for c in product(literals, repeat=n)]
    wrong = valid = 0
    for c in clauses:
        decided = clause_is_valid(c)
        if decided != models([], clause_to_formula(c)):
            wrong += 1
        if decided:
            valid += 1
            if check_nc(cnf_provable([c])) != ((), cnf_to_formula([c])):
                wrong += 1
    ok = wrong == 0
    report(4, ok, f"{len(clauses)} clauses over {len(literals)} literals, {valid} valid, {wrong} errors")
    assert ok


def test_5_calculus_equivalence(report):
    rng = random.Random(5005)
    failures = 0
    for _ in range(300):
        d = random_nc(rng, depth=8, names=NAMES)
        ctx, a = check_nc(d)
        if check_hc(nc_to_hc(d)) != (ctx, a):
            failures += 1
        if check_gc(nc_to_g(d)) != (ctx, (a,)):
            failures += 1
    for _ in range(300):
        g = random_gc(rng, names=NAMES)
        gamma, delta = check_gc(g)
        if check_nc(g_to_nc(g)) != (gamma, big_or(delta)):
            failures += 1
        if check_nc(g_to_nc_neg(g)) != (gamma + neg_list(delta), BOT):
            failures += 1
    ok = failures == 0
    report(5, ok, f"300 Nc and 300 Gc derivations translated, {failures} failures")
    assert ok


def test_6_decision_procedure(report):
    start = time.perf_counter()
    sides = lists_up_to(formulas_up_to(2, [p, q]), 2)
    disagreements = bad_proofs = bad_steps = proved = 0
    for gamma, delta in product(sides, repeat=2):
        out = gcf_prove(gamma, delta)
        if isinstance(out, dict) == sequent_models(gamma, delta):
            disagreements += 1
        if isinstance(out, dict):
            continue
        proved += 1
        if check_gcf(out) != (gamma, delta):
            bad_proofs += 1
        for _, node in out.nodes():
            here = sizes(node.gamma, node.delta)
            bad_steps += sum(1 for x in node.premises if sizes(x.gamma, x.delta) >= here)
    elapsed = time.perf_counter() - start
    ok = disagreements == bad_proofs == bad_steps == 0 and elapsed <= 120
    report(
        6,
        ok,
        f"{len(sides) ** 2} sequents, {proved} proved, {disagreements} disagreements, "
        f"{bad_proofs} bad proofs, {bad_steps} non-decreasing steps, {elapsed:.1f}s (limit 120s)",
    )
    assert ok


def test_7_cut_elimination(report):
    rng = random.Random(7007)
    failures = cuts_in = 0
    for _ in range(300):
        d = random_gc(rng, names=NAMES, force_cut=True)
        check_gc(d)
        cuts_in += sum(1 for _, n in d.nodes() if n.rule == "Cut")
        e = cut_elimination(d)
        ok = check_gcf(e) == (d.gamma, d.delta) and not e.has_cut()
        ok = ok and all(type(n.gamma[n.pos[0]]) is Var for _, n in e.nodes() if n.rule == "Gax")
        failures += not ok
    ok = failures == 0
    report(7, ok, f"300 derivations with {cuts_in} cuts, {failures} failures")
    assert ok


def _samples(rng):
    return {
        "nc": [random_nc(rng, depth=6, names=NAMES) for _ in range(100)],
        "hc": [nc_to_hc(random_nc(rng, depth=5, names=NAMES)) for _ in range(100)],
        "gc": [random_gc(rng, names=NAMES) for _ in range(100)],
        "gcf": [gcf_prove(g.gamma, g.delta) for g in (random_gc(rng, names=NAMES) for _ in range(100))],
    }


def _nodes(obj, out):
    out.append(obj)
    for x in obj["premises"]:
        _nodes(x, out)
    return out


FRESH = "fresh_var_0"


def _mutate(rng, calculus, text):
    """Change one field of one node so the result can no longer check."""
    obj = json.loads(text)
    nodes = _nodes(obj, [])
    node = rng.choice(nodes)
    options = ["rule"]
    if calculus in ("nc", "hc"):
        options.append("formula")
        if "index" in node:
            options.append("index")
    else:
        if node.get("pos"):
            options.append("pos")
        if node.get("aux"):
            options.append("aux")
    field = rng.choice(options)
    if field == "rule":
        node["rule"] = node["rule"] + "X"
    elif field == "formula":
        node["formula"] = FRESH
    elif field == "index":
        node["index"] = len(node["context"]) + rng.randint(0, 3)
    elif field == "pos":
        k = rng.randrange(len(node["pos"]))
        node["pos"][k] = 1000 + k
    else:
        node["aux"][0] = FRESH
    return json.dumps(obj, sort_keys=True, separators=(",", ":")), field


def test_8_serialization(report, tmp_path, capsys):
    rng = random.Random(8008)
    samples = _samples(rng)
    bad_round_trips = rejected_good = 0
    for calculus, ds in samples.items():
        for i, d in enumerate(ds):
            text = to_json(d)
            back = from_json(text)
            if back != d or to_json(back) != text or json.loads(text)["calculus"] != calculus:
                bad_round_trips += 1
            path = tmp_path / f"{calculus}{i}.json"
            path.write_text(text)
            if main(["check", str(path)]) != 0:
                rejected_good += 1
    accepted_bad = 0
    fields = []
    for k in range(100):
        calculus = ("nc", "hc", "gc", "gcf")[k % 4]
        text = to_json(samples[calculus][k // 4])
        mutated, field = _mutate(rng, calculus, text)
        fields.append(field)
        assert mutated != text
        path = tmp_path / f"bad{k}.json"
        path.write_text(mutated)
        if main(["check", str(path)]) != 2:
            accepted_bad += 1
    capsys.readouterr()
    ok = bad_round_trips == rejected_good == accepted_bad == 0
    report(
        8,
        ok,
        f"400 round trips ({bad_round_trips} inexact), {rejected_good} valid files rejected, "
        f"{accepted_bad} of 100 mutations accepted ({', '.join(f'{f}={fields.count(f)}' for f in sorted(set(fields)))})",
    )
    assert ok
