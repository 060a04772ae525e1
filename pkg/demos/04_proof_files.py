"""Writing derivations to JSON, reading them back, and catching tampering."""

import json

from propkit import parse, complete, from_json, to_json, check_derivation, ProofError

d = complete(parse("p | ~p"))
text = to_json(d)
print(len(text), text[:120])

# bit-exact both ways
assert from_json(text) == d
assert to_json(from_json(text)) == text

# change one assumption index deep in the tree
doc = json.loads(text)
node = doc
path = []
while node["rule"] != "Nax":
    path.append(len(node["premises"]) - 1)
    node = node["premises"][-1]
node["index"] = 9

try:
    check_derivation(from_json(json.dumps(doc)))
except ProofError as e:
    print(e)
    print(e.path == tuple(path))
