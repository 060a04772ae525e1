"""Independent truth-table oracle for the tests.

Each formula is compiled to an integer whose bit ``r`` is its value on row
``r`` of the truth table, so a whole table is computed with a handful of
bitwise operations.  It shares no code with ``propkit.semantics``.
"""

from propkit.formula import Bot, Conj, Disj, Impl, Var


def _collect(f, out):
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Var):
            out.setdefault(g.name, len(out))
        elif not isinstance(g, Bot):
            stack.append(g.rhs)
            stack.append(g.lhs)


def _column(i, n):
    # row r assigns True to variable i iff bit (n - 1 - i) of r is set
    bits = 0
    for r in range(1 << n):
        if r >> (n - 1 - i) & 1:
            bits |= 1 << r
    return bits


class Table:
    def __init__(self, *groups):
        names = {}
        for g in groups:
            for f in g:
                _collect(f, names)
        self.names = list(names)
        self.n = len(names)
        self.full = (1 << (1 << self.n)) - 1
        self.cols = {x: _column(i, self.n) for x, i in names.items()}

    def bits(self, f):
        if isinstance(f, Var):
            return self.cols[f.name]
        if isinstance(f, Bot):
            return 0
        a, b = self.bits(f.lhs), self.bits(f.rhs)
        if isinstance(f, Conj):
            return a & b
        if isinstance(f, Disj):
            return a | b
        assert isinstance(f, Impl)
        return (self.full & ~a) | b

    def all_of(self, fs):
        m = self.full
        for f in fs:
            m &= self.bits(f)
        return m

    def any_of(self, fs):
        m = 0
        for f in fs:
            m |= self.bits(f)
        return m


def sequent_holds(gamma, delta):
    t = Table(gamma, delta)
    return t.all_of(gamma) & ~t.any_of(delta) & t.full == 0


def entails(ctx, f):
    return sequent_holds(list(ctx), [f])


def valid(f):
    return entails([], f)
