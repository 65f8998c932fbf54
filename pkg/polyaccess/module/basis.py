"""Gröbner bases for submodules of the free module R^n.

Elements are tuples of PolyElements. Terms are ordered position over term:
the lead of a vector is the leading term of its first nonzero component, so
positions rank by coordinate index and ties break in the ring order. Pairs
are only formed between elements leading in the same position; the chain
criterion discards redundant ones.
"""

import logging
from itertools import count

from polyaccess.core.exceptions import VarTableMismatch
from polyaccess.poly.core import VarTable

logger = logging.getLogger(__name__)


def lead(vec):
    """Return ``(position, monomial, coefficient)`` of the lead term, or None."""
    for pos, c in enumerate(vec):
        if c:
            monom, coeff = c.LT
            return pos, monom, coeff
    return None


def monic(vec):
    _, _, coeff = lead(vec)
    inv = 1 / coeff
    return tuple(c * inv for c in vec)


def _shift(vec, monom, coeff):
    return tuple(c.mul_term((monom, coeff)) for c in vec)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def normal_form(vec, basis, leads, ring):
    """Full normal form of ``vec`` modulo monic ``basis`` with lead data ``leads``."""
    v = list(vec)
    rest = [ring.zero] * len(v)
    while True:
        top = lead(v)
        if top is None:
            return tuple(rest)
        pos, monom, coeff = top
        for g, (gpos, gmon) in zip(basis, leads):
            if gpos != pos:
                continue
            q = ring.monomial_div(monom, gmon)
            if q is not None:
                v = list(_sub(v, _shift(g, q, coeff)))
                break
        else:
            term = ring.term_new(monom, coeff)
            v[pos] = v[pos] - term
            rest[pos] = rest[pos] + term


class ModuleBasis:
    """Incrementally maintained Gröbner basis of a submodule of R^n."""

    def __init__(self, table: VarTable):
        self.table = table
        self.ring = table.ring
        self.basis = []
        self.leads = []
        self._pairs = set()
        self._counter = count()

    def __len__(self):
        return len(self.basis)

    def _as_vector(self, field):
        vec = tuple(field)
        if len(vec) != self.table.n:
            raise VarTableMismatch(f"vector of length {len(vec)} in a rank-{self.table.n} module")
        self.table.check(*vec)
        return vec

    def reduce(self, field):
        return normal_form(self._as_vector(field), self.basis, self.leads, self.ring)

    def contains(self, field) -> bool:
        return not any(self.reduce(field))

    def add(self, field) -> bool:
        """Add a generator; return False if it was already a member."""
        vec = self.reduce(field)
        if not any(vec):
            return False
        self._insert(vec)
        self._complete()
        return True

    def _insert(self, vec):
        vec = monic(vec)
        pos, monom, _ = lead(vec)
        j = len(self.basis)
        self.basis.append(vec)
        self.leads.append((pos, monom))
        for i, (ipos, _) in enumerate(self.leads[:-1]):
            if ipos == pos:
                self._pairs.add((i, j))

    def _lcm(self, pair):
        i, j = pair
        return self.ring.monomial_lcm(self.leads[i][1], self.leads[j][1])

    def _chain_redundant(self, pair, lcm):
        i, j = pair
        pos = self.leads[i][0]
        for k, (kpos, kmon) in enumerate(self.leads):
            if k in pair or kpos != pos:
                continue
            if self.ring.monomial_div(lcm, kmon) is None:
                continue
            if (min(i, k), max(i, k)) not in self._pairs and (min(j, k), max(j, k)) not in self._pairs:
                return True
        return False

    def _spoly(self, pair, lcm):
        i, j = pair
        one = self.ring.domain.one
        a = _shift(self.basis[i], self.ring.monomial_div(lcm, self.leads[i][1]), one)
        b = _shift(self.basis[j], self.ring.monomial_div(lcm, self.leads[j][1]), one)
        return _sub(a, b)

    def _complete(self):
        while self._pairs:
            pair = min(self._pairs, key=lambda p: (sum(self._lcm(p)), p))
            self._pairs.discard(pair)
            lcm = self._lcm(pair)
            if self._chain_redundant(pair, lcm):
                continue
            h = normal_form(self._spoly(pair, lcm), self.basis, self.leads, self.ring)
            if any(h):
                self._insert(h)
        logger.debug("module basis has %d elements", len(self.basis))

    def reduced(self) -> tuple:
        """Reduced basis: minimal, interreduced, monic, sorted by lead."""
        keep = []
        for i, (pos, monom) in enumerate(self.leads):
            redundant = False
            for j, (qpos, qmon) in enumerate(self.leads):
                if i == j or qpos != pos or self.ring.monomial_div(monom, qmon) is None:
                    continue
                if qmon != monom or j < i:
                    redundant = True
                    break
            if not redundant:
                keep.append(i)
        basis = [self.basis[i] for i in keep]
        leads = [self.leads[i] for i in keep]
        out = []
        for i, g in enumerate(basis):
            others = basis[:i] + basis[i + 1:]
            other_leads = leads[:i] + leads[i + 1:]
            top = self.ring.term_new(leads[i][1], self.ring.domain.one)
            head = tuple(top if p == leads[i][0] else self.ring.zero for p in range(len(g)))
            tail = normal_form(_sub(g, head), others, other_leads, self.ring)
            out.append(tuple(h + t for h, t in zip(head, tail)))
        order = self.ring.order
        out.sort(key=lambda v: order(lead(v)[1]), reverse=True)
        out.sort(key=lambda v: lead(v)[0])
        return tuple(out)

    def __iter__(self):
        return iter(self.basis)
