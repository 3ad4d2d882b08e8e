"""Truncated infinite-jet quotients and their graded dimensions.

For a presented ring (see :class:`jetchar.superring.RingSpec`) the jet
algebra is the free super-polynomial ring on all jet variables ``x[i]``
modulo the differential ideal generated by the relations, their
T-derivatives of every order, and any extra generators (again with all
T-derivatives).

Everything here is graded by the doubled degree, which is finite in each
piece, so each graded component is handled by exact rational linear algebra:
rows are the ideal elements ``m * T^j(g)`` landing in that degree, columns
are the jet monomials of that degree, and the quotient dimension is
``#columns - rank``.

Rows are scaled to integers and reduced by a sparse Gaussian echelon with
deterministic smallest-column pivoting, so ranks do not depend on dict
ordering, generator order, or scalar rescalings of the generators.
"""

import math
from fractions import Fraction

DEFAULT_MONOMIAL_LIMIT = 200_000


class ResourceLimitError(RuntimeError):
    """Raised when a graded piece exceeds the monomial budget."""


def enumerate_monomials(spec, degree2, limit=DEFAULT_MONOMIAL_LIMIT):
    """All jet monomials of the given doubled degree, in a fixed order.

    Atoms are taken ascending in the canonical atom order ``(degree2, base,
    shift)``; odd atoms appear at most once.  The result is deterministic and
    each monomial tuple is already canonical.
    """
    if degree2 < 0:
        return []
    atoms = []
    for base, v in enumerate(spec.variables):
        shift = 0
        while v.weight2 + 2 * shift <= degree2:
            atoms.append((base, shift))
            shift += 1
    atoms.sort(key=spec.atom_key)
    out = []

    def rec(i, remaining, stack):
        if remaining == 0:
            out.append(tuple(stack))
            if len(out) > limit:
                raise ResourceLimitError(
                    "more than %d monomials at degree2=%d" % (limit, degree2))
            return
        if i == len(atoms):
            return
        d = spec.atom_degree2(atoms[i])
        if d > remaining:
            return  # atoms are sorted by degree; no later atom fits either
        rec(i + 1, remaining, stack)
        odd = spec.atom_odd(atoms[i])
        e = 1
        while e * d <= remaining and (e == 1 or not odd):
            stack.extend([atoms[i]] * 1)
            rec(i + 1, remaining - e * d, stack)
            e += 1
            if odd:
                break
        while stack and stack[-1] == atoms[i]:
            stack.pop()

    rec(0, degree2, [])
    return out


class Echelon:
    """Sparse integer row echelon with deterministic pivoting.

    Rows are dicts ``{column: int}``.  ``insert`` reduces a row against the
    current pivots (always eliminating the smallest column first) and, if a
    nonzero remainder survives, installs it as a new pivot after dividing by
    its content.  ``reduce`` performs the same elimination without
    installing, so membership tests do not grow the basis.
    """

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def _eliminate(self, row):
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row, c
            a = piv[c]
            b = row[c]
            g = math.gcd(a, b)
            fa = a // g
            fb = b // g
            if fa != 1:
                for k in row:
                    row[k] *= fa
            for k, v in piv.items():
                nv = row.get(k, 0) - fb * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row, None

    def insert(self, row):
        """Insert a row; returns True when it increased the rank."""
        row, c = self._eliminate(dict(row))
        if c is None:
            return False
        g = 0
        for v in row.values():
            g = math.gcd(g, v)
        if row[c] < 0:
            g = -g
        if g != 1:
            for k in row:
                row[k] //= g
        self.pivots[c] = row
        return True

    def reduce(self, row):
        """Reduce a row without installing; returns the remainder dict."""
        row, _ = self._eliminate(dict(row))
        return row


def _int_row(columns, poly):
    """Clear denominators of a polynomial supported on ``columns``."""
    if not poly:
        return {}
    denom = 1
    for c in poly.values():
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    row = {}
    for mono, c in poly.items():
        row[columns[mono]] = int(c * denom)
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
    if g > 1:
        for k in row:
            row[k] //= g
    return row


class _TPowers:
    """Cache of T^j(generator) polynomials, shared across degrees."""

    def __init__(self, spec):
        self.spec = spec
        gens = list(spec.relations) + list(spec.extras)
        self.gens = [g for g in gens if g]  # odd squares normalise to zero
        self.base_degree2 = [spec.degree2(g) for g in self.gens]
        self._pow = [[g] for g in self.gens]

    def get(self, i, j):
        seq = self._pow[i]
        while len(seq) <= j:
            seq.append(self.spec.derive(seq[-1]))
        return seq[j]


def ideal_rows(spec, degree2, tpowers=None, limit=DEFAULT_MONOMIAL_LIMIT):
    """Integer rows spanning the degree-``degree2`` slice of the ideal.

    Yields ``(columns, rows)`` where ``columns`` maps each monomial of the
    degree to its index and ``rows`` is a list of sparse integer rows for the
    products ``m * T^j(g)``.
    """
    if tpowers is None:
        tpowers = _TPowers(spec)
    monos = enumerate_monomials(spec, degree2, limit=limit)
    columns = {m: i for i, m in enumerate(monos)}
    rows = []
    for i in range(len(tpowers.gens)):
        d0 = tpowers.base_degree2[i]
        j = 0
        while d0 + 2 * j <= degree2:
            tg = tpowers.get(i, j)
            if tg:
                for m in enumerate_monomials(spec, degree2 - d0 - 2 * j, limit=limit):
                    prod = spec.mul_mono_poly(m, tg)
                    if prod:
                        rows.append(_int_row(columns, prod))
            j += 1
    # Short structured rows first: they pin pivots cheaply and keep fill low.
    rows.sort(key=lambda r: (len(r), min(r) if r else -1))
    return columns, rows


def ideal_basis(spec, degree2, tpowers=None, limit=DEFAULT_MONOMIAL_LIMIT):
    """Echelon basis of the degree slice of the differential ideal.

    Returns ``(echelon, n_columns)``; the quotient dimension of the slice is
    ``n_columns - echelon.rank``.
    """
    columns, rows = ideal_rows(spec, degree2, tpowers=tpowers, limit=limit)
    ech = Echelon()
    for row in rows:
        ech.insert(row)
    return ech, len(columns)


def graded_dimension(spec, degree2, tpowers=None, limit=DEFAULT_MONOMIAL_LIMIT):
    ech, ncols = ideal_basis(spec, degree2, tpowers=tpowers, limit=limit)
    return ncols - ech.rank


def hilbert_series(spec, maxdeg2, limit=DEFAULT_MONOMIAL_LIMIT):
    """Graded dimensions of the jet quotient for doubled degrees 0..maxdeg2."""
    tpowers = _TPowers(spec)
    return [graded_dimension(spec, d, tpowers=tpowers, limit=limit)
            for d in range(maxdeg2 + 1)]


def contains(spec, poly, limit=DEFAULT_MONOMIAL_LIMIT):
    """Is the homogeneous polynomial in the differential ideal's slice?"""
    if not poly:
        return True
    degree2 = spec.degree2(poly)
    columns, rows = ideal_rows(spec, degree2, limit=limit)
    ech = Echelon()
    for row in rows:
        ech.insert(row)
    return not ech.reduce(_int_row(columns, poly))


def conjecture_check(spec, character, maxdeg2, limit=DEFAULT_MONOMIAL_LIMIT):
    """Compare jet graded dimensions against a character coefficient list.

    ``character`` is a list of ints indexed by doubled degree (at least
    ``maxdeg2 + 1`` entries).  Returns a list of per-degree dicts and the
    first doubled degree where the two sides differ (or None).
    """
    dims = hilbert_series(spec, maxdeg2, limit=limit)
    rows = []
    first_mismatch = None
    for d in range(maxdeg2 + 1):
        ok = dims[d] == character[d]
        if not ok and first_mismatch is None:
            first_mismatch = d
        rows.append({"degree2": d, "jet_dim": dims[d],
                     "character": character[d], "equal": ok})
    return rows, first_mismatch
