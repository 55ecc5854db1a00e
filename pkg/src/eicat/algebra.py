"""Finite-dimensional algebras by structure constants, module representations
by action matrices, and exact radical computation in any characteristic."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Field, Matrix, QuotientSpace, Subspace


class AlgebraError(Exception):
    pass


class RadicalVerificationFailed(AlgebraError):
    pass


@dataclass
class FiniteDimAlgebra:
    """An associative unital algebra given by sparse structure constants.

    mult[i][j] is the product e_i * e_j as a list of (k, scalar) pairs."""

    field: Field
    basis: list
    mult: list  # mult[i][j] = [(k, scalar), ...]
    unit: list  # vector of scalars
    _left_mats: dict = field(default_factory=dict, repr=False)
    _radical: list | None = field(default=None, repr=False)
    _prims: list | None = field(default=None, repr=False)

    @property
    def dim(self):
        return len(self.basis)

    def product_vec(self, u, v):
        """Product of two elements given as coefficient vectors."""
        f = self.field
        out = [f.zero] * self.dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                ab = f.mul(a, b)
                for k, c in self.mult[i][j]:
                    out[k] = f.add(out[k], f.mul(ab, c))
        return out

    def left_mult_matrix(self, i) -> Matrix:
        """Matrix of x -> e_i * x on the regular module."""
        if i not in self._left_mats:
            f = self.field
            m = Matrix.zeros(f, self.dim, self.dim)
            for j in range(self.dim):
                for k, c in self.mult[i][j]:
                    m.data[k][j] = f.add(m.data[k][j], c)
            self._left_mats[i] = m
        return self._left_mats[i]

    def element_matrix(self, v) -> Matrix:
        """Left multiplication matrix of the element with coefficient vector v."""
        f = self.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for i, a in enumerate(v):
            if a == 0:
                continue
            li = self.left_mult_matrix(i)
            for r in range(self.dim):
                row = out.data[r]
                lrow = li.data[r]
                for c in range(self.dim):
                    if lrow[c] != 0:
                        row[c] = f.add(row[c], f.mul(a, lrow[c]))
        return out

    def validate(self):
        f = self.field
        d = self.dim
        for i in range(d):
            ei = [f.one if t == i else f.zero for t in range(d)]
            if self.product_vec(self.unit, ei) != ei or self.product_vec(ei, self.unit) != ei:
                raise AlgebraError(f"unit law fails at basis element {i}")

        def sparse_combine(pairs, pick):
            # sum_k c * pick(k) with sparse (k, c) inputs, as a dict
            out = {}
            for k, c in pairs:
                for k2, c2 in pick(k):
                    v = f.add(out.get(k2, f.zero), f.mul(c, c2))
                    if v == 0:
                        out.pop(k2, None)
                    else:
                        out[k2] = v
            return out

        for i in range(d):
            for j in range(d):
                mij = self.mult[i][j]
                for t in range(d):
                    left = sparse_combine(mij, lambda k: self.mult[k][t])
                    right = sparse_combine(self.mult[j][t], lambda k: self.mult[i][k])
                    if left != right:
                        raise AlgebraError(f"associativity fails at ({i}, {j}, {t})")
        return self

    def to_json(self):
        return {
            "basis": list(self.basis),
            "unit": [_scalar_to_json(x) for x in self.unit],
            "table": [[i, j, [[k, _scalar_to_json(c)] for k, c in self.mult[i][j]]]
                      for i in range(self.dim) for j in range(self.dim)
                      if self.mult[i][j]],
        }

    @classmethod
    def from_json(cls, obj, f: Field):
        unknown = set(obj) - {"basis", "unit", "table"}
        if unknown:
            raise AlgebraError(f"unknown keys: {sorted(unknown)}")
        basis = list(obj["basis"])
        d = len(basis)
        if len(obj["unit"]) != d:
            raise AlgebraError("unit vector length mismatch")
        mult = [[[] for _ in range(d)] for _ in range(d)]
        for i, j, pairs in obj["table"]:
            mult[i][j] = [(k, f.of(_scalar_from_json(c))) for k, c in pairs]
        unit = [f.of(_scalar_from_json(x)) for x in obj["unit"]]
        return cls(f, basis, mult, unit)


def _scalar_to_json(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return int(x)


def _scalar_from_json(x):
    if isinstance(x, str):
        num, den = x.split("/")
        return Fraction(int(num), int(den))
    return x


def algebra_from_category(c, f: Field) -> FiniteDimAlgebra:
    """The category algebra: basis = morphisms, product = composition when
    defined and 0 otherwise, unit = sum of the identities."""
    names = list(c.morphisms)
    index = {name: i for i, name in enumerate(names)}
    d = len(names)
    mult = [[[] for _ in range(d)] for _ in range(d)]
    for i, a in enumerate(names):
        for j, b in enumerate(names):
            ma, mb = c.morphisms[a], c.morphisms[b]
            if ma.src == mb.dst:
                mult[i][j] = [(index[c.compose(a, b)], f.one)]
    unit = [f.zero] * d
    for x in c.objects:
        unit[index[c.identity_of(x)]] = f.one
    return FiniteDimAlgebra(f, names, mult, unit)


def group_algebra(g, f: Field) -> FiniteDimAlgebra:
    """The group algebra of a GroupTable."""
    index = {e: i for i, e in enumerate(g.elements)}
    d = len(g.elements)
    mult = [[[(index[g.mul(a, b)], f.one)] for b in g.elements] for a in g.elements]
    unit = [f.one if e == g.identity else f.zero for e in g.elements]
    return FiniteDimAlgebra(f, list(g.elements), mult, unit)


def opposite(a: FiniteDimAlgebra) -> FiniteDimAlgebra:
    """The opposite algebra: c'_{ij}^k = c_{ji}^k."""
    d = a.dim
    mult = [[list(a.mult[j][i]) for j in range(d)] for i in range(d)]
    return FiniteDimAlgebra(a.field, list(a.basis), mult, list(a.unit))


def _trace_vector(a):
    f = a.field
    out = []
    for k in range(a.dim):
        lk = a.left_mult_matrix(k)
        t = f.zero
        for r in range(a.dim):
            t = f.add(t, lk.data[r][r])
        out.append(t)
    return out


def _span(f, vectors, ambient):
    return Subspace(f, ambient, vectors)


def _is_nilpotent_ideal(a, vectors):
    """Whether the span of `vectors` is a two-sided nilpotent ideal."""
    f = a.field
    d = a.dim
    sub = Subspace(f, d, vectors)
    basis = sub.basis
    for i in range(d):
        ei = [f.one if t == i else f.zero for t in range(d)]
        for v in basis:
            if not sub.contains(a.product_vec(ei, v)) or not sub.contains(a.product_vec(v, ei)):
                return False
    power = list(basis)
    while power:
        nxt = Subspace(f, d, [a.product_vec(u, v) for u in power for v in basis])
        if nxt.dim >= len(power) and nxt.dim > 0:
            return False
        power = nxt.basis
    return True


def radical(a: FiniteDimAlgebra):
    """Basis of the Jacobson radical.

    Characteristic 0: kernel of the trace form of the regular representation.
    Characteristic p: iterated p-trace refinement of the trace-form kernel.
    The candidate is re-verified to be a nilpotent ideal in either case."""
    if a._radical is not None:
        return a._radical
    f = a.field
    d = a.dim
    if d == 0:
        a._radical = []
        return a._radical
    traces = _trace_vector(a)
    p = f.characteristic

    if p == 0:
        gram = Matrix.zeros(f, d, d)
        for i in range(d):
            for j in range(d):
                s = f.zero
                for k, c in a.mult[i][j]:
                    s = f.add(s, f.mul(c, traces[k]))
                gram.data[i][j] = s
        cand = gram.kernel_basis()
    else:
        cand = _radical_mod_p(a, traces)

    if not _is_nilpotent_ideal(a, cand):
        raise RadicalVerificationFailed("radical candidate is not a nilpotent ideal")
    a._radical = Subspace(f, d, cand).basis
    return a._radical


def _p_power_trace(intmat, q):
    """tr(M^q) for an integer matrix, q a power of p."""
    d = len(intmat)
    result = None
    base = [row[:] for row in intmat]
    e = q
    # repeated squaring; q is small (<= dim rounded up to a p-power)
    mats = []
    while e:
        mats.append((e & 1, base))
        base = _int_matmul(base, base)
        e >>= 1
    acc = None
    for bit, m in mats:
        if bit:
            acc = m if acc is None else _int_matmul(acc, m)
    result = sum(acc[i][i] for i in range(d)) if acc is not None else d
    return result


def _int_matmul(x, y):
    n = len(x)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        xi = x[i]
        oi = out[i]
        for t in range(n):
            a = xi[t]
            if a:
                yt = y[t]
                for j in range(n):
                    oi[j] += a * yt[j]
    return out


def _radical_mod_p(a, traces):
    """Friedl-Ronyai chain: refine the trace-form kernel with p-power traces.

    Each intermediate space contains the radical, so a nilpotent-ideal
    intermediate equals the radical and we can stop early."""
    f = a.field
    p = f.characteristic
    d = a.dim
    space = Subspace(f, d, [[f.one if t == i else f.zero for t in range(d)] for i in range(d)])
    q = 1
    while True:
        rows = []
        for y in space.basis:
            row = []
            for x in space.basis:
                z = a.product_vec(x, y)
                if q == 1:
                    val = f.zero
                    for k, c in enumerate(z):
                        if c != 0:
                            val = f.add(val, f.mul(c, traces[k]))
                else:
                    lz = a.element_matrix(z)
                    intmat = [[int(e) for e in r] for r in lz.data]
                    t = _p_power_trace(intmat, q)
                    if t % q != 0:
                        raise RadicalVerificationFailed(
                            f"p-power trace not divisible by {q}")
                    val = (t // q) % p
                row.append(val)
            rows.append(row)
        ker = Matrix(f, rows).kernel_basis() if rows else []
        vectors = [space.from_coords(co) for co in ker]
        nxt = Subspace(f, d, vectors)
        if _is_nilpotent_ideal(a, nxt.basis):
            return nxt.basis
        if q >= d:
            return nxt.basis  # final chain member per the p-trace theorem
        space = nxt
        q *= p


# small dense polynomial helpers (coefficient lists, low degree first)


def _poly_normalize(f, p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(f, p, q):
    if not p or not q:
        return []
    out = [f.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b != 0:
                out[i + j] = f.add(out[i + j], f.mul(a, b))
    return _poly_normalize(f, out)


def _poly_divmod(f, p, q):
    p = list(p)
    dq = len(q) - 1
    lead = f.inv(q[-1])
    quo = [f.zero] * max(len(p) - dq, 0)
    while len(p) - 1 >= dq and p:
        c = f.mul(p[-1], lead)
        k = len(p) - 1 - dq
        quo[k] = c
        for i in range(len(q)):
            p[k + i] = f.sub(p[k + i], f.mul(c, q[i]))
        _poly_normalize(f, p)
        if not p:
            break
    return _poly_normalize(f, quo), p


def _poly_xgcd(f, p, q):
    """(g, u, v) with u*p + v*q = g, g monic."""
    r0, r1 = list(p), list(q)
    u0, u1 = [f.one], []
    v0, v1 = [], [f.one]
    while r1:
        quo, rem = _poly_divmod(f, r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, _poly_sub(f, u0, _poly_mul(f, quo, u1))
        v0, v1 = v1, _poly_sub(f, v0, _poly_mul(f, quo, v1))
    if r0:
        lead = f.inv(r0[-1])
        r0 = [f.mul(lead, c) for c in r0]
        u0 = [f.mul(lead, c) for c in u0]
        v0 = [f.mul(lead, c) for c in v0]
    return r0, u0, v0


def _poly_sub(f, p, q):
    n = max(len(p), len(q))
    out = [f.zero] * n
    for i, a in enumerate(p):
        out[i] = a
    for i, b in enumerate(q):
        out[i] = f.sub(out[i], b)
    return _poly_normalize(f, out)


def _poly_eval_element(f, poly, powers):
    """Sum poly[i] * powers[i] for vector-valued powers."""
    n = len(powers[0])
    out = [f.zero] * n
    for c, vec in zip(poly, powers):
        if c != 0:
            out = [f.add(x, f.mul(c, y)) for x, y in zip(out, vec)]
    return out


def _rational_roots(poly):
    """All rational roots of a Fraction-coefficient polynomial."""
    from math import gcd
    lcm = 1
    for c in poly:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in poly]
    roots = set()
    while ints and ints[0] == 0:
        roots.add(Fraction(0))
        ints = ints[1:]
    if len(ints) <= 1:
        return sorted(roots)
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n):
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.extend([d, n // d])
            d += 1
        return sorted(set(out))

    for p in divisors(a0):
        for q in divisors(an):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * r ** i for i, c in enumerate(ints)) == 0:
                    roots.add(r)
    return sorted(roots)


def _field_roots(f, poly):
    if f.characteristic == 0:
        return _rational_roots(poly)
    roots = []
    for r in range(f.characteristic):
        val = f.zero
        for c in reversed(poly):
            val = f.add(f.mul(val, r), c)
        if val == 0:
            roots.append(r)
    return roots


def primitive_idempotents(a: FiniteDimAlgebra):
    """A complete set of orthogonal idempotents, refined towards primitivity.

    Splitting works in A/rad (semisimple): inside each corner, elements with a
    root-reducible minimal polynomial yield a proper idempotent, which is then
    lifted to an exact idempotent along the nilpotent radical.  Corners where
    no split is found are accepted as-is; the result is always a valid
    orthogonal decomposition of the unit, merely possibly non-primitive."""
    if a._prims is not None:
        return a._prims
    f = a.field
    d = a.dim
    quo = QuotientSpace(f, d, radical(a))

    def bar_mul(u, v):
        return quo.project(a.product_vec(quo.lift(u), quo.lift(v)))

    def split_once(e):
        """e an exact idempotent; return (e1, e2) or None if unsplit."""
        ebar = quo.project(e)
        corner_vecs = []
        for i in range(d):
            ei = [f.one if t == i else f.zero for t in range(d)]
            corner_vecs.append(quo.project(a.product_vec(a.product_vec(e, ei), e)))
        corner = Subspace(f, quo.dim, corner_vecs)
        if corner.dim <= 1:
            return None
        candidates = [list(b) for b in corner.basis]
        candidates += [[f.add(x, y) for x, y in zip(u, v)]
                       for i, u in enumerate(corner.basis)
                       for v in corner.basis[i + 1:]]
        for z in candidates:
            # minimal polynomial of z in the corner, by Krylov iteration
            powers = [ebar, z]
            while True:
                mat = Matrix.from_columns(f, powers[:-1], rows=quo.dim)
                sol = mat.solve(powers[-1])
                if sol is not None:
                    minpoly = [f.neg(c) for c in sol] + [f.one]
                    break
                powers.append(bar_mul(powers[-1], z))
            if len(minpoly) <= 2:
                continue
            roots = _field_roots(f, minpoly)
            split = None
            for r in roots:
                # strip (x - r)^k and check the cofactor is nontrivial
                fac = [f.neg(f.of(r)), f.one]
                f1, rest = [f.one], list(minpoly)
                while True:
                    q_, rem = _poly_divmod(f, rest, fac)
                    if rem:
                        break
                    f1 = _poly_mul(f, f1, fac)
                    rest = q_
                if len(f1) > 1 and len(rest) > 1:
                    split = (f1, rest)
                    break
            if split is None:
                continue
            f1, f2 = split
            _, u, v = _poly_xgcd(f, f1, f2)
            # idempotent = (u*f1)(z): 0 mod f1, 1 mod f2
            h = _poly_mul(f, u, f1)
            _, h = _poly_divmod(f, h, minpoly)
            e1bar = _poly_eval_element(f, h, powers[:len(minpoly)])
            if all(x == 0 for x in e1bar) or e1bar == ebar:
                continue
            e1 = _lift_idempotent(a, e, e1bar, quo)
            e2 = [f.sub(x, y) for x, y in zip(e, e1)]
            return e1, e2
        return None

    seeds = _unit_idempotent_seeds(a)
    prims = []
    stack = list(seeds)
    while stack:
        e = stack.pop()
        got = split_once(e)
        if got is None:
            prims.append(e)
        else:
            stack.extend(got)
    _check_orthogonal_system(a, prims)
    a._prims = prims
    return prims


def _unit_idempotent_seeds(a):
    """The unit's support as exact orthogonal idempotents when it decomposes
    that way (category-algebra identities), else the unit alone."""
    f = a.field
    d = a.dim
    support = [i for i in range(d) if a.unit[i] != 0]
    seeds = []
    for i in support:
        if a.unit[i] != f.one or a.mult[i][i] != [(i, f.one)]:
            return [list(a.unit)]
        for j in support:
            if j != i and a.mult[i][j]:
                return [list(a.unit)]
        seeds.append([f.one if t == i else f.zero for t in range(d)])
    return seeds or [list(a.unit)]


def _lift_idempotent(a, e, e1bar, quo):
    """Lift a bar-idempotent living in the corner of the exact idempotent e."""
    f = a.field
    u = quo.lift(e1bar)
    u = a.product_vec(a.product_vec(e, u), e)  # stay inside eAe
    for _ in range(2 * a.dim + 4):
        u2 = a.product_vec(u, u)
        if u2 == u:
            return u
        u3 = a.product_vec(u2, u)
        # Newton step u <- 3u^2 - 2u^3 squares the defect ideal
        u = [f.sub(f.mul(f.of(3), x), f.mul(f.of(2), y)) for x, y in zip(u2, u3)]
    raise AlgebraError("idempotent lifting did not converge")


def _check_orthogonal_system(a, prims):
    f = a.field
    total = [f.zero] * a.dim
    for e in prims:
        if a.product_vec(e, e) != e:
            raise AlgebraError("non-idempotent in primitive system")
        total = [f.add(x, y) for x, y in zip(total, e)]
    if total != list(a.unit):
        raise AlgebraError("idempotent system does not sum to the unit")
    for i, e in enumerate(prims):
        for e2 in prims[i + 1:]:
            if any(x != 0 for x in a.product_vec(e, e2)) or \
                    any(x != 0 for x in a.product_vec(e2, e)):
                raise AlgebraError("idempotent system not orthogonal")


@dataclass
class ModuleRep:
    """A left module over a FiniteDimAlgebra: one action matrix per basis
    element of the algebra, acting on column vectors."""

    algebra: FiniteDimAlgebra
    dim: int
    action: list  # list of Matrix, one per algebra basis element

    def validate(self):  # ModuleRep
        a = self.algebra
        f = a.field
        ident = Matrix.identity(f, self.dim)
        acc = Matrix.zeros(f, self.dim, self.dim)
        for i, c in enumerate(a.unit):
            if c != 0:
                acc = acc + self.action[i].scale(c)
        if acc != ident:
            raise AlgebraError("unit does not act as identity")
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = self.action[i] * self.action[j]
                rhs = Matrix.zeros(f, self.dim, self.dim)
                for k, c in a.mult[i][j]:
                    rhs = rhs + self.action[k].scale(c)
                if lhs != rhs:
                    raise AlgebraError(f"action incompatible with product ({i}, {j})")
        return self

    def act(self, avec, v):
        """Apply the algebra element with coefficient vector avec to v."""
        f = self.algebra.field
        out = [f.zero] * self.dim
        for i, c in enumerate(avec):
            if c == 0:
                continue
            w = self.action[i].mul_vec(v)
            out = [f.add(x, f.mul(c, y)) for x, y in zip(out, w)]
        return out


def regular_module(a: FiniteDimAlgebra) -> ModuleRep:
    return ModuleRep(a, a.dim, [a.left_mult_matrix(i) for i in range(a.dim)])


def free_module(a: FiniteDimAlgebra, r: int) -> ModuleRep:
    """A^r with block-diagonal regular action."""
    f = a.field
    d = a.dim
    action = []
    for i in range(a.dim):
        li = a.left_mult_matrix(i)
        m = Matrix.zeros(f, r * d, r * d)
        for b in range(r):
            for x in range(d):
                row = li.data[x]
                for y in range(d):
                    if row[y] != 0:
                        m.data[b * d + x][b * d + y] = row[y]
        action.append(m)
    return ModuleRep(a, r * d, action)


def submodule(m: ModuleRep, vectors):
    """Restriction of m to the invariant subspace spanned by `vectors`.

    Returns (rep, inclusion matrix)."""
    f = m.algebra.field
    sub = Subspace(f, m.dim, vectors)
    cols = sub.basis
    incl = Matrix.from_columns(f, cols, rows=m.dim) if cols else Matrix.zeros(f, m.dim, 0)
    action = []
    for mat in m.action:
        new_cols = []
        for v in cols:
            co = sub.coords(mat.mul_vec(v))
            if co is None:
                raise AlgebraError("subspace is not invariant")
            new_cols.append(co)
        action.append(Matrix.from_columns(f, new_cols, rows=sub.dim)
                      if new_cols else Matrix.zeros(f, 0, 0))
    return ModuleRep(m.algebra, sub.dim, action), incl


def quotient_module(m: ModuleRep, vectors):
    """Quotient of m by the invariant subspace spanned by `vectors`.

    Returns (rep, projection matrix)."""
    f = m.algebra.field
    sub = Subspace(f, m.dim, vectors)
    comp = sub.complement_pivots()
    # full change of basis [sub | complement e_i], projection = last coords
    cols = [list(b) for b in sub.basis] + \
        [[f.one if t == i else f.zero for t in range(m.dim)] for i in comp]
    basis_mat = Matrix.from_columns(f, cols, rows=m.dim)
    qdim = len(comp)
    # invert [sub | complement] once; projection = last qdim rows of the inverse
    aug, rank, _ = basis_mat.hstack(Matrix.identity(f, m.dim)).rref()
    if rank != m.dim:
        raise AlgebraError("not a basis")
    inv = Matrix(f, [row[m.dim:] for row in aug.data])
    proj = Matrix(f, inv.data[sub.dim:]) if qdim else Matrix.zeros(f, 0, m.dim)
    action = []
    for mat in m.action:
        cols_q = []
        for i in comp:
            ei = [f.one if t == i else f.zero for t in range(m.dim)]
            cols_q.append(proj.mul_vec(mat.mul_vec(ei)))
        action.append(Matrix.from_columns(f, cols_q, rows=qdim)
                      if cols_q else Matrix.zeros(f, 0, 0))
    return ModuleRep(m.algebra, qdim, action), proj


def dual_module(m: ModuleRep) -> ModuleRep:
    """The dual space as a left module over the opposite algebra."""
    return ModuleRep(opposite(m.algebra), m.dim, [mat.transpose() for mat in m.action])


def radical_submodule_vectors(m: ModuleRep):
    """Spanning set of rad(A)·M."""
    rad = radical(m.algebra)
    f = m.algebra.field
    vecs = []
    for r in rad:
        for i in range(m.dim):
            ei = [f.one if t == i else f.zero for t in range(m.dim)]
            vecs.append(m.act(r, ei))
    return vecs


def top_module(a: FiniteDimAlgebra) -> ModuleRep:
    """The left module A / rad(A); contains every simple as a summand."""
    rep, _ = quotient_module(regular_module(a), radical(a))
    return rep
