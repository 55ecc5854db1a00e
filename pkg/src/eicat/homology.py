"""Ground-truth homological computations: minimal projective resolutions, Ext
dimensions, self-injective and global dimension with explicit cap semantics.

Resolutions cover by direct sums of principal projectives A·f over the
orthogonal idempotent system of the algebra; with a primitive system the
covers are (close to) minimal, which keeps ranks from exploding."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AlgebraError,
    FiniteDimAlgebra,
    ModuleRep,
    opposite,
    primitive_idempotents,
    radical,
    radical_submodule_vectors,
    regular_module,
    submodule,
    top_module,
)
from .linalg import Matrix, Subspace


class ZaksViolation(AlgebraError):
    pass


@dataclass
class DimensionVerdict:
    """A homological dimension: an exact integer, or ">cap" when truncation
    at the degree cap cannot rule out further nonvanishing."""

    value: object  # int or the string ">cap"
    cap: int

    @property
    def finite(self):
        return isinstance(self.value, int)

    def __eq__(self, other):
        if isinstance(other, DimensionVerdict):
            return self.value == other.value
        return self.value == other

    def __repr__(self):
        return f"DimensionVerdict({self.value!r}, cap={self.cap})"

    def to_json(self):
        return self.value


def _principal_data(a: FiniteDimAlgebra):
    """Per idempotent f: (f vector, basis subspace of A·f, A·f as ModuleRep,
    coordinates of the generator f itself)."""
    cached = getattr(a, "_principal", None)
    if cached is not None:
        return cached
    f = a.field
    out = []
    for e in primitive_idempotents(a):
        cols = [a.product_vec([f.one if t == i else f.zero for t in range(a.dim)], e)
                for i in range(a.dim)]
        sub = Subspace(f, a.dim, cols)
        rep, _ = submodule(regular_module(a), sub.basis)
        gen = sub.coords(e)
        if gen is None:
            raise AlgebraError("idempotent outside its own principal module")
        out.append((e, sub, rep, gen))
    a._principal = out
    return out


@dataclass
class ResolutionTrace:
    """A projective resolution ... -> P_1 -> P_0 -> M -> 0 up to a cap.

    gens[i] lists, per generator of P_i, the index of its idempotent block;
    boundaries[i] is the k-linear matrix of P_{i+1} -> P_i; augmentation maps
    P_0 onto M."""

    gens: list
    dims: list
    boundaries: list
    augmentation: Matrix
    kernel_dims: list
    degree_reached: int
    finished: bool

    @property
    def ranks(self):
        return [len(g) for g in self.gens]

    def verify(self):
        """Exactness certificates: boundaries compose to zero and the rank of
        each boundary equals the kernel dimension it covers."""
        for i in range(len(self.boundaries)):
            prev = self.augmentation if i == 0 else self.boundaries[i - 1]
            if not (prev * self.boundaries[i]).is_zero():
                raise AlgebraError(f"boundary composition nonzero at degree {i + 1}")
            if self.boundaries[i].rank() != self.kernel_dims[i]:
                raise AlgebraError(f"image != kernel at degree {i}")
        return True


def _minimal_generators(a, mod, data, rng):
    """Generators (idempotent index, vector) whose principal covers map onto
    mod; greedy over the submodule generated so far, so no generator is
    redundant at the time it is added."""
    f = a.field
    rad_vecs = radical_submodule_vectors(mod)
    span = Subspace(f, mod.dim, rad_vecs)
    vectors = list(span.basis)
    order = list(range(mod.dim))
    if rng is not None:
        rng.shuffle(order)
    kept = []
    for i in order:
        ei = [f.one if t == i else f.zero for t in range(mod.dim)]
        if span.contains(ei):
            continue
        for idx, (e, _, _, _) in enumerate(data):
            v = mod.act(e, ei)
            if all(x == 0 for x in v) or span.contains(v):
                continue
            kept.append((idx, v))
            for t in range(a.dim):
                vectors.append(mod.action[t].mul_vec(v))
            span = Subspace(f, mod.dim, vectors)
            if span.contains(ei):
                break
        if not span.contains(ei):
            raise AlgebraError("generator not covered by idempotent components")
    return kept


def _block_sum(a, data, idxs) -> ModuleRep:
    f = a.field
    dims = [data[i][2].dim for i in idxs]
    total = sum(dims)
    offsets = [0]
    for d in dims:
        offsets.append(offsets[-1] + d)
    action = []
    for t in range(a.dim):
        m = Matrix.zeros(f, total, total)
        for b, idx in enumerate(idxs):
            blk = data[idx][2].action[t]
            for r in range(blk.rows):
                row = blk.data[r]
                for c in range(blk.cols):
                    if row[c] != 0:
                        m.data[offsets[b] + r][offsets[b] + c] = row[c]
        action.append(m)
    return ModuleRep(a, total, action)


def _cover_matrix(a, mod, data, kept):
    """Matrix of the cover  ⊕ A·f_idx -> mod,  w ⊗ g -> w.g."""
    f = a.field
    cols = []
    for idx, g in kept:
        for w in data[idx][1].basis:
            cols.append(mod.act(w, g))
    return Matrix.from_columns(f, cols, rows=mod.dim) if cols \
        else Matrix.zeros(f, mod.dim, 0)


def projective_resolution(a: FiniteDimAlgebra, m: ModuleRep, length, rng=None) -> ResolutionTrace:
    """Projective resolution of m by principal projectives, computing
    P_0 .. P_length; `rng` shuffles the generator candidate order (Ext
    dimensions do not depend on the choice)."""
    data = _principal_data(a)
    f = a.field
    current = m
    incl_prev = None
    gens = []
    dims = []
    boundaries = []
    kernel_dims = []
    augmentation = None
    finished = False
    degree = -1
    for deg in range(length + 1):
        degree = deg
        if current.dim == 0:
            finished = True
            break
        kept = _minimal_generators(a, current, data, rng)
        gens.append([idx for idx, _ in kept])
        cover = _cover_matrix(a, current, data, kept)
        dims.append(cover.cols)
        if deg == 0:
            augmentation = cover
        else:
            boundaries.append(incl_prev * cover)
        kernel = cover.kernel_basis()
        kernel_dims.append(len(kernel))
        if not kernel:
            finished = True
            break
        p = _block_sum(a, data, [idx for idx, _ in kept])
        syzygy, incl_prev = submodule(p, kernel)
        current = syzygy
    if augmentation is None:  # m was the zero module
        augmentation = Matrix.zeros(f, 0, 0)
        finished = True
    return ResolutionTrace(gens, dims, boundaries, augmentation, kernel_dims,
                           degree, finished)


free_resolution = projective_resolution


def ext_dims(a: FiniteDimAlgebra, n: ModuleRep, m: ModuleRep, cap: int, rng=None):
    """dim Ext^i(n, m) for i = 0..cap via the Hom complex of a projective
    resolution of n."""
    trace = projective_resolution(a, n, cap + 1, rng=rng)
    return ext_dims_from_trace(a, trace, m, cap)


def _hom_blocks(a, m, data, needed):
    """For each idempotent index: basis of f·m as a Subspace of m."""
    f = a.field
    out = {}
    for idx in needed:
        e = data[idx][0]
        cols = []
        for i in range(m.dim):
            ei = [f.one if t == i else f.zero for t in range(m.dim)]
            cols.append(m.act(e, ei))
        out[idx] = Subspace(f, m.dim, cols)
    return out


def ext_dims_from_trace(a, trace, m, cap):
    f = a.field
    data = _principal_data(a)
    gens = [list(g) for g in trace.gens] + [[] for _ in range(cap + 2 - len(trace.gens))]
    needed = {idx for g in gens for idx in g}
    homs = _hom_blocks(a, m, data, needed)
    hom_dims = [sum(homs[idx].dim for idx in gens[i]) for i in range(cap + 2)]

    diff = []
    for i in range(cap + 1):
        if not gens[i] or not gens[i + 1]:
            diff.append(None)
            continue
        boundary = trace.boundaries[i]
        src_offsets = [0]
        for idx in gens[i]:
            src_offsets.append(src_offsets[-1] + data[idx][1].dim)
        col_offsets = [0]
        for idx in gens[i + 1]:
            col_offsets.append(col_offsets[-1] + data[idx][1].dim)
        rows = []
        for jp, idxp in enumerate(gens[i + 1]):
            # image in P_i of the generator f of block jp of P_{i+1}
            gen_coords = data[idxp][3]
            v = [f.zero] * boundary.rows
            for s, c in enumerate(gen_coords):
                if c != 0:
                    col = boundary.column(col_offsets[jp] + s)
                    v = [f.add(x, f.mul(c, y)) for x, y in zip(v, col)]
            row_blocks = []
            for l, idxl in enumerate(gens[i]):
                sub = data[idxl][1]
                z = [f.zero] * a.dim  # algebra element carried by block l
                for s in range(sub.dim):
                    c = v[src_offsets[l] + s]
                    if c != 0:
                        w = sub.basis[s]
                        z = [f.add(x, f.mul(c, y)) for x, y in zip(z, w)]
                cols = []
                for w in homs[idxl].basis:
                    u = m.act(z, w)
                    co = homs[idxp].coords(u)
                    if co is None:
                        raise AlgebraError("Hom differential leaves its block")
                    cols.append(co)
                row_blocks.append(Matrix.from_columns(f, cols, rows=homs[idxp].dim)
                                  if cols else Matrix.zeros(f, homs[idxp].dim, 0))
            for r in range(homs[idxp].dim):
                rows.append([x for blk in row_blocks for x in blk.data[r]])
        diff.append(Matrix(f, rows) if rows else None)

    out = []
    prev_rank = 0
    for i in range(cap + 1):
        di = diff[i]
        rank = di.rank() if di is not None else 0
        out.append(hom_dims[i] - rank - prev_rank)
        prev_rank = rank
    return out


def _top_resolution(a, length, rng=None):
    if rng is not None:
        return projective_resolution(a, top_module(a), length, rng=rng)
    cached = getattr(a, "_top_res", None)
    if cached is not None and cached[0] >= length:
        return cached[1]
    trace = projective_resolution(a, top_module(a), length)
    a._top_res = (length, trace)
    return trace


def _verdict_from_ext(ext, cap):
    if ext[cap] != 0:
        return DimensionVerdict(">%d" % cap, cap)
    nonzero = [i for i, e in enumerate(ext) if e != 0]
    return DimensionVerdict(max(nonzero) if nonzero else 0, cap)


def injective_dimension(a: FiniteDimAlgebra, side: str, cap: int) -> DimensionVerdict:
    """Self-injective dimension of the regular module on the given side,
    measured as max{i : Ext^i(top, regular) != 0}."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    b = a if side == "left" else opposite(a)
    trace = _top_resolution(b, cap + 1)
    ext = ext_dims_from_trace(b, trace, regular_module(b), cap)
    return _verdict_from_ext(ext, cap)


def global_dimension(a: FiniteDimAlgebra, cap: int) -> DimensionVerdict:
    """max{i : Ext^i(top, top) != 0} with ">cap" semantics."""
    trace = _top_resolution(a, cap + 1)
    ext = ext_dims_from_trace(a, trace, top_module(a), cap)
    return _verdict_from_ext(ext, cap)


def is_module_projective(a: FiniteDimAlgebra, m: ModuleRep) -> bool:
    """Ext^1(m, top) = 0, equivalent to pd m = 0 over a finite-dimensional
    algebra."""
    ext = ext_dims(a, m, top_module(a), 1)
    return ext[1] == 0


def projective_dimension(a: FiniteDimAlgebra, m: ModuleRep, cap: int) -> DimensionVerdict:
    """pd m as the length of a cover-by-cover resolution, with cap semantics."""
    trace = projective_resolution(a, m, cap + 1)
    if trace.finished:
        pd = len(trace.gens) - 1 if trace.gens else 0
        if pd <= cap:
            return DimensionVerdict(max(pd, 0), cap)
    return DimensionVerdict(">%d" % cap, cap)


@dataclass
class GorensteinVerdict:
    gorenstein: bool  # within cap on both sides
    left: DimensionVerdict
    right: DimensionVerdict
    cap: int

    def to_json(self):
        return {"gorenstein": self.gorenstein, "left": self.left.to_json(),
                "right": self.right.to_json(), "cap": self.cap}


def is_gorenstein_oracle(a: FiniteDimAlgebra, cap: int) -> GorensteinVerdict:
    """Both one-sided self-injective dimensions; when both are finite they
    must agree, else the computation itself is broken."""
    left = injective_dimension(a, "left", cap)
    right = injective_dimension(a, "right", cap)
    if left.finite and right.finite and left.value != right.value:
        raise ZaksViolation(f"id mismatch: left {left.value}, right {right.value}")
    return GorensteinVerdict(left.finite and right.finite, left, right, cap)
