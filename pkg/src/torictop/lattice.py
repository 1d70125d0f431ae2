"""Exact algebra of integral symmetric bilinear forms.

Signatures by rational congruence diagonalization, orthogonal complements and
hyperbolic splitting over ZZ (Smith normal form underneath), and quadratic
forms over ZZ_2 with their Arf invariant.  No floating point anywhere; every
search and pivot is deterministic so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from . import linalg
from .errors import (
    HypothesisError,
    InternalConsistencyError,
    SearchExhaustedError,
)

DEFAULT_RADIUS = 12


@dataclass(frozen=True)
class IntSymForm:
    """Square symmetric integer Gram matrix with optional basis labels."""

    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        g = [list(row) for row in self.gram]
        if not linalg.is_symmetric(g):
            raise ValueError("Gram matrix must be square and symmetric")
        if self.labels is not None and len(self.labels) != len(g):
            raise ValueError("label count must match rank")

    @property
    def dim(self) -> int:
        return len(self.gram)

    def pairing(self, u, v) -> int:
        return linalg.dot(linalg.vec_mat(list(u), [list(r) for r in self.gram]), list(v))

    def q(self, v) -> int:
        return self.pairing(v, v)


@dataclass(frozen=True)
class Sublattice:
    """Rows of `generators` are vectors in the parent's coordinates."""

    parent: IntSymForm
    generators: tuple[tuple[int, ...], ...]
    saturated: bool = field(init=False, default=False)

    def __post_init__(self):
        gens = [list(row) for row in self.generators]
        for row in gens:
            if len(row) != self.parent.dim:
                raise ValueError("generator length must match parent rank")
        if gens and linalg.rank(gens) != len(gens):
            raise HypothesisError("sublattice generators are linearly dependent")
        sat = not gens or linalg.elementary_divisors_all_one(gens)
        object.__setattr__(self, "saturated", sat)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def gram(self) -> IntSymForm:
        g = [list(r) for r in self.parent.gram]
        m = [list(r) for r in self.generators]
        rows = linalg.mat_mul(linalg.mat_mul(m, g), linalg.transpose(m))
        return IntSymForm(gram=tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class SplitResult:
    """Hyperbolic planes split off a complement, plus the leftover block.

    planes: (x_i, y_i, c_i) in parent coordinates, Gram (0 1; 1 c_i), c_i in
    {0, 1}.  residual_basis rows (parent coordinates) carry residual_a.
    transform rows are [x_1, y_1, ..., x_s, y_s, residual...] expressed in
    complement coordinates; transform * G_E * transform^T is the block form.
    """

    planes: tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]
    residual_a: IntSymForm
    residual_basis: tuple[tuple[int, ...], ...]
    complement: Sublattice
    transform: tuple[tuple[int, ...], ...]
    terminal_case: str  # "definite" or "small_rank"
    hypothesis_ok: bool
    rank_bound_stop_planes: int


def parse_matrix(text: str) -> list[list[int]]:
    """Text matrix format: line 1 = row count r, then r integer rows."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        r = int(lines[0])
    except ValueError as exc:
        raise ValueError("first line must be the number of rows") from exc
    if r < 0 or len(lines) != r + 1:
        raise ValueError(f"expected {r} matrix rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            rows.append([int(tok) for tok in ln.split()])
        except ValueError as exc:
            raise ValueError(f"non-integer matrix entry in line '{ln}'") from exc
    if rows and any(len(row) != len(rows[0]) for row in rows):
        raise ValueError("matrix rows have unequal lengths")
    return rows


def parse_gram(text: str) -> IntSymForm:
    rows = parse_matrix(text)
    if any(len(row) != len(rows) for row in rows):
        raise ValueError("Gram matrix must be square")
    return IntSymForm(gram=tuple(tuple(r) for r in rows))


def load_gram(path: str) -> IntSymForm:
    with open(path, encoding="utf-8") as fh:
        return parse_gram(fh.read())


def signature(form: IntSymForm) -> tuple[int, int, int]:
    """(p, q, z) inertia by symmetric congruence diagonalization over QQ.

    Pivots take the smallest-index nonzero diagonal; when the whole remaining
    diagonal vanishes, the first nonzero off-diagonal pair (i, j) is folded by
    e_i <- e_i + e_j, which creates a nonzero diagonal entry.
    """
    n = form.dim
    m = [[Fraction(x) for x in row] for row in form.gram]
    p = q = z = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if m[i][i] != 0), None)
        if piv is None:
            off = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j] != 0),
                None,
            )
            if off is None:
                z += n - k
                break
            i, j = off
            for col in range(n):
                m[i][col] += m[j][col]
            for row in range(n):
                m[row][i] += m[row][j]
            continue
        if piv != k:
            m[piv], m[k] = m[k], m[piv]
            for row in m:
                row[piv], row[k] = row[k], row[piv]
        d = m[k][k]
        if d > 0:
            p += 1
        else:
            q += 1
        for i in range(k + 1, n):
            f = m[i][k] / d
            if f:
                for col in range(n):
                    m[i][col] -= f * m[k][col]
                for row in range(n):
                    m[row][i] -= f * m[row][k]
        k += 1
    return p, q, z


def is_even(form: IntSymForm) -> bool:
    return all(form.gram[i][i] % 2 == 0 for i in range(form.dim))


def is_unimodular(form: IntSymForm) -> bool:
    return abs(linalg.det([list(r) for r in form.gram])) == 1


def orthogonal_complement(form: IntSymForm, sub: Sublattice) -> Sublattice:
    """Saturated E = {v : <v, f> = 0 for all f in F}."""
    if sub.parent is not form and sub.parent != form:
        raise ValueError("sublattice belongs to a different form")
    if not sub.generators:
        return Sublattice(parent=form, generators=tuple(
            tuple(row) for row in linalg.identity(form.dim)
        ))
    fg = linalg.mat_mul([list(r) for r in sub.generators], [list(r) for r in form.gram])
    kernel = linalg.integer_kernel(fg)
    return Sublattice(parent=form, generators=tuple(tuple(r) for r in kernel))


def _isotropic_candidates(form: IntSymForm, r_max: int):
    """Primitive isotropic vectors in deterministic order.

    Shells of growing sup-norm radius; within a shell, support size, then
    support position, then per-coordinate values R..1, -1..-R; first nonzero
    coordinate positive; gcd 1.
    """
    n = form.dim
    for radius in range(1, r_max + 1):
        values = list(range(radius, 0, -1)) + list(range(-1, -radius - 1, -1))
        for size in range(1, n + 1):
            for support in combinations(range(n), size):
                for vals in product(values, repeat=size):
                    if max(abs(x) for x in vals) != radius:
                        continue
                    if vals[0] < 0:
                        continue
                    v = [0] * n
                    for pos, x in zip(support, vals):
                        v[pos] = x
                    if linalg.gcd_vec(v) != 1:
                        continue
                    if form.q(v) == 0:
                        yield tuple(v)


def find_isotropic(
    form: IntSymForm, r_max: int = DEFAULT_RADIUS, raise_on_exhaust: bool = True
) -> tuple[int, ...] | None:
    """First primitive isotropic vector in the enumeration order, or None.

    Definite forms return None immediately.  A degenerate form yields a
    kernel vector.  Exhausting the search on an indefinite unimodular form of
    rank >= 5 raises SearchExhaustedError (existence is guaranteed there)
    unless raise_on_exhaust is false.
    """
    if form.dim == 0:
        return None
    p, q, z = signature(form)
    if z == 0 and (p == 0 or q == 0):
        return None
    if z > 0:
        kernel = linalg.integer_kernel(
            [list(r) for r in form.gram]
        )
        v = list(kernel[0])
        if next(x for x in v if x != 0) < 0:
            v = [-x for x in v]
        return tuple(v)
    for v in _isotropic_candidates(form, r_max):
        return v
    if raise_on_exhaust and form.dim >= 5 and is_unimodular(form):
        raise SearchExhaustedError(
            f"no isotropic vector within radius {r_max} on an indefinite "
            f"unimodular form of rank {form.dim}"
        )
    return None


def hyperbolic_pair(
    form: IntSymForm, x: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Given primitive isotropic x, a y with <x,y> = 1 and <y,y> in {0, 1}."""
    x = tuple(x)
    if linalg.gcd_vec(list(x)) != 1:
        raise ValueError("x must be primitive")
    if form.q(x) != 0:
        raise ValueError("x must be isotropic")
    a = linalg.vec_mat(list(x), [list(r) for r in form.gram])
    y = linalg.solve_dot_one(a)
    if y is None:
        raise ValueError("no dual vector; form is not unimodular on a summand")
    qy = form.q(y)
    shift = qy // 2 if qy >= 0 else -((-qy + 1) // 2)  # floor(qy / 2)
    y = [yi - shift * xi for yi, xi in zip(y, x)]
    if form.q(y) not in (0, 1) or form.pairing(x, y) != 1:
        raise InternalConsistencyError("hyperbolic pair normalization failed")
    return x, tuple(y)


def split_decomposition(
    form: IntSymForm, sub: Sublattice | None = None, r_max: int = DEFAULT_RADIUS
) -> SplitResult:
    """Split hyperbolic planes off the orthogonal complement of F.

    With F empty the whole lattice is split.  The loop continues while the
    residual is indefinite and a usable isotropic vector is found; the point
    where the small-rank stopping inequality rank A < max(3 rF, rF + 5) first
    holds is recorded separately as rank_bound_stop_planes.
    """
    if not is_unimodular(form):
        raise HypothesisError("lattice must be unimodular")
    if sub is None:
        sub = Sublattice(parent=form, generators=())
    rf = sub.rank
    if sub.generators:
        fgram = sub.gram()
        if linalg.rank([list(r) for r in fgram.gram]) != rf:
            raise HypothesisError("restricted form on F is degenerate")
        if not sub.saturated:
            raise HypothesisError("quotient by F has torsion (F is not saturated)")
    hypothesis_ok = form.dim >= max(4 * rf, 2 * rf + 5)
    stop_rank = max(3 * rf, rf + 5)

    comp = orthogonal_complement(form, sub)
    e_basis = [list(r) for r in comp.generators]
    g_e = [
        [form.pairing(u, v) for v in e_basis] for u in e_basis
    ]

    # Work in coordinates of the current residual; basis rows map back to E.
    basis = linalg.identity(len(e_basis))
    current = [row[:] for row in g_e]
    planes_e: list[tuple[list[int], list[int], int]] = []
    rank_bound_stop: int | None = None
    terminal = "definite"
    while True:
        r_cur = len(current)
        cform = IntSymForm(gram=tuple(tuple(r) for r in current))
        p, q, z = signature(cform)
        if z > 0:
            raise HypothesisError("complement carries a degenerate form")
        if p == 0 or q == 0:
            terminal = "definite"
            break
        if rank_bound_stop is None and r_cur < stop_rank:
            rank_bound_stop = len(planes_e)
        found = None
        for cand in _isotropic_candidates(cform, r_max):
            dual = linalg.vec_mat(list(cand), current)
            if linalg.gcd_vec(dual) == 1:
                found = cand
                break
        if found is None:
            if r_cur >= stop_rank and hypothesis_ok:
                raise SearchExhaustedError(
                    f"indefinite residual of rank {r_cur} admitted no usable "
                    f"isotropic vector within radius {r_max}"
                )
            terminal = "small_rank"
            break
        x, y = hyperbolic_pair(cform, found)
        c = cform.q(y)
        x_e = linalg.vec_mat(list(x), basis)
        y_e = linalg.vec_mat(list(y), basis)
        planes_e.append((x_e, y_e, c))
        rows = [linalg.vec_mat(list(x), current), linalg.vec_mat(list(y), current)]
        kernel = linalg.integer_kernel(rows)
        basis = linalg.mat_mul(kernel, basis)
        current = [
            [form.pairing(linalg.vec_mat(u, e_basis), linalg.vec_mat(v, e_basis)) for v in basis]
            for u in basis
        ]
    if rank_bound_stop is None:
        rank_bound_stop = len(planes_e)

    transform = [vec for x_e, y_e, _ in planes_e for vec in (x_e, y_e)] + basis
    block = linalg.mat_mul(linalg.mat_mul(transform, g_e), linalg.transpose(transform)) if transform else []
    expected = _block_form([c for _, _, c in planes_e], current)
    if block != expected:
        raise InternalConsistencyError("reassembly check failed")
    if transform and abs(linalg.det(transform)) != 1:
        raise InternalConsistencyError("splitting transform is not unimodular")

    to_parent = lambda v: tuple(linalg.vec_mat(v, e_basis))
    planes = tuple((to_parent(x_e), to_parent(y_e), c) for x_e, y_e, c in planes_e)
    residual_basis = tuple(to_parent(v) for v in basis)
    return SplitResult(
        planes=planes,
        residual_a=IntSymForm(gram=tuple(tuple(r) for r in current)),
        residual_basis=residual_basis,
        complement=comp,
        transform=tuple(tuple(r) for r in transform),
        terminal_case=terminal,
        hypothesis_ok=hypothesis_ok,
        rank_bound_stop_planes=rank_bound_stop,
    )


def _block_form(cs: list[int], residual: list[list[int]]) -> list[list[int]]:
    n = 2 * len(cs) + len(residual)
    out = [[0] * n for _ in range(n)]
    for i, c in enumerate(cs):
        out[2 * i][2 * i + 1] = 1
        out[2 * i + 1][2 * i] = 1
        out[2 * i + 1][2 * i + 1] = c
    off = 2 * len(cs)
    for i, row in enumerate(residual):
        for j, val in enumerate(row):
            out[off + i][off + j] = val
    return out


# --- quadratic spaces over ZZ_2 -------------------------------------------


@dataclass(frozen=True)
class QuadraticSpaceZ2:
    """Mod-2 pairing with a quadratic refinement given by basis values.

    psi extends by psi(u + v) = psi(u) + psi(v) + (u . v)_2, so the basis
    values determine it everywhere.
    """

    gram2: tuple[tuple[int, ...], ...]
    psi_basis: tuple[int, ...]

    def __post_init__(self):
        n = len(self.gram2)
        for row in self.gram2:
            if len(row) != n or any(x not in (0, 1) for x in row):
                raise ValueError("gram2 must be square over {0, 1}")
        for i in range(n):
            for j in range(n):
                if self.gram2[i][j] != self.gram2[j][i]:
                    raise ValueError("gram2 must be symmetric")
        if len(self.psi_basis) != n or any(x not in (0, 1) for x in self.psi_basis):
            raise ValueError("psi values must be one bit per basis vector")

    @property
    def dim(self) -> int:
        return len(self.gram2)

    def dot2(self, u, v) -> int:
        return sum(
            u[i] * self.gram2[i][j] * v[j] for i in range(self.dim) for j in range(self.dim)
        ) % 2


def psi_eval(space: QuadraticSpaceZ2, v) -> int:
    """psi(sum v_i b_i) = sum v_i psi_i + sum_{i<j} v_i v_j (b_i . b_j)_2."""
    v = tuple(v)
    if len(v) != space.dim:
        raise ValueError("vector length must match the space dimension")
    total = sum(vi * pi for vi, pi in zip(v, space.psi_basis))
    for i in range(space.dim):
        if not v[i]:
            continue
        for j in range(i + 1, space.dim):
            if v[j]:
                total += space.gram2[i][j]
    return total % 2


def symplectic_basis(gram2) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs (a_i, b_i) with (a_i.b_j) = delta_ij and zero among a's and b's."""
    g = [tuple(int(x) % 2 for x in row) for row in gram2]
    n = len(g)
    for i in range(n):
        if len(g[i]) != n:
            raise ValueError("gram2 must be square")
        if g[i][i] != 0:
            raise ValueError("odd diagonal; pairing is not alternating mod 2")

    def pair(u, v):
        return sum(u[i] * g[i][j] * v[j] for i in range(n) for j in range(n)) % 2

    remaining = [tuple(row) for row in linalg.identity(n)]
    pairs = []
    while remaining:
        a = remaining.pop(0)
        mate = next((i for i, w in enumerate(remaining) if pair(a, w) == 1), None)
        if mate is None:
            raise ValueError("degenerate mod-2 pairing")
        b = remaining.pop(mate)
        pairs.append((a, b))
        remaining = [
            tuple(
                (w[k] + pair(w, b) * a[k] + pair(w, a) * b[k]) % 2 for k in range(n)
            )
            for w in remaining
        ]
        remaining = [w for w in remaining if any(w)]
    return pairs


def arf(space: QuadraticSpaceZ2) -> int:
    """Arf invariant sum psi(a_i) psi(b_i) over a symplectic basis."""
    pairs = symplectic_basis(space.gram2)
    return sum(psi_eval(space, a) * psi_eval(space, b) for a, b in pairs) % 2


def normalize_quadratic_basis(space: QuadraticSpaceZ2):
    """Symplectic basis with psi = 0 except possibly on a distinguished pair.

    Returns (pairs, residual): residual is 0 and all psi values vanish, or 1
    and the first pair has psi values (1, 1) (the Arf invariant).
    """
    n = space.dim

    def add(u, v):
        return tuple((x + y) % 2 for x, y in zip(u, v))

    pairs = symplectic_basis(space.gram2)
    normalized = []
    ones = []
    for a, b in pairs:
        pa, pb = psi_eval(space, a), psi_eval(space, b)
        if (pa, pb) == (1, 0):
            a = add(a, b)
        elif (pa, pb) == (0, 1):
            b = add(a, b)
        if (psi_eval(space, a), psi_eval(space, b)) == (1, 1):
            ones.append((a, b))
        else:
            normalized.append((a, b))
    while len(ones) >= 2:
        (a1, b1), (a2, b2) = ones.pop(), ones.pop()
        new1 = (add(a1, a2), add(a1, b2))
        new2 = (add(add(a1, b1), add(a2, b2)), add(b1, add(a2, b2)))
        normalized.extend([new1, new2])
    residual = arf(space)
    out = ones + normalized
    for i, (a, b) in enumerate(out):
        want = (1, 1) if residual == 1 and i == 0 else (0, 0)
        if (psi_eval(space, a), psi_eval(space, b)) != want:
            raise InternalConsistencyError("quadratic basis normalization failed")
    for i, (ai, bi) in enumerate(out):
        for j, (aj, bj) in enumerate(out):
            want = 1 if i == j else 0
            if space.dot2(ai, bj) != want or space.dot2(ai, aj) != 0 or space.dot2(bi, bj) != 0:
                raise InternalConsistencyError("normalized basis is not symplectic")
    if 2 * len(out) != n:
        raise InternalConsistencyError("normalized basis has wrong size")
    return out, residual
