"""The cubical cobar construction on a 1-reduced simplicial set.

An n-cube is a pair (base, ops).  The base is a word of nondegenerate
simplices of dimension >= 2; it contributes dimension m - 1 per letter of
dimension m.  ops is a word of degeneracy and connection operators applied
on top of the base, stored outermost first in canonical form: all
degeneracies before all connections, each block with strictly decreasing
indices.  The rewriting rules

    s_i s_j = s_{j+1} s_i          (i <= j)
    g_i g_j = g_{j+1} g_i          (i <= j)
    g_i s_j = s_{j+1} g_i / s_{i+1} s_i / s_j g_{i-1}   (i < j / i = j / i > j)

bring every composite into this form, so two cubes are equal exactly when
their pairs coincide.  Faces are pushed through the operator word with the
cubical identities until they reach the base, where an inner face replaces a
letter by its simplicial face and an outer face splits a letter into its
front and back parts; the raw outcome is re-canonicalized by peeling the
degeneracies of each letter into operators (bottom ones become s_1, middle
ones connections, top ones top degeneracies) and dropping letters over the
base point.

Words multiply by concatenation, with the right factor's operators shifted
past the left factor; the unit is the empty word.
"""

from __future__ import annotations

from .chains import Chain, ChainComplex, add_scaled
from .cubes import CubicalSet, cubical_chains
from .simplicial import Simplex, SimplicialPresentation
from .verdict import Verdict


def _compose_op(op, ops):
    """Prepend one operator (outermost) to a canonical operator word."""
    if not ops:
        return (op,)
    kind, i = op
    head_kind, j = ops[0]
    rest = ops[1:]
    if kind == "s":
        if head_kind == "s" and i <= j:
            return (("s", j + 1),) + _compose_op(("s", i), rest)
        return (op,) + ops
    if head_kind == "s":
        if i < j:
            return (("s", j + 1),) + _compose_op(("g", i), rest)
        if i == j:
            return _compose_op(("s", i + 1), _compose_op(("s", i), rest))
        return (("s", j),) + _compose_op(("g", i - 1), rest)
    if i <= j:
        return (("g", j + 1),) + _compose_op(("g", i), rest)
    return (op,) + ops


def _op_words(d: int, r: int):
    """Canonical operator words (outermost first) from dimension d to d + r.

    Read innermost first, the words consist of connections with strictly
    increasing indices followed by degeneracies with strictly increasing
    indices, each index valid at its stage.
    """

    def rec(cur, rem, in_s, last):
        if rem == 0:
            yield ()
            return
        if not in_s:
            for i in range(last + 1, cur + 1):
                for outer in rec(cur + 1, rem - 1, False, i):
                    yield outer + (("g", i),)
        start = last + 1 if in_s else 1
        for i in range(start, cur + 2):
            for outer in rec(cur + 1, rem - 1, True, i):
                yield outer + (("s", i),)

    return rec(d, r, False, 0)


class CobarSet(CubicalSet):
    """Cubical monoid of simplex words over a 1-reduced presentation."""

    def __init__(self, sset: SimplicialPresentation):
        if not sset.one_reduced:
            raise ValueError("the cobar construction needs a 1-reduced input")
        self.sset = sset
        (self.basepoint,) = [g for g, d in sset.gens.items() if d == 0]

    # ----- cubical set interface ---------------------------------------------------

    def dim(self, cube) -> int:
        base, ops = cube
        return sum(x.dim - 1 for x in base) + len(ops)

    def degen(self, cube, i):
        if not 1 <= i <= self.dim(cube) + 1:
            raise ValueError("degeneracy index out of range")
        base, ops = cube
        return (base, _compose_op(("s", i), ops))

    def conn(self, cube, i):
        if not 1 <= i <= self.dim(cube):
            raise ValueError("connection index out of range")
        base, ops = cube
        return (base, _compose_op(("g", i), ops))

    def face(self, cube, eps, i):
        n = self.dim(cube)
        if not 1 <= i <= n:
            raise ValueError("face index out of range")
        base, ops = cube
        if ops:
            (kind, j), inner = ops[0], (base, ops[1:])
            if kind == "s":
                if i == j:
                    return inner
                if i < j:
                    return self.degen(self.face(inner, eps, i), j - 1)
                return self.degen(self.face(inner, eps, i - 1), j)
            if i < j:
                return self.conn(self.face(inner, eps, i), j - 1)
            if i in (j, j + 1):
                if eps == 1:
                    return inner
                return self.degen(self.face(inner, 0, j), j)
            return self.conn(self.face(inner, eps, i - 1), j)
        t, local = self._locate(base, i)
        x = base[t]
        if eps == 1:
            pieces = [self.sset.face(x, local)]
        else:
            pieces = [self.sset.front_face(x, local),
                      self.sset.back_face(x, local)]
        return self.canonicalize(list(base[:t]) + pieces + list(base[t + 1:]))

    def cubes(self, n: int):
        out = []
        for k in range(n + 1):
            for base in self._bases(k):
                for ops in _op_words(k, n - k):
                    out.append((base, ops))
        return out

    def normalized(self, n: int):
        return [(base, ()) for base in self._bases(n)]

    # ----- monoid structure ----------------------------------------------------------

    def unit(self):
        return ((), ())

    def unit_cube(self, n: int):
        """The n-fold degeneracy of the empty word."""
        cube = self.unit()
        for i in range(1, n + 1):
            cube = self.degen(cube, i)
        return cube

    def mul(self, c1, c2):
        base1, ops1 = c1
        base2, ops2 = c2
        shift = sum(x.dim - 1 for x in base1)
        ops = ()
        for op in reversed(list(ops1) + [(k, i + shift) for k, i in ops2]):
            ops = _compose_op(op, ops)
        return (base1 + base2, ops)

    # ----- canonicalization ------------------------------------------------------------

    def canonicalize(self, simplices):
        """The cube represented by a raw word of simplices of dimension >= 0."""
        cube = self.unit()
        for x in simplices:
            if x.dim == 0:
                continue
            cube = self.mul(cube, self._letter_cube(x))
        return cube

    def _letter_cube(self, x: Simplex):
        """A single simplex as a cube: peel its degeneracies into operators."""
        degens = list(x.degens)
        if x.gen_dim == 0:
            # fully degenerate over the base point; the innermost s_0 is the
            # zero-dimensional unit cube
            degens.pop()
            base = ()
        elif x.gen_dim >= 2:
            base = (Simplex((), x.gen, x.gen_dim),)
        else:
            raise ValueError("a 1-reduced input has no nondegenerate edges")
        cube = (base, ())
        for q in reversed(degens):
            m = self.dim(cube) + 1  # the simplex dimension below this degeneracy
            if q == 0:
                cube = self.degen(cube, 1)
            elif q == m:
                cube = self.degen(cube, m)
            else:
                cube = self.conn(cube, q)
        return cube

    def _locate(self, base, i):
        """Letter index and local coordinate for global coordinate i."""
        acc = 0
        for t, x in enumerate(base):
            if i <= acc + x.dim - 1:
                return t, i - acc
            acc += x.dim - 1
        raise ValueError(f"coordinate {i} out of range")

    def _bases(self, k: int):
        """Words of nondegenerate simplices of dimension >= 2 with total cube
        dimension k."""
        if k == 0:
            return [()]
        out = []
        for m in range(2, k + 2):
            for x in self.sset.nondegenerate(m):
                for rest in self._bases(k - (m - 1)):
                    out.append((x,) + rest)
        return out


# ----- the word-algebra model and the comparison isomorphism ---------------------


def omega_complex(sset: SimplicialPresentation, max_deg: int) -> ChainComplex:
    """Tensor-algebra complex on desuspended nondegenerate simplices.

    Basis in degree d: words of nondegenerate simplices of dimension >= 2
    with total degree d (each letter of dimension m contributes m - 1).  The
    differential is the derivation extending the alternating face sum plus
    the signed front/back splittings.
    """
    letters_by_deg = {}
    for m in range(2, max_deg + 2):
        for x in sset.nondegenerate(m):
            letters_by_deg.setdefault(m - 1, []).append(x)

    def words(d):
        if d == 0:
            yield ()
            return
        for first_deg in sorted(letters_by_deg):
            if first_deg > d:
                break
            for x in letters_by_deg[first_deg]:
                for rest in words(d - first_deg):
                    yield (x,) + rest

    def letter_boundary(x: Simplex) -> Chain:
        n = x.dim - 1  # letter degree
        out: Chain = {}
        for i in range(x.dim + 1):
            fx = sset.face(x, i)
            if not fx.is_degenerate and fx.dim >= 2:
                add_scaled(out, {(fx,): 1}, -(-1 if i % 2 else 1))
        for i in range(2, n):
            front = sset.front_face(x, i)
            back = sset.back_face(x, i)
            if not front.is_degenerate and not back.is_degenerate:
                add_scaled(out, {(front, back): 1}, -1 if i % 2 else 1)
        return out

    basis = {d: tuple(words(d)) for d in range(max_deg + 1)}
    boundary = {}
    for d in range(max_deg + 1):
        for w in basis[d]:
            total: Chain = {}
            sign = 1
            for t, x in enumerate(w):
                for frag, c in letter_boundary(x).items():
                    key = w[:t] + frag + w[t + 1:]
                    add_scaled(total, {key: 1}, sign * c)
                sign *= -1 if (x.dim - 1) % 2 else 1
            boundary[w] = total
    return ChainComplex(basis, boundary)


def word_to_cube(w) -> tuple:
    """Label identification: a word of simplices as a normalized cube."""
    return (tuple(w), ())


def cube_to_word(cube):
    """Inverse of :func:`word_to_cube` on normalized cubes."""
    base, ops = cube
    return base if not ops else None


def compare_models(sset: SimplicialPresentation, max_deg: int):
    """Verdicts for the isomorphism between the word algebra and the
    normalized chains of the cobar cubical set.

    Returns ``(omega, cobar set, cubical chains, verdicts dict)``.
    """
    omega = omega_complex(sset, max_deg)
    cset = CobarSet(sset)
    cchain = cubical_chains(cset, max_deg)
    verdicts = {}

    # basis bijection
    verdicts["basis"] = Verdict.passed()
    for d in range(max_deg + 1):
        image = {word_to_cube(w) for w in omega.basis[d]}
        target = set(cchain.basis[d])
        if image != target or len(image) != len(omega.basis[d]):
            verdicts["basis"] = Verdict.failed(
                {"degree": d, "missing": target - image,
                 "extra": image - target})
            break

    # differential match under the label identification
    verdicts["differential"] = Verdict.passed()
    for d in range(1, max_deg + 1):
        for w in omega.basis[d]:
            transported: Chain = {}
            for w2, c in omega.boundary[w].items():
                add_scaled(transported, {word_to_cube(w2): 1}, c)
            direct = cchain.boundary[word_to_cube(w)]
            if transported != direct:
                verdicts["differential"] = Verdict.failed(
                    {"word": w, "transported": transported, "cubical": direct})
                break
        if not verdicts["differential"].ok:
            break

    # multiplication match (concatenation on both sides)
    verdicts["product"] = Verdict.passed()
    for d1 in range(max_deg + 1):
        for d2 in range(max_deg + 1 - d1):
            for w1 in omega.basis[d1]:
                for w2 in omega.basis[d2]:
                    if word_to_cube(w1 + w2) != cset.mul(word_to_cube(w1),
                                                         word_to_cube(w2)):
                        verdicts["product"] = Verdict.failed(
                            {"pair": (w1, w2)})
    return omega, cset, cchain, verdicts
