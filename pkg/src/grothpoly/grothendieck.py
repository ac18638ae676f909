"""Three independent constructions of the factorial Grothendieck polynomial.

G_lambda(x|y) in n variables is built as

* ``g_tableau``            -- the weight generating function over set-valued
                              tableaux with entries in [n];
* ``g_determinant``        -- the determinant quotient
                              det([x_i|y]^{lam_j+n-j} (1+b x_i)^{j-1}) / V(x),
                              V the Vandermonde product;
* ``g_divided_difference`` -- isobaric divided differences applied to the
                              staircase seed prod_{i+j<=p} (x_i (+) y_j),
                              driven down the weak order from the longest
                              permutation of S_p to the Grassmannian
                              permutation attached to lambda.

All three agree (checked exactly in the test suite).  The default universe
for a result in n variables is (n_x=n, n_y=n+lam_1-1), the largest y index
any tableau weight or determinant entry can touch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .poly import (
    Polynomial,
    UniverseMismatchError,
    VariableUniverse,
    exact_div,
    poly_sum,
)
from .tableaux import Partition, coerce_partition, enumerate_tableaux, weight


class InvalidShapeError(ValueError):
    """Shape has more than n nonzero rows; the n-variable formula does not exist."""


class EmbeddingError(ValueError):
    """Symmetric group embedding too small for the requested shape."""


def default_universe(shape, n: int) -> VariableUniverse:
    shape = coerce_partition(shape)
    lam1 = shape.parts[0] if shape.parts else 0
    return VariableUniverse(n, max(n + lam1 - 1, 0))


def g_tableau(shape, n: int, *, universe: VariableUniverse | None = None) -> Polynomial:
    """Sum of tableau weights over all set-valued tableaux of the shape.

    A shape with more than n rows has no tableaux and gives 0; the empty
    shape gives 1.
    """
    shape = coerce_partition(shape)
    U = universe if universe is not None else default_universe(shape, n)
    return poly_sum(U, (weight(t, U) for t in enumerate_tableaux(shape, n)))


def g_determinant(shape, n: int, *, universe: VariableUniverse | None = None) -> Polynomial:
    """Determinant quotient construction (zero-pads the shape to n rows).

    The numerator determinant is alternating in the rows, hence exactly
    divisible by every Vandermonde factor; a NotDivisibleError here would be
    a fatal internal error, not a caller mistake.

    The quotient is computed by a memoized cofactor expansion that peels the
    Vandermonde off level by level: the value stored for a column subset is
    the corresponding minor divided by the Vandermonde of its own row range
    (the minor over rows r..n is alternating in those rows, so the quotient
    exists at every level).  Intermediate values stay quotient-sized instead
    of carrying the full Vandermonde factor.
    """
    shape = coerce_partition(shape)
    if len(shape) > n:
        raise InvalidShapeError(f"shape {shape!r} has more than {n} nonzero rows")
    U = universe if universe is not None else default_universe(shape, n)
    lam = shape.padded(n)
    rows = []
    for i in range(1, n + 1):
        one_plus_bx = U.one() + U.beta() * U.x(i)
        row = []
        for j in range(1, n + 1):
            row.append(U.bracket_pow(i, lam[j - 1] + n - j) * one_plus_bx ** (j - 1))
        rows.append(row)

    memo: dict[int, Polynomial] = {0: U.one()}

    def reduced_minor(mask: int) -> Polynomial:
        got = memo.get(mask)
        if got is not None:
            return got
        size = bin(mask).count("1")
        r = n - size + 1  # 1-based row of this level
        acc = U.zero()
        sign = 1
        for c in range(n):
            bit = 1 << c
            if not mask & bit:
                continue
            acc = acc + rows[r - 1][c] * reduced_minor(mask ^ bit) * sign
            sign = -sign
        for j in range(r + 1, n + 1):
            acc = exact_div(acc, U.x(r) - U.x(j))
        memo[mask] = acc
        return acc

    return reduced_minor((1 << n) - 1)


@dataclass(frozen=True)
class GrassmannianPermutation:
    """A permutation word with at most one descent."""

    word: tuple[int, ...]

    def __post_init__(self):
        p = len(self.word)
        if sorted(self.word) != list(range(1, p + 1)):
            raise ValueError(f"not a permutation of [{p}]: {self.word}")
        if len(self.descents()) > 1:
            raise ValueError(f"more than one descent: {self.word}")

    @property
    def p(self) -> int:
        return len(self.word)

    def descents(self) -> tuple[int, ...]:
        w = self.word
        return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])

    @property
    def descent(self) -> int | None:
        d = self.descents()
        return d[0] if d else None

    def length(self) -> int:
        w = self.word
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def shape(self, n: int | None = None) -> Partition:
        """The partition with parts word[n-i] - (n-i+1)... read off below the descent."""
        if n is None:
            n = self.descent or 0
        parts = [self.word[n - i] - (n - i + 1) for i in range(1, n + 1)]
        return Partition(parts)


def grassmannian_from_partition(shape, n: int, p: int) -> GrassmannianPermutation:
    """The unique Grassmannian permutation in S_p with descent at most n whose
    attached partition is the given shape."""
    shape = coerce_partition(shape)
    if len(shape) > n:
        raise InvalidShapeError(f"shape {shape!r} has more than {n} rows")
    lam = shape.padded(n)
    lam1 = lam[0] if lam else 0
    if p < n + lam1:
        raise EmbeddingError(f"need p >= n + lam_1 = {n + lam1}, got {p}")
    word = [0] * p
    used = set()
    for m in range(1, n + 1):
        word[m - 1] = lam[n - m] + m
        used.add(word[m - 1])
    rest = sorted(set(range(1, p + 1)) - used)
    word[n:] = rest
    return GrassmannianPermutation(tuple(word))


def pi_operator(f: Polynomial, i: int) -> Polynomial:
    """Isobaric divided difference ((1+b x_{i+1}) f - (1+b x_i) s_i f) / (x_i - x_{i+1}).

    The numerator is antisymmetric in x_i, x_{i+1}, so the quotient is exact;
    it is computed termwise as the Newton divided difference of
    (1+b x_{i+1})*f, which is the same polynomial.
    """
    U = f.universe
    if not 1 <= i < U.n_x:
        raise UniverseMismatchError(f"pi_{i} needs x{i} and x{i + 1} in the universe")
    twisted = f + U.beta() * U.x(i + 1) * f
    return twisted.divided_difference(i)


def _ascent_chain(word: tuple[int, ...]) -> tuple[list[tuple[int, ...]], list[int]]:
    """Words and swap positions from `word` up to the longest permutation.

    words[t+1] = words[t] * s_{ops[t]} where ops[t] is the smallest ascent of
    words[t]; each swap raises the length by one.
    """
    words = [word]
    ops = []
    w = list(word)
    while True:
        asc = next((i for i in range(1, len(w)) if w[i - 1] < w[i]), None)
        if asc is None:
            break
        ops.append(asc)
        w[asc - 1], w[asc] = w[asc], w[asc - 1]
        words.append(tuple(w))
    return words, ops


def _staircase_seed(universe: VariableUniverse, p: int) -> Polynomial:
    out = universe.one()
    for i in range(1, p):
        out = out * universe.bracket_pow(i, p - i)
    return out


def g_divided_difference(
    shape,
    n: int,
    *,
    p: int | None = None,
    universe: VariableUniverse | None = None,
    cache: dict | None = None,
) -> Polynomial:
    """Divided-difference construction through the symmetric group S_p.

    Starting from the seed for the longest permutation, isobaric operators
    are applied along the (deterministic, smallest-ascent) chain down to the
    Grassmannian permutation of the shape; the result is returned over the
    n-variable universe.  `cache` may map intermediate words to polynomials
    and is shared across calls with equal p.
    """
    shape = coerce_partition(shape)
    lam1 = shape.parts[0] if shape.parts else 0
    if p is None:
        p = n + lam1
    w = grassmannian_from_partition(shape, n, p).word
    big = VariableUniverse(p, max(p - 1, 0))
    words, ops = _ascent_chain(w)

    start = None
    f = None
    if cache is not None:
        for t, word in enumerate(words):
            if word in cache:
                start, f = t, cache[word]
                break
    if f is None:
        start = len(words) - 1
        f = _staircase_seed(big, p)
        if cache is not None:
            cache[words[start]] = f
    for t in range(start - 1, -1, -1):
        f = pi_operator(f, ops[t])
        if cache is not None:
            cache[words[t]] = f

    U = universe if universe is not None else default_universe(shape, n)
    return f.substitute({}, universe=U)


def restrict(
    builder: Callable[..., Polynomial],
    shape,
    subset: Iterable[int],
    universe: VariableUniverse,
) -> Polynomial:
    """G_lambda(x_S|y): build G in |S| local variables, then relabel
    x_r -> x_{i_r} for the increasing enumeration i_1 < ... < i_k of S."""
    S = sorted(subset)
    if len(set(S)) != len(S):
        raise ValueError("subset indices must be distinct")
    if S and (S[0] < 1 or S[-1] > universe.n_x):
        raise UniverseMismatchError(f"subset {S} not inside [1,{universe.n_x}]")
    k = len(S)
    local = VariableUniverse(k, universe.n_y)
    g = builder(shape, k, universe=local) if k else local.one()
    bindings = {f"x{r}": universe.x(S[r - 1]) for r in range(1, k + 1)}
    return g.substitute(bindings, universe=universe)


def factorial_schur(
    shape, n: int, *, universe: VariableUniverse | None = None
) -> Polynomial:
    """The beta = 0 specialization of G_lambda(x|y)."""
    return g_tableau(shape, n, universe=universe).substitute({"b": 0})


def schur(shape, n: int, *, universe: VariableUniverse | None = None) -> Polynomial:
    """The beta = 0, y = 0 specialization: the Schur polynomial s_lambda(x)."""
    g = g_tableau(shape, n, universe=universe)
    bindings: dict[str, int] = {"b": 0}
    bindings.update({f"y{j}": 0 for j in range(1, g.universe.n_y + 1)})
    return g.substitute(bindings)
