"""Exact polynomial arithmetic over GF(p).

Variables are ``x0 > x1 > ... > x{N}`` in every order.  Monomials are plain
exponent tuples; polynomials map exponent tuples to nonzero residues mod p.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

import numpy as np

Monomial = tuple  # tuple[int, ...]
DEFAULT_PRIME = 32003


class Order(enum.Enum):
    DEGREVLEX = "degrevlex"
    LEX = "lex"


@dataclass(frozen=True)
class BlockOrder:
    """Product order: DegRevLex on the first ``k`` variables, ties by DegRevLex on the rest.

    Any such order eliminates the first block; used for elimination and for
    reading partial elimination ideals (``k=1``).
    """

    k: int


MonomialOrder = Union[Order, BlockOrder]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RingContext:
    nvars: int
    prime: int = DEFAULT_PRIME
    order: MonomialOrder = Order.DEGREVLEX

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError(f"nvars must be >= 1, got {self.nvars}")
        if self.prime < 3 or not is_prime(self.prime):
            raise ValueError(f"prime must be a prime >= 3, got {self.prime}")
        if isinstance(self.order, BlockOrder) and not 0 <= self.order.k <= self.nvars:
            raise ValueError(f"block size {self.order.k} out of range")

    def with_order(self, order: MonomialOrder) -> RingContext:
        return RingContext(self.nvars, self.prime, order)

    def with_nvars(self, nvars: int) -> RingContext:
        order = self.order if not isinstance(self.order, BlockOrder) else Order.DEGREVLEX
        return RingContext(nvars, self.prime, order)

    @property
    def key(self) -> Callable[[Monomial], tuple]:
        return order_key(self.order)

    def var(self, i: int) -> Polynomial:
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def one(self) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: 1})

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> Polynomial:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector length does not match nvars")
        return Polynomial(self, {tuple(exps): coeff})

    def linear_form(self, coeffs: Sequence[int]) -> Polynomial:
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * self.nvars
            e[i] = 1
            terms[tuple(e)] = c
        return Polynomial(self, terms)

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self)


# --------------------------------------------------------------------------- orders


def _drl_key(e: Monomial) -> tuple:
    return (sum(e),) + tuple(-a for a in reversed(e))


def order_key(order: MonomialOrder) -> Callable[[Monomial], tuple]:
    """Sort key: ``key(a) > key(b)`` iff ``a > b`` in the given order."""
    if order is Order.DEGREVLEX:
        return _drl_key
    if order is Order.LEX:
        return tuple
    if isinstance(order, BlockOrder):
        k = order.k
        return lambda e: _drl_key(e[:k]) + _drl_key(e[k:])
    raise ValueError(f"unknown order {order!r}")


def mono_cmp(a: Monomial, b: Monomial, order: MonomialOrder = Order.DEGREVLEX) -> int:
    """Three-way comparison: -1, 0 or 1."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    key = order_key(order)
    ka, kb = key(tuple(a)), key(tuple(b))
    return (ka > kb) - (ka < kb)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_max_index(a: Monomial) -> int:
    """Index of the last variable with positive exponent (``max(T)``); -1 for 1."""
    for i in range(len(a) - 1, -1, -1):
        if a[i]:
            return i
    return -1


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple[Monomial, ...]:
    """All degree-``d`` monomials, sorted descending in DegRevLex."""
    if d < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=_drl_key, reverse=True)
    return tuple(out)


# --------------------------------------------------------------------------- polynomials


class Polynomial:
    """Immutable polynomial over ``ring``; ``terms`` maps exponent tuples to residues."""

    __slots__ = ("ring", "terms", "_sorted")

    def __init__(self, ring: RingContext, terms: Mapping[Monomial, int] | None = None):
        p = ring.prime
        clean = {}
        if terms:
            for e, c in terms.items():
                c %= p
                if c:
                    clean[e] = c
        self.ring = ring
        self.terms = clean
        self._sorted = None

    @classmethod
    def _raw(cls, ring: RingContext, terms: dict) -> Polynomial:
        # terms must already be reduced and free of zeros
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._sorted = None
        return obj

    # -- structure
    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in strictly descending order."""
        if self._sorted is None:
            key = self.ring.key
            self._sorted = sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.sorted_terms()[0][0]

    def leading_coefficient(self) -> int:
        return self.sorted_terms()[0][1] if self.terms else 0

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        inv = pow(self.leading_coefficient(), -1, self.ring.prime)
        return self.scale(inv)

    def homogeneous_components(self) -> dict[int, Polynomial]:
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial._raw(self.ring, t) for d, t in parts.items()}

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def evaluate(self, point: Sequence[int]) -> int:
        p = self.ring.prime
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, a in zip(point, e):
                if a:
                    v = v * pow(x, a, p) % p
            total += v
        return total % p

    def with_ring(self, ring: RingContext) -> Polynomial:
        """Same terms in a ring that differs only in its order."""
        if ring.nvars != self.ring.nvars or ring.prime != self.ring.prime:
            raise ValueError("with_ring only changes the monomial order")
        return Polynomial._raw(ring, self.terms)

    # -- arithmetic
    def _check(self, other: Polynomial):
        if other.ring.nvars != self.ring.nvars or other.ring.prime != self.ring.prime:
            raise ValueError("ring context mismatch")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial(self.ring, {(0,) * self.ring.nvars: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.prime
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.prime
        return Polynomial._raw(self.ring, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> Polynomial:
        p = self.ring.prime
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {e: v * c % p for e, v in self.terms.items()})

    def shift(self, m: Monomial, c: int = 1) -> Polynomial:
        """``c * x^m * self``."""
        p = self.ring.prime
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {mono_mul(e, m): v * c % p for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.prime
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = (out.get(e, 0) + c1 * c2) % p
        return Polynomial._raw(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial(self.ring, {(0,) * self.ring.nvars: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.ring.nvars == other.ring.nvars
            and self.ring.prime == other.ring.prime
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.nvars, self.ring.prime, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


# --------------------------------------------------------------------------- ideals


@dataclass(frozen=True)
class Ideal:
    """A homogeneous ideal given by generators; zero generators are dropped."""

    ring: RingContext
    gens: tuple[Polynomial, ...]

    def __init__(self, ring: RingContext, gens: Iterable[Polynomial] = ()):
        gens = tuple(g for g in gens if not g.is_zero())
        for g in gens:
            if g.ring.nvars != ring.nvars or g.ring.prime != ring.prime:
                raise ValueError("generator ring mismatch")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", tuple(g.with_ring(ring) if g.ring != ring else g for g in gens))

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous for g in self.gens)

    def is_monomial(self) -> bool:
        return all(len(g) == 1 for g in self.gens)

    def dim_in_degree(self, d: int) -> int:
        """Dimension of I_d via linear algebra (no Gröbner basis)."""
        from .graded import GradedPieces

        return GradedPieces(self.ring, self.gens).ideal_dim(d)

    def transform(self, matrix) -> Ideal:
        return Ideal(self.ring, [apply_linear_change(g, matrix) for g in self.gens])

    def restrict(self, keep: int) -> Ideal:
        """Set ``x_keep .. x_N`` to zero and view the result in ``keep`` variables."""
        ring = self.ring.with_nvars(keep)
        out = []
        for g in self.gens:
            terms = {e[:keep]: c for e, c in g.terms.items() if not any(e[keep:])}
            out.append(Polynomial._raw(ring, terms))
        return Ideal(ring, out)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)


# --------------------------------------------------------------------------- linear changes


def apply_linear_change(f: Polynomial, M) -> Polynomial:
    """Substitute ``x_i -> sum_j M[i][j] x_j``.  ``M`` must be invertible mod p."""
    from . import linalg

    ring = f.ring
    p = ring.prime
    M = np.asarray(M, dtype=np.int64) % p
    n = ring.nvars
    if M.shape != (n, n):
        raise ValueError(f"matrix shape {M.shape} does not match nvars={n}")
    if linalg.rank(M, p) < n:
        raise ValueError("singular coordinate change")
    images = [ring.linear_form([int(v) for v in M[i]]) for i in range(n)]
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, a: int) -> Polynomial:
        if (i, a) not in powers:
            powers[(i, a)] = images[i] if a == 1 else power(i, a - 1) * images[i]
        return powers[(i, a)]

    acc: dict = {}
    for e, c in f.terms.items():
        term = ring.one().scale(c)
        for i, a in enumerate(e):
            if a:
                term = term * power(i, a)
        for m, v in term.terms.items():
            acc[m] = (acc.get(m, 0) + v) % p
    return Polynomial(ring, acc)


def random_invertible_matrix(n: int, p: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform invertible n x n matrix over GF(p); singular draws are resampled."""
    from . import linalg

    while True:
        M = rng.integers(0, p, size=(n, n), dtype=np.int64)
        if linalg.rank(M, p) == n:
            return M


def random_linear_forms(ring: RingContext, count: int, rng: np.random.Generator) -> list[Polynomial]:
    coeffs = rng.integers(0, ring.prime, size=(count, ring.nvars))
    return [ring.linear_form([int(c) for c in row]) for row in coeffs]


def permute_variables(f: Polynomial, perm: Sequence[int], ring: RingContext | None = None) -> Polynomial:
    """Rename ``x_i -> x_{perm[i]}``."""
    ring = ring or f.ring
    n = ring.nvars
    out = {}
    for e, c in f.terms.items():
        new = [0] * n
        for i, a in enumerate(e):
            new[perm[i]] = a
        out[tuple(new)] = c
    return Polynomial._raw(ring, out)


# --------------------------------------------------------------------------- text grammar

_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(\^)|(\*)|(\+)|(-)|(\()|(\)))")


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, column: int, line: int | None = None):
        self.column = column
        self.line = line
        where = f"line {line}, column {column}" if line is not None else f"column {column}"
        super().__init__(f"{where}: {message}")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    kinds = ("int", "var", "^", "*", "+", "-", "(", ")")
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise PolynomialSyntaxError(f"unexpected character {text[col - 1]!r}", col)
        for kind, val in zip(kinds, m.groups()):
            if val is not None:
                tokens.append((kind, val, m.start(m.lastindex) + 1))
                break
        pos = m.end()
    return tokens


class _Parser:
    # expr   := ['-'|'+'] term (('+'|'-') term)*
    # term   := factor ('*' factor)*
    # factor := atom ('^' int)?
    # atom   := int | var | '(' expr ')'

    def __init__(self, text: str, ring: RingContext):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.end_col = len(text) + 1

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, self.end_col)

    def take(self, kind=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind):
            want = kind or "token"
            raise PolynomialSyntaxError(f"expected {want}, found {tok[1] or 'end of input'}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            return self.ring.zero()
        f = self.expr()
        if self.peek()[0] is not None:
            tok = self.peek()
            raise PolynomialSyntaxError(f"unexpected {tok[1]!r} (juxtaposition is not allowed)", tok[2])
        return f

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term().scale(sign)
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            base = base ** int(self.take("int")[1])
        return base

    def atom(self) -> Polynomial:
        kind, val, col = self.peek()
        if kind == "int":
            self.take()
            return self.ring.one().scale(int(val))
        if kind == "var":
            self.take()
            idx = int(val)
            if idx >= self.ring.nvars:
                raise PolynomialSyntaxError(f"variable x{idx} outside ring with {self.ring.nvars} variables", col)
            return self.ring.var(idx)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise PolynomialSyntaxError(f"expected a coefficient, variable or '(' but found {val or 'end of input'}", col)


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    """Parse ``text`` in the grammar ``int | x<k> | + - * ^ ( )``; coefficients reduce mod p."""
    return _Parser(text, ring).parse()


def format_monomial(e: Monomial) -> str:
    parts = []
    for i, a in enumerate(e):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts) if parts else "1"


def format_polynomial(f: Polynomial, signed: bool = True) -> str:
    """Render in the parse grammar.  With ``signed`` residues above p/2 print as negatives."""
    if f.is_zero():
        return "0"
    p = f.ring.prime
    out = []
    for e, c in f.sorted_terms():
        neg = signed and c > p // 2
        mag = p - c if neg else c
        mono = format_monomial(e)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
