"""Systematic encoder and syndrome decoder built on a splitting.

Codewords are integer vectors in [0, Q)^n whose image under the defining
homomorphism is zero; Q is the cell-level count and must be a multiple
of the group exponent.  A received word decodes by computing its
syndrome and inverting the unique product representation m*s_i, which
locates the single error coordinate and magnitude.  For tiling-based
codes every nonzero syndrome is decodable (the code is perfect); plain
packings may report an uncorrectable word instead.

Errors are applied over the integers (levels clamp physically, they do
not wrap), which the syndrome never notices since it reduces through
the group.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .groups import Element
from .splitting import Splitting, image, product_table, verify_packing


class SyndromeTable:
    """Immutable-by-convention map from m*s_i to (coordinate i, magnitude m)."""

    def __init__(self, splitting: Splitting):
        check = verify_packing(splitting)
        if not check.ok:
            raise RuntimeError(
                f"syndrome table over a non-packing: {check.collision.describe()}"
            )
        index_of = {s: i for i, s in enumerate(splitting.splitters)}
        self.splitting = splitting
        self.entries: dict[Element, tuple[int, int]] = {
            prod: (index_of[s], m) for prod, (m, s) in product_table(splitting).items()
        }

    def lookup(self, syndrome: Element) -> tuple[int, int] | None:
        return self.entries.get(syndrome)

    def __len__(self) -> int:
        return len(self.entries)


def build_table(sp: Splitting) -> SyndromeTable:
    return SyndromeTable(sp)


def _solve_mod(matrix: list[list[int]], rhs: list[int], mod: int) -> list[int] | None:
    """Solve A x = b (mod m) by elimination with unit pivots; None when no
    unit pivot is available (complete for prime-power moduli)."""
    k = len(matrix)
    aug = [list(matrix[i]) + [rhs[i] % mod] for i in range(k)]
    perm = []
    for col in range(k):
        piv = next(
            (r for r in range(k) if r not in perm and gcd(aug[r][col], mod) == 1), None
        )
        if piv is None:
            return None
        perm.append(piv)
        inv = pow(aug[piv][col], -1, mod)
        aug[piv] = [(x * inv) % mod for x in aug[piv]]
        for r in range(k):
            if r != piv and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % mod for x, y in zip(aug[r], aug[piv])]
    x = [0] * k
    for col, piv in enumerate(perm):
        x[col] = aug[piv][k]
    return x


@dataclass(frozen=True)
class CodeSpec:
    """A splitting plus the physical alphabet [0, levels) and the pivot
    coordinates the encoder solves for."""

    splitting: Splitting
    levels: int
    pivots: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.splitting.n

    @property
    def free_coordinates(self) -> tuple[int, ...]:
        pivot_set = set(self.pivots)
        return tuple(i for i in range(self.n) if i not in pivot_set)

    @property
    def quotient_levels(self) -> int:
        """Range of each pivot quotient digit: levels // group exponent."""
        return self.levels // self.splitting.group.exponent


def make_code(sp: Splitting, levels: int, pivots: tuple[int, ...] | None = None) -> CodeSpec:
    """Validate levels and pivot coordinates, auto-selecting pivots when
    omitted (first splitter columns forming an invertible system).

    The group must have equal cyclic orders (true for every construction
    here: Z_q, Z_p^l, and (Z_{p^l})^k)."""
    orders = set(sp.group.orders)
    if len(orders) != 1:
        raise ValueError("codes need a group with equal cyclic orders")
    v = sp.group.orders[0]
    if levels <= 0 or levels % v != 0:
        raise ValueError(f"levels must be a positive multiple of {v}, got {levels}")
    k = len(sp.group.orders)
    if pivots is None:
        pivots = _auto_pivots(sp, v, k)
    else:
        pivots = tuple(int(i) for i in pivots)
        if len(pivots) != k or len(set(pivots)) != k:
            raise ValueError(f"need {k} distinct pivot coordinates")
        if not all(0 <= i < sp.n for i in pivots):
            raise ValueError("pivot coordinate out of range")
    matrix = [[sp.splitters[i][j] for i in pivots] for j in range(k)]
    if _solve_mod(matrix, [0] * k, v) is None:
        raise ValueError(f"pivot columns {pivots} are not invertible mod {v}")
    return CodeSpec(sp, levels, pivots)


def _auto_pivots(sp: Splitting, v: int, k: int) -> tuple[int, ...]:
    chosen: list[int] = []
    rows_used: list[int] = []
    # residual elimination state over the chosen columns
    state: list[list[int]] = []
    for i in range(sp.n):
        col = [sp.splitters[i][j] for j in range(k)]
        work = list(col)
        for (r, vec) in zip(rows_used, state):
            f = work[r]
            if f:
                work = [(x - f * y) % v for x, y in zip(work, vec)]
        piv_row = next(
            (r for r in range(k) if r not in rows_used and gcd(work[r], v) == 1), None
        )
        if piv_row is None:
            continue
        inv = pow(work[piv_row], -1, v)
        state.append([(x * inv) % v for x in work])
        rows_used.append(piv_row)
        chosen.append(i)
        if len(chosen) == k:
            return tuple(chosen)
    raise ValueError("no invertible pivot system found among the splitter columns")


def syndrome(cs: CodeSpec, word) -> Element:
    """Image of the received word in the group; zero exactly on lattice
    points, independent of the alphabet wrap."""
    return image(cs.splitting, word)


def encode(cs: CodeSpec, info, quotients=0) -> tuple[int, ...]:
    """Systematic encoding.

    `info` fills the non-pivot coordinates (digits in [0, levels)), in
    coordinate order; `quotients` gives one digit in [0, levels/q) per
    pivot coordinate (a bare int is accepted when there is a single
    pivot).  Pivot residues are solved so the syndrome vanishes.
    """
    sp = cs.splitting
    g = sp.group
    v = g.orders[0]
    free = cs.free_coordinates
    info = [int(x) for x in info]
    if len(info) != len(free):
        raise ValueError(f"info must have {len(free)} digits, got {len(info)}")
    if any(not 0 <= x < cs.levels for x in info):
        raise ValueError(f"info digits must lie in [0, {cs.levels})")
    if isinstance(quotients, int):
        quotients = [quotients] * len(cs.pivots)
    quotients = [int(t) for t in quotients]
    if len(quotients) != len(cs.pivots):
        raise ValueError(f"need {len(cs.pivots)} quotient digits")
    if any(not 0 <= t < cs.quotient_levels for t in quotients):
        raise ValueError(f"quotient digits must lie in [0, {cs.quotient_levels})")

    word = [0] * cs.n
    acc = g.zero
    for i, x in zip(free, info):
        word[i] = x
        acc = g.add(acc, g.scalar_mul(x, sp.splitters[i]))
    k = len(g.orders)
    matrix = [[sp.splitters[i][j] for i in cs.pivots] for j in range(k)]
    rhs = [(-acc[j]) % v for j in range(k)]
    residues = _solve_mod(matrix, rhs, v)
    if residues is None:
        raise RuntimeError("pivot system lost invertibility")
    for i, r, t in zip(cs.pivots, residues, quotients):
        word[i] = r + v * t
    out = tuple(word)
    if syndrome(cs, out) != g.zero:
        raise RuntimeError("encoder produced a word with nonzero syndrome")
    return out


@dataclass(frozen=True)
class Decoded:
    """codeword is None when the syndrome is not decodable (possible only
    for non-perfect packings or model violations); correction is the
    (coordinate, magnitude) removed, or None when the word was clean."""

    codeword: tuple[int, ...] | None
    correction: tuple[int, int] | None

    @property
    def uncorrectable(self) -> bool:
        return self.codeword is None


def decode(cs: CodeSpec, word, table: SyndromeTable | None = None) -> Decoded:
    """Correct at most one limited-magnitude error.

    If word = c + m*e_i for a codeword c and multiplier m, the result is
    exactly c with correction (i, m).  Out-of-range coordinates are
    accepted.  More than one error decodes to some wrong codeword
    without detection (the code is perfect); that is inherent, not a
    defect."""
    if table is None:
        table = build_table(cs.splitting)
    word = [int(x) for x in word]
    s = syndrome(cs, word)
    if s == cs.splitting.group.zero:
        return Decoded(tuple(word), None)
    hit = table.lookup(s)
    if hit is None:
        return Decoded(None, None)
    i, m = hit
    corrected = list(word)
    corrected[i] -= m
    return Decoded(tuple(corrected), (i, m))
