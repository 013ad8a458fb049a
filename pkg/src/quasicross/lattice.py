"""Integer lattices derived from splittings.

The lattice of a splitting is the kernel of the homomorphism
x -> sum x_i s_i, a full-rank sublattice of Z^n.  Bases are kept in
lower-triangular Hermite normal form, which is unique, so equal lattices
compare equal.  `geometric_check` re-derives the packing/tiling verdict
purely from the lattice geometry (coset coverage on the quotient torus),
independently of the product-table logic in `splitting`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .intlinalg import bareiss_det, hnf_lower, left_kernel, reduce_mod_lattice
from .splitting import QuasiCrossShape, Splitting

GEOMETRIC_CHECK_MAX_VOLUME = 100_000


@dataclass(frozen=True)
class IntegerLattice:
    """Full-rank sublattice of Z^n given by basis rows."""

    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.basis)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("basis must be a non-empty square matrix")
        object.__setattr__(self, "basis", rows)

    @property
    def n(self) -> int:
        return len(self.basis)

    def hnf(self) -> IntegerLattice:
        """The same lattice with its canonical lower-triangular HNF basis."""
        return IntegerLattice(tuple(tuple(r) for r in hnf_lower([list(r) for r in self.basis])))

    def contains(self, vector) -> bool:
        vec = [int(x) for x in vector]
        if len(vec) != self.n:
            raise ValueError("vector dimension mismatch")
        hnf = [list(r) for r in hnf_lower([list(r) for r in self.basis])]
        return all(x == 0 for x in reduce_mod_lattice(hnf, vec))


def lattice_from_splitting(sp: Splitting) -> IntegerLattice:
    """Kernel of x -> sum x_i s_i as an HNF-basis lattice.

    Cyclic groups whose first splitter is invertible admit a closed-form
    basis that is already in HNF (diagonal (q, 1, ..., 1)); otherwise the
    kernel is solved generically as the left kernel of the stacked
    (n+k) x k integer system whose top block holds the splitter columns
    and whose bottom block is the negated diagonal of cyclic orders
    (projecting kernel rows onto the first n coordinates is an
    isomorphism onto the lattice).
    """
    orders = sp.group.orders
    k = len(orders)
    n = sp.n
    if k == 1:
        q = orders[0]
        s0 = sp.splitters[0][0]
        if gcd(s0, q) == 1:
            inv = pow(s0, -1, q)
            rows = [[0] * n for _ in range(n)]
            rows[0][0] = q
            for i in range(1, n):
                rows[i][0] = (-sp.splitters[i][0] * inv) % q
                rows[i][i] = 1
            return IntegerLattice(tuple(tuple(r) for r in rows))
    return _kernel_lattice_general(sp)


def _kernel_lattice_general(sp: Splitting) -> IntegerLattice:
    orders = sp.group.orders
    k = len(orders)
    n = sp.n
    stacked = [[sp.splitters[i][j] for j in range(k)] for i in range(n)]
    for j in range(k):
        stacked.append([-orders[j] if jj == j else 0 for jj in range(k)])
    kernel = left_kernel(stacked)
    basis = [row[:n] for row in kernel]
    if len(basis) != n:
        raise RuntimeError(f"kernel rank {len(basis)} != {n}")
    return IntegerLattice(tuple(tuple(r) for r in hnf_lower(basis)))


def determinant(lat: IntegerLattice) -> int:
    """|det| of the basis by exact Bareiss elimination; the volume of a
    fundamental region."""
    d = bareiss_det([list(r) for r in lat.basis])
    if d == 0:
        raise ValueError("lattice basis is singular")
    return abs(d)


def generated_index(sp: Splitting) -> int:
    """Index [G : <S>] of the subgroup the splitters generate; 1 exactly
    when S generates G (then det of the kernel lattice equals |G|)."""
    return sp.group.order // determinant(lattice_from_splitting(sp))


def packing_density(lat: IntegerLattice, shape: QuasiCrossShape) -> Fraction:
    """Cross volume over fundamental-region volume; 1 exactly for tilings.

    A value above 1 proves the caller's packing claim false and raises."""
    rho = Fraction(shape.volume, determinant(lat))
    if rho > 1:
        raise ValueError(
            f"density {rho} > 1: the lattice cannot pack this quasi-cross"
        )
    return rho


def period(sp: Splitting) -> tuple[int, ...]:
    """Per-coordinate periods of the lattice: the i-th entry is the least
    t > 0 with t*e_i in the lattice, which is the order of s_i in G."""
    return tuple(sp.group.element_order(s) for s in sp.splitters)


@dataclass(frozen=True)
class GeometricReport:
    """Outcome of the torus-coverage check.

    verdict is "tiling", "packing", or "overlap".  Cells are (i, m) arm
    labels with None for the center cell; uncovered counts the torus
    points no cross reaches (0 for tilings)."""

    verdict: str
    uncovered: int
    witness: tuple[tuple[int, int] | None, tuple[int, int] | None] | None = None

    def __bool__(self) -> bool:
        return self.verdict != "overlap"


def geometric_check(sp: Splitting) -> GeometricReport:
    """Decide packing/tiling geometrically, independent of product tables.

    Reduces every cell of the quasi-cross at the origin to its canonical
    coset representative modulo the lattice; the crosses at all lattice
    points are disjoint iff these representatives are pairwise distinct,
    and tile iff additionally every coset is hit.  Guarded to cross
    volumes <= 100000.

    The verdict matches verify_packing/is_tiling whenever the splitters
    generate the group.  When they generate a proper subgroup the
    geometry answers for that subgroup: the lattice may tile space even
    though the splitting of the full group is not perfect.
    """
    shape = sp.shape
    if shape.volume > GEOMETRIC_CHECK_MAX_VOLUME:
        raise ValueError(
            f"cross volume {shape.volume} exceeds the geometric_check guard "
            f"({GEOMETRIC_CHECK_MAX_VOLUME})"
        )
    lat = lattice_from_splitting(sp)
    hnf = [list(r) for r in lat.basis]
    det = 1
    for i in range(lat.n):
        det *= hnf[i][i]
    n = sp.n
    seen: dict[tuple[int, ...], tuple[int, int] | None] = {}
    seen[reduce_mod_lattice(hnf, [0] * n)] = None
    for i in range(n):
        for m in sp.multipliers:
            cell = [0] * n
            cell[i] = m
            rep = reduce_mod_lattice(hnf, cell)
            if rep in seen:
                return GeometricReport("overlap", 0, (seen[rep], (i, m)))
            seen[rep] = (i, m)
    uncovered = det - len(seen)
    return GeometricReport("tiling" if uncovered == 0 else "packing", uncovered)


# --- JSON wire format -------------------------------------------------------


def lattice_to_json(lat: IntegerLattice) -> str:
    return json.dumps({"basis": [list(r) for r in lat.basis]})


def lattice_from_json(text: str) -> IntegerLattice:
    data = json.loads(text)
    try:
        return IntegerLattice(tuple(tuple(int(x) for x in row) for row in data["basis"]))
    except KeyError as exc:
        raise ValueError(f"lattice JSON is missing field {exc}") from exc


# --- 2-D rendering -----------------------------------------------------------

_UNIT = 24  # pixels per integer cell
_COLOR_ARM = "#c9d9f0"
_COLOR_CENTER = "#4a6fa5"
_COLOR_OVERLAP = "#e05252"
_COLOR_DOT = "#1a1a1a"
_COLOR_AXIS = "#888888"
_COLOR_HATCH = "#777777"


def _lattice_points_2d(lat: IntegerLattice, window: int):
    """All lattice points v with |v_x| < window and |v_y| < window."""
    (a, _), (b, c) = lat.basis  # lower-triangular HNF rows (a,0), (b,c)
    points = []
    if window <= 0:
        return points
    for j in range(-(window // c) - 1, window // c + 2):
        y = j * c
        if abs(y) >= window:
            continue
        for i in range(-((window + abs(j * b)) // a) - 1, (window + abs(j * b)) // a + 2):
            x = i * a + j * b
            if abs(x) < window:
                points.append((x, y))
    points.sort()
    return points


def render_2d(lat: IntegerLattice, shape: QuasiCrossShape, window: int) -> str:
    """Draw the 2-D packing as an SVG document.

    One unit square per cross cell (center cells darker, cells covered
    more than once highlighted), lattice points dotted, and the
    fundamental-region parallelogram of the basis hatched.  The y axis
    grows upward and output bytes are stable across runs.
    """
    if shape.n != 2:
        raise ValueError("render_2d draws 2-dimensional lattices only")
    if lat.n != 2:
        raise ValueError("lattice dimension must be 2")
    canonical = lat.hnf()
    points = _lattice_points_2d(canonical, window)

    coverage: dict[tuple[int, int], int] = {}
    centers = set()
    for (vx, vy) in points:
        for cell in shape.cells():
            cx, cy = vx + cell[0], vy + cell[1]
            coverage[(cx, cy)] = coverage.get((cx, cy), 0) + 1
            if cell == (0, 0):
                centers.add((cx, cy))

    extent = (window + shape.k_plus + 1) * _UNIT
    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{-extent} {-extent} {2 * extent} {2 * extent}">'
    )
    out.append(
        '<defs><pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" '
        'patternTransform="rotate(45)">'
        f'<line x1="0" y1="0" x2="0" y2="6" stroke="{_COLOR_HATCH}" stroke-width="1"/>'
        "</pattern></defs>"
    )
    for (cx, cy) in sorted(coverage):
        count = coverage[(cx, cy)]
        if count > 1:
            fill = _COLOR_OVERLAP
        elif (cx, cy) in centers:
            fill = _COLOR_CENTER
        else:
            fill = _COLOR_ARM
        out.append(
            f'<rect x="{cx * _UNIT}" y="{-(cy + 1) * _UNIT}" '
            f'width="{_UNIT}" height="{_UNIT}" fill="{fill}" '
            f'stroke="#ffffff" stroke-width="1"/>'
        )
    out.append(
        f'<line x1="{-extent}" y1="0" x2="{extent}" y2="0" '
        f'stroke="{_COLOR_AXIS}" stroke-width="1"/>'
    )
    out.append(
        f'<line x1="0" y1="{-extent}" x2="0" y2="{extent}" '
        f'stroke="{_COLOR_AXIS}" stroke-width="1"/>'
    )
    if points:
        (b1x, b1y), (b2x, b2y) = lat.basis  # hatch the caller's basis region
        para = [
            (0, 0),
            (b1x * _UNIT, -b1y * _UNIT),
            ((b1x + b2x) * _UNIT, -(b1y + b2y) * _UNIT),
            (b2x * _UNIT, -b2y * _UNIT),
        ]
        d = "M " + " L ".join(f"{x} {y}" for x, y in para) + " Z"
        out.append(
            f'<path d="{d}" fill="url(#hatch)" stroke="{_COLOR_HATCH}" stroke-width="1"/>'
        )
    half = _UNIT // 2
    for (vx, vy) in points:
        out.append(
            f'<circle cx="{vx * _UNIT + half}" cy="{-vy * _UNIT - half}" r="3" '
            f'fill="{_COLOR_DOT}"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
