"""Local flips on paths of field values and transfer sweeps on periodic chains.

A path state carries vertex values (u_j, v_j) and one parameter per edge.
The flip at an interior vertex replaces that vertex by the opposite corner
of the face spanned by its two neighbors and swaps the two adjacent edge
parameters; every other vertex and parameter is untouched.  Flips are exact
involutions and satisfy braid and distant-commutation laws, verified
pointwise by `check_braid` and `check_commutation`.

On a periodic chain the fixed left-to-right sweep of all flips is one
transfer step.  The sweep order is a convention of this package; only the
multiset of edge parameters is canonical, since flips merely permute it.

Paths are abstract sequences.  Scalar vertices evolve by the basic lattice
face equation, vector vertices by its multicomponent variant with the
inner-product denominator; both come from `quadgraph.evolve_quad`.
"""

from __future__ import annotations

from .errors import BadIndices, IndexOutOfRange, SingularInput
from .exactnum import Rational, RationalStream, format_rational
from .quadgraph import FieldPoint, QuadData, QuadSystem, evolve_quad

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class PathState:
    """Vertex values and edge parameters of one path.

    Open: edge j joins vertices j and j+1, one parameter fewer than
    vertices.  Periodic: indices are mod N and the last edge closes the
    cycle, so the counts match.
    """

    vertices: tuple
    alphas: tuple
    periodic: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "alphas", tuple(Fraction(a) for a in self.alphas))
        if len(self.vertices) < 2:
            raise ValueError("a path needs at least two vertices")
        counts = {p.components() for p in self.vertices}
        if len(counts) != 1:
            raise ValueError("all vertices must share one component count")
        want = len(self.vertices) if self.periodic else len(self.vertices) - 1
        if len(self.alphas) != want:
            raise ValueError(
                f"expected {want} edge parameters, got {len(self.alphas)}"
            )

    def components(self) -> int:
        return self.vertices[0].components()


def _face_system(components: int) -> QuadSystem:
    return QuadSystem.e1() if components == 1 else QuadSystem.vnls(components)


def flip(path: PathState, k: int) -> PathState:
    """Flip vertex k across the face of its neighbors, swapping its alphas.

    The new value is u~_k = u_k + (a_prev - a_cur) u_prev / (1 - u_prev v_next)
    and v~_k = v_k - (a_prev - a_cur) v_next / (1 - u_prev v_next), with the
    inner product in the denominator for vector fields.  On an open path k
    must be interior; on a periodic one any k is taken mod N.
    """
    n = len(path.vertices)
    if path.periodic:
        k %= n
        prev_v, next_v = path.vertices[k - 1], path.vertices[(k + 1) % n]
        prev_e, cur_e = (k - 1) % n, k
    else:
        if not 1 <= k <= n - 2:
            raise IndexOutOfRange(
                f"flip index {k} is not interior to a path of {n} vertices"
            )
        prev_v, next_v = path.vertices[k - 1], path.vertices[k + 1]
        prev_e, cur_e = k - 1, k
    data = QuadData(
        path.vertices[k], prev_v, next_v, path.alphas[prev_e], path.alphas[cur_e]
    )
    try:
        flipped = evolve_quad(_face_system(path.components()), data)
    except SingularInput as err:
        raise SingularInput(f"flip at vertex {k}: {err}") from err
    vertices = list(path.vertices)
    vertices[k] = flipped
    alphas = list(path.alphas)
    alphas[prev_e], alphas[cur_e] = alphas[cur_e], alphas[prev_e]
    return PathState(tuple(vertices), tuple(alphas), path.periodic)


def check_braid(path: PathState, j: int) -> bool:
    """Exact equality of the two triple-flip orders at adjacent vertices j, j+1."""
    lhs = flip(flip(flip(path, j + 1), j), j + 1)
    rhs = flip(flip(flip(path, j), j + 1), j)
    return lhs == rhs


def _flip_distance(path: PathState, i: int, j: int) -> int:
    if path.periodic:
        n = len(path.vertices)
        d = abs(i - j) % n
        return min(d, n - d)
    return abs(i - j)


def check_commutation(path: PathState, i: int, j: int) -> bool:
    """Exact equality of the two orders of flips at distant vertices i, j."""
    if _flip_distance(path, i, j) <= 1:
        raise BadIndices(f"flips at {i} and {j} share stencil edges")
    return flip(flip(path, i), j) == flip(flip(path, j), i)


def transfer_step(path: PathState) -> PathState:
    """One full sweep of a periodic chain: flips at 1, 2, ..., N in order.

    Position N wraps to vertex 0.  The multiset of edge parameters is
    preserved; a singular face aborts the sweep with its position named.
    """
    if not path.periodic:
        raise ValueError("transfer sweeps are defined on periodic chains")
    n = len(path.vertices)
    state = path
    for step in range(1, n + 1):
        try:
            state = flip(state, step % n)
        except SingularInput as err:
            raise SingularInput(f"sweep position {step}: {err}") from err
    return state


def random_path(
    stream: RationalStream,
    count: int,
    *,
    periodic: bool = False,
    components: int = 1,
) -> PathState:
    """Seeded path with `count` vertices: parameters first, then values."""
    edges = count if periodic else count - 1
    alphas = tuple(stream.next() for _ in range(edges))

    def point() -> FieldPoint:
        if components == 1:
            return FieldPoint(stream.next(), stream.next())
        u = tuple(stream.next() for _ in range(components))
        v = tuple(stream.next() for _ in range(components))
        return FieldPoint(u, v)

    vertices = tuple(point() for _ in range(count))
    return PathState(vertices, alphas, periodic)


def csv_header(path: PathState) -> list:
    """Column names u_j, v_j, alpha_j interleaved along the path."""
    if path.components() != 1:
        raise ValueError("CSV export covers scalar chains only")
    cols = []
    for j in range(len(path.vertices)):
        cols.extend([f"u{j}", f"v{j}"])
        if j < len(path.alphas):
            cols.append(f"alpha{j}")
    return cols


def csv_row(path: PathState) -> list:
    """Current values in csv_header order, as "p/q" strings."""
    if path.components() != 1:
        raise ValueError("CSV export covers scalar chains only")
    cells = []
    for j, vertex in enumerate(path.vertices):
        cells.extend([format_rational(vertex.u), format_rational(vertex.v)])
        if j < len(path.alphas):
            cells.append(format_rational(path.alphas[j]))
    return cells
