"""Two-field lattice systems on quadrilaterals and their cube consistency.

A system lives on the faces of Z^2: a field point (u, v) sits at each
vertex, every edge in lattice direction i carries a parameter, and one
face relates the four corners f, f_1, f_2, f_12 (subscripts are unit
shifts).  All families here are solved for the top corner explicitly:

    u_12 = F(u, u_1, v_2, b1, b2)        v_12 = F(v, v_2, u_1, b2, b1)

with a single scalar right-hand side F shared by both updates; note the
second update swaps the roles of the two directions.  Neither u_2 nor
v_1 enters, which is what makes the families reducible to maps on edge
invariants.

Families E1..E5 are scalar.  E4 carries a free parameter epsilon, E5
carries edge parameters (beta, gamma) constrained by gamma^2 - beta^2 =
delta with delta in {0, 1}.  VNLS(n) is an n-component analogue of E1
where products become Euclidean inner products.

`check_consistency_3d` tests the system around a cube in Z^3 through
the configuration adapted to it: initial values on a staircase path of
four vertices using all three lattice directions, deformed corner by
corner across cube faces.  The two maximal deformation routes each
evaluate three faces; consistency means they agree on every vertex both
routes compute.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .errors import IncompatibleAction, SingularInput, ZeroScale
from .exactnum import GammaPair, Rational

Field = Union[Rational, tuple]
EdgeParam = Union[Rational, GammaPair]


class Family(Enum):
    E1 = "e1"
    E2 = "e2"
    E3 = "e3"
    E4 = "e4"
    E5 = "e5"
    VNLS = "vnls"


@dataclass(frozen=True)
class QuadSystem:
    """A lattice family together with its family-level parameters.

    Exactly the parameters of the selected family may be present:
    epsilon for E4, delta for E5, the component count n for VNLS.
    """

    family: Family
    epsilon: Rational | None = None
    delta: int | None = None
    n: int | None = None

    def __post_init__(self) -> None:
        if (self.epsilon is not None) != (self.family is Family.E4):
            raise ValueError("epsilon is set exactly for family E4")
        if (self.delta is not None) != (self.family is Family.E5):
            raise ValueError("delta is set exactly for family E5")
        if (self.n is not None) != (self.family is Family.VNLS):
            raise ValueError("n is set exactly for family VNLS")
        if self.delta is not None and self.delta not in (0, 1):
            raise ValueError(f"delta must be 0 or 1, got {self.delta}")
        if self.n is not None and self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")

    @classmethod
    def e1(cls) -> "QuadSystem":
        return cls(Family.E1)

    @classmethod
    def e2(cls) -> "QuadSystem":
        return cls(Family.E2)

    @classmethod
    def e3(cls) -> "QuadSystem":
        return cls(Family.E3)

    @classmethod
    def e4(cls, epsilon: Rational) -> "QuadSystem":
        return cls(Family.E4, epsilon=Fraction(epsilon))

    @classmethod
    def e5(cls, delta: int) -> "QuadSystem":
        return cls(Family.E5, delta=delta)

    @classmethod
    def vnls(cls, n: int) -> "QuadSystem":
        return cls(Family.VNLS, n=n)

    def label(self) -> str:
        if self.family is Family.VNLS:
            return f"vnls:{self.n}"
        return self.family.value

    def components(self) -> int:
        return self.n if self.family is Family.VNLS else 1


@dataclass(frozen=True)
class FieldPoint:
    """Vertex value (u, v); both scalar, or both n-vectors of equal length."""

    u: Field
    v: Field

    def __post_init__(self) -> None:
        if isinstance(self.u, tuple) != isinstance(self.v, tuple):
            raise ValueError("u and v must both be scalars or both vectors")
        if isinstance(self.u, tuple) and len(self.u) != len(self.v):
            raise ValueError(
                f"component mismatch: u has {len(self.u)}, v has {len(self.v)}"
            )

    def components(self) -> int:
        return len(self.u) if isinstance(self.u, tuple) else 1


@dataclass(frozen=True)
class QuadData:
    """Free initial data on one face: base corner and its two neighbors.

    beta1 is the parameter on edges in direction 1, beta2 on direction 2.
    """

    f: FieldPoint
    f1: FieldPoint
    f2: FieldPoint
    beta1: EdgeParam
    beta2: EdgeParam

    def __post_init__(self) -> None:
        if not (self.f.components() == self.f1.components() == self.f2.components()):
            raise ValueError("field points must share one component count")


def _dot(a: tuple, b: tuple) -> Rational:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _require_scalar_params(system: QuadSystem, b1: EdgeParam, b2: EdgeParam) -> None:
    if isinstance(b1, GammaPair) or isinstance(b2, GammaPair):
        raise ValueError(f"family {system.family.value} takes plain Rational edge parameters")


def _require_gamma_params(system: QuadSystem, b1: EdgeParam, b2: EdgeParam) -> None:
    for b in (b1, b2):
        if not isinstance(b, GammaPair):
            raise ValueError("family e5 takes GammaPair edge parameters")
        if b.delta != system.delta:
            raise ValueError(f"edge delta {b.delta} != system delta {system.delta}")


def quad_rhs(
    system: QuadSystem,
    x: Rational,
    y: Rational,
    z: Rational,
    b1: EdgeParam,
    b2: EdgeParam,
) -> Rational:
    """Scalar right-hand side F(x; y, z) of the selected scalar family.

    The same function produces both field updates: u_12 = F(u, u_1, v_2,
    b1, b2) and v_12 = F(v, v_2, u_1, b2, b1).  Raises SingularInput
    naming the vanishing denominator.
    """
    family = system.family
    if family is Family.E1:
        _require_scalar_params(system, b1, b2)
        den = 1 - y * z
        if den == 0:
            raise SingularInput("1 - y*z")
        return x + (b1 - b2) * y / den
    if family is Family.E2:
        _require_scalar_params(system, b1, b2)
        den = b2 + y * z
        if den == 0:
            raise SingularInput("b2 + y*z")
        return x + (b2 - b1) * (y - x) / den
    if family is Family.E3:
        _require_scalar_params(system, b1, b2)
        den = y + z - b1
        if den == 0:
            raise SingularInput("y + z - b1")
        return x + (b1 - b2) * (x + z) / den
    if family is Family.E4:
        _require_scalar_params(system, b1, b2)
        if b1 == 0:
            raise SingularInput("b1")
        if b2 == 0:
            raise SingularInput("b2")
        den = b2 * (x + z) + b1 * (y - x)
        if den == 0:
            raise SingularInput("b2*(x + z) + b1*(y - x)")
        return x + (1 / b1 - 1 / b2) * (b1 * b2 * (x + z) * (y - x) - system.epsilon) / den
    if family is Family.E5:
        _require_gamma_params(system, b1, b2)
        den = (b1.beta - b2.beta) * x + b1.gamma * y + b2.gamma * z
        if den == 0:
            raise SingularInput("(b1 - b2)*x + g1*y + g2*z")
        return ((b1.beta - b2.beta) * y * z + x * (b2.gamma * y + b1.gamma * z)) / den
    raise ValueError(f"{family} has no scalar right-hand side")


def evolve_quad(system: QuadSystem, data: QuadData) -> FieldPoint:
    """Top corner f_12 of the face determined by the free data."""
    if data.f.components() != system.components():
        raise ValueError(
            f"system expects {system.components()} components, got {data.f.components()}"
        )
    f, f1, f2 = data.f, data.f1, data.f2
    if system.family is Family.VNLS:
        _require_scalar_params(system, data.beta1, data.beta2)
        den = 1 - _dot(f1.u, f2.v)
        if den == 0:
            raise SingularInput("1 - u1.v2")
        r = (data.beta1 - data.beta2) / den
        u12 = tuple(u + r * u1 for u, u1 in zip(f.u, f1.u))
        v12 = tuple(v - r * v2 for v, v2 in zip(f.v, f2.v))
        return FieldPoint(u12, v12)
    u12 = quad_rhs(system, f.u, f1.u, f2.v, data.beta1, data.beta2)
    v12 = quad_rhs(system, f.v, f2.v, f1.u, data.beta2, data.beta1)
    return FieldPoint(u12, v12)


@dataclass(frozen=True)
class ConsistencyReport:
    """Outcome of the cube check: both routes' values at the shared corners.

    corner_3 and corner_23 hold the vertex values f_(3) and f_(2,3) as
    computed by deformation routes (a) and (b); u_agree / v_agree state
    whether the two routes coincide in each field at both corners.
    """

    u_agree: bool
    v_agree: bool
    corner_3: tuple
    corner_23: tuple

    @property
    def consistent(self) -> bool:
        return self.u_agree and self.v_agree


def check_consistency_3d(
    system: QuadSystem,
    f: FieldPoint,
    f1: FieldPoint,
    f2: FieldPoint,
    f3: FieldPoint,
    b1: EdgeParam,
    b2: EdgeParam,
    b3: EdgeParam,
) -> ConsistencyReport:
    """Consistency around the cube from staircase initial values.

    The four points sit on a path using each lattice direction once:
    f, then f_(1) = f1, then f_(1,2) = f2, then f_(1,2,3) = f3, with
    edge parameter b_k on the k-th path edge.  A face evaluation flips
    the middle vertex of three consecutive path vertices to the opposite
    face corner.  Route (a) flips at f1, then f2, then the new second
    vertex; route (b) flips at f2, f1, then the new third vertex.  Both
    routes land on the path f -> f_(3) -> f_(2,3) -> f3; the report says
    whether they computed the same f_(3) and f_(2,3).

    SingularInput from an intermediate face is re-raised naming the
    route and step.
    """

    def face(cur: FieldPoint, prev: FieldPoint, nxt: FieldPoint,
             b_prev: EdgeParam, b_cur: EdgeParam, where: str) -> FieldPoint:
        try:
            return evolve_quad(system, QuadData(cur, prev, nxt, b_prev, b_cur))
        except SingularInput as err:
            raise SingularInput(f"{where}: {err}") from err

    # route (a): around the cube starting with the face at f1
    g2 = face(f1, f, f2, b1, b2, "route (a) step 1")          # f_(2)
    g23_a = face(f2, g2, f3, b1, b3, "route (a) step 2")      # f_(2,3)
    g3_a = face(g2, f, g23_a, b2, b3, "route (a) step 3")     # f_(3)
    # route (b): starting with the face at f2
    g13 = face(f2, f1, f3, b2, b3, "route (b) step 1")        # f_(1,3)
    g3_b = face(f1, f, g13, b1, b3, "route (b) step 2")       # f_(3)
    g23_b = face(g13, g3_b, f3, b1, b2, "route (b) step 3")   # f_(2,3)

    u_agree = g3_a.u == g3_b.u and g23_a.u == g23_b.u
    v_agree = g3_a.v == g3_b.v and g23_a.v == g23_b.v
    return ConsistencyReport(u_agree, v_agree, (g3_a, g3_b), (g23_a, g23_b))


class SymmetryKind(Enum):
    SCALE_OPP = "scale-opp"      # (u, v) -> (t u, v / t)
    TRANSLATE = "translate"      # (u, v) -> (u + s, v - s)
    SCALE_SAME = "scale-same"    # (u, v) -> (t u, t v)


@dataclass(frozen=True)
class SymmetryAction:
    """One-parameter point symmetry acting identically at every vertex.

    For SCALE_OPP on an n-component system the amount may be an n-tuple,
    scaling each component independently.
    """

    kind: SymmetryKind
    amount: Field

    def __post_init__(self) -> None:
        if self.kind in (SymmetryKind.SCALE_OPP, SymmetryKind.SCALE_SAME):
            amounts = self.amount if isinstance(self.amount, tuple) else (self.amount,)
            if any(t == 0 for t in amounts):
                raise ZeroScale("scale factor must be nonzero")


def scale_opposite(t: Field) -> SymmetryAction:
    return SymmetryAction(SymmetryKind.SCALE_OPP, t)


def translate(s: Rational) -> SymmetryAction:
    return SymmetryAction(SymmetryKind.TRANSLATE, s)


def scale_same(t: Rational) -> SymmetryAction:
    return SymmetryAction(SymmetryKind.SCALE_SAME, t)


def _admitted(system: QuadSystem, kind: SymmetryKind) -> bool:
    family = system.family
    if family in (Family.E1, Family.E2, Family.VNLS):
        return kind is SymmetryKind.SCALE_OPP
    if family is Family.E3:
        return kind is SymmetryKind.TRANSLATE
    if family is Family.E4:
        if kind is SymmetryKind.TRANSLATE:
            return True
        return kind is SymmetryKind.SCALE_SAME and system.epsilon == 0
    if family is Family.E5:
        return kind is SymmetryKind.SCALE_SAME
    raise ValueError(f"unknown family {family}")


def apply_symmetry(system: QuadSystem, action: SymmetryAction, p: FieldPoint) -> FieldPoint:
    """Transform one field point; IncompatibleAction if the family does not admit it."""
    if not _admitted(system, action.kind):
        raise IncompatibleAction(
            f"family {system.family.value} does not admit {action.kind.value}"
        )
    if action.kind is SymmetryKind.SCALE_OPP:
        if isinstance(p.u, tuple):
            t = action.amount
            ts = t if isinstance(t, tuple) else (t,) * len(p.u)
            if len(ts) != len(p.u):
                raise ValueError("per-component scale length mismatch")
            return FieldPoint(
                tuple(t * u for t, u in zip(ts, p.u)),
                tuple(v / t for t, v in zip(ts, p.v)),
            )
        return FieldPoint(action.amount * p.u, p.v / action.amount)
    if action.kind is SymmetryKind.TRANSLATE:
        return FieldPoint(p.u + action.amount, p.v - action.amount)
    return FieldPoint(action.amount * p.u, action.amount * p.v)


def check_symmetry_invariance(
    system: QuadSystem, action: SymmetryAction, data: QuadData
) -> bool:
    """Evolving transformed data equals transforming the evolved corner."""
    moved = QuadData(
        apply_symmetry(system, action, data.f),
        apply_symmetry(system, action, data.f1),
        apply_symmetry(system, action, data.f2),
        data.beta1,
        data.beta2,
    )
    return evolve_quad(system, moved) == apply_symmetry(
        system, action, evolve_quad(system, data)
    )
