"""Seeded bulk verification of every law the package implements.

`sweep` draws deterministic pseudo-random inputs for a chosen property,
evaluates it exactly on each, and aggregates the outcomes into a
`VerificationReport`.  Singular configurations are never failures: each
sample retries with fresh draws up to a fixed budget and is counted as
skipped when the budget runs out.  A property holds when it holds at every
point where it is defined, so the exit question is "passed == valid", with
`RetryBudgetExhausted` signalling that no valid sample could be drawn at
all.

Reports are pure functions of (target, property, seed, n, bound), byte
for byte, which the CLI test suite relies on.

The composite-map convention is fixed once here: a two-point map applied
to factors (i, j) of a triple acts on those positions in order and leaves
the third untouched, and in an operator product the rightmost factor acts
first.  Both sides of the relation check use the same convention, so the
verdict does not depend on it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .chains import PathState, check_braid, check_commutation, flip, random_path
from .errors import RetryBudgetExhausted, SingularInput
from .exactnum import (
    GammaPair,
    Rational,
    RationalStream,
    format_rational,
    gamma_pair_from_slope,
)
from .lax import check_zero_curvature
from .quadgraph import Family, FieldPoint, QuadSystem, check_consistency_3d
from .reduction import SquareSolution, check_commuting_diagram, parent_system
from .ybmaps import (
    MapId,
    MapTag,
    YBPoint,
    apply_map,
    functional_relation_residuals,
    p_independent_block,
    replace_block,
)


class Property(Enum):
    YB = "yb"
    UNITARITY = "unitarity"
    CONSISTENCY_3D = "consistency-3d"
    BRAID = "braid"
    ZERO_CURVATURE = "zero-curvature"
    COMMUTING_DIAGRAM = "commuting-diagram"
    FUNCTIONAL_RELATIONS = "functional-relations"
    NON_QUADRIRATIONAL = "non-quadrirational"


# properties with a documented corrupted-map fixture (primary multiplier + 1)
CORRUPTIBLE = frozenset(
    {
        Property.YB,
        Property.UNITARITY,
        Property.COMMUTING_DIAGRAM,
        Property.ZERO_CURVATURE,
        Property.FUNCTIONAL_RELATIONS,
    }
)


@dataclass(frozen=True)
class TripleState:
    """Three points and three edge parameters, the relation check's input."""

    x: YBPoint
    y: YBPoint
    z: YBPoint
    beta1: object
    beta2: object
    beta3: object

    def __post_init__(self) -> None:
        if not (len(self.x.first) == len(self.y.first) == len(self.z.first)):
            raise ValueError("the three points must share one block size")


def check_yb_relation(
    map_id: MapId, t: TripleState, *, corrupt: bool = False
) -> bool:
    """Both composition orders of the three pairwise maps agree on (x, y, z).

    The map on factors (i, j) uses parameters (beta_i, beta_j); the
    rightmost factor of each product acts first.
    """

    def on12(s: tuple) -> tuple:
        p, q = apply_map(map_id, s[0], s[1], t.beta1, t.beta2, corrupt=corrupt)
        return (p, q, s[2])

    def on13(s: tuple) -> tuple:
        p, q = apply_map(map_id, s[0], s[2], t.beta1, t.beta3, corrupt=corrupt)
        return (p, s[1], q)

    def on23(s: tuple) -> tuple:
        p, q = apply_map(map_id, s[1], s[2], t.beta2, t.beta3, corrupt=corrupt)
        return (s[0], p, q)

    def stage(fn, s: tuple, where: str) -> tuple:
        try:
            return fn(s)
        except SingularInput as err:
            raise SingularInput(f"{where}: {err}") from err

    start = (t.x, t.y, t.z)
    lhs = stage(on23, stage(on13, stage(on12, start, "lhs factors (1,2)"),
                            "lhs factors (1,3)"), "lhs factors (2,3)")
    rhs = stage(on12, stage(on13, stage(on23, start, "rhs factors (2,3)"),
                            "rhs factors (1,3)"), "rhs factors (1,2)")
    return lhs == rhs


def check_unitarity(
    map_id: MapId,
    x: YBPoint,
    y: YBPoint,
    beta1,
    beta2,
    *,
    corrupt: bool = False,
) -> bool:
    """Applying the map and then its swapped-parameter conjugate restores (x, y)."""
    p, q = apply_map(map_id, x, y, beta1, beta2, corrupt=corrupt)
    p2, q2 = apply_map(map_id, q, p, beta2, beta1, corrupt=corrupt)
    return (q2, p2) == (x, y)


@dataclass(frozen=True)
class VerificationReport:
    """Aggregated outcome of one property sweep.

    Always samples_passed <= samples_valid <= samples_requested and
    singular_skipped = requested - valid.  first_failure holds the full
    input dump of the lowest-index failing sample, when there is one.
    """

    map: str
    property: Property
    samples_requested: int
    samples_valid: int
    samples_passed: int
    singular_skipped: int
    first_failure: dict | None = None

    def all_passed(self) -> bool:
        return self.samples_valid > 0 and self.samples_passed == self.samples_valid

    def to_json_dict(self) -> dict:
        data = {
            "map": self.map,
            "property": self.property.value,
            "requested": self.samples_requested,
            "valid": self.samples_valid,
            "passed": self.samples_passed,
            "skipped": self.singular_skipped,
        }
        if self.first_failure is not None:
            data["first_failure"] = self.first_failure
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _encode(value):
    """Recursive dump of sampled inputs with rationals as "p/q" strings."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, tuple):
        return [_encode(v) for v in value]
    if isinstance(value, YBPoint):
        return {"first": _encode(value.first), "second": _encode(value.second)}
    if isinstance(value, FieldPoint):
        return {"u": _encode(value.u), "v": _encode(value.v)}
    if isinstance(value, GammaPair):
        return {
            "beta": format_rational(value.beta),
            "gamma": format_rational(value.gamma),
            "delta": value.delta,
        }
    if isinstance(value, PathState):
        return {
            "vertices": _encode(value.vertices),
            "alphas": _encode(value.alphas),
            "periodic": value.periodic,
        }
    return value


_DISTINCT_ATTEMPTS = 25

# maps whose formulas divide by the edge parameters themselves
_NONZERO_BETA_TAGS = frozenset(
    {MapTag.E4_GENERIC, MapTag.E4_EPS0_SCALING, MapTag.E4_EPS0_JOINT}
)


def _map_param_maker(map_id: MapId, stream: RationalStream):
    if map_id.tag is MapTag.E5_DELTA1:
        return lambda: gamma_pair_from_slope(stream.next_nonzero(), 1)
    if map_id.tag in _NONZERO_BETA_TAGS:
        return stream.next_nonzero
    return stream.next


def _system_param_maker(system: QuadSystem, stream: RationalStream):
    if system.family is Family.E5:
        return lambda: gamma_pair_from_slope(stream.next_nonzero(), system.delta)
    if system.family is Family.E4:
        return stream.next_nonzero
    return stream.next


def _draw_params(make, count: int, distinct: bool, first=None) -> tuple:
    params = [] if first is None else [first]
    while len(params) < count:
        if not distinct:
            params.append(make())
            continue
        for _ in range(_DISTINCT_ATTEMPTS):
            cand = make()
            if cand not in params:
                params.append(cand)
                break
        else:
            raise SingularInput("could not draw distinct edge parameters")
    return tuple(params)


def _draw_point(map_id: MapId, stream: RationalStream) -> YBPoint:
    m = map_id.block_size()
    first = tuple(stream.next() for _ in range(m))
    second = tuple(stream.next() for _ in range(m))
    return YBPoint(first, second)


def _draw_field_point(system: QuadSystem, stream: RationalStream) -> FieldPoint:
    if system.family is Family.VNLS:
        u = tuple(stream.next() for _ in range(system.n))
        v = tuple(stream.next() for _ in range(system.n))
        return FieldPoint(u, v)
    return FieldPoint(stream.next(), stream.next())


def _case_yb(map_id: MapId, corrupt: bool, first=None):
    def run(stream: RationalStream):
        b1, b2, b3 = _draw_params(_map_param_maker(map_id, stream), 3, True, first)
        x = _draw_point(map_id, stream)
        y = _draw_point(map_id, stream)
        z = _draw_point(map_id, stream)
        t = TripleState(x, y, z, b1, b2, b3)
        ok = check_yb_relation(map_id, t, corrupt=corrupt)
        dump = {
            "x": _encode(x), "y": _encode(y), "z": _encode(z),
            "beta1": _encode(b1), "beta2": _encode(b2), "beta3": _encode(b3),
        }
        return ok, dump

    return run


def _case_unitarity(map_id: MapId, corrupt: bool, first=None):
    def run(stream: RationalStream):
        b1, b2 = _draw_params(_map_param_maker(map_id, stream), 2, False, first)
        x = _draw_point(map_id, stream)
        y = _draw_point(map_id, stream)
        ok = check_unitarity(map_id, x, y, b1, b2, corrupt=corrupt)
        dump = {
            "x": _encode(x), "y": _encode(y),
            "beta1": _encode(b1), "beta2": _encode(b2),
        }
        return ok, dump

    return run


def _case_consistency(system: QuadSystem, corrupt: bool, first=None):
    def run(stream: RationalStream):
        b1, b2, b3 = _draw_params(_system_param_maker(system, stream), 3, False, first)
        f = _draw_field_point(system, stream)
        f1 = _draw_field_point(system, stream)
        f2 = _draw_field_point(system, stream)
        f3 = _draw_field_point(system, stream)
        report = check_consistency_3d(system, f, f1, f2, f3, b1, b2, b3)
        dump = {
            "f": _encode(f), "f1": _encode(f1), "f2": _encode(f2),
            "f3": _encode(f3),
            "beta1": _encode(b1), "beta2": _encode(b2), "beta3": _encode(b3),
        }
        return report.consistent, dump

    return run


_PATH_VERTICES = 8


def _case_braid(components: int, corrupt: bool):
    def run(stream: RationalStream):
        path = random_path(stream, _PATH_VERTICES, components=components)
        last = len(path.vertices) - 2
        ok = True
        for k in range(1, last + 1):
            if flip(flip(path, k), k) != path:
                ok = False
        for j in range(1, last):
            if not check_braid(path, j):
                ok = False
        for i in range(1, last + 1):
            for j in range(i + 2, last + 1):
                if not check_commutation(path, i, j):
                    ok = False
        return ok, {"path": _encode(path)}

    return run


def _case_zero_curvature(map_id: MapId, corrupt: bool, first=None):
    def run(stream: RationalStream):
        b1, b2 = _draw_params(_map_param_maker(map_id, stream), 2, False, first)
        x = _draw_point(map_id, stream)
        y = _draw_point(map_id, stream)
        p, q = apply_map(map_id, x, y, b1, b2, corrupt=corrupt)
        ok = check_zero_curvature(x, y, p, q, b1, b2)
        dump = {
            "x": _encode(x), "y": _encode(y),
            "beta1": _encode(b1), "beta2": _encode(b2),
        }
        return ok, dump

    return run


def _case_commuting_diagram(map_id: MapId, corrupt: bool, first=None):
    system = parent_system(map_id)

    def run(stream: RationalStream):
        b1, b2 = _draw_params(_system_param_maker(system, stream), 2, False, first)
        f = _draw_field_point(system, stream)
        f1 = _draw_field_point(system, stream)
        f2 = _draw_field_point(system, stream)
        square = SquareSolution.solve(system, f, f1, f2, b1, b2)
        ok = check_commuting_diagram(map_id, square, corrupt=corrupt)
        dump = {
            "f": _encode(f), "f1": _encode(f1), "f2": _encode(f2),
            "beta1": _encode(b1), "beta2": _encode(b2),
        }
        return ok, dump

    return run


def _case_functional_relations(map_id: MapId, corrupt: bool, first=None):
    def run(stream: RationalStream):
        b1, b2 = _draw_params(_map_param_maker(map_id, stream), 2, False, first)
        x = _draw_point(map_id, stream)
        y = _draw_point(map_id, stream)
        p, q = apply_map(map_id, x, y, b1, b2)
        if corrupt:
            # the relations eliminate the multipliers, so a corrupted
            # multiplier cannot break them; shift the candidate image instead
            p = YBPoint(tuple(c + 1 for c in p.first), p.second)
        residuals = functional_relation_residuals(map_id, x, y, p, q)
        ok = all(r == 0 for r in residuals)
        dump = {
            "x": _encode(x), "y": _encode(y),
            "beta1": _encode(b1), "beta2": _encode(b2),
            "residuals": _encode(residuals),
        }
        return ok, dump

    return run


def _case_non_quadrirational(map_id: MapId, corrupt: bool, first=None):
    block = p_independent_block(map_id)

    def run(stream: RationalStream):
        b1, b2 = _draw_params(_map_param_maker(map_id, stream), 2, False, first)
        x = _draw_point(map_id, stream)
        y = _draw_point(map_id, stream)
        replacement = tuple(stream.next() for _ in range(map_id.block_size()))
        old = x.first if block == "first" else x.second
        if replacement == old:
            # any change works; shifting keeps the draw deterministic
            replacement = tuple(c + 1 for c in replacement)
        p, _ = apply_map(map_id, x, y, b1, b2, corrupt=corrupt)
        p2, _ = apply_map(
            map_id, replace_block(x, block, replacement), y, b1, b2,
            corrupt=corrupt,
        )
        dump = {
            "x": _encode(x), "y": _encode(y),
            "beta1": _encode(b1), "beta2": _encode(b2),
            "replaced_block": block,
            "replacement": _encode(replacement),
        }
        return p2 == p, dump

    return run


def _braid_components(target) -> int:
    if isinstance(target, QuadSystem):
        if target.family is Family.E1:
            return 1
        if target.family is Family.VNLS:
            return target.n
    if isinstance(target, MapId):
        if target.tag in (MapTag.E1_SHADED, MapTag.E1_BLANK):
            return 1
        if target.tag is MapTag.VNLS:
            return target.n
    raise ValueError(
        f"braid laws apply to chains of family e1 or vnls, not {target.label()}"
    )


def _resolve_case(target, prop: Property, corrupt: bool, first=None):
    if corrupt and prop not in CORRUPTIBLE:
        raise ValueError(f"property {prop.value} has no corruption fixture")
    if prop is Property.CONSISTENCY_3D:
        system = target if isinstance(target, QuadSystem) else parent_system(target)
        return _case_consistency(system, corrupt, first)
    if prop is Property.BRAID:
        if first is not None:
            raise ValueError("property braid does not take a pinned parameter")
        return _case_braid(_braid_components(target), corrupt)
    if not isinstance(target, MapId):
        raise ValueError(f"property {prop.value} needs a map id, not a family")
    if prop is Property.ZERO_CURVATURE:
        if target.tag is not MapTag.E1_SHADED:
            raise ValueError("zero-curvature verification covers e1-shaded only")
        return _case_zero_curvature(target, corrupt, first)
    cases = {
        Property.YB: _case_yb,
        Property.UNITARITY: _case_unitarity,
        Property.COMMUTING_DIAGRAM: _case_commuting_diagram,
        Property.FUNCTIONAL_RELATIONS: _case_functional_relations,
        Property.NON_QUADRIRATIONAL: _case_non_quadrirational,
    }
    return cases[prop](target, corrupt, first)


def sweep(
    target,
    prop: Property,
    seed: int = 42,
    n: int = 100,
    bound: int = 10,
    *,
    corrupt: bool = False,
    retry_budget: int = 25,
    first_param=None,
) -> VerificationReport:
    """Evaluate a property on n seeded samples and aggregate the outcomes.

    target is a MapId, or a QuadSystem for the family-level properties
    (consistency-3d and braid).  Each sample redraws on SingularInput up
    to retry_budget times before being counted as skipped; a sweep whose
    every sample is skipped raises RetryBudgetExhausted instead of
    returning a vacuous report.  first_param, when given, replaces the
    first edge parameter of every sample (the CLI's slope-pinning hook).
    """
    if n < 1:
        raise ValueError(f"sample count must be >= 1, got {n}")
    if retry_budget < 1:
        raise ValueError(f"retry budget must be >= 1, got {retry_budget}")
    run = _resolve_case(target, prop, corrupt, first_param)
    stream = RationalStream(seed, bound)
    valid = passed = skipped = 0
    first_failure = None
    for _ in range(n):
        outcome = None
        for _ in range(retry_budget):
            try:
                outcome = run(stream)
            except SingularInput:
                continue
            break
        if outcome is None:
            skipped += 1
            continue
        ok, dump = outcome
        valid += 1
        if ok:
            passed += 1
        elif first_failure is None:
            first_failure = dump
    if valid == 0:
        raise RetryBudgetExhausted(
            f"no valid sample in {n} tries with budget {retry_budget}; "
            "the parameter choice looks degenerate"
        )
    return VerificationReport(
        target.label(), prop, n, valid, passed, skipped, first_failure
    )
