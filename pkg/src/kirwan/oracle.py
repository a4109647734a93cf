"""Independent brute-force certification of the kernel construction.

Two checking routes, deliberately separate from the covering enumeration:
evaluation (substitute every fixed point of a side into every generator and
demand zero) and Groebner equality against the side's vanishing ideal
computed literally as an intersection of point ideals.  ``certify_system``
runs every applicable cross-check and returns one certificate per check; a
failing certificate always carries a concrete witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groebner import Ideal, vanishing_ideal
from .kernel import kernel_minus, kernel_plus, staircase_generators
from .moment import MomentSystem, classify
from .poly import Poly
from .spheres import sphere_families


@dataclass(frozen=True)
class Certificate:
    """Outcome of one cross-check; ``witness`` is set exactly on failure."""

    subject: str
    method: str  # "evaluation" or "groebnerEquality"
    passed: bool
    witness: str | None = None


def _point_str(point) -> str:
    return "(" + ", ".join(str(v) for v in point) + ")"


def check_vanishing(
    gens: Sequence[Poly], points: Sequence[Sequence], subject: str = "vanishing"
) -> Certificate:
    """Pass iff every generator evaluates to zero at every point."""
    for g in gens:
        for point in points:
            value = g.evaluate(point)
            if value:
                return Certificate(
                    subject,
                    "evaluation",
                    False,
                    f"generator {g} evaluates to {value} at {_point_str(point)}",
                )
    return Certificate(subject, "evaluation", True)


def oracle_kernel(sys: MomentSystem, side: str, max_points: int = 64) -> Ideal:
    """A kernel side computed the slow, definitional way.

    Intersects the point ideals of the side's fixed-point restrictions in
    index order.  An empty side yields the unit ideal, matching the empty
    covering convention.  Guarded by ``max_points`` since iterated
    elimination grows quickly; raise the bound explicitly for big runs.
    """
    cls = classify(sys)
    if side == "plus":
        targets = sorted(cls.long)
    elif side == "minus":
        targets = sorted(cls.short)
    else:
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    if not targets:
        return Ideal(sys.m, (Poly.one(sys.m),))
    if len(targets) > max_points:
        raise ValueError(
            f"{len(targets)} points exceed the oracle bound of {max_points}"
        )
    return vanishing_ideal([sys.restriction(J) for J in targets])


def _equality_certificate(subject: str, computed: Ideal, reference: Ideal) -> Certificate:
    for g in computed.generators:
        if not reference.contains(g):
            return Certificate(
                subject, "groebnerEquality", False, f"{g} is not in the reference ideal"
            )
    for h in reference.generators:
        if not computed.contains(h):
            return Certificate(
                subject, "groebnerEquality", False, f"{h} is missing from the computed ideal"
            )
    return Certificate(subject, "groebnerEquality", True)


def _is_sphere_system(sys: MomentSystem) -> bool:
    return all(
        f.n == 2 and f.values[0] > 0 and f.values[1] == -f.values[0]
        for f in sys.factors
    )


def certify_system(sys: MomentSystem, max_points: int = 64) -> list[Certificate]:
    """Run every applicable cross-check on one system.

    Always: both kernel sides vanish on their own fixed points, and each
    equals its point-ideal intersection.  Two-factor systems additionally
    check the staircase families; sphere systems at threshold zero check the
    closed-form families (away from zero those families need not generate
    the kernel, so the check would reject a correct implementation).
    """
    cls = classify(sys)
    long_points = [sys.restriction(J) for J in sorted(cls.long)]
    short_points = [sys.restriction(J) for J in sorted(cls.short)]
    plus = kernel_plus(sys)
    minus = kernel_minus(sys)

    certificates = [
        check_vanishing(plus.generators, long_points, "plus generators vanish on long side"),
        check_vanishing(minus.generators, short_points, "minus generators vanish on short side"),
        _equality_certificate(
            "plus kernel equals point-ideal intersection",
            plus,
            oracle_kernel(sys, "plus", max_points),
        ),
        _equality_certificate(
            "minus kernel equals point-ideal intersection",
            minus,
            oracle_kernel(sys, "minus", max_points),
        ),
    ]

    if sys.m == 2:
        certificates.append(
            _equality_certificate(
                "plus staircase family generates the plus kernel",
                Ideal(2, tuple(staircase_generators(sys, "plus"))),
                plus,
            )
        )
        certificates.append(
            _equality_certificate(
                "minus staircase family generates the minus kernel",
                Ideal(2, tuple(staircase_generators(sys, "minus"))),
                minus,
            )
        )

    if _is_sphere_system(sys) and sys.threshold == 0:
        radii = [f.values[0] for f in sys.factors]
        families = sphere_families(radii, sys.threshold)
        certificates.append(
            _equality_certificate(
                "sphere families (i)+(ii) generate the plus kernel",
                Ideal(sys.m, families.all_plus()),
                plus,
            )
        )
        certificates.append(
            _equality_certificate(
                "sphere families (i)+(iii) generate the minus kernel",
                Ideal(sys.m, families.all_minus()),
                minus,
            )
        )

    return certificates
