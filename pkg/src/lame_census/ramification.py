"""Ramification data of the Belyi covers behind integral Lame equations.

Each of the five cases (``Ia``, ``Ib``, ``Ic``, ``Id``, ``II``) prescribes, for
given ``(n, N)``, the cycle types of the monodromy over the target points
0, 1 and infinity, plus where the four singular points ``0, 1, lambda, inf``
of the Lame equation sit.  A case is valid at ``(n, N)`` when every count
in its table is a nonnegative integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import check_natural
from .errors import InvalidProfileError, InvariantError

CASES = ("Ia", "Ib", "Ic", "Id", "II")
SOURCES = ("source-0", "source-1", "source-lambda", "source-inf")
TARGETS = ("over-0", "over-1", "over-inf")


@dataclass(frozen=True, order=True)
class CycleType:
    """A partition of the degree, stored in descending order."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        if any(isinstance(p, bool) or not isinstance(p, int) or p < 1 for p in parts):
            raise ValueError(f"cycle type parts must be positive ints: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def ramification(self) -> int:
        """``sum(e - 1)`` over the parts."""
        return sum(p - 1 for p in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


@dataclass(frozen=True)
class MarkedPoint:
    name: str
    target: str
    multiplicity: int


@dataclass(frozen=True)
class RamificationProfile:
    case_label: str
    n: int
    N: int
    degree: int
    type_over_0: CycleType
    type_over_1: CycleType
    type_over_inf: CycleType
    marks: tuple[MarkedPoint, ...] = field(default=())

    def fiber(self, target: str) -> CycleType:
        return {
            "over-0": self.type_over_0,
            "over-1": self.type_over_1,
            "over-inf": self.type_over_inf,
        }[target]

    def types(self) -> tuple[CycleType, CycleType, CycleType]:
        return (self.type_over_0, self.type_over_1, self.type_over_inf)

    def to_json(self) -> dict:
        return {
            "case": self.case_label,
            "n": self.n,
            "N": self.N,
            "degree": self.degree,
            "over0": list(self.type_over_0.parts),
            "over1": list(self.type_over_1.parts),
            "overInf": list(self.type_over_inf.parts),
            "marks": [
                {"name": m.name, "target": m.target, "multiplicity": m.multiplicity}
                for m in self.marks
            ],
        }


# Counts are kept as Fractions so that non-integral table entries can be
# reported instead of silently floored.
def _half(x) -> Fraction:
    return Fraction(x, 2)


def _table(case: str, n: int, N: int):
    """Return ``(marks, rows)`` for one table.

    ``marks`` lists ``(source, target, multiplicity)`` for the four singular
    points; ``rows[target]`` lists the unnamed extra points of that fiber as
    ``(label, count, multiplicity)``.
    """
    nN = n * N
    top = 2 * n + 1
    if case == "Ia":
        marks = [("source-0", "over-0", 1), ("source-1", "over-0", 1),
                 ("source-lambda", "over-0", 1), ("source-inf", "over-0", top)]
        extras1 = [("nN/2", _half(nN), 2)]
        extras0 = [("(nN-2n-4)/2", _half(nN - 2 * n - 4), 2)]
    elif case == "Ib":
        marks = [("source-0", "over-0", 1), ("source-1", "over-0", 1),
                 ("source-lambda", "over-1", 1), ("source-inf", "over-0", top)]
        extras1 = [("(nN-1)/2", _half(nN - 1), 2)]
        extras0 = [("(nN-2n-3)/2", _half(nN - 2 * n - 3), 2)]
    elif case == "Ic":
        marks = [("source-0", "over-0", 1), ("source-1", "over-1", 1),
                 ("source-lambda", "over-1", 1), ("source-inf", "over-0", top)]
        extras1 = [("(nN-2)/2", _half(nN - 2), 2)]
        extras0 = [("(nN-2n-2)/2", _half(nN - 2 * n - 2), 2)]
    elif case == "Id":
        marks = [("source-0", "over-1", 1), ("source-1", "over-1", 1),
                 ("source-lambda", "over-1", 1), ("source-inf", "over-0", top)]
        extras1 = [("(nN-3)/2", _half(nN - 3), 2)]
        extras0 = [("(nN-2n-1)/2", _half(nN - 2 * n - 1), 2)]
    elif case == "II":
        half_N = _half(N)
        marks = [("source-0", "over-0", 1), ("source-1", "over-inf", half_N),
                 ("source-lambda", "over-inf", half_N), ("source-inf", "over-0", top)]
        extras1 = [("nN/2", _half(nN), 2)]
        extras0 = [("(nN-2n-2)/2", _half(nN - 2 * n - 2), 2)]
    else:
        raise ValueError(f"unknown case label {case!r}; expected one of {', '.join(CASES)}")

    inf_count = n - 1 if case == "II" else n
    inf_label = "n-1" if case == "II" else "n"
    extrasInf = [(inf_label, Fraction(inf_count), N)]
    rows = {"over-0": extras0, "over-1": extras1, "over-inf": extrasInf}
    return marks, rows


def _as_count(case, n, N, label, value) -> int:
    if value.denominator != 1 or value < 0:
        raise InvalidProfileError(case, n, N, label, value)
    return int(value)


def build_profile(case_label: str, n: int, N: int) -> RamificationProfile:
    """Instantiate one ramification table at ``(n, N)``.

    Raises :class:`InvalidProfileError` naming the first table entry that is
    negative or non-integral, and ``ValueError`` for an unknown case label.
    """
    check_natural(n, "n")
    check_natural(N)
    marks_spec, rows = _table(case_label, n, N)

    fibers: dict[str, list[int]] = {t: [] for t in TARGETS}
    marks = []
    for name, target, mult in marks_spec:
        if isinstance(mult, Fraction):
            mult = _as_count(case_label, n, N, "N/2", mult)
            if mult == 0:
                raise InvalidProfileError(case_label, n, N, "N/2", 0)
        fibers[target].append(mult)
        marks.append(MarkedPoint(name, target, mult))
    for target, extras in rows.items():
        for label, count, mult in extras:
            fibers[target].extend([mult] * _as_count(case_label, n, N, label, count))

    types = {t: CycleType(tuple(parts)) for t, parts in fibers.items()}
    degrees = {t: ct.degree for t, ct in types.items()}
    if len(set(degrees.values())) != 1:
        raise InvariantError(f"fiber degrees disagree for {case_label}({n},{N}): {degrees}")
    degree = degrees["over-0"]
    if degree != n * N:
        raise InvariantError(f"degree {degree} != nN for {case_label}({n},{N})")

    profile = RamificationProfile(
        case_label, n, N, degree,
        types["over-0"], types["over-1"], types["over-inf"], tuple(marks),
    )
    if riemann_hurwitz_check(profile) != 0:
        raise InvariantError(f"{case_label}({n},{N}) is not a genus-0 profile")
    return profile


def profiles_for(n: int, N: int) -> list[RamificationProfile]:
    """All cases valid at ``(n, N)``, in the order Ia, Ib, Ic, Id, II."""
    out = []
    for case in CASES:
        try:
            out.append(build_profile(case, n, N))
        except InvalidProfileError:
            continue
    return out


def riemann_hurwitz_check(p: RamificationProfile) -> int:
    """Genus of the covering surface from ``2 - 2g = 2d - sum(e - 1)``."""
    total = sum(ct.ramification() for ct in p.types())
    two_g = total - 2 * p.degree + 2
    if two_g < 0 or two_g % 2:
        raise InvariantError(
            f"{p.case_label}({p.n},{p.N}) gives impossible genus {Fraction(two_g, 2)}"
        )
    return two_g // 2
