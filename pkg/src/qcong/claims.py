"""The congruence families, encoded as data.

Each :class:`CongruenceClaim` reads ``B(l1, l2; a*n + b) = 0 (mod m)`` where
``l1, l2, a, b`` are small integer templates over the parameters
``alpha, beta, k, i`` (``^`` is exponentiation).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Union

from qcong.qexpr import eval_int_expr

Params = Mapping[str, int]
RangeSpec = Union[range, Callable[[Params], range]]

THEOREMS = ("thm1", "thm2", "thm3", "thm4")

# every congruence stated in the four theorems; the registry is checked against this
MANIFEST = {
    "thm1": ("thm1-4n+2", "thm1-8n+5", "thm1-8n+6"),
    "thm2": ("thm2-4n+3-k", "thm2-8n+7"),
    "thm3": ("thm3-9n+3i-mod4", "thm3-9n+3i-mod8"),
    "thm4": ("thm4-12n+3", "thm4-12n+7", "thm4-12n+11"),
}


class RejectedParametersError(ValueError):
    """The parameters fall outside the claim's hypothesis."""


@dataclass(frozen=True)
class CongruenceClaim:
    id: str
    theorem: str
    l1: str
    l2: str
    a: str
    b: str
    modulus: int
    hypothesis: Callable[[Params], bool]
    hypothesis_text: str
    # the theorem's standing minimums only; explore mode may check points inside this but outside the hypothesis
    domain: Callable[[Params], bool]
    sweep: dict[str, RangeSpec] = field(default_factory=dict)

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(self.sweep)

    def instantiate(self, params: Params) -> tuple[int, int, int, int]:
        """Return ``(l1, l2, a, b)`` for the given parameters."""
        vals = [eval_int_expr(t, params) for t in (self.l1, self.l2, self.a, self.b)]
        l1, l2, a, b = vals
        if not 0 <= b < a:
            raise RejectedParametersError(f"{self.id}: progression {a}n+{b} is malformed")
        return l1, l2, a, b

    def statement(self) -> str:
        return f"B[{self.l1},{self.l2}]({self.a}*n+{self.b}) = 0 (mod {self.modulus}) for {self.hypothesis_text}"


def _odd(x: int) -> bool:
    return x % 2 == 1


def _thm4_337(p: Params) -> bool:
    # alpha odd & beta even, or both even
    return not _odd(p["beta"])


def _thm4_11(p: Params) -> bool:
    # different parity, or both even
    return _odd(p["alpha"]) != _odd(p["beta"]) or not (_odd(p["alpha"]) or _odd(p["beta"]))


def _thm4_domain(p: Params) -> bool:
    return p["alpha"] >= 2 and p["beta"] >= 1


_CLAIMS = [
    CongruenceClaim(
        "thm1-4n+2", "thm1", "2^alpha", "3", "4", "2", 4,
        hypothesis=lambda p: p["alpha"] >= 2, hypothesis_text="alpha >= 2",
        domain=lambda p: p["alpha"] >= 1,
        sweep={"alpha": range(2, 7)},
    ),
    CongruenceClaim(
        "thm1-8n+5", "thm1", "2^alpha", "3", "8", "5", 4,
        hypothesis=lambda p: p["alpha"] >= 2, hypothesis_text="alpha >= 2",
        domain=lambda p: p["alpha"] >= 1,
        sweep={"alpha": range(2, 7)},
    ),
    CongruenceClaim(
        "thm1-8n+6", "thm1", "2^alpha", "3", "8", "6", 8,
        hypothesis=lambda p: p["alpha"] >= 3, hypothesis_text="alpha >= 3",
        domain=lambda p: p["alpha"] >= 1,
        sweep={"alpha": range(3, 7)},
    ),
    CongruenceClaim(
        "thm2-4n+3-k", "thm2", "2^alpha", "3", "4^(k+1)", "3*4^k", 6,
        hypothesis=lambda p: p["k"] >= 0 and p["alpha"] > 2 * p["k"] + 1,
        hypothesis_text="k >= 0, alpha > 2k+1",
        domain=lambda p: p["k"] >= 0 and p["alpha"] >= 1,
        sweep={"k": range(0, 3), "alpha": lambda p: range(2 * p["k"] + 2, 2 * p["k"] + 5)},
    ),
    CongruenceClaim(
        "thm2-8n+7", "thm2", "2^alpha", "3", "8", "7", 12,
        hypothesis=lambda p: p["alpha"] > 2, hypothesis_text="alpha > 2",
        domain=lambda p: p["alpha"] >= 1,
        sweep={"alpha": range(3, 7)},
    ),
    CongruenceClaim(
        "thm3-9n+3i-mod4", "thm3", "2^(2*alpha+1)", "3^beta", "9", "3*i", 4,
        hypothesis=lambda p: p["alpha"] >= 0 and p["beta"] >= 2 and p["i"] in (1, 2),
        hypothesis_text="alpha >= 0, beta >= 2, i in {1,2}",
        domain=lambda p: p["alpha"] >= 0 and p["beta"] >= 1 and p["i"] in (1, 2),
        sweep={"alpha": range(0, 2), "beta": range(2, 4), "i": range(1, 3)},
    ),
    CongruenceClaim(
        "thm3-9n+3i-mod8", "thm3", "2^(2*alpha)", "3^beta", "9", "3*i", 8,
        hypothesis=lambda p: p["alpha"] >= 1 and p["beta"] >= 2 and p["i"] in (1, 2),
        hypothesis_text="alpha >= 1, beta >= 2, i in {1,2}",
        domain=lambda p: p["alpha"] >= 1 and p["beta"] >= 1 and p["i"] in (1, 2),
        sweep={"alpha": range(1, 2), "beta": range(2, 4), "i": range(1, 3)},
    ),
    CongruenceClaim(
        "thm4-12n+3", "thm4", "2^alpha", "3^beta", "12", "3", 8,
        hypothesis=lambda p: _thm4_domain(p) and _thm4_337(p),
        hypothesis_text="alpha >= 2, beta >= 1, beta even",
        domain=_thm4_domain,
        sweep={"alpha": range(2, 6), "beta": range(1, 5)},
    ),
    CongruenceClaim(
        "thm4-12n+7", "thm4", "2^alpha", "3^beta", "12", "7", 8,
        hypothesis=lambda p: _thm4_domain(p) and _thm4_337(p),
        hypothesis_text="alpha >= 2, beta >= 1, beta even",
        domain=_thm4_domain,
        sweep={"alpha": range(2, 6), "beta": range(1, 5)},
    ),
    CongruenceClaim(
        "thm4-12n+11", "thm4", "2^alpha", "3^beta", "12", "11", 8,
        hypothesis=lambda p: _thm4_domain(p) and _thm4_11(p),
        hypothesis_text="alpha >= 2, beta >= 1, parities differ or both even",
        domain=_thm4_domain,
        sweep={"alpha": range(2, 6), "beta": range(1, 5)},
    ),
]

REGISTRY: dict[str, CongruenceClaim] = {c.id: c for c in _CLAIMS}


def claims_for(theorem: str) -> list[CongruenceClaim]:
    if theorem == "all":
        return list(_CLAIMS)
    if theorem not in THEOREMS:
        raise KeyError(f"unknown theorem {theorem!r}; choose from {THEOREMS + ('all',)}")
    return [c for c in _CLAIMS if c.theorem == theorem]


def sweep_points(
    claim: CongruenceClaim,
    ranges: Mapping[str, range] | None = None,
    explore: bool = False,
) -> list[dict[str, int]]:
    """Parameter points to check: user ranges where given, the claim's defaults otherwise.

    Points outside the hypothesis are dropped, unless ``explore`` is set and
    they still satisfy the theorem's standing minimums.
    """
    ranges = dict(ranges or {})
    points: list[dict[str, int]] = [{}]
    for name, default in claim.sweep.items():
        grown = []
        for p in points:
            if name in ranges:
                values = ranges[name]
            else:
                values = default(p) if callable(default) else default
            grown.extend({**p, name: v} for v in values)
        points = grown
    keep = []
    for p in points:
        if claim.hypothesis(p) or (explore and claim.domain(p)):
            keep.append(p)
    return keep
