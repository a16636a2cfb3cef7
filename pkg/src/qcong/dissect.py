"""Dissection of series by residue class and the identity-checking engine.

Fixture files are TOML, one ``[[fixture]]`` table per identity::

    [[fixture]]
    name = "phi_minus_3dissection"
    lhs = "P(1)^2/P(2)"
    rhs = "P(9)^2/P(18) - 2*q*P(3)*P(18)^2/(P(6)*P(9))"
    mod = 4                      # optional; compare modulo this (may be a "{...}" template)
    params = [{a = 2}, {a = 3}]  # optional; one check per binding
    extract = [4, 2]             # optional; compare coefficients a*n+b of lhs against rhs
    order = 400                  # optional default truncation
    inferred = true              # optional; rhs was reconstructed from a garbled display
    note = "free text"

A failing ``inferred`` fixture is reported as ``paper-discrepancy`` rather
than a plain failure.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from qcong import qexpr
from qcong.report import FAIL, PAPER_DISCREPANCY, PASS, VerificationReport
from qcong.series import ExponentRangeError, SeriesError, TruncatedSeries, reduce_mod, sub

DEFAULT_ORDER = 400


class FixtureError(ValueError):
    pass


@dataclass(frozen=True)
class Progression:
    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1 or not 0 <= self.residue < self.modulus:
            raise SeriesError(f"invalid progression {self.modulus}n+{self.residue}")

    def count_upto(self, order: int) -> int:
        """Number of n >= 0 with modulus*n + residue <= order."""
        if order < self.residue:
            return 0
        return (order - self.residue) // self.modulus + 1


@dataclass(frozen=True)
class IdentityFixture:
    name: str
    lhs: str
    rhs: str
    params: tuple[Mapping[str, int], ...] = ({},)
    modulus: int | str | None = None
    extract: tuple[int, int] | None = None
    order: int = DEFAULT_ORDER
    inferred: bool = False
    note: str = ""


def extract(s: TruncatedSeries, p: Progression) -> TruncatedSeries:
    """Coefficients at ``a*n + b``, reindexed to ``n`` (so ``q^a`` becomes ``q``)."""
    if p.residue > s.order:
        raise ExponentRangeError(f"residue {p.residue} exceeds order {s.order}")
    return TruncatedSeries((s.order - p.residue) // p.modulus, s.coeffs[p.residue :: p.modulus])


def interleave(parts: Sequence[TruncatedSeries], order: int) -> TruncatedSeries:
    """Inverse of extracting every residue class modulo ``len(parts)``."""
    a = len(parts)
    out = [0] * (order + 1)
    for b, part in enumerate(parts):
        for i, c in enumerate(part.coeffs):
            if a * i + b <= order:
                out[a * i + b] = c
    return TruncatedSeries(order, tuple(out))


def _first_nonzero(s: TruncatedSeries) -> tuple[int, int] | None:
    for i, c in enumerate(s.coeffs):
        if c:
            return i, c
    return None


def _resolve_modulus(mod: int | str | None, binding: Mapping[str, int]) -> int | None:
    if mod is None or isinstance(mod, int):
        return mod
    return int(qexpr.parametrize(mod, binding))


def _compare(lhs: TruncatedSeries, rhs: TruncatedSeries, m: int | None) -> tuple[int, int] | None:
    diff = sub(lhs, rhs)
    if m is not None:
        diff = reduce_mod(diff, m)
    return _first_nonzero(diff)


def check_identity(f: IdentityFixture, order: int | None = None) -> list[VerificationReport]:
    """Check ``lhs == rhs`` (mod ``f.modulus`` if set) for every binding, one report each."""
    n = f.order if order is None else order
    if n < 10:
        raise FixtureError(f"{f.name}: order {n} too small; need at least 10")
    reports = []
    for binding in f.params:
        t0 = time.perf_counter()
        try:
            lhs_text = qexpr.parametrize(f.lhs, binding)
            rhs_text = qexpr.parametrize(f.rhs, binding)
            m = _resolve_modulus(f.modulus, binding)
            lhs = qexpr.evaluate(lhs_text, n)
            if f.extract is not None:
                lhs = extract(lhs, Progression(*f.extract))
            rhs = qexpr.evaluate(rhs_text, lhs.order)
        except (qexpr.QExprError, SeriesError) as exc:
            raise FixtureError(f"fixture {f.name} {dict(binding)}: {exc}") from exc
        bad = _compare(lhs, rhs, m)
        status = PASS if bad is None else (PAPER_DISCREPANCY if f.inferred else FAIL)
        notes = [f.note] if f.note and bad is not None else []
        reports.append(
            VerificationReport(
                claim_id=f.name,
                params=dict(binding),
                order=lhs.order,
                status=status,
                instances_checked=lhs.order + 1,
                first_violation=bad,
                modulus=m,
                progression=tuple(f.extract) if f.extract else None,
                runtime=time.perf_counter() - t0,
                notes=notes,
            )
        )
    return reports


def check_dissection_consistency(
    expr: str,
    a: int,
    parts: Mapping[int, str] | Sequence[tuple[int, str]],
    order: int,
    complete: bool = False,
    modulus: int | None = None,
    name: str = "dissection",
) -> VerificationReport:
    """Check ``extract(expr, a, r) == part_r`` for each listed residue.

    With ``complete`` set, residues not listed must extract to zero.
    """
    parts = dict(parts)
    if len(parts) == 0 or any(not 0 <= r < a for r in parts):
        raise FixtureError(f"residues must lie in [0, {a})")
    t0 = time.perf_counter()
    whole = qexpr.evaluate(expr, order)
    residues = range(a) if complete else sorted(parts)
    checked = 0
    bad = None
    for r in residues:
        piece = extract(whole, Progression(a, r))
        target = qexpr.evaluate(parts[r], piece.order) if r in parts else 0 * piece
        checked += piece.order + 1
        hit = _compare(piece, target, modulus)
        if hit is not None:
            # report the position in the undissected series
            bad = (a * hit[0] + r, hit[1])
            break
    return VerificationReport(
        claim_id=name,
        params={"a": a},
        order=order,
        status=PASS if bad is None else FAIL,
        instances_checked=checked,
        first_violation=bad,
        modulus=modulus,
        runtime=time.perf_counter() - t0,
    )


def _as_binding(raw) -> dict[str, int]:
    if not isinstance(raw, Mapping) or not all(isinstance(v, int) for v in raw.values()):
        raise FixtureError(f"params entries must be tables of integers, got {raw!r}")
    return dict(raw)


def fixture_from_dict(d: Mapping) -> IdentityFixture:
    unknown = set(d) - {"name", "lhs", "rhs", "mod", "params", "extract", "order", "inferred", "note"}
    if unknown:
        raise FixtureError(f"unknown fixture keys {sorted(unknown)}")
    try:
        name, lhs, rhs = d["name"], d["lhs"], d["rhs"]
    except KeyError as exc:
        raise FixtureError(f"fixture missing required key {exc}") from exc
    params = tuple(_as_binding(b) for b in d.get("params", [{}])) or ({},)
    ext = d.get("extract")
    if ext is not None:
        if len(ext) != 2:
            raise FixtureError(f"{name}: extract must be [modulus, residue]")
        Progression(*ext)
        ext = (int(ext[0]), int(ext[1]))
    return IdentityFixture(
        name=name,
        lhs=" ".join(lhs.split()),
        rhs=" ".join(rhs.split()),
        params=params,
        modulus=d.get("mod"),
        extract=ext,
        order=int(d.get("order", DEFAULT_ORDER)),
        inferred=bool(d.get("inferred", False)),
        note=d.get("note", ""),
    )


def load_fixtures(path: str | Path | None = None) -> list[IdentityFixture]:
    if path is None:
        text = resources.files("qcong.data").joinpath("identities.toml").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    data = tomllib.loads(text)
    fixtures = [fixture_from_dict(d) for d in data.get("fixture", [])]
    names = [f.name for f in fixtures]
    if len(names) != len(set(names)):
        raise FixtureError("duplicate fixture names")
    return fixtures


def run_fixtures(
    fixtures: Sequence[IdentityFixture], order: int | None = None
) -> list[VerificationReport]:
    reports = []
    for f in fixtures:
        reports.extend(check_identity(f, order))
    return reports
