"""Per-code report of a chain: (n, k, d) rows plus check outcomes, rendered
as a readable table or as a flat key/value document."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from .chain import CODE_IDS, FAMILY, Chain, CheckResult, code_name, table1_deviations

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CodeRecord:
    code_id: str
    family: int
    n: int
    k: int
    d: int | None
    d_kind: str  # "exact", "bound" (design distance), or "none" (no nonzero word)
    checks: tuple[CheckResult, ...] = ()

    @property
    def name(self) -> str:
        return code_name(self.code_id)

    def d_text(self) -> str:
        if self.d_kind == "none":
            return "-"
        if self.d_kind == "bound":
            return f">={self.d} (bound)"
        return str(self.d)


@dataclass
class Report:
    l: int
    seed: int | None
    modulus: int
    params: dict[str, int | None]
    records: list[CodeRecord]
    checks: list[CheckResult] = dc_field(default_factory=list)
    deviations: list[str] = dc_field(default_factory=list)
    extras: dict[str, str] = dc_field(default_factory=dict)

    @property
    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def record(self, code_id: str) -> CodeRecord:
        return next(r for r in self.records if r.code_id == code_id)

    def to_text(self) -> str:
        t = 1 << self.l
        lines = [
            f"Goppa code chain  l={self.l}  t={t}  GF(2^{2 * self.l}) modulus {self.modulus:#x}  seed={self.seed}",
            "params: " + " ".join(f"{k}={v}" for k, v in self.params.items() if k != "seed"),
            "",
            f"{'code':<8}{'name':<18}{'family':>7}{'n':>6}{'k':>6}  d",
        ]
        for r in self.records:
            lines.append(f"{r.code_id:<8}{r.name:<18}{r.family:>7}{r.n:>6}{r.k:>6}  {r.d_text()}")
        if self.extras:
            lines.append("")
            lines.extend(f"{k}: {v}" for k, v in self.extras.items())
        if self.deviations:
            lines.append("")
            lines.append("deviations from the closed-form (n, k):")
            lines.extend(f"  {d}" for d in self.deviations)
        if self.checks:
            lines.append("")
            lines.append(f"checks: {len(self.checks) - len(self.failed)}/{len(self.checks)} passed")
            for c in self.checks:
                mark = "PASS" if c.passed else "FAIL"
                lines.append(f"  {mark} {c.name}" + (f"  ({c.detail})" if c.detail else ""))
        return "\n".join(lines) + "\n"

    def to_structured(self) -> str:
        out = [
            f"schema_version: {SCHEMA_VERSION}",
            f"l: {self.l}",
            f"seed: {self.seed}",
            f"modulus: {self.modulus}",
        ]
        out.extend(f"param.{k}: {v}" for k, v in self.params.items() if k != "seed")
        for r in self.records:
            out += [
                "",
                "[code]",
                f"code_id: {r.code_id}",
                f"family: {r.family}",
                f"n: {r.n}",
                f"k: {r.k}",
                f"d: {'' if r.d is None else r.d}",
                f"d_kind: {r.d_kind}",
            ]
            out.extend(f"check.{c.name}: {'pass' if c.passed else 'fail'}" for c in r.checks)
        for c in self.checks:
            out += ["", "[check]", f"name: {c.name}", f"pass: {str(c.passed).lower()}"]
            if c.detail:
                out.append(f"detail: {c.detail}")
        for key, v in self.extras.items():
            out += ["", "[extra]", f"name: {key}", f"value: {v}"]
        for d in self.deviations:
            out += ["", "[deviation]", f"detail: {d}"]
        return "\n".join(out) + "\n"


def chain_report(
    chain: Chain,
    distances: Mapping[str, object] | None = None,
    checks: Sequence[CheckResult] = (),
    extras: Mapping[str, str] | None = None,
) -> Report:
    """Assemble a Report. `distances` maps code ids to DistanceResult-like
    objects (anything with a `d` attribute); codes without one get the design
    distance as a bound."""
    distances = distances or {}
    records = []
    for cid in CODE_IDS:
        code = chain.codes[cid]
        if cid in distances:
            d = distances[cid].d
            kind = "exact" if d is not None else "none"
        else:
            d, kind = code.design_distance, "bound"
        mine = tuple(c for c in checks if cid in c.codes)
        records.append(CodeRecord(cid, FAMILY[cid], code.n, code.k, d, kind, mine))
    return Report(
        l=chain.l,
        seed=chain.params.seed,
        modulus=chain.field.modulus,
        params={k: v for k, v in chain.params.to_dict().items()},
        records=records,
        checks=list(checks),
        deviations=table1_deviations(chain),
        extras=dict(extras or {}),
    )


def parse_structured(text: str) -> dict:
    """Read a structured report back into {header, code, check, extra, deviation}."""
    doc: dict = {"header": {}, "code": [], "check": [], "extra": [], "deviation": []}
    current = doc["header"]
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("[") and line.endswith("]"):
            current = {}
            doc[line[1:-1]].append(current)
            continue
        key, _, value = line.partition(": ")
        current[key] = value
    return doc
