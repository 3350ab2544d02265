"""Output models. Everything is dumped with camelCase aliases and infinite distances
become null."""

from __future__ import annotations

import math
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_camel

from ..bounds import BoundsReport
from ..classical import ClassicalParams
from ..distance import DistanceResult, SideResult
from ..symmetry import Kreport, RankCheck
from .spec import CodeSpecModel

SCHEMA_VERSION = 1


def finite(x: float | None) -> int | None:
    """Distances as JSON integers; infinity means "no such operator" and maps to null."""
    if x is None or math.isinf(x):
        return None
    return int(x)


class ReportModel(BaseModel):
    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True)

    def to_dict(self) -> dict[str, Any]:
        return self.model_dump(by_alias=True, mode="json")


class SymmetryClassModel(ReportModel):
    p: str
    k0: int
    k1: int
    k2: int
    k1_tilde: int
    k2_tilde: int
    residual: bool = False


class KReportModel(ReportModel):
    n: int
    k_rank: int
    rank_gx: int
    rank_gz: int
    k_class_sum: int | None = None
    k_symmetric_form: int | None = None
    classes: list[SymmetryClassModel] = Field(default_factory=list)
    predicted_rank_gx: int | None = None
    predicted_rank_gz: int | None = None

    @classmethod
    def from_report(cls, report: Kreport, ranks: RankCheck | None = None) -> KReportModel:
        dec = report.decomposition
        classes = [
            SymmetryClassModel(
                p=str(cl.p),
                k0=cl.k0,
                k1=cl.k1,
                k2=cl.k2,
                k1_tilde=cl.k1_tilde,
                k2_tilde=cl.k2_tilde,
                residual=cl.residual,
            )
            for cl in (dec.classes if dec else ())
        ]
        return cls(
            n=report.n,
            k_rank=report.k_rank,
            rank_gx=report.rank_gx,
            rank_gz=report.rank_gz,
            k_class_sum=report.k_class_sum,
            k_symmetric_form=report.k_symmetric_form,
            classes=classes,
            predicted_rank_gx=ranks.predicted_gx if ranks else None,
            predicted_rank_gz=ranks.predicted_gz if ranks else None,
        )


class SideModel(ReportModel):
    kind: str
    d_lo: int | None
    d_hi: int | None
    exact: bool
    lower_method: str
    upper_method: str

    @classmethod
    def from_side(cls, side: SideResult) -> SideModel:
        return cls(
            kind=side.kind,
            d_lo=finite(side.d_lo),
            d_hi=finite(side.d_hi),
            exact=side.exact,
            lower_method=side.lower_method,
            upper_method=side.upper_method,
        )


class DistanceModel(ReportModel):
    applicable: bool
    d_lo: int | None
    d_hi: int | None
    exact: bool
    interval: str
    witness: str | None = None
    witness_kind: str | None = None
    split: list[int] | None = None
    sides: list[SideModel] = Field(default_factory=list)
    methods: dict[str, str] = Field(default_factory=dict)

    @classmethod
    def from_result(cls, result: DistanceResult) -> DistanceModel:
        return cls(
            applicable=result.applicable,
            d_lo=finite(result.d_lo),
            d_hi=finite(result.d_hi),
            exact=result.applicable and result.exact,
            interval=result.interval_str(),
            witness=str(result.witness) if result.witness is not None else None,
            witness_kind=result.witness_kind,
            split=list(result.split) if result.split else None,
            sides=[SideModel.from_side(s) for s in result.sides],
            methods=result.methods,
        )


class ClassicalModel(ReportModel):
    n: int
    k: int
    d_lo: int | None
    d_hi: int | None
    method: str

    @classmethod
    def from_params(cls, params: ClassicalParams) -> ClassicalModel:
        return cls(
            n=params.n,
            k=params.k,
            d_lo=finite(params.d_lo),
            d_hi=finite(params.d_hi),
            method=params.method,
        )


class ClassUpperModel(ReportModel):
    p: str
    pair: str
    value: int | None


class BoundsModel(ReportModel):
    c: int
    tiled: dict[str, ClassicalModel]
    generic_lower: int | None
    class_uppers: list[ClassUpperModel]
    premises: dict[str, bool]
    repeated_bracket: list[int | None] | None = None
    repeated_exact: list[int | None] | None = None
    repeated_even: list[int | None] | None = None
    noncss_lower: int | None = None
    noncss_even_lower: int | None = None
    css_interval: list[int | None]
    sources: dict[str, str]
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: BoundsReport) -> BoundsModel:
        def pair(p: tuple[float, float] | None) -> list[int | None] | None:
            return None if p is None else [finite(p[0]), finite(p[1])]

        lo, hi, sources = report.css_interval()
        prem = report.premises
        return cls(
            c=report.c,
            tiled={name: ClassicalModel.from_params(p) for name, p in report.tiled.items()},
            generic_lower=finite(report.generic_lower),
            class_uppers=[
                ClassUpperModel(p=str(u.p), pair=u.pair, value=finite(u.value))
                for u in report.class_uppers
            ],
            premises={
                "square": prem.square,
                "symmetricKernels": prem.symmetric_kernels,
                "nonempty": prem.nonempty,
                "generatorsAll": prem.generators_all,
                "generatorsAb": prem.generators_ab,
                "cEven": prem.c_even,
            },
            repeated_bracket=pair(report.repeated_bracket),
            repeated_exact=pair(report.repeated_exact),
            repeated_even=pair(report.repeated_even),
            noncss_lower=finite(report.noncss_lower),
            noncss_even_lower=finite(report.noncss_even_lower),
            css_interval=[finite(lo), finite(hi)],
            sources=sources,
            notes=report.notes,
        )


class AnalysisReport(ReportModel):
    schema_version: int = SCHEMA_VERSION
    tool_version: str
    seed: int
    kind: Literal["css", "noncss"]
    provenance: dict[str, Any] = Field(default_factory=dict)
    n: int
    k: int
    k_report: KReportModel | None = None
    distance: DistanceModel | None = None
    bounds: BoundsModel | None = None
    cross_checks: dict[str, bool] = Field(default_factory=dict)
    timings: dict[str, float] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.cross_checks.values())


class CodeFile(ReportModel):
    """A code serialized as 0/1 row strings; `gx`/`gz` for CSS codes, `h` otherwise."""

    schema_version: int = SCHEMA_VERSION
    tool_version: str
    kind: Literal["css", "noncss"]
    n: int
    provenance: dict[str, Any] = Field(default_factory=dict)
    split: list[int] | None = None
    matrices: dict[str, list[str]]
    spec: CodeSpecModel | None = None


class CatalogCheck(ReportModel):
    """One row of the verify-paper table.

    Computed fields stay ``None`` when the recipe fails to build; `error` then holds
    the message. With `k_reproduced` set the rebuilt K is held to it instead of
    `k_expected`.
    """

    name: str
    tier: str
    citation: str
    n_expected: int
    n_computed: int | None = None
    k_expected: int
    k_reproduced: int | None = None
    k_computed: int | None = None
    k_formulas: dict[str, int] = Field(default_factory=dict)
    k_methods_agree: bool = True
    deviation: str | None = None
    d_expected: str
    d_computed: str | None = None
    distance_ok: bool | None = None
    skipped: str | None = None
    error: str | None = None
    seconds: float = 0.0

    @property
    def k_target(self) -> int:
        return self.k_expected if self.k_reproduced is None else self.k_reproduced

    @property
    def ok(self) -> bool:
        return (
            self.error is None
            and self.n_expected == self.n_computed
            and self.k_target == self.k_computed
            and self.k_methods_agree
            and self.distance_ok is not False
        )
