"""
JSON report schemas.

Field order is the serialisation order, so reports for identical flags are
byte-identical. Wall time is deliberately absent from every schema.
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from .models import ConstructionReport, SweepTable, WeightParams


class ParamsSchema(BaseModel):
    p: str = Field(..., description="Space exponent p ('1', a finite value, or 'inf')")
    p_star: Optional[float] = Field(None, description="Conjugate exponent (null for p = 1)")
    a: float = Field(..., description="Weight decay a")
    c: float = Field(..., description="Weight scale c")

    @classmethod
    def from_params(cls, params: WeightParams) -> "ParamsSchema":
        return cls(p=params.p_label, p_star=params.p_star, a=params.a, c=params.c)


class ReportSchema(BaseModel):
    params: ParamsSchema = Field(..., description="Weight parameters")
    method: str = Field(..., description="Construction method")
    eps: float = Field(..., description="Requested error")
    size: int = Field(..., description="Number of subsets in the active set")
    d: int = Field(..., description="Largest subset cardinality")
    residual: float = Field(..., description="Certified bound on the excluded mass")
    slack_bound: float = Field(..., description="Certified overestimate of the tail bound")
    intervals: int = Field(..., description="Intervals processed")
    normalized: bool = Field(False, description="Whether eps was scaled by the operator norm")
    operator_norm: Optional[float] = Field(None, description="Operator norm used for scaling")
    effective_eps: Optional[float] = Field(None, description="Error actually requested")
    members: Optional[List[List[int]]] = Field(
        None, description="Subsets as sorted index arrays, in construction order"
    )

    @classmethod
    def from_report(cls, report: ConstructionReport) -> "ReportSchema":
        return cls(
            params=ParamsSchema.from_params(report.params),
            method=report.method,
            eps=report.eps,
            size=report.size,
            d=report.d,
            residual=report.residual,
            slack_bound=report.slack_bound,
            intervals=report.intervals,
            normalized=report.normalized,
            operator_norm=report.operator_norm,
            effective_eps=report.effective_eps,
            members=None if report.members is None else [list(u) for u in report.members],
        )


class ComparisonSchema(BaseModel):
    reports: List[ReportSchema] = Field(..., description="One report per method")
    opt_within_pw: Optional[bool] = Field(None, description="Whether the optimal set lies inside PW")
    sizes_ordered: Optional[bool] = Field(None, description="Whether |opt| <= |qopt| <= |pw|")


class SweepCellSchema(BaseModel):
    c: float
    a: float
    size: Optional[int] = None
    d: Optional[int] = None
    error: Optional[str] = None


class SweepSchema(BaseModel):
    p: str = Field(..., description="Space exponent p")
    eps: float = Field(..., description="Requested error")
    method: str = Field(..., description="Construction method")
    a_values: List[float] = Field(..., description="Column values of a")
    c_values: List[float] = Field(..., description="Row values of c")
    cells: List[SweepCellSchema] = Field(..., description="Cells in row-major (c, a) order")

    @classmethod
    def from_table(cls, table: SweepTable) -> "SweepSchema":
        cells = [
            SweepCellSchema(c=c, a=a, **_cell_fields(table, a, c))
            for c in table.c_values
            for a in table.a_values
        ]
        return cls(
            p=table.p_label,
            eps=table.eps,
            method=table.method,
            a_values=table.a_values,
            c_values=table.c_values,
            cells=cells,
        )


def _cell_fields(table: SweepTable, a: float, c: float) -> dict:
    cell = table.cell(a, c)
    return {"size": cell.size, "d": cell.d, "error": cell.error}
