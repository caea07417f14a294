"""JSON documents written by the command line."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator


class CoshTerms(BaseModel):
    """Cosh-basis polynomial as [frequency, "num/den"] pairs."""
    terms: List[List] = Field(..., description="Sorted [k, coefficient] pairs")


class StepRecord(BaseModel):
    index: int = Field(..., ge=1, description="Step number, from 1")
    alpha: str = Field(..., description="Factor cancelled against: A or B")
    k: int = Field(..., ge=0, description="Remainder frequency after the step")
    f: int = Field(..., ge=0, description="Frequency of the cofactor term")
    c: int = Field(..., description="Cofactor coefficient")
    d: str = Field(..., description="Remainder coefficient")


class BezoutResult(BaseModel):
    """Model for a computed Bézout identity."""
    a: int = Field(..., ge=1, description="Shorter length")
    b: int = Field(..., ge=1, description="Longer length")
    swapped: bool = Field(False, description="Whether the input order was reversed")
    L1: CoshTerms = Field(..., description="Cofactor of cosh(ax)")
    L2: CoshTerms = Field(..., description="Cofactor of cosh(bx)")
    k_sequence: Optional[List[int]] = Field(None, description="Remainder frequencies k_0..k_(m-1)")
    steps: Optional[List[StepRecord]] = Field(None, description="Full step trace")


class VerifyResult(BaseModel):
    a: int
    b: int
    residual_zero: bool = Field(..., description="L1 cosh(ax) + L2 cosh(bx) - 1 vanishes")
    oracle_checked: bool = Field(..., description="Whether extended Euclid was run")
    oracle_agrees: Optional[bool] = Field(None, description="Cofactors equal the extended Euclid ones")

    @property
    def ok(self) -> bool:
        return self.residual_zero and self.oracle_agrees is not False


class SeriesRow(BaseModel):
    power: int = Field(..., ge=0, description="Even power of x")
    L1_coeff: str
    L2_coeff: str

    @field_validator("power")
    def validate_power(cls, v):
        """Only even powers are stored."""
        if v % 2:
            raise ValueError("series rows carry even powers only")
        return v


class SeriesResult(BaseModel):
    """Model for an expanded cofactor pair."""
    a: int
    b: int
    order: int = Field(..., ge=0, description="Truncation order J, last power 2J")
    mode: str = Field(..., description="exact or floatN")
    normalized: bool
    rows: List[SeriesRow]


class ApproxRow(BaseModel):
    a: int
    b: int
    seconds: float = Field(..., ge=0, description="Wall time of the row")
    top_coefficient: str = Field(..., description="Coefficient of x^(2J) in normalized L1")
    rows: List[SeriesRow]
    raw_rows: List[SeriesRow]


class TableFindingRecord(BaseModel):
    fraction: str
    published: str
    computed: str
    matching_digits: int = Field(..., ge=0)
    sign_agrees: bool
    exponent_shift: int


class DuplicateFindingRecord(BaseModel):
    fractions: List[str]
    published: str
    computed_distinct: bool


class ApproxResult(BaseModel):
    """Model for the approximation experiment report."""
    target: str
    order: int
    mode: str
    rows: List[ApproxRow]
    table_findings: List[TableFindingRecord]
    duplicate_findings: List[DuplicateFindingRecord]


class PairingVerdictRecord(BaseModel):
    pairing: str
    weights: Dict[int, int]
    touches_heated: bool
    is_flat: bool


class FlatOutputResult(BaseModel):
    a: int
    b: int
    q: int = Field(..., ge=1)
    weights: Dict[int, int] = Field(..., description="Node index -> weight")
    verdicts: Optional[List[PairingVerdictRecord]] = None


class FoldEventRecord(BaseModel):
    move: str
    position: int = Field(..., description="Crease (0) or short end the move is made at")
    length: int
    layers: int


class FoldResult(BaseModel):
    a: int
    b: int
    counts: Dict[int, int] = Field(..., description="Border index -> net signed count")
    events: Optional[List[FoldEventRecord]] = None


class RankResult(BaseModel):
    a: int
    b: int
    q: int
    n: int = Field(..., description="State dimension")
    rank: int
    deficiency: int


class PlanSummary(BaseModel):
    """Model for a simulated rest-to-rest plan."""
    a: int
    b: Optional[int]
    q: int
    order: int
    sigma: float
    T: float
    dt: float
    grid_points: int
    transfer_error: float = Field(..., ge=0)


class BenchRow(BaseModel):
    a: int
    b: int
    mode: str = Field(..., description="arrays or series<J>")
    seconds: float = Field(..., ge=0, description="Median wall time")

    @field_validator("mode")
    def validate_mode(cls, v):
        """Validate benchmark mode."""
        if v != "arrays" and not v.startswith("series"):
            raise ValueError("mode must be 'arrays' or 'series<J>'")
        return v


class BenchResult(BaseModel):
    rows: List[BenchRow]
    slopes: Dict[str, float] = Field(..., description="Log-log slope of time against a+b per mode")
