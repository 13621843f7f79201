from pydantic import BaseModel, ConfigDict, Field
from typing import List, Optional, Dict, Any


class ClassModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)


class PointModel(ClassModel):
    kind: str
    curve_class: Optional[str] = Field(default=None, alias="class")


class WitnessModel(ClassModel):
    curve_class: str = Field(alias="class")
    mult: int
    genus: int


class FamilyModel(BaseModel):
    shape: str
    first_ratios: List[str]
    limit: str


class SeshadriResultResponse(BaseModel):
    r: int
    point: PointModel
    value: str
    attained: bool
    lower_bound: str
    witness: Optional[WitnessModel] = None
    family: Optional[FamilyModel] = None
    elliptic_witness: Optional[WitnessModel] = None


class TheoremTableResponse(BaseModel):
    rows: List[SeshadriResultResponse]


class ExceptionalResponse(BaseModel):
    r: int
    count: int
    family_counts: Dict[str, int]
    all_rational: bool
    classes: List[str]


class ExpectedDimResponse(BaseModel):
    d: int
    mults: List[int]
    expected_dim: int
    nonempty: bool


class OracleFamilyModel(BaseModel):
    shape: str
    ratios: List[str]
    strictly_decreasing: bool
    infimum: str


class OracleResponse(BaseModel):
    r: int
    point: PointModel
    d_max: int
    value: str
    witness: WitnessModel
    scanned: int
    threshold: Optional[str] = None
    agrees: Optional[bool] = None
    family: Optional[OracleFamilyModel] = None


class PencilSampleModel(BaseModel):
    points: List[List[str]]
    F: List[str]
    G: List[str]
    monomials: List[str]
    discriminant: List[str]
    degree: int
    squarefree_degree: int
    root_count: int
    nodes: List[str]
    seed: Optional[int] = None
    attempts: int


class PencilNodesResponse(BaseModel):
    count: int
    euler_number: int
    samples: List[PencilSampleModel]
    samples_agree: bool


class RationalScanModel(BaseModel):
    d_max: int
    scanned: int
    admissible: int
    rejected: int
    minimum: Optional[int] = None
    exceptional_minimum: int
    nonpositive_rejected: bool
    analytic_guarantee: bool


class CounterexampleResponse(BaseModel):
    r: int
    k_squared: int
    nef: bool
    nef_certificate: Optional[Dict[str, Any]] = None
    pseff: bool
    pseff_certificate: Optional[Dict[str, Any]] = None
    rational_positive: bool
    rational_scan: RationalScanModel
    quartic_pencil_dim: Optional[int] = None
    cubic_expected_dim: Optional[int] = None
    cubic_empty: Optional[bool] = None
    nef_implied_by_pseff: Optional[bool] = None


class CommandResult(BaseModel):
    command: str
    parameters: Dict[str, Any]
    result: Optional[Any] = None
    error: Optional[Dict[str, str]] = None
    exit_code: int = 0


# result payload schema per CLI subcommand
COMMAND_SCHEMAS = {
    "seshadri": SeshadriResultResponse,
    "theorem-table": TheoremTableResponse,
    "exceptional": ExceptionalResponse,
    "expected-dim": ExpectedDimResponse,
    "oracle": OracleResponse,
    "pencil-nodes": PencilNodesResponse,
    "counterexample": CounterexampleResponse,
}
