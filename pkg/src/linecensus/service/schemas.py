"""Request and response models for the census service."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class SurfaceRequest(BaseModel):
    """Common surface-selection block.

    Exactly one source: inline polynomial text (or a path to a file
    holding one) via `surface`, or a gallery name via `gallery`.
    """

    field: str = Field(description="field literal, 'p' or 'p^e'")
    surface: Optional[str] = None
    gallery: Optional[str] = None
    d: Optional[int] = None
    seed: int = 0
    budget: Optional[int] = None


class CensusRequest(SurfaceRequest):
    workers: int = 1
    groebner_cap: int = 64
    ext_cap: int = 3
    budget_q: int = 13
    assume_irreducible: bool = False


class SmoothRequest(SurfaceRequest):
    groebner_cap: int = 64
    ext_cap: int = 3


class ClassicalRequest(SurfaceRequest):
    r: int = 1
    assume_irreducible: bool = False


class AuxRequest(SurfaceRequest):
    m: int = 1
    n: int = 0


class HessianRequest(SurfaceRequest):
    assume_irreducible: bool = False


class ClassifyLineRequest(SurfaceRequest):
    line: str = Field(description="line literal 'a0,a1,a2,a3|b0,b1,b2,b3'")


class BoundsRequest(BaseModel):
    q: int
    d: int
    point_count: Optional[int] = None
    smooth: Optional[bool] = None
    classical_r1: Optional[bool] = None
    gamma_zero_dim: Optional[bool] = None
    no_contained_line: Optional[bool] = None


class SearchRequest(BaseModel):
    field: str
    budget: int = 100
    seed: int = 0
    groebner_cap: int = 64
    ext_cap: int = 3


class GalleryRequest(BaseModel):
    field: str
    name: str
    d: Optional[int] = None
    seed: int = 0
    budget: Optional[int] = None


# --- responses ---

class FieldInfo(BaseModel):
    p: int
    e: int
    modulus: List[int]


class SurfaceInfo(BaseModel):
    text: str
    degree: int
    source: str


class CensusCounts(BaseModel):
    contained: int
    transverse: int
    rational_tangent: int
    special_tangent: int
    total: int


class PointCounts(BaseModel):
    count_q: int
    count_q2: Optional[int] = None
    count_q3: Optional[int] = None


class ClassicalInfo(BaseModel):
    value: bool
    method: str


class GammaInfo(BaseModel):
    value: Optional[int]
    method: str


class Hypotheses(BaseModel):
    smooth: str
    frobenius_classical_r1: ClassicalInfo
    frobenius_classical_r2: ClassicalInfo
    gamma_dimension: GammaInfo


class BoundEntry(BaseModel):
    value_numerator: Optional[int]
    value_denominator: Optional[int]
    threshold: Optional[int]
    applicable: Optional[bool]
    satisfied: Optional[bool]


class Timing(BaseModel):
    wall_ms: int
    workers: int


class CensusResponse(BaseModel):
    field: FieldInfo
    surface: SurfaceInfo
    census: CensusCounts
    points: PointCounts
    lines_in_surface: List[str]
    hypotheses: Hypotheses
    bounds: Dict[str, BoundEntry]
    timing: Timing


class SmoothResponse(BaseModel):
    verdict: str
    witness: Optional[str] = None


class ClassicalResponse(BaseModel):
    r: int
    value: bool
    method: str


class AuxResponse(BaseModel):
    m: int
    n: int
    text: str
    degree: Optional[int]


class HessianResponse(BaseModel):
    vanishes_on_surface: bool


class ClassifyLineResponse(BaseModel):
    kind: str
    line: str
    witness: Optional[str] = None
    repeated_factor: Optional[str] = None


class BoundsResponse(BaseModel):
    q: int
    d: int
    bounds: Dict[str, BoundEntry]


class FoundSurface(BaseModel):
    text: str
    forms: List[str]


class SearchResponse(BaseModel):
    tried: int
    found: List[FoundSurface]
    verdicts: List[str]
    seed: int
    elapsed_ms: int


class GalleryResponse(BaseModel):
    name: str
    text: str
    degree: int
