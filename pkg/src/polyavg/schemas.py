"""Pydantic request/response models shared by the service and the CLI."""

from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from .ensemble import DEFAULT_ENUMERATION_BUDGET
from .multinomial import DEFAULT_COMPOSITION_BUDGET

MethodName = Literal["oracle", "recursion", "multinomial", "closedform", "all"]


class ValueOut(BaseModel):
    re: str
    im: str
    text: str


class Stats(BaseModel):
    dp_fill_ops: int = 0
    cache: Literal["off", "hit", "miss"] = "off"


class ComputeRequest(BaseModel):
    set: str
    n: int = Field(ge=0)
    alpha: Optional[int] = Field(default=None, ge=0)
    s: Optional[int] = Field(default=None, ge=0)
    t: Optional[int] = Field(default=None, ge=0)
    m: int = 0
    method: MethodName = "recursion"
    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET
    composition_budget: int = DEFAULT_COMPOSITION_BUDGET

    @model_validator(mode="after")
    def _resolve_exponents(self):
        if self.alpha is None and (self.s is None or self.t is None):
            raise ValueError("provide alpha, or both s and t")
        if self.alpha is not None:
            if (self.s is not None and self.s != self.alpha) or (
                self.t is not None and self.t != self.alpha
            ):
                raise ValueError("alpha conflicts with explicit s/t")
            object.__setattr__(self, "s", self.alpha)
            object.__setattr__(self, "t", self.alpha)
        elif self.s == self.t:
            object.__setattr__(self, "alpha", self.s)
        return self


class MethodResult(BaseModel):
    method: str
    status: Literal["ok", "skipped", "inapplicable"]
    value: Optional[ValueOut] = None
    note: str = ""


class ComputeResponse(BaseModel):
    set: str
    n: int
    s: int
    t: int
    alpha: Optional[int]
    m: int
    method: MethodName
    value: Optional[ValueOut]
    results: List[MethodResult]
    verdict: Optional[Literal["AGREE", "DISAGREE"]] = None
    stats: Stats


class TableRequest(BaseModel):
    set: str
    n_max: int = Field(ge=0)
    alpha_max: int = Field(ge=0)
    method: Literal["oracle", "recursion", "multinomial"] = "recursion"
    paper_style: bool = False
    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET
    composition_budget: int = DEFAULT_COMPOSITION_BUDGET


class TableRow(BaseModel):
    n: int
    cells: List[str]


class TableResponse(BaseModel):
    set: str
    n_max: int
    alpha_max: int
    method: str
    paper_style: bool
    rows: List[TableRow]
    stats: Stats


class FitRequest(BaseModel):
    set: str
    alpha: int = Field(ge=0)
    n_samples: Optional[int] = Field(default=None, ge=1)
    max_degree: Optional[int] = Field(default=None, ge=0)
    periods: List[int] = [1, 2, 4]
    holdout: int = Field(default=5, ge=0)
    verify_span: int = Field(default=20, ge=0)


class CharacterForm(BaseModel):
    base: List[str]
    period2: List[str]
    period4_plus: List[str]
    period4_minus: List[str]


class FitResponse(BaseModel):
    set: str
    alpha: int
    formula: str
    period: int
    degree: int
    character: Optional[CharacterForm]
    classes: List[List[str]]
    fit_points: int
    verified_from: int
    verified_to: int


class VerifyRequest(BaseModel):
    quick: bool = False


class CheckOut(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    passed: bool
    quick: bool
    checks: List[CheckOut]


class CatalogEntryOut(BaseModel):
    id: str
    kind: str
    alpha: Optional[int]
    applicability: str
    description: str


class CatalogResponse(BaseModel):
    entries: List[CatalogEntryOut]
