"""
Query schemas for the root endpoints
Numbers stay strings here; the routers parse them with the exact parsers
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


class RuleChoice(str, Enum):
    AUTO = "auto"
    KHWARIZMI = "khwarizmi"
    CONVENTIONAL = "conventional"


class TraceQuery(BaseModel):
    shortcut: bool = False
    paper_layout: bool = Field(False, description="Include the continuous table as text")


class ApproxQuery(BaseModel):
    rule: RuleChoice = RuleChoice.AUTO


class ScaleQuery(BaseModel):
    base: int = Field(10, description="Scaling base A")
    pairs: Optional[int] = Field(None, description="Exponent p, so N is scaled by A^(2p)")


class SexagesimalQuery(BaseModel):
    places: Optional[int] = Field(None, description="Number of base-60 places")
    precision: Optional[int] = Field(None, description="Decimal places of the root")


class VerifyQuery(BaseModel):
    root: Optional[str] = None
    remainder: Optional[str] = None


class NewtonQuery(BaseModel):
    u0: Optional[str] = Field(None, description="Start value such as 1 or 3/2")
    max_steps: Optional[int] = None
    tolerance: Optional[str] = Field(None, description="Exact tolerance such as 1/1000000")


class MethodCompareQuery(BaseModel):
    places: int = Field(6, description="Decimal places of the board root")
    steps: int = Field(4, description="Newton steps")
    u0: Optional[str] = None
