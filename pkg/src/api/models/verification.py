from pydantic import BaseModel, Field
from typing import Optional, Dict, Any


class LemmaRequest(BaseModel):
    k_max: Optional[int] = None
    m_max: Optional[int] = None
    degree_max: Optional[int] = None
    k_min: Optional[int] = None
    m_min: Optional[int] = None


class TiltingRequest(BaseModel):
    degree_max: Optional[int] = Field(default=None, ge=0)


class CompareRequest(BaseModel):
    degree_max: Optional[int] = Field(default=None, ge=0)


class ConventionsResponse(BaseModel):
    version: str
    schema_version: int
    conventions: Dict[str, Any]
