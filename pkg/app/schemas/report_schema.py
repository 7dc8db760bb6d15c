from pydantic import BaseModel
from typing import Any, Dict, List, Optional

from core.decomposition import Component, SplitComponent
from core.unigraph import ClassifiedComponent


class ComponentReport(BaseModel):
    kind: str
    family: Optional[str] = None
    params: Dict[str, Any] = {}
    relative: Optional[str] = None
    paired: bool
    k_part: List[List[int]] = []
    s_part: List[List[int]] = []
    seq: List[List[int]] = []
    dist: Optional[int] = None

    @classmethod
    def build(cls, component: Component, classified: Optional[ClassifiedComponent] = None) -> "ComponentReport":
        fields: Dict[str, Any] = {"kind": "unclassified", "paired": isinstance(component, SplitComponent)}
        if isinstance(component, SplitComponent):
            fields["k_part"] = [list(e) for e in component.pseq.k_part]
            fields["s_part"] = [list(e) for e in component.pseq.s_part]
        else:
            fields["seq"] = [list(e) for e in component.seq.entries]
        if classified is not None:
            fields.update(
                kind=classified.kind.label(),
                family=classified.kind.family,
                params=classified.kind.params(),
                relative=classified.relative.value,
                dist=classified.dist_number,
            )
        return cls(**fields)


class UnigraphReportSchema(BaseModel):
    canonical: Optional[List[ComponentReport]] = None
    components: List[ComponentReport]
    dist: Optional[int] = None
    unigraph: bool


class OracleReport(BaseModel):
    action: str
    n: int
    result: Any
    witness: Optional[Any] = None


class BenchReport(BaseModel):
    n: int
    seconds: float
    dist: int
