from pydantic import BaseModel, model_validator
from typing import List, Literal, Optional

from core.degseq import RelativeTag

INPUT_COMMANDS = {"dist", "decompose", "classify", "oracle", "iso"}


class CliConfig(BaseModel):
    command: Literal["dist", "decompose", "classify", "gen", "oracle", "bench", "iso"]
    degseq: Optional[str] = None
    edges: Optional[str] = None
    other_degseq: Optional[str] = None
    other_edges: Optional[str] = None
    output_format: Literal["text", "json"] = "text"
    compact: bool = False
    threshold: bool = False
    seed: Optional[int] = None
    cap: Optional[int] = None
    action: Optional[Literal["aut", "dist", "count", "split", "iso"]] = None
    colors: Optional[int] = None
    family: Optional[str] = None
    params: List[int] = []
    relative: RelativeTag = RelativeTag.IDENTITY
    sizes: List[int] = []
    repeats: Optional[int] = None

    @model_validator(mode="after")
    def check_sources(self) -> "CliConfig":
        if self.command in INPUT_COMMANDS and (self.degseq is None) == (self.edges is None):
            raise ValueError("give exactly one of --degseq or --edges")
        if self.command == "oracle":
            if self.action is None:
                raise ValueError("oracle needs an action")
            if self.edges is None:
                raise ValueError("oracle works on an explicit graph: use --edges")
            if self.action == "iso" and self.other_edges is None:
                raise ValueError("oracle iso needs --other-edges")
            if self.action == "count" and (self.colors is None or self.colors < 1):
                raise ValueError("oracle count needs --colors >= 1")
        if self.command == "iso" and (self.other_degseq is None) == (self.other_edges is None):
            raise ValueError("iso needs exactly one of --other-degseq or --other-edges")
        if self.command == "gen" and not self.family:
            raise ValueError("gen needs a family name")
        if self.cap is not None and self.cap < 1:
            raise ValueError("--cap must be >= 1")
        return self
