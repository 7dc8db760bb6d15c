"""
Executes one validated command-line request and maps library errors to
exit codes.
"""
import json
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from action.benchmark import BenchmarkRunner
from app.schemas.cli_schema import CliConfig
from app.schemas.report_schema import ComponentReport, OracleReport, UnigraphReportSchema
from config.settings import settings
from core.decomposition import DecompositionResult
from core.errors import InvalidInput, NotThreshold, NotUnigraph, TooLarge
from core.unigraph import (
    C5, MK2, S, S2, S3, S4, U2, U3, KComplete, SIsolated, UnigraphKind, UnigraphReport,
)
from core.unigraph_engine import UnigraphEngine
from graphs.generators import random_threshold, random_unigraph, realize_component
from graphs.graph_model import Graph, SplitGraphWithPartition
from oracle.brute_force import (
    automorphisms,
    brute_is_split,
    brute_isomorphic,
    count_inequivalent,
    distinguishing_labeling,
)
from processing.text_parser import format_edge_list

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_UNIGRAPH = 1
EXIT_INVALID_INPUT = 2
EXIT_TOO_LARGE = 3

Progress = Optional[Callable[[str], None]]


@dataclass
class RunResult:
    exit_code: int
    output: str = ""
    error: str = ""


# -----------------------------
# Formatting
# -----------------------------

def _components_report(result: DecompositionResult, report: Optional[UnigraphReport]) -> List[ComponentReport]:
    if report is None:
        return [ComponentReport.build(c) for c in result.components]
    return [
        ComponentReport.build(c, classified)
        for c, classified in zip(report.decomposition.components, report.components)
    ]


def _dump(payload) -> str:
    if hasattr(payload, "model_dump"):
        return payload.model_dump_json(indent=2)
    return json.dumps(payload, indent=2)


def _component_lines(result: DecompositionResult) -> List[str]:
    return [f"  {component}" for component in result.components]


# -----------------------------
# Commands
# -----------------------------

def _dist(engine: UnigraphEngine, config: CliConfig, progress: Progress) -> str:
    seq = engine.resolve_sequence(config.degseq, config.edges)
    if config.threshold:
        dist = engine.threshold(seq)
        return _dump({"dist": dist, "threshold": True}) if config.output_format == "json" else str(dist)
    report = engine.classify(seq)
    if config.output_format == "json":
        return _dump(UnigraphReportSchema(
            components=_components_report(report.decomposition, report),
            dist=report.dist_number,
            unigraph=True,
        ))
    return str(report.dist_number)


def _decompose(engine: UnigraphEngine, config: CliConfig, progress: Progress) -> str:
    seq = engine.resolve_sequence(config.degseq, config.edges)
    canonical, compact = engine.decompose(seq)
    report = engine.try_classify(seq)
    if config.output_format == "json":
        return _dump(UnigraphReportSchema(
            canonical=None if config.compact else [ComponentReport.build(c) for c in canonical.components],
            components=_components_report(compact, report),
            dist=report.dist_number if report else None,
            unigraph=report is not None,
        ))
    lines: List[str] = []
    if not config.compact:
        lines.append("canonical (leftmost component first, bottom-to-top stack order):")
        lines.extend(_component_lines(canonical))
    lines.append("compact:")
    lines.extend(_component_lines(compact))
    lines.append(f"dist {report.dist_number}" if report else "not a unigraph")
    return "\n".join(lines)


def _classify(engine: UnigraphEngine, config: CliConfig, progress: Progress) -> str:
    seq = engine.resolve_sequence(config.degseq, config.edges)
    report = engine.classify(seq)
    if config.output_format == "json":
        return _dump(UnigraphReportSchema(
            components=_components_report(report.decomposition, report),
            dist=report.dist_number,
            unigraph=True,
        ))
    lines = [
        f"{c.kind.label():<16} {c.relative.value:<19} D={c.dist_number:<4} {component}"
        for c, component in zip(report.components, report.decomposition.components)
    ]
    lines.append(f"dist {report.dist_number}")
    return "\n".join(lines)


def _iso(engine: UnigraphEngine, config: CliConfig, progress: Progress) -> str:
    a = engine.resolve_sequence(config.degseq, config.edges)
    b = engine.resolve_sequence(config.other_degseq, config.other_edges)
    same = engine.isomorphic(a, b)
    if config.output_format == "json":
        return _dump({"isomorphic": same})
    return "isomorphic" if same else "not isomorphic"


FAMILIES: Dict[str, Callable[[List[int]], UnigraphKind]] = {
    "c5": lambda ps: C5(*ps),
    "mk2": lambda ps: MK2(*ps),
    "u2": lambda ps: U2(*ps),
    "u3": lambda ps: U3(*ps),
    "s": lambda ps: S(*ps),
    "s2": lambda ps: S2(tuple(zip(ps[0::2], ps[1::2]))),
    "s3": lambda ps: S3(*ps),
    "s4": lambda ps: S4(*ps),
    "complete": lambda ps: KComplete(*ps),
    "isolated": lambda ps: SIsolated(*ps),
}


def family_kind(name: str, params: List[int]) -> UnigraphKind:
    """Builds a family from its command-line name and integer parameters."""
    factory = FAMILIES.get(name.lower())
    if factory is None:
        raise InvalidInput(f"unknown family {name!r}; choose from {', '.join(sorted(FAMILIES))}")
    if name.lower() == "s2" and len(params) % 2:
        raise InvalidInput("s2 takes pairs: p1 q1 p2 q2 ...")
    try:
        return factory(params)
    except TypeError as e:
        raise InvalidInput(f"wrong number of parameters for {name}: {params}") from e


def _gen(engine: UnigraphEngine, config: CliConfig, progress: Progress) -> str:
    name = config.family.lower()
    seed = config.seed if config.seed is not None else settings.default_seed
    if name == "random-unigraph":
        if len(config.params) != 2:
            raise InvalidInput("random-unigraph takes COMPONENT_BUDGET SIZE_BUDGET")
        graph = random_unigraph(seed, *config.params)
    elif name == "random-threshold":
        if len(config.params) != 1:
            raise InvalidInput("random-threshold takes N")
        graph = random_threshold(seed, config.params[0])
    else:
        realized = realize_component(family_kind(name, config.params), config.relative)
        graph = realized.graph if isinstance(realized, SplitGraphWithPartition) else realized
    if config.output_format == "json":
        return _dump({"n": graph.n, "edges": [list(e) for e in graph.edges()]})
    return format_edge_list(graph).rstrip("\n")


def _oracle(engine: UnigraphEngine, config: CliConfig, progress: Progress) -> str:
    g: Graph = engine.read_edges(config.edges)
    action, cap = config.action, config.cap
    witness = None
    if action == "aut":
        perms = automorphisms(g, cap)
        result = len(perms)
        witness = [list(p.mapping) for p in perms]
        text = [f"|Aut| = {result}"] + [" ".join(map(str, m)) for m in witness]
    elif action == "dist":
        labeling = distinguishing_labeling(g, cap)
        result = labeling.color_count
        witness = list(labeling.colors)
        text = [str(result), " ".join(map(str, witness))]
    elif action == "count":
        result = count_inequivalent(g, config.colors, cap)
        text = [str(result)]
    elif action == "split":
        found = brute_is_split(g, cap)
        result = found.is_split
        if found.is_split:
            witness = {"a": sorted(found.a_set), "b": sorted(found.b_set)}
            text = ["split", f"A: {' '.join(map(str, witness['a']))}", f"B: {' '.join(map(str, witness['b']))}"]
        else:
            text = ["not split"]
    else:
        result = brute_isomorphic(g, engine.read_edges(config.other_edges), cap)
        text = ["isomorphic" if result else "not isomorphic"]
    if config.output_format == "json":
        return _dump(OracleReport(action=action, n=g.n, result=result, witness=witness))
    return "\n".join(text)


def _bench(engine: UnigraphEngine, config: CliConfig, progress: Progress) -> str:
    runner = BenchmarkRunner(seed=config.seed, repeats=config.repeats, progress=progress)
    reports = runner.run(config.sizes or None)
    if config.output_format == "json":
        return _dump([r.model_dump() for r in reports])
    return "\n".join(f"{r.n}\t{r.seconds:.4f}\t{r.dist}" for r in reports)


HANDLERS = {
    "dist": _dist,
    "decompose": _decompose,
    "classify": _classify,
    "iso": _iso,
    "gen": _gen,
    "oracle": _oracle,
    "bench": _bench,
}


def run(config: CliConfig, engine: Optional[UnigraphEngine] = None, progress: Progress = None) -> RunResult:
    """
    Runs one command.

    Returns:
        exit code 0 on success, 1 when the input is not a unigraph (or not a
        threshold graph), 2 on invalid input, 3 when the oracle cap is exceeded
    """
    engine = engine or UnigraphEngine()
    try:
        return RunResult(EXIT_OK, HANDLERS[config.command](engine, config, progress))
    except (NotUnigraph, NotThreshold) as e:
        logger.info("%s", e)
        return RunResult(EXIT_NOT_UNIGRAPH, error=str(e))
    except InvalidInput as e:
        return RunResult(EXIT_INVALID_INPUT, error=f"invalid input: {e}")
    except TooLarge as e:
        return RunResult(EXIT_TOO_LARGE, error=f"too large: {e}")
