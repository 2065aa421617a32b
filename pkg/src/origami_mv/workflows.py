# -*- coding: utf-8 -*-
"""Counting Workflows Module.

This module composes the counting oracles as LangGraph workflows: an
orchestrator-worker graph that splits the enumeration search tree by the
values of its first creases, and a parallel graph that runs validation, the
line-graph count and exhaustive enumeration side by side on one pattern and
consolidates them in a verification report.
"""

import itertools
import logging
import operator
from typing import Annotated, Any, Dict, List, Optional, Tuple, TypedDict

from langgraph.constants import Send
from langgraph.graph import END, START, StateGraph
from pydantic import BaseModel, Field

from origami_mv.crease_model import CreasePattern, MVAssignment, ValidationReport, validate
from origami_mv.enumeration import EnumerationResult, MVSearch
from origami_mv.line_graph import build_line_graph, component_count, two_colorable
from origami_mv.utils import MAX_ENUMERATION_CREASES, OrigamiMVError, format_metadata

logger = logging.getLogger(__name__)


class EnumerationState(TypedDict):
    """Type definition for the parallel enumeration state."""
    pattern: CreasePattern
    split_bits: int
    materialize: bool
    prune: bool
    prefixes: List[Tuple[int, ...]]
    # All workers write to this key in parallel
    partial_results: Annotated[list, operator.add]
    count: int
    assignments: Optional[List[MVAssignment]]


class EnumerationWorkerState(TypedDict):
    """Type definition for one subtree worker."""
    pattern: CreasePattern
    prefix: Tuple[int, ...]
    materialize: bool
    prune: bool
    partial_results: Annotated[list, operator.add]


class ParallelEnumeration:
    """
    Splits the enumeration search tree across workers and merges the results.

    The orchestrator fixes the first `split_bits` creases of the search order
    to every combination of values, one worker explores each subtree, and the
    synthesizer merges counts and assignment lists by prefix so the outcome is
    the same for any number of split bits.
    """

    def __init__(self, debug_mode: bool = False):
        """
        Initialize the ParallelEnumeration workflow.

        Args:
            debug_mode: Log search statistics at DEBUG level
        """
        self.debug_mode = debug_mode
        if debug_mode:
            logger.setLevel(logging.DEBUG)
        self.workflow = self._build_workflow()

    def _build_workflow(self) -> StateGraph:
        """
        Builds the orchestrator-worker workflow.

        Returns:
            A compiled LangGraph StateGraph representing the workflow
        """
        builder = StateGraph(EnumerationState)

        builder.add_node("orchestrator", self.orchestrator)
        builder.add_node("worker", self.worker)
        builder.add_node("synthesizer", self.synthesizer)

        builder.add_edge(START, "orchestrator")
        builder.add_conditional_edges("orchestrator", self.assign_workers, ["worker"])
        builder.add_edge("worker", "synthesizer")
        builder.add_edge("synthesizer", END)

        return builder.compile()

    def orchestrator(self, state: EnumerationState) -> Dict[str, Any]:
        """
        Plan the subtrees: every value combination of the first creases.

        Args:
            state: Workflow state holding the pattern and split size

        Returns:
            Dictionary with the prefixes, lexicographic with -1 first
        """
        bits = min(state["split_bits"], len(state["pattern"].creases))
        prefixes = list(itertools.product((-1, 1), repeat=bits))
        logger.debug("splitting the search over %d subtrees", len(prefixes))
        return {"prefixes": prefixes}

    def assign_workers(self, state: EnumerationState) -> List[Send]:
        """Send one worker per prefix."""
        return [
            Send("worker", {
                "pattern": state["pattern"],
                "prefix": prefix,
                "materialize": state["materialize"],
                "prune": state["prune"],
            })
            for prefix in state["prefixes"]
        ]

    def worker(self, state: EnumerationWorkerState) -> Dict[str, list]:
        """
        Explore one subtree.

        Args:
            state: Worker state with the pattern and the fixed prefix

        Returns:
            Dictionary with one (prefix, count, assignments) entry
        """
        search = MVSearch(state["pattern"], prune=state["prune"])
        if state["materialize"]:
            found = list(search.assignments(state["prefix"]))
            return {"partial_results": [(state["prefix"], len(found), found)]}
        return {"partial_results": [(state["prefix"], search.count(state["prefix"]), None)]}

    def synthesizer(self, state: EnumerationState) -> Dict[str, Any]:
        """
        Merge the subtree results in prefix order.

        Args:
            state: Workflow state with every worker's result

        Returns:
            Dictionary with the total count and, if requested, the assignments
        """
        results = sorted(state["partial_results"], key=lambda result: result[0])
        count = sum(result[1] for result in results)
        assignments = None
        if state["materialize"]:
            assignments = [mv for result in results for mv in result[2]]
        return {"count": count, "assignments": assignments}

    def run(
        self,
        pattern: CreasePattern,
        split_bits: int = 0,
        materialize: bool = False,
        prune: bool = True
    ) -> EnumerationResult:
        """
        Execute the parallel enumeration.

        Args:
            pattern: Crease pattern whose interior vertices all have degree 4
            split_bits: Number of leading creases to fix per worker
            materialize: Collect the assignments as well as the count
            prune: Reject partial assignments early

        Returns:
            The merged enumeration result
        """
        if split_bits < 0:
            raise ValueError("split_bits must not be negative")
        search = MVSearch(pattern, prune=prune)

        state = self.workflow.invoke({
            "pattern": pattern,
            "split_bits": split_bits,
            "materialize": materialize,
            "prune": prune,
        })
        return EnumerationResult(
            count=state["count"], assignments=state["assignments"], crease_order=search.order)


class VerificationReport(BaseModel):
    """Consolidated outcome of the independent checks on one pattern."""
    crease_count: int = Field(description="Number of creases.")
    interior_vertex_count: int = Field(description="Number of interior vertices.")
    validation_passed: bool = Field(description="Whether validate() raised no warnings or errors.")
    two_colorable: Optional[bool] = Field(default=None, description="Line graph bipartite.")
    components: Optional[int] = Field(default=None, description="Line graph components.")
    line_graph_count: Optional[int] = Field(
        default=None, description="2^components when 2-colorable, else 0.")
    enumeration_count: Optional[int] = Field(default=None, description="Exhaustive count.")
    determined: Optional[bool] = Field(
        default=None, description="Whether both counts agree, when both ran.")
    notes: List[str] = Field(default_factory=list, description="Skipped checks and warnings.")

    def to_text(self) -> str:
        def show(value):
            if value is None:
                return "n/a"
            if isinstance(value, bool):
                return str(value).lower()
            return value

        return format_metadata({
            "creases": self.crease_count,
            "interior_vertices": self.interior_vertex_count,
            "validation_passed": show(self.validation_passed),
            "two_colorable": show(self.two_colorable),
            "components": show(self.components),
            "line_graph_count": show(self.line_graph_count),
            "enumeration_count": show(self.enumeration_count),
            "determined": show(self.determined),
        }) + "".join(f"note={note}\n" for note in self.notes)


class VerificationState(TypedDict):
    """Type definition for the cross-validation state."""
    pattern: CreasePattern
    validation: ValidationReport
    line_graph: Dict[str, Any]
    enumeration: Dict[str, Any]
    notes: Annotated[list, operator.add]
    report: VerificationReport


class CrossValidation:
    """
    Runs validation, the line-graph count and enumeration concurrently on a
    pattern, then combines them into one verification report.
    """

    def __init__(self, debug_mode: bool = False):
        """
        Initialize the CrossValidation workflow.

        Args:
            debug_mode: Log each check at DEBUG level
        """
        self.debug_mode = debug_mode
        if debug_mode:
            logger.setLevel(logging.DEBUG)
        self.workflow = self._build_workflow()

    def _build_workflow(self) -> StateGraph:
        """
        Builds the parallel cross-validation workflow.

        Returns:
            A compiled LangGraph StateGraph representing the workflow
        """
        builder = StateGraph(VerificationState)

        builder.add_node("validate_pattern", self.validate_pattern)
        builder.add_node("count_line_graph", self.count_line_graph)
        builder.add_node("count_enumeration", self.count_enumeration)
        builder.add_node("aggregator", self.aggregator)

        builder.add_edge(START, "validate_pattern")
        builder.add_edge(START, "count_line_graph")
        builder.add_edge(START, "count_enumeration")
        builder.add_edge("validate_pattern", "aggregator")
        builder.add_edge("count_line_graph", "aggregator")
        builder.add_edge("count_enumeration", "aggregator")
        builder.add_edge("aggregator", END)

        return builder.compile()

    def validate_pattern(self, state: VerificationState) -> Dict[str, Any]:
        """Check the local angle conditions."""
        report = validate(state["pattern"])
        return {"validation": report, "notes": list(report.warnings) + list(report.errors)}

    def count_line_graph(self, state: VerificationState) -> Dict[str, Any]:
        """
        Count through the origami line graph.

        Args:
            state: Workflow state with the pattern

        Returns:
            Dictionary with bipartiteness, components and count, or a note
            when the line graph cannot be built
        """
        try:
            lg = build_line_graph(state["pattern"])
        except OrigamiMVError as exc:
            return {"line_graph": {}, "notes": [f"line graph skipped: {exc}"]}

        colorable = two_colorable(lg)
        components = component_count(lg)
        notes = []
        if lg.undetermined_vertices:
            notes.append(f"vertices without a Big-Little-Big pair: {lg.undetermined_vertices}")
        return {
            "line_graph": {
                "two_colorable": colorable,
                "components": components,
                "count": 2 ** components if colorable else 0,
            },
            "notes": notes,
        }

    def count_enumeration(self, state: VerificationState) -> Dict[str, Any]:
        """Count by exhaustive search when the pattern is small enough."""
        pattern = state["pattern"]
        if len(pattern.creases) > MAX_ENUMERATION_CREASES:
            return {"enumeration": {}, "notes": [
                f"enumeration skipped: {len(pattern.creases)} creases exceed {MAX_ENUMERATION_CREASES}"]}
        try:
            count = MVSearch(pattern).count()
        except OrigamiMVError as exc:
            return {"enumeration": {}, "notes": [f"enumeration skipped: {exc}"]}
        return {"enumeration": {"count": count}}

    def aggregator(self, state: VerificationState) -> Dict[str, VerificationReport]:
        """
        Combine the three checks.

        Args:
            state: Workflow state with every check's outcome

        Returns:
            Dictionary with the verification report
        """
        pattern = state["pattern"]
        line_graph = state["line_graph"]
        enumeration = state["enumeration"]

        determined = None
        if "count" in line_graph and "count" in enumeration:
            determined = line_graph["count"] == enumeration["count"]

        report = VerificationReport(
            crease_count=len(pattern.creases),
            interior_vertex_count=len(pattern.interior_vertices()),
            validation_passed=state["validation"].passed,
            two_colorable=line_graph.get("two_colorable"),
            components=line_graph.get("components"),
            line_graph_count=line_graph.get("count"),
            enumeration_count=enumeration.get("count"),
            determined=determined,
            notes=sorted(state.get("notes", [])),
        )
        return {"report": report}

    def run(self, pattern: CreasePattern) -> VerificationReport:
        """
        Execute the cross-validation on a pattern.

        Args:
            pattern: The crease pattern

        Returns:
            The verification report
        """
        state = self.workflow.invoke({"pattern": pattern})
        return state["report"]


def example_usage():
    """Demonstrate both workflows on small generated patterns."""
    from origami_mv.generators import gen_miura, gen_square_twist

    checker = CrossValidation()
    for name, pattern in [("S(1,1)", gen_square_twist(1, 1).base), ("Miura 2x2", gen_miura(2, 2).base)]:
        print(name)
        print(checker.run(pattern).to_text())

    result = ParallelEnumeration().run(gen_miura(3, 3).base, split_bits=3)
    print(f"Miura 3x3 split over 8 workers: {result.count} valid assignments")


if __name__ == "__main__":
    example_usage()
