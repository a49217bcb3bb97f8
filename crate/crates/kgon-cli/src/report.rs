//! JSON document shapes emitted on standard output, one per subcommand.
//! Struct field order is the serialization order, so output keys are stable.

use kgon::{
    ConvexPolygon, DsRun, DsVariant, IndexTuple, PointerAdvances, Solution, Strictness, TraceStep,
    TwiceArea,
};
use serde::Serialize;

use crate::polyfile::ParsedPolygon;

/// Input echo: the validated polygon and whether it was reversed.
#[derive(Serialize)]
pub struct PolygonEcho {
    pub n: usize,
    pub reversed: bool,
    pub vertices: ConvexPolygon,
}

impl From<&ParsedPolygon> for PolygonEcho {
    fn from(parsed: &ParsedPolygon) -> Self {
        PolygonEcho {
            n: parsed.polygon.len(),
            reversed: parsed.reversed,
            vertices: parsed.polygon.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct SolveReport {
    pub command: &'static str,
    pub input: PolygonEcho,
    pub algo: &'static str,
    pub k: usize,
    pub solution: Solution,
}

#[derive(Serialize)]
pub struct DsRunSummary {
    pub root: usize,
    pub best: IndexTuple,
    pub best_area: TwiceArea,
    pub advances: PointerAdvances,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStep>>,
}

impl DsRunSummary {
    pub fn new(run: DsRun, include_trace: bool) -> Self {
        DsRunSummary {
            root: run.root,
            best: run.best,
            best_area: run.best_area,
            advances: run.advances,
            trace: include_trace.then_some(run.trace),
        }
    }
}

#[derive(Serialize)]
pub struct DsReport {
    pub command: &'static str,
    pub input: PolygonEcho,
    pub variant: DsVariant,
    pub runs: Vec<DsRunSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub overall_best: Option<Solution>,
}

#[derive(Serialize)]
pub struct StabilityTupleReport {
    pub command: &'static str,
    pub input: PolygonEcho,
    pub strictness: Strictness,
    pub indices: IndexTuple,
    pub area: TwiceArea,
    pub per_position: Vec<bool>,
    pub stable_count: usize,
    pub k_stable: bool,
}

#[derive(Serialize)]
pub struct StabilityEnumReport {
    pub command: &'static str,
    pub input: PolygonEcho,
    pub strictness: Strictness,
    pub k: usize,
    pub count: usize,
    pub stable: Vec<IndexTuple>,
}

#[derive(Serialize)]
pub struct RenderReport {
    pub command: &'static str,
    pub out: String,
    pub overlays: Vec<IndexTuple>,
}
