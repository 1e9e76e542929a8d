//! JSON certificate schema for cuts and path families, plus re-verification
//! of stored certificates against a graph.

use serde::{Deserialize, Serialize};
use usg_core::connectivity::{is_super_vertex_cut, CutCertificate, VertexCut};
use usg_core::witness::{verify_path_family, LabeledPath, PathFamily, PathVerification};
use usg_core::{GraphParams, SubsetVertex, UniformSubsetGraph};

use crate::{CliError, CmdOutput};

/// A stored certificate: either a cut with its claimed component structure,
/// or a path family with its checker report.
#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Certificate {
    Cut(CutDocument),
    PathFamily(PathFamilyDocument),
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CutDocument {
    pub graph: GraphParams,
    /// Construction tag: "jn2", "edge-neighborhood" or "computed".
    pub kind: String,
    /// The removed vertices as sorted subsets.
    pub cut: Vec<Vec<u32>>,
    pub size: u64,
    pub is_super: bool,
    pub min_component_order: u64,
    /// Components of the remainder, as lists of subsets.
    pub components: Vec<Vec<Vec<u32>>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PathFamilyDocument {
    pub graph: GraphParams,
    pub lemma: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<u32>,
    pub required_entry: Option<u32>,
    pub sources: Vec<Vec<u32>>,
    pub targets: Vec<Vec<u32>>,
    pub forbidden: Vec<Vec<u32>>,
    pub paths: Vec<PathDocument>,
    pub omitted: Vec<OmittedDocument>,
    pub verification: PathVerification,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PathDocument {
    pub label: String,
    pub vertices: Vec<Vec<u32>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OmittedDocument {
    pub label: String,
    pub reason: String,
}

pub fn subset_of(g: &UniformSubsetGraph, rank: u32) -> Vec<u32> {
    g.vertex(rank).entries()
}

pub fn rank_of_entries(g: &UniformSubsetGraph, entries: &[u32]) -> Result<u32, CliError> {
    let v = SubsetVertex::from_entries(entries, g.params().n)
        .map_err(|e| CliError::invalid(format!("bad subset {entries:?}: {e}")))?;
    g.rank_of(&v)
        .map_err(|e| CliError::invalid(format!("subset {entries:?} is not a vertex: {e}")))
}

pub fn cut_document(
    g: &UniformSubsetGraph,
    kind: &str,
    cert: &CutCertificate,
) -> CutDocument {
    CutDocument {
        graph: *g.params(),
        kind: kind.to_string(),
        cut: cert.cut.ranks().iter().map(|&r| subset_of(g, r)).collect(),
        size: cert.cut.len() as u64,
        is_super: cert.is_super,
        min_component_order: cert.min_component_order,
        components: cert
            .components
            .iter()
            .map(|c| c.iter().map(|&r| subset_of(g, r)).collect())
            .collect(),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn path_family_document(
    g: &UniformSubsetGraph,
    lemma: u8,
    case: Option<String>,
    params: (Option<u32>, Option<u32>, Option<u32>),
    fam: &PathFamily,
    sources: &[u32],
    targets: &[u32],
    verification: PathVerification,
) -> PathFamilyDocument {
    PathFamilyDocument {
        graph: *g.params(),
        lemma,
        case,
        alpha: params.0,
        beta: params.1,
        gamma: params.2,
        required_entry: fam.required_entry,
        sources: sources.iter().map(|&r| subset_of(g, r)).collect(),
        targets: targets.iter().map(|&r| subset_of(g, r)).collect(),
        forbidden: fam
            .forbidden_vertices
            .iter()
            .map(|&r| subset_of(g, r))
            .collect(),
        paths: fam
            .paths
            .iter()
            .map(|p| PathDocument {
                label: p.label.clone(),
                vertices: p.ranks.iter().map(|&r| subset_of(g, r)).collect(),
            })
            .collect(),
        omitted: fam
            .omitted
            .iter()
            .map(|o| OmittedDocument {
                label: o.label.clone(),
                reason: o.reason.clone(),
            })
            .collect(),
        verification,
    }
}

pub fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("certificate serializes");
    s.push('\n');
    s
}

/// Re-checks a stored certificate against the graph. Valid means every
/// claimed property reproduces exactly.
pub fn verify_certificate(g: &UniformSubsetGraph, cert: &Certificate) -> Result<CmdOutput, CliError> {
    match cert {
        Certificate::Cut(doc) => verify_cut(g, doc),
        Certificate::PathFamily(doc) => verify_paths(g, doc),
    }
}

fn verify_cut(g: &UniformSubsetGraph, doc: &CutDocument) -> Result<CmdOutput, CliError> {
    if doc.graph != *g.params() {
        return Err(CliError::invalid(format!(
            "certificate is for G({},{},{}), graph file is G({},{},{})",
            doc.graph.n,
            doc.graph.k,
            doc.graph.t,
            g.params().n,
            g.params().k,
            g.params().t
        )));
    }
    let ranks: Vec<u32> = doc
        .cut
        .iter()
        .map(|s| rank_of_entries(g, s))
        .collect::<Result<_, _>>()?;
    let cut = VertexCut::new(g, ranks).map_err(|e| CliError::invalid(e.to_string()))?;
    let recomputed = is_super_vertex_cut(g, &cut).map_err(|e| CliError::invalid(e.to_string()))?;
    let mut violations = Vec::new();
    if doc.size != cut.len() as u64 {
        violations.push(format!(
            "size: stated {}, cut has {} vertices",
            doc.size,
            cut.len()
        ));
    }
    if doc.is_super != recomputed.is_super {
        violations.push(format!(
            "is_super: stated {}, recomputed {}",
            doc.is_super, recomputed.is_super
        ));
    }
    if doc.min_component_order != recomputed.min_component_order {
        violations.push(format!(
            "min_component_order: stated {}, recomputed {}",
            doc.min_component_order, recomputed.min_component_order
        ));
    }
    let recomputed_components: Vec<Vec<Vec<u32>>> = recomputed
        .components
        .iter()
        .map(|c| c.iter().map(|&r| subset_of(g, r)).collect())
        .collect();
    if doc.components != recomputed_components {
        violations.push("components: stored partition does not match".into());
    }
    if violations.is_empty() {
        Ok(CmdOutput::ok(format!(
            "valid: cut of size {} (is_super = {})\n",
            doc.size, recomputed.is_super
        )))
    } else {
        Err(CliError::invalid(format!(
            "invalid certificate: {}",
            violations.join("; ")
        )))
    }
}

fn verify_paths(g: &UniformSubsetGraph, doc: &PathFamilyDocument) -> Result<CmdOutput, CliError> {
    if doc.graph != *g.params() {
        return Err(CliError::invalid(
            "certificate graph parameters do not match the graph file",
        ));
    }
    let to_ranks = |subsets: &Vec<Vec<u32>>| -> Result<Vec<u32>, CliError> {
        subsets.iter().map(|s| rank_of_entries(g, s)).collect()
    };
    let fam = PathFamily {
        paths: doc
            .paths
            .iter()
            .map(|p| {
                Ok(LabeledPath {
                    label: p.label.clone(),
                    ranks: to_ranks(&p.vertices)?,
                })
            })
            .collect::<Result<_, CliError>>()?,
        required_entry: doc.required_entry,
        forbidden_vertices: {
            let mut f = to_ranks(&doc.forbidden)?;
            f.sort_unstable();
            f
        },
        omitted: Vec::new(),
    };
    let sources = to_ranks(&doc.sources)?;
    let targets = to_ranks(&doc.targets)?;
    let rep = verify_path_family(g, &fam, &sources, &targets);
    if rep.pass {
        Ok(CmdOutput::ok(format!(
            "valid: {} internally disjoint paths\n",
            fam.paths.len()
        )))
    } else {
        Err(CliError::invalid(format!(
            "invalid certificate: {}",
            rep.failures.join("; ")
        )))
    }
}
