//! JSON records emitted by the CLI: solver results with certificates,
//! protection reports, and instance serializations.

use serde::Serialize;

use crate::alliance::{protection_report, ProtectionStatus};
use crate::graph::{Graph, VertexSet};
use crate::reduce::{AnnotatedInstance, MmoChain, Roles, RootedInstance};
use crate::weighted::WeightedGraph;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Found,
    None,
    Error,
}

/// How a reported witness's minimality was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MinimalityMethod {
    /// Exhaustive connected-subset enumeration.
    #[serde(rename = "enumeration")]
    Enumeration,
    /// Connected and all members marginally protected.
    #[serde(rename = "marginal-certificate")]
    MarginalCertificate,
    /// Class-count alliance and reduced-family checks.
    #[serde(rename = "class-certificate")]
    ClassCertificate,
}

#[derive(Debug, Serialize)]
pub struct VertexProtection {
    pub vertex: usize,
    pub status: ProtectionStatus,
}

#[derive(Debug, Serialize)]
pub struct Certificate {
    pub protection: Vec<VertexProtection>,
    pub connected: bool,
    pub minimality: MinimalityMethod,
}

/// The result record every solve subcommand prints.
#[derive(Debug, Serialize)]
pub struct ResultRecord {
    pub status: Status,
    pub size: usize,
    pub witness: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    /// Winning per-class counts, for the class-based solver.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_counts: Option<Vec<usize>>,
    pub time_ms: u64,
}

impl ResultRecord {
    pub fn none(time_ms: u64) -> ResultRecord {
        ResultRecord {
            status: Status::None,
            size: 0,
            witness: Vec::new(),
            certificate: None,
            class_counts: None,
            time_ms,
        }
    }

    pub fn found(
        g: &Graph,
        witness: &VertexSet,
        method: MinimalityMethod,
        time_ms: u64,
    ) -> Result<ResultRecord> {
        let report = protection_report(g, witness)?;
        Ok(ResultRecord {
            status: Status::Found,
            size: witness.len(),
            witness: witness.members().to_vec(),
            certificate: Some(Certificate {
                protection: report
                    .statuses
                    .into_iter()
                    .map(|(vertex, status)| VertexProtection { vertex, status })
                    .collect(),
                connected: report.connected,
                minimality: method,
            }),
            class_counts: None,
            time_ms,
        })
    }
}

/// Record for `check`: the full predicate evaluation of one vertex set.
#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub alliance: bool,
    pub connected: bool,
    /// The all-marginal sufficient condition for global minimality.
    pub certificate: bool,
    pub per_vertex: Vec<VertexProtection>,
    pub locally_minimal: bool,
    /// Absent when the set exceeds the enumeration guard.
    pub globally_minimal: Option<bool>,
    pub time_ms: u64,
}

#[derive(Debug, Serialize)]
pub struct InstanceRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
    pub necessary: Vec<usize>,
    pub forbidden: Vec<usize>,
    pub k: usize,
    pub roles: Roles,
}

impl From<&AnnotatedInstance> for InstanceRecord {
    fn from(inst: &AnnotatedInstance) -> InstanceRecord {
        InstanceRecord {
            n: inst.graph.vertex_count(),
            edges: inst.graph.edges(),
            weights: None,
            necessary: inst.necessary.members().to_vec(),
            forbidden: inst.forbidden.members().to_vec(),
            k: inst.k,
            roles: inst.roles.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RootedRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub root: usize,
    pub k: usize,
    pub roles: Roles,
}

impl From<&RootedInstance> for RootedRecord {
    fn from(inst: &RootedInstance) -> RootedRecord {
        RootedRecord {
            n: inst.graph.vertex_count(),
            edges: inst.graph.edges(),
            root: inst.root,
            k: inst.k,
            roles: inst.roles.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WeightedRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub weights: Vec<u64>,
}

impl From<&WeightedGraph> for WeightedRecord {
    fn from(gw: &WeightedGraph) -> WeightedRecord {
        WeightedRecord {
            n: gw.vertex_count(),
            edges: gw.edges().iter().map(|&(u, v, _)| (u, v)).collect(),
            weights: gw.edges().iter().map(|&(_, _, w)| w).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PlainTargetRecord {
    pub n: usize,
    pub edge_count: usize,
    pub k: usize,
}

#[derive(Debug, Serialize)]
pub struct ChainRecord {
    pub source: WeightedRecord,
    pub r: u64,
    #[serde(rename = "fn")]
    pub fn_instance: InstanceRecord,
    #[serde(rename = "f")]
    pub f_instance: InstanceRecord,
    pub plain: PlainTargetRecord,
}

impl From<&MmoChain> for ChainRecord {
    fn from(chain: &MmoChain) -> ChainRecord {
        ChainRecord {
            source: WeightedRecord::from(&chain.source),
            r: chain.r,
            fn_instance: InstanceRecord::from(&chain.fn_instance),
            f_instance: InstanceRecord::from(&chain.f_instance),
            plain: PlainTargetRecord {
                n: chain.plain_graph.vertex_count(),
                edge_count: chain.plain_graph.edge_count(),
                k: chain.plain_k,
            },
        }
    }
}
