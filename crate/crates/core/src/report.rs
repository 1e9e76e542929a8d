//! Connectivity reports: the assembled answer for one graph, with witnesses
//! and provenance.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::connectivity::{CutCertificate, VertexCut};
use crate::subset::GraphParams;

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Formula,
    FlowSearch,
    Oracle,
}

/// Why an infinite super-connectivity claim is sound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum ExhaustionToken {
    /// The oracle enumerated every subset of size `1..=max_size_checked`.
    OracleExhaustion { max_size_checked: u64 },
    /// A complete graph cannot be disconnected by vertex removal.
    CompleteGraph,
}

/// Super-connectivity value: finite with witness, or proven infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KappaPrime {
    Finite(u64),
    /// Permitted only with an exhaustion proof token.
    Infinity(ExhaustionToken),
}

impl KappaPrime {
    pub fn finite(&self) -> Option<u64> {
        match self {
            KappaPrime::Finite(v) => Some(*v),
            KappaPrime::Infinity(_) => None,
        }
    }
}

/// The assembled connectivity answer for one graph.
#[derive(Debug, Clone)]
pub struct ConnectivityReport {
    pub graph: GraphParams,
    pub kappa: u64,
    pub kappa_witness: Option<VertexCut>,
    pub kappa_prime: KappaPrime,
    /// Present and super exactly when `kappa_prime` is finite.
    pub kappa_prime_witness: Option<CutCertificate>,
    pub method: Method,
    /// Present when the method's value was cross-checked against another
    /// route.
    pub agreement: Option<bool>,
    pub notes: Vec<String>,
    pub elapsed: Option<Duration>,
}

impl ConnectivityReport {
    /// Internal consistency: finite values carry a super witness of matching
    /// size.
    pub fn check_invariants(&self) -> bool {
        match (&self.kappa_prime, &self.kappa_prime_witness) {
            (KappaPrime::Finite(v), Some(cert)) => {
                cert.is_super && cert.cut.len() as u64 == *v
            }
            (KappaPrime::Finite(_), None) => false,
            (KappaPrime::Infinity(_), w) => w.is_none(),
        }
    }
}
