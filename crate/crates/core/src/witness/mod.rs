//! Explicit witness constructions for the super-connectivity of Johnson
//! graphs: the two named cut templates and the two disjoint-path families.

mod cuts;
mod lemma7;
mod lemma8;
mod paths;

pub use cuts::{cut_edge_neighborhood, cut_jn2, EdgeNeighborhoodCut};
pub use lemma7::{lemma7_paths, Lemma7Config};
pub use lemma8::{enumerate_lemma8_cases, lemma8_paths, CaseId, Lemma8Config, OmittedCase};
pub use paths::{verify_path_family, LabeledPath, PathFamily, PathVerification};
