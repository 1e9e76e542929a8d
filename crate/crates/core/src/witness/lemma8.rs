//! The second disjoint-path family witness (the lemma8 builder): given
//! vertices `u`, `v` at Hamming distance two with a common neighbour
//! `x = {1, ..., k}`, companions `u_bar ~ u` and `v_bar ~ v`, and a required
//! entry `r` absent from all four, the case analysis on which entries of
//! `{z_3, ..., z_k}` survive in the companions yields at least `2k - 1`
//! internally disjoint paths from `{u, u_bar}` to `{v, v_bar}` whose internal
//! vertices all contain `r`.
//!
//! Canonically `u = x_1^{k+1}`, `v = x_2^{k+2}`, `r = n`, and fresh entries
//! are `k+3` and `k+4`; sub-cases whose fresh entries do not exist at the
//! given `n` are flagged as omitted, never fabricated.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::cuts::validate_relabel;
use super::paths::{LabeledPath, PathFamily};
use crate::error::Error;
use crate::graph::UniformSubsetGraph;
use crate::subset::SubsetVertex;
use crate::Result;

/// Case of the path construction, by which entries of `{z_3, ..., z_k}` are
/// missing from the companions: none (I), one from the u-side only (II), the
/// same one from both (III), different ones (IV, needs `k >= 4`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseId {
    I,
    II,
    IIIA,
    IIIB,
    IVA,
    IVB,
    IVC,
}

impl CaseId {
    pub const ALL: [CaseId; 7] = [
        CaseId::I,
        CaseId::II,
        CaseId::IIIA,
        CaseId::IIIB,
        CaseId::IVA,
        CaseId::IVB,
        CaseId::IVC,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseId::I => "I",
            CaseId::II => "II",
            CaseId::IIIA => "III-A",
            CaseId::IIIB => "III-B",
            CaseId::IVA => "IV-A",
            CaseId::IVB => "IV-B",
            CaseId::IVC => "IV-C",
        }
    }

    pub fn parse(s: &str) -> Option<CaseId> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One realisable configuration. The sub-parameters are template-level
/// entries (before any relabelling): `alpha`, `beta`, `gamma` take values in
/// `{1, 2, k+1, k+2, k+3, k+4}` as each case allows.
///
/// Both companions are taken to lie inside their respective sides
/// (`u_bar` with `u`, `v_bar` with `v`), so validation rejects any
/// configuration with an edge across the sides.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Lemma8Config {
    pub n: u32,
    pub k: u32,
    /// The required entry (canonically `n`, relabelled if a permutation is
    /// in force): every internal path vertex contains it, no endpoint does.
    pub r: u32,
    pub x: SubsetVertex,
    pub u: SubsetVertex,
    pub v: SubsetVertex,
    pub u_bar: SubsetVertex,
    pub v_bar: SubsetVertex,
    pub case_id: CaseId,
    pub alpha: Option<u32>,
    pub beta: Option<u32>,
    pub gamma: Option<u32>,
    relabel: Option<Vec<u32>>,
}

/// A sub-case the templates cannot realise at the given parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OmittedCase {
    pub case_id: CaseId,
    pub alpha: Option<u32>,
    pub beta: Option<u32>,
    pub gamma: Option<u32>,
    pub reason: String,
}

type Spec = (Vec<u32>, Vec<u32>);

fn resolve(base: &SubsetVertex, spec: &Spec, n: u32, perm: Option<&[u32]>) -> Result<SubsetVertex> {
    let v = base.multi_swap(&spec.0, &spec.1, n)?;
    match perm {
        None => Ok(v),
        Some(p) => {
            let mapped: Vec<u32> = v.entries().iter().map(|&e| p[(e - 1) as usize]).collect();
            SubsetVertex::from_entries(&mapped, n)
        }
    }
}

impl Lemma8Config {
    /// Builds and validates one configuration. `alpha`, `beta`, `gamma` must
    /// be template-level entries allowed by the case.
    pub fn new(
        g: &UniformSubsetGraph,
        case_id: CaseId,
        alpha: Option<u32>,
        beta: Option<u32>,
        gamma: Option<u32>,
        relabel: Option<&[u32]>,
    ) -> Result<Self> {
        let p = *g.params();
        if !p.is_johnson() {
            return Err(Error::Unsupported(
                "the path families apply to Johnson graphs".into(),
            ));
        }
        let (n, k) = (p.n, p.k);
        if k < 3 || n < k + 3 {
            return Err(Error::Unsupported(format!(
                "the family needs k >= 3 and n >= k+3, got J({n},{k})"
            )));
        }
        validate_relabel(n, relabel)?;
        if matches!(case_id, CaseId::IVA | CaseId::IVB | CaseId::IVC) && k < 4 {
            return Err(Error::InvalidConfig(format!(
                "case {case_id} needs distinct entries z_3, z_4, impossible at k = 3"
            )));
        }
        let fresh_ok = |e: u32| e < n;
        let (f1, f2) = (k + 3, k + 4);

        // Companion templates per case, driven by the sub-parameters.
        let (ubar_spec, vbar_spec): (Spec, Spec) = match case_id {
            CaseId::I => {
                let b = expect_param(beta, &[2, k + 1], "beta")?;
                let a = expect_param(alpha, &[1, k + 2], "alpha")?;
                require(gamma.is_none(), "case I takes no gamma")?;
                (
                    (vec![1, 2], vec![b, f1]),
                    (vec![1, 2], vec![a, f2]),
                )
            }
            CaseId::II => {
                let b = expect_param(beta, &[1, k + 2, f1], "beta")?;
                let gm = expect_param(gamma, &[1, k + 2], "gamma")?;
                let a = expect_param(alpha, &[f1, f2], "alpha")?;
                (
                    (vec![1, 3], vec![k + 1, b]),
                    (vec![1, 2], vec![gm, a]),
                )
            }
            CaseId::IIIA => {
                let b = expect_param(beta, &[1, k + 2], "beta")?;
                require(alpha.is_none() && gamma.is_none(), "case III-A takes only beta")?;
                (
                    (vec![1, 3], vec![k + 1, b]),
                    (vec![2, 3], vec![k + 2, f1]),
                )
            }
            CaseId::IIIB => {
                let a = expect_param(alpha, &[2, k + 1, f1, f2], "alpha")?;
                require(beta.is_none() && gamma.is_none(), "case III-B takes only alpha")?;
                (
                    (vec![1, 3], vec![k + 1, f1]),
                    (vec![2, 3], vec![k + 2, a]),
                )
            }
            CaseId::IVA => {
                let b = expect_param(beta, &[1, k + 2], "beta")?;
                require(alpha.is_none() && gamma.is_none(), "case IV-A takes only beta")?;
                (
                    (vec![1, 3], vec![k + 1, b]),
                    (vec![2, 4], vec![k + 2, f1]),
                )
            }
            CaseId::IVB => {
                let b = expect_param(beta, &[1, k + 2], "beta")?;
                let a = expect_param(alpha, &[2, k + 1], "alpha")?;
                require(gamma.is_none(), "case IV-B takes no gamma")?;
                (
                    (vec![1, 3], vec![k + 1, b]),
                    (vec![2, 4], vec![k + 2, a]),
                )
            }
            CaseId::IVC => {
                let a = expect_param(alpha, &[2, k + 1, f1, f2], "alpha")?;
                require(beta.is_none() && gamma.is_none(), "case IV-C takes only alpha")?;
                (
                    (vec![1, 3], vec![k + 1, f1]),
                    (vec![2, 4], vec![k + 2, a]),
                )
            }
        };
        for &e in ubar_spec.1.iter().chain(&vbar_spec.1) {
            if e >= f1 && !fresh_ok(e) {
                return Err(Error::InvalidConfig(format!(
                    "requires fresh entry z_{e}, but entries stop at z_{} (r = z_{n} is reserved)",
                    n - 1
                )));
            }
        }

        let base = SubsetVertex::from_entries(&(1..=k).collect::<Vec<_>>(), n)?;
        let canon = |spec: &Spec| base.multi_swap(&spec.0, &spec.1, n);
        let u_c = canon(&(vec![1], vec![k + 1]))?;
        let v_c = canon(&(vec![2], vec![k + 2]))?;
        let ubar_c = canon(&ubar_spec)?;
        let vbar_c = canon(&vbar_spec)?;

        // Consistency with the hypothesis: companions adjacent to their
        // side, no edges across sides, all five vertices distinct, the
        // required entry absent everywhere.
        let all = [base, u_c, v_c, ubar_c, vbar_c];
        for (i, a) in all.iter().enumerate() {
            if a.contains(n) {
                return Err(Error::InvalidConfig("entry r appears in a base vertex".into()));
            }
            for b in &all[i + 1..] {
                if a == b {
                    return Err(Error::InvalidConfig(format!(
                        "degenerate configuration: {a} coincides with {b}"
                    )));
                }
            }
        }
        let adj = |a: &SubsetVertex, b: &SubsetVertex| a.intersection_size(b) == k - 1;
        require(adj(&u_c, &ubar_c), "u_bar must be adjacent to u")?;
        require(adj(&v_c, &vbar_c), "v_bar must be adjacent to v")?;
        for (a, b, what) in [
            (&u_c, &v_c, "u, v"),
            (&u_c, &vbar_c, "u, v_bar"),
            (&ubar_c, &v_c, "u_bar, v"),
            (&ubar_c, &vbar_c, "u_bar, v_bar"),
        ] {
            if adj(a, b) {
                return Err(Error::InvalidConfig(format!(
                    "sides are not separated: {what} are adjacent"
                )));
            }
        }
        // The entries z_3..z_k present in the companions must match the case.
        let core_missing = |w: &SubsetVertex| -> Vec<u32> {
            (3..=k).filter(|&e| !w.contains(e)).collect()
        };
        let (mu, mv) = (core_missing(&ubar_c), core_missing(&vbar_c));
        let expected = match case_id {
            CaseId::I => (vec![], vec![]),
            CaseId::II => (vec![3], vec![]),
            CaseId::IIIA | CaseId::IIIB => (vec![3], vec![3]),
            CaseId::IVA | CaseId::IVB | CaseId::IVC => (vec![3], vec![4]),
        };
        if (mu, mv) != expected {
            return Err(Error::InvalidConfig(format!(
                "companions do not realise case {case_id}"
            )));
        }

        let cfg = Lemma8Config {
            n,
            k,
            r: relabel.map_or(n, |p| p[(n - 1) as usize]),
            x: resolve(&base, &(vec![], vec![]), n, relabel)?,
            u: resolve(&base, &(vec![1], vec![k + 1]), n, relabel)?,
            v: resolve(&base, &(vec![2], vec![k + 2]), n, relabel)?,
            u_bar: resolve(&base, &ubar_spec, n, relabel)?,
            v_bar: resolve(&base, &vbar_spec, n, relabel)?,
            case_id,
            alpha,
            beta,
            gamma,
            relabel: relabel.map(|p| p.to_vec()),
        };
        // The graph must contain all of them (range sanity).
        for w in [&cfg.x, &cfg.u, &cfg.v, &cfg.u_bar, &cfg.v_bar] {
            g.rank_of(w)?;
        }
        Ok(cfg)
    }

    /// Required number of internally disjoint paths: `2k - 1`.
    pub fn min_required(&self) -> u64 {
        2 * self.k as u64 - 1
    }

    pub fn sources(&self, g: &UniformSubsetGraph) -> Result<Vec<u32>> {
        Ok(vec![g.rank_of(&self.u)?, g.rank_of(&self.u_bar)?])
    }

    pub fn targets(&self, g: &UniformSubsetGraph) -> Result<Vec<u32>> {
        Ok(vec![g.rank_of(&self.v)?, g.rank_of(&self.v_bar)?])
    }
}

fn expect_param(got: Option<u32>, allowed: &[u32], name: &str) -> Result<u32> {
    match got {
        Some(v) if allowed.contains(&v) => Ok(v),
        Some(v) => Err(Error::InvalidConfig(format!(
            "{name} = {v} not in {allowed:?}"
        ))),
        None => Err(Error::InvalidConfig(format!(
            "{name} required, one of {allowed:?}"
        ))),
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidConfig(msg.into()))
    }
}

/// Enumerates one canonical configuration per realisable (case,
/// sub-parameter) combination, with the proof-side canonical choices
/// (`u = x_1^{k+1}`, `v = x_2^{k+2}`, fresh entries `k+3`, `k+4` where
/// available). Unrealisable combinations are flagged, not fabricated.
pub fn enumerate_lemma8_cases(
    g: &UniformSubsetGraph,
    relabel: Option<&[u32]>,
) -> Result<(Vec<Lemma8Config>, Vec<OmittedCase>)> {
    let p = *g.params();
    if !p.is_johnson() || p.k < 3 || p.n < p.k + 3 {
        return Err(Error::Unsupported(format!(
            "case enumeration needs a Johnson graph with k >= 3 and n >= k+3, got G({},{},{})",
            p.n, p.k, p.t
        )));
    }
    let k = p.k;
    let (f1, f2) = (k + 3, k + 4);
    type Combo = (CaseId, Option<u32>, Option<u32>, Option<u32>);
    let mut combos: Vec<Combo> = Vec::new();
    for b in [2, k + 1] {
        for a in [1, k + 2] {
            combos.push((CaseId::I, Some(a), Some(b), None));
        }
    }
    for b in [1, k + 2, f1] {
        for gm in [1, k + 2] {
            for a in [f1, f2] {
                combos.push((CaseId::II, Some(a), Some(b), Some(gm)));
            }
        }
    }
    for b in [1, k + 2] {
        combos.push((CaseId::IIIA, None, Some(b), None));
    }
    for a in [2, k + 1, f1, f2] {
        combos.push((CaseId::IIIB, Some(a), None, None));
    }
    for b in [1, k + 2] {
        combos.push((CaseId::IVA, None, Some(b), None));
    }
    for b in [1, k + 2] {
        for a in [2, k + 1] {
            combos.push((CaseId::IVB, Some(a), Some(b), None));
        }
    }
    for a in [2, k + 1, f1, f2] {
        combos.push((CaseId::IVC, Some(a), None, None));
    }

    let mut configs = Vec::new();
    let mut omitted = Vec::new();
    for (case_id, a, b, gm) in combos {
        match Lemma8Config::new(g, case_id, a, b, gm, relabel) {
            Ok(cfg) => configs.push(cfg),
            Err(Error::InvalidConfig(reason)) => omitted.push(OmittedCase {
                case_id,
                alpha: a,
                beta: b,
                gamma: gm,
                reason,
            }),
            Err(e) => return Err(e),
        }
    }
    Ok((configs, omitted))
}

/// Builds the case's path family. All internal vertices contain the required
/// entry; the checker validates adjacency and disjointness.
pub fn lemma8_paths(g: &UniformSubsetGraph, cfg: &Lemma8Config) -> Result<PathFamily> {
    let (n, k) = (cfg.n, cfg.k);
    let (f1, f2) = (k + 3, k + 4);
    let base = SubsetVertex::from_entries(&(1..=k).collect::<Vec<_>>(), n)?;
    let perm = cfg.relabel.as_deref();

    let u: Spec = (vec![1], vec![k + 1]);
    let v: Spec = (vec![2], vec![k + 2]);
    let ubar: Spec = spec_of(&cfg.u_bar, &base, cfg)?;
    let vbar: Spec = spec_of(&cfg.v_bar, &base, cfg)?;

    let p_path = |j: u32| -> (String, Vec<Spec>) {
        (
            format!("P_{j}"),
            vec![
                u.clone(),
                (vec![1, j], vec![k + 1, n]),
                (vec![2, j], vec![k + 1, n]),
                (vec![2, j], vec![k + 2, n]),
                v.clone(),
            ],
        )
    };
    let t6 = || -> (String, Vec<Spec>) {
        (
            "T_6".into(),
            vec![
                u.clone(),
                (vec![1, 3], vec![k + 1, n]),
                (vec![1, 3], vec![k + 2, n]),
                (vec![2, 3], vec![k + 2, n]),
                v.clone(),
            ],
        )
    };
    let t21 = || -> (String, Vec<Spec>) {
        (
            "T_21".into(),
            vec![
                u.clone(),
                (vec![1, 4], vec![k + 1, n]),
                (vec![1, 4], vec![k + 2, n]),
                (vec![2, 4], vec![k + 2, n]),
                v.clone(),
            ],
        )
    };

    let mut templates: Vec<(String, Vec<Spec>)> = Vec::new();
    for j in 5..=k {
        templates.push(p_path(j));
    }
    templates.push((
        "T_1".into(),
        vec![
            u.clone(),
            (vec![1], vec![n]),
            (vec![1, 2], vec![k + 2, n]),
            v.clone(),
        ],
    ));
    templates.push((
        "T_2".into(),
        vec![
            u.clone(),
            (vec![1, 2], vec![k + 1, n]),
            (vec![2], vec![n]),
            v.clone(),
        ],
    ));

    match cfg.case_id {
        CaseId::I => {
            let b = cfg.beta.unwrap();
            let a = cfg.alpha.unwrap();
            for i in 3..=k {
                templates.push((
                    format!("Q_{i}"),
                    vec![
                        ubar.clone(),
                        (vec![1, 2, i], vec![b, f1, n]),
                        (vec![1, 2, i], vec![a, f1, n]),
                        (vec![1, 2, i], vec![a, f2, n]),
                        vbar.clone(),
                    ],
                ));
            }
            templates.push((
                "T_3".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 2], vec![f1, n]),
                    (vec![1, 2], vec![f2, n]),
                    vbar.clone(),
                ],
            ));
            templates.push(p_path(3));
            if k >= 4 {
                templates.push(p_path(4));
            }
        }
        CaseId::II => {
            let b = cfg.beta.unwrap();
            let gm = cfg.gamma.unwrap();
            let a = cfg.alpha.unwrap();
            for i in 4..=k {
                templates.push((
                    format!("Q_{i}"),
                    vec![
                        ubar.clone(),
                        (vec![1, 3, i], vec![k + 1, b, n]),
                        (vec![1, 3, i], vec![k + 1, a, n]),
                        (vec![1, 2, 3, i], vec![k + 1, a, gm, n]),
                        (vec![1, 2, i], vec![a, gm, n]),
                        vbar.clone(),
                    ],
                ));
            }
            templates.push((
                "T_4".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 3], vec![b, n]),
                    (vec![1, 3], vec![a, n]),
                    (vec![1, 2, 3], vec![a, gm, n]),
                    vbar.clone(),
                ],
            ));
            templates.push((
                "T_5".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 2, 3], vec![k + 1, b, n]),
                    (vec![1, 2, 3], vec![k + 1, a, n]),
                    (vec![1, 2], vec![a, n]),
                    vbar.clone(),
                ],
            ));
            if b == 1 {
                if k >= 4 {
                    templates.push(p_path(4));
                }
                templates.push(t6());
            } else {
                templates.push(p_path(3));
                if k >= 4 {
                    templates.push(p_path(4));
                }
            }
        }
        CaseId::IIIA => {
            let b = cfg.beta.unwrap();
            for i in 4..=k {
                templates.push((
                    format!("Q_{i}"),
                    vec![
                        ubar.clone(),
                        (vec![1, 3, i], vec![k + 1, b, n]),
                        (vec![1, 2, 3, i], vec![k + 1, f1, b, n]),
                        (vec![2, 3, i], vec![k + 2, f1, n]),
                        vbar.clone(),
                    ],
                ));
            }
            templates.push((
                "T_7".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 3], vec![b, n]),
                    (vec![1, 3], vec![f1, n]),
                    (vec![1, 2, 3], vec![k + 2, f1, n]),
                    vbar.clone(),
                ],
            ));
            templates.push((
                "T_8".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 2, 3], vec![k + 1, b, n]),
                    (vec![1, 2, 3], vec![k + 1, f1, n]),
                    (vec![2, 3], vec![f1, n]),
                    vbar.clone(),
                ],
            ));
            if b == 1 {
                if k >= 4 {
                    templates.push(p_path(4));
                }
                templates.push(t6());
            } else {
                templates.push(p_path(3));
                if k >= 4 {
                    templates.push(p_path(4));
                }
            }
        }
        CaseId::IIIB => {
            let a = cfg.alpha.unwrap();
            for i in 4..=k {
                templates.push((
                    format!("Q_{i}"),
                    vec![
                        ubar.clone(),
                        (vec![1, 3, i], vec![k + 1, f1, n]),
                        (vec![3, i], vec![f1, n]),
                        (vec![2, 3, i], vec![k + 2, f1, n]),
                        (vec![2, 3, i], vec![k + 2, a, n]),
                        vbar.clone(),
                    ],
                ));
            }
            if a == f1 || a == f2 {
                templates.push(p_path(3));
                if k >= 4 {
                    templates.push(p_path(4));
                }
                templates.push((
                    "T_9".into(),
                    vec![
                        ubar.clone(),
                        (vec![1, 3], vec![f1, n]),
                        (vec![1, 3], vec![a, n]),
                        (vec![1, 2, 3], vec![k + 2, a, n]),
                        vbar.clone(),
                    ],
                ));
                templates.push((
                    "T_10".into(),
                    vec![
                        ubar.clone(),
                        (vec![1, 2, 3], vec![k + 1, f1, n]),
                        (vec![1, 2, 3], vec![k + 1, a, n]),
                        (vec![2, 3], vec![a, n]),
                        vbar.clone(),
                    ],
                ));
            } else {
                let abar = if a == 2 { k + 1 } else { 2 };
                if k >= 4 {
                    templates.push(p_path(4));
                }
                templates.push((
                    "T_11".into(),
                    vec![
                        ubar.clone(),
                        (vec![1, 2, 3], vec![f1, a, n]),
                        (vec![1, 2, 3], vec![k + 2, a, n]),
                        vbar.clone(),
                    ],
                ));
                templates.push((
                    "T_12".into(),
                    vec![
                        ubar.clone(),
                        (vec![1, 2, 3], vec![f1, abar, n]),
                        (vec![2, 3], vec![f1, n]),
                        (vec![2, 3], vec![a, n]),
                        vbar.clone(),
                    ],
                ));
                templates.push((
                    "T_13".into(),
                    vec![
                        u.clone(),
                        (vec![1, 3], vec![k + 1, n]),
                        (vec![2, 3], vec![abar, n]),
                        (vec![2, 3], vec![k + 2, n]),
                        v.clone(),
                    ],
                ));
            }
        }
        CaseId::IVA => {
            let b = cfg.beta.unwrap();
            for i in 5..=k {
                templates.push((
                    format!("Q_{i}"),
                    vec![
                        ubar.clone(),
                        (vec![1, 3, i], vec![k + 1, b, n]),
                        (vec![1, 2, 3, i], vec![k + 1, f1, b, n]),
                        (vec![1, 2, i], vec![f1, b, n]),
                        (vec![2, 4, i], vec![k + 2, f1, n]),
                        vbar.clone(),
                    ],
                ));
            }
            templates.push((
                "T_14".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 3, 4], vec![k + 1, b, n]),
                    (vec![1, 3, 4], vec![f1, b, n]),
                    (vec![2, 3, 4], vec![k + 2, f1, n]),
                    vbar.clone(),
                ],
            ));
            templates.push((
                "T_15".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 3], vec![b, n]),
                    (vec![3], vec![n]),
                    (vec![4], vec![n]),
                    (vec![2, 4], vec![f1, n]),
                    vbar.clone(),
                ],
            ));
            templates.push((
                "T_16".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 2, 3], vec![k + 1, b, n]),
                    (vec![1, 2, 3], vec![f1, b, n]),
                    (vec![1, 2, 3], vec![k + 2, f1, n]),
                    (vec![1, 2, 4], vec![k + 2, f1, n]),
                    vbar.clone(),
                ],
            ));
            if b == 1 {
                templates.push(p_path(4));
                templates.push(t6());
            } else {
                templates.push(p_path(3));
                templates.push(p_path(4));
            }
        }
        CaseId::IVB => {
            let b = cfg.beta.unwrap();
            let a = cfg.alpha.unwrap();
            for i in 5..=k {
                templates.push((
                    format!("Q_{i}"),
                    vec![
                        ubar.clone(),
                        (vec![1, 3, i], vec![k + 1, b, n]),
                        (vec![1, 3, i], vec![k + 1, k + 2, n]),
                        (vec![1, 4, i], vec![k + 1, k + 2, n]),
                        (vec![2, 4, i], vec![k + 2, a, n]),
                        vbar.clone(),
                    ],
                ));
            }
            templates.push((
                "T_17".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 3, 4], vec![k + 1, b, n]),
                    (vec![1, 3, 4], vec![k + 1, k + 2, n]),
                    (vec![2, 3, 4], vec![k + 2, a, n]),
                    vbar.clone(),
                ],
            ));
            templates.push((
                "T_18".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 2, 3], vec![k + 1, b, n]),
                    (vec![1, 2, 3], vec![k + 1, k + 2, n]),
                    (vec![1, 2, 4], vec![k + 1, k + 2, n]),
                    (vec![1, 2, 4], vec![k + 2, a, n]),
                    vbar.clone(),
                ],
            ));
            templates.push((
                "T_19".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 3], vec![b, n]),
                    (vec![3], vec![n]),
                    (vec![4], vec![n]),
                    (vec![2, 4], vec![a, n]),
                    vbar.clone(),
                ],
            ));
            if a == 2 {
                // The omega of T_20 depends on beta: reusing the u-side
                // entry pattern of the other branch breaks disjointness.
                let omega: Spec = if b == 1 {
                    (vec![1, 3], vec![k + 2, n])
                } else {
                    (vec![2, 3], vec![k + 1, n])
                };
                templates.push(p_path(4));
                templates.push((
                    "T_20".into(),
                    vec![
                        u.clone(),
                        (vec![1, 3], vec![k + 1, n]),
                        omega,
                        (vec![2, 3], vec![k + 2, n]),
                        v.clone(),
                    ],
                ));
            } else if b == k + 2 {
                templates.push(p_path(3));
                templates.push(t21());
            } else {
                templates.push(t6());
                templates.push(t21());
            }
        }
        CaseId::IVC => {
            let a = cfg.alpha.unwrap();
            for i in 5..=k {
                templates.push((
                    format!("Q_{i}"),
                    vec![
                        ubar.clone(),
                        (vec![1, 3, i], vec![k + 1, f1, n]),
                        (vec![1, 3, i], vec![k + 2, f1, n]),
                        (vec![1, 4, i], vec![k + 2, f1, n]),
                        (vec![2, 4, i], vec![k + 2, f1, n]),
                        (vec![2, 4, i], vec![k + 2, a, n]),
                        vbar.clone(),
                    ],
                ));
            }
            templates.push((
                "T_22".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 3], vec![f1, n]),
                    (vec![2, 3], vec![f1, n]),
                    (vec![2, 3], vec![a, n]),
                    (vec![2, 4], vec![a, n]),
                    vbar.clone(),
                ],
            ));
            // T_23 and T_25 need an extra first step: u_bar is at distance
            // two from the printed second vertex.
            let t23 = (
                "T_23".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 3, 4], vec![k + 1, f1, n]),
                    (vec![2, 3, 4], vec![k + 1, f1, n]),
                    (vec![2, 3, 4], vec![k + 1, a, n]),
                    (vec![2, 3, 4], vec![k + 2, a, n]),
                    vbar.clone(),
                ],
            );
            let t25 = (
                "T_25".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 3, 4], vec![k + 1, f1, n]),
                    (vec![2, 3, 4], vec![k + 1, f1, n]),
                    (vec![2, 3, 4], vec![f1, a, n]),
                    (vec![2, 3, 4], vec![k + 2, a, n]),
                    vbar.clone(),
                ],
            );
            let t24 = (
                "T_24".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 2, 3], vec![k + 1, f1, n]),
                    (vec![1, 2, 3], vec![k + 1, a, n]),
                    (vec![1, 2, 4], vec![k + 1, a, n]),
                    (vec![1, 2, 4], vec![k + 2, a, n]),
                    vbar.clone(),
                ],
            );
            let t26 = (
                "T_26".into(),
                vec![
                    ubar.clone(),
                    (vec![1, 2, 3], vec![k + 1, f1, n]),
                    (vec![1, 2], vec![f1, n]),
                    (vec![1, 2, 4], vec![f1, a, n]),
                    (vec![1, 2, 4], vec![k + 2, a, n]),
                    vbar.clone(),
                ],
            );
            if a == f1 || a == f2 {
                templates.push(p_path(3));
                templates.push(p_path(4));
                templates.push(t23);
                templates.push(t24);
            } else if a == 2 {
                templates.push(p_path(3));
                templates.push(p_path(4));
                templates.push(t25);
                templates.push(t26);
            } else {
                templates.push(t6());
                templates.push(t21());
                templates.push(t25);
                templates.push(t26);
            }
        }
    }

    let mut paths = Vec::with_capacity(templates.len());
    for (label, specs) in templates {
        let mut ranks = Vec::with_capacity(specs.len());
        for spec in &specs {
            let w = resolve(&base, spec, n, perm)?;
            let r = g.rank_of(&w)?;
            if ranks.last() != Some(&r) {
                ranks.push(r);
            }
        }
        paths.push(LabeledPath { label, ranks });
    }
    Ok(PathFamily {
        paths,
        required_entry: Some(cfg.r),
        forbidden_vertices: Vec::new(),
        omitted: Vec::new(),
    })
}

/// Recovers the template spec of a companion vertex relative to the base
/// (used to rebuild the endpoints inside path templates).
fn spec_of(target: &SubsetVertex, base: &SubsetVertex, cfg: &Lemma8Config) -> Result<Spec> {
    // Undo the relabelling to express the companion in canonical entries.
    let canon = match cfg.relabel.as_deref() {
        None => *target,
        Some(p) => {
            let mut inv = vec![0u32; p.len()];
            for (i, &img) in p.iter().enumerate() {
                inv[(img - 1) as usize] = i as u32 + 1;
            }
            let mapped: Vec<u32> = target
                .entries()
                .iter()
                .map(|&e| inv[(e - 1) as usize])
                .collect();
            SubsetVertex::from_entries(&mapped, cfg.n)?
        }
    };
    let removes: Vec<u32> = base
        .entries()
        .into_iter()
        .filter(|&e| !canon.contains(e))
        .collect();
    let adds: Vec<u32> = canon
        .entries()
        .into_iter()
        .filter(|&e| !base.contains(e))
        .collect();
    Ok((removes, adds))
}
