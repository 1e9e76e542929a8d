//! The first disjoint-path family witness (the lemma7 builder): from an edge
//! `{x, x_k^n}` to the distance-two vertex `w = x_{k-1,k}^{k+1,k+2}`,
//! avoiding the forbidden set `S_1 = N(x) - beta_n`, the four neighbour
//! classes of `w` support `(k-1)(n-k)` internally disjoint paths.

use serde::{Deserialize, Serialize};

use super::cuts::validate_relabel;
use super::paths::{LabeledPath, OmittedPath, PathFamily};
use crate::error::Error;
use crate::graph::UniformSubsetGraph;
use crate::subset::SubsetVertex;
use crate::Result;

/// Configuration of the lemma7 family: the base vertex, the far vertex `w`,
/// the forbidden set and the four neighbour classes of `w`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Lemma7Config {
    pub n: u32,
    pub k: u32,
    /// The entry absent from every vertex in play (canonically `n`).
    pub r: u32,
    pub x: SubsetVertex,
    pub x_k_n: SubsetVertex,
    pub w: SubsetVertex,
    /// `N(x) - beta_r`: forbidden for internal vertices; `k(n-k-1)` vertices.
    pub s1: Vec<SubsetVertex>,
    /// Neighbours of `w` at Hamming distance 1 from `x_k^n`; 2 vertices.
    pub a1: Vec<SubsetVertex>,
    /// `n + k - 7` vertices.
    pub a2: Vec<SubsetVertex>,
    /// `(k-2)(n-k-2)` vertices.
    pub a3: Vec<SubsetVertex>,
    /// `n - k - 3` vertices.
    pub a4: Vec<SubsetVertex>,
    relabel: Option<Vec<u32>>,
}

/// A template vertex: entries to remove from and add to the canonical base
/// `x = {1, ..., k}`, with cancellation.
type Spec = (Vec<u32>, Vec<u32>);

fn resolve(x: &SubsetVertex, spec: &Spec, n: u32, perm: Option<&[u32]>) -> Result<SubsetVertex> {
    let v = x.multi_swap(&spec.0, &spec.1, n)?;
    match perm {
        None => Ok(v),
        Some(p) => {
            let mapped: Vec<u32> = v.entries().iter().map(|&e| p[(e - 1) as usize]).collect();
            SubsetVertex::from_entries(&mapped, n)
        }
    }
}

impl Lemma7Config {
    /// Canonical configuration over `x = {1, ..., k}` with `r = n`,
    /// optionally relabelled by a permutation of the ground set.
    pub fn canonical(g: &UniformSubsetGraph, relabel: Option<&[u32]>) -> Result<Self> {
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
        let base = SubsetVertex::from_entries(&(1..=k).collect::<Vec<_>>(), n)?;
        let mk = |removes: Vec<u32>, adds: Vec<u32>| -> Result<SubsetVertex> {
            resolve(&base, &(removes, adds), n, relabel)
        };
        let x = mk(vec![], vec![])?;
        let x_k_n = mk(vec![k], vec![n])?;
        let w = mk(vec![k - 1, k], vec![k + 1, k + 2])?;
        let mut s1 = Vec::new();
        for i in 1..=k {
            for j in k + 1..n {
                s1.push(mk(vec![i], vec![j])?);
            }
        }
        let a1 = vec![
            mk(vec![k - 1, k], vec![k + 1, n])?,
            mk(vec![k - 1, k], vec![k + 2, n])?,
        ];
        let mut a2 = Vec::new();
        for j in k + 3..n {
            a2.push(mk(vec![k - 1, k], vec![k + 2, j])?);
        }
        for i in 1..=k - 2 {
            a2.push(mk(vec![i, k], vec![k + 1, k + 2])?);
        }
        for i in 1..=k - 2 {
            a2.push(mk(vec![i, k - 1, k], vec![k + 1, k + 2, n])?);
        }
        let mut a3 = Vec::new();
        for i in 1..=k - 2 {
            for j in std::iter::once(k).chain(k + 3..n) {
                a3.push(mk(vec![i, k - 1, k], vec![k + 1, k + 2, j])?);
            }
        }
        let mut a4 = Vec::new();
        for j in k + 3..n {
            a4.push(mk(vec![k - 1, k], vec![k + 1, j])?);
        }
        let cfg = Lemma7Config {
            n,
            k,
            r: relabel.map_or(n, |p| p[(n - 1) as usize]),
            x,
            x_k_n,
            w,
            s1,
            a1,
            a2,
            a3,
            a4,
            relabel: relabel.map(|p| p.to_vec()),
        };
        cfg.validate(g)?;
        Ok(cfg)
    }

    /// Class sizes match the closed forms and the classes partition the
    /// usable neighbourhood of `w`.
    fn validate(&self, g: &UniformSubsetGraph) -> Result<()> {
        let (n, k) = (self.n as u64, self.k as u64);
        let sizes = [
            (self.s1.len() as u64, k * (n - k - 1), "S_1"),
            (self.a1.len() as u64, 2, "A_1"),
            (self.a2.len() as u64, n + k - 7, "A_2"),
            (self.a3.len() as u64, (k - 2) * (n - k - 2), "A_3"),
            (self.a4.len() as u64, n - k - 3, "A_4"),
        ];
        for (got, want, name) in sizes {
            if got != want {
                return Err(Error::InvalidConfig(format!(
                    "|{name}| = {got}, expected {want}"
                )));
            }
        }
        let wr = g.rank_of(&self.w)?;
        let mut usable: Vec<u32> = g
            .neighbors(wr)
            .iter()
            .copied()
            .filter(|&v| {
                let sv = g.vertex(v);
                !self.s1.contains(sv)
            })
            .collect();
        usable.sort_unstable();
        let mut classes: Vec<u32> = self
            .a1
            .iter()
            .chain(&self.a2)
            .chain(&self.a3)
            .chain(&self.a4)
            .map(|v| g.rank_of(v))
            .collect::<Result<_>>()?;
        classes.sort_unstable();
        let mut dedup = classes.clone();
        dedup.dedup();
        if dedup.len() != classes.len() {
            return Err(Error::InvalidConfig("classes are not disjoint".into()));
        }
        if classes != usable {
            return Err(Error::InvalidConfig(
                "classes do not partition N(w) - S_1".into(),
            ));
        }
        Ok(())
    }

    /// Expected family size `(k-1)(n-k)`; one less at `n = k+3` where the
    /// class-four representative path has no fresh entry to use.
    pub fn expected_paths(&self) -> u64 {
        (self.k as u64 - 1) * (self.n - self.k) as u64
    }

    pub fn sources(&self, g: &UniformSubsetGraph) -> Result<Vec<u32>> {
        Ok(vec![g.rank_of(&self.w)?])
    }

    pub fn targets(&self, g: &UniformSubsetGraph) -> Result<Vec<u32>> {
        Ok(vec![g.rank_of(&self.x)?, g.rank_of(&self.x_k_n)?])
    }
}

/// Builds the path family: two two-hop paths through `A_1`, three template
/// groups through `A_2`, the four-hop template through `A_3`, and one
/// representative path through `A_4` ending at `x`. All internal vertices
/// avoid `S_1`.
pub fn lemma7_paths(g: &UniformSubsetGraph, cfg: &Lemma7Config) -> Result<PathFamily> {
    let (n, k) = (cfg.n, cfg.k);
    let base = SubsetVertex::from_entries(&(1..=k).collect::<Vec<_>>(), n)?;
    let perm = cfg.relabel.as_deref();
    let w: Spec = (vec![k - 1, k], vec![k + 1, k + 2]);
    let xkn: Spec = (vec![k], vec![n]);
    let x: Spec = (vec![], vec![]);

    let mut templates: Vec<(String, Vec<Spec>)> = Vec::new();
    templates.push((
        "I.1".into(),
        vec![w.clone(), (vec![k - 1, k], vec![k + 1, n]), xkn.clone()],
    ));
    templates.push((
        "I.2".into(),
        vec![w.clone(), (vec![k - 1, k], vec![k + 2, n]), xkn.clone()],
    ));
    for j in k + 3..n {
        templates.push((
            format!("II.i(j={j})"),
            vec![
                w.clone(),
                (vec![k - 1, k], vec![k + 2, j]),
                (vec![k - 1, k], vec![n, j]),
                xkn.clone(),
            ],
        ));
    }
    for i in 1..=k - 2 {
        templates.push((
            format!("II.ii(i={i})"),
            vec![
                w.clone(),
                (vec![i, k], vec![k + 1, k + 2]),
                (vec![i, k], vec![k + 1, n]),
                xkn.clone(),
            ],
        ));
    }
    for i in 1..=k - 2 {
        templates.push((
            format!("II.iii(i={i})"),
            vec![
                w.clone(),
                (vec![i, k - 1, k], vec![k + 1, k + 2, n]),
                (vec![i, k], vec![k + 2, n]),
                xkn.clone(),
            ],
        ));
    }
    for i in 1..=k - 2 {
        for j in std::iter::once(k).chain(k + 3..n) {
            templates.push((
                format!("III(i={i},j={j})"),
                vec![
                    w.clone(),
                    (vec![i, k - 1, k], vec![k + 1, k + 2, j]),
                    (vec![i, k - 1, k], vec![k + 1, n, j]),
                    (vec![i, k], vec![n, j]),
                    xkn.clone(),
                ],
            ));
        }
    }
    let mut omitted = Vec::new();
    if n >= k + 4 {
        // The representative path through A_4 ends at x. At k = 3 the
        // removal pair {2, k-1} degenerates, so entry 1 stands in for k-1.
        let t = if k >= 4 { k - 1 } else { 1 };
        templates.push((
            "IV".into(),
            vec![
                w.clone(),
                (vec![k - 1, k], vec![k + 1, k + 3]),
                (vec![2, t], vec![k + 1, k + 3]),
                (vec![2, t], vec![k + 3, n]),
                (vec![k - 1], vec![n]),
                x,
            ],
        ));
    } else {
        omitted.push(OmittedPath {
            label: "IV".into(),
            reason: format!(
                "needs a fresh entry in {}..={} which is empty at n = k+3",
                k + 3,
                n - 1
            ),
        });
    }

    let mut paths = Vec::with_capacity(templates.len());
    for (label, specs) in templates {
        let mut ranks = Vec::with_capacity(specs.len());
        for spec in &specs {
            let v = resolve(&base, spec, n, perm)?;
            let r = g.rank_of(&v)?;
            if ranks.last() != Some(&r) {
                ranks.push(r);
            }
        }
        paths.push(LabeledPath { label, ranks });
    }
    let mut forbidden: Vec<u32> = cfg
        .s1
        .iter()
        .map(|v| g.rank_of(v))
        .collect::<Result<_>>()?;
    forbidden.sort_unstable();
    Ok(PathFamily {
        paths,
        required_entry: None,
        forbidden_vertices: forbidden,
        omitted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::verify_path_family;

    #[test]
    fn family_73_has_eight_paths_and_verifies() {
        let g = UniformSubsetGraph::johnson(7, 3).unwrap();
        let cfg = Lemma7Config::canonical(&g, None).unwrap();
        let fam = lemma7_paths(&g, &cfg).unwrap();
        assert_eq!(fam.paths.len() as u64, cfg.expected_paths()); // (3-1)(7-3)
        assert_eq!(fam.paths.len(), 8);
        assert!(fam.omitted.is_empty());
        let rep = verify_path_family(
            &g,
            &fam,
            &cfg.sources(&g).unwrap(),
            &cfg.targets(&g).unwrap(),
        );
        assert!(rep.pass, "{:?}", rep.failures);
    }

    #[test]
    fn family_84_class_sizes() {
        let g = UniformSubsetGraph::johnson(8, 4).unwrap();
        let cfg = Lemma7Config::canonical(&g, None).unwrap();
        assert_eq!(cfg.a2.len() as u32, 8 + 4 - 7);
        let fam = lemma7_paths(&g, &cfg).unwrap();
        assert_eq!(fam.paths.len(), 12);
        let rep = verify_path_family(
            &g,
            &fam,
            &cfg.sources(&g).unwrap(),
            &cfg.targets(&g).unwrap(),
        );
        assert!(rep.pass, "{:?}", rep.failures);
    }

    #[test]
    fn boundary_n_k3_omits_the_class_four_path() {
        // At n = k+3 the class A_4 is empty and w has only k(n-k) - 4 usable
        // neighbours, so (k-1)(n-k) disjoint paths cannot exist; the builder
        // emits the 3k-4 valid ones and flags the omission.
        let g = UniformSubsetGraph::johnson(6, 3).unwrap();
        let cfg = Lemma7Config::canonical(&g, None).unwrap();
        assert!(cfg.a4.is_empty());
        let fam = lemma7_paths(&g, &cfg).unwrap();
        assert_eq!(fam.paths.len() as u32, 3 * 3 - 4);
        assert_eq!(fam.omitted.len(), 1);
        let rep = verify_path_family(
            &g,
            &fam,
            &cfg.sources(&g).unwrap(),
            &cfg.targets(&g).unwrap(),
        );
        assert!(rep.pass, "{:?}", rep.failures);
    }

    #[test]
    fn relabelled_family_verifies() {
        let g = UniformSubsetGraph::johnson(7, 3).unwrap();
        let perm: Vec<u32> = vec![3, 1, 7, 5, 6, 2, 4];
        let cfg = Lemma7Config::canonical(&g, Some(&perm)).unwrap();
        assert_eq!(cfg.r, 4);
        let fam = lemma7_paths(&g, &cfg).unwrap();
        let rep = verify_path_family(
            &g,
            &fam,
            &cfg.sources(&g).unwrap(),
            &cfg.targets(&g).unwrap(),
        );
        assert!(rep.pass, "{:?}", rep.failures);
    }

    #[test]
    fn range_violations_rejected() {
        let g = UniformSubsetGraph::johnson(5, 2).unwrap();
        assert!(Lemma7Config::canonical(&g, None).is_err());
        let g = UniformSubsetGraph::johnson(5, 3).unwrap();
        assert!(Lemma7Config::canonical(&g, None).is_err());
    }
}
