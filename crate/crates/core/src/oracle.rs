//! Brute-force ground truth for `K(a,m,n)` on at most seven vertices.
//!
//! Every labeled graph on `n` vertices is tried, in increasing order of its
//! edge mask (bit `i` is the `i`-th pair of `(0,1), (0,2), ..., (n-2,n-1)`),
//! against every coloring of the chosen [`ColoringSpace`]. Nothing here uses
//! the closed forms of [`kformula`](crate::kformula) except the optional
//! [`claim_bounds`] pruning.

use alloc::vec::Vec;

use crate::kformula::{claim_bounds, KValue};
use crate::resistance::{check_highly_am_resistant, Scenario};
use crate::{ColorSet, Error, Graph, Multicoloring, Realization, Result};

/// Largest vertex count the oracle accepts: `2^(7 choose 2) = 2^21` graphs.
pub const MAX_VERTICES: usize = 7;

/// Which colorings are tried on each graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColoringSpace {
    /// Every vertex misses exactly one color, enumerated up to a permutation
    /// of the colors (missing-color vectors are restricted growth strings).
    Saturated,
    /// Every vertex misses exactly one color, all `k^n` assignments.
    SaturatedLiteral,
    /// Every vertex holds every color. Dominates all other colorings when
    /// `a = 0`, where the attacker condition is vacuous.
    Full,
    /// Every per-vertex subset of the colors, except that with `a >= 1` no
    /// vertex holds all of them.
    Exhaustive,
}

impl ColoringSpace {
    /// `Full` for `a = 0`, `Saturated` for `a = 1` (saturating a coloring
    /// never breaks a 1-resistant one), `Exhaustive` otherwise.
    pub fn default_for(a: usize) -> Self {
        match a {
            0 => ColoringSpace::Full,
            1 => ColoringSpace::Saturated,
            _ => ColoringSpace::Exhaustive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchSpec {
    pub a: usize,
    pub m: usize,
    pub n: usize,
    pub k_max: usize,
    /// Skip graphs violating [`claim_bounds`] (only for `a = 1`, `m >= 1`).
    pub prune: bool,
    pub space: ColoringSpace,
}

impl SearchSpec {
    /// Pruned search with `k_max = max(n, 2)` and the default coloring space.
    pub fn new(a: usize, m: usize, n: usize) -> Self {
        SearchSpec { a, m, n, k_max: n.max(2), prune: true, space: ColoringSpace::default_for(a) }
    }

    pub fn with_k_max(self, k_max: usize) -> Self {
        SearchSpec { k_max, ..self }
    }

    pub fn with_prune(self, prune: bool) -> Self {
        SearchSpec { prune, ..self }
    }

    pub fn with_space(self, space: ColoringSpace) -> Self {
        SearchSpec { space, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_VERTICES {
            return Err(Error::SearchTooLarge { n: self.n, cap: MAX_VERTICES });
        }
        Ok(())
    }

    /// Smallest color count worth trying.
    pub fn k_min(&self) -> usize {
        if self.a == 0 {
            1
        } else {
            2
        }
    }
}

/// Number of labeled graphs on `n` vertices.
pub fn graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labeled graph with the given edge mask.
pub fn graph_from_index(n: usize, index: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if index >> bit & 1 == 1 {
                g.add_edge(u, v).expect("fresh pair");
            }
            bit += 1;
        }
    }
    g
}

/// Minimal `k` in `[k_min, k_max]` for which some graph and coloring realize
/// `(a, m, n, k)`.
pub fn brute_force_k(spec: &SearchSpec) -> Result<KValue> {
    spec.validate()?;
    for k in spec.k_min()..=spec.k_max {
        if search_witness(spec, k)?.is_some() {
            return Ok(KValue::Finite(k as u64));
        }
    }
    Ok(KValue::Infinite)
}

/// The first realization of `(a, m, n, k)` in search order.
pub fn search_witness(spec: &SearchSpec, k: usize) -> Result<Option<Realization>> {
    spec.validate()?;
    for index in 0..graph_count(spec.n) {
        if let Some(r) = search_graph(spec, k, index)? {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// The first coloring of graph `index` that realizes `(a, m, n, k)`.
pub fn search_graph(spec: &SearchSpec, k: usize, index: u64) -> Result<Option<Realization>> {
    spec.validate()?;
    if spec.n == 0 || k == 0 {
        return Ok(None);
    }
    let g = graph_from_index(spec.n, index);
    if prunable(spec, k, &g) {
        return Ok(None);
    }
    let scenario = Scenario::new(spec.a, spec.m);
    let mut found = None;
    let mut error = None;
    for_each_coloring(spec, k, &mut |c| match check_highly_am_resistant(&g, c, scenario) {
        Ok(report) if report.passed() => {
            found = Some(c.clone());
            true
        }
        Ok(_) => false,
        Err(e) => {
            error = Some(e);
            true
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    found.map(|c| Realization::new(g, c, spec.a, spec.m)).transpose()
}

fn prunable(spec: &SearchSpec, k: usize, g: &Graph) -> bool {
    let delta = g.max_degree();
    spec.prune
        && spec.a == 1
        && spec.m >= 1
        && k >= 2
        && delta >= 1
        && !claim_bounds(spec.n as u64, spec.m as u64, k as u64, delta as u64)
}

/// Calls `visit` on every coloring of the space in lexicographic order of
/// the per-vertex codes until it returns `true`.
pub fn for_each_coloring(
    spec: &SearchSpec,
    k: usize,
    visit: &mut dyn FnMut(&Multicoloring) -> bool,
) {
    let n = spec.n;
    match spec.space {
        ColoringSpace::Full => {
            let c = Multicoloring::new(k, alloc::vec![ColorSet::all(k); n]).expect("k >= 1");
            visit(&c);
        }
        ColoringSpace::Saturated | ColoringSpace::SaturatedLiteral => {
            let canonical = spec.space == ColoringSpace::Saturated;
            let mut missing = alloc::vec![0; n];
            saturated(&mut missing, 0, 0, k, canonical, visit);
        }
        ColoringSpace::Exhaustive => {
            let codes = (1usize << k) - usize::from(spec.a >= 1);
            let mut digits = alloc::vec![0; n];
            loop {
                let sets: Vec<ColorSet> = digits
                    .iter()
                    .map(|&d| (0..k).filter(|b| d >> b & 1 == 1).map(|b| b + 1).collect())
                    .collect();
                if visit(&Multicoloring::new(k, sets).expect("colors within 1..=k")) {
                    return;
                }
                // Odometer, last vertex fastest.
                let mut i = n;
                loop {
                    if i == 0 {
                        return;
                    }
                    i -= 1;
                    digits[i] += 1;
                    if digits[i] < codes {
                        break;
                    }
                    digits[i] = 0;
                }
            }
        }
    }
}

/// Assigns missing colors `0..k` (0-based) to vertices `at..`; with
/// `canonical` a vertex may only open the next unused color.
fn saturated(
    missing: &mut [usize],
    at: usize,
    opened: usize,
    k: usize,
    canonical: bool,
    visit: &mut dyn FnMut(&Multicoloring) -> bool,
) -> bool {
    if at == missing.len() {
        let lists: Vec<usize> = missing.iter().map(|&c| c + 1).collect();
        return visit(&Multicoloring::from_missing(k, &lists).expect("colors within 1..=k"));
    }
    let limit = if canonical { (opened + 1).min(k) } else { k };
    for color in 0..limit {
        missing[at] = color;
        if saturated(missing, at + 1, opened.max(color + 1), k, canonical, visit) {
            return true;
        }
    }
    false
}
