//! Exact verification of (a,m)-resistance.
//!
//! A multicoloring is (a,m)-resistant when for every attacker set `A`
//! (`|A| = a`) and every failure set `M` (`|M| = m`) some component of
//! `G - (N_0(A) ∪ M)` jointly holds all `k` colors. It is *highly*
//! (a,m)-resistant when in addition no `a` vertices hold all colors.
//!
//! `A` and `M` may overlap. Removing more vertices only shrinks the color
//! union of every surviving component, so failures outside the remainder
//! `R = G - N_0(A)` are wasted whenever `|R| >= m`; the [`Engine::Disjoint`]
//! and [`Engine::BranchAndBound`] engines rely on this, [`Engine::Literal`]
//! does not.
//!
//! Witnesses are reported in a canonical form (see [`canonical_failures`]):
//! the attacker set is the lexicographically smallest failing one, and the
//! failure set is the lexicographically smallest `m`-subset of `R` that
//! leaves no full component (or `R` padded with the smallest vertices of
//! `N_0(A)` when `|R| < m`).

use alloc::vec::Vec;

use itertools::Itertools;

use crate::coloring::check_a_hr;
use crate::{Graph, Multicoloring, Result, VertexSet};

/// Adversary strength: `a` attackers and `m` failed vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scenario {
    pub a: usize,
    pub m: usize,
}

impl Scenario {
    pub fn new(a: usize, m: usize) -> Self {
        Scenario { a, m }
    }
}

/// Why a check failed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    /// `a > n` or `m > n`: no attacker/failure sets of the required size
    /// exist, which is treated as failure.
    Vacuous,
    /// The attackers jointly hold every color (the a-HR condition is broken).
    AttackersHoldSecret { attackers: VertexSet },
    /// After removing `N_0(attackers) ∪ failures` no component holds every
    /// color.
    NoFullComponent { attackers: VertexSet, failures: VertexSet },
}

/// Outcome of a check.
///
/// `examined` counts (A, M) pairs for the enumerating engines and search
/// nodes for [`Engine::BranchAndBound`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    violation: Option<Violation>,
    examined: u64,
}

impl CheckReport {
    pub(crate) fn pass(examined: u64) -> Self {
        CheckReport { violation: None, examined }
    }

    pub(crate) fn fail(violation: Violation, examined: u64) -> Self {
        CheckReport { violation: Some(violation), examined }
    }

    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    pub fn violation(&self) -> Option<&Violation> {
        self.violation.as_ref()
    }

    pub fn examined(&self) -> u64 {
        self.examined
    }

    pub fn is_vacuous(&self) -> bool {
        matches!(self.violation, Some(Violation::Vacuous))
    }

    /// The attacker set of the witness, if any.
    pub fn attackers(&self) -> Option<&VertexSet> {
        match &self.violation {
            Some(Violation::AttackersHoldSecret { attackers })
            | Some(Violation::NoFullComponent { attackers, .. }) => Some(attackers),
            _ => None,
        }
    }

    /// The failure set of the witness, if the failure was a disconnection.
    pub fn failures(&self) -> Option<&VertexSet> {
        match &self.violation {
            Some(Violation::NoFullComponent { failures, .. }) => Some(failures),
            _ => None,
        }
    }
}

/// How failure sets are searched.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Every `M ⊆ V(G)` with `|M| = m`, overlaps with `N_0(A)` included.
    Literal,
    /// Every `M ⊆ V(G) - N_0(A)` with `|M| = m`.
    Disjoint,
    /// Exact branch and bound: computes, per component of the remainder, the
    /// fewest deletions that leave no full component, branching on the
    /// vertices of an inclusion-minimal connected full vertex set (every
    /// successful deletion set must hit it).
    #[default]
    BranchAndBound,
}

/// Exhaustive (a,m)-resistance check with the default engine.
pub fn check_am_resistant(g: &Graph, c: &Multicoloring, s: Scenario) -> Result<CheckReport> {
    check_am_resistant_with(g, c, s, Engine::default())
}

pub fn check_am_resistant_with(
    g: &Graph,
    c: &Multicoloring,
    s: Scenario,
    engine: Engine,
) -> Result<CheckReport> {
    c.check_len(g)?;
    let n = g.n();
    if s.a > n || s.m > n {
        return Ok(CheckReport::fail(Violation::Vacuous, 0));
    }
    let mut search = Search { g, c, m: s.m, examined: 0 };
    for combo in (0..n).combinations(s.a) {
        let attackers: VertexSet = combo.into_iter().collect();
        if let Some(failures) = search.attack(&attackers, engine) {
            return Ok(CheckReport::fail(
                Violation::NoFullComponent { attackers, failures },
                search.examined,
            ));
        }
    }
    Ok(CheckReport::pass(search.examined))
}

/// a-HR followed by (a,m)-resistance, with the default engine.
pub fn check_highly_am_resistant(g: &Graph, c: &Multicoloring, s: Scenario) -> Result<CheckReport> {
    check_highly_am_resistant_with(g, c, s, Engine::default())
}

pub fn check_highly_am_resistant_with(
    g: &Graph,
    c: &Multicoloring,
    s: Scenario,
    engine: Engine,
) -> Result<CheckReport> {
    c.check_len(g)?;
    if s.a > g.n() || s.m > g.n() {
        return Ok(CheckReport::fail(Violation::Vacuous, 0));
    }
    let hr = check_a_hr(g, c, s.a)?;
    if !hr.passed() {
        return Ok(hr);
    }
    let mut report = check_am_resistant_with(g, c, s, engine)?;
    report.examined += hr.examined;
    Ok(report)
}

/// Whether some component of `G - removed` holds every color.
pub fn has_full_component(g: &Graph, c: &Multicoloring, removed: &VertexSet) -> bool {
    let alive = g.vertices().difference(removed);
    g.induced_components(&alive).iter().any(|comp| c.covers(comp))
}

/// The canonical failure set defeating `attackers` with `m` failures: the
/// lexicographically smallest `m`-subset of `R = V - N_0(attackers)` leaving
/// no full component, or `R` padded with the smallest vertices of
/// `N_0(attackers)` when `|R| < m`. `None` when the attackers cannot win.
///
/// Any witness `(A, M)` found by an unpruned search canonicalizes to
/// `(A, canonical_failures(g, c, A, |M|))`.
pub fn canonical_failures(
    g: &Graph,
    c: &Multicoloring,
    attackers: &VertexSet,
    m: usize,
) -> Result<Option<VertexSet>> {
    c.check_len(g)?;
    g.check_set(attackers)?;
    if m > g.n() {
        return Ok(None);
    }
    let mut search = Search { g, c, m, examined: 0 };
    Ok(search.attack(attackers, Engine::BranchAndBound))
}

fn pad_short(rest: &VertexSet, removed: &VertexSet, m: usize) -> VertexSet {
    let mut out = rest.clone();
    out.extend(removed.iter().take(m - rest.len()));
    out
}

struct Search<'a> {
    g: &'a Graph,
    c: &'a Multicoloring,
    m: usize,
    examined: u64,
}

impl Search<'_> {
    /// A failure set defeating `attackers`, if one exists.
    fn attack(&mut self, attackers: &VertexSet, engine: Engine) -> Option<VertexSet> {
        let removed = self.g.closed_neighborhood_unchecked(attackers);
        let rest = self.g.vertices().difference(&removed);
        match engine {
            Engine::Literal => self.enumerate(&removed, (0..self.g.n()).collect()),
            _ if rest.len() < self.m => {
                self.examined += 1;
                Some(pad_short(&rest, &removed, self.m))
            }
            Engine::Disjoint => self.enumerate(&removed, rest.to_vec()),
            Engine::BranchAndBound => {
                if self.can_break(&rest, &rest, self.m) {
                    Some(self.smallest_failure_set(&rest))
                } else {
                    None
                }
            }
        }
    }

    fn enumerate(&mut self, removed: &VertexSet, pool: Vec<usize>) -> Option<VertexSet> {
        for combo in pool.into_iter().combinations(self.m) {
            self.examined += 1;
            let failures: VertexSet = combo.into_iter().collect();
            if !has_full_component(self.g, self.c, &removed.union(&failures)) {
                return Some(failures);
            }
        }
        None
    }

    /// Lexicographically smallest `m`-subset of `rest` that leaves no full
    /// component, built greedily; requires that one exists.
    fn smallest_failure_set(&mut self, rest: &VertexSet) -> VertexSet {
        let mut chosen = VertexSet::new();
        let mut floor = 0;
        for slot in 0..self.m {
            let need = self.m - slot - 1;
            let mut picked = None;
            for v in rest.iter().filter(|&v| v >= floor) {
                let allowed: VertexSet = rest.iter().filter(|&u| u > v).collect();
                if allowed.len() < need {
                    break;
                }
                let mut alive = rest.difference(&chosen);
                alive.remove(v);
                if self.can_break(&alive, &allowed, need) {
                    picked = Some(v);
                    break;
                }
            }
            let v = picked.expect("a failing completion exists at every step");
            chosen.insert(v);
            floor = v + 1;
        }
        chosen
    }

    /// Can at most `budget` vertices of `allowed` be deleted from `alive`
    /// so that no component of what remains holds every color?
    fn can_break(&mut self, alive: &VertexSet, allowed: &VertexSet, budget: usize) -> bool {
        self.examined += 1;
        let full: Vec<VertexSet> = self
            .g
            .induced_components(alive)
            .into_iter()
            .filter(|comp| self.c.covers(comp))
            .collect();
        if full.is_empty() {
            return true;
        }
        if full.len() > budget {
            return false;
        }
        let deletable = alive.intersection(allowed);
        if deletable.len() <= budget {
            // Deleting more never hurts, so deleting everything decides it.
            return !has_full_component(
                self.g,
                self.c,
                &self.g.vertices().difference(&alive.difference(&deletable)),
            );
        }
        if let [comp] = full.as_slice() {
            return self.break_component(comp, allowed, budget);
        }
        let mut spent = 0;
        for (i, comp) in full.iter().enumerate() {
            let reserved = full.len() - i - 1;
            match self.min_cost(comp, allowed, budget - spent - reserved) {
                Some(cost) => spent += cost,
                None => return false,
            }
        }
        true
    }

    /// Fewest deletions (at most `cap`) breaking a connected full component.
    fn min_cost(&mut self, comp: &VertexSet, allowed: &VertexSet, cap: usize) -> Option<usize> {
        (1..=cap).find(|&budget| self.break_component(comp, allowed, budget))
    }

    fn break_component(&mut self, comp: &VertexSet, allowed: &VertexSet, budget: usize) -> bool {
        let core = self.minimal_full_core(comp);
        for v in core.intersection(allowed).iter() {
            let mut rest = comp.clone();
            rest.remove(v);
            if self.can_break(&rest, allowed, budget - 1) {
                return true;
            }
        }
        false
    }

    /// An inclusion-minimal connected subset of `comp` that still holds every
    /// color.
    fn minimal_full_core(&self, comp: &VertexSet) -> VertexSet {
        let mut core = comp.clone();
        loop {
            let mut shrunk = false;
            for v in core.to_vec() {
                let mut smaller = core.clone();
                smaller.remove(v);
                if self.c.covers(&smaller) && self.g.is_connected_set(&smaller) {
                    core = smaller;
                    shrunk = true;
                }
            }
            if !shrunk {
                return core;
            }
        }
    }
}
