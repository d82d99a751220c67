//! Vertex k-multicolorings.

use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;

use crate::resistance::{CheckReport, Violation};
use crate::{BitSet, Error, Graph, Result, VertexSet};

/// A subset of the colors `1..=k`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(BitSet);

impl ColorSet {
    pub fn new() -> Self {
        ColorSet(BitSet::new())
    }

    /// `{1, ..., k}`.
    pub fn all(k: usize) -> Self {
        ColorSet(BitSet::full(k))
    }

    /// `{1, ..., k} \ {missing}`.
    pub fn all_but(k: usize, missing: usize) -> Self {
        let mut s = ColorSet::all(k);
        s.remove(missing);
        s
    }

    /// # Panics
    ///
    /// Panics on color 0; colors are 1-based.
    pub fn insert(&mut self, color: usize) -> bool {
        assert!(color >= 1, "colors are 1-based");
        self.0.insert(color - 1)
    }

    pub fn remove(&mut self, color: usize) -> bool {
        color >= 1 && self.0.remove(color - 1)
    }

    pub fn contains(&self, color: usize) -> bool {
        color >= 1 && self.0.contains(color - 1)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_color(&self) -> Option<usize> {
        self.0.last().map(|c| c + 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|c| c + 1)
    }

    pub fn union_with(&mut self, other: &ColorSet) {
        self.0.union_with(&other.0);
    }
}

impl FromIterator<usize> for ColorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ColorSet::new();
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// An assignment of a [`ColorSet`] to every vertex, over the colors `1..=k`.
///
/// Empty sets are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multicoloring {
    k: usize,
    sets: Vec<ColorSet>,
}

impl Multicoloring {
    pub fn new(k: usize, sets: Vec<ColorSet>) -> Result<Self> {
        if k == 0 {
            return Err(Error::NoColors);
        }
        for (vertex, s) in sets.iter().enumerate() {
            if let Some(color) = s.max_color().filter(|&c| c > k) {
                return Err(Error::ColorOutOfRange { vertex, color, k });
            }
        }
        Ok(Multicoloring { k, sets })
    }

    /// Builds a coloring from per-vertex color lists.
    pub fn from_lists<L, C>(k: usize, lists: L) -> Result<Self>
    where
        L: IntoIterator<Item = C>,
        C: IntoIterator<Item = usize>,
    {
        let mut sets = Vec::new();
        for (vertex, list) in lists.into_iter().enumerate() {
            let mut s = ColorSet::new();
            for color in list {
                if color == 0 || color > k {
                    return Err(Error::ColorOutOfRange { vertex, color, k });
                }
                s.insert(color);
            }
            sets.push(s);
        }
        Multicoloring::new(k, sets)
    }

    /// Every vertex `v` holds all colors except `missing[v]`.
    pub fn from_missing(k: usize, missing: &[usize]) -> Result<Self> {
        let sets = missing.iter().map(|&c| ColorSet::all_but(k, c)).collect();
        Multicoloring::new(k, sets)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn colors(&self, v: usize) -> &ColorSet {
        &self.sets[v]
    }

    pub fn sets(&self) -> &[ColorSet] {
        &self.sets
    }

    /// Appends a vertex holding `colors`.
    pub fn push(&mut self, colors: ColorSet) -> Result<()> {
        if let Some(color) = colors.max_color().filter(|&c| c > self.k) {
            return Err(Error::ColorOutOfRange { vertex: self.sets.len(), color, k: self.k });
        }
        self.sets.push(colors);
        Ok(())
    }

    pub(crate) fn check_len(&self, g: &Graph) -> Result<()> {
        if self.sets.len() == g.n() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: g.n(), found: self.sets.len() })
        }
    }

    /// Whether the vertices of `set` jointly hold every color.
    pub fn covers(&self, set: &VertexSet) -> bool {
        let mut union = ColorSet::new();
        for v in set {
            union.union_with(&self.sets[v]);
            if union.len() == self.k {
                return true;
            }
        }
        false
    }

    /// Adds a fresh color `k+1` to every vertex.
    pub fn extend_k(&self) -> Multicoloring {
        let k = self.k + 1;
        let sets = self
            .sets
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.insert(k);
                s
            })
            .collect();
        Multicoloring { k, sets }
    }

    /// Tops every vertex up to `k-1` colors by adding its smallest missing
    /// colors.
    pub fn saturate(&self) -> Result<Multicoloring> {
        let mut sets = self.sets.clone();
        for (v, s) in sets.iter_mut().enumerate() {
            if s.len() == self.k {
                return Err(Error::VertexHoldsAllColors(v));
            }
            let mut color = 1;
            while s.len() < self.k - 1 {
                s.insert(color);
                color += 1;
            }
        }
        Ok(Multicoloring { k: self.k, sets })
    }
}

/// The a-HR condition: no `a` vertices jointly hold all `k` colors.
///
/// On failure the report carries the lexicographically smallest offending set.
pub fn check_a_hr(g: &Graph, c: &Multicoloring, a: usize) -> Result<CheckReport> {
    c.check_len(g)?;
    if a > g.n() {
        return Err(Error::TooManyAttackers { a, n: g.n() });
    }
    let mut examined = 0;
    for combo in (0..g.n()).combinations(a) {
        examined += 1;
        let attackers: VertexSet = combo.into_iter().collect();
        if c.covers(&attackers) {
            return Ok(CheckReport::fail(Violation::AttackersHoldSecret { attackers }, examined));
        }
    }
    Ok(CheckReport::pass(examined))
}

/// See [`Multicoloring::saturate`].
pub fn saturate_coloring(c: &Multicoloring) -> Result<Multicoloring> {
    c.saturate()
}

/// See [`Multicoloring::extend_k`].
pub fn extend_k(c: &Multicoloring) -> Multicoloring {
    c.extend_k()
}
