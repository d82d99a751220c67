//! Multi-threaded oracle. Results are identical to the sequential
//! [`resmc::oracle`] functions: the first realization in graph order wins.

use rayon::prelude::*;
use resmc::oracle::{graph_count, search_graph, SearchSpec};
use resmc::{KValue, Realization};

pub fn search_witness(spec: &SearchSpec, k: usize) -> resmc::Result<Option<Realization>> {
    spec.validate()?;
    (0..graph_count(spec.n))
        .into_par_iter()
        .find_map_first(|index| search_graph(spec, k, index).transpose())
        .transpose()
}

/// The minimal `k` with a witness for it, or `Infinite` up to `spec.k_max`.
pub fn brute_force(spec: &SearchSpec) -> resmc::Result<(KValue, Option<Realization>)> {
    for k in spec.k_min()..=spec.k_max {
        if let Some(r) = search_witness(spec, k)? {
            return Ok((KValue::Finite(k as u64), Some(r)));
        }
    }
    Ok((KValue::Infinite, None))
}
