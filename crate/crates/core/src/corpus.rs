//! Small named link diagrams, given as planar-diagram codes from standard tables.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::diagram::{LinkDiagram, PdCode};

pub const NAMES: [&str; 7] = ["empty", "unknot", "unlink2", "hopf_plus", "hopf_minus", "trefoil", "figure_eight"];

fn pd(components: usize, crossings: &[[u32; 4]], comp_of: &[(u32, usize)], loops: &[usize]) -> LinkDiagram {
    let code = PdCode {
        components,
        crossings: crossings.to_vec(),
        component_of_edge: comp_of.iter().copied().collect(),
        free_loops: loops.iter().map(|&c| (c, 1)).collect::<BTreeMap<_, _>>(),
    };
    LinkDiagram::from_pd(&code).expect("corpus entries are valid")
}

fn knot(crossings: &[[u32; 4]]) -> LinkDiagram {
    let edges: Vec<(u32, usize)> = (1..=2 * crossings.len() as u32).map(|e| (e, 1)).collect();
    pd(1, crossings, &edges, &[])
}

/// The diagram called `name`, if there is one.
pub fn get(name: &str) -> Option<LinkDiagram> {
    let hopf_edges = [(1, 1), (2, 1), (3, 2), (4, 2)];
    Some(match name {
        "empty" => LinkDiagram::empty(),
        "unknot" => LinkDiagram::unknot(),
        "unlink2" => LinkDiagram::unlink(2),
        "hopf_plus" => pd(2, &[[3, 2, 4, 1], [2, 3, 1, 4]], &hopf_edges, &[]),
        "hopf_minus" => pd(2, &[[4, 1, 3, 2], [2, 3, 1, 4]], &hopf_edges, &[]),
        "trefoil" => knot(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]),
        "figure_eight" => knot(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]),
        _ => return None,
    })
}

/// Every corpus entry, in the order of [`NAMES`].
pub fn all() -> Vec<(&'static str, LinkDiagram)> {
    NAMES.iter().map(|&n| (n, get(n).unwrap())).collect()
}
