//! Graphviz export of Γ_t graphs.

use std::fmt::Write;

use crate::gamma::{FamilyPrimes, GammaGraph, PrimeFamily};
use crate::polyring::RingDescriptor;

/// Vertex labels in family order.
pub fn prime_labels(family: &PrimeFamily, ring: &RingDescriptor) -> Vec<String> {
    match family.primes() {
        FamilyPrimes::Variables(ps) => ps.iter().map(|p| p.display(ring).to_string()).collect(),
        FamilyPrimes::General(ps) => ps.iter().map(|p| p.display(ring).to_string()).collect(),
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// An undirected DOT graph named `gamma_<t>` with vertices `v0, v1, ...`.
pub fn gamma_to_dot(graph: &GammaGraph, labels: &[String]) -> String {
    let mut out = String::new();
    writeln!(out, "graph gamma_{} {{", graph.t).expect("string write");
    for v in 0..graph.vertices {
        let label = labels.get(v).map_or_else(|| format!("p{v}"), |l| escape(l));
        writeln!(out, "  v{v} [label=\"{label}\"];").expect("string write");
    }
    for (i, j) in &graph.edges {
        writeln!(out, "  v{i} -- v{j};").expect("string write");
    }
    out.push_str("}\n");
    out
}
