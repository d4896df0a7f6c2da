//! Shared fixtures for the engine benchmarks.

use std::path::PathBuf;

use sqdeform::io::CorpusEntry;
use sqdeform::{Monomial, MonomialIdeal};

pub fn corpus_entry(id: &str) -> CorpusEntry {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(format!("{id}.json"));
    CorpusEntry::load(&path).expect("bundled corpus entry")
}

/// Edge ideal of the cycle on `n` vertices.
pub fn cycle_edge_ideal(n: usize) -> MonomialIdeal {
    let gens = (0..n).map(|i| {
        let mut e = vec![0; n];
        e[i] = 1;
        e[(i + 1) % n] = 1;
        Monomial::from_exponents(&e)
    });
    MonomialIdeal::new(n, gens).expect("same ring")
}

/// All square-free monomials of degree `k` in `n` variables. Its minimal
/// primes are the `n - k + 1` element subsets, so it is equidimensional.
pub fn squarefree_veronese(n: usize, k: usize) -> MonomialIdeal {
    let gens = (0u64..1 << n).filter(|s| s.count_ones() as usize == k).map(|s| {
        let e: Vec<u32> = (0..n).map(|i| (s >> i & 1) as u32).collect();
        Monomial::from_exponents(&e)
    });
    MonomialIdeal::new(n, gens).expect("same ring")
}
