//! Maximum clique by branch and bound with a greedy-colouring bound.

use std::sync::atomic::{AtomicUsize, Ordering};

use super::{BitSet, Graph};
use crate::par;

/// Degeneracy order (repeatedly remove a minimum-degree vertex, ties by index), reversed so
/// that the densest core comes first.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).expect("vertex left");
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v).iter() {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order.reverse();
    order
}

/// Greedy colouring of `cand` in index order; returns vertices sorted by colour with their colour number.
fn colour_sort(g: &Graph, cand: &BitSet) -> Vec<(usize, usize)> {
    let mut uncoloured = cand.clone();
    let mut out = Vec::with_capacity(cand.len());
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            uncoloured.remove(v);
            out.push((v, colour));
            for u in g.neighbors(v).iter() {
                q.remove(u);
            }
        }
    }
    out
}

/// Searches `cand` for a clique extending a current clique of `size`; stops once `target` is reached.
/// `best` is shared so that parallel subtrees prune each other.
fn expand(g: &Graph, cand: BitSet, size: usize, best: &AtomicUsize, target: usize) {
    let order = colour_sort(g, &cand);
    let mut cand = cand;
    for &(v, c) in order.iter().rev() {
        let b = best.load(Ordering::Relaxed);
        if b >= target || size + c <= b {
            return;
        }
        let next = cand.and(g.neighbors(v));
        if next.is_empty() {
            best.fetch_max(size + 1, Ordering::Relaxed);
        } else {
            expand(g, next, size + 1, best, target);
        }
        cand.remove(v);
    }
}

/// Clique number of `g` restricted to `cand` (at least `lower`, search stops at `target`).
fn clique_number_in(g: &Graph, cand: &BitSet, lower: usize, target: usize) -> usize {
    let best = AtomicUsize::new(lower);
    expand(g, cand.clone(), 0, &best, target);
    best.load(Ordering::Relaxed)
}

/// Clique number of `g`.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let order = degeneracy_order(g);
    let h = g.permuted(&order);
    let best = AtomicUsize::new(1);
    // subtree k: cliques whose lowest-ordered vertex is k, drawn from vertices after k
    let firsts: Vec<usize> = (0..n).collect();
    par::map(&firsts, |&k| {
        let mut cand = h.neighbors(k).clone();
        for u in 0..=k {
            cand.remove(u);
        }
        if cand.is_empty() {
            return;
        }
        let b = best.load(Ordering::Relaxed);
        if cand.len() < b {
            return;
        }
        expand(&h, cand, 1, &best, usize::MAX);
    });
    best.load(Ordering::Relaxed)
}

/// Whether `g[cand]` has a clique of size `k`.
fn has_clique(g: &Graph, cand: &BitSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if cand.len() < k {
        return false;
    }
    clique_number_in(g, cand, k - 1, k) >= k
}

/// Maximum clique: its size and the lexicographically smallest maximum clique.
pub fn max_clique(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    if n == 0 {
        return (0, Vec::new());
    }
    let omega = clique_number(g);
    let mut chosen: Vec<usize> = Vec::with_capacity(omega);
    let mut cand = BitSet::full(n);
    while chosen.len() < omega {
        let need = omega - chosen.len() - 1;
        let v = cand
            .iter()
            .find(|&v| {
                let mut next = cand.and(g.neighbors(v));
                for u in 0..=v {
                    next.remove(u);
                }
                has_clique(g, &next, need)
            })
            .expect("a maximum clique exists");
        chosen.push(v);
        let mut next = cand.and(g.neighbors(v));
        for u in 0..=v {
            next.remove(u);
        }
        cand = next;
    }
    (omega, chosen)
}

/// Exhaustive clique number, for cross-checking on small graphs.
pub fn clique_number_exhaustive(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 24, "exhaustive search limited to 24 vertices");
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if g.is_clique(&vs) {
            best = k;
        }
    }
    best
}
