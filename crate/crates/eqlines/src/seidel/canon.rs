//! Canonical labelling of small graphs (at most 16 vertices) by
//! individualisation–refinement with automorphism pruning, and
//! isomorphism-class enumeration by one-vertex extension.

use std::collections::HashMap;

use super::Graph;
use crate::par;

pub const MAX_CANON_VERTICES: usize = 16;

/// Canonical code and labelling: `perm[k]` is the original vertex placed at canonical position `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Canonical {
    pub code: u128,
    pub perm: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u32],
    n: usize,
    first: Option<(u128, Vec<u8>)>,
    best: Option<(u128, Vec<u8>)>,
    autos: Vec<Vec<u8>>,
}

fn code_of(rows: &[u32], perm: &[u8]) -> u128 {
    let n = perm.len();
    let mut code = 0u128;
    for j in 1..n {
        let rj = rows[perm[j] as usize];
        for &pi in perm.iter().take(j) {
            code = (code << 1) | ((rj >> pi) & 1) as u128;
        }
    }
    code
}

fn refine(rows: &[u32], cells: &mut Vec<Vec<u8>>) {
    loop {
        let masks: Vec<u32> = cells.iter().map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
        let mut out: Vec<Vec<u8>> = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                out.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, u8)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (rows[v as usize] & m).count_ones() as u8).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    out.push(keyed[start..k].iter().map(|x| x.1).collect());
                    start = k;
                }
            }
        }
        let changed = out.len() != cells.len();
        *cells = out;
        if !changed {
            return;
        }
    }
}

fn find(parent: &mut [u8], x: u8) -> u8 {
    let mut x = x;
    while parent[x as usize] != x {
        parent[x as usize] = parent[parent[x as usize] as usize];
        x = parent[x as usize];
    }
    x
}

impl Search<'_> {
    /// Orbit representatives under the found automorphisms that fix `prefix` pointwise.
    fn orbits(&self, prefix: &[u8]) -> Vec<u8> {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        for a in &self.autos {
            if prefix.iter().all(|&p| a[p as usize] == p) {
                for v in 0..self.n as u8 {
                    let (x, y) = (find(&mut parent, v), find(&mut parent, a[v as usize]));
                    if x != y {
                        parent[x.max(y) as usize] = x.min(y);
                    }
                }
            }
        }
        (0..self.n as u8).map(|v| find(&mut parent, v)).collect()
    }

    fn leaf(&mut self, perm: Vec<u8>) {
        let code = code_of(self.rows, &perm);
        let auto_with = |other: &[u8]| {
            // vertex other[k] ↦ perm[k]
            let mut a = vec![0u8; other.len()];
            for k in 0..other.len() {
                a[other[k] as usize] = perm[k];
            }
            a
        };
        match (&self.first, &self.best) {
            (None, _) => {
                self.first = Some((code, perm.clone()));
                self.best = Some((code, perm));
            }
            (Some((fc, fp)), Some((bc, bp))) => {
                if code == *fc {
                    let a = auto_with(fp);
                    self.autos.push(a);
                } else if code == *bc {
                    let a = auto_with(bp);
                    self.autos.push(a);
                } else if code > *bc {
                    self.best = Some((code, perm));
                }
            }
            _ => unreachable!(),
        }
    }

    fn run(&mut self, mut cells: Vec<Vec<u8>>, prefix: &mut Vec<u8>) {
        refine(self.rows, &mut cells);
        if cells.len() == self.n {
            self.leaf(cells.iter().map(|c| c[0]).collect());
            return;
        }
        let t = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| (cells[i].len(), i))
            .expect("non-discrete partition");
        let target = cells[t].clone();
        let mut explored: Vec<u8> = Vec::new();
        for &v in &target {
            if !explored.is_empty() {
                let orb = self.orbits(prefix);
                if explored.iter().any(|&e| orb[e as usize] == orb[v as usize]) {
                    continue;
                }
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(vec![v]);
            next.push(target.iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&cells[t + 1..]);
            prefix.push(v);
            self.run(next, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}

fn rows_of(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|i| g.neighbors(i).iter().fold(0u32, |m, j| m | 1 << j))
        .collect()
}

/// Canonical form on bit rows (`rows[i]` has bit `j` set iff `i ~ j`).
pub fn canonical_rows(rows: &[u32]) -> Canonical {
    let n = rows.len();
    assert!(n <= MAX_CANON_VERTICES, "canonical form limited to {MAX_CANON_VERTICES} vertices");
    if n == 0 {
        return Canonical { code: 0, perm: Vec::new() };
    }
    let mut s = Search { rows, n, first: None, best: None, autos: Vec::new() };
    s.run(vec![(0..n as u8).collect()], &mut Vec::new());
    let (code, perm) = s.best.expect("at least one leaf");
    Canonical { code, perm: perm.into_iter().map(|v| v as usize).collect() }
}

pub fn canonical_form(g: &Graph) -> Canonical {
    canonical_rows(&rows_of(g))
}

/// Graph on `n` vertices whose canonical code is `code`, in canonical labelling.
pub fn graph_from_code(n: usize, code: u128) -> Graph {
    let m = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n);
    let mut bit = m;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if (code >> bit) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count() && canonical_form(a).code == canonical_form(b).code
}

/// Canonical codes of all isomorphism classes of graphs on `n` vertices, sorted ascending.
///
/// Classes on `k+1` vertices are obtained by attaching a new vertex to each class
/// representative on `k` vertices in every possible way and keeping one canonical copy.
pub fn graph_class_codes(n: usize) -> Vec<u128> {
    assert!(n <= MAX_CANON_VERTICES);
    let mut level: Vec<u128> = vec![0];
    for k in 1..n {
        level = extend_level(k, &level);
    }
    if n == 0 {
        return Vec::new();
    }
    level
}

fn extend_level(k: usize, reps: &[u128]) -> Vec<u128> {
    let per_rep: Vec<Vec<u128>> = par::map(reps, |&code| {
        let g = graph_from_code(k, code);
        let base = rows_of(&g);
        let mut seen: HashMap<u128, ()> = HashMap::new();
        let mut rows = base.clone();
        rows.push(0);
        for mask in 0u32..(1u32 << k) {
            for (i, r) in rows.iter_mut().enumerate().take(k) {
                *r = base[i] | (((mask >> i) & 1) << k);
            }
            rows[k] = mask;
            seen.insert(canonical_rows(&rows).code, ());
        }
        seen.into_keys().collect()
    });
    let mut all: Vec<u128> = per_rep.into_iter().flatten().collect();
    all.sort_unstable();
    all.dedup();
    all
}

/// All isomorphism classes on `n` vertices as canonical graphs, ordered by code.
pub fn graph_classes(n: usize) -> Vec<Graph> {
    graph_class_codes(n).into_iter().map(|c| graph_from_code(n, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_small() {
        let counts: Vec<usize> = (1..=7).map(|n| graph_class_codes(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn relabelled_graphs_share_a_code() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (0, 4)]);
        let p = [3, 5, 0, 2, 1, 4];
        let h = g.permuted(&p);
        assert_eq!(canonical_form(&g).code, canonical_form(&h).code);
        let c = canonical_form(&g);
        assert_eq!(g.permuted(&c.perm), graph_from_code(6, c.code));
        assert!(!are_isomorphic(&g, &Graph::complete(6)));
    }
}
