//! Octads of S(5,8,24) as weight-8 words of the extended binary Golay code.

use std::sync::OnceLock;

/// Generator polynomial `1 + x² + x⁴ + x⁵ + x⁶ + x¹⁰ + x¹¹` of the cyclic [23,12] Golay code,
/// bit `i` holding the coefficient of `xⁱ`.
pub const GOLAY_GENERATOR_POLY: u32 = 0b1100_0111_0101;

/// Octads through point 1 that the Witt-system base is built from (points numbered 1..=24).
pub const WITT_BASE_OCTADS: [[u8; 8]; 6] = [
    [1, 2, 5, 8, 13, 15, 18, 20],
    [1, 2, 3, 4, 9, 10, 11, 12],
    [1, 3, 5, 7, 17, 19, 22, 24],
    [1, 2, 5, 8, 9, 11, 22, 24],
    [1, 2, 3, 4, 17, 18, 19, 20],
    [1, 3, 5, 7, 10, 12, 13, 15],
];

/// An 8-subset of `{1..24}` stored as a 24-bit mask (bit `i − 1` for point `i`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Octad(pub u32);

impl Octad {
    pub fn from_points(points: &[u8]) -> Self {
        Octad(points.iter().fold(0, |m, &p| m | 1 << (p - 1)))
    }

    /// Sorted points, numbered from 1.
    pub fn points(&self) -> Vec<u8> {
        (0..24).filter(|i| self.0 >> i & 1 == 1).map(|i| i as u8 + 1).collect()
    }

    pub fn contains(&self, p: u8) -> bool {
        self.0 >> (p - 1) & 1 == 1
    }

    pub fn meet(&self, o: &Octad) -> u32 {
        (self.0 & o.0).count_ones()
    }
}

/// The 4096 codewords: cyclic shifts of the generator span the [23,12] code, and bit 23
/// is the overall parity.
pub fn golay_codewords() -> Vec<u32> {
    let rows: Vec<u32> = (0..12).map(|i| GOLAY_GENERATOR_POLY << i).collect();
    (0u32..1 << 12)
        .map(|m| {
            let w = (0..12).filter(|i| m >> i & 1 == 1).fold(0u32, |acc, i| acc ^ rows[i]);
            w | (w.count_ones() & 1) << 23
        })
        .collect()
}

/// Octads in the generator's own labelling (codeword bit `i` is point `i + 1`).
fn raw_octads() -> Vec<u32> {
    let mut o: Vec<u32> = golay_codewords().into_iter().filter(|w| w.count_ones() == 8).collect();
    o.sort_unstable();
    o
}

fn containing_octad(octads: &[u32], mask: u32) -> Option<u32> {
    octads.iter().copied().find(|o| o & mask == mask)
}

/// Point map `π` (0-based, `π[p]` = generator label of point `p`) under which every
/// printed base octad is an octad of the generated design.
///
/// The design's automorphism group is 5-transitive, so the first five points may be
/// placed anywhere; the rest is a backtracking search, taking the first solution in
/// lexicographic order.
fn relabeling(octads: &[u32]) -> Option<[u8; 24]> {
    let blocks: Vec<u32> = WITT_BASE_OCTADS.iter().map(|s| Octad::from_points(s).0).collect();
    let mut order: Vec<usize> = Vec::new();
    for s in &WITT_BASE_OCTADS {
        for &p in s {
            let p = p as usize - 1;
            if !order.contains(&p) {
                order.push(p);
            }
        }
    }
    let mut map = [u8::MAX; 24];
    for (k, &p) in order.iter().take(5).enumerate() {
        map[p] = k as u8;
    }
    if !search(octads, &blocks, &order, 5, &mut map) {
        return None;
    }
    // points outside every base octad take the unused labels in order
    let used = map;
    let mut free = (0..24u8).filter(|l| !used.contains(l));
    for m in map.iter_mut().filter(|m| **m == u8::MAX) {
        *m = free.next().expect("24 labels");
    }
    Some(map)
}

fn image(map: &[u8; 24], block: u32) -> (u32, u32) {
    let (mut img, mut count) = (0u32, 0u32);
    for p in 0..24 {
        if block >> p & 1 == 1 && map[p] != u8::MAX {
            img |= 1 << map[p];
            count += 1;
        }
    }
    (img, count)
}

fn consistent(octads: &[u32], blocks: &[u32], map: &[u8; 24]) -> bool {
    blocks.iter().all(|&b| {
        let (img, count) = image(map, b);
        count < 5 || containing_octad(octads, img).is_some()
    })
}

fn search(octads: &[u32], blocks: &[u32], order: &[usize], depth: usize, map: &mut [u8; 24]) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    for label in 0..24u8 {
        if map.contains(&label) {
            continue;
        }
        map[p] = label;
        if consistent(octads, blocks, map) && search(octads, blocks, order, depth + 1, map) {
            return true;
        }
    }
    map[p] = u8::MAX;
    false
}

/// The 759 octads relabelled so that the printed base octads belong to the design, and
/// the 253 of them through point 1. Both lists are sorted by point list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OctadSystem {
    pub octads_all: Vec<Octad>,
    pub octads_through_1: Vec<Octad>,
    /// `relabel[p − 1] + 1` is the generator label of point `p`.
    pub relabel: [u8; 24],
}

fn build() -> OctadSystem {
    let raw = raw_octads();
    let map = relabeling(&raw).expect("printed octads embed in the generated design");
    let mut inverse = [0u8; 24];
    for (p, &l) in map.iter().enumerate() {
        inverse[l as usize] = p as u8;
    }
    let mut all: Vec<Octad> = raw
        .iter()
        .map(|&o| Octad((0..24).filter(|l| o >> l & 1 == 1).fold(0, |m, l| m | 1 << inverse[l])))
        .collect();
    all.sort_by_key(|o| o.points());
    let through_1 = all.iter().copied().filter(|o| o.contains(1)).collect();
    OctadSystem { octads_all: all, octads_through_1: through_1, relabel: map }
}

pub fn golay_octads() -> &'static OctadSystem {
    static CELL: OnceLock<OctadSystem> = OnceLock::new();
    CELL.get_or_init(build)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_distribution() {
        let mut dist = [0usize; 25];
        for w in golay_codewords() {
            dist[w.count_ones() as usize] += 1;
        }
        assert_eq!((dist[0], dist[8], dist[12], dist[16], dist[24]), (1, 759, 2576, 759, 1));
        assert_eq!(dist.iter().sum::<usize>(), 4096);
    }

    #[test]
    fn base_octads_are_in_the_design() {
        let sys = golay_octads();
        for s in &WITT_BASE_OCTADS {
            assert!(sys.octads_through_1.contains(&Octad::from_points(s)));
        }
    }
}
