use eqlines::constructions::{block_52_lines, conference_etf, paley_conference, simplex_base};
use eqlines::exactnum::{ExactScalar, Rational};
use eqlines::linalg::{schur_complement, SymMatrix};
use eqlines::pillars::*;
use eqlines::saturate::{m_alpha, parse_angle};
use eqlines::seidel::{base_size, switch, EquiangularSet, SwitchingOp};

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

/// Gram matrix of `p₁..p_K` followed by `x₁, x₂` (both `+` at position 0, `⟨x₁,x₂⟩ = α`) and
/// `y₊, y₋` (`+` at position 1, `⟨x₁,y⟩ = ±α`). Entries not read by the tests are `α`.
fn pillar_gram(k: usize, alpha: &Rational) -> SymMatrix<Rational> {
    let sign = |pos: usize, i: usize| if i == pos { alpha.clone() } else { -alpha };
    SymMatrix::from_fn(k + 4, |i, j| {
        if i == j {
            return Rational::one();
        }
        let (i, j) = (i.min(j), i.max(j));
        match (i < k, j < k) {
            (true, true) => -alpha,
            (true, false) => sign(if j < k + 2 { 0 } else { 1 }, i),
            _ if i == k && j == k + 3 => -alpha,
            _ => alpha.clone(),
        }
    })
}

#[test]
fn k1_geometry_matches_schur_complement() {
    for n in 1..=5usize {
        for k in 2..=2 * n + 1 {
            let g = k1_pillar_geometry(n, k).unwrap();
            let alpha = r(1, 2 * n as i64 + 1);
            let gram = pillar_gram(k, &alpha);
            // h solves G_P·h = α·ε
            let base = gram.principal_submatrix(&(0..k).collect::<Vec<_>>());
            let eps: Vec<Rational> = (0..k).map(|i| if i == 0 { alpha.clone() } else { -&alpha }).collect();
            assert_eq!(base.mul_vec(&g.h_coeffs), eps);
            // the Schur complement is the Gram matrix of the c-parts
            let s = schur_complement(&gram, k).unwrap();
            let c = s.get(0, 0);
            assert_eq!(*c, g.c_norm_sq);
            assert_eq!(&Rational::one() - c, g.h_norm_sq);
            assert_eq!(s.get(0, 1) / c, g.same_pillar_c_inner);
            assert_eq!(s.get(0, 2) / c, g.cross_pillar_c_inners.0);
            assert_eq!(s.get(0, 3) / c, g.cross_pillar_c_inners.1);
            assert_eq!(gram.get(k, k + 2) - s.get(0, 2), g.cross_h_inner);
            // ⟨x,y⟩ = ⟨h₁,h₂⟩ + ‖c‖²⟨ĉ₁,ĉ₂⟩ gives back ±α
            assert_eq!(&g.cross_h_inner + &(&g.c_norm_sq * &g.cross_pillar_c_inners.0), alpha);
            assert_eq!(&g.cross_h_inner + &(&g.c_norm_sq * &g.cross_pillar_c_inners.1), -&alpha);
        }
    }
}

#[test]
fn orthogonal_c_vectors_when_k_is_n_plus_2() {
    for n in 2..=8usize {
        let g = k1_geometry(n).unwrap();
        let (ni, k) = (n as i64, n + 2);
        let alpha = r(1, 2 * ni + 1);
        let mut h = vec![r(-1, k as i64 - 1); k];
        h[0] = Rational::zero();
        assert_eq!(g.h_coeffs, h);
        assert_eq!(g.h_norm_sq, alpha);
        assert_eq!(g.same_pillar_c_inner, Rational::zero());
        assert_eq!(g.cross_pillar_c_inners, (r(1, ni * (ni + 1)), r(-1, ni + 1)));
        assert_eq!(g.cross_h_inner, r(ni - 1, (ni + 1) * (2 * ni + 1)));
        // other K never give orthogonal c-vectors
        for k in (2..=2 * n + 1).filter(|&k| k != n + 2) {
            assert_ne!(k1_pillar_geometry(n, k).unwrap().same_pillar_c_inner, Rational::zero());
        }
    }
    assert!(matches!(k1_geometry(1), Err(PillarError::BadParameters { n: 1, k: 3 })));
    assert!(k1_pillar_geometry(2, 6).is_err());
}

fn fixtures() -> Vec<(String, EquiangularSet)> {
    let mut out = Vec::new();
    for ell in 1..=4 {
        out.push((format!("block52 {ell}"), block_52_lines(ell).unwrap()));
    }
    for q in [5, 13, 17] {
        out.push((format!("paley {q}"), conference_etf(&paley_conference(q).unwrap()).unwrap()));
    }
    out.push(("simplex 4".into(), simplex_base(4, &ExactScalar::Q(r(1, 3))).unwrap()));
    for (rank, a) in [(8, "1/3"), (8, "1/5"), (7, "1/3"), (8, "1/7"), (7, "1/sqrt(13)")] {
        let res = m_alpha(rank, &parse_angle(a).unwrap()).unwrap();
        for (i, b) in res.best.iter().enumerate() {
            out.push((format!("max {rank} {a} #{i}"), EquiangularSet::from_json(&b.realized).unwrap()));
        }
    }
    out
}

#[test]
fn decompositions_of_constructed_sets() {
    let mut full_simplex_seen = 0;
    let mut k1_pairs = 0;
    for (name, e) in fixtures() {
        let bs = base_size(&e).unwrap();
        let base = KBase::from_base_size(&e, &bs).unwrap();
        let d = decompose(&e, &base);
        assert!(d.is_partition(e.len()), "{name}");
        assert!(d.within_count_caps(), "{name}");
        assert_eq!(d.k1_violation(&e.seidel), None, "{name}");
        for (eps, vs) in &d.pillars {
            assert_eq!(eps.len(), bs.k);
            assert!(!eps.should_flip(), "{name}: {eps}");
            assert!(eps.plus_count() <= bs.k / 2);
            for &x in vs {
                let raw = sign_vector(&e, &base, x);
                assert_eq!(&raw.0, eps);
                assert_eq!(raw.1, d.flipped.binary_search(&x).is_ok());
            }
            if eps.plus_count() == 1 {
                k1_pairs += vs.len() * (vs.len() - 1) / 2;
            }
        }
        // a base of size 1/α + 1 leaves only (K, K/2) pillars
        if matches!(e.alpha, ExactScalar::Q(_)) && bs.k == e.base_size_cap() {
            full_simplex_seen += 1;
            assert!(d.pillars.keys().all(|eps| 2 * eps.plus_count() == bs.k), "{name}");
        }
    }
    assert!(full_simplex_seen > 0);
    assert!(k1_pairs > 0);
}

#[test]
fn flipping_twice_changes_nothing() {
    for (name, e) in fixtures() {
        let bs = base_size(&e).unwrap();
        let base = KBase::from_base_size(&e, &bs).unwrap();
        let d = decompose(&e, &base);
        // switching the flipped vertices leaves every sign vector already normalized
        let switched = switch(&e, &SwitchingOp::flips(e.len(), d.flipped.clone()));
        let again = decompose(&switched, &base);
        assert!(again.flipped.is_empty(), "{name}");
        assert_eq!(again.pillars, d.pillars, "{name}");
        for x in (0..e.len()).filter(|x| !base.vertices.contains(x)) {
            let (eps, _) = sign_vector(&e, &base, x);
            assert!(!eps.should_flip());
            assert!(!eps.negated().negated().should_flip());
        }
    }
}

#[test]
fn sign_vector_examples() {
    // x with all inner products −α against a 4-base keeps the all-minus key
    let e = simplex_base(5, &ExactScalar::Q(r(1, 5))).unwrap();
    let base = KBase::new(&e, vec![0, 1, 2, 3], vec![false; 4]).unwrap();
    let (eps, flipped) = sign_vector(&e, &base, 4);
    assert_eq!((eps.to_string(), flipped), ("----".to_string(), false));
    // the same vertex seen from a switched copy gets the same key, flipped back
    let sw = switch(&e, &SwitchingOp::flips(5, vec![4]));
    let (eps, flipped) = sign_vector(&sw, &base, 4);
    assert_eq!((eps.to_string(), flipped), ("----".to_string(), true));
    let e = simplex_base(4, &ExactScalar::Q(r(1, 5))).unwrap();
    let d = decompose(&e, &KBase::new(&e, vec![0, 1, 2, 3], vec![false; 4]).unwrap());
    assert!(d.pillars.is_empty() && d.is_partition(4));
}

#[test]
fn k3_pillar_from_explicit_row() {
    // base p₁,p₂,p₃ at −1/5 and x with ⟨x,p⟩ = (1,−1,−1)/5
    let a = eqlines::seidel::SeidelMatrix::from_rows(&[
        vec![0, -1, -1, 1],
        vec![-1, 0, -1, -1],
        vec![-1, -1, 0, -1],
        vec![1, -1, -1, 0],
    ])
    .unwrap();
    let e = EquiangularSet::new(ExactScalar::Q(r(1, 5)), a).unwrap();
    let base = KBase::new(&e, vec![0, 1, 2], vec![false; 3]).unwrap();
    let (eps, flipped) = sign_vector(&e, &base, 3);
    assert_eq!((eps.to_string(), eps.plus_count(), flipped), ("+--".to_string(), 1, false));
}
