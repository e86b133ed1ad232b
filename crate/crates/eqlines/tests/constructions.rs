use eqlines::constructions::*;
use eqlines::exactnum::{ExactScalar, Rational};
use eqlines::linalg::{int_rank_i64, psd_check, rank, AnyMatrix};
use eqlines::pillars::decompose;
use eqlines::seidel::{base_size, EquiangularSet, SeidelMatrix};

fn rank_any(m: &AnyMatrix) -> usize {
    match m {
        AnyMatrix::Q(g) => rank(g),
        AnyMatrix::Quad(g) => rank(g),
    }
}

#[test]
fn octad_counts_and_intersections() {
    let sys = golay_octads();
    assert_eq!(sys.octads_all.len(), 759);
    assert_eq!(sys.octads_through_1.len(), 253);
    for (i, a) in sys.octads_all.iter().enumerate() {
        assert_eq!(a.0.count_ones(), 8);
        for b in &sys.octads_all[i + 1..] {
            assert!([0, 2, 4].contains(&a.meet(b)));
        }
    }
}

#[test]
fn every_five_subset_in_exactly_one_octad() {
    let masks: Vec<u32> = golay_octads().octads_all.iter().map(|o| o.0).collect();
    let mut checked = 0;
    for s in 0u32..1 << 24 {
        if s.count_ones() != 5 {
            continue;
        }
        assert_eq!(masks.iter().filter(|&&o| o & s == s).count(), 1);
        checked += 1;
    }
    assert_eq!(checked, 42504);
}

#[test]
fn witt_system() {
    let w = witt276();
    assert_eq!(w.vectors.len(), 276);
    assert_eq!(w.normalized.len(), 276);
    for v in &w.vectors {
        // hyperplane 5x₁ + x₂ + … + x₂₄ = 0
        assert_eq!(5 * v[0] + v[1..].iter().sum::<i64>(), 0);
    }
    assert_eq!(w.normalized.rank, 23);
    // v₂..v₂₄ are independent
    let vs: Vec<Vec<i64>> = w.vectors[253..].iter().map(|v| v.to_vec()).collect();
    assert_eq!(int_rank_i64(&vs), 23);
    // every pair ±1/5: count the products directly from the integer vectors
    let mut pairs = 0;
    for i in 0..276 {
        for j in i + 1..276 {
            let ip = Rational::new(dot(&w.vectors[i], &w.vectors[j]), WITT_NORM_SQ);
            assert_eq!(ip.abs(), Rational::new(1, 5));
            assert_eq!(ip.signum(), w.normalized.seidel.get(i, j) as i32);
            pairs += 1;
        }
    }
    assert_eq!(pairs, 37950);
    assert_eq!(base_size(&w.normalized).unwrap().k, 6);
}

#[test]
fn witt_spectrum() {
    let w = witt276();
    let a = w.normalized.seidel.rows_i64();
    let shifted = |c: i64| -> Vec<Vec<i64>> {
        a.iter().enumerate().map(|(i, r)| r.iter().enumerate().map(|(j, &x)| x + if i == j { c } else { 0 }).collect()).collect()
    };
    // nullity 253 at −5
    assert_eq!(int_rank_i64(&shifted(5)), 23);
    // trace 0 and trace of A² = 276·275 force the other 23 eigenvalues to equal 55
    let tr2: i64 = a.iter().flatten().map(|x| x * x).sum();
    assert_eq!(tr2, 276 * 275);
    assert_eq!(253 * -5 + 23 * 55, 0);
    assert_eq!(253 * 25 + 23 * 55 * 55, tr2);
    assert_eq!(int_rank_i64(&shifted(-55)), 253);
}

#[test]
fn witt_pillars() {
    let w = witt276();
    let p = witt276_base_and_pillars(&w);
    let a = &w.normalized.seidel;
    for i in 0..6 {
        for j in i + 1..6 {
            let si = if i < 3 { 1 } else { -1 };
            let sj = if j < 3 { 1 } else { -1 };
            assert_eq!(si * sj * a.get(p.base[i], p.base[j]), -1);
        }
    }
    let d = &p.decomposition;
    assert!(d.is_partition(276));
    assert_eq!(d.pillars.len(), 10);
    for (eps, vs) in &d.pillars {
        assert_eq!(vs.len(), 27);
        assert_eq!(eps.plus_count(), 3);
    }
    assert_eq!(p.triangle_count(), 90);
    assert!(p.triangles.iter().all(|t| t.len() == 9));
    // after the p₆ normalization every non-base vector has inner product +1/5 with p₆
    let p6 = p.base[5];
    for (&x, &s) in &p.signs_toward_p6 {
        assert_eq!(s as i8 * -a.get(x, p6), 1);
    }
    assert_eq!(p.signs_toward_p6.len(), 270);
}

#[test]
fn paley_17_pipeline() {
    let b = paley_conference(17).unwrap();
    assert_eq!(b.order, 18);
    assert_eq!(b.order % 4, 2);
    assert!(b.squares_to_scalar());
    let e = conference_etf(&b).unwrap();
    assert_eq!((e.len(), e.rank), (18, 9));
    assert_eq!(e.alpha, inv_sqrt(17));
    // tight: α² = (M − r)/(r(M − 1))
    assert_eq!(e.alpha.square(), ExactScalar::Q(Rational::new(18 - 9, 9 * 17)));
    let sub: Vec<usize> = (0..17).collect();
    let sub = EquiangularSet::new(e.alpha.clone(), e.seidel.principal(&sub)).unwrap();
    assert_eq!(sub.rank, 9);
    assert_eq!(rank_any(&sub.gram()), 9);
    // any line may be dropped
    for drop in 0..18 {
        let idx: Vec<usize> = (0..18).filter(|&i| i != drop).collect();
        assert_eq!(rank_any(&e.seidel.principal(&idx).gram(&e.alpha)), 9);
    }
}

#[test]
fn paley_5_icosahedron() {
    let b = paley_conference(5).unwrap();
    assert_eq!(b.order, 6);
    let e = conference_etf(&b).unwrap();
    assert_eq!(e.rank, 3);
    match e.gram() {
        AnyMatrix::Quad(g) => assert!(psd_check(&g).verdict.is_psd()),
        AnyMatrix::Q(_) => panic!("angle 1/sqrt 5 is irrational"),
    }
    assert_eq!(base_size(&e).unwrap().k, 3);
}

#[test]
fn block_family_ranks() {
    for ell in 1..=6 {
        let m = block_52_family(ell).unwrap();
        assert_eq!(rank(&m), 2 * ell + 1, "ell = {ell}");
        assert!(psd_check(&m).verdict.is_psd());
        let lines = block_52_lines(ell).unwrap();
        assert_eq!(lines.rank, 2 * ell + 1);
        let k = base_size(&lines).unwrap().k;
        if ell >= 2 {
            assert_eq!(k, 6);
        }
    }
}

#[test]
fn simplex_decomposes_to_nothing() {
    let e = simplex_base(6, &ExactScalar::Q(Rational::new(1, 5))).unwrap();
    let bs = base_size(&e).unwrap();
    assert_eq!(bs.k, 6);
    let kb = eqlines::pillars::KBase::from_base_size(&e, &bs).unwrap();
    assert!(decompose(&e, &kb).pillars.is_empty());
    let _ = SeidelMatrix::from_rows(&e.seidel.rows_i64()).unwrap();
}
