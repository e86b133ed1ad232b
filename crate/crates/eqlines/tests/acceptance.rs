//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use eqlines::bounds::{
    coexistence_check, k3_bound, k5_bound, neumann_candidates, pillar_coexistence_bound, relative_bound, table2,
    CoexistenceInstance,
};
use eqlines::cli::{reproduce_mstar, reproduce_table2, reproduce_table3};
use eqlines::constructions::{
    block_52_family, block_52_lines, conference_etf, paley_conference, simplex_base, witt276, witt276_base_and_pillars,
};
use eqlines::exactnum::{ExactScalar, Rational};
use eqlines::linalg::{int_rank_i64, psd_by_minors_i128, psd_check, rank, SymMatrix};
use eqlines::pillars::{decompose, KBase};
use eqlines::saturate::*;
use eqlines::seidel::canon::graph_classes;
use eqlines::seidel::{
    base_size, base_size_exhaustive, clique_number_exhaustive, max_clique, EquiangularSet, Graph, SeidelMatrix,
    SwitchingOp,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    ensure(start.elapsed() < limit, || format!("took {:?}, limit {:?}", start.elapsed(), limit))
}

fn q(a: i64, b: i64) -> ExactScalar {
    ExactScalar::Q(Rational::new(a, b))
}

fn coexistence() -> Check {
    for (n, want) in [(2u64, 24u64), (3, 72), (4, 200)] {
        let t = Instant::now();
        let rep = pillar_coexistence_bound(n).map_err(|e| e.to_string())?;
        within(t, Duration::from_secs(1))?;
        ensure(rep.int() == Some(want), || format!("n = {n}: got {:?}", rep.int()))?;
        let ell: Vec<u64> = serde_json::from_value(rep.certificate["ell"].clone()).map_err(|e| e.to_string())?;
        let inst = CoexistenceInstance { n, ell: ell.try_into().map_err(|_| "ell has four entries")? };
        ensure(coexistence_check(&inst).feasible, || format!("n = {n}: certificate infeasible"))?;
        ensure(inst.size() == want, || format!("n = {n}: certificate size {}", inst.size()))?;
    }
    Ok(())
}

fn table2_rows() -> Check {
    let t = Instant::now();
    let rep = reproduce_table2(false);
    within(t, Duration::from_secs(300))?;
    ensure(rep.matches(), || format!("differs from pinned rows: {:?}", rep.diff))?;
    let tab = table2();
    ensure(tab.rows.len() == 40 && tab.rows.iter().enumerate().all(|(i, r)| r.t1111 == i as u32), || {
        "rows are not t1111 = 0..39".into()
    })?;
    ensure(tab.max_m == 54, || format!("global max {}", tab.max_m))
}

fn class_caps() -> Check {
    let tab = table2();
    ensure(tab.single_caps == [9, 7, 7, 9, 39], || format!("single caps {:?}", tab.single_caps))?;
    ensure(tab.class_caps == [16, 13, 16], || format!("class caps {:?}", tab.class_caps))
}

fn aggregate_bounds() -> Check {
    let v = |r: Result<eqlines::bounds::BoundReport, eqlines::bounds::BoundError>| r.ok().and_then(|b| b.int());
    ensure(v(k3_bound(23)) == Some(165), || "k3_bound(23)".into())?;
    ensure(v(k5_bound(23)) == Some(272), || "k5_bound(23)".into())?;
    ensure(v(k5_bound(300)) == Some(412), || "k5_bound(300)".into())
}

fn witt_construction() -> Check {
    let t = Instant::now();
    let w = witt276();
    ensure(w.octads_all.len() == 759, || format!("{} octads", w.octads_all.len()))?;
    ensure(w.octads_through_1.len() == 253, || format!("{} through point 1", w.octads_through_1.len()))?;
    ensure(w.normalized.len() == 276, || format!("{} lines", w.normalized.len()))?;
    let rows: Vec<Vec<i64>> = w.vectors.iter().map(|v| v.to_vec()).collect();
    ensure(int_rank_i64(&rows) == 23 && w.normalized.rank == 23, || "rank is not 23".into())?;
    let mut pairs = 0usize;
    for i in 0..276 {
        ensure(eqlines::constructions::dot(&w.vectors[i], &w.vectors[i]) == 80, || format!("norm of {i}"))?;
        for j in i + 1..276 {
            let d = eqlines::constructions::dot(&w.vectors[i], &w.vectors[j]);
            ensure(d.abs() == 16, || format!("pair ({i}, {j}) has inner product {d}/80"))?;
            let s = w.normalized.seidel.get(i, j) as i64;
            ensure(d == 16 * s, || format!("Seidel sign at ({i}, {j})"))?;
            pairs += 1;
        }
    }
    ensure(pairs == 37950, || format!("{pairs} pairs"))?;
    let bs = base_size(&w.normalized).map_err(|e| e.to_string())?;
    ensure(bs.k == 6, || format!("base size {}", bs.k))?;
    let p = witt276_base_and_pillars(&w);
    let sizes: Vec<usize> = p.decomposition.pillars.values().map(Vec::len).collect();
    ensure(sizes == vec![27; 10], || format!("pillar sizes {sizes:?}"))?;
    ensure(p.triangle_count() == 90, || format!("{} triangles", p.triangle_count()))?;
    within(t, Duration::from_secs(120))
}

fn witt_spectrum() -> Check {
    let t = Instant::now();
    let w = witt276();
    let a = w.normalized.seidel.rows_i64();
    let shifted = |c: i64| -> Vec<Vec<i64>> {
        a.iter().enumerate().map(|(i, r)| r.iter().enumerate().map(|(j, &x)| x + if i == j { c } else { 0 }).collect()).collect()
    };
    let (r5, r55) = (int_rank_i64(&shifted(5)), int_rank_i64(&shifted(-55)));
    // nullities 253 and 23 fill all 276 dimensions; tr A = 0 = −5·253 + 55·23
    ensure(r5 == 23, || format!("rank(A + 5I) = {r5}"))?;
    ensure(r55 == 253, || format!("rank(A − 55I) = {r55}"))?;
    ensure((276 - r5) + (276 - r55) == 276 && -5 * (276 - r5) as i64 + 55 * (276 - r55) as i64 == 0, || {
        "multiplicities inconsistent with the trace".into()
    })?;
    within(t, Duration::from_secs(300))
}

fn rank8_pipeline() -> Check {
    let t = Instant::now();
    ensure(class_codes(7).len() == 1044, || format!("{} classes", class_codes(7).len()))?;
    let scan = enumerate_pd_bases(8, &q(1, 3)).map_err(|e| e.to_string())?;
    ensure(scan.seeds.len() == 3, || format!("{} seeds", scan.seeds.len()))?;
    let mut totals = scan.seeds.iter().map(|s| saturate_seed(s).map(|r| r.total)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
    totals.sort_unstable();
    ensure(totals == vec![8, 14, 14], || format!("totals {totals:?}"))?;
    let res = m_alpha(8, &q(1, 3)).map_err(|e| e.to_string())?;
    ensure(res.value == 14, || format!("value {}", res.value))?;
    let u = uniqueness_check_8_third().map_err(|e| e.to_string())?;
    ensure(u.all_equivalent && u.witnesses.len() == 1, || "no switching witness between the two maxima".into())?;
    let a = SeidelMatrix::from_rows(&res.best[0].realized.seidel).map_err(|e| e.to_string())?;
    let b = SeidelMatrix::from_rows(&res.best[1].realized.seidel).map_err(|e| e.to_string())?;
    ensure(u.witnesses[0].apply(&b) == a, || "witness does not map one maximum onto the other".into())?;
    within(t, Duration::from_secs(600))
}

fn small_rank_maxima() -> Check {
    let t = Instant::now();
    let rep = reproduce_table3().map_err(|e| format!("{e:?}"))?;
    ensure(rep.matches(), || format!("differs from pinned cells: {:?}", rep.diff))?;
    for line in rep.text.lines().skip(1) {
        let f: Vec<&str> = line.split(' ').collect();
        let r: usize = f[0].parse().unwrap();
        ensure(f[2].parse::<usize>().unwrap() >= r, || format!("{line}: below the rank"))?;
    }
    within(t, Duration::from_secs(1800))
}

fn largest_over_angles() -> Check {
    for (r, want) in [(8, 14), (9, 18), (10, 18)] {
        let rep = m_star(r, false).map_err(|e| e.to_string())?;
        ensure(rep.certified && rep.value == Some(want), || format!("r = {r}: {:?}", rep.value))?;
    }
    ensure(relative_bound(9, &q(1, 7)) == Ok(10), || "relative_bound(9, 1/7)".into())?;
    let r8 = m_star(8, false).map_err(|e| e.to_string())?;
    let listed: Vec<String> =
        r8.audit.iter().filter(|a| a.method != AngleMethod::AtMostRank).map(|a| a.alpha.to_string()).collect();
    ensure(listed == ["1/3", "1/5", "1/7"], || format!("angles checked at rank 8: {listed:?}"))?;
    let r10 = m_star(10, false).map_err(|e| e.to_string())?;
    ensure(r10.audit.iter().skip(1).all(|a| a.relative_bound.is_some_and(|v| v <= 16)), || {
        "rank 10: some angle 1/(2n+1), n >= 2, is not capped at 16".into()
    })?;
    let rep = reproduce_mstar().map_err(|e| format!("{e:?}"))?;
    ensure(rep.matches(), || format!("audit differs from pinned copy: {:?}", rep.diff))
}

fn paley_and_candidates() -> Check {
    let c = paley_conference(17).map_err(|e| e.to_string())?;
    ensure(c.squares_to_scalar(), || "B² ≠ 17I".into())?;
    let sq = c.square();
    ensure((0..18).all(|i| (0..18).all(|j| sq[i][j] == if i == j { 17 } else { 0 })), || "B² entries".into())?;
    ensure(c.order == 18 && c.order % 4 == 2, || format!("order {}", c.order))?;
    let e = conference_etf(&c).map_err(|e| e.to_string())?;
    ensure(e.len() == 18 && e.rank == 9, || format!("{} lines of rank {}", e.len(), e.rank))?;
    let sub = e.seidel.principal(&(1..18).collect::<Vec<_>>());
    let e17 = EquiangularSet::new(e.alpha.clone(), sub).map_err(|e| e.to_string())?;
    ensure(e17.rank == 9, || format!("17-line subsystem has rank {}", e17.rank))?;
    let listed: Vec<(i64, i64)> = vec![
        (-2, -7), (-2, -6), (-2, -5), (-2, -4), (-2, -2), (-2, -1), (-1, -13),
        (-1, -11), (-1, -10), (-1, -9), (-1, -8), (-1, -7), (-1, -5), (-1, -4),
        (-1, -3), (-1, -1), (0, -15), (0, -14), (0, -13), (0, -12), (0, -11),
        (0, -10), (0, -8), (0, -7), (0, -6), (0, -5), (0, -3), (0, -2), (1, -13),
        (1, -11), (1, -10), (1, -9), (1, -8), (1, -7), (1, -5), (1, -4), (1, -3),
        (1, -1), (2, -7), (2, -6), (2, -5), (2, -4), (2, -2), (2, -1),
    ];
    let got: Vec<(i64, i64)> = neumann_candidates().iter().map(|c| (c.c1, c.c2)).collect();
    ensure(got == listed, || format!("{} candidates, first difference at {:?}", got.len(), got.iter().zip(&listed).position(|(a, b)| a != b)))
}

fn random_symmetric(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let n = rng.gen_range(1..=7);
    if rng.gen_bool(0.5) {
        let m = rng.gen_range(1..=7);
        let b: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let d = rng.gen_range(0..3);
        (0..n).map(|i| (0..n).map(|j| b.iter().map(|r| r[i] * r[j]).sum::<i64>() - if i == j { d } else { 0 }).collect()).collect()
    } else {
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i..n {
                let v = rng.gen_range(-3..=3);
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        m
    }
}

fn properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in 0..10_000 {
        let m = random_symmetric(&mut rng);
        let g = SymMatrix::from_rows(m.iter().map(|r| r.iter().map(|&v| Rational::from_int(v)).collect()).collect()).unwrap();
        let wide: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
        ensure(psd_check(&g).verdict.is_psd() == psd_by_minors_i128(&wide), || format!("PSD disagreement on matrix {k}: {m:?}"))?;
    }
    let alpha = q(1, 11);
    for k in 0..300 {
        let n = rng.gen_range(2..=10);
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.5) {
                    g.add_edge(i, j);
                }
            }
        }
        let a = SeidelMatrix::from_graph(&g);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let flips = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let op = SwitchingOp { sign_flips: SwitchingOp::flips(n, flips).sign_flips, permutation: perm };
        let b = op.apply(&a);
        ensure(a.char_poly() == b.char_poly(), || format!("charpoly changed under switching ({k})"))?;
        let ka = base_size(&EquiangularSet::new(alpha.clone(), a.clone()).unwrap()).unwrap().k;
        let kb = base_size(&EquiangularSet::new(alpha.clone(), b).unwrap()).unwrap().k;
        ensure(ka == kb && ka == base_size_exhaustive(&a), || format!("base size changed under switching ({k})"))?;
    }
    for n in 1..=8 {
        for g in graph_classes(n) {
            let (w, clique) = max_clique(&g);
            ensure(w == clique_number_exhaustive(&g) && g.is_clique(&clique) && clique.len() == w, || {
                format!("clique mismatch on {n} vertices")
            })?;
        }
    }
    let mut fixtures: Vec<EquiangularSet> = (1..=4).map(|l| block_52_lines(l).unwrap()).collect();
    fixtures.push(conference_etf(&paley_conference(5).unwrap()).unwrap());
    fixtures.push(conference_etf(&paley_conference(13).unwrap()).unwrap());
    fixtures.push(simplex_base(4, &q(1, 3)).unwrap());
    for b in m_alpha(8, &q(1, 3)).unwrap().best.iter().chain(&m_alpha(8, &q(1, 5)).unwrap().best) {
        fixtures.push(EquiangularSet::from_json(&b.realized).unwrap());
    }
    fixtures.push(witt276().normalized.clone());
    for (i, e) in fixtures.iter().enumerate() {
        let base = KBase::from_base_size(e, &base_size(e).unwrap()).map_err(|e| e.to_string())?;
        let d = decompose(e, &base);
        ensure(d.is_partition(e.len()) && d.within_count_caps(), || format!("fixture {i}: not a partition"))?;
        ensure(d.k1_violation(&e.seidel).is_none(), || format!("fixture {i}: -alpha inside a (K,1) pillar"))?;
    }
    for ell in 1..=6 {
        let r = rank(&block_52_family(ell).unwrap());
        ensure(r == 2 * ell + 1, || format!("block family rank {r} at ell = {ell}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("coexistence bound n = 2, 3, 4", coexistence),
        ("two (3,1) pillar table, rows 0..39", table2_rows),
        ("degree-class and single-variable caps", class_caps),
        ("K = 3 / K = 5 aggregate bounds", aggregate_bounds),
        ("276 lines from the Golay octads", witt_construction),
        ("Seidel spectrum of the 276 lines", witt_spectrum),
        ("rank 8, angle 1/3 saturation pipeline", rank8_pipeline),
        ("small-rank maxima per angle", small_rank_maxima),
        ("largest sets over all angles, ranks 8-10", largest_over_angles),
        ("Paley 17 frame and irrational candidates", paley_and_candidates),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.1} s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.1} s): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
