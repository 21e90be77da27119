//! End-to-end acceptance run: every criterion is checked exactly, timed
//! against its budget, and reported on one line.

mod common;

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use toda_core::annular::{build_ni, hamiltonian_paths, mtuple_exponent, mtuple_oracle};
use toda_core::cli::{first_difference, hamiltonian, Method};
use toda_core::cluster::{build_qn, laurent_closure, SeedA, SeedX};
use toda_core::exactalg::LaurentPoly;
use toda_core::jacobian::{
    build_coefficient_quiver, build_module_matrices, cluster_character, enumerate_submodules,
    framed_generating_function, Lambda,
};
use toda_core::network::trajectory::start_grid;
use toda_core::network::walls::scan_phases;
use toda_core::network::{
    bps_spectrum_of, build_network_graph, holonomy_trace_for, lift_path, quadratic_refinement, theta_scan,
    trace_trajectory, HomologyClass,
};
use toda_core::toda::{hamiltonian_matrix, Coords, TodaRing};

type Outcome = Result<String, String>;

const METHODS: [Method; 4] = [Method::Matrix, Method::Paths, Method::Cc, Method::Network];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(label: &str, got: &LaurentPoly, want: &LaurentPoly) -> Result<(), String> {
    ensure(got == want, || format!("{label}: differs at {}", first_difference(want, got).unwrap_or_default()))
}

fn all_methods(n: usize, k: usize, want: &LaurentPoly) -> Result<(), String> {
    for m in METHODS {
        let got = hamiltonian(n, k, m, Coords::X, None).map_err(|e| e.to_string())?;
        same(&format!("n={n} H{k} by {m:?}"), &got, want)?;
    }
    Ok(())
}

fn rank_one() -> Outcome {
    let w = common::rank_one();
    all_methods(1, 1, &w.in_x())?;
    let e = |r: Result<LaurentPoly, String>| r;
    same("y-form", &e(hamiltonian_matrix(1, 1, Coords::Y).map_err(|e| e.to_string()))?, &w.in_y())?;
    Ok(format!("H1 = {}", w.in_x()))
}

fn rank_two() -> Outcome {
    let tr = TodaRing::new(2).map_err(|e| e.to_string())?;
    let ws = common::rank_two();
    for (j, image) in ws[0].y_in_x.iter().enumerate() {
        let y = LaurentPoly::var(&tr.y, j);
        let x = LaurentPoly::monomial(&tr.x, image.clone(), 1.into());
        same(&format!("y{} in x", j + 1), &tr.to_x(&y).map_err(|e| e.to_string())?, &x)?;
    }
    for (k, w) in (1..).zip(&ws) {
        all_methods(2, k, &w.in_x())?;
        let y = hamiltonian_matrix(2, k, Coords::Y).map_err(|e| e.to_string())?;
        same(&format!("H{k} y-form"), &y, &w.in_y())?;
        same(&format!("H{k} paths y-form"), &hamiltonian_paths(2, k).map_err(|e| e.to_string())?, &w.in_y())?;
    }
    Ok("H1, H2 and the y-to-x map agree".into())
}

fn three_methods() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        let tr = TodaRing::new(n).map_err(|e| e.to_string())?;
        for k in 1..=n {
            let m = hamiltonian_matrix(n, k, Coords::X).map_err(|e| e.to_string())?;
            let p = tr.to_x(&hamiltonian_paths(n, k).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let c = cluster_character(n, k).map_err(|e| e.to_string())?;
            same(&format!("paths n={n} k={k}"), &p, &m)?;
            same(&format!("cc n={n} k={k}"), &c, &m)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, k) pairs"))
}

fn network_traces() -> Outcome {
    let mut splittings = 0;
    for sheets in 2..=6 {
        ensure(scan_phases(sheets).len() == 4 * (sheets + 1), || "scan size".into())?;
        let reference: Vec<LaurentPoly> = (1..sheets)
            .map(|k| hamiltonian_matrix(sheets - 1, k, Coords::X))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for (theta, s) in theta_scan(sheets).map_err(|e| e.to_string())? {
            for k in 1..sheets {
                let h = holonomy_trace_for(&s, k).map_err(|e| e.to_string())?;
                same(&format!("N={sheets} k={k} theta={theta:.4} {}", s.fingerprint()), &h, &reference[k - 1])?;
            }
            splittings += 1;
        }
    }
    Ok(format!("{splittings} splittings"))
}

fn submodule_count() -> Outcome {
    let (n, i) = (5, 3);
    let g = build_coefficient_quiver(n, i).map_err(|e| e.to_string())?;
    ensure(g.vertices.len() == 18, || format!("dimension {}", g.vertices.len()))?;
    let dims: BTreeSet<Vec<i64>> =
        enumerate_submodules(&g).into_iter().map(|d| d.into_iter().map(|x| x as i64).collect()).collect();
    let tuples: BTreeSet<Vec<i64>> = mtuple_oracle(n, i).iter().map(|m| mtuple_exponent(n, m)).collect();
    let base = mtuple_exponent(
        n,
        mtuple_oracle(n, i).iter().min_by_key(|m| mtuple_exponent(n, m).iter().sum::<i64>()).unwrap(),
    );
    let shifted: BTreeSet<Vec<i64>> =
        tuples.iter().map(|e| e.iter().zip(&base).map(|(a, b)| a - b).collect()).collect();
    ensure(dims == shifted, || "dimension vectors differ from the m-tuples".into())?;
    let m = build_module_matrices(n, i, Lambda::new(2, 3).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(m.submodule_dimension_vectors().len() == dims.len(), || "concrete module disagrees".into())?;
    ensure(dims.len() == 61, || {
        format!("dimension 18 and dimension vectors = m-tuples, but {} submodules (expected 61)", dims.len())
    })?;
    Ok("dimension 18, 61 submodules".into())
}

fn bps_quivers() -> Outcome {
    let mut count = 0;
    for sheets in 2..=8 {
        let qn = build_qn(sheets - 1).map_err(|e| e.to_string())?;
        for (theta, s) in theta_scan(sheets).map_err(|e| e.to_string())? {
            let q = bps_spectrum_of(&s).map_err(|e| e.to_string())?.quiver;
            ensure(q == qn, || format!("N={sheets} theta={theta:.4}: quiver is not Q_{}", sheets - 1))?;
            count += 1;
        }
    }
    Ok(format!("{count} splittings give Q_(N-1)"))
}

fn framed_potential() -> Outcome {
    for n in 1..=5 {
        for k in 1..=n {
            let f = framed_generating_function(n, k).map_err(|e| e.to_string())?;
            let c = cluster_character(n, n + 1 - k).map_err(|e| e.to_string())?;
            same(&format!("n={n} k={k}"), &f, &c)?;
        }
    }
    Ok("15 identities".into())
}

fn relations() -> Outcome {
    let mut modules = 0;
    for n in 1..=4 {
        for i in 1..=n {
            for l in Lambda::samples() {
                let m = build_module_matrices(n, i, l).map_err(|e| e.to_string())?;
                ensure(m.relations_hold(), || format!("n={n} i={i} lambda={l}: {:?}", m.relation_failures()))?;
                modules += 1;
            }
        }
    }
    Ok(format!("{modules} modules"))
}

fn mutations() -> Outcome {
    let mut seeds = 0;
    for n in 1..=3 {
        let q = build_qn(n).map_err(|e| e.to_string())?;
        let a = SeedA::initial(&q);
        let x = SeedX::initial(&q);
        for k in 1..=q.n() {
            let err = |e: toda_core::cluster::ClusterError| e.to_string();
            ensure(q.mutate(k).map_err(err)?.mutate(k).map_err(err)? == q, || format!("quiver n={n} k={k}"))?;
            ensure(a.mutate(k).map_err(err)?.mutate(k).map_err(err)? == a, || format!("A-seed n={n} k={k}"))?;
            ensure(x.mutate(k).map_err(err)?.mutate(k).map_err(err)? == x, || format!("X-seed n={n} k={k}"))?;
        }
        seeds += laurent_closure(&q, 5).map_err(|e| e.to_string())?;
    }
    Ok(format!("{seeds} seeds, all Laurent"))
}

fn trajectories() -> Outcome {
    let mut entering = 0;
    for sheets in 2..=4 {
        for z0 in start_grid(20, 1.9) {
            let t = trace_trajectory(sheets, -PI / 2.0, z0, 0.01, 6.0).map_err(|e| e.to_string())?;
            ensure(t.conforms(1e-9), || format!("N={sheets} start {z0}"))?;
            entering += usize::from(t.entry_index().is_some());
        }
    }
    Ok(format!("{entering} entering trajectories shrink monotonically"))
}

fn refinement() -> Outcome {
    let pairs = (1usize..=7).prop_flat_map(|r| {
        let c = move || {
            (prop::collection::vec(-9i64..=9, r), prop::collection::vec(-9i64..=9, r))
                .prop_map(|(a, b)| HomologyClass { a, b })
        };
        (c(), c())
    });
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    runner
        .run(&pairs, |(x, y)| {
            let sign = if x.pairing(&y).rem_euclid(2) == 0 { 1 } else { -1 };
            prop_assert_eq!(
                quadratic_refinement(&x.add(&y)),
                quadratic_refinement(&x) * quadratic_refinement(&y) * sign
            );
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    let mut monomials = 0;
    for sheets in 2..=6 {
        for (_, s) in theta_scan(sheets).map_err(|e| e.to_string())? {
            let m = lift_path(&s).map_err(|e| e.to_string())?;
            for i in 0..sheets {
                for (e, _) in m.get(i, i).terms() {
                    let c = HomologyClass::from_exponents(e);
                    ensure(quadratic_refinement(&c) == 1, || format!("N={sheets}: spin -1 on {c}"))?;
                    monomials += 1;
                }
            }
        }
    }
    Ok(format!("1000 pairs, {monomials} diagonal monomials"))
}

fn graph_moves() -> Outcome {
    let mut moves = 0;
    for n in 1..=4 {
        let g = build_ni(n).map_err(|e| e.to_string())?;
        let base = TodaRing::new(n).map_err(|e| e.to_string())?.base_weight();
        let gf = |h: &toda_core::annular::AnnularGraph, k| h.generating_function(k, &base).map_err(|e| e.to_string());
        for (u, v) in g.movable_sites() {
            let h = g.apply_move(u, v).map_err(|e| e.to_string())?;
            for k in 1..=n {
                same(&format!("n={n} move ({u},{v}) k={k}"), &gf(&h, k)?, &gf(&g, k)?)?;
            }
            moves += 1;
        }
    }
    for sheets in 3..=4 {
        let ni = build_ni(sheets - 1).map_err(|e| e.to_string())?;
        let base = TodaRing::new(sheets - 1).map_err(|e| e.to_string())?.base_weight();
        for (theta, s) in theta_scan(sheets).map_err(|e| e.to_string())? {
            let nw = build_network_graph(&s).map_err(|e| e.to_string())?.graph;
            let seq = nw
                .moves_to(&ni.normal_form(), 2 * sheets)
                .ok_or_else(|| format!("N={sheets} theta={theta:.4}: normal form not reached"))?;
            let mut h = nw.clone();
            for (u, v) in seq {
                h = h.apply_move(u, v).map_err(|e| e.to_string())?;
                for k in 1..sheets {
                    let a = h.generating_function(k, &base).map_err(|e| e.to_string())?;
                    let b = nw.generating_function(k, &base).map_err(|e| e.to_string())?;
                    same(&format!("N={sheets} k={k}"), &a, &b)?;
                }
                moves += 1;
            }
            ensure(h.normal_form() == ni.normal_form(), || "normal form".into())?;
        }
    }
    Ok(format!("{moves} moves checked"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "rank-1 Hamiltonian, four methods", budget: secs(1), run: rank_one },
        Criterion { id: 2, name: "rank-2 Hamiltonians and coordinate map", budget: secs(1), run: rank_two },
        Criterion { id: 3, name: "matrix = paths = cluster character, n <= 6", budget: secs(60), run: three_methods },
        Criterion { id: 4, name: "holonomy traces, N = 2..6", budget: secs(120), run: network_traces },
        Criterion { id: 5, name: "submodules of M_3 over J(Q_5, W_5)", budget: secs(5), run: submodule_count },
        Criterion { id: 6, name: "BPS quiver is Q_(N-1), N = 2..8", budget: secs(5), run: bps_quivers },
        Criterion { id: 7, name: "framed potential identity, n <= 5", budget: secs(10), run: framed_potential },
        Criterion { id: 8, name: "module relations, n <= 4", budget: secs(10), run: relations },
        Criterion { id: 9, name: "mutation involution and Laurent phenomenon", budget: secs(30), run: mutations },
        Criterion { id: 10, name: "wall trajectories shrink inside the disk", budget: secs(30), run: trajectories },
        Criterion { id: 11, name: "quadratic refinement", budget: None, run: refinement },
        Criterion { id: 12, name: "graph moves", budget: None, run: graph_moves },
    ];
    let mut failed = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let over = c.budget.filter(|b| elapsed > *b);
        let (status, detail) = match (&result, over) {
            (Ok(d), None) => ("PASS", d.clone()),
            (Ok(d), Some(b)) => ("FAIL", format!("{d}; over the {:.0} s budget", b.as_secs_f64())),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        let budget = c.budget.map(|b| format!(" / {:.0} s", b.as_secs_f64())).unwrap_or_default();
        println!("criterion {:>2} {status} [{:.3} s{budget}] {}: {detail}", c.id, elapsed.as_secs_f64(), c.name);
        if status == "FAIL" {
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("all {} criteria pass", criteria.len());
    } else {
        println!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
