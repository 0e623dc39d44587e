//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Every tolerance is pinned here in code.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use csz_core::bounds::{
    linear_cap_report, max_degree_count_bound, root_consistency_report, root_floor_ceil_report,
    tridegreed_bound_check, weighted_square_gap_check, within_max_degree_count_bound,
};
use csz_core::csz::{csz, csz_via_partition, delta_add_edge_maxdeg, delta_remove_max_min, delta_remove_min_min};
use csz_core::graph::Graph;
use csz_core::graph6::from_graph6;
use csz_core::join::{bracket_continuous_max, df_dx, f_cont, k_table, optimal_k};
use csz_core::oeis::{parse_response, MatchMode, OeisClient, SequenceQuery};
use csz_core::search::{
    enumerate_extremal, for_each_connected_graph, for_each_universal_graph, random_connected,
    verify_conjecture, SearchConfig, SearchMode,
};

fn criterion(number: u32, label: &str, ok: bool) {
    println!("criterion {number:2} ({label}): {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {number} ({label}) failed");
}

/// Optimal clique part sizes for orders 5..=149, one value per order.
const K_TABLE_REFERENCE: [usize; 145] = [
    2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 6, 6, 6, 7, 7, 8, 8, 8, 9, 9, 10, 10, 10, 11, 11, 12, 12, 12,
    13, // n = 5..=33
    13, 13, 14, 14, 15, 15, 15, 16, 16, 17, 17, 17, 18, 18, 19, 19, 19, 20, 20, 21, 21, 21, 22,
    22, 22, 23, 23, 24, 24, // n = 34..=62
    24, 25, 25, 26, 26, 26, 27, 27, 28, 28, 28, 29, 29, 29, 30, 30, 31, 31, 31, 32, 32, 33, 33,
    33, 34, 34, 35, 35, 35, // n = 63..=91
    36, 36, 37, 37, 37, 38, 38, 38, 39, 39, 40, 40, 40, 41, 41, 42, 42, 42, 43, 43, 44, 44, 44,
    45, 45, 45, 46, 46, 47, // n = 92..=120
    47, 47, 48, 48, 49, 49, 49, 50, 50, 51, 51, 51, 52, 52, 53, 53, 53, 54, 54, 54, 55, 55, 56,
    56, 56, 57, 57, 58, 58, // n = 121..=149
];

#[test]
fn criterion_01_k_table_reproduction() {
    let start = Instant::now();
    let rows = k_table(5, 149).expect("range valid");
    let elapsed = start.elapsed();

    // The published table lists one k per order; ties are resolved toward
    // the smallest maximizer and surfaced as findings, not silently.
    let mut ok = rows.len() == 145;
    let mut ties = Vec::new();
    for (row, &want) in rows.iter().zip(K_TABLE_REFERENCE.iter()) {
        if row.is_tie() {
            println!(
                "  finding: argmax tie at n={}: {:?} all reach {}",
                row.n, row.best_k, row.best_value
            );
            ties.push(row.n);
        }
        if row.best_k.first() != Some(&want) {
            println!("  mismatch at n={}: got {:?}, reference {}", row.n, row.best_k, want);
            ok = false;
        }
    }
    // The full-range tie census; anything new here is a real change.
    ok &= ties == vec![12, 117];
    for (n, want) in [(5, 2), (36, 14), (92, 36), (100, 39), (149, 58)] {
        ok &= rows[n - 5].best_k.first() == Some(&want);
    }
    let fast = elapsed.as_secs_f64() < 1.0;
    if !fast {
        println!("  runtime {elapsed:?} exceeds 1 s");
    }
    criterion(1, "k-table reproduction, 145 rows, ties reported, < 1 s", ok && fast);
}

#[test]
fn criterion_02_brute_force_conjecture() {
    let mut ok = true;
    let expected: [(usize, SearchMode, Vec<usize>); 6] = [
        (4, SearchMode::Unrestricted, vec![1]),
        (5, SearchMode::Unrestricted, vec![2]),
        (6, SearchMode::Unrestricted, vec![2]),
        (7, SearchMode::Unrestricted, vec![3]),
        (8, SearchMode::UniversalVertex, vec![3]),
        (9, SearchMode::UniversalVertex, vec![3]),
    ];
    for (n, mode, want_k) in expected {
        let mut cfg = SearchConfig::new(n, mode);
        cfg.shard_count = 8;
        let check = verify_conjecture(&cfg).expect("within caps");
        let good = check.holds && check.report.witness_k == want_k;
        if !good {
            println!(
                "  n={n} {}: holds={} witness_k={:?} (want {:?})",
                mode.as_str(),
                check.holds,
                check.report.witness_k,
                want_k
            );
        }
        ok &= good;
    }
    criterion(2, "brute-force conjecture n=4..7 plus universal n=8,9", ok);
}

#[test]
fn criterion_03_mode_soundness() {
    let mut ok = true;
    for n in [5, 6, 7] {
        let unrestricted =
            enumerate_extremal(&SearchConfig::new(n, SearchMode::Unrestricted)).unwrap();
        let universal =
            enumerate_extremal(&SearchConfig::new(n, SearchMode::UniversalVertex)).unwrap();
        let good = unrestricted.max_value == universal.max_value
            && unrestricted.witnesses == universal.witnesses
            && unrestricted.witness_k == universal.witness_k;
        if !good {
            println!("  n={n}: modes disagree");
        }
        ok &= good;
    }
    criterion(3, "unrestricted and universal-vertex modes agree for n=5,6,7", ok);
}

#[test]
fn criterion_04_delta_formula_exactness() {
    const INSTANCES: usize = 10_000;
    let mut ok = true;

    // Edge addition from a maximum-degree vertex: exact and positive.
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE01);
    let mut done = 0;
    while done < INSTANCES {
        let n = rng.random_range(4..=32);
        let p: f64 = rng.random_range(0.15..0.85);
        let Ok(g) = random_connected(n, p, rng.random()) else { continue };
        if g.max_degree() == n - 1 {
            continue;
        }
        let v = g.max_degree_vertices()[0];
        let Some(u) = (0..n).find(|&u| u != v && !g.has_edge(u, v)) else { continue };
        let closed = delta_add_edge_maxdeg(&g, v, u).unwrap();
        let direct = csz(&g.toggle_edge(u, v).unwrap()).get() as i64 - csz(&g).get() as i64;
        ok &= closed == direct && closed > 0;
        done += 1;
    }

    // Removal of a minimum-minimum edge: exact.
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE02);
    let mut done = 0;
    while done < INSTANCES {
        let n = rng.random_range(4..=32);
        let p: f64 = rng.random_range(0.15..0.85);
        let Ok(g) = random_connected(n, p, rng.random()) else { continue };
        let min = g.min_degree();
        let Some((x, y)) = g.edges().find(|&(x, y)| g.degree(x) == min && g.degree(y) == min)
        else {
            continue;
        };
        let closed = delta_remove_min_min(&g, x, y).unwrap();
        let direct = csz(&g.toggle_edge(x, y).unwrap()).get() as i64 - csz(&g).get() as i64;
        ok &= closed == direct;
        done += 1;
    }

    // Removal of a maximum-minimum edge on a graph with a universal vertex.
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE03);
    let mut done = 0;
    while done < INSTANCES {
        let n = rng.random_range(4..=32);
        let p: f64 = rng.random_range(0.15..0.85);
        let Ok(mut g) = random_connected(n, p, rng.random()) else { continue };
        for v in 1..n {
            if !g.has_edge(0, v) {
                g = g.toggle_edge(0, v).unwrap();
            }
        }
        if g.min_degree() == n - 1 {
            continue;
        }
        let y = (0..n).find(|&v| g.degree(v) == g.min_degree()).unwrap();
        let x = (0..n).find(|&v| g.degree(v) == n - 1 && g.has_edge(v, y)).unwrap();
        let closed = delta_remove_max_min(&g, x, y).unwrap();
        let direct = csz(&g.toggle_edge(x, y).unwrap()).get() as i64 - csz(&g).get() as i64;
        ok &= closed == direct;
        done += 1;
    }

    criterion(4, "delta formulas exact on 10^4 instances each, addition positive", ok);
}

#[test]
fn criterion_05_partition_formula_equivalence() {
    let mut ok = true;
    for n in 1..=7 {
        for_each_connected_graph(n, |g| {
            ok &= csz_via_partition(&g.degree_partition()) == csz(g);
        })
        .unwrap();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE05);
    for _ in 0..10_000 {
        let n = rng.random_range(1..=64);
        let p: f64 = rng.random_range(0.05..0.95);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        ok &= csz_via_partition(&g.degree_partition()) == csz(&g);
    }
    criterion(5, "partition formula equals definition on corpus and random graphs", ok);
}

#[test]
fn criterion_06_bound_sweeps() {
    let mut cap_ok = true;
    let mut root_ok = true;
    for n in 4..=10_000 {
        cap_ok &= linear_cap_report(n).holds;
        root_ok &= root_floor_ceil_report(n).holds;
    }
    for n in 4..=1_000 {
        root_ok &= root_consistency_report(n).holds;
    }

    let mut half_ok = true;
    let mut window_ok = true;
    for n in 5..=10_000 {
        let row = optimal_k(n).unwrap();
        let half = n.div_ceil(2);
        for &k in &row.best_k {
            half_ok &= k < half;
            // Open window (3n/10, 4n/10), exactly as claimed.
            if n >= 11 && !(10 * k > 3 * n && 10 * k < 4 * n) {
                println!(
                    "  violation: n={n} maximizer k={k} outside (3n/10, 4n/10) = ({}, {})",
                    3.0 * n as f64 / 10.0,
                    4.0 * n as f64 / 10.0
                );
                window_ok = false;
            }
        }
    }
    println!("  sub-check linear cap (bound < 5352n/10000): {}", pass_str(cap_ok));
    println!("  sub-check quadratic/root consistency: {}", pass_str(root_ok));
    println!("  sub-check every maximizer < ceil(n/2): {}", pass_str(half_ok));
    println!("  sub-check every maximizer in open (3n/10, 4n/10): {}", pass_str(window_ok));
    if !window_ok {
        println!("  note: the strict window is falsified at the orders above by exact");
        println!("  arithmetic; see argmax_window_corrected for the variant that holds.");
    }
    criterion(
        6,
        "bound sweeps to n=10^4 with zero violations",
        cap_ok && root_ok && half_ok && window_ok,
    );
}

fn pass_str(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// The window statement that exact arithmetic supports: every maximizer
/// satisfies 3n/10 < k <= 4n/10 except the n=12 tie partner k=5, the
/// boundary cases being k = 4n/10 exactly at n = 15, 20, 25, 30 and the
/// strict window holding for every maximizer from n = 31 on.
#[test]
fn argmax_window_corrected() {
    let mut exits = Vec::new();
    for n in 11..=10_000usize {
        for &k in &optimal_k(n).unwrap().best_k {
            if !(10 * k > 3 * n && 10 * k < 4 * n) {
                exits.push((n, k));
            }
        }
    }
    assert_eq!(exits, vec![(12, 5), (15, 6), (20, 8), (25, 10), (30, 12)]);
    for (n, k) in exits {
        // Each exit is a boundary hit or the documented tie partner.
        assert!(10 * k == 4 * n || (n == 12 && k == 5));
    }
    // Smallest maximizer never leaves the half-open window.
    for n in 11..=10_000usize {
        let k = optimal_k(n).unwrap().best_k[0];
        assert!(10 * k > 3 * n && 10 * k <= 4 * n, "n={n} k={k}");
    }
}

#[test]
fn criterion_07_derivative_and_bracket() {
    let mut ok = true;
    for y in 11..=10_000 {
        let y = y as f64;
        ok &= df_dx(0.373 * y, y) > 0.0;
        ok &= df_dx(0.391 * y, y) < 0.0;
        let b = bracket_continuous_max(y).unwrap();
        ok &= b.hi - b.lo <= 1e-9 * y;
        let root = b.midpoint();
        ok &= root >= 0.372 * y && root <= 0.392 * y;
    }

    // Central finite differences, relative to the derivative's natural
    // scale y(y-1)^2 so near-root points stay meaningful.
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE07);
    for _ in 0..1_000 {
        let y: f64 = rng.random_range(11.0..10_000.0);
        let x: f64 = rng.random_range(1.0..(y - 2.0));
        let h = 1e-4 * y;
        let fd = (f_cont(x + h, y) - f_cont(x - h, y)) / (2.0 * h);
        let df = df_dx(x, y);
        let scale = (y * (y - 1.0) * (y - 1.0)).max(df.abs()).max(fd.abs());
        ok &= (fd - df).abs() <= 1e-6 * scale;
    }
    criterion(7, "derivative signs, bracket in [0.372y, 0.392y], FD agreement", ok);
}

#[test]
fn criterion_08_square_gap_inequality_suite() {
    let mut ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE08);
    for _ in 0..1_000_000 {
        let a: f64 = rng.random_range(0.0..100.0);
        let b: f64 = rng.random_range(0.0..100.0);
        let c: f64 = rng.random_range(0.0..100.0);
        let mut xyz = [
            rng.random_range(0.0..100.0),
            rng.random_range(0.0..100.0),
            rng.random_range(0.0..100.0),
        ];
        xyz.sort_by(f64::total_cmp);
        let r = weighted_square_gap_check(a, b, c, xyz[0], xyz[1], xyz[2]).unwrap();
        ok &= r.holds;
    }
    // Equal outer weights collapse the inequality to an identity.
    for _ in 0..10_000 {
        let a: f64 = rng.random_range(0.0..100.0);
        let b: f64 = rng.random_range(0.0..100.0);
        let mut xyz = [
            rng.random_range(0.0..100.0),
            rng.random_range(0.0..100.0),
            rng.random_range(0.0..100.0),
        ];
        xyz.sort_by(f64::total_cmp);
        let r = weighted_square_gap_check(a, b, a, xyz[0], xyz[1], xyz[2]).unwrap();
        ok &= (r.lhs - r.rhs).abs() <= 1e-12 * r.lhs.abs().max(r.rhs.abs());
    }
    criterion(8, "square-gap inequality on 10^6 tuples, equality when outer weights tie", ok);
}

#[test]
fn criterion_09_tridegreed_instances() {
    let mut ok = true;
    // Every tridegreed graph with a universal vertex, orders 4..=8.
    for n in 4..=8 {
        for_each_universal_graph(n, |g| {
            if g.degree_partition().class_count() == 3 {
                let r = tridegreed_bound_check(g).expect("preconditions hold on this corpus");
                ok &= r.holds;
            }
        })
        .unwrap();
    }

    // Randomized constructions: clique joined to an independent set with a
    // partial matching inside the non-clique part.
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE09);
    for _ in 0..1_000 {
        let n = *[15usize, 20, 50].get(rng.random_range(0..3)).unwrap();
        let t = rng.random_range(1..=(n - 4));
        let rest = n - t;
        let m = rng.random_range(1..=((rest - 1) / 2));
        let mut edges = Vec::new();
        for u in 0..t {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        for i in 0..m {
            edges.push((t + 2 * i, t + 2 * i + 1));
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        assert_eq!(g.degree_partition().class_count(), 3, "construction is tridegreed");
        let r = tridegreed_bound_check(&g).unwrap();
        ok &= r.holds;
    }
    criterion(9, "tridegreed graphs stay below the join-family maximum", ok);
}

#[test]
fn criterion_10_extremal_witness_properties() {
    let mut ok = true;
    for (n, mode) in [
        (4, SearchMode::Unrestricted),
        (5, SearchMode::Unrestricted),
        (6, SearchMode::Unrestricted),
        (7, SearchMode::Unrestricted),
        (8, SearchMode::UniversalVertex),
    ] {
        let report = enumerate_extremal(&SearchConfig::new(n, mode)).unwrap();
        ok &= report.all_max_degree_full
            && report.no_adjacent_min_degree_pair
            && report.max_degree_count_within_bound;
        // Independent re-check on the deduplicated witnesses themselves.
        for w in &report.witnesses {
            let g = from_graph6(&w.graph6).unwrap();
            ok &= g.max_degree() == n - 1;
            let min = g.min_degree();
            ok &= !g.edges().any(|(u, v)| g.degree(u) == min && g.degree(v) == min);
            let k = g.max_degree_vertices().len();
            ok &= within_max_degree_count_bound(n, k);
            ok &= (k as f64) <= max_degree_count_bound(n);
        }
    }
    criterion(10, "witness structure: full degree, no min pair, count cap", ok);
}

#[test]
fn criterion_11_oeis_client() {
    let mut ok = true;

    let squares = include_str!("fixtures/oeis_squares.json");
    let empty = include_str!("fixtures/oeis_empty.json");
    let multi = include_str!("fixtures/oeis_multi.json");

    let q = SequenceQuery::new(vec![1, 4, 9, 16, 25, 36, 49], MatchMode::Subsequence).unwrap();
    match parse_response(squares, &q) {
        Ok(matches) => {
            ok &= matches.iter().any(|m| m.id == "A000290");
        }
        Err(e) => {
            println!("  squares fixture failed to parse: {e}");
            ok = false;
        }
    }
    ok &= parse_response(empty, &q).map(|m| m.is_empty()).unwrap_or(false);
    ok &= parse_response(multi, &q).map(|m| m.len() >= 2).unwrap_or(false);

    // The optimal-k sequence lookup is reported, never asserted: the
    // database contents can change after the fact.
    let terms: Vec<u64> =
        k_table(5, 35).unwrap().into_iter().map(|row| row.best_k[0] as u64).collect();
    let kq = SequenceQuery::new(terms.clone(), MatchMode::Subsequence).unwrap();
    let client = OeisClient::with_base_url("https://oeis.org".into());
    println!("  k-sequence query URL: {}", client.request_url(&kq));
    let fixture_outcome = parse_response(empty, &kq).unwrap();
    println!(
        "  OEIS REPORT (fixture): k-sequence {} -> {} match(es)",
        terms.iter().map(u64::to_string).collect::<Vec<_>>().join(","),
        fixture_outcome.len()
    );

    if std::env::var("CSZ_OEIS_LIVE").as_deref() == Ok("1") {
        let mut live = OeisClient::new();
        match live.query_sequence(&q) {
            Ok(matches) => {
                println!("  live squares control: {} match(es)", matches.len());
                ok &= !matches.is_empty();
            }
            Err(e) => {
                println!("  live squares control failed: {e}");
                ok = false;
            }
        }
        match live.query_sequence(&kq) {
            Ok(matches) => println!("  OEIS REPORT (live): k-sequence -> {} match(es)", matches.len()),
            Err(e) => println!("  OEIS REPORT (live): lookup error: {e}"),
        }
    } else {
        println!("  live control skipped (set CSZ_OEIS_LIVE=1 to enable)");
    }

    criterion(11, "OEIS fixtures parse hermetically, lookups reported", ok);
}

/// Round-trip identity over the enumerated corpus (module invariant, not a
/// numbered criterion).
#[test]
fn corpus_graph6_round_trip() {
    for n in 1..=6 {
        for_each_connected_graph(n, |g| {
            let enc = csz_core::graph6::to_graph6(g);
            assert_eq!(&from_graph6(&enc).unwrap(), g);
        })
        .unwrap();
    }
    // Order 7 sampled by stride to keep the suite quick.
    let mut count = 0u32;
    for_each_connected_graph(7, |g| {
        count += 1;
        if count.is_multiple_of(97) {
            let enc = csz_core::graph6::to_graph6(g);
            assert_eq!(&from_graph6(&enc).unwrap(), g);
        }
    })
    .unwrap();
}
