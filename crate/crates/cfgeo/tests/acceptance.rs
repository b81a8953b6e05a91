//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Run with `cargo test -p cfgeo --test acceptance -- --nocapture`.

mod common;

use num_traits::Signed;

use cfgeo::census::census;
use cfgeo::chains::{chain_coloring_is_conflict_free, chain_min_colors, chain_oracle};
use cfgeo::coloring::{verify_cf, Mode};
use cfgeo::generators::{
    bull_graph, bull_interval_instance, c4_graph, gen_dk, gen_gn, gn_vertex_gadgets, path_graph,
    random_instance,
};
use cfgeo::geometry::{build_intersection_graph, rational, rational_int, Rational, ShapeKind};
use cfgeo::graph::Graph;
use cfgeo::recurrences::{
    gbar_closed_form, gbar_recurrence, gen_dk_size, recurrence_dk_one_copy, recurrence_gn, to_usize,
};
use cfgeo::reduction::{gen_reduction, verify_gadget_properties, Formula1in3};
use cfgeo::rng::SplitMix64;
use cfgeo::solver::{
    brute_force_cf_k, brute_force_for_each_valid, cf_chromatic_number, is_cf_k_colorable,
    solve_cf_k, SolveOutcome,
};
use cfgeo::strips::{
    color_intervals, color_unit_disks_run, color_unit_squares_run, greedy_strip_coloring,
};

use common::{induced_subgraph, random_graph};

fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn chi(g: &Graph) -> usize {
    cf_chromatic_number(g, Mode::Closed)
        .expect("closed mode always has a chromatic number")
        .0
}

#[test]
fn acceptance_01_named_chromatic_numbers() {
    assert_eq!(chi(&bull_graph()), 2);
    assert_eq!(chi(&c4_graph()), 2);
    assert_eq!(chi(&path_graph(3)), 1);
    for n in 1..=8 {
        assert_eq!(chi(&complete_graph(n)), 1, "K_{n}");
    }
    println!("acceptance 01 named-chromatic-numbers: PASS");
}

#[test]
fn acceptance_02_strip_theorem_height_sqrt3() {
    let mut rng = SplitMix64::new(0x5712);
    let height = rational(17, 10); // 17/10 < sqrt(3)
    let mut instances = 0usize;
    while instances < 1000 {
        let n = rng.next_below(201) as usize;
        let width = rational_int(rng.next_range(1, 60) as i64);
        let inst = random_instance(ShapeKind::UnitDisk, n, &width, &height, rng.next_u64());
        let (coloring, trace) =
            greedy_strip_coloring(&inst, (1, 2)).expect("height bound holds by construction");

        let g = build_intersection_graph(&inst);
        assert!(verify_cf(&g, &coloring, Mode::Closed).unwrap().valid);
        assert!(coloring.max_color_used() <= 2);
        for (i, &color) in trace.colors.iter().enumerate() {
            assert_eq!(color, if i % 2 == 0 { 1 } else { 2 }, "strict alternation");
        }
        for pair in trace.order.windows(2) {
            let xa = &inst.object(pair[0]).shape.center().unwrap().x;
            let xb = &inst.object(pair[1]).shape.center().unwrap().x;
            assert!(
                xb - xa > rational_int(1),
                "consecutive colored points must be more than 1 apart horizontally"
            );
        }
        instances += 1;
    }
    println!("acceptance 02 strip-theorem-height-sqrt3: PASS ({instances} instances)");
}

#[test]
fn acceptance_03_six_color_corollary() {
    let mut rng = SplitMix64::new(0x6c07);
    let mut instances = 0usize;
    while instances < 500 {
        let n = rng.next_below(301) as usize;
        let width = rational_int(rng.next_range(1, 60) as i64);
        let height = rational_int(rng.next_range(1, 12) as i64);
        let inst = random_instance(ShapeKind::UnitDisk, n, &width, &height, rng.next_u64());
        let run = color_unit_disks_run(&inst).expect("six-coloring always applies");

        let g = build_intersection_graph(&inst);
        assert!(verify_cf(&g, &run.coloring, Mode::Closed).unwrap().valid);
        assert!(run.coloring.max_color_used() <= 6);
        let strip_of = &run.decomposition.strip_of;
        for (v, &strip) in strip_of.iter().enumerate() {
            if let Some(c) = run.coloring.color(v) {
                let t = strip.rem_euclid(3) as usize;
                assert!(
                    c == 2 * t + 1 || c == 2 * t + 2,
                    "color {c} outside the palette of strip {strip}"
                );
            }
        }
        for (u, v) in g.edges() {
            assert!(
                (strip_of[u] - strip_of[v]).abs() < 3,
                "no edge may span three strips"
            );
        }
        instances += 1;
    }
    println!("acceptance 03 six-color-corollary: PASS ({instances} instances)");
}

#[test]
fn acceptance_04_four_color_corollary_squares() {
    let mut rng = SplitMix64::new(0x4c07);
    let mut instances = 0usize;
    while instances < 1000 {
        let n = rng.next_below(301) as usize;
        let width = rational_int(rng.next_range(1, 60) as i64);
        let height = rational_int(rng.next_range(1, 12) as i64);
        let inst = random_instance(ShapeKind::UnitSquare, n, &width, &height, rng.next_u64());
        let run = color_unit_squares_run(&inst).expect("four-coloring always applies");

        let g = build_intersection_graph(&inst);
        assert!(verify_cf(&g, &run.coloring, Mode::Closed).unwrap().valid);
        assert!(run.coloring.max_color_used() <= 4);
        let strip_of = &run.decomposition.strip_of;
        for (v, &strip) in strip_of.iter().enumerate() {
            if let Some(c) = run.coloring.color(v) {
                let t = strip.rem_euclid(2) as usize;
                assert!(c == 2 * t + 1 || c == 2 * t + 2);
            }
        }
        for (u, v) in g.edges() {
            assert!(
                (strip_of[u] - strip_of[v]).abs() < 2,
                "no edge may span two strips"
            );
        }
        instances += 1;
    }
    println!("acceptance 04 four-color-corollary-squares: PASS ({instances} instances)");
}

#[test]
fn acceptance_05_interval_tightness() {
    let mut rng = SplitMix64::new(0x1e7a);
    let mut instances = 0usize;
    while instances < 1000 {
        let n = rng.next_below(151) as usize;
        let width = rational_int(rng.next_range(1, 40) as i64);
        let max_len = rational_int(rng.next_range(1, 8) as i64);
        let inst = random_instance(ShapeKind::Interval, n, &width, &max_len, rng.next_u64());
        let coloring = color_intervals(&inst).expect("interval greedy always applies");
        let g = build_intersection_graph(&inst);
        assert!(verify_cf(&g, &coloring, Mode::Closed).unwrap().valid);
        assert!(coloring.max_color_used() <= 2);
        instances += 1;
    }
    // Tightness: the Bull realization needs two colors, and the greedy
    // attains two.
    let bull = bull_interval_instance();
    let g = build_intersection_graph(&bull);
    assert_eq!(chi(&g), 2, "lower bound");
    let coloring = color_intervals(&bull).unwrap();
    assert!(coloring.max_color_used() <= 2, "upper bound");
    println!("acceptance 05 interval-tightness: PASS ({instances} instances)");
}

#[test]
fn acceptance_06_chain_lower_bound() {
    for m in 1..=8 {
        assert_eq!(
            chain_min_colors(m).0,
            chain_oracle(m).unwrap(),
            "chain length {m}"
        );
    }
    assert_eq!(chain_min_colors(4).0, 3);
    for m in 1..=64 {
        let (_, witness) = chain_min_colors(m);
        assert!(
            chain_coloring_is_conflict_free(&witness),
            "ruler at m = {m}"
        );
    }
    println!("acceptance 06 chain-lower-bound: PASS");
}

#[test]
fn acceptance_07_gn_family() {
    for n in 1..=8 {
        let gg = gen_gn(n).unwrap();
        assert_eq!(gg.graph.n(), to_usize(&recurrence_gn(n)), "|G_{n}|");
        drop(gg);
    }

    let g2 = gen_gn(2).unwrap().graph;
    assert_eq!(chi(&g2), 2);

    let g3 = gen_gn(3).unwrap().graph;
    let witness = is_cf_k_colorable(&g3, 3, Mode::Closed).expect("G_3 is 3-colorable");
    assert!(verify_cf(&g3, &witness, Mode::Closed).unwrap().valid);

    match solve_cf_k(&g3, 2, Mode::Closed, Some(1_000_000_000)) {
        SolveOutcome::Infeasible => {
            println!("acceptance 07 gn-family: PASS (2-infeasibility proven outright)");
        }
        SolveOutcome::OutOfBudget => {
            // Sanctioned fallback: a valid 3-coloring exists (above) and the
            // brute-force oracle confirms that no conflict-free 2-coloring of
            // any clique-vertex subgadget leaves its clique vertex uncolored.
            for (v, [copy1, copy2]) in gn_vertex_gadgets(3) {
                let mut vertices = vec![v];
                vertices.extend(copy1);
                vertices.extend(copy2);
                let sub = induced_subgraph(&g3, &vertices);
                let mut clique_vertex_always_colored = true;
                brute_force_for_each_valid(&sub, 2, Mode::Closed, |c| {
                    if c.color(0).is_none() {
                        clique_vertex_always_colored = false;
                        return false;
                    }
                    true
                });
                assert!(clique_vertex_always_colored, "subgadget of base vertex {v}");
            }
            println!("acceptance 07 gn-family: PASS (budget fallback via subgadget oracle)");
        }
        SolveOutcome::Colorable(w) => {
            panic!("G_3 must not be conflict-free 2-colorable, got witness {w:?}");
        }
    }
}

#[test]
fn acceptance_08_dk_family() {
    let d2 = gen_dk(2).unwrap().graph;
    assert_eq!(chi(&d2), 2);

    for k in 1..=4 {
        let gg = gen_dk(k).unwrap();
        assert_eq!(
            gg.graph.n(),
            to_usize(&gen_dk_size(k)),
            "|D_{k}| (two copies)"
        );
    }

    // The displayed size recurrence counts one copy per interval: 1, 5, 54, ...
    assert_eq!(to_usize(&recurrence_dk_one_copy(1)), 1);
    assert_eq!(to_usize(&recurrence_dk_one_copy(2)), 5);
    assert_eq!(to_usize(&recurrence_dk_one_copy(3)), 54);
    assert_eq!(to_usize(&recurrence_dk_one_copy(4)), 1952);

    // Documented discrepancy: the generated graphs place two copies per
    // interval, so their sizes exceed the one-copy recurrence for k >= 2.
    assert_eq!(
        to_usize(&gen_dk_size(1)),
        to_usize(&recurrence_dk_one_copy(1))
    );
    for k in 2..=4 {
        assert!(
            gen_dk_size(k) > recurrence_dk_one_copy(k),
            "two-copy construction is strictly larger at k = {k}"
        );
    }
    println!("acceptance 08 dk-family: PASS");
}

#[test]
fn acceptance_09_gbar_closed_form() {
    assert_eq!(gbar_closed_form(1), rational_int(1));
    assert_eq!(gbar_closed_form(2), rational_int(4));
    for n in 1..=15 {
        let closed = gbar_closed_form(n);
        let recurrence = Rational::from_integer(
            gbar_recurrence(n)
                .to_string()
                .parse()
                .expect("biguint parses as bigint"),
        );
        // The criterion asks for relative error 1e-6; exact arithmetic gives
        // equality outright.
        let diff = (&closed - &recurrence).abs();
        assert!(diff <= recurrence.abs() * rational(1, 1_000_000), "n = {n}");
        assert_eq!(closed, recurrence, "n = {n}");
        assert!(
            gbar_recurrence(n) >= recurrence_gn(n),
            "majorant at n = {n}"
        );
    }
    println!("acceptance 09 gbar-closed-form: PASS");
}

fn reduction_corpus() -> Vec<Formula1in3> {
    let mut corpus = Vec::new();
    for vars in 3..=5usize {
        let mut triples = Vec::new();
        for a in 0..vars {
            for b in (a + 1)..vars {
                for c in (b + 1)..vars {
                    triples.push([a, b, c]);
                }
            }
        }
        let covers =
            |clauses: &[[usize; 3]]| (0..vars).all(|v| clauses.iter().any(|t| t.contains(&v)));
        for (i, &t) in triples.iter().enumerate() {
            if covers(&[t]) {
                corpus.push(Formula1in3::new(vars, vec![t]).unwrap());
            }
            for &u in &triples[i + 1..] {
                if covers(&[t, u]) {
                    corpus.push(Formula1in3::new(vars, vec![t, u]).unwrap());
                }
            }
        }
    }
    corpus.push(Formula1in3::new(4, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap());
    corpus
}

#[test]
fn acceptance_10_reduction_equivalence() {
    let corpus = reduction_corpus();
    // 1 formula on 3 vars, 6 on 4 vars, 15 on 5 vars, plus the unsat one.
    assert_eq!(corpus.len(), 23);
    let mut sat = 0usize;
    let mut unsat = 0usize;
    for phi in &corpus {
        let gadget = gen_reduction(phi).expect("corpus formulas are well-formed");
        let colorable = cfgeo::solver::is_cf_1_colorable(&gadget.graph).is_some();
        let satisfiable = phi.is_satisfiable();
        assert_eq!(colorable, satisfiable, "equivalence failed for {phi:?}");
        if satisfiable {
            sat += 1;
        } else {
            unsat += 1;
        }
    }
    assert!(unsat >= 1, "the 4-clause instance is unsatisfiable");

    // Gadget structure on every single-clause formula in the corpus.
    for phi in corpus.iter().filter(|p| p.clauses().len() == 1) {
        let flags = verify_gadget_properties(phi).unwrap();
        assert!(flags.clause_uncolored && flags.every_third, "{phi:?}");
    }
    println!("acceptance 10 reduction-equivalence: PASS ({sat} sat, {unsat} unsat)");
}

#[test]
fn acceptance_11_census() {
    let table = census(7).unwrap();
    let overall = table.values().copied().max().unwrap();
    assert_eq!(overall, 2, "max chi_cf over all graphs on <= 7 vertices");
    assert_eq!(table[&4], 2, "C_4 attains two colors at n = 4");
    for n in 1..=3 {
        assert_eq!(table[&n], 1, "one color suffices up to 3 vertices");
    }
    println!("acceptance 11 census: PASS ({table:?})");
}

#[test]
fn acceptance_12_solver_cross_validation() {
    let mut rng = SplitMix64::new(0xc05);
    let mut checked = 0usize;
    while checked < 200 {
        let n = rng.next_below(10) as usize;
        let percent = rng.next_range(10, 90);
        let g = random_graph(n, percent, &mut rng);
        for k in 1..=3 {
            for mode in [Mode::Closed, Mode::Open] {
                let pruned = is_cf_k_colorable(&g, k, mode);
                let brute = brute_force_cf_k(&g, k, mode);
                assert_eq!(
                    pruned.is_some(),
                    brute.is_some(),
                    "decision mismatch: n = {n}, k = {k}, mode = {mode:?}"
                );
                if let Some(w) = &pruned {
                    assert!(verify_cf(&g, w, mode).unwrap().valid);
                }
                if let Some(w) = &brute {
                    assert!(verify_cf(&g, w, mode).unwrap().valid);
                }
            }
        }
        checked += 1;
    }
    println!("acceptance 12 solver-cross-validation: PASS ({checked} graphs)");
}
