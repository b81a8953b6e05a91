//! Ad-hoc timing probe for the expensive paths (not shipped as a test).

use std::time::Instant;

use cfgeo::coloring::Mode;
use cfgeo::generators::{gen_dk, gen_gn};
use cfgeo::reduction::Formula1in3;
use cfgeo::solver::{solve_cf_k, SolveOutcome};

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "g3".into());
    match which.as_str() {
        "g3" => {
            let g3 = gen_gn(3).unwrap().graph;
            let t = Instant::now();
            let out = solve_cf_k(&g3, 2, Mode::Closed, Some(1_000_000_000));
            println!(
                "g3 k=2: {:?} in {:?}",
                matches!(out, SolveOutcome::Infeasible),
                t.elapsed()
            );
            let t = Instant::now();
            let out = solve_cf_k(&g3, 3, Mode::Closed, Some(1_000_000_000));
            println!(
                "g3 k=3: {:?} in {:?}",
                matches!(out, SolveOutcome::Colorable(_)),
                t.elapsed()
            );
        }
        "d3" => {
            let d3 = gen_dk(3).unwrap().graph;
            let t = Instant::now();
            let out = solve_cf_k(&d3, 2, Mode::Closed, Some(50_000_000));
            println!("d3 k=2: {:?} in {:?}", out_label(&out), t.elapsed());
            let t = Instant::now();
            let out = solve_cf_k(&d3, 3, Mode::Closed, Some(50_000_000));
            println!("d3 k=3: {:?} in {:?}", out_label(&out), t.elapsed());
        }
        "g8" => {
            let t = Instant::now();
            let g8 = gen_gn(8).unwrap();
            println!(
                "g8: n = {}, m = {} in {:?}",
                g8.graph.n(),
                g8.graph.edge_count(),
                t.elapsed()
            );
        }
        "census" => {
            let t = Instant::now();
            let table = cfgeo::census::census(7).unwrap();
            println!("census(7) = {table:?} in {:?}", t.elapsed());
        }
        "unsat" => {
            let phi =
                Formula1in3::new(4, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
            let g = cfgeo::reduction::gen_reduction(&phi).unwrap().graph;
            println!("G(phi): n = {}", g.n());
            let t = Instant::now();
            let res = cfgeo::solver::is_cf_1_colorable(&g);
            println!(
                "unsat 1-colorable: {:?} in {:?}",
                res.is_some(),
                t.elapsed()
            );
        }
        other => eprintln!("unknown probe {other}"),
    }
}

fn out_label(out: &SolveOutcome) -> &'static str {
    match out {
        SolveOutcome::Colorable(_) => "colorable",
        SolveOutcome::Infeasible => "infeasible",
        SolveOutcome::OutOfBudget => "out-of-budget",
    }
}
