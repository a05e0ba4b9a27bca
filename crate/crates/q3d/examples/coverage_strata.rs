//! Inner-core coverage by queen position type: corner, edge, face, interior.
//!
//! Usage: cargo run --example coverage_strata [n]

use q3d::{classify, kappa_exact, kappa_formula, strata_summary, BoardSpec, Cell, KappaValue};

fn main() {
    let n: usize = std::env::args().nth(1).map(|a| a.parse().expect("side length")).unwrap_or(5);
    let spec = BoardSpec::cube(n).expect("valid board");
    let m = n - 2;

    println!("inner core of the {n}^3 board: m = {m}, {} cells", m * m * m);

    // one representative cell per position type
    let mid = (n as i32 - 1) / 2;
    for q in [Cell::at3(0, 0, 0), Cell::at3(0, 0, mid), Cell::at3(0, mid, mid), Cell::at3(mid, mid, mid)] {
        let report = kappa_exact(&spec, q).expect("n >= 4");
        let formula = match kappa_formula(&spec, q).expect("n >= 4") {
            KappaValue::Exact(v) => format!("closed form {v}"),
            KappaValue::InteriorBound { upper, exact } => format!("bound <= {upper}, exact {exact}"),
        };
        println!(
            "  {} at {q}: kappa = {:>3}   ({formula})",
            classify(&spec, q),
            report.kappa
        );
    }

    let summary = strata_summary(&spec).expect("n >= 4");
    println!("\nmaxima over the whole board:");
    for stratum in &summary.strata {
        println!(
            "  {:<8} max kappa {:>4} attained by {} cell(s), e.g. {}",
            stratum.ptype,
            stratum.max_kappa,
            stratum.argmax.len(),
            stratum.argmax[0]
        );
    }
    let [c, e, f, i] = summary.maxima();
    println!("\nseparation chain: {c} < {e} <= {f} < {i}");
    println!("boundary queens always cover strictly fewer core cells than the best interior queen.");
}
