//! The order-48 cube symmetry group: orbits, canonical placements, and the
//! fundamental domain.
//!
//! Usage: cargo run --example symmetry_orbits [n]

use q3d::{
    all_elements, canonical_placement, cell_orbit, in_fundamental_domain, BoardSpec, Cell,
    FundamentalDomain, Placement,
};

fn main() {
    let n: usize = std::env::args().nth(1).map(|a| a.parse().expect("side length")).unwrap_or(5);
    let spec = BoardSpec::cube(n).expect("valid board");

    println!("group elements: {}", all_elements().len());

    let domain = FundamentalDomain::new(n);
    println!("fundamental domain F({n}) = {{0 <= x <= y <= z <= {}}}:", (n - 1) / 2);
    for cell in domain.cells() {
        println!("  {cell}");
    }

    println!("\norbit sizes (each divides 48):");
    for cell in [Cell::at3(0, 0, 0), Cell::at3(0, 0, 1), Cell::at3(0, 1, 2)] {
        let orbit = cell_orbit(&spec, cell);
        let in_domain = orbit.iter().filter(|&&c| in_fundamental_domain(&spec, c)).count();
        println!("  |orbit({cell})| = {:>2}, {} member(s) in F({n})", orbit.len(), in_domain);
    }

    // canonicalization picks the lexicographically smallest group image, so
    // any two symmetric placements collapse to the same representative
    let placement = Placement::from_cells(
        &spec,
        vec![Cell::at3(n as i32 - 1, n as i32 - 1, n as i32 - 1), Cell::at3(0, n as i32 - 1, 0)],
    )
    .expect("on board");
    let canon = canonical_placement(&spec, &placement).expect("nonempty");
    println!("\nplacement     : {placement}");
    println!("canonical form: {canon}");
    println!(
        "first queen {} lies in F({n}): {}",
        canon.first().expect("nonempty"),
        in_fundamental_domain(&spec, canon.first().expect("nonempty"))
    );
}
