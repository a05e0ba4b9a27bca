//! Board geometry: canonical directions, queen lines, neighbourhood sizes.
//!
//! Usage: cargo run --example board_geometry [n]

use q3d::{
    board::build_adjacency, canonical_directions, closed_neighbourhood, line_through, BoardSpec,
    Cell,
};

fn main() {
    let n: usize = std::env::args().nth(1).map(|a| a.parse().expect("side length")).unwrap_or(5);
    let spec = BoardSpec::cube(n).expect("valid board");

    let dirs = canonical_directions(&spec);
    println!("the {}^3 board has {} canonical line directions:", n, dirs.len());
    for d in &dirs {
        let kind = match d.support() {
            1 => "axis",
            2 => "face diagonal",
            _ => "space diagonal",
        };
        println!("  {d:<10} {kind}");
    }

    let corner = Cell::at3(0, 0, 0);
    let diag = dirs.iter().find(|d| d.delta() == [1, 1, 1]).expect("space diagonal");
    let line = line_through(&spec, corner, *diag).expect("canonical direction");
    println!("\nqueen line through {corner} along {diag}:");
    for cell in &line {
        println!("  {cell}");
    }

    println!("\nclosed neighbourhood sizes (bound is 13n-12 = {}):", 13 * n - 12);
    let mid = (n as i32 - 1) / 2;
    for cell in [corner, Cell::at3(0, 0, mid), Cell::at3(mid, mid, mid)] {
        let size = closed_neighbourhood(&spec, cell).len();
        println!("  |N[{cell}]| = {size}");
    }

    let adj = build_adjacency(&spec).expect("board under the memory cap");
    println!("\nfull adjacency built: {} rows, max |N[v]| = {}", spec.cell_count(), adj.max_closed_neighbourhood());
}
