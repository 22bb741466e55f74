// SPDX-License-Identifier: Apache-2.0

// Conversion and composition timings, same table as `gibbs bench`.
//
// $ cargo run --release --example bench -- 1000000

use gibbs::cli::bench;

fn main() {
    let iters = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200_000);
    println!("{}", bench::HEADER);
    for row in bench::run(iters, 0) {
        println!("{}", row.csv());
    }
}
