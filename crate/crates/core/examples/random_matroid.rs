//! Draws seeded random matroids with the level-by-level construction and
//! prints their text form, class and Whitney numbers.
//!
//! cargo run --example random_matroid -- 7 42

use matroid_census::erection::{knuth_random_matroid, RandomPolicy};
use matroid_census::matroid::write_matroid;

fn main() -> matroid_census::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(42);

    let policy = RandomPolicy::geometric(seed);
    let m = knuth_random_matroid(n, &policy)?;
    println!("# seed={seed} policy={}", policy.descriptor());
    print!("{}", write_matroid(&m));

    let class = m.classify();
    println!(
        "\nloopless={} simple={} paving={} uniform={}",
        class.loopless, class.simple, class.paving, class.uniform
    );
    let whitney: Vec<String> = (0..=m.rank()).map(|k| m.whitney(k).to_string()).collect();
    println!("Whitney numbers W_0..W_{}: {}", m.rank(), whitney.join(" "));

    // The same seed always gives the same matroid.
    assert_eq!(knuth_random_matroid(n, &policy)?, m);
    Ok(())
}
